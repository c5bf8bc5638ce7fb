//! Permutations of the labels `1..=n`.
//!
//! A [`Perm`] stores the image of every label. Products apply the rightmost
//! factor first: `p.compose(&q)` maps `x` to `p(q(x))`, and `&p * &q` is the
//! same product.
//!
//! Cycle notation is the usual parenthesised form, e.g. `(1 4)(2 7 3 6)(5)`.
//! Labels missing from the text are fixed points. Formatting always lists
//! every label, with each cycle starting at its smallest member.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::Label;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    // images[k] is the image of label k + 1, itself 1-based.
    images: Vec<Label>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        assert!(n >= 1, "permutation degree must be positive");
        Perm { images: (1..=n).collect() }
    }

    /// Builds a permutation from the image list `[p(1), p(2), ..., p(n)]`.
    pub fn from_images(images: Vec<Label>) -> Result<Perm> {
        let n = images.len();
        if n == 0 {
            return Err(Error::MalformedSyntax("empty image list".into()));
        }
        let mut seen = vec![false; n];
        for &y in &images {
            if y == 0 || y > n {
                return Err(Error::LabelOutOfRange { label: y, n });
            }
            if std::mem::replace(&mut seen[y - 1], true) {
                return Err(Error::DuplicateLabel(y));
            }
        }
        Ok(Perm { images })
    }

    // Callers guarantee bijectivity.
    pub(crate) fn from_images_unchecked(images: Vec<Label>) -> Perm {
        debug_assert!(Perm::from_images(images.clone()).is_ok());
        Perm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of label `x`.
    #[inline]
    pub fn apply(&self, x: Label) -> Label {
        self.images[x - 1]
    }

    pub fn images(&self) -> &[Label] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &y)| y == k + 1)
    }

    /// `self ∘ other`: applies `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(Perm { images: other.images.iter().map(|&y| self.apply(y)).collect() })
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.degree()];
        for (k, &y) in self.images.iter().enumerate() {
            images[y - 1] = k + 1;
        }
        Perm { images }
    }

    /// Parses cycle notation over labels `1..=n`.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Perm> {
        if n == 0 {
            return Err(Error::MalformedSyntax("degree must be positive".into()));
        }
        let mut images: Vec<Label> = (1..=n).collect();
        let mut seen = vec![false; n];
        let mut rest = text.trim_start();
        while !rest.is_empty() {
            let body =
                rest.strip_prefix('(').ok_or_else(|| Error::MalformedSyntax(format!("expected '(' at {rest:?}")))?;
            let close = body.find(')').ok_or_else(|| Error::MalformedSyntax("unclosed cycle".into()))?;
            let inner = &body[..close];
            if inner.contains('(') {
                return Err(Error::MalformedSyntax("nested '('".into()));
            }
            let mut cycle = Vec::new();
            for tok in inner.split_whitespace() {
                let label: Label = tok.parse().map_err(|_| Error::MalformedSyntax(format!("bad label {tok:?}")))?;
                if label == 0 || label > n {
                    return Err(Error::LabelOutOfRange { label, n });
                }
                if std::mem::replace(&mut seen[label - 1], true) {
                    return Err(Error::DuplicateLabel(label));
                }
                cycle.push(label);
            }
            if cycle.is_empty() {
                return Err(Error::MalformedSyntax("empty cycle".into()));
            }
            for (k, &x) in cycle.iter().enumerate() {
                images[x - 1] = cycle[(k + 1) % cycle.len()];
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Perm { images })
    }

    /// Disjoint cycles, fixed points included, each starting at its smallest
    /// member and ordered by that member.
    pub fn cycles(&self) -> Vec<Vec<Label>> {
        let n = self.degree();
        let mut done = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if done[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            done[start - 1] = true;
            let mut x = self.apply(start);
            while x != start {
                done[x - 1] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn format_cycles(&self) -> String {
        let mut s = String::new();
        for cycle in self.cycles() {
            s.push('(');
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    s.push(' ');
                }
                s.push_str(&x.to_string());
            }
            s.push(')');
        }
        s
    }

    /// Supports of the cycles as sorted blocks, ordered by smallest member.
    pub fn orbit_partition(&self) -> Vec<Vec<Label>> {
        self.cycles()
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect()
    }

    /// Whether `self` maps the label set `block` onto itself.
    pub fn preserves(&self, block: &[Label]) -> bool {
        let mut inside = vec![false; self.degree()];
        for &x in block {
            inside[x - 1] = true;
        }
        block.iter().all(|&x| inside[self.apply(x) - 1])
    }
}

impl Mul for &Perm {
    type Output = Perm;

    /// Panics when the degrees differ; use [`Perm::compose`] for a checked
    /// product.
    fn mul(self, rhs: &Perm) -> Perm {
        self.compose(rhs).expect("product of permutations of different degree")
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_cycles())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{}", self.format_cycles())
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// Parses cycle notation whose degree is the largest label mentioned.
    fn from_str(s: &str) -> Result<Perm> {
        let n =
            s.split(|c: char| !c.is_ascii_digit()).filter_map(|t| t.parse::<usize>().ok()).max().unwrap_or(1).max(1);
        Perm::parse_cycles(s, n)
    }
}
