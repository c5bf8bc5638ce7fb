//! Cayley tables of finite quasigroups and loops.
//!
//! A [`Table`] is always a Latin square over the labels `1..=n`; the
//! constructor refuses anything else. A [`Loop`] additionally carries its
//! identity element, which need not be label 1.
//!
//! The text format is `n` lines of `n` space separated labels. Lines starting
//! with `#` are comments on input and are never written.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, LineKind, Result};
use crate::perm::Perm;
use crate::Label;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Table {
    order: usize,
    // row-major, cells[(x-1)*n + (y-1)] = x·y
    cells: Vec<Label>,
}

impl Table {
    /// Validates a row-major grid of labels.
    pub fn new(order: usize, cells: Vec<Label>) -> Result<Table> {
        if order == 0 {
            return Err(Error::NotSquare("empty table".into()));
        }
        if cells.len() != order * order {
            return Err(Error::NotSquare(format!("{} cells cannot form a {order}x{order} table", cells.len())));
        }
        if let Some(&label) = cells.iter().find(|&&c| c == 0 || c > order) {
            return Err(Error::LabelOutOfRange { label, n: order });
        }
        let t = Table { order, cells };
        t.check_latin()?;
        Ok(t)
    }

    pub fn from_rows(rows: &[Vec<Label>]) -> Result<Table> {
        let n = rows.len();
        if let Some((k, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::NotSquare(format!("row {} has {} entries, expected {n}", k + 1, r.len())));
        }
        Table::new(n, rows.concat())
    }

    // Callers guarantee the Latin property.
    pub(crate) fn from_cells_unchecked(order: usize, cells: Vec<Label>) -> Table {
        let t = Table { order, cells };
        debug_assert!(t.check_latin().is_ok());
        t
    }

    /// Builds the table `(x, y) ↦ op(x, y)` and validates it.
    pub fn from_fn(order: usize, mut op: impl FnMut(Label, Label) -> Label) -> Result<Table> {
        let mut cells = Vec::with_capacity(order * order);
        for x in 1..=order {
            for y in 1..=order {
                cells.push(op(x, y));
            }
        }
        Table::new(order, cells)
    }

    fn check_latin(&self) -> Result<()> {
        let n = self.order;
        for x in 1..=n {
            let mut seen = vec![false; n];
            for y in 1..=n {
                let z = self.cell(x, y);
                if std::mem::replace(&mut seen[z - 1], true) {
                    return Err(Error::NotLatin { line: LineKind::Row, index: x, label: z });
                }
            }
        }
        for y in 1..=n {
            let mut seen = vec![false; n];
            for x in 1..=n {
                let z = self.cell(x, y);
                if std::mem::replace(&mut seen[z - 1], true) {
                    return Err(Error::NotLatin { line: LineKind::Column, index: y, label: z });
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `x · y`.
    #[inline]
    pub fn cell(&self, x: Label, y: Label) -> Label {
        self.cells[(x - 1) * self.order + (y - 1)]
    }

    pub fn row(&self, x: Label) -> &[Label] {
        &self.cells[(x - 1) * self.order..x * self.order]
    }

    pub fn cells(&self) -> &[Label] {
        &self.cells
    }

    /// The label whose row and column both read `1, 2, ..., n`.
    pub fn find_identity(&self) -> Option<Label> {
        let n = self.order;
        (1..=n).find(|&e| (1..=n).all(|x| self.cell(e, x) == x && self.cell(x, e) == x))
    }

    /// Left translation `L_a(x) = a·x` and right translation `R_a(x) = x·a`.
    pub fn translations(&self, a: Label) -> (Perm, Perm) {
        (self.left_translation(a), self.right_translation(a))
    }

    pub fn left_translation(&self, a: Label) -> Perm {
        Perm::from_images_unchecked(self.row(a).to_vec())
    }

    pub fn right_translation(&self, a: Label) -> Perm {
        Perm::from_images_unchecked((1..=self.order).map(|x| self.cell(x, a)).collect())
    }

    /// Isomorphic copy under `h`: the result satisfies
    /// `h(x)·h(y) = h(x·y)`.
    pub fn relabel(&self, h: &Perm) -> Result<Table> {
        if h.degree() != self.order {
            return Err(Error::DegreeMismatch { left: self.order, right: h.degree() });
        }
        let n = self.order;
        let mut cells = vec![0; n * n];
        for x in 1..=n {
            for y in 1..=n {
                cells[(h.apply(x) - 1) * n + h.apply(y) - 1] = h.apply(self.cell(x, y));
            }
        }
        Ok(Table::from_cells_unchecked(n, cells))
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order;
        (1..=n).all(|x| {
            (1..=n).all(|y| {
                let xy = self.cell(x, y);
                (1..=n).all(|z| self.cell(xy, z) == self.cell(x, self.cell(y, z)))
            })
        })
    }

    pub fn transpose(&self) -> Table {
        let n = self.order;
        Table::from_cells_unchecked(
            n,
            (1..=n).flat_map(|x| (1..=n).map(move |y| (x, y))).map(|(x, y)| self.cell(y, x)).collect(),
        )
    }

    /// The bit-exact file representation.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(self.order * self.order * 3);
        for x in 1..=self.order {
            for (k, z) in self.row(x).iter().enumerate() {
                if k > 0 {
                    s.push(' ');
                }
                s.push_str(&z.to_string());
            }
            s.push('\n');
        }
        s
    }

    /// Reads the table file format.
    pub fn parse(text: &str) -> Result<Table> {
        let mut rows: Vec<Vec<Label>> = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|tok| tok.parse::<Label>().map_err(|_| Error::NotSquare(format!("not a label: {tok:?}"))))
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        let n = rows.first().map(Vec::len).unwrap_or(0);
        if n == 0 {
            return Err(Error::NotSquare("no data lines".into()));
        }
        if rows.len() != n {
            return Err(Error::NotSquare(format!("{} data lines, expected {n}", rows.len())));
        }
        Table::from_rows(&rows)
    }

    /// The table as a loop, if it has an identity.
    pub fn to_loop(&self) -> Option<Loop> {
        self.find_identity().map(|identity| Loop { table: self.clone(), identity })
    }
}

impl FromStr for Table {
    type Err = Error;

    fn from_str(s: &str) -> Result<Table> {
        Table::parse(s)
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Table({})", self.order)?;
        f.write_str(&self.to_text())
    }
}

/// A quasigroup with a two-sided identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Loop {
    table: Table,
    identity: Label,
}

/// Left and right loop-inverses of one element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InversePair {
    pub left: Label,
    pub right: Label,
}

/// Which one-sided inverse the antiautomorphic identity is stated with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
}

impl Loop {
    pub fn new(table: Table) -> Result<Loop> {
        table.to_loop().ok_or(Error::NotLoop)
    }

    pub fn parse(text: &str) -> Result<Loop> {
        Loop::new(Table::parse(text)?)
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn into_table(self) -> Table {
        self.table
    }

    pub fn identity(&self) -> Label {
        self.identity
    }

    pub fn order(&self) -> usize {
        self.table.order
    }

    #[inline]
    pub fn cell(&self, x: Label, y: Label) -> Label {
        self.table.cell(x, y)
    }

    /// The unique pair with `left·a = e = a·right`.
    pub fn inverses(&self, a: Label) -> InversePair {
        let n = self.order();
        let e = self.identity;
        let left = (1..=n).find(|&x| self.cell(x, a) == e).expect("Latin column");
        let right = (1..=n).find(|&y| self.cell(a, y) == e).expect("Latin row");
        InversePair { left, right }
    }

    pub fn right_inverse(&self, a: Label) -> Label {
        self.table.row(a).iter().position(|&z| z == self.identity).expect("Latin row") + 1
    }

    pub fn left_inverse(&self, a: Label) -> Label {
        (1..=self.order()).find(|&x| self.cell(x, a) == self.identity).expect("Latin column")
    }

    /// `x ↦ x` right inverse, as a vector indexed by `label - 1`.
    pub(crate) fn right_inverse_map(&self) -> Vec<Label> {
        (1..=self.order()).map(|a| self.right_inverse(a)).collect()
    }

    fn left_inverse_map(&self) -> Vec<Label> {
        (1..=self.order()).map(|a| self.left_inverse(a)).collect()
    }

    /// The element `a'` with `R_a⁻¹ = R_a'` and `L_a⁻¹ = L_a'`, if any.
    pub fn ip_inverse_of(&self, a: Label) -> Option<Label> {
        // R_a' inverts R_a only if a·a' = e, so the right inverse is the only
        // candidate.
        let cand = self.right_inverse(a);
        let (la, ra) = self.table.translations(a);
        let (lc, rc) = self.table.translations(cand);
        (ra.inverse() == rc && la.inverse() == lc).then_some(cand)
    }

    /// The map `a ↦ a'` when every element has an IP-inverse.
    pub fn ip_inverse_map(&self) -> Option<Vec<Label>> {
        (1..=self.order()).map(|a| self.ip_inverse_of(a)).collect()
    }

    /// Inverse property in translation form.
    pub fn is_ip(&self) -> bool {
        self.ip_inverse_map().is_some()
    }

    /// Antiautomorphic inverse property, stated with right inverses
    /// (`(xy)⁻¹ = y⁻¹x⁻¹` for `⁻¹ = _R⁻¹`) or left inverses.
    pub fn is_d(&self, side: Side) -> bool {
        let inv = match side {
            Side::Right => self.right_inverse_map(),
            Side::Left => self.left_inverse_map(),
        };
        let n = self.order();
        (1..=n).all(|x| (1..=n).all(|y| inv[self.cell(x, y) - 1] == self.cell(inv[y - 1], inv[x - 1])))
    }

    pub fn is_group(&self) -> bool {
        self.table.is_associative()
    }
}

impl AsRef<Table> for Loop {
    fn as_ref(&self) -> &Table {
        &self.table
    }
}

impl From<Loop> for Table {
    fn from(l: Loop) -> Table {
        l.table
    }
}

/// Free-function form of [`Table::parse`].
pub fn parse_table(text: &str) -> Result<Table> {
    Table::parse(text)
}

pub fn find_identity(t: &Table) -> Option<Label> {
    t.find_identity()
}

pub fn inverses(l: &Loop, a: Label) -> InversePair {
    l.inverses(a)
}

pub fn translations(t: &Table, a: Label) -> (Perm, Perm) {
    t.translations(a)
}

pub fn is_ip_loop(l: &Loop) -> bool {
    l.is_ip()
}

pub fn is_d_loop(l: &Loop, side: Side) -> bool {
    l.is_d(side)
}

pub fn relabel(t: &Table, h: &Perm) -> Result<Table> {
    t.relabel(h)
}

pub fn is_associative(t: &Table) -> bool {
    t.is_associative()
}
