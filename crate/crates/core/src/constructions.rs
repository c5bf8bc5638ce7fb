//! Building new loops and quasigroups from old ones.
//!
//! * [`d_from_ip`]: from an IP-loop and an element `a` with inverse `a'`,
//!   the loop `x ∘ y = (x·a')·(a·y)`, always a D-loop with the same identity.
//! * [`exchange_tracks`]: when two tracks `φ_i`, `φ_j` both preserve a
//!   partition `{X, Y}` with the identity in `X`, swap their restrictions to
//!   `Y`.
//! * [`parastrophe`]: the five conjugates obtained by permuting the roles of
//!   `x`, `y`, `z` in `x·y = z`.
//! * [`principal_isotope`]: `x ∘ y = R_b⁻¹(x)·L_a⁻¹(y)`, a loop with identity
//!   `a·b`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::table::{Loop, Table};
use crate::tracks::{track_set, TrackSet};
use crate::Label;

fn check_label(a: Label, n: usize) -> Result<()> {
    if a == 0 || a > n {
        return Err(Error::LabelOutOfRange { label: a, n });
    }
    Ok(())
}

/// `x ∘ y = R_a'(x) · L_a(y)` on an IP-loop.
pub fn d_from_ip(l: &Loop, a: Label) -> Result<Loop> {
    let n = l.order();
    check_label(a, n)?;
    let inv = l.ip_inverse_map().ok_or(Error::NotIPLoop)?;
    let a_inv = inv[a - 1];
    let t = Table::from_fn(n, |x, y| l.cell(l.cell(x, a_inv), l.cell(a, y)))?;
    let out = Loop::new(t).expect("identity is preserved");
    debug_assert_eq!(out.identity(), l.identity());
    Ok(out)
}

/// The `a'` with `R_a⁻¹ = R_a'` and `L_a⁻¹ = L_a'`, if it exists.
pub fn element_has_ip_inverse(l: &Loop, a: Label) -> Option<Label> {
    l.ip_inverse_of(a)
}

/// Three conditions on `a` that coincide for IP-loops.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InversePreservation {
    /// `a'` is still the IP-inverse of `a` after [`d_from_ip`].
    pub same_inverse: bool,
    /// `x·a = x∘a` and `a'·x = a'∘x` for all `x`.
    pub eq10: bool,
    /// `L_a L_a = L_{a²}` and `R_a R_a = R_{a²}` in the original loop.
    pub eq11: bool,
}

pub fn inverse_preservation_report(l: &Loop, a: Label) -> Result<InversePreservation> {
    let d = d_from_ip(l, a)?;
    let a_inv = l.ip_inverse_of(a).expect("checked by d_from_ip");
    let n = l.order();
    let same_inverse = d.ip_inverse_of(a) == Some(a_inv);
    let eq10 = (1..=n).all(|x| l.cell(x, a) == d.cell(x, a) && l.cell(a_inv, x) == d.cell(a_inv, x));
    let t = l.table();
    let (la, ra) = t.translations(a);
    let (la2, ra2) = t.translations(l.cell(a, a));
    let eq11 = &la * &la == la2 && &ra * &ra == ra2;
    Ok(InversePreservation { same_inverse, eq10, eq11 })
}

/// A partition `{X, Y}` preserved by the tracks `φ_i` and `φ_j`, with the
/// identity in `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrackSplit {
    pub i: Label,
    pub j: Label,
    pub x: Vec<Label>,
    pub y: Vec<Label>,
}

impl TrackSplit {
    /// Completes `x` to a split for the pair `(i, j)` of `l` and validates it.
    pub fn from_x(l: &Loop, i: Label, j: Label, x: &[Label]) -> Result<TrackSplit> {
        let n = l.order();
        let mut inside = vec![false; n];
        for &v in x {
            check_label(v, n)?;
            if std::mem::replace(&mut inside[v - 1], true) {
                return Err(Error::BadSplit(format!("label {v} repeated in X")));
            }
        }
        let xs: Vec<Label> = (1..=n).filter(|&v| inside[v - 1]).collect();
        let ys: Vec<Label> = (1..=n).filter(|&v| !inside[v - 1]).collect();
        let split = TrackSplit { i, j, x: xs, y: ys };
        split.validate(l)?;
        Ok(split)
    }

    fn validate(&self, l: &Loop) -> Result<()> {
        let n = l.order();
        check_label(self.i, n)?;
        check_label(self.j, n)?;
        let mut count = vec![0u8; n];
        for &v in self.x.iter().chain(&self.y) {
            check_label(v, n)?;
            count[v - 1] += 1;
        }
        if count.iter().any(|&c| c != 1) {
            return Err(Error::BadSplit("X and Y must partition the labels".into()));
        }
        if !self.x.contains(&l.identity()) {
            return Err(Error::BadSplit(format!("identity {} must lie in X", l.identity())));
        }
        if self.y.is_empty() {
            return Err(Error::BadSplit("Y is empty".into()));
        }
        let t = l.table();
        for k in [self.i, self.j] {
            let p = crate::tracks::right_track(t, k);
            if !p.preserves(&self.x) {
                return Err(Error::BadSplit(format!("track {k} does not preserve X")));
            }
        }
        Ok(())
    }
}

/// Connected blocks of the union of the orbit partitions of `p` and `q`,
/// the block containing `first` leading, the rest ordered by least member.
fn joint_blocks(p: &Perm, q: &Perm, first: Label) -> Vec<Vec<Label>> {
    let n = p.degree();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for perm in [p, q] {
        for x in 1..=n {
            let (a, b) = (find(&mut parent, x - 1), find(&mut parent, perm.apply(x) - 1));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut blocks: Vec<Vec<Label>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for x in 1..=n {
        let r = find(&mut parent, x - 1);
        if slot[r] == usize::MAX {
            slot[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[slot[r]].push(x);
    }
    let lead = blocks.iter().position(|b| b.contains(&first)).unwrap();
    let head = blocks.remove(lead);
    blocks.insert(0, head);
    blocks
}

fn pair_blocks(l: &Loop, ts: &TrackSet, i: Label, j: Label) -> Result<Vec<Vec<Label>>> {
    let n = l.order();
    check_label(i, n)?;
    check_label(j, n)?;
    let e = l.identity();
    if i == j || i == e || j == e {
        return Err(Error::NotDecomposable(i, j));
    }
    let blocks = joint_blocks(ts.get(i), ts.get(j), e);
    if blocks.len() < 2 {
        return Err(Error::NotDecomposable(i, j));
    }
    Ok(blocks)
}

/// Unordered pairs `i < j`, both different from the identity, whose tracks
/// are decomposable.
pub fn decomposable_pairs(l: &Loop) -> Vec<(Label, Label)> {
    let ts = track_set(l.table());
    let n = l.order();
    let e = l.identity();
    let mut out = Vec::new();
    for i in (1..=n).filter(|&i| i != e) {
        for j in (i + 1..=n).filter(|&j| j != e) {
            if joint_blocks(ts.get(i), ts.get(j), e).len() >= 2 {
                out.push((i, j));
            }
        }
    }
    out
}

/// Every split for the pair `(i, j)`: with `k` joint blocks there are
/// `2^(k-1) - 1` of them.
pub fn decompose(l: &Loop, i: Label, j: Label) -> Result<Vec<TrackSplit>> {
    let ts = track_set(l.table());
    let blocks = pair_blocks(l, &ts, i, j)?;
    let rest = &blocks[1..];
    let mut splits = Vec::new();
    // bit b set: block rest[b] goes to X
    for mask in 0u64..(1u64 << rest.len()) - 1 {
        let mut x = blocks[0].clone();
        let mut y = Vec::new();
        for (b, block) in rest.iter().enumerate() {
            if mask >> b & 1 == 1 {
                x.extend_from_slice(block);
            } else {
                y.extend_from_slice(block);
            }
        }
        x.sort_unstable();
        y.sort_unstable();
        splits.push(TrackSplit { i, j, x, y });
    }
    Ok(splits)
}

/// Swaps the `Y`-parts of `φ_i` and `φ_j` and rebuilds the loop.
///
/// `split` may be omitted when the pair has exactly one split.
pub fn exchange_tracks(l: &Loop, i: Label, j: Label, split: Option<&TrackSplit>) -> Result<Loop> {
    let ts = track_set(l.table());
    let blocks = pair_blocks(l, &ts, i, j)?;
    let split = match split {
        Some(s) => {
            if (s.i, s.j) != (i, j) && (s.i, s.j) != (j, i) {
                return Err(Error::BadSplit(format!("split belongs to pair ({}, {}), not ({i}, {j})", s.i, s.j)));
            }
            s.validate(l)?;
            s.clone()
        }
        None if blocks.len() == 2 => {
            let mut y = blocks[1].clone();
            y.sort_unstable();
            let mut x = blocks[0].clone();
            x.sort_unstable();
            TrackSplit { i, j, x, y }
        }
        None => {
            return Err(Error::AmbiguousSplit { i, j, splits: (1 << (blocks.len() - 1)) - 1 });
        }
    };
    let n = l.order();
    let mut in_y = vec![false; n];
    for &v in &split.y {
        in_y[v - 1] = true;
    }
    let (pi, pj) = (ts.get(i), ts.get(j));
    let mix = |keep: &Perm, take: &Perm| {
        Perm::from_images_unchecked((1..=n).map(|x| if in_y[x - 1] { take.apply(x) } else { keep.apply(x) }).collect())
    };
    let mut tracks = ts.clone().into_inner();
    tracks[i - 1] = mix(pi, pj);
    tracks[j - 1] = mix(pj, pi);
    let table = TrackSet::new(tracks)?.to_table();
    let out = Loop::new(table).expect("exchange keeps the identity");
    debug_assert_eq!(out.identity(), l.identity());
    Ok(out)
}

/// The five parastrophes, each defined from `x·y = z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parastrophe {
    /// `x \ z = y`
    Ldiv,
    /// `z / y = x`
    Rdiv,
    /// `y * x = z`
    Star,
    /// `y • z = x`
    Bullet,
    /// `z ◁ x = y`
    Ltri,
}

impl Parastrophe {
    pub const ALL: [Parastrophe; 5] =
        [Parastrophe::Ldiv, Parastrophe::Rdiv, Parastrophe::Star, Parastrophe::Bullet, Parastrophe::Ltri];

    pub fn name(self) -> &'static str {
        match self {
            Parastrophe::Ldiv => "ldiv",
            Parastrophe::Rdiv => "rdiv",
            Parastrophe::Star => "star",
            Parastrophe::Bullet => "bullet",
            Parastrophe::Ltri => "ltri",
        }
    }
}

impl fmt::Display for Parastrophe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Parastrophe {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Parastrophe::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| format!("unknown parastrophe {s:?}"))
    }
}

pub fn parastrophe(t: &Table, kind: Parastrophe) -> Table {
    let n = t.order();
    let mut cells = vec![0; n * n];
    let mut put = |r: Label, c: Label, v: Label| cells[(r - 1) * n + c - 1] = v;
    for x in 1..=n {
        for y in 1..=n {
            let z = t.cell(x, y);
            match kind {
                Parastrophe::Ldiv => put(x, z, y),
                Parastrophe::Rdiv => put(z, y, x),
                Parastrophe::Star => put(y, x, z),
                Parastrophe::Bullet => put(y, z, x),
                Parastrophe::Ltri => put(z, x, y),
            }
        }
    }
    Table::from_cells_unchecked(n, cells)
}

/// `x ∘ y = R_b⁻¹(x) · L_a⁻¹(y)`; a loop with identity `a·b`.
pub fn principal_isotope(t: &Table, a: Label, b: Label) -> Loop {
    let n = t.order();
    let rb_inv = t.right_translation(b).inverse();
    let la_inv = t.left_translation(a).inverse();
    let mut cells = Vec::with_capacity(n * n);
    for x in 1..=n {
        let u = rb_inv.apply(x);
        for y in 1..=n {
            cells.push(t.cell(u, la_inv.apply(y)));
        }
    }
    let out = Loop::new(Table::from_cells_unchecked(n, cells)).expect("principal isotopes are loops");
    debug_assert_eq!(out.identity(), t.cell(a, b));
    out
}
