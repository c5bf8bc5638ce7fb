//! Tracks (middle translations) and spins.
//!
//! The right track `φ_a` of a quasigroup is the permutation with
//! `x · φ_a(x) = a` for every `x`; it marks, row by row, the column holding
//! `a`. The left track `λ_a` satisfies `λ_a(x) · x = a` and equals `φ_a⁻¹`.
//! A table and its family of right tracks determine each other.
//!
//! In a loop with identity `e`, `φ_e` sends every element to its right
//! inverse. Several D-loop criteria are phrased through `φ_e`:
//!
//! * `φ_e φ_a φ_e = φ_{a⁻¹}⁻¹` for all `a` ([`is_d_loop_via_tracks`]),
//! * `φ_e φ_a⁻¹ φ_e = φ_{a⁻¹}`, `φ_e R_a φ_e = L_{a⁻¹}` and
//!   `φ_e L_a φ_e = R_{a⁻¹}` ([`cor23_report`]).
//!
//! A spin is `φ_ij = φ_i φ_j⁻¹`; the spin-basis `Φ_i` collects the `n` spins
//! with first index `i`. A quasigroup is isotopic to a group exactly when
//! `Φ_1` is a group.

use std::collections::{HashMap, HashSet};

use crate::constructions::principal_isotope;
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::table::{Loop, Table};
use crate::Label;

/// The right tracks `φ_1, ..., φ_n` of a table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrackSet {
    tracks: Vec<Perm>,
}

impl TrackSet {
    /// Checks that the family defines a quasigroup: every track has degree
    /// `n` and, for each `x`, `a ↦ φ_a(x)` is a bijection.
    pub fn new(tracks: Vec<Perm>) -> Result<TrackSet> {
        let n = tracks.len();
        if n == 0 {
            return Err(Error::InconsistentTracks("empty family".into()));
        }
        if let Some(p) = tracks.iter().find(|p| p.degree() != n) {
            return Err(Error::InconsistentTracks(format!("{n} tracks but one has degree {}", p.degree())));
        }
        for x in 1..=n {
            let mut seen = vec![false; n];
            for p in &tracks {
                if std::mem::replace(&mut seen[p.apply(x) - 1], true) {
                    return Err(Error::InconsistentTracks(format!("two tracks send {x} to {}", p.apply(x))));
                }
            }
        }
        Ok(TrackSet { tracks })
    }

    pub fn order(&self) -> usize {
        self.tracks.len()
    }

    /// `φ_a`.
    pub fn get(&self, a: Label) -> &Perm {
        &self.tracks[a - 1]
    }

    pub fn tracks(&self) -> &[Perm] {
        &self.tracks
    }

    pub fn iter(&self) -> impl Iterator<Item = (Label, &Perm)> {
        self.tracks.iter().enumerate().map(|(k, p)| (k + 1, p))
    }

    /// Rebuilds the table: `x · y` is the `a` with `φ_a(x) = y`.
    pub fn to_table(&self) -> Table {
        let n = self.order();
        let mut cells = vec![0; n * n];
        for (a, p) in self.iter() {
            for x in 1..=n {
                cells[(x - 1) * n + p.apply(x) - 1] = a;
            }
        }
        Table::from_cells_unchecked(n, cells)
    }

    /// Label of the track equal to `p`, if any.
    pub fn index_of(&self, p: &Perm) -> Option<Label> {
        self.tracks.iter().position(|q| q == p).map(|k| k + 1)
    }

    pub fn into_inner(self) -> Vec<Perm> {
        self.tracks
    }
}

/// `φ_a`: the permutation with `x · φ_a(x) = a`.
pub fn right_track(t: &Table, a: Label) -> Perm {
    let n = t.order();
    let mut images = vec![0; n];
    for (x, slot) in images.iter_mut().enumerate() {
        *slot = t.row(x + 1).iter().position(|&z| z == a).expect("Latin row") + 1;
    }
    Perm::from_images_unchecked(images)
}

/// `λ_a = φ_a⁻¹`: the permutation with `λ_a(x) · x = a`.
pub fn left_track(t: &Table, a: Label) -> Perm {
    right_track(t, a).inverse()
}

pub fn track_set(t: &Table) -> TrackSet {
    let n = t.order();
    let mut images = vec![vec![0; n]; n];
    for x in 1..=n {
        for (y, &a) in t.row(x).iter().enumerate() {
            images[a - 1][x - 1] = y + 1;
        }
    }
    TrackSet { tracks: images.into_iter().map(Perm::from_images_unchecked).collect() }
}

/// Inverse of [`track_set`] for an arbitrary permutation family.
pub fn table_from_tracks(tracks: Vec<Perm>) -> Result<Table> {
    Ok(TrackSet::new(tracks)?.to_table())
}

/// D-loop test through `φ_e φ_a φ_e = φ_{a⁻¹}⁻¹`, `a⁻¹` the right inverse.
pub fn is_d_loop_via_tracks(l: &Loop) -> bool {
    let ts = track_set(l.table());
    let pe = ts.get(l.identity());
    (1..=l.order()).all(|a| {
        let lhs = &(pe * ts.get(a)) * pe;
        lhs == ts.get(l.right_inverse(a)).inverse()
    })
}

/// The three track identities that each characterise D-loops.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cor23Report {
    /// `φ_e φ_a⁻¹ φ_e = φ_{a⁻¹}` for all `a`.
    pub a_holds: bool,
    /// `φ_e R_a φ_e = L_{a⁻¹}` for all `a`.
    pub b_holds: bool,
    /// `φ_e L_a φ_e = R_{a⁻¹}` for all `a`.
    pub c_holds: bool,
}

pub fn cor23_report(l: &Loop) -> Cor23Report {
    let t = l.table();
    let ts = track_set(t);
    let pe = ts.get(l.identity());
    let conj = |p: &Perm| &(pe * p) * pe;
    let n = l.order();
    let mut report = Cor23Report { a_holds: true, b_holds: true, c_holds: true };
    for a in 1..=n {
        let ai = l.right_inverse(a);
        let (la, ra) = t.translations(a);
        let (lai, rai) = t.translations(ai);
        report.a_holds &= conj(&ts.get(a).inverse()) == *ts.get(ai);
        report.b_holds &= conj(&ra) == lai;
        report.c_holds &= conj(&la) == rai;
    }
    report
}

/// `φ_ij = φ_i φ_j⁻¹`.
pub fn spin(t: &Table, i: Label, j: Label) -> Perm {
    &right_track(t, i) * &left_track(t, j)
}

/// `Φ_i = {φ_ij : j}` in order of `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinBasis {
    base: Label,
    spins: Vec<Perm>,
}

impl SpinBasis {
    pub fn base(&self) -> Label {
        self.base
    }

    /// `φ_ij` at position `j`.
    pub fn get(&self, j: Label) -> &Perm {
        &self.spins[j - 1]
    }

    pub fn spins(&self) -> &[Perm] {
        &self.spins
    }

    /// Whether the set is closed under composition. Because it contains the
    /// identity and is finite, closure makes it a group.
    pub fn is_closed(&self) -> bool {
        let set: HashSet<&Perm> = self.spins.iter().collect();
        self.spins.iter().all(|p| self.spins.iter().all(|q| set.contains(&(p * q))))
    }
}

pub fn spin_basis(t: &Table, i: Label) -> SpinBasis {
    let ts = track_set(t);
    spin_basis_of(&ts, i)
}

fn spin_basis_of(ts: &TrackSet, i: Label) -> SpinBasis {
    let pi = ts.get(i);
    let spins: Vec<Perm> = ts.tracks().iter().map(|pj| pi * &pj.inverse()).collect();
    debug_assert!(spins[i - 1].is_identity());
    debug_assert_eq!(spins.iter().collect::<HashSet<_>>().len(), spins.len());
    SpinBasis { base: i, spins }
}

/// Base label used by the group-isotopy tests: the identity when there is
/// one, otherwise 1.
fn default_base(t: &Table) -> Label {
    t.find_identity().unwrap_or(1)
}

/// Isotopic to a group, decided by closure of the spin-basis at the
/// identity (label 1 for quasigroups without identity).
pub fn is_group_isotopic(t: &Table) -> bool {
    spin_basis(t, default_base(t)).is_closed()
}

/// For every `i, j` some track equals `φ_i φ_e φ_j`.
pub fn track_triple_product_closed(t: &Table) -> bool {
    let ts = track_set(t);
    let set: HashSet<&Perm> = ts.tracks().iter().collect();
    let pe = ts.get(default_base(t));
    ts.tracks().iter().all(|pi| ts.tracks().iter().all(|pj| set.contains(&(&(pi * pe) * pj))))
}

/// Group-isotopy by exhaustion: some principal isotope is associative.
pub fn is_group_isotopic_brute_force(t: &Table) -> bool {
    let n = t.order();
    (1..=n).any(|a| (1..=n).any(|b| principal_isotope(t, a, b).table().is_associative()))
}

/// `{φ_1i φ_1j : i, j}` with `1` read as the identity (or label 1).
pub fn spin_product_set(t: &Table) -> HashSet<Perm> {
    let basis = spin_basis(t, default_base(t));
    let mut out = HashSet::new();
    for p in basis.spins() {
        for q in basis.spins() {
            out.insert(p * q);
        }
    }
    out
}

/// Every spin `φ_ij` over all `i, j`.
pub fn all_spins(t: &Table) -> HashSet<Perm> {
    let ts = track_set(t);
    (1..=t.order()).flat_map(|i| spin_basis_of(&ts, i).spins).collect()
}

/// A pair `(p, σ)` with `φ_p φ_i⁻¹ φ_p = φ_σ(i)` for every `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DIsotopyWitness {
    pub p: Label,
    pub sigma: Perm,
}

/// Whether `(p, σ)` satisfies `φ_p φ_i⁻¹ φ_p = φ_σ(i)` for all `i`.
pub fn is_witness(t: &Table, p: Label, sigma: &Perm) -> bool {
    let ts = track_set(t);
    let pp = ts.get(p);
    (1..=t.order()).all(|i| &(pp * &ts.get(i).inverse()) * pp == *ts.get(sigma.apply(i)))
}

/// Smallest `p` admitting a `σ`; `None` proves that `t` is isotopic to no
/// D-loop.
pub fn d_isotopy_witness(t: &Table) -> Option<DIsotopyWitness> {
    let ts = track_set(t);
    let index: HashMap<&Perm, Label> = ts.iter().map(|(a, p)| (p, a)).collect();
    let n = t.order();
    'p: for p in 1..=n {
        let pp = ts.get(p);
        let mut images = Vec::with_capacity(n);
        let mut used = vec![false; n];
        for i in 1..=n {
            let q = &(pp * &ts.get(i).inverse()) * pp;
            match index.get(&q) {
                Some(&k) if !used[k - 1] => {
                    used[k - 1] = true;
                    images.push(k);
                }
                _ => continue 'p,
            }
        }
        return Some(DIsotopyWitness { p, sigma: Perm::from_images_unchecked(images) });
    }
    None
}
