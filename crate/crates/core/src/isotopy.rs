//! Isomorphism and isotopy between Cayley tables.
//!
//! Isomorphisms are found by backtracking: labels of the first table are
//! mapped in increasing order, and every assignment immediately forces the
//! images of the products it determines. The first complete map found is the
//! lexicographically least isomorphism.
//!
//! Isotopy reduces to isomorphism. Any loop isotopic to a quasigroup `t` is
//! isomorphic to one of the `n²` principal isotopes of `t`, so scanning those
//! against a loop form of the second table decides isotopy.

use crate::constructions::principal_isotope;
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::table::Table;
use crate::Label;

fn same_order(t1: &Table, t2: &Table) -> Result<usize> {
    if t1.order() != t2.order() {
        return Err(Error::OrderMismatch { left: t1.order(), right: t2.order() });
    }
    Ok(t1.order())
}

struct IsoSearch<'a> {
    t1: &'a Table,
    t2: &'a Table,
    n: usize,
    // 0 = unassigned
    fwd: Vec<Label>,
    bwd: Vec<Label>,
    trail: Vec<Label>,
}

impl IsoSearch<'_> {
    fn assign(&mut self, x: Label, v: Label) -> bool {
        if self.fwd[x - 1] != 0 {
            return self.fwd[x - 1] == v;
        }
        if self.bwd[v - 1] != 0 {
            return false;
        }
        self.fwd[x - 1] = v;
        self.bwd[v - 1] = x;
        self.trail.push(x);
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            self.bwd[self.fwd[x - 1] - 1] = 0;
            self.fwd[x - 1] = 0;
        }
    }

    // Assigns h(x) = v and closes under h(u·w) = h(u)·h(w).
    fn assign_and_propagate(&mut self, x: Label, v: Label) -> bool {
        let start = self.trail.len();
        if !self.assign(x, v) {
            return false;
        }
        let mut cursor = start;
        while cursor < self.trail.len() {
            let u = self.trail[cursor];
            cursor += 1;
            let hu = self.fwd[u - 1];
            for w in 1..=self.n {
                let hw = self.fwd[w - 1];
                if hw == 0 {
                    continue;
                }
                if !self.assign(self.t1.cell(u, w), self.t2.cell(hu, hw))
                    || !self.assign(self.t1.cell(w, u), self.t2.cell(hw, hu))
                {
                    return false;
                }
            }
        }
        true
    }

    fn search(&mut self) -> bool {
        let Some(x) = (1..=self.n).find(|&x| self.fwd[x - 1] == 0) else {
            return true;
        };
        for v in 1..=self.n {
            if self.bwd[v - 1] != 0 {
                continue;
            }
            let mark = self.trail.len();
            if self.assign_and_propagate(x, v) && self.search() {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }
}

/// The lexicographically least `h` with `relabel(t1, h) = t2`.
///
/// When both tables are loops the identity of `t1` is sent to the identity of
/// `t2` before searching.
pub fn find_isomorphism(t1: &Table, t2: &Table) -> Result<Option<Perm>> {
    let n = same_order(t1, t2)?;
    let (e1, e2) = (t1.find_identity(), t2.find_identity());
    if e1.is_some() != e2.is_some() {
        return Ok(None);
    }
    let mut s = IsoSearch { t1, t2, n, fwd: vec![0; n], bwd: vec![0; n], trail: Vec::with_capacity(n) };
    if let (Some(e1), Some(e2)) = (e1, e2) {
        if !s.assign_and_propagate(e1, e2) {
            return Ok(None);
        }
    }
    if !s.search() {
        return Ok(None);
    }
    let h = Perm::from_images(s.fwd).expect("search builds a bijection");
    assert_eq!(&t1.relabel(&h)?, t2, "isomorphism witness failed verification");
    Ok(Some(h))
}

/// `(α, β, γ)` with `γ(x·y) = α(x) ∘ β(y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotopyTriple {
    pub alpha: Perm,
    pub beta: Perm,
    pub gamma: Perm,
}

impl IsotopyTriple {
    pub fn identity(n: usize) -> IsotopyTriple {
        IsotopyTriple { alpha: Perm::identity(n), beta: Perm::identity(n), gamma: Perm::identity(n) }
    }

    /// The triple taking the target back to the source.
    pub fn inverse(&self) -> IsotopyTriple {
        IsotopyTriple { alpha: self.alpha.inverse(), beta: self.beta.inverse(), gamma: self.gamma.inverse() }
    }

    /// `self` after `first`: if `first: t1 → t2` and `self: t2 → t3`, the
    /// result is `t1 → t3`.
    pub fn after(&self, first: &IsotopyTriple) -> IsotopyTriple {
        IsotopyTriple {
            alpha: &self.alpha * &first.alpha,
            beta: &self.beta * &first.beta,
            gamma: &self.gamma * &first.gamma,
        }
    }

    pub fn degree(&self) -> usize {
        self.gamma.degree()
    }
}

/// Whether `γ(t1(x, y)) = t2(α(x), β(y))` for all `x, y`.
pub fn verify_isotopy(t1: &Table, t2: &Table, iso: &IsotopyTriple) -> Result<bool> {
    let n = same_order(t1, t2)?;
    for p in [&iso.alpha, &iso.beta, &iso.gamma] {
        if p.degree() != n {
            return Err(Error::DegreeMismatch { left: n, right: p.degree() });
        }
    }
    Ok((1..=n)
        .all(|x| (1..=n).all(|y| iso.gamma.apply(t1.cell(x, y)) == t2.cell(iso.alpha.apply(x), iso.beta.apply(y)))))
}

/// Some isotopy from `t1` to `t2`, scanning principal isotopes of `t1` in
/// `(a, b)` order.
pub fn find_isotopy(t1: &Table, t2: &Table) -> Result<Option<IsotopyTriple>> {
    let n = same_order(t1, t2)?;
    // carry t2 to a loop: t2(x, y) = target(R_1(x), L_1(y))
    let (target, back) = match t2.find_identity() {
        Some(_) => (t2.clone(), IsotopyTriple::identity(n)),
        None => {
            let target = principal_isotope(t2, 1, 1).into_table();
            let (l1, r1) = t2.translations(1);
            let back = IsotopyTriple { alpha: r1.inverse(), beta: l1.inverse(), gamma: Perm::identity(n) };
            (target, back)
        }
    };
    for a in 1..=n {
        for b in 1..=n {
            let p = principal_isotope(t1, a, b);
            if let Some(h) = find_isomorphism(p.table(), &target)? {
                // t1 -> p is (R_b, L_a, id); p -> target is (h, h, h)
                let (la, _) = t1.translations(a);
                let rb = t1.right_translation(b);
                let to_target = IsotopyTriple { alpha: &h * &rb, beta: &h * &la, gamma: h };
                let iso = back.after(&to_target);
                debug_assert!(verify_isotopy(t1, t2, &iso).unwrap());
                return Ok(Some(iso));
            }
        }
    }
    Ok(None)
}

/// Partition of `tables` into isotopy classes, as lists of indices. Each
/// class is led by its least index and classes are ordered by that index.
pub fn isotopy_classes(tables: &[Table]) -> Result<Vec<Vec<usize>>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (k, t) in tables.iter().enumerate() {
        if let Some(first) = tables.first() {
            same_order(first, t)?;
        }
        let mut placed = false;
        for class in classes.iter_mut() {
            if find_isotopy(t, &tables[class[0]])?.is_some() {
                class.push(k);
                placed = true;
                break;
            }
        }
        if !placed {
            classes.push(vec![k]);
        }
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{parastrophe, Parastrophe};
    use crate::fixtures;
    use crate::tracks::right_track;

    fn cyc(text: &str, n: usize) -> Perm {
        Perm::parse_cycles(text, n).unwrap()
    }

    // the reference triple has α = (1 4 2), which fails; (1 4 5) is the only
    // α completing its β and γ to an isotopy
    fn ex3_triple() -> IsotopyTriple {
        IsotopyTriple {
            alpha: cyc("(1 4 5)(2)(3)(6)", 6),
            beta: cyc("(1 2 5 4 6)(3)", 6),
            gamma: cyc("(1 6 4 3 5 2)", 6),
        }
    }

    #[test]
    fn isomorphism_of_relabeled_copy() {
        let t = fixtures::table("T_41");
        let h = cyc("(1 3 5)(2 6)", 6);
        let r = t.relabel(&h).unwrap();
        let w = find_isomorphism(&t, &r).unwrap().unwrap();
        assert_eq!(t.relabel(&w).unwrap(), r);
    }

    #[test]
    fn isomorphism_is_lexicographically_least() {
        // the cyclic group of order 5 has automorphisms x ↦ kx; the least
        // one fixing 1 is the identity map
        let c5 = Table::from_fn(5, |x, y| (x + y - 2) % 5 + 1).unwrap();
        assert!(find_isomorphism(&c5, &c5).unwrap().unwrap().is_identity());
        // brute force over all 120 maps
        let t = fixtures::table("T_42");
        let h = cyc("(2 5)(3 6 4)", 6);
        let r = t.relabel(&h).unwrap();
        let mut best: Option<Vec<usize>> = None;
        let mut v: Vec<usize> = (1..=6).collect();
        permute_all(&mut v, 0, &mut |p| {
            let perm = Perm::from_images(p.to_vec()).unwrap();
            if t.relabel(&perm).unwrap() == r && best.as_ref().is_none_or(|b| p < b.as_slice()) {
                best = Some(p.to_vec());
            }
        });
        assert_eq!(find_isomorphism(&t, &r).unwrap().unwrap().images(), best.unwrap().as_slice());
    }

    fn permute_all(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute_all(v, k + 1, f);
            v.swap(k, i);
        }
    }

    #[test]
    fn star_parastrophe_isomorphism_via_phi_e() {
        let t = fixtures::table("T_42");
        let star = parastrophe(&t, Parastrophe::Star);
        let phi1 = right_track(&t, 1);
        assert_eq!(star.relabel(&phi1).unwrap(), t);
        assert!(find_isomorphism(&star, &t).unwrap().is_some());
    }

    #[test]
    fn census_tables_are_pairwise_non_isomorphic() {
        let names = ["T_41", "T_42", "T_43", "T_44"];
        for (k, a) in names.iter().enumerate() {
            for b in &names[k + 1..] {
                assert_eq!(find_isomorphism(&fixtures::table(a), &fixtures::table(b)).unwrap(), None);
            }
        }
    }

    #[test]
    fn order_mismatch() {
        assert_eq!(
            find_isomorphism(&fixtures::table("T_41"), &fixtures::table("T_ex1")),
            Err(Error::OrderMismatch { left: 6, right: 7 })
        );
        assert!(
            verify_isotopy(&fixtures::table("T_41"), &fixtures::table("T_ex1"), &IsotopyTriple::identity(6)).is_err()
        );
    }

    #[test]
    fn ex3_triple_verifies() {
        let (t3, t2) = (fixtures::table("T_ex3"), fixtures::table("T_ex2"));
        assert!(verify_isotopy(&t3, &t2, &ex3_triple()).unwrap());
        assert!(verify_isotopy(&t3, &t3, &IsotopyTriple::identity(6)).unwrap());
        assert!(!verify_isotopy(&t3, &t2, &IsotopyTriple::identity(6)).unwrap());
        let reference = IsotopyTriple { alpha: cyc("(1 4 2)", 6), ..ex3_triple() };
        assert!(!verify_isotopy(&t3, &t2, &reference).unwrap());
    }

    #[test]
    fn isotopy_is_an_equivalence() {
        let (t3, t2) = (fixtures::table("T_ex3"), fixtures::table("T_ex2"));
        let fwd = ex3_triple();
        assert!(verify_isotopy(&t2, &t3, &fwd.inverse()).unwrap());
        let other = find_isotopy(&t2, &fixtures::table("T_ex2").relabel(&cyc("(2 3)", 6)).unwrap()).unwrap().unwrap();
        let t2r = t2.relabel(&cyc("(2 3)", 6)).unwrap();
        assert!(verify_isotopy(&t3, &t2r, &other.after(&fwd)).unwrap());
    }

    #[test]
    fn find_isotopy_examples() {
        let (t3, t2) = (fixtures::table("T_ex3"), fixtures::table("T_ex2"));
        let iso = find_isotopy(&t3, &t2).unwrap().unwrap();
        assert!(verify_isotopy(&t3, &t2, &iso).unwrap());
        let (s, d) = (fixtures::table("T_ex4_star"), fixtures::table("T_ex4_d"));
        let iso = find_isotopy(&s, &d).unwrap().unwrap();
        assert!(verify_isotopy(&s, &d, &iso).unwrap());
        // quasigroup as the target
        let iso = find_isotopy(&d, &s).unwrap().unwrap();
        assert!(verify_isotopy(&d, &s, &iso).unwrap());
        assert_eq!(find_isotopy(&fixtures::table("T_41"), &fixtures::table("T_43")).unwrap(), None);
    }

    #[test]
    fn class_partition_examples() {
        let four: Vec<Table> = ["T_41", "T_42", "T_43", "T_44"].iter().map(|n| fixtures::table(n)).collect();
        assert_eq!(isotopy_classes(&four).unwrap(), vec![vec![0], vec![1], vec![2], vec![3]]);
        let pair = vec![fixtures::table("T_ex2"), fixtures::table("T_ex3")];
        assert_eq!(isotopy_classes(&pair).unwrap(), vec![vec![0, 1]]);
        assert_eq!(isotopy_classes(&[fixtures::table("T_41")]).unwrap(), vec![vec![0]]);
        assert!(isotopy_classes(&[fixtures::table("T_41"), fixtures::table("T_ex1")]).is_err());
    }
}
