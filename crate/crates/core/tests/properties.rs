use dloop::census::{classify, enumerate_loops};
use dloop::constructions::principal_isotope;
use dloop::fixtures;
use dloop::isotopy::{find_isomorphism, find_isotopy, verify_isotopy, IsotopyTriple};
use dloop::tracks::{d_isotopy_witness, is_witness};
use dloop::{Perm, Side, Table};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Perm {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Perm::from_images(images).unwrap()
}

fn random_triple(rng: &mut ChaCha8Rng, n: usize) -> IsotopyTriple {
    IsotopyTriple { alpha: random_perm(rng, n), beta: random_perm(rng, n), gamma: random_perm(rng, n) }
}

/// The table `s` with `γ(t(x, y)) = s(α(x), β(y))`.
fn isotope(t: &Table, iso: &IsotopyTriple) -> Table {
    let (ai, bi) = (iso.alpha.inverse(), iso.beta.inverse());
    Table::from_fn(t.order(), |x, y| iso.gamma.apply(t.cell(ai.apply(x), bi.apply(y)))).unwrap()
}

fn some_principal_isotope_is_d(t: &Table) -> bool {
    let n = t.order();
    (1..=n).any(|a| (1..=n).any(|b| principal_isotope(t, a, b).is_d(Side::Right)))
}

fn d_loops(n: usize) -> Vec<Table> {
    let mut out = Vec::new();
    enumerate_loops(n, |t| {
        if classify(t).is_d {
            out.push(t.clone());
        }
    })
    .unwrap();
    out
}

#[test]
fn relabelled_fixture_is_isomorphic_back() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let t = fixtures::table("T_41");
    for _ in 0..10 {
        let h = random_perm(&mut rng, 6);
        let moved = t.relabel(&h).unwrap();
        let back = find_isomorphism(&moved, &t).unwrap().expect("isomorphic");
        assert_eq!(moved.relabel(&back).unwrap(), t);
    }
}

#[test]
fn d_property_survives_relabelling() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (name, l) in fixtures::loops() {
        for _ in 0..5 {
            let h = random_perm(&mut rng, l.order());
            let moved = l.table().relabel(&h).unwrap().to_loop().unwrap();
            assert_eq!(moved.is_d(Side::Right), l.is_d(Side::Right), "{name}");
        }
    }
}

#[test]
fn random_isotopes_verify_and_are_found() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (name, l) in fixtures::loops() {
        let iso = random_triple(&mut rng, l.order());
        let s = isotope(l.table(), &iso);
        assert!(verify_isotopy(l.table(), &s, &iso).unwrap(), "{name}");
        let found = find_isotopy(l.table(), &s).unwrap().expect("isotopic");
        assert!(verify_isotopy(l.table(), &s, &found).unwrap(), "{name}");
        let back = find_isotopy(&s, l.table()).unwrap().expect("isotopic");
        assert!(verify_isotopy(&s, l.table(), &back).unwrap(), "{name}");
    }
}

// A witness exists exactly when some loop isotopic to the table is a D-loop,
// and every such loop is isomorphic to a principal isotope.
#[test]
fn witness_exists_iff_isotopic_to_a_d_loop() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, l) in fixtures::loops() {
        for _ in 0..3 {
            let s = isotope(l.table(), &random_triple(&mut rng, l.order()));
            let w = d_isotopy_witness(&s);
            if let Some(w) = &w {
                assert!(is_witness(&s, w.p, &w.sigma), "{name}");
            }
            assert_eq!(w.is_some(), some_principal_isotope_is_d(&s), "{name}");
        }
    }
}

// An isotope `s` of a D-loop `l` via `(α, β, γ)` satisfies the witness
// equation at `p = γ(e)`.
#[test]
fn isotopes_of_d_loops_have_a_witness_at_the_image_of_the_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (name, l) in fixtures::loops() {
        if !l.is_d(Side::Right) {
            continue;
        }
        for _ in 0..3 {
            let iso = random_triple(&mut rng, l.order());
            let s = isotope(l.table(), &iso);
            let p = iso.gamma.apply(l.identity());
            let ts = dloop::tracks::track_set(&s);
            let images: Option<Vec<usize>> =
                (1..=l.order()).map(|i| ts.index_of(&(&(ts.get(p) * &ts.get(i).inverse()) * ts.get(p)))).collect();
            let sigma = Perm::from_images(images.expect("conjugates are tracks")).unwrap();
            assert!(is_witness(&s, p, &sigma), "{name}");
        }
    }
}

#[test]
fn order_5_quasigroup_without_witness() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut loops = Vec::new();
    enumerate_loops(5, |t| loops.push(t.clone())).unwrap();
    let targets = d_loops(5);
    let mut found = None;
    for _ in 0..200 {
        let base = loops.choose(&mut rng).unwrap();
        let s = isotope(base, &random_triple(&mut rng, 5));
        if d_isotopy_witness(&s).is_none() {
            found = Some(s);
            break;
        }
    }
    let s = found.expect("some order-5 quasigroup has no witness");
    for d in &targets {
        assert!(find_isotopy(&s, d).unwrap().is_none());
    }
}
