use super::*;
use crate::rat::{rat, ratio};

fn a2() -> ZLattice {
    ZLattice::from_int_rows(&[&[2, 1], &[1, 2]]).unwrap()
}

fn z_n(n: usize) -> ZLattice {
    ZLattice::new(RatMat::identity(n)).unwrap()
}

fn d4() -> ZLattice {
    ZLattice::from_int_rows(&[
        &[2, -1, 0, 0],
        &[-1, 2, -1, -1],
        &[0, -1, 2, 0],
        &[0, -1, 0, 2],
    ])
    .unwrap()
}

fn e8() -> ZLattice {
    // Simple-root Gram of E8: chain 1-3-4-5-6-7-8 with 2 attached to 4.
    let edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
    let mut g = RatMat::zero(8, 8);
    for i in 0..8 {
        g[(i, i)] = rat(2);
    }
    for (a, b) in edges {
        g[(a, b)] = rat(-1);
        g[(b, a)] = rat(-1);
    }
    ZLattice::new(g).unwrap()
}

#[test]
fn construction_and_basic_invariants() {
    let a2 = a2();
    assert_eq!(a2.det(), rat(3));
    assert!(a2.is_even());
    assert!(!a2.is_unimodular());

    let one = z_n(1);
    assert_eq!(one.dual(), one);
    assert!(one.is_unimodular());
    assert!(!one.is_even());

    let e8 = e8();
    assert_eq!(e8.det(), rat(1));
    assert!(e8.is_even());
    assert!(e8.is_unimodular());

    // Indefinite and asymmetric inputs are rejected.
    assert!(ZLattice::from_int_rows(&[&[1, 2], &[2, 1]]).is_err());
    assert!(ZLattice::from_int_rows(&[&[1, 2], &[3, 1]]).is_err());
}

#[test]
fn dual_of_dual_is_identity() {
    let g = RatMat::from_rows(vec![
        vec![rat(2), ratio(1, 3)],
        vec![ratio(1, 3), ratio(5, 4)],
    ])
    .unwrap();
    let l = ZLattice::new(g).unwrap();
    assert_eq!(l.dual().dual(), l);
    assert_eq!(l.dual().det() * l.det(), rat(1));
}

#[test]
fn short_vector_counts() {
    let sv = a2().short_vectors(&rat(2)).unwrap();
    assert_eq!(sv.len(), 3);
    assert!(sv.norms().iter().all(|n| *n == rat(2)));

    let sv = e8().short_vectors(&rat(2)).unwrap();
    assert_eq!(sv.len(), 120); // kissing number 240
}

#[test]
fn minima() {
    assert_eq!(d4().minimum().unwrap(), (rat(2), 24));
    assert_eq!(z_n(1).minimum().unwrap(), (rat(1), 2));
    assert_eq!(e8().minimum().unwrap(), (rat(2), 240));
    assert!(ZLattice::empty().minimum().is_err());
}

#[test]
fn perfection_ranks() {
    assert_eq!(a2().perfection_rank().unwrap(), 3);
    assert!(a2().is_perfect().unwrap());
    assert_eq!(z_n(2).perfection_rank().unwrap(), 2);
    assert!(!z_n(2).is_perfect().unwrap());
    assert_eq!(d4().perfection_rank().unwrap(), 10);
    assert!(d4().is_perfect().unwrap());
}

#[test]
fn perfection_rank_is_basis_invariant() {
    for seed in 1..=5u64 {
        let u = unimodular_sample(4, seed);
        let um = RatMat::from_fn(4, 4, |i, j| Rational::from_integer(u[i][j].clone()));
        let g = um.transpose().mul(d4().gram()).mul(&um);
        let l = ZLattice::new(g).unwrap();
        assert_eq!(l.perfection_rank().unwrap(), 10, "seed {seed}");
    }
}

#[test]
fn tensor_products() {
    let a2 = a2();
    let t = a2.tensor(&a2);
    assert_eq!(t.rank(), 4);
    assert_eq!(t.det(), rat(81));
    let (min, _) = t.minimum().unwrap();
    assert_eq!(min, rat(4)); // min(A2)·min(A2), consistent with the split rule
    assert!(!t.is_perfect().unwrap());

    // L ⊗ Z¹ = L.
    assert_eq!(a2.tensor(&z_n(1)), a2);

    // det(L⊗M) = det(L)^rank(M) · det(M)^rank(L) on mixed rational Grams.
    let l = ZLattice::new(
        RatMat::from_rows(vec![vec![rat(2), ratio(1, 2)], vec![ratio(1, 2), rat(1)]]).unwrap(),
    )
    .unwrap();
    let m = ZLattice::new(
        RatMat::from_rows(vec![
            vec![rat(3), rat(1), rat(0)],
            vec![rat(1), rat(2), rat(1)],
            vec![rat(0), rat(1), rat(2)],
        ])
        .unwrap(),
    )
    .unwrap();
    let lm = l.tensor(&m);
    let expected = l.det() * l.det() * l.det() * m.det() * m.det();
    assert_eq!(lm.det(), expected);
}

#[test]
#[ignore = "slow: rank-16 enumeration"]
fn d4_tensor_d4() {
    let t = d4().tensor(&d4());
    assert_eq!(t.det(), rat(4).pow(8));
    let (min, _) = t.minimum().unwrap();
    assert_eq!(min, rat(4));
}

#[test]
fn orthogonal_sums() {
    let s = a2().orthogonal_sum(&a2());
    assert_eq!(s.det(), rat(9));
    let (min, kissing) = s.minimum().unwrap();
    assert_eq!((min, kissing), (rat(2), 12));

    assert_eq!(a2().orthogonal_sum(&ZLattice::empty()), a2());
    assert_eq!(ZLattice::empty().orthogonal_sum(&a2()), a2());

    let dd = d4().orthogonal_sum(&d4());
    assert_eq!(dd.det(), rat(16));
}

#[test]
fn extremality() {
    assert_eq!(extremal_bound(72), rat(8));
    assert_eq!(extremal_bound(24), rat(4));
    assert_eq!(extremal_bound(8), rat(2));
    assert!(e8().is_extremal().unwrap());
    assert!(a2().is_extremal().is_err()); // not unimodular
}

#[test]
fn split_rule() {
    assert!(kitaoka_split_rule(2, 12));
    assert!(!kitaoka_split_rule(44, 44));
    assert!(kitaoka_split_rule(1, 1000));
}

#[test]
fn extremal_bound_submultiplicativity() {
    // (2+2⌊ℓ/24⌋)(2+2⌊m/24⌋) < 2+2⌊ℓm/24⌋ for 8 ≤ ℓ,m ≤ 100.
    for l in 8..=100usize {
        for m in 8..=100usize {
            let lhs = extremal_bound(l) * extremal_bound(m);
            let rhs = extremal_bound(l * m);
            assert!(lhs < rhs, "failed at ℓ={l}, m={m}");
        }
    }
}

#[test]
fn isometry_finds_and_refutes() {
    // A2 in two different bases.
    let a = a2();
    let b = ZLattice::from_int_rows(&[&[2, -1], &[-1, 2]]).unwrap();
    let u = isometry(&a, &b).expect("A2 bases are isometric");
    let um = RatMat::from_fn(2, 2, |i, j| Rational::from_integer(u[i][j].clone()));
    assert_eq!(um.transpose().mul(b.gram()).mul(&um), *a.gram());

    // Different minima: not isometric.
    let scaled = ZLattice::from_int_rows(&[&[4, 2], &[2, 4]]).unwrap();
    assert!(isometry(&a, &scaled).is_none());

    // Same determinant, different lattices: Z⁴ vs D4-scaled... use Z² vs A2-like det.
    let z2 = z_n(2);
    let other = ZLattice::from_int_rows(&[&[1, 0], &[0, 1]]).unwrap();
    assert!(isometry(&z2, &other).is_some());

    // D4 is isometric to itself through a nontrivial basis.
    let u = unimodular_sample(4, 7);
    let um = RatMat::from_fn(4, 4, |i, j| Rational::from_integer(u[i][j].clone()));
    let g = um.transpose().mul(d4().gram()).mul(&um);
    let moved = ZLattice::new(g).unwrap();
    assert!(isometry(&d4(), &moved).is_some());
}

#[test]
fn enumeration_matches_naive_scan() {
    let corpus: Vec<ZLattice> = vec![
        z_n(1),
        z_n(2),
        a2(),
        d4(),
        a2().orthogonal_sum(&a2()),
        ZLattice::new(
            RatMat::from_rows(vec![
                vec![rat(2), ratio(1, 2), rat(0)],
                vec![ratio(1, 2), ratio(3, 2), ratio(-1, 3)],
                vec![rat(0), ratio(-1, 3), rat(1)],
            ])
            .unwrap(),
        )
        .unwrap(),
    ];
    for (k, l) in corpus.iter().enumerate() {
        for bound in [rat(1), rat(2), rat(4), rat(8), ratio(7, 2)] {
            let fast = l.short_vectors(&bound).unwrap();
            let slow = naive_box_scan(l.gram(), &bound);
            let fast_pairs: Vec<(Vec<num_bigint::BigInt>, Rational)> = fast
                .vectors()
                .iter()
                .cloned()
                .zip(fast.norms().iter().cloned())
                .collect();
            assert_eq!(fast_pairs, slow, "lattice #{k}, bound {bound}");
        }
    }
}

#[test]
fn shortvec_line_format_and_canonical_order() {
    let sv = a2().short_vectors(&rat(2)).unwrap();
    let lines = sv.to_lines();
    assert_eq!(lines, "2;0,1\n2;1,-1\n2;1,0\n");
}

#[test]
fn json_round_trip() {
    let l = ZLattice::new(
        RatMat::from_rows(vec![vec![rat(2), ratio(1, 2)], vec![ratio(1, 2), rat(1)]]).unwrap(),
    )
    .unwrap();
    let js = serde_json::to_string(&l.to_json()).unwrap();
    assert_eq!(js, r#"{"gram":[[2,"1/2"],["1/2",1]]}"#);
    let back = ZLattice::from_json(&serde_json::from_str(&js).unwrap()).unwrap();
    assert_eq!(back, l);

    let bad: std::result::Result<ZLatticeJson, _> =
        serde_json::from_str(r#"{"gram":[[1,2],[2,1]]}"#);
    assert!(ZLattice::from_json(&bad.unwrap()).is_err()); // indefinite
}
