mod common;

use num_integer::Integer;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use torplane::algebra::{cyclo_make, BiPoly, CycloNum};
use torplane::smallgrp::*;
use torplane::toric::make_surface;
use torplane::Error;

fn random_group(r: &mut StdRng) -> FinGroup {
    let gens = match r.gen_range(0..3) {
        0 => q8_generators(),
        1 => vec![Mat2::diag(cyclo_make(6, r.gen_range(0..6)), cyclo_make(4, r.gen_range(0..4)))],
        _ => vec![Mat2::from_ints([[0, 1], [1, 0]]), Mat2::diag(cyclo_make(3, 1), cyclo_make(3, 2))],
    };
    group_closure(&gens, 64).unwrap()
}

fn random_bipoly(r: &mut StdRng, deg: u32) -> BiPoly {
    let mut p = BiPoly::zero();
    for _ in 0..4 {
        let i = r.gen_range(0..=deg);
        p.add_term((i, r.gen_range(0..=deg - i)), &common::small_scalar(r));
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn closure_is_a_group(seed in any::<u64>()) {
        let mut r = StdRng::seed_from_u64(seed);
        let g = random_group(&mut r);
        prop_assert!(g.contains(&Mat2::identity()));
        for a in g.elements() {
            prop_assert!(g.contains(&a.inverse().unwrap()));
            for b in g.elements() {
                prop_assert!(g.contains(&(a * b)));
            }
        }
    }

    #[test]
    fn reynolds_projects_onto_invariants(seed in any::<u64>()) {
        let mut r = StdRng::seed_from_u64(seed);
        let g = random_group(&mut r);
        let f = random_bipoly(&mut r, 5);
        let rf = reynolds(&f, &g);
        prop_assert!(is_invariant(&rf, &g));
        prop_assert_eq!(reynolds(&rf, &g), rf.clone());
        let h = random_bipoly(&mut r, 3);
        prop_assert_eq!(reynolds(&(&f + &h), &g), &rf + &reynolds(&h, &g));
    }

    #[test]
    fn diagonal_matrices_normalize_diagonal_groups(seed in any::<u64>(), d in 2u32..10) {
        let mut r = StdRng::seed_from_u64(seed);
        let units: Vec<u32> = (1..d).filter(|e| d.gcd(e) == 1).collect();
        let e = units[r.gen_range(0..units.len())];
        let g = cyclic_group(&make_surface(d, e).unwrap());
        let h = Mat2::diag(common::scalar_in(&mut r, 4), common::scalar_in(&mut r, 3));
        prop_assert!(in_normalizer(&h, &g).unwrap());
        let swap = Mat2::from_ints([[0, 1], [1, 0]]);
        prop_assert_eq!(in_normalizer(&swap, &g).unwrap(), (e * e) % d == 1 % d);
    }
}

#[test]
fn cyclic_groups_are_small_and_abelian() {
    for d in 2..=10u32 {
        for e in (1..d).filter(|e| d.gcd(e) == 1) {
            let s = make_surface(d, e).unwrap();
            let g = cyclic_group(&s);
            assert_eq!(g.order(), d as usize);
            assert!(is_small(&g), "G_{{{d},{e}}}");
            assert!(is_abelian(&g));
            let basis = invariant_basis_up_to(&g, d + 1);
            for (k, polys) in &basis {
                let count = (0..=*k).filter(|&i| s.monomial_invariant(i, k - i)).count();
                assert_eq!(polys.len(), count, "G_{{{d},{e}}} degree {k}");
                for p in polys {
                    assert!(is_invariant(p, &g));
                    assert_eq!(p.total_degree(), Some(*k));
                }
            }
        }
    }
}

#[test]
fn q8_structure() {
    let g = group_closure(&q8_generators(), 64).unwrap();
    assert_eq!(g.order(), 8);
    assert!(is_small(&g));
    assert!(!is_abelian(&g));
    let basis = invariant_basis_up_to(&g, 6);
    let dims: Vec<usize> = basis.values().map(|v| v.len()).collect();
    assert_eq!(dims, [0, 0, 0, 2, 0, 1]);
}

#[test]
fn closure_failures() {
    let big = Mat2::diag(CycloNum::from_int(2), CycloNum::one());
    assert!(matches!(group_closure(&[big], 16), Err(Error::NotFiniteWithinBound(16))));
    let sing = Mat2::from_ints([[1, 0], [0, 0]]);
    assert!(matches!(group_closure(&[sing], 16), Err(Error::BadParameters(_))));
}

#[test]
fn pseudoreflections() {
    assert!(is_pseudoreflection(&Mat2::diag(CycloNum::from_int(-1), CycloNum::one())));
    assert!(!is_pseudoreflection(&Mat2::identity()));
    assert!(!is_pseudoreflection(&Mat2::from_ints([[1, 1], [0, 1]])));
    assert!(!is_pseudoreflection(&Mat2::scalar(CycloNum::from_int(-1))));
    let g = group_closure(&[Mat2::from_ints([[0, 1], [1, 0]])], 4).unwrap();
    assert!(!is_small(&g));
}

#[test]
fn relation_among_cyclic_generators() {
    for d in 2..=6u32 {
        for e in (1..d).filter(|e| d.gcd(e) == 1) {
            let s = make_surface(d, e).unwrap();
            let c1 = s.c[0];
            let fs = [
                BiPoly::monomial(CycloNum::one(), 0, d),
                BiPoly::monomial(CycloNum::one(), 1, c1),
                BiPoly::monomial(CycloNum::one(), d, 0),
            ];
            let rel = find_relation(&fs, d * (1 + c1)).unwrap().expect("f1^d = f2 f0^c1");
            assert!(rel.expand(&fs).is_zero());
            assert!(rel.terms[0].1.is_one());
        }
    }
}

#[test]
fn lines_on_binary_forms() {
    let g = FinGroup::trivial();
    let f = BiPoly::x() * BiPoly::y();
    let res = smooth_lines_on_quotient(&g, &f).unwrap();
    assert!(res.complete && !res.degenerate);
    assert_eq!(res.directions.len(), 2);
    let res = smooth_lines_on_quotient(&g, &BiPoly::zero()).unwrap();
    assert!(res.degenerate);
    let nh = &BiPoly::x() + &BiPoly::monomial(CycloNum::one(), 0, 2);
    assert!(matches!(smooth_lines_on_quotient(&g, &nh), Err(Error::NotHomogeneous)));
}
