use std::collections::BTreeSet;

use num_integer::Integer;
use proptest::prelude::*;
use torplane::algebra::{BiPoly, CycloNum};
use torplane::toric::*;

fn surfaces(dmax: u32) -> Vec<CyclicSurf> {
    (2..=dmax)
        .flat_map(|d| (1..d).filter(move |e| d.gcd(e) == 1).map(move |e| make_surface(d, e).unwrap()))
        .collect()
}

/// Exponent pairs (k·e mod d, k mod d) of the group elements.
fn group_pairs(d: u32, e: u32, swap: bool) -> BTreeSet<(u32, u32)> {
    (0..d)
        .map(|k| {
            let p = (k * e % d, k % d);
            if swap {
                (p.1, p.0)
            } else {
                p
            }
        })
        .collect()
}

/// Whether x^i y^j is a product of the given monomials.
fn in_semigroup(gens: &[(u32, u32)], i: u32, j: u32) -> bool {
    let mut reach = vec![vec![false; j as usize + 1]; i as usize + 1];
    reach[0][0] = true;
    for a in 0..=i as usize {
        for b in 0..=j as usize {
            if !reach[a][b] {
                continue;
            }
            for &(gi, gj) in gens {
                let (na, nb) = (a + gi as usize, b + gj as usize);
                if na <= i as usize && nb <= j as usize {
                    reach[na][nb] = true;
                }
            }
        }
    }
    reach[i as usize][j as usize]
}

#[test]
fn generators_are_invariant_and_complete() {
    for s in surfaces(8) {
        let gens = generator_exponents(&s);
        assert_eq!(gens.len(), s.d as usize + 1);
        for &(i, j) in &gens {
            assert!(s.monomial_invariant(i, j), "{s}: x^{i} y^{j}");
        }
        let g = s.generator();
        for p in invariant_generators(&s) {
            let moved = p.subst(
                &BiPoly::monomial(g.alpha.clone(), 1, 0),
                &BiPoly::monomial(g.beta.clone(), 0, 1),
            );
            assert_eq!(moved, p);
        }
        for i in 0..=2 * s.d {
            for j in 0..=2 * s.d - i {
                let inv = (i * s.e + j) % s.d == 0;
                assert_eq!(s.monomial_invariant(i, j), inv);
                if inv && (i, j) != (0, 0) {
                    assert!(in_semigroup(&gens, i, j), "{s}: x^{i} y^{j} not generated");
                }
            }
        }
    }
}

#[test]
fn isomorphism_matches_group_conjugacy() {
    let all = surfaces(12);
    for s in &all {
        assert!(surfaces_isomorphic(s, s));
        for t in all.iter().filter(|t| t.d == s.d) {
            let oracle = group_pairs(s.d, s.e, false) == group_pairs(t.d, t.e, false)
                || group_pairs(s.d, s.e, false) == group_pairs(t.d, t.e, true);
            assert_eq!(surfaces_isomorphic(s, t), oracle, "{s} vs {t}");
            assert_eq!(surfaces_isomorphic(s, t), surfaces_isomorphic(t, s));
            for u in all.iter().filter(|u| u.d == s.d) {
                if surfaces_isomorphic(s, t) && surfaces_isomorphic(t, u) {
                    assert!(surfaces_isomorphic(s, u), "{s} {t} {u}");
                }
            }
        }
    }
}

#[test]
fn axes_equivalence_matches_swapped_generator() {
    for s in surfaces(16) {
        let g = s.generator();
        let sw = s.swapped_generator();
        let oracle = (0..s.d as u64).any(|k| g.alpha.pow(k) == sw.alpha && g.beta.pow(k) == sw.beta);
        assert_eq!(axes_equivalent(&s), oracle, "{s}");
    }
}

#[test]
fn enumeration_examples() {
    let classes = |d, e| -> Vec<String> {
        enumerate_embedding_classes(&make_surface(d, e).unwrap())
            .unwrap()
            .candidates
            .iter()
            .map(|c| c.class.to_string())
            .collect()
    };
    assert_eq!(classes(2, 1), ["pi(C_x) ~ pi(C_y)"]);
    assert!(classes(5, 4).contains(&"pi(C_{2,3})".to_string()));
    assert!(enumerate_embedding_classes(&make_surface(1, 1).unwrap()).is_err());
    assert!(make_surface(4, 2).is_err());
    assert!(make_surface(0, 1).is_err());
    assert!(make_surface(3, 3).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn image_matches_literal_substitution(d in 2u32..12, e_seed in 1u32..100, a in 1u32..7, b in 1u32..7) {
        prop_assume!(a.gcd(&b) == 1);
        let e = (1..d).cycle().skip(e_seed as usize % (d as usize - 1)).find(|e| d.gcd(e) == 1).unwrap();
        let s = make_surface(d, e).unwrap();
        let img = curve_image_exponents(&s, a, b).unwrap();
        let (tx, ty) = (BiPoly::monomial(CycloNum::one(), a, 0), BiPoly::monomial(CycloNum::one(), b, 0));
        for (gen, &k) in invariant_generators(&s).iter().zip(&img.exponents) {
            prop_assert_eq!(gen.subst(&tx, &ty), BiPoly::monomial(CycloNum::one(), k as u32, 0));
        }
        let g = img.exponents.iter().fold(0u64, |g, &x| g.gcd(&x));
        prop_assert_eq!(is_image_smooth(&img), img.exponents.contains(&g));
    }

    #[test]
    fn enumeration_is_consistent(d in 2u32..16, e_seed in 0u32..100) {
        let e = (1..d).cycle().skip(e_seed as usize % (d as usize - 1)).find(|e| d.gcd(e) == 1).unwrap();
        let s = make_surface(d, e).unwrap();
        let out = enumerate_embedding_classes(&s).unwrap();
        prop_assert!(out.upper_bound);
        let mut seen = BTreeSet::new();
        for c in &out.candidates {
            prop_assert!(seen.insert(c.class.to_string()));
            if let LineClass::Cab { a, b } = c.class {
                prop_assert!(a + b <= d && a.gcd(&b) == 1);
                prop_assert!(!folds_into_axis(&s, a, b));
                prop_assert_eq!(c.smooth, is_image_smooth(c.image.as_ref().unwrap()));
                prop_assert!(c.smooth || (a, b) == (1, 1));
            }
        }
        let axes = out.candidates.iter().filter(|c| c.image.is_none()).count();
        prop_assert_eq!(axes, if axes_equivalent(&s) { 1 } else { 2 });
    }
}
