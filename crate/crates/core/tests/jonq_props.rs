mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use torplane::algebra::{cyclo_make, CycloNum, UniPoly};
use torplane::jonq::*;
use torplane::planeaut::{compose, AutWord};
use torplane::toric::make_surface;

fn random_jonq(r: &mut StdRng, n: u32) -> JonqPlus {
    let (alpha, beta) = (common::scalar_in(r, n), common::scalar_in(r, n));
    let deg = r.gen_range(0..5);
    JonqPlus::new(alpha, beta, common::small_poly(r, deg, 0)).unwrap()
}

fn word(p: &JonqPlus) -> AutWord {
    p.to_word()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn compose_matches_word_composition(seed in any::<u64>()) {
        let mut r = StdRng::seed_from_u64(seed);
        let (a, b) = (random_jonq(&mut r, 4), random_jonq(&mut r, 3));
        prop_assert!(a.compose(&b).to_word().same_map(&compose(&word(&a), &word(&b))));
        prop_assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn commute_agrees_with_composition(seed in any::<u64>()) {
        let mut r = StdRng::seed_from_u64(seed);
        let a = random_jonq(&mut r, 4);
        let b = match r.gen_range(0..3) {
            0 => random_jonq(&mut r, 4),
            1 => a.compose(&a).compose(&a),
            _ => {
                let (x, y, f) = common::semisimple_torsion(&mut r, 4, 4);
                JonqPlus::new(x, y, f).unwrap()
            }
        };
        let literal = a.compose(&b) == b.compose(&a);
        prop_assert_eq!(commute(&a, &b), literal);
        prop_assert_eq!(commute(&b, &a), literal);
    }

    #[test]
    fn conjugator_reaches_the_torus(seed in any::<u64>()) {
        let mut r = StdRng::seed_from_u64(seed);
        let n = [2u32, 3, 4, 5, 6][r.gen_range(0..5)];
        let (alpha, beta, f) = common::semisimple_torsion(&mut r, n, 5);
        let phi = JonqPlus::new(alpha, beta, f).unwrap();
        prop_assert!(is_semisimple(&phi));
        let mu = conjugator_to_torus(&phi).unwrap().to_jonq();
        let conj = mu.inverse().compose(&phi).compose(&mu);
        prop_assert_eq!(conj, JonqPlus::from_torus(&rho(&phi)));
    }

    #[test]
    fn order_matches_brute_force(seed in any::<u64>()) {
        let mut r = StdRng::seed_from_u64(seed);
        let n = [1u32, 2, 3, 4, 6][r.gen_range(0..5)];
        let (alpha, beta, f) = common::semisimple_torsion(&mut r, n, 4);
        let phi = JonqPlus::new(alpha, beta, f).unwrap();
        prop_assert_eq!(element_order(&phi), common::brute_force_order(&word(&phi), 24));
    }

    #[test]
    fn non_semisimple_has_infinite_order(seed in any::<u64>()) {
        let mut r = StdRng::seed_from_u64(seed);
        let n = [1u32, 2, 3, 4][r.gen_range(0..4)];
        let beta = cyclo_make(n, r.gen_range(0..n as i64));
        let m = r.gen_range(0..4u32);
        let mut f = common::small_poly(&mut r, 3, 0);
        f.add_term(m, &CycloNum::one());
        if f.coeff(m).is_zero() {
            f.add_term(m, &CycloNum::one());
        }
        let phi = JonqPlus::new(beta.pow(m as u64), beta, f).unwrap();
        prop_assert!(!is_semisimple(&phi));
        prop_assert_eq!(element_order(&phi), None);
        prop_assert!(conjugator_to_torus(&phi).is_err());
        prop_assert_eq!(common::brute_force_order(&word(&phi), 12), None);
    }

    #[test]
    fn involution_type_iff_order_two(seed in any::<u64>()) {
        let mut r = StdRng::seed_from_u64(seed);
        let sign = |r: &mut StdRng| if r.gen_bool(0.5) { CycloNum::one() } else { CycloNum::from_int(-1) };
        let (alpha, beta) = (sign(&mut r), sign(&mut r));
        let deg = r.gen_range(0..5);
        let phi = JonqPlus::new(alpha, beta, common::small_poly(&mut r, deg, 0)).unwrap();
        prop_assume!(!phi.is_identity());
        let order_two = common::brute_force_order(&word(&phi), 4) == Some(2);
        prop_assert_eq!(involution_type(&phi) != InvolutionType::NotInvolution, order_two);
    }

    #[test]
    fn normalizer_elements_commute_with_g(seed in any::<u64>(), d in 2u32..9) {
        let mut r = StdRng::seed_from_u64(seed);
        let e = loop {
            let e = r.gen_range(1..d);
            if num_integer::gcd(d, e) == 1 { break e; }
        };
        let s = make_surface(d, e).unwrap();
        let g = JonqPlus::from_torus(&s.generator());
        let phi = random_jonq(&mut r, 2);
        prop_assert_eq!(in_normalizer_plus(&phi, &s), commute(&phi, &g));
        let mut f = UniPoly::zero();
        for m in common::class_exponents(d, e) {
            f.add_term(m, &common::small_scalar(&mut r));
        }
        let member = JonqPlus::new(common::small_scalar(&mut r), CycloNum::from_int(3), f).unwrap();
        prop_assert!(in_normalizer_plus(&member, &s));
        prop_assert!(member.compose(&g) == g.compose(&member));
    }

    #[test]
    fn minus_side_mirrors_plus(seed in any::<u64>()) {
        let mut r = StdRng::seed_from_u64(seed);
        let (alpha, beta, f) = common::semisimple_torsion(&mut r, 4, 4);
        let p = JonqPlus::new(alpha, beta, f).unwrap();
        let m = JonqMinus::from_mirror(&p);
        prop_assert_eq!(m.mirror(), p.clone());
        prop_assert_eq!(m.element_order(), element_order(&p));
        let w = AutWord::single(m.to_elem()).unwrap();
        prop_assert_eq!(m.element_order(), common::brute_force_order(&w, 24));
        let c = AutWord::single(m.conjugator_to_torus().unwrap()).unwrap();
        let rho_w = AutWord::single(m.rho().to_elem()).unwrap();
        prop_assert!(compose(&compose(&torplane::planeaut::invert(&c), &w), &c).same_map(&rho_w));
    }
}

#[test]
fn simultaneous_conjugation_of_a_commuting_family() {
    let mut r = StdRng::seed_from_u64(11);
    for _ in 0..30 {
        let mu = UnipotentPlus { g: common::small_poly(&mut r, 4, 0) }.to_jonq();
        let torus: Vec<JonqPlus> = (0..3)
            .map(|_| JonqPlus::new(common::scalar_in(&mut r, 4), common::scalar_in(&mut r, 4), UniPoly::zero()).unwrap())
            .collect();
        let family: Vec<JonqPlus> = torus.iter().map(|t| mu.compose(t).compose(&mu.inverse())).collect();
        match simultaneous_conjugator(&family) {
            Ok(nu) => {
                let nu = nu.to_jonq();
                for p in &family {
                    let c = nu.inverse().compose(p).compose(&nu);
                    assert_eq!(c, JonqPlus::from_torus(&rho(p)));
                }
            }
            Err(e) => panic!("commuting semisimple family rejected: {e}"),
        }
    }
}

#[test]
fn non_commuting_family_is_rejected() {
    let a = JonqPlus::new(CycloNum::from_int(-1), CycloNum::one(), UniPoly::zero()).unwrap();
    let b = JonqPlus::new(CycloNum::from_int(-1), CycloNum::one(), UniPoly::from_terms([(1, CycloNum::one())])).unwrap();
    assert!(!commute(&a, &b));
    assert!(matches!(simultaneous_conjugator(&[a, b]), Err(torplane::Error::NotCommuting(_))));
}
