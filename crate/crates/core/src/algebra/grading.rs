use super::unipoly::UniPoly;

/// The Z/dZ grading of k[t]: `parts[i]` collects the terms t^k with k ≡ i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedParts {
    pub modulus: u32,
    pub parts: Vec<UniPoly>,
}

impl GradedParts {
    pub fn sum(&self) -> UniPoly {
        self.parts.iter().fold(UniPoly::zero(), |acc, p| &acc + p)
    }
}

pub fn grade_decompose(f: &UniPoly, d: u32) -> GradedParts {
    assert!(d >= 1, "grading modulus must be positive");
    let mut parts = vec![UniPoly::zero(); d as usize];
    for (k, c) in f.terms() {
        parts[(k % d) as usize].add_term(k, c);
    }
    GradedParts { modulus: d, parts }
}

/// Whether every exponent of `f` is congruent to `i` mod `d`. The zero
/// polynomial lies in every class.
pub fn in_grading_class(f: &UniPoly, d: u32, i: u32) -> bool {
    f.support().all(|k| k % d == i % d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::cyclo::CycloNum;

    fn t(k: u32) -> UniPoly {
        UniPoly::monomial(CycloNum::one(), k)
    }

    #[test]
    fn odd_polynomial_is_one_class() {
        let f = &t(3) + &t(1);
        let g = grade_decompose(&f, 2);
        assert_eq!(g.parts[1], f);
        assert!(g.parts[0].is_zero());
    }

    #[test]
    fn mod_three() {
        let f = &t(5) + &t(2).scale(&CycloNum::from_int(2));
        let g = grade_decompose(&f, 3);
        assert_eq!(g.parts[2], f);
        assert!(g.parts[0].is_zero() && g.parts[1].is_zero());
        assert!(grade_decompose(&UniPoly::zero(), 7).parts.iter().all(UniPoly::is_zero));
    }

    #[test]
    fn class_membership() {
        assert!(in_grading_class(&t(2), 3, 2));
        assert!(in_grading_class(&-&t(2), 3, 2));
        assert!(!in_grading_class(&(&t(2) + &t(1)), 3, 2));
    }
}
