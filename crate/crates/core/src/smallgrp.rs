//! Finite subgroups of GL(2) over cyclotomic scalars and their invariants.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_integer::Integer;
use num_rational::BigRational;

use crate::algebra::linalg::{kernel, rank, rref};
use crate::algebra::{BiPoly, CycloNum, UniPoly};
use crate::error::{Error, Result};
use crate::toric::CyclicSurf;

/// A 2×2 matrix acting on column vectors (x, y).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2(pub [[CycloNum; 2]; 2]);

impl Mat2 {
    pub fn new(a: CycloNum, b: CycloNum, c: CycloNum, d: CycloNum) -> Mat2 {
        Mat2([[a, b], [c, d]])
    }

    pub fn from_ints(m: [[i64; 2]; 2]) -> Mat2 {
        Mat2(m.map(|r| r.map(CycloNum::from_int)))
    }

    pub fn identity() -> Mat2 {
        Mat2::diag(CycloNum::one(), CycloNum::one())
    }

    pub fn diag(a: CycloNum, d: CycloNum) -> Mat2 {
        Mat2::new(a, CycloNum::zero(), CycloNum::zero(), d)
    }

    pub fn scalar(l: CycloNum) -> Mat2 {
        Mat2::diag(l.clone(), l)
    }

    pub fn det(&self) -> CycloNum {
        let m = &self.0;
        &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0])
    }

    pub fn trace(&self) -> CycloNum {
        &self.0[0][0] + &self.0[1][1]
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat2::identity()
    }

    pub fn inverse(&self) -> Result<Mat2> {
        let inv = self.det().inv()?;
        let m = &self.0;
        Ok(Mat2::new(&m[1][1] * &inv, -&(&m[0][1] * &inv), -&(&m[1][0] * &inv), &m[0][0] * &inv))
    }

    /// f ∘ m, i.e. f(m00 x + m01 y, m10 x + m11 y).
    pub fn act(&self, f: &BiPoly) -> BiPoly {
        let m = &self.0;
        f.linear_subst([[&m[0][0], &m[0][1]], [&m[1][0], &m[1][1]]])
    }

    /// m · v for a direction vector.
    pub fn apply_vec(&self, v: &[CycloNum; 2]) -> [CycloNum; 2] {
        let m = &self.0;
        [&(&m[0][0] * &v[0]) + &(&m[0][1] * &v[1]), &(&m[1][0] * &v[0]) + &(&m[1][1] * &v[1])]
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;

    fn mul(self, o: &Mat2) -> Mat2 {
        let (a, b) = (&self.0, &o.0);
        let e = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        Mat2([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.0;
        write!(f, "[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

/// A finite matrix group given by the full list of its elements.
#[derive(Clone, Debug)]
pub struct FinGroup {
    elements: Vec<Mat2>,
}

impl FinGroup {
    pub fn elements(&self) -> &[Mat2] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, m: &Mat2) -> bool {
        self.elements.contains(m)
    }

    pub fn trivial() -> FinGroup {
        FinGroup { elements: vec![Mat2::identity()] }
    }
}

/// The group generated by `gens`, failing once it exceeds `bound` elements.
pub fn group_closure(gens: &[Mat2], bound: usize) -> Result<FinGroup> {
    for g in gens {
        if g.det().is_zero() {
            return Err(Error::BadParameters(format!("singular generator {g}")));
        }
    }
    let mut elements = vec![Mat2::identity()];
    let mut frontier = 0;
    while frontier < elements.len() {
        let h = elements[frontier].clone();
        frontier += 1;
        for g in gens {
            let p = &h * g;
            if !elements.contains(&p) {
                if elements.len() >= bound {
                    return Err(Error::NotFiniteWithinBound(bound));
                }
                elements.push(p);
            }
        }
    }
    Ok(FinGroup { elements })
}

/// The cyclic group G_{d,e} = ⟨diag(ζ_d^e, ζ_d)⟩.
pub fn cyclic_group(s: &CyclicSurf) -> FinGroup {
    let g = s.generator();
    group_closure(&[Mat2::diag(g.alpha, g.beta)], s.d as usize).expect("cyclic of order d")
}

/// Generators of the quaternion group Q8: [[0,1],[−1,0]] and [[0,i],[i,0]].
pub fn q8_generators() -> Vec<Mat2> {
    let i = CycloNum::root_of_unity(4, 1);
    vec![Mat2::from_ints([[0, 1], [-1, 0]]), Mat2::new(CycloNum::zero(), i.clone(), i, CycloNum::zero())]
}

/// A non-identity matrix of finite order fixing a line pointwise. In
/// dimension two this means rank(m − I) = 1 and det m a root of unity other
/// than 1 (det m = 1 would make m unipotent).
pub fn is_pseudoreflection(m: &Mat2) -> bool {
    if m.is_identity() {
        return false;
    }
    let one = CycloNum::one();
    let a = &m.0;
    let shifted = Mat2::new(&a[0][0] - &one, a[0][1].clone(), a[1][0].clone(), &a[1][1] - &one);
    let det = m.det();
    shifted.det().is_zero() && !det.is_one() && det.root_order().is_some()
}

pub fn is_small(g: &FinGroup) -> bool {
    !g.elements.iter().any(is_pseudoreflection)
}

pub fn is_abelian(g: &FinGroup) -> bool {
    let el = &g.elements;
    el.iter().enumerate().all(|(i, a)| el[i + 1..].iter().all(|b| a * b == b * a))
}

/// (1/|G|) Σ_g f ∘ g.
pub fn reynolds(f: &BiPoly, g: &FinGroup) -> BiPoly {
    let mut acc = BiPoly::zero();
    for m in &g.elements {
        acc = &acc + &m.act(f);
    }
    acc.scale(&CycloNum::from_ratio(1, g.order() as i64))
}

pub fn is_invariant(f: &BiPoly, g: &FinGroup) -> bool {
    g.elements.iter().all(|m| m.act(f) == *f)
}

/// Monomial exponents of total degree k, in printing order (x-degree
/// descending).
fn monomials_of_degree(k: u32) -> Vec<(u32, u32)> {
    (0..=k).rev().map(|i| (i, k - i)).collect()
}

fn coeff_row(f: &BiPoly, monos: &[(u32, u32)]) -> Vec<CycloNum> {
    monos.iter().map(|&(i, j)| f.coeff(i, j)).collect()
}

fn from_row(row: &[CycloNum], monos: &[(u32, u32)]) -> BiPoly {
    BiPoly::from_terms(monos.iter().copied().zip(row.iter().cloned()))
}

/// For each degree 1..=degmax, a basis of the homogeneous invariants, in
/// reduced echelon form with respect to the monomial order.
pub fn invariant_basis_up_to(g: &FinGroup, degmax: u32) -> BTreeMap<u32, Vec<BiPoly>> {
    let mut out = BTreeMap::new();
    for k in 1..=degmax {
        let monos = monomials_of_degree(k);
        let mut rows: Vec<Vec<CycloNum>> = monos
            .iter()
            .map(|&(i, j)| coeff_row(&reynolds(&BiPoly::monomial(CycloNum::one(), i, j), g), &monos))
            .collect();
        let r = rref(&mut rows).len();
        out.insert(k, rows[..r].iter().map(|row| from_row(row, &monos)).collect());
    }
    out
}

/// Whether the homogeneous polynomial f lies in the span of `basis`.
pub fn in_span(f: &BiPoly, basis: &[BiPoly]) -> bool {
    let Some(k) = f.total_degree() else { return true };
    let monos = monomials_of_degree(k);
    let mut rows: Vec<Vec<CycloNum>> = basis.iter().map(|b| coeff_row(b, &monos)).collect();
    let r0 = rank(&rows);
    rows.push(coeff_row(f, &monos));
    rank(&rows) == r0
}

/// A linear dependency Σ c_m f^m = 0 among monomials in the invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    /// (exponent vector, coefficient) pairs with nonzero coefficients.
    pub terms: Vec<(Vec<u32>, CycloNum)>,
}

impl Relation {
    /// Substitutes the invariants back in.
    pub fn expand(&self, invariants: &[BiPoly]) -> BiPoly {
        let mut acc = BiPoly::zero();
        for (e, c) in &self.terms {
            acc = &acc + &monomial_in(invariants, e).scale(c);
        }
        acc
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (e, c) in &self.terms {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("f{}", i + 1) } else { format!("f{}^{}", i + 1, k) })
                .collect();
            parts.extend(c.terms_with_monomial(&mono.join("*")));
        }
        f.write_str(&crate::algebra::cyclo::join_terms(parts))?;
        f.write_str(" = 0")
    }
}

fn monomial_in(invariants: &[BiPoly], e: &[u32]) -> BiPoly {
    let mut p = BiPoly::one();
    for (f, &k) in invariants.iter().zip(e) {
        if k > 0 {
            p = &p * &f.pow(k);
        }
    }
    p
}

/// Exponent vectors e with Σ e_i·deg_i = target, last index varying slowest
/// and largest first.
fn weighted_exponents(degs: &[u32], target: u32) -> Vec<Vec<u32>> {
    fn rec(degs: &[u32], target: u32, idx: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if idx == usize::MAX {
            if target == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let d = degs[idx];
        for k in (0..=target / d).rev() {
            cur[idx] = k;
            let next = if idx == 0 { usize::MAX } else { idx - 1 };
            rec(degs, target - k * d, next, cur, out);
        }
        cur[idx] = 0;
    }
    let mut out = Vec::new();
    if degs.is_empty() || degs.contains(&0) {
        return out;
    }
    let mut cur = vec![0; degs.len()];
    rec(degs, target, degs.len() - 1, &mut cur, &mut out);
    out
}

/// Searches the products of the invariants of total degree
/// `weighted_degree` for a linear dependency. The first coefficient of the
/// returned relation is 1.
pub fn find_relation(invariants: &[BiPoly], weighted_degree: u32) -> Result<Option<Relation>> {
    let mut degs = Vec::new();
    for f in invariants {
        if !f.is_homogeneous() || f.is_zero() {
            return Err(Error::NotHomogeneous);
        }
        degs.push(f.total_degree().unwrap());
    }
    let exps = weighted_exponents(&degs, weighted_degree);
    if exps.len() < 2 {
        return Ok(None);
    }
    let monos = monomials_of_degree(weighted_degree);
    let cols: Vec<Vec<CycloNum>> = exps.iter().map(|e| coeff_row(&monomial_in(invariants, e), &monos)).collect();
    let m: Vec<Vec<CycloNum>> = (0..monos.len()).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    let Some(v) = kernel(&m, exps.len()).into_iter().next() else {
        return Ok(None);
    };
    let lead = v.iter().find(|c| !c.is_zero()).unwrap().inv()?;
    let terms = exps.into_iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(e, c)| (e, &c * &lead)).collect();
    Ok(Some(Relation { terms }))
}

/// Whether h g h⁻¹ ∈ G for every g ∈ G.
pub fn in_normalizer(h: &Mat2, g: &FinGroup) -> Result<bool> {
    let hi = h.inverse()?;
    Ok(g.elements.iter().all(|m| g.contains(&(&(h * m) * &hi))))
}

/// Controls the root search in Q(ζ_L).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LineSearch {
    /// The working cyclotomic order L.
    pub order: u32,
    /// Candidates are ζ_L^k · p/q with 1 ≤ p, q ≤ height.
    pub height: u32,
}

impl Default for LineSearch {
    fn default() -> Self {
        LineSearch { order: 8, height: 8 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinesResult {
    /// Directions (1, s) or (0, 1), one per line.
    pub directions: Vec<[CycloNum; 2]>,
    /// f is zero, so every line qualifies.
    pub degenerate: bool,
    /// The found lines account for every linear factor of f.
    pub complete: bool,
    /// The set of lines is permuted by the group.
    pub group_stable: bool,
}

/// Lines L through the origin on which `f_sing` vanishes.
pub fn smooth_lines_on_quotient(g: &FinGroup, f_sing: &BiPoly) -> Result<LinesResult> {
    smooth_lines_with(g, f_sing, LineSearch::default())
}

pub fn smooth_lines_with(g: &FinGroup, f_sing: &BiPoly, search: LineSearch) -> Result<LinesResult> {
    if f_sing.is_zero() {
        return Ok(LinesResult { directions: Vec::new(), degenerate: true, complete: true, group_stable: true });
    }
    if !f_sing.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let n = f_sing.total_degree().unwrap();
    // dehomogenize at x = 1: p(s) = f(1, s)
    let mut p = UniPoly::from_terms(f_sing.terms().map(|((_, j), c)| (j, c.clone())));
    let mut directions = Vec::new();
    let mut found = 0;
    let at_infinity = n - p.degree().unwrap_or(0);
    if at_infinity > 0 {
        found += at_infinity;
    }
    let mut roots: Vec<CycloNum> = Vec::new();
    let try_root = |s: CycloNum, p: &mut UniPoly, roots: &mut Vec<CycloNum>, found: &mut u32| {
        if roots.contains(&s) {
            return;
        }
        let mut hit = false;
        while p.degree().unwrap_or(0) > 0 && p.eval(&s).is_zero() {
            *p = deflate(p, &s);
            *found += 1;
            hit = true;
        }
        if hit {
            roots.push(s);
        }
    };
    try_root(CycloNum::zero(), &mut p, &mut roots, &mut found);
    'search: for k in 0..search.order {
        let z = CycloNum::root_of_unity(search.order, k as i64);
        for den in 1..=search.height {
            for num in 1..=search.height {
                if num.gcd(&den) != 1 {
                    continue;
                }
                if p.degree().unwrap_or(0) == 0 {
                    break 'search;
                }
                let s = z.scale(&BigRational::new(num.into(), den.into()));
                try_root(s, &mut p, &mut roots, &mut found);
            }
        }
    }
    let root0 = roots.iter().position(|r| r.is_zero());
    if let Some(i) = root0 {
        directions.push([CycloNum::one(), roots.remove(i)]);
    }
    if at_infinity > 0 {
        directions.push([CycloNum::zero(), CycloNum::one()]);
    }
    roots.sort_by(|a, b| a.canonical_cmp(b));
    directions.extend(roots.into_iter().map(|s| [CycloNum::one(), s]));
    let group_stable = g.elements.iter().all(|m| {
        directions.iter().all(|v| {
            let w = normalize_direction(&m.apply_vec(v));
            directions.contains(&w)
        })
    });
    Ok(LinesResult { directions, degenerate: false, complete: found == n, group_stable })
}

/// Scales a nonzero vector to (1, s) or (0, 1).
pub fn normalize_direction(v: &[CycloNum; 2]) -> [CycloNum; 2] {
    if v[0].is_zero() {
        [CycloNum::zero(), CycloNum::one()]
    } else {
        [CycloNum::one(), &v[1] / &v[0]]
    }
}

/// p(s) / (s − r) for a root r, by synthetic division.
fn deflate(p: &UniPoly, r: &CycloNum) -> UniPoly {
    let n = p.degree().unwrap();
    let mut out = UniPoly::zero();
    let mut carry = CycloNum::zero();
    for k in (1..=n).rev() {
        carry = &p.coeff(k) + &(&carry * r);
        out.add_term(k - 1, &carry);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_bipoly, DEFAULT_MAX_ORDER};
    use crate::toric::make_surface;

    fn bp(s: &str) -> BiPoly {
        parse_bipoly(s, DEFAULT_MAX_ORDER).unwrap()
    }

    fn q8() -> FinGroup {
        group_closure(&q8_generators(), 64).unwrap()
    }

    #[test]
    fn closures() {
        let g54 = cyclic_group(&make_surface(5, 4).unwrap());
        assert_eq!(g54.order(), 5);
        assert_eq!(q8().order(), 8);
        let r = group_closure(&[Mat2::diag(CycloNum::from_int(2), CycloNum::one())], 100);
        assert_eq!(r.unwrap_err(), Error::NotFiniteWithinBound(100));
        let g = q8();
        for a in g.elements() {
            assert!(g.contains(&a.inverse().unwrap()));
            for b in g.elements() {
                assert!(g.contains(&(a * b)));
            }
        }
    }

    #[test]
    fn pseudoreflections() {
        let refl = Mat2::diag(CycloNum::one(), CycloNum::from_int(-1));
        assert!(is_pseudoreflection(&refl));
        let g = make_surface(5, 4).unwrap().generator();
        assert!(!is_pseudoreflection(&Mat2::diag(g.alpha, g.beta)));
        assert!(!is_pseudoreflection(&Mat2::identity()));
        assert!(!is_pseudoreflection(&Mat2::from_ints([[1, 1], [0, 1]])));
        assert!(!is_pseudoreflection(&Mat2::diag(CycloNum::one(), CycloNum::from_int(2))));
    }

    #[test]
    fn smallness_and_commutativity() {
        let g54 = cyclic_group(&make_surface(5, 4).unwrap());
        assert!(is_small(&g54) && is_abelian(&g54));
        let refl = group_closure(&[Mat2::diag(CycloNum::one(), CycloNum::from_int(-1))], 8).unwrap();
        assert!(!is_small(&refl));
        assert!(is_small(&q8()) && !is_abelian(&q8()));
        assert!(is_abelian(&FinGroup::trivial()));
    }

    #[test]
    fn averaging() {
        let g = q8();
        assert_eq!(reynolds(&bp("x^4 + y^4"), &g), bp("x^4 + y^4"));
        assert!(reynolds(&bp("x"), &g).is_zero());
        let g54 = cyclic_group(&make_surface(5, 4).unwrap());
        assert_eq!(reynolds(&bp("x*y"), &g54), bp("x*y"));
        let r = reynolds(&bp("x^3*y^3 + x^2"), &g);
        assert!(is_invariant(&r, &g));
        assert_eq!(reynolds(&r, &g), r);
    }

    #[test]
    fn invariant_bases() {
        let b = invariant_basis_up_to(&q8(), 6);
        for k in 1..=3 {
            assert!(b[&k].is_empty());
        }
        assert_eq!(b[&4], vec![bp("x^4 + y^4"), bp("x^2*y^2")]);
        assert!(in_span(&bp("x^5*y - x*y^5"), &b[&6]));
        let t = invariant_basis_up_to(&FinGroup::trivial(), 1);
        assert_eq!(t[&1], vec![bp("x"), bp("y")]);
    }

    #[test]
    fn relations() {
        let fs = [bp("x^4 + y^4"), bp("x^2*y^2"), bp("x^5*y - x*y^5")];
        let rel = find_relation(&fs, 12).unwrap().unwrap();
        assert!(rel.expand(&fs).is_zero());
        assert_eq!(rel.to_string(), "f3^2 + 4*f2^3 - f1^2*f2 = 0");
        assert!(find_relation(&[bp("x"), bp("y")], 5).unwrap().is_none());
        let a1 = [bp("y^2"), bp("x*y"), bp("x^2")];
        let rel = find_relation(&a1, 4).unwrap().unwrap();
        assert!(rel.expand(&a1).is_zero());
        assert_eq!(rel.terms.len(), 2);
        assert!(find_relation(&[bp("x + 1")], 2).is_err());
    }

    #[test]
    fn normalizers() {
        let g = q8();
        assert!(in_normalizer(&Mat2::scalar(CycloNum::from_int(3)), &g).unwrap());
        assert!(in_normalizer(&Mat2::from_ints([[0, 1], [1, 0]]), &g).unwrap());
        assert!(!in_normalizer(&Mat2::diag(CycloNum::one(), CycloNum::from_int(2)), &g).unwrap());
    }

    #[test]
    fn lines() {
        let g = q8();
        let res = smooth_lines_on_quotient(&g, &bp("x^5*y - x*y^5")).unwrap();
        assert!(res.complete && res.group_stable && !res.degenerate);
        assert_eq!(res.directions.len(), 6);
        let i = CycloNum::root_of_unity(4, 1);
        let expect = [
            [CycloNum::one(), CycloNum::zero()],
            [CycloNum::zero(), CycloNum::one()],
            [CycloNum::one(), CycloNum::one()],
            [CycloNum::one(), CycloNum::from_int(-1)],
            [CycloNum::one(), i.clone()],
            [CycloNum::one(), -&i],
        ];
        for e in &expect {
            assert!(res.directions.contains(e), "missing {e:?}");
        }
        let res = smooth_lines_on_quotient(&g, &bp("x^4 + y^4")).unwrap();
        assert_eq!(res.directions.len(), 4);
        assert!(res.complete);
        for d in &res.directions {
            assert_eq!(d[1].pow(4), CycloNum::from_int(-1));
        }
        assert!(smooth_lines_on_quotient(&g, &BiPoly::zero()).unwrap().degenerate);
        assert_eq!(smooth_lines_on_quotient(&g, &bp("x + y^2")).unwrap_err(), Error::NotHomogeneous);
    }
}
