//! Reduced words in the amalgamated product Aff ∗_C BJ, where BJ is the
//! triangular group {(αx + f(y), βy + γ)} and C = Aff ∩ BJ is the group of
//! upper-triangular affine maps.
//!
//! Right coset representatives: σ_q = (y, x + qy) for Aff/C and
//! s_g = (x + g(y), y) with g ∈ y²k[y] for BJ/C.

use std::collections::VecDeque;

use super::{AutWord, ElemMap};
use crate::algebra::{CycloNum, UniPoly};
use crate::error::{Error, Result};

#[derive(Clone)]
pub(super) struct Aff {
    m: [[CycloNum; 2]; 2],
    b: [CycloNum; 2],
}

impl Aff {
    fn new(m: [[i64; 2]; 2]) -> Aff {
        let c = |v: i64| CycloNum::from_int(v);
        Aff {
            m: [[c(m[0][0]), c(m[0][1])], [c(m[1][0]), c(m[1][1])]],
            b: [CycloNum::zero(), CycloNum::zero()],
        }
    }

    fn swap() -> Aff {
        Aff::new([[0, 1], [1, 0]])
    }

    /// self ∘ o
    fn compose(&self, o: &Aff) -> Aff {
        let (a, b) = (&self.m, &o.m);
        let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        let t = |i: usize| &(&a[i][0] * &o.b[0] + &a[i][1] * &o.b[1]) + &self.b[i];
        Aff { m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]], b: [t(0), t(1)] }
    }

    fn in_c(&self) -> bool {
        self.m[1][0].is_zero()
    }

    fn is_identity(&self) -> bool {
        self.m[0][0].is_one()
            && self.m[1][1].is_one()
            && self.m[0][1].is_zero()
            && self.m[1][0].is_zero()
            && self.b[0].is_zero()
            && self.b[1].is_zero()
    }

    fn to_elem(&self) -> ElemMap {
        ElemMap::Affine { m: self.m.clone(), b: self.b.clone() }
    }

    fn shear(q: &CycloNum) -> Aff {
        let mut a = Aff::new([[1, 0], [0, 1]]);
        a.m[0][1] = q.clone();
        a
    }

    fn sigma(q: &CycloNum) -> Aff {
        let mut a = Aff::new([[0, 1], [1, 0]]);
        a.m[1][1] = q.clone();
        a
    }

    fn sigma_inv(q: &CycloNum) -> Aff {
        let mut a = Aff::new([[0, 1], [1, 0]]);
        a.m[0][0] = -q;
        a
    }
}

#[derive(Clone)]
pub(super) struct Bj {
    alpha: CycloNum,
    beta: CycloNum,
    gamma: CycloNum,
    f: UniPoly,
}

impl Bj {
    /// self ∘ o
    fn compose(&self, o: &Bj) -> Bj {
        let shift = UniPoly::from_terms([(1, o.beta.clone()), (0, o.gamma.clone())]);
        Bj {
            alpha: &self.alpha * &o.alpha,
            beta: &self.beta * &o.beta,
            gamma: &(&self.beta * &o.gamma) + &self.gamma,
            f: &o.f.scale(&self.alpha) + &self.f.compose(&shift),
        }
    }

    fn in_c(&self) -> bool {
        self.f.degree().map_or(true, |d| d <= 1)
    }

    fn unipotent(g: UniPoly) -> Bj {
        Bj { alpha: CycloNum::one(), beta: CycloNum::one(), gamma: CycloNum::zero(), f: g }
    }
}

/// (αx + cy + d, βy + γ).
#[derive(Clone)]
pub(super) struct Cm {
    alpha: CycloNum,
    c: CycloNum,
    d: CycloNum,
    beta: CycloNum,
    gamma: CycloNum,
}

impl Cm {
    fn identity() -> Cm {
        Cm {
            alpha: CycloNum::one(),
            c: CycloNum::zero(),
            d: CycloNum::zero(),
            beta: CycloNum::one(),
            gamma: CycloNum::zero(),
        }
    }

    fn to_aff(&self) -> Aff {
        Aff {
            m: [[self.alpha.clone(), self.c.clone()], [CycloNum::zero(), self.beta.clone()]],
            b: [self.d.clone(), self.gamma.clone()],
        }
    }

    fn to_bj(&self) -> Bj {
        Bj {
            alpha: self.alpha.clone(),
            beta: self.beta.clone(),
            gamma: self.gamma.clone(),
            f: UniPoly::from_terms([(1, self.c.clone()), (0, self.d.clone())]),
        }
    }

    fn from_aff(a: Aff) -> Cm {
        debug_assert!(a.in_c());
        let [[alpha, c], [_, beta]] = a.m;
        let [d, gamma] = a.b;
        Cm { alpha, c, d, beta, gamma }
    }

    fn from_bj(b: Bj) -> Cm {
        debug_assert!(b.in_c());
        Cm { c: b.f.coeff(1), d: b.f.coeff(0), alpha: b.alpha, beta: b.beta, gamma: b.gamma }
    }

    fn is_identity(&self) -> bool {
        self.to_aff().is_identity()
    }
}

enum Gen {
    A(Aff),
    B(Bj),
}

enum Rep {
    /// σ_q
    A(CycloNum),
    /// s_g
    B(UniPoly),
}

fn expand(e: &ElemMap) -> Vec<Gen> {
    match e {
        ElemMap::Affine { m, b } => vec![Gen::A(Aff { m: m.clone(), b: b.clone() })],
        ElemMap::Swap => vec![Gen::A(Aff::swap())],
        ElemMap::TriPlus { alpha, beta, f } => vec![Gen::B(Bj {
            alpha: alpha.clone(),
            beta: beta.clone(),
            gamma: CycloNum::zero(),
            f: f.clone(),
        })],
        // (αx, βy + f(x)) = τ ∘ (βx + f(y), αy) ∘ τ
        ElemMap::TriMinus { alpha, beta, f } => vec![
            Gen::A(Aff::swap()),
            Gen::B(Bj { alpha: beta.clone(), beta: alpha.clone(), gamma: CycloNum::zero(), f: f.clone() }),
            Gen::A(Aff::swap()),
        ],
    }
}

fn decompose_aff(h: Aff) -> (Cm, Option<CycloNum>) {
    if h.in_c() {
        return (Cm::from_aff(h), None);
    }
    let q = h.m[1][1].checked_div(&h.m[1][0]).expect("nonzero entry");
    let c = h.compose(&Aff::sigma_inv(&q));
    (Cm::from_aff(c), Some(q))
}

fn decompose_bj(h: Bj) -> (Cm, Option<UniPoly>) {
    let (low, high) = h.f.split_affine();
    if high.is_zero() {
        return (Cm::from_bj(h), None);
    }
    let g = high.scale(&h.alpha.inv().expect("nonzero diagonal"));
    let c = Cm { c: low.coeff(1), d: low.coeff(0), alpha: h.alpha, beta: h.beta, gamma: h.gamma };
    (c, Some(g))
}

/// The amalgam normal form c · t_1 ⋯ t_m of the map denoted by `factors`.
fn reduce(factors: &[ElemMap]) -> (Cm, Vec<Rep>) {
    let gens: Vec<Gen> = factors.iter().flat_map(expand).collect();
    let mut c = Cm::identity();
    let mut reps: VecDeque<Rep> = VecDeque::new();
    for g in gens.into_iter().rev() {
        match g {
            Gen::A(a) => {
                let mut h = a.compose(&c.to_aff());
                if h.in_c() {
                    c = Cm::from_aff(h);
                    continue;
                }
                if let Some(Rep::A(q)) = reps.front() {
                    h = h.compose(&Aff::sigma(q));
                    reps.pop_front();
                }
                let (c2, t) = decompose_aff(h);
                c = c2;
                if let Some(q) = t {
                    reps.push_front(Rep::A(q));
                }
            }
            Gen::B(b) => {
                let mut h = b.compose(&c.to_bj());
                if h.in_c() {
                    c = Cm::from_bj(h);
                    continue;
                }
                if let Some(Rep::B(g)) = reps.front() {
                    h = h.compose(&Bj::unipotent(g.clone()));
                    reps.pop_front();
                }
                let (c2, t) = decompose_bj(h);
                c = c2;
                if let Some(g) = t {
                    reps.push_front(Rep::B(g));
                }
            }
        }
    }
    (c, reps.into())
}

/// Writes c · t_1 ⋯ t_m as elementary maps. σ_q = τ ∘ (x + qy, y); the shear
/// is absorbed by the following s_g, and each s_g lying behind an odd number
/// of swaps is emitted in its τ-conjugated form.
fn present(c: Cm, reps: Vec<Rep>) -> Vec<ElemMap> {
    if reps.is_empty() {
        return if c.is_identity() { Vec::new() } else { vec![c.to_aff().to_elem()] };
    }
    if let [Rep::A(q)] = reps.as_slice() {
        return vec![c.to_aff().compose(&Aff::sigma(q)).to_elem()];
    }
    let mut out = Vec::new();
    let mut odd = false;
    let mut pending: Option<CycloNum> = None;
    for r in reps {
        match r {
            Rep::A(q) => {
                odd = !odd;
                pending = Some(q);
            }
            Rep::B(mut g) => {
                if let Some(q) = pending.take() {
                    g.add_term(1, &q);
                }
                out.push(if odd { ElemMap::minus(g) } else { ElemMap::plus(g) });
            }
        }
    }
    let mut tail = match pending {
        Some(q) => Aff::shear(&q),
        None => Aff::new([[1, 0], [0, 1]]),
    };
    if odd {
        tail = Aff::swap().compose(&tail);
    }
    if !tail.is_identity() {
        out.push(tail.to_elem());
    }
    match out.first_mut() {
        Some(ElemMap::TriPlus { alpha, beta, f }) if c.gamma.is_zero() => {
            let mut g = f.scale(&c.alpha);
            g.add_term(1, &c.c);
            g.add_term(0, &c.d);
            *f = g;
            *alpha = c.alpha;
            *beta = c.beta;
        }
        _ => {
            if !c.is_identity() {
                out.insert(0, c.to_aff().to_elem());
            }
        }
    }
    out
}

/// The canonical reduced word of the map denoted by `w`. Two words denote
/// the same map exactly when their normal forms are identical.
pub fn normal_form(w: &AutWord) -> AutWord {
    let (c, reps) = reduce(w.factors());
    let out = AutWord::from_factors_unchecked(present(c, reps));
    if let Some(comps) = w.comps.get() {
        let _ = out.comps.set(comps.clone());
    }
    out
}

/// Product of the degrees of the triangular letters of a reduced word.
pub fn word_degree(w: &AutWord) -> Result<u32> {
    // letters after merging adjacent affine generators
    let mut letters: Vec<Gen> = Vec::new();
    for g in w.factors().iter().flat_map(expand) {
        match (letters.last_mut(), g) {
            (Some(Gen::A(prev)), Gen::A(a)) => *prev = prev.compose(&a),
            (_, g) => letters.push(g),
        }
    }
    let mut degree = 1u32;
    let n = letters.len();
    for (i, g) in letters.iter().enumerate() {
        match g {
            Gen::A(a) => {
                if i > 0 && i + 1 < n && a.in_c() {
                    return Err(Error::NotReduced(format!(
                        "triangular factors around position {i} are separated by a triangular affine map"
                    )));
                }
            }
            Gen::B(b) => {
                if let Some(Gen::B(_)) = letters.get(i + 1) {
                    return Err(Error::NotReduced(format!("adjacent factors of the same side at position {i}")));
                }
                match b.f.degree() {
                    Some(d) if d >= 2 => degree *= d,
                    _ => return Err(Error::NotReduced("triangular factor of degree below 2".into())),
                }
            }
        }
    }
    Ok(degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::cyclo_make;

    fn ty(k: u32) -> UniPoly {
        UniPoly::monomial(CycloNum::one(), k)
    }

    fn word(f: Vec<ElemMap>) -> AutWord {
        AutWord::new(f).unwrap()
    }

    #[test]
    fn degrees() {
        let w = word(vec![ElemMap::minus(ty(3)), ElemMap::plus(ty(2))]);
        assert_eq!(word_degree(&w), Ok(6));
        assert_eq!(word_degree(&word(vec![ElemMap::plus(ty(5))])), Ok(5));
        assert_eq!(word_degree(&AutWord::identity()), Ok(1));
        let bad = word(vec![ElemMap::plus(ty(2)), ElemMap::plus(ty(3))]);
        assert_eq!(word_degree(&bad).unwrap_err().code(), "NotReduced");
        let bad = word(vec![ElemMap::minus(ty(2)), ElemMap::minus(ty(3))]);
        assert_eq!(word_degree(&bad).unwrap_err().code(), "NotReduced");
        let bad = word(vec![ElemMap::plus(ty(1))]);
        assert_eq!(word_degree(&bad).unwrap_err().code(), "NotReduced");
    }

    #[test]
    fn cancellation() {
        let w = word(vec![ElemMap::plus(ty(2)), ElemMap::plus(-&ty(2))]);
        assert!(normal_form(&w).is_empty());
    }

    #[test]
    fn merge_same_side() {
        let w = word(vec![
            ElemMap::plus(ty(2)),
            ElemMap::tri_plus(CycloNum::from_int(2), CycloNum::one(), ty(2)).unwrap(),
        ]);
        let n = normal_form(&w);
        let expect = ElemMap::tri_plus(CycloNum::from_int(2), CycloNum::one(), ty(2).scale(&CycloNum::from_int(2)))
            .unwrap();
        assert_eq!(n.factors(), &[expect]);
        assert!(n.same_map(&w));
    }

    #[test]
    fn alternating_word_is_fixed() {
        let w = word(vec![ElemMap::minus(ty(3)), ElemMap::plus(ty(2))]);
        assert_eq!(normal_form(&w), w);
    }

    #[test]
    fn swaps_and_affine_parts() {
        let z = cyclo_make(4, 1);
        let w = word(vec![
            ElemMap::Swap,
            ElemMap::tri_plus(z.clone(), CycloNum::from_int(3), &ty(3) + &ty(1)).unwrap(),
            ElemMap::affine(
                [[CycloNum::from_int(1), CycloNum::from_int(2)], [CycloNum::from_int(5), z.clone()]],
                [CycloNum::from_ratio(1, 2), CycloNum::zero()],
            )
            .unwrap(),
            ElemMap::tri_minus(CycloNum::one(), z, ty(2)).unwrap(),
            ElemMap::Swap,
        ]);
        let n = normal_form(&w);
        assert!(n.same_map(&w));
        assert_eq!(normal_form(&n), n);
        let fresh = AutWord::new(n.factors().to_vec()).unwrap();
        assert!(fresh.same_map(&w));
    }

    #[test]
    fn purely_affine_is_single_factor() {
        let w = word(vec![ElemMap::Swap, ElemMap::plus(UniPoly::from_terms([(1, CycloNum::from_int(3))]))]);
        let n = normal_form(&w);
        assert_eq!(n.len(), 1);
        assert!(matches!(n.factors()[0], ElemMap::Affine { .. }));
        assert!(AutWord::new(n.factors().to_vec()).unwrap().same_map(&w));
        assert!(normal_form(&word(vec![ElemMap::Swap, ElemMap::Swap])).is_empty());
    }
}
