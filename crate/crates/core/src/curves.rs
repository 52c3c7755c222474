//! Canonical forms of acyclic plane curves, their stabilizers, and
//! rectification of parameterized embedded lines.

use std::fmt;

use num_integer::Integer;

use crate::algebra::{in_grading_class, BiPoly, CycloNum, UniPoly};
use crate::error::{Error, Result};
use crate::planeaut::{AutWord, ElemMap};
use crate::toric::CyclicSurf;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormKind {
    /// y^{ε_y} p(x) = 0 with p having simple roots.
    Par1,
    /// x^{ε_x} y^{ε_y} ∏ (y^a − κ_i x^b) = 0.
    Par2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveForm {
    pub kind: FormKind,
    pub eps_x: bool,
    pub eps_y: bool,
    pub a: u32,
    pub b: u32,
    pub kappas: Vec<CycloNum>,
    pub p_roots: Vec<CycloNum>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CurveType {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

impl fmt::Display for CurveType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CurveType::I => "I",
            CurveType::II => "II",
            CurveType::III => "III",
            CurveType::IV => "IV",
            CurveType::V => "V",
            CurveType::VI => "VI",
        };
        f.write_str(s)
    }
}

fn distinct(v: &[CycloNum]) -> bool {
    v.iter().enumerate().all(|(i, a)| v[i + 1..].iter().all(|b| a != b))
}

impl CurveForm {
    pub fn par1(eps_y: bool, p_roots: Vec<CycloNum>) -> Result<CurveForm> {
        let c = CurveForm { kind: FormKind::Par1, eps_x: false, eps_y, a: 0, b: 0, kappas: Vec::new(), p_roots };
        c.validate()?;
        Ok(c)
    }

    pub fn par2(eps_x: bool, eps_y: bool, a: u32, b: u32, kappas: Vec<CycloNum>) -> Result<CurveForm> {
        let c = CurveForm { kind: FormKind::Par2, eps_x, eps_y, a, b, kappas, p_roots: Vec::new() };
        c.validate()?;
        Ok(c)
    }

    /// The axis C_y = {y = 0}.
    pub fn axis_y() -> CurveForm {
        CurveForm::par1(true, Vec::new()).unwrap()
    }

    /// C_{a,b} = {y^a = x^b}.
    pub fn cab(a: u32, b: u32) -> Result<CurveForm> {
        CurveForm::par2(false, false, a, b, vec![CycloNum::one()])
    }

    pub fn validate(&self) -> Result<()> {
        match self.kind {
            FormKind::Par1 => {
                if self.eps_x || !self.kappas.is_empty() {
                    return Err(Error::InvalidForm("par1 takes only eps_y and roots".into()));
                }
                if !distinct(&self.p_roots) {
                    return Err(Error::InvalidForm("roots of p must be simple".into()));
                }
            }
            FormKind::Par2 => {
                if self.a == 0 || self.b == 0 || self.a.gcd(&self.b) != 1 {
                    return Err(Error::InvalidForm(format!("need a, b >= 1 coprime, got ({}, {})", self.a, self.b)));
                }
                if self.kappas.is_empty() {
                    return Err(Error::InvalidForm("par2 needs at least one kappa".into()));
                }
                if self.kappas.iter().any(|k| k.is_zero()) || !distinct(&self.kappas) {
                    return Err(Error::InvalidForm("kappas must be distinct and nonzero".into()));
                }
                if !self.p_roots.is_empty() {
                    return Err(Error::InvalidForm("par2 takes no roots".into()));
                }
            }
        }
        Ok(())
    }

    pub fn defining_polynomial(&self) -> BiPoly {
        let mut p = BiPoly::one();
        if self.eps_x {
            p = &p * &BiPoly::x();
        }
        if self.eps_y {
            p = &p * &BiPoly::y();
        }
        match self.kind {
            FormKind::Par1 => {
                for r in &self.p_roots {
                    p = &p * &(&BiPoly::x() - &BiPoly::constant(r.clone()));
                }
            }
            FormKind::Par2 => {
                let ya = BiPoly::monomial(CycloNum::one(), 0, self.a);
                for k in &self.kappas {
                    p = &p * &(&ya - &BiPoly::monomial(k.clone(), self.b, 0));
                }
            }
        }
        p
    }
}

/// Assigns the type I–VI. Forms describing a disconnected or empty curve are
/// rejected. With a = b = 1 the axes are counted together with the lines
/// y = κx. With b = 1 < a the roles of x and y are exchanged.
pub fn classify_form(c: &CurveForm) -> Result<CurveType> {
    c.validate()?;
    let r = c.kappas.len() as u32;
    match c.kind {
        FormKind::Par1 => match (c.eps_y, c.p_roots.len()) {
            (false, 0) => Err(Error::InvalidForm("empty curve".into())),
            (false, 1) | (true, 0) => Ok(CurveType::I),
            (false, _) => Err(Error::InvalidForm("parallel lines are disconnected".into())),
            (true, 1) => Ok(CurveType::II),
            (true, _) => Ok(CurveType::III),
        },
        FormKind::Par2 => {
            let (a, b) = (c.a, c.b);
            if a == 1 && b == 1 {
                return Ok(match r + c.eps_x as u32 + c.eps_y as u32 {
                    1 => CurveType::I,
                    2 => CurveType::II,
                    _ => CurveType::IV,
                });
            }
            if a > 1 && b > 1 {
                return Ok(CurveType::VI);
            }
            // a = 1 < b: the tangent axis is C_y; for b = 1 < a it is C_x.
            let (tangent, transversal) = if a == 1 { (c.eps_y, c.eps_x) } else { (c.eps_x, c.eps_y) };
            Ok(match (tangent as u32 + r, transversal) {
                (1, false) => CurveType::I,
                (1, true) => CurveType::II,
                _ => CurveType::V,
            })
        }
    }
}

/// z ↦ λz + μ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineAffine {
    pub lambda: CycloNum,
    pub mu: CycloNum,
}

impl LineAffine {
    pub fn apply(&self, z: &CycloNum) -> CycloNum {
        &(&self.lambda * z) + &self.mu
    }
}

/// All affine maps of the line preserving the finite set `k`, found by
/// trying every image of the first two points. Needs at least two points.
pub fn affine_symmetries(k: &[CycloNum]) -> Option<Vec<LineAffine>> {
    if k.len() < 2 || !distinct(k) {
        return None;
    }
    let (k0, k1) = (&k[0], &k[1]);
    let den = k1 - k0;
    let mut out = Vec::new();
    for p in k {
        for q in k {
            if p == q {
                continue;
            }
            let lambda = &(q - p) / &den;
            let mu = p - &(&lambda * k0);
            let m = LineAffine { lambda, mu };
            if k.iter().all(|z| k.contains(&m.apply(z))) {
                out.push(m);
            }
        }
    }
    Some(out)
}

/// Symbolic description of Stab(C) in Aut(A²).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StabDescriptor {
    JonqPlus,
    JonqMinus,
    /// The one-parameter subgroup T_{a,b} = {(t^a x, t^b y)}.
    TorusSub { a: u32, b: u32 },
    /// A rank one quasitorus inside T with identity component T_{a,b}.
    QuasitorusRank1 { a: u32, b: u32 },
    /// N(T) in GL(2).
    NormalizerOfTorus,
    /// A subgroup of GL(2) containing the scalars with finite index.
    FiniteExtOfScalars,
    /// A subgroup of T, a finite extension of T_{0,1}; `stab_k` lists the
    /// affine symmetries of the root set acting on x.
    FiniteExtOfSubtorus { stab_k: Vec<LineAffine> },
    /// T_{0,1} · U⁻ · Stab(K) for the parallel lines {p(x) = 0}.
    ProductForm { stab_k: Vec<LineAffine> },
    /// Stab(C) = by⁻¹ ∘ inner ∘ by, where `by` moves C to canonical position.
    Conjugate { inner: Box<StabDescriptor>, by: AutWord },
}

impl StabDescriptor {
    pub fn tag(&self) -> &'static str {
        match self {
            StabDescriptor::JonqPlus => "JonqPlus",
            StabDescriptor::JonqMinus => "JonqMinus",
            StabDescriptor::TorusSub { .. } => "TorusSub",
            StabDescriptor::QuasitorusRank1 { .. } => "QuasitorusRank1",
            StabDescriptor::NormalizerOfTorus => "NormalizerOfTorus",
            StabDescriptor::FiniteExtOfScalars => "FiniteExtOfScalars",
            StabDescriptor::FiniteExtOfSubtorus { .. } => "FiniteExtOfSubtorus",
            StabDescriptor::ProductForm { .. } => "ProductForm",
            StabDescriptor::Conjugate { .. } => "Conjugate",
        }
    }

    /// The descriptor with any conjugation stripped.
    pub fn core(&self) -> &StabDescriptor {
        match self {
            StabDescriptor::Conjugate { inner, .. } => inner.core(),
            s => s,
        }
    }
}

impl fmt::Display for StabDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StabDescriptor::TorusSub { a, b } => write!(f, "TorusSub({a}, {b})"),
            StabDescriptor::QuasitorusRank1 { a, b } => write!(f, "QuasitorusRank1({a}, {b})"),
            StabDescriptor::FiniteExtOfSubtorus { stab_k } => {
                write!(f, "FiniteExtOfSubtorus(0, 1; |Stab(K)| = {})", stab_k.len())
            }
            StabDescriptor::ProductForm { stab_k } => write!(f, "ProductForm(|Stab(K)| = {})", stab_k.len()),
            StabDescriptor::Conjugate { inner, by } => write!(f, "Conjugate({inner}, by {by})"),
            s => f.write_str(s.tag()),
        }
    }
}

fn conj(inner: StabDescriptor, by: Vec<ElemMap>) -> StabDescriptor {
    let by = AutWord::new(by).expect("valid factors");
    let by = if by.is_identity_map() { AutWord::identity() } else { by };
    if by.is_empty() {
        inner
    } else {
        StabDescriptor::Conjugate { inner: Box::new(inner), by }
    }
}

fn translate(dx: CycloNum, dy: CycloNum) -> ElemMap {
    let (o, z) = (CycloNum::one(), CycloNum::zero());
    ElemMap::Affine { m: [[o.clone(), z.clone()], [z, o]], b: [dx, dy] }
}

/// A linear map sending two distinct lines through the origin, given by
/// direction vectors, onto the x- and y-axes.
fn lines_to_axes(v1: [CycloNum; 2], v2: [CycloNum; 2]) -> ElemMap {
    let det = &(&v1[0] * &v2[1]) - &(&v1[1] * &v2[0]);
    let inv = det.inv().expect("distinct lines");
    let z = CycloNum::zero();
    ElemMap::Affine {
        m: [[&v2[1] * &inv, -&(&v2[0] * &inv)], [-&(&v1[1] * &inv), &v1[0] * &inv]],
        b: [z.clone(), z],
    }
}

fn isobarycentre(k: &[CycloNum]) -> CycloNum {
    let mut s = CycloNum::zero();
    for z in k {
        s += z;
    }
    &s / &CycloNum::from_int(k.len() as i64)
}

pub fn stabilizer(c: &CurveForm) -> Result<StabDescriptor> {
    c.validate()?;
    let z = CycloNum::zero;
    let one = CycloNum::one;
    match c.kind {
        FormKind::Par1 => {
            let roots = &c.p_roots;
            Ok(match (c.eps_y, roots.len()) {
                (false, 0) => return Err(Error::InvalidForm("empty curve".into())),
                (true, 0) => StabDescriptor::JonqPlus,
                (false, 1) => conj(StabDescriptor::JonqMinus, vec![translate(-&roots[0], z())]),
                (true, 1) => conj(StabDescriptor::NormalizerOfTorus, vec![translate(-&roots[0], z())]),
                (false, _) => StabDescriptor::ProductForm { stab_k: affine_symmetries(roots).unwrap() },
                (true, _) => StabDescriptor::FiniteExtOfSubtorus { stab_k: affine_symmetries(roots).unwrap() },
            })
        }
        FormKind::Par2 => {
            let (a, b) = (c.a, c.b);
            let r = c.kappas.len();
            match classify_form(c)? {
                CurveType::I => {
                    let k = &c.kappas[0];
                    Ok(if a == 1 {
                        // y = κ x^b
                        conj(StabDescriptor::JonqPlus, vec![ElemMap::minus(UniPoly::monomial(-k, b))])
                    } else {
                        // x = y^a / κ
                        let f = UniPoly::monomial(-&k.inv()?, a);
                        conj(StabDescriptor::JonqMinus, vec![ElemMap::plus(f)])
                    })
                }
                CurveType::II => {
                    if a == 1 && b == 1 {
                        let mut dirs: Vec<[CycloNum; 2]> = Vec::new();
                        if c.eps_x {
                            dirs.push([z(), one()]);
                        }
                        if c.eps_y {
                            dirs.push([one(), z()]);
                        }
                        dirs.extend(c.kappas.iter().map(|k| [one(), k.clone()]));
                        let m = lines_to_axes(dirs[0].clone(), dirs[1].clone());
                        Ok(conj(StabDescriptor::NormalizerOfTorus, vec![m]))
                    } else if a == 1 {
                        let f = UniPoly::monomial(-&c.kappas[0], b);
                        Ok(conj(StabDescriptor::NormalizerOfTorus, vec![ElemMap::minus(f)]))
                    } else {
                        let f = UniPoly::monomial(-&c.kappas[0].inv()?, a);
                        Ok(conj(StabDescriptor::NormalizerOfTorus, vec![ElemMap::plus(f)]))
                    }
                }
                CurveType::IV => Ok(StabDescriptor::FiniteExtOfScalars),
                CurveType::V => {
                    let q = StabDescriptor::QuasitorusRank1 { a, b };
                    if a == 1 {
                        let mut k = c.kappas.clone();
                        if c.eps_y {
                            k.push(z());
                        }
                        let z0 = isobarycentre(&k);
                        let by = if z0.is_zero() { vec![] } else { vec![ElemMap::minus(UniPoly::monomial(-z0, b))] };
                        Ok(conj(q, by))
                    } else {
                        let mut k: Vec<CycloNum> = c.kappas.iter().map(|k| k.inv()).collect::<Result<_>>()?;
                        if c.eps_x {
                            k.push(z());
                        }
                        let z0 = isobarycentre(&k);
                        let by = if z0.is_zero() { vec![] } else { vec![ElemMap::plus(UniPoly::monomial(-z0, a))] };
                        Ok(conj(q, by))
                    }
                }
                CurveType::VI => Ok(if r == 1 {
                    StabDescriptor::TorusSub { a, b }
                } else {
                    StabDescriptor::QuasitorusRank1 { a, b }
                }),
                CurveType::III => unreachable!("par2 forms are never of type III"),
            }
        }
    }
}

/// Necessary condition for an embedded line: one degree divides the other.
pub fn ams_check(u: &UniPoly, v: &UniPoly) -> bool {
    let du = u.degree().unwrap_or(0);
    let dv = v.degree().unwrap_or(0);
    du == 0 || dv == 0 || du % dv == 0 || dv % du == 0
}

/// Builds φ with φ ∘ (u, v) equal to (αt, 0) or (0, βt), by repeatedly
/// cancelling the leading term of the component of higher degree (ties reduce
/// u). Consecutive reductions of the same component are merged into a single
/// triangular factor. The returned word lists the last applied factor first.
pub fn rectify(u: &UniPoly, v: &UniPoly) -> Result<AutWord> {
    let (u0, v0) = (u.coeff(0), v.coeff(0));
    let mut factors: Vec<ElemMap> = Vec::new();
    let (mut cu, mut cv) = (u.clone(), v.clone());
    if !u0.is_zero() || !v0.is_zero() {
        let t = translate(-&u0, -&v0);
        (cu, cv) = t.act_uni(&cu, &cv);
        factors.push(t);
    }
    // pending same-side factor: (reduce_u, f)
    let mut pending: Option<(bool, UniPoly)> = None;
    let flush = |pending: &mut Option<(bool, UniPoly)>, factors: &mut Vec<ElemMap>| {
        if let Some((side, f)) = pending.take() {
            if !f.is_zero() {
                factors.push(if side { ElemMap::plus(f) } else { ElemMap::minus(f) });
            }
        }
    };
    while !cu.is_zero() && !cv.is_zero() {
        let du = cu.degree().unwrap();
        let dv = cv.degree().unwrap();
        let reduce_u = du >= dv;
        let (hi, lo, dh, dl) = if reduce_u { (&cu, &cv, du, dv) } else { (&cv, &cu, dv, du) };
        if dh % dl != 0 {
            return Err(Error::NotEmbedding(format!("degrees {du} and {dv}: neither divides the other")));
        }
        let n = dh / dl;
        let c = hi.leading_coeff().unwrap() / &lo.leading_coeff().unwrap().pow(n as u64);
        let step = UniPoly::monomial(-&c, n);
        let new_hi = hi + &step.compose(lo);
        if reduce_u {
            cu = new_hi;
        } else {
            cv = new_hi;
        }
        match &mut pending {
            Some((side, f)) if *side == reduce_u => *f = &*f + &step,
            _ => {
                flush(&mut pending, &mut factors);
                pending = Some((reduce_u, step));
            }
        }
    }
    flush(&mut pending, &mut factors);
    let rest = if cu.is_zero() { &cv } else { &cu };
    if rest.degree() != Some(1) || !rest.coeff(0).is_zero() {
        return Err(Error::NotEmbedding(format!("terminal component {rest} is not linear")));
    }
    factors.reverse();
    AutWord::new(factors)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquivariantCase {
    /// u ∈ A_{d,e}, v ∈ A_{d,1}.
    Plus,
    /// u ∈ A_{d,1}, v ∈ A_{d,e′}.
    Minus,
}

impl EquivariantCase {
    pub fn name(self) -> &'static str {
        match self {
            EquivariantCase::Plus => "plus_case",
            EquivariantCase::Minus => "minus_case",
        }
    }
}

pub fn equivariant_type(u: &UniPoly, v: &UniPoly, s: &CyclicSurf) -> Result<EquivariantCase> {
    let d = s.d;
    let class = |f: &UniPoly, i: u32| in_grading_class(f, d, i % d);
    if class(u, s.e) && class(v, 1) {
        Ok(EquivariantCase::Plus)
    } else if class(u, 1) && class(v, s.e_prime) {
        Ok(EquivariantCase::Minus)
    } else {
        Err(Error::NotEquivariant(format!("({u}, {v}) is not stable under G_{{{},{}}}", s.d, s.e)))
    }
}

/// Whether a factor commutes with G_{d,e}: TriPlus needs f ∈ A_{d,e},
/// TriMinus needs f ∈ A_{d,e′}, affine parts must be diagonal.
pub fn factor_in_normalizer(e: &ElemMap, s: &CyclicSurf) -> bool {
    let d = s.d;
    match e {
        ElemMap::TriPlus { f, .. } => in_grading_class(f, d, s.e % d),
        ElemMap::TriMinus { f, .. } => in_grading_class(f, d, s.e_prime % d),
        ElemMap::Affine { m, b } => {
            d == 1 || (m[0][1].is_zero() && m[1][0].is_zero() && b[0].is_zero() && b[1].is_zero())
        }
        ElemMap::Swap => d == 1 || (s.e as u64 * s.e as u64) % d as u64 == 1,
    }
}

/// Rectification by maps commuting with G_{d,e}.
pub fn equivariant_rectify(u: &UniPoly, v: &UniPoly, s: &CyclicSurf) -> Result<AutWord> {
    equivariant_type(u, v, s)?;
    let w = rectify(u, v)?;
    if let Some(bad) = w.factors().iter().find(|e| !factor_in_normalizer(e, s)) {
        return Err(Error::NotEquivariant(format!("factor {bad} does not commute with G")));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_unipoly, DEFAULT_MAX_ORDER};
    use crate::planeaut::{apply, compose};
    use crate::toric::make_surface;

    fn up(s: &str) -> UniPoly {
        parse_unipoly(s, DEFAULT_MAX_ORDER).unwrap()
    }

    fn q(n: i64) -> CycloNum {
        CycloNum::from_int(n)
    }

    fn is_axis(p: &(UniPoly, UniPoly)) -> bool {
        let lin = |f: &UniPoly| f.degree() == Some(1) && f.coeff(0).is_zero();
        (p.0.is_zero() && lin(&p.1)) || (p.1.is_zero() && lin(&p.0))
    }

    #[test]
    fn classification() {
        let c = CurveForm::par2(false, false, 2, 3, vec![q(1)]).unwrap();
        assert_eq!(classify_form(&c).unwrap(), CurveType::VI);
        let c = CurveForm::par2(false, false, 1, 1, vec![q(1), q(2), q(3)]).unwrap();
        assert_eq!(classify_form(&c).unwrap(), CurveType::IV);
        let c = CurveForm::par2(false, true, 1, 2, vec![q(1)]).unwrap();
        assert_eq!(classify_form(&c).unwrap(), CurveType::V);
        assert_eq!(classify_form(&CurveForm::axis_y()).unwrap(), CurveType::I);
        let c = CurveForm::par1(true, vec![q(0), q(1)]).unwrap();
        assert_eq!(classify_form(&c).unwrap(), CurveType::III);
        let c = CurveForm::par1(false, vec![q(0), q(1)]).unwrap();
        assert!(matches!(classify_form(&c), Err(Error::InvalidForm(_))));
        assert!(CurveForm::par2(false, false, 2, 4, vec![q(1)]).is_err());
        assert!(CurveForm::par2(false, false, 2, 3, vec![q(1), q(1)]).is_err());
    }

    #[test]
    fn stabilizers() {
        assert_eq!(stabilizer(&CurveForm::axis_y()).unwrap(), StabDescriptor::JonqPlus);
        assert_eq!(stabilizer(&CurveForm::cab(2, 3).unwrap()).unwrap(), StabDescriptor::TorusSub { a: 2, b: 3 });
        let cross = CurveForm::par2(true, true, 1, 1, vec![q(1)]);
        // three lines: x, y, y = x
        assert_eq!(stabilizer(&cross.unwrap()).unwrap(), StabDescriptor::FiniteExtOfScalars);
        let xy = CurveForm::par1(true, vec![q(0)]).unwrap();
        assert_eq!(stabilizer(&xy).unwrap(), StabDescriptor::NormalizerOfTorus);
        let two = CurveForm::par2(false, false, 1, 1, vec![q(1), q(2)]).unwrap();
        let s = stabilizer(&two).unwrap();
        assert_eq!(s.core(), &StabDescriptor::NormalizerOfTorus);
        if let StabDescriptor::Conjugate { by, .. } = &s {
            let moved = apply(&crate::planeaut::invert(by), &two.defining_polynomial());
            assert_eq!(moved.len(), 1, "lines not sent to the axes: {moved}");
        } else {
            panic!("expected conjugate");
        }
    }

    #[test]
    fn type_one_conjugators_reach_axes() {
        for (a, b) in [(1, 1), (1, 3), (3, 1)] {
            let c = CurveForm::par2(false, false, a, b, vec![q(2)]).unwrap();
            let StabDescriptor::Conjugate { by, .. } = stabilizer(&c).unwrap() else { panic!() };
            let moved = apply(&crate::planeaut::invert(&by), &c.defining_polynomial());
            assert!(moved.len() == 1 && moved.total_degree() == Some(1), "{moved}");
        }
    }

    #[test]
    fn symmetries_of_root_sets() {
        let k = vec![q(0), q(1), q(2)];
        assert_eq!(affine_symmetries(&k).unwrap().len(), 2);
        let k = vec![q(0), q(1), q(3)];
        assert_eq!(affine_symmetries(&k).unwrap().len(), 1);
        assert!(affine_symmetries(&[q(0)]).is_none());
    }

    #[test]
    fn ams() {
        assert!(ams_check(&up("t"), &up("t^3")));
        assert!(!ams_check(&up("t^2"), &up("t^3")));
        assert!(ams_check(&up("t"), &UniPoly::zero()));
        assert!(ams_check(&up("t^3"), &up("t^2")) == ams_check(&up("t^2"), &up("t^3")));
    }

    #[test]
    fn rectify_examples() {
        let w = rectify(&up("t"), &up("t^2")).unwrap();
        assert_eq!(w.factors(), &[ElemMap::minus(up("-x^2"))]);
        assert!(is_axis(&w.apply_curve(&up("t"), &up("t^2"))));
        assert!(rectify(&up("t"), &UniPoly::zero()).unwrap().is_empty());
        assert!(matches!(rectify(&up("t^2"), &up("t^3")), Err(Error::NotEmbedding(_))));
        assert!(matches!(rectify(&up("t^2"), &UniPoly::zero()), Err(Error::NotEmbedding(_))));
    }

    #[test]
    fn rectify_pushforward() {
        let w = AutWord::new(vec![
            ElemMap::plus(up("y^3 - 2y^2")),
            ElemMap::minus(up("1/2*x^2")),
            ElemMap::plus(up("y^2")),
        ])
        .unwrap();
        let (u, v) = w.apply_curve(&up("t"), &UniPoly::zero());
        let r = rectify(&u, &v).unwrap();
        assert!(is_axis(&r.apply_curve(&u, &v)));
        let (u, v) = (up("t + 1"), up("t^2 + 3"));
        let r = rectify(&u, &v).unwrap();
        assert!(is_axis(&r.apply_curve(&u, &v)));
    }

    #[test]
    fn equivariance() {
        let s = make_surface(3, 2).unwrap();
        assert_eq!(equivariant_type(&up("t^2"), &up("t"), &s).unwrap(), EquivariantCase::Plus);
        assert_eq!(equivariant_type(&up("t"), &up("t^2"), &s).unwrap(), EquivariantCase::Minus);
        assert!(matches!(equivariant_type(&up("t^3 + t"), &up("t"), &s), Err(Error::NotEquivariant(_))));

        let w = equivariant_rectify(&up("t^2"), &up("t"), &s).unwrap();
        assert_eq!(w.factors(), &[ElemMap::plus(up("-y^2"))]);
        assert_eq!(w.apply_curve(&up("t^2"), &up("t")), (UniPoly::zero(), up("t")));
        let g = AutWord::single(s.generator().to_elem()).unwrap();
        assert!(compose(&w, &g).same_map(&compose(&g, &w)));
        for (d, e) in [(2, 1), (5, 4)] {
            let s = make_surface(d, e).unwrap();
            assert!(equivariant_rectify(&up("t"), &UniPoly::zero(), &s).unwrap().is_empty());
        }
    }
}
