use super::{normal_form, AutWord, ElemMap};
use crate::algebra::{BiPoly, CycloNum, UniPoly};
use crate::error::{Error, Result};

/// The scalar c with top == c · base, if one exists.
fn proportional(top: &BiPoly, base: &BiPoly) -> Option<CycloNum> {
    let ((i, j), lead) = base.terms().next()?;
    let c = top.coeff(i, j).checked_div(lead).ok()?;
    if c.is_zero() || &base.scale(&c) != top {
        return None;
    }
    Some(c)
}

fn stall(du: u32, dv: u32) -> Error {
    Error::NotAutomorphism(format!("degree reduction stalls at degrees ({du}, {dv})"))
}

/// Factors the map (u, v) into elementary maps by repeatedly cancelling the
/// leading form of the higher-degree component. The result is in normal
/// form.
pub fn jvdk_factor(u: &BiPoly, v: &BiPoly) -> Result<AutWord> {
    let (orig_u, orig_v) = (u.clone(), v.clone());
    let (mut u, mut v) = (u.clone(), v.clone());
    let mut raw = Vec::new();
    loop {
        let zero = || Error::NotAutomorphism("zero component".into());
        let du = u.total_degree().ok_or_else(zero)?;
        let dv = v.total_degree().ok_or_else(zero)?;
        if du <= 1 && dv <= 1 {
            let e = ElemMap::affine(
                [[u.coeff(1, 0), u.coeff(0, 1)], [v.coeff(1, 0), v.coeff(0, 1)]],
                [u.coeff(0, 0), v.coeff(0, 0)],
            )?;
            raw.push(e);
            break;
        }
        if du == 0 || dv == 0 {
            return Err(stall(du, dv));
        }
        if du >= dv {
            if du % dv != 0 {
                return Err(stall(du, dv));
            }
            let n = du / dv;
            let c = proportional(&u.top_form(), &v.top_form().pow(n)).ok_or_else(|| stall(du, dv))?;
            u = &u - &v.pow(n).scale(&c);
            raw.push(ElemMap::plus(UniPoly::monomial(c, n)));
        } else {
            if dv % du != 0 {
                return Err(stall(du, dv));
            }
            let n = dv / du;
            let c = proportional(&v.top_form(), &u.top_form().pow(n)).ok_or_else(|| stall(du, dv))?;
            v = &v - &u.pow(n).scale(&c);
            raw.push(ElemMap::minus(UniPoly::monomial(c, n)));
        }
    }
    let w = AutWord::from_factors_unchecked(raw);
    let _ = w.comps.set((orig_u, orig_v));
    Ok(normal_form(&w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_bipoly;

    fn bp(s: &str) -> BiPoly {
        parse_bipoly(s, 64).unwrap()
    }

    fn ty(k: u32) -> UniPoly {
        UniPoly::monomial(CycloNum::one(), k)
    }

    #[test]
    fn identity_and_elementary() {
        assert!(jvdk_factor(&BiPoly::x(), &BiPoly::y()).unwrap().is_empty());
        let w = jvdk_factor(&bp("x + y^2"), &BiPoly::y()).unwrap();
        assert_eq!(w.factors(), &[ElemMap::plus(ty(2))]);
    }

    #[test]
    fn two_factor_example() {
        let w = jvdk_factor(&bp("x + y^2"), &bp("y + (x + y^2)^3")).unwrap();
        assert_eq!(w.factors(), &[ElemMap::minus(ty(3)), ElemMap::plus(ty(2))]);
        let fresh = AutWord::new(w.factors().to_vec()).unwrap();
        assert_eq!(fresh.u(), &bp("x + y^2"));
        assert_eq!(fresh.v(), &bp("y + (x + y^2)^3"));
    }

    #[test]
    fn affine_maps() {
        let w = jvdk_factor(&bp("2*x + y + 1"), &bp("x - y")).unwrap();
        assert_eq!(w.len(), 1);
        assert!(matches!(w.factors()[0], ElemMap::Affine { .. }));
        assert_eq!(jvdk_factor(&bp("x + y"), &bp("2*x + 2*y")).unwrap_err().code(), "NotAutomorphism");
    }

    #[test]
    fn non_automorphisms() {
        assert_eq!(jvdk_factor(&bp("x^2"), &BiPoly::y()).unwrap_err().code(), "NotAutomorphism");
        assert_eq!(jvdk_factor(&bp("x^2 + y^3"), &bp("y^2")).unwrap_err().code(), "NotAutomorphism");
        assert_eq!(jvdk_factor(&bp("x*y"), &bp("y")).unwrap_err().code(), "NotAutomorphism");
    }
}
