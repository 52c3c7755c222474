//! Browser bindings for a few torplane operations. Each returns plain text.

use std::fmt::Write;

use torplane::algebra::{parse_bipoly, parse_unipoly, DEFAULT_MAX_ORDER};
use torplane::curves::{equivariant_rectify, equivariant_type, rectify};
use torplane::planeaut::{jvdk_factor, word_degree, AutWord};
use torplane::toric::{curve_image_exponents, enumerate_embedding_classes, is_image_smooth, make_surface};
use torplane::Result;
use wasm_bindgen::prelude::*;

fn js(r: Result<String>) -> std::result::Result<String, JsError> {
    r.map_err(|e| JsError::new(&format!("{}: {e}", e.code())))
}

fn push_factors(out: &mut String, w: &AutWord) {
    if w.is_empty() {
        out.push_str("  (identity)\n");
    }
    for (i, f) in w.factors().iter().enumerate() {
        let _ = writeln!(out, "  {}. {f}", i + 1);
    }
}

pub fn toric_report(d: u32, e: u32, a: u32, b: u32) -> Result<String> {
    let s = make_surface(d, e)?;
    let img = curve_image_exponents(&s, a, b)?;
    let mut out = String::new();
    let _ = writeln!(out, "{s}: e' = {}, c = {:?}", s.e_prime, s.c);
    let _ = writeln!(out, "image of C_{{{a},{b}}}: t^{:?}", img.exponents);
    let _ = writeln!(out, "gcd {} -> {}", img.gcd(), if is_image_smooth(&img) { "smooth" } else { "singular" });
    if d > 1 {
        let classes = enumerate_embedding_classes(&s)?;
        out.push_str("candidate classes (upper bound):\n");
        for c in &classes.candidates {
            let _ = writeln!(out, "  {}{}", c.class, if c.smooth { "" } else { "  [singular]" });
        }
    }
    Ok(out)
}

pub fn rectify_report(u: &str, v: &str, equivariant: &str) -> Result<String> {
    let (u, v) = (parse_unipoly(u, DEFAULT_MAX_ORDER)?, parse_unipoly(v, DEFAULT_MAX_ORDER)?);
    let mut out = String::new();
    let w = match equivariant.split_once(',') {
        Some((d, e)) => {
            let d = d.trim().parse().map_err(|_| torplane::Error::Parse(format!("bad d '{d}'")))?;
            let e = e.trim().parse().map_err(|_| torplane::Error::Parse(format!("bad e '{e}'")))?;
            let s = make_surface(d, e)?;
            let _ = writeln!(out, "{s}, {}", equivariant_type(&u, &v, &s)?.name());
            equivariant_rectify(&u, &v, &s)?
        }
        None => rectify(&u, &v)?,
    };
    let (iu, iv) = w.apply_curve(&u, &v);
    out.push_str("rectifying map:\n");
    push_factors(&mut out, &w);
    let _ = writeln!(out, "image: ({iu}, {iv})");
    Ok(out)
}

pub fn factor_report(u: &str, v: &str) -> Result<String> {
    let (u, v) = (parse_bipoly(u, DEFAULT_MAX_ORDER)?, parse_bipoly(v, DEFAULT_MAX_ORDER)?);
    let w = jvdk_factor(&u, &v)?;
    let mut out = format!("degree {}\nfactors:\n", word_degree(&w)?);
    push_factors(&mut out, &w);
    Ok(out)
}

#[wasm_bindgen]
pub fn toric(d: u32, e: u32, a: u32, b: u32) -> std::result::Result<String, JsError> {
    js(toric_report(d, e, a, b))
}

#[wasm_bindgen(js_name = rectifyLine)]
pub fn rectify_line(u: &str, v: &str, equivariant: &str) -> std::result::Result<String, JsError> {
    js(rectify_report(u, v, equivariant))
}

#[wasm_bindgen]
pub fn factor(u: &str, v: &str) -> std::result::Result<String, JsError> {
    js(factor_report(u, v))
}
