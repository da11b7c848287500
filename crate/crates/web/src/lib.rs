//! Browser bindings. Every export takes plain strings or numbers and
//! returns a JSON string; errors come back as the thrown message.

use algebroid::arith::fmt_rational;
use algebroid::derivations::tangent_derivations;
use algebroid::hilbert::hilbert_series_quotient;
use algebroid::liealg::fibre_lie_algebra_permissive;
use algebroid::pipeline::{covariants_report, parse_denominator, parse_problem};
use algebroid::series::{dimension_multiplicity, expand_series};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Covariant dimensions of binary forms of degree `degree`, with the series.
/// An empty `denominator` uses the built-in one (degrees up to 3).
pub fn covariant_json(degree: usize, depth: usize, denominator: &str) -> Result<String, String> {
    let denom = if denominator.trim().is_empty() { None } else { Some(parse_denominator(denominator).map_err(|e| e.to_string())?) };
    let r = covariants_report(degree, depth, denom).map_err(|e| e.to_string())?;
    Ok(r.to_json().to_string())
}

/// Hilbert series of `A/I` for a problem in the input file format.
pub fn hilbert_json(problem: &str, terms: usize) -> Result<String, String> {
    let p = parse_problem(problem).map_err(|e| e.to_string())?;
    let rs = hilbert_series_quotient(&p.graded_ideal()).map_err(|e| e.to_string())?.reduced();
    let (d, e) = dimension_multiplicity(&rs).map_err(|e| e.to_string())?;
    Ok(json!({
        "series_text": rs.display(),
        "coefficients": expand_series(&rs, terms).to_i64(),
        "weights": p.graded_ideal().weights(),
        "dimension": d,
        "multiplicity": fmt_rational(&e),
    })
    .to_string())
}

/// Fibre Lie algebra of the tangent derivations of a problem.
pub fn fibre_json(problem: &str) -> Result<String, String> {
    let p = parse_problem(problem).map_err(|e| e.to_string())?;
    let dm = tangent_derivations(&p.graded_ideal()).map_err(|e| e.to_string())?;
    let f = fibre_lie_algebra_permissive(&dm).map_err(|e| e.to_string())?;
    Ok(json!({
        "generators": dm.format_generators(),
        "basis": f.basis.iter().map(|d| d.format(&dm.ring)).collect::<Vec<_>>(),
        "brackets": f.algebra.bracket_table(),
        "fingerprint": f.algebra.fingerprint(),
    })
    .to_string())
}

#[wasm_bindgen(js_name = covariantSeries)]
pub fn covariant_series(degree: usize, depth: usize, denominator: &str) -> Result<String, JsValue> {
    covariant_json(degree, depth, denominator).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = hilbertSeries)]
pub fn hilbert_series(problem: &str, terms: usize) -> Result<String, JsValue> {
    hilbert_json(problem, terms).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = fibreAlgebra)]
pub fn fibre_algebra(problem: &str) -> Result<String, JsValue> {
    fibre_json(problem).map_err(|e| JsValue::from_str(&e))
}
