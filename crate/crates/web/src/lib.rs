//! Browser bindings: an Izergin determinant calculator, highest
//! coefficients through every representation, and single identity checks.
//!
//! The plain functions return `Result<String, String>` so they can be
//! exercised natively; the `#[wasm_bindgen]` wrappers turn errors into
//! JavaScript exceptions.

use gl3_hc::highest::{hc_all, HcQuery};
use gl3_hc::izergin::{Kernel, Side};
use gl3_hc::verify::{descriptor, evaluate_case, registry};
use gl3_hc::{Config, ParameterSet, Rational};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest set size accepted from the page; keeps evaluation interactive.
pub const MAX_SIZE: usize = 4;

fn parse<T: std::str::FromStr>(what: &str, text: &str) -> Result<T, String>
where
    T::Err: std::fmt::Display,
{
    text.trim().parse().map_err(|e| format!("{what}: {e}"))
}

fn set(what: &str, text: &str) -> Result<ParameterSet, String> {
    let s: ParameterSet = parse(what, text)?;
    if s.len() > MAX_SIZE {
        return Err(format!("{what}: at most {MAX_SIZE} values"));
    }
    Ok(s)
}

/// `K`, `K^(l)` and `K^(r)` as JSON `{plain, left, right}`.
pub fn izergin_json(x: &str, y: &str, q: &str) -> Result<String, String> {
    let (x, y) = (set("x", x)?, set("y", y)?);
    let q: Rational = parse("q", q)?;
    let k = Kernel::new(&q).map_err(|e| e.to_string())?;
    let eval = |v: gl3_hc::Result<Rational>| v.map(|r| r.to_string()).map_err(|e| e.to_string());
    Ok(json!({
        "plain": eval(k.izergin(&x, &y))?,
        "left": eval(k.izergin_left(&x, &y))?,
        "right": eval(k.izergin_right(&x, &y))?,
    })
    .to_string())
}

/// `[{rep, value}]` for every representation of `Z^{side}`.
pub fn highest_json(side: &str, t: &str, x: &str, s: &str, y: &str, q: &str) -> Result<String, String> {
    let side: Side = parse("side", side)?;
    let query = HcQuery::new(side, set("t", t)?, set("x", x)?, set("s", s)?, set("y", y)?, parse("q", q)?);
    let values = hc_all(&query).map_err(|e| e.to_string())?;
    let rows: Vec<_> = values.iter().map(|(rep, v)| json!({ "rep": rep.name(), "value": v.to_string() })).collect();
    Ok(serde_json::Value::from(rows).to_string())
}

/// `[{id, suite, description}]` for the registry.
pub fn identities_json() -> String {
    let rows: Vec<_> = registry()
        .iter()
        .map(|d| json!({ "id": d.id, "suite": d.suite.name(), "description": d.description }))
        .collect();
    serde_json::Value::from(rows).to_string()
}

/// Runs one registered identity at a comma-separated shape and seed.
pub fn check_json(id: &str, shape: &str, seed: u64) -> Result<String, String> {
    let d = descriptor(id.trim()).map_err(|e| e.to_string())?;
    let shape: Vec<usize> = if shape.trim().is_empty() {
        Vec::new()
    } else {
        shape.split(',').map(|p| parse("shape", p)).collect::<Result<_, _>>()?
    };
    if shape.iter().any(|&n| n > MAX_SIZE) {
        return Err(format!("shape entries must be at most {MAX_SIZE}"));
    }
    let case = evaluate_case(&d, &shape, seed, &Config::default());
    serde_json::to_string(&case).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn izergin(x: &str, y: &str, q: &str) -> Result<String, JsValue> {
    izergin_json(x, y, q).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn highest(side: &str, t: &str, x: &str, s: &str, y: &str, q: &str) -> Result<String, JsValue> {
    highest_json(side, t, x, s, y, q).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn identities() -> String {
    identities_json()
}

#[wasm_bindgen]
pub fn check(id: &str, shape: &str, seed: u32) -> Result<String, JsValue> {
    check_json(id, shape, u64::from(seed)).map_err(|e| JsValue::from_str(&e))
}
