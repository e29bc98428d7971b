//! Browser bindings. Every export returns a JSON string; failures come back as `{"error": ...}`.

use gorenstein::report::list;
use gorenstein::showcase::{is_palindrome, SemigroupInstance};
use gorenstein::{ann_dp, is_artinian_gorenstein, span_basis, Field, Ring};
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

fn ring(dual_vars: &str, field: &str) -> Result<Ring, String> {
    let dual: Vec<String> = dual_vars.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
    let vars: Vec<String> = dual.iter().map(|s| s.to_lowercase()).collect();
    let field = Field::parse(field).map_err(|e| e.to_string())?;
    Ring::with_names(&vars, &dual, field).map_err(|e| e.to_string())
}

fn finish(r: Result<Value, String>) -> String {
    r.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

pub fn semigroup_hf_json(b: u32, len: usize) -> Result<Value, String> {
    let inst = SemigroupInstance::new(b).map_err(|e| e.to_string())?;
    let r = inst.ring(Field::Rational);
    let hf = inst.ideal(&r).hilbert().prefix(len);
    let closed: Vec<u64> = (0..len as u32).map(|t| inst.expected_hf(t)).collect();
    Ok(json!({
        "b": b,
        "weights": inst.weights(),
        "hf": hf,
        "closed_form": closed,
        "agrees": hf == closed,
        "multiplicity": inst.multiplicity(),
    }))
}

pub fn annihilator_json(dual_vars: &str, field: &str, dp: &str) -> Result<Value, String> {
    let r = ring(dual_vars, field)?;
    let f = r.parse_dp(dp).map_err(|e| e.to_string())?;
    let a = ann_dp(&f, r.nvars()).map_err(|e| e.to_string())?;
    let h = a.hilbert();
    let gorenstein = is_artinian_gorenstein(&a).unwrap_or(false);
    Ok(json!({
        "ann": r.format_ideal(a.gens()),
        "length": h.length,
        "h_vector": list(&h.h_vector()),
        "gorenstein": gorenstein,
    }))
}

pub fn contract_json(dual_vars: &str, field: &str, f: &str, dp: &str) -> Result<Value, String> {
    let r = ring(dual_vars, field)?;
    let h = r.parse_poly(f).map_err(|e| e.to_string())?;
    let g = r.parse_dp(dp).map_err(|e| e.to_string())?;
    Ok(json!({ "result": r.format_dp(&g.contract_by(&h)) }))
}

pub fn span_profile_json(dual_vars: &str, field: &str, dp: &str) -> Result<Value, String> {
    let r = ring(dual_vars, field)?;
    let f = r.parse_dp(dp).map_err(|e| e.to_string())?;
    let s = span_basis(&f, r.nvars());
    let profile = s.degree_profile();
    let as_i: Vec<i64> = profile.iter().map(|&v| v as i64).collect();
    Ok(json!({
        "dim": s.dim(),
        "profile": profile,
        "palindromic": is_palindrome(&as_i),
        "basis": s.basis().iter().map(|g| r.format_dp(g)).collect::<Vec<_>>(),
    }))
}

#[wasm_bindgen]
pub fn semigroup_hf(b: u32, len: usize) -> String {
    finish(semigroup_hf_json(b, len))
}

#[wasm_bindgen]
pub fn annihilator(dual_vars: &str, field: &str, dp: &str) -> String {
    finish(annihilator_json(dual_vars, field, dp))
}

#[wasm_bindgen]
pub fn contract(dual_vars: &str, field: &str, f: &str, dp: &str) -> String {
    finish(contract_json(dual_vars, field, f, dp))
}

#[wasm_bindgen]
pub fn span_profile(dual_vars: &str, field: &str, dp: &str) -> String {
    finish(span_profile_json(dual_vars, field, dp))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semigroup_b2() {
        let v = semigroup_hf_json(2, 7).unwrap();
        assert_eq!(v["hf"], json!([1, 3, 4, 5, 5, 6, 6]));
        assert_eq!(v["agrees"], json!(true));
        assert!(semigroup_hf_json(1, 3).is_err());
    }

    #[test]
    fn ann_and_contract() {
        let v = annihilator_json("X,Y,Z", "q", "Y^2Z").unwrap();
        assert_eq!(v["ann"], json!("(x, z^2, y^3)"));
        assert_eq!(v["length"], json!(6));
        assert_eq!(v["gorenstein"], json!(true));
        let c = contract_json("X,Y", "fp:7", "x*y", "X^2Y^3").unwrap();
        assert_eq!(c["result"], json!("XY^2"));
    }

    #[test]
    fn span_of_quartic() {
        let v = span_profile_json("X,Y,Z,W", "q", "X^3Y+Y^3Z+XZ^3").unwrap();
        assert_eq!(v["dim"], json!(14));
        assert_eq!(v["profile"], json!([1, 3, 6, 3, 1]));
        assert_eq!(v["palindromic"], json!(true));
        assert!(finish(span_profile_json("X", "q", "X^")).contains("error"));
    }
}
