//! WebAssembly bindings for the demo page. Every function returns a JSON
//! document; failures come back as `{"error": "..."}`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use hcf_core::bvring::make_presentation;
use hcf_core::connes::{e2_presented, e2_series, PageWindow};
use hcf_core::crosscheck::{delta_table, label_classes};
use hcf_core::hochschild::BarModel;
use hcf_core::series::{closed_form_series, equal_in_window};
use hcf_core::{make_algebra, ManifoldSpec};

/// Brute-force work is capped so the page stays responsive.
const MAX_HDEG: u32 = 5;
const MAX_HI: i32 = 200;
const MAX_PAGE_SPAN: i32 = 40;
const MAX_COLUMNS: u32 = 12;

fn respond(result: Result<Value, String>) -> String {
    let v = result.unwrap_or_else(|e| json!({ "error": e }));
    v.to_string()
}

fn parse(manifold: &str) -> Result<ManifoldSpec, String> {
    manifold.parse().map_err(|e: hcf_core::frobenius::FrobeniusError| e.to_string())
}

fn value(v: &impl serde::Serialize) -> Result<Value, String> {
    serde_json::to_value(v).map_err(|e| e.to_string())
}

/// Names of the manifolds offered by the page.
#[wasm_bindgen]
pub fn manifolds() -> String {
    let names: Vec<String> = ManifoldSpec::catalogue().iter().map(ManifoldSpec::name).collect();
    json!(names).to_string()
}

/// Coefficients of both Poincaré series on `[0, hi]` and the first disagreement.
#[wasm_bindgen]
pub fn compare_series(manifold: &str, hi: i32) -> String {
    respond((|| {
        if !(0..=MAX_HI).contains(&hi) {
            return Err(format!("hi must lie in [0, {MAX_HI}]"));
        }
        let s = parse(manifold)?;
        let closed = closed_form_series(&s);
        let e2 = e2_series(&make_presentation(&s)).map_err(|e| e.to_string())?;
        let mismatch = equal_in_window(&closed, &e2, 0, hi).map_err(|e| e.to_string())?;
        Ok(json!({
            "manifold": s.name(),
            "closed_form": closed.to_string(),
            "e2_series": e2.to_string(),
            "closed_form_coefficients": closed.expand(0, hi).map_err(|e| e.to_string())?,
            "e2_coefficients": e2.expand(0, hi).map_err(|e| e.to_string())?,
            "mismatch": value(&mismatch)?,
        }))
    })())
}

/// `Δ` on every labelled class up to Hochschild degree `hdeg_max`,
/// computed on bar cochains and from the closed form.
#[wasm_bindgen]
pub fn delta_rows(manifold: &str, hdeg_max: u32) -> String {
    respond((|| {
        if hdeg_max > MAX_HDEG {
            return Err(format!("hdeg_max must be at most {MAX_HDEG}"));
        }
        let s = parse(manifold)?;
        let a = make_algebra(&s);
        let mut h = label_classes(BarModel::new(&a), &s, hdeg_max as usize).map_err(|e| e.to_string())?;
        let rows = delta_table(&mut h).map_err(|e| e.to_string())?;
        Ok(json!({ "manifold": s.name(), "rows": value(&rows)? }))
    })())
}

/// Nonzero `E_2` entries with `q_lo <= q <= q_hi` and `p <= p_max`.
#[wasm_bindgen]
pub fn e2_page(manifold: &str, q_lo: i32, q_hi: i32, p_max: u32) -> String {
    respond((|| {
        if q_lo > q_hi || q_hi - q_lo > MAX_PAGE_SPAN || p_max > MAX_COLUMNS {
            return Err(format!("window must be nonempty, span at most {MAX_PAGE_SPAN}, with p_max <= {MAX_COLUMNS}"));
        }
        let s = parse(manifold)?;
        let page = e2_presented(&make_presentation(&s), PageWindow::new(q_lo, q_hi, p_max as usize))
            .map_err(|e| e.to_string())?;
        Ok(json!({ "manifold": s.name(), "entries": value(&page.entries)? }))
    })())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn lists_manifolds() {
        let v = call(manifolds());
        assert!(v.as_array().unwrap().iter().any(|m| m == "HP2"));
    }

    #[test]
    fn series_on_s2() {
        let v = call(compare_series("S2", 5));
        assert_eq!(v["e2_coefficients"], json!([1, 1, 2, 2, 3, 3]));
        assert!(v["mismatch"].is_null());
        assert_eq!(call(compare_series("CP2", 5))["mismatch"]["exponent"], 1);
    }

    #[test]
    fn delta_on_rp2() {
        let v = call(delta_rows("RP2", 3));
        let rows = v["rows"].as_array().unwrap();
        assert!(rows.iter().any(|r| r["class"] == "u t" && r["brute_force"] == "t"));
    }

    #[test]
    fn page_entries() {
        let v = call(e2_page("S3", 0, 6, 2));
        assert!(!v["entries"].as_array().unwrap().is_empty());
    }

    #[test]
    fn errors_are_reported() {
        assert!(call(compare_series("RP1", 5))["error"].is_string());
        assert!(call(delta_rows("S2", 9))["error"].is_string());
        assert!(call(e2_page("S2", 4, 1, 2))["error"].is_string());
    }
}
