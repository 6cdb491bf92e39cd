//! Browser bindings for the invariant pipeline.
//!
//! Each export takes plain strings/numbers and returns a JSON string: the
//! same report documents the CLI emits, or `{"error": "..."}` on bad input.
//! The demo page in `www/` renders them without any framework.

use plane_branch::parse::{parse_bivar, parse_univar};
use plane_branch::report::{
    analyze_param, analyze_poly, primes_in_range, sweep, SweepRow,
};
use plane_branch::{Parametrization, PrimeField};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Upper bound on primes examined per sweep call; keeps a stray browser
/// request from pinning a tab.
const MAX_SWEEP_SPAN: u32 = 1_000;

fn err_json(msg: impl std::fmt::Display) -> String {
    format!(
        "{{\"error\": {}}}",
        serde_json::to_string(&msg.to_string()).expect("string serializes")
    )
}

fn ok_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report serializes")
}

/// Full analysis of a parametrization `(t^n, y(t))` over `F_p`.
#[wasm_bindgen]
pub fn analyze_branch(p: u32, n: u32, y: &str, dmax: Option<u32>) -> String {
    let y = match parse_univar(y) {
        Ok(y) => y,
        Err(e) => return err_json(e),
    };
    let branch = match Parametrization::validate(p as u64, n as u64, &y) {
        Ok(b) => b,
        Err(e) => return err_json(e),
    };
    match analyze_param(&branch, dmax.map(u64::from)) {
        Ok(report) => ok_json(&report),
        Err(e) => err_json(e),
    }
}

/// Analysis from an implicit equation `f(x, y)`; `generators` is a
/// comma-separated list asserted by the caller, or empty for a Milnor-only
/// run.
#[wasm_bindgen]
pub fn analyze_equation(p: u32, f: &str, generators: &str, dmax: Option<u32>) -> String {
    let field = match PrimeField::new(p as u64) {
        Ok(f) => f,
        Err(e) => return err_json(e),
    };
    let f = match parse_bivar(f) {
        Ok(t) => t.reduce(field),
        Err(e) => return err_json(e),
    };
    let gens = if generators.trim().is_empty() {
        None
    } else {
        let parsed: Result<Vec<u64>, _> = generators
            .split(',')
            .map(|s| s.trim().parse::<u64>())
            .collect();
        match parsed {
            Ok(g) => Some(g),
            Err(_) => return err_json("generators must be a comma-separated list of integers"),
        }
    };
    match analyze_poly(field, &f, gens.as_deref(), dmax.map(u64::from)) {
        Ok(report) => ok_json(&report),
        Err(e) => err_json(e),
    }
}

#[derive(Serialize)]
struct SweepDocument<'a> {
    n: u64,
    y: String,
    rows: &'a [SweepRow],
}

/// Re-runs the analysis for every prime in `[lo, hi]`, reducing the integer
/// template coefficients per prime. Skipped primes stay in the table with
/// their reason.
#[wasm_bindgen]
pub fn sweep_branch(n: u32, y: &str, lo: u32, hi: u32, dmax: Option<u32>) -> String {
    if hi < lo {
        return err_json("empty prime range");
    }
    if hi - lo > MAX_SWEEP_SPAN {
        return err_json(format!(
            "prime range wider than {} is not allowed in the demo",
            MAX_SWEEP_SPAN
        ));
    }
    let y = match parse_univar(y) {
        Ok(y) => y,
        Err(e) => return err_json(e),
    };
    let primes = primes_in_range(lo as u64, hi as u64);
    let rows = sweep(n as u64, &y, &primes, dmax.map(u64::from));
    ok_json(&SweepDocument {
        n: n as u64,
        y: y.to_string(),
        rows: &rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analyze_branch_reports_invariants() {
        let json = analyze_branch(5, 4, "t^6 + t^7", None);
        let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(doc["conductor"], 16);
        assert_eq!(doc["delta"], 8);
        assert_eq!(doc["mu"]["value"], 16);
        assert_eq!(doc["i0_f_fy"], 19);
    }

    #[test]
    fn analyze_branch_surfaces_validation_errors() {
        let json = analyze_branch(2, 4, "t^6 + t^7", None);
        let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert!(doc["error"].as_str().unwrap().contains("divides"));

        let json = analyze_branch(5, 4, "t^6 + %", None);
        let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert!(doc["error"].as_str().unwrap().contains("syntax error"));
    }

    #[test]
    fn analyze_equation_with_and_without_generators() {
        let json = analyze_equation(13, "(y^2+x^3)^2+x^5*y", "4, 6, 13", None);
        let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(doc["mu"]["value"], 17);
        assert_eq!(doc["conductor"], 16);

        let json = analyze_equation(5, "x^5+y^4", "", None);
        let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(doc["mu"]["status"], "infinite");
        assert!(doc["conductor"].is_null());
    }

    #[test]
    fn sweep_branch_rows_match_cli_semantics() {
        let json = sweep_branch(4, "t^6+t^7", 2, 19, None);
        let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
        let rows = doc["rows"].as_array().unwrap();
        assert_eq!(rows.len(), 8); // 2,3,5,7,11,13,17,19
        assert_eq!(rows[0]["status"], "skipped");
        let mu13 = rows
            .iter()
            .find(|r| r["p"] == 13)
            .and_then(|r| r["report"]["mu"]["value"].as_u64());
        assert_eq!(mu13, Some(17));
    }

    #[test]
    fn sweep_branch_rejects_oversized_ranges() {
        let json = sweep_branch(4, "t^6+t^7", 2, 100_000, None);
        let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert!(doc["error"].as_str().unwrap().contains("range"));
    }
}
