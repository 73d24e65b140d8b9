//! Browser bindings: compute `Q_λ`, check an eigenvalue, and tabulate the `Ω_3` spectrum.

use qschur::qsym::schur_q;
use qschur::rational::format_rational;
use qschur::spectra::{eigen_check, eigen_sweep, hc_eigenvalue_omega3};
use qschur::{Operator, StrictPartition};
use serde_json::json;
use wasm_bindgen::prelude::*;

// Exact arithmetic runs on the page's main thread.
const MAX_N: usize = 4;
const MAX_WEIGHT: u32 = 10;

fn bounds(n: usize, weight: u32) -> Result<(), String> {
    if n == 0 || n > MAX_N || weight > MAX_WEIGHT {
        Err(format!("demo limits: 1 <= n <= {MAX_N}, weight <= {MAX_WEIGHT}"))
    } else {
        Ok(())
    }
}

fn partition(s: &str) -> Result<StrictPartition, String> {
    s.trim().parse().map_err(|e: qschur::SymError| e.to_string())
}

pub fn q_function_text(lambda: &str, n: usize) -> Result<String, String> {
    let l = partition(lambda)?;
    bounds(n, l.weight())?;
    Ok(schur_q(&l, n).to_string())
}

pub fn eigen_json(lambda: &str, op: &str, n: usize) -> Result<String, String> {
    let l = partition(lambda)?;
    bounds(n, l.weight())?;
    let op: Operator = op.trim().parse().map_err(|e: qschur::OperatorError| e.to_string())?;
    let r = eigen_check(&l, op, n).map_err(|e| e.to_string())?;
    serde_json::to_string(&r).map_err(|e| e.to_string())
}

/// Rows `{partition, weight, eigenvalue, expected, isEigen}` for every `λ` with
/// `|λ| <= max_weight` and at most `n` parts.
pub fn spectrum_json(n: usize, max_weight: u32) -> Result<String, String> {
    bounds(n, max_weight)?;
    let reports = eigen_sweep(n, max_weight, Operator::Omega(3)).map_err(|e| e.to_string())?;
    let rows: Vec<_> = reports
        .iter()
        .map(|r| {
            json!({
                "partition": r.partition.to_string(),
                "weight": r.partition.weight(),
                "eigenvalue": format_rational(&r.eigenvalue),
                "expected": format_rational(&hc_eigenvalue_omega3(&r.partition)),
                "isEigen": r.is_eigen,
            })
        })
        .collect();
    Ok(serde_json::Value::from(rows).to_string())
}

#[wasm_bindgen]
pub fn q_function(lambda: &str, n: usize) -> Result<String, JsError> {
    q_function_text(lambda, n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn eigen(lambda: &str, op: &str, n: usize) -> Result<String, JsError> {
    eigen_json(lambda, op, n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn omega3_spectrum(n: usize, max_weight: u32) -> Result<String, JsError> {
    spectrum_json(n, max_weight).map_err(|e| JsError::new(&e))
}
