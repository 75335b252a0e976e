//! wasm-bindgen exports for the static demo page in `www/`.
//!
//! The plain functions in [`view`] do the work and are tested natively; the
//! exported wrappers only convert errors into JS exceptions.

use wasm_bindgen::prelude::*;

pub mod view;

fn js(e: latsec_core::Error) -> JsError {
    JsError::new(&e.to_string())
}

/// Secure rates for symmetric direct gain 1 and cross gain `cross`.
/// A non-positive `gamma_sq` selects the default `1/(h21^2 p)`.
#[wasm_bindgen]
pub fn rates_explorer(cross: f64, p_db: f64, gamma_sq: f64) -> Result<view::RatesView, JsError> {
    view::rates(cross, p_db, gamma_sq).map_err(js)
}

/// Flattened rows `(log10 P, sum rate, r_comb_2, penalty, ratio)` for a
/// sweep at fixed regime ratio.
#[wasm_bindgen]
pub fn sdof_curve(
    ratio: f64,
    log10_lo: f64,
    log10_hi: f64,
    points: u32,
    gamma_sq: f64,
) -> Result<Vec<f64>, JsError> {
    view::curve(ratio, log10_lo, log10_hi, points, gamma_sq).map_err(js)
}

/// Joint histogram of message bins against the wrap with dithers removed.
#[wasm_bindgen]
pub fn crypto_histogram(
    k: u32,
    samples: u32,
    seed: u32,
    masked: bool,
) -> Result<view::CryptoView, JsError> {
    view::crypto(k, samples as usize, u64::from(seed), masked).map_err(js)
}
