//! Plain-Rust halves of the exports.

use latsec_core::channel::{symmetric_split, ChannelGains};
use latsec_core::region::{secure_rates, SweepTemplate};
use latsec_core::sim::{crypto_histogram, masking_config, Masking};
use latsec_core::{Error, Result};
use wasm_bindgen::prelude::*;

/// Number of values per row returned by [`curve`].
pub const CURVE_STRIDE: usize = 5;

#[wasm_bindgen]
#[derive(Debug, Clone, PartialEq)]
pub struct RatesView {
    pub r1: f64,
    pub r2: f64,
    pub penalty1: f64,
    pub penalty2: f64,
    pub r_comb_1: f64,
    pub r_comb_2: f64,
    pub sigma_star_sq: f64,
    pub ratio: f64,
    pub p_t: f64,
    pub p_u: f64,
    regime: String,
    best_a: String,
}

#[wasm_bindgen]
impl RatesView {
    #[wasm_bindgen(getter)]
    pub fn regime(&self) -> String {
        self.regime.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn best_a(&self) -> String {
        self.best_a.clone()
    }
}

fn gamma(gamma_sq: f64) -> Option<f64> {
    (gamma_sq > 0.0).then_some(gamma_sq)
}

pub fn rates(cross: f64, p_db: f64, gamma_sq: f64) -> Result<RatesView> {
    let p = 10f64.powf(p_db / 10.0);
    let gains = ChannelGains::symmetric(1.0, cross, p)?;
    let split = symmetric_split(&gains, gamma(gamma_sq))?;
    let r = secure_rates(&gains, &split)?;
    let c = &r.diagnostics.receiver1;
    Ok(RatesView {
        r1: r.r1,
        r2: r.r2,
        penalty1: r.penalty1,
        penalty2: r.penalty2,
        r_comb_1: c.r_comb_1,
        r_comb_2: c.r_comb_2,
        sigma_star_sq: c.sigma_star_sq,
        ratio: gains.regime_ratios().0,
        p_t: split.p_t1,
        p_u: split.p_u2,
        regime: r.regime.to_string(),
        best_a: c.best_a.canonical().to_string(),
    })
}

pub fn curve(
    ratio: f64,
    log10_lo: f64,
    log10_hi: f64,
    points: u32,
    gamma_sq: f64,
) -> Result<Vec<f64>> {
    if points < 2 || !(log10_hi > log10_lo) {
        return Err(Error::InvalidSweep(
            "need at least two points over a nonempty range".into(),
        ));
    }
    let template = SweepTemplate::symmetric(1.0, ratio);
    let mut out = Vec::with_capacity(points as usize * CURVE_STRIDE);
    for k in 0..points {
        let lp = log10_lo + (log10_hi - log10_lo) * f64::from(k) / f64::from(points - 1);
        let p = 10f64.powf(lp);
        let gains = template.gains_at(p)?;
        let split = symmetric_split(&gains, gamma(gamma_sq))?;
        let r = secure_rates(&gains, &split)?;
        let normalizer = 0.5 * (1.0 + p).log2();
        out.extend([
            lp,
            r.sum(),
            r.diagnostics.receiver1.r_comb_2,
            r.penalty1,
            r.sum() / normalizer,
        ]);
    }
    Ok(out)
}

#[wasm_bindgen]
#[derive(Debug, Clone, PartialEq)]
pub struct CryptoView {
    pub ks: f64,
    pub mi_bits: f64,
    pub rows: u32,
    pub cols: u32,
    freqs: Vec<f64>,
}

#[wasm_bindgen]
impl CryptoView {
    /// Row-major joint frequencies summing to one.
    #[wasm_bindgen(getter)]
    pub fn freqs(&self) -> Vec<f64> {
        self.freqs.clone()
    }
}

pub fn crypto(k: u32, samples: usize, seed: u64, masked: bool) -> Result<CryptoView> {
    let config = masking_config(1e4, k, [2, 2, 2, 2], 1, samples, seed)?;
    let masking = if masked {
        Masking::Jammed
    } else {
        Masking::Unmasked
    };
    let (stats, hist) = crypto_histogram(&config, masking)?;
    let (rows, cols) = hist.shape();
    let n = hist.total() as f64;
    Ok(CryptoView {
        ks: stats.ks,
        mi_bits: stats.mi_bits,
        rows: rows as u32,
        cols: cols as u32,
        freqs: hist.counts().iter().map(|&c| c as f64 / n).collect(),
    })
}
