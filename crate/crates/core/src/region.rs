//! Secure rate pairs, secure-degrees-of-freedom sweeps and power-split search.

use crate::channel::{
    classify_regime, symmetric_split, validate_split, ChannelGains, InterferenceRegime, PowerSplit,
};
use crate::cnf::{combination_rates, effective_mac, CombinationRates, Receiver};
use crate::error::{Error, Result};

/// Rate bounds in bits per channel use.
///
/// `r1` and `r2` are suprema: any rate strictly below them is achievable,
/// so `open_bound` is always set.
#[derive(Debug, Clone, PartialEq)]
pub struct SecureRatePair {
    pub r1: f64,
    pub r2: f64,
    /// `1/2 log2((p_u2 + p_t1) / p_u2)`, leakage of message 1 at receiver 2.
    pub penalty1: f64,
    /// `1/2 log2((p_u1 + p_t2) / p_u1)`.
    pub penalty2: f64,
    pub regime: InterferenceRegime,
    pub open_bound: bool,
    pub diagnostics: RateDiagnostics,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RateDiagnostics {
    /// `r_comb_2 - penalty` before clamping, per user.
    pub raw: [f64; 2],
    pub receiver1: CombinationRates,
    pub receiver2: CombinationRates,
    /// Receivers whose folded jamming term exceeds unit noise power.
    pub jamming_above_noise: Vec<u8>,
}

impl SecureRatePair {
    pub fn sum(&self) -> f64 {
        self.r1 + self.r2
    }
}

/// Secrecy penalty `1/2 log2((p_jam + p_msg) / p_jam)`.
pub fn secrecy_penalty(p_msg: f64, p_jam: f64) -> f64 {
    0.5 * ((p_jam + p_msg) / p_jam).log2()
}

pub fn secure_rates(gains: &ChannelGains, split: &PowerSplit) -> Result<SecureRatePair> {
    let checked = validate_split(gains, *split)?;
    if split.p_u2 == 0.0 {
        return Err(Error::ZeroJamming { user: 2 });
    }
    if split.p_u1 == 0.0 {
        return Err(Error::ZeroJamming { user: 1 });
    }
    let regime = classify_regime(gains)?;
    let receiver1 = combination_rates(&effective_mac(gains, split, Receiver::One))?;
    let receiver2 = combination_rates(&effective_mac(gains, split, Receiver::Two))?;
    let penalty1 = secrecy_penalty(split.p_t1, split.p_u2);
    let penalty2 = secrecy_penalty(split.p_t2, split.p_u1);
    let raw = [receiver1.r_comb_2 - penalty1, receiver2.r_comb_2 - penalty2];
    Ok(SecureRatePair {
        r1: raw[0].max(0.0),
        r2: raw[1].max(0.0),
        penalty1,
        penalty2,
        regime,
        open_bound: true,
        diagnostics: RateDiagnostics {
            raw,
            receiver1,
            receiver2,
            jamming_above_noise: checked.warnings(),
        },
    })
}

/// Direct gains and a fixed regime ratio; cross gains follow the budget so
/// that `log(h_cross^2 P) / log(h_direct^2 P)` stays at `ratio`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepTemplate {
    pub h11: f64,
    pub h22: f64,
    pub ratio: f64,
}

impl SweepTemplate {
    pub fn symmetric(direct: f64, ratio: f64) -> Self {
        Self {
            h11: direct,
            h22: direct,
            ratio,
        }
    }

    /// `h_cross^2 = (h_direct^2 P)^ratio / P` for both cross links.
    pub fn gains_at(&self, p: f64) -> Result<ChannelGains> {
        let cross = |direct: f64| ((direct * direct * p).powf(self.ratio) / p).sqrt();
        ChannelGains::new(self.h11, self.h22, cross(self.h22), cross(self.h11), p)
    }
}

/// How each sweep point picks its power split.
#[derive(Debug, Clone, PartialEq)]
pub enum SplitRule {
    /// Symmetric allocation; `None` uses `gamma^2 = 1/(h21^2 P)`.
    Symmetric(Option<f64>),
    /// Best split over a grid, re-evaluated at each point.
    Search(SplitGrid),
}

impl Default for SplitRule {
    fn default() -> Self {
        SplitRule::Symmetric(None)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SdofPoint {
    pub p: f64,
    pub r1: f64,
    pub r2: f64,
    pub sum_rate: f64,
    /// `1/2 log2(1 + P)`.
    pub normalizer: f64,
    pub ratio: f64,
    pub regime: InterferenceRegime,
}

impl SdofPoint {
    fn new(p: f64, rates: &SecureRatePair) -> Self {
        let sum_rate = rates.sum();
        let normalizer = 0.5 * (1.0 + p).log2();
        let ratio = if normalizer > 0.0 {
            sum_rate / normalizer
        } else {
            0.0
        };
        Self {
            p,
            r1: rates.r1,
            r2: rates.r2,
            sum_rate,
            normalizer,
            ratio,
            regime: rates.regime,
        }
    }
}

fn split_for(gains: &ChannelGains, rule: &SplitRule) -> Result<(PowerSplit, SecureRatePair)> {
    match rule {
        SplitRule::Symmetric(gamma_sq) => {
            let split = symmetric_split(gains, *gamma_sq)?;
            let rates = secure_rates(gains, &split)?;
            Ok((split, rates))
        }
        SplitRule::Search(grid) => search_split(gains, grid),
    }
}

pub fn sdof_sweep(
    template: &SweepTemplate,
    p_list: &[f64],
    rule: &SplitRule,
) -> Result<Vec<SdofPoint>> {
    if p_list.is_empty() {
        return Err(Error::InvalidSweep("empty power list".into()));
    }
    if p_list.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::InvalidSweep(
            "power list must be strictly increasing".into(),
        ));
    }
    p_list
        .iter()
        .map(|&p| {
            let gains = template.gains_at(p)?;
            let (_, rates) = split_for(&gains, rule)?;
            Ok(SdofPoint::new(p, &rates))
        })
        .collect()
}

/// Least-squares slope of the secure sum rate against `1/2 log2 P`.
pub fn scaling_slope(points: &[SdofPoint]) -> Result<f64> {
    let (lo, hi) = points.iter().fold((f64::INFINITY, 0.0f64), |(lo, hi), pt| {
        (lo.min(pt.p), hi.max(pt.p))
    });
    let decades = if points.is_empty() {
        0.0
    } else {
        (hi / lo).log10()
    };
    if points.len() < 3 || !(decades >= 2.0) {
        return Err(Error::InsufficientSpan {
            points: points.len(),
            decades,
        });
    }
    let n = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|pt| 0.5 * pt.p.log2()).collect();
    let mean_x = xs.iter().sum::<f64>() / n;
    let mean_y = points.iter().map(|pt| pt.sum_rate).sum::<f64>() / n;
    let (sxy, sxx) = xs
        .iter()
        .zip(points)
        .fold((0.0, 0.0), |(sxy, sxx), (x, pt)| {
            let dx = x - mean_x;
            (sxy + dx * (pt.sum_rate - mean_y), sxx + dx * dx)
        });
    Ok(sxy / sxx)
}

/// Candidate splits for [`search_split`].
#[derive(Debug, Clone, PartialEq)]
pub enum SplitGrid {
    /// Symmetric allocations with each listed `gamma^2`.
    Gamma(Vec<f64>),
    /// Independent message fractions `f1, f2` in `k/(levels+1)`,
    /// `k = 1..=levels`; the rest of each budget goes to jamming.
    Fractions {
        levels: usize,
    },
    Explicit(Vec<PowerSplit>),
}

impl SplitGrid {
    /// `levels` values of `gamma^2` log-spaced over `[lo, hi]`.
    pub fn log_gamma(lo: f64, hi: f64, levels: usize) -> Self {
        let steps = levels.max(2) - 1;
        let (a, b) = (lo.log10(), hi.log10());
        SplitGrid::Gamma(
            (0..levels.max(1))
                .map(|k| 10f64.powf(a + (b - a) * k as f64 / steps as f64))
                .collect(),
        )
    }

    pub fn candidates(&self, gains: &ChannelGains) -> Vec<PowerSplit> {
        match self {
            SplitGrid::Gamma(list) => list
                .iter()
                .filter_map(|g| symmetric_split(gains, Some(*g)).ok())
                .collect(),
            SplitGrid::Fractions { levels } => {
                let p = gains.p;
                let r1 = (gains.h11 / gains.h21).powi(2);
                let r2 = (gains.h22 / gains.h12).powi(2);
                let fracs: Vec<f64> = (1..=*levels)
                    .map(|k| k as f64 / (*levels + 1) as f64)
                    .collect();
                let mut out = Vec::with_capacity(levels * levels);
                for &f1 in &fracs {
                    for &f2 in &fracs {
                        out.push(PowerSplit::new(
                            f1 * p,
                            (1.0 - f1) * p * r1,
                            f2 * p,
                            (1.0 - f2) * p * r2,
                        ));
                    }
                }
                out
            }
            SplitGrid::Explicit(list) => list.clone(),
        }
    }
}

/// Split maximizing `r1 + r2` over the grid. Infeasible candidates are
/// skipped; ties go to the larger `p_t1`, then to the earlier candidate.
pub fn search_split(
    gains: &ChannelGains,
    grid: &SplitGrid,
) -> Result<(PowerSplit, SecureRatePair)> {
    let mut best: Option<(PowerSplit, SecureRatePair)> = None;
    for split in grid.candidates(gains) {
        let Ok(rates) = secure_rates(gains, &split) else {
            continue;
        };
        let better = match &best {
            None => true,
            Some((bs, br)) => {
                let (s, bsum) = (rates.sum(), br.sum());
                let tol = 1e-12 * s.abs().max(bsum.abs()).max(1.0);
                s > bsum + tol || ((s - bsum).abs() <= tol && split.p_t1 > bs.p_t1)
            }
        };
        if better {
            best = Some((split, rates));
        }
    }
    best.ok_or(Error::EmptyGrid)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn penalty_examples() {
        assert!((secrecy_penalty(5.0, 5.0) - 0.5).abs() < 1e-15);
        assert!((secrecy_penalty(15.0, 5.0) - 1.0).abs() < 1e-15);
        assert!(secrecy_penalty(1e-12, 5.0) < 1e-12);
    }

    #[test]
    fn penalty_decreases_with_jamming_power() {
        let mut last = f64::INFINITY;
        for k in 1..50 {
            let pen = secrecy_penalty(100.0, k as f64 * 0.7);
            assert!(pen < last && pen >= 0.0);
            last = pen;
        }
    }

    #[test]
    fn zero_jamming_is_a_domain_error() {
        let g = ChannelGains::symmetric(1.0, 0.5, 100.0).unwrap();
        let err = secure_rates(&g, &PowerSplit::new(90.0, 16.0, 90.0, 0.0)).unwrap_err();
        assert_eq!(err, Error::ZeroJamming { user: 2 });
        assert!(err.to_string().contains("secrecy penalty unbounded"));
    }

    #[test]
    fn symmetric_channel_gives_equal_rates() {
        let g = ChannelGains::symmetric(1.0, 0.3, 1e5).unwrap();
        for gamma in [1e-4, 1e-3, 1e-2] {
            let split = symmetric_split(&g, Some(gamma)).unwrap();
            let r = secure_rates(&g, &split).unwrap();
            assert!((r.r1 - r.r2).abs() < 1e-12);
            assert!(r.open_bound);
        }
    }

    #[test]
    fn vanishing_message_power_removes_penalty() {
        let g = ChannelGains::symmetric(1.0, 0.5, 100.0).unwrap();
        let split = PowerSplit::new(1e-9, 16.0, 96.0, 16.0);
        let r = secure_rates(&g, &split).unwrap();
        assert!(r.penalty1 < 1e-9);
        assert!((r.r1 - r.diagnostics.receiver1.r_comb_2.max(0.0)).abs() < 1e-9);
    }

    #[test]
    fn sweep_template_ratio_recipe() {
        let t = SweepTemplate::symmetric(1.0, 0.75);
        let g = t.gains_at(1e4).unwrap();
        assert!((g.h21 * g.h21 - 0.1).abs() < 1e-15);
        assert!((g.h12 * g.h12 - 0.1).abs() < 1e-15);
    }

    #[test]
    fn sweep_matches_frozen_oracle() {
        // mpmath oracle, 60 digits, exact 2-D integer search:
        // (P, r_comb_2 at receiver 1, penalty 1, sigma*^2)
        let oracle = [
            (1e4, 1.25806453288836, 3.3283911821095, 42.30931214916),
            (1e6, 3.56901152912549, 4.98359034083477, 1094.34605112546),
            (1e8, 2.32896363584214, 6.64392759964452, 199.999996039604),
            (1e10, 6.91073275966941, 8.30482742784676, 115452.447518592),
        ];
        let t = SweepTemplate::symmetric(1.0, 0.75);
        for (p, rc2, pen, sigma) in oracle {
            let g = t.gains_at(p).unwrap();
            let split = symmetric_split(&g, None).unwrap();
            let r = secure_rates(&g, &split).unwrap();
            let c = &r.diagnostics.receiver1;
            assert!(
                (c.r_comb_2 - rc2).abs() < 1e-9,
                "P={p}: {} vs {rc2}",
                c.r_comb_2
            );
            assert!((r.penalty1 - pen).abs() < 1e-9);
            assert!(((c.sigma_star_sq - sigma) / sigma).abs() < 1e-9);
            assert_eq!(r.r1, 0.0);
        }
        let pts = sdof_sweep(&t, &[1e4, 1e6, 1e8, 1e10], &SplitRule::default()).unwrap();
        assert!(pts.iter().all(|pt| pt.ratio == 0.0));
        assert!(pts
            .iter()
            .all(|pt| pt.regime == InterferenceRegime::ModeratelyWeak));
    }

    #[test]
    fn sweep_rejects_bad_lists() {
        let t = SweepTemplate::symmetric(1.0, 0.75);
        assert!(sdof_sweep(&t, &[], &SplitRule::default()).is_err());
        assert!(sdof_sweep(&t, &[1e4, 1e4], &SplitRule::default()).is_err());
    }

    #[test]
    fn low_snr_point_has_zero_ratio() {
        let t = SweepTemplate::symmetric(1.0, 0.75);
        let pts = sdof_sweep(&t, &[2.0], &SplitRule::default()).unwrap();
        assert_eq!(pts[0].sum_rate, 0.0);
        assert_eq!(pts[0].ratio, 0.0);
    }

    fn synthetic(p: f64, sum_rate: f64) -> SdofPoint {
        SdofPoint {
            p,
            r1: sum_rate / 2.0,
            r2: sum_rate / 2.0,
            sum_rate,
            normalizer: 0.5 * (1.0 + p).log2(),
            ratio: 0.0,
            regime: InterferenceRegime::Weak,
        }
    }

    #[test]
    fn slope_examples() {
        let pts: Vec<_> = [1e2, 1e3, 1e4, 1e5]
            .iter()
            .map(|&p| synthetic(p, 0.6 * 0.5 * f64::log2(p) + 1.25))
            .collect();
        assert!((scaling_slope(&pts).unwrap() - 0.6).abs() < 1e-12);
        let flat: Vec<_> = [1e2, 1e3, 1e4].iter().map(|&p| synthetic(p, 3.0)).collect();
        assert!(scaling_slope(&flat).unwrap().abs() < 1e-15);
        let narrow: Vec<_> = [1e2, 2e2, 9e2].iter().map(|&p| synthetic(p, 3.0)).collect();
        assert!(matches!(
            scaling_slope(&narrow),
            Err(Error::InsufficientSpan { .. })
        ));
        assert!(matches!(
            scaling_slope(&flat[..2]),
            Err(Error::InsufficientSpan { .. })
        ));
    }

    #[test]
    fn search_examples() {
        let g = ChannelGains::symmetric(1.0, 0.3, 1e6).unwrap();
        let reference = symmetric_split(&g, Some(1e-3)).unwrap();
        let ref_rates = secure_rates(&g, &reference).unwrap();

        let grid = SplitGrid::Gamma(vec![1e-4, 1e-3, 1e-2, 0.1]);
        let (_, best) = search_split(&g, &grid).unwrap();
        assert!(best.sum() >= ref_rates.sum());

        let (split, _) = search_split(&g, &SplitGrid::Explicit(vec![reference])).unwrap();
        assert_eq!(split, reference);

        assert_eq!(
            search_split(&g, &SplitGrid::Explicit(vec![])),
            Err(Error::EmptyGrid)
        );
    }

    #[test]
    fn search_over_symmetric_fraction_grid() {
        let g = ChannelGains::symmetric(1.0, 0.3, 1e6).unwrap();
        let grid = SplitGrid::Fractions { levels: 9 };
        let (split, rates) = search_split(&g, &grid).unwrap();
        // exhaustive recheck of the same grid
        let best_sum = grid
            .candidates(&g)
            .iter()
            .filter_map(|s| secure_rates(&g, s).ok())
            .map(|r| r.sum())
            .fold(0.0, f64::max);
        assert!((rates.sum() - best_sum).abs() < 1e-12);
        // the optimum need not be symmetric, but its mirror ties
        let mirror = secure_rates(&g, &split.swapped()).unwrap();
        assert!((mirror.sum() - rates.sum()).abs() < 1e-12);
        assert!((mirror.r1 - rates.r2).abs() < 1e-12);
        assert!(split.p_t1 >= split.p_t2);
    }
}
