//! Asymmetric compute-and-forward rates for the effective two-user MAC seen
//! by each receiver once the other user's jamming codeword is folded into
//! the noise.
//!
//! Coefficient `a[0]` always pairs with `h_eff[0]`/`b_eff[0]` (the
//! receiver's own message) and `a[1]` with the aligned pair (the other
//! user's message superimposed on this user's jamming codeword).

use std::fmt;

use crate::channel::{ChannelGains, PowerSplit};
use crate::error::{Error, Result};

/// Floor applied to `b_eff` entries when a message power is exactly zero.
pub const B_EFF_FLOOR: f64 = 1e-12;

/// Relative tolerance under which two effective variances count as tied.
const TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Receiver {
    One,
    Two,
}

impl Receiver {
    pub fn index(self) -> u8 {
        match self {
            Receiver::One => 1,
            Receiver::Two => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectiveMac {
    pub h_eff: [f64; 2],
    pub b_eff: [f64; 2],
    pub p: f64,
    pub alpha: f64,
    pub receiver: Receiver,
}

impl EffectiveMac {
    /// Free-standing MAC, mostly for experiments and tests.
    pub fn new(h_eff: [f64; 2], b_eff: [f64; 2], p: f64) -> Result<Self> {
        if !(p.is_finite() && p > 0.0) {
            return Err(Error::NonPositiveBudget(p));
        }
        for (index, b) in b_eff.iter().enumerate() {
            if !(b.is_finite() && *b > 0.0) {
                return Err(Error::DegenerateScaling { index: index + 1 });
            }
        }
        for (h, name) in h_eff.iter().zip(["h_eff(1)", "h_eff(2)"]) {
            if !h.is_finite() {
                return Err(Error::InvalidGain { name, value: *h });
            }
        }
        Ok(Self {
            h_eff,
            b_eff,
            p,
            alpha: 0.0,
            receiver: Receiver::One,
        })
    }

    /// Power of the receiver's own message codeword, `p * b_eff(1)^2`.
    pub fn own_power(&self) -> f64 {
        self.p * self.b_eff[0] * self.b_eff[0]
    }

    /// Power of the aligned pair, `p * b_eff(2)^2`.
    pub fn aligned_power(&self) -> f64 {
        self.p * self.b_eff[1] * self.b_eff[1]
    }

    /// `sum_l h(l)^2 b(l)^2`.
    fn gain_energy(&self) -> f64 {
        (0..2)
            .map(|l| (self.h_eff[l] * self.b_eff[l]).powi(2))
            .sum()
    }

    /// Residual vector `(beta, sqrt(p) b(l) (beta h(l) - a(l)))` at the
    /// optimal `beta`; its squared norm is the effective variance.
    fn residual(&self, a: [i64; 2]) -> [f64; 3] {
        let beta = beta_for(self, a);
        let sp = self.p.sqrt();
        [
            beta,
            sp * self.b_eff[0] * (beta * self.h_eff[0] - a[0] as f64),
            sp * self.b_eff[1] * (beta * self.h_eff[1] - a[1] as f64),
        ]
    }
}

pub fn effective_mac(gains: &ChannelGains, split: &PowerSplit, receiver: Receiver) -> EffectiveMac {
    let (alpha1, alpha2) = gains.alphas();
    let p = gains.p;
    let (h_direct, h_cross, alpha, leak, own, aligned) = match receiver {
        Receiver::One => (
            gains.h11,
            gains.h21,
            alpha1,
            split.p_u2,
            split.p_t1,
            split.p_t2 + split.p_u1,
        ),
        Receiver::Two => (
            gains.h22,
            gains.h12,
            alpha2,
            split.p_u1,
            split.p_t2,
            split.p_t1 + split.p_u2,
        ),
    };
    let norm = (1.0 + alpha * alpha * leak).sqrt();
    let b = |power: f64| (power / p).sqrt().max(B_EFF_FLOOR);
    EffectiveMac {
        h_eff: [h_direct / norm, h_cross / norm],
        b_eff: [b(own), b(aligned)],
        p,
        alpha,
        receiver,
    }
}

/// Nonzero integer combination coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IntegerCoefficients([i64; 2]);

impl IntegerCoefficients {
    pub fn new(a1: i64, a2: i64) -> Result<Self> {
        if a1 == 0 && a2 == 0 {
            return Err(Error::ZeroCoefficients);
        }
        Ok(Self([a1, a2]))
    }

    pub fn get(&self) -> [i64; 2] {
        self.0
    }

    /// Representative of `{a, -a}` whose leading nonzero entry is positive.
    pub fn canonical(&self) -> Self {
        let lead = if self.0[0] != 0 { self.0[0] } else { self.0[1] };
        if lead < 0 {
            Self([-self.0[0], -self.0[1]])
        } else {
            *self
        }
    }

    pub fn max_abs(&self) -> i64 {
        self.0[0].abs().max(self.0[1].abs())
    }
}

impl fmt::Display for IntegerCoefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0[0], self.0[1])
    }
}

/// Effective noise variance of the combination `a` with scaling `beta`:
/// `beta^2 + p * sum_l b(l)^2 (beta h(l) - a(l))^2`.
pub fn sigma_eff_sq(mac: &EffectiveMac, beta: f64, a: &IntegerCoefficients) -> f64 {
    let [a1, a2] = a.get();
    let r1 = beta * mac.h_eff[0] - a1 as f64;
    let r2 = beta * mac.h_eff[1] - a2 as f64;
    beta * beta + mac.p * (mac.b_eff[0].powi(2) * r1 * r1 + mac.b_eff[1].powi(2) * r2 * r2)
}

fn beta_for(mac: &EffectiveMac, a: [i64; 2]) -> f64 {
    let num: f64 = (0..2)
        .map(|l| mac.b_eff[l].powi(2) * mac.h_eff[l] * a[l] as f64)
        .sum();
    mac.p * num / (1.0 + mac.p * mac.gain_energy())
}

/// Closed-form minimizer of [`sigma_eff_sq`] over `beta`.
pub fn optimal_beta(mac: &EffectiveMac, a: &IntegerCoefficients) -> f64 {
    beta_for(mac, a.get())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SigmaMin {
    pub sigma_star_sq: f64,
    pub best_a: IntegerCoefficients,
    pub best_beta: f64,
}

/// Box half-width `1 + ceil(sqrt(1 + p max_l h(l)^2 b(l)^2))` for the search.
pub fn enumeration_radius(mac: &EffectiveMac) -> i64 {
    let peak = (0..2)
        .map(|l| (mac.h_eff[l] * mac.b_eff[l]).powi(2))
        .fold(0.0, f64::max);
    1 + (1.0 + mac.p * peak).sqrt().ceil() as i64
}

/// Minimum effective variance over `beta` and all nonzero `a` with
/// `max|a(l)| <= enumeration_radius(mac)`.
pub fn minimize_sigma(mac: &EffectiveMac) -> SigmaMin {
    minimize_sigma_in_box(mac, enumeration_radius(mac))
}

fn dot(x: &[f64; 3], y: &[f64; 3]) -> f64 {
    x[0] * y[0] + x[1] * y[1] + x[2] * y[2]
}

fn cross_norm_sq(x: &[f64; 3], y: &[f64; 3]) -> f64 {
    let c = [
        x[1] * y[2] - x[2] * y[1],
        x[2] * y[0] - x[0] * y[2],
        x[0] * y[1] - x[1] * y[0],
    ];
    dot(&c, &c)
}

fn combine(k1: i64, u: [i64; 2], k2: i64, v: [i64; 2]) -> [i64; 2] {
    [k1 * u[0] + k2 * v[0], k1 * u[1] + k2 * v[1]]
}

/// Lagrange-Gauss reduction of the rank-2 lattice spanned by the residual
/// vectors of `a = (1,0)` and `a = (0,1)`. Returns the reduced basis in
/// coefficient space, shortest first.
fn reduced_basis(mac: &EffectiveMac) -> ([i64; 2], [i64; 2]) {
    let mut u = [1i64, 0];
    let mut v = [0i64, 1];
    let mut ru = mac.residual(u);
    let mut rv = mac.residual(v);
    if dot(&rv, &rv) < dot(&ru, &ru) {
        std::mem::swap(&mut u, &mut v);
        std::mem::swap(&mut ru, &mut rv);
    }
    loop {
        let mu = (dot(&ru, &rv) / dot(&ru, &ru)).round();
        if mu == 0.0 || !mu.is_finite() {
            break;
        }
        let mu = mu as i64;
        let next = [v[0] - mu * u[0], v[1] - mu * u[1]];
        // residuals are linear in a, but recomputing avoids cancellation
        let rnext = mac.residual(next);
        if dot(&rnext, &rnext) >= dot(&ru, &ru) {
            v = next;
            break;
        }
        v = u;
        u = next;
        ru = rnext;
        rv = mac.residual(v);
    }
    (u, v)
}

/// Exact minimum over the box `max|a(l)| <= radius` (radius at least 1).
///
/// The minimum over all of `Z^2` comes from the reduced basis; the ellipse
/// `sigma^2(a) <= R` is then enumerated in that basis, doubling `R` until it
/// holds a point of the box. Ties are broken toward the lexicographically
/// smallest canonical `a`.
pub fn minimize_sigma_in_box(mac: &EffectiveMac, radius: i64) -> SigmaMin {
    let radius = radius.max(1);
    let (u, v) = reduced_basis(mac);
    let ru = mac.residual(u);
    let rv = mac.residual(v);
    let g11 = dot(&ru, &ru);
    let g12 = dot(&ru, &rv);
    let det = cross_norm_sq(&ru, &rv).max(f64::MIN_POSITIVE);
    let sigma_of = |a: [i64; 2]| {
        let coeffs = IntegerCoefficients(a);
        sigma_eff_sq(mac, optimal_beta(mac, &coeffs), &coeffs)
    };
    let in_box = |a: [i64; 2]| a[0].abs() <= radius && a[1].abs() <= radius;

    let mut bound = sigma_of(u) * (1.0 + 1e-9);
    loop {
        let mut best: Option<(f64, [i64; 2])> = None;
        let slack = 1e-9;
        let k2_max = ((bound * g11 / det).sqrt() + slack).floor() as i64;
        for k2 in -k2_max..=k2_max {
            let center = -(k2 as f64) * g12 / g11;
            let spare = (bound - (k2 * k2) as f64 * det / g11).max(0.0) / g11;
            let half_width = spare.sqrt() + slack;
            let lo = (center - half_width).ceil() as i64;
            let hi = (center + half_width).floor() as i64;
            for k1 in lo..=hi {
                let a = combine(k1, u, k2, v);
                if a == [0, 0] || !in_box(a) {
                    continue;
                }
                let canon = IntegerCoefficients(a).canonical().get();
                let s = sigma_of(canon);
                best = match best {
                    None => Some((s, canon)),
                    Some((bs, ba)) => {
                        let tied = (s - bs).abs() <= TIE_TOLERANCE * bs.max(s);
                        if (tied && canon < ba) || (!tied && s < bs) {
                            Some((s.min(bs), canon))
                        } else {
                            Some((bs, ba))
                        }
                    }
                };
            }
        }
        if let Some((s, a)) = best {
            let best_a = IntegerCoefficients(a);
            return SigmaMin {
                sigma_star_sq: s,
                best_a,
                best_beta: optimal_beta(mac, &best_a),
            };
        }
        bound *= 2.0;
    }
}

/// Lower bound on the sum of the two optimal combination rates,
/// `1/2 log2((1 + p sum h^2 b^2) / (b(1)^2 b(2)^2)) - 1`.
pub fn sum_rate_lower(mac: &EffectiveMac) -> Result<f64> {
    for (index, b) in mac.b_eff.iter().enumerate() {
        if *b == 0.0 {
            return Err(Error::DegenerateScaling { index: index + 1 });
        }
    }
    let b1 = mac.b_eff[0].powi(2);
    let b2 = mac.b_eff[1].powi(2);
    Ok(0.5 * ((1.0 + mac.p * mac.gain_energy()) / (b1 * b2)).log2() - 1.0)
}

/// Direct expansion of the smaller combination rate:
/// `1/2 log2(1 + h1^2 P_own + h2^2 P_aligned) + log2 p + 1/2 log2 sigma*^2
///  - 1/2 log2 P_own - log2 P_aligned - 1`.
pub fn r_comb_2_direct(mac: &EffectiveMac, sigma_star_sq: f64) -> f64 {
    let own = mac.own_power();
    let aligned = mac.aligned_power();
    let h = mac.h_eff;
    0.5 * (1.0 + h[0] * h[0] * own + h[1] * h[1] * aligned).log2()
        + mac.p.log2()
        + 0.5 * sigma_star_sq.log2()
        - 0.5 * own.log2()
        - aligned.log2()
        - 1.0
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CombinationRates {
    /// Larger combination rate (bits), clamped at zero.
    pub r_comb_1: f64,
    /// Smaller combination rate (bits), clamped at zero.
    pub r_comb_2: f64,
    /// Values before clamping, after any reordering.
    pub raw: [f64; 2],
    pub best_a: IntegerCoefficients,
    pub best_beta: f64,
    pub sigma_star_sq: f64,
    pub sum_rate_lower: f64,
    /// `|r_comb_2 (subtraction) - r_comb_2 (direct expansion)|`.
    pub cross_check_gap: f64,
    /// Set when the aligned-pair rate came out below its complement and the
    /// pair had to be swapped to keep the descending order.
    pub reordered: bool,
}

pub fn combination_rates(mac: &EffectiveMac) -> Result<CombinationRates> {
    let sum = sum_rate_lower(mac)?;
    let min = minimize_sigma(mac);
    let first = 0.5 * mac.aligned_power().log2() - 0.5 * min.sigma_star_sq.log2();
    let second = sum - first;
    let gap = (second - r_comb_2_direct(mac, min.sigma_star_sq)).abs();
    let (hi, lo, reordered) = if first < second {
        (second, first, true)
    } else {
        (first, second, false)
    };
    Ok(CombinationRates {
        r_comb_1: hi.max(0.0),
        r_comb_2: lo.max(0.0),
        raw: [hi, lo],
        best_a: min.best_a,
        best_beta: min.best_beta,
        sigma_star_sq: min.sigma_star_sq,
        sum_rate_lower: sum,
        cross_check_gap: gap,
        reordered,
    })
}
