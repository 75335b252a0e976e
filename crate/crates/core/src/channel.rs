//! Two-user Gaussian interference channel parameters.
//!
//! Receiver 1 observes `y1 = h11 x1 + h21 x2 + z1` and receiver 2 observes
//! `y2 = h22 x2 + h12 x1 + z2`, with unit-variance noise and a common power
//! budget `p` per user. All quantities are linear scale; rates are in bits.

use std::fmt;

use crate::error::{Error, Result, UserIndex};

/// Relative slack on the per-user budget inequalities.
pub const BUDGET_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelGains {
    pub h11: f64,
    pub h22: f64,
    /// Cross gain from transmitter 1 to receiver 2.
    pub h12: f64,
    /// Cross gain from transmitter 2 to receiver 1.
    pub h21: f64,
    pub p: f64,
}

impl ChannelGains {
    /// Builds a gain set, rejecting zero or non-finite gains, a nonpositive
    /// budget, and direct links that sit at or below the noise level.
    pub fn new(h11: f64, h22: f64, h12: f64, h21: f64, p: f64) -> Result<Self> {
        let gains = Self {
            h11,
            h22,
            h12,
            h21,
            p,
        };
        gains.validate()?;
        Ok(gains)
    }

    /// Symmetric channel: `h11 = h22 = direct`, `h12 = h21 = cross`.
    pub fn symmetric(direct: f64, cross: f64, p: f64) -> Result<Self> {
        Self::new(direct, direct, cross, cross, p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.p.is_finite() && self.p > 0.0) {
            return Err(Error::NonPositiveBudget(self.p));
        }
        for (name, value) in [
            ("h11", self.h11),
            ("h22", self.h22),
            ("h12", self.h12),
            ("h21", self.h21),
        ] {
            if !value.is_finite() || value == 0.0 {
                return Err(Error::InvalidGain { name, value });
            }
        }
        for (user, h) in [(1, self.h11), (2, self.h22)] {
            let log_snr = (h * h * self.p).log2();
            if !(log_snr > 0.0) {
                return Err(Error::BelowNoise { user, log_snr });
            }
        }
        Ok(())
    }

    /// Interference-to-noise ratios `(INR1, INR2) = (h21^2 p, h12^2 p)`.
    pub fn inr(&self) -> (f64, f64) {
        (self.h21 * self.h21 * self.p, self.h12 * self.h12 * self.p)
    }

    /// Regime log-ratios `(log(h21^2 p)/log(h11^2 p), log(h12^2 p)/log(h22^2 p))`.
    pub fn regime_ratios(&self) -> (f64, f64) {
        self.regime_ratios_with(f64::log2)
    }

    /// Same ratios computed with an arbitrary logarithm.
    pub fn regime_ratios_with(&self, log: impl Fn(f64) -> f64) -> (f64, f64) {
        let (inr1, inr2) = self.inr();
        (
            log(inr1) / log(self.h11 * self.h11 * self.p),
            log(inr2) / log(self.h22 * self.h22 * self.p),
        )
    }

    /// Leakage-alignment factors `(alpha1, alpha2) = (h12 h21 / h22, h12 h21 / h11)`.
    ///
    /// `alpha1` scales the other user's jamming codeword as it reaches
    /// receiver 1, and `alpha2` the same at receiver 2.
    pub fn alphas(&self) -> (f64, f64) {
        let cross = self.h12 * self.h21;
        (cross / self.h22, cross / self.h11)
    }

    /// Gains for the same link geometry at a different budget.
    pub fn with_power(&self, p: f64) -> Result<Self> {
        Self::new(self.h11, self.h22, self.h12, self.h21, p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InterferenceRegime {
    Weak,
    ModeratelyWeak,
    /// Ratios fall outside both regimes, or in different regimes.
    OutOfScope(f64, f64),
}

impl InterferenceRegime {
    /// Both ratios in `[1/2, 2/3)` is weak; both in `[2/3, 1)` is moderately
    /// weak; anything else, including a mixed pair, is out of scope.
    pub fn from_ratios(r1: f64, r2: f64) -> Self {
        let weak = |r: f64| (0.5..2.0 / 3.0).contains(&r);
        let moderate = |r: f64| (2.0 / 3.0..1.0).contains(&r);
        if weak(r1) && weak(r2) {
            Self::Weak
        } else if moderate(r1) && moderate(r2) {
            Self::ModeratelyWeak
        } else {
            Self::OutOfScope(r1, r2)
        }
    }

    pub fn is_in_scope(&self) -> bool {
        !matches!(self, Self::OutOfScope(..))
    }

    /// Structural comparison that ignores the carried ratios.
    pub fn same_kind(&self, other: &Self) -> bool {
        std::mem::discriminant(self) == std::mem::discriminant(other)
    }
}

impl fmt::Display for InterferenceRegime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Weak => f.write_str("Weak"),
            Self::ModeratelyWeak => f.write_str("ModeratelyWeak"),
            Self::OutOfScope(..) => f.write_str("OutOfScope"),
        }
    }
}

/// Interference-to-noise ratios of both receivers.
pub fn inr(gains: &ChannelGains) -> (f64, f64) {
    gains.inr()
}

pub fn classify_regime(gains: &ChannelGains) -> Result<InterferenceRegime> {
    gains.validate()?;
    let (r1, r2) = gains.regime_ratios();
    Ok(InterferenceRegime::from_ratios(r1, r2))
}

/// Message (`t`) and jamming (`u`) powers of both users.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerSplit {
    pub p_t1: f64,
    pub p_u1: f64,
    pub p_t2: f64,
    pub p_u2: f64,
}

impl PowerSplit {
    pub fn new(p_t1: f64, p_u1: f64, p_t2: f64, p_u2: f64) -> Self {
        Self {
            p_t1,
            p_u1,
            p_t2,
            p_u2,
        }
    }

    /// Transmit power of each user: `p_t + (h_cross/h_direct)^2 p_u`.
    pub fn used_power(&self, gains: &ChannelGains) -> (f64, f64) {
        let s1 = gains.h21 / gains.h11;
        let s2 = gains.h12 / gains.h22;
        (
            self.p_t1 + s1 * s1 * self.p_u1,
            self.p_t2 + s2 * s2 * self.p_u2,
        )
    }

    /// Mirror image: swaps the roles of the two users.
    pub fn swapped(&self) -> Self {
        Self::new(self.p_t2, self.p_u2, self.p_t1, self.p_u1)
    }
}

/// A split that passed [`validate_split`], with the treated-as-noise jamming
/// levels `alpha1^2 p_u2` and `alpha2^2 p_u1` attached.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckedSplit {
    pub split: PowerSplit,
    pub leak_over_noise: [f64; 2],
}

impl CheckedSplit {
    /// Receivers whose folded jamming term exceeds unit noise power.
    pub fn warnings(&self) -> Vec<UserIndex> {
        self.leak_over_noise
            .iter()
            .zip([1, 2])
            .filter(|(level, _)| **level > 1.0 + BUDGET_TOLERANCE)
            .map(|(_, rx)| rx)
            .collect()
    }
}

pub fn validate_split(gains: &ChannelGains, split: PowerSplit) -> Result<CheckedSplit> {
    for (name, value) in [
        ("p_t1", split.p_t1),
        ("p_u1", split.p_u1),
        ("p_t2", split.p_t2),
        ("p_u2", split.p_u2),
    ] {
        if !value.is_finite() || value < 0.0 {
            return Err(Error::InvalidPower { name, value });
        }
    }
    let (used1, used2) = split.used_power(gains);
    for (user, used) in [(1, used1), (2, used2)] {
        if used > gains.p * (1.0 + BUDGET_TOLERANCE) {
            return Err(Error::BudgetExceeded {
                user,
                used,
                budget: gains.p,
            });
        }
    }
    let (a1, a2) = gains.alphas();
    Ok(CheckedSplit {
        split,
        leak_over_noise: [a1 * a1 * split.p_u2, a2 * a2 * split.p_u1],
    })
}

/// Default jamming fraction `1 / (h21^2 p)`, which puts the folded jamming
/// term at receiver 1 exactly at the noise level.
pub fn default_gamma_sq(gains: &ChannelGains) -> f64 {
    1.0 / (gains.h21 * gains.h21 * gains.p)
}

/// Symmetric allocation `p_t1 = p_t2 = (1 - g) p` with
/// `(h21/h11)^2 p_u1 = (h12/h22)^2 p_u2 = g p`, where `g = gamma_sq`.
///
/// Both budgets are met with equality.
pub fn symmetric_split(gains: &ChannelGains, gamma_sq: Option<f64>) -> Result<PowerSplit> {
    gains.validate()?;
    let g = gamma_sq.unwrap_or_else(|| default_gamma_sq(gains));
    if !(g > 0.0 && g < 1.0) {
        return Err(Error::GammaOutOfRange(g));
    }
    let p = gains.p;
    let r1 = gains.h11 / gains.h21;
    let r2 = gains.h22 / gains.h12;
    let p_t = (1.0 - g) * p;
    Ok(PowerSplit::new(p_t, g * p * r1 * r1, p_t, g * p * r2 * r2))
}
