//! One-dimensional nested lattices `step * Z`.
//!
//! The fundamental Voronoi cell is `[-step/2, step/2)`; ties at the half
//! step round toward `+inf`, so `quantize(x) + mod_lattice(x) = x` and
//! `mod_lattice` always lands inside the cell.

use rand::Rng;

use crate::channel::PowerSplit;
use crate::error::{Error, Result};

/// Relative tolerance when checking that a step ratio is an integer.
const NESTING_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalarLattice {
    step: f64,
}

impl ScalarLattice {
    pub fn new(step: f64) -> Result<Self> {
        if !(step.is_finite() && step > 0.0) {
            return Err(Error::InvalidStep(step));
        }
        Ok(Self { step })
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    /// Second moment of the Voronoi cell, `step^2 / 12`.
    pub fn second_moment(&self) -> f64 {
        self.step * self.step / 12.0
    }

    /// Index `k` of the nearest lattice point `k * step`.
    pub fn nearest_index(&self, x: f64) -> f64 {
        let scaled = x / self.step;
        let k = scaled.floor();
        if scaled - k >= 0.5 {
            k + 1.0
        } else {
            k
        }
    }

    pub fn quantize(&self, x: f64) -> f64 {
        self.nearest_index(x) * self.step
    }

    pub fn reduce(&self, x: f64) -> f64 {
        let half = 0.5 * self.step;
        let mut r = x - self.quantize(x);
        // rounding in x - k*step can leave r a hair outside the cell
        if r >= half {
            r -= self.step;
        } else if r < -half {
            r += self.step;
        }
        r
    }

    pub fn contains_in_cell(&self, x: f64) -> bool {
        let half = 0.5 * self.step;
        (-half..half).contains(&x)
    }
}

pub fn mod_lattice(x: f64, lat: &ScalarLattice) -> f64 {
    lat.reduce(x)
}

pub fn quantize(x: f64, lat: &ScalarLattice) -> f64 {
    lat.quantize(x)
}

/// Uniform draw on the Voronoi cell `[-step/2, step/2)`.
pub fn dither_sample<R: Rng + ?Sized>(lat: &ScalarLattice, rng: &mut R) -> f64 {
    let u: f64 = rng.random();
    let v = (u - 0.5) * lat.step;
    if v >= 0.5 * lat.step {
        -0.5 * lat.step
    } else {
        v
    }
}

/// Lattice whose Voronoi second moment equals `target_power`.
pub fn scale_to_power(target_power: f64) -> Result<ScalarLattice> {
    if !(target_power.is_finite() && target_power > 0.0) {
        return Err(Error::InvalidPower {
            name: "target_power",
            value: target_power,
        });
    }
    ScalarLattice::new((12.0 * target_power).sqrt())
}

/// `[t + u] mod lat`. Uniform and independent of `t` whenever `u` is uniform
/// over the cell of `lat`.
pub fn crypto_wrap(t: f64, u_dithered: f64, lat: &ScalarLattice) -> f64 {
    lat.reduce(t + u_dithered)
}

/// Rounds `coarse / fine` to a positive integer, or fails if it is not one.
fn integer_ratio(coarse: f64, fine: f64) -> Result<u64> {
    let ratio = coarse / fine;
    let rounded = ratio.round();
    if rounded < 1.0 || (ratio - rounded).abs() > NESTING_TOLERANCE * ratio {
        return Err(Error::NonIntegerNesting { ratio });
    }
    Ok(rounded as u64)
}

/// A coarse lattice inside a fine one; the codebook is the set of fine
/// points in the coarse Voronoi cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NestedPair {
    pub coarse: ScalarLattice,
    pub fine: ScalarLattice,
    ratio: u64,
}

impl NestedPair {
    pub fn new(coarse: ScalarLattice, fine: ScalarLattice) -> Result<Self> {
        let ratio = integer_ratio(coarse.step, fine.step)?;
        Ok(Self {
            coarse,
            fine,
            ratio,
        })
    }

    /// Nesting ratio `M`, which is also the codebook size.
    pub fn size(&self) -> u64 {
        self.ratio
    }

    /// Inner rate `log2(M)` bits per dimension.
    pub fn rate_bits(&self) -> f64 {
        (self.ratio as f64).log2()
    }

    /// Smallest fine-lattice index in the codebook; indices run over
    /// `first_index() .. first_index() + M`.
    pub fn first_index(&self) -> i64 {
        // ceil(-M/2)
        -((self.ratio / 2) as i64)
    }

    /// Codeword with position `k` in `0..M`.
    pub fn codeword(&self, k: u64) -> f64 {
        debug_assert!(k < self.ratio);
        (self.first_index() + k as i64) as f64 * self.fine.step
    }

    /// Position of a fine-lattice point after reduction into the coarse cell.
    pub fn position_of(&self, x: f64) -> u64 {
        let j = self.fine.nearest_index(self.coarse.reduce(x)) as i64;
        (j - self.first_index()).rem_euclid(self.ratio as i64) as u64
    }

    pub fn codewords(&self) -> Vec<f64> {
        (0..self.ratio).map(|k| self.codeword(k)).collect()
    }
}

pub fn build_codebook(pair: &NestedPair) -> Vec<f64> {
    pair.codewords()
}

/// A chain of lattices ordered from coarsest to finest, each nested in the
/// next with an integer step ratio.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeChain {
    lattices: Vec<ScalarLattice>,
}

/// Levels of the nine-lattice chain used by the jamming scheme, coarsest
/// first: common, message and jamming coarse lattices, then the fine ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainLevel {
    Common = 0,
    T2 = 1,
    T1 = 2,
    U2 = 3,
    U1 = 4,
    Tf2 = 5,
    Tf1 = 6,
    Uf2 = 7,
    Uf1 = 8,
}

pub const SCHEME_LEVELS: usize = 9;

impl LatticeChain {
    pub fn new(lattices: Vec<ScalarLattice>) -> Result<Self> {
        for pair in lattices.windows(2) {
            integer_ratio(pair[0].step, pair[1].step)?;
        }
        Ok(Self { lattices })
    }

    /// Nine-level chain from the common coarsest step and the eight adjacent
    /// integer ratios.
    pub fn scheme(coarsest_step: f64, ratios: [u32; 8]) -> Result<Self> {
        let mut lattices = vec![ScalarLattice::new(coarsest_step)?];
        for r in ratios {
            if r == 0 {
                return Err(Error::NonIntegerNesting { ratio: 0.0 });
            }
            let prev = lattices.last().expect("nonempty").step;
            lattices.push(ScalarLattice::new(prev / r as f64)?);
        }
        Self::new(lattices)
    }

    /// Fits a nine-level chain to a power split.
    ///
    /// The `anchor` coarse lattice gets exactly its target second moment; the
    /// other three coarse lattices take the nearest step that keeps the
    /// ratios integral (at least 1). The common lattice sits `common_ratio`
    /// above `T2`, and `fine_ratios` are the four ratios from `U1` down to
    /// `Uf1`. Use [`LatticeChain::achieved_split`] to read back the moments.
    pub fn fit(
        split: &PowerSplit,
        anchor: ChainLevel,
        common_ratio: u32,
        fine_ratios: [u32; 4],
    ) -> Result<Self> {
        let anchor = anchor as usize;
        if !(1..=4).contains(&anchor) {
            return Err(Error::InvalidConfig(
                "chain anchor must be a coarse message or jamming lattice".into(),
            ));
        }
        let mut targets = [0.0; 5];
        for (slot, (name, power)) in [
            ("p_t2", split.p_t2),
            ("p_t1", split.p_t1),
            ("p_u2", split.p_u2),
            ("p_u1", split.p_u1),
        ]
        .into_iter()
        .enumerate()
        {
            if !(power.is_finite() && power > 0.0) {
                return Err(Error::InvalidPower { name, value: power });
            }
            targets[slot + 1] = (12.0 * power).sqrt();
        }
        let mut steps = [0.0; 5];
        steps[anchor] = targets[anchor];
        for i in anchor + 1..=4 {
            steps[i] = steps[i - 1] / (steps[i - 1] / targets[i]).round().max(1.0);
        }
        for i in (1..anchor).rev() {
            steps[i] = steps[i + 1] * (targets[i] / steps[i + 1]).round().max(1.0);
        }
        let mut ratios = [0u32; 8];
        ratios[0] = common_ratio;
        for i in 1..4 {
            ratios[i] = (steps[i] / steps[i + 1]).round() as u32;
        }
        ratios[4..].copy_from_slice(&fine_ratios);
        let coarsest = steps[1] * common_ratio as f64;
        let chain = Self::scheme(coarsest, ratios)?;
        // keep the anchor bit-exact rather than accumulated through products
        let mut lattices = chain.lattices;
        lattices[anchor] = ScalarLattice::new(targets[anchor])?;
        Self::new(lattices)
    }

    pub fn len(&self) -> usize {
        self.lattices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattices.is_empty()
    }

    pub fn lattices(&self) -> &[ScalarLattice] {
        &self.lattices
    }

    pub fn lattice(&self, level: ChainLevel) -> &ScalarLattice {
        &self.lattices[level as usize]
    }

    pub fn finest(&self) -> &ScalarLattice {
        self.lattices.last().expect("chain is nonempty")
    }

    pub fn coarsest(&self) -> &ScalarLattice {
        &self.lattices[0]
    }

    /// Adjacent step ratios, coarsest first.
    pub fn ratios(&self) -> Vec<u64> {
        self.lattices
            .windows(2)
            .map(|w| integer_ratio(w[0].step, w[1].step).expect("validated on construction"))
            .collect()
    }

    /// Codebook pair between two levels (`coarse` above `fine`).
    pub fn pair(&self, coarse: ChainLevel, fine: ChainLevel) -> Result<NestedPair> {
        NestedPair::new(*self.lattice(coarse), *self.lattice(fine))
    }

    pub fn is_scheme(&self) -> bool {
        self.lattices.len() == SCHEME_LEVELS
    }

    /// Second moments of the four coarse lattices as a split.
    pub fn achieved_split(&self) -> PowerSplit {
        let m = |l: ChainLevel| self.lattice(l).second_moment();
        PowerSplit::new(
            m(ChainLevel::T1),
            m(ChainLevel::U1),
            m(ChainLevel::T2),
            m(ChainLevel::U2),
        )
    }
}
