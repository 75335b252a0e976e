//! Seeded scalar Monte Carlo of the encoder, channel, combination decoder,
//! the Crypto-Lemma mask and the quantized leakage entropy.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::channel::{validate_split, ChannelGains, PowerSplit};
use crate::cnf::{effective_mac, minimize_sigma, IntegerCoefficients, Receiver};
use crate::csv;
use crate::error::{Error, Result};
use crate::estimate::{bin_index, ks_uniform, plugin_entropy, JointHistogram};
use crate::lattice::{
    dither_sample, scale_to_power, ChainLevel, LatticeChain, NestedPair, ScalarLattice,
};

/// Minimum sample count for the statistical checks.
pub const MIN_STAT_SAMPLES: usize = 10_000;

/// Histogram resolution of the mutual-information estimate.
pub const MI_BINS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum User {
    One,
    Two,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimConfig {
    pub gains: ChannelGains,
    pub split: PowerSplit,
    pub chain: LatticeChain,
    /// Number of message bins for user 1.
    pub bins: u32,
    pub samples: usize,
    pub seed: u64,
    pub noise_on: bool,
}

impl SimConfig {
    pub fn new(
        gains: ChannelGains,
        split: PowerSplit,
        chain: LatticeChain,
        bins: u32,
        samples: usize,
        seed: u64,
    ) -> Result<Self> {
        let config = Self {
            gains,
            split,
            chain,
            bins,
            samples,
            seed,
            noise_on: true,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn with_noise(mut self, noise_on: bool) -> Self {
        self.noise_on = noise_on;
        self
    }

    pub fn validate(&self) -> Result<()> {
        validate_split(&self.gains, self.split)?;
        if !self.chain.is_scheme() {
            return Err(Error::InvalidConfig(format!(
                "lattice chain has {} levels, the scheme needs 9",
                self.chain.len()
            )));
        }
        let codebook = self.chain.pair(ChainLevel::T1, ChainLevel::Tf1)?.size();
        if self.bins == 0 || u64::from(self.bins) > codebook {
            return Err(Error::InvalidConfig(format!(
                "bins must be in 1..={codebook} (user 1 codebook size), got {}",
                self.bins
            )));
        }
        if self.samples == 0 {
            return Err(Error::InvalidConfig("samples must be positive".into()));
        }
        Ok(())
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }

    fn require_stat_samples(&self) -> Result<()> {
        if self.samples < MIN_STAT_SAMPLES {
            return Err(Error::InvalidConfig(format!(
                "statistical checks need at least {MIN_STAT_SAMPLES} samples, got {}",
                self.samples
            )));
        }
        Ok(())
    }
}

/// Dither draws, one per coarse lattice.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Dithers {
    pub t1: f64,
    pub u1: f64,
    pub t2: f64,
    pub u2: f64,
}

impl Dithers {
    pub fn draw<R: Rng + ?Sized>(chain: &LatticeChain, rng: &mut R) -> Self {
        Self {
            t1: dither_sample(chain.lattice(ChainLevel::T1), rng),
            u1: dither_sample(chain.lattice(ChainLevel::U1), rng),
            t2: dither_sample(chain.lattice(ChainLevel::T2), rng),
            u2: dither_sample(chain.lattice(ChainLevel::U2), rng),
        }
    }
}

/// The two dithered components of a transmitted symbol.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Superposition {
    pub message: f64,
    pub jam: f64,
    /// `h21/h11` for user 1, `h12/h22` for user 2.
    pub jam_scale: f64,
}

impl Superposition {
    pub fn value(&self) -> f64 {
        self.message + self.jam_scale * self.jam
    }
}

pub fn encode_parts(
    user: User,
    message_point: f64,
    jam_point: f64,
    dithers: &Dithers,
    gains: &ChannelGains,
    chain: &LatticeChain,
) -> Superposition {
    let (t_level, u_level, d_t, d_u, jam_scale) = match user {
        User::One => (
            ChainLevel::T1,
            ChainLevel::U1,
            dithers.t1,
            dithers.u1,
            gains.h21 / gains.h11,
        ),
        User::Two => (
            ChainLevel::T2,
            ChainLevel::U2,
            dithers.t2,
            dithers.u2,
            gains.h12 / gains.h22,
        ),
    };
    Superposition {
        message: chain.lattice(t_level).reduce(message_point + d_t),
        jam: chain.lattice(u_level).reduce(jam_point + d_u),
        jam_scale,
    }
}

pub fn encode(
    user: User,
    message_point: f64,
    jam_point: f64,
    dithers: &Dithers,
    gains: &ChannelGains,
    chain: &LatticeChain,
) -> f64 {
    encode_parts(user, message_point, jam_point, dithers, gains, chain).value()
}

pub fn channel(x1: f64, x2: f64, gains: &ChannelGains, noise: (f64, f64)) -> (f64, f64) {
    (
        gains.h11 * x1 + gains.h21 * x2 + noise.0,
        gains.h22 * x2 + gains.h12 * x1 + noise.1,
    )
}

/// Receiver-1 estimate of `[a(1) t1 + a(2) (t2 + u1)] mod` the common lattice,
/// from the output scaled by `1/sqrt(1 + alpha1^2 p_u2)`.
pub fn combination_decode(
    y_scaled: f64,
    dithers: &Dithers,
    a: &IntegerCoefficients,
    beta: f64,
    chain: &LatticeChain,
) -> f64 {
    let [a1, a2] = a.get();
    let common = chain.coarsest();
    let s = common
        .reduce(beta * y_scaled - a1 as f64 * dithers.t1 - a2 as f64 * (dithers.t2 + dithers.u1));
    common.reduce(chain.finest().quantize(s))
}

/// The combination [`combination_decode`] aims at, from the encoder side.
pub fn true_combination(
    x1: &Superposition,
    x2: &Superposition,
    dithers: &Dithers,
    a: &IntegerCoefficients,
    chain: &LatticeChain,
) -> f64 {
    let [a1, a2] = a.get();
    let own = x1.message - dithers.t1;
    let aligned = x2.message + x1.jam - dithers.t2 - dithers.u1;
    chain
        .coarsest()
        .reduce(a1 as f64 * own + a2 as f64 * aligned)
}

/// User-1 codebook split into bins by a seeded shuffle. Bin sizes differ by
/// at most one.
#[derive(Debug, Clone, PartialEq)]
pub struct Binning {
    pair: NestedPair,
    bins: Vec<Vec<u64>>,
}

impl Binning {
    pub fn random<R: Rng + ?Sized>(pair: NestedPair, bins: u32, rng: &mut R) -> Result<Self> {
        if bins == 0 || u64::from(bins) > pair.size() {
            return Err(Error::InvalidConfig(format!(
                "cannot split {} codewords into {bins} bins",
                pair.size()
            )));
        }
        let mut positions: Vec<u64> = (0..pair.size()).collect();
        positions.shuffle(rng);
        let mut out = vec![Vec::new(); bins as usize];
        for (i, k) in positions.into_iter().enumerate() {
            out[i % bins as usize].push(k);
        }
        Ok(Self { pair, bins: out })
    }

    pub fn len(&self) -> usize {
        self.bins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bins.is_empty()
    }

    pub fn bin(&self, w: usize) -> &[u64] {
        &self.bins[w]
    }

    /// Random codeword from bin `w`.
    pub fn pick<R: Rng + ?Sized>(&self, w: usize, rng: &mut R) -> f64 {
        let bin = &self.bins[w];
        self.pair.codeword(bin[rng.random_range(0..bin.len())])
    }
}

/// Fresh codewords, dithers and noise for one channel use. Every sample
/// consumes the same number of draws, so changing `p` alone keeps the
/// random streams aligned.
struct Sampler {
    binning: Binning,
    t2: NestedPair,
    u1: NestedPair,
    u2: NestedPair,
}

struct Draw {
    t1: f64,
    t2: f64,
    u1: f64,
    u2: f64,
    dithers: Dithers,
    noise: (f64, f64),
}

impl Sampler {
    fn new(config: &SimConfig) -> Result<Self> {
        let chain = &config.chain;
        let binning = Binning::random(
            chain.pair(ChainLevel::T1, ChainLevel::Tf1)?,
            config.bins,
            &mut config.rng(3),
        )?;
        Ok(Self {
            binning,
            t2: chain.pair(ChainLevel::T2, ChainLevel::Tf2)?,
            u1: chain.pair(ChainLevel::U1, ChainLevel::Uf1)?,
            u2: chain.pair(ChainLevel::U2, ChainLevel::Uf2)?,
        })
    }

    fn draw<R: Rng + ?Sized>(&self, chain: &LatticeChain, rng: &mut R) -> Draw {
        let w = rng.random_range(0..self.binning.len());
        let t1 = self.binning.pick(w, rng);
        let uniform =
            |pair: &NestedPair, rng: &mut R| pair.codeword(rng.random_range(0..pair.size()));
        let t2 = uniform(&self.t2, rng);
        let u1 = uniform(&self.u1, rng);
        let u2 = uniform(&self.u2, rng);
        let dithers = Dithers::draw(chain, rng);
        let noise = (rng.sample(StandardNormal), rng.sample(StandardNormal));
        Draw {
            t1,
            t2,
            u1,
            u2,
            dithers,
            noise,
        }
    }
}

/// Fraction of channel uses where receiver 1 decodes the wrong combination.
/// `a` and `beta` come from [`minimize_sigma`] on the chain's actual
/// second moments.
pub fn decode_error_rate(config: &SimConfig) -> Result<f64> {
    config.validate()?;
    let chain = &config.chain;
    let gains = &config.gains;
    let achieved = chain.achieved_split();
    let min = minimize_sigma(&effective_mac(gains, &achieved, Receiver::One));
    let (alpha1, _) = gains.alphas();
    let scale = (1.0 + alpha1 * alpha1 * achieved.p_u2).sqrt();
    let sampler = Sampler::new(config)?;
    let tolerance = 0.25 * chain.finest().step();
    let mut rng = config.rng(0);
    let mut errors = 0usize;
    for _ in 0..config.samples {
        let d = sampler.draw(chain, &mut rng);
        let x1 = encode_parts(User::One, d.t1, d.u1, &d.dithers, gains, chain);
        let x2 = encode_parts(User::Two, d.t2, d.u2, &d.dithers, gains, chain);
        let noise = if config.noise_on { d.noise } else { (0.0, 0.0) };
        let (y1, _) = channel(x1.value(), x2.value(), gains, noise);
        let estimate =
            combination_decode(y1 / scale, &d.dithers, &min.best_a, min.best_beta, chain);
        let truth = true_combination(&x1, &x2, &d.dithers, &min.best_a, chain);
        if chain.coarsest().reduce(estimate - truth).abs() > tolerance {
            errors += 1;
        }
    }
    Ok(errors as f64 / config.samples as f64)
}

/// Whether the jamming codeword actually masks the message.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Masking {
    Jammed,
    /// Jamming point and dither forced to zero.
    Unmasked,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CryptoStats {
    /// KS distance of `[t1_d + u2_d] mod U2` from uniform on the cell.
    pub ks: f64,
    /// Plug-in MI (16 x 16 bins) between the message codeword and the
    /// wrap with the public dithers removed.
    pub mi_bits: f64,
}

pub fn crypto_test(config: &SimConfig) -> Result<CryptoStats> {
    crypto_test_with(config, Masking::Jammed)
}

pub fn crypto_test_with(config: &SimConfig, masking: Masking) -> Result<CryptoStats> {
    crypto_histogram(config, masking).map(|(stats, _)| stats)
}

/// [`crypto_test_with`] plus the joint histogram behind the MI estimate
/// (rows: message bins, columns: unmasked-wrap bins).
pub fn crypto_histogram(
    config: &SimConfig,
    masking: Masking,
) -> Result<(CryptoStats, JointHistogram)> {
    config.validate()?;
    config.require_stat_samples()?;
    let chain = &config.chain;
    let t1_lat = chain.lattice(ChainLevel::T1);
    let u2_lat = chain.lattice(ChainLevel::U2);
    let u2_pair = chain.pair(ChainLevel::U2, ChainLevel::Uf2)?;
    let sampler = Sampler::new(config)?;
    let mut rng = config.rng(1);
    let mut wraps = Vec::with_capacity(config.samples);
    let mut hist = JointHistogram::new(MI_BINS, MI_BINS);
    let cell = |lat: &ScalarLattice, x: f64| bin_index(x, -0.5 * lat.step(), lat.step(), MI_BINS);
    for _ in 0..config.samples {
        let mut d = sampler.draw(chain, &mut rng);
        if masking == Masking::Unmasked {
            d.u2 = 0.0;
            d.dithers.u2 = 0.0;
        }
        let t1_d = t1_lat.reduce(d.t1 + d.dithers.t1);
        let u2_d = u2_lat.reduce(d.u2 + d.dithers.u2);
        let wrap = crate::lattice::crypto_wrap(t1_d, u2_d, u2_lat);
        wraps.push(wrap);
        // removing the dithers leaves [t1 + u2] mod U2, a fine-lattice point
        let seen = u2_pair.codeword(u2_pair.position_of(wrap - d.dithers.t1 - d.dithers.u2));
        hist.add(cell(t1_lat, d.t1), cell(u2_lat, seen));
    }
    let stats = CryptoStats {
        ks: ks_uniform(&mut wraps, -0.5 * u2_lat.step(), u2_lat.step()),
        mi_bits: hist.mutual_information(),
    };
    Ok((stats, hist))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Leakage {
    pub entropy_bits: f64,
    pub bound_bits: f64,
}

/// Plug-in entropy of `Q_U2(t1_d + u2_d)` against
/// `1/2 log2((p_u2 + p_t1) / p_u2)`.
///
/// The two lattices are scaled straight to `p_t1` and `p_u2`, so ratios
/// below one (which no nested chain allows) can be measured too.
pub fn leakage_entropy(config: &SimConfig) -> Result<Leakage> {
    config.validate()?;
    config.require_stat_samples()?;
    let PowerSplit { p_t1, p_u2, .. } = config.split;
    if p_u2 <= 0.0 {
        return Err(Error::ZeroJamming { user: 2 });
    }
    let u2_lat = scale_to_power(p_u2)?;
    let t1_lat = if p_t1 > 0.0 {
        Some(scale_to_power(p_t1)?)
    } else {
        None
    };
    let mut rng = config.rng(2);
    let indices = (0..config.samples).map(|_| {
        // [t1 + d_t1] mod T1 is uniform on the cell for any codeword
        let t1_d = t1_lat.map_or(0.0, |lat| dither_sample(&lat, &mut rng));
        let u2_d = dither_sample(&u2_lat, &mut rng);
        u2_lat.nearest_index(t1_d + u2_d) as i64
    });
    Ok(Leakage {
        entropy_bits: plugin_entropy(indices),
        bound_bits: crate::region::secrecy_penalty(p_t1, p_u2),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimReport {
    pub decode_error_rate: f64,
    pub ks_statistic: f64,
    pub mi_estimate_bits: f64,
    pub leakage_entropy_bits: f64,
    pub leakage_bound_bits: f64,
}

pub const CSV_HEADER: &str = "seed,p,ratio,ks,mi_bits,h_emp_bits,h_bound_bits,err_rate";

impl SimReport {
    /// CSV row matching [`CSV_HEADER`]; `ratio` is `p_t1 / p_u2`.
    pub fn csv_row(&self, config: &SimConfig) -> String {
        csv::row(&[
            config.seed.to_string(),
            csv::number(config.gains.p),
            csv::number(config.split.p_t1 / config.split.p_u2),
            csv::number(self.ks_statistic),
            csv::number(self.mi_estimate_bits),
            csv::number(self.leakage_entropy_bits),
            csv::number(self.leakage_bound_bits),
            csv::number(self.decode_error_rate),
        ])
    }
}

pub fn run(config: &SimConfig) -> Result<SimReport> {
    let crypto = crypto_test(config)?;
    let leakage = leakage_entropy(config)?;
    Ok(SimReport {
        decode_error_rate: decode_error_rate(config)?,
        ks_statistic: crypto.ks,
        mi_estimate_bits: crypto.mi_bits,
        leakage_entropy_bits: leakage.entropy_bits,
        leakage_bound_bits: leakage.bound_bits,
    })
}

/// Rational-gain setup used by the decode checks: unit direct gains, cross
/// gains 1/2 and a fixed `gamma^2 = 1/17`, so message lattices are exactly
/// twice the jamming lattices at every `p`.
pub fn decode_config(p: f64, samples: usize, seed: u64) -> Result<SimConfig> {
    let gains = ChannelGains::symmetric(1.0, 0.5, p)?;
    let split = crate::channel::symmetric_split(&gains, Some(1.0 / 17.0))?;
    let chain = LatticeChain::fit(&split, ChainLevel::U2, 1, [1, 1, 1, 2])?;
    SimConfig::new(gains, split, chain, 1, samples, seed)
}

/// Setup with `p_t1 = k^2 p_u2`, the smallest message lattice the chain can
/// nest above the jamming lattice; `fine` sets the four fine ratios.
pub fn masking_config(
    p: f64,
    k: u32,
    fine: [u32; 4],
    bins: u32,
    samples: usize,
    seed: u64,
) -> Result<SimConfig> {
    let gains = ChannelGains::symmetric(1.0, 0.5, p)?;
    let r = f64::from(k * k);
    // budget p_t + (h21/h11)^2 p_u = p_t + p_u/4 = p with p_t = r p_u
    let p_u = p / (r + 0.25);
    let split = PowerSplit::new(r * p_u, p_u, r * p_u, p_u);
    let chain = LatticeChain::fit(&split, ChainLevel::U2, 1, fine)?;
    SimConfig::new(gains, split, chain, bins, samples, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ScalarLattice;

    #[test]
    fn encode_examples() {
        let g = ChannelGains::symmetric(1.0, 0.5, 100.0).unwrap();
        let chain = LatticeChain::scheme(64.0, [1, 1, 2, 1, 2, 2, 2, 2]).unwrap();
        assert_eq!(
            encode(User::One, 0.0, 0.0, &Dithers::default(), &g, &chain),
            0.0
        );
        let d = Dithers {
            t1: 1.5,
            u1: -2.0,
            t2: 0.25,
            u2: 3.0,
        };
        let unit = ChannelGains::new(1.0, 1.0, 1.0, 1.0, 100.0).unwrap();
        let x = encode_parts(User::One, 4.0, 2.0, &d, &unit, &chain);
        assert_eq!(x.jam_scale, 1.0);
        assert_eq!(x.value(), 5.5 + 0.0);
        let x2 = encode_parts(User::Two, 4.0, 2.0, &d, &g, &chain);
        assert_eq!(x2.value(), 4.25 + 0.5 * 5.0);
    }

    #[test]
    fn channel_examples() {
        let unit = ChannelGains::new(1.0, 1.0, 1.0, 1.0, 10.0).unwrap();
        assert_eq!(channel(2.0, 3.0, &unit, (0.0, 0.0)), (5.0, 5.0));
        let g = ChannelGains::new(2.0, 1.5, 0.5, 0.25, 10.0).unwrap();
        assert_eq!(channel(3.0, 0.0, &g, (0.125, 0.0)).0, 6.125);
    }

    #[test]
    fn noiseless_integer_channel_decodes_exactly() {
        // effective gains (2, 1) with beta = 1 leave no residual
        let chain = LatticeChain::scheme(48.0, [1, 1, 2, 1, 2, 2, 1, 3]).unwrap();
        let g = ChannelGains::new(2.0, 1.0, 0.5, 1.0, 200.0).unwrap();
        let a = IntegerCoefficients::new(2, 1).unwrap();
        let fine = *chain.finest();
        for (t1, t2, u1) in [(0.0, 0.0, 0.0), (4.0, -2.0, 1.0), (-8.0, 6.0, -5.0)] {
            let d = Dithers {
                t1: 3.3,
                u1: -1.1,
                t2: 0.7,
                u2: 0.0,
            };
            let x1 = encode_parts(
                User::One,
                t1 * fine.step(),
                u1 * fine.step(),
                &d,
                &g,
                &chain,
            );
            let x2 = encode_parts(User::Two, t2 * fine.step(), 0.0, &d, &g, &chain);
            // drop the u2 leak so the receiver sees 2 x1 + x2 with x1 = t + u
            let y = g.h11 * x1.message + g.h21 * (x2.message + x1.jam);
            let v = combination_decode(y, &d, &a, 1.0, &chain);
            let truth = true_combination(&x1, &x2, &d, &a, &chain);
            assert!((v - truth).abs() < 1e-9, "{v} vs {truth}");
        }
    }

    #[test]
    fn single_user_combination() {
        let chain = LatticeChain::scheme(16.0, [1, 1, 1, 1, 2, 2, 2, 2]).unwrap();
        let a = IntegerCoefficients::new(0, 1).unwrap();
        let d = Dithers {
            t1: 0.0,
            u1: 0.4,
            t2: -0.9,
            u2: 0.0,
        };
        let aligned = chain.lattice(ChainLevel::T2).reduce(3.0 - 0.9)
            + chain.lattice(ChainLevel::U1).reduce(-1.0 + 0.4);
        let v = combination_decode(aligned, &d, &a, 1.0, &chain);
        assert_eq!(v, chain.coarsest().reduce(3.0 - 1.0));
    }

    #[test]
    fn alignment_identity_per_sample() {
        let config = decode_config(1e4, 2000, 11).unwrap();
        let g = config.gains;
        let sampler = Sampler::new(&config).unwrap();
        let mut rng = config.rng(0);
        let alpha1 = g.h21 * g.h12 / g.h22;
        for _ in 0..config.samples {
            let d = sampler.draw(&config.chain, &mut rng);
            let x1 = encode_parts(User::One, d.t1, d.u1, &d.dithers, &g, &config.chain);
            let x2 = encode_parts(User::Two, d.t2, d.u2, &d.dithers, &g, &config.chain);
            let (y1, _) = channel(x1.value(), x2.value(), &g, d.noise);
            let regrouped =
                g.h11 * x1.message + g.h21 * (x2.message + x1.jam) + alpha1 * x2.jam + d.noise.0;
            let terms = [
                g.h11 * x1.message,
                g.h21 * x2.message,
                g.h21 * x1.jam,
                alpha1 * x2.jam,
                d.noise.0,
            ];
            // one ulp per term in each of the two evaluation orders
            let ulps = 2.0 * terms.iter().map(|t| t.abs()).sum::<f64>() * f64::EPSILON;
            assert!((y1 - regrouped).abs() <= ulps, "{y1} vs {regrouped}");
        }
    }

    #[test]
    fn encoded_power_within_budget() {
        let config = decode_config(1e3, 100_000, 3).unwrap();
        let sampler = Sampler::new(&config).unwrap();
        let mut rng = config.rng(0);
        let (mut e1, mut e2) = (0.0, 0.0);
        for _ in 0..config.samples {
            let d = sampler.draw(&config.chain, &mut rng);
            e1 += encode(
                User::One,
                d.t1,
                d.u1,
                &d.dithers,
                &config.gains,
                &config.chain,
            )
            .powi(2);
            e2 += encode(
                User::Two,
                d.t2,
                d.u2,
                &d.dithers,
                &config.gains,
                &config.chain,
            )
            .powi(2);
        }
        let n = config.samples as f64;
        assert!(e1 / n <= 1e3 * 1.02, "{}", e1 / n);
        assert!(e2 / n <= 1e3 * 1.02, "{}", e2 / n);
    }

    #[test]
    fn binning_partitions_codebook() {
        let pair = NestedPair::new(
            ScalarLattice::new(16.0).unwrap(),
            ScalarLattice::new(1.0).unwrap(),
        )
        .unwrap();
        let b = Binning::random(pair, 5, &mut ChaCha8Rng::seed_from_u64(1)).unwrap();
        let mut all: Vec<u64> = (0..5).flat_map(|w| b.bin(w).to_vec()).collect();
        all.sort();
        assert_eq!(all, (0..16).collect::<Vec<_>>());
        assert!((0..5).all(|w| (3..=4).contains(&b.bin(w).len())));
        assert!(Binning::random(pair, 17, &mut ChaCha8Rng::seed_from_u64(1)).is_err());
    }

    #[test]
    fn config_validation() {
        let ok = masking_config(1e4, 2, [2, 2, 2, 2], 4, 10, 0).unwrap();
        let mut bad = ok.clone();
        bad.bins = 0;
        assert!(bad.validate().is_err());
        let mut bad = ok.clone();
        bad.bins = 1000;
        assert!(bad.validate().is_err());
        assert!(crypto_test(&ok).is_err());
        assert!(leakage_entropy(&ok).is_err());
    }

    #[test]
    fn reports_are_reproducible() {
        let config = masking_config(1e4, 2, [2, 2, 2, 2], 4, 10_000, 99).unwrap();
        let a = run(&config).unwrap();
        let b = run(&config).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.csv_row(&config), b.csv_row(&config));
        for v in [
            a.decode_error_rate,
            a.ks_statistic,
            a.mi_estimate_bits,
            a.leakage_entropy_bits,
            a.leakage_bound_bits,
        ] {
            assert!(v.is_finite() && v >= 0.0);
        }
        let other = SimConfig {
            seed: 100,
            ..config
        };
        assert_ne!(run(&other).unwrap(), a);
    }

    #[test]
    fn csv_row_shape() {
        let config = masking_config(1e4, 2, [2, 2, 2, 2], 4, 10_000, 5).unwrap();
        let row = run(&config).unwrap().csv_row(&config);
        assert_eq!(row.split(',').count(), CSV_HEADER.split(',').count());
        assert!(row.starts_with("5,10000,4,"));
    }

    #[test]
    fn leakage_without_message_power() {
        let mut config = masking_config(1e4, 2, [2, 2, 2, 2], 4, 10_000, 5).unwrap();
        config.split.p_t1 = 0.0;
        let l = leakage_entropy(&config).unwrap();
        assert_eq!(l.entropy_bits, 0.0);
        assert_eq!(l.bound_bits, 0.0);
    }

    #[test]
    fn noiseless_decoding_is_error_free() {
        let config = decode_config(1e5, 20_000, 1).unwrap().with_noise(false);
        // the only residual is the scaled self-noise of the jamming leak
        assert!(
            decode_error_rate(&config).unwrap()
                <= decode_error_rate(&config.clone().with_noise(true)).unwrap()
        );
    }
}
