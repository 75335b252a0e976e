//! Acceptance checks. One PASS/FAIL line per criterion; exits nonzero if
//! any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use latsec_core::channel::{ChannelGains, InterferenceRegime, PowerSplit};
use latsec_core::cnf::{
    combination_rates, effective_mac, enumeration_radius, minimize_sigma, minimize_sigma_in_box,
    optimal_beta, sigma_eff_sq, EffectiveMac, IntegerCoefficients, Receiver,
};
use latsec_core::estimate::ks_critical_1pct;
use latsec_core::lattice::{mod_lattice, quantize, LatticeChain, NestedPair, ScalarLattice};
use latsec_core::region::{scaling_slope, sdof_sweep, SplitRule, SweepTemplate};
use latsec_core::sim::{
    crypto_test, crypto_test_with, decode_config, decode_error_rate, leakage_entropy,
    masking_config, Masking,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SWEEP: [f64; 4] = [1e4, 1e6, 1e8, 1e10];
const SAMPLES: usize = 100_000;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn criterion(
    id: u32,
    name: &str,
    budget: Option<Duration>,
    check: impl FnOnce() -> Outcome,
) -> bool {
    let start = Instant::now();
    let mut out = check();
    let elapsed = start.elapsed();
    if let Some(limit) = budget {
        if elapsed > limit {
            out.pass = false;
            out.detail = format!("{}; over budget {limit:?}", out.detail);
        }
    }
    println!(
        "{} [{id}] {name}: {} ({:.3}s)",
        if out.pass { "PASS" } else { "FAIL" },
        out.detail,
        elapsed.as_secs_f64()
    );
    out.pass
}

fn sweep_points() -> Vec<latsec_core::SdofPoint> {
    sdof_sweep(
        &SweepTemplate::symmetric(1.0, 0.75),
        &SWEEP,
        &SplitRule::default(),
    )
    .expect("valid sweep")
}

fn sdof_limit() -> Outcome {
    let pts = sweep_points();
    let ratios: Vec<f64> = pts.iter().map(|pt| pt.ratio).collect();
    let nondecreasing = ratios[1..].windows(2).all(|w| w[1] >= w[0]);
    let last = ratios[3];
    let (lo, hi) = (2.0 / 3.0 - 0.08, 2.0 / 3.0 + 0.01);
    outcome(
        nondecreasing && (lo..=hi).contains(&last),
        format!("ratios {ratios:?}; nondecreasing={nondecreasing}; at P=1e10 {last} vs [{lo:.4}, {hi:.4}]"),
    )
}

fn linear_scaling() -> Outcome {
    let slope = scaling_slope(&sweep_points()).expect("four points over six decades");
    outcome(
        (0.55..=0.75).contains(&slope),
        format!("slope {slope} vs [0.55, 0.75]"),
    )
}

fn random_mac(rng: &mut ChaCha8Rng) -> EffectiveMac {
    let h = [rng.random_range(0.1..2.0), rng.random_range(0.1..2.0)];
    let b = [rng.random_range(0.05..1.2), rng.random_range(0.05..1.2)];
    let p = 10f64.powf(rng.random_range(0.0..6.0));
    EffectiveMac::new(h, b, p).expect("positive parameters")
}

fn random_coefficients(rng: &mut ChaCha8Rng) -> IntegerCoefficients {
    loop {
        if let Ok(a) = IntegerCoefficients::new(rng.random_range(-4..=4), rng.random_range(-4..=4))
        {
            return a;
        }
    }
}

fn beta_minimizer() -> Outcome {
    const GRID: usize = 100_000;
    const STEP: f64 = 1e-4;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut worst_gap = 0.0f64;
    let mut worst_excess = f64::NEG_INFINITY;
    for _ in 0..1000 {
        let mac = random_mac(&mut rng);
        let a = random_coefficients(&mut rng);
        let beta = optimal_beta(&mac, &a);
        let at_beta = sigma_eff_sq(&mac, beta, &a);
        let start = beta.floor() - 5.0;
        let (arg, grid_min) = (0..GRID)
            .map(|k| start + k as f64 * STEP)
            .map(|b| (b, sigma_eff_sq(&mac, b, &a)))
            .fold((0.0, f64::INFINITY), |best, cur| {
                if cur.1 < best.1 {
                    cur
                } else {
                    best
                }
            });
        worst_gap = worst_gap.max((arg - beta).abs());
        worst_excess = worst_excess.max((at_beta - grid_min) / grid_min);
    }
    outcome(
        worst_gap <= STEP && worst_excess <= 1e-12,
        format!("max |beta* - grid argmin| {worst_gap:.3e}, max relative excess over grid {worst_excess:.3e}"),
    )
}

fn random_valid(rng: &mut ChaCha8Rng) -> (ChannelGains, PowerSplit) {
    let p = 10f64.powf(rng.random_range(2.0..8.0));
    let (h11, h22) = (rng.random_range(0.5..2.0), rng.random_range(0.5..2.0));
    let cross = |direct: f64, r: f64| ((direct * direct * p).powf(r) / p).sqrt();
    let gains = ChannelGains::new(
        h11,
        h22,
        cross(h22, rng.random_range(0.5..1.0)),
        cross(h11, rng.random_range(0.5..1.0)),
        p,
    )
    .expect("direct links above noise");
    let (f1, f2) = (rng.random_range(0.05..0.95), rng.random_range(0.05..0.95));
    let split = PowerSplit::new(
        f1 * p,
        (1.0 - f1) * p * (gains.h11 / gains.h21).powi(2),
        f2 * p,
        (1.0 - f2) * p * (gains.h22 / gains.h12).powi(2),
    );
    (gains, split)
}

fn enumeration_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst = 0.0f64;
    let mut mismatches = 0;
    for _ in 0..100 {
        let (gains, split) = random_valid(&mut rng);
        for receiver in [Receiver::One, Receiver::Two] {
            let mac = effective_mac(&gains, &split, receiver);
            let base = minimize_sigma(&mac);
            let wide = minimize_sigma_in_box(&mac, 2 * enumeration_radius(&mac));
            worst =
                worst.max(((wide.sigma_star_sq - base.sigma_star_sq) / base.sigma_star_sq).abs());
            let abs = |a: IntegerCoefficients| a.get().map(i64::abs);
            if abs(wide.best_a) != abs(base.best_a) {
                mismatches += 1;
            }
        }
    }
    outcome(
        worst <= 1e-12 && mismatches == 0,
        format!("max relative sigma*^2 change {worst:.3e}, |a| mismatches {mismatches}"),
    )
}

fn algebraic_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let worst = (0..1000)
        .map(|_| {
            combination_rates(&random_mac(&mut rng))
                .expect("nonzero scalings")
                .cross_check_gap
        })
        .fold(0.0, f64::max);
    outcome(
        worst <= 1e-9,
        format!("max |subtraction - direct| {worst:.3e}"),
    )
}

fn crypto_lemma() -> Outcome {
    let critical = ks_critical_1pct(SAMPLES);
    let mut lines = Vec::new();
    let mut pass = true;
    for (seed, k, fine, bins) in [
        (11, 2, [2, 2, 2, 2], 4),
        (12, 3, [1, 2, 3, 2], 6),
        (13, 1, [2, 2, 2, 4], 1),
    ] {
        let config =
            masking_config(1e4, k, fine, bins, SAMPLES, seed).expect("valid masking config");
        let jammed = crypto_test(&config).expect("enough samples");
        let broken = crypto_test_with(&config, Masking::Unmasked).expect("enough samples");
        let ok = jammed.ks < critical && jammed.mi_bits < 0.01 && broken.mi_bits >= 0.01;
        pass &= ok;
        lines.push(format!(
            "seed {seed}: ks {:.4} mi {:.5} control mi {:.3}",
            jammed.ks, jammed.mi_bits, broken.mi_bits
        ));
    }
    outcome(
        pass,
        format!("ks critical {critical:.4}; {}", lines.join("; ")),
    )
}

fn leakage_bound() -> Outcome {
    let base = masking_config(1e4, 2, [2, 2, 2, 2], 4, SAMPLES, 21).expect("valid masking config");
    let mut pass = true;
    let mut lines = Vec::new();
    for ratio in [0.25, 0.5, 1.0, 2.0, 4.0] {
        let mut config = base.clone();
        config.split.p_t1 = ratio * config.split.p_u2;
        let l = leakage_entropy(&config).expect("enough samples");
        pass &= l.entropy_bits <= l.bound_bits + 0.1;
        lines.push(format!(
            "{ratio}: H {:.4} vs bound+0.1 {:.4}",
            l.entropy_bits,
            l.bound_bits + 0.1
        ));
    }
    outcome(pass, lines.join("; "))
}

fn exact_suite() -> Outcome {
    let mut failures = Vec::new();
    let mut check = |ok: bool, what: &str| {
        if !ok {
            failures.push(what.to_string());
        }
    };
    for step in [1.0, 0.5, 2.0, 0.25, 4.0] {
        let lat = ScalarLattice::new(step).expect("positive");
        for k in -64..=64 {
            // dyadic values keep every operation exact
            let x = k as f64 * 0.125;
            let (q, r) = (quantize(x, &lat), mod_lattice(x, &lat));
            check(q + r == x, "quantize + mod = identity");
            check(lat.contains_in_cell(r), "mod lands in the cell");
            check(mod_lattice(x + 3.0 * step, &lat) == r, "periodicity");
            check(mod_lattice(r, &lat) == r, "idempotence");
        }
        check(quantize(0.5 * step, &lat) == step, "tie at +step/2 goes up");
        check(quantize(-0.5 * step, &lat) == 0.0, "tie at -step/2 goes up");
        check(
            mod_lattice(0.5 * step, &lat) == -0.5 * step,
            "half step wraps to -step/2",
        );
    }
    let pair = |coarse: f64, fine: f64| {
        NestedPair::new(
            ScalarLattice::new(coarse).unwrap(),
            ScalarLattice::new(fine).unwrap(),
        )
        .unwrap()
    };
    for (coarse, fine, size) in [
        (8.0, 1.0, 8),
        (6.0, 2.0, 3),
        (5.0, 5.0, 1),
        (16.0, 0.25, 64),
    ] {
        let p = pair(coarse, fine);
        let words = p.codewords();
        check(
            p.size() == size && words.len() == size as usize,
            "codebook size",
        );
        check(
            words
                .iter()
                .all(|w| ScalarLattice::new(coarse).unwrap().contains_in_cell(*w)),
            "codebook in cell",
        );
    }
    check(
        NestedPair::new(
            ScalarLattice::new(3.0).unwrap(),
            ScalarLattice::new(2.0).unwrap(),
        )
        .is_err(),
        "non-integer nesting",
    );
    let chain = LatticeChain::scheme(64.0, [1, 2, 2, 1, 2, 1, 2, 2]).expect("integer ratios");
    check(chain.len() == 9, "nine-level chain");
    let third = 2.0 / 3.0;
    check(
        InterferenceRegime::from_ratios(0.5, 0.5) == InterferenceRegime::Weak,
        "1/2 is weak",
    );
    check(
        InterferenceRegime::from_ratios(third, third) == InterferenceRegime::ModeratelyWeak,
        "2/3 is moderately weak",
    );
    check(
        !InterferenceRegime::from_ratios(1.0, 1.0).is_in_scope(),
        "1 is out of scope",
    );
    check(
        !InterferenceRegime::from_ratios(0.5, third).is_in_scope(),
        "mixed pair is out of scope",
    );
    // dyadic gains: INR 4 vs SNR 16, INR 16 vs SNR 64, INR = SNR
    let from_gains = |cross: f64, p: f64| {
        let g = ChannelGains::new(1.0, 1.0, cross, cross, p).expect("valid gains");
        (
            g.regime_ratios(),
            latsec_core::classify_regime(&g).expect("valid gains"),
        )
    };
    check(
        from_gains(0.5, 16.0) == ((0.5, 0.5), InterferenceRegime::Weak),
        "gains at ratio 1/2",
    );
    check(
        from_gains(0.5, 64.0) == ((third, third), InterferenceRegime::ModeratelyWeak),
        "gains at ratio 2/3",
    );
    check(
        from_gains(1.0, 64.0) == ((1.0, 1.0), InterferenceRegime::OutOfScope(1.0, 1.0)),
        "gains at ratio 1",
    );
    outcome(
        failures.is_empty(),
        if failures.is_empty() {
            "all exact".into()
        } else {
            failures.join(", ")
        },
    )
}

fn decode_monotonicity() -> Outcome {
    let mut pass = true;
    let mut lines = Vec::new();
    for seed in [1, 2, 3] {
        let rates: Vec<f64> = [1e3, 1e4, 1e5]
            .iter()
            .map(|&p| {
                decode_error_rate(&decode_config(p, SAMPLES, seed).expect("valid decode config"))
                    .expect("runs")
            })
            .collect();
        pass &= rates.windows(2).all(|w| w[1] <= w[0]);
        lines.push(format!("seed {seed}: {rates:?}"));
    }
    outcome(pass, lines.join("; "))
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let results = [
        criterion(1, "secure dof limit", Some(secs(1)), sdof_limit),
        criterion(2, "linear scaling slope", Some(secs(1)), linear_scaling),
        criterion(3, "beta minimizer", Some(secs(10)), beta_minimizer),
        criterion(
            4,
            "enumeration soundness",
            Some(secs(30)),
            enumeration_soundness,
        ),
        criterion(
            5,
            "subtraction vs direct expansion",
            None,
            algebraic_identity,
        ),
        criterion(6, "crypto lemma masking", Some(secs(10)), crypto_lemma),
        criterion(7, "leakage entropy bound", Some(secs(30)), leakage_bound),
        criterion(8, "exact arithmetic suite", None, exact_suite),
        criterion(9, "decode error monotonicity", None, decode_monotonicity),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    println!(
        "{} of {} criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
