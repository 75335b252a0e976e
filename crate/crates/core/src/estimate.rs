//! Plug-in entropy and mutual information, and the one-sample KS distance.

use std::collections::HashMap;
use std::hash::Hash;

/// Plug-in entropy in bits of the empirical distribution of `values`.
pub fn plugin_entropy<T: Eq + Hash>(values: impl IntoIterator<Item = T>) -> f64 {
    let mut counts: HashMap<T, usize> = HashMap::new();
    let mut n = 0usize;
    for v in values {
        *counts.entry(v).or_default() += 1;
        n += 1;
    }
    entropy_of_counts(counts.values().copied(), n)
}

fn entropy_of_counts(counts: impl IntoIterator<Item = usize>, n: usize) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let n = n as f64;
    let h = counts
        .into_iter()
        .filter(|&c| c > 0)
        .map(|c| {
            let q = c as f64 / n;
            -q * q.log2()
        })
        .sum::<f64>();
    h.max(0.0)
}

/// Bin of `x` among `bins` equal cells of `[lo, lo + width)`; out-of-range
/// values are clamped to the edge bins.
pub fn bin_index(x: f64, lo: f64, width: f64, bins: usize) -> usize {
    let k = ((x - lo) / width * bins as f64).floor();
    if k <= 0.0 {
        0
    } else {
        (k as usize).min(bins - 1)
    }
}

/// Joint histogram of paired bin indices.
#[derive(Debug, Clone, PartialEq)]
pub struct JointHistogram {
    rows: usize,
    cols: usize,
    counts: Vec<usize>,
    n: usize,
}

impl JointHistogram {
    pub fn new(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            counts: vec![0; rows * cols],
            n: 0,
        }
    }

    pub fn add(&mut self, i: usize, j: usize) {
        self.counts[i * self.cols + j] += 1;
        self.n += 1;
    }

    /// Row-major counts, `rows x cols`.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn total(&self) -> usize {
        self.n
    }

    /// Plug-in `I(X;Y) = H(X) + H(Y) - H(X,Y)` in bits, floored at 0.
    pub fn mutual_information(&self) -> f64 {
        let row =
            (0..self.rows).map(|i| self.counts[i * self.cols..(i + 1) * self.cols].iter().sum());
        let col =
            (0..self.cols).map(|j| (0..self.rows).map(|i| self.counts[i * self.cols + j]).sum());
        let hx = entropy_of_counts(row, self.n);
        let hy = entropy_of_counts(col, self.n);
        let hxy = entropy_of_counts(self.counts.iter().copied(), self.n);
        (hx + hy - hxy).max(0.0)
    }
}

/// KS distance between the samples and the uniform law on `[lo, lo + width)`.
/// Sorts `samples` in place.
pub fn ks_uniform(samples: &mut [f64], lo: f64, width: f64) -> f64 {
    samples.sort_by(f64::total_cmp);
    let n = samples.len() as f64;
    samples
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = ((x - lo) / width).clamp(0.0, 1.0);
            (f - i as f64 / n).max((i + 1) as f64 / n - f)
        })
        .fold(0.0, f64::max)
}

/// KS critical value at the 1% level for `n` samples.
pub fn ks_critical_1pct(n: usize) -> f64 {
    1.63 / (n as f64).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn entropy_examples() {
        assert_eq!(plugin_entropy([7; 10]), 0.0);
        assert!((plugin_entropy([0, 1, 0, 1]) - 1.0).abs() < 1e-15);
        assert!((plugin_entropy(0..8) - 3.0).abs() < 1e-15);
        assert_eq!(plugin_entropy(Vec::<i64>::new()), 0.0);
    }

    #[test]
    fn bin_index_clamps() {
        assert_eq!(bin_index(-5.0, 0.0, 1.0, 16), 0);
        assert_eq!(bin_index(0.999, 0.0, 1.0, 16), 15);
        assert_eq!(bin_index(1.0, 0.0, 1.0, 16), 15);
        assert_eq!(bin_index(0.5, 0.0, 1.0, 16), 8);
    }

    #[test]
    fn mi_of_identical_and_independent() {
        let mut same = JointHistogram::new(4, 4);
        let mut indep = JointHistogram::new(4, 4);
        for i in 0..4 {
            for j in 0..4 {
                same.add(i, i);
                indep.add(i, j);
            }
        }
        assert!((same.mutual_information() - 2.0).abs() < 1e-12);
        assert!(indep.mutual_information().abs() < 1e-12);
    }

    #[test]
    fn ks_examples() {
        let mut grid: Vec<f64> = (0..100).map(|i| (i as f64 + 0.5) / 100.0).collect();
        assert!((ks_uniform(&mut grid, 0.0, 1.0) - 0.005).abs() < 1e-12);
        let mut lumped = vec![0.0; 50];
        assert!((ks_uniform(&mut lumped, 0.0, 1.0) - 1.0).abs() < 1e-12);

        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut u: Vec<f64> = (0..20_000)
            .map(|_| rng.random::<f64>() * 3.0 - 1.5)
            .collect();
        assert!(ks_uniform(&mut u, -1.5, 3.0) < ks_critical_1pct(20_000));
    }
}
