//! Synthetic chains, calibrated noise, and the statistics behind the
//! noisy-circle benchmark.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{Error, Result};
use crate::filters::{ma_filter, sp_filter};
use crate::geometry::{Degree, Point};
use crate::monotonicity::{signal_degree, Chain};

/// Default sweep parameters: noise grid from 0 to 0.05 in 11 steps, 10
/// trials per level, seed 42.
pub const DEFAULT_TRIALS: usize = 10;
pub const DEFAULT_SEED: u64 = 42;

pub fn default_noise_grid() -> Vec<f64> {
    (0..=10).map(|k| (5 * k) as f64 / 1000.0).collect()
}

/// One row of a noise sweep: the requested and measured noise level and the
/// per-method degrees of monotonicity, each averaged over the trials.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRecord {
    pub target_mse: f64,
    pub measured_mse: f64,
    pub degree_raw: Degree,
    pub degree_ma3: Degree,
    pub degree_ma5: Degree,
    pub degree_sp: Degree,
}

/// Regular samples of a circle of the given radius in the plane, walked
/// `loops` times: point `k` sits at angle `2*pi*k / samples_per_loop`.
///
/// # Panics
///
/// Panics when `samples_per_loop < 3`, `loops == 0`, or the radius is not a
/// positive finite number.
pub fn gen_circle_chain(samples_per_loop: usize, loops: usize, radius: f64) -> Chain {
    assert!(samples_per_loop >= 3, "need at least 3 samples per loop");
    assert!(loops >= 1, "need at least one loop");
    assert!(radius.is_finite() && radius > 0.0, "radius must be positive");
    let step = std::f64::consts::TAU / samples_per_loop as f64;
    let points = (0..samples_per_loop * loops)
        .map(|k| {
            let theta = step * k as f64;
            Point::from_coords_unchecked(vec![radius * theta.cos(), radius * theta.sin()])
        })
        .collect();
    Chain::from_points_unchecked(points)
}

/// Adds independent zero-mean Gaussian noise to every coordinate, calibrated
/// so the expected squared displacement per point equals `target_mse`
/// (per-coordinate variance `target_mse / dimension`). Deterministic for a
/// fixed seed.
///
/// # Panics
///
/// Panics when `target_mse` is negative or not finite.
pub fn add_noise(chain: &Chain, target_mse: f64, seed: u64) -> Chain {
    assert!(target_mse.is_finite() && target_mse >= 0.0, "target MSE must be nonnegative");
    let Some(dim) = chain.dim() else {
        return chain.clone();
    };
    if target_mse == 0.0 {
        return chain.clone();
    }
    let sigma = (target_mse / dim as f64).sqrt();
    let normal = Normal::new(0.0, sigma).expect("sigma is finite and positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points = chain
        .points()
        .iter()
        .map(|p| {
            Point::from_coords_unchecked(
                p.coords().iter().map(|&c| c + normal.sample(&mut rng)).collect(),
            )
        })
        .collect();
    Chain::from_points_unchecked(points)
}

/// Mean squared Euclidean distance between corresponding points.
pub fn mse(a: &Chain, b: &Chain) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
    }
    if a.is_empty() {
        return Err(Error::InsufficientData { required: 1, actual: 0 });
    }
    let (da, db) = (a.dim().unwrap(), b.dim().unwrap());
    if da != db {
        return Err(Error::DimensionMismatch { expected: da, found: db });
    }
    let total: f64 = a
        .points()
        .iter()
        .zip(b.points())
        .map(|(p, q)| {
            p.coords()
                .iter()
                .zip(q.coords())
                .map(|(x, y)| (x - y) * (x - y))
                .sum::<f64>()
        })
        .sum();
    Ok(total / a.len() as f64)
}

/// Sample Pearson correlation coefficient of two equally long sequences.
pub fn pearson(xs: &[f64], ys: &[f64]) -> Result<f64> {
    if xs.len() != ys.len() {
        return Err(Error::LengthMismatch { left: xs.len(), right: ys.len() });
    }
    if xs.len() < 2 {
        return Err(Error::InsufficientData { required: 2, actual: xs.len() });
    }
    let n = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / n;
    let mean_y = ys.iter().sum::<f64>() / n;
    let mut cov = 0.0;
    let mut var_x = 0.0;
    let mut var_y = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        let (dx, dy) = (x - mean_x, y - mean_y);
        cov += dx * dy;
        var_x += dx * dx;
        var_y += dy * dy;
    }
    if var_x == 0.0 || var_y == 0.0 {
        return Err(Error::ZeroVariance);
    }
    Ok((cov / (var_x * var_y).sqrt()).clamp(-1.0, 1.0))
}

/// Runs the noisy-circle benchmark: for every noise level, perturbs the
/// 30-sample unit-circle chain, filters it with the width-3 and width-5
/// moving averages and the sphere-preserving filter, and averages the
/// degrees of monotonicity over the trials. Trial `t` draws its noise from
/// `seed + t`, so the sweep is reproducible and trials are independent of
/// evaluation order.
///
/// # Panics
///
/// Panics when `trials == 0`.
pub fn run_sweep(noise_grid: &[f64], trials: usize, seed: u64) -> Vec<SweepRecord> {
    assert!(trials >= 1, "need at least one trial");
    let base = gen_circle_chain(10, 3, 1.0);
    let mut records = Vec::with_capacity(noise_grid.len());
    for &target_mse in noise_grid {
        let mut sum_mse = 0.0;
        let mut sums = [0.0f64; 4];
        for t in 0..trials {
            let noisy = add_noise(&base, target_mse, seed.wrapping_add(t as u64));
            sum_mse += mse(&base, &noisy).expect("noisy chain matches the base chain");
            let ma3 = ma_filter(&noisy, 3).expect("window 3 is odd");
            let ma5 = ma_filter(&noisy, 5).expect("window 5 is odd");
            let sp = sp_filter(&noisy);
            sums[0] += signal_degree(&noisy).signal_degree.value();
            sums[1] += signal_degree(&ma3).signal_degree.value();
            sums[2] += signal_degree(&ma5).signal_degree.value();
            sums[3] += signal_degree(&sp).signal_degree.value();
        }
        let n = trials as f64;
        let avg = |s: f64| Degree::new(s / n).expect("averaged degrees stay nonnegative");
        records.push(SweepRecord {
            target_mse,
            measured_mse: sum_mse / n,
            degree_raw: avg(sums[0]),
            degree_ma3: avg(sums[1]),
            degree_ma5: avg(sums[2]),
            degree_sp: avg(sums[3]),
        });
    }
    records
}
