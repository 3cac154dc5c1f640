//! Degree-of-monotonicity analysis and smoothing for sampled curves.
//!
//! A chain is an ordered sequence of points in n-dimensional space sampling
//! a curve. Its degree of monotonicity is the largest radius `R` such that,
//! over every window of three consecutive samples, every closed ball of
//! radius at most `R` picks out a consecutive set of samples. Straight
//! chains with no backtracking have infinite degree; noise creates sharp
//! turns and drives the degree down.
//!
//! The crate computes that degree (locally, and globally over all index
//! triples), smooths chains with a sphere-preserving filter that provably
//! never decreases it, provides moving-average baselines, and generates the
//! synthetic noisy-circle data used to compare the filters.
//!
//! ```
//! use chainmono::{gen_circle_chain, signal_degree, sp_filter, add_noise};
//!
//! let circle = gen_circle_chain(10, 3, 1.0);
//! let noisy = add_noise(&circle, 0.01, 42);
//! let smoothed = sp_filter(&noisy);
//! let before = signal_degree(&noisy).signal_degree;
//! let after = signal_degree(&smoothed).signal_degree;
//! assert!(after >= before);
//! ```

pub mod error;
pub mod filters;
pub mod geometry;
pub mod monotonicity;
pub mod synth;

pub use error::{Error, Result};
pub use filters::{
    five_point_degree, ma_filter, sp_filter, sp_step, FilterConfig, FilterMethod,
};
pub use geometry::{
    circumcircle, distance, heron_circumradius, project_onto_arc, Circle, Degree, Point,
};
pub use monotonicity::{
    global_degree, minimal_ball_oracle, scale, signal_degree, triple_degree, Chain, DegreeReport,
};
pub use synth::{
    add_noise, default_noise_grid, gen_circle_chain, mse, pearson, run_sweep, SweepRecord,
    DEFAULT_SEED, DEFAULT_TRIALS,
};
