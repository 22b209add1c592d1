//! Seeded property suites and their certificates.
//!
//! Each suite draws sample `i` from its own ChaCha8 stream (see
//! [`crate::sampling`]), keyed by the user seed XOR the FNV-1a hash of the
//! suite name. A sample either yields a violation (a non-negative number in
//! most suites, `-D` for Levi positivity) or is skipped because its decisive
//! margin lies within `10 * boundary_band` of zero. The worst violation is
//! reduced with `max`, which is order independent, so results are identical
//! for any thread count.

mod registry;
mod suites;

use std::time::{Duration, Instant};

use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::ToleranceConfig;
use crate::error::{Error, Result};
use crate::sampling::{derive_seed, rng_for};

pub use registry::{invariant_registry, Invariant};

/// Largest fraction of skipped samples a passing suite may have.
pub const MAX_SKIP_FRACTION: f64 = 0.01;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub suite_name: String,
    pub n_samples: usize,
    pub n_skipped_boundary: usize,
    pub max_violation: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub seed: u64,
    /// Wall-clock time; not part of the certificate.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SuiteResult {
    /// One JSON line holding every field except `elapsed`. Non-finite
    /// violations serialize as `null`.
    pub fn certificate(&self) -> String {
        serde_json::to_string(self).expect("suite results always serialize")
    }
}

/// Outcome of one sample.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Outcome {
    Checked(f64),
    Skipped,
}

pub(crate) type Check = fn(&mut ChaCha8Rng, u64, usize, &ToleranceConfig) -> Outcome;

pub(crate) struct Suite {
    pub name: &'static str,
    pub default_n: usize,
    pub tolerance: f64,
    /// Pass requires `max_violation < tolerance` instead of `<=`.
    pub strict: bool,
    pub check: Check,
}

/// Names of all registered suites, in run order.
pub fn suite_names() -> Vec<&'static str> {
    suites::SUITES.iter().map(|s| s.name).collect()
}

/// Default sample count of a suite at scale 1.
pub fn default_samples(name: &str) -> Result<usize> {
    find(name).map(|s| s.default_n)
}

fn find(name: &str) -> Result<&'static Suite> {
    suites::SUITES
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownSuite(name.to_string()))
}

pub fn run_suite(name: &str, n: usize, seed: u64, cfg: &ToleranceConfig) -> Result<SuiteResult> {
    let suite = find(name)?;
    cfg.validate()?;
    if n == 0 {
        return Err(Error::InvalidParameter("need at least one sample".into()));
    }
    let start = Instant::now();
    let key = derive_seed(seed, suite.name);
    let (worst, skipped) = (0..n as u64)
        .into_par_iter()
        .map(|i| match (suite.check)(&mut rng_for(key, i), i, n, cfg) {
            Outcome::Checked(v) if v.is_nan() => (f64::INFINITY, 0usize),
            Outcome::Checked(v) => (v, 0),
            Outcome::Skipped => (f64::NEG_INFINITY, 1),
        })
        .reduce(|| (f64::NEG_INFINITY, 0), |a, b| (a.0.max(b.0), a.1 + b.1));
    let within = if suite.strict {
        worst < suite.tolerance
    } else {
        worst <= suite.tolerance
    };
    let pass = within && (skipped as f64) < MAX_SKIP_FRACTION * n as f64;
    Ok(SuiteResult {
        suite_name: suite.name.to_string(),
        n_samples: n,
        n_skipped_boundary: skipped,
        max_violation: worst,
        tolerance: suite.tolerance,
        pass,
        seed,
        elapsed: start.elapsed(),
    })
}

/// Runs every suite with `round(default * n_scale)` samples (at least one).
pub fn run_all(n_scale: f64, seed: u64, cfg: &ToleranceConfig) -> Result<Vec<SuiteResult>> {
    if !(n_scale.is_finite() && n_scale > 0.0) {
        return Err(Error::InvalidParameter(format!("scale must be positive, got {n_scale}")));
    }
    suites::SUITES
        .iter()
        .map(|s| run_suite(s.name, scaled(s.default_n, n_scale), seed, cfg))
        .collect()
}

pub fn scaled(default_n: usize, n_scale: f64) -> usize {
    ((default_n as f64 * n_scale).round() as usize).max(1)
}
