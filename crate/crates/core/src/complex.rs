//! Scalar layer shared by every domain: complex arithmetic helpers, the
//! tolerance policy, three-way classification of strict inequalities, a
//! cancellation-free quadratic solver and the principal square root on the
//! slit plane.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type C64 = Complex64;

pub const I: C64 = C64::new(0.0, 1.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const ZERO: C64 = C64::new(0.0, 0.0);

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceConfig {
    /// Relative tolerance for equality of complex values.
    pub eq_tol: f64,
    /// Half-width of the band around zero margin classified as `Boundary`.
    pub boundary_band: f64,
    /// Step for finite-difference oracles.
    pub fd_step: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            eq_tol: 1e-10,
            boundary_band: 1e-12,
            fd_step: 1e-6,
        }
    }
}

impl ToleranceConfig {
    pub fn new(eq_tol: f64, boundary_band: f64, fd_step: f64) -> Result<Self> {
        let cfg = Self {
            eq_tol,
            boundary_band,
            fd_step,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let all_positive = [self.eq_tol, self.boundary_band, self.fd_step]
            .iter()
            .all(|v| v.is_finite() && *v > 0.0);
        if !all_positive {
            return Err(Error::InvalidParameter(
                "tolerances must be finite and strictly positive".into(),
            ));
        }
        if self.eq_tol <= self.boundary_band {
            return Err(Error::InvalidParameter(
                "eq_tol must exceed boundary_band".into(),
            ));
        }
        Ok(())
    }

    /// Relative-scaled equality: `|x - y| <= eq_tol * (1 + max(|x|, |y|))`.
    pub fn approx_eq(&self, x: C64, y: C64) -> bool {
        rel_diff(x, y) <= self.eq_tol
    }

    pub fn classify(&self, margin: f64) -> Tri {
        margin_to_tri(margin, self)
    }
}

/// Classification of a point against a domain cut out by strict inequalities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Tri {
    Inside,
    Boundary,
    Outside,
}

impl Tri {
    pub fn as_str(self) -> &'static str {
        match self {
            Tri::Inside => "Inside",
            Tri::Boundary => "Boundary",
            Tri::Outside => "Outside",
        }
    }
}

impl std::fmt::Display for Tri {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn margin_to_tri(margin: f64, cfg: &ToleranceConfig) -> Tri {
    if margin > cfg.boundary_band {
        Tri::Inside
    } else if margin < -cfg.boundary_band {
        Tri::Outside
    } else {
        Tri::Boundary
    }
}

/// Normalized slack of the strict inequality `small < big`.
///
/// Positive exactly when the inequality holds. The raw difference is divided
/// by `max(1, |small|, |big|)` so margins of different inequalities are on a
/// comparable scale.
pub fn slack(small: f64, big: f64) -> f64 {
    (big - small) / 1f64.max(small.abs()).max(big.abs())
}

/// `|x - y| / (1 + max(|x|, |y|))`.
pub fn rel_diff(x: C64, y: C64) -> f64 {
    (x - y).norm() / (1.0 + x.norm().max(y.norm()))
}

pub fn is_finite(z: C64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

pub(crate) fn require_finite(z: C64, what: &str) -> Result<()> {
    if is_finite(z) {
        Ok(())
    } else {
        Err(Error::InvalidPoint(format!("{what} is not finite")))
    }
}

/// Both roots of `a z^2 + b z + c = 0`.
///
/// The root of larger magnitude comes from the discriminant branch whose sign
/// matches `b`; the other follows from the product `c / a`. This keeps nearly
/// coincident roots free of cancellation.
pub fn solve_quadratic(a: C64, b: C64, c: C64) -> Result<[C64; 2]> {
    if a.norm() == 0.0 {
        return Err(Error::DegenerateLeadingCoefficient);
    }
    let disc = (b * b - 4.0 * a * c).sqrt();
    // pick the sign making |b + sign*disc| as large as possible
    let q = if (b.conj() * disc).re >= 0.0 {
        -0.5 * (b + disc)
    } else {
        -0.5 * (b - disc)
    };
    if q.norm() == 0.0 {
        // b = 0 and c = 0
        return Ok([ZERO, ZERO]);
    }
    Ok([q / a, c / q])
}

/// Principal square root with branch cut `(-inf, 0]`.
///
/// Rejects arguments whose distance to the cut is at most `boundary_band`.
pub fn sqrt_slit(w: C64, cfg: &ToleranceConfig) -> Result<C64> {
    require_finite(w, "square root argument")?;
    if distance_to_cut(w) <= cfg.boundary_band {
        return Err(Error::BranchCut { re: w.re, im: w.im });
    }
    Ok(w.sqrt())
}

/// Euclidean distance from `w` to the ray `(-inf, 0]`.
pub fn distance_to_cut(w: C64) -> f64 {
    if w.re <= 0.0 {
        w.im.abs()
    } else {
        w.norm()
    }
}

pub fn cis(theta: f64) -> C64 {
    C64::new(theta.cos(), theta.sin())
}

/// Maps an angle into `(-pi, pi]`.
pub fn normalize_angle(theta: f64) -> f64 {
    let mut t = theta % (2.0 * PI);
    if t <= -PI {
        t += 2.0 * PI;
    } else if t > PI {
        t -= 2.0 * PI;
    }
    t
}

const CIRCLE_GRID: usize = 720;
const GOLDEN_TOL: f64 = 1e-12;

/// Maximum of `f(e^{it})` over the unit circle.
///
/// Samples a uniform 720-point grid, then refines the arc around the best
/// sample by golden-section search until the bracket is below `1e-12`.
pub fn max_on_unit_circle(f: impl Fn(C64) -> f64) -> f64 {
    let step = 2.0 * PI / CIRCLE_GRID as f64;
    let (mut best_k, mut best) = (0usize, f64::NEG_INFINITY);
    for k in 0..CIRCLE_GRID {
        let v = f(cis(k as f64 * step));
        if v > best || v.is_nan() {
            best = v;
            best_k = k;
            if v.is_nan() {
                return f64::NAN;
            }
        }
    }
    let g = |t: f64| f(cis(t));
    let center = best_k as f64 * step;
    let refined = golden_max(g, center - step, center + step);
    best.max(refined)
}

fn golden_max(g: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut g1, mut g2) = (g(x1), g(x2));
    while hi - lo > GOLDEN_TOL {
        if g1 < g2 {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + inv_phi * (hi - lo);
            g2 = g(x2);
        } else {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - inv_phi * (hi - lo);
            g1 = g(x1);
        }
    }
    g1.max(g2)
}
