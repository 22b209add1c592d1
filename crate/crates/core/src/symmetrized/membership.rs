//! Nine equivalent membership tests for `G` and the exhaustion `G_c`.
//!
//! | # | test |
//! |---|------|
//! | 1 | definition; evaluated through test 4 |
//! | 2 | `|s^2 - 4p| + |s|^2 < 2(1 + |p|^2)` and `|p|^2 + Im(conj(s) p + conj(s)) < 1` |
//! | 3 | both roots of `z^2 - s z + p` lie in the disc |
//! | 4 | `|s - conj(s) p| + |p|^2 < 1` |
//! | 5 | `|s| < 2` and test 4 |
//! | 6 | `sup_{|z| <= 1} |(2zp - s) / (2 - zs)| < 1` |
//! | 7 | `sup_{|z| <= 1} |(2p - conj(z) s) / (2 - zs)| < 1` |
//! | 8 | `2|s - conj(s) p| + |s^2 - 4p| + |s|^2 < 4` |
//! | 9 | `|p| < 1` and `s = beta p + conj(beta)` for some `beta` in the disc |

use serde::{Deserialize, Serialize};

use crate::complex::{
    max_on_unit_circle, slack, solve_quadratic, ToleranceConfig, Tri, C64, ONE,
};
use crate::error::{Error, Result};

/// Outcome of a membership test: classification plus the signed margin it
/// was derived from (minimum normalized slack over the test's inequalities).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Membership {
    pub tri: Tri,
    pub margin: f64,
}

impl Membership {
    pub(crate) fn from_margin(margin: f64, cfg: &ToleranceConfig) -> Self {
        // NaN margins only arise from non-finite input; treat as outside
        let margin = if margin.is_nan() { f64::NEG_INFINITY } else { margin };
        Self {
            tri: cfg.classify(margin),
            margin,
        }
    }
}

pub fn membership_g(s: C64, p: C64, condition: u8, cfg: &ToleranceConfig) -> Result<Membership> {
    let margin = match condition {
        1 | 4 => cond4(s, p),
        2 => cond2(s, p),
        3 => cond3(s, p),
        5 => slack(s.norm(), 2.0).min(cond4(s, p)),
        6 => cond6(s, p),
        7 => cond7(s, p),
        8 => cond8(s, p),
        9 => cond9(s, p),
        other => return Err(Error::InvalidCondition(other)),
    };
    Ok(Membership::from_margin(margin, cfg))
}

/// All nine tests, indexed by `condition - 1`.
pub fn membership_g_all(s: C64, p: C64, cfg: &ToleranceConfig) -> [Membership; 9] {
    std::array::from_fn(|k| membership_g(s, p, k as u8 + 1, cfg).expect("valid condition"))
}

fn cond2(s: C64, p: C64) -> f64 {
    let first = slack(
        (s * s - 4.0 * p).norm() + s.norm_sqr(),
        2.0 * (1.0 + p.norm_sqr()),
    );
    first.min(half_plane_slack(s, p))
}

/// `|p|^2 + Im(conj(s) p + conj(s)) < 1`
fn half_plane_slack(s: C64, p: C64) -> f64 {
    slack(p.norm_sqr() + (s.conj() * p + s.conj()).im, 1.0)
}

fn cond3(s: C64, p: C64) -> f64 {
    match solve_quadratic(ONE, -s, p) {
        Ok([r1, r2]) => 1.0 - r1.norm().max(r2.norm()),
        Err(_) => f64::NEG_INFINITY,
    }
}

fn cond4(s: C64, p: C64) -> f64 {
    slack((s - s.conj() * p).norm() + p.norm_sqr(), 1.0)
}

/// For `|s| >= 2` the quotient has a pole in the closed disc and the
/// supremum is infinite; the margin is then the (non-positive) slack of
/// `|s| < 2`. Otherwise the quotient is holomorphic on a neighbourhood of the
/// closed disc and its supremum sits on the unit circle.
fn cond6(s: C64, p: C64) -> f64 {
    let pole = slack(s.norm(), 2.0);
    if pole <= 0.0 {
        return pole;
    }
    let sup = max_on_unit_circle(|z| ((2.0 * z * p - s) / (2.0 - z * s)).norm());
    slack(sup, 1.0)
}

/// Same pole analysis as test 6. `log|2p - conj(z) s|` and `log|2 - zs|` are
/// both harmonic, so the supremum is again attained on the circle.
fn cond7(s: C64, p: C64) -> f64 {
    let pole = slack(s.norm(), 2.0);
    if pole <= 0.0 {
        return pole;
    }
    let sup = max_on_unit_circle(|z| ((2.0 * p - z.conj() * s) / (2.0 - z * s)).norm());
    slack(sup, 1.0)
}

fn cond8(s: C64, p: C64) -> f64 {
    slack(
        2.0 * (s - s.conj() * p).norm() + (s * s - 4.0 * p).norm() + s.norm_sqr(),
        4.0,
    )
}

/// Writing `beta = b1 + i b2`, `s = beta p + conj(beta)` is the real system
///
/// ```text
/// [1 + p.re   -p.im ] [b1]   [s.re]
/// [  p.im   p.re - 1] [b2] = [s.im]
/// ```
///
/// with determinant `|p|^2 - 1`, nonzero whenever `|p| < 1`.
fn cond9(s: C64, p: C64) -> f64 {
    let unit = slack(p.norm(), 1.0);
    if unit <= 0.0 {
        return unit;
    }
    let beta = solve_beta(s, p);
    unit.min(slack(beta.norm(), 1.0))
}

fn solve_beta(s: C64, p: C64) -> C64 {
    let det = p.norm_sqr() - 1.0;
    let b1 = ((p.re - 1.0) * s.re + p.im * s.im) / det;
    let b2 = (-p.im * s.re + (1.0 + p.re) * s.im) / det;
    C64::new(b1, b2)
}

/// Exhaustion parameter `c > 1` of `G_c`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct GcParams(f64);

impl GcParams {
    pub fn new(c: f64) -> Result<Self> {
        if !(c.is_finite() && c > 1.0) {
            return Err(Error::InvalidParameter(format!(
                "exhaustion parameter c = {c} must be > 1"
            )));
        }
        Ok(Self(c))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// `c|s^2 - 4p| + |s|^2 < 2(1 + |p|^2)` and `|p|^2 + Im(conj(s) p + conj(s)) < 1`.
pub fn membership_gc(s: C64, p: C64, c: GcParams, cfg: &ToleranceConfig) -> Membership {
    let first = slack(
        c.0 * (s * s - 4.0 * p).norm() + s.norm_sqr(),
        2.0 * (1.0 + p.norm_sqr()),
    );
    Membership::from_margin(first.min(half_plane_slack(s, p)), cfg)
}

/// Supremum of the `c` with `(s, p)` in `G_c`, or `None` when the point is in
/// no `G_c`. Infinite on the royal variety.
pub fn exhaustion_level(s: C64, p: C64) -> Option<f64> {
    if half_plane_slack(s, p) <= 0.0 {
        return None;
    }
    let num = 2.0 * (1.0 + p.norm_sqr()) - s.norm_sqr();
    let d = (s * s - 4.0 * p).norm();
    if num <= 0.0 {
        return None;
    }
    let level = if d == 0.0 { f64::INFINITY } else { num / d };
    (level > 1.0).then_some(level)
}
