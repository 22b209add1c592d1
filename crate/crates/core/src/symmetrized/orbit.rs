use std::f64::consts::PI;

use crate::complex::{normalize_angle, ToleranceConfig, C64};
use crate::disc::{mobius_distance, BidiscPoint, DiscAutomorphism};
use crate::error::{Error, Result};

use super::{leaf_index, lift, sym, GPoint, LeafIndex};

/// The unique `phi` with `phi(a) = lift.z1` and `phi(0) = lift.z2`.
pub fn recover_automorphism(
    a: LeafIndex,
    lift: &BidiscPoint,
    cfg: &ToleranceConfig,
) -> Result<DiscAutomorphism> {
    let a = a.value();
    if a <= cfg.boundary_band {
        return Err(Error::DegenerateLeaf(a));
    }
    let dist = mobius_distance(lift);
    if (dist - a).abs() > cfg.eq_tol * (1.0 + a) {
        return Err(Error::DistanceMismatch {
            expected: a,
            actual: dist,
        });
    }
    // tau sends 0 to z2; tau^{-1}(z1) has modulus a, its argument is the rotation
    let tau = DiscAutomorphism::translation_to(lift.z2)?;
    let w = tau.invert().apply_unchecked(lift.z1);
    Ok(tau.compose(&DiscAutomorphism::rotation(w.arg())))
}

/// The two automorphisms `phi` with `H_phi(from) = to`, for points on a
/// common leaf `a > 0`. One matches the sorted lifts coordinatewise, the
/// other after swapping the lift of `to`.
pub fn automorphisms_between(
    from: &GPoint,
    to: &GPoint,
    cfg: &ToleranceConfig,
) -> Result<[DiscAutomorphism; 2]> {
    let a = leaf_index(from, cfg)?;
    let b = leaf_index(to, cfg)?;
    if (a.value() - b.value()).abs() > cfg.eq_tol * (1.0 + a.value()) {
        return Err(Error::LeafMismatch {
            expected: a.value(),
            actual: b.value(),
        });
    }
    let src = lift(from)?;
    let dst = lift(to)?;
    let back = recover_automorphism(a, &src, cfg)?.invert();
    let straight = recover_automorphism(a, &dst, cfg)?.compose(&back);
    let crossed = recover_automorphism(a, &dst.swapped(), cfg)?.compose(&back);
    Ok([straight, crossed])
}

/// Waypoints `H_{phi_t}(a, 0)`, `t = 0, 1/(steps-1), ..., 1`, joining `(a, 0)`
/// to `target` inside the leaf.
///
/// With `phi` written as `e^{i theta} (alpha - z) / (1 - conj(alpha) z)` and
/// `H_phi(a, 0) = target`, the path uses `theta_t = t theta + (1 - t) pi` and
/// `alpha_t = t alpha`; `phi_0` is the identity.
pub fn orbit_path(
    a: LeafIndex,
    target: &GPoint,
    steps: usize,
    cfg: &ToleranceConfig,
) -> Result<Vec<GPoint>> {
    if steps < 2 {
        return Err(Error::InvalidParameter(format!(
            "orbit path needs at least 2 steps, got {steps}"
        )));
    }
    let actual = leaf_index(target, cfg)?.value();
    if (actual - a.value()).abs() > cfg.eq_tol * (1.0 + a.value()) {
        return Err(Error::LeafMismatch {
            expected: a.value(),
            actual,
        });
    }
    let phi = if a.value() > cfg.boundary_band {
        // of the two automorphisms reaching the target, take the one nearest
        // the identity so a path to (a, 0) itself is constant
        let up = lift(target)?;
        let f = recover_automorphism(a, &up, cfg)?;
        let g = recover_automorphism(a, &up.swapped(), cfg)?;
        let key = |h: &DiscAutomorphism| (h.alpha().norm(), h.theta().abs());
        if key(&g) < key(&f) {
            g
        } else {
            f
        }
    } else {
        // royal variety: target = (2z, z^2), any phi with phi(0) = z works
        DiscAutomorphism::translation_to(target.s / 2.0)?
    };
    // the canonical form e^{i theta}(z - alpha)/(...) carries an extra factor -1;
    // take the branch of theta nearest pi so that phi_t stays near the identity
    let theta = PI + normalize_angle(phi.theta());
    let alpha = phi.alpha();
    let a0 = C64::new(a.value(), 0.0);
    let last = (steps - 1) as f64;
    (0..steps)
        .map(|k| {
            let t = k as f64 / last;
            let theta_t = t * theta + (1.0 - t) * PI;
            let phi_t = DiscAutomorphism::new(theta_t + PI, alpha * t)?;
            let lifted = BidiscPoint {
                z1: phi_t.apply_unchecked(a0),
                z2: phi_t.apply_unchecked(C64::new(0.0, 0.0)),
            };
            Ok(sym(&lifted))
        })
        .collect()
}
