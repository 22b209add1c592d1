//! The symmetrized bidisc `G = {(z1 + z2, z1 z2) : z1, z2 in D}`.
//!
//! Points are written `(s, p)`. The automorphism group acts through
//! `H_phi(z1 + z2, z1 z2) = (phi(z1) + phi(z2), phi(z1) phi(z2))` and its
//! orbits are the level sets of the leaf index `q`, the Mobius distance of
//! any lift. Leaf 0 is the royal variety `{(2z, z^2)}`.

mod membership;
mod orbit;

pub use membership::{
    exhaustion_level, membership_g, membership_g_all, membership_gc, GcParams, Membership,
};
pub use orbit::{automorphisms_between, orbit_path, recover_automorphism};

use serde::{Deserialize, Serialize};

use crate::complex::{require_finite, solve_quadratic, ToleranceConfig, Tri, C64, ONE};
use crate::disc::{BidiscPoint, DiscAutomorphism};
use crate::error::{Error, Result};
use crate::sampling::{rng_for, uniform_bidisc};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GPoint {
    pub s: C64,
    pub p: C64,
}

impl GPoint {
    pub fn new(s: C64, p: C64) -> Result<Self> {
        require_finite(s, "s")?;
        require_finite(p, "p")?;
        Ok(Self { s, p })
    }

    /// Membership under the classical criterion `|s - conj(s) p| + |p|^2 < 1`.
    pub fn membership(&self, cfg: &ToleranceConfig) -> Membership {
        membership_g(self.s, self.p, 4, cfg).expect("4 is a valid condition")
    }

    /// Point of the royal variety `(2z, z^2)`.
    pub fn royal(z: C64) -> Self {
        Self {
            s: 2.0 * z,
            p: z * z,
        }
    }

    /// `s^2 - 4p`, the squared difference of the lift coordinates.
    pub fn discriminant(&self) -> C64 {
        self.s * self.s - 4.0 * self.p
    }
}

/// Index of the orbit through a point: `a in [0, 1)`, zero exactly on the
/// royal variety.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct LeafIndex(f64);

impl LeafIndex {
    pub fn new(a: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&a) {
            return Err(Error::InvalidParameter(format!(
                "leaf index {a} not in [0, 1)"
            )));
        }
        Ok(Self(a))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

pub fn sym(b: &BidiscPoint) -> GPoint {
    GPoint {
        s: b.z1 + b.z2,
        p: b.z1 * b.z2,
    }
}

/// Roots of `z^2 - s z + p`, sorted lexicographically by `(re, im)`.
///
/// Fails when a root leaves the open disc, i.e. when `g` is not in `G`.
pub fn sym_inverse(g: &GPoint) -> Result<[C64; 2]> {
    let mut roots = solve_quadratic(ONE, -g.s, g.p)?;
    let outer = roots[0].norm().max(roots[1].norm());
    if outer >= 1.0 || outer.is_nan() {
        return Err(Error::OutsideDomain {
            domain: "G",
            tri: if outer == 1.0 { Tri::Boundary } else { Tri::Outside },
            margin: 1.0 - outer,
        });
    }
    roots.sort_by(|x, y| x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im)));
    Ok(roots)
}

/// A lift of `g` to the bidisc, in the sorted root order of [`sym_inverse`].
pub fn lift(g: &GPoint) -> Result<BidiscPoint> {
    let [z1, z2] = sym_inverse(g)?;
    Ok(BidiscPoint { z1, z2 })
}

/// `H_phi(g)`, computed by lifting, mapping both coordinates and re-symmetrizing.
pub fn apply_h(phi: &DiscAutomorphism, g: &GPoint) -> Result<GPoint> {
    Ok(sym(&lift(g)?.map_diag(phi)))
}

/// Leaf index `q(s, p)`, the Mobius distance of either lift.
///
/// Evaluated without root finding from
/// `q^2 = 2|s^2 - 4p| / (2 + 2|p|^2 - |s|^2 + |s^2 - 4p|)`, which follows from
/// `|z1 - z2|^2 = |s^2 - 4p|` and
/// `|1 - conj(z1) z2|^2 = 1 + |p|^2 - (|s|^2 - |s^2 - 4p|) / 2`.
pub fn leaf_index(g: &GPoint, cfg: &ToleranceConfig) -> Result<LeafIndex> {
    let m = g.membership(cfg);
    if m.tri != Tri::Inside {
        return Err(Error::OutsideDomain {
            domain: "G",
            tri: m.tri,
            margin: m.margin,
        });
    }
    Ok(LeafIndex(leaf_value(g)))
}

pub(crate) fn leaf_value(g: &GPoint) -> f64 {
    let d = g.discriminant().norm();
    let den = 2.0 + 2.0 * g.p.norm_sqr() - g.s.norm_sqr() + d;
    (2.0 * d / den).sqrt().clamp(0.0, 1.0 - f64::EPSILON)
}

/// `b = a / (1 + sqrt(1 - a^2))`: the point `(0, -b^2)` lies on leaf `a`.
pub fn reindex_a_to_b(a: LeafIndex) -> f64 {
    let a = a.0;
    a / (1.0 + ((1.0 - a) * (1.0 + a)).sqrt())
}

/// Inverse of [`reindex_a_to_b`]: `a = 2b / (1 + b^2)`.
pub fn reindex_b_to_a(b: f64) -> Result<LeafIndex> {
    if !(0.0..1.0).contains(&b) {
        return Err(Error::InvalidParameter(format!("b = {b} not in [0, 1)")));
    }
    LeafIndex::new(2.0 * b / (1.0 + b * b))
}

/// `n` points of `G`, pushed forward from uniform bidisc samples.
pub fn sample_g(n: usize, seed: u64) -> Vec<GPoint> {
    (0..n as u64)
        .map(|i| sym(&uniform_bidisc(&mut rng_for(seed, i))))
        .collect()
}
