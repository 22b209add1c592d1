//! Automorphisms of the unit disc and the pseudo-hyperbolic (Mobius) distance.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::complex::{cis, normalize_angle, require_finite, C64, ONE};
use crate::error::{Error, Result};

/// Largest admissible `|alpha|`; keeps automorphisms away from the degenerate
/// boundary maps.
const ALPHA_LIMIT: f64 = 1.0 - 1e-12;

/// `z -> e^{i theta} (z - alpha) / (1 - conj(alpha) z)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiscAutomorphism {
    theta: f64,
    alpha: C64,
}

impl DiscAutomorphism {
    pub fn new(theta: f64, alpha: C64) -> Result<Self> {
        if !theta.is_finite() {
            return Err(Error::InvalidParameter("theta must be finite".into()));
        }
        require_finite(alpha, "alpha")?;
        if alpha.norm() >= ALPHA_LIMIT {
            return Err(Error::InvalidParameter(format!(
                "|alpha| = {} must be < 1",
                alpha.norm()
            )));
        }
        Ok(Self {
            theta: normalize_angle(theta),
            alpha,
        })
    }

    pub fn identity() -> Self {
        Self {
            theta: 0.0,
            alpha: C64::new(0.0, 0.0),
        }
    }

    pub fn rotation(theta: f64) -> Self {
        Self {
            theta: normalize_angle(theta),
            alpha: C64::new(0.0, 0.0),
        }
    }

    /// `z -> (alpha - z) / (1 - conj(alpha) z)`: the involution swapping 0 and
    /// `alpha`. Equal to the canonical form with `theta = pi`.
    pub fn blaschke_at(alpha: C64) -> Result<Self> {
        Self::new(PI, alpha)
    }

    /// `z -> (z + w) / (1 + conj(w) z)`, the unique map with zero rotation at
    /// the origin sending 0 to `w`.
    pub fn translation_to(w: C64) -> Result<Self> {
        Self::new(0.0, -w)
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn alpha(&self) -> C64 {
        self.alpha
    }

    pub fn apply(&self, z: C64) -> Result<C64> {
        let den = ONE - self.alpha.conj() * z;
        if den.norm() <= 1e-12 {
            return Err(Error::SingularDenominator("1 - conj(alpha) z"));
        }
        Ok(self.eval(z, den))
    }

    /// Evaluation without the denominator guard, for points known to lie in
    /// the closed disc.
    pub(crate) fn apply_unchecked(&self, z: C64) -> C64 {
        self.eval(z, ONE - self.alpha.conj() * z)
    }

    fn eval(&self, z: C64, den: C64) -> C64 {
        cis(self.theta) * (z - self.alpha) / den
    }

    fn derivative(&self, z: C64) -> C64 {
        let den = ONE - self.alpha.conj() * z;
        cis(self.theta) * (1.0 - self.alpha.norm_sqr()) / (den * den)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        // the composite vanishes at other^{-1}(self.alpha)
        let alpha = other.invert().apply_unchecked(self.alpha);
        // e^{i theta} = (f∘g)'(alpha) (1 - |alpha|^2)
        let slope = self.derivative(other.apply_unchecked(alpha)) * other.derivative(alpha);
        let rot = slope * (1.0 - alpha.norm_sqr());
        Self {
            theta: normalize_angle(rot.arg()),
            alpha,
        }
    }

    pub fn invert(&self) -> Self {
        Self {
            theta: normalize_angle(-self.theta),
            alpha: -self.alpha * cis(self.theta),
        }
    }
}

/// Ordered pair of points of the open unit disc.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BidiscPoint {
    pub z1: C64,
    pub z2: C64,
}

impl BidiscPoint {
    pub fn new(z1: C64, z2: C64) -> Result<Self> {
        require_finite(z1, "z1")?;
        require_finite(z2, "z2")?;
        if z1.norm() >= 1.0 || z2.norm() >= 1.0 {
            return Err(Error::InvalidPoint(format!(
                "bidisc coordinates must have modulus < 1 (got {}, {})",
                z1.norm(),
                z2.norm()
            )));
        }
        Ok(Self { z1, z2 })
    }

    pub fn swapped(&self) -> Self {
        Self {
            z1: self.z2,
            z2: self.z1,
        }
    }

    /// Applies the same disc automorphism to both coordinates.
    pub fn map_diag(&self, phi: &DiscAutomorphism) -> Self {
        Self {
            z1: phi.apply_unchecked(self.z1),
            z2: phi.apply_unchecked(self.z2),
        }
    }
}

/// `|z1 - z2| / |1 - conj(z1) z2|`.
pub fn mobius_distance(p: &BidiscPoint) -> f64 {
    pseudo_hyperbolic(p.z1, p.z2)
}

pub(crate) fn pseudo_hyperbolic(z1: C64, z2: C64) -> f64 {
    ((z1 - z2) / (ONE - z1.conj() * z2)).norm()
}
