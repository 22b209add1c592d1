//! The identity component `SO(2,1)^0` of the group of real 3x3 matrices
//! preserving `x0^2 + x1^2 - x2^2`, acting on `C^2` by
//! `(z1, z2) -> (a21 + a22 z1 + a23 z2, a31 + a32 z1 + a33 z2) / (a11 + a12 z1 + a13 z2)`.

use nalgebra::Matrix3;
use serde::{Deserialize, Serialize};

use crate::complex::{require_finite, ToleranceConfig, C64};
use crate::error::{Error, Result};

/// One-parameter subgroups generating `SO(2,1)^0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Generator {
    /// Rotation in the `(x0, x1)` plane.
    Rot01,
    /// Hyperbolic rotation mixing `x0` and `x2`.
    Boost02,
    /// Hyperbolic rotation mixing `x1` and `x2`.
    Boost12,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SO21Element {
    m: Matrix3<f64>,
    /// Built from generator exponentials only, hence in the identity component.
    certified: bool,
}

fn eta() -> Matrix3<f64> {
    Matrix3::from_diagonal(&nalgebra::Vector3::new(1.0, 1.0, -1.0))
}

impl SO21Element {
    pub fn identity() -> Self {
        Self {
            m: Matrix3::identity(),
            certified: true,
        }
    }

    /// Wraps an arbitrary matrix after checking `m^T eta m = eta` and
    /// `det m = 1`. Membership in the identity component is not decided, so
    /// the result is uncertified.
    pub fn from_matrix(m: Matrix3<f64>, cfg: &ToleranceConfig) -> Result<Self> {
        if m.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidParameter("matrix entries must be finite".into()));
        }
        let e = Self { m, certified: false };
        let scale = 1.0 + m.norm_squared();
        if e.eta_residual() > cfg.eq_tol * scale {
            return Err(Error::InvalidParameter(format!(
                "matrix does not preserve the form (residual {:e})",
                e.eta_residual()
            )));
        }
        if (m.determinant() - 1.0).abs() > cfg.eq_tol * scale {
            return Err(Error::InvalidParameter(format!(
                "determinant {} is not 1",
                m.determinant()
            )));
        }
        Ok(e)
    }

    pub fn matrix(&self) -> &Matrix3<f64> {
        &self.m
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    /// Largest entry of `m^T eta m - eta`.
    pub fn eta_residual(&self) -> f64 {
        (self.m.transpose() * eta() * self.m - eta()).amax()
    }

    /// `self * other`, acting as `other` first.
    pub fn mul(&self, other: &Self) -> Self {
        Self {
            m: self.m * other.m,
            certified: self.certified && other.certified,
        }
    }

    pub fn inverse(&self) -> Self {
        // m^{-1} = eta m^T eta for any m preserving eta
        Self {
            m: eta() * self.m.transpose() * eta(),
            certified: self.certified,
        }
    }
}

pub fn so21_generator(kind: Generator, t: f64) -> Result<SO21Element> {
    if !t.is_finite() {
        return Err(Error::InvalidParameter("generator parameter must be finite".into()));
    }
    let m = match kind {
        Generator::Rot01 => {
            let (s, c) = t.sin_cos();
            Matrix3::new(c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0)
        }
        Generator::Boost02 => {
            let (sh, ch) = (t.sinh(), t.cosh());
            Matrix3::new(ch, 0.0, sh, 0.0, 1.0, 0.0, sh, 0.0, ch)
        }
        Generator::Boost12 => {
            let (sh, ch) = (t.sinh(), t.cosh());
            Matrix3::new(1.0, 0.0, 0.0, 0.0, ch, sh, 0.0, sh, ch)
        }
    };
    Ok(SO21Element { m, certified: true })
}

pub fn so21_act(g: &SO21Element, z1: C64, z2: C64, cfg: &ToleranceConfig) -> Result<(C64, C64)> {
    require_finite(z1, "z1")?;
    require_finite(z2, "z2")?;
    let m = &g.m;
    let row = |r: usize| m[(r, 0)] + m[(r, 1)] * z1 + m[(r, 2)] * z2;
    let den = row(0);
    // Cauchy-Schwarz bound on the denominator
    let scale = m.row(0).norm() * (1.0 + z1.norm_sqr() + z2.norm_sqr()).sqrt();
    if den.norm() <= cfg.boundary_band * scale {
        return Err(Error::SingularDenominator("a11 + a12 z1 + a13 z2"));
    }
    Ok((row(1) / den, row(2) / den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isaev::{eta_index, membership_d1, D1Point};
    use crate::complex::Tri;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    const KINDS: [Generator; 3] = [Generator::Rot01, Generator::Boost02, Generator::Boost12];

    #[test]
    fn generators_at_zero_are_identity() {
        for k in KINDS {
            assert_eq!(so21_generator(k, 0.0).unwrap().matrix(), &Matrix3::identity());
        }
    }

    #[test]
    fn boost12_matrix() {
        let t: f64 = 0.7;
        let g = so21_generator(Generator::Boost12, t).unwrap();
        let want = Matrix3::new(1.0, 0.0, 0.0, 0.0, t.cosh(), t.sinh(), 0.0, t.sinh(), t.cosh());
        assert_eq!(g.matrix(), &want);
    }

    #[test]
    fn products_stay_in_the_group() {
        let cfg = ToleranceConfig::default();
        let mut g = SO21Element::identity();
        for (j, k) in KINDS.iter().cycle().take(9).enumerate() {
            g = g.mul(&so21_generator(*k, 0.1 + 0.05 * j as f64).unwrap());
            assert!(so21_generator(*k, 1.3).unwrap().eta_residual() < 1e-13);
        }
        assert!(g.eta_residual() < 1e-12);
        assert!((g.matrix().determinant() - 1.0).abs() < 1e-12);
        assert!(g.is_certified());
        let h = SO21Element::from_matrix(*g.matrix(), &cfg).unwrap();
        assert!(!h.is_certified());
        assert!(SO21Element::from_matrix(Matrix3::identity() * 2.0, &cfg).is_err());
        // a reflection preserves the form but has determinant -1
        let refl = Matrix3::from_diagonal(&nalgebra::Vector3::new(1.0, -1.0, 1.0));
        assert!(SO21Element::from_matrix(refl, &cfg).is_err());
        let id = g.mul(&g.inverse()).matrix() - Matrix3::identity();
        assert!(id.amax() < 1e-12);
    }

    #[test]
    fn action_examples() {
        let cfg = ToleranceConfig::default();
        let (a, b) = so21_act(&SO21Element::identity(), c(0.0, 1.0), c(0.0, 0.0), &cfg).unwrap();
        assert_eq!((a, b), (c(0.0, 1.0), c(0.0, 0.0)));

        let p = D1Point::new(c(0.2, 1.1), c(0.3, -0.4)).unwrap();
        let before = eta_index(&p, &cfg).unwrap();
        let g1 = so21_generator(Generator::Boost12, 0.3).unwrap();
        let g2 = so21_generator(Generator::Rot01, -0.8).unwrap();
        let (a, b) = so21_act(&g1, p.z1, p.z2, &cfg).unwrap();
        let moved = D1Point::new(a, b).unwrap();
        assert_eq!(membership_d1(&moved, 1, &cfg).unwrap().tri, Tri::Inside);
        assert!((eta_index(&moved, &cfg).unwrap() - before).abs() < 1e-12);

        // left action
        let (x, y) = so21_act(&g2.mul(&g1), p.z1, p.z2, &cfg).unwrap();
        let (x2, y2) = so21_act(&g2, a, b, &cfg).unwrap();
        assert!(cfg.approx_eq(x, x2) && cfg.approx_eq(y, y2));
    }

    #[test]
    fn singular_denominator() {
        let cfg = ToleranceConfig::default();
        let g = so21_generator(Generator::Rot01, std::f64::consts::FRAC_PI_2).unwrap();
        // first row is (cos, -sin, 0) = (~0, -1, 0): vanishes at z1 = 0
        assert!(matches!(
            so21_act(&g, c(0.0, 0.0), c(0.5, 0.0), &cfg),
            Err(Error::SingularDenominator(_))
        ));
    }
}
