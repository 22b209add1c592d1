use serde::{Deserialize, Serialize};

use crate::complex::{rel_diff, require_finite, slack, ToleranceConfig, C64, ONE};
use crate::error::{Error, Result};
use crate::symmetrized::Membership;

/// Homogeneous coordinates `(x0 : x1 : x2 : x3)` of a point of `CP^3`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProjPoint3 {
    x: [C64; 4],
}

impl ProjPoint3 {
    pub fn new(x: [C64; 4]) -> Result<Self> {
        for z in x {
            require_finite(z, "homogeneous coordinate")?;
        }
        if x.iter().all(|z| z.norm_sqr() == 0.0) {
            return Err(Error::ZeroVector);
        }
        Ok(Self { x })
    }

    pub fn coords(&self) -> [C64; 4] {
        self.x
    }

    /// Index of the first coordinate of largest modulus.
    fn pivot(&self) -> usize {
        (0..4).fold(0, |best, k| {
            if self.x[k].norm() > self.x[best].norm() {
                k
            } else {
                best
            }
        })
    }

    /// Representative with its largest-modulus coordinate equal to 1.
    pub fn canonical(&self) -> [C64; 4] {
        let d = self.x[self.pivot()];
        self.x.map(|z| z / d)
    }

    /// Equality of points of `CP^3`: both representatives are scaled so that
    /// the pivot coordinate of `self` becomes 1, then compared entrywise.
    pub fn approx_eq(&self, other: &Self, cfg: &ToleranceConfig) -> bool {
        self.distance(other, cfg) <= cfg.eq_tol
    }

    /// Largest relative coordinate difference after scaling both
    /// representatives by the pivot of `self`; infinite if that coordinate
    /// vanishes on `other`.
    pub fn distance(&self, other: &Self, cfg: &ToleranceConfig) -> f64 {
        let k = self.pivot();
        if other.x[k].norm() <= cfg.boundary_band * norm(&other.x) {
            return f64::INFINITY;
        }
        let (a, b) = (self.x[k], other.x[k]);
        (0..4)
            .map(|j| rel_diff(self.x[j] / a, other.x[j] / b))
            .fold(0.0, f64::max)
    }
}

fn norm(x: &[C64; 4]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Membership in `D_1^(2)`, the union of
/// `{(1:t:u:v) : |t|^2 + |u|^2 - |v|^2 > 1, t^2 + u^2 - v^2 = 1, Im(u (conj t + conj v)) > 0}`
/// and `{(0:t:u:v) : t^2 + u^2 - v^2 = 0, Im(u (conj t + conj v)) > 0}`.
///
/// A failed equation gives a negative margin equal to its relative residual.
pub fn membership_d2_1(p: &ProjPoint3, cfg: &ToleranceConfig) -> Membership {
    let [x0, ..] = p.x;
    let margin = if x0.norm() > cfg.boundary_band * norm(&p.x) {
        let [_, t, u, v] = p.x.map(|z| z / x0);
        let scale = 1.0 + t.norm_sqr() + u.norm_sqr() + v.norm_sqr();
        let residual = (t * t + u * u - v * v - ONE).norm() / scale;
        equation(residual, cfg)
            .min(slack(1.0, t.norm_sqr() + u.norm_sqr() - v.norm_sqr()))
            .min(slack(0.0, orientation(t, u, v)))
    } else {
        // scale so that (t, u, v) has unit length
        let [_, t, u, v] = p.x;
        let n = (t.norm_sqr() + u.norm_sqr() + v.norm_sqr()).sqrt();
        let (t, u, v) = (t / n, u / n, v / n);
        let residual = (t * t + u * u - v * v).norm();
        equation(residual, cfg).min(slack(0.0, orientation(t, u, v)))
    };
    Membership::from_margin(margin, cfg)
}

fn equation(residual: f64, cfg: &ToleranceConfig) -> f64 {
    if residual <= cfg.eq_tol {
        f64::INFINITY
    } else {
        -residual
    }
}

/// `Im(u (conj t + conj v))`
fn orientation(t: C64, u: C64, v: C64) -> f64 {
    (u * (t.conj() + v.conj())).im
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Tri;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn pt(x: [C64; 4]) -> ProjPoint3 {
        ProjPoint3::new(x).unwrap()
    }

    #[test]
    fn canonical_form_and_equality() {
        let cfg = ToleranceConfig::default();
        let p = pt([c(1.0, 0.0), c(0.5, 0.0), c(0.0, 2.0), c(0.0, 0.0)]);
        let can = p.canonical();
        assert_eq!(can[2], c(1.0, 0.0));
        let q = pt(p.coords().map(|z| z * c(-0.3, 0.7)));
        assert!(p.approx_eq(&q, &cfg) && q.approx_eq(&p, &cfg));
        let r = pt([c(1.0, 0.0), c(0.5, 0.0), c(0.0, 2.0), c(0.1, 0.0)]);
        assert!(!p.approx_eq(&r, &cfg));
        assert_eq!(ProjPoint3::new([c(0.0, 0.0); 4]), Err(Error::ZeroVector));
    }

    #[test]
    fn d2_1_examples() {
        let cfg = ToleranceConfig::default();
        let curve = pt([c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0), c(0.0, 0.0)]);
        assert_eq!(membership_d2_1(&curve, &cfg).tri, Tri::Inside);
        let chart = pt([c(1.0, 0.0), c(1.25, 0.0), c(0.0, 0.75), c(0.0, 0.0)]);
        assert_eq!(membership_d2_1(&chart, &cfg).tri, Tri::Inside);
        // scaling does not matter
        let scaled = pt(chart.coords().map(|z| z * c(0.0, -3.0)));
        assert_eq!(membership_d2_1(&scaled, &cfg).tri, Tri::Inside);
        // off the quadric
        let off = pt([c(1.0, 0.0), c(1.3, 0.0), c(0.0, 0.75), c(0.0, 0.0)]);
        assert_eq!(membership_d2_1(&off, &cfg).tri, Tri::Outside);
    }

    #[test]
    fn vanishing_t_is_excluded() {
        let cfg = ToleranceConfig::default();
        // u = cosh w, v = sinh w solves u^2 - v^2 = 1; then |u|^2 - |v|^2 = cos(2 Im w) < 1
        for w in [c(0.5, 0.5), c(-1.2, 0.3), c(0.1, -1.0)] {
            let p = pt([c(1.0, 0.0), c(0.0, 0.0), w.cosh(), w.sinh()]);
            assert_eq!(membership_d2_1(&p, &cfg).tri, Tri::Outside);
        }
        let p = pt([c(1.0, 0.0), c(0.0, 0.0), c(0.3, 0.1), c(2.0, 0.0)]);
        assert_eq!(membership_d2_1(&p, &cfg).tri, Tri::Outside);
    }
}
