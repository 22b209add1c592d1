//! Explicit biholomorphisms between the bidisc, `G`, `D_1`, `Omega_1` and
//! `D_1^(2)`, and the symmetrization maps making
//!
//! ```text
//! D x D --H--> Omega_1        D x D --J--> D_1^(2)
//!   |sym         |sym_omega1    |sym          |sym_d2_1
//!   G  ---F--->  D_1            G  ---F--->  D_1
//! ```
//!
//! commute.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{rel_diff, sqrt_slit, ToleranceConfig, Tri, C64, I, ONE};
use crate::disc::BidiscPoint;
use crate::error::{Error, Result};
use crate::isaev::{membership_d1, membership_d2_1, membership_omega1, D1Point, ProjPoint3};
use crate::sampling::{derive_seed, rng_for, uniform_bidisc};
use crate::symmetrized::{sym, sym_inverse, GPoint, Membership};

fn require_inside(m: Membership, domain: &'static str) -> Result<()> {
    if m.tri == Tri::Inside {
        Ok(())
    } else {
        Err(Error::OutsideDomain {
            domain,
            tri: m.tri,
            margin: m.margin,
        })
    }
}

/// `F(s, p) = (i (1 + p) / (1 - p), -i s / (1 - p))`, for `(s, p)` in `G`.
pub fn map_f(g: &GPoint, cfg: &ToleranceConfig) -> Result<D1Point> {
    require_inside(g.membership(cfg), "G")?;
    map_f_extended(g, cfg)
}

/// The formula of [`map_f`] on all of `{p != 1}`, without a membership check.
pub fn map_f_extended(g: &GPoint, cfg: &ToleranceConfig) -> Result<D1Point> {
    let den = ONE - g.p;
    if den.norm() <= cfg.boundary_band {
        return Err(Error::SingularDenominator("1 - p"));
    }
    D1Point::new(I * (ONE + g.p) / den, -I * g.s / den)
}

/// `p = (u - i) / (u + i)`, `s = -2v / (u + i)`, for `(u, v)` in `D_1`.
pub fn map_f_inv(d: &D1Point, cfg: &ToleranceConfig) -> Result<GPoint> {
    require_inside(membership_d1(d, 1, cfg)?, "D_1")?;
    map_f_inv_extended(d, cfg)
}

/// The formula of [`map_f_inv`] on all of `{u != -i}`.
pub fn map_f_inv_extended(d: &D1Point, cfg: &ToleranceConfig) -> Result<GPoint> {
    let den = d.z1 + I;
    if den.norm() <= cfg.boundary_band {
        return Err(Error::SingularDenominator("u + i"));
    }
    GPoint::new(-2.0 * d.z2 / den, (d.z1 - I) / den)
}

/// `H(z, w) = ((z - w) / (1 - zw), -i (z + w) / (1 - zw))`.
pub fn map_h(b: &BidiscPoint) -> (C64, C64) {
    let den = ONE - b.z1 * b.z2;
    ((b.z1 - b.z2) / den, -I * (b.z1 + b.z2) / den)
}

/// Inverse of [`map_h`] on `Omega_1`.
///
/// With `r = sqrt(1 - u^2 - v^2)`, the preimage is either
/// `((1 + r) / (u - iv), -(1 + r) / (u + iv))` or its image under
/// `(z, w) -> (-1/w, -1/z)`, `((u + iv) / (1 + r), -(u - iv) / (1 + r))`,
/// whichever lies in the bidisc. The second form also covers `u = +-iv`.
pub fn map_h_inv(u: C64, v: C64, cfg: &ToleranceConfig) -> Result<BidiscPoint> {
    require_inside(membership_omega1(u, v, cfg), "Omega_1")?;
    let r = sqrt_slit(ONE - u * u - v * v, cfg)?;
    let near = ((u + I * v) / (ONE + r), -(u - I * v) / (ONE + r));
    let rim = near.0.norm().max(near.1.norm());
    if (rim - 1.0).abs() <= cfg.boundary_band {
        return Err(Error::OutsideDomain {
            domain: "Omega_1",
            tri: Tri::Boundary,
            margin: 1.0 - rim,
        });
    }
    if rim < 1.0 {
        return Ok(BidiscPoint {
            z1: near.0,
            z2: near.1,
        });
    }
    BidiscPoint::new((ONE + r) / (u - I * v), -(ONE + r) / (u + I * v))
}

/// `J(z, w) = (z - w : 1 - zw : i (1 + zw) : -i (z + w))`.
pub fn map_j(b: &BidiscPoint) -> ProjPoint3 {
    let (z, w) = (b.z1, b.z2);
    ProjPoint3::new([z - w, ONE - z * w, I * (ONE + z * w), -I * (z + w)])
        .expect("1 - zw does not vanish on the bidisc")
}

/// Inverse of [`map_j`] on `D_1^(2)`.
///
/// `(u/t, v/t)` lies in `D_1`; pulling it back through `F` and `sym` gives the
/// unordered pair `{z, w}`. On the chart `x0 = 0` the pair is a double root.
/// Otherwise the order is fixed by `t (z - w) / (1 - zw) = 1` for the
/// normalization `x0 = 1`.
pub fn map_j_inv(p: &ProjPoint3, cfg: &ToleranceConfig) -> Result<BidiscPoint> {
    require_inside(membership_d2_1(p, cfg), "D_1^(2)")?;
    let [x0, t, u, v] = p.coords();
    let g = map_f_inv_extended(&D1Point::new(u / t, v / t)?, cfg)?;
    let norm = p.coords().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if x0.norm() <= cfg.boundary_band * norm {
        let z = g.s / 2.0;
        return Ok(BidiscPoint { z1: z, z2: z });
    }
    let t = t / x0;
    let [a, b] = sym_inverse(&g)?;
    let fit = |z: C64, w: C64| (t * (z - w) / (ONE - z * w) - ONE).norm();
    Ok(if fit(a, b) <= fit(b, a) {
        BidiscPoint { z1: a, z2: b }
    } else {
        BidiscPoint { z1: b, z2: a }
    })
}

/// `sym_omega1(u, v) = (i sqrt(1 - u^2 - v^2), v)`.
pub fn sym_omega1(u: C64, v: C64, cfg: &ToleranceConfig) -> Result<D1Point> {
    D1Point::new(I * sqrt_slit(ONE - u * u - v * v, cfg)?, v)
}

/// `(x0 : t : u : v) -> (u / t, v / t)`.
pub fn sym_d2_1(p: &ProjPoint3, cfg: &ToleranceConfig) -> Result<D1Point> {
    let x = p.coords();
    let norm = x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if x[1].norm() <= cfg.boundary_band * norm {
        return Err(Error::ZeroT);
    }
    D1Point::new(x[2] / x[1], x[3] / x[1])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Diagram {
    Omega1,
    D2_1,
}

impl Diagram {
    fn name(self) -> &'static str {
        match self {
            Diagram::Omega1 => "diagram-omega1",
            Diagram::D2_1 => "diagram-d2_1",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiagramReport {
    pub max_residual: f64,
    pub n_samples: usize,
    pub worst_point: BidiscPoint,
}

/// Relative distance in `D_1` between `F(sym(b))` and the route through the
/// other corner of the diagram.
pub fn diagram_residual(which: Diagram, b: &BidiscPoint, cfg: &ToleranceConfig) -> Result<f64> {
    let direct = map_f(&sym(b), cfg)?;
    let other = match which {
        Diagram::Omega1 => {
            let (u, v) = map_h(b);
            sym_omega1(u, v, cfg)?
        }
        Diagram::D2_1 => sym_d2_1(&map_j(b), cfg)?,
    };
    Ok(rel_diff(direct.z1, other.z1).max(rel_diff(direct.z2, other.z2)))
}

/// Largest diagram residual over `n` seeded bidisc samples. A sample where a
/// route fails counts as an infinite residual.
pub fn check_diagram(
    which: Diagram,
    n: usize,
    seed: u64,
    cfg: &ToleranceConfig,
) -> Result<DiagramReport> {
    if n == 0 {
        return Err(Error::InvalidParameter("need at least one sample".into()));
    }
    let key = derive_seed(seed, which.name());
    let (max_residual, _, worst_point) = (0..n as u64)
        .into_par_iter()
        .map(|i| {
            let b = uniform_bidisc(&mut rng_for(key, i));
            let r = diagram_residual(which, &b, cfg).unwrap_or(f64::INFINITY);
            (r, i, b)
        })
        .reduce_with(|x, y| {
            // larger residual wins; ties go to the lower index
            if y.0 > x.0 || (y.0 == x.0 && y.1 < x.1) {
                y
            } else {
                x
            }
        })
        .expect("n >= 1");
    Ok(DiagramReport {
        max_residual,
        n_samples: n,
        worst_point,
    })
}
