//! Isaev's model domains `D_1`, `D_s`, `D_{s,t}`, `D_c`, the bidisc copies
//! `Omega_1` and `D_1^(2)`, and the `SO(2,1)^0` action.
//!
//! With `Q = |1 + z1^2 - z2^2|` and `L = 1 + |z1|^2 - |z2|^2`, the domain `D_1`
//! is `{Q < L, Im(z1 (1 + conj(z2))) > 0}`; the level sets `Q = c L` are the
//! orbit hypersurfaces `eta_c`.

mod projective;
mod so21;

pub use projective::{membership_d2_1, ProjPoint3};
pub use so21::{so21_act, so21_generator, Generator, SO21Element};

use serde::{Deserialize, Serialize};

use crate::complex::{
    max_on_unit_circle, require_finite, slack, solve_quadratic, ToleranceConfig, Tri, C64, I,
    ONE,
};
use crate::error::{Error, Result};
use crate::symmetrized::Membership;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct D1Point {
    pub z1: C64,
    pub z2: C64,
}

impl D1Point {
    pub fn new(z1: C64, z2: C64) -> Result<Self> {
        require_finite(z1, "z1")?;
        require_finite(z2, "z2")?;
        Ok(Self { z1, z2 })
    }

    /// `|1 + z1^2 - z2^2|`
    pub fn q(&self) -> f64 {
        (ONE + self.z1 * self.z1 - self.z2 * self.z2).norm()
    }

    /// `1 + |z1|^2 - |z2|^2`
    pub fn l(&self) -> f64 {
        1.0 + self.z1.norm_sqr() - self.z2.norm_sqr()
    }

    /// `Im(z1 (1 + conj(z2)))`
    pub fn orientation(&self) -> f64 {
        (self.z1 * (ONE + self.z2.conj())).im
    }
}

/// Nine equivalent tests for `(u, v) = (z1, z2)` in `D_1`:
///
/// 1. the definition
/// 2. `|1 + u^2 - v^2| < 1 + |u|^2 - |v|^2` and `Im(u (1 + conj(v))) > 0`
/// 3. both roots of `(u + i) z^2 + 2 v z + (u - i)` lie in the disc
/// 4. `|Im v + i Im(conj(u) v)| < Im u`
/// 5. `|v| < |u + i|` and test 4
/// 6. `sup_{|a| <= 1} |(a (u - i) + v) / (u + i + a v)| < 1`
/// 7. `sup_{|a| <= 1} |(u - i + conj(a) v) / (u + i + a v)| < 1`
/// 8. `2 |Im v + i Im(conj(u) v)| + |1 + u^2 - v^2| < |u + i|^2 - |v|^2`
/// 9. `Im u > 0` and `v + b1 u + b2 = 0` for real `b1, b2` with `|b1 + i b2| < 1`
pub fn membership_d1(p: &D1Point, condition: u8, cfg: &ToleranceConfig) -> Result<Membership> {
    let (u, v) = (p.z1, p.z2);
    let margin = match condition {
        1 | 2 => definition(p),
        3 => match solve_quadratic(u + I, 2.0 * v, u - I) {
            Ok([r1, r2]) => 1.0 - r1.norm().max(r2.norm()),
            Err(_) => -1.0,
        },
        4 => slack(im_pair(u, v).norm(), u.im),
        5 => slack(v.norm(), (u + I).norm()).min(slack(im_pair(u, v).norm(), u.im)),
        6 => circle_sup(u, v, |a| (a * (u - I) + v) / (u + I + a * v)),
        7 => circle_sup(u, v, |a| (u - I + a.conj() * v) / (u + I + a * v)),
        8 => slack(
            2.0 * im_pair(u, v).norm() + p.q(),
            (u + I).norm_sqr() - v.norm_sqr(),
        ),
        9 => {
            let up = slack(0.0, u.im);
            if up <= 0.0 {
                up
            } else {
                let b1 = -v.im / u.im;
                let b2 = -v.re - b1 * u.re;
                up.min(slack(C64::new(b1, b2).norm(), 1.0))
            }
        }
        other => return Err(Error::InvalidCondition(other)),
    };
    Ok(Membership::from_margin(margin, cfg))
}

pub fn membership_d1_all(p: &D1Point, cfg: &ToleranceConfig) -> [Membership; 9] {
    std::array::from_fn(|k| membership_d1(p, k as u8 + 1, cfg).expect("valid condition"))
}

fn definition(p: &D1Point) -> f64 {
    slack(p.q(), p.l()).min(slack(0.0, p.orientation()))
}

/// `Im v + i Im(conj(u) v)`
fn im_pair(u: C64, v: C64) -> C64 {
    C64::new(v.im, (u.conj() * v).im)
}

/// The quotients in tests 6 and 7 have a pole in the closed disc exactly when
/// `|v| >= |u + i|`; otherwise their modulus peaks on the circle.
fn circle_sup(u: C64, v: C64, f: impl Fn(C64) -> C64) -> f64 {
    if u == -I {
        // every a != 0 is a pole
        return -1.0;
    }
    let pole = slack(v.norm(), (u + I).norm());
    if pole <= 0.0 {
        return pole;
    }
    slack(max_on_unit_circle(|a| f(a).norm()), 1.0)
}

/// Parameters of the model domains.
///
/// `Dst` with `t = inf` is `D_s` minus the complex curve `1 + z1^2 - z2^2 = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum IsaevParams {
    Ds { s: f64 },
    Dst { s: f64, t: f64 },
    Dc { c: f64 },
}

impl IsaevParams {
    pub fn ds(s: f64) -> Result<Self> {
        if !(s.is_finite() && s >= 1.0) {
            return Err(Error::InvalidParameter(format!("need 1 <= s < inf, got s = {s}")));
        }
        Ok(Self::Ds { s })
    }

    pub fn dst(s: f64, t: f64) -> Result<Self> {
        if !(s.is_finite() && s >= 1.0 && t > s) {
            return Err(Error::InvalidParameter(format!(
                "need 1 <= s < t <= inf, got s = {s}, t = {t}"
            )));
        }
        Ok(Self::Dst { s, t })
    }

    pub fn dc(c: f64) -> Result<Self> {
        if !(c.is_finite() && c > 1.0) {
            return Err(Error::InvalidParameter(format!("need c > 1, got c = {c}")));
        }
        Ok(Self::Dc { c })
    }
}

/// Membership in `D_s`, `D_{s,t}` or `D_c`; the margin is the smallest slack.
pub fn membership_isaev(p: &D1Point, params: IsaevParams, cfg: &ToleranceConfig) -> Membership {
    let (q, l) = (p.q(), p.l());
    let orient = slack(0.0, p.orientation());
    let margin = match params {
        IsaevParams::Ds { s } | IsaevParams::Dc { c: s } => slack(s * q, l).min(orient),
        IsaevParams::Dst { s, t } => {
            let upper = if t.is_infinite() {
                slack(0.0, q)
            } else {
                slack(l, t * q)
            };
            slack(s * q, l).min(upper).min(orient)
        }
    };
    Membership::from_margin(margin, cfg)
}

/// The `c in [0, 1)` with `p` on `eta_c`.
pub fn eta_index(p: &D1Point, cfg: &ToleranceConfig) -> Result<f64> {
    let m = membership_d1(p, 1, cfg)?;
    if m.tri != Tri::Inside {
        return Err(Error::OutsideDomain {
            domain: "D_1",
            tri: m.tri,
            margin: m.margin,
        });
    }
    Ok(p.q() / p.l())
}

/// `|u|^2 + |v|^2 - 1 < |u^2 + v^2 - 1|`.
pub fn membership_omega1(u: C64, v: C64, cfg: &ToleranceConfig) -> Membership {
    Membership::from_margin(
        slack(u.norm_sqr() + v.norm_sqr() - 1.0, (u * u + v * v - 1.0).norm()),
        cfg,
    )
}
