//! Levi form of the leaves `F_a = {|phi_{z1}(z2)| = a}` of the bidisc and
//! finite-difference witnesses for the derivatives behind it.
//!
//! The defining function is `g_a = |z1 - z2|^2 - a^2 |1 - z1 conj(z2)|^2`. On
//! `F_a` the complex tangent line is spanned by `v = (u, 1)` with
//! `u = -dg/dz2 / dg/dz1`, and `<B v, v> = 2 a^2 |u|` for the Levi matrix `B`.

use nalgebra::Matrix4;
use serde::{Deserialize, Serialize};

use crate::complex::{ToleranceConfig, C64, I, ONE};
use crate::disc::{mobius_distance, BidiscPoint};
use crate::error::{Error, Result};
use crate::symmetrized::LeafIndex;

/// Absolute on-leaf tolerance for [`levi_value`], scaled by `1 + a^2`.
pub const LEAF_TOL: f64 = 1e-9;

pub fn g_a(b: &BidiscPoint, a: f64) -> f64 {
    (b.z1 - b.z2).norm_sqr() - a * a * (ONE - b.z1 * b.z2.conj()).norm_sqr()
}

/// Wirtinger derivatives `(dg_a/dz1, dg_a/dz2)`.
pub fn grad_g_a(b: &BidiscPoint, a: f64) -> (C64, C64) {
    let (z1, z2) = (b.z1, b.z2);
    let a2 = a * a;
    let d = z1.conj() - z2.conj();
    (
        d + a2 * z2.conj() * (ONE - z1.conj() * z2),
        -d + a2 * z1.conj() * (ONE - z2.conj() * z1),
    )
}

/// `B[j][k] = d^2 g_a / (dz_k d conj(z_j))`; Hermitian.
pub fn levi_matrix(b: &BidiscPoint, a: f64) -> [[C64; 2]; 2] {
    let (z1, z2) = (b.z1, b.z2);
    let a2 = a * a;
    let off = -ONE + a2 * (ONE - z1.conj() * z2);
    [
        [C64::new(1.0 - a2 * z2.norm_sqr(), 0.0), off.conj()],
        [off, C64::new(1.0 - a2 * z1.norm_sqr(), 0.0)],
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LeviReport {
    pub point: BidiscPoint,
    pub leaf: LeafIndex,
    pub grad: (C64, C64),
    pub levi_matrix: [[C64; 2]; 2],
    /// First component `u` of the tangent vector `(u, 1)`.
    pub tangent: C64,
    pub levi_value: f64,
    pub closed_form_value: f64,
}

/// Levi form on the complex tangent line of `F_a` at a point of the leaf.
pub fn levi_value(b: &BidiscPoint, a: LeafIndex, cfg: &ToleranceConfig) -> Result<LeviReport> {
    let av = a.value();
    if av <= cfg.boundary_band {
        return Err(Error::DegenerateLeaf(av));
    }
    let g = g_a(b, av);
    if g.abs() > LEAF_TOL * (1.0 + av * av) {
        return Err(Error::OffLeaf(g.abs()));
    }
    let grad = grad_g_a(b, av);
    if grad.0.norm() <= cfg.boundary_band {
        return Err(Error::VanishingGradient);
    }
    let u = -grad.1 / grad.0;
    let m = levi_matrix(b, av);
    let value = m[0][0].re * u.norm_sqr() + m[0][1] * u.conj() + m[1][0] * u + m[1][1].re;
    Ok(LeviReport {
        point: *b,
        leaf: a,
        grad,
        levi_matrix: m,
        tangent: u,
        levi_value: value.re,
        closed_form_value: 2.0 * av * av * u.norm(),
    })
}

fn coords(b: &BidiscPoint) -> [f64; 4] {
    [b.z1.re, b.z1.im, b.z2.re, b.z2.im]
}

fn from_coords(x: [f64; 4]) -> BidiscPoint {
    BidiscPoint {
        z1: C64::new(x[0], x[1]),
        z2: C64::new(x[2], x[3]),
    }
}

fn shifted(b: &BidiscPoint, k: usize, h: f64) -> BidiscPoint {
    let mut x = coords(b);
    x[k] += h;
    from_coords(x)
}

/// Real 4x4 Jacobian determinant of `sym` at `b`, by central differences.
pub fn jacobian_sym_det(b: &BidiscPoint, cfg: &ToleranceConfig) -> f64 {
    let h = cfg.fd_step;
    let image = |p: &BidiscPoint| {
        let (s, q) = (p.z1 + p.z2, p.z1 * p.z2);
        [s.re, s.im, q.re, q.im]
    };
    let mut jac = Matrix4::zeros();
    for k in 0..4 {
        let up = image(&shifted(b, k, h));
        let down = image(&shifted(b, k, -h));
        for r in 0..4 {
            jac[(r, k)] = (up[r] - down[r]) / (2.0 * h);
        }
    }
    jac.determinant()
}

/// The exact value `|z1 - z2|^2` of [`jacobian_sym_det`].
pub fn jacobian_sym_formula(b: &BidiscPoint) -> f64 {
    (b.z1 - b.z2).norm_sqr()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SubmersionReport {
    /// `(df/dx1, df/dy1, df/dx2, df/dy2)` for `f = |phi_{z1}(z2)|`.
    pub partials: [f64; 4],
    pub grad_norm: f64,
    /// `|x1^2 + y1^2 + x2^2 + y2^2 - 2|`; a critical point would force it to 0.
    pub degenerate_indicator: f64,
}

/// Analytic differential of `f(z1, z2) = |z1 - z2| / |1 - conj(z1) z2|` off the
/// diagonal.
pub fn check_f_submersion(b: &BidiscPoint, cfg: &ToleranceConfig) -> Result<SubmersionReport> {
    let [x1, y1, x2, y2] = coords(b);
    let n2 = (x1 - x2).powi(2) + (y1 - y2).powi(2);
    if n2.sqrt() <= cfg.boundary_band {
        return Err(Error::DiagonalPoint);
    }
    let re = 1.0 - x1 * x2 - y1 * y2;
    let im = x1 * y2 - x2 * y1;
    let m2 = re * re + im * im;
    let f = (n2 / m2).sqrt();
    let partials = [
        f * ((x1 - x2) / n2 + (x2 * re - y2 * im) / m2),
        f * ((y1 - y2) / n2 + (y2 * re + x2 * im) / m2),
        f * (-(x1 - x2) / n2 + (x1 * re + y1 * im) / m2),
        f * (-(y1 - y2) / n2 + (y1 * re - x1 * im) / m2),
    ];
    Ok(SubmersionReport {
        partials,
        grad_norm: partials.iter().map(|d| d * d).sum::<f64>().sqrt(),
        degenerate_indicator: (x1 * x1 + y1 * y1 + x2 * x2 + y2 * y2 - 2.0).abs(),
    })
}

/// Central-difference gradient of `f`, the oracle for [`check_f_submersion`].
pub fn f_partials_fd(b: &BidiscPoint, cfg: &ToleranceConfig) -> [f64; 4] {
    let h = cfg.fd_step;
    std::array::from_fn(|k| {
        (mobius_distance(&shifted(b, k, h)) - mobius_distance(&shifted(b, k, -h))) / (2.0 * h)
    })
}

/// Central-difference Wirtinger gradient `((d_x - i d_y) / 2)` of a real function.
pub fn wirtinger_fd(b: &BidiscPoint, h: f64, f: impl Fn(&BidiscPoint) -> f64) -> (C64, C64) {
    let d = |k: usize| (f(&shifted(b, k, h)) - f(&shifted(b, k, -h))) / (2.0 * h);
    (
        C64::new(d(0), -d(1)) / 2.0,
        C64::new(d(2), -d(3)) / 2.0,
    )
}

/// Levi matrix by central differences of the analytic gradient:
/// `B[j][k] = (d_xj + i d_yj) (dg/dz_k) / 2`.
pub fn levi_matrix_fd(b: &BidiscPoint, a: f64, h: f64) -> [[C64; 2]; 2] {
    let grad = |p: &BidiscPoint| {
        let (g1, g2) = grad_g_a(p, a);
        [g1, g2]
    };
    let d = |k: usize| {
        let (p, m) = (grad(&shifted(b, k, h)), grad(&shifted(b, k, -h)));
        [(p[0] - m[0]) / (2.0 * h), (p[1] - m[1]) / (2.0 * h)]
    };
    std::array::from_fn(|j| {
        let (dx, dy) = (d(2 * j), d(2 * j + 1));
        std::array::from_fn(|k| (dx[k] + I * dy[k]) / 2.0)
    })
}

/// Maps checked for holomorphy. `Conj` is an antiholomorphic control.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HoloMap {
    /// `(s, p) -> F(s, p)`
    F,
    H,
    /// `J` in the affine chart dividing by `1 - zw`
    JChart,
    Sym,
    Conj,
}

fn eval(map: HoloMap, z: C64, w: C64) -> Vec<C64> {
    match map {
        HoloMap::F => {
            let den = ONE - w;
            vec![I * (ONE + w) / den, -I * z / den]
        }
        HoloMap::H => {
            let den = ONE - z * w;
            vec![(z - w) / den, -I * (z + w) / den]
        }
        HoloMap::JChart => {
            let den = ONE - z * w;
            vec![(z - w) / den, I * (ONE + z * w) / den, -I * (z + w) / den]
        }
        HoloMap::Sym => vec![z + w, z * w],
        HoloMap::Conj => vec![z.conj(), w.conj()],
    }
}

/// Largest `|d f_j / d conj(z_k)|` at `(z, w)`, by central differences.
pub fn cauchy_riemann_residual(map: HoloMap, z: C64, w: C64, cfg: &ToleranceConfig) -> f64 {
    let h = cfg.fd_step;
    let at = |dz: C64, dw: C64| eval(map, z + dz, w + dw);
    let mut worst: f64 = 0.0;
    for (ex, ey) in [
        (C64::new(h, 0.0), C64::new(0.0, 0.0)),
        (C64::new(0.0, 0.0), C64::new(h, 0.0)),
    ] {
        // perturb one variable along the real and imaginary axes
        let (xp, xm) = (at(ex, ey), at(-ex, -ey));
        let (yp, ym) = (at(I * ex, I * ey), at(-I * ex, -I * ey));
        for j in 0..xp.len() {
            let dx = (xp[j] - xm[j]) / (2.0 * h);
            let dy = (yp[j] - ym[j]) / (2.0 * h);
            worst = worst.max(((dx + I * dy) / 2.0).norm());
        }
    }
    worst
}
