use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{Outcome, Suite};
use crate::complex::{
    distance_to_cut, rel_diff, solve_quadratic, sqrt_slit, ToleranceConfig, Tri, C64,
};
use crate::disc::{mobius_distance, BidiscPoint, DiscAutomorphism};
use crate::isaev::{
    eta_index, membership_d1, membership_d1_all, membership_d2_1, membership_isaev,
    membership_omega1, so21_act, so21_generator, D1Point, Generator, IsaevParams, SO21Element,
};
use crate::levi::{
    check_f_submersion, cauchy_riemann_residual, f_partials_fd, g_a, grad_g_a,
    jacobian_sym_det, jacobian_sym_formula, levi_matrix, levi_matrix_fd, levi_value,
    wirtinger_fd, HoloMap,
};
use crate::maps::{
    diagram_residual, map_f, map_f_extended, map_f_inv, map_h, map_h_inv, map_j, map_j_inv,
    sym_omega1, Diagram,
};
use crate::sampling::{random_automorphism, uniform_bidisc, uniform_box, uniform_disc};
use crate::symmetrized::{
    apply_h, automorphisms_between, exhaustion_level, leaf_index, membership_g_all,
    membership_gc, orbit_path, recover_automorphism, reindex_a_to_b, reindex_b_to_a, sym,
    sym_inverse, GPoint, GcParams, LeafIndex,
};

type R = ChaCha8Rng;

const INF: f64 = f64::INFINITY;

pub(crate) static SUITES: &[Suite] = &[
    suite("membership-9way-G", 1_000_000, 0.0, nine_way_g),
    suite("membership-9way-D1", 1_000_000, 0.0, nine_way_d1),
    suite("q-invariance", 100_000, 1e-11, q_invariance),
    suite("diagram-omega1", 100_000, 1e-10, diagram_omega1),
    suite("diagram-d21", 100_000, 1e-10, diagram_d21),
    suite("levi-closed-form", 100_000, 1e-9, levi_closed_form),
    Suite {
        name: "levi-positivity",
        default_n: 100_000,
        tolerance: 0.0,
        strict: true,
        check: levi_positivity,
    },
    suite("jacobian-det", 10_000, 1e-5, jacobian_det),
    suite("submersion-f", 10_000, 1e-5, submersion_f),
    suite("so21-invariance", 100_000, 1e-10, so21_invariance),
    Suite {
        name: "slit-plane",
        default_n: 100_000,
        tolerance: -1e-12,
        strict: true,
        check: slit_plane,
    },
    suite("roundtrip-F", 100_000, 1e-11, roundtrip_f),
    suite("roundtrip-H", 100_000, 1e-10, roundtrip_h),
    suite("roundtrip-J", 100_000, 1e-10, roundtrip_j),
    suite("exhaustion-Gc", 10_000, 1e-9, exhaustion_gc),
    suite("reindex-ab", 10_000, 1e-14, reindex_ab),
    suite("orbit-path", 1_000, 1e-10, orbit_path_suite),
    suite("recover-automorphism", 10_000, 1e-9, recover),
    suite("cr-residuals", 1_000, 1e-7, cr_residuals),
    suite("quadratic-vieta", 100_000, 1e-10, quadratic_vieta),
    suite("sqrt-slit", 100_000, 1e-10, sqrt_slit_suite),
    suite("mobius-invariance", 100_000, 1e-10, mobius_invariance),
    suite("disc-group", 10_000, 1e-10, disc_group),
    suite("sym-roundtrip", 100_000, 1e-10, sym_roundtrip),
    suite("levi-fd", 10_000, 1e-5, levi_fd),
];

const fn suite(
    name: &'static str,
    default_n: usize,
    tolerance: f64,
    check: super::Check,
) -> Suite {
    Suite {
        name,
        default_n,
        tolerance,
        strict: false,
        check,
    }
}

fn skip_band(cfg: &ToleranceConfig) -> f64 {
    10.0 * cfg.boundary_band
}

fn near_boundary(margin: f64, cfg: &ToleranceConfig) -> bool {
    margin.abs() <= skip_band(cfg)
}

/// 0 if `ok`, otherwise an infinite violation.
fn require(ok: bool) -> f64 {
    if ok {
        0.0
    } else {
        INF
    }
}

fn bidisc_in<Rg: Rng>(rng: &mut Rg, radius: f64) -> BidiscPoint {
    BidiscPoint {
        z1: uniform_disc(rng, radius),
        z2: uniform_disc(rng, radius),
    }
}

fn d1_sample(b: &BidiscPoint, cfg: &ToleranceConfig) -> Option<D1Point> {
    map_f(&sym(b), cfg).ok()
}

fn pair_dist(a: &BidiscPoint, b: &BidiscPoint) -> f64 {
    (a.z1 - b.z1).norm().max((a.z2 - b.z2).norm())
}

fn unordered_dist(a: &BidiscPoint, b: &BidiscPoint) -> f64 {
    pair_dist(a, b).min(pair_dist(a, &b.swapped()))
}

fn g_dist(a: &GPoint, b: &GPoint) -> f64 {
    rel_diff(a.s, b.s).max(rel_diff(a.p, b.p))
}

fn d1_dist(a: &D1Point, b: &D1Point) -> f64 {
    rel_diff(a.z1, b.z1).max(rel_diff(a.z2, b.z2))
}

/// Largest pointwise gap between two automorphisms on fixed probe points.
fn map_gap(f: &DiscAutomorphism, g: &DiscAutomorphism) -> f64 {
    const PROBES: [(f64, f64); 6] = [
        (0.0, 0.0),
        (0.5, 0.0),
        (-0.3, 0.6),
        (0.1, -0.8),
        (-0.7, -0.2),
        (0.4, 0.4),
    ];
    PROBES
        .iter()
        .map(|&(x, y)| {
            let z = C64::new(x, y);
            match (f.apply(z), g.apply(z)) {
                (Ok(a), Ok(b)) => (a - b).norm(),
                _ => INF,
            }
        })
        .fold(0.0, f64::max)
}

fn leaf_sample(rng: &mut R, alpha_radius: f64) -> (f64, Option<BidiscPoint>) {
    let a = rng.gen_range(0.05..0.95);
    let phi = random_automorphism(rng, alpha_radius);
    let point = match (phi.apply(C64::new(a, 0.0)), phi.apply(C64::new(0.0, 0.0))) {
        (Ok(z1), Ok(z2)) => BidiscPoint::new(z1, z2).ok(),
        _ => None,
    };
    (a, point)
}

fn nine_way_g(rng: &mut R, _: u64, _: usize, cfg: &ToleranceConfig) -> Outcome {
    let (s, p) = uniform_box(rng, 3.0);
    let all = membership_g_all(s, p, cfg);
    if all.iter().any(|m| near_boundary(m.margin, cfg)) {
        return Outcome::Skipped;
    }
    Outcome::Checked(if all.iter().all(|m| m.tri == all[0].tri) { 0.0 } else { 1.0 })
}

fn nine_way_d1(rng: &mut R, i: u64, _: usize, cfg: &ToleranceConfig) -> Outcome {
    let (z1, z2) = if i.is_multiple_of(2) {
        uniform_box(rng, 3.0)
    } else {
        // pushforward of a bidisc point, jittered across the boundary
        let b = uniform_bidisc(rng);
        let (dz1, dz2) = uniform_box(rng, 1.0);
        match map_f_extended(&sym(&b), cfg) {
            Ok(d) => {
                let r = 0.05 * (1.0 + d.z1.norm() + d.z2.norm());
                (d.z1 + dz1 * r, d.z2 + dz2 * r)
            }
            Err(_) => return Outcome::Skipped,
        }
    };
    let Ok(d) = D1Point::new(z1, z2) else {
        return Outcome::Checked(INF);
    };
    let all = membership_d1_all(&d, cfg);
    if all.iter().any(|m| near_boundary(m.margin, cfg)) {
        return Outcome::Skipped;
    }
    let agree = all.iter().all(|m| m.tri == all[0].tri);
    let mut v = if agree { 0.0 } else { 1.0 };
    if all[0].tri == Tri::Inside {
        // D_1 lies in the half-space H and contains the slice {(z1, 0)}
        let in_h = z1.im > 0.0 && !(z2.im == 0.0 && z2.re.abs() >= 1.0);
        let slice = D1Point::new(z1, C64::new(0.0, 0.0))
            .and_then(|q| membership_d1(&q, 1, cfg))
            .map(|m| m.tri != Tri::Outside)
            .unwrap_or(false);
        v += require(in_h && slice);
    }
    Outcome::Checked(v)
}

fn q_invariance(rng: &mut R, i: u64, _: usize, cfg: &ToleranceConfig) -> Outcome {
    // larger |alpha| pushes images toward the distinguished boundary, where
    // rounding (s, p) to f64 alone moves q by more than the tolerance
    let phi = random_automorphism(rng, 0.5);
    if i.is_multiple_of(10) {
        // the royal variety is the leaf q = 0; measured by the discriminant
        let g = GPoint::royal(uniform_disc(rng, 1.0));
        return Outcome::Checked(match apply_h(&phi, &g) {
            Ok(h) => h.discriminant().norm() / (1.0 + h.s.norm_sqr()),
            Err(_) => INF,
        });
    }
    let g = sym(&uniform_bidisc(rng));
    let Ok(before) = leaf_index(&g, cfg) else {
        return Outcome::Skipped;
    };
    Outcome::Checked(
        match apply_h(&phi, &g).and_then(|h| leaf_index(&h, cfg)) {
            Ok(after) => (after.value() - before.value()).abs(),
            Err(_) => INF,
        },
    )
}

fn diagram(which: Diagram, rng: &mut R, cfg: &ToleranceConfig) -> Outcome {
    let b = uniform_bidisc(rng);
    Outcome::Checked(diagram_residual(which, &b, cfg).unwrap_or(INF))
}

fn diagram_omega1(rng: &mut R, _: u64, _: usize, cfg: &ToleranceConfig) -> Outcome {
    diagram(Diagram::Omega1, rng, cfg)
}

fn diagram_d21(rng: &mut R, _: u64, _: usize, cfg: &ToleranceConfig) -> Outcome {
    diagram(Diagram::D2_1, rng, cfg)
}

fn levi_closed_form(rng: &mut R, _: u64, _: usize, cfg: &ToleranceConfig) -> Outcome {
    let (a, point) = leaf_sample(rng, 0.95);
    let report = point.ok_or(()).and_then(|b| {
        let leaf = LeafIndex::new(a).map_err(|_| ())?;
        levi_value(&b, leaf, cfg).map_err(|_| ())
    });
    Outcome::Checked(match report {
        Ok(r) => (r.levi_value - r.closed_form_value).abs() / (1.0 + r.levi_value.abs()),
        Err(_) => INF,
    })
}

fn levi_positivity(rng: &mut R, _: u64, _: usize, cfg: &ToleranceConfig) -> Outcome {
    let (a, point) = leaf_sample(rng, 0.95);
    let Some(b) = point else {
        return Outcome::Checked(INF);
    };
    let Ok(leaf) = LeafIndex::new(a) else {
        return Outcome::Checked(INF);
    };
    let (Ok(r), Ok(sw)) = (levi_value(&b, leaf, cfg), levi_value(&b.swapped(), leaf, cfg)) else {
        return Outcome::Checked(INF);
    };
    // swapping the coordinates rescales the tangent vector by 1/u
    let expected = r.levi_value / r.tangent.norm_sqr();
    let consistent =
        sw.levi_value > 0.0 && (sw.levi_value - expected).abs() <= 1e-9 * (1.0 + sw.levi_value);
    Outcome::Checked((-r.levi_value).max(-sw.levi_value) + require(consistent))
}

fn jacobian_det(rng: &mut R, _: u64, _: usize, cfg: &ToleranceConfig) -> Outcome {
    let b = uniform_bidisc(rng);
    let want = jacobian_sym_formula(&b);
    if want <= 1e-8 {
        return Outcome::Skipped;
    }
    Outcome::Checked((jacobian_sym_det(&b, cfg) - want).abs() / want)
}

fn submersion_f(rng: &mut R, _: u64, _: usize, cfg: &ToleranceConfig) -> Outcome {
    let b = uniform_bidisc(rng);
    if (b.z1 - b.z2).norm() < 1e-4 {
        return Outcome::Skipped;
    }
    let Ok(r) = check_f_submersion(&b, cfg) else {
        return Outcome::Checked(INF);
    };
    let fd = f_partials_fd(&b, cfg);
    let err = (0..4)
        .map(|k| (r.partials[k] - fd[k]).abs())
        .fold(0.0, f64::max)
        / r.grad_norm;
    let ok = r.grad_norm > 0.0 && r.degenerate_indicator > cfg.boundary_band;
    Outcome::Checked(err + require(ok))
}

fn so21_invariance(rng: &mut R, _: u64, _: usize, cfg: &ToleranceConfig) -> Outcome {
    let b = uniform_bidisc(rng);
    let mut g = SO21Element::identity();
    for _ in 0..2 {
        for kind in [Generator::Rot01, Generator::Boost02, Generator::Boost12] {
            let t = rng.gen_range(-1.0..1.0);
            g = g.mul(&so21_generator(kind, t).expect("finite parameter"));
        }
    }
    let Some(d) = d1_sample(&b, cfg) else {
        return Outcome::Skipped;
    };
    let Ok(before) = eta_index(&d, cfg) else {
        return Outcome::Skipped;
    };
    let moved = so21_act(&g, d.z1, d.z2, cfg).and_then(|(x, y)| D1Point::new(x, y));
    let after = moved.and_then(|m| {
        let inside = membership_d1(&m, 1, cfg)?.tri == Tri::Inside;
        Ok((inside, eta_index(&m, cfg)?))
    });
    Outcome::Checked(match after {
        Ok((true, eta)) => (eta - before).abs() + require(g.eta_residual() < 1e-12),
        _ => INF,
    })
}

fn slit_plane(rng: &mut R, _: u64, _: usize, cfg: &ToleranceConfig) -> Outcome {
    let (u, v) = map_h(&uniform_bidisc(rng));
    let m = membership_omega1(u, v, cfg);
    if m.tri != Tri::Inside {
        return Outcome::Skipped;
    }
    Outcome::Checked(-distance_to_cut(C64::new(1.0, 0.0) - u * u - v * v))
}

fn roundtrip_f(rng: &mut R, _: u64, _: usize, cfg: &ToleranceConfig) -> Outcome {
    let g = sym(&uniform_bidisc(rng));
    let exterior = loop {
        let (s, p) = uniform_box(rng, 3.0);
        if p.norm() < 1.0 - 1e-6 {
            break GPoint { s, p };
        }
    };
    let forward = map_f(&g, cfg).and_then(|d| {
        let m = membership_d1(&d, 1, cfg)?;
        let back = map_f_inv(&d, cfg)?;
        let again = map_f(&back, cfg)?;
        Ok((m, g_dist(&back, &g).max(d1_dist(&again, &d))))
    });
    let mut v = match forward {
        Ok((m, res)) if m.tri == Tri::Inside && m.margin > 0.0 => res,
        _ => INF,
    };
    let mg = exterior.membership(cfg);
    let Ok(d) = map_f_extended(&exterior, cfg) else {
        return Outcome::Checked(INF);
    };
    let Ok(md) = membership_d1(&d, 1, cfg) else {
        return Outcome::Checked(INF);
    };
    if near_boundary(mg.margin, cfg) || near_boundary(md.margin, cfg) {
        return Outcome::Skipped;
    }
    v += require((mg.tri == Tri::Inside) == (md.tri == Tri::Inside));
    Outcome::Checked(v)
}

fn roundtrip_h(rng: &mut R, i: u64, _: usize, cfg: &ToleranceConfig) -> Outcome {
    let b = if i.is_multiple_of(10) {
        // diagonal points map to u = 0, where the two preimages coincide
        let z = uniform_disc(rng, 1.0);
        BidiscPoint { z1: z, z2: z }
    } else {
        uniform_bidisc(rng)
    };
    let (u, v) = map_h(&b);
    let m = membership_omega1(u, v, cfg);
    if m.tri == Tri::Boundary {
        return Outcome::Skipped;
    }
    if m.tri == Tri::Outside {
        return Outcome::Checked(INF);
    }
    let (Ok(back), Ok(other)) = (map_h_inv(u, v, cfg), map_h_inv(-u, v, cfg)) else {
        return Outcome::Checked(INF);
    };
    // (u, v) and (-u, v) have the same symmetrization and swapped preimages
    let same_sym = match (sym_omega1(u, v, cfg), sym_omega1(-u, v, cfg)) {
        (Ok(x), Ok(y)) => x == y,
        _ => false,
    };
    Outcome::Checked(pair_dist(&back, &b).max(pair_dist(&other, &b.swapped())) + require(same_sym))
}

fn roundtrip_j(rng: &mut R, i: u64, _: usize, cfg: &ToleranceConfig) -> Outcome {
    let b = if i.is_multiple_of(10) {
        let z = uniform_disc(rng, 1.0);
        BidiscPoint { z1: z, z2: z }
    } else {
        uniform_bidisc(rng)
    };
    let p = map_j(&b);
    let m = membership_d2_1(&p, cfg);
    if m.tri == Tri::Boundary {
        return Outcome::Skipped;
    }
    if m.tri == Tri::Outside {
        return Outcome::Checked(INF);
    }
    Outcome::Checked(match map_j_inv(&p, cfg) {
        Ok(back) => pair_dist(&back, &b).max(p.distance(&map_j(&back), cfg)),
        Err(_) => INF,
    })
}

/// Largest `c` with `d` in `D_c`, by doubling and bisection.
fn bisect_level(d: &D1Point, cfg: &ToleranceConfig) -> f64 {
    let inside = |c: f64| {
        IsaevParams::dc(c)
            .map(|p| membership_isaev(d, p, cfg).tri == Tri::Inside)
            .unwrap_or(false)
    };
    let (mut lo, mut hi) = (1.0, 2.0);
    while inside(hi) {
        lo = hi;
        hi *= 2.0;
        if hi > 1e15 {
            return INF;
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if inside(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

fn exhaustion_gc(rng: &mut R, _: u64, _: usize, cfg: &ToleranceConfig) -> Outcome {
    let g = sym(&bidisc_in(rng, 0.95));
    let Ok(d) = map_f(&g, cfg) else {
        return Outcome::Skipped;
    };
    let (l, q) = (d.l(), d.q());
    if q == 0.0 {
        return Outcome::Skipped;
    }
    let level = l / q;
    let Some(level_g) = exhaustion_level(g.s, g.p) else {
        return Outcome::Checked(INF);
    };
    let found = bisect_level(&d, cfg);
    let mut v = ((found - level) / level).abs().max(((level_g - level) / level).abs());

    // G_c and D_c correspond under F
    let c = 1.0 + rng.gen_range(0.0..2.0) * (level - 1.0);
    if let (Ok(gc), Ok(dc)) = (GcParams::new(c), IsaevParams::dc(c)) {
        let (mg, md) = (membership_gc(g.s, g.p, gc, cfg), membership_isaev(&d, dc, cfg));
        if !near_boundary(mg.margin, cfg) && !near_boundary(md.margin, cfg) {
            v += require(mg.tri == md.tri);
        }
    }
    // nesting: D_s shrinks as s grows
    let s = 1.0 + rng.gen_range(0.0..1.5) * (level - 1.0).min(1e6);
    let s_lower = 1.0 + rng.gen_range(0.0..1.0) * (s - 1.0);
    if let (Ok(big), Ok(small)) = (IsaevParams::ds(s), IsaevParams::ds(s_lower)) {
        let (mb, ms) = (membership_isaev(&d, big, cfg), membership_isaev(&d, small, cfg));
        if mb.tri == Tri::Inside && !near_boundary(ms.margin, cfg) {
            v += require(ms.tri == Tri::Inside);
        }
    }
    Outcome::Checked(v)
}

fn reindex_ab(_: &mut R, i: u64, n: usize, _: &ToleranceConfig) -> Outcome {
    let a = i as f64 / n as f64;
    let Ok(leaf) = LeafIndex::new(a) else {
        return Outcome::Checked(INF);
    };
    let b = reindex_a_to_b(leaf);
    let mut v = match reindex_b_to_a(b) {
        Ok(back) => (back.value() - a).abs(),
        Err(_) => INF,
    };
    if i.is_multiple_of(10) {
        let image = DiscAutomorphism::blaschke_at(C64::new(b, 0.0))
            .and_then(|phi| apply_h(&phi, &GPoint { s: C64::new(a, 0.0), p: C64::new(0.0, 0.0) }));
        let want = GPoint { s: C64::new(0.0, 0.0), p: C64::new(-b * b, 0.0) };
        v += require(image.map(|h| g_dist(&h, &want) <= 1e-11).unwrap_or(false));
    }
    Outcome::Checked(v)
}

fn orbit_path_suite(rng: &mut R, i: u64, _: usize, cfg: &ToleranceConfig) -> Outcome {
    const STEPS: usize = 32;
    if i.is_multiple_of(10) {
        let target = GPoint::royal(uniform_disc(rng, 0.95));
        let Ok(path) = orbit_path(LeafIndex::new(0.0).expect("0 is a leaf"), &target, STEPS, cfg)
        else {
            return Outcome::Checked(INF);
        };
        let worst = path
            .iter()
            .map(|w| w.discriminant().norm() / (1.0 + w.s.norm_sqr()))
            .fold(0.0, f64::max);
        let end = path.last().map(|w| g_dist(w, &target) <= cfg.eq_tol).unwrap_or(false);
        return Outcome::Checked(worst + require(end));
    }
    let a = rng.gen_range(0.05..0.95);
    let phi = random_automorphism(rng, 0.9);
    let start = GPoint { s: C64::new(a, 0.0), p: C64::new(0.0, 0.0) };
    let Ok(target) = apply_h(&phi, &start) else {
        return Outcome::Checked(INF);
    };
    let Ok(path) = orbit_path(LeafIndex::new(a).expect("a in range"), &target, STEPS, cfg) else {
        return Outcome::Checked(INF);
    };
    let worst = path
        .iter()
        .map(|w| leaf_index(w, cfg).map(|q| (q.value() - a).abs()).unwrap_or(INF))
        .fold(0.0, f64::max);
    let ends = path.len() == STEPS
        && g_dist(&path[0], &start) <= cfg.eq_tol
        && g_dist(&path[STEPS - 1], &target) <= cfg.eq_tol;
    Outcome::Checked(worst + require(ends))
}

fn recover(rng: &mut R, _: u64, _: usize, cfg: &ToleranceConfig) -> Outcome {
    let a = rng.gen_range(0.05..0.95);
    let phi = random_automorphism(rng, 0.9);
    let psi = random_automorphism(rng, 0.9);
    let leaf = LeafIndex::new(a).expect("a in range");
    let lift = match (phi.apply(C64::new(a, 0.0)), phi.apply(C64::new(0.0, 0.0))) {
        (Ok(z1), Ok(z2)) => BidiscPoint { z1, z2 },
        _ => return Outcome::Checked(INF),
    };
    let mut v = match recover_automorphism(leaf, &lift, cfg) {
        Ok(found) => map_gap(&found, &phi),
        Err(_) => INF,
    };
    // exactly two automorphisms carry one leaf point to another
    let start = GPoint { s: C64::new(a, 0.0), p: C64::new(0.0, 0.0) };
    let ends = apply_h(&phi, &start).and_then(|x| Ok((x, apply_h(&psi, &start)?)));
    let ok = ends
        .and_then(|(from, to)| {
            let pair = automorphisms_between(&from, &to, cfg)?;
            let mut ok = map_gap(&pair[0], &pair[1]) > 1e-6;
            for f in &pair {
                ok &= g_dist(&apply_h(f, &from)?, &to) <= 1e-9;
            }
            Ok(ok)
        })
        .unwrap_or(false);
    v += require(ok);
    Outcome::Checked(v)
}

fn cr_residuals(rng: &mut R, _: u64, _: usize, cfg: &ToleranceConfig) -> Outcome {
    let b = bidisc_in(rng, 0.9);
    let g = sym(&bidisc_in(rng, 0.9));
    let worst = [
        cauchy_riemann_residual(HoloMap::F, g.s, g.p, cfg),
        cauchy_riemann_residual(HoloMap::H, b.z1, b.z2, cfg),
        cauchy_riemann_residual(HoloMap::JChart, b.z1, b.z2, cfg),
        cauchy_riemann_residual(HoloMap::Sym, b.z1, b.z2, cfg),
    ]
    .into_iter()
    .fold(0.0, f64::max);
    let control = cauchy_riemann_residual(HoloMap::Conj, b.z1, b.z2, cfg);
    Outcome::Checked(worst + require(control > 0.5))
}

fn quadratic_vieta(rng: &mut R, _: u64, _: usize, _: &ToleranceConfig) -> Outcome {
    let a = loop {
        let (a, _) = uniform_box(rng, 2.0);
        if a.norm() >= 0.1 {
            break a;
        }
    };
    let (b, c) = uniform_box(rng, 2.0);
    Outcome::Checked(match solve_quadratic(a, b, c) {
        Ok([r1, r2]) => ((a * (r1 + r2) + b).norm() / (1.0 + b.norm()))
            .max((a * r1 * r2 - c).norm() / (1.0 + c.norm())),
        Err(_) => INF,
    })
}

fn sqrt_slit_suite(rng: &mut R, _: u64, _: usize, cfg: &ToleranceConfig) -> Outcome {
    let w = loop {
        let (w, _) = uniform_box(rng, 5.0);
        if w.re > -0.99 * w.norm() {
            break w;
        }
    };
    Outcome::Checked(match sqrt_slit(w, cfg) {
        Ok(r) => (r * r - w).norm() / (1.0 + w.norm()) + require(r.re > 0.0),
        Err(_) => INF,
    })
}

fn mobius_invariance(rng: &mut R, _: u64, _: usize, _: &ToleranceConfig) -> Outcome {
    let phi = random_automorphism(rng, 0.9);
    let b = uniform_bidisc(rng);
    Outcome::Checked(match (phi.apply(b.z1), phi.apply(b.z2)) {
        (Ok(x), Ok(y)) => {
            let moved = BidiscPoint { z1: x, z2: y };
            (mobius_distance(&moved) - mobius_distance(&b)).abs()
                + require(x.norm() < 1.0 && y.norm() < 1.0)
        }
        _ => INF,
    })
}

fn disc_group(rng: &mut R, _: u64, _: usize, _: &ToleranceConfig) -> Outcome {
    let f = random_automorphism(rng, 0.9);
    let g = random_automorphism(rng, 0.9);
    let h = random_automorphism(rng, 0.9);
    let id = DiscAutomorphism::identity();
    let left = f.compose(&g).compose(&h);
    let right = f.compose(&g.compose(&h));
    let v = map_gap(&left, &right)
        .max(map_gap(&f.compose(&id), &f))
        .max(map_gap(&id.compose(&f), &f))
        .max(map_gap(&f.compose(&f.invert()), &id))
        .max(map_gap(&f.invert().compose(&f), &id));
    Outcome::Checked(v)
}

fn sym_roundtrip(rng: &mut R, _: u64, _: usize, _: &ToleranceConfig) -> Outcome {
    let b = uniform_bidisc(rng);
    let g = sym(&b);
    Outcome::Checked(match sym_inverse(&g) {
        Ok([z1, z2]) => {
            let roots = BidiscPoint { z1, z2 };
            unordered_dist(&roots, &b).max(g_dist(&sym(&roots), &g))
        }
        Err(_) => INF,
    })
}

fn levi_fd(rng: &mut R, _: u64, _: usize, cfg: &ToleranceConfig) -> Outcome {
    let b = bidisc_in(rng, 0.95);
    let a = rng.gen_range(0.05..0.95);
    let h = cfg.fd_step;
    let rel = |x: C64, y: C64| (x - y).norm() / (1.0 + x.norm());
    let (g1, g2) = grad_g_a(&b, a);
    let (f1, f2) = wirtinger_fd(&b, h, |p| g_a(p, a));
    let exact = levi_matrix(&b, a);
    let fd = levi_matrix_fd(&b, a, h);
    let mut v = rel(g1, f1).max(rel(g2, f2));
    for j in 0..2 {
        for k in 0..2 {
            v = v.max(rel(exact[j][k], fd[j][k]));
        }
    }
    Outcome::Checked(v)
}
