use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use symbidisc::complex::{margin_to_tri, solve_quadratic, sqrt_slit, ToleranceConfig, Tri};
use symbidisc::disc::{mobius_distance, BidiscPoint, DiscAutomorphism};
use symbidisc::isaev::{
    eta_index, membership_d1, membership_d1_all, membership_d2_1, membership_isaev,
    membership_omega1, so21_act, so21_generator, D1Point, Generator, IsaevParams, ProjPoint3,
    SO21Element,
};
use symbidisc::levi::{
    cauchy_riemann_residual, check_f_submersion, g_a, grad_g_a, jacobian_sym_det, levi_matrix,
    levi_value, HoloMap,
};
use symbidisc::maps::{
    check_diagram, map_f, map_f_inv, map_h, map_h_inv, map_j, map_j_inv, sym_d2_1, sym_omega1,
    Diagram,
};
use symbidisc::symmetrized::{
    apply_h, leaf_index, membership_g, membership_g_all, membership_gc, orbit_path,
    recover_automorphism, reindex_a_to_b, reindex_b_to_a, sample_g, sym, sym_inverse, GPoint,
    GcParams, LeafIndex,
};

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn r(x: f64) -> C64 {
    C64::new(x, 0.0)
}

const I: C64 = C64 { re: 0.0, im: 1.0 };

fn cfg() -> ToleranceConfig {
    ToleranceConfig::default()
}

fn bp(z1: C64, z2: C64) -> BidiscPoint {
    BidiscPoint::new(z1, z2).unwrap()
}

fn gp(s: C64, p: C64) -> GPoint {
    GPoint::new(s, p).unwrap()
}

fn near(x: C64, y: C64, tol: f64) -> bool {
    (x - y).norm() <= tol
}

fn same_pair(a: [C64; 2], b: [C64; 2], tol: f64) -> bool {
    (near(a[0], b[0], tol) && near(a[1], b[1], tol)) || (near(a[0], b[1], tol) && near(a[1], b[0], tol))
}

fn proj(x: [C64; 4]) -> ProjPoint3 {
    ProjPoint3::new(x).unwrap()
}

/// Sample points on a circle of radius 0.9 and the origin.
fn probes() -> Vec<C64> {
    let mut v: Vec<C64> = (0..99).map(|k| C64::from_polar(0.9 * (k as f64 / 99.0), 0.7 * k as f64)).collect();
    v.push(r(0.0));
    v
}

#[test]
fn quadratic_and_sqrt() {
    assert!(same_pair(solve_quadratic(r(1.0), r(-1.0), r(0.25)).unwrap(), [r(0.5); 2], 1e-8));
    assert!(same_pair(solve_quadratic(r(1.0), r(0.0), r(1.0)).unwrap(), [I, -I], 1e-15));
    let z = c(0.3, 0.4);
    let roots = solve_quadratic(r(1.0), -(z + 0.1), z * 0.1).unwrap();
    assert!(same_pair(roots, [z, r(0.1)], 1e-12));
    assert!(near(roots[0] + roots[1], z + 0.1, 1e-12) && near(roots[0] * roots[1], z * 0.1, 1e-12));

    assert_eq!(sqrt_slit(r(1.0), &cfg()).unwrap(), r(1.0));
    assert!(sqrt_slit(r(-1.0), &cfg()).is_err());
    assert!(near(sqrt_slit(r(0.36), &cfg()).unwrap(), r(0.6), 1e-15));
}

#[test]
fn tri_classification() {
    assert_eq!(margin_to_tri(0.5, &cfg()), Tri::Inside);
    assert_eq!(margin_to_tri(-0.5, &cfg()), Tri::Outside);
    assert_eq!(margin_to_tri(1e-15, &cfg()), Tri::Boundary);
    assert!(ToleranceConfig::new(1e-12, 1e-10, 1e-6).is_err());
}

#[test]
fn disc_automorphisms() {
    let id = DiscAutomorphism::identity();
    assert_eq!(id.apply(c(0.3, 0.1)).unwrap(), c(0.3, 0.1));
    assert!(near(DiscAutomorphism::rotation(PI).apply(r(0.5)).unwrap(), r(-0.5), 1e-15));
    let half = DiscAutomorphism::new(0.0, r(0.5)).unwrap();
    assert!(near(half.apply(r(0.5)).unwrap(), r(0.0), 1e-15));

    let g = DiscAutomorphism::new(1.0, c(0.2, -0.3)).unwrap();
    let flip = DiscAutomorphism::new(PI, r(0.5)).unwrap();
    let twice = flip.compose(&flip);
    let inv = DiscAutomorphism::new(0.0, c(0.3, 0.2)).unwrap().invert();
    let phi = DiscAutomorphism::new(0.0, c(0.3, 0.2)).unwrap();
    for z in probes() {
        assert!(near(id.compose(&g).apply(z).unwrap(), g.apply(z).unwrap(), 1e-14));
        // z -> (a - z)/(1 - conj(a) z) is an involution
        assert!(near(twice.apply(z).unwrap(), z, 1e-14));
        assert!(near(inv.apply(phi.apply(z).unwrap()).unwrap(), z, 1e-14));
    }
    // with theta = 0 the square is not the identity
    assert!(near(half.compose(&half).apply(r(0.0)).unwrap(), r(-0.8), 1e-15));
    let rot = DiscAutomorphism::rotation(0.4).compose(&DiscAutomorphism::rotation(0.5));
    assert!(near(rot.apply(r(0.5)).unwrap(), C64::from_polar(0.5, 0.9), 1e-15));
    assert!(near(DiscAutomorphism::rotation(0.7).invert().apply(r(0.5)).unwrap(), C64::from_polar(0.5, -0.7), 1e-15));
    assert!(near(id.invert().apply(c(0.1, 0.2)).unwrap(), c(0.1, 0.2), 1e-15));

    assert!((mobius_distance(&bp(r(0.5), r(0.0))) - 0.5).abs() < 1e-15);
    assert_eq!(mobius_distance(&bp(c(0.2, 0.3), c(0.2, 0.3))), 0.0);
    assert!((mobius_distance(&bp(r(0.5), r(-0.5))) - 0.8).abs() < 1e-15);
}

#[test]
fn symmetrization() {
    let s = sym(&bp(r(0.5), r(-0.5)));
    assert!(near(s.s, r(0.0), 1e-15) && near(s.p, r(-0.25), 1e-15));
    let s = sym(&bp(c(0.3, 0.4), r(0.1)));
    assert!(near(s.s, c(0.4, 0.4), 1e-15) && near(s.p, c(0.03, 0.04), 1e-15));

    assert!(same_pair(sym_inverse(&gp(r(0.0), r(0.0))).unwrap(), [r(0.0); 2], 1e-15));
    assert!(same_pair(sym_inverse(&gp(r(1.0), r(0.25))).unwrap(), [r(0.5); 2], 1e-7));
    let roots = sym_inverse(&gp(r(0.0), r(-0.25))).unwrap();
    assert!(same_pair(roots, [r(0.5), r(-0.5)], 1e-15));
    assert!(roots.iter().all(|z| z.norm() < 1.0));
}

#[test]
fn membership_in_g() {
    let m = membership_g(r(0.0), r(0.0), 2, &cfg()).unwrap();
    assert_eq!((m.tri, m.margin), (Tri::Inside, 1.0));
    assert_eq!(membership_g(r(2.0), r(1.0), 4, &cfg()).unwrap().tri, Tri::Boundary);
    assert!(membership_g_all(c(0.4, 0.4), c(0.03, 0.04), &cfg()).iter().all(|m| m.tri == Tri::Inside));
    assert!(membership_g(r(0.0), r(0.0), 0, &cfg()).is_err());

    let c2 = GcParams::new(2.0).unwrap();
    assert_eq!(membership_gc(r(0.0), r(0.0), c2, &cfg()).tri, Tri::Inside);
    let g = sym(&bp(r(0.9), r(-0.9)));
    assert_eq!(membership_gc(g.s, g.p, GcParams::new(1.0001).unwrap(), &cfg()).tri, Tri::Inside);
    assert_eq!(membership_gc(g.s, g.p, GcParams::new(10.0).unwrap(), &cfg()).tri, Tri::Outside);
}

#[test]
fn automorphism_action_and_leaves() {
    let g = gp(c(0.3, 0.2), c(-0.1, 0.05));
    let same = apply_h(&DiscAutomorphism::identity(), &g).unwrap();
    assert!(near(same.s, g.s, 1e-15) && near(same.p, g.p, 1e-15));

    let (z1, z2) = (c(0.3, -0.2), c(-0.4, 0.1));
    let moved = apply_h(&DiscAutomorphism::blaschke_at(z1).unwrap(), &sym(&bp(z1, z2))).unwrap();
    assert!(moved.p.norm() < 1e-12);
    assert!((moved.s.norm() - mobius_distance(&bp(z1, z2))).abs() < 1e-12);

    let theta = 0.8;
    let rotated = apply_h(&DiscAutomorphism::rotation(theta), &gp(r(0.0), c(0.2, 0.1))).unwrap();
    assert!(near(rotated.s, r(0.0), 1e-15));
    assert!(near(rotated.p, C64::from_polar(1.0, 2.0 * theta) * c(0.2, 0.1), 1e-14));

    assert_eq!(leaf_index(&gp(r(0.0), r(0.0)), &cfg()).unwrap().value(), 0.0);
    assert!((leaf_index(&gp(r(0.5), r(0.0)), &cfg()).unwrap().value() - 0.5).abs() < 1e-15);
    assert!((leaf_index(&gp(r(0.0), r(-0.25)), &cfg()).unwrap().value() - 0.8).abs() < 1e-15);

    assert_eq!(reindex_a_to_b(LeafIndex::new(0.0).unwrap()), 0.0);
    assert!((reindex_a_to_b(LeafIndex::new(0.6).unwrap()) - 1.0 / 3.0).abs() < 1e-15);
    for k in 0..10_000 {
        let a = k as f64 / 10_000.0;
        let back = reindex_b_to_a(reindex_a_to_b(LeafIndex::new(a).unwrap())).unwrap().value();
        assert!((back - a).abs() < 1e-14);
    }
}

#[test]
fn orbit_paths_and_recovery() {
    let a = LeafIndex::new(0.5).unwrap();
    let base = gp(r(0.5), r(0.0));
    let path = orbit_path(a, &base, 8, &cfg()).unwrap();
    assert!(path.iter().all(|g| near(g.s, base.s, 1e-12) && near(g.p, base.p, 1e-12)));

    let target = apply_h(&DiscAutomorphism::rotation(PI / 3.0), &base).unwrap();
    let path = orbit_path(a, &target, 16, &cfg()).unwrap();
    assert_eq!(path.len(), 16);
    for g in &path {
        assert!((leaf_index(g, &cfg()).unwrap().value() - 0.5).abs() < 1e-10);
    }
    let end = path.last().unwrap();
    assert!(near(end.s, target.s, 1e-10) && near(end.p, target.p, 1e-10));

    let id = recover_automorphism(a, &bp(r(0.5), r(0.0)), &cfg()).unwrap();
    let rot = recover_automorphism(a, &bp(r(-0.5), r(0.0)), &cfg()).unwrap();
    let phi = DiscAutomorphism::new(2.1, c(-0.3, 0.45)).unwrap();
    let lift = bp(phi.apply(r(0.5)).unwrap(), phi.apply(r(0.0)).unwrap());
    let found = recover_automorphism(a, &lift, &cfg()).unwrap();
    for z in probes() {
        assert!(near(id.apply(z).unwrap(), z, 1e-12));
        assert!(near(rot.apply(z).unwrap(), -z, 1e-12));
        assert!(near(found.apply(z).unwrap(), phi.apply(z).unwrap(), 1e-10));
    }
}

#[test]
fn sampling_g() {
    assert!(sample_g(0, 1).is_empty());
    let pts = sample_g(100_000, 5);
    for g in &pts {
        assert_eq!(membership_g(g.s, g.p, 2, &cfg()).unwrap().tri, Tri::Inside);
        assert_eq!(membership_g(g.s, g.p, 4, &cfg()).unwrap().tri, Tri::Inside);
    }
    assert_eq!(sample_g(1000, 5), sample_g(1000, 5));
}

#[test]
fn isaev_domains() {
    let d = |z1, z2| D1Point::new(z1, z2).unwrap();
    assert_eq!(membership_d1(&d(I, r(0.0)), 1, &cfg()).unwrap().tri, Tri::Inside);
    assert_eq!(membership_d1(&d(-I, r(0.0)), 1, &cfg()).unwrap().tri, Tri::Outside);
    assert!(membership_d1_all(&d(I, c(0.0, -0.5)), &cfg()).iter().all(|m| m.tri == Tri::Inside));

    let p = d(I, c(0.0, -0.5));
    assert_eq!(membership_isaev(&d(I, r(0.0)), IsaevParams::dc(1.5).unwrap(), &cfg()).tri, Tri::Inside);
    let dst = IsaevParams::dst(1.0, f64::INFINITY).unwrap();
    assert_eq!(membership_isaev(&p, dst, &cfg()).tri, Tri::Inside);
    assert_eq!(membership_isaev(&p, IsaevParams::ds(8.0).unwrap(), &cfg()).tri, Tri::Outside);

    assert_eq!(eta_index(&d(I, r(0.0)), &cfg()).unwrap(), 0.0);
    assert!((eta_index(&p, &cfg()).unwrap() - 1.0 / 7.0).abs() < 1e-15);

    assert_eq!(membership_omega1(r(0.0), r(0.0), &cfg()).tri, Tri::Inside);
    assert_eq!(membership_omega1(r(0.8), r(0.0), &cfg()).tri, Tri::Inside);
    assert_eq!(membership_omega1(r(1.0), r(1.0), &cfg()).tri, Tri::Boundary);

    assert_eq!(membership_d2_1(&proj([r(0.0), r(1.0), I, r(0.0)]), &cfg()).tri, Tri::Inside);
    assert_eq!(membership_d2_1(&proj([r(1.0), r(1.25), c(0.0, 0.75), r(0.0)]), &cfg()).tri, Tri::Inside);
    for (u, v) in [(r(1.0), r(0.0)), (c(0.3, 2.0), c(1.0, -0.4)), (I, r(2.0))] {
        assert_ne!(membership_d2_1(&proj([r(1.0), r(0.0), u, v]), &cfg()).tri, Tri::Inside);
    }
}

#[test]
fn so21() {
    for kind in [Generator::Rot01, Generator::Boost02, Generator::Boost12] {
        let m = so21_generator(kind, 0.0).unwrap();
        assert!((m.matrix() - SO21Element::identity().matrix()).norm() < 1e-15);
    }
    let t: f64 = 0.7;
    let m = *so21_generator(Generator::Boost12, t).unwrap().matrix();
    assert!((m[(1, 1)] - t.cosh()).abs() < 1e-15 && (m[(2, 2)] - t.cosh()).abs() < 1e-15);
    assert!((m[(1, 2)] - t.sinh()).abs() < 1e-15 && (m[(2, 1)] - t.sinh()).abs() < 1e-15);
    assert!(m[(0, 0)] == 1.0 && m[(0, 1)] == 0.0 && m[(1, 0)] == 0.0);

    let prod = so21_generator(Generator::Rot01, 0.1)
        .unwrap()
        .mul(&so21_generator(Generator::Boost02, -0.2).unwrap())
        .mul(&so21_generator(Generator::Boost12, 0.15).unwrap());
    assert!(prod.eta_residual() < 1e-12 && prod.is_certified());

    let (z1, z2) = so21_act(&SO21Element::identity(), I, r(0.0), &cfg()).unwrap();
    assert!(near(z1, I, 1e-15) && near(z2, r(0.0), 1e-15));

    let boost = so21_generator(Generator::Boost12, 0.3).unwrap();
    let rot = so21_generator(Generator::Rot01, 0.9).unwrap();
    for g in sample_g(1000, 11) {
        let d = map_f(&g, &cfg()).unwrap();
        let before = eta_index(&d, &cfg()).unwrap();
        let (w1, w2) = so21_act(&boost, d.z1, d.z2, &cfg()).unwrap();
        let after = eta_index(&D1Point::new(w1, w2).unwrap(), &cfg()).unwrap();
        assert!((before - after).abs() < 1e-10);
    }
    // eta_0 points: 1 + z1^2 - z2^2 = 0
    for k in 0..1000 {
        let z2 = C64::from_polar(2.0 * (k as f64 / 1000.0), k as f64);
        let z1 = (z2 * z2 - 1.0).sqrt();
        let z1 = if z1.im > 0.0 { z1 } else { -z1 };
        // q/l loses relative precision as l -> 0, so stay away from the boundary
        if membership_d1(&D1Point::new(z1, z2).unwrap(), 1, &cfg()).unwrap().margin < 1e-3 {
            continue;
        }
        let (w1, w2) = so21_act(&rot, z1, z2, &cfg()).unwrap();
        let e = eta_index(&D1Point::new(w1, w2).unwrap(), &cfg()).unwrap();
        assert!(e < 1e-10, "{z1} {z2} -> {w1} {w2}: {e}");
    }
}

#[test]
fn biholomorphisms() {
    let f = |s, p| map_f(&gp(s, p), &cfg()).unwrap();
    let d = f(r(0.0), r(0.0));
    assert!(near(d.z1, I, 1e-15) && near(d.z2, r(0.0), 1e-15));
    let d = f(r(0.5), r(0.0));
    assert!(near(d.z1, I, 1e-15) && near(d.z2, c(0.0, -0.5), 1e-15));
    assert!(membership_d1_all(&d, &cfg()).iter().all(|m| m.tri == Tri::Inside));
    let d = f(r(0.0), r(-0.25));
    assert!(near(d.z1, c(0.0, 0.6), 1e-15) && near(d.z2, r(0.0), 1e-15));

    let g = map_f_inv(&D1Point::new(I, r(0.0)).unwrap(), &cfg()).unwrap();
    assert!(near(g.s, r(0.0), 1e-15) && near(g.p, r(0.0), 1e-15));
    let g = map_f_inv(&D1Point::new(c(0.0, 0.6), r(0.0)).unwrap(), &cfg()).unwrap();
    assert!(near(g.s, r(0.0), 1e-15) && near(g.p, r(-0.25), 1e-15));

    assert_eq!(map_h(&bp(r(0.0), r(0.0))), (r(0.0), r(0.0)));
    let (u, v) = map_h(&bp(r(0.5), r(-0.5)));
    assert!(near(u, r(0.8), 1e-15) && near(v, r(0.0), 1e-15));
    let z = c(0.3, -0.4);
    let (u, v) = map_h(&bp(z, z));
    assert!(u.norm() < 1e-15 && near(v, -2.0 * I * z / (1.0 - z * z), 1e-15));

    let b = map_h_inv(r(0.0), r(0.0), &cfg()).unwrap();
    assert!(near(b.z1, r(0.0), 1e-15) && near(b.z2, r(0.0), 1e-15));
    let b = map_h_inv(r(0.8), r(0.0), &cfg()).unwrap();
    assert!(same_pair([b.z1, b.z2], [r(0.5), r(-0.5)], 1e-14));
    let (u, v) = map_h(&b);
    assert!(near(u, r(0.8), 1e-14) && near(v, r(0.0), 1e-14));
    let b = map_h_inv(c(0.0, 0.3), r(0.3), &cfg()).unwrap();
    assert!(near(b.z1, c(0.0, 0.3), 1e-15) && near(b.z2, r(0.0), 1e-15));

    let expect = |p: ProjPoint3, x: [C64; 4]| assert!(p.approx_eq(&proj(x), &cfg()), "{:?}", p.canonical());
    expect(map_j(&bp(r(0.0), r(0.0))), [r(0.0), r(1.0), I, r(0.0)]);
    expect(map_j(&bp(r(0.5), r(-0.5))), [r(1.0), r(1.25), c(0.0, 0.75), r(0.0)]);
    expect(map_j(&bp(z, z)), [r(0.0), 1.0 - z * z, I * (1.0 + z * z), -2.0 * I * z]);

    let b = map_j_inv(&proj([r(0.0), r(1.0), I, r(0.0)]), &cfg()).unwrap();
    assert!(near(b.z1, r(0.0), 1e-15) && near(b.z2, r(0.0), 1e-15));
    let b = map_j_inv(&proj([r(1.0), r(1.25), c(0.0, 0.75), r(0.0)]), &cfg()).unwrap();
    assert!(near(b.z1, r(0.5), 1e-14) && near(b.z2, r(-0.5), 1e-14));

    for (u, want) in [(r(0.0), I), (r(0.8), c(0.0, 0.6)), (r(-0.8), c(0.0, 0.6))] {
        let d = sym_omega1(u, r(0.0), &cfg()).unwrap();
        assert!(near(d.z1, want, 1e-15) && near(d.z2, r(0.0), 1e-15));
    }
    let d = sym_d2_1(&proj([r(0.0), r(1.0), I, r(0.0)]), &cfg()).unwrap();
    assert!(near(d.z1, I, 1e-15) && near(d.z2, r(0.0), 1e-15));
    let d = sym_d2_1(&proj([r(1.0), r(1.25), c(0.0, 0.75), r(0.0)]), &cfg()).unwrap();
    assert!(near(d.z1, c(0.0, 0.6), 1e-15) && near(d.z2, r(0.0), 1e-15));

    for which in [Diagram::Omega1, Diagram::D2_1] {
        assert!(check_diagram(which, 100_000, 3, &cfg()).unwrap().max_residual < 1e-10);
    }
}

#[test]
fn levi_examples() {
    let p = bp(r(0.5), r(0.0));
    assert_eq!(g_a(&p, 0.5), 0.0);
    assert!((g_a(&p, 0.6) + 0.11).abs() < 1e-15);
    let z = c(0.2, -0.6);
    let a: f64 = 0.4;
    let want = -a * a * (1.0 - z.norm_sqr()).powi(2);
    assert!((g_a(&bp(z, z), a) - want).abs() < 1e-15);

    let (d1, d2) = grad_g_a(&p, 0.5);
    assert!(near(d1, r(0.5), 1e-15) && near(d2, r(-0.375), 1e-15));
    let (d1, _) = grad_g_a(&bp(z, z), a);
    assert!(near(d1, a * a * z.conj() * (1.0 - z.norm_sqr()), 1e-15));

    let m = levi_matrix(&p, 0.5);
    assert!(near(m[0][0], r(1.0), 1e-15) && near(m[1][1], r(0.9375), 1e-15));
    assert!(near(m[0][1], r(-0.75), 1e-15) && near(m[1][0], r(-0.75), 1e-15));
    let m = levi_matrix(&bp(c(0.3, 0.1), c(-0.2, 0.5)), 1e-9);
    assert!(near(m[0][0], r(1.0), 1e-12) && near(m[0][1], r(-1.0), 1e-12) && near(m[1][1], r(1.0), 1e-12));

    let report = levi_value(&p, LeafIndex::new(0.5).unwrap(), &cfg()).unwrap();
    assert!((report.levi_value - 0.375).abs() < 1e-12);
    for k in 1..20 {
        let a = k as f64 / 20.0;
        let d = levi_value(&bp(r(a), r(0.0)), LeafIndex::new(a).unwrap(), &cfg()).unwrap().levi_value;
        assert!((d - 2.0 * a * a * (1.0 - a * a)).abs() < 1e-12);
    }

    assert!((jacobian_sym_det(&p, &cfg()) - 0.25).abs() < 1e-5);
    assert!(jacobian_sym_det(&bp(z, z), &cfg()).abs() < 1e-9);

    let sub = check_f_submersion(&p, &cfg()).unwrap();
    assert!(sub.grad_norm > 0.0 && sub.degenerate_indicator >= 2.0 - 0.25);

    assert!(cauchy_riemann_residual(HoloMap::Sym, r(0.3), c(0.0, 0.1), &cfg()) < 1e-7);
    assert!(cauchy_riemann_residual(HoloMap::F, r(0.5), r(0.0), &cfg()) < 1e-7);
    assert!(cauchy_riemann_residual(HoloMap::Conj, r(0.3), r(0.1), &cfg()) > 0.5);
}

#[test]
fn royal_points_have_a_nontrivial_stabilizer() {
    for k in 0..50 {
        let w = C64::from_polar(0.9 * k as f64 / 50.0, 1.3 * k as f64);
        let royal = GPoint::royal(w);
        let to_origin = DiscAutomorphism::translation_to(w).unwrap().invert();
        for theta in [0.5, 1.7, 3.0] {
            // conjugate a rotation by a map sending w to 0
            let phi = to_origin.invert().compose(&DiscAutomorphism::rotation(theta)).compose(&to_origin);
            assert!(near(phi.apply(w).unwrap(), w, 1e-12));
            assert!(!near(phi.apply(r(0.95)).unwrap(), r(0.95), 1e-6));
            let image = apply_h(&phi, &royal).unwrap();
            assert!(near(image.s, royal.s, 1e-12) && near(image.p, royal.p, 1e-12));
        }
    }
}
