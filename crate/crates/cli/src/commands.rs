use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::time::Instant;

use clap::ValueEnum;
use num_complex::Complex64 as C64;
use serde_json::{json, Value};
use symbidisc::complex::{rel_diff, ToleranceConfig, Tri};
use symbidisc::disc::{BidiscPoint, DiscAutomorphism};
use symbidisc::isaev::{
    membership_d1, membership_d1_all, membership_d2_1, membership_isaev, membership_omega1,
    D1Point, IsaevParams, ProjPoint3,
};
use symbidisc::levi::levi_value;
use symbidisc::maps::{
    map_f, map_f_inv, map_h, map_h_inv, map_j, map_j_inv, sym_d2_1, sym_omega1,
};
use symbidisc::sampling::{derive_seed, random_automorphism, rng_for};
use symbidisc::symmetrized::{
    apply_h, leaf_index, lift, membership_g, membership_g_all, membership_gc, sym, sym_inverse,
    GPoint, GcParams, LeafIndex, Membership,
};
use symbidisc::verify::{default_samples, run_suite, scaled, suite_names};

use crate::output::{complex, csv_real, json_complex, json_real, real};
use crate::parse::parse_point;
use crate::{Domain, Failure, Format, GlobalOpts, MapName};

/// Largest admissible deviation of an exported orbit point from its leaf.
const ORBIT_LEAF_TOL: f64 = 1e-9;

/// Points exported by `orbit` are `H_phi(a, 0)` with `|alpha| < 0.9`.
const ORBIT_ALPHA_RADIUS: f64 = 0.9;

pub struct MemberParams {
    pub condition: Option<u8>,
    pub s: Option<f64>,
    pub t: Option<f64>,
    pub c: Option<f64>,
}

fn name_of(v: impl ValueEnum) -> String {
    v.to_possible_value().expect("no skipped variants").get_name().to_string()
}

fn io_err(e: io::Error) -> Failure {
    Failure::Io(e.to_string())
}

fn require(x: Option<f64>, name: &str, domain: &str) -> Result<f64, Failure> {
    x.ok_or_else(|| Failure::Param(format!("domain {domain} needs --{name}")))
}

fn exit_for(tri: Tri) -> u8 {
    match tri {
        Tri::Inside => 0,
        Tri::Outside => 1,
        Tri::Boundary => 2,
    }
}

pub fn member(
    domain: Domain,
    tokens: &[String],
    params: MemberParams,
    g: &GlobalOpts,
    cfg: &ToleranceConfig,
) -> Result<u8, Failure> {
    let dname = name_of(domain);
    let arity = if domain == Domain::D21 { 4 } else { 2 };
    let pt = parse_point(tokens, arity).map_err(Failure::Usage)?;
    if params.condition.is_some() && !matches!(domain, Domain::G | Domain::D1) {
        return Err(Failure::Param(format!("--condition applies to G and D1, not {dname}")));
    }
    let (verdict, conditions): (Membership, Vec<(u8, Membership)>) = match domain {
        Domain::G => match params.condition {
            Some(k) => (membership_g(pt[0], pt[1], k, cfg)?, vec![]),
            None => {
                let all = membership_g_all(pt[0], pt[1], cfg);
                (GPoint::new(pt[0], pt[1])?.membership(cfg), numbered(&all))
            }
        },
        Domain::D1 => {
            let d = D1Point::new(pt[0], pt[1])?;
            match params.condition {
                Some(k) => (membership_d1(&d, k, cfg)?, vec![]),
                None => (membership_d1(&d, 1, cfg)?, numbered(&membership_d1_all(&d, cfg))),
            }
        }
        Domain::Ds | Domain::Dst | Domain::Dc => {
            let d = D1Point::new(pt[0], pt[1])?;
            let p = match domain {
                Domain::Ds => IsaevParams::ds(require(params.s, "s", &dname)?)?,
                Domain::Dst => IsaevParams::dst(
                    require(params.s, "s", &dname)?,
                    require(params.t, "t", &dname)?,
                )?,
                _ => IsaevParams::dc(require(params.c, "c", &dname)?)?,
            };
            (membership_isaev(&d, p, cfg), vec![])
        }
        Domain::Gc => {
            let c = GcParams::new(require(params.c, "c", &dname)?)?;
            (membership_gc(pt[0], pt[1], c, cfg), vec![])
        }
        Domain::Omega1 => (membership_omega1(pt[0], pt[1], cfg), vec![]),
        Domain::D21 => {
            let p = ProjPoint3::new([pt[0], pt[1], pt[2], pt[3]])?;
            (membership_d2_1(&p, cfg), vec![])
        }
    };

    let mut out = io::stdout().lock();
    match g.format.unwrap_or(Format::Plain) {
        Format::Plain => {
            writeln!(out, "domain: {dname}").map_err(io_err)?;
            let coords: Vec<String> = pt.iter().map(|z| complex(*z)).collect();
            writeln!(out, "point: {}", coords.join(" ")).map_err(io_err)?;
            if let Some(k) = params.condition {
                writeln!(out, "condition: {k}").map_err(io_err)?;
            }
            writeln!(out, "tri: {}", verdict.tri).map_err(io_err)?;
            writeln!(out, "margin: {}", real(verdict.margin)).map_err(io_err)?;
            for (k, m) in &conditions {
                writeln!(out, "condition {k}: {} (margin {})", m.tri, real(m.margin))
                    .map_err(io_err)?;
            }
        }
        Format::Json => {
            let mut v = json!({
                "domain": dname,
                "point": pt.iter().map(|z| json_complex(*z)).collect::<Vec<_>>(),
                "tri": verdict.tri.as_str(),
                "margin": json_real(verdict.margin),
            });
            if let Some(k) = params.condition {
                v["condition"] = json!(k);
            }
            if !conditions.is_empty() {
                v["conditions"] = conditions
                    .iter()
                    .map(|(k, m)| {
                        json!({"condition": k, "tri": m.tri.as_str(), "margin": json_real(m.margin)})
                    })
                    .collect::<Vec<_>>()
                    .into();
            }
            writeln!(out, "{v}").map_err(io_err)?;
        }
        Format::Csv => {
            writeln!(out, "domain,condition,tri,margin").map_err(io_err)?;
            let cond = params.condition.map(|k| k.to_string()).unwrap_or_default();
            writeln!(out, "{dname},{cond},{},{}", verdict.tri, csv_real(verdict.margin))
                .map_err(io_err)?;
            for (k, m) in &conditions {
                writeln!(out, "{dname},{k},{},{}", m.tri, csv_real(m.margin)).map_err(io_err)?;
            }
        }
    }
    Ok(exit_for(verdict.tri))
}

fn numbered(all: &[Membership; 9]) -> Vec<(u8, Membership)> {
    (1..=9).zip(all.iter().copied()).collect()
}

fn dist2(a: [C64; 2], b: [C64; 2]) -> f64 {
    rel_diff(a[0], b[0]).max(rel_diff(a[1], b[1]))
}

fn inside(m: Membership, domain: &str) -> Result<(), Failure> {
    if m.tri == Tri::Inside {
        Ok(())
    } else {
        Err(Failure::Param(format!("point is not in {domain} ({}, margin {})", m.tri, real(m.margin))))
    }
}

fn bidisc(pt: &[C64]) -> Result<BidiscPoint, Failure> {
    Ok(BidiscPoint::new(pt[0], pt[1])?)
}

/// Image of `pt` under the map and, on request, the residual of the inverse
/// applied to the image.
fn evaluate(
    name: MapName,
    pt: &[C64],
    roundtrip: bool,
    cfg: &ToleranceConfig,
) -> Result<(Vec<C64>, Option<f64>), Failure> {
    let input = [pt[0], pt[1]];
    let (image, residual): (Vec<C64>, Option<f64>) = match name {
        MapName::F => {
            let g = GPoint::new(pt[0], pt[1])?;
            let d = map_f(&g, cfg)?;
            let r = roundtrip
                .then(|| map_f_inv(&d, cfg).map(|b| dist2([b.s, b.p], input)))
                .transpose()?;
            (vec![d.z1, d.z2], r)
        }
        MapName::Finv => {
            let g = map_f_inv(&D1Point::new(pt[0], pt[1])?, cfg)?;
            let r = roundtrip
                .then(|| map_f(&g, cfg).map(|d| dist2([d.z1, d.z2], input)))
                .transpose()?;
            (vec![g.s, g.p], r)
        }
        MapName::H => {
            let (u, v) = map_h(&bidisc(pt)?);
            let r = roundtrip
                .then(|| map_h_inv(u, v, cfg).map(|b| dist2([b.z1, b.z2], input)))
                .transpose()?;
            (vec![u, v], r)
        }
        MapName::Hinv => {
            let b = map_h_inv(pt[0], pt[1], cfg)?;
            let r = roundtrip.then(|| {
                let (u, v) = map_h(&b);
                dist2([u, v], input)
            });
            (vec![b.z1, b.z2], r)
        }
        MapName::J => {
            let p = map_j(&bidisc(pt)?);
            let r = roundtrip
                .then(|| map_j_inv(&p, cfg).map(|b| dist2([b.z1, b.z2], input)))
                .transpose()?;
            (p.coords().to_vec(), r)
        }
        MapName::Jinv => {
            let p = ProjPoint3::new([pt[0], pt[1], pt[2], pt[3]])?;
            let b = map_j_inv(&p, cfg)?;
            let r = roundtrip.then(|| p.distance(&map_j(&b), cfg));
            (vec![b.z1, b.z2], r)
        }
        MapName::Sym => {
            let b = bidisc(pt)?;
            let g = sym(&b);
            let r = roundtrip
                .then(|| {
                    lift(&g).map(|l| {
                        dist2([l.z1, l.z2], input).min(dist2([l.z2, l.z1], input))
                    })
                })
                .transpose()?;
            (vec![g.s, g.p], r)
        }
        MapName::SymInv => {
            let g = GPoint::new(pt[0], pt[1])?;
            let roots = sym_inverse(&g)?;
            let r = roundtrip.then(|| {
                let back = sym(&BidiscPoint { z1: roots[0], z2: roots[1] });
                dist2([back.s, back.p], input)
            });
            (roots.to_vec(), r)
        }
        MapName::SymOmega1 => {
            inside(membership_omega1(pt[0], pt[1], cfg), "Omega_1")?;
            let d = sym_omega1(pt[0], pt[1], cfg)?;
            // preimages are (u, v) and (-u, v), the images of both root orders
            let r = roundtrip
                .then(|| -> Result<f64, Failure> {
                    let b = lift(&map_f_inv(&d, cfg)?)?;
                    let (u, v) = map_h(&b);
                    Ok(dist2([u, v], input).min(dist2([-u, v], input)))
                })
                .transpose()?;
            (vec![d.z1, d.z2], r)
        }
        MapName::SymD21 => {
            let p = ProjPoint3::new([pt[0], pt[1], pt[2], pt[3]])?;
            inside(membership_d2_1(&p, cfg), "D_1^(2)")?;
            let d = sym_d2_1(&p, cfg)?;
            let r = roundtrip
                .then(|| -> Result<f64, Failure> {
                    let b = lift(&map_f_inv(&d, cfg)?)?;
                    let x = p.distance(&map_j(&b), cfg);
                    Ok(x.min(p.distance(&map_j(&b.swapped()), cfg)))
                })
                .transpose()?;
            (vec![d.z1, d.z2], r)
        }
    };
    Ok((image, residual))
}

pub fn map(
    name: MapName,
    tokens: &[String],
    roundtrip: bool,
    g: &GlobalOpts,
    cfg: &ToleranceConfig,
) -> Result<u8, Failure> {
    let arity = if matches!(name, MapName::Jinv | MapName::SymD21) { 4 } else { 2 };
    let pt = parse_point(tokens, arity).map_err(Failure::Usage)?;
    let (image, residual) = evaluate(name, &pt, roundtrip, cfg)?;
    let mname = name_of(name);
    let mut out = io::stdout().lock();
    match g.format.unwrap_or(Format::Plain) {
        Format::Plain => {
            let show = |v: &[C64]| v.iter().map(|z| complex(*z)).collect::<Vec<_>>().join(" ");
            writeln!(out, "map: {mname}").map_err(io_err)?;
            writeln!(out, "input: {}", show(&pt)).map_err(io_err)?;
            writeln!(out, "output: {}", show(&image)).map_err(io_err)?;
            if let Some(r) = residual {
                writeln!(out, "roundtrip_residual: {}", real(r)).map_err(io_err)?;
            }
        }
        Format::Json => {
            let list = |v: &[C64]| v.iter().map(|z| json_complex(*z)).collect::<Vec<_>>();
            let mut v = json!({"map": mname, "input": list(&pt), "output": list(&image)});
            if let Some(r) = residual {
                v["roundtrip_residual"] = json_real(r);
            }
            writeln!(out, "{v}").map_err(io_err)?;
        }
        Format::Csv => {
            writeln!(out, "map,index,re,im,roundtrip_residual").map_err(io_err)?;
            let r = residual.map(csv_real).unwrap_or_default();
            for (k, z) in image.iter().enumerate() {
                writeln!(out, "{mname},{k},{},{},{r}", csv_real(z.re), csv_real(z.im))
                    .map_err(io_err)?;
            }
        }
    }
    Ok(0)
}

fn open_out(path: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

pub fn orbit(
    a: f64,
    n: usize,
    path: Option<&Path>,
    g: &GlobalOpts,
    cfg: &ToleranceConfig,
) -> Result<u8, Failure> {
    let leaf = LeafIndex::new(a)?;
    if n == 0 {
        return Err(Failure::Param("need --n >= 1".into()));
    }
    let key = derive_seed(g.seed, "orbit");
    let start = GPoint::new(C64::new(a, 0.0), C64::new(0.0, 0.0))?;
    let mut rows = Vec::with_capacity(n);
    for i in 0..n as u64 {
        let phi = random_automorphism(&mut rng_for(key, i), ORBIT_ALPHA_RADIUS);
        let p = apply_h(&phi, &start)?;
        let q = leaf_index(&p, cfg)?.value();
        if (q - leaf.value()).abs() > ORBIT_LEAF_TOL {
            return Err(Failure::Param(format!(
                "point {i} drifted off leaf {a}: leaf index {q}"
            )));
        }
        rows.push((p, q));
    }

    let mut out = open_out(path)?;
    if g.format == Some(Format::Json) {
        let points: Vec<Value> = rows
            .iter()
            .map(|(p, q)| json!({"s": json_complex(p.s), "p": json_complex(p.p), "leaf_a": q}))
            .collect();
        let v = json!({"a": a, "n": n, "seed": g.seed, "points": points});
        writeln!(out, "{v}").map_err(io_err)?;
    } else {
        writeln!(out, "s_re,s_im,p_re,p_im,leaf_a").map_err(io_err)?;
        for (p, q) in &rows {
            writeln!(
                out,
                "{},{},{},{},{}",
                csv_real(p.s.re),
                csv_real(p.s.im),
                csv_real(p.p.re),
                csv_real(p.p.im),
                csv_real(*q)
            )
            .map_err(io_err)?;
        }
    }
    out.flush().map_err(io_err)?;
    eprintln!("orbit: a={} n={n} seed={}", real(a), g.seed);
    Ok(0)
}

pub fn levi(
    a: f64,
    theta: f64,
    alpha: C64,
    g: &GlobalOpts,
    cfg: &ToleranceConfig,
) -> Result<u8, Failure> {
    if !(a > 0.0 && a < 1.0) {
        return Err(Failure::Param(format!("need 0 < a < 1, got {a}")));
    }
    let phi = DiscAutomorphism::new(theta, alpha)?;
    let point = BidiscPoint::new(phi.apply(C64::new(a, 0.0))?, phi.apply(C64::new(0.0, 0.0))?)?;
    let r = levi_value(&point, LeafIndex::new(a)?, cfg)?;
    let diff = (r.levi_value - r.closed_form_value).abs();
    let mut out = io::stdout().lock();
    match g.format.unwrap_or(Format::Plain) {
        Format::Plain => {
            let lines = [
                ("a", real(a)),
                ("theta", real(theta)),
                ("alpha", complex(alpha)),
                ("z1", complex(r.point.z1)),
                ("z2", complex(r.point.z2)),
                ("grad_z1", complex(r.grad.0)),
                ("grad_z2", complex(r.grad.1)),
                ("levi_11", complex(r.levi_matrix[0][0])),
                ("levi_12", complex(r.levi_matrix[0][1])),
                ("levi_21", complex(r.levi_matrix[1][0])),
                ("levi_22", complex(r.levi_matrix[1][1])),
                ("tangent_u", complex(r.tangent)),
                ("levi_value", real(r.levi_value)),
                ("closed_form_value", real(r.closed_form_value)),
                ("difference", real(diff)),
            ];
            for (k, v) in lines {
                writeln!(out, "{k}: {v}").map_err(io_err)?;
            }
        }
        Format::Json => {
            let m = r.levi_matrix.map(|row| row.map(json_complex));
            let v = json!({
                "a": a,
                "theta": theta,
                "alpha": json_complex(alpha),
                "point": [json_complex(r.point.z1), json_complex(r.point.z2)],
                "grad": [json_complex(r.grad.0), json_complex(r.grad.1)],
                "levi_matrix": m,
                "tangent_u": json_complex(r.tangent),
                "levi_value": r.levi_value,
                "closed_form_value": r.closed_form_value,
                "difference": diff,
            });
            writeln!(out, "{v}").map_err(io_err)?;
        }
        Format::Csv => {
            writeln!(
                out,
                "a,theta,alpha_re,alpha_im,z1_re,z1_im,z2_re,z2_im,levi_value,closed_form_value"
            )
            .map_err(io_err)?;
            let cells = [
                a,
                theta,
                alpha.re,
                alpha.im,
                r.point.z1.re,
                r.point.z1.im,
                r.point.z2.re,
                r.point.z2.im,
                r.levi_value,
                r.closed_form_value,
            ];
            let row: Vec<String> = cells.iter().map(|x| csv_real(*x)).collect();
            writeln!(out, "{}", row.join(",")).map_err(io_err)?;
        }
    }
    Ok(0)
}

pub fn verify(
    suite: &str,
    scale: f64,
    path: Option<&Path>,
    g: &GlobalOpts,
    cfg: &ToleranceConfig,
) -> Result<u8, Failure> {
    let names: Vec<&str> = if suite == "all" {
        suite_names()
    } else {
        default_samples(suite)?;
        vec![suite]
    };
    if !(scale.is_finite() && scale > 0.0) {
        return Err(Failure::Param(format!("--scale must be positive, got {scale}")));
    }
    let format = g.format.unwrap_or(Format::Json);
    let mut out = open_out(path)?;
    if format == Format::Csv {
        writeln!(out, "suite_name,n_samples,n_skipped_boundary,max_violation,tolerance,pass,seed")
            .map_err(io_err)?;
    }
    let start = Instant::now();
    let mut passed = 0;
    for name in &names {
        let n = scaled(default_samples(name)?, scale);
        let r = run_suite(name, n, g.seed, cfg)?;
        match format {
            Format::Json => writeln!(out, "{}", r.certificate()),
            Format::Plain => writeln!(
                out,
                "{} {} n={} skipped={} max_violation={} tolerance={} seed={}",
                if r.pass { "PASS" } else { "FAIL" },
                r.suite_name,
                r.n_samples,
                r.n_skipped_boundary,
                real(r.max_violation),
                real(r.tolerance),
                r.seed
            ),
            Format::Csv => writeln!(
                out,
                "{},{},{},{},{},{},{}",
                r.suite_name,
                r.n_samples,
                r.n_skipped_boundary,
                csv_real(r.max_violation),
                csv_real(r.tolerance),
                r.pass,
                r.seed
            ),
        }
        .map_err(io_err)?;
        out.flush().map_err(io_err)?;
        eprintln!("{:<22} {:>5} in {:.2?}", r.suite_name, if r.pass { "pass" } else { "FAIL" }, r.elapsed);
        passed += usize::from(r.pass);
    }
    eprintln!(
        "{passed}/{} suites passed in {:.1?} (seed {})",
        names.len(),
        start.elapsed(),
        g.seed
    );
    Ok(if passed == names.len() { 0 } else { 1 })
}
