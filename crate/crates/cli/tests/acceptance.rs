//! End-to-end acceptance run: the full verification sweep is executed twice
//! through the binary, and each criterion is judged from the certificates
//! plus a few direct library evaluations. One PASS/FAIL line per criterion.

use std::collections::HashMap;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use num_complex::Complex64 as C64;
use serde_json::Value;
use symbidisc::complex::ToleranceConfig;
use symbidisc::disc::BidiscPoint;
use symbidisc::levi::levi_value;
use symbidisc::symmetrized::LeafIndex;

const SEED: &str = "42";

struct Cert {
    n_samples: u64,
    n_skipped: u64,
    max_violation: Option<f64>,
    tolerance: f64,
    pass: bool,
}

struct Sweep {
    status: i32,
    wall: Duration,
    bytes: Vec<u8>,
    certs: HashMap<String, Cert>,
    timings: HashMap<String, Duration>,
}

fn sweep(out: &Path) -> Sweep {
    let start = Instant::now();
    let output = Command::new(env!("CARGO_BIN_EXE_symbidisc"))
        .args(["verify", "all", "--scale", "1", "--seed", SEED, "--out"])
        .arg(out)
        .output()
        .expect("spawn symbidisc");
    let wall = start.elapsed();
    let bytes = std::fs::read(out).expect("certificate file");
    let mut certs = HashMap::new();
    for line in String::from_utf8(bytes.clone()).unwrap().lines() {
        let v: Value = serde_json::from_str(line).expect("certificate is JSON");
        certs.insert(
            v["suite_name"].as_str().unwrap().to_string(),
            Cert {
                n_samples: v["n_samples"].as_u64().unwrap(),
                n_skipped: v["n_skipped_boundary"].as_u64().unwrap(),
                max_violation: v["max_violation"].as_f64(),
                tolerance: v["tolerance"].as_f64().unwrap(),
                pass: v["pass"].as_bool().unwrap(),
            },
        );
    }
    let timings = String::from_utf8_lossy(&output.stderr)
        .lines()
        .filter_map(|l| {
            let mut words = l.split_whitespace();
            let name = words.next()?;
            let _verdict = words.next()?;
            (words.next()? == "in").then_some(())?;
            Some((name.to_string(), parse_duration(words.next()?)?))
        })
        .collect();
    Sweep {
        status: output.status.code().unwrap_or(-1),
        wall,
        bytes,
        certs,
        timings,
    }
}

/// Reads the `Debug` rendering of a `Duration` (`1.23s`, `45.6ms`, `7µs`).
fn parse_duration(text: &str) -> Option<Duration> {
    let split = text.find(|c: char| c.is_alphabetic() || c == 'µ')?;
    let (num, unit) = text.split_at(split);
    let x: f64 = num.parse().ok()?;
    let secs = match unit {
        "s" => x,
        "ms" => x * 1e-3,
        "µs" => x * 1e-6,
        "ns" => x * 1e-9,
        _ => return None,
    };
    Some(Duration::from_secs_f64(secs))
}

struct Judge<'a> {
    sweep: &'a Sweep,
    failures: Vec<usize>,
}

impl Judge<'_> {
    fn cert(&self, name: &str) -> Option<&Cert> {
        self.sweep.certs.get(name)
    }

    /// Certificate passed, ran at least `n` samples, max violation within `bound`.
    fn suite(&self, name: &str, n: u64, bound: f64) -> (bool, String) {
        match self.cert(name) {
            None => (false, format!("{name}: missing certificate")),
            Some(c) => {
                let v = c.max_violation.unwrap_or(f64::INFINITY);
                let skip_ok = (c.n_skipped as f64) < 0.01 * c.n_samples as f64;
                let ok = c.pass && c.n_samples >= n && v <= bound && c.tolerance <= bound && skip_ok;
                (
                    ok,
                    format!("{name}: n={} skipped={} max={v:.3e}", c.n_samples, c.n_skipped),
                )
            }
        }
    }

    fn report(&mut self, id: usize, label: &str, parts: &[(bool, String)]) {
        let ok = parts.iter().all(|(ok, _)| *ok);
        let detail: Vec<&str> = parts.iter().map(|(_, d)| d.as_str()).collect();
        println!(
            "{} criterion {id}: {label} [{}]",
            if ok { "PASS" } else { "FAIL" },
            detail.join("; ")
        );
        if !ok {
            self.failures.push(id);
        }
    }
}

fn main() {
    let dir = tempfile::tempdir().unwrap();
    let first = sweep(&dir.path().join("first.jsonl"));
    let second = sweep(&dir.path().join("second.jsonl"));
    let cfg = ToleranceConfig::default();
    let mut j = Judge {
        sweep: &first,
        failures: Vec::new(),
    };

    let g_time = first.timings.get("membership-9way-G").copied();
    let g_fast = (
        g_time.is_some_and(|t| t < Duration::from_secs(60)),
        g_time.map_or("runtime unknown".into(), |t| format!("runtime {t:.2?}")),
    );
    j.report(
        1,
        "nine-way membership agreement on G",
        &[j.suite("membership-9way-G", 1_000_000, 0.0), g_fast],
    );
    j.report(
        2,
        "nine-way membership agreement on D1",
        &[j.suite("membership-9way-D1", 1_000_000, 0.0)],
    );
    j.report(3, "F round trip and membership transport", &[j.suite("roundtrip-F", 100_000, 1e-11)]);
    j.report(
        4,
        "commutative diagrams for Omega1 and D21",
        &[
            j.suite("diagram-omega1", 100_000, 1e-10),
            j.suite("diagram-d21", 100_000, 1e-10),
        ],
    );

    let b = BidiscPoint::new(C64::new(0.5, 0.0), C64::new(0.0, 0.0)).unwrap();
    let d = levi_value(&b, LeafIndex::new(0.5).unwrap(), &cfg).unwrap().levi_value;
    let slice = ((d - 0.375).abs() <= 1e-12, format!("D(0.5)={d}"));
    let positivity = match j.cert("levi-positivity") {
        Some(c) => {
            let worst = c.max_violation.unwrap_or(f64::INFINITY);
            (c.pass && c.n_samples >= 100_000 && worst < 0.0, format!("min D={:.3e}", -worst))
        }
        None => (false, "levi-positivity: missing certificate".into()),
    };
    j.report(
        5,
        "Levi form closed form and positivity",
        &[j.suite("levi-closed-form", 100_000, 1e-9), positivity, slice],
    );
    j.report(6, "Jacobian determinant of sym", &[j.suite("jacobian-det", 10_000, 1e-5)]);
    j.report(
        7,
        "leaf index invariance and on-leaf orbit paths",
        &[
            j.suite("q-invariance", 100_000, 1e-11),
            j.suite("orbit-path", 1_000, 1e-10),
        ],
    );
    j.report(8, "leaf reindexing a <-> b", &[j.suite("reindex-ab", 10_000, 1e-14)]);
    j.report(9, "SO(2,1) invariance of D1 and eta", &[j.suite("so21-invariance", 100_000, 1e-10)]);

    let slit = match j.cert("slit-plane") {
        Some(c) => {
            let v = c.max_violation.unwrap_or(f64::INFINITY);
            (c.pass && c.n_samples >= 100_000 && v < -1e-12, format!("min distance to cut {:.3e}", -v))
        }
        None => (false, "slit-plane: missing certificate".into()),
    };
    j.report(10, "1-u^2-v^2 avoids the negative real axis on Omega1", &[slit]);
    j.report(11, "Cauchy-Riemann residuals", &[j.suite("cr-residuals", 1_000, 1e-7)]);

    let all_pass = first.certs.values().all(|c| c.pass) && !first.certs.is_empty();
    let identical = first.bytes == second.bytes;
    j.report(
        12,
        "full sweep under 5 minutes, exit 0, reproducible certificates",
        &[
            (first.wall < Duration::from_secs(300), format!("wall {:.1?}", first.wall)),
            (first.status == 0 && second.status == 0 && all_pass, format!("exit {}", first.status)),
            (identical, format!("identical={identical}")),
        ],
    );

    drop(dir);
    if !j.failures.is_empty() {
        eprintln!("failed criteria: {:?}", j.failures);
        std::process::exit(1);
    }
}
