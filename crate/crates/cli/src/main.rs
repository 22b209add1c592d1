//! `symbidisc`: membership queries, map evaluation, orbit export, Levi
//! reports and the verification runner.
//!
//! Exit codes: 0 inside / pass, 1 outside / fail, 2 boundary, 64 usage,
//! 65 domain or parameter error, 74 I/O error.

mod commands;
mod output;
mod parse;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use symbidisc::complex::ToleranceConfig;

#[derive(Parser, Debug)]
#[command(name = "symbidisc", version, about = "Symmetrized bidisc toolkit")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Relative tolerance for equalities.
    #[arg(long, global = true, value_parser = parse::parse_real)]
    pub eq_tol: Option<f64>,
    /// Margins within this band of zero classify as boundary.
    #[arg(long, global = true, value_parser = parse::parse_real)]
    pub boundary_band: Option<f64>,
    /// Finite-difference step.
    #[arg(long, global = true, value_parser = parse::parse_real)]
    pub fd_step: Option<f64>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
#[value(rename_all = "verbatim")]
pub enum Domain {
    G,
    D1,
    Ds,
    Dst,
    Dc,
    Gc,
    Omega1,
    D21,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
#[value(rename_all = "verbatim")]
pub enum MapName {
    F,
    Finv,
    H,
    Hinv,
    J,
    Jinv,
    #[value(name = "sym")]
    Sym,
    #[value(name = "syminv")]
    SymInv,
    #[value(name = "symOmega1")]
    SymOmega1,
    #[value(name = "symD21")]
    SymD21,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a point as inside, outside or on the boundary of a domain.
    Member {
        #[arg(value_enum, ignore_case = true)]
        domain: Domain,
        /// Coordinates: complex literals like `1-2i`, or pairs of reals.
        #[arg(num_args = 1.., required = true)]
        point: Vec<String>,
        /// Test one of the nine equivalent conditions (G and D1 only).
        #[arg(long)]
        condition: Option<u8>,
        /// Parameter `s` of `D_s` and `D_{s,t}`.
        #[arg(long)]
        s: Option<String>,
        /// Parameter `t` of `D_{s,t}`; `inf` allowed.
        #[arg(long)]
        t: Option<String>,
        /// Parameter `c` of `D_c` and `G_c`.
        #[arg(long)]
        c: Option<String>,
    },
    /// Evaluate one of the explicit maps.
    Map {
        #[arg(value_enum)]
        name: MapName,
        #[arg(num_args = 1.., required = true)]
        point: Vec<String>,
        /// Also report the residual of the inverse composed with the map.
        #[arg(long)]
        roundtrip: bool,
    },
    /// Export points of one leaf of the orbit foliation as CSV.
    Orbit {
        /// Leaf index in [0, 1).
        #[arg(long)]
        a: String,
        /// Number of points.
        #[arg(long, default_value_t = 100)]
        n: usize,
        /// Output file; stdout if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Levi form of the leaf `F_a` at `(phi(a), phi(0))`, `phi = phi_{theta, alpha}`.
    Levi {
        #[arg(long)]
        a: String,
        #[arg(long, default_value = "0")]
        theta: String,
        #[arg(long, default_value = "0")]
        alpha: String,
    },
    /// Run verification suites and print their certificates.
    Verify {
        /// Suite name, or `all`.
        suite: Option<String>,
        /// Multiplier on each suite's default sample count.
        #[arg(long, default_value = "1")]
        scale: String,
        /// Certificate file; stdout if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// List the registered suites and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Param(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 64,
            Failure::Param(_) => 65,
            Failure::Io(_) => 74,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Param(m) | Failure::Io(m) => m,
        }
    }
}

impl From<symbidisc::Error> for Failure {
    fn from(e: symbidisc::Error) -> Self {
        match e {
            symbidisc::Error::UnknownSuite(_) => Failure::Usage(e.to_string()),
            _ => Failure::Param(e.to_string()),
        }
    }
}

impl GlobalOpts {
    pub fn tolerances(&self) -> Result<ToleranceConfig, Failure> {
        let d = ToleranceConfig::default();
        let cfg = ToleranceConfig::new(
            self.eq_tol.unwrap_or(d.eq_tol),
            self.boundary_band.unwrap_or(d.boundary_band),
            self.fd_step.unwrap_or(d.fd_step),
        )?;
        Ok(cfg)
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let g = &cli.global;
    let cfg = g.tolerances()?;
    match cli.command {
        Command::Member {
            domain,
            point,
            condition,
            s,
            t,
            c,
        } => {
            let params = commands::MemberParams {
                condition,
                s: s.as_deref().map(parse::parse_real).transpose().map_err(Failure::Usage)?,
                t: t.as_deref().map(parse::parse_real).transpose().map_err(Failure::Usage)?,
                c: c.as_deref().map(parse::parse_real).transpose().map_err(Failure::Usage)?,
            };
            commands::member(domain, &point, params, g, &cfg)
        }
        Command::Map {
            name,
            point,
            roundtrip,
        } => commands::map(name, &point, roundtrip, g, &cfg),
        Command::Orbit { a, n, out } => {
            let a = parse::parse_real(&a).map_err(Failure::Usage)?;
            commands::orbit(a, n, out.as_deref(), g, &cfg)
        }
        Command::Levi { a, theta, alpha } => {
            let a = parse::parse_real(&a).map_err(Failure::Usage)?;
            let theta = parse::parse_real(&theta).map_err(Failure::Usage)?;
            let alpha = parse::parse_complex(&alpha).map_err(Failure::Usage)?;
            commands::levi(a, theta, alpha, g, &cfg)
        }
        Command::Verify {
            suite,
            scale,
            out,
            list,
        } => {
            if list {
                for name in symbidisc::verify::suite_names() {
                    println!("{name}");
                }
                return Ok(0);
            }
            let suite = suite.ok_or_else(|| Failure::Usage("missing suite name".into()))?;
            let scale = parse::parse_real(&scale).map_err(Failure::Usage)?;
            commands::verify(suite.trim(), scale, out.as_deref(), g, &cfg)
        }
    }
}

fn main() -> ExitCode {
    let args = parse::protect_negative_values(std::env::args());
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 64 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
