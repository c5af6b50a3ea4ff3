//! Command-line front end: `compute`, `table`, `verify` and `selftest`.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage error,
//! 3 domain error (pole at the specialization point, enumeration cap).

mod cache;
mod format;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::arith::{parse_qrat, parse_rat, BigRat, QRat};
use crate::error::Error;
use crate::euler::{EulerEngine, DEFAULT_CAP};
use crate::verify::{mutation_probes, Grid, Identity, Verifier};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
    Plain,
}

#[derive(Parser, Clone, Debug)]
#[command(name = "hq-euler", version, about = "Exact (h,q)-Euler numbers and polynomials over Q(q)")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Seed for the random arguments of the verification grid.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Largest number of compositions the multinomial route may enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: u64,

    /// Cache file for computed sequences.
    #[arg(long = "cache", global = true, env = "HQ_EULER_CACHE", value_name = "PATH")]
    pub cache_path: Option<PathBuf>,

    /// Ignore any cache path, including one from the environment.
    #[arg(long, global = true)]
    pub no_cache: bool,
}

#[derive(Subcommand, Clone, Debug)]
pub enum Command {
    /// One number, polynomial or polynomial value.
    Compute(ComputeArgs),
    /// Numbers E_0..E_nmax.
    Table(TableArgs),
    /// Check identities over a parameter grid.
    Verify(VerifyArgs),
    /// Small grid plus mutation probes.
    Selftest,
}

fn qrat_arg(s: &str) -> Result<QRat, String> {
    parse_qrat(s).map_err(|e| e.to_string())
}

fn rat_arg(s: &str) -> Result<BigRat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

#[derive(Args, Clone, Debug)]
pub struct ComputeArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, allow_negative_numbers = true)]
    pub h: i64,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub v: u32,
    /// Evaluate the polynomial at this element of Q(q).
    #[arg(long, allow_hyphen_values = true, value_parser = qrat_arg, conflicts_with = "poly")]
    pub x: Option<QRat>,
    /// Specialize q to this rational.
    #[arg(long, allow_hyphen_values = true, value_parser = rat_arg)]
    pub q0: Option<BigRat>,
    /// Print the whole polynomial in z.
    #[arg(long)]
    pub poly: bool,
}

#[derive(Args, Clone, Debug)]
pub struct TableArgs {
    #[arg(long)]
    pub nmax: u32,
    #[arg(long, allow_negative_numbers = true)]
    pub h: i64,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub v: u32,
    #[arg(long, allow_hyphen_values = true, value_parser = rat_arg)]
    pub q0: Option<BigRat>,
}

/// Identities selected on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    All,
    One(Identity),
}

fn target_arg(s: &str) -> Result<Target, String> {
    if s == "all" {
        return Ok(Target::All);
    }
    Identity::from_name(s).map(Target::One).ok_or_else(|| {
        let names: Vec<&str> = Identity::ALL.iter().map(|i| i.name()).collect();
        format!("unknown identity; expected all, {}", names.join(", "))
    })
}

#[derive(Args, Clone, Debug)]
pub struct VerifyArgs {
    /// Identity name, or `all`.
    #[arg(value_parser = target_arg)]
    pub identity: Target,
    #[arg(long, default_value_t = 12)]
    pub max_n: u32,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_v: u32,
    /// Values of h (comma separated).
    #[arg(long = "h", value_delimiter = ',', allow_negative_numbers = true)]
    pub hs: Vec<i64>,
    /// Odd moduli for the distribution relation (comma separated).
    #[arg(long = "d", value_delimiter = ',')]
    pub ds: Vec<u32>,
    /// Random argument tuples per cell.
    #[arg(long, default_value_t = 5)]
    pub tuples: usize,
    /// Series terms for the numeric tail check.
    #[arg(long, default_value_t = 200)]
    pub terms: u32,
}

impl CliConfig {
    fn cache_file(&self) -> Option<&PathBuf> {
        if self.no_cache {
            None
        } else {
            self.cache_path.as_ref()
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::EvenModulus(_) | Error::ZeroOrder | Error::Parse(_) | Error::ArgumentCount { .. } => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match CliConfig::try_parse_from(args) {
        Ok(cfg) => run(&cfg, out, err),
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            e.exit_code()
        }
    }
}

pub fn run(cfg: &CliConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let engine = EulerEngine::new();
    if let Some(path) = cfg.cache_file() {
        match cache::load(path) {
            Ok(Some(seqs)) => engine.preload(seqs),
            Ok(None) => {}
            Err(msg) => {
                let _ = writeln!(err, "warning: discarding cache {}: {msg}", path.display());
            }
        }
    }

    let result = match &cfg.command {
        Command::Compute(a) => compute(cfg, a, &engine).map(|s| (s, EXIT_OK)),
        Command::Table(a) => table(cfg, a, &engine).map(|s| (s, EXIT_OK)),
        Command::Verify(a) => verify(cfg, a, &engine, err),
        Command::Selftest => selftest(cfg, &engine),
    };
    match result {
        Ok((text, code)) => {
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return EXIT_FAIL;
            }
            if let Some(path) = cfg.cache_file() {
                if let Err(e) = cache::save(path, &engine.export()) {
                    let _ = writeln!(err, "warning: could not write cache {}: {e}", path.display());
                }
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn compute(cfg: &CliConfig, a: &ComputeArgs, engine: &EulerEngine) -> crate::Result<String> {
    if a.poly {
        let p = engine.poly(a.n, a.h, a.v);
        return Ok(match &a.q0 {
            Some(q0) => format::rational_poly(&p.eval_q(q0)?, cfg.format),
            None => format::poly(&p, cfg.format),
        });
    }
    let value = match &a.x {
        Some(x) => engine.poly_eval(a.n, a.h, a.v, x),
        None => engine.number(a.n, a.h, a.v),
    };
    Ok(match &a.q0 {
        Some(q0) => format::rational(a.n, &value.eval(q0)?, cfg.format),
        None => format::value(a.n, &value, cfg.format),
    })
}

fn table(cfg: &CliConfig, a: &TableArgs, engine: &EulerEngine) -> crate::Result<String> {
    let values = engine.numbers(a.h, a.v, a.nmax);
    let values = &values[..=a.nmax as usize];
    let rows = match &a.q0 {
        Some(q0) => format::Rows::Specialized(values.iter().map(|x| x.eval(q0)).collect::<crate::Result<_>>()?),
        None => format::Rows::Exact(values.to_vec()),
    };
    Ok(format::table(&rows, a.h, a.v, cfg.format))
}

fn verify(
    cfg: &CliConfig,
    a: &VerifyArgs,
    engine: &EulerEngine,
    err: &mut dyn Write,
) -> crate::Result<(String, i32)> {
    let defaults = Grid::default();
    let grid = Grid {
        max_n: a.max_n,
        max_v: a.max_v,
        hs: if a.hs.is_empty() { defaults.hs } else { a.hs.clone() },
        ds: if a.ds.is_empty() { defaults.ds } else { a.ds.clone() },
        tuples: a.tuples,
        seed: cfg.seed,
        terms: a.terms,
    };
    grid.validate()?;
    let ids: Vec<Identity> = match a.identity {
        Target::All => Identity::ALL.to_vec(),
        Target::One(id) => vec![id],
    };
    let verifier = Verifier::new(engine).with_cap(cfg.cap);
    let reports = grid.run(&verifier, &ids)?;
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let _ = writeln!(err, "{} cells checked, {failed} failed", reports.len());
    let code = if failed == 0 { EXIT_OK } else { EXIT_FAIL };
    Ok((format::reports(&reports, cfg.format), code))
}

fn selftest(cfg: &CliConfig, engine: &EulerEngine) -> crate::Result<(String, i32)> {
    let grid = Grid {
        max_n: 6,
        max_v: 3,
        tuples: 2,
        seed: cfg.seed,
        ..Grid::default()
    };
    let verifier = Verifier::new(engine).with_cap(cfg.cap);
    let mut text = String::new();
    let mut ok = true;
    for id in Identity::ALL {
        let reports = grid.run(&verifier, &[id])?;
        let failed = reports.iter().filter(|r| !r.passed()).count();
        ok &= failed == 0;
        let detail = format!("{} cells, {failed} failed", reports.len());
        text.push_str(&format::check_line(&format!("grid {id}"), failed == 0, &detail, cfg.format));
    }
    for (cell, mutation) in mutation_probes(cfg.seed) {
        let report = Verifier::new(engine).with_cap(cfg.cap).with_mutation(mutation).check(&cell)?;
        let caught = !report.passed() && report.witness.is_some();
        ok &= caught;
        let detail = format!("E_{} negated, {} {}", mutation.index, report.params, if caught { "detected" } else { "missed" });
        text.push_str(&format::check_line(&format!("mutation {}", report.identity), caught, &detail, cfg.format));
    }
    Ok((text, if ok { EXIT_OK } else { EXIT_FAIL }))
}
