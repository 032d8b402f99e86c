//! Command-line front end for `lgp-core`.

pub mod fixtures;
pub mod report;
pub mod suite;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use lgp_core::algorithm1::{parse_candidates, run_algorithm1, setup, verify_candidates};
use lgp_core::arith::{format_rational, parse_rational};
use lgp_core::curves::{curve_suite, CurvePoints};
use lgp_core::density::{exact_density, sampled_density_partitioned, GaloisData};
use lgp_core::dynatomic::{dynatomic, PolyMap};
use lgp_core::fixtures::{format_index_set, parse_blocks};
use lgp_core::{MPoly, PermGroup};
use serde_json::json;

use crate::fixtures::{Fixtures, FIXTURES_ENV};
use crate::report::{report_emit, CheckResult, Format, RunReport};
use crate::suite::{run_suite, SuiteOptions, DEFAULT_BOUND, DEFAULT_C_SAMPLES};

/// Exit code for a usage or input error.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "lgp", version, about = "Exact computations for periodic points of quadratic maps")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the dynatomic polynomial Phi_n of x^2 + c.
    Dynatomic {
        #[arg(long)]
        n: u32,
        /// Specialize c to a rational value such as -5/4.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "generic")]
        c: Option<String>,
        /// Keep c symbolic (the default).
        #[arg(long)]
        generic: bool,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate subgroup/index-set pairs, or verify candidate subgroups from a file.
    Algorithm1 {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        s: u64,
        /// Candidate file in block format; skips the enumeration.
        #[arg(long, value_name = "FILE")]
        verify: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Densities of primes with a root.
    Density {
        #[command(subcommand)]
        mode: DensityMode,
    },
    /// Curve and point identities.
    Curves {
        #[command(subcommand)]
        action: CurvesAction,
    },
    /// Run every named check and report.
    #[command(name = "verify-paper", visible_alias = "verify-all")]
    Verify {
        /// Run only checks named NAME or nested under it.
        #[arg(long, value_name = "NAME")]
        only: Option<String>,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u64,
        #[arg(long, default_value_t = DEFAULT_C_SAMPLES)]
        c_samples: usize,
        /// Check groups run in parallel.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_name = "DIR", env = FIXTURES_ENV)]
        fixtures: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum DensityMode {
    /// Proportion of primes up to the bound at which the polynomial has a root.
    Sample {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u64,
        /// Worker partitions; the tally does not depend on it.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        json: bool,
    },
    /// Exact density from a group file and the points whose stabilizers are used.
    Exact {
        #[arg(long, value_name = "FILE")]
        group: PathBuf,
        /// Comma-separated points, e.g. 1,7.
        #[arg(long, value_delimiter = ',', required = true)]
        points: Vec<u32>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum CurvesAction {
    /// Check the curve equations and tabulated points.
    Verify {
        #[arg(long, value_name = "DIR", env = FIXTURES_ENV)]
        fixtures: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

/// Output bytes and exit code of a successful invocation.
pub struct Output {
    pub stdout: Vec<u8>,
    pub code: i32,
}

impl Output {
    fn ok(stdout: impl Into<Vec<u8>>) -> Self {
        Self { stdout: stdout.into(), code: 0 }
    }

    fn report(report: &RunReport, json: bool) -> Self {
        let format = if json { Format::Json } else { Format::Text };
        Self { stdout: report_emit(report, format), code: report.exit_code }
    }
}

/// Parses `args` and runs the command, writing to the given streams. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command) {
        Ok(o) => {
            let _ = out.write_all(&o.stdout);
            o.code
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

pub fn execute(cmd: Command) -> Result<Output, String> {
    match cmd {
        Command::Dynatomic { n, c, generic: _, json } => dynatomic_cmd(n, c.as_deref(), json),
        Command::Algorithm1 { n, s, verify, json } => algorithm1_cmd(n, s, verify.as_deref(), json),
        Command::Density { mode: DensityMode::Sample { poly, bound, jobs, json } } => {
            density_sample_cmd(&poly, bound, jobs, json)
        }
        Command::Density { mode: DensityMode::Exact { group, points, json } } => density_exact_cmd(&group, points, json),
        Command::Curves { action: CurvesAction::Verify { fixtures, json } } => curves_cmd(fixtures.as_deref(), json),
        Command::Verify { only, bound, c_samples, jobs, fixtures, json } => {
            let opts = SuiteOptions {
                only,
                bound,
                c_samples,
                jobs,
                fixtures: Fixtures::resolve(fixtures.as_deref())?,
            };
            Ok(Output::report(&run_suite(&opts)?, json))
        }
    }
}

fn text_or_json(json: bool, value: serde_json::Value, text: String) -> Output {
    if json {
        let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
        s.push('\n');
        Output::ok(s)
    } else {
        Output::ok(text)
    }
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn dynatomic_cmd(n: u32, c: Option<&str>, json: bool) -> Result<Output, String> {
    let map = match c {
        Some(c) => PolyMap::quadratic(&parse_rational(c).map_err(|e| e.to_string())?),
        None => PolyMap::quadratic_family(),
    };
    let d = dynatomic(&map, n).map_err(|e| e.to_string())?;
    let c_text = c.map(|c| format_rational(&parse_rational(c).expect("parsed above")));
    let value = json!({
        "n": n,
        "c": c_text.unwrap_or_else(|| "generic".into()),
        "degree": d.expected_degree,
        "phi": d.phi.to_string(),
    });
    Ok(text_or_json(json, value, format!("{}\n", d.phi)))
}

fn algorithm1_cmd(n: usize, s: u64, verify: Option<&Path>, json: bool) -> Result<Output, String> {
    let e = |e: lgp_core::Error| e.to_string();
    if let Some(path) = verify {
        let (degree, ..) = setup(n, s).map_err(e)?;
        let cands = parse_candidates(&read(path)?, degree).map_err(e)?;
        let reports = verify_candidates(n, s, &cands).map_err(e)?;
        let checks = reports
            .iter()
            .map(|r| {
                let detail = format!(
                    "order {}, I = {}, {}; {}",
                    r.order,
                    format_index_set(&r.index_set),
                    r.structure,
                    r.detail
                );
                CheckResult::new(format!("candidate/{}", r.name), format!("input ({n},{s})"), r.passed, detail)
            })
            .collect();
        let input = BTreeMap::from([
            ("n".to_string(), n.to_string()),
            ("s".to_string(), s.to_string()),
            ("verify".to_string(), path.display().to_string()),
        ]);
        return Ok(Output::report(&RunReport::new(input, checks), json));
    }
    let run = run_algorithm1(n, s).map_err(e)?;
    let pairs: Vec<serde_json::Value> = run
        .pairs
        .iter()
        .map(|p| {
            json!({
                "index_set": p.index_set.iter().collect::<Vec<_>>(),
                "structure": p.structure.to_string(),
                "order": p.fingerprint.order,
                "generators": p.group.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut text = format!(
        "input ({n},{s}): degree {}, r = {}, |W| = {}, {} subgroup classes, {} pair(s)\n",
        run.degree,
        run.r,
        run.ambient_order,
        run.class_count,
        run.pairs.len()
    );
    for p in &run.pairs {
        let gens: Vec<String> = p.group.generators().iter().map(|g| g.to_string()).collect();
        text.push_str(&format!(
            "I = {} | {} | order {} | {}\n",
            format_index_set(&p.index_set),
            p.structure,
            p.fingerprint.order,
            gens.join(" ")
        ));
    }
    let value = json!({
        "n": n,
        "s": s,
        "degree": run.degree,
        "r": run.r,
        "ambient_order": run.ambient_order.to_string(),
        "class_count": run.class_count,
        "pairs": pairs,
    });
    Ok(text_or_json(json, value, text))
}

fn density_sample_cmd(poly: &str, bound: u64, jobs: usize, json: bool) -> Result<Output, String> {
    let f = MPoly::parse(poly).map_err(|e| e.to_string())?;
    let s = sampled_density_partitioned(&f, bound, jobs.max(1)).map_err(|e| e.to_string())?;
    let value = json!({
        "poly": f.to_string(),
        "bound": bound,
        "hits": s.hits,
        "total": s.total,
        "estimate": s.estimate(),
        "standard_error": s.standard_error(),
        "excluded_primes": s.excluded_primes,
    });
    let text = format!(
        "{f}: {} / {} primes up to {bound} have a root, density ~ {:.5} (se {:.5}); excluded {:?}\n",
        s.hits,
        s.total,
        s.estimate(),
        s.standard_error(),
        s.excluded_primes
    );
    Ok(text_or_json(json, value, text))
}

fn density_exact_cmd(path: &Path, points: Vec<u32>, json: bool) -> Result<Output, String> {
    let e = |e: lgp_core::Error| e.to_string();
    let blocks = parse_blocks(&read(path)?).map_err(e)?;
    let block = blocks.first().ok_or_else(|| format!("{}: no [block] found", path.display()))?;
    let degree = block.degree().map_err(e)?;
    let group = PermGroup::new(degree, block.parse_permutations(degree).map_err(e)?).map_err(e)?;
    let order = group.order();
    let d = exact_density(&GaloisData::new(group, points.clone()).map_err(e)?).map_err(e)?;
    let value = json!({
        "group": block.name,
        "degree": degree,
        "order": order.to_string(),
        "points": points,
        "density": format_rational(&d),
    });
    let text = format!("[{}] degree {degree}, order {order}, points {points:?}: density {}\n", block.name, format_rational(&d));
    Ok(text_or_json(json, value, text))
}

fn curves_cmd(dir: Option<&Path>, json: bool) -> Result<Output, String> {
    let fx = Fixtures::resolve(dir)?;
    let points = CurvePoints::parse(&fx.curve_points).map_err(|e| e.to_string())?;
    let checks = curve_suite(&points)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|c| CheckResult::new(format!("curves/{}", c.name), "curves", c.passed, c.detail))
        .collect();
    let input = BTreeMap::from([("fixtures".to_string(), fx.source)]);
    Ok(Output::report(&RunReport::new(input, checks), json))
}
