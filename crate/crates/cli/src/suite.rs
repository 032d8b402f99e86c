//! The full verification suite: every named check, in a fixed order.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use lgp_core::algorithm1::{parse_candidates, run_algorithm1, setup, verify_candidates};
use lgp_core::arith::{format_rational, int, rat, ResultantStrategy};
use lgp_core::check::IdentityCheck;
use lgp_core::curves::{curve_suite, CurvePoints};
use lgp_core::density::{combined_bound_check, exact_corollary_checks, DENSITY_TOLERANCE};
use lgp_core::dynatomic::{
    conjugation_identity_check, disc_phi5_structure_check, discriminant_checks,
    product_identity_check, resultant_checks, special_c_factorization_checks, PolyMap,
};
use lgp_core::fixtures::{find_block, format_index_set, parse_blocks};
use lgp_core::perm::StructureTag;
use lgp_core::PermGroup;
use rayon::prelude::*;

use crate::fixtures::Fixtures;
use crate::report::{CheckResult, RunReport};

pub const DEFAULT_BOUND: u64 = 1_000_000;
pub const DEFAULT_C_SAMPLES: usize = 20;

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub only: Option<String>,
    pub bound: u64,
    pub c_samples: usize,
    pub jobs: usize,
    pub fixtures: Fixtures,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self {
            only: None,
            bound: DEFAULT_BOUND,
            c_samples: DEFAULT_C_SAMPLES,
            jobs: 1,
            fixtures: Fixtures::embedded(),
        }
    }
}

type Runner = fn(&SuiteOptions, &'static str, &'static str) -> lgp_core::Result<Vec<CheckResult>>;

/// A named group of checks run by one computation.
struct Group {
    name: &'static str,
    location: &'static str,
    run: Runner,
}

const GROUPS: &[Group] = &[
    Group { name: "dynatomic", location: "dynatomic polynomials: product and conjugation identities", run: dynatomic_group },
    Group { name: "discriminant", location: "discriminants of Phi3 and Phi4", run: discriminant_group },
    Group { name: "disc-phi5", location: "discriminant of Phi5: A(c)^4 times a fifth power", run: disc_phi5_group },
    Group { name: "resultant", location: "resultants excluding fixed points", run: resultant_group },
    Group { name: "special-c", location: "factorizations at special parameters", run: special_c_group },
    Group { name: "algorithm1-1-2", location: "Algorithm 1, input (1,2)", run: algorithm1_group },
    Group { name: "algorithm1-2-2", location: "Algorithm 1, input (2,2)", run: algorithm1_group },
    Group { name: "algorithm1-3-2", location: "Algorithm 1, input (3,2)", run: algorithm1_group },
    Group { name: "algorithm1-4-2", location: "Algorithm 1, input (4,2)", run: algorithm1_group },
    Group { name: "centralizer-5-2", location: "centralizer for input (5,2)", run: centralizer_group },
    Group { name: "appendix-5-2", location: "candidate subgroups for input (5,2)", run: appendix_group },
    Group { name: "curves", location: "curves X, C0(5), C and period-4 identities", run: curves_group },
    Group { name: "density-exact", location: "exact Chebotarev densities", run: density_exact_group },
    Group { name: "density-sampled", location: "sampled densities of P, Q and PQ", run: density_sampled_group },
];

/// Names of every check group, in run order.
pub fn group_names() -> Vec<&'static str> {
    GROUPS.iter().map(|g| g.name).collect()
}

/// `name` is selected by `filter` when equal to it or nested under it.
pub fn matches(name: &str, filter: &str) -> bool {
    name == filter
        || name
            .strip_prefix(filter)
            .is_some_and(|rest| rest.starts_with('/') || rest.starts_with('-'))
}

fn group_selected(group: &str, filter: Option<&str>) -> bool {
    match filter {
        None => true,
        Some(f) => matches(group, f) || f.strip_prefix(group).is_some_and(|r| r.starts_with('/')),
    }
}

/// Runs the selected checks. Fails only when `only` selects nothing.
pub fn run_suite(opts: &SuiteOptions) -> Result<RunReport, String> {
    let filter = opts.only.as_deref();
    let selected: Vec<&Group> = GROUPS.iter().filter(|g| group_selected(g.name, filter)).collect();
    if selected.is_empty() {
        return Err(format!(
            "no check matches `{}`; groups: {}",
            filter.unwrap_or_default(),
            group_names().join(", ")
        ));
    }
    let run_one = |g: &&Group| run_group(g, opts);
    let per_group: Vec<Vec<CheckResult>> = if opts.jobs <= 1 {
        selected.iter().map(run_one).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| e.to_string())?;
        pool.install(|| selected.par_iter().map(run_one).collect())
    };
    let checks: Vec<CheckResult> = per_group
        .into_iter()
        .flatten()
        .filter(|c| filter.is_none_or(|f| matches(&c.name, f)))
        .collect();
    if checks.is_empty() {
        return Err(format!("no check matches `{}`", filter.unwrap_or_default()));
    }
    Ok(RunReport::new(input_echo(opts), checks))
}

fn input_echo(opts: &SuiteOptions) -> BTreeMap<String, String> {
    BTreeMap::from([
        ("only".to_string(), opts.only.clone().unwrap_or_else(|| "all".into())),
        ("bound".to_string(), opts.bound.to_string()),
        ("c_samples".to_string(), opts.c_samples.to_string()),
        ("fixtures".to_string(), opts.fixtures.source.clone()),
    ])
}

/// Runs one group, turning an error into a single failed check.
fn run_group(g: &Group, opts: &SuiteOptions) -> Vec<CheckResult> {
    let t = Instant::now();
    match (g.run)(opts, g.name, g.location) {
        Ok(checks) => checks,
        Err(e) => vec![CheckResult::new(g.name, g.location, false, e.to_string()).with_elapsed(ms(t))],
    }
}

fn ms(t: Instant) -> u64 {
    t.elapsed().as_millis() as u64
}

fn from_identities(group: &str, location: &str, checks: Vec<IdentityCheck>, elapsed: u64) -> Vec<CheckResult> {
    checks
        .into_iter()
        .map(|c| CheckResult::new(format!("{group}/{}", c.name), location, c.passed, c.detail).with_elapsed(elapsed))
        .collect()
}

fn dynatomic_group(_: &SuiteOptions, group: &'static str, loc: &'static str) -> lgp_core::Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let family = PolyMap::quadratic_family();
    for n in 1..=6 {
        let t = Instant::now();
        let ok = product_identity_check(&family, n)?;
        let detail = format!("f^{n}(x) - x = product of Phi_d over d | {n}");
        out.push(CheckResult::new(format!("{group}/product-n{n}"), loc, ok, detail).with_elapsed(ms(t)));
    }
    let f = PolyMap::parse("x^2 + 1")?;
    for n in 1..=3 {
        let t = Instant::now();
        let ok = conjugation_identity_check(&f, &int(2), &int(3), n)?;
        let detail = format!("f = x^2 + 1, l(x) = 2x + 3, n = {n}");
        out.push(CheckResult::new(format!("{group}/conjugation-n{n}"), loc, ok, detail).with_elapsed(ms(t)));
    }
    Ok(out)
}

fn discriminant_group(_: &SuiteOptions, group: &'static str, loc: &'static str) -> lgp_core::Result<Vec<CheckResult>> {
    let t = Instant::now();
    let checks = discriminant_checks(ResultantStrategy::Subresultant)?;
    Ok(from_identities(group, loc, checks, ms(t)))
}

fn resultant_group(_: &SuiteOptions, group: &'static str, loc: &'static str) -> lgp_core::Result<Vec<CheckResult>> {
    let t = Instant::now();
    let checks = resultant_checks(ResultantStrategy::Subresultant)?;
    Ok(from_identities(group, loc, checks, ms(t)))
}

fn special_c_group(_: &SuiteOptions, group: &'static str, loc: &'static str) -> lgp_core::Result<Vec<CheckResult>> {
    let t = Instant::now();
    let checks = special_c_factorization_checks()?;
    Ok(from_identities(group, loc, checks, ms(t)))
}

/// `count` consecutive integers centred on zero: 20 gives -9..=10.
pub fn c_sample_values(count: usize) -> Vec<i64> {
    let lo = -(((count as i64) - 1) / 2);
    (lo..lo + count as i64).collect()
}

fn disc_phi5_group(opts: &SuiteOptions, group: &'static str, loc: &'static str) -> lgp_core::Result<Vec<CheckResult>> {
    if opts.c_samples == 0 {
        return Ok(vec![CheckResult::skipped(group, loc, "no c samples requested")]);
    }
    let t = Instant::now();
    let cs = c_sample_values(opts.c_samples);
    let samples = disc_phi5_structure_check(&cs, ResultantStrategy::Subresultant)?;
    let bad: Vec<i64> = samples.iter().filter(|s| !s.passed).map(|s| s.c).collect();
    let detail = if bad.is_empty() {
        format!("-disc/A(c)^4 is a fifth power for c in {}..={}", cs[0], cs[cs.len() - 1])
    } else {
        format!("structure fails at c = {bad:?}")
    };
    Ok(vec![CheckResult::new(group, loc, bad.is_empty(), detail).with_elapsed(ms(t))])
}

fn algorithm1_group(_: &SuiteOptions, group: &'static str, loc: &'static str) -> lgp_core::Result<Vec<CheckResult>> {
    let n: usize = group.split('-').nth(1).and_then(|s| s.parse().ok()).expect("group name carries n");
    let t = Instant::now();
    let run = run_algorithm1(n, 2)?;
    let mut problems = Vec::new();
    let want_classes = match n {
        3 => Some(9),
        4 => Some(164),
        _ => None,
    };
    if let Some(w) = want_classes {
        if run.class_count != w {
            problems.push(format!("{} classes, expected {w}", run.class_count));
        }
    }
    if n < 4 {
        if !run.pairs.is_empty() {
            problems.push(format!("{} pairs, expected none", run.pairs.len()));
        }
    } else if let [pair] = run.pairs.as_slice() {
        let fp = &pair.fingerprint;
        if !(fp.order == 4 && fp.abelian && fp.exponent == 2) {
            problems.push(format!("H has order {}, exponent {}", fp.order, fp.exponent));
        }
        if pair.index_set != BTreeSet::from([2]) {
            problems.push(format!("I = {}", format_index_set(&pair.index_set)));
        }
    } else {
        problems.push(format!("{} pairs, expected exactly one", run.pairs.len()));
    }
    let summary = match run.pairs.as_slice() {
        [] => format!("{} classes, output empty", run.class_count),
        pairs => {
            let list: Vec<String> = pairs
                .iter()
                .map(|p| format!("I = {} ({})", format_index_set(&p.index_set), p.structure))
                .collect();
            format!("{} classes, {} pair(s): {}", run.class_count, pairs.len(), list.join("; "))
        }
    };
    let detail = if problems.is_empty() { summary } else { format!("{}; {summary}", problems.join("; ")) };
    Ok(vec![CheckResult::new(group, loc, problems.is_empty(), detail).with_elapsed(ms(t))])
}

fn centralizer_group(opts: &SuiteOptions, group: &'static str, loc: &'static str) -> lgp_core::Result<Vec<CheckResult>> {
    let t = Instant::now();
    let (degree, _, pi, w) = setup(5, 2)?;
    let expected = 5u64.pow(6) * 720;
    let blocks = parse_blocks(&opts.fixtures.centralizers)?;
    let gens = find_block(&blocks, "W-5-2")?.parse_permutations(degree)?;
    let commute = gens.iter().all(|g| g.commutes_with(&pi));
    let printed = PermGroup::new(degree, gens)?;
    let ok = w.order_u64() == Some(expected) && printed.order_u64() == Some(expected) && commute;
    let detail = format!(
        "|W| = {}, tabulated generators give order {}, commute with pi: {commute}",
        w.order(),
        printed.order()
    );
    Ok(vec![CheckResult::new(group, loc, ok, detail).with_elapsed(ms(t))])
}

fn appendix_group(opts: &SuiteOptions, group: &'static str, loc: &'static str) -> lgp_core::Result<Vec<CheckResult>> {
    let t = Instant::now();
    let (degree, ..) = setup(5, 2)?;
    let cands = parse_candidates(&opts.fixtures.appendix_5_2, degree)?;
    let reports = verify_candidates(5, 2, &cands)?;
    let elapsed = ms(t);
    let mut out: Vec<CheckResult> = reports
        .iter()
        .map(|r| {
            let detail = format!(
                "order {}, I = {}, {}{}",
                r.order,
                format_index_set(&r.index_set),
                r.structure,
                if r.passed { String::new() } else { format!("; {}", r.detail) }
            );
            CheckResult::new(format!("{group}/{}", r.name), loc, r.passed, detail).with_elapsed(elapsed)
        })
        .collect();
    let mut tally: BTreeMap<(String, StructureTag), usize> = BTreeMap::new();
    for r in &reports {
        *tally.entry((format_index_set(&r.index_set), r.structure)).or_default() += 1;
    }
    let want = BTreeMap::from([
        (("{5}".to_string(), StructureTag::Z5xZ5), 10),
        (("{2,3,5}".to_string(), StructureTag::S3xZ5), 1),
        (("{2}".to_string(), StructureTag::Z2xZ2), 1),
    ]);
    if tally != want {
        let seen: Vec<String> = tally.iter().map(|((i, s), k)| format!("{k} x I = {i} ({s})")).collect();
        out.push(CheckResult::new(format!("{group}/tally"), loc, false, seen.join(", ")).with_elapsed(elapsed));
    }
    Ok(out)
}

fn curves_group(opts: &SuiteOptions, group: &'static str, loc: &'static str) -> lgp_core::Result<Vec<CheckResult>> {
    let t = Instant::now();
    let points = CurvePoints::parse(&opts.fixtures.curve_points)?;
    let checks = curve_suite(&points)?;
    Ok(from_identities(group, loc, checks, ms(t)))
}

fn density_exact_group(_: &SuiteOptions, group: &'static str, loc: &'static str) -> lgp_core::Result<Vec<CheckResult>> {
    let t = Instant::now();
    let mut out = from_identities(group, loc, exact_corollary_checks()?, ms(t));
    let sum = rat(7, 32) + rat(1, 2);
    let ok = sum == rat(23, 32) && sum < rat(1, 1);
    out.push(CheckResult::new(
        format!("{group}/sum-below-one"),
        loc,
        ok,
        format!("7/32 + 1/2 = {} < 1", format_rational(&sum)),
    ));
    Ok(out)
}

fn density_sampled_group(opts: &SuiteOptions, group: &'static str, loc: &'static str) -> lgp_core::Result<Vec<CheckResult>> {
    let t = Instant::now();
    let c = combined_bound_check(opts.bound)?;
    let elapsed = ms(t);
    let line = |label: &str, est: f64, target: f64| {
        format!("{label} ~ {est:.5} (target {target:.5}, tolerance {DENSITY_TOLERANCE}, bound {})", opts.bound)
    };
    Ok(vec![
        CheckResult::new(format!("{group}/Q"), loc, c.q_ok(), line("delta(Q)", c.q.estimate(), 0.5))
            .with_elapsed(elapsed),
        CheckResult::new(format!("{group}/P"), loc, c.p_ok(), line("delta(P)", c.p.estimate(), 7.0 / 32.0))
            .with_elapsed(elapsed),
        CheckResult::new(
            format!("{group}/PQ-union"),
            loc,
            c.tally_ok(),
            match c.per_prime_violation {
                None => format!(
                    "hits(PQ) {} = {} + {} - {} over {} primes",
                    c.pq.hits, c.p_hits_common, c.q_hits_common, c.overlap, c.pq.total
                ),
                Some(p) => format!("root of PQ mod {p} is not a root of P or Q"),
            },
        )
        .with_elapsed(elapsed),
    ])
}
