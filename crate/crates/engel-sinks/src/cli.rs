//! Command-line front door: `analyze` one group, `scan` the corpus, run
//! `padic` experiments. The binary in `src/main.rs` is a thin shim over
//! [`run`]; everything here is plain library code so the same entry
//! points are testable in-process.
//!
//! Exit code contract: 0 = clean, 1 = a claim violation was found,
//! 2 = usage or input error.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::{self, GroupSpec};
use crate::engel::{
    check_hall_commutator_covering, check_iterated_commutator_normality,
    check_normal_nilpotent_extension, harvest_coprime_instances, verify_main_theorem,
    HallCoveringOutcome, LemmaOutcome, TheoremReport,
};
use crate::group::{prime_factors, BuildOptions, GroupTable};
use crate::padic::{
    commutator_submodule_index, diagonal_sink_rank, unit_group_structure, RankOutcome,
    SubmoduleIndex, TruncatedPadicUnit, MAX_PRECISION,
};

/// Environment variable overriding the group size cap.
pub const SIZE_CAP_ENV: &str = "ENGEL_SIZE_CAP";

const USAGE: &str = "\
usage:
  engel-sinks analyze <id-or-file> [--sinks] [--lemmas TAGS] [--pretty] [--no-envelope] [--out PATH]
  engel-sinks scan [--all] [--filter EXPR[,EXPR..]] [--lemmas TAGS] [--jobs N] [--sinks] [--pretty] [--no-envelope] [--out PATH]
  engel-sinks padic index -p P -b B -n N -k K [--pretty]
  engel-sinks padic aut -p P -k K [--pretty]
  engel-sinks padic rank2 -p P -ba B1 -bb B2 -n N -k K [--pretty]

scan filters: order<=N order<N order>=N order>N order=N family=NAME id=NAME
claim tags for --lemmas: 2.1, 2.3, 2.5, 3.5, ord (default: all)
";

/// Library entry point for the binary: parses, executes, prints, and
/// returns the exit code.
pub fn run(args: &[String]) -> i32 {
    match execute(args) {
        Ok(outcome) => {
            let text = outcome.rendered;
            match outcome.out_path {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return 2;
                    }
                }
                None => println!("{text}"),
            }
            outcome.exit_code
        }
        Err(message) => {
            eprintln!("error: {message}");
            eprint!("{USAGE}");
            2
        }
    }
}

struct CommandOutcome {
    rendered: String,
    exit_code: i32,
    out_path: Option<PathBuf>,
}

fn execute(args: &[String]) -> Result<CommandOutcome, String> {
    let mut args = args.iter().map(String::as_str);
    let command = args.next().ok_or("missing command")?;
    let rest: Vec<&str> = args.collect();
    match command {
        "analyze" => cmd_analyze(&rest),
        "scan" => cmd_scan(&rest),
        "padic" => cmd_padic(&rest),
        "help" | "--help" | "-h" => Ok(CommandOutcome {
            rendered: USAGE.trim_end().to_string(),
            exit_code: 0,
            out_path: None,
        }),
        other => Err(format!("unknown command {other:?}")),
    }
}

fn build_options() -> BuildOptions {
    let mut opts = BuildOptions::default();
    if let Ok(cap) = std::env::var(SIZE_CAP_ENV) {
        if let Ok(cap) = cap.parse::<usize>() {
            opts.size_cap = cap;
        }
    }
    opts
}

// ---------------------------------------------------------------- claims

/// The selectable claim suites beyond the core run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ClaimSuites {
    pub coprime: bool,       // 2.1
    pub complement: bool,    // 2.3 (already part of the core run)
    pub hall_covering: bool, // 2.5
    pub normality: bool,     // 3.5
    pub extension: bool,     // ord
}

impl ClaimSuites {
    pub fn all() -> Self {
        ClaimSuites {
            coprime: true,
            complement: true,
            hall_covering: true,
            normality: true,
            extension: true,
        }
    }

    pub fn parse(tags: &str) -> Result<Self, String> {
        let mut suites = ClaimSuites::default();
        for tag in tags.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match tag {
                "2.1" => suites.coprime = true,
                "2.3" => suites.complement = true,
                "2.5" => suites.hall_covering = true,
                "3.5" => suites.normality = true,
                "ord" => suites.extension = true,
                other => return Err(format!("unknown claim tag {other:?}")),
            }
        }
        Ok(suites)
    }
}

/// Runs the core verification plus the selected claim suites on one
/// group, merging every outcome into the report's claim map.
pub fn analyze_group(group: &GroupTable, id: &str, suites: &ClaimSuites) -> TheoremReport {
    let mut report = verify_main_theorem(group, id);

    if suites.coprime {
        let instances = harvest_coprime_instances(group, 8);
        let outcome = if instances.is_empty() {
            LemmaOutcome::Inconclusive
        } else if instances.iter().all(|inst| inst.run_checks().all_pass()) {
            LemmaOutcome::Pass
        } else {
            LemmaOutcome::Fail
        };
        report.lemmas.insert("2.1".to_string(), outcome);
    }

    if suites.hall_covering {
        let outcome = if !group.is_metanilpotent() {
            LemmaOutcome::Inconclusive
        } else {
            let mut verdict = LemmaOutcome::Pass;
            for (p, _) in prime_factors(group.order()) {
                match check_hall_commutator_covering(group, p, None) {
                    Ok(HallCoveringOutcome::Pass) => {}
                    Ok(HallCoveringOutcome::Inconclusive) => {
                        if verdict == LemmaOutcome::Pass {
                            verdict = LemmaOutcome::Inconclusive;
                        }
                    }
                    Ok(HallCoveringOutcome::Fail) | Err(_) => {
                        verdict = LemmaOutcome::Fail;
                        break;
                    }
                }
            }
            verdict
        };
        report.lemmas.insert("2.5".to_string(), outcome);
    }

    if suites.normality {
        let outcome = if !group.is_metabelian() {
            LemmaOutcome::Inconclusive
        } else {
            let all_normal = (0..group.order()).all(|g| {
                check_iterated_commutator_normality(group, g, 5).unwrap_or(false)
            });
            if all_normal {
                LemmaOutcome::Pass
            } else {
                LemmaOutcome::Fail
            }
        };
        report.lemmas.insert("3.5".to_string(), outcome);
    }

    if suites.extension {
        report
            .lemmas
            .insert("ord".to_string(), extension_suite(group));
    }

    report
}

/// The `ord` suite: take the Fitting subgroup as the normal nilpotent
/// base, pick the first element generating the group over it, and check
/// the bounded-class and series-containment facts for depths 1..=3.
fn extension_suite(group: &GroupTable) -> LemmaOutcome {
    let base = group.fitting_subgroup();
    let found = (0..group.order()).find(|&a| {
        let mut seeds = base.elements().to_vec();
        seeds.push(a);
        group
            .subgroup_closure(&seeds)
            .map(|h| h.is_full())
            .unwrap_or(false)
    });
    let Some(a) = found else {
        return LemmaOutcome::Inconclusive;
    };
    for n in 1..=3 {
        match check_normal_nilpotent_extension(group, &base, a, n) {
            Ok(report) => {
                if report.minimal_series_index.is_none() {
                    return LemmaOutcome::Fail;
                }
                if let Some(bound) = report.engel_bound {
                    if !bound.holds {
                        return LemmaOutcome::Fail;
                    }
                }
            }
            Err(_) => return LemmaOutcome::Inconclusive,
        }
    }
    LemmaOutcome::Pass
}

// ---------------------------------------------------------------- report

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct AggregateCounts {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

/// The document `analyze` and `scan` emit. Per-group bodies carry no
/// timestamps; the envelope does, and `--no-envelope` drops it.
#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub version: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
    pub groups: Vec<TheoremReport>,
    pub aggregate: BTreeMap<String, AggregateCounts>,
    pub violations: Vec<String>,
}

impl ReportDocument {
    pub fn from_reports(reports: Vec<TheoremReport>, envelope: bool) -> Self {
        let mut aggregate: BTreeMap<String, AggregateCounts> = BTreeMap::new();
        let mut violations = Vec::new();
        for report in &reports {
            for (claim, outcome) in &report.lemmas {
                let counts = aggregate.entry(claim.clone()).or_default();
                match outcome {
                    LemmaOutcome::Pass => counts.pass += 1,
                    LemmaOutcome::Fail => {
                        counts.fail += 1;
                        violations.push(format!("{}: {}", report.group, claim));
                    }
                    LemmaOutcome::Inconclusive => counts.inconclusive += 1,
                }
            }
        }
        let (version, timestamp) = if envelope {
            (
                Some(env!("CARGO_PKG_VERSION").to_string()),
                Some(
                    SystemTime::now()
                        .duration_since(UNIX_EPOCH)
                        .map(|d| d.as_secs())
                        .unwrap_or(0),
                ),
            )
        } else {
            (None, None)
        };
        ReportDocument {
            version,
            timestamp,
            groups: reports,
            aggregate,
            violations,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.violations.is_empty() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_pretty_text(&self) -> String {
        let mut out = String::new();
        for report in &self.groups {
            out.push_str(&format!(
                "{:<12} order {:>5}  hypothesis {}  gamma_inf {} ({})\n",
                report.group,
                report.order,
                if report.hypothesis { "yes" } else { "no " },
                report.gamma_inf.order,
                if report.gamma_inf.cyclic {
                    "cyclic"
                } else {
                    "non-cyclic"
                },
            ));
            let claims: Vec<String> = report
                .lemmas
                .iter()
                .map(|(k, v)| format!("{k}={}", v.as_str()))
                .collect();
            out.push_str(&format!("             {}\n", claims.join("  ")));
            for w in &report.sinks {
                out.push_str(&format!(
                    "             sink g={} size={} gen_order={} cyclic={}\n",
                    w.g, w.size, w.gen_order, w.cyclic
                ));
            }
        }
        out.push_str("claims:\n");
        for (claim, counts) in &self.aggregate {
            out.push_str(&format!(
                "  {:<8} pass {:>3}  fail {:>3}  inconclusive {:>3}\n",
                claim, counts.pass, counts.fail, counts.inconclusive
            ));
        }
        if self.violations.is_empty() {
            out.push_str("violations: none\n");
        } else {
            out.push_str(&format!("violations: {}\n", self.violations.join(", ")));
        }
        out
    }
}

// ---------------------------------------------------------------- analyze

struct CommonFlags {
    sinks: bool,
    pretty: bool,
    envelope: bool,
    out: Option<PathBuf>,
    suites: ClaimSuites,
}

fn cmd_analyze(args: &[&str]) -> Result<CommandOutcome, String> {
    let mut source: Option<String> = None;
    let mut flags = CommonFlags {
        sinks: false,
        pretty: false,
        envelope: true,
        out: None,
        suites: ClaimSuites::all(),
    };
    let mut it = args.iter().copied();
    while let Some(arg) = it.next() {
        match arg {
            "--sinks" => flags.sinks = true,
            "--pretty" => flags.pretty = true,
            "--no-envelope" => flags.envelope = false,
            "--lemmas" => {
                let tags = it.next().ok_or("--lemmas needs a tag list")?;
                flags.suites = ClaimSuites::parse(tags)?;
            }
            "--out" => {
                flags.out = Some(PathBuf::from(it.next().ok_or("--out needs a path")?));
            }
            other if !other.starts_with('-') && source.is_none() => {
                source = Some(other.to_string());
            }
            other => return Err(format!("unexpected argument {other:?}")),
        }
    }
    let source = source.ok_or("analyze needs a group id or file path")?;
    let opts = build_options();
    let (group, id) = resolve_source(&source, &opts)?;
    let mut report = analyze_group(&group, &id, &flags.suites);
    if !flags.sinks {
        report.sinks.clear();
    }
    let document = ReportDocument::from_reports(vec![report], flags.envelope);
    Ok(render_document(document, &flags))
}

fn resolve_source(source: &str, opts: &BuildOptions) -> Result<(GroupTable, String), String> {
    if let Some(spec) = corpus::find_builtin(source) {
        let group =
            corpus::make_group(&spec, opts).map_err(|e| format!("building {source}: {e}"))?;
        return Ok((group, spec.id()));
    }
    let path = PathBuf::from(source);
    if path.exists() {
        let group = corpus::load_group(&path, opts).map_err(|e| format!("{source}: {e}"))?;
        return Ok((group, source.to_string()));
    }
    Err(format!(
        "{source:?} is neither a built-in group id nor a readable file"
    ))
}

fn render_document(document: ReportDocument, flags: &CommonFlags) -> CommandOutcome {
    let rendered = if flags.pretty {
        document.to_pretty_text()
    } else {
        document.to_json()
    };
    CommandOutcome {
        exit_code: document.exit_code(),
        rendered,
        out_path: flags.out.clone(),
    }
}

// ---------------------------------------------------------------- scan

/// One conjunct of a scan filter expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FilterClause {
    OrderLe(usize),
    OrderLt(usize),
    OrderGe(usize),
    OrderGt(usize),
    OrderEq(usize),
    Family(String),
    Id(String),
}

impl FilterClause {
    fn parse(text: &str) -> Result<Self, String> {
        let fail = || format!("cannot parse filter clause {text:?}");
        if let Some(rest) = text.strip_prefix("order") {
            let (op, value) = if let Some(v) = rest.strip_prefix("<=") {
                ("<=", v)
            } else if let Some(v) = rest.strip_prefix(">=") {
                (">=", v)
            } else if let Some(v) = rest.strip_prefix('<') {
                ("<", v)
            } else if let Some(v) = rest.strip_prefix('>') {
                (">", v)
            } else if let Some(v) = rest.strip_prefix('=') {
                ("=", v)
            } else {
                return Err(fail());
            };
            let value: usize = value.trim().parse().map_err(|_| fail())?;
            return Ok(match op {
                "<=" => FilterClause::OrderLe(value),
                "<" => FilterClause::OrderLt(value),
                ">=" => FilterClause::OrderGe(value),
                ">" => FilterClause::OrderGt(value),
                _ => FilterClause::OrderEq(value),
            });
        }
        if let Some(v) = text.strip_prefix("family=") {
            return Ok(FilterClause::Family(v.trim().to_string()));
        }
        if let Some(v) = text.strip_prefix("id=") {
            return Ok(FilterClause::Id(v.trim().to_string()));
        }
        Err(fail())
    }

    fn matches(&self, spec: &GroupSpec, order: usize) -> bool {
        match self {
            FilterClause::OrderLe(v) => order <= *v,
            FilterClause::OrderLt(v) => order < *v,
            FilterClause::OrderGe(v) => order >= *v,
            FilterClause::OrderGt(v) => order > *v,
            FilterClause::OrderEq(v) => order == *v,
            FilterClause::Family(f) => spec.family() == f,
            FilterClause::Id(id) => spec.id() == *id,
        }
    }
}

/// Scans the built-in corpus: builds every group, applies the filter,
/// analyzes the survivors (in parallel when `jobs > 1`), and merges the
/// results in corpus order.
pub fn scan_corpus(
    filter: &[FilterClause],
    suites: &ClaimSuites,
    jobs: usize,
    keep_sinks: bool,
    envelope: bool,
) -> Result<ReportDocument, String> {
    let opts = build_options();
    let specs = corpus::builtin_corpus();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| format!("thread pool: {e}"))?;
    let reports: Result<Vec<Option<TheoremReport>>, String> = pool.install(|| {
        specs
            .par_iter()
            .map(|spec| {
                let group = corpus::make_group(spec, &opts)
                    .map_err(|e| format!("building {}: {e}", spec.id()))?;
                if !filter.iter().all(|c| c.matches(spec, group.order())) {
                    return Ok(None);
                }
                let mut report = analyze_group(&group, &spec.id(), suites);
                if !keep_sinks {
                    report.sinks.clear();
                }
                Ok(Some(report))
            })
            .collect()
    });
    let reports: Vec<TheoremReport> = reports?.into_iter().flatten().collect();
    Ok(ReportDocument::from_reports(reports, envelope))
}

fn cmd_scan(args: &[&str]) -> Result<CommandOutcome, String> {
    let mut filter: Vec<FilterClause> = Vec::new();
    let mut jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let mut flags = CommonFlags {
        sinks: false,
        pretty: false,
        envelope: true,
        out: None,
        suites: ClaimSuites::all(),
    };
    let mut it = args.iter().copied();
    while let Some(arg) = it.next() {
        match arg {
            "--all" => filter.clear(),
            "--filter" => {
                let expr = it.next().ok_or("--filter needs an expression")?;
                for clause in expr.split(',').map(str::trim).filter(|c| !c.is_empty()) {
                    filter.push(FilterClause::parse(clause)?);
                }
            }
            "--lemmas" => {
                let tags = it.next().ok_or("--lemmas needs a tag list")?;
                flags.suites = ClaimSuites::parse(tags)?;
            }
            "--jobs" => {
                let n = it.next().ok_or("--jobs needs a count")?;
                jobs = n
                    .parse::<usize>()
                    .ok()
                    .filter(|&n| n >= 1)
                    .ok_or_else(|| format!("bad job count {n:?}"))?;
            }
            "--sinks" => flags.sinks = true,
            "--pretty" => flags.pretty = true,
            "--no-envelope" => flags.envelope = false,
            "--out" => {
                flags.out = Some(PathBuf::from(it.next().ok_or("--out needs a path")?));
            }
            other => return Err(format!("unexpected argument {other:?}")),
        }
    }
    let document = scan_corpus(&filter, &flags.suites, jobs, flags.sinks, flags.envelope)?;
    Ok(render_document(document, &flags))
}

// ---------------------------------------------------------------- padic

#[derive(Serialize)]
struct PadicIndexOutput {
    p: u64,
    b: String,
    n: u64,
    k_requested: u32,
    k_used: u32,
    outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    e: Option<u64>,
}

#[derive(Serialize)]
struct PadicAutOutput {
    p: u64,
    k: u32,
    order: String,
    invariant_factors: Vec<String>,
    elementary_divisors: Vec<String>,
    display: String,
}

#[derive(Serialize)]
struct PadicRankOutput {
    p: u64,
    ba: String,
    bb: String,
    n: u64,
    k_requested: u32,
    k_used: u32,
    outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    rank: Option<usize>,
}

fn cmd_padic(args: &[&str]) -> Result<CommandOutcome, String> {
    let mut it = args.iter().copied();
    let sub = it.next().ok_or("padic needs a subcommand: index, aut, or rank2")?;
    let rest: Vec<&str> = it.collect();
    let mut pretty = false;
    let mut values: BTreeMap<&str, String> = BTreeMap::new();
    let mut flag_it = rest.iter().copied();
    while let Some(arg) = flag_it.next() {
        match arg {
            "--pretty" => pretty = true,
            "-p" | "-b" | "-n" | "-k" | "-ba" | "-bb" => {
                let value = flag_it
                    .next()
                    .ok_or_else(|| format!("{arg} needs a value"))?;
                values.insert(&arg[1..], value.to_string());
            }
            other => return Err(format!("unexpected argument {other:?}")),
        }
    }
    let want = |key: &str| -> Result<String, String> {
        values
            .get(key)
            .cloned()
            .ok_or_else(|| format!("missing -{key}"))
    };
    let parse_u64 = |key: &str| -> Result<u64, String> {
        want(key)?
            .parse::<u64>()
            .map_err(|_| format!("-{key} must be a nonnegative integer"))
    };
    let parse_u32 = |key: &str| -> Result<u32, String> {
        want(key)?
            .parse::<u32>()
            .map_err(|_| format!("-{key} must be a nonnegative integer"))
    };
    let parse_big = |key: &str| -> Result<BigUint, String> {
        want(key)?
            .parse::<BigUint>()
            .map_err(|_| format!("-{key} must be a nonnegative integer"))
    };

    match sub {
        "index" => {
            let p = parse_u64("p")?;
            let b = parse_big("b")?;
            let n = parse_u64("n")?.max(1);
            let k = parse_u32("k")?;
            // retry with doubled precision while the ceiling is hit
            let mut k_used = k;
            let (outcome, e) = loop {
                let unit =
                    TruncatedPadicUnit::new(p, k_used, b.clone()).map_err(|e| e.to_string())?;
                // a raw residue b != 1 that reduces to 1 at this precision
                // is a truncation artifact, not a central action
                let truncated_to_one = unit.is_central() && b != BigUint::from(1u8);
                match commutator_submodule_index(&unit, n) {
                    SubmoduleIndex::Central if !truncated_to_one => break ("central", None),
                    SubmoduleIndex::Exponent(e) => break ("index", Some(e)),
                    _ => {
                        if k_used >= MAX_PRECISION {
                            break ("precision-exhausted", None);
                        }
                        k_used = (k_used * 2).min(MAX_PRECISION);
                    }
                }
            };
            let output = PadicIndexOutput {
                p,
                b: b.to_string(),
                n,
                k_requested: k,
                k_used,
                outcome: outcome.to_string(),
                e,
            };
            let rendered = if pretty {
                match output.e {
                    Some(e) => format!("e={e} (submodule index {p}^{e}, precision {p}^{})", output.k_used),
                    None => format!("{} (precision {p}^{})", output.outcome, output.k_used),
                }
            } else {
                serde_json::to_string_pretty(&output).expect("serializes")
            };
            Ok(CommandOutcome {
                rendered,
                exit_code: 0,
                out_path: None,
            })
        }
        "aut" => {
            let p = parse_u64("p")?;
            let k = parse_u32("k")?;
            let structure = unit_group_structure(p, k).map_err(|e| e.to_string())?;
            let output = PadicAutOutput {
                p,
                k,
                order: structure.order.to_string(),
                invariant_factors: structure
                    .invariant_factors
                    .iter()
                    .map(|d| d.to_string())
                    .collect(),
                elementary_divisors: structure
                    .elementary_divisors
                    .iter()
                    .map(|d| d.to_string())
                    .collect(),
                display: structure.display(),
            };
            let rendered = if pretty {
                output.display.clone()
            } else {
                serde_json::to_string_pretty(&output).expect("serializes")
            };
            Ok(CommandOutcome {
                rendered,
                exit_code: 0,
                out_path: None,
            })
        }
        "rank2" => {
            let p = parse_u64("p")?;
            let ba = parse_big("ba")?;
            let bb = parse_big("bb")?;
            let n = parse_u64("n")?.max(1);
            let k = parse_u32("k")?;
            let mut k_used = k;
            let one = BigUint::from(1u8);
            let (outcome, rank) = loop {
                let unit_a =
                    TruncatedPadicUnit::new(p, k_used, ba.clone()).map_err(|e| e.to_string())?;
                let unit_b =
                    TruncatedPadicUnit::new(p, k_used, bb.clone()).map_err(|e| e.to_string())?;
                let truncated_to_one = (unit_a.is_central() && ba != one)
                    || (unit_b.is_central() && bb != one);
                match diagonal_sink_rank(&unit_a, &unit_b, n).map_err(|e| e.to_string())? {
                    RankOutcome::Rank(r) if !truncated_to_one => break ("rank", Some(r)),
                    _ => {
                        if k_used >= MAX_PRECISION {
                            break ("precision-exhausted", None);
                        }
                        k_used = (k_used * 2).min(MAX_PRECISION);
                    }
                }
            };
            let output = PadicRankOutput {
                p,
                ba: ba.to_string(),
                bb: bb.to_string(),
                n,
                k_requested: k,
                k_used,
                outcome: outcome.to_string(),
                rank,
            };
            let rendered = if pretty {
                match output.rank {
                    Some(r) => format!("rank={r} (precision {p}^{})", output.k_used),
                    None => format!("{} (precision {p}^{})", output.outcome, output.k_used),
                }
            } else {
                serde_json::to_string_pretty(&output).expect("serializes")
            };
            Ok(CommandOutcome {
                rendered,
                exit_code: 0,
                out_path: None,
            })
        }
        other => Err(format!("unknown padic subcommand {other:?}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_tags_parse() {
        let suites = ClaimSuites::parse("2.1,2.5").unwrap();
        assert!(suites.coprime && suites.hall_covering);
        assert!(!suites.normality && !suites.extension);
        assert!(ClaimSuites::parse("7.7").is_err());
    }

    #[test]
    fn filters_parse_and_match() {
        let spec = GroupSpec::Symmetric(4);
        let clause = FilterClause::parse("order<=24").unwrap();
        assert!(clause.matches(&spec, 24));
        assert!(!FilterClause::parse("order<24").unwrap().matches(&spec, 24));
        assert!(FilterClause::parse("family=symmetric").unwrap().matches(&spec, 24));
        assert!(FilterClause::parse("id=S4").unwrap().matches(&spec, 24));
        assert!(FilterClause::parse("bogus").is_err());
    }

    #[test]
    fn analyze_s3_in_process() {
        let args: Vec<String> = ["analyze", "S3", "--sinks", "--no-envelope"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let outcome = execute(&args).unwrap();
        assert_eq!(outcome.exit_code, 0);
        assert!(outcome.rendered.contains("\"group\": \"S3\""));
        assert!(outcome.rendered.contains("\"hypothesis\": true"));
        // six sink rows
        assert_eq!(outcome.rendered.matches("\"gen_order\"").count(), 6);
    }

    #[test]
    fn scan_filtered_is_clean() {
        let filter = vec![FilterClause::parse("order<=24").unwrap()];
        let doc = scan_corpus(&filter, &ClaimSuites::parse("2.3").unwrap(), 2, false, false).unwrap();
        assert!(doc.violations.is_empty());
        assert!(doc.groups.iter().all(|g| g.order <= 24));
        assert!(!doc.groups.is_empty());
    }

    #[test]
    fn aggregate_counts_sum_over_groups() {
        let doc = scan_corpus(
            &[FilterClause::parse("order<=30").unwrap()],
            &ClaimSuites::all(),
            2,
            false,
            false,
        )
        .unwrap();
        for (claim, counts) in &doc.aggregate {
            let total: usize = doc
                .groups
                .iter()
                .filter(|g| g.lemmas.contains_key(claim))
                .count();
            assert_eq!(counts.pass + counts.fail + counts.inconclusive, total);
        }
        assert_eq!(doc.exit_code(), 0);
    }

    #[test]
    fn violations_flip_the_exit_code() {
        use crate::engel::{GammaInfFacts, TheoremReport};
        use std::collections::BTreeMap;
        let mut lemmas = BTreeMap::new();
        lemmas.insert("theorem".to_string(), LemmaOutcome::Fail);
        let fake = TheoremReport {
            group: "X".into(),
            order: 1,
            hypothesis: true,
            sinks: Vec::new(),
            gamma_inf: GammaInfFacts {
                order: 1,
                cyclic: true,
            },
            lemmas,
        };
        let doc = ReportDocument::from_reports(vec![fake], false);
        assert_eq!(doc.violations, vec!["X: theorem".to_string()]);
        assert_eq!(doc.exit_code(), 1);
    }

    #[test]
    fn scan_is_deterministic_across_job_counts() {
        let suites = ClaimSuites::parse("2.3").unwrap();
        let filter = vec![FilterClause::parse("order<=30").unwrap()];
        let a = scan_corpus(&filter, &suites, 1, false, false).unwrap();
        let b = scan_corpus(&filter, &suites, 4, false, false).unwrap();
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn padic_subcommands_in_process() {
        let run = |args: &[&str]| {
            let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
            execute(&args).unwrap()
        };
        let outcome = run(&["padic", "index", "-p", "3", "-b", "4", "-n", "2", "-k", "8"]);
        assert!(outcome.rendered.contains("\"e\": 2"));
        let outcome = run(&["padic", "aut", "-p", "3", "-k", "3", "--pretty"]);
        assert_eq!(outcome.rendered, "C2 x C9");
        let outcome = run(&[
            "padic", "rank2", "-p", "3", "-ba", "4", "-bb", "7", "-n", "1", "-k", "6",
        ]);
        assert!(outcome.rendered.contains("\"rank\": 2"));
    }

    #[test]
    fn padic_rejects_non_units() {
        let args: Vec<String> = ["padic", "index", "-p", "3", "-b", "6", "-n", "1", "-k", "4"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert!(execute(&args).is_err());
    }

    #[test]
    fn unknown_claim_tag_is_usage_error() {
        let args: Vec<String> = ["scan", "--lemmas", "9.9"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert!(execute(&args).is_err());
    }

    #[test]
    fn precision_retry_reports_effective_k() {
        // v_3(10 - 1) = 2, n = 2 needs k > 4: requesting k = 2 retries up
        let args: Vec<String> = ["padic", "index", "-p", "3", "-b", "10", "-n", "2", "-k", "2"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let outcome = execute(&args).unwrap();
        assert!(outcome.rendered.contains("\"e\": 4"));
        assert!(outcome.rendered.contains("\"k_used\": 8"));
    }
}
