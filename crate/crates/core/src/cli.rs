//! Command-line front end: argument parsing, dispatch and report rendering.
//!
//! Exit status is 0 when a command completes with nothing to report, 1 when
//! it completes with findings (violations, counterexample candidates, failed
//! checks) and 2 on usage or input errors. Reports go to standard output and
//! progress to standard error.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::census::{conjecture_scan, theorem_census, CensusConfig, CensusReport, ConjectureReport};
use crate::check::CheckReport;
use crate::classify::{classify, construct_threshold_example, verify_structure, Classification, Kind, RatioCheck};
use crate::error::{Error, Position, Result};
use crate::group::{build_group, catalog, verify_group_axioms, GroupTable};
use crate::set::ElemSet;
use crate::subgroup::{all_subgroups, check_coset_lemmas, Subgroup};

#[derive(Debug, Parser)]
#[command(name = "quotset", version, about = "Quotient sets A⁻¹A in finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ScanTarget {
    /// A single group spec.
    #[arg(long, conflicts_with = "max_order")]
    pub group: Option<String>,
    /// Every catalog group up to this order.
    #[arg(long)]
    pub max_order: Option<usize>,
    /// Set sizes, `a..b` (inclusive) or a single size.
    #[arg(long, value_parser = parse_sizes)]
    pub sizes: Option<RangeInclusive<usize>>,
    #[arg(long, default_value_t = default_jobs())]
    pub jobs: usize,
    /// Allow exhaustive scans of orders 25 to 32.
    #[arg(long = "i-know-this-is-big")]
    pub big: bool,
    /// Dump `(group_spec, {set})` lines for every finding.
    #[arg(long)]
    pub candidates: Option<PathBuf>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Decide the structure of one set.
    Classify {
        #[arg(long)]
        group: String,
        #[arg(long)]
        set: String,
        #[command(flatten)]
        out: Output,
    },
    /// Exhaustive verification over whole groups.
    Census {
        #[command(flatten)]
        target: ScanTarget,
        #[command(flatten)]
        out: Output,
    },
    /// Search for `(H, A₀)` structure below the `2 − 1/(n+1)` threshold.
    ConjectureScan {
        #[command(flatten)]
        target: ScanTarget,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Build `g⁻¹H ∪ H ∪ Hg` and measure it.
    ConstructExtremal {
        #[arg(long)]
        group: String,
        #[arg(long)]
        subgroup: String,
        #[arg(long = "g")]
        element: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Group axioms and coset lemmas for every subgroup (or one).
    CheckLemmas {
        #[arg(long)]
        group: String,
        #[arg(long)]
        subgroup: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// List catalog groups, or the element names of one group.
    Catalog {
        #[arg(long, default_value_t = crate::group::EXTENDED_CATALOG_ORDER)]
        max_order: usize,
        #[arg(long)]
        group: Option<String>,
        #[command(flatten)]
        out: Output,
    },
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn parse_sizes(text: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| format!("bad size {s:?}"));
    let range = match text.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?,
        None => {
            let k = num(text)?;
            k..=k
        }
    };
    if range.start() > range.end() || *range.start() == 0 {
        return Err(format!("empty or zero-based size range {text:?}"));
    }
    Ok(range)
}

/// Parses `{i, j, ...}` into a set over `g`; duplicates collapse.
pub fn parse_set_spec(text: &str, g: &GroupTable) -> Result<ElemSet> {
    let syntax = |offset: usize, message: &str| Error::Syntax {
        position: Position {
            line: 1,
            column: offset + 1,
        },
        message: message.to_string(),
    };
    let trimmed_start = text.len() - text.trim_start().len();
    let body = text.trim();
    let inner = body
        .strip_prefix('{')
        .ok_or_else(|| syntax(trimmed_start, "expected '{'"))?
        .strip_suffix('}')
        .ok_or_else(|| syntax(trimmed_start + body.len().saturating_sub(1), "expected '}'"))?;
    let mut set = ElemSet::new(g.order());
    if inner.trim().is_empty() {
        return Ok(set);
    }
    let mut offset = trimmed_start + 1;
    for item in inner.split(',') {
        let lead = item.len() - item.trim_start().len();
        let token = item.trim();
        let id: usize = token
            .parse()
            .map_err(|_| syntax(offset + lead, &format!("expected an element id, found {token:?}")))?;
        set.insert(g.element(id)?);
        offset += item.len() + 1;
    }
    Ok(set)
}

/// Result of one command: exit status and the rendered report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub report: String,
}

fn render<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> String {
    match format {
        // Value maps are ordered, which sorts every key.
        Format::Json => {
            let v = serde_json::to_value(value).expect("reports serialize");
            let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
            s.push('\n');
            s
        }
        Format::Text => text(),
    }
}

fn finish(findings: usize, report: String, out: &Output) -> Result<Outcome> {
    let code = i32::from(findings > 0);
    if let Some(path) = &out.output {
        std::fs::write(path, &report).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        return Ok(Outcome {
            code,
            report: String::new(),
        });
    }
    Ok(Outcome { code, report })
}

fn ratio_text(r: &RatioCheck) -> String {
    let rel = if r.is_small() {
        "<"
    } else if r.is_threshold() {
        "="
    } else {
        ">"
    };
    format!("3|Q| = {} {rel} 5|A| = {}", r.three_q, r.five_a)
}

fn checks_text(out: &mut String, title: &str, r: &CheckReport) {
    let _ = writeln!(out, "{title}:");
    let _ = write!(out, "{r}");
}

fn classify_cmd(group: &str, set: &str, out: &Output) -> Result<Outcome> {
    let g = build_group(group)?;
    let a = parse_set_spec(set, &g)?;
    let subs = all_subgroups(&g)?;
    let c = classify(&g, &a, &subs)?;
    let moreover = match c.kind {
        Kind::CondI | Kind::CondII => Some(verify_structure(&g, &a, &c)?),
        _ => None,
    };
    let findings = usize::from(c.kind == Kind::TheoremViolation)
        + moreover.as_ref().map_or(0, |r| r.failures().count());
    let value = json!({
        "group": g.spec(),
        "set": a,
        "classification": c,
        "moreover": moreover,
        "findings": findings,
    });
    let report = render(out.format, &value, || classify_text(&g, &a, &c, moreover.as_ref()));
    finish(findings, report, out)
}

fn classify_text(g: &GroupTable, a: &ElemSet, c: &Classification, moreover: Option<&CheckReport>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "group: {}", g.spec());
    let _ = writeln!(s, "set: {a}");
    let _ = writeln!(s, "quotient: {} (size {})", c.quotient, c.quotient.len());
    let _ = writeln!(s, "ratio: {}", ratio_text(&c.ratio));
    let _ = writeln!(s, "kind: {:?}", c.kind);
    if let Some(h) = &c.subgroup {
        let _ = writeln!(s, "subgroup: {} (order {})", h.elements(), h.order());
    }
    if let (Some(x), Some(y)) = (c.a, c.b) {
        let _ = writeln!(s, "representatives: a = {x} ({}), b = {y} ({})", g.name(x), g.name(y));
    }
    if let Some(r) = moreover {
        checks_text(&mut s, "structure", r);
    }
    s
}

fn scan_groups(target: &ScanTarget) -> Result<Vec<GroupTable>> {
    match (&target.group, target.max_order) {
        (Some(spec), None) => Ok(vec![build_group(spec)?]),
        (None, Some(max)) => catalog(max).iter().map(|s| build_group(s)).collect(),
        _ => Err(Error::Precondition("give exactly one of --group or --max-order".into())),
    }
}

fn scan_config(target: &ScanTarget) -> Result<CensusConfig> {
    if target.jobs == 0 {
        return Err(Error::Precondition("--jobs must be at least 1".into()));
    }
    Ok(CensusConfig {
        sizes: target.sizes.clone(),
        jobs: target.jobs,
        allow_big: target.big,
        ..CensusConfig::from_env()?
    })
}

fn write_candidates(target: &ScanTarget, lines: &[String]) -> Result<()> {
    if let Some(path) = &target.candidates {
        let mut body = lines.join("\n");
        if !body.is_empty() {
            body.push('\n');
        }
        std::fs::write(path, body).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn census_cmd(target: &ScanTarget, out: &Output) -> Result<Outcome> {
    let groups = scan_groups(target)?;
    let config = scan_config(target)?;
    let mut reports = Vec::with_capacity(groups.len());
    for g in &groups {
        eprintln!("census: {} (order {})", g.spec(), g.order());
        reports.push(theorem_census(g, &config)?);
    }
    let findings: usize = reports.iter().map(|r| r.violations.len()).sum();
    let lines: Vec<String> = reports
        .iter()
        .flat_map(|r| r.violations.iter().map(move |v| format!("({}, {})", r.group_spec, v.set)))
        .collect();
    write_candidates(target, &lines)?;
    let value = json!({ "reports": reports, "findings": findings });
    let report = render(out.format, &value, || {
        let mut s = String::new();
        for r in &reports {
            census_text(&mut s, r);
        }
        let _ = writeln!(s, "total violations: {findings}");
        s
    });
    finish(findings, report, out)
}

fn census_text(s: &mut String, r: &CensusReport) {
    let _ = writeln!(s, "group: {} (order {})", r.group_spec, r.order);
    let _ = writeln!(s, "  sizes: {}..{}", r.sizes.0, r.sizes.1);
    let _ = writeln!(s, "  subsets scanned: {}", r.subsets_scanned);
    let _ = writeln!(s, "  canonical classes: {}", r.canonical_classes);
    let _ = writeln!(
        s,
        "  small classes: {} (condition i: {}, condition ii: {})",
        r.small_classes, r.cond_i_classes, r.cond_ii_classes
    );
    let _ = writeln!(s, "  min |A⁻¹A| by |A|:");
    for row in &r.min_quotient_by_size {
        let _ = writeln!(
            s,
            "    {:>3} -> {:>3}  ({} classes, e.g. {})",
            row.size, row.min_quotient, row.extremal_classes, row.extremal_set
        );
    }
    if r.violations.is_empty() {
        let _ = writeln!(s, "  violations: none");
    } else {
        let _ = writeln!(s, "  violations: {}", r.violations.len());
        for v in &r.violations {
            let _ = writeln!(s, "    {} {:?}: {}", v.set, v.kind, v.detail);
        }
    }
}

fn conjecture_cmd(target: &ScanTarget, n: usize, out: &Output) -> Result<Outcome> {
    let groups = scan_groups(target)?;
    let config = scan_config(target)?;
    let mut reports = Vec::with_capacity(groups.len());
    for g in &groups {
        eprintln!("conjecture-scan n={n}: {} (order {})", g.spec(), g.order());
        reports.push(conjecture_scan(g, n, &config)?);
    }
    let findings: usize = reports.iter().map(ConjectureReport::findings).sum();
    let lines: Vec<String> = reports
        .iter()
        .flat_map(|r| {
            r.counterexamples
                .iter()
                .chain(&r.sharpness_violations)
                .map(move |a| format!("({}, {a})", r.group_spec))
        })
        .collect();
    write_candidates(target, &lines)?;
    let value = json!({ "reports": reports, "findings": findings, "n": n });
    let report = render(out.format, &value, || {
        let mut s = String::new();
        for r in &reports {
            conjecture_text(&mut s, r);
        }
        let _ = writeln!(s, "total findings: {findings}");
        s
    });
    finish(findings, report, out)
}

fn conjecture_text(s: &mut String, r: &ConjectureReport) {
    let _ = writeln!(s, "group: {} (order {}), n = {}", r.group_spec, r.order, r.n);
    let _ = writeln!(s, "  canonical classes: {}", r.canonical_classes);
    let _ = writeln!(
        s,
        "  below threshold: {} (witnessed {})",
        r.qualifying_classes, r.witnessed_classes
    );
    let label = if r.fatal { "counterexamples (fatal)" } else { "counterexample candidates" };
    let _ = writeln!(s, "  {label}: {}", r.counterexamples.len());
    for a in &r.counterexamples {
        let _ = writeln!(s, "    {a}");
    }
    let _ = writeln!(
        s,
        "  sharpness: {} checked, {} violations",
        r.sharpness_checked,
        r.sharpness_violations.len()
    );
    for a in &r.sharpness_violations {
        let _ = writeln!(s, "    {a}");
    }
    let _ = writeln!(s, "  note: {}", r.note);
}

fn parse_subgroup(g: &GroupTable, text: &str) -> Result<Subgroup> {
    Subgroup::from_set(g, parse_set_spec(text, g)?)
}

fn extremal_cmd(group: &str, subgroup: &str, element: usize, out: &Output) -> Result<Outcome> {
    let g = build_group(group)?;
    let h = parse_subgroup(&g, subgroup)?;
    let x = g.element(element)?;
    let a = construct_threshold_example(&g, &h, x)?;
    let c = classify(&g, &a, &all_subgroups(&g)?)?;
    let findings = usize::from(!c.ratio.is_threshold() || c.kind != Kind::NotSmall);
    let value = json!({
        "group": g.spec(),
        "subgroup": h,
        "g": x,
        "set": a,
        "quotient": c.quotient,
        "ratio": c.ratio,
        "kind": c.kind,
        "findings": findings,
    });
    let report = render(out.format, &value, || {
        let mut s = String::new();
        let _ = writeln!(s, "group: {}", g.spec());
        let _ = writeln!(s, "H = {}, g = {x} ({})", h.elements(), g.name(x));
        let _ = writeln!(s, "A = {a} (size {})", a.len());
        let _ = writeln!(s, "quotient: {} (size {})", c.quotient, c.quotient.len());
        let _ = writeln!(s, "ratio: {}", ratio_text(&c.ratio));
        let _ = writeln!(s, "kind: {:?}", c.kind);
        s
    });
    finish(findings, report, out)
}

#[derive(Serialize)]
struct LemmaEntry {
    subgroup: Subgroup,
    checks: CheckReport,
}

fn lemmas_cmd(group: &str, subgroup: Option<&str>, out: &Output) -> Result<Outcome> {
    let g = build_group(group)?;
    let axioms = verify_group_axioms(&g);
    let subgroups: Vec<Subgroup> = match subgroup {
        Some(text) => vec![parse_subgroup(&g, text)?],
        None => all_subgroups(&g)?.as_slice().to_vec(),
    };
    let entries = subgroups
        .into_iter()
        .map(|h| {
            let checks = check_coset_lemmas(&g, &h)?;
            Ok(LemmaEntry { subgroup: h, checks })
        })
        .collect::<Result<Vec<_>>>()?;
    let findings = axioms.failures().count() + entries.iter().map(|e| e.checks.failures().count()).sum::<usize>();
    let value = json!({
        "group": g.spec(),
        "axioms": axioms,
        "subgroups": entries,
        "findings": findings,
    });
    let report = render(out.format, &value, || {
        let mut s = String::new();
        let _ = writeln!(s, "group: {} (order {})", g.spec(), g.order());
        checks_text(&mut s, "axioms", &axioms);
        for e in &entries {
            checks_text(&mut s, &format!("H = {}", e.subgroup.elements()), &e.checks);
        }
        let _ = writeln!(s, "failures: {findings}");
        s
    });
    finish(findings, report, out)
}

fn catalog_cmd(max_order: usize, group: Option<&str>, out: &Output) -> Result<Outcome> {
    if let Some(spec) = group {
        let g = build_group(spec)?;
        let names: Vec<Value> = g
            .elements()
            .map(|x| json!({ "id": x, "name": g.name(x), "inverse": g.inv(x) }))
            .collect();
        let value = json!({ "group": g.spec(), "order": g.order(), "elements": names });
        let report = render(out.format, &value, || {
            let mut s = format!("{} (order {})\n", g.spec(), g.order());
            for x in g.elements() {
                let _ = writeln!(s, "{:>4}  {}", x.index(), g.name(x));
            }
            s
        });
        return finish(0, report, out);
    }
    let rows = catalog(max_order)
        .into_iter()
        .map(|spec| {
            let g = build_group(&spec)?;
            Ok((spec, g.order(), g.is_abelian()))
        })
        .collect::<Result<Vec<_>>>()?;
    let value: Vec<Value> = rows
        .iter()
        .map(|(spec, order, abelian)| json!({ "spec": spec, "order": order, "abelian": abelian }))
        .collect();
    let report = render(out.format, &value, || {
        let mut s = String::new();
        for (spec, order, abelian) in &rows {
            let _ = writeln!(s, "{order:>3}  {}  {spec}", if *abelian { "ab " } else { "nab" });
        }
        s
    });
    finish(0, report, out)
}

/// Runs a parsed command. Input errors come back as `Err`; the caller maps
/// them to exit status 2.
pub fn run_command(command: &Command) -> Result<Outcome> {
    match command {
        Command::Classify { group, set, out } => classify_cmd(group, set, out),
        Command::Census { target, out } => census_cmd(target, out),
        Command::ConjectureScan { target, n, out } => conjecture_cmd(target, *n, out),
        Command::ConstructExtremal {
            group,
            subgroup,
            element,
            out,
        } => extremal_cmd(group, subgroup, *element, out),
        Command::CheckLemmas { group, subgroup, out } => lemmas_cmd(group, subgroup.as_deref(), out),
        Command::Catalog { max_order, group, out } => catalog_cmd(*max_order, group.as_deref(), out),
    }
}

/// Parses `args` (program name first) and runs the command. Usage and input
/// errors are rendered into the report with status 2.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome {
                code,
                report: e.to_string(),
            };
        }
    };
    match run_command(&cli.command) {
        Ok(outcome) => outcome,
        Err(e) => Outcome {
            code: 2,
            report: format!("error: {e}\n"),
        },
    }
}
