//! Command-line front end: enumeration, lattice queries, meet/join/order,
//! pair classification, diagram emission, and the verification suites.
//!
//! Exit codes: 0 on success, 1 when a verification suite finds a
//! counterexample, 2 on usage, parse, or validation errors.

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use linecon::congruence::{enumerate, CanonicalCongruence};
use linecon::error::Error;
use linecon::lattice::{
    catalog_case, common_extremes, criterion_report, join, leq, meet, rest_profile,
    CatalogCase, ClauseOutcome, RestProfile,
};
use linecon::oracle::DEFAULT_MAX_N;
use linecon::render::{
    render_folding_ascii, render_folding_svg, render_trajectory_ascii, render_trajectory_svg,
};
use linecon::trajectory::{build_trajectory, folding};
use linecon::verify::{run_suite, Suite};

#[derive(Parser)]
#[command(name = "linecon", version, about = "Congruence lattices of finite linear frames")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum LatticeFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum PairFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum DiagramKind {
    Folding,
    Trajectory,
}

#[derive(Clone, Copy, ValueEnum)]
enum DiagramFormat {
    Ascii,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// List every congruence of L_n with its derived data
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ListFormat::Table)]
        format: ListFormat,
    },
    /// Emit the congruence lattice of L_n (Hasse diagram or full dump)
    Lattice {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = LatticeFormat::Dot)]
        format: LatticeFormat,
    },
    /// Meet of two congruences
    Meet {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, value_enum, default_value_t = PairFormat::Text)]
        format: PairFormat,
    },
    /// Join of two congruences
    Join {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, value_enum, default_value_t = PairFormat::Text)]
        format: PairFormat,
    },
    /// Order test: is a ≤ b?
    Leq {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Full classification of a pair: profiles, catalog case, criterion
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, value_enum, default_value_t = PairFormat::Text)]
        format: PairFormat,
    },
    /// Render a folding or trajectory diagram
    Diagram {
        #[arg(long, value_enum)]
        kind: DiagramKind,
        #[arg(long)]
        n: usize,
        /// The congruence (folding), or the first of the pair (trajectory)
        #[arg(long)]
        a: String,
        /// Second congruence of a trajectory pair
        #[arg(long)]
        b: Option<String>,
        #[arg(long, value_enum, default_value_t = DiagramFormat::Ascii)]
        format: DiagramFormat,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Run the exhaustive verification suites
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 9)]
        max_n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

type CmdError = (u8, String);

fn usage_err(e: impl std::fmt::Display) -> CmdError {
    (2, e.to_string())
}

fn oracle_cap() -> Result<usize, CmdError> {
    match std::env::var("LINECON_MAX_N") {
        Ok(v) => v
            .parse::<usize>()
            .map_err(|e| (2, format!("LINECON_MAX_N must be an integer: {e}"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn parse_congruence(n: usize, text: &str) -> Result<CanonicalCongruence, CmdError> {
    CanonicalCongruence::parse(n, text).map_err(usage_err)
}

fn run(cmd: Command) -> Result<ExitCode, CmdError> {
    match cmd {
        Command::Enumerate { n, format } => cmd_enumerate(n, format),
        Command::Lattice { n, format } => cmd_lattice(n, format),
        Command::Meet { n, a, b, format } => cmd_meet_join(n, &a, &b, format, true),
        Command::Join { n, a, b, format } => cmd_meet_join(n, &a, &b, format, false),
        Command::Leq { n, a, b } => cmd_leq(n, &a, &b),
        Command::Classify { n, a, b, format } => cmd_classify(n, &a, &b, format),
        Command::Diagram { kind, n, a, b, format, out } => {
            cmd_diagram(kind, n, &a, b.as_deref(), format, out)
        }
        Command::Verify { suite, max_n } => cmd_verify(&suite, max_n),
    }
}

fn congruence_json(c: &CanonicalCongruence) -> Value {
    let mut record = serde_json::Map::new();
    record.insert("n".into(), json!(c.n()));
    let kind = if c.is_identity() {
        "identity"
    } else if c.is_total() {
        "total"
    } else {
        "folded"
    };
    record.insert("kind".into(), json!(kind));
    if kind == "folded" {
        record.insert("k".into(), json!(c.step()));
        record.insert("rests".into(), json!(c.rests()));
    }
    record.insert("step".into(), json!(c.step()));
    if !c.is_total() {
        record.insert("frequency".into(), json!(c.frequency()));
    }
    Value::Object(record)
}

fn join_list(items: &[usize]) -> String {
    if items.is_empty() {
        "-".to_string()
    } else {
        items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

fn cmd_enumerate(n: usize, format: ListFormat) -> Result<ExitCode, CmdError> {
    let all = enumerate(n);
    match format {
        ListFormat::Json => {
            let records: Vec<Value> = all.iter().map(congruence_json).collect();
            println!("{}", serde_json::to_string_pretty(&Value::Array(records)).unwrap());
        }
        ListFormat::Table => {
            println!("{:<14} {:>5} {:>10}  {:<16} {}", "form", "step", "frequency", "rests", "extremes");
            for c in &all {
                let freq = if c.is_total() { "-".into() } else { c.frequency().to_string() };
                let rests = if c.is_total() { "-".into() } else { join_list(&c.rests()) };
                let extremes = if c.is_total() { "-".into() } else { join_list(&c.extremes()) };
                println!("{:<14} {:>5} {:>10}  {:<16} {}", c.to_string(), c.step(), freq, rests, extremes);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_lattice(n: usize, format: LatticeFormat) -> Result<ExitCode, CmdError> {
    let elems = enumerate(n);
    let m = elems.len();
    let order: Vec<Vec<bool>> =
        elems.iter().map(|a| elems.iter().map(|b| leq(a, b)).collect()).collect();
    let mut covers: Vec<(usize, usize)> = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if i != j
                && order[i][j]
                && !(0..m).any(|t| t != i && t != j && order[i][t] && order[t][j])
            {
                covers.push((i, j));
            }
        }
    }
    match format {
        LatticeFormat::Dot => {
            println!("digraph congruence_lattice {{");
            println!("  rankdir=BT;");
            for (i, c) in elems.iter().enumerate() {
                println!("  n{i} [label=\"{c}\"];");
            }
            for (lo, hi) in &covers {
                println!("  n{lo} -> n{hi};");
            }
            println!("}}");
        }
        LatticeFormat::Json => {
            let meet_table: Vec<Vec<Value>> = elems
                .iter()
                .map(|a| {
                    elems
                        .iter()
                        .map(|b| {
                            let w = meet(a, b);
                            json!(elems.iter().position(|e| e == &w).expect("meet is enumerated"))
                        })
                        .collect()
                })
                .collect();
            let join_table: Vec<Vec<Value>> = elems
                .iter()
                .map(|a| {
                    elems
                        .iter()
                        .map(|b| {
                            let w = join(a, b);
                            json!(elems.iter().position(|e| e == &w).expect("join is enumerated"))
                        })
                        .collect()
                })
                .collect();
            let doc = json!({
                "n": n,
                "elements": elems.iter().map(congruence_json).collect::<Vec<_>>(),
                "covers": covers.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
                "meet": meet_table,
                "join": join_table,
            });
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn case_name(case: CatalogCase) -> &'static str {
    match case {
        CatalogCase::FreqOne => "freq-one",
        CatalogCase::FreqTwoMirrored => "freq-two-mirrored",
        CatalogCase::NoRests => "no-rests",
        CatalogCase::EvenTopVsOddNoRests => "even-top-vs-odd-no-rests",
        CatalogCase::BothOddTop => "both-odd-top",
        CatalogCase::SameParityBottom => "same-parity-bottom",
        CatalogCase::EvenBottomVsOddEverywhere => "even-bottom-vs-odd-everywhere",
        CatalogCase::BothEverywhere => "both-everywhere",
    }
}

fn profile_name(p: RestProfile) -> &'static str {
    match p {
        RestProfile::NoRests => "no-rests",
        RestProfile::TopOnly => "top-only",
        RestProfile::BottomOnly => "bottom-only",
        RestProfile::Everywhere => "everywhere",
        RestProfile::Irregular => "irregular",
    }
}

/// Catalog case of a pair, when both are nontrivial and one applies.
fn pair_case(a: &CanonicalCongruence, b: &CanonicalCongruence) -> Option<CatalogCase> {
    if a.is_total() || b.is_total() {
        return None;
    }
    catalog_case(a, b).ok()
}

fn describe_result(c: &CanonicalCongruence, label: &str) -> Vec<(String, Value)> {
    let mut out = vec![
        (label.to_string(), json!(c.to_string())),
        ("step".to_string(), json!(c.step())),
    ];
    if !c.is_total() {
        out.push(("frequency".to_string(), json!(c.frequency())));
    }
    out
}

fn emit_pairs(format: PairFormat, fields: Vec<(String, Value)>) {
    match format {
        PairFormat::Json => {
            let mut map = serde_json::Map::new();
            for (k, v) in fields {
                map.insert(k, v);
            }
            println!("{}", serde_json::to_string_pretty(&Value::Object(map)).unwrap());
        }
        PairFormat::Text => {
            for (k, v) in fields {
                match v {
                    Value::String(s) => println!("{k}: {s}"),
                    other => println!("{k}: {other}"),
                }
            }
        }
    }
}

fn cmd_meet_join(
    n: usize,
    a: &str,
    b: &str,
    format: PairFormat,
    is_meet: bool,
) -> Result<ExitCode, CmdError> {
    let (ca, cb) = (parse_congruence(n, a)?, parse_congruence(n, b)?);
    let result = if is_meet { meet(&ca, &cb) } else { join(&ca, &cb) };
    let mut fields = describe_result(&result, if is_meet { "meet" } else { "join" });
    if !is_meet {
        fields.push(("nontrivial".to_string(), json!(!result.is_total())));
        if let Some(case) = pair_case(&ca, &cb) {
            fields.push(("catalog-case".to_string(), json!(case_name(case))));
        }
    }
    emit_pairs(format, fields);
    Ok(ExitCode::SUCCESS)
}

fn cmd_leq(n: usize, a: &str, b: &str) -> Result<ExitCode, CmdError> {
    let (ca, cb) = (parse_congruence(n, a)?, parse_congruence(n, b)?);
    println!("{}", leq(&ca, &cb));
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(n: usize, a: &str, b: &str, format: PairFormat) -> Result<ExitCode, CmdError> {
    let (ca, cb) = (parse_congruence(n, a)?, parse_congruence(n, b)?);
    let mut fields: Vec<(String, Value)> = Vec::new();
    for (label, c) in [("a", &ca), ("b", &cb)] {
        let profile = if c.is_total() { json!(null) } else { json!(profile_name(rest_profile(c))) };
        fields.push((
            label.to_string(),
            json!({
                "form": c.to_string(),
                "step": c.step(),
                "frequency": if c.is_total() { json!(null) } else { json!(c.frequency()) },
                "profile": profile,
            }),
        ));
    }
    let joined = join(&ca, &cb);
    fields.push(("join".to_string(), json!(joined.to_string())));
    fields.push(("nontrivial".to_string(), json!(!joined.is_total())));
    if !ca.is_total() && !cb.is_total() {
        fields.push((
            "common-extremes".to_string(),
            json!(join_list(&common_extremes(&ca, &cb))),
        ));
        if let Some(case) = pair_case(&ca, &cb) {
            fields.push(("catalog-case".to_string(), json!(case_name(case))));
        }
        let report = criterion_report(&ca, &cb);
        let clauses: Vec<Value> = report
            .clauses
            .iter()
            .map(|(name, outcome)| {
                let word = match outcome {
                    ClauseOutcome::Pass => "pass",
                    ClauseOutcome::Fail => "fail",
                    ClauseOutcome::Skipped => "skipped",
                };
                json!(format!("{word}: {name}"))
            })
            .collect();
        fields.push(("criterion".to_string(), Value::Array(clauses)));
    }
    match format {
        PairFormat::Json => emit_pairs(format, fields),
        PairFormat::Text => {
            for (k, v) in fields {
                match v {
                    Value::Array(items) => {
                        println!("{k}:");
                        for item in items {
                            println!("  {}", item.as_str().unwrap_or_default());
                        }
                    }
                    Value::Object(o) => {
                        let form = o["form"].as_str().unwrap_or_default();
                        let step = &o["step"];
                        let freq = o["frequency"].as_u64().map(|f| f.to_string());
                        let profile = o["profile"].as_str();
                        let mut line = format!("{k}: {form} (step {step}");
                        if let Some(f) = freq {
                            line.push_str(&format!(", frequency {f}"));
                        }
                        if let Some(p) = profile {
                            line.push_str(&format!(", profile {p}"));
                        }
                        line.push(')');
                        println!("{line}");
                    }
                    Value::String(s) => println!("{k}: {s}"),
                    other => println!("{k}: {other}"),
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_diagram(
    kind: DiagramKind,
    n: usize,
    a: &str,
    b: Option<&str>,
    format: DiagramFormat,
    out: Option<std::path::PathBuf>,
) -> Result<ExitCode, CmdError> {
    let ca = parse_congruence(n, a)?;
    if ca.is_total() {
        return Err((2, "the total congruence has no diagram".to_string()));
    }
    let rendered = match kind {
        DiagramKind::Folding => {
            if b.is_some() {
                return Err((2, "a folding takes a single congruence".to_string()));
            }
            let f = folding(&ca);
            match format {
                DiagramFormat::Ascii => render_folding_ascii(&f),
                DiagramFormat::Svg => render_folding_svg(&f),
            }
        }
        DiagramKind::Trajectory => {
            let btext =
                b.ok_or_else(|| (2u8, "a trajectory needs --b for the second congruence".to_string()))?;
            let cb = parse_congruence(n, btext)?;
            if cb.is_total() {
                return Err((2, "the total congruence has no diagram".to_string()));
            }
            // the smaller step folds onto the vertical axis
            let (th, dl) = if ca.step() <= cb.step() { (&ca, &cb) } else { (&cb, &ca) };
            let d = build_trajectory(th, dl);
            match format {
                DiagramFormat::Ascii => render_trajectory_ascii(&d),
                DiagramFormat::Svg => render_trajectory_svg(&d),
            }
        }
    };
    match out {
        Some(path) => fs::write(&path, rendered)
            .map_err(|e| (2u8, format!("cannot write {}: {e}", path.display())))?,
        None => print!("{rendered}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(suite: &str, max_n: usize) -> Result<ExitCode, CmdError> {
    let suite = Suite::parse(suite).ok_or_else(|| {
        (
            2u8,
            format!(
                "unknown suite {suite:?}; expected one of characterization, meet, join, \
                 criterion, counting, catalog, embedding, all"
            ),
        )
    })?;
    let cap = oracle_cap()?;
    let outcomes = match run_suite(suite, max_n, cap) {
        Ok(o) => o,
        Err(e @ Error::CapExceeded { .. }) => return Err(usage_err(e)),
        Err(e) => return Err((2, e.to_string())),
    };
    let mut failed = false;
    for o in &outcomes {
        match &o.failure {
            None => println!("suite {}: PASS ({} cases)", o.name, o.cases),
            Some(msg) => {
                failed = true;
                println!("suite {}: FAIL — {msg}", o.name);
            }
        }
    }
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}
