//! `liecomb`: exact root-system tables, parabolic subquotients, height
//! gates, numerical canonical-reduction checks, and the G2 matrix suite.
//!
//! Exit codes: 0 = verified / positive verdict, 1 = negative verdict
//! (not canonical, check failed, or counterexample assembled), 2 = usage or
//! input error. All output is deterministic: fixed orderings, fixed default
//! seed, exact rationals rendered as `p/q`.

mod output;

use clap::{Args, Parser, Subcommand};
use liecomb_core::finite::FieldCtx;
use liecomb_core::g2case::{self, CounterexampleStatus};
use liecomb_core::height::{ht_table, literature_bound, min_safe_char};
use liecomb_core::linalg::{parse_rat, rat_str};
use liecomb_core::parabolic::ParabolicType;
use liecomb_core::rootsys::{IndexSet, LieType, RootSystem};
use liecomb_core::sampling::SplitMix64;
use liecomb_core::slopecalc::{
    check_canonical, chi_projection_check, n_deg_relation_check, parabolic_of_slope, SlopeDatum,
};
use liecomb_core::Error as CoreError;
use num_traits::Signed;
use output::{print_csv, print_json, print_table, OutputFormat};
use serde_json::json;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "liecomb",
    about = "Exact-arithmetic root systems, height tables and canonical-reduction checks",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the positive roots of a simple type (A1..A*, B/C/D, E6/E7/E8, F4, G2)
    Roots {
        /// Type label, e.g. G2, E8, A3
        lie_type: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Height table for the maximal parabolics: |omega_k|, argmax root, Ht
    Heights {
        lie_type: String,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Numerical canonical-reduction check for a slope datum
    Canonical(CanonicalArgs),
    /// Chi-projection and n-deg identities, swept or for one case
    ChiCheck(ChiCheckArgs),
    /// The explicit G2 suite
    G2 {
        #[command(subcommand)]
        sub: G2Command,
    },
}

#[derive(Args)]
struct CanonicalArgs {
    #[arg(long = "type")]
    lie_type: String,
    /// Comma-separated rational degrees of the simple roots, e.g. 0,1 or 0,1/2
    #[arg(long, allow_hyphen_values = true)]
    delta: String,
    /// Parabolic type as comma-separated simple indices; defaults to
    /// {i : delta_i > 0} (which requires a dominant delta)
    #[arg(long = "S")]
    s: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

#[derive(Args)]
struct ChiCheckArgs {
    #[arg(long = "type")]
    lie_type: String,
    /// Sweep every nonempty S and every single-root enlargement
    #[arg(long, conflicts_with_all = ["s", "o"])]
    all: bool,
    #[arg(long = "S", requires = "o")]
    s: Option<String>,
    /// Enlargement subset o (connected, inside S)
    #[arg(long = "o", requires = "s")]
    o: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: OutputFormat,
}

#[derive(Subcommand)]
enum G2Command {
    /// Torus weights, homomorphism spot checks, adjoint blocks, decomposition
    Analyze {
        #[arg(long, default_value_t = 2)]
        char: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Formal degree ledger and the assembled counterexample chain
    Ledger {
        #[arg(long)]
        genus: i64,
        #[arg(long, default_value_t = 2)]
        char: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Additivity of the U_(-2,-1) one-parameter subgroup
    OneParam {
        #[arg(long, default_value = "F4")]
        field: String,
        /// Sample this many pairs instead of the exhaustive sweep
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
}

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn build(label: &str) -> Result<RootSystem, CoreError> {
    RootSystem::build(LieType::parse(label)?)
}

fn parse_index_set(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad index `{p}`"))
        })
        .collect()
}

fn parse_delta(s: &str, rank: usize) -> Result<SlopeDatum, String> {
    let parts: Result<Vec<_>, _> = s
        .split(',')
        .map(|p| parse_rat(p).map_err(|e| e.to_string()))
        .collect();
    let parts = parts?;
    if parts.len() != rank {
        return Err(format!(
            "delta has {} entries, expected {rank}",
            parts.len()
        ));
    }
    Ok(SlopeDatum(parts))
}

fn main() -> ExitCode {
    // die quietly when stdout is a closed pipe (e.g. `liecomb roots E8 | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match cli.command {
        Command::Roots { lie_type, format } => cmd_roots(&lie_type, format),
        Command::Heights { lie_type, format } => cmd_heights(&lie_type, format),
        Command::Canonical(args) => cmd_canonical(&args),
        Command::ChiCheck(args) => cmd_chi_check(&args),
        Command::G2 { sub } => match sub {
            G2Command::Analyze { char, seed, format } => cmd_g2_analyze(char, seed, format),
            G2Command::Ledger {
                genus,
                char,
                format,
            } => cmd_g2_ledger(genus, char, format),
            G2Command::OneParam {
                field,
                trials,
                seed,
                format,
            } => cmd_g2_one_param(&field, trials, seed, format),
        },
    }
}

fn cmd_roots(label: &str, format: OutputFormat) -> ExitCode {
    let rs = match build(label) {
        Ok(rs) => rs,
        Err(e) => return usage_error(e),
    };
    match format {
        OutputFormat::Json => print_json(&rs.to_json()),
        OutputFormat::Csv => {
            let mut headers = vec!["idx".to_string(), "height".to_string()];
            headers.extend((1..=rs.rank()).map(|i| format!("k{i}")));
            let headers: Vec<&str> = headers.iter().map(|s| s.as_str()).collect();
            let rows: Vec<Vec<String>> = rs
                .positive_roots()
                .iter()
                .enumerate()
                .map(|(ix, r)| {
                    let mut row = vec![ix.to_string(), r.height().to_string()];
                    row.extend(r.coords().iter().map(|k| k.to_string()));
                    row
                })
                .collect();
            print_csv(&headers, &rows);
        }
        OutputFormat::Text => {
            println!(
                "{}: {} positive roots",
                rs.lie_type().label(),
                rs.positive_roots().len()
            );
            let rows: Vec<Vec<String>> = rs
                .positive_roots()
                .iter()
                .enumerate()
                .map(|(ix, r)| vec![ix.to_string(), r.height().to_string(), r.to_string()])
                .collect();
            print_table(&["idx", "height", "root"], &rows);
        }
    }
    ExitCode::from(EXIT_OK)
}

fn cmd_heights(label: &str, format: OutputFormat) -> ExitCode {
    let rs = match build(label) {
        Ok(rs) => rs,
        Err(e) => return usage_error(e),
    };
    let rows = ht_table(&rs).expect("height table");
    let (ht_max, gate) = min_safe_char(&rs).expect("gate");
    let lit = literature_bound(rs.lie_type());
    match format {
        OutputFormat::Json => {
            print_json(&json!({
                "type": rs.lie_type().label(),
                "rows": rows.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
                "ht_max": rat_str(&ht_max),
                "min_safe_char": gate,
                "literature_bound": lit,
            }));
        }
        OutputFormat::Csv => {
            let table: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.k.to_string(),
                        rat_str(&r.omega_norm),
                        r.argmax_root.to_string(),
                        rat_str(&r.ht),
                    ]
                })
                .collect();
            print_csv(&["k", "omega_norm", "argmax_root", "ht"], &table);
        }
        OutputFormat::Text => {
            println!("{} height table", rs.lie_type().label());
            let table: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.k.to_string(),
                        rat_str(&r.omega_norm),
                        r.argmax_root.to_string(),
                        rat_str(&r.ht),
                    ]
                })
                .collect();
            print_table(&["k", "|omega_k|", "argmax root", "Ht"], &table);
            println!("max height: {}", rat_str(&ht_max));
            match lit {
                Some(b) => println!("low-height gate: char >= {gate} (literature bound: > {b})"),
                None => println!("low-height gate: char >= {gate}"),
            }
        }
    }
    ExitCode::from(EXIT_OK)
}

fn cmd_canonical(args: &CanonicalArgs) -> ExitCode {
    let rs = match build(&args.lie_type) {
        Ok(rs) => rs,
        Err(e) => return usage_error(e),
    };
    let delta = match parse_delta(&args.delta, rs.rank()) {
        Ok(d) => d,
        Err(e) => return usage_error(e),
    };
    let parabolic = match &args.s {
        Some(raw) => {
            let s = match parse_index_set(raw) {
                Ok(s) => s,
                Err(e) => return usage_error(e),
            };
            match ParabolicType::new(&rs, s) {
                Ok(p) => p,
                Err(e) => return usage_error(e),
            }
        }
        None => match parabolic_of_slope(&rs, &delta) {
            Ok(p) => p,
            Err(e) => return usage_error(e),
        },
    };
    let verdict = check_canonical(&parabolic, &delta).expect("verdict");
    match args.format {
        OutputFormat::Json => print_json(&verdict.to_json()),
        OutputFormat::Csv => {
            let mut rows = vec![
                vec![
                    "is_canonical".into(),
                    String::new(),
                    verdict.is_canonical.to_string(),
                ],
                vec![
                    "s_degrees_positive".into(),
                    String::new(),
                    verdict.s_degrees_positive.to_string(),
                ],
                vec![
                    "levi_degrees_zero".into(),
                    String::new(),
                    verdict.levi_degrees_zero.to_string(),
                ],
            ];
            for (o, n) in &verdict.invariants {
                rows.push(vec!["invariant".into(), format!("{o:?}"), rat_str(n)]);
            }
            for (w, d) in &verdict.gp_degrees {
                rows.push(vec!["gp_degree".into(), w.to_string(), rat_str(d)]);
            }
            print_csv(&["fact", "key", "value"], &rows);
        }
        OutputFormat::Text => {
            println!(
                "{} S={:?} delta=({})",
                rs.lie_type().label(),
                verdict.s,
                args.delta
            );
            println!(
                "delta > 0 on S: {};  delta = 0 on Levi: {}",
                verdict.s_degrees_positive, verdict.levi_degrees_zero
            );
            for (o, n) in &verdict.invariants {
                println!("n(P, o={o:?}) = {}", rat_str(n));
            }
            let rows: Vec<Vec<String>> = verdict
                .gp_degrees
                .iter()
                .map(|(w, d)| vec![w.to_string(), rat_str(d)])
                .collect();
            print_table(&["g/p weight", "degree"], &rows);
            if verdict.is_canonical {
                println!("verdict: canonical");
            } else {
                println!("verdict: NOT canonical ({})", verdict.violations.join("; "));
            }
        }
    }
    if verdict.is_canonical {
        ExitCode::from(EXIT_OK)
    } else {
        ExitCode::from(EXIT_NEGATIVE)
    }
}

fn cmd_chi_check(args: &ChiCheckArgs) -> ExitCode {
    let rs = match build(&args.lie_type) {
        Ok(rs) => rs,
        Err(e) => return usage_error(e),
    };
    let n = rs.rank();
    let mut cases: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    if args.all {
        for mask in 1u64..(1 << n) {
            let s: Vec<usize> = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            for &i in &s {
                cases.push((s.clone(), vec![i]));
            }
        }
    } else {
        match (&args.s, &args.o) {
            (Some(s), Some(o)) => {
                let s = match parse_index_set(s) {
                    Ok(v) => v,
                    Err(e) => return usage_error(e),
                };
                let o = match parse_index_set(o) {
                    Ok(v) => v,
                    Err(e) => return usage_error(e),
                };
                cases.push((s, o));
            }
            _ => return usage_error("pass --all, or both --S and --o"),
        }
    }

    let mut rng = SplitMix64::new(args.seed);
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut json_cases = Vec::new();
    let mut all_ok = true;
    for (s, o) in cases {
        let p = match ParabolicType::new(&rs, s.clone()) {
            Ok(p) => p,
            Err(e) => return usage_error(e),
        };
        let oset: IndexSet = o.iter().copied().collect();
        let proj = match chi_projection_check(&p, &oset) {
            Ok(r) => r,
            Err(e) => return usage_error(e),
        };
        let samples: Vec<SlopeDatum> = (0..10)
            .map(|_| SlopeDatum((0..n).map(|_| rng.rational(8, 5)).collect()))
            .collect();
        let nd = n_deg_relation_check(&p, &oset, &samples).expect("valid o");
        let ok = proj.ok && proj.c.as_ref().map(|c| c.is_positive()).unwrap_or(false) && nd.ok;
        all_ok &= ok;
        rows.push(vec![
            format!("{s:?}"),
            format!("{o:?}"),
            proj.c.as_ref().map(rat_str).unwrap_or_default(),
            nd.c_prime.as_ref().map(rat_str).unwrap_or_default(),
            ok.to_string(),
        ]);
        json_cases.push(json!({
            "S": s,
            "o": o,
            "c": proj.c.as_ref().map(rat_str),
            "c_prime": nd.c_prime.as_ref().map(rat_str),
            "ok": ok,
        }));
    }
    match args.format {
        OutputFormat::Json => print_json(&json!({
            "type": rs.lie_type().label(),
            "cases": json_cases,
            "all_ok": all_ok,
        })),
        OutputFormat::Csv => print_csv(&["S", "o", "c", "c_prime", "ok"], &rows),
        OutputFormat::Text => {
            println!(
                "{} chi identities ({} cases)",
                rs.lie_type().label(),
                rows.len()
            );
            print_table(&["S", "o", "c", "c'", "ok"], &rows);
            println!("all ok: {all_ok}");
        }
    }
    if all_ok {
        ExitCode::from(EXIT_OK)
    } else {
        ExitCode::from(EXIT_NEGATIVE)
    }
}

fn cmd_g2_analyze(char_p: u64, seed: u64, format: OutputFormat) -> ExitCode {
    let analysis = match g2case::analyze(char_p, 100, seed) {
        Ok(a) => a,
        Err(e) => return usage_error(e),
    };
    match format {
        OutputFormat::Json => print_json(&analysis.to_json()),
        OutputFormat::Csv => {
            let mut rows = vec![vec![
                "torus_weights".to_string(),
                analysis.torus.field.clone(),
                analysis.torus.ok.to_string(),
            ]];
            for h in &analysis.homomorphisms {
                rows.push(vec![
                    "homomorphism".into(),
                    h.field.clone(),
                    (h.ok && h.dets_one).to_string(),
                ]);
            }
            if let Some(adj) = &analysis.adjoint {
                rows.push(vec![
                    "adjoint_blocks".into(),
                    format!("{:?}", adj.exponents),
                    adj.ok.to_string(),
                ]);
            }
            if let Some(op) = &analysis.one_param {
                rows.push(vec![
                    "one_param".into(),
                    op.field.clone(),
                    op.ok.to_string(),
                ]);
            }
            print_csv(&["check", "detail", "ok"], &rows);
        }
        OutputFormat::Text => {
            println!("G2 matrix suite, characteristic {char_p}");
            println!(
                "torus weights over {}: {} ({} weights, eps = {})",
                analysis.torus.field,
                if analysis.torus.ok { "ok" } else { "FAILED" },
                analysis.torus.weights.len(),
                analysis
                    .torus
                    .eps
                    .map(|e| e.to_string())
                    .unwrap_or_default()
            );
            for h in &analysis.homomorphisms {
                println!(
                    "homomorphism + det=1 over {}: {} ({} pairs)",
                    h.field,
                    if h.ok && h.dets_one { "ok" } else { "FAILED" },
                    h.pairs
                );
            }
            if let Some(adj) = &analysis.adjoint {
                println!(
                    "adjoint blocks: {} (torus exponents {:?})",
                    if adj.ok { "ok" } else { "FAILED" },
                    adj.exponents
                );
            }
            if let Some(op) = &analysis.one_param {
                println!(
                    "one-param over {}: {} ({} pairs{})",
                    op.field,
                    if op.ok { "ok" } else { "FAILED" },
                    op.pairs_checked,
                    if op.exhaustive { ", exhaustive" } else { "" }
                );
            }
            for (name, d) in [
                ("t(P) = {2}", &analysis.p2_decomposition),
                ("t(P) = {1}", &analysis.p1_decomposition),
            ] {
                let sizes: Vec<String> = d
                    .pieces
                    .iter()
                    .map(|(p, ht)| {
                        format!(
                            "level {} (dim {}, ht {})",
                            p.level,
                            p.weights.len(),
                            rat_str(ht)
                        )
                    })
                    .collect();
                println!(
                    "{name}: {}; low-height failures at p={char_p}: {:?}",
                    sizes.join(", "),
                    d.flagged_levels
                );
            }
            println!("overall: {}", if analysis.ok { "ok" } else { "FAILED" });
        }
    }
    if analysis.ok {
        ExitCode::from(EXIT_OK)
    } else {
        ExitCode::from(EXIT_NEGATIVE)
    }
}

fn cmd_g2_ledger(genus: i64, char_p: u64, format: OutputFormat) -> ExitCode {
    if genus <= 1 {
        return usage_error(format!("genus must be > 1, got {genus}"));
    }
    let report = match g2case::counterexample_report(genus, char_p) {
        Ok(r) => r,
        Err(e) => return usage_error(e),
    };
    let ledger = g2case::instabil_ledger();
    match format {
        OutputFormat::Json => {
            let mut v = report.to_json();
            v["symbolic"] = ledger.to_json();
            print_json(&v);
        }
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = report
                .narrative
                .iter()
                .map(|verdict| {
                    vec![
                        verdict.claim.clone(),
                        verdict.status.as_str().to_string(),
                        verdict.basis.clone(),
                    ]
                })
                .collect();
            print_csv(&["claim", "status", "detail"], &rows);
        }
        OutputFormat::Text => {
            println!("degree ledger (symbolic in the genus g):");
            let rows: Vec<Vec<String>> = ledger
                .entries
                .iter()
                .map(|e| vec![e.label.clone(), e.rank.to_string(), e.degree.to_string()])
                .collect();
            print_table(&["bundle", "rank", "degree"], &rows);
            println!("slope of the twist: {}", ledger.slope_of_twist.text());
            println!();
            println!("at genus {genus}, characteristic {char_p}:");
            let rows: Vec<Vec<String>> = report
                .ledger
                .entries
                .iter()
                .map(|(l, r, d)| vec![l.clone(), r.to_string(), d.to_string()])
                .collect();
            print_table(&["bundle", "rank", "degree"], &rows);
            println!(
                "slope = {} ({})",
                rat_str(&report.ledger.slope_value),
                if report.ledger.slope_negative {
                    "negative"
                } else {
                    "not negative"
                }
            );
            println!(
                "delta = {}, canonical: {}, low-height flags: {:?}",
                report
                    .delta
                    .0
                    .iter()
                    .map(rat_str)
                    .collect::<Vec<_>>()
                    .join(","),
                report.canonical.is_canonical,
                report.flagged_levels
            );
            for v in &report.narrative {
                println!("[{}] {}", v.status.as_str(), v.claim);
            }
            match report.status {
                CounterexampleStatus::Violation => println!("counterexample assembled"),
                CounterexampleStatus::NoViolation => println!("no violation claimed"),
            }
        }
    }
    match report.status {
        CounterexampleStatus::Violation => ExitCode::from(EXIT_NEGATIVE),
        CounterexampleStatus::NoViolation => ExitCode::from(EXIT_OK),
    }
}

fn cmd_g2_one_param(
    field: &str,
    trials: Option<usize>,
    seed: u64,
    format: OutputFormat,
) -> ExitCode {
    let field = match FieldCtx::parse(field) {
        Ok(f) => f,
        Err(e) => return usage_error(e),
    };
    let report = match g2case::one_param_check(&field, trials, seed) {
        Ok(r) => r,
        Err(e) => return usage_error(e),
    };
    match format {
        OutputFormat::Json => print_json(&report.to_json()),
        OutputFormat::Csv => print_csv(
            &["field", "pairs_checked", "exhaustive", "ok"],
            &[vec![
                report.field.clone(),
                report.pairs_checked.to_string(),
                report.exhaustive.to_string(),
                report.ok.to_string(),
            ]],
        ),
        OutputFormat::Text => {
            println!(
                "one-param additivity over {}: {} ({} pairs{})",
                report.field,
                if report.ok { "ok" } else { "FAILED" },
                report.pairs_checked,
                if report.exhaustive {
                    ", exhaustive"
                } else {
                    ""
                }
            );
            if let Some(f) = &report.failure {
                println!("failure: {f}");
            }
        }
    }
    if report.ok {
        ExitCode::from(EXIT_OK)
    } else {
        ExitCode::from(EXIT_NEGATIVE)
    }
}
