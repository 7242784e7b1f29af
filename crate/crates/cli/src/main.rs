//! `gdisp`: dispersion statistics of graphs at the command line.
//!
//! Exit status: 0 success, 1 usage or input error, 2 verification
//! failure, 3 numeric (eigensolver) failure.

mod output;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use graph_dispersion::closed_form::{self, FamilyStats, LimitValue};
use graph_dispersion::dispersion::{self, DispersionError, DispersionReport};
use graph_dispersion::extremal::{self, ExtremalError, Objective};
use graph_dispersion::families::{self, FamilySpec};
use graph_dispersion::spectral::SpectralError;
use graph_dispersion::verify::{self, Suite};
use graph_dispersion::graph6::{self, Graph6Record};
use graph_dispersion::{clustering, Rational};
use output::{
    fmt_f64, json_f64, limit_cell, limit_value, object, print_csv, rational_f64,
    rational_string, to_json_string,
};
use serde_json::Value;
use std::io::Read;

#[derive(Parser)]
#[command(name = "gdisp", version, about = "Spectral and degree dispersion statistics of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dispersion statistics of one family member.
    FamilyStats(FamilyStatsArgs),
    /// Limits-table reproduction: closed-form limits vs. finite-size values.
    LimitsTable(LimitsTableArgs),
    /// Run an invariant suite and print pass/fail per invariant.
    Verify(VerifyArgs),
    /// Exhaustive extremal search over all connected graphs of one order.
    Search(SearchArgs),
    /// Per-graph reports for a graph6 stream.
    Stats(StatsArgs),
    /// Direct vs. closed-form clustering of a complete split graph.
    Clustering(ClusteringArgs),
}

#[derive(Args)]
struct FamilyStatsArgs {
    /// complete-minus-edge | tripartite | complete-split | kite |
    /// regular-kite | star | cartesian-power
    #[arg(long)]
    family: String,
    /// Integer parameters of the family constructor.
    #[arg(long, value_delimiter = ',', required = true)]
    params: Vec<usize>,
    /// Base family for cartesian-power.
    #[arg(long)]
    base_family: Option<String>,
    #[arg(long, value_delimiter = ',')]
    base_params: Vec<usize>,
    /// Numeric route only (eigensolver on the realized graph).
    #[arg(long, conflicts_with_all = ["analytic", "both"])]
    numeric: bool,
    /// Analytic route only (closed forms).
    #[arg(long, conflicts_with = "both")]
    analytic: bool,
    /// Both routes (default).
    #[arg(long)]
    both: bool,
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct LimitsTableArgs {
    /// Ratio parameters for the S(n,kn) row (one table row per k).
    #[arg(long, value_delimiter = ',', default_values_t = vec![1.0])]
    k: Vec<f64>,
    /// Family sizes at which each row is evaluated.
    #[arg(long, value_delimiter = ',', default_values_t = vec![2000usize])]
    n: Vec<usize>,
    /// Head regularity of the P_nG_n^r row.
    #[arg(long, default_value_t = 4)]
    r: usize,
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// bounds | oracle | product | clustering
    #[arg(long)]
    suite: String,
    /// Order cap for the exhaustive scans.
    #[arg(long, default_value_t = 6)]
    n_max: usize,
}

#[derive(Args)]
struct SearchArgs {
    /// Graph order; 2..=7 for the built-in enumeration.
    #[arg(long)]
    n: usize,
    /// max-ce | max-cd | min-gamma
    #[arg(long)]
    objective: String,
    /// Scan a graph6 stream (file or `-`) instead of the built-in
    /// enumeration; all graphs must have order `--n`.
    #[arg(long)]
    graph6: Option<String>,
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct StatsArgs {
    /// Path to a graph6 file, or `-` for stdin (one graph per line).
    #[arg(long)]
    graph6: String,
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct ClusteringArgs {
    /// Only `complete-split` is supported.
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: u64,
    #[arg(long)]
    m: u64,
    #[arg(long)]
    csv: bool,
}

/// Application error carrying its exit code.
#[derive(Debug)]
enum AppError {
    Usage(String),
    Verification(String),
    Numeric(String),
}

impl std::fmt::Display for AppError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AppError::Usage(m) | AppError::Verification(m) | AppError::Numeric(m) => {
                write!(f, "{m}")
            }
        }
    }
}

impl AppError {
    fn code(&self) -> i32 {
        match self {
            AppError::Usage(_) => 1,
            AppError::Verification(_) => 2,
            AppError::Numeric(_) => 3,
        }
    }
}

fn classify_dispersion(err: DispersionError) -> AppError {
    match err {
        DispersionError::Spectral(SpectralError::NoConvergence { .. }) => {
            AppError::Numeric(err.to_string())
        }
        other => AppError::Usage(other.to_string()),
    }
}

fn classify_extremal(err: ExtremalError) -> AppError {
    match err {
        ExtremalError::ObjectiveFailed { ref source, .. } => match source {
            DispersionError::Spectral(SpectralError::NoConvergence { .. }) => {
                AppError::Numeric(err.to_string())
            }
            _ => AppError::Usage(err.to_string()),
        },
        other => AppError::Usage(other.to_string()),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            eprint!("{e}");
            std::process::exit(1);
        }
    };
    let result = match cli.command {
        Command::FamilyStats(args) => family_stats(args),
        Command::LimitsTable(args) => limits_table(args),
        Command::Verify(args) => run_verify(args),
        Command::Search(args) => run_search(args),
        Command::Stats(args) => run_stats(args),
        Command::Clustering(args) => run_clustering(args),
    };
    match result {
        Ok(()) => {}
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(err.code());
        }
    }
}

fn parse_family_spec(
    family: &str,
    params: &[usize],
    base_family: Option<&str>,
    base_params: &[usize],
) -> Result<FamilySpec, AppError> {
    let expect =
        |count: usize| -> Result<(), AppError> {
            if params.len() == count {
                Ok(())
            } else {
                Err(AppError::Usage(format!(
                    "family '{family}' takes {count} parameter(s), got {}",
                    params.len()
                )))
            }
        };
    match family {
        "complete-minus-edge" => {
            expect(1)?;
            Ok(FamilySpec::CompleteMinusEdge { n: params[0] })
        }
        "tripartite" | "complete-tripartite-1nn" => {
            expect(1)?;
            Ok(FamilySpec::CompleteTripartite1nn { n: params[0] })
        }
        "complete-split" => {
            expect(2)?;
            Ok(FamilySpec::CompleteSplit {
                n: params[0],
                m: params[1],
            })
        }
        "kite" => {
            expect(2)?;
            Ok(FamilySpec::Kite {
                m: params[0],
                s: params[1],
            })
        }
        "regular-kite" => {
            expect(3)?;
            Ok(FamilySpec::RegularKite {
                m: params[0],
                n: params[1],
                r: params[2],
            })
        }
        "star" => {
            expect(1)?;
            Ok(FamilySpec::Star { n: params[0] })
        }
        "cartesian-power" => {
            expect(1)?;
            let base_name = base_family.ok_or_else(|| {
                AppError::Usage("cartesian-power requires --base-family".to_string())
            })?;
            if base_name == "cartesian-power" {
                return Err(AppError::Usage(
                    "nested cartesian-power is not supported".to_string(),
                ));
            }
            let base = parse_family_spec(base_name, base_params, None, &[])?;
            Ok(FamilySpec::CartesianPower {
                base: Box::new(base),
                k: params[0],
            })
        }
        other => Err(AppError::Usage(format!("unknown family '{other}'"))),
    }
}

fn dispersion_json(r: &DispersionReport) -> Value {
    object(vec![
        ("gamma", json_f64(r.gamma)),
        ("gamma_sq_minus_1", json_f64(r.gamma_sq_minus_1)),
        ("c_e", json_f64(r.c_e)),
        ("c_d", Value::String(rational_string(&r.c_d))),
        ("c_d_float", json_f64(r.c_d_f64())),
        ("gamma_indicator", json_f64(r.gamma_indicator)),
        ("slack_gamma_sq_vs_c_e", json_f64(r.slacks.gamma_sq_vs_c_e)),
        ("slack_gamma_sq_vs_c_d", json_f64(r.slacks.gamma_sq_vs_c_d)),
        ("slack_lambda_vs_c_e", json_f64(r.slacks.lambda_vs_c_e)),
        ("slack_avg_deg_vs_c_d", json_f64(r.slacks.avg_deg_vs_c_d)),
    ])
}

fn family_stats_json(s: &FamilyStats) -> Value {
    object(vec![
        ("gamma", json_f64(s.gamma)),
        ("c_e", json_f64(s.c_e)),
        ("c_d", Value::String(rational_string(&s.c_d))),
        ("c_d_float", json_f64(rational_f64(&s.c_d))),
        (
            "lambda",
            s.lambda.map(json_f64).unwrap_or(Value::Null),
        ),
    ])
}

/// Analytic stats for the families that have them.
fn analytic_stats(spec: &FamilySpec) -> Result<Option<FamilyStats>, AppError> {
    let stats = match spec {
        FamilySpec::CompleteMinusEdge { n } => Some(closed_form::complete_minus_edge_stats(*n)),
        FamilySpec::CompleteTripartite1nn { n } => Some(closed_form::tripartite_stats(*n)),
        FamilySpec::CompleteSplit { n, m } => Some(closed_form::split_stats(*n, *m)),
        FamilySpec::Kite { m, s } => Some(closed_form::kite_stats(*m, *s)),
        FamilySpec::Star { n } => Some(closed_form::star_stats(*n)),
        FamilySpec::RegularKite { .. } | FamilySpec::CartesianPower { .. } => None,
    };
    match stats {
        None => Ok(None),
        Some(Ok(s)) => Ok(Some(s)),
        Some(Err(e)) => Err(AppError::Usage(e.to_string())),
    }
}

fn family_stats(args: FamilyStatsArgs) -> Result<(), AppError> {
    let spec = parse_family_spec(
        &args.family,
        &args.params,
        args.base_family.as_deref(),
        &args.base_params,
    )?;
    let want_numeric = args.numeric || args.both || !args.analytic;
    let want_analytic = args.analytic || args.both || !args.numeric;

    let numeric = if want_numeric {
        let g = families::realize(&spec).map_err(|e| AppError::Usage(e.to_string()))?;
        Some(dispersion::dispersion_report_default(&g).map_err(classify_dispersion)?)
    } else {
        None
    };
    let analytic = if want_analytic {
        let stats = analytic_stats(&spec)?;
        if stats.is_none() && args.analytic {
            return Err(AppError::Usage(format!(
                "family '{}' has no closed-form statistics; use --numeric",
                args.family
            )));
        }
        stats
    } else {
        None
    };

    if args.csv {
        let header = [
            "family", "params", "route", "gamma", "gamma_sq_minus_1", "c_e", "c_d", "c_d_float",
            "gamma_indicator",
        ];
        let params = args
            .params
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(";");
        let mut rows = Vec::new();
        if let Some(r) = &numeric {
            rows.push(vec![
                args.family.clone(),
                params.clone(),
                "numeric".to_string(),
                fmt_f64(r.gamma),
                fmt_f64(r.gamma_sq_minus_1),
                fmt_f64(r.c_e),
                rational_string(&r.c_d),
                fmt_f64(r.c_d_f64()),
                fmt_f64(r.gamma_indicator),
            ]);
        }
        if let Some(s) = &analytic {
            rows.push(vec![
                args.family.clone(),
                params,
                "analytic".to_string(),
                fmt_f64(s.gamma),
                fmt_f64(s.gamma * s.gamma - 1.0),
                fmt_f64(s.c_e),
                rational_string(&s.c_d),
                fmt_f64(rational_f64(&s.c_d)),
                fmt_f64((s.c_e - rational_f64(&s.c_d)) / (s.gamma * s.gamma)),
            ]);
        }
        print_csv(&header, &rows).map_err(|e| AppError::Usage(e.to_string()))?;
        return Ok(());
    }

    let json = object(vec![
        ("family", Value::String(args.family.clone())),
        (
            "params",
            Value::Array(args.params.iter().map(|&p| Value::from(p as u64)).collect()),
        ),
        (
            "numeric",
            numeric.as_ref().map(dispersion_json).unwrap_or(Value::Null),
        ),
        (
            "analytic",
            analytic
                .as_ref()
                .map(family_stats_json)
                .unwrap_or(Value::Null),
        ),
    ]);
    println!("{}", to_json_string(&json));
    Ok(())
}

/// One evaluated statistic triple at a finite size.
struct RowEval {
    n: usize,
    gamma_sq_minus_1: Option<f64>,
    c_e: Option<f64>,
    c_d: Option<Rational>,
}

struct TableRow {
    limits: closed_form::LimitRecord,
    evals: Vec<RowEval>,
}

fn eval_from_stats(n: usize, s: &FamilyStats) -> RowEval {
    RowEval {
        n,
        gamma_sq_minus_1: Some(s.gamma * s.gamma - 1.0),
        c_e: Some(s.c_e),
        c_d: Some(s.c_d.clone()),
    }
}

fn limits_table_rows(args: &LimitsTableArgs) -> Result<Vec<TableRow>, AppError> {
    let to_usage = |e: closed_form::ClosedFormError| AppError::Usage(e.to_string());
    let mut rows = Vec::new();

    let mut evals = Vec::new();
    for &n in &args.n {
        evals.push(eval_from_stats(
            n,
            &closed_form::complete_minus_edge_stats(n).map_err(to_usage)?,
        ));
    }
    rows.push(TableRow {
        limits: closed_form::complete_minus_edge_limits(),
        evals,
    });

    let mut evals = Vec::new();
    for &n in &args.n {
        evals.push(eval_from_stats(
            n,
            &closed_form::tripartite_stats(n).map_err(to_usage)?,
        ));
    }
    rows.push(TableRow {
        limits: closed_form::tripartite_limits(),
        evals,
    });

    for &k in &args.k {
        let mut evals = Vec::new();
        for &n in &args.n {
            let m = (k * n as f64).round() as usize;
            evals.push(eval_from_stats(
                n,
                &closed_form::split_stats(n, m).map_err(to_usage)?,
            ));
        }
        rows.push(TableRow {
            limits: closed_form::split_limits(k).map_err(to_usage)?,
            evals,
        });
    }

    let mut evals = Vec::new();
    for &n in &args.n {
        if n < 4 {
            return Err(AppError::Usage(format!(
                "the pendant-clique row requires n >= 4, got {n}"
            )));
        }
        evals.push(eval_from_stats(
            n,
            &closed_form::kite_stats(2, n - 1).map_err(to_usage)?,
        ));
    }
    rows.push(TableRow {
        limits: closed_form::pendant_clique_limits(),
        evals,
    });

    let mut evals = Vec::new();
    for &n in &args.n {
        let c_d = closed_form::regular_kite_cd(n, n, args.r).map_err(to_usage)?;
        evals.push(RowEval {
            n,
            gamma_sq_minus_1: None,
            c_e: None,
            c_d: Some(c_d),
        });
    }
    rows.push(TableRow {
        limits: closed_form::regular_kite_limits(args.r),
        evals,
    });

    let mut evals = Vec::new();
    for &n in &args.n {
        evals.push(eval_from_stats(
            n,
            &closed_form::star_stats(n).map_err(to_usage)?,
        ));
    }
    rows.push(TableRow {
        limits: closed_form::star_limits(),
        evals,
    });

    // Cartesian powers of the fixed non-regular base P_3, one evaluation
    // per power k in 1..=4 (the n list does not apply to this row).
    let base = families::star(2).map_err(|e| AppError::Usage(e.to_string()))?;
    let base_report =
        dispersion::dispersion_report_default(&base).map_err(classify_dispersion)?;
    let mut evals = Vec::new();
    for k in 1..=4u32 {
        let gamma_k = base_report.gamma.powi(k as i32);
        let ce_k = (1.0 + base_report.c_e).powi(k as i32) - 1.0;
        evals.push(RowEval {
            n: k as usize,
            gamma_sq_minus_1: Some(gamma_k * gamma_k - 1.0),
            c_e: Some(ce_k),
            c_d: Some(dispersion::cd_power(&base_report.c_d, k)),
        });
    }
    rows.push(TableRow {
        limits: closed_form::cartesian_power_limits(),
        evals,
    });

    Ok(rows)
}

fn gap_to(limit: &LimitValue, value: Option<f64>) -> Option<f64> {
    match (limit, value) {
        (LimitValue::Finite(l), Some(v)) => Some((v - l).abs()),
        _ => None,
    }
}

fn limits_table(args: LimitsTableArgs) -> Result<(), AppError> {
    let rows = limits_table_rows(&args)?;
    if args.csv {
        let header = ["family", "k", "n", "statistic", "value", "limit", "gap"];
        let mut out = Vec::new();
        for row in &rows {
            let k_cell = row.limits.k.map(fmt_f64).unwrap_or_default();
            for e in &row.evals {
                let triples: [(&str, Option<f64>, &LimitValue); 3] = [
                    ("gamma_sq_minus_1", e.gamma_sq_minus_1, &row.limits.gamma_sq_minus_1),
                    ("c_e", e.c_e, &row.limits.c_e),
                    ("c_d", e.c_d.as_ref().map(rational_f64), &row.limits.c_d),
                ];
                for (stat, value, limit) in triples {
                    out.push(vec![
                        row.limits.family.to_string(),
                        k_cell.clone(),
                        e.n.to_string(),
                        stat.to_string(),
                        value.map(fmt_f64).unwrap_or_default(),
                        limit_cell(limit),
                        gap_to(limit, value).map(fmt_f64).unwrap_or_default(),
                    ]);
                }
            }
        }
        print_csv(&header, &out).map_err(|e| AppError::Usage(e.to_string()))?;
        return Ok(());
    }

    let json_rows: Vec<Value> = rows
        .iter()
        .map(|row| {
            let evals: Vec<Value> = row
                .evals
                .iter()
                .map(|e| {
                    object(vec![
                        ("n", Value::from(e.n as u64)),
                        (
                            "gamma_sq_minus_1",
                            e.gamma_sq_minus_1.map(json_f64).unwrap_or(Value::Null),
                        ),
                        ("c_e", e.c_e.map(json_f64).unwrap_or(Value::Null)),
                        (
                            "c_d",
                            e.c_d
                                .as_ref()
                                .map(|r| Value::String(rational_string(r)))
                                .unwrap_or(Value::Null),
                        ),
                        (
                            "c_d_float",
                            e.c_d
                                .as_ref()
                                .map(|r| json_f64(rational_f64(r)))
                                .unwrap_or(Value::Null),
                        ),
                        (
                            "gap_gamma_sq_minus_1",
                            gap_to(&row.limits.gamma_sq_minus_1, e.gamma_sq_minus_1)
                                .map(json_f64)
                                .unwrap_or(Value::Null),
                        ),
                        (
                            "gap_c_e",
                            gap_to(&row.limits.c_e, e.c_e)
                                .map(json_f64)
                                .unwrap_or(Value::Null),
                        ),
                        (
                            "gap_c_d",
                            gap_to(&row.limits.c_d, e.c_d.as_ref().map(rational_f64))
                                .map(json_f64)
                                .unwrap_or(Value::Null),
                        ),
                    ])
                })
                .collect();
            object(vec![
                ("family", Value::String(row.limits.family.to_string())),
                (
                    "k",
                    row.limits.k.map(json_f64).unwrap_or(Value::Null),
                ),
                (
                    "limits",
                    object(vec![
                        (
                            "gamma_sq_minus_1",
                            limit_value(&row.limits.gamma_sq_minus_1),
                        ),
                        ("c_e", limit_value(&row.limits.c_e)),
                        ("c_d", limit_value(&row.limits.c_d)),
                    ]),
                ),
                ("evaluations", Value::Array(evals)),
            ])
        })
        .collect();
    println!(
        "{}",
        to_json_string(&object(vec![("rows", Value::Array(json_rows))]))
    );
    Ok(())
}

fn run_verify(args: VerifyArgs) -> Result<(), AppError> {
    let suite = match args.suite.as_str() {
        "bounds" => Suite::Bounds,
        "oracle" => Suite::Oracle,
        "product" => Suite::Product,
        "clustering" => Suite::Clustering,
        other => {
            return Err(AppError::Usage(format!(
                "unknown suite '{other}' (expected bounds|oracle|product|clustering)"
            )))
        }
    };
    let results = verify::run_suite(suite, args.n_max).map_err(classify_extremal)?;
    let mut all_passed = true;
    for r in &results {
        all_passed &= r.passed;
        println!(
            "{} {}: {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.detail
        );
    }
    if all_passed {
        Ok(())
    } else {
        Err(AppError::Verification(format!(
            "{} of {} invariants failed in suite '{}'",
            results.iter().filter(|r| !r.passed).count(),
            results.len(),
            suite.name()
        )))
    }
}

fn run_search(args: SearchArgs) -> Result<(), AppError> {
    let objective = match args.objective.as_str() {
        "max-ce" => Objective::MaxCe,
        "max-cd" => Objective::MaxCd,
        "min-gamma" => Objective::MinGamma,
        other => {
            return Err(AppError::Usage(format!(
                "unknown objective '{other}' (expected max-ce|max-cd|min-gamma)"
            )))
        }
    };
    let result = match &args.graph6 {
        None => extremal::search(args.n, objective).map_err(classify_extremal)?,
        Some(source) => {
            let graphs = read_graph6_stream(source)?;
            for record in &graphs {
                if record.graph.vertex_count() != args.n {
                    return Err(AppError::Usage(format!(
                        "graph {} has order {}, expected {}",
                        record.text,
                        record.graph.vertex_count(),
                        args.n
                    )));
                }
            }
            extremal::search_graphs(args.n, graphs.into_iter().map(|r| r.graph), objective)
                .map_err(classify_extremal)?
        }
    };
    let witnesses: Vec<String> = result
        .witnesses
        .iter()
        .map(|g| graph6::encode(g).expect("witness order < 63"))
        .collect();
    let (value_str, value_float) = match &result.best_value {
        extremal::ObjectiveValue::Real(v) => (fmt_f64(*v), *v),
        extremal::ObjectiveValue::Rational(r) => (rational_string(r), rational_f64(r)),
    };
    if args.csv {
        let header = ["n", "objective", "best_value", "best_value_float", "witnesses", "census", "runtime_secs"];
        let rows = vec![vec![
            result.n.to_string(),
            result.objective.name().to_string(),
            value_str,
            fmt_f64(value_float),
            witnesses.join(";"),
            result.census.to_string(),
            fmt_f64(result.runtime_secs),
        ]];
        print_csv(&header, &rows).map_err(|e| AppError::Usage(e.to_string()))?;
        return Ok(());
    }
    let json = object(vec![
        ("n", Value::from(result.n as u64)),
        ("objective", Value::String(result.objective.name().to_string())),
        ("best_value", Value::String(value_str)),
        ("best_value_float", json_f64(value_float)),
        (
            "witnesses",
            Value::Array(witnesses.into_iter().map(Value::String).collect()),
        ),
        ("census", Value::from(result.census)),
        ("runtime_secs", json_f64(result.runtime_secs)),
    ]);
    println!("{}", to_json_string(&json));
    Ok(())
}

fn clustering_json(report: &clustering::ClusteringReport) -> Value {
    object(vec![
        (
            "local",
            Value::Array(
                report
                    .local
                    .iter()
                    .map(|c| {
                        c.as_ref()
                            .map(|r| Value::String(rational_string(r)))
                            .unwrap_or(Value::Null)
                    })
                    .collect(),
            ),
        ),
        ("average", Value::String(rational_string(&report.average))),
        ("average_float", json_f64(rational_f64(&report.average))),
        (
            "transitivity",
            report
                .transitivity
                .as_ref()
                .map(|r| Value::String(rational_string(r)))
                .unwrap_or(Value::Null),
        ),
        (
            "transitivity_float",
            report
                .transitivity
                .as_ref()
                .map(|r| json_f64(rational_f64(r)))
                .unwrap_or(Value::Null),
        ),
        ("triangle_count", Value::from(report.triangle_count)),
        ("undefined_count", Value::from(report.undefined_count as u64)),
    ])
}

/// Reads a graph6 stream, one graph per line, from a file or stdin.
fn read_graph6_stream(source: &str) -> Result<Vec<Graph6Record>, AppError> {
    let text = if source == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| AppError::Usage(format!("reading stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(source)
            .map_err(|e| AppError::Usage(format!("reading {source}: {e}")))?
    };
    let mut graphs: Vec<Graph6Record> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        graphs.push(graph6::decode_record(line).map_err(|e| {
            AppError::Usage(format!("line {}: invalid graph6: {e}", lineno + 1))
        })?);
    }
    Ok(graphs)
}

fn run_stats(args: StatsArgs) -> Result<(), AppError> {
    let graphs = read_graph6_stream(&args.graph6)?;

    let mut csv_rows = Vec::new();
    for record in &graphs {
        let (text, g) = (&record.text, &record.graph);
        let report = dispersion::dispersion_report_default(g).map_err(classify_dispersion)?;
        let clust = clustering::clustering_report(g);
        if args.csv {
            csv_rows.push(vec![
                text.clone(),
                g.vertex_count().to_string(),
                fmt_f64(report.gamma),
                fmt_f64(report.gamma_sq_minus_1),
                fmt_f64(report.c_e),
                rational_string(&report.c_d),
                fmt_f64(report.c_d_f64()),
                fmt_f64(report.gamma_indicator),
                rational_string(&clust.average),
                clust
                    .transitivity
                    .as_ref()
                    .map(rational_string)
                    .unwrap_or_default(),
                clust.triangle_count.to_string(),
            ]);
        } else {
            let json = object(vec![
                ("graph6", Value::String(text.clone())),
                ("n", Value::from(g.vertex_count() as u64)),
                ("dispersion", dispersion_json(&report)),
                ("clustering", clustering_json(&clust)),
            ]);
            println!("{}", to_json_string(&json));
        }
    }
    if args.csv {
        let header = [
            "graph6", "n", "gamma", "gamma_sq_minus_1", "c_e", "c_d", "c_d_float",
            "gamma_indicator", "clustering_average", "transitivity", "triangle_count",
        ];
        print_csv(&header, &csv_rows).map_err(|e| AppError::Usage(e.to_string()))?;
    }
    Ok(())
}

fn run_clustering(args: ClusteringArgs) -> Result<(), AppError> {
    if args.family != "complete-split" {
        return Err(AppError::Usage(format!(
            "only --family complete-split is supported, got '{}'",
            args.family
        )));
    }
    if args.n == 0 || args.m == 0 {
        return Err(AppError::Usage(
            "complete-split requires n >= 1 and m >= 1".to_string(),
        ));
    }
    let g = families::complete_split(args.n as usize, args.m as usize)
        .map_err(|e| AppError::Usage(e.to_string()))?;
    let direct_avg = clustering::average_clustering(&g);
    let direct_t = clustering::transitivity(&g);
    let (cf_avg, cf_t) = clustering::split_clustering_closed_form(args.n, args.m);
    let equal = direct_avg == cf_avg && direct_t.as_ref() == Some(&cf_t);

    if args.csv {
        let header = [
            "n", "m", "route", "average", "average_float", "transitivity", "transitivity_float",
            "equal",
        ];
        let rows = vec![
            vec![
                args.n.to_string(),
                args.m.to_string(),
                "direct".to_string(),
                rational_string(&direct_avg),
                fmt_f64(rational_f64(&direct_avg)),
                direct_t.as_ref().map(rational_string).unwrap_or_default(),
                direct_t
                    .as_ref()
                    .map(|r| fmt_f64(rational_f64(r)))
                    .unwrap_or_default(),
                equal.to_string(),
            ],
            vec![
                args.n.to_string(),
                args.m.to_string(),
                "closed-form".to_string(),
                rational_string(&cf_avg),
                fmt_f64(rational_f64(&cf_avg)),
                rational_string(&cf_t),
                fmt_f64(rational_f64(&cf_t)),
                equal.to_string(),
            ],
        ];
        print_csv(&header, &rows).map_err(|e| AppError::Usage(e.to_string()))?;
        return Ok(());
    }

    let json = object(vec![
        ("n", Value::from(args.n)),
        ("m", Value::from(args.m)),
        (
            "direct",
            object(vec![
                ("average", Value::String(rational_string(&direct_avg))),
                ("average_float", json_f64(rational_f64(&direct_avg))),
                (
                    "transitivity",
                    direct_t
                        .as_ref()
                        .map(|r| Value::String(rational_string(r)))
                        .unwrap_or(Value::Null),
                ),
            ]),
        ),
        (
            "closed_form",
            object(vec![
                ("average", Value::String(rational_string(&cf_avg))),
                ("average_float", json_f64(rational_f64(&cf_avg))),
                ("transitivity", Value::String(rational_string(&cf_t))),
                ("transitivity_float", json_f64(rational_f64(&cf_t))),
            ]),
        ),
        ("equal", Value::Bool(equal)),
    ]);
    println!("{}", to_json_string(&json));
    Ok(())
}
