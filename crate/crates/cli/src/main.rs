mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tqft::catalan::{dimension_profiles, dvv_oracle, intersection_numbers, wkb_report};
use tqft::cellgraph::{count_brute_guarded, hom_set};
use tqft::eco::{count, evaluate_graph, CountRecord};
use tqft::frobenius::FrobeniusAlgebra;
use tqft::toprec::{factorization_holds, toprec_run, twisted_toprec_run, TrTable};
use tqft::{scalar, zoo};

const AFTER_HELP: &str = "\
Algebras are JSON files or presets: zoo:K^n, zoo:Matn, zoo:C[G], zoo:ZC[G], zoo:DW[G]
with G one of Z/n, S3, Dn.

Environment:
  TQFT_MAX_DEGREE   largest total degree for brute-force graph counts (default 12)
  TQFT_TRUNCATION   series truncation for curves (default 16 for presets)

Exit status: 0 success, 1 a check failed, 2 bad input or guard exceeded.";

#[derive(Parser)]
#[command(name = "tqft", version, about = "2D TQFTs, cell-graph counts and topological recursion over exact rationals")]
#[command(after_help = AFTER_HELP)]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Frobenius algebras and their TQFTs
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Cell graphs: counts, morphisms and colored evaluation
    #[command(subcommand)]
    Graphs(GraphsCmd),
    /// Topological recursion on a local spectral curve
    #[command(subcommand)]
    Toprec(ToprecCmd),
    /// psi-class intersection numbers from the Catalan counts, checked against DVV
    Intersect {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        n: usize,
    },
    /// The Catalan quantum curve
    #[command(subcommand)]
    Wkb(WkbCmd),
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Check the Frobenius axioms
    Validate { algebra: String },
    /// Z(surface of genus G), or omega_{G,n}(v_1, .., v_n) with --vectors
    Tqft {
        algebra: String,
        #[arg(long)]
        genus: usize,
        /// JSON list of coordinate vectors, inline or a file
        #[arg(long)]
        vectors: Option<String>,
    },
    /// Print a preset as algebra JSON (always JSON, so it can be saved and edited)
    Zoo { name: String },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Recursion,
    Brute,
    Both,
}

#[derive(Subcommand)]
enum GraphsCmd {
    /// Number of arrowed cell graphs of genus G with vertex degrees mu
    Count {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        degrees: String,
        #[arg(long, value_enum, default_value_t = Method::Recursion)]
        method: Method,
    },
    /// Morphisms between two cell graphs
    Hom { source: PathBuf, target: PathBuf },
    /// TQFT value of a colored cell graph
    Eval {
        graph: PathBuf,
        #[arg(long)]
        algebra: String,
        /// JSON list with one color vector per vertex, inline or a file
        #[arg(long)]
        colors: String,
    },
}

#[derive(Subcommand)]
enum ToprecCmd {
    /// Compute W_{g,n} for 1 <= 2g-2+n <= M
    Run {
        #[arg(long, conflicts_with = "curve_preset", required_unless_present = "curve_preset")]
        curve: Option<PathBuf>,
        #[arg(long, value_parser = ["airy", "catalan"])]
        curve_preset: Option<String>,
        #[arg(long)]
        max_complexity: usize,
        /// Run the twisted recursion and check it factorizes
        #[arg(long)]
        algebra: Option<String>,
    },
}

#[derive(Subcommand)]
enum WkbCmd {
    /// Check the residual vanishes at each power of hbar up to M
    Verify {
        #[arg(long)]
        order: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            let failed_check =
                e.chain().any(|c| matches!(c.downcast_ref::<tqft::Error>(), Some(tqft::Error::Polynomiality(_))));
            ExitCode::from(if failed_check { 1 } else { 2 })
        }
    }
}

// Ok(false) means a check ran and failed.
fn run(cli: &Cli) -> Result<bool> {
    let fmt = cli.format;
    match &cli.command {
        Command::Algebra(AlgebraCmd::Validate { algebra }) => validate(fmt, algebra),
        Command::Algebra(AlgebraCmd::Tqft { algebra, genus, vectors }) => {
            let alg = input::algebra(algebra)?;
            let vs = match vectors {
                Some(v) => input::vectors(v, alg.dim())?,
                None => vec![],
            };
            let value = scalar::format(&alg.omega(*genus, &vs)?);
            emit(fmt, json!({ "genus": genus, "n": vs.len(), "value": value }), || vec![vec![value.clone()]]);
            Ok(true)
        }
        Command::Algebra(AlgebraCmd::Zoo { name }) => {
            let spec = zoo::preset_algebra(name)?.to_spec();
            println!("{}", serde_json::to_string_pretty(&spec)?);
            Ok(true)
        }
        Command::Graphs(GraphsCmd::Count { genus, degrees, method }) => graph_count(fmt, *genus, degrees, *method),
        Command::Graphs(GraphsCmd::Hom { source, target }) => {
            let morphisms = hom_set(&input::graph(source)?, &input::graph(target)?)?;
            let rows = || {
                let mut rows = vec![vec!["size".into(), morphisms.len().to_string()]];
                for m in &morphisms {
                    rows.push(vec![format!("contract {:?}", m.contracted), format!("automorphism {}", m.automorphism)]);
                }
                rows
            };
            emit(fmt, json!({ "size": morphisms.len(), "morphisms": morphisms }), rows);
            Ok(true)
        }
        Command::Graphs(GraphsCmd::Eval { graph, algebra, colors }) => {
            let alg = input::algebra(algebra)?;
            let graph = input::graph(graph)?;
            let colors = input::vectors(colors, alg.dim())?;
            let value = scalar::format(&evaluate_graph(&alg, &graph, &colors)?);
            emit(fmt, json!({ "value": value }), || vec![vec![value.clone()]]);
            Ok(true)
        }
        Command::Toprec(ToprecCmd::Run { curve, curve_preset, max_complexity, algebra }) => {
            let curve = match (curve, curve_preset) {
                (Some(path), _) => input::curve_file(path)?,
                (None, Some(name)) => input::curve_preset(name)?,
                (None, None) => bail!("give --curve <file> or --curve-preset airy|catalan"),
            };
            let plain = toprec_run(&curve, *max_complexity)?;
            match algebra {
                None => {
                    print_toprec(fmt, &plain, None)?;
                    Ok(true)
                }
                Some(a) => {
                    let alg = input::algebra(a)?;
                    let twisted = twisted_toprec_run(&curve, &alg, *max_complexity)?;
                    let ok = factorization_holds(&plain, &twisted, &alg)?;
                    print_toprec(fmt, &twisted, Some(ok))?;
                    if !ok {
                        eprintln!("twisted correlators do not factor through the plain ones");
                    }
                    Ok(ok)
                }
            }
        }
        Command::Intersect { g, n } => intersect(fmt, *g, *n),
        Command::Wkb(WkbCmd::Verify { order }) => {
            let report = wkb_report(*order)?;
            let ok = report.iter().all(|r| r.vanishes);
            let rows = || {
                report
                    .iter()
                    .map(|r| {
                        let mut row = vec![format!("hbar^{}", r.order), format!("vanishes: {}", r.vanishes)];
                        row.extend(r.residual.clone());
                        row
                    })
                    .collect()
            };
            emit(fmt, serde_json::to_value(&report)?, rows);
            Ok(ok)
        }
    }
}

fn validate(fmt: Format, arg: &str) -> Result<bool> {
    let spec = input::algebra_spec(arg)?;
    let report = FrobeniusAlgebra::validate_spec(&spec)?;
    let passed = report.passed();
    let mut value = serde_json::to_value(&report)?;
    value["passed"] = json!(passed);
    emit(fmt, value, || {
        report
            .checks()
            .into_iter()
            .map(|(name, ok)| {
                let verdict = match ok {
                    Some(true) => "pass",
                    Some(false) => "FAIL",
                    None => "not asserted",
                };
                vec![name.to_string(), verdict.to_string()]
            })
            .collect()
    });
    Ok(passed)
}

fn graph_count(fmt: Format, genus: usize, degrees: &str, method: Method) -> Result<bool> {
    let mu = input::degrees(degrees)?;
    let record = |c: String| CountRecord { g: genus, n: mu.len(), mu: mu.clone(), count: c, omega: None };
    let mut results: Vec<(&str, CountRecord)> = vec![];
    if method != Method::Brute {
        results.push(("recursion", record(count(genus, &mu).to_string())));
    }
    if method != Method::Recursion {
        let limit = input::max_degree()?;
        results.push(("brute", record(count_brute_guarded(genus, &mu, limit)?.to_string())));
    }
    let agree = results.windows(2).all(|w| w[0].1.count == w[1].1.count);
    let value = if results.len() == 1 {
        serde_json::to_value(&results[0].1)?
    } else {
        Value::Object(
            results.iter().map(|(m, r)| Ok((m.to_string(), serde_json::to_value(r)?))).collect::<Result<_>>()?,
        )
    };
    emit(fmt, value, || {
        let mut rows = vec![vec!["method".into(), "g".into(), "mu".into(), "count".into()]];
        for (m, r) in &results {
            rows.push(vec![m.to_string(), r.g.to_string(), degrees.to_string(), r.count.clone()]);
        }
        rows
    });
    if !agree {
        eprintln!("recursion and brute force disagree");
    }
    Ok(agree)
}

fn print_toprec(fmt: Format, table: &TrTable, factorizes: Option<bool>) -> Result<()> {
    let report = table.report();
    let mut value = json!({ "truncation": table.truncation, "correlators": report });
    if let Some(ok) = factorizes {
        value["factorizes"] = json!(ok);
    }
    emit(fmt, value, || {
        let mut rows = vec![vec![
            "g".into(),
            "n".into(),
            "discs".into(),
            "exponents".into(),
            "slots".into(),
            "coefficient".into(),
        ]];
        for c in &report {
            for e in &c.entries {
                let slots = e.slots.as_ref().map(|s| format!("{s:?}")).unwrap_or_else(|| "-".into());
                rows.push(vec![
                    c.g.to_string(),
                    c.n.to_string(),
                    format!("{:?}", e.discs),
                    format!("{:?}", e.exponents),
                    slots,
                    e.coefficient.clone(),
                ]);
            }
        }
        rows
    });
    if let (Format::Table, Some(ok)) = (fmt, factorizes) {
        println!("factorizes: {ok}");
    }
    Ok(())
}

fn intersect(fmt: Format, g: usize, n: usize) -> Result<bool> {
    if 2 * g + n <= 2 {
        bail!("need 2g - 2 + n > 0, got g = {g}, n = {n}");
    }
    let table = intersection_numbers(g, n)?;
    let mismatched: Vec<Vec<usize>> =
        dimension_profiles(g, n).into_iter().filter(|d| table.get(d) != dvv_oracle(g, d)).collect();
    let records = table.records();
    emit(fmt, serde_json::to_value(&records)?, || {
        let mut rows = vec![vec!["g".into(), "n".into(), "d".into(), "value".into()]];
        for r in &records {
            rows.push(vec![r.g.to_string(), r.n.to_string(), format!("{:?}", r.d), r.value.clone()]);
        }
        rows
    });
    for d in &mismatched {
        eprintln!(
            "<tau {d:?}>_{g} = {} from the counts but {} from DVV",
            scalar::format(&table.get(d)),
            scalar::format(&dvv_oracle(g, d))
        );
    }
    Ok(mismatched.is_empty())
}

fn emit(fmt: Format, value: Value, rows: impl FnOnce() -> Vec<Vec<String>>) {
    match fmt {
        Format::Json => println!("{value}"),
        Format::Table => print_rows(&rows()),
    }
}

fn print_rows(rows: &[Vec<String>]) {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let width: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(String::len).max().unwrap_or(0)).collect();
    for row in rows {
        let cells: Vec<String> = row.iter().enumerate().map(|(c, s)| format!("{s:<w$}", w = width[c])).collect();
        println!("{}", cells.join("  ").trim_end());
    }
}
