use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use nsg::fuzz::{self, FuzzParams};
use nsg::output::{self, CsvSink, ReportRow};
use nsg::sweep::{self, SweepSpec};
use nsg::theorems::{self, TheoremVerdict};
use nsg::{report, Error, GeneratorSpec};

#[derive(Parser)]
#[command(
    name = "nsg",
    version,
    about = "Numerical semigroup invariants, Wilf/Eliahou checks and sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print the invariant report of a semigroup given as "g1,g2,...[;r]".
    Info {
        spec: GeneratorSpec,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run every theorem checker on one semigroup.
    Check {
        spec: GeneratorSpec,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run all checkers over a seeded stream of random semigroups.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 200)]
        max_multiplicity: u64,
        #[arg(long, default_value_t = 6)]
        max_generators: usize,
        #[arg(long, default_value_t = 0.5)]
        threshold_probability: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Enumerate a family grid and emit the rows passing its predicate.
    Sweep {
        /// JSON sweep config.
        #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
        config: Option<PathBuf>,
        /// Bundled sweep: type1 or type2.
        #[arg(long)]
        builtin: Option<String>,
        /// Output file (stdout if absent).
        #[arg(long)]
        out: Option<PathBuf>,
        /// csv or json (one object per line).
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Recompute the published negative-Eliahou table and compare cell by cell.
    Table1 {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum Failure {
    Falsified,
    Input(anyhow::Error),
    Io(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(_) => Failure::Io(e.into()),
            _ => Failure::Input(e.into()),
        }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("NSG_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Falsified) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain()
        .filter_map(|cause| cause.downcast_ref::<io::Error>())
        .any(|io| io.kind() == io::ErrorKind::BrokenPipe)
}

fn run(command: Command) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Info { spec, format } => info(&mut out, &spec, format),
        Command::Check { spec, format } => check(&mut out, &spec, format),
        Command::Verify {
            seed,
            count,
            max_multiplicity,
            max_generators,
            threshold_probability,
            format,
        } => verify(
            &mut out,
            &FuzzParams {
                seed,
                max_multiplicity,
                max_generators,
                threshold_probability,
                count,
            },
            format,
        ),
        Command::Sweep {
            config,
            builtin,
            out: path,
            format,
        } => {
            let spec = match (config, builtin) {
                (Some(path), _) => {
                    let text = std::fs::read_to_string(&path)
                        .with_context(|| format!("reading {}", path.display()))
                        .map_err(Failure::Io)?;
                    SweepSpec::from_json(&text)?
                }
                (None, Some(name)) => sweep::builtin(&name).ok_or_else(|| {
                    Failure::Input(anyhow::anyhow!(
                        "unknown builtin sweep {name:?} (type1, type2)"
                    ))
                })?,
                (None, None) => unreachable!("clap requires one of --config/--builtin"),
            };
            match path {
                Some(path) => {
                    let file = File::create(&path)
                        .with_context(|| format!("creating {}", path.display()))
                        .map_err(Failure::Io)?;
                    sweep_to(BufWriter::new(file), &spec, format)
                }
                None => sweep_to(&mut out, &spec, format),
            }
        }
        Command::Table1 { format } => table1(&mut out, format),
    }
}

fn info(out: &mut impl Write, spec: &GeneratorSpec, format: Format) -> Result<(), Failure> {
    let s = spec.build()?;
    let r = report(&s);
    match format {
        Format::Text => out.write_all(output::render_text(spec, &s, &r).as_bytes())?,
        Format::Json => writeln!(out, "{}", json(&ReportRow::new(spec, &r)))?,
        Format::Csv => out.write_all(output::to_csv(&[ReportRow::new(spec, &r)]).as_bytes())?,
    }
    Ok(())
}

#[derive(Serialize)]
struct Checked<'a> {
    spec: &'a GeneratorSpec,
    verdicts: &'a [TheoremVerdict],
}

fn check(out: &mut impl Write, spec: &GeneratorSpec, format: Format) -> Result<(), Failure> {
    let verdicts = theorems::check_all(&spec.build()?)?;
    match format {
        Format::Text => {
            writeln!(out, "semigroup {spec}")?;
            out.write_all(output::render_verdicts_text(&verdicts).as_bytes())?;
        }
        Format::Json => writeln!(
            out,
            "{}",
            json(&Checked {
                spec,
                verdicts: &verdicts
            })
        )?,
        Format::Csv => write_verdicts_csv(out, verdicts.iter().map(|v| (spec, v)))?,
    }
    if verdicts.iter().any(TheoremVerdict::is_falsification) {
        return Err(Failure::Falsified);
    }
    Ok(())
}

fn write_verdicts_csv<'a>(
    out: &mut impl Write,
    rows: impl Iterator<Item = (&'a GeneratorSpec, &'a TheoremVerdict)>,
) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "spec",
        "theorem",
        "hypotheses_met",
        "conclusion_holds",
        "witness",
    ])?;
    for (spec, v) in rows {
        let holds = v
            .conclusion_holds
            .map(|b| b.to_string())
            .unwrap_or_default();
        let mut witness = String::new();
        for (k, x) in &v.witness {
            if !witness.is_empty() {
                witness.push(';');
            }
            let _ = write!(witness, "{k}={x}");
        }
        w.write_record([
            spec.to_string(),
            v.theorem.to_string(),
            v.hypotheses_met.to_string(),
            holds,
            witness,
        ])?;
    }
    w.flush()
}

#[derive(Serialize)]
struct Falsification {
    spec: GeneratorSpec,
    verdict: TheoremVerdict,
}

#[derive(Serialize)]
struct VerifySummary<'a> {
    params: &'a FuzzParams,
    checked: usize,
    hypotheses_met: usize,
    falsifications: &'a [Falsification],
}

fn verify(out: &mut impl Write, params: &FuzzParams, format: Format) -> Result<(), Failure> {
    let specs: Vec<GeneratorSpec> = fuzz::random_specs(params)?.collect();
    let results: Vec<(usize, Vec<Falsification>)> = specs
        .par_iter()
        .map(|spec| -> nsg::Result<_> {
            let verdicts = theorems::check_all(&spec.build()?)?;
            let met = verdicts.iter().filter(|v| v.hypotheses_met).count();
            let bad = verdicts
                .into_iter()
                .filter(TheoremVerdict::is_falsification)
                .map(|verdict| Falsification {
                    spec: spec.clone(),
                    verdict,
                })
                .collect();
            Ok((met, bad))
        })
        .collect::<nsg::Result<_>>()?;
    let hypotheses_met = results.iter().map(|(n, _)| n).sum();
    let falsifications: Vec<Falsification> = results.into_iter().flat_map(|(_, f)| f).collect();

    match format {
        Format::Text => {
            writeln!(
                out,
                "checked {} semigroups (seed {}), {} hypotheses met, {} falsifications",
                specs.len(),
                params.seed,
                hypotheses_met,
                falsifications.len()
            )?;
            for f in &falsifications {
                writeln!(out, "FALSIFIED {} on {}", f.verdict.theorem, f.spec)?;
            }
        }
        Format::Json => writeln!(
            out,
            "{}",
            json(&VerifySummary {
                params,
                checked: specs.len(),
                hypotheses_met,
                falsifications: &falsifications,
            })
        )?,
        Format::Csv => {
            write_verdicts_csv(out, falsifications.iter().map(|f| (&f.spec, &f.verdict)))?
        }
    }
    if falsifications.is_empty() {
        Ok(())
    } else {
        Err(Failure::Falsified)
    }
}

fn sweep_to<W: Write>(mut out: W, spec: &SweepSpec, format: Format) -> Result<(), Failure> {
    let stats = match format {
        Format::Csv => {
            let mut sink = CsvSink::new(&mut out)?;
            let stats = sweep::run(spec, |row| sink.write(&row.to_report_row()))?;
            sink.finish()?;
            stats
        }
        Format::Json => sweep::run(spec, |row| writeln!(out, "{}", json(&row.to_report_row())))?,
        Format::Text => {
            return Err(Failure::Input(anyhow::anyhow!(
                "sweep writes csv or json, not text"
            )))
        }
    };
    out.flush()?;
    eprintln!(
        "grid_size={} raw_hits={} distinct={}",
        stats.grid_size, stats.raw_hits, stats.distinct
    );
    Ok(())
}

#[derive(Serialize)]
struct Table1Row<'a> {
    spec: &'a GeneratorSpec,
    all_match: bool,
    cells: Vec<Table1Cell<'a>>,
}

#[derive(Serialize)]
struct Table1Cell<'a> {
    column: &'a str,
    published: i64,
    computed: Option<i64>,
    matches: bool,
}

fn table1(out: &mut impl Write, format: Format) -> Result<(), Failure> {
    let rows = sweep::compare_table1()?;
    match format {
        Format::Text => {
            for row in &rows {
                let flag = if row.all_match() { "match" } else { "MISMATCH" };
                writeln!(out, "{} [{flag}]", row.spec)?;
                for c in &row.cells {
                    let computed = c
                        .computed
                        .map(|x| x.to_string())
                        .unwrap_or_else(|| "-".into());
                    let mark = if c.matches() { "ok" } else { "differs" };
                    writeln!(
                        out,
                        "  {:<14} published={:>6}  computed={:>6}  {mark}",
                        c.column, c.published, computed
                    )?;
                }
            }
        }
        Format::Json => {
            let rows: Vec<Table1Row> = rows
                .iter()
                .map(|row| Table1Row {
                    spec: &row.spec,
                    all_match: row.all_match(),
                    cells: row
                        .cells
                        .iter()
                        .map(|c| Table1Cell {
                            column: &c.column,
                            published: c.published,
                            computed: c.computed,
                            matches: c.matches(),
                        })
                        .collect(),
                })
                .collect();
            writeln!(out, "{}", json(&rows))?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["spec", "column", "published", "computed", "matches"])?;
            for row in &rows {
                for c in &row.cells {
                    w.write_record([
                        row.spec.to_string(),
                        c.column.clone(),
                        c.published.to_string(),
                        c.computed.map(|x| x.to_string()).unwrap_or_default(),
                        c.matches().to_string(),
                    ])?;
                }
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialize")
}
