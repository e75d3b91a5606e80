use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use coprime_kit::chartab::CharacterTable;
use coprime_kit::classes::ClassData;
use coprime_kit::corpus::{default_specs, parse_builtin_expr, parse_spec, Corpus, GroupSpec};
use coprime_kit::primes::is_prime;
use coprime_kit::report::{
    class_report, faithful_multiplicative_scan, metabelian_quotient_scan, render_classes_text,
    render_summary, render_table_text, table_report, verify_corpus, write_csv, write_json_lines,
    Check, PropertyReport, VerifyOptions,
};

/// Finite groups, exact character tables and coprime-multiplicativity checks.
#[derive(Parser)]
#[command(name = "coprime-kit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suite and exit 1 if any check fails.
    Verify {
        /// Check label: A, B, C, 2.2, 2.3, 2.4, 2.5, 3.1, 4.2, BW or DY. Repeatable.
        #[arg(long = "theorem", value_parser = parse_check)]
        checks: Vec<Check>,
        /// Restrict per-prime checks to this prime.
        #[arg(long)]
        prime: Option<usize>,
        /// Only verify these groups (corpus names or builtin expressions). Repeatable.
        #[arg(long = "group")]
        groups: Vec<String>,
        /// Group specification files replacing the default corpus. Repeatable.
        #[arg(long = "corpus")]
        corpora: Vec<PathBuf>,
        /// Write one JSON report per group, one per line.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write the CSV summary, one row per group and check.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Record per-stage timings in the JSON reports.
        #[arg(long)]
        timings: bool,
    },
    /// Print a character table.
    Table {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long = "corpus")]
        corpora: Vec<PathBuf>,
    },
    /// Print the conjugacy classes of a group.
    Classes {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long = "corpus")]
        corpora: Vec<PathBuf>,
    },
    /// Report-only scans for open questions.
    Explore {
        #[arg(long, value_enum)]
        question: Question,
        #[arg(long = "corpus")]
        corpora: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Question {
    /// Groups whose coprime prime-power class products are classes: is G/F(G) metabelian?
    Q41,
    /// Nonnilpotent groups with a faithful nonlinear multiplicative character.
    Q43,
}

fn parse_check(label: &str) -> Result<Check, String> {
    Check::from_label(label).ok_or_else(|| {
        let labels: Vec<&str> = Check::ALL.iter().map(|c| c.label()).collect();
        format!(
            "unknown check `{label}`; expected one of {}",
            labels.join(", ")
        )
    })
}

/// An error with its exit status: 1 for failed checks, 2 for bad input.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

fn input(error: impl Into<anyhow::Error>) -> Failure {
    Failure {
        code: 2,
        error: error.into(),
    }
}

fn internal(error: impl Into<anyhow::Error>) -> Failure {
    Failure {
        code: 1,
        error: error.into(),
    }
}

fn read_specs(paths: &[PathBuf]) -> Result<Vec<GroupSpec>, Failure> {
    if paths.is_empty() {
        return Ok(default_specs());
    }
    let mut specs = Vec::new();
    for path in paths {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))
            .map_err(input)?;
        let parsed = parse_spec(&text)
            .with_context(|| format!("{}", path.display()))
            .map_err(input)?;
        specs.extend(parsed);
    }
    Ok(specs)
}

/// Specs named by `groups`, looked up in `specs` first and then parsed as
/// builtin expressions. All of `specs` when `groups` is empty.
fn select(specs: Vec<GroupSpec>, groups: &[String]) -> Result<Vec<GroupSpec>, Failure> {
    if groups.is_empty() {
        return Ok(specs);
    }
    groups
        .iter()
        .map(|name| match specs.iter().find(|s| &s.name == name) {
            Some(s) => Ok(s.clone()),
            None => parse_builtin_expr(name)
                .with_context(|| format!("no group named `{name}`"))
                .map_err(input),
        })
        .collect()
}

fn load(paths: &[PathBuf], groups: &[String]) -> Result<Corpus, Failure> {
    let specs = select(read_specs(paths)?, groups)?;
    Corpus::from_specs(specs).map_err(input)
}

fn load_one(
    paths: &[PathBuf],
    group: &str,
) -> Result<(GroupSpec, Arc<coprime_kit::Group>), Failure> {
    let corpus = load(paths, &[group.to_string()])?;
    Ok(corpus.entries()[0].clone())
}

fn create(path: &Path) -> Result<BufWriter<File>, Failure> {
    File::create(path)
        .map(BufWriter::new)
        .with_context(|| format!("creating {}", path.display()))
        .map_err(input)
}

fn print_failures(reports: &[PropertyReport]) {
    for r in reports {
        for c in r.failures() {
            let mut line = format!(
                "{}: check {} {} {:?} failed (predicate {}, reference {})",
                r.group, c.check, c.property, c.parameters, c.predicate, c.reference
            );
            if let Some(w) = &c.witness {
                line.push_str(&format!("; witness {}", w.compact()));
            }
            eprintln!("{line}");
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn verify(
    checks: Vec<Check>,
    prime: Option<usize>,
    groups: &[String],
    corpora: &[PathBuf],
    json: Option<&Path>,
    csv: Option<&Path>,
    timings: bool,
) -> Result<u8, Failure> {
    if let Some(p) = prime {
        if !is_prime(p) {
            return Err(input(anyhow!("--prime {p} is not a prime")));
        }
    }
    let corpus = load(corpora, groups)?;
    let options = VerifyOptions {
        checks,
        prime,
        timings,
    };
    let reports = verify_corpus(&corpus, &options)
        .into_iter()
        .collect::<Result<Vec<_>, _>>()
        .map_err(internal)?;
    if let Some(path) = json {
        let mut out = create(path)?;
        write_json_lines(&reports, &mut out).map_err(input)?;
        out.flush().map_err(input)?;
    }
    if let Some(path) = csv {
        write_csv(&reports, create(path)?).map_err(input)?;
    }
    print!("{}", render_summary(&reports));
    let failed = reports.iter().filter(|r| !r.passed).count();
    let outcomes: usize = reports.iter().map(|r| r.checks.len()).sum();
    println!(
        "{} groups, {} check outcomes, {} groups failing",
        reports.len(),
        outcomes,
        failed
    );
    print_failures(&reports);
    Ok(u8::from(failed > 0))
}

fn emit_json(value: &impl serde::Serialize) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    serde_json::to_writer_pretty(&mut out, value).map_err(internal)?;
    writeln!(out).map_err(internal)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Verify {
            checks,
            prime,
            groups,
            corpora,
            json,
            csv,
            timings,
        } => verify(
            checks,
            prime,
            &groups,
            &corpora,
            json.as_deref(),
            csv.as_deref(),
            timings,
        ),
        Command::Table {
            group,
            format,
            corpora,
        } => {
            let (_, g) = load_one(&corpora, &group)?;
            let table = CharacterTable::compute(Arc::new(ClassData::new(g))).map_err(internal)?;
            let report = table_report(&table);
            match format {
                Format::Json => emit_json(&report)?,
                Format::Text => print!("{}", render_table_text(&report)),
            }
            Ok(0)
        }
        Command::Classes {
            group,
            format,
            corpora,
        } => {
            let (_, g) = load_one(&corpora, &group)?;
            let report = class_report(&ClassData::new(g));
            match format {
                Format::Json => emit_json(&report)?,
                Format::Text => print!("{}", render_classes_text(&report)),
            }
            Ok(0)
        }
        Command::Explore {
            question,
            corpora,
            format,
        } => {
            let corpus = load(&corpora, &[])?;
            match question {
                Question::Q41 => {
                    let found = metabelian_quotient_scan(&corpus).map_err(internal)?;
                    match format {
                        Format::Json => emit_json(&found)?,
                        Format::Text => {
                            println!("groups whose coprime prime-power class products are classes");
                            println!(
                                "{:<14} {:>6} {:>8} {:>9}  G/F(G) metabelian",
                                "group", "order", "|F(G)|", "|G/F(G)|"
                            );
                            for f in &found {
                                println!(
                                    "{:<14} {:>6} {:>8} {:>9}  {}",
                                    f.group,
                                    f.order,
                                    f.fitting_order,
                                    f.quotient_order,
                                    f.quotient_metabelian
                                );
                            }
                            println!("{} groups listed", found.len());
                        }
                    }
                }
                Question::Q43 => {
                    let found = faithful_multiplicative_scan(&corpus).map_err(internal)?;
                    match format {
                        Format::Json => emit_json(&found)?,
                        Format::Text => {
                            println!("faithful nonlinear multiplicative characters of nonnilpotent groups");
                            println!(
                                "{:<14} {:>6} {:>4} {:>6}  vanishes off normal p-subgroup  two-class support",
                                "group", "order", "row", "degree"
                            );
                            for f in &found {
                                let vanishing = match (f.vanishing_prime, f.vanishing_order) {
                                    (Some(p), Some(n)) => format!("p = {p}, order {n}"),
                                    (None, Some(n)) => format!("order {n}"),
                                    _ => "none".to_string(),
                                };
                                println!(
                                    "{:<14} {:>6} {:>4} {:>6}  {:<30}  {}",
                                    f.group,
                                    f.order,
                                    f.row,
                                    f.degree,
                                    vanishing,
                                    f.two_class_support
                                );
                            }
                            println!("{} characters listed", found.len());
                        }
                    }
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, error }) => {
            eprintln!("error: {error:#}");
            ExitCode::from(code)
        }
    }
}
