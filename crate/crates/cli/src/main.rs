//! `flatcat` — enumerate flattened Catalan words, compute their
//! statistics, expand distribution triangles and totals from the exact
//! generating functions, evaluate closed forms, apply the bijections, and
//! run the cross-verification harness.
//!
//! Exit codes: 0 success, 1 domain error (bad data), 2 usage error,
//! 3 verification failure.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use flatcat_core::bijections::{self, Composition, DottedBinaryWord};
use flatcat_core::series;
use flatcat_core::stats::{self, StatKind, StatKindError};
use flatcat_core::verify;
use flatcat_core::words::{self, RenderFormat, Word, DEFAULT_EXHAUSTIVE_CAP};

#[derive(Parser)]
#[command(
    name = "flatcat",
    version,
    about = "Exact toolkit for flattened Catalan words",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Number of flattened Catalan words of length n.
    Count {
        #[arg(long)]
        n: usize,
    },
    /// Stream all flattened Catalan words of length n, one per line, in
    /// lexicographic order.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Restrict to weakly increasing words (single weak run).
        #[arg(long)]
        weakly_increasing: bool,
    },
    /// Statistics of one word (--word), or the distribution of a statistic
    /// over all words of length n (--n with --stat).
    Stats {
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        stat: Option<String>,
        #[arg(long)]
        ell: Option<usize>,
        /// Exhaustive length cap for --n mode.
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_CAP)]
        cap: usize,
        /// text, csv, or json (distribution mode only).
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Distribution triangle of a statistic from its generating function.
    Triangle {
        #[arg(long)]
        stat: String,
        #[arg(long)]
        ell: Option<usize>,
        #[arg(long)]
        max_n: usize,
        /// Largest statistic value column; defaults to max-n.
        #[arg(long)]
        max_k: Option<usize>,
        /// text, csv, json, or markdown.
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Total occurrences of a statistic per length, from its univariate
    /// generating function.
    Totals {
        #[arg(long)]
        stat: String,
        #[arg(long)]
        ell: Option<usize>,
        #[arg(long)]
        max_n: usize,
        /// text, csv, or json.
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// A single triangle entry, via series expansion or a published closed
    /// form.
    Coeffs {
        #[arg(long)]
        stat: String,
        #[arg(long)]
        ell: Option<usize>,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// expand or formula.
        #[arg(long, default_value = "expand")]
        route: String,
    },
    /// Apply a bijection: comp, comp-inv, ocp, dotted, or phi.
    Bijection {
        #[arg(long)]
        which: String,
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        composition: Option<String>,
        #[arg(long)]
        dotted: Option<String>,
    },
    /// Cross-verify enumeration, series, closed forms, and published
    /// sequence prefixes. Exits 3 if any check fails.
    Verify {
        /// Check a single statistic instead of the full battery.
        #[arg(long)]
        stat: Option<String>,
        #[arg(long)]
        ell: Option<usize>,
        /// Exhaustive scope for --stat mode (default 12, at most 20).
        #[arg(long)]
        max_n: Option<usize>,
        /// text or json.
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Lattice diagram of a word.
    Render {
        #[arg(long)]
        word: String,
        /// ascii or svg.
        #[arg(long, default_value = "ascii")]
        format: String,
        /// Comma-separated 1-based letter positions to highlight.
        #[arg(long)]
        highlight: Option<String>,
    },
}

enum CliError {
    Domain(String),
    Usage(String),
    VerificationFailed,
}

impl From<StatKindError> for CliError {
    fn from(err: StatKindError) -> Self {
        CliError::Usage(err.to_string())
    }
}

impl From<words::WordError> for CliError {
    fn from(err: words::WordError) -> Self {
        CliError::Domain(err.to_string())
    }
}

impl From<stats::StatsError> for CliError {
    fn from(err: stats::StatsError) -> Self {
        CliError::Domain(err.to_string())
    }
}

impl From<bijections::BijectionError> for CliError {
    fn from(err: bijections::BijectionError) -> Self {
        CliError::Domain(err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::VerificationFailed) => {
            eprintln!("verification failed");
            ExitCode::from(3)
        }
    }
}

fn parse_kind(stat: &str, ell: Option<usize>) -> Result<StatKind, CliError> {
    let kind = StatKind::parse(stat, ell)?;
    if let Some(l) = kind.ell() {
        if l + 2 > series::MAX_CATALOG_DEGREE {
            return Err(CliError::Usage(format!(
                "ell {l} exceeds the catalog degree cap of {}",
                series::MAX_CATALOG_DEGREE - 2
            )));
        }
    }
    Ok(kind)
}

fn parse_word(text: &str) -> Result<Word, CliError> {
    let word: Word = text.parse()?;
    if !word.is_catalan() {
        return Err(CliError::Domain(format!("{word} is not a Catalan word")));
    }
    Ok(word)
}

fn require_positive(n: usize) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::Domain("length must be at least 1".into()));
    }
    Ok(())
}

fn check_format(format: &str, allowed: &[&str]) -> Result<(), CliError> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "format {format:?} not supported here (expected one of: {})",
            allowed.join(", ")
        )))
    }
}

/// Swallows broken pipes so `flatcat enumerate | head` exits cleanly.
fn emit(result: io::Result<()>) -> Result<(), CliError> {
    match result {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(CliError::Domain(format!("write failed: {e}"))),
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Count { n } => {
            require_positive(n)?;
            println!("{}", words::count_flattened(n));
            Ok(())
        }
        Command::Enumerate {
            n,
            weakly_increasing,
        } => {
            let stdout = io::stdout();
            let mut out = io::BufWriter::new(stdout.lock());
            if weakly_increasing {
                for word in words::enumerate_weakly_increasing(n)? {
                    emit(writeln!(out, "{word}"))?;
                }
            } else {
                for word in words::enumerate_flattened(n)? {
                    emit(writeln!(out, "{word}"))?;
                }
            }
            emit(out.flush())
        }
        Command::Stats {
            word,
            n,
            stat,
            ell,
            cap,
            format,
        } => match (word, n) {
            (Some(text), None) => {
                let word = parse_word(&text)?;
                match stat {
                    Some(name) => {
                        let kind = parse_kind(&name, ell)?;
                        println!("{}", stats::statistic(&word, kind));
                    }
                    None => print_all_statistics(&word),
                }
                Ok(())
            }
            (None, Some(n)) => {
                check_format(&format, &["text", "csv", "json"])?;
                let name =
                    stat.ok_or_else(|| CliError::Usage("distribution mode needs --stat".into()))?;
                let kind = parse_kind(&name, ell)?;
                let dist = stats::distribution(n, kind, cap)?;
                print_distribution(&dist, &format);
                Ok(())
            }
            _ => Err(CliError::Usage("pass exactly one of --word or --n".into())),
        },
        Command::Triangle {
            stat,
            ell,
            max_n,
            max_k,
            format,
        } => {
            check_format(&format, &["text", "csv", "json", "markdown"])?;
            let kind = parse_kind(&stat, ell)?;
            require_positive(max_n)?;
            let triangle = series::triangle(kind, max_n, max_k.unwrap_or(max_n));
            let rendered = match format.as_str() {
                "csv" => triangle.to_csv(),
                "json" => triangle.to_json(),
                "markdown" => triangle.to_markdown(),
                _ => triangle.to_text(),
            };
            print!("{rendered}");
            Ok(())
        }
        Command::Totals {
            stat,
            ell,
            max_n,
            format,
        } => {
            check_format(&format, &["text", "csv", "json"])?;
            let kind = parse_kind(&stat, ell)?;
            require_positive(max_n)?;
            let seq = series::total_sequence(kind, max_n);
            match format.as_str() {
                "csv" => {
                    println!("n,total");
                    for (n, total) in seq.iter().enumerate().skip(1) {
                        println!("{n},{total}");
                    }
                }
                "json" => {
                    let totals: Vec<String> = seq.iter().skip(1).map(|v| v.to_string()).collect();
                    let value = serde_json_value(kind, &totals);
                    println!("{value}");
                }
                _ => {
                    for (n, total) in seq.iter().enumerate().skip(1) {
                        println!("{n} {total}");
                    }
                }
            }
            Ok(())
        }
        Command::Coeffs {
            stat,
            ell,
            n,
            k,
            route,
        } => {
            let kind = parse_kind(&stat, ell)?;
            require_positive(n)?;
            match route.as_str() {
                "expand" => {
                    let triangle = series::triangle(kind, n, k);
                    println!("{}", triangle.value(n, k));
                    Ok(())
                }
                "formula" => match series::closed_form_count(kind, n, k) {
                    Some(value) => {
                        println!("{value}");
                        Ok(())
                    }
                    None => Err(CliError::Domain(format!(
                        "no published closed form for {kind} cells at k={k}"
                    ))),
                },
                other => Err(CliError::Usage(format!(
                    "route {other:?} not supported (expected expand or formula)"
                ))),
            }
        }
        Command::Bijection {
            which,
            word,
            composition,
            dotted,
        } => {
            let need_word = |w: &Option<String>| -> Result<Word, CliError> {
                let text = w
                    .as_ref()
                    .ok_or_else(|| CliError::Usage(format!("--which {which} needs --word")))?;
                parse_word(text)
            };
            match which.as_str() {
                "comp" => {
                    let composition = bijections::psi_composition(&need_word(&word)?)?;
                    println!("{composition}");
                    Ok(())
                }
                "comp-inv" => {
                    let text = composition.ok_or_else(|| {
                        CliError::Usage("--which comp-inv needs --composition".into())
                    })?;
                    let parsed: Composition = text.parse()?;
                    println!("{}", bijections::psi_composition_inverse(&parsed)?);
                    Ok(())
                }
                "ocp" => {
                    println!("{}", bijections::psi_ocp(&need_word(&word)?)?);
                    Ok(())
                }
                "dotted" => {
                    let text = dotted
                        .ok_or_else(|| CliError::Usage("--which dotted needs --dotted".into()))?;
                    let parsed: DottedBinaryWord = text.parse()?;
                    println!("{}", bijections::f_dotted(&parsed)?);
                    Ok(())
                }
                "phi" => {
                    println!("{}", bijections::phi(&need_word(&word)?)?);
                    Ok(())
                }
                other => Err(CliError::Usage(format!(
                    "unknown bijection {other:?} (expected comp, comp-inv, ocp, dotted, or phi)"
                ))),
            }
        }
        Command::Verify {
            stat,
            ell,
            max_n,
            format,
        } => {
            check_format(&format, &["text", "json"])?;
            let report = match stat {
                Some(name) => {
                    let kind = parse_kind(&name, ell)?;
                    let scope = max_n.unwrap_or(verify::DEFAULT_TRIANGLE_SCOPE);
                    if scope > DEFAULT_EXHAUSTIVE_CAP {
                        return Err(CliError::Domain(format!(
                            "--max-n {scope} exceeds the exhaustive cap of {DEFAULT_EXHAUSTIVE_CAP}"
                        )));
                    }
                    verify::cross_check(kind, scope)
                }
                None => verify::full_report(),
            };
            match format.as_str() {
                "json" => print!("{}", report.to_json()),
                _ => print!("{}", report.to_text()),
            }
            if report.is_green() {
                Ok(())
            } else {
                Err(CliError::VerificationFailed)
            }
        }
        Command::Render {
            word,
            format,
            highlight,
        } => {
            let word = parse_word(&word)?;
            let render_format = match format.as_str() {
                "ascii" => RenderFormat::Ascii,
                "svg" => RenderFormat::Svg,
                other => {
                    return Err(CliError::Usage(format!(
                        "format {other:?} not supported here (expected ascii or svg)"
                    )))
                }
            };
            let highlights = match highlight {
                None => Vec::new(),
                Some(text) => text
                    .split(',')
                    .map(|tok| {
                        tok.trim().parse::<usize>().map_err(|_| {
                            CliError::Domain(format!("invalid highlight position {tok:?}"))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?,
            };
            print!(
                "{}",
                words::render_lattice(&word, render_format, &highlights)?
            );
            Ok(())
        }
    }
}

fn print_all_statistics(word: &Word) {
    let n = word.len();
    for kind in [
        StatKind::Runs,
        StatKind::WeakRuns,
        StatKind::DescentRuns,
        StatKind::WeakDescentRuns,
        StatKind::Valleys,
        StatKind::SymmetricValleys,
        StatKind::Peaks,
        StatKind::SymmetricPeaks,
    ] {
        println!("{kind} {}", stats::statistic(word, kind));
    }
    for l in 1..=n.saturating_sub(2) {
        let count = stats::statistic(word, StatKind::EllValleys(l));
        if count > 0 {
            println!("{}-val {count}", l);
        }
    }
    for l in 1..=n.saturating_sub(2) {
        let count = stats::statistic(word, StatKind::EllPeaks(l));
        if count > 0 {
            println!("{}-peak {count}", l);
        }
    }
}

fn print_distribution(dist: &stats::Distribution, format: &str) {
    let k_lo = dist
        .kind
        .k_start()
        .min(dist.counts().keys().next().copied().unwrap_or(0));
    let k_hi = dist.max_k();
    match format {
        "csv" => {
            println!("k,count");
            for k in k_lo..=k_hi {
                println!("{k},{}", dist.count(k));
            }
        }
        "json" => {
            let counts: Vec<String> = (k_lo..=k_hi).map(|k| dist.count(k).to_string()).collect();
            println!(
                "{{\"n\": {}, \"stat\": \"{}\", \"ell\": {}, \"k_start\": {k_lo}, \"counts\": [{}]}}",
                dist.n,
                dist.kind.base_name(),
                dist.kind.ell().map_or("null".to_string(), |l| l.to_string()),
                counts.iter().map(|c| format!("\"{c}\"")).collect::<Vec<_>>().join(", ")
            );
        }
        _ => {
            for k in k_lo..=k_hi {
                println!("{k} {}", dist.count(k));
            }
        }
    }
}

fn serde_json_value(kind: StatKind, totals: &[String]) -> String {
    format!(
        "{{\"stat\": \"{}\", \"ell\": {}, \"first_n\": 1, \"totals\": [{}]}}",
        kind.base_name(),
        kind.ell().map_or("null".to_string(), |l| l.to_string()),
        totals
            .iter()
            .map(|t| format!("\"{t}\""))
            .collect::<Vec<_>>()
            .join(", ")
    )
}
