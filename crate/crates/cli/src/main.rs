//! `liecx`: Lie complexity profiles, Rauzy graphs and verification reports.

mod report;

use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lie_complexity::complexity::{
    classify_length, lie_cycles, profile, rauzy_graph, Methods, Morphism, WordSource,
};
use lie_complexity::export::{
    formula_to_csv, formula_to_json, graph_to_dot, graph_to_json_value, graphs_to_json,
    rows_to_csv, rows_to_json, FormulaRow,
};
use lie_complexity::sturmian::SlopeSpec;
use lie_complexity::{Alphabet, Error};

const DEFAULT_MORPHISM_PREFIX: usize = 1 << 16;

#[derive(Parser)]
#[command(name = "liecx", version, about = "Lie complexity of infinite words")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a prefix of the word.
    Generate {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        len: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Factor and Lie complexity for each n in a range.
    Profile {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_parser = parse_range)]
        n: NRange,
        /// Comma-separated subset of bruteforce,rauzy,formula.
        /// Defaults to all three for --cf sources and bruteforce,rauzy otherwise.
        #[arg(long)]
        methods: Option<Methods>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Rauzy graphs with their Lie cycles marked.
    Rauzy {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_parser = parse_range)]
        n: NRange,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Closed-form Lie complexity of a Sturmian slope.
    Formula {
        #[arg(long)]
        cf: SlopeSpec,
        #[arg(long, value_parser = parse_range)]
        n: NRange,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the structural checks and write a pass/fail report.
    Verify {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, value_parser = parse_range)]
        n: NRange,
        /// Largest k for the index-set checks (--cf sources only).
        #[arg(long, default_value_t = 5)]
        k_max: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SourceSelect {
    /// Continued-fraction digits of a Sturmian slope, e.g. "2;(1)".
    #[arg(long)]
    cf: Option<SlopeSpec>,
    /// File holding a finite word over --alphabet.
    #[arg(long)]
    word_file: Option<PathBuf>,
    /// Morphism rules, e.g. "0->01,1->0".
    #[arg(long)]
    morphism: Option<String>,
}

#[derive(Args)]
#[group(skip)]
struct SourceArgs {
    #[command(flatten)]
    select: SourceSelect,
    /// First letter of the morphism fixed point.
    #[arg(long, requires = "morphism")]
    seed_symbol: Option<char>,
    /// Letters of --word-file and --morphism words, in symbol order.
    #[arg(long, default_value = "01")]
    alphabet: String,
    /// Sturmian saturation cap, or the fixed prefix length of a morphism.
    #[arg(long)]
    prefix_cap: Option<usize>,
}

#[derive(Args)]
struct OutputArgs {
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Dot,
    Text,
}

#[derive(Clone, Debug)]
struct NRange(RangeInclusive<usize>);

fn parse_range(s: &str) -> Result<NRange, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|e| format!("bad bound {t:?}: {e}"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b)?),
        None => {
            let n = num(s)?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(NRange(lo..=hi))
}

/// A failure with its exit code and a short machine-readable name.
#[derive(Debug)]
struct Failure {
    kind: &'static str,
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            kind: "usage",
            code: 2,
            message: message.into(),
        }
    }

    fn check(kind: &'static str, message: impl Into<String>) -> Self {
        Failure {
            kind,
            code: 5,
            message: message.into(),
        }
    }

    fn emit(&self) -> ExitCode {
        let line = serde_json::json!({
            "error": self.kind,
            "exit_code": self.code,
            "message": self.message,
        });
        eprintln!("{line}");
        ExitCode::from(self.code)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (kind, code) = match &e {
            Error::DigitsExhausted { .. } => ("digits_exhausted", 3),
            Error::SaturationFailed { .. } => ("saturation_failed", 4),
            Error::Overflow { .. } => ("overflow", 1),
            Error::Parse { .. }
            | Error::InvalidSymbol { .. }
            | Error::InvalidAlphabet(_)
            | Error::InvalidMorphism(_)
            | Error::InvalidSlope { .. }
            | Error::ZeroDenominator
            | Error::CannotNormalize => ("parse", 2),
            _ => ("usage", 2),
        };
        Failure {
            kind,
            code,
            message: e.to_string(),
        }
    }
}

fn io_failure(path: &std::path::Path, e: io::Error) -> Failure {
    Failure {
        kind: "io",
        code: 1,
        message: format!("{}: {e}", path.display()),
    }
}

type Outcome<T> = Result<T, Failure>;

struct Input {
    source: WordSource,
    alphabet: Alphabet,
}

impl SourceArgs {
    fn build(&self) -> Outcome<Input> {
        if let Some(spec) = &self.select.cf {
            let mut source = WordSource::sturmian(spec)?;
            if let Some(cap) = self.prefix_cap {
                source = source.with_prefix_cap(cap);
            }
            return Ok(Input {
                source,
                alphabet: Alphabet::binary(),
            });
        }
        let alphabet = Alphabet::new(&self.alphabet)?;
        let source = if let Some(path) = &self.select.word_file {
            let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
            WordSource::literal(alphabet.parse_word(&text)?)
        } else {
            let rules = self
                .select
                .morphism
                .as_deref()
                .expect("clap enforces one source");
            let morphism = Morphism::parse(rules, &alphabet)?;
            let seed = match self.seed_symbol {
                Some(c) => alphabet.symbol_of(c).ok_or_else(|| {
                    Failure::usage(format!("seed symbol {c:?} is not in the alphabet"))
                })?,
                None => 0,
            };
            let len = self.prefix_cap.unwrap_or(DEFAULT_MORPHISM_PREFIX);
            WordSource::morphism(morphism, seed, len)?
        };
        Ok(Input { source, alphabet })
    }
}

impl OutputArgs {
    fn format(&self, allowed: &[Format], default: Format) -> Outcome<Format> {
        match self.format {
            None => Ok(default),
            Some(f) if allowed.contains(&f) => Ok(f),
            Some(f) => Err(Failure::usage(format!(
                "format {} is not available for this command",
                f.to_possible_value().unwrap().get_name()
            ))),
        }
    }

    fn write(&self, text: &str) -> Outcome<()> {
        match &self.out {
            Some(path) => fs::write(path, text).map_err(|e| io_failure(path, e)),
            None => {
                let mut stdout = io::stdout().lock();
                stdout
                    .write_all(text.as_bytes())
                    .and_then(|_| stdout.flush())
                    .map_err(|e| io_failure(std::path::Path::new("<stdout>"), e))
            }
        }
    }
}

fn run(command: Command) -> Outcome<()> {
    match command {
        Command::Generate {
            source,
            len,
            output,
        } => {
            output.format(&[Format::Text], Format::Text)?;
            let input = source.build()?;
            if let Some(available) = input.source.finite_len() {
                if len > available {
                    return Err(Error::WindowExceedsWord {
                        n: len,
                        len: available,
                    }
                    .into());
                }
            }
            let word = input.source.prefix(len)?;
            output.write(&(input.alphabet.render(&word) + "\n"))
        }
        Command::Profile {
            source,
            n,
            methods,
            output,
        } => {
            let format = output.format(&[Format::Csv, Format::Json], Format::Csv)?;
            let input = source.build()?;
            let methods = methods.unwrap_or(Methods {
                bruteforce: true,
                rauzy: true,
                formula: input.source.is_sturmian(),
            });
            if methods.formula && !input.source.is_sturmian() {
                return Err(Failure::usage("the formula method needs a --cf source"));
            }
            let rows = profile(&input.source, n.0, methods)?;
            output.write(&match format {
                Format::Json => rows_to_json(&rows),
                _ => rows_to_csv(&rows),
            })?;
            if let Some(r) = rows.iter().find(|r| !r.methods_agree()) {
                return Err(Failure::check(
                    "method_disagreement",
                    format!("methods disagree at n={}", r.n),
                ));
            }
            if let Some(r) = rows.iter().find(|r| !r.bound_ok) {
                return Err(Failure::check(
                    "bound_violation",
                    format!("L(n) exceeds p(n) - p(n-1) + 1 at n={}", r.n),
                ));
            }
            Ok(())
        }
        Command::Rauzy { source, n, output } => {
            let format = output.format(&[Format::Dot, Format::Json], Format::Dot)?;
            if *n.0.start() == 0 {
                return Err(Failure::usage("Rauzy graphs need n >= 1"));
            }
            let input = source.build()?;
            let mut dot = String::new();
            let mut graphs = Vec::new();
            for order in n.0 {
                let graph = rauzy_graph(&input.source, order)?;
                let cycles = lie_cycles(&graph);
                match format {
                    Format::Json => {
                        graphs.push(graph_to_json_value(&graph, &cycles, &input.alphabet))
                    }
                    _ => dot.push_str(&graph_to_dot(&graph, &cycles, &input.alphabet)),
                }
            }
            output.write(&match format {
                Format::Json => graphs_to_json(&graphs),
                _ => dot,
            })
        }
        Command::Formula { cf, n, output } => {
            let format = output.format(&[Format::Csv, Format::Json], Format::Csv)?;
            let (slope, _) = cf.normalize()?;
            let rows =
                n.0.map(|n| {
                    let case = classify_length(&slope, n)?;
                    Ok(FormulaRow {
                        n,
                        lie_formula: case.lie_complexity(),
                        case_tag: case.to_string(),
                    })
                })
                .collect::<Result<Vec<_>, Error>>()?;
            output.write(&match format {
                Format::Json => formula_to_json(&rows),
                _ => formula_to_csv(&rows),
            })
        }
        Command::Verify {
            source,
            n,
            k_max,
            output,
        } => {
            let format = output.format(&[Format::Text, Format::Json], Format::Text)?;
            let input = source.build()?;
            let report = report::verify(&input.source, source.select.cf.as_ref(), n.0, k_max)?;
            output.write(&match format {
                Format::Json => report.to_json(),
                _ => report.to_text(),
            })?;
            if report.failed() > 0 {
                return Err(Failure::check(
                    "verification_failed",
                    format!("{} of {} checks failed", report.failed(), report.total()),
                ));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                e.exit();
            }
            let text = e.to_string();
            let message: Vec<&str> = text
                .lines()
                .take_while(|l| !l.starts_with("Usage:"))
                .map(|l| l.trim().trim_start_matches("error: "))
                .filter(|l| !l.is_empty())
                .collect();
            return Failure::usage(message.join(" ")).emit();
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => f.emit(),
    }
}
