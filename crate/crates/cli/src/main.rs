//! `braid-gamma`: command-line access to the framed Homfly engine.
//!
//! Per-braid subcommands take the braid as a positional argument, or read
//! one braid per line from standard input when it is omitted.

mod render;

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use braid_gamma::braid::{self, BraidWord};
use braid_gamma::error::Error;
use braid_gamma::{conway, hecke, selfcheck, span_lab, vassiliev};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use render::{envelope, integer_json, poly_json};

#[derive(Parser)]
#[command(name = "braid-gamma", version, about = "Framed Homfly polynomials of closed braids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for every random choice.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Γ(mu, z) of the closure.
    Gamma(BraidArgs),
    /// The Homfly polynomial P(v, z) of the closure.
    Homfly(BraidArgs),
    /// Alexander and Conway polynomials of a knot closure.
    Alexander(BraidArgs),
    /// Vanishing of the framing-corrected series of a knot closure.
    Triviality {
        #[command(flatten)]
        braid: BraidArgs,
        /// Truncation degree; defaults to max(strands, word length).
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// The Bennequin number e - n.
    Bennequin(BraidArgs),
    /// Rank of the degree-k coefficient span over closed n-braids.
    Dims {
        /// A single braid index; defaults to 2..=5.
        #[arg(long)]
        strands: Option<usize>,
        /// Largest degree k.
        #[arg(long, default_value_t = 7)]
        max_degree: u32,
        /// Random knot braids sampled per cell.
        #[arg(long, default_value_t = selfcheck::DIMENSION_SAMPLES)]
        samples: usize,
    },
    /// Exhaustive (or sampled) check of the exponent-sum bound for
    /// Homfly-n-trivial knots.
    Sweep {
        /// A single braid index; defaults to B_2 and B_3.
        #[arg(long)]
        strands: Option<usize>,
        /// Longest word; defaults to 8, 7, 5 for n = 2, 3, >= 4.
        #[arg(long)]
        max_length: Option<usize>,
        /// Sample this many random words instead of enumerating.
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Runs the full invariant suite and prints a pass/fail table.
    Selfcheck,
}

#[derive(Args, Clone)]
struct BraidArgs {
    /// Signed generator indices, e.g. "1 -2 1 -2"; read from stdin if absent.
    #[arg(allow_hyphen_values = true)]
    braid: Option<String>,
    /// Strand count; defaults to one more than the largest generator.
    #[arg(long)]
    strands: Option<usize>,
}

/// Output of one job: a text block and a JSON object.
struct Rendered {
    text: String,
    json: Value,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::MalformedToken(_) | Error::GeneratorOutOfRange { .. } | Error::ZeroStrands => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

type JobResult = Result<Rendered, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let code = match cli.command {
        Command::Gamma(b) => per_braid(&b, format, gamma_job),
        Command::Homfly(b) => per_braid(&b, format, homfly_job),
        Command::Alexander(b) => per_braid(&b, format, alexander_job),
        Command::Triviality { braid, max_degree } => {
            per_braid(&braid, format, move |input, w| triviality_job(input, w, max_degree))
        }
        Command::Bennequin(b) => per_braid(&b, format, bennequin_job),
        Command::Dims { strands, max_degree, samples } => dims(strands, max_degree, samples, cli.seed, format),
        Command::Sweep { strands, max_length, samples } => sweep(strands, max_length, samples, cli.seed, format),
        Command::Selfcheck => run_selfcheck(cli.seed, format),
    };
    ExitCode::from(code)
}

fn per_braid<F>(args: &BraidArgs, format: Format, job: F) -> u8
where
    F: Fn(&str, &BraidWord) -> JobResult + Sync,
{
    let run = |line: &str| -> JobResult {
        let w = braid::parse(line, args.strands)?;
        job(line, &w)
    };
    let inputs: Vec<String> = match &args.braid {
        Some(b) => vec![b.clone()],
        None => match io::stdin().lock().lines().collect::<io::Result<Vec<_>>>() {
            Ok(lines) => lines.into_iter().map(|l| l.trim().to_string()).filter(|l| !l.is_empty()).collect(),
            Err(e) => {
                eprintln!("braid-gamma: reading stdin: {e}");
                return 2;
            }
        },
    };
    // par_iter + collect keeps input order.
    let results: Vec<JobResult> = inputs.par_iter().map(|l| run(l)).collect();

    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut code = 0;
    for (input, result) in inputs.iter().zip(results) {
        match result {
            Ok(r) => {
                let _ = match format {
                    Format::Text => writeln!(out, "{}", r.text),
                    Format::Json => writeln!(out, "{}", r.json),
                };
            }
            Err(f) => {
                eprintln!("braid-gamma: {input:?}: {}", f.message);
                if format == Format::Json && args.braid.is_none() {
                    let _ = writeln!(out, "{}", json!({ "input": input, "error": f.message }));
                }
                code = code.max(f.code);
            }
        }
    }
    code
}

fn gamma_job(input: &str, w: &BraidWord) -> JobResult {
    let g = hecke::gamma(w);
    let mut obj = envelope(input, w, poly_json(&g.value));
    obj.insert("word_length".into(), w.len().into());
    Ok(Rendered { text: format!("Gamma = {}", g.value), json: obj.into() })
}

fn homfly_job(input: &str, w: &BraidWord) -> JobResult {
    let p = vassiliev::homfly(w);
    let obj = envelope(input, w, poly_json(&p));
    Ok(Rendered { text: format!("P = {p}"), json: obj.into() })
}

fn alexander_job(input: &str, w: &BraidWord) -> JobResult {
    let delta = conway::alexander_polynomial(w)?;
    let nabla = conway::symmetric_to_conway(&delta);
    let mut obj = envelope(input, w, poly_json(&delta));
    obj.insert("conway".into(), poly_json(&nabla));
    Ok(Rendered { text: format!("Alexander = {delta}\nConway = {nabla}"), json: obj.into() })
}

fn triviality_job(input: &str, w: &BraidWord, max_degree: Option<u32>) -> JobResult {
    let k = max_degree.unwrap_or_else(|| w.strands().max(w.len()) as u32);
    let series = vassiliev::corrected_series(&hecke::gamma(w), k)?;
    let r = vassiliev::triviality_report(w, k)?;
    let mut obj = envelope(input, w, poly_json(&series.as_poly()));
    obj.insert("max_checked".into(), r.max_checked.into());
    obj.insert("first_nonvanishing".into(), r.first_nonvanishing.into());
    obj.insert("homfly_k_trivial_up_to".into(), r.homfly_k_trivial_up_to.into());
    obj.insert("homfly_n_trivial".into(), r.hypothesis_holds().into());
    obj.insert("bennequin".into(), r.bennequin.into());
    obj.insert("allowed_exponents".into(), r.allowed_exponents.clone().into());
    obj.insert("constraint_satisfied".into(), r.constraint_satisfied.into());
    obj.insert("consistent".into(), r.consistent().into());
    let first = r.first_nonvanishing.map_or_else(|| "none".to_string(), |j| j.to_string());
    let text = [
        format!("series = {} + O(z^{})", series.as_poly(), k + 1),
        format!("first_nonvanishing = {first}"),
        format!("homfly_k_trivial_up_to = {}", r.homfly_k_trivial_up_to),
        format!("homfly_n_trivial = {}", r.hypothesis_holds()),
        format!("bennequin = {}", r.bennequin),
        format!("allowed_exponents = {:?}", r.allowed_exponents),
        format!("constraint_satisfied = {}", r.constraint_satisfied),
        format!("consistent = {}", r.consistent()),
    ]
    .join("\n");
    Ok(Rendered { text, json: obj.into() })
}

fn bennequin_job(input: &str, w: &BraidWord) -> JobResult {
    let b = vassiliev::bennequin(w);
    let mut obj = envelope(input, w, integer_json(b));
    obj.insert("bennequin".into(), b.into());
    Ok(Rendered { text: b.to_string(), json: obj.into() })
}

fn dims(strands: Option<usize>, max_degree: u32, samples: usize, seed: u64, format: Format) -> u8 {
    let ns: Vec<usize> = match strands {
        Some(n) if n < 2 => {
            eprintln!("braid-gamma: dims needs --strands >= 2");
            return 2;
        }
        Some(n) => vec![n],
        None => (2..=5).collect(),
    };
    let cells: Vec<(usize, u32)> = ns.iter().flat_map(|&n| (0..=max_degree).map(move |k| (n, k))).collect();
    let results: Vec<_> = cells.par_iter().map(|&(n, k)| span_lab::rank_experiment(n, k, samples, seed)).collect();
    let mut code = 0;
    if format == Format::Text {
        println!("{:>3} {:>3} {:>9} {:>8} {:>9} {:>7}", "n", "k", "predicted", "observed", "witnesses", "samples");
    }
    for (&(n, k), r) in cells.iter().zip(results) {
        match r {
            Ok(r) => {
                if !r.matches() {
                    code = 1;
                }
                match format {
                    Format::Text => println!(
                        "{:>3} {:>3} {:>9} {:>8} {:>9} {:>7}",
                        r.n, r.k, r.predicted, r.observed_rank, r.witness_count, r.sample_count
                    ),
                    Format::Json => println!(
                        "{}",
                        json!({
                            "n": r.n, "k": r.k, "predicted": r.predicted, "observed_rank": r.observed_rank,
                            "witness_count": r.witness_count, "sample_count": r.sample_count, "matches": r.matches(),
                        })
                    ),
                }
            }
            Err(e) => {
                eprintln!("braid-gamma: n={n} k={k}: {e}");
                code = 1;
            }
        }
    }
    code
}

fn default_sweep_length(n: usize) -> usize {
    match n {
        0..=2 => 8,
        3 => 7,
        _ => 5,
    }
}

fn sweep(strands: Option<usize>, max_length: Option<usize>, samples: Option<usize>, seed: u64, format: Format) -> u8 {
    let ns: Vec<usize> = match strands {
        Some(n) if n < 1 => {
            eprintln!("braid-gamma: sweep needs --strands >= 1");
            return 2;
        }
        Some(n) => vec![n],
        None => vec![2, 3],
    };
    let mut code = 0;
    for n in ns {
        let len = max_length.unwrap_or_else(|| default_sweep_length(n));
        let r = match samples {
            Some(s) => vassiliev::bennequin_sample(n, len, s, seed),
            None => vassiliev::bennequin_sweep(n, len),
        };
        if !r.counterexamples.is_empty() {
            code = 1;
        }
        let counterexamples: Vec<String> = r.counterexamples.iter().map(|w| w.to_string()).collect();
        match format {
            Format::Text => {
                println!(
                    "B_{n}, length <= {len}: {} words, {} knots, {} Homfly-{n}-trivial, {} counterexamples",
                    r.words,
                    r.knots,
                    r.trivial,
                    counterexamples.len()
                );
                for c in &counterexamples {
                    println!("  counterexample: {c}");
                }
            }
            Format::Json => println!(
                "{}",
                json!({
                    "strands": r.strands, "max_length": r.max_length, "words": r.words, "knots": r.knots,
                    "trivial": r.trivial, "counterexamples": counterexamples,
                })
            ),
        }
    }
    code
}

fn run_selfcheck(seed: u64, format: Format) -> u8 {
    let outcomes = selfcheck::run_all(seed);
    for o in &outcomes {
        match format {
            Format::Text => {
                let tag = if o.passed { "PASS" } else { "FAIL" };
                println!("[{tag}] {:>2} {}: {}", o.id, o.name, o.detail);
            }
            Format::Json => println!(
                "{}",
                json!({ "id": o.id, "name": o.name, "passed": o.passed, "detail": o.detail })
            ),
        }
    }
    u8::from(!outcomes.iter().all(|o| o.passed))
}
