//! Command-line workbench around the `subdiam` library: pairwise distances,
//! factor-language listing, exact and sampled diameters, growth
//! classification, prefix-growth tables, ratio-window estimates, and the
//! built-in acceptance checks.
//!
//! Results go to stdout (or `--out`); progress and metadata go to stderr.
//! Exit codes: 0 success, 1 a verification-style check failed, 2 bad input
//! (including parse errors, with line and column), 3 a resource cap was hit.

use clap::{Parser, Subcommand, ValueEnum};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use subdiam::classify;
use subdiam::edit::{indel_distance_with, Engine};
use subdiam::experiments::{diam_curve, rk_estimate, rk_recursion_check, RecursionVerdict, RkSampling};
use subdiam::language::FactorClosure;
use subdiam::render;
use subdiam::thue_morse;
use subdiam::verify;
use subdiam::{diameter, indel_distance, Alphabet, DiameterMode, Error, Substitution, Word};

#[derive(Parser)]
#[command(
    name = "subdiam",
    version,
    about = "Indel distances and factor-language diameters of substitutions",
    propagate_version = true
)]
struct Cli {
    /// Seed for randomized estimates; identical seeds give identical output.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker thread count (default: all cores). Results never depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Approximate memory cap in MiB for factor-set construction
    /// (words/diam); other commands use the built-in caps.
    #[arg(long, global = true)]
    mem_cap: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    /// Pick an engine from the input shape.
    Auto,
    /// Quadratic two-row table.
    Dp,
    /// Bit-parallel row engine.
    Bitparallel,
    /// Greedy diagonal band.
    Band,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum DiamFormat {
    Csv,
    Text,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum TmFormat {
    Csv,
    /// Two-column `n value` rows of surviving-letter counts.
    Bfile,
    Svg,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum CurveFormat {
    Csv,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Distance between two words: half the indels needed to connect them.
    Dist {
        /// First word, e.g. `10002` (single-character letters).
        #[arg(long)]
        x: String,
        /// Second word.
        #[arg(long)]
        y: String,
        /// Comma-separated alphabet tokens; default: the characters present.
        #[arg(long)]
        alphabet: Option<String>,
        #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
        engine: EngineArg,
    },

    /// List every factor of one length, one word per line.
    Words {
        /// Substitution file: lines of `letter -> image tokens`.
        #[arg(long)]
        sub: PathBuf,
        /// Factor length.
        #[arg(long)]
        n: usize,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Diameter of the length-n factor set, exact or sampled.
    Diam {
        #[arg(long)]
        sub: PathBuf,
        #[arg(long)]
        n: usize,
        /// Sample this many pairs instead of the exact scan.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value_t = DiamFormat::Csv)]
        format: DiamFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Letter-graph analysis: growth verdict, components, witness pair.
    Classify {
        #[arg(long)]
        sub: PathBuf,
        /// Also check the witness pair through this many iterate levels;
        /// exits 1 if any level fails.
        #[arg(long)]
        witness_levels: Option<u32>,
    },

    /// Growth table of the binary parity word against its complement.
    Tm {
        /// Score the doubling families n = 2^k and n = 3*2^k up to this bound.
        #[arg(long)]
        max: Option<u64>,
        /// Explicit comma-separated lengths (overrides --max).
        #[arg(long)]
        lengths: Option<String>,
        /// Constant for the reference envelope column.
        #[arg(long, default_value_t = 1.0)]
        envelope_c: f64,
        #[arg(long, value_enum, default_value_t = TmFormat::Csv)]
        format: TmFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Largest diameter-to-length ratio over the k-th geometric length window.
    Rk {
        #[arg(long)]
        sub: PathBuf,
        /// Window index.
        #[arg(long)]
        k: u32,
        /// Base of the window boundaries ceil(base^(k^2)).
        #[arg(long, default_value_t = 2.0)]
        base: f64,
        /// Score every length exactly when the window ends at or below this.
        #[arg(long, default_value_t = 512)]
        exact_cap: u64,
        /// Lengths sampled per window when the exact cap is exceeded.
        #[arg(long, default_value_t = 6)]
        n_count: usize,
        /// Word pairs drawn per sampled length.
        #[arg(long, default_value_t = 12)]
        pair_budget: u64,
        /// Also estimate window k+1 and test the contraction step between
        /// them; exits 1 on a violation candidate.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Diameter against length with a sublinearity reference curve.
    Curve {
        #[arg(long)]
        sub: PathBuf,
        /// Score every length from 2 up to this bound.
        #[arg(long)]
        max: u64,
        /// Sample this many pairs per length instead of exact scans.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value_t = CurveFormat::Csv)]
        format: CurveFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Run the built-in acceptance checks; exits 1 if any fail.
    Verify,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        // A failure here means a pool already exists, which is fine.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build_global();
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Resource(_) => 3u8,
                _ => 2u8,
            })
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    let seed = cli.seed;
    let mem_cap = cli.mem_cap;
    match cli.command {
        Command::Dist {
            x,
            y,
            alphabet,
            engine,
        } => {
            let alphabet = match alphabet {
                Some(spec) => {
                    Alphabet::new(spec.split(',').map(|t| t.trim().to_string()).collect())?
                }
                None => inferred_alphabet(&x, &y)?,
            };
            let wx = Word::parse(&x, &alphabet)?;
            let wy = Word::parse(&y, &alphabet)?;
            let d = match engine {
                EngineArg::Auto => indel_distance(&wx.0, &wy.0),
                EngineArg::Dp => indel_distance_with(&wx.0, &wy.0, Engine::Dp),
                EngineArg::Bitparallel => indel_distance_with(&wx.0, &wy.0, Engine::BitParallel),
                EngineArg::Band => indel_distance_with(&wx.0, &wy.0, Engine::Band),
            };
            println!("d_E = {d}");
            Ok(0)
        }

        Command::Words { sub, n, out } => {
            let sub = load_substitution(&sub)?;
            let closure = capped_closure(&sub, n, mem_cap)?;
            let set = closure.set(n);
            let mut body = String::new();
            for w in &set.words {
                body.push_str(&w.render(sub.alphabet()));
                body.push('\n');
            }
            emit(&out, &body)?;
            eprintln!(
                "length {n}: {} words ({} factors up to this length, {} rounds)",
                set.words.len(),
                closure.size(),
                closure.rounds()
            );
            Ok(0)
        }

        Command::Diam {
            sub,
            n,
            budget,
            format,
            out,
        } => {
            let sub = load_substitution(&sub)?;
            let closure = capped_closure(&sub, n, mem_cap)?;
            let set = closure.set(n);
            let mode = match budget {
                Some(budget) => DiameterMode::Sample { budget, seed },
                None => DiameterMode::Exact,
            };
            let report = diameter(&set, mode)?;
            let body = match format {
                DiamFormat::Csv => render::csv_diam(&report, sub.alphabet()),
                DiamFormat::Text => {
                    let (wa, wb) = &report.witness;
                    format!(
                        "n = {}\ndiam = {}\nexact = {}\nwitness_a = {}\nwitness_b = {}\npairs evaluated = {}, pruned = {}\n",
                        report.n,
                        report.value,
                        report.exact,
                        wa.render(sub.alphabet()),
                        wb.render(sub.alphabet()),
                        report.pairs_evaluated,
                        report.pairs_pruned
                    )
                }
            };
            emit(&out, &body)?;
            Ok(0)
        }

        Command::Classify {
            sub,
            witness_levels,
        } => {
            let sub = load_substitution(&sub)?;
            let analysis = classify::analyze(&sub)?;
            print!("{}", render::text_classify(&analysis, sub.alphabet()));
            if let (Some(levels), Some(witness)) = (witness_levels, analysis.witness) {
                let report = classify::verify_full_witness(&sub, witness, levels, 1 << 20)?;
                println!(
                    "witness check: {} levels, longest pair {} letters, all hold: {}",
                    report.checked, report.max_length, report.all_hold
                );
                if !report.all_hold {
                    return Ok(1);
                }
            }
            Ok(0)
        }

        Command::Tm {
            max,
            lengths,
            envelope_c,
            format,
            out,
        } => {
            let n_list = match (lengths, max) {
                (Some(spec), _) => parse_lengths(&spec)?,
                (None, Some(max)) => doubling_families(max),
                (None, None) => {
                    return Err(Error::Input("pass --max or --lengths".into()));
                }
            };
            let records = thue_morse::tm_growth(&n_list, envelope_c)?;
            let body = match format {
                TmFormat::Csv => render::csv_tm(&records),
                TmFormat::Bfile => render::bfile(&records),
                TmFormat::Svg => {
                    let dist: Vec<(f64, f64)> =
                        records.iter().map(|r| (r.n as f64, r.d_e.as_f64())).collect();
                    let floor: Vec<(f64, f64)> =
                        records.iter().map(|r| (r.n as f64, r.lower)).collect();
                    let envelope: Vec<(f64, f64)> = records
                        .iter()
                        .map(|r| (r.n as f64, r.blikstad_upper))
                        .collect();
                    render::svg_chart(
                        "prefix vs complement distance",
                        &[
                            ("distance", dist),
                            ("sqrt floor", floor),
                            ("reference envelope", envelope),
                        ],
                    )
                }
            };
            emit(&out, &body)?;
            if let Ok((upper, lower)) = thue_morse::growth_exponent_from_records(&records) {
                eprintln!(
                    "log-log slopes: n=2^k family {upper:.4}, n=3*2^k family {lower:.4}"
                );
            }
            Ok(0)
        }

        Command::Rk {
            sub,
            k,
            base,
            exact_cap,
            n_count,
            pair_budget,
            check,
            out,
        } => {
            let sub = load_substitution(&sub)?;
            let sampling = RkSampling {
                n_count,
                pair_budget,
                seed,
            };
            let est = rk_estimate(&sub, k, base, exact_cap, &sampling)?;
            if !check {
                emit(&out, &render::csv_rk(&est))?;
                return Ok(0);
            }
            let next = rk_estimate(&sub, k + 1, base, exact_cap, &sampling)?;
            let report = rk_recursion_check(&sub, &est, &next)?;
            let body = format!(
                "{}{}{}",
                render::csv_rk(&est),
                render::csv_rk(&next),
                render::text_recursion(&report)
            );
            emit(&out, &body)?;
            Ok(if report.verdict == RecursionVerdict::ViolationCandidate {
                1
            } else {
                0
            })
        }

        Command::Curve {
            sub,
            max,
            budget,
            format,
            out,
        } => {
            let sub = load_substitution(&sub)?;
            let lengths: Vec<u64> = (2..=max).collect();
            let mode = match budget {
                Some(budget) => DiameterMode::Sample { budget, seed },
                None => DiameterMode::Exact,
            };
            let rows = diam_curve(&sub, &lengths, mode)?;
            let body = match format {
                CurveFormat::Csv => render::csv_curve(&rows),
                CurveFormat::Svg => {
                    let ratio: Vec<(f64, f64)> =
                        rows.iter().map(|r| (r.n as f64, r.ratio)).collect();
                    let envelope: Vec<(f64, f64)> = rows
                        .iter()
                        .map(|r| (r.n as f64, r.envelope / r.n as f64))
                        .collect();
                    render::svg_chart(
                        "diameter-to-length ratio",
                        &[("ratio", ratio), ("envelope / n", envelope)],
                    )
                }
            };
            emit(&out, &body)?;
            Ok(0)
        }

        Command::Verify => {
            let results = verify::run_all();
            print!("{}", verify::render_report(&results));
            Ok(if results.iter().all(|r| r.passed) { 0 } else { 1 })
        }
    }
}

/// Single-character alphabet from the distinct characters of both words.
fn inferred_alphabet(x: &str, y: &str) -> Result<Alphabet, Error> {
    let mut chars: Vec<char> = x.chars().chain(y.chars()).collect();
    chars.sort_unstable();
    chars.dedup();
    if chars.is_empty() {
        chars.push('0');
    }
    Alphabet::new(chars.into_iter().map(String::from).collect())
}

fn load_substitution(path: &Path) -> Result<Substitution, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    Substitution::parse(&text)
}

fn capped_closure(
    sub: &Substitution,
    n_max: usize,
    mem_cap: Option<u64>,
) -> Result<FactorClosure, Error> {
    match mem_cap {
        // 4-byte letters plus per-word and hash-set overhead: budget ~16
        // bytes per stored letter.
        Some(mib) => {
            let letters = mib.saturating_mul(1024 * 1024) / 16;
            FactorClosure::compute_capped(sub, n_max, letters)
        }
        None => FactorClosure::compute(sub, n_max),
    }
}

fn emit(out: &Option<PathBuf>, body: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, body)
            .map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn parse_lengths(spec: &str) -> Result<Vec<u64>, Error> {
    let mut out = Vec::new();
    for part in spec.split(',') {
        let n: u64 = part
            .trim()
            .parse()
            .map_err(|_| Error::Input(format!("bad length {part:?}")))?;
        out.push(n);
    }
    Ok(out)
}

/// All n = 2^k and n = 3*2^k up to the bound, ascending.
fn doubling_families(max: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 1u64;
    while p <= max {
        out.push(p);
        if 3 * p <= max {
            out.push(3 * p);
        }
        if p > max / 2 {
            break;
        }
        p *= 2;
    }
    out.sort_unstable();
    out
}
