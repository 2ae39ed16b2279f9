//! The `vtl` command line.
//!
//! Exit codes: 0 success, 1 an identity or comparison failed, 2 usage
//! error, 3 a size guard was hit.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::braid::BraidWord;
use crate::checks::{self, CheckConfig, Suite};
use crate::invariants::{arrow_polynomial, f_polynomial, InvariantReport, Normalize};
use crate::oracle::{arrow_state_sum, f_state_sum, Mode, OracleError};
use crate::rings::{ArrowPoly, LaurentPoly, RingError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

/// Largest strand count for suites that enumerate every basis diagram.
const ENUMERATION_LIMIT: usize = 6;

#[derive(Debug, Parser)]
#[command(
    name = "vtl",
    version,
    about = "f-polynomial and arrow polynomial of virtual braid closures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute invariants of a braid closure.
    Invariant(WordArgs),
    /// Run a property suite.
    Check(CheckArgs),
    /// Compare invariants before and after random equivalence moves.
    Fuzz(FuzzArgs),
    /// Evaluate the state sums directly on the closed diagram.
    Oracle(OracleArgs),
}

#[derive(Debug, Args)]
struct WordArgs {
    /// Number of strands.
    #[arg(short = 'n', value_name = "STRANDS")]
    n: usize,
    /// Letters `s<i>`, `s<i>'` and `t<i>`, as one or several arguments.
    #[arg(value_name = "WORD")]
    word: Vec<String>,
    /// Only the f-polynomial.
    #[arg(long = "f", group = "which")]
    f_only: bool,
    /// Only the arrow polynomial.
    #[arg(long, group = "which")]
    arrow: bool,
    /// Both invariants (default).
    #[arg(long, group = "which")]
    both: bool,
    /// Divide by -A^2 - A^-2 so the unknot evaluates to 1.
    #[arg(long)]
    normalized: bool,
    /// Print the JSON envelope.
    #[arg(long)]
    json: bool,
}

impl WordArgs {
    fn parse_word(&self) -> Result<BraidWord, String> {
        BraidWord::from_letters(self.n, &self.word.join(" ")).map_err(|e| e.to_string())
    }

    fn wants(&self) -> (bool, bool) {
        match (self.f_only, self.arrow) {
            (true, _) => (true, false),
            (_, true) => (false, true),
            _ => (true, true),
        }
    }
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[arg(long, value_parser = parse_suite)]
    suite: Suite,
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random samples; suites that need more use their own minimum.
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long)]
    json: bool,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: checks::UnknownSuite| {
        let names: Vec<&str> = Suite::ALL.iter().map(Suite::name).collect();
        format!("{e}; expected one of {}", names.join(", "))
    })
}

#[derive(Debug, Args)]
struct FuzzArgs {
    #[arg(long, default_value_t = 50)]
    words: usize,
    #[arg(long, default_value_t = 6)]
    moves: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[command(flatten)]
    word: WordArgs,
    /// Also run the algebra pipeline and compare. Output is always JSON.
    #[arg(long)]
    compare: bool,
}

/// Parses `args` (without the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("vtl")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let mode = match std::env::var("VTL_THREADS") {
        Err(_) => None,
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(k) => Some(k),
            Err(_) => {
                let _ = writeln!(
                    err,
                    "error: VTL_THREADS must be a non-negative integer, got {v:?}"
                );
                return EXIT_USAGE;
            }
        },
    };
    match mode {
        Some(0) => dispatch(cli.command, Mode::Sequential, out, err),
        Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => {
                let (code, o, e) = pool.install(|| {
                    let (mut o, mut e) = (Vec::new(), Vec::new());
                    let code = dispatch(cli.command, Mode::Parallel, &mut o, &mut e);
                    (code, o, e)
                });
                let _ = out.write_all(&o);
                let _ = err.write_all(&e);
                code
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_USAGE
            }
        },
        None => dispatch(cli.command, Mode::Parallel, out, err),
    }
}

fn dispatch(cmd: Command, mode: Mode, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cmd {
        Command::Invariant(a) => invariant(&a, out),
        Command::Check(a) => check(&a, mode, out),
        Command::Fuzz(a) => fuzz(&a, out),
        Command::Oracle(a) => oracle(&a, mode, out),
    };
    match result {
        Ok(code) => code,
        Err((code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

type CmdResult = Result<i32, (i32, String)>;

fn usage(msg: impl ToString) -> (i32, String) {
    (EXIT_USAGE, msg.to_string())
}

fn write_json(out: &mut dyn Write, v: &impl Serialize) -> CmdResult {
    let text = serde_json::to_string(v).map_err(|e| (EXIT_FAILURE, e.to_string()))?;
    writeln!(out, "{text}").map_err(|e| (EXIT_FAILURE, e.to_string()))?;
    Ok(EXIT_OK)
}

fn write_text(out: &mut dyn Write, text: &str) -> CmdResult {
    out.write_all(text.as_bytes())
        .map_err(|e| (EXIT_FAILURE, e.to_string()))?;
    Ok(EXIT_OK)
}

fn invariant(a: &WordArgs, out: &mut dyn Write) -> CmdResult {
    let w = a.parse_word().map_err(usage)?;
    let (want_f, want_arrow) = a.wants();
    let report = InvariantReport::compute(&w, want_f, want_arrow, a.normalized)
        .map_err(|e| (EXIT_FAILURE, normalize_message(e)))?;
    if a.json {
        return write_json(out, &report);
    }
    let mut text = String::new();
    if let Some(f) = &report.f {
        text += &format!("f: {f}\n");
    }
    if let Some(p) = &report.arrow {
        text += &format!("arrow: {p}\n");
    }
    write_text(out, &text)
}

fn normalize_message(e: RingError) -> String {
    format!(
        "{e}: a loop carrying zigzags contributes z_k rather than d, so the \
         arrow polynomial of this closure has no unit-unknot form; \
         use --f with --normalized"
    )
}

fn check(a: &CheckArgs, mode: Mode, out: &mut dyn Write) -> CmdResult {
    if a.max_n == 0 {
        return Err(usage("--max-n must be at least 1"));
    }
    if matches!(a.suite, Suite::MarkovF | Suite::Parity) && a.max_n > ENUMERATION_LIMIT {
        return Err((
            EXIT_GUARD,
            format!(
                "suite {} enumerates every diagram; --max-n is limited to {ENUMERATION_LIMIT}",
                a.suite
            ),
        ));
    }
    let cfg = CheckConfig {
        samples: a.samples,
        mode,
        ..CheckConfig::new(a.max_n, a.seed)
    };
    let report = checks::run(a.suite, &cfg);
    if a.json {
        write_json(out, &report)?;
    } else {
        write_text(out, &report.to_string())?;
    }
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

fn fuzz(a: &FuzzArgs, out: &mut dyn Write) -> CmdResult {
    if a.max_n == 0 {
        return Err(usage("--max-n must be at least 1"));
    }
    let report = checks::fuzz(a.words, a.moves, a.seed, a.max_n);
    if a.json {
        write_json(out, &report)?;
    } else {
        write_text(out, &report.to_string())?;
    }
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

#[derive(Serialize)]
struct OracleOutput {
    n: usize,
    word: String,
    writhe: i64,
    states: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    f: Option<LaurentPoly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    arrow: Option<ArrowPoly>,
    normalized: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
}

fn oracle(a: &OracleArgs, mode: Mode, out: &mut dyn Write) -> CmdResult {
    let w = a.word.parse_word().map_err(usage)?;
    let (want_f, want_arrow) = a.word.wants();
    let guard = |e: OracleError| match e {
        OracleError::TooManyCrossings { .. } => (EXIT_GUARD, e.to_string()),
        OracleError::OddH(_) => (EXIT_FAILURE, e.to_string()),
    };
    let norm_err = |e: RingError| (EXIT_FAILURE, normalize_message(e));
    let mut states = 0;
    let mut f = None;
    let mut arrow = None;
    let mut agree = true;
    if want_f {
        let s = f_state_sum(&w, mode).map_err(guard)?;
        states = s.states;
        if a.compare {
            agree &= s.value == f_polynomial(&w);
        }
        f = Some(if a.word.normalized {
            s.value.normalized().map_err(norm_err)?
        } else {
            s.value
        });
    }
    if want_arrow {
        let s = arrow_state_sum(&w, mode).map_err(guard)?;
        states = s.states;
        if a.compare {
            agree &= s.value == arrow_polynomial(&w);
        }
        arrow = Some(if a.word.normalized {
            s.value.normalized().map_err(norm_err)?
        } else {
            s.value
        });
    }
    let v = OracleOutput {
        n: w.n(),
        word: w.letters_text(),
        writhe: w.writhe(),
        states,
        f,
        arrow,
        normalized: a.word.normalized,
        agree: a.compare.then_some(agree),
    };
    write_json(out, &v)?;
    Ok(if agree { EXIT_OK } else { EXIT_FAILURE })
}
