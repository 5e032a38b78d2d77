//! Command-line front end for `seqideal`.
//!
//! Exit codes: 0 on success, 1 on a usage, input or parse error, 2 when a
//! requested verification or cross-check fails.

pub mod analyze;
pub mod bench;
pub mod input;
pub mod random;
pub mod report;
pub mod verify;

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use seqideal::rueppel::ralg;
use seqideal::FieldSpec;

use analyze::{analyze_text, AnalyzeOptions};
use report::PolyJson;
use verify::Check;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

/// Environment variable that turns on per-step invariant checks.
pub const DEBUG_ASSERTS_ENV: &str = "SEQIDEAL_DEBUG_ASSERTS";

#[derive(Debug, Parser)]
#[command(name = "seqideal", version, about = "Annihilator ideals and linear complexity of finite sequences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generator pair, minimal polynomial and profile of a sequence.
    Analyze(AnalyzeArgs),
    /// Generator pairs of the Rueppel sequence and sweeps over its prefixes.
    Rueppel(RueppelArgs),
    /// Timing table (CSV) for the constructions.
    Bench(BenchArgs),
    /// Sequence generators.
    Profile(ProfileArgs),
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// gf2, gfp:<p> or q
    #[arg(long, value_parser = parse_field)]
    pub field: FieldSpec,
    /// Input file, `-` for stdin; may be repeated.
    #[arg(long, default_value = "-")]
    pub input: Vec<PathBuf>,
    #[arg(long)]
    pub profile: bool,
    #[arg(long)]
    pub json: bool,
    /// Cross-check against Berlekamp–Massey.
    #[arg(long)]
    pub check_bm: bool,
    /// Cross-check against brute-force linear algebra (short inputs only).
    #[arg(long)]
    pub check_oracle: bool,
    /// Worker threads for multiple inputs.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyMode {
    Plcp,
    ClosedForm,
    Delta,
    Matrix,
    Quadext,
    Dai,
    All,
}

#[derive(Debug, Args)]
pub struct RueppelArgs {
    #[arg(long)]
    pub n: i64,
    /// Checks to run over all prefixes up to `n`; may be repeated.
    #[arg(long)]
    pub verify: Vec<VerifyMode>,
    #[arg(long)]
    pub json: bool,
    /// Run independent checks on this many threads.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub max_n: usize,
    #[arg(long)]
    pub step: usize,
    #[arg(long = "impl", value_enum, default_value = "all")]
    pub implementation: bench::Impl,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct ProfileArgs {
    /// Emit a random binary sequence with a perfect profile.
    #[arg(long, required = true)]
    pub random_plcp: bool,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub json: bool,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse().map_err(|e: seqideal::Error| e.to_string())
}

fn debug_asserts_from_env() -> bool {
    std::env::var(DEBUG_ASSERTS_ENV).is_ok_and(|v| v == "1")
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match run(cli, stdin, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}

pub fn run(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> anyhow::Result<i32> {
    match cli.command {
        Command::Analyze(a) => cmd_analyze(a, stdin, out),
        Command::Rueppel(a) => cmd_rueppel(a, out),
        Command::Bench(a) => cmd_bench(a, out),
        Command::Profile(a) => cmd_profile(a, out),
    }
}

fn cmd_analyze(args: AnalyzeArgs, stdin: &mut dyn Read, out: &mut dyn Write) -> anyhow::Result<i32> {
    let opts = AnalyzeOptions {
        profile: args.profile,
        check_bm: args.check_bm,
        check_oracle: args.check_oracle,
        debug_asserts: debug_asserts_from_env(),
    };
    let mut texts = Vec::with_capacity(args.input.len());
    for path in &args.input {
        let text = if path.as_os_str() == "-" {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        } else {
            std::fs::read_to_string(path)
                .map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))?
        };
        texts.push((path.display().to_string(), text));
    }

    let analyze_one = |(name, text): &(String, String)| {
        analyze_text(args.field, text, opts).map_err(|e| anyhow::anyhow!("{name}: {e}"))
    };
    let reports: Vec<anyhow::Result<report::AnalysisReport>> = if args.jobs > 1 && texts.len() > 1 {
        let chunk = texts.len().div_ceil(args.jobs);
        std::thread::scope(|scope| {
            let handles: Vec<_> = texts
                .chunks(chunk)
                .map(|c| scope.spawn(move || c.iter().map(analyze_one).collect::<Vec<_>>()))
                .collect();
            handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
        })
    } else {
        texts.iter().map(analyze_one).collect()
    };

    let mut code = EXIT_OK;
    for r in reports {
        let r = r?;
        if !r.checks_pass() {
            code = EXIT_MISMATCH;
        }
        if args.json {
            writeln!(out, "{}", serde_json::to_string_pretty(&r)?)?;
        } else {
            write!(out, "{}", r.to_text())?;
        }
    }
    Ok(code)
}

#[derive(Serialize)]
struct RueppelReport {
    n: usize,
    lambda: usize,
    f: PolyJson,
    g: PolyJson,
    checks: Vec<Check>,
}

/// Runs the sweeps selected by `modes` over prefixes of length up to `n`.
pub fn run_checks(n: usize, modes: &[VerifyMode], jobs: usize) -> Vec<Check> {
    let mut selected: Vec<VerifyMode> = Vec::new();
    for &m in modes {
        let expanded: &[VerifyMode] = if m == VerifyMode::All {
            &[
                VerifyMode::Plcp,
                VerifyMode::ClosedForm,
                VerifyMode::Delta,
                VerifyMode::Matrix,
                VerifyMode::Quadext,
                VerifyMode::Dai,
            ]
        } else {
            std::slice::from_ref(&m)
        };
        for &e in expanded {
            if !selected.contains(&e) {
                selected.push(e);
            }
        }
    }
    let debug = debug_asserts_from_env();
    let one = move |m: VerifyMode| match m {
        VerifyMode::Plcp => verify::check_plcp(n),
        VerifyMode::ClosedForm => verify::check_closed_form(n),
        VerifyMode::Delta => verify::check_delta(n, debug),
        VerifyMode::Matrix => verify::check_matrix(n),
        VerifyMode::Quadext => verify::check_quadext(n),
        VerifyMode::Dai => verify::check_dai(n),
        VerifyMode::All => unreachable!(),
    };
    if jobs > 1 {
        std::thread::scope(|scope| {
            let handles: Vec<_> = selected.iter().map(|&m| scope.spawn(move || one(m))).collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        })
    } else {
        selected.into_iter().map(one).collect()
    }
}

fn cmd_rueppel(args: RueppelArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    if args.n < 1 {
        anyhow::bail!("--n must be at least 1");
    }
    let n = args.n as usize;
    let v = ralg(n)?;
    let checks = run_checks(n, &args.verify, args.jobs);
    let ok = checks.iter().all(|c| c.passed);
    if args.json {
        let r = RueppelReport {
            n,
            lambda: v.lambda(),
            f: PolyJson::from_form(&v.f.to_form()),
            g: PolyJson::from_form(&v.g.to_form()),
            checks,
        };
        writeln!(out, "{}", serde_json::to_string_pretty(&r)?)?;
    } else {
        writeln!(out, "n: {n}")?;
        writeln!(out, "lambda: {}", v.lambda())?;
        writeln!(out, "f: {}", v.f)?;
        writeln!(out, "g: {}", v.g)?;
        for c in &checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(out, "{tag} {}: {}", c.name, c.detail)?;
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_MISMATCH })
}

fn cmd_bench(args: BenchArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    writeln!(out, "{}", bench::CSV_HEADER)?;
    for row in bench::run(args.max_n, args.step, args.implementation, args.seed) {
        writeln!(out, "{}", row.csv())?;
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct PlcpReport {
    n: usize,
    seed: u64,
    sequence: String,
}

fn cmd_profile(args: ProfileArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    if args.n < 1 {
        anyhow::bail!("--n must be at least 1");
    }
    let seq = random::random_plcp(args.n, args.seed);
    let bits: String = seq.iter().map(|&b| if b { '1' } else { '0' }).collect();
    if args.json {
        let r = PlcpReport { n: args.n, seed: args.seed, sequence: bits };
        writeln!(out, "{}", serde_json::to_string_pretty(&r)?)?;
    } else {
        writeln!(out, "{bits}")?;
    }
    Ok(EXIT_OK)
}
