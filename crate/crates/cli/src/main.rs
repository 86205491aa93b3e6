//! `recur2`: exact second-order recurrence sequences, determinant identity
//! verification, restricted-word counting, cross-checks, and the seeded
//! fuzz harness.
//!
//! Exit codes: 0 on success with every verification holding, 1 when an
//! identity check fails (or input windows are inconsistent), 2 on usage
//! and parse errors.

use clap::{Args, Parser, Subcommand, ValueEnum};

use recur2_cli::output::{
    ExplicitOutput, PresetEntry, RecoverOutput, TilingsOutput, WordsCountOutput,
    WordsEnumerateOutput,
};
use recur2_cli::{parse_pair, parse_scalar, parse_window, resolve_ring, RawValue, RingMode};
use recur2_core::catalog::{all_presets, preset_by_name, crosscheck, CrosscheckReport, PresetId};
use recur2_core::error::Error;
use recur2_core::fuzz::{run_fuzz, FuzzConfig};
use recur2_core::identity::{
    check_cassini, check_catalan, check_docagne_general, check_four_param, check_index_reduction,
    check_prop8, check_reduced_docagne, check_vajda, recover_a, IdentityReport,
};
use recur2_core::recurrence::{explicit_term, generate, RecurrenceSpec, SequenceWindow, VarCoeffSpec};
use recur2_core::value::RingValue;
use recur2_core::words::{enumerate_words, parse_constraint, count_words, DEFAULT_ENUMERATION_CAP};

const EXIT_OK: i32 = 0;
const EXIT_VIOLATION: i32 = 1;
const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(name = "recur2", version, about = "Exact second-order recurrences, their determinant identities, and restricted-word counting oracles")]
struct Cli {
    /// Emit JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a window of sequence values.
    Seq(SeqArgs),
    /// Evaluate a canonical-sequence term by the explicit binomial sum.
    Explicit(ExplicitArgs),
    /// Check a determinant identity exactly and report both sides.
    Verify(VerifyArgs),
    /// Count or enumerate restricted words.
    Words(WordsArgs),
    /// Count colored tilings of a one-dimensional board.
    Tilings(TilingsArgs),
    /// Cross-check a preset's recurrence against its independent routes.
    Crosscheck(CrosscheckArgs),
    /// Run the seeded randomized identity suite.
    Fuzz(FuzzArgs),
    /// List the built-in presets.
    Presets,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RingArg {
    Auto,
    Int,
    Poly,
}

impl From<RingArg> for RingMode {
    fn from(arg: RingArg) -> RingMode {
        match arg {
            RingArg::Auto => RingMode::Auto,
            RingArg::Int => RingMode::Int,
            RingArg::Poly => RingMode::Poly,
        }
    }
}

#[derive(Args)]
struct SeqArgs {
    /// Built-in preset name (see `recur2 presets`).
    #[arg(long, conflicts_with_all = ["x", "y", "init"])]
    preset: Option<String>,
    /// Coefficient x: integer or ascending coefficient list.
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    /// Coefficient y (nonzero).
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,
    /// Initial pair, default 0;1.
    #[arg(long, allow_hyphen_values = true)]
    init: Option<String>,
    /// First index to print.
    #[arg(long, default_value_t = 0)]
    from: u64,
    /// Last index to generate (inclusive).
    #[arg(long)]
    to: u64,
    #[arg(long, value_enum, default_value_t = RingArg::Auto)]
    ring: RingArg,
}

#[derive(Args)]
struct ExplicitArgs {
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    #[arg(long, allow_hyphen_values = true)]
    y: String,
    #[arg(long)]
    n: u64,
    #[arg(long, value_enum, default_value_t = RingArg::Auto)]
    ring: RingArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum VerifyIdentity {
    Docagne,
    Prop8,
    Cassini,
    IndexReduction,
    ReducedDocagne,
    FourParam,
    Vajda,
    Catalan,
    RecoverA,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    identity: VerifyIdentity,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,
    /// Initial pair of (b), or its full window for recover-a.
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    /// Initial pair of (c), or its full window for recover-a.
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    /// Variable coefficients u_0,u_1,... (prop8 only).
    #[arg(long, allow_hyphen_values = true)]
    u: Option<String>,
    /// Variable coefficients v_0,v_1,... (prop8 only).
    #[arg(long, allow_hyphen_values = true)]
    v: Option<String>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    r: Option<u64>,
    #[arg(long, value_enum, default_value_t = RingArg::Auto)]
    ring: RingArg,
}

#[derive(Args)]
struct WordsArgs {
    #[command(subcommand)]
    command: WordsCommand,
}

#[derive(Subcommand)]
enum WordsCommand {
    /// Count satisfying words of one length.
    Count {
        /// Constraint DSL, e.g. "alphabet=3; forbid=01,02".
        #[arg(long)]
        spec: String,
        #[arg(long)]
        n: u64,
    },
    /// List satisfying words in lexicographic order.
    Enumerate {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        n: u64,
        /// Candidate cap; defaults to RECUR2_CAP or 10^7.
        #[arg(long)]
        cap: Option<u64>,
    },
}

#[derive(Args)]
struct TilingsArgs {
    #[arg(long)]
    n: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    colors1: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    colors2: u64,
}

#[derive(Args)]
struct CrosscheckArgs {
    #[arg(long, conflicts_with = "all")]
    preset: Option<String>,
    /// Cross-check every preset.
    #[arg(long)]
    all: bool,
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(2..))]
    max_n: u64,
}

#[derive(Args)]
struct FuzzArgs {
    /// Seed for the deterministic trial streams.
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    #[arg(long, default_value_t = 9, value_parser = clap::value_parser!(i64).range(1..))]
    coeff_max: i64,
    #[arg(long, default_value_t = 9, value_parser = clap::value_parser!(i64).range(1..))]
    init_max: i64,
    #[arg(long, default_value_t = 25)]
    index_max: u64,
}

enum CliError {
    Usage(String),
    Core(Error),
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Core(err)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Core(err) => write!(f, "{err}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            // An inexact division means the input windows contradict the
            // recurrence: a verification failure, not a usage error.
            CliError::Core(Error::InexactDivision) => EXIT_VIOLATION,
            CliError::Core(_) => EXIT_USAGE,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

type CliResult<T> = Result<T, CliError>;

fn main() {
    // Die quietly when stdout closes mid-stream (e.g. piped to `head`)
    // instead of panicking on the broken pipe.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let code = match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    };
    std::process::exit(code);
}

fn dispatch(cli: Cli) -> CliResult<i32> {
    match cli.command {
        Command::Seq(args) => run_seq(args, cli.json),
        Command::Explicit(args) => run_explicit(args, cli.json),
        Command::Verify(args) => run_verify(args, cli.json),
        Command::Words(args) => run_words(args, cli.json),
        Command::Tilings(args) => run_tilings(args, cli.json),
        Command::Crosscheck(args) => run_crosscheck(args, cli.json),
        Command::Fuzz(args) => run_fuzz_command(args, cli.json),
        Command::Presets => run_presets(cli.json),
    }
}

fn json_line<T: serde::Serialize>(value: &T) -> CliResult<()> {
    let line = serde_json::to_string(value)
        .map_err(|e| usage(format!("serialization failed: {e}")))?;
    println!("{line}");
    Ok(())
}

fn fmt_value(value: &RingValue, var: &str) -> String {
    match value {
        RingValue::Int(n) => n.to_string(),
        RingValue::Poly(p) => p.display_with(var).to_string(),
    }
}

fn scalar_arg(text: &Option<String>, flag: &str) -> CliResult<RawValue> {
    let text = text
        .as_ref()
        .ok_or_else(|| usage(format!("--{flag} is required for this command")))?;
    parse_scalar(text).map_err(|e| usage(format!("--{flag}: {e}")))
}

fn pair_arg(text: &Option<String>, flag: &str) -> CliResult<(RawValue, RawValue)> {
    let text = text
        .as_ref()
        .ok_or_else(|| usage(format!("--{flag} is required for this identity")))?;
    parse_pair(text).map_err(|e| usage(format!("--{flag}: {e}")))
}

fn index_arg(value: Option<u64>, flag: &str) -> CliResult<usize> {
    value
        .map(|v| v as usize)
        .ok_or_else(|| usage(format!("--{flag} is required for this identity")))
}

fn ring_of(mode: RingArg, raws: &[&RawValue]) -> CliResult<bool> {
    resolve_ring(mode.into(), raws).map_err(usage)
}

fn run_seq(args: SeqArgs, json: bool) -> CliResult<i32> {
    if args.to < args.from {
        return Err(usage("--to must be at least --from"));
    }
    let n_max = (args.to as usize).max(1);
    let (window, var) = if let Some(name) = &args.preset {
        let preset = preset_by_name(name)?;
        (generate(&preset.spec(), n_max)?, preset.poly_var)
    } else {
        let x = scalar_arg(&args.x, "x")?;
        let y = scalar_arg(&args.y, "y")?;
        let init = match &args.init {
            Some(text) => Some(parse_pair(text).map_err(|e| usage(format!("--init: {e}")))?),
            None => None,
        };
        let mut raws = vec![&x, &y];
        if let Some((a, b)) = &init {
            raws.push(a);
            raws.push(b);
        }
        let poly = ring_of(args.ring, &raws)?;
        let x = x.realize(poly);
        let y = y.realize(poly);
        let init = match &init {
            Some((a, b)) => (a.realize(poly), b.realize(poly)),
            None => (x.zero_like(), x.one_like()),
        };
        let spec = RecurrenceSpec::new(x, y, init)?;
        (generate(&spec, n_max)?, "z")
    };
    let window = truncate_window(window, args.from as usize, args.to as usize);
    if json {
        json_line(&window)?;
    } else {
        for (offset, value) in window.values.iter().enumerate() {
            println!("a[{}] = {}", window.lo + offset, fmt_value(value, var));
        }
    }
    Ok(EXIT_OK)
}

fn truncate_window(window: SequenceWindow, from: usize, to: usize) -> SequenceWindow {
    let mut sliced = window.slice_from(from);
    sliced.values.truncate(to + 1 - sliced.lo);
    sliced
}

fn run_explicit(args: ExplicitArgs, json: bool) -> CliResult<i32> {
    let x = parse_scalar(&args.x).map_err(|e| usage(format!("--x: {e}")))?;
    let y = parse_scalar(&args.y).map_err(|e| usage(format!("--y: {e}")))?;
    let poly = ring_of(args.ring, &[&x, &y])?;
    let x = x.realize(poly);
    let y = y.realize(poly);
    let value = explicit_term(&x, &y, args.n as usize)?;
    if json {
        json_line(&ExplicitOutput {
            x,
            y,
            n: args.n,
            value,
        })?;
    } else {
        println!("{}", fmt_value(&value, "z"));
    }
    Ok(EXIT_OK)
}

fn print_report(report: &IdentityReport, json: bool) -> CliResult<i32> {
    if json {
        json_line(report)?;
    } else {
        println!("identity: {}", report.identity);
        let params: Vec<String> = report
            .params
            .iter()
            .map(|(name, value)| format!("{name}={value}"))
            .collect();
        println!("params: {}", params.join(", "));
        println!("lhs = {}", fmt_value(&report.lhs, "z"));
        println!("rhs = {}", fmt_value(&report.rhs, "z"));
        println!("holds: {}", report.holds);
        println!("witnesses:");
        for (name, value) in &report.witnesses {
            println!("  {name} = {}", fmt_value(value, "z"));
        }
    }
    Ok(if report.holds { EXIT_OK } else { EXIT_VIOLATION })
}

fn run_verify(args: VerifyArgs, json: bool) -> CliResult<i32> {
    use VerifyIdentity::*;

    if args.identity == RecoverA {
        return run_recover(args, json);
    }
    if args.identity == Prop8 {
        return run_prop8(args, json);
    }

    let x = scalar_arg(&args.x, "x")?;
    let y = scalar_arg(&args.y, "y")?;
    let needs_b = !matches!(args.identity, Catalan);
    let b = if needs_b {
        Some(pair_arg(&args.b, "b")?)
    } else {
        None
    };
    let needs_c = matches!(args.identity, Docagne | Cassini | IndexReduction | ReducedDocagne);
    let c = if needs_c {
        Some(pair_arg(&args.c, "c")?)
    } else {
        None
    };

    let mut raws: Vec<&RawValue> = vec![&x, &y];
    for pair in [&b, &c].into_iter().flatten() {
        raws.push(&pair.0);
        raws.push(&pair.1);
    }
    let poly = ring_of(args.ring, &raws)?;
    let x = x.realize(poly);
    let y = y.realize(poly);
    let b = b
        .map(|(b0, b1)| (b0.realize(poly), b1.realize(poly)))
        .unwrap_or_else(|| (x.zero_like(), x.one_like()));
    let c = c.map(|(c0, c1)| (c0.realize(poly), c1.realize(poly)));

    let report = match args.identity {
        Docagne => check_docagne_general(
            &x,
            &y,
            &b,
            c.as_ref().expect("validated"),
            index_arg(args.k, "k")?,
            index_arg(args.m, "m")?,
        )?,
        Cassini => check_cassini(
            &x,
            &y,
            &b,
            c.as_ref().expect("validated"),
            index_arg(args.k, "k")?,
        )?,
        IndexReduction => check_index_reduction(
            &x,
            &y,
            &b,
            c.as_ref().expect("validated"),
            index_arg(args.k, "k")?,
            index_arg(args.m, "m")?,
            index_arg(args.p, "p")?,
        )?,
        ReducedDocagne => check_reduced_docagne(
            &x,
            &y,
            &b,
            c.as_ref().expect("validated"),
            index_arg(args.m, "m")?,
        )?,
        FourParam => check_four_param(
            &x,
            &y,
            &b,
            index_arg(args.k, "k")?,
            index_arg(args.m, "m")?,
            index_arg(args.p, "p")?,
            index_arg(args.q, "q")?,
        )?,
        Vajda => check_vajda(
            &x,
            &y,
            &b,
            index_arg(args.k, "k")?,
            index_arg(args.m, "m")?,
            index_arg(args.p, "p")?,
        )?,
        Catalan => check_catalan(&x, &y, index_arg(args.n, "n")?, index_arg(args.r, "r")?)?,
        Prop8 | RecoverA => unreachable!("handled above"),
    };
    print_report(&report, json)
}

fn run_prop8(args: VerifyArgs, json: bool) -> CliResult<i32> {
    let u_text = args
        .u
        .as_ref()
        .ok_or_else(|| usage("--u is required for prop8"))?;
    let v_text = args
        .v
        .as_ref()
        .ok_or_else(|| usage("--v is required for prop8"))?;
    let u = parse_window(u_text).map_err(|e| usage(format!("--u: {e}")))?;
    let v = parse_window(v_text).map_err(|e| usage(format!("--v: {e}")))?;
    let b = pair_arg(&args.b, "b")?;
    let c = pair_arg(&args.c, "c")?;
    let mut raws: Vec<&RawValue> = vec![&b.0, &b.1, &c.0, &c.1];
    raws.extend(u.iter());
    raws.extend(v.iter());
    let poly = ring_of(args.ring, &raws)?;
    let realize_all =
        |values: &[RawValue]| -> Vec<RingValue> { values.iter().map(|r| r.realize(poly)).collect() };
    let b = (b.0.realize(poly), b.1.realize(poly));
    let c = (c.0.realize(poly), c.1.realize(poly));
    let coeffs = VarCoeffSpec::new(realize_all(&u), realize_all(&v), (b.0.zero_like(), b.0.one_like()))?;
    let report = check_prop8(
        &coeffs,
        &b,
        &c,
        index_arg(args.k, "k")?,
        index_arg(args.n, "n")?,
    )?;
    print_report(&report, json)
}

fn run_recover(args: VerifyArgs, json: bool) -> CliResult<i32> {
    let y = scalar_arg(&args.y, "y")?;
    let b_text = args
        .b
        .as_ref()
        .ok_or_else(|| usage("--b window is required for recover-a"))?;
    let c_text = args
        .c
        .as_ref()
        .ok_or_else(|| usage("--c window is required for recover-a"))?;
    let b = parse_window(b_text).map_err(|e| usage(format!("--b: {e}")))?;
    let c = parse_window(c_text).map_err(|e| usage(format!("--c: {e}")))?;
    let mut raws: Vec<&RawValue> = vec![&y];
    raws.extend(b.iter());
    raws.extend(c.iter());
    let poly = ring_of(args.ring, &raws)?;
    let y = y.realize(poly);
    let b: Vec<RingValue> = b.iter().map(|r| r.realize(poly)).collect();
    let c: Vec<RingValue> = c.iter().map(|r| r.realize(poly)).collect();
    let k = index_arg(args.k, "k")?;
    let m = index_arg(args.m, "m")?;
    let value = recover_a(&y, &b, &c, k, m)?;
    if json {
        json_line(&RecoverOutput {
            identity: "recover-a".into(),
            k: k as u64,
            m: m as u64,
            value,
        })?;
    } else {
        println!("{}", fmt_value(&value, "z"));
    }
    Ok(EXIT_OK)
}

fn enumeration_cap(flag: Option<u64>) -> CliResult<u64> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var("RECUR2_CAP") {
        Ok(text) => text
            .parse::<u64>()
            .map_err(|_| usage(format!("RECUR2_CAP must be an integer, got `{text}`"))),
        Err(_) => Ok(DEFAULT_ENUMERATION_CAP),
    }
}

fn run_words(args: WordsArgs, json: bool) -> CliResult<i32> {
    match args.command {
        WordsCommand::Count { spec, n } => {
            let constraint = parse_constraint(&spec)?;
            let count = count_words(&constraint, n as usize);
            if json {
                json_line(&WordsCountOutput {
                    constraint: constraint.to_string(),
                    n,
                    count: count.to_string(),
                })?;
            } else {
                println!("{count}");
            }
        }
        WordsCommand::Enumerate { spec, n, cap } => {
            let constraint = parse_constraint(&spec)?;
            let cap = enumeration_cap(cap)?;
            let words = enumerate_words(&constraint, n as usize, cap)?;
            if json {
                json_line(&WordsEnumerateOutput {
                    constraint: constraint.to_string(),
                    n,
                    count: words.len().to_string(),
                    words,
                })?;
            } else {
                for word in &words {
                    println!("{word}");
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn run_tilings(args: TilingsArgs, json: bool) -> CliResult<i32> {
    let count = recur2_core::words::count_colored_tilings(args.n as usize, args.colors1, args.colors2);
    if json {
        json_line(&TilingsOutput {
            n: args.n,
            colors1: args.colors1,
            colors2: args.colors2,
            count: count.to_string(),
        })?;
    } else {
        println!("{count}");
    }
    Ok(EXIT_OK)
}

fn print_crosscheck_human(report: &CrosscheckReport) {
    println!("preset: {}", report.preset);
    for row in &report.rows {
        let mut line = format!("  n={:<3} recurrence={}", row.n, row.recurrence);
        if let Some(value) = &row.explicit {
            line.push_str(&format!(" explicit={value}"));
        }
        if let Some(value) = &row.word_count {
            line.push_str(&format!(" words={value}"));
        }
        if let Some(value) = &row.closed_form {
            line.push_str(&format!(" closed={value}"));
        }
        line.push_str(if row.agree { " ok" } else { " MISMATCH" });
        println!("{line}");
    }
    println!(
        "  result: {}",
        if report.all_agree { "all agree" } else { "MISMATCH" }
    );
}

fn run_crosscheck(args: CrosscheckArgs, json: bool) -> CliResult<i32> {
    let n_max = args.max_n as usize;
    let reports: Vec<CrosscheckReport> = if args.all {
        PresetId::ALL
            .into_iter()
            .map(|id| crosscheck(id, n_max))
            .collect::<Result<_, _>>()?
    } else {
        let name = args
            .preset
            .as_ref()
            .ok_or_else(|| usage("pass --preset <name> or --all"))?;
        vec![crosscheck(PresetId::from_name(name)?, n_max)?]
    };
    let all_agree = reports.iter().all(|r| r.all_agree);
    if json {
        if reports.len() == 1 {
            json_line(&reports[0])?;
        } else {
            json_line(&reports)?;
        }
    } else {
        for report in &reports {
            print_crosscheck_human(report);
        }
    }
    Ok(if all_agree { EXIT_OK } else { EXIT_VIOLATION })
}

fn run_fuzz_command(args: FuzzArgs, json: bool) -> CliResult<i32> {
    let config = FuzzConfig {
        seed: args.seed,
        trials: args.trials,
        coeff_max: args.coeff_max,
        init_max: args.init_max,
        index_max: args.index_max,
    };
    let summary = run_fuzz(&config)?;
    if json {
        json_line(&summary)?;
    } else {
        println!("seed: {}", summary.seed);
        println!("trials: {}", summary.trials);
        for (identity, count) in &summary.identities {
            println!("{identity}: {count} instances");
        }
        println!("failures: {}", summary.failures.len());
        if let Some(first) = summary.failures.first() {
            println!(
                "first failure: {}",
                serde_json::to_string(first).map_err(|e| usage(e.to_string()))?
            );
        }
    }
    Ok(if summary.all_hold() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

fn run_presets(json: bool) -> CliResult<i32> {
    let entries: Vec<PresetEntry> = all_presets()
        .into_iter()
        .map(|preset| PresetEntry {
            id: preset.id.name().to_string(),
            ring: preset.x.tag().to_string(),
            x: preset.x.clone(),
            y: preset.y.clone(),
            init: preset.init.clone(),
            word_model: preset.word_model.as_ref().map(|m| m.describe()),
            closed_form: preset.closed_form.as_ref().map(|f| f.describe().to_string()),
            note: preset.note.to_string(),
        })
        .collect();
    if json {
        json_line(&entries)?;
    } else {
        for (entry, preset) in entries.iter().zip(all_presets()) {
            let var = preset.poly_var;
            let mut line = format!(
                "{:<18} x={} y={} init=({}, {})",
                entry.id,
                fmt_value(&entry.x, var),
                fmt_value(&entry.y, var),
                fmt_value(&entry.init.0, var),
                fmt_value(&entry.init.1, var),
            );
            if let Some(model) = &entry.word_model {
                line.push_str(&format!(" | model: {model}"));
            }
            if let Some(form) = &entry.closed_form {
                line.push_str(&format!(" | closed form: {form}"));
            }
            println!("{line}");
            println!("{:<18} {}", "", entry.note);
        }
    }
    Ok(EXIT_OK)
}
