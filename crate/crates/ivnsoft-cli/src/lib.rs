//! Command-line surface over the ivnsoft library.
//!
//! One-shot batch tool: read dataset documents, run an operation or the
//! decision pipeline, print a table or a JSON document. Output is a pure
//! function of the inputs and flags.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use ivnsoft::render::{render_ivn_table, render_report, render_threshold_table};
use ivnsoft::{
    decide_with_rounding, group_decide_with_rounding, level_soft_set, parse_dataset,
    parse_threshold, serialize_dataset, serialize_level, serialize_report, serialize_threshold,
    validate_dataset, Combiner, ComparisonMode, DecisionRule, ExtremeKind, Interval, IvnSoftSet,
    ParseMode, Scalar, ScaleKind, ThresholdRule,
};

#[derive(Parser)]
#[command(
    name = "ivnsoft",
    version,
    about = "Interval-valued neutrosophic soft sets: operations, level soft sets, decisions",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Table,
    Doc,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Dominance,
    #[value(name = "all-geq")]
    AllGeq,
}

impl From<ModeArg> for ComparisonMode {
    fn from(mode: ModeArg) -> Self {
        match mode {
            ModeArg::Dominance => ComparisonMode::Dominance,
            ModeArg::AllGeq => ComparisonMode::AllGeq,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RuleArg {
    Avg,
    #[value(name = "Mmm")]
    MaxMinMin,
    #[value(name = "mmm")]
    MinMinMin,
    #[value(name = "MMM")]
    MaxMaxMax,
}

impl From<RuleArg> for ThresholdRule {
    fn from(rule: RuleArg) -> Self {
        match rule {
            RuleArg::Avg => ThresholdRule::Avg,
            RuleArg::MaxMinMin => ThresholdRule::Extreme(ExtremeKind::MaxMinMin),
            RuleArg::MinMinMin => ThresholdRule::Extreme(ExtremeKind::MinMinMin),
            RuleArg::MaxMaxMax => ThresholdRule::Extreme(ExtremeKind::MaxMaxMax),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CombinerArg {
    And,
    Or,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScaleKindArg {
    Multiply,
    Divide,
}

/// Threshold selection shared by `level`, `decide` and `group-decide`:
/// either a named rule, a constant cut, or an explicit threshold document.
#[derive(Args)]
struct ThresholdArgs {
    /// Named threshold rule
    #[arg(long, value_enum)]
    rule: Option<RuleArg>,
    /// Constant cut, lower bound on truth, as `lo,hi`
    #[arg(long)]
    alpha: Option<String>,
    /// Constant cut, upper bound on indeterminacy, as `lo,hi`
    #[arg(long)]
    beta: Option<String>,
    /// Constant cut, upper bound on falsity, as `lo,hi`
    #[arg(long)]
    gamma: Option<String>,
    /// Threshold document with one explicit cut per parameter
    #[arg(long, value_name = "FILE")]
    threshold_file: Option<PathBuf>,
}

#[derive(Args)]
struct CommonRunArgs {
    /// Comparison mode for cell-versus-cut tests
    #[arg(long, value_enum, default_value = "dominance")]
    mode: ModeArg,
    /// Round cut endpoints half-up to N decimal places before comparing
    /// (compatibility with cuts published in rounded form)
    #[arg(long, default_value = "none", value_name = "none|N")]
    round: String,
    /// Repair invalid cells (clamp/swap) instead of rejecting them
    #[arg(long)]
    lenient: bool,
    /// Output format
    #[arg(long, value_enum, default_value = "table")]
    format: FormatArg,
}

#[derive(Subcommand)]
enum Command {
    /// Check a dataset document; lists every invalid cell
    Validate {
        data: PathBuf,
        /// Accept repairable cells, printing one repair note each
        #[arg(long)]
        lenient: bool,
    },
    /// Print a dataset as a cell table or as its canonical document
    Show {
        data: PathBuf,
        #[arg(long)]
        lenient: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
        /// Display precision for table output
        #[arg(long, default_value_t = 2)]
        digits: u32,
    },
    /// Apply a set operation and print the resulting set
    Op {
        #[command(subcommand)]
        op: OpCommand,
    },
    /// Build a threshold set from a dataset
    Threshold {
        /// Threshold rule
        #[arg(value_enum)]
        kind: RuleArg,
        data: PathBuf,
        #[arg(long)]
        lenient: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
        #[arg(long, default_value_t = 2)]
        digits: u32,
    },
    /// Extract the level soft set cut by a threshold
    Level {
        data: PathBuf,
        #[command(flatten)]
        threshold: ThresholdArgs,
        #[command(flatten)]
        common: CommonRunArgs,
    },
    /// Run the decision pipeline: threshold, level soft set, choice values
    Decide {
        data: PathBuf,
        #[command(flatten)]
        threshold: ThresholdArgs,
        #[command(flatten)]
        common: CommonRunArgs,
    },
    /// Decide over the AND/OR product of two datasets
    GroupDecide {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum)]
        combiner: CombinerArg,
        #[command(flatten)]
        threshold: ThresholdArgs,
        #[command(flatten)]
        common: CommonRunArgs,
    },
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum BinaryOpKind {
    Union,
    Intersection,
    Difference,
    Add,
    And,
    Or,
}

#[derive(Subcommand)]
enum OpCommand {
    /// Cell-wise complement
    Complement(UnaryOpArgs),
    /// Cell-wise join of two sets
    Union(BinaryOpArgs),
    /// Cell-wise meet of two sets
    Intersection(BinaryOpArgs),
    /// Cell-wise difference of two sets
    Difference(BinaryOpArgs),
    /// Cell-wise clamped addition of two sets
    Add(BinaryOpArgs),
    /// Clamped scalar multiplication or division
    Scale {
        data: PathBuf,
        /// Positive scale factor (decimal or `p/q`)
        #[arg(long)]
        scalar: String,
        #[arg(long, value_enum, default_value = "multiply")]
        kind: ScaleKindArg,
        #[arg(long)]
        lenient: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
        #[arg(long, default_value_t = 2)]
        digits: u32,
    },
    /// Fold indeterminacy into truth
    TruthFav(UnaryOpArgs),
    /// Fold indeterminacy into falsity
    FalseFav(UnaryOpArgs),
    /// AND product over parameter pairs
    And(BinaryOpArgs),
    /// OR product over parameter pairs
    Or(BinaryOpArgs),
}

#[derive(Args)]
struct UnaryOpArgs {
    data: PathBuf,
    #[arg(long)]
    lenient: bool,
    #[arg(long, value_enum, default_value = "table")]
    format: FormatArg,
    #[arg(long, default_value_t = 2)]
    digits: u32,
}

#[derive(Args)]
struct BinaryOpArgs {
    a: PathBuf,
    b: PathBuf,
    #[arg(long)]
    lenient: bool,
    #[arg(long, value_enum, default_value = "table")]
    format: FormatArg,
    #[arg(long, default_value_t = 2)]
    digits: u32,
}

/// A recoverable run failure with its exit code.
struct RunError {
    message: String,
    exit_code: i32,
}

impl RunError {
    fn validation(message: impl Into<String>) -> Self {
        RunError {
            message: message.into(),
            exit_code: 1,
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        RunError {
            message: message.into(),
            exit_code: 2,
        }
    }
}

impl From<ivnsoft::Error> for RunError {
    fn from(err: ivnsoft::Error) -> Self {
        RunError::validation(err.to_string())
    }
}

type RunResult<T> = std::result::Result<T, RunError>;

/// Parses the argument vector and runs one command, writing to the supplied
/// streams. Returns the process exit code: 0 success, 1 validation error,
/// 2 usage error.
pub fn run_cli<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{rendered}");
                    2
                }
            };
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(()) => 0,
        Err(err) => {
            let _ = writeln!(stderr, "error: {}", err.message);
            err.exit_code
        }
    }
}

fn read_file(path: &Path) -> RunResult<String> {
    std::fs::read_to_string(path)
        .map_err(|e| RunError::validation(format!("cannot read {}: {e}", path.display())))
}

fn load_dataset(path: &Path, lenient: bool) -> RunResult<IvnSoftSet> {
    let text = read_file(path)?;
    let mode = if lenient {
        ParseMode::Lenient
    } else {
        ParseMode::Strict
    };
    parse_dataset(&text, mode).map_err(|e| RunError::validation(format!("{}: {e}", path.display())))
}

fn parse_round(text: &str) -> RunResult<Option<u32>> {
    if text == "none" {
        return Ok(None);
    }
    text.parse::<u32>().map(Some).map_err(|_| {
        RunError::usage(format!(
            "--round expects \"none\" or an integer, got {text:?}"
        ))
    })
}

fn parse_flag_interval(name: &str, text: &str) -> RunResult<Interval> {
    let (lo, hi) = text
        .split_once(',')
        .ok_or_else(|| RunError::usage(format!("--{name} expects lo,hi, got {text:?}")))?;
    let lo = Scalar::parse(lo.trim()).map_err(|e| RunError::usage(format!("--{name}: {e}")))?;
    let hi = Scalar::parse(hi.trim()).map_err(|e| RunError::usage(format!("--{name}: {e}")))?;
    Interval::new(lo, hi).map_err(|e| RunError::usage(format!("--{name}: {e}")))
}

fn resolve_threshold_rule(args: &ThresholdArgs) -> RunResult<ThresholdRule> {
    let constant_flags = [
        args.alpha.is_some(),
        args.beta.is_some(),
        args.gamma.is_some(),
    ];
    let has_any_constant = constant_flags.iter().any(|x| *x);
    let has_all_constant = constant_flags.iter().all(|x| *x);
    let selected = usize::from(args.rule.is_some())
        + usize::from(has_any_constant)
        + usize::from(args.threshold_file.is_some());
    if selected == 0 {
        return Err(RunError::usage(
            "select a threshold: --rule, or --alpha/--beta/--gamma, or --threshold-file",
        ));
    }
    if selected > 1 {
        return Err(RunError::usage(
            "--rule, --alpha/--beta/--gamma and --threshold-file are mutually exclusive",
        ));
    }
    if let Some(rule) = args.rule {
        return Ok(rule.into());
    }
    if has_any_constant {
        if !has_all_constant {
            return Err(RunError::usage(
                "a constant cut needs all three of --alpha, --beta and --gamma",
            ));
        }
        let alpha = parse_flag_interval("alpha", args.alpha.as_deref().unwrap())?;
        let beta = parse_flag_interval("beta", args.beta.as_deref().unwrap())?;
        let gamma = parse_flag_interval("gamma", args.gamma.as_deref().unwrap())?;
        return Ok(ThresholdRule::constant(alpha, beta, gamma));
    }
    let path = args.threshold_file.as_deref().unwrap();
    let text = read_file(path)?;
    let threshold = parse_threshold(&text)
        .map_err(|e| RunError::validation(format!("{}: {e}", path.display())))?;
    Ok(ThresholdRule::Explicit(threshold))
}

fn write_out(stdout: &mut dyn Write, text: &str) -> RunResult<()> {
    stdout
        .write_all(text.as_bytes())
        .map_err(|e| RunError::validation(format!("cannot write output: {e}")))
}

fn print_set(
    stdout: &mut dyn Write,
    set: &IvnSoftSet,
    format: FormatArg,
    digits: u32,
) -> RunResult<()> {
    match format {
        FormatArg::Table => {
            write_out(stdout, &render_ivn_table(set, Some(digits)))?;
            if !set.repairs().is_empty() {
                write_out(stdout, "\nrepairs\n")?;
                for repair in set.repairs() {
                    write_out(stdout, &format!("- {}\n", repair.describe()))?;
                }
            }
            Ok(())
        }
        FormatArg::Doc => write_out(stdout, &serialize_dataset(set)),
    }
}

fn dispatch(command: Command, stdout: &mut dyn Write) -> RunResult<()> {
    match command {
        Command::Validate { data, lenient } => {
            let text = read_file(&data)?;
            let issues = validate_dataset(&text)
                .map_err(|e| RunError::validation(format!("{}: {e}", data.display())))?;
            if issues.is_empty() {
                let set = parse_dataset(&text, ParseMode::Strict)
                    .map_err(|e| RunError::validation(format!("{}: {e}", data.display())))?;
                write_out(
                    stdout,
                    &format!(
                        "ok: {} parameters x {} objects, all cells valid\n",
                        set.parameters().len(),
                        set.universe().len()
                    ),
                )
            } else if lenient {
                let set = parse_dataset(&text, ParseMode::Lenient)
                    .map_err(|e| RunError::validation(format!("{}: {e}", data.display())))?;
                write_out(
                    stdout,
                    &format!("ok with repairs: {} cell(s) fixed\n", set.repairs().len()),
                )?;
                for repair in set.repairs() {
                    write_out(stdout, &format!("- {}\n", repair.describe()))?;
                }
                Ok(())
            } else {
                let lines: Vec<String> = issues.iter().map(|issue| issue.describe()).collect();
                Err(RunError::validation(format!(
                    "{}: {} invalid cell(s)\n{}",
                    data.display(),
                    issues.len(),
                    lines.join("\n")
                )))
            }
        }
        Command::Show {
            data,
            lenient,
            format,
            digits,
        } => {
            let set = load_dataset(&data, lenient)?;
            print_set(stdout, &set, format, digits)
        }
        Command::Op { op } => run_op(op, stdout),
        Command::Threshold {
            kind,
            data,
            lenient,
            format,
            digits,
        } => {
            let set = load_dataset(&data, lenient)?;
            let rule: ThresholdRule = kind.into();
            let threshold = rule.resolve(&set)?;
            match format {
                FormatArg::Table => write_out(stdout, &render_threshold_table(&threshold, digits)),
                FormatArg::Doc => write_out(stdout, &serialize_threshold(&threshold)),
            }
        }
        Command::Level {
            data,
            threshold,
            common,
        } => {
            let set = load_dataset(&data, common.lenient)?;
            let rule = resolve_threshold_rule(&threshold)?;
            let round = parse_round(&common.round)?;
            let mut cuts = rule.resolve(&set)?;
            if let Some(dp) = round {
                cuts = cuts.rounded(dp);
            }
            let level = level_soft_set(&set, &cuts, common.mode.into())?;
            match common.format {
                FormatArg::Table => {
                    write_out(stdout, &render_threshold_table(level.threshold(), 2))?;
                    write_out(stdout, "\nlevel soft set\n")?;
                    write_out(stdout, &level.result().render_table())?;
                    for (p, parameter) in level.result().parameters().iter().enumerate() {
                        write_out(
                            stdout,
                            &format!(
                                "{}: {{{}}}\n",
                                parameter,
                                level.result().row_members(p).join(", ")
                            ),
                        )?;
                    }
                    Ok(())
                }
                FormatArg::Doc => write_out(stdout, &serialize_level(&level)),
            }
        }
        Command::Decide {
            data,
            threshold,
            common,
        } => {
            let set = load_dataset(&data, common.lenient)?;
            let rule = resolve_threshold_rule(&threshold)?;
            let round = parse_round(&common.round)?;
            let decision_rule = DecisionRule::new(rule, common.mode.into());
            let report = decide_with_rounding(&set, &decision_rule, round)?;
            match common.format {
                FormatArg::Table => write_out(stdout, &render_report(&report)),
                FormatArg::Doc => write_out(stdout, &serialize_report(&report)),
            }
        }
        Command::GroupDecide {
            a,
            b,
            combiner,
            threshold,
            common,
        } => {
            let set_a = load_dataset(&a, common.lenient)?;
            let set_b = load_dataset(&b, common.lenient)?;
            let rule = resolve_threshold_rule(&threshold)?;
            let round = parse_round(&common.round)?;
            let decision_rule = DecisionRule::new(rule, common.mode.into());
            let combiner = match combiner {
                CombinerArg::And => Combiner::And,
                CombinerArg::Or => Combiner::Or,
            };
            let report =
                group_decide_with_rounding(&set_a, &set_b, combiner, &decision_rule, round)?;
            match common.format {
                FormatArg::Table => write_out(stdout, &render_report(&report)),
                FormatArg::Doc => write_out(stdout, &serialize_report(&report)),
            }
        }
    }
}

fn run_op(op: OpCommand, stdout: &mut dyn Write) -> RunResult<()> {
    match op {
        OpCommand::Complement(args) => {
            let set = load_dataset(&args.data, args.lenient)?;
            print_set(stdout, &set.complement(), args.format, args.digits)
        }
        OpCommand::TruthFav(args) => {
            let set = load_dataset(&args.data, args.lenient)?;
            print_set(stdout, &set.truth_favorite(), args.format, args.digits)
        }
        OpCommand::FalseFav(args) => {
            let set = load_dataset(&args.data, args.lenient)?;
            print_set(stdout, &set.false_favorite(), args.format, args.digits)
        }
        OpCommand::Scale {
            data,
            scalar,
            kind,
            lenient,
            format,
            digits,
        } => {
            let set = load_dataset(&data, lenient)?;
            let c =
                Scalar::parse(&scalar).map_err(|e| RunError::usage(format!("--scalar: {e}")))?;
            let kind = match kind {
                ScaleKindArg::Multiply => ScaleKind::Multiply,
                ScaleKindArg::Divide => ScaleKind::Divide,
            };
            print_set(stdout, &set.scale(&c, kind)?, format, digits)
        }
        OpCommand::Union(args) => run_binary_op(BinaryOpKind::Union, args, stdout),
        OpCommand::Intersection(args) => run_binary_op(BinaryOpKind::Intersection, args, stdout),
        OpCommand::Difference(args) => run_binary_op(BinaryOpKind::Difference, args, stdout),
        OpCommand::Add(args) => run_binary_op(BinaryOpKind::Add, args, stdout),
        OpCommand::And(args) => run_binary_op(BinaryOpKind::And, args, stdout),
        OpCommand::Or(args) => run_binary_op(BinaryOpKind::Or, args, stdout),
    }
}

fn run_binary_op(kind: BinaryOpKind, args: BinaryOpArgs, stdout: &mut dyn Write) -> RunResult<()> {
    let a = load_dataset(&args.a, args.lenient)?;
    let b = load_dataset(&args.b, args.lenient)?;
    let result = match kind {
        BinaryOpKind::Union => a.union(&b)?,
        BinaryOpKind::Intersection => a.intersection(&b)?,
        BinaryOpKind::Difference => a.difference(&b)?,
        BinaryOpKind::Add => a.addition(&b)?,
        BinaryOpKind::And => a.and_product(&b)?.into_set(),
        BinaryOpKind::Or => a.or_product(&b)?.into_set(),
    };
    print_set(stdout, &result, args.format, args.digits)
}
