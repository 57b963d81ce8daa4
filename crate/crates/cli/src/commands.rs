//! Command dispatch. Every command returns its stdout text and an exit code;
//! only `main` touches the process.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use maxinv_core::action::is_invariant;
use maxinv_core::lattice::is_normal_in_parent;
use maxinv_core::theorem::Instance;
use maxinv_core::{build_action, generate_group, CoprimeAction, PermGroup};
use thiserror::Error;

use crate::census::{run_census, CensusOptions, PrimeSelector};
use crate::corpus::corpus;
use crate::format::{ActionSpec, ActionSpecError, GroupSpec};
use crate::report::{schmidt_info, CheckReport, Timings};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_DISCREPANCY: i32 = 4;

#[derive(Debug, Error)]
pub enum CommandError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Precondition(String),
}

impl CommandError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::Usage(_) => EXIT_USAGE,
            CommandError::Parse(_) => EXIT_PARSE,
            CommandError::Precondition(_) => EXIT_PRECONDITION,
        }
    }
}

impl From<maxinv_core::Error> for CommandError {
    fn from(e: maxinv_core::Error) -> Self {
        use maxinv_core::Error as E;
        match e {
            E::NotCoprime { .. } | E::PrimeDoesNotDivide { .. } | E::CapExceeded { .. } => {
                CommandError::Precondition(e.to_string())
            }
            _ => CommandError::Parse(e.to_string()),
        }
    }
}

impl From<ActionSpecError> for CommandError {
    fn from(e: ActionSpecError) -> Self {
        match e {
            ActionSpecError::Action(inner) => inner.into(),
            invalid => CommandError::Parse(invalid.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "maxinv",
    version,
    about = "Maximal invariant subgroups under coprime actions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide the hypothesis for one prime, classify, and cross-validate.
    Check(CheckArgs),
    /// Run every check over the built-in corpus.
    Census(CensusArgs),
    /// List every subgroup with normality and invariance.
    Lattice(InputArgs),
    /// Validate an action file against a group file.
    Validate(ValidateArgs),
    /// List the built-in corpus, optionally writing it out as files.
    Corpus(CorpusArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Group file (.grp).
    #[arg(short, long)]
    pub group: PathBuf,
    /// Action file (.aut); the trivial action when omitted.
    #[arg(short, long)]
    pub action: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(short, long, value_parser = parse_prime)]
    pub prime: u64,
    #[arg(long)]
    pub json: bool,
    /// Include wall-clock timings in the report.
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long, default_value_t = 192)]
    pub max_order: usize,
    /// `all` or a comma-separated list of primes.
    #[arg(long, default_value = "all", value_parser = PrimeSelector::parse)]
    pub primes: PrimeSelector,
    #[arg(long)]
    pub json: bool,
    /// Include wall-clock timings; the output is then no longer reproducible.
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[arg(short, long)]
    pub group: PathBuf,
    #[arg(short, long)]
    pub action: PathBuf,
}

#[derive(Debug, Args)]
pub struct CorpusArgs {
    /// Directory to write one .grp (and .aut) file per entry into.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_prime(s: &str) -> Result<u64, String> {
    match s.parse::<u64>() {
        Ok(p) if maxinv_core::structure::is_prime(p) => Ok(p),
        _ => Err(format!("{s:?} is not a prime")),
    }
}

/// Stdout text and exit code of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match dispatch(&cli.command) {
        Ok(outcome) => outcome,
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

pub fn dispatch(command: &Command) -> Result<Outcome, CommandError> {
    match command {
        Command::Check(a) => cmd_check(a),
        Command::Census(a) => cmd_census(a),
        Command::Lattice(a) => cmd_lattice(a),
        Command::Validate(a) => cmd_validate(a),
        Command::Corpus(a) => cmd_corpus(a),
    }
}

fn read(path: &Path) -> Result<String, CommandError> {
    fs::read_to_string(path).map_err(|e| CommandError::Parse(format!("{}: {e}", path.display())))
}

pub struct LoadedGroup {
    pub name: String,
    pub group: Arc<PermGroup>,
}

pub fn load_group(path: &Path) -> Result<LoadedGroup, CommandError> {
    let spec = GroupSpec::parse(&read(path)?)
        .map_err(|e| CommandError::Parse(format!("{}: {e}", path.display())))?;
    let group = Arc::new(generate_group(&spec.generators)?);
    let name = spec.name.unwrap_or_else(|| {
        path.file_stem()
            .map_or_else(|| "G".to_string(), |s| s.to_string_lossy().into_owned())
    });
    Ok(LoadedGroup { name, group })
}

/// The action and its display name.
pub fn load_action(
    path: Option<&Path>,
    group: &Arc<PermGroup>,
) -> Result<(CoprimeAction, String), CommandError> {
    match path {
        None => Ok((build_action(group, Vec::new())?, "trivial".to_string())),
        Some(p) => {
            let spec = ActionSpec::parse(&read(p)?, group.degree())
                .map_err(|e| CommandError::Parse(format!("{}: {e}", p.display())))?;
            let act = spec.build(group)?;
            let name = p
                .file_stem()
                .map_or_else(|| "A".to_string(), |s| s.to_string_lossy().into_owned());
            Ok((act, name))
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn cmd_check(a: &CheckArgs) -> Result<Outcome, CommandError> {
    let g = load_group(&a.input.group)?;
    let (act, action_name) = load_action(a.input.action.as_deref(), &g.group)?;
    let start = Instant::now();
    let inst = Instance::new(act)?;
    let lattice_ms = start.elapsed().as_secs_f64() * 1e3;
    let t = Instant::now();
    let schmidt = schmidt_info(&inst)?;
    let mut report = CheckReport::build(&inst, &g.name, &action_name, a.prime, schmidt)?;
    if a.timings {
        report.timings = Some(Timings {
            lattice_ms,
            analysis_ms: t.elapsed().as_secs_f64() * 1e3,
        });
    }
    let stdout = if a.json {
        to_json(&report)
    } else {
        report.to_text()
    };
    Ok(Outcome {
        code: if report.all_passed() {
            EXIT_OK
        } else {
            EXIT_DISCREPANCY
        },
        stdout,
        stderr: String::new(),
    })
}

fn cmd_census(a: &CensusArgs) -> Result<Outcome, CommandError> {
    let report = run_census(&CensusOptions {
        max_order: a.max_order,
        primes: a.primes.clone(),
        timings: a.timings,
    })?;
    let stdout = if a.json {
        to_json(&report)
    } else {
        report.to_text()
    };
    Ok(Outcome {
        code: if report.all_passed() {
            EXIT_OK
        } else {
            EXIT_DISCREPANCY
        },
        stdout,
        stderr: String::new(),
    })
}

fn cmd_lattice(a: &InputArgs) -> Result<Outcome, CommandError> {
    let g = load_group(&a.group)?;
    let (act, _) = load_action(a.action.as_deref(), &g.group)?;
    let with_action = a.action.is_some();
    let inst = Instance::new(act)?;
    let mut out = format!(
        "# {} order {}, {} subgroups\n# index order normal{} generators\n",
        g.name,
        g.group.order(),
        inst.lattice().len(),
        if with_action { " invariant" } else { "" }
    );
    for (i, h) in inst.lattice().subgroups().iter().enumerate() {
        let gens: Vec<String> = h
            .generator_permutations()
            .iter()
            .map(ToString::to_string)
            .collect();
        let normal = if is_normal_in_parent(h) { "yes" } else { "no" };
        let invariant = if with_action {
            format!(
                " {:<9}",
                if is_invariant(h, inst.action())? {
                    "yes"
                } else {
                    "no"
                }
            )
        } else {
            String::new()
        };
        out.push_str(&format!(
            "{:<7} {:<5} {:<6}{} <{}>\n",
            i + 1,
            h.order(),
            normal,
            invariant,
            gens.join(", ")
        ));
    }
    Ok(Outcome::ok(out))
}

fn cmd_validate(a: &ValidateArgs) -> Result<Outcome, CommandError> {
    let g = load_group(&a.group)?;
    let (act, _) = load_action(Some(&a.action), &g.group)?;
    let mut out = format!(
        "group {} order {}\naction order {} coprime\n",
        g.name,
        g.group.order(),
        act.order()
    );
    for (k, aut) in act.generators().iter().enumerate() {
        out.push_str(&format!("automorphism {} order {}\n", k + 1, aut.order()));
    }
    Ok(Outcome::ok(out))
}

fn file_stem(key: &str) -> String {
    key.chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() {
                c.to_ascii_lowercase()
            } else {
                '_'
            }
        })
        .collect::<String>()
        .split('_')
        .filter(|s| !s.is_empty())
        .collect::<Vec<_>>()
        .join("_")
}

fn cmd_corpus(a: &CorpusArgs) -> Result<Outcome, CommandError> {
    let mut out = String::new();
    if let Some(dir) = &a.out {
        fs::create_dir_all(dir)
            .map_err(|e| CommandError::Parse(format!("{}: {e}", dir.display())))?;
    }
    for e in corpus() {
        let act = e.action()?;
        out.push_str(&format!(
            "{:<14} {:<26} order {:<4} action order {}\n",
            e.name,
            e.action_name,
            e.order(),
            act.order()
        ));
        if let Some(dir) = &a.out {
            let stem = file_stem(&e.key());
            let write = |ext: &str, text: String| {
                let path = dir.join(format!("{stem}.{ext}"));
                fs::write(&path, text)
                    .map_err(|err| CommandError::Parse(format!("{}: {err}", path.display())))
            };
            write(
                "grp",
                GroupSpec::from_group(Some(&e.name), &e.group).to_string(),
            )?;
            if !act.is_trivial() {
                write("aut", ActionSpec::from_action(&act).to_string())?;
            }
        }
    }
    Ok(Outcome::ok(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_stems_are_tidy() {
        assert_eq!(file_stem("Q8 / order-3 cycling"), "q8_order_3_cycling");
        assert_eq!(file_stem("SL(2,3) / trivial"), "sl_2_3_trivial");
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run(["maxinv"]).code, EXIT_USAGE);
        assert_eq!(
            run(["maxinv", "check", "-g", "x.grp", "-p", "4"]).code,
            EXIT_USAGE
        );
        assert_eq!(run(["maxinv", "census", "--primes", "6"]).code, EXIT_USAGE);
        assert_eq!(run(["maxinv", "--help"]).code, EXIT_OK);
    }

    #[test]
    fn missing_file_is_a_parse_error() {
        let o = run(["maxinv", "check", "-g", "/nonexistent/x.grp", "-p", "2"]);
        assert_eq!(o.code, EXIT_PARSE);
    }
}
