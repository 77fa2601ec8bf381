use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use sapprox::bridges::{belief_from_space, induce_belief, space_from_belief, InducedMassDoc, Mode};
use sapprox::format::{from_json, labels_of, to_json, BeliefDoc, SpaceDoc};
use sapprox::monotone::{check_partial_monotone, reduce, InflectionSet, MonotoneScope};
use sapprox::regions::{quality, RegionsDoc};
use sapprox::verify::{exit_code, parse_claims, verify_claims, RandomConfig, VerifySource};
use sapprox::{evaluate, BeliefStructure, DeciderKind, ElementSet, SApproxSpace, Universe};

/// Exact S-approximation spaces and belief structures.
#[derive(Parser, Debug)]
#[command(name = "sapprox", version)]
struct Cli {
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lower and upper approximations and the three regions of a set.
    Regions(SpaceQuery),
    /// Qualities of lower and upper approximation of a set.
    Quality(SpaceQuery),
    /// Partial monotonicity of the decider.
    Check {
        #[arg(long)]
        space: PathBuf,
        #[arg(long, value_enum, default_value_t = Scope::Space)]
        scope: Scope,
    },
    /// Drop the trivial elements of a space.
    Reduce(SpaceInput),
    /// Inflection points of every element.
    Inflection(SpaceInput),
    /// Belief structures derived from a space.
    #[command(subcommand)]
    Belief(BeliefCommand),
    /// Spaces built from a belief structure.
    #[command(subcommand)]
    Space(SpaceCommand),
    /// Belief, plausibility and ignorance of a set.
    BelPl {
        #[arg(long)]
        belief: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Carry a belief structure on U over to W through a space.
    Induce {
        /// Belief structure on the space's U.
        #[arg(long)]
        belief: PathBuf,
        #[arg(long)]
        space: PathBuf,
        /// Fail instead of reporting unmet hypotheses.
        #[arg(long)]
        strict: bool,
    },
    /// Check claims on a space, a belief structure, or random instances.
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
enum BeliefCommand {
    /// Möbius inverse of the lower quality.
    FromSpace {
        #[arg(long)]
        space: PathBuf,
        /// Fail instead of reporting unmet hypotheses.
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Subcommand, Debug)]
enum SpaceCommand {
    /// Inclusion-decider space whose qualities are Bel and Pl.
    FromBelief {
        #[arg(long)]
        belief: PathBuf,
    },
}

#[derive(Args, Debug)]
struct SpaceInput {
    #[arg(long)]
    space: PathBuf,
}

#[derive(Args, Debug)]
struct SpaceQuery {
    #[arg(long)]
    space: PathBuf,
    /// Comma-separated labels of W; empty for the empty set.
    #[arg(long)]
    set: String,
}

#[derive(Args, Debug)]
#[group(skip)]
#[command(group(ArgGroup::new("source").required(true).multiple(false)))]
struct VerifyArgs {
    #[arg(long, group = "source")]
    space: Option<PathBuf>,
    #[arg(long, group = "source")]
    belief: Option<PathBuf>,
    /// Number of seeded random trials.
    #[arg(long, value_name = "N", group = "source")]
    random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Comma-separated decider kinds for random trials.
    #[arg(long, value_delimiter = ',')]
    kind: Vec<String>,
    /// Comma-separated claim ids, or `all`.
    #[arg(long, default_value = "all")]
    claims: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Scope {
    Space,
    Decider,
}

fn mode(strict: bool) -> Mode {
    if strict {
        Mode::Strict
    } else {
        Mode::Permissive
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_space(path: &Path) -> Result<SApproxSpace> {
    let doc: SpaceDoc = from_json(&read(path)?).with_context(|| format!("{}", path.display()))?;
    SApproxSpace::from_doc(&doc).with_context(|| format!("{}", path.display()))
}

/// Reads a belief document, or the output of `belief from-space` or
/// `induce` when that output is valid.
fn load_belief(path: &Path) -> Result<BeliefStructure> {
    let text = read(path)?;
    let doc: BeliefDoc = match from_json::<InducedMassDoc>(&text) {
        Ok(induced) if !induced.valid => anyhow::bail!("{}: masses are marked invalid", path.display()),
        Ok(induced) => BeliefDoc {
            w: induced.w,
            m: induced.m.into_iter().filter(|e| !e.value.is_zero()).collect(),
        },
        Err(_) => from_json(&text).with_context(|| format!("{}", path.display()))?,
    };
    BeliefStructure::from_doc(&doc).with_context(|| format!("{}", path.display()))
}

fn parse_set(w: &Universe, list: &str) -> Result<ElementSet> {
    let labels = list.split(',').map(str::trim).filter(|s| !s.is_empty());
    Ok(w.set(labels)?)
}

fn line<T: Serialize>(value: &T) -> String {
    let mut text = to_json(value);
    text.push('\n');
    text
}

/// Output text and exit code of one command.
fn run(command: Command) -> Result<(String, u8)> {
    let text = match command {
        Command::Regions(q) => {
            let g = load_space(&q.space)?;
            let x = parse_set(g.w(), &q.set)?;
            line(&RegionsDoc::compute(&g, &x)?)
        }
        Command::Quality(q) => {
            let g = load_space(&q.space)?;
            let x = parse_set(g.w(), &q.set)?;
            line(&quality(&g, &x)?)
        }
        Command::Check { space, scope } => {
            let g = load_space(&space)?;
            let scope = match scope {
                Scope::Space => MonotoneScope::Space,
                Scope::Decider => MonotoneScope::Decider,
            };
            let report = check_partial_monotone(&g, scope)?;
            let witness = report.witness.map(|w| {
                json!({"A": labels_of(&w.a), "X": labels_of(&w.x), "Y": labels_of(&w.y)})
            });
            line(&json!({"holds": report.holds, "witness": witness}))
        }
        Command::Reduce(s) => line(&reduce(&load_space(&s.space)?)?.to_doc()),
        Command::Inflection(s) => line(&InflectionSet::compute(&load_space(&s.space)?)?),
        Command::Belief(BeliefCommand::FromSpace { space, strict }) => {
            let g = load_space(&space)?;
            line(&belief_from_space(&g, mode(strict))?.to_doc())
        }
        Command::Space(SpaceCommand::FromBelief { belief }) => {
            line(&space_from_belief(&load_belief(&belief)?)?.to_doc())
        }
        Command::BelPl { belief, set } => {
            let bs = load_belief(&belief)?;
            let x = parse_set(bs.universe(), &set)?;
            line(&evaluate(&bs, &x)?)
        }
        Command::Induce { belief, space, strict } => {
            let g = load_space(&space)?;
            let bs = load_belief(&belief)?;
            line(&induce_belief(&bs, &g, mode(strict))?.to_doc())
        }
        Command::Verify(args) => return verify(args),
    };
    Ok((text, 0))
}

fn verify(args: VerifyArgs) -> Result<(String, u8)> {
    let claims = parse_claims(&args.claims)?;
    let source = if let Some(path) = &args.space {
        VerifySource::Space(load_space(path)?)
    } else if let Some(path) = &args.belief {
        VerifySource::Belief(load_belief(path)?)
    } else {
        let trials = args.random.expect("clap requires one source");
        let mut config = RandomConfig::new(trials, args.seed);
        if !args.kind.is_empty() {
            config.kinds = args
                .kind
                .iter()
                .map(|k| k.parse::<DeciderKind>())
                .collect::<Result<_, _>>()?;
        }
        VerifySource::Random(config)
    };
    let reports = verify_claims(&source, &claims)?;
    let text: String = reports.iter().map(line).collect();
    Ok((text, exit_code(&reports) as u8))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(stdout.flush()?)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if !e.use_stderr() {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            // one line: the message without the usage block
            let text = e.to_string();
            let message: Vec<&str> = text
                .lines()
                .take_while(|l| !l.starts_with("Usage:"))
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .collect();
            eprintln!("{}", message.join(" "));
            return ExitCode::from(1);
        }
    };
    let out = cli.out.clone();
    let result = run(cli.command).and_then(|(text, code)| {
        emit(out.as_deref(), &text)?;
        Ok(code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", format!("{e:#}").replace('\n', " "));
            ExitCode::from(1)
        }
    }
}
