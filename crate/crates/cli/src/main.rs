use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use satake::report::{check_entry, CartanReport, CheckConfig, CheckReport, LambdaReport, TransferReport};
use satake::root_datum::{GroupDescription, TwistSpec};
use satake::satake::SatakeGroup;
use satake::{catalog, Error};

#[derive(Parser)]
#[command(name = "satake", version, about = "Lambda_M, Cartan decompositions and transfer for p-adic groups")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lambda_M, its torsion and the classification line.
    Lambda(GroupArg),
    /// Orbits of W(G,A) on Lambda_M and the minimal double-coset elements.
    Cartan {
        #[command(flatten)]
        group: GroupArg,
        /// Norm bound on Lambda_M (required when Lambda_M is infinite).
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Transfer from the quasi-split form to an inner twist.
    Transfer {
        /// Group-description file of the quasi-split form.
        #[arg(long, conflicts_with = "catalog")]
        source: Option<PathBuf>,
        #[arg(long)]
        catalog: Option<String>,
        /// `LEVI:WORD`, comma-separated root indices, e.g. `0,1:0`; `identity`
        /// for the trivial twist. Defaults to the file's own twist.
        #[arg(long)]
        twist: Option<String>,
        #[arg(long, default_value_t = 6)]
        bound: i64,
        #[arg(long, env = "SATAKE_SEED", default_value_t = 0x5eed)]
        seed: u64,
    },
    /// Run every check suite on catalog entries.
    Check {
        #[arg(long, conflicts_with = "catalog")]
        all: bool,
        #[arg(long)]
        catalog: Option<String>,
        #[arg(long, env = "SATAKE_SEED", default_value_t = 0x5eed)]
        seed: u64,
    },
    /// List or print the shipped examples.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show { name: String },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GroupArg {
    /// Group-description file (TOML).
    #[arg(long)]
    group: Option<PathBuf>,
    /// Name of a shipped example.
    #[arg(long)]
    catalog: Option<String>,
}

enum Failure {
    Input(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn load(file: Option<&PathBuf>, name: Option<&str>) -> Result<GroupDescription, Failure> {
    match (file, name) {
        (Some(path), _) => Ok(GroupDescription::load(path)?),
        (None, Some(name)) => Ok(catalog::load(name)?),
        (None, None) => Err(Failure::Input("pass a group file or --catalog NAME".into())),
    }
}

fn indices(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Failure::Input(format!("bad root index `{t}` in --twist"))))
        .collect()
}

fn parse_twist(s: &str) -> Result<TwistSpec, Failure> {
    if s == "identity" {
        return Ok(TwistSpec::identity());
    }
    let (levi, word) = s.split_once(':').ok_or_else(|| Failure::Input("--twist must look like LEVI:WORD".into()))?;
    Ok(TwistSpec { levi: indices(levi)?, w_sigma: indices(word)? })
}

fn emit<T: Serialize + std::fmt::Display>(json: bool, report: &T) {
    if json {
        println!("{}", serde_json::to_string_pretty(report).expect("reports serialize"));
    } else {
        print!("{report}");
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Lambda(g) => {
            let desc = load(g.group.as_ref(), g.catalog.as_deref())?;
            let group = SatakeGroup::from_description(&desc)?;
            emit(cli.json, &LambdaReport::new(&group)?);
        }
        Command::Cartan { group: g, bound } => {
            let desc = load(g.group.as_ref(), g.catalog.as_deref())?;
            let group = SatakeGroup::from_description(&desc)?;
            emit(cli.json, &CartanReport::new(&group, bound)?);
        }
        Command::Transfer { source, catalog, twist, bound, seed } => {
            let desc = load(source.as_ref(), catalog.as_deref())?;
            let spec = match twist {
                Some(t) => parse_twist(&t)?,
                None => desc.twist.clone().unwrap_or_else(TwistSpec::identity),
            };
            let report = TransferReport::new(&desc.datum, &spec, bound, seed)?;
            emit(cli.json, &report);
            if !report.passed() {
                return Err(Failure::Check);
            }
        }
        Command::Check { all, catalog: name, seed } => {
            let descs = match (all, name) {
                (_, Some(name)) => vec![catalog::load(&name)?],
                (true, None) => catalog::all()?,
                (false, None) => return Err(Failure::Input("pass --all or --catalog NAME".into())),
            };
            let config = CheckConfig { seed, ..CheckConfig::default() };
            let report = CheckReport::new(descs.iter().map(|d| check_entry(d, &config)).collect());
            emit(cli.json, &report);
            if !report.passed {
                return Err(Failure::Check);
            }
        }
        Command::Catalog { action: CatalogAction::List } => {
            for name in catalog::names() {
                let desc = catalog::load(name)?;
                println!("{name:<20} {}", desc.description.unwrap_or_default());
            }
        }
        Command::Catalog { action: CatalogAction::Show { name } } => {
            let text = catalog::source(&name).ok_or_else(|| Failure::Input(format!("unknown catalog entry `{name}`")))?;
            print!("{text}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
