use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use gcg::dot::gcg_to_dot;
use gcg::dynamics::{apply_sequence, apply_with, compose, run, Step};
use gcg::enumerate::enumerate_disks;
use gcg::exec::Schedule;
use gcg::localrule::{builtin_rule, check_local_rule, identity, CheckMode, LocalRule};
use gcg::metric::distance;
use gcg::pathlang::{check_axioms, grid, paths_up_to, petersen, FiniteStructure, GroupTable};
use gcg::{Gcg, GraphDoc, PathWord, PortAlphabet, Signature};

#[derive(Parser)]
#[command(
    name = "gcg",
    version,
    about = "Generalized Cayley graphs and causal graph dynamics"
)]
struct Cli {
    /// Run per-vertex work on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonicalize a pointed graph.
    Canon { input: PathBuf },
    /// The radius-R disk around the pointer.
    Disk {
        input: PathBuf,
        #[arg(short = 'r')]
        radius: usize,
    },
    /// Re-point a graph at the vertex reached by WORD.
    Shift {
        input: PathBuf,
        #[arg(short = 'u')]
        word: String,
    },
    /// Distance between two graphs: 0 or 2^-r.
    Dist { a: PathBuf, b: PathBuf },
    /// Every path word of length at most N, one per line.
    Paths {
        input: PathBuf,
        #[arg(short = 'n')]
        n: usize,
    },
    /// Check the path-structure axioms of a graph (.json) or a word list.
    Axioms {
        input: PathBuf,
        #[arg(short = 'n')]
        n: usize,
    },
    /// The Cayley graph of a group given by its multiplication table.
    Cayley {
        #[arg(long)]
        group: PathBuf,
    },
    /// The Petersen graph.
    Petersen,
    /// An n×m grid, or torus with --wrap.
    Grid {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'm')]
        m: usize,
        #[arg(long)]
        wrap: bool,
    },
    /// Decide whether a rule is a local rule.
    CheckRule(CheckRuleArgs),
    /// One global step; prints the image and the vertex tracker.
    Step {
        input: PathBuf,
        #[arg(long)]
        rule: String,
        #[arg(long)]
        emit_dot: Option<PathBuf>,
    },
    /// K global steps; prints the final image and composed tracker.
    Run {
        input: PathBuf,
        #[arg(long)]
        rule: String,
        #[arg(long, default_value_t = 1)]
        steps: usize,
        #[arg(long)]
        emit_dot: Option<PathBuf>,
    },
    /// Apply the composite of two rules and compare with applying them in turn.
    Compose {
        input: PathBuf,
        /// Two rule names, `f,g`; the composite applies `f` first.
        #[arg(long, value_delimiter = ',', required = true)]
        rules: Vec<String>,
    },
    /// Every disk of radius N.
    EnumDisks {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, default_value = "ab")]
        ports: String,
        #[arg(long)]
        count_only: bool,
        #[arg(long, default_value_t = 5_000_000)]
        limit: usize,
    },
    /// Write the standard fixture graphs as JSON files into DIR.
    Fixtures { dir: PathBuf },
}

#[derive(Args)]
struct CheckRuleArgs {
    #[arg(long)]
    rule: String,
    #[arg(long, conflicts_with = "fixtures")]
    exhaustive: bool,
    /// Directory of JSON graphs whose disks are checked.
    #[arg(long)]
    fixtures: Option<PathBuf>,
    /// Radius of the identity rule.
    #[arg(short = 'n')]
    radius: Option<usize>,
    #[arg(long, default_value = "ab")]
    ports: String,
    /// Comma-separated vertex states.
    #[arg(long, value_delimiter = ',')]
    states: Vec<String>,
    #[arg(long, default_value_t = 5_000_000)]
    limit: usize,
}

/// Exit status for a property that was checked and found false.
struct Verdict(String);

enum Outcome {
    Done,
    Failed(Verdict),
}

fn read_gcg(path: &Path) -> Result<Gcg> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(GraphDoc::parse(&text)?.to_gcg()?)
}

fn print_gcg(g: &Gcg) {
    println!("{}", GraphDoc::from_gcg(g).to_json());
}

fn rule_for(name: &str, sig: &Arc<Signature>, radius: Option<usize>) -> Result<LocalRule> {
    match (name, radius) {
        ("identity", Some(r)) => Ok(identity(sig, r)),
        _ => Ok(builtin_rule(name, sig)?),
    }
}

fn print_step(x: &Gcg, step: &Step) {
    let doc = json!({
        "image": GraphDoc::from_gcg(&step.image),
        "tracker": step.tracker.to_pairs(x, &step.image),
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&doc).expect("documents serialize")
    );
}

fn write_dot(dir: &Path, k: usize, g: &Gcg) -> Result<()> {
    fs::create_dir_all(dir)?;
    let path = dir.join(format!("step_{k:03}.dot"));
    fs::write(&path, gcg_to_dot(g)).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn load_fixtures(dir: &Path) -> Result<Vec<Gcg>> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .with_context(|| format!("reading {}", dir.display()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        bail!("no .json graphs in {}", dir.display());
    }
    paths.iter().map(|p| read_gcg(p)).collect()
}

fn check_rule(args: &CheckRuleArgs, schedule: Schedule) -> Result<Outcome> {
    let (sig, mode) = match &args.fixtures {
        Some(dir) => {
            let graphs = load_fixtures(dir)?;
            let sig = graphs[0].signature().clone();
            if graphs.iter().any(|g| g.signature() != &sig) {
                bail!("fixtures in {} use different signatures", dir.display());
            }
            (sig, CheckMode::Fixtures(graphs))
        }
        None => {
            let ports = PortAlphabet::new(args.ports.chars())?;
            let sig = Signature::new(ports, args.states.clone(), Vec::new())?;
            (sig, CheckMode::Exhaustive { limit: args.limit })
        }
    };
    let rule = rule_for(&args.rule, &sig, args.radius)?;
    let report = check_local_rule(&rule, &mode, schedule)?;
    print!("{report}");
    Ok(if report.passes() {
        Outcome::Done
    } else {
        Outcome::Failed(Verdict(format!("{} is not a local rule", args.rule)))
    })
}

fn execute(cli: Cli) -> Result<Outcome> {
    let schedule = if cli.sequential {
        Schedule::Sequential
    } else {
        Schedule::Parallel
    };
    match cli.command {
        Command::Canon { input } => print_gcg(&read_gcg(&input)?),
        Command::Disk { input, radius } => print_gcg(&read_gcg(&input)?.disk(radius)),
        Command::Shift { input, word } => {
            let g = read_gcg(&input)?;
            let w = PathWord::parse(&word, g.signature().ports())?;
            let u = g
                .resolve(&w)
                .with_context(|| format!("`{word}` is not a path from the pointer"))?;
            print_gcg(&g.shift(u));
        }
        Command::Dist { a, b } => println!("{}", distance(&read_gcg(&a)?, &read_gcg(&b)?)?),
        Command::Paths { input, n } => {
            let g = read_gcg(&input)?;
            for w in paths_up_to(&g, n) {
                println!("{}", w.display(g.signature().ports()));
            }
        }
        Command::Axioms { input, n } => {
            let report = if input.extension().is_some_and(|e| e == "json") {
                let g = read_gcg(&input)?;
                let r = check_axioms(&g, n);
                print!("{}", r.display(g.signature().ports()));
                r.passes()
            } else {
                let s = FiniteStructure::parse(&fs::read_to_string(&input)?)?;
                let r = check_axioms(&s, n);
                print!(
                    "{}",
                    r.display(gcg::pathlang::PathStructure::signature(&s).ports())
                );
                r.passes()
            };
            if !report {
                return Ok(Outcome::Failed(Verdict("axioms fail".into())));
            }
        }
        Command::Cayley { group } => {
            let text = fs::read_to_string(&group)?;
            let table: GroupTable = serde_json::from_str(&text).context("malformed group table")?;
            print_gcg(&table.to_gcg()?);
        }
        Command::Petersen => print_gcg(&petersen()),
        Command::Grid { n, m, wrap } => print_gcg(&grid(n, m, wrap)?),
        Command::CheckRule(args) => return check_rule(&args, schedule),
        Command::Step {
            input,
            rule,
            emit_dot,
        } => {
            let x = read_gcg(&input)?;
            let step = apply_with(&rule_for(&rule, x.signature(), None)?, &x, schedule)?;
            if let Some(dir) = emit_dot {
                write_dot(&dir, 0, &x)?;
                write_dot(&dir, 1, &step.image)?;
            }
            print_step(&x, &step);
        }
        Command::Run {
            input,
            rule,
            steps,
            emit_dot,
        } => {
            let x = read_gcg(&input)?;
            let rule = rule_for(&rule, x.signature(), None)?;
            let all = run(&rule, &x, steps)?;
            if let Some(dir) = &emit_dot {
                write_dot(dir, 0, &x)?;
                for (k, s) in all.iter().enumerate() {
                    write_dot(dir, k + 1, &s.image)?;
                }
            }
            let rules = vec![rule; steps];
            print_step(&x, &apply_sequence(&rules, &x)?);
        }
        Command::Compose { input, rules } => {
            if rules.len() != 2 {
                bail!("--rules takes exactly two names, e.g. inflate,sprout");
            }
            let x = read_gcg(&input)?;
            let [f, g] = [&rules[0], &rules[1]].map(|r| rule_for(r, x.signature(), None));
            let (f, g) = (f?, g?);
            let c = compose(&f, &g)?;
            let direct = apply_with(&c, &x, schedule)?;
            let stepwise = apply_sequence(&[f, g], &x)?;
            print_step(&x, &direct);
            if direct != stepwise {
                return Ok(Outcome::Failed(Verdict(
                    "the composite disagrees with applying the rules in turn".into(),
                )));
            }
        }
        Command::EnumDisks {
            n,
            ports,
            count_only,
            limit,
        } => {
            let sig = Signature::unlabeled(&ports);
            let disks = enumerate_disks(&sig, n, limit)?;
            if count_only {
                println!("{}", disks.len());
            } else {
                let docs: Vec<GraphDoc> = disks.iter().map(GraphDoc::from_gcg).collect();
                println!("{}", serde_json::to_string_pretty(&docs)?);
            }
        }
        Command::Fixtures { dir } => {
            fs::create_dir_all(&dir)?;
            let all = gcg::fixtures::standard()?
                .into_iter()
                .chain(gcg::fixtures::standard_ab()?)
                .chain(gcg::fixtures::standard_abc());
            for (name, g) in all {
                let path = dir.join(format!("{name}.json"));
                fs::write(&path, GraphDoc::from_gcg(&g).to_json() + "\n")?;
                println!("{}", path.display());
            }
        }
    }
    Ok(Outcome::Done)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match execute(cli) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Failed(Verdict(why))) => {
            eprintln!("{why}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
