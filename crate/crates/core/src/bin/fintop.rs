//! Command-line front end. Every command prints one JSON document on stdout.
//!
//! Exit codes: 0 on success, 1 for unreadable or malformed input and usage
//! errors, 2 when the input is well formed but violates a precondition of
//! the requested computation.

use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dowker::closed::{verify_closed_relation, ClosedRelation, Mode};
use dowker::collapse::{collapse_leq_to_strict, greedy_collapse, verify_sequence, CollapseError};
use dowker::io::{self, LoadError};
use dowker::poset::{realize_as_poset_k_complex, Side};
use dowker::relation::{are_equivalent, canonical_relation, find_morphism, Relation};
use dowker::{homology, Poset, SimplicialComplex};

#[derive(Parser)]
#[command(
    name = "fintop",
    version,
    about = "Dowker complexes, finite spaces and integer homology"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// K- and L-complexes of relations and morphisms between relations
    #[command(subcommand)]
    Dowker(DowkerCmd),
    /// Posets as finite spaces
    #[command(subcommand)]
    Poset(PosetCmd),
    /// Elementary collapses
    #[command(subcommand)]
    Collapse(CollapseCmd),
    /// Integer homology of a complex
    Homology(HomologyArgs),
    /// Closed relations between posets
    #[command(subcommand)]
    Closed(ClosedCmd),
    /// Compare the homology of K and L
    #[command(subcommand)]
    Verify(VerifyCmd),
}

#[derive(Subcommand)]
enum DowkerCmd {
    K(RelationArg),
    L(RelationArg),
    /// Least morphism from one relation to another, if any
    Morphism {
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
    },
    Equivalent(PairArgs),
    /// Membership relation of the faces of a complex
    Canonical(ComplexArg),
}

#[derive(Subcommand)]
enum PosetCmd {
    OrderComplex(PosetArg),
    K(PosetArg),
    L(PosetArg),
    KStrict(PosetArg),
    LStrict(PosetArg),
    /// Poset whose K-complex is the given complex
    Realize(ComplexArg),
    LatticeCheck(PosetArg),
    ToTopology(PosetArg),
    FromTopology {
        #[arg(long)]
        space: PathBuf,
    },
}

#[derive(Subcommand)]
enum CollapseCmd {
    /// Collapse the complex of `≤` onto the complex of `<`
    LeqStrict {
        #[arg(long)]
        poset: PathBuf,
        #[arg(long, value_enum)]
        side: SideArg,
    },
    Greedy(ComplexArg),
    /// Replay a step list produced by another collapse command
    Verify {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        steps: PathBuf,
    },
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true, subcommand_negates_reqs = true)]
struct HomologyArgs {
    #[arg(long, required = true)]
    complex: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<HomologyCmd>,
}

#[derive(Subcommand)]
enum HomologyCmd {
    /// Whether two complexes have the same homology
    Same(PairArgs),
}

#[derive(Subcommand)]
enum ClosedCmd {
    Verify {
        #[arg(long)]
        xposet: PathBuf,
        #[arg(long)]
        yposet: PathBuf,
        #[arg(long)]
        relation: PathBuf,
        #[arg(long, value_enum)]
        mode: ModeArg,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    Dowker(RelationArg),
}

#[derive(Args)]
struct RelationArg {
    #[arg(long)]
    relation: PathBuf,
}

#[derive(Args)]
struct PosetArg {
    #[arg(long)]
    poset: PathBuf,
}

#[derive(Args)]
struct ComplexArg {
    #[arg(long)]
    complex: PathBuf,
}

#[derive(Args)]
struct PairArgs {
    #[arg(long)]
    a: PathBuf,
    #[arg(long)]
    b: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    K,
    L,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Quillen,
    Weak,
}

enum Failure {
    /// Exit 1: bad input or usage.
    Input(String),
    /// Exit 2: a precondition of the computation does not hold.
    Precondition(String),
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        Failure::Input(e.to_string())
    }
}

fn precondition(e: impl Display) -> Failure {
    Failure::Precondition(e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load<T>(path: &Path, f: fn(&str) -> Result<T, LoadError>) -> Result<T, Failure> {
    f(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn relation(path: &Path) -> Result<Relation, Failure> {
    load(path, io::load_relation)
}

fn poset(path: &Path) -> Result<Poset, Failure> {
    load(path, io::load_poset)
}

fn complex(path: &Path) -> Result<SimplicialComplex, Failure> {
    load(path, io::load_complex)
}

fn run(command: Command) -> Result<Value, Failure> {
    Ok(match command {
        Command::Dowker(cmd) => dowker(cmd)?,
        Command::Poset(cmd) => poset_cmd(cmd)?,
        Command::Collapse(cmd) => collapse(cmd)?,
        Command::Homology(args) => match args.command {
            Some(HomologyCmd::Same(p)) => {
                let (a, b) = (complex(&p.a)?, complex(&p.b)?);
                let (ha, hb) = (homology(&a), homology(&b));
                json!({ "a": ha, "b": hb, "same_homology": ha == hb })
            }
            None => {
                let path = args.complex.expect("clap requires --complex");
                serde_json::to_value(homology(&complex(&path)?)).expect("serializable")
            }
        },
        Command::Closed(ClosedCmd::Verify {
            xposet,
            yposet,
            relation: rel,
            mode,
        }) => {
            let (x, y) = (poset(&xposet)?, poset(&yposet)?);
            let r = relation(&rel)?;
            let pairs: Vec<(&str, &str)> = r
                .pairs()
                .iter()
                .map(|&(a, b)| (r.x_universe().label(a), r.y_universe().label(b)))
                .collect();
            let closed = ClosedRelation::from_labels(x, y, &pairs).map_err(precondition)?;
            let mode = match mode {
                ModeArg::Quillen => Mode::Quillen,
                ModeArg::Weak => Mode::Weak,
            };
            let report = verify_closed_relation(&closed, mode).map_err(precondition)?;
            serde_json::to_value(report).expect("serializable")
        }
        Command::Verify(VerifyCmd::Dowker(arg)) => {
            let r = relation(&arg.relation)?;
            let k = r.k_complex().map_err(precondition)?;
            let l = r.l_complex().map_err(precondition)?;
            let (hk, hl) = (homology(&k), homology(&l));
            json!({
                "covered": r.is_covered(),
                "homology_k": hk,
                "homology_l": hl,
                "same_homology": hk == hl,
            })
        }
    })
}

fn require_covered(r: &Relation) -> Result<(), Failure> {
    match r.uncovered().first() {
        Some(&y) => Err(Failure::Precondition(format!(
            "relation is not covered: `{}` is related to nothing",
            r.y_universe().label(y)
        ))),
        None => Ok(()),
    }
}

fn dowker(cmd: DowkerCmd) -> Result<Value, Failure> {
    Ok(match cmd {
        DowkerCmd::K(arg) => {
            io::complex_json(&relation(&arg.relation)?.k_complex().map_err(precondition)?)
        }
        DowkerCmd::L(arg) => {
            io::complex_json(&relation(&arg.relation)?.l_complex().map_err(precondition)?)
        }
        DowkerCmd::Morphism { from, to } => {
            let (r, r2) = (relation(&from)?, relation(&to)?);
            require_covered(&r)?;
            require_covered(&r2)?;
            let found = find_morphism(&r, &r2).map_err(precondition)?;
            let assignment = found.as_ref().map(|f| {
                f.iter()
                    .enumerate()
                    .map(|(y, &z)| [r.y_universe().label(y), r2.y_universe().label(z)])
                    .collect::<Vec<_>>()
            });
            json!({ "assignment": assignment, "exists": found.is_some() })
        }
        DowkerCmd::Equivalent(p) => {
            let (r, r2) = (relation(&p.a)?, relation(&p.b)?);
            require_covered(&r)?;
            require_covered(&r2)?;
            json!({ "equivalent": are_equivalent(&r, &r2).map_err(precondition)? })
        }
        DowkerCmd::Canonical(arg) => {
            io::relation_json(&canonical_relation(&complex(&arg.complex)?).map_err(precondition)?)
        }
    })
}

fn poset_cmd(cmd: PosetCmd) -> Result<Value, Failure> {
    let dowker = |arg: PosetArg, strict, side| -> Result<Value, Failure> {
        let k = poset(&arg.poset)?
            .dowker_complex(strict, side)
            .map_err(precondition)?;
        Ok(io::complex_json(&k))
    };
    Ok(match cmd {
        PosetCmd::OrderComplex(arg) => {
            io::complex_json(&poset(&arg.poset)?.order_complex().map_err(precondition)?)
        }
        PosetCmd::K(arg) => dowker(arg, false, Side::K)?,
        PosetCmd::L(arg) => dowker(arg, false, Side::L)?,
        PosetCmd::KStrict(arg) => dowker(arg, true, Side::K)?,
        PosetCmd::LStrict(arg) => dowker(arg, true, Side::L)?,
        PosetCmd::Realize(arg) => io::poset_json(
            &realize_as_poset_k_complex(&complex(&arg.complex)?).map_err(precondition)?,
        ),
        PosetCmd::LatticeCheck(arg) => {
            json!({ "lattice_condition": poset(&arg.poset)?.lattice_condition() })
        }
        PosetCmd::ToTopology(arg) => {
            io::topology_json(&poset(&arg.poset)?.to_topology().map_err(precondition)?)
        }
        PosetCmd::FromTopology { space } => io::poset_json(
            &load(&space, io::load_space)?
                .to_order()
                .map_err(precondition)?,
        ),
    })
}

fn collapse(cmd: CollapseCmd) -> Result<Value, Failure> {
    Ok(match cmd {
        CollapseCmd::LeqStrict { poset: path, side } => {
            let side = match side {
                SideArg::K => Side::K,
                SideArg::L => Side::L,
            };
            let seq = collapse_leq_to_strict(&poset(&path)?, side).map_err(precondition)?;
            let result = seq.verify().map_err(precondition)?;
            with_result(io::sequence_json(&seq), &result)
        }
        CollapseCmd::Greedy(arg) => {
            let (core, seq) = greedy_collapse(&complex(&arg.complex)?);
            let mut v = with_result(io::sequence_json(&seq), &core);
            v["collapsible"] = json!(core.is_point());
            v
        }
        CollapseCmd::Verify {
            complex: path,
            steps,
        } => {
            let k = complex(&path)?;
            let seq = io::parse_sequence(&read(&steps)?, k)?;
            match verify_sequence(&seq) {
                Ok(result) => with_result(json!({ "valid": true }), &result),
                Err(CollapseError::StepFailed { index, source }) => {
                    return Err(Failure::Precondition(format!("step {index}: {source}")))
                }
                Err(e) => return Err(precondition(e)),
            }
        }
    })
}

fn with_result(mut v: Value, result: &SimplicialComplex) -> Value {
    v["result"] = io::complex_json(result);
    v
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(value) => {
            println!("{}", io::write_report(&value));
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Precondition(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
