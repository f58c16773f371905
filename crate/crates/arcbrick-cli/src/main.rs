//! Command-line front end: queries, enumeration, verification sweeps,
//! JSON I/O and SVG rendering of arc diagrams.
//!
//! All structured output is line-delimited JSON. Arcs are written as
//! `left:pattern` strings, e.g. `0:uoou`. Exit status: 2 on usage errors,
//! 1 on a verification mismatch, 0 otherwise.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use arcbrick::json::{ArcJson, DiagramJson, WitnessJson};
use arcbrick::{
    algebra, all_family_members, brick_from_arc, enumerate_arcs, enumerate_weak, ext1, ext_basis,
    gentle, hereditary_algebra, hom_arcs, is_tau_rigid_arc, is_weak_pair_arcs, longest_weak_length,
    preprojective, semibricks, sweep_verify, AlgebraSpec, Arc, ArcDiagram, EpsOrientation,
};

#[derive(Parser)]
#[command(name = "arcbrick", version, about = "Arc diagrams and bricks over the doubled linear quiver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Arc enumeration.
    Arcs {
        #[command(subcommand)]
        command: ArcsCommand,
    },
    /// Brick enumeration over an algebra.
    Bricks {
        #[command(subcommand)]
        command: BricksCommand,
    },
    /// Morphism space between two bricks given by arcs.
    Hom {
        /// Source arc, e.g. 0:ouu
        #[arg(long)]
        src: String,
        /// Destination arc.
        #[arg(long)]
        dst: String,
        #[arg(short)]
        n: usize,
    },
    /// First extension space dimension between two bricks.
    Ext {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(short)]
        n: usize,
        #[arg(long, default_value = "preproj")]
        algebra: String,
    },
    /// Basis of extension witnesses as short exact sequences.
    Witness {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(short)]
        n: usize,
        #[arg(long, default_value = "preproj")]
        algebra: String,
    },
    /// Weak-pair test for (second, first).
    Pair {
        #[arg(long)]
        second: String,
        #[arg(long)]
        first: String,
        #[arg(short)]
        n: usize,
    },
    /// Weak exceptional sequence enumeration and extremes.
    Weak {
        #[command(subcommand)]
        command: WeakCommand,
    },
    /// Semibrick enumeration.
    Semibricks {
        #[command(subcommand)]
        command: SemibricksCommand,
    },
    /// Pattern test for rigidity of a single brick.
    TauRigid {
        #[arg(long)]
        arc: String,
        #[arg(short)]
        n: usize,
    },
    /// Oracle-versus-formula sweep; exits 1 on any mismatch.
    Verify {
        #[arg(short)]
        n: usize,
        /// Restrict to one algebra instead of the default family sweep.
        #[arg(long)]
        algebra: Option<String>,
    },
    /// Render a diagram JSON file to SVG.
    Render {
        #[arg(long)]
        diagram: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum ArcsCommand {
    /// List all arcs in canonical order, one JSON object per line.
    List {
        #[arg(short)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum BricksCommand {
    /// List bricks over the algebra, one JSON object per line.
    List {
        #[arg(short)]
        n: usize,
        #[arg(long, default_value = "preproj")]
        algebra: String,
    },
}

#[derive(Subcommand)]
enum WeakCommand {
    /// All weak sequences of a given length.
    Enumerate {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: usize,
    },
    /// Maximum weak sequence length by exhaustive search.
    Maxlen {
        #[arg(short)]
        n: usize,
        /// Also print one witness diagram on a second line.
        #[arg(long)]
        witness: bool,
    },
}

#[derive(Subcommand)]
enum SemibricksCommand {
    /// Count all semibricks (noncrossing arc sets).
    Count {
        #[arg(short)]
        n: usize,
    },
}

#[derive(Serialize)]
struct HomOut {
    dim: usize,
    basis: Vec<String>,
}

#[derive(Serialize)]
struct ExtOut {
    dim: usize,
}

#[derive(Serialize)]
struct PairOut {
    weak: bool,
}

#[derive(Serialize)]
struct MaxOut {
    max: usize,
}

#[derive(Serialize)]
struct CountOut {
    n: usize,
    count: usize,
}

#[derive(Serialize)]
struct TauOut {
    arc: String,
    tau_rigid: bool,
}

#[derive(Serialize)]
struct BrickLine {
    arc: String,
    dims: Vec<usize>,
}

#[derive(Serialize)]
struct VerifySummary {
    clean: bool,
    mismatches: u64,
}

struct UsageError(String);

type CmdResult = Result<ExitCode, UsageError>;

fn max_n_guard(n: usize) -> Result<(), UsageError> {
    let limit = std::env::var("ARCBRICK_MAX_N")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .unwrap_or(10);
    if n > limit {
        return Err(UsageError(format!(
            "n = {n} exceeds the sweep guard ({limit}); raise ARCBRICK_MAX_N to override"
        )));
    }
    Ok(())
}

fn parse_arc(s: &str, n: usize) -> Result<Arc, UsageError> {
    Arc::parse(s, n).map_err(|e| UsageError(e.to_string()))
}

fn parse_algebra(spec: &str, n: usize) -> Result<AlgebraSpec, UsageError> {
    let bad = |msg: String| UsageError(msg);
    if spec == "preproj" {
        return Ok(preprojective(n));
    }
    if spec == "gentle" {
        return Ok(gentle(n));
    }
    if let Some(list) = spec.strip_prefix("S=") {
        let mut items = Vec::new();
        for part in list.split(',').filter(|p| !p.is_empty()) {
            let v: usize = part
                .trim()
                .parse()
                .map_err(|_| bad(format!("bad relation locus {part:?}")))?;
            items.push(v);
        }
        return algebra(n, items).map_err(|e| bad(e.to_string()));
    }
    if let Some(eps) = spec.strip_prefix("eps=") {
        let eps = EpsOrientation::parse(eps).map_err(|e| bad(e.to_string()))?;
        return hereditary_algebra(n, eps).map_err(|e| bad(e.to_string()));
    }
    Err(bad(format!(
        "unknown algebra {spec:?}; expected preproj, gentle, S=2,3 or eps=uou"
    )))
}

fn emit<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable"));
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Arcs {
            command: ArcsCommand::List { n },
        } => {
            max_n_guard(n)?;
            for arc in enumerate_arcs(n) {
                emit(&ArcJson::from(&arc));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bricks {
            command: BricksCommand::List { n, algebra: spec },
        } => {
            max_n_guard(n)?;
            let member = parse_algebra(&spec, n)?;
            for (arc, rep) in arcbrick::classify::bricks(&member) {
                emit(&BrickLine {
                    arc: arc.to_string(),
                    dims: rep.dims().to_vec(),
                });
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Hom { src, dst, n } => {
            let src = parse_arc(&src, n)?;
            let dst = parse_arc(&dst, n)?;
            let basis = hom_arcs(&src, &dst);
            emit(&HomOut {
                dim: basis.len(),
                basis: basis.iter().map(|a| a.to_string()).collect(),
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Ext { x, y, n, algebra: spec } => {
            let member = parse_algebra(&spec, n)?;
            let x = brick_from_arc(&parse_arc(&x, n)?);
            let y = brick_from_arc(&parse_arc(&y, n)?);
            let result = ext1(&x, &y, &member).map_err(|e| UsageError(e.to_string()))?;
            emit(&ExtOut { dim: result.dim });
            Ok(ExitCode::SUCCESS)
        }
        Command::Witness { x, y, n, algebra: spec } => {
            let member = parse_algebra(&spec, n)?;
            let x = brick_from_arc(&parse_arc(&x, n)?);
            let y = brick_from_arc(&parse_arc(&y, n)?);
            let basis = ext_basis(&x, &y, &member).map_err(|e| UsageError(e.to_string()))?;
            for w in &basis {
                emit(&WitnessJson::from(w));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Pair { second, first, n } => {
            let second = parse_arc(&second, n)?;
            let first = parse_arc(&first, n)?;
            emit(&PairOut {
                weak: is_weak_pair_arcs(&second, &first),
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Weak { command } => match command {
            WeakCommand::Enumerate { n, k } => {
                max_n_guard(n)?;
                for d in enumerate_weak(n, k) {
                    emit(&DiagramJson::from(&d));
                }
                Ok(ExitCode::SUCCESS)
            }
            WeakCommand::Maxlen { n, witness } => {
                max_n_guard(n)?;
                let (max, diagram) = longest_weak_length(n);
                emit(&MaxOut { max });
                if witness {
                    emit(&DiagramJson::from(&diagram));
                }
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::Semibricks {
            command: SemibricksCommand::Count { n },
        } => {
            max_n_guard(n)?;
            let count = semibricks(&preprojective(n))
                .map_err(|e| UsageError(e.to_string()))?
                .len();
            emit(&CountOut { n, count });
            Ok(ExitCode::SUCCESS)
        }
        Command::TauRigid { arc, n } => {
            let parsed = parse_arc(&arc, n)?;
            emit(&TauOut {
                arc: parsed.to_string(),
                tau_rigid: is_tau_rigid_arc(&parsed),
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { n, algebra: spec } => {
            max_n_guard(n)?;
            let modes = match spec {
                Some(spec) => vec![parse_algebra(&spec, n)?],
                None if n <= 4 => all_family_members(n),
                None => {
                    let mut members = vec![preprojective(n)];
                    for v in 2..n {
                        members.push(algebra(n, [v]).expect("singleton in range"));
                    }
                    members.push(gentle(n));
                    members
                }
            };
            let report = sweep_verify(n, &modes);
            for identity in &report.identities {
                emit(identity);
            }
            emit(&VerifySummary {
                clean: report.clean,
                mismatches: report.mismatch_total(),
            });
            Ok(if report.clean {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Render { diagram, out } => {
            let text = std::fs::read_to_string(&diagram)
                .map_err(|e| UsageError(format!("cannot read {}: {e}", diagram.display())))?;
            let parsed: DiagramJson = serde_json::from_str(&text)
                .map_err(|e| UsageError(format!("bad diagram JSON: {e}")))?;
            let d = ArcDiagram::try_from(&parsed).map_err(|e| UsageError(e.to_string()))?;
            let svg = render::diagram_to_svg(&d);
            std::fs::write(&out, svg)
                .map_err(|e| UsageError(format!("cannot write {}: {e}", out.display())))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
