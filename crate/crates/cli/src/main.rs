mod file;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pathdga::moves::gluing_sequences;
use pathdga::text::{
    canonical, element_text, parse_edge, parse_path, sequence_lines, BiNotation, HiNotation,
};
use pathdga::{
    catalog, BiElement, Bigraph, BigraphDga, HiElement, HiPath, Higraph, HigraphDga, Path, VSet,
    VertexAssignment,
};

use crate::file::HigraphFile;

#[derive(Parser)]
#[command(
    name = "pathdga",
    version,
    about = "Path algebras of higraphs and their bigraph blow-ups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a higraph file against the axioms.
    Validate { file: PathBuf },
    /// Rewrite a higraph file in canonical form.
    Format { file: PathBuf },
    /// Print a catalog higraph as a file.
    Catalog { name: String, n: Option<usize> },
    /// List the edges of the bigraph with their weights.
    Blowup {
        file: PathBuf,
        /// List the boundary bigraph instead.
        #[arg(long)]
        boundary: bool,
    },
    /// Print the differential of one edge.
    Delta {
        file: PathBuf,
        #[arg(long, value_enum)]
        level: Level,
        #[arg(long)]
        edge: String,
    },
    /// Check the structure equation.
    Structure {
        file: PathBuf,
        #[arg(long, value_enum)]
        level: Level,
        /// `uniform1`, `uniform2`, or a list such as `a=2,b=1`; unlisted
        /// vertices get 1.
        #[arg(long, default_value = "uniform1")]
        psi: String,
    },
    /// Enumerate gluing sequences starting at a bigraph path.
    Gluings {
        file: PathBuf,
        #[arg(long)]
        path: String,
        #[arg(long)]
        steps: usize,
    },
    /// Check that both differentials square to zero within bounds.
    Dsq {
        file: PathBuf,
        #[arg(long, value_enum)]
        level: Level,
        #[arg(long, default_value_t = 4)]
        max_weight: i64,
        #[arg(long, default_value_t = 12)]
        max_length: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Level {
    Higraph,
    Bigraph,
    Boundary,
}

/// A command outcome other than success.
enum Failure {
    /// A check that does not hold; exit code 1.
    Check(Vec<String>),
    /// A usage, parse, or reference error; exit code 2.
    Usage(String),
}

type Outcome = Result<Vec<String>, Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(msg) = check_threads() {
        eprintln!("{msg}");
        return ExitCode::from(2);
    }
    match run(cli.command) {
        Ok(lines) => {
            print_lines(&lines);
            ExitCode::SUCCESS
        }
        Err(Failure::Check(lines)) => {
            print_lines(&lines);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}

fn print_lines(lines: &[String]) {
    let mut out = String::new();
    for l in lines {
        out.push_str(l);
        out.push('\n');
    }
    print!("{out}");
}

/// Execution is single-threaded; the variable is only validated.
fn check_threads() -> Result<(), String> {
    match std::env::var("PATHDGA_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(()),
            _ => Err(format!(
                "PATHDGA_THREADS must be a positive integer, got {v:?}"
            )),
        },
        Err(_) => Ok(()),
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Validate { file } => {
            load(&file)?;
            Ok(vec!["valid".to_string()])
        }
        Command::Format { file } => {
            let h = load(&file)?;
            Ok(vec![HigraphFile::from_graph(&h)
                .render()
                .trim_end()
                .to_string()])
        }
        Command::Catalog { name, n } => {
            let h = catalog(&name, n).map_err(usage)?;
            Ok(vec![HigraphFile::from_graph(&h)
                .render()
                .trim_end()
                .to_string()])
        }
        Command::Blowup { file, boundary } => {
            let h = load(&file)?;
            let g = if boundary {
                Bigraph::boundary(h)
            } else {
                Bigraph::blowup(h)
            };
            let n = BiNotation { graph: &g };
            let mut lines: Vec<String> = g
                .edges()
                .iter()
                .map(|e| format!("{} w={}", n.listing_text(e), e.weight()))
                .collect();
            lines.sort();
            Ok(lines)
        }
        Command::Delta { file, level, edge } => {
            let h = load(&file)?;
            let text = match level {
                Level::Higraph => {
                    let n = HiNotation { graph: &h };
                    let e = parse_edge(&n, &edge).map_err(usage)?;
                    let d = HigraphDga::new(h.clone());
                    element_text(&n, &d.delta(&HiElement::from_path(Path::single(e))))
                }
                Level::Bigraph | Level::Boundary => {
                    let d = BigraphDga::new(bigraph(h, level));
                    let n = BiNotation { graph: d.graph() };
                    let e = parse_edge(&n, &edge).map_err(usage)?;
                    element_text(&n, &d.delta(&BiElement::from_path(Path::single(e))))
                }
            };
            Ok(vec![text])
        }
        Command::Structure { file, level, psi } => {
            let h = load(&file)?;
            let report = match level {
                Level::Higraph => HigraphDga::new(h).check_structure(),
                Level::Bigraph => {
                    let psi = parse_psi(&h, &psi)?;
                    BigraphDga::new(Bigraph::blowup(h))
                        .check_structure(&psi)
                        .map_err(usage)?
                }
                Level::Boundary => BigraphDga::new(Bigraph::boundary(h)).check_structure_boundary(),
            };
            let line = vec![report.to_string()];
            if report.equal {
                Ok(line)
            } else {
                Err(Failure::Check(line))
            }
        }
        Command::Gluings { file, path, steps } => {
            let g = Bigraph::blowup(load(&file)?);
            let n = BiNotation { graph: &g };
            let p = parse_path(&n, &path).map_err(usage)?;
            let seqs = gluing_sequences(&g, &p, steps, None);
            let mut lines = vec![format!("count={}", seqs.len())];
            for (i, s) in seqs.iter().enumerate() {
                lines.push(format!("sequence {}", i + 1));
                lines.extend(sequence_lines(&n, s).into_iter().map(|l| format!("  {l}")));
            }
            Ok(lines)
        }
        Command::Dsq {
            file,
            level,
            max_weight,
            max_length,
        } => {
            if max_weight < 1 || max_length < 1 {
                return Err(usage("bounds must be at least 1"));
            }
            let h = load(&file)?;
            let witness = match level {
                Level::Higraph => {
                    let n = HiNotation { graph: &h };
                    let d = HigraphDga::new(h.clone());
                    d.check_d_squared(max_length)
                        .err()
                        .map(|p: HiPath| canonical(&n, &p))
                }
                Level::Bigraph | Level::Boundary => {
                    let d = BigraphDga::new(bigraph(h, level));
                    let n = BiNotation { graph: d.graph() };
                    d.check_d_squared(max_weight, max_length)
                        .err()
                        .map(|p| canonical(&n, &p))
                }
            };
            match witness {
                None => Ok(vec!["holds".to_string()]),
                Some(w) => Err(Failure::Check(vec![format!("fails at {w}")])),
            }
        }
    }
}

fn bigraph(h: Higraph, level: Level) -> Bigraph {
    if level == Level::Boundary {
        Bigraph::boundary(h)
    } else {
        Bigraph::blowup(h)
    }
}

/// Reads a file and validates it; axiom violations are check failures.
fn load(path: &PathBuf) -> Result<Higraph, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let file = HigraphFile::parse(&text).map_err(usage)?;
    let graph = file.to_graph().map_err(usage)?;
    graph
        .validate()
        .map_err(|report| Failure::Check(report.lines()))
}

fn parse_psi(h: &Higraph, spec: &str) -> Result<VertexAssignment, Failure> {
    match spec {
        "uniform1" => return Ok(VertexAssignment::uniform1()),
        "uniform2" => return Ok(VertexAssignment::uniform2(h)),
        _ => {}
    }
    let mut two = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| usage(format!("PARSE: expected name=value in psi, got {item:?}")))?;
        let v = h
            .vertex(name.trim())
            .ok_or_else(|| usage(format!("REFERENCE: vertex {} is not declared", name.trim())))?;
        match value.trim() {
            "1" => {}
            "2" => two.push(v),
            other => {
                return Err(usage(format!(
                    "PARSE: psi values are 1 or 2, got {other:?}"
                )))
            }
        }
    }
    Ok(VertexAssignment {
        two: VSet::from_ids(two),
    })
}
