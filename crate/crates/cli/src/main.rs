use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use dowker::complex::parse_simplex;
use dowker::format::{self, ComplexDoc};
use dowker::{dot, Error, Relation, WeightKind};

mod commands;

#[derive(Parser)]
#[command(
    name = "dowker",
    version,
    about = "Dowker complexes, weights and cosheaves of finite relations"
)]
struct Cli {
    /// Structured JSON output.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum WeightSource {
    Total,
    Differential,
}

#[derive(Subcommand)]
enum Command {
    /// Maximal simplices of the Dowker complex.
    Dowker { relation: PathBuf },
    /// Total (default) or differential weights, largest simplices first.
    Weights {
        relation: PathBuf,
        #[arg(long)]
        differential: bool,
    },
    /// Rebuild a relation from a weight file.
    Reconstruct {
        #[arg(long, value_enum)]
        from: WeightSource,
        weights: PathBuf,
    },
    /// Hasse diagram of the face poset, as DOT.
    Hasse { relation: PathBuf },
    /// The set-valued cosheaf σ ↦ Y_σ.
    Cosheaf {
        relation: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// The cosheaf whose costalks are complete simplices on Y_σ.
    CosheafFull {
        relation: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Global cosections, or cosections over the given simplices.
    Cosections {
        relation: PathBuf,
        /// A base simplex such as `a,c`; may be repeated.
        #[arg(long)]
        over: Vec<String>,
    },
    /// The dual of the full cosheaf.
    Dual {
        relation: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Compare the dual of the full cosheaf against the transpose's cosheaf.
    CheckDuality {
        relation: PathBuf,
        /// Also compare GF(2) Betti numbers of both Dowker complexes.
        #[arg(long)]
        homology: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Rows properly contained in another row, plus the redundancy cosheaf.
    Redundancy {
        relation: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// GF(2) Betti numbers of the Dowker complex.
    Homology { relation: PathBuf },
    /// Validate a morphism between two relations.
    MorphismCheck {
        source: PathBuf,
        target: PathBuf,
        morphism: PathBuf,
        /// Also try to induce a morphism of redundancy cosheaves.
        #[arg(long)]
        redundancy: bool,
    },
    /// Print the transposed relation.
    Transpose { relation: PathBuf },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_relation(path: &Path) -> Result<Relation> {
    let text = read(path)?;
    format::parse_relation(&text).with_context(|| format!("in {}", path.display()))
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn warn_zero_rows(r: &Relation) {
    let zeros = r.zero_rows();
    if !zeros.is_empty() {
        eprintln!(
            "note: {} related to no column and absent from the complex: {}",
            if zeros.len() == 1 {
                "row is"
            } else {
                "rows are"
            },
            zeros.join(", ")
        );
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let json = cli.json;
    match cli.command {
        Command::Dowker { relation } => {
            let r = load_relation(&relation)?;
            warn_zero_rows(&r);
            let k = dowker::dowker(&r);
            if json {
                print_json(&serde_json::to_value(ComplexDoc::from(&k))?);
            } else {
                for s in k.maximal() {
                    println!("{}", s.key(k.universe()));
                }
            }
        }
        Command::Weights {
            relation,
            differential,
        } => {
            let r = load_relation(&relation)?;
            let w = if differential {
                dowker::differential_weight(&r)
            } else {
                dowker::total_weight(&r)
            };
            if json {
                println!("{}", format::weights_to_json(&w));
            } else {
                for (s, v) in w.descending() {
                    println!("{} {v}", s.display(w.complex().universe()));
                }
            }
        }
        Command::Reconstruct { from, weights } => {
            let text = read(&weights)?;
            let r = match from {
                WeightSource::Total => {
                    let w = format::parse_weights(&text, WeightKind::Total)?;
                    dowker::reconstruct_from_total(&w)?
                }
                WeightSource::Differential => {
                    let w = format::parse_weights(&text, WeightKind::Differential)?;
                    dowker::reconstruct_from_differential(&w)
                }
            };
            if json {
                println!("{}", format::relation_to_json(&r));
            } else {
                print!("{}", format::relation_to_text(&r));
            }
        }
        Command::Hasse { relation } => {
            let p = dowker::face_poset(&dowker::dowker(&load_relation(&relation)?));
            if json {
                let name = |i: usize| p.element(i).key(p.universe());
                let covers: Vec<[String; 2]> = p
                    .covers()
                    .iter()
                    .map(|&(a, b)| [name(a), name(b)])
                    .collect();
                print_json(&json!({
                    "elements": (0..p.len()).map(name).collect::<Vec<_>>(),
                    "covers": covers,
                }));
            } else {
                print!("{}", dot::poset_dot(&p));
            }
        }
        Command::Cosheaf {
            relation,
            dot: as_dot,
        } => {
            let c = dowker::coshv_rep0(&load_relation(&relation)?);
            if json {
                print_json(&format::set_cosheaf_to_json(&c));
            } else if as_dot {
                print!("{}", dot::set_cosheaf_dot(&c));
            } else {
                print!("{}", commands::set_cosheaf_table(&c));
            }
        }
        Command::CosheafFull {
            relation,
            dot: as_dot,
        } => {
            let c = dowker::coshv_rep(&load_relation(&relation)?);
            commands::print_complex_cosheaf(&c, json, as_dot);
        }
        Command::Cosections { relation, over } => {
            let r = load_relation(&relation)?;
            let c = dowker::coshv_rep(&r);
            let k = if over.is_empty() {
                dowker::global_cosection_complex(&c)
            } else {
                let u = over
                    .iter()
                    .map(|s| parse_simplex(s, r.x_labels()))
                    .collect::<dowker::Result<Vec<_>>>()?;
                dowker::cosections_over(&c, &u)?
            };
            if json {
                print_json(&serde_json::to_value(ComplexDoc::from(&k))?);
            } else {
                for s in k.maximal() {
                    println!("{}", s.key(k.universe()));
                }
            }
        }
        Command::Dual {
            relation,
            dot: as_dot,
        } => {
            let c = dowker::dual(&dowker::coshv_rep(&load_relation(&relation)?));
            commands::print_complex_cosheaf(&c, json, as_dot);
        }
        Command::CheckDuality {
            relation,
            homology,
            dot: as_dot,
        } => {
            let r = load_relation(&relation)?;
            return Ok(commands::check_duality(&r, json, homology, as_dot));
        }
        Command::Redundancy {
            relation,
            dot: as_dot,
        } => {
            let r = load_relation(&relation)?;
            commands::redundancy(&r, json, as_dot);
        }
        Command::Homology { relation } => {
            let b = dowker::betti(&dowker::dowker(&load_relation(&relation)?));
            if json {
                print_json(&json!({ "betti": b.0 }));
            } else {
                println!("{}", commands::betti_line(&b));
            }
        }
        Command::MorphismCheck {
            source,
            target,
            morphism,
            redundancy,
        } => {
            let src = load_relation(&source)?;
            let tgt = load_relation(&target)?;
            let text = read(&morphism)?;
            return commands::morphism_check(&src, &tgt, &text, json, redundancy);
        }
        Command::Transpose { relation } => {
            let t = load_relation(&relation)?.transpose();
            if json {
                println!("{}", format::relation_to_json(&t));
            } else {
                print!("{}", format::relation_to_text(&t));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// 2 for unreadable or malformed input, 1 for everything else.
fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<std::io::Error>().is_some() {
        return 2;
    }
    match err.downcast_ref::<Error>() {
        Some(
            Error::Parse { .. }
            | Error::Json(_)
            | Error::InvalidEntry { .. }
            | Error::DimensionMismatch(_)
            | Error::DuplicateLabel { .. },
        ) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
