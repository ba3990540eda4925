//! Batch front end for the `nonorientable` library.
//!
//! Every subcommand reads JSON files, runs one library operation and prints
//! either text or, with `--json`, a JSON document. Exit codes: 0 on success,
//! 1 on a domain error, 2 on an I/O or parse error.

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use nonorientable::decomp::{decompose, psi, rewrite_s_free, GeneratorWord};
use nonorientable::gf2::Gf2Matrix;
use nonorientable::hform::{HForm, Transvection};
use nonorientable::invariants::{
    codim2_relations_check, count_en, f1u, m_structure, universal_invariant, C1Assignment,
    EventLog, FinAbGroup,
};
use nonorientable::mcg::{is_in_ng, klein_bottle, klein_bottle_catalog, omega, MappingClassData};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "nonorientable",
    version,
    about = "H-forms, generator words and invariants of non-orientable surfaces"
)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that an H-form is symmetric, non-degenerate and consistent.
    ValidateForm {
        #[arg(long)]
        form: PathBuf,
    },
    /// Print an orthonormal basis and its values.
    Orthonormalize {
        #[arg(long)]
        form: PathBuf,
    },
    /// Write an orthogonal matrix as a word in T- and S-generators.
    Decompose {
        #[arg(long)]
        form: PathBuf,
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Replace S-letters by T-letters (dim >= 9).
    RewriteSFree {
        #[arg(long)]
        form: PathBuf,
        /// A generator word to rewrite.
        #[arg(long, conflicts_with = "matrix", required_unless_present = "matrix")]
        word: Option<PathBuf>,
        /// An orthogonal matrix, decomposed first.
        #[arg(long)]
        matrix: Option<PathBuf>,
    },
    /// rank(m - Id) mod 2.
    Psi {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// The parity invariant of a mapping class.
    Omega {
        /// Mapping class JSON.
        #[arg(long, conflicts_with = "klein", required_unless_present = "klein")]
        file: Option<PathBuf>,
        /// A Klein-bottle class: id, u, v or vu.
        #[arg(long)]
        klein: Option<String>,
        /// Warn if the class does not preserve this form.
        #[arg(long)]
        form: Option<PathBuf>,
    },
    /// List the orthogonal group of a form (dim <= 6).
    EnumerateGroup {
        #[arg(long)]
        form: PathBuf,
    },
    /// The universal order-one value of an event log.
    F1u {
        #[arg(long)]
        events: PathBuf,
    },
    /// The universal order-n invariant of an event log.
    Universal {
        #[arg(long)]
        events: PathBuf,
        #[arg(long)]
        degree: u32,
    },
    /// The cyclic decomposition of M_n.
    MStructure { n: u32 },
    /// Count E_n(G) by enumeration.
    EnCount {
        /// Cyclic factors, e.g. "2,4".
        #[arg(long)]
        group: String,
        #[arg(long)]
        degree: u32,
    },
    /// Check the codimension-two relations on an assignment of the eight
    /// symbols (default: the universal assignment).
    RelationsCheck {
        #[arg(long)]
        assignment: Option<PathBuf>,
    },
    /// The four mapping classes of the Klein bottle.
    KleinCatalog,
}

enum Failure {
    /// Bad files or arguments.
    Input(String),
    Domain(nonorientable::Error),
}

impl From<nonorientable::Error> for Failure {
    fn from(e: nonorientable::Error) -> Self {
        Failure::Domain(e)
    }
}

type Output = Result<(String, serde_json::Value), Failure>;

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_form(path: &Path) -> Result<HForm, Failure> {
    let g: HForm = read_json(path)?;
    g.validate().map_err(nonorientable::Error::InvalidForm)?;
    Ok(g)
}

fn to_value<T: Serialize>(x: &T) -> serde_json::Value {
    serde_json::to_value(x).expect("library types serialize")
}

fn lines<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

fn letter_text(l: &Transvection) -> String {
    match l {
        Transvection::T { a } => format!("T a={a:?}"),
        Transvection::S { a, b } => format!("S a={a:?} b={b:?}"),
    }
}

fn word_text(w: &GeneratorWord) -> String {
    if w.is_empty() {
        "empty word (identity)".to_string()
    } else {
        lines(w.letters.iter().map(letter_text))
    }
}

fn matrix_rows(m: &Gf2Matrix) -> String {
    format!("{:?}", m.to_rows())
}

fn run(cli: &Cli) -> Output {
    match &cli.command {
        Command::ValidateForm { form } => {
            let g = read_form(form)?;
            Ok((
                format!("valid H-form of dim {}", g.dim()),
                json!({"valid": true, "dim": g.dim()}),
            ))
        }
        Command::Orthonormalize { form } => {
            let frame = read_form(form)?.orthonormalize()?;
            let text = lines(
                frame
                    .vectors
                    .iter()
                    .zip(&frame.values)
                    .enumerate()
                    .map(|(i, (e, d))| format!("e{} = {e:?}  g = {d}", i + 1)),
            );
            Ok((
                text,
                json!({"vectors": to_value(&frame.vectors), "values": to_value(&frame.values)}),
            ))
        }
        Command::Decompose { form, matrix } => {
            let g = read_form(form)?;
            let m: Gf2Matrix = read_json(matrix)?;
            let w = decompose(&g, &m)?;
            Ok((word_text(&w), to_value(&w)))
        }
        Command::RewriteSFree { form, word, matrix } => {
            let g = read_form(form)?;
            let w = match (word, matrix) {
                (Some(path), _) => read_json(path)?,
                (None, Some(path)) => decompose(&g, &read_json(path)?)?,
                (None, None) => unreachable!("clap requires one of --word, --matrix"),
            };
            let out = rewrite_s_free(&g, &w)?;
            Ok((word_text(&out), to_value(&out)))
        }
        Command::Psi { matrix } => {
            let m: Gf2Matrix = read_json(matrix)?;
            if !m.is_square() {
                return Err(nonorientable::Error::DimensionMismatch(format!(
                    "psi needs a square matrix, got {}x{}",
                    m.rows(),
                    m.cols()
                ))
                .into());
            }
            let v = psi(&m);
            Ok((format!("ψ = {v}"), json!({"psi": v})))
        }
        Command::Omega { file, klein, form } => {
            let h: MappingClassData = match (file, klein) {
                (Some(path), _) => read_json(path)?,
                (None, Some(name)) => klein_bottle(name).ok_or_else(|| {
                    Failure::Input(format!(
                        "unknown Klein-bottle class {name:?}; expected id, u, v or vu"
                    ))
                })?,
                (None, None) => unreachable!("clap requires one of --file, --klein"),
            };
            if let Some(path) = form {
                let g = read_form(path)?;
                if !is_in_ng(&g, &h)? {
                    eprintln!("warning: the class does not preserve the form, so it is not in N_g");
                }
            }
            let v = omega(&h)?;
            Ok((format!("Ω = {v}"), json!({"omega": v})))
        }
        Command::EnumerateGroup { form } => {
            let group = read_form(form)?.enumerate_group()?;
            let mut text = format!("|O(E,g)| = {}", group.len());
            for m in &group {
                text.push('\n');
                text.push_str(&matrix_rows(m));
            }
            Ok((text, to_value(&group)))
        }
        Command::F1u { events } => {
            let log: EventLog = read_json(events)?;
            let v = f1u(&log.events);
            Ok((v.to_string(), to_value(&v)))
        }
        Command::Universal { events, degree } => {
            let log: EventLog = read_json(events)?;
            let x = universal_invariant(&log.events, *degree);
            Ok((x.to_string(), to_value(&x)))
        }
        Command::MStructure { n } => {
            let s = m_structure(*n)?;
            Ok((s.to_string(), to_value(&s)))
        }
        Command::EnCount { group, degree } => {
            let g: FinAbGroup = group
                .parse()
                .map_err(|e: nonorientable::Error| Failure::Input(e.to_string()))?;
            let count = count_en(&g, *degree)?;
            Ok((
                format!("|E_{degree}({g})| = {count}"),
                json!({"group": to_value(&g), "degree": degree, "count": count}),
            ))
        }
        Command::RelationsCheck { assignment } => {
            let a = match assignment {
                Some(path) => read_json(path)?,
                None => C1Assignment::universal(),
            };
            let holds = codim2_relations_check(&a);
            let text = if holds {
                "relations hold"
            } else {
                "relations violated"
            };
            Ok((text.to_string(), json!({"holds": holds})))
        }
        Command::KleinCatalog => {
            let cat = klein_bottle_catalog();
            let text = lines(cat.iter().map(|e| {
                let q = e
                    .data
                    .h_starstar()
                    .map(|q| q.get(0, 0).to_string())
                    .unwrap_or_default();
                format!(
                    "{:<3} h_* = {}  h_** = [[{q}]]  Ω = {}",
                    e.name,
                    matrix_rows(e.data.h_star()),
                    e.omega
                )
            }));
            Ok((text, to_value(&cat)))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, value)) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string(&value).expect("values serialize")
                );
            } else {
                println!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(failure) => {
            let (code, message, detail) = match &failure {
                Failure::Input(m) => (2, m.clone(), serde_json::Value::Null),
                Failure::Domain(e) => {
                    let detail = match e {
                        nonorientable::Error::InvalidForm(v) => to_value(v),
                        _ => serde_json::Value::Null,
                    };
                    (1, e.to_string(), detail)
                }
            };
            if cli.json {
                eprintln!("{}", json!({"error": message, "detail": detail}));
            } else {
                eprintln!("error: {message}");
            }
            ExitCode::from(code)
        }
    }
}
