//! `morsec` — build Morse complexes of simplicial complexes, compute
//! automorphism groups, and verify the symmetry classification.
//!
//! Complexes are read from a file (or stdin with `-`) either as JSON
//! (`{"vertices": [...], "facets": [...]}`) or as facet text (one facet of
//! whitespace-separated vertex labels per line, `#` comments). Exit codes:
//! 0 success, 1 input or budget errors, 2 verification found a failing
//! check.

use std::fmt::Write as _;
use std::io::Read;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use morse_complex::autgroup::{complex_automorphisms, graph_automorphisms, DEFAULT_SEARCH_BUDGET};
use morse_complex::complex::{
    generate_boundary_simplex, generate_cycle, generate_path, generate_simplex,
};
use morse_complex::hasse::build_hasse;
use morse_complex::morse::{build_morse_complex, MorseError, DEFAULT_GVF_BUDGET};
use morse_complex::verify::{verify_main_theorem, VerifyOptions};
use morse_complex::{PermutationGroup, SimplicialComplex};

#[derive(Parser)]
#[command(
    name = "morsec",
    version,
    about = "Morse complexes of simplicial complexes: construction, symmetry groups, and verification"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a member of a named family of complexes.
    Gen {
        family: Family,
        /// Family parameter: cycle/path vertex count, or simplex dimension.
        n: usize,
        #[arg(long, value_enum, default_value_t = GenFormat::Json)]
        format: GenFormat,
    },
    /// Build the Morse complex of the input complex.
    BuildMorse {
        /// Input path, or `-` for stdin.
        input: String,
        /// Bound on the number of gradient fields enumerated.
        #[arg(long, default_value_t = DEFAULT_GVF_BUDGET)]
        budget: usize,
        #[arg(long, value_enum, default_value_t = OutFormat::Table)]
        format: OutFormat,
    },
    /// Compute an automorphism group.
    Aut {
        /// Input path, or `-` for stdin.
        input: String,
        /// Which structure to take automorphisms of.
        #[arg(long, value_enum, default_value_t = Structure::Complex)]
        of: Structure,
        /// Bound on search nodes (and on gradient-field enumeration when
        /// the Morse complex must be built).
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: usize,
        #[arg(long, value_enum, default_value_t = OutFormat::Table)]
        format: OutFormat,
    },
    /// Verify the symmetry classification on the input complex.
    Verify {
        /// Input path, or `-` for stdin.
        input: String,
        /// Represent Aut(M(K)) by transporting Aut(H(K)) instead of
        /// building the Morse complex.
        #[arg(long)]
        via_hasse: bool,
        /// Bound on search nodes and enumerated gradient fields.
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, value_enum, default_value_t = OutFormat::Table)]
        format: OutFormat,
    },
    /// Export a structure in Graphviz DOT form.
    ExportDot {
        /// Input path, or `-` for stdin.
        input: String,
        /// Which structure to export (complex and morse export the
        /// 1-skeleton).
        #[arg(long, value_enum, default_value_t = Structure::Hasse)]
        of: Structure,
        /// Bound on gradient-field enumeration when building the Morse
        /// complex.
        #[arg(long, default_value_t = DEFAULT_GVF_BUDGET)]
        budget: usize,
    },
    /// Normalize any accepted input form to the JSON form.
    ExportJson {
        /// Input path, or `-` for stdin.
        input: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Cycle,
    Path,
    Simplex,
    Boundary,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Structure {
    Complex,
    Hasse,
    Morse,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run() -> Result<ExitCode> {
    match Cli::parse().cmd {
        Cmd::Gen { family, n, format } => {
            let k = match family {
                Family::Cycle => generate_cycle(n),
                Family::Path => generate_path(n),
                Family::Simplex => generate_simplex(n),
                Family::Boundary => generate_boundary_simplex(n),
            }?;
            match format {
                GenFormat::Json => print!("{}", k.to_json_string()),
                GenFormat::Text => print!("{}", k.to_facet_text()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::BuildMorse { input, budget, format } => {
            let k = read_complex(&input)?;
            match build_morse_complex(&k, budget) {
                Ok(m) => {
                    match format {
                        OutFormat::Table => print!("{}", complex_summary(&m)),
                        OutFormat::Json => print!("{}", m.to_json_string()),
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(MorseError::BudgetExceeded { budget }) => {
                    // Report how far the enumeration got, in JSON on stdout
                    // regardless of the requested format, so pipelines can
                    // detect the truncation.
                    let partial = serde_json::json!({
                        "partial": true,
                        "budget": budget,
                        "message": "gradient field enumeration exceeded the budget",
                    });
                    println!("{}", serde_json::to_string_pretty(&partial)?);
                    Ok(ExitCode::from(1))
                }
                Err(other) => Err(other.into()),
            }
        }
        Cmd::Aut { input, of, budget, format } => {
            let k = read_complex(&input)?;
            let group = match of {
                Structure::Complex => complex_automorphisms(&k, budget)?,
                Structure::Hasse => graph_automorphisms(&build_hasse(&k).as_graph(), budget)?,
                Structure::Morse => {
                    let m = build_morse_complex(&k, budget)?;
                    complex_automorphisms(&m, budget)?
                }
            };
            match format {
                OutFormat::Table => print!("{}", group_summary(&group)),
                OutFormat::Json => println!("{}", group_json(&group)?),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { input, via_hasse, budget, format } => {
            let k = read_complex(&input)?;
            let mut opts = VerifyOptions {
                force_via_hasse: via_hasse,
                ..VerifyOptions::default()
            };
            if let Some(b) = budget {
                opts.gvf_budget = b;
                opts.search_budget = b;
            }
            let report = verify_main_theorem(&k, &opts)?;
            match format {
                OutFormat::Table => print!("{}", report.render_table()),
                OutFormat::Json => print!("{}", report.to_json_string()),
            }
            Ok(if report.overall {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Cmd::ExportDot { input, of, budget } => {
            let k = read_complex(&input)?;
            let dot = match of {
                Structure::Complex => skeleton_dot(&k, "complex"),
                Structure::Hasse => build_hasse(&k).to_dot("hasse"),
                Structure::Morse => {
                    let m = build_morse_complex(&k, budget)?;
                    skeleton_dot(&m, "morse")
                }
            };
            print!("{dot}");
            Ok(ExitCode::SUCCESS)
        }
        Cmd::ExportJson { input } => {
            let k = read_complex(&input)?;
            print!("{}", k.to_json_string());
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Reads a complex from a path or stdin (`-`), accepting JSON or facet
/// text.
fn read_complex(input: &str) -> Result<SimplicialComplex> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("reading stdin")?;
        buf
    } else {
        std::fs::read_to_string(input).with_context(|| format!("reading {input}"))?
    };
    let parsed = if text.trim_start().starts_with('{') {
        SimplicialComplex::from_json(&text)
    } else {
        SimplicialComplex::parse_facet_text(&text)
    };
    Ok(parsed?)
}

fn complex_summary(k: &SimplicialComplex) -> String {
    let f: Vec<String> = k.f_vector().iter().map(usize::to_string).collect();
    let mut out = String::new();
    writeln!(out, "vertices: {}", k.num_vertices()).unwrap();
    writeln!(out, "faces: {}", k.num_faces()).unwrap();
    writeln!(out, "f-vector: ({})", f.join(", ")).unwrap();
    out
}

fn group_summary(g: &PermutationGroup) -> String {
    let mut out = String::new();
    writeln!(out, "degree: {}", g.degree()).unwrap();
    writeln!(out, "order: {}", g.order()).unwrap();
    writeln!(out, "generators:").unwrap();
    for p in g.generators() {
        writeln!(out, "  {p}").unwrap();
    }
    out
}

fn group_json(g: &PermutationGroup) -> Result<String> {
    let generators: Vec<&[usize]> = g.generators().iter().map(|p| p.images()).collect();
    let value = serde_json::json!({
        "degree": g.degree(),
        "order": g.order(),
        "generators": generators,
    });
    Ok(serde_json::to_string_pretty(&value)?)
}

/// The 1-skeleton of a complex as DOT, with vertex labels.
fn skeleton_dot(k: &SimplicialComplex, name: &str) -> String {
    let mut graph = morse_complex::graph::Graph::new(k.num_vertices());
    for edge in k.faces_of_dim(1) {
        graph.add_edge(edge.vertices()[0], edge.vertices()[1]);
    }
    graph.to_dot(name, k.labels())
}
