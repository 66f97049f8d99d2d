use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use artin_core::dihedral::{self, DihedralError, DihedralWord};
use artin_core::graph::{big_chunks, parse_graph, GraphError, Retraction};
use artin_core::invariants::{aut_acylindrically_hyperbolic, compare, profile, CompareVerdict};
use artin_core::jsj::{build_jsj, collapse_jsj, dihedral_jsj, to_dot, GraphOfGroups, JsjError};
use artin_core::presentation::{abelianize, artin_presentation, gog_presentation};
use artin_core::split::{splits_over_cyclic, SplitKind};
use artin_core::{LabelledGraph, Word};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

/// Splittings, JSJ decompositions and isomorphism invariants of Artin groups.
#[derive(Debug, Parser)]
#[command(name = "artin", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; `dot` applies to `jsj` and `dihedral-jsj` only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Same as `--format json`.
    #[arg(long, global = true)]
    json: bool,

    /// Write the output to PATH instead of stdout.
    #[arg(short, long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that FILE is a well-formed artin-graph file.
    Validate { file: PathBuf },
    /// Big chunks, separating vertices and chunk classes.
    Chunks { file: PathBuf },
    /// Whether the Artin group splits over a cyclic subgroup.
    Split { file: PathBuf },
    /// The JSJ decomposition over cyclic subgroups.
    Jsj {
        file: PathBuf,
        /// Collapse loops and red vertices.
        #[arg(long)]
        collapsed: bool,
        /// Also write a Graphviz rendering to PATH.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// JSJ decomposition and presentation of the dihedral Artin group with label N.
    DihedralJsj { n: u32 },
    /// Abelianization of the Artin group.
    Abelianize {
        file: PathBuf,
        /// Compute it from the presentation of the JSJ graph of groups.
        #[arg(long)]
        of_jsj: bool,
    },
    /// Isomorphism invariants.
    Profile { file: PathBuf },
    /// Compare the invariants of two graphs; always prints JSON.
    Compare { file1: PathBuf, file2: PathBuf },
    /// Normal form of a word in the dihedral Artin group with label N.
    DihedralNf { n: u32, word: String },
    /// Whether two words are equal in the dihedral Artin group with label N.
    DihedralEq { n: u32, w1: String, w2: String },
    /// Image of WORD under the retraction onto big chunk CHUNK_INDEX.
    Retract { file: PathBuf, chunk_index: usize, word: String },
    /// Search for roots of degree above N/2 of primitive elements of <a, z>.
    RootSearch { n: u32, l: usize, k: u32 },
    /// Whether a separating vertex makes Aut(A) acylindrically hyperbolic.
    Acylindricity { file: PathBuf },
    /// Convert a JSON graph to an artin-graph file.
    ToGraph { file: PathBuf },
}

#[derive(Debug)]
enum Failure {
    /// Unreadable or malformed input.
    Input(String),
    /// Well-formed input outside the domain of the command.
    Precondition(String),
    Usage(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Precondition(_) => 2,
            Failure::Usage(_) => 64,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Precondition(m) | Failure::Usage(m) => m,
        }
    }
}

fn input(e: impl std::fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

fn precondition(e: impl std::fmt::Display) -> Failure {
    Failure::Precondition(e.to_string())
}

fn graph_failure(e: GraphError) -> Failure {
    match e {
        GraphError::UnknownGenerator(_) | GraphError::AtLine { .. } | GraphError::Syntax(_) => input(e),
        _ => precondition(e),
    }
}

fn jsj_failure(e: JsjError) -> Failure {
    match e {
        JsjError::Graph(g) => graph_failure(g),
        other => precondition(other),
    }
}

fn dihedral_failure(e: DihedralError) -> Failure {
    match e {
        DihedralError::WrongParity(..) => precondition(e),
        other => input(other),
    }
}

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<LabelledGraph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn to_json(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output types serialize");
    s.push('\n');
    s
}

/// The JSJ decomposition, routing single edges to the dihedral splittings.
fn jsj_of(g: &LabelledGraph) -> Result<GraphOfGroups, Failure> {
    if g.vertex_count() == 2 && g.is_connected() {
        let label = g.edges()[0].label;
        return dihedral_jsj(label).map_err(jsj_failure);
    }
    build_jsj(g).map_err(jsj_failure)
}

fn dihedral_word(n: u32, text: &str) -> Result<DihedralWord, Failure> {
    DihedralWord::parse(n, text).map_err(dihedral_failure)
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let format = if cli.json { Format::Json } else { cli.format };
    let dot_allowed = matches!(cli.command, Command::Jsj { .. } | Command::DihedralJsj { .. });
    if format == Format::Dot && !dot_allowed {
        return Err(Failure::Usage("--format dot is only available for jsj and dihedral-jsj".into()));
    }
    let json = format == Format::Json;

    let out = match &cli.command {
        Command::Validate { file } => {
            let g = load_graph(file)?;
            let connected = g.is_connected();
            if json {
                to_json(&json!({
                    "valid": true,
                    "vertices": g.vertex_count(),
                    "edges": g.edge_count(),
                    "connected": connected,
                }))
            } else {
                let shape = if connected { "connected" } else { "disconnected" };
                format!("valid: {} vertices, {} edges, {shape}\n", g.vertex_count(), g.edge_count())
            }
        }
        Command::Chunks { file } => {
            let g = load_graph(file)?;
            let report = big_chunks(&g).map_err(graph_failure)?.report(&g);
            if json {
                to_json(&report)
            } else {
                let mut s = String::new();
                for (i, (c, class)) in report.chunks.iter().zip(&report.classes).enumerate() {
                    writeln!(s, "chunk {i}: {} ({class})", c.join(" ")).unwrap();
                }
                writeln!(s, "separating: {}", report.separating.join(" ")).unwrap();
                s
            }
        }
        Command::Split { file } => {
            let g = load_graph(file)?;
            let verdict = splits_over_cyclic(&g).map_err(graph_failure)?;
            if json {
                to_json(&verdict)
            } else {
                let mut s = format!("verdict: {}\n", verdict.kind.tag());
                let names = |vs: &[artin_core::VertexId]| vs.iter().map(|v| v.as_str()).collect::<Vec<_>>().join(" ");
                match &verdict.kind {
                    SplitKind::VisualSplit { vertex, left, right } => {
                        writeln!(s, "vertex: {vertex}\nleft: {}\nright: {}", names(left), names(right)).unwrap();
                    }
                    SplitKind::DihedralSplit { label } => writeln!(s, "label: {label}").unwrap(),
                    SplitKind::FreeProductSplit { components } => {
                        for c in components {
                            writeln!(s, "component: {}", names(c)).unwrap();
                        }
                    }
                    _ => {}
                }
                writeln!(s, "ends: {:?}", verdict.ends).unwrap();
                s
            }
        }
        Command::Jsj { file, collapsed, dot } => {
            let g = load_graph(file)?;
            let mut j = jsj_of(&g)?;
            if *collapsed {
                j = collapse_jsj(&j);
            }
            if let Some(path) = dot {
                fs::write(path, to_dot(&j)).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            }
            match format {
                Format::Json => to_json(&j),
                Format::Dot => to_dot(&j),
                Format::Text => j.to_string(),
            }
        }
        Command::DihedralJsj { n } => {
            let j = dihedral_jsj(*n).map_err(jsj_failure)?;
            let p = gog_presentation(&j).map_err(precondition)?;
            match format {
                Format::Json => to_json(&json!({ "jsj": j, "presentation": p })),
                Format::Dot => to_dot(&j),
                Format::Text => format!("{j}{p}"),
            }
        }
        Command::Abelianize { file, of_jsj } => {
            let g = load_graph(file)?;
            let p =
                if *of_jsj { gog_presentation(&jsj_of(&g)?).map_err(precondition)? } else { artin_presentation(&g) };
            let shape = abelianize(&p);
            if json {
                to_json(&shape)
            } else {
                format!("{shape}\n")
            }
        }
        Command::Profile { file } => {
            let g = load_graph(file)?;
            let p = profile(&g).map_err(jsj_failure)?;
            if json {
                to_json(&p)
            } else {
                let list = |xs: &[u32]| xs.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
                let mut s = String::new();
                writeln!(s, "chunk_count: {}", p.chunk_count).unwrap();
                writeln!(s, "toral_leaf_count: {}", p.toral_leaf_count).unwrap();
                writeln!(s, "braided_leaf_labels: {}", list(&p.braided_leaf_labels)).unwrap();
                writeln!(s, "label2_nonleaf_edge_count: {}", p.label2_nonleaf_edge_count).unwrap();
                writeln!(s, "bigbig_canonical_forms: {}", p.bigbig_canonical_forms.join(" ")).unwrap();
                writeln!(s, "odd_leaf_labels: {}", list(&p.odd_leaf_labels)).unwrap();
                writeln!(s, "abelianization: {}", p.abelianization).unwrap();
                writeln!(s, "betti: {}", p.betti).unwrap();
                s.lines().map(|l| format!("{}\n", l.trim_end())).collect()
            }
        }
        Command::Compare { file1, file2 } => {
            let p = profile(&load_graph(file1)?).map_err(jsj_failure)?;
            let q = profile(&load_graph(file2)?).map_err(jsj_failure)?;
            let verdict: CompareVerdict = compare(&p, &q);
            to_json(&verdict)
        }
        Command::DihedralNf { n, word } => {
            let nf = dihedral::normal_form(&dihedral_word(*n, word)?);
            if json {
                to_json(&nf)
            } else {
                format!("{nf}\n")
            }
        }
        Command::DihedralEq { n, w1, w2 } => {
            let (u, v) = (dihedral_word(*n, w1)?, dihedral_word(*n, w2)?);
            let equal = dihedral::words_equal(&u, &v).map_err(dihedral_failure)?;
            if json {
                to_json(&json!({
                    "equal": equal,
                    "left": dihedral::normal_form(&u),
                    "right": dihedral::normal_form(&v),
                }))
            } else {
                format!("{equal}\n")
            }
        }
        Command::Retract { file, chunk_index, word } => {
            let g = load_graph(file)?;
            let w = Word::parse(word).map_err(input)?;
            let d = big_chunks(&g).map_err(graph_failure)?;
            let chunk = d.chunks.get(*chunk_index).ok_or_else(|| {
                Failure::Input(format!("chunk index {chunk_index} out of range ({} chunks)", d.chunks.len()))
            })?;
            let image = Retraction::new(&g, chunk).and_then(|r| r.apply(&g, &w)).map_err(graph_failure)?;
            if json {
                to_json(&json!({ "chunk": chunk.names(&g), "word": image }))
            } else if image.is_empty() {
                "1\n".to_string()
            } else {
                format!("{image}\n")
            }
        }
        Command::RootSearch { n, l, k } => {
            let report = dihedral::root_bound_search(*n, *l, *k).map_err(dihedral_failure)?;
            if json {
                to_json(&report)
            } else {
                let mut s = String::new();
                let m = n / 2;
                writeln!(s, "label {n}: words of length at most {l}, degrees {}..={k}", m + 1).unwrap();
                writeln!(s, "words: {}, distinct elements: {}", report.words_enumerated, report.distinct_elements)
                    .unwrap();
                if report.counterexamples.is_empty() {
                    writeln!(s, "counterexamples: none").unwrap();
                }
                for c in &report.counterexamples {
                    writeln!(s, "counterexample: ({})^{} = a^{} z^{}", c.word, c.degree, c.power.0, c.power.1).unwrap();
                }
                let w = &report.witness;
                match w.power {
                    Some((i, j)) => {
                        let kind = if w.primitive { "primitive" } else { "not primitive" };
                        writeln!(s, "witness: ({})^{} = a^{i} z^{j}, {kind}", w.word, w.degree).unwrap();
                    }
                    None => writeln!(s, "witness: ({})^{} is not in <a, z>", w.word, w.degree).unwrap(),
                }
                s
            }
        }
        Command::Acylindricity { file } => {
            let g = load_graph(file)?;
            let v = aut_acylindrically_hyperbolic(&g).map_err(jsj_failure)?;
            if json {
                to_json(&v)
            } else {
                format!("{}: {} ({})\n", v.acylindrically_hyperbolic, v.reason, v.assumption)
            }
        }
        Command::ToGraph { file } => {
            let text =
                String::from_utf8(read(file)?).map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
            let g = LabelledGraph::from_json(&text).map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
            g.to_artin_text()
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = run(&cli).and_then(|out| match &cli.output {
        Some(path) => fs::write(path, out).map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => std::io::stdout().write_all(out.as_bytes()).map_err(input),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
