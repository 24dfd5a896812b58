use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use twelverep::error::{Error, Result};
use twelverep::graph::{LabeledGraph, Labeling};
use twelverep::io::{model_from_json, model_to_json, parse_graph, parse_grid, parse_word};
use twelverep::models::{
    icb_to_representant, ordering_to_icb_model, ordering_to_triangle_model, triangle_to_representant, validate_icb,
    validate_triangle, ModelCheck,
};
use twelverep::oracle::{cross_validate, Corpus, CorpusClass};
use twelverep::patterns::{find_pattern_free_ordering, PatternFamily};
use twelverep::recognition::{
    grid_12_representable, is_12_representable, is_12_representable_bipartite, tree_12_representable, Decision, Model,
};
use twelverep::word::{find_u_match, u_represents, PatternWord, Verdict};

#[derive(Parser)]
#[command(name = "twelverep", version, about = "Decide and certify 12-representability of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    I3j4q4,
    J4q4,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Small,
    Bipartite,
    Trees,
    Grid,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether a word u-represents a labeled graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        word: PathBuf,
        #[arg(long, default_value = "12")]
        u: PatternWord,
    },
    /// Print the 1-based position of the first u-match of a word.
    Match {
        #[arg(long)]
        word: PathBuf,
        #[arg(long, default_value = "12")]
        u: PatternWord,
    },
    /// Search a labeling avoiding a forbidden pattern family.
    LabelSearch {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Also require every edge to have its X endpoint first.
        #[arg(long)]
        x_first: bool,
    },
    /// Validate a model against the graph it should describe.
    ModelCheck {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        model: PathBuf,
    },
    /// Read the labeling and word off a model.
    Convert {
        #[arg(long)]
        model: PathBuf,
    },
    /// Build a model from a vertex ordering: a triangle model of the
    /// complement, or with --bipartite a containment model of the graph.
    BuildModel {
        #[arg(long)]
        graph: PathBuf,
        /// Vertices (1-based) listed in order.
        #[arg(long)]
        ordering: String,
        #[arg(long)]
        bipartite: bool,
    },
    /// Decide 12-representability. With --grid the input is a point list.
    #[command(group(ArgGroup::new("class").args(["bipartite", "grid", "tree"])))]
    Recognize {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        bipartite: bool,
        #[arg(long)]
        grid: bool,
        #[arg(long)]
        tree: bool,
        #[arg(long)]
        emit_model: Option<PathBuf>,
    },
    /// Cross-validate the deciders against brute force on a corpus.
    Oracle {
        #[arg(long, value_enum)]
        suite: Suite,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn check_line(check: ModelCheck) -> (String, bool) {
    match check {
        ModelCheck::Valid => ("VALID".to_string(), true),
        ModelCheck::Mismatch { u, v } => (format!("MISMATCH {} {}", u + 1, v + 1), false),
    }
}

fn parse_ordering(text: &str, n: usize) -> Result<Labeling> {
    let order = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<usize>() {
            Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
            _ => Err(Error::Parse { line: 1, msg: format!("bad vertex {t:?} in ordering") }),
        })
        .collect::<Result<Vec<_>>>()?;
    Labeling::from_order(&order)
}

fn print_decision(d: &Decision, emit: Option<&Path>) -> Result<bool> {
    if let Some(cert) = &d.certificate {
        println!("YES");
        println!("labeling: {}", cert.labeling.to_pairs_string());
        println!("word: {}", cert.word);
        if let Some(path) = emit {
            fs::write(path, model_to_json(&cert.model) + "\n")
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        }
        Ok(true)
    } else {
        println!("NO");
        if let Some(w) = &d.witness {
            println!("witness: {w}");
        }
        Ok(false)
    }
}

fn run(cmd: Command) -> Result<bool> {
    match cmd {
        Command::Verify { graph, word, u } => {
            let lg = parse_graph(&read(&graph)?)?;
            let w = parse_word(&read(&word)?)?;
            match u_represents(&w, &lg, &u)? {
                Verdict::Represents => {
                    println!("YES");
                    Ok(true)
                }
                Verdict::Violation { x, y, adjacent } => {
                    let why = if adjacent {
                        "adjacent but the restriction has a match"
                    } else {
                        "non-adjacent but the restriction has no match"
                    };
                    println!("NO {x} {y} ({why})");
                    Ok(false)
                }
            }
        }
        Command::Match { word, u } => {
            let w = parse_word(&read(&word)?)?;
            match find_u_match(&w, &u) {
                Some(i) => {
                    println!("{}", i + 1);
                    Ok(true)
                }
                None => {
                    println!("NONE");
                    Ok(false)
                }
            }
        }
        Command::LabelSearch { graph, family, x_first } => {
            let lg = parse_graph(&read(&graph)?)?;
            let g = lg.graph();
            let fam = match family {
                FamilyArg::I3j4q4 => PatternFamily::i3_j4_q4(),
                FamilyArg::J4q4 => PatternFamily::j4_q4(),
            };
            let bp = if x_first { Some(g.bipartition().ok_or(Error::NotBipartite)?) } else { None };
            match find_pattern_free_ordering(g, &fam, bp.as_ref(), x_first)? {
                Some(l) => {
                    println!("{}", l.to_pairs_string());
                    Ok(true)
                }
                None => {
                    println!("NONE");
                    Ok(false)
                }
            }
        }
        Command::ModelCheck { graph, model } => {
            let lg = parse_graph(&read(&graph)?)?;
            let check = match model_from_json(&read(&model)?)? {
                Model::Interval(m) => validate_icb(lg.graph(), &m)?,
                Model::Triangle(m) => validate_triangle(lg.graph(), &m)?,
            };
            let (line, ok) = check_line(check);
            println!("{line}");
            Ok(ok)
        }
        Command::Convert { model } => {
            let (labeling, word) = match model_from_json(&read(&model)?)? {
                Model::Interval(m) => icb_to_representant(&m)?,
                Model::Triangle(m) => triangle_to_representant(&m)?,
            };
            println!("labeling: {}", labeling.to_pairs_string());
            println!("word: {word}");
            Ok(true)
        }
        Command::BuildModel { graph, ordering, bipartite } => {
            let lg = parse_graph(&read(&graph)?)?;
            let g = lg.graph();
            let sigma = parse_ordering(&ordering, g.n())?;
            let model = if bipartite {
                let bp = g.bipartition().ok_or(Error::NotBipartite)?;
                Model::Interval(ordering_to_icb_model(g, &bp, &sigma)?)
            } else {
                Model::Triangle(ordering_to_triangle_model(g, &sigma)?)
            };
            println!("{}", model_to_json(&model));
            Ok(true)
        }
        Command::Recognize { graph, bipartite, grid, tree, emit_model } => {
            let text = read(&graph)?;
            let d = if grid {
                grid_12_representable(&parse_grid(&text)?)?
            } else {
                let g = parse_graph(&text)?.graph().clone();
                if bipartite {
                    is_12_representable_bipartite(&g)?
                } else if tree {
                    tree_12_representable(&g)?
                } else {
                    is_12_representable(&g)?
                }
            };
            if let Some(cert) = &d.certificate {
                // Deciders verify their words already; repeat it on the exact output.
                let g = match &cert.model {
                    Model::Interval(m) => m.implied_graph(),
                    Model::Triangle(m) => m.implied_graph().complement(),
                };
                let lg = LabeledGraph::new(g, cert.labeling.clone())?;
                if !u_represents(&cert.word, &lg, &PatternWord::twelve())?.holds() {
                    return Err(Error::CertificateRejected("word failed re-verification".into()));
                }
            }
            print_decision(&d, emit_model.as_deref())
        }
        Command::Oracle { suite } => {
            let corpus = match suite {
                Suite::Small => Corpus { max_n: 5, class: CorpusClass::All },
                Suite::Bipartite => Corpus { max_n: 6, class: CorpusClass::Bipartite },
                Suite::Trees => Corpus { max_n: 9, class: CorpusClass::Tree },
                Suite::Grid => Corpus { max_n: 0, class: CorpusClass::GridSubset { rows: 3, cols: 4 } },
            };
            let report = cross_validate(&corpus);
            print!("{report}");
            Ok(report.is_clean())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
