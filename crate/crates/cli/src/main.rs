use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mwkit_core::io::graph_to_json;
use mwkit_core::{
    bridge_length, check_diversity, check_graphlike, check_leaf_treelike, check_treelike, family_of, four_point_check,
    gen, l_set, multiweight_graph, parse_family, parse_graph, quartet_classes, quartet_split, realize_graph,
    realize_leaf_tree, realize_tree, to_dot, write_family, write_graph, Error, InstanceKind, MultiweightFamily,
    QuartetSplit, SubsetKey, Verdict, WeightedGraph,
};

const DEFAULT_CAP: usize = 16;

#[derive(Parser)]
#[command(name = "mwkit", version, about = "Multiweights of weighted graphs and trees")]
struct Cli {
    /// Largest number of labelled vertices accepted.
    #[arg(long, global = true, env = "MWKIT_CAP", default_value_t = DEFAULT_CAP)]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a family is realizable; prints a verdict.
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        family: PathBuf,
    },
    /// Build a graph or tree realizing a family.
    Realize {
        #[arg(value_enum)]
        kind: RealizeKind,
        family: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Full multiweight family of a graph.
    Multiweights {
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Steiner weight of one subset, with a lightest tree.
    Steiner {
        graph: PathBuf,
        #[arg(long)]
        subset: SubsetKey,
    },
    /// Topology of every quartet.
    Quartets { family: PathBuf },
    /// The two L-sets of a quartet.
    Lsets {
        family: PathBuf,
        #[arg(long, value_parser = parse_quad)]
        quad: [usize; 4],
    },
    /// Quartet classes with their bridge lengths.
    Qclasses {
        family: PathBuf,
        /// Also report `q(S)` for this subset.
        #[arg(long)]
        subset: Option<SubsetKey>,
    },
    /// Random instance as a graph file.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Numerator range over 16, as `lo..hi` (inclusive).
        #[arg(long, default_value = "1..64", value_parser = parse_range)]
        weight_range: (i128, i128),
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Graph,
    Tree,
    LeafTree,
    Diversity,
}

#[derive(Clone, Copy, ValueEnum)]
enum RealizeKind {
    Graph,
    Tree,
    LeafTree,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Graph,
    Tree,
    LeafTree,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
}

fn parse_quad(s: &str) -> Result<[usize; 4], String> {
    let parts: Vec<usize> =
        s.split(',').map(|p| p.trim().parse::<usize>().map_err(|e| format!("{p:?}: {e}"))).collect::<Result<_, _>>()?;
    parts.try_into().map_err(|v: Vec<usize>| format!("expected 4 labels, got {}", v.len()))
}

fn parse_range(s: &str) -> Result<(i128, i128), String> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| format!("expected lo..hi, got {s:?}"))?;
    let lo = lo.trim().parse().map_err(|e| format!("{lo:?}: {e}"))?;
    let hi = hi.trim_start_matches('=').trim().parse().map_err(|e| format!("{hi:?}: {e}"))?;
    Ok((lo, hi))
}

/// What a command produced: accepted output, or a rejection with its verdict.
enum Outcome {
    Done,
    Rejected,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Rejected) => ExitCode::from(1),
        Err(e) => {
            eprintln!("mwkit: {e}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Syntax(format!("{}: {e}", path.display())))
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Error> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Error::Syntax(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn within_cap(n: usize, cap: usize) -> Result<(), Error> {
    if n > cap {
        return Err(Error::TooLarge { what: "input", size: n, limit: cap });
    }
    Ok(())
}

fn load_family(path: &Path, cap: usize) -> Result<MultiweightFamily, Error> {
    let f = parse_family(&read(path)?)?;
    within_cap(f.n(), cap)?;
    Ok(f)
}

fn load_graph(path: &Path, cap: usize) -> Result<WeightedGraph, Error> {
    let g = parse_graph(&read(path)?)?;
    within_cap(g.n(), cap)?;
    Ok(g)
}

fn verdict_outcome(v: &Verdict) -> Outcome {
    print!("{}", v.to_json());
    if v.accepted {
        Outcome::Done
    } else {
        Outcome::Rejected
    }
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let cap = cli.cap;
    match cli.command {
        Command::Check { kind, family } => {
            let f = load_family(&family, cap)?;
            let v = match kind {
                CheckKind::Graph => check_graphlike(&f)?,
                CheckKind::Tree => check_treelike(&f)?,
                CheckKind::LeafTree => check_leaf_treelike(&f)?,
                CheckKind::Diversity => check_diversity(&f)?,
            };
            Ok(verdict_outcome(&v))
        }
        Command::Realize { kind, family, output, format } => {
            let f = load_family(&family, cap)?;
            let built = match kind {
                RealizeKind::Graph => realize_graph(&f),
                RealizeKind::Tree => realize_tree(&f).map(|t| t.into_graph()),
                RealizeKind::LeafTree => realize_leaf_tree(&f.pairs()?).map(|t| t.into_graph()),
            };
            let g = match built {
                Ok(g) => g,
                Err(Error::NotGraphlike(v) | Error::NotTreeRealizable(v) | Error::NotFourPoint(v)) => {
                    return Ok(verdict_outcome(&v));
                }
                Err(e) => return Err(e),
            };
            let text = match format {
                Format::Dot => to_dot(&g, None),
                Format::Json => write_graph(&g),
            };
            emit(&text, output.as_deref())?;
            Ok(Outcome::Done)
        }
        Command::Multiweights { graph, output } => {
            let g = load_graph(&graph, cap)?;
            emit(&write_family(&family_of(&g)?), output.as_deref())?;
            Ok(Outcome::Done)
        }
        Command::Steiner { graph, subset } => {
            let g = load_graph(&graph, cap)?;
            let r = multiweight_graph(&g, subset)?;
            let out = json!({
                "subset": subset.to_string(),
                "value": r.value.to_string(),
                "tree": graph_to_json(&r.realizer),
            });
            print!("{}", pretty(&out));
            Ok(Outcome::Done)
        }
        Command::Quartets { family } => {
            let p = load_family(&family, cap)?.pairs()?;
            let v = four_point_check(&p);
            if !v.accepted {
                return Ok(verdict_outcome(&v));
            }
            let mut rows = Vec::new();
            for quad in SubsetKey::of_size(p.n(), 4) {
                let q: [usize; 4] = quad.to_vec().try_into().expect("four labels");
                let split = match quartet_split(&p, q)? {
                    QuartetSplit::Split { pairs } => json!(pairs),
                    QuartetSplit::Degenerate => json!("degenerate"),
                };
                rows.push(json!({ "quartet": q, "split": split }));
            }
            print!("{}", pretty(&Value::Array(rows)));
            Ok(Outcome::Done)
        }
        Command::Lsets { family, quad } => {
            let p = load_family(&family, cap)?.pairs()?;
            let [a, b, c, d] = quad;
            let split = match quartet_split(&p, quad) {
                Ok(QuartetSplit::Split { pairs }) => json!(pairs),
                Ok(QuartetSplit::Degenerate) => json!("degenerate"),
                Err(Error::NotTreelike { .. }) => json!("none"),
                Err(e) => return Err(e),
            };
            let out = json!({
                "quad": quad,
                "split": split,
                "lsets": [l_set(&p, quad)?.to_string(), l_set(&p, [c, d, a, b])?.to_string()],
                "bridge_length": bridge_length(&p, quad).to_string(),
            });
            print!("{}", pretty(&out));
            Ok(Outcome::Done)
        }
        Command::Qclasses { family, subset } => {
            let p = load_family(&family, cap)?.pairs()?;
            let classes = match quartet_classes(&p) {
                Ok(c) => c,
                Err(e @ Error::InconsistentClass { .. }) => {
                    eprintln!("mwkit: {e}");
                    return Ok(Outcome::Rejected);
                }
                Err(e) => return Err(e),
            };
            let rows: Vec<Value> = classes
                .iter()
                .map(|c| {
                    let mut row = json!({
                        "lsets": [c.lsets.0.to_string(), c.lsets.1.to_string()],
                        "bridge_length": c.bridge_length.to_string(),
                        "representatives": c.representatives,
                    });
                    if let Some(s) = subset {
                        row["q"] = json!(c.q(s));
                    }
                    row
                })
                .collect();
            print!("{}", pretty(&Value::Array(rows)));
            Ok(Outcome::Done)
        }
        Command::Gen { kind, n, seed, weight_range, output } => {
            within_cap(n, cap)?;
            let kind = match kind {
                GenKind::Graph => InstanceKind::Graph,
                GenKind::Tree => InstanceKind::Tree,
                GenKind::LeafTree => InstanceKind::LeafTree,
            };
            let g = gen(kind, n, seed, weight_range.0..=weight_range.1)?;
            emit(&write_graph(&g), output.as_deref())?;
            Ok(Outcome::Done)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..64"), Ok((1, 64)));
        assert_eq!(parse_range("2..=5"), Ok((2, 5)));
        assert!(parse_range("7").is_err());
    }

    #[test]
    fn quads() {
        assert_eq!(parse_quad("1,9,4,7"), Ok([1, 9, 4, 7]));
        assert!(parse_quad("1,2,3").is_err());
    }

    #[test]
    fn flags_parse() {
        Cli::try_parse_from(["mwkit", "steiner", "g.json", "--subset", "1,3"]).unwrap();
        Cli::try_parse_from(["mwkit", "--cap", "20", "gen", "leaf-tree", "--n", "5"]).unwrap();
        assert!(Cli::try_parse_from(["mwkit", "check", "forest", "f.json"]).is_err());
    }
}
