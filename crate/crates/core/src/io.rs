//! JSON file formats for families and graphs, and DOT output.
//!
//! Family file:
//! `{"n": 3, "weights": {"1,2": "3.5", "1,2,3": "7/2"}}`
//!
//! Graph file:
//! `{"n": 2, "extra": ["v1"], "edges": [["1", "v1", "1/2"], ["v1", "2", "3"]]}`
//! with an optional `"weights": "nonnegative"` to admit zero-weight edges.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::de::{MapAccess, Visitor};
use serde::{Deserialize, Deserializer};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::family::MultiweightFamily;
use crate::graph::{validate_graph, RawGraph, WeightMode, WeightedGraph};
use crate::rational::Rational;
use crate::subset::SubsetKey;

/// A number written either as a JSON string (`"7/2"`, `"3.5"`) or a bare JSON number.
#[derive(Deserialize)]
#[serde(untagged)]
enum NumberText {
    Text(String),
    Number(serde_json::Number),
}

impl NumberText {
    fn parse(&self) -> Result<Rational> {
        match self {
            NumberText::Text(s) => s.parse(),
            NumberText::Number(n) => n.to_string().parse(),
        }
    }
}

/// Map entries in file order, duplicates kept so they can be reported.
struct Entries(Vec<(String, NumberText)>);

impl<'de> Deserialize<'de> for Entries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct EntriesVisitor;

        impl<'de> Visitor<'de> for EntriesVisitor {
            type Value = Entries;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object mapping subsets to numbers")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<Entries, A::Error> {
                let mut out = Vec::new();
                while let Some((key, value)) = map.next_entry::<String, NumberText>()? {
                    out.push((key, value));
                }
                Ok(Entries(out))
            }
        }

        deserializer.deserialize_map(EntriesVisitor)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyFile {
    n: usize,
    weights: Entries,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    n: usize,
    #[serde(default)]
    extra: Vec<String>,
    edges: Vec<(String, String, NumberText)>,
    #[serde(default)]
    weights: Option<String>,
}

fn syntax(e: serde_json::Error) -> Error {
    Error::Syntax(e.to_string())
}

pub fn parse_family(text: &str) -> Result<MultiweightFamily> {
    let file: FamilyFile = serde_json::from_str(text).map_err(syntax)?;
    let mut values = BTreeMap::new();
    for (key_text, value) in &file.weights.0 {
        let key: SubsetKey = key_text.parse()?;
        let value = value.parse()?;
        if !value.is_positive() {
            return Err(Error::NonpositiveValue { key: key_text.clone(), value });
        }
        if values.insert(key, value).is_some() {
            return Err(Error::DuplicateKey(key_text.clone()));
        }
    }
    MultiweightFamily::new(file.n, values)
}

pub fn parse_raw_graph(text: &str) -> Result<(RawGraph, WeightMode)> {
    let file: GraphFile = serde_json::from_str(text).map_err(syntax)?;
    let mode = match file.weights.as_deref() {
        None | Some("positive") => WeightMode::Positive,
        Some("nonnegative") => WeightMode::Nonnegative,
        Some(other) => return Err(Error::Syntax(format!("unknown weight regime {other:?}"))),
    };
    let edges =
        file.edges.iter().map(|(u, v, w)| Ok((u.clone(), v.clone(), w.parse()?))).collect::<Result<Vec<_>>>()?;
    Ok((RawGraph { n: file.n, extra: file.extra, edges }, mode))
}

pub fn parse_graph(text: &str) -> Result<WeightedGraph> {
    let (raw, mode) = parse_raw_graph(text)?;
    validate_graph(&raw, mode)
}

pub fn family_to_json(f: &MultiweightFamily) -> Value {
    let weights: Map<String, Value> = f.iter().map(|(k, v)| (k.to_string(), Value::String(v.to_string()))).collect();
    json!({ "n": f.n(), "weights": weights })
}

pub fn write_family(f: &MultiweightFamily) -> String {
    serde_json::to_string_pretty(&family_to_json(f)).expect("serializable") + "\n"
}

pub fn graph_to_json(g: &WeightedGraph) -> Value {
    let raw = g.to_raw();
    let edges: Vec<Value> = raw.edges.iter().map(|(u, v, w)| json!([u, v, w.to_string()])).collect();
    let mut out = json!({ "n": raw.n, "extra": raw.extra, "edges": edges });
    if g.mode() == WeightMode::Nonnegative {
        out["weights"] = json!("nonnegative");
    }
    out
}

pub fn write_graph(g: &WeightedGraph) -> String {
    serde_json::to_string_pretty(&graph_to_json(g)).expect("serializable") + "\n"
}

/// DOT description with weight labels; unlabelled vertices are dashed.
pub fn to_dot(g: &WeightedGraph, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(comment) = comment {
        for line in comment.lines() {
            let _ = writeln!(out, "// {line}");
        }
    }
    out.push_str("graph mwkit {\n");
    for v in g.vertices() {
        if v.is_labelled() {
            let _ = writeln!(out, "  \"{v}\" [shape=circle];");
        } else {
            let _ = writeln!(out, "  \"{v}\" [shape=point, style=dashed, xlabel=\"{v}\"];");
        }
    }
    for (u, v, w) in g.edges() {
        let _ = writeln!(out, "  \"{}\" -- \"{}\" [label=\"{}\"];", g.vertex(u), g.vertex(v), w);
    }
    out.push_str("}\n");
    out
}
