//! Graph files: `graph <name>`, `vertex <id>`, `edge <id> <from> <to>`,
//! `label <name> <v1> <v2> ...`. Serialization lists vertices and edges in
//! declaration order and labels sorted by name.

use super::AmbientGraph;
use crate::textfmt::{tokenized, ParseError};

pub fn parse(src: &str) -> Result<AmbientGraph, ParseError> {
    let mut lines = tokenized(src);
    let mut g = match lines.next() {
        Some((_, t)) if t.len() == 2 && t[0] == "graph" => AmbientGraph::new(t[1]),
        Some((n, _)) => return Err(ParseError::new(n, "expected `graph <name>`")),
        None => return Err(ParseError::new(1, "empty input")),
    };
    for (n, t) in lines {
        let res = match (t[0], t.len()) {
            ("vertex", 2) => g.add_vertex(t[1]),
            ("edge", 4) => g.add_edge(t[1], t[2], t[3]),
            ("label", k) if k >= 2 => g.add_label(t[1], &t[2..]),
            ("vertex" | "edge" | "label", _) => return Err(ParseError::new(n, format!("wrong number of fields for `{}`", t[0]))),
            (other, _) => return Err(ParseError::new(n, format!("unrecognized directive `{other}`"))),
        };
        res.map_err(|e| ParseError::new(n, e.to_string()))?;
    }
    Ok(g)
}

pub fn serialize(g: &AmbientGraph) -> String {
    let mut out = format!("graph {}\n", g.name());
    for v in g.vertices() {
        out += &format!("vertex {v}\n");
    }
    for (id, a, b) in g.edges() {
        out += &format!("edge {id} {a} {b}\n");
    }
    for (name, l) in g.labels() {
        out += &format!("label {name}");
        for v in l.vertices() {
            out += &format!(" {v}");
        }
        out += "\n";
    }
    out
}
