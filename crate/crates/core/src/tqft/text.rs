//! Bordism files:
//!
//! ```text
//! bordism handle
//! in 1
//! out 1
//! node c copants
//! node p pants
//! wire in.1 c.in.1
//! wire c.out.1 p.in.1
//! wire c.out.2 p.in.2
//! wire p.out.1 out.1
//! ```
//!
//! Port indices are 1-based. Serialization keeps node order and sorts wires by
//! destination (boundary outputs first, then node inputs).

use super::dag::{BordismDag, Kind, Port};
use crate::textfmt::{parse_int, tokenized, ParseError};

pub fn parse(src: &str) -> Result<BordismDag, ParseError> {
    let mut lines = tokenized(src);
    let name = match lines.next() {
        Some((_, t)) if t.len() == 2 && t[0] == "bordism" => t[1].to_string(),
        Some((n, _)) => return Err(ParseError::new(n, "expected `bordism <name>`")),
        None => return Err(ParseError::new(1, "empty input")),
    };
    let mut ends = [None, None];
    let mut nodes = vec![];
    let mut wires = vec![];
    for (n, t) in lines {
        match (t[0], t.len()) {
            (d @ ("in" | "out"), 2) => {
                let k: usize = parse_int(n, t[1], "a boundary count")?;
                if k == 0 {
                    return Err(ParseError::new(n, format!("`{d} 0`: both boundaries must be nonempty")));
                }
                let slot = &mut ends[(d == "out") as usize];
                if slot.is_some() {
                    return Err(ParseError::new(n, format!("`{d}` declared twice")));
                }
                *slot = Some(k);
            }
            ("node", 3) => {
                let kind = Kind::parse(t[2]).ok_or_else(|| ParseError::new(n, format!("unknown generator `{}`", t[2])))?;
                nodes.push((n, t[1], kind));
            }
            ("wire", 3) => {
                let port = |s: &str| Port::parse(s).ok_or_else(|| ParseError::new(n, format!("malformed port `{s}`")));
                wires.push((n, port(t[1])?, port(t[2])?));
            }
            ("in" | "out" | "node" | "wire", _) => {
                return Err(ParseError::new(n, format!("wrong number of fields for `{}`", t[0])))
            }
            (other, _) => return Err(ParseError::new(n, format!("unrecognized directive `{other}`"))),
        }
    }
    let (Some(m), Some(k)) = (ends[0], ends[1]) else {
        return Err(ParseError::new(1, "missing `in <m>` or `out <n>`"));
    };
    let mut d = BordismDag::new(name, m, k).map_err(|e| ParseError::new(1, e.to_string()))?;
    for (n, id, kind) in nodes {
        d.add_node(id, kind).map_err(|e| ParseError::new(n, e.to_string()))?;
    }
    let last = wires.last().map_or(1, |w| w.0);
    for (n, s, t) in wires {
        d.add_wire(s, t).map_err(|e| ParseError::new(n, e.to_string()))?;
    }
    d.validate().map_err(|e| ParseError::new(last, e.to_string()))?;
    Ok(d)
}

pub fn serialize(d: &BordismDag) -> String {
    let mut out = format!("bordism {}\nin {}\nout {}\n", d.name(), d.inputs(), d.outputs());
    for n in d.nodes() {
        out += &format!("node {} {}\n", n.id, n.kind.name());
    }
    for (s, t) in d.wires() {
        out += &format!("wire {s} {t}\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tqft::{normal_form, random_decomposition, TopologicalType};

    const HANDLE: &str = "bordism handle\nin 1\nout 1\nnode c copants\nnode p pants\nwire in.1 c.in.1\nwire c.out.1 p.in.1\nwire c.out.2 p.in.2\nwire p.out.1 out.1\n";

    #[test]
    fn round_trip() {
        let d = parse(HANDLE).unwrap();
        assert_eq!(d.topological_type().unwrap(), Some(TopologicalType::new(1, 1, 1).unwrap()));
        let text = serialize(&d);
        assert_eq!(parse(&text).unwrap(), d);
        assert_eq!(serialize(&parse(&text).unwrap()), text);
        for s in 0..5 {
            let r = random_decomposition(TopologicalType::new(2, 3, 2).unwrap(), s);
            let text = serialize(&r);
            assert_eq!(parse(&text).unwrap(), r);
            assert_eq!(serialize(&parse(&text).unwrap()), text);
        }
        let nf = normal_form(TopologicalType::new(0, 1, 1).unwrap());
        assert_eq!(parse(&serialize(&nf)).unwrap(), nf);
    }

    #[test]
    fn errors() {
        assert_eq!(parse("bordism b\nin 0\nout 1\n").unwrap_err().line, 2);
        assert_eq!(parse("bordism b\nin 1\nout 0\n").unwrap_err().line, 3);
        assert_eq!(parse("bordism b\nin 1\nout 1\nnode p hat\n").unwrap_err().line, 4);
        assert_eq!(parse("bordism b\nin 1\nout 1\nwire in.1 out.0\n").unwrap_err().line, 4);
        assert_eq!(parse("bordism b\nin 1\nout 1\nwire in.1 out.1\nwire in.1 out.1\n").unwrap_err().line, 5);
        // dangling port found after all wires are read
        let e = parse("bordism b\nin 2\nout 1\nwire in.1 out.1\n").unwrap_err();
        assert!(e.message.contains("in.2"));
        assert!(parse("cobordism b\n").is_err());
        assert!(parse("bordism b\nin 1\n").is_err());
    }
}
