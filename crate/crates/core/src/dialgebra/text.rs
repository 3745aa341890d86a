//! Line-oriented dialgebra files.
//!
//! ```text
//! dialgebra dual-numbers
//! basis e deg 0
//! basis x deg 0
//! unit e
//! shift prod 0
//! shift coprod 0
//! prod e x -> x : 1/1
//! coprod e -> e x : 1/1
//! ```
//!
//! Structure constants not listed are zero. Serialization is canonical: basis in
//! declaration order, shifts only when nonzero, constants sorted by symbol name.

use std::collections::BTreeSet;

use super::Dialgebra;
use crate::linear::Symbol;
use crate::scalar::Scalar;
use crate::textfmt::{parse_int, tokenized, ParseError};

pub fn parse<S: Scalar>(src: &str) -> Result<Dialgebra<S>, ParseError> {
    let mut lines = tokenized(src);
    let name = match lines.next() {
        Some((_, t)) if t.len() == 2 && t[0] == "dialgebra" => t[1].to_string(),
        Some((n, _)) => return Err(ParseError::new(n, "expected `dialgebra <name>`")),
        None => return Err(ParseError::new(1, "empty input")),
    };

    let mut basis = Vec::new();
    let mut unit = None;
    let (mut prod_shift, mut coprod_shift) = (0, 0);
    let mut prods = Vec::new();
    let mut coprods = Vec::new();

    for (n, t) in lines {
        match t[0] {
            "basis" => {
                if t.len() != 4 || t[2] != "deg" {
                    return Err(ParseError::new(n, "expected `basis <symbol> deg <int>`"));
                }
                if !prods.is_empty() || !coprods.is_empty() {
                    return Err(ParseError::new(n, "basis declared after structure constants"));
                }
                basis.push(Symbol::new(t[1], parse_int(n, t[3], "an integer degree")?));
            }
            "unit" if t.len() == 2 => {
                if unit.is_some() {
                    return Err(ParseError::new(n, "unit declared twice"));
                }
                unit = Some((n, t[1].to_string()));
            }
            "shift" if t.len() == 3 => {
                let v = parse_int(n, t[2], "an integer shift")?;
                match t[1] {
                    "prod" => prod_shift = v,
                    "coprod" => coprod_shift = v,
                    other => return Err(ParseError::new(n, format!("unknown shift target `{other}`"))),
                }
            }
            "prod" => {
                if t.len() != 7 || t[3] != "->" || t[5] != ":" {
                    return Err(ParseError::new(n, "expected `prod <s1> <s2> -> <s3> : <p>/<q>`"));
                }
                prods.push((n, [t[1], t[2], t[4]], coefficient::<S>(n, t[6])?));
            }
            "coprod" => {
                if t.len() != 7 || t[2] != "->" || t[5] != ":" {
                    return Err(ParseError::new(n, "expected `coprod <s1> -> <s2> <s3> : <p>/<q>`"));
                }
                coprods.push((n, [t[1], t[3], t[4]], coefficient::<S>(n, t[6])?));
            }
            other => return Err(ParseError::new(n, format!("unrecognized directive `{other}`"))),
        }
    }

    let mut d = Dialgebra::with_shifts(name, basis, prod_shift, coprod_shift).map_err(|e| ParseError::new(1, e.to_string()))?;
    if let Some((n, u)) = unit {
        let s = d.symbol(&u).map_err(|e| ParseError::new(n, e.to_string()))?;
        d.set_unit(Some(s)).map_err(|e| ParseError::new(n, e.to_string()))?;
    }
    let mut seen = BTreeSet::new();
    for (n, [a, b, c], k) in prods {
        if !seen.insert(("prod", a, b, c)) {
            return Err(ParseError::new(n, "duplicate structure constant"));
        }
        d.add_product(a, b, c, k).map_err(|e| ParseError::new(n, e.to_string()))?;
    }
    for (n, [a, b, c], k) in coprods {
        if !seen.insert(("coprod", a, b, c)) {
            return Err(ParseError::new(n, "duplicate structure constant"));
        }
        d.add_coproduct(a, b, c, k).map_err(|e| ParseError::new(n, e.to_string()))?;
    }
    Ok(d)
}

fn coefficient<S: Scalar>(line: usize, tok: &str) -> Result<S, ParseError> {
    S::parse_fraction(tok).ok_or_else(|| ParseError::new(line, format!("expected a rational `p/q`, found `{tok}`")))
}

pub fn serialize<S: Scalar>(d: &Dialgebra<S>) -> String {
    let mut out = format!("dialgebra {}\n", d.name());
    for s in d.basis() {
        out += &format!("basis {} deg {}\n", s.name(), crate::linear::Graded::degree(s));
    }
    if let Some(u) = d.unit() {
        out += &format!("unit {}\n", u.name());
    }
    if d.product().shift() != 0 {
        out += &format!("shift prod {}\n", d.product().shift());
    }
    if d.coproduct().shift() != 0 {
        out += &format!("shift coprod {}\n", d.coproduct().shift());
    }
    for (i, o, c) in d.product().constants() {
        let (i, o) = (i.factors(), o.factors());
        out += &format!("prod {} {} -> {} : {}\n", i[0], i[1], o[0], c.to_fraction());
    }
    for (i, o, c) in d.coproduct().constants() {
        let (i, o) = (i.factors(), o.factors());
        out += &format!("coprod {} -> {} {} : {}\n", i[0], o[0], o[1], c.to_fraction());
    }
    out
}
