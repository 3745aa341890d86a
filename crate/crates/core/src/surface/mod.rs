//! Closed strings on a surface with boundary.
//!
//! The surface is the thickening of a one-vertex ribbon graph (a rose): one loop
//! per free generator, with the cyclic order of the `2n` half-edges at the vertex
//! given by a [`SurfaceSymbol`]. Its fundamental group is free, so free homotopy
//! classes of closed curves are cyclically reduced words ([`CyclicWord`]).
//!
//! The bracket and cobracket are computed from linked position pairs: two passes
//! of curves through the vertex cross exactly when their four emanating rays
//! alternate in the cyclic order of ends of the universal cover.

mod linking;
mod ops;
mod word;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

pub use linking::{linked, Linking, Ray};
pub use ops::{
    act, bracket, bracket_words, cobracket, cobracket_at, cobracket_word, cyclic_words_up_to, erase_mark,
    intersection_count, mark_all, rotate3, ClosedStateSum, ClosedTensorSum,
};
pub use word::{free_reduce, parse_letters, CyclicWord, Letter, MarkedWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("unknown letter `{0}`")]
    UnknownLetter(char),
    #[error("surface symbol uses letter `{0}` more than once")]
    DuplicateLetter(char),
    #[error("surface symbol is missing letter `{0}`")]
    MissingLetter(char),
    #[error("surface symbol is empty")]
    EmptySymbol,
    #[error("letter `{0}` is not a generator of this surface")]
    ForeignLetter(char),
    #[error("unknown surface preset `{0}` (expected torus-1 or pants)")]
    UnknownPreset(String),
}

/// Cyclic order of the half-edges at the vertex of a one-vertex ribbon graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceSymbol {
    order: Vec<Letter>,
    position: BTreeMap<Letter, usize>,
}

impl SurfaceSymbol {
    pub fn new(order: Vec<Letter>) -> Result<Self, SurfaceError> {
        if order.is_empty() {
            return Err(SurfaceError::EmptySymbol);
        }
        let mut position = BTreeMap::new();
        for (i, &l) in order.iter().enumerate() {
            if position.insert(l, i).is_some() {
                return Err(SurfaceError::DuplicateLetter(l.to_char()));
            }
        }
        for &l in &order {
            if !position.contains_key(&l.inverse()) {
                return Err(SurfaceError::MissingLetter(l.inverse().to_char()));
            }
        }
        Ok(Self { order, position })
    }

    /// Parses a comma-separated list such as `a,b,A,B`.
    pub fn parse(s: &str) -> Result<Self, SurfaceError> {
        let mut order = Vec::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            for c in tok.chars() {
                order.push(Letter::from_char(c)?);
            }
        }
        Self::new(order)
    }

    /// `torus-1` is the once-punctured torus `(a,b,A,B)`; `pants` is the
    /// three-holed sphere `(a,A,b,B)`.
    pub fn preset(name: &str) -> Result<Self, SurfaceError> {
        match name {
            "torus-1" => Self::parse("a,b,A,B"),
            "pants" => Self::parse("a,A,b,B"),
            other => Err(SurfaceError::UnknownPreset(other.to_string())),
        }
    }

    pub fn punctured_torus() -> Self {
        Self::preset("torus-1").unwrap()
    }

    pub fn pants() -> Self {
        Self::preset("pants").unwrap()
    }

    pub fn rank(&self) -> usize {
        self.order.len() / 2
    }

    pub fn order(&self) -> &[Letter] {
        &self.order
    }

    pub fn generators(&self) -> Vec<Letter> {
        let mut g: Vec<Letter> = self.order.iter().copied().filter(|l| !l.is_inverse()).collect();
        g.sort();
        g
    }

    pub fn contains(&self, l: Letter) -> bool {
        self.position.contains_key(&l)
    }

    pub(crate) fn position(&self, l: Letter) -> usize {
        self.position[&l]
    }

    pub fn successor(&self, l: Letter) -> Letter {
        self.order[(self.position(l) + 1) % self.order.len()]
    }

    /// Boundary components: orbits of `h ↦ successor(inverse(h))`.
    pub fn boundary_cycles(&self) -> Vec<Vec<Letter>> {
        let mut seen = BTreeMap::new();
        let mut cycles = Vec::new();
        for &start in &self.order {
            if seen.contains_key(&start) {
                continue;
            }
            let mut cycle = Vec::new();
            let mut h = start;
            while seen.insert(h, ()).is_none() {
                cycle.push(h);
                h = self.successor(h.inverse());
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// `(genus, boundary components)` from `1 - n = 2 - 2g - b`.
    pub fn topology(&self) -> (usize, usize) {
        let b = self.boundary_cycles().len();
        let n = self.rank();
        // Euler characteristic of a connected ribbon graph always makes this even.
        let twice_g = 1 + n - b;
        (twice_g / 2, b)
    }

    pub fn check_word(&self, w: &CyclicWord) -> Result<(), SurfaceError> {
        match w.letters().iter().find(|l| !self.contains(**l)) {
            Some(l) => Err(SurfaceError::ForeignLetter(l.to_char())),
            None => Ok(()),
        }
    }
}

impl fmt::Display for SurfaceSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.order.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Genus and boundary count of the surface with the given half-edge order.
pub fn surface_from_symbol(order: &[Letter]) -> Result<(usize, usize), SurfaceError> {
    Ok(SurfaceSymbol::new(order.to_vec())?.topology())
}
