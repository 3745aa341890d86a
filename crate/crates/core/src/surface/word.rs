use std::cmp::Ordering;
use std::fmt;

use super::SurfaceError;
use crate::linear::Graded;

/// A free-group letter: generator `g_k` (k ≥ 1) or its inverse.
/// Written `a..z` for generators and `A..Z` for inverses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter(i8);

impl Letter {
    pub fn generator(k: u8) -> Self {
        assert!((1..=26).contains(&k), "generator index out of range");
        Letter(k as i8)
    }

    pub fn from_char(c: char) -> Result<Self, SurfaceError> {
        match c {
            'a'..='z' => Ok(Letter((c as u8 - b'a' + 1) as i8)),
            'A'..='Z' => Ok(Letter(-((c as u8 - b'A' + 1) as i8))),
            _ => Err(SurfaceError::UnknownLetter(c)),
        }
    }

    pub fn to_char(self) -> char {
        if self.0 > 0 {
            (b'a' + self.0 as u8 - 1) as char
        } else {
            (b'A' + (-self.0) as u8 - 1) as char
        }
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }

    pub fn generator_index(self) -> u8 {
        self.0.unsigned_abs()
    }

    pub fn is_inverse(self) -> bool {
        self.0 < 0
    }

    /// Total order g1 < ḡ1 < g2 < ḡ2 < ...
    fn key(self) -> u8 {
        2 * self.generator_index() + self.is_inverse() as u8
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

pub fn parse_letters(s: &str) -> Result<Vec<Letter>, SurfaceError> {
    s.chars().map(Letter::from_char).collect()
}

/// Free reduction: cancels adjacent inverse pairs.
pub fn free_reduce(letters: impl IntoIterator<Item = Letter>) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// A nontrivial conjugacy class of the free group: a cyclically reduced word in
/// canonical (lexicographically least) rotation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord(Vec<Letter>);

impl CyclicWord {
    /// Reduces `letters` to a cyclic word; `None` is the trivial class.
    pub fn reduce(letters: impl IntoIterator<Item = Letter>) -> Option<Self> {
        let w = free_reduce(letters);
        let (mut lo, mut hi) = (0, w.len());
        while hi - lo >= 2 && w[lo] == w[hi - 1].inverse() {
            lo += 1;
            hi -= 1;
        }
        if lo == hi {
            return None;
        }
        Some(Self(least_rotation(&w[lo..hi])))
    }

    pub fn parse(s: &str) -> Result<Option<Self>, SurfaceError> {
        Ok(Self::reduce(parse_letters(s)?))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Letter at a cyclic index.
    pub fn at(&self, i: isize) -> Letter {
        self.0[i.rem_euclid(self.0.len() as isize) as usize]
    }

    /// The linear word read starting at position `p`.
    pub fn rotation(&self, p: usize) -> Vec<Letter> {
        let n = self.0.len();
        (0..n).map(|k| self.0[(p + k) % n]).collect()
    }

    /// Cyclic subword `w_p ... w_{q-1}` (the whole word when p == q).
    pub fn arc(&self, p: usize, q: usize) -> Vec<Letter> {
        let n = self.0.len();
        let len = match (q + n - p) % n {
            0 => n,
            l => l,
        };
        (0..len).map(|k| self.0[(p + k) % n]).collect()
    }

    pub fn inverse(&self) -> Self {
        Self::reduce(self.0.iter().rev().map(|l| l.inverse())).expect("inverse of a nontrivial class")
    }

    /// Smallest `d` dividing the length with the word invariant under rotation by `d`.
    pub fn period(&self) -> usize {
        let n = self.0.len();
        (1..=n).find(|&d| n % d == 0 && (0..n).all(|i| self.0[i] == self.0[(i + d) % n])).unwrap()
    }
}

fn least_rotation(w: &[Letter]) -> Vec<Letter> {
    let n = w.len();
    let best = (0..n)
        .min_by(|&i, &j| {
            for k in 0..n {
                match w[(i + k) % n].cmp(&w[(j + k) % n]) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
        .unwrap_or(0);
    (0..n).map(|k| w[(best + k) % n]).collect()
}

impl Graded for CyclicWord {}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A loop with a marked base point: a linear word, not identified up to rotation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkedWord(pub Vec<Letter>);

impl Graded for MarkedWord {}

impl fmt::Display for MarkedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        f.write_str("]")
    }
}
