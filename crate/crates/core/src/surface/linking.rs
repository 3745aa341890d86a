use std::cmp::Ordering;

use super::{CyclicWord, Letter, SurfaceSymbol};

/// An infinite reduced ray leaving the vertex, read off a cyclic word.
///
/// `Forward` at position `p` reads `w_p w_{p+1} ...`; `Backward` reads
/// `w_{p-1}^{-1} w_{p-2}^{-1} ...`. Both are periodic with period `|w|`.
#[derive(Clone, Copy, Debug)]
pub enum Ray<'a> {
    Forward(&'a CyclicWord, usize),
    Backward(&'a CyclicWord, usize),
}

impl<'a> Ray<'a> {
    pub fn forward(w: &'a CyclicWord, p: usize) -> Self {
        Ray::Forward(w, p)
    }

    pub fn backward(w: &'a CyclicWord, p: usize) -> Self {
        Ray::Backward(w, p)
    }

    pub fn letter(&self, k: usize) -> Letter {
        match *self {
            Ray::Forward(w, p) => w.at((p + k) as isize),
            Ray::Backward(w, p) => w.at(p as isize - 1 - k as isize).inverse(),
        }
    }

    pub fn period(&self) -> usize {
        match self {
            Ray::Forward(w, _) | Ray::Backward(w, _) => w.len(),
        }
    }

    pub fn take(&self, n: usize) -> Vec<Letter> {
        (0..n).map(|k| self.letter(k)).collect()
    }
}

/// Position of two rays in the cyclic order of ends at the vertex.
///
/// Rays are compared at their first differing letter. At the root the order is
/// the surface symbol's; after a common prefix ending in `x`, the rays sit at the
/// far end of edge `x` and the order is the symbol's read starting just after
/// `x^{-1}`. `None` means the rays coincide as infinite words.
fn compare(s: &SurfaceSymbol, r: &Ray, t: &Ray) -> Option<Ordering> {
    // Periodic sequences with periods p and q that agree on p + q letters agree forever.
    let bound = r.period() + t.period();
    let n = s.order().len();
    for k in 0..bound {
        let (a, b) = (r.letter(k), t.letter(k));
        if a == b {
            continue;
        }
        if k == 0 {
            return Some(s.position(a).cmp(&s.position(b)));
        }
        let base = s.position(r.letter(k - 1).inverse());
        let rank = |l: Letter| (s.position(l) + n - base) % n;
        return Some(rank(a).cmp(&rank(b)));
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Linking {
    Unlinked,
    Positive,
    Negative,
}

impl Linking {
    pub fn sign(self) -> i64 {
        match self {
            Linking::Unlinked => 0,
            Linking::Positive => 1,
            Linking::Negative => -1,
        }
    }
}

/// Linking of two passes through the vertex, given as (forward, backward) ray pairs.
///
/// `Positive` when the cyclic order reads `(f1, f2, b1, b2)`, `Negative` for
/// `(f1, b2, b1, f2)`, `Unlinked` when the first pair's rays are adjacent or any
/// two rays coincide.
pub fn linked(s: &SurfaceSymbol, first: (Ray, Ray), second: (Ray, Ray)) -> Linking {
    let rays = [first.0, first.1, second.0, second.1];
    for i in 0..4 {
        for j in (i + 1)..4 {
            if compare(s, &rays[i], &rays[j]).is_none() {
                return Linking::Unlinked;
            }
        }
    }
    let mut idx = [0usize, 1, 2, 3];
    idx.sort_by(|&i, &j| compare(s, &rays[i], &rays[j]).unwrap());
    let start = idx.iter().position(|&i| i == 0).unwrap();
    let cyc: Vec<usize> = (0..4).map(|k| idx[(start + k) % 4]).collect();
    match cyc.as_slice() {
        [0, 2, 1, 3] => Linking::Positive,
        [0, 3, 1, 2] => Linking::Negative,
        _ => Linking::Unlinked,
    }
}

/// Linking of passes `p` of `alpha` and `q` of `beta`, counted once per crossing.
///
/// When the two lifted curves share a segment, every vertex on it yields the
/// same four ends; the crossing is attributed only to the vertex where the
/// segment begins along `alpha`, i.e. where `alpha`'s incoming edge is not shared.
pub(crate) fn crossing(s: &SurfaceSymbol, alpha: &CyclicWord, p: usize, beta: &CyclicWord, q: usize) -> Linking {
    let (f1, b1) = (Ray::forward(alpha, p), Ray::backward(alpha, p));
    let (f2, b2) = (Ray::forward(beta, q), Ray::backward(beta, q));
    let incoming = b1.letter(0);
    if incoming == f2.letter(0) || incoming == b2.letter(0) {
        return Linking::Unlinked;
    }
    linked(s, (f1, b1), (f2, b2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::parse_letters;

    fn w(s: &str) -> CyclicWord {
        CyclicWord::parse(s).unwrap().unwrap()
    }

    #[test]
    fn strand_examples() {
        let ab = w("ab");
        assert_eq!(Ray::forward(&ab, 0).take(4), parse_letters("abab").unwrap());
        assert_eq!(Ray::backward(&ab, 0).take(4), parse_letters("BABA").unwrap());
        let a = w("a");
        assert_eq!(Ray::backward(&a, 0).take(3), parse_letters("AAA").unwrap());
    }

    #[test]
    fn core_curves_of_torus_are_linked() {
        let s = SurfaceSymbol::punctured_torus();
        let (a, b) = (w("a"), w("b"));
        let l = linked(&s, (Ray::forward(&a, 0), Ray::backward(&a, 0)), (Ray::forward(&b, 0), Ray::backward(&b, 0)));
        assert_eq!(l, Linking::Positive);
        // swapping the roles of the two passes reverses the sign
        let l = linked(&s, (Ray::forward(&b, 0), Ray::backward(&b, 0)), (Ray::forward(&a, 0), Ray::backward(&a, 0)));
        assert_eq!(l, Linking::Negative);
    }

    #[test]
    fn simple_word_self_pair_unlinked() {
        let s = SurfaceSymbol::punctured_torus();
        let ab = w("ab");
        let l = linked(
            &s,
            (Ray::forward(&ab, 0), Ray::backward(&ab, 0)),
            (Ray::forward(&ab, 1), Ray::backward(&ab, 1)),
        );
        assert_eq!(l, Linking::Unlinked);
    }

    #[test]
    fn identical_rays_unlinked() {
        let s = SurfaceSymbol::punctured_torus();
        let a = w("a");
        let pass = (Ray::forward(&a, 0), Ray::backward(&a, 0));
        assert_eq!(linked(&s, pass, pass), Linking::Unlinked);
        // same infinite ray from different words
        let aa = w("aa");
        assert_eq!(linked(&s, pass, (Ray::forward(&aa, 1), Ray::backward(&aa, 1))), Linking::Unlinked);
    }

    #[test]
    fn shared_prefix_recurses() {
        let s = SurfaceSymbol::punctured_torus();
        // a∞ vs (ab)∞ share the first letter; after `a` the order restarts after `A`
        let (a, ab) = (w("a"), w("ab"));
        let l = linked(&s, (Ray::forward(&a, 0), Ray::backward(&a, 0)), (Ray::forward(&ab, 0), Ray::backward(&ab, 0)));
        assert_eq!(l, Linking::Positive);
        // the same crossing seen one vertex later shares the incoming edge: not recounted
        assert_eq!(crossing(&s, &a, 0, &ab, 1), Linking::Unlinked);
        assert_eq!(crossing(&s, &a, 0, &ab, 0), Linking::Positive);
    }
}
