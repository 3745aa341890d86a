use std::collections::BTreeSet;

use super::linking::crossing;
use super::{CyclicWord, Letter, Linking, MarkedWord, SurfaceError, SurfaceSymbol};
use crate::linear::{FormalSum, Tensor, TensorSum};
use crate::scalar::Scalar;
use crate::Rational;

/// Span of nontrivial free homotopy classes; the trivial class is never stored.
pub type ClosedStateSum<S = Rational> = FormalSum<CyclicWord, S>;
pub type ClosedTensorSum<S = Rational> = TensorSum<CyclicWord, S>;

fn signed<S: Scalar>(l: Linking) -> S {
    S::from_int(l.sign())
}

fn check_sum<S: Scalar>(s: &SurfaceSymbol, v: &ClosedStateSum<S>) -> Result<(), SurfaceError> {
    v.keys().try_for_each(|w| s.check_word(w))
}

/// Bracket of two basis classes.
pub fn bracket_words<S: Scalar>(s: &SurfaceSymbol, alpha: &CyclicWord, beta: &CyclicWord) -> ClosedStateSum<S> {
    let mut out = FormalSum::zero();
    for p in 0..alpha.len() {
        for q in 0..beta.len() {
            let l = crossing(s, alpha, p, beta, q);
            if l == Linking::Unlinked {
                continue;
            }
            let loop_ = alpha.rotation(p).into_iter().chain(beta.rotation(q));
            if let Some(w) = CyclicWord::reduce(loop_) {
                out.add_term(w, signed(l));
            }
        }
    }
    out
}

/// Bilinear bracket: each crossing of `alpha` and `beta` contributes the signed
/// loop that runs once around `alpha` and then once around `beta`.
pub fn bracket<S: Scalar>(
    s: &SurfaceSymbol,
    alpha: &ClosedStateSum<S>,
    beta: &ClosedStateSum<S>,
) -> Result<ClosedStateSum<S>, SurfaceError> {
    check_sum(s, alpha)?;
    check_sum(s, beta)?;
    Ok(bracket_unchecked(s, alpha, beta))
}

pub(crate) fn bracket_unchecked<S: Scalar>(
    s: &SurfaceSymbol,
    alpha: &ClosedStateSum<S>,
    beta: &ClosedStateSum<S>,
) -> ClosedStateSum<S> {
    let mut out = FormalSum::zero();
    for (a, c) in alpha.iter() {
        for (b, d) in beta.iter() {
            out.add_scaled(&bracket_words(s, a, b), &(c.clone() * d.clone()));
        }
    }
    out
}

/// Cobracket of a basis class: each self-crossing splits the loop into the two
/// arcs `w_p..w_{q-1}` and `w_q..w_{p-1}`. Terms with a trivial factor are dropped.
pub fn cobracket_word<S: Scalar>(s: &SurfaceSymbol, w: &CyclicWord) -> ClosedTensorSum<S> {
    let mut out = FormalSum::zero();
    let n = w.len();
    for p in 0..n {
        for q in 0..n {
            if p == q {
                continue;
            }
            let l = crossing(s, w, p, w, q);
            if l == Linking::Unlinked {
                continue;
            }
            let (Some(x), Some(y)) = (CyclicWord::reduce(w.arc(p, q)), CyclicWord::reduce(w.arc(q, p))) else {
                continue;
            };
            out.add_term(Tensor::new(vec![x, y]), signed(l));
        }
    }
    out
}

pub fn cobracket<S: Scalar>(s: &SurfaceSymbol, alpha: &ClosedStateSum<S>) -> Result<ClosedTensorSum<S>, SurfaceError> {
    check_sum(s, alpha)?;
    Ok(alpha.map_linear(|w| cobracket_word(s, w)))
}

/// Applies the cobracket to factor `i` of every tensor term, leaving the others in place.
pub fn cobracket_at<S: Scalar>(s: &SurfaceSymbol, v: &ClosedTensorSum<S>, i: usize) -> ClosedTensorSum<S> {
    v.map_linear(|t| {
        let f = t.factors();
        let head = Tensor::new(f[..i].to_vec());
        let tail = Tensor::new(f[i + 1..].to_vec());
        let mut out = FormalSum::zero();
        for (mid, c) in cobracket_word::<S>(s, &f[i]).iter() {
            out.add_term(head.concat(mid).concat(&tail), c.clone());
        }
        out
    })
}

/// Lie action on tensors: `a·(x1⊗…⊗xk) = Σ_i x1⊗…⊗[a,xi]⊗…⊗xk`.
pub fn act<S: Scalar>(s: &SurfaceSymbol, a: &ClosedStateSum<S>, v: &ClosedTensorSum<S>) -> ClosedTensorSum<S> {
    v.map_linear(|t| {
        let f = t.factors();
        let mut out = FormalSum::zero();
        for i in 0..f.len() {
            let head = Tensor::new(f[..i].to_vec());
            let tail = Tensor::new(f[i + 1..].to_vec());
            let br = bracket_unchecked(s, a, &FormalSum::basis(f[i].clone()));
            for (w, c) in br.iter() {
                out.add_term(head.concat(&Tensor::single(w.clone())).concat(&tail), c.clone());
            }
        }
        out
    })
}

/// Cyclic permutation of 3-tensor factors, `x⊗y⊗z ↦ z⊗x⊗y`.
pub fn rotate3<S: Scalar>(v: &ClosedTensorSum<S>) -> ClosedTensorSum<S> {
    v.map_linear(|t| {
        let f = t.factors();
        assert_eq!(f.len(), 3, "rotate3 needs 3-tensors");
        FormalSum::basis(Tensor::new(vec![f[2].clone(), f[0].clone(), f[1].clone()]))
    })
}

/// Marks a closed string at every point: the sum of all `|w|` rotations, with
/// multiplicity for periodic words.
pub fn mark_all<S: Scalar>(w: &CyclicWord) -> FormalSum<MarkedWord, S> {
    FormalSum::from_terms((0..w.len()).map(|p| (MarkedWord(w.rotation(p)), S::one())))
}

/// Forgets the mark; the trivial class maps to zero.
pub fn erase_mark<S: Scalar>(m: &MarkedWord) -> ClosedStateSum<S> {
    match CyclicWord::reduce(m.0.iter().copied()) {
        Some(w) => FormalSum::basis(w),
        None => FormalSum::zero(),
    }
}

/// Number of crossings counted by the bracket between `alpha` and `beta` (over all
/// position pairs; coinciding strands never count).
pub fn intersection_count(s: &SurfaceSymbol, alpha: &CyclicWord, beta: &CyclicWord) -> usize {
    (0..alpha.len())
        .flat_map(|p| (0..beta.len()).map(move |q| (p, q)))
        .filter(|&(p, q)| crossing(s, alpha, p, beta, q) != Linking::Unlinked)
        .count()
}

/// Every nontrivial class of length `1..=max_len` over the surface's generators, sorted.
pub fn cyclic_words_up_to(s: &SurfaceSymbol, max_len: usize) -> Vec<CyclicWord> {
    let letters: Vec<Letter> = s.order().to_vec();
    let mut found = BTreeSet::new();
    let mut frontier: Vec<Vec<Letter>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &letters {
                if w.last() == Some(&l.inverse()) {
                    continue;
                }
                let mut v = w.clone();
                v.push(l);
                if v.len() == 1 || v[0] != l.inverse() {
                    if let Some(c) = CyclicWord::reduce(v.iter().copied()) {
                        if c.len() == v.len() {
                            found.insert(c);
                        }
                    }
                }
                next.push(v);
            }
        }
        frontier = next;
    }
    found.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    type Q = Rational;

    fn w(s: &str) -> CyclicWord {
        CyclicWord::parse(s).unwrap().unwrap()
    }

    fn b(s: &str) -> ClosedStateSum {
        FormalSum::basis(w(s))
    }

    #[test]
    fn bracket_examples() {
        let s = SurfaceSymbol::punctured_torus();
        assert_eq!(bracket(&s, &b("a"), &b("b")).unwrap(), b("ab"));
        assert!(bracket(&s, &b("a"), &b("a")).unwrap().is_zero());
        assert!(bracket(&s, &b("ab"), &FormalSum::zero()).unwrap().is_zero());
    }

    #[test]
    fn bracket_with_powers_counts_each_strand() {
        let s = SurfaceSymbol::punctured_torus();
        // a^2 crosses b twice, both times producing aab
        let r = bracket(&s, &b("aa"), &b("b")).unwrap();
        assert_eq!(r, b("aab").scaled(&Q::from_int(2)));
        assert_eq!(intersection_count(&s, &w("aa"), &w("b")), 2);
    }

    #[test]
    fn shared_segment_counted_once() {
        let s = SurfaceSymbol::punctured_torus();
        // (1,0) and (1,1) curves meet once on the torus
        assert_eq!(intersection_count(&s, &w("a"), &w("ab")), 1);
        assert_eq!(bracket(&s, &b("a"), &b("ab")).unwrap(), b("aab"));
    }

    #[test]
    fn cobracket_examples() {
        let s = SurfaceSymbol::punctured_torus();
        assert!(cobracket(&s, &b("a")).unwrap().is_zero());
        assert!(cobracket(&s, &b("ab")).unwrap().is_zero());
        assert!(cobracket(&s, &FormalSum::<CyclicWord, Q>::zero()).unwrap().is_zero());
        assert!(cobracket(&s, &b("aa")).unwrap().is_zero());
    }

    #[test]
    fn foreign_letters_rejected() {
        let s = SurfaceSymbol::punctured_torus();
        assert_eq!(bracket(&s, &b("c"), &b("a")), Err(SurfaceError::ForeignLetter('c')));
        assert_eq!(cobracket(&s, &b("aC")), Err(SurfaceError::ForeignLetter('C')));
    }

    #[test]
    fn intersection_examples() {
        let s = SurfaceSymbol::punctured_torus();
        assert_eq!(intersection_count(&s, &w("a"), &w("b")), 1);
        assert_eq!(intersection_count(&s, &w("a"), &w("a")), 0);
        assert_eq!(intersection_count(&s, &w("ab"), &w("ab")), 0);
    }

    #[test]
    fn marking_examples() {
        let m = mark_all::<Q>(&w("ab"));
        assert_eq!(m.len(), 2);
        assert_eq!(m.coeff(&MarkedWord(crate::surface::parse_letters("ba").unwrap())), Q::from_int(1));
        let m = mark_all::<Q>(&w("aa"));
        assert_eq!(m, FormalSum::term(MarkedWord(crate::surface::parse_letters("aa").unwrap()), Q::from_int(2)));
        assert_eq!(erase_mark::<Q>(&MarkedWord(crate::surface::parse_letters("ba").unwrap())), b("ab"));
        assert!(erase_mark::<Q>(&MarkedWord(crate::surface::parse_letters("aA").unwrap())).is_zero());
    }

    #[test]
    fn word_enumeration_counts() {
        let s = SurfaceSymbol::punctured_torus();
        let words = cyclic_words_up_to(&s, 2);
        // a, A, b, B and the eight length-2 classes
        assert_eq!(words.len(), 12);
        assert!(words.iter().all(|x| x.len() <= 2));
    }
}
