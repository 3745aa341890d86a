//! Sparse exact linear algebra over graded bases.
//!
//! A [`FormalSum`] is a finite linear combination of basis keys with no stored
//! zero coefficients. Keys are kept in a `BTreeMap`, so term order is canonical
//! and equality of sums is structural. Tensor products are sums keyed by
//! [`Tensor`] (an ordered tuple of factors); a plain vector can be lifted to a
//! sum of 1-tensors when a uniform carrier is needed.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use thiserror::Error;

use crate::scalar::Scalar;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinearError {
    #[error("space mismatch: `{0}` vs `{1}`")]
    SpaceMismatch(String, String),
    #[error("expected a 2-tensor, found a term of arity {0}")]
    NotBinary(usize),
    #[error("arity mismatch: map expects {expected} factors, term has {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("unknown basis symbol `{0}`")]
    UnknownSymbol(String),
    #[error("degree mismatch for `{symbol}`: declared {declared}, used with {used}")]
    SymbolDegree { symbol: String, declared: i64, used: i64 },
    #[error("structure constant {input} -> {output} breaks homogeneity (shift {shift})")]
    Inhomogeneous { input: String, output: String, shift: i64 },
}

/// Anything carrying an integer degree. Ungraded bases sit in degree 0.
pub trait Graded {
    fn degree(&self) -> i64 {
        0
    }
}

/// A named basis element with a fixed degree. Equality and order are by name.
#[derive(Clone, Debug)]
pub struct Symbol {
    name: Arc<str>,
    degree: i64,
}

impl Symbol {
    pub fn new(name: impl Into<Arc<str>>, degree: i64) -> Self {
        Self { name: name.into(), degree }
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

impl Graded for Symbol {
    fn degree(&self) -> i64 {
        self.degree
    }
}

impl PartialEq for Symbol {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

impl Eq for Symbol {}

impl Hash for Symbol {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.name.hash(state)
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.name.cmp(&other.name)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// An ordered tensor of basis factors `k1 ⊗ k2 ⊗ ... ⊗ kn`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tensor<K>(Vec<K>);

impl<K> Tensor<K> {
    pub fn new(factors: Vec<K>) -> Self {
        Self(factors)
    }

    pub fn single(k: K) -> Self {
        Self(vec![k])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn factors(&self) -> &[K] {
        &self.0
    }

    pub fn into_factors(self) -> Vec<K> {
        self.0
    }
}

impl<K: Clone> Tensor<K> {
    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Self(v)
    }
}

impl<K: Graded> Graded for Tensor<K> {
    fn degree(&self) -> i64 {
        self.0.iter().map(Graded::degree).sum()
    }
}

impl<K: fmt::Display> fmt::Display for Tensor<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" (x) ")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl<K> From<Vec<K>> for Tensor<K> {
    fn from(v: Vec<K>) -> Self {
        Self(v)
    }
}

/// Tag identifying the vector space a sum lives in. Untagged sums are compatible with anything.
pub type SpaceTag = Arc<str>;

#[derive(Clone, Debug)]
pub struct FormalSum<K, S = Rational> {
    terms: BTreeMap<K, S>,
    space: Option<SpaceTag>,
}

/// Sum of tensors; the carrier for products, coproducts and bordism states.
pub type TensorSum<K, S = Rational> = FormalSum<Tensor<K>, S>;

impl<K: Ord, S: PartialEq> PartialEq for FormalSum<K, S> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<K: Ord, S: Eq> Eq for FormalSum<K, S> {}

impl<K: Ord + Clone, S: Scalar> Default for FormalSum<K, S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord + Clone, S: Scalar> FormalSum<K, S> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new(), space: None }
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, S::one())
    }

    pub fn term(k: K, c: S) -> Self {
        let mut s = Self::zero();
        s.add_term(k, c);
        s
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, S)>) -> Self {
        let mut s = Self::zero();
        for (k, c) in terms {
            s.add_term(k, c);
        }
        s
    }

    pub fn in_space(mut self, tag: impl Into<SpaceTag>) -> Self {
        self.space = Some(tag.into());
        self
    }

    pub fn space(&self) -> Option<&str> {
        self.space.as_deref()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &K) -> S {
        self.terms.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &S)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, k: K, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    /// Adds `c * other` in place. Space tags are not checked; see [`combine`].
    pub fn add_scaled(&mut self, other: &Self, c: &S) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone() * c.clone());
        }
        if self.space.is_none() {
            self.space = other.space.clone();
        }
    }

    pub fn scaled(&self, c: &S) -> Self {
        let mut s = Self { terms: BTreeMap::new(), space: self.space.clone() };
        s.add_scaled(self, c);
        s
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.add_scaled(other, &S::one());
        s
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.add_scaled(other, &-S::one());
        s
    }

    pub fn neg(&self) -> Self {
        self.scaled(&-S::one())
    }

    /// Linear extension of a map defined on basis keys.
    pub fn map_linear<K2, F>(&self, mut f: F) -> FormalSum<K2, S>
    where
        K2: Ord + Clone,
        F: FnMut(&K) -> FormalSum<K2, S>,
    {
        let mut out = FormalSum::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Fallible linear extension.
    pub fn try_map_linear<K2, E, F>(&self, mut f: F) -> Result<FormalSum<K2, S>, E>
    where
        K2: Ord + Clone,
        F: FnMut(&K) -> Result<FormalSum<K2, S>, E>,
    {
        let mut out = FormalSum::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k)?, c);
        }
        Ok(out)
    }

    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        Self {
            terms: self.terms.iter().filter(|(k, _)| keep(k)).map(|(k, c)| (k.clone(), c.clone())).collect(),
            space: self.space.clone(),
        }
    }

    /// Views a vector as a sum of 1-tensors.
    pub fn lift(&self) -> TensorSum<K, S> {
        FormalSum {
            terms: self.terms.iter().map(|(k, c)| (Tensor::single(k.clone()), c.clone())).collect(),
            space: self.space.clone(),
        }
    }
}

/// `c·v + d·w`, rejecting operands tagged with different spaces.
pub fn combine<K: Ord + Clone, S: Scalar>(
    v: &FormalSum<K, S>,
    w: &FormalSum<K, S>,
    c: &S,
    d: &S,
) -> Result<FormalSum<K, S>, LinearError> {
    if let (Some(a), Some(b)) = (&v.space, &w.space) {
        if a != b {
            return Err(LinearError::SpaceMismatch(a.to_string(), b.to_string()));
        }
    }
    let mut out = v.scaled(c);
    out.add_scaled(w, d);
    out.space = v.space.clone().or_else(|| w.space.clone());
    Ok(out)
}

impl<K: Ord + Clone, S: Scalar> TensorSum<K, S> {
    /// Inverse of [`FormalSum::lift`]; fails on any term that is not a 1-tensor.
    pub fn lower(&self) -> Result<FormalSum<K, S>, LinearError> {
        let mut out = FormalSum::zero();
        for (t, c) in &self.terms {
            if t.arity() != 1 {
                return Err(LinearError::ArityMismatch { expected: 1, found: t.arity() });
            }
            out.add_term(t.0[0].clone(), c.clone());
        }
        out.space = self.space.clone();
        Ok(out)
    }
}

/// Bilinear extension of factor concatenation.
pub fn tensor<K: Ord + Clone, S: Scalar>(v: &TensorSum<K, S>, w: &TensorSum<K, S>) -> TensorSum<K, S> {
    let mut out = FormalSum::zero();
    for (a, c) in &v.terms {
        for (b, d) in &w.terms {
            out.add_term(a.concat(b), c.clone() * d.clone());
        }
    }
    out.space = v.space.clone().or_else(|| w.space.clone());
    out
}

/// Koszul sign `(-1)^(deg a · deg b)`.
pub fn koszul<S: Scalar>(a: i64, b: i64) -> S {
    if (a * b).rem_euclid(2) == 0 {
        S::one()
    } else {
        -S::one()
    }
}

/// `b1 ⊗ b2 ↦ (-1)^(deg b1 · deg b2) b2 ⊗ b1`.
pub fn swap_graded<K: Ord + Clone + Graded, S: Scalar>(v: &TensorSum<K, S>) -> Result<TensorSum<K, S>, LinearError> {
    v.try_map_linear(|t| {
        if t.arity() != 2 {
            return Err(LinearError::NotBinary(t.arity()));
        }
        let (a, b) = (&t.0[0], &t.0[1]);
        Ok(FormalSum::term(Tensor(vec![b.clone(), a.clone()]), koszul(a.degree(), b.degree())))
    })
}

/// Reorders factors: output factor `i` is input factor `perm[i]`, with the Koszul sign
/// of the induced graded permutation.
pub fn permute_factors<K: Ord + Clone + Graded, S: Scalar>(
    v: &TensorSum<K, S>,
    perm: &[usize],
) -> Result<TensorSum<K, S>, LinearError> {
    v.try_map_linear(|t| {
        if t.arity() != perm.len() {
            return Err(LinearError::ArityMismatch { expected: perm.len(), found: t.arity() });
        }
        Ok(FormalSum::term(Tensor(perm.iter().map(|&i| t.0[i].clone()).collect()), permutation_sign(t, perm)))
    })
}

fn permutation_sign<K: Graded, S: Scalar>(t: &Tensor<K>, perm: &[usize]) -> S {
    let mut odd = 0i64;
    for i in 0..perm.len() {
        for j in (i + 1)..perm.len() {
            if perm[i] > perm[j] {
                odd += t.0[perm[i]].degree() * t.0[perm[j]].degree();
            }
        }
    }
    koszul(odd, 1)
}

/// A multilinear map `V^{⊗p} → V^{⊗q}` stored by structure constants on basis tuples.
/// Tuples absent from the table map to zero.
#[derive(Clone, Debug)]
pub struct StructureTensor<S = Rational> {
    basis: BTreeMap<Symbol, i64>,
    inputs: usize,
    outputs: usize,
    shift: i64,
    table: BTreeMap<Tensor<Symbol>, TensorSum<Symbol, S>>,
}

impl<S: Scalar> StructureTensor<S> {
    pub fn zero(basis: &[Symbol], inputs: usize, outputs: usize, shift: i64) -> Self {
        Self {
            basis: basis.iter().map(|s| (s.clone(), s.degree())).collect(),
            inputs,
            outputs,
            shift,
            table: BTreeMap::new(),
        }
    }

    pub fn identity(basis: &[Symbol]) -> Self {
        let mut t = Self::zero(basis, 1, 1, 0);
        for s in basis {
            t.table.insert(Tensor::single(s.clone()), FormalSum::basis(Tensor::single(s.clone())));
        }
        t
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    pub fn outputs(&self) -> usize {
        self.outputs
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn knows(&self, s: &Symbol) -> bool {
        self.basis.contains_key(s)
    }

    fn resolve(&self, s: &Symbol) -> Result<Symbol, LinearError> {
        match self.basis.get_key_value(s) {
            Some((k, _)) => Ok(k.clone()),
            None => Err(LinearError::UnknownSymbol(s.name().to_string())),
        }
    }

    /// Adds `c` to the constant `input ↦ output`, checking symbols and degree homogeneity.
    pub fn add_constant(&mut self, input: &[Symbol], output: &[Symbol], c: S) -> Result<(), LinearError> {
        if input.len() != self.inputs {
            return Err(LinearError::ArityMismatch { expected: self.inputs, found: input.len() });
        }
        if output.len() != self.outputs {
            return Err(LinearError::ArityMismatch { expected: self.outputs, found: output.len() });
        }
        let input = Tensor(input.iter().map(|s| self.resolve(s)).collect::<Result<Vec<_>, _>>()?);
        let output = Tensor(output.iter().map(|s| self.resolve(s)).collect::<Result<Vec<_>, _>>()?);
        if !c.is_zero() && output.degree() != input.degree() + self.shift {
            return Err(LinearError::Inhomogeneous {
                input: input.to_string(),
                output: output.to_string(),
                shift: self.shift,
            });
        }
        let entry = self.table.entry(input.clone()).or_default();
        entry.add_term(output, c);
        if entry.is_zero() {
            self.table.remove(&input);
        }
        Ok(())
    }

    /// Replaces the image of one basis tuple outright.
    pub fn set_image(&mut self, input: &[Symbol], image: TensorSum<Symbol, S>) -> Result<(), LinearError> {
        self.table.remove(&Tensor(input.to_vec()));
        for (out, c) in image.iter() {
            self.add_constant(input, out.factors(), c.clone())?;
        }
        Ok(())
    }

    /// Nonzero structure constants in canonical order.
    pub fn constants(&self) -> impl Iterator<Item = (&Tensor<Symbol>, &Tensor<Symbol>, &S)> {
        self.table.iter().flat_map(|(i, img)| img.iter().map(move |(o, c)| (i, o, c)))
    }

    pub fn image(&self, input: &Tensor<Symbol>) -> Result<TensorSum<Symbol, S>, LinearError> {
        if input.arity() != self.inputs {
            return Err(LinearError::ArityMismatch { expected: self.inputs, found: input.arity() });
        }
        for s in input.factors() {
            let declared = *self.basis.get(s).ok_or_else(|| LinearError::UnknownSymbol(s.name().to_string()))?;
            if declared != s.degree() {
                return Err(LinearError::SymbolDegree {
                    symbol: s.name().to_string(),
                    declared,
                    used: s.degree(),
                });
            }
        }
        Ok(self.table.get(input).cloned().unwrap_or_default())
    }

    pub fn apply(&self, v: &TensorSum<Symbol, S>) -> Result<TensorSum<Symbol, S>, LinearError> {
        self.apply_at(v, 0)
    }

    /// Applies `id^{⊗offset} ⊗ T ⊗ id^{⊗rest}` to every term, with the Koszul sign
    /// for moving `T` past the leading factors.
    pub fn apply_at(&self, v: &TensorSum<Symbol, S>, offset: usize) -> Result<TensorSum<Symbol, S>, LinearError> {
        v.try_map_linear(|t| {
            if t.arity() < offset + self.inputs {
                return Err(LinearError::ArityMismatch { expected: offset + self.inputs, found: t.arity() });
            }
            let head = Tensor(t.0[..offset].to_vec());
            let mid = Tensor(t.0[offset..offset + self.inputs].to_vec());
            let tail = Tensor(t.0[offset + self.inputs..].to_vec());
            let sign: S = koszul(self.shift, head.degree());
            let img = self.image(&mid)?;
            let mut out = FormalSum::zero();
            for (o, c) in img.iter() {
                out.add_term(head.concat(o).concat(&tail), c.clone() * sign.clone());
            }
            Ok(out)
        })
    }
}

impl<S: Scalar> PartialEq for StructureTensor<S> {
    fn eq(&self, other: &Self) -> bool {
        self.inputs == other.inputs
            && self.outputs == other.outputs
            && self.shift == other.shift
            && self.basis == other.basis
            && self.table == other.table
    }
}

impl<K: Ord + Clone + fmt::Display, S: Scalar> fmt::Display for FormalSum<K, S> {
    /// One `p/q key` line per term; the zero sum prints as `(empty)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return writeln!(f, "(empty)");
        }
        for (k, c) in &self.terms {
            writeln!(f, "{} {}", c.to_fraction(), k)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        Rational::parse_fraction(s).unwrap()
    }

    fn sym(n: &str) -> Symbol {
        Symbol::new(n, 0)
    }

    fn v(terms: &[(&str, &str)]) -> FormalSum<Symbol> {
        FormalSum::from_terms(terms.iter().map(|(k, c)| (sym(k), q(c))))
    }

    #[test]
    fn combine_examples() {
        let x2 = v(&[("x", "2")]);
        let x3 = v(&[("x", "3")]);
        assert_eq!(combine(&x2, &x3, &q("1"), &q("1")).unwrap(), v(&[("x", "5")]));

        let x = v(&[("x", "1")]);
        let r = combine(&x, &x, &q("1"), &q("-1")).unwrap();
        assert!(r.is_zero());
        assert_eq!(r.len(), 0);

        let a = v(&[("x", "1/2"), ("y", "1")]);
        let b = v(&[("y", "1")]);
        assert_eq!(combine(&a, &b, &q("2"), &q("-1")).unwrap(), v(&[("x", "1"), ("y", "1")]));
    }

    #[test]
    fn combine_rejects_mixed_spaces() {
        let a = v(&[("x", "1")]).in_space("A");
        let b = v(&[("x", "1")]).in_space("B");
        assert!(matches!(combine(&a, &b, &q("1"), &q("1")), Err(LinearError::SpaceMismatch(..))));
        // untagged operands adopt the tagged one's space
        let c = combine(&a, &v(&[("y", "1")]), &q("1"), &q("1")).unwrap();
        assert_eq!(c.space(), Some("A"));
    }

    #[test]
    fn tensor_examples() {
        let x = v(&[("x", "1")]).lift();
        let y = v(&[("y", "1")]).lift();
        let z = v(&[("z", "1")]).lift();
        assert!(tensor(&x, &FormalSum::zero()).is_zero());

        let xy = v(&[("x", "1"), ("y", "1")]).lift();
        let expect = FormalSum::from_terms([
            (Tensor::new(vec![sym("x"), sym("z")]), q("1")),
            (Tensor::new(vec![sym("y"), sym("z")]), q("1")),
        ]);
        assert_eq!(tensor(&xy, &z), expect);

        let r = tensor(&x.scaled(&q("2")), &y.scaled(&q("3")));
        assert_eq!(r, FormalSum::term(Tensor::new(vec![sym("x"), sym("y")]), q("6")));
    }

    #[test]
    fn swap_examples() {
        let t = |a: &Symbol, b: &Symbol| Tensor::new(vec![a.clone(), b.clone()]);
        let (x, y) = (sym("x"), sym("y"));
        let r = swap_graded::<_, Rational>(&FormalSum::basis(t(&x, &y))).unwrap();
        assert_eq!(r, FormalSum::basis(t(&y, &x)));

        let odd = Symbol::new("x", -1);
        let r = swap_graded::<_, Rational>(&FormalSum::basis(t(&odd, &odd))).unwrap();
        assert_eq!(r, FormalSum::term(t(&odd, &odd), q("-1")));

        let e = sym("e");
        let sym_elt: TensorSum<Symbol> = FormalSum::from_terms([(t(&e, &x), q("1")), (t(&x, &e), q("1"))]);
        assert_eq!(swap_graded(&sym_elt).unwrap(), sym_elt);

        let bad: TensorSum<Symbol> = FormalSum::basis(Tensor::single(x));
        assert_eq!(swap_graded(&bad), Err(LinearError::NotBinary(1)));
    }

    fn dual_numbers_product() -> StructureTensor {
        let (e, x) = (sym("e"), sym("x"));
        let mut m = StructureTensor::zero(&[e.clone(), x.clone()], 2, 1, 0);
        m.add_constant(&[e.clone(), e.clone()], &[e.clone()], q("1")).unwrap();
        m.add_constant(&[e.clone(), x.clone()], &[x.clone()], q("1")).unwrap();
        m.add_constant(&[x.clone(), e.clone()], &[x.clone()], q("1")).unwrap();
        m
    }

    #[test]
    fn apply_examples() {
        let (e, x) = (sym("e"), sym("x"));
        let id = StructureTensor::<Rational>::identity(&[e.clone(), x.clone()]);
        let vx = FormalSum::basis(Tensor::single(x.clone()));
        assert_eq!(id.apply(&vx).unwrap(), vx);

        let zero = StructureTensor::<Rational>::zero(&[e.clone(), x.clone()], 1, 1, 0);
        assert!(zero.apply(&vx).unwrap().is_zero());

        let m = dual_numbers_product();
        let ex = FormalSum::basis(Tensor::new(vec![e.clone(), x.clone()]));
        assert_eq!(m.apply(&ex).unwrap(), vx);
        let xx = FormalSum::basis(Tensor::new(vec![x.clone(), x.clone()]));
        assert!(m.apply(&xx).unwrap().is_zero());
    }

    #[test]
    fn apply_errors() {
        let m = dual_numbers_product();
        let one = FormalSum::basis(Tensor::single(sym("e")));
        assert_eq!(m.apply(&one), Err(LinearError::ArityMismatch { expected: 2, found: 1 }));
        let unknown = FormalSum::basis(Tensor::new(vec![sym("e"), sym("q")]));
        assert_eq!(m.apply(&unknown), Err(LinearError::UnknownSymbol("q".into())));
        let mut m2 = m.clone();
        let err = m2.add_constant(&[sym("e")], &[sym("e")], q("1"));
        assert!(matches!(err, Err(LinearError::ArityMismatch { .. })));
    }

    #[test]
    fn homogeneity_enforced() {
        let a = Symbol::new("a", 0);
        let b = Symbol::new("b", 2);
        let mut m = StructureTensor::<Rational>::zero(&[a.clone(), b.clone()], 2, 1, 0);
        assert!(matches!(m.add_constant(&[a.clone(), a.clone()], &[b.clone()], q("1")), Err(LinearError::Inhomogeneous { .. })));
        assert!(m.add_constant(&[a.clone(), b.clone()], &[b.clone()], q("1")).is_ok());
    }

    #[test]
    fn apply_at_offset() {
        let (e, x) = (sym("e"), sym("x"));
        let m = dual_numbers_product();
        let t = FormalSum::basis(Tensor::new(vec![x.clone(), e.clone(), x.clone()]));
        let r = m.apply_at(&t, 1).unwrap();
        assert_eq!(r, FormalSum::basis(Tensor::new(vec![x.clone(), x.clone()])));
    }

    #[test]
    fn permute_with_signs() {
        let a = Symbol::new("a", 1);
        let b = Symbol::new("b", 1);
        let c = Symbol::new("c", 0);
        let t: TensorSum<Symbol> = FormalSum::basis(Tensor::new(vec![a.clone(), b.clone(), c.clone()]));
        // (a, b, c) -> (c, b, a): a and b cross once with odd degrees
        let r = permute_factors(&t, &[2, 1, 0]).unwrap();
        assert_eq!(r, FormalSum::term(Tensor::new(vec![c, b, a]), q("-1")));
    }
}
