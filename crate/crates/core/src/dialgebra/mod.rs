//! Finite-dimensional dialgebras `(V, ∧, ∨)` given by structure constants.
//!
//! A dialgebra is a graded vector space with a product `V⊗V → V` and a coproduct
//! `V → V⊗V`; no compatibility is assumed. The [`axioms`] submodule checks every
//! structure axiom and compatibility exhaustively on basis tuples and sorts the
//! result into the six-cell table ({associative, commutative, Lie} ×
//! {module, derivation}).

pub mod axioms;
pub mod text;

use std::fmt;

use thiserror::Error;

use crate::linear::{tensor, FormalSum, Graded, LinearError, StructureTensor, Symbol, Tensor, TensorSum};
use crate::scalar::Scalar;
use crate::Rational;

pub use axioms::{classify, Axiom, AxiomReport, Cell, Classification, Compatibility, Structure, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DialgebraError {
    #[error(transparent)]
    Linear(#[from] LinearError),
    #[error("duplicate basis symbol `{0}`")]
    DuplicateBasis(String),
    #[error("unknown axiom `{0}`")]
    UnknownAxiom(String),
    #[error("axiom `{axiom}` takes {expected} inputs, got {found}")]
    WitnessArity { axiom: String, expected: usize, found: usize },
    #[error("no unit declared")]
    NoUnit,
}

/// Vectors and 2-tensors of a dialgebra.
pub type Vector<S = Rational> = FormalSum<Symbol, S>;
pub type Tensor2<S = Rational> = TensorSum<Symbol, S>;

#[derive(Clone, Debug, PartialEq)]
pub struct Dialgebra<S: Scalar = Rational> {
    name: String,
    basis: Vec<Symbol>,
    unit: Option<Symbol>,
    product: StructureTensor<S>,
    coproduct: StructureTensor<S>,
    koszul: bool,
}

impl<S: Scalar> Dialgebra<S> {
    /// A dialgebra with zero product and coproduct.
    pub fn new(name: impl Into<String>, basis: Vec<Symbol>) -> Result<Self, DialgebraError> {
        Self::with_shifts(name, basis, 0, 0)
    }

    pub fn with_shifts(
        name: impl Into<String>,
        basis: Vec<Symbol>,
        product_shift: i64,
        coproduct_shift: i64,
    ) -> Result<Self, DialgebraError> {
        for (i, s) in basis.iter().enumerate() {
            if basis[..i].contains(s) {
                return Err(DialgebraError::DuplicateBasis(s.name().to_string()));
            }
        }
        Ok(Self {
            name: name.into(),
            product: StructureTensor::zero(&basis, 2, 1, product_shift),
            coproduct: StructureTensor::zero(&basis, 1, 2, coproduct_shift),
            basis,
            unit: None,
            koszul: false,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn basis(&self) -> &[Symbol] {
        &self.basis
    }

    pub fn unit(&self) -> Option<&Symbol> {
        self.unit.as_ref()
    }

    pub fn product(&self) -> &StructureTensor<S> {
        &self.product
    }

    pub fn coproduct(&self) -> &StructureTensor<S> {
        &self.coproduct
    }

    /// Looks up a basis symbol by name, carrying its declared degree.
    pub fn symbol(&self, name: &str) -> Result<Symbol, DialgebraError> {
        self.basis
            .iter()
            .find(|s| s.name() == name)
            .cloned()
            .ok_or_else(|| LinearError::UnknownSymbol(name.to_string()).into())
    }

    pub fn set_unit(&mut self, unit: Option<Symbol>) -> Result<(), DialgebraError> {
        if let Some(u) = &unit {
            self.symbol(u.name())?;
        }
        self.unit = unit;
        Ok(())
    }

    /// Uses the Koszul-signed derivation rule `∨(ab) = (∨a)b + (-1)^{|a||∨|} a(∨b)`
    /// instead of the unsigned one.
    pub fn set_koszul(&mut self, on: bool) {
        self.koszul = on;
    }

    pub fn koszul(&self) -> bool {
        self.koszul
    }

    pub fn add_product(&mut self, a: &str, b: &str, out: &str, c: S) -> Result<(), DialgebraError> {
        let (a, b, out) = (self.symbol(a)?, self.symbol(b)?, self.symbol(out)?);
        Ok(self.product.add_constant(&[a, b], &[out], c)?)
    }

    pub fn add_coproduct(&mut self, a: &str, left: &str, right: &str, c: S) -> Result<(), DialgebraError> {
        let (a, l, r) = (self.symbol(a)?, self.symbol(left)?, self.symbol(right)?);
        Ok(self.coproduct.add_constant(&[a], &[l, r], c)?)
    }

    /// Replaces `∨(a)` outright.
    pub fn set_coproduct_image(&mut self, a: &str, image: Tensor2<S>) -> Result<(), DialgebraError> {
        let a = self.symbol(a)?;
        Ok(self.coproduct.set_image(&[a], image)?)
    }

    /// Replaces `a ∧ b` outright.
    pub fn set_product_image(&mut self, a: &str, b: &str, image: Vector<S>) -> Result<(), DialgebraError> {
        let (a, b) = (self.symbol(a)?, self.symbol(b)?);
        Ok(self.product.set_image(&[a, b], image.lift())?)
    }

    pub fn element(&self, name: &str) -> Result<Vector<S>, DialgebraError> {
        Ok(FormalSum::basis(self.symbol(name)?).in_space(self.name.as_str()))
    }

    pub fn multiply(&self, a: &Vector<S>, b: &Vector<S>) -> Result<Vector<S>, DialgebraError> {
        let ab = tensor(&a.lift(), &b.lift());
        Ok(self.product.apply(&ab)?.lower()?)
    }

    pub fn comultiply(&self, a: &Vector<S>) -> Result<Tensor2<S>, DialgebraError> {
        Ok(self.coproduct.apply(&a.lift())?)
    }

    /// `∧` applied to the adjacent factors `offset, offset+1` of every term.
    pub fn product_at(&self, v: &TensorSum<Symbol, S>, offset: usize) -> Result<TensorSum<Symbol, S>, DialgebraError> {
        Ok(self.product.apply_at(v, offset)?)
    }

    /// `∨` applied to factor `offset` of every term.
    pub fn coproduct_at(&self, v: &TensorSum<Symbol, S>, offset: usize) -> Result<TensorSum<Symbol, S>, DialgebraError> {
        Ok(self.coproduct.apply_at(v, offset)?)
    }

    /// Associative left action on `V⊗V`: `a·(b⊗c) = (a·b)⊗c`.
    pub fn act_left(&self, a: &Vector<S>, t: &Tensor2<S>) -> Result<Tensor2<S>, DialgebraError> {
        self.product_at(&tensor(&a.lift(), t), 0)
    }

    /// Associative right action on `V⊗V`: `(a⊗b)·c = a⊗(b·c)`.
    pub fn act_right(&self, t: &Tensor2<S>, c: &Vector<S>) -> Result<Tensor2<S>, DialgebraError> {
        self.product_at(&tensor(t, &c.lift()), 1)
    }

    /// Lie action on `V⊗V`: `a·(b⊗c) = [a,b]⊗c + b⊗[a,c]` with `[x,y] = x ∧ y`.
    pub fn act_lie(&self, a: &Vector<S>, t: &Tensor2<S>) -> Result<Tensor2<S>, DialgebraError> {
        let mut out = FormalSum::zero();
        for (term, c) in t.iter() {
            let f = term.factors();
            if f.len() != 2 {
                return Err(LinearError::NotBinary(f.len()).into());
            }
            let x = Vector::basis(f[0].clone());
            let y = Vector::basis(f[1].clone());
            let first = tensor(&self.multiply(a, &x)?.lift(), &y.lift());
            // moving `a` past `x`; only signed in Koszul mode
            let sign: S = if self.koszul { crate::linear::koszul(degree_of(a), f[0].degree()) } else { S::one() };
            let second = tensor(&x.lift(), &self.multiply(a, &y)?.lift()).scaled(&sign);
            out.add_scaled(&first.plus(&second), c);
        }
        Ok(out)
    }

    /// Right Lie action, `(b⊗c)·a = -a·(b⊗c)`.
    pub fn act_lie_right(&self, t: &Tensor2<S>, a: &Vector<S>) -> Result<Tensor2<S>, DialgebraError> {
        Ok(self.act_lie(a, t)?.neg())
    }
}

/// Degree of a homogeneous vector (0 for the zero vector).
fn degree_of<S: Scalar>(v: &Vector<S>) -> i64 {
    v.keys().next().map(|s| s.degree()).unwrap_or(0)
}

impl<S: Scalar> fmt::Display for Dialgebra<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::serialize(self))
    }
}

/// Product on `V⊗V ⊗ V⊗V` used for the Hopf condition:
/// `(a⊗b)(c⊗d) = (-1)^{|b||c|} (ac)⊗(bd)`.
pub(crate) fn tensor_square_product<S: Scalar>(
    d: &Dialgebra<S>,
    x: &Tensor2<S>,
    y: &Tensor2<S>,
) -> Result<Tensor2<S>, DialgebraError> {
    let mut out = FormalSum::zero();
    for (s, c) in x.iter() {
        for (t, e) in y.iter() {
            let (a, b) = (&s.factors()[0], &s.factors()[1]);
            let (cc, dd) = (&t.factors()[0], &t.factors()[1]);
            let sign: S = crate::linear::koszul(b.degree(), cc.degree());
            let four = FormalSum::term(Tensor::new(vec![a.clone(), cc.clone(), b.clone(), dd.clone()]), sign);
            let prod = d.product_at(&d.product_at(&four, 2)?, 0)?;
            out.add_scaled(&prod, &(c.clone() * e.clone()));
        }
    }
    Ok(out)
}

/// Ready-made examples used throughout the tests and the CLI self-test.
pub mod examples {
    use super::*;

    fn q<S: Scalar>(n: i64) -> S {
        S::from_int(n)
    }

    /// `Q[x]/x²` with unit `e` and the coproduct dual to the pairing `⟨e,x⟩ = 1`:
    /// `∨e = e⊗x + x⊗e`, `∨x = x⊗x`.
    pub fn dual_numbers<S: Scalar>() -> Dialgebra<S> {
        let mut d = Dialgebra::new("dual-numbers", vec![Symbol::new("e", 0), Symbol::new("x", 0)]).unwrap();
        d.add_product("e", "e", "e", q(1)).unwrap();
        d.add_product("e", "x", "x", q(1)).unwrap();
        d.add_product("x", "e", "x", q(1)).unwrap();
        d.add_coproduct("e", "e", "x", q(1)).unwrap();
        d.add_coproduct("e", "x", "e", q(1)).unwrap();
        d.add_coproduct("x", "x", "x", q(1)).unwrap();
        d.set_unit(Some(Symbol::new("e", 0))).unwrap();
        d
    }

    /// [`dual_numbers`] with `∨x` replaced by `e⊗e`, breaking module compatibility.
    pub fn mutated_dual_numbers<S: Scalar>() -> Dialgebra<S> {
        let mut d = dual_numbers::<S>();
        d.name = "dual-numbers-mutated".into();
        let ee = FormalSum::basis(Tensor::new(vec![Symbol::new("e", 0), Symbol::new("e", 0)]));
        d.set_coproduct_image("x", ee).unwrap();
        d
    }

    /// Zero product and coproduct on `dim` degree-0 basis vectors.
    pub fn zero<S: Scalar>(dim: usize) -> Dialgebra<S> {
        Dialgebra::new("zero", (0..dim).map(|i| Symbol::new(format!("v{i}"), 0)).collect()).unwrap()
    }

    /// `Q×Q` with idempotents `p, q` and the group-like coproduct `∨p = p⊗p`, `∨q = q⊗q`.
    pub fn group_like<S: Scalar>() -> Dialgebra<S> {
        let mut d = Dialgebra::new("group-like", vec![Symbol::new("p", 0), Symbol::new("q", 0)]).unwrap();
        d.add_product("p", "p", "p", q(1)).unwrap();
        d.add_product("q", "q", "q", q(1)).unwrap();
        d.add_coproduct("p", "p", "p", q(1)).unwrap();
        d.add_coproduct("q", "q", "q", q(1)).unwrap();
        d
    }

    /// Two-dimensional nonabelian Lie bialgebra: `[h,x] = x`, `δh = 0`, `δx = x⊗h - h⊗x`.
    pub fn book_lie_bialgebra<S: Scalar>() -> Dialgebra<S> {
        let mut d = Dialgebra::new("book", vec![Symbol::new("h", 0), Symbol::new("x", 0)]).unwrap();
        d.add_product("h", "x", "x", q(1)).unwrap();
        d.add_product("x", "h", "x", q(-1)).unwrap();
        d.add_coproduct("x", "x", "h", q(1)).unwrap();
        d.add_coproduct("x", "h", "x", q(-1)).unwrap();
        d
    }

    /// `n×n` matrices on the units `Eij` with `∨Eij = Σ_k Eik⊗Ekj`. Associative and
    /// module-compatible but not commutative for `n ≥ 2`.
    pub fn matrix_units<S: Scalar>(n: usize) -> Dialgebra<S> {
        let name = |i: usize, j: usize| format!("E{}{}", i + 1, j + 1);
        let basis = (0..n).flat_map(|i| (0..n).map(move |j| Symbol::new(name(i, j), 0))).collect();
        let mut d = Dialgebra::new(format!("matrix-units-{n}"), basis).unwrap();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    d.add_product(&name(i, j), &name(j, k), &name(i, k), q(1)).unwrap();
                    d.add_coproduct(&name(i, j), &name(i, k), &name(k, j), q(1)).unwrap();
                }
            }
        }
        d
    }

    /// One basis vector with zero bracket and cobracket.
    pub fn trivial_lie<S: Scalar>() -> Dialgebra<S> {
        Dialgebra::new("trivial-lie", vec![Symbol::new("t", 0)]).unwrap()
    }
}
