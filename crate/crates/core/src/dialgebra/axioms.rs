use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::{tensor_square_product, Dialgebra, DialgebraError, Vector};
use crate::linear::{permute_factors, swap_graded, FormalSum, Graded, Symbol, TensorSum};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    Associativity,
    Coassociativity,
    Commutativity,
    Cocommutativity,
    SkewSymmetry,
    CoskewSymmetry,
    Jacobi,
    Cojacobi,
    /// `∨(ab) = (∨a)·b + a·(∨b)` with the associative module actions.
    DerivationCompatibility,
    /// `∨(ab) = (∨a)·b = a·(∨b)` with the associative module actions.
    ModuleCompatibility,
    /// `∨[a,b] = (∨a)·b + a·(∨b)` with the Lie actions; the Lie bialgebra axiom.
    Drinfeld,
    /// `∨[a,b] = (∨a)·b = a·(∨b)` with the Lie actions.
    LieModuleCompatibility,
    /// `∨` is a map of algebras.
    Hopf,
    /// Two-sided unit law for the declared unit.
    Unit,
}

impl Axiom {
    pub const ALL: [Axiom; 14] = [
        Axiom::Associativity,
        Axiom::Coassociativity,
        Axiom::Commutativity,
        Axiom::Cocommutativity,
        Axiom::SkewSymmetry,
        Axiom::CoskewSymmetry,
        Axiom::Jacobi,
        Axiom::Cojacobi,
        Axiom::DerivationCompatibility,
        Axiom::ModuleCompatibility,
        Axiom::Drinfeld,
        Axiom::LieModuleCompatibility,
        Axiom::Hopf,
        Axiom::Unit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Associativity => "associativity",
            Axiom::Coassociativity => "coassociativity",
            Axiom::Commutativity => "commutativity",
            Axiom::Cocommutativity => "cocommutativity",
            Axiom::SkewSymmetry => "skew-symmetry",
            Axiom::CoskewSymmetry => "coskew-symmetry",
            Axiom::Jacobi => "jacobi",
            Axiom::Cojacobi => "cojacobi",
            Axiom::DerivationCompatibility => "derivation-compatibility",
            Axiom::ModuleCompatibility => "module-compatibility",
            Axiom::Drinfeld => "drinfeld",
            Axiom::LieModuleCompatibility => "lie-module-compatibility",
            Axiom::Hopf => "hopf",
            Axiom::Unit => "unit",
        }
    }

    /// Number of basis inputs the defining equation takes.
    pub fn arity(self) -> usize {
        match self {
            Axiom::Coassociativity | Axiom::Cocommutativity | Axiom::CoskewSymmetry | Axiom::Cojacobi | Axiom::Unit => 1,
            Axiom::Associativity | Axiom::Jacobi => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Axiom {
    type Err = DialgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Axiom::ALL
            .iter()
            .copied()
            .find(|a| a.name() == s)
            .ok_or_else(|| DialgebraError::UnknownAxiom(s.to_string()))
    }
}

/// Basis tuple on which the sides of an axiom disagree, with the two unequal sides.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness<S: Scalar> {
    pub inputs: Vec<Symbol>,
    pub lhs_label: &'static str,
    pub lhs: TensorSum<Symbol, S>,
    pub rhs_label: &'static str,
    pub rhs: TensorSum<Symbol, S>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AxiomReport<S: Scalar> {
    pub axiom: Axiom,
    pub holds: bool,
    pub witness: Option<Witness<S>>,
    /// Basis tuples examined.
    pub checked: usize,
}

impl<S: Scalar> fmt::Display for Witness<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.inputs.iter().map(|s| s.name()).collect();
        write!(f, "({}): {} = {} but {} = {}", names.join(","), self.lhs_label, one_line(&self.lhs), self.rhs_label, one_line(&self.rhs))
    }
}

fn one_line<S: Scalar>(v: &TensorSum<Symbol, S>) -> String {
    if v.is_zero() {
        return "0".into();
    }
    v.iter().map(|(t, c)| format!("{} {}", c.to_fraction(), t)).collect::<Vec<_>>().join(" + ")
}

fn basis_vec<S: Scalar>(s: &Symbol) -> Vector<S> {
    FormalSum::basis(s.clone())
}

impl<S: Scalar> Dialgebra<S> {
    fn bracket(&self, a: &Vector<S>, b: &Vector<S>) -> Result<Vector<S>, DialgebraError> {
        self.multiply(a, b)
    }

    /// Every expression the axiom requires to be equal on the given basis tuple,
    /// labelled. Exposed so witnesses can be re-evaluated independently of [`check`].
    ///
    /// [`check`]: Dialgebra::check
    pub fn sides(&self, axiom: Axiom, inputs: &[Symbol]) -> Result<Vec<(&'static str, TensorSum<Symbol, S>)>, DialgebraError> {
        if inputs.len() != axiom.arity() {
            return Err(DialgebraError::WitnessArity {
                axiom: axiom.name().into(),
                expected: axiom.arity(),
                found: inputs.len(),
            });
        }
        let inputs: Vec<Symbol> = inputs.iter().map(|s| self.symbol(s.name())).collect::<Result<_, _>>()?;
        let v: Vec<Vector<S>> = inputs.iter().map(basis_vec).collect();
        let zero = TensorSum::<Symbol, S>::zero();
        let out = match axiom {
            Axiom::Associativity => {
                let (a, b, c) = (&v[0], &v[1], &v[2]);
                vec![
                    ("(ab)c", self.multiply(&self.multiply(a, b)?, c)?.lift()),
                    ("a(bc)", self.multiply(a, &self.multiply(b, c)?)?.lift()),
                ]
            }
            Axiom::Coassociativity => {
                let d = self.comultiply(&v[0])?;
                vec![("(∨⊗1)∨a", self.coproduct_at(&d, 0)?), ("(1⊗∨)∨a", self.coproduct_at(&d, 1)?)]
            }
            Axiom::Commutativity | Axiom::SkewSymmetry => {
                let ab = crate::linear::tensor(&v[0].lift(), &v[1].lift());
                let direct = self.product_at(&ab, 0)?;
                let swapped = self.product_at(&swap_graded(&ab)?, 0)?;
                if axiom == Axiom::Commutativity {
                    vec![("ab", direct), ("∧τ(a⊗b)", swapped)]
                } else {
                    vec![("ab", direct), ("-∧τ(a⊗b)", swapped.neg())]
                }
            }
            Axiom::Cocommutativity | Axiom::CoskewSymmetry => {
                let d = self.comultiply(&v[0])?;
                let swapped = swap_graded(&d)?;
                if axiom == Axiom::Cocommutativity {
                    vec![("∨a", d), ("τ∨a", swapped)]
                } else {
                    vec![("∨a", d), ("-τ∨a", swapped.neg())]
                }
            }
            Axiom::Jacobi => {
                let (a, b, c) = (&v[0], &v[1], &v[2]);
                let j = self
                    .bracket(a, &self.bracket(b, c)?)?
                    .plus(&self.bracket(b, &self.bracket(c, a)?)?)
                    .plus(&self.bracket(c, &self.bracket(a, b)?)?);
                vec![("[a,[b,c]]+[b,[c,a]]+[c,[a,b]]", j.lift()), ("0", zero)]
            }
            Axiom::Cojacobi => {
                let dd = self.coproduct_at(&self.comultiply(&v[0])?, 0)?;
                // ρ(x⊗y⊗z) = z⊗x⊗y
                let r1 = permute_factors(&dd, &[2, 0, 1])?;
                let r2 = permute_factors(&r1, &[2, 0, 1])?;
                vec![("(1+ρ+ρ²)(∨⊗1)∨a", dd.plus(&r1).plus(&r2)), ("0", zero)]
            }
            Axiom::DerivationCompatibility => {
                let (a, b) = (&v[0], &v[1]);
                let lhs = self.comultiply(&self.multiply(a, b)?)?;
                let left = self.act_right(&self.comultiply(a)?, b)?;
                let mut right = self.act_left(a, &self.comultiply(b)?)?;
                if self.koszul() {
                    right = right.scaled(&crate::linear::koszul(inputs[0].degree(), self.coproduct().shift()));
                }
                vec![("∨(ab)", lhs), ("(∨a)b+a(∨b)", left.plus(&right))]
            }
            Axiom::ModuleCompatibility => {
                let (a, b) = (&v[0], &v[1]);
                vec![
                    ("∨(ab)", self.comultiply(&self.multiply(a, b)?)?),
                    ("(∨a)b", self.act_right(&self.comultiply(a)?, b)?),
                    ("a(∨b)", self.act_left(a, &self.comultiply(b)?)?),
                ]
            }
            Axiom::Drinfeld => {
                let (a, b) = (&v[0], &v[1]);
                let lhs = self.comultiply(&self.bracket(a, b)?)?;
                let rhs = self.act_lie_right(&self.comultiply(a)?, b)?.plus(&self.act_lie(a, &self.comultiply(b)?)?);
                vec![("∨[a,b]", lhs), ("(∨a)·b+a·(∨b)", rhs)]
            }
            Axiom::LieModuleCompatibility => {
                let (a, b) = (&v[0], &v[1]);
                vec![
                    ("∨[a,b]", self.comultiply(&self.bracket(a, b)?)?),
                    ("(∨a)·b", self.act_lie_right(&self.comultiply(a)?, b)?),
                    ("a·(∨b)", self.act_lie(a, &self.comultiply(b)?)?),
                ]
            }
            Axiom::Hopf => {
                let (a, b) = (&v[0], &v[1]);
                let lhs = self.comultiply(&self.multiply(a, b)?)?;
                let rhs = tensor_square_product(self, &self.comultiply(a)?, &self.comultiply(b)?)?;
                vec![("∨(ab)", lhs), ("∨(a)∨(b)", rhs)]
            }
            Axiom::Unit => {
                let e = basis_vec(self.unit().ok_or(DialgebraError::NoUnit)?);
                let a = &v[0];
                vec![("ea", self.multiply(&e, a)?.lift()), ("a", a.lift()), ("ae", self.multiply(a, &e)?.lift())]
            }
        };
        Ok(out)
    }

    /// Exhaustive check of one axiom over all basis tuples, in basis order.
    ///
    /// `Unit` on a dialgebra without a declared unit holds vacuously.
    pub fn check(&self, axiom: Axiom) -> Result<AxiomReport<S>, DialgebraError> {
        if axiom == Axiom::Unit && self.unit().is_none() {
            return Ok(AxiomReport { axiom, holds: true, witness: None, checked: 0 });
        }
        let mut checked = 0;
        for tuple in basis_tuples(self.basis(), axiom.arity()) {
            checked += 1;
            let sides = self.sides(axiom, &tuple)?;
            let (l0, s0) = &sides[0];
            if let Some((l1, s1)) = sides[1..].iter().find(|(_, s)| s != s0) {
                return Ok(AxiomReport {
                    axiom,
                    holds: false,
                    witness: Some(Witness { inputs: tuple, lhs_label: l0, lhs: s0.clone(), rhs_label: l1, rhs: s1.clone() }),
                    checked,
                });
            }
        }
        Ok(AxiomReport { axiom, holds: true, witness: None, checked })
    }

    pub fn check_named(&self, name: &str) -> Result<AxiomReport<S>, DialgebraError> {
        self.check(name.parse()?)
    }

    /// True when re-evaluating the witness through [`Dialgebra::sides`] reproduces the reported inequality.
    pub fn confirms(&self, report: &AxiomReport<S>) -> bool {
        match &report.witness {
            None => report.holds,
            Some(w) => match self.sides(report.axiom, &w.inputs) {
                Ok(sides) => {
                    let find = |label: &str| sides.iter().find(|(l, _)| *l == label).map(|(_, s)| s);
                    matches!((find(w.lhs_label), find(w.rhs_label)), (Some(l), Some(r)) if *l == w.lhs && *r == w.rhs && l != r)
                }
                Err(_) => false,
            },
        }
    }
}

/// All tuples of basis symbols of length `k`, lexicographic in basis order.
pub fn basis_tuples(basis: &[Symbol], k: usize) -> Vec<Vec<Symbol>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                basis.iter().map(move |s| {
                    let mut t = t.clone();
                    t.push(s.clone());
                    t
                })
            })
            .collect();
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Structure {
    Associative,
    Commutative,
    Lie,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Compatibility {
    Module,
    Derivation,
}

/// One cell of the {associative, commutative, Lie} × {module, derivation} table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub structure: Structure,
    pub compatibility: Compatibility,
}

impl Cell {
    pub const ALL: [Cell; 6] = [
        Cell { structure: Structure::Associative, compatibility: Compatibility::Module },
        Cell { structure: Structure::Associative, compatibility: Compatibility::Derivation },
        Cell { structure: Structure::Commutative, compatibility: Compatibility::Module },
        Cell { structure: Structure::Commutative, compatibility: Compatibility::Derivation },
        Cell { structure: Structure::Lie, compatibility: Compatibility::Module },
        Cell { structure: Structure::Lie, compatibility: Compatibility::Derivation },
    ];

    pub fn new(structure: Structure, compatibility: Compatibility) -> Self {
        Self { structure, compatibility }
    }

    /// Axioms whose conjunction defines the cell.
    pub fn axioms(self) -> Vec<Axiom> {
        use Axiom::*;
        let mut ax = match self.structure {
            Structure::Associative => vec![Associativity, Coassociativity, Unit],
            Structure::Commutative => vec![Associativity, Coassociativity, Unit, Commutativity, Cocommutativity],
            Structure::Lie => vec![SkewSymmetry, CoskewSymmetry, Jacobi, Cojacobi],
        };
        ax.push(match (self.structure, self.compatibility) {
            (Structure::Lie, Compatibility::Module) => LieModuleCompatibility,
            (Structure::Lie, Compatibility::Derivation) => Drinfeld,
            (_, Compatibility::Module) => ModuleCompatibility,
            (_, Compatibility::Derivation) => DerivationCompatibility,
        });
        ax
    }

    pub fn name(self) -> String {
        let s = match self.structure {
            Structure::Associative => "associative",
            Structure::Commutative => "commutative",
            Structure::Lie => "lie",
        };
        let c = match self.compatibility {
            Compatibility::Module => "module",
            Compatibility::Derivation => "derivation",
        };
        format!("{s}/{c}")
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Clone, Debug)]
pub struct Classification<S: Scalar> {
    pub cells: BTreeSet<Cell>,
    pub hopf: bool,
    /// One report per axiom in [`Axiom::ALL`] order.
    pub reports: Vec<AxiomReport<S>>,
}

impl<S: Scalar> Classification<S> {
    pub fn report(&self, axiom: Axiom) -> &AxiomReport<S> {
        self.reports.iter().find(|r| r.axiom == axiom).expect("all axioms are checked")
    }

    /// Failed axioms that keep `cell` out of the classification.
    pub fn blockers(&self, cell: Cell) -> Vec<&AxiomReport<S>> {
        cell.axioms().into_iter().map(|a| self.report(a)).filter(|r| !r.holds).collect()
    }
}

/// Every cell whose full axiom set holds, plus the Hopf condition separately.
pub fn classify<S: Scalar>(d: &Dialgebra<S>) -> Result<Classification<S>, DialgebraError> {
    let reports = Axiom::ALL.iter().map(|&a| d.check(a)).collect::<Result<Vec<_>, _>>()?;
    let holds = |a: Axiom| reports.iter().any(|r| r.axiom == a && r.holds);
    let cells = Cell::ALL.iter().copied().filter(|c| c.axioms().into_iter().all(holds)).collect();
    let hopf = holds(Axiom::Hopf);
    Ok(Classification { cells, hopf, reports })
}
