//! Positive-boundary 1+1 TQFT: bordisms as acyclic wirings of pants, copants,
//! cylinders and twists, evaluated through a dialgebra (pants = `∧`, copants = `∨`).
//!
//! The open sector reuses the same machinery over an associative dialgebra with
//! twists forbidden.

pub mod dag;
pub mod invariance;
pub mod moves;
pub mod text;

use thiserror::Error;

use crate::dialgebra::{Axiom, AxiomReport, Dialgebra, DialgebraError};
use crate::linear::{permute_factors, LinearError, Symbol, TensorSum};
use crate::scalar::Scalar;

pub use dag::{normal_form, BordismDag, Kind, Node, Port, TopologicalType};
pub use invariance::{invariance, InvarianceReport, Mismatch};
pub use moves::{random_decomposition, random_decomposition_in};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TqftError {
    #[error("bordisms need at least one incoming and one outgoing boundary circle")]
    EmptyBoundary,
    #[error("bad or duplicate node id `{0}`")]
    BadNode(String),
    #[error("unknown port `{0}`")]
    UnknownPort(String),
    #[error("port `{0}` wired more than once")]
    PortReused(String),
    #[error("port `{0}` is not wired")]
    Dangling(String),
    #[error("wire `{0} -> {1}` must run from a source port to a destination port")]
    WireDirection(String, String),
    #[error("wiring has a cycle")]
    Cycle,
    #[error("twist is not allowed in the open sector")]
    TwistInOpenSector,
    #[error("input has arity {found}, bordism expects {expected}")]
    InputArity { expected: usize, found: usize },
    #[error(transparent)]
    Dialgebra(#[from] DialgebraError),
}

impl From<LinearError> for TqftError {
    fn from(e: LinearError) -> Self {
        TqftError::Dialgebra(e.into())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sector {
    /// Circles; all four generators.
    Closed,
    /// Intervals with a single boundary label; planar, so no twist.
    Open,
}

impl Sector {
    /// Axioms under which evaluation is independent of the decomposition.
    pub fn gate_axioms(self) -> &'static [Axiom] {
        match self {
            Sector::Closed => &[
                Axiom::Associativity,
                Axiom::Coassociativity,
                Axiom::Commutativity,
                Axiom::Cocommutativity,
                Axiom::ModuleCompatibility,
            ],
            Sector::Open => &[Axiom::Associativity, Axiom::Coassociativity, Axiom::ModuleCompatibility],
        }
    }
}

pub fn gate_frobenius<S: Scalar>(d: &Dialgebra<S>) -> Result<Vec<AxiomReport<S>>, TqftError> {
    gate(d, Sector::Closed)
}

pub fn gate<S: Scalar>(d: &Dialgebra<S>, sector: Sector) -> Result<Vec<AxiomReport<S>>, TqftError> {
    Ok(sector.gate_axioms().iter().map(|&a| d.check(a)).collect::<Result<_, _>>()?)
}

pub fn evaluate<S: Scalar>(d: &Dialgebra<S>, b: &BordismDag, v: &TensorSum<Symbol, S>) -> Result<TensorSum<Symbol, S>, TqftError> {
    evaluate_in(d, b, v, Sector::Closed)
}

/// Applies the bordism to `v`. The state is a tensor whose factors are labelled by
/// the live source ports; each node first permutes its inputs to the tail (with
/// Koszul signs) and then acts on the tail.
pub fn evaluate_in<S: Scalar>(
    d: &Dialgebra<S>,
    b: &BordismDag,
    v: &TensorSum<Symbol, S>,
    sector: Sector,
) -> Result<TensorSum<Symbol, S>, TqftError> {
    let order = b.validate()?;
    if sector == Sector::Open && b.nodes.iter().any(|n| n.kind == Kind::Twist) {
        return Err(TqftError::TwistInOpenSector);
    }
    if let Some((t, _)) = v.iter().find(|(t, _)| t.arity() != b.inputs) {
        return Err(TqftError::InputArity { expected: b.inputs, found: t.arity() });
    }

    let mut live: Vec<Port> = (0..b.inputs).map(Port::In).collect();
    let mut state = v.clone();
    for i in order {
        let node = &b.nodes[i];
        let (ins, outs) = node.kind.arity();
        let feeds: Vec<&Port> = (0..ins).map(|k| &b.wires[&Port::NodeIn(node.id.clone(), k)]).collect();
        let pos: Vec<usize> = feeds.iter().map(|p| live.iter().position(|l| l == *p).unwrap()).collect();
        let mut perm: Vec<usize> = (0..live.len()).filter(|j| !pos.contains(j)).collect();
        perm.extend(&pos);
        state = permuted(&state, &perm)?;
        live = perm.iter().map(|&j| live[j].clone()).collect();

        let offset = live.len() - ins;
        state = match node.kind {
            Kind::Pants => d.product_at(&state, offset)?,
            Kind::Copants => d.coproduct_at(&state, offset)?,
            Kind::Cylinder => state,
            Kind::Twist => {
                let mut sw: Vec<usize> = (0..live.len()).collect();
                sw.swap(offset, offset + 1);
                permuted(&state, &sw)?
            }
        };
        live.truncate(offset);
        live.extend((0..outs).map(|k| Port::NodeOut(node.id.clone(), k)));
    }
    let perm: Vec<usize> = (0..b.outputs)
        .map(|k| {
            let src = &b.wires[&Port::Out(k)];
            live.iter().position(|l| l == src).unwrap()
        })
        .collect();
    permuted(&state, &perm)
}

fn permuted<S: Scalar>(v: &TensorSum<Symbol, S>, perm: &[usize]) -> Result<TensorSum<Symbol, S>, TqftError> {
    if perm.iter().enumerate().all(|(i, &j)| i == j) {
        return Ok(v.clone());
    }
    Ok(permute_factors(v, perm)?)
}

/// Result of evaluating the normal form; `gate_failures` is nonempty when the value
/// depends on the chosen decomposition.
#[derive(Clone, Debug, PartialEq)]
pub struct CanonicalEval<S: Scalar> {
    pub value: TensorSum<Symbol, S>,
    pub gate_failures: Vec<AxiomReport<S>>,
}

impl<S: Scalar> CanonicalEval<S> {
    pub fn warning(&self) -> bool {
        !self.gate_failures.is_empty()
    }
}

pub fn canonical_eval<S: Scalar>(d: &Dialgebra<S>, t: TopologicalType, v: &TensorSum<Symbol, S>) -> Result<CanonicalEval<S>, TqftError> {
    let gate_failures = gate_frobenius(d)?.into_iter().filter(|r| !r.holds).collect();
    Ok(CanonicalEval { value: evaluate(d, &normal_form(t), v)?, gate_failures })
}

/// Every basis tuple of length `k` as a one-term tensor.
pub fn basis_inputs<S: Scalar>(d: &Dialgebra<S>, k: usize) -> Vec<TensorSum<Symbol, S>> {
    crate::dialgebra::axioms::basis_tuples(d.basis(), k)
        .into_iter()
        .map(|t| TensorSum::basis(crate::linear::Tensor::new(t)))
        .collect()
}
