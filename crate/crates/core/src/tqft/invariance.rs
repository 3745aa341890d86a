//! Decomposition-independence harness: compare random decompositions against the
//! normal form on every basis input.

use super::dag::{normal_form, BordismDag, TopologicalType};
use super::{basis_inputs, evaluate_in, gate, Sector, TqftError};
use crate::dialgebra::{AxiomReport, Dialgebra};
use crate::linear::{Symbol, TensorSum};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct Mismatch<S: Scalar> {
    pub ty: TopologicalType,
    pub seed: u64,
    pub input: TensorSum<Symbol, S>,
    pub canonical: TensorSum<Symbol, S>,
    pub found: TensorSum<Symbol, S>,
    pub dag: BordismDag,
}

#[derive(Clone, Debug)]
pub struct InvarianceReport<S: Scalar> {
    pub gate: Vec<AxiomReport<S>>,
    pub types: usize,
    pub decompositions: usize,
    pub evaluations: usize,
    pub mismatch: Option<Mismatch<S>>,
}

impl<S: Scalar> InvarianceReport<S> {
    pub fn gate_passed(&self) -> bool {
        self.gate.iter().all(|r| r.holds)
    }
}

/// The per-sample seed for a type, so every type gets its own stream.
pub fn sample_seed(seed: u64, t: TopologicalType, sample: usize) -> u64 {
    let ty = ((t.genus as u64) << 16) | ((t.inputs as u64) << 8) | t.outputs as u64;
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ (ty << 24) ^ sample as u64
}

/// Runs all types with `g ≤ genus_max`, `1 ≤ m, n ≤ ports_max`, `samples`
/// decompositions each, stopping at the first disagreement.
pub fn invariance<S: Scalar>(
    d: &Dialgebra<S>,
    sector: Sector,
    genus_max: usize,
    ports_max: usize,
    samples: usize,
    seed: u64,
) -> Result<InvarianceReport<S>, TqftError> {
    let mut rep = InvarianceReport { gate: gate(d, sector)?, types: 0, decompositions: 0, evaluations: 0, mismatch: None };
    for g in 0..=genus_max {
        for m in 1..=ports_max {
            let inputs = basis_inputs(d, m);
            for n in 1..=ports_max {
                let ty = TopologicalType::new(g, m, n)?;
                rep.types += 1;
                let normal = normal_form(ty);
                let expected: Vec<_> = inputs.iter().map(|v| evaluate_in(d, &normal, v, sector)).collect::<Result<_, _>>()?;
                for s in 0..samples {
                    let sd = sample_seed(seed, ty, s);
                    let dag = super::random_decomposition_in(ty, sd, sector);
                    rep.decompositions += 1;
                    for (v, want) in inputs.iter().zip(&expected) {
                        let got = evaluate_in(d, &dag, v, sector)?;
                        rep.evaluations += 1;
                        if &got != want {
                            rep.mismatch =
                                Some(Mismatch { ty, seed: sd, input: v.clone(), canonical: want.clone(), found: got, dag });
                            return Ok(rep);
                        }
                    }
                }
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dialgebra::examples;
    use crate::tqft::evaluate;
    use crate::Rational;

    #[test]
    fn dual_numbers_invariant() {
        let r = invariance(&examples::dual_numbers::<Rational>(), Sector::Closed, 1, 2, 5, 7).unwrap();
        assert!(r.gate_passed());
        assert!(r.mismatch.is_none());
        assert_eq!(r.types, 8);
    }

    #[test]
    fn matrix_units_invariant_in_open_sector() {
        let r = invariance(&examples::matrix_units::<Rational>(2), Sector::Open, 1, 2, 5, 3).unwrap();
        assert!(r.gate_passed());
        assert!(r.mismatch.is_none());
    }

    #[test]
    fn mutation_is_detected_and_reproducible() {
        let d = examples::mutated_dual_numbers::<Rational>();
        let r = invariance(&d, Sector::Closed, 2, 3, 20, 0).unwrap();
        assert!(!r.gate_passed());
        let m = r.mismatch.expect("a disagreeing decomposition");
        assert_eq!(evaluate(&d, &m.dag, &m.input).unwrap(), m.found);
        assert_eq!(evaluate(&d, &normal_form(m.ty), &m.input).unwrap(), m.canonical);
        assert_ne!(m.found, m.canonical);
    }
}
