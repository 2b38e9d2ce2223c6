//! Axiom check verdicts and failure witnesses.
//!
//! Every checker in the crate reports through [`AxiomReport`]: a named
//! axiom, a pass flag, and on failure a [`Witness`] carrying the violating
//! basis input together with both evaluated sides, as raw coefficient
//! vectors and pretty-printed basis combinations.

use alloc::string::String;
use alloc::vec::Vec;

use crate::linmap::LinearMap;
use crate::scalar::{pretty_dense, Scalar};

/// A basis-level counterexample: the input on which two sides of an
/// identity differ, and both evaluated sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Pretty basis-tuple label of the violating input, when the identity
    /// is a map identity (element identities have no input).
    pub input: Option<String>,
    /// Index of the violating basis vector / coordinate.
    pub input_index: usize,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
    pub lhs_pretty: String,
    pub rhs_pretty: String,
}

/// Verdict of one axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom_id: String,
    pub passed: bool,
    pub witness: Option<Witness>,
}

impl AxiomReport {
    pub fn pass(axiom_id: &str) -> Self {
        AxiomReport {
            axiom_id: axiom_id.into(),
            passed: true,
            witness: None,
        }
    }

    pub fn fail(axiom_id: &str, witness: Witness) -> Self {
        AxiomReport {
            axiom_id: axiom_id.into(),
            passed: false,
            witness: Some(witness),
        }
    }
}

/// Ordered tensor legs with basis names, for decoding flat indices into
/// labelled tuples like `g⊗x⊗1`.
pub struct Legs<'a> {
    legs: Vec<&'a [String]>,
}

impl<'a> Legs<'a> {
    pub fn new(legs: Vec<&'a [String]>) -> Self {
        Legs { legs }
    }

    pub fn dim(&self) -> usize {
        self.legs.iter().map(|l| l.len()).product()
    }

    pub fn label(&self, mut idx: usize) -> String {
        let mut parts: Vec<&str> = Vec::with_capacity(self.legs.len());
        for leg in self.legs.iter().rev() {
            let d = leg.len();
            parts.push(&leg[idx % d]);
            idx /= d;
        }
        parts.reverse();
        parts.join("⊗")
    }
}

/// Compares two maps with the same domain/codomain entrywise and produces
/// a report. `domain` and `codomain` label the legs for the witness.
pub fn compare_maps(
    axiom_id: &str,
    lhs: &LinearMap,
    rhs: &LinearMap,
    domain: &Legs<'_>,
    codomain: &Legs<'_>,
) -> AxiomReport {
    debug_assert_eq!(lhs.rows(), rhs.rows(), "{axiom_id}: row mismatch");
    debug_assert_eq!(lhs.cols(), rhs.cols(), "{axiom_id}: col mismatch");
    match lhs.first_difference(rhs) {
        None => AxiomReport::pass(axiom_id),
        Some(j) => AxiomReport::fail(
            axiom_id,
            witness_at(j, &lhs.dense_col(j), &rhs.dense_col(j), domain, codomain),
        ),
    }
}

/// Compares two coefficient vectors (element identities); the "input" of
/// the witness is the first differing coordinate.
pub fn compare_vectors(
    axiom_id: &str,
    lhs: &LinearMap,
    rhs: &LinearMap,
    codomain: &Legs<'_>,
) -> AxiomReport {
    debug_assert_eq!(lhs.cols(), 1);
    debug_assert_eq!(rhs.cols(), 1);
    if lhs.first_difference(rhs).is_none() {
        return AxiomReport::pass(axiom_id);
    }
    let l = lhs.dense_col(0);
    let r = rhs.dense_col(0);
    let first = (0..l.len()).find(|&i| l[i] != r[i]).unwrap_or(0);
    AxiomReport::fail(
        axiom_id,
        Witness {
            input: Some(codomain.label(first)),
            input_index: first,
            lhs_pretty: pretty_dense(&l, |i| codomain.label(i)),
            rhs_pretty: pretty_dense(&r, |i| codomain.label(i)),
            lhs: l,
            rhs: r,
        },
    )
}

pub fn witness_at(
    input_index: usize,
    lhs: &[Scalar],
    rhs: &[Scalar],
    domain: &Legs<'_>,
    codomain: &Legs<'_>,
) -> Witness {
    Witness {
        input: Some(domain.label(input_index)),
        input_index,
        lhs: lhs.to_vec(),
        rhs: rhs.to_vec(),
        lhs_pretty: pretty_dense(lhs, |i| codomain.label(i)),
        rhs_pretty: pretty_dense(rhs, |i| codomain.label(i)),
    }
}
