//! Hilbert dimension and independent variable sets.
//!
//! A set of variables Y is independent modulo an ideal I when I ∩ `K[Y]` is the
//! zero ideal. The Hilbert (Krull) dimension of `K[X]`/I equals the maximum
//! cardinality of an independent set, and that maximum is witnessed by a set
//! that is independent already modulo the leading-term ideal of any one
//! Groebner basis. Leading-term independence is sufficient but not necessary
//! for exact independence, so the declared-set check below uses elimination.

use crate::error::EngineError;
use crate::groebner::{elimination_generators, groebner_basis, Ideal, Limits};
use crate::monomial::MonomialOrder;
use crate::ring::VarSet;

/// Dimension together with one witness of maximum size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionCertificate {
    pub dimension: usize,
    /// Independent modulo the leading-term ideal; size equals `dimension`.
    pub witness: VarSet,
}

// Finds the lexicographically first subset of size `k` (ascending index
// tuples) such that no leading-monomial support is contained in it.
fn first_free_subset(supports: &[VarSet], arity: usize, k: usize) -> Option<VarSet> {
    fn rec(
        supports: &[VarSet],
        arity: usize,
        k: usize,
        start: usize,
        acc: VarSet,
    ) -> Option<VarSet> {
        if acc.len() == k {
            return Some(acc);
        }
        let need = k - acc.len();
        for i in start..arity {
            if arity - i < need {
                break;
            }
            let mut next = acc;
            next.insert(i);
            // Prune: a set swallowing a full support is dead with all of its
            // supersets.
            if supports.iter().any(|s| s.is_subset_of(next)) {
                continue;
            }
            if let Some(found) = rec(supports, arity, k, i + 1, next) {
                return Some(found);
            }
        }
        None
    }
    // Empty supports never occur here (trivial ideal rejected earlier).
    rec(supports, arity, k, 0, VarSet::EMPTY)
}

pub(crate) fn dimension_from_leading_supports(
    supports: &[VarSet],
    arity: usize,
) -> DimensionCertificate {
    for k in (0..=arity).rev() {
        if let Some(witness) = first_free_subset(supports, arity, k) {
            return DimensionCertificate {
                dimension: k,
                witness,
            };
        }
    }
    // k = 0 always succeeds with the empty set.
    DimensionCertificate {
        dimension: 0,
        witness: VarSet::EMPTY,
    }
}

/// Hilbert dimension of a proper ideal, with a maximum-size witness set.
///
/// The zero ideal has dimension equal to the ring arity; the trivial ideal is
/// rejected.
pub fn hilbert_dimension(
    ideal: &Ideal,
    limits: &Limits,
) -> Result<DimensionCertificate, EngineError> {
    let gb = groebner_basis(ideal, &MonomialOrder::GrevLex, limits)?;
    if gb.contains_one() {
        return Err(EngineError::TrivialIdeal);
    }
    let supports: Vec<VarSet> = gb.leading_monomials().iter().map(|m| m.support()).collect();
    Ok(dimension_from_leading_supports(
        &supports,
        ideal.ring().arity(),
    ))
}

/// Exact independence test: true iff `I ∩ K[Y]` is the zero ideal.
pub fn is_independent_set(ideal: &Ideal, y: VarSet, limits: &Limits) -> Result<bool, EngineError> {
    Ok(elimination_generators(ideal, y, limits)?.is_empty())
}

/// The lexicographically first maximum-size independent set in declared
/// variable order.
pub fn maximal_independent_set(ideal: &Ideal, limits: &Limits) -> Result<VarSet, EngineError> {
    let gb = groebner_basis(ideal, &MonomialOrder::GrevLex, limits)?;
    if gb.contains_one() {
        return Err(EngineError::TrivialIdeal);
    }
    let supports: Vec<VarSet> = gb.leading_monomials().iter().map(|m| m.support()).collect();
    let arity = ideal.ring().arity();
    let d = dimension_from_leading_supports(&supports, arity).dimension;

    // Walk size-d subsets in lexicographic order; accept on leading-term
    // independence (free) and fall back to the exact elimination test where
    // that sufficient condition fails.
    let mut found: Option<VarSet> = None;
    let mut stack: Vec<(usize, VarSet)> = vec![(0, VarSet::EMPTY)];
    'search: while let Some((start, acc)) = stack.pop() {
        if acc.len() == d {
            if !supports.iter().any(|s| s.is_subset_of(acc)) {
                found = Some(acc);
                break 'search;
            }
            if is_independent_set(ideal, acc, limits)? {
                found = Some(acc);
                break 'search;
            }
            continue;
        }
        let need = d - acc.len();
        // Push in reverse so the smallest index is explored first.
        for i in (start..arity).rev() {
            if arity - i < need {
                continue;
            }
            let mut next = acc;
            next.insert(i);
            stack.push((i + 1, next));
        }
    }
    found.ok_or_else(|| EngineError::Internal("no independent set of dimension size found".into()))
}
