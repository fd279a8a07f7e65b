//! Reduced Groebner bases, ideal membership, elimination ideals, saturation,
//! ideal quotients, and triviality checks.

mod engine;

use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::division;
use crate::division::div_exact;
use crate::error::EngineError;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::{VarRing, VarSet};

pub(crate) use engine::OrdPoly;

/// Caps that turn nontermination-in-practice into a reported error.
///
/// The deadline is absolute so that one budget can cover a whole pipeline of
/// basis computations.
#[derive(Debug, Clone, Copy, Default)]
pub struct Limits {
    pub deadline: Option<Instant>,
    pub max_basis_size: Option<usize>,
}

impl Limits {
    /// No caps at all.
    pub fn none() -> Limits {
        Limits::default()
    }

    /// A wall-clock budget starting now.
    pub fn with_timeout(budget: Duration) -> Limits {
        Limits {
            deadline: Some(Instant::now() + budget),
            max_basis_size: None,
        }
    }

    pub(crate) fn check_time(&self, what: &str) -> Result<(), EngineError> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(EngineError::ResourceLimit(format!(
                "{what}: time budget exhausted"
            ))),
            _ => Ok(()),
        }
    }

    pub(crate) fn check_basis(&self, size: usize) -> Result<(), EngineError> {
        match self.max_basis_size {
            Some(cap) if size > cap => Err(EngineError::ResourceLimit(format!(
                "basis size {size} exceeds cap {cap}"
            ))),
            _ => Ok(()),
        }
    }
}

/// A polynomial ideal given by a finite generating set.
///
/// Zero generators are dropped on construction; the empty list denotes the
/// zero ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Arc<VarRing>,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new<I: IntoIterator<Item = Polynomial>>(ring: &Arc<VarRing>, gens: I) -> Ideal {
        let generators: Vec<Polynomial> = gens
            .into_iter()
            .inspect(|g| {
                assert!(
                    VarRing::same(g.ring(), ring),
                    "generator from a different ring"
                )
            })
            .filter(|g| !g.is_zero())
            .collect();
        Ideal {
            ring: Arc::clone(ring),
            generators,
        }
    }

    pub fn zero(ring: &Arc<VarRing>) -> Ideal {
        Ideal::new(ring, [])
    }

    pub fn ring(&self) -> &Arc<VarRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }
}

/// A reduced Groebner basis: unique for a given ideal and order, elements
/// integer-primitive with positive leading coefficient, sorted ascending by
/// leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    pub elements: Vec<Polynomial>,
    ring: Arc<VarRing>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<VarRing> {
        &self.ring
    }

    /// True when the basis generates the whole ring.
    pub fn contains_one(&self) -> bool {
        self.elements
            .first()
            .is_some_and(|p| p.is_constant() && !p.is_zero())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|p| {
                p.leading_monomial_under(&self.order)
                    .expect("basis elements are nonzero")
                    .clone()
            })
            .collect()
    }

    /// Field normal form of `f` against this basis.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        division::normal_form(f, &self.elements, &self.order)
    }

    /// Membership test via fraction-free reduction.
    pub fn contains(&self, f: &Polynomial, limits: &Limits) -> Result<bool, EngineError> {
        let basis: Vec<OrdPoly> = self
            .elements
            .iter()
            .map(|p| OrdPoly::from_polynomial(p, &self.order))
            .collect();
        engine::reduces_to_zero(f, &basis, &self.order, limits)
    }
}

/// Computes the reduced Groebner basis of `ideal` under `order`.
pub fn groebner_basis(
    ideal: &Ideal,
    order: &MonomialOrder,
    limits: &Limits,
) -> Result<GroebnerBasis, EngineError> {
    let input: Vec<OrdPoly> = ideal
        .generators
        .iter()
        .map(|p| OrdPoly::from_polynomial(p, order))
        .collect();
    let basis = engine::buchberger(input, order, limits)?;
    let reduced = engine::autoreduce(basis, order, limits)?;
    Ok(GroebnerBasis {
        order: order.clone(),
        elements: reduced
            .iter()
            .map(|p| p.to_polynomial(&ideal.ring))
            .collect(),
        ring: Arc::clone(&ideal.ring),
    })
}

/// True if and only if `f` lies in the ideal.
pub fn ideal_membership(
    f: &Polynomial,
    ideal: &Ideal,
    limits: &Limits,
) -> Result<bool, EngineError> {
    let gb = groebner_basis(ideal, &MonomialOrder::GrevLex, limits)?;
    gb.contains(f, limits)
}

/// True if and only if 1 lies in the ideal.
pub fn is_trivial(ideal: &Ideal, limits: &Limits) -> Result<bool, EngineError> {
    Ok(groebner_basis(ideal, &MonomialOrder::GrevLex, limits)?.contains_one())
}

/// Generators of the elimination ideal `I ∩ K[keep]`, returned in the
/// original ring (every generator supported only on `keep`).
///
/// For `keep = ∅` the constants-only convention applies: `[1]` when the ideal
/// is trivial, empty otherwise.
pub(crate) fn elimination_generators(
    ideal: &Ideal,
    keep: VarSet,
    limits: &Limits,
) -> Result<Vec<Polynomial>, EngineError> {
    let front = keep.complement(ideal.ring.arity());
    let order = MonomialOrder::elimination(front);
    let gb = groebner_basis(ideal, &order, limits)?;
    Ok(gb
        .elements
        .into_iter()
        .filter(|p| p.is_supported_on(keep))
        .collect())
}

/// The elimination ideal `I ∩ K[keep]` as an ideal of the subring on `keep`.
pub fn elimination_ideal(
    ideal: &Ideal,
    keep: VarSet,
    limits: &Limits,
) -> Result<Ideal, EngineError> {
    let sub = ideal.ring.subring(keep);
    let gens = elimination_generators(ideal, keep, limits)?;
    let restricted: Vec<Polynomial> = gens
        .iter()
        .map(|g| g.restrict_to(&sub).expect("supported on keep"))
        .collect();
    Ok(Ideal::new(&sub, restricted))
}

/// The saturation `I : f^∞`, the set of g with `f^k * g` in `I` for some k.
///
/// Computed by adjoining a fresh variable t, the relation `f*t - 1`, and
/// eliminating t with t in the front block. The fresh variable never escapes:
/// all returned generators live in the original ring.
pub fn saturation(ideal: &Ideal, f: &Polynomial, limits: &Limits) -> Result<Ideal, EngineError> {
    let ext = ideal.ring.extended_internal();
    let t = Polynomial::variable(&ext, ext.arity() - 1);
    let mut gens: Vec<Polynomial> = ideal.generators.iter().map(|g| g.lift_to(&ext)).collect();
    gens.push(&(&f.lift_to(&ext) * &t) - &Polynomial::one(&ext));
    let extended = Ideal::new(&ext, gens);
    let keep = VarSet::full(ideal.ring.arity());
    let result = elimination_generators(&extended, keep, limits)?;
    let back: Vec<Polynomial> = result
        .iter()
        .map(|g| g.restrict_to(&ideal.ring).expect("t eliminated"))
        .collect();
    Ok(Ideal::new(&ideal.ring, back))
}

/// The ideal quotient `(I : f) = {g : f*g ∈ I}`.
///
/// Computed as the intersection `I ∩ <f>` via the fresh-variable trick
/// `t*I + (1-t)*<f>`, with every intersection generator divided exactly by f.
pub fn ideal_quotient(
    ideal: &Ideal,
    f: &Polynomial,
    limits: &Limits,
) -> Result<Ideal, EngineError> {
    if f.is_zero() {
        return Err(EngineError::ZeroPolynomial);
    }
    let ext = ideal.ring.extended_internal();
    let t = Polynomial::variable(&ext, ext.arity() - 1);
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let mut gens: Vec<Polynomial> = ideal
        .generators
        .iter()
        .map(|g| &g.lift_to(&ext) * &t)
        .collect();
    gens.push(&f.lift_to(&ext) * &one_minus_t);
    let mixed = Ideal::new(&ext, gens);
    let keep = VarSet::full(ideal.ring.arity());
    let intersection = elimination_generators(&mixed, keep, limits)?;
    let quotient: Vec<Polynomial> = intersection
        .iter()
        .map(|g| {
            let g0 = g.restrict_to(&ideal.ring).expect("t eliminated");
            div_exact(&g0, f).expect("intersection generators are multiples of f")
        })
        .collect();
    Ok(Ideal::new(&ideal.ring, quotient))
}
