//! Zero-divisor oracle over a function field.
//!
//! For a hypothesis ideal H with independent variables Y and main variables
//! Z = X \ Y, the extension H' = H·`K(Y)[Z]` is handled entirely through
//! polynomials in `K[Y ∪ Z]`: a Groebner basis under a block order with Z in
//! front is a basis of H', and division by leading coefficients in `K[Y]`
//! (units of K(Y)) is done symbolically by cross-multiplying.
//!
//! When Y has maximum size, H' is zero-dimensional over K(Y); adjoining the
//! squarefree part of each variable's univariate eliminant then yields the
//! radical, and a statement is true on parts, false on parts exactly when the
//! thesis is a nonzero zero divisor modulo that radical.

use std::sync::Arc;

use crate::error::EngineError;
use crate::gcd::{poly_gcd, squarefree_part};
use crate::groebner::{elimination_generators, groebner_basis, ideal_quotient, Ideal, Limits};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::{VarRing, VarSet};

/// An ideal of `K(Y)[Z]` represented by polynomials of `K[Y ∪ Z]`.
#[derive(Debug, Clone)]
pub struct FunctionFieldIdeal {
    /// Parameters Y, inverted coefficients.
    pub parameters: VarSet,
    /// Main variables Z.
    pub main_vars: VarSet,
    /// Block-order Groebner basis; no element is supported entirely on Y.
    pub basis: Vec<Polynomial>,
    ring: Arc<VarRing>,
    order: MonomialOrder,
}

/// How a polynomial sits in `K(Y)[Z]` modulo a radical zero-dimensional ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroDivisorStatus {
    /// The class of f is zero (f lies in the ideal).
    Zero,
    /// f is a nonzero zero divisor.
    ZeroDivisor,
    /// f is regular (possibly a unit).
    Regular,
}

// Splits p into groups sharing the same Z-part; returns the groups keyed by
// Z-monomial, largest first under Z-grevlex (canonical order on projections).
fn z_groups(p: &Polynomial, z: VarSet) -> Vec<(Monomial, Polynomial)> {
    let mut groups: Vec<(Monomial, Vec<(Monomial, num_rational::BigRational)>)> = Vec::new();
    for t in p.terms() {
        let zpart = t.monomial.project(z);
        let ypart = t.monomial.project(z.complement(t.monomial.arity()));
        match groups.iter_mut().find(|(m, _)| *m == zpart) {
            Some((_, bucket)) => bucket.push((ypart, t.coefficient.clone())),
            None => groups.push((zpart, vec![(ypart, t.coefficient.clone())])),
        }
    }
    groups.sort_by(|a, b| b.0.cmp(&a.0));
    groups
        .into_iter()
        .map(|(m, bucket)| (m, Polynomial::from_terms(p.ring(), bucket)))
        .collect()
}

impl FunctionFieldIdeal {
    pub fn ring(&self) -> &Arc<VarRing> {
        &self.ring
    }

    /// Pseudo normal form of `f` modulo this basis over K(Y): the result is a
    /// nonzero `K[Y]`-multiple of the true normal form, so it vanishes exactly
    /// when f lies in the extended ideal.
    pub fn normal_form(&self, f: &Polynomial, limits: &Limits) -> Result<Polynomial, EngineError> {
        let z = self.main_vars;
        let leads: Vec<(Monomial, Polynomial, &Polynomial)> = self
            .basis
            .iter()
            .map(|g| {
                let groups = z_groups(g, z);
                let (lm, lc) = groups.into_iter().next().expect("basis elements nonzero");
                (lm, lc, g)
            })
            .collect();

        let mut work = f.lift_to(&self.ring);
        let mut blocked: Vec<Monomial> = Vec::new();
        let mut ticks = 0usize;
        loop {
            ticks += 1;
            if ticks.is_multiple_of(16) {
                limits.check_time("function field reduction")?;
            }
            let groups = z_groups(&work, z);
            let mut reduced = false;
            for (zm, ylc) in &groups {
                if blocked.contains(zm) {
                    continue;
                }
                match leads.iter().find(|(lm, _, _)| lm.divides(zm)) {
                    Some((lm, glc, g)) => {
                        let m = zm.div(lm);
                        // glc * work - ylc * m * g cancels the whole group;
                        // stripping integer content caps coefficient growth.
                        work = &(glc * &work) - &(ylc * &g.mul_monomial(&m));
                        work = crate::gcd::normalize_primitive(&work);
                        reduced = true;
                        break;
                    }
                    None => blocked.push(zm.clone()),
                }
            }
            if !reduced {
                return Ok(work);
            }
        }
    }

    /// Membership in the extended ideal H'.
    pub fn contains(&self, f: &Polynomial, limits: &Limits) -> Result<bool, EngineError> {
        Ok(self.normal_form(f, limits)?.is_zero())
    }

    /// The basis viewed as an ideal of `K[Y ∪ Z]`.
    pub fn contraction_generators(&self) -> Ideal {
        Ideal::new(&self.ring, self.basis.iter().cloned())
    }
}

/// Extends H to `K(Y)[Z]` for Z the complement of `y`.
///
/// Fails with `NotIndependent` when the block basis contains an element
/// supported entirely on Y, which happens exactly when Y is dependent.
pub fn extend_to_function_field(
    h: &Ideal,
    y: VarSet,
    limits: &Limits,
) -> Result<FunctionFieldIdeal, EngineError> {
    let ring = h.ring();
    let z = y.complement(ring.arity());
    let order = MonomialOrder::elimination(z);
    let gb = groebner_basis(h, &order, limits)?;
    for p in &gb.elements {
        if p.is_supported_on(y) {
            return Err(EngineError::NotIndependent(ring.set_to_string(y)));
        }
    }
    Ok(FunctionFieldIdeal {
        parameters: y,
        main_vars: z,
        basis: gb.elements,
        ring: Arc::clone(ring),
        order,
    })
}

/// Radical via univariate eliminants: for each main variable z with a nonzero
/// eliminant m_z in H' ∩ `K(Y)[z]`, adjoin the squarefree part of m_z.
///
/// With a maximum-size Y every main variable has an eliminant and the result
/// is exactly the radical of H'. Main variables without an eliminant (Y
/// independent but not of maximum size) are skipped; the closure is then
/// still contained in the radical.
pub fn radical_zero_dimensional(
    e: &FunctionFieldIdeal,
    limits: &Limits,
) -> Result<FunctionFieldIdeal, EngineError> {
    let contraction = e.contraction_generators();
    let mut gens = e.basis.clone();
    for zv in e.main_vars.iter() {
        let keep = e.parameters.union(VarSet::singleton(zv));
        let elim = elimination_generators(&contraction, keep, limits)?;
        if elim.is_empty() {
            continue;
        }
        let mut eliminant = Polynomial::zero(&e.ring);
        for g in &elim {
            eliminant = poly_gcd(&eliminant, g);
        }
        gens.push(squarefree_part(&eliminant, zv)?);
    }
    let closed = Ideal::new(&e.ring, gens);
    let gb = groebner_basis(&closed, &e.order, limits)?;
    for p in &gb.elements {
        if p.is_supported_on(e.parameters) {
            return Err(EngineError::NotIndependent(
                e.ring.set_to_string(e.parameters),
            ));
        }
    }
    Ok(FunctionFieldIdeal {
        parameters: e.parameters,
        main_vars: e.main_vars,
        basis: gb.elements,
        ring: Arc::clone(&e.ring),
        order: e.order.clone(),
    })
}

/// Classifies `f` modulo a radical zero-dimensional `r`.
///
/// Strict growth of `(r : f)` over `r` is detected by testing each quotient
/// generator for membership, which avoids comparing bases across
/// normalizations.
pub fn zero_divisor_status(
    f: &Polynomial,
    r: &FunctionFieldIdeal,
    limits: &Limits,
) -> Result<ZeroDivisorStatus, EngineError> {
    if r.contains(f, limits)? {
        return Ok(ZeroDivisorStatus::Zero);
    }
    let quotient = ideal_quotient(&r.contraction_generators(), &f.lift_to(&r.ring), limits)?;
    for q in quotient.generators() {
        if !r.contains(q, limits)? {
            return Ok(ZeroDivisorStatus::ZeroDivisor);
        }
    }
    Ok(ZeroDivisorStatus::Regular)
}

/// The oracle: true exactly when `f` is a nonzero zero divisor modulo the
/// radical of the extension of `h` by inverting `K[Y]`.
pub fn zero_divisor_test(
    h: &Ideal,
    f: &Polynomial,
    y: VarSet,
    limits: &Limits,
) -> Result<bool, EngineError> {
    let e = extend_to_function_field(h, y, limits)?;
    let r = radical_zero_dimensional(&e, limits)?;
    Ok(zero_divisor_status(f, &r, limits)? == ZeroDivisorStatus::ZeroDivisor)
}
