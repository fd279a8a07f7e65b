//! Buchberger's algorithm over integer-primitive term lists.
//!
//! The engine works fraction-free: polynomials are scaled to integer
//! coefficients, reduction steps cross-multiply by leading coefficients, and
//! contents are stripped after each full reduction. Paired with the update
//! criteria of Gebauer and Moeller this keeps the classical algorithm usable
//! at the scale of real geometric hypothesis systems.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::EngineError;
use crate::groebner::Limits;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;

/// A polynomial as a term list sorted descending under one fixed task order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct OrdPoly {
    pub terms: Vec<(Monomial, BigInt)>,
}

impl OrdPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    /// Converts from the public representation, clearing denominators and
    /// stripping content (integer-primitive, positive leading coefficient).
    pub fn from_polynomial(p: &Polynomial, order: &MonomialOrder) -> OrdPoly {
        let mut l = BigInt::one();
        for t in p.terms() {
            l = l.lcm(t.coefficient.denom());
        }
        let mut terms: Vec<(Monomial, BigInt)> = p
            .terms()
            .iter()
            .map(|t| {
                (
                    t.monomial.clone(),
                    t.coefficient.numer() * (&l / t.coefficient.denom()),
                )
            })
            .collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        strip_content(&mut terms);
        OrdPoly { terms }
    }

    pub fn to_polynomial(&self, p_ring: &std::sync::Arc<crate::ring::VarRing>) -> Polynomial {
        Polynomial::from_terms(
            p_ring,
            self.terms.iter().map(|(m, c)| {
                (
                    m.clone(),
                    num_rational::BigRational::from_integer(c.clone()),
                )
            }),
        )
    }
}

fn strip_content(terms: &mut [(Monomial, BigInt)]) {
    if terms.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for (_, c) in terms.iter() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if terms[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, c) in terms.iter_mut() {
            *c = &*c / &g;
        }
    }
}

// alpha * a - beta * (m * b), inputs sorted descending under `order`.
fn combine(
    a: &[(Monomial, BigInt)],
    alpha: &BigInt,
    b: &[(Monomial, BigInt)],
    beta: &BigInt,
    m: &Monomial,
    order: &MonomialOrder,
) -> Vec<(Monomial, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let bm = b[j].0.mul(m);
        match order.cmp(&a[i].0, &bm) {
            Ordering::Greater => {
                out.push((a[i].0.clone(), alpha * &a[i].1));
                i += 1;
            }
            Ordering::Less => {
                out.push((bm, -(beta * &b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = alpha * &a[i].1 - beta * &b[j].1;
                if !c.is_zero() {
                    out.push((bm, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    while i < a.len() {
        out.push((a[i].0.clone(), alpha * &a[i].1));
        i += 1;
    }
    while j < b.len() {
        out.push((b[j].0.mul(m), -(beta * &b[j].1)));
        j += 1;
    }
    out
}

/// Full reduction of `f` by `basis`; the result has no term divisible by any
/// basis leading monomial. Fraction-free, so the result is a nonzero rational
/// multiple of the field normal form; content is stripped at the end.
pub(crate) fn reduce_full(
    f: OrdPoly,
    basis: &[OrdPoly],
    order: &MonomialOrder,
    limits: &Limits,
) -> Result<OrdPoly, EngineError> {
    let mut done: Vec<(Monomial, BigInt)> = Vec::new();
    let mut work = f.terms;
    let mut ticks = 0usize;
    while let Some((mono, coeff)) = work.first().cloned() {
        ticks += 1;
        if ticks.is_multiple_of(64) {
            limits.check_time("reduction")?;
        }
        // Prefer the reducer with the fewest terms; this keeps fill-in low
        // and the choice is deterministic.
        let reducer = basis
            .iter()
            .filter(|g| !g.is_zero() && g.lm().divides(&mono))
            .min_by_key(|g| g.terms.len());
        match reducer {
            Some(g) => {
                let gamma = coeff.gcd(g.lc());
                let alpha = g.lc() / &gamma;
                let beta = &coeff / &gamma;
                let m = mono.div(g.lm());
                work = combine(&work, &alpha, &g.terms, &beta, &m, order);
                if !alpha.is_one() {
                    for (_, c) in done.iter_mut() {
                        *c = &*c * &alpha;
                    }
                }
            }
            None => {
                done.push((mono, coeff));
                work.remove(0);
            }
        }
    }
    strip_content(&mut done);
    Ok(OrdPoly { terms: done })
}

fn s_polynomial(f: &OrdPoly, g: &OrdPoly, order: &MonomialOrder) -> OrdPoly {
    let tau = f.lm().lcm(g.lm());
    let gamma = f.lc().gcd(g.lc());
    let alpha = g.lc() / &gamma;
    let beta = f.lc() / &gamma;
    let mf = tau.div(f.lm());
    let mg = tau.div(g.lm());
    // alpha * mf * f - beta * mg * g; route through `combine` by premultiplying f.
    let shifted: Vec<(Monomial, BigInt)> = f
        .terms
        .iter()
        .map(|(m, c)| (m.mul(&mf), &alpha * c))
        .collect();
    OrdPoly {
        terms: combine(&shifted, &BigInt::one(), &g.terms, &beta, &mg, order),
    }
}

#[derive(Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    seq: usize,
}

/// Installs the pairs for a newly appended basis element `t`, applying the
/// Gebauer-Moeller B, M and F criteria plus the product criterion.
fn update_pairs(pairs: &mut Vec<Pair>, basis: &[OrdPoly], t: usize, seq: &mut usize) {
    let lt = basis[t].lm();

    // B criterion: the new element supersedes old pairs whose lcm it divides
    // strictly "between" the two old lcm corners.
    pairs.retain(|p| {
        !(lt.divides(&p.lcm)
            && basis[p.i].lm().lcm(lt) != p.lcm
            && basis[p.j].lm().lcm(lt) != p.lcm)
    });

    let mut cand: Vec<(usize, Monomial)> = (0..t)
        .filter(|&i| !basis[i].is_zero())
        .map(|i| (i, basis[i].lm().lcm(lt)))
        .collect();

    // M criterion: drop candidates whose lcm is a proper multiple of another
    // candidate's lcm.
    let mut keep = vec![true; cand.len()];
    for a in 0..cand.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..cand.len() {
            if a == b || !keep[b] {
                continue;
            }
            if cand[b].1.divides(&cand[a].1) && cand[b].1 != cand[a].1 {
                keep[a] = false;
                break;
            }
        }
    }
    let survivors: Vec<(usize, Monomial)> = cand
        .drain(..)
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(c, _)| c)
        .collect();

    // F criterion: one representative per lcm value; a class containing a
    // coprime pair contributes nothing at all.
    let mut used: Vec<Monomial> = Vec::new();
    for (i, lcm) in &survivors {
        if used.contains(lcm) {
            continue;
        }
        used.push(lcm.clone());
        let class_has_coprime = survivors
            .iter()
            .filter(|(_, l)| l == lcm)
            .any(|(k, _)| basis[*k].lm().is_coprime_with(lt));
        if class_has_coprime {
            continue;
        }
        pairs.push(Pair {
            i: *i,
            j: t,
            lcm: lcm.clone(),
            seq: *seq,
        });
        *seq += 1;
    }
}

/// Buchberger's algorithm with normal pair selection; returns a (not yet
/// reduced) basis of integer-primitive polynomials.
pub(crate) fn buchberger(
    input: Vec<OrdPoly>,
    order: &MonomialOrder,
    limits: &Limits,
) -> Result<Vec<OrdPoly>, EngineError> {
    let mut basis: Vec<OrdPoly> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut seq = 0usize;
    for p in input {
        if p.is_zero() {
            continue;
        }
        basis.push(p);
        update_pairs(&mut pairs, &basis, basis.len() - 1, &mut seq);
    }

    while !pairs.is_empty() {
        limits.check_time("buchberger loop")?;
        limits.check_basis(basis.len())?;

        // Normal strategy: smallest lcm under the task order, ties by age.
        let mut best = 0;
        for k in 1..pairs.len() {
            let c = order.cmp(&pairs[k].lcm, &pairs[best].lcm);
            if c == Ordering::Less || (c == Ordering::Equal && pairs[k].seq < pairs[best].seq) {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);

        let s = s_polynomial(&basis[pair.i], &basis[pair.j], order);
        let r = reduce_full(s, &basis, order, limits)?;
        if !r.is_zero() {
            basis.push(r);
            update_pairs(&mut pairs, &basis, basis.len() - 1, &mut seq);
        }
    }
    Ok(basis)
}

/// Minimalizes and tail-reduces a basis into the unique reduced form
/// (integer-primitive, positive leading coefficients), sorted ascending by
/// leading monomial.
pub(crate) fn autoreduce(
    mut basis: Vec<OrdPoly>,
    order: &MonomialOrder,
    limits: &Limits,
) -> Result<Vec<OrdPoly>, EngineError> {
    basis.retain(|p| !p.is_zero());
    basis.sort_by(|a, b| {
        order
            .cmp(a.lm(), b.lm())
            .then_with(|| a.terms.len().cmp(&b.terms.len()))
            .then_with(|| {
                for ((ma, ca), (mb, cb)) in a.terms.iter().zip(&b.terms) {
                    match order.cmp(ma, mb).then_with(|| ca.cmp(cb)) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            })
    });

    let mut minimal: Vec<OrdPoly> = Vec::new();
    for p in basis {
        if !minimal.iter().any(|q| q.lm().divides(p.lm())) {
            minimal.push(p);
        }
    }

    for i in 0..minimal.len() {
        let others: Vec<OrdPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, q)| q.clone())
            .collect();
        let reduced = reduce_full(minimal[i].clone(), &others, order, limits)?;
        debug_assert!(!reduced.is_zero());
        minimal[i] = reduced;
    }
    Ok(minimal)
}

/// True when `f` reduces to zero against `basis`; fraction-free membership.
pub(crate) fn reduces_to_zero(
    f: &Polynomial,
    basis: &[OrdPoly],
    order: &MonomialOrder,
    limits: &Limits,
) -> Result<bool, EngineError> {
    let fp = OrdPoly::from_polynomial(f, order);
    Ok(reduce_full(fp, basis, order, limits)?.is_zero())
}
