//! Multivariate division: normal forms and exact division.

use num_rational::BigRational;
use num_traits::Zero;

use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, Term};

// a - c * (m * b), both slices sorted descending under `order`.
fn merge_sub_scaled(
    a: &[Term],
    b: &[Term],
    c: &BigRational,
    m: &Monomial,
    order: &MonomialOrder,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let bm = b[j].monomial.mul(m);
        match order.cmp(&a[i].monomial, &bm) {
            std::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push(Term {
                    monomial: bm,
                    coefficient: -(c * &b[j].coefficient),
                });
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let coeff = &a[i].coefficient - c * &b[j].coefficient;
                if !coeff.is_zero() {
                    out.push(Term {
                        monomial: bm,
                        coefficient: coeff,
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    while j < b.len() {
        out.push(Term {
            monomial: b[j].monomial.mul(m),
            coefficient: -(c * &b[j].coefficient),
        });
        j += 1;
    }
    out
}

fn sorted_terms(p: &Polynomial, order: &MonomialOrder) -> Vec<Term> {
    let mut terms: Vec<Term> = p.terms().to_vec();
    terms.sort_by(|a, b| order.cmp(&b.monomial, &a.monomial));
    terms
}

/// Remainder of `f` on division by the list `basis` under `order`.
///
/// No term of the result is divisible by the leading monomial of any divisor;
/// `f` minus the result lies in the ideal generated by `basis`. Ties are
/// broken by list position, so the result is deterministic for a fixed list.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let divisors: Vec<(Monomial, BigRational, Vec<Term>)> = basis
        .iter()
        .map(|g| {
            assert!(!g.is_zero(), "division by zero polynomial");
            let terms = sorted_terms(g, order);
            let lt = terms[0].clone();
            (lt.monomial, lt.coefficient, terms)
        })
        .collect();

    let mut work = sorted_terms(f, order);
    let mut remainder: Vec<(Monomial, BigRational)> = Vec::new();
    'outer: while let Some(head) = work.first().cloned() {
        for (lm, lc, terms) in &divisors {
            if lm.divides(&head.monomial) {
                let c = &head.coefficient / lc;
                let m = head.monomial.div(lm);
                work = merge_sub_scaled(&work, terms, &c, &m, order);
                continue 'outer;
            }
        }
        remainder.push((head.monomial, head.coefficient));
        work.remove(0);
    }
    Polynomial::from_terms(f.ring(), remainder)
}

/// Exact quotient `f / g`, or `None` when `g` does not divide `f`.
pub fn div_exact(f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    assert!(!g.is_zero(), "division by zero polynomial");
    let order = MonomialOrder::GrevLex;
    let gterms = sorted_terms(g, &order);
    let (glm, glc) = (gterms[0].monomial.clone(), gterms[0].coefficient.clone());

    let mut work = sorted_terms(f, &order);
    let mut quotient: Vec<(Monomial, BigRational)> = Vec::new();
    while let Some(head) = work.first().cloned() {
        if !glm.divides(&head.monomial) {
            return None;
        }
        let c = &head.coefficient / &glc;
        let m = head.monomial.div(&glm);
        quotient.push((m.clone(), c.clone()));
        work = merge_sub_scaled(&work, &gterms, &c, &m, &order);
    }
    Some(Polynomial::from_terms(f.ring(), quotient))
}
