//! Multivariate polynomials over the rationals.
//!
//! A polynomial is a strictly sorted term list: descending under the canonical
//! grevlex order, no zero coefficients, no duplicate monomials. The zero
//! polynomial is the empty list. Values are immutable after construction and
//! every operation is a pure function.
//!
//! Arithmetic panics on ring mismatch; the parsing and construction layers
//! guarantee all polynomials of one task share a ring.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::monomial::{Monomial, MonomialOrder};
use crate::ring::{VarRing, VarSet};

/// One monomial with its rational coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub monomial: Monomial,
    pub coefficient: BigRational,
}

/// An exact multivariate polynomial over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<VarRing>,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<VarRing>) -> Polynomial {
        Polynomial {
            ring: Arc::clone(ring),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<VarRing>) -> Polynomial {
        Polynomial::constant(ring, BigRational::one())
    }

    pub fn constant(ring: &Arc<VarRing>, c: BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring: Arc::clone(ring),
            terms: vec![Term {
                monomial: Monomial::one(ring.arity()),
                coefficient: c,
            }],
        }
    }

    pub fn integer(ring: &Arc<VarRing>, n: i64) -> Polynomial {
        Polynomial::constant(ring, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn variable(ring: &Arc<VarRing>, index: usize) -> Polynomial {
        assert!(index < ring.arity());
        Polynomial {
            ring: Arc::clone(ring),
            terms: vec![Term {
                monomial: Monomial::variable(ring.arity(), index),
                coefficient: BigRational::one(),
            }],
        }
    }

    /// Builds a normalized polynomial from arbitrary (monomial, coefficient)
    /// pairs: like monomials are combined and zero coefficients dropped.
    pub fn from_terms<I>(ring: &Arc<VarRing>, terms: I) -> Polynomial
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut map: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.arity(), ring.arity(), "monomial arity mismatch");
            let entry = map.entry(m).or_insert_with(BigRational::zero);
            *entry += c;
        }
        let terms: Vec<Term> = map
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(monomial, coefficient)| Term {
                monomial,
                coefficient,
            })
            .collect();
        Polynomial {
            ring: Arc::clone(ring),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<VarRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|t| t.monomial.is_one())
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            Some(BigRational::zero())
        } else if self.is_constant() {
            Some(self.terms[0].coefficient.clone())
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|t| t.monomial.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Union of the supports of all terms.
    pub fn support(&self) -> VarSet {
        let mut s = VarSet::EMPTY;
        for t in &self.terms {
            s = s.union(t.monomial.support());
        }
        s
    }

    pub fn is_supported_on(&self, vars: VarSet) -> bool {
        self.support().is_subset_of(vars)
    }

    /// The leading term under an arbitrary order (scan; terms are stored in
    /// canonical grevlex order, which need not agree with `order`).
    pub fn leading_term_under(&self, order: &MonomialOrder) -> Option<&Term> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.monomial, &b.monomial))
    }

    pub fn leading_monomial_under(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term_under(order).map(|t| &t.monomial)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .iter()
            .map(|t| t.monomial.exponent(var))
            .max()
            .unwrap_or(0)
    }

    /// Coefficients of powers of `var`, each a polynomial free of `var`,
    /// listed by descending power.
    pub fn coefficients_in(&self, var: usize) -> Vec<(u32, Polynomial)> {
        let mut buckets: BTreeMap<u32, Vec<(Monomial, BigRational)>> = BTreeMap::new();
        for t in &self.terms {
            let e = t.monomial.exponent(var);
            let mut exps = t.monomial.exponents().to_vec();
            exps[var] = 0;
            buckets
                .entry(e)
                .or_default()
                .push((Monomial::new(exps), t.coefficient.clone()));
        }
        buckets
            .into_iter()
            .rev()
            .map(|(e, ts)| (e, Polynomial::from_terms(&self.ring, ts)))
            .collect()
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let terms = self.terms.iter().filter_map(|t| {
            let e = t.monomial.exponent(var);
            if e == 0 {
                return None;
            }
            let mut exps = t.monomial.exponents().to_vec();
            exps[var] = e - 1;
            Some((
                Monomial::new(exps),
                &t.coefficient * BigRational::from_integer(BigInt::from(e)),
            ))
        });
        let collected: Vec<_> = terms.collect();
        Polynomial::from_terms(&self.ring, collected)
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    monomial: t.monomial.clone(),
                    coefficient: &t.coefficient * c,
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    monomial: t.monomial.mul(m),
                    coefficient: t.coefficient.clone(),
                })
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes a rational constant for one variable.
    pub fn substitute(&self, var: usize, value: &BigRational) -> Polynomial {
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(|t| {
                let e = t.monomial.exponent(var);
                let mut exps = t.monomial.exponents().to_vec();
                exps[var] = 0;
                let mut c = t.coefficient.clone();
                for _ in 0..e {
                    c *= value;
                }
                (Monomial::new(exps), c)
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Maps this polynomial into a ring containing all of its variables,
    /// matching variables by name.
    pub fn lift_to(&self, target: &Arc<VarRing>) -> Polynomial {
        let map: Vec<usize> = self
            .ring
            .names()
            .iter()
            .map(|n| {
                target
                    .index_of(n)
                    .expect("target ring must contain all source variables")
            })
            .collect();
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(|t| {
                let mut exps = vec![0u32; target.arity()];
                for (i, e) in t.monomial.exponents().iter().enumerate() {
                    exps[map[i]] = *e;
                }
                (Monomial::new(exps), t.coefficient.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Maps into a smaller ring; fails when some term involves a variable the
    /// target ring lacks.
    pub fn restrict_to(&self, target: &Arc<VarRing>) -> Option<Polynomial> {
        let map: Vec<Option<usize>> = self
            .ring
            .names()
            .iter()
            .map(|n| target.index_of(n))
            .collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let mut exps = vec![0u32; target.arity()];
            for (i, e) in t.monomial.exponents().iter().enumerate() {
                if *e > 0 {
                    exps[map[i]?] = *e;
                }
            }
            terms.push((Monomial::new(exps), t.coefficient.clone()));
        }
        Some(Polynomial::from_terms(target, terms))
    }

    fn assert_same_ring(&self, other: &Polynomial) {
        assert!(
            VarRing::same(&self.ring, &other.ring),
            "polynomials belong to different rings"
        );
    }

    /// Renders terms in descending order under `order` using the canonical
    /// grammar (explicit `*`, `^k` for k >= 2).
    pub fn to_string_under(&self, order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut sorted: Vec<&Term> = self.terms.iter().collect();
        sorted.sort_by(|a, b| order.cmp(&b.monomial, &a.monomial));
        let mut out = String::new();
        for (k, t) in sorted.iter().enumerate() {
            let neg = t.coefficient.is_negative();
            let mag = t.coefficient.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || t.monomial.is_one() {
                factors.push(mag.to_string());
            }
            for (i, e) in t.monomial.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.name(i).to_string()),
                    _ => factors.push(format!("{}^{}", self.ring.name(i), e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_under(&MonomialOrder::GrevLex))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ring(rhs);
        // Merge two canonically sorted term lists.
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let a = &self.terms[i];
            let b = &rhs.terms[j];
            match a.monomial.cmp(&b.monomial) {
                std::cmp::Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &a.coefficient + &b.coefficient;
                    if !c.is_zero() {
                        out.push(Term {
                            monomial: a.monomial.clone(),
                            coefficient: c,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&rhs.terms[j..]);
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: out,
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    monomial: t.monomial.clone(),
                    coefficient: -&t.coefficient,
                })
                .collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ring(rhs);
        let mut map: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for a in &self.terms {
            for b in &rhs.terms {
                let m = a.monomial.mul(&b.monomial);
                let c = &a.coefficient * &b.coefficient;
                let entry = map.entry(m).or_insert_with(BigRational::zero);
                *entry += c;
            }
        }
        let terms: Vec<Term> = map
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(monomial, coefficient)| Term {
                monomial,
                coefficient,
            })
            .collect();
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms,
        }
    }
}
