//! Monomials and monomial orders.
//!
//! Every order here is a total order on monomials refining divisibility:
//! proper divisors always compare smaller. The block order compares the front
//! block first, so any two monomials differing on the front variables are
//! ordered by the front comparison alone; this is what makes it an
//! elimination order for the front block.

use std::cmp::Ordering;

use crate::ring::VarSet;

/// A power product of ring variables, one exponent per variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Monomial {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    /// The constant monomial 1.
    pub fn one(arity: usize) -> Monomial {
        Monomial {
            exps: vec![0; arity],
            degree: 0,
        }
    }

    pub fn variable(arity: usize, index: usize) -> Monomial {
        let mut exps = vec![0; arity];
        exps[index] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn total_degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// The set of variables with nonzero exponent.
    pub fn support(&self) -> VarSet {
        VarSet::from_indices(
            self.exps
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, _)| i),
        )
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.arity(), other.arity());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Computes `self / other`, assuming divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
            degree: self.degree - other.degree,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Keeps only the exponents of variables in `vars`, zeroing the rest.
    pub fn project(&self, vars: VarSet) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .enumerate()
                .map(|(i, e)| if vars.contains(i) { *e } else { 0 })
                .collect(),
        )
    }
}

// The intrinsic order on monomials is graded reverse lexicographic; it is the
// canonical storage order for polynomial term lists.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.arity(), other.arity());
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {
                for i in (0..self.exps.len()).rev() {
                    if self.exps[i] != other.exps[i] {
                        // Reverse comparison: smaller exponent in the last
                        // differing position means the larger monomial.
                        return other.exps[i].cmp(&self.exps[i]);
                    }
                }
                Ordering::Equal
            }
            deg => deg,
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Order used inside a single block of variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseOrder {
    Lex,
    GrevLex,
}

impl BaseOrder {
    fn cmp_on(&self, a: &Monomial, b: &Monomial, vars: VarSet) -> Ordering {
        match self {
            BaseOrder::Lex => {
                for i in vars.iter() {
                    match a.exps[i].cmp(&b.exps[i]) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            BaseOrder::GrevLex => {
                let da: u32 = vars.iter().map(|i| a.exps[i]).sum();
                let db: u32 = vars.iter().map(|i| b.exps[i]).sum();
                match da.cmp(&db) {
                    Ordering::Equal => {
                        let indices: Vec<usize> = vars.iter().collect();
                        for &i in indices.iter().rev() {
                            if a.exps[i] != b.exps[i] {
                                return b.exps[i].cmp(&a.exps[i]);
                            }
                        }
                        Ordering::Equal
                    }
                    deg => deg,
                }
            }
        }
    }
}

/// A monomial order: plain lex, plain grevlex, or a two-block elimination
/// order that compares the front block first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    Block {
        front: VarSet,
        front_order: BaseOrder,
        back_order: BaseOrder,
    },
}

impl MonomialOrder {
    /// The standard elimination order for `front`: grevlex inside both
    /// blocks, front block dominant.
    pub fn elimination(front: VarSet) -> MonomialOrder {
        MonomialOrder::Block {
            front,
            front_order: BaseOrder::GrevLex,
            back_order: BaseOrder::GrevLex,
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.arity(), b.arity());
        match self {
            MonomialOrder::Lex => BaseOrder::Lex.cmp_on(a, b, VarSet::full(a.arity())),
            MonomialOrder::GrevLex => a.cmp(b),
            MonomialOrder::Block {
                front,
                front_order,
                back_order,
            } => match front_order.cmp_on(a, b, *front) {
                Ordering::Equal => back_order.cmp_on(a, b, front.complement(a.arity())),
                ord => ord,
            },
        }
    }
}
