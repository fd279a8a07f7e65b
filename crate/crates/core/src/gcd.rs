//! Polynomial gcd over the rationals and squarefree parts.
//!
//! Gcds are computed fraction-free: clear denominators, then run a primitive
//! pseudo-remainder sequence in a chosen main variable, recursing into the
//! coefficient ring for contents. Results are integer-primitive with positive
//! leading coefficient under the canonical order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::division::div_exact;
use crate::error::EngineError;
use crate::poly::Polynomial;

/// Scales `p` so all coefficients are integers, returning the result.
pub(crate) fn clear_denominators(p: &Polynomial) -> Polynomial {
    let mut l = BigInt::one();
    for t in p.terms() {
        l = l.lcm(t.coefficient.denom());
    }
    p.scale(&BigRational::from_integer(l))
}

fn integer_content(p: &Polynomial) -> BigInt {
    let mut g = BigInt::zero();
    for t in p.terms() {
        debug_assert!(t.coefficient.denom().is_one());
        g = g.gcd(t.coefficient.numer());
    }
    g
}

/// Normalizes to the integer-primitive representative with positive leading
/// coefficient (canonical order); zero maps to zero.
pub fn normalize_primitive(p: &Polynomial) -> Polynomial {
    if p.is_zero() {
        return p.clone();
    }
    let q = clear_denominators(p);
    let mut c = integer_content(&q);
    if q.terms()[0].coefficient.is_negative() {
        c = -c;
    }
    q.scale(&BigRational::new(BigInt::one(), c))
}

/// Gcd of the coefficients of powers of `var`; includes the integer content.
pub fn content_in(p: &Polynomial, var: usize) -> Polynomial {
    let mut acc = Polynomial::zero(p.ring());
    for (_, coeff) in p.coefficients_in(var) {
        acc = poly_gcd(&acc, &coeff);
        if acc.as_constant().is_some_and(|c| c.is_one()) {
            break;
        }
    }
    acc
}

/// `p` divided by its content in `var`.
pub fn primitive_part_in(p: &Polynomial, var: usize) -> Polynomial {
    if p.is_zero() {
        return p.clone();
    }
    let q = normalize_primitive(p);
    let cont = content_in(&q, var);
    if cont.is_constant() {
        return q;
    }
    normalize_primitive(&div_exact(&q, &cont).expect("content divides"))
}

fn leading_coefficient_in(p: &Polynomial, var: usize) -> Polynomial {
    p.coefficients_in(var)
        .into_iter()
        .next()
        .map(|(_, c)| c)
        .expect("nonzero polynomial")
}

// One pseudo-remainder of a by b in `var`; deg_var(a) >= deg_var(b) >= 1.
fn pseudo_rem(a: &Polynomial, b: &Polynomial, var: usize) -> Polynomial {
    let db = b.degree_in(var);
    let lb = leading_coefficient_in(b, var);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(var) >= db {
        let dr = r.degree_in(var);
        let lr = leading_coefficient_in(&r, var);
        let shift = Polynomial::variable(r.ring(), var).pow(dr - db);
        r = &(&lb * &r) - &(&(&lr * &shift) * b);
    }
    r
}

/// Multivariate gcd, integer-primitive with positive canonical lead.
///
/// On two integer constants this is the integer gcd, which is what content
/// computations need.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return normalize_primitive(b);
    }
    if b.is_zero() {
        return normalize_primitive(a);
    }
    let ai = clear_denominators(a);
    let bi = clear_denominators(b);
    let support = ai.support().union(bi.support());
    let var = match support.iter().next() {
        None => {
            // Two integer constants.
            let g = integer_content(&ai).gcd(&integer_content(&bi));
            return Polynomial::constant(a.ring(), BigRational::from_integer(g));
        }
        Some(v) => v,
    };
    if ai.degree_in(var) == 0 {
        return poly_gcd(&content_in(&bi, var), &ai);
    }
    if bi.degree_in(var) == 0 {
        return poly_gcd(&content_in(&ai, var), &bi);
    }

    let ca = content_in(&ai, var);
    let cb = content_in(&bi, var);
    let cont = poly_gcd(&ca, &cb);
    let mut p = primitive_part_in(&ai, var);
    let mut q = primitive_part_in(&bi, var);
    if p.degree_in(var) < q.degree_in(var) {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        let r = pseudo_rem(&p, &q, var);
        if r.is_zero() {
            break;
        }
        p = q;
        q = primitive_part_in(&r, var);
        if q.degree_in(var) == 0 {
            // Coprime in `var`: only the content survives.
            return normalize_primitive(&cont);
        }
    }
    normalize_primitive(&(&cont * &primitive_part_in(&q, var)))
}

/// Squarefree part of `p` with respect to `var`: the primitive part divided
/// by its gcd with the `var`-derivative. Characteristic zero throughout.
pub fn squarefree_part(p: &Polynomial, var: usize) -> Result<Polynomial, EngineError> {
    if p.is_zero() {
        return Err(EngineError::ZeroPolynomial);
    }
    let pp = primitive_part_in(p, var);
    if pp.degree_in(var) == 0 {
        return Ok(Polynomial::one(p.ring()));
    }
    let d = pp.derivative(var);
    let g = poly_gcd(&pp, &d);
    let sqf = div_exact(&pp, &g).expect("gcd divides");
    Ok(normalize_primitive(&sqf))
}
