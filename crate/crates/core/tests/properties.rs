//! Property tests for the polynomial layer.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use gbgeo::division::div_exact;
use gbgeo::division::normal_form;
use gbgeo::gcd::{poly_gcd, squarefree_part};
use gbgeo::monomial::{Monomial, MonomialOrder};
use gbgeo::parse::parse_polynomial;
use gbgeo::poly::Polynomial;
use gbgeo::ring::VarRing;

fn ring3() -> Arc<VarRing> {
    VarRing::new(["x", "y", "z"]).unwrap()
}

fn term_strategy() -> impl Strategy<Value = (Vec<u32>, i64)> {
    (
        prop::collection::vec(0u32..=2, 3),
        prop_oneof![(-4i64..=4).prop_filter("nonzero", |c| *c != 0)],
    )
}

fn poly_strategy() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(term_strategy(), 0..=4).prop_map(|terms| {
        let ring = ring3();
        Polynomial::from_terms(
            &ring,
            terms.into_iter().map(|(exps, c)| {
                (
                    Monomial::new(exps),
                    BigRational::from_integer(BigInt::from(c)),
                )
            }),
        )
    })
}

proptest! {
    #[test]
    fn multiplication_commutes(a in poly_strategy(), b in poly_strategy()) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn multiplication_distributes(
        a in poly_strategy(),
        b in poly_strategy(),
        c in poly_strategy(),
    ) {
        let left = &(&a + &b) * &c;
        let right = &(&a * &c) + &(&b * &c);
        prop_assert_eq!(left, right);
    }

    #[test]
    fn print_parse_round_trip(p in poly_strategy()) {
        let text = p.to_string();
        let back = parse_polynomial(&text, p.ring()).unwrap();
        prop_assert_eq!(back, p.clone());
        // Printing under any order is still a faithful rendering.
        let lex = p.to_string_under(&MonomialOrder::Lex);
        prop_assert_eq!(parse_polynomial(&lex, p.ring()).unwrap(), p);
    }

    #[test]
    fn exact_division_inverts_multiplication(
        a in poly_strategy(),
        b in poly_strategy(),
    ) {
        prop_assume!(!b.is_zero());
        let product = &a * &b;
        let q = div_exact(&product, &b).expect("product divisible by factor");
        prop_assert_eq!(q, a);
    }

    #[test]
    fn normal_form_is_idempotent_and_sound(
        f in poly_strategy(),
        g1 in poly_strategy(),
        g2 in poly_strategy(),
    ) {
        let basis: Vec<Polynomial> =
            [g1, g2].into_iter().filter(|g| !g.is_zero()).collect();
        prop_assume!(!basis.is_empty());
        let order = MonomialOrder::GrevLex;
        let r = normal_form(&f, &basis, &order);
        prop_assert_eq!(normal_form(&r, &basis, &order), r.clone());
        let diff = &f - &r;
        prop_assert!(normal_form(&diff, &basis, &order).is_zero());
    }

    #[test]
    fn squarefree_part_divides(p in poly_strategy()) {
        prop_assume!(!p.is_zero());
        let s = squarefree_part(&p, 0).unwrap();
        prop_assert!(div_exact(&p, &s).is_some());
        let g = poly_gcd(&s, &s.derivative(0));
        prop_assert_eq!(g.degree_in(0), 0);
    }

    // The parser must reject garbage with an error, never a panic.
    #[test]
    fn parser_never_panics(text in "[-+*^()/xyz0-9 _A]{0,24}") {
        let ring = ring3();
        let _ = parse_polynomial(&text, &ring);
    }

    #[test]
    fn construction_parser_never_panics(
        lines in prop::collection::vec(
            "[a-z ]{0,12}(point|line|circle|midpoint|conjecture)?[ A-Za-z0-9(),]{0,16}",
            0..6,
        ),
    ) {
        let script = lines.join("\n");
        let _ = gbgeo::geomdsl::parse_construction(&script);
    }
}
