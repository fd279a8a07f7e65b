//! Exact computer algebra over the rationals for deciding the truth of
//! algebraically translated geometric statements.
//!
//! The crate provides multivariate polynomial arithmetic, reduced Groebner
//! bases with elimination orders, ideal saturation and quotients, Hilbert
//! dimension with maximal independent variable sets, a statement classifier
//! (generally true / generally false / true on parts, false on parts), an
//! independent zero-divisor oracle over a function field, and a small
//! construction language that compiles planar geometry into statements.
//!
//! ```
//! use gbgeo::{classify, parse_polynomial, Limits, Statement, VarRing, VarSet, Verdict};
//!
//! let ring = VarRing::new(["x", "y"]).unwrap();
//! let statement = Statement {
//!     ring: ring.clone(),
//!     hypotheses: vec![parse_polynomial("x*y", &ring).unwrap()],
//!     thesis: parse_polynomial("y", &ring).unwrap(),
//!     declared_independent: Some(VarSet::singleton(0)),
//! };
//! let report = classify(&statement, &Limits::none()).unwrap();
//! assert_eq!(report.verdict, Verdict::GenerallyTrue);
//! assert_eq!(report.degeneracy_conditions[0].to_string(), "x");
//! ```

pub mod classifier;
pub mod dimension;
pub mod division;
pub mod error;
pub mod gcd;
pub mod geomdsl;
pub mod groebner;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod zerodiv;

pub use classifier::{classify, Report, Statement, Verdict};
pub use dimension::{hilbert_dimension, is_independent_set, maximal_independent_set};
pub use error::EngineError;
pub use groebner::{
    elimination_ideal, groebner_basis, ideal_membership, ideal_quotient, is_trivial, saturation,
    GroebnerBasis, Ideal, Limits,
};
pub use monomial::{BaseOrder, Monomial, MonomialOrder};
pub use parse::{parse_polynomial, ParseError};
pub use poly::Polynomial;
pub use ring::{VarRing, VarSet};
pub use zerodiv::{zero_divisor_test, FunctionFieldIdeal, ZeroDivisorStatus};

// Every value is immutable after construction; concurrent use is safe.
const _: () = {
    const fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<Polynomial>();
    assert_send_sync::<Ideal>();
    assert_send_sync::<GroebnerBasis>();
    assert_send_sync::<Statement>();
    assert_send_sync::<Report>();
    assert_send_sync::<FunctionFieldIdeal>();
};
