//! Statement classification.
//!
//! A statement `{H => T}` with hypothesis ideal H, thesis polynomial f and an
//! independent variable set Y is decided by two eliminations:
//!
//! * `<h1,...,hr, f*t-1> ∩ K[Y]` nonzero  =>  generally true;
//! * `<h1,...,hr, f> ∩ K[Y]` nonzero      =>  generally false;
//! * both zero                            =>  true on parts, false on parts,
//!
//! the last label being sound only when |Y| equals the Hilbert dimension of
//! H, which the pipeline verifies before running the two tests. Degenerate
//! outcomes (contradictory hypotheses, dependent Y, dimension mismatch) are
//! verdicts of their own, not errors.

use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::dimension::{hilbert_dimension, is_independent_set, maximal_independent_set};
use crate::error::EngineError;
use crate::groebner::{elimination_generators, is_trivial, saturation, Ideal, Limits};
use crate::poly::Polynomial;
use crate::ring::{VarRing, VarSet};

/// A statement to classify: hypotheses, a single thesis polynomial, and an
/// optional declared independent set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Statement {
    pub ring: Arc<VarRing>,
    pub hypotheses: Vec<Polynomial>,
    pub thesis: Polynomial,
    pub declared_independent: Option<VarSet>,
}

impl Statement {
    pub fn hypothesis_ideal(&self) -> Ideal {
        Ideal::new(&self.ring, self.hypotheses.iter().cloned())
    }
}

/// The classification outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    GenerallyTrue,
    GenerallyFalse,
    TrueOnPartsFalseOnParts,
    ContradictoryHypotheses,
    NotIndependent,
    DimensionMismatch,
}

/// Classification result with diagnostics.
#[derive(Debug, Clone)]
pub struct Report {
    pub verdict: Verdict,
    /// Hilbert dimension of the hypothesis ideal; `None` only for
    /// contradictory hypotheses (empty variety).
    pub dimension: Option<usize>,
    /// The independent set the run used (or attempted, for `NotIndependent`).
    pub independent_set: VarSet,
    /// Nonzero elimination generators in `K[Y]`; nonempty exactly for the
    /// generally-true and generally-false verdicts.
    pub degeneracy_conditions: Vec<Polynomial>,
    pub timings: Vec<(String, Duration)>,
    pub ring: Arc<VarRing>,
}

/// The generally-true elimination test for independent Y: saturate H by f,
/// then intersect with `K[Y]`. Returns whether the intersection is nonzero and
/// its generators.
pub fn generally_true_test(
    h: &Ideal,
    f: &Polynomial,
    y: VarSet,
    limits: &Limits,
) -> Result<(bool, Vec<Polynomial>), EngineError> {
    let sat = saturation(h, f, limits)?;
    let gens = elimination_generators(&sat, y, limits)?;
    Ok((!gens.is_empty(), gens))
}

/// The generally-false elimination test: intersect `H + <f>` with `K[Y]`. Sound
/// as an "only if" only when Y has maximum size.
pub fn generally_false_test(
    h: &Ideal,
    f: &Polynomial,
    y: VarSet,
    limits: &Limits,
) -> Result<(bool, Vec<Polynomial>), EngineError> {
    let mut gens: Vec<Polynomial> = h.generators().to_vec();
    gens.push(f.clone());
    let hf = Ideal::new(h.ring(), gens);
    let found = elimination_generators(&hf, y, limits)?;
    Ok((!found.is_empty(), found))
}

struct StepClock {
    timings: Vec<(String, Duration)>,
    last: Instant,
}

impl StepClock {
    fn new() -> StepClock {
        StepClock {
            timings: Vec::new(),
            last: Instant::now(),
        }
    }

    fn lap(&mut self, name: &str) {
        let now = Instant::now();
        self.timings.push((name.to_string(), now - self.last));
        self.last = now;
    }
}

/// Runs the full decision pipeline on a statement.
///
/// Order of steps: contradictory-hypotheses guard, independence of Y,
/// dimension guard, generally-true test, generally-false test; a statement
/// surviving all five with two zero eliminations is true on parts, false on
/// parts.
pub fn classify(statement: &Statement, limits: &Limits) -> Result<Report, EngineError> {
    let ring = &statement.ring;
    let h = statement.hypothesis_ideal();
    let f = &statement.thesis;
    let mut clock = StepClock::new();

    let trivial = is_trivial(&h, limits).map_err(|e| e.at_step("contradiction_check"))?;
    clock.lap("contradiction_check");
    if trivial {
        return Ok(Report {
            verdict: Verdict::ContradictoryHypotheses,
            dimension: None,
            independent_set: VarSet::EMPTY,
            degeneracy_conditions: Vec::new(),
            timings: clock.timings,
            ring: Arc::clone(ring),
        });
    }

    let cert = hilbert_dimension(&h, limits).map_err(|e| e.at_step("dimension"))?;
    clock.lap("dimension");

    let (y, declared) = match statement.declared_independent {
        Some(y) => {
            debug_assert!(
                y.is_subset_of(crate::ring::VarSet::full(ring.arity())),
                "independent set indexes outside the ring"
            );
            (y, true)
        }
        None => (
            maximal_independent_set(&h, limits).map_err(|e| e.at_step("independence"))?,
            false,
        ),
    };
    if declared {
        let ok = is_independent_set(&h, y, limits).map_err(|e| e.at_step("independence"))?;
        if !ok {
            clock.lap("independence");
            return Ok(Report {
                verdict: Verdict::NotIndependent,
                dimension: Some(cert.dimension),
                independent_set: y,
                degeneracy_conditions: Vec::new(),
                timings: clock.timings,
                ring: Arc::clone(ring),
            });
        }
    }
    clock.lap("independence");

    if y.len() != cert.dimension {
        return Ok(Report {
            verdict: Verdict::DimensionMismatch,
            dimension: Some(cert.dimension),
            independent_set: y,
            degeneracy_conditions: Vec::new(),
            timings: clock.timings,
            ring: Arc::clone(ring),
        });
    }

    let (true_nonzero, true_gens) =
        generally_true_test(&h, f, y, limits).map_err(|e| e.at_step("generally_true_test"))?;
    clock.lap("generally_true_test");
    if true_nonzero {
        return Ok(Report {
            verdict: Verdict::GenerallyTrue,
            dimension: Some(cert.dimension),
            independent_set: y,
            degeneracy_conditions: true_gens,
            timings: clock.timings,
            ring: Arc::clone(ring),
        });
    }

    let (false_nonzero, false_gens) =
        generally_false_test(&h, f, y, limits).map_err(|e| e.at_step("generally_false_test"))?;
    clock.lap("generally_false_test");
    if false_nonzero {
        return Ok(Report {
            verdict: Verdict::GenerallyFalse,
            dimension: Some(cert.dimension),
            independent_set: y,
            degeneracy_conditions: false_gens,
            timings: clock.timings,
            ring: Arc::clone(ring),
        });
    }

    Ok(Report {
        verdict: Verdict::TrueOnPartsFalseOnParts,
        dimension: Some(cert.dimension),
        independent_set: y,
        degeneracy_conditions: Vec::new(),
        timings: clock.timings,
        ring: Arc::clone(ring),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn statement(
        names: &[&str],
        hyps: &[&str],
        thesis: &str,
        independent: Option<&[&str]>,
    ) -> Statement {
        let ring = VarRing::new(names.iter().copied()).unwrap();
        let hypotheses = hyps
            .iter()
            .map(|s| parse_polynomial(s, &ring).unwrap())
            .collect();
        let thesis = parse_polynomial(thesis, &ring).unwrap();
        let declared_independent = independent
            .map(|ys| VarSet::from_indices(ys.iter().map(|n| ring.index_of(n).unwrap())));
        Statement {
            ring,
            hypotheses,
            thesis,
            declared_independent,
        }
    }

    fn conditions(report: &Report) -> Vec<String> {
        report
            .degeneracy_conditions
            .iter()
            .map(|p| p.to_string())
            .collect()
    }

    #[test]
    fn axes_toy_generally_true_over_x() {
        let s = statement(&["x", "y"], &["x*y"], "y", Some(&["x"]));
        let r = classify(&s, &Limits::none()).unwrap();
        assert_eq!(r.verdict, Verdict::GenerallyTrue);
        assert_eq!(conditions(&r), vec!["x"]);
        assert_eq!(r.dimension, Some(1));
    }

    #[test]
    fn axes_toy_generally_false_over_y() {
        let s = statement(&["x", "y"], &["x*y"], "y", Some(&["y"]));
        let r = classify(&s, &Limits::none()).unwrap();
        assert_eq!(r.verdict, Verdict::GenerallyFalse);
        assert_eq!(conditions(&r), vec!["y"]);
    }

    #[test]
    fn thesis_in_hypotheses_is_generally_true() {
        let s = statement(&["x", "y"], &["x"], "x", Some(&["y"]));
        let r = classify(&s, &Limits::none()).unwrap();
        assert_eq!(r.verdict, Verdict::GenerallyTrue);
        // The false-test side sees nothing: adjoining f changes no ideal.
        let (gf, witnesses) = generally_false_test(
            &s.hypothesis_ideal(),
            &s.thesis,
            s.declared_independent.unwrap(),
            &Limits::none(),
        )
        .unwrap();
        assert!(!gf && witnesses.is_empty());
    }

    #[test]
    fn zero_thesis_is_generally_true() {
        let s = statement(&["x", "y"], &["x*y"], "0", Some(&["x"]));
        let r = classify(&s, &Limits::none()).unwrap();
        assert_eq!(r.verdict, Verdict::GenerallyTrue);
    }

    #[test]
    fn contradictory_hypotheses_detected_first() {
        let s = statement(&["x"], &["x", "x-1"], "x", None);
        let r = classify(&s, &Limits::none()).unwrap();
        assert_eq!(r.verdict, Verdict::ContradictoryHypotheses);
        assert_eq!(r.dimension, None);
        assert!(r.degeneracy_conditions.is_empty());
    }

    #[test]
    fn dependent_declared_set_reported() {
        let s = statement(&["x", "y"], &["x*y"], "y", Some(&["x", "y"]));
        let r = classify(&s, &Limits::none()).unwrap();
        assert_eq!(r.verdict, Verdict::NotIndependent);
    }

    #[test]
    fn dimension_mismatch_is_a_verdict() {
        let s = statement(&["x", "y", "z"], &["x*y", "x^2"], "y", Some(&["z"]));
        let r = classify(&s, &Limits::none()).unwrap();
        assert_eq!(r.verdict, Verdict::DimensionMismatch);
        assert_eq!(r.dimension, Some(2));
        assert_eq!(r.independent_set.len(), 1);
    }

    #[test]
    fn counterexample_with_maximal_set_is_generally_false() {
        let s = statement(&["x", "y", "z"], &["x*y", "x^2"], "y", Some(&["y", "z"]));
        let r = classify(&s, &Limits::none()).unwrap();
        assert_eq!(r.verdict, Verdict::GenerallyFalse);
    }

    #[test]
    fn circles_statement_is_true_on_parts() {
        let s = statement(
            &["u", "v", "m", "n"],
            &["u^2+v^2-3", "(u-2)^2+v^2-3", "m^2+n^2-3", "(m-2)^2+n^2-3"],
            "u*n-v*(m-2)",
            None,
        );
        let r = classify(&s, &Limits::none()).unwrap();
        assert_eq!(r.verdict, Verdict::TrueOnPartsFalseOnParts);
        assert_eq!(r.dimension, Some(0));
        assert!(r.independent_set.is_empty());
        assert!(r.degeneracy_conditions.is_empty());
    }

    #[test]
    fn empty_ring_statements_are_constant_claims() {
        let ring = VarRing::new(Vec::<String>::new()).unwrap();
        let truthy = Statement {
            ring: ring.clone(),
            hypotheses: vec![],
            thesis: Polynomial::zero(&ring),
            declared_independent: None,
        };
        assert_eq!(
            classify(&truthy, &Limits::none()).unwrap().verdict,
            Verdict::GenerallyTrue
        );
        let falsy = Statement {
            ring: ring.clone(),
            hypotheses: vec![],
            thesis: Polynomial::one(&ring),
            declared_independent: None,
        };
        assert_eq!(
            classify(&falsy, &Limits::none()).unwrap().verdict,
            Verdict::GenerallyFalse
        );
    }

    #[test]
    fn scaling_generators_or_thesis_changes_nothing() {
        let base = statement(&["x", "y"], &["x*y"], "y", Some(&["x"]));
        let baseline = classify(&base, &Limits::none()).unwrap();

        let ring = base.ring.clone();
        let half = num_rational::BigRational::new(
            num_bigint::BigInt::from(-3),
            num_bigint::BigInt::from(7),
        );
        let scaled = Statement {
            hypotheses: base.hypotheses.iter().map(|h| h.scale(&half)).collect(),
            thesis: base.thesis.scale(&half),
            ring,
            declared_independent: base.declared_independent,
        };
        let report = classify(&scaled, &Limits::none()).unwrap();
        assert_eq!(report.verdict, baseline.verdict);
        assert_eq!(report.dimension, baseline.dimension);
        assert_eq!(report.independent_set, baseline.independent_set);
        assert_eq!(report.degeneracy_conditions, baseline.degeneracy_conditions);
    }

    #[test]
    fn degeneracy_conditions_live_in_the_saturation_and_in_y() {
        let s = statement(&["x", "y"], &["x*y"], "y", Some(&["x"]));
        let r = classify(&s, &Limits::none()).unwrap();
        let h = s.hypothesis_ideal();
        let sat = saturation(&h, &s.thesis, &Limits::none()).unwrap();
        for g in &r.degeneracy_conditions {
            assert!(g.is_supported_on(r.independent_set));
            assert!(crate::groebner::ideal_membership(g, &sat, &Limits::none()).unwrap());
        }
    }
}
