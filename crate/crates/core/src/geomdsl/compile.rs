//! Compilation of constructions into statements.
//!
//! Coordinates are allocated two per point in step order, named v1, v2, ...
//! exactly as the construction introduces them; circles with a segment radius
//! and parallel/perpendicular lines each introduce a hidden technical point
//! carrying their direction vector. The first free point is pinned to the
//! origin (its two variables never enter the ring). Fixed points contribute
//! rational constants and no variables.

use std::collections::{HashMap, HashSet};

use num_rational::BigRational;
use num_traits::Zero;

use super::{
    CompiledStatement, Construction, ConstructionStep, Coordinate, Predicate, RadiusSpec,
    ScriptError, VarProvenance,
};
use crate::classifier::Statement;
use crate::poly::Polynomial;
use crate::ring::{VarRing, VarSet};

/// Compilation switches; the default pins the first free point to the origin.
#[derive(Debug, Clone, Copy)]
pub struct CompileOptions {
    pub pin_first_free: bool,
}

impl Default for CompileOptions {
    fn default() -> CompileOptions {
        CompileOptions {
            pin_first_free: true,
        }
    }
}

#[derive(Debug, Clone)]
enum PointKind {
    Free {
        pinned: bool,
    },
    Fixed(BigRational, BigRational),
    /// On a circle or line: one equation, x coordinate left free.
    OnCurve,
    /// Fully constrained: midpoints, intersections, technical points.
    Derived,
}

#[derive(Debug, Clone)]
struct PointAlloc {
    point: String,
    kind: PointKind,
}

#[derive(Debug, Clone)]
enum Object {
    /// Directed pair of defining points, also used for segments.
    LineLike { a: String, b: String },
    Circle {
        center: String,
        radius: CompiledRadius,
    },
}

#[derive(Debug, Clone)]
enum CompiledRadius {
    /// Radius reaches from the center to this technical point.
    Tech(String),
    Squared(BigRational),
}

struct Compiler {
    points: Vec<PointAlloc>,
    tech_for_step: Vec<Option<String>>,
}

fn collect_allocations(c: &Construction, opts: CompileOptions) -> Compiler {
    let user_names: HashSet<&str> = c.steps.iter().map(|s| s.name()).collect();
    let mut tech_counter = 0usize;
    let mut next_tech = move || loop {
        tech_counter += 1;
        let candidate = format!("X{tech_counter}");
        if !user_names.contains(candidate.as_str()) {
            return candidate;
        }
    };

    let mut points: Vec<PointAlloc> = Vec::new();
    let mut tech_for_step: Vec<Option<String>> = vec![None; c.steps.len()];
    let mut pinned_one = false;
    for (i, step) in c.steps.iter().enumerate() {
        match step {
            ConstructionStep::FreePoint { name } => {
                let pinned = opts.pin_first_free && !pinned_one;
                pinned_one |= pinned;
                points.push(PointAlloc {
                    point: name.clone(),
                    kind: PointKind::Free { pinned },
                });
            }
            ConstructionStep::FixedPoint { name, x, y } => points.push(PointAlloc {
                point: name.clone(),
                kind: PointKind::Fixed(x.clone(), y.clone()),
            }),
            ConstructionStep::PointOnCircle { name, .. }
            | ConstructionStep::PointOnLine { name, .. } => points.push(PointAlloc {
                point: name.clone(),
                kind: PointKind::OnCurve,
            }),
            ConstructionStep::Midpoint { name, .. }
            | ConstructionStep::IntersectLineLine { name, .. }
            | ConstructionStep::IntersectLineCircle { name, .. }
            | ConstructionStep::IntersectCircleCircle { name, .. } => points.push(PointAlloc {
                point: name.clone(),
                kind: PointKind::Derived,
            }),
            ConstructionStep::CircleCenterRadius {
                radius: RadiusSpec::Segment(_),
                ..
            }
            | ConstructionStep::ParallelLine { .. }
            | ConstructionStep::PerpendicularLine { .. } => {
                let tech = next_tech();
                tech_for_step[i] = Some(tech.clone());
                points.push(PointAlloc {
                    point: tech,
                    kind: PointKind::Derived,
                });
            }
            ConstructionStep::Line { .. }
            | ConstructionStep::Segment { .. }
            | ConstructionStep::CircleCenterRadius { .. } => {}
        }
    }
    Compiler {
        points,
        tech_for_step,
    }
}

type Coords = HashMap<String, (Polynomial, Polynomial)>;

fn on_line_equation(coords: &Coords, p: &str, a: &str, b: &str) -> Polynomial {
    let (px, py) = &coords[p];
    let (ax, ay) = &coords[a];
    let (bx, by) = &coords[b];
    // cross(P - A, B - A)
    &(&(px - ax) * &(by - ay)) - &(&(py - ay) * &(bx - ax))
}

fn squared_distance(coords: &Coords, p: &str, q: &str) -> Polynomial {
    let (px, py) = &coords[p];
    let (qx, qy) = &coords[q];
    let dx = px - qx;
    let dy = py - qy;
    &(&dx * &dx) + &(&dy * &dy)
}

fn on_circle_equation(
    coords: &Coords,
    p: &str,
    center: &str,
    radius: &CompiledRadius,
) -> Polynomial {
    match radius {
        // radius^2 - distance^2, both measured from the center.
        CompiledRadius::Tech(x) => {
            &squared_distance(coords, x, center) - &squared_distance(coords, p, center)
        }
        CompiledRadius::Squared(r2) => {
            let ring = coords[p].0.ring().clone();
            &squared_distance(coords, p, center) - &Polynomial::constant(&ring, r2.clone())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Point,
    Line,
    Segment,
    Circle,
}

// Re-checks the reference discipline so hand-built constructions fail with a
// step-indexed error instead of panicking later; parsed scripts always pass.
fn validate(c: &Construction) -> Result<(), ScriptError> {
    let mut kinds: HashMap<&str, Kind> = HashMap::new();
    let expect =
        |kinds: &HashMap<&str, Kind>, name: &str, want: &[Kind], at: usize| match kinds.get(name) {
            Some(k) if want.contains(k) => Ok(()),
            Some(_) => Err(ScriptError::new(at, format!("`{name}` has the wrong kind"))),
            None => Err(ScriptError::new(
                at,
                format!("undefined reference `{name}`"),
            )),
        };
    for (idx, step) in c.steps.iter().enumerate() {
        let at = idx + 1;
        let (name, kind) = match step {
            ConstructionStep::FreePoint { name } | ConstructionStep::FixedPoint { name, .. } => {
                (name, Kind::Point)
            }
            ConstructionStep::PointOnCircle { name, circle } => {
                expect(&kinds, circle, &[Kind::Circle], at)?;
                (name, Kind::Point)
            }
            ConstructionStep::PointOnLine { name, line } => {
                expect(&kinds, line, &[Kind::Line], at)?;
                (name, Kind::Point)
            }
            ConstructionStep::Midpoint { name, a, b } => {
                expect(&kinds, a, &[Kind::Point], at)?;
                expect(&kinds, b, &[Kind::Point], at)?;
                (name, Kind::Point)
            }
            ConstructionStep::Line { name, a, b } => {
                expect(&kinds, a, &[Kind::Point], at)?;
                expect(&kinds, b, &[Kind::Point], at)?;
                (name, Kind::Line)
            }
            ConstructionStep::Segment { name, a, b } => {
                expect(&kinds, a, &[Kind::Point], at)?;
                expect(&kinds, b, &[Kind::Point], at)?;
                (name, Kind::Segment)
            }
            ConstructionStep::ParallelLine {
                name,
                through,
                reference,
            }
            | ConstructionStep::PerpendicularLine {
                name,
                through,
                reference,
            } => {
                expect(&kinds, through, &[Kind::Point], at)?;
                expect(&kinds, reference, &[Kind::Line, Kind::Segment], at)?;
                (name, Kind::Line)
            }
            ConstructionStep::CircleCenterRadius {
                name,
                center,
                radius,
            } => {
                expect(&kinds, center, &[Kind::Point], at)?;
                if let RadiusSpec::Segment(seg) = radius {
                    expect(&kinds, seg, &[Kind::Segment], at)?;
                }
                (name, Kind::Circle)
            }
            ConstructionStep::IntersectLineLine { name, a, b } => {
                expect(&kinds, a, &[Kind::Line], at)?;
                expect(&kinds, b, &[Kind::Line], at)?;
                (name, Kind::Point)
            }
            ConstructionStep::IntersectLineCircle { name, line, circle } => {
                expect(&kinds, line, &[Kind::Line], at)?;
                expect(&kinds, circle, &[Kind::Circle], at)?;
                (name, Kind::Point)
            }
            ConstructionStep::IntersectCircleCircle { name, a, b } => {
                expect(&kinds, a, &[Kind::Circle], at)?;
                expect(&kinds, b, &[Kind::Circle], at)?;
                (name, Kind::Point)
            }
        };
        if kinds.insert(name, kind).is_some() {
            return Err(ScriptError::new(at, format!("duplicate name `{name}`")));
        }
    }
    let at = c.steps.len() + 1;
    match &c.conjecture {
        Predicate::Parallel(a, b) | Predicate::Perpendicular(a, b) => {
            expect(&kinds, a, &[Kind::Segment, Kind::Line], at)?;
            expect(&kinds, b, &[Kind::Segment, Kind::Line], at)?;
        }
        Predicate::EqualDistance(p, q, r, s) => {
            for n in [p, q, r, s] {
                expect(&kinds, n, &[Kind::Point], at)?;
            }
        }
        Predicate::Collinear(p, q, r) => {
            for n in [p, q, r] {
                expect(&kinds, n, &[Kind::Point], at)?;
            }
        }
    }
    Ok(())
}

/// Compiles with the default options.
pub fn compile(c: &Construction) -> Result<CompiledStatement, ScriptError> {
    compile_with(c, CompileOptions::default())
}

/// Compiles a construction into a statement plus provenance.
pub fn compile_with(
    c: &Construction,
    opts: CompileOptions,
) -> Result<CompiledStatement, ScriptError> {
    validate(c)?;
    let alloc = collect_allocations(c, opts);

    // Variable names: two per allocated point, in order; pinned points keep
    // their numbers but stay out of the ring.
    let mut ring_names: Vec<String> = Vec::new();
    let mut provenance: Vec<VarProvenance> = Vec::new();
    let mut var_of_point: HashMap<String, (String, String)> = HashMap::new();
    let mut counter = 0usize;
    for pa in &alloc.points {
        if matches!(pa.kind, PointKind::Fixed(..)) {
            continue;
        }
        let vx = format!("v{}", counter + 1);
        let vy = format!("v{}", counter + 2);
        counter += 2;
        let pinned = matches!(pa.kind, PointKind::Free { pinned: true });
        if !pinned {
            let (free_x, free_y) = match pa.kind {
                PointKind::Free { .. } => (true, true),
                PointKind::OnCurve => (true, false),
                _ => (false, false),
            };
            ring_names.push(vx.clone());
            ring_names.push(vy.clone());
            provenance.push(VarProvenance {
                variable: vx.clone(),
                point: pa.point.clone(),
                coordinate: Coordinate::X,
                free: free_x,
            });
            provenance.push(VarProvenance {
                variable: vy.clone(),
                point: pa.point.clone(),
                coordinate: Coordinate::Y,
                free: free_y,
            });
        }
        var_of_point.insert(pa.point.clone(), (vx, vy));
    }

    let ring = VarRing::new(ring_names).map_err(|e| ScriptError::new(0, e.to_string()))?;

    let mut coords: Coords = HashMap::new();
    for pa in &alloc.points {
        let pair = match &pa.kind {
            PointKind::Fixed(x, y) => (
                Polynomial::constant(&ring, x.clone()),
                Polynomial::constant(&ring, y.clone()),
            ),
            PointKind::Free { pinned: true } => (
                Polynomial::constant(&ring, BigRational::zero()),
                Polynomial::constant(&ring, BigRational::zero()),
            ),
            _ => {
                let (vx, vy) = &var_of_point[&pa.point];
                (
                    Polynomial::variable(&ring, ring.index_of(vx).unwrap()),
                    Polynomial::variable(&ring, ring.index_of(vy).unwrap()),
                )
            }
        };
        coords.insert(pa.point.clone(), pair);
    }

    // Second pass: objects and hypothesis equations, in step order.
    let mut objects: HashMap<String, Object> = HashMap::new();
    let mut hypotheses: Vec<Polynomial> = Vec::new();
    for (i, step) in c.steps.iter().enumerate() {
        match step {
            ConstructionStep::FreePoint { .. } | ConstructionStep::FixedPoint { .. } => {}
            ConstructionStep::Segment { name, a, b } | ConstructionStep::Line { name, a, b } => {
                objects.insert(
                    name.clone(),
                    Object::LineLike {
                        a: a.clone(),
                        b: b.clone(),
                    },
                );
            }
            ConstructionStep::CircleCenterRadius {
                name,
                center,
                radius,
            } => {
                let radius = match radius {
                    RadiusSpec::SquaredConstant(r2) => CompiledRadius::Squared(r2.clone()),
                    RadiusSpec::Segment(seg) => {
                        let (p, q) = match &objects[seg] {
                            Object::LineLike { a, b } => (a.clone(), b.clone()),
                            _ => unreachable!("parser checks kinds"),
                        };
                        let tech = alloc.tech_for_step[i].clone().expect("allocated");
                        // Technical point T = center + Q - P carries the
                        // radius vector: T - center - Q + P = 0 per axis.
                        let (tx, ty) = &coords[&tech];
                        let (ox, oy) = &coords[center];
                        let (px, py) = &coords[&p];
                        let (qx, qy) = &coords[&q];
                        hypotheses.push(&(&(tx - ox) - qx) + px);
                        hypotheses.push(&(&(ty - oy) - qy) + py);
                        CompiledRadius::Tech(tech)
                    }
                };
                objects.insert(
                    name.clone(),
                    Object::Circle {
                        center: center.clone(),
                        radius,
                    },
                );
            }
            ConstructionStep::ParallelLine {
                name,
                through,
                reference,
            }
            | ConstructionStep::PerpendicularLine {
                name,
                through,
                reference,
            } => {
                let (p, q) = match &objects[reference] {
                    Object::LineLike { a, b } => (a.clone(), b.clone()),
                    _ => unreachable!("parser checks kinds"),
                };
                let tech = alloc.tech_for_step[i].clone().expect("allocated");
                let (tx, ty) = &coords[&tech];
                let (wx, wy) = &coords[through];
                let (px, py) = &coords[&p];
                let (qx, qy) = &coords[&q];
                if matches!(step, ConstructionStep::ParallelLine { .. }) {
                    // T = through + (Q - P)
                    hypotheses.push(&(&(tx - wx) - qx) + px);
                    hypotheses.push(&(&(ty - wy) - qy) + py);
                } else {
                    // T = through + perp(Q - P), perp(d) = (-dy, dx)
                    hypotheses.push(&(&(tx - wx) + qy) - py);
                    hypotheses.push(&(&(ty - wy) - qx) + px);
                }
                objects.insert(
                    name.clone(),
                    Object::LineLike {
                        a: through.clone(),
                        b: tech,
                    },
                );
            }
            ConstructionStep::Midpoint { name, a, b } => {
                let (mx, my) = coords[name].clone();
                let (ax, ay) = &coords[a];
                let (bx, by) = &coords[b];
                let two = Polynomial::integer(&ring, 2);
                hypotheses.push(&(&(&two * &mx) - ax) - bx);
                hypotheses.push(&(&(&two * &my) - ay) - by);
            }
            ConstructionStep::PointOnLine { name, line } => {
                let (a, b) = match &objects[line] {
                    Object::LineLike { a, b } => (a.clone(), b.clone()),
                    _ => unreachable!(),
                };
                hypotheses.push(on_line_equation(&coords, name, &a, &b));
            }
            ConstructionStep::PointOnCircle { name, circle } => {
                let (center, radius) = match &objects[circle] {
                    Object::Circle { center, radius } => (center.clone(), radius.clone()),
                    _ => unreachable!(),
                };
                hypotheses.push(on_circle_equation(&coords, name, &center, &radius));
            }
            ConstructionStep::IntersectLineLine { name, a, b } => {
                for obj in [a, b] {
                    let (p, q) = match &objects[obj] {
                        Object::LineLike { a, b } => (a.clone(), b.clone()),
                        _ => unreachable!(),
                    };
                    hypotheses.push(on_line_equation(&coords, name, &p, &q));
                }
            }
            ConstructionStep::IntersectLineCircle { name, line, circle } => {
                let (p, q) = match &objects[line] {
                    Object::LineLike { a, b } => (a.clone(), b.clone()),
                    _ => unreachable!(),
                };
                hypotheses.push(on_line_equation(&coords, name, &p, &q));
                let (center, radius) = match &objects[circle] {
                    Object::Circle { center, radius } => (center.clone(), radius.clone()),
                    _ => unreachable!(),
                };
                hypotheses.push(on_circle_equation(&coords, name, &center, &radius));
            }
            ConstructionStep::IntersectCircleCircle { name, a, b } => {
                for obj in [a, b] {
                    let (center, radius) = match &objects[obj] {
                        Object::Circle { center, radius } => (center.clone(), radius.clone()),
                        _ => unreachable!(),
                    };
                    hypotheses.push(on_circle_equation(&coords, name, &center, &radius));
                }
            }
        }
    }

    let direction_of = |name: &str| -> Result<(String, String), ScriptError> {
        match objects.get(name) {
            Some(Object::LineLike { a, b }) => Ok((a.clone(), b.clone())),
            _ => Err(ScriptError::new(
                0,
                format!("`{name}` does not define a direction"),
            )),
        }
    };

    let thesis = match &c.conjecture {
        Predicate::Parallel(a, b) => {
            let (a1, a2) = direction_of(a)?;
            let (b1, b2) = direction_of(b)?;
            let (a1x, a1y) = &coords[&a1];
            let (a2x, a2y) = &coords[&a2];
            let (b1x, b1y) = &coords[&b1];
            let (b2x, b2y) = &coords[&b2];
            // cross(A2 - A1, B2 - B1)
            &(&(a2x - a1x) * &(b2y - b1y)) - &(&(a2y - a1y) * &(b2x - b1x))
        }
        Predicate::Perpendicular(a, b) => {
            let (a1, a2) = direction_of(a)?;
            let (b1, b2) = direction_of(b)?;
            let (a1x, a1y) = &coords[&a1];
            let (a2x, a2y) = &coords[&a2];
            let (b1x, b1y) = &coords[&b1];
            let (b2x, b2y) = &coords[&b2];
            // dot(A1 - A2, B2 - B1)
            &(&(a1x - a2x) * &(b2x - b1x)) + &(&(a1y - a2y) * &(b2y - b1y))
        }
        Predicate::EqualDistance(p, q, r, s) => {
            &squared_distance(&coords, p, q) - &squared_distance(&coords, r, s)
        }
        Predicate::Collinear(p, q, r) => on_line_equation(&coords, q, p, r),
    };

    let auto_y = VarSet::from_indices(
        provenance
            .iter()
            .filter(|v| v.free)
            .map(|v| ring.index_of(&v.variable).unwrap()),
    );

    Ok(CompiledStatement {
        statement: Statement {
            ring,
            hypotheses,
            thesis,
            declared_independent: Some(auto_y),
        },
        provenance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::{classify, Verdict};
    use crate::geomdsl::parse_construction;
    use crate::groebner::{groebner_basis, Ideal, Limits};
    use crate::monomial::MonomialOrder;
    use crate::parse::parse_polynomial;

    const RHOMBUS: &str = "\
point A free
point B free
segment f A B
circle k1 center A radius f
point C on k1
parallel h C f
circle c center C radius f
intersect D h c
segment k A D
segment l C B
conjecture perpendicular(k, l)
";

    const TWO_CIRCLES: &str = "\
point A fixed 0 0
point B fixed 2 0
circle c center A radius 3
circle d center B radius 3
intersect E c d
intersect F c d
segment p A E
segment q B F
conjecture parallel(p, q)
";

    const MIDPOINT: &str = "\
point A free
point B free
midpoint M A B
conjecture equal_distance(A, M, M, B)
";

    #[test]
    fn rhombus_compiles_to_the_known_equations() {
        let c = parse_construction(RHOMBUS).unwrap();
        let compiled = compile(&c).unwrap();
        let ring = &compiled.statement.ring;
        let names: Vec<&str> = ring.names().iter().map(String::as_str).collect();
        assert_eq!(
            names,
            ["v3", "v4", "v5", "v6", "v7", "v8", "v9", "v10", "v11", "v12", "v13", "v14"]
        );

        let expected_hyps = [
            "v5-v3",
            "v6-v4",
            "-v8^2-v7^2+v6^2+v5^2",
            "v9-v7-v3",
            "v10-v8-v4",
            "v11-v7-v3",
            "v12-v8-v4",
            "v13*v10-v14*v9-v13*v8+v9*v8+v14*v7-v10*v7",
            "-v14^2-v13^2+v12^2+v11^2+2*v14*v8-2*v12*v8+2*v13*v7-2*v11*v7",
        ];
        assert_eq!(compiled.statement.hypotheses.len(), expected_hyps.len());
        for (got, want) in compiled.statement.hypotheses.iter().zip(expected_hyps) {
            assert_eq!(got, &parse_polynomial(want, ring).unwrap(), "{want}");
        }
        let f = parse_polynomial("v14*v8+v13*v7-v14*v4-v13*v3", ring).unwrap();
        assert_eq!(compiled.statement.thesis, f);

        let y = compiled.statement.declared_independent.unwrap();
        let names: Vec<&str> = y.iter().map(|i| ring.name(i)).collect();
        assert_eq!(names, ["v3", "v4", "v7"]);
    }

    #[test]
    fn two_circles_compile_to_the_four_quadrics() {
        let c = parse_construction(TWO_CIRCLES).unwrap();
        let compiled = compile(&c).unwrap();
        let ring = &compiled.statement.ring;
        assert_eq!(ring.arity(), 4);
        let expected = [
            "v1^2+v2^2-3",
            "(v1-2)^2+v2^2-3",
            "v3^2+v4^2-3",
            "(v3-2)^2+v4^2-3",
        ];
        for (got, want) in compiled.statement.hypotheses.iter().zip(expected) {
            assert_eq!(got, &parse_polynomial(want, ring).unwrap(), "{want}");
        }
        let f = parse_polynomial("v1*v4-v2*(v3-2)", ring).unwrap();
        assert_eq!(compiled.statement.thesis, f);
        assert!(compiled.statement.declared_independent.unwrap().is_empty());
    }

    #[test]
    fn midpoint_statement_is_generally_true() {
        let c = parse_construction(MIDPOINT).unwrap();
        let compiled = compile(&c).unwrap();
        let r = classify(&compiled.statement, &Limits::none()).unwrap();
        assert_eq!(r.verdict, Verdict::GenerallyTrue);
    }

    #[test]
    fn wrong_midpoint_claim_is_generally_false() {
        let script = "\
point A free
point B free
midpoint M A B
conjecture equal_distance(A, M, A, B)
";
        let c = parse_construction(script).unwrap();
        let compiled = compile(&c).unwrap();
        let r = classify(&compiled.statement, &Limits::none()).unwrap();
        assert_eq!(r.verdict, Verdict::GenerallyFalse);
    }

    #[test]
    fn hand_built_constructions_are_validated() {
        let c = Construction {
            steps: vec![ConstructionStep::Segment {
                name: "s".into(),
                a: "A".into(),
                b: "B".into(),
            }],
            conjecture: Predicate::Collinear("A".into(), "B".into(), "C".into()),
        };
        let err = compile(&c).unwrap_err();
        assert!(err.message.contains("undefined reference `A`"));

        let dup = Construction {
            steps: vec![
                ConstructionStep::FreePoint { name: "A".into() },
                ConstructionStep::FreePoint { name: "A".into() },
            ],
            conjecture: Predicate::Collinear("A".into(), "A".into(), "A".into()),
        };
        assert!(compile(&dup).unwrap_err().message.contains("duplicate"));
    }

    #[test]
    fn compilation_is_deterministic() {
        let c = parse_construction(RHOMBUS).unwrap();
        let a = compile(&c).unwrap();
        let b = compile(&c).unwrap();
        assert_eq!(a.statement.hypotheses, b.statement.hypotheses);
        assert_eq!(a.statement.thesis, b.statement.thesis);
        assert_eq!(a.provenance, b.provenance);
    }

    #[test]
    fn provenance_covers_every_ring_variable_once() {
        for script in [RHOMBUS, TWO_CIRCLES, MIDPOINT] {
            let c = parse_construction(script).unwrap();
            let compiled = compile(&c).unwrap();
            let ring = &compiled.statement.ring;
            let mut listed: Vec<&str> = compiled
                .provenance
                .iter()
                .map(|v| v.variable.as_str())
                .collect();
            listed.sort_unstable();
            let mut expected: Vec<&str> = ring.names().iter().map(String::as_str).collect();
            expected.sort_unstable();
            assert_eq!(listed, expected);
            let free = compiled.provenance.iter().filter(|v| v.free).count();
            assert_eq!(free, compiled.statement.declared_independent.unwrap().len());
        }
    }

    #[test]
    fn perpendicular_line_technical_point_equations() {
        let script = "\
point A free
point B free
line l A B
perpendicular p B l
point D on p
segment s B D
segment f A B
conjecture perpendicular(s, f)
";
        let c = parse_construction(script).unwrap();
        let compiled = compile(&c).unwrap();
        let ring = &compiled.statement.ring;
        // A pinned; B = (v3,v4); technical point X1 = (v5,v6) = B + perp(B-A);
        // D = (v7,v8) on the line through B and X1.
        let expected = ["v5-v3+v4", "v6-v4-v3", "(v7-v3)*(v6-v4)-(v8-v4)*(v5-v3)"];
        assert_eq!(compiled.statement.hypotheses.len(), expected.len());
        for (got, want) in compiled.statement.hypotheses.iter().zip(expected) {
            assert_eq!(got, &parse_polynomial(want, ring).unwrap(), "{want}");
        }
        // D - B is a multiple of perp(B - A), so BD is perpendicular to AB on
        // every component.
        let r = classify(&compiled.statement, &Limits::none()).unwrap();
        assert_eq!(r.verdict, Verdict::GenerallyTrue);
    }

    #[test]
    fn line_intersection_and_collinearity() {
        let script = "\
point A free
point B free
point C free
line ab A B
line cb C B
intersect P ab cb
conjecture collinear(A, P, B)
";
        let c = parse_construction(script).unwrap();
        let compiled = compile(&c).unwrap();
        // P lies on both lines; collinearity with A and B holds on every
        // component because P is on line AB by construction.
        let r = classify(&compiled.statement, &Limits::none()).unwrap();
        assert_eq!(r.verdict, Verdict::GenerallyTrue);
        // Two cross-product equations, one per defining line.
        assert_eq!(compiled.statement.hypotheses.len(), 2);
    }

    #[test]
    fn pinning_matches_substitution() {
        let c = parse_construction(MIDPOINT).unwrap();
        let pinned = compile(&c).unwrap();
        let unpinned = compile_with(
            &c,
            CompileOptions {
                pin_first_free: false,
            },
        )
        .unwrap();

        let target = &pinned.statement.ring;
        let zero = BigRational::zero();
        let substituted: Vec<Polynomial> = unpinned
            .statement
            .hypotheses
            .iter()
            .map(|h| {
                let r = unpinned.statement.ring.clone();
                h.substitute(r.index_of("v1").unwrap(), &zero)
                    .substitute(r.index_of("v2").unwrap(), &zero)
                    .restrict_to(target)
                    .unwrap()
            })
            .collect();

        let a = Ideal::new(target, pinned.statement.hypotheses.clone());
        let b = Ideal::new(target, substituted);
        let order = MonomialOrder::GrevLex;
        let ga = groebner_basis(&a, &order, &Limits::none()).unwrap();
        let gb = groebner_basis(&b, &order, &Limits::none()).unwrap();
        assert_eq!(ga.elements, gb.elements);
    }
}
