//! Line-oriented parser for construction scripts.

use std::collections::HashMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{Construction, ConstructionStep, Predicate, RadiusSpec, ScriptError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Point,
    Line,
    Segment,
    Circle,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_rational(s: &str, line: usize) -> Result<BigRational, ScriptError> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n = BigInt::from_str(num)
        .map_err(|_| ScriptError::new(line, format!("expected a rational number, got `{s}`")))?;
    let d = BigInt::from_str(den)
        .map_err(|_| ScriptError::new(line, format!("expected a rational number, got `{s}`")))?;
    if d.is_zero() {
        return Err(ScriptError::new(line, "zero denominator"));
    }
    Ok(BigRational::new(n, d))
}

struct Scope {
    kinds: HashMap<String, Kind>,
}

impl Scope {
    fn declare(&mut self, name: &str, kind: Kind, line: usize) -> Result<(), ScriptError> {
        if !is_identifier(name) {
            return Err(ScriptError::new(line, format!("invalid name `{name}`")));
        }
        if self.kinds.contains_key(name) {
            return Err(ScriptError::new(line, format!("duplicate name `{name}`")));
        }
        self.kinds.insert(name.to_string(), kind);
        Ok(())
    }

    fn expect(&self, name: &str, kind: Kind, line: usize) -> Result<(), ScriptError> {
        match self.kinds.get(name) {
            None => Err(ScriptError::new(
                line,
                format!("undefined reference `{name}`"),
            )),
            Some(k) if *k == kind => Ok(()),
            Some(k) => Err(ScriptError::new(
                line,
                format!("`{name}` is a {k:?}, expected {kind:?}").to_lowercase(),
            )),
        }
    }

    fn expect_one_of(&self, name: &str, kinds: &[Kind], line: usize) -> Result<Kind, ScriptError> {
        match self.kinds.get(name) {
            None => Err(ScriptError::new(
                line,
                format!("undefined reference `{name}`"),
            )),
            Some(k) if kinds.contains(k) => Ok(*k),
            Some(k) => Err(ScriptError::new(
                line,
                format!("`{name}` is a {k:?}, expected one of {kinds:?}").to_lowercase(),
            )),
        }
    }
}

fn parse_conjecture(args: &str, scope: &Scope, line: usize) -> Result<Predicate, ScriptError> {
    let open = args
        .find('(')
        .ok_or_else(|| ScriptError::new(line, "expected `(` after predicate name"))?;
    if !args.trim_end().ends_with(')') {
        return Err(ScriptError::new(line, "expected closing `)`"));
    }
    let head = args[..open].trim();
    let inner = args.trim_end();
    let inner = &inner[open + 1..inner.len() - 1];
    let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
    match head {
        "parallel" | "perpendicular" => {
            if parts.len() != 2 {
                return Err(ScriptError::new(line, format!("{head} takes 2 arguments")));
            }
            for p in &parts {
                scope.expect_one_of(p, &[Kind::Segment, Kind::Line], line)?;
            }
            let (a, b) = (parts[0].to_string(), parts[1].to_string());
            Ok(if head == "parallel" {
                Predicate::Parallel(a, b)
            } else {
                Predicate::Perpendicular(a, b)
            })
        }
        "equal_distance" => {
            if parts.len() != 4 {
                return Err(ScriptError::new(line, "equal_distance takes 4 points"));
            }
            for p in &parts {
                scope.expect(p, Kind::Point, line)?;
            }
            Ok(Predicate::EqualDistance(
                parts[0].into(),
                parts[1].into(),
                parts[2].into(),
                parts[3].into(),
            ))
        }
        "collinear" => {
            if parts.len() != 3 {
                return Err(ScriptError::new(line, "collinear takes 3 points"));
            }
            for p in &parts {
                scope.expect(p, Kind::Point, line)?;
            }
            Ok(Predicate::Collinear(
                parts[0].into(),
                parts[1].into(),
                parts[2].into(),
            ))
        }
        other => Err(ScriptError::new(
            line,
            format!("unknown predicate `{other}`"),
        )),
    }
}

/// Parses a construction script.
pub fn parse_construction(text: &str) -> Result<Construction, ScriptError> {
    let mut scope = Scope {
        kinds: HashMap::new(),
    };
    let mut steps: Vec<ConstructionStep> = Vec::new();
    let mut conjecture: Option<(usize, Predicate)> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = match raw.find('#') {
            Some(h) => &raw[..h],
            None => raw,
        };
        let content = content.trim();
        if content.is_empty() {
            continue;
        }
        if conjecture.is_some() {
            return Err(ScriptError::new(line, "statements after the conjecture"));
        }
        let words: Vec<&str> = content.split_whitespace().collect();
        match words[0] {
            "point" => match words.as_slice() {
                ["point", name, "free"] => {
                    scope.declare(name, Kind::Point, line)?;
                    steps.push(ConstructionStep::FreePoint {
                        name: name.to_string(),
                    });
                }
                ["point", name, "fixed", x, y] => {
                    scope.declare(name, Kind::Point, line)?;
                    steps.push(ConstructionStep::FixedPoint {
                        name: name.to_string(),
                        x: parse_rational(x, line)?,
                        y: parse_rational(y, line)?,
                    });
                }
                ["point", name, "on", obj] => {
                    let kind = scope.expect_one_of(obj, &[Kind::Circle, Kind::Line], line)?;
                    scope.declare(name, Kind::Point, line)?;
                    steps.push(match kind {
                        Kind::Circle => ConstructionStep::PointOnCircle {
                            name: name.to_string(),
                            circle: obj.to_string(),
                        },
                        _ => ConstructionStep::PointOnLine {
                            name: name.to_string(),
                            line: obj.to_string(),
                        },
                    });
                }
                _ => {
                    return Err(ScriptError::new(
                        line,
                        "expected `point <name> free|fixed <x> <y>|on <object>`",
                    ))
                }
            },
            "midpoint" => match words.as_slice() {
                ["midpoint", name, a, b] => {
                    scope.expect(a, Kind::Point, line)?;
                    scope.expect(b, Kind::Point, line)?;
                    scope.declare(name, Kind::Point, line)?;
                    steps.push(ConstructionStep::Midpoint {
                        name: name.to_string(),
                        a: a.to_string(),
                        b: b.to_string(),
                    });
                }
                _ => return Err(ScriptError::new(line, "expected `midpoint <name> <P> <Q>`")),
            },
            "line" | "segment" => match words.as_slice() {
                [kw, name, a, b] => {
                    scope.expect(a, Kind::Point, line)?;
                    scope.expect(b, Kind::Point, line)?;
                    let kind = if *kw == "line" {
                        Kind::Line
                    } else {
                        Kind::Segment
                    };
                    scope.declare(name, kind, line)?;
                    steps.push(if *kw == "line" {
                        ConstructionStep::Line {
                            name: name.to_string(),
                            a: a.to_string(),
                            b: b.to_string(),
                        }
                    } else {
                        ConstructionStep::Segment {
                            name: name.to_string(),
                            a: a.to_string(),
                            b: b.to_string(),
                        }
                    });
                }
                _ => {
                    return Err(ScriptError::new(
                        line,
                        format!("expected `{} <name> <P> <Q>`", words[0]),
                    ))
                }
            },
            "parallel" | "perpendicular" => match words.as_slice() {
                [kw, name, through, reference] => {
                    scope.expect(through, Kind::Point, line)?;
                    scope.expect_one_of(reference, &[Kind::Line, Kind::Segment], line)?;
                    scope.declare(name, Kind::Line, line)?;
                    steps.push(if *kw == "parallel" {
                        ConstructionStep::ParallelLine {
                            name: name.to_string(),
                            through: through.to_string(),
                            reference: reference.to_string(),
                        }
                    } else {
                        ConstructionStep::PerpendicularLine {
                            name: name.to_string(),
                            through: through.to_string(),
                            reference: reference.to_string(),
                        }
                    });
                }
                _ => {
                    return Err(ScriptError::new(
                        line,
                        format!("expected `{} <name> <P> <line>`", words[0]),
                    ))
                }
            },
            "circle" => match words.as_slice() {
                ["circle", name, "center", center, "radius", radius] => {
                    scope.expect(center, Kind::Point, line)?;
                    let radius = if scope.kinds.get(*radius) == Some(&Kind::Segment) {
                        RadiusSpec::Segment(radius.to_string())
                    } else if scope.kinds.contains_key(*radius) {
                        return Err(ScriptError::new(
                            line,
                            format!("radius `{radius}` must be a segment or a number"),
                        ));
                    } else if is_identifier(radius) {
                        return Err(ScriptError::new(
                            line,
                            format!("radius `{radius}` is not a defined segment"),
                        ));
                    } else {
                        RadiusSpec::SquaredConstant(parse_rational(radius, line)?)
                    };
                    scope.declare(name, Kind::Circle, line)?;
                    steps.push(ConstructionStep::CircleCenterRadius {
                        name: name.to_string(),
                        center: center.to_string(),
                        radius,
                    });
                }
                _ => {
                    return Err(ScriptError::new(
                        line,
                        "expected `circle <name> center <P> radius <segment|num>`",
                    ))
                }
            },
            "intersect" => match words.as_slice() {
                ["intersect", name, a, b] => {
                    let ka = scope.expect_one_of(a, &[Kind::Line, Kind::Circle], line)?;
                    let kb = scope.expect_one_of(b, &[Kind::Line, Kind::Circle], line)?;
                    scope.declare(name, Kind::Point, line)?;
                    let name = name.to_string();
                    steps.push(match (ka, kb) {
                        (Kind::Line, Kind::Line) => ConstructionStep::IntersectLineLine {
                            name,
                            a: a.to_string(),
                            b: b.to_string(),
                        },
                        (Kind::Line, Kind::Circle) => ConstructionStep::IntersectLineCircle {
                            name,
                            line: a.to_string(),
                            circle: b.to_string(),
                        },
                        (Kind::Circle, Kind::Line) => ConstructionStep::IntersectLineCircle {
                            name,
                            line: b.to_string(),
                            circle: a.to_string(),
                        },
                        _ => ConstructionStep::IntersectCircleCircle {
                            name,
                            a: a.to_string(),
                            b: b.to_string(),
                        },
                    });
                }
                _ => {
                    return Err(ScriptError::new(
                        line,
                        "expected `intersect <name> <obj1> <obj2>`",
                    ))
                }
            },
            "conjecture" => {
                let rest = content["conjecture".len()..].trim();
                conjecture = Some((line, parse_conjecture(rest, &scope, line)?));
            }
            other => {
                return Err(ScriptError::new(
                    line,
                    format!("unknown statement `{other}`"),
                ));
            }
        }
    }

    match conjecture {
        Some((_, predicate)) => Ok(Construction {
            steps,
            conjecture: predicate,
        }),
        None => Err(ScriptError::new(
            text.lines().count().max(1),
            "missing conjecture",
        )),
    }
}
