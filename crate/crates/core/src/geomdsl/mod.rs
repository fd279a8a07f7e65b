//! A small construction language for planar geometry statements.
//!
//! Scripts are line oriented: one construction step per line, `#` comments,
//! and exactly one `conjecture` line. Compilation allocates two coordinates
//! per point (hidden technical points included), pins the first free point to
//! the origin, and emits one hypothesis polynomial per constraint; the
//! conjecture becomes the thesis.

mod compile;
mod parse;

pub use compile::{compile, compile_with, CompileOptions};
pub use parse::parse_construction;

use num_rational::BigRational;
use thiserror::Error;

use crate::classifier::Statement;

/// A script error with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ScriptError {
    pub line: usize,
    pub message: String,
}

impl ScriptError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> ScriptError {
        ScriptError {
            line,
            message: message.into(),
        }
    }
}

/// Radius of a constructed circle: a named segment, or a squared rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RadiusSpec {
    Segment(String),
    /// The square of the radius, keeping all data rational.
    SquaredConstant(BigRational),
}

/// One construction step. Referents are names of earlier steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructionStep {
    FreePoint {
        name: String,
    },
    FixedPoint {
        name: String,
        x: BigRational,
        y: BigRational,
    },
    PointOnCircle {
        name: String,
        circle: String,
    },
    PointOnLine {
        name: String,
        line: String,
    },
    Midpoint {
        name: String,
        a: String,
        b: String,
    },
    Line {
        name: String,
        a: String,
        b: String,
    },
    Segment {
        name: String,
        a: String,
        b: String,
    },
    ParallelLine {
        name: String,
        through: String,
        reference: String,
    },
    PerpendicularLine {
        name: String,
        through: String,
        reference: String,
    },
    CircleCenterRadius {
        name: String,
        center: String,
        radius: RadiusSpec,
    },
    IntersectLineLine {
        name: String,
        a: String,
        b: String,
    },
    IntersectLineCircle {
        name: String,
        line: String,
        circle: String,
    },
    IntersectCircleCircle {
        name: String,
        a: String,
        b: String,
    },
}

impl ConstructionStep {
    pub fn name(&self) -> &str {
        match self {
            ConstructionStep::FreePoint { name }
            | ConstructionStep::FixedPoint { name, .. }
            | ConstructionStep::PointOnCircle { name, .. }
            | ConstructionStep::PointOnLine { name, .. }
            | ConstructionStep::Midpoint { name, .. }
            | ConstructionStep::Line { name, .. }
            | ConstructionStep::Segment { name, .. }
            | ConstructionStep::ParallelLine { name, .. }
            | ConstructionStep::PerpendicularLine { name, .. }
            | ConstructionStep::CircleCenterRadius { name, .. }
            | ConstructionStep::IntersectLineLine { name, .. }
            | ConstructionStep::IntersectLineCircle { name, .. }
            | ConstructionStep::IntersectCircleCircle { name, .. } => name,
        }
    }
}

/// The conjecture to test. Parallel and perpendicular take segment or line
/// names; the others take point names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Predicate {
    Parallel(String, String),
    Perpendicular(String, String),
    EqualDistance(String, String, String, String),
    Collinear(String, String, String),
}

/// A parsed script: ordered steps plus exactly one conjecture.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub steps: Vec<ConstructionStep>,
    pub conjecture: Predicate,
}

/// Which coordinate of a point a ring variable holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coordinate {
    X,
    Y,
}

/// Origin of one ring variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarProvenance {
    pub variable: String,
    pub point: String,
    pub coordinate: Coordinate,
    /// Free coordinates make up the automatically selected independent set.
    pub free: bool,
}

/// A compiled statement with per-variable provenance.
#[derive(Debug, Clone)]
pub struct CompiledStatement {
    pub statement: Statement,
    pub provenance: Vec<VarProvenance>,
}
