//! File schemas and report rendering for the command line front-end.
//!
//! Statement files:
//!
//! ```json
//! {"ring": ["x", "y"], "hypotheses": ["x*y"], "thesis": "y", "independent": ["x"]}
//! ```
//!
//! Reports:
//!
//! ```json
//! {"verdict": "generally_true", "dimension": 1, "independent_set": ["x"],
//!  "degeneracy_conditions": ["x"], "oracle": {"zws": false, "agreement": true},
//!  "timings_ms": {"dimension": 0}}
//! ```

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use gbgeo::classifier::{Report, Statement, Verdict};
use gbgeo::geomdsl::{CompiledStatement, Coordinate};
use gbgeo::parse::parse_polynomial;
use gbgeo::poly::Polynomial;
use gbgeo::ring::{VarRing, VarSet};

/// On-disk statement schema.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StatementFile {
    pub ring: Vec<String>,
    pub hypotheses: Vec<String>,
    pub thesis: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub independent: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub provenance: Option<Vec<ProvenanceEntry>>,
}

/// Origin of one ring variable in a compiled construction.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProvenanceEntry {
    pub variable: String,
    pub point: String,
    pub coordinate: String,
    pub free: bool,
}

/// On-disk report schema; field order is the canonical output order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub verdict: String,
    pub dimension: i64,
    pub independent_set: Vec<String>,
    pub degeneracy_conditions: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle: Option<OracleFile>,
    pub timings_ms: BTreeMap<String, u64>,
}

/// Oracle cross-check block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleFile {
    pub zws: bool,
    pub agreement: bool,
}

/// Output format of `render_report`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn verdict_label(v: Verdict) -> &'static str {
    match v {
        Verdict::GenerallyTrue => "generally_true",
        Verdict::GenerallyFalse => "generally_false",
        Verdict::TrueOnPartsFalseOnParts => "true_on_parts_false_on_parts",
        Verdict::ContradictoryHypotheses => "contradictory_hypotheses",
        Verdict::NotIndependent => "not_independent",
        Verdict::DimensionMismatch => "dimension_mismatch",
    }
}

/// Validates a statement file and builds the in-memory statement.
pub fn statement_from_file(file: &StatementFile) -> Result<Statement, String> {
    for name in &file.ring {
        let mut chars = name.chars();
        let head_ok = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic());
        if !head_ok || !chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(format!("invalid variable name `{name}`"));
        }
    }
    let ring = VarRing::new(file.ring.clone()).map_err(|e| e.to_string())?;
    let hypotheses = file
        .hypotheses
        .iter()
        .map(|s| parse_polynomial(s, &ring).map_err(|e| format!("hypothesis `{s}`: {e}")))
        .collect::<Result<Vec<Polynomial>, String>>()?;
    let thesis = parse_polynomial(&file.thesis, &ring)
        .map_err(|e| format!("thesis `{}`: {e}", file.thesis))?;
    let declared_independent = match &file.independent {
        None => None,
        Some(names) => {
            let mut set = VarSet::EMPTY;
            for n in names {
                match ring.index_of(n) {
                    Some(i) => set.insert(i),
                    None => return Err(format!("independent variable `{n}` not in ring")),
                }
            }
            Some(set)
        }
    };
    Ok(Statement {
        ring,
        hypotheses,
        thesis,
        declared_independent,
    })
}

/// Serializes a compiled construction, provenance included.
pub fn statement_to_file(compiled: &CompiledStatement) -> StatementFile {
    let s = &compiled.statement;
    StatementFile {
        ring: s.ring.names().to_vec(),
        hypotheses: s.hypotheses.iter().map(|p| p.to_string()).collect(),
        thesis: s.thesis.to_string(),
        independent: s.declared_independent.map(|y| set_names(&s.ring, y)),
        provenance: Some(
            compiled
                .provenance
                .iter()
                .map(|v| ProvenanceEntry {
                    variable: v.variable.clone(),
                    point: v.point.clone(),
                    coordinate: match v.coordinate {
                        Coordinate::X => "x".to_string(),
                        Coordinate::Y => "y".to_string(),
                    },
                    free: v.free,
                })
                .collect(),
        ),
    }
}

fn set_names(ring: &Arc<VarRing>, set: VarSet) -> Vec<String> {
    set.iter().map(|i| ring.name(i).to_string()).collect()
}

/// Converts a classification report (plus optional oracle outcome) to the
/// on-disk schema.
pub fn report_to_file(report: &Report, oracle: Option<OracleFile>) -> ReportFile {
    ReportFile {
        verdict: verdict_label(report.verdict).to_string(),
        dimension: report.dimension.map(|d| d as i64).unwrap_or(-1),
        independent_set: set_names(&report.ring, report.independent_set),
        degeneracy_conditions: report
            .degeneracy_conditions
            .iter()
            .map(|p| p.to_string())
            .collect(),
        oracle,
        timings_ms: report
            .timings
            .iter()
            .map(|(k, d)| (k.clone(), d.as_millis() as u64))
            .collect(),
    }
}

/// Renders a report for humans or machines. The JSON form is stable: parsing
/// it back into `ReportFile` and re-rendering reproduces the bytes.
pub fn render_report(file: &ReportFile, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(file).expect("schema serializes"),
        Format::Text => {
            let mut out = String::new();
            let verdict_line = match file.verdict.as_str() {
                "generally_true" => "generally true".to_string(),
                "generally_false" => "generally false".to_string(),
                "true_on_parts_false_on_parts" => "true on parts, false on parts".to_string(),
                "contradictory_hypotheses" => "contradictory hypotheses".to_string(),
                "not_independent" => "the declared variable set is not independent".to_string(),
                "dimension_mismatch" => format!(
                    "dimension mismatch ({} declared, Hilbert dimension {}); \
                     check for degenerations in the construction",
                    file.independent_set.len(),
                    file.dimension
                ),
                other => other.to_string(),
            };
            out.push_str(&format!("verdict: {verdict_line}\n"));
            out.push_str(&format!("dimension: {}\n", file.dimension));
            out.push_str(&format!(
                "independent set: {{{}}}\n",
                file.independent_set.join(", ")
            ));
            if !file.degeneracy_conditions.is_empty() {
                out.push_str(&format!(
                    "degeneracy conditions: {}\n",
                    file.degeneracy_conditions.join(", ")
                ));
            }
            if let Some(oracle) = &file.oracle {
                out.push_str(&format!(
                    "oracle: zero-divisor test = {}, agreement = {}\n",
                    oracle.zws, oracle.agreement
                ));
            }
            let timings: Vec<String> = file
                .timings_ms
                .iter()
                .map(|(k, v)| format!("{k}={v}ms"))
                .collect();
            out.push_str(&format!("timings: {}\n", timings.join(" ")));
            out
        }
    }
}
