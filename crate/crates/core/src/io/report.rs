//! JSON reports.
//!
//! Keys are emitted in declaration order and optional values as `null`, so
//! a parsed report re-serializes to the same bytes.

use serde::{Deserialize, Serialize};

use crate::filters::{FilterVerdict, Subset};
use crate::model::{Element, FiniteStructure, ValidationReport};
use crate::propositions::PropVerdict;

/// JSON Schema for [`ReportDocument`].
pub const REPORT_SCHEMA: &str = include_str!("../../schema/report.schema.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub input: InputEntry,
    pub classification: String,
    pub diagnostics: Vec<DiagnosticEntry>,
    /// `null` when the census was not computed.
    pub filters: Option<Vec<Vec<Element>>>,
    pub implicative_filters: Option<Vec<Vec<Element>>>,
    pub prop_verdicts: Vec<PropEntry>,
    pub filter_checks: Vec<FilterCheckEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputEntry {
    pub source: String,
    pub size: usize,
    pub one: Element,
    pub has_mul: bool,
    pub strict_link: bool,
    pub antisymmetric: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagnosticEntry {
    pub axiom_id: String,
    pub applicable: bool,
    pub holds: bool,
    pub witness: Option<Vec<Element>>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PropEntry {
    pub prop_id: String,
    pub holds: bool,
    pub outcome: String,
    pub witness: Option<PropWitnessEntry>,
    pub conditions: Vec<ConditionEntry>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PropWitnessEntry {
    pub subsets: Vec<Vec<Element>>,
    pub elements: Vec<Element>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConditionEntry {
    pub label: String,
    pub value: Option<bool>,
    pub witness: Option<Vec<Element>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FilterCheckEntry {
    pub subset: Vec<Element>,
    pub kind_requested: String,
    pub holds: bool,
    pub failed_clause: Option<String>,
    pub witness: Option<Vec<Element>>,
}

fn indices(m: &Subset) -> Vec<Element> {
    m.indices()
}

impl From<&PropVerdict> for PropEntry {
    fn from(v: &PropVerdict) -> Self {
        PropEntry {
            prop_id: v.prop.id().to_string(),
            holds: v.holds(),
            outcome: v.outcome.as_str().to_string(),
            witness: v.witness.as_ref().map(|w| PropWitnessEntry {
                subsets: w.subsets.iter().map(indices).collect(),
                elements: w.elements.clone(),
            }),
            conditions: v
                .conditions
                .iter()
                .map(|c| ConditionEntry {
                    label: c.label.clone(),
                    value: c.value,
                    witness: c.witness.clone(),
                })
                .collect(),
            detail: v.detail.clone(),
        }
    }
}

impl FilterCheckEntry {
    pub fn new(m: &Subset, v: &FilterVerdict) -> Self {
        FilterCheckEntry {
            subset: indices(m),
            kind_requested: v.kind.as_str().to_string(),
            holds: v.holds,
            failed_clause: v.failed_clause.map(|c| c.as_str().to_string()),
            witness: v.witness.clone(),
        }
    }
}

impl ReportDocument {
    /// A report carrying the validation verdicts; the other sections start
    /// empty.
    pub fn new(source: &str, s: &FiniteStructure, report: &ValidationReport) -> Self {
        ReportDocument {
            input: InputEntry {
                source: source.to_string(),
                size: s.size(),
                one: s.one(),
                has_mul: s.has_mul(),
                strict_link: report.strict_link,
                antisymmetric: report.antisymmetric,
            },
            classification: report.classification.as_str().to_string(),
            diagnostics: report
                .diagnostics
                .iter()
                .map(|d| DiagnosticEntry {
                    axiom_id: d.axiom.code().to_string(),
                    applicable: d.applicable,
                    holds: d.holds,
                    witness: d.witness.clone(),
                    detail: d.detail.clone(),
                })
                .collect(),
            filters: None,
            implicative_filters: None,
            prop_verdicts: Vec::new(),
            filter_checks: Vec::new(),
        }
    }

    pub fn with_census(mut self, filters: &[Subset], implicative: &[Subset]) -> Self {
        self.filters = Some(filters.iter().map(indices).collect());
        self.implicative_filters = Some(implicative.iter().map(indices).collect());
        self
    }

    pub fn with_props(mut self, verdicts: &[PropVerdict]) -> Self {
        self.prop_verdicts = verdicts.iter().map(PropEntry::from).collect();
        self
    }

    pub fn with_filter_check(mut self, m: &Subset, v: &FilterVerdict) -> Self {
        self.filter_checks.push(FilterCheckEntry::new(m, v));
        self
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}
