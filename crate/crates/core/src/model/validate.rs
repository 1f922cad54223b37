use std::fmt;
use std::str::FromStr;

use super::axioms::{eval, find_tuple, Axiom, AxiomSet};
use super::{Element, FiniteStructure};

/// The verdict for one axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub axiom: Axiom,
    /// `false` when the check was skipped: a required table is absent or
    /// the axiom was not requested.
    pub applicable: bool,
    pub holds: bool,
    /// First failing argument tuple in lexicographic order.
    pub witness: Option<Vec<Element>>,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    QuasiOrderedRlWajsberg,
    ResiduatedSystemOnly,
    WajsbergOnly,
    Invalid,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::QuasiOrderedRlWajsberg => "quasi-ordered-RL-Wajsberg",
            Classification::ResiduatedSystemOnly => "residuated-system-only",
            Classification::WajsbergOnly => "wajsberg-only",
            Classification::Invalid => "invalid",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Classification {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            Classification::QuasiOrderedRlWajsberg,
            Classification::ResiduatedSystemOnly,
            Classification::WajsbergOnly,
            Classification::Invalid,
        ]
        .into_iter()
        .find(|c| c.as_str() == s)
        .ok_or_else(|| format!("unknown classification `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    /// One entry per catalog axiom, in catalog order.
    pub diagnostics: Vec<Diagnostic>,
    pub classification: Classification,
    /// Informational only; never part of the axiom catalog.
    pub antisymmetric: bool,
    pub strict_link: bool,
}

impl ValidationReport {
    pub fn diagnostic(&self, axiom: Axiom) -> &Diagnostic {
        self.diagnostics
            .iter()
            .find(|d| d.axiom == axiom)
            .expect("one diagnostic per catalog axiom")
    }

    pub fn failures(&self) -> impl Iterator<Item = &Diagnostic> {
        self.diagnostics.iter().filter(|d| d.applicable && !d.holds)
    }

    pub fn all_hold(&self) -> bool {
        self.failures().next().is_none()
    }

    /// Applicability flag per axiom, in catalog order.
    pub fn applicability(&self) -> Vec<(Axiom, bool)> {
        self.diagnostics
            .iter()
            .map(|d| (d.axiom, d.applicable))
            .collect()
    }
}

/// Validates every axiom of the catalog.
pub fn validate(s: &FiniteStructure, strict_link: bool) -> ValidationReport {
    validate_axioms(s, AxiomSet::full(), strict_link)
}

/// Validates only the requested axioms; the rest are reported as skipped.
pub fn validate_axioms(s: &FiniteStructure, axioms: AxiomSet, strict_link: bool) -> ValidationReport {
    let diagnostics: Vec<Diagnostic> = Axiom::ALL
        .into_iter()
        .map(|axiom| diagnose(s, axiom, axioms.contains(axiom), strict_link))
        .collect();
    let classification = classify(&diagnostics, s.has_mul());
    ValidationReport {
        diagnostics,
        classification,
        antisymmetric: s.order().is_antisymmetric(),
        strict_link,
    }
}

/// First failing tuple for `axiom`, or `None` if it holds everywhere.
/// The axiom must be applicable to `s`.
pub fn find_violation(s: &FiniteStructure, axiom: Axiom, strict_link: bool) -> Option<Vec<Element>> {
    find_tuple(s.size(), axiom.arity(), |args| {
        match eval(axiom, s, args, strict_link) {
            Ok(true) => None,
            Ok(false) => Some(args.to_vec()),
            Err(_) => unreachable!("complete structures never block"),
        }
    })
}

fn skip_reason(s: &FiniteStructure, axiom: Axiom) -> Option<&'static str> {
    if axiom.needs_mul() && !s.has_mul() {
        Some("not applicable: no product table")
    } else if axiom == Axiom::W4 && s.neg_table().is_none() {
        Some("not applicable: no negation table and no unique least element")
    } else {
        None
    }
}

fn diagnose(s: &FiniteStructure, axiom: Axiom, requested: bool, strict_link: bool) -> Diagnostic {
    let skipped = if requested {
        skip_reason(s, axiom)
    } else {
        Some("not requested")
    };
    if let Some(reason) = skipped {
        return Diagnostic {
            axiom,
            applicable: false,
            holds: true,
            witness: None,
            detail: reason.to_string(),
        };
    }
    let formula = axiom.formula(strict_link);
    match find_violation(s, axiom, strict_link) {
        None => Diagnostic {
            axiom,
            applicable: true,
            holds: true,
            witness: None,
            detail: format!("{formula} holds for all elements"),
        },
        Some(w) => {
            let vars = ["x", "y", "z"];
            let bound: Vec<String> = w
                .iter()
                .zip(vars)
                .map(|(&e, v)| format!("{v}={}", s.label(e)))
                .collect();
            Diagnostic {
                axiom,
                applicable: true,
                holds: false,
                detail: format!("{formula} fails at {}", bound.join(", ")),
                witness: Some(w),
            }
        }
    }
}

const RESIDUATED: [Axiom; 8] = [
    Axiom::QoRefl,
    Axiom::QoTrans,
    Axiom::MonAssoc,
    Axiom::MonComm,
    Axiom::MonUnit,
    Axiom::Top,
    Axiom::Res,
    Axiom::Compat,
];

const WAJSBERG: [Axiom; 4] = [Axiom::W1, Axiom::W2, Axiom::W3, Axiom::W4];

fn classify(diagnostics: &[Diagnostic], has_mul: bool) -> Classification {
    let ok = |group: &[Axiom]| {
        diagnostics
            .iter()
            .filter(|d| group.contains(&d.axiom))
            .all(|d| !d.applicable || d.holds)
    };
    if diagnostics.iter().all(|d| !d.applicable || d.holds) {
        Classification::QuasiOrderedRlWajsberg
    } else if has_mul && ok(&RESIDUATED) {
        Classification::ResiduatedSystemOnly
    } else if ok(&WAJSBERG) {
        Classification::WajsbergOnly
    } else {
        Classification::Invalid
    }
}
