//! Executable forms of the implicative-filter propositions.
//!
//! Every checker evaluates its hypotheses and its conclusion separately. A
//! conditional whose hypotheses fail is reported as [`Outcome::Vacuous`],
//! never silently as a pass, and every failure carries a witness that can be
//! replayed through the clause formulas documented on each function.

use std::fmt;
use std::str::FromStr;

use crate::filters::{
    is_filter, is_implicative_filter, up_interval, EnumLimit, FilterError, FilterVerdict,
    MaskView, Subset,
};
use crate::model::{find_tuple, Element, FiniteStructure};

/// Identifies one checked proposition. The string ids are the ones used on
/// the command line and in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PropId {
    /// Every implicative filter is a filter.
    ImplicativeIsFilter,
    /// Triple-contraction clause on a subset.
    TripleContraction,
    /// Contraction clause `r→(r→p) ∈ M ⟹ r→p ∈ M`.
    Contraction,
    /// Implicativity transfers from a subfilter to a larger filter.
    Extension,
    /// `{1}` is implicative iff every up-interval is.
    UnitAndIntervals,
    /// Closure condition under one of two readings.
    ClosureReading,
    /// Four equivalent characterisations of implicative filters.
    EquivalentConditions,
    /// Sufficient conditions for implicativity.
    SufficientConditions,
}

impl PropId {
    pub const ALL: [PropId; 8] = [
        PropId::ImplicativeIsFilter,
        PropId::TripleContraction,
        PropId::Contraction,
        PropId::Extension,
        PropId::UnitAndIntervals,
        PropId::ClosureReading,
        PropId::EquivalentConditions,
        PropId::SufficientConditions,
    ];

    pub fn id(self) -> &'static str {
        match self {
            PropId::ImplicativeIsFilter => "2.1.2",
            PropId::TripleContraction => "2.1.3",
            PropId::Contraction => "2.1.4",
            PropId::Extension => "2.1.5",
            PropId::UnitAndIntervals => "2.1.7",
            PropId::ClosureReading => "2.1.8",
            PropId::EquivalentConditions => "2.1.9",
            PropId::SufficientConditions => "2.1.10",
        }
    }

    /// How many subsets the checker takes.
    pub fn subset_arity(self) -> usize {
        match self {
            PropId::ImplicativeIsFilter | PropId::UnitAndIntervals => 0,
            PropId::Extension => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for PropId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for PropId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PropId::ALL
            .into_iter()
            .find(|p| p.id() == s.trim())
            .ok_or_else(|| format!("unknown proposition id `{s}`"))
    }
}

/// Interpretation of the undefined binary "." in the closure condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosureReading {
    /// `r ∈ M ∧ r ≼ p ⟹ p ∈ M`
    A,
    /// `r ∈ M ∧ p ∈ M ⟹ r⊙p ∈ M`
    B,
}

impl FromStr for ClosureReading {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A" | "a" => Ok(ClosureReading::A),
            "B" | "b" => Ok(ClosureReading::B),
            other => Err(format!("unknown reading `{other}` (expected A or B)")),
        }
    }
}

impl fmt::Display for ClosureReading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClosureReading::A => "A",
            ClosureReading::B => "B",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    /// Hypotheses and conclusion both hold.
    Holds,
    /// Some hypothesis fails, so the conditional holds trivially.
    Vacuous,
    Fails,
    /// A required table is absent or the arguments are outside the domain
    /// of the proposition.
    NotApplicable,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Holds => "holds",
            Outcome::Vacuous => "vacuous",
            Outcome::Fails => "fails",
            Outcome::NotApplicable => "not-applicable",
        }
    }
}

impl FromStr for Outcome {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            Outcome::Holds,
            Outcome::Vacuous,
            Outcome::Fails,
            Outcome::NotApplicable,
        ]
        .into_iter()
        .find(|o| o.as_str() == s)
        .ok_or_else(|| format!("unknown outcome `{s}`"))
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One named hypothesis or conclusion and its value on the instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Condition {
    pub label: String,
    /// `None` when the condition could not be evaluated.
    pub value: Option<bool>,
    /// First violating tuple when `value` is `Some(false)`.
    pub witness: Option<Vec<Element>>,
}

impl Condition {
    fn new(label: impl Into<String>, violation: Option<Vec<Element>>) -> Self {
        Condition {
            label: label.into(),
            value: Some(violation.is_none()),
            witness: violation,
        }
    }

    fn from_verdict(label: impl Into<String>, v: &FilterVerdict) -> Self {
        Condition {
            label: label.into(),
            value: Some(v.holds),
            witness: v.witness.clone(),
        }
    }

    fn unavailable(label: impl Into<String>) -> Self {
        Condition {
            label: label.into(),
            value: None,
            witness: None,
        }
    }

    pub fn holds(&self) -> bool {
        self.value == Some(true)
    }
}

/// Subsets and elements demonstrating a violation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PropWitness {
    pub subsets: Vec<Subset>,
    pub elements: Vec<Element>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropVerdict {
    pub prop: PropId,
    pub outcome: Outcome,
    pub witness: Option<PropWitness>,
    pub conditions: Vec<Condition>,
    pub detail: String,
}

impl PropVerdict {
    /// Everything except [`Outcome::Fails`] counts as holding.
    pub fn holds(&self) -> bool {
        self.outcome != Outcome::Fails
    }
}

fn scan<F>(s: &FiniteStructure, arity: usize, violates: F) -> Option<Vec<Element>>
where
    F: Fn(&[Element]) -> bool,
{
    find_tuple(s.size(), arity, |t| violates(t).then(|| t.to_vec()))
}

fn fmt_tuple(t: &[Element]) -> String {
    let parts: Vec<String> = t.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// No subset of the carrier is an implicative filter without being a filter.
///
/// Scans all `2^n` subsets; the witness is the first offending subset in
/// ascending bitmask order.
pub fn check_implicative_is_filter(
    s: &FiniteStructure,
    limit: EnumLimit,
) -> Result<PropVerdict, FilterError> {
    let n = s.size();
    limit.check(n)?;
    let view = MaskView::new(s);
    let offender = (0..1u64 << n)
        .map(|m| m as u32)
        .find(|&m| view.is_implicative(m) && !view.is_filter(m));
    Ok(match offender {
        None => PropVerdict {
            prop: PropId::ImplicativeIsFilter,
            outcome: Outcome::Holds,
            witness: None,
            conditions: vec![],
            detail: format!("all {} subsets: implicative filters are filters", 1u64 << n),
        },
        Some(m) => {
            let sub = Subset::from_mask(n, m);
            let v = is_filter(s, &sub)?;
            PropVerdict {
                prop: PropId::ImplicativeIsFilter,
                outcome: Outcome::Fails,
                detail: format!(
                    "{sub} is an implicative filter but fails filter clause {}",
                    v.failed_clause.map_or("?", |c| c.as_str())
                ),
                witness: Some(PropWitness {
                    subsets: vec![sub],
                    elements: v.witness.unwrap_or_default(),
                }),
                conditions: vec![],
            }
        }
    })
}

/// `∀r,p,k: r→(p→(p→k)) ∈ M ∧ r→p ∈ M ⟹ r→k ∈ M`.
///
/// Whether `M` is a filter is reported as a condition but does not affect
/// the outcome.
pub fn check_triple_contraction(
    s: &FiniteStructure,
    m: &Subset,
) -> Result<PropVerdict, FilterError> {
    let filter = is_filter(s, m)?;
    let violation = scan(s, 3, |t| {
        let (r, p, k) = (t[0], t[1], t[2]);
        m.contains(s.imp(r, s.imp(p, s.imp(p, k)))) && m.contains(s.imp(r, p)) && !m.contains(s.imp(r, k))
    });
    Ok(clause_verdict(
        PropId::TripleContraction,
        m,
        vec![
            Condition::from_verdict("M is a filter", &filter),
            Condition::new("r→(p→(p→k)) ∈ M ∧ r→p ∈ M ⟹ r→k ∈ M", violation.clone()),
        ],
        violation,
        "(r, p, k)",
    ))
}

/// `∀r,p: r→(r→p) ∈ M ⟹ r→p ∈ M`, on an arbitrary subset.
pub fn check_contraction(s: &FiniteStructure, m: &Subset) -> Result<PropVerdict, FilterError> {
    m.check_size(s)?;
    let violation = contraction_violation(s, m);
    let implicative = is_implicative_filter(s, m)?;
    Ok(clause_verdict(
        PropId::Contraction,
        m,
        vec![
            Condition::from_verdict("M is an implicative filter", &implicative),
            Condition::new("r→(r→p) ∈ M ⟹ r→p ∈ M", violation.clone()),
        ],
        violation,
        "(r, p)",
    ))
}

fn contraction_violation(s: &FiniteStructure, m: &Subset) -> Option<Vec<Element>> {
    scan(s, 2, |t| {
        let (r, p) = (t[0], t[1]);
        m.contains(s.imp(r, s.imp(r, p))) && !m.contains(s.imp(r, p))
    })
}

fn clause_verdict(
    prop: PropId,
    m: &Subset,
    conditions: Vec<Condition>,
    violation: Option<Vec<Element>>,
    vars: &str,
) -> PropVerdict {
    match violation {
        None => PropVerdict {
            prop,
            outcome: Outcome::Holds,
            witness: None,
            conditions,
            detail: format!("clause holds on {m}"),
        },
        Some(t) => PropVerdict {
            prop,
            outcome: Outcome::Fails,
            detail: format!("clause fails on {m} at {vars} = {}", fmt_tuple(&t)),
            witness: Some(PropWitness {
                subsets: vec![m.clone()],
                elements: t,
            }),
            conditions,
        },
    }
}

/// `M1 ⊆ M2 ∧ M1 implicative ∧ M2 filter ⟹ M2 implicative`.
///
/// Not applicable unless `M1 ⊆ M2`.
pub fn check_extension(
    s: &FiniteStructure,
    m1: &Subset,
    m2: &Subset,
) -> Result<PropVerdict, FilterError> {
    let inner = is_implicative_filter(s, m1)?;
    let outer_filter = is_filter(s, m2)?;
    let outer = is_implicative_filter(s, m2)?;
    let nested = m1.is_subset_of(m2);
    let conditions = vec![
        Condition {
            label: "M1 ⊆ M2".into(),
            value: Some(nested),
            witness: None,
        },
        Condition::from_verdict("M1 is an implicative filter", &inner),
        Condition::from_verdict("M2 is a filter", &outer_filter),
        Condition::from_verdict("M2 is an implicative filter", &outer),
    ];
    let prop = PropId::Extension;
    Ok(if !nested {
        PropVerdict {
            prop,
            outcome: Outcome::NotApplicable,
            witness: None,
            conditions,
            detail: format!("{m1} is not contained in {m2}"),
        }
    } else if !(inner.holds && outer_filter.holds) {
        PropVerdict {
            prop,
            outcome: Outcome::Vacuous,
            witness: None,
            conditions,
            detail: format!("hypotheses fail for M1 = {m1}, M2 = {m2}"),
        }
    } else if outer.holds {
        PropVerdict {
            prop,
            outcome: Outcome::Holds,
            witness: None,
            conditions,
            detail: format!("{m2} is an implicative filter"),
        }
    } else {
        PropVerdict {
            prop,
            outcome: Outcome::Fails,
            detail: format!(
                "{m2} is a filter containing the implicative filter {m1} but fails {}",
                outer.failed_clause.map_or("?", |c| c.as_str())
            ),
            witness: Some(PropWitness {
                subsets: vec![m1.clone(), m2.clone()],
                elements: outer.witness.unwrap_or_default(),
            }),
            conditions,
        }
    })
}

/// `{1}` is an implicative filter iff `Y(ψ)` is one for every `ψ`.
pub fn check_unit_and_intervals(s: &FiniteStructure) -> PropVerdict {
    let n = s.size();
    let unit = Subset::from_indices(n, &[s.one()]).expect("unit in range");
    let lhs = is_implicative_filter(s, &unit).expect("sizes agree");
    let first_bad = s.elements().find_map(|psi| {
        let y = up_interval(s, psi);
        let v = is_implicative_filter(s, &y).expect("sizes agree");
        (!v.holds).then_some((psi, y, v))
    });
    let rhs = first_bad.is_none();
    let conditions = vec![
        Condition::from_verdict("{1} is an implicative filter", &lhs),
        Condition {
            label: "Y(ψ) is an implicative filter for every ψ".into(),
            value: Some(rhs),
            witness: first_bad.as_ref().map(|(psi, _, _)| vec![*psi]),
        },
    ];
    let prop = PropId::UnitAndIntervals;
    if lhs.holds == rhs {
        return PropVerdict {
            prop,
            outcome: Outcome::Holds,
            witness: None,
            conditions,
            detail: format!("both sides are {}", lhs.holds),
        };
    }
    let (detail, witness) = match first_bad {
        Some((psi, y, v)) => (
            format!("{{1}} is implicative but Y({psi}) = {y} is not"),
            PropWitness {
                subsets: vec![y],
                elements: std::iter::once(psi)
                    .chain(v.witness.unwrap_or_default())
                    .collect(),
            },
        ),
        None => (
            "every up-interval is implicative but {1} is not".to_string(),
            PropWitness {
                subsets: vec![unit],
                elements: lhs.witness.clone().unwrap_or_default(),
            },
        ),
    };
    PropVerdict {
        prop,
        outcome: Outcome::Fails,
        witness: Some(witness),
        conditions,
        detail,
    }
}

/// Reading A: `r ∈ M ∧ r ≼ p ⟹ p ∈ M`. Reading B: `r, p ∈ M ⟹ r⊙p ∈ M`,
/// not applicable without a product table.
pub fn check_closure_reading(
    s: &FiniteStructure,
    m: &Subset,
    reading: ClosureReading,
) -> Result<PropVerdict, FilterError> {
    m.check_size(s)?;
    let prop = PropId::ClosureReading;
    let (label, violation) = match reading {
        ClosureReading::A => (
            "reading A: r ∈ M ∧ r ≼ p ⟹ p ∈ M",
            scan(s, 2, |t| m.contains(t[0]) && s.le(t[0], t[1]) && !m.contains(t[1])),
        ),
        ClosureReading::B => {
            if !s.has_mul() {
                return Ok(PropVerdict {
                    prop,
                    outcome: Outcome::NotApplicable,
                    witness: None,
                    conditions: vec![Condition::unavailable("reading B: r, p ∈ M ⟹ r⊙p ∈ M")],
                    detail: "reading B needs a product table".into(),
                });
            }
            (
                "reading B: r, p ∈ M ⟹ r⊙p ∈ M",
                scan(s, 2, |t| {
                    m.contains(t[0])
                        && m.contains(t[1])
                        && !m.contains(s.mul(t[0], t[1]).expect("product table"))
                }),
            )
        }
    };
    Ok(clause_verdict(
        prop,
        m,
        vec![Condition::new(label, violation.clone())],
        violation,
        "(r, p)",
    ))
}

/// The four characterisations of an implicative filter, evaluated
/// independently:
///
/// 1. `M` is an implicative filter;
/// 2. `M` is a filter and `τ→(τ→k) ∈ M ⟹ τ→k ∈ M`;
/// 3. `M` is a filter and `τ→(ς→k) ∈ M ⟹ (τ→ς)→(τ→k) ∈ M`;
/// 4. `1 ∈ M` and `ς→(τ→(τ→k)) ∈ M ∧ ς ∈ M ⟹ τ→k ∈ M`.
///
/// Witness tuples are `(τ, k)` for condition 2 and `(τ, ς, k)` for 3 and 4.
pub fn equivalent_conditions(
    s: &FiniteStructure,
    m: &Subset,
) -> Result<[Condition; 4], FilterError> {
    let implicative = is_implicative_filter(s, m)?;
    let filter = is_filter(s, m)?;
    let has = |x: Element| m.contains(x);

    let first = Condition::from_verdict("(i) M is an implicative filter", &implicative);

    let second = if !filter.holds {
        Condition::from_verdict("(ii) M is a filter and τ→(τ→k) ∈ M ⟹ τ→k ∈ M", &filter)
    } else {
        Condition::new(
            "(ii) M is a filter and τ→(τ→k) ∈ M ⟹ τ→k ∈ M",
            scan(s, 2, |t| {
                let (tau, k) = (t[0], t[1]);
                has(s.imp(tau, s.imp(tau, k))) && !has(s.imp(tau, k))
            }),
        )
    };

    let third_label = "(iii) M is a filter and τ→(ς→k) ∈ M ⟹ (τ→ς)→(τ→k) ∈ M";
    let third = if !filter.holds {
        Condition::from_verdict(third_label, &filter)
    } else {
        Condition::new(
            third_label,
            scan(s, 3, |t| {
                let (tau, sigma, k) = (t[0], t[1], t[2]);
                has(s.imp(tau, s.imp(sigma, k)))
                    && !has(s.imp(s.imp(tau, sigma), s.imp(tau, k)))
            }),
        )
    };

    let fourth_label = "(iv) 1 ∈ M and ς→(τ→(τ→k)) ∈ M ∧ ς ∈ M ⟹ τ→k ∈ M";
    let fourth = if !has(s.one()) {
        Condition {
            label: fourth_label.into(),
            value: Some(false),
            witness: Some(vec![s.one()]),
        }
    } else {
        Condition::new(
            fourth_label,
            scan(s, 3, |t| {
                let (tau, sigma, k) = (t[0], t[1], t[2]);
                has(sigma) && has(s.imp(sigma, s.imp(tau, s.imp(tau, k)))) && !has(s.imp(tau, k))
            }),
        )
    };
    Ok([first, second, third, fourth])
}

/// Holds when the four characterisations agree on `M`.
pub fn check_equivalent_conditions(
    s: &FiniteStructure,
    m: &Subset,
) -> Result<PropVerdict, FilterError> {
    let conds = equivalent_conditions(s, m)?;
    let values: Vec<bool> = conds.iter().map(Condition::holds).collect();
    let prop = PropId::EquivalentConditions;
    let flags: String = values.iter().map(|&b| if b { 'T' } else { 'F' }).collect();
    let disagreement = (0..4)
        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
        .find(|&(i, j)| values[i] != values[j]);
    let verdict = match disagreement {
        None => PropVerdict {
            prop,
            outcome: Outcome::Holds,
            witness: None,
            conditions: conds.to_vec(),
            detail: format!("conditions agree on {m}: {flags}"),
        },
        Some((i, j)) => {
            let failing = if values[i] { j } else { i };
            PropVerdict {
                prop,
                outcome: Outcome::Fails,
                detail: format!(
                    "conditions disagree on {m}: {flags}; condition {} fails at {}",
                    failing + 1,
                    fmt_tuple(conds[failing].witness.as_deref().unwrap_or(&[]))
                ),
                witness: Some(PropWitness {
                    subsets: vec![m.clone()],
                    elements: conds[failing].witness.clone().unwrap_or_default(),
                }),
                conditions: conds.to_vec(),
            }
        }
    };
    Ok(verdict)
}

/// Hypotheses: `M` non-empty;
/// (i) `τ ∈ M ∧ τ⊙ζ ∈ M ⟹ ζ ∈ M` (skipped without a product table);
/// (ii) `τ ∈ M ∧ τ→ζ ∈ M ⟹ ζ ∈ M`;
/// (iii) `τ→(τ→ζ) ∈ M ⟹ τ→ζ ∈ M`.
/// Conclusion: `M` is an implicative filter.
pub fn check_sufficient_conditions(
    s: &FiniteStructure,
    m: &Subset,
) -> Result<PropVerdict, FilterError> {
    m.check_size(s)?;
    let has = |x: Element| m.contains(x);
    let non_empty = Condition {
        label: "M is non-empty".into(),
        value: Some(!m.is_empty()),
        witness: None,
    };
    let product_label = "(i) τ ∈ M ∧ τ⊙ζ ∈ M ⟹ ζ ∈ M";
    let product = if s.has_mul() {
        Condition::new(
            product_label,
            scan(s, 2, |t| {
                has(t[0]) && has(s.mul(t[0], t[1]).expect("product table")) && !has(t[1])
            }),
        )
    } else {
        Condition::unavailable(product_label)
    };
    let modus_ponens = Condition::new(
        "(ii) τ ∈ M ∧ τ→ζ ∈ M ⟹ ζ ∈ M",
        scan(s, 2, |t| has(t[0]) && has(s.imp(t[0], t[1])) && !has(t[1])),
    );
    let contraction = Condition::new(
        "(iii) τ→(τ→ζ) ∈ M ⟹ τ→ζ ∈ M",
        contraction_violation(s, m),
    );
    let conclusion = is_implicative_filter(s, m)?;
    let hypotheses = [non_empty, product, modus_ponens, contraction];
    let failed_hypothesis = hypotheses.iter().find(|c| c.value == Some(false)).cloned();
    let mut conditions = hypotheses.to_vec();
    conditions.push(Condition::from_verdict("M is an implicative filter", &conclusion));
    let prop = PropId::SufficientConditions;
    Ok(if let Some(h) = failed_hypothesis {
        PropVerdict {
            prop,
            outcome: Outcome::Vacuous,
            witness: None,
            conditions,
            detail: match &h.witness {
                Some(t) => format!("hypothesis {} fails at {}", h.label, fmt_tuple(t)),
                None => format!("hypothesis {} fails", h.label),
            },
        }
    } else if conclusion.holds {
        PropVerdict {
            prop,
            outcome: Outcome::Holds,
            witness: None,
            conditions,
            detail: format!("hypotheses hold and {m} is an implicative filter"),
        }
    } else {
        PropVerdict {
            prop,
            outcome: Outcome::Fails,
            detail: format!(
                "hypotheses hold but {m} fails {}",
                conclusion.failed_clause.map_or("?", |c| c.as_str())
            ),
            witness: Some(PropWitness {
                subsets: vec![m.clone()],
                elements: conclusion.witness.clone().unwrap_or_default(),
            }),
            conditions,
        }
    })
}

/// Arguments for [`check`]; unused fields are ignored.
#[derive(Clone, Debug, Default)]
pub struct PropArgs {
    pub subsets: Vec<Subset>,
    pub reading: Option<ClosureReading>,
    pub limit: EnumLimit,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PropError {
    #[error("proposition {prop} needs {needed} subset argument(s), got {got}")]
    MissingSubset {
        prop: PropId,
        needed: usize,
        got: usize,
    },
    #[error("proposition {0} needs an explicit reading (A or B)")]
    MissingReading(PropId),
    #[error(transparent)]
    Filter(#[from] FilterError),
}

/// Dispatches to the checker for `prop`.
pub fn check(s: &FiniteStructure, prop: PropId, args: &PropArgs) -> Result<PropVerdict, PropError> {
    let needed = prop.subset_arity();
    if args.subsets.len() < needed {
        return Err(PropError::MissingSubset {
            prop,
            needed,
            got: args.subsets.len(),
        });
    }
    let m = args.subsets.first();
    Ok(match prop {
        PropId::ImplicativeIsFilter => check_implicative_is_filter(s, args.limit)?,
        PropId::TripleContraction => check_triple_contraction(s, m.unwrap())?,
        PropId::Contraction => check_contraction(s, m.unwrap())?,
        PropId::Extension => check_extension(s, m.unwrap(), &args.subsets[1])?,
        PropId::UnitAndIntervals => check_unit_and_intervals(s),
        PropId::ClosureReading => {
            let reading = args.reading.ok_or(PropError::MissingReading(prop))?;
            check_closure_reading(s, m.unwrap(), reading)?
        }
        PropId::EquivalentConditions => check_equivalent_conditions(s, m.unwrap())?,
        PropId::SufficientConditions => check_sufficient_conditions(s, m.unwrap())?,
    })
}
