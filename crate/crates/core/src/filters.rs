//! Filters, implicative filters, up-intervals and filter census.
//!
//! A filter contains `1`, is upward closed under `≼` and closed under modus
//! ponens. An implicative filter replaces modus ponens with the nested rule
//! `r→(p→k) ∈ M ∧ r→p ∈ M ⟹ r→k ∈ M`.

use std::fmt;

use thiserror::Error;

use crate::model::{Element, FiniteStructure};

/// Largest carrier size for which subsets are ever enumerated.
pub const HARD_ENUM_CAP: usize = 25;
/// Default carrier size limit for enumeration.
pub const DEFAULT_ENUM_LIMIT: usize = 20;
/// Environment variable overriding [`DEFAULT_ENUM_LIMIT`].
pub const ENUM_LIMIT_ENV: &str = "QRW_ENUM_LIMIT";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FilterError {
    #[error("subset has {found} entries but the carrier has {expected} elements")]
    SizeMismatch { expected: usize, found: usize },
    #[error("carrier of size {n} exceeds the subset enumeration limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
    #[error("element {element} is outside the carrier 0..{n}")]
    ElementOutOfRange { element: Element, n: usize },
}

/// Carrier-size cap for subset enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumLimit(usize);

impl EnumLimit {
    /// Clamped to [`HARD_ENUM_CAP`].
    pub fn new(limit: usize) -> Self {
        EnumLimit(limit.min(HARD_ENUM_CAP))
    }

    /// Reads `QRW_ENUM_LIMIT`, falling back to the default when it is unset
    /// or unparsable.
    pub fn from_env() -> Self {
        std::env::var(ENUM_LIMIT_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(EnumLimit::new)
            .unwrap_or_default()
    }

    pub fn get(self) -> usize {
        self.0
    }

    pub fn check(self, n: usize) -> Result<(), FilterError> {
        if n > self.0 {
            Err(FilterError::LimitExceeded { n, limit: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for EnumLimit {
    fn default() -> Self {
        EnumLimit(DEFAULT_ENUM_LIMIT)
    }
}

/// Characteristic vector of a subset of the carrier.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    bits: Vec<bool>,
}

impl Subset {
    pub fn empty(n: usize) -> Self {
        Subset {
            bits: vec![false; n],
        }
    }

    pub fn full(n: usize) -> Self {
        Subset { bits: vec![true; n] }
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        Subset { bits }
    }

    pub fn from_indices(n: usize, indices: &[Element]) -> Result<Self, FilterError> {
        let mut s = Subset::empty(n);
        for &i in indices {
            if i >= n {
                return Err(FilterError::ElementOutOfRange { element: i, n });
            }
            s.bits[i] = true;
        }
        Ok(s)
    }

    /// Bit `i` of `mask` is membership of element `i`.
    pub fn from_mask(n: usize, mask: u32) -> Self {
        Subset {
            bits: (0..n).map(|i| mask >> i & 1 == 1).collect(),
        }
    }

    /// Inverse of [`Subset::from_mask`]; `None` above 32 elements.
    pub fn to_mask(&self) -> Option<u32> {
        (self.bits.len() <= 32).then(|| {
            self.bits
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .fold(0, |m, (i, _)| m | 1 << i)
        })
    }

    pub fn universe_size(&self) -> usize {
        self.bits.len()
    }

    #[inline]
    pub fn contains(&self, x: Element) -> bool {
        self.bits[x]
    }

    pub fn insert(&mut self, x: Element) -> bool {
        !std::mem::replace(&mut self.bits[x], true)
    }

    pub fn len(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Members in ascending order.
    pub fn indices(&self) -> Vec<Element> {
        self.iter().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i)
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.bits.len() == other.bits.len()
            && self.bits.iter().zip(&other.bits).all(|(&a, &b)| !a || b)
    }

    pub fn union(&self, other: &Subset) -> Subset {
        Subset {
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(&a, &b)| a || b)
                .collect(),
        }
    }

    pub fn check_size(&self, s: &FiniteStructure) -> Result<(), FilterError> {
        if self.bits.len() == s.size() {
            Ok(())
        } else {
            Err(FilterError::SizeMismatch {
                expected: s.size(),
                found: self.bits.len(),
            })
        }
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FilterKind {
    Filter,
    Implicative,
}

impl FilterKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FilterKind::Filter => "filter",
            FilterKind::Implicative => "implicative",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FilterClause {
    /// `1 ∈ M`
    F1,
    /// `r ∈ M ∧ r ≼ p ⟹ p ∈ M`
    F2,
    /// `r ∈ M ∧ r→p ∈ M ⟹ p ∈ M`
    F3,
    I1,
    I2,
    /// `r→(p→k) ∈ M ∧ r→p ∈ M ⟹ r→k ∈ M`
    I3,
}

impl FilterClause {
    pub fn as_str(self) -> &'static str {
        match self {
            FilterClause::F1 => "F1",
            FilterClause::F2 => "F2",
            FilterClause::F3 => "F3",
            FilterClause::I1 => "I1",
            FilterClause::I2 => "I2",
            FilterClause::I3 => "I3",
        }
    }
}

impl fmt::Display for FilterClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilterVerdict {
    pub kind: FilterKind,
    pub holds: bool,
    pub failed_clause: Option<FilterClause>,
    /// Elements instantiating the failed clause: `(1)`, `(r, p)` or `(r, p, k)`.
    pub witness: Option<Vec<Element>>,
}

impl FilterVerdict {
    fn pass(kind: FilterKind) -> Self {
        FilterVerdict {
            kind,
            holds: true,
            failed_clause: None,
            witness: None,
        }
    }

    fn fail(kind: FilterKind, clause: FilterClause, witness: Vec<Element>) -> Self {
        FilterVerdict {
            kind,
            holds: false,
            failed_clause: Some(clause),
            witness: Some(witness),
        }
    }
}

fn upward_failure(s: &FiniteStructure, m: &Subset) -> Option<(Element, Element)> {
    for r in m.iter() {
        for p in s.elements() {
            if s.le(r, p) && !m.contains(p) {
                return Some((r, p));
            }
        }
    }
    None
}

pub fn is_filter(s: &FiniteStructure, m: &Subset) -> Result<FilterVerdict, FilterError> {
    m.check_size(s)?;
    let kind = FilterKind::Filter;
    if !m.contains(s.one()) {
        return Ok(FilterVerdict::fail(kind, FilterClause::F1, vec![s.one()]));
    }
    if let Some((r, p)) = upward_failure(s, m) {
        return Ok(FilterVerdict::fail(kind, FilterClause::F2, vec![r, p]));
    }
    for r in m.iter() {
        for p in s.elements() {
            if m.contains(s.imp(r, p)) && !m.contains(p) {
                return Ok(FilterVerdict::fail(kind, FilterClause::F3, vec![r, p]));
            }
        }
    }
    Ok(FilterVerdict::pass(kind))
}

pub fn is_implicative_filter(
    s: &FiniteStructure,
    m: &Subset,
) -> Result<FilterVerdict, FilterError> {
    m.check_size(s)?;
    let kind = FilterKind::Implicative;
    if !m.contains(s.one()) {
        return Ok(FilterVerdict::fail(kind, FilterClause::I1, vec![s.one()]));
    }
    if let Some((r, p)) = upward_failure(s, m) {
        return Ok(FilterVerdict::fail(kind, FilterClause::I2, vec![r, p]));
    }
    if let Some(w) = nested_rule_failure(s, m) {
        return Ok(FilterVerdict::fail(kind, FilterClause::I3, w));
    }
    Ok(FilterVerdict::pass(kind))
}

fn nested_rule_failure(s: &FiniteStructure, m: &Subset) -> Option<Vec<Element>> {
    for r in s.elements() {
        for p in s.elements() {
            if !m.contains(s.imp(r, p)) {
                continue;
            }
            for k in s.elements() {
                if m.contains(s.imp(r, s.imp(p, k))) && !m.contains(s.imp(r, k)) {
                    return Some(vec![r, p, k]);
                }
            }
        }
    }
    None
}

pub fn check(
    s: &FiniteStructure,
    m: &Subset,
    kind: FilterKind,
) -> Result<FilterVerdict, FilterError> {
    match kind {
        FilterKind::Filter => is_filter(s, m),
        FilterKind::Implicative => is_implicative_filter(s, m),
    }
}

/// `Y(ψ) = {r : ψ ≼ r}`.
pub fn up_interval(s: &FiniteStructure, psi: Element) -> Subset {
    Subset::from_bits(s.elements().map(|r| s.le(psi, r)).collect())
}

/// Least filter containing `seed`, computed as a monotone fixpoint.
pub fn generated_filter(s: &FiniteStructure, seed: &Subset) -> Result<Subset, FilterError> {
    seed.check_size(s)?;
    let mut m = seed.clone();
    m.insert(s.one());
    loop {
        let mut changed = false;
        for r in s.elements() {
            if !m.contains(r) {
                continue;
            }
            for p in s.elements() {
                if !m.contains(p) && (s.le(r, p) || m.contains(s.imp(r, p))) {
                    m.insert(p);
                    changed = true;
                }
            }
        }
        if !changed {
            return Ok(m);
        }
    }
}

/// Bitmask view of a structure used by the census loops.
pub(crate) struct MaskView<'a> {
    s: &'a FiniteStructure,
    one_bit: u32,
    up: Vec<u32>,
}

impl<'a> MaskView<'a> {
    pub(crate) fn new(s: &'a FiniteStructure) -> Self {
        let up = s
            .elements()
            .map(|r| {
                s.elements()
                    .filter(|&p| s.le(r, p))
                    .fold(0u32, |m, p| m | 1 << p)
            })
            .collect();
        MaskView {
            s,
            one_bit: 1 << s.one(),
            up,
        }
    }

    #[inline]
    fn upward_closed(&self, m: u32) -> bool {
        let mut rest = m;
        while rest != 0 {
            let r = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.up[r] & !m != 0 {
                return false;
            }
        }
        true
    }

    pub(crate) fn is_filter(&self, m: u32) -> bool {
        if m & self.one_bit == 0 || !self.upward_closed(m) {
            return false;
        }
        let s = self.s;
        let mut rest = m;
        while rest != 0 {
            let r = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            for p in s.elements() {
                if m >> s.imp(r, p) & 1 == 1 && m >> p & 1 == 0 {
                    return false;
                }
            }
        }
        true
    }

    pub(crate) fn is_implicative(&self, m: u32) -> bool {
        if m & self.one_bit == 0 || !self.upward_closed(m) {
            return false;
        }
        let s = self.s;
        let has = |x: Element| m >> x & 1 == 1;
        for r in s.elements() {
            for p in s.elements() {
                if !has(s.imp(r, p)) {
                    continue;
                }
                for k in s.elements() {
                    if has(s.imp(r, s.imp(p, k))) && !has(s.imp(r, k)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub(crate) fn accepts(&self, kind: FilterKind, m: u32) -> bool {
        match kind {
            FilterKind::Filter => self.is_filter(m),
            FilterKind::Implicative => self.is_implicative(m),
        }
    }
}

/// All subsets passing the requested predicate, ascending by bitmask with
/// element 0 least significant. Refuses carriers above the limit read from
/// `QRW_ENUM_LIMIT` (default 20).
pub fn enumerate_filters(s: &FiniteStructure, kind: FilterKind) -> Result<Vec<Subset>, FilterError> {
    enumerate_filters_with_limit(s, kind, EnumLimit::from_env())
}

pub fn enumerate_filters_with_limit(
    s: &FiniteStructure,
    kind: FilterKind,
    limit: EnumLimit,
) -> Result<Vec<Subset>, FilterError> {
    let n = s.size();
    limit.check(n)?;
    let view = MaskView::new(s);
    let one = s.one();
    // Masks containing 1 are exactly the insertions of a 1-bit into the
    // (n-1)-bit masks of the other elements; this keeps ascending order.
    let low = (1u32 << one) - 1;
    let rest_count = 1u64 << (n - 1);
    let mut out = Vec::new();
    for rest in 0..rest_count {
        let rest = rest as u32;
        let m = (rest & low) | view.one_bit | ((rest & !low) << 1);
        if view.accepts(kind, m) {
            out.push(Subset::from_mask(n, m));
        }
    }
    Ok(out)
}
