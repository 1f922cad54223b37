use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{Element, FiniteStructure};

/// One entry of the axiom catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    QoRefl,
    QoTrans,
    MonAssoc,
    MonComm,
    MonUnit,
    Top,
    Res,
    Compat,
    Link,
    W1,
    W2,
    W3,
    W4,
}

impl Axiom {
    pub const ALL: [Axiom; 13] = [
        Axiom::QoRefl,
        Axiom::QoTrans,
        Axiom::MonAssoc,
        Axiom::MonComm,
        Axiom::MonUnit,
        Axiom::Top,
        Axiom::Res,
        Axiom::Compat,
        Axiom::Link,
        Axiom::W1,
        Axiom::W2,
        Axiom::W3,
        Axiom::W4,
    ];

    pub fn code(self) -> &'static str {
        match self {
            Axiom::QoRefl => "QO-REFL",
            Axiom::QoTrans => "QO-TRANS",
            Axiom::MonAssoc => "MON-ASSOC",
            Axiom::MonComm => "MON-COMM",
            Axiom::MonUnit => "MON-UNIT",
            Axiom::Top => "TOP",
            Axiom::Res => "RES",
            Axiom::Compat => "COMPAT",
            Axiom::Link => "LINK",
            Axiom::W1 => "W1",
            Axiom::W2 => "W2",
            Axiom::W3 => "W3",
            Axiom::W4 => "W4",
        }
    }

    /// Number of universally quantified variables.
    pub fn arity(self) -> usize {
        match self {
            Axiom::QoRefl | Axiom::MonUnit | Axiom::Top | Axiom::W1 => 1,
            Axiom::MonComm | Axiom::Link | Axiom::W3 | Axiom::W4 => 2,
            Axiom::QoTrans | Axiom::MonAssoc | Axiom::Res | Axiom::Compat | Axiom::W2 => 3,
        }
    }

    pub fn needs_mul(self) -> bool {
        matches!(
            self,
            Axiom::MonAssoc | Axiom::MonComm | Axiom::MonUnit | Axiom::Res | Axiom::Compat
        )
    }

    pub fn formula(self, strict_link: bool) -> &'static str {
        match self {
            Axiom::QoRefl => "x ≼ x",
            Axiom::QoTrans => "x ≼ y ∧ y ≼ z ⟹ x ≼ z",
            Axiom::MonAssoc => "(x⊙y)⊙z = x⊙(y⊙z)",
            Axiom::MonComm => "x⊙y = y⊙x",
            Axiom::MonUnit => "1⊙x = x = x⊙1",
            Axiom::Top => "x ≼ 1",
            Axiom::Res => "x⊙y ≼ z ⟺ x ≼ y→z",
            Axiom::Compat => "x ≼ y ⟹ x⊙z ≼ y⊙z",
            Axiom::Link if strict_link => "x→y = 1 ⟺ x ≼ y",
            Axiom::Link => "x→y = 1 ⟹ x ≼ y",
            Axiom::W1 => "1→x = x",
            Axiom::W2 => "(x→y)→((y→z)→(x→z)) = 1",
            Axiom::W3 => "(x→y)→y = (y→x)→x",
            Axiom::W4 => "(¬x→¬y)→(y→x) = 1",
        }
    }

    fn bit(self) -> u16 {
        1 << (self as u16)
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown axiom id `{0}`")]
pub struct UnknownAxiom(pub String);

impl FromStr for Axiom {
    type Err = UnknownAxiom;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Axiom::ALL
            .into_iter()
            .find(|a| a.code().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| UnknownAxiom(s.to_string()))
    }
}

/// A subset of the axiom catalog.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct AxiomSet(u16);

impl AxiomSet {
    pub const fn empty() -> Self {
        AxiomSet(0)
    }

    pub fn full() -> Self {
        Axiom::ALL.into_iter().collect()
    }

    pub fn contains(self, axiom: Axiom) -> bool {
        self.0 & axiom.bit() != 0
    }

    pub fn insert(&mut self, axiom: Axiom) {
        self.0 |= axiom.bit();
    }

    pub fn remove(&mut self, axiom: Axiom) {
        self.0 &= !axiom.bit();
    }

    pub fn without(mut self, axiom: Axiom) -> Self {
        self.remove(axiom);
        self
    }

    pub fn iter(self) -> impl Iterator<Item = Axiom> {
        Axiom::ALL.into_iter().filter(move |&a| self.contains(a))
    }

    pub fn needs_mul(self) -> bool {
        self.iter().any(Axiom::needs_mul)
    }
}

impl FromIterator<Axiom> for AxiomSet {
    fn from_iter<I: IntoIterator<Item = Axiom>>(iter: I) -> Self {
        let mut set = AxiomSet::empty();
        for a in iter {
            set.insert(a);
        }
        set
    }
}

impl fmt::Debug for AxiomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(Axiom::code)).finish()
    }
}

impl fmt::Display for AxiomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let codes: Vec<&str> = self.iter().map(Axiom::code).collect();
        f.write_str(&codes.join(","))
    }
}

/// Parses a comma separated list of codes; `all` selects the full catalog.
impl FromStr for AxiomSet {
    type Err = UnknownAxiom;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().eq_ignore_ascii_case("all") {
            return Ok(AxiomSet::full());
        }
        s.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(str::parse)
            .collect()
    }
}

/// Index of a table cell that an evaluation needed but found unassigned.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Blocked(pub usize);

pub(crate) type Probe<T> = Result<T, Blocked>;

/// Read access to the operations, possibly on partially filled tables.
///
/// Complete structures never block; the model search implements this over
/// its partial assignment so the same axiom code prunes the search tree.
pub(crate) trait Interp {
    fn one(&self) -> Element;
    fn imp(&self, x: Element, y: Element) -> Probe<Element>;
    fn mul(&self, x: Element, y: Element) -> Probe<Element>;
    fn le(&self, x: Element, y: Element) -> Probe<bool>;
    /// `Ok(None)` when the structure has no negation.
    fn neg(&self, x: Element) -> Probe<Option<Element>>;
}

impl Interp for FiniteStructure {
    fn one(&self) -> Element {
        FiniteStructure::one(self)
    }

    fn imp(&self, x: Element, y: Element) -> Probe<Element> {
        Ok(FiniteStructure::imp(self, x, y))
    }

    fn mul(&self, x: Element, y: Element) -> Probe<Element> {
        Ok(FiniteStructure::mul(self, x, y).expect("product table required"))
    }

    fn le(&self, x: Element, y: Element) -> Probe<bool> {
        Ok(FiniteStructure::le(self, x, y))
    }

    fn neg(&self, x: Element) -> Probe<Option<Element>> {
        Ok(FiniteStructure::neg(self, x))
    }
}

/// Evaluates one ground instance of `axiom`.
pub(crate) fn eval<I: Interp>(
    axiom: Axiom,
    m: &I,
    args: &[Element],
    strict_link: bool,
) -> Probe<bool> {
    let one = m.one();
    Ok(match *args {
        [x] => match axiom {
            Axiom::QoRefl => m.le(x, x)?,
            Axiom::MonUnit => m.mul(one, x)? == x && m.mul(x, one)? == x,
            Axiom::Top => m.le(x, one)?,
            Axiom::W1 => m.imp(one, x)? == x,
            _ => unreachable!("{axiom} is not unary"),
        },
        [x, y] => match axiom {
            Axiom::MonComm => m.mul(x, y)? == m.mul(y, x)?,
            Axiom::Link => {
                let unit = m.imp(x, y)? == one;
                let le = m.le(x, y)?;
                if strict_link {
                    unit == le
                } else {
                    !unit || le
                }
            }
            Axiom::W3 => {
                let lhs = m.imp(m.imp(x, y)?, y)?;
                let rhs = m.imp(m.imp(y, x)?, x)?;
                lhs == rhs
            }
            Axiom::W4 => match (m.neg(x)?, m.neg(y)?) {
                (Some(nx), Some(ny)) => {
                    let lhs = m.imp(nx, ny)?;
                    m.imp(lhs, m.imp(y, x)?)? == one
                }
                _ => true,
            },
            _ => unreachable!("{axiom} is not binary"),
        },
        [x, y, z] => match axiom {
            Axiom::QoTrans => !(m.le(x, y)? && m.le(y, z)?) || m.le(x, z)?,
            Axiom::MonAssoc => m.mul(m.mul(x, y)?, z)? == m.mul(x, m.mul(y, z)?)?,
            Axiom::Res => m.le(m.mul(x, y)?, z)? == m.le(x, m.imp(y, z)?)?,
            Axiom::Compat => !m.le(x, y)? || m.le(m.mul(x, z)?, m.mul(y, z)?)?,
            Axiom::W2 => {
                let xy = m.imp(x, y)?;
                let yz = m.imp(y, z)?;
                let xz = m.imp(x, z)?;
                m.imp(xy, m.imp(yz, xz)?)? == one
            }
            _ => unreachable!("{axiom} is not ternary"),
        },
        _ => unreachable!("axioms take one to three arguments"),
    })
}

/// Calls `f` on every argument tuple of the given arity over `0..n`, in
/// lexicographic order, stopping at the first `Some`.
pub(crate) fn find_tuple<T>(
    n: usize,
    arity: usize,
    mut f: impl FnMut(&[Element]) -> Option<T>,
) -> Option<T> {
    let mut args = vec![0; arity];
    if n == 0 {
        return None;
    }
    loop {
        if let Some(t) = f(&args) {
            return Some(t);
        }
        let mut pos = arity;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            args[pos] += 1;
            if args[pos] < n {
                break;
            }
            args[pos] = 0;
        }
    }
}

/// Decides one axiom on a complete structure at a given witness tuple.
pub fn holds_at(s: &FiniteStructure, axiom: Axiom, args: &[Element], strict_link: bool) -> bool {
    assert_eq!(args.len(), axiom.arity(), "{axiom} arity");
    match eval(axiom, s, args, strict_link) {
        Ok(b) => b,
        Err(_) => unreachable!("complete structures never block"),
    }
}
