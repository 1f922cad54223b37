use std::fmt;

use super::Element;

/// A binary relation on `0..n` stored as a dense boolean matrix.
///
/// `le(i, j)` reads "i ≼ j". The value is kept raw: reflexivity and
/// transitivity are properties checked by the validator, not enforced on
/// construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuasiOrder {
    n: usize,
    rel: Vec<bool>,
}

impl QuasiOrder {
    /// The relation where `le(i, j)` is `f(i, j)`.
    pub fn from_fn(n: usize, mut f: impl FnMut(Element, Element) -> bool) -> Self {
        let mut rel = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                rel.push(f(i, j));
            }
        }
        QuasiOrder { n, rel }
    }

    /// Row-major flat matrix of length `n * n`.
    pub fn from_flat(n: usize, rel: Vec<bool>) -> Option<Self> {
        (rel.len() == n * n).then_some(QuasiOrder { n, rel })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| i == j)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn le(&self, i: Element, j: Element) -> bool {
        self.rel[i * self.n + j]
    }

    pub fn set(&mut self, i: Element, j: Element, value: bool) {
        self.rel[i * self.n + j] = value;
    }

    pub fn row(&self, i: Element) -> &[bool] {
        &self.rel[i * self.n..(i + 1) * self.n]
    }

    pub fn as_flat(&self) -> &[bool] {
        &self.rel
    }

    pub fn reflexivity_failure(&self) -> Option<Element> {
        (0..self.n).find(|&i| !self.le(i, i))
    }

    /// First `(i, j, k)` in lexicographic order with `i ≼ j`, `j ≼ k` but not `i ≼ k`.
    pub fn transitivity_failure(&self) -> Option<(Element, Element, Element)> {
        for i in 0..self.n {
            for j in 0..self.n {
                if !self.le(i, j) {
                    continue;
                }
                for k in 0..self.n {
                    if self.le(j, k) && !self.le(i, k) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// First pair of distinct, mutually related elements.
    pub fn antisymmetry_failure(&self) -> Option<(Element, Element)> {
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.le(i, j) && self.le(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.antisymmetry_failure().is_none()
    }

    pub fn is_total(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.le(i, j) || self.le(j, i)))
    }

    /// Reflexive-transitive closure (Warshall).
    pub fn closure(&self) -> QuasiOrder {
        let mut out = self.clone();
        for i in 0..self.n {
            out.set(i, i, true);
        }
        for k in 0..self.n {
            for i in 0..self.n {
                if !out.le(i, k) {
                    continue;
                }
                for j in 0..self.n {
                    if out.le(k, j) {
                        out.set(i, j, true);
                    }
                }
            }
        }
        out
    }

    /// Elements below every element.
    pub fn least_elements(&self) -> Vec<Element> {
        (0..self.n)
            .filter(|&z| (0..self.n).all(|x| self.le(z, x)))
            .collect()
    }

    /// The least element, if exactly one exists.
    pub fn unique_least(&self) -> Option<Element> {
        match self.least_elements().as_slice() {
            [z] => Some(*z),
            _ => None,
        }
    }
}

impl fmt::Debug for QuasiOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|&b| if b { '1' } else { '0' })
                    .collect()
            })
            .collect();
        write!(f, "QuasiOrder[{}]", rows.join(" "))
    }
}
