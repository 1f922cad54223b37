use thiserror::Error;

use super::{Element, QuasiOrder};

/// Which operation table a structural error refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Table {
    Imp,
    Mul,
    Neg,
    Order,
    Names,
}

impl Table {
    pub fn name(self) -> &'static str {
        match self {
            Table::Imp => "imp",
            Table::Mul => "mul",
            Table::Neg => "neg",
            Table::Order => "order",
            Table::Names => "names",
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("carrier must have at least one element")]
    EmptyCarrier,
    #[error("unit {one} is outside the carrier 0..{n}")]
    UnitOutOfRange { one: usize, n: usize },
    #[error("{} table: expected {expected} rows, found {found}", .table.name())]
    RowCount {
        table: Table,
        expected: usize,
        found: usize,
    },
    #[error("{} table row {row}: expected {expected} entries, found {found}", .table.name())]
    RowLength {
        table: Table,
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("{} table cell ({row}, {col}) holds {value}, outside the carrier 0..{n}", .table.name())]
    CellOutOfRange {
        table: Table,
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },
}

/// A finite algebra `(A, →, ⊙, ¬, 1, ≼)` given by its operation tables.
///
/// Elements are indices `0..n`. `imp` and `order` are mandatory; `mul` is
/// optional. `neg` is optional too, but when it is not supplied and the
/// order has a unique least element `z`, the negation `x ↦ x → z` is
/// installed on construction, so `neg()` is `None` exactly when no
/// negation is available.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteStructure {
    n: usize,
    one: Element,
    imp: Vec<Element>,
    mul: Option<Vec<Element>>,
    neg: Option<Vec<Element>>,
    order: QuasiOrder,
    names: Option<Vec<String>>,
}

/// Collects tables for [`FiniteStructure::build`].
#[derive(Clone, Debug, Default)]
pub struct StructureBuilder {
    one: Element,
    imp: Vec<Vec<Element>>,
    mul: Option<Vec<Vec<Element>>>,
    neg: Option<Vec<Element>>,
    order: Option<QuasiOrder>,
    names: Option<Vec<String>>,
}

impl StructureBuilder {
    pub fn mul(mut self, rows: Vec<Vec<Element>>) -> Self {
        self.mul = Some(rows);
        self
    }

    pub fn maybe_mul(mut self, rows: Option<Vec<Vec<Element>>>) -> Self {
        self.mul = rows;
        self
    }

    pub fn neg(mut self, values: Vec<Element>) -> Self {
        self.neg = Some(values);
        self
    }

    pub fn maybe_neg(mut self, values: Option<Vec<Element>>) -> Self {
        self.neg = values;
        self
    }

    /// Without an explicit order the implication order is installed.
    pub fn order(mut self, order: QuasiOrder) -> Self {
        self.order = Some(order);
        self
    }

    pub fn maybe_order(mut self, order: Option<QuasiOrder>) -> Self {
        self.order = order;
        self
    }

    pub fn names(mut self, names: Vec<String>) -> Self {
        self.names = Some(names);
        self
    }

    pub fn maybe_names(mut self, names: Option<Vec<String>>) -> Self {
        self.names = names;
        self
    }

    pub fn build(self) -> Result<FiniteStructure, StructureError> {
        let n = self.imp.len();
        if n == 0 {
            return Err(StructureError::EmptyCarrier);
        }
        if self.one >= n {
            return Err(StructureError::UnitOutOfRange { one: self.one, n });
        }
        let imp = flatten_table(Table::Imp, n, self.imp)?;
        let mul = self
            .mul
            .map(|rows| flatten_table(Table::Mul, n, rows))
            .transpose()?;
        if let Some(names) = &self.names {
            if names.len() != n {
                return Err(StructureError::RowLength {
                    table: Table::Names,
                    row: 0,
                    expected: n,
                    found: names.len(),
                });
            }
        }
        let order = match self.order {
            Some(order) => {
                if order.size() != n {
                    return Err(StructureError::RowCount {
                        table: Table::Order,
                        expected: n,
                        found: order.size(),
                    });
                }
                order
            }
            None => QuasiOrder::from_fn(n, |x, y| imp[x * n + y] == self.one),
        };
        let neg = match self.neg {
            Some(values) => {
                if values.len() != n {
                    return Err(StructureError::RowLength {
                        table: Table::Neg,
                        row: 0,
                        expected: n,
                        found: values.len(),
                    });
                }
                if let Some((col, &value)) = values.iter().enumerate().find(|(_, &v)| v >= n) {
                    return Err(StructureError::CellOutOfRange {
                        table: Table::Neg,
                        row: 0,
                        col,
                        value,
                        n,
                    });
                }
                Some(values)
            }
            None => order
                .unique_least()
                .map(|z| (0..n).map(|x| imp[x * n + z]).collect()),
        };
        Ok(FiniteStructure {
            n,
            one: self.one,
            imp,
            mul,
            neg,
            order,
            names: self.names,
        })
    }
}

fn flatten_table(
    table: Table,
    n: usize,
    rows: Vec<Vec<Element>>,
) -> Result<Vec<Element>, StructureError> {
    if rows.len() != n {
        return Err(StructureError::RowCount {
            table,
            expected: n,
            found: rows.len(),
        });
    }
    let mut flat = Vec::with_capacity(n * n);
    for (row, cells) in rows.into_iter().enumerate() {
        if cells.len() != n {
            return Err(StructureError::RowLength {
                table,
                row,
                expected: n,
                found: cells.len(),
            });
        }
        for (col, value) in cells.into_iter().enumerate() {
            if value >= n {
                return Err(StructureError::CellOutOfRange {
                    table,
                    row,
                    col,
                    value,
                    n,
                });
            }
            flat.push(value);
        }
    }
    Ok(flat)
}

impl FiniteStructure {
    /// Starts a structure from its implication table; the carrier size is
    /// the number of rows.
    pub fn builder(imp: Vec<Vec<Element>>, one: Element) -> StructureBuilder {
        StructureBuilder {
            one,
            imp,
            ..StructureBuilder::default()
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn one(&self) -> Element {
        self.one
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.n
    }

    #[inline]
    pub fn imp(&self, x: Element, y: Element) -> Element {
        self.imp[x * self.n + y]
    }

    /// `x ⊙ y`, or `None` when the structure carries no product table.
    #[inline]
    pub fn mul(&self, x: Element, y: Element) -> Option<Element> {
        self.mul.as_ref().map(|m| m[x * self.n + y])
    }

    #[inline]
    pub fn neg(&self, x: Element) -> Option<Element> {
        self.neg.as_ref().map(|t| t[x])
    }

    #[inline]
    pub fn le(&self, x: Element, y: Element) -> bool {
        self.order.le(x, y)
    }

    pub fn has_mul(&self) -> bool {
        self.mul.is_some()
    }

    pub fn order(&self) -> &QuasiOrder {
        &self.order
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display label of `x`: its name when names are present, else its index.
    pub fn label(&self, x: Element) -> String {
        match &self.names {
            Some(names) => names[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn imp_rows(&self) -> impl Iterator<Item = &[Element]> {
        self.imp.chunks(self.n)
    }

    pub fn mul_rows(&self) -> Option<impl Iterator<Item = &[Element]>> {
        self.mul.as_ref().map(|m| m.chunks(self.n))
    }

    pub fn neg_table(&self) -> Option<&[Element]> {
        self.neg.as_deref()
    }

    /// The negation this structure would derive on its own, `x ↦ x → z`
    /// for the unique least element `z`.
    pub fn derived_neg(&self) -> Option<Vec<Element>> {
        self.order
            .unique_least()
            .map(|z| self.elements().map(|x| self.imp(x, z)).collect())
    }

    /// The implication order: `x ≼ y` iff `x → y = 1`.
    pub fn derived_order(&self) -> QuasiOrder {
        QuasiOrder::from_fn(self.n, |x, y| self.imp(x, y) == self.one)
    }

    /// Wajsberg join `(x → y) → y`.
    pub fn join(&self, x: Element, y: Element) -> Element {
        self.imp(self.imp(x, y), y)
    }

    /// Copy of this structure with its order replaced.
    pub fn with_order(&self, order: QuasiOrder) -> Result<FiniteStructure, StructureError> {
        let neg = if self.neg == self.derived_neg() {
            None
        } else {
            self.neg.clone()
        };
        self.rebuild(Some(order), neg)
    }

    /// Copy with the product table replaced (or removed).
    pub fn with_mul(
        &self,
        mul: Option<Vec<Vec<Element>>>,
    ) -> Result<FiniteStructure, StructureError> {
        let rows = self.imp_rows().map(<[Element]>::to_vec).collect();
        FiniteStructure::builder(rows, self.one)
            .maybe_mul(mul)
            .maybe_neg(self.neg.clone())
            .order(self.order.clone())
            .maybe_names(self.names.clone())
            .build()
    }

    /// Copy with a single implication cell overwritten.
    pub fn with_imp_cell(
        &self,
        x: Element,
        y: Element,
        value: Element,
    ) -> Result<FiniteStructure, StructureError> {
        let mut rows: Vec<Vec<Element>> = self.imp_rows().map(<[Element]>::to_vec).collect();
        rows[x][y] = value;
        FiniteStructure::builder(rows, self.one)
            .maybe_mul(self.mul_rows().map(|r| r.map(<[Element]>::to_vec).collect()))
            .maybe_neg(self.neg.clone())
            .order(self.order.clone())
            .maybe_names(self.names.clone())
            .build()
    }

    fn rebuild(
        &self,
        order: Option<QuasiOrder>,
        neg: Option<Vec<Element>>,
    ) -> Result<FiniteStructure, StructureError> {
        let rows = self.imp_rows().map(<[Element]>::to_vec).collect();
        FiniteStructure::builder(rows, self.one)
            .maybe_mul(self.mul_rows().map(|r| r.map(<[Element]>::to_vec).collect()))
            .maybe_neg(neg)
            .maybe_order(order)
            .maybe_names(self.names.clone())
            .build()
    }

    /// Relabels the carrier: element `x` becomes `perm[x]`.
    ///
    /// `perm` must be a permutation of `0..n`.
    pub fn permute(&self, perm: &[Element]) -> FiniteStructure {
        assert_eq!(perm.len(), self.n, "permutation length");
        let n = self.n;
        let mut inv = vec![0; n];
        for (x, &px) in perm.iter().enumerate() {
            inv[px] = x;
        }
        let table = |t: &[Element]| -> Vec<Element> {
            let mut out = vec![0; n * n];
            for a in 0..n {
                for b in 0..n {
                    out[a * n + b] = perm[t[inv[a] * n + inv[b]]];
                }
            }
            out
        };
        FiniteStructure {
            n,
            one: perm[self.one],
            imp: table(&self.imp),
            mul: self.mul.as_deref().map(table),
            neg: self
                .neg
                .as_ref()
                .map(|t| (0..n).map(|a| perm[t[inv[a]]]).collect()),
            order: QuasiOrder::from_fn(n, |a, b| self.order.le(inv[a], inv[b])),
            names: self
                .names
                .as_ref()
                .map(|names| (0..n).map(|a| names[inv[a]].clone()).collect()),
        }
    }

    /// Builds from flat row-major tables already known to be in range.
    pub(crate) fn from_flat_unchecked(
        n: usize,
        one: Element,
        imp: Vec<Element>,
        mul: Option<Vec<Element>>,
        order: QuasiOrder,
    ) -> FiniteStructure {
        debug_assert_eq!(imp.len(), n * n);
        let neg = order
            .unique_least()
            .map(|z| (0..n).map(|x| imp[x * n + z]).collect());
        FiniteStructure {
            n,
            one,
            imp,
            mul,
            neg,
            order,
            names: None,
        }
    }
}
