use crate::model::FiniteStructure;

use super::SearchError;

/// The Łukasiewicz chain with `n` elements.
///
/// Element `i` stands for `i/(n-1)`; `x → y = min(1, 1 - x + y)`,
/// `x ⊙ y = max(0, x + y - 1)`, the natural order and `¬x = 1 - x`. All
/// arithmetic is done on numerators over `n - 1`, so it is exact.
pub fn gen_lukasiewicz(n: usize) -> Result<FiniteStructure, SearchError> {
    if n < 2 {
        return Err(SearchError::ChainTooShort(n));
    }
    let top = n - 1;
    let imp = (0..n)
        .map(|x| (0..n).map(|y| top.min(top - x + y)).collect())
        .collect();
    let mul = (0..n)
        .map(|x| (0..n).map(|y| (x + y).saturating_sub(top)).collect())
        .collect();
    let neg = (0..n).map(|x| top - x).collect();
    let s = FiniteStructure::builder(imp, top)
        .mul(mul)
        .neg(neg)
        .build()
        .expect("chain tables are in range");
    Ok(s)
}
