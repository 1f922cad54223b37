use std::fmt;

use crate::model::{Element, FiniteStructure};

/// Orbit-minimal serialization of a structure under relabelings that send
/// the unit to the last index.
///
/// Two structures share a canonical form exactly when one is obtained from
/// the other by a permutation of the carrier mapping unit to unit. The
/// serialization covers `imp`, `mul` (when present) and the order; names
/// and negation are not part of it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u32>);

impl CanonicalForm {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Lowercase hex rendering, stable across runs.
    pub fn to_hex(&self) -> String {
        self.0.iter().map(|v| format!("{v:x}")).collect::<Vec<_>>().join(".")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

/// Writes the key of `s` relabeled by `perm` (old element `x` becomes
/// `perm[x]`) into `out`, given `inv = perm⁻¹`.
fn write_key(s: &FiniteStructure, perm: &[Element], inv: &[Element], out: &mut Vec<u32>) {
    let n = s.size();
    out.clear();
    out.push(n as u32);
    out.push(s.has_mul() as u32);
    for a in 0..n {
        for b in 0..n {
            out.push(perm[s.imp(inv[a], inv[b])] as u32);
        }
    }
    if s.has_mul() {
        for a in 0..n {
            for b in 0..n {
                out.push(perm[s.mul(inv[a], inv[b]).expect("product table")] as u32);
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            out.push(s.le(inv[a], inv[b]) as u32);
        }
    }
}

/// Visits every bijection `0..n → 0..n` sending `one` to `n - 1`, given as
/// the inverse map (new label → old element). Stops when `f` returns `false`.
fn for_each_relabeling(n: usize, one: Element, mut f: impl FnMut(&[Element]) -> bool) {
    let mut others: Vec<Element> = (0..n).filter(|&x| x != one).collect();
    let mut inv = vec![0; n];
    loop {
        inv[..n - 1].copy_from_slice(&others);
        inv[n - 1] = one;
        if !f(&inv) || !next_permutation(&mut others) {
            return;
        }
    }
}

fn next_permutation(v: &mut [Element]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn invert(inv: &[Element], perm: &mut [Element]) {
    for (a, &x) in inv.iter().enumerate() {
        perm[x] = a;
    }
}

pub fn canonical_form(s: &FiniteStructure) -> CanonicalForm {
    let n = s.size();
    let mut perm = vec![0; n];
    let mut key = Vec::new();
    let mut best: Option<Vec<u32>> = None;
    for_each_relabeling(n, s.one(), |inv| {
        invert(inv, &mut perm);
        write_key(s, &perm, inv, &mut key);
        if best.as_ref().map_or(true, |b| key < *b) {
            best = Some(key.clone());
        }
        true
    });
    CanonicalForm(best.expect("at least one relabeling"))
}

/// The relabeling realizing the canonical form: returns `perm` with
/// `canonical_form(s) == key(s.permute(perm))`.
pub fn canonical_labeling(s: &FiniteStructure) -> Vec<Element> {
    let n = s.size();
    let mut perm = vec![0; n];
    let mut key = Vec::new();
    let mut best: Option<(Vec<u32>, Vec<Element>)> = None;
    for_each_relabeling(n, s.one(), |inv| {
        invert(inv, &mut perm);
        write_key(s, &perm, inv, &mut key);
        if best.as_ref().map_or(true, |(b, _)| key < *b) {
            best = Some((key.clone(), perm.clone()));
        }
        true
    });
    best.expect("at least one relabeling").1
}

/// True when `s` has its unit last and no relabeling yields a smaller key.
pub(crate) fn is_canonical(s: &FiniteStructure) -> bool {
    let n = s.size();
    if s.one() != n - 1 {
        return false;
    }
    let identity: Vec<Element> = (0..n).collect();
    let mut own = Vec::new();
    write_key(s, &identity, &identity, &mut own);
    let mut perm = vec![0; n];
    let mut key = Vec::new();
    let mut minimal = true;
    for_each_relabeling(n, s.one(), |inv| {
        invert(inv, &mut perm);
        write_key(s, &perm, inv, &mut key);
        if key < own {
            minimal = false;
        }
        minimal
    });
    minimal
}

/// Key of `s` under its current labeling.
pub(crate) fn identity_key(s: &FiniteStructure) -> CanonicalForm {
    let identity: Vec<Element> = (0..s.size()).collect();
    let mut key = Vec::new();
    write_key(s, &identity, &identity, &mut key);
    CanonicalForm(key)
}
