//! Seeded random generation. Each candidate draws from its own ChaCha8
//! stream (`seed`, candidate index), so the output is independent of the
//! worker count.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::model::{validate_axioms, Element, FiniteStructure, QuasiOrder};

use super::canonical::{canonical_form, canonical_labeling};
use super::{FoundModel, ModelStream, SearchConfig, SearchStats};

/// Candidates drawn when the configuration carries no budget.
pub const DEFAULT_RANDOM_COUNT: u64 = 1000;

const EDGE_PROBABILITY: f64 = 0.3;

pub(crate) fn random_models(cfg: &SearchConfig) -> ModelStream {
    let count = cfg.budget.unwrap_or(DEFAULT_RANDOM_COUNT);
    let accepted: Vec<Option<FiniteStructure>> = cfg.pool().install(|| {
        (0..count)
            .into_par_iter()
            .map(|index| {
                let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
                rng.set_stream(index);
                let s = candidate(&mut rng, cfg.order, cfg.axioms.needs_mul());
                validate_axioms(&s, cfg.axioms, cfg.strict_link)
                    .all_hold()
                    .then_some(s)
            })
            .collect()
    });
    let accepted_count = accepted.iter().flatten().count() as u64;
    let mut unique = BTreeMap::new();
    for s in accepted.into_iter().flatten() {
        let key = canonical_form(&s);
        unique
            .entry(key)
            .or_insert_with(|| s.permute(&canonical_labeling(&s)));
    }
    let models: Vec<FoundModel> = unique
        .into_iter()
        .map(|(canonical, structure)| FoundModel {
            structure,
            canonical,
        })
        .collect();
    ModelStream {
        stats: SearchStats {
            candidates: count,
            accepted: accepted_count,
            emitted: models.len() as u64,
            complete: true,
        },
        models,
    }
}

/// Random quasi-order with everything below the unit, then a commutative
/// product picked among common lower bounds, then `→` as the residual of the
/// product where one exists.
fn candidate(rng: &mut ChaCha8Rng, n: usize, with_mul: bool) -> FiniteStructure {
    let one = n - 1;
    let order = QuasiOrder::from_fn(n, |i, j| {
        i == j || j == one || rng.gen_bool(EDGE_PROBABILITY)
    })
    .closure();

    let mul = with_mul.then(|| {
        let mut rows = vec![vec![0; n]; n];
        for x in 0..n {
            for y in x..n {
                let v = if x == one {
                    y
                } else if y == one {
                    x
                } else {
                    let lower: Vec<Element> = (0..n)
                        .filter(|&z| order.le(z, x) && order.le(z, y))
                        .collect();
                    if lower.is_empty() {
                        rng.gen_range(0..n)
                    } else {
                        lower[rng.gen_range(0..lower.len())]
                    }
                };
                rows[x][y] = v;
                rows[y][x] = v;
            }
        }
        rows
    });

    let imp = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| match &mul {
                    Some(m) => residual(&order, m, x, y).unwrap_or_else(|| rng.gen_range(0..n)),
                    None if order.le(x, y) => one,
                    None if n > 1 => rng.gen_range(0..n - 1),
                    None => one,
                })
                .collect()
        })
        .collect();

    FiniteStructure::builder(imp, one)
        .maybe_mul(mul)
        .order(order)
        .build()
        .expect("generated tables are in range")
}

/// Least-indexed `z` that is above every `z'` with `x ⊙ z' ≼ y` and itself
/// satisfies `x ⊙ z ≼ y`.
fn residual(order: &QuasiOrder, mul: &[Vec<Element>], x: Element, y: Element) -> Option<Element> {
    let n = order.size();
    let fits: Vec<Element> = (0..n).filter(|&z| order.le(mul[x][z], y)).collect();
    fits.iter()
        .copied()
        .find(|&z| fits.iter().all(|&w| order.le(w, z)))
}
