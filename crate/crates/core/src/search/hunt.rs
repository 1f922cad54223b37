use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::filters::{EnumLimit, FilterError, MaskView, Subset};
use crate::model::{Element, FiniteStructure};
use crate::propositions::equivalent_conditions;

use super::{enumerate_models, FoundModel, SearchConfig, SearchError, SearchStats};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HuntPredicate {
    /// A filter that is not an implicative filter.
    FilterNotImplicative,
    /// A subset on which the four implicative-filter characterisations
    /// disagree.
    EquivalenceDisagreement,
    /// A model whose order is not antisymmetric.
    NonAntisymmetricModel,
}

impl HuntPredicate {
    pub const ALL: [HuntPredicate; 3] = [
        HuntPredicate::FilterNotImplicative,
        HuntPredicate::EquivalenceDisagreement,
        HuntPredicate::NonAntisymmetricModel,
    ];

    pub fn id(self) -> &'static str {
        match self {
            HuntPredicate::FilterNotImplicative => "filter-not-implicative",
            HuntPredicate::EquivalenceDisagreement => "prop-2.1.9-disagreement",
            HuntPredicate::NonAntisymmetricModel => "non-antisymmetric-valid-model",
        }
    }
}

impl fmt::Display for HuntPredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for HuntPredicate {
    type Err = SearchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        HuntPredicate::ALL
            .into_iter()
            .find(|p| p.id() == s)
            .ok_or_else(|| SearchError::UnknownPredicate(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HuntWitness {
    Subset(Subset),
    /// The subset and the values of the four conditions on it.
    Disagreement { subset: Subset, conditions: [bool; 4] },
    /// `x ≼ y` and `y ≼ x` with `x ≠ y`.
    Pair(Element, Element),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HuntHit {
    pub model: FoundModel,
    pub witness: HuntWitness,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HuntOutcome {
    /// Counters of the underlying search.
    pub stats: SearchStats,
    pub hits: Vec<HuntHit>,
}

/// Every witness of `pred` on `s`, subsets in ascending bitmask order.
///
/// The antisymmetry predicate reports at most the first offending pair and
/// takes membership in the searched class for granted.
pub fn hunt_structure(
    s: &FiniteStructure,
    pred: HuntPredicate,
    limit: EnumLimit,
) -> Result<Vec<HuntWitness>, FilterError> {
    let n = s.size();
    match pred {
        HuntPredicate::FilterNotImplicative => {
            limit.check(n)?;
            let view = MaskView::new(s);
            Ok((0..1u64 << n)
                .map(|m| m as u32)
                .filter(|&m| view.is_filter(m) && !view.is_implicative(m))
                .map(|m| HuntWitness::Subset(Subset::from_mask(n, m)))
                .collect())
        }
        HuntPredicate::EquivalenceDisagreement => {
            limit.check(n)?;
            let mut out = Vec::new();
            for m in 0..1u64 << n {
                let subset = Subset::from_mask(n, m as u32);
                let conds = equivalent_conditions(s, &subset)?;
                let values = conds.map(|c| c.holds());
                if values.iter().any(|&v| v != values[0]) {
                    out.push(HuntWitness::Disagreement {
                        subset,
                        conditions: values,
                    });
                }
            }
            Ok(out)
        }
        HuntPredicate::NonAntisymmetricModel => Ok(s
            .order()
            .antisymmetry_failure()
            .map(|(x, y)| HuntWitness::Pair(x, y))
            .into_iter()
            .collect()),
    }
}

/// Runs `pred` over `models`; hits follow model order, then witness order.
pub fn hunt_models(
    models: &[FoundModel],
    pred: HuntPredicate,
    limit: EnumLimit,
    workers: usize,
) -> Result<Vec<HuntHit>, FilterError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    let per_model: Result<Vec<Vec<HuntHit>>, FilterError> = pool.install(|| {
        models
            .par_iter()
            .map(|model| {
                Ok(hunt_structure(&model.structure, pred, limit)?
                    .into_iter()
                    .map(|witness| HuntHit {
                        model: model.clone(),
                        witness,
                    })
                    .collect())
            })
            .collect()
    });
    Ok(per_model?.into_iter().flatten().collect())
}

/// Searches per `cfg` and keeps the hits of `cfg.hunt`.
pub fn hunt(cfg: &SearchConfig) -> Result<HuntOutcome, SearchError> {
    let pred = cfg.hunt.ok_or(SearchError::MissingPredicate)?;
    let stream = enumerate_models(cfg)?;
    let hits = hunt_models(&stream.models, pred, EnumLimit::from_env(), cfg.workers)?;
    Ok(HuntOutcome {
        stats: stream.stats,
        hits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filters::{is_filter, is_implicative_filter};
    use crate::search::gen_lukasiewicz;

    #[test]
    fn predicate_ids_round_trip() {
        for p in HuntPredicate::ALL {
            assert_eq!(p.id().parse::<HuntPredicate>().unwrap(), p);
        }
        assert_eq!(
            "nope".parse::<HuntPredicate>(),
            Err(SearchError::UnknownPredicate("nope".into()))
        );
    }

    #[test]
    fn l3_filter_gap_is_the_unit() {
        let l3 = gen_lukasiewicz(3).unwrap();
        let hits = hunt_structure(&l3, HuntPredicate::FilterNotImplicative, EnumLimit::default()).unwrap();
        assert_eq!(hits, vec![HuntWitness::Subset(Subset::from_indices(3, &[2]).unwrap())]);
        for h in hits {
            let HuntWitness::Subset(m) = h else { unreachable!() };
            assert!(is_filter(&l3, &m).unwrap().holds);
            assert!(!is_implicative_filter(&l3, &m).unwrap().holds);
        }
        let l2 = gen_lukasiewicz(2).unwrap();
        assert!(hunt_structure(&l2, HuntPredicate::FilterNotImplicative, EnumLimit::default())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn order_two_has_no_disagreement() {
        let cfg = SearchConfig::exhaustive(2)
            .strict(true)
            .with_hunt(HuntPredicate::EquivalenceDisagreement);
        let out = hunt(&cfg).unwrap();
        assert_eq!(out.stats.emitted, 1);
        assert!(out.hits.is_empty());
    }

    #[test]
    fn hunt_needs_predicate() {
        assert_eq!(hunt(&SearchConfig::exhaustive(2)), Err(SearchError::MissingPredicate));
    }

    #[test]
    fn worker_count_does_not_change_hits() {
        let base = SearchConfig::exhaustive(3).with_hunt(HuntPredicate::FilterNotImplicative);
        let one = hunt(&base.clone().with_workers(1)).unwrap();
        let four = hunt(&base.with_workers(4)).unwrap();
        assert_eq!(one, four);
    }
}
