//! Small-model generation: Łukasiewicz chains, exhaustive and randomized
//! search up to isomorphism, and counterexample hunting.
//!
//! Isomorphism is taken over relabelings that map the unit to the unit.
//! Exhaustive search fixes the unit at index `n - 1` and emits one
//! representative per class, the one whose labeling is its own canonical
//! form, in ascending canonical-form order.

mod canonical;
mod engine;
mod hunt;
mod lukasiewicz;
mod random;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::filters::FilterError;
use crate::model::{AxiomSet, FiniteStructure};

pub use canonical::{canonical_form, canonical_labeling, CanonicalForm};
pub use hunt::{hunt, hunt_models, hunt_structure, HuntHit, HuntOutcome, HuntPredicate, HuntWitness};
pub use lukasiewicz::gen_lukasiewicz;

use engine::{Engine, Flow, Plan};

/// Largest order searched exhaustively.
pub const MAX_EXHAUSTIVE_ORDER: usize = 6;
/// Largest order accepted by randomized search.
pub const MAX_RANDOM_ORDER: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("order {order} is out of range for {mode} search (1..={max})")]
    OrderOutOfRange {
        order: usize,
        mode: SearchMode,
        max: usize,
    },
    #[error("Łukasiewicz chains need at least 2 elements, got {0}")]
    ChainTooShort(usize),
    #[error("unknown hunt predicate `{0}`")]
    UnknownPredicate(String),
    #[error("no hunt predicate configured")]
    MissingPredicate,
    #[error(transparent)]
    Filter(#[from] FilterError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SearchMode {
    Exhaustive,
    Random,
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchMode::Exhaustive => "exhaustive",
            SearchMode::Random => "random",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub order: usize,
    pub axioms: AxiomSet,
    pub strict_link: bool,
    pub mode: SearchMode,
    /// Random mode only.
    pub seed: u64,
    /// Exhaustive: complete candidate structures examined. Random: structures
    /// generated. `None` is unbounded in exhaustive mode.
    pub budget: Option<u64>,
    pub hunt: Option<HuntPredicate>,
    /// Worker threads; results never depend on this.
    pub workers: usize,
}

impl SearchConfig {
    /// Exhaustive search over the full axiom catalog.
    pub fn exhaustive(order: usize) -> Self {
        SearchConfig {
            order,
            axioms: AxiomSet::full(),
            strict_link: false,
            mode: SearchMode::Exhaustive,
            seed: 0,
            budget: None,
            hunt: None,
            workers: 1,
        }
    }

    pub fn random(order: usize, seed: u64, count: u64) -> Self {
        SearchConfig {
            mode: SearchMode::Random,
            seed,
            budget: Some(count),
            ..SearchConfig::exhaustive(order)
        }
    }

    pub fn strict(mut self, strict_link: bool) -> Self {
        self.strict_link = strict_link;
        self
    }

    pub fn with_axioms(mut self, axioms: AxiomSet) -> Self {
        self.axioms = axioms;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn with_budget(mut self, budget: Option<u64>) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_hunt(mut self, hunt: HuntPredicate) -> Self {
        self.hunt = Some(hunt);
        self
    }

    pub fn check(&self) -> Result<(), SearchError> {
        let max = match self.mode {
            SearchMode::Exhaustive => MAX_EXHAUSTIVE_ORDER,
            SearchMode::Random => MAX_RANDOM_ORDER,
        };
        if self.order == 0 || self.order > max {
            return Err(SearchError::OrderOutOfRange {
                order: self.order,
                mode: self.mode,
                max,
            });
        }
        Ok(())
    }

    pub(crate) fn pool(&self) -> rayon::ThreadPool {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers.max(1))
            .build()
            .expect("thread pool")
    }
}

impl FromStr for SearchMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exhaustive" => Ok(SearchMode::Exhaustive),
            "random" => Ok(SearchMode::Random),
            other => Err(format!("unknown search mode `{other}`")),
        }
    }
}

/// One emitted model with its canonical key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoundModel {
    pub structure: FiniteStructure,
    pub canonical: CanonicalForm,
}

/// Counters that depend only on the configuration.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Complete candidates examined (exhaustive) or generated (random).
    pub candidates: u64,
    /// Candidates satisfying the requested axioms, before isomorph removal.
    pub accepted: u64,
    pub emitted: u64,
    /// False when the budget cut the search short.
    pub complete: bool,
}

/// Models in ascending canonical-form order, pairwise non-isomorphic.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModelStream {
    pub models: Vec<FoundModel>,
    pub stats: SearchStats,
}

impl ModelStream {
    pub fn structures(&self) -> impl Iterator<Item = &FiniteStructure> {
        self.models.iter().map(|m| &m.structure)
    }

    pub fn len(&self) -> usize {
        self.models.len()
    }

    pub fn is_empty(&self) -> bool {
        self.models.is_empty()
    }
}

impl IntoIterator for ModelStream {
    type Item = FoundModel;
    type IntoIter = std::vec::IntoIter<FoundModel>;

    fn into_iter(self) -> Self::IntoIter {
        self.models.into_iter()
    }
}

pub fn enumerate_models(cfg: &SearchConfig) -> Result<ModelStream, SearchError> {
    cfg.check()?;
    Ok(match cfg.mode {
        SearchMode::Exhaustive => exhaustive(cfg),
        SearchMode::Random => random::random_models(cfg),
    })
}

/// Free variables fixed before the tree is split across workers.
const SPLIT_VARS: usize = 4;

struct Subtree {
    leaves: u64,
    truncated: bool,
    /// `(local leaf index, model)` for canonical leaves.
    found: Vec<(u64, FiniteStructure)>,
}

fn explore_subtree(plan: &Plan, split: usize, prefix: &[u8], cap: u64) -> Subtree {
    let mut worker = Engine::new(plan).expect("consistent plan");
    let replayed = worker.replay(prefix);
    debug_assert!(replayed);
    let mut sub = Subtree {
        leaves: 0,
        truncated: false,
        found: Vec::new(),
    };
    worker.explore(split, plan.var_count(), &mut |_, plan, assign| {
        if sub.leaves == cap {
            sub.truncated = true;
            return Flow::Stop;
        }
        let index = sub.leaves;
        sub.leaves += 1;
        let s = engine::leaf_structure(plan, assign);
        if canonical::is_canonical(&s) {
            sub.found.push((index, s));
        }
        Flow::Continue
    });
    sub
}

fn exhaustive(cfg: &SearchConfig) -> ModelStream {
    let plan = Plan::new(cfg.order, cfg.axioms, cfg.strict_link);
    let budget = cfg.budget.unwrap_or(u64::MAX);
    let Some(mut root) = Engine::new(&plan) else {
        return ModelStream {
            models: Vec::new(),
            stats: SearchStats {
                complete: true,
                ..SearchStats::default()
            },
        };
    };
    let split = (plan.forced_count() + SPLIT_VARS).min(plan.var_count());
    let mut prefixes = Vec::new();
    root.explore(0, split, &mut |prefix, _, _| {
        prefixes.push(prefix.to_vec());
        Flow::Continue
    });

    let pool = cfg.pool();
    let mut offset = 0u64;
    let mut truncated = false;
    let mut models = Vec::new();
    for group in prefixes.chunks(4 * cfg.workers.max(1)) {
        // Once the budget is spent a group only has to show whether any
        // leaf remains.
        let cap = budget.saturating_sub(offset);
        let subtrees: Vec<Subtree> = pool.install(|| {
            group
                .par_iter()
                .map(|prefix| explore_subtree(&plan, split, prefix, cap))
                .collect()
        });
        for sub in subtrees {
            for (index, s) in sub.found {
                if offset.saturating_add(index) < budget {
                    let canonical = canonical::identity_key(&s);
                    models.push(FoundModel {
                        structure: s,
                        canonical,
                    });
                }
            }
            truncated |= sub.truncated;
            offset = offset.saturating_add(sub.leaves);
        }
        if truncated {
            break;
        }
    }
    if offset > budget {
        truncated = true;
    }
    models.sort_by(|a, b| a.canonical.cmp(&b.canonical));
    let candidates = offset.min(budget);
    ModelStream {
        stats: SearchStats {
            candidates,
            accepted: candidates,
            emitted: models.len() as u64,
            complete: !truncated,
        },
        models,
    }
}
