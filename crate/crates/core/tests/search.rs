use std::collections::BTreeSet;

use qrw::model::{validate_axioms, AxiomSet};
use qrw::search::{
    canonical_form, enumerate_models, gen_lukasiewicz, hunt, HuntPredicate, HuntWitness,
    SearchConfig, SearchMode,
};
use qrw::filters::{is_filter, is_implicative_filter};

fn audit(cfg: &SearchConfig) -> usize {
    let stream = enumerate_models(cfg).unwrap();
    let mut keys = BTreeSet::new();
    for m in &stream.models {
        assert!(validate_axioms(&m.structure, cfg.axioms, cfg.strict_link).all_hold());
        assert_eq!(canonical_form(&m.structure), m.canonical);
        assert!(keys.insert(m.canonical.clone()), "duplicate class");
    }
    let order: Vec<_> = stream.models.iter().map(|m| m.canonical.clone()).collect();
    assert_eq!(order, keys.into_iter().collect::<Vec<_>>(), "ascending canonical order");
    stream.len()
}

#[test]
fn exhaustive_streams_pass_audit() {
    for order in 1..=4 {
        for strict in [false, true] {
            audit(&SearchConfig::exhaustive(order).strict(strict));
        }
    }
}

#[test]
fn known_strict_counts() {
    // Finite MV-algebras are products of chains: one of each prime size,
    // Ł4 and Ł2×Ł2 at size four.
    let counts: Vec<usize> = (2..=5)
        .map(|n| enumerate_models(&SearchConfig::exhaustive(n).strict(true)).unwrap().len())
        .collect();
    assert_eq!(counts, vec![1, 1, 2, 1]);
}

#[test]
fn chains_appear_in_their_own_stream() {
    for n in 2..=4 {
        let key = canonical_form(&gen_lukasiewicz(n).unwrap());
        for strict in [false, true] {
            let stream = enumerate_models(&SearchConfig::exhaustive(n).strict(strict)).unwrap();
            assert!(stream.models.iter().any(|m| m.canonical == key), "Ł{n} strict={strict}");
        }
    }
}

#[test]
fn partial_catalogs_are_audited() {
    let sets = ["QO-REFL,QO-TRANS,TOP,W1", "W1,W2,W3", "QO-REFL,QO-TRANS,MON-COMM,MON-UNIT,RES"];
    for text in sets {
        let axioms: AxiomSet = text.parse().unwrap();
        audit(&SearchConfig::exhaustive(3).with_axioms(axioms));
    }
}

#[test]
fn emission_count_is_independent_of_workers() {
    let base = SearchConfig::exhaustive(4);
    let one = enumerate_models(&base.clone().with_workers(1)).unwrap();
    let three = enumerate_models(&base.with_workers(3)).unwrap();
    assert_eq!(one, three);
}

#[test]
fn repeated_runs_are_identical() {
    let cfg = SearchConfig::exhaustive(3);
    assert_eq!(enumerate_models(&cfg).unwrap(), enumerate_models(&cfg).unwrap());
    let rnd = SearchConfig::random(5, 42, 200);
    assert_eq!(rnd.mode, SearchMode::Random);
    assert_eq!(enumerate_models(&rnd).unwrap(), enumerate_models(&rnd).unwrap());
}

#[test]
fn random_mode_finds_only_exhaustive_classes() {
    let all: BTreeSet<_> = enumerate_models(&SearchConfig::exhaustive(3))
        .unwrap()
        .models
        .into_iter()
        .map(|m| m.canonical)
        .collect();
    let rnd = enumerate_models(&SearchConfig::random(3, 9, 2000)).unwrap();
    assert!(!rnd.is_empty());
    for m in rnd.models {
        assert!(all.contains(&m.canonical));
    }
}

#[test]
fn filter_hunt_replays() {
    let out = hunt(&SearchConfig::exhaustive(4).with_hunt(HuntPredicate::FilterNotImplicative)).unwrap();
    assert!(!out.hits.is_empty());
    for h in &out.hits {
        let HuntWitness::Subset(m) = &h.witness else { panic!("subset witness expected") };
        assert!(is_filter(&h.model.structure, m).unwrap().holds);
        assert!(!is_implicative_filter(&h.model.structure, m).unwrap().holds);
    }
}

#[test]
fn antisymmetry_hunt_reports_pairs() {
    let out = hunt(&SearchConfig::exhaustive(3).with_hunt(HuntPredicate::NonAntisymmetricModel)).unwrap();
    for h in &out.hits {
        let HuntWitness::Pair(x, y) = h.witness else { panic!("pair witness expected") };
        let s = &h.model.structure;
        assert!(x != y && s.le(x, y) && s.le(y, x));
    }
    let strict = hunt(
        &SearchConfig::exhaustive(4)
            .strict(true)
            .with_hunt(HuntPredicate::NonAntisymmetricModel),
    )
    .unwrap();
    assert!(strict.hits.is_empty());
}
