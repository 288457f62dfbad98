mod common;

use common::{dense_ideal_dims, right_normed};
use holokit::holonomy::{graph_arrangement, holonomy_presentation};
use holokit::lie::{
    enveloping_series, graded_dims, ideal_dims, ideal_dims_with, series_product, witt, Coordinates,
    EngineConfig, GradedDims, LiePresentation, Relation,
};
use holokit::matroid::{Graph, GroundSet, SetArrangement};
use proptest::prelude::*;

fn presentation(n: usize, rels: Vec<Vec<(usize, usize, i64)>>) -> LiePresentation {
    let labels = (0..n).map(|i| format!("x{i}")).collect();
    let rels = rels.into_iter().filter_map(Relation::normalized).collect();
    LiePresentation::new(labels, rels).unwrap()
}

fn small_presentations() -> Vec<(String, LiePresentation)> {
    let mut out = vec![
        ("free3".to_string(), LiePresentation::free(3)),
        (
            "abelian2".to_string(),
            presentation(2, vec![vec![(0, 1, 1)]]),
        ),
        (
            "one relation on 3".to_string(),
            presentation(3, vec![vec![(0, 1, 1), (1, 2, 1)]]),
        ),
        (
            "two relations on 4".to_string(),
            presentation(
                4,
                vec![vec![(0, 1, 2), (2, 3, -1)], vec![(0, 2, 1), (1, 3, 3)]],
            ),
        ),
    ];
    for n in 3..=4 {
        let g = GroundSet::numbered(n).unwrap();
        let all = g.all();
        let a = SetArrangement::new(g, vec![all]).unwrap();
        out.push((
            format!("block{n}"),
            holonomy_presentation(&a).presentation().clone(),
        ));
    }
    let path = Graph::from_edges(&[("a", "b"), ("b", "c"), ("c", "d")]).unwrap();
    out.push((
        "path".into(),
        holonomy_presentation(&graph_arrangement(&path).unwrap())
            .presentation()
            .clone(),
    ));
    let paw = Graph::from_edges(&[("1", "2"), ("2", "3"), ("1", "3"), ("3", "4")]).unwrap();
    out.push((
        "paw".into(),
        holonomy_presentation(&graph_arrangement(&paw).unwrap())
            .presentation()
            .clone(),
    ));
    out
}

#[test]
fn right_normed_brackets_span_free_lie() {
    for n in 2..=3 {
        for k in 1..=4 {
            let mut ech = common::DenseEchelon::default();
            for m in right_normed(n, k) {
                ech.insert(&m.v);
            }
            assert_eq!(ech.rank() as u64, witt(n as u64, k));
        }
    }
}

#[test]
fn sparse_engine_matches_dense_oracle() {
    for (name, p) in small_presentations() {
        let engine = ideal_dims(&p, 5).unwrap();
        let dense = dense_ideal_dims(&p, 5, false);
        assert_eq!(engine.dims, dense, "{name}");
    }
}

#[test]
fn left_bracketing_generates_the_two_sided_ideal() {
    for (name, p) in small_presentations() {
        let left = dense_ideal_dims(&p, 5, false);
        let two_sided = dense_ideal_dims(&p, 5, true);
        assert_eq!(left, two_sided, "{name}");
    }
}

#[test]
fn coordinates_do_not_change_ranks() {
    let all_words = EngineConfig {
        coordinates: Coordinates::AllWords,
        ..EngineConfig::default()
    };
    for (name, p) in small_presentations() {
        assert_eq!(
            ideal_dims(&p, 5).unwrap(),
            ideal_dims_with(&p, 5, &all_words).unwrap(),
            "{name}"
        );
    }
}

#[test]
fn free_presentations_have_witt_dims() {
    for n in 1..=4 {
        let dims = graded_dims(&LiePresentation::free(n), 5).unwrap();
        let expected: Vec<u64> = (1..=5).map(|d| witt(n as u64, d)).collect();
        assert_eq!(dims.dims, expected);
        let series = enveloping_series(&dims, 5);
        assert_eq!(series, series_product(&[(n as i128, 1)], 5));
    }
}

#[test]
fn word_space_guard() {
    let tight = EngineConfig {
        max_words: 100,
        ..EngineConfig::default()
    };
    assert!(ideal_dims_with(&LiePresentation::free(4), 4, &tight).is_err());
    assert!(ideal_dims_with(&LiePresentation::free(4), 3, &tight).is_ok());
}

#[test]
fn enveloping_series_examples() {
    let one = GradedDims::new(vec![1, 0, 0, 0]);
    assert_eq!(enveloping_series(&one, 4).coeffs, vec![1, 1, 1, 1, 1]);
    let k4 = GradedDims::new(vec![6, 4, 10]);
    assert_eq!(enveloping_series(&k4, 3).coeffs, vec![1, 6, 25, 90]);
    assert_eq!(
        series_product(&[(1, 1), (2, 1), (3, 1)], 3).coeffs,
        vec![1, 6, 25, 90]
    );
    assert_eq!(series_product(&[(2, 1)], 3).coeffs, vec![1, 2, 4, 8]);
    assert_eq!(series_product(&[(1, -1)], 3).coeffs, vec![1, -1, 0, 0]);
}

fn relation_strategy(n: usize) -> impl Strategy<Value = Vec<(usize, usize, i64)>> {
    prop::collection::vec((0..n, 0..n, -3i64..=3), 1..=3)
}

fn presentation_strategy() -> impl Strategy<Value = LiePresentation> {
    (2usize..=4).prop_flat_map(|n| {
        prop::collection::vec(relation_strategy(n), 0..=3)
            .prop_map(move |rels| presentation(n, rels))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_presentations_match_dense_oracle(p in presentation_strategy()) {
        let d = if p.generator_count() == 4 { 4 } else { 5 };
        let engine = ideal_dims(&p, d).unwrap();
        prop_assert_eq!(&engine.dims, &dense_ideal_dims(&p, d, false));
        prop_assert_eq!(&engine.dims, &dense_ideal_dims(&p, d, true));
    }

    #[test]
    fn relation_order_does_not_matter(p in presentation_strategy()) {
        let mut rels = p.relations().to_vec();
        rels.reverse();
        let q = LiePresentation::new(p.generator_labels().to_vec(), rels).unwrap();
        prop_assert_eq!(ideal_dims(&p, 4).unwrap(), ideal_dims(&q, 4).unwrap());
    }
}
