mod support;

use std::collections::BTreeSet;

use brauer_kit::algebra::*;
use brauer_kit::gentle::check_gentle;
use brauer_kit::graph::*;
use brauer_kit::Error;
use proptest::prelude::*;
use support::*;

/// Arrow names used for the star graph in the worked presentation.
fn greek(name: &str) -> &'static str {
    match name {
        "1-" => "α1",
        "2-" => "α2",
        "3-" => "α3",
        "4-" => "α4",
        "1+" => "β1",
        "2+" => "β2",
        other => panic!("no arrow for {other}"),
    }
}

/// A path in travel order written right to left, as in β2β1.
fn word(g: &BrauerGraph, path: &[usize]) -> String {
    path.iter().rev().map(|&h| greek(g.name(h))).collect()
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

#[test]
fn star_quiver() {
    let g = gamma_star();
    let q = quiver_of(&g);
    assert_eq!(q.vertices(), ["1", "2", "3", "4"]);
    let arrows: BTreeSet<(String, String, String)> = q
        .arrows()
        .iter()
        .map(|a| (greek(&a.id).to_string(), q.vertices()[a.source].clone(), q.vertices()[a.target].clone()))
        .collect();
    let expected: BTreeSet<(String, String, String)> = [
        ("α1", "1", "4"),
        ("α2", "2", "1"),
        ("α3", "3", "2"),
        ("α4", "4", "3"),
        ("β1", "1", "2"),
        ("β2", "2", "1"),
    ]
    .iter()
    .map(|(a, s, t)| (a.to_string(), s.to_string(), t.to_string()))
    .collect();
    assert_eq!(arrows, expected);
}

#[test]
fn star_relations() {
    let g = gamma_star();
    let rels = relations_of(&g);
    let type_i: BTreeSet<String> =
        rels.type_i.iter().map(|(a, b)| format!("{}-{}", word(&g, a), word(&g, b))).collect();
    assert_eq!(type_i, set(&["β2β1-α2α3α4α1", "β1β2-α3α4α1α2"]));
    let type_ii: BTreeSet<String> = rels.type_ii.iter().map(|p| word(&g, p)).collect();
    assert_eq!(
        type_ii,
        set(&["β1β2β1", "β2β1β2", "α1α2α3α4α1", "α2α3α4α1α2", "α3α4α1α2α3", "α4α1α2α3α4"])
    );
    let type_iii: BTreeSet<String> = rels.type_iii.iter().map(|&(a, b)| word(&g, &[a, b])).collect();
    assert_eq!(type_iii, set(&["β2α3", "α1β2", "β1α2", "α2β1"]));
}

#[test]
fn star_dimension() {
    let g = gamma_star();
    assert_eq!(dimension_of(&g), 22);
    assert_eq!(bga_dimension_by_words(&g), 22);
    for cut in enumerate_admissible_cuts(&g) {
        let p = cut_algebra(&g, &cut).unwrap();
        assert_eq!(path_count(&p, 100), Some(11));
    }
}

#[test]
fn isolated_edge_is_dual_numbers() {
    let g = BrauerGraph::from_cycles(&["a", "b"], &[vec!["a", "b"]], &[] as &[Vec<&str>]).unwrap();
    assert_eq!(dimension_of(&g), 2);
    assert_eq!(bga_dimension_by_words(&g) + 1, 2);
}

#[test]
fn cut_algebra_rejects_non_cuts() {
    let g = gamma_star();
    assert!(matches!(cut_algebra(&g, &ones(&g, &["1+"])), Err(Error::NotACut)));
}

#[test]
fn star_cut_algebra() {
    let g = gamma_star();
    let p = cut_algebra(&g, &d_star(&g)).unwrap();
    let ids: Vec<&str> = p.quiver.arrows().iter().map(|a| greek(&a.id)).collect();
    assert_eq!(ids, ["α1", "β2", "α3", "α4"]);
    let rels: BTreeSet<String> = p
        .relations
        .iter()
        .map(|&(a, b)| format!("{}{}", greek(&p.quiver.arrows()[b].id), greek(&p.quiver.arrows()[a].id)))
        .collect();
    assert_eq!(rels, set(&["β2α3", "α1β2"]));
    assert!(check_gentle(&p).is_empty());
}

#[test]
fn trivext_of_a3_with_relation() {
    let (g, cut) = trivial_extension_graph(&a3_relation()).unwrap();
    assert_eq!(g.len(), 6);
    let back = cut_algebra(&g, &cut).unwrap();
    assert!(presentations_isomorphic(&back, &a3_relation()));
    // both A3 algebras have the same trivial extension
    let (h, _) = trivial_extension_graph(&a3_star()).unwrap();
    assert!(is_isomorphic(&GradedBrauerGraph::ungraded(g), &GradedBrauerGraph::ungraded(h), false).is_some());
}

#[test]
fn qa_round_trip() {
    let mut p = three_cycle();
    p.grading = Some(ArrowGrading::new(1, vec![vec![0], vec![1], vec![0]]).unwrap());
    let text = serialize_qa(&p);
    assert_eq!(parse_qa(&text).unwrap(), p);
    let bad = "vertices = [\"1\"]\n[[arrows]]\nid = \"a\"\nsource = \"1\"\ntarget = \"9\"\n";
    assert!(matches!(parse_qa(bad), Err(Error::Semantic { ref token, .. }) if token == "9"));
}

#[test]
fn bigrading_transform_swaps_cuts() {
    let g = gamma_star();
    let c1 = Grading::cut_named(&g, &["2-", "2+"]).unwrap();
    let c2 = Grading::cut_named(&g, &["2-", "1+"]).unwrap();
    let b12 = trivext_bigrading(&g, &c1, &c2).unwrap();
    let b21 = trivext_bigrading(&g, &c2, &c1).unwrap();
    let moved = arrow_grading_of(&g, &b12).unwrap().transformed([[1, 1], [0, -1]]).unwrap();
    assert_eq!(moved, arrow_grading_of(&g, &b21).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn dimension_matches_word_enumeration(seed in any::<u64>(), edges in 1usize..7) {
        let g = random_graph(&mut rng(seed), edges);
        let isolated = g.edges().iter().filter(|[a, b]| g.valency(*a) == 1 && g.valency(*b) == 1).count();
        prop_assert_eq!(dimension_of(&g), bga_dimension_by_words(&g) + isolated);
        // Σ m² over vertices holds whenever no half-edge is fixed
        if (0..g.len()).all(|h| g.sigma(h) != h) {
            let sq: usize = g.vertices().iter().map(|o| o.len() * o.len()).sum();
            prop_assert_eq!(dimension_of(&g), sq);
        }
    }

    #[test]
    fn arrows_and_type_iii_counts(seed in any::<u64>(), edges in 1usize..8) {
        let g = random_graph(&mut rng(seed), edges);
        let q = quiver_of(&g);
        prop_assert_eq!(q.arrows().len(), (0..g.len()).filter(|&h| g.sigma(h) != h).count());
        let composable = (0..g.len())
            .filter(|&h| g.sigma(h) != h && g.sigma(g.iota(g.sigma(h))) != g.iota(g.sigma(h)))
            .count();
        prop_assert_eq!(relations_of(&g).type_iii.len(), composable);
    }

    #[test]
    fn every_cut_gives_a_gentle_algebra_of_half_dimension(seed in any::<u64>(), edges in 1usize..6) {
        let g = random_graph(&mut rng(seed), edges);
        for cut in enumerate_admissible_cuts(&g) {
            let p = cut_algebra(&g, &cut).unwrap();
            prop_assert!(check_gentle(&p).is_empty());
            prop_assert_eq!(2 * path_count(&p, 10_000).unwrap(), dimension_of(&g));
        }
    }

    #[test]
    fn schroll_round_trip_from_graphs(seed in any::<u64>(), edges in 1usize..6) {
        let g = random_graph(&mut rng(seed), edges);
        for cut in enumerate_admissible_cuts(&g) {
            let p = cut_algebra(&g, &cut).unwrap();
            let (h, hc) = trivial_extension_graph(&p).unwrap();
            let a = GradedBrauerGraph::new(g.clone(), cut).unwrap();
            let b = GradedBrauerGraph::new(h, hc).unwrap();
            prop_assert!(is_isomorphic(&a, &b, true).is_some());
        }
    }

    #[test]
    fn schroll_round_trip_from_algebras(seed in any::<u64>()) {
        let p = random_gentle(&mut rng(seed), 5, 40);
        let (g, cut) = trivial_extension_graph(&p).unwrap();
        let back = cut_algebra(&g, &cut).unwrap();
        prop_assert!(presentations_isomorphic(&p, &back));
    }
}
