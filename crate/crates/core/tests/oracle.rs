mod common;

use bicomm::oracle::{
    approximation_ratio, brute_force_topr, enumerate_influential_communities, validate_community,
    MAX_ORACLE_VERTICES,
};
use bicomm::report::enumeration_lines;
use bicomm::{Community, Error, Influence, Layer, TopRSet, WeightedBipartiteGraph};
use common::{graph, instance, naive_connected_cores, naive_influential, Frac};

#[test]
fn enumeration_matches_naive_subset_scan() {
    for seed in 0..300 {
        let inst = instance(seed, 5);
        let report = enumerate_influential_communities(&inst.graph, inst.alpha, inst.beta).unwrap();
        let cores = naive_connected_cores(&inst.graph, inst.alpha, inst.beta);
        let expected = naive_influential(&cores);
        assert_eq!(report.communities.len(), expected.len(), "seed {seed}");
        assert_eq!(
            report.non_maximal_discarded,
            cores.len() - expected.len(),
            "seed {seed}"
        );
        for c in &report.communities {
            let twin = expected
                .iter()
                .find(|e| e.matches(c))
                .unwrap_or_else(|| panic!("seed {seed}: {c:?}"));
            assert!(Frac::of(c.influence) == twin.f, "seed {seed}");
        }
    }
}

#[test]
fn enumeration_is_internally_consistent() {
    for seed in 0..100 {
        let inst = instance(seed, 6);
        let report = enumerate_influential_communities(&inst.graph, inst.alpha, inst.beta).unwrap();
        for (c, d) in report.communities.iter().zip(&report.diagnostics) {
            assert!(d.is_valid(), "seed {seed}");
            assert_eq!(
                validate_community(&inst.graph, c, inst.alpha, inst.beta).unwrap(),
                *d
            );
        }
        for (i, a) in report.communities.iter().enumerate() {
            for b in &report.communities[i + 1..] {
                assert!(!a.same_vertices(b), "seed {seed}: duplicate");
                if a.influence == b.influence {
                    assert!(
                        !a.is_subset_of(b) && !b.is_subset_of(a),
                        "seed {seed}: nested pair"
                    );
                }
                assert!(a.influence >= b.influence);
            }
        }
    }
}

#[test]
fn enumeration_report_is_deterministic() {
    let inst = instance(11, 6);
    let a = enumerate_influential_communities(&inst.graph, inst.alpha, inst.beta).unwrap();
    let b = enumerate_influential_communities(&inst.graph, inst.alpha, inst.beta).unwrap();
    assert_eq!(enumeration_lines(&a), enumeration_lines(&b));
}

#[test]
fn k22_single_community() {
    let g = graph(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)], &[1, 2], &[3, 4]);
    let report = enumerate_influential_communities(&g, 2, 2).unwrap();
    assert_eq!(report.communities.len(), 1);
    assert_eq!(report.communities[0].influence, Influence::integer(5));
    assert_eq!(report.communities[0].len(), 4);
}

#[test]
fn edgeless_graph_has_no_communities() {
    let g = WeightedBipartiteGraph::unweighted(3, 3, []).unwrap();
    let report = enumerate_influential_communities(&g, 1, 1).unwrap();
    assert!(report.communities.is_empty());
    assert!(brute_force_topr(&g, 1, 1, 2).unwrap().is_empty());
}

#[test]
fn pendant_fixture() {
    // K_{2,2} with u:{1,1}, v:{2,2} and a third upper vertex hanging off v0.
    // Every connected core has influence 3, so only the whole graph survives.
    let g = graph(
        3,
        2,
        &[(0, 0), (0, 1), (1, 0), (1, 1), (2, 0)],
        &[1, 1, 1],
        &[2, 2],
    );
    let report = enumerate_influential_communities(&g, 1, 1).unwrap();
    assert_eq!(report.communities.len(), 1);
    let c = &report.communities[0];
    assert_eq!(
        (c.upper_ids.clone(), c.lower_ids.clone()),
        (vec![0, 1, 2], vec![0, 1])
    );
    assert_eq!(c.influence, Influence::integer(3));
    assert_eq!(report.non_maximal_discarded, 15);
}

fn two_components() -> WeightedBipartiteGraph {
    // {u0, u1, v0, v1} with weights 1 and 2, {u2, u3, v2, v3} with 5 and 6.
    graph(
        4,
        4,
        &[
            (0, 0),
            (0, 1),
            (1, 0),
            (1, 1),
            (2, 2),
            (2, 3),
            (3, 2),
            (3, 3),
        ],
        &[1, 1, 5, 5],
        &[2, 2, 6, 6],
    )
}

#[test]
fn top1_is_heavier_component() {
    let top = brute_force_topr(&two_components(), 2, 2, 1).unwrap();
    assert_eq!(top.len(), 1);
    assert_eq!(top.entries()[0].upper_ids, vec![2, 3]);
    assert_eq!(top.entries()[0].influence, Influence::integer(11));
}

#[test]
fn r_beyond_count_returns_everything() {
    let top = brute_force_topr(&two_components(), 2, 2, 10).unwrap();
    assert_eq!(
        top.influences(),
        vec![Influence::integer(11), Influence::integer(3)]
    );
}

#[test]
fn size_guard() {
    let g = WeightedBipartiteGraph::unweighted(12, 11, []).unwrap();
    assert!(g.vertex_count() > MAX_ORACLE_VERTICES);
    assert!(matches!(
        enumerate_influential_communities(&g, 1, 1),
        Err(Error::TooLarge { .. })
    ));
}

#[test]
fn validate_true_component() {
    let g = two_components();
    let c = Community::from_vertices(&g, &[2, 3, 6, 7]).unwrap();
    let d = validate_community(&g, &c, 2, 2).unwrap();
    assert!(d.is_valid());
    assert_eq!(d.min_slack, Some(0));
}

#[test]
fn validate_names_violating_vertex() {
    let g = two_components();
    // Drop v3 from the tight (2,2) component: u2 and u3 fall to degree 1.
    let c = Community::from_vertices(&g, &[2, 3, 6]).unwrap();
    let d = validate_community(&g, &c, 2, 2).unwrap();
    assert!(!d.is_valid());
    let named: Vec<(Layer, u32)> = d.violations.iter().map(|v| (v.layer, v.id)).collect();
    assert_eq!(named, vec![(Layer::Upper, 2), (Layer::Upper, 3)]);
    assert_eq!(d.min_slack, Some(-1));
}

#[test]
fn validate_flags_wrong_influence() {
    let g = two_components();
    let mut c = Community::from_vertices(&g, &[2, 3, 6, 7]).unwrap();
    c.influence = Influence::integer(12);
    let d = validate_community(&g, &c, 2, 2).unwrap();
    assert!(!d.influence_matches);
    assert_eq!(d.recomputed, Some(Influence::integer(11)));
    assert!(!d.is_valid());
}

#[test]
fn validate_rejects_out_of_range_ids() {
    let g = two_components();
    let c = Community {
        upper_ids: vec![9],
        lower_ids: vec![0],
        influence: Influence::integer(1),
    };
    assert!(matches!(
        validate_community(&g, &c, 1, 1),
        Err(Error::Validation(_))
    ));
}

#[test]
fn validate_disconnected_union() {
    let g = two_components();
    let c = Community::from_vertices(&g, &[0, 1, 2, 3, 4, 5, 6, 7]).unwrap();
    let d = validate_community(&g, &c, 2, 2).unwrap();
    assert!(!d.connected);
    assert!(d.violations.is_empty());
}

fn set_of(g: &WeightedBipartiteGraph, groups: &[&[u32]]) -> TopRSet {
    let mut set = TopRSet::new(groups.len().max(1));
    for members in groups {
        set.insert(Community::from_vertices(g, members).unwrap());
    }
    set
}

#[test]
fn ratio_of_identical_sets() {
    let g = two_components();
    let exact = set_of(&g, &[&[2, 3, 6, 7], &[0, 1, 4, 5]]);
    let metrics = approximation_ratio(&exact, &exact);
    assert!(metrics.top1_exact());
    assert_eq!(metrics.coverage, 1.0);
    for rank in &metrics.ranks {
        assert_eq!(rank.ratio, Some((1, 1)));
    }
}

#[test]
fn ratio_with_empty_approximation() {
    let g = two_components();
    let exact = set_of(&g, &[&[2, 3, 6, 7]]);
    let metrics = approximation_ratio(&TopRSet::new(1), &exact);
    assert_eq!(metrics.coverage, 0.0);
    assert!(!metrics.top1_exact());
    assert_eq!(metrics.ranks[0].approx, None);
}

#[test]
fn ratio_below_one() {
    let g = two_components();
    let exact = set_of(&g, &[&[2, 3, 6, 7]]);
    let approx = set_of(&g, &[&[0, 1, 4, 5]]);
    let metrics = approximation_ratio(&approx, &exact);
    assert_eq!(metrics.ranks[0].ratio, Some((3, 11)));
}
