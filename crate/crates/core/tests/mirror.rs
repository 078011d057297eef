use bicomm::generate::rng;
use bicomm::oracle::{brute_force_topr, mirror_transform, UnipartiteGraph};
use bicomm::{Error, Influence, WeightedBipartiteGraph};
use rand::Rng;

fn triangle() -> UnipartiteGraph {
    UnipartiteGraph {
        weights: vec![1, 2, 3],
        edges: vec![(0, 1), (1, 2), (0, 2)],
    }
}

fn random_unipartite(seed: u64) -> UnipartiteGraph {
    let mut r = rng(seed);
    let n = r.gen_range(2..=8u32);
    let weights = (0..n).map(|_| r.gen_range(1..=20)).collect();
    let mut edges = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if r.gen_bool(0.4) {
                edges.push((x, y));
            }
        }
    }
    UnipartiteGraph { weights, edges }
}

fn unipartite_degree(g: &UnipartiteGraph, x: u32) -> usize {
    g.edges.iter().filter(|&&(a, b)| a == x || b == x).count()
}

fn check_mirror(g: &UnipartiteGraph, b: &WeightedBipartiteGraph) {
    let n = g.weights.len();
    assert_eq!(b.upper_count(), n);
    assert_eq!(b.lower_count(), n);
    assert_eq!(b.edge_count(), 2 * g.edges.len());
    assert_eq!(b.upper_weights(), &g.weights[..]);
    assert_eq!(b.lower_weights(), &g.weights[..]);
    for x in 0..n as u32 {
        let d = unipartite_degree(g, x);
        assert_eq!(b.degree(b.upper(x)), d);
        assert_eq!(b.degree(b.lower(x)), d);
    }
    // Swapping layers maps the edge set onto itself.
    let mut edges: Vec<(u32, u32)> = b.edges().collect();
    let mut swapped: Vec<(u32, u32)> = edges.iter().map(|&(u, v)| (v, u)).collect();
    edges.sort_unstable();
    swapped.sort_unstable();
    assert_eq!(edges, swapped);
}

#[test]
fn triangle_mirror_shape() {
    let g = triangle();
    let b = mirror_transform(&g).unwrap();
    check_mirror(&g, &b);
    assert_eq!(b.vertex_count(), 6);
    assert_eq!(b.edge_count(), 6);
    assert!((0..6).all(|v| b.degree(v) == 2));
}

#[test]
fn triangle_top1_is_twice_the_two_core_average() {
    // The triangle is its own 2-core, with average weight (1 + 2 + 3) / 3 = 2.
    let b = mirror_transform(&triangle()).unwrap();
    let top = brute_force_topr(&b, 2, 2, 1).unwrap();
    assert_eq!(top.len(), 1);
    let c = &top.entries()[0];
    assert_eq!(c.influence, Influence::integer(4));
    assert_eq!((c.upper_ids.len(), c.lower_ids.len()), (3, 3));
}

#[test]
fn random_mirrors() {
    for seed in 0..5 {
        let g = random_unipartite(seed);
        let b = mirror_transform(&g).unwrap();
        check_mirror(&g, &b);
    }
}

#[test]
fn self_loop_rejected() {
    let g = UnipartiteGraph {
        weights: vec![1, 1],
        edges: vec![(0, 1), (1, 1)],
    };
    assert!(matches!(mirror_transform(&g), Err(Error::Validation(_))));
}
