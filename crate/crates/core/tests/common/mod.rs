#![allow(dead_code)]

use std::cmp::Ordering;

use bicomm::generate::{generate_random_bipartite, rng};
use bicomm::{Community, Influence, WeightedBipartiteGraph};
use num_bigint::BigUint;
use rand::Rng;

pub struct Instance {
    pub seed: u64,
    pub graph: WeightedBipartiteGraph,
    pub alpha: u32,
    pub beta: u32,
    pub r: usize,
}

/// Layer sizes in `2..=max_layer`, `m` uniform over `0..=n_u * n_v`,
/// alpha and beta in `1..=3`, r in {1, 3}, weights in `1..=10`.
pub fn instance(seed: u64, max_layer: usize) -> Instance {
    let mut r = rng(seed ^ 0xabcdef);
    let nu = r.gen_range(2..=max_layer);
    let nv = r.gen_range(2..=max_layer);
    let m = r.gen_range(0..=nu * nv);
    let alpha = r.gen_range(1..=3);
    let beta = r.gen_range(1..=3);
    let top = if r.gen_bool(0.5) { 1 } else { 3 };
    Instance {
        seed,
        graph: generate_random_bipartite(nu, nv, m, seed, 10).unwrap(),
        alpha,
        beta,
        r: top,
    }
}

pub fn graph(
    nu: usize,
    nv: usize,
    edges: &[(u32, u32)],
    uw: &[u64],
    vw: &[u64],
) -> WeightedBipartiteGraph {
    WeightedBipartiteGraph::from_edges(nu, nv, edges.iter().copied(), uw.to_vec(), vw.to_vec())
        .unwrap()
}

/// Exact fraction kept unreduced.
#[derive(Debug, Clone)]
pub struct Frac {
    pub num: BigUint,
    pub den: BigUint,
}

impl Frac {
    pub fn of(influence: Influence) -> Frac {
        match influence {
            Influence::Finite { num, den } => Frac {
                num: BigUint::from(num),
                den: BigUint::from(den),
            },
            Influence::NegInfinity => panic!("sentinel has no fraction"),
        }
    }

    pub fn cmp(&self, other: &Frac) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialEq for Frac {
    fn eq(&self, other: &Frac) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

#[derive(Debug, Clone)]
pub struct NaiveCore {
    pub upper: Vec<u32>,
    pub lower: Vec<u32>,
    pub f: Frac,
}

impl NaiveCore {
    pub fn contains(&self, other: &NaiveCore) -> bool {
        other.upper.iter().all(|u| self.upper.contains(u))
            && other.lower.iter().all(|v| self.lower.contains(v))
    }

    pub fn len(&self) -> usize {
        self.upper.len() + self.lower.len()
    }

    pub fn matches(&self, c: &Community) -> bool {
        self.upper == c.upper_ids && self.lower == c.lower_ids
    }
}

/// Every connected (alpha, beta)-core with both layers nonempty, found by
/// testing each subset against the raw edge list.
pub fn naive_connected_cores(g: &WeightedBipartiteGraph, alpha: u32, beta: u32) -> Vec<NaiveCore> {
    let nu = g.upper_count();
    let nv = g.lower_count();
    let n = nu + nv;
    assert!(n <= 20);
    let edges: Vec<(usize, usize)> = g
        .edges()
        .map(|(u, v)| (u as usize, nu + v as usize))
        .collect();
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let inside = |x: usize| mask >> x & 1 == 1;
        let mut degree = vec![0u32; n];
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in &edges {
            if inside(a) && inside(b) {
                degree[a] += 1;
                degree[b] += 1;
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
        let members: Vec<usize> = (0..n).filter(|&x| inside(x)).collect();
        let upper: Vec<u32> = members
            .iter()
            .filter(|&&x| x < nu)
            .map(|&x| x as u32)
            .collect();
        let lower: Vec<u32> = members
            .iter()
            .filter(|&&x| x >= nu)
            .map(|&x| (x - nu) as u32)
            .collect();
        if upper.is_empty() || lower.is_empty() {
            continue;
        }
        if members
            .iter()
            .any(|&x| degree[x] < if x < nu { alpha } else { beta })
        {
            continue;
        }
        let root = find(&mut parent, members[0]);
        if members.iter().any(|&x| find(&mut parent, x) != root) {
            continue;
        }
        let su: u64 = upper.iter().map(|&u| g.upper_weights()[u as usize]).sum();
        let sv: u64 = lower.iter().map(|&v| g.lower_weights()[v as usize]).sum();
        let f = Frac {
            num: BigUint::from(su) * BigUint::from(lower.len())
                + BigUint::from(sv) * BigUint::from(upper.len()),
            den: BigUint::from(upper.len() * lower.len()),
        };
        out.push(NaiveCore { upper, lower, f });
    }
    out
}

/// Cores with no equal-influence strict superset among the cores.
pub fn naive_influential(cores: &[NaiveCore]) -> Vec<NaiveCore> {
    let mut kept: Vec<NaiveCore> = cores
        .iter()
        .filter(|c| {
            !cores
                .iter()
                .any(|d| d.len() > c.len() && d.f == c.f && d.contains(c))
        })
        .cloned()
        .collect();
    kept.sort_by(|a, b| b.f.cmp(&a.f));
    kept
}

/// The r largest influence values, descending.
pub fn naive_top_values(influential: &[NaiveCore], r: usize) -> Vec<Frac> {
    influential.iter().take(r).map(|c| c.f.clone()).collect()
}

pub fn same_values(found: &[Influence], expected: &[Frac]) -> bool {
    found.len() == expected.len() && found.iter().zip(expected).all(|(&a, b)| Frac::of(a) == *b)
}
