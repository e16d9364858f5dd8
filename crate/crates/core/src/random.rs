//! Seedable random graph generators for property tests and the suite.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;

/// Connected graph on `n ≥ 1` vertices: a random spanning tree (each vertex
/// attaches to a uniformly chosen earlier one, after a random relabeling)
/// plus up to `extra` additional distinct edges, capped at `max_edges` total.
pub fn random_connected_graph<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    extra: usize,
    max_edges: Option<usize>,
) -> Graph {
    assert!(n >= 1, "a connected graph needs a vertex");
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = (1..n)
        .map(|v| {
            let u = rng.gen_range(0..v);
            ordered(labels[u], labels[v])
        })
        .collect();
    let cap = max_edges
        .unwrap_or(usize::MAX)
        .max(n - 1)
        .min(n * (n - 1) / 2);
    let mut missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|e| !edges.contains(e))
        .collect();
    missing.shuffle(rng);
    let room = cap - edges.len();
    edges.extend(missing.into_iter().take(extra.min(room)));
    Graph::new(n, edges).expect("generated graph is simple")
}

/// Arbitrary (possibly disconnected, possibly empty) graph on `n` vertices:
/// each pair is an edge with probability `p`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect::<Vec<_>>()
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges).expect("generated graph is simple")
}

/// `count` crown graphs with `0..=tmax` vertices each and edge density
/// drawn uniformly from `[0, 1]`.
pub fn random_crowns<R: Rng + ?Sized>(rng: &mut R, count: usize, tmax: usize) -> Vec<Graph> {
    (0..count)
        .map(|_| {
            let t = rng.gen_range(0..=tmax);
            let p = rng.gen_range(0.0..=1.0);
            random_graph(rng, t, p)
        })
        .collect()
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}
