//! Named graph families used in tests, fixtures and benchmarks.

use super::Graph;

/// Complete graph `Kₙ`.
pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
    Graph::new(n, edges).expect("complete graph is simple")
}

/// Path `Pₙ` on `n` vertices.
pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path is simple")
}

/// Cycle `Cₙ`, `n ≥ 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least three vertices");
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle is simple")
}

/// Star `K₁,ₗ` with center `0` and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star is simple")
}
