//! Fixed benchmark instances, shared by the criterion benches.

use corona_core::random::{random_connected_graph, random_crowns};
use corona_core::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Seeded base graph of order `n` with about `2n` edges, with crowns for
/// both coronae of order at most `tmax`.
pub fn instance(n: usize, tmax: usize) -> (Graph, Vec<Graph>, Vec<Graph>) {
    let mut rng = ChaCha8Rng::seed_from_u64(n as u64 * 1_000 + tmax as u64);
    let g = random_connected_graph(&mut rng, n, n + 1, Some(2 * n));
    let rv = random_crowns(&mut rng, g.n(), tmax);
    let re = random_crowns(&mut rng, g.m(), tmax);
    (g, rv, re)
}

#[cfg(test)]
mod tests {
    #[test]
    fn instances_are_reproducible() {
        assert_eq!(super::instance(8, 3), super::instance(8, 3));
        assert!(super::instance(8, 3).0.is_connected());
    }
}
