//! Graph streams for the property suites: exhaustive edge-set enumeration
//! at small orders, seeded random graphs above, and the bundled cubic-graph
//! corpus.

use crate::error::Result;
use crate::graph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// All `2^(n choose 2)` labeled graphs on `n` vertices, deduplicated only by
/// edge set (not isomorphism). Requires `n <= 8`.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 8, "exhaustive enumeration is limited to n <= 8");
    let pairs = n * n.saturating_sub(1) / 2;
    (0u64..1 << pairs).map(move |mask| Graph::from_edge_mask(n, mask))
}

/// A deterministic stream of G(n, 1/2) graphs for a given seed.
pub fn random_graphs(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64) << 32);
    (0..count)
        .map(|_| {
            let edges: Vec<_> = (0..n)
                .flat_map(|v| (0..v).map(move |u| (u, v)))
                .filter(|_| rng.gen_bool(0.5))
                .collect();
            Graph::from_edge_list(n, &edges).expect("generated edges are in range")
        })
        .collect()
}

/// The bundled corpus of 3-regular graphs in graph6 form: all of them (up
/// to isomorphism, including disconnected ones) for orders 4, 6 and 8, and
/// a named sample at order 10 (Petersen, pentagonal prism, and two
/// disconnected K4-plus-cubic-6 graphs).
pub fn cubic_corpus(n: usize) -> Result<Vec<Graph>> {
    let text = match n {
        4 => include_str!("../data/cubic/cubic04.g6"),
        6 => include_str!("../data/cubic/cubic06.g6"),
        8 => include_str!("../data/cubic/cubic08.g6"),
        10 => include_str!("../data/cubic/cubic10.g6"),
        _ => {
            return Err(crate::error::Error::InvalidParameter(format!(
                "no cubic corpus for order {n} (available: 4, 6, 8, 10)"
            )))
        }
    };
    crate::graph6::decode_lines(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_counts() {
        assert_eq!(all_graphs(0).count(), 1);
        assert_eq!(all_graphs(3).count(), 8);
        assert_eq!(all_graphs(4).count(), 64);
    }

    #[test]
    fn random_graphs_are_seed_stable() {
        let a = random_graphs(6, 5, 42);
        let b = random_graphs(6, 5, 42);
        assert_eq!(a, b);
        assert_ne!(random_graphs(6, 5, 43), a);
    }

    #[test]
    fn corpus_is_cubic_and_complete_for_small_orders() {
        // census: 1, 2, 6 cubic graphs (up to isomorphism, disconnected
        // included) at orders 4, 6, 8
        for (n, expected) in [(4, 1), (6, 2), (8, 6), (10, 4)] {
            let graphs = cubic_corpus(n).unwrap();
            assert_eq!(graphs.len(), expected, "order {n}");
            for g in &graphs {
                assert_eq!(g.n(), n);
                assert_eq!(g.degree_stats().unwrap(), (3, 3));
            }
        }
        assert!(cubic_corpus(5).is_err());
    }
}
