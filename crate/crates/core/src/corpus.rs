//! Named and random cubic graphs used by the reproduction runs and tests.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{build_petersen, complete_graph, Family, Graph};

/// Uniform random cubic multigraph by the pairing model, retried until it is
/// simple (and connected if asked).
pub fn random_cubic(n: usize, seed: u64, connected: bool) -> Result<Graph> {
    if n % 2 == 1 || n < 4 {
        return Err(Error::Parameter(format!("cubic graphs need even n >= 4, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
    loop {
        points.shuffle(&mut rng);
        let edges: Vec<(usize, usize)> = points.chunks(2).map(|p| (p[0], p[1])).collect();
        if let Ok(g) = Graph::from_edges(n, &edges, Family::Raw) {
            if !connected || g.is_connected() {
                return Ok(g);
            }
        }
    }
}

pub fn complete_bipartite_3_3() -> Graph {
    let edges: Vec<(usize, usize)> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
    Graph::from_edges(6, &edges, Family::Raw).expect("K_3,3 is simple")
}

/// Connected cubic graphs on at most `max_n` vertices: `K_4`, `K_{3,3}`,
/// every simple `P(m,k)` with `k <= m/2`, and three random graphs per even
/// order from 6 up.
pub fn cubic_corpus(max_n: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    if max_n >= 4 {
        out.push(("K4".to_string(), complete_graph(4)));
    }
    if max_n >= 6 {
        out.push(("K3,3".to_string(), complete_bipartite_3_3()));
    }
    for m in 3..=max_n / 2 {
        for k in 1..=(m - 1) / 2 {
            out.push((format!("P({m},{k})"), build_petersen(m, k).expect("2k < m")));
        }
    }
    for n in (6..=max_n).step_by(2) {
        for seed in 0..3 {
            let g = random_cubic(n, 1000 * n as u64 + seed, true).expect("even n >= 6");
            out.push((format!("random n={n} seed={seed}"), g));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_graphs_are_cubic_and_reproducible() {
        for n in (4..=30).step_by(2) {
            let g = random_cubic(n, 7, true).unwrap();
            assert!(g.is_cubic() && g.is_connected());
            assert_eq!(g, random_cubic(n, 7, true).unwrap());
        }
        assert!(random_cubic(7, 0, false).is_err());
    }

    #[test]
    fn corpus_members_are_connected_cubic() {
        let corpus = cubic_corpus(12);
        assert!(corpus.len() >= 15);
        for (name, g) in &corpus {
            assert!(g.is_cubic() && g.is_connected(), "{name}");
            assert!(g.n() <= 12);
        }
        assert!(complete_bipartite_3_3().is_cubic());
    }
}
