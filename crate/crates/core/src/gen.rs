//! Seeded random sources for exercising the reductions.
//!
//! Everything here is deterministic per seed; the geometry never consumes
//! randomness.

use crate::combinat::{Graph, SetSystem};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random graph with maximum degree three: visit all vertex pairs in a
/// shuffled order and keep each with probability 1/2 while both degrees
/// allow it.
pub fn random_degree3_graph(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs.shuffle(&mut rng);
    let mut degree = vec![0usize; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if degree[u] < 3 && degree[v] < 3 && rng.gen_bool(0.5) {
            degree[u] += 1;
            degree[v] += 1;
            edges.push((u, v));
        }
    }
    Graph::new(n, edges).expect("pair scan yields a simple graph")
}

/// Random coverable set system with sets of size at most three and
/// element frequency at most four. Every element lands in at least one
/// set and no set stays empty.
///
/// Requires `n ≤ 3m` so the coverage pass can always place elements, and
/// `m ≤ 3n` so the nonempty pass never runs out of frequency budget.
pub fn random_cover_system(n: usize, m: usize, seed: u64) -> SetSystem {
    assert!(
        n <= 3 * m,
        "cannot cover {n} elements with {m} sets of size 3"
    );
    assert!(
        m <= 3 * n,
        "cannot fill {m} sets from {n} elements at frequency 4"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sets: Vec<Vec<usize>> = vec![Vec::new(); m];
    let mut freq = vec![0usize; n];

    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    for e in order {
        let open: Vec<usize> = (0..m).filter(|&i| sets[i].len() < 3).collect();
        let &i = open.choose(&mut rng).expect("n <= 3m leaves an open set");
        sets[i].push(e);
        freq[e] += 1;
    }
    for i in 0..m {
        if sets[i].is_empty() {
            let candidates: Vec<usize> = (0..n).filter(|&e| freq[e] < 4).collect();
            let &e = candidates
                .choose(&mut rng)
                .expect("m <= 3n leaves an element below frequency 4");
            sets[i].push(e);
            freq[e] += 1;
        }
    }
    for i in 0..m {
        while sets[i].len() < 3 && rng.gen_bool(0.5) {
            let candidates: Vec<usize> = (0..n)
                .filter(|&e| freq[e] < 4 && !sets[i].contains(&e))
                .collect();
            match candidates.choose(&mut rng) {
                Some(&e) => {
                    sets[i].push(e);
                    freq[e] += 1;
                }
                None => break,
            }
        }
    }
    SetSystem::new(n, sets).expect("generator respects the system invariants")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graphs_are_reproducible_and_degree_bounded() {
        for seed in 0..50 {
            let g = random_degree3_graph(12, seed);
            assert!(g.max_degree() <= 3);
            let again = random_degree3_graph(12, seed);
            assert_eq!(g, again);
        }
        assert_ne!(
            random_degree3_graph(12, 1),
            random_degree3_graph(12, 2),
            "different seeds should disagree somewhere"
        );
    }

    #[test]
    fn single_vertex_graph_is_empty() {
        let g = random_degree3_graph(1, 99);
        assert_eq!(g.n, 1);
        assert!(g.edges.is_empty());
    }

    #[test]
    fn systems_are_coverable_with_small_sets() {
        for seed in 0..50 {
            let s = random_cover_system(12, 8, seed);
            assert_eq!(s.n, 12);
            assert_eq!(s.sets.len(), 8);
            assert!(s.k <= 3);
            assert!(s.freq <= 4);
            assert!(s.sets.iter().all(|set| !set.is_empty()));
            for e in 0..s.n {
                assert!(!s.covering_sets(e).is_empty(), "element {e} uncovered");
            }
            assert_eq!(s, random_cover_system(12, 8, seed));
        }
    }

    #[test]
    fn tight_system_fills_every_slot() {
        let s = random_cover_system(9, 3, 5);
        assert!(s.sets.iter().all(|set| set.len() == 3));
    }
}
