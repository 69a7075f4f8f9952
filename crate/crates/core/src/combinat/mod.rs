//! Graphs, set systems, and the exact combinatorial oracles backing the
//! geometric reductions.

mod coloring;
mod solvers;

pub use coloring::{edge_color, vizing_color, EdgeColoring};
pub use solvers::{
    exact_max_independent_set, exact_min_set_cover, exhaustive_min_vertex_cover, greedy_set_cover,
    CoverSolution, IndependentSet,
};

use crate::error::CombinatError;
use serde::{Deserialize, Serialize};

/// Simple undirected graph; edges are stored as sorted `(u, v)` pairs with
/// `u < v`, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Graph, CombinatError> {
        let mut normalized = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a == b {
                return Err(CombinatError::InvalidGraph("self-loop"));
            }
            if a >= n || b >= n {
                return Err(CombinatError::InvalidGraph("vertex out of range"));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        if normalized.windows(2).any(|w| w[0] == w[1]) {
            return Err(CombinatError::InvalidGraph("duplicate edge"));
        }
        Ok(Graph {
            n,
            edges: normalized,
        })
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph { n, edges }
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    pub fn require_max_degree(&self, max: usize) -> Result<(), CombinatError> {
        for (vertex, degree) in self.degrees().into_iter().enumerate() {
            if degree > max {
                return Err(CombinatError::DegreeViolation {
                    vertex,
                    degree,
                    max,
                });
            }
        }
        Ok(())
    }
}

/// Set system over ground set `{0, .., n-1}`; `k` and `freq` are the computed
/// maximum set size and element frequency, so the bound invariants hold by
/// construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetSystem {
    pub n: usize,
    pub sets: Vec<Vec<usize>>,
    pub k: usize,
    pub freq: usize,
}

impl SetSystem {
    pub fn new(n: usize, sets: Vec<Vec<usize>>) -> Result<SetSystem, CombinatError> {
        let mut counts = vec![0usize; n];
        let mut sorted_sets = Vec::with_capacity(sets.len());
        for mut set in sets {
            set.sort_unstable();
            if set.windows(2).any(|w| w[0] == w[1]) {
                return Err(CombinatError::InvalidSystem("duplicate element in a set"));
            }
            for &e in &set {
                if e >= n {
                    return Err(CombinatError::InvalidSystem("element out of range"));
                }
                counts[e] += 1;
            }
            sorted_sets.push(set);
        }
        let k = sorted_sets.iter().map(Vec::len).max().unwrap_or(0);
        let freq = counts.into_iter().max().unwrap_or(0);
        Ok(SetSystem {
            n,
            sets: sorted_sets,
            k,
            freq,
        })
    }

    /// Indices of the sets containing `element`, ascending.
    pub fn covering_sets(&self, element: usize) -> Vec<usize> {
        self.sets
            .iter()
            .enumerate()
            .filter(|(_, s)| s.binary_search(&element).is_ok())
            .map(|(i, _)| i)
            .collect()
    }
}

/// Vertex-cover instance as a set system: the ground set is the edge list and
/// set `v` holds the edges incident to vertex `v`.
pub fn vc_to_setcover(g: &Graph) -> Result<SetSystem, CombinatError> {
    g.require_max_degree(3)?;
    let mut sets = vec![Vec::new(); g.n];
    for (e, &(u, v)) in g.edges.iter().enumerate() {
        sets[u].push(e);
        sets[v].push(e);
    }
    SetSystem::new(g.edges.len(), sets)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_normalizes_and_validates() {
        let g = Graph::new(4, vec![(2, 1), (0, 3), (0, 1)]).unwrap();
        assert_eq!(g.edges, vec![(0, 1), (0, 3), (1, 2)]);
        assert!(g.has_edge(1, 0));
        assert!(!g.has_edge(2, 3));
        assert!(matches!(
            Graph::new(3, vec![(1, 1)]),
            Err(CombinatError::InvalidGraph("self-loop"))
        ));
        assert!(matches!(
            Graph::new(3, vec![(0, 1), (1, 0)]),
            Err(CombinatError::InvalidGraph("duplicate edge"))
        ));
        assert!(matches!(
            Graph::new(2, vec![(0, 5)]),
            Err(CombinatError::InvalidGraph("vertex out of range"))
        ));
    }

    #[test]
    fn degree_bound_reporting() {
        let star = Graph::new(5, vec![(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(star.max_degree(), 4);
        assert_eq!(
            star.require_max_degree(3),
            Err(CombinatError::DegreeViolation {
                vertex: 0,
                degree: 4,
                max: 3
            })
        );
        assert!(star.require_max_degree(4).is_ok());
    }

    #[test]
    fn k4_translation_counts() {
        let s = vc_to_setcover(&Graph::complete(4)).unwrap();
        assert_eq!(s.n, 6);
        assert_eq!(s.sets.len(), 4);
        assert!(s.sets.iter().all(|set| set.len() == 3));
        assert_eq!(s.k, 3);
        assert_eq!(s.freq, 2);
        for e in 0..6 {
            assert_eq!(s.covering_sets(e).len(), 2);
        }
    }

    #[test]
    fn single_edge_translation() {
        let g = Graph::new(2, vec![(0, 1)]).unwrap();
        let s = vc_to_setcover(&g).unwrap();
        assert_eq!(s.n, 1);
        assert_eq!(s.sets, vec![vec![0], vec![0]]);
        assert_eq!((s.k, s.freq), (1, 2));
    }

    #[test]
    fn empty_graph_translation() {
        let g = Graph::new(3, vec![]).unwrap();
        let s = vc_to_setcover(&g).unwrap();
        assert_eq!(s.n, 0);
        assert_eq!(s.sets, vec![Vec::<usize>::new(); 3]);
        assert_eq!((s.k, s.freq), (0, 0));
    }

    #[test]
    fn translation_rejects_high_degree() {
        let star = Graph::new(5, vec![(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(vc_to_setcover(&star).is_err());
    }

    #[test]
    fn set_system_validation() {
        assert!(matches!(
            SetSystem::new(3, vec![vec![0, 0]]),
            Err(CombinatError::InvalidSystem(_))
        ));
        assert!(matches!(
            SetSystem::new(3, vec![vec![7]]),
            Err(CombinatError::InvalidSystem(_))
        ));
        let s = SetSystem::new(3, vec![vec![2, 0], vec![1], vec![0, 1, 2]]).unwrap();
        assert_eq!(s.sets[0], vec![0, 2]);
        assert_eq!((s.k, s.freq), (3, 2));
        assert_eq!(s.covering_sets(0), vec![0, 2]);
    }
}
