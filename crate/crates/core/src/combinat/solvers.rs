//! Exact set-cover, vertex-cover, and independent-set oracles plus the
//! greedy baseline. Scales are desk-sized; everything past the caps is a
//! typed budget error, never a silent approximation.

use super::{Graph, SetSystem};
use crate::error::CombinatError;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Chosen set indices of a cover; `optimal` marks certified minimum size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverSolution {
    pub chosen: Vec<usize>,
    pub size: usize,
    pub optimal: bool,
}

impl CoverSolution {
    fn new(mut chosen: Vec<usize>, optimal: bool) -> CoverSolution {
        chosen.sort_unstable();
        CoverSolution {
            size: chosen.len(),
            chosen,
            optimal,
        }
    }

    pub fn covers(&self, s: &SetSystem) -> bool {
        let mut hit = vec![false; s.n];
        for &i in &self.chosen {
            for &e in &s.sets[i] {
                hit[e] = true;
            }
        }
        hit.into_iter().all(|h| h)
    }
}

/// Maximum independent set with an explicit witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependentSet {
    pub vertices: Vec<usize>,
    pub size: usize,
}

fn check_coverable(s: &SetSystem) -> Result<(), CombinatError> {
    let mut hit = vec![false; s.n];
    for set in &s.sets {
        for &e in set {
            hit[e] = true;
        }
    }
    match hit.into_iter().position(|h| !h) {
        Some(e) => Err(CombinatError::UncoverableElement(e)),
        None => Ok(()),
    }
}

const COVER_ELEMENT_CAP: usize = 40;
const COVER_SET_CAP: usize = 30;

/// Certified minimum set cover by branch and bound: branch on an uncovered
/// element's containing sets, seeded and bounded by the greedy cover.
pub fn exact_min_set_cover(s: &SetSystem) -> Result<CoverSolution, CombinatError> {
    if s.n > COVER_ELEMENT_CAP || s.sets.len() > COVER_SET_CAP {
        return Err(CombinatError::BudgetExceeded(
            "set cover caps: 40 elements, 30 sets",
        ));
    }
    check_coverable(s)?;

    let full: u64 = if s.n == 64 { !0 } else { (1u64 << s.n) - 1 };
    let masks: Vec<u64> = s
        .sets
        .iter()
        .map(|set| set.iter().fold(0u64, |m, &e| m | 1 << e))
        .collect();
    let containing: Vec<Vec<usize>> = (0..s.n).map(|e| s.covering_sets(e)).collect();

    let mut best: Vec<usize> = greedy_set_cover(s)?.chosen;
    let max_size = s.k.max(1);
    let mut chosen: Vec<usize> = Vec::new();

    fn descend(
        covered: u64,
        full: u64,
        masks: &[u64],
        containing: &[Vec<usize>],
        max_size: usize,
        chosen: &mut Vec<usize>,
        best: &mut Vec<usize>,
    ) {
        if covered == full {
            if chosen.len() < best.len() {
                *best = chosen.clone();
            }
            return;
        }
        let uncovered = (full & !covered).count_ones() as usize;
        if chosen.len() + uncovered.div_ceil(max_size) >= best.len() {
            return;
        }
        // Branch on the uncovered element with the fewest containing sets.
        let e = (0..64)
            .filter(|&e| full & !covered & (1 << e) != 0)
            .min_by_key(|&e| containing[e].len())
            .expect("an uncovered element exists");
        for &i in &containing[e] {
            chosen.push(i);
            descend(
                covered | masks[i],
                full,
                masks,
                containing,
                max_size,
                chosen,
                best,
            );
            chosen.pop();
        }
    }
    descend(
        0,
        full,
        &masks,
        &containing,
        max_size,
        &mut chosen,
        &mut best,
    );

    Ok(CoverSolution::new(best, true))
}

/// Greedy cover: repeatedly the set covering the most uncovered elements,
/// ties to the lowest index.
pub fn greedy_set_cover(s: &SetSystem) -> Result<CoverSolution, CombinatError> {
    check_coverable(s)?;
    let mut covered = vec![false; s.n];
    let mut remaining = s.n;
    let mut chosen = Vec::new();
    while remaining > 0 {
        let (i, gain) = s
            .sets
            .iter()
            .enumerate()
            .map(|(i, set)| (i, set.iter().filter(|&&e| !covered[e]).count()))
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
            .expect("coverable system has sets");
        debug_assert!(gain > 0);
        chosen.push(i);
        for &e in &s.sets[i] {
            if !covered[e] {
                covered[e] = true;
                remaining -= 1;
            }
        }
    }
    Ok(CoverSolution::new(chosen, false))
}

/// Smallest vertex cover by direct enumeration; the oracle for desk-scale
/// cross-checks. Capped at 20 vertices.
pub fn exhaustive_min_vertex_cover(g: &Graph) -> Result<Vec<usize>, CombinatError> {
    if g.n > 20 {
        return Err(CombinatError::BudgetExceeded(
            "vertex cover enumeration cap: 20 vertices",
        ));
    }
    let mut best: Option<u32> = None;
    for mask in 0u32..1 << g.n {
        if let Some(b) = best {
            if mask.count_ones() >= b.count_ones() {
                continue;
            }
        }
        if g.edges
            .iter()
            .all(|&(u, v)| mask & (1 << u) != 0 || mask & (1 << v) != 0)
        {
            best = Some(mask);
        }
    }
    let best = best.expect("the full vertex set is always a cover");
    Ok((0..g.n).filter(|&v| best & (1 << v) != 0).collect())
}

const MIS_CAP: usize = 30;

/// Certified maximum independent set: branches on a maximum-degree vertex,
/// splits into connected components, and memoizes subproblem masks.
pub fn exact_max_independent_set(g: &Graph) -> Result<IndependentSet, CombinatError> {
    if g.n > MIS_CAP {
        return Err(CombinatError::BudgetExceeded(
            "independent set cap: 30 vertices",
        ));
    }
    let neighborhoods: Vec<u64> = {
        let adj = g.adjacency();
        (0..g.n)
            .map(|v| adj[v].iter().fold(0u64, |m, &w| m | 1 << w))
            .collect()
    };
    let full: u64 = if g.n == 0 { 0 } else { (1u64 << g.n) - 1 };
    let mut memo: HashMap<u64, (usize, u64)> = HashMap::new();
    let (size, mask) = mis(full, &neighborhoods, &mut memo);
    let vertices: Vec<usize> = (0..g.n).filter(|&v| mask & (1 << v) != 0).collect();
    debug_assert_eq!(vertices.len(), size);
    debug_assert!(g
        .edges
        .iter()
        .all(|&(u, v)| mask & (1 << u) == 0 || mask & (1 << v) == 0));
    Ok(IndependentSet { vertices, size })
}

fn mis(active: u64, nbrs: &[u64], memo: &mut HashMap<u64, (usize, u64)>) -> (usize, u64) {
    if active == 0 {
        return (0, 0);
    }
    if let Some(&hit) = memo.get(&active) {
        return hit;
    }

    // Split off the component of the lowest active vertex.
    let seed = active.trailing_zeros() as usize;
    let mut comp = 1u64 << seed;
    loop {
        let mut grown = comp;
        let mut bits = comp;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            grown |= nbrs[v] & active;
        }
        if grown == comp {
            break;
        }
        comp = grown;
    }

    let result = if comp != active {
        let (s1, w1) = mis(comp, nbrs, memo);
        let (s2, w2) = mis(active & !comp, nbrs, memo);
        (s1 + s2, w1 | w2)
    } else {
        let v = {
            let mut best = seed;
            let mut bits = active;
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if (nbrs[u] & active).count_ones() > (nbrs[best] & active).count_ones() {
                    best = u;
                }
            }
            best
        };
        let degree = (nbrs[v] & active).count_ones();
        let (s_in, w_in) = mis(active & !(nbrs[v] | 1 << v), nbrs, memo);
        let taken = (s_in + 1, w_in | 1 << v);
        if degree <= 1 {
            // Taking a vertex of degree at most one is always optimal.
            taken
        } else {
            let skipped = mis(active & !(1 << v), nbrs, memo);
            if taken.0 >= skipped.0 {
                taken
            } else {
                skipped
            }
        }
    };
    memo.insert(active, result);
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn system(n: usize, sets: &[&[usize]]) -> SetSystem {
        SetSystem::new(n, sets.iter().map(|s| s.to_vec()).collect()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
    }

    #[test]
    fn exact_cover_prefers_big_set() {
        let s = system(3, &[&[0, 1], &[2], &[0, 1, 2]]);
        let sol = exact_min_set_cover(&s).unwrap();
        assert_eq!(sol.size, 1);
        assert_eq!(sol.chosen, vec![2]);
        assert!(sol.optimal);
        assert!(sol.covers(&s));
    }

    #[test]
    fn exact_cover_of_k4_edges() {
        let s = super::super::vc_to_setcover(&Graph::complete(4)).unwrap();
        let sol = exact_min_set_cover(&s).unwrap();
        assert_eq!(sol.size, 3);
        assert!(sol.covers(&s));
    }

    #[test]
    fn exact_cover_empty_ground_set() {
        let s = system(0, &[&[], &[]]);
        let sol = exact_min_set_cover(&s).unwrap();
        assert_eq!(sol.size, 0);
        assert!(sol.chosen.is_empty());
    }

    #[test]
    fn uncoverable_element_reported() {
        let s = system(3, &[&[0], &[2]]);
        assert_eq!(
            exact_min_set_cover(&s),
            Err(CombinatError::UncoverableElement(1))
        );
        assert_eq!(
            greedy_set_cover(&s),
            Err(CombinatError::UncoverableElement(1))
        );
    }

    #[test]
    fn budget_cap_enforced() {
        let s = SetSystem::new(41, (0..41).map(|e| vec![e]).collect()).unwrap();
        assert!(matches!(
            exact_min_set_cover(&s),
            Err(CombinatError::BudgetExceeded(_))
        ));
        // Greedy has no cap.
        assert_eq!(greedy_set_cover(&s).unwrap().size, 41);
    }

    #[test]
    fn greedy_trace() {
        let s = system(3, &[&[0, 1], &[1, 2], &[0], &[2]]);
        let sol = greedy_set_cover(&s).unwrap();
        assert_eq!(sol.chosen, vec![0, 1]);
        assert!(!sol.optimal);

        let s = system(3, &[&[0, 1], &[2], &[0, 1, 2]]);
        assert_eq!(greedy_set_cover(&s).unwrap().chosen, vec![2]);
    }

    #[test]
    fn vertex_cover_oracle() {
        assert_eq!(
            exhaustive_min_vertex_cover(&Graph::complete(4))
                .unwrap()
                .len(),
            3
        );
        assert_eq!(exhaustive_min_vertex_cover(&cycle(5)).unwrap().len(), 3);
        let empty = Graph::new(4, vec![]).unwrap();
        assert!(exhaustive_min_vertex_cover(&empty).unwrap().is_empty());
    }

    #[test]
    fn independent_set_on_known_graphs() {
        let c5 = exact_max_independent_set(&cycle(5)).unwrap();
        assert_eq!(c5.size, 2);
        assert_eq!(c5.vertices.len(), 2);

        let empty = Graph::new(4, vec![]).unwrap();
        assert_eq!(exact_max_independent_set(&empty).unwrap().size, 4);

        assert_eq!(
            exact_max_independent_set(&Graph::complete(4)).unwrap().size,
            1
        );

        // Petersen graph: independence number 4.
        let petersen = Graph::new(
            10,
            vec![
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
            ],
        )
        .unwrap();
        assert_eq!(exact_max_independent_set(&petersen).unwrap().size, 4);
    }

    #[test]
    fn independent_set_witness_is_independent() {
        let g = Graph::new(
            7,
            vec![
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 0),
                (1, 4),
            ],
        )
        .unwrap();
        let sol = exact_max_independent_set(&g).unwrap();
        assert_eq!(sol.size, 3);
        for (i, &u) in sol.vertices.iter().enumerate() {
            for &v in &sol.vertices[i + 1..] {
                assert!(!g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn cover_optimum_matches_vertex_cover_on_samples() {
        for g in [
            Graph::complete(4),
            cycle(5),
            cycle(6),
            Graph::new(1, vec![]).unwrap(),
        ] {
            let s = super::super::vc_to_setcover(&g).unwrap();
            let cover = exact_min_set_cover(&s).unwrap();
            let vc = exhaustive_min_vertex_cover(&g).unwrap();
            assert_eq!(cover.size, vc.len(), "graph {:?}", g.edges);
        }
    }
}
