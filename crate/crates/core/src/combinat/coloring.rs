//! Vizing edge coloring via the Misra-Gries fan-and-path procedure.

use super::Graph;
use crate::error::CombinatError;
use serde::{Deserialize, Serialize};

/// Proper edge coloring, parallel to the graph's edge list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoring {
    pub colors: Vec<usize>,
}

impl EdgeColoring {
    pub fn color_count(&self) -> usize {
        self.colors.iter().map(|&c| c + 1).max().unwrap_or(0)
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        if self.colors.len() != g.edges.len() {
            return false;
        }
        for (a, &(u1, v1)) in g.edges.iter().enumerate() {
            for (b, &(u2, v2)) in g.edges.iter().enumerate().skip(a + 1) {
                let touch = u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2;
                if touch && self.colors[a] == self.colors[b] {
                    return false;
                }
            }
        }
        true
    }
}

/// Coloring state: `at[v][c]` is the edge of color `c` at `v`, if any.
struct Palette {
    at: Vec<Vec<Option<usize>>>,
    color: Vec<Option<usize>>,
}

impl Palette {
    fn free(&self, v: usize) -> usize {
        self.at[v]
            .iter()
            .position(Option::is_none)
            .expect("a free color always exists under a Delta+1 palette")
    }

    fn is_free(&self, v: usize, c: usize) -> bool {
        self.at[v][c].is_none()
    }

    fn assign(&mut self, g: &Graph, e: usize, c: usize) {
        self.unassign(g, e);
        let (u, v) = g.edges[e];
        self.color[e] = Some(c);
        self.at[u][c] = Some(e);
        self.at[v][c] = Some(e);
    }

    fn unassign(&mut self, g: &Graph, e: usize) {
        if let Some(old) = self.color[e].take() {
            let (u, v) = g.edges[e];
            self.at[u][old] = None;
            self.at[v][old] = None;
        }
    }
}

/// Swaps colors `c` and `d` along the maximal alternating path leaving `u`
/// on its `d`-colored edge; afterwards `d` is free on `u`.
fn invert_cd_path(g: &Graph, p: &mut Palette, u: usize, c: usize, d: usize) {
    let mut path: Vec<(usize, usize)> = Vec::new();
    let mut current = u;
    let mut want = d;
    while let Some(e) = p.at[current][want] {
        path.push((e, want));
        let (a, b) = g.edges[e];
        current = if a == current { b } else { a };
        want = if want == d { c } else { d };
    }
    for &(e, _) in &path {
        p.unassign(g, e);
    }
    for &(e, old) in &path {
        p.assign(g, e, if old == d { c } else { d });
    }
}

/// Colors any graph properly with at most `Delta + 1` colors.
pub fn vizing_color(g: &Graph) -> EdgeColoring {
    let delta = g.max_degree();
    let mut p = Palette {
        at: vec![vec![None; delta + 1]; g.n],
        color: vec![None; g.edges.len()],
    };

    for (e0, &(u, v)) in g.edges.iter().enumerate() {
        // Maximal fan of u starting at the uncolored edge: the color of each
        // next fan edge is free on the previous fan vertex.
        let mut fan: Vec<(usize, usize)> = vec![(v, e0)];
        loop {
            let tip = fan.last().expect("fan is nonempty").0;
            match p.at[u][p.free(tip)] {
                Some(edge) => {
                    let (a, b) = g.edges[edge];
                    let w = if a == u { b } else { a };
                    if fan.iter().any(|&(x, _)| x == w) {
                        break;
                    }
                    fan.push((w, edge));
                }
                None => break,
            }
        }

        let c = p.free(u);
        let d = p.free(fan.last().expect("fan is nonempty").0);
        if !p.is_free(u, d) {
            invert_cd_path(g, &mut p, u, c, d);
        }
        debug_assert!(p.is_free(u, d));

        // Shortest prefix that can absorb d, then rotate: each fan edge takes
        // its successor's color and the prefix end takes d.
        let prefix_ok = |p: &Palette, j: usize| -> bool {
            p.is_free(fan[j].0, d)
                && (0..j).all(|i| match p.color[fan[i + 1].1] {
                    Some(x) => p.is_free(fan[i].0, x),
                    None => false,
                })
        };
        let j = (0..fan.len())
            .find(|&j| prefix_ok(&p, j))
            .expect("a rotatable fan prefix exists");
        // Record the target colors, clear the whole prefix, then reassign:
        // assigning in place would clobber palette slots that neighbors in
        // the rotation still occupy.
        let shifted: Vec<usize> = (0..j)
            .map(|i| p.color[fan[i + 1].1].expect("fan edges are colored"))
            .collect();
        for &(_, e) in &fan[..=j] {
            p.unassign(g, e);
        }
        for i in 0..j {
            p.assign(g, fan[i].1, shifted[i]);
        }
        p.assign(g, fan[j].1, d);
    }

    EdgeColoring {
        colors: p
            .color
            .into_iter()
            .map(|c| c.expect("all edges colored"))
            .collect(),
    }
}

/// Proper 4-coloring for graphs of maximum degree 3.
pub fn edge_color(g: &Graph) -> Result<EdgeColoring, CombinatError> {
    g.require_max_degree(3)?;
    let coloring = vizing_color(g);
    debug_assert!(coloring.is_proper(g));
    debug_assert!(coloring.color_count() <= 4);
    Ok(coloring)
}
