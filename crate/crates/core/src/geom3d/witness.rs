//! Voronoi shared-facet witnesses for moment-curve sites.

use super::lp::{maximize, Constraint, LpOutcome, Rel};
use super::{moment_point, Point3};
use crate::error::GeomError;
use crate::rational::{rat_int, serde_rational, Rational};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// Point on the shared Voronoi facet of sites `i` and `j`, equidistant to the
/// pair and closer to it than to any other site by at least `margin`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetWitness {
    pub i: usize,
    pub j: usize,
    pub point: Point3,
    #[serde(with = "serde_rational")]
    pub margin: Rational,
}

/// Sites `(t, t^2, t^3)` for `t = 1..=n`.
pub fn moment_sites(n: usize) -> Vec<Point3> {
    (1..=n)
        .map(|i| moment_point(&rat_int(i as i64)).expect("positive parameter"))
        .collect()
}

// Witness coordinates are confined to this box; it only has to be generous
// enough that every moment-curve facet keeps a full-margin point inside.
const BOX_BOUND: i64 = 1_000_000_000;
const MARGIN_CAP: i64 = 1;

/// Finds a witness on the shared facet of cells `i` and `j` by maximizing the
/// slack margin with an exact LP, then selecting the lexicographically
/// smallest optimal point coordinate by coordinate.
pub fn voronoi_facet_witness(
    i: usize,
    j: usize,
    sites: &[Point3],
) -> Result<FacetWitness, GeomError> {
    if i >= sites.len() || j >= sites.len() || i == j {
        return Err(GeomError::DegenerateInput(
            "witness needs two distinct site indices",
        ));
    }
    for a in 0..sites.len() {
        for b in a + 1..sites.len() {
            if sites[a] == sites[b] {
                return Err(GeomError::DegenerateInput("duplicate site"));
            }
        }
    }

    // Variables (x, y, z, mu). Power-distance comparisons are linear:
    // |x - p_k|^2 - |x - p_i|^2 >= mu  <=>  2(p_k - p_i).x + mu <= |p_k|^2 - |p_i|^2.
    let two = rat_int(2);
    let pi = &sites[i];
    let pj = &sites[j];
    let mut constraints: Vec<Constraint> = Vec::new();
    let pair_row = |from: &Point3, to: &Point3, mu: i64| -> Vec<Rational> {
        vec![
            &two * (&to.x - &from.x),
            &two * (&to.y - &from.y),
            &two * (&to.z - &from.z),
            rat_int(mu),
        ]
    };
    constraints.push(Constraint::new(
        pair_row(pi, pj, 0),
        Rel::Eq,
        pj.norm_sq() - pi.norm_sq(),
    ));
    for (k, pk) in sites.iter().enumerate() {
        if k == i || k == j {
            continue;
        }
        constraints.push(Constraint::new(
            pair_row(pi, pk, 1),
            Rel::Le,
            pk.norm_sq() - pi.norm_sq(),
        ));
    }
    for axis in 0..3 {
        for sign in [1i64, -1] {
            let mut coeffs = vec![Rational::zero(); 4];
            coeffs[axis] = rat_int(sign);
            constraints.push(Constraint::new(coeffs, Rel::Le, rat_int(BOX_BOUND)));
        }
    }
    constraints.push(Constraint::new(
        vec![
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            rat_int(1),
        ],
        Rel::Le,
        rat_int(MARGIN_CAP),
    ));

    let objective = |axis: usize, sign: i64| -> Vec<Rational> {
        let mut obj = vec![Rational::zero(); 4];
        obj[axis] = rat_int(sign);
        obj
    };
    let margin = match maximize(&objective(3, 1), &constraints) {
        LpOutcome::Optimal { value, .. } if value.is_positive() => value,
        LpOutcome::Optimal { .. } | LpOutcome::Infeasible => {
            return Err(GeomError::InfeasibleWitness(i, j))
        }
        LpOutcome::Unbounded => unreachable!("witness LP is boxed"),
    };

    // Pin the margin, then minimize x, y, z in turn.
    let pin = |var: usize, value: &Rational, constraints: &mut Vec<Constraint>| {
        let mut coeffs = vec![Rational::zero(); 4];
        coeffs[var] = rat_int(1);
        constraints.push(Constraint::new(coeffs, Rel::Eq, value.clone()));
    };
    pin(3, &margin, &mut constraints);
    let mut coords: Vec<Rational> = Vec::with_capacity(3);
    for axis in 0..3 {
        match maximize(&objective(axis, -1), &constraints) {
            LpOutcome::Optimal { point, .. } => {
                let v = point[axis].clone();
                pin(axis, &v, &mut constraints);
                coords.push(v);
            }
            _ => unreachable!("pinned witness LP stays feasible and boxed"),
        }
    }
    let z = coords.pop().expect("three coordinates");
    let y = coords.pop().expect("three coordinates");
    let x = coords.pop().expect("three coordinates");
    Ok(FacetWitness {
        i,
        j,
        point: Point3::new(x, y, z),
        margin,
    })
}

/// Checks the witness invariants exactly: positive margin, equidistance to
/// the pair, and at least `margin` extra squared distance to every other site.
pub fn facet_witness_valid(w: &FacetWitness, sites: &[Point3]) -> bool {
    if w.i >= sites.len() || w.j >= sites.len() || w.i == w.j || !w.margin.is_positive() {
        return false;
    }
    let di = w.point.dist_sq(&sites[w.i]);
    if di != w.point.dist_sq(&sites[w.j]) {
        return false;
    }
    sites
        .iter()
        .enumerate()
        .all(|(k, pk)| k == w.i || k == w.j || w.point.dist_sq(pk) - &di >= w.margin)
}
