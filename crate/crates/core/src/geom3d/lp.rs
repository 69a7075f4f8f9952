//! Small exact rational linear programs, used for facet-witness searches.
//!
//! Dictionary simplex with Bland's rule, so termination is guaranteed and
//! every arithmetic step stays in Q. Problem sizes here are a handful of
//! variables and a few dozen rows; no effort is spent on sparsity.

use crate::rational::{rat_int, Rational};
use num_traits::{Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Rel {
    Le,
    // Only unit tests build Ge rows today; the solver handles all three.
    #[allow(dead_code)]
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub(crate) struct Constraint {
    pub coeffs: Vec<Rational>,
    pub rel: Rel,
    pub rhs: Rational,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rational>, rel: Rel, rhs: Rational) -> Self {
        Constraint { coeffs, rel, rhs }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum LpOutcome {
    /// Maximum value and one attaining point for the free variables.
    Optimal {
        value: Rational,
        point: Vec<Rational>,
    },
    Infeasible,
    Unbounded,
}

/// Maximizes `objective . x` over free rational variables subject to the
/// constraints. Free variables are split into nonnegative pairs internally.
pub(crate) fn maximize(objective: &[Rational], constraints: &[Constraint]) -> LpOutcome {
    let n_free = objective.len();
    let ns = 2 * n_free;

    // Rows in `a . x <= b` form over the split variables.
    let mut rows: Vec<(Vec<Rational>, Rational)> = Vec::new();
    let split = |coeffs: &[Rational]| -> Vec<Rational> {
        let mut out = Vec::with_capacity(ns);
        for c in coeffs {
            out.push(c.clone());
            out.push(-c.clone());
        }
        out
    };
    for con in constraints {
        assert_eq!(con.coeffs.len(), n_free, "constraint arity mismatch");
        let a = split(&con.coeffs);
        match con.rel {
            Rel::Le => rows.push((a, con.rhs.clone())),
            Rel::Ge => rows.push((a.iter().map(|v| -v).collect(), -con.rhs.clone())),
            Rel::Eq => {
                rows.push((a.iter().map(|v| -v).collect(), -con.rhs.clone()));
                rows.push((a, con.rhs.clone()));
            }
        }
    }
    let obj = split(objective);

    match simplex(ns, &rows, &obj) {
        SimplexResult::Optimal { value, structurals } => {
            let point = (0..n_free)
                .map(|v| &structurals[2 * v] - &structurals[2 * v + 1])
                .collect();
            LpOutcome::Optimal { value, point }
        }
        SimplexResult::Infeasible => LpOutcome::Infeasible,
        SimplexResult::Unbounded => LpOutcome::Unbounded,
    }
}

enum SimplexResult {
    Optimal {
        value: Rational,
        structurals: Vec<Rational>,
    },
    Infeasible,
    Unbounded,
}

/// Dictionary state for `max z` over `x >= 0`, rows `x_basic = b + T x_nonbasic`.
struct Dictionary {
    basis: Vec<usize>,
    nonbasic: Vec<usize>,
    b: Vec<Rational>,
    t: Vec<Vec<Rational>>,
    obj: Vec<Rational>,
    obj0: Rational,
}

impl Dictionary {
    fn pivot(&mut self, enter: usize, leave: usize) {
        let p = self.t[leave][enter].clone();
        debug_assert!(!p.is_zero());
        let cols = self.nonbasic.len();

        // Solve row `leave` for the entering variable.
        let new_bl = -&self.b[leave] / &p;
        let mut new_row: Vec<Rational> = Vec::with_capacity(cols);
        for c in 0..cols {
            if c == enter {
                new_row.push(p.recip());
            } else {
                new_row.push(-&self.t[leave][c] / &p);
            }
        }

        for r in 0..self.b.len() {
            if r == leave {
                continue;
            }
            let factor = self.t[r][enter].clone();
            if factor.is_zero() {
                continue;
            }
            self.b[r] = &self.b[r] + &factor * &new_bl;
            for c in 0..cols {
                self.t[r][c] = if c == enter {
                    &factor * &new_row[c]
                } else {
                    &self.t[r][c] + &factor * &new_row[c]
                };
            }
        }
        let factor = self.obj[enter].clone();
        if !factor.is_zero() {
            self.obj0 = &self.obj0 + &factor * &new_bl;
            for c in 0..cols {
                self.obj[c] = if c == enter {
                    &factor * &new_row[c]
                } else {
                    &self.obj[c] + &factor * &new_row[c]
                };
            }
        }
        self.b[leave] = new_bl;
        self.t[leave] = new_row;
        std::mem::swap(&mut self.basis[leave], &mut self.nonbasic[enter]);
    }

    /// Runs Bland pivots to optimality. Returns false on unboundedness.
    fn optimize(&mut self) -> bool {
        loop {
            let enter = (0..self.nonbasic.len())
                .filter(|&c| self.obj[c].is_positive())
                .min_by_key(|&c| self.nonbasic[c]);
            let enter = match enter {
                Some(c) => c,
                None => return true,
            };
            let mut leave: Option<(usize, Rational)> = None;
            for r in 0..self.b.len() {
                if self.t[r][enter].is_negative() {
                    let bound = -&self.b[r] / &self.t[r][enter];
                    let better = match &leave {
                        None => true,
                        Some((lr, lb)) => {
                            bound < *lb || (bound == *lb && self.basis[r] < self.basis[*lr])
                        }
                    };
                    if better {
                        leave = Some((r, bound));
                    }
                }
            }
            match leave {
                Some((r, _)) => self.pivot(enter, r),
                None => return false,
            }
        }
    }
}

fn simplex(ns: usize, rows: &[(Vec<Rational>, Rational)], objective: &[Rational]) -> SimplexResult {
    let m = rows.len();
    let mut dict = Dictionary {
        basis: (ns..ns + m).collect(),
        nonbasic: (0..ns).collect(),
        b: rows.iter().map(|(_, b)| b.clone()).collect(),
        t: rows
            .iter()
            .map(|(a, _)| a.iter().map(|v| -v).collect())
            .collect(),
        obj: objective.to_vec(),
        obj0: Rational::zero(),
    };

    if dict.b.iter().any(|b| b.is_negative()) && !phase_one(&mut dict, ns, objective) {
        return SimplexResult::Infeasible;
    }

    if !dict.optimize() {
        return SimplexResult::Unbounded;
    }

    let mut structurals = vec![Rational::zero(); ns];
    for (r, &var) in dict.basis.iter().enumerate() {
        if var < ns {
            structurals[var] = dict.b[r].clone();
        }
    }
    SimplexResult::Optimal {
        value: dict.obj0,
        structurals,
    }
}

/// Auxiliary-variable phase: makes the dictionary feasible, or returns false.
fn phase_one(dict: &mut Dictionary, ns: usize, objective: &[Rational]) -> bool {
    let aux = usize::MAX;
    let cols = dict.nonbasic.len();
    dict.nonbasic.push(aux);
    for row in dict.t.iter_mut() {
        row.push(rat_int(1));
    }
    dict.obj = vec![Rational::zero(); cols + 1];
    dict.obj[cols] = rat_int(-1);
    dict.obj0 = Rational::zero();

    // One special pivot on the most negative row makes every b nonnegative.
    let worst = (0..dict.b.len())
        .min_by(|&i, &j| dict.b[i].cmp(&dict.b[j]))
        .expect("phase one needs rows");
    dict.pivot(cols, worst);
    let feasible = dict.optimize();
    debug_assert!(feasible, "auxiliary problem is bounded");
    if dict.obj0.is_negative() {
        return false;
    }

    // Drive the auxiliary variable out of the basis if it lingers at zero.
    if let Some(r) = dict.basis.iter().position(|&v| v == aux) {
        debug_assert!(dict.b[r].is_zero());
        match (0..dict.nonbasic.len()).find(|&c| !dict.t[r][c].is_zero()) {
            Some(c) => dict.pivot(c, r),
            None => {
                // Row says 0 = 0; drop it.
                dict.basis.remove(r);
                dict.b.remove(r);
                dict.t.remove(r);
            }
        }
    }
    let aux_col = dict
        .nonbasic
        .iter()
        .position(|&v| v == aux)
        .expect("auxiliary variable is nonbasic at a feasible optimum");
    dict.nonbasic.remove(aux_col);
    for row in dict.t.iter_mut() {
        row.remove(aux_col);
    }

    // Restate the real objective in terms of the current nonbasic set.
    dict.obj = vec![Rational::zero(); dict.nonbasic.len()];
    dict.obj0 = Rational::zero();
    for (c, &var) in dict.nonbasic.iter().enumerate() {
        if var < ns {
            dict.obj[c] = &dict.obj[c] + &objective[var];
        }
    }
    for (r, &var) in dict.basis.iter().enumerate() {
        if var < ns && !objective[var].is_zero() {
            dict.obj0 = &dict.obj0 + &objective[var] * &dict.b[r];
            for c in 0..dict.nonbasic.len() {
                let add = &objective[var] * &dict.t[r][c];
                dict.obj[c] = &dict.obj[c] + add;
            }
        }
    }
    true
}
