//! The reduction builders and their certifying verifiers.
//!
//! Each builder turns a combinatorial source (degree-bounded graph or small
//! set system) into a geometric instance; each verifier re-derives every
//! claimed condition from coordinates alone and reports per-condition
//! results instead of failing fast.

mod circles;
mod fat;
mod friendly;
mod indep3d;
mod planes;

pub use circles::{build_circles, verify_circles, CircleInstance};
pub use fat::{build_fat_triangles, verify_fat_triangles, FatTriangleInstance};
pub use friendly::{build_friendly, verify_friendly, FriendlyInstance};
pub use indep3d::{build_indep3d, verify_indep3d, Triangle3DInstance};
pub use planes::{build_planes, verify_planes, PlaneInstance};

use crate::combinat::SetSystem;
use crate::error::CombinatError;
use serde::{Deserialize, Serialize};

/// Largest denominator used when rounding constructed coordinates to
/// rationals; verification is exact on the rounded values.
pub(crate) const ROUND_DENOMINATOR: u64 = 1_000_000;

/// One certified check: a stable id, its outcome, and failure context.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionResult {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

/// Verifier output; `pass` iff every condition passed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub conditions: Vec<ConditionResult>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn condition(&self, id: &str) -> Option<&ConditionResult> {
        self.conditions.iter().find(|c| c.id == id)
    }

    pub fn failing_ids(&self) -> Vec<&str> {
        self.conditions
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.id.as_str())
            .collect()
    }
}

pub(crate) struct ReportBuilder {
    conditions: Vec<ConditionResult>,
}

impl ReportBuilder {
    pub(crate) fn new() -> Self {
        ReportBuilder {
            conditions: Vec::new(),
        }
    }

    pub(crate) fn push(&mut self, id: &str, pass: bool, detail: impl Into<String>) {
        self.conditions.push(ConditionResult {
            id: id.to_string(),
            pass,
            detail: detail.into(),
        });
    }

    /// Records a condition from a checker result, mapping `Err` to failure.
    pub(crate) fn push_result(&mut self, id: &str, outcome: Result<(), String>, ok_detail: &str) {
        match outcome {
            Ok(()) => self.push(id, true, ok_detail),
            Err(msg) => self.push(id, false, msg),
        }
    }

    pub(crate) fn skip_failed(&mut self, ids: &[&str], reason: &str) {
        for id in ids {
            self.push(id, false, reason);
        }
    }

    pub(crate) fn finish(self) -> VerificationReport {
        let pass = self.conditions.iter().all(|c| c.pass);
        VerificationReport {
            conditions: self.conditions,
            pass,
        }
    }
}

/// Uniform cover-instance view: exact point-in-shape membership plus the
/// map from ground elements to point indices.
pub trait CoverGeometry {
    /// Rows are points, columns are shapes.
    fn membership_matrix(&self) -> Vec<Vec<bool>>;

    /// Ground element `e` is realized by point `ground_points()[e]`.
    fn ground_points(&self) -> Vec<usize>;

    /// The cover problem induced by geometry alone: which shapes contain
    /// which ground points.
    fn cover_system(&self) -> Result<SetSystem, CombinatError> {
        let matrix = self.membership_matrix();
        let ground = self.ground_points();
        let shapes = matrix.first().map_or(0, Vec::len);
        let mut sets = vec![Vec::new(); shapes];
        for (e, &p) in ground.iter().enumerate() {
            for (s, set) in sets.iter_mut().enumerate() {
                if matrix[p][s] {
                    set.push(e);
                }
            }
        }
        SetSystem::new(ground.len(), sets)
    }
}

/// Exact membership matrix of any cover-style instance.
pub fn geometric_membership<T: CoverGeometry>(inst: &T) -> Vec<Vec<bool>> {
    inst.membership_matrix()
}
