//! On-disk instance and report formats.
//!
//! Instances serialize as pretty-printed JSON with a `kind` tag and a
//! `format` version, so files are self-describing and serialization is
//! byte-stable: parsing a file and re-serializing it reproduces it
//! exactly.

use crate::reductions::{
    verify_circles, verify_fat_triangles, verify_friendly, verify_indep3d, verify_planes,
    CircleInstance, FatTriangleInstance, FriendlyInstance, PlaneInstance, Triangle3DInstance,
    VerificationReport,
};
use serde::{Deserialize, Serialize};

/// Version written into every file; bump on breaking format changes.
pub const FORMAT_VERSION: u32 = 1;

/// Any of the five instance kinds, tagged for serialization.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Instance {
    Friendly(FriendlyInstance),
    FatTri(FatTriangleInstance),
    Circles(CircleInstance),
    Planes(PlaneInstance),
    Indep3d(Triangle3DInstance),
}

impl Instance {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Instance::Friendly(_) => "friendly",
            Instance::FatTri(_) => "fat-tri",
            Instance::Circles(_) => "circles",
            Instance::Planes(_) => "planes",
            Instance::Indep3d(_) => "indep3d",
        }
    }

    /// Run the full verifier for the wrapped kind.
    pub fn verify(&self) -> VerificationReport {
        match self {
            Instance::Friendly(inst) => verify_friendly(inst),
            Instance::FatTri(inst) => verify_fat_triangles(inst),
            Instance::Circles(inst) => verify_circles(inst),
            Instance::Planes(inst) => verify_planes(inst),
            Instance::Indep3d(inst) => verify_indep3d(inst),
        }
    }
}

/// Instance plus file-level metadata.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InstanceFile {
    pub format: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(flatten)]
    pub instance: Instance,
}

impl InstanceFile {
    pub fn new(instance: Instance, seed: Option<u64>) -> Self {
        InstanceFile {
            format: FORMAT_VERSION,
            seed,
            instance,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("instances always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        let file: InstanceFile =
            serde_json::from_str(text).map_err(|e| format!("malformed instance file: {e}"))?;
        if file.format != FORMAT_VERSION {
            return Err(format!(
                "unsupported format version {} (expected {FORMAT_VERSION})",
                file.format
            ));
        }
        Ok(file)
    }
}

/// Verification outcome in a machine-readable file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportFile {
    pub format: u32,
    pub kind: String,
    pub pass: bool,
    pub conditions: Vec<crate::reductions::ConditionResult>,
}

impl ReportFile {
    pub fn new(kind: &str, report: &VerificationReport) -> Self {
        ReportFile {
            format: FORMAT_VERSION,
            kind: kind.to_string(),
            pass: report.pass,
            conditions: report.conditions.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        serde_json::from_str(text).map_err(|e| format!("malformed report file: {e}"))
    }
}
