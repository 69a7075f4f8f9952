//! Exact-arithmetic builders, verifiers, and oracles for geometric
//! set-cover and independent-set hardness instances.
//!
//! The crate turns small combinatorial problems (degree-≤3 graphs,
//! 3-set-cover systems) into geometric instances whose optima provably
//! match the source: gear-shaped friendly regions, near-isosceles fat
//! triangles, circle and plane covers, and 3D triangle families realizing
//! a prescribed intersection graph. Every geometric claim is re-checked by
//! a verifier that works purely over rational (or quadratic-extension)
//! arithmetic; floating point appears only in display output.

pub mod combinat;
pub mod error;
pub mod export;
pub mod gen;
pub mod geom2d;
pub mod geom3d;
pub mod instance;
pub mod rational;
pub mod reductions;

pub use error::{BuildError, CombinatError, GeomError};
pub use rational::Rational;
