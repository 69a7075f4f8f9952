//! Shared fixtures for the benchmark targets.

use hardcover_core::combinat::{Graph, SetSystem};
use hardcover_core::gen::{random_cover_system, random_degree3_graph};

pub fn graph(n: usize) -> Graph {
    random_degree3_graph(n, 42)
}

pub fn system(n: usize, m: usize) -> SetSystem {
    random_cover_system(n, m, 42)
}
