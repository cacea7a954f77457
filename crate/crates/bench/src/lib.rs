//! Benchmark inputs shared by the criterion benches in `benches/`.

use vsdo_core::generate::{generate, Family};
use vsdo_core::Digraph;

/// `(label, graph)` pairs at a few sizes for each family.
pub fn workloads(sizes: &[usize]) -> Vec<(String, Digraph)> {
    let mut out = Vec::new();
    for family in [Family::Gnp, Family::PathShortcut] {
        for &n in sizes {
            out.push((format!("{family}/{n}"), generate(family, n, 4 * n, 100, 42)));
        }
    }
    out
}
