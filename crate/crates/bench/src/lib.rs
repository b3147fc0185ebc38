//! Graph fixtures shared by the benchmarks.

use graph_hopf_core::Graph;

/// Named graphs of increasing difficulty for the chromatic engines.
pub fn fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("path6", Graph::path(6)),
        ("cycle6", Graph::cycle(6)),
        ("k5", Graph::complete(5)),
        ("wheel6", "6: 1-2, 2-3, 3-4, 4-5, 5-1, 6-1, 6-2, 6-3, 6-4, 6-5".parse().expect("literal")),
        ("petersen-ish", "7: 1-2, 2-3, 3-4, 4-5, 5-1, 1-6, 3-6, 2-7, 5-7, 6-7".parse().expect("literal")),
    ]
}
