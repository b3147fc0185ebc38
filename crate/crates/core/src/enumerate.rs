//! Exhaustive graph families for the identity checks.

use std::collections::BTreeMap;

use crate::canon::{canonical_key_any, CanonicalKey};
use crate::graph::{bit, Graph};

/// One representative per isomorphism class of graphs on `n` vertices, built
/// by adding a vertex with every possible neighbourhood to the classes on
/// `n - 1` vertices. Ordered by canonical key.
pub fn isoclasses(n: usize) -> Vec<Graph> {
    let mut level: BTreeMap<CanonicalKey, Graph> = BTreeMap::new();
    level.insert(canonical_key_any(&Graph::empty()), Graph::empty());
    for m in 1..=n {
        let mut next = BTreeMap::new();
        for g in level.values() {
            for nbrs in 0..1u64 << (m - 1) {
                let mut adj = g.adjacency().to_vec();
                adj.push(nbrs);
                for (v, row) in adj.iter_mut().enumerate().take(m - 1) {
                    if nbrs & bit(v) != 0 {
                        *row |= bit(m - 1);
                    }
                }
                let h = Graph::from_adjacency(adj);
                next.entry(canonical_key_any(&h)).or_insert(h);
            }
        }
        level = next;
    }
    level.into_values().collect()
}

/// Representatives of every isoclass with at most `max_n` vertices, by size.
pub fn isoclasses_up_to(max_n: usize) -> Vec<Graph> {
    (0..=max_n).flat_map(isoclasses).collect()
}

/// Connected isoclasses on exactly `n >= 1` vertices.
pub fn connected_isoclasses(n: usize) -> Vec<Graph> {
    isoclasses(n).into_iter().filter(Graph::is_connected).collect()
}

/// Every labelled graph on `0..n`, one per edge subset.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|b| (0..b).map(move |a| (a, b))).collect();
    (0..1u64 << pairs.len()).map(move |subset| {
        let mut adj = vec![0u64; n];
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if subset & bit(i) != 0 {
                adj[a] |= bit(b);
                adj[b] |= bit(a);
            }
        }
        Graph::from_adjacency(adj)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::Monomial;
    use std::collections::BTreeSet;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| isoclasses(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = (1..=6).map(|n| connected_isoclasses(n).len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn labelled_graphs_cover_every_class() {
        assert_eq!(labelled_graphs(4).count(), 64);
        let classes: BTreeSet<Monomial> = labelled_graphs(5).map(|g| Monomial::of_graph(&g)).collect();
        assert_eq!(classes.len(), 34);
    }
}
