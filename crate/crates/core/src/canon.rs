//! Isomorphism-canonical keys.
//!
//! A connected graph is keyed by the lexicographically smallest upper-triangle
//! adjacency bitstring over vertex orderings in which degrees are
//! non-decreasing. That set of orderings is itself isomorphism-invariant, so
//! the minimum is a complete invariant. Exhaustive, exact, and fast enough for
//! the ten-or-so vertices this crate targets.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{bit, Graph};

/// Opaque key identifying the isomorphism class of a graph.
///
/// Layout: one byte holding `n`, then the bits of the canonical upper triangle
/// (column by column, `(0,1), (0,2), (1,2), (0,3), ...`) packed MSB first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn vertex_count(&self) -> usize {
        self.0[0] as usize
    }

    /// The canonical representative graph.
    pub fn to_graph(&self) -> Graph {
        let n = self.vertex_count();
        let mut adj = vec![0u64; n];
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bit(idx) {
                    adj[i] |= bit(j);
                    adj[j] |= bit(i);
                }
                idx += 1;
            }
        }
        Graph::from_adjacency(adj)
    }

    fn bit(&self, idx: usize) -> bool {
        self.0[1 + idx / 8] & (0x80 >> (idx % 8)) != 0
    }

    /// True for the single-vertex graph.
    pub fn is_single_vertex(&self) -> bool {
        self.vertex_count() == 1
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Key({})", self.to_graph())
    }
}

/// Canonical key of a connected graph.
pub fn canonical_key(g: &Graph) -> Result<CanonicalKey> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(canonical_key_any(g))
}

/// Canonical key of an arbitrary graph. Complete invariant for all graphs;
/// the commutative algebra uses it only on connected ones.
pub(crate) fn canonical_key_any(g: &Graph) -> CanonicalKey {
    let n = g.n();
    let bits = canonical_bits(g);
    let mut bytes = vec![0u8; 1 + bits.len().div_ceil(8)];
    bytes[0] = n as u8;
    for (idx, &b) in bits.iter().enumerate() {
        if b {
            bytes[1 + idx / 8] |= 0x80 >> (idx % 8);
        }
    }
    CanonicalKey(bytes)
}

struct Search<'a> {
    g: &'a Graph,
    // target degree of each position
    degrees: Vec<usize>,
    order: Vec<usize>,
    used: u64,
    current: Vec<bool>,
    best: Option<Vec<bool>>,
}

impl Search<'_> {
    fn column(&self, v: usize) -> Vec<bool> {
        self.order.iter().map(|&u| self.g.neighbors(v) & bit(u) != 0).collect()
    }

    /// Compares the current prefix with the best string so far.
    fn prefix_cmp(&self) -> std::cmp::Ordering {
        match &self.best {
            None => std::cmp::Ordering::Less,
            Some(best) => self.current.as_slice().cmp(&best[..self.current.len()]),
        }
    }

    fn run(&mut self) {
        let pos = self.order.len();
        if pos == self.g.n() {
            if self.prefix_cmp().is_lt() {
                self.best = Some(self.current.clone());
            }
            return;
        }
        // Only candidates producing the smallest next column can extend to
        // the minimum.
        let mut candidates: Vec<(Vec<bool>, usize)> = (0..self.g.n())
            .filter(|&v| self.used & bit(v) == 0 && self.g.vertex_degree(v) == self.degrees[pos])
            .map(|v| (self.column(v), v))
            .collect();
        let Some(min_col) = candidates.iter().map(|(c, _)| c.clone()).min() else {
            return;
        };
        candidates.retain(|(c, _)| *c == min_col);
        for (col, v) in candidates {
            let len = self.current.len();
            self.current.extend_from_slice(&col);
            if self.prefix_cmp().is_le() {
                self.order.push(v);
                self.used |= bit(v);
                self.run();
                self.used &= !bit(v);
                self.order.pop();
            }
            self.current.truncate(len);
        }
    }
}

fn canonical_bits(g: &Graph) -> Vec<bool> {
    let mut degrees: Vec<usize> = (0..g.n()).map(|v| g.vertex_degree(v)).collect();
    degrees.sort_unstable();
    let mut search =
        Search { g, degrees, order: Vec::new(), used: 0, current: Vec::new(), best: None };
    search.run();
    search.best.unwrap_or_default()
}

/// A commutative monomial of connected graphs: the sorted multiset of the
/// component keys of a graph. The empty monomial is the unit.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<CanonicalKey>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    /// Isoclass of `g`, as the multiset of its component keys.
    pub fn of_graph(g: &Graph) -> Self {
        let mut keys: Vec<CanonicalKey> = g
            .component_masks()
            .into_iter()
            .map(|m| canonical_key_any(&g.restrict_mask(m)))
            .collect();
        keys.sort();
        Monomial(keys)
    }

    pub fn from_keys(mut keys: Vec<CanonicalKey>) -> Self {
        keys.sort();
        Monomial(keys)
    }

    pub fn keys(&self) -> &[CanonicalKey] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    /// Representative graph: components in key order, concatenated.
    pub fn to_graph(&self) -> Graph {
        let mut adj = Vec::new();
        for key in &self.0 {
            let g = key.to_graph();
            let shift = adj.len();
            adj.extend(g.adjacency().iter().map(|r| r << shift));
        }
        Graph::from_adjacency(adj)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut keys = self.0.clone();
        keys.extend(other.0.iter().cloned());
        Monomial::from_keys(keys)
    }

    /// Image in the quotient by `K1 - 1`: single-vertex factors erased.
    pub fn strip_single_vertices(&self) -> Monomial {
        Monomial(self.0.iter().filter(|k| !k.is_single_vertex()).cloned().collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.0.iter().map(CanonicalKey::vertex_count).sum()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({})", self.to_graph())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_graph())
    }
}
