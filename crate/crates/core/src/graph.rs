//! Indexed simple graphs and the structural operations the coproducts are
//! built from.
//!
//! Vertices are `0..n` in the Rust API. The text format (`"3: 1-2, 2-3"`) and
//! every JSON rendering are 1-based, matching the usual `[n]` convention.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{Partition, SetPartitions};

/// Largest supported vertex count; adjacency rows are `u64` bitmasks.
pub const MAX_VERTICES: usize = 64;

/// A simple graph on the vertex set `0..n`.
///
/// The derived ordering (vertex count first, then adjacency rows) is only a
/// total order for use as a basis key; it carries no graph-theoretic meaning.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in increasing order.
pub(crate) fn mask_iter(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// The empty graph, unit of both algebras.
    pub fn empty() -> Self {
        Graph { n: 0, adj: Vec::new() }
    }

    /// Builds a graph from 0-based edges. Loops and repeated edges are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::edgeless(n)?;
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            if g.has_edge(a, b) {
                return Err(Error::DuplicateEdge(a.min(b), a.max(b)));
            }
            g.insert_edge(a, b);
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        Graph { n: adj.len(), adj }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::edgeless(n).expect("complete graph too large");
        let all = full_mask(n);
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        g
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::edgeless(n).expect("path too large");
        for v in 1..n {
            g.insert_edge(v - 1, v);
        }
        g
    }

    /// The cycle on `n >= 3` vertices; smaller `n` gives the path.
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.insert_edge(0, n - 1);
        }
        g
    }

    /// Complete multipartite graph whose parts are the blocks of `p`: two
    /// vertices are adjacent iff they lie in different blocks.
    pub fn complete_multipartite(p: &Partition) -> Self {
        let n = p.len();
        let mut g = Self::complete(n);
        for block in p.block_masks() {
            for v in mask_iter(block) {
                g.adj[v] &= !block;
            }
        }
        g
    }

    pub(crate) fn insert_edge(&mut self, a: usize, b: usize) {
        self.adj[a] |= bit(b);
        self.adj[b] |= bit(a);
    }

    fn remove_edge(&mut self, a: usize, b: usize) {
        self.adj[a] &= !bit(b);
        self.adj[b] &= !bit(a);
    }

    /// Number of vertices, `|G|`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] & bit(b) != 0
    }

    /// Neighbourhood of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertex_degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges as `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in mask_iter(self.adj[a] & !full_mask(a + 1)) {
                out.push((a, b));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// True when the graph has no edge.
    pub fn is_totally_disconnected(&self) -> bool {
        self.adj.iter().all(|&r| r == 0)
    }

    /// Induced subgraph on `vertices`, relabelled by the increasing bijection
    /// onto `0..|vertices|`.
    pub fn restrict(&self, vertices: &[usize]) -> Result<Graph> {
        let mut mask = 0u64;
        for &v in vertices {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            mask |= bit(v);
        }
        Ok(self.restrict_mask(mask))
    }

    /// Induced subgraph on a vertex bitmask; bits beyond `n` are ignored.
    pub fn restrict_mask(&self, mask: u64) -> Graph {
        let mask = mask & self.vertex_mask();
        let verts: Vec<usize> = mask_iter(mask).collect();
        let mut pos = [0usize; MAX_VERTICES];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| mask_iter(self.adj[v] & mask).fold(0u64, |acc, w| acc | bit(pos[w])))
            .collect();
        Graph::from_adjacency(adj)
    }

    fn check_partition(&self, p: &Partition) -> Result<()> {
        if p.len() != self.n {
            return Err(Error::PartitionSizeMismatch { expected: self.n, got: p.len() });
        }
        Ok(())
    }

    /// Contraction `G/~`: one vertex per block (blocks ordered by minimal
    /// element), adjacent iff some edge of `G` joins the blocks.
    pub fn contract(&self, p: &Partition) -> Result<Graph> {
        self.check_partition(p)?;
        Ok(self.contract_unchecked(p))
    }

    pub(crate) fn contract_unchecked(&self, p: &Partition) -> Graph {
        let labels = p.labels();
        let mut adj = vec![0u64; p.block_count()];
        for (a, b) in self.edges() {
            let (la, lb) = (labels[a], labels[b]);
            if la != lb {
                adj[la] |= bit(lb);
                adj[lb] |= bit(la);
            }
        }
        Graph::from_adjacency(adj)
    }

    /// Extraction `G|~`: same vertices, only the edges inside blocks.
    pub fn extract(&self, p: &Partition) -> Result<Graph> {
        self.check_partition(p)?;
        Ok(self.extract_unchecked(p))
    }

    pub(crate) fn extract_unchecked(&self, p: &Partition) -> Graph {
        let masks = p.block_masks();
        let labels = p.labels();
        let adj = (0..self.n).map(|v| self.adj[v] & masks[labels[v]]).collect();
        Graph::from_adjacency(adj)
    }

    /// Whether the subgraph induced on `mask` is connected. The empty set
    /// counts as connected.
    pub fn is_connected_mask(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        self.reach(mask.trailing_zeros() as usize, mask) == mask
    }

    /// Vertices reachable from `start` inside `within`.
    fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in mask_iter(frontier) {
                next |= self.adj[v] & within;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Connected components of the subgraph induced on `mask`.
    pub(crate) fn components_within(&self, mask: u64) -> Vec<u64> {
        let mut left = mask;
        let mut out = Vec::new();
        while left != 0 {
            let c = self.reach(left.trailing_zeros() as usize, mask);
            out.push(c);
            left &= !c;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_mask(self.vertex_mask())
    }

    /// Every block induces a connected subgraph (`~ ◁ G`).
    pub fn is_admissible(&self, p: &Partition) -> Result<bool> {
        self.check_partition(p)?;
        Ok(p.block_masks().into_iter().all(|m| self.is_connected_mask(m)))
    }

    /// Every block is an independent set.
    pub fn is_independent_partition(&self, p: &Partition) -> Result<bool> {
        self.check_partition(p)?;
        Ok(p
            .block_masks()
            .into_iter()
            .all(|m| mask_iter(m).all(|v| self.adj[v] & m == 0)))
    }

    /// All admissible partitions, each once, in restricted-growth order.
    pub fn admissible_partitions(&self) -> impl Iterator<Item = Partition> + '_ {
        SetPartitions::new(self.n).filter(move |p| {
            p.block_masks().into_iter().all(|m| self.is_connected_mask(m))
        })
    }

    /// All partitions into independent sets (`IP(G)`).
    pub fn independent_partitions(&self) -> impl Iterator<Item = Partition> + '_ {
        SetPartitions::new(self.n)
            .filter(move |p| self.is_independent_partition(p).unwrap_or(false))
    }

    /// Connected components as vertex masks, ordered by minimal element.
    pub fn component_masks(&self) -> Vec<u64> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let c = self.reach(left.trailing_zeros() as usize, self.vertex_mask());
            out.push(c);
            left &= !c;
        }
        out
    }

    /// Connected components as sorted vertex lists, ordered by minimal element.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.component_masks().into_iter().map(|m| mask_iter(m).collect()).collect()
    }

    /// The partition into connected components (`~1`).
    pub fn component_partition(&self) -> Partition {
        Partition::from_masks_unchecked(self.n, &self.component_masks())
    }

    /// `cc(G)`.
    pub fn component_count(&self) -> usize {
        self.component_masks().len()
    }

    /// `deg(G) = |G| - cc(G)`, the grading of the contraction-extraction
    /// coproduct.
    pub fn degree(&self) -> usize {
        self.n - self.component_count()
    }

    /// Acyclic in the graph-theoretic sense.
    pub fn is_forest(&self) -> bool {
        self.edge_count() == self.degree()
    }

    fn check_edge(&self, a: usize, b: usize) -> Result<()> {
        if !self.has_edge(a, b) {
            return Err(Error::MissingEdge(a.min(b), a.max(b)));
        }
        Ok(())
    }

    /// `G \ e`.
    pub fn delete_edge(&self, a: usize, b: usize) -> Result<Graph> {
        self.check_edge(a, b)?;
        let mut g = self.clone();
        g.remove_edge(a, b);
        Ok(g)
    }

    /// `G / e`: contraction along the partition with block `e` and singletons.
    pub fn contract_edge(&self, a: usize, b: usize) -> Result<Graph> {
        self.check_edge(a, b)?;
        Ok(self.contract_unchecked(&Partition::merge_pair(self.n, a, b)))
    }

    /// Whether deleting `e` increases the number of connected components.
    pub fn is_bridge(&self, a: usize, b: usize) -> Result<bool> {
        self.check_edge(a, b)?;
        let mut g = self.clone();
        g.remove_edge(a, b);
        Ok(g.reach(a, g.vertex_mask()) & bit(b) == 0)
    }

    /// Indexed product: `other` is placed after `self`, its vertices shifted
    /// by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph::from_adjacency(adj))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Domain(format!(
                "permutation of length {} applied to a graph on {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(Error::Domain(format!("{perm:?} is not a permutation")));
            }
            seen |= bit(p);
        }
        let mut adj = vec![0u64; self.n];
        for (a, b) in self.edges() {
            adj[perm[a]] |= bit(perm[b]);
            adj[perm[b]] |= bit(perm[a]);
        }
        Ok(Graph::from_adjacency(adj))
    }

    /// Every graph on the same vertex set obtained by keeping a subset of the
    /// edges, encoded by the bits of `keep` over `self.edges()`.
    pub fn spanning_subgraph(&self, keep: u64) -> Graph {
        let mut g = Graph::edgeless(self.n).expect("same size");
        for (i, (a, b)) in self.edges().into_iter().enumerate() {
            if keep & bit(i) != 0 {
                g.insert_edge(a, b);
            }
        }
        g
    }
}

impl fmt::Display for Graph {
    /// Renders the 1-based text format, e.g. `3: 1-2, 2-3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n)?;
        for (i, (a, b)) in self.edges().into_iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{}-{}", a + 1, b + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({self})")
    }
}

impl FromStr for Graph {
    type Err = Error;

    /// Parses `n: i-j, k-l, ...` with 1-based vertices. Whitespace is
    /// insignificant; `0:` is the empty graph.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (head, tail) = compact
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("missing ':' in {s:?}")))?;
        let n: usize = head
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex count {head:?}")))?;
        let mut edges = Vec::new();
        if !tail.is_empty() {
            for item in tail.split(',') {
                let (a, b) = item
                    .split_once('-')
                    .ok_or_else(|| Error::Parse(format!("bad edge {item:?}")))?;
                let parse_vertex = |t: &str| -> Result<usize> {
                    let v: usize =
                        t.parse().map_err(|_| Error::Parse(format!("bad vertex {t:?}")))?;
                    if v == 0 || v > n {
                        return Err(Error::Parse(format!("vertex {v} outside 1..={n}")));
                    }
                    Ok(v - 1)
                };
                edges.push((parse_vertex(a)?, parse_vertex(b)?));
            }
        }
        Graph::from_edges(n, &edges).map_err(|e| match e {
            Error::Loop(v) => Error::Parse(format!("loop at vertex {}", v + 1)),
            Error::DuplicateEdge(a, b) => {
                Error::Parse(format!("duplicate edge {}-{}", a + 1, b + 1))
            }
            other => other,
        })
    }
}

/// An orientation of every edge of a graph, stored as directed arcs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl Orientation {
    /// Orients edge `i` of `g.edges()` from the smaller to the larger endpoint
    /// when bit `i` of `flips` is clear, and the other way when it is set.
    pub fn from_bits(g: &Graph, flips: u64) -> Self {
        let arcs = g
            .edges()
            .into_iter()
            .enumerate()
            .map(|(i, (a, b))| if flips & bit(i) == 0 { (a, b) } else { (b, a) })
            .collect();
        Orientation { n: g.n(), arcs }
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// No directed cycle; checked by repeatedly removing sources.
    pub fn is_acyclic(&self) -> bool {
        let mut out = vec![0u64; self.n];
        let mut indeg = vec![0usize; self.n];
        for &(a, b) in &self.arcs {
            out[a] |= bit(b);
            indeg[b] += 1;
        }
        let mut stack: Vec<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = stack.pop() {
            removed += 1;
            for w in mask_iter(out[v]) {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        removed == self.n
    }
}

/// All acyclic orientations of `g`, each exactly once.
pub fn acyclic_orientations(g: &Graph) -> impl Iterator<Item = Orientation> + '_ {
    let m = g.edge_count();
    assert!(m < 64, "too many edges to enumerate orientations");
    (0..(1u64 << m))
        .map(move |flips| Orientation::from_bits(g, flips))
        .filter(Orientation::is_acyclic)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> Graph {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let p3 = g("3: 1-2, 2-3");
        assert_eq!(p3.to_string(), "3: 1-2, 2-3");
        assert_eq!(g(" 3 :2- 3,1 -2 ").to_string(), "3: 1-2, 2-3");
        assert_eq!(g("0:"), Graph::empty());
        assert_eq!(g("0:").to_string(), "0:");
        assert!(matches!("2: 1-1".parse::<Graph>(), Err(Error::Parse(_))));
        assert!(matches!("2: 1-2, 2-1".parse::<Graph>(), Err(Error::Parse(_))));
        assert!(matches!("2: 1-3".parse::<Graph>(), Err(Error::Parse(_))));
        assert!(matches!("2 1-2".parse::<Graph>(), Err(Error::Parse(_))));
    }

    #[test]
    fn restrict_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.restrict(&[0, 1]).unwrap(), Graph::complete(2));
        let p3 = Graph::path(3);
        assert_eq!(p3.restrict(&[0, 2]).unwrap(), Graph::edgeless(2).unwrap());
        assert_eq!(p3.restrict(&[]).unwrap(), Graph::empty());
        assert!(matches!(p3.restrict(&[3]), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn contract_examples() {
        let k2 = Graph::complete(2);
        assert_eq!(k2.contract(&Partition::whole(2)).unwrap(), Graph::complete(1));
        let k3 = Graph::complete(3);
        let p = Partition::from_blocks(3, &[vec![0, 1], vec![2]]).unwrap();
        assert_eq!(k3.contract(&p).unwrap(), Graph::complete(2));
        let p3 = Graph::path(3);
        let q = Partition::from_blocks(3, &[vec![0, 2], vec![1]]).unwrap();
        assert_eq!(p3.contract(&q).unwrap(), Graph::complete(2));
        assert!(matches!(
            p3.contract(&Partition::whole(2)),
            Err(Error::PartitionSizeMismatch { .. })
        ));
    }

    #[test]
    fn extract_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.extract(&Partition::singletons(3)).unwrap(), Graph::edgeless(3).unwrap());
        assert_eq!(k3.extract(&Partition::whole(3)).unwrap(), k3);
        let p = Partition::from_blocks(3, &[vec![0, 1], vec![2]]).unwrap();
        assert_eq!(k3.extract(&p).unwrap(), Graph::from_edges(3, &[(0, 1)]).unwrap());
    }

    #[test]
    fn admissibility() {
        let k3 = Graph::complete(3);
        let p = Partition::from_blocks(3, &[vec![0, 1], vec![2]]).unwrap();
        assert!(k3.is_admissible(&p).unwrap());
        let p3 = Graph::path(3);
        let q = Partition::from_blocks(3, &[vec![0, 2], vec![1]]).unwrap();
        assert!(!p3.is_admissible(&q).unwrap());
        assert!(p3.is_admissible(&Partition::singletons(3)).unwrap());
        assert_eq!(Graph::complete(2).admissible_partitions().count(), 2);
        assert_eq!(k3.admissible_partitions().count(), 5);
        assert_eq!(Graph::edgeless(3).unwrap().admissible_partitions().count(), 1);
    }

    #[test]
    fn edge_surgery() {
        let k2 = Graph::complete(2);
        assert!(k2.is_bridge(0, 1).unwrap());
        let k3 = Graph::complete(3);
        for (a, b) in k3.edges() {
            assert!(!k3.is_bridge(a, b).unwrap());
        }
        assert_eq!(k3.contract_edge(0, 1).unwrap(), Graph::complete(2));
        assert_eq!(k3.delete_edge(0, 2).unwrap(), Graph::path(3));
        assert!(matches!(Graph::path(3).delete_edge(0, 2), Err(Error::MissingEdge(0, 2))));
        assert!(Graph::path(3).is_bridge(2, 0).is_err());
    }

    #[test]
    fn components_and_degree() {
        assert_eq!(Graph::edgeless(4).unwrap().degree(), 0);
        assert_eq!(Graph::complete(3).degree(), 2);
        let two_k2 = Graph::complete(2).disjoint_union(&Graph::complete(2)).unwrap();
        assert_eq!(two_k2.degree(), 2);
        assert_eq!(two_k2.connected_components(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(Graph::empty().degree(), 0);
        assert!(Graph::empty().connected_components().is_empty());
    }

    #[test]
    fn orientations() {
        assert_eq!(acyclic_orientations(&Graph::complete(2)).count(), 2);
        assert_eq!(acyclic_orientations(&Graph::complete(3)).count(), 6);
        assert_eq!(acyclic_orientations(&Graph::edgeless(3).unwrap()).count(), 1);
        assert_eq!(acyclic_orientations(&Graph::empty()).count(), 1);
    }

    #[test]
    fn multipartite() {
        let p = Partition::from_blocks(3, &[vec![0, 2], vec![1]]).unwrap();
        assert_eq!(Graph::complete_multipartite(&p), Graph::path(3));
    }
}
