//! The lattice `R(G)` of admissible partitions under refinement.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linear::{int, Rational};
use crate::partition::Partition;

/// `R(G)`, fully materialized: elements in restricted-growth order, the
/// refinement matrix, and ranks.
#[derive(Clone, Debug)]
pub struct AdmissibleLattice {
    graph: Graph,
    elements: Vec<Partition>,
    index: HashMap<Partition, usize>,
    leq: Vec<Vec<bool>>,
}

impl AdmissibleLattice {
    pub fn build(g: &Graph) -> Self {
        let elements: Vec<Partition> = g.admissible_partitions().collect();
        let index = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let leq = elements
            .iter()
            .map(|p| elements.iter().map(|q| p.refines(q)).collect())
            .collect();
        AdmissibleLattice { graph: g.clone(), elements, index, leq }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn elements(&self) -> &[Partition] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Index of an element, or a domain error if it is not admissible.
    pub fn index_of(&self, p: &Partition) -> Result<usize> {
        self.index.get(p).copied().ok_or(Error::NotAdmissible)
    }

    /// `~0`, the partition into singletons.
    pub fn bottom(&self) -> &Partition {
        self.elements.last().expect("nonempty")
    }

    /// `~1`, the partition into connected components.
    pub fn top(&self) -> Partition {
        self.graph.component_partition()
    }

    /// Refinement order on element indices.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    /// `|G| - cl(p)`.
    pub fn rank(&self, p: &Partition) -> usize {
        self.graph.n() - p.block_count()
    }

    /// Hasse diagram as index pairs `(lower, upper)`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let m = self.len();
        let mut out = Vec::new();
        for i in 0..m {
            for j in 0..m {
                if i != j
                    && self.leq[i][j]
                    && !(0..m).any(|r| r != i && r != j && self.leq[i][r] && self.leq[r][j])
                {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Greatest lower bound: connected components of pairwise block
    /// intersections.
    pub fn meet(&self, p: &Partition, q: &Partition) -> Result<Partition> {
        self.index_of(p)?;
        self.index_of(q)?;
        let mut masks = Vec::new();
        for a in p.block_masks() {
            for b in q.block_masks() {
                masks.extend(self.graph.components_within(a & b));
            }
        }
        Ok(Partition::from_masks_unchecked(self.graph.n(), &masks))
    }

    /// Least upper bound: transitive closure of the union of the relations.
    pub fn join(&self, p: &Partition, q: &Partition) -> Result<Partition> {
        self.index_of(p)?;
        self.index_of(q)?;
        let mut masks: Vec<u64> = p.block_masks();
        for b in q.block_masks() {
            let (touching, rest): (Vec<u64>, Vec<u64>) = masks.into_iter().partition(|&m| m & b != 0);
            masks = rest;
            masks.push(touching.into_iter().fold(b, |acc, m| acc | m));
        }
        Ok(Partition::from_masks_unchecked(self.graph.n(), &masks))
    }

    /// `μ_G(p, q)` by the defining recursion.
    pub fn mobius(&self, p: &Partition, q: &Partition) -> Result<Rational> {
        let (i, j) = (self.index_of(p)?, self.index_of(q)?);
        if !self.leq[i][j] {
            return Err(Error::NotComparable);
        }
        Ok(int(self.mobius_row(i)[j]))
    }

    /// `μ(~0, ~1)`.
    pub fn mobius_bottom_top(&self) -> Rational {
        self.mobius(self.bottom(), &self.top()).expect("bounds are comparable")
    }

    /// `μ(elements[i], r)` for every `r`, zero where incomparable.
    pub fn mobius_row(&self, i: usize) -> Vec<i64> {
        let m = self.len();
        // elements above i, sorted by rank so every predecessor is done first
        let mut above: Vec<usize> = (0..m).filter(|&r| self.leq[i][r]).collect();
        above.sort_by_key(|&r| self.rank(&self.elements[r]));
        let mut mu = vec![0i64; m];
        for &r in &above {
            mu[r] = if r == i {
                1
            } else {
                -above.iter().filter(|&&s| s != r && self.leq[s][r]).map(|&s| mu[s]).sum::<i64>()
            };
        }
        mu
    }

    /// The sub-lattice `[p, q]` as element indices.
    pub fn interval(&self, p: &Partition, q: &Partition) -> Result<Vec<usize>> {
        let (i, j) = (self.index_of(p)?, self.index_of(q)?);
        if !self.leq[i][j] {
            return Err(Error::NotComparable);
        }
        Ok((0..self.len()).filter(|&r| self.leq[i][r] && self.leq[r][j]).collect())
    }
}

/// `(G|q)/p`, whose lattice is isomorphic to the interval `[p, q]`.
pub fn interval_quotient(g: &Graph, p: &Partition, q: &Partition) -> Result<Graph> {
    if !g.is_admissible(p)? || !g.is_admissible(q)? {
        return Err(Error::NotAdmissible);
    }
    if !p.refines(q) {
        return Err(Error::NotComparable);
    }
    g.extract(q)?.contract(p)
}

/// `ζ_G(p)`: the edges inside the blocks of `p`.
pub fn zeta(g: &Graph, p: &Partition) -> Result<Vec<(usize, usize)>> {
    if !g.is_admissible(p)? {
        return Err(Error::NotAdmissible);
    }
    Ok(g.extract_unchecked(p).edges())
}

/// Whether `ζ_G` is onto the subsets of `E(G)`, i.e. `|R(G)| = 2^|E|`.
pub fn zeta_is_bijective(g: &Graph) -> bool {
    let size = g.admissible_partitions().count();
    let edges = g.edge_count();
    edges < 64 && size as u64 == 1u64 << edges
}

/// Serializable summary for the command line.
#[derive(Clone, Debug, Serialize)]
pub struct LatticeSummary {
    pub elements: Vec<Partition>,
    pub covers: Vec<(usize, usize)>,
    pub rank: Vec<usize>,
}

impl From<&AdmissibleLattice> for LatticeSummary {
    fn from(l: &AdmissibleLattice) -> Self {
        LatticeSummary {
            elements: l.elements.clone(),
            covers: l.covers(),
            rank: l.elements.iter().map(|p| l.rank(p)).collect(),
        }
    }
}
