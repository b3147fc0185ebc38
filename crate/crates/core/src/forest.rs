//! Nested forests of a connected graph: laminar families of connected vertex
//! sets containing the whole vertex set. They index the terms of the
//! antipode of the quotient bialgebra.

use crate::error::{Error, Result};
use crate::graph::{bit, full_mask, mask_iter, Graph};
use crate::partition::Partition;

/// A laminar family of connected vertex sets containing `0..n`. Members other
/// than the full set have at least two vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NestedForest {
    n: usize,
    // sorted; the full set is always present
    sets: Vec<u64>,
}

impl NestedForest {
    pub fn masks(&self) -> &[u64] {
        &self.sets
    }

    /// Members as sorted vertex lists.
    pub fn sets(&self) -> Vec<Vec<usize>> {
        self.sets.iter().map(|&m| mask_iter(m).collect()).collect()
    }

    /// `#F`, the number of members.
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// The maximal members strictly inside `set`.
    fn children(&self, set: u64) -> Vec<u64> {
        let inside: Vec<u64> =
            self.sets.iter().copied().filter(|&j| j != set && j & set == j).collect();
        inside
            .iter()
            .copied()
            .filter(|&j| !inside.iter().any(|&k| k != j && k & j == j))
            .collect()
    }
}

fn nested_or_disjoint(a: u64, b: u64) -> bool {
    a & b == 0 || a & b == a || a & b == b
}

/// All nested forests of a connected graph with at least one vertex.
pub fn nested_forests(g: &Graph) -> Result<Vec<NestedForest>> {
    if g.n() == 0 {
        return Err(Error::TooSmall(1));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let full = full_mask(g.n());
    let candidates: Vec<u64> = (1..full)
        .filter(|&m| m.count_ones() >= 2 && g.is_connected_mask(m))
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    extend(&candidates, 0, &mut chosen, &mut |sets| {
        let mut sets: Vec<u64> = sets.to_vec();
        sets.push(full);
        sets.sort_unstable();
        out.push(NestedForest { n: g.n(), sets });
    });
    Ok(out)
}

fn extend(candidates: &[u64], start: usize, chosen: &mut Vec<u64>, emit: &mut impl FnMut(&[u64])) {
    emit(chosen);
    for i in start..candidates.len() {
        let c = candidates[i];
        if chosen.iter().all(|&s| nested_or_disjoint(s, c)) {
            chosen.push(c);
            extend(candidates, i + 1, chosen, emit);
            chosen.pop();
        }
    }
}

/// The factors `(G|_I)/~_I` of `G_F`, one per member `I`, where the classes
/// of `~_I` are the maximal members strictly inside `I` plus singletons.
pub fn forest_evaluate(g: &Graph, forest: &NestedForest) -> Result<Vec<Graph>> {
    if forest.n != g.n() {
        return Err(Error::Domain(format!(
            "forest on {} vertices applied to a graph on {} vertices",
            forest.n,
            g.n()
        )));
    }
    let mut factors = Vec::with_capacity(forest.len());
    for &set in &forest.sets {
        let members: Vec<usize> = mask_iter(set).collect();
        let children = forest.children(set);
        let labels: Vec<usize> = members
            .iter()
            .map(|&v| {
                children
                    .iter()
                    .position(|&c| c & bit(v) != 0)
                    .unwrap_or(children.len() + v)
            })
            .collect();
        let local = Partition::from_labels(labels);
        factors.push(g.restrict_mask(set).contract(&local)?);
    }
    Ok(factors)
}
