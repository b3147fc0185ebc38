//! Set partitions of `0..n`, stored as restricted-growth strings.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{bit, mask_iter};

/// A set partition of `0..n`.
///
/// Stored as a restricted-growth string: `labels[v]` is the index of the block
/// containing `v`, and blocks are numbered by their minimal elements. Two
/// partitions are equal iff their label vectors are, so the derived ordering
/// is a canonical total order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    labels: Vec<usize>,
}

impl Partition {
    /// The partition of the empty set.
    pub fn empty() -> Self {
        Partition { labels: Vec::new() }
    }

    /// All singletons (`~0`).
    pub fn singletons(n: usize) -> Self {
        Partition { labels: (0..n).collect() }
    }

    /// One block holding everything; the empty partition when `n == 0`.
    pub fn whole(n: usize) -> Self {
        Partition { labels: vec![0; n] }
    }

    /// Block `{a, b}` plus singletons.
    pub fn merge_pair(n: usize, a: usize, b: usize) -> Self {
        let labels = (0..n).map(|v| if v == a.max(b) { a.min(b) } else { v }).collect();
        Self::from_labels(labels)
    }

    /// Normalises an arbitrary block labelling (any values, equal value means
    /// same block) to canonical form.
    pub fn from_labels(labels: Vec<usize>) -> Self {
        let mut map = std::collections::HashMap::new();
        let canon = labels
            .iter()
            .map(|l| {
                let next = map.len();
                *map.entry(*l).or_insert(next)
            })
            .collect();
        Partition { labels: canon }
    }

    /// Builds a partition of `0..n` from explicit 0-based blocks. Blocks must
    /// be nonempty, disjoint and cover `0..n`; their order is irrelevant.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::MalformedPartition("empty block".into()));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::MalformedPartition(format!(
                        "element {v} outside 0..{n}"
                    )));
                }
                if labels[v] != usize::MAX {
                    return Err(Error::MalformedPartition(format!(
                        "element {v} appears twice"
                    )));
                }
                labels[v] = i;
            }
        }
        if let Some(v) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::MalformedPartition(format!("element {v} is not covered")));
        }
        Ok(Self::from_labels(labels))
    }

    pub(crate) fn from_masks_unchecked(n: usize, masks: &[u64]) -> Self {
        let mut labels = vec![0; n];
        for (i, &m) in masks.iter().enumerate() {
            for v in mask_iter(m) {
                labels[v] = i;
            }
        }
        Self::from_labels(labels)
    }

    /// Size of the underlying set.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Block index of each element.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// `cl(~)`, the number of blocks.
    pub fn block_count(&self) -> usize {
        self.labels.iter().max().map_or(0, |m| m + 1)
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.labels[v]
    }

    /// Blocks as bitmasks, ordered by minimal element.
    pub fn block_masks(&self) -> Vec<u64> {
        let mut masks = vec![0u64; self.block_count()];
        for (v, &l) in self.labels.iter().enumerate() {
            masks[l] |= bit(v);
        }
        masks
    }

    /// Blocks as sorted element lists, ordered by minimal element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (v, &l) in self.labels.iter().enumerate() {
            blocks[l].push(v);
        }
        blocks
    }

    /// `self <= other` in the refinement order: every block of `self` lies in
    /// a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let mut image = vec![usize::MAX; self.block_count()];
        for (v, &l) in self.labels.iter().enumerate() {
            let o = other.labels[v];
            if image[l] == usize::MAX {
                image[l] = o;
            } else if image[l] != o {
                return false;
            }
        }
        true
    }

    /// Restriction to the elements of `mask`, standardised onto `0..k`.
    pub fn restrict_pack(&self, mask: u64) -> Partition {
        let labels = mask_iter(mask).filter(|&v| v < self.len()).map(|v| self.labels[v]).collect();
        Self::from_labels(labels)
    }

    /// Concatenation: `other` is shifted past `self`.
    pub fn shifted_union(&self, other: &Partition) -> Partition {
        let k = self.block_count();
        let labels = self.labels.iter().copied().chain(other.labels.iter().map(|l| l + k)).collect();
        Partition { labels }
    }

    /// Union of the chosen blocks (bit `i` of `chosen` selects block `i`) as a
    /// vertex mask.
    pub fn union_of_blocks(&self, chosen: u64) -> u64 {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, &l)| chosen & bit(l) != 0)
            .fold(0, |acc, (v, _)| acc | bit(v))
    }
}

impl fmt::Display for Partition {
    /// 1-based block list, e.g. `{{1,3},{2}}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, block) in self.blocks().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let items: Vec<String> = block.iter().map(|v| (v + 1).to_string()).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

impl Serialize for Partition {
    /// Serialises as a list of 1-based blocks.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let blocks: Vec<Vec<usize>> = self
            .blocks()
            .into_iter()
            .map(|b| b.into_iter().map(|v| v + 1).collect())
            .collect();
        blocks.serialize(s)
    }
}

/// Enumerates every set partition of `0..n` in lexicographic order of
/// restricted-growth strings.
#[derive(Clone, Debug)]
pub struct SetPartitions {
    labels: Vec<usize>,
    done: bool,
}

impl SetPartitions {
    pub fn new(n: usize) -> Self {
        SetPartitions { labels: vec![0; n], done: false }
    }

    fn advance(&mut self) -> bool {
        let n = self.labels.len();
        // allowed[i] = max(labels[..i]) + 1
        let mut allowed = vec![0usize; n];
        let mut m = 0;
        for (i, (a, &l)) in allowed.iter_mut().zip(&self.labels).enumerate() {
            *a = if i == 0 { 0 } else { m + 1 };
            m = m.max(l);
        }
        for i in (0..n).rev() {
            if self.labels[i] < allowed[i] {
                self.labels[i] += 1;
                for l in &mut self.labels[i + 1..] {
                    *l = 0;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for SetPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let out = Partition { labels: self.labels.clone() };
        if !self.advance() {
            self.done = true;
        }
        Some(out)
    }
}
