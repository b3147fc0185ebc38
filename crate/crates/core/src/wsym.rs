//! Word symmetric functions: packed words, the `W` basis indexed by set
//! partitions, its product and coproduct, and the noncommutative chromatic
//! morphisms.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;
use serde::{Serialize, Serializer};

use crate::characters::{Character, GraphMorphism};
use crate::error::{Error, Result};
use crate::graph::{bit, Graph};
use crate::linear::{LinComb, Rational};
use crate::partition::{Partition, SetPartitions};
use crate::polynomial::Polynomial;

/// A word over `1..=k` using every letter of `1..=k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PackedWord(Vec<usize>);

impl PackedWord {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        let max = letters.iter().copied().max().unwrap_or(0);
        let mut seen = vec![false; max + 1];
        for &l in &letters {
            seen[l] = true;
        }
        if seen[0] || !seen[1..].iter().all(|&s| s) {
            return Err(Error::NotPacked(letters));
        }
        Ok(PackedWord(letters))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `max(w)`, the number of distinct letters.
    pub fn max(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }
}

impl fmt::Display for PackedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for PackedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PackedWord({self})")
    }
}

impl Serialize for PackedWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Element of WSym in the `W` basis.
pub type WSymElement = LinComb<Partition>;
/// A sum of packed words.
pub type WordElement = LinComb<PackedWord>;

/// Order-preserving relabelling of the letters onto `1..=k`.
pub fn pack(word: &[usize]) -> PackedWord {
    let mut distinct: Vec<usize> = word.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    PackedWord(word.iter().map(|l| distinct.binary_search(l).expect("present") + 1).collect())
}

/// The fibres of `w` as a set partition of its positions.
pub fn partition_of_word(w: &PackedWord) -> Partition {
    Partition::from_labels(w.0.clone())
}

/// All permutations of `0..k` in lexicographic order.
fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(k, used, cur, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(k, &mut vec![false; k], &mut Vec::new(), &mut out);
    out
}

/// The words with fibre partition `p`: one per labelling of its blocks.
fn words_of(p: &Partition) -> impl Iterator<Item = PackedWord> + '_ {
    permutations(p.block_count())
        .into_iter()
        .map(move |perm| PackedWord(p.labels().iter().map(|&b| perm[b] + 1).collect()))
}

/// `W_π` as a sum of packed words.
pub fn expand_w(p: &Partition) -> WordElement {
    words_of(p).map(|w| (w, Rational::one())).collect()
}

pub fn expand(x: &WSymElement) -> WordElement {
    x.flat_map(expand_w)
}

/// Inverse of [`expand`] on its image: `None` if the words are not constant
/// on fibre classes.
pub fn to_w_basis(x: &WordElement) -> Option<WSymElement> {
    let mut classes: BTreeMap<Partition, Vec<(&PackedWord, &Rational)>> = BTreeMap::new();
    for (w, c) in x {
        classes.entry(partition_of_word(w)).or_default().push((w, c));
    }
    let mut out = WSymElement::zero();
    for (p, words) in classes {
        let full = (1..=p.block_count()).product::<usize>();
        let c = words[0].1;
        if words.len() != full || words.iter().any(|(_, d)| *d != c) {
            return None;
        }
        out.add_term(p, c.clone());
    }
    Some(out)
}

/// `W_π W_π'`: the partitions of `[k + l]` whose standardized restrictions to
/// `[k]` and to the rest are `π` and `π'`.
///
/// Such a partition is `π ⊔ π'[+k]` with some blocks of `π` each merged with
/// a distinct block of `π'`, so it is enumerated by partial matchings.
pub fn wsym_product(p: &Partition, q: &Partition) -> WSymElement {
    let k = p.len();
    let left = p.block_masks();
    let right: Vec<u64> = q.block_masks().iter().map(|m| m << k).collect();
    let mut out = WSymElement::zero();
    let mut used = vec![false; right.len()];
    let mut merged = Vec::with_capacity(left.len() + right.len());
    match_blocks(&left, &right, &mut used, &mut merged, &mut |masks| {
        out.add_term(Partition::from_masks_unchecked(k + q.len(), masks), Rational::one());
    });
    out
}

fn match_blocks(
    left: &[u64],
    right: &[u64],
    used: &mut [bool],
    merged: &mut Vec<u64>,
    emit: &mut impl FnMut(&[u64]),
) {
    let Some((&a, rest)) = left.split_first() else {
        let start = merged.len();
        merged.extend(right.iter().zip(used.iter()).filter(|(_, &u)| !u).map(|(&m, _)| m));
        emit(merged);
        merged.truncate(start);
        return;
    };
    merged.push(a);
    match_blocks(rest, right, used, merged, emit);
    merged.pop();
    for j in 0..right.len() {
        if !used[j] {
            used[j] = true;
            merged.push(a | right[j]);
            match_blocks(rest, right, used, merged, emit);
            merged.pop();
            used[j] = false;
        }
    }
}

/// Bilinear extension of [`wsym_product`].
pub fn wsym_multiply(x: &WSymElement, y: &WSymElement) -> WSymElement {
    x.multiply_into(y, wsym_product)
}

/// `Δ(W_π) = Σ_{S ⊆ blocks} W_{std(S)} ⊗ W_{std(S^c)}`.
pub fn wsym_coproduct(p: &Partition) -> LinComb<(Partition, Partition)> {
    let blocks = p.block_count();
    let all = p.union_of_blocks(u64::MAX);
    (0..1u64 << blocks)
        .map(|chosen| {
            let mask = p.union_of_blocks(chosen);
            ((p.restrict_pack(mask), p.restrict_pack(all & !mask)), Rational::one())
        })
        .collect()
}

/// Linear extension of [`wsym_coproduct`].
pub fn wsym_coproduct_elem(x: &WSymElement) -> LinComb<(Partition, Partition)> {
    x.flat_map(wsym_coproduct)
}

/// `𝐏_chr(G) = Σ_{π ∈ IP(G)} W_π`.
pub fn pchr_nc(g: &Graph) -> WSymElement {
    g.independent_partitions().map(|p| (p, Rational::one())).collect()
}

/// `Φ0(G) = Σ_f w_f` over packed colourings `f`, where `w_f` is the word
/// `f` induces on `G/~_f` and `~_f` splits each fibre into its connected
/// components.
pub fn phi0_nc(g: &Graph) -> WordElement {
    let mut out = WordElement::zero();
    for fibres in SetPartitions::new(g.n()) {
        let masks = fibres.block_masks();
        let mut pieces = Vec::new();
        let mut colour_of_piece = Vec::new();
        for (b, &m) in masks.iter().enumerate() {
            for c in g.components_within(m) {
                pieces.push(c);
                colour_of_piece.push(b);
            }
        }
        let sim = Partition::from_masks_unchecked(g.n(), &pieces);
        // blocks of `sim` are numbered by minimal element
        let block_colour: Vec<usize> = sim
            .block_masks()
            .iter()
            .map(|&m| {
                let v = m.trailing_zeros() as usize;
                colour_of_piece[pieces.iter().position(|&c| c & bit(v) != 0).expect("covered")]
            })
            .collect();
        for perm in permutations(masks.len()) {
            let word = block_colour.iter().map(|&b| perm[b] + 1).collect();
            out.add_term(PackedWord(word), Rational::one());
        }
    }
    out
}

pub fn phi0_nc_morphism() -> GraphMorphism<WordElement> {
    GraphMorphism::new(phi0_nc)
}

/// `(Φ0 ← λ_chr)(G)`, computed in word space.
pub fn phi0_act_lambda_chr(g: &Graph) -> WordElement {
    phi0_nc_morphism().act(&Character::lambda_chr()).apply(g)
}

/// `H` on words: `w ↦ H_{max(w)}`.
pub fn hilbert_words(x: &WordElement) -> Polynomial {
    x.iter().fold(Polynomial::zero(), |acc, (w, c)| {
        acc.add(&Polynomial::hilbert(w.max()).scale(c))
    })
}

/// `H` on the `W` basis: `W_π ↦ k! H_k = X(X-1)...(X-k+1)`, the same map as
/// [`hilbert_words`] composed with [`expand`].
pub fn hilbert_w(x: &WSymElement) -> Polynomial {
    x.iter().fold(Polynomial::zero(), |acc, (p, c)| {
        acc.add(&Polynomial::falling_factorial(p.block_count()).scale(c))
    })
}
