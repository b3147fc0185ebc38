//! The chromatic polynomial by three independent routes, brute-force colouring
//! counts, and the two counting interpretations of its values at negative
//! integers.

use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use num_traits::One;

use crate::canon::{canonical_key, CanonicalKey};
use crate::characters::{lambda_chr, GraphMorphism, LambdaEngine};
use crate::error::{Error, Result};
use crate::graph::{acyclic_orientations, Graph};
use crate::linear::Rational;
use crate::polynomial::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChromaticEngine {
    /// Sum of falling factorials over partitions into independent sets.
    Partition,
    /// Deletion-contraction, memoized on isoclasses.
    DeletionContraction,
    /// `Σ_~ λ_chr(G|~) X^cl(~)` over admissible partitions.
    Character,
}

pub const CHROMATIC_ENGINES: [ChromaticEngine; 3] =
    [ChromaticEngine::Partition, ChromaticEngine::DeletionContraction, ChromaticEngine::Character];

pub fn chromatic(g: &Graph, engine: ChromaticEngine) -> Polynomial {
    match engine {
        ChromaticEngine::Partition => pchr_partition(g),
        ChromaticEngine::DeletionContraction => pchr_deletion_contraction(g),
        ChromaticEngine::Character => pchr_character_formula(g),
    }
}

/// `Σ_{π ∈ IP(G)} X(X-1)...(X-|π|+1)`.
pub fn pchr_partition(g: &Graph) -> Polynomial {
    let mut counts = vec![0i64; g.n() + 1];
    for p in g.independent_partitions() {
        counts[p.block_count()] += 1;
    }
    counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .fold(Polynomial::zero(), |acc, (k, &c)| {
            acc.add(&Polynomial::falling_factorial(k).scale(&Rational::from_integer(c.into())))
        })
}

static DELCON_MEMO: LazyLock<RwLock<HashMap<CanonicalKey, Polynomial>>> =
    LazyLock::new(Default::default);

/// `P(G) = P(G \ e) - P(G / e)` on the smallest edge, after splitting into
/// components.
pub fn pchr_deletion_contraction(g: &Graph) -> Polynomial {
    g.component_masks()
        .into_iter()
        .fold(Polynomial::one(), |acc, m| acc.mul(&delcon_connected(&g.restrict_mask(m))))
}

fn delcon_connected(g: &Graph) -> Polynomial {
    let Some(&(a, b)) = g.edges().first() else {
        return Polynomial::x();
    };
    let key = canonical_key(g).expect("connected");
    if let Some(p) = DELCON_MEMO.read().expect("memo poisoned").get(&key) {
        return p.clone();
    }
    let deleted = pchr_deletion_contraction(&g.delete_edge(a, b).expect("edge"));
    let contracted = delcon_connected(&g.contract_edge(a, b).expect("edge"));
    let p = deleted.sub(&contracted);
    DELCON_MEMO.write().expect("memo poisoned").insert(key, p.clone());
    p
}

/// `Σ_{~ ◁ G} λ_chr(G|~) X^cl(~)`.
pub fn pchr_character_formula(g: &Graph) -> Polynomial {
    g.admissible_partitions().fold(Polynomial::zero(), |acc, p| {
        let c = lambda_chr(&g.extract_unchecked(&p), LambdaEngine::DeletionContraction);
        acc.add(&Polynomial::monomial(c, p.block_count()))
    })
}

/// `φ0(G) = X^|G|`.
pub fn phi_zero(g: &Graph) -> Polynomial {
    Polynomial::monomial(Rational::one(), g.n())
}

pub fn phi_zero_morphism() -> GraphMorphism<Polynomial> {
    GraphMorphism::new(phi_zero)
}

/// `P_chr` as a graph morphism.
pub fn pchr_morphism() -> GraphMorphism<Polynomial> {
    GraphMorphism::new(pchr_deletion_contraction)
}

/// Calls `f` with every map `0..n -> 0..k`.
fn for_each_coloring(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k == 0 {
        if n == 0 {
            f(&[]);
        }
        return;
    }
    let mut col = vec![0usize; n];
    loop {
        f(&col);
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            col[i] += 1;
            if col[i] < k {
                break;
            }
            col[i] = 0;
            i += 1;
        }
    }
}

/// Number of proper colourings with `k` colours, by exhaustion.
pub fn count_valid_colorings(g: &Graph, k: usize) -> u64 {
    let edges = g.edges();
    let mut count = 0;
    for_each_coloring(g.n(), k, |col| {
        if edges.iter().all(|&(a, b)| col[a] != col[b]) {
            count += 1;
        }
    });
    count
}

fn acyclic_count(g: &Graph) -> u64 {
    acyclic_orientations(g).count() as u64
}

/// Number of families `((I_1..I_k), O_1..O_k)` with `V = I_1 ⊔ ... ⊔ I_k`
/// (blocks may be empty) and `O_i` an acyclic orientation of `G|_{I_i}`.
pub fn stanley_families(g: &Graph, k: usize) -> Result<u64> {
    if k < 1 {
        return Err(Error::Domain("k must be at least 1".into()));
    }
    let mut by_mask: HashMap<u64, u64> = HashMap::new();
    let mut total = 0;
    for_each_coloring(g.n(), k, |col| {
        let mut masks = vec![0u64; k];
        for (v, &c) in col.iter().enumerate() {
            masks[c] |= 1 << v;
        }
        total += masks
            .iter()
            .map(|&m| *by_mask.entry(m).or_insert_with(|| acyclic_count(&g.restrict_mask(m))))
            .product::<u64>();
    });
    Ok(total)
}

/// Number of pairs `(f, O)` with `f: V -> [k]`, `O` an acyclic orientation,
/// and `f(x) <= f(y)` for every arc `x -> y` of `O`.
pub fn stanley_pairs(g: &Graph, k: usize) -> Result<u64> {
    if k < 1 {
        return Err(Error::Domain("k must be at least 1".into()));
    }
    let mut total = 0;
    for o in acyclic_orientations(g) {
        for_each_coloring(g.n(), k, |col| {
            if o.arcs().iter().all(|&(x, y)| col[x] <= col[y]) {
                total += 1;
            }
        });
    }
    Ok(total)
}
