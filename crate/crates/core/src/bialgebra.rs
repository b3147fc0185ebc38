//! The restriction coproduct `Δ` and the contraction-extraction coproduct `δ`
//! on graphs, their counits, the antipode of the quotient by `K1 - 1`, and
//! the cointeraction between the two.
//!
//! Everything is generic over [`GraphBasis`], which has two instances:
//! [`Monomial`] (isomorphism classes; the commutative algebra) and [`Graph`]
//! (indexed graphs; the noncommutative algebra where the product shifts the
//! second factor's labels).

use std::collections::HashMap;
use std::fmt::Debug;
use std::sync::{LazyLock, RwLock};

use num_traits::One;

use crate::canon::{canonical_key, CanonicalKey, Monomial};
use crate::error::{Error, Result};
use crate::forest::{forest_evaluate, nested_forests};
use crate::graph::Graph;
use crate::linear::{sign, LinComb, Rational};

/// Basis of a graph algebra: something a graph can be turned into and back,
/// with a product and a unit.
pub trait GraphBasis: Ord + Clone + Debug {
    fn from_graph(g: &Graph) -> Self;
    fn to_graph(&self) -> Graph;
    fn unit() -> Self;
    fn mul(&self, other: &Self) -> Self;
}

impl GraphBasis for Graph {
    fn from_graph(g: &Graph) -> Self {
        g.clone()
    }

    fn to_graph(&self) -> Graph {
        self.clone()
    }

    fn unit() -> Self {
        Graph::empty()
    }

    fn mul(&self, other: &Self) -> Self {
        self.disjoint_union(other).expect("product exceeds the vertex limit")
    }
}

impl GraphBasis for Monomial {
    fn from_graph(g: &Graph) -> Self {
        Monomial::of_graph(g)
    }

    fn to_graph(&self) -> Graph {
        Monomial::to_graph(self)
    }

    fn unit() -> Self {
        Monomial::unit()
    }

    fn mul(&self, other: &Self) -> Self {
        Monomial::mul(self, other)
    }
}

/// Element of the commutative algebra of isoclasses.
pub type HgrElement = LinComb<Monomial>;
/// Element of the noncommutative algebra of indexed graphs.
pub type IndexedElement = LinComb<Graph>;
pub type Tensor2<B> = LinComb<(B, B)>;
pub type Tensor3<B> = LinComb<(B, B, B)>;

/// Basis element of the commutative algebra for `g`.
pub fn isoclass(g: &Graph) -> HgrElement {
    HgrElement::basis(Monomial::of_graph(g))
}

/// `Δ(G) = Σ_{V = I ⊔ J} G|_I ⊗ G|_J` over ordered bipartitions.
pub fn restriction_coproduct_graph<B: GraphBasis>(g: &Graph) -> Tensor2<B> {
    let full = g.vertex_mask();
    let mut out = Tensor2::zero();
    for left in 0..=full {
        if left & !full != 0 {
            continue;
        }
        let pair = (B::from_graph(&g.restrict_mask(left)), B::from_graph(&g.restrict_mask(full & !left)));
        out.add_term(pair, Rational::one());
    }
    out
}

/// Linear extension of [`restriction_coproduct_graph`].
pub fn restriction_coproduct<B: GraphBasis>(x: &LinComb<B>) -> Tensor2<B> {
    x.flat_map(|b| restriction_coproduct_graph(&b.to_graph()))
}

/// `δ(G) = Σ_{~ ◁ G} G/~ ⊗ G|~` over admissible partitions.
pub fn contraction_coproduct_graph<B: GraphBasis>(g: &Graph) -> Tensor2<B> {
    g.admissible_partitions()
        .map(|p| {
            let pair = (B::from_graph(&g.contract_unchecked(&p)), B::from_graph(&g.extract_unchecked(&p)));
            (pair, Rational::one())
        })
        .collect()
}

/// Linear extension of [`contraction_coproduct_graph`].
pub fn contraction_coproduct<B: GraphBasis>(x: &LinComb<B>) -> Tensor2<B> {
    x.flat_map(|b| contraction_coproduct_graph(&b.to_graph()))
}

/// `ε`: coefficient of the empty graph.
pub fn restriction_counit<B: GraphBasis>(x: &LinComb<B>) -> Rational {
    x.coefficient(&B::unit())
}

/// `ε'`: one on totally disconnected graphs, zero elsewhere.
pub fn contraction_counit<B: GraphBasis>(x: &LinComb<B>) -> Rational {
    x.evaluate(|b| {
        if b.to_graph().is_totally_disconnected() {
            Rational::one()
        } else {
            Rational::from_integer(0.into())
        }
    })
}

/// `(f ⊗ Id)` applied to a tensor square.
pub fn apply_left<B: GraphBasis>(t: &Tensor2<B>, mut f: impl FnMut(&B) -> Tensor2<B>) -> Tensor3<B> {
    t.flat_map(|(a, b)| f(a).map_basis(|(a1, a2)| (a1.clone(), a2.clone(), b.clone())))
}

/// `(Id ⊗ f)` applied to a tensor square.
pub fn apply_right<B: GraphBasis>(t: &Tensor2<B>, mut f: impl FnMut(&B) -> Tensor2<B>) -> Tensor3<B> {
    t.flat_map(|(a, b)| f(b).map_basis(|(b1, b2)| (a.clone(), b1.clone(), b2.clone())))
}

/// `m^3_{2,4} ∘ (δ ⊗ δ) ∘ Δ`.
pub fn cointeraction_lhs<B: GraphBasis>(x: &LinComb<B>) -> Tensor3<B> {
    restriction_coproduct(x).flat_map(|(a, b)| {
        let da: Tensor2<B> = contraction_coproduct_graph(&a.to_graph());
        let db: Tensor2<B> = contraction_coproduct_graph(&b.to_graph());
        da.multiply(&db, |(a1, a2), (b1, b2)| (a1.clone(), b1.clone(), a2.mul(b2)))
    })
}

/// `(Δ ⊗ Id) ∘ δ`.
pub fn cointeraction_rhs<B: GraphBasis>(x: &LinComb<B>) -> Tensor3<B> {
    apply_left(&contraction_coproduct(x), |a| restriction_coproduct_graph(&a.to_graph()))
}

/// `ϖ`: each indexed graph to its isoclass.
pub fn projection(x: &IndexedElement) -> HgrElement {
    x.map_basis(Monomial::of_graph)
}

/// `ρ = (Id ⊗ ϖ) ∘ δ`, the coaction of the commutative contraction bialgebra
/// on indexed graphs.
pub fn coaction(x: &IndexedElement) -> LinComb<(Graph, Monomial)> {
    contraction_coproduct(x).map_basis(|(a, b)| (a.clone(), Monomial::of_graph(b)))
}

/// Image in the quotient by `K1 - 1`.
pub fn to_quotient(x: &HgrElement) -> HgrElement {
    x.map_basis(Monomial::strip_single_vertices)
}

fn check_antipode_input(g: &Graph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::TooSmall(2));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    Ok(())
}

/// Antipode of a connected graph with at least two vertices, as a signed sum
/// over its nested forests. The result lives in the quotient: single-vertex
/// factors are erased.
pub fn antipode_forest(g: &Graph) -> Result<HgrElement> {
    check_antipode_input(g)?;
    let mut out = HgrElement::zero();
    for forest in nested_forests(g)? {
        let factors = forest_evaluate(g, &forest)?;
        let mono = factors
            .iter()
            .map(Monomial::of_graph)
            .fold(Monomial::unit(), |acc, m| acc.mul(&m))
            .strip_single_vertices();
        out.add_term(mono, sign(forest.len()));
    }
    Ok(out)
}

static ANTIPODE_MEMO: LazyLock<RwLock<HashMap<CanonicalKey, HgrElement>>> =
    LazyLock::new(Default::default);

/// Antipode by the recursion `S'(G) = -G - Σ (G/~) S'(G|~)` over admissible
/// partitions other than the two trivial ones.
pub fn antipode_recursive(g: &Graph) -> Result<HgrElement> {
    check_antipode_input(g)?;
    Ok(antipode_connected(g))
}

fn antipode_connected(g: &Graph) -> HgrElement {
    if g.n() < 2 {
        return HgrElement::basis(Monomial::unit());
    }
    let key = canonical_key(g).expect("connected");
    if let Some(hit) = ANTIPODE_MEMO.read().expect("memo poisoned").get(&key) {
        return hit.clone();
    }
    let g = key.to_graph();
    let n = g.n();
    let mut out = HgrElement::term(Monomial::of_graph(&g), -Rational::one());
    for p in g.admissible_partitions() {
        let blocks = p.block_count();
        if blocks == 1 || blocks == n {
            continue;
        }
        let quotient = Monomial::of_graph(&g.contract_unchecked(&p));
        let mut term = HgrElement::basis(quotient);
        for block in p.block_masks() {
            if block.count_ones() >= 2 {
                let s = antipode_connected(&g.restrict_mask(block));
                term = term.multiply(&s, Monomial::mul);
            }
        }
        out.add_scaled(&term, &-Rational::one());
    }
    ANTIPODE_MEMO.write().expect("memo poisoned").insert(key, out.clone());
    out
}

/// Multiplicative extension of the antipode to the quotient algebra:
/// `S'(1) = 1`, single vertices map to 1.
pub fn antipode(x: &HgrElement) -> HgrElement {
    x.flat_map(|m| {
        m.keys().iter().fold(HgrElement::basis(Monomial::unit()), |acc, key| {
            acc.multiply(&antipode_connected(&key.to_graph()), Monomial::mul)
        })
    })
}

/// `m ∘ (S' ⊗ Id) ∘ δ` in the quotient.
pub fn antipode_convolution(x: &HgrElement) -> HgrElement {
    let q = to_quotient(x);
    contraction_coproduct(&q).flat_map(|(a, b)| {
        let sa = antipode(&HgrElement::basis(a.strip_single_vertices()));
        to_quotient(&sa.multiply(&HgrElement::basis(b.clone()), Monomial::mul))
    })
}
