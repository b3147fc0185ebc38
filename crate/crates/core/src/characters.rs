//! Characters of the contraction-extraction bialgebra and their action on
//! graph morphisms.
//!
//! A character is determined by its values on connected graphs and is
//! extended multiplicatively over components. Values are memoized per
//! canonical key, so a character is cheap to share between threads.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, LazyLock, RwLock};

use num_traits::{One, Zero};

use crate::bialgebra::HgrElement;
use crate::canon::{canonical_key, CanonicalKey, Monomial};
use crate::chromatic::pchr_partition;
use crate::error::{Error, Result};
use crate::forest::nested_forests;
use crate::graph::Graph;
use crate::linear::{sign, LinComb, Rational};
use crate::polynomial::Polynomial;

type ValueFn = dyn Fn(&Graph) -> Rational + Send + Sync;

enum Kind {
    Function(Box<ValueFn>),
    Convolution(Character, Character),
    Inverse(Character),
}

struct Inner {
    kind: Kind,
    memo: RwLock<HashMap<CanonicalKey, Rational>>,
}

/// A multiplicative map from graphs to the rationals with `λ(1) = 1`.
#[derive(Clone)]
pub struct Character(Arc<Inner>);

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.0.kind {
            Kind::Function(_) => "function",
            Kind::Convolution(..) => "convolution",
            Kind::Inverse(_) => "inverse",
        };
        write!(f, "Character({kind})")
    }
}

impl Character {
    fn with_kind(kind: Kind) -> Self {
        Character(Arc::new(Inner { kind, memo: RwLock::new(HashMap::new()) }))
    }

    /// The character whose value on a connected graph is `f` of it. `f` is
    /// only ever called on canonical representatives.
    pub fn from_fn(f: impl Fn(&Graph) -> Rational + Send + Sync + 'static) -> Self {
        Self::with_kind(Kind::Function(Box::new(f)))
    }

    /// `ε'`, the unit of the convolution monoid.
    pub fn counit() -> Self {
        Self::from_fn(|g| if g.n() == 1 { Rational::one() } else { Rational::zero() })
    }

    /// `λ0`, constant one on graphs.
    pub fn lambda_zero() -> Self {
        Self::from_fn(|_| Rational::one())
    }

    /// `λ_chr`, the linear coefficient of the chromatic polynomial.
    pub fn lambda_chr() -> Self {
        Self::from_fn(|g| lambda_chr(g, LambdaEngine::DeletionContraction))
    }

    /// `(-1)^deg λ_chr`.
    pub fn lambda_chr_tilde() -> Self {
        Self::from_fn(|g| sign(g.degree()) * lambda_chr(g, LambdaEngine::DeletionContraction))
    }

    /// Value on a connected graph.
    pub fn value_connected(&self, g: &Graph) -> Result<Rational> {
        Ok(self.value_key(&canonical_key(g)?))
    }

    /// Value on a connected isoclass.
    pub fn value_key(&self, key: &CanonicalKey) -> Rational {
        if let Some(v) = self.0.memo.read().expect("memo poisoned").get(key) {
            return v.clone();
        }
        let g = key.to_graph();
        let v = match &self.0.kind {
            Kind::Function(f) => f(&g),
            Kind::Convolution(l, m) => convolution_value(l, m, &g),
            Kind::Inverse(l) => inverse_value(l, self, &g),
        };
        self.0.memo.write().expect("memo poisoned").insert(key.clone(), v.clone());
        v
    }

    /// Value on an arbitrary graph: product over its components.
    pub fn eval_graph(&self, g: &Graph) -> Rational {
        g.component_masks()
            .into_iter()
            .map(|m| self.value_key(&canonical_key(&g.restrict_mask(m)).expect("component")))
            .product()
    }

    pub fn eval_monomial(&self, m: &Monomial) -> Rational {
        m.keys().iter().map(|k| self.value_key(k)).product()
    }

    /// Linear extension to the algebra.
    pub fn eval(&self, x: &HgrElement) -> Rational {
        x.evaluate(|m| self.eval_monomial(m))
    }

    /// `self * other`, dual to the contraction coproduct.
    pub fn convolve(&self, other: &Character) -> Character {
        Self::with_kind(Kind::Convolution(self.clone(), other.clone()))
    }

    /// The convolution inverse; exists iff `λ(K1) != 0`.
    pub fn invert(&self) -> Result<Character> {
        if self.eval_graph(&Graph::complete(1)).is_zero() {
            return Err(Error::NotInvertible);
        }
        Ok(Self::with_kind(Kind::Inverse(self.clone())))
    }
}

fn convolution_value(l: &Character, m: &Character, g: &Graph) -> Rational {
    g.admissible_partitions()
        .map(|p| l.eval_graph(&g.contract_unchecked(&p)) * m.eval_graph(&g.extract_unchecked(&p)))
        .sum()
}

// Solves `Σ_~ λ(G/~) ν(G|~) = ε'(G)` for `ν(G)`. The finest partition
// contributes `λ(G) ν(K1)^n` and the coarsest `λ(K1) ν(G)`; every other term
// only needs `ν` on strictly smaller connected graphs.
fn inverse_value(l: &Character, nu: &Character, g: &Graph) -> Rational {
    let n = g.n();
    let c = l.eval_graph(&Graph::complete(1));
    if n == 1 {
        return c.recip();
    }
    let mut rest = l.eval_graph(g) * num_traits::pow(c.recip(), n);
    for p in g.admissible_partitions() {
        let blocks = p.block_count();
        if blocks == 1 || blocks == n {
            continue;
        }
        rest += l.eval_graph(&g.contract_unchecked(&p)) * nu.eval_graph(&g.extract_unchecked(&p));
    }
    -rest / c
}

/// Independent routes to `λ_chr` on connected graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LambdaEngine {
    /// `P_chr'(0)`, from the independent-partition expansion.
    Derivative,
    /// Signed count of nested forests.
    Forest,
    /// Deletion-contraction with the bridge shortcut.
    DeletionContraction,
}

pub const LAMBDA_ENGINES: [LambdaEngine; 3] =
    [LambdaEngine::Derivative, LambdaEngine::Forest, LambdaEngine::DeletionContraction];

/// `λ_chr(G)`, multiplicative over components.
pub fn lambda_chr(g: &Graph, engine: LambdaEngine) -> Rational {
    g.component_masks()
        .into_iter()
        .map(|m| lambda_chr_connected(&g.restrict_mask(m), engine))
        .product()
}

fn lambda_chr_connected(g: &Graph, engine: LambdaEngine) -> Rational {
    match engine {
        LambdaEngine::Derivative => pchr_partition(g).coeff(1),
        LambdaEngine::Forest => {
            if g.n() == 1 {
                return Rational::one();
            }
            nested_forests(g).expect("connected").iter().map(|f| sign(f.len())).sum()
        }
        LambdaEngine::DeletionContraction => lambda_delcon(g),
    }
}

static DELCON_MEMO: LazyLock<RwLock<HashMap<CanonicalKey, Rational>>> =
    LazyLock::new(Default::default);

fn lambda_delcon(g: &Graph) -> Rational {
    let Some(&(a, b)) = g.edges().first() else {
        return Rational::one();
    };
    let key = canonical_key(g).expect("connected");
    if let Some(v) = DELCON_MEMO.read().expect("memo poisoned").get(&key) {
        return v.clone();
    }
    let contracted = lambda_delcon(&g.contract_edge(a, b).expect("edge"));
    // deleting a bridge disconnects, and the linear coefficient of a
    // disconnected graph vanishes
    let v = if g.is_bridge(a, b).expect("edge") {
        -contracted
    } else {
        lambda_delcon(&g.delete_edge(a, b).expect("edge")) - contracted
    };
    DELCON_MEMO.write().expect("memo poisoned").insert(key, v.clone());
    v
}

/// Something a graph morphism can land in: a rational vector space with the
/// operations the action needs.
pub trait Module: Clone {
    fn zero() -> Self;
    fn add_scaled(&mut self, other: &Self, c: &Rational);
}

impl Module for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }

    fn add_scaled(&mut self, other: &Self, c: &Rational) {
        *self = self.add(&other.scale(c));
    }
}

impl<B: Ord + Clone> Module for LinComb<B> {
    fn zero() -> Self {
        LinComb::zero()
    }

    fn add_scaled(&mut self, other: &Self, c: &Rational) {
        LinComb::add_scaled(self, other, c);
    }
}

/// A map from (indexed) graphs to an algebra `A`, given by its value on each
/// graph. Multiplicativity is a property of the particular map, not enforced.
pub struct GraphMorphism<A> {
    f: Arc<dyn Fn(&Graph) -> A + Send + Sync>,
}

impl<A> Clone for GraphMorphism<A> {
    fn clone(&self) -> Self {
        GraphMorphism { f: self.f.clone() }
    }
}

impl<A: Module + 'static> GraphMorphism<A> {
    pub fn new(f: impl Fn(&Graph) -> A + Send + Sync + 'static) -> Self {
        GraphMorphism { f: Arc::new(f) }
    }

    pub fn apply(&self, g: &Graph) -> A {
        (self.f)(g)
    }

    /// `φ ← λ = (φ ⊗ λ) ∘ δ`.
    pub fn act(&self, lambda: &Character) -> GraphMorphism<A> {
        let phi = self.clone();
        let lambda = lambda.clone();
        GraphMorphism::new(move |g| {
            let mut out = A::zero();
            for p in g.admissible_partitions() {
                let c = lambda.eval_graph(&g.extract_unchecked(&p));
                if !c.is_zero() {
                    out.add_scaled(&phi.apply(&g.contract_unchecked(&p)), &c);
                }
            }
            out
        })
    }
}
