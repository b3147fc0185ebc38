//! Exact rational scalars and finite formal linear combinations.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Renders `p/q`, or `p` when `q == 1`.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// Parses `p/q` or `p`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// `(-1)^k` as a rational.
pub fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// A finite linear combination of basis keys with nonzero rational
/// coefficients. Iteration follows the key order, so output is deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Rational>,
}

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element `b` with coefficient one.
    pub fn basis(b: B) -> Self {
        Self::term(b, Rational::one())
    }

    pub fn term(b: B, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
        out
    }

    /// Adds `c * b`, dropping the entry if it cancels.
    pub fn add_term(&mut self, b: B, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Adds `c * other` in place.
    pub fn add_scaled(&mut self, other: &LinComb<B>, c: &Rational) {
        for (b, x) in &other.terms {
            self.add_term(b.clone(), x * c);
        }
    }

    pub fn add(&self, other: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn scale(&self, c: &Rational) -> LinComb<B> {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb { terms: self.terms.iter().map(|(b, x)| (b.clone(), x * c)).collect() }
    }

    pub fn neg(&self) -> LinComb<B> {
        self.scale(&-Rational::one())
    }

    pub fn coefficient(&self, b: &B) -> Rational {
        self.terms.get(b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of basis elements with a nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, B, Rational> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> Rational {
        self.terms.values().sum()
    }

    /// Linear extension of a basis-level map.
    pub fn flat_map<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, x) in &self.terms {
            out.add_scaled(&f(b), x);
        }
        out
    }

    /// Linear extension of a map between bases.
    pub fn map_basis<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> C) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, x) in &self.terms {
            out.add_term(f(b), x.clone());
        }
        out
    }

    /// Linear functional: `sum c_b * f(b)`.
    pub fn evaluate(&self, mut f: impl FnMut(&B) -> Rational) -> Rational {
        self.terms.iter().map(|(b, x)| x * f(b)).sum()
    }

    /// Bilinear extension of a basis-level product.
    pub fn multiply<C: Ord + Clone, D: Ord + Clone>(
        &self,
        other: &LinComb<C>,
        mut product: impl FnMut(&B, &C) -> D,
    ) -> LinComb<D> {
        let mut out = LinComb::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(product(a, b), x * y);
            }
        }
        out
    }

    /// Bilinear extension of a product that itself yields a combination.
    pub fn multiply_into<C: Ord + Clone, D: Ord + Clone>(
        &self,
        other: &LinComb<C>,
        mut product: impl FnMut(&B, &C) -> LinComb<D>,
    ) -> LinComb<D> {
        let mut out = LinComb::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_scaled(&product(a, b), &(x * y));
            }
        }
        out
    }

    /// `self ⊗ other`.
    pub fn tensor<C: Ord + Clone>(&self, other: &LinComb<C>) -> LinComb<(B, C)> {
        self.multiply(other, |a, b| (a.clone(), b.clone()))
    }
}

impl<B: Ord + Clone> FromIterator<(B, Rational)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (B, Rational)>>(iter: I) -> Self {
        let mut out = LinComb::zero();
        for (b, c) in iter {
            out.add_term(b, c);
        }
        out
    }
}

impl<'a, B: Ord> IntoIterator for &'a LinComb<B> {
    type Item = (&'a B, &'a Rational);
    type IntoIter = btree_map::Iter<'a, B, Rational>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<B: Ord + fmt::Debug> fmt::Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·{b:?}")?;
        }
        Ok(())
    }
}
