//! Dense univariate polynomials over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::linear::{int, parse_rational, LinComb, Rational};

/// `a_0 + a_1 X + ... + a_d X^d` with `a_d != 0`, or the zero polynomial
/// (no coefficients).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

/// A polynomial in two variables, keyed by exponent pairs `(i, j)` of
/// `X^i Y^j`. This is `Q[X] ⊗ Q[X]`.
pub type BiPolynomial = LinComb<(usize, usize)>;

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `X`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `c X^d`.
    pub fn monomial(c: Rational, d: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = c;
        Self::new(coeffs)
    }

    /// `X(X-1)...(X-k+1)`.
    pub fn falling_factorial(k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, i| acc.mul(&Self::from_ints(&[-(i as i64), 1])))
    }

    /// The Hilbert polynomial `X(X-1)...(X-k+1)/k!`; `hilbert(0) = 1`.
    pub fn hilbert(k: usize) -> Self {
        let fact: BigInt = (1..=k).map(BigInt::from).product();
        Self::falling_factorial(k).scale(&Rational::from_integer(fact).recip())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `X^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, k: usize) -> Polynomial {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, q: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * q + c)
    }

    pub fn derivative(&self) -> Polynomial {
        Self::new(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * int(i as i64)).collect(),
        )
    }

    /// `P(X + Y)` expanded in the monomials `X^i Y^j`.
    pub fn compose_sum(&self) -> BiPolynomial {
        let mut out = BiPolynomial::zero();
        for (d, c) in self.coeffs.iter().enumerate() {
            let mut binom = BigInt::one();
            for i in 0..=d {
                out.add_term((i, d - i), c * Rational::from_integer(binom.clone()));
                binom = binom * BigInt::from(d - i) / BigInt::from(i + 1);
            }
        }
        out
    }

    /// `P(XY)` expanded in the monomials `X^i Y^j`.
    pub fn compose_prod(&self) -> BiPolynomial {
        self.coeffs.iter().enumerate().map(|(d, c)| ((d, d), c.clone())).collect()
    }

    /// `P ⊗ Q` as a two-variable polynomial `P(X) Q(Y)`.
    pub fn tensor(&self, other: &Polynomial) -> BiPolynomial {
        let mut out = BiPolynomial::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out.add_term((i, j), a * b);
            }
        }
        out
    }

    /// Pretty form, e.g. `X^3 - 3X^2 + 2X`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = abs.is_one() && i > 0;
            if !unit {
                out.push_str(&abs.to_string());
            }
            match i {
                0 => {}
                1 => out.push('X'),
                _ => out.push_str(&format!("X^{i}")),
            }
        }
        out
    }
}

/// Evaluates a two-variable polynomial at `(x, y)`.
pub fn eval_bivariate(p: &BiPolynomial, x: &Rational, y: &Rational) -> Rational {
    p.evaluate(|&(i, j)| num_traits::pow(x.clone(), i) * num_traits::pow(y.clone(), j))
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.pretty())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl Serialize for Polynomial {
    /// Coefficient array of rational strings; index = degree.
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        strings.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        let coeffs = strings
            .iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::rational;
    use proptest::prelude::*;

    #[test]
    fn coproducts_of_x() {
        let x = Polynomial::x();
        let expected: BiPolynomial = [((1, 0), int(1)), ((0, 1), int(1))].into_iter().collect();
        assert_eq!(x.compose_sum(), expected);
        assert_eq!(x.compose_prod(), BiPolynomial::term((1, 1), int(1)));
    }

    #[test]
    fn evaluation() {
        assert_eq!(Polynomial::falling_factorial(3).eval(&int(-1)), int(-6));
        assert_eq!(Polynomial::falling_factorial(3), Polynomial::from_ints(&[0, 2, -3, 1]));
    }

    #[test]
    fn hilbert_polynomials() {
        assert_eq!(Polynomial::hilbert(0), Polynomial::one());
        assert_eq!(Polynomial::hilbert(1), Polynomial::x());
        assert_eq!(
            Polynomial::hilbert(3),
            Polynomial::falling_factorial(3).scale(&rational(1, 6))
        );
        // H_k(m) = binom(m, k)
        assert_eq!(Polynomial::hilbert(2).eval(&int(5)), int(10));
    }

    #[test]
    fn pretty_and_json() {
        let p = Polynomial::from_ints(&[0, 2, -3, 1]);
        assert_eq!(p.pretty(), "X^3 - 3X^2 + 2X");
        assert_eq!(Polynomial::from_ints(&[-1, 0, -1]).pretty(), "-X^2 - 1");
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"["0","2","-3","1"]"#);
        let back: Polynomial = serde_json::from_str(r#"["0","1/2"]"#).unwrap();
        assert_eq!(back, Polynomial::monomial(rational(1, 2), 1));
        assert_eq!(serde_json::to_string(&Polynomial::zero()).unwrap(), "[]");
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(-6i64..6, 0..6).prop_map(|v| Polynomial::from_ints(&v))
    }

    proptest! {
        #[test]
        fn compose_sum_evaluates_at_sum(
            p in small_poly(), a in -9i64..9, b in 1i64..5, c in -9i64..9, d in 1i64..5
        ) {
            let (x, y) = (rational(a, b), rational(c, d));
            prop_assert_eq!(eval_bivariate(&p.compose_sum(), &x, &y), p.eval(&(&x + &y)));
            prop_assert_eq!(eval_bivariate(&p.compose_prod(), &x, &y), p.eval(&(&x * &y)));
        }

        #[test]
        fn multiplication_evaluates_pointwise(p in small_poly(), q in small_poly(), a in -9i64..9) {
            let x = int(a);
            prop_assert_eq!(p.mul(&q).eval(&x), p.eval(&x) * q.eval(&x));
        }
    }
}
