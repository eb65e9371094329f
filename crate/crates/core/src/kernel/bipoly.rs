//! Sparse bivariate polynomials in (lambda, z).
//!
//! Terms live in a BTreeMap keyed by exponent pairs; spectral polynomials are
//! sparse (their support sits inside the Newton parallelogram), so a dense
//! grid would waste most of its entries. No zero coefficient is ever stored.

use crate::error::{Error, Result};
use crate::kernel::rational::Rational;
use crate::kernel::Scalar;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// (deg_lambda, deg_z)
pub type Exponents = (u32, u32);

#[derive(Clone, PartialEq)]
pub struct BiPoly<S = Rational> {
    terms: BTreeMap<Exponents, S>,
}

impl<S: Scalar> BiPoly<S> {
    pub fn zero() -> Self {
        BiPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: S) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((0, 0), c);
        }
        BiPoly { terms }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn lambda() -> Self {
        Self::monomial(1, 0, S::one())
    }

    pub fn z() -> Self {
        Self::monomial(0, 1, S::one())
    }

    pub fn monomial(deg_lambda: u32, deg_z: u32, c: S) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((deg_lambda, deg_z), c);
        }
        BiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, deg_lambda: u32, deg_z: u32) -> S {
        self.terms
            .get(&(deg_lambda, deg_z))
            .cloned()
            .unwrap_or_else(S::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (Exponents, &S)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn deg_lambda(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn deg_z(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k, v.clone() * c.clone()))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    /// Multiplies by lambda^a z^b.
    pub fn shift_degrees(&self, a: u32, b: u32) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), v)| ((i + a, j + b), v.clone()))
                .collect(),
        }
    }

    /// lambda -> -lambda.
    pub fn negate_lambda(&self) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), v)| {
                    let c = if i % 2 == 1 { -v.clone() } else { v.clone() };
                    ((i, j), c)
                })
                .collect(),
        }
    }

    pub fn eval(&self, lambda: &S, z: &S) -> S {
        let mut acc = S::zero();
        for (&(i, j), c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..i {
                t = t * lambda.clone();
            }
            for _ in 0..j {
                t = t * z.clone();
            }
            acc = acc + t;
        }
        acc
    }

    fn leading(&self) -> Option<(Exponents, &S)> {
        self.terms.iter().next_back().map(|(k, v)| (*k, v))
    }

    fn insert_add(&mut self, key: Exponents, v: S) {
        match self.terms.remove(&key) {
            None => {
                if !v.is_zero() {
                    self.terms.insert(key, v);
                }
            }
            Some(old) => {
                let s = old + v;
                if !s.is_zero() {
                    self.terms.insert(key, s);
                }
            }
        }
    }

    /// Exact division in the polynomial ring; `Err(ExactDivisionFailure)` when
    /// the divisor does not divide. Leading-term reduction in lex order.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (dk, dc) = divisor
            .leading()
            .ok_or_else(|| Error::ExactDivisionFailure("division by zero polynomial".into()))?;
        let mut rem = self.clone();
        let mut quo = BiPoly::zero();
        while let Some((rk, rc)) = rem.leading() {
            if rk.0 < dk.0 || rk.1 < dk.1 {
                return Err(Error::ExactDivisionFailure(format!(
                    "leading term lambda^{} z^{} not divisible by lambda^{} z^{}",
                    rk.0, rk.1, dk.0, dk.1
                )));
            }
            let key = (rk.0 - dk.0, rk.1 - dk.1);
            let c = rc.clone() / dc.clone();
            let piece = BiPoly::monomial(key.0, key.1, c);
            rem = rem - piece.clone() * divisor.clone();
            quo = quo + piece;
        }
        Ok(quo)
    }
}

impl<S: Scalar> Add for BiPoly<S> {
    type Output = BiPoly<S>;
    fn add(self, rhs: BiPoly<S>) -> BiPoly<S> {
        let mut out = self;
        for (k, v) in rhs.terms {
            out.insert_add(k, v);
        }
        out
    }
}

impl<S: Scalar> Sub for BiPoly<S> {
    type Output = BiPoly<S>;
    fn sub(self, rhs: BiPoly<S>) -> BiPoly<S> {
        let mut out = self;
        for (k, v) in rhs.terms {
            out.insert_add(k, -v);
        }
        out
    }
}

impl<S: Scalar> Neg for BiPoly<S> {
    type Output = BiPoly<S>;
    fn neg(self) -> BiPoly<S> {
        BiPoly {
            terms: self.terms.into_iter().map(|(k, v)| (k, -v)).collect(),
        }
    }
}

impl<S: Scalar> Mul for BiPoly<S> {
    type Output = BiPoly<S>;
    fn mul(self, rhs: BiPoly<S>) -> BiPoly<S> {
        let mut out = BiPoly::zero();
        for (&(a, b), u) in &self.terms {
            for (&(c, d), v) in &rhs.terms {
                out.insert_add((a + c, b + d), u.clone() * v.clone());
            }
        }
        out
    }
}

impl<S: Scalar> Zero for BiPoly<S> {
    fn zero() -> Self {
        BiPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<S: Scalar> One for BiPoly<S> {
    fn one() -> Self {
        BiPoly::one()
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for BiPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            if i > 0 {
                write!(f, "*L^{i}")?;
            }
            if j > 0 {
                write!(f, "*z^{j}")?;
            }
        }
        Ok(())
    }
}

impl<S: Scalar + fmt::Display> fmt::Debug for BiPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn ring_ops_and_normalization() {
        let p = BiPoly::monomial(1, 0, q(1, 1)) + BiPoly::monomial(0, 1, q(2, 1));
        let m = p.clone() - p.clone();
        assert!(m.is_zero());
        assert_eq!(m.term_count(), 0);
        let sq = p.clone() * p;
        assert_eq!(sq.coeff(1, 1), q(4, 1));
        assert_eq!(sq.coeff(2, 0), q(1, 1));
        assert_eq!(sq.coeff(0, 2), q(4, 1));
    }

    #[test]
    fn exact_division() {
        // (1+z)^3 / (1+z)^2 = (1+z)
        let opz = BiPoly::<Rational>::one() + BiPoly::z();
        let n3 = opz.clone() * opz.clone() * opz.clone();
        let n2 = opz.clone() * opz.clone();
        assert_eq!(n3.div_exact(&n2).unwrap(), opz);
        // non-divisible
        let p = BiPoly::<Rational>::one() + BiPoly::lambda();
        assert!(p.div_exact(&BiPoly::z()).is_err());
    }

    #[test]
    fn negate_lambda_involution() {
        let p = BiPoly::monomial(3, 1, q(2, 3)) + BiPoly::monomial(2, 0, q(-1, 7)) + BiPoly::one();
        assert_eq!(p.negate_lambda().negate_lambda(), p);
        assert_eq!(p.negate_lambda().coeff(3, 1), q(-2, 3));
        assert_eq!(p.negate_lambda().coeff(2, 0), q(-1, 7));
    }
}
