//! Exact forward-mode differentiation.
//!
//! A `Jet` carries a value and its gradient with respect to a fixed ambient
//! coordinate system. Constants are stored with an empty gradient and
//! broadcast against full-length gradients, which makes `Jet` a lawful ring
//! (`Zero`/`One` need no dimension). All arithmetic is exact: the product and
//! quotient rules are applied over `Rational`.

use crate::error::{Error, Result};
use crate::kernel::rational::Rational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, PartialEq)]
pub struct Jet {
    value: Rational,
    grad: Vec<Rational>,
}

impl Jet {
    pub fn constant(value: Rational) -> Self {
        Jet { value, grad: Vec::new() }
    }

    /// The `idx`-th coordinate (0-based) of an `dim`-dimensional system,
    /// seeded with unit gradient.
    pub fn variable(dim: usize, idx: usize, value: Rational) -> Self {
        assert!(idx < dim);
        let mut grad = vec![Rational::zero(); dim];
        grad[idx] = Rational::one();
        Jet { value, grad }
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    /// Gradient component; constants read as zero in every direction.
    pub fn deriv(&self, idx: usize) -> Rational {
        self.grad.get(idx).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn grad_len(&self) -> usize {
        self.grad.len()
    }

    pub fn try_div(&self, rhs: &Jet) -> Result<Jet> {
        if rhs.value.is_zero() {
            return Err(Error::Pole);
        }
        let value = &self.value / &rhs.value;
        let den_sq = &rhs.value * &rhs.value;
        let grad = broadcast(&self.grad, &rhs.grad, |a, b| {
            &(&(a * &rhs.value) - &(&self.value * b)) / &den_sq
        });
        Ok(Jet { value, grad })
    }

    pub fn try_inv(&self) -> Result<Jet> {
        Jet::constant(Rational::one()).try_div(self)
    }
}

fn broadcast<F>(a: &[Rational], b: &[Rational], f: F) -> Vec<Rational>
where
    F: Fn(&Rational, &Rational) -> Rational,
{
    let n = a.len().max(b.len());
    debug_assert!(
        a.is_empty() || b.is_empty() || a.len() == b.len(),
        "mixed gradient dimensions {} vs {}",
        a.len(),
        b.len()
    );
    let zero = Rational::zero();
    (0..n)
        .map(|i| f(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect()
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, rhs: Jet) -> Jet {
        Jet {
            value: self.value.clone() + rhs.value.clone(),
            grad: broadcast(&self.grad, &rhs.grad, |a, b| a + b),
        }
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, rhs: Jet) -> Jet {
        Jet {
            value: self.value.clone() - rhs.value.clone(),
            grad: broadcast(&self.grad, &rhs.grad, |a, b| a - b),
        }
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, rhs: Jet) -> Jet {
        Jet {
            value: &self.value * &rhs.value,
            grad: broadcast(&self.grad, &rhs.grad, |a, b| {
                &(a * &rhs.value) + &(&self.value * b)
            }),
        }
    }
}

impl Div for Jet {
    type Output = Jet;
    fn div(self, rhs: Jet) -> Jet {
        self.try_div(&rhs).expect("jet division by zero value")
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet {
            value: -self.value,
            grad: self.grad.into_iter().map(|g| -g).collect(),
        }
    }
}

impl Zero for Jet {
    fn zero() -> Self {
        Jet::constant(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.value.is_zero() && self.grad.iter().all(Rational::is_zero)
    }
}

impl One for Jet {
    fn one() -> Self {
        Jet::constant(Rational::one())
    }
}

impl fmt::Debug for Jet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{:?}", self.value, self.grad)
    }
}

/// Evaluates a rational expression together with its exact gradient at
/// `point`. The expression sees one `Jet` per coordinate; a division by a
/// zero value inside surfaces as `Error::Pole`.
pub fn jet_eval<F>(f: F, point: &[Rational]) -> Result<Jet>
where
    F: FnOnce(&[Jet]) -> Result<Jet>,
{
    let dim = point.len();
    let vars: Vec<Jet> = point
        .iter()
        .enumerate()
        .map(|(i, v)| Jet::variable(dim, i, v.clone()))
        .collect();
    f(&vars)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn product_rule() {
        // f = u*v at (2,3) -> value 6, gradient (3,2)
        let j = jet_eval(|v| Ok(v[0].clone() * v[1].clone()), &[q(2, 1), q(3, 1)]).unwrap();
        assert_eq!(*j.value(), q(6, 1));
        assert_eq!(j.deriv(0), q(3, 1));
        assert_eq!(j.deriv(1), q(2, 1));
    }

    #[test]
    fn quotient_rule() {
        // f = 1/u at (2) -> value 1/2, gradient (-1/4)
        let j = jet_eval(|v| v[0].try_inv(), &[q(2, 1)]).unwrap();
        assert_eq!(*j.value(), q(1, 2));
        assert_eq!(j.deriv(0), q(-1, 4));
    }

    #[test]
    fn pole_detected() {
        let e = jet_eval(|v| v[0].try_inv(), &[q(0, 1)]);
        assert_eq!(e.unwrap_err(), Error::Pole);
    }

    #[test]
    fn chain_rule_against_composition() {
        // g(u,v,w) = (u + v*w), f(t) = t^2 / (t - 1); compare jet of f(g)
        // against the chain rule df(g) * grad g at a rational point.
        let pt = [q(1, 2), q(3, 1), q(5, 7)];
        let g = |v: &[Jet]| Ok(v[0].clone() + v[1].clone() * v[2].clone());
        let f = |t: Jet| {
            let one = Jet::constant(Rational::one());
            (t.clone() * t.clone()).try_div(&(t - one))
        };
        let composed = jet_eval(|v| f(g(v)?), &pt).unwrap();

        let inner = jet_eval(g, &pt).unwrap();
        // df/dt at inner value, computed with a 1-d jet
        let df = jet_eval(|v| f(v[0].clone()), &[inner.value().clone()]).unwrap();
        for i in 0..3 {
            assert_eq!(composed.deriv(i), &df.deriv(0) * &inner.deriv(i));
        }
        assert_eq!(composed.value(), df.value());
    }
}
