//! Matrices over the bivariate polynomial ring, with exact determinants.

use crate::error::{Error, Result};
use crate::kernel::bipoly::BiPoly;
use crate::kernel::rational::Rational;
use crate::kernel::Scalar;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq)]
pub struct PolyMatrix<S = Rational> {
    rows: usize,
    cols: usize,
    entries: Vec<BiPoly<S>>,
}

impl<S: Scalar> PolyMatrix<S> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![BiPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BiPoly::one();
        }
        m
    }

    pub fn from_fn<F>(rows: usize, cols: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> BiPoly<S>,
    {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix { rows, cols, entries }
    }

    pub fn diagonal(values: Vec<BiPoly<S>>) -> Self {
        let n = values.len();
        let mut m = Self::zero(n, n);
        for (i, v) in values.into_iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &BiPoly<S>) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() * c.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }

    pub fn trace(&self) -> BiPoly<S> {
        assert!(self.is_square());
        let mut t = BiPoly::zero();
        for i in 0..self.rows {
            t = t + self[(i, i)].clone();
        }
        t
    }

    fn det_cofactor(&self) -> BiPoly<S> {
        let n = self.rows;
        if n == 1 {
            return self[(0, 0)].clone();
        }
        let mut acc = BiPoly::zero();
        for j in 0..n {
            if self[(0, j)].is_zero() {
                continue;
            }
            let sub = PolyMatrix::from_fn(n - 1, n - 1, |r, c| {
                let cc = if c < j { c } else { c + 1 };
                self[(r + 1, cc)].clone()
            });
            let term = self[(0, j)].clone() * sub.det_cofactor();
            acc = if j % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    /// Bareiss fraction-free elimination over the polynomial ring: every
    /// division is exact (Sylvester identity), so intermediate entries stay
    /// polynomial instead of blowing up into rational functions.
    fn det_bareiss(&self) -> Result<BiPoly<S>> {
        let n = self.rows;
        let mut m: Vec<Vec<BiPoly<S>>> = (0..n)
            .map(|i| (0..n).map(|j| self[(i, j)].clone()).collect())
            .collect();
        let mut sign_flip = false;
        let mut prev = BiPoly::one();
        for p in 0..n - 1 {
            if m[p][p].is_zero() {
                match (p + 1..n).find(|&r| !m[r][p].is_zero()) {
                    Some(r) => {
                        m.swap(p, r);
                        sign_flip = !sign_flip;
                    }
                    None => return Ok(BiPoly::zero()),
                }
            }
            for i in p + 1..n {
                for j in p + 1..n {
                    let num = m[p][p].clone() * m[i][j].clone()
                        - m[i][p].clone() * m[p][j].clone();
                    m[i][j] = num.div_exact(&prev)?;
                }
            }
            prev = m[p][p].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if sign_flip { -d } else { d })
    }

    pub fn det(&self) -> Result<BiPoly<S>> {
        if !self.is_square() {
            return Err(Error::NonSquare { rows: self.rows, cols: self.cols });
        }
        if self.rows > 32 {
            return Err(Error::MatrixTooLarge(self.rows));
        }
        if self.rows == 0 {
            return Ok(BiPoly::one());
        }
        if self.rows <= 6 {
            Ok(self.det_cofactor())
        } else {
            self.det_bareiss()
        }
    }

    pub fn map<T: Scalar, F>(&self, f: F) -> PolyMatrix<T>
    where
        F: Fn(&BiPoly<S>) -> BiPoly<T>,
    {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

pub fn poly_det<S: Scalar>(m: &PolyMatrix<S>) -> Result<BiPoly<S>> {
    m.det()
}

impl<S: Scalar> std::ops::Index<(usize, usize)> for PolyMatrix<S> {
    type Output = BiPoly<S>;
    fn index(&self, (i, j): (usize, usize)) -> &BiPoly<S> {
        &self.entries[i * self.cols + j]
    }
}

impl<S: Scalar> std::ops::IndexMut<(usize, usize)> for PolyMatrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BiPoly<S> {
        &mut self.entries[i * self.cols + j]
    }
}

impl<S: Scalar> Mul for PolyMatrix<S> {
    type Output = PolyMatrix<S>;
    fn mul(self, rhs: PolyMatrix<S>) -> PolyMatrix<S> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        PolyMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = BiPoly::zero();
            for t in 0..self.cols {
                if self[(i, t)].is_zero() || rhs[(t, j)].is_zero() {
                    continue;
                }
                acc = acc + self[(i, t)].clone() * rhs[(t, j)].clone();
            }
            acc
        })
    }
}

impl<S: Scalar> Add for PolyMatrix<S> {
    type Output = PolyMatrix<S>;
    fn add(self, rhs: PolyMatrix<S>) -> PolyMatrix<S> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        PolyMatrix::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() + rhs[(i, j)].clone()
        })
    }
}

impl<S: Scalar> Sub for PolyMatrix<S> {
    type Output = PolyMatrix<S>;
    fn sub(self, rhs: PolyMatrix<S>) -> PolyMatrix<S> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        PolyMatrix::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() - rhs[(i, j)].clone()
        })
    }
}

impl<S: Scalar> Neg for PolyMatrix<S> {
    type Output = PolyMatrix<S>;
    fn neg(self) -> PolyMatrix<S> {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.into_iter().map(|e| -e).collect(),
        }
    }
}

impl<S: Scalar + fmt::Display> fmt::Debug for PolyMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                write!(f, "{}; ", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn det_examples() {
        // 1x1 [[lambda z]] -> lambda z
        let m = PolyMatrix::from_fn(1, 1, |_, _| BiPoly::monomial(1, 1, q(1, 1)));
        assert_eq!(m.det().unwrap(), BiPoly::monomial(1, 1, q(1, 1)));

        // [[1, z],[lambda, 1]] -> 1 - lambda z
        let mut m = PolyMatrix::<Rational>::identity(2);
        m[(0, 1)] = BiPoly::z();
        m[(1, 0)] = BiPoly::lambda();
        let d = m.det().unwrap();
        assert_eq!(d, BiPoly::one() - BiPoly::monomial(1, 1, q(1, 1)));
    }

    #[test]
    fn det_k2_lax_example() {
        // det(I_2 + z*L) for L = [[-lambda, 2], [-lambda, 1]]
        // -> 1 + (1 - lambda) z + lambda z^2
        let mut l = PolyMatrix::<Rational>::zero(2, 2);
        l[(0, 0)] = BiPoly::monomial(1, 0, q(-1, 1));
        l[(0, 1)] = BiPoly::constant(q(2, 1));
        l[(1, 0)] = BiPoly::monomial(1, 0, q(-1, 1));
        l[(1, 1)] = BiPoly::one();
        let m = PolyMatrix::identity(2) + l.scale(&BiPoly::z());
        let d = m.det().unwrap();
        let want = BiPoly::one() + BiPoly::z() - BiPoly::monomial(1, 1, q(1, 1))
            + BiPoly::monomial(1, 2, q(1, 1));
        assert_eq!(d, want);
    }

    #[test]
    fn bareiss_matches_cofactor() {
        // deterministic pseudo-random 7x7 with degree-1 entries: Bareiss path
        let mut seed = 37u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 7) as i64 - 3
        };
        let m = PolyMatrix::from_fn(7, 7, |_, _| {
            BiPoly::constant(q(next(), 1)) + BiPoly::monomial(1, 0, q(next(), 1))
        });
        let d7 = m.det().unwrap();
        // compare against cofactor on the same matrix
        assert_eq!(d7, m.det_cofactor());
    }

    #[test]
    fn non_square_rejected() {
        let m = PolyMatrix::<Rational>::zero(2, 3);
        assert!(matches!(m.det(), Err(Error::NonSquare { .. })));
    }
}
