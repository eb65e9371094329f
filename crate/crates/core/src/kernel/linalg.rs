//! Exact linear algebra over integers and rationals: fraction-free rank,
//! solving, nullspaces, inverses. Small dense matrices only.

use crate::error::{Error, Result};
use crate::kernel::rational::Rational;
use num::bigint::BigInt;
use num_traits::Zero;

/// Exact rank of an integer matrix via fraction-free (Bareiss) elimination.
pub fn int_matrix_rank(m: &[Vec<BigInt>]) -> usize {
    if m.is_empty() || m[0].is_empty() {
        return 0;
    }
    let rows = m.len();
    let cols = m[0].len();
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    let mut row = 0;
    for col in 0..cols {
        let piv = (row..rows).find(|&r| !a[r][col].is_zero());
        let piv = match piv {
            Some(p) => p,
            None => continue,
        };
        a.swap(row, piv);
        for r in row + 1..rows {
            for c in col + 1..cols {
                let num = &a[row][col] * &a[r][c] - &a[r][col] * &a[row][c];
                a[r][c] = num / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[row][col].clone();
        row += 1;
        rank += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// Rank over the rationals: clear denominators row by row, then integer rank.
pub fn rational_matrix_rank(m: &[Vec<Rational>]) -> usize {
    let cleared: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::from(1), |acc, v| {
                num::integer::lcm(acc, v.denom().clone())
            });
            row.iter()
                .map(|v| v.numer() * (&lcm / v.denom()))
                .collect()
        })
        .collect();
    int_matrix_rank(&cleared)
}

/// Reduced row echelon form in place; returns pivot column indices.
fn rref(a: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = a.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = a[0].len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let piv = match (row..rows).find(|&r| !a[r][col].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        a.swap(row, piv);
        let f = a[row][col].clone();
        for c in col..cols {
            a[row][c] = &a[row][c] / &f;
        }
        for r in 0..rows {
            if r != row && !a[r][col].is_zero() {
                let g = a[r][col].clone();
                for c in col..cols {
                    a[r][c] = &a[r][c] - &(&g * &a[row][c]);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    pivots
}

/// Basis of the right nullspace of `m`.
pub fn nullspace(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    if m.is_empty() {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::from_int(1);
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -&a[r][free];
        }
        basis.push(v);
    }
    basis
}

/// Solves the (possibly overdetermined) system `m x = rhs` exactly.
/// `Ok(None)` means inconsistent; unique solutions only (full column rank).
pub fn solve_exact(m: &[Vec<Rational>], rhs: &[Rational]) -> Result<Option<Vec<Rational>>> {
    let rows = m.len();
    if rows == 0 {
        return Err(Error::InvalidInput("empty system".into()));
    }
    let cols = m[0].len();
    let mut aug: Vec<Vec<Rational>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    // inconsistent if a pivot lands in the rhs column
    if pivots.contains(&cols) {
        return Ok(None);
    }
    if pivots.len() < cols {
        return Err(Error::InvalidInput("underdetermined system".into()));
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[r][cols].clone();
    }
    Ok(Some(x))
}

/// Inverse of a square rational matrix.
pub fn invert(m: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { Rational::from_int(1) } else { Rational::zero() });
            }
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
        return Err(Error::DegeneratePolygon("singular matrix".into()));
    }
    Ok(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(Rational::zero(), |acc, (a, b)| &acc + &(a * b))
        })
        .collect()
}

/// Exact determinant of a small rational matrix (cofactor expansion).
pub fn det_small(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Rational::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let sub: Vec<Vec<Rational>> = (1..n)
            .map(|r| {
                (0..n)
                    .filter(|&c| c != j)
                    .map(|c| m[r][c].clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &det_small(&sub);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn int_rank_examples() {
        let zero = vec![vec![BigInt::from(0); 3]; 3];
        assert_eq!(int_matrix_rank(&zero), 0);
        let id: Vec<Vec<BigInt>> = (0..4)
            .map(|i| (0..4).map(|j| BigInt::from((i == j) as i64)).collect())
            .collect();
        assert_eq!(int_matrix_rank(&id), 4);
        // rank 1
        let r1: Vec<Vec<BigInt>> = (1..=3)
            .map(|i| (1..=3).map(|j| BigInt::from(i * j)).collect())
            .collect();
        assert_eq!(int_matrix_rank(&r1), 1);
    }

    #[test]
    fn nullspace_and_solve() {
        let m = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)]];
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let img = mat_vec(&m, v);
            assert!(img.iter().all(Rational::is_zero));
        }
        let m = vec![vec![q(1), q(1)], vec![q(1), q(-1)], vec![q(2), q(0)]];
        let sol = solve_exact(&m, &[q(3), q(1), q(4)]).unwrap().unwrap();
        assert_eq!(sol, vec![q(2), q(1)]);
        let none = solve_exact(&m, &[q(3), q(1), q(5)]).unwrap();
        assert!(none.is_none());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = vec![
            vec![q(2), q(1), q(0)],
            vec![q(0), q(1), q(3)],
            vec![q(1), q(0), q(1)],
        ];
        let inv = invert(&m).unwrap();
        for i in 0..3 {
            let e = mat_vec(&m, &inv.iter().map(|r| r[i].clone()).collect::<Vec<_>>());
            for (j, v) in e.iter().enumerate() {
                assert_eq!(*v, if i == j { q(1) } else { q(0) });
            }
        }
    }
}
