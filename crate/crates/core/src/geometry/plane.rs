//! Plane-polygon reconstruction for the higher pentagram maps (the map psi
//! and the skip-diagonal map), over complex floating scalars.
//!
//! This is the one deliberately non-exact corner of the crate: the branches
//! of psi^{-1} are invariant subspaces of a matrix and are generically
//! irrational, so eigenvectors are computed numerically. The recurrence
//! matrix B itself is assembled exactly and its characteristic polynomial is
//! taken over rationals before any rounding happens.

use crate::dynamics::XYState;
use crate::error::{Error, Result};
use crate::kernel::{BiPoly, PolyMatrix, Rational};
use num_complex::Complex64;
use num_traits::Zero;

pub const DEFAULT_TOL: f64 = 1e-8;

type C3 = [Complex64; 3];
type M3 = [[Complex64; 3]; 3];

/// A twisted polygon in CP^2 with floating homogeneous lifts.
#[derive(Clone, Debug)]
pub struct PlanePolygon {
    vertices: Vec<C3>,
    monodromy: M3,
}

fn mat3_vec(m: &M3, v: &C3) -> C3 {
    let mut out = [Complex64::zero(); 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i] += m[i][j] * v[j];
        }
    }
    out
}

fn mat3_det(m: &M3) -> Complex64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

fn mat3_inv(m: &M3) -> Result<M3> {
    let d = mat3_det(m);
    if d.norm() < 1e-300 {
        return Err(Error::ToleranceExceeded("singular monodromy".into()));
    }
    let c = |i: usize, j: usize| {
        let (a, b) = ((i + 1) % 3, (i + 2) % 3);
        let (p, q) = ((j + 1) % 3, (j + 2) % 3);
        m[a][p] * m[b][q] - m[a][q] * m[b][p]
    };
    let mut out = [[Complex64::zero(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = c(j, i) / d;
        }
    }
    Ok(out)
}

fn cross(a: &C3, b: &C3) -> C3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn norm(v: &C3) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

impl PlanePolygon {
    pub fn new(vertices: Vec<C3>, monodromy: M3) -> Self {
        PlanePolygon { vertices, monodromy }
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[C3] {
        &self.vertices
    }

    pub fn monodromy(&self) -> &M3 {
        &self.monodromy
    }

    pub fn vertex(&self, i: i64) -> Result<C3> {
        let n = self.vertices.len() as i64;
        let mut wraps = (i - 1).div_euclid(n);
        let idx = (i - 1).rem_euclid(n) as usize;
        let mut v = self.vertices[idx];
        let inv = if wraps < 0 { Some(mat3_inv(&self.monodromy)?) } else { None };
        while wraps > 0 {
            v = mat3_vec(&self.monodromy, &v);
            wraps -= 1;
        }
        while wraps < 0 {
            v = mat3_vec(inv.as_ref().unwrap(), &v);
            wraps += 1;
        }
        Ok(v)
    }
}

// ---------------------------------------------------------------------------
// small complex eigensolver (exact charpoly + Durand-Kerner roots)
// ---------------------------------------------------------------------------

fn charpoly_roots(b: &[Vec<Rational>]) -> Result<Vec<Complex64>> {
    let k = b.len();
    // det(B - t I) over the exact rationals, t mapped onto the lambda slot
    let m = PolyMatrix::from_fn(k, k, |i, j| {
        let mut e = BiPoly::constant(b[i][j].clone());
        if i == j {
            e = e - BiPoly::lambda();
        }
        e
    });
    let p = m.det()?;
    let deg = p.deg_lambda().unwrap_or(0);
    let lead = p.coeff(deg, 0);
    if lead.is_zero() || deg as usize != k {
        return Err(Error::BranchUnavailable("degenerate characteristic polynomial".into()));
    }
    // monic coefficients c_0..c_{k-1} with t^k + sum c_i t^i
    let coeffs: Vec<Complex64> = (0..deg)
        .map(|i| {
            let c = &p.coeff(i, 0) / &lead;
            Complex64::new(c.to_f64(), 0.0)
        })
        .collect();
    Ok(durand_kerner(&coeffs))
}

/// Roots of the monic polynomial t^d + c_{d-1} t^{d-1} + ... + c_0.
fn durand_kerner(c: &[Complex64]) -> Vec<Complex64> {
    let d = c.len();
    let eval = |t: Complex64| -> Complex64 {
        let mut acc = Complex64::new(1.0, 0.0);
        for i in (0..d).rev() {
            acc = acc * t + c[i];
        }
        acc
    };
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..d).map(|i| seed.powu(i as u32 + 1)).collect();
    for _ in 0..500 {
        let mut delta: f64 = 0.0;
        for i in 0..d {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..d {
                if j != i {
                    den *= roots[i] - roots[j];
                }
            }
            if den.norm() < 1e-300 {
                continue;
            }
            let step = eval(roots[i]) / den;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-14 {
            break;
        }
    }
    roots
}

/// Unit-norm kernel vector of (B - mu I) by elimination with partial pivoting.
fn eigenvector(b: &[Vec<Rational>], mu: Complex64) -> Result<Vec<Complex64>> {
    let k = b.len();
    let mut m: Vec<Vec<Complex64>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let mut v = Complex64::new(b[i][j].to_f64(), 0.0);
                    if i == j {
                        v -= mu;
                    }
                    v
                })
                .collect()
        })
        .collect();
    let mut piv_cols = Vec::new();
    let mut row = 0;
    for col in 0..k {
        let (best, mag) = (row..k)
            .map(|r| (r, m[r][col].norm()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap_or((row, 0.0));
        if mag < 1e-10 {
            continue;
        }
        m.swap(row, best);
        let p = m[row][col];
        for c in 0..k {
            m[row][c] /= p;
        }
        for r in 0..k {
            if r != row {
                let f = m[r][col];
                if f.norm() > 0.0 {
                    for c in 0..k {
                        let sub = f * m[row][c];
                        m[r][c] -= sub;
                    }
                }
            }
        }
        piv_cols.push(col);
        row += 1;
        if row == k {
            break;
        }
    }
    let free = (0..k).find(|c| !piv_cols.contains(c)).ok_or_else(|| {
        Error::BranchUnavailable("eigenvalue has empirically trivial kernel".into())
    })?;
    let mut v = vec![Complex64::zero(); k];
    v[free] = Complex64::new(1.0, 0.0);
    for (r, &pc) in piv_cols.iter().enumerate() {
        v[pc] = -m[r][free];
    }
    let scale = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    Ok(v.into_iter().map(|c| c / scale).collect())
}

// ---------------------------------------------------------------------------
// reconstruction
// ---------------------------------------------------------------------------

/// Exact frame coefficients F_q^i: the coordinates of V_q in the identity
/// frame V_1..V_k under the corrugation recurrence.
fn frame_coefficients(s: &XYState, upto: usize) -> Vec<Vec<Rational>> {
    let k = s.shape().k();
    let mut verts: Vec<Vec<Rational>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    if i == j {
                        Rational::from_int(1)
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for i in 1..=(upto as i64 - k as i64) {
        let vi = verts[(i - 1) as usize].clone();
        let vi1 = verts[i as usize].clone();
        let vk1 = verts[(i + k as i64 - 2) as usize].clone();
        let y = s.y_at(i - 1);
        let x = s.x_at(i);
        verts.push(
            (0..k)
                .map(|t| &(&(&y * &vi[t]) + &(&x * &vi1[t])) + &vk1[t])
                .collect(),
        );
    }
    verts
}

/// The k x k matrix whose invariant (k-3)-subspaces classify the branches of
/// psi^{-1} (blocks: basis part of V_{n+1..3} on the left, minus the
/// unknown-frame couplings elsewhere).
fn branch_matrix(s: &XYState) -> Vec<Vec<Rational>> {
    let k = s.shape().k();
    let n = s.shape().n();
    let frames = frame_coefficients(s, n + k);
    let f = |q: usize, i: usize| frames[q - 1][i - 1].clone();
    let mut b = vec![vec![Rational::zero(); k]; k];
    for be in 1..=3usize {
        for al in 1..=3usize {
            b[be - 1][al - 1] = f(n + al, be);
        }
        for j in 4..=k {
            b[be - 1][j - 1] = -&f(n + j, be);
        }
    }
    for i in 4..=k {
        for al in 1..=3usize {
            b[i - 1][al - 1] = -&f(n + al, i);
        }
        for j in 4..=k {
            b[i - 1][j - 1] = f(n + j, i);
        }
    }
    b
}

fn subsets(k: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, k: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..k {
            cur.push(i);
            rec(i + 1, k, m, cur, out);
            cur.pop();
        }
    }
    rec(0, k, m, &mut cur, &mut out);
    out
}

/// Number of branches of psi^{-1} available at `s` (generically k choose 3).
pub fn branch_count(s: &XYState, tol: f64) -> Result<usize> {
    Ok(enumerate_branches(s, tol)?.len())
}

fn enumerate_branches(s: &XYState, tol: f64) -> Result<Vec<Vec<C3>>> {
    let k = s.shape().k();
    if k < 3 {
        return Err(Error::InvalidInput("plane reconstruction needs k >= 3".into()));
    }
    let m = k - 3;
    if m == 0 {
        // psi is a bijection: no free frame vectors
        return Ok(vec![Vec::new()]);
    }
    let b = branch_matrix(s);
    let mut roots = charpoly_roots(&b)?;
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let vecs: Vec<Vec<Complex64>> = roots
        .iter()
        .map(|&mu| eigenvector(&b, mu))
        .collect::<Result<_>>()?;
    let mut branches = Vec::new();
    for subset in subsets(k, m) {
        // tail block: last m coordinates of the chosen eigenvectors
        let tail: Vec<Vec<Complex64>> = (0..m)
            .map(|r| subset.iter().map(|&c| vecs[c][3 + r]).collect())
            .collect();
        match invert_complex(&tail, tol) {
            Some(tinv) => {
                // normalized basis: columns eta_j with tail part = e_j
                let mut frame = Vec::with_capacity(m);
                for j in 0..m {
                    let mut v = [Complex64::zero(); 3];
                    for t in 0..m {
                        let w = tinv[t][j];
                        for c in 0..3 {
                            v[c] += vecs[subset[t]][c] * w;
                        }
                    }
                    frame.push(v);
                }
                branches.push(frame);
            }
            None => continue,
        }
    }
    Ok(branches)
}

fn invert_complex(m: &[Vec<Complex64>], tol: f64) -> Option<Vec<Vec<Complex64>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Complex64>> = (0..n)
        .map(|i| {
            let mut row = m[i].clone();
            for j in 0..n {
                row.push(if i == j {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::zero()
                });
            }
            row
        })
        .collect();
    for col in 0..n {
        let (best, mag) = (col..n)
            .map(|r| (r, aug[r][col].norm()))
            .max_by(|a, b| a.1.total_cmp(&b.1))?;
        if mag < tol {
            return None;
        }
        aug.swap(col, best);
        let p = aug[col][col];
        for c in 0..2 * n {
            aug[col][c] /= p;
        }
        for r in 0..n {
            if r != col {
                let f = aug[r][col];
                if f.norm() > 0.0 {
                    let pivot_row = aug[col].clone();
                    for c in 0..2 * n {
                        aug[r][c] -= f * pivot_row[c];
                    }
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Reconstructs a plane twisted polygon from (x, y) along the chosen branch
/// (a (k-3)-subset of eigenvectors of the recurrence matrix, in deterministic
/// order). Residuals of the twist condition above `tol` are rejected.
pub fn reconstruct_plane_polygon(s: &XYState, branch: usize, tol: f64) -> Result<PlanePolygon> {
    let k = s.shape().k();
    let n = s.shape().n();
    let branches = enumerate_branches(s, tol)?;
    let frame = branches.get(branch).ok_or_else(|| {
        Error::BranchUnavailable(format!(
            "branch {branch} of {} available",
            branches.len()
        ))
    })?;
    // complex frame V_1..V_k, then the recurrence over C^3
    let mut verts: Vec<C3> = Vec::with_capacity(n + k);
    verts.push([Complex64::new(1.0, 0.0), Complex64::zero(), Complex64::zero()]);
    verts.push([Complex64::zero(), Complex64::new(1.0, 0.0), Complex64::zero()]);
    verts.push([Complex64::zero(), Complex64::zero(), Complex64::new(1.0, 0.0)]);
    for v in frame {
        verts.push(*v);
    }
    for i in 1..=n as i64 {
        let y = s.y_at(i - 1).to_f64();
        let x = s.x_at(i).to_f64();
        let mut next = [Complex64::zero(); 3];
        for c in 0..3 {
            next[c] = verts[(i - 1) as usize][c] * y
                + verts[i as usize][c] * x
                + verts[(i + k as i64 - 2) as usize][c];
        }
        verts.push(next);
    }
    let mono: M3 = {
        let mut m = [[Complex64::zero(); 3]; 3];
        for col in 0..3 {
            for row in 0..3 {
                m[row][col] = verts[n + col][row];
            }
        }
        m
    };
    // twist residuals on the unknown part of the frame
    for j in 4..=k {
        let img = mat3_vec(&mono, &verts[j - 1]);
        let want = verts[n + j - 1];
        let mut err = 0.0f64;
        for c in 0..3 {
            err = err.max((img[c] - want[c]).norm());
        }
        let rel = err / norm(&want).max(1.0);
        if rel > tol {
            return Err(Error::ToleranceExceeded(format!(
                "twist residual {rel:.3e} at frame vector {j}"
            )));
        }
    }
    Ok(PlanePolygon::new(verts[..n].to_vec(), mono))
}

/// The skip (k-2)-diagonal map on plane polygons: the i-th image vertex is
/// the intersection of the lines (V_i, V_{i+k-1}) and (V_{i+1}, V_{i+k}).
pub fn skip_diagonal_map(p: &PlanePolygon, k: usize, tol: f64) -> Result<PlanePolygon> {
    let n = p.n() as i64;
    let mut verts = Vec::with_capacity(p.n());
    for i in 1..=n {
        let (a, b) = (p.vertex(i)?, p.vertex(i + k as i64 - 1)?);
        let (c, d) = (p.vertex(i + 1)?, p.vertex(i + k as i64)?);
        // genericity: none of the spanning pairs may be near-collinear
        let l1 = cross(&a, &b);
        let l2 = cross(&c, &d);
        if norm(&l1) < tol * norm(&a).max(norm(&b)).max(1.0)
            || norm(&l2) < tol * norm(&c).max(norm(&d)).max(1.0)
        {
            return Err(Error::ToleranceExceeded(format!(
                "degenerate diagonal at {i}"
            )));
        }
        let pt = cross(&l1, &l2);
        if norm(&pt) < tol * norm(&l1).max(norm(&l2)) {
            return Err(Error::ToleranceExceeded(format!(
                "collinear configuration at {i}"
            )));
        }
        verts.push(pt);
    }
    // lines transform by the cofactor matrix, intersections by its cofactor:
    // cof(cof(M)) = det(M) M keeps the same projective class
    Ok(PlanePolygon::new(verts, *p.monodromy()))
}

/// psi: coordinates of a plane polygon under the skip-diagonal recurrence
/// V_{i+k} = y_{i-1} V_i + x_i V_{i+1} + V_{i+k-1} (three-unknown solve per
/// index, gauge-normalized exactly like the exact-rational path).
pub fn plane_coords(p: &PlanePolygon, k: usize, tol: f64) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
    let n = p.n();
    let wrap = |j: i64| (((j - 1) % n as i64 + n as i64) % n as i64) as usize;
    let mut a = vec![Complex64::zero(); n];
    let mut b = vec![Complex64::zero(); n];
    let mut c = vec![Complex64::zero(); n];
    for i in 1..=n as i64 {
        let cols = [
            p.vertex(i + k as i64 - 1)?,
            p.vertex(i + 1)?,
            p.vertex(i)?,
        ];
        let rhs = p.vertex(i + k as i64)?;
        let m: M3 = [
            [cols[0][0], cols[1][0], cols[2][0]],
            [cols[0][1], cols[1][1], cols[2][1]],
            [cols[0][2], cols[1][2], cols[2][2]],
        ];
        let det = mat3_det(&m);
        let scale = cols.iter().map(norm).fold(1.0f64, f64::max);
        if det.norm() < tol * scale {
            return Err(Error::ToleranceExceeded(format!(
                "three of the four vertices near-collinear at {i}"
            )));
        }
        let inv = mat3_inv(&m)?;
        let sol = mat3_vec(&inv, &rhs);
        a[wrap(i + k as i64 - 1)] = sol[0];
        b[wrap(i + 1)] = sol[1];
        c[wrap(i)] = sol[2];
    }
    let mut xs = Vec::with_capacity(n);
    let mut ys = Vec::with_capacity(n);
    for i in 1..=n as i64 {
        let mut prod = Complex64::new(1.0, 0.0);
        for j in i + 1..i + k as i64 {
            prod *= a[wrap(j)];
        }
        xs.push(b[wrap(i + 1)] / prod);
        prod *= a[wrap(i + k as i64)];
        ys.push(c[wrap(i + 1)] / prod);
    }
    Ok((xs, ys))
}

/// Largest relative deviation between floating coordinates and an exact state.
pub fn coords_relative_error(xs: &[Complex64], ys: &[Complex64], s: &XYState) -> f64 {
    let mut err = 0.0f64;
    for (c, r) in xs.iter().zip(s.x()).chain(ys.iter().zip(s.y())) {
        let want = r.to_f64();
        let e = (c - Complex64::new(want, 0.0)).norm() / want.abs().max(1.0);
        err = err.max(e);
    }
    err
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::{map_T, MapShape};
    use crate::sample;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn state(k: usize, n: usize, seed: u64) -> XYState {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        sample::regular_xy_state(MapShape::new(k, n).unwrap(), &mut rng)
    }

    #[test]
    fn k3_single_branch_roundtrip() {
        let s = state(3, 5, 5);
        assert_eq!(branch_count(&s, DEFAULT_TOL).unwrap(), 1);
        let p = reconstruct_plane_polygon(&s, 0, DEFAULT_TOL).unwrap();
        let (xs, ys) = plane_coords(&p, 3, DEFAULT_TOL).unwrap();
        assert!(coords_relative_error(&xs, &ys, &s) < 1e-9);
    }

    #[test]
    fn k4_four_branches() {
        let s = state(4, 9, 8);
        assert_eq!(branch_count(&s, DEFAULT_TOL).unwrap(), 4);
        for br in 0..4 {
            let p = reconstruct_plane_polygon(&s, br, DEFAULT_TOL).unwrap();
            let (xs, ys) = plane_coords(&p, 4, DEFAULT_TOL).unwrap();
            assert!(
                coords_relative_error(&xs, &ys, &s) < 1e-7,
                "branch {br} does not reproduce the state"
            );
        }
    }

    #[test]
    fn conjugacy_with_skip_diagonal() {
        // psi o Fbar = F o psi: skip-diagonal image coords match T(S_{r'+1} s)
        for (k, n, seed) in [(3usize, 5usize, 31u64), (4, 9, 33)] {
            let s = state(k, n, seed);
            let shape = s.shape();
            let p = reconstruct_plane_polygon(&s, 0, DEFAULT_TOL).unwrap();
            let img = skip_diagonal_map(&p, k, 1e-12).unwrap();
            let (xs, ys) = plane_coords(&img, k, 1e-12).unwrap();
            let want = map_T(&s.shift(shape.rprime() + 1)).unwrap();
            assert!(
                coords_relative_error(&xs, &ys, &want) < 1e-7,
                "conjugacy failed at ({k},{n})"
            );
        }
    }

    #[test]
    fn out_of_range_branch_rejected() {
        let s = state(3, 5, 6);
        assert!(matches!(
            reconstruct_plane_polygon(&s, 1, DEFAULT_TOL),
            Err(Error::BranchUnavailable(_))
        ));
        let s = state(4, 9, 6);
        assert!(matches!(
            reconstruct_plane_polygon(&s, 4, DEFAULT_TOL),
            Err(Error::BranchUnavailable(_))
        ));
    }

    #[test]
    fn skip_diagonal_projectively_equivariant() {
        // applying a projective map commutes with the construction; compared
        // through the gauge-invariant coordinates
        let s = state(4, 9, 77);
        let p = reconstruct_plane_polygon(&s, 0, DEFAULT_TOL).unwrap();
        let g: M3 = [
            [Complex64::new(2.0, 0.3), Complex64::new(-1.0, 0.0), Complex64::new(0.5, 0.0)],
            [Complex64::new(0.0, 1.0), Complex64::new(1.5, 0.0), Complex64::new(0.2, -0.4)],
            [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.7), Complex64::new(-1.2, 0.0)],
        ];
        let ginv = mat3_inv(&g).unwrap();
        let moved_mono = {
            let mut m = [[Complex64::zero(); 3]; 3];
            for i in 0..3 {
                for j in 0..3 {
                    for a in 0..3 {
                        for b in 0..3 {
                            m[i][j] += g[i][a] * p.monodromy()[a][b] * ginv[b][j];
                        }
                    }
                }
            }
            m
        };
        let moved = PlanePolygon::new(
            p.vertices().iter().map(|v| mat3_vec(&g, v)).collect(),
            moved_mono,
        );
        let (x1, y1) = plane_coords(&skip_diagonal_map(&p, 4, 1e-12).unwrap(), 4, 1e-12).unwrap();
        let (x2, y2) = plane_coords(&skip_diagonal_map(&moved, 4, 1e-12).unwrap(), 4, 1e-12).unwrap();
        for (a, b) in x1.iter().zip(&x2).chain(y1.iter().zip(&y2)) {
            assert!((a - b).norm() <= 1e-8 * a.norm().max(1.0));
        }
    }

    #[test]
    fn collinear_triple_rejected() {
        // three consecutive vertices on a line force the genericity check
        let e = |a: f64, b: f64, c: f64| [
            Complex64::new(a, 0.0),
            Complex64::new(b, 0.0),
            Complex64::new(c, 0.0),
        ];
        let verts = vec![e(0.0, 0.0, 1.0), e(1.0, 0.0, 1.0), e(2.0, 0.0, 1.0), e(3.0, 0.0, 1.0), e(0.0, 2.0, 1.0)];
        let id = [
            [Complex64::new(1.0, 0.0), Complex64::zero(), Complex64::zero()],
            [Complex64::zero(), Complex64::new(1.0, 0.0), Complex64::zero()],
            [Complex64::zero(), Complex64::zero(), Complex64::new(1.0, 0.0)],
        ];
        let p = PlanePolygon::new(verts, id);
        assert!(matches!(
            skip_diagonal_map(&p, 3, 1e-9),
            Err(Error::ToleranceExceeded(_))
        ));
    }
}
