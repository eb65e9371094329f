//! Corrugated twisted polygons in RP^{k-1} over exact rationals: lifts,
//! coordinates, the diagonal maps F_k and G_k, projective duality, and
//! cross-ratio coordinates. Floating-point plane reconstruction lives in
//! `plane`.

pub mod plane;

use crate::dynamics::{MapShape, PQState, XYState};
use crate::error::{Error, Result};
use crate::kernel::linalg::{det_small, invert, mat_vec, nullspace, solve_exact};
use crate::kernel::Rational;
use num_traits::{One, Zero};

// ---------------------------------------------------------------------------
// RP^1 and cross-ratios
// ---------------------------------------------------------------------------

/// A point of RP^1 in homogeneous coordinates (u : v); infinity is (1 : 0).
#[derive(Clone, PartialEq, Debug)]
pub struct RP1Point {
    u: Rational,
    v: Rational,
}

impl RP1Point {
    pub fn new(u: Rational, v: Rational) -> Result<Self> {
        if u.is_zero() && v.is_zero() {
            return Err(Error::InvalidInput("(0 : 0) is not a point".into()));
        }
        Ok(RP1Point { u, v })
    }

    pub fn from_affine(a: Rational) -> Self {
        RP1Point { u: a, v: Rational::one() }
    }

    pub fn infinity() -> Self {
        RP1Point { u: Rational::one(), v: Rational::zero() }
    }

    pub fn u(&self) -> &Rational {
        &self.u
    }

    pub fn v(&self) -> &Rational {
        &self.v
    }

    pub fn is_infinite(&self) -> bool {
        self.v.is_zero()
    }

    /// Affine value u/v; pole at infinity.
    pub fn to_affine(&self) -> Result<Rational> {
        if self.v.is_zero() {
            return Err(Error::Pole);
        }
        Ok(&self.u / &self.v)
    }

    pub fn projectively_eq(&self, other: &RP1Point) -> bool {
        det2(self, other).is_zero()
    }
}

pub(crate) fn det2(a: &RP1Point, b: &RP1Point) -> Rational {
    &(&a.u * &b.v) - &(&b.u * &a.v)
}

/// `[a,b,c,d] = (a-b)(c-d) / ((a-d)(b-c))`, computed through homogeneous 2x2
/// determinants so infinity needs no special case.
pub fn cross_ratio(a: &RP1Point, b: &RP1Point, c: &RP1Point, d: &RP1Point) -> Result<Rational> {
    let den = &det2(a, d) * &det2(b, c);
    if den.is_zero() {
        return Err(Error::DegenerateQuadruple);
    }
    Ok(&(&det2(a, b) * &det2(c, d)) / &den)
}

// ---------------------------------------------------------------------------
// lifted twisted polygons
// ---------------------------------------------------------------------------

/// A twisted polygon lifted to R^k: n vertex vectors plus a monodromy matrix
/// M with V_{i+n} = M V_i. Out-of-range labels resolve through powers of M.
#[derive(Clone, PartialEq, Debug)]
pub struct LiftedPolygon {
    shape: MapShape,
    vertices: Vec<Vec<Rational>>,
    monodromy: Vec<Vec<Rational>>,
    monodromy_inv: Vec<Vec<Rational>>,
}

impl LiftedPolygon {
    pub fn new(
        shape: MapShape,
        vertices: Vec<Vec<Rational>>,
        monodromy: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        let k = shape.k();
        if vertices.len() != shape.n()
            || vertices.iter().any(|v| v.len() != k)
            || monodromy.len() != k
            || monodromy.iter().any(|r| r.len() != k)
        {
            return Err(Error::InvalidInput("polygon dimension mismatch".into()));
        }
        let monodromy_inv = invert(&monodromy)
            .map_err(|_| Error::DegeneratePolygon("monodromy is singular".into()))?;
        Ok(LiftedPolygon { shape, vertices, monodromy, monodromy_inv })
    }

    pub fn shape(&self) -> MapShape {
        self.shape
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub fn monodromy(&self) -> &[Vec<Rational>] {
        &self.monodromy
    }

    /// Lift of the 1-based cyclic vertex V_i, wrapped through the monodromy.
    pub fn vertex(&self, i: i64) -> Vec<Rational> {
        let n = self.shape.n() as i64;
        let mut wraps = (i - 1).div_euclid(n);
        let idx = (i - 1).rem_euclid(n) as usize;
        let mut v = self.vertices[idx].clone();
        while wraps > 0 {
            v = mat_vec(&self.monodromy, &v);
            wraps -= 1;
        }
        while wraps < 0 {
            v = mat_vec(&self.monodromy_inv, &v);
            wraps += 1;
        }
        v
    }

    /// Corrugation: V_{i+k} lies in span(V_i, V_{i+1}, V_{i+k-1}) for all i.
    pub fn is_corrugated(&self) -> bool {
        (1..=self.shape.n() as i64).all(|i| self.solve_recurrence(i).is_some())
    }

    /// Solves V_{i+k} = a V_{i+k-1} + b V_{i+1} + c V_i; `None` when the
    /// system is inconsistent (not corrugated) or the span degenerates.
    fn solve_recurrence(&self, i: i64) -> Option<(Rational, Rational, Rational)> {
        let k = self.shape.k() as i64;
        let cols = [self.vertex(i + k - 1), self.vertex(i + 1), self.vertex(i)];
        let rhs = self.vertex(i + k);
        let m: Vec<Vec<Rational>> = (0..self.shape.k())
            .map(|row| cols.iter().map(|c| c[row].clone()).collect())
            .collect();
        match solve_exact(&m, &rhs) {
            Ok(Some(sol)) => Some((sol[0].clone(), sol[1].clone(), sol[2].clone())),
            _ => None,
        }
    }
}

/// Projective equality of two lifts: all 2x2 minors of the stacked pair
/// vanish (no normalization, no sign pitfalls).
pub fn proj_eq(u: &[Rational], v: &[Rational]) -> bool {
    let k = u.len();
    if v.len() != k {
        return false;
    }
    if u.iter().all(Rational::is_zero) || v.iter().all(Rational::is_zero) {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            if (&u[i] * &v[j]) != (&u[j] * &v[i]) {
                return false;
            }
        }
    }
    true
}

/// Per-vertex projective equality of two polygons, allowing a vertex-label
/// shift of `t` on the right-hand side.
pub fn polygons_proj_eq(a: &LiftedPolygon, b: &LiftedPolygon, t: i64) -> bool {
    (1..=a.shape().n() as i64).all(|i| proj_eq(&a.vertex(i), &b.vertex(i + t)))
}

// ---------------------------------------------------------------------------
// coordinates <-> polygons
// ---------------------------------------------------------------------------

/// Builds the canonical lift from (x, y): V_1..V_k is the standard basis, the
/// recurrence V_{i+k} = y_{i-1} V_i + x_i V_{i+1} + V_{i+k-1} is run to
/// V_{n+k}, and the monodromy columns are read off from V_{n+1}..V_{n+k}.
pub fn polygon_from_xy(s: &XYState) -> Result<LiftedPolygon> {
    let k = s.shape().k();
    let n = s.shape().n();
    let mut verts: Vec<Vec<Rational>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for i in 1..=n as i64 {
        let vi = verts[(i - 1) as usize].clone();
        let vi1 = verts[i as usize].clone();
        let vk1 = verts[(i + k as i64 - 2) as usize].clone();
        let y = s.y_at(i - 1);
        let x = s.x_at(i);
        let next: Vec<Rational> = (0..k)
            .map(|t| &(&(&y * &vi[t]) + &(&x * &vi1[t])) + &vk1[t])
            .collect();
        verts.push(next);
    }
    // monodromy maps the identity frame to the shifted frame
    let monodromy: Vec<Vec<Rational>> = (0..k)
        .map(|row| (0..k).map(|col| verts[n + col][row].clone()).collect())
        .collect();
    LiftedPolygon::new(s.shape(), verts[..n].to_vec(), monodromy)
}

/// Reads (x, y) off a generic corrugated polygon by solving the three-term
/// recurrence at every index and normalizing the leading coefficient away:
/// x_i = b_{i+1} / (a_{i+1}...a_{i+k-1}), y_i = c_{i+1} / (a_{i+1}...a_{i+k}).
pub fn xy_from_polygon(p: &LiftedPolygon) -> Result<XYState> {
    let shape = p.shape();
    let n = shape.n();
    let k = shape.k() as i64;
    let mut a = vec![Rational::zero(); n];
    let mut b = vec![Rational::zero(); n];
    let mut c = vec![Rational::zero(); n];
    let wrap = |j: i64| (((j - 1) % n as i64 + n as i64) % n as i64) as usize;
    for i in 1..=n as i64 {
        let (ai, bi, ci) = p.solve_recurrence(i).ok_or_else(|| {
            Error::DegeneratePolygon(format!("recurrence inconsistent at {i}"))
        })?;
        if ai.is_zero() {
            return Err(Error::DegeneratePolygon(format!("a_{} = 0", i + k - 1)));
        }
        a[wrap(i + k - 1)] = ai;
        b[wrap(i + 1)] = bi;
        c[wrap(i)] = ci;
    }
    let ga = |j: i64| a[wrap(j)].clone();
    let mut xs = Vec::with_capacity(n);
    let mut ys = Vec::with_capacity(n);
    for i in 1..=n as i64 {
        let mut prod = Rational::one();
        for j in i + 1..i + k {
            prod = &prod * &ga(j);
        }
        xs.push(&b[wrap(i + 1)] / &prod);
        prod = &prod * &ga(i + k);
        ys.push(&c[wrap(i + 1)] / &prod);
    }
    XYState::new(shape, xs, ys)
}

// ---------------------------------------------------------------------------
// the diagonal maps and duality
// ---------------------------------------------------------------------------

/// F_k via the closed form V'_i = V_{i+k} - x_i V_{i+1}; the monodromy is
/// unchanged. In coordinates F_k = T_k o S_{r'+1}.
pub fn map_F(p: &LiftedPolygon) -> Result<LiftedPolygon> {
    let s = xy_from_polygon(p)?;
    let n = p.shape().n();
    let k = p.shape().k() as i64;
    let verts: Vec<Vec<Rational>> = (1..=n as i64)
        .map(|i| {
            let vk = p.vertex(i + k);
            let v1 = p.vertex(i + 1);
            let x = s.x_at(i);
            (0..p.shape().k()).map(|t| &vk[t] - &(&x * &v1[t])).collect()
        })
        .collect();
    LiftedPolygon::new(p.shape(), verts, p.monodromy().to_vec())
}

/// Geometric oracle for F_k: the i-th image vertex as the intersection of the
/// diagonals (V_i, V_{i+k-1}) and (V_{i+1}, V_{i+k}), computed from the
/// 1-dimensional kernel of the span relation.
pub fn map_F_oracle(p: &LiftedPolygon) -> Result<LiftedPolygon> {
    intersection_map(p, |i, k| (i, i + k - 1, i + 1, i + k))
}

/// G_k: intersection of the lines (V_i, V_{i+1}) and (V_{i+k-1}, V_{i+k}).
/// In coordinates G_k = T_k^{-1} o S_{r+1}.
pub fn map_G(p: &LiftedPolygon) -> Result<LiftedPolygon> {
    intersection_map(p, |i, k| (i, i + 1, i + k - 1, i + k))
}

fn intersection_map(
    p: &LiftedPolygon,
    lines: impl Fn(i64, i64) -> (i64, i64, i64, i64),
) -> Result<LiftedPolygon> {
    let n = p.shape().n();
    let k = p.shape().k() as i64;
    let verts: Vec<Vec<Rational>> = (1..=n as i64)
        .map(|i| {
            let (a, b, c, d) = lines(i, k);
            let (va, vb, vc, vd) = (p.vertex(a), p.vertex(b), p.vertex(c), p.vertex(d));
            // alpha va + beta vb = gamma vc + delta vd
            let m: Vec<Vec<Rational>> = (0..p.shape().k())
                .map(|t| {
                    vec![va[t].clone(), vb[t].clone(), -&vc[t], -&vd[t]]
                })
                .collect();
            let ker = nullspace(&m);
            if ker.len() != 1 {
                return Err(Error::DegeneratePolygon(format!(
                    "diagonal intersection at {i} has kernel dimension {}",
                    ker.len()
                )));
            }
            let co = &ker[0];
            let pt: Vec<Rational> = (0..p.shape().k())
                .map(|t| &(&co[0] * &va[t]) + &(&co[1] * &vb[t]))
                .collect();
            if pt.iter().all(Rational::is_zero) {
                return Err(Error::DegeneratePolygon(format!(
                    "diagonals coincide at {i}"
                )));
            }
            Ok(pt)
        })
        .collect::<Result<_>>()?;
    LiftedPolygon::new(p.shape(), verts, p.monodromy().to_vec())
}

/// Projective duality: W_i is the Hodge dual of V_i ^ ... ^ V_{i+k-2} under
/// the standard volume form (signed maximal minors); the dual monodromy is
/// the cofactor matrix det(M) M^{-T}. In coordinates the duality equals
/// (-1)^k D_k o S_{r'}.
pub fn dualize(p: &LiftedPolygon) -> Result<LiftedPolygon> {
    let n = p.shape().n();
    let k = p.shape().k();
    let verts: Vec<Vec<Rational>> = (1..=n as i64)
        .map(|i| {
            let rows: Vec<Vec<Rational>> = (0..k as i64 - 1).map(|t| p.vertex(i + t)).collect();
            let w: Vec<Rational> = (0..k)
                .map(|j| {
                    let sub: Vec<Vec<Rational>> = rows
                        .iter()
                        .map(|r| {
                            r.iter()
                                .enumerate()
                                .filter(|(c, _)| *c != j)
                                .map(|(_, v)| v.clone())
                                .collect()
                        })
                        .collect();
                    let d = det_small(&sub);
                    if j % 2 == 0 {
                        d
                    } else {
                        -&d
                    }
                })
                .collect();
            if w.iter().all(Rational::is_zero) {
                return Err(Error::DegeneratePolygon(format!(
                    "consecutive frame degenerate at {i}"
                )));
            }
            Ok(w)
        })
        .collect::<Result<_>>()?;
    // cofactor matrix: det(M) * M^{-T}
    let det = det_small(p.monodromy());
    let minv = invert(p.monodromy())
        .map_err(|_| Error::DegeneratePolygon("monodromy is singular".into()))?;
    let dual_mono: Vec<Vec<Rational>> = (0..k)
        .map(|i| (0..k).map(|j| &det * &minv[j][i]).collect())
        .collect();
    LiftedPolygon::new(p.shape(), verts, dual_mono)
}

// ---------------------------------------------------------------------------
// cross-ratio coordinates
// ---------------------------------------------------------------------------

/// Expresses four vectors lying on a common 2-plane in R^k as RP^1 points in
/// a basis of that plane.
pub fn restrict_to_line(points: &[Vec<Rational>; 4]) -> Result<[RP1Point; 4]> {
    let k = points[0].len();
    let u = &points[0];
    let v = points[1..]
        .iter()
        .find(|cand| !proj_eq(u, cand))
        .ok_or(Error::DegenerateQuadruple)?;
    let m: Vec<Vec<Rational>> = (0..k)
        .map(|t| vec![u[t].clone(), v[t].clone()])
        .collect();
    let mut out = Vec::with_capacity(4);
    for p in points {
        match solve_exact(&m, p).map_err(|_| Error::DegenerateQuadruple)? {
            Some(sol) => out.push(RP1Point::new(sol[0].clone(), sol[1].clone())?),
            None => return Err(Error::DegenerateQuadruple),
        }
    }
    Ok([
        out[0].clone(),
        out[1].clone(),
        out[2].clone(),
        out[3].clone(),
    ])
}

/// The cross-ratio coordinates of a corrugated polygon:
/// p_i = [V_{i+1}, V'_i, V_{i+k}, V'_{i+1}] on the diagonal (V_{i+1}V_{i+k}),
/// q_{i-r-1} = [P_i, V_{i+1}, Q_i, V_i] on the edge (V_i V_{i+1}), where
/// P_i = V_{i+1} - V_i and Q_i = x_i V_{i+1} + y_{i-1} V_i.
pub fn cross_ratio_coords(p: &LiftedPolygon) -> Result<PQState> {
    let shape = p.shape();
    let n = shape.n();
    let k = shape.k() as i64;
    let r = shape.r();
    let s = xy_from_polygon(p)?;
    let f = map_F(p)?;
    let wrap = |j: i64| (((j - 1) % n as i64 + n as i64) % n as i64) as usize;
    let mut pv = vec![Rational::zero(); n];
    let mut qv = vec![Rational::zero(); n];
    for i in 1..=n as i64 {
        let quad = [p.vertex(i + 1), f.vertex(i), p.vertex(i + k), f.vertex(i + 1)];
        let pts = restrict_to_line(&quad)?;
        pv[wrap(i)] = cross_ratio(&pts[0], &pts[1], &pts[2], &pts[3])?;

        let vi = p.vertex(i);
        let vi1 = p.vertex(i + 1);
        let pi: Vec<Rational> = (0..shape.k()).map(|t| &vi1[t] - &vi[t]).collect();
        let (x, y) = (s.x_at(i), s.y_at(i - 1));
        let qi: Vec<Rational> = (0..shape.k())
            .map(|t| &(&x * &vi1[t]) + &(&y * &vi[t]))
            .collect();
        let quad = [pi, vi1, qi, vi];
        let pts = restrict_to_line(&quad)?;
        qv[wrap(i - r - 1)] = cross_ratio(&pts[0], &pts[1], &pts[2], &pts[3])?;
    }
    PQState::new(shape, pv, qv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::{map_D, map_T, map_T_inv, project_pq};
    use crate::sample;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn state(k: usize, n: usize, seed: u64) -> XYState {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        sample::biregular_xy_state(MapShape::new(k, n).unwrap(), &mut rng)
    }

    #[test]
    fn cross_ratio_examples() {
        let inf = RP1Point::infinity();
        let m1 = RP1Point::from_affine(q(-1, 1));
        let z = RP1Point::from_affine(q(0, 1));
        let two = RP1Point::from_affine(q(2, 1));
        assert_eq!(cross_ratio(&inf, &m1, &z, &two).unwrap(), q(2, 1));
        // literal formula evaluation at [0,1,0,2] gives -1 (not a guessed 0)
        let one = RP1Point::from_affine(q(1, 1));
        assert_eq!(cross_ratio(&z, &one, &z, &two).unwrap(), q(-1, 1));
        // degenerate denominator
        assert!(matches!(
            cross_ratio(&z, &one, &one, &z),
            Err(Error::DegenerateQuadruple)
        ));
    }

    #[test]
    fn cross_ratio_mobius_invariance() {
        let pts: Vec<RP1Point> = [(1, 2), (-3, 1), (5, 7), (2, 9)]
            .iter()
            .map(|&(a, b)| RP1Point::from_affine(q(a, b)))
            .collect();
        let before = cross_ratio(&pts[0], &pts[1], &pts[2], &pts[3]).unwrap();
        // apply (u, v) -> (2u + 3v, u - 4v)
        let img: Vec<RP1Point> = pts
            .iter()
            .map(|p| {
                RP1Point::new(
                    &(&q(2, 1) * p.u()) + &(&q(3, 1) * p.v()),
                    &(p.u().clone()) - &(&q(4, 1) * p.v()),
                )
                .unwrap()
            })
            .collect();
        let after = cross_ratio(&img[0], &img[1], &img[2], &img[3]).unwrap();
        assert_eq!(before, after);
    }

    #[test]
    fn recurrence_unit_example() {
        // (3,5) with x = y = 1: V_4 = (1,1,1)
        let shape = MapShape::new(3, 5).unwrap();
        let ones = XYState::new(shape, vec![q(1, 1); 5], vec![q(1, 1); 5]).unwrap();
        let p = polygon_from_xy(&ones).unwrap();
        assert_eq!(p.vertex(4), vec![q(1, 1); 3]);
    }

    #[test]
    fn polygon_roundtrips() {
        for (k, n) in [(3, 5), (4, 9)] {
            let s = state(k, n, 17 + (10 * k + n) as u64);
            let p = polygon_from_xy(&s).unwrap();
            assert!(p.is_corrugated());
            assert_eq!(xy_from_polygon(&p).unwrap(), s);
            // monodromy keeps matching beyond the defining frame
            for i in 1..=(k as i64 + 2) {
                let lhs = mat_vec(p.monodromy(), &p.vertices()[(i - 1) as usize]);
                let rhs = p.vertex(i + n as i64);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn gauge_invariance_of_coordinates() {
        let s = state(3, 5, 23);
        let p = polygon_from_xy(&s).unwrap();
        let scales = [q(2, 1), q(-1, 3), q(5, 2), q(1, 7), q(-4, 5)];
        let verts: Vec<Vec<Rational>> = p
            .vertices()
            .iter()
            .zip(scales.iter())
            .map(|(v, c)| v.iter().map(|t| t * c).collect())
            .collect();
        let rescaled = LiftedPolygon::new(p.shape(), verts, p.monodromy().to_vec()).unwrap();
        assert_eq!(xy_from_polygon(&rescaled).unwrap(), s);
    }

    #[test]
    fn constant_coefficient_polygon() {
        // a_i = 2, b_i = 1, c_i = 1 at k = 3 gives x = 1/4, y = 1/8
        let shape = MapShape::new(3, 5).unwrap();
        let mut verts: Vec<Vec<Rational>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| if i == j { q(1, 1) } else { q(0, 1) })
                    .collect()
            })
            .collect();
        for i in 0..5usize {
            let next: Vec<Rational> = (0..3)
                .map(|t| {
                    &(&(&q(2, 1) * &verts[i + 2][t]) + &verts[i + 1][t]) + &verts[i][t]
                })
                .collect();
            verts.push(next);
        }
        let mono: Vec<Vec<Rational>> = (0..3)
            .map(|row| (0..3).map(|col| verts[5 + col][row].clone()).collect())
            .collect();
        let p = LiftedPolygon::new(shape, verts[..5].to_vec(), mono).unwrap();
        let s = xy_from_polygon(&p).unwrap();
        assert!(s.x().iter().all(|v| *v == q(1, 4)));
        assert!(s.y().iter().all(|v| *v == q(1, 8)));
    }

    #[test]
    fn theorem_corrug_identities() {
        for (k, n) in [(3, 5), (4, 9)] {
            let s = state(k, n, 31 + (10 * k + n) as u64);
            let shape = s.shape();
            let (r, rp) = (shape.r(), shape.rprime());
            let p = polygon_from_xy(&s).unwrap();

            let f = map_F(&p).unwrap();
            assert_eq!(
                xy_from_polygon(&f).unwrap(),
                map_T(&s.shift(rp + 1)).unwrap(),
                "F coords ({k},{n})"
            );
            assert!(f.is_corrugated());
            let oracle = map_F_oracle(&p).unwrap();
            assert!(polygons_proj_eq(&f, &oracle, 0), "F oracle ({k},{n})");

            let g = map_G(&p).unwrap();
            assert_eq!(
                xy_from_polygon(&g).unwrap(),
                map_T_inv(&s.shift(r + 1)).unwrap(),
                "G coords ({k},{n})"
            );
            assert!(g.is_corrugated());

            // G(F(p)) is the vertex relabeling by k
            let gf = map_G(&f).unwrap();
            assert!(polygons_proj_eq(&gf, &p, k as i64), "G o F shift ({k},{n})");
        }
    }

    #[test]
    fn duality_identities() {
        for (k, n) in [(3, 5), (4, 9)] {
            let s = state(k, n, 47 + (10 * k + n) as u64);
            let shape = s.shape();
            let rp = shape.rprime();
            let p = polygon_from_xy(&s).unwrap();
            let w = dualize(&p).unwrap();
            assert!(w.is_corrugated(), "dual corrugated ({k},{n})");
            let coords = xy_from_polygon(&w).unwrap();
            let d = map_D(&s.shift(rp)).unwrap();
            let sign = if k % 2 == 0 { q(1, 1) } else { q(-1, 1) };
            let want = XYState::new(
                shape,
                d.x().iter().map(|v| v * &sign).collect(),
                d.y().iter().map(|v| v * &sign).collect(),
            )
            .unwrap();
            assert_eq!(coords, want, "dual coords ({k},{n})");

            // duality conjugates F and G*: dualize(F(p)) = G(dualize(p))
            let lhs = dualize(&map_F(&p).unwrap()).unwrap();
            let rhs = map_G(&w).unwrap();
            assert!(polygons_proj_eq(&lhs, &rhs, 0), "Delta o F = G* o Delta ({k},{n})");
        }
    }

    #[test]
    fn cross_ratio_coords_match_projection() {
        for (k, n) in [(3, 5), (4, 9)] {
            let s = state(k, n, 61 + (10 * k + n) as u64);
            let p = polygon_from_xy(&s).unwrap();
            let pq = cross_ratio_coords(&p).unwrap();
            assert_eq!(pq, project_pq(&s).unwrap(), "cell ({k},{n})");
            assert_eq!(pq.level(), Rational::one());
        }
    }
}
