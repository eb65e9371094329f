//! The maps themselves: T_k and its inverse, the auxiliary maps D_k and C_k,
//! the (p,q)-dynamics, index shifts, the projection pi_k, and the pentagram
//! map in corner invariants.
//!
//! Index conventions, fixed once and asserted by the test suite:
//! sequences are stored 0-based for 1-based cyclic labels, and the shift acts
//! as `(shift(s, t))_i = s_{i+t}`.

use crate::error::{Error, Result};
use crate::kernel::{Rational, Scalar};
use num_traits::One;

/// (k, n) together with the derived offsets r = floor(k/2) - 1 and
/// r' = k - 2 - r.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MapShape {
    k: usize,
    n: usize,
}

impl MapShape {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k < 2 || k > n {
            return Err(Error::InvalidShape { k: k as i64, n: n as i64 });
        }
        Ok(MapShape { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> i64 {
        (self.k / 2) as i64 - 1
    }

    pub fn rprime(&self) -> i64 {
        (self.k as i64) - 2 - self.r()
    }

    /// gcd(k-1, n); controls the Casimir count and Poisson corank.
    pub fn d(&self) -> usize {
        num::integer::gcd(self.k - 1, self.n)
    }

    pub fn in_stable_range(&self) -> bool {
        self.n >= 2 * self.k - 1
    }

    /// 1-based cyclic label -> 0-based storage index.
    pub fn idx(&self, i: i64) -> usize {
        let n = self.n as i64;
        (((i - 1) % n + n) % n) as usize
    }
}

pub(crate) fn cyc(v: &[impl Clone], i: i64) -> usize {
    let n = v.len() as i64;
    (((i - 1) % n + n) % n) as usize
}

fn at<S: Clone>(v: &[S], i: i64) -> S {
    v[cyc(v, i)].clone()
}

fn shift_seq<S: Clone>(v: &[S], t: i64) -> Vec<S> {
    (1..=v.len() as i64).map(|i| at(v, i + t)).collect()
}

// ---------------------------------------------------------------------------
// states
// ---------------------------------------------------------------------------

/// The (x, y) phase point. All coordinates are nonzero; T-regularity
/// (sigma_i != 0) is checked where a map needs it.
#[derive(Clone, PartialEq, Debug)]
pub struct XYState {
    shape: MapShape,
    x: Vec<Rational>,
    y: Vec<Rational>,
}

impl XYState {
    pub fn new(shape: MapShape, x: Vec<Rational>, y: Vec<Rational>) -> Result<Self> {
        if x.len() != shape.n() || y.len() != shape.n() {
            return Err(Error::InvalidInput(format!(
                "coordinate length {} / {} does not match n = {}",
                x.len(),
                y.len(),
                shape.n()
            )));
        }
        if x.iter().chain(y.iter()).any(Rational::is_zero) {
            return Err(Error::SingularState("zero coordinate in (x, y)".into()));
        }
        Ok(XYState { shape, x, y })
    }

    pub fn shape(&self) -> MapShape {
        self.shape
    }

    pub fn x(&self) -> &[Rational] {
        &self.x
    }

    pub fn y(&self) -> &[Rational] {
        &self.y
    }

    pub fn x_at(&self, i: i64) -> Rational {
        at(&self.x, i)
    }

    pub fn y_at(&self, i: i64) -> Rational {
        at(&self.y, i)
    }

    pub fn sigma(&self, i: i64) -> Rational {
        &self.x_at(i) + &self.y_at(i)
    }

    pub fn is_t_regular(&self) -> bool {
        (1..=self.shape.n() as i64).all(|i| !self.sigma(i).is_zero())
    }

    pub fn shift(&self, t: i64) -> XYState {
        XYState {
            shape: self.shape,
            x: shift_seq(&self.x, t),
            y: shift_seq(&self.y, t),
        }
    }

    pub fn scale(&self, t: &Rational) -> Result<XYState> {
        if t.is_zero() {
            return Err(Error::SingularState("zero scaling".into()));
        }
        Ok(XYState {
            shape: self.shape,
            x: self.x.iter().map(|v| v * t).collect(),
            y: self.y.iter().map(|v| v * t).collect(),
        })
    }
}

/// The (p, q) face-weight point of the quiver Q_{k,n}.
#[derive(Clone, PartialEq, Debug)]
pub struct PQState {
    shape: MapShape,
    p: Vec<Rational>,
    q: Vec<Rational>,
}

impl PQState {
    pub fn new(shape: MapShape, p: Vec<Rational>, q: Vec<Rational>) -> Result<Self> {
        if p.len() != shape.n() || q.len() != shape.n() {
            return Err(Error::InvalidInput("coordinate length mismatch".into()));
        }
        if p.iter().chain(q.iter()).any(Rational::is_zero) {
            return Err(Error::SingularState("zero coordinate in (p, q)".into()));
        }
        Ok(PQState { shape, p, q })
    }

    pub fn shape(&self) -> MapShape {
        self.shape
    }

    pub fn p(&self) -> &[Rational] {
        &self.p
    }

    pub fn q(&self) -> &[Rational] {
        &self.q
    }

    pub fn p_at(&self, i: i64) -> Rational {
        at(&self.p, i)
    }

    pub fn q_at(&self, i: i64) -> Rational {
        at(&self.q, i)
    }

    /// The level c = prod p_i q_i, a Casimir of the quiver bracket.
    pub fn level(&self) -> Rational {
        self.p
            .iter()
            .chain(self.q.iter())
            .fold(Rational::one(), |acc, v| &acc * v)
    }

    pub fn shift(&self, t: i64) -> PQState {
        PQState {
            shape: self.shape,
            p: shift_seq(&self.p, t),
            q: shift_seq(&self.q, t),
        }
    }
}

/// Corner invariants (X_i, Y_i) of a twisted polygon in RP^2.
#[derive(Clone, PartialEq, Debug)]
pub struct CornerState {
    n: usize,
    x: Vec<Rational>,
    y: Vec<Rational>,
}

impl CornerState {
    pub fn new(x: Vec<Rational>, y: Vec<Rational>) -> Result<Self> {
        if x.len() != y.len() || x.len() < 3 {
            return Err(Error::InvalidInput("corner coordinate length mismatch".into()));
        }
        if x.iter().chain(y.iter()).any(Rational::is_zero) {
            return Err(Error::SingularState("zero corner invariant".into()));
        }
        Ok(CornerState { n: x.len(), x, y })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x(&self) -> &[Rational] {
        &self.x
    }

    pub fn y(&self) -> &[Rational] {
        &self.y
    }

    pub fn x_at(&self, i: i64) -> Rational {
        at(&self.x, i)
    }

    pub fn y_at(&self, i: i64) -> Rational {
        at(&self.y, i)
    }

    /// 1 - X_i Y_i != 0 for all i.
    pub fn is_pentagram_regular(&self) -> bool {
        (1..=self.n as i64).all(|i| {
            !(&Rational::one() - &(&self.x_at(i) * &self.y_at(i))).is_zero()
        })
    }

    pub fn shift(&self, t: i64) -> CornerState {
        CornerState {
            n: self.n,
            x: shift_seq(&self.x, t),
            y: shift_seq(&self.y, t),
        }
    }
}

// ---------------------------------------------------------------------------
// generic map kernels (shared by Rational states and Jet lifts)
// ---------------------------------------------------------------------------

fn gat<S: Scalar>(v: &[S], i: i64) -> S {
    v[cyc(v, i)].clone()
}

fn gsigma<S: Scalar>(x: &[S], y: &[S], i: i64) -> S {
    gat(x, i) + gat(y, i)
}

pub(crate) fn t_forward<S: Scalar>(
    shape: MapShape,
    x: &[S],
    y: &[S],
) -> Result<(Vec<S>, Vec<S>)> {
    let (n, r, rp) = (shape.n() as i64, shape.r(), shape.rprime());
    for i in 1..=n {
        if !gsigma(x, y, i).invertible() {
            return Err(Error::SingularState(format!("sigma_{i} = 0")));
        }
    }
    let xs = (1..=n)
        .map(|i| gat(x, i - rp - 1) * gsigma(x, y, i + r) / gsigma(x, y, i - rp - 1))
        .collect();
    let ys = (1..=n)
        .map(|i| gat(y, i - rp) * gsigma(x, y, i + r + 1) / gsigma(x, y, i - rp))
        .collect();
    Ok((xs, ys))
}

fn t_backward<S: Scalar>(shape: MapShape, x: &[S], y: &[S]) -> Result<(Vec<S>, Vec<S>)> {
    let (n, r, rp) = (shape.n() as i64, shape.r(), shape.rprime());
    for i in 1..=n {
        if !(gat(x, i + rp + 1) + gat(y, i + rp)).invertible() {
            return Err(Error::SingularState(format!(
                "x_{} + y_{} = 0",
                i + rp + 1,
                i + rp
            )));
        }
    }
    let ratio = |i: i64| {
        (gat(x, i - r) + gat(y, i - r - 1)) / (gat(x, i + rp + 1) + gat(y, i + rp))
    };
    let xs = (1..=n).map(|i| gat(x, i + rp + 1) * ratio(i)).collect();
    let ys = (1..=n).map(|i| gat(y, i + rp) * ratio(i)).collect();
    Ok((xs, ys))
}

fn range_product<S: Scalar>(x: &[S], y: &[S], from: i64, to: i64) -> S {
    // empty ranges (to < from) give 1, the convention that makes D_2^2 = id
    let mut acc = S::one();
    let mut j = from;
    while j <= to {
        acc = acc * (gat(y, j) / gat(x, j));
        j += 1;
    }
    acc
}

fn d_forward<S: Scalar>(shape: MapShape, x: &[S], y: &[S]) -> Result<(Vec<S>, Vec<S>)> {
    let (n, r, rp) = (shape.n() as i64, shape.r(), shape.rprime());
    for i in 1..=n {
        if !gat(x, i).invertible() {
            return Err(Error::SingularState(format!("x_{i} = 0")));
        }
    }
    let xs = (1..=n)
        .map(|i| range_product(x, y, i - rp, i + r - 1) / gat(x, i + r))
        .collect();
    let ys = (1..=n)
        .map(|i| range_product(x, y, i - rp, i + r) / gat(x, i + r + 1))
        .collect();
    Ok((xs, ys))
}

fn c_forward<S: Scalar>(shape: MapShape, x: &[S], y: &[S]) -> Result<(Vec<S>, Vec<S>)> {
    let (n, k) = (shape.n() as i64, shape.k() as i64);
    for i in 1..=n {
        if !gat(x, i).invertible() {
            return Err(Error::SingularState(format!("x_{i} = 0")));
        }
        if !gsigma(x, y, i).invertible() {
            return Err(Error::SingularState(format!("sigma_{i} = 0")));
        }
    }
    let pref = |i: i64| {
        gsigma(x, y, i - k + 1) / (gat(x, i - k + 1) * gsigma(x, y, i))
    };
    let xs = (1..=n)
        .map(|i| pref(i) * range_product(x, y, i - k + 2, i - 1))
        .collect();
    let ys = (1..=n)
        .map(|i| pref(i) * range_product(x, y, i - k + 2, i))
        .collect();
    Ok((xs, ys))
}

pub(crate) fn project_pq_generic<S: Scalar>(
    shape: MapShape,
    x: &[S],
    y: &[S],
) -> Result<(Vec<S>, Vec<S>)> {
    let (n, r) = (shape.n() as i64, shape.r());
    for i in 1..=n {
        if !gat(x, i).invertible() || !gat(y, i).invertible() {
            return Err(Error::SingularState("zero coordinate".into()));
        }
    }
    let p = (1..=n).map(|i| gat(y, i) / gat(x, i)).collect();
    let q = (1..=n).map(|i| gat(x, i + r + 1) / gat(y, i + r)).collect();
    Ok((p, q))
}

pub(crate) fn tbar_forward<S: Scalar>(
    shape: MapShape,
    p: &[S],
    q: &[S],
) -> Result<(Vec<S>, Vec<S>)> {
    let (n, r, rp) = (shape.n() as i64, shape.r(), shape.rprime());
    let opp = |i: i64| S::one() + gat(p, i);
    for i in 1..=n {
        if !gat(p, i).invertible() {
            return Err(Error::SingularState(format!("p_{i} = 0")));
        }
        if !opp(i).invertible() {
            return Err(Error::SingularState(format!("1 + p_{i} = 0")));
        }
    }
    let qs = (1..=n).map(|i| S::one() / gat(p, i + r - rp)).collect();
    let ps = (1..=n)
        .map(|i| {
            gat(q, i) * opp(i - rp - 1) * opp(i + r + 1) * gat(p, i - rp) * gat(p, i + r)
                / (opp(i - rp) * opp(i + r))
        })
        .collect();
    Ok((ps, qs))
}

// ---------------------------------------------------------------------------
// public maps
// ---------------------------------------------------------------------------

/// T_k. Defined on the T-regular locus (all sigma_i != 0).
pub fn map_T(s: &XYState) -> Result<XYState> {
    let (x, y) = t_forward(s.shape(), s.x(), s.y())?;
    XYState::new(s.shape(), x, y)
}

/// T_k^{-1} (= T_k^circ).
pub fn map_T_inv(s: &XYState) -> Result<XYState> {
    let (x, y) = t_backward(s.shape(), s.x(), s.y())?;
    XYState::new(s.shape(), x, y)
}

/// The auxiliary map D_k; D_k^2 = S_{r-r'} and T_k = D_k(C_k(s)).
pub fn map_D(s: &XYState) -> Result<XYState> {
    let (x, y) = d_forward(s.shape(), s.x(), s.y())?;
    XYState::new(s.shape(), x, y)
}

/// The involution C_k from the proof of the inverse formula.
pub fn map_C(s: &XYState) -> Result<XYState> {
    let (x, y) = c_forward(s.shape(), s.x(), s.y())?;
    XYState::new(s.shape(), x, y)
}

/// The projection pi_k onto face weights: p_i = y_i/x_i, q_i = x_{i+r+1}/y_{i+r}.
/// Its image always has level 1.
pub fn project_pq(s: &XYState) -> Result<PQState> {
    let (p, q) = project_pq_generic(s.shape(), s.x(), s.y())?;
    PQState::new(s.shape(), p, q)
}

/// The cluster dynamics Tbar_k on face weights; preserves the level.
pub fn map_Tbar(s: &PQState) -> Result<PQState> {
    let (p, q) = tbar_forward(s.shape(), s.p(), s.q())?;
    PQState::new(s.shape(), p, q)
}

/// The q-dynamics Tbar_k^circ = Tbar_k^{-1}.
pub fn map_Tbar_circ(s: &PQState) -> Result<PQState> {
    let (n, r, rp) = (s.shape().n() as i64, s.shape().r(), s.shape().rprime());
    let opq = |i: i64| &Rational::one() + &s.q_at(i);
    for i in 1..=n {
        if opq(i).is_zero() {
            return Err(Error::SingularState(format!("1 + q_{i} = 0")));
        }
    }
    let p = (1..=n)
        .map(|i| s.q_at(i - r + rp).inv())
        .collect::<Result<Vec<_>>>()?;
    let q = (1..=n)
        .map(|i| {
            let num = &(&(&s.p_at(i) * &opq(i - r)) * &opq(i + rp))
                * &(&s.q_at(i - r - 1) * &s.q_at(i + rp + 1));
            &num / &(&opq(i - r - 1) * &opq(i + rp + 1))
        })
        .collect();
    PQState::new(s.shape(), p, q)
}

/// Dbar_k: pbar_i = 1/q_i, qbar_i = 1/p_{i+r-r'}; Dbar_k^2 = S_{r-r'}.
pub fn map_Dbar(s: &PQState) -> Result<PQState> {
    let (n, r, rp) = (s.shape().n() as i64, s.shape().r(), s.shape().rprime());
    let p = (1..=n).map(|i| s.q_at(i).inv()).collect::<Result<Vec<_>>>()?;
    let q = (1..=n)
        .map(|i| s.p_at(i + r - rp).inv())
        .collect::<Result<Vec<_>>>()?;
    PQState::new(s.shape(), p, q)
}

/// The cross-k relabeling D_{k,n}: xbar_i = y_{i-r-1}, ybar_i = x_{i-r},
/// where r is taken from the target shape (target_k, n).
pub fn map_Dkn(target_k: usize, s: &XYState) -> Result<XYState> {
    let shape = MapShape::new(target_k, s.shape().n())?;
    let (n, r) = (shape.n() as i64, shape.r());
    let x = (1..=n).map(|i| s.y_at(i - r - 1)).collect();
    let y = (1..=n).map(|i| s.x_at(i - r)).collect();
    XYState::new(shape, x, y)
}

/// Dbar_{k,n}: pbar_i = q_{i - floor((n+r-r')/2)}, qbar_i = p_i, landing in
/// shape (target_k, n).
pub fn map_Dbar_kn(target_k: usize, s: &PQState) -> Result<PQState> {
    let n = s.shape().n();
    let src = s.shape();
    let m = (n as i64 + src.r() - src.rprime()).div_euclid(2);
    let shape = MapShape::new(target_k, n)?;
    let p = (1..=n as i64).map(|i| s.q_at(i - m)).collect();
    let q = (1..=n as i64).map(|i| s.p_at(i)).collect();
    PQState::new(shape, p, q)
}

/// The pentagram map written in corner invariants.
pub fn pentagram_corner(s: &CornerState) -> Result<CornerState> {
    let n = s.n() as i64;
    let one = Rational::one();
    let f = |i: i64| &one - &(&s.x_at(i) * &s.y_at(i));
    for i in 1..=n {
        if f(i).is_zero() {
            return Err(Error::SingularState(format!("1 - X_{i} Y_{i} = 0")));
        }
    }
    let x = (1..=n).map(|i| &(&s.x_at(i) * &f(i - 1)) / &f(i + 1)).collect();
    let y = (1..=n).map(|i| &(&s.y_at(i + 1) * &f(i + 2)) / &f(i)).collect();
    CornerState::new(x, y)
}

/// The cyclic shift conjugating the corner-invariant pentagram map to T_3:
/// corner_to_xy(shift(pentagram(s), PENTAGRAM_SHIFT)) = T_3(corner_to_xy(s)).
/// Calibrated once against exact identities and frozen.
pub const PENTAGRAM_SHIFT: i64 = -1;

/// Change of variables x_i = Y_i, y_i = -Y_i X_{i+1} Y_{i+1} (k = 3).
pub fn corner_to_xy(s: &CornerState) -> Result<XYState> {
    let shape = MapShape::new(3, s.n())?;
    let n = s.n() as i64;
    let x = (1..=n).map(|i| s.y_at(i)).collect();
    let y = (1..=n)
        .map(|i| -&(&s.y_at(i) * &(&s.x_at(i + 1) * &s.y_at(i + 1))))
        .collect();
    XYState::new(shape, x, y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn ints(vals: &[i64]) -> Vec<Rational> {
        vals.iter().map(|&v| Rational::from_int(v)).collect()
    }

    fn state35() -> XYState {
        let shape = MapShape::new(3, 5).unwrap();
        XYState::new(shape, ints(&[1, 2, 3, 4, 5]), ints(&[1, 1, 1, 1, 1])).unwrap()
    }

    #[test]
    fn shape_offsets() {
        for (k, r, rp) in [(2, 0, 0), (3, 0, 1), (4, 1, 1), (5, 1, 2), (6, 2, 2)] {
            let s = MapShape::new(k, 11).unwrap();
            assert_eq!((s.r(), s.rprime()), (r, rp));
            assert_eq!(s.r() + s.rprime(), k as i64 - 2);
        }
        assert!(MapShape::new(1, 5).is_err());
        assert!(MapShape::new(6, 5).is_err());
    }

    #[test]
    fn t_constant_state_fixed() {
        let shape = MapShape::new(3, 5).unwrap();
        let s = XYState::new(shape, ints(&[1; 5]), ints(&[1; 5])).unwrap();
        assert_eq!(map_T(&s).unwrap(), s);
        assert_eq!(map_T_inv(&s).unwrap(), s);
    }

    #[test]
    fn t_hand_evaluations() {
        // (3,5): x*_1 = x_4 sigma_1 / sigma_4 = 4*2/5
        let t = map_T(&state35()).unwrap();
        assert_eq!(t.x_at(1), q(8, 5));
        // (2,3): x*_1 = x_3 sigma_1 / sigma_3 = 3*2/4
        let shape = MapShape::new(2, 3).unwrap();
        let s = XYState::new(shape, ints(&[1, 2, 3]), ints(&[1, 1, 1])).unwrap();
        assert_eq!(map_T(&s).unwrap().x_at(1), q(3, 2));
    }

    #[test]
    fn t_inverse_roundtrip() {
        let s = state35();
        assert_eq!(map_T_inv(&map_T(&s).unwrap()).unwrap(), s);
        assert_eq!(map_T(&map_T_inv(&s).unwrap()).unwrap(), s);
        // the inverse formula reads x*_1 = x_3 (x_1 + y_5)/(x_3 + y_2) here
        let inv = map_T_inv(&s).unwrap();
        assert_eq!(inv.x_at(1), q(3, 2));
    }

    #[test]
    fn d_empty_product_convention_k2() {
        let shape = MapShape::new(2, 3).unwrap();
        let s = XYState::new(shape, ints(&[2, 3, 5]), ints(&[1, 1, 1])).unwrap();
        let d = map_D(&s).unwrap();
        // x*_i = 1/x_i, y*_i = y_i/(x_i x_{i+1})
        assert_eq!(d.x_at(1), q(1, 2));
        assert_eq!(d.y_at(1), q(1, 6));
    }

    #[test]
    fn c_involution_and_composition() {
        let s = state35();
        let c = map_C(&s).unwrap();
        assert_eq!(map_C(&c).unwrap(), s);
        // the factorization applies C first: T = D(C(s))
        let dc = map_D(&c).unwrap();
        assert_eq!(dc, map_T(&s).unwrap());
    }

    #[test]
    fn d_squared_is_shift() {
        let s = state35();
        let r = s.shape().r();
        let rp = s.shape().rprime();
        let dd = map_D(&map_D(&s).unwrap()).unwrap();
        assert_eq!(dd, s.shift(r - rp));
    }

    #[test]
    fn projection_and_level() {
        let s = state35();
        let pq = project_pq(&s).unwrap();
        assert_eq!(pq.p_at(2), q(1, 2));
        assert_eq!(pq.q_at(1), q(2, 1)); // x_2 / y_1
        assert_eq!(pq.level(), Rational::one());
        // scaling invariance of the projection
        let scaled = s.scale(&q(7, 3)).unwrap();
        assert_eq!(project_pq(&scaled).unwrap(), pq);
    }

    #[test]
    fn tbar_fixed_point_and_inverse() {
        let shape = MapShape::new(3, 5).unwrap();
        let ones = PQState::new(shape, ints(&[1; 5]), ints(&[1; 5])).unwrap();
        assert_eq!(map_Tbar(&ones).unwrap(), ones);
        // q*_i = 1/p_{i-1} for k=3
        let s = project_pq(&state35()).unwrap();
        let t = map_Tbar(&s).unwrap();
        for i in 1..=5 {
            assert_eq!(t.q_at(i), s.p_at(i - 1).inv().unwrap());
        }
        assert_eq!(map_Tbar_circ(&t).unwrap(), s);
    }

    #[test]
    fn shift_group_law() {
        let s = state35();
        assert_eq!(s.shift(0), s);
        assert_eq!(s.shift(5), s);
        assert_eq!(s.shift(2).shift(3), s.shift(5));
        assert_eq!(s.shift(-1).shift(1), s);
    }

    #[test]
    fn pentagram_formula() {
        // constant state is fixed
        let c = CornerState::new(
            vec![q(2, 1); 5],
            vec![q(1, 3); 5],
        )
        .unwrap();
        assert_eq!(pentagram_corner(&c).unwrap(), c);
        // hand evaluation with Y = 1/3: X*_1 = X_1 (1 - X_5 Y_5)/(1 - X_2 Y_2) = -2
        // (X_3 adjusted off the 1 - X_3 Y_3 = 0 wall; the component formula
        // only reads indices 2 and 5)
        let s = CornerState::new(ints(&[1, 2, 4, 4, 5]), vec![q(1, 3); 5]).unwrap();
        assert!(s.is_pentagram_regular());
        assert_eq!(pentagram_corner(&s).unwrap().x_at(1), q(-2, 1));
    }

    #[test]
    fn corner_change_of_variables() {
        let ones = CornerState::new(ints(&[1; 5]), ints(&[1; 5])).unwrap();
        assert!(pentagram_corner(&ones).is_err()); // 1 - XY = 0
        let s = corner_to_xy(&ones).unwrap();
        assert!(s.x().iter().all(|v| *v == Rational::one()));
        assert!(s.y().iter().all(|v| *v == q(-1, 1)));
        // y_i / x_i = -X_{i+1} Y_{i+1}
        let c = CornerState::new(ints(&[1, 2, 3, 4, 5]), vec![q(1, 3); 5]).unwrap();
        let xy = corner_to_xy(&c).unwrap();
        for i in 1..=5 {
            let lhs = &xy.y_at(i) / &xy.x_at(i);
            let rhs = -&(&c.x_at(i + 1) * &c.y_at(i + 1));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn singular_states_rejected() {
        let shape = MapShape::new(3, 5).unwrap();
        // sigma_1 = 0
        let s = XYState::new(
            shape,
            ints(&[1, 2, 3, 4, 5]),
            vec![q(-1, 1), q(1, 1), q(1, 1), q(1, 1), q(1, 1)],
        )
        .unwrap();
        assert!(matches!(map_T(&s), Err(Error::SingularState(_))));
        assert!(XYState::new(shape, ints(&[0, 1, 1, 1, 1]), ints(&[1; 5])).is_err());
    }
}
