//! The quiver Q_{k,n}, the log-canonical Poisson brackets on (p,q) and (x,y),
//! Casimirs, exact rank, and bracket evaluation through exact jets.

use crate::dynamics::{t_forward, MapShape, PQState, XYState};
use crate::error::{Error, Result};
use crate::kernel::linalg::int_matrix_rank;
use crate::kernel::{Jet, Rational};
use crate::sample;
use num::bigint::BigInt;
use num_traits::Zero;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

/// Skew-adjacency matrix of the bipartite quiver Q_{k,n}: rows/cols 1..n are
/// p-vertices, n+1..2n are q-vertices; a_{uv} = #(u -> v) - #(v -> u).
#[derive(Clone, PartialEq, Debug)]
pub struct Quiver {
    shape: MapShape,
    adj: Vec<Vec<i64>>,
}

impl Quiver {
    pub fn shape(&self) -> MapShape {
        self.shape
    }

    pub fn adjacency(&self) -> &[Vec<i64>] {
        &self.adj
    }

    /// Signed multiplicity between vertex a and b (0-based over 2n).
    pub fn entry(&self, a: usize, b: usize) -> i64 {
        self.adj[a][b]
    }

    /// (in, out) degree of a vertex, counting edge multiplicity.
    pub fn degrees(&self, v: usize) -> (i64, i64) {
        let out: i64 = self.adj[v].iter().filter(|&&e| e > 0).sum();
        let inc: i64 = self.adj[v].iter().filter(|&&e| e < 0).map(|e| -e).sum();
        (inc, out)
    }
}

/// Builds Q_{k,n} from the closed-form coupling: {p_i, q_j} carries +1 for
/// j = i-r-1 and j = i+r'+1, -1 for j = i-r and j = i+r' (mod n); the p-p and
/// q-q blocks vanish.
pub fn build_quiver(shape: MapShape) -> Quiver {
    let n = shape.n();
    let (r, rp) = (shape.r(), shape.rprime());
    let mut adj = vec![vec![0i64; 2 * n]; 2 * n];
    let wrap = |j: i64| -> usize { (((j - 1) % n as i64 + n as i64) % n as i64) as usize };
    for i in 1..=n as i64 {
        for (j, s) in [
            (i - r - 1, 1),
            (i + rp + 1, 1),
            (i - r, -1),
            (i + rp, -1),
        ] {
            let pi = (i - 1) as usize;
            let qj = n + wrap(j);
            adj[pi][qj] += s;
            adj[qj][pi] -= s;
        }
    }
    Quiver { shape, adj }
}

/// Coordinate labels on the (p, q) torus; indices are 1-based cyclic.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PqCoord {
    P(i64),
    Q(i64),
}

impl PqCoord {
    fn flat(&self, n: usize) -> usize {
        let wrap = |i: i64| (((i - 1) % n as i64 + n as i64) % n as i64) as usize;
        match *self {
            PqCoord::P(i) => wrap(i),
            PqCoord::Q(i) => n + wrap(i),
        }
    }

    fn value(&self, s: &PQState) -> Rational {
        match *self {
            PqCoord::P(i) => s.p_at(i),
            PqCoord::Q(i) => s.q_at(i),
        }
    }
}

/// {v_a, v_b} = a_{ab} v_a v_b under the quiver bracket.
pub fn bracket_pq(quiver: &Quiver, s: &PQState, a: PqCoord, b: PqCoord) -> Rational {
    let n = quiver.shape.n();
    let coeff = quiver.adj[a.flat(n)][b.flat(n)];
    &(&a.value(s) * &b.value(s)) * &Rational::from_int(coeff)
}

/// Log-canonical structure matrix on (x, y): {log u_a, log u_b} = Omega_ab
/// with coordinates ordered (x_1..x_n, y_1..y_n).
#[derive(Clone, PartialEq, Debug)]
pub struct BracketSpec {
    shape: MapShape,
    omega: Vec<Vec<i64>>,
}

impl BracketSpec {
    pub fn shape(&self) -> MapShape {
        self.shape
    }

    pub fn omega(&self) -> &[Vec<i64>] {
        &self.omega
    }

    pub fn entry(&self, a: usize, b: usize) -> i64 {
        self.omega[a][b]
    }
}

/// Assembles Omega from the cyclic-shift power sums
/// Omega_x = sum_{i=1}^{k-2} (C^{-i} - C^i), Omega_y, Omega_yx analogously.
/// Only valid in the stable range n >= 2k-1.
pub fn build_bracket_xy(shape: MapShape) -> Result<BracketSpec> {
    if !shape.in_stable_range() {
        return Err(Error::UnstableRange { k: shape.k(), n: shape.n() });
    }
    let n = shape.n();
    let k = shape.k() as i64;
    // (C^t)_{ij} = 1 iff j = i + t (mod n)
    let add_pow = |m: &mut Vec<Vec<i64>>, t: i64, s: i64| {
        for i in 0..n {
            let j = ((i as i64 + t) % n as i64 + n as i64) % n as i64;
            m[i][j as usize] += s;
        }
    };
    let mut ox = vec![vec![0i64; n]; n];
    for i in 1..=k - 2 {
        add_pow(&mut ox, -i, 1);
        add_pow(&mut ox, i, -1);
    }
    let mut oy = vec![vec![0i64; n]; n];
    for i in 1..=k - 1 {
        add_pow(&mut oy, -i, 1);
        add_pow(&mut oy, i, -1);
    }
    let mut oyx = vec![vec![0i64; n]; n];
    for i in 1..=k - 1 {
        add_pow(&mut oyx, 1 - i, 1);
        add_pow(&mut oyx, i, -1);
    }
    let mut omega = vec![vec![0i64; 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            omega[i][j] = ox[i][j];
            omega[i][n + j] = -oyx[j][i];
            omega[n + i][j] = oyx[i][j];
            omega[n + i][n + j] = oy[i][j];
        }
    }
    Ok(BracketSpec { shape, omega })
}

/// Exact rank of Omega; always 2(n - gcd(k-1, n)), which callers assert.
pub fn poisson_rank(shape: MapShape) -> Result<usize> {
    let spec = build_bracket_xy(shape)?;
    let m: Vec<Vec<BigInt>> = spec
        .omega
        .iter()
        .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    Ok(int_matrix_rank(&m))
}

/// The 2d Casimir exponent vectors: for s = 1..d the monomials
/// prod_i x_{s + i(k-1)} and prod_i y_{s + i(k-1)} along (k-1)-step orbits.
/// Returned as length-2n integer exponent vectors (x block then y block).
pub fn casimirs(shape: MapShape) -> Result<Vec<Vec<i64>>> {
    if !shape.in_stable_range() {
        return Err(Error::UnstableRange { k: shape.k(), n: shape.n() });
    }
    let n = shape.n();
    let d = shape.d();
    let step = shape.k() - 1;
    let mut out = Vec::with_capacity(2 * d);
    for s in 0..d {
        let mut ex = vec![0i64; 2 * n];
        let mut ey = vec![0i64; 2 * n];
        for i in 0..n / d {
            let idx = (s + i * step) % n;
            ex[idx] += 1;
            ey[n + idx] += 1;
        }
        out.push(ex);
        out.push(ey);
    }
    Ok(out)
}

/// Lifts a state to jets seeded with the identity gradient frame, x block
/// first.
pub fn jet_lift(s: &XYState) -> Vec<Jet> {
    let n = s.shape().n();
    let dim = 2 * n;
    let mut vars = Vec::with_capacity(dim);
    for (i, v) in s.x().iter().enumerate() {
        vars.push(Jet::variable(dim, i, v.clone()));
    }
    for (i, v) in s.y().iter().enumerate() {
        vars.push(Jet::variable(dim, n + i, v.clone()));
    }
    vars
}

/// {f, g}(s) = sum_{a,b} Omega_ab u_a u_b (d_a f)(d_b g), evaluated with
/// exact jets so invariance checks are equalities of rationals.
pub fn bracket_fn<F, G>(spec: &BracketSpec, s: &XYState, f: F, g: G) -> Result<Rational>
where
    F: FnOnce(&[Jet]) -> Result<Jet>,
    G: FnOnce(&[Jet]) -> Result<Jet>,
{
    let vars = jet_lift(s);
    let jf = f(&vars)?;
    let jg = g(&vars)?;
    Ok(bracket_of_jets(spec, s, &jf, &jg))
}

/// Same pairing for jets that were already evaluated at `s`.
pub fn bracket_of_jets(spec: &BracketSpec, s: &XYState, jf: &Jet, jg: &Jet) -> Rational {
    let n = s.shape().n();
    let coord = |a: usize| -> Rational {
        if a < n {
            s.x()[a].clone()
        } else {
            s.y()[a - n].clone()
        }
    };
    let mut acc = Rational::zero();
    for a in 0..2 * n {
        let da = jf.deriv(a);
        if da.is_zero() {
            continue;
        }
        for b in 0..2 * n {
            let w = spec.omega[a][b];
            if w == 0 {
                continue;
            }
            let db = jg.deriv(b);
            if db.is_zero() {
                continue;
            }
            let term = &(&coord(a) * &coord(b)) * &(&da * &db);
            acc = &acc + &(&term * &Rational::from_int(w));
        }
    }
    acc
}

/// One invariance violation: coordinates (a, b) of the failing pair at a
/// trial state.
#[derive(Clone, Debug)]
pub struct InvarianceViolation {
    pub trial: usize,
    pub a: usize,
    pub b: usize,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Clone, Debug)]
pub struct InvarianceReport {
    pub trials: usize,
    pub violations: Vec<InvarianceViolation>,
}

impl InvarianceReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks {T_a, T_b}(s) = Omega_ab T_a(s) T_b(s) for every coordinate pair of
/// the map components, on `trials` random regular states. Draws that land on
/// the singular locus are rejected and redrawn (deterministically per trial).
pub fn check_T_invariance(shape: MapShape, trials: usize, seed: u64) -> Result<InvarianceReport> {
    let spec = build_bracket_xy(shape)?;
    let n = shape.n();
    let mut violations = Vec::new();
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (trial as u64).wrapping_mul(0x9e3779b97f4a7c15));
        let s = sample::regular_xy_state(shape, &mut rng);
        let vars = jet_lift(&s);
        let (jx, jy) = t_forward(shape, &vars[..n], &vars[n..])
            .expect("sampled state is T-regular");
        let image: Vec<Jet> = jx.into_iter().chain(jy).collect();
        for a in 0..2 * n {
            for b in 0..2 * n {
                let lhs = bracket_of_jets(&spec, &s, &image[a], &image[b]);
                let rhs = &(image[a].value() * image[b].value())
                    * &Rational::from_int(spec.omega[a][b]);
                if lhs != rhs {
                    violations.push(InvarianceViolation { trial, a, b, lhs, rhs });
                }
            }
        }
    }
    Ok(InvarianceReport { trials, violations })
}
