//! Deterministic random states for tests, verification sweeps and the CLI.
//!
//! Numerators are uniform in [-9, 9] \ {0} and denominators in [1, 9]; small
//! heights keep exact arithmetic fast over long orbits. Draws that land on a
//! singular locus are rejected and redrawn.

use crate::dynamics::{map_T, CornerState, MapShape, PQState, XYState};
use crate::kernel::{GaussRational, Rational};
use crate::leapfrog::{LeapfrogState, Mobius};
use crate::geometry::RP1Point;
use num_traits::One;
use rand::Rng;

pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    let mut n = 0i64;
    while n == 0 {
        n = rng.gen_range(-9..=9);
    }
    Rational::new(n, rng.gen_range(1..=9))
}

pub fn small_gauss<R: Rng>(rng: &mut R) -> GaussRational {
    GaussRational::new(small_rational(rng), small_rational(rng))
}

/// A T-regular (x, y) state.
pub fn regular_xy_state<R: Rng>(shape: MapShape, rng: &mut R) -> XYState {
    loop {
        let x: Vec<Rational> = (0..shape.n()).map(|_| small_rational(rng)).collect();
        let y: Vec<Rational> = (0..shape.n()).map(|_| small_rational(rng)).collect();
        if let Ok(s) = XYState::new(shape, x, y) {
            if s.is_t_regular() {
                return s;
            }
        }
    }
}

/// A state regular for T_k and for T_k^{-1} (all sigma_i != 0 and all
/// x_{i+r'+1} + y_{i+r'} != 0); what the geometric diagonal maps need.
pub fn biregular_xy_state<R: Rng>(shape: MapShape, rng: &mut R) -> XYState {
    loop {
        let s = regular_xy_state(shape, rng);
        let rp = shape.rprime();
        let inv_regular = (1..=shape.n() as i64)
            .all(|i| !(&s.x_at(i + rp + 1) + &s.y_at(i + rp)).is_zero());
        if inv_regular {
            return s;
        }
    }
}

/// A state whose forward orbit stays regular for `iters` steps of T_k.
pub fn orbit_safe_xy_state<R: Rng>(shape: MapShape, iters: usize, rng: &mut R) -> XYState {
    'outer: loop {
        let s = regular_xy_state(shape, rng);
        let mut cur = s.clone();
        for _ in 0..iters {
            match map_T(&cur) {
                Ok(next) => cur = next,
                Err(_) => continue 'outer,
            }
        }
        return s;
    }
}

/// A (p, q) state on the level hypersurface prod p_i q_i = c.
pub fn level_pq_state<R: Rng>(shape: MapShape, level: &Rational, rng: &mut R) -> PQState {
    assert!(!level.is_zero(), "level must be nonzero");
    loop {
        let p: Vec<Rational> = (0..shape.n()).map(|_| small_rational(rng)).collect();
        let mut q: Vec<Rational> = (0..shape.n()).map(|_| small_rational(rng)).collect();
        let partial = p
            .iter()
            .chain(q.iter().take(shape.n() - 1))
            .fold(Rational::one(), |acc, v| &acc * v);
        let last = level / &partial;
        if last.is_zero() {
            continue;
        }
        *q.last_mut().unwrap() = last;
        if let Ok(s) = PQState::new(shape, p, q) {
            // reject draws that sit on the 1+p = 0 or 1+q = 0 walls
            let one = Rational::one();
            let wall = s
                .p()
                .iter()
                .chain(s.q().iter())
                .any(|v| (&one + v).is_zero());
            if !wall {
                return s;
            }
        }
    }
}

/// A pentagram-regular corner state (all 1 - X_i Y_i != 0).
pub fn regular_corner_state<R: Rng>(n: usize, rng: &mut R) -> CornerState {
    loop {
        let x: Vec<Rational> = (0..n).map(|_| small_rational(rng)).collect();
        let y: Vec<Rational> = (0..n).map(|_| small_rational(rng)).collect();
        if let Ok(s) = CornerState::new(x, y) {
            if s.is_pentagram_regular() {
                return s;
            }
        }
    }
}

/// A leapfrog state: two affine-finite twisted polygons with a shared random
/// Moebius monodromy (identity when `closed`). Points are pairwise generic
/// enough for one leapfrog step.
pub fn leapfrog_state<R: Rng>(n: usize, closed: bool, rng: &mut R) -> LeapfrogState {
    loop {
        let mono = if closed {
            Mobius::identity()
        } else {
            let m = Mobius::new(
                small_rational(rng),
                small_rational(rng),
                small_rational(rng),
                small_rational(rng),
            );
            match m {
                Ok(m) => m,
                Err(_) => continue,
            }
        };
        let s_minus: Vec<RP1Point> = (0..n)
            .map(|_| RP1Point::from_affine(small_rational(rng)))
            .collect();
        let s: Vec<RP1Point> = (0..n)
            .map(|_| RP1Point::from_affine(small_rational(rng)))
            .collect();
        if let Ok(st) = LeapfrogState::new(s_minus, s, mono) {
            if st.local_rule_defined() {
                return st;
            }
        }
    }
}
