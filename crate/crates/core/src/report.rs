//! Identity-verification driver shared by the acceptance suite and the CLI
//! `verify` subcommand. Every check is deterministic in its seed; failures
//! carry enough detail to locate the violated identity.

use crate::dynamics::{
    corner_to_xy, map_C, map_D, map_Dbar, map_Dbar_kn, map_Dkn, map_T, map_T_inv, map_Tbar,
    map_Tbar_circ, pentagram_corner, project_pq, MapShape, XYState, PENTAGRAM_SHIFT,
};
use crate::error::Error;
use crate::geometry::{
    cross_ratio_coords, dualize, map_F, map_F_oracle, map_G, plane, polygon_from_xy,
    polygons_proj_eq, xy_from_polygon,
};
use crate::kernel::Rational;
use crate::lax;
use crate::leapfrog;
use crate::poisson;
use crate::sample;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub cell: Option<(usize, usize)>,
    pub status: Status,
    pub detail: String,
}

impl CheckResult {
    fn pass(name: impl Into<String>, cell: Option<(usize, usize)>) -> Self {
        CheckResult { name: name.into(), cell, status: Status::Pass, detail: String::new() }
    }

    fn fail(name: impl Into<String>, cell: Option<(usize, usize)>, detail: impl Into<String>) -> Self {
        CheckResult { name: name.into(), cell, status: Status::Fail, detail: detail.into() }
    }

    fn skip(name: impl Into<String>, cell: Option<(usize, usize)>, detail: impl Into<String>) -> Self {
        CheckResult { name: name.into(), cell, status: Status::Skip, detail: detail.into() }
    }

    pub fn ok(&self) -> bool {
        self.status != Status::Fail
    }
}

fn outcome(
    name: &str,
    cell: (usize, usize),
    res: Result<bool, Error>,
) -> CheckResult {
    match res {
        Ok(true) => CheckResult::pass(name, Some(cell)),
        Ok(false) => CheckResult::fail(name, Some(cell), "identity violated"),
        Err(Error::UnstableRange { k, n }) => CheckResult::skip(
            name,
            Some(cell),
            format!("UnstableRange: n = {n} < 2k - 1 for k = {k}"),
        ),
        Err(e) => CheckResult::fail(name, Some(cell), e.to_string()),
    }
}

/// The verification grids, as shipped.
pub const FULL_GRID: [(usize, usize); 8] =
    [(2, 3), (2, 5), (3, 5), (3, 6), (3, 8), (4, 7), (4, 9), (5, 11)];
pub const INVOLUTION_GRID: [(usize, usize); 4] = [(2, 5), (3, 5), (3, 6), (4, 7)];
pub const GEOMETRY_GRID: [(usize, usize); 4] = [(3, 5), (3, 8), (4, 9), (5, 11)];

fn cell_rng(seed: u64, cell: (usize, usize), salt: u64) -> ChaCha8Rng {
    let mix = seed
        ^ (cell.0 as u64).wrapping_mul(0x9e3779b97f4a7c15)
        ^ (cell.1 as u64).wrapping_mul(0xc2b2ae3d27d4eb4f)
        ^ salt.wrapping_mul(0x165667b19e3779f9);
    ChaCha8Rng::seed_from_u64(mix)
}

// ---------------------------------------------------------------------------
// criterion 1: conservation
// ---------------------------------------------------------------------------

pub fn conservation_checks(
    cells: &[(usize, usize)],
    states_per_cell: usize,
    iterations: usize,
    seed: u64,
) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for &cell in cells {
        let shape = MapShape::new(cell.0, cell.1).expect("grid cell");
        let name = "conservation:I_ij";
        let mut failed = None;
        'states: for t in 0..states_per_cell {
            let mut rng = cell_rng(seed, cell, t as u64);
            let s0 = sample::orbit_safe_xy_state(shape, iterations, &mut rng);
            let reference = match lax::spectral(&s0) {
                Ok(r) => r,
                Err(e) => {
                    failed = Some(format!("state {t}: {e}"));
                    break;
                }
            };
            let mut cur = s0;
            for it in 0..iterations {
                cur = match map_T(&cur) {
                    Ok(c) => c,
                    Err(e) => {
                        failed = Some(format!("state {t} iteration {it}: {e}"));
                        break 'states;
                    }
                };
                match lax::spectral(&cur) {
                    Ok(table) if table.poly() == reference.poly() => {}
                    Ok(_) => {
                        failed = Some(format!("state {t}: I_ij changed at iteration {}", it + 1));
                        break 'states;
                    }
                    Err(e) => {
                        failed = Some(format!("state {t} iteration {it}: {e}"));
                        break 'states;
                    }
                }
            }
        }
        out.push(match failed {
            None => CheckResult::pass(name, Some(cell)),
            Some(d) => CheckResult::fail(name, Some(cell), d),
        });
    }
    out
}

// ---------------------------------------------------------------------------
// criterion 2: involution of the integrals
// ---------------------------------------------------------------------------

pub fn involution_checks(
    cells: &[(usize, usize)],
    states_per_cell: usize,
    seed: u64,
) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for &cell in cells {
        let shape = MapShape::new(cell.0, cell.1).expect("grid cell");
        let name = "involution:{I_ab,I_cd}=0";
        let spec = match poisson::build_bracket_xy(shape) {
            Ok(s) => s,
            Err(e) => {
                out.push(outcome(name, cell, Err(e)));
                continue;
            }
        };
        let n = shape.n();
        let mut failed = None;
        'outer: for t in 0..states_per_cell {
            let mut rng = cell_rng(seed, cell, 1000 + t as u64);
            let s = sample::regular_xy_state(shape, &mut rng);
            let vars = poisson::jet_lift(&s);
            let poly = match lax::spectral_generic(shape, &vars[..n], &vars[n..]) {
                Ok(p) => p,
                Err(e) => {
                    failed = Some(e.to_string());
                    break;
                }
            };
            // gradient and value of every I_ij
            let coords: Vec<Rational> = s.x().iter().chain(s.y()).cloned().collect();
            let entries: Vec<(Vec<Rational>, (u32, u32))> = poly
                .support()
                .map(|(e, jet)| ((0..2 * n).map(|a| jet.deriv(a)).collect(), e))
                .collect();
            // w[f][b] = sum_a Omega_ab u_a df_a
            let w: Vec<Vec<Rational>> = entries
                .iter()
                .map(|(g, _)| {
                    (0..2 * n)
                        .map(|b| {
                            let mut acc = Rational::zero();
                            for a in 0..2 * n {
                                let o = spec.entry(a, b);
                                if o != 0 && !g[a].is_zero() {
                                    acc = &acc
                                        + &(&(&coords[a] * &g[a]) * &Rational::from_int(o));
                                }
                            }
                            acc
                        })
                        .collect()
                })
                .collect();
            for (f, (_, ef)) in entries.iter().enumerate() {
                for (g, (gg, eg)) in entries.iter().enumerate() {
                    if g <= f {
                        continue;
                    }
                    let mut acc = Rational::zero();
                    for b in 0..2 * n {
                        if !w[f][b].is_zero() && !gg[b].is_zero() {
                            acc = &acc + &(&(&w[f][b] * &coords[b]) * &gg[b]);
                        }
                    }
                    if !acc.is_zero() {
                        failed = Some(format!(
                            "state {t}: {{I_{:?}, I_{:?}}} = {} != 0",
                            ef, eg, acc
                        ));
                        break 'outer;
                    }
                }
            }
        }
        out.push(match failed {
            None => CheckResult::pass(name, Some(cell)),
            Some(d) => CheckResult::fail(name, Some(cell), d),
        });
    }
    out
}

// ---------------------------------------------------------------------------
// criterion 3: Poisson invariance
// ---------------------------------------------------------------------------

pub fn poisson_invariance_checks(
    cells: &[(usize, usize)],
    trials: usize,
    seed: u64,
) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for &cell in cells {
        let shape = MapShape::new(cell.0, cell.1).expect("grid cell");
        let name = "poisson:T-invariance";
        match poisson::check_T_invariance(shape, trials, seed ^ 0xabcd) {
            Ok(rep) if rep.passed() => out.push(CheckResult::pass(name, Some(cell))),
            Ok(rep) => out.push(CheckResult::fail(
                name,
                Some(cell),
                format!("{} violations, first: {:?}", rep.violations.len(), rep.violations.first()),
            )),
            Err(e) => out.push(outcome(name, cell, Err(e))),
        }
    }
    out
}

// ---------------------------------------------------------------------------
// criterion 4: rank, Casimirs, independence count
// ---------------------------------------------------------------------------

pub fn rank_casimir_checks(cells: &[(usize, usize)], seed: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for &cell in cells {
        let shape = MapShape::new(cell.0, cell.1).expect("grid cell");
        let (n, d) = (shape.n(), shape.d());
        // rank formula
        out.push(outcome(
            "rank:2(n-d)",
            cell,
            poisson::poisson_rank(shape).map(|r| r == 2 * (n - d)),
        ));
        // Casimirs annihilate every coordinate
        let casimir_ok = (|| -> Result<bool, Error> {
            let spec = poisson::build_bracket_xy(shape)?;
            let cas = poisson::casimirs(shape)?;
            if cas.len() != 2 * d {
                return Ok(false);
            }
            for v in &cas {
                for a in 0..2 * n {
                    let row: i64 = (0..2 * n).map(|b| spec.entry(a, b) * v[b]).sum();
                    if row != 0 {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        })();
        out.push(outcome("rank:casimirs-commute", cell, casimir_ok));
        // Jacobian of all I_ij has rank n + d at a random point
        let mut rng = cell_rng(seed, cell, 2000);
        let s = sample::regular_xy_state(shape, &mut rng);
        out.push(outcome(
            "rank:jacobian-n+d",
            cell,
            lax::integral_jacobian_rank(&s).map(|r| r == n + d),
        ));
    }
    out
}

// ---------------------------------------------------------------------------
// criterion 5: spectral identities
// ---------------------------------------------------------------------------

pub fn spectral_identity_checks(
    cells: &[(usize, usize)],
    newton_states: usize,
    seed: u64,
) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for &cell in cells {
        let shape = MapShape::new(cell.0, cell.1).expect("grid cell");
        let mut rng = cell_rng(seed, cell, 3000);
        let s = sample::regular_xy_state(shape, &mut rng);
        out.push(outcome("spectral:dual-charpoly", cell, lax::verify_dual_charpoly(&s)));
        out.push(outcome(
            "spectral:boundary-A-oracle",
            cell,
            Ok(lax::boundary_A(&s) == lax::boundary_A_oracle(&s)),
        ));
        let newton_ok = (|| -> Result<bool, Error> {
            for t in 0..newton_states {
                let mut rng = cell_rng(seed, cell, 3100 + t as u64);
                let s = sample::regular_xy_state(shape, &mut rng);
                let table = lax::spectral(&s)?;
                if !lax::newton_polygon(&table).inside() {
                    return Ok(false);
                }
                if !lax::corner_coefficients_ok(&s, &table) {
                    return Ok(false);
                }
            }
            Ok(true)
        })();
        out.push(outcome("spectral:newton+corners", cell, newton_ok));
    }
    out
}

// ---------------------------------------------------------------------------
// criterion 6: Lax representations
// ---------------------------------------------------------------------------

pub fn lax_checks(cells: &[(usize, usize)], seed: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for &cell in cells {
        let shape = MapShape::new(cell.0, cell.1).expect("grid cell");
        let mut rng = cell_rng(seed, cell, 4000);
        let s = sample::regular_xy_state(shape, &mut rng);
        out.push(outcome("lax:zero-curvature", cell, lax::zero_curvature_check(&s)));
        out.push(outcome(
            "lax:refactorization",
            cell,
            lax::verify_refactorization(&s),
        ));
        out.push(outcome("lax:monodromy-route", cell, lax::verify_monodromy_route(&s)));
    }
    out
}

// ---------------------------------------------------------------------------
// criterion 7: dynamics algebra
// ---------------------------------------------------------------------------

pub fn dynamics_algebra_checks(
    cells: &[(usize, usize)],
    trials: usize,
    seed: u64,
) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for &cell in cells {
        let shape = MapShape::new(cell.0, cell.1).expect("grid cell");
        let name = "dynamics:algebra";
        let run = (|| -> Result<bool, Error> {
            for t in 0..trials {
                let mut rng = cell_rng(seed, cell, 5000 + t as u64);
                let s = sample::regular_xy_state(shape, &mut rng);
                let (r, rp) = (shape.r(), shape.rprime());
                // T o T^{-1} = T^{-1} o T = id (draws may be singular for
                // the inverse; retry via a fresh state)
                let fwd = map_T(&s)?;
                if map_T_inv(&fwd)? != s {
                    return Ok(false);
                }
                if let Ok(bwd) = map_T_inv(&s) {
                    if map_T(&bwd)? != s {
                        return Ok(false);
                    }
                }
                // T = D(C(s)), C^2 = id, D^2 = S_{r-r'}
                let c = map_C(&s)?;
                if map_D(&c)? != fwd {
                    return Ok(false);
                }
                if map_C(&c)? != s {
                    return Ok(false);
                }
                let dd = map_D(&map_D(&s)?)?;
                if dd != s.shift(r - rp) {
                    return Ok(false);
                }
                // pi o T = Tbar o pi, Tbar^circ = Tbar^{-1}
                let pq = project_pq(&s)?;
                let tbar = map_Tbar(&pq)?;
                if tbar != project_pq(&fwd)? {
                    return Ok(false);
                }
                if map_Tbar_circ(&tbar)? != pq {
                    return Ok(false);
                }
                // scaling equivariance
                let mut srng = cell_rng(seed, cell, 5500 + t as u64);
                let scale = sample::small_rational(&mut srng);
                let scaled = s.scale(&scale)?;
                if map_T(&scaled)? != fwd.scale(&scale)? {
                    return Ok(false);
                }
                // level preservation at arbitrary level c
                let mut lrng = cell_rng(seed, cell, 5600 + t as u64);
                let level = sample::small_rational(&mut lrng);
                let pqc = sample::level_pq_state(shape, &level, &mut lrng);
                if let Ok(moved) = map_Tbar(&pqc) {
                    if moved.level() != pqc.level() {
                        return Ok(false);
                    }
                }
                // almost-conjugation: S_{r-r'} o T^{-1} o D = D o T
                let d = map_D(&s)?;
                if let Ok(lhs) = map_T_inv(&d) {
                    if lhs.shift(r - rp) != map_D(&fwd)? {
                        return Ok(false);
                    }
                }
                // cross-k relation: T^{-1} = D_{k,n} o T_{n-k+2} o D_{n-k+2,n}
                let k2 = shape.n() + 2 - shape.k();
                if k2 >= 2 {
                    let a = map_Dkn(k2, &s)?;
                    if let Ok(b) = map_T(&a) {
                        let got = map_Dkn(shape.k(), &b)?;
                        if let Ok(want) = map_T_inv(&s) {
                            if got != want {
                                return Ok(false);
                            }
                        }
                    }
                }
                // the same two relations on the face-weight side
                let dbar = map_Dbar(&pq)?;
                if let Ok(lhs) = map_Tbar_circ(&dbar) {
                    if lhs.shift(r - rp) != map_Dbar(&tbar)? {
                        return Ok(false);
                    }
                }
                if k2 >= 2 {
                    let a = map_Dbar_kn(k2, &pq)?;
                    if let Ok(b) = map_Tbar(&a) {
                        let got = map_Dbar_kn(shape.k(), &b)?;
                        if got != map_Tbar_circ(&pq)? {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(true)
        })();
        out.push(outcome(name, cell, run));
    }
    out
}

// ---------------------------------------------------------------------------
// criterion 8: geometry
// ---------------------------------------------------------------------------

pub fn geometry_checks(
    cells: &[(usize, usize)],
    seed: u64,
    duality_sign_flip: bool,
) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for &cell in cells {
        let shape = MapShape::new(cell.0, cell.1).expect("grid cell");
        if shape.k() < 3 {
            out.push(CheckResult::skip(
                "geometry:corrugated",
                Some(cell),
                "corrugated polygons live in RP^{k-1} with k >= 3",
            ));
            continue;
        }
        let (r, rp) = (shape.r(), shape.rprime());
        let run = (|| -> Result<bool, Error> {
            let mut rng = cell_rng(seed, cell, 6000);
            let s = sample::biregular_xy_state(shape, &mut rng);
            let p = polygon_from_xy(&s)?;
            if !p.is_corrugated() || xy_from_polygon(&p)? != s {
                return Ok(false);
            }
            let f = map_F(&p)?;
            if xy_from_polygon(&f)? != map_T(&s.shift(rp + 1))? {
                return Ok(false);
            }
            if !f.is_corrugated() {
                return Ok(false);
            }
            if !polygons_proj_eq(&f, &map_F_oracle(&p)?, 0) {
                return Ok(false);
            }
            let g = map_G(&p)?;
            if xy_from_polygon(&g)? != map_T_inv(&s.shift(r + 1))? {
                return Ok(false);
            }
            if !g.is_corrugated() {
                return Ok(false);
            }
            // duality: coords(dual) = (-1)^k D(S_{r'} s); the negative
            // control fixture flips the sign to prove the test has teeth
            let w = dualize(&p)?;
            if !w.is_corrugated() {
                return Ok(false);
            }
            let want_sign = shape.k() % 2 == 0;
            let effective = if duality_sign_flip { !want_sign } else { want_sign };
            let sign = if effective { Rational::one() } else { -Rational::one() };
            let dimg = map_D(&s.shift(rp))?;
            let want = XYState::new(
                shape,
                dimg.x().iter().map(|v| v * &sign).collect(),
                dimg.y().iter().map(|v| v * &sign).collect(),
            )?;
            if xy_from_polygon(&w)? != want {
                return Ok(false);
            }
            // cross-ratio coordinates agree with the projection
            if cross_ratio_coords(&p)? != project_pq(&s)? {
                return Ok(false);
            }
            Ok(true)
        })();
        out.push(outcome("geometry:corrugated", cell, run));
    }
    out
}

// ---------------------------------------------------------------------------
// criterion 9: pentagram equivalence
// ---------------------------------------------------------------------------

pub fn pentagram_checks(n: usize, trials: usize, seed: u64) -> Vec<CheckResult> {
    let name = "pentagram:conjugacy";
    let cell = (3, n);
    let run = (|| -> Result<bool, Error> {
        let mut done = 0usize;
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9999);
        while done < trials {
            let c = sample::regular_corner_state(n, &mut rng);
            let xy = corner_to_xy(&c)?;
            if !xy.is_t_regular() {
                continue;
            }
            let lhs = corner_to_xy(&pentagram_corner(&c)?.shift(PENTAGRAM_SHIFT))?;
            if lhs != map_T(&xy)? {
                return Ok(false);
            }
            done += 1;
        }
        Ok(true)
    })();
    vec![outcome(name, cell, run)]
}

// ---------------------------------------------------------------------------
// criterion 10: leapfrog
// ---------------------------------------------------------------------------

pub fn leapfrog_checks(n: usize, trials: usize, seed: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let cell = (2, n);
    // (i) phi o Phi = T_2 o phi on closed and twisted states
    let conj = (|| -> Result<bool, Error> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xf00d);
        let mut done = 0usize;
        while done < trials {
            let st = sample::leapfrog_state(n, done % 2 == 0, &mut rng);
            let coords = match leapfrog::leapfrog_coords(&st) {
                Ok(c) if c.is_t_regular() => c,
                _ => continue,
            };
            let stepped = leapfrog::leapfrog_step(&st)?;
            if leapfrog::leapfrog_coords(&stepped)? != map_T(&coords)? {
                return Ok(false);
            }
            // both multiplicative residuals equal -1 exactly on the output (skipping the
            // indices where a residual denominator degenerates)
            for i in 1..=n as i64 {
                let res = leapfrog::menelaus_residuals(
                    &st.s_at(i - 1),
                    &st.s_at(i),
                    &st.s_at(i + 1),
                    &st.s_minus_at(i),
                    &stepped.s_at(i),
                );
                if let Ok((m2, m3)) = res {
                    let minus_one = -Rational::one();
                    if m2 != minus_one || m3 != minus_one {
                        return Ok(false);
                    }
                }
            }
            done += 1;
        }
        Ok(true)
    })();
    out.push(outcome("leapfrog:T2-conjugacy+menelaus", cell, conj));

    // (ii) the additive and both multiplicative step equations hold or
    // fail together on random quintuples
    let equiv = (|| -> Result<bool, Error> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xbeef);
        let mut done = 0usize;
        while done < 30 {
            let vals: Vec<Rational> = (0..5).map(|_| sample::small_rational(&mut rng)).collect();
            let distinct = {
                let mut ok = true;
                for a in 0..5 {
                    for b in a + 1..5 {
                        if vals[a] == vals[b] {
                            ok = false;
                        }
                    }
                }
                ok
            };
            if !distinct {
                continue;
            }
            let (prev, mid, next, minus, plus) =
                (&vals[0], &vals[1], &vals[2], &vals[3], &vals[4]);
            let m1 = leapfrog::additive_rule_residual(
                prev.clone(),
                mid.clone(),
                next.clone(),
                minus.clone(),
                plus.clone(),
            )?;
            let (m2, m3) = leapfrog::menelaus_residuals(
                &crate::geometry::RP1Point::from_affine(prev.clone()),
                &crate::geometry::RP1Point::from_affine(mid.clone()),
                &crate::geometry::RP1Point::from_affine(next.clone()),
                &crate::geometry::RP1Point::from_affine(minus.clone()),
                &crate::geometry::RP1Point::from_affine(plus.clone()),
            )?;
            let minus_one = -Rational::one();
            let holds1 = m1.is_zero();
            let holds2 = m2 == minus_one;
            let holds3 = m3 == minus_one;
            if holds1 != holds2 || holds2 != holds3 {
                return Ok(false);
            }
            done += 1;
        }
        Ok(true)
    })();
    out.push(outcome("leapfrog:rule-equivalence", cell, equiv));

    // (iii) Lagrangian residual vanishes exactly on orbit segments
    let lagr = (|| -> Result<bool, Error> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xcafe);
        for _ in 0..trials {
            let st = sample::leapfrog_state(n, true, &mut rng);
            let stepped = leapfrog::leapfrog_step(&st)?;
            let aff = |pts: &[crate::geometry::RP1Point]| -> Result<Vec<Rational>, Error> {
                pts.iter().map(|p| p.to_affine()).collect()
            };
            let res = leapfrog::lagrangian_residual(
                &aff(st.s_minus())?,
                &aff(st.s())?,
                &aff(stepped.s())?,
            )?;
            if !res.iter().all(Rational::is_zero) {
                return Ok(false);
            }
        }
        Ok(true)
    })();
    out.push(outcome("leapfrog:lagrangian", cell, lagr));

    // (iv) omega pullback invariance on closed n = 4 states
    let omega = (|| -> Result<bool, Error> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xd00d);
        for _ in 0..trials.min(5) {
            let st = sample::leapfrog_state(4, true, &mut rng);
            let mut tang = || leapfrog::Tangent {
                d_minus: (0..4).map(|_| sample::small_rational(&mut rng)).collect(),
                d_s: (0..4).map(|_| sample::small_rational(&mut rng)).collect(),
            };
            let u = tang();
            let v = tang();
            match leapfrog::two_form_pullback_invariant(&st, &u, &v) {
                Ok(true) => {}
                Ok(false) => return Ok(false),
                Err(Error::SingularConfiguration(_)) | Err(Error::Pole) => continue,
                Err(e) => return Err(e),
            }
        }
        Ok(true)
    })();
    out.push(outcome("leapfrog:two-form", (2, 4), omega));

    // (v) circle-pattern parallelogram identity over Gaussian rationals
    let circle = (|| -> Result<bool, Error> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xace);
        let mut done = 0usize;
        while done < 100 {
            let q = leapfrog::ComplexQuadruple::new(
                sample::small_gauss(&mut rng),
                sample::small_gauss(&mut rng),
                sample::small_gauss(&mut rng),
                sample::small_gauss(&mut rng),
            );
            let q = match q {
                Ok(q) => q,
                Err(_) => continue,
            };
            match leapfrog::circle_pattern_check(&q) {
                Ok(true) => done += 1,
                Ok(false) => return Ok(false),
                Err(Error::SingularConfiguration(_)) | Err(Error::Pole) => continue,
                Err(e) => return Err(e),
            }
        }
        Ok(true)
    })();
    out.push(outcome("leapfrog:circle-pattern", cell, circle));
    out
}

// ---------------------------------------------------------------------------
// criterion 11: plane reconstruction
// ---------------------------------------------------------------------------

pub fn plane_reconstruction_checks(seed: u64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let cell = (4usize, 9usize);
    let shape = MapShape::new(4, 9).expect("grid cell");
    let run = (|| -> Result<bool, Error> {
        let mut rng = cell_rng(seed, cell, 7000);
        let s = sample::regular_xy_state(shape, &mut rng);
        if plane::branch_count(&s, plane::DEFAULT_TOL)? != 4 {
            return Ok(false);
        }
        let p = plane::reconstruct_plane_polygon(&s, 0, plane::DEFAULT_TOL)?;
        let img = plane::skip_diagonal_map(&p, 4, 1e-12)?;
        let (xs, ys) = plane::plane_coords(&img, 4, 1e-12)?;
        let want = map_T(&s.shift(shape.rprime() + 1))?;
        Ok(plane::coords_relative_error(&xs, &ys, &want) <= 1e-8)
    })();
    out.push(outcome("plane:branches+conjugacy", cell, run));
    // k = 3 sanity: psi is a bijection
    let run3 = (|| -> Result<bool, Error> {
        let shape = MapShape::new(3, 5).expect("cell");
        let mut rng = cell_rng(seed, (3, 5), 7100);
        let s = sample::regular_xy_state(shape, &mut rng);
        Ok(plane::branch_count(&s, plane::DEFAULT_TOL)? == 1)
    })();
    out.push(outcome("plane:k3-single-branch", (3, 5), run3));
    out
}

// ---------------------------------------------------------------------------
// aggregate driver
// ---------------------------------------------------------------------------

/// Tunable sweep sizes. `Default` matches the shipped acceptance grid.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub conservation_states: usize,
    pub conservation_iterations: usize,
    pub involution_states: usize,
    pub invariance_trials: usize,
    pub algebra_trials: usize,
    pub pentagram_trials: usize,
    pub leapfrog_trials: usize,
    pub newton_states: usize,
    pub duality_sign_flip: bool,
    /// restrict every grid to the given cell when set
    pub only_cell: Option<(usize, usize)>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0xC0FFEE,
            conservation_states: 20,
            conservation_iterations: 10,
            involution_states: 5,
            invariance_trials: 4,
            algebra_trials: 5,
            pentagram_trials: 100,
            leapfrog_trials: 10,
            newton_states: 20,
            duality_sign_flip: false,
            only_cell: None,
        }
    }
}

fn restrict(grid: &[(usize, usize)], only: Option<(usize, usize)>) -> Vec<(usize, usize)> {
    match only {
        None => grid.to_vec(),
        Some(c) => vec![c],
    }
}

pub fn full_suite(cfg: &SuiteConfig) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let full = restrict(&FULL_GRID, cfg.only_cell);
    let invo = restrict(&INVOLUTION_GRID, cfg.only_cell);
    let geo = restrict(&GEOMETRY_GRID, cfg.only_cell);
    out.extend(conservation_checks(
        &full,
        cfg.conservation_states,
        cfg.conservation_iterations,
        cfg.seed,
    ));
    out.extend(involution_checks(&invo, cfg.involution_states, cfg.seed));
    out.extend(poisson_invariance_checks(&invo, cfg.invariance_trials, cfg.seed));
    out.extend(rank_casimir_checks(&full, cfg.seed));
    out.extend(spectral_identity_checks(&full, cfg.newton_states, cfg.seed));
    out.extend(lax_checks(&full, cfg.seed));
    out.extend(dynamics_algebra_checks(&full, cfg.algebra_trials, cfg.seed));
    out.extend(geometry_checks(&geo, cfg.seed, cfg.duality_sign_flip));
    if cfg.only_cell.is_none() {
        out.extend(pentagram_checks(5, cfg.pentagram_trials, cfg.seed));
        out.extend(leapfrog_checks(5, cfg.leapfrog_trials, cfg.seed));
        out.extend(plane_reconstruction_checks(cfg.seed));
    }
    out
}
