//! Module-level invariants from the operation contracts that go beyond the
//! acceptance grid: full (k, n) sweeps, oracle cross-checks, smoke tests.

use num_traits::{One, Zero};
use pentagram_maps::dynamics::{map_T, map_Tbar, project_pq, MapShape};
use pentagram_maps::io::{parse_state, state_to_json, State};
use pentagram_maps::kernel::{jet_eval, BiPoly, Jet, PolyMatrix, Rational};
use pentagram_maps::lax;
use pentagram_maps::leapfrog::{LeapfrogState, Mobius};
use pentagram_maps::poisson;
use pentagram_maps::sample;
use pentagram_maps::RP1Point;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// pi_k o T_k = Tbar_k o pi_k over the whole stable range k in 2..=5,
/// n in k..=11 with n >= 2k-1.
#[test]
fn projection_intertwines_full_sweep() {
    for k in 2..=5usize {
        for n in k.max(2 * k - 1)..=11 {
            let shape = MapShape::new(k, n).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64((100 * k + n) as u64);
            for _ in 0..2 {
                let s = sample::regular_xy_state(shape, &mut rng);
                let lhs = project_pq(&map_T(&s).unwrap()).unwrap();
                let rhs = map_Tbar(&project_pq(&s).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "cell ({k},{n})");
            }
        }
    }
}

/// The itemized bracket list of the (x, y) structure matches the assembled
/// Omega entry by entry, for n >= 2k strictly (below that the listed pairs
/// start to overlap cyclically and the power-sum construction is the
/// authority).
#[test]
fn poiss_itemized_list_matches_omega() {
    for (k, n) in [(2usize, 5usize), (3, 6), (3, 8), (4, 9), (5, 11)] {
        assert!(n >= 2 * k);
        let shape = MapShape::new(k, n).unwrap();
        let spec = poisson::build_bracket_xy(shape).unwrap();
        let m = |i: i64| (((i - 1).rem_euclid(n as i64)) as usize);
        let mut want = vec![vec![0i64; 2 * n]; 2 * n];
        for i in 1..=n as i64 {
            // {x_i, x_{i+l}} = -x_i x_{i+l}, 1 <= l <= k-2
            for l in 1..=(k as i64 - 2) {
                want[m(i)][m(i + l)] -= 1;
                want[m(i + l)][m(i)] += 1;
            }
            // {y_i, y_{i+l}} = -y_i y_{i+l}, 1 <= l <= k-1
            for l in 1..=(k as i64 - 1) {
                want[n + m(i)][n + m(i + l)] -= 1;
                want[n + m(i + l)][n + m(i)] += 1;
            }
            // {y_i, x_{i+l}} = -y_i x_{i+l}, 1 <= l <= k-1
            for l in 1..=(k as i64 - 1) {
                want[n + m(i)][m(i + l)] -= 1;
                want[m(i + l)][n + m(i)] += 1;
            }
            // {y_i, x_{i-l}} = y_i x_{i-l}, 0 <= l <= k-2
            for l in 0..=(k as i64 - 2) {
                want[n + m(i)][m(i - l)] += 1;
                want[m(i - l)][n + m(i)] -= 1;
            }
        }
        for a in 0..2 * n {
            for b in 0..2 * n {
                assert_eq!(
                    spec.entry(a, b),
                    want[a][b],
                    "Omega[{a}][{b}] at ({k},{n})"
                );
            }
        }
    }
}

/// Jacobi identity for the log-canonical bracket on random monomial triples
/// (a smoke test; it holds automatically for constant Omega).
#[test]
fn jacobi_identity_smoke() {
    let shape = MapShape::new(3, 5).unwrap();
    let spec = poisson::build_bracket_xy(shape).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let s = sample::regular_xy_state(shape, &mut rng);
    use rand::Rng;
    let mono_exps: Vec<Vec<i64>> = (0..3)
        .map(|_| (0..10).map(|_| rng.gen_range(0..3) as i64).collect())
        .collect();
    let eval_mono = |e: &[i64]| {
        let e = e.to_vec();
        move |vars: &[Jet]| -> Result<Jet, pentagram_maps::Error> {
            let mut acc = Jet::one();
            for (i, &p) in e.iter().enumerate() {
                for _ in 0..p {
                    acc = acc * vars[i].clone();
                }
            }
            Ok(acc)
        }
    };
    // for monomials f, g the bracket is c_fg * f * g with a constant c_fg
    let coupling = |ef: &[i64], eg: &[i64]| {
        let mut c = 0i64;
        for a in 0..10 {
            for b in 0..10 {
                c += spec.entry(a, b) * ef[a] * eg[b];
            }
        }
        c
    };
    let value = |e: &[i64]| {
        jet_eval(eval_mono(e), &s.x().iter().chain(s.y()).cloned().collect::<Vec<_>>())
            .unwrap()
            .value()
            .clone()
    };
    let (f, g, h) = (&mono_exps[0], &mono_exps[1], &mono_exps[2]);
    // {f, {g, h}} = c_gh * {f, g*h} = c_gh (c_fg + c_fh) f g h; Jacobi sums
    // the cyclic permutations to zero
    let cyc_sum = coupling(g, h) * (coupling(f, g) + coupling(f, h))
        + coupling(h, f) * (coupling(g, h) + coupling(g, f))
        + coupling(f, g) * (coupling(h, f) + coupling(h, g));
    let prod = &(&value(f) * &value(g)) * &value(h);
    let total = &prod * &Rational::from_int(cyc_sum);
    assert!(total.is_zero() || cyc_sum == 0, "Jacobi violated: {cyc_sum}");
    // and the inner bracket really evaluates as c * f * g through jets
    let direct = poisson::bracket_fn(&spec, &s, eval_mono(f), eval_mono(g)).unwrap();
    let expect = &(&value(f) * &value(g)) * &Rational::from_int(coupling(f, g));
    assert_eq!(direct, expect);
}

#[test]
fn zmatrix_power_identity_up_to_12() {
    for n in 2..=12usize {
        let z = lax::zmatrix(n);
        let zn = z.pow(n as u32);
        let want = PolyMatrix::identity(n).scale(&BiPoly::monomial(0, 1, Rational::from_int(-1)));
        assert_eq!(zn, want, "Z^{n} != -z I");
    }
}

#[test]
fn newton_boundary_points_present_36() {
    // (3,6) has d = 2: all 2(d+1) = 6 boundary lattice points carry nonzero
    // Casimir coefficients at a generic state
    let shape = MapShape::new(3, 6).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let s = sample::regular_xy_state(shape, &mut rng);
    let rep = lax::newton_polygon(&lax::spectral(&s).unwrap());
    assert_eq!(rep.boundary_points.len(), 6);
    assert!(rep.boundary_points.iter().all(|&(_, present)| present));
    // the flagged positions step by n/d = 3 in the lambda direction
    assert!(rep.boundary_points.iter().all(|&((i, _), _)| i % 3 == 0));
}

/// The jet gradient of a T_3 component agrees with central finite
/// differences of a floating replay to 1e-8.
#[test]
fn jet_gradient_matches_finite_differences() {
    let shape = MapShape::new(3, 5).unwrap();
    let s = pentagram_maps::XYState::new(
        shape,
        (1..=5).map(Rational::from_int).collect(),
        vec![Rational::one(); 5],
    )
    .unwrap();
    let point: Vec<Rational> = s.x().iter().chain(s.y()).cloned().collect();
    // x*_1 = x_4 (x_1 + y_1) / (x_4 + y_4) for k = 3, n = 5
    let component = |v: &[Jet]| -> Result<Jet, pentagram_maps::Error> {
        (v[3].clone() * (v[0].clone() + v[5].clone())).try_div(&(v[3].clone() + v[8].clone()))
    };
    let jet = jet_eval(component, &point).unwrap();
    let f = |p: &[f64]| p[3] * (p[0] + p[5]) / (p[3] + p[8]);
    let floats: Vec<f64> = point.iter().map(Rational::to_f64).collect();
    let h = 1e-6;
    for i in 0..10 {
        let mut up = floats.clone();
        let mut dn = floats.clone();
        up[i] += h;
        dn[i] -= h;
        let fd = (f(&up) - f(&dn)) / (2.0 * h);
        let exact = jet.deriv(i).to_f64();
        assert!(
            (fd - exact).abs() <= 1e-8 * exact.abs().max(1.0),
            "partial {i}: fd {fd} vs exact {exact}"
        );
    }
    // sanity: the exact value matches the map itself
    assert_eq!(*jet.value(), map_T(&s).unwrap().x_at(1));
}

#[test]
fn poly_det_size_cap() {
    let m = PolyMatrix::<Rational>::identity(33);
    assert!(matches!(
        m.det(),
        Err(pentagram_maps::Error::MatrixTooLarge(33))
    ));
}

#[test]
fn leapfrog_json_roundtrip() {
    let aff = |n: i64, d: i64| RP1Point::from_affine(Rational::new(n, d));
    let st = LeapfrogState::new(
        vec![aff(0, 1), aff(2, 1), aff(4, 3)],
        vec![aff(1, 1), aff(3, 2), aff(5, 1)],
        Mobius::new(
            Rational::from_int(2),
            Rational::from_int(1),
            Rational::from_int(1),
            Rational::from_int(1),
        )
        .unwrap(),
    )
    .unwrap();
    let json = state_to_json(&State::Leapfrog(st.clone()));
    match parse_state(&json).unwrap() {
        State::Leapfrog(t) => assert_eq!(t, st),
        _ => panic!("wrong kind"),
    }
    // infinity survives the trip as a homogeneous pair
    let with_inf = LeapfrogState::new(
        vec![RP1Point::infinity(), aff(2, 1), aff(4, 3)],
        vec![aff(1, 1), aff(3, 2), aff(5, 1)],
        Mobius::identity(),
    )
    .unwrap();
    let json = state_to_json(&State::Leapfrog(with_inf.clone()));
    match parse_state(&json).unwrap() {
        State::Leapfrog(t) => assert_eq!(t, with_inf),
        _ => panic!("wrong kind"),
    }
}
