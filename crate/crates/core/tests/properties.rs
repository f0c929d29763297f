mod common;

use std::f64::consts::PI;

use num_complex::Complex64 as C;
use proptest::prelude::*;

use walkers_return::crw::{return_closed_crw, return_series_closed_crw, CRWInitialState, TransitionMatrix};
use walkers_return::qw::{return_series_closed_qw, simulate_return, AmplitudeField, CoinMatrix, QWInitialState};
use walkers_return::specfun::{binom, ellip_ke, jacobi10_sequence, legendre_sequence};
use walkers_return::table::Table;

fn phase() -> impl Strategy<Value = f64> {
    0.0..2.0 * PI
}

fn qw_state() -> impl Strategy<Value = QWInitialState> {
    (0.0..=1.0f64, phase(), phase()).prop_map(|(w, p1, p2)| {
        QWInitialState::new(C::from_polar(w.sqrt(), p1), C::from_polar((1.0 - w).sqrt(), p2)).unwrap()
    })
}

fn coin(alpha_sq: f64, theta: f64, pa: f64, pb: f64) -> CoinMatrix {
    CoinMatrix::new(
        theta,
        C::from_polar(alpha_sq.sqrt(), pa),
        C::from_polar((1.0 - alpha_sq).sqrt(), pb),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn qw_return_ignores_state_and_phases(
        a2 in 0.05..0.95f64, theta in phase(), pa in phase(), pb in phase(), phi in qw_state()
    ) {
        let sim = simulate_return(&coin(a2, theta, pa, pb), &phi, 40);
        let closed = return_series_closed_qw(a2, 40).unwrap();
        prop_assert!(sim.max_abs_diff(&closed) < 1e-10);
    }

    #[test]
    fn qw_matches_reference_lattice(a2 in 0.05..0.95f64, theta in phase(), pa in phase(), pb in phase(), phi in qw_state()) {
        let c = coin(a2, theta, pa, pb);
        let lib = simulate_return(&c, &phi, 30).values;
        let reference = common::qw_sim(common::coin_rows(theta, c.alpha(), c.beta()), phi.vector(), 30);
        for (x, y) in lib.iter().zip(&reference) {
            prop_assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn qw_evolution_is_unitary(a2 in 0.05..0.95f64, theta in phase(), phi in qw_state(), steps in 1usize..300) {
        let c = coin(a2, theta, 0.3, 1.1);
        let mut f = AmplitudeField::new(&phi);
        for _ in 0..steps {
            f.advance(&c);
        }
        prop_assert!((f.total_probability() - 1.0).abs() < 1e-10);
        // sites of the wrong parity never carry mass
        prop_assert_eq!(f.probability_at(steps as i64 - 1), 0.0);
    }

    #[test]
    fn crw_closed_form_is_a_probability(a in 0.001..0.999f64, d in 0.001..0.999f64, phi1 in 0.0..=1.0f64) {
        let t = TransitionMatrix::new(a, d).unwrap();
        let s = return_series_closed_crw(&t, &CRWInitialState::new(phi1).unwrap(), 400);
        prop_assert!(s.values.iter().all(|r| (0.0..=1.0).contains(r)));
    }

    #[test]
    fn crw_matches_reference_lattice(a in 0.01..0.99f64, d in 0.01..0.99f64, phi1 in 0.0..=1.0f64) {
        let t = TransitionMatrix::new(a, d).unwrap();
        let phi = CRWInitialState::new(phi1).unwrap();
        let reference = common::crw_sim(a, d, phi1, 50);
        for (n, r) in reference.iter().enumerate() {
            prop_assert!((return_closed_crw(&t, &phi, n) - r).abs() < 1e-12);
        }
    }

    #[test]
    fn crw_equal_persistence_ignores_state(a in 0.01..0.99f64, p1 in 0.0..=1.0f64, p2 in 0.0..=1.0f64) {
        let t = TransitionMatrix::new(a, a).unwrap();
        let s1 = return_series_closed_crw(&t, &CRWInitialState::new(p1).unwrap(), 60);
        let s2 = return_series_closed_crw(&t, &CRWInitialState::new(p2).unwrap(), 60);
        prop_assert!(s1.max_abs_diff(&s2) < 1e-12);
    }

    #[test]
    fn legendre_bounded_and_jacobi_difference(x in -1.0..=1.0f64) {
        let p = legendre_sequence(101, x).unwrap();
        let j = jacobi10_sequence(100, x).unwrap();
        for n in 0..=100 {
            prop_assert!(p[n].abs() <= 1.0 + 1e-12);
            prop_assert!((j[n] * (1.0 - x) - (p[n] - p[n + 1])).abs() < 1e-11);
        }
    }

    #[test]
    fn legendre_relation_for_elliptic_integrals(m in 0.01..0.99f64) {
        let (k, e) = ellip_ke(m).unwrap();
        let (kc, ec) = ellip_ke((1.0 - m * m).sqrt()).unwrap();
        prop_assert!((e * kc + ec * k - k * kc - PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn binomial_symmetry_and_pascal(n in 1u64..200, k in 0u64..200) {
        prop_assume!(k <= n);
        let b = |n, k| binom(n, k).unwrap().to_f64();
        prop_assert!((b(n, k) - b(n, n - k)).abs() <= 1e-12 * b(n, k));
        if k >= 1 {
            let pascal = b(n - 1, k - 1) + if k < n { b(n - 1, k) } else { 0.0 };
            prop_assert!((b(n, k) - pascal).abs() <= 1e-12 * pascal);
        }
    }

    #[test]
    fn csv_round_trip_is_exact(rows in prop::collection::vec(prop::collection::vec(any::<f64>().prop_filter("finite", |v| v.is_finite()), 3), 0..20)) {
        let mut t = Table::new(["n", "value", "err"]);
        for r in rows {
            t.push(r);
        }
        let back = Table::from_csv(&t.to_csv()).unwrap();
        prop_assert_eq!(back, t);
    }
}
