//! Cross-module invariants under randomized inputs.

use proptest::prelude::*;

use pa_core::band::find_band_minimum;
use pa_core::channels::{rate_ratio_f0, rate_ratio_f2};
use pa_core::dressed::{ground_state, lowest_energy};
use pa_core::types::{DressedParams, SpinorAmplitudes};

fn amps_strategy() -> impl Strategy<Value = SpinorAmplitudes> {
    (-1.0..1.0_f64, -1.0..1.0_f64, -1.0..1.0_f64).prop_filter_map(
        "norm too small to normalize",
        |(a, b, c)| {
            let n = (a * a + b * b + c * c).sqrt();
            if n > 1e-3 {
                Some(SpinorAmplitudes::new(a / n, b / n, c / n).unwrap())
            } else {
                None
            }
        },
    )
}

proptest! {
    #[test]
    fn canonicalization_is_idempotent(amps in amps_strategy()) {
        let again = SpinorAmplitudes::from_array(amps.as_array()).unwrap();
        prop_assert_eq!(amps, again);
    }

    #[test]
    fn ratios_stay_inside_the_unit_interval(amps in amps_strategy()) {
        for r in [rate_ratio_f0(&amps), rate_ratio_f2(&amps)] {
            prop_assert!(r.with_interference >= -1e-12);
            prop_assert!(r.with_interference <= 1.0 + 1e-12);
            prop_assert!(r.without_interference >= -1e-12);
            prop_assert!(r.without_interference <= 1.0 + 1e-12);
        }
    }

    #[test]
    fn cross_term_is_the_exact_difference(amps in amps_strategy()) {
        for r in [rate_ratio_f0(&amps), rate_ratio_f2(&amps)] {
            let sum = r.without_interference + r.cross_term;
            prop_assert!((r.with_interference - sum).abs() < 1e-12);
        }
    }

    #[test]
    fn ratios_are_gauge_invariant(amps in amps_strategy()) {
        let v = amps.as_array();
        let flipped = SpinorAmplitudes::new(-v[0], -v[1], -v[2]).unwrap();
        let side = SpinorAmplitudes::new(-v[0], v[1], -v[2]).unwrap();
        for other in [flipped, side] {
            prop_assert_eq!(rate_ratio_f0(&amps), rate_ratio_f0(&other));
            prop_assert_eq!(rate_ratio_f2(&amps), rate_ratio_f2(&other));
        }
    }

    #[test]
    fn band_is_symmetric_at_zero_detuning(
        omega in 0.0..15.0_f64,
        epsilon in -1.0..1.5_f64,
        q in 0.0..3.0_f64,
    ) {
        let base = DressedParams::new(omega, 0.0, 0.0).with_epsilon(epsilon);
        let ep = lowest_energy(&base.at_q(q)).unwrap();
        let em = lowest_energy(&base.at_q(-q)).unwrap();
        prop_assert!((ep - em).abs() < 1e-12);
    }

    #[test]
    fn ground_state_interference_products_are_nonnegative(
        omega in 1e-3..20.0_f64,
        delta in -3.0..3.0_f64,
        epsilon in -1.0..1.5_f64,
        q in -3.0..3.0_f64,
    ) {
        let p = DressedParams::new(omega, delta, q).with_epsilon(epsilon);
        let (_, amps) = ground_state(&p).unwrap();
        let pair = amps.c_p1() * amps.c_m1();
        let product = amps.c_0() * amps.c_0() * pair;
        prop_assert!(pair >= 0.0, "C+1*C-1 = {pair}");
        prop_assert!(product >= 0.0, "C0^2*C+1*C-1 = {product}");
        // destructive vs constructive ordering follows from the sign
        let r0 = rate_ratio_f0(&amps);
        let r2 = rate_ratio_f2(&amps);
        prop_assert!(r0.cross_term <= 0.0);
        prop_assert!(r2.cross_term >= 0.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]
    #[test]
    fn band_minimum_is_optimal_over_random_probes(
        omega in 0.0..10.0_f64,
        delta in -2.0..2.0_f64,
        epsilon in -0.5..1.2_f64,
        probes in proptest::collection::vec(-3.0..3.0_f64, 32),
    ) {
        let (q_star, e_star) = find_band_minimum(omega, delta, epsilon).unwrap();
        prop_assert!((-3.0..=3.0).contains(&q_star));
        let base = DressedParams::new(omega, delta, 0.0).with_epsilon(epsilon);
        for q in probes {
            let e = lowest_energy(&base.at_q(q)).unwrap();
            prop_assert!(e_star <= e + 1e-12, "beaten at q = {q}: {e} < {e_star}");
        }
    }
}
