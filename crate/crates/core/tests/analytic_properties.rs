//! Closed-form spectra, reality flags and crossings against exhaustive
//! enumeration, plus matching invariants.

use pdm_dirac::analytic::{oscillator_crossings, oscillator_levels, scarf2_crossings, scarf2_levels};
use pdm_dirac::oracle::{crossing_keys, oscillator_crossing_scan, scarf2_crossing_scan};
use pdm_dirac::verify::match_values;
use pdm_dirac::{BranchLabel, Complex64, OscillatorParams, QuasiParity, ScarfParams};
use proptest::prelude::*;

fn scarf_params() -> impl Strategy<Value = ScarfParams> {
    prop_oneof![
        (0.01..10.0f64, -0.5..0.5f64).prop_map(|(s, t)| ScarfParams::new(0.5 * s + t, 0.5 * s - t).unwrap()),
        (1..20u32, -2.0..2.0f64).prop_map(|(k, t)| {
            let s = f64::from(k) / 2.0;
            ScarfParams::new(0.5 * s + t, 0.5 * s - t).unwrap()
        }),
    ]
}

fn oscillator_params() -> impl Strategy<Value = OscillatorParams> {
    prop_oneof![
        (0.1..5.0f64, 0.0..6.0f64).prop_map(|(b, a)| OscillatorParams::new(b, a, 1.0).unwrap()),
        (0.1..5.0f64, 0..6u32).prop_map(|(b, a)| OscillatorParams::new(b, f64::from(a), 1.0).unwrap()),
        (0.1..5.0f64, 0..12u32).prop_map(|(b, a)| OscillatorParams::new(b, f64::from(a) / 2.0, 1.0).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scarf_reality_flag_matches_sign_of_lambda(p in scarf_params()) {
        for omega in BranchLabel::BOTH {
            for n in 0..=100 {
                let l = scarf2_levels(&p, omega, n);
                prop_assert_eq!(l.real, l.lambda >= 0.0, "{:?} n={} lambda={}", omega, n, l.lambda);
            }
        }
    }

    #[test]
    fn scarf_families_are_shifted_by_one(p in scarf_params()) {
        // λ₋(n + 1) = λ₊(n), and λ₋(0) = 0
        prop_assert_eq!(scarf2_levels(&p, BranchLabel::Minus, 0).lambda, 0.0);
        for n in 0..100 {
            let plus = scarf2_levels(&p, BranchLabel::Plus, n).lambda;
            let minus = scarf2_levels(&p, BranchLabel::Minus, n + 1).lambda;
            prop_assert!((plus - minus).abs() <= 1e-9 * (1.0 + plus.abs()));
        }
    }

    #[test]
    fn oscillator_partners_differ_by_the_zero_mode(p in oscillator_params()) {
        // {2B(n+α)} ∪ {2Bn} = {2B(n+α)} ∪ {2B(n+1)} ∪ {0}
        let plus = oscillator_levels(&p, BranchLabel::Plus, QuasiParity::Odd, 0).lambda;
        prop_assert_eq!(plus, 0.0);
        for n in 0..100 {
            let a = oscillator_levels(&p, BranchLabel::Plus, QuasiParity::Even, n).lambda;
            let b = oscillator_levels(&p, BranchLabel::Minus, QuasiParity::Even, n).lambda;
            prop_assert_eq!(a, b);
            let c = oscillator_levels(&p, BranchLabel::Plus, QuasiParity::Odd, n + 1).lambda;
            let d = oscillator_levels(&p, BranchLabel::Minus, QuasiParity::Odd, n).lambda;
            prop_assert!((c - d).abs() <= 1e-12 * (1.0 + c.abs()));
        }
    }

    #[test]
    fn oscillator_crossings_match_scan(p in oscillator_params()) {
        prop_assert_eq!(crossing_keys(&oscillator_crossings(&p, 50)), oscillator_crossing_scan(&p, 50));
    }

    #[test]
    fn scarf_crossings_match_scan(p in scarf_params()) {
        prop_assert_eq!(crossing_keys(&scarf2_crossings(&p, 50)), scarf2_crossing_scan(&p, 50));
    }

    #[test]
    fn matching_ignores_input_order(
        analytic in prop::collection::btree_set(0..60u32, 1..12),
        noise in prop::collection::vec(-1e-3..1e-3f64, 12),
        seed in any::<u64>(),
    ) {
        let analytic: Vec<f64> = analytic.into_iter().map(f64::from).collect();
        let numeric: Vec<Complex64> =
            analytic.iter().zip(&noise).map(|(a, e)| Complex64::new(a + e, 0.0)).collect();
        let mut shuffled = numeric.clone();
        let k = (seed as usize) % shuffled.len();
        shuffled.rotate_left(k);
        shuffled.reverse();
        let a = match_values(&numeric, &analytic, 5e-3, 100.0).unwrap();
        let b = match_values(&shuffled, &analytic, 5e-3, 100.0).unwrap();
        prop_assert!(a.is_perfect());
        prop_assert_eq!(a.pairs.len(), b.pairs.len());
        prop_assert_eq!(a.max_delta(), b.max_delta());
    }
}
