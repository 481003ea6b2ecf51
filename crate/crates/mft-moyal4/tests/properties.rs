use mft_moyal4::{g2_perturbative, params_of, DeformedMeasure4};
use proptest::prelude::*;

proptest! {
    #[test]
    fn two_point_is_symmetric(a in 0.0f64..50.0, b in 0.0f64..50.0, l in -0.3f64..0.3, order in 0usize..=2) {
        let x = g2_perturbative(a, b, l, order).unwrap();
        let y = g2_perturbative(b, a, l, order).unwrap();
        prop_assert!((x - y).abs() <= 1e-14 * x.abs().max(1.0));
    }

    #[test]
    fn branch_relation(l in (-std::f64::consts::FRAC_1_PI + 1e-3)..std::f64::consts::FRAC_1_PI) {
        let p = params_of(l, None).unwrap();
        prop_assert!(((std::f64::consts::PI * p.alpha).sin() - std::f64::consts::PI * l).abs() < 1e-14);
    }

    #[test]
    fn measure_inside_sandwich(l in -0.3f64..0.3, x in 0.0f64..1e4) {
        let m = DeformedMeasure4::new(params_of(l, None).unwrap());
        let (lo, hi) = m.bounds(x);
        let r = m.rho(x).unwrap();
        prop_assert!(lo * (1.0 - 1e-13) <= r && r <= hi * (1.0 + 1e-13));
    }
}
