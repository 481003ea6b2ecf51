use mft_cubic::*;
use proptest::prelude::*;

fn measure() -> impl Strategy<Value = MoyalMeasure> {
    (0usize..5).prop_map(|i| MoyalMeasure::ALL[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn c_is_even(m in measure(), frac in 0.0f64..0.95) {
        let (lc, _) = critical_coupling(&m).unwrap();
        let l = frac * lc;
        let a = solve_c(&m, l).unwrap();
        let b = solve_c(&m, -l).unwrap();
        prop_assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn c_decreases_in_lambda_squared(m in measure(), f1 in 0.01f64..0.95, f2 in 0.01f64..0.95) {
        prop_assume!((f1 - f2).abs() > 1e-3);
        let (lc, _) = critical_coupling(&m).unwrap();
        let (a, b) = (solve_c(&m, f1 * lc).unwrap(), solve_c(&m, f2 * lc).unwrap());
        prop_assert!((a < b) == (f1 > f2));
    }

    #[test]
    fn n_point_is_fully_symmetric(
        (pts, perm) in prop::collection::vec((0.5f64..4.0, -3.0f64..3.0), 2..6)
            .prop_flat_map(|v| (Just(v.clone()), Just(v).prop_shuffle())),
        lambda in -1.0f64..1.0,
    ) {
        let f2: Vec<f64> = pts.iter().map(|p| p.0 * p.0).collect();
        for i in 0..f2.len() {
            for j in 0..i {
                prop_assume!((f2[i] - f2[j]).abs() > 1e-2);
            }
        }
        let a = n_point_from_w(lambda, &pts).unwrap();
        let b = n_point_from_w(lambda, &perm).unwrap();
        prop_assert!((a - b).abs() <= 1e-9 * a.abs().max(1.0));
    }
}
