use std::f64::consts::PI;

use mft_moyal4::{
    effective_dimension, g2_perturbative, natural_mu2, natural_mu2_series, params_of, DeformedMeasure4, Moyal4Error,
};

fn measure(lambda: f64) -> DeformedMeasure4 {
    DeformedMeasure4::new(params_of(lambda, None).unwrap())
}

#[test]
fn parameters() {
    let p = params_of(0.0, None).unwrap();
    assert_eq!((p.alpha, p.mu2, p.c_lambda), (0.0, 1.0, 1.0));
    let p = params_of(1e-9, None).unwrap();
    assert!(p.alpha.abs() < 2e-9 && (p.mu2 - 1.0).abs() < 2e-9 && (p.c_lambda - 1.0).abs() < 1e-8);
    let p = params_of(1.0 / PI, None).unwrap();
    assert!((p.alpha - 0.5).abs() < 1e-15);
    assert!((p.mu2 - PI / 4.0).abs() < 1e-14);
    for l in [-0.3, -0.1, 0.05, 0.2, 0.31] {
        let p = params_of(l, None).unwrap();
        assert!(((PI * p.alpha).sin() - PI * l).abs() < 1e-14);
        assert!((p.c_lambda * p.mu2 - 1.0).abs() < 1e-14);
    }
    assert!(matches!(params_of(0.4, None), Err(Moyal4Error::Branch(_))));
    assert!(matches!(params_of(-1.0 / PI, None), Err(Moyal4Error::Branch(_))));
    assert!(matches!(params_of(0.1, Some(-1.0)), Err(Moyal4Error::Domain(_))));
    assert_eq!(params_of(0.1, Some(2.0)).unwrap().mu2, 2.0);
}

#[test]
fn mu2_series_coefficients() {
    // printed through lambda^10
    let printed = |l: f64| {
        let y = PI * l;
        1.0 - l + y.powi(2) / 6.0 - l * y.powi(2) / 3.0 + 3.0 * y.powi(4) / 40.0 - l * 8.0 / 45.0 * y.powi(4)
            + 5.0 / 112.0 * y.powi(6)
            - l * 4.0 / 35.0 * y.powi(6)
            + 35.0 / 1152.0 * y.powi(8)
            - l * 128.0 / 1575.0 * y.powi(8)
            + 63.0 / 2816.0 * y.powi(10)
    };
    for l in [0.01, 0.05, 0.1, -0.1] {
        assert!((natural_mu2_series(l, 10) - printed(l)).abs() < 1e-15, "{l}");
        let exact = natural_mu2(l).unwrap();
        assert!((natural_mu2_series(l, 60) - exact).abs() < 1e-14);
    }
    // the closed form's remainder after lambda^4 starts with -(8/45) pi^4 lambda^5
    let l = 1e-3;
    let rem = (natural_mu2(l).unwrap() - natural_mu2_series(l, 4)) / l.powi(5);
    let c5 = -8.0 / 45.0 * PI.powi(4);
    assert!((rem / c5 - 1.0).abs() < 1e-2, "{rem}");
    assert_eq!(natural_mu2_series(0.2, 0), 1.0);
    assert_eq!(natural_mu2_series(0.2, 1), 0.8);
}

#[test]
fn measure_values() {
    let m0 = measure(0.0);
    for x in [0.0, 0.5, 7.0] {
        assert_eq!(m0.rho(x).unwrap(), x);
    }
    let m = measure(0.1);
    assert_eq!(m.rho(0.0).unwrap(), 0.0);
    let h = 1e-7;
    assert!((m.rho(h).unwrap() / h - 1.0).abs() < 1e-6);
    let (lo, hi) = m.bounds(3.0);
    let r = m.rho(3.0).unwrap();
    assert!(lo <= r && r <= hi, "{lo} {r} {hi}");
    assert!(m.rho(-1.0).is_err());
}

#[test]
fn sandwich_bounds() {
    for l in [-0.25, -0.1, 0.05, 0.15, 0.3] {
        let m = measure(l);
        for x in [0.01, 0.3, 1.0, 5.0, 40.0, 1e3, 1e5] {
            let (lo, hi) = m.bounds(x);
            let r = m.rho(x).unwrap();
            let slack = 1e-13 * r;
            assert!(lo - slack <= r && r <= hi + slack, "lambda {l} x {x}: {lo} {r} {hi}");
        }
    }
}

#[test]
fn fredholm_equation() {
    let m = measure(0.0);
    assert_eq!(m.fredholm_residual(2.0).unwrap(), 0.0);
    let m = measure(0.1);
    for x in [0.1, 1.0, 10.0, 100.0] {
        let r = m.fredholm_residual(x).unwrap();
        assert!(r < 1e-8, "x = {x}: {r}");
    }
    let m = measure(-0.2);
    for x in [0.1, 1.0, 10.0, 100.0] {
        assert!(m.fredholm_residual(x).unwrap() < 1e-8);
    }
    // any positive mass solves it
    let m = DeformedMeasure4::new(params_of(0.15, Some(2.5)).unwrap());
    assert!(m.fredholm_residual(3.0).unwrap() < 1e-8);
}

#[test]
fn fredholm_fails_for_the_undeformed_measure() {
    // rho = x is not a solution at lambda != 0
    let p = params_of(0.1, None).unwrap();
    let wrong = DeformedMeasure4::new(mft_moyal4::Moyal4Params { alpha: 0.0, ..p });
    assert!(wrong.fredholm_residual(1.0).unwrap() > 1e-3);
}

#[test]
fn dimension() {
    assert_eq!(effective_dimension(0.0).unwrap(), 4.0);
    let d = effective_dimension(0.1).unwrap();
    assert!((d - (4.0 - 2.0 * (0.1 * PI).asin() / PI)).abs() < 1e-15);
    assert!(effective_dimension(1.0 / PI).is_err());
    for l in [0.05, 0.2, -0.15] {
        let e = measure(l).empirical_dimension().unwrap();
        assert!((e - effective_dimension(l).unwrap()).abs() < 0.05, "{l}: {e}");
    }
}

#[test]
fn boundary_condition() {
    let m = measure(0.05);
    let q = m.boundary_integral().unwrap();
    assert!((q - 0.5).abs() < 1e-8, "{q}");
    assert!((m.boundary_integral_limit() - q).abs() < 1e-7);
    assert!((measure(0.0).boundary_integral().unwrap() - 0.5).abs() < 1e-12);
    // with another mass the two routes still agree but the value moves
    let m = DeformedMeasure4::new(params_of(0.1, Some(1.7)).unwrap());
    let q = m.boundary_integral().unwrap();
    assert!((m.boundary_integral_limit() - q).abs() < 1e-7);
    assert!((q - 0.5).abs() > 1e-2);
    // the limit route as a numeric limit
    let x = 1e-4;
    let num = (x - m.rho(x).unwrap()) / (m.params.lambda * x * x);
    assert!((num - q).abs() < 1e-3);
}

#[test]
fn perturbative_two_point() {
    for (a, b) in [(0.0, 0.0), (0.3, 2.0), (5.0, 1.0)] {
        assert_eq!(g2_perturbative(a, b, 0.2, 0).unwrap(), 1.0 / (1.0 + a + b));
    }
    for order in 0..=2 {
        assert_eq!(g2_perturbative(0.0, 0.0, 0.3, order).unwrap(), 1.0);
    }
    assert!(g2_perturbative(1.0, 1.0, 0.1, 3).is_err());
    assert!(g2_perturbative(-1.0, 1.0, 0.1, 1).is_err());
}

#[test]
fn perturbative_slope_at_origin() {
    // d/da G(a,0) at 0 is -1 - lambda + lambda^2
    let h = 1e-6;
    for l in [0.05, 0.1, -0.07] {
        let d = (g2_perturbative(h, 0.0, l, 2).unwrap() - g2_perturbative(0.0, 0.0, l, 2).unwrap()) / h;
        // forward difference error is O(h)
        assert!((d - (-1.0 - l + l * l)).abs() < 1e-5, "{l}: {d}");
    }
}

#[test]
// 0.3183 sits just inside the branch on purpose
#[allow(clippy::approx_constant, clippy::excessive_precision)]
fn branch_end() {
    // mpmath references; at lambda = 1/pi the connection formula turns logarithmic
    let m = measure(1.0 / PI);
    for (x, want) in [(1e3, 141.371432962451308582888), (1e8, 109649.3089149876283817529)] {
        let r = m.rho(x).unwrap();
        assert!((r - want).abs() < 1e-12 * want, "{x}: {r}");
    }
    assert!(m.fredholm_residual(10.0).unwrap() < 1e-8);
    assert!((m.boundary_integral().unwrap() - 0.5).abs() < 1e-8);
    let r = measure(0.3183).rho(1e6).unwrap();
    assert!((r / 8368.712977581970468246865 - 1.0).abs() < 1e-10, "{r}");
}
