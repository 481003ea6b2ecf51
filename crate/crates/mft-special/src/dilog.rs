use std::f64::consts::PI;

use crate::SpecialError;

// B_n / (n+1)! for n = 0, 1, 2, 4, ..., 30
#[allow(clippy::excessive_precision)]
const BERNOULLI: [(i32, f64); 17] = [
    (0, 1.0),
    (1, -0.25),
    (2, 0.027_777_777_777_777_778),
    (4, -2.777_777_777_777_777_8e-4),
    (6, 4.724_111_866_969_009_826_2e-6),
    (8, -9.185_773_074_661_963_550_8e-8),
    (10, 1.897_886_998_897_099_907_2e-9),
    (12, -4.064_761_645_144_225_526_8e-11),
    (14, 8.921_691_020_456_452_555_2e-13),
    (16, -1.993_929_586_072_107_568_7e-14),
    (18, 4.518_980_029_619_918_191_7e-16),
    (20, -1.035_651_761_218_124_701_4e-17),
    (22, 2.395_218_621_026_186_745_7e-19),
    (24, -5.581_785_874_325_009_336_3e-21),
    (26, 1.309_150_755_418_321_285_8e-22),
    (28, -3.087_419_802_426_740_293_2e-24),
    (30, 7.315_975_652_702_203_420_4e-26),
];

/// Core expansion in `u = -ln(1-x)`, accurate for `|u| <= ln 2`.
fn bernoulli_series(x: f64) -> f64 {
    let u = -(-x).ln_1p();
    let mut s = 0.0;
    for &(n, c) in BERNOULLI.iter().rev() {
        s += c * u.powi(n + 1);
    }
    s
}

/// Real dilogarithm `Li2(x)` for `x <= 1`.
pub fn dilog(x: f64) -> Result<f64, SpecialError> {
    if x.is_nan() || x > 1.0 {
        return Err(SpecialError::Domain(x, "dilog needs x <= 1"));
    }
    let zeta2 = PI * PI / 6.0;
    Ok(if x == 1.0 {
        zeta2
    } else if x == 0.0 {
        0.0
    } else if x < -1.0 {
        let l = (-x).ln();
        -zeta2 - 0.5 * l * l - bernoulli_series(1.0 / x)
    } else if x <= 0.5 {
        bernoulli_series(x)
    } else {
        zeta2 - x.ln() * (-x).ln_1p() - bernoulli_series(1.0 - x)
    })
}
