use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::SpecialError;

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Tolerances for the adaptive Gauss-Kronrod integrator.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureOptions {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_depth: u32,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        Self { rel_tol: 1e-10, abs_tol: 1e-13, max_depth: 60 }
    }
}

impl QuadratureOptions {
    pub fn new(rel_tol: f64, abs_tol: f64, max_depth: u32) -> Self {
        assert!(rel_tol > 0.0 && abs_tol > 0.0 && max_depth >= 1, "invalid quadrature settings");
        Self { rel_tol, abs_tol, max_depth }
    }
}

/// Integral estimate together with its error estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub error: f64,
}

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    depth: u32,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, depth: u32) -> Segment {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = WGK[7] * fc;
    let mut g = WG[3] * fc;
    for j in 0..7 {
        let dx = h * XGK[j];
        let s = f(c - dx) + f(c + dx);
        k += WGK[j] * s;
        if j % 2 == 1 {
            g += WG[j / 2] * s;
        }
    }
    let value = k * h;
    let error = ((k - g) * h).abs();
    Segment { a, b, value, error, depth }
}

/// Adaptive G7/K15 integration on the finite interval `[a, b]`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, opts: &QuadratureOptions) -> Result<Quadrature, SpecialError> {
    if a == b {
        return Ok(Quadrature { value: 0.0, error: 0.0 });
    }
    let mut heap = BinaryHeap::new();
    let mut frozen = Vec::new();
    heap.push(kronrod(&f, a, b, 0));
    loop {
        let (value, error) = heap
            .iter()
            .chain(frozen.iter())
            .fold((0.0, 0.0), |(v, e), s: &Segment| (v + s.value, e + s.error));
        if !value.is_finite() || !error.is_finite() {
            return Err(SpecialError::ToleranceNotMet { value, error });
        }
        if error <= opts.abs_tol.max(opts.rel_tol * value.abs()) {
            return Ok(Quadrature { value, error });
        }
        let Some(worst) = heap.pop() else {
            return Err(SpecialError::ToleranceNotMet { value, error });
        };
        if worst.depth >= opts.max_depth {
            frozen.push(worst);
            continue;
        }
        let m = 0.5 * (worst.a + worst.b);
        heap.push(kronrod(&f, worst.a, m, worst.depth + 1));
        heap.push(kronrod(&f, m, worst.b, worst.depth + 1));
    }
}

/// `int_a^inf f(t) dt` through `t = a + w^3`, `w = s/(1-s)`.
///
/// The cubic map keeps tails decaying like `t^-p`, `p > 4/3`, free of an
/// endpoint singularity at `s = 1`.
pub fn integrate_halfline<F: Fn(f64) -> f64>(f: F, a: f64, opts: &QuadratureOptions) -> Result<Quadrature, SpecialError> {
    let g = |s: f64| {
        let d = 1.0 - s;
        let w = s / d;
        let v = f(a + w * w * w) * 3.0 * w * w / (d * d);
        if v.is_finite() {
            v
        } else {
            0.0
        }
    };
    integrate(g, 0.0, 1.0, opts)
}

/// Half-line integral from `breaks[0]` with finite pieces between the
/// breakpoints and a mapped tail after the last one.
pub fn integrate_halfline_split<F: Fn(f64) -> f64>(
    f: F,
    breaks: &[f64],
    opts: &QuadratureOptions,
) -> Result<Quadrature, SpecialError> {
    assert!(!breaks.is_empty());
    let mut total = Quadrature { value: 0.0, error: 0.0 };
    for w in breaks.windows(2) {
        let q = integrate(&f, w[0], w[1], opts)?;
        total.value += q.value;
        total.error += q.error;
    }
    let q = integrate_halfline(&f, *breaks.last().unwrap(), opts)?;
    total.value += q.value;
    total.error += q.error;
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        let opts = QuadratureOptions::default();
        let cases: [(&dyn Fn(f64) -> f64, f64, f64); 4] = [
            (&|t| 1.0 / ((1.0 + t) * (1.0 + t)), 1.0, 1e-12),
            (&|t| (-t).exp(), 1.0, 1e-12),
            (&|t| t / (1.0 + t).powi(4), 1.0 / 6.0, 1e-12),
            (&|t| (1.0 + t).powf(-1.5), 2.0, 1e-10),
        ];
        for (f, exact, tol) in cases {
            let q = integrate_halfline(f, 0.0, &opts).unwrap();
            let err = (q.value - exact).abs();
            assert!(err < tol, "{} vs {exact}", q.value);
            assert!(err <= q.error.max(1e-15) * 10.0);
        }
    }

    #[test]
    fn finite_interval_and_split() {
        let opts = QuadratureOptions::default();
        let q = integrate(|x: f64| x.sqrt(), 0.0, 1.0, &opts).unwrap();
        assert!((q.value - 2.0 / 3.0).abs() < 1e-10);
        let q = integrate_halfline_split(|t: f64| 1.0 / (1.0 + t * t), &[0.0, 1.0, 10.0], &opts).unwrap();
        assert!((q.value - std::f64::consts::FRAC_PI_2).abs() < 1e-11);
    }

    #[test]
    fn divergent_integral_is_reported() {
        let opts = QuadratureOptions::new(1e-10, 1e-13, 12);
        assert!(integrate(|x: f64| 1.0 / x, 0.0, 1.0, &opts).is_err());
    }
}
