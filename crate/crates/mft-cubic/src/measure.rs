use crate::series::Series;
use crate::CubicError;

/// Moyal-type measure of dimension `d` renormalised as a model of dimension `dren`.
///
/// Only the pairs (2,2), (4,4), (6,6), (2,4) and (2,6) carry closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MoyalMeasure {
    d: u8,
    dren: u8,
}

impl MoyalMeasure {
    pub const ALL: [MoyalMeasure; 5] = [
        MoyalMeasure { d: 2, dren: 2 },
        MoyalMeasure { d: 4, dren: 4 },
        MoyalMeasure { d: 6, dren: 6 },
        MoyalMeasure { d: 2, dren: 4 },
        MoyalMeasure { d: 2, dren: 6 },
    ];

    pub fn new(d: u8, dren: u8) -> Result<Self, CubicError> {
        let m = MoyalMeasure { d, dren };
        if Self::ALL.contains(&m) {
            Ok(m)
        } else {
            Err(CubicError::Domain(format!("no closed form for D={d} with renormalisation dimension {dren}")))
        }
    }

    pub fn dim(&self) -> u8 {
        self.d
    }

    pub fn renorm_dim(&self) -> u8 {
        self.dren
    }

    /// Spectral density in `Y = (1+2x)^2`, including the `lambda^2`.
    pub fn density(&self, y: f64, lambda: f64) -> f64 {
        let r = y.sqrt();
        let l2 = lambda * lambda;
        match self.d {
            2 => 2.0 * l2 / r,
            4 => l2 * (r - 1.0) / r,
            _ => l2 * (r - 1.0) * (r - 1.0) / (4.0 * r),
        }
    }

    /// `lambda^2` as a function of `c` on the real branch.
    pub fn lambda_sq(&self, c: f64) -> f64 {
        let s = (1.0 + c).sqrt();
        let l = (1.0 + 1.0 / s).ln();
        // 1 - s without cancellation
        let one_minus_s = -c / (1.0 + s);
        let (num, den) = match (self.d, self.dren) {
            (2, 2) => (one_minus_s, 2.0 * l),
            (4, 4) => (one_minus_s, 1.0 - s * l),
            (6, 6) => (-4.0 * c, 1.0 - 2.0 * s + 2.0 * s * s * l),
            (2, 4) => (one_minus_s, (1.0 - 2.0 * s) / s + 2.0 * s * l),
            _ => (-c, 0.5 / (s * s) + 3.0 - 6.0 * s + 2.0 * (3.0 * s * s - 1.0) * l),
        };
        num / den
    }

    /// Taylor series of [`lambda_sq`](Self::lambda_sq) about `c = 0`.
    pub fn lambda_sq_series(&self, order: usize) -> Series {
        let c = Series::var(order);
        let one_c = c.shift_const(1.0);
        let s = one_c.powf(0.5);
        let l = s.shift_const(1.0).ln().sub(&one_c.ln().scale(0.5));
        let one = Series::constant(1.0, order);
        let (num, den) = match (self.d, self.dren) {
            (2, 2) => (one.sub(&s), l.scale(2.0)),
            (4, 4) => (one.sub(&s), one.sub(&s.mul(&l))),
            (6, 6) => (c.scale(-4.0), one.sub(&s.scale(2.0)).add(&one_c.mul(&l).scale(2.0))),
            (2, 4) => (one.sub(&s), one.sub(&s.scale(2.0)).div(&s).add(&s.mul(&l).scale(2.0))),
            _ => (
                c.scale(-1.0),
                one_c
                    .recip()
                    .scale(0.5)
                    .shift_const(3.0)
                    .sub(&s.scale(6.0))
                    .add(&one_c.scale(3.0).shift_const(-1.0).mul(&l).scale(2.0)),
            ),
        };
        num.div(&den)
    }
}

impl std::fmt::Display for MoyalMeasure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "D={} (renormalised as D={})", self.d, self.dren)
    }
}
