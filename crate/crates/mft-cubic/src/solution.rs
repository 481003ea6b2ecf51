use mft_special::{integrate_halfline, QuadratureOptions};

use crate::{CubicError, MoyalMeasure};

const SCAN: usize = 2000;

fn dlambda_sq(m: &MoyalMeasure, c: f64) -> f64 {
    let h = 1e-6 * (1.0 + c.abs());
    (m.lambda_sq(c + h) - m.lambda_sq(c - h)) / (2.0 * h)
}

/// Radius of the real branch: returns `(lambda_c, c_c)` where `d lambda^2/dc`
/// vanishes, i.e. where `dc/dlambda` diverges.
pub fn critical_coupling(m: &MoyalMeasure) -> Result<(f64, f64), CubicError> {
    // bracket the sign change of the Jacobian, walking up from c = -1
    let grid = |i: usize| -1.0 + i as f64 / SCAN as f64;
    let mut bracket = None;
    let mut prev = dlambda_sq(m, grid(1));
    for i in 2..SCAN {
        let cur = dlambda_sq(m, grid(i));
        if prev > 0.0 && cur <= 0.0 {
            bracket = Some((grid(i - 1), grid(i), prev, cur));
            break;
        }
        prev = cur;
    }
    let (mut a, mut b, mut fa, mut fb) =
        bracket.ok_or_else(|| CubicError::Domain(format!("no turning point of c(lambda) found for {m}")))?;
    // Illinois-modified secant
    let mut side = 0;
    for _ in 0..200 {
        let x = (a * fb - b * fa) / (fb - fa);
        let fx = dlambda_sq(m, x);
        if fx == 0.0 || (b - a).abs() < 1e-14 {
            a = x;
            b = x;
            break;
        }
        if fx * fb < 0.0 {
            a = b;
            fa = fb;
            side = 0;
        } else {
            fa *= if side == 1 { 0.5 } else { 1.0 };
            side = 1;
        }
        b = x;
        fb = fx;
        if (b - a).abs() < 1e-13 {
            break;
        }
    }
    let cc = 0.5 * (a + b);
    Ok((m.lambda_sq(cc).sqrt(), cc))
}

/// Root `c(lambda)` of the implicit equation on the branch through `c(0) = 0`.
pub fn solve_c(m: &MoyalMeasure, lambda: f64) -> Result<f64, CubicError> {
    if !lambda.is_finite() {
        return Err(CubicError::Domain(format!("lambda = {lambda}")));
    }
    let t = lambda * lambda;
    if t == 0.0 {
        return Ok(0.0);
    }
    let (lc, cc) = critical_coupling(m)?;
    if t >= lc * lc {
        return Err(CubicError::OutsideRadius { lambda, lambda_c: lc, c_min: cc });
    }
    // lambda^2(c) decreases from its maximum at cc to 0 at c = 0
    let (mut lo, mut hi) = (cc, 0.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if m.lambda_sq(mid) > t {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let c = 0.5 * (lo + hi);
    let res = m.lambda_sq(c) - t;
    if res.abs() > 1e-12 {
        return Err(CubicError::Domain(format!("implicit equation residual {res:e} at c = {c}")));
    }
    Ok(c)
}

/// Taylor coefficients of `c(lambda)` indexed by the power of `lambda`, up to `lambda^order`.
pub fn c_series(m: &MoyalMeasure, order: usize) -> Result<Vec<f64>, CubicError> {
    if order > 8 {
        return Err(CubicError::Domain(format!("series order {order} > 8")));
    }
    let half = order / 2;
    let mut out = vec![0.0; order + 1];
    if half == 0 {
        return Ok(out);
    }
    let inv = m.lambda_sq_series(half).revert();
    for k in 1..=half {
        out[2 * k] = inv.0[k];
    }
    Ok(out)
}

/// Renormalised planar solution of the cubic model for a fixed coupling.
#[derive(Clone, Debug)]
pub struct CubicSolution {
    measure: MoyalMeasure,
    lambda: f64,
    c: f64,
}

impl CubicSolution {
    pub fn new(measure: MoyalMeasure, lambda: f64) -> Result<Self, CubicError> {
        let c = solve_c(&measure, lambda)?;
        Ok(Self { measure, lambda, c })
    }

    pub fn measure(&self) -> MoyalMeasure {
        self.measure
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// `W(X) - sqrt(X)` with `sqrt(X + c)` replaced by `q`, so that `q < 0`
    /// continues to the second sheet.
    fn excess(&self, q: f64, x: f64) -> f64 {
        let c = self.c;
        let l2 = self.lambda * self.lambda;
        let r = x.sqrt();
        let s = (1.0 + c).sqrt();
        let ds = c / (1.0 + s);
        let dq = if q >= 0.0 { c / (q + r) } else { q - r };
        let lg = ((q + r) * (r + 1.0) / (r * s + q)).ln();
        let l1 = (1.0 + 1.0 / s).ln();
        match (self.measure.dim(), self.measure.renorm_dim()) {
            (2, 2) => dq + 2.0 * l2 * lg / r,
            (4, 4) => dq - ds - l2 * (((s + q) / (2.0 * (1.0 + s))).ln() + lg / r),
            (6, 6) => {
                q * ds + dq - c
                    + 0.5 * l2 * (s - q + ((q + s) / (2.0 * (1.0 + s))).ln() + (1.0 + x) / (2.0 * r) * lg)
            }
            (2, 4) => dq - ds - 2.0 * l2 * (l1 - lg / r),
            _ => {
                q * ds + dq - c
                    + 2.0 * l2 * (s - q - 0.5 + q / (2.0 * s) + (s * (q - s) - 1.0) * l1 + lg / r)
            }
        }
    }

    /// Shifted planar 1-point function at `X >= 1`.
    pub fn w_tilde(&self, x: f64) -> Result<f64, CubicError> {
        if !(x >= 1.0) {
            return Err(CubicError::Domain(format!("W needs X >= 1, got {x}")));
        }
        Ok(x.sqrt() + self.excess((x + self.c).sqrt(), x))
    }

    /// Planar 1-point function `G0(x)` for `x >= 0`.
    pub fn g0(&self, x: f64) -> Result<f64, CubicError> {
        if !(x >= 0.0) {
            return Err(CubicError::Domain(format!("G0 needs x >= 0, got {x}")));
        }
        if self.lambda == 0.0 {
            return Ok(0.0);
        }
        let big_x = (1.0 + 2.0 * x) * (1.0 + 2.0 * x);
        Ok(self.excess((big_x + self.c).sqrt(), big_x) / (2.0 * self.lambda))
    }

    /// Complexified planar 1-point function `G0(z) = W(z^2 - c) / (2 lambda)` on
    /// the real line, including `z < 0`.
    pub fn g0_complexified(&self, z: f64) -> Result<f64, CubicError> {
        let x = z * z - self.c;
        if self.lambda == 0.0 || !(x > 0.0) {
            return Err(CubicError::Domain(format!("G0(z) undefined at z = {z}")));
        }
        Ok((x.sqrt() + self.excess(z, x)) / (2.0 * self.lambda))
    }

    /// Kontsevich time `rho_l` by quadrature over the deformed density.
    pub fn kontsevich_time(&self, l: u32) -> Result<f64, CubicError> {
        let opts = QuadratureOptions::new(1e-12, 1e-15, 60);
        let c = self.c;
        let s = (1.0 + c).sqrt();
        let dens = |t: f64| 2.0 * t * self.measure.density(t * t - c, self.lambda);
        let p = 3 + 2 * l as i32;
        if l == 0 && self.measure.renorm_dim() == 6 {
            // 1/sqrt(Z) eliminated through the second renormalisation condition
            let q = integrate_halfline(|t| -dens(t) * (2.0 * s * t + s * s) / ((s + t).powi(2) * t.powi(3)), s, &opts)?;
            return Ok(s + 0.5 * q.value);
        }
        let q = integrate_halfline(|t| dens(t) / t.powi(p), s, &opts)?;
        let delta = if l == 0 { 1.0 } else { 0.0 };
        Ok(delta - 0.5 * q.value)
    }
}
