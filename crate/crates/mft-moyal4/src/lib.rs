//! Quartic model on four-dimensional Moyal space: the hypergeometric
//! deformed measure, its effective spectral dimension and the perturbative
//! planar 2-point function.
//!
//! ```
//! use mft_moyal4::{params_of, DeformedMeasure4};
//!
//! let m = DeformedMeasure4::new(params_of(0.1, None).unwrap());
//! assert!(m.fredholm_residual(1.0).unwrap() < 1e-8);
//! ```

use std::f64::consts::PI;

use mft_special::{dilog, gamma, hyp2f1, integrate, integrate_halfline, QuadratureOptions, SpecialError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Moyal4Error {
    #[error("lambda = {0} is outside the real branch (-1/pi, 1/pi]")]
    Branch(f64),
    #[error("domain error: {0}")]
    Domain(String),
    #[error(transparent)]
    Numeric(#[from] SpecialError),
}

/// Coupling data: `sin(pi alpha) = pi lambda`, the mass `mu^2` and
/// `c = lambda/(alpha (1 - alpha))`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Moyal4Params {
    pub lambda: f64,
    pub alpha: f64,
    pub mu2: f64,
    pub c_lambda: f64,
}

/// `alpha(1 - alpha)/lambda`, equal to one at `lambda = 0`.
pub fn natural_mu2(lambda: f64) -> Result<f64, Moyal4Error> {
    let a = alpha(lambda)?;
    Ok(if lambda == 0.0 { 1.0 } else { a * (1.0 - a) / lambda })
}

fn alpha(lambda: f64) -> Result<f64, Moyal4Error> {
    if !(lambda > -1.0 / PI && lambda <= 1.0 / PI) {
        return Err(Moyal4Error::Branch(lambda));
    }
    Ok((lambda * PI).min(1.0).asin() / PI)
}

pub fn params_of(lambda: f64, mu2: Option<f64>) -> Result<Moyal4Params, Moyal4Error> {
    let a = alpha(lambda)?;
    let mu2 = match mu2 {
        Some(m) if !(m > 0.0 && m.is_finite()) => return Err(Moyal4Error::Domain(format!("mu^2 = {m} must be positive"))),
        Some(m) => m,
        None => natural_mu2(lambda)?,
    };
    let c_lambda = if lambda == 0.0 { 1.0 } else { lambda / (a * (1.0 - a)) };
    Ok(Moyal4Params { lambda, alpha: a, mu2, c_lambda })
}

/// Power series of the natural `mu^2` in `lambda`, truncated after `lambda^order`.
///
/// Written as `arcsin(y)/y - lambda (arcsin(y)/y)^2` with `y = pi lambda`.
pub fn natural_mu2_series(lambda: f64, order: usize) -> f64 {
    let y2 = (PI * lambda).powi(2);
    let mut sum = 0.0;
    let (mut c, mut d, mut p) = (1.0, 1.0, 1.0);
    for n in 0..=order / 2 {
        let nf = n as f64;
        sum += c * p;
        if 2 * n < order {
            sum -= lambda * d * p;
        }
        c *= (2.0 * nf + 1.0).powi(2) / ((2.0 * nf + 2.0) * (2.0 * nf + 3.0));
        d *= (2.0 * nf + 2.0).powi(2) / ((2.0 * nf + 3.0) * (2.0 * nf + 4.0));
        p *= y2;
    }
    sum
}

/// Space-time dimension `4 - 2 arcsin(pi lambda)/pi` of the deformed measure.
pub fn effective_dimension(lambda: f64) -> Result<f64, Moyal4Error> {
    if !(lambda.abs() < 1.0 / PI) {
        return Err(Moyal4Error::Branch(lambda));
    }
    Ok(4.0 - 2.0 * alpha(lambda)?)
}

/// `rho(x) = x 2F1(alpha, 1 - alpha; 2; -x/mu^2)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DeformedMeasure4 {
    pub params: Moyal4Params,
}

fn quad_options() -> QuadratureOptions {
    QuadratureOptions::new(1e-13, 1e-15, 60)
}

impl DeformedMeasure4 {
    pub fn new(params: Moyal4Params) -> Self {
        Self { params }
    }

    fn hyp(&self, x: f64) -> Result<f64, Moyal4Error> {
        let a = self.params.alpha;
        Ok(hyp2f1(a, 1.0 - a, 2.0, -x / self.params.mu2)?)
    }

    pub fn rho(&self, x: f64) -> Result<f64, Moyal4Error> {
        if !(x >= 0.0) {
            return Err(Moyal4Error::Domain(format!("rho needs x >= 0, got {x}")));
        }
        Ok(x * self.hyp(x)?)
    }

    /// Envelopes `x (1+x/mu^2)^-alpha` times `1` and
    /// `Gamma(1-2a)/(Gamma(2-a)Gamma(1-a))`, returned as (lower, upper).
    /// The two swap roles for negative coupling.
    pub fn bounds(&self, x: f64) -> (f64, f64) {
        let a = self.params.alpha;
        let e = x * (1.0 + x / self.params.mu2).powf(-a);
        let f = e * gamma(1.0 - 2.0 * a) / (gamma(2.0 - a) * gamma(1.0 - a));
        (e.min(f), e.max(f))
    }

    fn integral<F: Fn(f64) -> f64>(&self, f: F, split: f64) -> Result<f64, Moyal4Error> {
        let opts = quad_options();
        let head = integrate(&f, 0.0, split, &opts)?;
        let tail = integrate_halfline(&f, split, &opts)?;
        Ok(head.value + tail.value)
    }

    /// `|rho(x) - x + lambda x^2 int_0^inf rho(t) dt/((t+mu^2)^2 (t+mu^2+x))|`.
    pub fn fredholm_residual(&self, x: f64) -> Result<f64, Moyal4Error> {
        let r = self.rho(x)?;
        let lambda = self.params.lambda;
        if lambda == 0.0 {
            return Ok((r - x).abs());
        }
        let m = self.params.mu2;
        let f = |t: f64| self.rho(t).unwrap_or(f64::NAN) / ((t + m).powi(2) * (t + m + x));
        let i = self.integral(f, (10.0 * x).max(10.0))?;
        Ok((r - x + lambda * x * x * i).abs())
    }

    /// `int_0^inf rho(t)/(mu^2+t)^3 dt` by quadrature.
    pub fn boundary_integral(&self) -> Result<f64, Moyal4Error> {
        let m = self.params.mu2;
        self.integral(|t| self.rho(t).unwrap_or(f64::NAN) / (t + m).powi(3), 10.0 * m)
    }

    /// `lim_{x->0} (x - rho(x))/(lambda x^2)`, from the first series
    /// coefficient of the hypergeometric function.
    pub fn boundary_integral_limit(&self) -> f64 {
        let (a, l) = (self.params.alpha, self.params.lambda);
        if l == 0.0 {
            return 0.5 / self.params.mu2;
        }
        a * (1.0 - a) / (2.0 * l * self.params.mu2)
    }

    /// Dimension read off the log-log slope of `rho` on `[10^3, 10^6]`.
    pub fn empirical_dimension(&self) -> Result<f64, Moyal4Error> {
        let n = 31;
        let mut pts = Vec::with_capacity(n);
        for i in 0..n {
            let lx = (3.0 + 3.0 * i as f64 / (n - 1) as f64) * std::f64::consts::LN_10;
            pts.push((lx, self.rho(lx.exp())?.ln()));
        }
        let mx = pts.iter().map(|p| p.0).sum::<f64>() / n as f64;
        let my = pts.iter().map(|p| p.1).sum::<f64>() / n as f64;
        let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
        Ok(2.0 * sxy / sxx + 2.0)
    }
}

/// Planar 2-point function through `lambda^order`, normalised by `G(0,0) = 1`.
pub fn g2_perturbative(a: f64, b: f64, lambda: f64, order: usize) -> Result<f64, Moyal4Error> {
    if !(a >= 0.0 && b >= 0.0) {
        return Err(Moyal4Error::Domain(format!("need a, b >= 0, got ({a}, {b})")));
    }
    if order > 2 {
        return Err(Moyal4Error::Domain(format!("order {order} exceeds 2")));
    }
    let s = 1.0 + a + b;
    let (la, lb) = ((1.0 + a).ln(), (1.0 + b).ln());
    let mut g = 1.0 / s;
    if order >= 1 {
        g -= lambda * ((1.0 + a) * la + (1.0 + b) * lb) / (s * s);
    }
    if order >= 2 {
        let zeta2 = PI * PI / 6.0;
        let t = zeta2 * a * b + (1.0 + a) * (1.0 + b) * la * lb
            - a * (1.0 + b) * lb * lb
            - b * (1.0 + a) * la * la
            - (1.0 + b + 2.0 * a + 2.0 * a * b + a * a) * dilog(-a)?
            - (1.0 + a + 2.0 * b + 2.0 * a * b + b * b) * dilog(-b)?;
        g += lambda * lambda * t / (s * s * s);
    }
    Ok(g)
}
