use serde::{Deserialize, Serialize};

use crate::QuarticError;

const MAX_ITERATIONS: usize = 500;
const RESIDUAL_TOL: f64 = 1e-13;

/// Distinct eigenvalues `0 < e_1 < .. < e_N'` with multiplicities `r_k`,
/// volume `V` and coupling `lambda`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub multiplicities: Vec<f64>,
    #[serde(rename = "V")]
    pub volume: f64,
    pub lambda: f64,
}

impl Spectrum {
    pub fn new(eigenvalues: Vec<f64>, multiplicities: Vec<f64>, volume: f64, lambda: f64) -> Result<Self, QuarticError> {
        let s = Self { eigenvalues, multiplicities, volume, lambda };
        s.validate()?;
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self, QuarticError> {
        let s: Self = serde_json::from_str(text).map_err(|e| QuarticError::InvalidSpectrum(e.to_string()))?;
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), QuarticError> {
        let bad = |m: &str| Err(QuarticError::InvalidSpectrum(m.into()));
        if self.eigenvalues.is_empty() {
            return bad("no eigenvalues");
        }
        if self.eigenvalues.len() != self.multiplicities.len() {
            return bad("eigenvalue and multiplicity counts differ");
        }
        if !(self.eigenvalues[0] > 0.0) || self.eigenvalues.windows(2).any(|w| !(w[0] < w[1])) {
            return bad("eigenvalues must be positive and strictly increasing");
        }
        if self.multiplicities.iter().any(|&r| !(r > 0.0 && r.is_finite())) {
            return bad("multiplicities must be positive");
        }
        if !(self.volume > 0.0 && self.volume.is_finite()) {
            return bad("V must be positive");
        }
        if !self.lambda.is_finite() || self.eigenvalues.iter().any(|e| !e.is_finite()) {
            return bad("non-finite input");
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// Same data at another coupling.
    pub fn with_lambda(&self, lambda: f64) -> Self {
        Self { lambda, ..self.clone() }
    }
}

/// Deformed spectrum `(epsilon_k, varrho_k)` continuing `(e_k, r_k)` away
/// from `lambda = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct DeformedSpectrum {
    pub spectrum: Spectrum,
    pub epsilon: Vec<f64>,
    pub varrho: Vec<f64>,
    pub iterations: usize,
    pub residual: f64,
}

/// `sum_k varrho_k/(eps_k + x)^p`.
fn pole_sum(eps: &[f64], rho: &[f64], x: f64, p: i32) -> f64 {
    eps.iter().zip(rho).map(|(&e, &r)| r / (e + x).powi(p)).sum()
}

/// Largest relative residual of the two implicit equations.
pub fn implicit_residual(s: &Spectrum, eps: &[f64], rho: &[f64]) -> f64 {
    let c = s.lambda / s.volume;
    let mut worst: f64 = 0.0;
    for l in 0..s.len() {
        let a = eps[l] - c * pole_sum(eps, rho, eps[l], 1) - s.eigenvalues[l];
        let b = s.multiplicities[l] / rho[l] - c * pole_sum(eps, rho, eps[l], 2) - 1.0;
        worst = worst.max((a / s.eigenvalues[l]).abs()).max(b.abs());
    }
    if worst.is_nan() {
        f64::INFINITY
    } else {
        worst
    }
}

/// Damped fixed-point iteration started at `(e, r)`.
pub fn deform(s: &Spectrum) -> Result<DeformedSpectrum, QuarticError> {
    s.validate()?;
    let n = s.len();
    let mut eps = s.eigenvalues.clone();
    let mut rho = s.multiplicities.clone();
    let done = |eps: Vec<f64>, rho: Vec<f64>, iterations, residual| {
        Ok(DeformedSpectrum { spectrum: s.clone(), epsilon: eps, varrho: rho, iterations, residual })
    };
    if s.lambda == 0.0 {
        return done(eps, rho, 0, 0.0);
    }
    let c = s.lambda / s.volume;
    let mut theta = 1.0;
    let mut last = implicit_residual(s, &eps, &rho);
    let mut prev_step: Option<Vec<f64>> = None;
    for it in 1..=MAX_ITERATIONS {
        let mut step = vec![0.0; 2 * n];
        for l in 0..n {
            step[l] = s.eigenvalues[l] + c * pole_sum(&eps, &rho, eps[l], 1) - eps[l];
            step[n + l] = s.multiplicities[l] / (1.0 + c * pole_sum(&eps, &rho, eps[l], 2)) - rho[l];
        }
        // oscillation: consecutive steps point against each other
        if let Some(p) = &prev_step {
            if p.iter().zip(&step).map(|(a, b)| a * b).sum::<f64>() < 0.0 {
                theta = 0.5;
            }
        }
        for l in 0..n {
            eps[l] += theta * step[l];
            rho[l] += theta * step[n + l];
        }
        prev_step = Some(step);
        let res = implicit_residual(s, &eps, &rho);
        if !res.is_finite() {
            return Err(QuarticError::OutsideNeighbourhood { iterations: it, residual: res });
        }
        if res < RESIDUAL_TOL {
            return done(eps, rho, it, res);
        }
        if res > last {
            theta = 0.5;
        }
        last = res;
    }
    Err(QuarticError::OutsideNeighbourhood { iterations: MAX_ITERATIONS, residual: last })
}
