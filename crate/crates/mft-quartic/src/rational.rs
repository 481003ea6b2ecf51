use num_complex::Complex64;

use crate::roots::{deflate, poly_add, poly_mul, roots};
use crate::{DeformedSpectrum, QuarticError};

/// Distance to a pole below which evaluations are flagged.
pub const POLE_WARNING: f64 = 1e-6;

const ROOT_TOL: f64 = 1e-10;
const SAME_POINT: f64 = 1e-12;

/// Roots `u^1..u^N'` of `R(z) = R(u)` other than `z = u`, by decreasing real
/// part.
#[derive(Clone, Debug, PartialEq)]
pub struct Preimages {
    pub base: f64,
    pub roots: Vec<Complex64>,
}

impl Preimages {
    /// Real parts when every root is real.
    pub fn real(&self) -> Option<Vec<f64>> {
        self.roots
            .iter()
            .map(|z| (z.im.abs() <= ROOT_TOL * z.norm().max(1.0)).then_some(z.re))
            .collect()
    }
}

/// `R(z) = z - (lambda/V) sum_k varrho_k/(epsilon_k + z)` with the data
/// derived from it.
#[derive(Clone, Debug)]
pub struct RationalR {
    d: DeformedSpectrum,
    c: f64,
    r_eps: Vec<f64>,
    eps_pre: Vec<Preimages>,
    g_eps: Vec<Vec<f64>>,
}

impl RationalR {
    pub fn new(d: DeformedSpectrum) -> Result<Self, QuarticError> {
        let c = d.spectrum.lambda / d.spectrum.volume;
        let mut r = Self { d, c, r_eps: Vec::new(), eps_pre: Vec::new(), g_eps: Vec::new() };
        r.r_eps = r.d.epsilon.iter().map(|&e| r.eval(e)).collect();
        if c != 0.0 {
            r.eps_pre = r.d.epsilon.iter().map(|&e| r.preimages(e)).collect::<Result<_, _>>()?;
            let n = r.len();
            r.g_eps = (0..n).map(|p| (0..n).map(|q| r.g_eps_from(p, &r.eps_pre[q])).collect()).collect();
        }
        Ok(r)
    }

    pub fn deformed(&self) -> &DeformedSpectrum {
        &self.d
    }

    pub fn len(&self) -> usize {
        self.d.epsilon.len()
    }

    pub fn is_empty(&self) -> bool {
        self.d.epsilon.is_empty()
    }

    fn lambda(&self) -> f64 {
        self.d.spectrum.lambda
    }

    fn r(&self, k: usize) -> f64 {
        self.d.spectrum.multiplicities[k]
    }

    pub fn eval(&self, z: f64) -> f64 {
        z - self.c * self.d.epsilon.iter().zip(&self.d.varrho).map(|(&e, &r)| r / (e + z)).sum::<f64>()
    }

    pub fn eval_c(&self, z: Complex64) -> Complex64 {
        z - self.c * self.d.epsilon.iter().zip(&self.d.varrho).map(|(&e, &r)| r / (e + z)).sum::<Complex64>()
    }

    pub fn derivative(&self, z: f64) -> f64 {
        1.0 + self.c * self.d.epsilon.iter().zip(&self.d.varrho).map(|(&e, &r)| r / (e + z).powi(2)).sum::<f64>()
    }

    pub fn derivative_c(&self, z: Complex64) -> Complex64 {
        1.0 + self.c * self.d.epsilon.iter().zip(&self.d.varrho).map(|(&e, &r)| r / (e + z).powi(2)).sum::<Complex64>()
    }

    pub fn second_derivative(&self, z: f64) -> f64 {
        -2.0 * self.c * self.d.epsilon.iter().zip(&self.d.varrho).map(|(&e, &r)| r / (e + z).powi(3)).sum::<f64>()
    }

    /// Largest of `|R(eps_l) - e_l|/e_l` and `|varrho_l R'(eps_l) - r_l|/r_l`.
    pub fn consistency_residual(&self) -> f64 {
        let s = &self.d.spectrum;
        (0..self.len())
            .map(|l| {
                let a = (self.r_eps[l] - s.eigenvalues[l]).abs() / s.eigenvalues[l];
                let b = (self.d.varrho[l] * self.derivative(self.d.epsilon[l]) - s.multiplicities[l]).abs()
                    / s.multiplicities[l];
                a.max(b)
            })
            .fold(0.0, f64::max)
    }

    /// The other roots of `R(z) = R(u)`.
    pub fn preimages(&self, u: f64) -> Result<Preimages, QuarticError> {
        if self.c == 0.0 {
            return Err(QuarticError::Degenerate("R is the identity at lambda = 0".into()));
        }
        let eps = &self.d.epsilon;
        if eps.iter().any(|&e| (u + e).abs() <= SAME_POINT * e) {
            return Err(QuarticError::AtPole(format!("u = {u}")));
        }
        let ru = self.eval(u);
        // (z - R(u)) prod (z + eps_k) - c sum_k varrho_k prod_{j != k} (z + eps_j)
        let mut p = vec![-ru, 1.0];
        for &e in eps {
            p = poly_mul(&p, &[e, 1.0]);
        }
        for k in 0..eps.len() {
            let mut q = vec![-self.c * self.d.varrho[k]];
            for (j, &e) in eps.iter().enumerate() {
                if j != k {
                    q = poly_mul(&q, &[e, 1.0]);
                }
            }
            p = poly_add(&p, &q);
        }
        let mut rs = roots(&deflate(&p, u));
        rs.sort_by(|a, b| b.re.total_cmp(&a.re));
        for z in &rs {
            let res = (self.eval_c(*z) - ru).norm();
            let scale = 1.0 + ru.abs() + z.norm() * self.derivative_c(*z).norm();
            if !(res <= ROOT_TOL * scale) {
                return Err(QuarticError::RootValidation(format!("|R({z}) - R({u})| = {res:e}")));
            }
        }
        let pre = Preimages { base: u, roots: rs };
        if u >= 0.0 && self.lambda() > 0.0 {
            self.check_interlacing(&pre)?;
        }
        Ok(pre)
    }

    fn check_interlacing(&self, pre: &Preimages) -> Result<(), QuarticError> {
        let re = pre
            .real()
            .ok_or_else(|| QuarticError::RootValidation(format!("complex preimage of {}", pre.base)))?;
        let eps = &self.d.epsilon;
        let n = eps.len();
        for (k, &x) in re.iter().enumerate() {
            let upper = -eps[k];
            let ok = x < upper && (k + 1 == n || x > -eps[k + 1]);
            if !ok {
                return Err(QuarticError::RootValidation(format!("preimage {x} of {} breaks interlacing at {k}", pre.base)));
            }
        }
        Ok(())
    }

    /// Preimages of `epsilon_k` computed at construction.
    pub fn epsilon_preimages(&self, k: usize) -> Option<&Preimages> {
        self.eps_pre.get(k)
    }

    /// `G(eps_p, v)` from the product over the preimages of `v`.
    fn g_eps_from(&self, p: usize, pre: &Preimages) -> f64 {
        let rp = self.r_eps[p];
        let mut num = Complex64::new(1.0, 0.0);
        for z in &pre.roots {
            num *= rp - self.eval_c(-z);
        }
        let den: f64 = (0..self.len()).filter(|&j| j != p).map(|j| rp - self.r_eps[j]).product();
        -(num.re / den) / (self.c * self.r(p))
    }

    /// `G(eps_p, v)` through the preimages of `v`.
    pub fn g_eps_v(&self, p: usize, v: f64) -> Result<f64, QuarticError> {
        if p >= self.len() {
            return Err(QuarticError::Index(p));
        }
        if self.c == 0.0 {
            return Ok(1.0 / (self.d.epsilon[p] + v));
        }
        Ok(self.g_eps_from(p, &self.pre_of(v)?))
    }

    fn eps_index(&self, x: f64) -> Option<usize> {
        self.d.epsilon.iter().position(|&e| (x - e).abs() <= SAME_POINT * e.max(1.0))
    }

    fn pre_of(&self, v: f64) -> Result<Preimages, QuarticError> {
        match self.eps_index(v) {
            Some(k) => Ok(self.eps_pre[k].clone()),
            None => self.preimages(v),
        }
    }

    fn calg_sum(&self, u: f64, v: f64) -> Result<f64, QuarticError> {
        let pre = self.pre_of(v)?;
        let ru = self.eval(u);
        let mut s = 1.0;
        for k in 0..self.len() {
            s += self.c * self.r(k) * self.g_eps_from(k, &pre) / (self.r_eps[k] - ru);
        }
        Ok(s / (self.eval(v) - self.eval(-u)))
    }

    /// Planar 2-point function `G(z, w)`; `G_pq = G(eps_p, eps_q)`.
    pub fn two_point(&self, z: f64, w: f64) -> Result<f64, QuarticError> {
        if z + w == 0.0 {
            return Err(QuarticError::AtPole(format!("z + w = 0 at z = {z}")));
        }
        if self.c == 0.0 {
            return Ok(1.0 / (z + w));
        }
        let v = match (self.eps_index(z), self.eps_index(w)) {
            (Some(p), Some(q)) => self.g_eps[p][q],
            (Some(_), None) => self.calg_sum(w, z)?,
            _ => self.calg_sum(z, w)?,
        };
        if !v.is_finite() {
            return Err(QuarticError::AtPole(format!("({z}, {w})")));
        }
        Ok(v)
    }

    /// `G(z, w)` from the symmetric expansion over the poles `eps_k^m`.
    pub fn two_point_rfe(&self, z: f64, w: f64) -> Result<f64, QuarticError> {
        if z + w == 0.0 {
            return Err(QuarticError::AtPole(format!("z + w = 0 at z = {z}")));
        }
        if self.c == 0.0 {
            return Ok(1.0 / (z + w));
        }
        let n = self.len();
        let (zc, wc) = (Complex64::new(z, 0.0), Complex64::new(w, 0.0));
        let mut s = Complex64::new(0.0, 0.0);
        for k in 0..n {
            for l in 0..n {
                let g = self.g_eps[k][l] * self.r(k) * self.r(l);
                for &a in &self.eps_pre[k].roots {
                    let ra = self.derivative_c(a) * (self.r_eps[l] - self.eval_c(-a)) * (zc - a);
                    for &b in &self.eps_pre[l].roots {
                        let rb = self.derivative_c(b) * (self.r_eps[k] - self.eval_c(-b)) * (wc - b);
                        s += (a + b) * g / (ra * rb);
                    }
                }
            }
        }
        let v = (1.0 + self.c * self.c * s.re) / (z + w);
        if !v.is_finite() {
            return Err(QuarticError::AtPole(format!("({z}, {w})")));
        }
        Ok(v)
    }

    /// Distance from `(z, w)` to the nearest pole of `G`.
    pub fn nearest_pole_distance(&self, z: f64, w: f64) -> f64 {
        let mut d = (z + w).abs();
        for pre in &self.eps_pre {
            for a in &pre.roots {
                d = d.min((Complex64::new(z, 0.0) - a).norm()).min((Complex64::new(w, 0.0) - a).norm());
            }
        }
        d
    }

    fn loop_bracket(&self, z: f64) -> Result<f64, QuarticError> {
        let rz = self.eval(z);
        let mut s = 0.0;
        for k in 0..self.len() {
            let eps = self.d.epsilon[k];
            s += self.c * self.r(k) * (self.two_point(z, eps)? + 1.0 / (self.r_eps[k] - rz));
        }
        Ok(rz + s)
    }

    /// `|R(z) + c sum r_k G(z, eps_k) + c sum r_k/(R(eps_k) - R(z)) + R(-z)|`.
    pub fn jzz_residual(&self, z: f64) -> Result<f64, QuarticError> {
        Ok((self.loop_bracket(z)? + self.eval(-z)).abs())
    }

    /// Residual of the loop equation for `G(z, w)`.
    pub fn sde_residual(&self, z: f64, w: f64) -> Result<f64, QuarticError> {
        let lhs = (self.loop_bracket(z)? + self.eval(w)) * self.two_point(z, w)?;
        let rz = self.eval(z);
        let mut rhs = 1.0;
        for k in 0..self.len() {
            rhs += self.c * self.r(k) * self.two_point(self.d.epsilon[k], w)? / (self.r_eps[k] - rz);
        }
        Ok((lhs - rhs).abs())
    }

    /// `(V/r_q) dF0/de_q`. The `k = q` term of the sum is taken as the limit
    /// `r_q R''(eps_q)/(2 R'(eps_q)^2)`.
    pub fn free_energy_derivative(&self, q: usize) -> Result<f64, QuarticError> {
        if q >= self.len() {
            return Err(QuarticError::Index(q));
        }
        let s = &self.d.spectrum;
        let e = &s.eigenvalues;
        if self.c == 0.0 {
            let v: f64 = (0..self.len()).map(|k| self.r(k) / (e[k] + e[q])).sum();
            return Ok(-v / s.volume);
        }
        let eq = self.d.epsilon[q];
        let mut sum = 0.0;
        for k in 0..self.len() {
            let ek = self.d.epsilon[k];
            sum += if k == q {
                self.r(k) * self.second_derivative(eq) / (2.0 * self.derivative(eq).powi(2))
            } else {
                self.r(k) * (1.0 / (e[k] - e[q]) - 1.0 / (self.derivative(ek) * (ek - eq)))
            };
        }
        Ok((e[q] - eq) / s.lambda + sum / s.volume)
    }
}
