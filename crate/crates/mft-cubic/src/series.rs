//! Truncated power series with f64 coefficients.

#[derive(Clone, Debug, PartialEq)]
pub struct Series(pub Vec<f64>);

impl Series {
    pub fn constant(a: f64, n: usize) -> Self {
        let mut v = vec![0.0; n + 1];
        v[0] = a;
        Series(v)
    }

    /// The variable itself.
    pub fn var(n: usize) -> Self {
        let mut v = vec![0.0; n + 1];
        if n > 0 {
            v[1] = 1.0;
        }
        Series(v)
    }

    pub fn order(&self) -> usize {
        self.0.len() - 1
    }

    pub fn add(&self, o: &Self) -> Self {
        Series(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        Series(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: f64) -> Self {
        Series(self.0.iter().map(|a| a * k).collect())
    }

    pub fn shift_const(&self, k: f64) -> Self {
        let mut v = self.0.clone();
        v[0] += k;
        Series(v)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.order();
        let mut v = vec![0.0; n + 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate().take(n + 1 - i) {
                v[i + j] += a * b;
            }
        }
        Series(v)
    }

    pub fn recip(&self) -> Self {
        let n = self.order();
        let a0 = self.0[0];
        assert!(a0 != 0.0, "reciprocal of a series without constant term");
        let mut v = vec![0.0; n + 1];
        v[0] = 1.0 / a0;
        for k in 1..=n {
            let s: f64 = (1..=k).map(|j| self.0[j] * v[k - j]).sum();
            v[k] = -s / a0;
        }
        Series(v)
    }

    pub fn div(&self, o: &Self) -> Self {
        self.mul(&o.recip())
    }

    /// `(a0 + u)^p` for a positive constant term.
    pub fn powf(&self, p: f64) -> Self {
        let n = self.order();
        let a0 = self.0[0];
        assert!(a0 > 0.0);
        // J.C.P. Miller recurrence
        let mut v = vec![0.0; n + 1];
        v[0] = a0.powf(p);
        for k in 1..=n {
            let s: f64 = (1..=k).map(|j| (p * j as f64 - (k - j) as f64) * self.0[j] * v[k - j]).sum();
            v[k] = s / (k as f64 * a0);
        }
        Series(v)
    }

    /// `log` for a positive constant term.
    pub fn ln(&self) -> Self {
        let n = self.order();
        let a0 = self.0[0];
        assert!(a0 > 0.0);
        let mut v = vec![0.0; n + 1];
        v[0] = a0.ln();
        for k in 1..=n {
            let s: f64 = (1..k).map(|j| j as f64 * v[j] * self.0[k - j]).sum();
            v[k] = (self.0[k] - s / k as f64) / a0;
        }
        Series(v)
    }

    pub fn compose(&self, inner: &Self) -> Self {
        assert_eq!(inner.0[0], 0.0);
        let n = self.order();
        let mut out = Series::constant(0.0, n);
        for a in self.0.iter().rev() {
            out = out.mul(inner).shift_const(*a);
        }
        out
    }

    /// Compositional inverse of a series `a1 x + a2 x^2 + ...` with `a1 != 0`.
    pub fn revert(&self) -> Self {
        let n = self.order();
        assert_eq!(self.0[0], 0.0);
        let a1 = self.0[1];
        assert!(a1 != 0.0);
        let mut g = Series::var(n).scale(1.0 / a1);
        // fixed point g = (x - (f(g) - a1 g)) / a1, one new order per pass
        let mut rest = self.clone();
        rest.0[1] = 0.0;
        for _ in 1..n {
            g = Series::var(n).sub(&rest.compose(&g)).scale(1.0 / a1);
        }
        g
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, a| acc * x + a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_and_log_of_one_plus_x() {
        let x = Series::var(6).shift_const(1.0);
        let s = x.powf(0.5);
        assert!((s.0[2] + 0.125).abs() < 1e-15);
        let l = x.ln();
        for k in 1..=6 {
            let want = if k % 2 == 1 { 1.0 } else { -1.0 } / k as f64;
            assert!((l.0[k] - want).abs() < 1e-15);
        }
    }

    #[test]
    fn reversion_of_exp_minus_one() {
        let mut e = vec![0.0; 8];
        let mut f = 1.0;
        for k in 1..8 {
            f *= k as f64;
            e[k] = 1.0 / f;
        }
        let inv = Series(e).revert();
        for k in 1..8 {
            let want = if k % 2 == 1 { 1.0 } else { -1.0 } / k as f64;
            assert!((inv.0[k] - want).abs() < 1e-13, "{k}");
        }
    }
}
