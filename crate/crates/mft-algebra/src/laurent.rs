use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::rational::{pow_i, Rational};
use crate::{AlgebraError, MomentPolynomial};

/// Finite sum `lambda^k * sum c_m(r) z_0^{m_0} ... z_{n-1}^{m_{n-1}}`.
///
/// The coupling exponent is shared by all terms. Variables are addressed by
/// slot index; every exponent vector has length `nvars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentExpr {
    nvars: usize,
    lambda_exp: i32,
    terms: BTreeMap<Vec<i32>, MomentPolynomial>,
}

impl LaurentExpr {
    pub fn zero(nvars: usize, lambda_exp: i32) -> Self {
        Self { nvars, lambda_exp, terms: BTreeMap::new() }
    }

    /// `coeff * lambda^lambda_exp * prod z_i^{exps[i]}`.
    pub fn monomial(exps: &[i32], coeff: MomentPolynomial, lambda_exp: i32) -> Self {
        let mut e = Self::zero(exps.len(), lambda_exp);
        e.insert(exps.to_vec(), coeff);
        e
    }

    fn insert(&mut self, m: Vec<i32>, c: MomentPolynomial) {
        debug_assert_eq!(m.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let s = &old + &c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn lambda_exp(&self) -> i32 {
        self.lambda_exp
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &MomentPolynomial)> {
        self.terms.iter().map(|(m, c)| (m.as_slice(), c))
    }

    pub fn coefficient(&self, exps: &[i32]) -> Option<&MomentPolynomial> {
        self.terms.get(exps)
    }

    /// Pads exponent vectors with zeros up to `n` slots.
    pub fn extend_vars(&self, n: usize) -> Self {
        assert!(n >= self.nvars);
        let mut out = Self::zero(n, self.lambda_exp);
        for (m, c) in &self.terms {
            let mut e = m.clone();
            e.resize(n, 0);
            out.insert(e, c.clone());
        }
        out
    }

    /// Moves slot `i` to slot `map[i]` in an expression with `n` slots.
    /// Distinct slots must map to distinct targets.
    pub fn relabel(&self, map: &[usize], n: usize) -> Self {
        assert_eq!(map.len(), self.nvars);
        let mut out = Self::zero(n, self.lambda_exp);
        for (m, c) in &self.terms {
            let mut e = vec![0; n];
            for (i, &x) in m.iter().enumerate() {
                e[map[i]] += x;
            }
            out.insert(e, c.clone());
        }
        out
    }

    /// Sets `z_from = z_to`; slot `from` is left with exponent zero.
    pub fn substitute_equal(&self, from: usize, to: usize) -> Self {
        let mut out = Self::zero(self.nvars, self.lambda_exp);
        for (m, c) in &self.terms {
            let mut e = m.clone();
            e[to] += e[from];
            e[from] = 0;
            out.insert(e, c.clone());
        }
        out
    }

    pub fn with_lambda_exp(mut self, k: i32) -> Self {
        self.lambda_exp = k;
        self
    }

    fn check_lambda(&self, other: &Self) -> Result<i32, AlgebraError> {
        if self.is_zero() {
            return Ok(other.lambda_exp);
        }
        if other.is_zero() || self.lambda_exp == other.lambda_exp {
            return Ok(self.lambda_exp);
        }
        Err(AlgebraError::LambdaMismatch(self.lambda_exp, other.lambda_exp))
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let k = self.check_lambda(other)?;
        let mut out = self.clone();
        out.lambda_exp = k;
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = Self::zero(self.nvars, self.lambda_exp + other.lambda_exp);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Vec<i32> = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.insert(m, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.nvars, self.lambda_exp);
        if c.is_zero() {
            return out;
        }
        for (m, p) in &self.terms {
            out.insert(m.clone(), p.scale(c));
        }
        out
    }

    pub fn scale_poly(&self, p: &MomentPolynomial) -> Self {
        let mut out = Self::zero(self.nvars, self.lambda_exp);
        for (m, c) in &self.terms {
            out.insert(m.clone(), c * p);
        }
        out
    }

    /// Multiplies by `z_var^k`.
    pub fn shift(&self, var: usize, k: i32) -> Self {
        let mut out = Self::zero(self.nvars, self.lambda_exp);
        for (m, c) in &self.terms {
            let mut e = m.clone();
            e[var] += k;
            out.insert(e, c.clone());
        }
        out
    }

    /// `d/dz_var`.
    pub fn derivative(&self, var: usize) -> Self {
        let mut out = Self::zero(self.nvars, self.lambda_exp);
        for (m, c) in &self.terms {
            let k = m[var];
            if k != 0 {
                let mut e = m.clone();
                e[var] -= 1;
                out.insert(e, c.scale(&Rational::from_integer(k.into())));
            }
        }
        out
    }

    /// Applies `f` to every coefficient (exponents unchanged).
    pub fn try_map_coeffs<F>(&self, mut f: F) -> Result<Self, AlgebraError>
    where
        F: FnMut(&MomentPolynomial) -> Result<MomentPolynomial, AlgebraError>,
    {
        let mut out = Self::zero(self.nvars, self.lambda_exp);
        for (m, c) in &self.terms {
            out.insert(m.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Coefficient of `z_var^{-1}`; the slot is left with exponent zero.
    pub fn residue(&self, var: usize) -> Self {
        let mut out = Self::zero(self.nvars, self.lambda_exp);
        for (m, c) in &self.terms {
            if m[var] == -1 {
                let mut e = m.clone();
                e[var] = 0;
                out.insert(e, c.clone());
            }
        }
        out
    }

    /// Exact evaluation at rational `z`, moments `rho` and coupling `lambda`.
    pub fn eval(&self, z: &[Rational], rho: &[Rational], lambda: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.eval(rho);
            for (i, &e) in m.iter().enumerate() {
                if e != 0 {
                    t *= pow_i(&z[i], e);
                }
            }
            acc += t;
        }
        acc * pow_i(lambda, self.lambda_exp)
    }

    pub fn eval_f64(&self, z: &[f64], rho: &[f64], lambda: f64) -> f64 {
        let s: f64 = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut t = c.eval_f64(rho);
                for (i, &e) in m.iter().enumerate() {
                    t *= z[i].powi(e);
                }
                t
            })
            .sum();
        s * lambda.powi(self.lambda_exp)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(m, c)| json!({"z_exponents": m, "coefficient": c.to_json()}))
            .collect();
        json!({"nvars": self.nvars, "lambda_exponent": self.lambda_exp, "terms": terms})
    }
}

impl fmt::Display for LaurentExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        write!(f, "lambda^{} * [", self.lambda_exp)?;
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let zs: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, e)| format!("z{i}^{e}"))
                .collect();
            write!(f, "({c})")?;
            if !zs.is_empty() {
                write!(f, "*{}", zs.join("*"))?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn c(n: i64) -> MomentPolynomial {
        MomentPolynomial::constant(rat_int(n), 2)
    }

    #[test]
    fn residues() {
        let e = LaurentExpr::monomial(&[-1], c(1), 0);
        assert_eq!(e.residue(0), LaurentExpr::monomial(&[0], c(1), 0));
        let e2 = LaurentExpr::monomial(&[-2], c(1), 0);
        assert!(e2.residue(0).is_zero());
        let mix = LaurentExpr::monomial(&[-3], c(5), 0)
            .add(&LaurentExpr::monomial(&[-1], c(7), 0))
            .unwrap();
        assert_eq!(mix.residue(0), LaurentExpr::monomial(&[0], c(7), 0));
    }

    #[test]
    fn lambda_mismatch_is_an_error() {
        let a = LaurentExpr::monomial(&[-3], c(1), 3);
        let b = LaurentExpr::monomial(&[-3], c(1), 2);
        assert!(a.add(&b).is_err());
        assert_eq!(a.add(&LaurentExpr::zero(1, 0)).unwrap(), a);
    }

    #[test]
    fn relabel_and_substitute() {
        let e = LaurentExpr::monomial(&[-3, -5], c(2), 1);
        let r = e.relabel(&[1, 0], 2);
        assert_eq!(r, LaurentExpr::monomial(&[-5, -3], c(2), 1));
        let d = e.substitute_equal(1, 0);
        assert_eq!(d, LaurentExpr::monomial(&[-8, 0], c(2), 1));
    }

    #[test]
    fn derivative_matches_power_rule() {
        let e = LaurentExpr::monomial(&[-3], c(1), 0);
        assert_eq!(e.derivative(0), LaurentExpr::monomial(&[-4], c(-3), 0));
    }
}
