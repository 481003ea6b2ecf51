use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::rational::{format_rational, pow_i, Rational};
use crate::AlgebraError;

/// Exponent vector `(e0, e1, ..., eK)` with trailing zeros removed.
/// Only `e0` may be negative.
type Mono = Vec<i32>;

fn trim(mut m: Mono) -> Mono {
    while m.len() > 1 && *m.last().unwrap() == 0 {
        m.pop();
    }
    if m.is_empty() {
        m.push(0);
    }
    m
}

fn mono_mul(a: &[i32], b: &[i32]) -> Mono {
    let n = a.len().max(b.len());
    let mut out = vec![0; n];
    for (i, e) in a.iter().enumerate() {
        out[i] += e;
    }
    for (i, e) in b.iter().enumerate() {
        out[i] += e;
    }
    trim(out)
}

/// Polynomial in `r1..rK` with Laurent dependence on `r0`, exact rational
/// coefficients. `budget` is the largest moment index the value is allowed
/// to mention.
#[derive(Clone, Debug)]
pub struct MomentPolynomial {
    terms: BTreeMap<Mono, Rational>,
    budget: usize,
}

/// Result of the weight grading `sum_k k r_k d/dr_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weight {
    Homogeneous(i64),
    Inhomogeneous,
}

impl PartialEq for MomentPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}
impl Eq for MomentPolynomial {}

impl MomentPolynomial {
    pub fn zero(budget: usize) -> Self {
        Self { terms: BTreeMap::new(), budget }
    }

    pub fn one(budget: usize) -> Self {
        Self::constant(Rational::one(), budget)
    }

    pub fn constant(c: Rational, budget: usize) -> Self {
        let mut p = Self::zero(budget);
        p.insert(vec![0], c);
        p
    }

    /// The single variable `r_l`.
    pub fn rho(l: usize, budget: usize) -> Result<Self, AlgebraError> {
        let mut e = vec![0; l + 1];
        e[l] = 1;
        Self::monomial(&e, Rational::one(), budget)
    }

    /// `c * r0^e0 * r1^e1 * ...`
    pub fn monomial(exps: &[i32], c: Rational, budget: usize) -> Result<Self, AlgebraError> {
        let m = trim(exps.to_vec());
        for (i, &e) in m.iter().enumerate().skip(1) {
            if e < 0 {
                return Err(AlgebraError::NegativeExponent(i));
            }
        }
        if m.len() - 1 > budget && m.len() > 1 {
            return Err(AlgebraError::Budget { needed: m.len() - 1, budget });
        }
        let mut p = Self::zero(budget);
        p.insert(m, c);
        Ok(p)
    }

    fn insert(&mut self, m: Mono, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn with_budget(mut self, budget: usize) -> Result<Self, AlgebraError> {
        if let Some(k) = self.max_index() {
            if k > budget {
                return Err(AlgebraError::Budget { needed: k, budget });
            }
        }
        self.budget = budget;
        Ok(self)
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

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &Rational)> {
        self.terms.iter().map(|(m, c)| (m.as_slice(), c))
    }

    pub fn coefficient(&self, exps: &[i32]) -> Rational {
        self.terms.get(&trim(exps.to_vec())).cloned().unwrap_or_else(Rational::zero)
    }

    /// The constant term if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&vec![0]).cloned(),
            _ => None,
        }
    }

    /// Largest moment index that occurs, ignoring `r0`.
    pub fn max_index(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.len() - 1).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.budget);
        }
        Self {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
            budget: self.budget,
        }
    }

    /// Partial derivative with respect to `r_l`.
    pub fn derivative(&self, l: usize) -> Self {
        let mut out = Self::zero(self.budget);
        for (m, c) in &self.terms {
            if l < m.len() && m[l] != 0 {
                let mut n = m.clone();
                let e = n[l];
                n[l] -= 1;
                out.insert(trim(n), c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    /// Multiplies by `r_l^pow`; negative powers only for `l = 0`.
    pub fn mul_rho(&self, l: usize, pow: i32) -> Result<Self, AlgebraError> {
        if pow == 0 {
            return Ok(self.clone());
        }
        if l > 0 && pow < 0 {
            return Err(AlgebraError::NegativeExponent(l));
        }
        if l > self.budget {
            return Err(AlgebraError::Budget { needed: l, budget: self.budget });
        }
        let mut out = Self::zero(self.budget);
        for (m, c) in &self.terms {
            let mut n = m.clone();
            if n.len() <= l {
                n.resize(l + 1, 0);
            }
            n[l] += pow;
            out.insert(trim(n), c.clone());
        }
        Ok(out)
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::one(self.budget);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Weight under `sum_k k r_k d/dr_k` (r0 carries weight zero).
    /// `None` for the zero polynomial.
    pub fn weight(&self) -> Option<Weight> {
        let mut w = None;
        for m in self.terms.keys() {
            let mw: i64 = m.iter().enumerate().map(|(k, &e)| k as i64 * e as i64).sum();
            match w {
                None => w = Some(mw),
                Some(x) if x != mw => return Some(Weight::Inhomogeneous),
                _ => {}
            }
        }
        w.map(Weight::Homogeneous)
    }

    /// Total degree `sum_k e_k`, if homogeneous.
    pub fn degree(&self) -> Option<i64> {
        let mut d = None;
        for m in self.terms.keys() {
            let md: i64 = m.iter().map(|&e| e as i64).sum();
            match d {
                None => d = Some(md),
                Some(x) if x != md => return None,
                _ => {}
            }
        }
        d
    }

    pub fn eval(&self, rho: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                if e != 0 {
                    t *= pow_i(&rho[i], e);
                }
            }
            acc += t;
        }
        acc
    }

    pub fn eval_f64(&self, rho: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut t = crate::rational::to_f64(c);
                for (i, &e) in m.iter().enumerate() {
                    if e != 0 {
                        t *= rho[i].powi(e);
                    }
                }
                t
            })
            .sum()
    }

    /// Applies `f` to every term and sums the results.
    pub fn try_map_terms<F>(&self, mut f: F) -> Result<Self, AlgebraError>
    where
        F: FnMut(&[i32], &Rational) -> Result<Self, AlgebraError>,
    {
        let mut out = Self::zero(self.budget);
        for (m, c) in &self.terms {
            out = &out + &f(m, c)?;
        }
        Ok(out)
    }

    /// JSON form: list of `{"exponents": [...], "coefficient": "p/q"}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(m, c)| json!({"exponents": m, "coefficient": format_rational(c)}))
            .collect();
        json!({"budget": self.budget, "terms": terms})
    }
}

impl fmt::Display for MomentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            let mut factors = Vec::new();
            for (i, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("r{i}")),
                    _ => factors.push(format!("r{i}^{e}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{}", format_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", format_rational(&a), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a MomentPolynomial> for &'a MomentPolynomial {
    type Output = MomentPolynomial;
    fn add(self, rhs: &MomentPolynomial) -> MomentPolynomial {
        let mut out = self.clone();
        out.budget = self.budget.max(rhs.budget);
        for (m, c) in &rhs.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MomentPolynomial> for &'a MomentPolynomial {
    type Output = MomentPolynomial;
    fn sub(self, rhs: &MomentPolynomial) -> MomentPolynomial {
        let mut out = self.clone();
        out.budget = self.budget.max(rhs.budget);
        for (m, c) in &rhs.terms {
            out.insert(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a MomentPolynomial> for &'a MomentPolynomial {
    type Output = MomentPolynomial;
    fn mul(self, rhs: &MomentPolynomial) -> MomentPolynomial {
        let mut out = MomentPolynomial::zero(self.budget.max(rhs.budget));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.insert(mono_mul(ma, mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &MomentPolynomial {
    type Output = MomentPolynomial;
    fn neg(self) -> MomentPolynomial {
        self.scale(&-Rational::one())
    }
}

impl Add for MomentPolynomial {
    type Output = MomentPolynomial;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for MomentPolynomial {
    type Output = MomentPolynomial;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for MomentPolynomial {
    type Output = MomentPolynomial;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Neg for MomentPolynomial {
    type Output = MomentPolynomial;
    fn neg(self) -> Self {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn r(l: usize) -> MomentPolynomial {
        MomentPolynomial::rho(l, 8).unwrap()
    }

    fn inv_r0(p: i32) -> MomentPolynomial {
        MomentPolynomial::monomial(&[-p], rat_int(1), 8).unwrap()
    }

    #[test]
    fn monomial_product() {
        let q = &r(1) * &inv_r0(1);
        let sq = &q * &q;
        assert_eq!(sq, MomentPolynomial::monomial(&[-2, 2], rat_int(1), 8).unwrap());
    }

    #[test]
    fn additive_identity() {
        let p = &r(2) * &inv_r0(3);
        assert_eq!(&p + &MomentPolynomial::zero(8), p);
    }

    #[test]
    fn r2_from_parts() {
        let a = &r(1) * &inv_r0(1);
        let r2 = &(&a * &a).scale(&rat(2, 15)) - &(&r(2) * &inv_r0(1)).scale(&rat(4, 21));
        assert_eq!(r2.coefficient(&[-2, 2]), rat(2, 15));
        assert_eq!(r2.coefficient(&[-1, 0, 1]), rat(-4, 21));
        assert_eq!(r2.len(), 2);
    }

    #[test]
    fn weights() {
        assert_eq!((&r(1) * &inv_r0(1)).weight(), Some(Weight::Homogeneous(1)));
        assert_eq!(MomentPolynomial::one(3).weight(), Some(Weight::Homogeneous(0)));
        let p = &(&r(1) * &r(2)) * &inv_r0(2);
        assert_eq!(p.weight(), Some(Weight::Homogeneous(3)));
        assert_eq!((&r(1) + &r(2)).weight(), Some(Weight::Inhomogeneous));
        assert_eq!(MomentPolynomial::zero(2).weight(), None);
    }

    #[test]
    fn budget_is_enforced() {
        assert!(MomentPolynomial::rho(4, 3).is_err());
        let p = MomentPolynomial::rho(3, 3).unwrap();
        assert_eq!(p.mul_rho(4, 1), Err(AlgebraError::Budget { needed: 4, budget: 3 }));
        assert!(MomentPolynomial::monomial(&[0, -1], rat_int(1), 3).is_err());
    }

    #[test]
    fn derivative_of_negative_power() {
        let p = inv_r0(2);
        assert_eq!(p.derivative(0), MomentPolynomial::monomial(&[-3], rat_int(-2), 8).unwrap());
        assert!(p.derivative(1).is_zero());
    }

    #[test]
    fn display_is_readable() {
        let p = &r(1).scale(&rat(-21, 160)) + &MomentPolynomial::one(3);
        assert_eq!(p.to_string(), "-21/160*r1 + 1");
    }
}
