use std::collections::BTreeMap;
use std::fmt;

use mft_algebra::{rat_int, LaurentExpr, MomentPolynomial, Rational};
use num_traits::One;

use crate::KontsevichError;

/// Linear factor `z_i + s z_j` with `i < j`, `s = +-1`.
type Factor = (usize, usize, i8);

/// Laurent numerator over a product of linear factors `z_i +- z_j`.
///
/// Zero testing is exact: a sum brought to a common denominator vanishes
/// iff its numerator does.
#[derive(Clone, Debug)]
pub struct RatFn {
    num: LaurentExpr,
    den: BTreeMap<Factor, u32>,
}

fn factor_expr(f: Factor, n: usize) -> LaurentExpr {
    let (i, j, s) = f;
    let mut a = vec![0; n];
    a[i] = 1;
    let mut b = vec![0; n];
    b[j] = 1;
    let one = MomentPolynomial::one(0);
    LaurentExpr::monomial(&a, one.clone(), 0)
        .add(&LaurentExpr::monomial(&b, one.scale(&rat_int(s as i64)), 0))
        .expect("same lambda exponent")
}

fn factor_pow(f: Factor, n: usize, m: u32) -> LaurentExpr {
    let base = factor_expr(f, n);
    let mut acc = LaurentExpr::monomial(&vec![0; n], MomentPolynomial::one(0), 0);
    for _ in 0..m {
        acc = acc.mul(&base);
    }
    acc
}

impl RatFn {
    pub fn from_laurent(num: LaurentExpr) -> Self {
        Self { num, den: BTreeMap::new() }
    }

    /// `num / prod (z_i + s z_j)^m`.
    pub fn new(num: LaurentExpr, factors: &[(usize, usize, i8, u32)]) -> Self {
        let mut r = Self::from_laurent(num);
        for &(i, j, s, m) in factors {
            assert!(i < j && (s == 1 || s == -1));
            *r.den.entry((i, j, s)).or_insert(0) += m;
        }
        r
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn numerator(&self) -> &LaurentExpr {
        &self.num
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn shift(&self, var: usize, k: i32) -> Self {
        Self { num: self.num.shift(var, k), den: self.den.clone() }
    }

    pub fn with_lambda_exp(&self, k: i32) -> Self {
        Self { num: self.num.clone().with_lambda_exp(k), den: self.den.clone() }
    }

    pub fn lambda_exp(&self) -> i32 {
        self.num.lambda_exp()
    }

    pub fn add(&self, other: &Self) -> Result<Self, KontsevichError> {
        let n = self.nvars();
        let mut den = self.den.clone();
        for (f, &m) in &other.den {
            let e = den.entry(*f).or_insert(0);
            *e = (*e).max(m);
        }
        let lift = |r: &Self| {
            let mut num = r.num.clone();
            for (f, &m) in &den {
                let have = r.den.get(f).copied().unwrap_or(0);
                if m > have {
                    num = num.mul(&factor_pow(*f, n, m - have));
                }
            }
            num
        };
        let num = lift(self).add(&lift(other))?;
        Ok(Self { num, den })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, KontsevichError> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut den = self.den.clone();
        for (f, &m) in &other.den {
            *den.entry(*f).or_insert(0) += m;
        }
        Self { num: self.num.mul(&other.num), den }
    }

    /// `d/dz_var`.
    pub fn derivative(&self, var: usize) -> Self {
        let n = self.nvars();
        let touched: Vec<(Factor, u32)> =
            self.den.iter().filter(|((i, j, _), _)| *i == var || *j == var).map(|(f, m)| (*f, *m)).collect();
        let mut num = self.num.derivative(var);
        for (f, _) in &touched {
            num = num.mul(&factor_expr(*f, n));
        }
        for (k, (f, m)) in touched.iter().enumerate() {
            let (i, _, s) = *f;
            let c = if i == var { 1 } else { s as i64 };
            let mut t = self.num.scale(&rat_int(-c * *m as i64));
            for (l, (g, _)) in touched.iter().enumerate() {
                if l != k {
                    t = t.mul(&factor_expr(*g, n));
                }
            }
            num = num.add(&t).expect("same lambda exponent");
        }
        let mut den = self.den.clone();
        for (f, _) in &touched {
            *den.get_mut(f).unwrap() += 1;
        }
        Self { num, den }
    }

    /// Sends slot `i` to slot `map[i]` in a function of `n` variables.
    /// Merged slots turn `z + z` into `2z`; a merged `z - z` is an error.
    pub fn relabel(&self, map: &[usize], n: usize) -> Result<Self, KontsevichError> {
        let mut num = self.num.relabel(map, n);
        let mut den = BTreeMap::new();
        for (&(i, j, s), &m) in &self.den {
            let (a, b) = (map[i], map[j]);
            if a == b {
                if s < 0 {
                    return Err(KontsevichError::Domain("vanishing denominator z - z".into()));
                }
                num = num.shift(a, -(m as i32)).scale(&mft_algebra::rational::pow_i(&rat_int(2), -(m as i32)));
            } else if a < b {
                *den.entry((a, b, s)).or_insert(0) += m;
            } else {
                if s < 0 && m % 2 == 1 {
                    num = num.scale(&-Rational::one());
                }
                *den.entry((b, a, s)).or_insert(0) += m;
            }
        }
        Ok(Self { num, den })
    }

    pub fn eval(&self, z: &[Rational], rho: &[Rational], lambda: &Rational) -> Rational {
        let mut d = Rational::one();
        for (&(i, j, s), &m) in &self.den {
            let f = &z[i] + &z[j] * rat_int(s as i64);
            d *= mft_algebra::rational::pow_i(&f, m as i32);
        }
        self.num.eval(z, rho, lambda) / d
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.num)?;
        for (&(i, j, s), &m) in &self.den {
            let op = if s > 0 { '+' } else { '-' };
            write!(f, " / (z{i} {op} z{j})^{m}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use mft_algebra::rat;

    fn mono(e: &[i32], c: i64) -> LaurentExpr {
        LaurentExpr::monomial(e, MomentPolynomial::constant(rat_int(c), 0), 0)
    }

    #[test]
    fn partial_fractions_cancel() {
        // 1/(x-y) - 1/(x+y) - 2y/((x-y)(x+y)) = 0
        let a = RatFn::new(mono(&[0, 0], 1), &[(0, 1, -1, 1)]);
        let b = RatFn::new(mono(&[0, 0], 1), &[(0, 1, 1, 1)]);
        let c = RatFn::new(mono(&[0, 1], 2), &[(0, 1, -1, 1), (0, 1, 1, 1)]);
        assert!(a.sub(&b).unwrap().sub(&c).unwrap().is_zero());
    }

    #[test]
    fn derivative_matches_difference_quotient() {
        let f = RatFn::new(mono(&[-1, -1], 1), &[(0, 1, 1, 2)]);
        let d = f.derivative(0);
        let l = rat_int(1);
        let z = [rat(3, 2), rat(5, 7)];
        // d/dx [1/(x y (x+y)^2)] = -1/(x^2 y (x+y)^2) - 2/(x y (x+y)^3)
        let (x, y) = (&z[0], &z[1]);
        let s = x + y;
        let want = -(x * x * y * &s * &s).recip() - rat_int(2) * (x * y * &s * &s * &s).recip();
        assert_eq!(d.eval(&z, &[], &l), want);
    }

    #[test]
    fn relabel_merges_and_orders() {
        let f = RatFn::new(mono(&[-1, -1], 4), &[(0, 1, 1, 2)]);
        let diag = f.relabel(&[0, 0], 1).unwrap();
        assert!(diag.is_laurent());
        assert_eq!(diag.numerator(), &mono(&[-4], 1));
        let g = RatFn::new(mono(&[0, 0], 1), &[(0, 1, -1, 1)]);
        let swapped = g.relabel(&[1, 0], 2).unwrap();
        let z = [rat(2, 1), rat(7, 3)];
        let l = rat_int(1);
        assert_eq!(swapped.eval(&z, &[], &l), (&z[1] - &z[0]).recip());
        assert!(g.relabel(&[0, 0], 1).is_err());
    }
}
