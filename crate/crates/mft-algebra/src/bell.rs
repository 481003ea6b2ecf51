use num_traits::{One, Zero};

use crate::rational::{binomial, Rational};
use crate::{AlgebraError, MomentPolynomial};

/// Minimal commutative ring interface used by the Bell recursion.
pub trait Ring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
    fn is_zero(&self) -> bool;
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Ring for MomentPolynomial {
    fn zero() -> Self {
        MomentPolynomial::zero(0)
    }
    fn one() -> Self {
        MomentPolynomial::one(0)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, c: &Rational) -> Self {
        MomentPolynomial::scale(self, c)
    }
    fn is_zero(&self) -> bool {
        MomentPolynomial::is_zero(self)
    }
}

/// Partial Bell polynomial `B_{n,k}(x_1, ..., x_{n-k+1})`; `x[j-1]` holds `x_j`.
///
/// Missing entries of `x` are treated as zero. Uses
/// `B_{n,k} = sum_j C(n-1, j-1) x_j B_{n-j,k-1}`.
pub fn bell_polynomial<T: Ring>(n: usize, k: usize, x: &[T]) -> Result<T, AlgebraError> {
    if k > n {
        return Err(AlgebraError::BellRange { n, k });
    }
    // table[m][j] = B_{m,j} for m <= n, j <= k
    let mut table: Vec<Vec<T>> = vec![vec![T::zero(); k + 1]; n + 1];
    table[0][0] = T::one();
    for j in 1..=k {
        for m in j..=n {
            let mut acc = T::zero();
            for i in 1..=(m - j + 1) {
                if i > x.len() {
                    break;
                }
                let prev = &table[m - i][j - 1];
                if prev.is_zero() || x[i - 1].is_zero() {
                    continue;
                }
                acc = acc.add(&x[i - 1].mul(prev).scale(&binomial(m - 1, i - 1)));
            }
            table[m][j] = acc;
        }
    }
    Ok(table[n][k].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn sym(n: usize) -> Vec<MomentPolynomial> {
        (1..=n).map(|l| MomentPolynomial::rho(l, n).unwrap()).collect()
    }

    #[test]
    fn base_cases() {
        let x = sym(4);
        assert_eq!(bell_polynomial(0, 0, &x).unwrap(), MomentPolynomial::one(0));
        assert!(bell_polynomial(3, 0, &x).unwrap().is_zero());
        assert!(bell_polynomial(0, 2, &x).is_err());
        for n in 1..=4 {
            assert_eq!(bell_polynomial(n, 1, &x).unwrap(), x[n - 1]);
        }
    }

    #[test]
    fn b32_is_3x1x2() {
        let x = sym(3);
        let b = bell_polynomial(3, 2, &x).unwrap();
        assert_eq!(b, (&x[0] * &x[1]).scale(&rat_int(3)));
    }

    #[test]
    fn bell_sum_counts_set_partitions() {
        // B_n(1,1,...) = Bell numbers 1,1,2,5,15,52
        let ones = vec![rat_int(1); 6];
        let bell: Vec<i64> = vec![1, 1, 2, 5, 15, 52];
        for n in 0..6 {
            let mut s = rat_int(0);
            for k in 0..=n {
                s += bell_polynomial(n, k, &ones).unwrap();
            }
            assert_eq!(s, rat_int(bell[n]));
        }
    }
}
