use num_traits::Zero;

use crate::{AlgebraError, MomentPolynomial};

/// Truncated power series `sum_{i <= order} c_i t^i` with moment polynomial
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSeries {
    coeffs: Vec<MomentPolynomial>,
}

impl FormalSeries {
    /// `coeffs.len()` fixes the order; must be non-empty.
    pub fn new(coeffs: Vec<MomentPolynomial>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        Self { coeffs }
    }

    /// `sum_{l <= order} (r_l / r0) t^l`.
    pub fn moment_series(order: usize, budget: usize) -> Result<Self, AlgebraError> {
        let coeffs = (0..=order)
            .map(|l| MomentPolynomial::rho(l, budget)?.mul_rho(0, -1))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &MomentPolynomial {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[MomentPolynomial] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self { coeffs: self.coeffs[..=order.min(self.order())].to_vec() }
    }

    /// Product truncated at the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let budget = self.coeffs[0].budget().max(other.coeffs[0].budget());
        let mut out = vec![MomentPolynomial::zero(budget); n + 1];
        for i in 0..=n {
            for j in 0..=(n - i) {
                out[i + j] = &out[i + j] + &(&self.coeffs[i] * &other.coeffs[j]);
            }
        }
        Self { coeffs: out }
    }

    /// Multiplicative inverse by convolution. The constant coefficient
    /// must be a unit, i.e. `c * r0^e`.
    pub fn reciprocal(&self) -> Result<Self, AlgebraError> {
        let c0 = &self.coeffs[0];
        let inv0 = {
            let mut it = c0.terms();
            match (it.next(), it.next()) {
                (Some((m, c)), None) if m.len() == 1 && !c.is_zero() => {
                    MomentPolynomial::monomial(&[-m[0]], c.recip(), c0.budget())?
                }
                _ => return Err(AlgebraError::NonInvertible),
            }
        };
        let mut out = vec![inv0.clone()];
        for m in 1..=self.order() {
            let mut acc = MomentPolynomial::zero(c0.budget());
            for j in 1..=m {
                acc = &acc + &(&self.coeffs[j] * &out[m - j]);
            }
            out.push(-&(&inv0 * &acc));
        }
        Ok(Self { coeffs: out })
    }
}
