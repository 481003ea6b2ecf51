use mft_algebra::{rat, rat_int, MomentPolynomial};

use crate::KontsevichError;

/// `exp(sum_{g>=2} u^(g-1) P_g)` truncated at `u^order`, optionally
/// multiplied by the genus-one factor `r0^(-1/24)`.
///
/// The genus-one factor is never expanded. With `np` set, every
/// derivative `d/dr0` is conjugated to `d/dr0 - 1/(24 r0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedZ {
    coeffs: Vec<MomentPolynomial>,
    np: bool,
}

impl TruncatedZ {
    /// `stable[i]` is `P_(i+2)`.
    pub fn from_free_energies(stable: &[MomentPolynomial], np: bool) -> Self {
        let budget = stable.iter().map(|p| p.budget()).max().unwrap_or(0);
        let mut coeffs = vec![MomentPolynomial::one(budget)];
        for m in 1..=stable.len() {
            let mut acc = MomentPolynomial::zero(budget);
            for k in 1..=m {
                acc = &acc + &(&stable[k - 1] * &coeffs[m - k]).scale(&rat_int(k as i64));
            }
            coeffs.push(acc.scale(&rat(1, m as i64)));
        }
        Self { coeffs, np }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, m: usize) -> &MomentPolynomial {
        &self.coeffs[m]
    }

    pub fn is_np(&self) -> bool {
        self.np
    }

    /// Same series in the other convention.
    pub fn with_np(&self, np: bool) -> Self {
        Self { coeffs: self.coeffs.clone(), np }
    }

    /// Residual of `L_n Z` at every `u`-order fixed by the truncation.
    pub fn virasoro(&self, n: usize) -> Result<VirasoroReport, KontsevichError> {
        let mut residuals = Vec::new();
        let mut prev_a: Option<MomentPolynomial> = None;
        for m in 0..=self.order() {
            let (free, a_part) = virasoro_parts(n, &self.coeffs[m], self.np)?;
            let r = match prev_a {
                Some(p) => &free + &p.scale(&rat(1, 4)),
                None => free,
            };
            residuals.push(r);
            prev_a = Some(a_part);
        }
        Ok(VirasoroReport { n, residuals, insufficient: vec![self.order() + 1] })
    }
}

/// Per-order residuals of one constraint.
#[derive(Clone, Debug)]
pub struct VirasoroReport {
    pub n: usize,
    /// `residuals[m]` is the coefficient of `u^m`.
    pub residuals: Vec<MomentPolynomial>,
    /// Orders that would need higher free energies.
    pub insufficient: Vec<usize>,
}

impl VirasoroReport {
    pub fn all_vanish(&self) -> bool {
        self.residuals.iter().all(|r| r.is_zero())
    }
}

fn d(l: usize, f: &MomentPolynomial, np: bool) -> MomentPolynomial {
    let mut out = f.derivative(l);
    if np && l == 0 {
        let t = f.mul_rho(0, -1).expect("r0 is always in budget").scale(&rat(1, 24));
        out = &out - &t;
    }
    out
}

fn top(f: &MomentPolynomial) -> usize {
    f.max_index().unwrap_or(0)
}

fn d_hat(f: &MomentPolynomial, np: bool) -> Result<MomentPolynomial, KontsevichError> {
    let mut acc = MomentPolynomial::zero(f.budget());
    for l in 0..=top(f) {
        let dl = d(l, f, np);
        if dl.is_zero() {
            continue;
        }
        let t = dl.mul_rho(l + 1, 1)?.mul_rho(0, -1)?.scale(&rat_int(3 + 2 * l as i64));
        acc = &acc + &t;
    }
    Ok(acc)
}

/// `L_n f` split as `(A-free part, coefficient of A)`.
pub fn virasoro_parts(
    n: usize,
    f: &MomentPolynomial,
    np: bool,
) -> Result<(MomentPolynomial, MomentPolynomial), KontsevichError> {
    let budget = f.budget();
    let k = top(f);
    let mut free = MomentPolynomial::zero(budget);
    let mut a_part = MomentPolynomial::zero(budget);
    match n {
        0 => {
            free = f.scale(&rat(1, 16));
            for l in 0..=k {
                let t = d(l, f, np).mul_rho(l, 1)?.scale(&rat(3 + 2 * l as i64, 2));
                free = &free + &t;
            }
        }
        1 => {
            for l in 0..k {
                let t = d(l + 1, f, np).mul_rho(l, 1)?.scale(&rat(5 + 2 * l as i64, 2));
                free = &free + &t;
            }
            a_part = d_hat(&d_hat(f, np)?, np)?;
        }
        _ => {
            for l in 0..=k.saturating_sub(n) {
                if n + l > k {
                    break;
                }
                let t = d(n + l, f, np).mul_rho(l, 1)?.scale(&rat(3 + 2 * (n + l) as i64, 2));
                free = &free + &t;
            }
            if n >= 3 {
                for l in 0..=(n - 3) {
                    let c = rat_int((3 + 2 * l as i64) * (2 * n as i64 - 2 * l as i64 - 3));
                    a_part = &a_part + &d(l, &d(n - 3 - l, f, np), np).scale(&c);
                }
            }
            let t = d(n - 2, &d_hat(f, np)?, np).scale(&rat_int(-2 * (2 * n as i64 - 1)));
            a_part = &a_part + &t;
        }
    }
    Ok((free, a_part))
}
