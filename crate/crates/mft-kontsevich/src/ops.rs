use mft_algebra::{rat, rat_int, FormalSeries, LaurentExpr, MomentPolynomial};

use crate::{FreeEnergy, KontsevichError};

/// Largest moment index occurring in any coefficient.
pub fn max_moment(e: &LaurentExpr) -> Option<usize> {
    e.terms().filter_map(|(_, c)| c.max_index()).max()
}

fn budget_of(e: &LaurentExpr) -> usize {
    e.terms().map(|(_, c)| c.budget()).max().unwrap_or(0)
}

/// `K_z` on slot `var`: `z^-(3+2n) -> sum_{k<=n} r_k z^-(2n+2-2k)`.
pub fn khat_apply(e: &LaurentExpr, var: usize) -> Result<LaurentExpr, KontsevichError> {
    let mut out = LaurentExpr::zero(e.nvars(), e.lambda_exp());
    for (m, c) in e.terms() {
        let p = m[var];
        if p > -3 || p % 2 == 0 {
            return Err(KontsevichError::Domain(format!("K acts on z^(-3-2n) only, got z^{p}")));
        }
        let n = (-p - 3) / 2;
        for k in 0..=n {
            let mut ex = m.to_vec();
            ex[var] = -(2 * n + 2 - 2 * k);
            let coeff = c.mul_rho(k as usize, 1)?;
            out = out.add(&LaurentExpr::monomial(&ex, coeff, e.lambda_exp()))?;
        }
    }
    Ok(out)
}

/// Returns `g` with `K_z(g/z) = f/z^2`, for `f` a sum of `z^(-2k)`, `k >= 0`.
pub fn khat_inverse(f: &LaurentExpr, var: usize, budget: usize) -> Result<LaurentExpr, KontsevichError> {
    let mut kmax = 0;
    for (m, _) in f.terms() {
        let p = m[var];
        if p > 0 || p % 2 != 0 {
            return Err(KontsevichError::Domain(format!("inverse needs even non-positive powers, got z^{p}")));
        }
        kmax = kmax.max((-p / 2) as usize);
    }
    let budget = budget.max(budget_of(f));
    let recip = FormalSeries::moment_series(kmax, budget)?.reciprocal()?;
    let mut out = LaurentExpr::zero(f.nvars(), f.lambda_exp());
    for (m, c) in f.terms() {
        let k = (-m[var] / 2) as usize;
        for j in 0..=k {
            let mut ex = m.to_vec();
            ex[var] = -(2 * (k - j) as i32 + 2);
            let coeff = (c * recip.coeff(j)).mul_rho(0, -1)?;
            out = out.add(&LaurentExpr::monomial(&ex, coeff, f.lambda_exp()))?;
        }
    }
    Ok(out)
}

fn map_coeffs(
    e: &LaurentExpr,
    f: impl FnMut(&MomentPolynomial) -> Result<MomentPolynomial, mft_algebra::AlgebraError>,
) -> Result<LaurentExpr, KontsevichError> {
    Ok(e.try_map_coeffs(f)?)
}

/// `(2 lambda)^3 A^dag` adding a new boundary variable in slot `nvars`.
pub fn create_boundary(f: &LaurentExpr) -> Result<LaurentExpr, KontsevichError> {
    let n = f.nvars();
    let ext = f.extend_vars(n + 1);
    let mut acc = LaurentExpr::zero(n + 1, f.lambda_exp());
    if let Some(kmax) = max_moment(f) {
        for l in 0..=kmax {
            let d = map_coeffs(&ext, |c| Ok(c.derivative(l)))?;
            if d.is_zero() {
                continue;
            }
            let w = rat_int(3 + 2 * l as i64);
            let a = map_coeffs(&d, |c| c.mul_rho(l + 1, 1)?.mul_rho(0, -1).map(|p| p.scale(&-w.clone())))?
                .shift(n, -3);
            let b = d.scale(&w).shift(n, -(5 + 2 * l as i32));
            acc = acc.add(&a)?.add(&b)?;
        }
    }
    for zeta in 0..n {
        let d = ext.derivative(zeta).shift(zeta, -1).shift(n, -3);
        acc = acc.add(&map_coeffs(&d, |c| c.mul_rho(0, -1))?)?;
    }
    Ok(acc.scale(&rat_int(8)).with_lambda_exp(f.lambda_exp() + 3))
}

/// `(2 lambda)^3 A^dag F_g` as a function of one boundary variable.
pub fn create_from_free_energy(fe: &FreeEnergy) -> Result<LaurentExpr, KontsevichError> {
    match fe {
        FreeEnergy::LogRho0 { coefficient } => {
            // d/dr0 (c log r0) = c / r0
            let c = coefficient;
            let budget = 2;
            let t3 = MomentPolynomial::monomial(&[-2, 1], -(c * rat_int(3)), budget)?;
            let t5 = MomentPolynomial::monomial(&[-1], c * rat_int(3), budget)?;
            let e = LaurentExpr::monomial(&[-3], t3, 3).add(&LaurentExpr::monomial(&[-5], t5, 3))?;
            Ok(e.scale(&rat_int(8)))
        }
        FreeEnergy::Stable { .. } => create_boundary(&fe.to_laurent()?),
    }
}

/// Boundary annihilation on slot `var`: `z^-(5+2l) -> -r_l/(3+2l)`, other
/// powers vanish. The slot is removed.
pub fn annihilate(e: &LaurentExpr, var: usize) -> Result<LaurentExpr, KontsevichError> {
    let n = e.nvars();
    let mut out = LaurentExpr::zero(n - 1, e.lambda_exp());
    for (m, c) in e.terms() {
        let p = m[var];
        if p <= -5 && p % 2 != 0 {
            let l = ((-p - 5) / 2) as usize;
            let coeff = c.mul_rho(l, 1)?.scale(&rat(-1, 3 + 2 * l as i64));
            let ex: Vec<i32> = m.iter().enumerate().filter(|&(i, _)| i != var).map(|(_, &x)| x).collect();
            out = out.add(&LaurentExpr::monomial(&ex, coeff, e.lambda_exp()))?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rho(l: usize) -> MomentPolynomial {
        MomentPolynomial::rho(l, 6).unwrap()
    }

    fn one() -> MomentPolynomial {
        MomentPolynomial::one(6)
    }

    #[test]
    fn khat_on_basis() {
        let e = LaurentExpr::monomial(&[-3], one(), 0);
        assert_eq!(khat_apply(&e, 0).unwrap(), LaurentExpr::monomial(&[-2], rho(0), 0));
        let e = LaurentExpr::monomial(&[-5], one(), 0);
        let want = LaurentExpr::monomial(&[-4], rho(0), 0).add(&LaurentExpr::monomial(&[-2], rho(1), 0)).unwrap();
        assert_eq!(khat_apply(&e, 0).unwrap(), want);
        assert!(khat_apply(&LaurentExpr::zero(1, 0), 0).unwrap().is_zero());
        assert!(khat_apply(&LaurentExpr::monomial(&[-1], one(), 0), 0).is_err());
        assert!(khat_apply(&LaurentExpr::monomial(&[-4], one(), 0), 0).is_err());
    }

    #[test]
    fn khat_inverse_small_cases() {
        let g = khat_inverse(&LaurentExpr::monomial(&[0], one(), 0), 0, 4).unwrap();
        let inv_r0 = MomentPolynomial::monomial(&[-1], rat_int(1), 6).unwrap();
        assert_eq!(g, LaurentExpr::monomial(&[-2], inv_r0.clone(), 0));
        let back = khat_apply(&g.shift(0, -1), 0).unwrap().shift(0, 2);
        assert_eq!(back, LaurentExpr::monomial(&[0], one(), 0));

        let g = khat_inverse(&LaurentExpr::monomial(&[-2], one(), 0), 0, 4).unwrap();
        let s1 = MomentPolynomial::monomial(&[-2, 1], rat_int(-1), 6).unwrap();
        let want = LaurentExpr::monomial(&[-4], inv_r0, 0).add(&LaurentExpr::monomial(&[-2], s1, 0)).unwrap();
        assert_eq!(g, want);
        assert!(khat_inverse(&LaurentExpr::zero(1, 0), 0, 2).unwrap().is_zero());
        assert!(khat_inverse(&LaurentExpr::monomial(&[-3], one(), 0), 0, 2).is_err());
        assert!(khat_inverse(&LaurentExpr::monomial(&[2], one(), 0), 0, 2).is_err());
    }

    #[test]
    fn annihilation_on_powers() {
        let e = LaurentExpr::monomial(&[-5], one(), 0);
        let r = annihilate(&e, 0).unwrap();
        assert_eq!(r, LaurentExpr::monomial(&[], rho(0).scale(&rat(-1, 3)), 0));
        assert!(annihilate(&LaurentExpr::monomial(&[-3], one(), 0), 0).unwrap().is_zero());
        assert!(annihilate(&LaurentExpr::monomial(&[-1], one(), 0), 0).unwrap().is_zero());
    }

    #[test]
    fn creation_kills_constants() {
        let c = LaurentExpr::monomial(&[], MomentPolynomial::constant(rat_int(5), 2), 0);
        assert!(create_boundary(&c).unwrap().is_zero());
    }
}
