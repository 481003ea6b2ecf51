use mft_algebra::rational::{factorial, format_rational, pow_i};
use mft_algebra::{bell_polynomial, rat, rat_int, FormalSeries, LaurentExpr, MomentPolynomial, Rational};
use serde_json::{json, Value};

use crate::ops::annihilate;
use crate::{KontsevichError, Solver};

/// Genus-`g` free energy.
///
/// `Stable` stores the coupling-free part `P_g`; the full value is
/// `(2 lambda)^(4g-4) V^(2-2g) P_g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FreeEnergy {
    /// `coefficient * log r0` (genus one).
    LogRho0 { coefficient: Rational },
    Stable { genus: usize, poly: MomentPolynomial },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Annihilate,
    Laplacian,
}

impl FreeEnergy {
    pub fn genus_one() -> Self {
        FreeEnergy::LogRho0 { coefficient: rat(-1, 24) }
    }

    pub fn genus(&self) -> usize {
        match self {
            FreeEnergy::LogRho0 { .. } => 1,
            FreeEnergy::Stable { genus, .. } => *genus,
        }
    }

    pub fn poly(&self) -> Option<&MomentPolynomial> {
        match self {
            FreeEnergy::LogRho0 { .. } => None,
            FreeEnergy::Stable { poly, .. } => Some(poly),
        }
    }

    /// `(2 lambda)^(4g-4) P_g` as a Laurent expression in no variables.
    pub fn to_laurent(&self) -> Result<LaurentExpr, KontsevichError> {
        match self {
            FreeEnergy::LogRho0 { .. } => {
                Err(KontsevichError::Domain("the genus-one free energy is logarithmic".into()))
            }
            FreeEnergy::Stable { genus, poly } => {
                let k = 4 * *genus as i32 - 4;
                Ok(LaurentExpr::monomial(&[], poly.scale(&pow_i(&rat_int(2), k)), k))
            }
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            FreeEnergy::LogRho0 { coefficient } => json!({
                "genus": 1,
                "form": "log",
                "coefficient_of_log_r0": format_rational(coefficient),
            }),
            FreeEnergy::Stable { genus, poly } => json!({
                "genus": genus,
                "form": "polynomial",
                "prefactor": format!("(2*lambda)^{}/V^{}", 4 * genus - 4, 2 * genus - 2),
                "display": poly.to_string(),
                "polynomial": poly.to_json(),
            }),
        }
    }
}

/// The closed genus-two value `-21/160 r1^3/r0^5 + 29/128 r1 r2/r0^4 - 35/384 r3/r0^3`.
pub fn genus_two(budget: usize) -> Result<MomentPolynomial, KontsevichError> {
    let a = MomentPolynomial::monomial(&[-5, 3], rat(-21, 160), budget)?;
    let b = MomentPolynomial::monomial(&[-4, 1, 1], rat(29, 128), budget)?;
    let c = MomentPolynomial::monomial(&[-3, 0, 0, 1], rat(-35, 384), budget)?;
    Ok(&(&a + &b) + &c)
}

/// Coefficients of `sum_l r_l z^2l/(3+2l) / sum_j r_j z^2j`, i.e.
/// `R_m = sum_{k<=m} r_k/((3+2k) r0) S_{m-k}/(m-k)!` for all `m <= mmax`.
pub fn r_coefficients(mmax: usize, budget: usize) -> Result<Vec<MomentPolynomial>, KontsevichError> {
    let s = FormalSeries::moment_series(mmax, budget)?.reciprocal()?;
    let mut out = Vec::with_capacity(mmax + 1);
    for m in 0..=mmax {
        let mut r = MomentPolynomial::zero(budget);
        for k in 0..=m {
            let t = MomentPolynomial::rho(k, budget)?.mul_rho(0, -1)?.scale(&rat(1, 3 + 2 * k as i64));
            r = &r + &(&t * s.coeff(m - k));
        }
        out.push(r);
    }
    Ok(out)
}

pub fn r_coefficient(m: usize, budget: usize) -> Result<MomentPolynomial, KontsevichError> {
    Ok(r_coefficients(m, budget)?.pop().unwrap())
}

fn mono(exps: &[i32], n: i64, d: i64, budget: usize) -> Result<MomentPolynomial, KontsevichError> {
    Ok(MomentPolynomial::monomial(exps, rat(n, d), budget)?)
}

fn rho(l: usize, budget: usize) -> Result<MomentPolynomial, KontsevichError> {
    Ok(MomentPolynomial::rho(l, budget)?)
}

/// The second-order operator `Delta_r` generating the stable partition function.
pub fn delta_rho(f: &MomentPolynomial, budget: usize) -> Result<MomentPolynomial, KontsevichError> {
    if f.is_zero() {
        return Ok(MomentPolynomial::zero(budget));
    }
    let kk = f.max_index().unwrap_or(0);
    let r = r_coefficients(2 * kk + 3, budget)?;
    let b = budget;
    let r1 = rho(1, b)?;
    let d0 = f.derivative(0);
    let d00 = d0.derivative(0);

    let c1 = &(&mono(&[-3, 3], -6, 5, b)? + &mono(&[-2, 1, 1], 111, 70, b)?) + &mono(&[-1, 0, 0, 1], -1, 2, b)?;
    let c2 = &(&mono(&[-4, 3], 2, 1, b)? + &mono(&[-3, 1, 1], -1097, 280, b)?) + &mono(&[-2, 0, 0, 1], 41, 24, b)?;
    let mut acc = -&(&(&c1 * &d00) + &(&c2 * &d0));

    let a3 = &mono(&[-3, 2], -2, 5, b)? + &mono(&[-2, 0, 1], 2, 7, b)?;
    let a5 = &mono(&[-4, 2], 19, 60, b)? + &mono(&[-3, 0, 1], -25, 84, b)?;
    for k in 1..=kk {
        let dk = f.derivative(k);
        if dk.is_zero() {
            continue;
        }
        let wk = rat_int(3 + 2 * k as i64);
        let vk = rat_int(5 + 2 * k as i64);
        let rk1 = rho(k + 1, b)?;
        let inv0 = |p: &MomentPolynomial, e: i32| p.mul_rho(0, e);

        let c3 = &(&(&a3 * &rk1) - &inv0(&(&r[k + 2] * &r1), -1)?.scale(&rat(3, 2))) + &r[k + 3].scale(&rat(3, 2));
        acc = &acc - &(&c3 * &dk.derivative(0)).scale(&wk);

        let c5 = &(&(&(&(&a5 * &rk1) + &inv0(&(&r1 * &r[k + 2]), -2)?.scale(&rat(1, 16)))
            - &inv0(&r[k + 3], -1)?.scale(&rat(1, 16)))
            - &inv0(&(&r1 * &rho(k + 2, b)?), -3)?.scale(&(&vk * rat(1, 30))))
            - &inv0(&r[k + 3], -1)?.scale(&(&vk * rat(1, 2)));
        acc = &acc - &(&c5 * &dk).scale(&wk);

        for l in 1..=kk {
            let dkl = dk.derivative(l);
            if dkl.is_zero() {
                continue;
            }
            let wl = rat_int(3 + 2 * l as i64);
            let rl1 = rho(l + 1, b)?;
            let c4 = &(&(&inv0(&(&(&r1 * &rl1) * &rk1), -3)?.scale(&rat(1, 30))
                + &inv0(&(&rk1 * &r[l + 2]), -1)?.scale(&rat(1, 4)))
                + &inv0(&(&rl1 * &r[k + 2]), -1)?.scale(&rat(1, 4)))
                - &r[k + l + 3].scale(&rat(1, 4));
            acc = &acc + &(&c4 * &dkl).scale(&(&wk * &wl));
        }
    }
    Ok(acc)
}

/// `F_g` from the boundary annihilation of the one-point function.
pub fn free_energy_annihilate(g: usize, solver: &mut Solver) -> Result<FreeEnergy, KontsevichError> {
    if g == 1 {
        return Ok(FreeEnergy::genus_one());
    }
    if g == 0 {
        return Err(KontsevichError::Domain("free energies start at genus one".into()));
    }
    let one = solver.one_point(g)?;
    let q = annihilate(&one, 0)?;
    let want = 4 * g as i32 - 1;
    if !q.is_zero() && q.lambda_exp() != want {
        return Err(KontsevichError::Consistency(format!(
            "coupling power {} after annihilation, expected {want}",
            q.lambda_exp()
        )));
    }
    let poly = q.coefficient(&[]).cloned().unwrap_or_else(|| MomentPolynomial::zero(solver.budget()));
    let norm = rat_int((2 * g as i64 - 2) * 8) * pow_i(&rat_int(2), 4 * g as i32 - 4);
    Ok(FreeEnergy::Stable { genus: g, poly: poly.scale(&norm.recip()) })
}

/// `F_1 .. F_gmax` from `Z_g = (-Delta + F_2)^(g-1) 1 / (g-1)!`.
pub fn free_energies_laplacian(gmax: usize) -> Result<Vec<FreeEnergy>, KontsevichError> {
    let budget = 6 * gmax + 3;
    let f2 = genus_two(budget)?;
    let mut out = vec![FreeEnergy::genus_one()];
    let mut w = MomentPolynomial::one(budget);
    let mut stable: Vec<MomentPolynomial> = Vec::new();
    for g in 2..=gmax {
        w = &(&f2 * &w) - &delta_rho(&w, budget)?;
        let zg = w.scale(&factorial(g - 1).recip());
        // x_h = h! F_{h+1}, h = 1 .. g-2
        let x: Vec<MomentPolynomial> =
            stable.iter().enumerate().map(|(i, p)| p.scale(&factorial(i + 1))).collect();
        let mut corr = MomentPolynomial::zero(budget);
        for k in 2..g {
            corr = &corr + &bell_polynomial(g - 1, k, &x)?;
        }
        let fg = &zg - &corr.scale(&factorial(g - 1).recip());
        stable.push(fg.clone());
        out.push(FreeEnergy::Stable { genus: g, poly: fg });
    }
    Ok(out)
}

pub fn free_energy(g: usize, route: Route) -> Result<FreeEnergy, KontsevichError> {
    match route {
        Route::Annihilate => free_energy_annihilate(g, &mut Solver::for_target(g, 1)),
        Route::Laplacian => {
            if g == 0 {
                return Err(KontsevichError::Domain("free energies start at genus one".into()));
            }
            Ok(free_energies_laplacian(g)?.pop().unwrap())
        }
    }
}

/// Both routes, failing when they disagree.
pub fn free_energy_checked(g: usize) -> Result<FreeEnergy, KontsevichError> {
    let a = free_energy(g, Route::Annihilate)?;
    let l = free_energy(g, Route::Laplacian)?;
    if a != l {
        let show = |f: &FreeEnergy| f.poly().map(|p| p.to_string()).unwrap_or_default();
        return Err(KontsevichError::Consistency(format!(
            "routes disagree at genus {g}: annihilate {} vs laplacian {}",
            show(&a),
            show(&l)
        )));
    }
    Ok(a)
}
