use mft_algebra::rat_int;

use crate::ops::khat_apply;
use crate::{KontsevichError, RatFn, Solver};

fn body(solver: &mut Solver, g: usize, b: usize) -> Result<RatFn, KontsevichError> {
    Ok(solver.correlation(g, b)?.as_ratfn())
}

/// Places a function of `1 + vars.len()` variables into `n` global slots:
/// local slot 0 goes to `first`, local slot `t` to `vars[t-1]`.
fn place(f: &RatFn, first: usize, vars: &[usize], n: usize) -> Result<RatFn, KontsevichError> {
    let mut map = vec![first];
    map.extend_from_slice(vars);
    f.relabel(&map, n)
}

/// Left-hand side of the complexified loop equation for `G_g(z1, J)`.
/// Slot 0 is `z1`, slots `1..b` are `J`. Vanishes identically for a
/// correct solution.
pub fn loop_residual(solver: &mut Solver, g: usize, b: usize) -> Result<RatFn, KontsevichError> {
    let n = b;
    let j: Vec<usize> = (1..b).collect();
    let g_full = solver.correlation(g, b)?;
    let main = g_full
        .laurent()
        .ok_or_else(|| KontsevichError::Domain("the loop equation needs a Laurent body".into()))?;
    let mut acc = RatFn::from_laurent(khat_apply(main, 0)?);

    if g >= 1 {
        let f = body(solver, g - 1, b + 1)?;
        let mut map = vec![0, 0];
        map.extend(1..b);
        let diag = f.relabel(&map, n)?;
        acc = acc.add(&diag.with_lambda_exp(diag.lambda_exp() + 1))?;
    }

    for h in 0..=g {
        for mask in 0u32..(1 << j.len()) {
            let inside: Vec<usize> = j.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
            let outside: Vec<usize> = j.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 0).map(|(_, &v)| v).collect();
            if (h == 0 && inside.is_empty()) || (h == g && outside.is_empty()) {
                continue;
            }
            let a = place(&body(solver, h, 1 + inside.len())?, 0, &inside, n)?;
            let c = place(&body(solver, g - h, 1 + outside.len())?, 0, &outside, n)?;
            let p = a.mul(&c);
            acc = acc.add(&p.with_lambda_exp(p.lambda_exp() + 1))?;
        }
    }

    for &zeta in &j {
        let rest: Vec<usize> = j.iter().copied().filter(|&v| v != zeta).collect();
        let f = body(solver, g, b - 1)?;
        let at_z = place(&f, 0, &rest, n)?;
        let at_zeta = place(&f, zeta, &rest, n)?;
        let one = RatFn::new(
            mft_algebra::LaurentExpr::monomial(&vec![0; n], mft_algebra::MomentPolynomial::one(0), 0),
            &[(0, zeta, -1, 1), (0, zeta, 1, 1)],
        );
        let q = at_z.sub(&at_zeta)?.mul(&one);
        let t = q.derivative(zeta).shift(zeta, -1).scale(&rat_int(8));
        acc = acc.add(&t.with_lambda_exp(t.lambda_exp() + 3))?;
    }
    Ok(acc)
}
