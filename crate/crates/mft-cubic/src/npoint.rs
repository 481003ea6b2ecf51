use crate::CubicError;

fn check_distinct(f2: &[f64]) -> Result<(), CubicError> {
    for i in 0..f2.len() {
        for j in 0..i {
            let scale = f2[i].abs().max(f2[j].abs()).max(1.0);
            if (f2[i] - f2[j]).abs() <= 1e-14 * scale {
                return Err(CubicError::Degenerate(format!("F^2 coincide at positions {j} and {i}")));
            }
        }
    }
    Ok(())
}

fn weight(f2: &[f64], k: usize) -> f64 {
    f2.iter().enumerate().filter(|&(l, _)| l != k).map(|(_, &v)| 1.0 / (f2[k] - v)).product()
}

/// Single-boundary `N`-point function from pairs `(F_p, W_p)`.
pub fn n_point_from_w(lambda: f64, values: &[(f64, f64)]) -> Result<f64, CubicError> {
    let n = values.len();
    if n == 0 {
        return Err(CubicError::Domain("no points given".into()));
    }
    if n == 1 {
        if lambda == 0.0 {
            return Err(CubicError::Domain("1-point function needs lambda != 0".into()));
        }
        return Ok(values[0].1 / (2.0 * lambda));
    }
    let f2: Vec<f64> = values.iter().map(|(f, _)| f * f).collect();
    check_distinct(&f2)?;
    let sum: f64 = (0..n).map(|k| values[k].1 * weight(&f2, k)).sum();
    Ok(lambda.powi(n as i32 - 2) * 0.5 * sum)
}

/// Multi-boundary function. `f[beta]` lists the `F` values on boundary `beta`;
/// `single(ks)` returns the function with one point per boundary, `ks[beta]`
/// indexing into `f[beta]`.
pub fn n_point_multi<G>(lambda: f64, f: &[Vec<f64>], mut single: G) -> Result<f64, CubicError>
where
    G: FnMut(&[usize]) -> f64,
{
    if f.is_empty() || f.iter().any(|b| b.is_empty()) {
        return Err(CubicError::Domain("every boundary needs at least one point".into()));
    }
    let f2: Vec<Vec<f64>> = f.iter().map(|b| b.iter().map(|x| x * x).collect()).collect();
    for b in &f2 {
        check_distinct(b)?;
    }
    let n: usize = f.iter().map(Vec::len).sum();
    let mut ks = vec![0usize; f.len()];
    let mut total = 0.0;
    loop {
        let w: f64 = ks.iter().enumerate().map(|(b, &k)| weight(&f2[b], k)).product();
        total += single(&ks) * w;
        // odometer over (k_1, .., k_b)
        let mut i = 0;
        loop {
            if i == ks.len() {
                return Ok(lambda.powi((n - f.len()) as i32) * total);
            }
            ks[i] += 1;
            if ks[i] < f[i].len() {
                break;
            }
            ks[i] = 0;
            i += 1;
        }
    }
}
