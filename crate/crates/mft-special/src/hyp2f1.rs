use crate::{gamma, SpecialError};

const MAX_TERMS: usize = 20_000;

/// Plain hypergeometric series, convergent for |x| < 1.
fn series(a: f64, b: f64, c: f64, x: f64) -> Result<f64, SpecialError> {
    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * x;
        sum += term;
        if term == 0.0 || (term.abs() < 1e-17 * sum.abs() && n > 2) {
            return Ok(sum);
        }
    }
    Err(SpecialError::NoConvergence { terms: MAX_TERMS, partial: sum })
}

/// `2F1(a, b; a+b; 1-y)` for small `y`, where the connection formula has
/// a logarithmic term.
fn log_connection(a: f64, b: f64, y: f64) -> Result<f64, SpecialError> {
    use statrs::function::gamma::digamma;
    let (mut pa, mut pb, mut p1) = (digamma(a), digamma(b), digamma(1.0));
    let ly = y.ln();
    let mut coef = 1.0;
    let mut sum = 0.0;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let term = coef * (2.0 * p1 - pa - pb - ly);
        sum += term;
        if n > 2 && term.abs() < 1e-17 * sum.abs() {
            return Ok(gamma(a + b) / (gamma(a) * gamma(b)) * sum);
        }
        coef *= (a + nf) * (b + nf) / ((nf + 1.0) * (nf + 1.0)) * y;
        pa += 1.0 / (a + nf);
        pb += 1.0 / (b + nf);
        p1 += 1.0 / (nf + 1.0);
    }
    Err(SpecialError::NoConvergence { terms: MAX_TERMS, partial: sum })
}

fn is_nonpositive_int(c: f64) -> bool {
    c <= 0.0 && c == c.round()
}

/// Gauss hypergeometric function `2F1(a, b; c; x)` on `x <= 0`.
///
/// Small |x| uses the series directly; otherwise the Pfaff transformation
/// maps to `w = x/(x-1)` in `[0, 1)`, and for `w` near one the `w -> 1 - w`
/// connection formula is applied.
pub fn hyp2f1(a: f64, b: f64, c: f64, x: f64) -> Result<f64, SpecialError> {
    if x.is_nan() || x > 0.0 {
        return Err(SpecialError::Domain(x, "hyp2f1 needs x <= 0"));
    }
    if is_nonpositive_int(c) {
        return Err(SpecialError::Domain(c, "c must not be a non-positive integer"));
    }
    if a == 0.0 || b == 0.0 || x == 0.0 {
        return Ok(1.0);
    }
    if x >= -0.5 {
        return series(a, b, c, x);
    }
    // F(a,b;c;x) = (1-x)^(-a) F(a, c-b; c; w)
    let w = x / (x - 1.0);
    let pref = (1.0 - x).powf(-a);
    let bb = c - b;
    let s = c - a - bb;
    if w <= 0.9 {
        return Ok(pref * series(a, bb, c, w)?);
    }
    if s.abs() < 1e-7 {
        return Ok(pref * log_connection(a, bb, 1.0 / (1.0 - x))?);
    }
    if (s - s.round()).abs() < 1e-8 {
        return Ok(pref * series(a, bb, c, w)?);
    }
    // 1 - w without cancellation
    let y = 1.0 / (1.0 - x);
    let t1 = gamma(c) * gamma(s) / (gamma(c - a) * gamma(c - bb)) * series(a, bb, 1.0 - s, y)?;
    let t2 = y.powf(s) * gamma(c) * gamma(-s) / (gamma(a) * gamma(bb))
        * series(c - a, c - bb, 1.0 + s, y)?;
    Ok(pref * (t1 + t2))
}
