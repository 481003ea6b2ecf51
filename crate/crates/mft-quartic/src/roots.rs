use nalgebra::DMatrix;
use num_complex::Complex64;

/// Coefficients in increasing degree.
pub type Poly = Vec<f64>;

pub fn poly_mul(a: &[f64], b: &[f64]) -> Poly {
    let mut c = vec![0.0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    c
}

pub fn poly_add(a: &[f64], b: &[f64]) -> Poly {
    let mut c = vec![0.0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        c[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        c[i] += x;
    }
    c
}

/// Quotient of `p` by `(z - u)`, remainder dropped.
pub fn deflate(p: &[f64], u: f64) -> Poly {
    let n = p.len() - 1;
    let mut q = vec![0.0; n];
    let mut acc = p[n];
    for k in (0..n).rev() {
        q[k] = acc;
        acc = p[k] + acc * u;
    }
    q
}

fn eval_with_derivative(p: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut v = Complex64::new(0.0, 0.0);
    let mut d = Complex64::new(0.0, 0.0);
    for &c in p.iter().rev() {
        d = d * z + v;
        v = v * z + c;
    }
    (v, d)
}

fn balance(a: &mut DMatrix<f64>) {
    const RADIX: f64 = 2.0;
    let n = a.nrows();
    loop {
        let mut done = true;
        for i in 0..n {
            let mut c = 0.0;
            let mut r = 0.0;
            for j in 0..n {
                if j != i {
                    c += a[(j, i)].abs();
                    r += a[(i, j)].abs();
                }
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let mut g = r / RADIX;
            while c < g {
                f *= RADIX;
                c *= RADIX * RADIX;
            }
            g = r * RADIX;
            while c > g {
                f /= RADIX;
                c /= RADIX * RADIX;
            }
            if (c + r) / f < 0.95 * s {
                done = false;
                for j in 0..n {
                    a[(i, j)] /= f;
                    a[(j, i)] *= f;
                }
            }
        }
        if done {
            break;
        }
    }
}

/// All roots of `p` from the balanced companion matrix, polished by Newton
/// steps on `p`.
pub fn roots(p: &[f64]) -> Vec<Complex64> {
    let n = p.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let lead = p[n];
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..n {
        m[(i, n - 1)] = -p[i] / lead;
    }
    balance(&mut m);
    m.complex_eigenvalues()
        .iter()
        .map(|&z0| {
            let mut z = z0;
            for _ in 0..8 {
                let (v, d) = eval_with_derivative(p, z);
                if d.norm() == 0.0 {
                    break;
                }
                let step = v / d;
                z -= step;
                if step.norm() <= 1e-16 * z.norm().max(1.0) {
                    break;
                }
            }
            z
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_with_known_roots() {
        // (z-1)(z+2)(z-3)
        let p = poly_mul(&poly_mul(&[-1.0, 1.0], &[2.0, 1.0]), &[-3.0, 1.0]);
        let mut r: Vec<f64> = roots(&p).iter().map(|z| z.re).collect();
        r.sort_by(f64::total_cmp);
        for (a, b) in r.iter().zip([-2.0, 1.0, 3.0]) {
            assert!((a - b).abs() < 1e-13);
        }
        let q = deflate(&p, 3.0);
        assert_eq!(q.len(), 3);
        for (a, b) in q.iter().zip(poly_mul(&[-1.0, 1.0], &[2.0, 1.0])) {
            assert!((a - b).abs() < 1e-13);
        }
    }

    #[test]
    fn complex_pair() {
        let r = roots(&[1.0, 0.0, 1.0]);
        assert_eq!(r.len(), 2);
        for z in r {
            assert!((z.norm() - 1.0).abs() < 1e-14 && z.re.abs() < 1e-14);
        }
    }

    #[test]
    fn badly_scaled() {
        // (z - 1e-3)(z - 1e3)
        let p = poly_mul(&[-1e-3, 1.0], &[-1e3, 1.0]);
        let mut r: Vec<f64> = roots(&p).iter().map(|z| z.re).collect();
        r.sort_by(f64::total_cmp);
        assert!((r[0] - 1e-3).abs() < 1e-15 && (r[1] - 1e3).abs() < 1e-10);
    }
}
