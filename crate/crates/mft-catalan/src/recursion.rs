use std::collections::HashMap;

use mft_algebra::Rational;
use num_traits::Zero;

use crate::{CatalanError, PlanarData};

struct Recursion<'a> {
    data: &'a PlanarData,
    lambda: Rational,
    memo: HashMap<Vec<usize>, Rational>,
}

impl Recursion<'_> {
    fn g(&mut self, p: &[usize]) -> Rational {
        if p.len() == 2 {
            return self.data.g2[p[0]][p[1]].clone();
        }
        if let Some(v) = self.memo.get(p) {
            return v.clone();
        }
        let n = p.len();
        let e = &self.data.e;
        let mut acc = Rational::zero();
        for l in 1..=(n - 2) / 2 {
            let a = self.g(&p[..2 * l]) * self.g(&p[2 * l..]);
            let mut rest = vec![p[0]];
            rest.extend_from_slice(&p[2 * l + 1..]);
            let b = self.g(&p[1..=2 * l]) * self.g(&rest);
            acc += (a - b) / ((&e[p[0]] - &e[p[2 * l]]) * (&e[p[1]] - &e[p[n - 1]]));
        }
        let v = -self.lambda.clone() * acc;
        self.memo.insert(p.to_vec(), v.clone());
        v
    }
}

/// `G_{0..N-1}` from the planar recursion, treating 2-point values as input.
pub fn naive_recursion_eval(n: usize, data: &PlanarData, lambda: &Rational) -> Result<Rational, CatalanError> {
    if n < 2 || n % 2 != 0 {
        return Err(CatalanError::Domain(format!("N = {n} must be even and at least 2")));
    }
    if data.len() != n {
        return Err(CatalanError::Domain(format!("need {n} energies, got {}", data.len())));
    }
    let idx: Vec<usize> = (0..n).collect();
    Ok(Recursion { data, lambda: lambda.clone(), memo: HashMap::new() }.g(&idx))
}
