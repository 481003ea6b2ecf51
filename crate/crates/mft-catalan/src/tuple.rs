use std::fmt;

use crate::CatalanError;

/// `(e_0, .., e_k)` with `sum e_j = k` and every proper prefix sum `> l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CatalanTuple(Vec<u32>);

impl CatalanTuple {
    pub fn new(entries: Vec<u32>) -> Result<Self, CatalanError> {
        if entries.is_empty() {
            return Err(CatalanError::Invariant("empty tuple".into()));
        }
        let k = entries.len() - 1;
        let mut s = 0u64;
        for (l, &e) in entries.iter().enumerate() {
            s += e as u64;
            if l < k && s <= l as u64 {
                return Err(CatalanError::Invariant(format!("{entries:?}: prefix sum at {l} is {s}")));
            }
        }
        if s != k as u64 {
            return Err(CatalanError::Invariant(format!("{entries:?}: entries sum to {s}, not {k}")));
        }
        Ok(CatalanTuple(entries))
    }

    pub fn zero() -> Self {
        CatalanTuple(vec![0])
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// The length `k`, one less than the number of entries.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `p_l = sum_{j<=l} e_j - l` for `l = 0..=k`.
    pub fn partial_sums(&self) -> Vec<i64> {
        let mut s = 0i64;
        self.0
            .iter()
            .enumerate()
            .map(|(l, &e)| {
                s += e as i64;
                s - l as i64
            })
            .collect()
    }

    /// `sigma_a = min { l | p_l = a }`.
    pub fn sigma(&self, a: i64) -> Option<usize> {
        self.partial_sums().iter().position(|&p| p == a)
    }

    /// All tuples of length `k` in descending lexicographic order.
    pub fn enumerate(k: usize) -> Vec<CatalanTuple> {
        fn rec(k: usize, pos: usize, sum: usize, cur: &mut Vec<u32>, out: &mut Vec<CatalanTuple>) {
            if pos == k {
                cur.push((k - sum) as u32);
                out.push(CatalanTuple(cur.clone()));
                cur.pop();
                return;
            }
            // prefix sum through pos must exceed pos
            let lo = (pos + 1).saturating_sub(sum);
            for e in (lo..=k - sum).rev() {
                cur.push(e as u32);
                rec(k, pos + 1, sum + e, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(k, 0, 0, &mut Vec::with_capacity(k + 1), &mut out);
        out
    }

    pub fn circ(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v[0] += 1;
        v.extend_from_slice(&other.0);
        CatalanTuple(v)
    }

    pub fn bullet(&self, other: &Self) -> Self {
        let mut v = vec![self.0[0] + 1];
        v.extend_from_slice(&other.0);
        v.extend_from_slice(&self.0[1..]);
        CatalanTuple(v)
    }

    /// Unique `(a, b)` with `a circ b = self`.
    pub fn circ_factors(&self) -> Result<(Self, Self), CatalanError> {
        if self.is_empty() {
            return Err(CatalanError::Domain("(0) has no circ-factors".into()));
        }
        let s = self.sigma(1).ok_or_else(|| CatalanError::Invariant(format!("{self}: no sigma_1")))?;
        let mut a = self.0[..=s].to_vec();
        a[0] -= 1;
        let b = self.0[s + 1..].to_vec();
        Ok((CatalanTuple::new(a)?, CatalanTuple::new(b)?))
    }

    /// Unique `(a, b)` with `a bullet b = self`.
    pub fn bullet_factors(&self) -> Result<(Self, Self), CatalanError> {
        if self.is_empty() {
            return Err(CatalanError::Domain("(0) has no bullet-factors".into()));
        }
        let e0 = self.0[0] as i64;
        let s = self.sigma(e0 - 1).ok_or_else(|| CatalanError::Invariant(format!("{self}: no sigma_{}", e0 - 1)))?;
        let mut a = vec![self.0[0] - 1];
        a.extend_from_slice(&self.0[s + 1..]);
        let b = self.0[1..=s].to_vec();
        Ok((CatalanTuple::new(a)?, CatalanTuple::new(b)?))
    }
}

impl fmt::Display for CatalanTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: &[u32]) -> CatalanTuple {
        CatalanTuple::new(v.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(CatalanTuple::new(vec![1, 1, 0]).is_ok());
        assert!(CatalanTuple::new(vec![0, 1]).is_err());
        assert!(CatalanTuple::new(vec![1, 0, 1]).is_err());
        assert!(CatalanTuple::new(vec![2, 0]).is_err());
    }

    #[test]
    fn small_sets() {
        assert_eq!(CatalanTuple::enumerate(0), vec![t(&[0])]);
        assert_eq!(CatalanTuple::enumerate(2), vec![t(&[2, 0, 0]), t(&[1, 1, 0])]);
        let c3 = CatalanTuple::enumerate(3);
        assert_eq!(c3.len(), 5);
        assert_eq!(c3[0], t(&[3, 0, 0, 0]));
        assert_eq!(c3[4], t(&[1, 1, 1, 0]));
    }

    #[test]
    fn compositions() {
        assert_eq!(t(&[0]).circ(&t(&[0])), t(&[1, 0]));
        assert_eq!(t(&[1, 0]).circ(&t(&[0])), t(&[2, 0, 0]));
        assert_eq!(t(&[0]).circ(&t(&[1, 0])), t(&[1, 1, 0]));
        assert_eq!(t(&[2, 1, 0, 0]).circ(&t(&[2, 0, 0])), t(&[3, 1, 0, 0, 2, 0, 0]));
        assert_eq!(t(&[2, 0, 2, 0, 0]).bullet(&t(&[1, 0])), t(&[3, 1, 0, 0, 2, 0, 0]));
        assert_eq!(t(&[0]).bullet(&t(&[1, 0])), t(&[1, 1, 0]));
    }

    #[test]
    fn factorisations() {
        assert_eq!(t(&[1, 0]).circ_factors().unwrap(), (t(&[0]), t(&[0])));
        assert_eq!(t(&[2, 1, 0, 0]).bullet_factors().unwrap(), (t(&[1, 0]), t(&[1, 0])));
        assert_eq!(t(&[3, 1, 0, 0, 2, 0, 0]).bullet_factors().unwrap(), (t(&[2, 0, 2, 0, 0]), t(&[1, 0])));
        let big = t(&[6, 0, 0, 1, 3, 0, 0, 0, 2, 2, 0, 0, 0, 0, 0]);
        assert_eq!(big.circ_factors().unwrap(), (t(&[5, 0, 0, 1, 3, 0, 0, 0, 2, 2, 0, 0, 0, 0]), t(&[0])));
        assert_eq!(big.bullet_factors().unwrap(), (t(&[5, 0, 1, 3, 0, 0, 0, 2, 2, 0, 0, 0, 0, 0]), t(&[0])));
        assert!(t(&[0]).circ_factors().is_err());
    }
}
