use std::fmt;

use crate::{CatalanError, CatalanTuple};

/// Largest table length accepted by [`CatalanTable::enumerate`].
pub const MAX_TABLE_LENGTH: usize = 8;

/// `<e^(0), .., e^(k)>` whose length tuple `(1+|e^(0)|, |e^(1)|, .., |e^(k)|)`
/// is a Catalan tuple.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CatalanTable {
    pockets: Vec<CatalanTuple>,
}

fn length_tuple_of(pockets: &[CatalanTuple]) -> Vec<u32> {
    pockets
        .iter()
        .enumerate()
        .map(|(j, p)| p.len() as u32 + u32::from(j == 0))
        .collect()
}

fn product(sets: &[Vec<CatalanTuple>], lens: &[usize], cur: &mut Vec<CatalanTuple>, out: &mut Vec<CatalanTable>) {
    match lens.get(cur.len()) {
        None => out.push(CatalanTable { pockets: cur.clone() }),
        Some(&l) => {
            for p in &sets[l] {
                cur.push(p.clone());
                product(sets, lens, cur, out);
                cur.pop();
            }
        }
    }
}

impl CatalanTable {
    pub fn new(pockets: Vec<CatalanTuple>) -> Result<Self, CatalanError> {
        CatalanTuple::new(length_tuple_of(&pockets))
            .map_err(|e| CatalanError::Invariant(format!("length tuple: {e}")))?;
        Ok(Self { pockets })
    }

    pub fn from_entries(pockets: &[&[u32]]) -> Result<Self, CatalanError> {
        let p = pockets.iter().map(|e| CatalanTuple::new(e.to_vec())).collect::<Result<Vec<_>, _>>()?;
        Self::new(p)
    }

    pub fn pockets(&self) -> &[CatalanTuple] {
        &self.pockets
    }

    /// Table length `k`; the table has `k+1` pockets.
    pub fn len(&self) -> usize {
        self.pockets.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn length_tuple(&self) -> CatalanTuple {
        CatalanTuple::new(length_tuple_of(&self.pockets)).expect("validated on construction")
    }

    /// Member of the subset whose zeroth pocket is `(0)`.
    pub fn is_special(&self) -> bool {
        self.pockets[0].is_empty()
    }

    /// Tables of length `k`, ordered by length tuple and then pocket by
    /// pocket, both descending lexicographically.
    pub fn enumerate(k: usize) -> Result<Vec<CatalanTable>, CatalanError> {
        if k == 0 {
            return Err(CatalanError::Domain("table length must be at least 1".into()));
        }
        if k > MAX_TABLE_LENGTH {
            return Err(CatalanError::TooLarge(format!("k = {k} exceeds {MAX_TABLE_LENGTH}")));
        }
        let sets: Vec<Vec<CatalanTuple>> = (0..=k).map(CatalanTuple::enumerate).collect();
        let mut out = Vec::new();
        for lt in CatalanTuple::enumerate(k) {
            let lens: Vec<usize> = lt
                .entries()
                .iter()
                .enumerate()
                .map(|(j, &e)| e as usize - usize::from(j == 0))
                .collect();
            product(&sets, &lens, &mut Vec::with_capacity(lens.len()), &mut out);
        }
        Ok(out)
    }

    /// `<a0 circ b0, a1..ak, b1..bl>`.
    pub fn lozenge(&self, other: &Self) -> Self {
        let mut p = vec![self.pockets[0].circ(&other.pockets[0])];
        p.extend_from_slice(&self.pockets[1..]);
        p.extend_from_slice(&other.pockets[1..]);
        Self::new(p).expect("lozenge preserves the table invariant")
    }

    /// `<a0, a1 bullet b0, b1..bl, a2..ak>`.
    pub fn blacklozenge(&self, other: &Self) -> Self {
        let mut p = vec![self.pockets[0].clone(), self.pockets[1].bullet(&other.pockets[0])];
        p.extend_from_slice(&other.pockets[1..]);
        p.extend_from_slice(&self.pockets[2..]);
        Self::new(p).expect("blacklozenge preserves the table invariant")
    }

    pub fn lozenge_factors(&self) -> Result<(Self, Self), CatalanError> {
        if self.pockets[0].is_empty() {
            return Err(CatalanError::Domain(format!("{self}: zeroth pocket is (0)")));
        }
        let (a0, b0) = self.pockets[0].circ_factors()?;
        let kh = self
            .length_tuple()
            .sigma(1 + b0.len() as i64)
            .ok_or_else(|| CatalanError::Invariant(format!("{self}: no split index")))?;
        let mut left = vec![a0];
        left.extend_from_slice(&self.pockets[1..=kh]);
        let mut right = vec![b0];
        right.extend_from_slice(&self.pockets[kh + 1..]);
        Ok((Self::new(left)?, Self::new(right)?))
    }

    pub fn blacklozenge_factors(&self) -> Result<(Self, Self), CatalanError> {
        if self.pockets.len() < 2 || self.pockets[1].is_empty() {
            return Err(CatalanError::Domain(format!("{self}: first pocket is (0)")));
        }
        let (a1, b0) = self.pockets[1].bullet_factors()?;
        // p returns to |e0|+|a1| right after the pockets taken from the right factor
        let target = (self.pockets[0].len() + a1.len()) as i64;
        let lh = self.length_tuple().partial_sums()[1..]
            .iter()
            .position(|&p| p == target)
            .ok_or_else(|| CatalanError::Invariant(format!("{self}: no split index")))?;
        let mut right = vec![b0];
        right.extend_from_slice(&self.pockets[2..2 + lh]);
        let mut left = vec![self.pockets[0].clone(), a1];
        left.extend_from_slice(&self.pockets[2 + lh..]);
        Ok((Self::new(left)?, Self::new(right)?))
    }
}

impl fmt::Display for CatalanTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.pockets.iter().map(|p| p.to_string()).collect();
        write!(f, "<{}>", s.join(","))
    }
}
