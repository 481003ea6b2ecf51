use mft_algebra::Rational;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::tree::{trees, PocketTree, TreeKind};
use crate::{CatalanError, CatalanTable};

/// Largest `N` accepted by [`expand_planar`].
pub const MAX_POINTS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

/// Factor `1/(E_{p_t} - E_{p_u})` with `t < u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Thread {
    pub pair: (usize, usize),
    pub parity: Parity,
}

/// `sign * prod G_{p_r p_s} / prod (E_{p_t} - E_{p_u})` at `lambda = -1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionMonomial {
    pub sign: i8,
    pub chords: Vec<(usize, usize)>,
    pub threads: Vec<Thread>,
}

/// Exact input for evaluating `N`-point functions: distinct `E_i` and a
/// symmetric matrix of 2-point values.
#[derive(Clone, Debug)]
pub struct PlanarData {
    pub e: Vec<Rational>,
    pub g2: Vec<Vec<Rational>>,
}

impl PlanarData {
    pub fn new(e: Vec<Rational>, g2: Vec<Vec<Rational>>) -> Result<Self, CatalanError> {
        let n = e.len();
        if g2.len() != n || g2.iter().any(|r| r.len() != n) {
            return Err(CatalanError::Domain(format!("2-point matrix must be {n}x{n}")));
        }
        for i in 0..n {
            for j in 0..i {
                if e[i] == e[j] {
                    return Err(CatalanError::Degenerate(format!("E_{j} = E_{i}")));
                }
                if g2[i][j] != g2[j][i] {
                    return Err(CatalanError::Domain(format!("2-point matrix not symmetric at ({j},{i})")));
                }
            }
        }
        Ok(Self { e, g2 })
    }

    pub fn len(&self) -> usize {
        self.e.len()
    }

    pub fn is_empty(&self) -> bool {
        self.e.is_empty()
    }
}

impl ExpansionMonomial {
    /// Value at coupling `lambda`, including the factor `(-lambda)^(N/2-1)`.
    pub fn evaluate(&self, data: &PlanarData, lambda: &Rational) -> Result<Rational, CatalanError> {
        let n = 2 * self.chords.len();
        if data.len() < n {
            return Err(CatalanError::Domain(format!("{n}-point term needs {n} energies, got {}", data.len())));
        }
        let mut v = Rational::from_integer(self.sign.into());
        for &(r, s) in &self.chords {
            v *= &data.g2[r][s];
        }
        for t in &self.threads {
            let d = &data.e[t.pair.0] - &data.e[t.pair.1];
            if d.is_zero() {
                return Err(CatalanError::Degenerate(format!("E_{} = E_{}", t.pair.0, t.pair.1)));
            }
            v /= d;
        }
        let ml = -lambda.clone();
        for _ in 1..n / 2 {
            v *= &ml;
        }
        Ok(v)
    }

    pub fn to_json(&self) -> Value {
        let threads: Vec<Value> = self
            .threads
            .iter()
            .map(|t| json!({"pair": [t.pair.0, t.pair.1], "parity": t.parity.as_str()}))
            .collect();
        let chords: Vec<Value> = self.chords.iter().map(|&(r, s)| json!([r, s])).collect();
        json!({"sign": self.sign, "chords": chords, "threads": threads})
    }
}

/// Monomial of a table of length `N/2`.
pub fn table_to_monomial(table: &CatalanTable, n: usize) -> Result<ExpansionMonomial, CatalanError> {
    if n != 2 * table.len() {
        return Err(CatalanError::Domain(format!("table of length {} gives a {}-point term, not {n}", table.len(), 2 * table.len())));
    }
    let pt = PocketTree::new(table);
    let chords: Vec<(usize, usize)> = (1..pt.vertex_count()).map(|m| pt.edge_labels(m).unwrap()).collect();
    let mut sign = 1i8;
    let mut threads = Vec::with_capacity(n.saturating_sub(2));
    for (m, pocket) in table.pockets().iter().enumerate() {
        if pocket.is_empty() {
            continue;
        }
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for (a, b) in pt.pocket_edges(m) {
            let (x, y) = if a % 2 == 0 { (a, b) } else { (b, a) };
            even.push(x);
            odd.push(y);
        }
        let (on_even, on_odd) = if pt.level(m) % 2 == 0 {
            (TreeKind::Direct, TreeKind::Opposite)
        } else {
            (TreeKind::Opposite, TreeKind::Direct)
        };
        for (row, kind, parity) in [(&even, on_even, Parity::Even), (&odd, on_odd, Parity::Odd)] {
            for (i, j) in trees(pocket, kind) {
                let (t, u) = (row[i], row[j]);
                if t > u {
                    sign = -sign;
                }
                threads.push(Thread { pair: (t.min(u), t.max(u)), parity });
            }
        }
    }
    Ok(ExpansionMonomial { sign, chords, threads })
}

/// `(-1)^(sum_{j>=1} e_0^(j))`.
pub fn table_sign(table: &CatalanTable) -> i8 {
    let s: u32 = table.pockets()[1..].iter().map(|p| p.entries()[0]).sum();
    if s % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All monomials of the planar `N`-point function, in table order.
pub fn expand_planar(n: usize) -> Result<Vec<ExpansionMonomial>, CatalanError> {
    if n < 2 || n % 2 != 0 {
        return Err(CatalanError::Domain(format!("N = {n} must be even and at least 2")));
    }
    if n > MAX_POINTS {
        return Err(CatalanError::TooLarge(format!("N = {n} exceeds {MAX_POINTS}")));
    }
    CatalanTable::enumerate(n / 2)?.iter().map(|t| table_to_monomial(t, n)).collect()
}

/// Sum of all monomials of [`expand_planar`].
pub fn evaluate_planar(n: usize, data: &PlanarData, lambda: &Rational) -> Result<Rational, CatalanError> {
    if data.len() != n {
        return Err(CatalanError::Domain(format!("need {n} energies, got {}", data.len())));
    }
    let mut acc = Rational::zero();
    for m in expand_planar(n)? {
        acc += m.evaluate(data, lambda)?;
    }
    Ok(acc)
}

/// Whether `x` lies strictly between the endpoints of `(a, b)`, `a < b`.
fn inside(x: usize, (a, b): (usize, usize)) -> bool {
    a < x && x < b
}

/// Two segments between circle points cross when they share no endpoint and
/// exactly one endpoint of the second lies inside the first.
pub fn crosses(c: (usize, usize), d: (usize, usize)) -> bool {
    let shared = c.0 == d.0 || c.0 == d.1 || c.1 == d.0 || c.1 == d.1;
    !shared && (inside(d.0, c) != inside(d.1, c))
}

impl ExpansionMonomial {
    /// Chords pairwise non-crossing and no thread crossing a chord.
    pub fn is_planar(&self) -> bool {
        let ok_chords = self.chords.iter().enumerate().all(|(i, &c)| self.chords[i + 1..].iter().all(|&d| !crosses(c, d)));
        ok_chords && self.threads.iter().all(|t| self.chords.iter().all(|&c| !crosses(c, t.pair)))
    }
}
