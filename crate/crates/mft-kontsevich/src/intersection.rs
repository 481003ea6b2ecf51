use mft_algebra::rational::{factorial, format_rational, pow_i};
use mft_algebra::{rat_int, Rational};
use serde_json::{json, Map, Value};

use crate::{FreeEnergy, KontsevichError};

/// Intersection numbers `<tau_2^k2 ... tau_(3g-2)^k(3g-2)>` read off `F_g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionTable {
    pub genus: usize,
    /// `(k2, k3, ..., k_(3g-2))` with value, in reverse lexicographic order.
    pub entries: Vec<(Vec<u32>, Rational)>,
}

fn odd_double_factorial(i: usize) -> Rational {
    let mut acc = rat_int(1);
    let mut m = 2 * i as i64 + 1;
    while m > 1 {
        acc *= rat_int(m);
        m -= 2;
    }
    acc
}

impl IntersectionTable {
    /// Substitutes `t_(i+1) = -(2i+1)!! r_i`, `r0 = -t1` and strips the
    /// `prod k! (-t1)^e` normalisation.
    pub fn from_free_energy(fe: &FreeEnergy) -> Result<Self, KontsevichError> {
        let FreeEnergy::Stable { genus, poly } = fe else {
            return Err(KontsevichError::Domain("intersection numbers need genus >= 2".into()));
        };
        let g = *genus;
        let width = 3 * g - 3;
        let mut entries = Vec::new();
        for (m, c) in poly.terms() {
            let mut k = vec![0u32; width];
            let mut weight = 0usize;
            let mut count = 0i32;
            let mut value = c.clone();
            for (i, &e) in m.iter().enumerate().skip(1) {
                if e == 0 {
                    continue;
                }
                if i > width {
                    return Err(KontsevichError::Extraction(format!("moment r{i} exceeds index {width}")));
                }
                k[i - 1] = e as u32;
                weight += i * e as usize;
                count += e;
                value *= pow_i(&-odd_double_factorial(i).recip(), e) * factorial(e as usize);
            }
            if weight != width || m[0] != -(2 * g as i32 - 2 + count) {
                return Err(KontsevichError::Extraction(format!("unexpected monomial {m:?} at genus {g}")));
            }
            entries.push((k, value));
        }
        entries.sort_by(|a, b| b.0.cmp(&a.0));
        Ok(Self { genus: g, entries })
    }

    pub fn key(k: &[u32]) -> String {
        k.iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, e)| format!("k{}={e}", i + 2))
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn get(&self, key: &str) -> Option<&Rational> {
        self.entries.iter().find(|(k, _)| Self::key(k) == key).map(|(_, v)| v)
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (k, v) in &self.entries {
            map.insert(Self::key(k), Value::String(format_rational(v)));
        }
        json!({"genus": self.genus, "intersections": Value::Object(map)})
    }
}
