use std::collections::HashMap;

use mft_algebra::{rat_int, LaurentExpr, MomentPolynomial};
use serde_json::{json, Value};

use crate::ops::{create_boundary, khat_inverse};
use crate::{KontsevichError, RatFn};

/// Body of a correlation function.
#[derive(Clone, Debug)]
pub enum Body {
    Laurent(LaurentExpr),
    /// Genus zero, two boundaries: `(2 lambda)^2 / (z1 z2 (z1+z2)^2)`.
    Rational(RatFn),
}

#[derive(Clone, Debug)]
pub struct CorrelationFn {
    pub genus: usize,
    pub boundaries: usize,
    pub body: Body,
}

impl CorrelationFn {
    pub fn laurent(&self) -> Option<&LaurentExpr> {
        match &self.body {
            Body::Laurent(e) => Some(e),
            Body::Rational(_) => None,
        }
    }

    pub fn as_ratfn(&self) -> RatFn {
        match &self.body {
            Body::Laurent(e) => RatFn::from_laurent(e.clone()),
            Body::Rational(r) => r.clone(),
        }
    }

    pub fn to_json(&self) -> Value {
        let body = match &self.body {
            Body::Laurent(e) => e.to_json(),
            Body::Rational(r) => json!({ "closed_form": r.to_string() }),
        };
        json!({"genus": self.genus, "boundaries": self.boundaries, "body": body})
    }

    /// `G_0(z1, z2) = 4 lambda^2 / (z1 z2 (z1 + z2)^2)`.
    pub fn seed_g0b2() -> Self {
        let num = LaurentExpr::monomial(&[-1, -1], MomentPolynomial::constant(rat_int(4), 0), 2);
        let body = Body::Rational(RatFn::new(num, &[(0, 1, 1, 2)]));
        Self { genus: 0, boundaries: 2, body }
    }

    /// `G_0(z1, z2, z3) = -32 lambda^5 / (r0 z1^3 z2^3 z3^3)`.
    pub fn seed_g0b3(budget: usize) -> Result<Self, KontsevichError> {
        let c = MomentPolynomial::monomial(&[-1], rat_int(-32), budget)?;
        let body = Body::Laurent(LaurentExpr::monomial(&[-3, -3, -3], c, 5));
        Ok(Self { genus: 0, boundaries: 3, body })
    }

    /// `G_1(z) = lambda^3 r1/(r0^2 z^3) - lambda^3/(r0 z^5)`.
    pub fn seed_g1b1(budget: usize) -> Result<Self, KontsevichError> {
        let a = MomentPolynomial::monomial(&[-2, 1], rat_int(1), budget)?;
        let b = MomentPolynomial::monomial(&[-1], rat_int(-1), budget)?;
        let e = LaurentExpr::monomial(&[-3], a, 3).add(&LaurentExpr::monomial(&[-5], b, 3))?;
        Ok(Self { genus: 1, boundaries: 1, body: Body::Laurent(e) })
    }
}

/// Computes correlation functions with a memo confined to this value.
#[derive(Debug)]
pub struct Solver {
    budget: usize,
    memo: HashMap<(usize, usize), LaurentExpr>,
}

impl Solver {
    /// `budget` is the largest moment index allowed anywhere.
    pub fn new(budget: usize) -> Self {
        Self { budget, memo: HashMap::new() }
    }

    /// Budget large enough for `(g, b)` and everything it depends on.
    pub fn for_target(g: usize, b: usize) -> Self {
        Self::new(3 * g + b + 1)
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// Genus-`g` one-point function from the residue recursion.
    pub fn one_point(&mut self, g: usize) -> Result<LaurentExpr, KontsevichError> {
        if g == 0 {
            return Err(KontsevichError::Domain("the one-point function needs g >= 1".into()));
        }
        if let Some(e) = self.memo.get(&(g, 1)) {
            return Ok(e.clone());
        }
        let need = 3 * g - 2;
        if self.budget < need {
            return Err(mft_algebra::AlgebraError::Budget { needed: need, budget: self.budget }.into());
        }
        // B = sum_h G_h G_{g-h} + G_{g-1}(z, z)
        let mut bracket = if g == 1 {
            LaurentExpr::monomial(&[-4], MomentPolynomial::one(self.budget), 2)
        } else {
            self.correlation_laurent(g - 1, 2)?.relabel(&[0, 0], 1)
        };
        for h in 1..g {
            let p = self.one_point(h)?.mul(&self.one_point(g - h)?);
            bracket = bracket.add(&p)?;
        }
        let inv = khat_inverse(&bracket.shift(0, 2), 0, self.budget)?;
        let out = inv.neg().shift(0, -1).with_lambda_exp(inv.lambda_exp() + 1);
        self.memo.insert((g, 1), out.clone());
        Ok(out)
    }

    fn correlation_laurent(&mut self, g: usize, b: usize) -> Result<LaurentExpr, KontsevichError> {
        if let Some(e) = self.memo.get(&(g, b)) {
            return Ok(e.clone());
        }
        let e = match (g, b) {
            (0, 0..=2) => {
                return Err(KontsevichError::Domain(format!("no Laurent form for genus {g} with {b} boundaries")))
            }
            (0, 3) => CorrelationFn::seed_g0b3(self.budget)?.laurent().unwrap().clone(),
            (_, 0) => return Err(KontsevichError::Domain("at least one boundary is needed".into())),
            (_, 1) => return self.one_point(g),
            _ => {
                let prev = self.correlation_laurent(g, b - 1)?;
                create_boundary(&prev)?
            }
        };
        self.memo.insert((g, b), e.clone());
        Ok(e)
    }

    /// `G_g(z_1, ..., z_b)`.
    pub fn correlation(&mut self, g: usize, b: usize) -> Result<CorrelationFn, KontsevichError> {
        if (g, b) == (0, 2) {
            return Ok(CorrelationFn::seed_g0b2());
        }
        let e = self.correlation_laurent(g, b)?;
        Ok(CorrelationFn { genus: g, boundaries: b, body: Body::Laurent(e) })
    }
}
