//! Periodic sequences, the generating-function oracle and recurrence checks.

use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Arith, FieldElement, FieldSpec};
use crate::poly::{gcd_normalized, Poly};

/// One full period of a sequence over GF(p^m); the sequence is its infinite
/// repetition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicSequence {
    field: FieldSpec,
    period: Vec<FieldElement>,
}

impl PeriodicSequence {
    pub fn new(field: &FieldSpec, period: Vec<FieldElement>) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some(bad) = period.iter().find(|e| !field.contains(**e)) {
            return Err(Error::ElementOutOfRange(format!("{bad:?}")));
        }
        Ok(PeriodicSequence { field: field.clone(), period })
    }

    /// Prime-subfield values, reduced mod p.
    pub fn from_ints(field: &FieldSpec, values: &[i64]) -> Result<Self> {
        Self::new(field, values.iter().map(|&v| field.from_int(v)).collect())
    }

    /// Uniformly random period of length `n`.
    pub fn random<R: Rng + ?Sized>(field: &FieldSpec, n: usize, rng: &mut R) -> Self {
        let size = field.size() as u32;
        let period = (0..n)
            .map(|_| field.from_packed(rng.random_range(0..size)).expect("in range"))
            .collect();
        PeriodicSequence { field: field.clone(), period }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn elements(&self) -> &[FieldElement] {
        &self.period
    }

    /// The period length `N`.
    pub fn len(&self) -> usize {
        self.period.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_zero(&self) -> bool {
        self.period.iter().all(|e| e.is_zero())
    }

    pub fn at(&self, i: usize) -> FieldElement {
        self.period[i % self.period.len()]
    }

    /// `2N` consecutive terms, enough for Berlekamp-Massey.
    pub fn two_periods(&self) -> Vec<FieldElement> {
        self.period.iter().chain(self.period.iter()).copied().collect()
    }

    /// The shifted sequence `a_k, a_{k+1}, ...`.
    pub fn rotated(&self, k: usize) -> Self {
        let mut period = self.period.clone();
        period.rotate_left(k % self.period.len());
        PeriodicSequence { field: self.field.clone(), period }
    }

    /// `f(x) = a_0 + a_1 x + ... + a_{N-1} x^{N-1}`, the numerator of the
    /// generating function `f(x) / (1 - x^N)`.
    pub fn generating_poly(&self) -> Poly {
        Poly::new(&self.field, self.period.clone()).expect("elements validated")
    }
}

/// Which solver produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Oracle,
    Bm,
    Ggc,
    Reduction,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Oracle => "oracle",
            Algorithm::Bm => "bm",
            Algorithm::Ggc => "ggc",
            Algorithm::Reduction => "reduction",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Linear complexity `c` with minimal connection polynomial
/// `m = 1 - (c_1 x + ... + c_c x^c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinCompResult {
    pub complexity: usize,
    pub min_poly: Poly,
    pub algorithm: Algorithm,
    pub field_ops: u64,
}

impl LinCompResult {
    /// Same complexity and polynomial, ignoring provenance and cost.
    pub fn same_answer(&self, other: &LinCompResult) -> bool {
        self.complexity == other.complexity && self.min_poly == other.min_poly
    }

    /// `deg m = c` and `m(0) = 1`.
    pub fn is_well_formed(&self) -> bool {
        self.min_poly.degree() == Some(self.complexity) && self.min_poly.coeff(0) == FieldElement::ONE
    }
}

/// Linear complexity from `c = N - deg gcd(f, 1 - x^N)` and
/// `m = (1 - x^N) / gcd(f, 1 - x^N)`. The all-zero sequence gets `c = 0, m = 1`.
pub fn oracle_lincomp(s: &PeriodicSequence) -> LinCompResult {
    let field = s.field();
    let ar = Arith::new(field);
    let f = s.generating_poly();
    if f.is_zero() {
        return LinCompResult {
            complexity: 0,
            min_poly: Poly::one(field),
            algorithm: Algorithm::Oracle,
            field_ops: 0,
        };
    }
    let n = s.len();
    let denom = Poly::one_minus_x_pow(field, n);
    let d = gcd_normalized(&f, &denom, &ar).expect("same field, nonzero");
    let (m, r) = denom.divrem(&d, &ar).expect("gcd is nonzero");
    debug_assert!(r.is_zero());
    LinCompResult {
        complexity: n - d.degree().expect("nonzero gcd"),
        min_poly: m,
        algorithm: Algorithm::Oracle,
        field_ops: ar.ops(),
    }
}

/// Checks `sum_{j=0}^{k} m_j a_{i+k-j} = 0` for `i` in `[0, 2N)`, indices
/// taken modulo the period. `m` must have constant term 1.
pub fn verify_recurrence(s: &PeriodicSequence, m: &Poly) -> Result<bool> {
    if m.field() != s.field() {
        return Err(Error::MixedFields);
    }
    if m.coeff(0) != FieldElement::ONE {
        return Err(Error::BadConnectionPoly);
    }
    let field = s.field();
    let ar = Arith::new(field);
    let k = m.degree().unwrap_or(0);
    let n = s.len();
    for i in 0..2 * n {
        let mut acc = FieldElement::ZERO;
        for (j, &c) in m.coeffs().iter().enumerate() {
            if !c.is_zero() {
                acc = ar.add(acc, ar.mul(c, s.at(i + k - j)));
            }
        }
        if !acc.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
