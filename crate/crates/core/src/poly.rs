//! Dense univariate polynomials over GF(p^m).

use crate::error::{Error, Result};
use crate::field::{Arith, FieldElement, FieldSpec};
use crate::num;

/// Coefficients low-to-high; the highest stored coefficient is nonzero and
/// the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(field: &FieldSpec, mut coeffs: Vec<FieldElement>) -> Result<Poly> {
        if let Some(bad) = coeffs.iter().find(|c| !field.contains(**c)) {
            return Err(Error::ElementOutOfRange(format!("{bad:?}")));
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Ok(Poly { field: field.clone(), coeffs })
    }

    fn from_trusted(field: &FieldSpec, mut coeffs: Vec<FieldElement>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    /// Prime-subfield coefficients given as integers, low degree first.
    pub fn from_ints(field: &FieldSpec, coeffs: &[i64]) -> Poly {
        Self::from_trusted(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn zero(field: &FieldSpec) -> Poly {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &FieldSpec) -> Poly {
        Poly { field: field.clone(), coeffs: vec![FieldElement::ONE] }
    }

    /// `1 - x^n`.
    pub fn one_minus_x_pow(field: &FieldSpec, n: usize) -> Poly {
        let mut coeffs = vec![FieldElement::ZERO; n + 1];
        coeffs[0] = FieldElement::ONE;
        coeffs[n] = field.raw_sub(coeffs[n], FieldElement::ONE);
        Self::from_trusted(field, coeffs)
    }

    /// `(1 - x)^c` expanded from binomial coefficients reduced mod p
    /// (Lucas' theorem), without field arithmetic.
    pub fn one_minus_x_to(field: &FieldSpec, c: usize) -> Poly {
        let p = field.characteristic();
        let row = num::binomial_row_mod(c as u64, p);
        let coeffs = row
            .into_iter()
            .enumerate()
            .map(|(k, b)| {
                let signed = if k % 2 == 0 { b as i64 } else { -(b as i64) };
                field.from_int(signed)
            })
            .collect();
        Self::from_trusted(field, coeffs)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [FieldElement::ONE]
    }

    fn check(&self, other: &Poly, ar: &Arith) -> Result<()> {
        if self.field != other.field || &self.field != ar.field() {
            return Err(Error::MixedFields);
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly, ar: &Arith) -> Result<Poly> {
        self.check(other, ar)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(&a), Some(&b)) => ar.add(a, b),
                (Some(&a), None) | (None, Some(&a)) => a,
                (None, None) => unreachable!(),
            })
            .collect();
        Ok(Self::from_trusted(&self.field, coeffs))
    }

    pub fn sub(&self, other: &Poly, ar: &Arith) -> Result<Poly> {
        self.check(other, ar)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(&a), Some(&b)) => ar.sub(a, b),
                (Some(&a), None) => a,
                (None, Some(&b)) => ar.neg(b),
                (None, None) => unreachable!(),
            })
            .collect();
        Ok(Self::from_trusted(&self.field, coeffs))
    }

    /// Schoolbook product.
    pub fn mul(&self, other: &Poly, ar: &Arith) -> Result<Poly> {
        self.check(other, ar)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let mut out = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = ar.mul(a, b);
                out[i + j] = if out[i + j].is_zero() { t } else { ar.add(out[i + j], t) };
            }
        }
        Ok(Self::from_trusted(&self.field, out))
    }

    /// `(q, r)` with `self = q * divisor + r` and `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Poly, ar: &Arith) -> Result<(Poly, Poly)> {
        self.check(divisor, ar)?;
        let Some(dg) = divisor.degree() else {
            return Err(Error::DivideByZeroPoly);
        };
        let Some(df) = self.degree().filter(|&df| df >= dg) else {
            return Ok((Poly::zero(&self.field), self.clone()));
        };
        let g = &divisor.coeffs;
        let lead_inv = ar.inv(g[dg])?;
        let mut r = self.coeffs.clone();
        let mut q = vec![FieldElement::ZERO; df - dg + 1];
        for k in (dg..=df).rev() {
            if r[k].is_zero() {
                continue;
            }
            let c = ar.mul(r[k], lead_inv);
            q[k - dg] = c;
            for i in 0..dg {
                if !g[i].is_zero() {
                    r[k - dg + i] = ar.sub(r[k - dg + i], ar.mul(c, g[i]));
                }
            }
            r[k] = FieldElement::ZERO;
        }
        Ok((Self::from_trusted(&self.field, q), Self::from_trusted(&self.field, r)))
    }

    /// Scales so the constant term is 1, or makes monic when the constant
    /// term is zero. The zero polynomial is returned unchanged.
    pub fn normalized(&self, ar: &Arith) -> Result<Poly> {
        let Some(&lead) = self.coeffs.last() else {
            return Ok(self.clone());
        };
        let pivot = if self.coeffs[0].is_zero() { lead } else { self.coeffs[0] };
        if pivot == FieldElement::ONE {
            return Ok(self.clone());
        }
        let s = ar.inv(pivot)?;
        Ok(Self::from_trusted(&self.field, self.coeffs.iter().map(|&c| ar.mul(c, s)).collect()))
    }

    /// `self(s * x)`: coefficient `i` picks up `s^i`.
    pub fn scale_argument(&self, s: FieldElement, ar: &Arith) -> Result<Poly> {
        if &self.field != ar.field() {
            return Err(Error::MixedFields);
        }
        if s.is_zero() {
            return Err(Error::ZeroScale);
        }
        let mut power = FieldElement::ONE;
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (i, &c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                power = ar.mul(power, s);
            }
            out.push(if i == 0 { c } else { ar.mul(c, power) });
        }
        Ok(Self::from_trusted(&self.field, out))
    }

    /// Square-and-multiply power; `f^0 = 1`.
    pub fn pow(&self, mut k: u64, ar: &Arith) -> Result<Poly> {
        if &self.field != ar.field() {
            return Err(Error::MixedFields);
        }
        let mut result = Poly::one(&self.field);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base, ar)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base, ar)?;
            }
        }
        Ok(result)
    }

    /// Evaluation by Horner's rule, uncounted.
    pub fn eval(&self, x: FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| self.field.raw_add(self.field.raw_mul(acc, x), c))
    }
}

/// Euclidean gcd normalized to constant term 1 (monic when the constant term
/// vanishes).
pub fn gcd_normalized(f: &Poly, g: &Poly, ar: &Arith) -> Result<Poly> {
    f.check(g, ar)?;
    if f.is_zero() && g.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let (_, r) = a.divrem(&b, ar)?;
        a = b;
        b = r;
    }
    a.normalized(ar)
}
