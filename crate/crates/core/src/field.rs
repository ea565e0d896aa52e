//! Exact arithmetic in GF(p^m), polynomial basis over GF(p).
//!
//! Elements are packed into a `u32` as `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`
//! where `c_i` is the coordinate of `x^i`. Fields are capped at
//! [`MAX_FIELD_SIZE`] elements because primitive-element and modulus searches
//! are exhaustive.
//!
//! Arithmetic that should show up in cost accounting goes through [`Arith`],
//! which pairs a field with an [`OpCounter`].

use std::cell::Cell;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::num;

pub const MAX_FIELD_SIZE: u64 = 1 << 20;
const MAX_DEGREE: usize = 20;

/// One element of GF(p^m). Only meaningful together with its [`FieldSpec`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// The packed base-p representation.
    pub fn packed(self) -> u32 {
        self.0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

struct FieldInner {
    p: u64,
    m: usize,
    modulus: Vec<u32>,
    size: u64,
    primitive: OnceLock<FieldElement>,
}

/// A concrete finite field GF(p^m). Cheap to clone.
#[derive(Clone)]
pub struct FieldSpec {
    inner: Arc<FieldInner>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.m == other.inner.m
                && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; mod={:?})", self.inner.p, self.inner.m, self.inner.modulus)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.m == 1 {
            write!(f, "GF({})", self.inner.p)
        } else {
            write!(f, "GF({}^{})", self.inner.p, self.inner.m)
        }
    }
}

/// Builds GF(p^m). When `modulus` is `None` the lexicographically smallest
/// monic irreducible of degree `m` is used (coefficients compared
/// low-degree-first); for `m = 1` that is the placeholder `x`.
pub fn make_field(p: u64, m: usize, modulus: Option<&[u32]>) -> Result<FieldSpec> {
    if !num::is_prime(p) {
        return Err(Error::NonPrime(p));
    }
    if m == 0 {
        return Err(Error::ZeroDegree);
    }
    let size = (p as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if m > MAX_DEGREE || size > MAX_FIELD_SIZE as u128 {
        return Err(Error::FieldTooLarge { p, m, max: MAX_FIELD_SIZE });
    }
    let modulus = match modulus {
        Some(coeffs) => {
            if coeffs.len() != m + 1 || coeffs[m] != 1 {
                return Err(Error::DegreeMismatch { expected: m, got: format!("{coeffs:?}") });
            }
            if let Some(&c) = coeffs.iter().find(|&&c| c as u64 >= p) {
                return Err(Error::ElementOutOfRange(c.to_string()));
            }
            let as_u64: Vec<u64> = coeffs.iter().map(|&c| c as u64).collect();
            if !gfp::is_irreducible(&as_u64, p) {
                return Err(Error::ReducibleModulus);
            }
            coeffs.to_vec()
        }
        None if m == 1 => vec![0, 1],
        None => smallest_irreducible(p, m),
    };
    Ok(FieldSpec {
        inner: Arc::new(FieldInner {
            p,
            m,
            modulus,
            size: size as u64,
            primitive: OnceLock::new(),
        }),
    })
}

/// Enumerates monic degree-`m` polynomials ordered by `(c_0, c_1, ..., c_{m-1})`.
fn smallest_irreducible(p: u64, m: usize) -> Vec<u32> {
    let total = p.pow(m as u32);
    for t in 0..total {
        let mut coeffs = lex_digits(t, p, m);
        if coeffs[0] == 0 {
            continue;
        }
        coeffs.push(1);
        if gfp::is_irreducible(&coeffs, p) {
            return coeffs.into_iter().map(|c| c as u32).collect();
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Digits of `t` in base `p`, most significant first, as a length-`m` vector.
fn lex_digits(mut t: u64, p: u64, m: usize) -> Vec<u64> {
    let mut digits = vec![0u64; m];
    for slot in digits.iter_mut().rev() {
        *slot = t % p;
        t /= p;
    }
    digits
}

impl FieldSpec {
    pub fn characteristic(&self) -> u64 {
        self.inner.p
    }

    pub fn degree(&self) -> usize {
        self.inner.m
    }

    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    /// Number of elements, `p^m`.
    pub fn size(&self) -> u64 {
        self.inner.size
    }

    /// Order of the multiplicative group, `q = p^m - 1`.
    pub fn order_minus_one(&self) -> u64 {
        self.inner.size - 1
    }

    pub fn contains(&self, e: FieldElement) -> bool {
        (e.0 as u64) < self.inner.size
    }

    /// Element from its polynomial-basis coordinates, low degree first.
    pub fn element(&self, coords: &[u32]) -> Result<FieldElement> {
        if coords.len() != self.inner.m || coords.iter().any(|&c| c as u64 >= self.inner.p) {
            return Err(Error::ElementOutOfRange(format!("{coords:?}")));
        }
        let mut packed = 0u64;
        for &c in coords.iter().rev() {
            packed = packed * self.inner.p + c as u64;
        }
        Ok(FieldElement(packed as u32))
    }

    pub fn from_packed(&self, v: u32) -> Result<FieldElement> {
        let e = FieldElement(v);
        if self.contains(e) {
            Ok(e)
        } else {
            Err(Error::ElementOutOfRange(v.to_string()))
        }
    }

    /// Embeds an integer through the prime subfield (reduced mod p).
    pub fn from_int(&self, k: i64) -> FieldElement {
        FieldElement(k.rem_euclid(self.inner.p as i64) as u32)
    }

    pub fn coords(&self, e: FieldElement) -> Vec<u32> {
        let mut v = e.0 as u64;
        (0..self.inner.m)
            .map(|_| {
                let c = (v % self.inner.p) as u32;
                v /= self.inner.p;
                c
            })
            .collect()
    }

    /// All elements in packed order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.inner.size as u32).map(FieldElement)
    }

    fn unpack(&self, e: FieldElement) -> [u64; MAX_DEGREE] {
        let mut out = [0u64; MAX_DEGREE];
        let mut v = e.0 as u64;
        for slot in out.iter_mut().take(self.inner.m) {
            *slot = v % self.inner.p;
            v /= self.inner.p;
        }
        out
    }

    fn pack(&self, digits: &[u64]) -> FieldElement {
        let mut packed = 0u64;
        for &c in digits[..self.inner.m].iter().rev() {
            packed = packed * self.inner.p + c;
        }
        FieldElement(packed as u32)
    }

    pub(crate) fn raw_add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.inner.p;
        if self.inner.m == 1 {
            return FieldElement(((a.0 as u64 + b.0 as u64) % p) as u32);
        }
        let (x, y) = (self.unpack(a), self.unpack(b));
        let mut z = [0u64; MAX_DEGREE];
        for i in 0..self.inner.m {
            z[i] = (x[i] + y[i]) % p;
        }
        self.pack(&z)
    }

    pub(crate) fn raw_neg(&self, a: FieldElement) -> FieldElement {
        let p = self.inner.p;
        if self.inner.m == 1 {
            return FieldElement(((p - a.0 as u64) % p) as u32);
        }
        let mut x = self.unpack(a);
        for d in x.iter_mut().take(self.inner.m) {
            *d = (p - *d) % p;
        }
        self.pack(&x)
    }

    pub(crate) fn raw_sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.raw_add(a, self.raw_neg(b))
    }

    pub(crate) fn raw_mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.inner.p;
        let m = self.inner.m;
        if m == 1 {
            return FieldElement(((a.0 as u64 * b.0 as u64) % p) as u32);
        }
        let (x, y) = (self.unpack(a), self.unpack(b));
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..m {
            if x[i] == 0 {
                continue;
            }
            for j in 0..m {
                prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
            }
        }
        // x^m = -(c_0 + ... + c_{m-1} x^{m-1})
        let modulus = &self.inner.modulus;
        for k in (m..2 * m - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..m {
                let sub = c * modulus[i] as u64 % p;
                prod[k - m + i] = (prod[k - m + i] + p - sub) % p;
            }
        }
        self.pack(&prod[..m])
    }

    pub(crate) fn raw_pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut result = FieldElement::ONE;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.raw_mul(result, base);
            }
            base = self.raw_mul(base, base);
            e >>= 1;
        }
        result
    }

    pub(crate) fn raw_inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(self.raw_pow(a, self.inner.size - 2))
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElement) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        let mut order = self.order_minus_one();
        for (r, _) in num::factorize(order) {
            while order % r == 0 && self.raw_pow(a, order / r) == FieldElement::ONE {
                order /= r;
            }
        }
        Ok(order)
    }

    /// Smallest element of multiplicative order `q`, scanning coordinate
    /// vectors lexicographically (constant coordinate first).
    pub fn primitive_element(&self) -> FieldElement {
        *self.inner.primitive.get_or_init(|| {
            let q = self.order_minus_one();
            let primes: Vec<u64> = num::factorize(q).into_iter().map(|(r, _)| r).collect();
            for t in 1..self.inner.size {
                let digits = lex_digits(t, self.inner.p, self.inner.m);
                let coords: Vec<u32> = digits.iter().map(|&d| d as u32).collect();
                let g = self.element(&coords).expect("digits are in range");
                if g.is_zero() {
                    continue;
                }
                if primes.iter().all(|&r| self.raw_pow(g, q / r) != FieldElement::ONE) {
                    return g;
                }
            }
            unreachable!("the multiplicative group of a finite field is cyclic")
        })
    }

    /// The `u` distinct u-th roots of unity `x_i = g^{i q / u}`, with `x_0 = 1`.
    pub fn uth_roots_of_unity(&self, u: u64) -> Result<Vec<FieldElement>> {
        let q = self.order_minus_one();
        if u == 0 || q % u != 0 {
            return Err(Error::NotADivisor { u, q });
        }
        let step = self.raw_pow(self.primitive_element(), q / u);
        let mut roots = Vec::with_capacity(u as usize);
        let mut x = FieldElement::ONE;
        for _ in 0..u {
            roots.push(x);
            x = self.raw_mul(x, step);
        }
        Ok(roots)
    }

    /// The unique `b` with `b^n = x`, which exists when `gcd(n, q) = 1`.
    pub fn nth_root_coprime(&self, x: FieldElement, n: u64) -> Result<FieldElement> {
        let q = self.order_minus_one();
        if n == 0 || num::gcd(n, q) != 1 {
            return Err(Error::NotCoprime { n, q });
        }
        if x.is_zero() {
            return Err(Error::ZeroElement);
        }
        let e = num::mod_inverse(n % q.max(1), q).expect("coprime");
        Ok(self.raw_pow(x, e))
    }
}

/// Counts field operations. Not shared across threads; independent tasks
/// keep their own counters and sum them afterwards.
#[derive(Debug, Default)]
pub struct OpCounter(Cell<u64>);

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn tick(&self, k: u64) {
        self.0.set(self.0.get() + k);
    }

    pub fn get(&self) -> u64 {
        self.0.get()
    }

    pub fn reset(&self) -> u64 {
        self.0.replace(0)
    }
}

/// Operation selector for [`Arith::apply`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add(FieldElement),
    Sub(FieldElement),
    Mul(FieldElement),
    Inv,
    Pow(i64),
}

/// Counted arithmetic in one field. Every add, sub, neg, mul and inv costs
/// one operation; `pow` costs its number of multiplications.
pub struct Arith<'f> {
    field: &'f FieldSpec,
    ops: OpCounter,
}

impl<'f> Arith<'f> {
    pub fn new(field: &'f FieldSpec) -> Self {
        Arith { field, ops: OpCounter::new() }
    }

    pub fn field(&self) -> &'f FieldSpec {
        self.field
    }

    pub fn ops(&self) -> u64 {
        self.ops.get()
    }

    /// Returns the count so far and starts again from zero.
    pub fn take_ops(&self) -> u64 {
        self.ops.reset()
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.ops.tick(1);
        self.field.raw_add(a, b)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.ops.tick(1);
        self.field.raw_sub(a, b)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.ops.tick(1);
        self.field.raw_neg(a)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.ops.tick(1);
        self.field.raw_mul(a, b)
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        self.ops.tick(1);
        self.field.raw_inv(a)
    }

    /// Square-and-multiply; negative exponents invert first.
    pub fn pow(&self, a: FieldElement, e: i64) -> Result<FieldElement> {
        let base = if e < 0 { self.inv(a)? } else { a };
        let mut e = e.unsigned_abs();
        if e == 0 {
            return Ok(FieldElement::ONE);
        }
        let top = 63 - e.leading_zeros();
        let mut acc = base;
        e &= !(1u64 << top);
        for bit in (0..top).rev() {
            acc = self.mul(acc, acc);
            if e >> bit & 1 == 1 {
                acc = self.mul(acc, base);
            }
        }
        Ok(acc)
    }

    /// Checked entry point: operands are validated against the field first.
    pub fn apply(&self, op: FieldOp, a: FieldElement) -> Result<FieldElement> {
        let check = |e: FieldElement| {
            if self.field.contains(e) {
                Ok(e)
            } else {
                Err(Error::MixedFields)
            }
        };
        let a = check(a)?;
        match op {
            FieldOp::Add(b) => Ok(self.add(a, check(b)?)),
            FieldOp::Sub(b) => Ok(self.sub(a, check(b)?)),
            FieldOp::Mul(b) => Ok(self.mul(a, check(b)?)),
            FieldOp::Inv => self.inv(a),
            FieldOp::Pow(e) => self.pow(a, e),
        }
    }
}

/// Polynomials over the prime field GF(p) as `u64` coefficient vectors,
/// used only for modulus validation.
mod gfp {
    fn trim(mut v: Vec<u64>) -> Vec<u64> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    fn inv_mod(a: u64, p: u64) -> u64 {
        crate::num::mod_inverse(a, p).expect("nonzero mod prime")
    }

    fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut r = trim(a.to_vec());
        let db = b.len() - 1;
        let lead_inv = inv_mod(b[db], p);
        while r.len() > db {
            let k = r.len() - 1;
            let c = r[k] * lead_inv % p;
            for (i, &bi) in b.iter().enumerate() {
                let idx = k - db + i;
                r[idx] = (r[idx] + p - c * bi % p) % p;
            }
            r = trim(r);
        }
        r
    }

    fn mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        rem(&out, f, p)
    }

    fn powmod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
        let mut result = vec![1u64];
        let mut b = base.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                result = mulmod(&result, &b, f, p);
            }
            b = mulmod(&b, &b, f, p);
            e >>= 1;
        }
        result
    }

    fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// Rabin-style test: `f` (monic, degree m) is irreducible iff
    /// `gcd(f, x^{p^k} - x) = 1` for all `1 <= k <= m/2`.
    pub(super) fn is_irreducible(f: &[u64], p: u64) -> bool {
        let m = f.len() - 1;
        if m == 1 {
            return true;
        }
        let x = vec![0u64, 1];
        let mut frob = x.clone();
        for _ in 1..=m / 2 {
            frob = powmod(&frob, p, f, p);
            let mut diff = frob.clone();
            diff.resize(diff.len().max(2), 0);
            diff[1] = (diff[1] + p - 1) % p;
            let g = gcd(f, &diff, p);
            if g.len() != 1 {
                return false;
            }
        }
        true
    }

    #[cfg(test)]
    pub(super) fn has_root(f: &[u64], p: u64) -> bool {
        (0..p).any(|x| {
            let mut acc = 0u64;
            for &c in f.iter().rev() {
                acc = (acc * x + c) % p;
            }
            acc == 0
        })
    }
}
