//! Reduction of a period-`un` sequence to `u` sequences of period `n`.
//!
//! With `u | q` and `gcd(n, q) = 1` (`q = p^m - 1`), let `x_0 = 1, ..., x_{u-1}`
//! be the u-th roots of unity and `b_j` the unique n-th root of `x_j`. The
//! component sequences
//!
//! ```text
//! a^j_i = sum_{k=0}^{u-1} a_{kn+i} b_j^{kn+i},   0 <= i < n
//! ```
//!
//! satisfy `c(a) = sum_j c(a^j)` and `m(a)(x) = prod_j m(a^j)(b_j^{-1} x)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Arith, FieldElement, FieldSpec};
use crate::num;
use crate::poly::{gcd_normalized, Poly};
use crate::sequence::{Algorithm, LinCompResult, PeriodicSequence};

/// A validated split `N = u * n` with its roots, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionPlan {
    pub field: FieldSpec,
    pub period: usize,
    pub u: usize,
    pub n: usize,
    /// u-th roots of unity, `roots_x[0] = 1`.
    pub roots_x: Vec<FieldElement>,
    /// `roots_b[j]^n = roots_x[j]`, `roots_b[0] = 1`.
    pub roots_b: Vec<FieldElement>,
}

/// Why no split applies to a period.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Inapplicable {
    /// `gcd(N, q) = 1`, so `u = 1`.
    NothingToSplit,
    /// The prime `prime` divides both `N` and `q`, but `prime^multiplicity`
    /// (its full power in `N`) does not divide `q`.
    MultiplicityTooHigh { prime: u64, multiplicity: u32 },
}

impl fmt::Display for Inapplicable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Inapplicable::NothingToSplit => write!(f, "u = 1: period shares no factor with p^m - 1"),
            Inapplicable::MultiplicityTooHigh { prime, multiplicity } => {
                write!(f, "{prime}^{multiplicity} divides the period but not p^m - 1")
            }
        }
    }
}

impl ReductionPlan {
    /// Explicit split; checks `u | q` and `gcd(n, q) = 1`.
    pub fn new(field: &FieldSpec, u: usize, n: usize) -> Result<ReductionPlan> {
        let q = field.order_minus_one();
        let roots_x = field.uth_roots_of_unity(u as u64)?;
        let roots_b = roots_x
            .iter()
            .map(|&x| field.nth_root_coprime(x, n as u64))
            .collect::<Result<Vec<_>>>()?;
        debug_assert!(num::gcd(n as u64, q) == 1);
        let plan = ReductionPlan { field: field.clone(), period: u * n, u, n, roots_x, roots_b };
        debug_assert!(plan.n > 256 || plan.factors_pairwise_coprime());
        Ok(plan)
    }

    /// The polynomials `1 - (b_j^{-1} x)^n` are pairwise coprime, which is
    /// what makes the gcd with `1 - x^N` split into the component gcds.
    pub fn factors_pairwise_coprime(&self) -> bool {
        let ar = Arith::new(&self.field);
        let base = Poly::one_minus_x_pow(&self.field, self.n);
        let factors: Vec<Poly> = self
            .roots_b
            .iter()
            .map(|&b| base.scale_argument(ar.inv(b).expect("roots are nonzero"), &ar).expect("nonzero"))
            .collect();
        factors.iter().enumerate().all(|(i, f)| {
            factors[i + 1..].iter().all(|g| gcd_normalized(f, g, &ar).expect("nonzero").is_one())
        })
    }
}

/// Picks `u` as the full power in `N` of every prime dividing `q`; this is
/// the only `u` that can meet both `u | q` and `gcd(N/u, q) = 1`.
pub fn plan_reduction(field: &FieldSpec, period: usize) -> std::result::Result<ReductionPlan, Inapplicable> {
    let q = field.order_minus_one();
    let mut u = 1u64;
    for (r, _) in num::factorize(q) {
        let v = num::valuation(period as u64, r);
        if v == 0 {
            continue;
        }
        if q % r.pow(v) != 0 {
            return Err(Inapplicable::MultiplicityTooHigh { prime: r, multiplicity: v });
        }
        u *= r.pow(v);
    }
    if u == 1 {
        return Err(Inapplicable::NothingToSplit);
    }
    let u = u as usize;
    Ok(ReductionPlan::new(field, u, period / u).expect("u | q and gcd(n, q) = 1 by construction"))
}

/// Component sequences `a^0, ..., a^{u-1}` and the field operations spent.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub components: Vec<PeriodicSequence>,
    pub field_ops: u64,
}

/// Splits `s` into the `u` period-`n` components, paired with
/// `plan.roots_b` by index.
///
/// Cost: `a^0` by plain sums, `(u-1) N / u` additions; for each `j >= 1` the
/// powers `b_j^2 .. b_j^{N-1}` incrementally, `N - 2` multiplications; then
/// each `a^j_i` as `u` products and `u - 1` sums. Altogether below `3(u-1)N`.
pub fn decompose(s: &PeriodicSequence, plan: &ReductionPlan) -> Result<Decomposition> {
    if s.field() != &plan.field {
        return Err(Error::MixedFields);
    }
    if s.len() != plan.period {
        return Err(Error::PeriodMismatch { expected: plan.period, got: s.len() });
    }
    let ar = Arith::new(&plan.field);
    let a = s.elements();
    let (u, n) = (plan.u, plan.n);

    let mut components = Vec::with_capacity(u);
    let first: Vec<FieldElement> = (0..n)
        .map(|i| (1..u).fold(a[i], |acc, k| ar.add(acc, a[k * n + i])))
        .collect();
    components.push(PeriodicSequence::new(&plan.field, first)?);

    let mut powers = vec![FieldElement::ONE; plan.period];
    for &b in &plan.roots_b[1..] {
        if plan.period > 1 {
            powers[1] = b;
        }
        for t in 2..plan.period {
            powers[t] = ar.mul(powers[t - 1], b);
        }
        let comp: Vec<FieldElement> = (0..n)
            .map(|i| {
                let mut acc = ar.mul(a[i], powers[i]);
                for k in 1..u {
                    let idx = k * n + i;
                    acc = ar.add(acc, ar.mul(a[idx], powers[idx]));
                }
                acc
            })
            .collect();
        components.push(PeriodicSequence::new(&plan.field, comp)?);
    }
    Ok(Decomposition { components, field_ops: ar.ops() })
}

/// `prod_j factor_j(b_j^{-1} x)` for `(factor_j, b_j)` pairs, and its cost.
pub fn compose_factors(field: &FieldSpec, factors: &[(Poly, FieldElement)]) -> Result<(Poly, u64)> {
    let ar = Arith::new(field);
    let mut product = Poly::one(field);
    for (m, b) in factors {
        if m.is_one() {
            continue;
        }
        let scaled = m.scale_argument(ar.inv(*b)?, &ar)?;
        product = product.mul(&scaled, &ar)?;
    }
    Ok((product, ar.ops()))
}

/// Recombines per-component results: complexities add, minimal polynomials
/// multiply after scaling the argument by `b_j^{-1}`. `field_ops` of the
/// returned result counts only the composition.
pub fn compose(results: &[LinCompResult], plan: &ReductionPlan) -> Result<LinCompResult> {
    if results.len() != plan.u {
        return Err(Error::ArityMismatch { expected: plan.u, got: results.len() });
    }
    let pairs: Vec<(Poly, FieldElement)> = results
        .iter()
        .zip(&plan.roots_b)
        .map(|(r, &b)| (r.min_poly.clone(), b))
        .collect();
    let (min_poly, ops) = compose_factors(&plan.field, &pairs)?;
    Ok(LinCompResult {
        complexity: results.iter().map(|r| r.complexity).sum(),
        min_poly,
        algorithm: Algorithm::Reduction,
        field_ops: ops,
    })
}

/// The period-`n` image `a'_i = 2 a_i b^i` of an antisymmetric period-`2n`
/// sequence `a_0..a_{n-1}, -a_0..-a_{n-1}`, with `b^n = -1`.
#[derive(Clone, Debug)]
pub struct AntisymmetricImage {
    pub image: PeriodicSequence,
    pub b: FieldElement,
}

/// Maps an antisymmetric period-`2n` sequence (odd `p`, `gcd(n, q) = 1`)
/// onto its period-`n` image. `c(a) = c(a')` and `m(a)(x) = m(a')(b x)`.
pub fn antisymmetric_image(s: &PeriodicSequence) -> Result<AntisymmetricImage> {
    let field = s.field();
    let p = field.characteristic();
    if p == 2 {
        return Err(Error::WrongCharacteristic { field: p, expected: 3 });
    }
    if s.len() % 2 != 0 {
        return Err(Error::Inapplicable(format!("odd period {}", s.len())));
    }
    let n = s.len() / 2;
    let a = s.elements();
    if (0..n).any(|i| field.raw_add(a[i], a[n + i]) != FieldElement::ZERO) {
        return Err(Error::Inapplicable("second half is not the negated first half".into()));
    }
    let b = field.nth_root_coprime(field.from_int(-1), n as u64)?;
    let two = field.from_int(2);
    let mut power = FieldElement::ONE;
    let mut image = Vec::with_capacity(n);
    for &x in &a[..n] {
        image.push(field.raw_mul(two, field.raw_mul(x, power)));
        power = field.raw_mul(power, b);
    }
    Ok(AntisymmetricImage { image: PeriodicSequence::new(field, image)?, b })
}

/// Lifts a result for the image `a'` back to `a`: same complexity,
/// `m(a)(x) = m(a')(b x)`.
pub fn lift_antisymmetric(image_result: &LinCompResult, b: FieldElement) -> Result<LinCompResult> {
    let field = image_result.min_poly.field();
    let ar = Arith::new(field);
    let min_poly = image_result.min_poly.scale_argument(b, &ar)?;
    Ok(LinCompResult {
        complexity: image_result.complexity,
        min_poly,
        algorithm: image_result.algorithm,
        field_ops: image_result.field_ops + ar.ops(),
    })
}
