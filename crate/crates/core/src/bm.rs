//! Berlekamp-Massey shift-register synthesis over GF(p^m).

use crate::error::{Error, Result};
use crate::field::{Arith, FieldElement, FieldSpec};
use crate::poly::Poly;
use crate::sequence::{Algorithm, LinCompResult, PeriodicSequence};

/// Shortest LFSR generating `prefix`, as `(L, C(x))` with `C(0) = 1` and
/// `s_i + C_1 s_{i-1} + ... + C_L s_{i-L} = 0` for `L <= i < len`.
///
/// For a prefix that is two full periods of a periodic sequence, `deg C = L`
/// and the result equals the gcd oracle. For arbitrary prefixes `C` may have
/// degree below `L`.
pub fn berlekamp_massey(prefix: &[FieldElement], field: &FieldSpec) -> Result<LinCompResult> {
    if prefix.is_empty() {
        return Err(Error::EmptyPrefix);
    }
    if let Some(bad) = prefix.iter().find(|e| !field.contains(**e)) {
        return Err(Error::ElementOutOfRange(format!("{bad:?}")));
    }
    let ar = Arith::new(field);

    // connection polynomial, and the one before the last length change
    let mut conn = vec![FieldElement::ONE];
    let mut prev = vec![FieldElement::ONE];
    let mut len = 0usize;
    // shift since the last length change
    let mut shift = 1usize;
    let mut prev_disc = FieldElement::ONE;

    for i in 0..prefix.len() {
        let mut disc = prefix[i];
        for j in 1..=len.min(conn.len() - 1) {
            if !conn[j].is_zero() {
                disc = ar.add(disc, ar.mul(conn[j], prefix[i - j]));
            }
        }
        if disc.is_zero() {
            shift += 1;
            continue;
        }
        let coef = ar.mul(disc, ar.inv(prev_disc)?);
        let lengthen = 2 * len <= i;
        let saved = if lengthen { Some(conn.clone()) } else { None };
        if conn.len() < prev.len() + shift {
            conn.resize(prev.len() + shift, FieldElement::ZERO);
        }
        for (j, &b) in prev.iter().enumerate() {
            if !b.is_zero() {
                conn[j + shift] = ar.sub(conn[j + shift], ar.mul(coef, b));
            }
        }
        if let Some(saved) = saved {
            len = i + 1 - len;
            prev = saved;
            prev_disc = disc;
            shift = 1;
        } else {
            shift += 1;
        }
    }

    Ok(LinCompResult {
        complexity: len,
        min_poly: Poly::new(field, conn)?,
        algorithm: Algorithm::Bm,
        field_ops: ar.ops(),
    })
}

/// Berlekamp-Massey on two full periods.
pub fn bm_lincomp(s: &PeriodicSequence) -> LinCompResult {
    berlekamp_massey(&s.two_periods(), s.field()).expect("nonempty validated prefix")
}
