//! Generalized Games-Chan algorithm for sequences of period `p^h` over a
//! field of characteristic `p`.
//!
//! Each level splits the current `p^h`-tuple into `p` blocks `s^(0..p)` of
//! length `p^{h-1}` and forms
//!
//! ```text
//! b^(mu) = sum_{j=0}^{p-mu-1} C(p-j-1, mu) s^(j),   mu = 0..p
//! ```
//!
//! with binomials reduced mod p. The first nonzero `b^(p-w)` decides the next
//! tuple and adds `(w-1) p^{h-1}` to the complexity. Since
//! `1 - x^{p^h} = (1 - x)^{p^h}` in characteristic p, the minimal polynomial
//! is `(1 - x)^c`.

use crate::error::{Error, Result};
use crate::field::{Arith, FieldElement, FieldSpec};
use crate::num;
use crate::poly::Poly;
use crate::sequence::{Algorithm, LinCompResult, PeriodicSequence};

/// Working state of one fold level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GgcState {
    pub tuple: Vec<FieldElement>,
    /// Remaining level: `tuple.len() == p^level`.
    pub level: u32,
    pub complexity: usize,
}

/// One fold: returns the `p` tuples `b^(0), ..., b^(p-1)`, each of length
/// `s.len() / p`. Field operations are charged to `ar`.
pub fn ggc_fold(s: &[FieldElement], ar: &Arith) -> Result<Vec<Vec<FieldElement>>> {
    let p = ar.field().characteristic();
    if s.is_empty() || !matches!(num::exact_log(s.len() as u64, p), Some(h) if h >= 1) {
        return Err(Error::BadLength(s.len()));
    }
    let p = p as usize;
    let block = s.len() / p;
    let mut b: Vec<Option<Vec<FieldElement>>> = vec![None; p];

    // Row r = p-1-j of Pascal's triangle mod p, built incrementally as j
    // runs from p-1 down to 0 so only one row is held at a time.
    let mut row: Vec<u64> = Vec::with_capacity(p);
    for j in (0..p).rev() {
        let r = p - 1 - j;
        row.push(1);
        for k in (1..r).rev() {
            row[k] = (row[k] + row[k - 1]) % p as u64;
        }
        let src = &s[j * block..(j + 1) * block];
        for (mu, &coef) in row.iter().enumerate().take(r + 1) {
            let scale = ar.field().from_int(coef as i64);
            let target = &mut b[mu];
            match target {
                None => {
                    let v = if coef == 1 {
                        src.to_vec()
                    } else {
                        src.iter().map(|&x| ar.mul(scale, x)).collect()
                    };
                    *target = Some(v);
                }
                Some(acc) => {
                    for (a, &x) in acc.iter_mut().zip(src) {
                        let term = if coef == 1 { x } else { ar.mul(scale, x) };
                        *a = ar.add(*a, term);
                    }
                }
            }
        }
    }
    Ok(b.into_iter().map(|v| v.expect("every mu receives a term")).collect())
}

/// Linear complexity of a period-`p^h` sequence by repeated folding. The
/// reported `field_ops` covers the folds; expanding `(1 - x)^c` uses
/// binomials mod p and costs no field operations.
pub fn ggc_lincomp(s: &PeriodicSequence) -> Result<LinCompResult> {
    let field = s.field();
    let p = field.characteristic();
    let Some(h) = num::exact_log(s.len() as u64, p) else {
        return Err(Error::NotPrimePowerPeriod { period: s.len(), p });
    };
    let ar = Arith::new(field);
    let state = run(s.elements().to_vec(), h, &ar, |_| {})?;
    Ok(finish(field, state.complexity, ar.ops()))
}

/// Like [`ggc_lincomp`] but also returns every intermediate state, starting
/// with the input and ending with the final level.
pub fn ggc_trace(s: &PeriodicSequence) -> Result<(LinCompResult, Vec<GgcState>)> {
    let field = s.field();
    let p = field.characteristic();
    let Some(h) = num::exact_log(s.len() as u64, p) else {
        return Err(Error::NotPrimePowerPeriod { period: s.len(), p });
    };
    let ar = Arith::new(field);
    let mut trace = Vec::new();
    let state = run(s.elements().to_vec(), h, &ar, |st| trace.push(st.clone()))?;
    Ok((finish(field, state.complexity, ar.ops()), trace))
}

fn finish(field: &FieldSpec, complexity: usize, ops: u64) -> LinCompResult {
    LinCompResult {
        complexity,
        min_poly: Poly::one_minus_x_to(field, complexity),
        algorithm: Algorithm::Ggc,
        field_ops: ops,
    }
}

fn run(
    tuple: Vec<FieldElement>,
    level: u32,
    ar: &Arith,
    mut observe: impl FnMut(&GgcState),
) -> Result<GgcState> {
    let p = ar.field().characteristic() as usize;
    let mut state = GgcState { tuple, level, complexity: 0 };
    observe(&state);
    while state.level > 0 {
        if state.tuple.iter().all(|e| e.is_zero()) {
            return Ok(state);
        }
        let folds = ggc_fold(&state.tuple, ar)?;
        // b^(p-1) = s^(0) and the transform is unitriangular, so a nonzero
        // tuple always has a nonzero fold; the first one fixes w uniquely.
        let first = folds
            .iter()
            .position(|b| b.iter().any(|e| !e.is_zero()))
            .expect("nonzero tuple has a nonzero fold");
        let w = p - first;
        let block = state.tuple.len() / p;
        state.complexity += (w - 1) * block;
        state.tuple = folds.into_iter().nth(first).expect("index in range");
        state.level -= 1;
        observe(&state);
    }
    if !state.tuple[0].is_zero() {
        state.complexity += 1;
    }
    Ok(state)
}
