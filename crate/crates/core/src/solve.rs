//! Strategy selection: reduce when the period splits, then GGC for
//! prime-power periods and Berlekamp-Massey otherwise.

use std::str::FromStr;

use serde::Serialize;

use crate::bm::bm_lincomp;
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::ggc::ggc_lincomp;
use crate::num;
use crate::poly::Poly;
use crate::reduction::{compose, decompose, plan_reduction, ReductionPlan};
use crate::sequence::{oracle_lincomp, LinCompResult, PeriodicSequence};

/// Solver selection for [`solve_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    Auto,
    Bm,
    Ggc,
    Reduction,
    Oracle,
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "bm" => Ok(Strategy::Bm),
            "ggc" => Ok(Strategy::Ggc),
            "reduction" => Ok(Strategy::Reduction),
            "oracle" => Ok(Strategy::Oracle),
            other => Err(Error::BadConfig(format!("unknown algorithm {other:?}"))),
        }
    }
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Auto => "auto",
            Strategy::Bm => "bm",
            Strategy::Ggc => "ggc",
            Strategy::Reduction => "reduction",
            Strategy::Oracle => "oracle",
        }
    }
}

/// What ran during a reduction.
#[derive(Clone, Debug)]
pub struct ReductionTrace {
    pub plan: ReductionPlan,
    pub components: Vec<PeriodicSequence>,
    pub component_results: Vec<LinCompResult>,
    pub decompose_ops: u64,
    pub compose_ops: u64,
}

/// Field operations by phase; `total` is their sum.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PhaseOps {
    pub reduction: u64,
    pub components: u64,
    pub compose: u64,
    pub total: u64,
}

/// A result together with how it was obtained. `result.field_ops` is the
/// total over all phases.
#[derive(Clone, Debug)]
pub struct Solution {
    pub result: LinCompResult,
    pub reduction: Option<ReductionTrace>,
}

impl Solution {
    pub fn phase_ops(&self) -> PhaseOps {
        match &self.reduction {
            Some(t) => {
                let components = t.component_results.iter().map(|r| r.field_ops).sum();
                PhaseOps {
                    reduction: t.decompose_ops,
                    components,
                    compose: t.compose_ops,
                    total: t.decompose_ops + components + t.compose_ops,
                }
            }
            None => PhaseOps {
                components: self.result.field_ops,
                total: self.result.field_ops,
                ..PhaseOps::default()
            },
        }
    }

    /// `(m_j, b_j)` pairs with `m = prod_j m_j(b_j^{-1} x)`; a single
    /// `(m, 1)` when no reduction ran.
    pub fn factors(&self) -> Vec<(Poly, FieldElement)> {
        match &self.reduction {
            Some(t) => t
                .component_results
                .iter()
                .zip(&t.plan.roots_b)
                .map(|(r, &b)| (r.min_poly.clone(), b))
                .collect(),
            None => vec![(self.result.min_poly.clone(), FieldElement::ONE)],
        }
    }
}

/// GGC when the period is a power of the characteristic, otherwise
/// Berlekamp-Massey on two periods.
pub fn solve_direct(s: &PeriodicSequence) -> LinCompResult {
    let p = s.field().characteristic();
    if num::exact_log(s.len() as u64, p).is_some() {
        ggc_lincomp(s).expect("period is a power of p")
    } else {
        bm_lincomp(s)
    }
}

/// Reduce with `plan`, solve every component with [`solve_direct`], compose.
pub fn solve_with_plan(s: &PeriodicSequence, plan: &ReductionPlan) -> Result<Solution> {
    let d = decompose(s, plan)?;
    let component_results: Vec<LinCompResult> = d.components.iter().map(solve_direct).collect();
    let composed = compose(&component_results, plan)?;
    let components_ops: u64 = component_results.iter().map(|r| r.field_ops).sum();
    let result = LinCompResult {
        field_ops: d.field_ops + components_ops + composed.field_ops,
        ..composed.clone()
    };
    Ok(Solution {
        result,
        reduction: Some(ReductionTrace {
            plan: plan.clone(),
            components: d.components,
            component_results,
            decompose_ops: d.field_ops,
            compose_ops: composed.field_ops,
        }),
    })
}

/// Reduction when a split exists, otherwise a direct solve.
pub fn solve_auto_traced(s: &PeriodicSequence) -> Solution {
    match plan_reduction(s.field(), s.len()) {
        Ok(plan) => solve_with_plan(s, &plan).expect("plan matches sequence"),
        Err(_) => Solution { result: solve_direct(s), reduction: None },
    }
}

pub fn solve_auto(s: &PeriodicSequence) -> LinCompResult {
    solve_auto_traced(s).result
}

/// Runs a forced strategy. Preconditions that fail (GGC on a period that is
/// not a power of p, reduction without a valid split) are errors.
pub fn solve_with(s: &PeriodicSequence, strategy: Strategy) -> Result<Solution> {
    let direct = |result| Solution { result, reduction: None };
    match strategy {
        Strategy::Auto => Ok(solve_auto_traced(s)),
        Strategy::Bm => Ok(direct(bm_lincomp(s))),
        Strategy::Ggc => ggc_lincomp(s).map(direct),
        Strategy::Oracle => Ok(direct(oracle_lincomp(s))),
        Strategy::Reduction => {
            let plan = plan_reduction(s.field(), s.len()).map_err(|why| Error::Inapplicable(why.to_string()))?;
            solve_with_plan(s, &plan)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;
    use crate::sequence::Algorithm;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn dispatch_paths() {
        let f7 = make_field(7, 1, None).unwrap();
        let s21 = PeriodicSequence::from_ints(
            &f7,
            &[1, 2, 3, 4, 0, 1, 5, 2, 0, 1, 1, 3, 0, 6, 1, 2, 5, 6, 3, 3, 1],
        )
        .unwrap();
        let sol = solve_auto_traced(&s21);
        assert_eq!(sol.result.complexity, 21);
        assert_eq!(sol.result.algorithm, Algorithm::Reduction);
        let trace = sol.reduction.as_ref().unwrap();
        assert!(trace.component_results.iter().all(|r| r.algorithm == Algorithm::Ggc));
        let ops = sol.phase_ops();
        assert_eq!(ops.total, ops.reduction + ops.components + ops.compose);
        assert_eq!(ops.total, sol.result.field_ops);

        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let s49 = PeriodicSequence::random(&f7, 49, &mut rng);
        let sol = solve_auto_traced(&s49);
        assert!(sol.reduction.is_none());
        assert_eq!(sol.result.algorithm, Algorithm::Ggc);

        let f13 = make_field(13, 1, None).unwrap();
        let s39 = PeriodicSequence::random(&f13, 39, &mut rng);
        let sol = solve_auto_traced(&s39);
        let trace = sol.reduction.as_ref().unwrap();
        assert_eq!((trace.plan.u, trace.plan.n), (3, 13));
        assert!(sol.result.same_answer(&oracle_lincomp(&s39)));

        for n in [13, 9] {
            let s = PeriodicSequence::random(&f7, n, &mut rng);
            assert_eq!(solve_auto(&s).algorithm, Algorithm::Bm);
        }
        let s10 = PeriodicSequence::random(&f7, 10, &mut rng);
        assert_eq!(solve_auto(&s10).algorithm, Algorithm::Reduction);
    }

    #[test]
    fn forced_strategies() {
        let f7 = make_field(7, 1, None).unwrap();
        let s = PeriodicSequence::from_ints(&f7, &[1; 21]).unwrap();
        assert_eq!(
            solve_with(&s, Strategy::Ggc).unwrap_err(),
            Error::NotPrimePowerPeriod { period: 21, p: 7 }
        );
        let s13 = PeriodicSequence::from_ints(&f7, &[1; 13]).unwrap();
        assert!(matches!(solve_with(&s13, Strategy::Reduction), Err(Error::Inapplicable(_))));
        for st in [Strategy::Auto, Strategy::Bm, Strategy::Reduction, Strategy::Oracle] {
            assert_eq!(solve_with(&s, st).unwrap().result.complexity, 1);
        }
        assert_eq!("ggc".parse::<Strategy>().unwrap(), Strategy::Ggc);
        assert!("fast".parse::<Strategy>().is_err());
    }
}
