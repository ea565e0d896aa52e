pub mod bench;
pub mod bm;
pub mod cli;
pub mod error;
pub mod field;
pub mod format;
pub mod ggc;
pub mod num;
pub mod poly;
pub mod reduction;
pub mod report;
pub mod sequence;
pub mod solve;

pub use bm::{berlekamp_massey, bm_lincomp};
pub use error::{Error, Result};
pub use field::{make_field, Arith, FieldElement, FieldOp, FieldSpec, OpCounter};
pub use ggc::{ggc_fold, ggc_lincomp, GgcState};
pub use poly::{gcd_normalized, Poly};
pub use reduction::{compose, decompose, plan_reduction, Inapplicable, ReductionPlan};
pub use sequence::{oracle_lincomp, verify_recurrence, Algorithm, LinCompResult, PeriodicSequence};
pub use solve::{solve_auto, solve_auto_traced, solve_with, PhaseOps, Solution, Strategy};
