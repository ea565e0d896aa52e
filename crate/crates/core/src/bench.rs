//! Benchmark harness: seeded random sequences over a period family, every
//! requested algorithm run with instrumented field-operation counts, and the
//! cost bounds checked on each run.
//!
//! Bounds, for characteristic `p` and a split `N = u * n`:
//! - decompose: at most `3(u-1) N` operations;
//! - GGC on period `N'`: at most `2 p^2 N'`;
//! - reduction + GGC (decompose plus component solves): at most
//!   `(3(u-1) + 2 p^2) N`.
//!
//! Composing the minimal polynomial is reported separately and is not part
//! of these budgets, which count the work needed to find the complexity.

use std::path::Path;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{make_field, FieldSpec};
use crate::sequence::{Algorithm, PeriodicSequence};
use crate::solve::{solve_with, Solution, Strategy};

fn default_m() -> usize {
    1
}

fn default_multiplier() -> usize {
    1
}

fn default_algorithms() -> Vec<String> {
    vec!["auto".into(), "bm".into()]
}

/// Periods are `multiplier * base^h` for `h` in `h_min..=h_max`; `base`
/// defaults to the characteristic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BenchConfig {
    pub p: u64,
    #[serde(default = "default_m")]
    pub m: usize,
    #[serde(default)]
    pub modulus: Option<Vec<u32>>,
    #[serde(default = "default_multiplier")]
    pub multiplier: usize,
    #[serde(default)]
    pub base: Option<usize>,
    pub h_min: u32,
    pub h_max: u32,
    pub trials: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_algorithms")]
    pub algorithms: Vec<String>,
}

impl BenchConfig {
    pub fn from_toml(text: &str) -> Result<BenchConfig> {
        let cfg: BenchConfig = toml::from_str(text).map_err(|e| Error::BadConfig(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<BenchConfig> {
        Self::from_toml(&std::fs::read_to_string(path)?)
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::BadConfig("trials must be at least 1".into()));
        }
        if self.h_min > self.h_max {
            return Err(Error::BadConfig(format!("h_min {} > h_max {}", self.h_min, self.h_max)));
        }
        if self.multiplier == 0 || self.base == Some(0) {
            return Err(Error::BadConfig("multiplier and base must be positive".into()));
        }
        if self.algorithms.is_empty() {
            return Err(Error::BadConfig("no algorithms".into()));
        }
        self.strategies()?;
        self.field()?;
        Ok(())
    }

    pub fn field(&self) -> Result<FieldSpec> {
        make_field(self.p, self.m, self.modulus.as_deref()).map_err(|e| Error::BadConfig(e.to_string()))
    }

    pub fn strategies(&self) -> Result<Vec<Strategy>> {
        self.algorithms.iter().map(|a| a.parse()).collect()
    }

    pub fn periods(&self) -> Vec<(u32, usize)> {
        let base = self.base.unwrap_or(self.p as usize);
        (self.h_min..=self.h_max)
            .map(|h| (h, self.multiplier * base.pow(h)))
            .collect()
    }
}

/// Aggregate over the trials of one (period, algorithm) cell.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub h: u32,
    pub period: usize,
    pub algorithm: Strategy,
    /// What actually ran, e.g. `reduction` for `auto` on a split period.
    pub path: String,
    pub runs: usize,
    pub mean_ops: f64,
    pub max_ops: u64,
    /// Decompose + component ops (what the budgets cover), max over trials.
    pub max_budget_ops: u64,
    pub bound: Option<u64>,
    pub ops_per_n: f64,
    pub ops_per_n2: f64,
    pub mean_wall_us: f64,
    pub violations: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchReport {
    pub field: String,
    pub seed: u64,
    pub trials: usize,
    pub rows: Vec<BenchRow>,
    /// One line per bound violation, inapplicable skip or disagreement.
    pub notes: Vec<String>,
    pub violations: usize,
}

struct Measured {
    solution: Solution,
    wall_us: f64,
}

/// Checks the cost budgets on one run; returns `(budget_ops, bound, violations)`.
fn check_bounds(sol: &Solution, p: u64, period: usize, notes: &mut Vec<String>, tag: &str) -> (u64, Option<u64>, usize) {
    let ops = sol.phase_ops();
    let n = period as u64;
    let mut violations = 0;
    match &sol.reduction {
        Some(t) => {
            let u = t.plan.u as u64;
            if t.decompose_ops > 3 * (u - 1) * n {
                violations += 1;
                notes.push(format!("{tag}: decompose {} > 3(u-1)N = {}", t.decompose_ops, 3 * (u - 1) * n));
            }
            let all_ggc = t.component_results.iter().all(|r| r.algorithm == Algorithm::Ggc);
            for (j, r) in t.component_results.iter().enumerate() {
                if r.algorithm == Algorithm::Ggc && r.field_ops > 2 * p * p * t.plan.n as u64 {
                    violations += 1;
                    notes.push(format!("{tag}: component {j} GGC {} > 2p^2 n", r.field_ops));
                }
            }
            let budget = ops.reduction + ops.components;
            let bound = all_ggc.then(|| (3 * (u - 1) + 2 * p * p) * n);
            if let Some(b) = bound {
                if budget > b {
                    violations += 1;
                    notes.push(format!("{tag}: reduction+GGC {budget} > (3(u-1)+2p^2)N = {b}"));
                }
            }
            (budget, bound, violations)
        }
        None => {
            let bound = (sol.result.algorithm == Algorithm::Ggc).then(|| 2 * p * p * n);
            if let Some(b) = bound {
                if ops.total > b {
                    violations += 1;
                    notes.push(format!("{tag}: GGC {} > 2p^2N = {b}", ops.total));
                }
            }
            (ops.total, bound, violations)
        }
    }
}

/// Runs the whole benchmark. Deterministic apart from wall times.
pub fn run_bench(cfg: &BenchConfig) -> Result<BenchReport> {
    cfg.validate()?;
    let field = cfg.field()?;
    let strategies = cfg.strategies()?;
    let p = field.characteristic();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut rows = Vec::new();
    let mut notes = Vec::new();

    for (h, period) in cfg.periods() {
        let inputs: Vec<PeriodicSequence> =
            (0..cfg.trials).map(|_| PeriodicSequence::random(&field, period, &mut rng)).collect();
        let mut reference: Vec<Option<Solution>> = vec![None; inputs.len()];

        for &strategy in &strategies {
            let mut measured = Vec::new();
            for s in &inputs {
                let start = Instant::now();
                match solve_with(s, strategy) {
                    Ok(solution) => measured.push(Measured { solution, wall_us: start.elapsed().as_secs_f64() * 1e6 }),
                    Err(e @ (Error::Inapplicable(_) | Error::NotPrimePowerPeriod { .. })) => {
                        notes.push(format!("N={period} {}: skipped ({e})", strategy.name()));
                        break;
                    }
                    Err(e) => return Err(e),
                }
            }
            if measured.is_empty() {
                continue;
            }
            let mut violations = 0;
            let mut max_budget = 0;
            let mut bound = None;
            for (t, m) in measured.iter().enumerate() {
                let tag = format!("N={period} {} trial {t}", strategy.name());
                let (budget, b, v) = check_bounds(&m.solution, p, period, &mut notes, &tag);
                max_budget = max_budget.max(budget);
                bound = b;
                violations += v;
                match &reference[t] {
                    None => reference[t] = Some(m.solution.clone()),
                    Some(r) if !r.result.same_answer(&m.solution.result) => {
                        violations += 1;
                        notes.push(format!("{tag}: disagrees with {}", r.result.algorithm));
                    }
                    Some(_) => {}
                }
            }
            let ops: Vec<u64> = measured.iter().map(|m| m.solution.phase_ops().total).collect();
            let mean_ops = ops.iter().sum::<u64>() as f64 / ops.len() as f64;
            rows.push(BenchRow {
                h,
                period,
                algorithm: strategy,
                path: measured[0].solution.result.algorithm.name().into(),
                runs: measured.len(),
                mean_ops,
                max_ops: *ops.iter().max().expect("nonempty"),
                max_budget_ops: max_budget,
                bound,
                ops_per_n: mean_ops / period as f64,
                ops_per_n2: mean_ops / (period as f64 * period as f64),
                mean_wall_us: measured.iter().map(|m| m.wall_us).sum::<f64>() / measured.len() as f64,
                violations,
            });
        }
    }
    let violations = rows.iter().map(|r| r.violations).sum();
    Ok(BenchReport { field: field.to_string(), seed: cfg.seed, trials: cfg.trials, rows, notes, violations })
}

impl BenchReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_table(&self) -> String {
        let mut out = format!("{} seed={} trials={}\n", self.field, self.seed, self.trials);
        out.push_str(&format!(
            "{:>3} {:>8} {:>9} {:>9} {:>14} {:>14} {:>14} {:>9} {:>10} {:>12} {:>4}\n",
            "h", "N", "algorithm", "path", "mean ops", "budget ops", "bound", "ops/N", "ops/N^2", "wall us", "viol"
        ));
        for r in &self.rows {
            out.push_str(&format!(
                "{:>3} {:>8} {:>9} {:>9} {:>14.0} {:>14} {:>14} {:>9.2} {:>10.4} {:>12.0} {:>4}\n",
                r.h,
                r.period,
                r.algorithm.name(),
                r.path,
                r.mean_ops,
                r.max_budget_ops,
                r.bound.map_or("-".into(), |b| b.to_string()),
                r.ops_per_n,
                r.ops_per_n2,
                r.mean_wall_us,
                r.violations
            ));
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        out
    }
}
