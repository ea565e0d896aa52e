//! Run reports: the JSON schema and the plain-text rendering.

use serde::Serialize;

use crate::field::{FieldElement, FieldSpec};
use crate::format::{render_factored, render_poly};
use crate::poly::Poly;
use crate::sequence::PeriodicSequence;
use crate::solve::{PhaseOps, Solution, Strategy};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InputDescriptor {
    /// File path, or `random(seed=..)` for generated input.
    pub source: String,
    pub period: usize,
    pub field: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldJson {
    pub p: u64,
    pub m: usize,
    pub modulus: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorJson {
    pub factor_coeffs: Vec<Vec<u32>>,
    pub scale_b: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentJson {
    pub index: usize,
    pub b: Vec<u32>,
    pub complexity: usize,
    pub algorithm: String,
    pub field_ops: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlanJson {
    pub u: usize,
    pub n: usize,
    pub roots_x: Vec<Vec<u32>>,
    pub roots_b: Vec<Vec<u32>>,
    pub components: Vec<ComponentJson>,
}

/// Everything a `solve` run reports. `ops` phases sum to `ops.total`;
/// `verified` is present only when verification was requested.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub input: InputDescriptor,
    pub field: FieldJson,
    pub period: usize,
    pub complexity: usize,
    pub min_poly_expanded: Vec<Vec<u32>>,
    pub min_poly_factored: Vec<FactorJson>,
    pub algorithm: String,
    pub requested: Strategy,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub plan: Option<PlanJson>,
    pub ops: PhaseOps,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    pub wall_time_us: u64,
    #[serde(skip)]
    pub factored_text: String,
    #[serde(skip)]
    pub expanded_text: String,
}

fn coords_of(field: &FieldSpec, e: FieldElement) -> Vec<u32> {
    field.coords(e)
}

fn poly_coords(p: &Poly) -> Vec<Vec<u32>> {
    p.coeffs().iter().map(|&c| coords_of(p.field(), c)).collect()
}

impl RunReport {
    pub fn new(
        source: String,
        input: &PeriodicSequence,
        requested: Strategy,
        solution: &Solution,
        verified: Option<bool>,
        wall_time_us: u64,
    ) -> RunReport {
        let result = &solution.result;
        let field = result.min_poly.field();
        let factors = solution.factors();
        let period = input.len();
        let plan = solution.reduction.as_ref().map(|t| PlanJson {
            u: t.plan.u,
            n: t.plan.n,
            roots_x: t.plan.roots_x.iter().map(|&x| coords_of(field, x)).collect(),
            roots_b: t.plan.roots_b.iter().map(|&b| coords_of(field, b)).collect(),
            components: t
                .component_results
                .iter()
                .zip(&t.plan.roots_b)
                .enumerate()
                .map(|(index, (r, &b))| ComponentJson {
                    index,
                    b: coords_of(field, b),
                    complexity: r.complexity,
                    algorithm: r.algorithm.name().into(),
                    field_ops: r.field_ops,
                })
                .collect(),
        });
        RunReport {
            input: InputDescriptor { source, period, field: field.to_string() },
            field: FieldJson {
                p: field.characteristic(),
                m: field.degree(),
                modulus: field.modulus().to_vec(),
            },
            period,
            complexity: result.complexity,
            min_poly_expanded: poly_coords(&result.min_poly),
            min_poly_factored: factors
                .iter()
                .map(|(m, b)| FactorJson { factor_coeffs: poly_coords(m), scale_b: coords_of(field, *b) })
                .collect(),
            algorithm: result.algorithm.name().into(),
            requested,
            plan,
            ops: solution.phase_ops(),
            verified,
            wall_time_us,
            factored_text: render_factored(&factors),
            expanded_text: render_poly(&result.min_poly),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "input:       {} (N={}, {})\n",
            self.input.source, self.period, self.input.field
        ));
        match &self.plan {
            Some(plan) => out.push_str(&format!("algorithm:   {} (u={}, n={})\n", self.algorithm, plan.u, plan.n)),
            None => out.push_str(&format!("algorithm:   {}\n", self.algorithm)),
        }
        out.push_str(&format!("complexity:  {}\n", self.complexity));
        out.push_str(&format!("min poly:    {}\n", self.factored_text));
        out.push_str(&format!("expanded:    {}\n", self.expanded_text));
        if let Some(plan) = &self.plan {
            for c in &plan.components {
                out.push_str(&format!(
                    "  component {}: b={:?} c={} via {} ({} ops)\n",
                    c.index, c.b, c.complexity, c.algorithm, c.field_ops
                ));
            }
        }
        out.push_str(&format!(
            "field ops:   reduction={} components={} compose={} total={}\n",
            self.ops.reduction, self.ops.components, self.ops.compose, self.ops.total
        ));
        if let Some(v) = self.verified {
            out.push_str(&format!("verified:    {}\n", if v { "yes" } else { "MISMATCH" }));
        }
        out.push_str(&format!("wall time:   {} us\n", self.wall_time_us));
        out
    }
}
