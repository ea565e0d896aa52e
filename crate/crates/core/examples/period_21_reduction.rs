//! Splitting a period-21 sequence over GF(7) into three period-7 sequences,
//! solving each with the Games-Chan fold and recombining.

use lincomp::format::{read_sequence_file, render_factored, render_poly, render_sequence};
use lincomp::ggc_lincomp;
use lincomp::{compose, decompose, plan_reduction};

pub fn main() -> lincomp::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/period21.seq");
    let s = read_sequence_file(path)?;
    let f = s.field().clone();
    let plan = plan_reduction(&f, s.len()).map_err(|e| lincomp::Error::Inapplicable(e.to_string()))?;
    let coords = |v: &[lincomp::FieldElement]| v.iter().map(|&e| f.coords(e)[0]).collect::<Vec<_>>();
    println!("u={} n={} x={:?} b={:?}", plan.u, plan.n, coords(&plan.roots_x), coords(&plan.roots_b));

    let d = decompose(&s, &plan)?;
    println!("decompose: {} ops (3(u-1)N = {})", d.field_ops, 3 * (plan.u - 1) * s.len());
    let mut results = Vec::new();
    for (j, a) in d.components.iter().enumerate() {
        let r = ggc_lincomp(a)?;
        print!("a^{j} = {}", render_sequence(a).lines().last().unwrap_or(""));
        println!("   c={} m = {}", r.complexity, render_poly(&r.min_poly));
        results.push(r);
    }
    let m = compose(&results, &plan)?;
    let pairs: Vec<_> = results.iter().map(|r| r.min_poly.clone()).zip(plan.roots_b.iter().copied()).collect();
    println!("c = {}", m.complexity);
    println!("m = {}", render_factored(&pairs));
    println!("  = {}", render_poly(&m.min_poly));
    Ok(())
}
