//! Which path the automatic solver takes for different periods, and the
//! field operations spent in each phase.

use lincomp::{make_field, oracle_lincomp, solve_auto_traced, PeriodicSequence};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn main() -> lincomp::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let cases = [(7u64, 1usize, 21usize), (7, 1, 49), (7, 1, 13), (13, 1, 39), (3, 2, 40), (2, 1, 32)];
    for (p, m, n) in cases {
        let f = make_field(p, m, None)?;
        let s = PeriodicSequence::random(&f, n, &mut rng);
        let sol = solve_auto_traced(&s);
        let ops = sol.phase_ops();
        let split = sol.reduction.as_ref().map(|t| format!(" u={} n={}", t.plan.u, t.plan.n)).unwrap_or_default();
        println!(
            "{f:>8} N={n:>3}: {:<9}{split:<10} c={:>3}  ops reduction={} components={} compose={}",
            sol.result.algorithm.name(),
            sol.result.complexity,
            ops.reduction,
            ops.components,
            ops.compose
        );
        assert!(sol.result.same_answer(&oracle_lincomp(&s)));
    }
    Ok(())
}
