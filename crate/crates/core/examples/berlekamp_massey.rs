//! Berlekamp-Massey on two periods, checked against the oracle.

use lincomp::format::render_poly;
use lincomp::{berlekamp_massey, bm_lincomp, make_field, oracle_lincomp, PeriodicSequence};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn main() -> lincomp::Result<()> {
    let f13 = make_field(13, 1, None)?;
    // Fibonacci numbers mod 13 satisfy s_i = s_{i-1} + s_{i-2}
    let mut fib = vec![0i64, 1];
    while fib.len() < 12 {
        let k = fib.len();
        fib.push((fib[k - 1] + fib[k - 2]) % 13);
    }
    let prefix: Vec<_> = fib.iter().map(|&v| f13.from_int(v)).collect();
    let r = berlekamp_massey(&prefix, &f13)?;
    println!("fibonacci mod 13: L={} C = {}", r.complexity, render_poly(&r.min_poly));

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in [5, 17, 60] {
        let s = PeriodicSequence::random(&f13, n, &mut rng);
        let bm = bm_lincomp(&s);
        let oracle = oracle_lincomp(&s);
        println!("N={n:>3}: bm c={} in {} ops, oracle c={}", bm.complexity, bm.field_ops, oracle.complexity);
        assert!(bm.same_answer(&oracle));
    }
    Ok(())
}
