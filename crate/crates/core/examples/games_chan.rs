//! The generalized Games-Chan fold for periods p^h, level by level.

use lincomp::format::render_factored;
use lincomp::ggc::ggc_trace;
use lincomp::{make_field, oracle_lincomp, FieldElement, PeriodicSequence};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn main() -> lincomp::Result<()> {
    let f7 = make_field(7, 1, None)?;
    let s = PeriodicSequence::from_ints(&f7, &[1, 2, 3, 4, 0, 1, 5])?;
    let (r, states) = ggc_trace(&s)?;
    for st in &states {
        let t: Vec<_> = st.tuple.iter().map(|&e| f7.coords(e)[0]).collect();
        println!("level {} c={:>2} tuple {:?}", st.level, st.complexity, t);
    }
    println!("c={} m = {}", r.complexity, render_factored(&[(r.min_poly.clone(), FieldElement::ONE)]));

    let f2 = make_field(2, 1, None)?;
    let f3 = make_field(3, 1, None)?;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (f, n) in [(&f2, 64), (&f3, 81), (&f7, 343)] {
        let s = PeriodicSequence::random(f, n, &mut rng);
        let r = lincomp::ggc_lincomp(&s)?;
        let p = f.characteristic() as usize;
        println!("{f} N={n}: c={} with {} ops (2p^2 N = {})", r.complexity, r.field_ops, 2 * p * p * n);
        assert!(r.same_answer(&oracle_lincomp(&s)));
    }
    Ok(())
}
