//! Linear complexity from the generating function: c = N - deg gcd(f, 1 - x^N).

use lincomp::format::render_poly;
use lincomp::{make_field, oracle_lincomp, verify_recurrence, PeriodicSequence};

pub fn main() -> lincomp::Result<()> {
    let f7 = make_field(7, 1, None)?;
    let cases: [&[i64]; 4] = [
        &[0; 10],
        &[3; 6],
        &[1, 6, 1, 6],
        &[1, 2, 3, 4, 0, 1, 5, 2, 0, 1, 1, 3, 0, 6, 1, 2, 5, 6, 3, 3, 1],
    ];
    for vals in cases {
        let s = PeriodicSequence::from_ints(&f7, vals)?;
        let r = oracle_lincomp(&s);
        println!("N={:>2} c={:>2} m = {}", s.len(), r.complexity, render_poly(&r.min_poly));
        assert!(verify_recurrence(&s, &r.min_poly)?);
        // rotating the period leaves the complexity alone
        assert_eq!(oracle_lincomp(&s.rotated(1)).complexity, r.complexity);
    }
    Ok(())
}
