//! Sequences of the form a, -a with period 2n: the complexity equals that of
//! a period-n image, and the minimal polynomial follows by scaling.

use lincomp::format::render_poly;
use lincomp::reduction::{antisymmetric_image, lift_antisymmetric};
use lincomp::{make_field, oracle_lincomp, PeriodicSequence};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn main() -> lincomp::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for (p, n) in [(7u64, 5usize), (13, 7), (7, 11)] {
        let f = make_field(p, 1, None)?;
        let half = PeriodicSequence::random(&f, n, &mut rng);
        let mut vals: Vec<_> = half.elements().to_vec();
        vals.extend(half.elements().iter().map(|&e| f.from_int(-(f.coords(e)[0] as i64))));
        let s = PeriodicSequence::new(&f, vals)?;

        let img = antisymmetric_image(&s)?;
        let lifted = lift_antisymmetric(&oracle_lincomp(&img.image), img.b)?;
        let direct = oracle_lincomp(&s);
        println!(
            "{f} N={}: b={:?} c={} m = {}",
            s.len(),
            f.coords(img.b),
            lifted.complexity,
            render_poly(&lifted.min_poly)
        );
        assert!(lifted.same_answer(&direct));
    }
    Ok(())
}
