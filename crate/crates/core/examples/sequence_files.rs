//! Reading sequence files, rendering sequences and polynomials, and parsing
//! them back.

use lincomp::format::{parse_poly, parse_sequence, read_sequence_file, render_poly, render_sequence};
use lincomp::{make_field, solve_auto, Poly};

pub fn main() -> lincomp::Result<()> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data");
    let s = read_sequence_file(format!("{dir}/gf9_period8.seq"))?;
    print!("{}", render_sequence(&s));
    let r = solve_auto(&s);
    let text = render_poly(&r.min_poly);
    println!("c={} m = {text}", r.complexity);
    assert_eq!(parse_poly(s.field(), &text)?, r.min_poly);

    let again = parse_sequence(&render_sequence(&s))?;
    assert_eq!(again.elements(), s.elements());

    match parse_sequence("p=7 m=1\n1 2 7\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }

    let f7 = make_field(7, 1, None)?;
    let p = parse_poly(&f7, "1 + 6*x + 2*x^3")?;
    assert_eq!(p, Poly::from_ints(&f7, &[1, 6, 0, 2]));
    println!("parsed {}", render_poly(&p));
    Ok(())
}
