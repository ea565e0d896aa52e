//! Arithmetic in GF(7) and GF(3^2) with counted operations, primitive
//! elements and roots of unity.

use lincomp::{make_field, Arith};

pub fn main() -> lincomp::Result<()> {
    let f7 = make_field(7, 1, None)?;
    let ar = Arith::new(&f7);
    let (a, b) = (f7.from_int(3), f7.from_int(5));
    println!("{f7}: 3 + 5 = {:?}, 3 * 5 = {:?}", f7.coords(ar.add(a, b)), f7.coords(ar.mul(a, b)));
    println!("{f7}: 3^-1 = {:?}, 3^13 = {:?}", f7.coords(ar.inv(a)?), f7.coords(ar.pow(a, 13)?));
    println!("operations so far: {}", ar.ops());

    let g = f7.primitive_element();
    println!("primitive element of {f7}: {:?}", f7.coords(g));
    let cube_roots: Vec<_> = f7.uth_roots_of_unity(3)?.into_iter().map(|x| f7.coords(x)).collect();
    println!("cube roots of unity: {cube_roots:?}");

    let f9 = make_field(3, 2, None)?;
    println!("{f9} modulus (low to high): {:?}", f9.modulus());
    let g9 = f9.primitive_element();
    let ar9 = Arith::new(&f9);
    let powers: Vec<_> = (0..8).map(|k| f9.coords(ar9.pow(g9, k).unwrap())).collect();
    println!("powers of {:?}: {powers:?}", f9.coords(g9));
    // x = g^2 has order 4; its unique 5th root
    let x = ar9.pow(g9, 2)?;
    let r = f9.nth_root_coprime(x, 5)?;
    println!("5th root of {:?} is {:?}", f9.coords(x), f9.coords(r));
    assert_eq!(ar9.pow(r, 5)?, x);
    Ok(())
}
