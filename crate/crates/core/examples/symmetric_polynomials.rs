//! Arithmetic on the monomial basis and the raw expansions behind it.
//!
//!     cargo run --example symmetric_polynomials

use kostka::symfunc::{
    alternant, complete_homogeneous, expand_to_raw, monomial_count, monomial_symmetric, raw_mul, sym_mul,
    vandermonde,
};
use kostka::Partition;

fn main() -> kostka::Result<()> {
    let h2 = complete_homogeneous(3, 2);
    let h1 = complete_homogeneous(3, 1);
    println!("h2 = {h2}");
    println!("h2 * h1 = {}", sym_mul(&h2, &h1)?);

    let m21 = monomial_symmetric(3, &"2+1".parse::<Partition>()?);
    println!("m[2+1] expands to {}", expand_to_raw(&m21));

    println!("vandermonde(3) = {}", vandermonde(3));
    let schur = raw_mul(&expand_to_raw(&h1), &vandermonde(3))?;
    println!("h1 * vandermonde = alternant(3,1,0): {}", schur == alternant(3, &[3, 1, 0])?);

    for (n, r) in [(3, 3), (5, 5), (8, 5), (12, 6)] {
        println!("h_{r} in {n} variables has {} monomials", monomial_count(n, r));
    }
    Ok(())
}
