//! Kostka matrix, its inverse and the character table from one triangular
//! solve.
//!
//!     cargo run --example triangular_solve -- 6

use kostka::frobenius::frobenius_table;
use kostka::triangular::{bracket, triangular_solve};
use kostka::SymmetricGroupContext;

fn main() -> kostka::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(Ok(5), |a| a.parse()).expect("n must be an integer");
    let ctx = SymmetricGroupContext::new(n)?;
    let phi = frobenius_table(&ctx)?;
    let solved = triangular_solve(&phi, &ctx)?;

    println!("kostka:\n{}", solved.kostka.render_pretty(None));
    println!("inverse kostka:\n{}", solved.inverse_kostka.render_pretty(None));
    println!("characters:\n{}", solved.characters.render_pretty(Some(ctx.class_sizes())));

    let last = ctx.k() - 1;
    let norm = bracket(solved.characters.row(last), solved.characters.row(last), &ctx)?;
    println!("<chi^{0} | chi^{0}> = {norm}", ctx.partitions()[last]);
    Ok(())
}
