//! The determinant route: expand each Q-determinant on the monomial basis and
//! read the Kostka column off its coefficients.
//!
//!     cargo run --example monomial_method -- 4

use kostka::monomial::{monomial_solve, q_determinant_with_stats, DEFAULT_MONOMIAL_MAX_N};
use kostka::SymmetricGroupContext;

fn main() -> kostka::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(Ok(3), |a| a.parse()).expect("n must be an integer");
    let ctx = SymmetricGroupContext::new(n)?;
    for mu in ctx.partitions() {
        let (q, stats) = q_determinant_with_stats(&ctx, mu)?;
        println!("Q({mu}) = {q}");
        println!("    {} products, {} minors", stats.multiplications, stats.minors);
    }
    let solved = monomial_solve(&ctx, DEFAULT_MONOMIAL_MAX_N)?;
    println!("\nkostka:\n{}", solved.kostka.render_pretty(None));
    println!("characters:\n{}", solved.characters.render_pretty(Some(ctx.class_sizes())));
    Ok(())
}
