//! Compound characters from cycle distributions, with one worked entry.
//!
//!     cargo run --example frobenius_table

use kostka::frobenius::{enumerate_distributions, frobenius_character, frobenius_table};
use kostka::{Partition, SymmetricGroupContext};

fn main() -> kostka::Result<()> {
    let lam: Partition = "3+2".parse()?;
    let class: Partition = "2+1+1+1".parse()?;
    let sols = enumerate_distributions(&lam, &class.cycle_type())?;
    println!("distributions of class {class} into the blocks of {lam}:");
    for s in &sols {
        // (cycle length, block, count)
        println!("  {:?}", s.nonzero());
    }
    println!("phi^{lam}({class}) = {}\n", frobenius_character(&lam, &class.cycle_type())?);

    let ctx = SymmetricGroupContext::new(5)?;
    let table = frobenius_table(&ctx)?;
    print!("{}", table.render_pretty(Some(ctx.class_sizes())));
    Ok(())
}
