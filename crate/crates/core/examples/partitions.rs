//! Partitions of n in canonical order with their class sizes.
//!
//!     cargo run --example partitions -- 6

use kostka::partitions::class_size;
use kostka::SymmetricGroupContext;

fn main() -> kostka::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(Ok(5), |a| a.parse()).expect("n must be an integer");
    let ctx = SymmetricGroupContext::new(n)?;
    println!("S_{n}: {} classes, order {}", ctx.k(), ctx.group_order());
    for lam in ctx.partitions() {
        let ct = lam.cycle_type();
        println!("{:<14} multiplicities {:?}  class size {}", lam.to_string(), ct.multiplicities(), class_size(&ct));
    }
    Ok(())
}
