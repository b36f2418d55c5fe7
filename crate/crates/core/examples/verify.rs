//! Full verification report for one n, including the raw-polynomial identity
//! for every class.
//!
//!     cargo run --example verify -- 5

use kostka::frobenius::frobenius_table;
use kostka::verification::{full_report, VerifyOptions};
use kostka::SymmetricGroupContext;

fn main() -> kostka::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(Ok(4), |a| a.parse()).expect("n must be an integer");
    let ctx = SymmetricGroupContext::new(n)?;
    let phi = frobenius_table(&ctx)?;
    let report = full_report(&ctx, &phi, VerifyOptions::default());
    print!("{report}");
    if !report.all_passed() {
        std::process::exit(2);
    }
    Ok(())
}
