//! Median wall-clock time of both routes to the character table.
//!
//!     cargo run --release --example bench -- 6 9

use kostka::bench::run_bench;
use kostka::monomial::DEFAULT_MONOMIAL_MAX_N;

fn main() -> kostka::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("arguments must be integers"));
    let n = args.next().unwrap_or(5);
    let reps = args.next().unwrap_or(5);
    let report = run_bench(n, reps, DEFAULT_MONOMIAL_MAX_N)?;
    print!("{}", report.render_text());
    println!("{}", report.to_json());
    Ok(())
}
