//! Writes every table for n to a cache directory as JSON and prints one as
//! CSV. A second run reads the tables back and re-checks them.
//!
//!     cargo run --example export_tables -- 5 /tmp/kostka-tables

use kostka::cli::{compute_table, Config, Method};
use kostka::TableKind;

fn main() -> kostka::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(Ok(4), |a| a.parse()).expect("n must be an integer");
    let dir = args.next().unwrap_or_else(|| std::env::temp_dir().join("kostka-tables").display().to_string());
    let cfg = Config { cache_dir: Some(dir.clone().into()), ..Config::default() };
    for kind in [TableKind::Frobenius, TableKind::Kostka, TableKind::InverseKostka, TableKind::Characters] {
        compute_table(kind, n, Method::Triangular, &cfg)?;
    }
    println!("tables for n = {n} cached in {dir}\n");
    print!("{}", compute_table(TableKind::Characters, n, Method::Triangular, &cfg)?.to_csv()?);
    Ok(())
}
