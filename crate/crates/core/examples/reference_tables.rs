//! Recomputes the reference tables against their embedded expected values.
//!
//! cargo run --release --example reference_tables [--slow]

use parthom::report::OutputFormat;
use parthom::tables::{TableId, TableOptions, TableRunner};

fn main() -> parthom::Result<()> {
    let slow = std::env::args().any(|a| a == "--slow");
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    let runner = TableRunner::new(TableOptions {
        slow,
        threads,
        ..TableOptions::default()
    });
    let ids = [
        TableId::Psl216,
        TableId::FiveHom,
        TableId::HalfAffine,
        TableId::Gens,
        TableId::FourHom,
    ];
    let mut all = true;
    for id in ids {
        let report = runner.run(id)?;
        print!("{}", report.render(OutputFormat::Text));
        println!();
        all &= report.pass;
    }
    println!(
        "{}",
        if all {
            "all tables match"
        } else {
            "mismatches found"
        }
    );
    Ok(())
}
