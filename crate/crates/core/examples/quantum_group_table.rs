//! Invariant table of a q-deformed product group, printed symbolically.
use qginv::rootsystems::{build_datum, invariant_table_gq, parse_type, upsilon};

fn main() -> qginv::Result<()> {
    let types = std::env::args().nth(1).unwrap_or_else(|| "A2xB3xG2".to_string());
    let q = 0.5;
    let d = build_datum(&parse_type(&types)?)?;
    println!("{} at q = {q}, upsilon = {}", d.label(), upsilon(&d)?);
    for (key, g) in invariant_table_gq(&d, q)?.iter() {
        println!("  {:<18} {}", key.name(), g.symbolic("q"));
    }
    Ok(())
}
