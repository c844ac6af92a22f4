//! Cartan data, pairing vectors and Υ for every simple type up to rank 8.
use qginv::rootsystems::{build_datum, upsilon, SimpleType};

fn main() -> qginv::Result<()> {
    println!("{:<6} {:>3}  pairing", "type", "Υ");
    for t in SimpleType::catalogue(8) {
        let d = build_datum(&[t])?;
        println!("{:<6} {:>3}  {:?}", t.to_string(), upsilon(&d)?, d.pairing());
    }
    Ok(())
}
