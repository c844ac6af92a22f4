//! Fusion of words in α, β with classical and quantum dimensions.
use qginv::fusionring::{fuse, qdim_word, sequence_diagnostics, RepParams, Word};

fn main() -> qginv::Result<()> {
    let p = RepParams::new(2, 0.5)?;
    for (x, y) in [("a", "b"), ("ab", "ab"), ("aba", "bab"), ("ba", "ab")] {
        let (x, y): (Word, Word) = (x.parse()?, y.parse()?);
        let s = fuse(&x, &y);
        let check = s.weighted(|w| qdim_word(w, &p)) - qdim_word(&x, &p) * qdim_word(&y, &p);
        println!("{x} ⊗ {y} = {s}   (qdim defect {check:.1e})");
    }
    let d = sequence_diagnostics(0.5, 40)?;
    println!("power sequence at q=0.5: t_40 = {:.9}, limit {}", d.last(), d.limit);
    Ok(())
}
