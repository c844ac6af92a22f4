//! Tabulated invariants of quantum E(2) and the az+b groups.
use qginv::knowntables::{known_invariants, KnownCase};
use qginv::numerics::Tolerances;

fn main() -> qginv::Result<()> {
    let tol = Tolerances::default();
    for c in [KnownCase::Eq2 { q: 0.5 }, KnownCase::AzbRootOfUnity { n: 6 }, KnownCase::AzbReal { q: 0.5 }, KnownCase::AzbComplex] {
        let t = known_invariants(&c)?;
        println!("{}: {}", c.name(), c.note());
        for (key, g) in t.iter() {
            println!("  {:<18} {}", key.name(), g.symbolic("q"));
        }
        println!("  sigma law holds: {}", t.satisfies_sigma_law(&tol));
    }
    Ok(())
}
