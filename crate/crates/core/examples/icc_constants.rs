//! i.c.c. constants for a few small F as the coproduct level grows.
use qginv::freeunitary::{icc_constants, FMatrix};
use qginv::numerics::Tolerances;

fn main() -> qginv::Result<()> {
    let tol = Tolerances::default();
    let cases = [
        ("identity", FMatrix::identity(3)?),
        ("diag(1, 1.0001, 0.9999)", FMatrix::diagonal(&[1.0, 1.0001, 0.9999])?),
        ("diag(1, 1, 2)", FMatrix::diagonal(&[1.0, 1.0, 2.0])?),
    ];
    for (name, f) in &cases {
        println!("{name}");
        for n in [1, 2, 4, 8] {
            let r = icc_constants(f, n, &tol)?;
            println!(
                "  n={n:<2} c={:.3e} D_n={:.3e} exact={} sufficient={}",
                r.c, r.d_n, r.exact_condition_holds, r.sufficient_condition_holds
            );
        }
    }
    Ok(())
}
