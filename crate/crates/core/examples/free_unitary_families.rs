//! Invariants of U_F⁺ for the integer, half-integer and two-level families.
use qginv::freeunitary::{analyze_spectrum, balance_root, half_integer_family, integer_family, two_level_family, RhoSpectrum};
use qginv::numerics::Tolerances;

fn show(label: &str, s: &RhoSpectrum, tol: &Tolerances) -> qginv::Result<()> {
    let r = analyze_spectrum(s, tol)?;
    println!("{label}");
    println!("  factor     {}", r.factor.label());
    println!("  T_tau      {}", r.t_tau().symbolic("mu"));
    println!("  Mod_dual   {}", r.mod_dual().symbolic("mu"));
    println!("  Connes T   {}", r.connes_t.symbolic("mu"));
    Ok(())
}

fn main() -> qginv::Result<()> {
    let tol = Tolerances::default();
    for n in 2..=4 {
        let e = integer_family(n);
        let mu = balance_root(&e)?;
        show(&format!("integer family n={n}, mu={mu:.12}"), &RhoSpectrum::exact(mu, e)?, &tol)?;
    }
    let e = half_integer_family(1);
    let mu = balance_root(&e)?;
    show(&format!("half-integer family n=1, mu={mu:.12}"), &RhoSpectrum::exact(mu, e)?, &tol)?;
    show("two-level family x=pi/2", &two_level_family(std::f64::consts::FRAC_PI_2)?, &tol)?;
    Ok(())
}
