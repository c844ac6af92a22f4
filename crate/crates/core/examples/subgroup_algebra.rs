//! Exact and floating intersections of closed subgroups of the real line.
use qginv::numerics::rational::rat;
use qginv::subgroups::{intersect, RealSubgroup, UnitSymbol};

fn main() -> qginv::Result<()> {
    let u = UnitSymbol::pi_over_log(0.5)?;
    let a = RealSubgroup::exact(rat(2, 3), u)?;
    let b = RealSubgroup::exact(rat(3, 4), u)?;
    println!("{} ∩ {} = {}", a.symbolic("q"), b.symbolic("q"), intersect(&a, &b).symbolic("q"));

    let c = RealSubgroup::cyclic(std::f64::consts::PI)?;
    let d = RealSubgroup::cyclic(1.5 * std::f64::consts::PI)?;
    let e = RealSubgroup::cyclic(std::f64::consts::SQRT_2 * std::f64::consts::PI)?;
    println!("piZ ∩ 1.5piZ = {}", intersect(&c, &d));
    let meet = intersect(&c, &e);
    println!("piZ ∩ sqrt2 piZ = {meet} (resolution limited: {})", meet.is_resolution_limited());
    println!("R ∩ piZ = {}", intersect(&RealSubgroup::FullLine, &c));
    Ok(())
}
