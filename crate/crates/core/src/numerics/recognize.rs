use num_bigint::BigInt;

use super::rational::Rational;

/// First continued-fraction convergent `p/q` of `x` with `q <= max_denominator`
/// and `|x - p/q| <= rel_tol * max(1, |x|)`.
pub fn recognize_rational(x: f64, max_denominator: u64, rel_tol: f64) -> Option<Rational> {
    if !x.is_finite() || max_denominator == 0 || !(rel_tol > 0.0) {
        return None;
    }
    let tol = rel_tol * x.abs().max(1.0);
    let (mut p0, mut q0): (i128, i128) = (1, 0);
    let (mut p1, mut q1): (i128, i128) = (x.floor() as i128, 1);
    let mut rem = x - x.floor();
    loop {
        if q1 as u128 > max_denominator as u128 {
            return None;
        }
        if (x - p1 as f64 / q1 as f64).abs() <= tol {
            return Some(Rational::new(BigInt::from(p1), BigInt::from(q1)));
        }
        if rem <= 0.0 {
            return None;
        }
        let inv = 1.0 / rem;
        if !inv.is_finite() || inv > 1e18 {
            return None;
        }
        let a = inv.floor();
        rem = inv - a;
        let a = a as i128;
        let p2 = a.checked_mul(p1)?.checked_add(p0)?;
        let q2 = a.checked_mul(q1)?.checked_add(q0)?;
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
    }
}
