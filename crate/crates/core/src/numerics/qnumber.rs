use crate::error::{Error, Result};

/// The q-number `[n]_q = (q^{-n} - q^n) / (q^{-1} - q)`.
///
/// At `q = 1` this is the limit value `n`.
pub fn q_number(n: u32, q: f64) -> Result<f64> {
    if !(q > 0.0 && q <= 1.0) {
        return Err(Error::Domain(format!("q-number needs 0 < q <= 1, got q = {q}")));
    }
    if q == 1.0 {
        return Ok(n as f64);
    }
    let n = n as i32;
    Ok((q.powi(-n) - q.powi(n)) / (1.0 / q - q))
}
