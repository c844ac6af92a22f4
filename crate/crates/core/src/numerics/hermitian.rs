//! Eigenvalues of small dense Hermitian matrices by cyclic complex Jacobi
//! rotations.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default relative off-diagonal threshold for [`hermitian_eigenvalues`].
pub const DEFAULT_EIG_THRESHOLD: f64 = 1e-13;
/// Sweeps allowed before the solver gives up.
pub const MAX_SWEEPS: usize = 100;
/// Largest dimension the solver accepts.
pub const MAX_DIM: usize = 64;

/// Square complex matrix with `a[i][j] == conj(a[j][i])`.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl HermitianMatrix {
    /// Validates Hermitian symmetry to within `1e-12` (relative to the largest
    /// entry) and stores the symmetrized matrix.
    pub fn new(n: usize, entries: Vec<Complex64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("matrix dimension must be at least 1".into()));
        }
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, got: entries.len() });
        }
        let scale = entries.iter().map(|z| z.norm()).fold(1.0_f64, f64::max);
        let mut data = entries;
        for i in 0..n {
            for j in i..n {
                let a = data[i * n + j];
                let b = data[j * n + i].conj();
                let deviation = (a - b).norm();
                if deviation > 1e-12 * scale {
                    return Err(Error::NotHermitian { row: i, col: j, deviation });
                }
                let avg = (a + b) * 0.5;
                data[i * n + j] = avg;
                data[j * n + i] = avg.conj();
            }
            data[i * n + i].im = 0.0;
        }
        Ok(Self { n, data })
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        let mut data = vec![Complex64::new(0.0, 0.0); n * n];
        for (i, &d) in diag.iter().enumerate() {
            data[i * n + i] = Complex64::new(d, 0.0);
        }
        Self { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i).re).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    fn off_diagonal_norm(&self) -> f64 {
        let n = self.n;
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += self.data[i * n + j].norm_sqr();
                }
            }
        }
        s.sqrt()
    }

    /// `U^H · self · U` for a square unitary (or any) matrix `u` given row-major.
    pub fn conjugate_by(&self, u: &[Complex64]) -> Result<Self> {
        let n = self.n;
        if u.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, got: u.len() });
        }
        let mut tmp = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for j in 0..n {
                let mut s = Complex64::new(0.0, 0.0);
                for k in 0..n {
                    s += self.data[i * n + k] * u[k * n + j];
                }
                tmp[i * n + j] = s;
            }
        }
        let mut out = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for j in 0..n {
                let mut s = Complex64::new(0.0, 0.0);
                for k in 0..n {
                    s += u[k * n + i].conj() * tmp[k * n + j];
                }
                out[i * n + j] = s;
            }
        }
        // round-off can break exact symmetry; re-symmetrize without the check
        for i in 0..n {
            for j in i..n {
                let avg = (out[i * n + j] + out[j * n + i].conj()) * 0.5;
                out[i * n + j] = avg;
                out[j * n + i] = avg.conj();
            }
            out[i * n + i].im = 0.0;
        }
        Ok(Self { n, data: out })
    }
}

/// Ascending eigenvalues of `m` with the default threshold.
pub fn hermitian_eigenvalues(m: &HermitianMatrix) -> Result<Vec<f64>> {
    hermitian_eigenvalues_with(m, DEFAULT_EIG_THRESHOLD)
}

/// Ascending eigenvalues of `m`.
///
/// Sweeps stop once the off-diagonal Frobenius norm is at most
/// `threshold · ‖m‖_F`; more than [`MAX_SWEEPS`] sweeps is an error.
pub fn hermitian_eigenvalues_with(m: &HermitianMatrix, threshold: f64) -> Result<Vec<f64>> {
    let n = m.n;
    if n > MAX_DIM {
        return Err(Error::Domain(format!("eigensolver supports N <= {MAX_DIM}, got {n}")));
    }
    let mut a = m.clone();
    let target = threshold * m.frobenius_norm();
    let mut sweeps = 0;
    loop {
        let off = a.off_diagonal_norm();
        if off <= target {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off_norm: off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, p, q);
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a.get(i, i).re).collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}

/// One complex Jacobi rotation annihilating `a[p][q]`.
fn rotate(a: &mut HermitianMatrix, p: usize, q: usize) {
    let n = a.n;
    let apq = a.data[p * n + q];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r;
    let app = a.data[p * n + p].re;
    let aqq = a.data[q * n + q].re;
    let theta = (aqq - app) / (2.0 * r);
    let t = if theta == 0.0 {
        1.0
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    // J = diag(1, conj(phase)) · [[c, s], [-s, c]] restricted to (p, q)
    let jpp = Complex64::new(c, 0.0);
    let jpq = Complex64::new(s, 0.0);
    let jqp = -phase.conj() * s;
    let jqq = phase.conj() * c;

    for k in 0..n {
        let akp = a.data[k * n + p];
        let akq = a.data[k * n + q];
        a.data[k * n + p] = akp * jpp + akq * jqp;
        a.data[k * n + q] = akp * jpq + akq * jqq;
    }
    for k in 0..n {
        let apk = a.data[p * n + k];
        let aqk = a.data[q * n + k];
        a.data[p * n + k] = jpp.conj() * apk + jqp.conj() * aqk;
        a.data[q * n + k] = jpq.conj() * apk + jqq.conj() * aqk;
    }
    a.data[p * n + q] = Complex64::new(0.0, 0.0);
    a.data[q * n + p] = Complex64::new(0.0, 0.0);
    a.data[p * n + p].im = 0.0;
    a.data[q * n + q].im = 0.0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(n: usize, v: &[f64]) -> HermitianMatrix {
        HermitianMatrix::new(n, v.iter().map(|&x| Complex64::new(x, 0.0)).collect()).unwrap()
    }

    #[test]
    fn diagonal_inputs() {
        assert_eq!(hermitian_eigenvalues(&real(2, &[1., 0., 0., 4.])).unwrap(), vec![1.0, 4.0]);
        let e = hermitian_eigenvalues(&HermitianMatrix::from_real_diagonal(&[4., 1., 1.])).unwrap();
        assert_eq!(e, vec![1.0, 1.0, 4.0]);
    }

    #[test]
    fn two_by_two_symmetric() {
        // roots of (2-x)^2 - 1
        let e = hermitian_eigenvalues(&real(2, &[2., 1., 1., 2.])).unwrap();
        assert!((e[0] - 1.0).abs() < 1e-14 && (e[1] - 3.0).abs() < 1e-14);
    }

    #[test]
    fn complex_two_by_two() {
        // [[1, i], [-i, 1]] has eigenvalues 0 and 2
        let m = HermitianMatrix::new(
            2,
            vec![
                Complex64::new(1., 0.),
                Complex64::new(0., 1.),
                Complex64::new(0., -1.),
                Complex64::new(1., 0.),
            ],
        )
        .unwrap();
        let e = hermitian_eigenvalues(&m).unwrap();
        assert!(e[0].abs() < 1e-14 && (e[1] - 2.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_non_hermitian_and_bad_shape() {
        assert!(matches!(
            HermitianMatrix::new(2, vec![Complex64::new(1., 0.), Complex64::new(1., 0.), Complex64::new(0., 0.), Complex64::new(1., 0.)]),
            Err(Error::NotHermitian { .. })
        ));
        assert!(matches!(HermitianMatrix::new(2, vec![]), Err(Error::DimensionMismatch { .. })));
        assert!(HermitianMatrix::new(0, vec![]).is_err());
    }

    #[test]
    fn trace_is_preserved() {
        let n = 6;
        let mut v = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let (lo, hi) = (i.min(j) as f64, i.max(j) as f64);
                let im = if i < j { 0.3 * lo } else if i > j { -0.3 * lo } else { 0.0 };
                v.push(Complex64::new(1.0 / (1.0 + lo + hi), im));
            }
        }
        let m = HermitianMatrix::new(n, v).unwrap();
        let e = hermitian_eigenvalues(&m).unwrap();
        let s: f64 = e.iter().sum();
        assert!((s - m.trace()).abs() < 1e-9 * m.frobenius_norm());
        assert!(e.windows(2).all(|w| w[0] <= w[1]));
    }
}
