//! Exact rationals, q-numbers, a small Hermitian eigensolver and rational
//! recognition of floating-point ratios.

pub mod hermitian;
pub mod qnumber;
pub mod rational;
pub mod recognize;

pub use hermitian::{hermitian_eigenvalues, hermitian_eigenvalues_with, HermitianMatrix};
pub use qnumber::q_number;
pub use rational::{format_rational, parse_rational, rational_gcd, Rational, RationalMatrix};
pub use recognize::recognize_rational;

/// Numerical knobs shared by every float-mode computation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Relative tolerance for accepting a continued-fraction convergent.
    pub rel_tol: f64,
    /// Largest denominator accepted when recognizing a ratio as rational.
    pub max_denominator: u64,
    /// Off-diagonal stopping threshold for the eigensolver, relative to `‖M‖_F`.
    pub eig_threshold: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            rel_tol: 1e-11,
            max_denominator: 10_000,
            eig_threshold: hermitian::DEFAULT_EIG_THRESHOLD,
        }
    }
}

impl Tolerances {
    pub fn recognize(&self, x: f64) -> Option<Rational> {
        recognize_rational(x, self.max_denominator, self.rel_tol)
    }
}
