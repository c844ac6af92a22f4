//! Exact rationals and the small amount of exact linear algebra the root
//! system code needs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Shorthand for `num / den` as a [`Rational`].
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Renders `p/q`, or just `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"`, `"p/q"` or a plain decimal such as `"-3.5"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = |why: &str| Error::parse(s, why);
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad("numerator is not an integer"))?;
        let d: BigInt = d.trim().parse().map_err(|_| bad("denominator is not an integer"))?;
        if d.is_zero() {
            return Err(bad("zero denominator"));
        }
        return Ok(Rational::new(n, d));
    }
    if let Ok(n) = t.parse::<BigInt>() {
        return Ok(Rational::from_integer(n));
    }
    // terminating decimal
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (whole, frac) = body.split_once('.').ok_or_else(|| bad("not a rational number"))?;
    if whole.is_empty() && frac.is_empty()
        || !whole.chars().all(|c| c.is_ascii_digit())
        || !frac.chars().all(|c| c.is_ascii_digit())
    {
        return Err(bad("not a rational number"));
    }
    let digits: BigInt = format!("{whole}{frac}").parse().map_err(|_| bad("not a rational number"))?;
    let den = num_traits::pow(BigInt::from(10), frac.len());
    let r = Rational::new(digits, den);
    Ok(if neg { -r } else { r })
}

/// Positive generator of the additive group generated by `values`.
///
/// For reduced fractions `n_i/d_i` this is `gcd(n_i) / lcm(d_i)`. Zero entries
/// are ignored; an input with no nonzero entry is rejected.
pub fn rational_gcd(values: &[Rational]) -> Result<Rational> {
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    let mut any = false;
    for v in values.iter().filter(|v| !v.is_zero()) {
        any = true;
        num = num.gcd(v.numer());
        den = den.lcm(v.denom());
    }
    if !any {
        return Err(Error::Domain("gcd of an all-zero list is undefined".into()));
    }
    Ok(Rational::new(num, den))
}

/// Dense square matrix over the rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![Rational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_integers(n: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), n * n);
        Self { n, data: entries.iter().map(|&e| int(e)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Inverse by Gauss-Jordan elimination with exact arithmetic.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or_else(|| Error::Internal(format!("rational matrix is singular at column {col}")))?;
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                    inv.data.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a.get(col, col).recip();
            for j in 0..n {
                a.data[col * n + j] *= &p;
                inv.data[col * n + j] *= &p;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let da = &f * a.get(col, j);
                    let di = &f * inv.get(col, j);
                    a.data[r * n + j] -= da;
                    inv.data[r * n + j] -= di;
                }
            }
        }
        Ok(inv)
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let v = self.get(i, j);
                if i == j {
                    v.is_one()
                } else {
                    v.is_zero()
                }
            })
        })
    }
}

/// `true` when every entry is an integer.
pub fn is_integral(values: &[Rational]) -> bool {
    values.iter().all(|v| v.is_integer())
}
