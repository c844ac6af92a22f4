//! Closed subgroups of the additive group of real numbers.
//!
//! Every invariant in this crate is one of three things: the whole line,
//! the trivial subgroup `{0}`, or a cyclic group `gℤ` with `g > 0`. Cyclic
//! generators can carry an exact form `coefficient × unit`, where the unit is
//! usually `π/|log b|` for some base `b`; intersections of exact generators
//! sharing a unit are decided with rational arithmetic, everything else falls
//! back to continued-fraction recognition of the generator ratio.

use std::f64::consts::PI;
use std::fmt;

use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::numerics::rational::{format_rational, rational_gcd, to_f64};
use crate::numerics::{Rational, Tolerances};

/// Symbolic unit multiplying an exact rational coefficient.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum UnitSymbol {
    /// `π / |log base|`.
    PiOverLogBase { base: f64 },
    /// The number one.
    Raw,
}

impl UnitSymbol {
    pub fn pi_over_log(base: f64) -> Result<Self> {
        if !(base > 0.0) || base == 1.0 || !base.is_finite() {
            return Err(Error::Domain(format!("unit base must be positive and != 1, got {base}")));
        }
        Ok(UnitSymbol::PiOverLogBase { base })
    }

    pub fn value(&self) -> f64 {
        match *self {
            UnitSymbol::PiOverLogBase { base } => PI / base.ln().abs(),
            UnitSymbol::Raw => 1.0,
        }
    }

    /// Units are interchangeable when `|log base|` agrees to 1e-12 relative,
    /// so `b` and `1/b` count as the same unit.
    pub fn same_as(&self, other: &Self) -> bool {
        match (self, other) {
            (UnitSymbol::Raw, UnitSymbol::Raw) => true,
            (UnitSymbol::PiOverLogBase { base: a }, UnitSymbol::PiOverLogBase { base: b }) => {
                let (la, lb) = (a.ln().abs(), b.ln().abs());
                (la - lb).abs() <= 1e-12 * la.max(lb)
            }
            _ => false,
        }
    }

    fn to_json(self) -> Value {
        match self {
            UnitSymbol::PiOverLogBase { base } => json!({ "tag": "pi_over_log", "base": base }),
            UnitSymbol::Raw => json!({ "tag": "raw" }),
        }
    }
}

/// `coefficient × unit`, with a positive coefficient once stored in a subgroup.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactGenerator {
    pub coefficient: Rational,
    pub unit: UnitSymbol,
}

impl ExactGenerator {
    pub fn new(coefficient: Rational, unit: UnitSymbol) -> Self {
        Self { coefficient, unit }
    }

    pub fn value(&self) -> f64 {
        to_f64(&self.coefficient) * self.unit.value()
    }

    /// Renders e.g. `2*pi/(5*log(mu))` with `symbol` naming the base.
    pub fn symbolic(&self, symbol: &str) -> String {
        let c = &self.coefficient;
        match self.unit {
            UnitSymbol::Raw => format_rational(c),
            UnitSymbol::PiOverLogBase { .. } => {
                let num = c.numer().abs();
                let den = c.denom();
                let top = if num == 1.into() { "pi".to_string() } else { format!("{num}*pi") };
                if *den == 1.into() {
                    format!("{top}/log({symbol})")
                } else {
                    format!("{top}/({den}*log({symbol}))")
                }
            }
        }
    }
}

/// A closed subgroup of `(ℝ, +)`.
#[derive(Debug, Clone, PartialEq)]
pub enum RealSubgroup {
    FullLine,
    /// `{0}`. `resolution_limited` marks a result that is only `{0}` up to
    /// the denominator bound of float recognition.
    Zero { resolution_limited: bool },
    /// `generator·ℤ`, generator positive.
    Cyclic { generator: f64, exact: Option<ExactGenerator> },
}

impl RealSubgroup {
    pub fn zero() -> Self {
        RealSubgroup::Zero { resolution_limited: false }
    }

    /// `|generator|·ℤ` without an exact form.
    pub fn cyclic(generator: f64) -> Result<Self> {
        if generator == 0.0 || !generator.is_finite() {
            return Err(Error::Domain(format!("cyclic generator must be finite and nonzero, got {generator}")));
        }
        Ok(RealSubgroup::Cyclic { generator: generator.abs(), exact: None })
    }

    /// `|coefficient|·unit·ℤ`.
    pub fn exact(coefficient: Rational, unit: UnitSymbol) -> Result<Self> {
        if coefficient.is_zero() {
            return Err(Error::Domain("cyclic generator coefficient must be nonzero".into()));
        }
        let g = ExactGenerator::new(coefficient.abs(), unit);
        Ok(RealSubgroup::Cyclic { generator: g.value(), exact: Some(g) })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            RealSubgroup::FullLine => "full",
            RealSubgroup::Zero { .. } => "zero",
            RealSubgroup::Cyclic { .. } => "cyclic",
        }
    }

    pub fn generator(&self) -> Option<f64> {
        match self {
            RealSubgroup::Cyclic { generator, .. } => Some(*generator),
            _ => None,
        }
    }

    pub fn exact_form(&self) -> Option<&ExactGenerator> {
        match self {
            RealSubgroup::Cyclic { exact, .. } => exact.as_ref(),
            _ => None,
        }
    }

    pub fn is_resolution_limited(&self) -> bool {
        matches!(self, RealSubgroup::Zero { resolution_limited: true })
    }

    /// Same kind and generators within `rel` relative; exact forms are not compared.
    pub fn approx_eq(&self, other: &Self, rel: f64) -> bool {
        match (self, other) {
            (RealSubgroup::FullLine, RealSubgroup::FullLine) => true,
            (RealSubgroup::Zero { .. }, RealSubgroup::Zero { .. }) => true,
            (RealSubgroup::Cyclic { generator: a, .. }, RealSubgroup::Cyclic { generator: b, .. }) => {
                (a - b).abs() <= rel * a.abs().max(b.abs())
            }
            _ => false,
        }
    }

    /// Membership of `t` up to an absolute distance `tol`.
    pub fn contains(&self, t: f64, tol: f64) -> bool {
        match self {
            RealSubgroup::FullLine => true,
            RealSubgroup::Zero { .. } => t.abs() <= tol,
            RealSubgroup::Cyclic { generator, .. } => {
                let k = (t / generator).round();
                (t - k * generator).abs() <= tol
            }
        }
    }

    /// Symbolic rendering: `R`, `{0}`, an exact generator times `Z`, or a
    /// decimal generator times `Z`.
    pub fn symbolic(&self, symbol: &str) -> String {
        match self {
            RealSubgroup::FullLine => "R".into(),
            RealSubgroup::Zero { .. } => "{0}".into(),
            RealSubgroup::Cyclic { exact: Some(e), .. } => format!("({})Z", e.symbolic(symbol)),
            RealSubgroup::Cyclic { generator, exact: None } => format!("({})Z", crate::cli::render::format_g12(*generator)),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut m = serde_json::Map::new();
        m.insert("kind".into(), json!(self.kind()));
        m.insert("resolution_limited".into(), json!(self.is_resolution_limited()));
        if let RealSubgroup::Cyclic { generator, exact } = self {
            m.insert("generator".into(), json!(generator));
            if let Some(e) = exact {
                m.insert(
                    "exact".into(),
                    json!({ "coefficient": format_rational(&e.coefficient), "unit": e.unit.to_json() }),
                );
            }
        }
        Value::Object(m)
    }
}

impl fmt::Display for RealSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbolic("q"))
    }
}

/// Intersection with default tolerances.
pub fn intersect(a: &RealSubgroup, b: &RealSubgroup) -> RealSubgroup {
    intersect_with(a, b, &Tolerances::default())
}

/// Intersection of two closed subgroups.
///
/// Exact generators over a shared unit intersect exactly; otherwise the ratio
/// of generators is passed through rational recognition and an unrecognized
/// ratio yields a resolution-limited `{0}`.
pub fn intersect_with(a: &RealSubgroup, b: &RealSubgroup, tol: &Tolerances) -> RealSubgroup {
    use RealSubgroup::*;
    match (a, b) {
        (FullLine, x) | (x, FullLine) => x.clone(),
        (Zero { resolution_limited: ra }, Zero { resolution_limited: rb }) => {
            Zero { resolution_limited: *ra && *rb }
        }
        (z @ Zero { .. }, _) | (_, z @ Zero { .. }) => z.clone(),
        (Cyclic { generator: ga, exact: ea }, Cyclic { generator: gb, exact: eb }) => {
            if let (Some(ea), Some(eb)) = (ea, eb) {
                if ea.unit.same_as(&eb.unit) {
                    // lcm of the coefficients: ca·q where ca/cb = p/q in lowest terms
                    let ratio = &ea.coefficient / &eb.coefficient;
                    let coef = &ea.coefficient * Rational::from_integer(ratio.denom().clone());
                    let g = ExactGenerator::new(coef, ea.unit);
                    return Cyclic { generator: g.value(), exact: Some(g) };
                }
            }
            // ratio taken >= 1 so the tolerance is relative to the ratio itself
            let (hi, lo) = if ga >= gb { (*ga, *gb) } else { (*gb, *ga) };
            match tol.recognize(hi / lo) {
                Some(r) if !r.is_zero() => Cyclic { generator: hi * to_f64(&Rational::from_integer(r.denom().clone())), exact: None },
                _ => Zero { resolution_limited: true },
            }
        }
    }
}

/// Intersection of a whole list, starting from the full line.
pub fn intersect_all<'a>(items: impl IntoIterator<Item = &'a RealSubgroup>, tol: &Tolerances) -> RealSubgroup {
    items.into_iter().fold(RealSubgroup::FullLine, |acc, g| intersect_with(&acc, g, tol))
}

/// `⋂ (unit / m_i)ℤ = (unit / gcd(m_i))ℤ` for nonzero rational multipliers.
pub fn cyclic_intersection_exact(unit: &ExactGenerator, multipliers: &[Rational]) -> Result<RealSubgroup> {
    if multipliers.is_empty() {
        return Err(Error::Domain("cyclic intersection needs at least one multiplier".into()));
    }
    if multipliers.iter().any(|m| m.is_zero()) {
        return Err(Error::Domain("cyclic intersection multipliers must be nonzero".into()));
    }
    let abs: Vec<Rational> = multipliers.iter().map(|m| m.abs()).collect();
    let g = rational_gcd(&abs)?;
    RealSubgroup::exact(&unit.coefficient / g, unit.unit)
}
