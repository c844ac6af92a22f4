//! Invariants of the free unitary quantum group `U_F⁺` computed from the
//! spectrum of `F*F`.
//!
//! Everything here goes through the spectrum of `ρ = λ·(F*F)ᵀ`, normalized so
//! that `Tr ρ = Tr ρ⁻¹`. A spectrum is either exact (powers of one base with
//! rational exponents), in which case all subgroup computations are exact, or
//! a list of floats, in which case commensurability of logarithms is decided
//! by rational recognition up to a denominator bound.

use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::numerics::rational::{format_rational, int, parse_rational, rat, rational_gcd, to_f64};
use crate::numerics::{hermitian_eigenvalues_with, HermitianMatrix, Rational, Tolerances};
use crate::subgroups::{cyclic_intersection_exact, intersect_with, ExactGenerator, RealSubgroup, UnitSymbol};
use crate::table::{Invariant, InvariantTable, Side};

/// Spectral values within this distance of 1 (or logs within this of 0) are trivial.
pub const KAC_THRESHOLD: f64 = 1e-10;
/// Relative tolerance for `Σρ = Σρ⁻¹`.
pub const BALANCE_TOL: f64 = 1e-9;
/// `F` is rejected when `min eig(F*F) <= SINGULAR_RATIO · max eig(F*F)`.
pub const SINGULAR_RATIO: f64 = 1e-10;

/// An invertible `N × N` complex matrix, `N ≥ 2`, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct FMatrix {
    n: usize,
    entries: Vec<Complex64>,
}

impl FMatrix {
    pub fn new(n: usize, entries: Vec<Complex64>) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!("F must be at least 2x2, got n = {n}")));
        }
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, got: entries.len() });
        }
        if entries.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Domain("F has non-finite entries".into()));
        }
        Ok(Self { n, entries })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::diagonal(&vec![1.0; n])
    }

    pub fn diagonal(d: &[f64]) -> Result<Self> {
        let n = d.len();
        let mut e = vec![Complex64::zero(); n * n];
        for (i, &v) in d.iter().enumerate() {
            e[i * n + i] = Complex64::new(v, 0.0);
        }
        Self::new(n, e)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn scaled(&self, s: Complex64) -> Self {
        Self { n: self.n, entries: self.entries.iter().map(|z| z * s).collect() }
    }

    /// `U·F` for a square matrix `u` of the same size.
    pub fn left_mul(&self, u: &[Complex64]) -> Result<Self> {
        let n = self.n;
        if u.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, got: u.len() });
        }
        let mut out = vec![Complex64::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                out[i * n + j] = (0..n).map(|k| u[i * n + k] * self.entries[k * n + j]).sum();
            }
        }
        Self::new(n, out)
    }

    /// `F*F`.
    pub fn gram(&self) -> Result<HermitianMatrix> {
        let n = self.n;
        let mut g = vec![Complex64::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                g[i * n + j] = (0..n).map(|k| self.entries[k * n + i].conj() * self.entries[k * n + j]).sum();
            }
        }
        HermitianMatrix::new(n, g)
    }

    /// Parses `{"n": 3, "entries": [[re, im], ...]}`; bare numbers count as real entries.
    pub fn from_json(v: &Value) -> Result<Self> {
        let n = v
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::parse("n", "missing or not a nonnegative integer"))? as usize;
        let arr = v
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::parse("entries", "missing or not an array"))?;
        let entries = arr
            .iter()
            .enumerate()
            .map(|(k, e)| {
                let bad = || Error::parse(format!("entries[{k}]"), "expected [re, im] or a number");
                match e {
                    Value::Number(x) => Ok(Complex64::new(x.as_f64().ok_or_else(bad)?, 0.0)),
                    Value::Array(p) if p.len() == 2 => {
                        Ok(Complex64::new(p[0].as_f64().ok_or_else(bad)?, p[1].as_f64().ok_or_else(bad)?))
                    }
                    _ => Err(bad()),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, entries)
    }
}

/// Spectrum of `ρ`, either exact powers of a base or plain floats.
#[derive(Debug, Clone, PartialEq)]
pub enum RhoSpectrum {
    /// `ρ_i = base^{e_i}`.
    Exact { base: f64, exponents: Vec<Rational>, balance_checked: bool },
    Float { values: Vec<f64> },
}

fn check_balance(values: &[f64]) -> Result<()> {
    let sum: f64 = values.iter().sum();
    let inv: f64 = values.iter().map(|v| 1.0 / v).sum();
    if (sum - inv).abs() > BALANCE_TOL * sum.max(inv) {
        return Err(Error::Unbalanced { sum, inverse_sum: inv });
    }
    Ok(())
}

impl RhoSpectrum {
    /// Exact spectrum, rejected unless `Σ base^e = Σ base^{-e}`.
    pub fn exact(base: f64, exponents: Vec<Rational>) -> Result<Self> {
        let s = Self::exact_unchecked(base, exponents)?;
        check_balance(&s.values())?;
        let RhoSpectrum::Exact { base, exponents, .. } = s else { unreachable!() };
        Ok(RhoSpectrum::Exact { base, exponents, balance_checked: true })
    }

    /// Exact spectrum without the balance check, for exploratory use.
    pub fn exact_unchecked(base: f64, exponents: Vec<Rational>) -> Result<Self> {
        if !(base > 0.0 && base < 1.0) {
            return Err(Error::Domain(format!("spectrum base must lie in (0,1), got {base}")));
        }
        if exponents.is_empty() {
            return Err(Error::Domain("spectrum must be nonempty".into()));
        }
        Ok(RhoSpectrum::Exact { base, exponents, balance_checked: false })
    }

    pub fn float(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Domain("spectrum must be nonempty".into()));
        }
        if let Some(v) = values.iter().find(|v| !(**v > 0.0) || !v.is_finite()) {
            return Err(Error::Domain(format!("spectral values must be positive, got {v}")));
        }
        check_balance(&values)?;
        Ok(RhoSpectrum::Float { values })
    }

    /// Parses `{"base": 0.5, "exponents": ["2", "7/2", -8]}`.
    pub fn from_json(v: &Value) -> Result<Self> {
        let base = v.get("base").and_then(Value::as_f64).ok_or_else(|| Error::parse("base", "missing or not a number"))?;
        let arr = v
            .get("exponents")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::parse("exponents", "missing or not an array"))?;
        let exps = arr
            .iter()
            .enumerate()
            .map(|(k, e)| match e {
                Value::String(s) => parse_rational(s),
                Value::Number(x) => parse_rational(&x.to_string()),
                _ => Err(Error::parse(format!("exponents[{k}]"), "expected a rational string or number")),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::exact(base, exps)
    }

    pub fn values(&self) -> Vec<f64> {
        match self {
            RhoSpectrum::Exact { base, exponents, .. } => exponents.iter().map(|e| base.powf(to_f64(e))).collect(),
            RhoSpectrum::Float { values } => values.clone(),
        }
    }

    pub fn to_float(&self) -> Result<Self> {
        Self::float(self.values())
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, RhoSpectrum::Exact { .. })
    }

    pub fn is_kac(&self) -> bool {
        match self {
            RhoSpectrum::Exact { exponents, .. } => exponents.iter().all(Zero::is_zero),
            RhoSpectrum::Float { values } => values.iter().all(|v| (v - 1.0).abs() < KAC_THRESHOLD),
        }
    }

    fn unit(&self) -> Option<ExactGenerator> {
        match self {
            RhoSpectrum::Exact { base, .. } => {
                Some(ExactGenerator::new(int(2), UnitSymbol::PiOverLogBase { base: *base }))
            }
            RhoSpectrum::Float { .. } => None,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            RhoSpectrum::Exact { base, exponents, balance_checked } => json!({
                "mode": "exact",
                "base": base,
                "exponents": exponents.iter().map(format_rational).collect::<Vec<_>>(),
                "balance_checked": balance_checked,
                "values": self.values(),
            }),
            RhoSpectrum::Float { values } => json!({ "mode": "float", "values": values }),
        }
    }
}

/// `λ = sqrt(Tr (F*F)⁻¹ / Tr F*F)` from the eigenvalues of `F*F`.
pub fn normalization(eigs: &[f64]) -> f64 {
    let tr: f64 = eigs.iter().sum();
    let tr_inv: f64 = eigs.iter().map(|x| 1.0 / x).sum();
    (tr_inv / tr).sqrt()
}

/// Ascending eigenvalues of `F*F`, rejecting numerically singular `F`.
pub fn gram_eigenvalues(f: &FMatrix, tol: &Tolerances) -> Result<Vec<f64>> {
    let eigs = hermitian_eigenvalues_with(&f.gram()?, tol.eig_threshold)?;
    let (lo, hi) = (eigs[0], eigs[eigs.len() - 1]);
    if !(hi > 0.0) || lo <= SINGULAR_RATIO * hi {
        return Err(Error::Singular { ratio: if hi > 0.0 { lo / hi } else { 0.0 } });
    }
    Ok(eigs)
}

/// Float spectrum `λ·eig(F*F)`.
pub fn rho_spectrum_from_f(f: &FMatrix, tol: &Tolerances) -> Result<RhoSpectrum> {
    let eigs = gram_eigenvalues(f, tol)?;
    let lambda = normalization(&eigs);
    RhoSpectrum::float(eigs.iter().map(|x| lambda * x).collect())
}

fn nonzero_logs(values: impl IntoIterator<Item = f64>) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::new();
    for v in values {
        let l = v.ln().abs();
        if l >= KAC_THRESHOLD && !out.iter().any(|o| (o - l).abs() <= 1e-14 * l) {
            out.push(l);
        }
    }
    out
}

/// `T_τ = T_τInn = T_τAInn`: the intersection of `(2π/log Λ)ℤ` over the
/// nontrivial ratios `Λ = ρ_i/ρ_j`; the full line in the Kac case.
pub fn t_tau_family(s: &RhoSpectrum, tol: &Tolerances) -> Result<RealSubgroup> {
    if s.is_kac() {
        return Ok(RealSubgroup::FullLine);
    }
    match s {
        RhoSpectrum::Exact { exponents, .. } => {
            let mut diffs = Vec::new();
            for (i, a) in exponents.iter().enumerate() {
                for b in &exponents[i + 1..] {
                    let d = a - b;
                    if !d.is_zero() {
                        diffs.push(d);
                    }
                }
            }
            if diffs.is_empty() {
                return Ok(RealSubgroup::FullLine);
            }
            cyclic_intersection_exact(&s.unit().expect("exact unit"), &diffs)
        }
        RhoSpectrum::Float { values } => {
            let logs = nonzero_logs(values.iter().flat_map(|a| values.iter().map(move |b| a / b)));
            let gens = logs.iter().map(|l| RealSubgroup::cyclic(2.0 * PI / l)).collect::<Result<Vec<_>>>()?;
            Ok(crate::subgroups::intersect_all(&gens, tol))
        }
    }
}

/// `Mod` of the dual: the intersection of `(π/log x)ℤ` over `x ∈ Sp(ρ) ∖ {1}`.
pub fn mod_dual(s: &RhoSpectrum, tol: &Tolerances) -> Result<RealSubgroup> {
    if s.is_kac() {
        return Ok(RealSubgroup::FullLine);
    }
    match s {
        RhoSpectrum::Exact { exponents, .. } => {
            let ks: Vec<Rational> = exponents.iter().filter(|e| !e.is_zero()).map(|e| e * int(2)).collect();
            cyclic_intersection_exact(&s.unit().expect("exact unit"), &ks)
        }
        RhoSpectrum::Float { values } => {
            let logs = nonzero_logs(values.iter().copied());
            let gens = logs.iter().map(|l| RealSubgroup::cyclic(PI / l)).collect::<Result<Vec<_>>>()?;
            Ok(crate::subgroups::intersect_all(&gens, tol))
        }
    }
}

/// Type of the von Neumann algebra `L∞(U_F⁺)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FactorType {
    TypeII1,
    TypeIIIMu { mu: f64 },
    /// Only certified up to the recognition bound when `resolution_limited`.
    TypeIII1 { resolution_limited: bool },
}

impl FactorType {
    pub fn label(&self) -> &'static str {
        match self {
            FactorType::TypeII1 => "II_1",
            FactorType::TypeIIIMu { .. } => "III_mu",
            FactorType::TypeIII1 { .. } => "III_1",
        }
    }

    pub fn to_json(&self) -> Value {
        match *self {
            FactorType::TypeII1 => json!({ "kind": "II_1" }),
            FactorType::TypeIIIMu { mu } => json!({ "kind": "III_mu", "mu": mu }),
            FactorType::TypeIII1 { resolution_limited } => {
                json!({ "kind": "III_1", "resolution_limited": resolution_limited })
            }
        }
    }
}

/// Factor type and Connes' `T` invariant, read off from the multiplicative
/// group generated by the products `ρ_i ρ_j`.
pub fn factor_classification(s: &RhoSpectrum, tol: &Tolerances) -> Result<(FactorType, RealSubgroup)> {
    if s.is_kac() {
        return Ok((FactorType::TypeII1, RealSubgroup::FullLine));
    }
    match s {
        RhoSpectrum::Exact { base, exponents, .. } => {
            let mut sums = Vec::new();
            for (i, a) in exponents.iter().enumerate() {
                for b in &exponents[i..] {
                    sums.push(a + b);
                }
            }
            if sums.iter().all(Zero::is_zero) {
                return Err(Error::Internal("non-Kac exact spectrum with all pairwise sums zero".into()));
            }
            let g = rational_gcd(&sums)?;
            let mu = base.powf(to_f64(&g));
            let t = RealSubgroup::exact(int(2) / &g, UnitSymbol::PiOverLogBase { base: *base })?;
            Ok((FactorType::TypeIIIMu { mu }, t))
        }
        RhoSpectrum::Float { values } => {
            let mut logs = Vec::new();
            for (i, a) in values.iter().enumerate() {
                for b in &values[i..] {
                    let l = (a * b).ln();
                    if l.abs() >= KAC_THRESHOLD {
                        logs.push(l);
                    }
                }
            }
            let limited = (FactorType::TypeIII1 { resolution_limited: true }, RealSubgroup::Zero { resolution_limited: true });
            let Some(&v0) = logs.first() else {
                return Ok((FactorType::TypeII1, RealSubgroup::FullLine));
            };
            let mut ratios = Vec::with_capacity(logs.len());
            for l in &logs {
                match tol.recognize(l / v0) {
                    Some(r) => ratios.push(r),
                    None => return Ok(limited),
                }
            }
            let g = v0.abs() * to_f64(&rational_gcd(&ratios)?);
            Ok((FactorType::TypeIIIMu { mu: (-g).exp() }, RealSubgroup::cyclic(2.0 * PI / g)?))
        }
    }
}

/// Consistency of factor type with `Mod` of the dual: `II_1` forces the full
/// line, `III_μ` forces generator `π/|log μ|` or `2π/|log μ|`, `III_1` forces `{0}`.
pub fn mod_type_consistent(s: &RhoSpectrum, tol: &Tolerances) -> Result<bool> {
    let (ft, _) = factor_classification(s, tol)?;
    let m = mod_dual(s, tol)?;
    Ok(match ft {
        FactorType::TypeII1 => m == RealSubgroup::FullLine,
        FactorType::TypeIII1 { .. } => matches!(m, RealSubgroup::Zero { .. }),
        FactorType::TypeIIIMu { mu } => {
            let l = mu.ln().abs();
            match m.generator() {
                Some(g) => [PI / l, 2.0 * PI / l].iter().any(|c| (g - c).abs() <= 1e-9 * c),
                None => false,
            }
        }
    })
}

/// Constants of the i.c.c. criteria for the `n`-fold iterated coproduct.
#[derive(Debug, Clone, PartialEq)]
pub struct IccReport {
    pub n: u32,
    /// `max ‖λF*F − 1‖, ‖(λF*F)⁻¹ − 1‖`.
    pub c: f64,
    /// `‖ρ_{α²β}‖`.
    pub rho_norm: f64,
    /// `‖ρ_{α²β}² − 1‖`.
    pub rho_sq_dev: f64,
    pub d_n: f64,
    pub d_alpha_beta: f64,
    pub d_beta_alpha: f64,
    /// The sharp inequality on `D_n`.
    pub exact_condition_holds: bool,
    /// The cruder sufficient condition expressed through `c` alone.
    pub sufficient_condition_holds: bool,
}

impl IccReport {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "c": self.c,
            "rho_norm": self.rho_norm,
            "rho_sq_dev": self.rho_sq_dev,
            "D_n": self.d_n,
            "D_alpha_beta": self.d_alpha_beta,
            "D_beta_alpha": self.d_beta_alpha,
            "exact_condition_holds": self.exact_condition_holds,
            "sufficient_condition_holds": self.sufficient_condition_holds,
        })
    }
}

/// `D_{x,n} = ‖ρ² − 1‖ (‖ρ‖^{2(n+1)} − 1)/(‖ρ‖² − 1)`, zero when `‖ρ‖` is 1.
pub fn d_constant(norm: f64, sq_dev: f64, n: u32) -> f64 {
    if norm - 1.0 < KAC_THRESHOLD {
        return 0.0;
    }
    let n2 = norm * norm;
    sq_dev * (n2.powi(n as i32 + 1) - 1.0) / (n2 - 1.0)
}

/// The i.c.c. constants for `F`.
pub fn icc_constants(f: &FMatrix, n: u32, tol: &Tolerances) -> Result<IccReport> {
    icc_from_gram_spectrum(&gram_eigenvalues(f, tol)?, n)
}

/// The i.c.c. constants from the eigenvalues of `F*F`.
pub fn icc_from_gram_spectrum(x: &[f64], n: u32) -> Result<IccReport> {
    if n < 1 {
        return Err(Error::Domain("i.c.c. level n must be at least 1".into()));
    }
    if x.is_empty() || x.iter().any(|v| !(*v > 0.0)) {
        return Err(Error::Domain("F*F spectrum must be positive".into()));
    }
    let lambda = normalization(x);
    let c = x
        .iter()
        .map(|xi| {
            let r = lambda * xi;
            (r - 1.0).abs().max((1.0 / r - 1.0).abs())
        })
        .fold(0.0, f64::max);
    let xmax = x.iter().copied().fold(f64::MIN, f64::max);
    let xmin = x.iter().copied().fold(f64::MAX, f64::min);

    let rho_norm = lambda * xmax * xmax / xmin;
    let mut rho_sq_dev: f64 = 0.0;
    for xi in x {
        for xj in x {
            for xk in x {
                let v = lambda * lambda * xi * xi * xj * xj / (xk * xk);
                rho_sq_dev = rho_sq_dev.max((v - 1.0).abs());
            }
        }
    }
    let d_n = d_constant(rho_norm, rho_sq_dev, n);

    let mixed = |outer: bool| {
        let mut dev: f64 = 0.0;
        for xi in x {
            for xj in x {
                let r = if outer { xi / xj } else { xj / xi };
                dev = dev.max((r * r - 1.0).abs());
            }
        }
        d_constant(xmax / xmin, dev, n)
    };

    let nf = n as f64;
    let exact_condition_holds =
        d_n < 1.0 - 1.0 / SQRT_2 && 2.0 * (7.0 - 4.0 * d_n) * d_n / (2.0 * (1.0 - d_n).powi(2) - 1.0) < 1.0 / (nf + 1.0).sqrt();
    let sufficient_condition_holds =
        nf.sqrt() * (nf + 1.0) * c * (2.0 + c) * (1.0 + c).powf(4.0 + 6.0 * nf) < 1.0 / 72.0;

    Ok(IccReport {
        n,
        c,
        rho_norm,
        rho_sq_dev,
        d_n,
        d_alpha_beta: mixed(true),
        d_beta_alpha: mixed(false),
        exact_condition_holds,
        sufficient_condition_holds,
    })
}

/// Positive root in `(0.01, 0.99)` of `Σ μ^{e_i} = Σ μ^{-e_i}` by bisection to 1e-13.
pub fn balance_root(exponents: &[Rational]) -> Result<f64> {
    let e: Vec<f64> = exponents.iter().map(to_f64).collect();
    let f = |m: f64| e.iter().map(|x| m.powf(*x) - m.powf(-x)).sum::<f64>();
    let (mut lo, mut hi) = (0.01, 0.99);
    let (flo, fhi) = (f(lo), f(hi));
    if flo.signum() == fhi.signum() || flo == 0.0 || fhi == 0.0 {
        return Err(Error::Domain("balance equation has no sign change on (0.01, 0.99)".into()));
    }
    while hi - lo > 1e-13 {
        let mid = 0.5 * (lo + hi);
        if f(mid).signum() == flo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Exponents `(n, 3n+1, −(3n+2))` of `F*F` for the integer example family.
/// The balance equation has a root in `(0,1)` only for `n ≥ 2`.
pub fn integer_family(n: i64) -> Vec<Rational> {
    vec![int(n), int(3 * n + 1), int(-(3 * n + 2))]
}

/// Exponents `(n+1/2, 3n+5/2, −(3n+7/2))` of `F*F` for the half-integer family.
/// The balance equation has a root in `(0,1)` only for `n ≥ 1`.
pub fn half_integer_family(n: i64) -> Vec<Rational> {
    vec![rat(2 * n + 1, 2), rat(6 * n + 5, 2), rat(-(6 * n + 7), 2)]
}

/// Spectrum `{κ, κ, κx}` with `κ = sqrt((2 + 1/x)/(2 + x))`, balanced for any `x > 0`.
pub fn two_level_family(x: f64) -> Result<RhoSpectrum> {
    let k = ((2.0 + 1.0 / x) / (2.0 + x)).sqrt();
    RhoSpectrum::float(vec![k, k, k * x])
}

/// Everything computable from one spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct UfpReport {
    pub spectrum: RhoSpectrum,
    pub kac: bool,
    pub table: InvariantTable,
    pub factor: FactorType,
    pub connes_t: RealSubgroup,
    pub mod_type_consistent: bool,
    pub icc: Option<IccReport>,
}

impl UfpReport {
    pub fn t_tau(&self) -> &RealSubgroup {
        self.table.get(Side::Group, Invariant::TTau).expect("T_tau present")
    }

    pub fn mod_dual(&self) -> &RealSubgroup {
        self.table.get(Side::Dual, Invariant::Mod).expect("Mod_dual present")
    }

    pub fn to_json(&self, symbol: &str) -> Value {
        let mut v = json!({
            "spectrum": self.spectrum.to_json(),
            "kac": self.kac,
            "invariants": self.table.to_json(),
            "symbolic": self.table.symbolic_json(symbol),
            "factor_type": self.factor.to_json(),
            "connes_T": self.connes_t.to_json(),
            "mod_type_consistent": self.mod_type_consistent,
        });
        if let Some(icc) = &self.icc {
            v["icc"] = icc.to_json();
        }
        v
    }
}

/// Builds the full report for a spectrum.
pub fn analyze_spectrum(s: &RhoSpectrum, tol: &Tolerances) -> Result<UfpReport> {
    let tau = t_tau_family(s, tol)?;
    let m = mod_dual(s, tol)?;
    let (factor, connes_t) = factor_classification(s, tol)?;
    let mut table = InvariantTable::new();
    table.insert(Side::Group, Invariant::TTau, tau.clone());
    table.insert(Side::Group, Invariant::TTauInn, tau.clone());
    table.insert(Side::Group, Invariant::TTauAInn, tau.clone());
    table.insert(Side::Group, Invariant::TSigma, intersect_with(&tau, &m, tol));
    table.insert(Side::Group, Invariant::Mod, RealSubgroup::FullLine);
    table.insert(Side::Dual, Invariant::Mod, m);
    Ok(UfpReport {
        spectrum: s.clone(),
        kac: s.is_kac(),
        table,
        factor,
        connes_t,
        mod_type_consistent: mod_type_consistent(s, tol)?,
        icc: None,
    })
}

/// Report for a matrix `F`, with i.c.c. constants when `n_icc` is given.
pub fn analyze_matrix(f: &FMatrix, n_icc: Option<u32>, tol: &Tolerances) -> Result<UfpReport> {
    let s = rho_spectrum_from_f(f, tol)?;
    let mut r = analyze_spectrum(&s, tol)?;
    if let Some(n) = n_icc {
        r.icc = Some(icc_constants(f, n, tol)?);
    }
    Ok(r)
}
