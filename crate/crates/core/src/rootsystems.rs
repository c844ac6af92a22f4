//! Cartan data of simple and semisimple root systems, the pairing of `2ρ`
//! with fundamental weights, and the invariant table of the q-deformed group.
//!
//! Simple roots follow Bourbaki numbering. Short roots have squared length 2,
//! so `⟨α_i|α_i⟩ ∈ {2, 4, 6}`, and `a_ij = 2⟨α_i|α_j⟩/⟨α_i|α_i⟩`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::numerics::rational::{int, RationalMatrix};
use crate::numerics::{Rational, Tolerances};
use crate::subgroups::{intersect_with, RealSubgroup, UnitSymbol};
use crate::table::{Invariant, InvariantTable, Side};

/// Largest rank accepted for the classical families.
pub const MAX_CLASSICAL_RANK: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// An irreducible root system, e.g. `B4` or `E7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => (1..=MAX_CLASSICAL_RANK).contains(&rank),
            Family::B => (2..=MAX_CLASSICAL_RANK).contains(&rank),
            Family::C => (3..=MAX_CLASSICAL_RANK).contains(&rank),
            Family::D => (4..=MAX_CLASSICAL_RANK).contains(&rank),
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::InvalidRank { family: family.letter(), rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every type with classical rank up to `max_rank`, plus the exceptional ones.
    pub fn catalogue(max_rank: usize) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for fam in [Family::A, Family::B, Family::C, Family::D] {
            for r in 1..=max_rank {
                if let Ok(t) = SimpleType::new(fam, r) {
                    out.push(t);
                }
            }
        }
        for (fam, r) in [(Family::E, 6), (Family::E, 7), (Family::E, 8), (Family::F, 4), (Family::G, 2)] {
            out.push(SimpleType { family: fam, rank: r });
        }
        out
    }

    /// Squared lengths `⟨α_i|α_i⟩`.
    pub fn lengths(&self) -> Vec<i64> {
        let n = self.rank;
        match self.family {
            Family::A | Family::D | Family::E => vec![2; n],
            Family::B => (1..=n).map(|i| if i < n { 4 } else { 2 }).collect(),
            Family::C => (1..=n).map(|i| if i < n { 2 } else { 4 }).collect(),
            Family::F => vec![4, 4, 2, 2],
            Family::G => vec![2, 6],
        }
    }

    /// Gram matrix `⟨α_i|α_j⟩` of the simple roots, row-major.
    pub fn gram(&self) -> Vec<i64> {
        let n = self.rank;
        let d = self.lengths();
        let mut b = vec![0i64; n * n];
        for i in 0..n {
            b[i * n + i] = d[i];
        }
        let mut bond = |i: usize, j: usize, v: i64| {
            b[(i - 1) * n + (j - 1)] = v;
            b[(j - 1) * n + (i - 1)] = v;
        };
        match self.family {
            Family::A => (1..n).for_each(|i| bond(i, i + 1, -1)),
            Family::B => (1..n).for_each(|i| bond(i, i + 1, -2)),
            Family::C => {
                (1..n - 1).for_each(|i| bond(i, i + 1, -1));
                bond(n - 1, n, -2);
            }
            Family::D => {
                (1..n - 1).for_each(|i| bond(i, i + 1, -1));
                bond(n - 2, n, -1);
            }
            Family::E => {
                for (i, j) in [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)] {
                    if j <= n {
                        bond(i, j, -1);
                    }
                }
            }
            Family::F => {
                bond(1, 2, -2);
                bond(2, 3, -2);
                bond(3, 4, -1);
            }
            Family::G => bond(1, 2, -3),
        }
        b
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let mut chars = t.chars();
        let fam = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::parse(t, "expected a family letter A-G"))?;
        let rank: usize = chars.as_str().parse().map_err(|_| Error::parse(t, "expected a rank after the family letter"))?;
        SimpleType::new(fam, rank)
    }
}

/// Parses `"A2xD4xG2"` (case-insensitive, `x` separated).
pub fn parse_type(s: &str) -> Result<Vec<SimpleType>> {
    let parts: Vec<&str> = s.split(['x', 'X']).collect();
    if parts.iter().any(|p| p.trim().is_empty()) {
        return Err(Error::parse(s, "empty component in type string"));
    }
    parts.into_iter().map(str::parse).collect()
}

/// An integral weight in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Weight(v)
    }
}

/// Cartan data of a product of simple types, block-diagonal in the given order.
#[derive(Debug, Clone, PartialEq)]
pub struct RootDatum {
    components: Vec<SimpleType>,
    cartan: Vec<i64>,
    inv_cartan: RationalMatrix,
    lengths: Vec<i64>,
    pairing: Vec<i64>,
}

impl RootDatum {
    pub fn components(&self) -> &[SimpleType] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.lengths.len()
    }

    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i * self.rank() + j]
    }

    pub fn cartan_rows(&self) -> Vec<Vec<i64>> {
        self.cartan.chunks(self.rank()).map(<[i64]>::to_vec).collect()
    }

    pub fn cartan_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_integers(self.rank(), &self.cartan)
    }

    pub fn inv_cartan(&self) -> &RationalMatrix {
        &self.inv_cartan
    }

    pub fn lengths(&self) -> &[i64] {
        &self.lengths
    }

    /// `⟨2ρ|ϖ_i⟩` for each fundamental weight.
    pub fn pairing(&self) -> &[i64] {
        &self.pairing
    }

    /// Index ranges of the simple components.
    pub fn blocks(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.components
            .iter()
            .map(|t| {
                let r = start..start + t.rank();
                start += t.rank();
                r
            })
            .collect()
    }

    pub fn label(&self) -> String {
        self.components.iter().map(ToString::to_string).collect::<Vec<_>>().join("x")
    }

    pub fn to_json(&self) -> Value {
        let inv: Vec<Vec<String>> = (0..self.rank())
            .map(|i| self.inv_cartan.row(i).iter().map(crate::numerics::format_rational).collect())
            .collect();
        json!({
            "type": self.label(),
            "rank": self.rank(),
            "cartan": self.cartan_rows(),
            "inv_cartan": inv,
            "lengths": self.lengths,
            "pairing": self.pairing,
        })
    }
}

/// Builds the block-diagonal Cartan matrix, its exact inverse and the pairing vector.
pub fn build_datum(components: &[SimpleType]) -> Result<RootDatum> {
    if components.is_empty() {
        return Err(Error::Domain("root datum needs at least one component".into()));
    }
    let n: usize = components.iter().map(SimpleType::rank).sum();
    let mut cartan = vec![0i64; n * n];
    let mut lengths = Vec::with_capacity(n);
    let mut off = 0;
    for t in components {
        let r = t.rank();
        let d = t.lengths();
        let b = t.gram();
        for i in 0..r {
            for j in 0..r {
                cartan[(off + i) * n + off + j] = 2 * b[i * r + j] / d[i];
            }
        }
        lengths.extend(d);
        off += r;
    }
    let inv_cartan = RationalMatrix::from_integers(n, &cartan).inverse()?;
    let mut datum = RootDatum { components: components.to_vec(), cartan, inv_cartan, lengths, pairing: Vec::new() };
    datum.pairing = two_rho_pairing(&datum)?;
    Ok(datum)
}

/// `p_i = ⟨α_i|α_i⟩ · Σ_j c_ij`, which must be integral.
pub fn two_rho_pairing(d: &RootDatum) -> Result<Vec<i64>> {
    (0..d.rank())
        .map(|i| {
            let s: Rational = d.inv_cartan.row(i).iter().sum();
            let p = s * int(d.lengths[i]);
            if !p.is_integer() {
                return Err(Error::Internal(format!("pairing entry {i} of {} is not integral", d.label())));
            }
            p.to_integer().to_i64().ok_or_else(|| Error::Internal("pairing entry overflows i64".into()))
        })
        .collect()
}

fn gcd_all(values: impl IntoIterator<Item = i64>) -> i64 {
    values.into_iter().fold(0i64, |g, v| g.gcd(&v))
}

/// Positive generator of `{⟨2ρ|ϖ⟩ : ϖ ∈ P}`, computed as the gcd of the whole
/// pairing vector and, separately, as the gcd of per-component values.
pub fn upsilon(d: &RootDatum) -> Result<i64> {
    let whole = gcd_all(d.pairing.iter().copied());
    let per_component = gcd_all(d.blocks().into_iter().map(|b| gcd_all(d.pairing[b].iter().copied())));
    if whole != per_component {
        return Err(Error::Internal(format!("upsilon mismatch for {}: {whole} vs {per_component}", d.label())));
    }
    Ok(whole)
}

/// Closed-form value of `Υ` for a simple type, independent of the Cartan data.
pub fn upsilon_closed_form(t: SimpleType) -> i64 {
    let n = t.rank();
    match t.family() {
        Family::A | Family::B => {
            if n % 2 == 1 {
                1
            } else {
                2
            }
        }
        Family::C => 2,
        Family::D => {
            if n % 4 < 2 {
                2
            } else {
                1
            }
        }
        Family::E => {
            if n == 7 {
                1
            } else {
                2
            }
        }
        Family::F | Family::G => 2,
    }
}

fn check_len(d: &RootDatum, w: &Weight) -> Result<()> {
    if w.0.len() != d.rank() {
        return Err(Error::DimensionMismatch { expected: d.rank(), got: w.0.len() });
    }
    Ok(())
}

/// `⟨2ρ|μ⟩ = Σ μ_i p_i`.
pub fn weight_pairing(d: &RootDatum, mu: &Weight) -> Result<i64> {
    check_len(d, mu)?;
    Ok(mu.0.iter().zip(&d.pairing).map(|(m, p)| m * p).sum())
}

/// Coordinates of `μ` in the simple-root basis, `None` on a length mismatch.
/// `μ` lies in the root lattice exactly when every coordinate is an integer.
pub fn weight_in_root_lattice(d: &RootDatum, mu: &Weight) -> Option<Vec<Rational>> {
    if mu.0.len() != d.rank() {
        return None;
    }
    let n = d.rank();
    Some(
        (0..n)
            .map(|k| {
                (0..n).fold(Rational::zero(), |acc, i| acc + d.inv_cartan.get(i, k) * Rational::from_integer(BigInt::from(mu.0[i])))
            })
            .collect(),
    )
}

/// Exponents `(⟨2ρ|λ+μ⟩, ⟨2ρ|λ−μ⟩)` governing the modular and scaling phases
/// of a matrix coefficient with left weight `λ` and right weight `μ`.
pub fn tau_sigma_exponents(d: &RootDatum, lwt: &Weight, rwt: &Weight) -> Result<(i64, i64)> {
    check_len(d, lwt)?;
    check_len(d, rwt)?;
    let sum = Weight(lwt.0.iter().zip(&rwt.0).map(|(a, b)| a + b).collect());
    let diff = Weight(lwt.0.iter().zip(&rwt.0).map(|(a, b)| a - b).collect());
    Ok((weight_pairing(d, &sum)?, weight_pairing(d, &diff)?))
}

/// Invariants of the q-deformation of the simply connected group with root
/// datum `d`, for `0 < q < 1`. Cyclic entries are exact multiples of `π/|log q|`.
pub fn invariant_table_gq(d: &RootDatum, q: f64) -> Result<InvariantTable> {
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::Domain(format!("deformation parameter must lie in (0,1), got {q}")));
    }
    let unit = UnitSymbol::pi_over_log(q)?;
    let ups = upsilon(d)?;
    let t_tau = RealSubgroup::exact(int(1), unit)?;
    let inner = RealSubgroup::exact(Rational::new(1.into(), ups.into()), unit)?;
    let t_sigma = intersect_with(&t_tau, &inner, &Tolerances::default());

    let mut t = InvariantTable::new();
    use Invariant::*;
    t.insert(Side::Group, TTau, t_tau.clone());
    t.insert(Side::Group, TTauInn, inner.clone());
    t.insert(Side::Group, TTauAInn, inner.clone());
    t.insert(Side::Group, TSigma, t_sigma);
    t.insert(Side::Group, TSigmaInn, RealSubgroup::FullLine);
    t.insert(Side::Group, TSigmaAInn, RealSubgroup::FullLine);
    t.insert(Side::Group, Mod, RealSubgroup::FullLine);

    // the dual is discrete: every automorphism group in sight is inner
    t.insert(Side::Dual, TTau, t_tau.clone());
    t.insert(Side::Dual, TTauInn, RealSubgroup::FullLine);
    t.insert(Side::Dual, TTauAInn, RealSubgroup::FullLine);
    t.insert(Side::Dual, TSigma, intersect_with(&t_tau, &RealSubgroup::FullLine, &Tolerances::default()));
    t.insert(Side::Dual, TSigmaInn, RealSubgroup::FullLine);
    t.insert(Side::Dual, TSigmaAInn, RealSubgroup::FullLine);
    t.insert(Side::Dual, Mod, inner);
    Ok(t)
}
