//! Tabulated invariants of quantum `E(2)` and of the three families of
//! quantum `az+b` groups.

use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::numerics::rational::int;
use crate::subgroups::{RealSubgroup, UnitSymbol};
use crate::table::{Invariant, InvariantTable, Side};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KnownCase {
    /// Quantum `E(2)` with `0 < q < 1`.
    Eq2 { q: f64 },
    /// `az+b` with `q = exp(2πi/N)`, `N` even and at least 6.
    AzbRootOfUnity { n: u32 },
    /// `az+b` with real `0 < q < 1`.
    AzbReal { q: f64 },
    /// `az+b` with complex `q = exp(ρ)`, `Re ρ < 0`.
    AzbComplex,
}

/// CLI spelling of a case, before its parameter is attached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseName {
    Eq2,
    Azb1,
    Azb2,
    Azb3,
}

impl FromStr for CaseName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "eq2" => Ok(CaseName::Eq2),
            "azb1" => Ok(CaseName::Azb1),
            "azb2" => Ok(CaseName::Azb2),
            "azb3" => Ok(CaseName::Azb3),
            _ => Err(Error::parse(s, "expected one of eq2, azb1, azb2, azb3")),
        }
    }
}

impl CaseName {
    pub fn with_params(self, q: f64, n: u32) -> KnownCase {
        match self {
            CaseName::Eq2 => KnownCase::Eq2 { q },
            CaseName::Azb1 => KnownCase::AzbRootOfUnity { n },
            CaseName::Azb2 => KnownCase::AzbReal { q },
            CaseName::Azb3 => KnownCase::AzbComplex,
        }
    }
}

impl KnownCase {
    pub fn name(&self) -> &'static str {
        match self {
            KnownCase::Eq2 { .. } => "eq2",
            KnownCase::AzbRootOfUnity { .. } => "azb1",
            KnownCase::AzbReal { .. } => "azb2",
            KnownCase::AzbComplex => "azb3",
        }
    }

    /// Plain-language origin of the tabulated values.
    pub fn note(&self) -> &'static str {
        match self {
            KnownCase::Eq2 { .. } => {
                "quantum E(2): the Haar weight is tracial on the group side and the modular element of the dual is a power of q"
            }
            KnownCase::AzbRootOfUnity { .. } => {
                "az+b at a root of unity: scaling group acts by phases of infinite order, so only t = 0 acts trivially"
            }
            KnownCase::AzbReal { .. } => {
                "az+b with real q: the scaling and modular groups act on the generators through q^{2it}"
            }
            KnownCase::AzbComplex => {
                "az+b with complex q: the phase Im(rho) is incommensurable with the modulus, leaving only t = 0"
            }
        }
    }

    fn q(&self) -> Result<Option<f64>> {
        match *self {
            KnownCase::Eq2 { q } | KnownCase::AzbReal { q } => {
                if q > 0.0 && q < 1.0 {
                    Ok(Some(q))
                } else {
                    Err(Error::Domain(format!("{} needs 0 < q < 1, got {q}", self.name())))
                }
            }
            KnownCase::AzbRootOfUnity { n } => {
                if n >= 6 && n % 2 == 0 {
                    Ok(None)
                } else {
                    Err(Error::Domain(format!("azb1 needs an even N >= 6, got {n}")))
                }
            }
            KnownCase::AzbComplex => Ok(None),
        }
    }
}

/// Invariant table covering both the group and its dual.
pub fn known_invariants(c: &KnownCase) -> Result<InvariantTable> {
    use Invariant::*;
    let q = c.q()?;
    let gen = match q {
        Some(q) => Some(RealSubgroup::exact(int(1), UnitSymbol::pi_over_log(q)?)?),
        None => None,
    };
    let full = RealSubgroup::FullLine;
    let mut t = InvariantTable::new();
    for side in [Side::Group, Side::Dual] {
        for inv in [TTauInn, TTauAInn, TSigmaInn, TSigmaAInn] {
            t.insert(side, inv, full.clone());
        }
    }
    match c {
        KnownCase::Eq2 { .. } => {
            let g = gen.expect("eq2 has q");
            for inv in [TTau, TTauInn, TTauAInn, TSigma] {
                t.insert(Side::Group, inv, g.clone());
            }
            t.insert(Side::Group, Mod, full);
            for inv in [TTau, TSigma, Mod] {
                t.insert(Side::Dual, inv, g.clone());
            }
        }
        KnownCase::AzbReal { .. } => {
            let g = gen.expect("azb2 has q");
            for side in [Side::Group, Side::Dual] {
                for inv in [TTau, TSigma, Mod] {
                    t.insert(side, inv, g.clone());
                }
            }
        }
        KnownCase::AzbRootOfUnity { .. } | KnownCase::AzbComplex => {
            for side in [Side::Group, Side::Dual] {
                for inv in [TTau, TSigma, Mod] {
                    t.insert(side, inv, RealSubgroup::zero());
                }
            }
        }
    }
    Ok(t)
}

/// Report body: case, parameter, note and both tables.
pub fn known_report(c: &KnownCase) -> Result<Value> {
    let t = known_invariants(c)?;
    let mut v = json!({
        "case": c.name(),
        "note": c.note(),
        "invariants": t.to_json(),
        "symbolic": t.symbolic_json("q"),
    });
    match *c {
        KnownCase::Eq2 { q } | KnownCase::AzbReal { q } => v["q"] = json!(q),
        KnownCase::AzbRootOfUnity { n } => v["N"] = json!(n),
        KnownCase::AzbComplex => {}
    }
    Ok(v)
}
