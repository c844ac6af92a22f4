//! Named collections of invariants for a quantum group and its dual.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::Value;

use crate::numerics::Tolerances;
use crate::subgroups::{intersect_with, RealSubgroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Group,
    Dual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Invariant {
    TTau,
    TTauInn,
    TTauAInn,
    TSigma,
    TSigmaInn,
    TSigmaAInn,
    Mod,
}

impl Invariant {
    pub const ALL: [Invariant; 7] = [
        Invariant::TTau,
        Invariant::TTauInn,
        Invariant::TTauAInn,
        Invariant::TSigma,
        Invariant::TSigmaInn,
        Invariant::TSigmaAInn,
        Invariant::Mod,
    ];

    pub fn base_name(self) -> &'static str {
        match self {
            Invariant::TTau => "T_tau",
            Invariant::TTauInn => "T_tauInn",
            Invariant::TTauAInn => "T_tauAInn",
            Invariant::TSigma => "T_sigma",
            Invariant::TSigmaInn => "T_sigmaInn",
            Invariant::TSigmaAInn => "T_sigmaAInn",
            Invariant::Mod => "Mod",
        }
    }
}

/// Key such as `T_tau` (group side) or `Mod_dual` (dual side).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Key(pub Side, pub Invariant);

impl Key {
    pub fn name(self) -> String {
        match self.0 {
            Side::Group => self.1.base_name().to_string(),
            Side::Dual => format!("{}_dual", self.1.base_name()),
        }
    }

    pub fn parse(s: &str) -> Option<Key> {
        let (side, base) = match s.strip_suffix("_dual") {
            Some(b) => (Side::Dual, b),
            None => (Side::Group, s),
        };
        Invariant::ALL.iter().find(|i| i.base_name() == base).map(|&i| Key(side, i))
    }
}

impl fmt::Display for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Invariant values keyed by side and name. Missing keys are unknown, not trivial.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct InvariantTable {
    entries: BTreeMap<Key, RealSubgroup>,
}

impl InvariantTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, side: Side, inv: Invariant, value: RealSubgroup) {
        self.entries.insert(Key(side, inv), value);
    }

    pub fn get(&self, side: Side, inv: Invariant) -> Option<&RealSubgroup> {
        self.entries.get(&Key(side, inv))
    }

    pub fn get_named(&self, name: &str) -> Option<&RealSubgroup> {
        Key::parse(name).and_then(|k| self.entries.get(&k))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Key, &RealSubgroup)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Checks `T_sigma = T_tau ∩ Mod` of the opposite side, for each side on
    /// which all three entries are present. Returns the names of failing sides.
    pub fn sigma_law_violations(&self, tol: &Tolerances) -> Vec<Side> {
        let mut bad = Vec::new();
        for (side, other) in [(Side::Group, Side::Dual), (Side::Dual, Side::Group)] {
            let (Some(tau), Some(sigma), Some(m)) = (
                self.get(side, Invariant::TTau),
                self.get(side, Invariant::TSigma),
                self.get(other, Invariant::Mod),
            ) else {
                continue;
            };
            let derived = intersect_with(tau, m, tol);
            let ok = match (derived.exact_form(), sigma.exact_form()) {
                (Some(a), Some(b)) => a == b,
                _ => derived.approx_eq(sigma, 1e-12),
            };
            if !ok {
                bad.push(side);
            }
        }
        bad
    }

    pub fn satisfies_sigma_law(&self, tol: &Tolerances) -> bool {
        self.sigma_law_violations(tol).is_empty()
    }

    pub fn to_json(&self) -> Value {
        Value::Object(self.entries.iter().map(|(k, v)| (k.name(), v.to_json())).collect())
    }

    /// Symbolic strings keyed like [`InvariantTable::to_json`].
    pub fn symbolic_json(&self, symbol: &str) -> Value {
        Value::Object(self.entries.iter().map(|(k, v)| (k.name(), Value::String(v.symbolic(symbol)))).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rational::{int, rat};
    use crate::subgroups::UnitSymbol;

    #[test]
    fn key_names_round_trip() {
        for side in [Side::Group, Side::Dual] {
            for inv in Invariant::ALL {
                let k = Key(side, inv);
                assert_eq!(Key::parse(&k.name()), Some(k));
            }
        }
        assert_eq!(Key(Side::Dual, Invariant::Mod).name(), "Mod_dual");
        assert_eq!(Key::parse("nonsense"), None);
    }

    #[test]
    fn sigma_law_detects_mismatch() {
        let u = UnitSymbol::pi_over_log(0.5).unwrap();
        let mut t = InvariantTable::new();
        t.insert(Side::Group, Invariant::TTau, RealSubgroup::exact(int(1), u).unwrap());
        t.insert(Side::Dual, Invariant::Mod, RealSubgroup::exact(rat(1, 2), u).unwrap());
        t.insert(Side::Group, Invariant::TSigma, RealSubgroup::exact(int(1), u).unwrap());
        let tol = Tolerances::default();
        assert!(t.satisfies_sigma_law(&tol));
        t.insert(Side::Group, Invariant::TSigma, RealSubgroup::exact(rat(1, 2), u).unwrap());
        assert_eq!(t.sigma_law_violations(&tol), vec![Side::Group]);
    }
}
