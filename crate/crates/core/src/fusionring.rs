//! The representation ring of `U_F⁺`: irreducibles are words over the letters
//! `α`, `β` (written `a`, `b`; the empty word is `e`), conjugation reverses a
//! word and swaps the letters, and `x ⊗ y = ⊕_{x = ac, y = c̄b} ab`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::numerics::q_number;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Alpha,
    Beta,
}

impl Letter {
    pub fn conj(self) -> Self {
        match self {
            Letter::Alpha => Letter::Beta,
            Letter::Beta => Letter::Alpha,
        }
    }

    fn symbol(self) -> char {
        match self {
            Letter::Alpha => 'a',
            Letter::Beta => 'b',
        }
    }
}

/// A word in the free monoid on `{α, β}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    /// `δ δ̄ δ δ̄ …` with `k` letters.
    pub fn alternating(k: usize, leading: Letter) -> Self {
        Word((0..k).map(|i| if i % 2 == 0 { leading } else { leading.conj() }).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Reverse and swap letters.
    pub fn conjugate(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.conj()).collect())
    }

    /// Every word of length at most `max_len`, shortest first.
    pub fn all_up_to(max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..max_len {
            let next: Vec<Word> = layer
                .iter()
                .flat_map(|w| {
                    [Letter::Alpha, Letter::Beta].into_iter().map(move |l| {
                        let mut v = w.0.clone();
                        v.push(l);
                        Word(v)
                    })
                })
                .collect();
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        self.0.iter().try_for_each(|l| write!(f, "{}", l.symbol()))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "e" || t.is_empty() {
            return Ok(Word::empty());
        }
        t.chars()
            .map(|c| match c {
                'a' | 'A' => Ok(Letter::Alpha),
                'b' | 'B' => Ok(Letter::Beta),
                _ => Err(Error::parse(t, format!("unexpected letter '{c}', words use a and b"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

/// A direct sum of irreducibles with positive multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FusionSum {
    terms: BTreeMap<Word, u64>,
}

impl FusionSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(w: Word) -> Self {
        let mut s = Self::new();
        s.add(w, 1);
        s
    }

    pub fn add(&mut self, w: Word, mult: u64) {
        if mult > 0 {
            *self.terms.entry(w).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, w: &Word) -> u64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    /// Terms ordered by decreasing length, then lexicographically.
    pub fn terms(&self) -> Vec<(Word, u64)> {
        let mut v: Vec<(Word, u64)> = self.terms.iter().map(|(w, m)| (w.clone(), *m)).collect();
        v.sort_by(|(a, _), (b, _)| b.len().cmp(&a.len()).then_with(|| a.to_string().cmp(&b.to_string())));
        v
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.terms.values().sum()
    }

    /// `Σ mult · d(term)` for a dimension function `d`.
    pub fn weighted(&self, d: impl Fn(&Word) -> f64) -> f64 {
        self.terms.iter().map(|(w, m)| *m as f64 * d(w)).sum()
    }

    /// Bilinear extension of [`fuse`].
    pub fn tensor(&self, other: &FusionSum) -> FusionSum {
        let mut out = FusionSum::new();
        for (x, mx) in &self.terms {
            for (y, my) in &other.terms {
                for (w, m) in fuse(x, y).terms {
                    out.add(w, m * mx * my);
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.terms().into_iter().map(|(w, m)| json!([w.to_string(), m])).collect())
    }
}

impl fmt::Display for FusionSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms()
            .into_iter()
            .map(|(w, m)| if m == 1 { w.to_string() } else { format!("{m}·{w}") })
            .collect();
        f.write_str(&parts.join(" ⊕ "))
    }
}

/// Tensor product of two irreducibles.
pub fn fuse(x: &Word, y: &Word) -> FusionSum {
    let mut out = FusionSum::new();
    let xs = x.letters();
    for split in (0..=xs.len()).rev() {
        let (a, c) = xs.split_at(split);
        let cbar = Word(c.to_vec()).conjugate();
        if y.letters().starts_with(cbar.letters()) {
            let mut w = a.to_vec();
            w.extend_from_slice(&y.letters()[cbar.len()..]);
            out.add(Word(w), 1);
        }
    }
    out
}

/// Dimension data of the fundamental representation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RepParams {
    /// Classical dimension of `α`.
    pub n: u32,
    /// `q ∈ (0, 1]` with `q + 1/q` the quantum dimension of `α`.
    pub q: f64,
}

impl RepParams {
    pub fn new(n: u32, q: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!("dimension N must be at least 2, got {n}")));
        }
        if !(q > 0.0 && q <= 1.0) {
            return Err(Error::Domain(format!("q must lie in (0,1], got {q}")));
        }
        Ok(Self { n, q })
    }
}

/// Dimension of `w` given the dimension `d1` of a single letter, by the
/// recursion `d(vδ) = d(v)·d1 − [v ends in δ̄]·d(v minus its last letter)`.
fn word_dimension(w: &Word, d1: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, 1.0);
    let ls = w.letters();
    for (k, l) in ls.iter().enumerate() {
        let back = k > 0 && ls[k - 1] == l.conj();
        let next = cur * d1 - if back { prev } else { 0.0 };
        prev = cur;
        cur = next;
    }
    cur
}

pub fn dim_word(w: &Word, p: &RepParams) -> f64 {
    word_dimension(w, p.n as f64)
}

pub fn qdim_word(w: &Word, p: &RepParams) -> f64 {
    word_dimension(w, p.q + 1.0 / p.q)
}

/// Smallest and largest spectral values `(γ, Γ)` of `ρ` on the alternating
/// word of length `n` starting with `leading`, given `(γ, Γ)` for `α`.
/// For `β` they are `(1/Γα, 1/γα)`.
pub fn alternating_spectral_bounds(n: u32, leading: Letter, gamma_a: f64, big_gamma_a: f64) -> Result<(f64, f64)> {
    if !(gamma_a > 0.0 && gamma_a <= 1.0 && big_gamma_a >= 1.0 && big_gamma_a.is_finite()) {
        return Err(Error::Domain(format!("need 0 < γ ≤ 1 ≤ Γ, got γ = {gamma_a}, Γ = {big_gamma_a}")));
    }
    let (g_b, gg_b) = (1.0 / big_gamma_a, 1.0 / gamma_a);
    let ((g_lead, gg_lead), (g_other, gg_other)) = match leading {
        Letter::Alpha => ((gamma_a, big_gamma_a), (g_b, gg_b)),
        Letter::Beta => ((g_b, gg_b), (gamma_a, big_gamma_a)),
    };
    let k = (n / 2) as i32;
    let lead_pow = k + (n % 2) as i32;
    Ok((
        g_lead.powi(lead_pow) * g_other.powi(k),
        gg_lead.powi(lead_pow) * gg_other.powi(k),
    ))
}

/// `(γ_n, Γ_n, bound_n)` for the `n`-th power sequence: `(q, 1/q, q + 1/q)` at
/// `n = 1`, else `(q^{2n}, q^{-2n}, [2n+1]_q)`.
pub fn un_sequence(q: f64, n: u32) -> Result<(f64, f64, f64)> {
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::Domain(format!("q must lie in (0,1), got {q}")));
    }
    match n {
        0 => Err(Error::Domain("sequence index starts at 1".into())),
        1 => Ok((q, 1.0 / q, q + 1.0 / q)),
        _ => {
            let e = 2 * n as i32;
            Ok((q.powi(e), q.powi(-e), q_number(2 * n + 1, q)?))
        }
    }
}

/// Lower bounds `t_n = Γ_n / (γ_n · bound_n²)` for `n = 2..=n_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct SequenceDiagnostics {
    pub q: f64,
    /// `(n, t_n)`.
    pub values: Vec<(u32, f64)>,
    /// `(n, Γ_n / bound_n)`.
    pub single_factor: Vec<(u32, f64)>,
    pub infimum: f64,
    /// `(1 − q²)²`.
    pub limit: f64,
    /// `1 − q²`.
    pub single_factor_limit: f64,
}

impl SequenceDiagnostics {
    pub fn last(&self) -> f64 {
        self.values.last().map(|v| v.1).unwrap_or(f64::NAN)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "q": self.q,
            "values": self.values.iter().map(|(n, t)| json!([n, t])).collect::<Vec<_>>(),
            "single_factor": self.single_factor.iter().map(|(n, t)| json!([n, t])).collect::<Vec<_>>(),
            "infimum": self.infimum,
            "limit": self.limit,
            "single_factor_limit": self.single_factor_limit,
        })
    }
}

pub fn sequence_diagnostics(q: f64, n_max: u32) -> Result<SequenceDiagnostics> {
    if n_max < 2 {
        return Err(Error::Domain(format!("n_max must be at least 2, got {n_max}")));
    }
    let mut values = Vec::new();
    let mut single = Vec::new();
    for n in 2..=n_max {
        let (g, gg, b) = un_sequence(q, n)?;
        values.push((n, gg / (g * b * b)));
        single.push((n, gg / b));
    }
    let infimum = values.iter().map(|v| v.1).fold(f64::INFINITY, f64::min);
    let s = 1.0 - q * q;
    Ok(SequenceDiagnostics { q, values, single_factor: single, infimum, limit: s * s, single_factor_limit: s })
}
