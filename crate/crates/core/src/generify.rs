//! Rewrite rules turning non-generic factorizations into generic ones.

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::factorization::Factorization;
use crate::oracle::{braids_equal, commute, is_trivial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TangencyKind {
    /// `(σ_{a+1} σ_a)^2 → (σ_a^{σ_{a+1}}, σ_{a+1}^3)`
    Cusp,
    /// `σ_a σ_{a+1} σ_a → (σ_{a+1}^{σ_a}, σ_a^2)`
    Node,
    /// `σ_{a+m-2} ... σ_a → (σ_a, ..., σ_{a+m-2})`, tangency of order `m` on a band of `m` strands.
    Inflection(usize),
}

/// Local model of a non-transversal fiber, placed on the band starting at strand `band`
/// and conjugated by `conjugator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangencyModel {
    pub kind: TangencyKind,
    pub band: usize,
    pub conjugator: BraidWord,
}

impl TangencyModel {
    pub fn new(kind: TangencyKind, band: usize, conjugator: BraidWord) -> Result<Self> {
        let width = match kind {
            TangencyKind::Cusp | TangencyKind::Node => 3,
            TangencyKind::Inflection(m) if m >= 2 => m,
            TangencyKind::Inflection(m) => {
                return Err(Error::invalid(format!("inflection order must be at least 2, got {m}")))
            }
        };
        if band == 0 || band + width - 1 > conjugator.strands() {
            return Err(Error::invalid(format!(
                "model band starting at {band} does not fit in {} strands",
                conjugator.strands()
            )));
        }
        Ok(TangencyModel { kind, band, conjugator })
    }

    fn strands(&self) -> usize {
        self.conjugator.strands()
    }

    fn word(&self, letters: Vec<i32>) -> BraidWord {
        BraidWord::new(self.strands(), letters).expect("band checked on construction")
    }

    /// The unconjugated model braid.
    pub fn model(&self) -> BraidWord {
        let a = self.band as i32;
        match self.kind {
            TangencyKind::Cusp => self.word(vec![a + 1, a, a + 1, a]),
            TangencyKind::Node => self.word(vec![a, a + 1, a]),
            TangencyKind::Inflection(m) => self.word((a..a + m as i32 - 1).rev().collect()),
        }
    }

    /// The unconjugated replacement tuple.
    pub fn replacement(&self) -> Vec<BraidWord> {
        let a = self.band as i32;
        match self.kind {
            TangencyKind::Cusp => vec![self.word(vec![-(a + 1), a, a + 1]), self.word(vec![a + 1; 3])],
            TangencyKind::Node => vec![self.word(vec![-a, a + 1, a]), self.word(vec![a; 2])],
            TangencyKind::Inflection(m) => (a..a + m as i32 - 1).map(|x| self.word(vec![x])).collect(),
        }
    }
}

/// Replace entry `i` (1-based), which must equal `η * model`, by `η *` the model's replacement.
pub fn replace_tangency(f: &Factorization, i: usize, model: &TangencyModel) -> Result<Factorization> {
    let entry = f.entry(i)?;
    let expected = model.model().star(&model.conjugator)?;
    if !braids_equal(entry, &expected)? {
        return Err(Error::mismatch(format!(
            "entry {i} = {entry} is not the model {expected}"
        )));
    }
    let parts = model
        .replacement()
        .iter()
        .map(|p| p.star(&model.conjugator).map(|w| w.free_reduced()))
        .collect::<Result<Vec<_>>>()?;
    f.replace_entry(i, parts)
}

/// Split entry `i` into pairwise commuting parts whose product is the entry.
pub fn split_locally_generic(f: &Factorization, i: usize, parts: Vec<BraidWord>) -> Result<Factorization> {
    for a in 0..parts.len() {
        for b in a + 1..parts.len() {
            if !commute(&parts[a], &parts[b])? {
                return Err(Error::invalid(format!("parts {} and {} do not commute", a + 1, b + 1)));
            }
        }
    }
    f.replace_entry(i, parts)
}

/// Entry of a line arrangement monodromy with its decomposition `τ = β * α`,
/// `α = ∏_s Δ²_{a_s, a_{s+1}-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementEntry {
    pub tau: BraidWord,
    pub beta: BraidWord,
    /// `1 = a_1 < ... < a_{m+1} = n + 1`
    pub partition: Vec<usize>,
}

/// Monodromy of `n` non-vertical lines plus `k` vertical ones at the given (1-based) entry indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementInput {
    pub n: usize,
    pub entries: Vec<ArrangementEntry>,
    pub vertical: Vec<usize>,
}

impl ArrangementInput {
    pub fn k(&self) -> usize {
        self.vertical.len()
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        for (idx, e) in self.entries.iter().enumerate() {
            let p = &e.partition;
            if p.first() != Some(&1) || p.last() != Some(&(n + 1)) || p.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::invalid(format!(
                    "entry {}: partition {p:?} must increase from 1 to {}",
                    idx + 1,
                    n + 1
                )));
            }
            if e.tau.strands() != n || e.beta.strands() != n {
                return Err(Error::invalid(format!("entry {}: braids must live on {n} strands", idx + 1)));
            }
            let alpha = twist_product(n, p)?;
            if !braids_equal(&alpha.star(&e.beta)?, &e.tau)? {
                return Err(Error::mismatch(format!("entry {}: beta * alpha differs from tau", idx + 1)));
            }
        }
        if self.vertical.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::invalid("vertical indices must increase"));
        }
        if let Some(&v) = self.vertical.iter().find(|&&v| v == 0 || v > self.entries.len()) {
            return Err(Error::invalid(format!("vertical index {v} is not an entry")));
        }
        Ok(())
    }
}

fn twist_product(n: usize, partition: &[usize]) -> Result<BraidWord> {
    let parts = partition
        .windows(2)
        .map(|w| Ok(BraidWord::partial_garside(n, w[0], w[1] - 1)?.pow(2)))
        .collect::<Result<Vec<_>>>()?;
    BraidWord::product(n, &parts)
}

/// Generic monodromy of the arrangement on `n + k` strands.
pub fn arrangement_generify(inp: &ArrangementInput) -> Result<Factorization> {
    inp.validate()?;
    let n = inp.n;
    let d = n + inp.k();
    let mut out = Factorization::new(d, Vec::new(), false)?;
    for (idx, e) in inp.entries.iter().enumerate() {
        let p = &e.partition;
        let m = p.len() - 1;
        let beta = e.beta.embed(d)?;
        match inp.vertical.iter().position(|&v| v == idx + 1) {
            None => {
                for s in (0..m).rev() {
                    let w = BraidWord::partial_garside(d, p[s], p[s + 1] - 1)?.pow(2).star(&beta)?;
                    if !is_trivial(&w)? {
                        out.push(w.free_reduced(), None)?;
                    }
                }
            }
            Some(j) => {
                let j = j + 1;
                let mut prefix = beta.clone();
                let shuffle: Vec<i32> = (n + 1..n + j).rev().map(|x| -(x as i32)).collect();
                prefix = prefix.compose(&BraidWord::new(d, shuffle)?)?;
                let mut tail = BraidWord::identity(d);
                for s in (0..m).rev() {
                    let g = prefix.compose(&tail)?;
                    let w = BraidWord::partial_garside(d, p[s], p[s + 1])?.pow(2).star(&g)?;
                    out.push(w.free_reduced(), None)?;
                    tail = tail.compose(&BraidWord::partial_garside(d, p[s], p[s + 1])?)?;
                }
            }
        }
    }
    if inp.k() >= 2 {
        out.push(BraidWord::partial_garside(d, n + 1, d)?.pow(2), None)?;
    }
    Ok(out)
}
