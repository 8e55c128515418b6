use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::oracle::{braids_equal, is_trivial};
use crate::par::{self, Exec};

/// Ordered list of braids on a common strand count.
///
/// When `marked` is set every entry fixes the last strand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawFactorization")]
pub struct Factorization {
    strands: usize,
    marked: bool,
    entries: Vec<BraidWord>,
    labels: Vec<Option<String>>,
}

#[derive(Deserialize)]
struct RawFactorization {
    strands: usize,
    #[serde(default)]
    marked: bool,
    entries: Vec<BraidWord>,
    #[serde(default)]
    labels: Vec<Option<String>>,
}

impl TryFrom<RawFactorization> for Factorization {
    type Error = Error;

    fn try_from(raw: RawFactorization) -> Result<Self> {
        let mut f = Factorization::new(raw.strands, raw.entries, raw.marked)?;
        if !raw.labels.is_empty() {
            f = f.with_labels(raw.labels)?;
        }
        Ok(f)
    }
}

/// A Hurwitz move at position `index` (1-based), forward or inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HurwitzMove {
    pub index: usize,
    pub inverse: bool,
}

impl HurwitzMove {
    pub fn forward(index: usize) -> Self {
        HurwitzMove { index, inverse: false }
    }

    pub fn backward(index: usize) -> Self {
        HurwitzMove { index, inverse: true }
    }

    pub fn inverted(self) -> Self {
        HurwitzMove { index: self.index, inverse: !self.inverse }
    }

    /// Parse a whitespace separated list such as `h2^-1 h3 h4`.
    pub fn parse_list(text: &str) -> Result<Vec<HurwitzMove>> {
        text.split_whitespace().map(str::parse).collect()
    }
}

impl FromStr for HurwitzMove {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { pos: 0, msg: format!("bad Hurwitz move '{s}'") };
        let rest = s.strip_prefix('h').ok_or_else(bad)?;
        let (num, inverse) = match rest.strip_suffix("^-1") {
            Some(n) => (n, true),
            None => (rest, false),
        };
        let index = num.parse().map_err(|_| bad())?;
        Ok(HurwitzMove { index, inverse })
    }
}

impl fmt::Display for HurwitzMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "h{}^-1", self.index)
        } else {
            write!(f, "h{}", self.index)
        }
    }
}

impl Factorization {
    pub fn new(strands: usize, entries: Vec<BraidWord>, marked: bool) -> Result<Self> {
        for (i, e) in entries.iter().enumerate() {
            if e.strands() != strands {
                return Err(Error::invalid(format!(
                    "entry {} has {} strands, expected {strands}",
                    i + 1,
                    e.strands()
                )));
            }
            if marked && e.permutation().apply(strands - 1) != strands - 1 {
                return Err(Error::NotMarked(format!("entry {} moves the last strand", i + 1)));
            }
        }
        let labels = vec![None; entries.len()];
        Ok(Factorization { strands, marked, entries, labels })
    }

    /// Parse entries written in the text notation.
    pub fn parse(strands: usize, marked: bool, entries: &[&str]) -> Result<Self> {
        let words = entries
            .iter()
            .map(|s| BraidWord::parse(strands, s))
            .collect::<Result<Vec<_>>>()?;
        Factorization::new(strands, words, marked)
    }

    pub fn with_labels(mut self, labels: Vec<Option<String>>) -> Result<Self> {
        if labels.len() != self.entries.len() {
            return Err(Error::invalid(format!(
                "{} labels for {} entries",
                labels.len(),
                self.entries.len()
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn is_marked(&self) -> bool {
        self.marked
    }

    pub fn entries(&self) -> &[BraidWord] {
        &self.entries
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, i: usize) -> Result<&BraidWord> {
        self.entries
            .get(i.wrapping_sub(1))
            .ok_or_else(|| Error::invalid(format!("entry {i} out of range 1..={}", self.entries.len())))
    }

    /// Drop the marked flag.
    pub fn unmarked(mut self) -> Self {
        self.marked = false;
        self
    }

    pub fn total_exponent(&self) -> i64 {
        self.entries.iter().map(BraidWord::exponent_sum).sum()
    }

    pub fn pseudo_coxeter(&self) -> BraidWord {
        BraidWord::pseudo_coxeter(self.strands, &self.entries).expect("entries share the strand count")
    }

    /// Whether the pseudo-Coxeter element is the full twist.
    pub fn is_generic(&self) -> Result<bool> {
        braids_equal(&self.pseudo_coxeter(), &BraidWord::full_twist(self.strands))
    }

    pub fn hurwitz(&self, m: HurwitzMove) -> Result<Self> {
        let i = m.index;
        if i == 0 || i >= self.entries.len() {
            return Err(Error::invalid(format!(
                "Hurwitz move at {i} needs 1 <= i < {}",
                self.entries.len()
            )));
        }
        let mut out = self.clone();
        let a = &self.entries[i - 1];
        let b = &self.entries[i];
        let (na, nb) = if m.inverse {
            (b.conj(a)?, a.clone())
        } else {
            (b.clone(), a.star(b)?)
        };
        out.entries[i - 1] = na.free_reduced();
        out.entries[i] = nb.free_reduced();
        out.labels.swap(i - 1, i);
        Ok(out)
    }

    pub fn apply_moves(&self, moves: &[HurwitzMove]) -> Result<Self> {
        moves.iter().try_fold(self.clone(), |f, &m| f.hurwitz(m))
    }

    pub fn conjugate_all(&self, g: &BraidWord) -> Result<Self> {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = e.conj(g)?.free_reduced();
        }
        if self.marked && g.permutation().apply(self.strands - 1) != self.strands - 1 {
            out.marked = false;
        }
        Ok(out)
    }

    /// Replace entry `i` by `parts`, whose pseudo-Coxeter element must equal it.
    pub fn replace_entry(&self, i: usize, parts: Vec<BraidWord>) -> Result<Self> {
        let old = self.entry(i)?;
        let prod = BraidWord::pseudo_coxeter(self.strands, &parts)?;
        if !braids_equal(&prod, old)? {
            return Err(Error::mismatch(format!(
                "replacement for entry {i} multiplies to {prod}, expected {old}"
            )));
        }
        let mut out = self.clone();
        let label = out.labels[i - 1].clone();
        let n = parts.len();
        out.entries.splice(i - 1..i, parts);
        out.labels.splice(i - 1..i, std::iter::repeat_n(label, n));
        Ok(out)
    }

    pub fn forget_strand_all(&self, s: usize) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.forget_strand(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Factorization {
            strands: self.strands - 1,
            marked: false,
            entries,
            labels: self.labels.clone(),
        })
    }

    pub fn drop_trivial_entries(&self) -> Result<Self> {
        let keep = par::map(Exec::Parallel, &self.entries, |e| is_trivial(e).map(|t| !t));
        let mut out = Factorization { entries: Vec::new(), labels: Vec::new(), ..self.clone() };
        for ((e, l), k) in self.entries.iter().zip(&self.labels).zip(keep) {
            if k? {
                out.entries.push(e.clone());
                out.labels.push(l.clone());
            }
        }
        Ok(out)
    }

    /// Concatenate two factorizations on the same strands.
    pub fn concat(&self, other: &Factorization) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        let mut out = self.clone();
        out.marked = self.marked && other.marked;
        out.entries.extend(other.entries.iter().cloned());
        out.labels.extend(other.labels.iter().cloned());
        Ok(out)
    }

    pub fn push(&mut self, entry: BraidWord, label: Option<String>) -> Result<()> {
        if entry.strands() != self.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: entry.strands() });
        }
        self.entries.push(entry);
        self.labels.push(label);
        Ok(())
    }

    /// Sub-list of entries `range` (0-based, half open).
    pub fn slice(&self, range: std::ops::Range<usize>) -> Self {
        Factorization {
            strands: self.strands,
            marked: self.marked,
            entries: self.entries[range.clone()].to_vec(),
            labels: self.labels[range].to_vec(),
        }
    }

    /// Oracle comparison entry by entry; returns the 1-based indices that differ.
    pub fn entrywise_mismatches(&self, other: &Factorization, exec: Exec) -> Result<Vec<usize>> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        if self.len() != other.len() {
            return Err(Error::mismatch(format!("lengths differ: {} vs {}", self.len(), other.len())));
        }
        let pairs: Vec<(&BraidWord, &BraidWord)> = self.entries.iter().zip(&other.entries).collect();
        let eq = par::map(exec, &pairs, |(a, b)| braids_equal(a, b));
        let mut bad = Vec::new();
        for (i, r) in eq.into_iter().enumerate() {
            if !r? {
                bad.push(i + 1);
            }
        }
        Ok(bad)
    }

    pub fn entrywise_equal(&self, other: &Factorization) -> Result<bool> {
        Ok(self.len() == other.len() && self.entrywise_mismatches(other, Exec::Parallel)?.is_empty())
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            writeln!(f, "{:>3}: {e}", i + 1)?;
        }
        Ok(())
    }
}
