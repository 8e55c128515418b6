use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Braid word on `strands` strands: letter `j` is `σ_j`, `-j` is `σ_j^-1`.
///
/// Words are kept as written; equality of braids is decided by [`crate::oracle`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBraid")]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

#[derive(Deserialize)]
struct RawBraid {
    strands: usize,
    letters: Vec<i32>,
}

impl TryFrom<RawBraid> for BraidWord {
    type Error = Error;

    fn try_from(raw: RawBraid) -> Result<Self> {
        BraidWord::new(raw.strands, raw.letters)
    }
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::invalid("a braid needs at least one strand"));
        }
        for &x in &letters {
            if x == 0 {
                return Err(Error::ZeroLetter);
            }
            let j = x.unsigned_abs() as usize;
            if j >= strands {
                return Err(Error::LetterOutOfRange { index: j, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub(crate) fn new_unchecked(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters.iter().all(|&x| x != 0 && (x.unsigned_abs() as usize) < strands));
        BraidWord { strands, letters }
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    /// `σ_j^e` on `strands` strands.
    pub fn generator(strands: usize, j: usize, e: i32) -> Result<Self> {
        let x = j as i32 * e.signum();
        BraidWord::new(strands, vec![x; e.unsigned_abs() as usize])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|x| x.signum() as i64).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&x| x > 0)
    }

    fn check_same(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        Ok(())
    }

    pub fn compose(&self, other: &BraidWord) -> Result<Self> {
        self.check_same(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Concatenate a sequence of words on the same strand count.
    pub fn product<'a, I: IntoIterator<Item = &'a BraidWord>>(strands: usize, words: I) -> Result<Self> {
        let mut out = BraidWord::identity(strands);
        for w in words {
            out.check_same(w)?;
            out.letters.extend_from_slice(&w.letters);
        }
        Ok(out)
    }

    pub fn invert(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|x| -x).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.invert() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * e.unsigned_abs() as usize);
        for _ in 0..e.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// `self^g = g^-1 self g`
    pub fn conj(&self, g: &BraidWord) -> Result<Self> {
        g.invert().compose(self)?.compose(g)
    }

    /// `g * self = g self g^-1`
    pub fn star(&self, g: &BraidWord) -> Result<Self> {
        g.compose(self)?.compose(&g.invert())
    }

    /// Cancel adjacent `σ_j σ_j^-1` pairs.
    pub fn free_reduced(&self) -> Self {
        let mut buf: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &x in &self.letters {
            if buf.last() == Some(&-x) {
                buf.pop();
            } else {
                buf.push(x);
            }
        }
        BraidWord { strands: self.strands, letters: buf }
    }

    /// Underlying permutation: strand starting at position `p` ends at `images()[p]`.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for &x in &self.letters {
            p.swap_positions(x.unsigned_abs() as usize);
        }
        p
    }

    /// Garside half twist `Δ_d = σ_1 (σ_2 σ_1) ... (σ_{d-1} ... σ_1)`.
    pub fn garside(d: usize) -> Self {
        Self::partial_garside(d, 1, d).expect("full band")
    }

    /// `Δ_d^2 = (σ_{d-1} ... σ_1)^d`.
    pub fn full_twist(d: usize) -> Self {
        let cycle: Vec<i32> = (1..d as i32).rev().collect();
        let letters = cycle.iter().copied().cycle().take(cycle.len() * d).collect();
        BraidWord { strands: d, letters }
    }

    /// Full twist of `B_{k+1}` written so that `σ_k` only occurs squared:
    /// `(σ_k^2 σ_{k-1} ... σ_1)^k`.
    pub fn full_twist_marked(k: usize) -> Self {
        let mut one = vec![k as i32, k as i32];
        one.extend((1..k as i32).rev());
        let letters = one.iter().copied().cycle().take(one.len() * k).collect();
        BraidWord { strands: k + 1, letters }
    }

    /// Half twist `Δ_{i,j}` of the band of strands `i..=j`, inside `B_strands`.
    pub fn partial_garside(strands: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || i > j || j > strands {
            return Err(Error::invalid(format!("band {i}..{j} does not fit in {strands} strands")));
        }
        let shift = (i - 1) as i32;
        let mut letters = Vec::new();
        for top in 1..=(j - i) as i32 {
            letters.extend((1..=top).rev().map(|x| x + shift));
        }
        Ok(BraidWord { strands, letters })
    }

    /// Shift all indices by `offset` and view the word on `strands` strands.
    pub fn shift_embed(&self, offset: usize, strands: usize) -> Result<Self> {
        let letters = self
            .letters
            .iter()
            .map(|&x| x.signum() * (x.unsigned_abs() as i32 + offset as i32))
            .collect();
        BraidWord::new(strands, letters)
    }

    /// Same letters on more strands.
    pub fn embed(&self, strands: usize) -> Result<Self> {
        self.shift_embed(0, strands)
    }

    /// Drop strand `s` (1-based), following its position through the word.
    pub fn forget_strand(&self, s: usize) -> Result<Self> {
        if s == 0 || s > self.strands {
            return Err(Error::invalid(format!("strand {s} out of range for {} strands", self.strands)));
        }
        if self.strands == 1 {
            return Err(Error::invalid("cannot forget the only strand"));
        }
        let mut p = s;
        let mut letters = Vec::with_capacity(self.letters.len());
        for &x in &self.letters {
            let j = x.unsigned_abs() as usize;
            if j == p {
                p += 1;
            } else if j + 1 == p {
                p -= 1;
            } else if j > p {
                letters.push(x.signum() * (j as i32 - 1));
            } else {
                letters.push(x);
            }
        }
        Ok(BraidWord { strands: self.strands - 1, letters })
    }

    /// Product `x_r ... x_1` of a list.
    pub fn pseudo_coxeter(strands: usize, items: &[BraidWord]) -> Result<Self> {
        BraidWord::product(strands, items.iter().rev())
    }

    /// Apply `f` to every generator index.
    pub fn relabel(&self, strands: usize, f: impl Fn(usize) -> usize) -> Result<Self> {
        let letters = self
            .letters
            .iter()
            .map(|&x| x.signum() * f(x.unsigned_abs() as usize) as i32)
            .collect();
        BraidWord::new(strands, letters)
    }

    /// Parse the compact text form, e.g. `s1 s2^-1 (s3 s2)^2 s1^(s2)`.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        crate::notation::parse_braid(strands, text)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let x = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == x {
                run += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let e = run as i64 * x.signum() as i64;
            if e == 1 {
                write!(f, "s{}", x.abs())?;
            } else {
                write!(f, "s{}^{}", x.abs(), e)?;
            }
            i += run;
        }
        Ok(())
    }
}

/// Braid on `k+1` strands fixing the last strand, with `σ_k` only in even runs.
///
/// This is the form accepted by the lifting maps: a word in `σ_1..σ_{k-1}` and `σ_k^{±2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct MarkedBraidWord(BraidWord);

impl MarkedBraidWord {
    pub fn new(word: BraidWord) -> Result<Self> {
        let k = word.strands() - 1;
        if k == 0 {
            return Err(Error::NotMarked("need at least two strands".into()));
        }
        if word.permutation().apply(k) != k {
            return Err(Error::NotMarked(format!("{word} moves the last strand")));
        }
        for (start, e) in last_generator_runs(&word) {
            if e % 2 != 0 {
                return Err(Error::NotMarked(format!(
                    "run of s{k} at letter {} has odd exponent {e}",
                    start + 1
                )));
            }
        }
        Ok(MarkedBraidWord(word))
    }

    pub(crate) fn new_unchecked(word: BraidWord) -> Self {
        MarkedBraidWord(word)
    }

    pub fn word(&self) -> &BraidWord {
        &self.0
    }

    pub fn into_word(self) -> BraidWord {
        self.0
    }

    /// Number of non-fixed strands.
    pub fn k(&self) -> usize {
        self.0.strands() - 1
    }
}

/// Maximal runs of `σ_k^{±1}` (k = strands-1) with their reduced exponents.
pub(crate) fn last_generator_runs(word: &BraidWord) -> Vec<(usize, i64)> {
    let k = (word.strands() - 1) as i32;
    let mut runs = Vec::new();
    let mut i = 0;
    let l = word.letters();
    while i < l.len() {
        if l[i].abs() == k {
            let start = i;
            let mut e = 0i64;
            while i < l.len() && l[i].abs() == k {
                e += l[i].signum() as i64;
                i += 1;
            }
            runs.push((start, e));
        } else {
            i += 1;
        }
    }
    runs
}
