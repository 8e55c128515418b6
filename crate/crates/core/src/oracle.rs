//! Equality of braids through the Artin action on the free group.
//!
//! `act(b, ·)` is the automorphism of `F_d = <μ_1..μ_d>` given by
//! `σ_i: μ_i ↦ μ_{i+1}, μ_{i+1} ↦ μ_{i+1} μ_i μ_{i+1}^-1`, applied letter by letter,
//! left to right: `act(ab, w) = act(b, act(a, w))`.

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::free::FreeWord;

/// Default cap on intermediate free word length.
pub const DEFAULT_CAP: usize = 1_000_000;

/// Images `act(b, μ_i)` of all free generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArtinImages(Vec<FreeWord>);

impl ArtinImages {
    pub fn identity(d: usize) -> Self {
        ArtinImages((1..=d).map(FreeWord::generator).collect())
    }

    pub fn from_words(words: Vec<FreeWord>) -> Self {
        ArtinImages(words)
    }

    pub fn of(b: &BraidWord, cap: usize) -> Result<Self> {
        let mut t = ArtinImages::identity(b.strands());
        for &x in b.letters().iter().rev() {
            t.left_multiply(x, cap)?;
        }
        Ok(t)
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.0
    }

    pub fn total_len(&self) -> usize {
        self.0.iter().map(FreeWord::len).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, w)| w.letters() == [i as i32 + 1])
    }

    /// Replace the images of `X` by those of `σ_x X`.
    ///
    /// Since `act(σ X) = act(X) ∘ act(σ)`, only two images change and the
    /// update is a Hurwitz move on the tuple.
    pub fn left_multiply(&mut self, x: i32, cap: usize) -> Result<()> {
        let j = x.unsigned_abs() as usize - 1;
        let (a, b) = (&self.0[j], &self.0[j + 1]);
        let (na, nb) = if x > 0 {
            (b.clone(), a.star(b))
        } else {
            (b.conj(a), a.clone())
        };
        if na.len() > cap || nb.len() > cap {
            return Err(Error::ResourceCap { cap });
        }
        self.0[j] = na;
        self.0[j + 1] = nb;
        Ok(())
    }

    /// `act(b, w)` for the braid these images belong to.
    pub fn apply(&self, w: &FreeWord, cap: usize) -> Result<FreeWord> {
        w.substitute(&self.0, cap)
    }

    /// Recover a braid whose images are these, by greedily shortening the tuple.
    ///
    /// Returns `None` when no Hurwitz move shortens a non-standard tuple.
    pub fn to_braid(&self, cap: usize) -> Result<Option<BraidWord>> {
        let d = self.0.len();
        let mut t = self.clone();
        let mut moves: Vec<i32> = Vec::new();
        while !t.is_identity() {
            let current = t.total_len();
            let mut best: Option<(usize, i32, ArtinImages)> = None;
            for j in 1..d as i32 {
                for x in [j, -j] {
                    let mut c = t.clone();
                    c.left_multiply(x, cap)?;
                    let l = c.total_len();
                    if l < current && best.as_ref().is_none_or(|(bl, _, _)| l < *bl) {
                        best = Some((l, x, c));
                    }
                }
            }
            match best {
                Some((_, x, c)) => {
                    moves.push(x);
                    t = c;
                }
                None => return Ok(None),
            }
        }
        // e_m ... e_1 V = 1, so V = e_1^-1 ... e_m^-1
        let letters = moves.iter().map(|x| -x).collect();
        Ok(Some(BraidWord::new_unchecked(d, letters)))
    }
}

/// `act(b, w)`.
pub fn artin_act(b: &BraidWord, w: &FreeWord) -> Result<FreeWord> {
    ArtinImages::of(b, DEFAULT_CAP)?.apply(w, DEFAULT_CAP)
}

pub fn braids_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    braids_equal_with(a, b, DEFAULT_CAP)
}

/// `a ≡ b` iff `act(a, μ_i) = act(b, μ_i)` for every `i`, which is the same as
/// `act(a b^-1)` fixing every generator.
pub fn braids_equal_with(a: &BraidWord, b: &BraidWord, cap: usize) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch { left: a.strands(), right: b.strands() });
    }
    if a.exponent_sum() != b.exponent_sum() || a.permutation() != b.permutation() {
        return Ok(false);
    }
    Ok(ArtinImages::of(a, cap)? == ArtinImages::of(b, cap)?)
}

/// Whether the word represents the identity braid.
pub fn is_trivial(b: &BraidWord) -> Result<bool> {
    braids_equal(b, &BraidWord::identity(b.strands()))
}

/// Whether `a` and `b` commute.
pub fn commute(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    braids_equal(&a.compose(b)?, &b.compose(a)?)
}
