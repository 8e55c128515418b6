use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Freely reduced word in a free group; letter `i` is the `i`-th generator, `-i` its inverse.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FreeWord(Vec<i32>);

/// Append `x` to a reduced buffer, cancelling against the tail.
fn push_reduced(buf: &mut Vec<i32>, x: i32) {
    if buf.last() == Some(&-x) {
        buf.pop();
    } else {
        buf.push(x);
    }
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord(Vec::new())
    }

    pub fn generator(i: usize) -> Self {
        FreeWord(vec![i as i32])
    }

    pub fn from_letters<I: IntoIterator<Item = i32>>(letters: I) -> Self {
        let mut buf = Vec::new();
        for x in letters {
            assert!(x != 0, "free word letter 0");
            push_reduced(&mut buf, x);
        }
        FreeWord(buf)
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest generator index used.
    pub fn max_generator(&self) -> usize {
        self.0.iter().map(|x| x.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn inverse(&self) -> Self {
        FreeWord(self.0.iter().rev().map(|x| -x).collect())
    }

    pub fn mul(&self, other: &FreeWord) -> Self {
        let mut buf = self.0.clone();
        for &x in &other.0 {
            push_reduced(&mut buf, x);
        }
        FreeWord(buf)
    }

    /// `g * self * g^-1`
    pub fn star(&self, g: &FreeWord) -> Self {
        g.mul(self).mul(&g.inverse())
    }

    /// `g^-1 * self * g`
    pub fn conj(&self, g: &FreeWord) -> Self {
        g.inverse().mul(self).mul(g)
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = FreeWord::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Sum of exponents of generator `i`.
    pub fn exponent_of(&self, i: usize) -> i64 {
        self.0
            .iter()
            .filter(|x| x.unsigned_abs() as usize == i)
            .map(|x| x.signum() as i64)
            .sum()
    }

    /// Number of occurrences of generator `i` (either sign).
    pub fn occurrences(&self, i: usize) -> usize {
        self.0.iter().filter(|x| x.unsigned_abs() as usize == i).count()
    }

    /// Cyclic reduction: strip inverse pairs wrapping around the ends.
    pub fn cyclically_reduced(&self) -> Self {
        let w = &self.0;
        let mut lo = 0;
        let mut hi = w.len();
        while hi - lo >= 2 && w[lo] == -w[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        FreeWord(w[lo..hi].to_vec())
    }

    /// Rotation starting at letter `k`.
    pub fn rotated(&self, k: usize) -> Self {
        let mut v = self.0[k..].to_vec();
        v.extend_from_slice(&self.0[..k]);
        FreeWord(v)
    }

    /// Substitute each generator `i` by `images[i-1]`, failing once the result exceeds `cap`.
    pub fn substitute(&self, images: &[FreeWord], cap: usize) -> Result<FreeWord> {
        let inverses: Vec<FreeWord> = images.iter().map(FreeWord::inverse).collect();
        let mut buf = Vec::new();
        for &x in &self.0 {
            let i = x.unsigned_abs() as usize - 1;
            let img = if x > 0 { &images[i] } else { &inverses[i] };
            for &y in &img.0 {
                push_reduced(&mut buf, y);
            }
            if buf.len() > cap {
                return Err(Error::ResourceCap { cap });
            }
        }
        Ok(FreeWord(buf))
    }

    /// Relabel generators through `map` (1-based to 1-based).
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> Self {
        FreeWord::from_letters(self.0.iter().map(|&x| {
            let j = map(x.unsigned_abs() as usize) as i32;
            if x > 0 {
                j
            } else {
                -j
            }
        }))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&x| {
                if x > 0 {
                    format!("m{x}")
                } else {
                    format!("m{}^-1", -x)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_on_construction() {
        let w = FreeWord::from_letters([1, 2, -2, -1, 3]);
        assert_eq!(w.letters(), &[3]);
    }

    #[test]
    fn inverse_cancels() {
        let w = FreeWord::from_letters([1, -2, 3, 3]);
        assert!(w.mul(&w.inverse()).is_identity());
    }

    #[test]
    fn cyclic_reduction() {
        let w = FreeWord::from_letters([2, 1, 3, -2]);
        assert_eq!(w.cyclically_reduced().letters(), &[1, 3]);
    }

    #[test]
    fn substitution_respects_cap() {
        let w = FreeWord::from_letters([1, 1, 1]);
        let imgs = vec![FreeWord::from_letters([1, 2])];
        assert_eq!(w.substitute(&imgs, 10).unwrap().letters(), &[1, 2, 1, 2, 1, 2]);
        assert!(matches!(w.substitute(&imgs, 3), Err(Error::ResourceCap { .. })));
    }
}
