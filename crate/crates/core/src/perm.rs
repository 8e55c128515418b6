use std::fmt;

/// Permutation of `0..n`; `images()[p]` is where position `p` is sent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Permutation(images))
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.0.swap(a, b);
        p
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, p: usize) -> usize {
        self.0[p]
    }

    /// First `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Self {
        Permutation(self.0.iter().map(|&p| other.0[p]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (p, &q) in self.0.iter().enumerate() {
            inv[q] = p;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(p, &q)| p == q)
    }

    /// Compose with the adjacent swap of positions `j-1` and `j` (1-based `j`).
    pub(crate) fn swap_positions(&mut self, j: usize) {
        for q in self.0.iter_mut() {
            if *q == j - 1 {
                *q = j;
            } else if *q == j {
                *q = j - 1;
            }
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|q| (q + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}
