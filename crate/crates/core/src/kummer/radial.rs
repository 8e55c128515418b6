//! Radial generator grid: `ρ_{i,j}` has native flat index `(j-1)k + i`.

use super::circular::{star, CircularGrid};

#[derive(Clone, Copy, Debug)]
pub struct RadialGrid {
    pub n: usize,
    pub k: usize,
}

impl RadialGrid {
    pub fn flat(&self, i: usize, j: usize) -> i32 {
        ((j - 1) * self.k + i) as i32
    }

    /// `β_j = ρ_{k-1,j} ... ρ_{1,j}` in native letters.
    fn beta(&self, j: usize) -> Vec<i32> {
        (1..self.k).rev().map(|i| self.flat(i, j)).collect()
    }

    /// Image of `σ_i`, `i < k`: `ρ_{i,1} ... ρ_{i,n}`.
    pub fn generator_image(&self, i: usize) -> Vec<i32> {
        (1..=self.n).map(|j| self.flat(i, j)).collect()
    }

    /// Image of `σ_k^2`: `ρ_{k,n}^2`, then the right-lexicographic descending product
    /// from `(k-1,n)` down to `(k,1)`, then `β_2^-1 ... β_n^-1`.
    pub fn twist_image(&self) -> Vec<i32> {
        let top = self.flat(self.k, self.n);
        let mut w = vec![top, top];
        w.extend((self.k as i32..top).rev());
        for j in 2..=self.n {
            w.extend(self.beta(j).iter().rev().map(|x| -x));
        }
        w
    }

    /// Circular-letter word for each native letter `1..nk` (index 0 unused).
    pub fn to_circular(&self) -> Vec<Vec<i32>> {
        let c = CircularGrid { n: self.n, k: self.k };
        let mut table = vec![Vec::new(); self.n * self.k + 1];
        let beta_circ = |j: usize| -> Vec<i32> { (1..self.k).rev().flat_map(|i| c.alpha(i, j)).collect() };
        for j in 1..=self.n {
            for i in 1..self.k {
                table[self.flat(i, j) as usize] = c.alpha(i, j);
            }
            let sigma = c.flat((self.k, j)) as i32;
            table[self.flat(self.k, j) as usize] = if j < self.n {
                // ρ_{k,j} = β_{j+1}^-1 σ_{k,j} β_{j+1}
                let b = beta_circ(j + 1);
                let inv: Vec<i32> = b.iter().rev().map(|x| -x).collect();
                star(&inv, &[sigma])
            } else {
                vec![sigma]
            };
        }
        table
    }
}
