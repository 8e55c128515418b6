//! Straight system for `n = 2`: points `t_1 > ... > t_k > 0 > -t_k > ... > -t_1`
//! on the real line, fixed strand `k+1` in the middle.

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::free::FreeWord;
use crate::oracle::{ArtinImages, DEFAULT_CAP};

#[derive(Clone, Copy, Debug)]
pub struct StraightGrid {
    pub k: usize,
}

impl StraightGrid {
    pub fn strands(&self) -> usize {
        2 * self.k + 1
    }

    /// `ς_i ς_{2k-i+1}`
    pub fn generator_image(&self, i: usize) -> Vec<i32> {
        vec![i as i32, (2 * self.k - i + 1) as i32]
    }

    /// `ς_{k+1} ς_k ς_{k+1}`
    pub fn twist_image(&self) -> Vec<i32> {
        let k = self.k as i32;
        vec![k + 1, k, k + 1]
    }

    fn pos_plus(&self, i: usize) -> usize {
        i
    }

    fn pos_minus(&self, i: usize) -> usize {
        2 * self.k + 2 - i
    }

    fn pos_zero(&self) -> usize {
        self.k + 1
    }

    /// Circular geometric basis written in the straight meridians.
    ///
    /// The circular chain visits `t_1, -t_1, t_2, -t_2, ..., t_k, -t_k, 0`. With downward
    /// cuts from every point, the path prefix picks up a meridian whenever it crosses a cut.
    fn circular_basis(&self) -> Vec<FreeWord> {
        let k = self.k;
        let m = |p: usize| FreeWord::generator(p);
        let mut prefix = FreeWord::identity();
        let mut basis = Vec::with_capacity(self.strands());
        for i in 1..=k {
            let plus = m(self.pos_plus(i));
            basis.push(plus.star(&prefix));
            if i >= 2 {
                prefix = prefix.mul(&plus);
            }
            let minus = m(self.pos_minus(i));
            basis.push(minus.star(&prefix));
            prefix = prefix.mul(&minus);
            if i < k {
                for l in i + 1..=k {
                    prefix = prefix.mul(&m(self.pos_minus(l)));
                }
                prefix = prefix.mul(&m(self.pos_zero()));
                for l in (i + 2..=k).rev() {
                    prefix = prefix.mul(&m(self.pos_plus(l)));
                }
            }
        }
        basis.push(m(self.pos_zero()).star(&prefix));
        basis
    }

    /// Braid `V` with `act(V, μ_i)` the circular basis; a straight word `W` is then
    /// `V W V^-1` in circular letters.
    pub fn change_of_basis(&self) -> Result<BraidWord> {
        ArtinImages::from_words(self.circular_basis())
            .to_braid(DEFAULT_CAP)?
            .ok_or_else(|| Error::invalid("straight basis change did not reduce"))
    }
}
