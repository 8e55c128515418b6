//! Zariski-van Kampen presentations of fundamental groups of curve complements.

mod abelian;
mod homs;
mod tietze;

use serde::{Deserialize, Serialize};

pub use abelian::{abelianize, smith_diagonal};
pub use homs::{count_homs_to_symmetric, HomCount};
pub use tietze::{clean, simplify as tietze_simplify};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::factorization::Factorization;
use crate::free::FreeWord;
use crate::oracle::{braids_equal, ArtinImages, DEFAULT_CAP};

/// Named generators and relators (words equal to 1).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<FreeWord>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<FreeWord>) -> Result<Self> {
        let mut names = generators.clone();
        names.sort();
        names.dedup();
        if names.len() != generators.len() {
            return Err(Error::invalid("generator names must be unique"));
        }
        if let Some(r) = relators.iter().find(|r| r.max_generator() > generators.len()) {
            return Err(Error::invalid(format!("relator {r} uses an unknown generator")));
        }
        Ok(GroupPresentation { generators, relators })
    }

    /// Relators that are not freely trivial.
    pub fn nontrivial_relators(&self) -> usize {
        self.relators.iter().filter(|r| !r.cyclically_reduced().is_empty()).count()
    }
}

fn meridian_names(d: usize) -> Vec<String> {
    (1..=d).map(|j| format!("m{j}")).collect()
}

fn images(f: &Factorization) -> Result<Vec<ArtinImages>> {
    f.entries().iter().map(|e| ArtinImages::of(e, DEFAULT_CAP)).collect()
}

/// `μ_d ... μ_1`
fn boundary(d: usize) -> FreeWord {
    FreeWord::from_letters((1..=d as i32).rev())
}

/// Affine complement: generators `μ_1..μ_d, γ_1..γ_r`; relators `γ_i^-1 μ_j γ_i act(τ_i, μ_j)^-1`.
pub fn presentation_affine(f: &Factorization) -> Result<GroupPresentation> {
    let all: Vec<usize> = (1..=f.len()).collect();
    presentation_fully_horizontal(f, &all)
}

/// Fully horizontal case: loop generators only for the `kept` entries (1-based); the other entries
/// contribute `μ_j = act(τ_i, μ_j)` for `j < d`.
pub fn presentation_fully_horizontal(f: &Factorization, kept: &[usize]) -> Result<GroupPresentation> {
    let d = f.strands();
    if let Some(&i) = kept.iter().find(|&&i| i == 0 || i > f.len()) {
        return Err(Error::invalid(format!("entry {i} out of range 1..={}", f.len())));
    }
    let imgs = images(f)?;
    let mut generators = meridian_names(d);
    let mut relators = Vec::new();
    for (i, img) in imgs.iter().enumerate() {
        match kept.iter().position(|&k| k == i + 1) {
            Some(slot) => {
                let g = FreeWord::generator(d + slot + 1);
                generators.push(format!("g{}", i + 1));
                for j in 1..=d {
                    let lhs = FreeWord::generator(j).conj(&g);
                    relators.push(lhs.mul(&img.images()[j - 1].inverse()));
                }
            }
            None => {
                for j in 1..d {
                    relators.push(FreeWord::generator(j).inverse().mul(&img.images()[j - 1]));
                }
            }
        }
    }
    GroupPresentation::new(generators, relators)
}

/// Projective complement: `μ_j = act(τ_i, μ_j)` for `j < d`, plus `μ_d ... μ_1 = 1`.
pub fn presentation_projective(f: &Factorization) -> Result<GroupPresentation> {
    let mut p = presentation_fully_horizontal(f, &[])?;
    p.relators.push(boundary(f.strands()));
    Ok(p)
}

/// Local description of one entry: `entry ≡ conjugator * local`, with `local` a positive word
/// in the generators `σ_j`, `j ∈ indices`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberData {
    pub conjugator: BraidWord,
    pub local: BraidWord,
    pub indices: Vec<usize>,
}

/// Relations only for `j ∈ s_i`, written in the basis `μ_l(i) = act(η_i^-1, μ_l)`, plus the boundary relator.
pub fn presentation_generic(f: &Factorization, data: &[FiberData]) -> Result<GroupPresentation> {
    let mut p = presentation_generic_affine(f, data)?;
    p.relators.push(boundary(f.strands()));
    Ok(p)
}

/// As [`presentation_generic`] without the boundary relator.
pub fn presentation_generic_affine(f: &Factorization, data: &[FiberData]) -> Result<GroupPresentation> {
    let d = f.strands();
    if data.len() != f.len() {
        return Err(Error::invalid(format!("{} fiber descriptions for {} entries", data.len(), f.len())));
    }
    let mut relators = Vec::new();
    for (i, (entry, fd)) in f.entries().iter().zip(data).enumerate() {
        if !fd.local.is_positive() {
            return Err(Error::invalid(format!("entry {}: local word is not positive", i + 1)));
        }
        if let Some(x) = fd.local.letters().iter().find(|&&x| !fd.indices.contains(&(x as usize))) {
            return Err(Error::invalid(format!("entry {}: letter s{x} outside the index set", i + 1)));
        }
        if !braids_equal(&fd.local.star(&fd.conjugator)?, entry)? {
            return Err(Error::mismatch(format!("entry {}: conjugator * local differs from the entry", i + 1)));
        }
        let basis = ArtinImages::of(&fd.conjugator.invert(), DEFAULT_CAP)?;
        let local = ArtinImages::of(&fd.local, DEFAULT_CAP)?;
        for &j in &fd.indices {
            if j == 0 || j >= d {
                return Err(Error::invalid(format!("entry {}: index {j} out of range", i + 1)));
            }
            let lhs = &basis.images()[j - 1];
            let rhs = basis.apply(&local.images()[j - 1], DEFAULT_CAP)?;
            relators.push(lhs.inverse().mul(&rhs));
        }
    }
    GroupPresentation::new(meridian_names(d), relators)
}
