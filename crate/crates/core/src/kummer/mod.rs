//! Lifts of marked braids through the `n`-fold cyclic cover `z ↦ z^n` branched at the fixed point.

mod circular;
mod radial;
mod straight;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use circular::CircularGrid;
pub use radial::RadialGrid;
pub use straight::StraightGrid;

use crate::braid::{last_generator_runs, BraidWord, MarkedBraidWord};
use crate::error::{Error, Result};
use crate::factorization::Factorization;

/// Choice of arcs for the generators upstairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiagramSystem {
    Circular,
    Radial,
    Straight2,
}

impl FromStr for DiagramSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "circular" => Ok(DiagramSystem::Circular),
            "radial" => Ok(DiagramSystem::Radial),
            "straight2" => Ok(DiagramSystem::Straight2),
            _ => Err(Error::invalid(format!("unknown diagram system '{s}'"))),
        }
    }
}

impl fmt::Display for DiagramSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DiagramSystem::Circular => "circular",
            DiagramSystem::Radial => "radial",
            DiagramSystem::Straight2 => "straight2",
        };
        f.write_str(s)
    }
}

/// Letters of a lifted word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Letters {
    /// Artin generators of the circular chain; fixed strand last. Comparable across systems.
    #[default]
    Artin,
    /// The system's own generators (radial: right-lexicographic flattening; straight: real line order).
    Native,
}

/// Lift images of the base generators.
#[derive(Clone, Debug)]
struct Images {
    generators: Vec<BraidWord>,
    twist: BraidWord,
}

impl Images {
    fn lift(&self, b: &BraidWord, strands: usize) -> BraidWord {
        let k = self.generators.len() + 1;
        let mut letters = Vec::new();
        let l = b.letters();
        let runs = last_generator_runs(b);
        let mut runs = runs.iter().peekable();
        let mut i = 0;
        while i < l.len() {
            if let Some(&&(start, e)) = runs.peek() {
                if start == i {
                    let img = if e > 0 { self.twist.clone() } else { self.twist.invert() };
                    for _ in 0..(e.abs() / 2) {
                        letters.extend_from_slice(img.letters());
                    }
                    while i < l.len() && l[i].unsigned_abs() as usize == k {
                        i += 1;
                    }
                    runs.next();
                    continue;
                }
            }
            let x = l[i];
            let img = &self.generators[x.unsigned_abs() as usize - 1];
            if x > 0 {
                letters.extend_from_slice(img.letters());
            } else {
                letters.extend(img.letters().iter().rev().map(|y| -y));
            }
            i += 1;
        }
        BraidWord::new_unchecked(strands, letters)
    }
}

/// Cover degree, base strand count and generator system, with cached generator images.
#[derive(Clone, Debug)]
pub struct LiftSpec {
    n: usize,
    k: usize,
    system: DiagramSystem,
    native: Images,
    artin: Images,
    native_fixed: usize,
}

impl LiftSpec {
    pub fn new(n: usize, k: usize, system: DiagramSystem) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::invalid("cover degree and base strand count must be positive"));
        }
        if system == DiagramSystem::Straight2 && n != 2 {
            return Err(Error::invalid(format!("straight2 needs n = 2, got {n}")));
        }
        let d = n * k + 1;
        let word = |l: Vec<i32>| BraidWord::new_unchecked(d, l);
        if n == 1 {
            let imgs = Images {
                generators: (1..k as i32).map(|i| word(vec![i])).collect(),
                twist: word(vec![k as i32; 2]),
            };
            return Ok(LiftSpec { n, k, system, native: imgs.clone(), artin: imgs, native_fixed: d });
        }
        let (native, artin, native_fixed) = match system {
            DiagramSystem::Circular => {
                let g = CircularGrid { n, k };
                let imgs = Images {
                    generators: (1..k)
                        .map(|i| word((1..=n).flat_map(|j| g.alpha(i, j)).collect()))
                        .collect(),
                    twist: word(g.twist_image()),
                };
                (imgs.clone(), imgs, d)
            }
            DiagramSystem::Radial => {
                let g = RadialGrid { n, k };
                let native = Images {
                    generators: (1..k).map(|i| word(g.generator_image(i))).collect(),
                    twist: word(g.twist_image()),
                };
                let table = g.to_circular();
                let convert = |w: &BraidWord| substitute_letters(w, &table);
                let artin = Images {
                    generators: native.generators.iter().map(convert).collect(),
                    twist: convert(&native.twist),
                };
                (native, artin, d)
            }
            DiagramSystem::Straight2 => {
                let g = StraightGrid { k };
                let native = Images {
                    generators: (1..k).map(|i| word(g.generator_image(i))).collect(),
                    twist: word(g.twist_image()),
                };
                let v = g.change_of_basis()?;
                let convert = |w: &BraidWord| w.star(&v).expect("same strands").free_reduced();
                let artin = Images {
                    generators: native.generators.iter().map(convert).collect(),
                    twist: convert(&native.twist),
                };
                (native, artin, k + 1)
            }
        };
        Ok(LiftSpec { n, k, system, native, artin, native_fixed })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn system(&self) -> DiagramSystem {
        self.system
    }

    /// Strand count upstairs, `nk + 1`.
    pub fn strands(&self) -> usize {
        self.n * self.k + 1
    }

    /// Position of the fixed strand in native letters.
    pub fn native_fixed_strand(&self, letters: Letters) -> usize {
        match letters {
            Letters::Artin => self.strands(),
            Letters::Native => self.native_fixed,
        }
    }

    fn images(&self, letters: Letters) -> &Images {
        match letters {
            Letters::Artin => &self.artin,
            Letters::Native => &self.native,
        }
    }

    fn check_base(&self, b: &MarkedBraidWord) -> Result<()> {
        if b.k() != self.k {
            return Err(Error::invalid(format!("braid has k = {}, lift expects k = {}", b.k(), self.k)));
        }
        Ok(())
    }

    /// Image of `b` in the chosen letters.
    pub fn lift_word(&self, b: &MarkedBraidWord, letters: Letters) -> Result<BraidWord> {
        self.check_base(b)?;
        Ok(self.images(letters).lift(b.word(), self.strands()))
    }

    /// Image of `b` in Artin letters.
    pub fn lift_braid(&self, b: &MarkedBraidWord) -> Result<MarkedBraidWord> {
        let w = self.lift_word(b, Letters::Artin)?;
        Ok(MarkedBraidWord::new_unchecked(w))
    }

    /// Lift a marked factorization whose last entry is the braid around `x = 0`.
    pub fn lift_factorization(&self, t: &Factorization, letters: Letters) -> Result<Factorization> {
        if !t.is_marked() {
            return Err(Error::NotMarked("factorization is not marked".into()));
        }
        if t.is_empty() {
            return Err(Error::invalid("factorization needs the braid around 0 as last entry"));
        }
        if t.strands() != self.k + 1 {
            return Err(Error::invalid(format!(
                "factorization has {} strands, lift expects {}",
                t.strands(),
                self.k + 1
            )));
        }
        let lifted = t
            .entries()
            .iter()
            .map(|e| self.lift_word(&MarkedBraidWord::new(e.clone())?, letters))
            .collect::<Result<Vec<_>>>()?;
        let r = t.len() - 1;
        let around = &lifted[r];
        let mut entries = Vec::with_capacity(self.n * r + 1);
        let mut labels = Vec::with_capacity(self.n * r + 1);
        for j in 0..self.n {
            let g = around.pow(j as i64);
            for (m, e) in lifted[..r].iter().enumerate() {
                entries.push(e.conj(&g)?.free_reduced());
                let base = t.labels()[m].clone().unwrap_or_else(|| format!("entry {}", m + 1));
                labels.push(Some(format!("{base} / block {j}")));
            }
        }
        entries.push(around.pow(self.n as i64));
        let base = t.labels()[r].clone().unwrap_or_else(|| "x=0".into());
        labels.push(Some(format!("{base} lifted")));
        let marked = self.native_fixed_strand(letters) == self.strands();
        Factorization::new(self.strands(), entries, marked)?.with_labels(labels)
    }

    /// Lift, then forget the fixed strand.
    pub fn lift_forgetful(&self, t: &Factorization, letters: Letters) -> Result<Factorization> {
        self.lift_factorization(t, letters)?
            .forget_strand_all(self.native_fixed_strand(letters))
    }

    /// `L((Δ_{k+1}^2 c_T^-1)^n)` with `c_T` the pseudo-Coxeter element of all of `t`.
    pub fn infinity_braid(&self, t: &Factorization, letters: Letters) -> Result<BraidWord> {
        let twist = BraidWord::full_twist_marked(self.k);
        let base = twist.compose(&t.pseudo_coxeter().invert())?.pow(self.n as i64);
        self.lift_word(&MarkedBraidWord::new(base)?, letters)
    }
}

/// `Δ_d^2 (τ_r ... τ_1)^-1`.
pub fn infinity_braid(f: &Factorization) -> BraidWord {
    BraidWord::full_twist(f.strands())
        .compose(&f.pseudo_coxeter().invert())
        .expect("same strands")
}

fn substitute_letters(w: &BraidWord, table: &[Vec<i32>]) -> BraidWord {
    let mut out = Vec::new();
    for &x in w.letters() {
        let img = &table[x.unsigned_abs() as usize];
        if x > 0 {
            out.extend_from_slice(img);
        } else {
            out.extend(img.iter().rev().map(|y| -y));
        }
    }
    BraidWord::new_unchecked(w.strands(), out).free_reduced()
}
