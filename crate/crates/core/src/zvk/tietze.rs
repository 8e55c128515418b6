//! Deterministic Tietze moves of type I and II.

use std::collections::BTreeSet;

use super::GroupPresentation;
use crate::free::FreeWord;

/// Canonical representative of a relator up to rotation and inversion.
fn canonical(w: &FreeWord) -> FreeWord {
    let inv = w.inverse();
    (0..w.len())
        .flat_map(|k| [w.rotated(k), inv.rotated(k)])
        .min()
        .unwrap_or_default()
}

/// Cyclically reduce, drop trivial relators and duplicates.
pub fn clean(p: &GroupPresentation) -> GroupPresentation {
    let mut seen = BTreeSet::new();
    let mut relators = Vec::new();
    for r in &p.relators {
        let r = r.cyclically_reduced();
        if r.is_empty() {
            continue;
        }
        if seen.insert(canonical(&r)) {
            relators.push(r);
        }
    }
    GroupPresentation { generators: p.generators.clone(), relators }
}

/// Eliminate generator `g` (1-based) using relator `r`, in which it occurs exactly once.
fn eliminate(p: &GroupPresentation, g: usize, r: usize) -> GroupPresentation {
    let rel = p.relators[r].letters();
    let pos = rel.iter().position(|x| x.unsigned_abs() as usize == g).expect("occurs once");
    // rel = u g^e v = 1  =>  g^e = u^-1 v^-1  =>  g = (v u)^-e
    let u = FreeWord::from_letters(rel[..pos].iter().copied());
    let v = FreeWord::from_letters(rel[pos + 1..].iter().copied());
    let vu = v.mul(&u);
    let value = if rel[pos] > 0 { vu.inverse() } else { vu };
    let n = p.generators.len();
    let images: Vec<FreeWord> = (1..=n)
        .map(|i| if i == g { value.clone() } else { FreeWord::generator(i) })
        .collect();
    let relabel = |i: usize| if i > g { i - 1 } else { i };
    let relators = p
        .relators
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != r)
        .map(|(_, w)| w.substitute(&images, usize::MAX).expect("no cap").relabel(relabel))
        .collect();
    let mut generators = p.generators.clone();
    generators.remove(g - 1);
    GroupPresentation { generators, relators }
}

/// Up to `budget` eliminations; each removes the smallest-index generator occurring
/// exactly once in some relator, using the shortest such relator.
pub fn simplify(p: &GroupPresentation, budget: usize) -> GroupPresentation {
    let mut cur = clean(p);
    for _ in 0..budget {
        let mut pick = None;
        'gens: for g in 1..=cur.generators.len() {
            let mut best: Option<usize> = None;
            for (j, r) in cur.relators.iter().enumerate() {
                if r.occurrences(g) == 1 && best.is_none_or(|b| r.len() < cur.relators[b].len()) {
                    best = Some(j);
                }
            }
            if let Some(j) = best {
                pick = Some((g, j));
                break 'gens;
            }
        }
        let Some((g, j)) = pick else { break };
        cur = clean(&eliminate(&cur, g, j));
    }
    cur
}
