//! Counting homomorphisms into small symmetric groups.

use super::GroupPresentation;
use crate::error::{Error, Result};
use crate::par::{self, Exec};

type Perm = Vec<u8>;

fn all_perms(m: usize) -> Vec<Perm> {
    fn rec(cur: &mut Perm, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                cur.push(x as u8);
                rec(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; m], &mut out);
    out
}

fn compose(a: &Perm, b: &Perm) -> Perm {
    a.iter().map(|&x| b[x as usize]).collect()
}

fn inverse(a: &Perm) -> Perm {
    let mut inv = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x as usize] = i as u8;
    }
    inv
}

fn generated_order(gens: &[Perm], m: usize) -> usize {
    let id: Perm = (0..m as u8).collect();
    let mut seen = std::collections::HashSet::from([id.clone()]);
    let mut queue = vec![id];
    while let Some(p) = queue.pop() {
        for g in gens {
            let q = compose(&p, g);
            if seen.insert(q.clone()) {
                queue.push(q);
            }
        }
    }
    seen.len()
}

/// Homomorphisms into the symmetric group, and how many of them are onto.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomCount {
    pub total: u64,
    pub surjective: u64,
}

/// Enumerate generator images in `S_m` (`m <= 4`, at most 6 generators), checking relators as soon as
/// all their generators are assigned.
pub fn count_homs_to_symmetric(p: &GroupPresentation, m: usize, exec: Exec) -> Result<HomCount> {
    if !(1..=4).contains(&m) {
        return Err(Error::invalid(format!("symmetric degree must be 1..=4, got {m}")));
    }
    let g = p.generators.len();
    if g > 6 {
        return Err(Error::invalid(format!("at most 6 generators supported, got {g}")));
    }
    let perms = all_perms(m);
    let full: usize = (1..=m).product();
    // relators grouped by the last generator they use
    let mut by_depth: Vec<Vec<&[i32]>> = vec![Vec::new(); g + 1];
    for r in &p.relators {
        by_depth[r.max_generator()].push(r.letters());
    }
    if g == 0 {
        return Ok(HomCount { total: 1, surjective: (full == 1) as u64 });
    }
    let ctx = Ctx { perms: &perms, by_depth: &by_depth, g, m, full };
    let parts = par::map_range(exec, perms.len(), |first| {
        let mut assign = vec![perms[first].clone()];
        let mut inv = vec![inverse(&perms[first])];
        let mut acc = HomCount { total: 0, surjective: 0 };
        ctx.search(&mut assign, &mut inv, &mut acc);
        acc
    });
    Ok(parts.into_iter().fold(HomCount { total: 0, surjective: 0 }, |a, b| HomCount {
        total: a.total + b.total,
        surjective: a.surjective + b.surjective,
    }))
}

struct Ctx<'a> {
    perms: &'a [Perm],
    by_depth: &'a [Vec<&'a [i32]>],
    g: usize,
    m: usize,
    full: usize,
}

impl Ctx<'_> {
    fn holds(&self, assign: &[Perm], inv: &[Perm]) -> bool {
        let depth = assign.len();
        self.by_depth[depth].iter().all(|r| {
            let mut cur: Perm = (0..self.m as u8).collect();
            for &x in r.iter() {
                let i = x.unsigned_abs() as usize - 1;
                cur = compose(&cur, if x > 0 { &assign[i] } else { &inv[i] });
            }
            cur.iter().enumerate().all(|(i, &y)| i == y as usize)
        })
    }

    fn search(&self, assign: &mut Vec<Perm>, inv: &mut Vec<Perm>, acc: &mut HomCount) {
        if !self.holds(assign, inv) {
            return;
        }
        if assign.len() == self.g {
            acc.total += 1;
            if generated_order(assign, self.m) == self.full {
                acc.surjective += 1;
            }
            return;
        }
        for p in self.perms {
            assign.push(p.clone());
            inv.push(inverse(p));
            self.search(assign, inv, acc);
            assign.pop();
            inv.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free::FreeWord;

    #[test]
    fn free_group_on_two() {
        let p = GroupPresentation { generators: vec!["a".into(), "b".into()], relators: vec![] };
        let c = count_homs_to_symmetric(&p, 3, Exec::Sequential).unwrap();
        assert_eq!(c.total, 36);
        // pairs generating S3: 36 - (pairs inside a proper subgroup) = 18
        assert_eq!(c.surjective, 18);
    }

    #[test]
    fn cyclic_group_has_no_surjection() {
        let p = GroupPresentation {
            generators: vec!["a".into()],
            relators: vec![FreeWord::from_letters([1; 6])],
        };
        let c = count_homs_to_symmetric(&p, 3, Exec::Parallel).unwrap();
        assert_eq!(c.total, 6);
        assert_eq!(c.surjective, 0);
    }
}
