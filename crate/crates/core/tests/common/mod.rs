//! Test-side oracles written independently of the library's own machinery.
#![allow(dead_code)]

use braidmon::{BraidWord, Factorization};

const CAP: usize = 20_000_000;

fn push_reduced(out: &mut Vec<i32>, x: i32) {
    if out.last() == Some(&-x) {
        out.pop();
    } else {
        out.push(x);
    }
}

fn inverse(w: &[i32]) -> Vec<i32> {
    w.iter().rev().map(|x| -x).collect()
}

/// Images of the free generators under a braid, built by substituting the classical
/// automorphisms `x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i` letter by letter.
pub fn artin_images(b: &BraidWord) -> Vec<Vec<i32>> {
    let d = b.strands();
    let mut images: Vec<Vec<i32>> = (1..=d as i32).map(|i| vec![i]).collect();
    for &x in b.letters() {
        let i = x.unsigned_abs() as i32;
        let sub = |g: i32| -> Vec<i32> {
            match (g == i, g == i + 1, x > 0) {
                (true, _, true) => vec![i, i + 1, -i],
                (_, true, true) => vec![i],
                (true, _, false) => vec![i + 1],
                (_, true, false) => vec![-(i + 1), i, i + 1],
                _ => vec![g],
            }
        };
        for img in images.iter_mut() {
            let mut out = Vec::with_capacity(img.len());
            for &y in img.iter() {
                let piece = if y > 0 { sub(y) } else { inverse(&sub(-y)) };
                for z in piece {
                    push_reduced(&mut out, z);
                }
            }
            assert!(out.len() <= CAP, "naive oracle image exceeded {CAP} letters");
            *img = out;
        }
    }
    images
}

pub fn naive_equal(a: &BraidWord, b: &BraidWord) -> bool {
    assert_eq!(a.strands(), b.strands());
    a.exponent_sum() == b.exponent_sum() && artin_images(a) == artin_images(b)
}

/// `(σ_{d-1} ... σ_1)^d`, written out here rather than taken from the library.
pub fn full_twist(d: usize) -> BraidWord {
    let round: Vec<i32> = (1..d as i32).rev().collect();
    BraidWord::new(d, round.repeat(d)).unwrap()
}

/// `τ_r ... τ_1`.
pub fn reversed_product(d: usize, items: &[BraidWord]) -> BraidWord {
    let letters = items.iter().rev().flat_map(|w| w.letters().iter().copied()).collect();
    BraidWord::new(d, letters).unwrap()
}

pub fn naive_generic(f: &Factorization) -> bool {
    naive_equal(&reversed_product(f.strands(), f.entries()), &full_twist(f.strands()))
}

/// 1-based indices where the lists differ.
pub fn naive_mismatches(got: &Factorization, expected: &Factorization) -> Vec<usize> {
    assert_eq!(got.len(), expected.len(), "list lengths differ");
    got.entries()
        .iter()
        .zip(expected.entries())
        .enumerate()
        .filter(|(_, (a, b))| !naive_equal(a, b))
        .map(|(i, _)| i + 1)
        .collect()
}

pub fn parse(d: usize, entries: &[&str]) -> Factorization {
    Factorization::parse(d, false, entries).unwrap()
}

/// Milnor number of `x^a + y^b` (or `y^a - x^b`): the number of monomials outside the
/// Jacobian ideal `(x^(a-1), y^(b-1))`, counted one by one.
pub fn milnor_brieskorn(a: u64, b: u64) -> u64 {
    let bound = a.max(b) + 2;
    let mut count = 0;
    for i in 0..bound {
        for j in 0..bound {
            let in_ideal = i >= a - 1 || j >= b - 1;
            if !in_ideal {
                count += 1;
            }
        }
    }
    count
}
