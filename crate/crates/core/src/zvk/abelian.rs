//! Smith normal form of the relator exponent matrix.

use super::GroupPresentation;

/// Diagonal of the Smith normal form of an integer matrix (`rows x cols`).
pub fn smith_diagonal(mut a: Vec<Vec<i128>>, cols: usize) -> Vec<i128> {
    let rows = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest non-zero absolute value in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            let q = a[i][t] / a[t][t];
            if q != 0 {
                let (top, rest) = a.split_at_mut(i);
                for (x, y) in rest[0][t..cols].iter_mut().zip(&top[t][t..cols]) {
                    *x -= q * y;
                }
            }
            clean &= a[i][t] == 0;
        }
        for j in t + 1..cols {
            let q = a[t][j] / a[t][t];
            if q != 0 {
                for row in a.iter_mut().skip(t) {
                    row[j] -= q * row[t];
                }
            }
            clean &= a[t][j] == 0;
        }
        if !clean {
            continue;
        }
        // the pivot must divide the rest of the block
        let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % a[t][t] != 0));
        if let Some(i) = bad {
            let (top, rest) = a.split_at_mut(i);
            for (x, y) in top[t][t..cols].iter_mut().zip(&rest[0][t..cols]) {
                *x += y;
            }
            continue;
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

/// Invariant factors of the abelianization: torsion orders (ascending, 1s omitted) then a `0` per free factor.
pub fn abelianize(p: &GroupPresentation) -> Vec<u64> {
    let g = p.generators.len();
    let matrix: Vec<Vec<i128>> = p
        .relators
        .iter()
        .map(|r| (1..=g).map(|i| r.exponent_of(i) as i128).collect())
        .collect();
    let diag = smith_diagonal(matrix, g);
    let mut torsion: Vec<u64> = diag.iter().filter(|&&d| d > 1).map(|&d| d as u64).collect();
    torsion.sort_unstable();
    let free = g - diag.len();
    torsion.extend(std::iter::repeat_n(0, free));
    torsion
}
