//! Circular generator grid: `σ_{i,j}` has flat index `(i-1)n + j`, fixed strand last.

/// Grid position `(i, j)` with `1 <= i <= k`, `1 <= j <= n`.
pub type Cell = (usize, usize);

#[derive(Clone, Copy, Debug)]
pub struct CircularGrid {
    pub n: usize,
    pub k: usize,
}

impl CircularGrid {
    pub fn flat(&self, (i, j): Cell) -> usize {
        (i - 1) * self.n + j
    }

    fn cell(&self, f: usize) -> Cell {
        ((f - 1) / self.n + 1, (f - 1) % self.n + 1)
    }

    pub fn next(&self, c: Cell) -> Cell {
        self.cell(self.flat(c) + 1)
    }

    /// Flat indices from `a` to `b` in left-lexicographic order (empty if `a > b`).
    fn span(&self, a: Cell, b: Cell) -> std::ops::RangeInclusive<usize> {
        self.flat(a)..=self.flat(b)
    }

    /// `σ_a ... σ_b`
    pub fn p(&self, a: Cell, b: Cell) -> Vec<i32> {
        self.span(a, b).map(|f| f as i32).collect()
    }

    /// `σ_a^-1 ... σ_b^-1`
    pub fn p_bar(&self, a: Cell, b: Cell) -> Vec<i32> {
        self.span(a, b).map(|f| -(f as i32)).collect()
    }

    /// `σ_b ... σ_a`
    pub fn m(&self, a: Cell, b: Cell) -> Vec<i32> {
        self.span(a, b).rev().map(|f| f as i32).collect()
    }

    /// `σ_b^-1 ... σ_a^-1`
    pub fn m_bar(&self, a: Cell, b: Cell) -> Vec<i32> {
        self.span(a, b).rev().map(|f| -(f as i32)).collect()
    }

    fn last(&self) -> Cell {
        (self.k, self.n)
    }

    /// `(self.k, self.n - 1)`, the cell before the last one.
    fn before_last(&self) -> Cell {
        self.cell(self.flat(self.last()) - 1)
    }

    /// Half twist swapping the points of `(i, j)` and `(i+1, j)`:
    /// `(P_{i+1,j}^{k,n} P̄_{i,j}^{k,n}) * σ_{k,n}`.
    pub fn alpha(&self, i: usize, j: usize) -> Vec<i32> {
        let mut g = self.p((i + 1, j), self.last());
        g.extend(self.p_bar((i, j), self.last()));
        star(&g, &[self.flat(self.last()) as i32])
    }

    /// `(P_{i+1,j}^{k,n-1} σ_{k,n}^2 M_{c+}^{k,n-1} P̄_{i,j}^{c}) * σ_c` for a pivot cell `c >= (i,j)`.
    pub fn alpha_pivot(&self, i: usize, j: usize, c: Cell) -> Vec<i32> {
        let top = self.flat(self.last()) as i32;
        let mut g = self.p((i + 1, j), self.before_last());
        g.extend([top, top]);
        g.extend(self.m(self.next(c), self.before_last()));
        g.extend(self.p_bar((i, j), c));
        star(&g, &[self.flat(c) as i32])
    }

    /// `(P_{i+1,j}^{k,n-1} σ_{k,n}^2 M_{i,j}^{k,n-1}) * σ_{i,j}`.
    pub fn alpha_local(&self, i: usize, j: usize) -> Vec<i32> {
        let top = self.flat(self.last()) as i32;
        let mut g = self.p((i + 1, j), self.before_last());
        g.extend([top, top]);
        g.extend(self.m((i, j), self.before_last()));
        star(&g, &[self.flat((i, j)) as i32])
    }

    /// Image of `σ_k^2`: `σ_{k,n}^2 σ_{k,n-1} ... σ_{k,1}`.
    pub fn twist_image(&self) -> Vec<i32> {
        let top = self.flat(self.last()) as i32;
        let mut w = vec![top, top];
        w.extend((1..self.n).rev().map(|j| self.flat((self.k, j)) as i32));
        w
    }
}

/// `g w g^-1` on raw letters.
pub(crate) fn star(g: &[i32], w: &[i32]) -> Vec<i32> {
    let mut out = g.to_vec();
    out.extend_from_slice(w);
    out.extend(g.iter().rev().map(|x| -x));
    out
}
