//! Exact linear algebra over GF(2) and over Z/2^K.
//!
//! Rows are packed into `u64` words. Row additions dominate the cost of the
//! resolution, so everything is built around word-wide XOR. Pivot choice is
//! deterministic (lowest column, then lowest row) so that results are
//! bit-identical across runs and thread counts.

mod zmod;

pub use zmod::ZModMatrix;

const BITS: usize = 64;

/// A vector over GF(2), bits packed into `u64` words.
///
/// Bits at positions `>= len` are kept zero; every mutating operation
/// restores that invariant.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct F2Vector {
    len: usize,
    words: Vec<u64>,
}

impl F2Vector {
    pub fn zeros(len: usize) -> Self {
        F2Vector {
            len,
            words: vec![0; len.div_ceil(BITS)],
        }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = F2Vector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Builds a vector of the given length with the listed bits set.
    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut v = F2Vector::zeros(len);
        for &i in support {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / BITS] >> (i % BITS) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, b: bool) {
        debug_assert!(i < self.len);
        let (w, s) = (i / BITS, i % BITS);
        if b {
            self.words[w] |= 1 << s;
        } else {
            self.words[w] &= !(1 << s);
        }
    }

    /// In-place addition, i.e. XOR. Self-inverse: `v += v` zeroes `v`.
    #[inline]
    pub fn add_assign(&mut self, other: &F2Vector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set bit, if any.
    pub fn first_one(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * BITS + b)
                }
            })
        })
    }

    /// Dot product over GF(2).
    pub fn dot(&self, other: &F2Vector) -> bool {
        debug_assert_eq!(self.len, other.len);
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= a & b;
        }
        acc.count_ones() % 2 == 1
    }

    /// Grows the vector to `len`, new bits zero.
    pub fn resize(&mut self, len: usize) {
        assert!(len >= self.len);
        self.len = len;
        self.words.resize(len.div_ceil(BITS), 0);
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }
}

impl std::fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", self.get(i) as u8)?;
        }
        Ok(())
    }
}

/// A dense matrix over GF(2) with bit-packed rows.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    row_data: Vec<F2Vector>,
}

/// Result of `F2Matrix::rref`.
pub struct Rref {
    pub reduced: F2Matrix,
    /// Pivot column per nonzero row, strictly increasing.
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        F2Matrix {
            rows,
            cols,
            row_data: vec![F2Vector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = F2Matrix::zeros(n, n);
        for i in 0..n {
            m.row_data[i].set(i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<F2Vector>, cols: usize) -> Self {
        for r in &rows {
            assert_eq!(r.len(), cols);
        }
        F2Matrix {
            rows: rows.len(),
            cols,
            row_data: rows,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &F2Vector {
        &self.row_data[i]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut F2Vector {
        &mut self.row_data[i]
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.row_data[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, b: bool) {
        self.row_data[r].set(c, b);
    }

    pub fn push_row(&mut self, row: F2Vector) {
        assert_eq!(row.len(), self.cols);
        self.row_data.push(row);
        self.rows += 1;
    }

    /// Matrix-vector product `m · v`.
    pub fn mul_vec(&self, v: &F2Vector) -> F2Vector {
        assert_eq!(v.len(), self.cols);
        let mut out = F2Vector::zeros(self.rows);
        for (i, row) in self.row_data.iter().enumerate() {
            if row.dot(v) {
                out.set(i, true);
            }
        }
        out
    }

    /// Reduced row-echelon form.
    ///
    /// Pivot search is column-major: for each column in ascending order, the
    /// first remaining row with a set bit becomes the pivot row. The row
    /// space is preserved and the result is canonical.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..m.cols {
            let Some(pr) = (next_row..m.rows).find(|&r| m.row_data[r].get(col)) else {
                continue;
            };
            m.row_data.swap(next_row, pr);
            let pivot_row = m.row_data[next_row].clone();
            for (r, row) in m.row_data.iter_mut().enumerate() {
                if r != next_row && row.get(col) {
                    row.add_assign(&pivot_row);
                }
            }
            pivots.push(col);
            next_row += 1;
            if next_row == m.rows {
                break;
            }
        }
        let rank = pivots.len();
        Rref {
            reduced: m,
            pivots,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of `{ v : m · v = 0 }`, one vector per non-pivot column, in
    /// ascending order of their free column.
    pub fn kernel_basis(&self) -> Vec<F2Vector> {
        let Rref {
            reduced, pivots, ..
        } = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut k = F2Vector::zeros(self.cols);
            k.set(free, true);
            for (&pc, row) in pivots.iter().zip(&reduced.row_data) {
                if row.get(free) {
                    k.set(pc, true);
                }
            }
            basis.push(k);
        }
        basis
    }

    /// Solves `m · x = rhs`. Returns `None` when `rhs` is outside the column
    /// space.
    pub fn solve(&self, rhs: &F2Vector) -> Option<F2Vector> {
        self.solver().solve(rhs)
    }

    /// Prepares a reusable factored solver for `m · x = rhs` queries.
    pub fn solver(&self) -> MatrixSolver {
        let mut echelon: Vec<(usize, F2Vector, F2Vector)> = Vec::new();
        for c in 0..self.cols {
            let mut col = F2Vector::zeros(self.rows);
            for r in 0..self.rows {
                if self.row_data[r].get(c) {
                    col.set(r, true);
                }
            }
            let mut comb = F2Vector::zeros(self.cols);
            comb.set(c, true);
            for (lead, e, ecomb) in &echelon {
                if col.get(*lead) {
                    col.add_assign(e);
                    comb.add_assign(ecomb);
                }
            }
            if let Some(lead) = col.first_one() {
                echelon.push((lead, col, comb));
            }
        }
        let lead_of = echelon
            .iter()
            .enumerate()
            .map(|(i, (l, _, _))| (*l, i))
            .collect();
        MatrixSolver {
            cols: self.cols,
            echelon,
            lead_of,
        }
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in self.row_data[r].iter_ones() {
                t.row_data[c].set(r, true);
            }
        }
        t
    }
}

impl std::fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in &self.row_data {
            writeln!(f, "{:?}", r)?;
        }
        Ok(())
    }
}

/// Reusable factored solver for a fixed matrix: echelonized columns with the
/// column combination that produced each of them.
pub struct MatrixSolver {
    cols: usize,
    echelon: Vec<(usize, F2Vector, F2Vector)>,
    lead_of: rustc_hash::FxHashMap<usize, usize>,
}

impl MatrixSolver {
    pub fn solve(&self, rhs: &F2Vector) -> Option<F2Vector> {
        let mut y = rhs.clone();
        let mut x = F2Vector::zeros(self.cols);
        while let Some(lead) = y.first_one() {
            let hit = &self.echelon[*self.lead_of.get(&lead)?];
            y.add_assign(&hit.1);
            x.add_assign(&hit.2);
        }
        Some(x)
    }

    /// True when `rhs` lies in the column space.
    pub fn in_image(&self, rhs: &F2Vector) -> bool {
        let mut y = rhs.clone();
        while let Some(lead) = y.first_one() {
            match self.lead_of.get(&lead) {
                Some(&i) => y.add_assign(&self.echelon[i].1),
                None => return false,
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m_from(rows: &[&[u8]]) -> F2Matrix {
        let cols = rows[0].len();
        F2Matrix::from_rows(
            rows.iter()
                .map(|r| F2Vector::from_bits(&r.iter().map(|&b| b == 1).collect::<Vec<_>>()))
                .collect(),
            cols,
        )
    }

    #[test]
    fn rref_identity() {
        let id = F2Matrix::identity(3);
        let r = id.rref();
        assert_eq!(r.reduced, id);
        assert_eq!(r.pivots, vec![0, 1, 2]);
        assert_eq!(r.rank, 3);
    }

    #[test]
    fn rref_zero() {
        let z = F2Matrix::zeros(2, 5);
        let r = z.rref();
        assert_eq!(r.reduced, z);
        assert!(r.pivots.is_empty());
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn rref_dependent_rows() {
        // rows 110, 011, 101: third = first + second.
        // Oracle: brute-force row space enumeration gives 4 elements => rank 2.
        let m = m_from(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let mut space = std::collections::HashSet::new();
        for mask in 0..8u32 {
            let mut v = F2Vector::zeros(3);
            for r in 0..3 {
                if mask >> r & 1 == 1 {
                    v.add_assign(m.row(r));
                }
            }
            space.insert(format!("{:?}", v));
        }
        assert_eq!(space.len(), 1 << 2);
        assert_eq!(m.rref().rank, 2);
    }

    #[test]
    fn kernel_identity_empty() {
        assert!(F2Matrix::identity(4).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_zero_full() {
        assert_eq!(F2Matrix::zeros(1, 3).kernel_basis().len(), 3);
    }

    #[test]
    fn kernel_single_row_exhaustive() {
        let m = m_from(&[&[1, 1, 1]]);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 2);
        // Exhaustive check over all 8 inputs: kernel has exactly 4 elements,
        // and the span of the basis equals it.
        let mut kernel = Vec::new();
        for mask in 0..8u32 {
            let v = F2Vector::from_bits(&[(mask & 1) == 1, (mask >> 1 & 1) == 1, (mask >> 2 & 1) == 1]);
            if m.mul_vec(&v).is_zero() {
                kernel.push(v);
            }
        }
        assert_eq!(kernel.len(), 4);
        for k in &basis {
            assert!(m.mul_vec(k).is_zero());
        }
    }

    #[test]
    fn solve_identity() {
        let m = F2Matrix::identity(5);
        let rhs = F2Vector::from_support(5, &[0, 3]);
        assert_eq!(m.solve(&rhs).unwrap(), rhs);
    }

    #[test]
    fn solve_zero_no_solution() {
        let m = F2Matrix::zeros(3, 2);
        let rhs = F2Vector::from_support(3, &[1]);
        assert!(m.solve(&rhs).is_none());
    }

    #[test]
    fn solve_matches_exhaustive_search() {
        // Fixed 6x6 rank-4 instance; verify against search over all 2^6 x.
        let m = m_from(&[
            &[1, 0, 1, 1, 0, 0],
            &[0, 1, 1, 0, 1, 0],
            &[1, 1, 0, 1, 1, 0],
            &[0, 0, 1, 0, 0, 1],
            &[1, 0, 0, 1, 0, 1],
            &[1, 1, 1, 1, 1, 1],
        ]);
        assert_eq!(m.rref().rank, 4);
        let solver = m.solver();
        for mask in 0..64u32 {
            let rhs = F2Vector::from_bits(&(0..6).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>());
            let brute = (0..64u32).find(|&xm| {
                let x = F2Vector::from_bits(&(0..6).map(|i| xm >> i & 1 == 1).collect::<Vec<_>>());
                m.mul_vec(&x) == rhs
            });
            match solver.solve(&rhs) {
                Some(x) => {
                    assert!(brute.is_some());
                    assert_eq!(m.mul_vec(&x), rhs);
                }
                None => assert!(brute.is_none()),
            }
        }
    }
}
