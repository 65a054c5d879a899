use super::{F2Matrix, F2Vector};

/// A dense matrix with entries in Z/2^K.
///
/// Entries are stored reduced, `0 <= e < 2^K`. K is the 2-adic working
/// precision of the BP stage; reduction mod 2 must always yield a valid
/// `F2Matrix`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZModMatrix {
    pub modulus_exponent: u32,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl ZModMatrix {
    pub fn zeros(modulus_exponent: u32, rows: usize, cols: usize) -> Self {
        assert!(modulus_exponent >= 1 && modulus_exponent <= 63);
        ZModMatrix {
            modulus_exponent,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    fn mask(&self) -> u64 {
        (1u64 << self.modulus_exponent) - 1
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        let m = self.mask();
        self.entries[r * self.cols + c] = v & m;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: u64) {
        let m = self.mask();
        let e = &mut self.entries[r * self.cols + c];
        *e = (*e).wrapping_add(v) & m;
    }

    /// Reduction mod 2.
    pub fn reduce_mod2(&self) -> F2Matrix {
        let mut out = F2Matrix::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) & 1 == 1 {
                    out.set(r, c, true);
                }
            }
        }
        out
    }

    /// Reduction mod 2^k for k <= K.
    pub fn reduce_mod(&self, k: u32) -> ZModMatrix {
        assert!(k <= self.modulus_exponent && k >= 1);
        let mut out = ZModMatrix::zeros(k, self.rows, self.cols);
        for (i, &e) in self.entries.iter().enumerate() {
            out.entries[i] = e & out.mask();
        }
        out
    }

    pub fn mul(&self, other: &ZModMatrix) -> ZModMatrix {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.modulus_exponent, other.modulus_exponent);
        let mut out = ZModMatrix::zeros(self.modulus_exponent, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    out.add_to(r, c, a.wrapping_mul(other.get(k, c)));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let m = self.mask();
        (0..self.rows)
            .map(|r| {
                let mut acc = 0u64;
                for c in 0..self.cols {
                    acc = acc.wrapping_add(self.get(r, c).wrapping_mul(v[c]));
                }
                acc & m
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod2_reduction_is_valid_f2() {
        let mut m = ZModMatrix::zeros(8, 2, 2);
        m.set(0, 0, 255);
        m.set(0, 1, 254);
        m.set(1, 1, 3);
        let f = m.reduce_mod2();
        assert!(f.get(0, 0));
        assert!(!f.get(0, 1));
        assert!(f.get(1, 1));
    }

    #[test]
    fn lifting_commutes_with_arithmetic() {
        // Reducing a Z/2^{K+1} product mod 2^K equals the product of the
        // reductions.
        let mut a = ZModMatrix::zeros(9, 2, 3);
        let mut b = ZModMatrix::zeros(9, 3, 2);
        let mut x = 7u64;
        for r in 0..2 {
            for c in 0..3 {
                x = x.wrapping_mul(389).wrapping_add(17) % 512;
                a.set(r, c, x);
                b.set(c, r, (x * 5 + 3) % 512);
            }
        }
        let prod_hi = a.mul(&b).reduce_mod(8);
        let prod_lo = a.reduce_mod(8).mul(&b.reduce_mod(8));
        assert_eq!(prod_hi, prod_lo);
    }
}
