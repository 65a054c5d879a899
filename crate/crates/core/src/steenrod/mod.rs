//! The mod-2 Steenrod algebra in the Milnor basis, together with the
//! tri-grading conventions used by the motivic side of the pipeline.

mod milnor;
mod parse;

pub use milnor::{milnor_basis, milnor_product, multiply_profiles, MilnorElt, MAX_PROFILE_LEN};
pub use parse::{format_elt, parse_elt, ParseError};

/// Tri-degree (stem, Adams filtration, motivic weight).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriDegree {
    pub s: i32,
    pub f: i32,
    pub w: i32,
}

impl TriDegree {
    pub fn new(s: i32, f: i32, w: i32) -> Self {
        TriDegree { s, f, w }
    }

    /// Chow degree, zero exactly on the regraded classical subalgebra.
    pub fn chow(&self) -> i32 {
        self.s + self.f - 2 * self.w
    }
}

/// Regrading of a classical bidegree into the Chow-degree-zero motivic
/// tri-grading: `(s, f) -> (2s + f, f, s + f)`.
pub fn chow_regrade(s: i32, f: i32) -> TriDegree {
    assert!(s >= 0 && f >= 0);
    let t = TriDegree::new(2 * s + f, f, s + f);
    debug_assert_eq!(t.chow(), 0);
    t
}

/// A homogeneous element of the Steenrod algebra: a set of Milnor basis
/// elements of one internal degree. Addition is symmetric difference.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SteenrodElt {
    pub degree: u32,
    /// Sorted, deduplicated support.
    pub support: Vec<MilnorElt>,
}

impl SteenrodElt {
    pub fn zero(degree: u32) -> Self {
        SteenrodElt {
            degree,
            support: Vec::new(),
        }
    }

    pub fn from_basis(b: MilnorElt) -> Self {
        SteenrodElt {
            degree: b.degree(),
            support: vec![b],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn add_assign(&mut self, other: &SteenrodElt) {
        if other.support.is_empty() {
            return;
        }
        if self.support.is_empty() {
            self.degree = other.degree;
        }
        debug_assert_eq!(self.degree, other.degree);
        let mut merged = Vec::with_capacity(self.support.len() + other.support.len());
        let (mut i, mut j) = (0, 0);
        while i < self.support.len() && j < other.support.len() {
            match self.support[i].cmp(&other.support[j]) {
                std::cmp::Ordering::Less => {
                    merged.push(self.support[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    merged.push(other.support[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        merged.extend_from_slice(&self.support[i..]);
        merged.extend_from_slice(&other.support[j..]);
        self.support = merged;
    }

    pub fn contains(&self, b: &MilnorElt) -> bool {
        self.support.binary_search(b).is_ok()
    }
}

/// A polynomial in τ over GF(2); exponents are bits of the mask.
///
/// τ has tri-degree (0, 0, -1): multiplying by τ lowers motivic weight by 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct TauPolynomial(pub u64);

impl TauPolynomial {
    pub const ZERO: TauPolynomial = TauPolynomial(0);
    pub const ONE: TauPolynomial = TauPolynomial(1);

    pub fn tau_power(k: u32) -> Self {
        TauPolynomial(1 << k)
    }

    pub fn add(self, other: Self) -> Self {
        TauPolynomial(self.0 ^ other.0)
    }

    /// Carry-less multiplication.
    pub fn mul(self, other: Self) -> Self {
        let mut acc = 0u64;
        let mut a = self.0;
        let mut shift = 0;
        while a != 0 {
            if a & 1 == 1 {
                acc ^= other.0 << shift;
            }
            a >>= 1;
            shift += 1;
        }
        TauPolynomial(acc)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Weight shift of the lowest term: τ^k shifts weight by -k.
    pub fn min_weight_shift(self) -> Option<i32> {
        if self.0 == 0 {
            None
        } else {
            Some(-(self.0.trailing_zeros() as i32))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chow_regrade_formula() {
        assert_eq!(chow_regrade(0, 0), TriDegree::new(0, 0, 0));
        // Classical h3^2 at (14,2) lands on the motivic h4^2 position.
        assert_eq!(chow_regrade(14, 2), TriDegree::new(30, 2, 16));
        assert_eq!(chow_regrade(3, 3), TriDegree::new(9, 3, 6));
    }

    #[test]
    fn chow_regrade_always_chow_zero() {
        for s in 0..40 {
            for f in 0..20 {
                assert_eq!(chow_regrade(s, f).chow(), 0);
            }
        }
    }

    #[test]
    fn tau_multiplication_shifts() {
        let t = TauPolynomial::tau_power(1);
        let t3 = t.mul(t).mul(t);
        assert_eq!(t3, TauPolynomial::tau_power(3));
        assert_eq!(t3.min_weight_shift(), Some(-3));
        assert!(t.add(t).is_zero());
    }

    #[test]
    fn steenrod_addition_is_self_inverse() {
        let b = milnor_basis(3);
        let mut e = SteenrodElt::zero(3);
        for &x in &b {
            e.add_assign(&SteenrodElt::from_basis(x));
        }
        let mut doubled = e.clone();
        doubled.add_assign(&e);
        assert!(doubled.is_zero());
    }
}
