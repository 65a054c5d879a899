//! The Steenrod algebra in the admissible basis with Adem-relation
//! rewriting, plus the change of basis to the Milnor basis computed from the
//! dual coproduct. Used to verify Milnor-matrix products.

use crate::f2::{F2Matrix, F2Vector};
use crate::steenrod::{milnor_basis, MilnorElt, SteenrodElt};
use rustc_hash::FxHashMap;
use std::collections::BTreeSet;

fn binom_odd(n: i64, k: i64) -> bool {
    if k < 0 || n < 0 || k > n {
        return false;
    }
    n & k == k
}

/// An admissible monomial Sq^{i1} Sq^{i2} ... with i_k >= 2 i_{k+1}, i_k >= 1.
pub type Admissible = Vec<u32>;

/// Sum of admissible monomials, kept sorted and reduced mod 2.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AdemElt(pub BTreeSet<Admissible>);

impl AdemElt {
    fn toggle(&mut self, m: Admissible) {
        if !self.0.remove(&m) {
            self.0.insert(m);
        }
    }
}

/// Rewrites an arbitrary word of squares into the admissible basis.
pub fn admissibilize(word: &[u32]) -> AdemElt {
    let mut out = AdemElt::default();
    let mut stack: Vec<Vec<u32>> = vec![word.iter().copied().filter(|&x| x != 0).collect()];
    while let Some(w) = stack.pop() {
        match (0..w.len().saturating_sub(1)).find(|&k| w[k] < 2 * w[k + 1]) {
            None => out.toggle(w),
            Some(k) => {
                let (a, b) = (w[k] as i64, w[k + 1] as i64);
                for c in 0..=(a / 2) {
                    if !binom_odd(b - c - 1, a - 2 * c) {
                        continue;
                    }
                    let mut nw: Vec<u32> = Vec::with_capacity(w.len());
                    nw.extend_from_slice(&w[..k]);
                    nw.push((a + b - c) as u32);
                    if c > 0 {
                        nw.push(c as u32);
                    }
                    nw.extend_from_slice(&w[k + 2..]);
                    stack.push(nw);
                }
            }
        }
    }
    out
}

/// Product in the admissible basis.
pub fn adem_product(x: &AdemElt, y: &AdemElt) -> AdemElt {
    let mut out = AdemElt::default();
    for a in &x.0 {
        for b in &y.0 {
            let word: Vec<u32> = a.iter().chain(b.iter()).copied().collect();
            for m in admissibilize(&word).0 {
                out.toggle(m);
            }
        }
    }
    out
}

fn admissibles_of_degree(d: u32) -> Vec<Admissible> {
    // Admissible words with sum d: first entry i1, then an admissible word
    // of degree d - i1 whose first entry is <= i1/2.
    fn rec(d: u32, max_next_double: Option<u32>, cur: &mut Vec<u32>, out: &mut Vec<Admissible>) {
        if d == 0 {
            out.push(cur.clone());
            return;
        }
        let hi = match max_next_double {
            Some(m) => m.min(d),
            None => d,
        };
        for i in 1..=hi {
            cur.push(i);
            rec(d - i, Some(i / 2), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, None, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Monomials in the dual Steenrod algebra, as exponent vectors of ξ_i.
type DualMonomial = Vec<u32>;

fn dual_degree(m: &[u32]) -> u32 {
    m.iter()
        .enumerate()
        .map(|(i, &e)| e * ((1 << (i + 1)) - 1))
        .sum()
}

fn trim(mut m: DualMonomial) -> DualMonomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

/// ψ(ξ_n) = Σ_{i=0..n} ξ_{n-i}^{2^i} ⊗ ξ_i, extended multiplicatively.
fn coproduct(m: &[u32]) -> Vec<(DualMonomial, DualMonomial)> {
    let mut acc: FxHashMap<(DualMonomial, DualMonomial), bool> = FxHashMap::default();
    acc.insert((vec![], vec![]), true);
    for (idx, &e) in m.iter().enumerate() {
        let n = idx + 1;
        // ψ(ξ_n) terms: (ξ_{n-i}^{2^i}, ξ_i).
        let mut terms: Vec<(DualMonomial, DualMonomial)> = Vec::new();
        for i in 0..=n {
            let mut left = vec![0u32; n - i];
            if n - i > 0 {
                left[n - i - 1] = 1 << i;
            }
            let mut right = vec![0u32; i];
            if i > 0 {
                right[i - 1] = 1;
            }
            terms.push((left, right));
        }
        for _ in 0..e {
            let mut next: FxHashMap<(DualMonomial, DualMonomial), bool> = FxHashMap::default();
            for ((l, r), v) in &acc {
                if !v {
                    continue;
                }
                for (tl, tr) in &terms {
                    let nl = mono_mul(l, tl);
                    let nr = mono_mul(r, tr);
                    let entry = next.entry((nl, nr)).or_insert(false);
                    *entry = !*entry;
                }
            }
            acc = next;
        }
    }
    acc.into_iter()
        .filter_map(|(k, v)| if v { Some(k) } else { None })
        .collect()
}

fn mono_mul(a: &[u32], b: &[u32]) -> DualMonomial {
    let len = a.len().max(b.len());
    let mut out = vec![0u32; len];
    for (i, o) in out.iter_mut().enumerate() {
        *o = a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0);
    }
    trim(out)
}

/// ⟨Sq^{i1}···Sq^{ik}, m⟩ via iterated coproduct: the coefficient of
/// ξ1^{i1} ⊗ ... ⊗ ξ1^{ik}.
fn pair_admissible(word: &[u32], m: &[u32]) -> bool {
    fn rec(word: &[u32], m: &[u32]) -> bool {
        if word.is_empty() {
            return m.is_empty();
        }
        if word.len() == 1 {
            return *m == [word[0]] || (word[0] == 0 && m.is_empty());
        }
        let mut acc = false;
        for (l, r) in coproduct(m) {
            if l == [word[0]] || (word[0] == 0 && l.is_empty()) {
                if rec(&word[1..], &r) {
                    acc = !acc;
                }
            }
        }
        acc
    }
    rec(word, &trim(m.to_vec()))
}

/// Expresses each Milnor basis element of degree d in the admissible basis.
pub fn milnor_to_admissible(d: u32) -> FxHashMap<MilnorElt, AdemElt> {
    let adms = admissibles_of_degree(d);
    let milnors = milnor_basis(d);
    let n = adms.len();
    assert_eq!(n, milnors.len());
    // Pairing matrix P[a][m] = <adm_a, ξ^{profile of milnor_m}>.
    let mut p = F2Matrix::zeros(n, n);
    for (ai, a) in adms.iter().enumerate() {
        for (mi, m) in milnors.iter().enumerate() {
            let profile: Vec<u32> = (0..m.len()).map(|i| m.0[i] as u32).collect();
            if pair_admissible(a, &profile) {
                p.set(ai, mi, true);
            }
        }
    }
    // Sq(R) = Σ_a c_a · adm_a with Σ_a c_a P[a][E] = δ_{R,E}: solve columns of
    // the identity against P^T.
    let pt = p.transpose();
    let solver = pt.solver();
    let mut out = FxHashMap::default();
    for (mi, m) in milnors.iter().enumerate() {
        let mut rhs = F2Vector::zeros(n);
        rhs.set(mi, true);
        let c = solver.solve(&rhs).expect("pairing matrix is invertible");
        let mut e = AdemElt::default();
        for ai in c.iter_ones() {
            e.toggle(adms[ai].clone());
        }
        out.insert(*m, e);
    }
    out
}

/// Converts a homogeneous Steenrod element to the admissible basis.
pub fn to_admissible(e: &SteenrodElt) -> AdemElt {
    let table = milnor_to_admissible(e.degree);
    let mut out = AdemElt::default();
    for b in &e.support {
        for m in &table[b].0 {
            out.toggle(m.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::steenrod::milnor_product;

    #[test]
    fn adem_sq1_sq1() {
        assert!(admissibilize(&[1, 1]).0.is_empty());
    }

    #[test]
    fn adem_sq2_sq2() {
        // Sq^2 Sq^2 = Sq^3 Sq^1.
        let e = admissibilize(&[2, 2]);
        assert_eq!(e.0.into_iter().collect::<Vec<_>>(), vec![vec![3, 1]]);
    }

    #[test]
    fn basis_counts_match() {
        for d in 0..14 {
            assert_eq!(
                admissibles_of_degree(d).len(),
                milnor_basis(d).len(),
                "degree {d}"
            );
        }
    }

    #[test]
    fn milnor_products_agree_with_adem_small() {
        // Independent verification of the Milnor multiplication: convert both
        // factors to the admissible basis, multiply by Adem rewriting, and
        // compare with the converted Milnor-matrix product.
        for d1 in 1..8u32 {
            for d2 in 1..8u32.min(13 - d1) {
                for a in milnor_basis(d1) {
                    for b in milnor_basis(d2) {
                        let via_milnor = to_admissible(&milnor_product(a, b));
                        let via_adem = adem_product(
                            &to_admissible(&SteenrodElt::from_basis(a)),
                            &to_admissible(&SteenrodElt::from_basis(b)),
                        );
                        assert_eq!(via_milnor, via_adem, "{a:?} · {b:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn sq_0_1_is_milnor_primitive_q1() {
        // Sq(0,1) = Sq^3 + Sq^2 Sq^1.
        let table = milnor_to_admissible(3);
        let q1 = &table[&MilnorElt::from_profile(&[0, 1])];
        let expected: BTreeSet<Admissible> = [vec![3], vec![2, 1]].into_iter().collect();
        assert_eq!(q1.0, expected);
    }
}
