//! The lambda algebra with the Curtis differential, as an Ext oracle.
//!
//! Admissible monomials λ_{i1}···λ_{if} (2 i_k >= i_{k+1}) of stem Σ i_k and
//! filtration f form a basis; d(λ_n) = Σ binom(n-j, j) λ_{n-j} λ_{j-1}
//! extended by the Leibniz rule and rewritten into the admissible basis.
//! Homology per bidegree is computed by sparse column reduction, so large
//! bidegrees are reachable that the cobar complex cannot touch.

use rustc_hash::FxHashMap;

fn binom_odd(n: i64, k: i64) -> bool {
    if k < 0 || n < 0 || k > n {
        return false;
    }
    n & k == k
}

/// Packed admissible monomial: 6 bits per index, length <= 21.
fn pack(word: &[u8]) -> u128 {
    let mut key: u128 = 1; // leading sentinel keeps lengths distinct
    for &i in word {
        key = key << 6 | (i as u128);
    }
    key
}

/// Rewrites a (possibly inadmissible) word into admissible monomials mod 2.
fn admissibilize(word: &[u8], out: &mut FxHashMap<u128, bool>) {
    let mut stack: Vec<Vec<u8>> = vec![word.to_vec()];
    while let Some(w) = stack.pop() {
        match (0..w.len().saturating_sub(1)).find(|&k| w[k + 1] > 2 * w[k]) {
            None => {
                let e = out.entry(pack(&w)).or_insert(false);
                *e = !*e;
            }
            Some(k) => {
                // λ_i λ_{2i+1+n} = Σ_j binom(n-1-j, j) λ_{i+n-j} λ_{2i+1+j}
                let i = w[k] as i64;
                let n = w[k + 1] as i64 - 2 * i - 1;
                debug_assert!(n >= 0);
                for j in 0..=n {
                    if !binom_odd(n - 1 - j, j) {
                        continue;
                    }
                    let mut nw = w.clone();
                    nw[k] = (i + n - j) as u8;
                    nw[k + 1] = (2 * i + 1 + j) as u8;
                    stack.push(nw);
                }
            }
        }
    }
}

/// d(λ_n) as a list of (a, b) with λ_a λ_b terms.
fn d_lambda(n: u8) -> Vec<(u8, u8)> {
    let n = n as i64;
    let mut out = Vec::new();
    for j in 1..=n {
        if binom_odd(n - j, j) {
            out.push(((n - j) as u8, (j - 1) as u8));
        }
    }
    out
}

/// Differential of an admissible monomial, as admissible monomials mod 2.
fn differential(word: &[u8], out: &mut FxHashMap<u128, bool>) {
    for k in 0..word.len() {
        for (a, b) in d_lambda(word[k]) {
            let mut w = Vec::with_capacity(word.len() + 1);
            w.extend_from_slice(&word[..k]);
            w.push(a);
            w.push(b);
            w.extend_from_slice(&word[k + 1..]);
            admissibilize(&w, out);
        }
    }
}

pub struct LambdaComplex {
    /// Per-bidegree column-rank cache: rank of d out of (s, f).
    rank_cache: FxHashMap<(u32, u32), usize>,
    /// Budget on the larger of source/target dimension per rank call.
    pub max_dim: u64,
}

/// Basis of admissible monomials with Σ i = s and length f, sorted by the
/// packed key.
pub fn basis(s: u32, f: u32) -> Vec<Vec<u8>> {
    fn rec(prev: u32, s_left: u32, slots: u32, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if slots == 0 {
            if s_left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let hi = (2 * prev).min(s_left);
        for i in 0..=hi {
            cur.push(i as u8);
            rec(i, s_left - i, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if f == 0 {
        if s == 0 {
            out.push(vec![]);
        }
        return out;
    }
    for i1 in 0..=s {
        let mut cur = vec![i1 as u8];
        rec(i1, s - i1, f - 1, &mut cur, &mut out);
    }
    out.sort_by_key(|w| pack(w));
    out
}

pub fn dim(s: u32, f: u32) -> u64 {
    // dp over (last index, remaining stem)
    if f == 0 {
        return (s == 0) as u64;
    }
    let mut dp: FxHashMap<(u32, u32), u64> = FxHashMap::default();
    for i1 in 0..=s {
        *dp.entry((i1, s - i1)).or_insert(0) += 1;
    }
    for _ in 1..f {
        let mut nd: FxHashMap<(u32, u32), u64> = FxHashMap::default();
        for (&(last, rem), &c) in &dp {
            for n in 0..=(2 * last).min(rem) {
                *nd.entry((n, rem - n)).or_insert(0) += c;
            }
        }
        dp = nd;
    }
    dp.values().sum()
}

impl LambdaComplex {
    pub fn new(max_dim: u64) -> Self {
        LambdaComplex {
            rank_cache: FxHashMap::default(),
            max_dim,
        }
    }

    /// Rank of d: (s, f) -> (s-1, f+1). `None` when over budget.
    fn rank_out(&mut self, s: u32, f: u32) -> Option<usize> {
        if let Some(&r) = self.rank_cache.get(&(s, f)) {
            return Some(r);
        }
        let src_dim = dim(s, f);
        let dst_dim = if s == 0 { 0 } else { dim(s - 1, f + 1) };
        if src_dim.max(dst_dim) > self.max_dim {
            return None;
        }
        if s == 0 || src_dim == 0 || dst_dim == 0 {
            self.rank_cache.insert((s, f), 0);
            return Some(0);
        }
        let src = basis(s, f);
        let dst = basis(s - 1, f + 1);
        let index: FxHashMap<u128, u32> = dst
            .iter()
            .enumerate()
            .map(|(i, w)| (pack(w), i as u32))
            .collect();
        // Sparse column reduction for rank only.
        let mut pivot_of: FxHashMap<u32, usize> = FxHashMap::default();
        let mut cols: Vec<Vec<u32>> = Vec::new();
        let mut scratch: FxHashMap<u128, bool> = FxHashMap::default();
        for w in &src {
            scratch.clear();
            differential(w, &mut scratch);
            let mut col: Vec<u32> = scratch
                .iter()
                .filter(|&(_, &v)| v)
                .map(|(k, _)| index[k])
                .collect();
            col.sort_unstable();
            loop {
                let Some(&low) = col.first() else { break };
                match pivot_of.get(&low) {
                    None => {
                        pivot_of.insert(low, cols.len());
                        cols.push(col);
                        break;
                    }
                    Some(&pi) => {
                        col = sym_diff(&col, &cols[pi]);
                    }
                }
            }
        }
        let r = pivot_of.len();
        self.rank_cache.insert((s, f), r);
        Some(r)
    }

    /// dim Ext^{f, f+s}, or `None` when a needed bidegree is over budget.
    pub fn ext_dim(&mut self, s: u32, f: u32) -> Option<usize> {
        let here = dim(s, f);
        if here > self.max_dim {
            return None;
        }
        let out = self.rank_out(s, f)?;
        let incoming = if f == 0 { 0 } else { self.rank_out(s + 1, f - 1)? };
        Some(here as usize - out - incoming)
    }
}

fn sym_diff(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d_squared_is_zero() {
        for s in 0..10u32 {
            for f in 1..5u32 {
                for w in basis(s, f) {
                    let mut once: FxHashMap<u128, bool> = FxHashMap::default();
                    differential(&w, &mut once);
                    let mut twice: FxHashMap<u128, bool> = FxHashMap::default();
                    for (k, v) in once.iter().filter(|&(_, &v)| v) {
                        let _ = v;
                        let word = unpack(*k);
                        let mut dd: FxHashMap<u128, bool> = FxHashMap::default();
                        differential(&word, &mut dd);
                        for (k2, v2) in dd {
                            if v2 {
                                let e = twice.entry(k2).or_insert(false);
                                *e = !*e;
                            }
                        }
                    }
                    assert!(twice.values().all(|&v| !v), "d²≠0 on {w:?}");
                }
            }
        }
    }

    fn unpack(mut key: u128) -> Vec<u8> {
        let mut out = Vec::new();
        while key > 1 {
            out.push((key & 63) as u8);
            key >>= 6;
        }
        out.reverse();
        out
    }

    #[test]
    fn known_differentials() {
        // dλ2 = λ1λ0, dλ4 = λ3λ0 + λ2λ1, dλ5 = λ3λ1.
        let mut m: FxHashMap<u128, bool> = FxHashMap::default();
        differential(&[2], &mut m);
        let terms: Vec<_> = m.iter().filter(|&(_, &v)| v).map(|(k, _)| unpack(*k)).collect();
        assert_eq!(terms, vec![vec![1, 0]]);

        m.clear();
        differential(&[4], &mut m);
        let mut terms: Vec<_> = m.iter().filter(|&(_, &v)| v).map(|(k, _)| unpack(*k)).collect();
        terms.sort();
        assert_eq!(terms, vec![vec![2, 1], vec![3, 0]]);

        m.clear();
        differential(&[5], &mut m);
        let terms: Vec<_> = m.iter().filter(|&(_, &v)| v).map(|(k, _)| unpack(*k)).collect();
        assert_eq!(terms, vec![vec![3, 1]]);
    }

    #[test]
    fn ext_dims_low_stems() {
        let mut l = LambdaComplex::new(1 << 20);
        // Stem 0: the h0 tower.
        for f in 0..8 {
            assert_eq!(l.ext_dim(0, f), Some(1));
        }
        // Stem 1: h1 only.
        assert_eq!(l.ext_dim(1, 1), Some(1));
        assert_eq!(l.ext_dim(1, 2), Some(0));
        // Stem 3: h2, h0h2, h0^2h2 and then zero.
        assert_eq!(l.ext_dim(3, 1), Some(1));
        assert_eq!(l.ext_dim(3, 2), Some(1));
        assert_eq!(l.ext_dim(3, 3), Some(1));
        assert_eq!(l.ext_dim(3, 4), Some(0));
        // Stem 14: d0 at f=4, h3^2 at f=2.
        assert_eq!(l.ext_dim(14, 2), Some(1));
        assert_eq!(l.ext_dim(14, 4), Some(1));
    }
}
