use super::SteenrodElt;

/// Profiles are capped at 7 entries, enough for internal degrees through 254.
pub const MAX_PROFILE_LEN: usize = 7;

/// Degree of the i-th profile slot (0-based): 2^{i+1} - 1.
const WEIGHT: [u32; MAX_PROFILE_LEN] = [1, 3, 7, 15, 31, 63, 127];

/// A Milnor basis element Sq(r1, ..., r7). Trailing zeros are implicit, so
/// equality of the arrays is exactly equality of trimmed profiles.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MilnorElt(pub [u16; MAX_PROFILE_LEN]);

impl MilnorElt {
    pub const UNIT: MilnorElt = MilnorElt([0; MAX_PROFILE_LEN]);

    pub fn sq(n: u16) -> Self {
        let mut p = [0; MAX_PROFILE_LEN];
        p[0] = n;
        MilnorElt(p)
    }

    pub fn from_profile(profile: &[u16]) -> Self {
        assert!(profile.len() <= MAX_PROFILE_LEN);
        let mut p = [0; MAX_PROFILE_LEN];
        p[..profile.len()].copy_from_slice(profile);
        MilnorElt(p)
    }

    pub fn degree(&self) -> u32 {
        self.0
            .iter()
            .zip(WEIGHT)
            .map(|(&r, w)| r as u32 * w)
            .sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0 == [0; MAX_PROFILE_LEN]
    }

    /// Profile length with trailing zeros trimmed.
    pub fn len(&self) -> usize {
        (0..MAX_PROFILE_LEN)
            .rev()
            .find(|&i| self.0[i] != 0)
            .map_or(0, |i| i + 1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl std::fmt::Debug for MilnorElt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Sq(")?;
        for i in 0..self.len() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", self.0[i])?;
        }
        write!(f, ")")
    }
}

/// All Milnor basis elements of internal degree `d`, in canonical order:
/// ascending degree is trivial here, so the order is lexicographic on
/// profiles.
pub fn milnor_basis(d: u32) -> Vec<MilnorElt> {
    let mut out = Vec::new();
    let mut profile = [0u16; MAX_PROFILE_LEN];
    enumerate(d, 0, &mut profile, &mut out);
    out.sort();
    out
}

fn enumerate(rem: u32, slot: usize, profile: &mut [u16; MAX_PROFILE_LEN], out: &mut Vec<MilnorElt>) {
    if rem == 0 {
        out.push(MilnorElt(*profile));
        return;
    }
    if slot >= MAX_PROFILE_LEN {
        return;
    }
    let w = WEIGHT[slot];
    let max = rem / w;
    for r in 0..=max {
        profile[slot] = r as u16;
        enumerate(rem - r * w, slot + 1, profile, out);
    }
    profile[slot] = 0;
}

/// True when the multinomial coefficient of the parts is odd, i.e. the parts
/// have pairwise disjoint binary digits.
fn multinomial_odd(parts: &[u16]) -> bool {
    let mut seen: u32 = 0;
    for &p in parts {
        if seen & p as u32 != 0 {
            return false;
        }
        seen |= p as u32;
    }
    true
}

/// Milnor product of two basis elements, as a sorted support list.
///
/// Standard Milnor matrix rule: sum over matrices X with row sums
/// r_i = sum_j x_{ij} 2^j and column sums s_j = sum_i x_{ij}; each matrix
/// contributes Sq(T) with t_n = sum_{i+j=n} x_{ij} when all diagonal
/// multinomial coefficients are odd.
pub fn multiply_profiles(a: MilnorElt, b: MilnorElt) -> Vec<MilnorElt> {
    if a.is_unit() {
        return vec![b];
    }
    if b.is_unit() {
        return vec![a];
    }
    let rows = a.len();
    let cols = b.len();
    // x[i][j]: i in 1..=rows (from a), j in 1..=cols (from b); x[i][0] and
    // x[0][j] are determined by the budgets.
    let mut x = [[0u16; MAX_PROFILE_LEN + 1]; MAX_PROFILE_LEN + 1];
    let mut row_budget = [0u32; MAX_PROFILE_LEN + 1]; // remaining r_i
    let mut col_used = [0u16; MAX_PROFILE_LEN + 1]; // sum_i>=1 x[i][j]
    for i in 1..=rows {
        row_budget[i] = a.0[i - 1] as u32;
    }
    let mut out = Vec::new();
    fill(
        1,
        1,
        rows,
        cols,
        &b,
        &mut x,
        &mut row_budget,
        &mut col_used,
        &mut out,
    );
    out.sort();
    // Cancellation mod 2: drop pairs.
    let mut dedup: Vec<MilnorElt> = Vec::with_capacity(out.len());
    for m in out {
        if dedup.last() == Some(&m) {
            dedup.pop();
        } else {
            dedup.push(m);
        }
    }
    dedup
}

#[allow(clippy::too_many_arguments)]
fn fill(
    i: usize,
    j: usize,
    rows: usize,
    cols: usize,
    b: &MilnorElt,
    x: &mut [[u16; MAX_PROFILE_LEN + 1]; MAX_PROFILE_LEN + 1],
    row_budget: &mut [u32; MAX_PROFILE_LEN + 1],
    col_used: &mut [u16; MAX_PROFILE_LEN + 1],
    out: &mut Vec<MilnorElt>,
) {
    if i > rows {
        emit(rows, cols, b, x, row_budget, col_used, out);
        return;
    }
    let (ni, nj) = if j == cols { (i + 1, 1) } else { (i, j + 1) };
    let max_by_row = row_budget[i] >> j;
    let max_by_col = (b.0[j - 1] - col_used[j]) as u32;
    let max = max_by_row.min(max_by_col);
    for v in 0..=max as u16 {
        x[i][j] = v;
        row_budget[i] -= (v as u32) << j;
        col_used[j] += v;
        fill(ni, nj, rows, cols, b, x, row_budget, col_used, out);
        row_budget[i] += (v as u32) << j;
        col_used[j] -= v;
    }
    x[i][j] = 0;
}

fn emit(
    rows: usize,
    cols: usize,
    b: &MilnorElt,
    x: &[[u16; MAX_PROFILE_LEN + 1]; MAX_PROFILE_LEN + 1],
    row_budget: &[u32; MAX_PROFILE_LEN + 1],
    col_used: &[u16; MAX_PROFILE_LEN + 1],
    out: &mut Vec<MilnorElt>,
) {
    // x[i][0] = leftover row budget (must be a plain count), x[0][j] =
    // leftover column budget.
    let mut t = [0u16; 2 * MAX_PROFILE_LEN + 1];
    let mut diag_parts: Vec<u16> = Vec::with_capacity(MAX_PROFILE_LEN + 1);
    for n in 1..=rows + cols {
        diag_parts.clear();
        // i + j = n with i in 0..=rows, j in 0..=cols.
        for i in 0..=n.min(rows) {
            let j = n - i;
            if j > cols {
                continue;
            }
            let v = if i == 0 {
                b.0[j - 1] - col_used[j]
            } else if j == 0 {
                let rb = row_budget[i];
                debug_assert!(rb <= u16::MAX as u32);
                rb as u16
            } else {
                x[i][j]
            };
            if v != 0 {
                diag_parts.push(v);
            }
        }
        if !multinomial_odd(&diag_parts) {
            return;
        }
        t[n] = diag_parts.iter().sum();
    }
    for &extra in &t[MAX_PROFILE_LEN + 1..] {
        if extra != 0 {
            // Profile longer than the cap: degree exceeds the supported
            // range; caller is expected to stay under 255.
            panic!("milnor product exceeds profile cap");
        }
    }
    let mut profile = [0u16; MAX_PROFILE_LEN];
    profile.copy_from_slice(&t[1..=MAX_PROFILE_LEN]);
    out.push(MilnorElt(profile));
}

/// Product as a `SteenrodElt`.
pub fn milnor_product(a: MilnorElt, b: MilnorElt) -> SteenrodElt {
    SteenrodElt {
        degree: a.degree() + b.degree(),
        support: multiply_profiles(a, b),
    }
}
