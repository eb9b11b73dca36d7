//! Small GF(2) linear algebra on bitmask rows.

/// Rank of the matrix whose rows are the given masks.
pub fn rank(rows: &[u64]) -> usize {
    let mut basis: Vec<u64> = Vec::new();
    for &row in rows {
        let mut e = row;
        for &b in &basis {
            e = e.min(e ^ b);
        }
        if e != 0 {
            basis.push(e);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

/// Reduced GF(2) basis (each new row folded against the others) of a span.
pub fn span_basis(rows: &[u64]) -> Vec<u64> {
    let mut basis: Vec<u64> = Vec::new();
    for &row in rows {
        let mut e = row;
        for &b in &basis {
            e = e.min(e ^ b);
        }
        if e != 0 {
            basis.push(e);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis
}

/// An affine system `A x = b` over GF(2) with up to 63 variables.
/// Each pushed equation is a coefficient mask plus a right-hand bit.
pub struct Gf2System {
    nvars: usize,
    /// Augmented rows: variable bits 0..nvars, rhs at bit `nvars`.
    rows: Vec<u64>,
}

/// Solution set of a consistent system: a particular solution plus a
/// kernel basis. The set is `particular ^ span(kernel)`.
pub struct Gf2Solutions {
    pub particular: u64,
    pub kernel: Vec<u64>,
}

impl Gf2System {
    pub fn new(nvars: usize) -> Gf2System {
        assert!(nvars < 64);
        Gf2System {
            nvars,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, coeffs: u64, rhs: u8) {
        debug_assert_eq!(coeffs >> self.nvars, 0);
        self.rows.push(coeffs | u64::from(rhs & 1) << self.nvars);
    }

    /// Gaussian elimination. Returns `None` when inconsistent.
    pub fn solve(&self) -> Option<Gf2Solutions> {
        let rhs_bit = 1u64 << self.nvars;
        let mut pivots: Vec<(usize, u64)> = Vec::new(); // (pivot column, row)
        for &raw in &self.rows {
            let mut row = raw;
            for &(col, prow) in &pivots {
                if row >> col & 1 == 1 {
                    row ^= prow;
                }
            }
            if row & !rhs_bit != 0 {
                let col = (63 - (row & !rhs_bit).leading_zeros()) as usize;
                pivots.push((col, row));
            } else if row & rhs_bit != 0 {
                return None; // 0 = 1
            }
        }
        // Back-substitute so each pivot row holds no other pivot column.
        // Pivot columns are the rows' leading bits, so with the list
        // sorted ascending a row can only contain pivot columns of
        // earlier (already clean) rows.
        pivots.sort_unstable();
        for i in 0..pivots.len() {
            for j in 0..i {
                let (col_i, mut row_i) = pivots[i];
                let (col_j, row_j) = pivots[j];
                if row_i >> col_j & 1 == 1 {
                    row_i ^= row_j;
                    pivots[i] = (col_i, row_i);
                }
            }
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(c, _)| c).collect();
        let mut particular = 0u64;
        for &(col, row) in &pivots {
            if row & rhs_bit != 0 {
                particular |= 1 << col;
            }
        }
        let mut kernel = Vec::new();
        for free in 0..self.nvars {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = 1u64 << free;
            for &(col, row) in &pivots {
                if row >> free & 1 == 1 {
                    v |= 1 << col;
                }
            }
            kernel.push(v);
        }
        Some(Gf2Solutions { particular, kernel })
    }
}

impl Gf2Solutions {
    pub fn count(&self) -> u64 {
        1u64 << self.kernel.len()
    }

    /// Every solution, in a deterministic order.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        let k = self.kernel.len();
        (0u64..1 << k).map(move |bits| {
            let mut v = self.particular;
            for (i, &b) in self.kernel.iter().enumerate() {
                if bits >> i & 1 == 1 {
                    v ^= b;
                }
            }
            v
        })
    }
}
