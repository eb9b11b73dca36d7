//! Affine maps of the cell space GF(2)^4 and the affinity test for cell
//! permutations.

use crate::perm::CellPerm;

fn parity(x: u8) -> u8 {
    (x.count_ones() & 1) as u8
}

/// A 4x4 matrix over GF(2). `rows[k]` is the coefficient mask producing
/// output bit `k`: `(M v)_k = parity(rows[k] & v)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BitMatrix4 {
    rows: [u8; 4],
}

impl BitMatrix4 {
    pub fn identity() -> BitMatrix4 {
        BitMatrix4 { rows: [1, 2, 4, 8] }
    }

    pub fn from_rows(rows: [u8; 4]) -> BitMatrix4 {
        BitMatrix4 { rows }
    }

    pub fn rows(&self) -> [u8; 4] {
        self.rows
    }

    pub fn mul_vec(&self, v: u8) -> u8 {
        let mut out = 0;
        for k in 0..4 {
            out |= parity(self.rows[k] & v) << k;
        }
        out
    }

    /// Row vector times matrix: `(L M) & v == L & (M v)` as bilinear forms.
    pub fn row_mul(&self, functional: u8) -> u8 {
        let mut out = 0;
        for k in 0..4 {
            if functional >> k & 1 == 1 {
                out ^= self.rows[k];
            }
        }
        out
    }

    pub fn mul(&self, other: &BitMatrix4) -> BitMatrix4 {
        // column j of the product is self * (column j of other)
        let mut rows = [0u8; 4];
        for j in 0..4 {
            let col = self.mul_vec(other.col(j));
            for (k, row) in rows.iter_mut().enumerate() {
                *row |= (col >> k & 1) << j;
            }
        }
        BitMatrix4 { rows }
    }

    fn col(&self, j: usize) -> u8 {
        let mut c = 0;
        for k in 0..4 {
            c |= (self.rows[k] >> j & 1) << k;
        }
        c
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<BitMatrix4> {
        let mut a = self.rows;
        let mut inv = BitMatrix4::identity().rows;
        for col in 0..4 {
            let pivot = (col..4).find(|&r| a[r] >> col & 1 == 1)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            for r in 0..4 {
                if r != col && a[r] >> col & 1 == 1 {
                    a[r] ^= a[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        Some(BitMatrix4 { rows: inv })
    }
}

/// `v -> M v + t` on GF(2)^4, with `M` invertible.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AffineMap {
    pub matrix: BitMatrix4,
    pub translation: u8,
}

impl AffineMap {
    pub fn apply(&self, v: u8) -> u8 {
        self.matrix.mul_vec(v) ^ self.translation
    }
}

/// Fit `g(x) = M x + t` against all 16 cells: `t` is the image of 0, the
/// matrix columns are read off the basis images, and the candidate is
/// accepted only if it reproduces every cell.
pub fn as_affine(g: &CellPerm) -> Option<AffineMap> {
    let t = g.image(0) as u8;
    let mut rows = [0u8; 4];
    for j in 0..4 {
        let col = g.image(1 << j) as u8 ^ t;
        for (k, row) in rows.iter_mut().enumerate() {
            *row |= (col >> k & 1) << j;
        }
    }
    let map = AffineMap {
        matrix: BitMatrix4::from_rows(rows),
        translation: t,
    };
    for v in 0..16u8 {
        if map.apply(v) != g.image(v as usize) as u8 {
            return None;
        }
    }
    Some(map)
}

/// Order of the affine group of GF(2)^n: `2^n * prod_{i<n} (2^n - 2^i)`.
pub fn affine_group_order(n: u32) -> u64 {
    assert!((1..=15).contains(&n));
    let q = 1u64 << n;
    let mut order = q;
    for i in 0..n {
        order *= q - (1u64 << i);
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{axis_perm, group_generators, Axis, Perm};

    #[test]
    fn identity_is_affine_with_zero_translation() {
        let map = as_affine(&CellPerm::identity()).unwrap();
        assert_eq!(map.matrix, BitMatrix4::identity());
        assert_eq!(map.translation, 0);
    }

    #[test]
    fn row_swap_affinity() {
        let g = axis_perm(Axis::Rows, [1, 0, 2, 3]).unwrap();
        let map = as_affine(&g).unwrap();
        // swapping rows 0 and 1 toggles r0 of rows 0..2: translation (r1 r0 c1 c0) = 0100
        assert_eq!(map.translation, 0b0100);
        for v in 0..16u8 {
            assert_eq!(map.apply(v), g.image(v as usize) as u8);
        }
    }

    #[test]
    fn all_generators_are_affine() {
        for g in group_generators() {
            let map = as_affine(&g).unwrap();
            assert!(map.matrix.inverse().is_some());
        }
    }

    #[test]
    fn five_cycle_is_not_affine() {
        let g = Perm::<16>::from_fn(|i| match i {
            0 => 1,
            1 => 2,
            2 => 3,
            3 => 4,
            4 => 0,
            other => other,
        })
        .unwrap();
        assert!(as_affine(&g).is_none());
    }

    #[test]
    fn matrix_algebra() {
        let m = BitMatrix4::from_rows([0b0011, 0b0100, 0b1000, 0b0110]);
        if let Some(inv) = m.inverse() {
            assert_eq!(m.mul(&inv), BitMatrix4::identity());
            assert_eq!(inv.mul(&m), BitMatrix4::identity());
        }
        let id = BitMatrix4::identity();
        for v in 0..16 {
            assert_eq!(id.mul_vec(v), v);
        }
        // singular matrix has no inverse
        assert!(BitMatrix4::from_rows([1, 1, 4, 8]).inverse().is_none());
        // row_mul is the transpose action: (L M) . v == L . (M v)
        for l in 0..16u8 {
            for v in 0..16u8 {
                let lhs = ((m.row_mul(l) & v).count_ones() & 1) as u8;
                let rhs = ((l & m.mul_vec(v)).count_ones() & 1) as u8;
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn affine_group_orders() {
        assert_eq!(affine_group_order(1), 2);
        assert_eq!(affine_group_order(2), 24);
        assert_eq!(affine_group_order(4), 322_560);
    }
}
