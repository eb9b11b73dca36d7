//! The four orientations of a diagonally divided two-color square tile.
//!
//! A tile is a unit square cut along one diagonal into a dark and a light
//! triangle. Two bits pin it down: `d` is the split direction (0 = `\`,
//! the diagonal from top-left to bottom-right; 1 = `/`), and `s` says the
//! triangle containing the tile's *bottom edge* is dark. The canonical
//! digit of a tile is `2*d + s`, which is also how patterns are written
//! as text.

use crate::gf4::Gf4;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TileType(u8);

/// Colors of the four tile edges. Each edge lies inside a single triangle,
/// so it carries one color bit (1 = dark).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EdgeColors {
    pub top: u8,
    pub bottom: u8,
    pub left: u8,
    pub right: u8,
}

impl TileType {
    pub const ALL: [TileType; 4] = [TileType(0), TileType(1), TileType(2), TileType(3)];

    pub fn from_bits(d: u8, s: u8) -> TileType {
        debug_assert!(d < 2 && s < 2);
        TileType(2 * d + s)
    }

    pub fn from_digit(digit: u8) -> Option<TileType> {
        (digit < 4).then_some(TileType(digit))
    }

    /// Canonical digit `2*d + s`.
    pub fn digit(self) -> u8 {
        self.0
    }

    /// Split direction: 0 = `\`, 1 = `/`.
    pub fn direction(self) -> u8 {
        self.0 >> 1
    }

    /// 1 iff the triangle containing the bottom edge is dark.
    pub fn shade(self) -> u8 {
        self.0 & 1
    }

    /// Swap dark and light. An involution that keeps the diagonal.
    pub fn color_interchange(self) -> TileType {
        TileType(self.0 ^ 1)
    }

    /// The GF(4) value `s*1 + d*w`. Intertwines color interchange with +1.
    pub fn to_gf4(self) -> Gf4 {
        Gf4::new(self.shade() | self.direction() << 1).unwrap()
    }

    pub fn from_gf4(v: Gf4) -> TileType {
        TileType::from_bits(v.value() >> 1, v.value() & 1)
    }

    /// Edge colors follow from the conventions: the bottom edge is in the
    /// `s` triangle, the top edge in the other; the left edge shares a
    /// triangle with the bottom exactly when the diagonal is `\`.
    pub fn edge_colors(self) -> EdgeColors {
        let (d, s) = (self.direction(), self.shade());
        EdgeColors {
            top: s ^ 1,
            bottom: s,
            left: s ^ d,
            right: s ^ d ^ 1,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_distinct_values() {
        for (i, t) in TileType::ALL.iter().enumerate() {
            assert_eq!(t.digit(), i as u8);
            assert_eq!(TileType::from_digit(i as u8), Some(*t));
        }
        assert_eq!(TileType::from_digit(4), None);
    }

    #[test]
    fn color_interchange_is_involution_fixing_direction() {
        for t in TileType::ALL {
            let u = t.color_interchange();
            assert_eq!(u.direction(), t.direction());
            assert_eq!(u.shade(), t.shade() ^ 1);
            assert_eq!(u.color_interchange(), t);
        }
    }

    #[test]
    fn gf4_coding_is_bijective_and_tracks_interchange() {
        for t in TileType::ALL {
            assert_eq!(TileType::from_gf4(t.to_gf4()), t);
            assert_eq!(t.color_interchange().to_gf4(), t.to_gf4() + Gf4::ONE);
        }
        assert_eq!(TileType::from_bits(0, 0).to_gf4(), Gf4::ZERO);
        assert_eq!(TileType::from_bits(1, 0).to_gf4(), Gf4::OMEGA);
        assert_eq!(TileType::from_bits(1, 1).to_gf4(), Gf4::OMEGA_SQ);
    }

    #[test]
    fn edge_colors_match_the_stated_formulas() {
        let e = TileType::from_bits(0, 1).edge_colors();
        assert_eq!((e.top, e.bottom, e.left, e.right), (0, 1, 1, 0));
        for t in TileType::ALL {
            let e = t.edge_colors();
            assert_eq!(e.top ^ e.bottom, 1);
            assert_eq!(e.left ^ e.right, 1);
            assert_eq!(e.bottom, t.shade());
        }
    }
}
