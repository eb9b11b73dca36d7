//! 4x4 patterns of tiles, cell coordinates, and the text codec.
//!
//! Cells are indexed row-major, 0..16. A cell's coordinate vector over
//! GF(2) is `(r1, r0, c1, c0)` packed high-to-low into a nibble, which
//! makes the cell index and its vector the *same* number: the coordinate
//! map is the identity on 0..16. Everything downstream (affine tests,
//! functionals, hyperplanes) leans on that.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tile::TileType;

pub const CELLS: usize = 16;

/// Row/column pair of a cell on the 4x4 grid.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CellCoord {
    pub r: u8,
    pub c: u8,
}

impl CellCoord {
    pub fn new(r: u8, c: u8) -> CellCoord {
        debug_assert!(r < 4 && c < 4);
        CellCoord { r, c }
    }

    pub fn from_index(i: usize) -> CellCoord {
        debug_assert!(i < CELLS);
        CellCoord::new((i >> 2) as u8, (i & 3) as u8)
    }

    pub fn index(self) -> usize {
        (self.r as usize) << 2 | self.c as usize
    }

    /// GF(2)^4 vector `(r1, r0, c1, c0)`, numerically equal to `index()`.
    pub fn vec(self) -> u8 {
        self.index() as u8
    }

    pub fn from_vec(v: u8) -> CellCoord {
        CellCoord::from_index(v as usize)
    }
}

/// One bit per cell of the 4x4 grid, cell i at bit i.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BitGrid16(pub u16);

impl BitGrid16 {
    pub fn from_fn(mut f: impl FnMut(usize) -> u8) -> BitGrid16 {
        let mut bits = 0u16;
        for i in 0..CELLS {
            bits |= u16::from(f(i) & 1) << i;
        }
        BitGrid16(bits)
    }

    pub fn bit(self, cell: usize) -> u8 {
        (self.0 >> cell & 1) as u8
    }

    pub fn count_ones(self) -> u32 {
        self.0.count_ones()
    }
}

impl std::ops::BitXor for BitGrid16 {
    type Output = BitGrid16;

    fn bitxor(self, rhs: BitGrid16) -> BitGrid16 {
        BitGrid16(self.0 ^ rhs.0)
    }
}

impl fmt::Debug for BitGrid16 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitGrid16({:016b})", self.0)
    }
}

/// The three pairings of the four tile types into two two-sets, read off
/// a tile as a single bit.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Component {
    /// Shade bit `s`.
    S,
    /// Direction bit `d`.
    D,
    /// `s ^ d`.
    Sd,
}

impl Component {
    pub const ALL: [Component; 3] = [Component::S, Component::D, Component::Sd];

    pub fn of(self, t: TileType) -> u8 {
        match self {
            Component::S => t.shade(),
            Component::D => t.direction(),
            Component::Sd => t.shade() ^ t.direction(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Component::S => "S",
            Component::D => "D",
            Component::Sd => "S+D",
        }
    }
}

/// A 4x4 array of tiles, row-major.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern {
    cells: [TileType; CELLS],
}

impl Pattern {
    pub fn new(cells: [TileType; CELLS]) -> Pattern {
        Pattern { cells }
    }

    pub fn from_fn(mut f: impl FnMut(CellCoord) -> TileType) -> Pattern {
        let mut cells = [TileType::ALL[0]; CELLS];
        for (i, cell) in cells.iter_mut().enumerate() {
            *cell = f(CellCoord::from_index(i));
        }
        Pattern { cells }
    }

    pub fn cells(&self) -> &[TileType; CELLS] {
        &self.cells
    }

    pub fn cell(&self, i: usize) -> TileType {
        self.cells[i]
    }

    pub fn at(&self, r: u8, c: u8) -> TileType {
        self.cells[CellCoord::new(r, c).index()]
    }

    /// Canonical 16-digit text form, row-major, digit = `2*d + s`.
    pub fn encode(&self) -> String {
        self.cells
            .iter()
            .map(|t| char::from(b'0' + t.digit()))
            .collect()
    }

    pub fn decode(text: &str) -> Result<Pattern> {
        let chars: Vec<char> = text.chars().collect();
        if chars.len() != CELLS {
            return Err(Error::PatternLength(chars.len()));
        }
        let mut cells = [TileType::ALL[0]; CELLS];
        for (index, &ch) in chars.iter().enumerate() {
            let digit = ch
                .to_digit(10)
                .and_then(|v| TileType::from_digit(v as u8))
                .ok_or(Error::PatternDigit { index, found: ch })?;
            cells[index] = digit;
        }
        Ok(Pattern { cells })
    }

    /// One bit per cell under the given component of the tile pair `(d, s)`.
    pub fn component(&self, comp: Component) -> BitGrid16 {
        BitGrid16::from_fn(|i| comp.of(self.cells[i]))
    }

    /// How many cells hold each of the four tile types.
    pub fn tile_counts(&self) -> [usize; 4] {
        let mut counts = [0usize; 4];
        for t in &self.cells {
            counts[t.digit() as usize] += 1;
        }
        counts
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({})", self.encode())
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Pattern> {
        Pattern::decode(s)
    }
}

/// The four-diamond figure: each 2x2 quadrant shows a centered dark
/// diamond, i.e. every tile's dark triangle touches its quadrant center.
/// Under the tile conventions that forces `s = 1 + r0` and
/// `d = 1 + r0 + c0`.
pub fn diamond_figure() -> Pattern {
    Pattern::from_fn(|coord| {
        let r0 = coord.r & 1;
        let c0 = coord.c & 1;
        TileType::from_bits(1 ^ r0 ^ c0, 1 ^ r0)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub const DIAMOND: &str = "3131020231310202";

    #[test]
    fn coordinate_map_is_the_identity_bijection() {
        for i in 0..CELLS {
            let coord = CellCoord::from_index(i);
            assert_eq!(coord.vec() as usize, i);
            assert_eq!(CellCoord::from_vec(coord.vec()).index(), i);
            assert_eq!(coord.index(), i);
        }
    }

    #[test]
    fn diamond_codec_and_counts() {
        let d = diamond_figure();
        assert_eq!(d.encode(), DIAMOND);
        assert_eq!(d.tile_counts(), [4, 4, 4, 4]);
        assert_eq!(Pattern::decode(DIAMOND).unwrap(), d);
    }

    #[test]
    fn decode_rejects_bad_input() {
        match Pattern::decode("313102023131020") {
            Err(Error::PatternLength(15)) => {}
            other => panic!("unexpected: {other:?}"),
        }
        match Pattern::decode("313102023131020X") {
            Err(Error::PatternDigit {
                index: 15,
                found: 'X',
            }) => {}
            other => panic!("unexpected: {other:?}"),
        }
        match Pattern::decode("3131020231310204") {
            Err(Error::PatternDigit {
                index: 15,
                found: '4',
            }) => {}
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn all_zero_pattern_decodes() {
        let p = Pattern::decode("0000000000000000").unwrap();
        assert!(p.cells().iter().all(|t| t.digit() == 0));
    }

    #[test]
    fn diamond_components() {
        let d = diamond_figure();
        // s = 1 + r0: rows 0 and 2 all ones, rows 1 and 3 all zeros
        assert_eq!(d.component(Component::S).0, 0x0f0f);
        // d = 1 + r0 + c0: set exactly where r0 == c0
        let dir = d.component(Component::D);
        for i in 0..CELLS {
            let coord = CellCoord::from_index(i);
            assert_eq!(dir.bit(i), u8::from(coord.r & 1 == coord.c & 1));
        }
    }

    #[test]
    fn component_grids_sum_pointwise() {
        for text in [DIAMOND, "0123012301230123", "3210033212301023"] {
            let p = Pattern::decode(text).unwrap();
            assert_eq!(
                p.component(Component::S) ^ p.component(Component::D),
                p.component(Component::Sd)
            );
        }
    }
}
