//! Isometries of the square acting on patterns, color interchange, and
//! the exhaustive symmetry verifier.
//!
//! An isometry moves cells *and* transforms each tile's type so that the
//! drawing is what actually rotates or reflects. The per-tile tables are
//! pinned by the edge-color invariant: the transformed tile's edge colors
//! must equal the geometrically permuted edge colors of the original.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::pattern::{CellCoord, Pattern, CELLS};
use crate::tile::TileType;

/// One of the 8 isometries of the square: `rot` quarter-turns clockwise,
/// then (optionally) a reflection across the vertical axis.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SquareIsometry {
    pub rot: u8,
    pub flip: bool,
}

impl SquareIsometry {
    pub const ALL: [SquareIsometry; 8] = [
        SquareIsometry {
            rot: 0,
            flip: false,
        },
        SquareIsometry {
            rot: 1,
            flip: false,
        },
        SquareIsometry {
            rot: 2,
            flip: false,
        },
        SquareIsometry {
            rot: 3,
            flip: false,
        },
        SquareIsometry { rot: 0, flip: true },
        SquareIsometry { rot: 1, flip: true },
        SquareIsometry { rot: 2, flip: true },
        SquareIsometry { rot: 3, flip: true },
    ];

    pub const IDENTITY: SquareIsometry = SquareIsometry {
        rot: 0,
        flip: false,
    };

    /// Index into `ALL`.
    pub fn index(self) -> usize {
        self.rot as usize + if self.flip { 4 } else { 0 }
    }

    pub fn is_identity(self) -> bool {
        self.rot == 0 && !self.flip
    }

    /// Short label used in census keys: `r0..r3`, with an `f` suffix for
    /// the reflected versions.
    pub fn label(self) -> String {
        format!("r{}{}", self.rot, if self.flip { "f" } else { "" })
    }

    /// Where the cell at `coord` moves.
    pub fn map_coord(self, coord: CellCoord) -> CellCoord {
        let (mut r, mut c) = (coord.r, coord.c);
        for _ in 0..self.rot {
            let (nr, nc) = (c, 3 - r);
            r = nr;
            c = nc;
        }
        if self.flip {
            c = 3 - c;
        }
        CellCoord::new(r, c)
    }

    /// How a single tile's type transforms. A quarter-turn flips the
    /// diagonal and re-anchors the shade to the edge that rotates onto
    /// the bottom; a reflection flips the diagonal and keeps the shade.
    pub fn map_tile(self, t: TileType) -> TileType {
        let mut u = t;
        for _ in 0..self.rot {
            let (d, s) = (u.direction(), u.shade());
            u = TileType::from_bits(d ^ 1, s ^ d ^ 1);
        }
        if self.flip {
            u = TileType::from_bits(u.direction() ^ 1, u.shade());
        }
        u
    }

    /// `self ∘ other` (apply `other` first), located by matching cell
    /// maps over all 16 cells.
    pub fn compose(self, other: SquareIsometry) -> SquareIsometry {
        'cand: for cand in SquareIsometry::ALL {
            for i in 0..CELLS {
                let coord = CellCoord::from_index(i);
                if cand.map_coord(coord) != self.map_coord(other.map_coord(coord)) {
                    continue 'cand;
                }
            }
            return cand;
        }
        unreachable!("isometries are closed under composition")
    }
}

/// Move and transform every tile of `p` by the isometry.
pub fn apply_isometry(iso: SquareIsometry, p: &Pattern) -> Pattern {
    let mut cells = *p.cells();
    for i in 0..CELLS {
        let target = iso.map_coord(CellCoord::from_index(i)).index();
        cells[target] = iso.map_tile(p.cell(i));
    }
    Pattern::new(cells)
}

/// Swap dark and light everywhere.
pub fn color_interchange(p: &Pattern) -> Pattern {
    let mut cells = *p.cells();
    for t in cells.iter_mut() {
        *t = t.color_interchange();
    }
    Pattern::new(cells)
}

/// Which isometries fix a pattern outright, and which carry it onto its
/// color swap. Bit `i` refers to `SquareIsometry::ALL[i]`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SymmetryProfile {
    /// Non-identity isometries `g` with `g(p) = p`.
    pub ordinary: u8,
    /// All isometries `g` (identity allowed) with `g(p) = swap(p)`.
    pub interchange: u8,
}

impl SymmetryProfile {
    /// The predicate of the theorem: some ordinary or color-interchange
    /// symmetry exists.
    pub fn is_symmetric(&self) -> bool {
        self.ordinary != 0 || self.interchange != 0
    }

    /// Stable census key, e.g. `"ord[r2] int[r1f r3f]"`.
    pub fn shape_key(&self) -> String {
        let names = |mask: u8| -> String {
            let labels: Vec<String> = SquareIsometry::ALL
                .iter()
                .filter(|iso| mask >> iso.index() & 1 == 1)
                .map(|iso| iso.label())
                .collect();
            if labels.is_empty() {
                "-".to_string()
            } else {
                labels.join(" ")
            }
        };
        format!(
            "ord[{}] int[{}]",
            names(self.ordinary),
            names(self.interchange)
        )
    }
}

/// Brute force over the 8 isometries, against `p` and against its swap.
pub fn symmetry_profile(p: &Pattern) -> SymmetryProfile {
    let swapped = color_interchange(p);
    let mut ordinary = 0u8;
    let mut interchange = 0u8;
    for iso in SquareIsometry::ALL {
        let image = apply_isometry(iso, p);
        if !iso.is_identity() && image == *p {
            ordinary |= 1 << iso.index();
        }
        if image == swapped {
            interchange |= 1 << iso.index();
        }
    }
    SymmetryProfile {
        ordinary,
        interchange,
    }
}

/// Exhaustive check of the symmetry predicate over a set of patterns.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub total: usize,
    pub ordinary_count: usize,
    pub interchange_only_count: usize,
    pub failures: Vec<String>,
    pub census: BTreeMap<String, usize>,
}

pub fn verify_theorem(patterns: &[Pattern]) -> TheoremReport {
    let mut report = TheoremReport {
        total: patterns.len(),
        ordinary_count: 0,
        interchange_only_count: 0,
        failures: Vec::new(),
        census: BTreeMap::new(),
    };
    for p in patterns {
        let profile = symmetry_profile(p);
        if profile.ordinary != 0 {
            report.ordinary_count += 1;
        } else if profile.interchange != 0 {
            report.interchange_only_count += 1;
        } else {
            report.failures.push(p.encode());
        }
        *report.census.entry(profile.shape_key()).or_insert(0) += 1;
    }
    report.failures.sort();
    report
}

const CENTER_CELLS: [usize; 4] = [5, 6, 9, 10];

/// True iff some isometry (plainly or combined with color interchange)
/// fixes the central 2x2 block as a sub-pattern *and* fixes the whole
/// pattern the same way. The 8 isometries permute the center cells among
/// themselves, so the block comparison is well defined.
pub fn center_lemma_check(p: &Pattern) -> bool {
    let swapped = color_interchange(p);
    for iso in SquareIsometry::ALL {
        let image = apply_isometry(iso, p);
        let center_fixed = |target: &Pattern| {
            CENTER_CELLS
                .iter()
                .all(|&i| image.cell(i) == target.cell(i))
        };
        if !iso.is_identity() && center_fixed(p) && image == *p {
            return true;
        }
        if center_fixed(&swapped) && image == swapped {
            return true;
        }
    }
    false
}

/// Deterministic search for a pattern with no symmetry at all; used as a
/// negative control by tests and examples.
pub fn first_asymmetric_pattern() -> Pattern {
    // scan reduced digit strings in lexicographic order
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                for d in 0..4u8 {
                    let digits = [0, 0, 0, 0, 0, a, b, 0, 0, c, d, 1, 0, 0, 2, 3];
                    let p = Pattern::new(digits.map(|v| TileType::from_digit(v).unwrap()));
                    let profile = symmetry_profile(&p);
                    if !profile.is_symmetric() {
                        return p;
                    }
                }
            }
        }
    }
    unreachable!("asymmetric 4x4 patterns exist")
}
