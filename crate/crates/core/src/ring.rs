//! The GF(4) pattern algebra: pointwise sums, the affine-pattern
//! subgroup generated additively by an orbit, and the cut census.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::fit_affine_any;
use crate::gf2::{span_basis, Gf2System};
use crate::gf4::Gf4;
use crate::pattern::{BitGrid16, Component, Pattern, CELLS};
use crate::tile::TileType;

/// A pattern viewed as a GF(4)-valued function on the 16 cells, via the
/// tile coding `s*1 + d*w`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Gf4Pattern {
    values: [Gf4; CELLS],
}

impl Gf4Pattern {
    pub fn zero() -> Gf4Pattern {
        Gf4Pattern {
            values: [Gf4::ZERO; CELLS],
        }
    }

    pub fn from_pattern(p: &Pattern) -> Gf4Pattern {
        let mut values = [Gf4::ZERO; CELLS];
        for (i, v) in values.iter_mut().enumerate() {
            *v = p.cell(i).to_gf4();
        }
        Gf4Pattern { values }
    }

    pub fn to_pattern(&self) -> Pattern {
        let mut cells = [TileType::ALL[0]; CELLS];
        for (i, c) in cells.iter_mut().enumerate() {
            *c = TileType::from_gf4(self.values[i]);
        }
        Pattern::new(cells)
    }

    pub fn value(&self, cell: usize) -> Gf4 {
        self.values[cell]
    }

    /// 32-bit packing: bit `i` is the "one" component of cell `i`, bit
    /// `16+i` the "w" component. Addition becomes XOR.
    pub fn packed(&self) -> u32 {
        let mut bits = 0u32;
        for (i, v) in self.values.iter().enumerate() {
            bits |= u32::from(v.value() & 1) << i;
            bits |= u32::from(v.value() >> 1) << (16 + i);
        }
        bits
    }

    pub fn from_packed(bits: u32) -> Gf4Pattern {
        let mut values = [Gf4::ZERO; CELLS];
        for (i, v) in values.iter_mut().enumerate() {
            let one = (bits >> i & 1) as u8;
            let w = (bits >> (16 + i) & 1) as u8;
            *v = Gf4::new(one | w << 1).unwrap();
        }
        Gf4Pattern { values }
    }

    pub fn component(&self, comp: Component) -> BitGrid16 {
        self.to_pattern().component(comp)
    }
}

impl std::ops::Add for Gf4Pattern {
    type Output = Gf4Pattern;

    fn add(self, rhs: Gf4Pattern) -> Gf4Pattern {
        let mut values = self.values;
        for (v, r) in values.iter_mut().zip(rhs.values.iter()) {
            *v = *v + *r;
        }
        Gf4Pattern { values }
    }
}

/// Cellwise sum; the patterns form an elementary abelian 2-group.
pub fn pattern_add(p: &Gf4Pattern, q: &Gf4Pattern) -> Gf4Pattern {
    *p + *q
}

/// True iff the pattern, as a function GF(2)^4 -> GF(4), is affine:
/// both component bit-grids fit an affine functional, zero allowed.
pub fn is_affine_pattern(p: &Gf4Pattern) -> bool {
    let pat = p.to_pattern();
    fit_affine_any(pat.component(Component::S)).is_some()
        && fit_affine_any(pat.component(Component::D)).is_some()
}

/// All 1024 affine patterns: every (functional, constant) pair for the
/// shade component crossed with every pair for the direction component.
/// Sorted for determinism.
pub fn affine_patterns() -> Vec<Gf4Pattern> {
    let mut out = Vec::with_capacity(1024);
    for s_mask in 0..16u8 {
        for s_const in 0..2u8 {
            for d_mask in 0..16u8 {
                for d_const in 0..2u8 {
                    let p = Pattern::from_fn(|coord| {
                        let v = coord.vec();
                        let s = ((s_mask & v).count_ones() & 1) as u8 ^ s_const;
                        let d = ((d_mask & v).count_ones() & 1) as u8 ^ d_const;
                        TileType::from_bits(d, s)
                    });
                    out.push(Gf4Pattern::from_pattern(&p));
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// The subgroup of (patterns, +) generated by the seeds: the GF(2) span
/// of their packed forms. Errors if the span would exceed `cap`.
pub fn additive_closure(seeds: &[Gf4Pattern], cap: usize) -> Result<Vec<Gf4Pattern>> {
    if seeds.is_empty() {
        return Err(Error::NoGenerators);
    }
    let rows: Vec<u64> = seeds.iter().map(|p| p.packed() as u64).collect();
    let basis = span_basis(&rows);
    if basis.len() >= 64 || (1usize << basis.len()) > cap {
        return Err(Error::CapExceeded { cap });
    }
    let mut out = Vec::with_capacity(1 << basis.len());
    for bits in 0u64..(1 << basis.len()) {
        let mut v = 0u64;
        for (i, b) in basis.iter().enumerate() {
            if bits >> i & 1 == 1 {
                v ^= b;
            }
        }
        out.push(Gf4Pattern::from_packed(v as u32));
    }
    out.sort_unstable();
    Ok(out)
}

/// Candidate formalizations of "every horizontal or vertical cut is
/// uninterrupted". Across each internal grid line every position carries
/// a relation bit comparing the two facing edge colors; a definition
/// constrains those bits.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum CutDefinition {
    /// Each line's relation bits are constant along the line.
    ConstantRelation,
    /// All relation bits are 1 (facing edges always differ).
    AllContrast,
    /// All relation bits are 0 (facing edges always match).
    AllMatch,
}

impl CutDefinition {
    pub const ALL: [CutDefinition; 3] = [
        CutDefinition::ConstantRelation,
        CutDefinition::AllContrast,
        CutDefinition::AllMatch,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CutDefinition::ConstantRelation => "constant-relation",
            CutDefinition::AllContrast => "all-contrast",
            CutDefinition::AllMatch => "all-match",
        }
    }

    pub fn from_name(name: &str) -> Option<CutDefinition> {
        CutDefinition::ALL.into_iter().find(|d| d.name() == name)
    }
}

/// Relation bit across the horizontal line below row `r` at column `c`:
/// bottom edge of (r,c) against top edge of (r+1,c).
fn horizontal_relation(p: &Pattern, r: u8, c: u8) -> u8 {
    p.at(r, c).edge_colors().bottom ^ p.at(r + 1, c).edge_colors().top
}

/// Relation bit across the vertical line right of column `c` at row `r`.
fn vertical_relation(p: &Pattern, r: u8, c: u8) -> u8 {
    p.at(r, c).edge_colors().right ^ p.at(r, c + 1).edge_colors().left
}

/// Evaluate a cut definition on one pattern directly from edge colors.
pub fn cuts_uninterrupted(p: &Gf4Pattern, def: CutDefinition) -> bool {
    let pat = p.to_pattern();
    let mut ok = true;
    for line in 0..3u8 {
        let h: Vec<u8> = (0..4).map(|c| horizontal_relation(&pat, line, c)).collect();
        let v: Vec<u8> = (0..4).map(|r| vertical_relation(&pat, r, line)).collect();
        ok &= match def {
            CutDefinition::ConstantRelation => {
                h.iter().all(|&b| b == h[0]) && v.iter().all(|&b| b == v[0])
            }
            CutDefinition::AllContrast => h.iter().chain(&v).all(|&b| b == 1),
            CutDefinition::AllMatch => h.iter().chain(&v).all(|&b| b == 0),
        };
    }
    ok
}

/// Exact census of a cut definition over all 4^16 patterns. The
/// `symmetric_count` records how many satisfying patterns have an
/// ordinary or color-interchange symmetry, since whether "symmetric"
/// picks out such a candidate set is an open reading.
#[derive(Clone, Debug, Serialize)]
pub struct CutCensus {
    pub definition: &'static str,
    pub count: u64,
    pub equals_affine_set: bool,
    pub symmetric_count: u64,
}

/// Count satisfying patterns by GF(2) linear algebra. Variables are the
/// 32 component bits (s at 0..16, d at 16..32); `ConstantRelation` adds
/// one free constant per internal line. The satisfying set is enumerated
/// from the solved system and compared against the 1024 affine patterns.
pub fn cut_census(def: CutDefinition) -> CutCensus {
    let solutions = cut_system(def).solve();
    let (count, sat): (u64, Vec<u32>) = match &solutions {
        None => (0, Vec::new()),
        Some(sol) => {
            let mut pats: Vec<u32> = sol.iter().map(|v| (v & 0xffff_ffff) as u32).collect();
            pats.sort_unstable();
            pats.dedup();
            (pats.len() as u64, pats)
        }
    };
    let affine: Vec<u32> = affine_patterns().iter().map(|p| p.packed()).collect();
    let symmetric_count = sat
        .iter()
        .filter(|&&bits| {
            crate::symmetry::symmetry_profile(&Gf4Pattern::from_packed(bits).to_pattern())
                .is_symmetric()
        })
        .count() as u64;
    CutCensus {
        definition: def.name(),
        count,
        equals_affine_set: sat == affine,
        symmetric_count,
    }
}

/// The affine constraint system a definition imposes. The relation bit
/// across a horizontal line is `s(r,c) + s(r+1,c) + 1`; across a
/// vertical line it is `t(r,c) + t(r,c+1) + 1` with `t = s + d`.
pub(crate) fn cut_system(def: CutDefinition) -> Gf2System {
    let s_var = |r: u8, c: u8| u64::from(r) * 4 + u64::from(c);
    let d_var = |r: u8, c: u8| 16 + s_var(r, c);
    let nvars = match def {
        CutDefinition::ConstantRelation => 38, // 6 line constants
        _ => 32,
    };
    let mut sys = Gf2System::new(nvars);
    for line in 0..3u8 {
        for pos in 0..4u8 {
            // horizontal: s(line,pos) + s(line+1,pos) + 1 = relation
            let h = 1u64 << s_var(line, pos) | 1 << s_var(line + 1, pos);
            // vertical: (s+d)(pos,line) + (s+d)(pos,line+1) + 1 = relation
            let v = 1u64 << s_var(pos, line)
                | 1 << d_var(pos, line)
                | 1 << s_var(pos, line + 1)
                | 1 << d_var(pos, line + 1);
            match def {
                CutDefinition::ConstantRelation => {
                    // relation = k_line; move the +1 to the right side
                    sys.push(h | 1 << (32 + u64::from(line)), 1);
                    sys.push(v | 1 << (35 + u64::from(line)), 1);
                }
                CutDefinition::AllContrast => {
                    sys.push(h, 0);
                    sys.push(v, 0);
                }
                CutDefinition::AllMatch => {
                    sys.push(h, 1);
                    sys.push(v, 1);
                }
            }
        }
    }
    sys
}
