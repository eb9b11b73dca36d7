//! The binary Golay code on a 4x6 point array, its octads and Steiner
//! system, M24 as the octad-preserving group, the stabilizer of the
//! brick, and the bridge from brick splits to the lines of PG(3,2).
//!
//! Points are laid out four rows by six columns, `p = 6*row + col`. The
//! brick is columns 0-1; the square is columns 2-5, identified with the
//! 4x4 cell grid by `(row, col-2)`. The generator matrix and the M24
//! generators are embedded data with their construction noted in the
//! files; nothing is trusted — every property is re-verified here.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{self, four_partition, ProjLine};
use crate::perm::{CellPerm, GroupSet, Perm, Perm24};
use crate::schreier::StabilizerChain;

pub const POINTS: usize = 24;

const GENERATOR_DATA: &str = include_str!("data/golay_generator.txt");
const M24_DATA: &str = include_str!("data/m24_generators.txt");

pub fn point_of(row: usize, col: usize) -> usize {
    debug_assert!(row < 4 && col < 6);
    6 * row + col
}

/// The 4x4 cell behind a square point, if the point is in the square.
pub fn square_cell(point: usize) -> Option<usize> {
    let (row, col) = (point / 6, point % 6);
    (col >= 2).then(|| 4 * row + (col - 2))
}

pub fn point_of_cell(cell: usize) -> usize {
    point_of(cell >> 2, (cell & 3) + 2)
}

/// The brick: columns 0 and 1 as a point mask.
pub fn brick_mask() -> u32 {
    let mut m = 0u32;
    for row in 0..4 {
        m |= 1 << point_of(row, 0) | 1 << point_of(row, 1);
    }
    m
}

fn weight(mask: u32) -> u32 {
    mask.count_ones()
}

fn apply_to_mask(g: &Perm24, mask: u32) -> u32 {
    let mut out = 0u32;
    for i in 0..POINTS {
        if mask >> i & 1 == 1 {
            out |= 1 << g.image(i);
        }
    }
    out
}

/// A weight-8 codeword.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Octad(pub u32);

impl Octad {
    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn points(self) -> Vec<usize> {
        (0..POINTS).filter(|&i| self.0 >> i & 1 == 1).collect()
    }
}

/// The code: 12 generator rows, all 4096 codewords, and the sorted octad
/// list.
pub struct GolayCode {
    basis: [u32; 12],
    codewords: Vec<u32>,
    octads: Vec<Octad>,
}

/// Parse and validate the embedded generator matrix: dimension 12,
/// weights in {0,8,12,16,24} with distribution (1,759,2576,759,1),
/// rows pairwise orthogonal, brick a codeword.
pub fn build_golay() -> Result<GolayCode> {
    let rows = parse_generator_rows(GENERATOR_DATA)?;
    build_golay_from_rows(rows)
}

fn parse_generator_rows(data: &str) -> Result<[u32; 12]> {
    let mut rows = Vec::new();
    for line in data.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line.len() != POINTS || !line.bytes().all(|b| b == b'0' || b == b'1') {
            return Err(Error::DataValidation(format!(
                "generator row must be 24 bits of 0/1, got {line:?}"
            )));
        }
        let mut mask = 0u32;
        for (i, b) in line.bytes().enumerate() {
            if b == b'1' {
                mask |= 1 << i;
            }
        }
        rows.push(mask);
    }
    rows.try_into().map_err(|v: Vec<u32>| {
        Error::DataValidation(format!("expected 12 generator rows, got {}", v.len()))
    })
}

/// Code construction from explicit rows, validating everything. Kept
/// separate from the embedded data so tests can feed corrupted rows.
pub fn build_golay_from_rows(basis: [u32; 12]) -> Result<GolayCode> {
    let rank = crate::gf2::rank(&basis.map(u64::from));
    if rank != 12 {
        return Err(Error::DataValidation(format!(
            "generator matrix rank {rank}, expected 12"
        )));
    }
    // self-orthogonality of the rows (with even weights this makes the
    // code self-dual at dimension 12)
    for (i, &a) in basis.iter().enumerate() {
        for &b in &basis[i..] {
            if (a & b).count_ones() & 1 != 0 {
                return Err(Error::DataValidation(
                    "generator rows are not pairwise orthogonal".into(),
                ));
            }
        }
    }
    let mut codewords = Vec::with_capacity(4096);
    for bits in 0u32..4096 {
        let mut w = 0u32;
        for (i, &row) in basis.iter().enumerate() {
            if bits >> i & 1 == 1 {
                w ^= row;
            }
        }
        codewords.push(w);
    }
    codewords.sort_unstable();
    codewords.dedup();
    if codewords.len() != 4096 {
        return Err(Error::DataValidation("codeword count is not 4096".into()));
    }
    let mut distribution: BTreeMap<u32, usize> = BTreeMap::new();
    for &w in &codewords {
        *distribution.entry(weight(w)).or_insert(0) += 1;
    }
    let expected: BTreeMap<u32, usize> = [(0, 1), (8, 759), (12, 2576), (16, 759), (24, 1)]
        .into_iter()
        .collect();
    if distribution != expected {
        return Err(Error::DataValidation(format!(
            "weight distribution {distribution:?}, expected {expected:?}"
        )));
    }
    let octads: Vec<Octad> = codewords
        .iter()
        .filter(|&&w| weight(w) == 8)
        .map(|&w| Octad(w))
        .collect();
    let code = GolayCode {
        basis,
        codewords,
        octads,
    };
    if !code.contains(brick_mask()) {
        return Err(Error::DataValidation("brick is not a codeword".into()));
    }
    Ok(code)
}

impl GolayCode {
    pub fn basis(&self) -> &[u32; 12] {
        &self.basis
    }

    pub fn contains(&self, word: u32) -> bool {
        self.codewords.binary_search(&word).is_ok()
    }

    /// The 759 octads in ascending mask order.
    pub fn octads(&self) -> &[Octad] {
        &self.octads
    }

    pub fn weight_distribution(&self) -> BTreeMap<u32, usize> {
        let mut dist = BTreeMap::new();
        for &w in &self.codewords {
            *dist.entry(weight(w)).or_insert(0) += 1;
        }
        dist
    }
}

/// Steiner verification: each of the C(24,5) = 42504 five-point subsets
/// must lie in exactly one octad.
#[derive(Clone, Debug, Serialize)]
pub struct SteinerReport {
    pub five_sets: usize,
    pub coverage_histogram: BTreeMap<usize, usize>,
    pub witness: Option<[usize; 5]>,
}

pub fn verify_steiner(octads: &[Octad]) -> Result<SteinerReport> {
    let mut covers: Vec<u32> = Vec::with_capacity(759 * 56);
    for o in octads {
        let pts = o.points();
        // all C(8,5) = 56 five-subsets of the octad
        for a in 0..8 {
            for b in a + 1..8 {
                for c in b + 1..8 {
                    // complement form: drop three of the eight points
                    let mut m = o.mask();
                    m &= !(1 << pts[a]);
                    m &= !(1 << pts[b]);
                    m &= !(1 << pts[c]);
                    covers.push(m);
                }
            }
        }
    }
    covers.sort_unstable();
    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    let mut i = 0;
    let mut witness = None;
    while i < covers.len() {
        let mut j = i;
        while j < covers.len() && covers[j] == covers[i] {
            j += 1;
        }
        *histogram.entry(j - i).or_insert(0) += 1;
        if j - i != 1 && witness.is_none() {
            let pts: Vec<usize> = (0..POINTS).filter(|&p| covers[i] >> p & 1 == 1).collect();
            witness = Some([pts[0], pts[1], pts[2], pts[3], pts[4]]);
        }
        i = j;
    }
    let five_sets: usize = histogram.iter().map(|(_, &n)| n).sum();
    let report = SteinerReport {
        five_sets,
        coverage_histogram: histogram,
        witness,
    };
    if report.five_sets != 42_504
        || report.coverage_histogram != [(1, 42_504)].into_iter().collect()
    {
        return Err(Error::Verification(format!(
            "five-set coverage is not a Steiner system: histogram {:?}, witness {:?}",
            report.coverage_histogram, report.witness
        )));
    }
    Ok(report)
}

/// How the octads meet the brick: map from intersection size to count.
pub fn brick_intersection_profile(octads: &[Octad]) -> BTreeMap<u32, usize> {
    let brick = brick_mask();
    let mut profile = BTreeMap::new();
    for o in octads {
        *profile.entry(weight(o.mask() & brick)).or_insert(0) += 1;
    }
    profile
}

/// M24 as parsed, validated generators plus a stabilizer chain.
pub struct M24 {
    generators: Vec<Perm24>,
    chain: StabilizerChain<24>,
}

/// Parse the embedded generators, check each permutes the octad set
/// (which forces it to preserve the code: octads span it), build the
/// chain, and require order 244 823 040.
pub fn m24_group(code: &GolayCode) -> Result<M24> {
    let mut generators = Vec::new();
    for line in M24_DATA.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        generators.push(
            Perm::<24>::parse_line(line)
                .map_err(|_| Error::DataValidation(format!("bad generator line {line:?}")))?,
        );
    }
    if generators.is_empty() {
        return Err(Error::DataValidation("no M24 generators embedded".into()));
    }
    let octad_set: HashSet<u32> = code.octads().iter().map(|o| o.mask()).collect();
    for (i, g) in generators.iter().enumerate() {
        let ok = code
            .octads()
            .iter()
            .all(|o| octad_set.contains(&apply_to_mask(g, o.mask())));
        if !ok {
            return Err(Error::DataValidation(format!(
                "embedded generator {i} does not preserve the octad set"
            )));
        }
    }
    let chain = StabilizerChain::new(&generators);
    if chain.order() != 244_823_040 {
        return Err(Error::DataValidation(format!(
            "generated group has order {}, expected 244823040",
            chain.order()
        )));
    }
    Ok(M24 { generators, chain })
}

impl M24 {
    pub fn generators(&self) -> &[Perm24] {
        &self.generators
    }

    pub fn chain(&self) -> &StabilizerChain<24> {
        &self.chain
    }
}

/// Setwise stabilizer of an octad, computed from the group's action on
/// the 759 octads: BFS the orbit of `octad` with a transversal, feed the
/// Schreier generators to a new chain. The orbit must be all 759 octads
/// and the stabilizer must have order 322 560 (index 759).
pub fn octad_stabilizer(m24: &M24, code: &GolayCode, octad: Octad) -> Result<StabilizerChain<24>> {
    if !code.contains(octad.mask()) || weight(octad.mask()) != 8 {
        return Err(Error::Verification("stabilized set is not an octad".into()));
    }
    let mut transversal: BTreeMap<u32, Perm24> = BTreeMap::new();
    transversal.insert(octad.mask(), Perm::identity());
    let mut frontier = vec![octad.mask()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &m in &frontier {
            let rep = transversal[&m];
            for g in &m24.generators {
                let image = apply_to_mask(g, m);
                transversal.entry(image).or_insert_with(|| {
                    next.push(image);
                    g.compose(&rep)
                });
            }
        }
        next.sort_unstable();
        frontier = next;
    }
    if transversal.len() != code.octads().len() {
        return Err(Error::Verification(format!(
            "octad orbit has size {}, expected 759",
            transversal.len()
        )));
    }
    let mut schreier: Vec<Perm24> = Vec::new();
    let mut seen: HashSet<Perm24> = HashSet::new();
    for (&m, rep) in &transversal {
        for g in &m24.generators {
            let target = &transversal[&apply_to_mask(g, m)];
            let s = target.inverse().compose(g).compose(rep);
            if !s.is_identity() && seen.insert(s) {
                schreier.push(s);
            }
        }
    }
    let chain = StabilizerChain::new(&schreier);
    if chain.order() != 322_560 {
        return Err(Error::Verification(format!(
            "octad stabilizer has order {}, expected 322560",
            chain.order()
        )));
    }
    Ok(chain)
}

/// Result of restricting the brick stabilizer to the square.
#[derive(Clone, Debug, Serialize)]
pub struct RestrictionReport {
    pub stabilizer_order: u64,
    pub restricted_size: usize,
    pub faithful: bool,
    pub equals_grid_group: bool,
}

/// Restrict every element of the brick stabilizer to the 16 square
/// points under the cell identification. The restriction must be
/// faithful and must equal the grid group as a set of permutations.
pub fn restrict_to_square(
    stab: &StabilizerChain<24>,
    grid_group: &GroupSet,
) -> Result<RestrictionReport> {
    let brick = brick_mask();
    let mut restricted: Vec<CellPerm> = Vec::with_capacity(stab.order() as usize);
    let mut bad: Option<Perm24> = None;
    stab.for_each_element(|g| {
        if bad.is_some() {
            return;
        }
        if apply_to_mask(g, brick) != brick {
            bad = Some(*g);
            return;
        }
        let mut images = [0u8; 16];
        for (cell, slot) in images.iter_mut().enumerate() {
            let image_point = g.image(point_of_cell(cell));
            match square_cell(image_point) {
                Some(c) => *slot = c as u8,
                None => {
                    bad = Some(*g);
                    return;
                }
            }
        }
        restricted.push(Perm::new(images).expect("restriction of a bijection"));
    });
    if let Some(g) = bad {
        return Err(Error::Verification(format!(
            "stabilizer element does not fix the brick setwise: {g:?}"
        )));
    }
    let total = restricted.len();
    restricted.sort_unstable();
    restricted.dedup();
    let faithful = restricted.len() == total;
    if !faithful {
        return Err(Error::Verification(
            "restriction to the square is not injective".into(),
        ));
    }
    let equals = restricted.len() == grid_group.len()
        && restricted
            .iter()
            .zip(grid_group.elements())
            .all(|(a, b)| a == b);
    if !equals {
        return Err(Error::Verification(
            "restricted stabilizer differs from the grid group".into(),
        ));
    }
    Ok(RestrictionReport {
        stabilizer_order: stab.order() as u64,
        restricted_size: restricted.len(),
        faithful,
        equals_grid_group: equals,
    })
}

/// One brick split paired with the line whose 4-partition the split's
/// octads cut out of the square.
#[derive(Clone, Debug, Serialize)]
pub struct SplitEntry {
    /// The two brick halves, as sorted point lists.
    pub halves: [[usize; 4]; 2],
    /// The induced partition of the 16 cells, as sorted cell masks.
    pub partition: [u16; 4],
    /// Masks of the three functionals of the matched line.
    pub line: [u8; 3],
}

#[derive(Clone, Debug, Serialize)]
pub struct SplitCorrespondence {
    pub entries: Vec<SplitEntry>,
    pub bijective: bool,
    pub disjoint_octads_match_hyperplanes: bool,
}

/// For each 4|4 split of the brick, the four octads meeting the brick in
/// one half cut the square into four 4-cell classes; that partition must
/// agree for the two halves, match the 4-partition of exactly one line,
/// and the induced map from the 35 splits to the 35 lines must be a
/// bijection. The 30 brick-disjoint octads must restrict to exactly the
/// 30 affine hyperplane 8-sets.
pub fn brick_split_correspondence(code: &GolayCode) -> Result<SplitCorrespondence> {
    let brick = brick_mask();
    let brick_points: Vec<usize> = (0..POINTS).filter(|&p| brick >> p & 1 == 1).collect();

    // partition -> line lookup over all 35 lines
    let mut line_of_partition: BTreeMap<[u16; 4], ProjLine> = BTreeMap::new();
    for line in geometry::lines() {
        line_of_partition.insert(four_partition(&line), line);
    }

    // group the 280 four-point-intersection octads by brick half
    let mut by_half: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for o in code.octads() {
        let h = o.mask() & brick;
        if weight(h) == 4 && o.mask() != brick {
            by_half.entry(h).or_default().push(o.mask());
        }
    }
    if by_half.len() != 70 {
        return Err(Error::Verification(format!(
            "expected 70 brick halves with octads, found {}",
            by_half.len()
        )));
    }

    let square_part = |octad: u32| -> u16 {
        let mut m = 0u16;
        for cell in 0..16 {
            if octad >> point_of_cell(cell) & 1 == 1 {
                m |= 1 << cell;
            }
        }
        m
    };

    let partition_of_half = |half: u32, octads: &[u32]| -> Result<[u16; 4]> {
        if octads.len() != 4 {
            return Err(Error::Verification(format!(
                "half {half:#08x} lies in {} octads, expected 4",
                octads.len()
            )));
        }
        let mut classes = [0u16; 4];
        let mut union = 0u16;
        for (slot, &o) in octads.iter().enumerate() {
            let part = square_part(o);
            if part.count_ones() != 4 {
                return Err(Error::Verification(format!(
                    "octad {o:#08x} meets the square in {} cells, expected 4",
                    part.count_ones()
                )));
            }
            classes[slot] = part;
            union |= part;
        }
        if union != 0xffff {
            return Err(Error::Verification(format!(
                "octads over half {half:#08x} do not partition the square"
            )));
        }
        classes.sort_unstable();
        Ok(classes)
    };

    let mut entries = Vec::with_capacity(35);
    let mut used_lines: HashSet<ProjLine> = HashSet::new();
    let mut seen_halves: HashSet<u32> = HashSet::new();
    for (&half, octads) in &by_half {
        if seen_halves.contains(&half) {
            continue;
        }
        let comp = brick & !half;
        seen_halves.insert(half);
        seen_halves.insert(comp);
        let partition = partition_of_half(half, octads)?;
        let comp_partition = partition_of_half(
            comp,
            by_half
                .get(&comp)
                .ok_or_else(|| Error::Verification("complement half has no octads".into()))?,
        )?;
        if partition != comp_partition {
            return Err(Error::Verification(format!(
                "halves {half:#08x} and {comp:#08x} induce different partitions"
            )));
        }
        let line = *line_of_partition.get(&partition).ok_or_else(|| {
            Error::Verification(format!(
                "partition for half {half:#08x} matches no line of PG(3,2)"
            ))
        })?;
        if !used_lines.insert(line) {
            return Err(Error::Verification(format!(
                "line {:?} is hit by two distinct splits",
                line.masks()
            )));
        }
        let mut h1: Vec<usize> = brick_points
            .iter()
            .copied()
            .filter(|&p| half >> p & 1 == 1)
            .collect();
        let mut h2: Vec<usize> = brick_points
            .iter()
            .copied()
            .filter(|&p| comp >> p & 1 == 1)
            .collect();
        h1.sort_unstable();
        h2.sort_unstable();
        entries.push(SplitEntry {
            halves: [h1.try_into().unwrap(), h2.try_into().unwrap()],
            partition,
            line: line.masks(),
        });
    }
    let bijective = entries.len() == 35 && used_lines.len() == 35;
    if !bijective {
        return Err(Error::Verification(format!(
            "split-to-line map is not a bijection: {} splits, {} lines",
            entries.len(),
            used_lines.len()
        )));
    }

    // brick-disjoint octads against the affine hyperplane 8-sets
    let mut disjoint: Vec<u16> = code
        .octads()
        .iter()
        .filter(|o| o.mask() & brick == 0)
        .map(|o| square_part(o.mask()))
        .collect();
    disjoint.sort_unstable();
    let hyper = geometry::hyperplane_sets();
    let disjoint_match = disjoint == hyper;
    if !disjoint_match {
        return Err(Error::Verification(
            "brick-disjoint octads are not the affine hyperplane 8-sets".into(),
        ));
    }

    Ok(SplitCorrespondence {
        entries,
        bijective,
        disjoint_octads_match_hyperplanes: disjoint_match,
    })
}
