//! PG(3,2) on the cell space: points as nonzero functionals, lines as
//! three-sets summing to zero, line diagrams extracted from patterns, the
//! 35-class structure of an orbit, skewness, and orthogonality of the
//! induced 4-partitions.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pattern::{BitGrid16, Component, Pattern, CELLS};

/// A nonzero linear functional on GF(2)^4, as a 4-bit mask over the
/// coordinate bits `(r1 r0 c1 c0)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ProjPoint(u8);

impl ProjPoint {
    pub fn new(mask: u8) -> Option<ProjPoint> {
        (mask != 0 && mask < 16).then_some(ProjPoint(mask))
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn eval(self, vec: u8) -> u8 {
        ((self.0 & vec).count_ones() & 1) as u8
    }
}

/// The 15 points in ascending mask order.
pub fn points() -> Vec<ProjPoint> {
    (1..16).map(ProjPoint).collect()
}

/// A 3-point line: the functionals sum to zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ProjLine([ProjPoint; 3]);

impl ProjLine {
    /// The unique line through two distinct points.
    pub fn through(a: ProjPoint, b: ProjPoint) -> Result<ProjLine> {
        if a == b {
            return Err(Error::EqualPoints);
        }
        let c = ProjPoint(a.0 ^ b.0);
        let mut pts = [a, b, c];
        pts.sort_unstable();
        Ok(ProjLine(pts))
    }

    pub fn points(&self) -> [ProjPoint; 3] {
        self.0
    }

    pub fn contains(&self, p: ProjPoint) -> bool {
        self.0.contains(&p)
    }

    pub fn masks(&self) -> [u8; 3] {
        [self.0[0].0, self.0[1].0, self.0[2].0]
    }
}

/// The 35 lines in ascending order.
pub fn lines() -> Vec<ProjLine> {
    let mut out = Vec::with_capacity(35);
    for a in 1..16u8 {
        for b in (a + 1)..16 {
            let c = a ^ b;
            if c > b {
                out.push(ProjLine([ProjPoint(a), ProjPoint(b), ProjPoint(c)]));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Fit `grid(x) = L.x + c` over all 16 cells with `L` nonzero.
pub fn fit_affine_functional(grid: BitGrid16) -> Option<(ProjPoint, u8)> {
    fit_affine_any(grid).and_then(|(mask, c)| ProjPoint::new(mask).map(|p| (p, c)))
}

/// Same fit but allowing the zero functional (constant grids).
pub fn fit_affine_any(grid: BitGrid16) -> Option<(u8, u8)> {
    let c = grid.bit(0);
    let mut mask = 0u8;
    for j in 0..4 {
        mask |= (grid.bit(1 << j) ^ c) << j;
    }
    for x in 0..CELLS {
        let expect = ((mask & x as u8).count_ones() & 1) as u8 ^ c;
        if grid.bit(x) != expect {
            return None;
        }
    }
    Some((mask, c))
}

/// A component grid that is an affine hyperplane pair: the bit at cell
/// `x` is `point(x) + constant`, splitting the cells 8/8.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LineDiagram {
    pub grid: BitGrid16,
    pub point: ProjPoint,
    pub constant: u8,
}

/// The line structure of a pattern: its three component diagrams, keyed
/// by `Component::ALL` order, and the line their functionals form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Structure {
    pub line: ProjLine,
    pub diagrams: [LineDiagram; 3],
}

impl Structure {
    pub fn diagram(&self, comp: Component) -> &LineDiagram {
        &self.diagrams[Component::ALL.iter().position(|c| *c == comp).unwrap()]
    }
}

/// Extract the structure of a pattern whose components are affine with
/// distinct nonzero linear parts.
pub fn structure_of(p: &Pattern) -> Result<Structure> {
    let mut diagrams = Vec::with_capacity(3);
    for comp in Component::ALL {
        let grid = p.component(comp);
        let (point, constant) = fit_affine_functional(grid).ok_or(Error::ComponentNotAffine {
            component: comp.name(),
        })?;
        diagrams.push(LineDiagram {
            grid,
            point,
            constant,
        });
    }
    let pts = [diagrams[0].point, diagrams[1].point, diagrams[2].point];
    if pts[0] == pts[1] || pts[0] == pts[2] || pts[1] == pts[2] {
        return Err(Error::DegenerateLinearParts);
    }
    debug_assert_eq!(pts[0].mask() ^ pts[1].mask(), pts[2].mask());
    let line = ProjLine::through(pts[0], pts[1])?;
    Ok(Structure {
        line,
        diagrams: [diagrams[0], diagrams[1], diagrams[2]],
    })
}

/// Group an orbit by structure line; validates the 35 x 24 shape, that
/// the keys are exactly the 35 lines, and that all 15 points appear.
pub fn classify(orbit: &[Pattern]) -> Result<Vec<(ProjLine, Vec<Pattern>)>> {
    let mut classes: BTreeMap<ProjLine, Vec<Pattern>> = BTreeMap::new();
    for p in orbit {
        let s = structure_of(p)?;
        classes.entry(s.line).or_default().push(*p);
    }
    if classes.len() != 35 {
        return Err(Error::Classification(format!(
            "expected 35 structure classes, found {}",
            classes.len()
        )));
    }
    let keys: Vec<ProjLine> = classes.keys().copied().collect();
    if keys != lines() {
        return Err(Error::Classification(
            "structure lines are not the 35 lines of PG(3,2)".into(),
        ));
    }
    let mut seen_points = [false; 16];
    for (line, members) in &mut classes {
        if members.len() != 24 {
            return Err(Error::Classification(format!(
                "class {:?} has {} members, expected 24",
                line.masks(),
                members.len()
            )));
        }
        members.sort_unstable();
        for p in line.points() {
            seen_points[p.mask() as usize] = true;
        }
    }
    if seen_points[1..].iter().filter(|&&b| b).count() != 15 {
        return Err(Error::Classification(
            "structure lines do not cover all 15 points".into(),
        ));
    }
    Ok(classes.into_iter().collect())
}

/// Disjoint point sets.
pub fn skew(l1: &ProjLine, l2: &ProjLine) -> Result<bool> {
    if l1 == l2 {
        return Err(Error::EqualLines);
    }
    Ok(l1.points().iter().all(|p| !l2.contains(*p)))
}

/// The 4-cell classes cut out by any two functionals of the line: the
/// fibers of `x -> (f1.x, f2.x)`, i.e. the cosets of `ker f1 ∩ ker f2`.
/// Independent of which two points are chosen. Returned as four cell
/// masks in ascending order.
pub fn four_partition(line: &ProjLine) -> [u16; 4] {
    let [f1, f2, _] = line.points();
    let mut masks = [0u16; 4];
    for x in 0..CELLS {
        let key = (f1.eval(x as u8) << 1 | f2.eval(x as u8)) as usize;
        masks[key] |= 1 << x;
    }
    masks.sort_unstable();
    masks
}

/// Graeco-Latin condition: every class of one partition meets every
/// class of the other in exactly one cell.
pub fn orthogonal(l1: &ProjLine, l2: &ProjLine) -> Result<bool> {
    if l1 == l2 {
        return Err(Error::EqualStructures);
    }
    let p1 = four_partition(l1);
    let p2 = four_partition(l2);
    for a in p1 {
        for b in p2 {
            if (a & b).count_ones() != 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Census over all unordered line pairs of orthogonality against
/// skewness; the two must coincide pair by pair.
#[derive(Clone, Debug, Serialize)]
pub struct OrthogonalityReport {
    pub pairs: usize,
    pub orthogonal_pairs: usize,
    pub skew_pairs: usize,
    pub violations: Vec<[u8; 6]>,
}

pub fn verify_orthogonality_skewness() -> OrthogonalityReport {
    let all = lines();
    let mut report = OrthogonalityReport {
        pairs: 0,
        orthogonal_pairs: 0,
        skew_pairs: 0,
        violations: Vec::new(),
    };
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            report.pairs += 1;
            let orth = orthogonal(&all[i], &all[j]).unwrap();
            let sk = skew(&all[i], &all[j]).unwrap();
            if orth {
                report.orthogonal_pairs += 1;
            }
            if sk {
                report.skew_pairs += 1;
            }
            if orth != sk {
                let a = all[i].masks();
                let b = all[j].masks();
                report.violations.push([a[0], a[1], a[2], b[0], b[1], b[2]]);
            }
        }
    }
    report
}

/// The 30 affine-hyperplane 8-sets: for each point and constant, the
/// cells where the functional takes that constant. Sorted cell masks.
pub fn hyperplane_sets() -> Vec<u16> {
    let mut out = Vec::with_capacity(30);
    for p in points() {
        for c in 0..2u8 {
            let mut mask = 0u16;
            for x in 0..CELLS {
                if p.eval(x as u8) == c {
                    mask |= 1 << x;
                }
            }
            out.push(mask);
        }
    }
    out.sort_unstable();
    out
}
