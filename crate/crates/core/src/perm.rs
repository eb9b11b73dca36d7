//! Permutations of cell grids, the row/column/quadrant generators, the
//! explicit closure of the generated group, and pattern orbits.
//!
//! Composition is "apply right, then left": `(g0 * g1)(x) = g0(g1(x))`.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::pattern::{CellCoord, Pattern, CELLS};

/// Default element cap for closure and orbit enumeration.
pub const DEFAULT_CAP: usize = 10_000_000;

/// A permutation of `{0..N}`, stored as destination images.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm<const N: usize> {
    images: [u8; N],
}

pub type CellPerm = Perm<16>;
pub type Perm24 = Perm<24>;

impl<const N: usize> Perm<N> {
    pub fn identity() -> Perm<N> {
        let mut images = [0u8; N];
        for (i, v) in images.iter_mut().enumerate() {
            *v = i as u8;
        }
        Perm { images }
    }

    pub fn new(images: [u8; N]) -> Result<Perm<N>> {
        let mut seen = [false; N];
        for &v in &images {
            if (v as usize) >= N || seen[v as usize] {
                return Err(Error::NotBijective);
            }
            seen[v as usize] = true;
        }
        Ok(Perm { images })
    }

    pub fn from_fn(f: impl FnMut(usize) -> usize) -> Result<Perm<N>> {
        let mut f = f;
        let mut images = [0u8; N];
        for (i, v) in images.iter_mut().enumerate() {
            *v = f(i) as u8;
        }
        Perm::new(images)
    }

    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u8; N] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u8 == v)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm<N>) -> Perm<N> {
        let mut images = [0u8; N];
        for (out, &mid) in images.iter_mut().zip(other.images.iter()) {
            *out = self.images[mid as usize];
        }
        Perm { images }
    }

    pub fn inverse(&self) -> Perm<N> {
        let mut images = [0u8; N];
        for i in 0..N {
            images[self.images[i] as usize] = i as u8;
        }
        Perm { images }
    }

    /// Space-separated destination images, e.g. `"1 0 2 3"`.
    pub fn to_line(&self) -> String {
        let strs: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        strs.join(" ")
    }

    pub fn parse_line(line: &str) -> Result<Perm<N>> {
        let mut images = [0u8; N];
        let mut count = 0;
        for (i, tok) in line.split_whitespace().enumerate() {
            if i >= N {
                return Err(Error::NotBijective);
            }
            images[i] = tok.parse::<u8>().map_err(|_| Error::NotBijective)?;
            count += 1;
        }
        if count != N {
            return Err(Error::NotBijective);
        }
        Perm::new(images)
    }
}

impl<const N: usize> fmt::Debug for Perm<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm({})", self.to_line())
    }
}

/// Which family of four blocks a permutation of `{0..4}` is applied to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axis {
    Rows,
    Cols,
    /// The four 2x2 quadrants, indexed `q = 2*r1 + c1` row-major.
    Quads,
}

/// Lift a permutation of `{0..4}` along an axis to a cell permutation.
/// Tiles move intact; their types are never altered.
pub fn axis_perm(axis: Axis, sigma: [usize; 4]) -> Result<CellPerm> {
    let mut seen = [false; 4];
    for &v in &sigma {
        if v >= 4 || seen[v] {
            return Err(Error::NotBijective);
        }
        seen[v] = true;
    }
    Perm::from_fn(|i| {
        let coord = CellCoord::from_index(i);
        let (r, c) = (coord.r as usize, coord.c as usize);
        let target = match axis {
            Axis::Rows => CellCoord::new(sigma[r] as u8, c as u8),
            Axis::Cols => CellCoord::new(r as u8, sigma[c] as u8),
            Axis::Quads => {
                let q = (r >> 1) << 1 | (c >> 1);
                let sq = sigma[q];
                CellCoord::new(
                    ((sq >> 1) << 1 | (r & 1)) as u8,
                    ((sq & 1) << 1 | (c & 1)) as u8,
                )
            }
        };
        target.index()
    })
}

/// The canonical generators: a transposition and a 4-cycle on each of
/// rows, columns, and quadrants.
pub fn group_generators() -> Vec<CellPerm> {
    let swap = [1, 0, 2, 3];
    let cycle = [1, 2, 3, 0];
    vec![
        axis_perm(Axis::Rows, swap).unwrap(),
        axis_perm(Axis::Rows, cycle).unwrap(),
        axis_perm(Axis::Cols, swap).unwrap(),
        axis_perm(Axis::Cols, cycle).unwrap(),
        axis_perm(Axis::Quads, swap).unwrap(),
        axis_perm(Axis::Quads, cycle).unwrap(),
    ]
}

/// Move the tiles of `p`: the result holds at cell `g(i)` the tile `p`
/// holds at cell `i`.
pub fn act(g: &CellPerm, p: &Pattern) -> Pattern {
    let mut cells = *p.cells();
    for i in 0..CELLS {
        cells[g.image(i)] = p.cell(i);
    }
    Pattern::new(cells)
}

/// An explicitly enumerated permutation group: sorted element list plus
/// the generators and the BFS depth of the closure.
pub struct GroupSet {
    elements: Vec<CellPerm>,
    generators: Vec<CellPerm>,
    bfs_depth: usize,
}

impl GroupSet {
    /// Breadth-first closure of the generators under composition. The
    /// frontier is kept sorted, so enumeration order is reproducible.
    pub fn generate(generators: &[CellPerm], cap: usize) -> Result<GroupSet> {
        if generators.is_empty() {
            return Err(Error::NoGenerators);
        }
        let mut seen: HashSet<CellPerm> = HashSet::new();
        seen.insert(Perm::identity());
        let mut frontier = vec![Perm::<16>::identity()];
        let mut depth = 0;
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for f in &frontier {
                for g in generators {
                    let h = g.compose(f);
                    if seen.insert(h) {
                        if seen.len() > cap {
                            return Err(Error::CapExceeded { cap });
                        }
                        next.push(h);
                    }
                }
            }
            next.sort_unstable();
            frontier = next;
            if !frontier.is_empty() {
                depth += 1;
            }
        }
        let mut elements: Vec<CellPerm> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(GroupSet {
            elements,
            generators: generators.to_vec(),
            bfs_depth: depth,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, g: &CellPerm) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    /// Elements in sorted order.
    pub fn elements(&self) -> &[CellPerm] {
        &self.elements
    }

    pub fn generators(&self) -> &[CellPerm] {
        &self.generators
    }

    pub fn bfs_depth(&self) -> usize {
        self.bfs_depth
    }

    /// Newline-delimited 16-token image lines, sorted, for golden files.
    pub fn export_lines(&self) -> String {
        let mut out = String::with_capacity(self.elements.len() * 40);
        for e in &self.elements {
            out.push_str(&e.to_line());
            out.push('\n');
        }
        out
    }
}

/// BFS orbit of a seed pattern under the generator actions, returned
/// sorted. The frontier is kept sorted for reproducible traversal.
pub fn orbit(seed: &Pattern, generators: &[CellPerm], cap: usize) -> Result<Vec<Pattern>> {
    let mut seen: HashSet<Pattern> = HashSet::new();
    seen.insert(*seed);
    let mut frontier = vec![*seed];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            for g in generators {
                let q = act(g, p);
                if seen.insert(q) {
                    if seen.len() > cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    next.push(q);
                }
            }
        }
        next.sort_unstable();
        frontier = next;
    }
    let mut out: Vec<Pattern> = seen.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}
