//! Base-and-strong-generators chains for permutation groups.
//!
//! This is the engine behind order and membership queries on groups too
//! large to enumerate, in particular degree-24 groups. Construction is
//! a deterministic incremental Schreier-Sims: generators are sifted
//! through the chain, surviving residues are installed as strong
//! generators on every level whose base prefix they fix, and the chain
//! is re-closed until every Schreier generator sifts to the identity.
//! Base points are always the smallest point moved, so chains are
//! reproducible.

use crate::error::Result;
use crate::perm::Perm;

struct Level<const N: usize> {
    base: usize,
    /// All strong generators fixing the bases of the levels above.
    gens: Vec<Perm<N>>,
    /// `transversal[p]` maps `base` to `p`; `None` outside the orbit.
    transversal: Vec<Option<Perm<N>>>,
    /// Orbit points in discovery order.
    orbit: Vec<usize>,
}

impl<const N: usize> Level<N> {
    fn new(base: usize) -> Level<N> {
        let mut level = Level {
            base,
            gens: Vec::new(),
            transversal: Vec::new(),
            orbit: Vec::new(),
        };
        level.rebuild_orbit();
        level
    }

    fn rebuild_orbit(&mut self) {
        self.transversal = vec![None; N];
        self.transversal[self.base] = Some(Perm::identity());
        self.orbit = vec![self.base];
        let mut i = 0;
        while i < self.orbit.len() {
            let pt = self.orbit[i];
            let rep = self.transversal[pt].unwrap();
            for g in &self.gens {
                let q = g.image(pt);
                if self.transversal[q].is_none() {
                    self.transversal[q] = Some(g.compose(&rep));
                    self.orbit.push(q);
                }
            }
            i += 1;
        }
    }
}

pub struct StabilizerChain<const N: usize> {
    levels: Vec<Level<N>>,
    generators: Vec<Perm<N>>,
}

impl<const N: usize> StabilizerChain<N> {
    /// Build a chain for the group generated by `generators`.
    pub fn new(generators: &[Perm<N>]) -> StabilizerChain<N> {
        Self::with_first_base(None, generators)
    }

    /// Build a chain whose first base point is prescribed.
    fn with_first_base(first: Option<usize>, generators: &[Perm<N>]) -> StabilizerChain<N> {
        let mut chain = StabilizerChain {
            levels: Vec::new(),
            generators: generators.to_vec(),
        };
        if let Some(base) = first {
            chain.levels.push(Level::new(base));
        }
        for g in generators {
            if let Some((lvl, res)) = chain.sift_residue(0, *g) {
                chain.install(lvl, res);
                chain.close();
            }
        }
        chain
    }

    fn smallest_moved(g: &Perm<N>) -> usize {
        (0..N)
            .find(|&i| g.image(i) != i)
            .expect("identity has no moved point")
    }

    /// Strip `g` through the transversals from `level` down. `None`
    /// means it reduced to the identity; otherwise the level at which
    /// the residue escaped and the residue itself.
    fn sift_residue(&self, level: usize, g: Perm<N>) -> Option<(usize, Perm<N>)> {
        let mut h = g;
        for lvl in level..self.levels.len() {
            if h.is_identity() {
                return None;
            }
            let image = h.image(self.levels[lvl].base);
            match &self.levels[lvl].transversal[image] {
                Some(rep) => h = rep.inverse().compose(&h),
                None => return Some((lvl, h)),
            }
        }
        if h.is_identity() {
            None
        } else {
            Some((self.levels.len(), h))
        }
    }

    /// Install a residue that fixes the first `lvl` base points: it
    /// becomes a strong generator of every level up to and including
    /// `lvl`, extending the chain when it sifted off the end.
    fn install(&mut self, lvl: usize, residue: Perm<N>) {
        if lvl == self.levels.len() {
            self.levels.push(Level::new(Self::smallest_moved(&residue)));
        }
        for level in self.levels[..=lvl].iter_mut() {
            level.gens.push(residue);
            level.rebuild_orbit();
        }
    }

    /// Re-close the chain: rescan every level's Schreier generators and
    /// install surviving residues until nothing new appears.
    fn close(&mut self) {
        'restart: loop {
            for i in 0..self.levels.len() {
                for oi in 0..self.levels[i].orbit.len() {
                    for gi in 0..self.levels[i].gens.len() {
                        let level = &self.levels[i];
                        let pt = level.orbit[oi];
                        let g = level.gens[gi];
                        let rep = level.transversal[pt].unwrap();
                        let target = level.transversal[g.image(pt)].unwrap();
                        let schreier = target.inverse().compose(&g).compose(&rep);
                        if let Some((lvl, res)) = self.sift_residue(i + 1, schreier) {
                            self.install(lvl, res);
                            continue 'restart;
                        }
                    }
                }
            }
            return;
        }
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn generators(&self) -> &[Perm<N>] {
        &self.generators
    }

    pub fn contains(&self, g: &Perm<N>) -> bool {
        self.sift_residue(0, *g).is_none()
    }

    /// Chain for the subgroup fixing `point`: rebase so `point` is the
    /// first base, then rebuild from the strong generators below it.
    pub fn point_stabilizer(&self, point: usize) -> StabilizerChain<N> {
        let rebased = Self::with_first_base(Some(point), &self.generators);
        let stab_gens: Vec<Perm<N>> = match rebased.levels.get(1) {
            Some(level) => level.gens.clone(),
            None => Vec::new(),
        };
        StabilizerChain::new(&stab_gens)
    }

    /// Visit every group element exactly once, as products of transversal
    /// representatives with orbit points taken in ascending order.
    pub fn for_each_element(&self, mut f: impl FnMut(&Perm<N>)) {
        fn rec<const N: usize>(
            levels: &[Level<N>],
            idx: usize,
            acc: Perm<N>,
            f: &mut impl FnMut(&Perm<N>),
        ) {
            if idx == levels.len() {
                f(&acc);
                return;
            }
            for p in 0..N {
                if let Some(rep) = &levels[idx].transversal[p] {
                    rec(levels, idx + 1, acc.compose(rep), f);
                }
            }
        }
        rec(&self.levels, 0, Perm::identity(), &mut f);
    }

    /// Convenience: collect all elements. Only sane for small orders.
    pub fn elements(&self) -> Vec<Perm<N>> {
        let mut out = Vec::with_capacity(self.order() as usize);
        self.for_each_element(|g| out.push(*g));
        out
    }
}

/// Build a chain from raw generator arrays, validating each.
pub fn schreier_sims<const N: usize>(images: &[[u8; N]]) -> Result<StabilizerChain<N>> {
    let mut gens = Vec::with_capacity(images.len());
    for im in images {
        gens.push(Perm::new(*im)?);
    }
    Ok(StabilizerChain::new(&gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{axis_perm, Axis};

    #[test]
    fn symmetric_group_on_four_points() {
        let chain = schreier_sims::<4>(&[[1, 0, 2, 3], [1, 2, 3, 0]]).unwrap();
        assert_eq!(chain.order(), 24);
        assert!(chain.contains(&Perm::new([3, 2, 1, 0]).unwrap()));
        assert!(chain.contains(&Perm::identity()));
        let stab = chain.point_stabilizer(0);
        assert_eq!(stab.order(), 6);
        assert!(stab.contains(&Perm::new([0, 2, 3, 1]).unwrap()));
        assert!(!stab.contains(&Perm::new([1, 0, 2, 3]).unwrap()));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(schreier_sims::<4>(&[[1, 1, 2, 3]]).is_err());
    }

    #[test]
    fn subgroup_fixing_a_point() {
        // S3 embedded in 4 points, fixing point 3
        let chain = schreier_sims::<4>(&[[1, 0, 2, 3], [1, 2, 0, 3]]).unwrap();
        assert_eq!(chain.order(), 6);
        assert!(!chain.contains(&Perm::new([0, 1, 3, 2]).unwrap()));
    }

    #[test]
    fn cyclic_group_of_degree_five() {
        let chain = schreier_sims::<5>(&[[1, 2, 3, 4, 0]]).unwrap();
        assert_eq!(chain.order(), 5);
        assert_eq!(chain.base(), vec![0]);
    }

    #[test]
    fn element_enumeration_matches_order_and_membership() {
        let chain = schreier_sims::<4>(&[[1, 0, 2, 3], [1, 2, 3, 0]]).unwrap();
        let elems = chain.elements();
        assert_eq!(elems.len(), 24);
        let mut sorted = elems.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 24);
        for e in &elems {
            assert!(chain.contains(e));
        }
    }

    #[test]
    fn rows_and_cols_chain_order() {
        let gens = vec![
            axis_perm(Axis::Rows, [1, 0, 2, 3]).unwrap(),
            axis_perm(Axis::Rows, [1, 2, 3, 0]).unwrap(),
            axis_perm(Axis::Cols, [1, 0, 2, 3]).unwrap(),
            axis_perm(Axis::Cols, [1, 2, 3, 0]).unwrap(),
        ];
        let chain = StabilizerChain::new(&gens);
        assert_eq!(chain.order(), 576);
    }

    #[test]
    fn trivial_chain_is_the_identity_group() {
        let chain = StabilizerChain::<4>::new(&[Perm::identity()]);
        assert_eq!(chain.order(), 1);
        assert!(chain.contains(&Perm::identity()));
        assert!(!chain.contains(&Perm::new([1, 0, 2, 3]).unwrap()));
        assert_eq!(chain.elements(), vec![Perm::identity()]);
    }
}
