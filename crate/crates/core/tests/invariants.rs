//! Cross-module invariants that need the whole stack: group closure
//! laws on random pairs, chain/closure membership agreement, structure
//! equivariance under the group action, and the orbit's parameter count.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use diamondlab_core::affine::as_affine;
use diamondlab_core::geometry::{classify, structure_of, ProjPoint};
use diamondlab_core::perm::{act, group_generators, orbit, CellPerm, GroupSet, DEFAULT_CAP};
use diamondlab_core::ring::{affine_patterns, Gf4Pattern};
use diamondlab_core::schreier::StabilizerChain;
use diamondlab_core::symmetry::{color_interchange, symmetry_profile};
use diamondlab_core::{diamond_figure, Pattern};

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x00d1a30)
}

fn grid_group() -> GroupSet {
    GroupSet::generate(&group_generators(), DEFAULT_CAP).unwrap()
}

#[test]
fn closure_is_a_group_on_random_pairs() {
    let g = grid_group();
    let mut rng = rng();
    for _ in 0..10_000 {
        let a = g.elements()[rng.gen_range(0..g.len())];
        let b = g.elements()[rng.gen_range(0..g.len())];
        assert!(g.contains(&a.compose(&b)));
    }
    for _ in 0..1_000 {
        let a = g.elements()[rng.gen_range(0..g.len())];
        assert!(g.contains(&a.inverse()));
    }
    assert!(g.contains(&CellPerm::identity()));
}

#[test]
fn chain_membership_agrees_with_explicit_closure() {
    let g = grid_group();
    let chain = StabilizerChain::new(&group_generators());
    let mut rng = rng();
    for _ in 0..1_000 {
        let a = g.elements()[rng.gen_range(0..g.len())];
        let b = g.elements()[rng.gen_range(0..g.len())];
        let prod = a.compose(&b);
        assert!(chain.contains(&prod));
    }
    // permutations outside the group are rejected by both
    let outside = CellPerm::from_fn(|i| match i {
        0 => 1,
        1 => 2,
        2 => 3,
        3 => 4,
        4 => 0,
        other => other,
    })
    .unwrap();
    assert!(!g.contains(&outside));
    assert!(!chain.contains(&outside));
}

#[test]
fn cell_stabilizer_in_the_grid_group_is_the_linear_group() {
    // the group is transitive on cells; fixing the origin leaves the
    // invertible linear maps, of order (16-1)(16-2)(16-4)(16-8)
    let chain = StabilizerChain::new(&group_generators());
    let stab = chain.point_stabilizer(0);
    assert_eq!(stab.order(), 20_160);
    // and its elements are exactly the translation-free affine maps
    let g = grid_group();
    let linear = g.elements().iter().filter(|e| e.image(0) == 0).count();
    assert_eq!(linear, 20_160);
}

#[test]
fn orbit_patterns_have_balanced_tile_counts() {
    let orb = orbit(&diamond_figure(), &group_generators(), DEFAULT_CAP).unwrap();
    assert_eq!(orb.len(), 840);
    for p in &orb {
        assert_eq!(p.tile_counts(), [4, 4, 4, 4]);
    }
    // direct stabilizer count agrees with orbit-stabilizer arithmetic
    let g = grid_group();
    let d = diamond_figure();
    let stab = g.elements().iter().filter(|e| act(e, &d) == d).count();
    assert_eq!(stab, 384);
}

#[test]
fn theorem_predicate_is_orbit_invariant() {
    let g = grid_group();
    let orb = orbit(&diamond_figure(), &group_generators(), DEFAULT_CAP).unwrap();
    let mut rng = rng();
    for _ in 0..100 {
        let e = g.elements()[rng.gen_range(0..g.len())];
        let p = orb[rng.gen_range(0..orb.len())];
        let q = act(&e, &p);
        assert_eq!(
            symmetry_profile(&p).is_symmetric(),
            symmetry_profile(&q).is_symmetric()
        );
    }
}

#[test]
fn interchange_commutes_with_the_action() {
    let mut rng = rng();
    let g = grid_group();
    for _ in 0..1_000 {
        let e = g.elements()[rng.gen_range(0..g.len())];
        let p = random_pattern(&mut rng);
        assert_eq!(
            act(&e, &color_interchange(&p)),
            color_interchange(&act(&e, &p))
        );
    }
}

fn random_pattern(rng: &mut ChaCha8Rng) -> Pattern {
    let digits: String = (0..16)
        .map(|_| char::from(b'0' + rng.gen_range(0..4u8)))
        .collect();
    Pattern::decode(&digits).unwrap()
}

#[test]
fn structure_lines_transform_by_the_inverse_matrix() {
    let g = grid_group();
    let orb = orbit(&diamond_figure(), &group_generators(), DEFAULT_CAP).unwrap();
    let mut rng = rng();
    for _ in 0..200 {
        let e = g.elements()[rng.gen_range(0..g.len())];
        let p = orb[rng.gen_range(0..orb.len())];
        let map = as_affine(&e).unwrap();
        let inv = map.matrix.inverse().unwrap();
        let line_before = structure_of(&p).unwrap().line;
        let line_after = structure_of(&act(&e, &p)).unwrap().line;
        let mut expected: Vec<u8> = line_before
            .points()
            .iter()
            .map(|pt| inv.row_mul(pt.mask()))
            .collect();
        expected.sort_unstable();
        assert_eq!(expected, line_after.masks().to_vec());
    }
}

#[test]
fn classes_are_permuted_by_the_action() {
    let g = grid_group();
    let orb = orbit(&diamond_figure(), &group_generators(), DEFAULT_CAP).unwrap();
    let classes = classify(&orb).unwrap();
    let mut rng = rng();
    for _ in 0..100 {
        let e = g.elements()[rng.gen_range(0..g.len())];
        let (_, members) = &classes[rng.gen_range(0..classes.len())];
        let mut images: Vec<_> = members
            .iter()
            .map(|p| structure_of(&act(&e, p)).unwrap().line)
            .collect();
        images.dedup();
        assert_eq!(images.len(), 1, "class image is not a single class");
    }
}

#[test]
fn orbit_parameters_factor_as_210_times_4() {
    // each orbit pattern is pinned by (shade functional+constant,
    // direction functional+constant); the map is injective and covers
    // every ordered pair of distinct nonzero functionals
    let orb = orbit(&diamond_figure(), &group_generators(), DEFAULT_CAP).unwrap();
    let mut params = std::collections::BTreeSet::new();
    let mut pairs = std::collections::BTreeSet::new();
    for p in &orb {
        let s = structure_of(p).unwrap();
        let key = (
            s.diagrams[0].point.mask(),
            s.diagrams[0].constant,
            s.diagrams[1].point.mask(),
            s.diagrams[1].constant,
        );
        params.insert(key);
        pairs.insert((key.0, key.2));
    }
    assert_eq!(params.len(), 840);
    assert_eq!(pairs.len(), 210); // 15 * 14 ordered distinct pairs
}

#[test]
fn action_preserves_the_affine_set() {
    let affine = affine_patterns();
    for gen in group_generators() {
        for p in affine.iter().step_by(7) {
            let moved = Gf4Pattern::from_pattern(&act(&gen, &p.to_pattern()));
            assert!(affine.binary_search(&moved).is_ok());
        }
    }
}

#[test]
fn profiles_vary_across_the_orbit() {
    // two orbit members generally have different profiles even though
    // both satisfy the predicate
    let orb = orbit(&diamond_figure(), &group_generators(), DEFAULT_CAP).unwrap();
    let profiles: std::collections::BTreeSet<String> = orb
        .iter()
        .map(|p| symmetry_profile(p).shape_key())
        .collect();
    assert!(profiles.len() > 1);
}

#[test]
fn every_point_appears_as_a_shade_functional() {
    let orb = orbit(&diamond_figure(), &group_generators(), DEFAULT_CAP).unwrap();
    let mut shades = std::collections::BTreeSet::new();
    for p in &orb {
        shades.insert(
            structure_of(p)
                .unwrap()
                .diagram(diamondlab_core::Component::S)
                .point,
        );
    }
    let all: std::collections::BTreeSet<ProjPoint> =
        diamondlab_core::geometry::points().into_iter().collect();
    assert_eq!(shades, all);
}
