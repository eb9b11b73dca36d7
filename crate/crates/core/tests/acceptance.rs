//! Acceptance suite: one test per acceptance criterion, every expected
//! value an exact integer. Each test prints a `[PASS]` line; run with
//! `cargo test --test acceptance -- --nocapture` to see them.

use diamondlab_core::affine::{affine_group_order, as_affine};
use diamondlab_core::geometry::{classify, structure_of, verify_orthogonality_skewness};
use diamondlab_core::golay::{
    brick_intersection_profile, brick_mask, brick_split_correspondence, build_golay, m24_group,
    octad_stabilizer, restrict_to_square, verify_steiner, Octad,
};
use diamondlab_core::perm::{group_generators, orbit, GroupSet, DEFAULT_CAP};
use diamondlab_core::ring::{
    additive_closure, affine_patterns, cut_census, cuts_uninterrupted, is_affine_pattern,
    CutDefinition, Gf4Pattern,
};
use diamondlab_core::schreier::StabilizerChain;
use diamondlab_core::symmetry::{center_lemma_check, symmetry_profile, verify_theorem};
use diamondlab_core::{diamond_figure, Pattern};

fn grid_group() -> GroupSet {
    GroupSet::generate(&group_generators(), DEFAULT_CAP).unwrap()
}

fn diamond_orbit() -> Vec<Pattern> {
    orbit(&diamond_figure(), &group_generators(), DEFAULT_CAP).unwrap()
}

#[test]
fn criterion_01_group_order() {
    let g = grid_group();
    assert_eq!(g.len(), 322_560, "closure order");
    let chain = StabilizerChain::new(&group_generators());
    assert_eq!(chain.order(), 322_560, "stabilizer chain order");
    println!("[PASS] criterion 1: closure has 322560 elements, chain order agrees");
}

#[test]
fn criterion_02_affine_identification() {
    let g = grid_group();
    for e in g.elements() {
        assert!(as_affine(e).is_some(), "non-affine element {e:?}");
    }
    assert_eq!(affine_group_order(4), 322_560);
    assert_eq!(g.len() as u64, affine_group_order(4));
    println!(
        "[PASS] criterion 2: all 322560 elements affine; order matches the affine group of GF(2)^4"
    );
}

#[test]
fn criterion_03_diamond_theorem() {
    let orb = diamond_orbit();
    assert_eq!(orb.len(), 840, "orbit size");
    let report = verify_theorem(&orb);
    assert_eq!(report.total, 840);
    assert!(
        report.failures.is_empty(),
        "patterns with no symmetry: {:?}",
        report.failures
    );
    assert_eq!(report.ordinary_count + report.interchange_only_count, 840);
    assert_eq!(
        322_560 / orb.len(),
        384,
        "stabilizer order by orbit-stabilizer"
    );
    println!(
        "[PASS] criterion 3: 840 orbit patterns, 0 failures ({} ordinary, {} interchange-only), stabilizer order 384",
        report.ordinary_count, report.interchange_only_count
    );
}

#[test]
fn criterion_04_center_lemma() {
    let orb = diamond_orbit();
    for p in &orb {
        assert!(
            center_lemma_check(p),
            "center lemma fails for {}",
            p.encode()
        );
    }
    println!("[PASS] criterion 4: all 840 patterns share a symmetry with their 2x2 center");
}

#[test]
fn criterion_05_structure_classification() {
    let orb = diamond_orbit();
    let classes = classify(&orb).unwrap();
    assert_eq!(classes.len(), 35);
    let mut seen_points = std::collections::BTreeSet::new();
    for (line, members) in &classes {
        assert_eq!(members.len(), 24);
        let [a, b, c] = line.masks();
        assert_eq!(a ^ b ^ c, 0, "line does not sum to zero");
        seen_points.extend([a, b, c]);
        for p in members {
            let s = structure_of(p).unwrap();
            assert_eq!(s.line, *line);
            let grids: Vec<u16> = s.diagrams.iter().map(|d| d.grid.0).collect();
            assert_eq!(
                grids[0] ^ grids[1] ^ grids[2],
                0,
                "diagrams do not sum to zero"
            );
        }
    }
    assert_eq!(seen_points.len(), 15, "appearing functionals");
    println!("[PASS] criterion 5: 35 structures x 24 patterns, 15 points covered, diagram triples sum to zero");
}

#[test]
fn criterion_06_orthogonality_theorem() {
    let report = verify_orthogonality_skewness();
    assert_eq!(report.pairs, 595);
    assert!(
        report.violations.is_empty(),
        "violations: {:?}",
        report.violations
    );
    assert_eq!(report.orthogonal_pairs, 280);
    assert_eq!(report.skew_pairs, 280);
    println!("[PASS] criterion 6: over 595 pairs orthogonal == skew, 280 each way, 0 violations");
}

#[test]
fn criterion_07_ring_ideal() {
    let orb = diamond_orbit();
    let seeds: Vec<Gf4Pattern> = orb.iter().map(Gf4Pattern::from_pattern).collect();
    let closure = additive_closure(&seeds, DEFAULT_CAP).unwrap();
    assert_eq!(closure.len(), 1024, "additive closure size");
    let affine = affine_patterns();
    assert_eq!(closure, affine, "closure equals the affine pattern set");
    for p in &closure {
        assert!(is_affine_pattern(p));
        let profile = symmetry_profile(&p.to_pattern());
        assert!(
            profile.is_symmetric(),
            "affine pattern without symmetry: {}",
            p.to_pattern()
        );
    }
    // orbit sits inside the closure
    for p in &seeds {
        assert!(closure.binary_search(p).is_ok());
    }
    let mut lines = Vec::new();
    for def in CutDefinition::ALL {
        let census = cut_census(def);
        // the flag must be the truth: equality forces count 1024, and
        // with count 1024 equality is decided by inclusion of the
        // affine set in the satisfying set
        let all_affine_satisfy = closure.iter().all(|p| cuts_uninterrupted(p, def));
        assert_eq!(
            census.equals_affine_set,
            census.count == 1024 && all_affine_satisfy,
            "census flag inconsistent for {:?}",
            def
        );
        lines.push(format!(
            "{}={} (affine set: {})",
            census.definition, census.count, census.equals_affine_set
        ));
    }
    println!(
        "[PASS] criterion 7: closure of the 840 images = 1024 = affine set, all symmetric; cut census {}",
        lines.join(", ")
    );
}

#[test]
fn criterion_08_golay_steiner() {
    let code = build_golay().unwrap();
    let dist = code.weight_distribution();
    let expected: std::collections::BTreeMap<u32, usize> =
        [(0, 1), (8, 759), (12, 2576), (16, 759), (24, 1)]
            .into_iter()
            .collect();
    assert_eq!(dist, expected, "weight distribution");
    let steiner = verify_steiner(code.octads()).unwrap();
    assert_eq!(
        steiner.coverage_histogram,
        [(1, 42_504)].into_iter().collect()
    );
    let profile = brick_intersection_profile(code.octads());
    let expected_profile: std::collections::BTreeMap<u32, usize> =
        [(8, 1), (4, 280), (2, 448), (0, 30)].into_iter().collect();
    assert_eq!(profile, expected_profile, "brick intersection profile");
    println!("[PASS] criterion 8: weights (1,759,2576,759,1), Steiner coverage {{1: 42504}}, brick profile (1,280,448,30)");
}

#[test]
fn criterion_09_m24_bridge() {
    let code = build_golay().unwrap();
    let m24 = m24_group(&code).unwrap();
    assert_eq!(m24.chain().order(), 244_823_040);
    assert_eq!(759u128 * 322_560, m24.chain().order());
    let stab = octad_stabilizer(&m24, &code, Octad(brick_mask())).unwrap();
    assert_eq!(stab.order(), 322_560);
    let g = grid_group();
    let report = restrict_to_square(&stab, &g).unwrap();
    assert!(report.faithful);
    assert!(report.equals_grid_group);
    assert_eq!(report.restricted_size, 322_560);
    println!("[PASS] criterion 9: |M24| = 244823040 = 759 * 322560; brick stabilizer restricts faithfully onto the grid group");
}

#[test]
fn criterion_10_mog_correspondence() {
    let code = build_golay().unwrap();
    let splits = brick_split_correspondence(&code).unwrap();
    assert_eq!(splits.entries.len(), 35);
    assert!(splits.bijective);
    assert!(splits.disjoint_octads_match_hyperplanes);
    // every line hit exactly once
    let mut lines: Vec<[u8; 3]> = splits.entries.iter().map(|e| e.line).collect();
    lines.sort_unstable();
    lines.dedup();
    assert_eq!(lines.len(), 35);
    println!("[PASS] criterion 10: 35 brick splits map bijectively onto the 35 lines; 30 disjoint octads are the affine hyperplanes");
}
