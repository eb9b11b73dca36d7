//! Verification runners and their JSON report shapes. Each runner
//! collects failures as strings instead of aborting, so `verify` can
//! emit a machine-readable failure list and exit nonzero.

use std::collections::BTreeMap;

use serde::Serialize;

use diamondlab_core::affine::{affine_group_order, as_affine};
use diamondlab_core::geometry::{classify, verify_orthogonality_skewness, OrthogonalityReport};
use diamondlab_core::golay::{
    brick_intersection_profile, brick_mask, brick_split_correspondence, build_golay, m24_group,
    octad_stabilizer, restrict_to_square, verify_steiner, Octad, RestrictionReport,
};
use diamondlab_core::perm::{group_generators, orbit, GroupSet};
use diamondlab_core::ring::{
    additive_closure, affine_patterns, cut_census, is_affine_pattern, CutCensus, CutDefinition,
    Gf4Pattern,
};
use diamondlab_core::schreier::StabilizerChain;
use diamondlab_core::symmetry::{
    center_lemma_check, symmetry_profile, verify_theorem, TheoremReport,
};
use diamondlab_core::{diamond_figure, Pattern};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct GroupReport {
    pub schema_version: u32,
    pub closure_order: usize,
    pub bfs_depth: usize,
    pub chain_order: u64,
    pub affine_group_order: u64,
    pub all_elements_affine: bool,
    pub failures: Vec<String>,
}

pub fn run_group(cap: usize) -> GroupReport {
    let mut failures = Vec::new();
    let gens = group_generators();
    let (closure_order, bfs_depth, all_affine) = match GroupSet::generate(&gens, cap) {
        Ok(g) => {
            let all_affine = g.elements().iter().all(|e| as_affine(e).is_some());
            if !all_affine {
                failures.push("some closure element is not affine".into());
            }
            (g.len(), g.bfs_depth(), all_affine)
        }
        Err(e) => {
            failures.push(format!("closure: {e}"));
            (0, 0, false)
        }
    };
    let chain_order = StabilizerChain::new(&gens).order() as u64;
    if closure_order != 322_560 {
        failures.push(format!("closure order {closure_order}, expected 322560"));
    }
    if chain_order != 322_560 {
        failures.push(format!("chain order {chain_order}, expected 322560"));
    }
    if affine_group_order(4) != closure_order as u64 {
        failures.push("closure order differs from the affine group order".into());
    }
    GroupReport {
        schema_version: SCHEMA_VERSION,
        closure_order,
        bfs_depth,
        chain_order,
        affine_group_order: affine_group_order(4),
        all_elements_affine: all_affine,
        failures,
    }
}

#[derive(Serialize)]
pub struct TheoremTargetReport {
    pub schema_version: u32,
    pub orbit_size: usize,
    pub stabilizer_order: u64,
    pub theorem: TheoremReport,
    pub center_lemma_failures: Vec<String>,
    pub failures: Vec<String>,
}

pub fn run_theorem(cap: usize) -> TheoremTargetReport {
    let mut failures = Vec::new();
    let orb = orbit(&diamond_figure(), &group_generators(), cap).unwrap_or_default();
    if orb.len() != 840 {
        failures.push(format!("orbit size {}, expected 840", orb.len()));
    }
    let theorem = verify_theorem(&orb);
    if !theorem.failures.is_empty() {
        failures.push(format!(
            "{} patterns without symmetry",
            theorem.failures.len()
        ));
    }
    let center_lemma_failures: Vec<String> = orb
        .iter()
        .filter(|p| !center_lemma_check(p))
        .map(|p| p.encode())
        .collect();
    if !center_lemma_failures.is_empty() {
        failures.push(format!(
            "{} patterns fail the center lemma",
            center_lemma_failures.len()
        ));
    }
    let stabilizer_order = if orb.is_empty() {
        0
    } else {
        322_560 / orb.len() as u64
    };
    if stabilizer_order != 384 {
        failures.push(format!("stabilizer order {stabilizer_order}, expected 384"));
    }
    TheoremTargetReport {
        schema_version: SCHEMA_VERSION,
        orbit_size: orb.len(),
        stabilizer_order,
        theorem,
        center_lemma_failures,
        failures,
    }
}

#[derive(Serialize)]
pub struct GeometryReport {
    pub schema_version: u32,
    pub points: usize,
    pub lines: usize,
    pub classes: usize,
    pub class_size: usize,
    pub orthogonality: OrthogonalityReport,
    pub failures: Vec<String>,
}

pub fn run_geometry(cap: usize) -> GeometryReport {
    let mut failures = Vec::new();
    let orb = orbit(&diamond_figure(), &group_generators(), cap).unwrap_or_default();
    let (classes, class_size) = match classify(&orb) {
        Ok(classes) => {
            let size = classes.first().map(|(_, m)| m.len()).unwrap_or(0);
            (classes.len(), size)
        }
        Err(e) => {
            failures.push(format!("classification: {e}"));
            (0, 0)
        }
    };
    if classes != 35 || class_size != 24 {
        failures.push(format!(
            "expected 35 classes of 24, got {classes} of {class_size}"
        ));
    }
    let orthogonality = verify_orthogonality_skewness();
    if !orthogonality.violations.is_empty() {
        failures.push(format!(
            "{} orthogonality/skewness violations",
            orthogonality.violations.len()
        ));
    }
    if orthogonality.orthogonal_pairs != 280 || orthogonality.skew_pairs != 280 {
        failures.push("orthogonal/skew pair counts differ from 280".into());
    }
    GeometryReport {
        schema_version: SCHEMA_VERSION,
        points: diamondlab_core::geometry::points().len(),
        lines: diamondlab_core::geometry::lines().len(),
        classes,
        class_size,
        orthogonality,
        failures,
    }
}

#[derive(Serialize)]
pub struct RingReport {
    pub schema_version: u32,
    pub closure_size: usize,
    pub equals_affine_set: bool,
    pub symmetry_failures: usize,
    pub censuses: Vec<CutCensus>,
    pub failures: Vec<String>,
}

pub fn run_ring(cap: usize) -> RingReport {
    let mut failures = Vec::new();
    let orb = orbit(&diamond_figure(), &group_generators(), cap).unwrap_or_default();
    let seeds: Vec<Gf4Pattern> = orb.iter().map(Gf4Pattern::from_pattern).collect();
    let closure = match additive_closure(&seeds, cap) {
        Ok(c) => c,
        Err(e) => {
            failures.push(format!("additive closure: {e}"));
            Vec::new()
        }
    };
    if closure.len() != 1024 {
        failures.push(format!("closure size {}, expected 1024", closure.len()));
    }
    let equals_affine_set = closure == affine_patterns();
    if !equals_affine_set {
        failures.push("closure differs from the affine pattern set".into());
    }
    if !closure.iter().all(is_affine_pattern) {
        failures.push("closure contains a non-affine pattern".into());
    }
    let symmetry_failures = closure
        .iter()
        .filter(|p| !symmetry_profile(&p.to_pattern()).is_symmetric())
        .count();
    if symmetry_failures != 0 {
        failures.push(format!(
            "{symmetry_failures} closure patterns without symmetry"
        ));
    }
    let censuses: Vec<CutCensus> = CutDefinition::ALL.into_iter().map(cut_census).collect();
    RingReport {
        schema_version: SCHEMA_VERSION,
        closure_size: closure.len(),
        equals_affine_set,
        symmetry_failures,
        censuses,
        failures,
    }
}

#[derive(Serialize)]
pub struct MogReport {
    pub schema_version: u32,
    pub weight_distribution: BTreeMap<u32, usize>,
    pub steiner_histogram: BTreeMap<usize, usize>,
    pub brick_profile: BTreeMap<u32, usize>,
    pub m24_order: u64,
    pub octad_stabilizer_order: u64,
    pub restriction: Option<RestrictionReport>,
    pub splits_bijective: bool,
    pub disjoint_octads_match_hyperplanes: bool,
    pub failures: Vec<String>,
}

pub fn run_mog(cap: usize) -> MogReport {
    let mut report = MogReport {
        schema_version: SCHEMA_VERSION,
        weight_distribution: BTreeMap::new(),
        steiner_histogram: BTreeMap::new(),
        brick_profile: BTreeMap::new(),
        m24_order: 0,
        octad_stabilizer_order: 0,
        restriction: None,
        splits_bijective: false,
        disjoint_octads_match_hyperplanes: false,
        failures: Vec::new(),
    };
    let code = match build_golay() {
        Ok(c) => c,
        Err(e) => {
            report.failures.push(format!("golay build: {e}"));
            return report;
        }
    };
    report.weight_distribution = code.weight_distribution();
    match verify_steiner(code.octads()) {
        Ok(s) => report.steiner_histogram = s.coverage_histogram,
        Err(e) => report.failures.push(format!("steiner: {e}")),
    }
    report.brick_profile = brick_intersection_profile(code.octads());
    let m24 = match m24_group(&code) {
        Ok(m) => m,
        Err(e) => {
            report.failures.push(format!("m24: {e}"));
            return report;
        }
    };
    report.m24_order = m24.chain().order() as u64;
    let stab = match octad_stabilizer(&m24, &code, Octad(brick_mask())) {
        Ok(s) => s,
        Err(e) => {
            report.failures.push(format!("octad stabilizer: {e}"));
            return report;
        }
    };
    report.octad_stabilizer_order = stab.order() as u64;
    match GroupSet::generate(&group_generators(), cap) {
        Ok(g) => match restrict_to_square(&stab, &g) {
            Ok(r) => report.restriction = Some(r),
            Err(e) => report.failures.push(format!("restriction: {e}")),
        },
        Err(e) => report.failures.push(format!("grid group: {e}")),
    }
    match brick_split_correspondence(&code) {
        Ok(s) => {
            report.splits_bijective = s.bijective;
            report.disjoint_octads_match_hyperplanes = s.disjoint_octads_match_hyperplanes;
        }
        Err(e) => report.failures.push(format!("split correspondence: {e}")),
    }
    if report.m24_order != 244_823_040 {
        report
            .failures
            .push(format!("m24 order {}", report.m24_order));
    }
    if report.octad_stabilizer_order != 322_560 {
        report.failures.push(format!(
            "octad stabilizer order {}",
            report.octad_stabilizer_order
        ));
    }
    report
}

#[derive(Serialize)]
pub struct AllReport {
    pub schema_version: u32,
    pub group: GroupReport,
    pub theorem: TheoremTargetReport,
    pub geometry: GeometryReport,
    pub ring: RingReport,
    pub mog: MogReport,
    pub failures: Vec<String>,
}

pub fn run_all(cap: usize) -> AllReport {
    let group = run_group(cap);
    let theorem = run_theorem(cap);
    let geometry = run_geometry(cap);
    let ring = run_ring(cap);
    let mog = run_mog(cap);
    let mut failures = Vec::new();
    for (name, fs) in [
        ("group", &group.failures),
        ("theorem", &theorem.failures),
        ("geometry", &geometry.failures),
        ("ring", &ring.failures),
        ("mog", &mog.failures),
    ] {
        failures.extend(fs.iter().map(|f| format!("{name}: {f}")));
    }
    AllReport {
        schema_version: SCHEMA_VERSION,
        group,
        theorem,
        geometry,
        ring,
        mog,
        failures,
    }
}

/// The structure catalog record set: line masks, member codec strings,
/// and the induced 4-partition as cell index lists.
#[derive(Serialize)]
pub struct StructureRecord {
    pub line: [u8; 3],
    pub patterns: Vec<String>,
    pub four_partition: [Vec<u8>; 4],
}

#[derive(Serialize)]
pub struct OrbitCatalog {
    pub schema_version: u32,
    pub patterns: Vec<String>,
}

#[derive(Serialize)]
pub struct StructureCatalog {
    pub schema_version: u32,
    pub structures: Vec<StructureRecord>,
}

pub fn orbit_catalog(orb: &[Pattern]) -> OrbitCatalog {
    OrbitCatalog {
        schema_version: SCHEMA_VERSION,
        patterns: orb.iter().map(|p| p.encode()).collect(),
    }
}

pub fn structure_catalog(orb: &[Pattern]) -> Result<StructureCatalog, diamondlab_core::Error> {
    let classes = classify(orb)?;
    let structures = classes
        .into_iter()
        .map(|(line, members)| {
            let partition = diamondlab_core::geometry::four_partition(&line);
            let cells = partition.map(|mask| (0..16u8).filter(|&c| mask >> c & 1 == 1).collect());
            StructureRecord {
                line: line.masks(),
                patterns: members.iter().map(|p| p.encode()).collect(),
                four_partition: cells,
            }
        })
        .collect();
    Ok(StructureCatalog {
        schema_version: SCHEMA_VERSION,
        structures,
    })
}
