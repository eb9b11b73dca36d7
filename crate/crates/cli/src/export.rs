//! Catalog bundle writer: orbit.json, structures.json, and the per-target
//! verification reports, all with stable key order so re-export is
//! byte-identical.

use std::path::{Path, PathBuf};

use diamondlab_core::geometry::{classify, ProjLine};
use diamondlab_core::perm::{group_generators, orbit};
use diamondlab_core::{diamond_figure, Pattern};

use crate::reports;

pub fn orbit_classes(cap: usize) -> Result<Vec<(ProjLine, Vec<Pattern>)>, diamondlab_core::Error> {
    let orb = orbit(&diamond_figure(), &group_generators(), cap)?;
    classify(&orb)
}

fn write_json<T: serde::Serialize>(path: &PathBuf, value: &T) -> Result<(), String> {
    let mut text = serde_json::to_string_pretty(value).expect("catalog serialization");
    text.push('\n');
    std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

/// Write the full bundle under `dir`. The structure catalog's pattern
/// strings are all drawn from the orbit catalog, which keeps the
/// cross-references resolvable by construction; the reports re-verify
/// every claim and carry their own failure lists.
pub fn export_bundle(dir: &Path, cap: usize) -> Result<(), String> {
    let reports_dir = dir.join("reports");
    std::fs::create_dir_all(&reports_dir)
        .map_err(|e| format!("cannot create {}: {e}", reports_dir.display()))?;

    let orb = orbit(&diamond_figure(), &group_generators(), cap).map_err(|e| e.to_string())?;
    write_json(&dir.join("orbit.json"), &reports::orbit_catalog(&orb))?;
    let structures = reports::structure_catalog(&orb).map_err(|e| e.to_string())?;
    write_json(&dir.join("structures.json"), &structures)?;

    write_json(&reports_dir.join("group.json"), &reports::run_group(cap))?;
    write_json(
        &reports_dir.join("theorem.json"),
        &reports::run_theorem(cap),
    )?;
    write_json(
        &reports_dir.join("geometry.json"),
        &reports::run_geometry(cap),
    )?;
    write_json(&reports_dir.join("ring.json"), &reports::run_ring(cap))?;
    write_json(&reports_dir.join("mog.json"), &reports::run_mog(cap))?;
    Ok(())
}
