//! Deterministic SVG rendering: patterns as divided tiles, line diagrams
//! as 8/8 cell classes, the 35-structure plate, the full orbit sheet,
//! and the brick-split sheet. Integer geometry only; identical input
//! yields byte-identical output.

use std::fmt::Write as _;

use diamondlab_core::geometry::{structure_of, ProjLine};
use diamondlab_core::golay::SplitCorrespondence;
use diamondlab_core::pattern::{BitGrid16, CellCoord};
use diamondlab_core::{Pattern, TileType};

#[derive(Clone)]
pub struct RenderSpec {
    pub tile: u32,
    pub margin: u32,
    pub dark: String,
    pub light: String,
}

impl Default for RenderSpec {
    fn default() -> RenderSpec {
        RenderSpec {
            tile: 100,
            margin: 20,
            dark: "#000000".into(),
            light: "#FFFFFF".into(),
        }
    }
}

fn svg_open(out: &mut String, width: u32, height: u32) {
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">"
    );
}

fn rect(out: &mut String, x: u32, y: u32, w: u32, h: u32, fill: &str) {
    let _ = writeln!(
        out,
        "<rect x=\"{x}\" y=\"{y}\" width=\"{w}\" height=\"{h}\" fill=\"{fill}\"/>"
    );
}

fn polygon(out: &mut String, pts: &[(u32, u32)], fill: &str) {
    let coords: Vec<String> = pts.iter().map(|(x, y)| format!("{x},{y}")).collect();
    let _ = writeln!(
        out,
        "<polygon points=\"{}\" fill=\"{fill}\"/>",
        coords.join(" ")
    );
}

/// Corners of the dark triangle of a tile placed with its top-left
/// corner at (x, y) and side `t`. The diagonal and the shaded side
/// follow the tile conventions (shade anchored to the bottom edge).
fn dark_triangle(tile: TileType, x: u32, y: u32, t: u32) -> [(u32, u32); 3] {
    let tl = (x, y);
    let tr = (x + t, y);
    let bl = (x, y + t);
    let br = (x + t, y + t);
    match (tile.direction(), tile.shade()) {
        (0, 1) => [tl, bl, br], // "\" with the bottom-left side dark
        (0, 0) => [tl, tr, br],
        (1, 1) => [bl, br, tr], // "/" with the bottom-right side dark
        _ => [tl, tr, bl],
    }
}

fn draw_pattern(out: &mut String, p: &Pattern, x0: u32, y0: u32, t: u32, spec: &RenderSpec) {
    rect(out, x0, y0, 4 * t, 4 * t, &spec.light);
    for i in 0..16 {
        let coord = CellCoord::from_index(i);
        let x = x0 + u32::from(coord.c) * t;
        let y = y0 + u32::from(coord.r) * t;
        polygon(out, &dark_triangle(p.cell(i), x, y, t), &spec.dark);
    }
}

fn draw_grid(out: &mut String, grid: BitGrid16, x0: u32, y0: u32, t: u32, spec: &RenderSpec) {
    rect(out, x0, y0, 4 * t, 4 * t, &spec.light);
    for i in 0..16 {
        if grid.bit(i) == 1 {
            let coord = CellCoord::from_index(i);
            rect(
                out,
                x0 + u32::from(coord.c) * t,
                y0 + u32::from(coord.r) * t,
                t,
                t,
                &spec.dark,
            );
        }
    }
}

/// A single pattern as 16 divided tiles.
pub fn render_pattern(p: &Pattern, spec: &RenderSpec) -> String {
    let side = 4 * spec.tile + 2 * spec.margin;
    let mut out = String::new();
    svg_open(&mut out, side, side);
    draw_pattern(&mut out, p, spec.margin, spec.margin, spec.tile, spec);
    out.push_str("</svg>\n");
    out
}

/// The three line diagrams of a pattern, side by side. Errors if the
/// pattern has no line structure.
pub fn render_diagrams(p: &Pattern, spec: &RenderSpec) -> Result<String, diamondlab_core::Error> {
    let s = structure_of(p)?;
    let t = spec.tile;
    let gap = spec.margin;
    let width = 3 * (4 * t) + 4 * gap;
    let height = 4 * t + 2 * gap;
    let mut out = String::new();
    svg_open(&mut out, width, height);
    for (k, diagram) in s.diagrams.iter().enumerate() {
        let x0 = gap + k as u32 * (4 * t + gap);
        draw_grid(&mut out, diagram.grid, x0, gap, t, spec);
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn hyperplane_grid(line: &ProjLine, which: usize) -> BitGrid16 {
    let point = line.points()[which];
    BitGrid16::from_fn(|i| point.eval(i as u8))
}

/// The 15 points of PG(3,2), each as its hyperplane diagram, five per
/// row in ascending functional order.
pub fn render_point_sheet(spec: &RenderSpec) -> String {
    let points = diamondlab_core::geometry::points();
    let t = spec.tile / 2;
    let gap = spec.margin;
    let cols = 5u32;
    let rows = 3u32;
    let entry = 4 * t;
    let width = cols * entry + (cols + 1) * gap;
    let height = rows * entry + (rows + 1) * gap;
    let mut out = String::new();
    svg_open(&mut out, width, height);
    for (idx, point) in points.iter().enumerate() {
        let col = idx as u32 % cols;
        let row = idx as u32 / cols;
        let grid = BitGrid16::from_fn(|i| point.eval(i as u8));
        draw_grid(
            &mut out,
            grid,
            gap + col * (entry + gap),
            gap + row * (entry + gap),
            t,
            spec,
        );
    }
    out.push_str("</svg>\n");
    out
}

/// All 35 lines as triples of hyperplane diagrams, five per row.
pub fn render_structure_plate(spec: &RenderSpec) -> String {
    let lines = diamondlab_core::geometry::lines();
    let t = spec.tile / 4;
    let gap = spec.margin;
    let entry_w = 3 * (4 * t) + 2 * (gap / 2);
    let entry_h = 4 * t;
    let cols = 5u32;
    let rows = 7u32;
    let width = cols * entry_w + (cols + 1) * gap;
    let height = rows * entry_h + (rows + 1) * gap;
    let mut out = String::new();
    svg_open(&mut out, width, height);
    for (idx, line) in lines.iter().enumerate() {
        let col = idx as u32 % cols;
        let row = idx as u32 / cols;
        let x0 = gap + col * (entry_w + gap);
        let y0 = gap + row * (entry_h + gap);
        for which in 0..3 {
            let x = x0 + which as u32 * (4 * t + gap / 2);
            draw_grid(&mut out, hyperplane_grid(line, which), x, y0, t, spec);
        }
    }
    out.push_str("</svg>\n");
    out
}

/// The whole orbit, one row per structure class, 24 patterns per row.
pub fn render_orbit_sheet(classes: &[(ProjLine, Vec<Pattern>)], spec: &RenderSpec) -> String {
    let t = spec.tile / 8;
    let gap = spec.margin / 2;
    let entry = 4 * t;
    let cols = 24u32;
    let rows = classes.len() as u32;
    let width = cols * entry + (cols + 1) * gap;
    let height = rows * entry + (rows + 1) * gap;
    let mut out = String::new();
    svg_open(&mut out, width, height);
    for (r, (_, members)) in classes.iter().enumerate() {
        for (c, p) in members.iter().enumerate() {
            let x0 = gap + c as u32 * (entry + gap);
            let y0 = gap + r as u32 * (entry + gap);
            draw_pattern(&mut out, p, x0, y0, t, spec);
        }
    }
    out.push_str("</svg>\n");
    out
}

const PARTITION_GRAYS: [&str; 4] = ["#000000", "#555555", "#AAAAAA", "#FFFFFF"];

/// The 35 brick splits over the 4x6 array: brick halves dark/light,
/// square cells shaded by their partition class.
pub fn render_mog_sheet(splits: &SplitCorrespondence, spec: &RenderSpec) -> String {
    let t = spec.tile / 4;
    let gap = spec.margin;
    let entry_w = 6 * t;
    let entry_h = 4 * t;
    let cols = 5u32;
    let rows = 7u32;
    let width = cols * entry_w + (cols + 1) * gap;
    let height = rows * entry_h + (rows + 1) * gap;
    let mut out = String::new();
    svg_open(&mut out, width, height);
    for (idx, entry) in splits.entries.iter().enumerate() {
        let col = idx as u32 % cols;
        let row = idx as u32 / cols;
        let x0 = gap + col * (entry_w + gap);
        let y0 = gap + row * (entry_h + gap);
        rect(&mut out, x0, y0, entry_w, entry_h, &spec.light);
        // brick: first half dark, second half light with a border
        for &p in &entry.halves[0] {
            let (r, c) = (p as u32 / 6, p as u32 % 6);
            rect(&mut out, x0 + c * t, y0 + r * t, t, t, &spec.dark);
        }
        // square cells by partition class
        for (class, &mask) in entry.partition.iter().enumerate() {
            for cell in 0..16u32 {
                if mask >> cell & 1 == 1 {
                    let (r, c) = (cell / 4, cell % 4 + 2);
                    rect(
                        &mut out,
                        x0 + c * t,
                        y0 + r * t,
                        t,
                        t,
                        PARTITION_GRAYS[class],
                    );
                }
            }
        }
        let _ = writeln!(
            out,
            "<rect x=\"{x0}\" y=\"{y0}\" width=\"{entry_w}\" height=\"{entry_h}\" \
             fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>"
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use diamondlab_core::diamond_figure;

    #[test]
    fn pattern_svg_has_sixteen_polygons_and_is_stable() {
        let spec = RenderSpec::default();
        let a = render_pattern(&diamond_figure(), &spec);
        let b = render_pattern(&diamond_figure(), &spec);
        assert_eq!(a, b);
        assert_eq!(a.matches("<polygon").count(), 16);
        assert!(a.starts_with("<svg"));
        assert!(a.ends_with("</svg>\n"));
    }

    #[test]
    fn dark_triangle_orientation_follows_edges() {
        // tile (d=0, s=1): dark side holds the bottom and left edges
        let tri = dark_triangle(TileType::from_bits(0, 1), 0, 0, 10);
        assert!(tri.contains(&(0, 10)) && tri.contains(&(10, 10)) && tri.contains(&(0, 0)));
        // tile (d=1, s=0): dark side holds the top and left edges
        let tri = dark_triangle(TileType::from_bits(1, 0), 0, 0, 10);
        assert!(tri.contains(&(0, 0)) && tri.contains(&(10, 0)) && tri.contains(&(0, 10)));
    }

    #[test]
    fn structure_plate_renders_35_entries() {
        let svg = render_structure_plate(&RenderSpec::default());
        // 35 entries x 3 diagrams, one background rect each
        assert_eq!(svg.matches("fill=\"#FFFFFF\"").count(), 105);
    }
}
