//! `diamondlab`: verify the tile-pattern theorems, export the catalogs,
//! render the figures.
//!
//! Exit codes: 0 all checks pass, 1 a verification failed, 2 usage error.

mod export;
mod render;
mod reports;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use diamondlab_core::perm::DEFAULT_CAP;
use diamondlab_core::ring::{cut_census, CutDefinition};
use diamondlab_core::Pattern;
use render::RenderSpec;

#[derive(Parser)]
#[command(
    name = "diamondlab",
    version,
    about = "Exhaustive verifier for 4x4 tile-pattern structure: the 322560-element grid group, PG(3,2) line structure, the 1024-pattern ideal, and the Golay/MOG bridge"
)]
struct Cli {
    /// Element cap for closure and orbit enumeration.
    #[arg(long, global = true, env = "DIAMONDLAB_CAP", default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification target and emit its JSON report.
    Verify {
        #[arg(value_enum)]
        target: Target,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a subject to a deterministic SVG file.
    Render {
        #[arg(long, value_enum)]
        subject: Subject,
        /// 16-digit pattern text. Required for pattern; for diagram it
        /// selects the pattern's three line diagrams, and without it the
        /// sheet of all 15 point diagrams is drawn.
        #[arg(long)]
        input: Option<String>,
        #[arg(long)]
        out: PathBuf,
        /// Tile side length in user units.
        #[arg(long, default_value_t = 100)]
        tile_size: u32,
        #[arg(long, default_value_t = 20)]
        margin: u32,
        #[arg(long, default_value = "#000000")]
        dark: String,
        #[arg(long, default_value = "#FFFFFF")]
        light: String,
    },
    /// Write the full JSON catalog bundle to a directory.
    Export {
        #[arg(long)]
        out: PathBuf,
    },
    /// Exact censuses of candidate cut definitions.
    Census {
        #[command(subcommand)]
        what: CensusCommand,
    },
}

#[derive(Subcommand)]
enum CensusCommand {
    /// Count the patterns satisfying a cut definition.
    Cuts {
        #[arg(long, value_enum)]
        definition: CutName,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    All,
    Theorem,
    Group,
    Geometry,
    Ring,
    Mog,
}

#[derive(Clone, Copy, ValueEnum)]
enum Subject {
    Pattern,
    Diagram,
    StructurePlate,
    OrbitSheet,
    MogSheet,
}

#[derive(Clone, Copy, ValueEnum)]
enum CutName {
    ConstantRelation,
    AllContrast,
    AllMatch,
}

impl From<CutName> for CutDefinition {
    fn from(name: CutName) -> CutDefinition {
        match name {
            CutName::ConstantRelation => CutDefinition::ConstantRelation,
            CutName::AllContrast => CutDefinition::AllContrast,
            CutName::AllMatch => CutDefinition::AllMatch,
        }
    }
}

fn emit(json: &str, out: Option<&PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => {
            std::fs::write(path, json).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            println!("{json}");
            Ok(())
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serialization");
    s.push('\n');
    s
}

fn run_verify(target: Target, cap: usize, out: Option<&PathBuf>) -> Result<bool, String> {
    let (json, ok) = match target {
        Target::All => {
            let r = reports::run_all(cap);
            (to_json(&r), r.failures.is_empty())
        }
        Target::Group => {
            let r = reports::run_group(cap);
            (to_json(&r), r.failures.is_empty())
        }
        Target::Theorem => {
            let r = reports::run_theorem(cap);
            (to_json(&r), r.failures.is_empty())
        }
        Target::Geometry => {
            let r = reports::run_geometry(cap);
            (to_json(&r), r.failures.is_empty())
        }
        Target::Ring => {
            let r = reports::run_ring(cap);
            (to_json(&r), r.failures.is_empty())
        }
        Target::Mog => {
            let r = reports::run_mog(cap);
            (to_json(&r), r.failures.is_empty())
        }
    };
    emit(&json, out)?;
    Ok(ok)
}

fn run_render(
    subject: Subject,
    input: Option<&str>,
    out: &PathBuf,
    spec: &RenderSpec,
    cap: usize,
) -> Result<ExitCode, String> {
    let need_pattern = |input: Option<&str>| -> Result<Pattern, ExitCode> {
        let Some(text) = input else {
            eprintln!("--input <16-digit pattern> is required for this subject");
            return Err(ExitCode::from(2));
        };
        Pattern::decode(text).map_err(|e| {
            eprintln!("bad pattern text: {e}");
            ExitCode::from(2)
        })
    };
    let svg = match subject {
        Subject::Pattern => match need_pattern(input) {
            Ok(p) => render::render_pattern(&p, spec),
            Err(code) => return Ok(code),
        },
        // without an input pattern, the diagram subject is the sheet of
        // all 15 point diagrams
        Subject::Diagram if input.is_none() => render::render_point_sheet(spec),
        Subject::Diagram => match need_pattern(input) {
            Ok(p) => match render::render_diagrams(&p, spec) {
                Ok(svg) => svg,
                Err(e) => {
                    eprintln!("pattern has no line structure: {e}");
                    return Ok(ExitCode::from(2));
                }
            },
            Err(code) => return Ok(code),
        },
        Subject::StructurePlate => render::render_structure_plate(spec),
        Subject::OrbitSheet => {
            let classes = export::orbit_classes(cap).map_err(|e| e.to_string())?;
            render::render_orbit_sheet(&classes, spec)
        }
        Subject::MogSheet => {
            let code = diamondlab_core::golay::build_golay().map_err(|e| e.to_string())?;
            let splits = diamondlab_core::golay::brick_split_correspondence(&code)
                .map_err(|e| e.to_string())?;
            render::render_mog_sheet(&splits, spec)
        }
    };
    std::fs::write(out, svg).map_err(|e| format!("cannot write {}: {e}", out.display()))?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = cli.cap;
    match cli.command {
        Command::Verify { target, out } => match run_verify(target, cap, out.as_ref()) {
            Ok(true) => ExitCode::SUCCESS,
            Ok(false) => ExitCode::FAILURE,
            Err(msg) => {
                eprintln!("{msg}");
                ExitCode::FAILURE
            }
        },
        Command::Render {
            subject,
            input,
            out,
            tile_size,
            margin,
            dark,
            light,
        } => {
            let spec = RenderSpec {
                tile: tile_size,
                margin,
                dark,
                light,
            };
            match run_render(subject, input.as_deref(), &out, &spec, cap) {
                Ok(code) => code,
                Err(msg) => {
                    eprintln!("{msg}");
                    ExitCode::FAILURE
                }
            }
        }
        Command::Export { out } => match export::export_bundle(&out, cap) {
            Ok(()) => ExitCode::SUCCESS,
            Err(msg) => {
                eprintln!("{msg}");
                ExitCode::FAILURE
            }
        },
        Command::Census {
            what: CensusCommand::Cuts { definition, out },
        } => {
            let census = cut_census(definition.into());
            let json = to_json(&census);
            match emit(&json, out.as_ref()) {
                Ok(()) => ExitCode::SUCCESS,
                Err(msg) => {
                    eprintln!("{msg}");
                    ExitCode::FAILURE
                }
            }
        }
    }
}
