//! Verification library for the symmetry structure of 4x4 two-color
//! tile patterns.
//!
//! The pieces, bottom to top:
//!
//! - [`tile`], [`gf4`], [`pattern`]: the four tile orientations, their
//!   GF(4) value coding, 4x4 patterns with a 16-digit text codec, the
//!   four-diamond figure, and the three component bit-grids of a pattern.
//! - [`perm`], [`affine`], [`schreier`]: cell permutations, the group
//!   generated by row/column/quadrant permutations enumerated explicitly,
//!   the affinity test against GF(2)^4 affine maps, and a stabilizer
//!   chain engine for groups too large to enumerate.
//! - [`symmetry`]: the 8 square isometries acting on patterns (moving
//!   cells and transforming tile types), color interchange, and the
//!   exhaustive ordinary-or-interchange symmetry verifier.
//! - [`geometry`]: PG(3,2) points and lines, line diagrams extracted
//!   from patterns, the 35-class structure of the orbit, skewness, and
//!   orthogonality of induced 4-partitions.
//! - [`ring`]: the GF(4) pattern algebra, the 1024 affine patterns as
//!   the additive closure of the orbit, and the cut census.
//! - [`golay`]: the binary Golay code on a 4x6 array, octads and the
//!   Steiner system S(5,8,24), M24, the brick stabilizer, its restriction
//!   to the square, and the 35-splits-to-35-lines correspondence.
//!
//! Everything is a pure function over immutable values; all enumeration
//! orders are deterministic so exported catalogs are byte-stable.

pub mod affine;
pub mod error;
pub mod geometry;
pub mod gf2;
pub mod gf4;
pub mod golay;
pub mod pattern;
pub mod perm;
pub mod ring;
pub mod schreier;
pub mod symmetry;
pub mod tile;

pub use error::{Error, Result};
pub use gf4::Gf4;
pub use pattern::{diamond_figure, BitGrid16, CellCoord, Component, Pattern};
pub use perm::{
    act, axis_perm, group_generators, orbit, Axis, CellPerm, GroupSet, Perm, Perm24, DEFAULT_CAP,
};
pub use tile::{EdgeColors, TileType};
