//! Equilateral convex parallelohexagons, their bisections into congruent
//! pentagons and quadrangles, and rotationally symmetric patches built from
//! them.
//!
//! Angles are exact rationals in degrees ([`AngleDeg`]); coordinates are
//! `f64` and compared with tolerances. The crate is `no_std` and only needs
//! `alloc`.

#![no_std]

extern crate alloc;

pub mod angle;
pub mod assemble;
pub mod bisect;
pub mod error;
pub mod geom;
pub mod hexagon;
pub mod spatial;
pub mod validate;

pub use angle::{AngleDeg, AngleValue};
pub use assemble::{
    bisect_patch, build_hole_tiling, build_rotational_tiling, build_unit, FlipSource, NoFlips,
    Patch, PatchKind, PatchMeta, PlacedTile, SeededFlips, TileProto,
};
pub use bisect::{bisect, is_type1_pentagon, BisectCase, BisectionSpec, PairKind, TilePair};
pub use error::TileError;
pub use geom::{area, compose, interiors_overlap, ConvexPolygon, Isometry, Point};
pub use hexagon::{
    classify_hexagon, hexagon_for_hole, hexagon_for_n, make_hexagon, rotation_orders, vertices,
    Families, HexagonSpec, SymmetryClass, Vertex,
};
pub use validate::{
    detect_symmetry, extract_hole, polygon_symmetry, validate_patch, EdgeContact, HolePolygon,
    SymmetryKind, SymmetryReport, ValidationReport,
};
