//! File formats for [`parahextile_core`] patches: a JSON document that
//! round-trips exactly, and a deterministic SVG rendering.

pub mod json;
pub mod svg;

pub use json::{from_json, to_json, DocError};
pub use svg::{to_svg, FillMode, RenderStyle};
