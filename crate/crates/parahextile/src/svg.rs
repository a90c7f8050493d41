//! SVG rendering of patches.
//!
//! One `<path>` per tile, in tile order, with the y axis flipped so the
//! picture reads counterclockwise like the coordinates. Numbers are printed
//! with a fixed number of decimals, so equal patches give identical bytes.

use std::fmt::Write as _;

use parahextile_core::{ConvexPolygon, Patch, Point, TileError};

const DECIMALS: usize = 6;

const CHIRALITY: [&str; 2] = ["#f2c14e", "#5b8e7d"];

const WEDGE: [&str; 8] = [
    "#e07a5f", "#3d405b", "#81b29a", "#f2cc8f", "#6d597a", "#b56576", "#4ea8de", "#9c6644",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum FillMode {
    /// Direct and mirrored placements in two colours.
    ByChirality,
    /// One colour per rotation wedge about the origin.
    #[default]
    ByWedge,
    None,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RenderStyle {
    pub stroke_width: f64,
    pub fill_mode: FillMode,
    /// Blank border around the bounding box, in tile units.
    pub margin: f64,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            stroke_width: 0.02,
            fill_mode: FillMode::ByWedge,
            margin: 0.05,
        }
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.DECIMALS$}");
    if s.bytes().all(|b| matches!(b, b'-' | b'0' | b'.')) {
        format!("{:.DECIMALS$}", 0.0)
    } else {
        s
    }
}

fn wedge_of(c: Point, order: u32) -> usize {
    if order == 0 || c.norm() < 1e-9 {
        return 0;
    }
    let step = 360.0 / order as f64;
    let h = c.heading_deg().rem_euclid(360.0);
    // nudge so centroids sitting on a wedge boundary land consistently
    ((h + 1e-9) / step).floor() as usize % order as usize
}

fn path_data(poly: &ConvexPolygon) -> String {
    let mut d = String::new();
    for (i, p) in poly.vertices().iter().enumerate() {
        let cmd = if i == 0 { 'M' } else { 'L' };
        let _ = write!(d, "{cmd}{},{} ", num(p.x), num(-p.y));
    }
    d.push('Z');
    d
}

pub fn to_svg(patch: &Patch, style: &RenderStyle) -> Result<String, TileError> {
    let polys = patch.realize()?;
    let (mut lo, mut hi) = (
        Point::new(f64::INFINITY, f64::INFINITY),
        Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
    );
    for poly in &polys {
        for p in poly.vertices() {
            lo = Point::new(lo.x.min(p.x), lo.y.min(-p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(-p.y));
        }
    }
    if polys.is_empty() {
        lo = Point::ORIGIN;
        hi = Point::ORIGIN;
    }
    let m = style.margin;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        num(lo.x - m),
        num(lo.y - m),
        num(hi.x - lo.x + 2.0 * m),
        num(hi.y - lo.y + 2.0 * m)
    );
    let _ = writeln!(
        out,
        r##"<g stroke="#222222" stroke-width="{}" stroke-linejoin="round">"##,
        num(style.stroke_width)
    );
    for (tile, poly) in patch.tiles.iter().zip(&polys) {
        let fill = match style.fill_mode {
            FillMode::ByChirality => CHIRALITY[tile.placement.reflect as usize],
            FillMode::ByWedge => WEDGE[wedge_of(poly.centroid(), patch.meta.order) % WEDGE.len()],
            FillMode::None => "none",
        };
        let _ = writeln!(
            out,
            r#"<path data-id="{}" data-proto="{}" fill="{fill}" d="{}"/>"#,
            tile.id,
            tile.proto.name(),
            path_data(poly)
        );
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_zero_prints_plain() {
        assert_eq!(num(-0.0), "0.000000");
        assert_eq!(num(-1e-9), "0.000000");
        assert_eq!(num(-0.5), "-0.500000");
        assert_eq!(num(2.0), "2.000000");
    }

    #[test]
    fn wedges_follow_heading() {
        assert_eq!(wedge_of(Point::new(1.0, 0.1), 4), 0);
        assert_eq!(wedge_of(Point::new(-1.0, 0.1), 4), 1);
        assert_eq!(wedge_of(Point::new(0.1, -1.0), 4), 3);
        assert_eq!(wedge_of(Point::ORIGIN, 4), 0);
    }
}
