//! Bisection of a parallelohexagon through its half-turn centre.
//!
//! A cut through the centre `O` meets two opposite edges, so it splits the
//! hexagon into two pieces swapped by the half turn about `O`. The cut is
//! fixed by one point `X` on the first-named edge; its partner is
//! `Y = 2O − X`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::angle::AngleValue;
use crate::error::TileError;
use crate::geom::{corner_angle_deg, ConvexPolygon, Point};
use crate::hexagon::HexagonSpec;

/// Which pair of opposite edges the cut crosses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BisectCase {
    /// Edges `c` and `f`.
    I,
    /// Edges `a` and `d`.
    II,
    /// Edges `b` and `e`.
    III,
}

impl BisectCase {
    pub const ALL: [BisectCase; 3] = [BisectCase::I, BisectCase::II, BisectCase::III];

    /// Index of the vertex the first-named edge starts from.
    fn start_vertex(self) -> usize {
        match self {
            BisectCase::I => 1,
            BisectCase::II => 5,
            BisectCase::III => 0,
        }
    }
}

impl fmt::Display for BisectCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BisectCase::I => "I",
            BisectCase::II => "II",
            BisectCase::III => "III",
        })
    }
}

impl FromStr for BisectCase {
    type Err = TileError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "I" | "i" => Ok(BisectCase::I),
            "II" | "ii" => Ok(BisectCase::II),
            "III" | "iii" => Ok(BisectCase::III),
            _ => Err(TileError::Domain("bisection case must be I, II or III")),
        }
    }
}

/// Cut case plus the fractional position `t` of `X` along the first-named
/// edge, measured in that edge's own direction. `t = 0` and `t = 1` cut
/// vertex to vertex and give quadrangles.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BisectionSpec {
    pub case: BisectCase,
    pub t: f64,
}

impl BisectionSpec {
    pub fn new(case: BisectCase, t: f64) -> Result<Self, TileError> {
        if !(0.0..=1.0).contains(&t) {
            return Err(TileError::Domain(
                "bisection parameter t must lie in [0, 1]",
            ));
        }
        Ok(BisectionSpec { case, t })
    }

    pub fn is_quadrangle(&self) -> bool {
        self.t == 0.0 || self.t == 1.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairKind {
    Pentagon,
    Quadrangle,
}

/// The two halves of a bisected hexagon, in the hexagon's canonical frame.
#[derive(Clone, Debug, PartialEq)]
pub struct TilePair {
    pub left: ConvexPolygon,
    pub right: ConvexPolygon,
    pub kind: PairKind,
}

pub fn bisect(hex: &HexagonSpec, spec: &BisectionSpec) -> Result<TilePair, TileError> {
    let spec = BisectionSpec::new(spec.case, spec.t)?;
    let outline = hex.vertices();
    let v = outline.vertices();
    let ang = hex.angles();
    let at = |i: usize| v[i % 6];
    let exact = |i: usize| AngleValue::Exact(ang[i % 6]);

    if spec.is_quadrangle() {
        let s = spec.case.start_vertex() + if spec.t == 1.0 { 1 } else { 0 };
        let left_pts = vec![at(s), at(s + 1), at(s + 2), at(s + 3)];
        let first = corner_angle_deg(at(s + 1) - at(s), at(s + 3) - at(s));
        let last = corner_angle_deg(at(s) - at(s + 3), at(s + 2) - at(s + 3));
        let left_angles = vec![
            AngleValue::Measured(first),
            exact(s + 1),
            exact(s + 2),
            AngleValue::Measured(last),
        ];
        let right_pts = vec![at(s + 3), at(s + 4), at(s + 5), at(s)];
        let right_angles = vec![
            AngleValue::Measured(ang[s % 6].to_f64() - last),
            exact(s + 4),
            exact(s + 5),
            AngleValue::Measured(ang[s % 6].to_f64() - first),
        ];
        return Ok(TilePair {
            left: ConvexPolygon::new(left_pts, left_angles)?,
            right: ConvexPolygon::new(right_pts, right_angles)?,
            kind: PairKind::Quadrangle,
        });
    }

    let s = spec.case.start_vertex();
    let center = hex.center();
    let x = at(s) + (at(s + 1) - at(s)) * spec.t;
    let y = center * 2.0 - x;
    let at_x = corner_angle_deg(at(s + 1) - x, y - x);
    // the three inherited corners sum to 360, leaving 180 for the two cut corners
    let at_y = 180.0 - at_x;
    let left = ConvexPolygon::new(
        vec![x, at(s + 1), at(s + 2), at(s + 3), y],
        vec![
            AngleValue::Measured(at_x),
            exact(s + 1),
            exact(s + 2),
            exact(s + 3),
            AngleValue::Measured(at_y),
        ],
    )?;
    let right = ConvexPolygon::new(
        vec![y, at(s + 4), at(s + 5), at(s), x],
        vec![
            AngleValue::Measured(at_x),
            exact(s + 4),
            exact(s + 5),
            exact(s),
            AngleValue::Measured(at_y),
        ],
    )?;
    Ok(TilePair {
        left,
        right,
        kind: PairKind::Pentagon,
    })
}

/// Some run of three consecutive interior angles sums to 360° (within
/// `1e-9` degrees).
pub fn is_type1_pentagon(p: &ConvexPolygon) -> Result<bool, TileError> {
    if p.len() != 5 {
        return Err(TileError::Domain("type 1 test needs a pentagon"));
    }
    let a: Vec<f64> = p.angles().iter().map(|a| a.to_f64()).collect();
    Ok((0..5).any(|i| (a[i] + a[(i + 1) % 5] + a[(i + 2) % 5] - 360.0).abs() <= 1e-9))
}

/// The cut endpoints `X` and `Y` of a pentagon pair: first and last vertex
/// of the left piece.
pub fn cut_points(pair: &TilePair) -> (Point, Point) {
    let v = pair.left.vertices();
    (v[0], v[v.len() - 1])
}
