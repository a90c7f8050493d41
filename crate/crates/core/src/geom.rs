//! Points, plane isometries and convex polygons.
//!
//! Angles live in [`AngleDeg`] and are exact; coordinates are `f64` in units
//! of the tile edge length and are only ever compared with a tolerance.

use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::angle::{AngleDeg, AngleValue};
use crate::error::TileError;

/// Two points closer than this are the same point.
pub const POINT_TOL: f64 = 1e-9;
/// Grid used when points are bucketed into vertex-incidence maps.
pub const SNAP: f64 = 1e-6;
/// Intersections with less area than this are shared-boundary slivers.
pub const OVERLAP_AREA_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    /// Unit vector with the given heading. Quarter turns are exact.
    pub fn unit(heading: AngleDeg) -> Self {
        let h = heading.normalized();
        if h.denom() == 1 && h.numer() % 90 == 0 {
            return match h.numer() {
                0 => Point::new(1.0, 0.0),
                90 => Point::new(0.0, 1.0),
                180 => Point::new(-1.0, 0.0),
                _ => Point::new(0.0, -1.0),
            };
        }
        let r = h.to_radians();
        Point::new(libm::cos(r), libm::sin(r))
    }

    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        libm::hypot(self.x, self.y)
    }

    pub fn dist(self, o: Point) -> f64 {
        (self - o).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Heading in degrees, in `[0, 360)`.
    pub fn heading_deg(self) -> f64 {
        let h = libm::atan2(self.y, self.x).to_degrees();
        if h < 0.0 {
            h + 360.0
        } else {
            h
        }
    }

    pub fn rotated(self, angle: AngleDeg) -> Point {
        let u = Point::unit(angle);
        Point::new(u.x * self.x - u.y * self.y, u.y * self.x + u.x * self.y)
    }

    pub fn midpoint(self, o: Point) -> Point {
        Point::new(0.5 * (self.x + o.x), 0.5 * (self.y + o.y))
    }

    /// Integer grid cell at the [`SNAP`] resolution.
    pub fn snapped(self) -> (i64, i64) {
        (
            libm::round(self.x / SNAP) as i64,
            libm::round(self.y / SNAP) as i64,
        )
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    fn mul(self, s: f64) -> Point {
        Point::new(self.x * s, self.y * s)
    }
}

/// `p ↦ R(rotation) · S^reflect · p + translation`, where `S` mirrors across
/// the x-axis. Every plane isometry has exactly one such form.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Isometry {
    pub reflect: bool,
    pub rotation: AngleDeg,
    pub translation: Point,
}

impl Default for Isometry {
    fn default() -> Self {
        Isometry::IDENTITY
    }
}

impl Isometry {
    pub const IDENTITY: Isometry = Isometry {
        reflect: false,
        rotation: AngleDeg::ZERO,
        translation: Point::ORIGIN,
    };

    pub fn new(reflect: bool, rotation: AngleDeg, translation: Point) -> Self {
        Isometry {
            reflect,
            rotation: rotation.normalized(),
            translation,
        }
    }

    pub fn rotation(angle: AngleDeg) -> Self {
        Isometry::new(false, angle, Point::ORIGIN)
    }

    pub fn translation(v: Point) -> Self {
        Isometry::new(false, AngleDeg::ZERO, v)
    }

    /// Mirror across the x-axis.
    pub fn reflection() -> Self {
        Isometry::new(true, AngleDeg::ZERO, Point::ORIGIN)
    }

    /// Mirror across the line through the origin with the given direction.
    pub fn reflection_across(direction: AngleDeg) -> Self {
        Isometry::new(true, direction * 2, Point::ORIGIN)
    }

    /// Rotation about an arbitrary centre.
    pub fn rotation_about(center: Point, angle: AngleDeg) -> Self {
        Isometry::translation(center)
            .compose(&Isometry::rotation(angle))
            .compose(&Isometry::translation(-center))
    }

    /// Mirror across the line through `center` with the given direction.
    pub fn reflection_about(center: Point, direction: AngleDeg) -> Self {
        Isometry::translation(center)
            .compose(&Isometry::reflection_across(direction))
            .compose(&Isometry::translation(-center))
    }

    fn linear(&self, p: Point) -> Point {
        let q = if self.reflect {
            Point::new(p.x, -p.y)
        } else {
            p
        };
        q.rotated(self.rotation)
    }

    pub fn apply(&self, p: Point) -> Point {
        self.linear(p) + self.translation
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        let rotation = if self.reflect {
            self.rotation - other.rotation
        } else {
            self.rotation + other.rotation
        };
        Isometry::new(
            self.reflect ^ other.reflect,
            rotation,
            self.apply(other.translation),
        )
    }

    pub fn inverse(&self) -> Isometry {
        let rotation = if self.reflect {
            self.rotation
        } else {
            -self.rotation
        };
        let lin = Isometry::new(self.reflect, rotation, Point::ORIGIN);
        Isometry::new(self.reflect, rotation, -lin.apply(self.translation))
    }

    pub fn approx_eq(&self, other: &Isometry, tol: f64) -> bool {
        self.reflect == other.reflect
            && self.rotation == other.rotation
            && self.translation.dist(other.translation) <= tol
    }

    pub fn apply_polygon(&self, poly: &ConvexPolygon) -> ConvexPolygon {
        apply(self, poly)
    }
}

/// A strictly convex polygon, counterclockwise, without a repeated closing
/// vertex. `angles[i]` is the interior angle at `vertices[i]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point>,
    angles: Vec<AngleValue>,
}

impl ConvexPolygon {
    /// Checks orientation, strict convexity, finiteness and (when every
    /// angle is exact) the `(k-2)·180` angle sum.
    pub fn new(vertices: Vec<Point>, angles: Vec<AngleValue>) -> Result<Self, TileError> {
        let k = vertices.len();
        if k < 3 {
            return Err(TileError::Domain("polygon needs at least three vertices"));
        }
        if angles.len() != k {
            return Err(TileError::Domain(
                "one interior angle per vertex is required",
            ));
        }
        if vertices.iter().any(|p| !p.is_finite()) {
            return Err(TileError::Domain("polygon vertex is not finite"));
        }
        for i in 0..k {
            let a = vertices[(i + k - 1) % k];
            let b = vertices[i];
            let c = vertices[(i + 1) % k];
            if (b - a).cross(c - b) <= 1e-12 {
                return Err(TileError::Domain(
                    "polygon is not strictly convex and counterclockwise",
                ));
            }
        }
        if let AngleValue::Exact(sum) = AngleValue::sum(angles.iter().copied()) {
            if sum != AngleDeg::STRAIGHT * (k as i64 - 2) {
                return Err(TileError::Domain("interior angles do not sum to (k-2)·180"));
            }
        }
        let poly = ConvexPolygon { vertices, angles };
        if poly.signed_area() <= 0.0 {
            return Err(TileError::Domain("polygon is not counterclockwise"));
        }
        Ok(poly)
    }

    /// Builds the polygon with every angle measured from the coordinates.
    pub fn from_points(vertices: Vec<Point>) -> Result<Self, TileError> {
        let angles = measured_angles(&vertices);
        ConvexPolygon::new(vertices, angles)
    }

    pub(crate) fn from_parts_unchecked(vertices: Vec<Point>, angles: Vec<AngleValue>) -> Self {
        ConvexPolygon { vertices, angles }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn angles(&self) -> &[AngleValue] {
        &self.angles
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Directed edges `(v_i, v_{i+1})`.
    pub fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }

    pub fn edge_lengths(&self) -> Vec<f64> {
        self.edges().map(|(a, b)| a.dist(b)).collect()
    }

    pub fn signed_area(&self) -> f64 {
        shoelace(&self.vertices)
    }

    pub fn centroid(&self) -> Point {
        let mut a = 0.0;
        let (mut cx, mut cy) = (0.0, 0.0);
        for (p, q) in self.edges() {
            let w = p.cross(q);
            a += w;
            cx += (p.x + q.x) * w;
            cy += (p.y + q.y) * w;
        }
        Point::new(cx / (3.0 * a), cy / (3.0 * a))
    }

    pub fn bbox(&self) -> (Point, Point) {
        let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in &self.vertices {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        (lo, hi)
    }

    /// True if `p` is inside or within `tol` of the boundary.
    pub fn contains(&self, p: Point, tol: f64) -> bool {
        self.edges().all(|(a, b)| {
            let e = b - a;
            e.cross(p - a) / e.norm() >= -tol
        })
    }

    /// Same outline: equal vertex sets (any starting vertex) within `tol`.
    pub fn same_outline(&self, other: &ConvexPolygon, tol: f64) -> bool {
        let k = self.len();
        if k != other.len() {
            return false;
        }
        let Some(shift) = other
            .vertices
            .iter()
            .position(|q| q.dist(self.vertices[0]) <= tol)
        else {
            return false;
        };
        (0..k).all(|i| self.vertices[i].dist(other.vertices[(i + shift) % k]) <= tol)
    }
}

/// Interior angles measured from coordinates, in degrees.
pub fn measured_angles(vertices: &[Point]) -> Vec<AngleValue> {
    let k = vertices.len();
    (0..k)
        .map(|i| {
            let prev = vertices[(i + k - 1) % k] - vertices[i];
            let next = vertices[(i + 1) % k] - vertices[i];
            AngleValue::Measured(corner_angle_deg(next, prev))
        })
        .collect()
}

/// Angle swept counterclockwise from direction `from` to direction `to`, in
/// `[0, 360)` degrees.
pub fn corner_angle_deg(from: Point, to: Point) -> f64 {
    let a = libm::atan2(from.cross(to), from.dot(to)).to_degrees();
    if a < 0.0 {
        a + 360.0
    } else {
        a
    }
}

/// Signed shoelace area; positive for counterclockwise rings.
pub fn shoelace(points: &[Point]) -> f64 {
    let k = points.len();
    let mut s = 0.0;
    for i in 0..k {
        s += points[i].cross(points[(i + 1) % k]);
    }
    0.5 * s
}

/// `f ∘ g`: apply `g` first.
pub fn compose(f: &Isometry, g: &Isometry) -> Isometry {
    f.compose(g)
}

pub fn area(poly: &ConvexPolygon) -> f64 {
    poly.signed_area()
}

/// Image of `poly` under `iso`, restored to counterclockwise order when the
/// isometry reverses orientation. Angles travel with their vertices.
pub fn apply(iso: &Isometry, poly: &ConvexPolygon) -> ConvexPolygon {
    let mut vertices: Vec<Point> = poly.vertices.iter().map(|p| iso.apply(*p)).collect();
    let mut angles = poly.angles.clone();
    if iso.reflect {
        vertices.reverse();
        angles.reverse();
    }
    ConvexPolygon { vertices, angles }
}

/// Clip convex `subject` by convex `clip` (Sutherland–Hodgman).
pub fn clip_convex(subject: &[Point], clip: &ConvexPolygon) -> Vec<Point> {
    let mut out: Vec<Point> = subject.to_vec();
    for (a, b) in clip.edges() {
        if out.is_empty() {
            break;
        }
        let input = core::mem::take(&mut out);
        let e = b - a;
        let side = |p: Point| e.cross(p - a);
        let n = input.len();
        for i in 0..n {
            let cur = input[i];
            let prev = input[(i + n - 1) % n];
            let (sc, sp) = (side(cur), side(prev));
            if sc >= 0.0 {
                if sp < 0.0 {
                    out.push(intersect(prev, cur, sp, sc));
                }
                out.push(cur);
            } else if sp >= 0.0 {
                out.push(intersect(prev, cur, sp, sc));
            }
        }
    }
    out
}

fn intersect(p: Point, q: Point, sp: f64, sq: f64) -> Point {
    let t = sp / (sp - sq);
    p + (q - p) * t
}

fn bboxes_overlap(p: &ConvexPolygon, q: &ConvexPolygon, slack: f64) -> bool {
    let (plo, phi) = p.bbox();
    let (qlo, qhi) = q.bbox();
    plo.x <= qhi.x + slack
        && qlo.x <= phi.x + slack
        && plo.y <= qhi.y + slack
        && qlo.y <= phi.y + slack
}

/// Area of the intersection of two convex polygons.
pub fn intersection_area(p: &ConvexPolygon, q: &ConvexPolygon) -> f64 {
    if !bboxes_overlap(p, q, 0.0) {
        return 0.0;
    }
    let clipped = clip_convex(&p.vertices, q);
    if clipped.len() < 3 {
        return 0.0;
    }
    shoelace(&clipped).abs()
}

/// Open interiors meet in more than [`OVERLAP_AREA_TOL`] of area. Shared
/// edges and vertices are contact, not overlap.
pub fn interiors_overlap(p: &ConvexPolygon, q: &ConvexPolygon) -> bool {
    intersection_area(p, q) > OVERLAP_AREA_TOL
}
