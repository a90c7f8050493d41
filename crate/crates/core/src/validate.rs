//! Certificates for constructed patches.
//!
//! [`validate_patch`] checks overlaps, vertex figures and gaps;
//! [`detect_symmetry`] finds the point group of a patch; [`extract_hole`]
//! traces and classifies the uncovered polygon of a hole pattern.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::angle::{AngleDeg, AngleValue};
use crate::assemble::{Patch, PatchKind};
use crate::error::TileError;
use crate::geom::{interiors_overlap, ConvexPolygon, Isometry, Point, SNAP};
use crate::spatial::{BoxIndex, PointIndex};

/// Collinearity and segment-length tolerance in the edge analysis.
const EDGE_TOL: f64 = 1e-7;
/// Vertex sums with a measured term must hit 360° this closely.
const SUM_TOL: f64 = 1e-7;
/// Largest rotation order tried by the symmetry search.
pub const MAX_ORDER: u32 = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeContact {
    EdgeToEdge,
    NonEdgeToEdge,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport {
    pub overlap_pairs: Vec<(u32, u32)>,
    /// Offending vertices with `360° − (incident angle sum)`.
    pub bad_vertices: Vec<(Point, AngleValue)>,
    pub edge_contact: EdgeContact,
    pub passed: bool,
    /// Vertices fully surrounded by tiles.
    pub interior_vertices: usize,
    /// Interior vertices whose sum was confirmed in exact arithmetic.
    pub exact_interior_vertices: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymmetryKind {
    C,
    D,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SymmetryReport {
    pub kind: SymmetryKind,
    pub order: u32,
    pub center: Point,
    /// Mirror directions in `[0°, 180°)`, one per mirror; empty for `C`.
    pub axes: Vec<AngleDeg>,
}

impl fmt::Display for SymmetryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            SymmetryKind::C => 'C',
            SymmetryKind::D => 'D',
        };
        write!(f, "{k}{}", self.order)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HolePolygon {
    /// Counterclockwise outline of the uncovered region.
    pub boundary: ConvexPolygon,
    pub equilateral: bool,
    pub regular: bool,
    pub symmetry: SymmetryReport,
    /// The prototype hexagon fits the hole exactly.
    pub pluggable: bool,
}

impl HolePolygon {
    /// Angle filled by tiles at each hole vertex: `360° − interior`.
    pub fn outer_angles(&self) -> Vec<AngleValue> {
        self.boundary
            .angles()
            .iter()
            .map(|a| match a {
                AngleValue::Exact(x) => AngleValue::Exact(AngleDeg::FULL - *x),
                AngleValue::Measured(x) => AngleValue::Measured(360.0 - x),
            })
            .collect()
    }
}

/// Tile corners meeting at one clustered point.
#[derive(Clone, Debug, Default)]
struct VertexFigure {
    corners: Vec<AngleValue>,
    /// Tiles whose edge passes straight through the point.
    straight: Vec<usize>,
}

impl VertexFigure {
    fn sum(&self) -> AngleValue {
        let flat = self
            .straight
            .iter()
            .map(|_| AngleValue::Exact(AngleDeg::STRAIGHT));
        AngleValue::sum(self.corners.iter().copied().chain(flat))
    }
}

#[derive(Clone, Copy, Debug)]
struct Segment {
    a: Point,
    b: Point,
}

/// Edge-level description of a realized patch.
struct Analysis {
    polys: Vec<ConvexPolygon>,
    points: PointIndex,
    figures: Vec<VertexFigure>,
    boundary: Vec<Segment>,
    edge_to_edge: bool,
}

fn residual(sum: AngleValue) -> AngleValue {
    match sum {
        AngleValue::Exact(s) => AngleValue::Exact(AngleDeg::FULL - s),
        AngleValue::Measured(s) => AngleValue::Measured(360.0 - s),
    }
}

fn is_full_turn(sum: AngleValue) -> bool {
    match sum {
        AngleValue::Exact(s) => s == AngleDeg::FULL,
        AngleValue::Measured(s) => (s - 360.0).abs() <= SUM_TOL,
    }
}

fn exceeds_full_turn(sum: AngleValue) -> bool {
    match sum {
        AngleValue::Exact(s) => s > AngleDeg::FULL,
        AngleValue::Measured(s) => s > 360.0 + SUM_TOL,
    }
}

fn point_segment_distance(p: Point, s: &Segment) -> f64 {
    let d = s.b - s.a;
    let len2 = d.dot(d);
    let t = if len2 == 0.0 {
        0.0
    } else {
        ((p - s.a).dot(d) / len2).clamp(0.0, 1.0)
    };
    p.dist(s.a + d * t)
}

fn tile_index(polys: &[ConvexPolygon]) -> BoxIndex {
    let mut idx = BoxIndex::new(2.0);
    for (i, p) in polys.iter().enumerate() {
        let (lo, hi) = p.bbox();
        idx.insert(i, lo, hi);
    }
    idx
}

impl Analysis {
    fn new(polys: Vec<ConvexPolygon>) -> Self {
        let mut points = PointIndex::new(SNAP);
        let mut figures: Vec<VertexFigure> = Vec::new();
        let mut corner_ids: Vec<Vec<usize>> = Vec::with_capacity(polys.len());
        for poly in &polys {
            let mut ids = Vec::with_capacity(poly.len());
            for (p, a) in poly.vertices().iter().zip(poly.angles()) {
                let id = points.insert(*p);
                if id == figures.len() {
                    figures.push(VertexFigure::default());
                }
                figures[id].corners.push(*a);
                ids.push(id);
            }
            corner_ids.push(ids);
        }

        let boxes = tile_index(&polys);
        let mut boundary = Vec::new();
        let mut edge_to_edge = true;
        for (ti, poly) in polys.iter().enumerate() {
            let (lo, hi) = poly.bbox();
            let slack = Point::new(EDGE_TOL, EDGE_TOL);
            let near: Vec<usize> = boxes
                .query(lo - slack, hi + slack)
                .into_iter()
                .filter(|&j| j != ti)
                .collect();
            for (p, q) in poly.edges() {
                let len = p.dist(q);
                let dir = (q - p) * (1.0 / len);
                let mut covered: Vec<(f64, f64)> = Vec::new();
                for &tj in &near {
                    let other = &polys[tj];
                    for (r, s) in other.edges() {
                        if dir.cross(r - p).abs() > EDGE_TOL || dir.cross(s - p).abs() > EDGE_TOL {
                            continue;
                        }
                        if dir.dot(s - r) >= 0.0 {
                            continue;
                        }
                        let (u, v) = (dir.dot(s - p), dir.dot(r - p));
                        let (lo_t, hi_t) = (u.max(0.0), v.min(len));
                        if hi_t - lo_t <= EDGE_TOL {
                            continue;
                        }
                        covered.push((lo_t, hi_t));
                        let full_here = lo_t <= EDGE_TOL && hi_t >= len - EDGE_TOL;
                        let full_there =
                            (u - lo_t).abs() <= EDGE_TOL && (v - hi_t).abs() <= EDGE_TOL;
                        if !(full_here && full_there) {
                            edge_to_edge = false;
                        }
                    }
                    for r in other.vertices() {
                        let t = dir.dot(*r - p);
                        if dir.cross(*r - p).abs() <= EDGE_TOL && t > EDGE_TOL && t < len - EDGE_TOL
                        {
                            if let Some(id) = points.find(*r) {
                                if !figures[id].straight.contains(&ti) {
                                    figures[id].straight.push(ti);
                                    edge_to_edge = false;
                                }
                            }
                        }
                    }
                }
                covered.sort_by(|x, y| x.0.total_cmp(&y.0));
                let mut cursor = 0.0;
                for (a, b) in covered {
                    if a > cursor + EDGE_TOL {
                        boundary.push(Segment {
                            a: p + dir * cursor,
                            b: p + dir * a,
                        });
                    }
                    cursor = cursor.max(b);
                }
                if len > cursor + EDGE_TOL {
                    boundary.push(Segment {
                        a: p + dir * cursor,
                        b: q,
                    });
                }
            }
        }
        Analysis {
            polys,
            points,
            figures,
            boundary,
            edge_to_edge,
        }
    }

    fn on_boundary(&self, p: Point) -> bool {
        self.boundary
            .iter()
            .any(|s| point_segment_distance(p, s) <= SNAP)
    }

    /// Boundary segments grouped into connected loops, with signed areas.
    fn components(&self) -> Vec<(Vec<usize>, f64)> {
        let mut ends = PointIndex::new(SNAP);
        let seg_ends: Vec<(usize, usize)> = self
            .boundary
            .iter()
            .map(|s| (ends.insert(s.a), ends.insert(s.b)))
            .collect();
        let mut parent: Vec<usize> = (0..ends.len()).collect();
        fn root(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b) in &seg_ends {
            let (ra, rb) = (root(&mut parent, a), root(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
            }
        }
        let mut groups: Vec<(usize, Vec<usize>, f64)> = Vec::new();
        for (i, &(a, _)) in seg_ends.iter().enumerate() {
            let r = root(&mut parent, a);
            let s = &self.boundary[i];
            let w = 0.5 * s.a.cross(s.b);
            match groups.iter_mut().find(|g| g.0 == r) {
                Some(g) => {
                    g.1.push(i);
                    g.2 += w;
                }
                None => groups.push((r, vec![i], w)),
            }
        }
        groups
            .into_iter()
            .map(|(_, segs, area)| (segs, area))
            .collect()
    }

    /// Nonzero winding of the loop around `p`.
    fn encloses(&self, segs: &[usize], p: Point) -> bool {
        let turn: f64 = segs
            .iter()
            .map(|&i| {
                let Segment { a, b } = self.boundary[i];
                let (u, v) = (a - p, b - p);
                libm::atan2(u.cross(v), u.dot(v))
            })
            .sum();
        turn.abs() > core::f64::consts::PI
    }

    fn covers(&self, p: Point) -> bool {
        self.polys.iter().any(|poly| poly.contains(p, -SNAP))
    }
}

fn realize(patch: &Patch) -> Result<Vec<ConvexPolygon>, TileError> {
    patch.realize()
}

/// Full certificate for a patch. Geometric defects are reported, not
/// raised; an error means the patch itself is malformed (a bisection piece
/// without a bisection).
pub fn validate_patch(patch: &Patch) -> Result<ValidationReport, TileError> {
    let polys = realize(patch)?;
    let boxes = tile_index(&polys);
    let mut overlap_pairs = Vec::new();
    for (i, p) in polys.iter().enumerate() {
        let (lo, hi) = p.bbox();
        for j in boxes.query(lo, hi) {
            if j > i && interiors_overlap(p, &polys[j]) {
                overlap_pairs.push((patch.tiles[i].id, patch.tiles[j].id));
            }
        }
    }

    let an = Analysis::new(polys);
    let mut bad_vertices = Vec::new();
    let mut flagged = vec![false; an.points.len()];
    let mut interior_vertices = 0;
    let mut exact_interior_vertices = 0;
    for (id, fig) in an.figures.iter().enumerate() {
        let p = an.points.point(id);
        let sum = fig.sum();
        if an.on_boundary(p) {
            if exceeds_full_turn(sum) {
                flagged[id] = true;
            }
            continue;
        }
        interior_vertices += 1;
        if is_full_turn(sum) {
            if matches!(sum, AngleValue::Exact(_)) {
                exact_interior_vertices += 1;
            }
        } else {
            flagged[id] = true;
        }
    }

    let hole_patch = patch.meta.kind == PatchKind::Hole;
    let comps = an.components();
    let outer = comps
        .iter()
        .enumerate()
        .max_by(|x, y| x.1 .1.total_cmp(&y.1 .1))
        .map(|(i, _)| i);
    for (ci, (segs, area)) in comps.iter().enumerate() {
        if Some(ci) == outer || *area >= 0.0 {
            continue;
        }
        if hole_patch && an.encloses(segs, Point::ORIGIN) {
            continue;
        }
        for &s in segs {
            for p in [an.boundary[s].a, an.boundary[s].b] {
                if let Some(id) = an.points.find(p) {
                    flagged[id] = true;
                }
            }
        }
    }
    for (id, f) in flagged.iter().enumerate() {
        if *f {
            bad_vertices.push((an.points.point(id), residual(an.figures[id].sum())));
        }
    }

    let passed = overlap_pairs.is_empty() && bad_vertices.is_empty();
    Ok(ValidationReport {
        overlap_pairs,
        bad_vertices,
        edge_contact: if an.edge_to_edge {
            EdgeContact::EdgeToEdge
        } else {
            EdgeContact::NonEdgeToEdge
        },
        passed,
        interior_vertices,
        exact_interior_vertices,
    })
}

/// Polygons searchable by position for symmetry tests.
struct TileSet {
    polys: Vec<ConvexPolygon>,
    centroids: PointIndex,
    by_centroid: Vec<Vec<usize>>,
    boxes: BoxIndex,
}

impl TileSet {
    fn new(polys: Vec<ConvexPolygon>) -> Self {
        let mut centroids = PointIndex::new(SNAP);
        let mut by_centroid: Vec<Vec<usize>> = Vec::new();
        for (i, p) in polys.iter().enumerate() {
            let id = centroids.insert(p.centroid());
            if id == by_centroid.len() {
                by_centroid.push(Vec::new());
            }
            by_centroid[id].push(i);
        }
        let boxes = tile_index(&polys);
        TileSet {
            polys,
            centroids,
            by_centroid,
            boxes,
        }
    }

    fn matches(&self, image: &ConvexPolygon) -> bool {
        self.centroids.find(image.centroid()).is_some_and(|c| {
            self.by_centroid[c]
                .iter()
                .any(|&i| self.polys[i].same_outline(image, SNAP))
        })
    }

    fn overlaps(&self, image: &ConvexPolygon) -> bool {
        let (lo, hi) = image.bbox();
        self.boxes
            .query(lo, hi)
            .into_iter()
            .any(|i| interiors_overlap(&self.polys[i], image))
    }

    /// `g` is consistent with the patch: every tile lands on a tile or on
    /// uncovered ground. With `strict`, every tile must land on a tile;
    /// otherwise at least half must.
    fn admits(&self, g: &Isometry, strict: bool) -> bool {
        let mut matched = 0;
        for p in &self.polys {
            let image = g.apply_polygon(p);
            if self.matches(&image) {
                matched += 1;
            } else if strict || self.overlaps(&image) {
                return false;
            }
        }
        matched * 2 >= self.polys.len() && matched > 0
    }

    fn vertex_ring(&self, center: Point) -> Vec<Point> {
        let mut pts = PointIndex::new(SNAP);
        for p in &self.polys {
            for v in p.vertices() {
                pts.insert(*v);
            }
        }
        let far = |p: &Point| p.dist(center) > SNAP;
        let r = pts
            .points()
            .iter()
            .filter(|p| far(p))
            .map(|p| p.dist(center))
            .fold(f64::INFINITY, f64::min);
        pts.points()
            .iter()
            .filter(|p| far(p) && p.dist(center) <= r + 1e-7)
            .copied()
            .collect()
    }

    fn largest_order(&self, center: Point, above: u32, strict: bool) -> u32 {
        (above + 1..=MAX_ORDER)
            .rev()
            .find(|&n| {
                self.admits(
                    &Isometry::rotation_about(center, AngleDeg::full_over(n as i64)),
                    strict,
                )
            })
            .unwrap_or(1)
    }

    fn mirror_axis(&self, center: Point, strict: bool) -> Option<AngleDeg> {
        let ring = self.vertex_ring(center);
        let p = *ring.first()?;
        let tp = (p - center).heading_deg();
        ring.iter().find_map(|q| {
            let tq = (*q - center).heading_deg();
            let axis = AngleDeg::approximate((tp + tq) / 2.0, 10_000)?.normalized_half();
            self.admits(&Isometry::reflection_about(center, axis), strict)
                .then_some(axis)
        })
    }

    fn report(&self, center: Point, order: u32, strict: bool) -> SymmetryReport {
        match self.mirror_axis(center, strict) {
            Some(axis) => {
                let step = AngleDeg::STRAIGHT / order as i64;
                let mut axes: Vec<AngleDeg> = (0..order as i64)
                    .map(|k| (axis + step * k).normalized_half())
                    .collect();
                axes.sort();
                SymmetryReport {
                    kind: SymmetryKind::D,
                    order,
                    center,
                    axes,
                }
            }
            None => SymmetryReport {
                kind: SymmetryKind::C,
                order,
                center,
                axes: Vec::new(),
            },
        }
    }
}

/// Largest rotation order about some centre, then whether a mirror through
/// that centre is also a symmetry. Tiles may map outside a finite patch, as
/// long as no image lands on a tile it does not coincide with. Candidate
/// centres: the origin, tile centroids, then tile vertices; the origin wins
/// ties.
pub fn detect_symmetry(patch: &Patch) -> Result<SymmetryReport, TileError> {
    let polys = realize(patch)?;
    if polys.is_empty() {
        return Err(TileError::Degenerate);
    }
    let set = TileSet::new(polys);
    let mut candidates = vec![Point::ORIGIN];
    candidates.extend(set.polys.iter().map(|p| p.centroid()));
    let mut verts = PointIndex::new(SNAP);
    for p in &set.polys {
        for v in p.vertices() {
            verts.insert(*v);
        }
    }
    candidates.extend_from_slice(verts.points());

    let mut best = (1, Point::ORIGIN);
    for c in candidates {
        let n = set.largest_order(c, best.0, false);
        if n > best.0 {
            best = (n, c);
        }
    }
    if best.0 < 2 {
        return Err(TileError::Degenerate);
    }
    Ok(set.report(best.1, best.0, false))
}

/// Point group of a single polygon about its centroid.
pub fn polygon_symmetry(poly: &ConvexPolygon) -> SymmetryReport {
    let center = poly.centroid();
    let set = TileSet::new(vec![poly.clone()]);
    let order = set.largest_order(center, 0, true);
    set.report(center, order, true)
}

/// The uncovered polygon around the origin of a hole pattern.
pub fn extract_hole(patch: &Patch) -> Result<HolePolygon, TileError> {
    if patch.meta.kind != PatchKind::Hole || patch.is_empty() {
        return Err(TileError::NoHole);
    }
    let an = Analysis::new(realize(patch)?);
    if an.covers(Point::ORIGIN) {
        return Err(TileError::NoHole);
    }
    let comps = an.components();
    let (segs, _) = comps
        .iter()
        .find(|(segs, area)| *area < 0.0 && an.encloses(segs, Point::ORIGIN))
        .ok_or(TileError::NoHole)?;

    // walk the loop; tiles run it clockwise around the hole
    let mut ends = PointIndex::new(SNAP);
    let starts: Vec<usize> = segs
        .iter()
        .map(|&s| ends.insert(an.boundary[s].a))
        .collect();
    let mut ring = Vec::with_capacity(segs.len());
    let mut at = 0;
    for _ in 0..segs.len() {
        let seg = an.boundary[segs[at]];
        ring.push(seg.a);
        let next = ends
            .find(seg.b)
            .and_then(|e| starts.iter().position(|&s| s == e));
        match next {
            Some(n) if n != 0 => at = n,
            _ => break,
        }
    }
    ring.reverse();
    let k = ring.len();
    let corners: Vec<Point> = (0..k)
        .filter(|&i| {
            let (p, c, n) = (ring[(i + k - 1) % k], ring[i], ring[(i + 1) % k]);
            (c - p).cross(n - c).abs() > EDGE_TOL
        })
        .map(|i| ring[i])
        .collect();
    let angles: Vec<AngleValue> = corners
        .iter()
        .map(|p| {
            let sum = an
                .points
                .find(*p)
                .map(|id| an.figures[id].sum())
                .unwrap_or(AngleValue::Exact(AngleDeg::ZERO));
            residual(sum)
        })
        .collect();
    let boundary = ConvexPolygon::new(corners, angles).map_err(|_| TileError::NoHole)?;

    let equilateral = boundary
        .edge_lengths()
        .iter()
        .all(|l| (l - 1.0).abs() <= 1e-9);
    let first = boundary.angles()[0].to_f64();
    let regular = equilateral
        && boundary
            .angles()
            .iter()
            .all(|a| (a.to_f64() - first).abs() <= 1e-9);
    let symmetry = polygon_symmetry(&boundary);
    let pluggable = equilateral && congruent_angles(&boundary, &patch.prototype.vertices());
    Ok(HolePolygon {
        boundary,
        equilateral,
        regular,
        symmetry,
        pluggable,
    })
}

/// Same cyclic angle sequence, read in either direction.
fn congruent_angles(p: &ConvexPolygon, q: &ConvexPolygon) -> bool {
    let k = p.len();
    if k != q.len() {
        return false;
    }
    let a: Vec<f64> = p.angles().iter().map(|x| x.to_f64()).collect();
    let b: Vec<f64> = q.angles().iter().map(|x| x.to_f64()).collect();
    (0..k).any(|s| {
        (0..k).all(|i| (a[i] - b[(i + s) % k]).abs() <= SUM_TOL)
            || (0..k).all(|i| (a[i] - b[(s + k - i) % k]).abs() <= SUM_TOL)
    })
}
