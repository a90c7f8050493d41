//! Equilateral convex parallelohexagons.
//!
//! Vertices are labelled `A..F` counterclockwise. Edges are named after the
//! vertex they end at: `a = F→A`, `b = A→B`, `c = B→C`, `d = C→D`,
//! `e = D→E`, `f = E→F`. Opposite angles are equal (`A = D`, `B = E`,
//! `C = F`) and `A + B + C = 360°`, so three angles (two free) describe the
//! whole shape.
//!
//! The canonical placement puts `A` at the origin with `A→B` along `+x`.
//! Edge headings are then `0`, `180 − B`, `A`, `180`, `360 − B`, `180 + A`,
//! and the hexagon is the Minkowski sum of the three unit segments with
//! headings `0`, `180 − B` and `A`.

use alloc::vec::Vec;

use crate::angle::{AngleDeg, AngleValue};
use crate::error::TileError;
use crate::geom::{ConvexPolygon, Isometry, Point};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Vertex {
    A,
    B,
    C,
    D,
    E,
    F,
}

impl Vertex {
    pub const ALL: [Vertex; 6] = [
        Vertex::A,
        Vertex::B,
        Vertex::C,
        Vertex::D,
        Vertex::E,
        Vertex::F,
    ];

    pub fn index(self) -> usize {
        self as usize
    }
}

/// Point-group symmetry of the hexagon outline.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymmetryClass {
    /// Regular hexagon.
    D6,
    /// Two mirror axes through the centre.
    D2,
    /// Half-turn only; the three distinct angles of the chiral case.
    C2,
}

/// Membership in the hexagonal tile families, reported for information.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Families {
    pub type1: bool,
    pub type2: bool,
    pub type3: bool,
}

/// A unit-edge equilateral convex parallelohexagon, given by its angles at
/// `A`, `B`, `C` (the opposite three repeat them).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HexagonSpec {
    a: AngleDeg,
    b: AngleDeg,
    c: AngleDeg,
}

/// `C = 360° − A − B`; every angle must lie strictly inside `(0°, 180°)`.
pub fn make_hexagon(a: AngleDeg, b: AngleDeg) -> Result<HexagonSpec, TileError> {
    let c = AngleDeg::FULL - a - b;
    if !a.is_convex_interior() {
        return Err(TileError::Domain(
            "angle A must lie strictly between 0° and 180°",
        ));
    }
    if !b.is_convex_interior() {
        return Err(TileError::Domain(
            "angle B must lie strictly between 0° and 180°",
        ));
    }
    if !c.is_convex_interior() {
        return Err(TileError::Domain(
            "angle C = 360° − A − B must lie strictly between 0° and 180°",
        ));
    }
    Ok(HexagonSpec { a, b, c })
}

/// Hexagon that seeds an `n`-fold rotational tiling: `A = D = 360°/n`.
/// Without `b`, the mirror-symmetric solution `B = C = 180° − 180°/n`.
pub fn hexagon_for_n(n: i64, b: Option<AngleDeg>) -> Result<HexagonSpec, TileError> {
    if n < 3 {
        return Err(TileError::Domain("rotation order n must be at least 3"));
    }
    let a = AngleDeg::full_over(n);
    let b = b.unwrap_or_else(|| AngleDeg::STRAIGHT - a / 2);
    make_hexagon(a, b)
}

/// Hexagon for a regular `m`-gonal hole: `A = D = 720°/m`,
/// `B = C = E = F = 180° − 360°/m`.
pub fn hexagon_for_hole(m: i64) -> Result<HexagonSpec, TileError> {
    if m < 5 {
        return Err(TileError::Domain("hole size m must be at least 5"));
    }
    let a = AngleDeg::full_over(m) * 2;
    make_hexagon(a, AngleDeg::STRAIGHT - a / 2)
}

impl HexagonSpec {
    pub fn a(&self) -> AngleDeg {
        self.a
    }

    pub fn b(&self) -> AngleDeg {
        self.b
    }

    pub fn c(&self) -> AngleDeg {
        self.c
    }

    pub fn angle(&self, v: Vertex) -> AngleDeg {
        self.angles()[v.index()]
    }

    /// `[A, B, C, D, E, F]`.
    pub fn angles(&self) -> [AngleDeg; 6] {
        [self.a, self.b, self.c, self.a, self.b, self.c]
    }

    /// Same hexagon with the labels moved `shift` vertices on: `A' = old
    /// vertex shift`, and so on around the outline.
    pub fn relabeled(&self, shift: usize) -> HexagonSpec {
        let t = [self.a, self.b, self.c];
        HexagonSpec {
            a: t[shift % 3],
            b: t[(shift + 1) % 3],
            c: t[(shift + 2) % 3],
        }
    }

    /// Smallest relabeling that puts `target` at vertex `A`.
    pub fn relabeled_with_a(&self, target: AngleDeg) -> Option<HexagonSpec> {
        (0..3).map(|s| self.relabeled(s)).find(|h| h.a == target)
    }

    /// Unit edge vectors `A→B`, `B→C`, `C→D`; the hexagon is their
    /// Minkowski sum.
    pub fn generators(&self) -> [Point; 3] {
        [
            Point::unit(AngleDeg::ZERO),
            Point::unit(AngleDeg::STRAIGHT - self.b),
            Point::unit(self.a),
        ]
    }

    /// Lattice vectors of the translational tiling: `A→C` and `A→E`.
    pub fn lattice(&self) -> [Point; 2] {
        let [g0, g1, g2] = self.generators();
        [g0 + g1, g1 + g2]
    }

    /// Heading of the edge leaving vertex `i` in the canonical placement.
    pub fn edge_heading(&self, i: usize) -> AngleDeg {
        let ang = self.angles();
        let h: AngleDeg = ang[1..=(i % 6)].iter().map(|&a| AngleDeg::STRAIGHT - a).sum();
        h.normalized()
    }

    /// Half-turn centre: midpoint of `A` and `D`.
    pub fn center(&self) -> Point {
        let [g0, g1, g2] = self.generators();
        (g0 + g1 + g2) * 0.5
    }

    /// Type-family membership from the angle predicates alone (every edge is
    /// already equal).
    pub fn families(&self) -> Families {
        let t = [self.a, self.b, self.c];
        let type2 = (0..3).any(|i| t[i] * 2 + t[(i + 1) % 3] == AngleDeg::FULL);
        let type3 = matches!(self.classify(), SymmetryClass::D6);
        Families {
            type1: true,
            type2,
            type3,
        }
    }

    pub fn classify(&self) -> SymmetryClass {
        classify_hexagon(self)
    }

    pub fn rotation_orders(&self) -> Vec<u32> {
        rotation_orders(self)
    }

    pub fn vertices(&self) -> ConvexPolygon {
        vertices(self)
    }

    /// A reflection mapping the canonical hexagon onto itself, if the
    /// outline has one.
    pub fn outline_mirror(&self) -> Option<Isometry> {
        let ang = self.angles();
        let center = self.center();
        for i in 0..3 {
            // axis through vertices i and i+3
            if ang[(i + 5) % 6] == ang[(i + 1) % 6] {
                let dir = self.edge_heading(i) + ang[i] / 2;
                return Some(Isometry::reflection_about(center, dir));
            }
            // axis through the midpoints of the edge leaving vertex i and its opposite
            if ang[i] == ang[(i + 1) % 6] {
                let dir = self.edge_heading(i) + AngleDeg::from_int(90);
                return Some(Isometry::reflection_about(center, dir));
            }
        }
        None
    }
}

/// Canonical outline: walk unit edges from the origin heading `+x`,
/// turning left by `180° − interior` at each vertex.
pub fn vertices(hex: &HexagonSpec) -> ConvexPolygon {
    let ang = hex.angles();
    let mut pts = Vec::with_capacity(6);
    let mut p = Point::ORIGIN;
    for i in 0..6 {
        pts.push(p);
        p = p + Point::unit(hex.edge_heading(i));
    }
    assert!(
        p.norm() < 1e-12,
        "hexagon walk failed to close: residual {}",
        p.norm()
    );
    let angles = ang.iter().map(|a| AngleValue::Exact(*a)).collect();
    ConvexPolygon::from_parts_unchecked(pts, angles)
}

/// Exact comparisons of the three distinct angles.
pub fn classify_hexagon(hex: &HexagonSpec) -> SymmetryClass {
    let (a, b, c) = (hex.a, hex.b, hex.c);
    if a == b && b == c {
        SymmetryClass::D6
    } else if a == b || b == c || c == a {
        SymmetryClass::D2
    } else {
        SymmetryClass::C2
    }
}

/// Every `n ≥ 3` with some interior angle exactly `360°/n`, descending.
pub fn rotation_orders(hex: &HexagonSpec) -> Vec<u32> {
    let mut out: Vec<u32> = [hex.a, hex.b, hex.c]
        .iter()
        .filter_map(|a| a.divides_full_turn())
        .filter(|n| *n >= 3)
        .map(|n| n as u32)
        .collect();
    out.sort_unstable_by(|x, y| y.cmp(x));
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::area;

    fn deg(d: i64) -> AngleDeg {
        AngleDeg::from_int(d)
    }

    #[test]
    fn make_hexagon_solves_c() {
        assert_eq!(make_hexagon(deg(72), deg(134)).unwrap().c(), deg(154));
        assert_eq!(make_hexagon(deg(120), deg(120)).unwrap().c(), deg(120));
        assert_eq!(make_hexagon(deg(90), deg(120)).unwrap().c(), deg(150));
    }

    #[test]
    fn make_hexagon_rejects_degenerate() {
        assert!(make_hexagon(deg(180), deg(90)).is_err());
        assert!(make_hexagon(deg(0), deg(90)).is_err());
        assert!(make_hexagon(deg(90), deg(90)).is_err()); // C = 180
        assert!(make_hexagon(deg(100), deg(200)).is_err());
    }

    #[test]
    fn table_one_rows() {
        let h = hexagon_for_n(5, None).unwrap();
        assert_eq!(
            h.angles(),
            [deg(72), deg(144), deg(144), deg(72), deg(144), deg(144)]
        );
        let h7 = hexagon_for_n(7, None).unwrap();
        assert_eq!(h7.a(), AngleDeg::full_over(7));
        assert_eq!(h7.b(), AngleDeg::new(1080, 7).unwrap());
        assert_eq!(h7.a().display_rounded(2), "51.43");
        assert_eq!(h7.b().display_rounded(2), "154.29");
        let fig5 = hexagon_for_n(5, Some(deg(134))).unwrap();
        assert_eq!(
            (fig5.a(), fig5.b(), fig5.c()),
            (deg(72), deg(134), deg(154))
        );
        assert!(hexagon_for_n(2, None).is_err());
        assert!(hexagon_for_n(5, Some(deg(100))).is_err()); // C = 188
    }

    #[test]
    fn table_two_rows() {
        let h5 = hexagon_for_hole(5).unwrap();
        assert_eq!((h5.a(), h5.b(), h5.c()), (deg(144), deg(108), deg(108)));
        let h7 = hexagon_for_hole(7).unwrap();
        assert_eq!(
            (h7.a(), h7.b()),
            (
                AngleDeg::new(720, 7).unwrap(),
                AngleDeg::new(900, 7).unwrap()
            )
        );
        assert_eq!(h7.a().display_rounded(2), "102.86");
        assert_eq!(h7.b().display_rounded(2), "128.57");
        assert_eq!(hexagon_for_hole(6).unwrap().classify(), SymmetryClass::D6);
        assert!(hexagon_for_hole(4).is_err());
    }

    #[test]
    fn regular_hexagon_circumradius_is_one() {
        let poly = hexagon_for_n(3, None).unwrap().vertices();
        let c = poly.centroid();
        for p in poly.vertices() {
            assert!((p.dist(c) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn long_diagonal_of_pentagonal_hexagon() {
        // independent: unit edges at headings 0°, 36°, 72° summed
        let r = |d: f64| (libm::cos(d.to_radians()), libm::sin(d.to_radians()));
        let (x, y) = [0.0, 36.0, 72.0].iter().fold((0.0, 0.0), |(x, y), d| {
            let (c, s) = r(*d);
            (x + c, y + s)
        });
        let expected = libm::hypot(x, y);
        assert!((expected - 2.618034).abs() < 1e-6);
        let poly = hexagon_for_n(5, None).unwrap().vertices();
        let ad = poly.vertices()[0].dist(poly.vertices()[3]);
        assert!((ad - expected).abs() < 1e-12);
    }

    #[test]
    fn walk_closes_for_c2_hexagon() {
        let hex = make_hexagon(deg(90), deg(120)).unwrap();
        let poly = hex.vertices();
        // second walk with headings accumulated in radians
        let ang = [90.0, 120.0, 150.0, 90.0, 120.0, 150.0];
        let (mut x, mut y, mut h) = (0.0f64, 0.0f64, 0.0f64);
        for (i, a) in ang.iter().enumerate() {
            if i > 0 {
                h += 180.0 - a;
            }
            assert!(poly.vertices()[i].dist(Point::new(x, y)) < 1e-12);
            x += libm::cos(h.to_radians());
            y += libm::sin(h.to_radians());
        }
        assert!(libm::hypot(x, y) < 1e-12);
        for l in poly.edge_lengths() {
            assert!((l - 1.0).abs() < 1e-12);
        }
        assert!(area(&poly) > 0.0);
    }

    #[test]
    fn classification() {
        assert_eq!(
            make_hexagon(deg(72), deg(144)).unwrap().classify(),
            SymmetryClass::D2
        );
        assert_eq!(
            make_hexagon(deg(72), deg(134)).unwrap().classify(),
            SymmetryClass::C2
        );
        assert_eq!(
            make_hexagon(deg(120), deg(120)).unwrap().classify(),
            SymmetryClass::D6
        );
    }

    #[test]
    fn orders_from_angles() {
        assert_eq!(
            make_hexagon(deg(90), deg(120)).unwrap().rotation_orders(),
            [4, 3]
        );
        assert_eq!(
            make_hexagon(deg(72), deg(120)).unwrap().rotation_orders(),
            [5, 3]
        );
        assert_eq!(
            make_hexagon(deg(72), deg(134)).unwrap().rotation_orders(),
            [5]
        );
        assert_eq!(hexagon_for_n(3, None).unwrap().rotation_orders(), [3]);
    }

    #[test]
    fn relabel_moves_target_to_a() {
        let h = make_hexagon(deg(90), deg(120)).unwrap();
        let r = h.relabeled_with_a(deg(120)).unwrap();
        assert_eq!((r.a(), r.b(), r.c()), (deg(120), deg(150), deg(90)));
        assert!(h.relabeled_with_a(deg(100)).is_none());
    }

    #[test]
    fn families() {
        let eq2 = hexagon_for_n(5, None).unwrap().families();
        assert!(eq2.type1 && eq2.type2 && !eq2.type3);
        let reg = hexagon_for_n(3, None).unwrap().families();
        assert!(reg.type1 && reg.type2 && reg.type3);
        let c2 = make_hexagon(deg(72), deg(134)).unwrap().families();
        assert!(c2.type1 && !c2.type2 && !c2.type3);
    }

    #[test]
    fn mirror_only_for_symmetric_outlines() {
        assert!(make_hexagon(deg(72), deg(134))
            .unwrap()
            .outline_mirror()
            .is_none());
        for hex in [
            hexagon_for_n(5, None).unwrap(),
            make_hexagon(deg(144), deg(72)).unwrap(),
            make_hexagon(deg(100), deg(100)).unwrap(),
            hexagon_for_n(3, None).unwrap(),
        ] {
            let m = hex.outline_mirror().expect("symmetric outline");
            let poly = hex.vertices();
            assert!(m.apply_polygon(&poly).same_outline(&poly, 1e-9));
        }
    }
}
