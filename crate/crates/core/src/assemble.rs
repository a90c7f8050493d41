//! Finite patches of the rotational tilings and hole patterns.
//!
//! Every patch is monohedral: it stores one prototype hexagon, an optional
//! bisection of it, and an isometry per placed piece. Rotation centres sit
//! at the origin.

use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::angle::AngleDeg;
use crate::bisect::{bisect, BisectionSpec, PairKind};
use crate::error::TileError;
use crate::geom::{ConvexPolygon, Isometry, Point};
use crate::hexagon::{hexagon_for_hole, HexagonSpec, SymmetryClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TileProto {
    Hexagon,
    PentLeft,
    PentRight,
    QuadLeft,
    QuadRight,
}

impl TileProto {
    pub fn name(self) -> &'static str {
        match self {
            TileProto::Hexagon => "hexagon",
            TileProto::PentLeft => "pent-left",
            TileProto::PentRight => "pent-right",
            TileProto::QuadLeft => "quad-left",
            TileProto::QuadRight => "quad-right",
        }
    }

    pub fn from_name(s: &str) -> Option<TileProto> {
        [
            TileProto::Hexagon,
            TileProto::PentLeft,
            TileProto::PentRight,
            TileProto::QuadLeft,
            TileProto::QuadRight,
        ]
        .into_iter()
        .find(|p| p.name() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlacedTile {
    pub id: u32,
    pub proto: TileProto,
    pub placement: Isometry,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatchKind {
    Rotational,
    Hole,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PatchMeta {
    pub kind: PatchKind,
    /// `n` for rotational patches, `m` for hole patterns.
    pub order: u32,
    pub depth: u32,
}

/// `prototype` is stored relabeled so that the construction's angle sits at
/// vertex `A`; placements refer to its canonical outline.
#[derive(Clone, Debug, PartialEq)]
pub struct Patch {
    pub prototype: HexagonSpec,
    pub bisection: Option<BisectionSpec>,
    pub tiles: Vec<PlacedTile>,
    pub meta: PatchMeta,
}

/// Canonical outlines of the prototype pieces.
#[derive(Clone, Debug)]
pub struct ProtoShapes {
    hexagon: ConvexPolygon,
    left: Option<ConvexPolygon>,
    right: Option<ConvexPolygon>,
}

impl ProtoShapes {
    pub fn new(hex: &HexagonSpec, bisection: Option<&BisectionSpec>) -> Result<Self, TileError> {
        let (left, right) = match bisection {
            Some(spec) => {
                let pair = bisect(hex, spec)?;
                (Some(pair.left), Some(pair.right))
            }
            None => (None, None),
        };
        Ok(ProtoShapes {
            hexagon: hex.vertices(),
            left,
            right,
        })
    }

    pub fn get(&self, proto: TileProto) -> Option<&ConvexPolygon> {
        match proto {
            TileProto::Hexagon => Some(&self.hexagon),
            TileProto::PentLeft | TileProto::QuadLeft => self.left.as_ref(),
            TileProto::PentRight | TileProto::QuadRight => self.right.as_ref(),
        }
    }
}

impl Patch {
    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn shapes(&self) -> Result<ProtoShapes, TileError> {
        ProtoShapes::new(&self.prototype, self.bisection.as_ref())
    }

    /// Placed outlines, in tile order.
    pub fn realize(&self) -> Result<Vec<ConvexPolygon>, TileError> {
        let shapes = self.shapes()?;
        self.tiles
            .iter()
            .map(|t| {
                shapes
                    .get(t.proto)
                    .map(|p| t.placement.apply_polygon(p))
                    .ok_or(TileError::Domain("piece prototype needs a bisection"))
            })
            .collect()
    }

    /// Number of hexagon cells: tiles, or tile pairs after bisection.
    pub fn cell_count(&self) -> usize {
        if self.bisection.is_some() {
            self.tiles.len() / 2
        } else {
            self.tiles.len()
        }
    }
}

/// Per-cell choice of whether to mirror a hexagon's inner arrangement.
pub trait FlipSource {
    fn flip(&mut self, cell: usize) -> bool;
}

pub struct NoFlips;

impl FlipSource for NoFlips {
    fn flip(&mut self, _cell: usize) -> bool {
        false
    }
}

/// One fair bit per cell from a seeded ChaCha8 stream.
pub struct SeededFlips(ChaCha8Rng);

impl SeededFlips {
    pub fn new(seed: u64) -> Self {
        SeededFlips(ChaCha8Rng::seed_from_u64(seed))
    }
}

impl FlipSource for SeededFlips {
    fn flip(&mut self, _cell: usize) -> bool {
        self.0.next_u32() & 1 == 1
    }
}

impl<F: FnMut(usize) -> bool> FlipSource for F {
    fn flip(&mut self, cell: usize) -> bool {
        self(cell)
    }
}

/// Wedge of translated copies: row `r` holds `r + 1` hexagons, each row
/// one lattice step further out. Neighbours meet in `B + D + F` and
/// `A + C + E` vertices.
pub fn build_unit(hex: &HexagonSpec, depth: u32, reflected: bool) -> Vec<PlacedTile> {
    let [t1, t2] = hex.lattice();
    let mut tiles = Vec::new();
    for row in 0..depth {
        for i in 0..=row {
            let j = row - i;
            let shift = t1 * i as f64 + t2 * j as f64;
            let mut placement = Isometry::translation(shift);
            if reflected {
                placement = Isometry::reflection().compose(&placement);
            }
            tiles.push(PlacedTile {
                id: tiles.len() as u32,
                proto: TileProto::Hexagon,
                placement,
            });
        }
    }
    tiles
}

fn renumber(tiles: &mut [PlacedTile]) {
    for (i, t) in tiles.iter_mut().enumerate() {
        t.id = i as u32;
    }
}

fn placed<'a>(unit: &'a [PlacedTile], g: &Isometry) -> impl Iterator<Item = PlacedTile> + 'a {
    let g = *g;
    unit.iter().map(move |t| PlacedTile {
        placement: g.compose(&t.placement),
        ..*t
    })
}

/// `n`-fold rotational patch about the origin: the unit and its partner
/// unit, rotated through multiples of `A = 360°/n`.
pub fn build_rotational_tiling(hex: &HexagonSpec, n: u32, depth: u32) -> Result<Patch, TileError> {
    if depth < 1 {
        return Err(TileError::Domain("depth must be at least 1"));
    }
    let hex = hex
        .relabeled_with_a(AngleDeg::full_over(n as i64))
        .filter(|_| n >= 3)
        .ok_or(TileError::Order(n))?;
    let unit = build_unit(&hex, depth, false);
    let [_, _, g2] = hex.generators();
    let turn = AngleDeg::STRAIGHT - hex.b();
    let partner = if hex.b() == hex.c() {
        Isometry::new(false, turn, g2)
    } else {
        Isometry::new(false, turn + hex.a(), g2).compose(&Isometry::reflection())
    };
    let mut tiles = Vec::new();
    for k in 0..n {
        let rot = Isometry::rotation(hex.a() * k as i64);
        tiles.extend(placed(&unit, &rot));
        tiles.extend(placed(&unit, &rot.compose(&partner)));
    }
    renumber(&mut tiles);
    Ok(Patch {
        prototype: hex,
        bisection: None,
        tiles,
        meta: PatchMeta {
            kind: PatchKind::Rotational,
            order: n,
            depth,
        },
    })
}

/// Centre of the rotation by `step` that carries the origin to `target`.
fn ring_center(target: Point, step: AngleDeg) -> Point {
    // target / (1 − e^{i·step}) in complex arithmetic
    let w = Point::new(1.0, 0.0) - Point::unit(step);
    let d = w.dot(w);
    Point::new(
        (target.x * w.x + target.y * w.y) / d,
        (target.y * w.x - target.x * w.y) / d,
    )
}

/// Pattern of wedges around an uncovered central polygon.
///
/// If the prototype is the `m`-gon hexagon (up to relabeling) the hole is
/// a regular `m`-gon and `m` plain units surround it. Otherwise `m = 2n`,
/// the prototype must have an angle `360°/n`, and `n` plain and `n`
/// reflected units alternate around an equilateral `2n`-gon.
pub fn build_hole_tiling(hex: &HexagonSpec, m: u32, depth: u32) -> Result<Patch, TileError> {
    if depth < 1 {
        return Err(TileError::Domain("depth must be at least 1"));
    }
    if m < 5 {
        return Err(TileError::Domain("hole size m must be at least 5"));
    }
    let regular = hexagon_for_hole(m as i64)?;
    if let Some(hex) = (0..3).map(|s| hex.relabeled(s)).find(|h| *h == regular) {
        let unit = build_unit(&hex, depth, false);
        let step = AngleDeg::full_over(m as i64);
        let center = ring_center(Point::new(1.0, 0.0), step);
        let seat = Isometry::new(false, -hex.a(), -center);
        let mut tiles = Vec::new();
        for k in 0..m {
            let g = Isometry::rotation(step * k as i64).compose(&seat);
            tiles.extend(placed(&unit, &g));
        }
        renumber(&mut tiles);
        return Ok(Patch {
            prototype: hex,
            bisection: None,
            tiles,
            meta: PatchMeta {
                kind: PatchKind::Hole,
                order: m,
                depth,
            },
        });
    }

    if m % 2 == 1 {
        return Err(match hex.classify() {
            SymmetryClass::C2 => TileError::Parity(m),
            _ => TileError::Order(m),
        });
    }
    let n = (m / 2) as i64;
    let hex = hex
        .relabeled_with_a(AngleDeg::full_over(n))
        .ok_or(TileError::Order(m))?;
    let unit = build_unit(&hex, depth, false);
    let v1 = Point::new(1.0, 0.0);
    let v2 = v1 + Point::unit(AngleDeg::STRAIGHT - hex.b());
    let center = ring_center(v2, hex.a());
    let plain = Isometry::new(false, -hex.a(), -center);
    let mirrored = Isometry::new(false, AngleDeg::STRAIGHT - hex.b(), v1 - center)
        .compose(&Isometry::reflection());
    let mut tiles = Vec::new();
    for k in 0..n {
        let rot = Isometry::rotation(hex.a() * k);
        tiles.extend(placed(&unit, &rot.compose(&plain)));
        tiles.extend(placed(&unit, &rot.compose(&mirrored)));
    }
    renumber(&mut tiles);
    Ok(Patch {
        prototype: hex,
        bisection: None,
        tiles,
        meta: PatchMeta {
            kind: PatchKind::Hole,
            order: m,
            depth,
        },
    })
}

/// Replaces every hexagon by its two bisection pieces. A flipped cell
/// carries its pieces through the outline mirror of the prototype, so the
/// cell outline stays put while the inner arrangement is reflected.
pub fn bisect_patch(
    patch: &Patch,
    spec: &BisectionSpec,
    choices: &mut dyn FlipSource,
) -> Result<Patch, TileError> {
    if patch.bisection.is_some() || patch.tiles.iter().any(|t| t.proto != TileProto::Hexagon) {
        return Err(TileError::Domain("only hexagon patches can be bisected"));
    }
    let pair = bisect(&patch.prototype, spec)?;
    let (left, right) = match pair.kind {
        PairKind::Pentagon => (TileProto::PentLeft, TileProto::PentRight),
        PairKind::Quadrangle => (TileProto::QuadLeft, TileProto::QuadRight),
    };
    let mirror = patch.prototype.outline_mirror();
    let mut tiles = Vec::with_capacity(patch.tiles.len() * 2);
    for (cell, t) in patch.tiles.iter().enumerate() {
        let mut g = t.placement;
        if choices.flip(cell) {
            let m = mirror.ok_or(TileError::Reflect)?;
            g = g.compose(&m);
        }
        tiles.push(PlacedTile {
            id: 0,
            proto: left,
            placement: g,
        });
        tiles.push(PlacedTile {
            id: 0,
            proto: right,
            placement: g,
        });
    }
    renumber(&mut tiles);
    Ok(Patch {
        prototype: patch.prototype,
        bisection: Some(*spec),
        tiles,
        meta: patch.meta,
    })
}
