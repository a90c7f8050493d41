//! Grid buckets for clustering nearby points and finding polygons by box.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::geom::Point;

fn cell_of(p: Point, size: f64) -> (i64, i64) {
    (
        libm::floor(p.x / size) as i64,
        libm::floor(p.y / size) as i64,
    )
}

/// Points merged when closer than `tol`; each cluster keeps its first
/// representative.
#[derive(Clone, Debug)]
pub struct PointIndex {
    tol: f64,
    cells: BTreeMap<(i64, i64), Vec<usize>>,
    points: Vec<Point>,
}

impl PointIndex {
    pub fn new(tol: f64) -> Self {
        PointIndex {
            tol,
            cells: BTreeMap::new(),
            points: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, id: usize) -> Point {
        self.points[id]
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn find(&self, p: Point) -> Option<usize> {
        let (cx, cy) = cell_of(p, self.tol * 4.0);
        let mut best: Option<(usize, f64)> = None;
        for dx in -1..=1 {
            for dy in -1..=1 {
                if let Some(ids) = self.cells.get(&(cx + dx, cy + dy)) {
                    for &id in ids {
                        let d = self.points[id].dist(p);
                        if d <= self.tol && best.is_none_or(|(_, bd)| d < bd) {
                            best = Some((id, d));
                        }
                    }
                }
            }
        }
        best.map(|(id, _)| id)
    }

    pub fn insert(&mut self, p: Point) -> usize {
        if let Some(id) = self.find(p) {
            return id;
        }
        let id = self.points.len();
        self.points.push(p);
        self.cells
            .entry(cell_of(p, self.tol * 4.0))
            .or_default()
            .push(id);
        id
    }
}

/// Axis-aligned boxes bucketed on a coarse grid.
#[derive(Clone, Debug)]
pub struct BoxIndex {
    size: f64,
    cells: BTreeMap<(i64, i64), Vec<usize>>,
}

impl BoxIndex {
    pub fn new(size: f64) -> Self {
        BoxIndex {
            size,
            cells: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, id: usize, lo: Point, hi: Point) {
        let (x0, y0) = cell_of(lo, self.size);
        let (x1, y1) = cell_of(hi, self.size);
        for x in x0..=x1 {
            for y in y0..=y1 {
                self.cells.entry((x, y)).or_default().push(id);
            }
        }
    }

    /// Ids whose boxes share a grid cell with `[lo, hi]`, ascending.
    pub fn query(&self, lo: Point, hi: Point) -> Vec<usize> {
        let (x0, y0) = cell_of(lo, self.size);
        let (x1, y1) = cell_of(hi, self.size);
        let mut out = Vec::new();
        for x in x0..=x1 {
            for y in y0..=y1 {
                if let Some(ids) = self.cells.get(&(x, y)) {
                    out.extend_from_slice(ids);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}
