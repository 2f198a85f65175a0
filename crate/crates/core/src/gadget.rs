//! Gadget templates: cell sets with ordered wire ports, shipped as data
//! resources and validated behaviorally by the local-solution enumerator.

use crate::error::{Error, Result};
use crate::grid_graph::GridGraph;
use crate::lattice::{pixel_corners, Cell, Coord, GridKind, Orientation};
use std::collections::BTreeSet;

/// Hexagonal cell-center adjacency offsets, counterclockwise from 30 degrees.
pub const HEX_CELL_DIRS: [(i64, i64); 6] = [(1, 1), (-1, 2), (-2, 1), (-1, -1), (1, -2), (2, -1)];

/// Square cell adjacency offsets, counterclockwise from +x.
pub const SQ_CELL_DIRS: [(i64, i64); 4] = [(1, 0), (0, 1), (-1, 0), (0, -1)];

/// A wire attachment point: the template's outermost wire cell and the
/// direction in which the wire continues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Port {
    pub id: u32,
    pub stub: Cell,
    /// Index into `HEX_CELL_DIRS` or `SQ_CELL_DIRS` depending on the kind.
    pub dir: u8,
}

/// A gadget as geometry: cells in template-local coordinates plus ports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetTemplate {
    pub name: String,
    pub kind: GridKind,
    pub cells: BTreeSet<Cell>,
    pub ports: Vec<Port>,
}

impl GadgetTemplate {
    pub fn cell_dirs(&self) -> &'static [(i64, i64)] {
        match self.kind {
            GridKind::Hexagonal => &HEX_CELL_DIRS,
            GridKind::Square => &SQ_CELL_DIRS,
            GridKind::Triangular => unimplemented!("no triangular gadgets"),
        }
    }

    /// Cell reached by stepping from `c` in direction `dir`.
    pub fn step(kind: GridKind, c: Cell, dir: u8) -> Cell {
        let dirs: &[(i64, i64)] = match kind {
            GridKind::Hexagonal => &HEX_CELL_DIRS,
            GridKind::Square => &SQ_CELL_DIRS,
            GridKind::Triangular => unimplemented!(),
        };
        let (da, db) = dirs[dir as usize % dirs.len()];
        Cell { kind, anchor: c.anchor.offset(da, db), orientation: c.orientation }
    }

    /// All vertices of the template's cells.
    pub fn vertices(&self) -> Result<BTreeSet<Coord>> {
        let mut out = BTreeSet::new();
        for c in &self.cells {
            for v in pixel_corners(c)? {
                out.insert(v);
            }
        }
        Ok(out)
    }

    /// Build the induced grid graph of the template alone, with `extra` wire
    /// cells appended past every port (simulating the continuing wires).
    pub fn instantiate(&self, extra: usize) -> Result<(GridGraph, Vec<Vec<Cell>>)> {
        let mut cells = self.cells.clone();
        let mut port_tails = Vec::new();
        for p in &self.ports {
            let mut tail = Vec::new();
            let mut cur = p.stub;
            for _ in 0..extra {
                cur = Self::step(self.kind, cur, p.dir);
                cells.insert(cur);
                tail.push(cur);
            }
            port_tails.push(tail);
        }
        let mut coords = BTreeSet::new();
        for c in &cells {
            for v in pixel_corners(c)? {
                coords.insert(v);
            }
        }
        let g = GridGraph::build(self.kind, &coords)?;
        Ok((g, port_tails))
    }
}

/// Orientation-preserving isometries of the hexagonal lattice: rotation by
/// `rot * 60` degrees followed by a translation of cell centers.
pub fn hex_rotate(c: Coord, rot: u8) -> Coord {
    let mut p = c;
    for _ in 0..(rot % 6) {
        p = Coord::new(-p.b, p.a + p.b);
    }
    p
}

pub fn hex_xform_cell(c: Cell, rot: u8, t: Coord) -> Cell {
    let p = hex_rotate(c.anchor, rot);
    Cell { kind: c.kind, anchor: Coord::new(p.a + t.a, p.b + t.b), orientation: c.orientation }
}

pub fn hex_xform_vertex(v: Coord, rot: u8, t: Coord) -> Coord {
    let p = hex_rotate(v, rot);
    Coord::new(p.a + t.a, p.b + t.b)
}

/// Rotate a square cell by `rot * 90` degrees about the origin, then
/// translate. Cells are anchored at their lower-left corner, so a rotation
/// moves the anchor to the image's new lower-left corner.
pub fn sq_xform_cell(c: Cell, rot: u8, t: Coord) -> Cell {
    debug_assert_eq!(c.orientation, Orientation::None);
    let (a, b) = (c.anchor.a, c.anchor.b);
    let (na, nb) = match rot % 4 {
        0 => (a, b),
        1 => (-b - 1, a),
        2 => (-a - 1, -b - 1),
        _ => (b, -a - 1),
    };
    Cell::square(na + t.a, nb + t.b)
}

pub fn sq_xform_vertex(v: Coord, rot: u8, t: Coord) -> Coord {
    let (a, b) = (v.a, v.b);
    let (na, nb) = match rot % 4 {
        0 => (a, b),
        1 => (-b, a),
        2 => (-a, -b),
        _ => (b, -a),
    };
    Coord::new(na + t.a, nb + t.b)
}

/// Mirror a square cell across the vertical axis `x = 0`, then translate.
pub fn sq_mirror_cell(c: Cell, t: Coord) -> Cell {
    Cell::square(-c.anchor.a - 1 + t.a, c.anchor.b + t.b)
}

pub fn sq_mirror_vertex(v: Coord, t: Coord) -> Coord {
    Coord::new(-v.a + t.a, v.b + t.b)
}

/// Validate that a template's cells all lie on its lattice.
pub fn check_cells(t: &GadgetTemplate) -> Result<()> {
    for c in &t.cells {
        if c.kind != t.kind || !c.valid() {
            return Err(Error::TemplateInvalid(format!("cell {c} invalid for {}", t.kind)));
        }
    }
    for p in &t.ports {
        if !t.cells.contains(&p.stub) {
            return Err(Error::TemplateInvalid(format!(
                "port {} stub {} not among template cells",
                p.id, p.stub
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hex_rotation_is_order_six() {
        let c = Coord::new(2, -1);
        let mut p = c;
        for _ in 0..6 {
            p = hex_rotate(p, 1);
        }
        assert_eq!(p, c);
    }

    #[test]
    fn square_rotation_maps_cells_consistently() {
        let c = Cell::square(2, 1);
        let corners: BTreeSet<Coord> = pixel_corners(&c)
            .unwrap()
            .into_iter()
            .map(|v| sq_xform_vertex(v, 1, Coord::new(0, 0)))
            .collect();
        let rc = sq_xform_cell(c, 1, Coord::new(0, 0));
        let expect: BTreeSet<Coord> = pixel_corners(&rc).unwrap().into_iter().collect();
        assert_eq!(corners, expect);
    }

    #[test]
    fn hex_step_cells_are_adjacent() {
        let c = Cell::hex(0, 0);
        for d in 0..6u8 {
            let n = GadgetTemplate::step(GridKind::Hexagonal, c, d);
            assert!(n.anchor.hex_center());
            // adjacent centers share exactly two corners (an edge)
            let a: BTreeSet<Coord> = pixel_corners(&c).unwrap().into_iter().collect();
            let b: BTreeSet<Coord> = pixel_corners(&n).unwrap().into_iter().collect();
            assert_eq!(a.intersection(&b).count(), 2);
        }
    }
}
