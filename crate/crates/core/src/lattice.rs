//! Integer coordinate systems for the square, triangular, and hexagonal
//! tilings, with unit-distance adjacency and cell geometry.
//!
//! All three grids share one integer basis: a coordinate `(a, b)` embeds at
//! `a*(1,0) + b*(1/2, sqrt(3)/2)` for the triangular and hexagonal grids and
//! at `(a, b)` for the square grid. Hexagonal-grid vertices are the
//! triangular lattice minus the sublattice `(a - b) % 3 == 0`; points of that
//! excluded sublattice are the hexagon centers.

use crate::error::{Error, Result};
use std::fmt;

/// Which tiling a graph or cell lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GridKind {
    Square,
    Triangular,
    Hexagonal,
}

impl GridKind {
    pub fn name(self) -> &'static str {
        match self {
            GridKind::Square => "square",
            GridKind::Triangular => "triangular",
            GridKind::Hexagonal => "hexagonal",
        }
    }

    pub fn parse(s: &str) -> Option<GridKind> {
        match s {
            "square" => Some(GridKind::Square),
            "triangular" => Some(GridKind::Triangular),
            "hexagonal" => Some(GridKind::Hexagonal),
            _ => None,
        }
    }

    /// Boundary length of a pixel face on this grid.
    pub fn pixel_len(self) -> usize {
        match self {
            GridKind::Square => 4,
            GridKind::Triangular => 3,
            GridKind::Hexagonal => 6,
        }
    }
}

impl fmt::Display for GridKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Coordinates stay inside this window so embedded positions are exact in
/// double precision.
pub const COORD_LIMIT: i64 = 1 << 20;

/// A lattice point. Ordering is lexicographic by `(b, a)`, which is the
/// canonical vertex order used for serialization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Coord {
    pub a: i64,
    pub b: i64,
}

impl Coord {
    pub const fn new(a: i64, b: i64) -> Coord {
        Coord { a, b }
    }

    pub fn in_window(self) -> bool {
        self.a.abs() <= COORD_LIMIT && self.b.abs() <= COORD_LIMIT
    }

    /// True unless this is a hexagon center (the excluded sublattice).
    pub fn hex_valid(self) -> bool {
        (self.a - self.b).rem_euclid(3) != 0
    }

    /// True if this is a hexagon center in the shared triangular basis.
    pub fn hex_center(self) -> bool {
        (self.a - self.b).rem_euclid(3) == 0
    }

    pub fn offset(self, da: i64, db: i64) -> Coord {
        Coord::new(self.a + da, self.b + db)
    }
}

impl PartialOrd for Coord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Coord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.b, self.a).cmp(&(other.b, other.a))
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// Orientation of a triangular cell; `None` for square and hexagonal cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    None,
    Up,
    Down,
}

/// One tile of the tiling: a unit square, a unit triangle, or a unit hexagon.
///
/// Square cells are anchored at their lower-left corner. Triangular cells
/// come in `Up`/`Down` pairs sharing an anchor (the two halves of the rhombus
/// spanned by the basis vectors). Hexagonal cells are anchored at their
/// center, which lies on the excluded sublattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub kind: GridKind,
    pub anchor: Coord,
    pub orientation: Orientation,
}

impl Cell {
    pub fn square(a: i64, b: i64) -> Cell {
        Cell { kind: GridKind::Square, anchor: Coord::new(a, b), orientation: Orientation::None }
    }

    pub fn tri_up(a: i64, b: i64) -> Cell {
        Cell { kind: GridKind::Triangular, anchor: Coord::new(a, b), orientation: Orientation::Up }
    }

    pub fn tri_down(a: i64, b: i64) -> Cell {
        Cell { kind: GridKind::Triangular, anchor: Coord::new(a, b), orientation: Orientation::Down }
    }

    pub fn hex(a: i64, b: i64) -> Cell {
        Cell { kind: GridKind::Hexagonal, anchor: Coord::new(a, b), orientation: Orientation::None }
    }

    pub fn valid(&self) -> bool {
        match (self.kind, self.orientation) {
            (GridKind::Square, Orientation::None) => true,
            (GridKind::Triangular, Orientation::Up | Orientation::Down) => true,
            (GridKind::Hexagonal, Orientation::None) => self.anchor.hex_center(),
            _ => false,
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.orientation {
            Orientation::None => write!(f, "{}[{},{}]", self.kind, self.anchor.a, self.anchor.b),
            Orientation::Up => write!(f, "{}^[{},{}]", self.kind, self.anchor.a, self.anchor.b),
            Orientation::Down => write!(f, "{}v[{},{}]", self.kind, self.anchor.a, self.anchor.b),
        }
    }
}

/// Euclidean position of a coordinate in its embedding plane.
pub fn embed(kind: GridKind, c: Coord) -> (f64, f64) {
    match kind {
        GridKind::Square => (c.a as f64, c.b as f64),
        GridKind::Triangular | GridKind::Hexagonal => {
            (c.a as f64 + c.b as f64 * 0.5, c.b as f64 * (3.0f64.sqrt() / 2.0))
        }
    }
}

// Neighbor offsets in counterclockwise order starting from the +x direction.
// This fixed order is the planar rotation system used for face tracing.
const SQUARE_OFFSETS: [(i64, i64); 4] = [(1, 0), (0, 1), (-1, 0), (0, -1)];
const TRI_OFFSETS: [(i64, i64); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

fn check_coord(kind: GridKind, c: Coord) -> Result<()> {
    if !c.in_window() {
        return Err(Error::CoordDomain(format!("{c} outside coordinate window")));
    }
    if kind == GridKind::Hexagonal && !c.hex_valid() {
        return Err(Error::CoordDomain(format!(
            "{c} lies on the hexagon-center sublattice ((a-b) % 3 == 0)"
        )));
    }
    Ok(())
}

/// All lattice points at Euclidean distance exactly 1 from `c`, in
/// counterclockwise order starting from the +x direction.
pub fn neighbors(kind: GridKind, c: Coord) -> Result<Vec<Coord>> {
    check_coord(kind, c)?;
    let offs: &[(i64, i64)] = match kind {
        GridKind::Square => &SQUARE_OFFSETS,
        GridKind::Triangular => &TRI_OFFSETS,
        GridKind::Hexagonal => &TRI_OFFSETS,
    };
    let mut out = Vec::with_capacity(offs.len());
    for &(da, db) in offs {
        let n = c.offset(da, db);
        if kind == GridKind::Hexagonal && !n.hex_valid() {
            continue;
        }
        out.push(n);
    }
    Ok(out)
}

/// Corner coordinates of a cell in counterclockwise cyclic order;
/// consecutive corners are at distance 1.
pub fn pixel_corners(cell: &Cell) -> Result<Vec<Coord>> {
    if !cell.valid() {
        return Err(Error::CellDomain(format!("malformed cell {cell}")));
    }
    let c = cell.anchor;
    check_coord(
        match cell.kind {
            GridKind::Hexagonal => GridKind::Triangular, // anchor is a center, not a vertex
            k => k,
        },
        c,
    )?;
    Ok(match (cell.kind, cell.orientation) {
        (GridKind::Square, _) => {
            vec![c, c.offset(1, 0), c.offset(1, 1), c.offset(0, 1)]
        }
        (GridKind::Triangular, Orientation::Up) => {
            vec![c, c.offset(1, 0), c.offset(0, 1)]
        }
        (GridKind::Triangular, Orientation::Down) => {
            vec![c.offset(1, 0), c.offset(1, 1), c.offset(0, 1)]
        }
        (GridKind::Hexagonal, _) => TRI_OFFSETS.iter().map(|&(da, db)| c.offset(da, db)).collect(),
        _ => unreachable!(),
    })
}

/// The cells a given vertex belongs to, each paired with the corner index of
/// the vertex in that cell's corner cycle. Cells are listed regardless of
/// whether they are pixels of any particular graph.
pub fn cells_at_vertex(kind: GridKind, v: Coord) -> Vec<Cell> {
    match kind {
        GridKind::Square => vec![
            Cell::square(v.a - 1, v.b - 1),
            Cell::square(v.a, v.b - 1),
            Cell::square(v.a - 1, v.b),
            Cell::square(v.a, v.b),
        ],
        GridKind::Triangular => vec![
            Cell::tri_up(v.a, v.b),
            Cell::tri_up(v.a - 1, v.b),
            Cell::tri_up(v.a, v.b - 1),
            Cell::tri_down(v.a - 1, v.b),
            Cell::tri_down(v.a, v.b - 1),
            Cell::tri_down(v.a - 1, v.b - 1),
        ],
        GridKind::Hexagonal => {
            // A honeycomb vertex lies on exactly three hexagons.
            let mut cells = Vec::with_capacity(3);
            for &(da, db) in TRI_OFFSETS.iter() {
                let c = v.offset(-da, -db);
                if c.hex_center() {
                    cells.push(Cell::hex(c.a, c.b));
                }
            }
            cells
        }
    }
}

/// The two cells flanking the unit edge `(u, v)`, in no particular order.
pub fn cells_at_edge(kind: GridKind, u: Coord, v: Coord) -> Vec<Cell> {
    let cu = cells_at_vertex(kind, u);
    let cv = cells_at_vertex(kind, v);
    cu.into_iter().filter(|c| cv.contains(c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dist(kind: GridKind, u: Coord, v: Coord) -> f64 {
        let (ux, uy) = embed(kind, u);
        let (vx, vy) = embed(kind, v);
        ((ux - vx).powi(2) + (uy - vy).powi(2)).sqrt()
    }

    #[test]
    fn square_neighbors_order() {
        let n = neighbors(GridKind::Square, Coord::new(0, 0)).unwrap();
        assert_eq!(
            n,
            vec![Coord::new(1, 0), Coord::new(0, 1), Coord::new(-1, 0), Coord::new(0, -1)]
        );
    }

    #[test]
    fn triangular_neighbors_order() {
        let n = neighbors(GridKind::Triangular, Coord::new(0, 0)).unwrap();
        assert_eq!(
            n,
            vec![
                Coord::new(1, 0),
                Coord::new(0, 1),
                Coord::new(-1, 1),
                Coord::new(-1, 0),
                Coord::new(0, -1),
                Coord::new(1, -1),
            ]
        );
    }

    #[test]
    fn hexagonal_neighbors_by_brute_force() {
        // Oracle: scan all lattice points within radius 1.5 in the plane and
        // keep the valid hexagonal vertices at distance exactly 1.
        for &(a, b) in &[(1i64, 0i64), (2, 0), (0, 1), (-1, 3), (4, -1), (2, 3)] {
            let c = Coord::new(a, b);
            if !c.hex_valid() {
                continue;
            }
            let got = neighbors(GridKind::Hexagonal, c).unwrap();
            let mut expect = Vec::new();
            for da in -2..=2i64 {
                for db in -2..=2i64 {
                    let n = c.offset(da, db);
                    if n == c || !n.hex_valid() {
                        continue;
                    }
                    let d = dist(GridKind::Hexagonal, c, n);
                    if d < 1.5 && (d - 1.0).abs() < 1e-9 {
                        expect.push(n);
                    }
                }
            }
            assert_eq!(got.len(), 3, "hex vertex {c} must have 3 neighbors");
            for n in &got {
                assert!(expect.contains(n));
            }
            assert_eq!(got.len(), expect.len());
        }
    }

    #[test]
    fn hexagonal_center_rejected() {
        assert!(neighbors(GridKind::Hexagonal, Coord::new(0, 0)).is_err());
        assert!(neighbors(GridKind::Hexagonal, Coord::new(3, 0)).is_err());
    }

    #[test]
    fn square_cell_corners() {
        let corners = pixel_corners(&Cell::square(0, 0)).unwrap();
        assert_eq!(
            corners,
            vec![Coord::new(0, 0), Coord::new(1, 0), Coord::new(1, 1), Coord::new(0, 1)]
        );
    }

    #[test]
    fn tri_up_cell_corners() {
        let corners = pixel_corners(&Cell::tri_up(0, 0)).unwrap();
        assert_eq!(corners, vec![Coord::new(0, 0), Coord::new(1, 0), Coord::new(0, 1)]);
    }

    #[test]
    fn hex_cell_corners_valid_and_unit_spaced() {
        let cell = Cell::hex(3, 0);
        let corners = pixel_corners(&cell).unwrap();
        assert_eq!(corners.len(), 6);
        for (i, &p) in corners.iter().enumerate() {
            assert!(p.hex_valid(), "corner {p} on center sublattice");
            let q = corners[(i + 1) % 6];
            assert!((dist(GridKind::Hexagonal, p, q) - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn corner_cycles_closed_under_neighbors() {
        let cells = [
            Cell::square(2, -1),
            Cell::tri_up(0, 0),
            Cell::tri_down(0, 0),
            Cell::hex(1, 1),
        ];
        for cell in &cells {
            let corners = pixel_corners(cell).unwrap();
            for (i, &p) in corners.iter().enumerate() {
                let q = corners[(i + 1) % corners.len()];
                let nb = neighbors(cell.kind, p).unwrap();
                assert!(nb.contains(&q), "{p} and {q} not adjacent in {cell}");
            }
        }
    }

    #[test]
    fn neighbor_symmetry_and_unit_distance() {
        for kind in [GridKind::Square, GridKind::Triangular, GridKind::Hexagonal] {
            for a in -3..=3i64 {
                for b in -3..=3i64 {
                    let c = Coord::new(a, b);
                    if kind == GridKind::Hexagonal && !c.hex_valid() {
                        continue;
                    }
                    for n in neighbors(kind, c).unwrap() {
                        assert!((dist(kind, c, n) - 1.0).abs() < 1e-9);
                        assert!(neighbors(kind, n).unwrap().contains(&c));
                    }
                }
            }
        }
    }

    #[test]
    fn cells_at_vertex_consistent() {
        for kind in [GridKind::Square, GridKind::Triangular, GridKind::Hexagonal] {
            let v = match kind {
                GridKind::Hexagonal => Coord::new(1, 0),
                _ => Coord::new(0, 0),
            };
            for cell in cells_at_vertex(kind, v) {
                assert!(pixel_corners(&cell).unwrap().contains(&v));
            }
        }
    }
}
