//! Induced grid graphs, planar face decomposition, subclass predicates, and
//! pixel-level structure.
//!
//! Faces are traced from the shared rotation system (counterclockwise
//! neighbor order from `lattice::neighbors`): the successor of a directed
//! edge `u -> v` is `v -> w` where `w` precedes `u` in the rotation at `v`.
//! With that convention bounded faces come out counterclockwise (positive
//! signed area) and the outer face clockwise (negative).

use crate::error::{Error, Result};
use crate::lattice::{
    self, cells_at_vertex, embed, pixel_corners, Cell, Coord, GridKind,
};
use std::collections::{BTreeMap, BTreeSet};

/// Undirected edge with canonically ordered endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(pub Coord, pub Coord);

impl Edge {
    pub fn new(u: Coord, v: Coord) -> Edge {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn other(&self, c: Coord) -> Coord {
        if self.0 == c {
            self.1
        } else {
            self.0
        }
    }

    pub fn touches(&self, c: Coord) -> bool {
        self.0 == c || self.1 == c
    }
}

/// A finite induced grid graph on one of the three lattices.
///
/// Vertices are stored in canonical order (lexicographic by `(b, a)`), and
/// adjacency lists keep the counterclockwise rotation order.
#[derive(Debug, Clone)]
pub struct GridGraph {
    kind: GridKind,
    verts: Vec<Coord>,
    index: BTreeMap<Coord, usize>,
    /// Adjacency lists as vertex indices, in rotation (CCW) order.
    adj: Vec<Vec<usize>>,
}

impl GridGraph {
    /// Build the induced grid graph on `coords`.
    pub fn build(kind: GridKind, coords: &BTreeSet<Coord>) -> Result<GridGraph> {
        if coords.is_empty() {
            return Err(Error::CoordDomain("empty vertex set".into()));
        }
        let verts: Vec<Coord> = coords.iter().copied().collect();
        let mut index = BTreeMap::new();
        for (i, &v) in verts.iter().enumerate() {
            index.insert(v, i);
        }
        let mut adj = Vec::with_capacity(verts.len());
        for &v in &verts {
            let nbrs = lattice::neighbors(kind, v)?;
            let mut list = Vec::new();
            for n in nbrs {
                if let Some(&j) = index.get(&n) {
                    list.push(j);
                }
            }
            adj.push(list);
        }
        Ok(GridGraph { kind, verts, index, adj })
    }

    pub fn kind(&self) -> GridKind {
        self.kind
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    pub fn vertices(&self) -> &[Coord] {
        &self.verts
    }

    pub fn contains(&self, v: Coord) -> bool {
        self.index.contains_key(&v)
    }

    pub fn vertex_index(&self, v: Coord) -> Option<usize> {
        self.index.get(&v).copied()
    }

    pub fn coord(&self, i: usize) -> Coord {
        self.verts[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    /// Neighbor indices of vertex `i` in rotation order.
    pub fn neighbors_idx(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn has_edge(&self, u: Coord, v: Coord) -> bool {
        match (self.index.get(&u), self.index.get(&v)) {
            (Some(&i), Some(&j)) => self.adj[i].contains(&j),
            _ => false,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    /// All undirected edges in canonical order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = BTreeSet::new();
        for (i, list) in self.adj.iter().enumerate() {
            for &j in list {
                out.insert(Edge::new(self.verts[i], self.verts[j]));
            }
        }
        out.into_iter().collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.verts.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.verts.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(i) = stack.pop() {
            for &j in &self.adj[i] {
                if !seen[j] {
                    seen[j] = true;
                    count += 1;
                    stack.push(j);
                }
            }
        }
        count == self.verts.len()
    }

    /// A vertex unreachable from vertex 0, if the graph is disconnected.
    pub fn disconnected_witness(&self) -> Option<Coord> {
        let mut seen = vec![false; self.verts.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for &j in &self.adj[i] {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.iter().position(|s| !s).map(|i| self.verts[i])
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|l| l.len()).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|l| l.len()).max().unwrap_or(0)
    }
}

/// One face walk: the cyclic list of directed edges (as vertex index pairs).
#[derive(Debug, Clone)]
pub struct FaceWalk {
    pub walk: Vec<(usize, usize)>,
    pub signed_area: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceClass {
    Outer,
    Hole,
    Pixel,
}

/// The planar face structure of a connected grid graph.
#[derive(Debug, Clone)]
pub struct FaceDecomposition {
    pub faces: Vec<FaceWalk>,
    pub class: Vec<FaceClass>,
    /// Face id of the outer face.
    pub outer: usize,
    /// Face ids of the holes.
    pub holes: Vec<usize>,
    /// Pixels, keyed by cell, with their face id.
    pub pixels: BTreeMap<Cell, usize>,
    /// For each vertex index, the face ids incident to it, once per
    /// occurrence of the vertex in the face walk.
    pub vertex_faces: Vec<Vec<usize>>,
    /// For each directed edge, the face it belongs to.
    pub edge_face: BTreeMap<(usize, usize), usize>,
}

impl FaceDecomposition {
    pub fn pixel_cells(&self) -> BTreeSet<Cell> {
        self.pixels.keys().copied().collect()
    }

    /// True if the undirected edge borders the given face on either side.
    pub fn edge_on_face(&self, u: usize, v: usize, face: usize) -> bool {
        self.edge_face.get(&(u, v)) == Some(&face) || self.edge_face.get(&(v, u)) == Some(&face)
    }
}

/// Identify the cell whose corner cycle equals this face walk, if any.
fn walk_as_pixel(g: &GridGraph, walk: &[(usize, usize)]) -> Option<Cell> {
    if walk.len() != g.kind().pixel_len() {
        return None;
    }
    let vs: Vec<Coord> = walk.iter().map(|&(u, _)| g.coord(u)).collect();
    let distinct: BTreeSet<Coord> = vs.iter().copied().collect();
    if distinct.len() != vs.len() {
        return None;
    }
    // Every candidate cell at the first vertex is checked for corner-set
    // equality; unit edges make the cycle itself unambiguous.
    for cell in cells_at_vertex(g.kind(), vs[0]) {
        if let Ok(corners) = pixel_corners(&cell) {
            let cset: BTreeSet<Coord> = corners.iter().copied().collect();
            if cset == distinct {
                return Some(cell);
            }
        }
    }
    None
}

/// Compute the face decomposition of a connected grid graph.
pub fn faces(g: &GridGraph) -> Result<FaceDecomposition> {
    if !g.is_connected() {
        return Err(Error::Structure("face decomposition requires a connected graph".into()));
    }
    let n = g.vertex_count();
    // Position of each neighbor in the rotation at v, for O(1) successor lookup.
    let mut pos: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); n];
    for i in 0..n {
        for (k, &j) in g.neighbors_idx(i).iter().enumerate() {
            pos[i].insert(j, k);
        }
    }
    let mut face_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut faces_out: Vec<FaceWalk> = Vec::new();

    for i in 0..n {
        for &j in g.neighbors_idx(i) {
            if face_of.contains_key(&(i, j)) {
                continue;
            }
            // Trace the face containing directed edge i -> j.
            let fid = faces_out.len();
            let mut walk = Vec::new();
            let (mut u, mut v) = (i, j);
            loop {
                walk.push((u, v));
                face_of.insert((u, v), fid);
                // successor: rotate the reversed edge to the previous
                // neighbor in CCW order at v
                let rot = g.neighbors_idx(v);
                let k = pos[v][&u];
                let w = rot[(k + rot.len() - 1) % rot.len()];
                u = v;
                v = w;
                if (u, v) == (i, j) {
                    break;
                }
            }
            let mut area = 0.0;
            for &(a, b) in &walk {
                let (ax, ay) = embed(g.kind(), g.coord(a));
                let (bx, by) = embed(g.kind(), g.coord(b));
                area += ax * by - bx * ay;
            }
            faces_out.push(FaceWalk { walk, signed_area: area / 2.0 });
        }
    }

    // The outer face has the most negative signed area. A graph with no
    // bounded face has exactly one walk (area 0), which is the outer face.
    let outer = if faces_out.is_empty() {
        faces_out.push(FaceWalk { walk: Vec::new(), signed_area: 0.0 });
        0
    } else {
        faces_out
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.signed_area.partial_cmp(&b.1.signed_area).unwrap())
            .map(|(i, _)| i)
            .unwrap()
    };

    let mut class = vec![FaceClass::Hole; faces_out.len()];
    let mut pixels = BTreeMap::new();
    let mut holes = Vec::new();
    for (fid, fw) in faces_out.iter().enumerate() {
        if fid == outer {
            class[fid] = FaceClass::Outer;
            continue;
        }
        if let Some(cell) = walk_as_pixel(g, &fw.walk) {
            class[fid] = FaceClass::Pixel;
            pixels.insert(cell, fid);
        } else {
            class[fid] = FaceClass::Hole;
            holes.push(fid);
        }
    }

    let mut vertex_faces = vec![Vec::new(); n];
    for (fid, fw) in faces_out.iter().enumerate() {
        for &(u, _) in &fw.walk {
            vertex_faces[u].push(fid);
        }
    }

    Ok(FaceDecomposition {
        faces: faces_out,
        class,
        outer,
        holes,
        pixels,
        vertex_faces,
        edge_face: face_of,
    })
}

/// Why the polygonal predicate failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolygonalViolation {
    VertexNotOnPixel(Coord),
    EdgeNotOnPixel(Coord, Coord),
    BoundaryMerge(Coord),
}

/// Everything `classify` finds out about a graph.
#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub kind: GridKind,
    pub connected: bool,
    pub min_degree_ok: bool,
    pub thin: bool,
    pub polygonal: bool,
    pub solid: bool,
    pub max_degree: usize,
    pub num_pixels: usize,
    pub num_holes: usize,
    pub disconnected_witness: Option<Coord>,
    pub min_degree_witness: Option<Coord>,
    /// An interior vertex, when the graph is not thin.
    pub thin_witness: Option<Coord>,
    pub polygonal_witness: Option<PolygonalViolation>,
    /// Single pixel and nothing else: trivially Hamiltonian.
    pub single_pixel: bool,
}

impl ClassificationReport {
    pub fn thin_polygonal(&self) -> bool {
        self.thin && self.polygonal
    }

    /// True when a Hamiltonicity solver can accept the graph at all.
    pub fn hamiltonicity_ready(&self) -> bool {
        self.connected && self.min_degree_ok
    }
}

/// Decide the subclass predicates of a grid graph.
pub fn classify(g: &GridGraph) -> ClassificationReport {
    let connected = g.is_connected();
    let disconnected_witness = if connected { None } else { g.disconnected_witness() };
    let min_degree_witness =
        (0..g.vertex_count()).find(|&i| g.degree(i) < 2).map(|i| g.coord(i));
    let min_degree_ok = min_degree_witness.is_none();
    let max_degree = g.max_degree();

    if !connected {
        // Face structure is undefined; the graph is trivially non-Hamiltonian.
        return ClassificationReport {
            kind: g.kind(),
            connected,
            min_degree_ok,
            thin: false,
            polygonal: false,
            solid: false,
            max_degree,
            num_pixels: 0,
            num_holes: 0,
            disconnected_witness,
            min_degree_witness,
            thin_witness: None,
            polygonal_witness: None,
            single_pixel: false,
        };
    }

    let fd = faces(g).expect("connected graph must decompose");
    let n = g.vertex_count();

    // thin: every vertex lies on the outer face or a hole.
    let mut thin_witness = None;
    for i in 0..n {
        let on_boundary = fd.vertex_faces[i]
            .iter()
            .any(|&f| fd.class[f] != FaceClass::Pixel);
        if !on_boundary {
            thin_witness = Some(g.coord(i));
            break;
        }
    }

    // polygonal (a): every vertex and edge belongs to a pixel.
    let mut polygonal_witness = None;
    for i in 0..n {
        if !fd.vertex_faces[i].iter().any(|&f| fd.class[f] == FaceClass::Pixel) {
            polygonal_witness = Some(PolygonalViolation::VertexNotOnPixel(g.coord(i)));
            break;
        }
    }
    if polygonal_witness.is_none() {
        'edges: for i in 0..n {
            for &j in g.neighbors_idx(i) {
                if i < j {
                    let f1 = fd.edge_face[&(i, j)];
                    let f2 = fd.edge_face[&(j, i)];
                    if fd.class[f1] != FaceClass::Pixel && fd.class[f2] != FaceClass::Pixel {
                        polygonal_witness =
                            Some(PolygonalViolation::EdgeNotOnPixel(g.coord(i), g.coord(j)));
                        break 'edges;
                    }
                }
            }
        }
    }
    // polygonal (b): no vertex incident to two distinct non-pixel faces, nor
    // to the same non-pixel face more than once in its walk. Such a vertex is
    // exactly a removal candidate that would merge or join boundary walks.
    if polygonal_witness.is_none() {
        for i in 0..n {
            let non_pixel: Vec<usize> = fd.vertex_faces[i]
                .iter()
                .copied()
                .filter(|&f| fd.class[f] != FaceClass::Pixel)
                .collect();
            let distinct: BTreeSet<usize> = non_pixel.iter().copied().collect();
            if distinct.len() > 1 || non_pixel.len() > distinct.len() {
                polygonal_witness = Some(PolygonalViolation::BoundaryMerge(g.coord(i)));
                break;
            }
        }
    }

    let single_pixel = fd.pixels.len() == 1 && fd.holes.is_empty() && {
        let cell = fd.pixels.keys().next().unwrap();
        pixel_corners(cell).map(|c| c.len() == n).unwrap_or(false)
    };

    ClassificationReport {
        kind: g.kind(),
        connected,
        min_degree_ok,
        thin: thin_witness.is_none(),
        polygonal: polygonal_witness.is_none(),
        solid: fd.holes.is_empty(),
        max_degree,
        num_pixels: fd.pixels.len(),
        num_holes: fd.holes.len(),
        disconnected_witness,
        min_degree_witness,
        thin_witness,
        polygonal_witness,
        single_pixel,
    }
}

/// Complexity row of the classification table this graph falls in, with the
/// published label for its grid kind. Rows are checked from most specific to
/// most general.
pub fn complexity_label(report: &ClassificationReport) -> (&'static str, &'static str) {
    use GridKind::*;
    if report.thin && report.polygonal {
        return ("Thin Polygonal", "Polynomial");
    }
    if report.solid {
        return (
            "Solid",
            match report.kind {
                Triangular | Square => "Polynomial",
                Hexagonal => "Open",
            },
        );
    }
    if report.polygonal {
        return (
            "Polygonal",
            match report.kind {
                Triangular => "Polynomial",
                Square | Hexagonal => "NP-complete",
            },
        );
    }
    if report.thin {
        return ("Thin", "NP-complete");
    }
    ("General", "NP-complete")
}

/// The graph whose nodes are pixels and whose edges join pixels sharing a
/// full graph edge.
#[derive(Debug, Clone)]
pub struct PixelGraph {
    pub nodes: Vec<Cell>,
    index: BTreeMap<Cell, usize>,
    pub adj: Vec<Vec<usize>>,
}

impl PixelGraph {
    pub fn node_index(&self, c: &Cell) -> Option<usize> {
        self.index.get(c).copied()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    /// Restrict to a subset of nodes, keeping the full-graph cells.
    pub fn induced(&self, keep: &BTreeSet<Cell>) -> PixelGraph {
        let nodes: Vec<Cell> = self.nodes.iter().copied().filter(|c| keep.contains(c)).collect();
        let mut index = BTreeMap::new();
        for (i, &c) in nodes.iter().enumerate() {
            index.insert(c, i);
        }
        let mut adj = vec![Vec::new(); nodes.len()];
        for (i, &c) in nodes.iter().enumerate() {
            for &jo in &self.adj[self.index[&c]] {
                let oc = self.nodes[jo];
                if let Some(&j) = index.get(&oc) {
                    adj[i].push(j);
                }
            }
        }
        PixelGraph { nodes, index, adj }
    }
}

/// Build the pixel graph from a face decomposition.
pub fn pixel_graph(g: &GridGraph, fd: &FaceDecomposition) -> PixelGraph {
    let nodes: Vec<Cell> = fd.pixels.keys().copied().collect();
    let mut index = BTreeMap::new();
    for (i, &c) in nodes.iter().enumerate() {
        index.insert(c, i);
    }
    // Map each undirected pixel-boundary edge to the pixels using it.
    let mut edge_pixels: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
    for (i, cell) in nodes.iter().enumerate() {
        let corners = pixel_corners(cell).expect("pixel cell is valid");
        for k in 0..corners.len() {
            let e = Edge::new(corners[k], corners[(k + 1) % corners.len()]);
            edge_pixels.entry(e).or_default().push(i);
        }
    }
    let mut adj = vec![BTreeSet::new(); nodes.len()];
    for (_, ps) in edge_pixels {
        if ps.len() == 2 {
            adj[ps[0]].insert(ps[1]);
            adj[ps[1]].insert(ps[0]);
        }
    }
    let _ = g;
    PixelGraph {
        nodes,
        index,
        adj: adj.into_iter().map(|s| s.into_iter().collect()).collect(),
    }
}

/// Boundary of a region of pixels: the set of edges bordering exactly one
/// cell of the region. Requires the region to be connected under pixel
/// adjacency and simply connected (Euler characteristic 1) so the result is a
/// single closed cycle.
pub fn region_boundary(
    g: &GridGraph,
    pixels: &PixelGraph,
    region: &BTreeSet<Cell>,
) -> Result<BTreeSet<Edge>> {
    if region.is_empty() {
        return Err(Error::RegionShape("empty region".into()));
    }
    for c in region {
        if pixels.node_index(c).is_none() {
            return Err(Error::RegionShape(format!("{c} is not a pixel of the graph")));
        }
    }
    // Connectivity in the pixel graph restricted to the region.
    let sub = pixels.induced(region);
    {
        let mut seen = vec![false; sub.node_count()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(i) = stack.pop() {
            for &j in &sub.adj[i] {
                if !seen[j] {
                    seen[j] = true;
                    count += 1;
                    stack.push(j);
                }
            }
        }
        if count != sub.node_count() {
            return Err(Error::RegionShape("region is not connected".into()));
        }
    }
    // Euler characteristic of the closed cell union: V - E + F must be 1 for
    // a simply connected region.
    let mut vset: BTreeSet<Coord> = BTreeSet::new();
    let mut eset: BTreeSet<Edge> = BTreeSet::new();
    let mut edge_count_per: BTreeMap<Edge, usize> = BTreeMap::new();
    for cell in region {
        let corners = pixel_corners(cell)?;
        for k in 0..corners.len() {
            vset.insert(corners[k]);
            let e = Edge::new(corners[k], corners[(k + 1) % corners.len()]);
            eset.insert(e);
            *edge_count_per.entry(e).or_insert(0) += 1;
        }
    }
    let chi = vset.len() as i64 - eset.len() as i64 + region.len() as i64;
    if chi != 1 {
        return Err(Error::RegionShape(format!(
            "region has a cavity (Euler characteristic {chi})"
        )));
    }

    let boundary: BTreeSet<Edge> = edge_count_per
        .into_iter()
        .filter(|&(_, n)| n == 1)
        .map(|(e, _)| e)
        .collect();

    // Under the preconditions this is a single closed cycle; check it.
    let mut deg: BTreeMap<Coord, usize> = BTreeMap::new();
    for e in &boundary {
        if !g.has_edge(e.0, e.1) {
            return Err(Error::InvariantViolation(format!(
                "boundary edge {}-{} is not a graph edge",
                e.0, e.1
            )));
        }
        *deg.entry(e.0).or_insert(0) += 1;
        *deg.entry(e.1).or_insert(0) += 1;
    }
    if deg.values().any(|&d| d != 2) {
        return Err(Error::RegionShape("region boundary is not 2-regular".into()));
    }
    // Connectivity of the boundary edge set.
    let start = boundary.iter().next().unwrap().0;
    let mut seen: BTreeSet<Coord> = BTreeSet::new();
    let mut stack = vec![start];
    seen.insert(start);
    while let Some(v) = stack.pop() {
        for e in &boundary {
            if e.touches(v) {
                let o = e.other(v);
                if seen.insert(o) {
                    stack.push(o);
                }
            }
        }
    }
    if seen.len() != deg.len() {
        return Err(Error::RegionShape("region boundary is not a single cycle".into()));
    }
    Ok(boundary)
}

/// Convenience: vertices of a set of cells.
pub fn cells_vertices(cells: &BTreeSet<Cell>) -> Result<BTreeSet<Coord>> {
    let mut out = BTreeSet::new();
    for c in cells {
        for v in pixel_corners(c)? {
            out.insert(v);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn square_block(w: i64, h: i64) -> BTreeSet<Coord> {
        let mut s = BTreeSet::new();
        for a in 0..=w {
            for b in 0..=h {
                s.insert(Coord::new(a, b));
            }
        }
        s
    }

    /// 4x4 block of cells minus the central 2x2 cells: a 12-pixel ring.
    pub fn square_ring() -> BTreeSet<Coord> {
        let mut s = square_block(4, 4);
        s.remove(&Coord::new(2, 2));
        s
    }

    #[test]
    fn build_counts() {
        // one pixel
        let g = GridGraph::build(GridKind::Square, &square_block(1, 1)).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);

        // two horizontally adjacent cells: 6 vertices; brute-force count of
        // unit-distance pairs gives 7 edges
        let mut coords = BTreeSet::new();
        for a in 0..=2 {
            for b in 0..=1 {
                coords.insert(Coord::new(a, b));
            }
        }
        let vs: Vec<Coord> = coords.iter().copied().collect();
        let mut expect = 0;
        for i in 0..vs.len() {
            for j in (i + 1)..vs.len() {
                let (dx, dy) = (vs[i].a - vs[j].a, vs[i].b - vs[j].b);
                if dx * dx + dy * dy == 1 {
                    expect += 1;
                }
            }
        }
        let g = GridGraph::build(GridKind::Square, &coords).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), expect);
        assert_eq!(expect, 7);

        // one hexagonal cell
        let cell = Cell::hex(0, 0);
        let coords: BTreeSet<Coord> = pixel_corners(&cell).unwrap().into_iter().collect();
        let g = GridGraph::build(GridKind::Hexagonal, &coords).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn build_idempotent() {
        let g = GridGraph::build(GridKind::Square, &square_ring()).unwrap();
        let coords: BTreeSet<Coord> = g.vertices().iter().copied().collect();
        let g2 = GridGraph::build(GridKind::Square, &coords).unwrap();
        assert_eq!(g.vertices(), g2.vertices());
        assert_eq!(g.edges(), g2.edges());
    }

    #[test]
    fn faces_single_pixel() {
        let g = GridGraph::build(GridKind::Square, &square_block(1, 1)).unwrap();
        let fd = faces(&g).unwrap();
        assert_eq!(fd.faces.len(), 2);
        assert_eq!(fd.faces[fd.outer].walk.len(), 4);
        assert_eq!(fd.pixels.len(), 1);
        assert!(fd.pixels.contains_key(&Cell::square(0, 0)));
        assert!(fd.holes.is_empty());
    }

    #[test]
    fn faces_ring_has_hole() {
        let g = GridGraph::build(GridKind::Square, &square_ring()).unwrap();
        let fd = faces(&g).unwrap();
        assert_eq!(fd.pixels.len(), 12);
        assert_eq!(fd.holes.len(), 1);
        assert_eq!(fd.faces[fd.outer].walk.len(), 16);
        // hole walk surrounds the missing 2x2 block: 8 directed edges
        assert_eq!(fd.faces[fd.holes[0]].walk.len(), 8);
    }

    #[test]
    fn faces_partition_directed_edges() {
        for coords in [square_block(1, 1), square_block(2, 2), square_ring()] {
            let g = GridGraph::build(GridKind::Square, &coords).unwrap();
            let fd = faces(&g).unwrap();
            let total: usize = fd.faces.iter().map(|f| f.walk.len()).sum();
            assert_eq!(total, 2 * g.edge_count());
            // Euler: V - E + F = 2 (faces include the outer face)
            let f = fd.pixels.len() + fd.holes.len() + 1;
            assert_eq!(
                g.vertex_count() as i64 - g.edge_count() as i64 + f as i64,
                2
            );
        }
    }

    #[test]
    fn two_by_two_block_center_is_interior() {
        let g = GridGraph::build(GridKind::Square, &square_block(2, 2)).unwrap();
        let fd = faces(&g).unwrap();
        assert_eq!(fd.pixels.len(), 4);
        assert!(fd.holes.is_empty());
        let center = g.vertex_index(Coord::new(1, 1)).unwrap();
        assert_eq!(fd.vertex_faces[center].len(), 4);
        assert!(fd.vertex_faces[center]
            .iter()
            .all(|&f| fd.class[f] == FaceClass::Pixel));

        let rep = classify(&g);
        assert!(!rep.thin);
        assert_eq!(rep.thin_witness, Some(Coord::new(1, 1)));
        assert!(rep.polygonal);
        assert!(rep.solid);
    }

    #[test]
    fn classify_single_pixel() {
        let g = GridGraph::build(GridKind::Square, &square_block(1, 1)).unwrap();
        let rep = classify(&g);
        assert!(rep.connected && rep.thin && rep.polygonal && rep.solid);
        assert!(rep.single_pixel);
        assert_eq!(complexity_label(&rep), ("Thin Polygonal", "Polynomial"));
    }

    #[test]
    fn classify_ring() {
        let g = GridGraph::build(GridKind::Square, &square_ring()).unwrap();
        let rep = classify(&g);
        assert!(rep.thin, "all 24 vertices lie on the outer or hole walks");
        assert!(rep.polygonal);
        assert!(!rep.solid);
        assert_eq!(complexity_label(&rep), ("Thin Polygonal", "Polynomial"));
    }

    #[test]
    fn classify_corner_touching_squares_not_polygonal() {
        let mut coords = square_block(1, 1);
        for a in 1..=2 {
            for b in 1..=2 {
                coords.insert(Coord::new(a, b));
            }
        }
        let g = GridGraph::build(GridKind::Square, &coords).unwrap();
        let rep = classify(&g);
        assert!(!rep.polygonal);
        assert_eq!(
            rep.polygonal_witness,
            Some(PolygonalViolation::BoundaryMerge(Coord::new(1, 1)))
        );
    }

    #[test]
    fn pixel_graph_shapes() {
        // single pixel: 1 node, 0 edges
        let g = GridGraph::build(GridKind::Square, &square_block(1, 1)).unwrap();
        let pg = pixel_graph(&g, &faces(&g).unwrap());
        assert_eq!(pg.node_count(), 1);
        assert_eq!(pg.edge_count(), 0);

        // 1x3 strip: path of 3
        let g = GridGraph::build(GridKind::Square, &square_block(3, 1)).unwrap();
        let pg = pixel_graph(&g, &faces(&g).unwrap());
        assert_eq!(pg.node_count(), 3);
        assert_eq!(pg.edge_count(), 2);

        // ring: 12-cycle
        let g = GridGraph::build(GridKind::Square, &square_ring()).unwrap();
        let pg = pixel_graph(&g, &faces(&g).unwrap());
        assert_eq!(pg.node_count(), 12);
        assert_eq!(pg.edge_count(), 12);
        assert!(pg.adj.iter().all(|l| l.len() == 2));
    }

    #[test]
    fn region_boundary_basics() {
        let g = GridGraph::build(GridKind::Square, &square_block(2, 1)).unwrap();
        let fd = faces(&g).unwrap();
        let pg = pixel_graph(&g, &fd);

        // single pixel: its 4 edges
        let region: BTreeSet<Cell> = [Cell::square(0, 0)].into_iter().collect();
        let b = region_boundary(&g, &pg, &region).unwrap();
        assert_eq!(b.len(), 4);

        // 1x2 strip: 6 perimeter edges
        let region: BTreeSet<Cell> = [Cell::square(0, 0), Cell::square(1, 0)].into_iter().collect();
        let b = region_boundary(&g, &pg, &region).unwrap();
        assert_eq!(b.len(), 6);
    }

    #[test]
    fn region_boundary_ring_minus_pixel_covers_all_vertices() {
        let g = GridGraph::build(GridKind::Square, &square_ring()).unwrap();
        let fd = faces(&g).unwrap();
        let pg = pixel_graph(&g, &fd);
        let mut region = fd.pixel_cells();
        // remove a middle-of-side pixel to make a tree of 11 pixels
        assert!(region.remove(&Cell::square(2, 0)));
        let b = region_boundary(&g, &pg, &region).unwrap();
        let mut touched = BTreeSet::new();
        for e in &b {
            touched.insert(e.0);
            touched.insert(e.1);
        }
        assert_eq!(touched.len(), g.vertex_count());
    }

    #[test]
    fn region_boundary_rejects_cavity_and_disconnection() {
        let g = GridGraph::build(GridKind::Square, &square_ring()).unwrap();
        let fd = faces(&g).unwrap();
        let pg = pixel_graph(&g, &fd);
        // full ring has a cavity
        let region = fd.pixel_cells();
        assert!(matches!(
            region_boundary(&g, &pg, &region),
            Err(Error::RegionShape(_))
        ));
        // two opposite pixels are disconnected
        let region: BTreeSet<Cell> = [Cell::square(0, 0), Cell::square(3, 3)].into_iter().collect();
        assert!(matches!(
            region_boundary(&g, &pg, &region),
            Err(Error::RegionShape(_))
        ));
    }

    #[test]
    fn hex_single_cell_classify() {
        let coords: BTreeSet<Coord> =
            pixel_corners(&Cell::hex(0, 0)).unwrap().into_iter().collect();
        let g = GridGraph::build(GridKind::Hexagonal, &coords).unwrap();
        let rep = classify(&g);
        assert!(rep.thin && rep.polygonal && rep.solid && rep.single_pixel);
        let fd = faces(&g).unwrap();
        assert_eq!(fd.pixels.len(), 1);
    }

    #[test]
    fn triangular_rhombus_faces() {
        let mut coords = BTreeSet::new();
        for &(a, b) in &[(0i64, 0i64), (1, 0), (0, 1), (1, 1)] {
            coords.insert(Coord::new(a, b));
        }
        let g = GridGraph::build(GridKind::Triangular, &coords).unwrap();
        let fd = faces(&g).unwrap();
        assert_eq!(fd.pixels.len(), 2);
        assert!(fd.pixels.contains_key(&Cell::tri_up(0, 0)));
        assert!(fd.pixels.contains_key(&Cell::tri_down(0, 0)));
    }
}
