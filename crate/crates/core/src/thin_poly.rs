//! Polynomial-time Hamiltonicity for thin polygonal grid graphs.
//!
//! Square grids: the pixel-removal loop. While the residual pixel set has a
//! cycle, a removable pixel (exactly two neighbors in the full graph, on
//! opposite sides) is removed; the boundary of what remains is a Hamiltonian
//! cycle. The removable pixel is found constructively from the leftmost
//! column of the cycle.
//!
//! Hexagonal grids: reduce to Tree-Residue Vertex-Breaking on the pixel
//! graph (breakable = degree 3), solve it, and reconstruct the cycle as the
//! perimeter of the surviving pixel tree.
//!
//! Triangular thin polygonal graphs are routed to the exact oracle: the
//! published polynomial algorithm for triangular polygonal grids lives in
//! prior work and is out of scope here.

use crate::error::{Error, Result};
use crate::grid_graph::{
    classify, faces, pixel_graph, region_boundary, ClassificationReport, GridGraph, PixelGraph,
};
use crate::ham::{find_hamiltonian, verify_cycle, CycleCertificate, HamOutcome};
use crate::lattice::{Cell, GridKind};
use crate::trvb::{self, Multigraph, TrvbOutcome, VertexId};
use std::collections::{BTreeMap, BTreeSet};

/// A cycle of pixels in the residual pixel graph together with the selected
/// removable pixel.
#[derive(Debug, Clone)]
pub struct PixelCycleWitness {
    pub cycle: Vec<Cell>,
    pub removable: Cell,
}

/// Find any cycle in a pixel graph (DFS back edge), as a cyclic cell list.
fn find_pixel_cycle(pg: &PixelGraph) -> Option<Vec<Cell>> {
    let n = pg.node_count();
    let mut color = vec![0u8; n]; // 0 unvisited, 1 on stack, 2 done
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if color[root] != 0 {
            continue;
        }
        // iterative DFS, deterministic neighbor order
        let mut stack = vec![(root, 0usize)];
        color[root] = 1;
        while let Some(&mut (u, ref mut i)) = stack.last_mut() {
            if *i < pg.adj[u].len() {
                let v = pg.adj[u][*i];
                *i += 1;
                if v == parent[u] {
                    continue;
                }
                if color[v] == 1 {
                    // found a cycle: walk the stack back from u to v
                    let mut cyc = vec![pg.nodes[u]];
                    let mut x = u;
                    while x != v {
                        x = parent[x];
                        cyc.push(pg.nodes[x]);
                    }
                    cyc.reverse();
                    return Some(cyc);
                }
                if color[v] == 0 {
                    color[v] = 1;
                    parent[v] = u;
                    stack.push((v, 0));
                }
            } else {
                color[u] = 2;
                stack.pop();
            }
        }
    }
    None
}

/// Neighbors of a square cell within a pixel set, as (cell, axis) with axis
/// 0 = horizontal neighbor, 1 = vertical neighbor.
fn square_cell_neighbors(all: &BTreeSet<Cell>, c: &Cell) -> Vec<(Cell, u8)> {
    let mut out = Vec::new();
    let (a, b) = (c.anchor.a, c.anchor.b);
    for (da, db, axis) in [(1i64, 0i64, 0u8), (-1, 0, 0), (0, 1, 1), (0, -1, 1)] {
        let n = Cell::square(a + da, b + db);
        if all.contains(&n) {
            out.push((n, axis));
        }
    }
    out
}

/// Constructive selection from the proof: take the leftmost column of the
/// cycle, its bottom-most pixel `p(0,0)`, and return `p(0,i)` for the first
/// `i` in {1, 2} whose vertical neighbors are in the cycle and whose
/// horizontal neighbors are absent from the full graph.
pub fn find_removable_pixel(
    full_pixels: &BTreeSet<Cell>,
    residual: &PixelGraph,
) -> Result<PixelCycleWitness> {
    let cycle = find_pixel_cycle(residual).ok_or(Error::NoPixelCycle)?;
    let cycle_set: BTreeSet<Cell> = cycle.iter().copied().collect();
    let min_a = cycle.iter().map(|c| c.anchor.a).min().unwrap();
    let base_b = cycle
        .iter()
        .filter(|c| c.anchor.a == min_a)
        .map(|c| c.anchor.b)
        .min()
        .unwrap();
    for i in 1..=2i64 {
        let cand = Cell::square(min_a, base_b + i);
        let below = Cell::square(min_a, base_b + i - 1);
        let above = Cell::square(min_a, base_b + i + 1);
        let left = Cell::square(min_a - 1, base_b + i);
        let right = Cell::square(min_a + 1, base_b + i);
        if cycle_set.contains(&cand)
            && cycle_set.contains(&below)
            && cycle_set.contains(&above)
            && !full_pixels.contains(&left)
            && !full_pixels.contains(&right)
        {
            // the witness condition: exactly two neighbors in the full
            // graph, on opposite sides
            let nbrs = square_cell_neighbors(full_pixels, &cand);
            if nbrs.len() == 2 && nbrs[0].1 == nbrs[1].1 {
                return Ok(PixelCycleWitness { cycle, removable: cand });
            }
        }
    }
    Err(Error::InvariantViolation(
        "no removable pixel in the leftmost column; input is not thin polygonal".into(),
    ))
}

fn require(report: &ClassificationReport, kind: GridKind, what: &str) -> Result<()> {
    if report.kind != kind {
        return Err(Error::Classification(format!("{what} requires a {kind} grid graph")));
    }
    if !report.connected {
        return Err(Error::Classification(format!("{what} requires a connected graph")));
    }
    if !report.min_degree_ok {
        return Err(Error::Classification(format!("{what} requires minimum degree 2")));
    }
    if !report.thin || !report.polygonal {
        return Err(Error::Classification(format!(
            "{what} requires a thin polygonal graph"
        )));
    }
    Ok(())
}

/// Hamiltonian cycle in a thin polygonal square grid graph by pixel removal.
/// Always succeeds on inputs passing the precondition.
pub fn solve_square(g: &GridGraph) -> Result<CycleCertificate> {
    let report = classify(g);
    require(&report, GridKind::Square, "solve_square")?;
    let fd = faces(g)?;
    let pg = pixel_graph(g, &fd);
    let full: BTreeSet<Cell> = fd.pixel_cells();
    let mut removed: BTreeSet<Cell> = BTreeSet::new();
    let mut residual_cells = full.clone();
    loop {
        let residual = pg.induced(&residual_cells);
        match find_removable_pixel(&full, &residual) {
            Ok(w) => {
                // no two removed pixels are ever adjacent
                debug_assert!(square_cell_neighbors(&removed, &w.removable).is_empty());
                removed.insert(w.removable);
                residual_cells.remove(&w.removable);
            }
            Err(Error::NoPixelCycle) => break,
            Err(e) => return Err(e),
        }
    }
    let edges = region_boundary(g, &pg, &residual_cells)?;
    let cert = CycleCertificate { edges };
    verify_cycle(g, &cert).map_err(|f| {
        Error::InvariantViolation(format!("solve_square produced a bad cycle: {f}"))
    })?;
    Ok(cert)
}

/// The pixel-to-vertex correspondence of the hexagonal reduction.
#[derive(Debug, Clone)]
pub struct HexTrvbCorrespondence {
    pub pixel_of_vertex: BTreeMap<VertexId, Cell>,
    pub breakable_ids: BTreeSet<VertexId>,
}

/// Reduce a hexagonal thin polygonal grid graph (with more than one pixel)
/// to a max-degree-3 TRVB instance: the pixel graph with degree-3 pixels
/// breakable.
pub fn hex_to_trvb(g: &GridGraph) -> Result<(Multigraph, HexTrvbCorrespondence)> {
    let report = classify(g);
    require(&report, GridKind::Hexagonal, "hex_to_trvb")?;
    if report.single_pixel {
        return Err(Error::Classification(
            "single-pixel graph short-circuits to Hamiltonian; no TRVB instance".into(),
        ));
    }
    let fd = faces(g)?;
    let pg = pixel_graph(g, &fd);
    let mut m = Multigraph::new();
    let mut corr = HexTrvbCorrespondence {
        pixel_of_vertex: BTreeMap::new(),
        breakable_ids: BTreeSet::new(),
    };
    for (i, &cell) in pg.nodes.iter().enumerate() {
        let d = pg.degree(i);
        if d > 3 {
            return Err(Error::ThinnessViolation(format!(
                "pixel {cell} has {d} neighbors; a thin hexagonal graph allows at most 3"
            )));
        }
        let id = VertexId(i as u32);
        m.add_vertex(id, d == 3);
        corr.pixel_of_vertex.insert(id, cell);
        if d == 3 {
            corr.breakable_ids.insert(id);
        }
    }
    let mut eid = 0u32;
    for i in 0..pg.node_count() {
        for &j in &pg.adj[i] {
            if i < j {
                m.add_edge(crate::trvb::EdgeId(eid), VertexId(i as u32), VertexId(j as u32))?;
                eid += 1;
            }
        }
    }
    Ok((m, corr))
}

/// Hamiltonicity of a hexagonal thin polygonal grid graph through TRVB.
/// Returns the perimeter cycle of the surviving pixel tree, or `None` when
/// the TRVB instance has no solution.
pub fn solve_hex(g: &GridGraph, budget: u64) -> Result<Option<CycleCertificate>> {
    let report = classify(g);
    require(&report, GridKind::Hexagonal, "solve_hex")?;
    let fd = faces(g)?;
    let pg = pixel_graph(g, &fd);
    if report.single_pixel {
        let region: BTreeSet<Cell> = fd.pixel_cells();
        let edges = region_boundary(g, &pg, &region)?;
        let cert = CycleCertificate { edges };
        verify_cycle(g, &cert)
            .map_err(|f| Error::InvariantViolation(format!("bad hexagon cycle: {f}")))?;
        return Ok(Some(cert));
    }
    let (m, corr) = hex_to_trvb(g)?;
    match trvb::solve(&m, budget) {
        TrvbOutcome::No => Ok(None),
        TrvbOutcome::Exhausted => Err(Error::Exhausted),
        TrvbOutcome::Solution(set) => {
            // the broken set contains no two adjacent vertices
            debug_assert!({
                let mut ok = true;
                for e in m.edge_ids() {
                    let (a, b) = m.endpoints(e).unwrap();
                    if set.vertices.contains(&a) && set.vertices.contains(&b) {
                        ok = false;
                    }
                }
                ok
            });
            let tree: BTreeSet<Cell> = corr
                .pixel_of_vertex
                .iter()
                .filter(|(id, _)| !set.vertices.contains(id))
                .map(|(_, &c)| c)
                .collect();
            let edges = region_boundary(g, &pg, &tree)?;
            let cert = CycleCertificate { edges };
            verify_cycle(g, &cert).map_err(|f| {
                Error::InvariantViolation(format!("solve_hex produced a bad cycle: {f}"))
            })?;
            Ok(Some(cert))
        }
    }
}

/// Route a thin polygonal instance of any kind to the right solver.
pub fn solve_thin_polygonal(g: &GridGraph, budget: u64) -> Result<Option<CycleCertificate>> {
    match g.kind() {
        GridKind::Square => Ok(Some(solve_square(g)?)),
        GridKind::Hexagonal => solve_hex(g, budget),
        GridKind::Triangular => match find_hamiltonian(g, budget)? {
            HamOutcome::Cycle(c) => Ok(Some(c)),
            HamOutcome::NoCycle => Ok(None),
            HamOutcome::Exhausted => Err(Error::Exhausted),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid_graph::GridGraph;
    use crate::lattice::{pixel_corners, Coord};

    fn square_graph(cells: &[(i64, i64)]) -> GridGraph {
        let mut coords = BTreeSet::new();
        for &(a, b) in cells {
            for c in pixel_corners(&Cell::square(a, b)).unwrap() {
                coords.insert(c);
            }
        }
        GridGraph::build(GridKind::Square, &coords).unwrap()
    }

    fn ring_cells() -> Vec<(i64, i64)> {
        let mut v = Vec::new();
        for a in 0..4i64 {
            for b in 0..4i64 {
                if a == 0 || a == 3 || b == 0 || b == 3 {
                    v.push((a, b));
                }
            }
        }
        v
    }

    #[test]
    fn solve_square_single_pixel() {
        let g = square_graph(&[(0, 0)]);
        let cert = solve_square(&g).unwrap();
        assert_eq!(cert.edges.len(), 4);
    }

    #[test]
    fn solve_square_strip_has_empty_removal_set() {
        // 1x5 strip: the pixel graph is a path, so nothing is removed and the
        // perimeter covers all 12 vertices
        let cells: Vec<(i64, i64)> = (0..5).map(|a| (a, 0)).collect();
        let g = square_graph(&cells);
        let cert = solve_square(&g).unwrap();
        assert_eq!(cert.edges.len(), g.vertex_count());
        assert_eq!(g.vertex_count(), 12);
    }

    #[test]
    fn solve_square_ring() {
        let g = square_graph(&ring_cells());
        let cert = solve_square(&g).unwrap();
        assert_eq!(cert.edges.len(), 24);
        assert!(verify_cycle(&g, &cert).is_ok());
    }

    #[test]
    fn removable_pixel_in_leftmost_column() {
        let g = square_graph(&ring_cells());
        let fd = faces(&g).unwrap();
        let pg = pixel_graph(&g, &fd);
        let full = fd.pixel_cells();
        let w = find_removable_pixel(&full, &pg).unwrap();
        assert_eq!(w.removable.anchor.a, 0, "selected pixel is in the leftmost column");
        assert!(w.removable.anchor.b == 1 || w.removable.anchor.b == 2);
        let nbrs = square_cell_neighbors(&full, &w.removable);
        assert_eq!(nbrs.len(), 2);
        assert_eq!(nbrs[0].1, nbrs[1].1, "neighbors on opposite sides");
    }

    #[test]
    fn acyclic_residual_reports_no_cycle() {
        let cells: Vec<(i64, i64)> = (0..4).map(|a| (a, 0)).collect();
        let g = square_graph(&cells);
        let fd = faces(&g).unwrap();
        let pg = pixel_graph(&g, &fd);
        assert!(matches!(
            find_removable_pixel(&fd.pixel_cells(), &pg),
            Err(Error::NoPixelCycle)
        ));
    }

    fn hex_graph(centers: &[(i64, i64)]) -> GridGraph {
        let mut coords = BTreeSet::new();
        for &(a, b) in centers {
            for c in pixel_corners(&Cell::hex(a, b)).unwrap() {
                coords.insert(c);
            }
        }
        GridGraph::build(GridKind::Hexagonal, &coords).unwrap()
    }

    #[test]
    fn hex_path_is_tree_already() {
        // path of 3 hex pixels
        let g = hex_graph(&[(0, 0), (1, 1), (2, 2)]);
        let (m, corr) = hex_to_trvb(&g).unwrap();
        assert_eq!(m.vertex_count(), 3);
        assert_eq!(m.edge_count(), 2);
        assert!(corr.breakable_ids.is_empty(), "degrees are 1,2,1");
        let cert = solve_hex(&g, 100_000).unwrap().expect("path is Hamiltonian");
        assert!(verify_cycle(&g, &cert).is_ok());
    }

    #[test]
    fn hex_single_pixel_short_circuits() {
        let g = hex_graph(&[(0, 0)]);
        assert!(hex_to_trvb(&g).is_err());
        let cert = solve_hex(&g, 1_000).unwrap().unwrap();
        assert_eq!(cert.edges.len(), 6);
    }

    #[test]
    fn hex_star_breakable_center() {
        // center pixel with three alternating neighbors
        let g = hex_graph(&[(0, 0), (1, 1), (1, -2), (-2, 1)]);
        let rep = classify(&g);
        assert!(rep.thin && rep.polygonal, "star should be thin polygonal");
        let (m, corr) = hex_to_trvb(&g).unwrap();
        assert_eq!(m.vertex_count(), 4);
        assert_eq!(corr.breakable_ids.len(), 1, "only the center has degree 3");
    }
}
