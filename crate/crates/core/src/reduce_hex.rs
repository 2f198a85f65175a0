//! Compile a 6-regular breakable planar TRVB instance into a hexagonal thin
//! grid graph.
//!
//! Every multigraph vertex becomes one degree-6 breakable vertex gadget; every
//! edge becomes a wire (path of hexagonal pixels) between the assigned ports.
//! The gadget geometry ships as a data resource and is validated behaviorally
//! at load time: with continuing wires it admits exactly two local candidate
//! solutions, one connecting the six wire interiors through the gadget and
//! one disconnecting them.

use crate::error::{Error, Result};
use crate::gadget::{check_cells, GadgetTemplate, Port, HEX_CELL_DIRS};
use crate::grid_graph::{classify, Edge, GridGraph};
use crate::ham::{enumerate_local_solutions, LocalSolutionSpec};
use crate::io_formats::parse_gadget;
use crate::lattice::{cells_at_edge, cells_at_vertex, pixel_corners, Cell, Coord, GridKind};
use crate::trvb::{EdgeId, Multigraph, VertexId};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::OnceLock;

/// Unit lattice steps by direction index (multiples of 60 degrees from +x).
pub const CORNER_DIRS: [(i64, i64); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

fn unit(dir: u8) -> (i64, i64) {
    CORNER_DIRS[(dir % 6) as usize]
}

const HEX_GADGET_TEXT: &str = include_str!("../resources/hex_gadget.txt");

static HEX_GADGET: OnceLock<GadgetTemplate> = OnceLock::new();

/// The shipped degree-6 breakable vertex gadget, validated on first use.
pub fn vertex_gadget_template() -> Result<&'static GadgetTemplate> {
    if let Some(t) = HEX_GADGET.get() {
        return Ok(t);
    }
    let t = parse_gadget(HEX_GADGET_TEXT)?;
    check_cells(&t)?;
    validate_vertex_gadget(&t)?;
    let _ = HEX_GADGET.set(t);
    Ok(HEX_GADGET.get().unwrap())
}

/// Which of the two gadget solutions a local edge set realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetSolutionKind {
    /// The regions inside the six wires connect through the gadget.
    Connecting,
    /// The six wire interiors are cut off from each other at the gadget.
    Disconnecting,
}

/// The validated pair of local solutions of the vertex gadget.
#[derive(Debug, Clone)]
pub struct GadgetSemantics {
    pub connecting: BTreeSet<Edge>,
    pub disconnecting: BTreeSet<Edge>,
}

/// Build the instantiated validation graph: template cells plus `extra` wire
/// cells beyond every port stub. Returns the graph, the window, the forced
/// crossing strand edges, and per-port strand-end vertices.
fn validation_setup(
    t: &GadgetTemplate,
    extra: usize,
) -> Result<(GridGraph, LocalSolutionSpec, Vec<BTreeSet<Coord>>)> {
    let (g, tails) = t.instantiate(extra)?;
    // window: everything except the exclusive corners of each port's final
    // tail cell
    let mut window: BTreeSet<Coord> = g.vertices().iter().copied().collect();
    let mut port_outer: Vec<BTreeSet<Coord>> = Vec::new();
    for tail in &tails {
        let last = *tail.last().expect("tail nonempty");
        let prev = if tail.len() >= 2 {
            tail[tail.len() - 2]
        } else {
            unreachable!("extra >= 2")
        };
        let last_cs: BTreeSet<Coord> = pixel_corners(&last)?.into_iter().collect();
        let prev_cs: BTreeSet<Coord> = pixel_corners(&prev)?.into_iter().collect();
        let exclusive: BTreeSet<Coord> = last_cs.difference(&prev_cs).copied().collect();
        for v in &exclusive {
            window.remove(v);
        }
        port_outer.push(exclusive);
    }
    let mut spec = LocalSolutionSpec::new(window);
    // wires continue past the window: their strand edges are forced into any
    // candidate solution by the flank vertices outside
    spec.forced_in = spec.port_edges(&g);
    Ok((g, spec, port_outer))
}

/// Trace the strand pairing of a local solution: which ports are joined by
/// paths through the gadget. Port ids index `port_outer`.
fn strand_pairing(
    _g: &GridGraph,
    sol: &BTreeSet<Edge>,
    window: &BTreeSet<Coord>,
    port_outer: &[BTreeSet<Coord>],
) -> Result<Vec<(usize, usize)>> {
    let port_of = |v: Coord| -> Option<usize> {
        port_outer.iter().position(|s| s.contains(&v))
    };
    let mut adj: BTreeMap<Coord, Vec<Coord>> = BTreeMap::new();
    for e in sol {
        adj.entry(e.0).or_default().push(e.1);
        adj.entry(e.1).or_default().push(e.0);
    }
    let mut pairs = Vec::new();
    let mut used: BTreeSet<Coord> = BTreeSet::new();
    for (start_port, outer) in port_outer.iter().enumerate() {
        for &v in outer {
            let ends: Vec<Coord> = adj.get(&v).cloned().unwrap_or_default();
            for w in ends {
                if !window.contains(&w) || used.contains(&v) {
                    continue;
                }
                // walk from v into the window until we exit again
                used.insert(v);
                let mut prev = v;
                let mut cur = w;
                loop {
                    if !window.contains(&cur) {
                        used.insert(cur);
                        let end_port = port_of(cur).ok_or_else(|| {
                            Error::TemplateInvalid(format!("strand exits at non-port vertex {cur}"))
                        })?;
                        pairs.push((start_port, end_port));
                        break;
                    }
                    let nexts: Vec<Coord> = adj[&cur]
                        .iter()
                        .copied()
                        .filter(|&x| x != prev)
                        .collect();
                    if nexts.len() != 1 {
                        return Err(Error::TemplateInvalid(format!(
                            "strand branches at {cur} ({} continuations)",
                            nexts.len()
                        )));
                    }
                    prev = cur;
                    cur = nexts[0];
                }
            }
        }
    }
    Ok(pairs)
}

fn classify_pairing(pairs: &[(usize, usize)], ports: usize) -> Option<GadgetSolutionKind> {
    if pairs.len() != ports {
        return None;
    }
    if pairs.iter().all(|&(a, b)| a == b) {
        return Some(GadgetSolutionKind::Disconnecting);
    }
    // connecting: the pairs form one cycle covering all ports
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(a, b) in pairs {
        if a == b {
            return None;
        }
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    if adj.len() != ports || adj.values().any(|l| l.len() != 2) {
        return None;
    }
    let mut seen = BTreeSet::new();
    let mut cur = 0usize;
    let mut prev = usize::MAX;
    loop {
        seen.insert(cur);
        let next = *adj[&cur].iter().find(|&&x| x != prev).unwrap_or(&adj[&cur][0]);
        prev = cur;
        cur = next;
        if cur == 0 {
            break;
        }
    }
    if seen.len() == ports {
        Some(GadgetSolutionKind::Connecting)
    } else {
        None
    }
}

/// Structural sanity of an assembled hexagonal structure: every graph edge is
/// either a pixel-ring edge or one of the expected bare connector edges, and
/// the graph is thin and connected with minimum degree 2.
pub fn check_hex_structure(
    cells: &BTreeSet<Cell>,
    expected_bare: &BTreeSet<Edge>,
) -> Result<GridGraph> {
    let mut coords = BTreeSet::new();
    for c in cells {
        for v in pixel_corners(c)? {
            coords.insert(v);
        }
    }
    let g = GridGraph::build(GridKind::Hexagonal, &coords)?;
    // vertex on three pixels = interior vertex
    for &v in g.vertices() {
        let on = cells_at_vertex(GridKind::Hexagonal, v)
            .into_iter()
            .filter(|c| cells.contains(c))
            .count();
        if on > 2 {
            return Err(Error::ThinnessViolation(format!("{v} lies on {on} pixels")));
        }
        if on == 0 {
            return Err(Error::InvariantViolation(format!("{v} lies on no pixel")));
        }
    }
    let mut bare = BTreeSet::new();
    for e in g.edges() {
        let flanked = cells_at_edge(GridKind::Hexagonal, e.0, e.1)
            .into_iter()
            .any(|c| cells.contains(&c));
        if !flanked {
            bare.insert(e);
        }
    }
    if &bare != expected_bare {
        let extra: Vec<String> = bare
            .difference(expected_bare)
            .map(|e| format!("{}-{}", e.0, e.1))
            .collect();
        let missing: Vec<String> = expected_bare
            .difference(&bare)
            .map(|e| format!("{}-{}", e.0, e.1))
            .collect();
        return Err(Error::TemplateInvalid(format!(
            "bare-edge mismatch: unexpected [{}], missing [{}]",
            extra.join(", "),
            missing.join(", ")
        )));
    }
    let report = classify(&g);
    if !report.connected {
        return Err(Error::TemplateInvalid("assembly is disconnected".into()));
    }
    if !report.min_degree_ok {
        return Err(Error::TemplateInvalid("assembly has a degree-1 vertex".into()));
    }
    if !report.thin {
        return Err(Error::TemplateInvalid(format!(
            "assembly is not thin (witness {:?})",
            report.thin_witness
        )));
    }
    Ok(g)
}

/// Behavioral validation of the degree-6 gadget: exactly two local candidate
/// solutions with continuing wires, one connecting and one disconnecting the
/// six wire interiors.
pub fn validate_vertex_gadget(t: &GadgetTemplate) -> Result<GadgetSemantics> {
    if t.kind != GridKind::Hexagonal {
        return Err(Error::TemplateInvalid("vertex gadget must be hexagonal".into()));
    }
    if t.ports.len() != 6 {
        return Err(Error::TemplateInvalid(format!(
            "vertex gadget needs 6 ports, has {}",
            t.ports.len()
        )));
    }
    let (g, spec, port_outer) = validation_setup(t, 2)?;
    let sols = enumerate_local_solutions(&g, &spec)?;
    if sols.len() != 2 {
        return Err(Error::TemplateInvalid(format!(
            "gadget admits {} local solutions, expected exactly 2",
            sols.len()
        )));
    }
    let mut connecting = None;
    let mut disconnecting = None;
    for sol in &sols {
        let pairs = strand_pairing(&g, sol, &spec.window, &port_outer)?;
        match classify_pairing(&pairs, 6) {
            Some(GadgetSolutionKind::Connecting) => connecting = Some(sol.clone()),
            Some(GadgetSolutionKind::Disconnecting) => disconnecting = Some(sol.clone()),
            None => {
                return Err(Error::TemplateInvalid(format!(
                    "solution pairing {pairs:?} is neither connecting nor disconnecting"
                )))
            }
        }
    }
    match (connecting, disconnecting) {
        (Some(c), Some(d)) => Ok(GadgetSemantics { connecting: c, disconnecting: d }),
        _ => Err(Error::TemplateInvalid(
            "gadget solutions do not realize one connecting and one disconnecting pattern".into(),
        )),
    }
}

/// Placement and routing of a multigraph as gadgets plus wires.
#[derive(Debug, Clone)]
pub struct HexLayout {
    /// Gadget transform per vertex: rotation (multiples of 60 degrees) and
    /// center-translation.
    pub placement: BTreeMap<VertexId, (u8, Coord)>,
    /// Wire route per edge: the full cell path from one port stub to the
    /// other (stubs excluded).
    pub routes: BTreeMap<EdgeId, Vec<Cell>>,
    /// Port assignment per edge end: (vertex, port index).
    pub port_of_end: BTreeMap<(EdgeId, u8), (VertexId, usize)>,
}

/// Region map of the compiled instance.
#[derive(Debug, Clone)]
pub struct HexCorrespondence {
    pub gadget_cells: BTreeMap<VertexId, BTreeSet<Cell>>,
    pub wire_cells: BTreeMap<EdgeId, BTreeSet<Cell>>,
}

fn xform_cell(c: Cell, rot: u8, t: Coord) -> Cell {
    crate::gadget::hex_xform_cell(c, rot, t)
}

fn gadget_cells_at(template: &GadgetTemplate, rot: u8, t: Coord) -> BTreeSet<Cell> {
    template.cells.iter().map(|&c| xform_cell(c, rot, t)).collect()
}

/// Cells blocked for routing near an occupied cell: the cell itself, its
/// neighbors, and the six distance-3 collinear offsets (which would create a
/// bare connector edge to it).
fn blocked_offsets() -> Vec<(i64, i64)> {
    let mut v = vec![(0, 0)];
    v.extend_from_slice(&HEX_CELL_DIRS);
    for d in 0..6u8 {
        let (da, db) = unit(d);
        v.push((3 * da, 3 * db));
    }
    v
}

struct Router {
    occupied: BTreeSet<Coord>,
    blocked: Vec<(i64, i64)>,
}

impl Router {
    fn new() -> Router {
        Router { occupied: BTreeSet::new(), blocked: blocked_offsets() }
    }

    fn occupy(&mut self, c: Cell) {
        self.occupied.insert(c.anchor);
    }

    fn conflicts(&self, cand: Coord, ignore: &[Coord]) -> bool {
        for &(da, db) in &self.blocked {
            let o = Coord::new(cand.a - da, cand.b - db);
            if self.occupied.contains(&o) && !ignore.contains(&o) {
                return true;
            }
        }
        false
    }

    /// Depth-first route from `start` (heading `start_dir`) to `goal`
    /// arriving against `goal_dir`. Returns the intermediate cells.
    fn route(
        &self,
        start: Coord,
        start_dir: u8,
        goal: Coord,
        goal_dir: u8,
        max_len: usize,
    ) -> Option<Vec<Coord>> {
        // the first route cell and the landing cell before the goal stub
        let step = |c: Coord, d: u8| {
            let (da, db) = HEX_CELL_DIRS[(d % 6) as usize];
            Coord::new(c.a + da, c.b + db)
        };
        let entry = step(goal, goal_dir);
        let first = step(start, start_dir);
        let mut path: Vec<Coord> = Vec::new();
        let mut visited: BTreeSet<Coord> = BTreeSet::new();

        fn dfs(
            r: &Router,
            step: &dyn Fn(Coord, u8) -> Coord,
            cur: Coord,
            dir: u8,
            entry: Coord,
            goal: Coord,
            path: &mut Vec<Coord>,
            visited: &mut BTreeSet<Coord>,
            max_len: usize,
        ) -> bool {
            if path.len() > max_len {
                return false;
            }
            // self-clearance: candidate may touch only its predecessor
            let prev = if path.len() >= 2 {
                path[path.len() - 2]
            } else {
                Coord::new(i64::MIN, i64::MIN)
            };
            for &p in path.iter().take(path.len().saturating_sub(2)) {
                let off = (cur.a - p.a, cur.b - p.b);
                if r.blocked.contains(&off) {
                    return false;
                }
            }
            let mut ignore = vec![prev];
            if cur == entry {
                ignore.push(goal);
            }
            // allow standing next to the start stub on the first cell
            if r.conflicts(cur, &ignore) && !(path.len() == 1) {
                return false;
            }
            if cur == entry {
                return true;
            }
            if visited.contains(&cur) {
                return false;
            }
            visited.insert(cur);
            for delta in [0i8, 1, -1] {
                let nd = ((dir as i8 + delta).rem_euclid(6)) as u8;
                let next = step(cur, nd);
                path.push(next);
                if dfs(r, step, next, nd, entry, goal, path, visited, max_len) {
                    return true;
                }
                path.pop();
            }
            false
        }

        path.push(first);
        if dfs(self, &step, first, start_dir, entry, goal, &mut path, &mut visited, max_len) {
            Some(path)
        } else {
            None
        }
    }
}

/// Lay out a 6-regular breakable planar multigraph: place one gadget per
/// vertex and route one wire per edge honoring the rotation system's port
/// order.
pub fn layout(m: &Multigraph, spacing: i64) -> Result<HexLayout> {
    for v in m.vertex_ids() {
        if m.degree(v) != 6 {
            return Err(Error::Parameter(format!("{v} has degree {}, need 6", m.degree(v))));
        }
        if !m.is_breakable(v) {
            return Err(Error::Parameter(format!("{v} must be breakable")));
        }
    }
    if m.rotation().is_none() {
        return Err(Error::Parameter("layout needs a rotation system".into()));
    }
    if !m.planar_by_euler()? {
        return Err(Error::Planarity("rotation system is not planar".into()));
    }
    let template = vertex_gadget_template()?;

    // place gadgets on a horizontal line, far apart
    let verts: Vec<VertexId> = m.vertex_ids().collect();
    let mut placement = BTreeMap::new();
    let gap = spacing.max(2) * 12;
    for (i, &v) in verts.iter().enumerate() {
        // translations stay on the center sublattice：multiples of (1,1)
        // point 30 degrees up-right, so stagger with (2,-1) steps too
        let k = i as i64 * gap;
        let t = Coord::new(2 * k, -k);
        debug_assert!(t.hex_center());
        placement.insert(v, (0u8, t));
    }

    let mut router = Router::new();
    let mut gadget_cells: BTreeMap<VertexId, BTreeSet<Cell>> = BTreeMap::new();
    for (&v, &(rot, t)) in &placement {
        let cells = gadget_cells_at(template, rot, t);
        for &c in &cells {
            router.occupy(c);
        }
        gadget_cells.insert(v, cells);
    }

    // port order around a gadget follows the rotation system
    let mut port_of_end: BTreeMap<(EdgeId, u8), (VertexId, usize)> = BTreeMap::new();
    for &v in &verts {
        for (slot, &end) in m.edge_ends(v).iter().enumerate() {
            port_of_end.insert(end, (v, slot));
        }
    }

    let port_world = |v: VertexId, slot: usize| -> (Coord, u8) {
        let (rot, t) = placement[&v];
        let p: &Port = &template.ports[slot];
        let stub = xform_cell(p.stub, rot, t);
        (stub.anchor, (p.dir + rot) % 6)
    };

    // route edges; longer edges (by port distance) first is unnecessary at
    // desk scale, keep id order for determinism
    let mut routes = BTreeMap::new();
    for e in m.edge_ids() {
        let (pu, slot_u) = port_of_end[&(e, 0)];
        let (pv, slot_v) = port_of_end[&(e, 1)];
        let (su, du) = port_world(pu, slot_u);
        let (sv, dv) = port_world(pv, slot_v);
        let max_len = (gap as usize) * 8 + 64;
        let path = router
            .route(su, du, sv, dv, max_len)
            .ok_or_else(|| Error::LayoutFailure(format!("could not route {e}")))?;
        let cells: Vec<Cell> = path.iter().map(|&c| Cell::hex(c.a, c.b)).collect();
        for &c in &cells {
            router.occupy(c);
        }
        routes.insert(e, cells);
    }

    Ok(HexLayout { placement, routes, port_of_end })
}

/// Compile a TRVB instance into a hexagonal thin grid graph.
pub fn compile(m: &Multigraph, spacing: i64) -> Result<(GridGraph, HexCorrespondence)> {
    let template = vertex_gadget_template()?;
    let lay = layout(m, spacing)?;
    let mut corr = HexCorrespondence { gadget_cells: BTreeMap::new(), wire_cells: BTreeMap::new() };
    let mut all_cells: BTreeSet<Cell> = BTreeSet::new();
    for (&v, &(rot, t)) in &lay.placement {
        let cells = gadget_cells_at(template, rot, t);
        all_cells.extend(cells.iter().copied());
        corr.gadget_cells.insert(v, cells);
    }
    for (&e, cells) in &lay.routes {
        all_cells.extend(cells.iter().copied());
        corr.wire_cells.insert(e, cells.iter().copied().collect());
    }

    // expected bare edges: the six connector edges inside each gadget
    let bare_local = template_bare_edges(template)?;
    let mut expected_bare: BTreeSet<Edge> = BTreeSet::new();
    for &(rot, t) in lay.placement.values() {
        for e in &bare_local {
            expected_bare.insert(Edge::new(
                crate::gadget::hex_xform_vertex(e.0, rot, t),
                crate::gadget::hex_xform_vertex(e.1, rot, t),
            ));
        }
    }
    let g = check_hex_structure(&all_cells, &expected_bare).map_err(|err| {
        Error::LayoutFailure(format!("compiled structure failed checks: {err}"))
    })?;
    let report = classify(&g);
    if !(report.connected && report.min_degree_ok && report.thin) {
        return Err(Error::InvariantViolation(
            "compiled instance is not a connected thin grid graph of minimum degree 2".into(),
        ));
    }
    Ok((g, corr))
}

/// The bare (non-pixel) connector edges of the template's own cells.
pub fn template_bare_edges(t: &GadgetTemplate) -> Result<BTreeSet<Edge>> {
    let mut coords = BTreeSet::new();
    for c in &t.cells {
        for v in pixel_corners(c)? {
            coords.insert(v);
        }
    }
    let g = GridGraph::build(t.kind, &coords)?;
    let mut bare = BTreeSet::new();
    for e in g.edges() {
        let flanked = cells_at_edge(t.kind, e.0, e.1).into_iter().any(|c| t.cells.contains(&c));
        if !flanked {
            bare.insert(e);
        }
    }
    Ok(bare)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_gadget_validates() {
        let t = vertex_gadget_template().expect("shipped gadget must validate");
        assert_eq!(t.ports.len(), 6);
        let semantics = validate_vertex_gadget(t).unwrap();
        assert_ne!(semantics.connecting, semantics.disconnecting);
    }

    #[test]
    fn gadget_has_six_bare_connectors() {
        let t = vertex_gadget_template().unwrap();
        let bare = template_bare_edges(t).unwrap();
        assert_eq!(bare.len(), 6, "six single edges between adjacent regions");
    }

    #[test]
    fn fixing_one_port_pattern_keeps_one_solution_per_class() {
        let t = vertex_gadget_template().unwrap();
        let semantics = validate_vertex_gadget(t).unwrap();
        let (g, mut spec, _) = validation_setup(t, 2).unwrap();
        // force the connecting pattern on the edges of one wire's window
        // region: keep only solutions consistent with it
        let sample: Vec<Edge> = semantics
            .connecting
            .difference(&semantics.disconnecting)
            .take(1)
            .copied()
            .collect();
        spec.forced_in.extend(sample);
        let sols = enumerate_local_solutions(&g, &spec).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0], semantics.connecting);
    }
}
