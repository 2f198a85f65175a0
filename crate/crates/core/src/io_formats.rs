//! Line-oriented text formats for every instance and certificate type, plus
//! SVG rendering.
//!
//! All formats are plain text with one token family per line and `#`
//! comments, so golden files diff cleanly and desk-scale instances can be
//! written by hand. Serialization is canonical: equal values produce
//! byte-identical text, and `parse(serialize(x)) == x`.

use crate::error::{Error, Result};
use crate::gadget::{GadgetTemplate, Port};
use crate::grid_graph::{Edge, GridGraph};
use crate::ham::CycleCertificate;
use crate::lattice::{embed, Cell, Coord, GridKind, Orientation};
use crate::trvb::{EdgeEnd, EdgeId, Multigraph, VertexId};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

/// A monotone rectilinear embedding of a 3-CNF formula: ordered variables on
/// the x-axis, clause segments above (positive) or below (negative) with
/// three legs each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatEmbedding {
    pub num_vars: usize,
    pub clauses: Vec<SatClause>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatClause {
    /// Above the axis (all literals positive) or below (all negative).
    pub positive: bool,
    /// Nesting depth, starting at 1 next to the axis.
    pub level: u32,
    /// 1-based variable indices; repeats allowed.
    pub literals: [usize; 3],
}

impl SatClause {
    pub fn extent(&self) -> (usize, usize) {
        let lo = *self.literals.iter().min().unwrap();
        let hi = *self.literals.iter().max().unwrap();
        (lo, hi)
    }

    /// Evaluate under an assignment (index 1-based).
    pub fn satisfied(&self, assignment: &[bool]) -> bool {
        self.literals.iter().any(|&v| assignment[v - 1] == self.positive)
    }
}

impl SatEmbedding {
    pub fn satisfied(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.satisfied(assignment))
    }

    /// Brute-force satisfiability over all assignments.
    pub fn brute_force_satisfiable(&self) -> bool {
        for mask in 0..(1u64 << self.num_vars) {
            let assignment: Vec<bool> = (0..self.num_vars).map(|i| mask >> i & 1 == 1).collect();
            if self.satisfied(&assignment) {
                return true;
            }
        }
        false
    }

    /// Check the embedding's planarity: legs of distinct same-side clauses
    /// must not cross any clause segment closer to the axis.
    pub fn validate(&self) -> Result<()> {
        for c in &self.clauses {
            if c.level == 0 {
                return Err(Error::Parameter("clause level must be positive".into()));
            }
            for &v in &c.literals {
                if v == 0 || v > self.num_vars {
                    return Err(Error::Parameter(format!("literal {v} out of range")));
                }
            }
        }
        for (i, a) in self.clauses.iter().enumerate() {
            for b in self.clauses.iter().skip(i + 1) {
                if a.positive != b.positive {
                    continue;
                }
                let (alo, ahi) = a.extent();
                let (blo, bhi) = b.extent();
                if a.level == b.level {
                    if alo < bhi && blo < ahi {
                        return Err(Error::Planarity(format!(
                            "same-level clauses overlap: vars {alo}..{ahi} and {blo}..{bhi}"
                        )));
                    }
                } else {
                    let (inner, outer) = if a.level < b.level { (a, b) } else { (b, a) };
                    let (ilo, ihi) = inner.extent();
                    for &v in &outer.literals {
                        if v > ilo && v < ihi {
                            return Err(Error::Planarity(format!(
                                "leg at variable {v} crosses a level-{} clause segment",
                                inner.level
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Any of the five document types, tagged by its first line.
#[derive(Debug, Clone)]
pub enum Document {
    Grid(GridGraph),
    Trvb(Multigraph),
    Sat(SatEmbedding),
    Cycle(CycleCertificate),
    Gadget(GadgetTemplate),
}

fn lines_of(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_i64(line: usize, tok: &str) -> Result<i64> {
    tok.parse::<i64>().map_err(|_| Error::parse(line, format!("bad integer `{tok}`")))
}

// ---------------------------------------------------------------------------
// grid graphs
// ---------------------------------------------------------------------------

pub fn parse_grid(text: &str) -> Result<GridGraph> {
    let mut kind: Option<GridKind> = None;
    let mut coords: BTreeSet<Coord> = BTreeSet::new();
    for (ln, line) in lines_of(text) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "grid" => {
                if toks.len() != 2 {
                    return Err(Error::parse(ln, "expected `grid <kind>`"));
                }
                kind = Some(
                    GridKind::parse(toks[1])
                        .ok_or_else(|| Error::parse(ln, format!("unknown kind `{}`", toks[1])))?,
                );
            }
            "v" => {
                let k = kind.ok_or_else(|| Error::parse(ln, "`v` before `grid` header"))?;
                if toks.len() != 3 {
                    return Err(Error::parse(ln, "expected `v <a> <b>`"));
                }
                let c = Coord::new(parse_i64(ln, toks[1])?, parse_i64(ln, toks[2])?);
                if k == GridKind::Hexagonal && !c.hex_valid() {
                    return Err(Error::parse(
                        ln,
                        format!("{c} lies on the hexagon-center sublattice"),
                    ));
                }
                if !coords.insert(c) {
                    return Err(Error::parse(ln, format!("duplicate vertex {c}")));
                }
            }
            other => return Err(Error::parse(ln, format!("unknown directive `{other}`"))),
        }
    }
    let kind = kind.ok_or_else(|| Error::parse(0, "missing `grid <kind>` header"))?;
    GridGraph::build(kind, &coords)
}

pub fn serialize_grid(g: &GridGraph) -> String {
    let mut out = String::new();
    writeln!(out, "grid {}", g.kind()).unwrap();
    for v in g.vertices() {
        writeln!(out, "v {} {}", v.a, v.b).unwrap();
    }
    out
}

// ---------------------------------------------------------------------------
// TRVB multigraphs
// ---------------------------------------------------------------------------

pub fn parse_trvb(text: &str) -> Result<Multigraph> {
    let mut m = Multigraph::new();
    let mut rot: BTreeMap<VertexId, Vec<EdgeEnd>> = BTreeMap::new();
    let mut edges_seen: BTreeMap<EdgeId, (VertexId, VertexId)> = BTreeMap::new();
    for (ln, line) in lines_of(text) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "vx" => {
                if toks.len() != 3 {
                    return Err(Error::parse(ln, "expected `vx <id> <0|1>`"));
                }
                let id = VertexId(parse_i64(ln, toks[1])? as u32);
                let breakable = match toks[2] {
                    "0" => false,
                    "1" => true,
                    other => return Err(Error::parse(ln, format!("bad flag `{other}`"))),
                };
                m.add_vertex(id, breakable);
            }
            "e" => {
                if toks.len() != 4 {
                    return Err(Error::parse(ln, "expected `e <id> <u> <v>`"));
                }
                let id = EdgeId(parse_i64(ln, toks[1])? as u32);
                let u = VertexId(parse_i64(ln, toks[2])? as u32);
                let v = VertexId(parse_i64(ln, toks[3])? as u32);
                m.add_edge(id, u, v).map_err(|e| Error::parse(ln, e.to_string()))?;
                edges_seen.insert(id, (u, v));
            }
            "rot" => {
                if toks.len() < 2 {
                    return Err(Error::parse(ln, "expected `rot <v> <edge ids...>`"));
                }
                let v = VertexId(parse_i64(ln, toks[1])? as u32);
                // Edge ids listed in cyclic order; a self-loop appears twice
                // (once per end), any other edge exactly once.
                let mut ends: Vec<EdgeEnd> = Vec::new();
                let mut used: BTreeMap<EdgeId, u8> = BTreeMap::new();
                for tok in &toks[2..] {
                    let e = EdgeId(parse_i64(ln, tok)? as u32);
                    let (a, b) = edges_seen
                        .get(&e)
                        .copied()
                        .ok_or_else(|| Error::parse(ln, format!("rotation names unknown {e}")))?;
                    let count = used.entry(e).or_insert(0);
                    let end = if a == v && b == v {
                        // self-loop: first mention is end 0, second end 1
                        match *count {
                            0 => (e, 0),
                            1 => (e, 1),
                            _ => {
                                return Err(Error::parse(
                                    ln,
                                    format!("{e} listed more than twice at {v}"),
                                ))
                            }
                        }
                    } else if a == v {
                        if *count > 0 {
                            return Err(Error::parse(ln, format!("{e} listed twice at {v}")));
                        }
                        (e, 0)
                    } else if b == v {
                        if *count > 0 {
                            return Err(Error::parse(ln, format!("{e} listed twice at {v}")));
                        }
                        (e, 1)
                    } else {
                        return Err(Error::parse(ln, format!("{e} is not incident to {v}")));
                    };
                    *count += 1;
                    ends.push(end);
                }
                rot.insert(v, ends);
            }
            other => return Err(Error::parse(ln, format!("unknown directive `{other}`"))),
        }
    }
    if !rot.is_empty() {
        m.set_rotation(rot).map_err(|e| match e {
            Error::Structure(msg) => Error::parse(0, format!("incomplete rotation: {msg}")),
            e => e,
        })?;
    }
    Ok(m)
}

pub fn serialize_trvb(m: &Multigraph) -> String {
    let mut out = String::new();
    for v in m.vertex_ids() {
        writeln!(out, "vx {} {}", v.0, if m.is_breakable(v) { 1 } else { 0 }).unwrap();
    }
    for e in m.edge_ids() {
        let (u, v) = m.endpoints(e).unwrap();
        writeln!(out, "e {} {} {}", e.0, u.0, v.0).unwrap();
    }
    if let Some(rot) = m.rotation() {
        for (v, ends) in rot {
            let ids: Vec<String> = ends.iter().map(|(e, _)| e.0.to_string()).collect();
            writeln!(out, "rot {} {}", v.0, ids.join(" ")).unwrap();
        }
    }
    out
}

// ---------------------------------------------------------------------------
// SAT embeddings
// ---------------------------------------------------------------------------

pub fn parse_sat(text: &str) -> Result<SatEmbedding> {
    let mut num_vars: Option<usize> = None;
    let mut clauses = Vec::new();
    for (ln, line) in lines_of(text) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "vars" => {
                if toks.len() != 2 {
                    return Err(Error::parse(ln, "expected `vars <n>`"));
                }
                num_vars = Some(parse_i64(ln, toks[1])? as usize);
            }
            "clause" => {
                if toks.len() != 6 {
                    return Err(Error::parse(ln, "expected `clause <+|-> <level> <i> <j> <k>`"));
                }
                let positive = match toks[1] {
                    "+" => true,
                    "-" => false,
                    other => return Err(Error::parse(ln, format!("bad sign `{other}`"))),
                };
                let level = parse_i64(ln, toks[2])? as u32;
                let mut lits = [0usize; 3];
                for (i, tok) in toks[3..6].iter().enumerate() {
                    let raw = parse_i64(ln, tok)?;
                    if raw < 0 && positive {
                        return Err(Error::Monotonicity(format!(
                            "negative literal {raw} in an above-axis clause (line {ln})"
                        )));
                    }
                    lits[i] = raw.unsigned_abs() as usize;
                }
                clauses.push(SatClause { positive, level, literals: lits });
            }
            other => return Err(Error::parse(ln, format!("unknown directive `{other}`"))),
        }
    }
    let num_vars = num_vars.ok_or_else(|| Error::parse(0, "missing `vars <n>` header"))?;
    let emb = SatEmbedding { num_vars, clauses };
    emb.validate()?;
    Ok(emb)
}

pub fn serialize_sat(e: &SatEmbedding) -> String {
    let mut out = String::new();
    writeln!(out, "vars {}", e.num_vars).unwrap();
    for c in &e.clauses {
        writeln!(
            out,
            "clause {} {} {} {} {}",
            if c.positive { "+" } else { "-" },
            c.level,
            c.literals[0],
            c.literals[1],
            c.literals[2]
        )
        .unwrap();
    }
    out
}

// ---------------------------------------------------------------------------
// cycle certificates
// ---------------------------------------------------------------------------

pub fn parse_cycle(text: &str) -> Result<CycleCertificate> {
    let mut edges = BTreeSet::new();
    let mut saw_header = false;
    for (ln, line) in lines_of(text) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "cycle" => saw_header = true,
            "e" => {
                if toks.len() != 5 {
                    return Err(Error::parse(ln, "expected `e <a1> <b1> <a2> <b2>`"));
                }
                let u = Coord::new(parse_i64(ln, toks[1])?, parse_i64(ln, toks[2])?);
                let v = Coord::new(parse_i64(ln, toks[3])?, parse_i64(ln, toks[4])?);
                edges.insert(Edge::new(u, v));
            }
            other => return Err(Error::parse(ln, format!("unknown directive `{other}`"))),
        }
    }
    if !saw_header {
        return Err(Error::parse(0, "missing `cycle` header"));
    }
    Ok(CycleCertificate { edges })
}

pub fn serialize_cycle(c: &CycleCertificate) -> String {
    let mut out = String::from("cycle\n");
    for e in &c.edges {
        writeln!(out, "e {} {} {} {}", e.0.a, e.0.b, e.1.a, e.1.b).unwrap();
    }
    out
}

// ---------------------------------------------------------------------------
// gadget templates
// ---------------------------------------------------------------------------

pub fn parse_gadget(text: &str) -> Result<GadgetTemplate> {
    let mut name = None;
    let mut kind = None;
    let mut cells = BTreeSet::new();
    let mut ports = Vec::new();
    for (ln, line) in lines_of(text) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "gadget" => {
                if toks.len() != 3 {
                    return Err(Error::parse(ln, "expected `gadget <name> <kind>`"));
                }
                name = Some(toks[1].to_string());
                kind = Some(
                    GridKind::parse(toks[2])
                        .ok_or_else(|| Error::parse(ln, format!("unknown kind `{}`", toks[2])))?,
                );
            }
            "port" => {
                let k = kind.ok_or_else(|| Error::parse(ln, "`port` before header"))?;
                if toks.len() != 5 {
                    return Err(Error::parse(ln, "expected `port <id> <a> <b> <dir>`"));
                }
                ports.push(Port {
                    id: parse_i64(ln, toks[1])? as u32,
                    stub: Cell {
                        kind: k,
                        anchor: Coord::new(parse_i64(ln, toks[2])?, parse_i64(ln, toks[3])?),
                        orientation: Orientation::None,
                    },
                    dir: parse_i64(ln, toks[4])? as u8,
                });
            }
            _ => {
                // bare cell line: `<a> <b>`
                let k = kind.ok_or_else(|| Error::parse(ln, "cell line before header"))?;
                if toks.len() != 2 {
                    return Err(Error::parse(ln, "expected `<a> <b>` cell line"));
                }
                let cell = Cell {
                    kind: k,
                    anchor: Coord::new(parse_i64(ln, toks[0])?, parse_i64(ln, toks[1])?),
                    orientation: Orientation::None,
                };
                if !cell.valid() {
                    return Err(Error::parse(ln, format!("invalid cell {cell}")));
                }
                cells.insert(cell);
            }
        }
    }
    let name = name.ok_or_else(|| Error::parse(0, "missing `gadget` header"))?;
    let kind = kind.unwrap();
    ports.sort_by_key(|p| p.id);
    Ok(GadgetTemplate { name, kind, cells, ports })
}

pub fn serialize_gadget(t: &GadgetTemplate) -> String {
    let mut out = String::new();
    writeln!(out, "gadget {} {}", t.name, t.kind).unwrap();
    for c in &t.cells {
        writeln!(out, "{} {}", c.anchor.a, c.anchor.b).unwrap();
    }
    for p in &t.ports {
        writeln!(out, "port {} {} {} {}", p.id, p.stub.anchor.a, p.stub.anchor.b, p.dir).unwrap();
    }
    out
}

// ---------------------------------------------------------------------------
// documents
// ---------------------------------------------------------------------------

/// Parse any document, dispatching on the first directive.
pub fn parse_document(text: &str) -> Result<Document> {
    let first = lines_of(text)
        .next()
        .map(|(_, l)| l.split_whitespace().next().unwrap_or(""))
        .unwrap_or("");
    match first {
        "grid" => Ok(Document::Grid(parse_grid(text)?)),
        "vx" | "e" => Ok(Document::Trvb(parse_trvb(text)?)),
        "vars" => Ok(Document::Sat(parse_sat(text)?)),
        "cycle" => Ok(Document::Cycle(parse_cycle(text)?)),
        "gadget" => Ok(Document::Gadget(parse_gadget(text)?)),
        other => Err(Error::parse(1, format!("unknown document tag `{other}`"))),
    }
}

pub fn serialize_document(d: &Document) -> String {
    match d {
        Document::Grid(g) => serialize_grid(g),
        Document::Trvb(m) => serialize_trvb(m),
        Document::Sat(s) => serialize_sat(s),
        Document::Cycle(c) => serialize_cycle(c),
        Document::Gadget(t) => serialize_gadget(t),
    }
}

// ---------------------------------------------------------------------------
// SVG rendering
// ---------------------------------------------------------------------------

const SVG_SCALE: f64 = 40.0;
const SVG_MARGIN: f64 = 20.0;

/// Render a grid graph with an optional bold overlay (certificate or region
/// boundary). Deterministic output.
pub fn render_svg(g: &GridGraph, overlay: Option<&BTreeSet<Edge>>) -> String {
    let pts: Vec<(f64, f64)> = g.vertices().iter().map(|&v| embed(g.kind(), v)).collect();
    let (mut minx, mut miny, mut maxx, mut maxy) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in &pts {
        minx = minx.min(x);
        miny = miny.min(y);
        maxx = maxx.max(x);
        maxy = maxy.max(y);
    }
    let w = (maxx - minx) * SVG_SCALE + 2.0 * SVG_MARGIN;
    let h = (maxy - miny) * SVG_SCALE + 2.0 * SVG_MARGIN;
    // flip y so the picture reads like the figures
    let tx = |x: f64| (x - minx) * SVG_SCALE + SVG_MARGIN;
    let ty = |y: f64| h - ((y - miny) * SVG_SCALE + SVG_MARGIN);

    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.2}\" height=\"{h:.2}\" viewBox=\"0 0 {w:.2} {h:.2}\">"
    )
    .unwrap();
    for e in g.edges() {
        let (x1, y1) = embed(g.kind(), e.0);
        let (x2, y2) = embed(g.kind(), e.1);
        writeln!(
            out,
            "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#999\" stroke-width=\"1\"/>",
            tx(x1), ty(y1), tx(x2), ty(y2)
        )
        .unwrap();
    }
    if let Some(bold) = overlay {
        for e in bold {
            let (x1, y1) = embed(g.kind(), e.0);
            let (x2, y2) = embed(g.kind(), e.1);
            writeln!(
                out,
                "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#000\" stroke-width=\"4\" stroke-linecap=\"round\"/>",
                tx(x1), ty(y1), tx(x2), ty(y2)
            )
            .unwrap();
        }
    }
    for &(x, y) in &pts {
        writeln!(
            out,
            "  <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3\" fill=\"#222\"/>",
            tx(x),
            ty(y)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_round_trip() {
        let text = "grid square\nv 0 0\nv 1 0\nv 0 1\nv 1 1\n";
        let g = parse_grid(text).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        let ser = serialize_grid(&g);
        let g2 = parse_grid(&ser).unwrap();
        assert_eq!(serialize_grid(&g2), ser);
    }

    #[test]
    fn grid_parse_errors() {
        assert!(parse_grid("grid square\nv 0 0\nv 0 0\n").is_err());
        assert!(parse_grid("grid hexagonal\nv 0 0\n").is_err());
        assert!(parse_grid("grid square\nv 0\n").is_err());
    }

    #[test]
    fn trvb_round_trip_with_loops() {
        let text = "vx 0 1\ne 0 0 0\ne 1 0 0\ne 2 0 0\nrot 0 0 1 1 0 2 2\n";
        let m = parse_trvb(text).unwrap();
        assert_eq!(m.degree(crate::trvb::VertexId(0)), 6);
        let ser = serialize_trvb(&m);
        let m2 = parse_trvb(&ser).unwrap();
        assert_eq!(m, m2);
    }

    #[test]
    fn trvb_six_parallel_degrees() {
        let mut text = String::from("vx 0 1\nvx 1 1\n");
        for i in 0..6 {
            text.push_str(&format!("e {i} 0 1\n"));
        }
        let m = parse_trvb(&text).unwrap();
        assert_eq!(m.degree(crate::trvb::VertexId(0)), 6);
        assert_eq!(m.degree(crate::trvb::VertexId(1)), 6);
    }

    #[test]
    fn trvb_rejects_duplicate_rotation_entry() {
        let text = "vx 0 0\nvx 1 0\ne 0 0 1\ne 1 0 1\nrot 0 0 0\n";
        assert!(parse_trvb(text).is_err());
    }

    #[test]
    fn sat_parsing() {
        let e = parse_sat("vars 3\nclause + 1 1 2 3\n").unwrap();
        assert_eq!(e.num_vars, 3);
        assert_eq!(e.clauses.len(), 1);
        assert!(e.clauses[0].positive);

        // repeated literal is allowed
        let e = parse_sat("vars 2\nclause - 1 1 1 2\n").unwrap();
        assert_eq!(e.clauses[0].literals, [1, 1, 2]);

        // negative literal above the axis
        assert!(matches!(
            parse_sat("vars 2\nclause + 1 1 -2 2\n"),
            Err(Error::Monotonicity(_))
        ));

        // crossing legs
        assert!(matches!(
            parse_sat("vars 4\nclause + 1 1 3 4\nclause + 2 1 2 4\n"),
            Err(Error::Planarity(_))
        ));
    }

    #[test]
    fn sat_round_trip() {
        let text = "vars 4\nclause + 1 1 2 3\nclause - 1 2 3 4\n";
        let e = parse_sat(text).unwrap();
        let ser = serialize_sat(&e);
        assert_eq!(parse_sat(&ser).unwrap(), e);
    }

    #[test]
    fn cycle_round_trip() {
        let c = parse_cycle("cycle\ne 0 0 1 0\ne 1 0 1 1\ne 1 1 0 1\ne 0 1 0 0\n").unwrap();
        assert_eq!(c.edges.len(), 4);
        let ser = serialize_cycle(&c);
        assert_eq!(parse_cycle(&ser).unwrap(), c);
    }

    #[test]
    fn gadget_round_trip() {
        let text = "gadget demo hexagonal\n0 0\n1 1\nport 0 1 1 0\n";
        let t = parse_gadget(text).unwrap();
        assert_eq!(t.cells.len(), 2);
        assert_eq!(t.ports.len(), 1);
        let ser = serialize_gadget(&t);
        assert_eq!(parse_gadget(&ser).unwrap(), t);
    }

    #[test]
    fn document_dispatch() {
        assert!(matches!(
            parse_document("grid square\nv 0 0\n"),
            Ok(Document::Grid(_))
        ));
        assert!(matches!(parse_document("vars 1\n"), Ok(Document::Sat(_))));
        assert!(matches!(parse_document("cycle\n"), Ok(Document::Cycle(_))));
        assert!(matches!(parse_document("vx 0 1\n"), Ok(Document::Trvb(_))));
    }

    #[test]
    fn svg_is_deterministic_and_bold_overlay_present() {
        let g = parse_grid("grid square\nv 0 0\nv 1 0\nv 0 1\nv 1 1\n").unwrap();
        let overlay: BTreeSet<Edge> = g.edges().into_iter().collect();
        let a = render_svg(&g, Some(&overlay));
        let b = render_svg(&g, Some(&overlay));
        assert_eq!(a, b);
        assert_eq!(a.matches("stroke-width=\"4\"").count(), 4);
        assert_eq!(a.matches("<circle").count(), 4);
    }
}
