//! Generators for the hamburger graph families and the K5-union family,
//! using the vertex names from the figures.
//!
//! The hamburger graph H_n has a thick cycle
//! `q v1 .. vn r r' s' s un .. u1 t t' q'` with thick chords `tau0 = qr` and
//! `tau1 = st`, two rows (`r1 = q'-v2'-v4'-..-r'`, `r2 = t'-u1'-u3'-..-s'`)
//! and n columns `ui - ui' - vi` (odd i) / `ui - vi' - vi` (even i), whose
//! middle vertices are rigid with the row and column ends alternating.
//!
//! H_{n,k} duplicates the second column k times: each duplicate is a fresh
//! rigid vertex spliced into row r1 right after v2', joined to u2 and v2.
//!
//! H_3plus has a third row: r2' duplicates r2 with fresh cycle attachment
//! vertices t'' (splitting q'-q) and s'' (splitting r-r'), and the odd
//! columns lengthen to pass through rigid vertices on both r2 and r2'.
//! Deleting the edges of either outer row leaves a subdivision of H_3, which
//! is what the torus argument needs; the row order bottom-to-top is
//! (r2, r1, r2').

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::config::{Crossing, CrossingConfiguration, Slot};
use crate::graph::{Edge, EdgeEnd, EdgeId, SpecialGraph, VertexId};

/// Which family and with which parameters.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilySpec {
    /// H_n, n >= 3.
    Hamburger { n: u32 },
    /// H_{n,k}, n >= 3, k >= 0.
    HamburgerWide { n: u32, k: u32 },
    /// H_3plus: H_3 with three rows.
    HamburgerPlus,
    /// K5 together with a K5 whose edges (except one) have multiplicity a-1;
    /// a >= 2.
    K5Union { a: u32 },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FamilyError(pub String);

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl core::error::Error for FamilyError {}

pub fn generate(spec: FamilySpec) -> Result<SpecialGraph, FamilyError> {
    match spec {
        FamilySpec::Hamburger { n } => gen_hamburger(n),
        FamilySpec::HamburgerWide { n, k } => gen_hamburger_wide(n, k),
        FamilySpec::HamburgerPlus => Ok(gen_hamburger_plus()),
        FamilySpec::K5Union { a } => gen_k5_union(a),
    }
}

/// The hamburger graph H_n (n >= 3): 3n+8 vertices, 5n+12 edges, 2n+10 thick
/// edges, n rigid vertices.
pub fn gen_hamburger(n: u32) -> Result<SpecialGraph, FamilyError> {
    gen_hamburger_wide(n, 0)
}

/// H_{n,k}: H_n plus k duplicates of the second column.
pub fn gen_hamburger_wide(n: u32, k: u32) -> Result<SpecialGraph, FamilyError> {
    if n < 3 {
        return Err(FamilyError(format!("hamburger graphs need n >= 3, got {n}")));
    }
    let mut b = Builder::default();

    // Thick cycle q v1..vn r r' s' s un..u1 t t' q' q.
    let mut cycle: Vec<String> = vec!["q".into()];
    cycle.extend((1..=n).map(|i| format!("v{i}")));
    cycle.extend(["r".into(), "r'".into(), "s'".into(), "s".into()]);
    cycle.extend((1..=n).rev().map(|i| format!("u{i}")));
    cycle.extend(["t".into(), "t'".into(), "q'".into()]);
    b.cycle(&cycle, true);
    b.edge_named("tau0", "q", "r", true);
    b.edge_named("tau1", "s", "t", true);

    // Rows: r1 hosts the even columns' middles (and the duplicates), r2 the
    // odd ones.
    let mut row1: Vec<String> = vec!["q'".into(), "v2'".into()];
    row1.extend((1..=k).map(|j| format!("v2'd{j}")));
    row1.extend((4..=n).step_by(2).map(|i| format!("v{i}'")));
    row1.push("r'".into());
    b.path(&row1, false);
    let mut row2: Vec<String> = vec!["t'".into()];
    row2.extend((1..=n).step_by(2).map(|i| format!("u{i}'")));
    row2.push("s'".into());
    b.path(&row2, false);

    // Columns, with the rigid alternation row/column/row/column.
    for i in 1..=n {
        let (lo, hi) = (format!("u{i}"), format!("v{i}"));
        let mid = if i % 2 == 1 { format!("u{i}'") } else { format!("v{i}'") };
        b.column(&lo, &mid, &hi, if i % 2 == 1 { &row2 } else { &row1 });
    }
    for j in 1..=k {
        b.column(&"u2".into(), &format!("v2'd{j}"), &"v2".into(), &row1);
    }
    Ok(b.finish())
}

/// H_3plus: H_3 with rows (r2, r1, r2'), the odd columns passing through
/// rigid vertices on both outer rows.
pub fn gen_hamburger_plus() -> SpecialGraph {
    let mut b = Builder::default();
    let cycle: Vec<String> = [
        "q", "v1", "v2", "v3", "r", "s''", "r'", "s'", "s", "u3", "u2", "u1", "t", "t'", "q'",
        "t''",
    ]
    .iter()
    .map(|s| String::from(*s))
    .collect();
    b.cycle(&cycle, true);
    b.edge_named("tau0", "q", "r", true);
    b.edge_named("tau1", "s", "t", true);

    let row1: Vec<String> = vec!["q'".into(), "v2'".into(), "r'".into()];
    let row2: Vec<String> = vec!["t'".into(), "u1'".into(), "u3'".into(), "s'".into()];
    let row2p: Vec<String> = vec!["t''".into(), "u1''".into(), "u3''".into(), "s''".into()];
    b.path(&row1, false);
    b.path(&row2, false);
    b.path(&row2p, false);

    // Odd columns: u_i - u_i' - u_i'' - v_i through both outer rows.
    for i in [1u32, 3] {
        let lo = format!("u{i}");
        let m1 = format!("u{i}'");
        let m2 = format!("u{i}''");
        let hi = format!("v{i}");
        b.edge(&lo, &m1, false);
        b.edge(&m1, &m2, false);
        b.edge(&m2, &hi, false);
        b.rigid_cross(&m1, &row2, &lo, &m2);
        b.rigid_cross(&m2, &row2p, &m1, &hi);
    }
    b.column(&"u2".into(), &"v2'".into(), &"v2".into(), &row1);
    b.finish()
}

/// K5 union family: G1 = K5, G2 = K5 with every edge except b0-b1 replaced by
/// a-1 parallel edges.
pub fn gen_k5_union(a: u32) -> Result<SpecialGraph, FamilyError> {
    if a < 2 {
        return Err(FamilyError(format!("the K5-union family needs a >= 2, got {a}")));
    }
    let mut g = SpecialGraph::default();
    for p in ["a", "b"] {
        for i in 0..5 {
            g.graph.vertices.push(VertexId::new(format!("{p}{i}")));
        }
    }
    for i in 0..5u32 {
        for j in i + 1..5 {
            g.graph.edges.push(Edge::new(format!("a{i}-a{j}"), format!("a{i}"), format!("a{j}")));
        }
    }
    for i in 0..5u32 {
        for j in i + 1..5 {
            if (i, j) == (0, 1) {
                g.graph.edges.push(Edge::new("b0-b1", "b0", "b1"));
                continue;
            }
            for c in 0..a - 1 {
                g.graph.edges.push(Edge::new(
                    format!("b{i}-b{j}/{c}"),
                    format!("b{i}"),
                    format!("b{j}"),
                ));
            }
        }
    }
    Ok(g)
}

/// The figure drawing of H_{n,k} as a crossing configuration: every odd
/// column crosses row r1 on the edge between its flanking row vertices, and
/// the column-2 group crosses one edge of r2 left to right. Solvers use this
/// as a search hint for the planar level; exactness never depends on it.
pub fn hamburger_planar_witness(n: u32, k: u32) -> Result<CrossingConfiguration, FamilyError> {
    if n < 3 {
        return Err(FamilyError(format!("hamburger graphs need n >= 3, got {n}")));
    }
    let mut crossings = Vec::new();
    // Row r1's vertex sequence (as in the generator).
    let mut row1: Vec<String> = vec!["q'".into(), "v2'".into()];
    row1.extend((1..=k).map(|j| format!("v2'd{j}")));
    row1.extend((4..=n).step_by(2).map(|i| format!("v{i}'")));
    row1.push("r'".into());
    let mut row2: Vec<String> = vec!["t'".into()];
    row2.extend((1..=n).step_by(2).map(|i| format!("u{i}'")));
    row2.push("s'".into());
    // Row-edge usage counters assign consecutive positions left to right.
    let mut row_pos: alloc::collections::BTreeMap<EdgeId, u32> = alloc::collections::BTreeMap::new();
    let mut cross_row = |row: &[String], col_x: f64, column_edge: EdgeId| {
        // Row vertex x-positions: attachment points sit at 0 and n+1; the
        // middle vertex of column i sits at x = i; duplicates between 2 and 3.
        let xpos = |name: &str| -> f64 {
            match name {
                "q'" | "t'" => 0.0,
                "r'" | "s'" => n as f64 + 1.0,
                _ => {
                    if let Some(d) = name.strip_prefix("v2'd") {
                        2.0 + d.parse::<u32>().unwrap() as f64 / (k + 2) as f64
                    } else {
                        name[1..name.len() - 1].parse::<u32>().unwrap() as f64
                    }
                }
            }
        };
        let seg = row
            .windows(2)
            .find(|w| xpos(&w[0]) < col_x && col_x < xpos(&w[1]))
            .expect("column crosses the row inside");
        let row_edge = EdgeId::new(format!("{}-{}", seg[0], seg[1]));
        let pos = row_pos.entry(row_edge.clone()).or_insert(0);
        let c = Crossing::new(
            Slot { edge: row_edge, pos: *pos },
            Slot { edge: column_edge, pos: 0 },
        );
        *pos += 1;
        c
    };
    for i in 1..=n {
        if i % 2 == 1 {
            // Odd column crosses r1 with its upper edge.
            crossings.push(cross_row(&row1, i as f64, EdgeId::new(format!("u{i}'-v{i}"))));
        } else {
            // Even column crosses r2 with its lower edge.
            crossings.push(cross_row(&row2, i as f64, EdgeId::new(format!("u{i}-v{i}'"))));
        }
    }
    for j in 1..=k {
        let x = 2.0 + j as f64 / (k + 2) as f64;
        crossings.push(cross_row(&row2, x, EdgeId::new(format!("u2-v2'd{j}"))));
    }
    Ok(CrossingConfiguration::new(crossings))
}

/// The figure drawing of H_3plus: the even column crosses both outer rows,
/// the odd columns cross the middle row.
pub fn hamburger_plus_planar_witness() -> CrossingConfiguration {
    CrossingConfiguration::new(vec![
        Crossing::new(
            Slot { edge: "q'-v2'".into(), pos: 0 },
            Slot { edge: "u1'-u1''".into(), pos: 0 },
        ),
        Crossing::new(
            Slot { edge: "v2'-r'".into(), pos: 0 },
            Slot { edge: "u3'-u3''".into(), pos: 0 },
        ),
        Crossing::new(
            Slot { edge: "u1'-u3'".into(), pos: 0 },
            Slot { edge: "u2-v2'".into(), pos: 0 },
        ),
        Crossing::new(
            Slot { edge: "u1''-u3''".into(), pos: 0 },
            Slot { edge: "v2'-v2".into(), pos: 0 },
        ),
    ])
}

/// The figure drawing of the K5 union: one crossing inside G1, and the single
/// edge b0-b1 crossed by the whole b2-b4 parallel class.
pub fn k5_union_planar_witness(a: u32) -> Result<CrossingConfiguration, FamilyError> {
    if a < 2 {
        return Err(FamilyError(format!("the K5-union family needs a >= 2, got {a}")));
    }
    let mut crossings = vec![Crossing::new(
        Slot { edge: "a0-a1".into(), pos: 0 },
        Slot { edge: "a2-a4".into(), pos: 0 },
    )];
    for c in 0..a - 1 {
        crossings.push(Crossing::new(
            Slot { edge: "b0-b1".into(), pos: c },
            Slot { edge: format!("b2-b4/{c}").into(), pos: 0 },
        ));
    }
    Ok(CrossingConfiguration::new(crossings))
}

/// Torus hint for H_{n,k}: the planar drawing with the whole column-2 group
/// rerouted over a handle (n-1 crossings remain).
pub fn hamburger_torus_witness(n: u32, k: u32) -> Result<CrossingConfiguration, FamilyError> {
    let planar = hamburger_planar_witness(n, k)?;
    let dropped: alloc::collections::BTreeSet<EdgeId> = core::iter::once(EdgeId::new("u2-v2'"))
        .chain((1..=k).map(|j| EdgeId::new(format!("u2-v2'd{j}"))))
        .collect();
    let kept: Vec<Crossing> = planar
        .crossings
        .into_iter()
        .filter(|c| !dropped.contains(&c.a.edge) && !dropped.contains(&c.b.edge))
        .collect();
    Ok(renumber_positions(kept))
}

/// Candidate hints for the exceptional torus drawing of H_4 (two crossings
/// between the second and third columns): every 2-crossing configuration on
/// those four edges.
pub fn hamburger_h4_torus_hints() -> Vec<CrossingConfiguration> {
    let g = gen_hamburger(4).expect("n = 4 is valid");
    let edges: alloc::collections::BTreeSet<EdgeId> =
        ["u2-v2'", "v2'-v2", "u3-u3'", "u3'-v3"].iter().map(EdgeId::new).collect();
    crate::config::enumerate_configurations(&g, 2, crate::config::EnumOptions::default())
        .expect("H_4 validates")
        .filter(|cfg| {
            cfg.crossings
                .iter()
                .all(|c| edges.contains(&c.a.edge) && edges.contains(&c.b.edge))
        })
        .collect()
}

/// Candidate torus hints for H_3plus: the planar drawing with any one
/// crossing rerouted over a handle.
pub fn hamburger_plus_torus_hints() -> Vec<CrossingConfiguration> {
    let planar = hamburger_plus_planar_witness();
    (0..planar.crossing_count())
        .map(|drop| {
            let kept: Vec<Crossing> = planar
                .crossings
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != drop)
                .map(|(_, c)| c.clone())
                .collect();
            renumber_positions(kept)
        })
        .collect()
}

/// Compacts slot positions per edge so they run 0..m-1 again.
fn renumber_positions(mut crossings: Vec<Crossing>) -> CrossingConfiguration {
    let mut by_edge: alloc::collections::BTreeMap<EdgeId, Vec<u32>> =
        alloc::collections::BTreeMap::new();
    for c in &crossings {
        for s in [&c.a, &c.b] {
            by_edge.entry(s.edge.clone()).or_default().push(s.pos);
        }
    }
    for positions in by_edge.values_mut() {
        positions.sort_unstable();
    }
    for c in crossings.iter_mut() {
        for s in [&mut c.a, &mut c.b] {
            s.pos = by_edge[&s.edge].binary_search(&s.pos).unwrap() as u32;
        }
    }
    CrossingConfiguration::new(crossings)
}

// ---------------------------------------------------------------------------

/// Small id-based construction helper; edges named `{a}-{b}`.
#[derive(Default)]
struct Builder {
    g: SpecialGraph,
}

impl Builder {
    fn vertex(&mut self, name: &str) {
        let vid = VertexId::new(name);
        if !self.g.graph.vertices.contains(&vid) {
            self.g.graph.vertices.push(vid);
        }
    }

    fn edge(&mut self, a: &str, b: &str, thick: bool) -> EdgeId {
        self.edge_named(&format!("{a}-{b}"), a, b, thick)
    }

    fn edge_named(&mut self, id: &str, a: &str, b: &str, thick: bool) -> EdgeId {
        self.vertex(a);
        self.vertex(b);
        let eid = EdgeId::new(id);
        self.g.graph.edges.push(Edge::new(id, a, b));
        if thick {
            self.g.thick.insert(eid.clone());
        }
        eid
    }

    fn path(&mut self, names: &[String], thick: bool) {
        for w in names.windows(2) {
            self.edge(&w[0], &w[1], thick);
        }
    }

    fn cycle(&mut self, names: &[String], thick: bool) {
        self.path(names, thick);
        self.edge(&names[names.len() - 1], &names[0], thick);
    }

    /// A 2-path column lo - mid - hi whose middle vertex is rigid on `row`.
    fn column(&mut self, lo: &String, mid: &String, hi: &String, row: &[String]) {
        self.edge(lo, mid, false);
        self.edge(mid, hi, false);
        self.rigid_cross(mid, row, lo, hi);
    }

    /// Rigid rotation at `mid`: row-previous, below, row-next, above.
    fn rigid_cross(&mut self, mid: &String, row: &[String], below: &String, above: &String) {
        let at = row.iter().position(|x| x == mid).expect("middle vertex on its row");
        let rot = vec![
            self.end_at(mid, &row[at - 1]),
            self.end_at(mid, below),
            self.end_at(mid, &row[at + 1]),
            self.end_at(mid, above),
        ];
        self.g.rigid.insert(VertexId::new(mid.as_str()), rot);
    }

    /// The end at `at` of the edge joining `at` and `other` (either id
    /// direction); the end index follows the stored endpoint order.
    fn end_at(&self, at: &str, other: &str) -> EdgeEnd {
        let fwd = EdgeId::new(format!("{at}-{other}"));
        let bwd = EdgeId::new(format!("{other}-{at}"));
        for e in &self.g.graph.edges {
            if e.id == fwd {
                return EdgeEnd { edge: fwd, end: 0 };
            }
            if e.id == bwd {
                return EdgeEnd { edge: bwd, end: 1 };
            }
        }
        panic!("edge {at}-{other} not built yet");
    }

    fn finish(self) -> SpecialGraph {
        self.g
    }
}
