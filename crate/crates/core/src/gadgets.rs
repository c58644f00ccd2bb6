//! Gadget expansions: reducing special graphs to plain simple graphs with
//! the same crossing sequence.
//!
//! Thick edges: an edge of weight w becomes L_w, a bundle of w internally
//! disjoint length-2 paths between its endpoints; crossing the bundle costs
//! w per strand, so weights above an upper bound on the crossing number make
//! thick edges effectively uncrossable. Rigid vertices: a vertex is caged in
//! n nested thick cycles of its degree, meeting the incident edges in
//! rotation order; n = 3g + 2 suffices for all drawings up to Euler genus g,
//! while tests override n downwards at desk scale. Degree <= 3 prescriptions
//! are vacuous up to reflection and are simply dropped.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Edge, EdgeEnd, EdgeId, MultiGraph, SpecialGraph, VertexId};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GadgetError {
    ZeroWeight(EdgeId),
    UnknownEdge(EdgeId),
    BadParameter(String),
    Invalid(String),
}

impl fmt::Display for GadgetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GadgetError::ZeroWeight(e) => write!(f, "edge {e} has weight zero"),
            GadgetError::UnknownEdge(e) => write!(f, "weight map references unknown edge {e}"),
            GadgetError::BadParameter(s) => write!(f, "bad parameter: {s}"),
            GadgetError::Invalid(s) => f.write_str(s),
        }
    }
}

impl core::error::Error for GadgetError {}

/// The default weight policy: 1 for thin edges, `bound + 1` for thick edges,
/// where `bound` is a caller-supplied upper bound on the crossing number.
pub fn policy_weights(g: &SpecialGraph, bound: u32) -> BTreeMap<EdgeId, u32> {
    g.graph
        .edges
        .iter()
        .map(|e| (e.id.clone(), if g.is_thick(&e.id) { bound + 1 } else { 1 }))
        .collect()
}

/// Replaces every edge of weight w > 1 by L_w. Missing weights default to 1.
/// The output carries no thick markings; rigid rotations are updated with
/// the bundle ends attached consecutively (in mirrored order at the two
/// endpoints, so the prescription stays satisfiable by parallel strands).
///
/// Derived ids for edge `e`: midpoints `{e}~{j}`, path edges `{e}~{j}a` (at
/// end 0) and `{e}~{j}b` (at end 1), j = 0..w-1.
pub fn expand_thick(
    g: &SpecialGraph,
    weights: &BTreeMap<EdgeId, u32>,
) -> Result<SpecialGraph, GadgetError> {
    let report = g.validate();
    if !report.is_ok() {
        return Err(GadgetError::Invalid(format!("invalid graph: {report}")));
    }
    for (id, &w) in weights {
        if w == 0 {
            return Err(GadgetError::ZeroWeight(id.clone()));
        }
        if g.graph.edge(id).is_none() {
            return Err(GadgetError::UnknownEdge(id.clone()));
        }
    }
    let weight = |id: &EdgeId| weights.get(id).copied().unwrap_or(1);

    let mut out = SpecialGraph::default();
    out.graph.vertices = g.graph.vertices.clone();
    out.rigid = g.rigid.clone();
    for e in &g.graph.edges {
        let w = weight(&e.id);
        if w == 1 {
            out.graph.edges.push(e.clone());
            continue;
        }
        let mut ends_at_0 = Vec::with_capacity(w as usize);
        let mut ends_at_1 = Vec::with_capacity(w as usize);
        for j in 0..w {
            let mid = VertexId::new(format!("{}~{j}", e.id));
            let ea = EdgeId::new(format!("{}~{j}a", e.id));
            let eb = EdgeId::new(format!("{}~{j}b", e.id));
            out.graph.vertices.push(mid.clone());
            out.graph.edges.push(Edge { id: ea.clone(), ends: [e.ends[0].clone(), mid.clone()] });
            out.graph.edges.push(Edge { id: eb.clone(), ends: [mid, e.ends[1].clone()] });
            ends_at_0.push(EdgeEnd { edge: ea, end: 0 });
            ends_at_1.push(EdgeEnd { edge: eb, end: 1 });
        }
        // Seen from the other endpoint, parallel strands appear reversed.
        ends_at_1.reverse();
        for rot in out.rigid.values_mut() {
            let target_0 = EdgeEnd { edge: e.id.clone(), end: 0 };
            let target_1 = EdgeEnd { edge: e.id.clone(), end: 1 };
            if let Some(pos) = rot.iter().position(|x| *x == target_0) {
                rot.splice(pos..=pos, ends_at_0.iter().cloned());
            }
            if let Some(pos) = rot.iter().position(|x| *x == target_1) {
                rot.splice(pos..=pos, ends_at_1.iter().cloned());
            }
        }
    }
    debug_assert!(out.validate().is_ok(), "{}", out.validate());
    Ok(out)
}

/// Cages every rigid vertex of degree >= 4 in `n` nested thick cycles (with
/// `n = 3 * g_max + 2` by default, valid for drawings up to Euler genus
/// `g_max`; `override_n` shrinks the cage for desk-scale experiments).
/// Degree <= 3 prescriptions are dropped. The output has no rigid vertices.
///
/// Derived ids for a rigid vertex `v` with incident edge `e` at rotation
/// position i: cage vertices `{v}@c{j}.{i}` (cycle j, innermost 0), cycle
/// edges `{v}@c{j}.{i}-{i+1 mod d}`, spoke segments `{e}@{v}.s{j}`; the
/// outermost stretch of `e` keeps its id.
pub fn expand_rigid(g: &SpecialGraph, g_max: u32, override_n: Option<u32>) -> Result<SpecialGraph, GadgetError> {
    let report = g.validate();
    if !report.is_ok() {
        return Err(GadgetError::Invalid(format!("invalid graph: {report}")));
    }
    let n = match override_n {
        Some(0) => return Err(GadgetError::BadParameter("cage needs n >= 1".into())),
        Some(n) => n,
        None => 3 * g_max + 2,
    };
    let mut out = g.clone();
    let rigid = core::mem::take(&mut out.rigid);
    for (v, rotation) in rigid {
        let d = rotation.len() as u32;
        if d < 4 {
            continue; // vacuous up to reflection
        }
        // Cage vertices, cycles thick.
        for j in 0..n {
            for i in 0..d {
                out.graph.vertices.push(VertexId::new(format!("{v}@c{j}.{i}")));
            }
            for i in 0..d {
                let id = EdgeId::new(format!("{v}@c{j}.{i}-{}", (i + 1) % d));
                out.graph.edges.push(Edge {
                    id: id.clone(),
                    ends: [
                        VertexId::new(format!("{v}@c{j}.{i}")),
                        VertexId::new(format!("{v}@c{j}.{}", (i + 1) % d)),
                    ],
                });
                out.thick.insert(id);
            }
        }
        // Reroute each incident end through its radial cage vertices.
        for (i, end) in rotation.iter().enumerate() {
            let eid = &end.edge;
            let thick = out.thick.contains(eid);
            let edge = out
                .graph
                .edges
                .iter_mut()
                .find(|e| &e.id == eid)
                .expect("validated rotation end");
            // v -> c0 -> c1 -> ... -> c(n-1) -> rest of the edge.
            edge.ends[end.end as usize] = VertexId::new(format!("{v}@c{}.{i}", n - 1));
            let mut prev = v.clone();
            for j in 0..n {
                let id = EdgeId::new(format!("{eid}@{v}.s{j}"));
                let next = VertexId::new(format!("{v}@c{j}.{i}"));
                out.graph.edges.push(Edge { id: id.clone(), ends: [prev, next.clone()] });
                if thick {
                    out.thick.insert(id);
                }
                prev = next;
            }
        }
    }
    debug_assert!(out.validate().is_ok(), "{}", out.validate());
    Ok(out)
}

/// Full reduction to an ordinary simple graph: cage the rigid vertices, then
/// expand thick edges with the policy weights (`bound` must dominate the
/// crossing number; defaults to the squared edge count), and subdivide one
/// edge of each residual parallel pair. The result has the same crossing
/// sequence as `g` up to surfaces of Euler genus `g_max`.
pub fn to_simple(
    g: &SpecialGraph,
    g_max: u32,
    bound: Option<u32>,
    override_n: Option<u32>,
) -> Result<MultiGraph, GadgetError> {
    let b = bound.unwrap_or_else(|| {
        let e = g.edge_count() as u32;
        e * e
    });
    let caged = expand_rigid(g, g_max, override_n)?;
    let weights = policy_weights(&caged, b);
    let mut expanded = expand_thick(&caged, &weights)?;
    // Residual parallel pairs are weight-1 originals; subdivide duplicates.
    loop {
        let dup: Option<EdgeId> = {
            let mut seen: BTreeMap<[&VertexId; 2], ()> = BTreeMap::new();
            let mut found = None;
            for e in &expanded.graph.edges {
                let mut key = [&e.ends[0], &e.ends[1]];
                key.sort();
                if seen.insert(key, ()).is_some() {
                    found = Some(e.id.clone());
                    break;
                }
            }
            found
        };
        match dup {
            None => break,
            Some(id) => {
                expanded = expanded
                    .subdivide_edge(&id, 1)
                    .map_err(|e| GadgetError::Invalid(format!("{e}")))?;
            }
        }
    }
    debug_assert!(expanded.thick.is_empty() && expanded.rigid.is_empty());
    Ok(expanded.graph)
}
