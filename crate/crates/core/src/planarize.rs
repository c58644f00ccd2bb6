//! Planarization: replacing each crossing of a configuration by a rigid
//! degree-4 vertex with alternating rotation.
//!
//! A k-crossing configuration of `G` embeds its drawing in a surface exactly
//! when the planarized graph embeds there: the alternating rotation at a
//! crossing vertex forces the two strands to cross transversally rather than
//! touch, and smoothing the degree-4 vertices recovers the drawing.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::config::{ConfigError, CrossingConfiguration, IxConfig};
use crate::graph::{Edge, EdgeEnd, EdgeId, SpecialGraph, VertexId};
use crate::index::Ig;

/// A planarized special graph: every crossing has become a fresh rigid
/// degree-4 vertex, original edges are split at their slots.
///
/// Derived ids: crossing vertex `i` (in canonical configuration order) is
/// `#x{i}`; segment `j` of a crossed edge `e` is `e#{j}`. Uncrossed edges
/// keep their ids.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlanarizedGraph {
    pub graph: SpecialGraph,
    /// Derived edge id -> original edge id (identity for uncrossed edges).
    pub provenance: BTreeMap<EdgeId, EdgeId>,
    pub crossing_vertices: Vec<VertexId>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PlanarizeError {
    Config(ConfigError),
    Graph(String),
    IdClash(String),
}

impl fmt::Display for PlanarizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanarizeError::Config(e) => write!(f, "invalid configuration: {e}"),
            PlanarizeError::Graph(s) => f.write_str(s),
            PlanarizeError::IdClash(s) => {
                write!(f, "derived id {s} clashes with an existing id")
            }
        }
    }
}

impl core::error::Error for PlanarizeError {}

impl From<ConfigError> for PlanarizeError {
    fn from(e: ConfigError) -> Self {
        PlanarizeError::Config(e)
    }
}

/// Builds the planarization of `g` under `cfg`.
pub fn planarize(
    g: &SpecialGraph,
    cfg: &CrossingConfiguration,
) -> Result<PlanarizedGraph, PlanarizeError> {
    let report = g.validate();
    if !report.is_ok() {
        return Err(PlanarizeError::Graph(format!("invalid graph: {report}")));
    }
    cfg.validate(g)?;

    // Slot bookkeeping: per crossed edge, its crossing count; per slot, the
    // crossing vertex occupying it.
    let mut slots_of: BTreeMap<EdgeId, u32> = BTreeMap::new();
    for c in &cfg.crossings {
        for s in [&c.a, &c.b] {
            let m = slots_of.entry(s.edge.clone()).or_insert(0);
            *m = (*m).max(s.pos + 1);
        }
    }
    let seg_id = |e: &EdgeId, j: u32| EdgeId::new(format!("{e}#{j}"));
    let crossing_vid = |i: usize| VertexId::new(format!("#x{i}"));

    let mut out = SpecialGraph::default();
    out.graph.vertices = g.graph.vertices.clone();
    for (i, _) in cfg.crossings.iter().enumerate() {
        let vid = crossing_vid(i);
        if out.graph.vertices.contains(&vid) {
            return Err(PlanarizeError::IdClash(vid.as_str().into()));
        }
        out.graph.vertices.push(vid);
    }
    let crossing_vertices: Vec<VertexId> =
        (0..cfg.crossings.len()).map(crossing_vid).collect();

    // Which vertex sits at slot (e, pos)?
    let mut slot_vertex: BTreeMap<(EdgeId, u32), VertexId> = BTreeMap::new();
    for (i, c) in cfg.crossings.iter().enumerate() {
        slot_vertex.insert((c.a.edge.clone(), c.a.pos), crossing_vid(i));
        slot_vertex.insert((c.b.edge.clone(), c.b.pos), crossing_vid(i));
    }

    let mut provenance = BTreeMap::new();
    for e in &g.graph.edges {
        match slots_of.get(&e.id) {
            None => {
                out.graph.edges.push(e.clone());
                provenance.insert(e.id.clone(), e.id.clone());
                if g.is_thick(&e.id) {
                    out.thick.insert(e.id.clone());
                }
            }
            Some(&m) => {
                // Chain endpoint0 -> x(pos 0) -> ... -> x(pos m-1) -> endpoint1.
                let mut chain = Vec::with_capacity(m as usize + 2);
                chain.push(e.ends[0].clone());
                for pos in 0..m {
                    chain.push(slot_vertex[&(e.id.clone(), pos)].clone());
                }
                chain.push(e.ends[1].clone());
                for (j, w) in chain.windows(2).enumerate() {
                    let id = seg_id(&e.id, j as u32);
                    if g.graph.edge(&id).is_some() {
                        return Err(PlanarizeError::IdClash(id.as_str().into()));
                    }
                    out.graph.edges.push(Edge {
                        id: id.clone(),
                        ends: [w[0].clone(), w[1].clone()],
                    });
                    provenance.insert(id, e.id.clone());
                }
                debug_assert!(!g.is_thick(&e.id));
            }
        }
    }

    // Rigid rotations of the original graph, with split ends redirected.
    for (v, rot) in &g.rigid {
        let mapped = rot
            .iter()
            .map(|end| match slots_of.get(&end.edge) {
                None => end.clone(),
                Some(&m) => {
                    if end.end == 0 {
                        EdgeEnd { edge: seg_id(&end.edge, 0), end: 0 }
                    } else {
                        EdgeEnd { edge: seg_id(&end.edge, m), end: 1 }
                    }
                }
            })
            .collect();
        out.rigid.insert(v.clone(), mapped);
    }
    // Crossing vertices: rigid with alternating rotation (in-a, in-b, out-a,
    // out-b); the reversal is the same constraint, so the orientation choice
    // is immaterial.
    for (i, c) in cfg.crossings.iter().enumerate() {
        let rot = vec![
            EdgeEnd { edge: seg_id(&c.a.edge, c.a.pos), end: 1 },
            EdgeEnd { edge: seg_id(&c.b.edge, c.b.pos), end: 1 },
            EdgeEnd { edge: seg_id(&c.a.edge, c.a.pos + 1), end: 0 },
            EdgeEnd { edge: seg_id(&c.b.edge, c.b.pos + 1), end: 0 },
        ];
        out.rigid.insert(crossing_vid(i), rot);
    }

    debug_assert!(out.validate().is_ok(), "{}", out.validate());
    Ok(PlanarizedGraph { graph: out, provenance, crossing_vertices })
}

/// Index-world planarization for the solver's hot loop: same construction,
/// no strings. Crossing vertex `i` becomes vertex `nv + i`; edges are laid
/// out in original order with crossed edges replaced by their segment runs.
pub(crate) fn ix_planarize(ig: &Ig, cfg: &IxConfig) -> Ig {
    let k = cfg.crossings.len();
    let nv = ig.nv + k;
    let mut slots_of = vec![0u32; ig.ne()];
    for &[a, b] in &cfg.crossings {
        for (e, pos) in [a, b] {
            slots_of[e as usize] = slots_of[e as usize].max(pos + 1);
        }
    }
    // Edge layout: first_seg[e] = index of the first derived edge of e.
    let mut first_seg = vec![0u32; ig.ne()];
    let mut ne2 = 0u32;
    for e in 0..ig.ne() {
        first_seg[e] = ne2;
        ne2 += slots_of[e] + 1;
    }
    let mut slot_vertex = vec![u32::MAX; ne2 as usize]; // by slot (e, pos) -> first_seg[e] + pos
    for (i, &[a, b]) in cfg.crossings.iter().enumerate() {
        for (e, pos) in [a, b] {
            slot_vertex[(first_seg[e as usize] + pos) as usize] = (ig.nv + i) as u32;
        }
    }
    let mut edges = Vec::with_capacity(ne2 as usize);
    let mut thick = Vec::with_capacity(ne2 as usize);
    for e in 0..ig.ne() {
        let m = slots_of[e];
        let [u, w] = ig.edges[e];
        if m == 0 {
            edges.push([u, w]);
            thick.push(ig.thick[e]);
            continue;
        }
        let mut prev = u;
        for pos in 0..m {
            let x = slot_vertex[(first_seg[e] + pos) as usize];
            edges.push([prev, x]);
            thick.push(false);
            prev = x;
        }
        edges.push([prev, w]);
        thick.push(false);
    }
    let mut rigid = vec![None; nv];
    for v in 0..ig.nv {
        if let Some(rot) = &ig.rigid[v] {
            let mapped = rot
                .iter()
                .map(|&end| {
                    let e = (end / 2) as usize;
                    let side = end & 1;
                    if side == 0 {
                        2 * first_seg[e]
                    } else {
                        2 * (first_seg[e] + slots_of[e]) + 1
                    }
                })
                .collect();
            rigid[v] = Some(mapped);
        }
    }
    for (i, &[a, b]) in cfg.crossings.iter().enumerate() {
        let seg = |s: (u32, u32)| first_seg[s.0 as usize] + s.1;
        rigid[ig.nv + i] = Some(vec![
            2 * seg(a) + 1,
            2 * seg(b) + 1,
            2 * (seg(a) + 1),
            2 * (seg(b) + 1),
        ]);
    }
    Ig::from_raw(nv, edges, thick, rigid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{Crossing, EnumOptions, Slot};
    use crate::testutil;

    #[test]
    fn empty_configuration_is_identity_up_to_provenance() {
        let g = testutil::special_from_edges(4, &testutil::complete(4));
        let p = planarize(&g, &CrossingConfiguration::empty()).unwrap();
        assert_eq!(p.graph, g);
        assert!(p.provenance.iter().all(|(a, b)| a == b));
        assert!(p.crossing_vertices.is_empty());
    }

    #[test]
    fn one_crossing_of_disjoint_edges() {
        let g = testutil::special_from_edges(4, &[[0, 1], [2, 3]]);
        let cfg = CrossingConfiguration::new(vec![Crossing::new(
            Slot { edge: "e000".into(), pos: 0 },
            Slot { edge: "e001".into(), pos: 0 },
        )]);
        let p = planarize(&g, &cfg).unwrap();
        assert_eq!(p.graph.vertex_count(), 5);
        assert_eq!(p.graph.edge_count(), 4);
        assert_eq!(p.crossing_vertices.len(), 1);
        let rot = &p.graph.rigid[&p.crossing_vertices[0]];
        assert_eq!(rot.len(), 4);
        assert!(p.graph.validate().is_ok());
        // Alternation: strand a occupies rotation slots 0 and 2.
        assert_eq!(rot[0].edge, EdgeId::new("e000#0"));
        assert_eq!(rot[2].edge, EdgeId::new("e000#1"));
    }

    #[test]
    fn slot_on_thick_edge_is_rejected() {
        let mut g = testutil::special_from_edges(4, &[[0, 1], [2, 3]]);
        g.thick.insert("e000".into());
        let cfg = CrossingConfiguration::new(vec![Crossing::new(
            Slot { edge: "e000".into(), pos: 0 },
            Slot { edge: "e001".into(), pos: 0 },
        )]);
        assert!(matches!(
            planarize(&g, &cfg),
            Err(PlanarizeError::Config(ConfigError::ThickEdgeCrossed(_)))
        ));
    }

    #[test]
    fn indexed_planarization_matches_the_public_one() {
        use crate::genus::{is_embeddable, EmbedOutcome, GenusOptions};
        use crate::graph::Surface;
        // Every 1- and 2-crossing configuration of K5: the indexed and the
        // public planarizations must agree on sphere embeddability.
        let g = testutil::special_from_edges(5, &testutil::complete(5));
        let (ig, ids) = Ig::build(&g).unwrap();
        for k in 1..=2u32 {
            let mut planar_count = 0;
            for cfg in
                crate::config::enumerate_configurations(&g, k, EnumOptions::default()).unwrap()
            {
                let ix = IxConfig::from_public(&cfg, &ids).unwrap();
                let fast = crate::planarity::is_planar_rigid(&ix_planarize(&ig, &ix));
                let public = planarize(&g, &cfg).unwrap();
                let slow = matches!(
                    is_embeddable(&public.graph, Surface::sphere(), &GenusOptions::default())
                        .unwrap(),
                    EmbedOutcome::Embeddable(_)
                );
                assert_eq!(fast, slow, "config {cfg:?}");
                planar_count += usize::from(fast);
            }
            if k == 1 {
                // cr_0(K5) = 1 via any of the 15 independent edge pairs.
                assert_eq!(planar_count, 15);
            } else {
                assert!(planar_count > 0);
            }
        }
    }
}
