//! Compact indexed view of a special graph.
//!
//! Algorithms run on dense `u32` indices; string ids only appear at the API
//! boundary. Vertices and edges are numbered in sorted-id order, which makes
//! every downstream iteration order deterministic.
//!
//! Edge ends and darts share one numbering: end `2e + s` is side `s` of edge
//! `e`, and the dart with the same number is the traversal of `e` that leaves
//! from that end. `end ^ 1` is the opposite end of the same edge.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{EdgeEnd, EdgeId, GraphError, SpecialGraph, VertexId};

#[derive(Clone, Debug)]
pub(crate) struct Ig {
    pub nv: usize,
    /// Endpoint vertex indices per edge; the order anchors end 0 / end 1.
    pub edges: Vec<[u32; 2]>,
    pub thick: Vec<bool>,
    /// Rigid rotations as cyclic end-id sequences.
    pub rigid: Vec<Option<Vec<u32>>>,
    /// Incident end ids per vertex, ascending.
    pub inc: Vec<Vec<u32>>,
}

/// Maps between indices and the original string ids.
#[derive(Clone, Debug)]
pub(crate) struct IdMaps {
    pub vids: Vec<VertexId>,
    pub eids: Vec<EdgeId>,
}

impl IdMaps {
    pub fn edge_index(&self, id: &EdgeId) -> Option<u32> {
        self.eids.binary_search(id).ok().map(|i| i as u32)
    }

    pub fn end_ref(&self, end: u32) -> EdgeEnd {
        EdgeEnd { edge: self.eids[(end / 2) as usize].clone(), end: (end & 1) as u8 }
    }
}

impl Ig {
    /// Validates `g` and builds the indexed view.
    pub fn build(g: &SpecialGraph) -> Result<(Ig, IdMaps), GraphError> {
        let report = g.validate();
        if !report.is_ok() {
            return Err(GraphError::Invalid(format!("{report}")));
        }
        let mut vids: Vec<VertexId> = g.graph.vertices.clone();
        vids.sort();
        let mut eids: Vec<EdgeId> = g.graph.edges.iter().map(|e| e.id.clone()).collect();
        eids.sort();
        let vpos: BTreeMap<&VertexId, u32> =
            vids.iter().enumerate().map(|(i, v)| (v, i as u32)).collect();
        let epos: BTreeMap<&EdgeId, u32> =
            eids.iter().enumerate().map(|(i, e)| (e, i as u32)).collect();

        let ne = eids.len();
        let mut edges = vec![[0u32; 2]; ne];
        let mut thick = vec![false; ne];
        for e in &g.graph.edges {
            let idx = epos[&e.id] as usize;
            edges[idx] = [vpos[&e.ends[0]], vpos[&e.ends[1]]];
            thick[idx] = g.thick.contains(&e.id);
        }
        let mut rigid = vec![None; vids.len()];
        for (v, rotation) in &g.rigid {
            let ends = rotation
                .iter()
                .map(|end| 2 * epos[&end.edge] + end.end as u32)
                .collect::<Vec<_>>();
            rigid[vpos[v] as usize] = Some(ends);
        }
        let mut ig = Ig { nv: vids.len(), edges, thick, rigid, inc: Vec::new() };
        ig.rebuild_incidence();
        Ok((ig, IdMaps { vids, eids }))
    }

    pub fn from_raw(
        nv: usize,
        edges: Vec<[u32; 2]>,
        thick: Vec<bool>,
        rigid: Vec<Option<Vec<u32>>>,
    ) -> Ig {
        let mut ig = Ig { nv, edges, thick, rigid, inc: Vec::new() };
        ig.rebuild_incidence();
        ig
    }

    pub fn rebuild_incidence(&mut self) {
        let mut inc = vec![Vec::new(); self.nv];
        for (e, ends) in self.edges.iter().enumerate() {
            inc[ends[0] as usize].push(2 * e as u32);
            inc[ends[1] as usize].push(2 * e as u32 + 1);
        }
        self.inc = inc;
    }

    pub fn ne(&self) -> usize {
        self.edges.len()
    }

    pub fn end_vertex(&self, end: u32) -> u32 {
        self.edges[(end / 2) as usize][(end & 1) as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.inc[v as usize].len()
    }

    pub fn is_simple(&self) -> bool {
        let mut pairs: Vec<[u32; 2]> = self
            .edges
            .iter()
            .map(|&[a, b]| if a <= b { [a, b] } else { [b, a] })
            .collect();
        pairs.sort_unstable();
        pairs.windows(2).all(|w| w[0] != w[1])
    }

    /// Connected components as sorted vertex lists (isolated vertices included).
    pub fn components(&self) -> Vec<Vec<u32>> {
        let mut comp = vec![u32::MAX; self.nv];
        let mut out: Vec<Vec<u32>> = Vec::new();
        for start in 0..self.nv as u32 {
            if comp[start as usize] != u32::MAX {
                continue;
            }
            let c = out.len() as u32;
            comp[start as usize] = c;
            let mut stack = vec![start];
            let mut verts = vec![start];
            while let Some(v) = stack.pop() {
                for &end in &self.inc[v as usize] {
                    let w = self.end_vertex(end ^ 1);
                    if comp[w as usize] == u32::MAX {
                        comp[w as usize] = c;
                        stack.push(w);
                        verts.push(w);
                    }
                }
            }
            verts.sort_unstable();
            out.push(verts);
        }
        out
    }

    /// Extracts the subgraph on a sorted vertex subset that must be closed
    /// under edges (a union of components). Vertices and edges are renumbered
    /// in ascending original order; returns the edge index map (new -> old).
    pub fn induced_closed(&self, verts: &[u32]) -> (Ig, Vec<u32>) {
        let mut vmap = vec![u32::MAX; self.nv];
        for (i, &v) in verts.iter().enumerate() {
            vmap[v as usize] = i as u32;
        }
        let mut edges = Vec::new();
        let mut thick = Vec::new();
        let mut emap = Vec::new();
        for (e, &[a, b]) in self.edges.iter().enumerate() {
            if vmap[a as usize] != u32::MAX {
                debug_assert!(vmap[b as usize] != u32::MAX);
                emap.push(e as u32);
                edges.push([vmap[a as usize], vmap[b as usize]]);
                thick.push(self.thick[e]);
            }
        }
        let mut eend = vec![u32::MAX; 2 * self.ne()];
        for (new_e, &old_e) in emap.iter().enumerate() {
            eend[(2 * old_e) as usize] = 2 * new_e as u32;
            eend[(2 * old_e + 1) as usize] = 2 * new_e as u32 + 1;
        }
        let mut rigid = vec![None; verts.len()];
        for &v in verts {
            if let Some(rot) = &self.rigid[v as usize] {
                rigid[vmap[v as usize] as usize] =
                    Some(rot.iter().map(|&end| eend[end as usize]).collect());
            }
        }
        (Ig::from_raw(verts.len(), edges, thick, rigid), emap)
    }

    /// Restriction to an edge subset: keeps all vertices, drops other edges,
    /// and restricts rigid rotations to the surviving ends (a cyclic
    /// subsequence). Used for the thick-subgraph feasibility test.
    pub fn edge_restriction(&self, keep: &[bool]) -> (Ig, Vec<u32>) {
        let mut edges = Vec::new();
        let mut thick = Vec::new();
        let mut emap = Vec::new();
        let mut eend = vec![u32::MAX; 2 * self.ne()];
        for (e, &ends) in self.edges.iter().enumerate() {
            if keep[e] {
                eend[2 * e] = 2 * emap.len() as u32;
                eend[2 * e + 1] = 2 * emap.len() as u32 + 1;
                emap.push(e as u32);
                edges.push(ends);
                thick.push(self.thick[e]);
            }
        }
        let rigid = self
            .rigid
            .iter()
            .map(|r| {
                r.as_ref().map(|rot| {
                    rot.iter()
                        .filter(|&&end| eend[end as usize] != u32::MAX)
                        .map(|&end| eend[end as usize])
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        (Ig::from_raw(self.nv, edges, thick, rigid), emap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::MultiGraph;

    #[test]
    fn build_is_sorted_and_indexed() {
        let g = SpecialGraph::plain(MultiGraph::from_parts(
            ["b", "a"],
            [("e2", "b", "a"), ("e1", "a", "b")],
        ));
        let (ig, ids) = Ig::build(&g).unwrap();
        assert_eq!(ids.vids[0], VertexId::new("a"));
        assert_eq!(ids.eids[0], EdgeId::new("e1"));
        assert_eq!(ig.edges[0], [0, 1]); // e1 = a-b
        assert_eq!(ig.edges[1], [1, 0]); // e2 = b-a keeps its stored end order
        assert_eq!(ig.inc[0], vec![0, 3]);
    }

    #[test]
    fn components_split() {
        let g = SpecialGraph::plain(MultiGraph::from_parts(
            ["a", "b", "c", "d"],
            [("ab", "a", "b"), ("cd", "c", "d")],
        ));
        let (ig, _) = Ig::build(&g).unwrap();
        let comps = ig.components();
        assert_eq!(comps.len(), 2);
        let (sub, emap) = ig.induced_closed(&comps[1]);
        assert_eq!(sub.nv, 2);
        assert_eq!(sub.ne(), 1);
        assert_eq!(emap, vec![1]);
    }
}
