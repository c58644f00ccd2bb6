//! Multigraphs, special graphs and surfaces.
//!
//! Identifiers are opaque strings so that generators can reuse the names from
//! the figures (`q`, `u1'`, `tau0`, ...). Graph values are plain data and may
//! be built in invalid states; [`SpecialGraph::validate`] reports every
//! violation instead of failing fast.

use alloc::borrow::ToOwned;
use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

macro_rules! id_type {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(Box<str>);

        impl $name {
            pub fn new(s: impl AsRef<str>) -> Self {
                Self(s.as_ref().into())
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl<T: AsRef<str>> From<T> for $name {
            fn from(s: T) -> Self {
                Self::new(s)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{:?}", &*self.0)
            }
        }
    };
}

id_type!(
    /// Opaque vertex identifier.
    VertexId
);
id_type!(
    /// Opaque edge identifier.
    EdgeId
);

/// One of the two ends of an edge. Parallel edges make ends (not endpoint
/// vertices) the unit that rotations are expressed in.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeEnd {
    pub edge: EdgeId,
    /// 0 or 1, indexing into the edge's stored endpoint pair.
    pub end: u8,
}

impl EdgeEnd {
    pub fn new(edge: impl Into<EdgeId>, end: u8) -> Self {
        Self { edge: edge.into(), end }
    }
}

impl fmt::Display for EdgeEnd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.edge, self.end)
    }
}

/// An edge with its unordered endpoint pair. The stored order of `ends`
/// anchors end indices 0 and 1 (and crossing positions along the edge).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Edge {
    pub id: EdgeId,
    pub ends: [VertexId; 2],
}

impl Edge {
    pub fn new(id: impl Into<EdgeId>, a: impl Into<VertexId>, b: impl Into<VertexId>) -> Self {
        Self { id: id.into(), ends: [a.into(), b.into()] }
    }
}

/// A multigraph: loops are disallowed, parallel edges are first-class.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiGraph {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<Edge>,
}

impl MultiGraph {
    pub fn new(vertices: Vec<VertexId>, edges: Vec<Edge>) -> Self {
        Self { vertices, edges }
    }

    /// Builder over string ids: `MultiGraph::from_parts(["a","b"], [("e","a","b")])`.
    pub fn from_parts<'a>(
        vertices: impl IntoIterator<Item = &'a str>,
        edges: impl IntoIterator<Item = (&'a str, &'a str, &'a str)>,
    ) -> Self {
        Self {
            vertices: vertices.into_iter().map(VertexId::new).collect(),
            edges: edges.into_iter().map(|(id, a, b)| Edge::new(id, a, b)).collect(),
        }
    }

    pub fn edge(&self, id: &EdgeId) -> Option<&Edge> {
        self.edges.iter().find(|e| &e.id == id)
    }

    /// True if some pair of distinct edges joins the same two vertices.
    pub fn has_parallel_edges(&self) -> bool {
        let mut seen = BTreeSet::new();
        for e in &self.edges {
            let mut pair = [&e.ends[0], &e.ends[1]];
            pair.sort();
            if !seen.insert(pair) {
                return true;
            }
        }
        false
    }
}

/// A multigraph together with thick edges `T` and rigid vertices `U` with
/// their prescribed local rotations.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SpecialGraph {
    pub graph: MultiGraph,
    /// Edges no drawing may cross.
    pub thick: BTreeSet<EdgeId>,
    /// Per rigid vertex, the cyclic order of all incident edge ends, read in
    /// either orientation.
    pub rigid: BTreeMap<VertexId, Vec<EdgeEnd>>,
}

impl SpecialGraph {
    /// A special graph with no thick edges and no rigid vertices.
    pub fn plain(graph: MultiGraph) -> Self {
        Self { graph, thick: BTreeSet::new(), rigid: BTreeMap::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edges.len()
    }

    pub fn is_thick(&self, id: &EdgeId) -> bool {
        self.thick.contains(id)
    }

    pub fn thin_edges(&self) -> impl Iterator<Item = &Edge> {
        self.graph.edges.iter().filter(|e| !self.thick.contains(&e.id))
    }

    /// Checks every type invariant and reports all violations.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let mut vset = BTreeSet::new();
        for v in &self.graph.vertices {
            if !vset.insert(v.clone()) {
                violations.push(Violation::DuplicateVertexId(v.clone()));
            }
        }
        let mut eset = BTreeSet::new();
        for e in &self.graph.edges {
            if !eset.insert(e.id.clone()) {
                violations.push(Violation::DuplicateEdgeId(e.id.clone()));
            }
            for end in &e.ends {
                if !vset.contains(end) {
                    violations.push(Violation::DanglingEndpoint {
                        edge: e.id.clone(),
                        vertex: end.clone(),
                    });
                }
            }
            if e.ends[0] == e.ends[1] {
                violations.push(Violation::Loop(e.id.clone()));
            }
        }
        for t in &self.thick {
            if !eset.contains(t) {
                violations.push(Violation::ThickUnknownEdge(t.clone()));
            }
        }
        // Rigid rotations must list exactly the incident ends, each once.
        for (v, rotation) in &self.rigid {
            if !vset.contains(v) {
                violations.push(Violation::RotationUnknownVertex(v.clone()));
                continue;
            }
            let mut incident = BTreeSet::new();
            for e in &self.graph.edges {
                for end in 0..2u8 {
                    if &e.ends[end as usize] == v {
                        incident.insert(EdgeEnd { edge: e.id.clone(), end });
                    }
                }
            }
            let mut seen = BTreeSet::new();
            for end in rotation {
                if !incident.contains(end) {
                    violations.push(Violation::RotationForeignEnd {
                        vertex: v.clone(),
                        end: end.clone(),
                    });
                } else if !seen.insert(end.clone()) {
                    violations.push(Violation::RotationDuplicateEnd {
                        vertex: v.clone(),
                        end: end.clone(),
                    });
                }
            }
            if seen.len() < incident.len() {
                violations.push(Violation::RotationIncomplete(v.clone()));
            }
        }
        ValidationReport { violations }
    }

    /// Replaces `edge` by a path of `t + 1` edges through `t` fresh degree-2
    /// vertices. Path edges inherit thickness; rigid rotations at the original
    /// endpoints are updated to reference the new outermost ends.
    ///
    /// New ids are `{edge}@{i}` (vertices) and `{edge}/{i}` (edges).
    pub fn subdivide_edge(&self, edge: &EdgeId, t: usize) -> Result<SpecialGraph, GraphError> {
        if t == 0 {
            return Err(GraphError::BadParameter("subdivision needs t >= 1".into()));
        }
        let pos = self
            .graph
            .edges
            .iter()
            .position(|e| &e.id == edge)
            .ok_or_else(|| GraphError::UnknownEdge(edge.clone()))?;
        let old = self.graph.edges[pos].clone();
        let mut out = self.clone();

        let mid: Vec<VertexId> = (1..=t).map(|i| VertexId::new(format!("{edge}@{i}"))).collect();
        for v in &mid {
            if out.graph.vertices.contains(v) {
                return Err(GraphError::IdClash(v.as_str().to_owned()));
            }
            out.graph.vertices.push(v.clone());
        }
        let mut chain = Vec::with_capacity(t + 1);
        chain.push(old.ends[0].clone());
        chain.extend(mid);
        chain.push(old.ends[1].clone());
        let seg_ids: Vec<EdgeId> = (0..=t).map(|i| EdgeId::new(format!("{edge}/{i}"))).collect();
        for id in &seg_ids {
            if out.graph.edges.iter().any(|e| &e.id == id) {
                return Err(GraphError::IdClash(id.as_str().to_owned()));
            }
        }
        let segments: Vec<Edge> = seg_ids
            .iter()
            .zip(chain.windows(2))
            .map(|(id, w)| Edge { id: id.clone(), ends: [w[0].clone(), w[1].clone()] })
            .collect();
        out.graph.edges.splice(pos..=pos, segments);

        let was_thick = out.thick.remove(edge);
        if was_thick {
            out.thick.extend(seg_ids.iter().cloned());
        }
        for rotation in out.rigid.values_mut() {
            for end in rotation.iter_mut() {
                if &end.edge == edge {
                    *end = if end.end == 0 {
                        EdgeEnd { edge: seg_ids[0].clone(), end: 0 }
                    } else {
                        EdgeEnd { edge: seg_ids[t].clone(), end: 1 }
                    };
                }
            }
        }
        Ok(out)
    }

    /// Disjoint union. Ids of `other` are prefixed with `2:` when they would
    /// clash with ids of `self`; otherwise both sides keep their names.
    pub fn disjoint_union(&self, other: &SpecialGraph) -> SpecialGraph {
        let clash = other.graph.vertices.iter().any(|v| self.graph.vertices.contains(v))
            || other
                .graph
                .edges
                .iter()
                .any(|e| self.graph.edges.iter().any(|f| f.id == e.id));
        let vmap = |v: &VertexId| -> VertexId {
            if clash {
                VertexId::new(format!("2:{v}"))
            } else {
                v.clone()
            }
        };
        let emap = |e: &EdgeId| -> EdgeId {
            if clash {
                EdgeId::new(format!("2:{e}"))
            } else {
                e.clone()
            }
        };
        let mut out = self.clone();
        out.graph.vertices.extend(other.graph.vertices.iter().map(&vmap));
        out.graph.edges.extend(other.graph.edges.iter().map(|e| Edge {
            id: emap(&e.id),
            ends: [vmap(&e.ends[0]), vmap(&e.ends[1])],
        }));
        out.thick.extend(other.thick.iter().map(&emap));
        out.rigid.extend(other.rigid.iter().map(|(v, rot)| {
            (
                vmap(v),
                rot.iter().map(|end| EdgeEnd { edge: emap(&end.edge), end: end.end }).collect(),
            )
        }));
        out
    }
}

/// Result of [`SpecialGraph::validate`]; empty means every invariant holds.
#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return f.write_str("ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    DuplicateVertexId(VertexId),
    DuplicateEdgeId(EdgeId),
    DanglingEndpoint { edge: EdgeId, vertex: VertexId },
    Loop(EdgeId),
    ThickUnknownEdge(EdgeId),
    RotationUnknownVertex(VertexId),
    RotationForeignEnd { vertex: VertexId, end: EdgeEnd },
    RotationDuplicateEnd { vertex: VertexId, end: EdgeEnd },
    RotationIncomplete(VertexId),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateVertexId(v) => write!(f, "duplicate vertex id {v}"),
            Violation::DuplicateEdgeId(e) => write!(f, "duplicate edge id {e}"),
            Violation::DanglingEndpoint { edge, vertex } => {
                write!(f, "edge {edge} references undeclared vertex {vertex}")
            }
            Violation::Loop(e) => write!(f, "edge {e} is a loop"),
            Violation::ThickUnknownEdge(e) => write!(f, "thick set references unknown edge {e}"),
            Violation::RotationUnknownVertex(v) => {
                write!(f, "rigid rotation for unknown vertex {v}")
            }
            Violation::RotationForeignEnd { vertex, end } => {
                write!(f, "rotation at {vertex} lists non-incident end {end}")
            }
            Violation::RotationDuplicateEnd { vertex, end } => {
                write!(f, "rotation at {vertex} lists end {end} twice")
            }
            Violation::RotationIncomplete(v) => write!(f, "rotation incomplete at {v}"),
        }
    }
}

/// Errors from graph transformations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GraphError {
    UnknownEdge(EdgeId),
    IdClash(String),
    BadParameter(String),
    Invalid(String),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::UnknownEdge(e) => write!(f, "unknown edge id {e}"),
            GraphError::IdClash(s) => write!(f, "generated id {s} clashes with an existing id"),
            GraphError::BadParameter(s) => write!(f, "bad parameter: {s}"),
            GraphError::Invalid(s) => write!(f, "invalid graph: {s}"),
        }
    }
}

impl core::error::Error for GraphError {}

/// An orientable surface with `genus` handles, or a nonorientable one with
/// `genus` crosscaps (at least one).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Surface {
    orientable: bool,
    genus: u32,
}

impl Surface {
    pub fn sphere() -> Self {
        Self { orientable: true, genus: 0 }
    }

    pub fn torus() -> Self {
        Self { orientable: true, genus: 1 }
    }

    pub fn orientable(genus: u32) -> Self {
        Self { orientable: true, genus }
    }

    /// Panics if `crosscaps` is zero: there is no nonorientable genus-0 surface.
    pub fn nonorientable(crosscaps: u32) -> Self {
        assert!(crosscaps >= 1, "nonorientable surfaces need at least one crosscap");
        Self { orientable: false, genus: crosscaps }
    }

    pub fn is_orientable(&self) -> bool {
        self.orientable
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Euler genus: `2g` for the orientable surface, `k` for the nonorientable.
    pub fn euler_genus(&self) -> u32 {
        if self.orientable {
            2 * self.genus
        } else {
            self.genus
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orientable {
            match self.genus {
                0 => f.write_str("sphere"),
                1 => f.write_str("torus"),
                g => write!(f, "orientable genus {g}"),
            }
        } else {
            match self.genus {
                1 => f.write_str("projective plane"),
                2 => f.write_str("Klein bottle"),
                k => write!(f, "nonorientable genus {k}"),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    pub(crate) fn k4() -> SpecialGraph {
        SpecialGraph::plain(MultiGraph::from_parts(
            ["a", "b", "c", "d"],
            [
                ("ab", "a", "b"),
                ("ac", "a", "c"),
                ("ad", "a", "d"),
                ("bc", "b", "c"),
                ("bd", "b", "d"),
                ("cd", "c", "d"),
            ],
        ))
    }

    #[test]
    fn k4_validates() {
        assert!(k4().validate().is_ok());
    }

    #[test]
    fn incomplete_rotation_is_reported() {
        let mut g = k4();
        // Missing the "ad" end at vertex a.
        g.rigid.insert(
            VertexId::new("a"),
            vec![EdgeEnd::new("ab", 0), EdgeEnd::new("ac", 0)],
        );
        let report = g.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::RotationIncomplete(_))));
    }

    #[test]
    fn loops_and_dangling_endpoints_are_reported() {
        let g = SpecialGraph::plain(MultiGraph::from_parts(
            ["a", "b"],
            [("aa", "a", "a"), ("ax", "a", "x")],
        ));
        let report = g.validate();
        assert!(report.violations.iter().any(|v| matches!(v, Violation::Loop(_))));
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::DanglingEndpoint { .. })));
    }

    #[test]
    fn duplicate_ids_are_reported() {
        let g = SpecialGraph::plain(MultiGraph::from_parts(
            ["a", "b", "a"],
            [("e", "a", "b"), ("e", "b", "a")],
        ));
        let report = g.validate();
        assert!(report.violations.iter().any(|v| matches!(v, Violation::DuplicateVertexId(_))));
        assert!(report.violations.iter().any(|v| matches!(v, Violation::DuplicateEdgeId(_))));
    }

    #[test]
    fn subdividing_a_triangle_once_gives_four_vertices_and_edges() {
        let g = SpecialGraph::plain(MultiGraph::from_parts(
            ["a", "b", "c"],
            [("ab", "a", "b"), ("bc", "b", "c"), ("ca", "c", "a")],
        ));
        let out = g.subdivide_edge(&EdgeId::new("ab"), 1).unwrap();
        assert_eq!(out.vertex_count(), 4);
        assert_eq!(out.edge_count(), 4);
        assert!(out.validate().is_ok());
    }

    #[test]
    fn subdividing_a_thick_edge_yields_thick_segments() {
        let mut g = k4();
        g.thick.insert(EdgeId::new("ab"));
        let out = g.subdivide_edge(&EdgeId::new("ab"), 1).unwrap();
        assert_eq!(out.thick.len(), 2);
        assert!(out.thick.contains(&EdgeId::new("ab/0")));
        assert!(out.thick.contains(&EdgeId::new("ab/1")));
    }

    #[test]
    fn subdivision_updates_rigid_ends() {
        let mut g = k4();
        g.rigid.insert(
            VertexId::new("a"),
            vec![EdgeEnd::new("ab", 0), EdgeEnd::new("ac", 0), EdgeEnd::new("ad", 0)],
        );
        g.rigid.insert(
            VertexId::new("b"),
            vec![EdgeEnd::new("ab", 1), EdgeEnd::new("bc", 0), EdgeEnd::new("bd", 0)],
        );
        let out = g.subdivide_edge(&EdgeId::new("ab"), 2).unwrap();
        assert!(out.validate().is_ok(), "{}", out.validate());
        assert_eq!(out.rigid[&VertexId::new("a")][0], EdgeEnd::new("ab/0", 0));
        assert_eq!(out.rigid[&VertexId::new("b")][0], EdgeEnd::new("ab/2", 1));
    }

    #[test]
    fn unknown_edge_subdivision_fails() {
        assert!(matches!(
            k4().subdivide_edge(&EdgeId::new("zz"), 1),
            Err(GraphError::UnknownEdge(_))
        ));
    }

    #[test]
    fn union_of_k4s_namespaces_ids() {
        let g = k4();
        let u = g.disjoint_union(&g);
        assert_eq!(u.vertex_count(), 8);
        assert_eq!(u.edge_count(), 12);
        assert!(u.validate().is_ok());
        assert!(u.graph.vertices.contains(&VertexId::new("2:a")));
    }

    #[test]
    fn union_with_empty_is_identity() {
        let g = k4();
        let u = g.disjoint_union(&SpecialGraph::default());
        assert_eq!(u, g);
        let u2 = SpecialGraph::default().disjoint_union(&g);
        assert_eq!(u2.graph, g.graph);
    }

    #[test]
    fn surface_euler_genus() {
        assert_eq!(Surface::sphere().euler_genus(), 0);
        assert_eq!(Surface::orientable(2).euler_genus(), 4);
        assert_eq!(Surface::nonorientable(3).euler_genus(), 3);
    }
}
