//! Rotation systems, face tracing and Euler genus.
//!
//! An embedding scheme is a rotation (cyclic order of incident edge ends) per
//! vertex plus a signature in {+1, -1} per edge. Faces are traced on states
//! `(dart, orientation flag)`; these states are exactly the darts of the
//! orientation double cover, where every face of the scheme lifts to two
//! disjoint faces. So the scheme's face count is half the orbit count, and
//! the all-positive case degenerates to the classical dart tracing.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{EdgeEnd, EdgeId, GraphError, MultiGraph, SpecialGraph, Surface, VertexId};
use crate::index::{IdMaps, Ig};

/// A rotation system with edge signatures. Missing signature entries default
/// to +1; vertices of degree 0 may be omitted from `rotation`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RotationSystem {
    pub rotation: BTreeMap<VertexId, Vec<EdgeEnd>>,
    pub signature: BTreeMap<EdgeId, i8>,
}

impl RotationSystem {
    /// All-positive system with the given per-vertex rotations.
    pub fn all_positive(rotation: BTreeMap<VertexId, Vec<EdgeEnd>>) -> Self {
        Self { rotation, signature: BTreeMap::new() }
    }

    pub fn sign(&self, edge: &EdgeId) -> i8 {
        self.signature.get(edge).copied().unwrap_or(1)
    }

    pub fn is_all_positive(&self) -> bool {
        self.signature.values().all(|&s| s == 1)
    }
}

/// The facial walks of an embedding scheme. Each walk lists the edge ends it
/// leaves from, in traversal order; every edge side is traversed exactly once
/// over all walks, so the lengths sum to `2 |E|`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FaceSet {
    pub walks: Vec<Vec<EdgeEnd>>,
}

impl FaceSet {
    pub fn face_count(&self) -> usize {
        self.walks.len()
    }

    pub fn total_length(&self) -> usize {
        self.walks.iter().map(|w| w.len()).sum()
    }
}

/// A rotation system together with the surface it claims to embed in.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EmbeddingCertificate {
    pub surface: Surface,
    pub rotation_system: RotationSystem,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RotationError {
    MissingRotation(VertexId),
    BadRotation(VertexId),
    BadSignature(EdgeId),
    Disconnected,
    Graph(String),
}

impl fmt::Display for RotationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RotationError::MissingRotation(v) => write!(f, "no rotation for vertex {v}"),
            RotationError::BadRotation(v) => {
                write!(f, "rotation at {v} is not a permutation of its incident ends")
            }
            RotationError::BadSignature(e) => write!(f, "signature of {e} must be +1 or -1"),
            RotationError::Disconnected => f.write_str("graph is not connected"),
            RotationError::Graph(s) => f.write_str(s),
        }
    }
}

impl core::error::Error for RotationError {}

/// Traces all facial walks of `(g, r)`. Works on disconnected graphs; output
/// order is deterministic (walks sorted by their least edge side).
pub fn trace_faces(g: &MultiGraph, r: &RotationSystem) -> Result<FaceSet, RotationError> {
    let (ig, ids) = build_scheme_input(g)?;
    let scheme = IxScheme::from_rotation_system(&ig, &ids, r)?;
    let walks = scheme.trace().walks;
    Ok(FaceSet {
        walks: walks
            .into_iter()
            .map(|w| w.into_iter().map(|d| ids.end_ref(d)).collect())
            .collect(),
    })
}

/// Number of faces and Euler genus via `2 - V + E - F`. Requires `g` connected.
pub fn euler_genus_of(g: &MultiGraph, r: &RotationSystem) -> Result<u32, RotationError> {
    let (ig, ids) = build_scheme_input(g)?;
    if ig.components().len() > 1 {
        return Err(RotationError::Disconnected);
    }
    if ig.ne() == 0 {
        return Ok(0);
    }
    let scheme = IxScheme::from_rotation_system(&ig, &ids, r)?;
    let faces = scheme.trace().walks.len();
    Ok((2 + ig.ne() - ig.nv - faces) as u32)
}

/// Rewrites `r` by vertex flips so that every spanning-tree edge has positive
/// signature. The result represents the same embedding; it is all-positive
/// exactly when the embedding is orientable. Requires `g` connected.
pub fn normalize_signature(
    g: &MultiGraph,
    r: &RotationSystem,
) -> Result<RotationSystem, RotationError> {
    let (ig, ids) = build_scheme_input(g)?;
    if ig.components().len() > 1 {
        return Err(RotationError::Disconnected);
    }
    let scheme = IxScheme::from_rotation_system(&ig, &ids, r)?;
    let flips = scheme.normalizing_flips(&ig);

    let mut out = r.clone();
    for (vidx, flip) in flips.iter().enumerate() {
        if !flip {
            continue;
        }
        let vid = &ids.vids[vidx];
        if let Some(rot) = out.rotation.get_mut(vid) {
            rot.reverse();
        }
    }
    // An edge's signature toggles once per flipped endpoint.
    for (e, &[a, b]) in ig.edges.iter().enumerate() {
        let toggles = flips[a as usize] as u8 + flips[b as usize] as u8;
        if toggles == 1 {
            let eid = ids.eids[e].clone();
            let s = out.signature.get(&eid).copied().unwrap_or(1);
            out.signature.insert(eid, -s);
        }
    }
    Ok(out)
}

/// Checks an embedding certificate against its graph: the rotation system must
/// be valid, honor every rigid constraint (the prescribed rotation or its
/// reversal), and embed in the claimed surface.
///
/// For disconnected graphs the claim combines per-component Euler genera:
/// orientable surfaces need every component orientable with total genus within
/// the claim; a nonorientable surface of genus k hosts the components if their
/// Euler genera sum to at most k (when some component is nonorientable) or at
/// most k - 1 (when all are orientable, one crosscap being spent to place the
/// orientable pieces).
pub fn verify_embedding(g: &SpecialGraph, cert: &EmbeddingCertificate) -> Result<(), String> {
    let (ig, ids) = Ig::build(g).map_err(|e| format!("{e}"))?;
    let scheme = IxScheme::from_rotation_system(&ig, &ids, &cert.rotation_system)
        .map_err(|e| format!("{e}"))?;
    // Rigid vertices: claimed rotation must be the prescription or its reversal.
    for (v, prescribed) in &g.rigid {
        let claimed = cert
            .rotation_system
            .rotation
            .get(v)
            .ok_or_else(|| format!("no rotation for rigid vertex {v}"))?;
        if !cyclic_eq_or_reversed(claimed, prescribed) {
            return Err(format!("rotation at rigid vertex {v} violates the prescription"));
        }
    }
    check_surface_claim(&ig, &scheme, cert.surface)
}

/// True when `a` equals `b` as a cyclic sequence, in either orientation.
pub(crate) fn cyclic_eq_or_reversed(a: &[EdgeEnd], b: &[EdgeEnd]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let n = a.len();
    let matches = |rev: bool| {
        (0..n).any(|shift| {
            (0..n).all(|i| {
                let bi = if rev { (shift + n - i) % n } else { (shift + i) % n };
                a[i] == b[bi]
            })
        })
    };
    matches(false) || matches(true)
}

pub(crate) fn check_surface_claim(
    ig: &Ig,
    scheme: &IxScheme,
    claim: Surface,
) -> Result<(), String> {
    let mut total_eg = 0u64;
    let mut any_nonorientable = false;
    let mut any_edges = false;
    for comp in ig.components() {
        let profile = scheme.component_profile(ig, &comp);
        total_eg += profile.euler_genus as u64;
        any_nonorientable |= !profile.orientable;
        any_edges |= profile.edges > 0;
    }
    if claim.is_orientable() {
        if any_nonorientable {
            return Err(format!("nonorientable embedding claimed on {claim}"));
        }
        if total_eg > 2 * claim.genus() as u64 {
            return Err(format!(
                "embedding has Euler genus {total_eg}, exceeding {claim}"
            ));
        }
    } else {
        let needed = if any_nonorientable || !any_edges { total_eg } else { total_eg + 1 };
        if needed > claim.genus() as u64 {
            return Err(format!(
                "embedding needs nonorientable genus {needed}, exceeding {claim}"
            ));
        }
    }
    Ok(())
}

fn build_scheme_input(g: &MultiGraph) -> Result<(Ig, IdMaps), RotationError> {
    Ig::build(&SpecialGraph::plain(g.clone())).map_err(|e| match e {
        GraphError::Invalid(s) => RotationError::Graph(s),
        other => RotationError::Graph(format!("{other}")),
    })
}

/// Index-world embedding scheme: successor/predecessor per end, sign per edge.
#[derive(Clone, Debug)]
pub(crate) struct IxScheme {
    pub rot_next: Vec<u32>,
    pub rot_prev: Vec<u32>,
    pub neg: Vec<bool>,
}

pub(crate) struct IxFaces {
    /// One walk per face, as dart sequences; mirror orbits deduplicated.
    pub walks: Vec<Vec<u32>>,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct ComponentProfile {
    pub euler_genus: u32,
    pub orientable: bool,
    pub edges: usize,
}

impl IxScheme {
    pub fn from_rotation_system(
        ig: &Ig,
        ids: &IdMaps,
        r: &RotationSystem,
    ) -> Result<IxScheme, RotationError> {
        let ne = ig.ne();
        let mut neg = vec![false; ne];
        for (eid, &s) in &r.signature {
            let e = ids
                .edge_index(eid)
                .ok_or_else(|| RotationError::Graph(format!("unknown edge {eid} in signature")))?;
            match s {
                1 => {}
                -1 => neg[e as usize] = true,
                _ => return Err(RotationError::BadSignature(eid.clone())),
            }
        }
        let mut rot_next = vec![u32::MAX; 2 * ne];
        let mut rot_prev = vec![u32::MAX; 2 * ne];
        for (vidx, vid) in ids.vids.iter().enumerate() {
            let want = &ig.inc[vidx];
            if want.is_empty() {
                continue;
            }
            let rot = r
                .rotation
                .get(vid)
                .ok_or_else(|| RotationError::MissingRotation(vid.clone()))?;
            if rot.len() != want.len() {
                return Err(RotationError::BadRotation(vid.clone()));
            }
            let mut ends = Vec::with_capacity(rot.len());
            for end in rot {
                let e = ids
                    .edge_index(&end.edge)
                    .ok_or_else(|| RotationError::BadRotation(vid.clone()))?;
                if end.end > 1 {
                    return Err(RotationError::BadRotation(vid.clone()));
                }
                ends.push(2 * e + end.end as u32);
            }
            let mut sorted = ends.clone();
            sorted.sort_unstable();
            if sorted != *want {
                return Err(RotationError::BadRotation(vid.clone()));
            }
            for (i, &end) in ends.iter().enumerate() {
                let next = ends[(i + 1) % ends.len()];
                rot_next[end as usize] = next;
                rot_prev[next as usize] = end;
            }
        }
        Ok(IxScheme { rot_next, rot_prev, neg })
    }

    /// Builds the scheme directly from index-world rotations.
    pub fn from_parts(ne: usize, rotations: &[Vec<u32>], neg: Vec<bool>) -> IxScheme {
        let mut rot_next = vec![u32::MAX; 2 * ne];
        let mut rot_prev = vec![u32::MAX; 2 * ne];
        for rot in rotations {
            for (i, &end) in rot.iter().enumerate() {
                let next = rot[(i + 1) % rot.len()];
                rot_next[end as usize] = next;
                rot_prev[next as usize] = end;
            }
        }
        IxScheme { rot_next, rot_prev, neg }
    }

    /// Successor state of `(dart, flag)` around its face.
    #[inline]
    fn step(&self, dart: u32, flag: bool) -> (u32, bool) {
        let f = flag ^ self.neg[(dart / 2) as usize];
        let arrive = dart ^ 1;
        let out = if f {
            self.rot_prev[arrive as usize]
        } else {
            self.rot_next[arrive as usize]
        };
        (out, f)
    }

    /// All faces, one walk per face (the orbit containing the least state of
    /// its mirror pair, rotated to start at that state), sorted by start.
    pub fn trace(&self) -> IxFaces {
        let ndarts = self.rot_next.len();
        let mut seen = vec![false; 2 * ndarts];
        let mut walks = Vec::new();
        for start_dart in 0..ndarts as u32 {
            if self.rot_next[start_dart as usize] == u32::MAX {
                continue; // end of a dropped/absent edge slot
            }
            for start_flag in [false, true] {
                let sid = (start_dart as usize) << 1 | start_flag as usize;
                if seen[sid] {
                    continue;
                }
                let mut walk = Vec::new();
                let (mut d, mut f) = (start_dart, start_flag);
                loop {
                    let id = (d as usize) << 1 | f as usize;
                    if seen[id] {
                        break;
                    }
                    seen[id] = true;
                    walk.push(d);
                    (d, f) = self.step(d, f);
                }
                // The mirror orbit (reverse traversal) starts later and is
                // skipped by the seen marks only within one orbit; mark it
                // explicitly so each face is reported once.
                let (mut md, mut mf) = mirror_state(self, start_dart, start_flag);
                loop {
                    let id = (md as usize) << 1 | mf as usize;
                    if seen[id] {
                        break;
                    }
                    seen[id] = true;
                    (md, mf) = self.step(md, mf);
                }
                walks.push(walk);
            }
        }
        walks.sort();
        IxFaces { walks }
    }

    /// Euler genus and orientability of one component (sorted vertex list).
    pub fn component_profile(&self, ig: &Ig, comp: &[u32]) -> ComponentProfile {
        let edges: usize = comp
            .iter()
            .flat_map(|&v| ig.inc[v as usize].iter())
            .filter(|&&end| end & 1 == 0)
            .count();
        if edges == 0 {
            return ComponentProfile { euler_genus: 0, orientable: true, edges };
        }
        let mut faces = 0usize;
        let mut seen = BTreeSet::new();
        for &v in comp {
            for &end in &ig.inc[v as usize] {
                for flag in [false, true] {
                    if self.rot_next[end as usize] == u32::MAX {
                        continue;
                    }
                    if seen.contains(&(end, flag)) {
                        continue;
                    }
                    let (mut d, mut f) = (end, flag);
                    while seen.insert((d, f)) {
                        (d, f) = self.step(d, f);
                    }
                    faces += 1;
                }
            }
        }
        faces /= 2;
        let euler_genus = (2 + edges - comp.len() - faces) as u32;
        let orientable = self.component_orientable(ig, comp);
        ComponentProfile { euler_genus, orientable, edges }
    }

    /// Orientable iff every cycle has positive sign product; checked by
    /// 2-coloring a spanning tree.
    fn component_orientable(&self, ig: &Ig, comp: &[u32]) -> bool {
        let flips = self.normalizing_flips_from(ig, comp[0]);
        for &v in comp {
            for &end in &ig.inc[v as usize] {
                if end & 1 == 1 {
                    continue;
                }
                let e = (end / 2) as usize;
                let [a, b] = ig.edges[e];
                let s = self.neg[e] ^ flips[a as usize] ^ flips[b as usize];
                if s {
                    return false;
                }
            }
        }
        true
    }

    fn normalizing_flips(&self, ig: &Ig) -> Vec<bool> {
        self.normalizing_flips_from(ig, 0)
    }

    /// Vertex flips that make a BFS tree all-positive (component of `root`;
    /// other components untouched if present).
    fn normalizing_flips_from(&self, ig: &Ig, root: u32) -> Vec<bool> {
        let mut flips = vec![false; ig.nv];
        let mut visited = vec![false; ig.nv];
        if ig.nv == 0 {
            return flips;
        }
        let mut queue = alloc::collections::VecDeque::new();
        for start in core::iter::once(root).chain(0..ig.nv as u32) {
            if visited[start as usize] {
                continue;
            }
            visited[start as usize] = true;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &end in &ig.inc[v as usize] {
                    let e = (end / 2) as usize;
                    let w = ig.end_vertex(end ^ 1);
                    if visited[w as usize] {
                        continue;
                    }
                    visited[w as usize] = true;
                    flips[w as usize] = flips[v as usize] ^ self.neg[e];
                    queue.push_back(w);
                }
            }
        }
        flips
    }
}

#[inline]
fn mirror_state(scheme: &IxScheme, dart: u32, flag: bool) -> (u32, bool) {
    // Reverse traversal of the same face: step backwards from (dart, flag).
    // The mirror orbit of an orbit through (d, f) passes through the state
    // that leaves the same edge side in the opposite direction.
    let f = flag ^ scheme.neg[(dart / 2) as usize];
    (dart ^ 1, !f)
}
