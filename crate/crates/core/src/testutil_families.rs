//! Test-only helpers for family structure checks: degree-2 smoothing and
//! isomorphism of special graphs (thickness and rigidity respecting).
//! Simple graphs only: rotations can be tracked as far-endpoint sequences.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use crate::faces::cyclic_eq_or_reversed;
use crate::graph::{Edge, EdgeEnd, EdgeId, SpecialGraph, VertexId};

/// Suppresses non-rigid degree-2 vertices: their two edges merge into one
/// (which must agree on thickness). Isolated vertices are dropped.
pub(crate) fn smooth_degree_two(g: &SpecialGraph) -> SpecialGraph {
    let mut g = g.clone();
    // Track rigid rotations as neighbor sequences; rebuild ends at the end.
    let mut rigid_far: BTreeMap<VertexId, Vec<VertexId>> = g
        .rigid
        .iter()
        .map(|(v, rot)| {
            let far = rot
                .iter()
                .map(|end| {
                    let e = g.graph.edge(&end.edge).unwrap();
                    if &e.ends[end.end as usize] == v {
                        e.ends[1 - end.end as usize].clone()
                    } else {
                        e.ends[end.end as usize].clone()
                    }
                })
                .collect();
            (v.clone(), far)
        })
        .collect();

    loop {
        let mut incident: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
        for (i, e) in g.graph.edges.iter().enumerate() {
            incident.entry(e.ends[0].clone()).or_default().push(i);
            incident.entry(e.ends[1].clone()).or_default().push(i);
        }
        let Some((v, inc)) = incident
            .iter()
            .find(|(v, inc)| !rigid_far.contains_key(*v) && inc.len() == 2 && inc[0] != inc[1])
            .map(|(v, inc)| (v.clone(), inc.clone()))
        else {
            break;
        };
        let other = |idx: usize| -> VertexId {
            let e = &g.graph.edges[idx];
            if e.ends[0] == v { e.ends[1].clone() } else { e.ends[0].clone() }
        };
        let (a, b) = (other(inc[0]), other(inc[1]));
        let (id0, id1) = (g.graph.edges[inc[0]].id.clone(), g.graph.edges[inc[1]].id.clone());
        assert_eq!(
            g.thick.contains(&id0),
            g.thick.contains(&id1),
            "smoothing across a thickness change"
        );
        let new_id = EdgeId::new(format!("{id0}+{id1}"));
        let was_thick = g.thick.remove(&id0);
        g.thick.remove(&id1);
        if was_thick {
            g.thick.insert(new_id.clone());
        }
        g.graph.edges.retain(|e| e.id != id0 && e.id != id1);
        g.graph.edges.push(Edge { id: new_id, ends: [a.clone(), b.clone()] });
        g.graph.vertices.retain(|w| *w != v);
        // A rigid neighbor that pointed at v now sees past it.
        for (r, far) in rigid_far.iter_mut() {
            for x in far.iter_mut() {
                if *x == v {
                    *x = if *r == a { b.clone() } else { a.clone() };
                }
            }
        }
    }
    g.graph.vertices.retain(|w| {
        g.graph.edges.iter().any(|e| e.ends.contains(w))
    });
    // Rebuild rigid end references from the far sequences.
    g.rigid = rigid_far
        .into_iter()
        .map(|(v, far)| {
            let rot = far
                .iter()
                .map(|x| {
                    let e = g
                        .graph
                        .edges
                        .iter()
                        .find(|e| {
                            (e.ends[0] == v && &e.ends[1] == x)
                                || (e.ends[1] == v && &e.ends[0] == x)
                        })
                        .expect("simple graph edge between rigid vertex and neighbor");
                    let end = u8::from(e.ends[1] == v);
                    EdgeEnd { edge: e.id.clone(), end }
                })
                .collect();
            (v, rot)
        })
        .collect();
    g
}

/// Isomorphism of special graphs: a vertex bijection preserving edge
/// multiplicities, thickness multiplicities, and rigid rotations up to
/// rotation and reflection. Backtracking with degree pruning; fine for the
/// family sizes used in tests.
pub(crate) fn special_isomorphic(a: &SpecialGraph, b: &SpecialGraph) -> bool {
    if a.graph.vertices.len() != b.graph.vertices.len()
        || a.graph.edges.len() != b.graph.edges.len()
        || a.thick.len() != b.thick.len()
        || a.rigid.len() != b.rigid.len()
    {
        return false;
    }
    let profile = |g: &SpecialGraph, v: &VertexId| -> (usize, usize, bool) {
        let mut deg = 0;
        let mut thick = 0;
        for e in &g.graph.edges {
            for end in &e.ends {
                if end == v {
                    deg += 1;
                    thick += usize::from(g.thick.contains(&e.id));
                }
            }
        }
        (deg, thick, g.rigid.contains_key(v))
    };
    let averts = a.graph.vertices.clone();
    let mut mapping: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    let mut used: BTreeSet<VertexId> = BTreeSet::new();

    fn pair_key(g: &SpecialGraph, x: &VertexId, y: &VertexId) -> (usize, usize) {
        let mut thin = 0;
        let mut thick = 0;
        for e in &g.graph.edges {
            let m = (&e.ends[0] == x && &e.ends[1] == y) || (&e.ends[0] == y && &e.ends[1] == x);
            if m {
                if g.thick.contains(&e.id) {
                    thick += 1;
                } else {
                    thin += 1;
                }
            }
        }
        (thin, thick)
    }

    fn rigid_ok(
        a: &SpecialGraph,
        b: &SpecialGraph,
        mapping: &BTreeMap<VertexId, VertexId>,
    ) -> bool {
        // Simple graphs only: an end is identified by its far endpoint.
        let far = |g: &SpecialGraph, at: &VertexId, end: &EdgeEnd| -> VertexId {
            let e = g.graph.edge(&end.edge).unwrap();
            if &e.ends[end.end as usize] == at {
                e.ends[1 - end.end as usize].clone()
            } else {
                e.ends[end.end as usize].clone()
            }
        };
        for (v, rot) in &a.rigid {
            let w = &mapping[v];
            let Some(rot_b) = b.rigid.get(w) else { return false };
            let seq_a: Vec<EdgeEnd> = rot
                .iter()
                .map(|end| EdgeEnd::new(mapping[&far(a, v, end)].as_str(), 0))
                .collect();
            let seq_b: Vec<EdgeEnd> =
                rot_b.iter().map(|end| EdgeEnd::new(far(b, w, end).as_str(), 0)).collect();
            if !cyclic_eq_or_reversed(&seq_a, &seq_b) {
                return false;
            }
        }
        true
    }

    fn rec(
        a: &SpecialGraph,
        b: &SpecialGraph,
        averts: &[VertexId],
        i: usize,
        mapping: &mut BTreeMap<VertexId, VertexId>,
        used: &mut BTreeSet<VertexId>,
        profile: &dyn Fn(&SpecialGraph, &VertexId) -> (usize, usize, bool),
    ) -> bool {
        if i == averts.len() {
            return rigid_ok(a, b, mapping);
        }
        let v = &averts[i];
        let pv = profile(a, v);
        for w in &b.graph.vertices {
            if used.contains(w) || profile(b, w) != pv {
                continue;
            }
            let ok = averts[..i].iter().all(|x| pair_key(a, v, x) == pair_key(b, w, &mapping[x]));
            if !ok {
                continue;
            }
            mapping.insert(v.clone(), w.clone());
            used.insert(w.clone());
            if rec(a, b, averts, i + 1, mapping, used, profile) {
                return true;
            }
            mapping.remove(v);
            used.remove(w);
        }
        false
    }

    rec(&a, &b, &averts, 0, &mut mapping, &mut used, &profile)
}
