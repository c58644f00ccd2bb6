//! Independent brute-force oracles and small builders, test code only.
//!
//! The enumerators here deliberately share nothing with the search engine:
//! plain nested loops over all rotations (and all edge signatures), with
//! their own face walking.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{MultiGraph, SpecialGraph};

pub(crate) fn complete(n: u32) -> Vec<[u32; 2]> {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            edges.push([a, b]);
        }
    }
    edges
}

pub(crate) fn complete_bipartite(a: u32, b: u32) -> Vec<[u32; 2]> {
    let mut edges = Vec::new();
    for x in 0..a {
        for y in 0..b {
            edges.push([x, a + y]);
        }
    }
    edges
}

/// Plain special graph on vertices `v0..v{nv-1}` with edges `e0, e1, ...`.
pub(crate) fn special_from_edges(nv: u32, edges: &[[u32; 2]]) -> SpecialGraph {
    let vnames: Vec<alloc::string::String> = (0..nv).map(|i| format!("v{i}")).collect();
    let enames: Vec<alloc::string::String> =
        (0..edges.len()).map(|i| format!("e{i:03}")).collect();
    let mg = MultiGraph {
        vertices: vnames.iter().map(|s| s.as_str().into()).collect(),
        edges: edges
            .iter()
            .zip(&enames)
            .map(|(&[a, b], id)| {
                crate::graph::Edge::new(id.as_str(), vnames[a as usize].as_str(), vnames[b as usize].as_str())
            })
            .collect(),
    };
    SpecialGraph::plain(mg)
}

struct Enumerator {
    nv: usize,
    ne: usize,
    /// Incident end ids per vertex (end = 2e + side), ascending.
    inc: Vec<Vec<u32>>,
    edges: Vec<[u32; 2]>,
}

impl Enumerator {
    fn new(nv: usize, edges: &[[u32; 2]]) -> Self {
        let mut inc = vec![Vec::new(); nv];
        for (e, &[a, b]) in edges.iter().enumerate() {
            inc[a as usize].push(2 * e as u32);
            inc[b as usize].push(2 * e as u32 + 1);
        }
        Enumerator { nv, ne: edges.len(), inc, edges: edges.to_vec() }
    }

    /// Visits every rotation system (product of per-vertex cyclic orders).
    fn for_each_rotation(&self, mut f: impl FnMut(&[Vec<u32>])) {
        let mut options: Vec<Vec<Vec<u32>>> = Vec::new();
        for v in 0..self.nv {
            let ends = &self.inc[v];
            if ends.len() <= 2 {
                options.push(vec![ends.clone()]);
                continue;
            }
            let mut perms = Vec::new();
            let mut rest: Vec<u32> = ends[1..].to_vec();
            permute_all(&mut rest, 0, &mut |p| {
                let mut rot = vec![ends[0]];
                rot.extend_from_slice(p);
                perms.push(rot);
            });
            options.push(perms);
        }
        let mut idx = vec![0usize; self.nv];
        let mut current: Vec<Vec<u32>> = options.iter().map(|o| o[0].clone()).collect();
        loop {
            f(&current);
            let mut v = 0;
            loop {
                if v == self.nv {
                    return;
                }
                idx[v] += 1;
                if idx[v] < options[v].len() {
                    current[v] = options[v][idx[v]].clone();
                    break;
                }
                idx[v] = 0;
                current[v] = options[v][0].clone();
                v += 1;
            }
        }
    }

    /// Face count of a scheme via double-cover orbit walking.
    fn faces(&self, rotations: &[Vec<u32>], neg: &[bool]) -> usize {
        let mut succ = vec![u32::MAX; 2 * self.ne];
        let mut pred = vec![u32::MAX; 2 * self.ne];
        for rot in rotations {
            for (i, &end) in rot.iter().enumerate() {
                succ[end as usize] = rot[(i + 1) % rot.len()];
                pred[rot[(i + 1) % rot.len()] as usize] = end;
            }
        }
        let mut seen = vec![false; 4 * self.ne];
        let mut orbits = 0;
        for start in 0..4 * self.ne {
            if seen[start] {
                continue;
            }
            orbits += 1;
            let (mut d, mut f) = ((start / 2) as u32, start % 2 == 1);
            loop {
                let id = 2 * d as usize + f as usize;
                if seen[id] {
                    break;
                }
                seen[id] = true;
                let nf = f ^ neg[(d / 2) as usize];
                let arrive = d ^ 1;
                d = if nf { pred[arrive as usize] } else { succ[arrive as usize] };
                f = nf;
            }
        }
        orbits / 2
    }

    /// Is any cycle negative? (Orientability check by tree 2-coloring.)
    fn is_nonorientable(&self, neg: &[bool]) -> bool {
        let mut color = vec![2u8; self.nv];
        for root in 0..self.nv {
            if color[root] != 2 {
                continue;
            }
            color[root] = 0;
            let mut stack = vec![root as u32];
            while let Some(v) = stack.pop() {
                for &end in &self.inc[v as usize] {
                    let e = (end / 2) as usize;
                    let [a, b] = self.edges[e];
                    let w = if a == v { b } else { a };
                    let want = color[v as usize] ^ neg[e] as u8;
                    if color[w as usize] == 2 {
                        color[w as usize] = want;
                        stack.push(w);
                    } else if color[w as usize] != want {
                        return true;
                    }
                }
            }
        }
        false
    }
}

fn permute_all(a: &mut Vec<u32>, k: usize, f: &mut impl FnMut(&[u32])) {
    if k == a.len() {
        f(a);
        return;
    }
    for i in k..a.len() {
        a.swap(k, i);
        permute_all(a, k + 1, f);
        a.swap(k, i);
    }
}

/// Minimum Euler genus over all schemes of the requested orientability
/// class, by full enumeration of rotations and signatures. None when the
/// class is empty (forests, nonorientable). Connected input only.
pub(crate) fn naive_min_euler_genus(
    nv: usize,
    edges: &[[u32; 2]],
    orientable: bool,
) -> Option<u32> {
    let en = Enumerator::new(nv, edges);
    let ne = edges.len();
    let mut best: Option<u32> = None;
    let signatures: Vec<Vec<bool>> = if orientable {
        vec![vec![false; ne]]
    } else {
        (1..1u64 << ne).map(|m| (0..ne).map(|e| m >> e & 1 == 1).collect()).collect()
    };
    for neg in &signatures {
        if !orientable && !en.is_nonorientable(neg) {
            continue;
        }
        en.for_each_rotation(|rot| {
            let f = en.faces(rot, neg);
            let eg = (2 + ne - nv - f) as u32;
            if best.map_or(true, |b| eg < b) {
                best = Some(eg);
            }
        });
    }
    best
}

/// Planarity by exhaustive rotation enumeration, componentwise.
pub(crate) fn naive_is_planar(nv: usize, edges: &[[u32; 2]]) -> bool {
    // Split into components first to keep the product spaces tiny.
    let mut comp = vec![usize::MAX; nv];
    let mut adj = vec![Vec::new(); nv];
    for &[a, b] in edges {
        adj[a as usize].push(b);
        adj[b as usize].push(a);
    }
    let mut ncomp = 0;
    for root in 0..nv {
        if comp[root] != usize::MAX {
            continue;
        }
        comp[root] = ncomp;
        let mut stack = vec![root as u32];
        while let Some(v) = stack.pop() {
            for &w in &adj[v as usize] {
                if comp[w as usize] == usize::MAX {
                    comp[w as usize] = ncomp;
                    stack.push(w);
                }
            }
        }
        ncomp += 1;
    }
    for c in 0..ncomp {
        let verts: Vec<u32> = (0..nv as u32).filter(|&v| comp[v as usize] == c).collect();
        let vmap: alloc::collections::BTreeMap<u32, u32> =
            verts.iter().enumerate().map(|(i, &v)| (v, i as u32)).collect();
        let cedges: Vec<[u32; 2]> = edges
            .iter()
            .filter(|&&[a, _]| comp[a as usize] == c)
            .map(|&[a, b]| [vmap[&a], vmap[&b]])
            .collect();
        if cedges.is_empty() {
            continue;
        }
        match naive_min_euler_genus(verts.len(), &cedges, true) {
            Some(0) => {}
            _ => return false,
        }
    }
    true
}

/// All connected simple graphs with at most `max_edges` edges and no isolated
/// vertices, one representative per isomorphism class.
pub(crate) fn connected_graphs_up_to(max_edges: usize) -> Vec<(usize, Vec<[u32; 2]>)> {
    let mut out: Vec<(usize, Vec<[u32; 2]>)> = vec![(1, Vec::new())];
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    // Grow by adding one edge at a time: every connected graph arises from a
    // connected subgraph by adding an edge (take a spanning tree order).
    let mut frontier: Vec<(usize, Vec<[u32; 2]>)> = vec![(2, vec![[0, 1]])];
    seen.insert(canon(2, &[[0, 1]]));
    out.push((2, vec![[0, 1]]));
    for _ in 2..=max_edges {
        let mut next = Vec::new();
        for (nv, edges) in &frontier {
            // Extend with an edge between existing vertices, or to one new.
            for a in 0..*nv as u32 {
                for b in a + 1..=*nv as u32 {
                    let add_nv = if b == *nv as u32 { nv + 1 } else { *nv };
                    let mut e2 = edges.clone();
                    if e2.contains(&[a, b]) {
                        continue;
                    }
                    e2.push([a, b]);
                    e2.sort_unstable();
                    let key = canon(add_nv, &e2);
                    if seen.insert(key) {
                        next.push((add_nv, e2.clone()));
                        out.push((add_nv, e2));
                    }
                }
            }
        }
        frontier = next;
    }
    out
}

/// Canonical form: lexicographically least sorted edge list over the vertex
/// relabelings that sort by descending degree (isomorphisms preserve degree,
/// so permuting within degree classes suffices).
fn canon(nv: usize, edges: &[[u32; 2]]) -> Vec<u64> {
    let mut deg = vec![0u32; nv];
    for &[a, b] in edges {
        deg[a as usize] += 1;
        deg[b as usize] += 1;
    }
    let mut by_degree: Vec<u32> = (0..nv as u32).collect();
    by_degree.sort_by_key(|&v| core::cmp::Reverse(deg[v as usize]));
    let mut classes: Vec<Vec<u32>> = Vec::new();
    for &v in &by_degree {
        match classes.last_mut() {
            Some(cl) if deg[cl[0] as usize] == deg[v as usize] => cl.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut label = vec![0u32; nv];
    let mut best: Option<Vec<u64>> = None;
    fn rec(
        classes: &mut [Vec<u32>],
        ci: usize,
        next_label: u32,
        label: &mut [u32],
        edges: &[[u32; 2]],
        best: &mut Option<Vec<u64>>,
    ) {
        if ci == classes.len() {
            let mut relab: Vec<u64> = edges
                .iter()
                .map(|&[a, b]| {
                    let (x, y) = (label[a as usize], label[b as usize]);
                    let (x, y) = if x <= y { (x, y) } else { (y, x) };
                    (x as u64) << 32 | y as u64
                })
                .collect();
            relab.sort_unstable();
            if best.as_ref().map_or(true, |b| relab < *b) {
                *best = Some(relab);
            }
            return;
        }
        let len = classes[ci].len();
        fn perm_rec(
            classes: &mut [Vec<u32>],
            ci: usize,
            k: usize,
            next_label: u32,
            label: &mut [u32],
            edges: &[[u32; 2]],
            best: &mut Option<Vec<u64>>,
        ) {
            if k == classes[ci].len() {
                for (i, &v) in classes[ci].iter().enumerate() {
                    label[v as usize] = next_label + i as u32;
                }
                let step = classes[ci].len() as u32;
                rec(classes, ci + 1, next_label + step, label, edges, best);
                return;
            }
            for i in k..classes[ci].len() {
                classes[ci].swap(k, i);
                perm_rec(classes, ci, k + 1, next_label, label, edges, best);
                classes[ci].swap(k, i);
            }
        }
        let _ = len;
        perm_rec(classes, ci, 0, next_label, label, edges, best);
    }
    rec(&mut classes, 0, 0, &mut label, edges, &mut best);
    let mut key = best.unwrap_or_default();
    key.insert(0, nv as u64);
    key
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_values_match_the_classics() {
        assert_eq!(naive_min_euler_genus(4, &complete(4), true), Some(0));
        assert_eq!(naive_min_euler_genus(5, &complete(5), true), Some(2));
        assert_eq!(naive_min_euler_genus(5, &complete(5), false), Some(1));
        assert_eq!(naive_min_euler_genus(3, &[[0, 1], [1, 2]], false), None);
        assert!(naive_is_planar(4, &complete(4)));
        assert!(!naive_is_planar(5, &complete(5)));
    }

    #[test]
    fn small_graph_census_counts() {
        // Connected simple graphs by edge count: 1, 1, 3, 5, 12, 30, 79 for
        // m = 1..7 (plus the single vertex at m = 0).
        let all = connected_graphs_up_to(7);
        let mut by_edges = [0usize; 8];
        for (_, edges) in &all {
            by_edges[edges.len()] += 1;
        }
        assert_eq!(by_edges[1..8], [1, 1, 3, 5, 12, 30, 79]);
    }
}
