//! Linear-time planarity testing (left-right criterion), plus a reduction
//! from rigid-constrained planarity to plain planarity.
//!
//! A rigid vertex of degree >= 4 is caged by one thick cycle that meets the
//! incident edges in rotation order: in a planar embedding the cage cycle
//! bounds a disc around the vertex, and disjoint curves from an interior
//! point to the boundary circle meet the circle in their cyclic order at the
//! point, so the caged graph is planar exactly when the special graph has a
//! rotation-respecting planar embedding. Rotations of degree <= 3 vertices
//! are vacuous up to reflection and need no cage.

use alloc::vec;
use alloc::vec::Vec;

use crate::index::Ig;

const NONE: u32 = u32::MAX;

/// Planarity of the underlying multigraph, ignoring thickness and rigidity.
#[allow(dead_code)]
pub(crate) fn is_planar_multigraph(ig: &Ig) -> bool {
    let mut pairs: Vec<[u32; 2]> = ig
        .edges
        .iter()
        .map(|&[a, b]| if a <= b { [a, b] } else { [b, a] })
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    is_planar_edge_list(ig.nv, &pairs)
}

/// Planarity of a special graph respecting its rigid rotations (thickness is
/// irrelevant in an embedding). Uses the single-cycle cage reduction.
pub(crate) fn is_planar_rigid(ig: &Ig) -> bool {
    let mut scratch = CageScratch::default();
    is_planar_rigid_with(ig, &mut scratch)
}

pub(crate) fn is_planar_rigid_with(ig: &Ig, scratch: &mut CageScratch) -> bool {
    cage_expand(ig, scratch);
    scratch.normalize_dedup();
    is_planar_edge_list(scratch.nv, &scratch.edges)
}

/// Reusable buffers for the cage expansion; the solver calls this once per
/// candidate configuration.
#[derive(Default)]
pub(crate) struct CageScratch {
    pub nv: usize,
    pub edges: Vec<[u32; 2]>,
}

impl CageScratch {
    fn normalize_dedup(&mut self) {
        for e in self.edges.iter_mut() {
            if e[0] > e[1] {
                e.swap(0, 1);
            }
        }
        self.edges.sort_unstable();
        self.edges.dedup();
    }
}

/// Rewrites rigid vertices of degree >= 4 into caged wheels and leaves
/// everything else untouched. Output goes to `scratch`.
pub(crate) fn cage_expand(ig: &Ig, scratch: &mut CageScratch) {
    scratch.edges.clear();
    scratch.edges.extend_from_slice(&ig.edges);
    let mut next_vertex = ig.nv as u32;
    for v in 0..ig.nv as u32 {
        let Some(rot) = &ig.rigid[v as usize] else { continue };
        if rot.len() < 4 {
            continue;
        }
        let d = rot.len() as u32;
        let first_cage = next_vertex;
        next_vertex += d;
        for (i, &end) in rot.iter().enumerate() {
            let cage = first_cage + i as u32;
            // Reroute the incident end through its cage vertex.
            scratch.edges[(end / 2) as usize][(end & 1) as usize] = cage;
            // Spoke and cage cycle edge.
            scratch.edges.push([v, cage]);
            scratch.edges.push([cage, first_cage + ((i as u32 + 1) % d)]);
        }
    }
    scratch.nv = next_vertex as usize;
}

/// Left-right planarity test on a simple loop-free graph given as a deduped
/// edge list.
pub(crate) fn is_planar_edge_list(nv: usize, edges: &[[u32; 2]]) -> bool {
    let ne = edges.len();
    // Kuratowski subgraphs need at least 9 edges.
    if ne < 9 {
        return true;
    }
    if nv >= 3 && ne > 3 * nv - 6 {
        return false;
    }
    Lr::new(nv, edges).run()
}

/// Half-edge indexing: half-edge `2e` traverses `edges[e]` as stored,
/// `2e + 1` reversed.
struct Lr<'a> {
    edges: &'a [[u32; 2]],
    /// Incident half-edges per vertex (later: outgoing, sorted by nesting).
    adj: Vec<Vec<u32>>,
    height: Vec<u32>,
    parent_edge: Vec<u32>,
    /// Per undirected edge: 2 = unoriented, else the chosen half-edge parity.
    orient: Vec<u8>,
    lowpt: Vec<u32>,
    lowpt2: Vec<u32>,
    nesting: Vec<u32>,
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<u32>,
    eref: Vec<u32>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Interval {
    low: u32,
    high: u32,
}

impl Interval {
    const EMPTY: Interval = Interval { low: NONE, high: NONE };

    #[inline]
    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Clone, Copy, Debug)]
struct ConflictPair {
    l: Interval,
    r: Interval,
}

impl<'a> Lr<'a> {
    fn new(nv: usize, edges: &'a [[u32; 2]]) -> Self {
        let ne = edges.len();
        let mut adj = vec![Vec::new(); nv];
        for (i, &[a, b]) in edges.iter().enumerate() {
            debug_assert!(a != b);
            adj[a as usize].push(2 * i as u32);
            adj[b as usize].push(2 * i as u32 + 1);
        }
        Lr {
            edges,
            adj,
            height: vec![NONE; nv],
            parent_edge: vec![NONE; nv],
            orient: vec![2; ne],
            lowpt: vec![0; 2 * ne],
            lowpt2: vec![0; 2 * ne],
            nesting: vec![0; 2 * ne],
            stack: Vec::new(),
            stack_bottom: vec![0; 2 * ne],
            lowpt_edge: vec![NONE; 2 * ne],
            eref: vec![NONE; 2 * ne],
        }
    }

    #[inline]
    fn target(&self, he: u32) -> u32 {
        self.edges[(he / 2) as usize][(1 - (he & 1)) as usize]
    }

    #[inline]
    fn source(&self, he: u32) -> u32 {
        self.edges[(he / 2) as usize][(he & 1) as usize]
    }

    fn run(mut self) -> bool {
        let nv = self.height.len();
        for root in 0..nv as u32 {
            if self.height[root as usize] == NONE {
                self.height[root as usize] = 0;
                self.dfs1(root);
            }
        }
        // Keep only outgoing half-edges, sorted by nesting depth.
        let mut ordered: Vec<Vec<u32>> = vec![Vec::new(); nv];
        for (v, list) in self.adj.iter().enumerate() {
            let mut out: Vec<u32> = list
                .iter()
                .copied()
                .filter(|&he| self.orient[(he / 2) as usize] == (he & 1) as u8)
                .collect();
            debug_assert!(out.iter().all(|&he| self.source(he) == v as u32));
            out.sort_by_key(|&he| (self.nesting[he as usize], he));
            ordered[v] = out;
        }
        self.adj = ordered;
        for root in 0..nv as u32 {
            if self.parent_edge[root as usize] == NONE && !self.dfs2(root) {
                return false;
            }
        }
        true
    }

    fn dfs1(&mut self, v: u32) {
        let e = self.parent_edge[v as usize];
        let hv = self.height[v as usize];
        for idx in 0..self.adj[v as usize].len() {
            let he = self.adj[v as usize][idx];
            let eu = (he / 2) as usize;
            if self.orient[eu] != 2 {
                continue;
            }
            self.orient[eu] = (he & 1) as u8;
            let w = self.target(he);
            self.lowpt[he as usize] = hv;
            self.lowpt2[he as usize] = hv;
            if self.height[w as usize] == NONE {
                // Tree edge.
                self.parent_edge[w as usize] = he;
                self.height[w as usize] = hv + 1;
                self.dfs1(w);
            } else {
                // Back edge.
                self.lowpt[he as usize] = self.height[w as usize];
            }
            self.nesting[he as usize] = 2 * self.lowpt[he as usize]
                + (self.lowpt2[he as usize] < hv) as u32;
            if e != NONE {
                let (le, lhe) = (self.lowpt[e as usize], self.lowpt[he as usize]);
                if lhe < le {
                    self.lowpt2[e as usize] = le.min(self.lowpt2[he as usize]);
                    self.lowpt[e as usize] = lhe;
                } else if lhe > le {
                    self.lowpt2[e as usize] = self.lowpt2[e as usize].min(lhe);
                } else {
                    self.lowpt2[e as usize] =
                        self.lowpt2[e as usize].min(self.lowpt2[he as usize]);
                }
            }
        }
    }

    fn dfs2(&mut self, v: u32) -> bool {
        let e = self.parent_edge[v as usize];
        let hv = self.height[v as usize];
        let out = self.adj[v as usize].clone();
        for (i, &ei) in out.iter().enumerate() {
            self.stack_bottom[ei as usize] = self.stack.len();
            let w = self.target(ei);
            if self.parent_edge[w as usize] == ei {
                if !self.dfs2(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei as usize] = ei;
                self.stack.push(ConflictPair {
                    l: Interval::EMPTY,
                    r: Interval { low: ei, high: ei },
                });
            }
            if self.lowpt[ei as usize] < hv {
                // ei has a return edge strictly below v.
                if i == 0 {
                    if e != NONE {
                        self.lowpt_edge[e as usize] = self.lowpt_edge[out[0] as usize];
                    }
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if e != NONE {
            let u = self.source(e);
            self.trim_back_edges(u);
            if self.lowpt[e as usize] < self.height[u as usize] {
                if let Some(top) = self.stack.last() {
                    let hl = top.l.high;
                    let hr = top.r.high;
                    self.eref[e as usize] = if hl != NONE
                        && (hr == NONE || self.lowpt[hl as usize] > self.lowpt[hr as usize])
                    {
                        hl
                    } else {
                        hr
                    };
                }
            }
        }
        true
    }

    fn add_constraints(&mut self, ei: u32, e: u32) -> bool {
        debug_assert!(e != NONE);
        let mut p = ConflictPair { l: Interval::EMPTY, r: Interval::EMPTY };
        // Merge the return edges of ei into p.r.
        loop {
            let mut q = self.stack.pop().expect("return edge guarantees a pair");
            if !q.l.is_empty() {
                core::mem::swap(&mut q.l, &mut q.r);
            }
            if !q.l.is_empty() {
                return false;
            }
            debug_assert!(q.r.low != NONE);
            if self.lowpt[q.r.low as usize] > self.lowpt[e as usize] {
                // Merge intervals.
                if p.r.is_empty() {
                    p.r.high = q.r.high;
                } else {
                    self.eref[p.r.low as usize] = q.r.high;
                }
                p.r.low = q.r.low;
            } else {
                // Align with the lowest return edge of the parent.
                self.eref[q.r.low as usize] = self.lowpt_edge[e as usize];
            }
            if self.stack.len() == self.stack_bottom[ei as usize] {
                break;
            }
        }
        // Merge conflicting return edges of earlier siblings into p.l.
        loop {
            let Some(top) = self.stack.last() else { break };
            if !self.conflicting(top.l, ei) && !self.conflicting(top.r, ei) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(q.r, ei) {
                core::mem::swap(&mut q.l, &mut q.r);
            }
            if self.conflicting(q.r, ei) {
                return false;
            }
            // Merge the non-conflicting interval below lowpt(ei) into p.r.
            debug_assert!(p.r.low != NONE);
            self.eref[p.r.low as usize] = q.r.high;
            if q.r.low != NONE {
                p.r.low = q.r.low;
            }
            if p.l.is_empty() {
                p.l.high = q.l.high;
            } else {
                self.eref[p.l.low as usize] = q.l.high;
            }
            p.l.low = q.l.low;
        }
        if !(p.l.is_empty() && p.r.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    #[inline]
    fn conflicting(&self, i: Interval, b: u32) -> bool {
        !i.is_empty() && self.lowpt[i.high as usize] > self.lowpt[b as usize]
    }

    fn lowest(&self, p: &ConflictPair) -> u32 {
        match (p.l.low, p.r.low) {
            (NONE, NONE) => NONE,
            (NONE, r) => self.lowpt[r as usize],
            (l, NONE) => self.lowpt[l as usize],
            (l, r) => self.lowpt[l as usize].min(self.lowpt[r as usize]),
        }
    }

    fn trim_back_edges(&mut self, u: u32) {
        let hu = self.height[u as usize];
        // Drop entire conflict pairs returning exactly to u.
        while let Some(top) = self.stack.last() {
            if self.lowest(top) == hu {
                self.stack.pop();
            } else {
                break;
            }
        }
        // Trim the topmost remaining pair.
        if let Some(mut p) = self.stack.pop() {
            while p.l.high != NONE && self.target(p.l.high) == u {
                p.l.high = self.eref[p.l.high as usize];
            }
            if p.l.high == NONE && p.l.low != NONE {
                self.eref[p.l.low as usize] = p.r.low;
                p.l.low = NONE;
            }
            while p.r.high != NONE && self.target(p.r.high) == u {
                p.r.high = self.eref[p.r.high as usize];
            }
            if p.r.high == NONE && p.r.low != NONE {
                self.eref[p.r.low as usize] = p.l.low;
                p.r.low = NONE;
            }
            self.stack.push(p);
        }
    }
}
