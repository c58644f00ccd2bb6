//! Exact minimum genus and crosscap number by branch-and-bound over rotation
//! systems.
//!
//! The search space per connected piece is: one rotation per vertex (rigid
//! vertices contribute the prescription and its reversal, free vertices all
//! cyclic orders), and for nonorientable embeddings additionally a signature
//! on the co-tree edges of a spanning tree (tree edges are normalized to +1
//! by vertex flips, which halves the exponent). Faces close incrementally as
//! rotations are fixed, and a branch dies once even the most optimistic face
//! count cannot reach to the target Euler genus.
//!
//! Decomposition: parallel edges not touching rigid vertices are folded away
//! (a duplicate rides alongside its sibling in a bigon, leaving every genus
//! unchanged), components are solved independently, and pieces whose cut
//! vertices are all non-rigid split into biconnected blocks. Orientable genus
//! and Euler genus are additive over components and blocks; the crosscap
//! number of a separable graph is the sum of the Euler genera plus one when
//! every piece attains its Euler genus only orientably (the surface still has
//! to be nonorientable somewhere). Planar graphs get crosscap number 0 by
//! convention, matching crossing sequences whose nonorientable index 0 is the
//! sphere.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::faces::{EmbeddingCertificate, RotationSystem};
use crate::graph::{GraphError, SpecialGraph, Surface};
use crate::index::{IdMaps, Ig};
use crate::planarity;

/// Node budget for the rotation search. `Unknown` is reported when it runs
/// out, never an approximation.
#[derive(Clone, Copy, Debug)]
pub struct GenusOptions {
    pub budget: u64,
}

impl Default for GenusOptions {
    fn default() -> Self {
        GenusOptions { budget: 1_000_000_000 }
    }
}

#[derive(Clone, Debug)]
pub enum GenusOutcome {
    /// Exact minimum genus (orientable) or crosscap number (nonorientable),
    /// with a witness embedding.
    Known { genus: u32, certificate: EmbeddingCertificate },
    /// The search budget was exhausted.
    Unknown,
}

#[derive(Clone, Debug)]
pub enum EmbedOutcome {
    Embeddable(EmbeddingCertificate),
    NotEmbeddable,
    Unknown,
}

/// Exact minimum orientable genus of `g`, or its crosscap number when
/// `orientable` is false (0 for planar graphs; see the module docs for the
/// disconnected-graph conventions). Thickness is irrelevant in embeddings;
/// rigid rotations constrain the search.
pub fn min_genus(
    g: &SpecialGraph,
    orientable: bool,
    opts: &GenusOptions,
) -> Result<GenusOutcome, GraphError> {
    let (ig, ids) = Ig::build(g)?;
    let mut ctx = GenusCtx::new(opts.budget);
    let outcome = if orientable {
        match ctx.orientable_genus(&ig) {
            Some((genus, emb)) => GenusOutcome::Known {
                genus,
                certificate: certificate(&ids, Surface::orientable(genus), &emb),
            },
            None => GenusOutcome::Unknown,
        }
    } else {
        match ctx.crosscap_number(&ig) {
            Some((0, emb)) => GenusOutcome::Known {
                genus: 0,
                certificate: certificate(&ids, Surface::sphere(), &emb),
            },
            Some((k, emb)) => GenusOutcome::Known {
                genus: k,
                certificate: certificate(&ids, Surface::nonorientable(k), &emb),
            },
            None => GenusOutcome::Unknown,
        }
    };
    Ok(outcome)
}

/// Does `g` embed in `s`, respecting rigid rotations? The sphere case runs a
/// linear-time planarity test before any search, and stays practical well
/// past a hundred edges.
pub fn is_embeddable(
    g: &SpecialGraph,
    s: Surface,
    opts: &GenusOptions,
) -> Result<EmbedOutcome, GraphError> {
    let (ig, ids) = Ig::build(g)?;
    let mut ctx = GenusCtx::new(opts.budget);
    Ok(match ctx.embeddable(&ig, s, true) {
        Feasible::Yes(emb) => {
            EmbedOutcome::Embeddable(certificate(&ids, s, &emb.expect("witness requested")))
        }
        Feasible::No => EmbedOutcome::NotEmbeddable,
        Feasible::Unknown => EmbedOutcome::Unknown,
    })
}

/// An embedding of a whole indexed graph: a rotation per vertex (end ids) and
/// a negative-signature flag per edge.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct IxEmbedding {
    pub rotations: Vec<Vec<u32>>,
    pub neg: Vec<bool>,
}

impl IxEmbedding {
    fn empty(ig: &Ig) -> Self {
        IxEmbedding { rotations: vec![Vec::new(); ig.nv], neg: vec![false; ig.ne()] }
    }
}

pub(crate) fn certificate(ids: &IdMaps, surface: Surface, emb: &IxEmbedding) -> EmbeddingCertificate {
    let mut rotation = BTreeMap::new();
    for (v, rot) in emb.rotations.iter().enumerate() {
        if rot.is_empty() {
            continue;
        }
        rotation.insert(ids.vids[v].clone(), rot.iter().map(|&e| ids.end_ref(e)).collect());
    }
    let mut signature = BTreeMap::new();
    for (e, &n) in emb.neg.iter().enumerate() {
        signature.insert(ids.eids[e].clone(), if n { -1 } else { 1 });
    }
    EmbeddingCertificate { surface, rotation_system: RotationSystem { rotation, signature } }
}

pub(crate) enum Feasible {
    Yes(Option<IxEmbedding>),
    No,
    Unknown,
}

/// Minimum Euler genera of one connected piece, per orientability class.
#[derive(Clone, Debug)]
struct PieceMinima {
    e_or: u32,
    wit_or: IxEmbedding,
    /// None when the piece is a forest (no nonorientable scheme exists).
    non: Option<(u32, IxEmbedding)>,
}

impl PieceMinima {
    /// Euler genus (over both classes).
    fn eps(&self) -> u32 {
        match &self.non {
            Some((e_non, _)) => self.e_or.min(*e_non),
            None => self.e_or,
        }
    }

    fn witness(&self, use_non: bool) -> &IxEmbedding {
        if use_non {
            &self.non.as_ref().expect("nonorientable witness requested").1
        } else {
            &self.wit_or
        }
    }
}

/// Search context: budget, exhaustion flag and a cache of per-piece minima
/// (pieces recur heavily across the solver's configuration scans).
pub(crate) struct GenusCtx {
    pub budget: u64,
    pub exhausted: bool,
    cache: BTreeMap<Vec<u64>, CacheEntry>,
}

#[derive(Clone, Default)]
struct CacheEntry {
    orientable: Option<(u32, IxEmbedding)>,
    /// Known refutations: the orientable minimum exceeds this value.
    or_above: Option<u32>,
    /// Outer None = not computed yet; inner None = forest piece.
    nonorientable: Option<Option<(u32, IxEmbedding)>>,
}

/// Capped query result: exact minimum within the cap, or above it.
enum CappedOr {
    Exact(u32, IxEmbedding),
    Above,
}

impl GenusCtx {
    pub fn new(budget: u64) -> Self {
        GenusCtx { budget, exhausted: false, cache: BTreeMap::new() }
    }

    /// Minimum orientable genus with witness; None on budget exhaustion.
    pub fn orientable_genus(&mut self, ig: &Ig) -> Option<(u32, IxEmbedding)> {
        let mut total = 0u32;
        let mut emb = IxEmbedding::empty(ig);
        for comp in ig.components() {
            let (sub, emap) = ig.induced_closed(&comp);
            let m = self.component_minima(&sub, false)?;
            debug_assert!(m.e_or % 2 == 0);
            total += m.e_or / 2;
            graft(&mut emb, &m.wit_or, &comp, &emap);
        }
        Some((total, emb))
    }

    /// Minimum crosscap number with witness (0 with a planar embedding when
    /// the graph is planar); None on budget exhaustion.
    pub fn crosscap_number(&mut self, ig: &Ig) -> Option<(u32, IxEmbedding)> {
        let comps = ig.components();
        let mut pieces = Vec::with_capacity(comps.len());
        for comp in comps {
            let (sub, emap) = ig.induced_closed(&comp);
            let m = self.component_minima(&sub, true)?;
            pieces.push((comp, emap, m));
        }
        let mut emb = IxEmbedding::empty(ig);
        if pieces.iter().all(|(_, _, m)| m.e_or == 0) {
            for (comp, emap, m) in &pieces {
                graft(&mut emb, &m.wit_or, comp, emap);
            }
            return Some((0, emb));
        }
        let (total, flip_idx) = combine_nonorientable(pieces.iter().map(|(_, _, m)| m));
        for (i, (comp, emap, m)) in pieces.iter().enumerate() {
            let use_non = i == flip_idx || m.non.as_ref().is_some_and(|(e, _)| *e < m.e_or);
            graft(&mut emb, m.witness(use_non), comp, emap);
        }
        Some((total, emb))
    }

    /// Is `ig` embeddable in `s`? `want_witness` controls whether an
    /// embedding is assembled.
    pub fn embeddable(&mut self, ig: &Ig, s: Surface, want_witness: bool) -> Feasible {
        if relaxed_euler_lower_bound(ig) > s.euler_genus() {
            return Feasible::No;
        }
        if s.is_orientable() {
            if s.genus() == 0 && !want_witness {
                return if planarity::is_planar_rigid(ig) {
                    Feasible::Yes(None)
                } else {
                    Feasible::No
                };
            }
            let mut remaining = 2 * s.genus();
            let mut emb = want_witness.then(|| IxEmbedding::empty(ig));
            for comp in ig.components() {
                let (sub, emap) = ig.induced_closed(&comp);
                match self.component_or_capped(&sub, remaining) {
                    None => return Feasible::Unknown,
                    Some(CappedOr::Above) => return Feasible::No,
                    Some(CappedOr::Exact(e_or, wit)) => {
                        remaining -= e_or;
                        if let Some(emb) = emb.as_mut() {
                            graft(emb, &wit, &comp, &emap);
                        }
                    }
                }
            }
            Feasible::Yes(emb)
        } else {
            match self.crosscap_number(ig) {
                None => Feasible::Unknown,
                Some((k, emb)) if k <= s.genus() => Feasible::Yes(want_witness.then_some(emb)),
                Some(_) => Feasible::No,
            }
        }
    }

    /// Exact minima of a connected component: deduplicate parallels, split
    /// into blocks where safe, solve leaves, recombine. None on exhaustion.
    fn component_minima(&mut self, sub: &Ig, need_non: bool) -> Option<PieceMinima> {
        let (simple, dup_of) = dedup_parallels(sub);
        let reduced = self.blocks_minima(&simple, need_non)?;
        let lift = |emb: &IxEmbedding| reinsert_duplicates(sub, &dup_of, emb);
        Some(PieceMinima {
            e_or: reduced.e_or,
            wit_or: lift(&reduced.wit_or),
            non: reduced.non.as_ref().map(|(e, w)| (*e, lift(w))),
        })
    }

    /// Minimum orientable Euler genus of a connected component, stopping at
    /// `cap`: refutation levels above the cap are never explored and no
    /// witness search runs beyond it.
    fn component_or_capped(&mut self, sub: &Ig, cap: u32) -> Option<CappedOr> {
        let (simple, dup_of) = dedup_parallels(sub);
        let blocks = match split_blocks(&simple) {
            Some(blocks) if blocks.len() > 1 => blocks,
            _ => {
                return Some(match self.leaf_or_capped(&simple, cap)? {
                    CappedOr::Above => CappedOr::Above,
                    CappedOr::Exact(e, w) => {
                        CappedOr::Exact(e, reinsert_duplicates(sub, &dup_of, &w))
                    }
                });
            }
        };
        let mut remaining = cap;
        let mut total = 0u32;
        let mut emb = IxEmbedding::empty(&simple);
        for bedges in blocks {
            let (bsub, verts, emap) = induced_block(&simple, &bedges);
            match self.leaf_or_capped(&bsub, remaining)? {
                CappedOr::Above => return Some(CappedOr::Above),
                CappedOr::Exact(e, w) => {
                    total += e;
                    remaining -= e;
                    graft(&mut emb, &w, &verts, &emap);
                }
            }
        }
        Some(CappedOr::Exact(total, reinsert_duplicates(sub, &dup_of, &emb)))
    }

    /// Capped orientable minimum of one leaf, cache-aware. None on budget
    /// exhaustion.
    fn leaf_or_capped(&mut self, leaf: &Ig, cap: u32) -> Option<CappedOr> {
        if leaf.ne() == 0 {
            return Some(CappedOr::Exact(0, trivial_embedding(leaf)));
        }
        let key = cache_key(leaf);
        if let Some(entry) = self.cache.get(&key) {
            if let Some((e, w)) = &entry.orientable {
                return Some(if *e <= cap {
                    CappedOr::Exact(*e, w.clone())
                } else {
                    CappedOr::Above
                });
            }
            if entry.or_above.is_some_and(|a| a >= cap) {
                return Some(CappedOr::Above);
            }
        }
        let lb = euler_formula_lb(leaf);
        let mut t = lb + (lb & 1);
        while t <= cap {
            let found = if t == 0 {
                if !planarity::is_planar_rigid(leaf) {
                    None
                } else {
                    match Bb::new(leaf, 0, SigMode::Orientable, &mut self.budget).search() {
                        SearchResult::Found(emb) => Some(emb),
                        SearchResult::Exhausted => {
                            self.exhausted = true;
                            return None;
                        }
                        SearchResult::NotFound => {
                            unreachable!("planarity test found an embedding the search missed")
                        }
                    }
                }
            } else {
                match Bb::new(leaf, t, SigMode::Orientable, &mut self.budget).search() {
                    SearchResult::Found(emb) => Some(emb),
                    SearchResult::Exhausted => {
                        self.exhausted = true;
                        return None;
                    }
                    SearchResult::NotFound => None,
                }
            };
            if let Some(emb) = found {
                let slot = self.cache.entry(key).or_default();
                slot.orientable = Some((t, emb.clone()));
                return Some(CappedOr::Exact(t, emb));
            }
            t += 2;
        }
        let slot = self.cache.entry(key).or_default();
        slot.or_above = Some(slot.or_above.map_or(cap, |a| a.max(cap)));
        Some(CappedOr::Above)
    }

    fn blocks_minima(&mut self, piece: &Ig, need_non: bool) -> Option<PieceMinima> {
        let blocks = match split_blocks(piece) {
            Some(blocks) if blocks.len() > 1 => blocks,
            _ => return self.leaf_minima(piece, need_non),
        };
        let mut parts = Vec::with_capacity(blocks.len());
        for bedges in blocks {
            let (bsub, verts, emap) = induced_block(piece, &bedges);
            let m = self.leaf_minima(&bsub, need_non)?;
            parts.push((verts, emap, m));
        }
        let e_or: u32 = parts.iter().map(|(_, _, m)| m.e_or).sum();
        let mut wit_or = IxEmbedding::empty(piece);
        for (verts, emap, m) in &parts {
            graft(&mut wit_or, &m.wit_or, verts, emap);
        }
        let non = if !need_non {
            None
        } else if parts.iter().all(|(_, _, m)| m.non.is_none()) {
            None
        } else {
            let (total, flip_idx) = combine_nonorientable(parts.iter().map(|(_, _, m)| m));
            let mut emb = IxEmbedding::empty(piece);
            for (i, (verts, emap, m)) in parts.iter().enumerate() {
                let use_non =
                    i == flip_idx || m.non.as_ref().is_some_and(|(e, _)| *e < m.e_or);
                graft(&mut emb, m.witness(use_non), verts, emap);
            }
            Some((total, emb))
        };
        Some(PieceMinima { e_or, wit_or, non })
    }

    /// Exact minima of one leaf (connected, deduplicated, unsplittable),
    /// with caching.
    fn leaf_minima(&mut self, leaf: &Ig, need_non: bool) -> Option<PieceMinima> {
        let key = cache_key(leaf);
        let entry = self.cache.get(&key).cloned().unwrap_or_default();
        let or = match entry.orientable {
            Some(hit) => hit,
            None => self.leaf_min_orientable(leaf)?,
        };
        let non = if !need_non {
            None
        } else {
            match entry.nonorientable {
                Some(hit) => hit,
                None => self.leaf_min_nonorientable(leaf, or.0)?,
            }
        };
        let slot = self.cache.entry(key).or_default();
        slot.orientable = Some(or.clone());
        if need_non {
            slot.nonorientable = Some(non.clone());
        }
        Some(PieceMinima { e_or: or.0, wit_or: or.1, non })
    }

    fn leaf_min_orientable(&mut self, leaf: &Ig) -> Option<(u32, IxEmbedding)> {
        // The orientable Euler genus never exceeds the Betti number.
        let beta = (leaf.ne() + 1).saturating_sub(leaf.nv) as u32;
        match self.leaf_or_capped(leaf, beta + 1)? {
            CappedOr::Exact(e, w) => Some((e, w)),
            CappedOr::Above => unreachable!("orientable search overran the Betti bound"),
        }
    }

    /// Minimum nonorientable Euler genus, or None-inner for forests. Uses
    /// c̃ <= 2γ + 1: flipping one co-tree edge of an orientable minimum gives
    /// a nonorientable scheme within e_or + 1.
    fn leaf_min_nonorientable(
        &mut self,
        leaf: &Ig,
        e_or: u32,
    ) -> Option<Option<(u32, IxEmbedding)>> {
        if cotree_edges(leaf).is_empty() {
            return Some(None);
        }
        let cap = e_or + 1;
        let lb = euler_formula_lb(leaf).max(1);
        for t in lb..=cap {
            match Bb::new(leaf, t, SigMode::Nonorientable, &mut self.budget).search() {
                SearchResult::Found(emb) => return Some(Some((t, emb))),
                SearchResult::Exhausted => {
                    self.exhausted = true;
                    return None;
                }
                SearchResult::NotFound => {}
            }
        }
        unreachable!("a nonorientable scheme exists within e_or + 1");
    }
}

/// Sum rule for nonorientable combination: every piece contributes its Euler
/// genus, and the cheapest piece pays the difference to go nonorientable
/// (0 if one already is). Caller guarantees some piece has `non`.
fn combine_nonorientable<'a>(pieces: impl Iterator<Item = &'a PieceMinima>) -> (u32, usize) {
    let mut total = 0u32;
    let mut best: Option<(u32, usize)> = None;
    for (i, m) in pieces.enumerate() {
        total += m.eps();
        if let Some((e_non, _)) = &m.non {
            let extra = e_non - m.eps();
            if best.is_none_or(|(b, _)| extra < b) {
                best = Some((extra, i));
            }
        }
    }
    let (extra, idx) = best.expect("at least one piece admits a nonorientable scheme");
    debug_assert!(extra <= 1);
    (total + extra, idx)
}

/// Euler-formula lower bound on the Euler genus of a connected piece: faces
/// have length >= 3 in simple graphs without leaves (>= 2 otherwise).
fn euler_formula_lb(ig: &Ig) -> u32 {
    if ig.ne() == 0 || ig.nv == 0 {
        return 0;
    }
    let max_faces = 2 * ig.ne() / min_face_len(ig);
    ((2 + ig.ne()).saturating_sub(ig.nv + max_faces)) as u32
}

fn min_face_len(ig: &Ig) -> usize {
    let has_leaf = (0..ig.nv as u32).any(|v| ig.degree(v) == 1);
    if has_leaf || !ig.is_simple() {
        2
    } else {
        3
    }
}

/// Relaxed lower bound on the Euler genus of any embedding of `ig`: rigidity
/// dropped, blocks split unconditionally, each block contributing its
/// Euler-formula bound or 1 when nonplanar. Euler genus is additive over
/// blocks and components, and relaxation only shrinks it.
pub(crate) fn relaxed_euler_lower_bound(ig: &Ig) -> u32 {
    let mut relaxed = ig.clone();
    for r in relaxed.rigid.iter_mut() {
        *r = None;
    }
    let mut total = 0u32;
    for comp in relaxed.components() {
        let (sub, _) = relaxed.induced_closed(&comp);
        let (simple, _) = dedup_parallels(&sub);
        match split_blocks(&simple) {
            Some(blocks) if blocks.len() > 1 => {
                for bedges in blocks {
                    let (bsub, _, _) = induced_block(&simple, &bedges);
                    total += block_lb(&bsub);
                }
            }
            _ => total += block_lb(&simple),
        }
    }
    total
}

fn block_lb(block: &Ig) -> u32 {
    let lb = euler_formula_lb(block);
    if lb > 0 {
        lb
    } else if planarity::is_planar_multigraph(block) {
        0
    } else {
        1
    }
}

// ---------------------------------------------------------------------------
// Decomposition helpers.

/// Folds away parallel duplicates whose endpoints are both non-rigid.
/// Returns the reduced graph and, per original edge, the edge it folded into
/// (itself for keepers).
pub(crate) fn dedup_parallels(ig: &Ig) -> (Ig, Vec<u32>) {
    let ne = ig.ne();
    let mut keeper: BTreeMap<[u32; 2], u32> = BTreeMap::new();
    let mut dup_of: Vec<u32> = (0..ne as u32).collect();
    let mut keep = vec![true; ne];
    for (e, &[a, b]) in ig.edges.iter().enumerate() {
        if ig.rigid[a as usize].is_some() || ig.rigid[b as usize].is_some() {
            continue;
        }
        let key = if a <= b { [a, b] } else { [b, a] };
        match keeper.get(&key) {
            None => {
                keeper.insert(key, e as u32);
            }
            Some(&k) => {
                dup_of[e] = k;
                keep[e] = false;
            }
        }
    }
    let (reduced, _) = ig.edge_restriction(&keep);
    (reduced, dup_of)
}

/// Grafts a local witness onto the full-graph arrays. `verts` maps local
/// vertex index -> outer vertex; `emap` maps local edge -> outer edge. Cut
/// vertices shared between blocks concatenate their rotations, under which
/// Euler genus adds.
fn graft(emb: &mut IxEmbedding, wit: &IxEmbedding, verts: &[u32], emap: &[u32]) {
    for (lv, rot) in wit.rotations.iter().enumerate() {
        if rot.is_empty() {
            continue;
        }
        let gv = verts[lv] as usize;
        emb.rotations[gv].extend(rot.iter().map(|&end| 2 * emap[(end / 2) as usize] + (end & 1)));
    }
    for (le, &n) in wit.neg.iter().enumerate() {
        emb.neg[emap[le] as usize] = n;
    }
}

/// Reinserts folded parallels next to their keeper, each in a bigon (face
/// count grows with the edge count, Euler genus unchanged). For a keeper
/// with ends k0 at u and k1 at v: the duplicate's end at u goes right after
/// k0; its end at v goes right before k1 for a positive keeper and right
/// after k1 for a negative one (the half-twists pair up).
fn reinsert_duplicates(full: &Ig, dup_of: &[u32], emb: &IxEmbedding) -> IxEmbedding {
    let kept: Vec<u32> = (0..full.ne() as u32).filter(|&e| dup_of[e as usize] == e).collect();
    let mut out = IxEmbedding::empty(full);
    for (v, rot) in emb.rotations.iter().enumerate() {
        out.rotations[v] =
            rot.iter().map(|&end| 2 * kept[(end / 2) as usize] + (end & 1)).collect();
    }
    for (re, &n) in emb.neg.iter().enumerate() {
        out.neg[kept[re] as usize] = n;
    }
    for e in 0..full.ne() as u32 {
        let k = dup_of[e as usize];
        if k == e {
            continue;
        }
        let negative = out.neg[k as usize];
        out.neg[e as usize] = negative;
        let ku = full.edges[k as usize][0];
        // Duplicate end at the keeper's end-0 vertex (loops are impossible,
        // so exactly one end of e is at ku).
        let (eu, ev) = if full.edges[e as usize][0] == ku { (2 * e, 2 * e + 1) } else { (2 * e + 1, 2 * e) };
        let u = ku as usize;
        let v = full.edges[k as usize][1] as usize;
        let rot_u = &mut out.rotations[u];
        let pos = rot_u.iter().position(|&x| x == 2 * k).expect("keeper end 0 present");
        rot_u.insert(pos + 1, eu);
        let rot_v = &mut out.rotations[v];
        let pos = rot_v.iter().position(|&x| x == 2 * k + 1).expect("keeper end 1 present");
        rot_v.insert(if negative { pos + 1 } else { pos }, ev);
    }
    out
}

/// Biconnected blocks as edge lists, or None when some cut vertex is rigid
/// (splitting there could violate the prescribed interleaving).
fn split_blocks(piece: &Ig) -> Option<Vec<Vec<u32>>> {
    if piece.nv == 0 || piece.ne() == 0 {
        return None;
    }
    let nv = piece.nv;
    let mut disc = vec![u32::MAX; nv];
    let mut low = vec![0u32; nv];
    let mut timer = 0u32;
    let mut estack: Vec<u32> = Vec::new();
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    let mut cut = vec![false; nv];
    let mut stack: Vec<(u32, u32, usize)> = Vec::new();

    for root in 0..nv as u32 {
        if disc[root as usize] != u32::MAX {
            continue;
        }
        disc[root as usize] = timer;
        low[root as usize] = timer;
        timer += 1;
        stack.push((root, u32::MAX, 0));
        let mut root_children = 0u32;
        while let Some(&mut (v, pe, ref mut cursor)) = stack.last_mut() {
            if *cursor < piece.inc[v as usize].len() {
                let end = piece.inc[v as usize][*cursor];
                *cursor += 1;
                let e = end / 2;
                if e == pe {
                    continue;
                }
                let w = piece.end_vertex(end ^ 1);
                if disc[w as usize] == u32::MAX {
                    estack.push(e);
                    disc[w as usize] = timer;
                    low[w as usize] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, e, 0));
                } else if disc[w as usize] < disc[v as usize] {
                    estack.push(e);
                    low[v as usize] = low[v as usize].min(disc[w as usize]);
                }
            } else {
                stack.pop();
                if let Some(&mut (u, _, _)) = stack.last_mut() {
                    low[u as usize] = low[u as usize].min(low[v as usize]);
                    if low[v as usize] >= disc[u as usize] {
                        if u != root || root_children > 1 {
                            cut[u as usize] = true;
                        }
                        let mut block = Vec::new();
                        while let Some(top) = estack.pop() {
                            block.push(top);
                            if top == pe {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    if (0..nv).any(|v| cut[v] && piece.rigid[v].is_some()) {
        return None;
    }
    blocks.retain(|b| !b.is_empty());
    Some(blocks)
}

/// Subgraph of one block from its edge list. Rigid vertices are interior to
/// a single block here (cut vertices were checked to be free), so rotations
/// carry over whole. Returns (block graph, vertex map, edge map).
fn induced_block(piece: &Ig, bedges: &[u32]) -> (Ig, Vec<u32>, Vec<u32>) {
    let mut emap: Vec<u32> = bedges.to_vec();
    emap.sort_unstable();
    let mut verts: Vec<u32> = emap
        .iter()
        .flat_map(|&e| piece.edges[e as usize])
        .collect();
    verts.sort_unstable();
    verts.dedup();
    let mut vmap = vec![u32::MAX; piece.nv];
    for (i, &v) in verts.iter().enumerate() {
        vmap[v as usize] = i as u32;
    }
    let mut eend = vec![u32::MAX; 2 * piece.ne()];
    let mut edges = Vec::with_capacity(emap.len());
    let mut thick = Vec::with_capacity(emap.len());
    for (new_e, &e) in emap.iter().enumerate() {
        eend[(2 * e) as usize] = 2 * new_e as u32;
        eend[(2 * e + 1) as usize] = 2 * new_e as u32 + 1;
        let [a, b] = piece.edges[e as usize];
        edges.push([vmap[a as usize], vmap[b as usize]]);
        thick.push(piece.thick[e as usize]);
    }
    let mut rigid = vec![None; verts.len()];
    for &v in &verts {
        if let Some(rot) = &piece.rigid[v as usize] {
            let mapped: Vec<u32> = rot
                .iter()
                .filter_map(|&end| {
                    let m = eend[end as usize];
                    (m != u32::MAX).then_some(m)
                })
                .collect();
            debug_assert_eq!(mapped.len(), rot.len(), "rigid vertex split across blocks");
            rigid[vmap[v as usize] as usize] = Some(mapped);
        }
    }
    (Ig::from_raw(verts.len(), edges, thick, rigid), verts, emap)
}

fn tree_flags(ig: &Ig) -> Vec<bool> {
    let mut intree = vec![false; ig.ne()];
    let mut seen = vec![false; ig.nv];
    for root in 0..ig.nv as u32 {
        if seen[root as usize] {
            continue;
        }
        seen[root as usize] = true;
        let mut queue = alloc::collections::VecDeque::new();
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &end in &ig.inc[v as usize] {
                let w = ig.end_vertex(end ^ 1);
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    intree[(end / 2) as usize] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    intree
}

fn cotree_edges(ig: &Ig) -> Vec<u32> {
    let intree = tree_flags(ig);
    (0..ig.ne() as u32).filter(|&e| !intree[e as usize]).collect()
}

fn tree_edges(ig: &Ig) -> Vec<u32> {
    let intree = tree_flags(ig);
    (0..ig.ne() as u32).filter(|&e| intree[e as usize]).collect()
}

fn trivial_embedding(ig: &Ig) -> IxEmbedding {
    IxEmbedding { rotations: ig.inc.clone(), neg: vec![false; ig.ne()] }
}

fn cache_key(ig: &Ig) -> Vec<u64> {
    let mut key = Vec::with_capacity(2 + ig.ne() + ig.nv);
    key.push(ig.nv as u64);
    key.push(ig.ne() as u64);
    for &[a, b] in &ig.edges {
        key.push((a as u64) << 32 | b as u64);
    }
    for r in &ig.rigid {
        match r {
            None => key.push(u64::MAX),
            Some(rot) => {
                key.push(0x8000_0000_0000_0000 | rot.len() as u64);
                key.extend(rot.iter().map(|&e| e as u64));
            }
        }
    }
    key
}

// ---------------------------------------------------------------------------
// The branch-and-bound engine.

enum SearchResult {
    Found(IxEmbedding),
    NotFound,
    Exhausted,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum SigMode {
    /// Every signature fixed positive: orientable schemes.
    Orientable,
    /// Spanning-tree edges fixed positive, co-tree signatures searched as an
    /// extra branching dimension; accepted schemes must have a negative edge.
    Nonorientable,
}

/// Branch and bound over rotation systems (and, in nonorientable mode, edge
/// signatures) of one connected piece, accepting the first scheme with Euler
/// genus <= target. The exploration order is canonical, so the witness found
/// is the least one for the fixed vertex order.
struct Bb<'a> {
    ig: &'a Ig,
    mode: SigMode,
    /// Per edge: 0 undecided, 1 positive, 2 negative.
    sigma: Vec<u8>,
    negatives: u32,
    f_target: i64,
    min_len: i64,
    order: Vec<u32>,
    budget: &'a mut u64,
    exhausted: bool,
    rot_next: Vec<u32>,
    rot_prev: Vec<u32>,
    assigned_rot: Vec<Vec<u32>>,
    /// Per-depth rotation buffers (reused across the whole search).
    scratch: Vec<Vec<u32>>,
    // Open-segment bookkeeping over face states (dart * 2 + flag; orientable
    // mode only uses flag 0).
    nxt: Vec<u32>,
    head_of_tail: Vec<u32>,
    tail_of_head: Vec<u32>,
    len_of_head: Vec<u32>,
    closed: i64,
    open_states: i64,
    open_segments: i64,
    journal: Vec<JournalEntry>,
}

struct JournalEntry {
    s: u32,
    s2: u32,
    h: u32,
    t: u32,
    merged_len: u32,
    closed_face: bool,
}

impl<'a> Bb<'a> {
    fn new(ig: &'a Ig, target_eg: u32, mode: SigMode, budget: &'a mut u64) -> Bb<'a> {
        let f_target = 2 + ig.ne() as i64 - ig.nv as i64 - target_eg as i64;
        let nstates = 4 * ig.ne();
        let sigma = match mode {
            SigMode::Orientable => vec![1; ig.ne()],
            SigMode::Nonorientable => {
                let mut sigma = vec![0; ig.ne()];
                for e in tree_edges(ig) {
                    sigma[e as usize] = 1;
                }
                sigma
            }
        };
        Bb {
            ig,
            mode,
            sigma,
            negatives: 0,
            f_target,
            min_len: min_face_len(ig) as i64,
            order: search_order(ig),
            budget,
            exhausted: false,
            rot_next: vec![u32::MAX; 2 * ig.ne()],
            rot_prev: vec![u32::MAX; 2 * ig.ne()],
            assigned_rot: vec![Vec::new(); ig.nv],
            scratch: vec![Vec::new(); ig.nv],
            nxt: vec![u32::MAX; nstates],
            head_of_tail: (0..nstates as u32).collect(),
            tail_of_head: (0..nstates as u32).collect(),
            len_of_head: vec![1; nstates],
            closed: 0,
            open_states: 0,
            open_segments: 0,
            journal: Vec::new(),
        }
    }

    #[inline]
    fn signed(&self) -> bool {
        self.mode == SigMode::Nonorientable
    }

    #[inline]
    fn multiplier(&self) -> i64 {
        1 + self.signed() as i64
    }

    fn neg_vec(&self) -> Vec<bool> {
        self.sigma.iter().map(|&s| s == 2).collect()
    }

    fn search(mut self) -> SearchResult {
        if self.f_target <= 0 {
            // Every scheme meets the target; honor rigidity, and flip one
            // co-tree edge when a nonorientable scheme is required.
            let rotations = (0..self.ig.nv)
                .map(|v| self.ig.rigid[v].clone().unwrap_or_else(|| self.ig.inc[v].clone()))
                .collect();
            let mut neg = vec![false; self.ig.ne()];
            if self.signed() {
                let cotree = cotree_edges(self.ig);
                let e = cotree.first().expect("caller checked for a co-tree edge");
                neg[*e as usize] = true;
            }
            return SearchResult::Found(IxEmbedding { rotations, neg });
        }
        self.open_states = self.multiplier() * 2 * self.ig.ne() as i64;
        self.open_segments = self.open_states;
        if self.rec(0) {
            SearchResult::Found(IxEmbedding {
                rotations: self.assigned_rot.clone(),
                neg: self.neg_vec(),
            })
        } else if self.exhausted {
            SearchResult::Exhausted
        } else {
            SearchResult::NotFound
        }
    }

    fn rec(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            debug_assert_eq!(self.open_states, 0);
            return self.closed >= self.multiplier() * self.f_target
                && (!self.signed() || self.negatives > 0);
        }
        let ig = self.ig;
        let v = self.order[depth];
        let ends: &[u32] = &ig.inc[v as usize];
        let d = ends.len();
        if d == 0 {
            return self.rec(depth + 1);
        }
        // At the first branching vertex, reversals are skipped: the mirror of
        // a witness is a witness with the same signature.
        let mirror_dedup = depth == 0;
        if let Some(rigid) = ig.rigid[v as usize].as_deref() {
            if self.try_rotation(v, rigid, depth) {
                return true;
            }
            if self.exhausted {
                return false;
            }
            if d >= 3 && !mirror_dedup {
                let mut rev = rigid.to_vec();
                rev.reverse();
                if self.try_rotation(v, &rev, depth) {
                    return true;
                }
            }
            return false;
        }
        if d <= 2 {
            return self.try_rotation(v, ends, depth);
        }
        let anchor = ends[0];
        let mut rot = core::mem::take(&mut self.scratch[depth]);
        rot.clear();
        rot.extend_from_slice(ends);
        let found = loop {
            // rot[0] stays the anchor; rot[1..] runs over permutations.
            let skip = mirror_dedup && rot[1..].iter().rev().lt(rot[1..].iter());
            if !skip {
                if self.try_rotation(v, &rot, depth) {
                    break true;
                }
                if self.exhausted {
                    break false;
                }
            }
            if !next_permutation(&mut rot[1..]) {
                break false;
            }
        };
        let _ = anchor;
        self.scratch[depth] = rot;
        found
    }

    /// Tries one rotation at `v`, branching over the signatures of incident
    /// edges that are still undecided (none in orientable mode).
    fn try_rotation(&mut self, v: u32, rot: &[u32], depth: usize) -> bool {
        if !self.signed() {
            if *self.budget == 0 {
                self.exhausted = true;
                return false;
            }
            *self.budget -= 1;
            let mark = self.journal.len();
            self.assign(rot);
            if self.bound_ok() && self.rec(depth + 1) {
                self.assigned_rot[v as usize] = rot.to_vec();
                return true;
            }
            self.undo_to(mark);
            return false;
        }
        let undecided: Vec<u32> = self
            .ig
            .inc[v as usize]
            .iter()
            .map(|&end| end / 2)
            .filter(|&e| self.sigma[e as usize] == 0)
            .collect();
        debug_assert!(undecided.len() < 63);
        for combo in 0..1u64 << undecided.len() {
            if *self.budget == 0 {
                self.exhausted = true;
                return false;
            }
            *self.budget -= 1;
            for (i, &e) in undecided.iter().enumerate() {
                let negative = combo >> i & 1 == 1;
                self.sigma[e as usize] = if negative { 2 } else { 1 };
                self.negatives += negative as u32;
            }
            let mark = self.journal.len();
            self.assign(rot);
            if self.bound_ok() && self.rec(depth + 1) {
                self.assigned_rot[v as usize] = rot.to_vec();
                return true;
            }
            self.undo_to(mark);
            for &e in &undecided {
                self.negatives -= (self.sigma[e as usize] == 2) as u32;
                self.sigma[e as usize] = 0;
            }
            if self.exhausted {
                return false;
            }
        }
        false
    }

    /// Optimistic face count: every future face needs at least `min_len`
    /// states and swallows at least one whole open segment.
    #[inline]
    fn bound_ok(&self) -> bool {
        let future = (self.open_states / self.min_len).min(self.open_segments);
        self.closed + future >= self.multiplier() * self.f_target
    }

    /// Fixing the rotation at a vertex defines the face successor of every
    /// state arriving there.
    fn assign(&mut self, rot: &[u32]) {
        let d = rot.len();
        for (i, &a) in rot.iter().enumerate() {
            self.rot_next[a as usize] = rot[(i + 1) % d];
            self.rot_prev[a as usize] = rot[(i + d - 1) % d];
        }
        for &a in rot {
            let dart = a ^ 1; // the dart arriving via end a
            let e = (dart / 2) as usize;
            if self.signed() {
                debug_assert!(self.sigma[e] != 0);
                let neg = self.sigma[e] == 2;
                for f in 0..2u32 {
                    let fin = (f == 1) ^ neg;
                    let out =
                        if fin { self.rot_prev[a as usize] } else { self.rot_next[a as usize] };
                    self.link(dart * 2 + f, out * 2 + fin as u32);
                }
            } else {
                let out = self.rot_next[a as usize];
                self.link(dart * 2, out * 2);
            }
        }
    }

    #[inline]
    fn link(&mut self, s: u32, s2: u32) {
        debug_assert_eq!(self.nxt[s as usize], u32::MAX);
        self.nxt[s as usize] = s2;
        let h = self.head_of_tail[s as usize];
        let t = self.tail_of_head[s2 as usize];
        self.open_segments -= 1;
        if h == s2 {
            let len = self.len_of_head[h as usize];
            self.closed += 1;
            self.open_states -= len as i64;
            self.journal.push(JournalEntry { s, s2, h, t, merged_len: len, closed_face: true });
        } else {
            let len2 = self.len_of_head[s2 as usize];
            self.head_of_tail[t as usize] = h;
            self.tail_of_head[h as usize] = t;
            self.len_of_head[h as usize] += len2;
            self.journal.push(JournalEntry { s, s2, h, t, merged_len: len2, closed_face: false });
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.journal.len() > mark {
            let JournalEntry { s, s2, h, t, merged_len, closed_face } =
                self.journal.pop().unwrap();
            self.nxt[s as usize] = u32::MAX;
            self.open_segments += 1;
            if closed_face {
                self.closed -= 1;
                self.open_states += merged_len as i64;
            } else {
                self.head_of_tail[t as usize] = s2;
                self.tail_of_head[h as usize] = s;
                self.len_of_head[h as usize] -= merged_len;
            }
        }
    }
}

/// Static vertex order: repeatedly take the unprocessed vertex with the most
/// ends into the processed set (ties: higher degree, then lower index), so
/// faces close as early as possible.
fn search_order(ig: &Ig) -> Vec<u32> {
    let nv = ig.nv;
    let mut picked = vec![false; nv];
    let mut adjc = vec![0usize; nv];
    let mut order = Vec::with_capacity(nv);
    for _ in 0..nv {
        let mut best: Option<u32> = None;
        for v in 0..nv as u32 {
            if picked[v as usize] {
                continue;
            }
            let better = match best {
                None => true,
                Some(b) => {
                    let key = |x: u32| (adjc[x as usize], ig.degree(x), core::cmp::Reverse(x));
                    key(v) > key(b)
                }
            };
            if better {
                best = Some(v);
            }
        }
        let v = best.unwrap();
        picked[v as usize] = true;
        order.push(v);
        for &end in &ig.inc[v as usize] {
            let w = ig.end_vertex(end ^ 1);
            if !picked[w as usize] {
                adjc[w as usize] += 1;
            }
        }
    }
    order
}

/// Lexicographic next permutation; false when it wraps around.
fn next_permutation(a: &mut [u32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        a.reverse();
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

#[cfg(test)]
pub(crate) fn embedding_euler_genus(ig: &Ig, emb: &IxEmbedding) -> u32 {
    let scheme = crate::faces::IxScheme::from_parts(ig.ne(), &emb.rotations, emb.neg.clone());
    ig.components()
        .iter()
        .map(|comp| scheme.component_profile(ig, comp).euler_genus)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{EdgeEnd, MultiGraph};
    use crate::testutil;

    fn genus_of(g: &SpecialGraph, orientable: bool) -> u32 {
        match min_genus(g, orientable, &GenusOptions::default()).unwrap() {
            GenusOutcome::Known { genus, certificate } => {
                crate::faces::verify_embedding(g, &certificate)
                    .expect("certificate must verify");
                genus
            }
            GenusOutcome::Unknown => panic!("budget exhausted"),
        }
    }

    #[test]
    fn known_orientable_genera() {
        assert_eq!(genus_of(&testutil::special_from_edges(4, &testutil::complete(4)), true), 0);
        assert_eq!(genus_of(&testutil::special_from_edges(5, &testutil::complete(5)), true), 1);
        assert_eq!(genus_of(&testutil::special_from_edges(6, &testutil::complete(6)), true), 1);
        assert_eq!(
            genus_of(&testutil::special_from_edges(6, &testutil::complete_bipartite(3, 3)), true),
            1
        );
        // Petersen graph.
        let mut edges = Vec::new();
        for i in 0..5u32 {
            edges.push([i, (i + 1) % 5]);
            edges.push([i, i + 5]);
            edges.push([i + 5, (i + 2) % 5 + 5]);
        }
        assert_eq!(genus_of(&testutil::special_from_edges(10, &edges), true), 1);
    }

    #[test]
    fn known_crosscap_numbers() {
        assert_eq!(genus_of(&testutil::special_from_edges(4, &testutil::complete(4)), false), 0);
        assert_eq!(genus_of(&testutil::special_from_edges(5, &testutil::complete(5)), false), 1);
        assert_eq!(
            genus_of(&testutil::special_from_edges(6, &testutil::complete_bipartite(3, 3)), false),
            1
        );
    }

    #[test]
    fn disjoint_unions_add() {
        let mut edges: Vec<[u32; 2]> = testutil::complete(5);
        edges.extend(testutil::complete(5).iter().map(|&[a, b]| [a + 5, b + 5]));
        let g = testutil::special_from_edges(10, &edges);
        assert_eq!(genus_of(&g, true), 2);
        // Each K5 reaches Euler genus 1 nonorientably, so the crosscaps add.
        assert_eq!(genus_of(&g, false), 2);
    }

    #[test]
    fn parallel_edges_change_nothing() {
        let mut edges = testutil::complete(5).to_vec();
        edges.push([0, 1]);
        edges.push([0, 1]);
        edges.push([2, 3]);
        let g = testutil::special_from_edges(5, &edges);
        assert_eq!(genus_of(&g, true), 1);
        assert_eq!(genus_of(&g, false), 1);
    }

    #[test]
    fn one_point_unions_add() {
        // Two K5s amalgamated at a vertex: genus 2 (block additivity).
        let mut edges: Vec<[u32; 2]> = testutil::complete(5);
        edges.extend(testutil::complete(5).iter().map(|&[a, b]| {
            let m = |x: u32| if x == 0 { 0 } else { x + 4 };
            [m(a), m(b)]
        }));
        let g = testutil::special_from_edges(9, &edges);
        assert_eq!(genus_of(&g, true), 2);
        assert_eq!(genus_of(&g, false), 2);
    }

    #[test]
    fn rigid_wheel_needs_a_handle() {
        // Wheel W4 whose hub rotation interleaves the spokes: planar without
        // the constraint, toroidal with it.
        let g = {
            let mg = MultiGraph::from_parts(
                ["v0", "v1", "v2", "v3", "x"],
                [
                    ("c0", "v0", "v1"),
                    ("c1", "v1", "v2"),
                    ("c2", "v2", "v3"),
                    ("c3", "v3", "v0"),
                    ("s0", "x", "v0"),
                    ("s1", "x", "v1"),
                    ("s2", "x", "v2"),
                    ("s3", "x", "v3"),
                ],
            );
            let mut sg = SpecialGraph::plain(mg);
            sg.rigid.insert(
                "x".into(),
                ["s0", "s2", "s1", "s3"].iter().map(|e| EdgeEnd::new(*e, 0)).collect(),
            );
            sg
        };
        assert!(g.validate().is_ok());
        assert_eq!(genus_of(&g, true), 1);
        let mut free = g.clone();
        free.rigid.clear();
        assert_eq!(genus_of(&free, true), 0);
        // Reversing the prescription is the same constraint.
        let mut rev = g.clone();
        rev.rigid.get_mut(&"x".into()).unwrap().reverse();
        assert_eq!(genus_of(&rev, true), 1);
        // The crosscap number is 1: one crosscap realizes the interleaving.
        assert_eq!(genus_of(&g, false), 1);
    }

    #[test]
    fn budget_exhaustion_reports_unknown() {
        let g = testutil::special_from_edges(7, &testutil::complete(7));
        let out = min_genus(&g, true, &GenusOptions { budget: 50 }).unwrap();
        assert!(matches!(out, GenusOutcome::Unknown));
    }

    #[test]
    fn is_embeddable_thresholds() {
        let opts = GenusOptions::default();
        let k5 = testutil::special_from_edges(5, &testutil::complete(5));
        assert!(matches!(
            is_embeddable(&k5, Surface::sphere(), &opts).unwrap(),
            EmbedOutcome::NotEmbeddable
        ));
        match is_embeddable(&k5, Surface::torus(), &opts).unwrap() {
            EmbedOutcome::Embeddable(cert) => {
                crate::faces::verify_embedding(&k5, &cert).unwrap()
            }
            other => panic!("expected embeddable, got {other:?}"),
        }
        assert!(matches!(
            is_embeddable(&k5, Surface::nonorientable(1), &opts).unwrap(),
            EmbedOutcome::Embeddable(_)
        ));
        let k6 = testutil::special_from_edges(6, &testutil::complete(6));
        assert!(matches!(
            is_embeddable(&k6, Surface::torus(), &opts).unwrap(),
            EmbedOutcome::Embeddable(_)
        ));
        // A planar graph embeds in every nonorientable surface.
        let k4 = testutil::special_from_edges(4, &testutil::complete(4));
        assert!(matches!(
            is_embeddable(&k4, Surface::nonorientable(1), &opts).unwrap(),
            EmbedOutcome::Embeddable(_)
        ));
    }

    #[test]
    fn matches_exhaustive_enumeration_on_small_graphs() {
        let cases: Vec<(u32, Vec<[u32; 2]>)> = vec![
            (3, vec![[0, 1], [1, 2], [2, 0]]),
            (4, testutil::complete(4)),
            (5, testutil::complete(5)),
            (5, vec![[0, 1], [1, 2], [2, 3], [3, 4], [4, 0], [0, 2], [1, 3]]),
            (6, testutil::complete_bipartite(3, 3)),
            (2, vec![[0, 1], [0, 1], [0, 1]]),
            (4, vec![[0, 1], [1, 2], [2, 3]]),
            (6, vec![[0, 1], [1, 2], [2, 0], [2, 3], [3, 4], [4, 5], [5, 3]]),
        ];
        for (nv, edges) in cases {
            let g = testutil::special_from_edges(nv, &edges);
            let brute_or =
                testutil::naive_min_euler_genus(nv as usize, &edges, true).expect("orientable");
            assert_eq!(2 * genus_of(&g, true), brute_or, "orientable {edges:?}");
            let want_cc = if brute_or == 0 {
                0
            } else {
                testutil::naive_min_euler_genus(nv as usize, &edges, false)
                    .expect("cycles exist")
            };
            assert_eq!(genus_of(&g, false), want_cc, "crosscap {edges:?}");
        }
    }

    #[test]
    fn witnesses_recompute_to_their_claimed_genus() {
        let mut edges = testutil::complete(5).to_vec();
        edges.push([0, 1]);
        edges.push([2, 3]);
        edges.push([2, 3]);
        let g = testutil::special_from_edges(5, &edges);
        let (ig, _) = Ig::build(&g).unwrap();
        let mut ctx = GenusCtx::new(u64::MAX);
        let (genus, emb) = ctx.orientable_genus(&ig).unwrap();
        assert_eq!(embedding_euler_genus(&ig, &emb), 2 * genus);
        let (cc, emb) = ctx.crosscap_number(&ig).unwrap();
        assert_eq!(embedding_euler_genus(&ig, &emb), cc);
    }
}

