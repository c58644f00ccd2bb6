//! Crossing configurations: finite multisets of pairwise edge crossings with
//! per-edge slot orders, and their canonical enumeration.
//!
//! A configuration with k crossings assigns every crossing two slots
//! `(edge, position)`; the positions along each edge are consecutive from its
//! stored end 0. Two textually different configurations never describe the
//! same combinatorial drawing skeleton: the enumeration kills the crossing
//! relabeling symmetries exactly (crossings of one unordered edge pair appear
//! along the lower edge in label order; the two slots of a self-crossing are
//! ordered), which an exhaustive oracle confirms on small cases.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{EdgeId, GraphError, SpecialGraph};
use crate::index::{IdMaps, Ig};

/// One crossing point on an edge: `pos` counts crossings along the edge from
/// its stored end 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Slot {
    pub edge: EdgeId,
    pub pos: u32,
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.edge, self.pos)
    }
}

/// A transversal crossing of two slots; normalized so `a <= b`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Crossing {
    pub a: Slot,
    pub b: Slot,
}

impl Crossing {
    pub fn new(a: Slot, b: Slot) -> Self {
        if a <= b {
            Crossing { a, b }
        } else {
            Crossing { a: b, b: a }
        }
    }
}

/// A combinatorial drawing skeleton: the crossings, sorted canonically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct CrossingConfiguration {
    pub crossings: Vec<Crossing>,
}

impl CrossingConfiguration {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(mut crossings: Vec<Crossing>) -> Self {
        crossings.sort();
        CrossingConfiguration { crossings }
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Checks the structural invariants against `g`: slots reference thin
    /// edges only, positions along each edge are consecutive from 0, every
    /// slot is used by exactly one crossing, and self-crossings pair two
    /// distinct positions.
    pub fn validate(&self, g: &SpecialGraph) -> Result<(), ConfigError> {
        let mut by_edge: alloc::collections::BTreeMap<&EdgeId, Vec<u32>> =
            alloc::collections::BTreeMap::new();
        for c in &self.crossings {
            for slot in [&c.a, &c.b] {
                let edge = g
                    .graph
                    .edge(&slot.edge)
                    .ok_or_else(|| ConfigError::UnknownEdge(slot.edge.clone()))?;
                if g.is_thick(&edge.id) {
                    return Err(ConfigError::ThickEdgeCrossed(edge.id.clone()));
                }
                by_edge.entry(&edge.id).or_default().push(slot.pos);
            }
            if c.a.edge == c.b.edge && c.a.pos == c.b.pos {
                return Err(ConfigError::DegenerateCrossing);
            }
        }
        for (edge, mut positions) in by_edge {
            positions.sort_unstable();
            if positions.iter().enumerate().any(|(i, &p)| p != i as u32) {
                return Err(ConfigError::BadPositions((*edge).clone()));
            }
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ConfigError {
    UnknownEdge(EdgeId),
    ThickEdgeCrossed(EdgeId),
    BadPositions(EdgeId),
    DegenerateCrossing,
    Graph(String),
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::UnknownEdge(e) => write!(f, "crossing references unknown edge {e}"),
            ConfigError::ThickEdgeCrossed(e) => write!(f, "thick edge {e} carries a crossing"),
            ConfigError::BadPositions(e) => {
                write!(f, "positions along {e} are not consecutive from 0")
            }
            ConfigError::DegenerateCrossing => f.write_str("crossing pairs a slot with itself"),
            ConfigError::Graph(s) => f.write_str(s),
        }
    }
}

impl core::error::Error for ConfigError {}

/// Options for [`enumerate_configurations`].
#[derive(Clone, Copy, Debug)]
pub struct EnumOptions {
    /// Allow crossings between edges sharing an endpoint (default true).
    pub allow_adjacent: bool,
    /// Allow an edge to cross itself (default false: an optimal drawing
    /// never self-crosses, but completeness auditing may want them).
    pub allow_self: bool,
    /// Cap on the number of crossings between one edge pair (default: k).
    pub max_pair_multiplicity: Option<u32>,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { allow_adjacent: true, allow_self: false, max_pair_multiplicity: None }
    }
}

/// Streams every configuration with exactly `k` crossings on thin edges of
/// `g`, without duplicates, in a fixed canonical order.
pub fn enumerate_configurations(
    g: &SpecialGraph,
    k: u32,
    opts: EnumOptions,
) -> Result<impl Iterator<Item = CrossingConfiguration>, GraphError> {
    let (ig, ids) = Ig::build(g)?;
    let iter = IxConfigIter::new(&ig, k, opts);
    Ok(iter.map(move |ix| ix.to_public(&ids)))
}

// ---------------------------------------------------------------------------
// Index-world configurations (the solver's working form).

pub(crate) type IxSlot = (u32, u32); // (edge index, position)

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub(crate) struct IxConfig {
    /// Sorted, each crossing normalized (a <= b).
    pub crossings: Vec<[IxSlot; 2]>,
}

impl IxConfig {
    pub fn to_public(&self, ids: &IdMaps) -> CrossingConfiguration {
        CrossingConfiguration::new(
            self.crossings
                .iter()
                .map(|&[a, b]| {
                    Crossing::new(
                        Slot { edge: ids.eids[a.0 as usize].clone(), pos: a.1 },
                        Slot { edge: ids.eids[b.0 as usize].clone(), pos: b.1 },
                    )
                })
                .collect(),
        )
    }

    pub fn from_public(
        cfg: &CrossingConfiguration,
        ids: &IdMaps,
    ) -> Result<IxConfig, ConfigError> {
        let mut crossings = Vec::with_capacity(cfg.crossings.len());
        for c in &cfg.crossings {
            let slot = |s: &Slot| -> Result<IxSlot, ConfigError> {
                Ok((
                    ids.edge_index(&s.edge).ok_or(ConfigError::UnknownEdge(s.edge.clone()))?,
                    s.pos,
                ))
            };
            let (a, b) = (slot(&c.a)?, slot(&c.b)?);
            crossings.push(if a <= b { [a, b] } else { [b, a] });
        }
        crossings.sort();
        Ok(IxConfig { crossings })
    }
}

/// Canonical level-k enumeration: an outer stream of pair multisets
/// (non-decreasing sequences of pair indices) and, per multiset, the slot
/// arrangements that satisfy the canonicality constraints.
pub(crate) struct IxConfigIter {
    pairs: Vec<[u32; 2]>, // candidate unordered pairs (thin edge indices), e <= f
    k: usize,
    max_mult: u32,
    /// Current multiset as indices into `pairs`, non-decreasing; empty once
    /// exhausted. None before the first step.
    multiset: Option<Vec<usize>>,
    /// Configurations generated from the current multiset, in order.
    batch: Vec<IxConfig>,
    batch_pos: usize,
    done: bool,
}

impl IxConfigIter {
    pub fn new(ig: &Ig, k: u32, opts: EnumOptions) -> IxConfigIter {
        let thin: Vec<u32> =
            (0..ig.ne() as u32).filter(|&e| !ig.thick[e as usize]).collect();
        let mut pairs = Vec::new();
        for (i, &e) in thin.iter().enumerate() {
            if opts.allow_self {
                pairs.push([e, e]);
            }
            for &f in &thin[i + 1..] {
                if !opts.allow_adjacent {
                    let [a, b] = ig.edges[e as usize];
                    let [c, d] = ig.edges[f as usize];
                    if a == c || a == d || b == c || b == d {
                        continue;
                    }
                }
                pairs.push([e, f]);
            }
        }
        pairs.sort_unstable();
        IxConfigIter {
            pairs,
            k: k as usize,
            max_mult: opts.max_pair_multiplicity.unwrap_or(k),
            multiset: None,
            batch: Vec::new(),
            batch_pos: 0,
            done: false,
        }
    }

    /// First/next non-decreasing index sequence with the multiplicity cap.
    fn advance_multiset(&mut self) -> bool {
        let npairs = self.pairs.len();
        if npairs == 0 && self.k > 0 {
            return false;
        }
        loop {
            let next = match &mut self.multiset {
                None => {
                    if self.k == 0 {
                        self.multiset = Some(Vec::new());
                        return true;
                    }
                    Some(vec![0usize; self.k])
                }
                Some(ms) => {
                    if ms.is_empty() {
                        return false; // k == 0 already yielded
                    }
                    // Increment the last position that can still move.
                    let mut i = self.k;
                    loop {
                        if i == 0 {
                            return false;
                        }
                        i -= 1;
                        if ms[i] + 1 < npairs {
                            let v = ms[i] + 1;
                            for slot in ms[i..].iter_mut() {
                                *slot = v;
                            }
                            break;
                        }
                    }
                    None
                }
            };
            if let Some(ms) = next {
                self.multiset = Some(ms);
            }
            let ms = self.multiset.as_ref().unwrap();
            // Multiplicity cap.
            let mut ok = true;
            let mut run = 1;
            for w in ms.windows(2) {
                if w[0] == w[1] {
                    run += 1;
                    if run > self.max_mult {
                        ok = false;
                        break;
                    }
                } else {
                    run = 1;
                }
            }
            if ok {
                return true;
            }
        }
    }

    /// Builds all canonical slot arrangements of the current multiset.
    fn fill_batch(&mut self) {
        self.batch.clear();
        self.batch_pos = 0;
        let ms = self.multiset.as_ref().unwrap();
        let k = ms.len();
        if k == 0 {
            self.batch.push(IxConfig::default());
            return;
        }
        // Tokens: crossing c contributes (c, 0) on pair lower edge and (c, 1)
        // on the upper (for self pairs both on the same edge).
        #[derive(Clone, Copy, PartialEq, Eq, Debug)]
        struct Token {
            crossing: usize,
            side: u8,
        }
        let pair_of: Vec<[u32; 2]> = ms.iter().map(|&pi| self.pairs[pi]).collect();
        let mut edges: Vec<u32> = pair_of.iter().flat_map(|p| p.iter().copied()).collect();
        edges.sort_unstable();
        edges.dedup();
        // Token lists per edge, in (crossing, side) order.
        let mut tokens: Vec<Vec<Token>> = vec![Vec::new(); edges.len()];
        let eidx = |e: u32| edges.binary_search(&e).unwrap();
        for (c, &[e, f]) in pair_of.iter().enumerate() {
            tokens[eidx(e)].push(Token { crossing: c, side: 0 });
            tokens[eidx(f)].push(Token { crossing: c, side: 1 });
        }
        // Per-edge arrangements: permutations of the token list filtered by:
        //  - same-pair crossings in label order along the pair's lower edge
        //    (side-0 tokens; also covers self pairs),
        //  - a self-crossing's side 0 before its side 1.
        let mut per_edge: Vec<Vec<Vec<Token>>> = Vec::with_capacity(edges.len());
        for (ei, toks) in tokens.iter().enumerate() {
            let mut arrangements = Vec::new();
            let mut perm = toks.clone();
            permutations(&mut perm, 0, &mut |p| {
                for (i, t) in p.iter().enumerate() {
                    for u in &p[i + 1..] {
                        let same_pair =
                            pair_of[t.crossing] == pair_of[u.crossing];
                        // Label order along the lower edge.
                        if same_pair
                            && t.side == 0
                            && u.side == 0
                            && t.crossing > u.crossing
                        {
                            return;
                        }
                        // Self-crossing slot order.
                        if t.crossing == u.crossing && t.side > u.side {
                            return;
                        }
                    }
                }
                arrangements.push(p.to_vec());
            });
            arrangements.sort_by(|a, b| {
                a.iter()
                    .map(|t| (t.crossing, t.side))
                    .cmp(b.iter().map(|t| (t.crossing, t.side)))
            });
            per_edge.push(arrangements);
            let _ = ei;
        }
        // Cartesian product over edges.
        let mut choice = vec![0usize; edges.len()];
        loop {
            let mut slots: Vec<[IxSlot; 2]> = vec![[(0, 0), (0, 0)]; k];
            for (ei, &ci) in choice.iter().enumerate() {
                for (pos, t) in per_edge[ei][ci].iter().enumerate() {
                    slots[t.crossing][t.side as usize] = (edges[ei], pos as u32);
                }
            }
            for s in slots.iter_mut() {
                if s[1] < s[0] {
                    s.swap(0, 1);
                }
            }
            slots.sort();
            self.batch.push(IxConfig { crossings: slots });
            // Advance the mixed-radix choice.
            let mut i = 0;
            loop {
                if i == edges.len() {
                    self.batch.sort();
                    self.batch.dedup();
                    return;
                }
                choice[i] += 1;
                if choice[i] < per_edge[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
        }
    }
}

fn permutations<T: Copy>(a: &mut Vec<T>, k: usize, f: &mut impl FnMut(&[T])) {
    if k == a.len() {
        f(a);
        return;
    }
    for i in k..a.len() {
        a.swap(k, i);
        permutations(a, k + 1, f);
        a.swap(k, i);
    }
}

impl Iterator for IxConfigIter {
    type Item = IxConfig;

    fn next(&mut self) -> Option<IxConfig> {
        loop {
            if self.done {
                return None;
            }
            if self.batch_pos < self.batch.len() {
                let item = self.batch[self.batch_pos].clone();
                self.batch_pos += 1;
                return Some(item);
            }
            if self.advance_multiset() {
                self.fill_batch();
            } else {
                self.done = true;
            }
        }
    }
}
