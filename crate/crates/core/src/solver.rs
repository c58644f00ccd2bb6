//! Exact crossing numbers on a fixed surface, and crossing sequences.
//!
//! Iterative deepening over the crossing count k: level k is solved by
//! scanning every canonical k-crossing configuration and testing whether its
//! planarization embeds in the target surface. The first witness at the
//! first feasible level is the crossing number; a level ends only when every
//! configuration has been evaluated, so the reported value never depends on
//! scan scheduling. Sphere levels test planarity in linear time; higher
//! surfaces run the genus search with a per-test node budget, and a level
//! with budget-exhausted tests and no witness yields `Unknown`.
//!
//! Optional witness hints (known drawings, e.g. from the family generators)
//! are scanned before the canonical stream of their level. They only
//! accelerate finding a witness; every level below the answer is still
//! exhaustively refuted.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::config::{CrossingConfiguration, EnumOptions, IxConfig, IxConfigIter};
use crate::genus::{self, Feasible, GenusCtx, GenusOptions};
use crate::graph::{GraphError, SpecialGraph, Surface};
use crate::index::{IdMaps, Ig};
use crate::planarity::{self, CageScratch};
use crate::planarize;
use crate::verify::DrawingCertificate;

/// Options for [`crossing_number`] and [`crossing_sequence`].
#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Highest crossing count to try; default: (number of thin edges)^2.
    pub cap: Option<u32>,
    /// Node budget for each per-configuration embeddability test.
    pub budget: u64,
    /// Node budget for whole-graph genus computations (level 0 and
    /// [`crossing_sequence`] termination).
    pub genus_budget: u64,
    pub allow_adjacent: bool,
    pub allow_self: bool,
    pub max_pair_multiplicity: Option<u32>,
    /// Known drawings, scanned before the canonical stream of their level.
    pub hints: Vec<CrossingConfiguration>,
    /// Disable hints and scan strictly in canonical order, making the
    /// emitted certificate the canonically least one.
    pub deterministic: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            cap: None,
            budget: 20_000_000,
            genus_budget: GenusOptions::default().budget,
            allow_adjacent: true,
            allow_self: false,
            max_pair_multiplicity: None,
            hints: Vec::new(),
            deterministic: false,
        }
    }
}

#[derive(Clone, Debug)]
pub enum CrossOutcome {
    /// Exact crossing number with a verified-checkable witness drawing.
    Solved { crossings: u32, certificate: Box<DrawingCertificate> },
    /// The thick subgraph alone does not embed in the surface: the crossing
    /// number is infinite.
    Infeasible,
    /// Not settled within the caps: the crossing number is at least this.
    Unknown { at_least: u32 },
}

/// A crossing sequence `(cr_0, cr_1, ..., 0)`; for nonorientable sequences
/// index 0 is the sphere and index j >= 1 the surface with j crosscaps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrossingSequence {
    pub orientable: bool,
    pub entries: Vec<u32>,
}

impl CrossingSequence {
    /// Strictly decreasing until the final 0.
    pub fn is_valid(&self) -> bool {
        !self.entries.is_empty()
            && *self.entries.last().unwrap() == 0
            && self.entries.windows(2).all(|w| w[0] > w[1])
    }
}

impl fmt::Display for CrossingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

#[derive(Clone, Debug)]
pub enum SequenceOutcome {
    Computed { sequence: CrossingSequence, certificates: Vec<DrawingCertificate> },
    /// Some level could not be settled; the genus at which it happened and
    /// the crossing-number lower bound there.
    Unknown { at_genus: u32, at_least: u32 },
    /// The thick subgraph does not embed below the termination genus.
    Infeasible { at_genus: u32 },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SolveError {
    Graph(String),
    MixedOrientability,
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::Graph(s) => f.write_str(s),
            SolveError::MixedOrientability => {
                f.write_str("crossing sequences of mixed orientability cannot combine")
            }
        }
    }
}

impl core::error::Error for SolveError {}

impl From<GraphError> for SolveError {
    fn from(e: GraphError) -> Self {
        SolveError::Graph(format!("{e}"))
    }
}

/// How one candidate configuration fared against the surface.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TestVerdict {
    Feasible,
    Refuted,
    /// The per-test budget ran out before a decision.
    Inconclusive,
}

/// An opaque candidate drawing skeleton at some level.
#[derive(Clone, Debug)]
pub struct LevelCandidate {
    pub(crate) ix: IxConfig,
}

/// Evaluates candidates; stateful (owns scratch buffers and budgets).
pub trait CandidateTester {
    fn test(&mut self, candidate: &LevelCandidate) -> TestVerdict;
}

/// Result of scanning one level.
pub struct LevelScan {
    /// First feasible candidate (its scan index and payload); every earlier
    /// candidate was evaluated and not feasible.
    pub winner: Option<(usize, LevelCandidate)>,
    /// Whether any evaluated non-winning candidate was inconclusive.
    pub inconclusive: bool,
}

/// Drives the evaluation of one level's candidate stream. Implementations
/// may parallelize, but must return the lowest-index feasible candidate and
/// an inconclusive flag covering every candidate before it — making the
/// outcome independent of worker count and scheduling.
pub trait LevelRunner: Sync {
    fn scan<'a>(
        &self,
        candidates: &mut (dyn Iterator<Item = LevelCandidate> + 'a),
        make_tester: &(dyn Fn() -> Box<dyn CandidateTester + 'a> + Sync + 'a),
    ) -> LevelScan;
}

/// In-order sequential scan with one tester.
pub struct SequentialRunner;

impl LevelRunner for SequentialRunner {
    fn scan<'a>(
        &self,
        candidates: &mut (dyn Iterator<Item = LevelCandidate> + 'a),
        make_tester: &(dyn Fn() -> Box<dyn CandidateTester + 'a> + Sync + 'a),
    ) -> LevelScan {
        let mut tester = make_tester();
        let mut inconclusive = false;
        for (index, candidate) in candidates.enumerate() {
            match tester.test(&candidate) {
                TestVerdict::Feasible => {
                    return LevelScan { winner: Some((index, candidate)), inconclusive }
                }
                TestVerdict::Refuted => {}
                TestVerdict::Inconclusive => inconclusive = true,
            }
        }
        LevelScan { winner: None, inconclusive }
    }
}

/// Exact crossing number of `g` on `s`; see the module docs.
pub fn crossing_number(
    g: &SpecialGraph,
    s: Surface,
    opts: &SolveOptions,
) -> Result<CrossOutcome, SolveError> {
    crossing_number_with(g, s, opts, &SequentialRunner)
}

pub fn crossing_number_with(
    g: &SpecialGraph,
    s: Surface,
    opts: &SolveOptions,
    runner: &dyn LevelRunner,
) -> Result<CrossOutcome, SolveError> {
    let (ig, ids) = Ig::build(g)?;

    // Necessary feasibility: the thick subgraph (with induced rotations)
    // must embed; a finite drawing restricts to an embedding of it.
    let keep: Vec<bool> = ig.thick.clone();
    if keep.iter().any(|&t| t) {
        let (thick_sub, _) = ig.edge_restriction(&keep);
        let mut ctx = GenusCtx::new(opts.genus_budget);
        if let Feasible::No = ctx.embeddable(&thick_sub, s, false) {
            return Ok(CrossOutcome::Infeasible);
        }
    }

    let thin_count = ig.thick.iter().filter(|&&t| !t).count() as u32;
    let cap = opts.cap.unwrap_or(thin_count * thin_count);
    let elb = euler_lower_bound(g, s);
    let enum_opts = EnumOptions {
        allow_adjacent: opts.allow_adjacent,
        allow_self: opts.allow_self,
        max_pair_multiplicity: opts.max_pair_multiplicity,
    };
    // Hints by level.
    let mut hints: Vec<(u32, IxConfig)> = Vec::new();
    if !opts.deterministic {
        for h in &opts.hints {
            if h.validate(g).is_ok() {
                if let Ok(ix) = IxConfig::from_public(h, &ids) {
                    hints.push((h.crossing_count() as u32, ix));
                }
            }
        }
    }

    for k in 0..=cap {
        if k < elb {
            continue; // level refuted by the Euler-formula bound
        }
        let level_hints: Vec<LevelCandidate> = hints
            .iter()
            .filter(|(kk, _)| *kk == k)
            .map(|(_, ix)| LevelCandidate { ix: ix.clone() })
            .collect();
        let mut stream = level_hints
            .into_iter()
            .chain(IxConfigIter::new(&ig, k, enum_opts).map(|ix| LevelCandidate { ix }));
        let ig_ref = &ig;
        let budget = opts.budget;
        let make_tester = move || -> Box<dyn CandidateTester + '_> {
            Box::new(SurfaceTester {
                ig: ig_ref,
                surface: s,
                budget,
                cage: CageScratch::default(),
            })
        };
        let scan = runner.scan(&mut stream, &make_tester);
        if let Some((_, winner)) = scan.winner {
            let certificate = materialize(g, &ids, s, &winner.ix, opts)?;
            return Ok(CrossOutcome::Solved { crossings: k, certificate: Box::new(certificate) });
        }
        if scan.inconclusive {
            return Ok(CrossOutcome::Unknown { at_least: k });
        }
    }
    Ok(CrossOutcome::Unknown { at_least: cap + 1 })
}

/// Per-configuration embeddability test: indexed planarization, then the
/// linear planarity path (sphere) or the genus search (higher surfaces).
struct SurfaceTester<'a> {
    ig: &'a Ig,
    surface: Surface,
    budget: u64,
    cage: CageScratch,
}

impl CandidateTester for SurfaceTester<'_> {
    fn test(&mut self, candidate: &LevelCandidate) -> TestVerdict {
        let pl = planarize::ix_planarize(self.ig, &candidate.ix);
        if self.surface.is_orientable() && self.surface.genus() == 0 {
            return if planarity::is_planar_rigid_with(&pl, &mut self.cage) {
                TestVerdict::Feasible
            } else {
                TestVerdict::Refuted
            };
        }
        // Fresh context per candidate: the verdict is a pure function of
        // (configuration, budget), independent of scan order.
        let mut ctx = GenusCtx::new(self.budget);
        match ctx.embeddable(&pl, self.surface, false) {
            Feasible::Yes(_) => TestVerdict::Feasible,
            Feasible::No => TestVerdict::Refuted,
            Feasible::Unknown => TestVerdict::Inconclusive,
        }
    }
}

/// Builds the verifiable certificate for the winning configuration through
/// the public planarization path.
fn materialize(
    g: &SpecialGraph,
    ids: &IdMaps,
    s: Surface,
    ix: &IxConfig,
    opts: &SolveOptions,
) -> Result<DrawingCertificate, SolveError> {
    let cfg = ix.to_public(ids);
    let pl = planarize::planarize(g, &cfg).map_err(|e| SolveError::Graph(format!("{e}")))?;
    let embedding = match genus::is_embeddable(
        &pl.graph,
        s,
        &GenusOptions { budget: opts.genus_budget },
    )? {
        genus::EmbedOutcome::Embeddable(cert) => cert,
        other => {
            return Err(SolveError::Graph(format!(
                "winning configuration failed witness extraction: {other:?}"
            )))
        }
    };
    Ok(DrawingCertificate {
        graph: g.clone(),
        surface: s,
        claimed_crossings: cfg.crossing_count() as u32,
        crossings: cfg,
        embedding,
    })
}

/// The crossing sequence of `g`: `(cr_0, ..., 0)` ending at the minimum
/// genus (orientable) or crosscap number (nonorientable; index 0 is the
/// sphere). Every entry is certified.
pub fn crossing_sequence(
    g: &SpecialGraph,
    orientable: bool,
    opts: &SolveOptions,
) -> Result<SequenceOutcome, SolveError> {
    crossing_sequence_with(g, orientable, opts, &SequentialRunner)
}

pub fn crossing_sequence_with(
    g: &SpecialGraph,
    orientable: bool,
    opts: &SolveOptions,
    runner: &dyn LevelRunner,
) -> Result<SequenceOutcome, SolveError> {
    let genus_opts = GenusOptions { budget: opts.genus_budget };
    let gamma = match genus::min_genus(g, orientable, &genus_opts)? {
        genus::GenusOutcome::Known { genus, .. } => genus,
        genus::GenusOutcome::Unknown => {
            return Ok(SequenceOutcome::Unknown { at_genus: 0, at_least: 0 })
        }
    };
    let mut entries = Vec::with_capacity(gamma as usize + 1);
    let mut certificates = Vec::new();
    for i in 0..gamma {
        let s = surface_at(orientable, i);
        match crossing_number_with(g, s, opts, runner)? {
            CrossOutcome::Solved { crossings, certificate } => {
                entries.push(crossings);
                certificates.push(*certificate);
            }
            CrossOutcome::Infeasible => {
                return Ok(SequenceOutcome::Infeasible { at_genus: i });
            }
            CrossOutcome::Unknown { at_least } => {
                return Ok(SequenceOutcome::Unknown { at_genus: i, at_least });
            }
        }
    }
    entries.push(0);
    let sequence = CrossingSequence { orientable, entries };
    debug_assert!(sequence.is_valid(), "crossing sequence must strictly decrease: {sequence}");
    Ok(SequenceOutcome::Computed { sequence, certificates })
}

/// The i-th surface of a sequence: genus-i orientable, or (for nonorientable
/// sequences) the sphere at 0 and i crosscaps beyond.
pub fn surface_at(orientable: bool, i: u32) -> Surface {
    if orientable || i == 0 {
        Surface::orientable(if orientable { i } else { 0 })
    } else {
        Surface::nonorientable(i)
    }
}

/// Euler-formula lower bound on the crossing number of simple graphs with at
/// least 3 vertices: `E - 3(V - 2) - 3 * euler_genus(s)`, clamped at 0;
/// multigraphs and tiny graphs get 0. Never exceeds the true value: each
/// crossing removal deletes one edge of an embedded subgraph.
pub fn euler_lower_bound(g: &SpecialGraph, s: Surface) -> u32 {
    let v = g.vertex_count();
    if v < 3 || g.graph.has_parallel_edges() {
        return 0;
    }
    let e = g.edge_count() as i64;
    let bound = e - 3 * (v as i64 - 2) - 3 * s.euler_genus() as i64;
    bound.max(0) as u32
}

/// The disjoint-union upper bound: `min_j seq1[j] + seq2[i - j]`, reading
/// entries beyond a sequence's end as 0.
pub fn union_upper_bound(
    seq1: &CrossingSequence,
    seq2: &CrossingSequence,
    i: u32,
) -> Result<u32, SolveError> {
    if seq1.orientable != seq2.orientable {
        return Err(SolveError::MixedOrientability);
    }
    let at = |s: &CrossingSequence, j: u32| s.entries.get(j as usize).copied().unwrap_or(0);
    Ok((0..=i).map(|j| at(seq1, j) + at(seq2, i - j)).min().expect("nonempty range"))
}
