//! Independent checking of drawing certificates.
//!
//! The verifier replays the planarization from the graph and the claimed
//! crossings, then re-derives faces, Euler genus, orientability and every
//! rigid constraint of the embedding. It shares the deterministic
//! transformations with the solver but none of its search machinery.

use alloc::format;
use alloc::string::String;

use crate::config::CrossingConfiguration;
use crate::faces::{verify_embedding, EmbeddingCertificate};
use crate::graph::{SpecialGraph, Surface};
use crate::planarize::planarize;

/// A machine-checkable witness that `graph` has a drawing with
/// `claimed_crossings` crossings on `surface`. Self-contained: the graph
/// rides along (file formats store its hash as well).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DrawingCertificate {
    pub graph: SpecialGraph,
    pub surface: Surface,
    pub claimed_crossings: u32,
    pub crossings: CrossingConfiguration,
    /// Embedding of the planarization in the claimed surface.
    pub embedding: EmbeddingCertificate,
}

/// Accepts iff every claim holds; the error names the first failure.
pub fn verify_certificate(cert: &DrawingCertificate) -> Result<(), String> {
    let report = cert.graph.validate();
    if !report.is_ok() {
        return Err(format!("graph invalid: {report}"));
    }
    if cert.claimed_crossings as usize != cert.crossings.crossing_count() {
        return Err(format!(
            "count mismatch: claims {} crossings, configuration has {}",
            cert.claimed_crossings,
            cert.crossings.crossing_count()
        ));
    }
    // Thick-edge and slot-structure checks.
    cert.crossings.validate(&cert.graph).map_err(|e| format!("{e}"))?;
    if cert.embedding.surface != cert.surface {
        return Err(format!(
            "surface mismatch: drawing claims {}, embedding claims {}",
            cert.surface, cert.embedding.surface
        ));
    }
    // Replay the planarization and check the embedding against it: rotation
    // validity, rigid prescriptions (original vertices and the alternation
    // at crossing vertices), faces, Euler genus, orientability.
    let pl = planarize(&cert.graph, &cert.crossings).map_err(|e| format!("{e}"))?;
    verify_embedding(&pl.graph, &cert.embedding)
        .map_err(|e| format!("planarization embedding rejected: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeId;
    use crate::solver::{crossing_number, CrossOutcome, SolveOptions};
    use crate::testutil;

    fn k5_witness() -> DrawingCertificate {
        let k5 = testutil::special_from_edges(5, &testutil::complete(5));
        match crossing_number(&k5, Surface::sphere(), &SolveOptions::default()).unwrap() {
            CrossOutcome::Solved { certificate, .. } => *certificate,
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn solver_output_verifies() {
        verify_certificate(&k5_witness()).unwrap();
    }

    #[test]
    fn count_tampering_is_rejected() {
        let mut cert = k5_witness();
        cert.claimed_crossings += 1;
        let err = verify_certificate(&cert).unwrap_err();
        assert!(err.contains("count mismatch"), "{err}");
    }

    #[test]
    fn thick_edge_crossing_is_rejected() {
        let mut cert = k5_witness();
        // Declare one crossed edge thick after the fact.
        let crossed: EdgeId = cert.crossings.crossings[0].a.edge.clone();
        cert.graph.thick.insert(crossed);
        let err = verify_certificate(&cert).unwrap_err();
        assert!(err.contains("thick"), "{err}");
    }

    #[test]
    fn surface_tampering_is_rejected() {
        let k5 = testutil::special_from_edges(5, &testutil::complete(5));
        let cert = match crossing_number(&k5, Surface::torus(), &SolveOptions::default()).unwrap()
        {
            CrossOutcome::Solved { certificate, .. } => *certificate,
            other => panic!("{other:?}"),
        };
        // The torus witness has no crossings; claiming it embeds in the
        // sphere must fail at the Euler-genus check.
        let mut cert = cert;
        cert.surface = Surface::sphere();
        cert.embedding.surface = Surface::sphere();
        let err = verify_certificate(&cert).unwrap_err();
        assert!(err.contains("Euler genus") || err.contains("exceeding"), "{err}");
    }

    #[test]
    fn rotation_tampering_is_rejected() {
        let mut cert = k5_witness();
        // Swap two entries in some vertex's rotation: either the rotation
        // stops being a permutation of the incident ends (caught), or it
        // changes the face structure (caught by the genus check) or violates
        // a rigid constraint.
        let (_, rot) = cert.embedding.rotation_system.rotation.iter_mut().next().unwrap();
        rot.swap(0, 1);
        assert!(verify_certificate(&cert).is_err());
    }
}
