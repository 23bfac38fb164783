//! Brute-force check of a certificate's identity.

use super::gadget::max_partial_vertex_cover;
use super::{ReductionCertificate, ReductionKind};
use crate::error::Result;
use crate::exact::SearchConfig;

/// Both optima and whether the certificate's identity holds for them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verification {
    pub holds: bool,
    pub source_opt: usize,
    pub target_opt: usize,
}

/// Solves both sides exhaustively and checks the identity. Fails with a
/// capacity error rather than passing when either side is too large.
pub fn verify_reduction(cert: &ReductionCertificate, cfg: &SearchConfig) -> Result<Verification> {
    let consistent = cert.k_prime == cert.expected_k_prime();
    let h = cert.target_hypergraph();
    let (holds, source_opt, target_opt) = match cert.kind {
        ReductionKind::CliqueToVcdim => {
            let src = cert.source.clique_number();
            let tgt = cfg.vc_dimension(&h)?.value;
            ((src >= cert.k) == (tgt >= cert.k_prime), src, tgt)
        }
        ReductionKind::IsToDt => {
            let src = cert.source.complement().clique_number();
            let tgt = cfg.min_distinguishing_transversal(&h)?.value;
            ((src >= cert.k) == (tgt <= cert.k_prime), src, tgt)
        }
        ReductionKind::MpvcToMpvcd => {
            let (src, _) = max_partial_vertex_cover(&cert.source, cert.k, cfg)?;
            let tgt = cfg.max_partial_vc(&h, cert.k_prime.min(h.n()))?.value;
            (tgt == src + 12 * cert.k + 1, src, tgt)
        }
    };
    Ok(Verification {
        holds: holds && consistent,
        source_opt,
        target_opt,
    })
}
