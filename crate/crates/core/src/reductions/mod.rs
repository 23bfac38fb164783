//! Hardness constructions as instance generators with checkable identities.

mod clique;
mod gadget;
mod independent_set;
mod verify;

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;

pub use clique::{clique_to_vcdim, copy_vertex, forward_clique};
pub use gadget::{gadget_vertex, max_partial_vertex_cover, mpvc_to_mpvcd, partial_cover_value, GADGET_SIZE};
pub use gadget::{back_map, forward_cover};
pub use independent_set::{forward_independent, is_to_disting_transversal};
pub use verify::{verify_reduction, Verification};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionKind {
    CliqueToVcdim,
    IsToDt,
    MpvcToMpvcd,
}

impl ReductionKind {
    pub fn tag(self) -> &'static str {
        match self {
            ReductionKind::CliqueToVcdim => "clique-to-vcdim",
            ReductionKind::IsToDt => "is-to-dt",
            ReductionKind::MpvcToMpvcd => "mpvc-to-mpvcd",
        }
    }
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for ReductionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "clique-to-vcdim" => Ok(ReductionKind::CliqueToVcdim),
            "is-to-dt" => Ok(ReductionKind::IsToDt),
            "mpvc-to-mpvcd" => Ok(ReductionKind::MpvcToMpvcd),
            other => Err(Error::input(format!("unknown reduction kind '{other}'"))),
        }
    }
}

/// Which sides of the clique construction are turned into cliques.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// No edges inside either side.
    Bipartite,
    /// The vertex-copy side is a clique.
    Split,
    /// Both sides are cliques.
    CoBipartite,
}

impl Variant {
    pub fn tag(self) -> &'static str {
        match self {
            Variant::Bipartite => "bipartite",
            Variant::Split => "split",
            Variant::CoBipartite => "co-bipartite",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "bipartite" => Ok(Variant::Bipartite),
            "split" => Ok(Variant::Split),
            "co-bipartite" => Ok(Variant::CoBipartite),
            other => Err(Error::input(format!("unknown variant '{other}'"))),
        }
    }
}

/// A source or target instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Graph(Graph),
    Hypergraph(Hypergraph),
}

/// Source and target of a reduction with the parameter map and the relation
/// their optima must satisfy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionCertificate {
    pub kind: ReductionKind,
    pub variant: Option<Variant>,
    pub source: Graph,
    /// Source parameter: clique size, independent-set size or cover budget.
    pub k: usize,
    pub target: Instance,
    pub k_prime: usize,
}

impl ReductionCertificate {
    /// The relation checked by [`verify_reduction`], as text.
    pub fn identity(&self) -> String {
        match self.kind {
            ReductionKind::CliqueToVcdim => "clique(G) >= k <=> vcdim(N[G']) >= k_prime".to_string(),
            ReductionKind::IsToDt => "alpha(G) >= k <=> dt(H) <= k_prime".to_string(),
            ReductionKind::MpvcToMpvcd => "opt(N[G'], k_prime) = opt_cover(G, k) + 12k + 1".to_string(),
        }
    }

    /// Hypergraph the target optimum is computed on.
    pub fn target_hypergraph(&self) -> Hypergraph {
        match &self.target {
            Instance::Graph(g) => crate::graph::neighborhood_hypergraph(g),
            Instance::Hypergraph(h) => h.clone(),
        }
    }

    /// `k_prime` as the construction defines it.
    pub fn expected_k_prime(&self) -> usize {
        match (self.kind, &self.target) {
            (ReductionKind::CliqueToVcdim, _) => self.k,
            (ReductionKind::IsToDt, Instance::Hypergraph(h)) => h.n().saturating_sub(self.k),
            (ReductionKind::IsToDt, Instance::Graph(g)) => g.n().saturating_sub(self.k),
            (ReductionKind::MpvcToMpvcd, _) => 4 * self.k,
        }
    }
}
