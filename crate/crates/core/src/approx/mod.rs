//! Approximation algorithms with checkable certificates.

pub(crate) mod greedy;
mod bounds;
mod double_hitting;
mod sauer;

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::exact::pad_to;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

pub use bounds::{sauer_threshold, upper_bound_classes, vc_dimension_hint};
pub use double_hitting::{approx_via_double_hitting, double_hit_count, greedy_partial_double_hitting};
pub use greedy::greedy_classes;
pub use sauer::{approx_max_vc_dimension, extract_shattered, ShatterCertificate};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Greedy,
    DoubleHitting,
    DoubleHittingTransfer,
    Baker,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Greedy => "greedy",
            Method::DoubleHitting => "double-hitting",
            Method::DoubleHittingTransfer => "double-hitting-transfer",
            Method::Baker => "baker",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxResult {
    pub witness: VertexSet,
    /// Objective reached by `witness` (class count, or double-hit count for
    /// [`Method::DoubleHitting`]).
    pub value: usize,
    /// Proven upper bound on the optimum.
    pub upper_bound: usize,
    /// `upper_bound / value`; 1 when both are zero.
    pub claimed_ratio: Ratio<u64>,
    pub method: Method,
    /// Double-hit count of the double-hitting witness, when that method ran.
    pub double_hit: Option<usize>,
}

impl ApproxResult {
    pub(crate) fn new(witness: VertexSet, value: usize, upper_bound: usize, method: Method) -> Self {
        let claimed_ratio = if value == 0 {
            Ratio::from_integer(1)
        } else {
            Ratio::new(upper_bound as u64, value as u64)
        };
        ApproxResult {
            witness,
            value,
            upper_bound,
            claimed_ratio,
            method,
            double_hit: None,
        }
    }

    /// Attaches the class-count certificate of [`upper_bound_classes`].
    pub(crate) fn certify(h: &Hypergraph, witness: VertexSet, value: usize, method: Method, d_hint: Option<usize>) -> Self {
        let hint = d_hint.unwrap_or_else(|| vc_dimension_hint(h));
        let ub = upper_bound_classes(h, witness.len(), Some(hint));
        ApproxResult::new(witness, value, ub.max(value), method)
    }
}

/// Greedy on the twin-free core, lifted back and padded to exactly `k`
/// vertices, with the tightest available upper bound attached.
pub fn approx_max_partial_vc(h: &Hypergraph, k: usize) -> Result<ApproxResult> {
    if k > h.n() {
        return Err(Error::input(format!("k={k} exceeds the vertex count {}", h.n())));
    }
    let red = h.remove_twins();
    let core = &red.hypergraph;
    let inner = greedy_classes(core, k.min(core.n()))?;
    let mut witness = red.lift(&inner.witness);
    pad_to(&mut witness, k, h.n());
    let value = h.class_count(&witness);
    Ok(ApproxResult::certify(h, witness, value, Method::Greedy, None))
}
