//! Upper bounds on the number of classes `k` vertices can induce.

use crate::hypergraph::Hypergraph;
use crate::search::binomial;

/// `Σ_{i<d} C(n, i)`: more distinct edges than this force a shattered `d`-set.
pub fn sauer_threshold(n: usize, d: usize) -> u128 {
    (0..d).map(|i| binomial(n, i)).fold(0u128, u128::saturating_add)
}

/// Minimum of `2^k`, the distinct edge count, `⌊k(Δ+1)/2⌋ + 1` and, given a
/// VC-dimension bound `d`, `Σ_{i≤d} C(k, i)`.
pub fn upper_bound_classes(h: &Hypergraph, k: usize, d_hint: Option<usize>) -> usize {
    let pow = if k >= 63 { u128::MAX } else { 1u128 << k };
    let degree = (k as u128 * (h.max_degree() as u128 + 1)) / 2 + 1;
    let mut ub = pow.min(degree).min(h.distinct_edge_count() as u128);
    if let Some(d) = d_hint {
        ub = ub.min(sauer_threshold(k, d + 1));
    }
    ub as usize
}

/// A certified upper bound on the VC dimension: it is at most `log2` of the
/// distinct edge count, at most the largest edge, and at most 2 when no two
/// edges share two vertices (a shattered triple needs two edges through the
/// same pair).
pub fn vc_dimension_hint(h: &Hypergraph) -> usize {
    let m = h.distinct_edge_count();
    if m == 0 {
        return 0;
    }
    let mut d = (usize::BITS - 1 - m.leading_zeros()) as usize;
    d = d.min(h.max_edge_size());
    if h.find_incidence_four_cycle().is_none() {
        d = d.min(2);
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex_set::VertexSet;

    fn wide(n: usize, m: usize, degree: usize) -> Hypergraph {
        // m distinct edges where vertex 0 appears `degree` times
        let edges = (0..m)
            .map(|i| {
                let mut e = VertexSet::singleton(1 + i);
                if i < degree {
                    e.insert(0);
                }
                e
            })
            .collect();
        Hypergraph::new(n.max(m + 1), edges).unwrap()
    }

    #[test]
    fn degree_bound_instance() {
        let h = wide(0, 40, 3);
        assert_eq!(h.max_degree(), 3);
        assert_eq!(upper_bound_classes(&h, 2, None), 4);
        assert_eq!(upper_bound_classes(&h, 3, None), 7);
    }

    #[test]
    fn sauer_hint() {
        let h = wide(0, 40, 40);
        assert_eq!(upper_bound_classes(&h, 3, Some(1)), 4);
        assert_eq!(upper_bound_classes(&h, 0, None), 1);
        assert_eq!(sauer_threshold(4, 2), 5);
        assert_eq!(sauer_threshold(4, 0), 0);
    }

    #[test]
    fn hint_on_linear_hypergraph() {
        let h = Hypergraph::from_one_based(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4], vec![]]).unwrap();
        assert_eq!(vc_dimension_hint(&h), 2);
        let p = Hypergraph::from_one_based(3, &[vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(vc_dimension_hint(&p), 1);
    }
}
