mod common;

use common::*;
use partial_vc::exact::SearchConfig;
use partial_vc::generate::{complete_graph, random_cubic, random_graph};
use partial_vc::io;
use partial_vc::reductions::{
    back_map, clique_to_vcdim, forward_clique, forward_cover, forward_independent, is_to_disting_transversal,
    max_partial_vertex_cover, mpvc_to_mpvcd, partial_cover_value, verify_reduction, Instance, ReductionKind,
    Variant,
};
use partial_vc::{neighborhood_hypergraph, Error, Graph, VertexSet};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const VARIANTS: [Variant; 3] = [Variant::Bipartite, Variant::Split, Variant::CoBipartite];

fn target_graph(i: &Instance) -> &Graph {
    match i {
        Instance::Graph(g) => g,
        Instance::Hypergraph(_) => panic!("expected a graph target"),
    }
}

fn cliques(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    k_subsets(g.n(), k)
        .into_iter()
        .map(|s| (0..g.n()).filter(|&v| s >> v & 1 == 1).collect::<Vec<_>>())
        .filter(|vs| vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b))))
        .collect()
}

#[test]
fn clique_variants_shape_and_forward_map() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut graphs = vec![complete_graph(5), complete_graph(4), Graph::empty(5)];
    for _ in 0..6 {
        graphs.push(random_graph(&mut rng, 5, 0.7).unwrap());
    }
    for g in &graphs {
        for variant in VARIANTS {
            let cert = clique_to_vcdim(g, 4, variant).unwrap();
            assert_eq!(cert.k_prime, 4);
            let t = target_graph(&cert.target);
            match variant {
                Variant::Bipartite => assert!(t.is_bipartite()),
                Variant::CoBipartite => assert!(t.complement().is_bipartite()),
                Variant::Split => {}
            }
            let h = neighborhood_hypergraph(t);
            for c in cliques(g, 4) {
                assert!(h.is_shattered(&forward_clique(4, &c)), "{variant} {c:?}");
            }
        }
    }
}

#[test]
fn clique_identity_small() {
    let cfg = SearchConfig::default();
    for g in [complete_graph(4), complete_graph(3), Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()] {
        for variant in VARIANTS {
            let v = verify_reduction(&clique_to_vcdim(&g, 4, variant).unwrap(), &cfg).unwrap();
            assert!(v.holds, "{variant} {v:?}");
            assert_eq!(v.source_opt, brute_clique(&g));
        }
    }
}

#[test]
fn clique_parameter_limits() {
    let g = complete_graph(4);
    assert!(matches!(clique_to_vcdim(&g, 3, Variant::Split), Err(Error::Input(_))));
    assert!(matches!(clique_to_vcdim(&g, 25, Variant::Split), Err(Error::Capacity(_))));
}

#[test]
fn independent_set_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let cfg = SearchConfig::default();
    for _ in 0..12 {
        let g = random_graph(&mut rng, 5, 0.5).unwrap();
        let alpha = brute_clique(&g.complement());
        for s in 1..=4 {
            let cert = is_to_disting_transversal(&g, s).unwrap();
            let v = verify_reduction(&cert, &cfg).unwrap();
            assert!(v.holds, "s={s} {v:?}");
            assert_eq!(v.source_opt, alpha);
            let h = cert.target_hypergraph();
            for set in k_subsets(g.n(), s).into_iter().map(set_of) {
                let independent = set.iter().all(|a| set.iter().all(|b| !g.has_edge(a, b)));
                if independent {
                    let t = forward_independent(&cert, &set);
                    assert_eq!(t.len(), cert.k_prime);
                    assert_eq!(h.class_count(&t), h.m());
                }
            }
        }
    }
}

#[test]
fn gadget_degree_is_seven() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut graphs = vec![complete_graph(4)];
    for n in [6, 8, 10, 12] {
        graphs.push(random_cubic(&mut rng, n).unwrap());
    }
    for g in &graphs {
        let cert = mpvc_to_mpvcd(g, 1).unwrap();
        let t = target_graph(&cert.target);
        assert_eq!(t.max_degree(), 7);
        assert_eq!(t.n(), 12 * g.n() + g.edge_count());
        assert_eq!(cert.k_prime, 4);
    }
    assert!(mpvc_to_mpvcd(&Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap(), 1).is_err());
}

#[test]
fn gadget_identity_and_back_map_on_k4() {
    let g = complete_graph(4);
    let cfg = SearchConfig::default();
    let cert = mpvc_to_mpvcd(&g, 1).unwrap();
    let v = verify_reduction(&cert, &cfg).unwrap();
    assert!(v.holds);
    assert_eq!((v.source_opt, v.target_opt), (3, 16));

    let h = cert.target_hypergraph();
    let (opt, best) = max_partial_vertex_cover(&g, 1, &cfg).unwrap();
    assert_eq!(h.class_count(&forward_cover(&best)), opt + 12 + 1);
    let target = cfg.max_partial_vc(&h, 4).unwrap();
    let back = back_map(&g, 1, &target.witness);
    assert_eq!(back.len(), 1);
    assert_eq!(partial_cover_value(&g, &back), opt);
}

#[test]
fn certificate_sidecar_round_trip() {
    let g = complete_graph(5);
    let cert = clique_to_vcdim(&g, 4, Variant::CoBipartite).unwrap();
    let rec = io::parse_certificate(&io::write_certificate(&cert)).unwrap();
    assert_eq!(rec.kind, ReductionKind::CliqueToVcdim);
    assert_eq!(rec.variant, Some(Variant::CoBipartite));
    assert_eq!((rec.k, rec.k_prime), (4, 4));
    assert_eq!(rec.identity, cert.identity());

    let t = target_graph(&cert.target);
    assert_eq!(&io::parse_edge(&io::write_edge(t)).unwrap(), t);
    let empty: VertexSet = VertexSet::new();
    assert_eq!(forward_cover(&empty).len(), 0);
}
