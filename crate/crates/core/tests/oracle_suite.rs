//! Cross-validation against independent brute-force oracles.
//!
//! The fast gradient test (cycle detection in the modified Hasse digraph)
//! is checked against the literal definition (no closed nontrivial
//! V-path), exhaustively on small complexes and on seeded random matchings
//! of larger ones. The refinement-pruned automorphism searches are checked
//! against filtering all permutations. Enumeration counts are pinned to
//! values computed independently.

use morse_complex::autgroup::{complex_automorphisms, graph_automorphisms};
use morse_complex::complex::{generate_cycle, generate_path, generate_simplex};
use morse_complex::complex::generate_boundary_simplex;
use morse_complex::fixtures::{all_named, kite, moebius5, star3};
use morse_complex::graph::Graph;
use morse_complex::hasse::build_hasse;
use morse_complex::morse::{
    build_morse_complex, enumerate_gvfs, enumerate_v_paths, is_gradient, make_dvf, primitives,
    DiscreteVectorField, PrimitiveVector,
};
use morse_complex::perm::Permutation;
use morse_complex::SimplicialComplex;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The definitional gradient test: no V-path returns to its start.
fn gradient_by_paths(k: &SimplicialComplex, v: &DiscreteVectorField) -> bool {
    enumerate_v_paths(k, v).iter().all(|p| !p.is_closed())
}

/// All matchings of the primitives of `k`, by exhaustive subset search.
/// Only usable when `k` has few primitives.
fn all_matchings(k: &SimplicialComplex) -> Vec<DiscreteVectorField> {
    let prims = primitives(k);
    assert!(prims.len() <= 16, "exhaustive subset search is exponential");
    let mut out = Vec::new();
    for mask in 0u32..(1 << prims.len()) {
        let chosen: Vec<PrimitiveVector> = prims
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, p)| *p)
            .collect();
        if let Ok(v) = make_dvf(k, &chosen) {
            out.push(v);
        }
    }
    out
}

#[test]
fn gradient_test_matches_path_oracle_exhaustively() {
    for k in [
        generate_cycle(4).unwrap(),
        generate_path(4).unwrap(),
        star3(),
    ] {
        let matchings = all_matchings(&k);
        assert!(matchings.len() >= 20);
        for v in &matchings {
            assert_eq!(
                is_gradient(&k, v),
                gradient_by_paths(&k, v),
                "disagreement on {:?}",
                v.pairs()
            );
        }
    }
}

#[test]
fn gradient_test_matches_path_oracle_on_random_matchings() {
    let k = generate_boundary_simplex(3).unwrap();
    let prims = primitives(&k);
    let mut rng = ChaCha8Rng::seed_from_u64(20260813);
    let mut disagreements = 0;
    let mut gradients = 0;
    for trial in 0..10_000 {
        // A random matching: visit primitives in random order, include
        // each compatible one with probability 1/2 (every fourth trial
        // greedily, to reach maximal matchings too).
        let mut order: Vec<usize> = (0..prims.len()).collect();
        order.shuffle(&mut rng);
        let greedy = trial % 4 == 0;
        let mut used = vec![false; k.num_faces()];
        let mut chosen = Vec::new();
        for &i in &order {
            let p = prims[i];
            if !used[p.face] && !used[p.coface] && (greedy || rng.gen_bool(0.5)) {
                used[p.face] = true;
                used[p.coface] = true;
                chosen.push(p);
            }
        }
        let v = make_dvf(&k, &chosen).expect("chosen pairs form a matching");
        let fast = is_gradient(&k, &v);
        let slow = gradient_by_paths(&k, &v);
        if fast != slow {
            disagreements += 1;
        }
        if fast {
            gradients += 1;
        }
    }
    assert_eq!(disagreements, 0);
    // Both outcomes must actually occur for the agreement to mean much.
    assert!(gradients > 100, "too few gradient fields sampled: {gradients}");
    assert!(
        gradients < 10_000,
        "every sampled matching was gradient; the sampler is too tame"
    );
}

/// All permutations of `0..n`, for brute-force comparison.
fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    permute(&mut current, 0, &mut out);
    out
}

fn permute(current: &mut Vec<usize>, at: usize, out: &mut Vec<Vec<usize>>) {
    if at == current.len() {
        out.push(current.clone());
        return;
    }
    for i in at..current.len() {
        current.swap(at, i);
        permute(current, at + 1, out);
        current.swap(at, i);
    }
}

fn brute_force_graph_automorphisms(g: &Graph) -> Vec<Permutation> {
    let n = g.node_count();
    let mut out = Vec::new();
    for images in all_permutations(n) {
        let preserves = (0..n).all(|u| {
            (u + 1..n).all(|v| g.has_edge(u, v) == g.has_edge(images[u], images[v]))
        });
        if preserves {
            out.push(Permutation::new(images).unwrap());
        }
    }
    out.sort();
    out
}

#[test]
fn graph_search_matches_brute_force() {
    let star = Graph::with_edges(4, &[(0, 1), (0, 2), (0, 3)]);
    let edge_plus_isolated = Graph::with_edges(3, &[(0, 1)]);
    let cases = vec![
        Graph::path(4),
        Graph::cycle(6),
        Graph::complete(4),
        star,
        edge_plus_isolated,
        build_hasse(&generate_path(3).unwrap()).as_graph(),
        build_hasse(&kite()).as_graph(),
    ];
    for g in cases {
        let brute = brute_force_graph_automorphisms(&g);
        let searched = graph_automorphisms(&g, 10_000_000).unwrap();
        assert_eq!(
            searched.elements(),
            brute.as_slice(),
            "mismatch on a graph with {} nodes",
            g.node_count()
        );
    }
}

#[test]
fn complex_search_matches_brute_force() {
    for (name, k) in all_named().unwrap() {
        if k.num_vertices() > 6 {
            continue;
        }
        let mut brute: Vec<Permutation> = all_permutations(k.num_vertices())
            .into_iter()
            .filter(|images| k.is_automorphism(images))
            .map(|images| Permutation::new(images).unwrap())
            .collect();
        brute.sort();
        let searched = complex_automorphisms(&k, 10_000_000).unwrap();
        assert_eq!(searched.elements(), brute.as_slice(), "mismatch on {name}");
    }
}

#[test]
fn every_subfield_of_a_gradient_field_is_gradient() {
    for k in [generate_cycle(4).unwrap(), star3(), kite()] {
        for v in enumerate_gvfs(&k, 1_000_000).unwrap() {
            let pairs = v.pairs();
            for mask in 0u32..(1 << pairs.len()) {
                let sub: Vec<PrimitiveVector> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, p)| *p)
                    .collect();
                let dvf = make_dvf(&k, &sub).expect("subset of a matching is a matching");
                assert!(is_gradient(&k, &dvf));
            }
        }
    }
}

#[test]
fn morse_vertices_equal_hasse_edges_on_all_fixtures() {
    for (name, k) in all_named().unwrap() {
        let hasse = build_hasse(&k);
        let m = build_morse_complex(&k, 5_000_000).unwrap();
        assert_eq!(
            m.num_vertices(),
            hasse.edge_count(),
            "vertex/incidence mismatch on {name}"
        );
        assert_eq!(m.num_vertices(), primitives(&k).len());
    }
}

#[test]
fn gradient_field_counts_on_cycles_and_paths() {
    let count = |k: &SimplicialComplex| build_morse_complex(k, 5_000_000).unwrap().num_faces();
    assert_eq!(count(&generate_cycle(5).unwrap()), 120);
    assert_eq!(count(&generate_cycle(6).unwrap()), 319);
    assert_eq!(count(&generate_path(5).unwrap()), 54);
}

#[test]
fn gradient_field_counts_by_size_on_star_and_kite() {
    let m_star = build_morse_complex(&star3(), 1_000_000).unwrap();
    assert_eq!(m_star.f_vector(), vec![6, 9, 4]);
    let m_kite = build_morse_complex(&kite(), 1_000_000).unwrap();
    assert_eq!(m_kite.f_vector(), vec![8, 19, 12]);
}

#[test]
fn gradient_field_counts_on_filled_kite_match_definition() {
    // A two-dimensional variant of the kite: the triangle is filled. The
    // Morse complex's f-vector must equal counting the matchings that the
    // definitional V-path test declares gradient, size by size.
    let k = SimplicialComplex::from_facets(&[&["a", "b", "c"], &["c", "d"]]).unwrap();
    let mut by_size = std::collections::BTreeMap::new();
    for v in all_matchings(&k) {
        if !v.is_empty() && gradient_by_paths(&k, &v) {
            *by_size.entry(v.len()).or_insert(0usize) += 1;
        }
    }
    let m = build_morse_complex(&k, 1_000_000).unwrap();
    let max_size = *by_size.keys().max().unwrap();
    let definitional: Vec<usize> = (1..=max_size)
        .map(|s| by_size.get(&s).copied().unwrap_or(0))
        .collect();
    assert_eq!(m.f_vector(), definitional);
}

#[test]
fn gradient_field_counts_on_solid_and_hollow_tetrahedron() {
    let solid = build_morse_complex(&generate_simplex(3).unwrap(), 5_000_000).unwrap();
    assert_eq!(solid.num_faces(), 12_820);
    let hollow = build_morse_complex(&generate_boundary_simplex(3).unwrap(), 5_000_000).unwrap();
    assert_eq!(hollow.f_vector(), vec![24, 216, 896, 1692, 1248, 256]);
    assert_eq!(hollow.num_faces(), 4_332);
}

#[test]
fn gradient_field_count_on_moebius_strip() {
    let m = build_morse_complex(&moebius5(), 5_000_000).unwrap();
    assert_eq!(m.num_vertices(), 35);
    assert_eq!(m.num_faces(), 204_621);
}
