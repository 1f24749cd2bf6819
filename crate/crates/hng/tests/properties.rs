//! Seeded randomized properties of the core operations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hng::canon::{are_isomorphic, canonical_code, contains_induced, contains_subgraph};
use hng::graph::{graph6_decode, graph6_encode, Graph};
use hng::invariants::{
    chromatic_number, clique_cover_number, clique_number, distinct_vertices, independence_number,
    is_perfect, is_perfect_definitional, is_sum_perfect, is_threshold, is_threshold_by_forbidden,
    DistinctMode,
};
use hng::membership::{hereditary_ng_defect, ng_defect};

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x9e3779b97f4a7c15)
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn random_permuted(rng: &mut ChaCha8Rng, g: &Graph) -> Graph {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let mut h = Graph::empty(n).unwrap();
    for (u, v) in g.edges() {
        h.add_edge(perm[u], perm[v]);
    }
    h
}

#[test]
fn complement_is_an_involution_and_splits_edges() {
    let mut rng = rng();
    for _ in 0..300 {
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let c = g.complement();
        assert_eq!(c.complement(), g);
        assert_eq!(g.edge_count() + c.edge_count(), n * (n - 1) / 2);
    }
}

#[test]
fn graph6_round_trips() {
    let mut rng = rng();
    for _ in 0..300 {
        let n = rng.gen_range(1..=20);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        assert_eq!(graph6_decode(&graph6_encode(&g)).unwrap(), g);
    }
}

#[test]
fn canonical_code_is_permutation_invariant() {
    let mut rng = rng();
    for _ in 0..200 {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let h = random_permuted(&mut rng, &g);
        assert_eq!(canonical_code(&g), canonical_code(&h));
        assert!(are_isomorphic(&g, &h));
        assert!(are_isomorphic(&canonical_code(&g).to_graph(), &g));
    }
}

#[test]
fn induced_subsets_are_found_as_induced_and_as_subgraphs() {
    let mut rng = rng();
    for _ in 0..200 {
        let n = rng.gen_range(2..=10);
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(&mut rng, n, p);
        let mask = rng.gen_range(1..(1u32 << n));
        let h = g.induced_by_mask(mask);
        assert!(contains_induced(&g, &h).is_some());
        assert!(contains_subgraph(&g, &h).is_some());
    }
}

#[test]
fn clique_cover_is_complement_coloring() {
    let mut rng = rng();
    for _ in 0..150 {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        assert_eq!(clique_cover_number(&g), chromatic_number(&g.complement()));
        assert_eq!(independence_number(&g), clique_number(&g.complement()));
        assert!(clique_number(&g) <= chromatic_number(&g));
        assert!(independence_number(&g) <= clique_cover_number(&g));
        assert!(chromatic_number(&g) * independence_number(&g) >= n);
    }
}

#[test]
fn defect_is_complement_invariant_and_hereditary_defect_monotone() {
    let mut rng = rng();
    for _ in 0..100 {
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        assert_eq!(ng_defect(&g), ng_defect(&g.complement()));
        let h = hereditary_ng_defect(&g).unwrap();
        assert!(h.hereditary_defect >= ng_defect(&g));
        assert_eq!(
            h.hereditary_defect,
            hereditary_ng_defect(&g.complement()).unwrap().hereditary_defect
        );
        for v in 0..n {
            let child = g.delete_vertex(v).unwrap();
            assert!(
                hereditary_ng_defect(&child).unwrap().hereditary_defect <= h.hereditary_defect
            );
        }
    }
}

#[test]
fn threshold_routes_agree() {
    let mut rng = rng();
    for _ in 0..300 {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        assert_eq!(is_threshold(&g), is_threshold_by_forbidden(&g));
    }
}

#[test]
fn perfection_routes_agree() {
    let mut rng = rng();
    for _ in 0..150 {
        let n = rng.gen_range(1..=9);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        assert_eq!(is_perfect(&g).unwrap(), is_perfect_definitional(&g));
    }
}

#[test]
fn distinct_vertices_match_direct_recomputation() {
    let mut rng = rng();
    for _ in 0..100 {
        let n = rng.gen_range(2..=9);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let chi = chromatic_number(&g);
        let theta = clique_cover_number(&g);
        for (mode, value, f) in [
            (DistinctMode::Chi, chi, chromatic_number as fn(&Graph) -> usize),
            (DistinctMode::Theta, theta, clique_cover_number as fn(&Graph) -> usize),
        ] {
            let listed = distinct_vertices(&g, mode);
            for v in 0..n {
                let drops = f(&g.delete_vertex(v).unwrap()) < value;
                assert_eq!(listed.contains(&v), drops);
            }
        }
    }
}

#[test]
fn planted_obstructions_are_always_detected() {
    let ctx = hng::report::build_context().unwrap();
    let mut rng = rng();
    for _ in 0..200 {
        let seed = ctx.f.graphs[rng.gen_range(0..ctx.f.graphs.len())];
        let mut g = seed;
        while g.order() < 12 {
            g = g.add_vertex(rng.gen_range(0..1u32 << g.order())).unwrap();
        }
        // the planted member stays induced on the original vertices
        assert!(!ctx.f.free_of(&g));
    }
}

#[test]
fn sum_perfect_matches_its_obstruction_characterization() {
    let ctx = hng::report::build_context().unwrap();
    let c5 = hng::graph::construct_named(&hng::graph::NamedFamily::Cycle(5)).unwrap();
    let mut rng = rng();
    let mut checked = 0;
    for _ in 0..400 {
        let n = rng.gen_range(1..=9);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let free = ctx.f_s.free_of(&g) && contains_induced(&g, &c5).is_none();
        assert_eq!(is_sum_perfect(&g).unwrap(), free);
        checked += 1;
    }
    assert_eq!(checked, 400);
}
