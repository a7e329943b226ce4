use edgeideal::decomposition::{is_shellable, is_vertex_decomposable, verify_certificate, VdSolver};
use edgeideal::generate::bipartite_from_mask;
use edgeideal::harness::ideal_pd;
use edgeideal::homology::{boundary_ranks, reduced_homology};
use edgeideal::invariants::{a_invariant, is_three_disjoint, matching_number};
use edgeideal::{Certificate, Family, FieldSpec, Graph, SimplicialComplex, SquareFreeMonomialIdeal, VertexSet};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n, any::<u64>()).prop_map(|(n, mask)| Graph::from_pair_mask(n, mask).unwrap())
}

fn complex_strategy() -> impl Strategy<Value = SimplicialComplex> {
    (1usize..=7, prop::collection::vec(any::<u32>(), 0..6)).prop_map(|(n, gens)| {
        let ground = VertexSet::first(n);
        SimplicialComplex::from_facets(ground, gens.into_iter().map(|g| VertexSet::from_bits(g) & ground))
            .unwrap()
    })
}

fn ideal_strategy() -> impl Strategy<Value = SquareFreeMonomialIdeal> {
    (1usize..=7, prop::collection::vec(any::<u32>(), 1..6)).prop_filter_map("proper nonzero", |(n, gens)| {
        let ground = VertexSet::first(n);
        let gens: Vec<VertexSet> = gens
            .into_iter()
            .map(|g| VertexSet::from_bits(g) & ground)
            .filter(|g| !g.is_empty())
            .collect();
        if gens.is_empty() {
            return None;
        }
        SquareFreeMonomialIdeal::new(ground, gens).ok()
    })
}

fn all_graphs(max_n: usize) -> impl Iterator<Item = Graph> {
    (0..=max_n).flat_map(|n| Family::AllGraphs(n).graphs().unwrap())
}

fn is_antichain(c: &SimplicialComplex) -> bool {
    let f = c.facets();
    f.windows(2).all(|w| w[0] < w[1])
        && f.iter().all(|a| f.iter().all(|b| a == b || !a.is_subset(*b)))
}

/// 2-colors by BFS; returns an edge joining two equally colored vertices
/// if there is one.
fn odd_cycle_edge(g: &Graph) -> Option<(usize, usize)> {
    let mut color = vec![None; g.universe()];
    for s in g.vertices().iter() {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u).unwrap().iter() {
                match color[v] {
                    None => {
                        color[v] = Some(!color[u].unwrap());
                        queue.push_back(v);
                    }
                    Some(c) if c == color[u].unwrap() => return Some((u, v)),
                    Some(_) => {}
                }
            }
        }
    }
    None
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn graphs_are_symmetric_and_loopless(g in graph_strategy(10)) {
        for u in 0..g.universe() {
            prop_assert!(!g.has_edge(u, u));
            for v in 0..g.universe() {
                prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn bipartition_is_verified(g in graph_strategy(9)) {
        match g.bipartition() {
            Some(bp) => {
                prop_assert_eq!(bp.side_one | bp.side_two, g.vertices());
                prop_assert!(bp.side_one.is_disjoint(bp.side_two));
                for (u, v) in g.edges() {
                    prop_assert!(bp.side_one.contains(u) != bp.side_one.contains(v));
                }
            }
            None => prop_assert!(odd_cycle_edge(&g).is_some()),
        }
    }

    #[test]
    fn neighborhood_deletion_composes(g in graph_strategy(9), x in 0usize..9, t in any::<u32>()) {
        prop_assume!(g.contains_vertex(x));
        let closed = g.closed_neighbors(x).unwrap();
        let t = VertexSet::from_bits(t) & (g.vertices() - closed);
        let left = g.closed_neighborhood_delete(x).unwrap().delete_vertices(t).unwrap();
        let right = g.delete_vertices(closed | t).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn complement_is_an_involution(g in graph_strategy(10)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn reduced_euler_characteristic(c in complex_strategy()) {
        let h = reduced_homology(&c, FieldSpec::Rationals);
        let f = c.f_vector();
        // f.0[k] counts k-element faces, which have dimension k - 1
        let alternating: i64 = f.0.iter().enumerate()
            .map(|(k, &n)| if k % 2 == 1 { n as i64 } else { -(n as i64) })
            .sum();
        prop_assert_eq!(h.euler_characteristic(), alternating);
    }

    #[test]
    fn boundary_ranks_respect_rank_nullity(c in complex_strategy()) {
        let f = c.f_vector();
        let ranks = boundary_ranks(&c, FieldSpec::Rationals);
        for (k, &n) in f.0.iter().enumerate() {
            prop_assert!(ranks[k] + ranks[k + 1] <= n);
        }
        let gf2 = boundary_ranks(&c, FieldSpec::Prime(2));
        for (k, &n) in f.0.iter().enumerate() {
            prop_assert!(gf2[k] + gf2[k + 1] <= n);
        }
    }

    #[test]
    fn operations_keep_facets_an_antichain(c in complex_strategy(), v in 0usize..7, w in any::<u32>()) {
        prop_assert!(is_antichain(&c));
        let x = VertexSet::singleton(v) & c.ground_set();
        prop_assert!(is_antichain(&c.deletion(x)));
        if c.is_face(x) {
            prop_assert!(is_antichain(&c.link(x).unwrap()));
        }
        let w = VertexSet::from_bits(w) & c.ground_set();
        prop_assert!(is_antichain(&c.restriction(w).unwrap()));
        if let Some(dim) = c.dimension() {
            for d in -1..=dim {
                prop_assert!(is_antichain(&c.pure_skeleton(d).unwrap()));
            }
        }
    }

    #[test]
    fn emitted_certificates_replay(g in graph_strategy(8)) {
        let complex = SimplicialComplex::independence_complex(&g);
        if let Some(tree) = VdSolver::new().decompose_graph(&g) {
            prop_assert!(verify_certificate(&complex, &Certificate::Decomposition(tree)).unwrap());
        }
        if let Some(order) = is_shellable(&complex) {
            prop_assert!(verify_certificate(&complex, &Certificate::Shelling(order)).unwrap());
        }
    }

    #[test]
    fn induced_matching_is_a_matching(g in graph_strategy(9)) {
        let m = a_invariant(&g);
        prop_assert!(m.size() <= matching_number(&g));
        for (i, &e) in m.edges.iter().enumerate() {
            for &f in &m.edges[i + 1..] {
                prop_assert!(is_three_disjoint(&g, e, f).unwrap());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn alexander_dual_is_an_involution(i in ideal_strategy()) {
        let dual = i.alexander_dual().unwrap();
        prop_assert_eq!(dual.alexander_dual().unwrap(), i);
    }

    #[test]
    fn monomial_scaling_keeps_pd(i in ideal_strategy(), extra in 1usize..=2) {
        let n = i.ground_set().len();
        prop_assume!(n + extra <= 8);
        let wide = VertexSet::first(n + extra);
        let fresh = wide - i.ground_set();
        let embedded = i.embed(wide).unwrap();
        let scaled = embedded.times_monomial(fresh).unwrap();
        let pd = ideal_pd(&i, FieldSpec::Rationals).unwrap();
        prop_assert_eq!(ideal_pd(&embedded, FieldSpec::Rationals).unwrap(), pd);
        prop_assert_eq!(ideal_pd(&scaled, FieldSpec::Rationals).unwrap(), pd);
    }
}

#[test]
fn link_and_deletion_match_graph_operations() {
    for g in all_graphs(6) {
        let delta = SimplicialComplex::independence_complex(&g);
        for x in g.vertices().iter() {
            let lk = delta.link(VertexSet::singleton(x)).unwrap();
            let smaller = SimplicialComplex::independence_complex(&g.closed_neighborhood_delete(x).unwrap());
            assert_eq!(lk.facets(), smaller.facets(), "{g:?} link {x}");
            let del = delta.deletion(VertexSet::singleton(x));
            let without = g.delete_vertices(VertexSet::singleton(x)).unwrap();
            assert_eq!(del.facets(), SimplicialComplex::independence_complex(&without).facets());
            assert_eq!(del.ground_set(), without.vertices());
        }
    }
}

#[test]
fn face_count_is_number_of_independent_sets() {
    for g in all_graphs(6) {
        let independent = g
            .vertices()
            .subsets()
            .filter(|s| g.edges().iter().all(|&(u, v)| !(s.contains(u) && s.contains(v))))
            .count();
        let delta = SimplicialComplex::independence_complex(&g);
        assert_eq!(delta.f_vector().total(), independent, "{g:?}");
    }
}

#[test]
fn stanley_reisner_of_edge_ideal_is_independence_complex() {
    for g in all_graphs(6) {
        let sr = SquareFreeMonomialIdeal::edge_ideal(&g).stanley_reisner_complex().unwrap();
        assert_eq!(sr, SimplicialComplex::independence_complex(&g), "{g:?}");
    }
}

#[test]
fn memoization_is_transparent() {
    let memo = VdSolver::new();
    let family = Family::RandomGraph { n: 7, p: 0.5, seed: 11 };
    let sparse = Family::RandomGraph { n: 7, p: 0.25, seed: 12 };
    let graphs = family.graphs().unwrap().take(250).chain(sparse.graphs().unwrap().take(250));
    for g in graphs {
        let fresh = VdSolver::without_memo().decompose_graph(&g);
        assert_eq!(memo.decompose_graph(&g), fresh, "{g:?}");
        let complex = SimplicialComplex::independence_complex(&g);
        assert_eq!(is_vertex_decomposable(&complex).is_some(), fresh.is_some());
    }
    assert!(memo.memo_len() > 0);
}

#[test]
fn leaf_reduction_agrees_with_complex_search() {
    for a in 1..=3 {
        for b in a..=3 {
            for mask in 0..1u64 << (a * b) {
                let g = bipartite_from_mask(a, b, mask);
                if g.degree_one_vertex().is_none() {
                    continue;
                }
                let complex = SimplicialComplex::independence_complex(&g);
                let direct = VdSolver::without_memo().decompose(&complex).is_some();
                assert_eq!(VdSolver::new().decompose_graph(&g).is_some(), direct, "{g:?}");
            }
        }
    }
}
