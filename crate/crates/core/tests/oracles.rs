//! Brute-force reference implementations checked against the library.
//!
//! The oracles work on raw `u32` masks and share no code with the library
//! beyond building the input graphs.

use std::collections::{BTreeMap, HashSet};

use edgeideal::decomposition::{is_shellable, VdSolver};
use edgeideal::generate::{cycle, path, unlabeled_graphs};
use edgeideal::homology::{hochster_betti, is_cohen_macaulay, is_sequentially_cm, reduced_homology};
use edgeideal::ideals::cover_ideal_splitting;
use edgeideal::invariants::{a_invariant, matching_number};
use edgeideal::{Family, FieldSpec, Graph, SimplicialComplex, SquareFreeMonomialIdeal, VertexSet};

fn adjacency(g: &Graph) -> Vec<u32> {
    (0..g.universe())
        .map(|u| {
            (0..g.universe())
                .filter(|&v| g.has_edge(u, v))
                .fold(0u32, |m, v| m | 1 << v)
        })
        .collect()
}

fn independent(adj: &[u32], s: u32) -> bool {
    (0..adj.len()).all(|v| s >> v & 1 == 0 || adj[v] & s == 0)
}

fn independent_sets_within(adj: &[u32], w: u32) -> Vec<u32> {
    (0..=w).filter(|&s| s & !w == 0 && independent(adj, s)).collect()
}

fn rank_f64(mut m: Vec<Vec<f64>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).max_by(|&a, &b| m[a][c].abs().total_cmp(&m[b][c].abs())) else {
            break;
        };
        if m[p][c].abs() < 1e-9 {
            continue;
        }
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank {
                let f = m[r][c] / m[rank][c];
                let pivot = m[rank].clone();
                for (x, y) in m[r][c..cols].iter_mut().zip(&pivot[c..cols]) {
                    *x -= f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced homology dimensions, index 0 = degree -1, of the complex whose
/// face list (closed under subsets) is given.
fn naive_homology(faces: &[u32]) -> Vec<usize> {
    if faces.is_empty() {
        return vec![0];
    }
    let top = faces.iter().map(|f| f.count_ones()).max().unwrap() as usize;
    let by_size: Vec<Vec<u32>> = (0..=top)
        .map(|k| faces.iter().copied().filter(|f| f.count_ones() as usize == k).collect())
        .collect();
    let mut ranks = vec![0; top + 2];
    for k in 1..=top {
        let rows: Vec<Vec<f64>> = by_size[k]
            .iter()
            .map(|&f| {
                by_size[k - 1]
                    .iter()
                    .map(|&g| {
                        if g & !f != 0 || (f & !g).count_ones() != 1 {
                            return 0.0;
                        }
                        let removed = f & !g;
                        let below = (f & (removed - 1)).count_ones();
                        if below % 2 == 0 { 1.0 } else { -1.0 }
                    })
                    .collect()
            })
            .collect();
        ranks[k] = rank_f64(rows);
    }
    (0..=top).map(|k| by_size[k].len() - ranks[k] - ranks[k + 1]).collect()
}

/// Hochster's formula evaluated on restrictions of the independence complex.
fn naive_betti(g: &Graph) -> BTreeMap<(usize, usize), usize> {
    let adj = adjacency(g);
    let n = adj.len();
    let mut table = BTreeMap::new();
    for w in 0u32..1 << n {
        let j = w.count_ones() as usize;
        let h = naive_homology(&independent_sets_within(&adj, w));
        for (k, &d) in h.iter().enumerate() {
            if d > 0 && j >= k {
                *table.entry((j - k, j)).or_insert(0) += d;
            }
        }
    }
    table
}

fn library_betti(g: &Graph) -> BTreeMap<(usize, usize), usize> {
    hochster_betti(&SquareFreeMonomialIdeal::edge_ideal(g), FieldSpec::Rationals)
        .unwrap()
        .entries()
        .collect()
}

fn maximal(faces: &[u32]) -> Vec<u32> {
    faces
        .iter()
        .copied()
        .filter(|&f| !faces.iter().any(|&g| g != f && f & !g == 0))
        .collect()
}

/// Vertex decomposability straight from the recursive definition.
fn naive_vd(faces: &[u32]) -> bool {
    let facets = maximal(faces);
    if facets.len() <= 1 {
        return true;
    }
    let support = faces.iter().fold(0, |a, f| a | f);
    (0..32).filter(|x| support >> x & 1 == 1).any(|x| {
        let del: Vec<u32> = faces.iter().copied().filter(|f| f >> x & 1 == 0).collect();
        let lk: Vec<u32> = faces
            .iter()
            .copied()
            .filter(|f| f >> x & 1 == 1)
            .map(|f| f & !(1 << x))
            .collect();
        maximal(&del).iter().all(|f| facets.contains(f)) && naive_vd(&del) && naive_vd(&lk)
    })
}

fn shelling_condition(order: &[u32]) -> bool {
    (1..order.len()).all(|j| {
        (0..j).all(|i| {
            let diff = order[j] & !order[i];
            (0..32).filter(|x| diff >> x & 1 == 1).any(|x| {
                (0..j).any(|l| order[j] & !order[l] == 1 << x)
            })
        })
    })
}

fn permutations(items: &mut Vec<u32>, k: usize, visit: &mut dyn FnMut(&[u32]) -> bool) -> bool {
    if k == items.len() {
        return visit(items);
    }
    for i in k..items.len() {
        items.swap(k, i);
        if permutations(items, k + 1, visit) {
            return true;
        }
        items.swap(k, i);
    }
    false
}

/// Shellability by trying every facet order.
fn naive_shellable(faces: &[u32]) -> bool {
    let mut facets = maximal(faces);
    permutations(&mut facets, 0, &mut |o| shelling_condition(o))
}

fn independence_faces(g: &Graph) -> Vec<u32> {
    let adj = adjacency(g);
    let all = (1u32 << adj.len()) - 1;
    independent_sets_within(&adj, all)
}

fn set(v: &[usize]) -> VertexSet {
    v.iter().copied().collect()
}

fn disjoint_k2s() -> Graph {
    Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()
}

fn small_graphs(max_n: usize) -> impl Iterator<Item = Graph> {
    (0..=max_n).flat_map(|n| Family::AllGraphs(n).graphs().unwrap())
}

#[test]
fn p3_betti_numbers_by_hand_enumeration() {
    let p3 = path(3);
    let expected: BTreeMap<_, _> = [((0, 0), 1), ((1, 2), 2), ((2, 3), 1)].into_iter().collect();
    assert_eq!(naive_betti(&p3), expected);
    assert_eq!(library_betti(&p3), expected);
    let table = hochster_betti(&SquareFreeMonomialIdeal::edge_ideal(&p3), FieldSpec::Rationals).unwrap();
    assert_eq!(table.regularity().unwrap(), 1);
    assert_eq!(table.projective_dimension().unwrap(), 2);
}

#[test]
fn betti_tables_match_naive_hochster_on_small_graphs() {
    for g in small_graphs(5) {
        assert_eq!(library_betti(&g), naive_betti(&g), "{g:?}");
    }
    for g in unlabeled_graphs(6).unwrap() {
        assert_eq!(library_betti(&g), naive_betti(&g), "{g:?}");
    }
}

#[test]
fn c4_homology_rules_out_cohen_macaulay() {
    let c4 = cycle(4);
    let h = naive_homology(&independence_faces(&c4));
    // two disjoint edges: H̃_0 = 1 below the top dimension 1
    assert_eq!(h, vec![0, 1, 0]);
    let delta = SimplicialComplex::independence_complex(&c4);
    assert_eq!(reduced_homology(&delta, FieldSpec::Rationals).dims, h);
    assert!(!is_cohen_macaulay(&delta, FieldSpec::Rationals).unwrap());
    assert!(!is_sequentially_cm(&delta, FieldSpec::Rationals).unwrap());
}

#[test]
fn homology_matches_naive_on_small_independence_complexes() {
    for g in small_graphs(5) {
        let delta = SimplicialComplex::independence_complex(&g);
        let naive = naive_homology(&independence_faces(&g));
        assert_eq!(reduced_homology(&delta, FieldSpec::Rationals).dims, naive, "{g:?}");
    }
}

#[test]
fn vertex_decomposability_matches_definition() {
    let solver = VdSolver::new();
    let k2 = path(2);
    assert!(naive_vd(&independence_faces(&k2)));
    assert!(solver.decompose_graph(&k2).is_some());
    assert!(!naive_vd(&independence_faces(&cycle(4))));
    assert!(solver.decompose_graph(&cycle(4)).is_none());
    assert!(naive_vd(&independence_faces(&disjoint_k2s())));
    assert!(solver.decompose_graph(&disjoint_k2s()).is_some());

    let graphs = small_graphs(5).chain(unlabeled_graphs(6).unwrap());
    for g in graphs {
        let expected = naive_vd(&independence_faces(&g));
        assert_eq!(solver.decompose_graph(&g).is_some(), expected, "{g:?}");
        let complex = SimplicialComplex::independence_complex(&g);
        assert_eq!(VdSolver::without_memo().decompose(&complex).is_some(), expected, "{g:?}");
    }
}

#[test]
fn shellability_matches_exhaustive_orders() {
    assert!(naive_shellable(&independence_faces(&path(2))));
    assert!(!naive_shellable(&independence_faces(&cycle(4))));
    assert!(is_shellable(&SimplicialComplex::independence_complex(&cycle(4))).is_none());
    let graphs = small_graphs(5).chain(unlabeled_graphs(6).unwrap());
    for g in graphs {
        let faces = independence_faces(&g);
        if maximal(&faces).len() > 7 {
            continue;
        }
        let complex = SimplicialComplex::independence_complex(&g);
        assert_eq!(is_shellable(&complex).is_some(), naive_shellable(&faces), "{g:?}");
    }
}

#[test]
fn cover_ideal_is_hitting_set_dual_up_to_seven_vertices() {
    for g in small_graphs(7) {
        let adj = adjacency(&g);
        let n = adj.len();
        let full = (1u32 << n) - 1;
        // complements of maximal independent sets are the minimal covers
        let mut covers: Vec<u32> = (0..=full)
            .filter(|&s| independent(&adj, s))
            .filter(|&s| (0..n).all(|v| s >> v & 1 == 1 || adj[v] & s != 0))
            .map(|s| full & !s)
            .collect();
        covers.sort_unstable();
        let edge = SquareFreeMonomialIdeal::edge_ideal(&g);
        let cover = SquareFreeMonomialIdeal::cover_ideal(&g);
        if g.edge_count() == 0 {
            assert!(cover.is_unit());
            continue;
        }
        let dual = edge.alexander_dual().unwrap();
        let mut got: Vec<u32> = dual.generators().iter().map(|s| s.bits()).collect();
        got.sort_unstable();
        assert_eq!(got, covers, "{g:?}");
        assert_eq!(dual, cover);
    }
}

fn brute_induced_matching(adj: &[u32]) -> usize {
    let n = adj.len();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| adj[u] >> v & 1 == 1)
        .collect();
    let apart = |(a, b): (usize, usize), (c, d): (usize, usize)| {
        let ends = [a, b, c, d];
        let distinct = ends.iter().collect::<HashSet<_>>().len() == 4;
        let mask = 1u32 << c | 1 << d;
        distinct && adj[a] & mask == 0 && adj[b] & mask == 0
    };
    // an induced matching of size k needs 2k vertices
    let mut best = usize::from(!edges.is_empty());
    for (i, &e) in edges.iter().enumerate() {
        for (j, &f) in edges.iter().enumerate().skip(i + 1) {
            if !apart(e, f) {
                continue;
            }
            best = best.max(2);
            for &h in &edges[j + 1..] {
                if apart(e, h) && apart(f, h) {
                    best = best.max(3);
                }
            }
        }
    }
    best
}

#[test]
fn induced_matching_matches_brute_force_up_to_seven_vertices() {
    assert_eq!(brute_induced_matching(&adjacency(&path(4))), 1);
    assert_eq!(a_invariant(&path(4)).size(), 1);
    for g in small_graphs(7) {
        assert_eq!(a_invariant(&g).size(), brute_induced_matching(&adjacency(&g)), "{g:?}");
    }
}

fn brute_matching(g: &Graph) -> usize {
    let edges = g.edges();
    (0u32..1 << edges.len())
        .filter(|&s| {
            let mut used = 0u32;
            (0..edges.len()).filter(|i| s >> i & 1 == 1).all(|i| {
                let (u, v) = edges[i];
                let m = 1 << u | 1 << v;
                let free = used & m == 0;
                used |= m;
                free
            })
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

#[test]
fn matching_number_matches_edge_subset_search() {
    assert_eq!(brute_matching(&path(4)), 2);
    assert_eq!(matching_number(&path(4)), 2);
    for g in small_graphs(5) {
        assert_eq!(matching_number(&g), brute_matching(&g), "{g:?}");
    }
}

#[test]
fn splitting_identities_by_direct_expansion() {
    // P3 = 0-1-2 with leaf 0: N(1) = {0,2}, G' is empty, G'' = {2}
    let p3 = path(3);
    let s = cover_ideal_splitting(&p3, 0).unwrap();
    assert_eq!(s.neighbor, 1);
    assert_eq!(s.g_prime.order(), 0);
    assert_eq!(s.g_dblprime.vertices(), set(&[2]));
    let ground = p3.vertices();
    let rhs = SquareFreeMonomialIdeal::new(ground, [set(&[0, 2])])
        .unwrap()
        .sum(&SquareFreeMonomialIdeal::new(ground, [set(&[1])]).unwrap());
    assert_eq!(rhs, SquareFreeMonomialIdeal::cover_ideal(&p3));
    assert!(s.sum_holds && s.intersection_holds);

    // P4 = 0-1-2-3 with leaf 0: N(1) = {0,2}, G' = {3}, G'' = 2-3
    let p4 = path(4);
    let s = cover_ideal_splitting(&p4, 0).unwrap();
    let ground = p4.vertices();
    let left = SquareFreeMonomialIdeal::new(ground, [set(&[0, 2])]).unwrap();
    let right = SquareFreeMonomialIdeal::new(ground, [set(&[1, 2]), set(&[1, 3])]).unwrap();
    assert_eq!(left.sum(&right), SquareFreeMonomialIdeal::cover_ideal(&p4));
    let both = SquareFreeMonomialIdeal::new(ground, [set(&[0, 1, 2])]).unwrap();
    assert_eq!(left.intersection(&right), both);
    assert!(s.sum_holds && s.intersection_holds);

    let k2 = path(2);
    let s = cover_ideal_splitting(&k2, 0).unwrap();
    assert!(s.sum_holds && s.intersection_holds);
    let cover = SquareFreeMonomialIdeal::cover_ideal(&k2);
    assert_eq!(cover.generators(), &[set(&[0]), set(&[1])]);
}

#[test]
fn seven_vertex_isomorphism_classes() {
    assert_eq!(unlabeled_graphs(7).unwrap().len(), 1044);
}
