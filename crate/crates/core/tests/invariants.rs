//! Property tests tying the modules together on random instances.

use proptest::prelude::*;
use squareperc::analysis::{
    bfs_t1_components, check_extremal_bound, is_bonded_characterization, is_bonded_definition,
    t1_components, t1_diameter, t1_diameter_at_most_two, Diameter,
};
use squareperc::edgelist::{graph_from_str, graph_to_string};
use squareperc::graph::{pair_count, Graph, VertexPair};
use squareperc::squares::{build_t1, enumerate_squares, t1_neighbors};

/// Random graph as (n, edge mask over pair indices).
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs = pair_count(n) as usize;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |mask| {
            let mut edges = Vec::new();
            let mut k = 0;
            for a in 0..n as u32 {
                for b in a + 1..n as u32 {
                    if mask[k] {
                        edges.push((a, b));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in arb_graph(48)) {
        let cc = g.complement().complement();
        prop_assert_eq!(g.edges(), cc.edges());
        prop_assert_eq!(g.m() + g.complement().m(), pair_count(g.n()));
    }

    #[test]
    fn neighbor_relation_is_symmetric(g in arb_graph(32)) {
        for u in 0..g.n() as u32 {
            for v in u + 1..g.n() as u32 {
                let cn_u = g.common_neighbors(&[u]).unwrap();
                let cn_v = g.common_neighbors(&[v]).unwrap();
                let u_in = cn_v[u as usize / 64] >> (u % 64) & 1 == 1;
                let v_in = cn_u[v as usize / 64] >> (v % 64) & 1 == 1;
                prop_assert_eq!(u_in, v_in);
            }
        }
    }

    #[test]
    fn pair_index_round_trips(n in 2u32..2000, salt in any::<u64>()) {
        let total = pair_count(n as usize);
        let idx = salt % total;
        let p = VertexPair::from_index(n, idx).unwrap();
        prop_assert_eq!(p.index(n), idx);
        prop_assert!(p.a() < p.b() && p.b() < n);
    }

    #[test]
    fn induced_subgraph_edge_count_matches_brute_force(g in arb_graph(12), pick in any::<u64>()) {
        let subset: Vec<u32> = (0..g.n() as u32).filter(|v| pick >> v & 1 == 1).collect();
        let (h, map) = g.induced_subgraph(&subset).unwrap();
        let mut expect = 0u64;
        for i in 0..subset.len() {
            for j in i + 1..subset.len() {
                if g.has_edge(subset[i], subset[j]) {
                    expect += 1;
                    prop_assert!(h.has_edge(i as u32, j as u32));
                }
            }
        }
        prop_assert_eq!(h.m(), expect);
        prop_assert_eq!(map, subset);
    }

    #[test]
    fn non_edges_are_sorted_and_complete(g in arb_graph(32)) {
        let ne = g.non_edges();
        prop_assert_eq!(ne.len() as u64, pair_count(g.n()) - g.m());
        let n = g.n() as u32;
        for w in ne.windows(2) {
            prop_assert!(w[0].index(n) < w[1].index(n));
        }
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(40)) {
        let text = graph_to_string(&g);
        let back = graph_from_str(&text).unwrap();
        prop_assert_eq!(graph_to_string(&back), text);
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn handshake_and_component_invariants(g in arb_graph(20)) {
        let squares = enumerate_squares(&g);
        let degree_sum: usize = g
            .non_edges()
            .iter()
            .map(|&f| t1_neighbors(&g, f).unwrap().len())
            .sum();
        prop_assert_eq!(degree_sum, 2 * squares.len());

        let d = t1_components(&g);
        prop_assert_eq!(d.square_count(), squares.len() as u64);
        let total: usize = (0..d.num_components() as u32).map(|i| d.component_size(i)).sum();
        prop_assert_eq!(total as u64, g.non_edge_count());
        for id in 0..d.num_components() as u32 {
            if let Some(supp) = d.support(id) {
                prop_assert!(supp.len() >= 4);
                prop_assert!(d.component_size(id) >= supp.len().div_ceil(2));
            }
        }
        prop_assert!(check_extremal_bound(&g, &d).is_empty());

        // independent BFS route produces the same partition
        let t1 = build_t1(&g, true).unwrap();
        let bfs = bfs_t1_components(&t1);
        prop_assert_eq!(d.labels(), bfs.as_slice());
    }

    #[test]
    fn bonded_routes_agree(g in arb_graph(20)) {
        let squares = enumerate_squares(&g);
        for sq in &squares {
            prop_assert_eq!(
                is_bonded_definition(sq, &squares),
                is_bonded_characterization(&g, sq)
            );
        }
    }

    #[test]
    fn diameter_two_check_agrees_with_exact_diameter(g in arb_graph(16)) {
        let d = t1_components(&g);
        if d.num_non_edges() == 0 {
            return Ok(());
        }
        let le2 = t1_diameter_at_most_two(&g).unwrap();
        let exact = t1_diameter(&g, 100_000).unwrap();
        let expect = match exact {
            Diameter::Finite(d) => d <= 2,
            Diameter::Infinite => false,
        };
        prop_assert_eq!(le2, expect);
    }

    #[test]
    fn t1_connectivity_implies_s_connectivity(g in arb_graph(20)) {
        let d = t1_components(&g);
        if d.t1_connected() == Ok(true) {
            prop_assert!(d.s_connected().connected);
        }
        if !d.s_connected().connected {
            prop_assert_eq!(d.t1_connected(), Ok(false));
        }
    }
}

// S-connectivity does not imply T1-connectivity: complete bipartite parts
// {0,1} / {2,3,4} plus a spare vertex gives one non-trivial component of
// three squares alongside isolated T1 vertices.
#[test]
fn s_connected_but_t1_disconnected_witness() {
    let g = Graph::new(6, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
    let d = t1_components(&g);
    assert_eq!(d.square_count(), 3);
    assert!(d.s_connected().connected);
    assert!(!d.s_connected().vacuous);
    assert_eq!(d.t1_connected(), Ok(false));
    assert_eq!(d.isolated_count(), 5);
}
