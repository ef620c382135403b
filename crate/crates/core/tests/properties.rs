use gridtrees::bounds::{evaluate_bounds, DEFAULT_MAX_K};
use gridtrees::districting::{identity_from_score, score_partition, DistrictPartition};
use gridtrees::randwalk::escape_triple;
use gridtrees::shapes::random_simple_polyomino;
use gridtrees::{io, multiplier_profile, tau, Cell, GridGraph, Vertex};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn simple_polyomino() -> impl Strategy<Value = GridGraph> {
    (1usize..30, any::<u64>()).prop_map(|(faces, seed)| random_simple_polyomino(faces, &mut ChaCha8Rng::seed_from_u64(seed)))
}

/// Any grid graph on at most 16 points of a 4x4 box, with a random edge subset.
fn grid_graph() -> impl Strategy<Value = GridGraph> {
    (1u32..(1 << 16), any::<u32>()).prop_map(|(points, edge_mask)| {
        let vertices: Vec<Vertex> =
            (0..16).filter(|i| points >> i & 1 == 1).map(|i| Vertex::new(i % 4, i / 4)).collect();
        let full = GridGraph::induced(vertices.clone()).unwrap();
        let edges: Vec<(Vertex, Vertex)> = full
            .edges()
            .iter()
            .enumerate()
            .filter(|(i, _)| edge_mask >> (i % 32) & 1 == 1)
            .map(|(_, e)| (e.first(), e.second()))
            .collect();
        GridGraph::new(vertices, edges).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multipliers_multiply_to_tau(g in grid_graph()) {
        let profile = multiplier_profile(&g);
        prop_assert_eq!(profile.product(), BigRational::from_integer(BigInt::from(tau(&g).value)));
        prop_assert!(profile.below_one().is_empty());
    }

    #[test]
    fn tau_is_product_over_components(g in grid_graph()) {
        let product: num_bigint::BigUint = g
            .components()
            .iter()
            .map(|c| tau(&g.subgraph_from_indices(c)).value)
            .product();
        prop_assert_eq!(tau(&g).value, product);
    }

    #[test]
    fn simple_graph_boundary_identity(g in simple_polyomino()) {
        let id = g.boundary_identity_check().unwrap();
        prop_assert!(id.holds);
        prop_assert_eq!(g.area(), g.num_vertices() - g.top_left_boundary().len());
    }

    #[test]
    fn escape_identities_on_polyominoes(g in simple_polyomino()) {
        let profile = multiplier_profile(&g);
        for &v in g.vertices().iter().filter(|&&v| g.has_cell(Cell::new(v))) {
            let t = escape_triple(&g, v).unwrap();
            prop_assert!(t.identities_hold());
            prop_assert_eq!(&t.multiplier(), profile.get(v).unwrap());
        }
        for v in g.top_left_boundary() {
            prop_assert_eq!(profile.get(v).unwrap(), &BigRational::one());
        }
    }

    #[test]
    fn bounds_hold_on_polyominoes(g in simple_polyomino()) {
        let r = evaluate_bounds(&g, DEFAULT_MAX_K).unwrap();
        prop_assert!(r.lyons.is_pass() && r.lower.is_pass() && r.upper.is_pass() && r.refined.is_pass());
        prop_assert!(r.refined_upper_log <= r.upper_log + 1e-9);
        prop_assert_eq!(r.level_set_sizes.values().sum::<usize>(), r.vertices);
        prop_assert_eq!(r.level_set_sizes.get(&1).copied().unwrap_or(0), g.top_left_boundary().len());
    }

    #[test]
    fn grid_file_round_trip(g in grid_graph()) {
        if let Ok(text) = io::write_grid(&g) {
            prop_assert_eq!(io::parse_grid(&text).unwrap(), g);
        }
    }

    #[test]
    fn split_along_a_row_obeys_identity(height in 4i64..9, width in 2i64..7, cut in 2i64..7) {
        // two stacked rectangles, each at least two rows tall, are both simple
        prop_assume!(cut <= height - 2);
        let g = gridtrees::shapes::rectangle(width, height);
        let assignment = g.vertices().iter().map(|p| if p.y >= cut { 1 } else { 2 }).collect();
        let p = DistrictPartition::from_indices(g, assignment).unwrap();
        let s = score_partition(&p).unwrap();
        prop_assert_eq!(s.cut_edges as i64, width);
        prop_assert!(identity_from_score(&s).verdict.is_pass());
    }
}
