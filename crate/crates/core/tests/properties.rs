use proptest::prelude::*;

use partite::connectivity::{global_lambda, is_strong, lambda_at_least};
use partite::cut_improver::{spanning_kpartite_ec, target_lambda};
use partite::degree::{is_majority_colouring, majority_4_colouring};
use partite::oracle::{for_each_partition, partition_count};
use partite::random::{self, rng};
use partite::tree_packing::{tree_pack, validate_no_packing, validate_packing};
use partite::Error;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kpartite_bound_holds(seed in any::<u64>(), n in 4usize..25, k in 2usize..5, p in 0.05f64..0.6) {
        let g = random::connected_graph(n, p, &mut rng(seed));
        let lg = global_lambda(&g).unwrap().0;
        let out = spanning_kpartite_ec(&g, k, seed).unwrap();
        prop_assert!(lambda_at_least(&out.subgraph, target_lambda(lg, k)));
    }

    #[test]
    fn strong_iff_lambda_positive(seed in any::<u64>(), n in 2usize..15, p in 0.0f64..0.4) {
        let d = random::digraph(n, p, &mut rng(seed));
        prop_assert_eq!(is_strong(&d), global_lambda(&d).unwrap().0 >= 1);
    }

    #[test]
    fn tree_pack_answers_are_certified(seed in any::<u64>(), n in 2usize..20, p in 0.1f64..0.7) {
        let g = random::connected_graph(n, p, &mut rng(seed));
        match tree_pack(&g, 2) {
            Ok(t) => prop_assert!(validate_packing(&g, &t, 2)),
            Err(Error::NoPacking { witness, .. }) => prop_assert!(validate_no_packing(&g, 2, &witness)),
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    #[test]
    fn majority_colourings_are_valid(seed in any::<u64>(), n in 1usize..200, p in 0.0f64..0.2) {
        let d = random::digraph(n, p, &mut rng(seed));
        let c = majority_4_colouring(&d).unwrap();
        prop_assert!(is_majority_colouring(&d, &c.colours));
    }

    #[test]
    fn partition_enumeration_is_complete(n in 0usize..8, t in 1usize..5) {
        prop_assert_eq!(for_each_partition(n, t, |_| false).0, partition_count(n, t));
    }
}
