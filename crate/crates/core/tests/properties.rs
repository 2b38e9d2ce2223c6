//! Property tests for the exact linear-algebra kernel.

use proptest::prelude::*;
use ydl_core::linmap::LinearMap;
use ydl_core::scalar::FieldSpec;
use ydl_core::Scalar;

fn q() -> FieldSpec {
    FieldSpec::Rational
}

fn arb_scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| q().ratio(n, d).unwrap())
}

/// A matrix with the given shape and small rational entries.
fn arb_matrix(rows: usize, cols: usize) -> impl Strategy<Value = LinearMap> {
    proptest::collection::vec(proptest::collection::vec(arb_scalar(), cols), rows)
        .prop_map(move |grid| LinearMap::from_rows(q(), &grid))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn compose_is_associative(
        a in arb_matrix(2, 3),
        b in arb_matrix(3, 4),
        c in arb_matrix(4, 2),
    ) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn kron_satisfies_mixed_product(
        f in arb_matrix(2, 3),
        g in arb_matrix(3, 2),
        f2 in arb_matrix(3, 2),
        g2 in arb_matrix(2, 3),
    ) {
        let lhs = f.kron(&g).compose(&f2.kron(&g2)).unwrap();
        let rhs = f.compose(&f2).unwrap().kron(&g.compose(&g2).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn invert_round_trips_when_nonsingular(m in arb_matrix(3, 3)) {
        if let Ok(inv) = m.invert() {
            prop_assert!(m.compose(&inv).unwrap().is_identity());
            prop_assert!(inv.compose(&m).unwrap().is_identity());
        }
    }

    #[test]
    fn flip_pairs_compose_to_identity(m in 1usize..5, n in 1usize..5) {
        let ab = LinearMap::flip(q(), m, n);
        let ba = LinearMap::flip(q(), n, m);
        prop_assert!(ba.compose(&ab).unwrap().is_identity());
    }

    #[test]
    fn scalar_print_parse_round_trips(s in arb_scalar()) {
        let printed = s.to_string();
        let reparsed = q().parse_scalar(&printed).unwrap();
        prop_assert_eq!(reparsed, s);
    }

    #[test]
    fn prime_field_print_parse_round_trips(v in 0u64..7) {
        let f = FieldSpec::Prime(7);
        let s = f.from_i64(v as i64);
        let reparsed = f.parse_scalar(&s.to_string()).unwrap();
        prop_assert_eq!(reparsed, s);
    }

    #[test]
    fn leg_permutations_compose_like_permutations(
        seed in proptest::sample::select(vec![
            (vec![2usize, 3, 2], vec![1usize, 0, 2]),
            (vec![2, 2, 2], vec![2, 0, 1]),
            (vec![3, 2, 4], vec![2, 1, 0]),
        ]),
    ) {
        let (dims, dest) = seed;
        let p = LinearMap::leg_permutation(q(), &dims, &dest);
        // inverse permutation: dest[j] tells which source lands at slot j
        let out_dims: Vec<usize> = dest.iter().map(|&s| dims[s]).collect();
        let mut inv_dest = vec![0usize; dest.len()];
        for (slot, &src) in dest.iter().enumerate() {
            inv_dest[src] = slot;
        }
        let pinv = LinearMap::leg_permutation(q(), &out_dims, &inv_dest);
        prop_assert!(pinv.compose(&p).unwrap().is_identity());
        prop_assert!(p.compose(&pinv).unwrap().is_identity());
    }
}
