use hopfpi::coinduction::{coinduce, verify_basis_independence, DualBases};
use hopfpi::linalg::{kernel_basis, rank};
use hopfpi::subquotients::examples::group_algebra_pair;
use hopfpi::{FieldSpec, Matrix, Scalar};
use proptest::prelude::*;

const F7: FieldSpec = FieldSpec::Prime(7);

fn matrix_mod7() -> impl Strategy<Value = Matrix> {
    (1usize..6, 1usize..8).prop_flat_map(|(r, c)| {
        proptest::collection::vec(0i64..7, r * c)
            .prop_map(move |v| Matrix::from_fn(F7, r, c, |i, j| Scalar::from_i64(F7, v[i * c + j])))
    })
}

proptest! {
    #[test]
    fn rank_plus_nullity(m in matrix_mod7()) {
        let k = kernel_basis(&m);
        prop_assert_eq!(rank(&m) + k.dim(), m.cols());
        prop_assert!(m.mul(&k.basis_matrix()).unwrap().is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn coinduced_coaction_ignores_the_dual_basis(seed in any::<u64>()) {
        let pair = group_algebra_pair(6, &[0, 2, 4], F7).unwrap();
        let w = coinduce(&pair, pair.require_hopf_quotient().unwrap().delta(0, 0)).unwrap();
        let choice = DualBases::random(&pair.hopf, seed).unwrap();
        prop_assert!(verify_basis_independence(&w, &[choice]).unwrap().passed());
    }
}
