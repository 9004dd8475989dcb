//! Coinduced comodules: maps `V -> H_a` satisfying the coinvariance
//! condition, with the coaction assembled from dual bases.

mod coinduced;
mod dual;

pub use coinduced::{
    coind_direct_sum_iso, coind_equivalence, coinduce, coinduced_subfamily, pipeline_from_isolated,
    unvec, vec_of, CoinducedComodule,
};
pub use dual::{omega_with, verify_basis_independence, xi_maps, DualBases};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comodules::verify_comodule;
    use crate::induction::{direct_sum_coaction, induce};
    use crate::linalg::{FieldSpec, Matrix, Subspace};
    use crate::structures::builtin::{
        taft_grouplikes, taft_mirror, taft_nilpotent_ideal, TaftParams,
    };
    use crate::subquotients::examples::*;
    use std::sync::Arc;

    const F7: FieldSpec = FieldSpec::Prime(7);

    #[test]
    fn vec_is_column_major() {
        let m = Matrix::from_ints(F7, &[&[1, 2], &[3, 4]]);
        let v: Vec<i64> = vec_of(&m).iter().map(|s| s.to_i64().unwrap()).collect();
        assert_eq!(v, vec![1, 3, 2, 4]);
        assert_eq!(unvec(F7, &vec_of(&m), 2, 2), m);
    }

    #[test]
    fn coinduction_on_the_group_algebra_pair() {
        let pair = group_algebra_pair(6, &[0, 2, 4], F7).unwrap();
        let c = pair.require_hopf_quotient().unwrap().clone();
        for rho in [c.unit(0).clone(), c.delta(0, 0).clone()] {
            let w = coinduce(&pair, &rho).unwrap();
            let ind = induce(&pair, &rho).unwrap();
            assert_eq!(w.dims(), ind.dims());
            assert!(verify_comodule(&w.comodule).passed());
        }
    }

    #[test]
    fn coaction_does_not_depend_on_the_dual_basis() {
        let pair = group_algebra_pair(6, &[0, 2, 4], F7).unwrap();
        let w = coinduce(&pair, pair.require_hopf_quotient().unwrap().delta(0, 0)).unwrap();
        let choices: Vec<DualBases> = (0..3)
            .map(|k| DualBases::random(&pair.hopf, k).unwrap())
            .collect();
        let r = verify_basis_independence(&w, &choices).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn mismatched_pairing_is_flagged() {
        let pair = group_algebra_pair(6, &[0, 2, 4], F7).unwrap();
        let w = coinduce(&pair, pair.require_hopf_quotient().unwrap().unit(0)).unwrap();
        let mut bad = DualBases::random(&pair.hopf, 11).unwrap();
        bad.duals = bad.bases.clone();
        let r = verify_basis_independence(&w, &[bad]).unwrap();
        let failing = r.failing_diagrams();
        assert!(failing.contains("dual pairing"));
        assert!(failing.contains("coaction unchanged"));
    }

    #[test]
    fn equivalence_and_direct_sum() {
        let pair = group_algebra_pair(6, &[0, 2, 4], F7).unwrap();
        let c = pair.require_hopf_quotient().unwrap().clone();
        let (rho, psi) = (c.unit(0).clone(), Matrix::unit_column(F7, 2, 1));
        let (wv, ww) = (
            coinduce(&pair, &rho).unwrap(),
            coinduce(&pair, &psi).unwrap(),
        );
        assert!(matches!(
            coind_equivalence(&Matrix::identity(F7, 1), &wv, &ww),
            Err(crate::Error::Precondition {
                residual: Some(_),
                ..
            })
        ));
        let (_, report) = coind_equivalence(&Matrix::identity(F7, 1), &wv, &wv).unwrap();
        assert!(report.passed());
        let sum = coinduce(&pair, &direct_sum_coaction(&pair, &rho, &psi).unwrap()).unwrap();
        let (_, report) = coind_direct_sum_iso(&wv, &ww, &sum).unwrap();
        assert!(report.passed(), "{}", report.to_text());
        // maps vanishing on V factor through W
        let sub = coinduced_subfamily(
            &sum,
            &Subspace::span_columns(&Matrix::unit_column(F7, 2, 0)),
        )
        .unwrap();
        assert_eq!(sub.dims(), ww.dims());
    }

    #[test]
    fn pipeline_from_the_taft_isolated_pair() {
        let t = TaftParams::new(3, 7, 2).unwrap();
        let h = Arc::new(taft_mirror(3, 7, 2).unwrap());
        let a = vec![taft_grouplikes(t); 3];
        let i = vec![taft_nilpotent_ideal(t); 3];
        // the unit of A in its echelon coordinates
        let one = a[0].coords_of_columns(h.unit(0)).unwrap();
        let (_, ind, coind) = pipeline_from_isolated(&h, &a, &i, &one).unwrap();
        assert!(verify_comodule(&ind.comodule).passed());
        assert!(verify_comodule(&coind.comodule).passed());
        assert_eq!(ind.dims(), coind.dims());
    }
}
