//! The map `L`, the homogeneous spaces `B` and `G`, induced comodules, and
//! the isomorphisms `H ≅ C ⊗ B`, `H ≅ C ⊗ G` and `Ind(V) ≅ V ⊗ B`.

mod induced;
mod iso;
mod lmap;

pub use induced::{
    check_identity_coaction, direct_sum_coaction, induce, induce_comodule, induce_direct_sum_iso,
    induced_equivalence, induced_subfamily, module_action, InducedComodule, ModuleAction, Side,
};
pub use iso::{
    check_cosection, copy_cosection, iso_cb, iso_cg, iso_vb, mirror_cosection,
    verify_section_identities, IsoWitness,
};
pub use lmap::{
    check_homogeneous, homogeneous_space, verify_l_algebra_map, verify_l_identities, Flavor,
    HomogeneousSpace,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comodules::verify_comodule;
    use crate::linalg::{FieldSpec, Matrix, Subspace};
    use crate::structures::builtin::{inversion_action, taft_grouplikes, TaftParams};
    use crate::subquotients::examples::*;
    use crate::subquotients::SubgroupPair;

    const F7: FieldSpec = FieldSpec::Prime(7);

    fn z6_pair() -> SubgroupPair {
        group_algebra_pair(6, &[0, 2, 4], F7).unwrap()
    }

    #[test]
    fn homogeneous_spaces_of_the_group_algebra_pair() {
        let pair = z6_pair();
        for flavor in [Flavor::B, Flavor::G] {
            let x = homogeneous_space(&pair, flavor).unwrap();
            assert_eq!(x.dims(), vec![3, 3]);
            assert!(check_homogeneous(&pair, &x).unwrap().passed());
        }
        // B is spanned by the elements of N
        let b = homogeneous_space(&pair, Flavor::B).unwrap();
        for u in [0, 2, 4] {
            assert!(b.components[1].contains(&Matrix::unit_column(F7, 6, u).column(0)));
        }
        assert!(!b.components[1].contains(&Matrix::unit_column(F7, 6, 1).column(0)));
    }

    #[test]
    fn l_identities_hold() {
        let pair = z6_pair();
        assert!(verify_l_identities(&pair).unwrap().passed());
        assert!(verify_l_algebra_map(&pair).unwrap().passed());
        let taft = taft_left_quotient_pair(3, 7, 2).unwrap();
        let r = verify_l_identities(&taft).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn perturbed_action_breaks_twisted_multiplicativity() {
        let pair = z6_pair();
        let mut omega = pair.omega.clone().unwrap();
        omega[1] = omega[1].scale(&crate::Scalar::from_i64(F7, 3));
        let bad = pair.clone().with_omega(omega).unwrap();
        let r = verify_l_identities(&bad).unwrap();
        assert!(r.failing_diagrams().contains("L twisted multiplicative"));
        assert!(!r.failing_diagrams().contains("L coassociative"));
    }

    #[test]
    fn trivial_induction_on_the_group_algebra_pair() {
        let pair = z6_pair();
        let c = pair.require_hopf_quotient().unwrap().clone();
        let ind = induce(&pair, c.unit(0)).unwrap();
        assert_eq!(ind.dims(), vec![3, 3]);
        assert!(verify_comodule(&ind.comodule).passed());
        let b = homogeneous_space(&pair, Flavor::B).unwrap();
        // with V one-dimensional and trivial the induced spaces are B itself
        assert_eq!(ind.spaces, b.components);
        let right = module_action(&ind, &b, Side::Right).unwrap();
        assert!(right.report.passed() && right.maps.is_some());
        let left = module_action(&ind, &b, Side::Left).unwrap();
        assert!(left.report.passed());
    }

    #[test]
    fn section_identities_and_decompositions() {
        let pair = z6_pair();
        let s = coset_section(&pair).unwrap();
        let b = homogeneous_space(&pair, Flavor::B).unwrap();
        let gs = homogeneous_space(&pair, Flavor::G).unwrap();
        let r = verify_section_identities(&pair, &s, &b).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        let cb = iso_cb(&pair, &s, &b).unwrap();
        assert!(cb.report.passed(), "{}", cb.report.to_text());
        assert_eq!(cb.forward[0].shape(), (6, 6));
        let cg = iso_cg(&pair, &s, &gs).unwrap();
        assert!(cg.report.passed());
    }

    #[test]
    fn wrong_inverse_section_breaks_the_first_identity() {
        let pair = z6_pair();
        let mut s = coset_section(&pair).unwrap();
        // send each class to a lift of the other class
        s.ginv[1] = s.ginv[1].permute_cols(&[1, 0]);
        let b = homogeneous_space(&pair, Flavor::B).unwrap();
        let r = verify_section_identities(&pair, &s, &b).unwrap();
        assert!(r.failing_diagrams().contains("L of the inverse section"));
    }

    #[test]
    fn mirror_cosection_is_valid_and_the_copy_map_is_not() {
        let pair = z6_pair();
        let action = inversion_action(6, F7).unwrap();
        assert!(check_cosection(&pair.hopf, &mirror_cosection(&action))
            .unwrap()
            .passed());
        let copy = check_cosection(&pair.hopf, &copy_cosection(&pair.hopf).unwrap()).unwrap();
        assert!(copy.failing_diagrams().contains("comodule map"));
    }

    #[test]
    fn induced_comodule_decomposes_as_v_tensor_b() {
        let pair = z6_pair();
        let c = pair.require_hopf_quotient().unwrap().clone();
        let s = coset_section(&pair).unwrap();
        let b = homogeneous_space(&pair, Flavor::B).unwrap();
        let eta = mirror_cosection(&inversion_action(6, F7).unwrap());
        // the regular comodule of C_1 is two-dimensional
        let regular = c.delta(0, 0).clone();
        let ind = induce(&pair, &regular).unwrap();
        assert_eq!(ind.dims(), vec![6, 6]);
        let w = iso_vb(&pair, &s, &eta, &b, &ind).unwrap();
        assert!(w.report.passed(), "{}", w.report.to_text());
    }

    #[test]
    fn equivalence_is_refused_for_a_non_comodule_map() {
        let pair = z6_pair();
        let c = pair.require_hopf_quotient().unwrap().clone();
        let rho = induce(&pair, c.unit(0)).unwrap();
        let psi = induce(&pair, &Matrix::unit_column(F7, 2, 1)).unwrap();
        let one = Matrix::identity(F7, 1);
        match induced_equivalence(&one, &rho, &psi) {
            Err(crate::Error::Precondition {
                residual: Some(r), ..
            }) => assert!(!r.is_zero()),
            other => panic!("expected a refusal, got {other:?}"),
        }
        let (maps, report) =
            induced_equivalence(&one.scale(&crate::Scalar::from_i64(F7, 3)), &rho, &rho).unwrap();
        assert!(report.passed());
        assert_eq!(maps.len(), 2);
    }

    #[test]
    fn induction_commutes_with_direct_sums() {
        let pair = z6_pair();
        let c = pair.require_hopf_quotient().unwrap().clone();
        let (rho, psi) = (c.unit(0).clone(), Matrix::unit_column(F7, 2, 1));
        let sum = direct_sum_coaction(&pair, &rho, &psi).unwrap();
        let (iv, iw, is) = (
            induce(&pair, &rho).unwrap(),
            induce(&pair, &psi).unwrap(),
            induce(&pair, &sum).unwrap(),
        );
        for a in 0..2 {
            assert_eq!(is.dims()[a], iv.dims()[a] + iw.dims()[a]);
        }
        let (_, report) = induce_direct_sum_iso(&iv, &iw, &is).unwrap();
        assert!(report.passed(), "{}", report.to_text());
        let sub = induced_subfamily(&is, &Subspace::span_columns(&Matrix::unit_column(F7, 2, 0)))
            .unwrap();
        assert_eq!(sub.dims(), iv.dims());
    }

    #[test]
    fn taft_induction_is_the_grouplike_span() {
        let pair = taft_right_quotient_pair(3, 7, 2).unwrap();
        let c = &pair.quotient;
        // the class of 1 is group-like in the identity component
        let one = pair.unit_image(0).unwrap();
        assert!(check_identity_coaction(&pair, &one).unwrap().passed());
        let ind = induce(&pair, &one).unwrap();
        assert_eq!(c.dims(), &[3, 3, 3]);
        let span = taft_grouplikes(TaftParams::new(3, 7, 2).unwrap());
        for a in 0..3 {
            assert_eq!(ind.spaces[a], span);
        }
        assert!(verify_comodule(&ind.comodule).passed());
    }
}
