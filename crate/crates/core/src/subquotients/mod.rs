//! Coideals and quotients, sub-Hopf families, coisotropic pairs, and
//! sections of pairs.

mod coideal;
pub mod examples;
mod pair;
mod quotient;
mod section;

pub use coideal::{
    check_hopf_coideal, check_pi_coideal, complement_lift, complement_projection,
    principal_left_ideal, principal_right_ideal,
};
pub use pair::{
    check_coisotropic, check_isolated, check_subcoalgebra_pair, check_subhopf,
    coisotropic_from_subcoalgebra, isolated_to_coisotropic, sub_hopf_structure, SubgroupPair,
};
pub use quotient::{check_coalgebra_map, quotient_coalgebra, quotient_hopf, Quotient};
pub use section::{
    check_section_coisotropic, check_section_subcoalgebra, convolution_inverse,
    convolution_inverse_at, find_section, SectionFamily, SectionKind, DEFAULT_CANDIDATE_CAP,
};

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::examples::*;
    use super::*;
    use crate::linalg::{FieldSpec, Matrix};
    use crate::structures::builtin::{taft_mirror, taft_x_minus_one, TaftParams};
    use crate::structures::{verify_hopf, verify_pi_coalgebra};

    const F7: FieldSpec = FieldSpec::Prime(7);

    fn identity_pair(h: Arc<crate::structures::HopfPiCoalgebra>) -> SubgroupPair {
        let sigma = h.group().elements().map(|a| h.identity(a)).collect();
        SubgroupPair::with_hopf_quotient(h.clone(), h, sigma).unwrap()
    }

    #[test]
    fn right_ideal_of_x_minus_one_is_a_coideal_but_not_a_left_ideal() {
        let t = TaftParams::new(3, 7, 2).unwrap();
        let h = taft_mirror(3, 7, 2).unwrap();
        let x1 = taft_x_minus_one(t);
        let v: Vec<_> = (0..3)
            .map(|a| principal_right_ideal(&h, a, &x1).unwrap())
            .collect();
        assert!(v.iter().all(|s| s.dim() == 6));
        let r = check_hopf_coideal(&h, &v).unwrap();
        assert!(r
            .diagram("coideal comultiplication")
            .iter()
            .all(|c| c.passed));
        assert!(r.diagram("right ideal").iter().all(|c| c.passed));
        assert!(r.diagram("left ideal").iter().all(|c| !c.passed));
    }

    #[test]
    fn taft_quotients_have_dimension_three() {
        for pair in [
            taft_right_quotient_pair(3, 7, 2).unwrap(),
            taft_left_quotient_pair(3, 7, 2).unwrap(),
        ] {
            assert_eq!(pair.quotient.dims(), &[3, 3, 3]);
            assert!(verify_pi_coalgebra(&pair.quotient).passed());
        }
    }

    #[test]
    fn only_the_left_ideal_quotient_is_coisotropic() {
        let right = check_coisotropic(&taft_right_quotient_pair(3, 7, 2).unwrap()).unwrap();
        assert!(right
            .failing_diagrams()
            .contains("projection is a module map"));
        let left = check_coisotropic(&taft_left_quotient_pair(3, 7, 2).unwrap()).unwrap();
        assert!(left.passed(), "{}", left.to_text());
    }

    #[test]
    fn identity_pair_is_a_subcoalgebra_and_coisotropic() {
        let h = Arc::new(taft_mirror(3, 7, 2).unwrap());
        let pair = identity_pair(h.clone());
        assert!(check_subcoalgebra_pair(&pair).unwrap().passed());
        let co = coisotropic_from_subcoalgebra(&pair).unwrap();
        assert_eq!(co.omega.as_ref().unwrap()[1], *h.mul(1));
        assert!(check_coisotropic(&co).unwrap().passed());
    }

    #[test]
    fn antipode_is_the_convolution_inverse_of_the_identity() {
        let h = Arc::new(taft_mirror(3, 7, 2).unwrap());
        let pair = identity_pair(h.clone());
        let ids: Vec<Matrix> = (0..3).map(|a| h.identity(a)).collect();
        let inv = convolution_inverse(&h, h.coalgebra(), &ids)
            .unwrap()
            .unwrap();
        for a in 0..3 {
            assert_eq!(inv[a], *h.antipode(h.group().inv(a)));
        }
        let s = SectionFamily { g: ids, ginv: inv };
        assert!(check_section_subcoalgebra(&pair, &s).unwrap().passed());
        let co = coisotropic_from_subcoalgebra(&pair).unwrap();
        let r = check_section_coisotropic(&co, &s).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn zero_map_has_no_convolution_inverse() {
        let h = taft_mirror(3, 7, 2).unwrap();
        let z = Matrix::zeros(F7, 9, 9);
        assert!(convolution_inverse_at(&h, h.coalgebra(), 0, &z)
            .unwrap()
            .is_none());
    }

    #[test]
    fn group_algebra_pair_and_coset_section() {
        let pair = group_algebra_pair(6, &[0, 2, 4], F7).unwrap();
        assert_eq!(pair.quotient.dims(), &[2, 2]);
        assert!(check_subcoalgebra_pair(&pair).unwrap().passed());
        assert!(check_coisotropic(&pair).unwrap().passed());
        let s = coset_section(&pair).unwrap();
        // representatives 1 and u; their inverses 1 and u^5, then twisted
        assert_eq!(s.g[0].column(1), Matrix::unit_column(F7, 6, 1).column(0));
        assert_eq!(s.ginv[0].column(1), Matrix::unit_column(F7, 6, 5).column(0));
        assert!(check_section_subcoalgebra(&pair, &s).unwrap().passed());
        let r = check_section_coisotropic(&pair, &s).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }

    #[test]
    fn section_search_finds_a_valid_section() {
        let pair = group_algebra_pair(6, &[0, 2, 4], F7).unwrap();
        for kind in [SectionKind::Subcoalgebra, SectionKind::Coisotropic] {
            let s = find_section(&pair, kind, DEFAULT_CANDIDATE_CAP)
                .unwrap()
                .expect("a section exists");
            assert!(check_section_subcoalgebra(&pair, &s).unwrap().passed());
        }
    }

    #[test]
    fn section_without_unit_fails() {
        let pair = group_algebra_pair(6, &[0, 2, 4], F7).unwrap();
        let mut s = coset_section(&pair).unwrap();
        s.g[0] = s.g[0].scale(&crate::Scalar::from_i64(F7, 2));
        let r = check_section_subcoalgebra(&pair, &s).unwrap();
        assert!(r.failing_diagrams().contains("section preserves unit"));
    }

    #[test]
    fn taft_isolated_pair_is_coisotropic() {
        let pair = taft_isolated_pair(3, 7, 2).unwrap();
        assert_eq!(pair.quotient.dims(), &[3, 3, 3]);
        let r = check_coisotropic(&pair).unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert!(check_subcoalgebra_pair(&pair).unwrap().passed());
        assert!(verify_hopf(pair.quotient_hopf.as_ref().unwrap()).passed());
    }
}
