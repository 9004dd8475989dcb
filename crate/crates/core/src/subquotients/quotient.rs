use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{compose, Matrix, Subspace};
use crate::report::Report;
use crate::structures::{holds, names, HopfPiCoalgebra, PiCoalgebra};

use super::coideal::{
    check_hopf_coideal, check_pi_coideal, complement_lift, complement_projection,
};

/// A quotient realized on a complement: `sigma[a]` projects onto it and
/// `lift[a]` includes it back, with `sigma[a] * lift[a] = I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient<T> {
    pub structure: T,
    pub sigma: Vec<Matrix>,
    pub lift: Vec<Matrix>,
}

fn quotient_maps(v: &[Subspace]) -> (Vec<Matrix>, Vec<Matrix>) {
    (
        v.iter().map(complement_projection).collect(),
        v.iter().map(complement_lift).collect(),
    )
}

/// The quotient of a graded coalgebra by a coideal family.
pub fn quotient_coalgebra(c: &PiCoalgebra, v: &[Subspace]) -> Result<Quotient<PiCoalgebra>> {
    let report = check_pi_coideal(c, v)?;
    if !report.passed() {
        return Err(Error::precondition(
            format!("not a pi-coideal: {:?}", report.failing_diagrams()),
            None,
        ));
    }
    let g = c.group().clone();
    let (sigma, lift) = quotient_maps(v);
    let mut delta = Vec::new();
    for (a, b) in g.pairs() {
        let ab = g.mul(a, b);
        delta.push(compose(&[
            &sigma[a].kron(&sigma[b])?,
            c.delta(a, b),
            &lift[ab],
        ])?);
    }
    let counit = c.counit().mul(&lift[0])?;
    let dims = sigma.iter().map(Matrix::rows).collect();
    let e = PiCoalgebra::new(g, c.field(), dims, delta, counit)?;
    Ok(Quotient {
        structure: e,
        sigma,
        lift,
    })
}

/// The quotient of a Hopf family by a Hopf coideal, inheriting every operation.
pub fn quotient_hopf(h: &HopfPiCoalgebra, v: &[Subspace]) -> Result<Quotient<HopfPiCoalgebra>> {
    let report = check_hopf_coideal(h, v)?;
    if !report.passed() {
        return Err(Error::precondition(
            format!("not a Hopf pi-coideal: {:?}", report.failing_diagrams()),
            None,
        ));
    }
    let g = h.group().clone();
    let Quotient {
        structure,
        sigma,
        lift,
    } = quotient_coalgebra(h.coalgebra(), v)?;
    let mut mul = Vec::new();
    let mut unit = Vec::new();
    let mut antipode = Vec::new();
    for a in g.elements() {
        mul.push(compose(&[&sigma[a], h.mul(a), &lift[a].kron(&lift[a])?])?);
        unit.push(sigma[a].mul(h.unit(a))?);
        antipode.push(compose(&[&sigma[g.inv(a)], h.antipode(a), &lift[a]])?);
    }
    let q = HopfPiCoalgebra::new(Arc::new(structure), mul, unit, antipode)?;
    Ok(Quotient {
        structure: q,
        sigma,
        lift,
    })
}

/// `Δ^E σ = (σ ⊗ σ)Δ` for every pair and `ε^E σ_1 = ε`.
pub fn check_coalgebra_map(c: &PiCoalgebra, e: &PiCoalgebra, sigma: &[Matrix]) -> Report {
    let g = c.group();
    let mut r = Report::new("quotient map is a coalgebra map");
    for (a, b) in g.pairs() {
        let ok = holds(|| {
            Ok((
                e.delta(a, b).mul(&sigma[g.mul(a, b)])?,
                sigma[a].kron(&sigma[b])?.mul(c.delta(a, b))?,
            ))
        });
        r.record("intertwines comultiplication", names(g, &[a, b]), ok);
    }
    r.record(
        "intertwines counit",
        vec![],
        holds(|| Ok((e.counit().mul(&sigma[0])?, c.counit().clone()))),
    );
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;
    use crate::structures::builtin::{coset_coideal, inversion_family};
    use crate::structures::verify_hopf;
    use crate::GroupTable;

    #[test]
    fn group_algebra_quotient_by_coset_coideal() {
        let f = FieldSpec::Prime(7);
        let h = inversion_family(6, f).unwrap();
        let g0 = GroupTable::cyclic(6, "u");
        let v = coset_coideal(&h, &g0, &[0, 2, 4]);
        let q = quotient_hopf(&h, &v).unwrap();
        assert_eq!(q.structure.dims(), &[2, 2]);
        assert!(verify_hopf(&q.structure).passed());
        assert!(check_coalgebra_map(h.coalgebra(), q.structure.coalgebra(), &q.sigma).passed());
        for a in 0..2 {
            assert!(q.sigma[a].mul(&q.lift[a]).unwrap().is_identity());
        }
    }
}
