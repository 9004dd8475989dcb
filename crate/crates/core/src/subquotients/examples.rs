//! Ready-made pairs: a twisted group algebra over its quotient by a normal
//! subgroup, and Taft mirrors over quotients by one-sided ideals of `x - 1`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::linalg::{FieldSpec, Matrix, Subspace};
use crate::structures::builtin::{
    coset_coideal, inversion_family, taft_grouplikes, taft_mirror, taft_nilpotent_ideal,
    taft_x_minus_one, TaftParams,
};
use crate::structures::HopfPiCoalgebra;

use super::coideal::{principal_left_ideal, principal_right_ideal};
use super::pair::{coisotropic_from_subcoalgebra, isolated_to_coisotropic, SubgroupPair};
use super::quotient::{quotient_coalgebra, quotient_hopf};
use super::section::SectionFamily;

/// `k[Z_n]` twisted by inversion, over its Hopf quotient by the coset
/// coideal of `subgroup`, with the action by multiplication in the quotient.
pub fn group_algebra_pair(n: usize, subgroup: &[usize], field: FieldSpec) -> Result<SubgroupPair> {
    let h = Arc::new(inversion_family(n, field)?);
    let base = GroupTable::cyclic(n, "u");
    let v = coset_coideal(&h, &base, subgroup);
    let q = quotient_hopf(&h, &v)?;
    let pair = SubgroupPair::with_hopf_quotient(h, Arc::new(q.structure), q.sigma)?;
    coisotropic_from_subcoalgebra(&pair)
}

/// Sends each basis vector of `C_a` to the first standard basis vector of
/// `H_a` projecting onto it. For group algebra pairs this picks the least
/// element of each coset.
pub fn coset_section(pair: &SubgroupPair) -> Result<SectionFamily> {
    let h = &pair.hopf;
    let f = h.field();
    let mut g = Vec::new();
    for a in h.group().elements() {
        let s = &pair.sigma[a];
        let mut m = Matrix::zeros(f, h.dim(a), s.rows());
        for j in 0..s.rows() {
            let target = Matrix::unit_column(f, s.rows(), j);
            let u = (0..h.dim(a))
                .find(|&u| s.column_matrix(u) == target)
                .ok_or_else(|| {
                    Error::InvalidArgument(format!("no basis vector projects onto class {j}"))
                })?;
            m.set(u, j, crate::linalg::Scalar::one(f));
        }
        g.push(m);
    }
    SectionFamily::from_maps(pair, g)?
        .ok_or_else(|| Error::precondition("coset section is not convolution invertible", None))
}

/// `ω_a = σ_a μ_a (I ⊗ lift_a)`: the left action of `H_a` on the quotient
/// obtained by multiplying on a lift. Only well defined when the kernel of
/// `σ_a` is a left ideal; `check_coisotropic` detects the other case.
pub fn left_multiplication_action(
    h: &HopfPiCoalgebra,
    sigma: &[Matrix],
    lift: &[Matrix],
) -> Result<Vec<Matrix>> {
    h.group()
        .elements()
        .map(|a| sigma[a].mul(&h.mul(a).mul(&h.identity(a).kron(&lift[a])?)?))
        .collect()
}

fn taft_quotient_pair(n: usize, p: u64, q: u64, right: bool) -> Result<SubgroupPair> {
    let t = TaftParams::new(n, p, q)?;
    let h = Arc::new(taft_mirror(n, p, q)?);
    let x1 = taft_x_minus_one(t);
    let v: Vec<Subspace> = h
        .group()
        .elements()
        .map(|a| {
            if right {
                principal_right_ideal(&h, a, &x1)
            } else {
                principal_left_ideal(&h, a, &x1)
            }
        })
        .collect::<Result<_>>()?;
    let quotient = quotient_coalgebra(h.coalgebra(), &v)?;
    let omega = left_multiplication_action(&h, &quotient.sigma, &quotient.lift)?;
    SubgroupPair::new(h, Arc::new(quotient.structure), quotient.sigma)?.with_omega(omega)
}

/// The Taft mirror over its quotient by the right ideals `(x - 1)H_a`.
/// The attached action is the one induced by left multiplication, which is
/// not compatible with the projection since these are not left ideals.
pub fn taft_right_quotient_pair(n: usize, p: u64, q: u64) -> Result<SubgroupPair> {
    taft_quotient_pair(n, p, q, true)
}

/// The Taft mirror over its quotient by the left ideals `H_a(x - 1)`, a
/// coisotropic pair under left multiplication.
pub fn taft_left_quotient_pair(n: usize, p: u64, q: u64) -> Result<SubgroupPair> {
    taft_quotient_pair(n, p, q, false)
}

/// The Taft mirror split as the span of powers of `x` plus the ideal
/// generated by `g`.
pub fn taft_isolated_pair(n: usize, p: u64, q: u64) -> Result<SubgroupPair> {
    let t = TaftParams::new(n, p, q)?;
    let h = Arc::new(taft_mirror(n, p, q)?);
    let order = h.group().order();
    isolated_to_coisotropic(
        &h,
        &vec![taft_grouplikes(t); order],
        &vec![taft_nilpotent_ideal(t); order],
    )
}
