use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::linalg::{kernel_basis, left_tensor_coords, Matrix, Subspace};
use crate::report::{Check, Report};
use crate::structures::{holds, interleaved_apply, names};
use crate::subquotients::SubgroupPair;

/// Which constant the first leg of `L(1, a)` must equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Flavor {
    /// `L(1, a)h = 1 ⊗ h` with the unit of a Hopf target.
    B,
    /// `L(1, a)h = σ_1(1) ⊗ h`.
    G,
}

/// Coinvariants of `L(1, a)` in every component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousSpace {
    pub flavor: Flavor,
    pub components: Vec<Subspace>,
}

impl HomogeneousSpace {
    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(Subspace::dim).collect()
    }
}

fn constant_leg(pair: &SubgroupPair, flavor: Flavor) -> Result<Matrix> {
    match flavor {
        Flavor::B => Ok(pair.require_hopf_quotient()?.unit(0).clone()),
        Flavor::G => pair.unit_image(0),
    }
}

/// `{h : L(1, a)h = e ⊗ h}` for each `a`, where `e` is fixed by the flavor.
pub fn homogeneous_space(pair: &SubgroupPair, flavor: Flavor) -> Result<HomogeneousSpace> {
    let e = constant_leg(pair, flavor)?;
    let h = &pair.hopf;
    let components = h
        .group()
        .elements()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&a| {
            let diff = pair.l_map(0, a)?.sub(&e.kron(&h.identity(a))?)?;
            Ok(kernel_basis(&diff))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HomogeneousSpace { flavor, components })
}

/// Subalgebra in each component and right coideal:
/// `Δ(a, b)(X_{ab}) ⊆ X_a ⊗ H_b`.
pub fn check_homogeneous(pair: &SubgroupPair, x: &HomogeneousSpace) -> Result<Report> {
    let h = &pair.hopf;
    let g = h.group();
    let mut r = Report::new(match x.flavor {
        Flavor::B => "homogeneous space B",
        Flavor::G => "homogeneous space G",
    });
    for a in g.elements() {
        let at = names(g, &[a]);
        let s = &x.components[a];
        let b = s.basis_matrix();
        r.record(
            "contains unit",
            at.clone(),
            s.contains(&h.unit(a).column(0)),
        );
        let prods = h.mul(a).mul(&b.kron(&b)?)?;
        r.record(
            "closed under multiplication",
            at,
            (0..prods.cols()).all(|j| s.contains(&prods.column(j))),
        );
    }
    for (a, b) in g.pairs() {
        let img = h
            .delta(a, b)
            .mul(&x.components[g.mul(a, b)].basis_matrix())?;
        r.record(
            "right coideal",
            names(g, &[a, b]),
            left_tensor_coords(&x.components[a], h.dim(b), &img).is_some(),
        );
    }
    Ok(r)
}

/// The two identities satisfied by `L` for a coisotropic pair: the twisted
/// multiplicativity `L(ab) = Δ(a) Θ L(b)` with
/// `(m ⊗ n) Θ (u ⊗ v) = ω(m ⊗ u) ⊗ nv`, and
/// `(I ⊗ Δ(b, c))L(a, bc) = (L(a, b) ⊗ I)Δ(ab, c)`.
pub fn verify_l_identities(pair: &SubgroupPair) -> Result<Report> {
    let omega = pair.require_omega()?;
    let h = &pair.hopf;
    let c = &pair.quotient;
    let g = h.group().clone();
    let mut r = Report::new("L identities");
    let products: Vec<Check> = g
        .pairs()
        .par_iter()
        .map(|&(a, b)| {
            let ab = g.mul(a, b);
            let ok = holds(|| {
                let l = pair.l_map(a, b)?;
                let lhs = l.mul(h.mul(ab))?;
                let dims = [h.dim(a), h.dim(b), c.dim(a), h.dim(b)];
                let rhs = interleaved_apply(&omega[a], h.mul(b), dims, &h.delta(a, b).kron(&l)?)?;
                Ok((lhs, rhs))
            });
            Check::new("L twisted multiplicative", names(&g, &[a, b]), ok)
        })
        .collect();
    r.checks.extend(products);
    let coassoc: Vec<Check> = g
        .triples()
        .par_iter()
        .map(|&(a, b, cc)| {
            let ok = holds(|| {
                let lhs = Matrix::kron_apply(
                    &c.identity(a),
                    h.delta(b, cc),
                    &pair.l_map(a, g.mul(b, cc))?,
                )?;
                let rhs = Matrix::kron_apply(
                    &pair.l_map(a, b)?,
                    &h.identity(cc),
                    h.delta(g.mul(a, b), cc),
                )?;
                Ok((lhs, rhs))
            });
            Check::new("L coassociative", names(&g, &[a, b, cc]), ok)
        })
        .collect();
    r.checks.extend(coassoc);
    Ok(r)
}

/// `L(a, b)` is an algebra map into `C_a ⊗ H_b` when the target is a Hopf
/// family and `σ` is multiplicative.
pub fn verify_l_algebra_map(pair: &SubgroupPair) -> Result<Report> {
    let c = pair.require_hopf_quotient()?.clone();
    let h = &pair.hopf;
    let g = h.group().clone();
    let mut r = Report::new("L is an algebra map");
    let checks: Vec<Check> = g
        .pairs()
        .par_iter()
        .flat_map_iter(|&(a, b)| {
            let ab = g.mul(a, b);
            let at = names(&g, &[a, b]);
            let mult = holds(|| {
                let l = pair.l_map(a, b)?;
                let dims = [c.dim(a), h.dim(b), c.dim(a), h.dim(b)];
                Ok((
                    l.mul(h.mul(ab))?,
                    interleaved_apply(c.mul(a), h.mul(b), dims, &l.kron(&l)?)?,
                ))
            });
            let unit = holds(|| {
                Ok((
                    pair.l_map(a, b)?.mul(h.unit(ab))?,
                    c.unit(a).kron(h.unit(b))?,
                ))
            });
            [
                Check::new("L multiplicative", at.clone(), mult),
                Check::new("L unital", at, unit),
            ]
        })
        .collect();
    r.checks.extend(checks);
    Ok(r)
}
