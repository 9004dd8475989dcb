use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::comodules::{
    check_equivalence_witness, direct_sum, projection, PiComodule, SubcomoduleFamily,
};
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, left_tensor_coords, rank, Matrix, Subspace};
use crate::report::Report;
use crate::structures::{expect_shape, holds, names, HopfPiCoalgebra};
use crate::subquotients::SubgroupPair;

use super::lmap::HomogeneousSpace;

/// `Ind(V)_a = {x in V ⊗ H_a : (I ⊗ L(1, a))x = (ρ ⊗ I)x}` with the coaction
/// `I ⊗ Δ(a, b)`, written in echelon coordinates of each component.
#[derive(Clone, Debug)]
pub struct InducedComodule {
    pub hopf: Arc<HopfPiCoalgebra>,
    /// The coaction `ρ: V -> V ⊗ C_1` that was induced.
    pub rho: Matrix,
    pub v_dim: usize,
    pub spaces: Vec<Subspace>,
    pub comodule: PiComodule,
}

impl InducedComodule {
    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }
}

/// Coassociativity and counit of a coaction of the identity component `C_1`.
pub fn check_identity_coaction(pair: &SubgroupPair, rho: &Matrix) -> Result<Report> {
    let c = &pair.quotient;
    let c1 = c.dim(0);
    if c1 == 0 || rho.rows() % c1 != 0 {
        return Err(Error::Shape(format!(
            "coaction with {} rows over a component of dimension {c1}",
            rho.rows()
        )));
    }
    let d = rho.rows() / c1;
    expect_shape(rho, (d * c1, d), c.field(), || "coaction".to_string())?;
    let id = Matrix::identity(c.field(), d);
    let mut r = Report::new("identity component comodule");
    r.record(
        "comodule coassociativity",
        vec![],
        holds(|| {
            Ok((
                Matrix::kron_apply(rho, &c.identity(0), rho)?,
                Matrix::kron_apply(&id, c.delta(0, 0), rho)?,
            ))
        }),
    );
    r.record(
        "comodule counit",
        vec![],
        holds(|| Ok((Matrix::kron_apply(&id, c.counit(), rho)?, id.clone()))),
    );
    Ok(r)
}

fn coaction_dim(pair: &SubgroupPair, rho: &Matrix) -> Result<usize> {
    let report = check_identity_coaction(pair, rho)?;
    if !report.passed() {
        return Err(Error::precondition(
            format!("not a comodule: {:?}", report.failing_diagrams()),
            None,
        ));
    }
    Ok(rho.cols())
}

/// Induces a comodule over the identity component of the target up to a
/// comodule over the whole Hopf family.
pub fn induce(pair: &SubgroupPair, rho: &Matrix) -> Result<InducedComodule> {
    let d = coaction_dim(pair, rho)?;
    let h = pair.hopf.clone();
    let g = h.group().clone();
    let f = h.field();
    let id_v = Matrix::identity(f, d);
    let spaces = g
        .elements()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&a| {
            let lhs = id_v.kron(&pair.l_map(0, a)?)?;
            let rhs = rho.kron(&h.identity(a))?;
            Ok(kernel_basis(&lhs.sub(&rhs)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let theta = g
        .pairs()
        .par_iter()
        .map(|&(a, b)| {
            let img =
                Matrix::kron_apply(&id_v, h.delta(a, b), &spaces[g.mul(a, b)].basis_matrix())?;
            left_tensor_coords(&spaces[a], h.dim(b), &img).ok_or_else(|| Error::NotContained {
                what: format!("induced coaction at ({}, {})", g.name(a), g.name(b)),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let comodule = PiComodule::new(
        h.coalgebra().clone(),
        spaces.iter().map(Subspace::dim).collect(),
        theta,
    )?;
    Ok(InducedComodule {
        hopf: h,
        rho: rho.clone(),
        v_dim: d,
        spaces,
        comodule,
    })
}

/// Induces the identity component of a comodule over the target.
pub fn induce_comodule(pair: &SubgroupPair, v: &PiComodule) -> Result<InducedComodule> {
    if **v.over() != *pair.quotient {
        return Err(Error::InvalidArgument(
            "comodule is not over the target of the pair".into(),
        ));
    }
    induce(pair, v.theta(0, 0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    Left,
    Right,
}

/// Multiplication of `Ind(V)_a` by a homogeneous space in the `H` leg.
#[derive(Clone, Debug)]
pub struct ModuleAction {
    pub side: Side,
    /// Whether the products stay in `Ind(V)`, per component, followed by
    /// the module axioms where they do.
    pub report: Report,
    /// `Ind_a ⊗ X_a -> Ind_a` (right) or `X_a ⊗ Ind_a -> Ind_a` (left),
    /// present when every component closes.
    pub maps: Option<Vec<Matrix>>,
}

/// Right multiplication always closes; the left variant is reported as is.
pub fn module_action(
    ind: &InducedComodule,
    x: &HomogeneousSpace,
    side: Side,
) -> Result<ModuleAction> {
    let h = &ind.hopf;
    let g = h.group().clone();
    let f = h.field();
    let d = ind.v_dim;
    let id_v = Matrix::identity(f, d);
    let mut report = Report::new(match side {
        Side::Right => "right module action on the induced comodule",
        Side::Left => "left module action on the induced comodule",
    });
    let mut maps = Vec::new();
    for a in g.elements() {
        let n = h.dim(a);
        let s = &ind.spaces[a];
        let xb = x.components[a].basis_matrix();
        let raw = match side {
            Side::Right => s.basis_matrix().kron(&xb)?,
            Side::Left => {
                // rows (v, b, h) from the natural (v, h, b) order
                let k = xb.kron(&s.basis_matrix())?;
                let perm: Vec<usize> = (0..n * d * n)
                    .map(|row| {
                        let (b, rest) = (row / (d * n), row % (d * n));
                        let (v, hh) = (rest / n, rest % n);
                        (v * n + b) * n + hh
                    })
                    .collect();
                k.permute_rows(&perm)
            }
        };
        let prod = id_v.kron(h.mul(a))?.mul(&raw)?;
        let coords = s.coords_of_columns(&prod);
        report.record("action closes", names(&g, &[a]), coords.is_some());
        if let Some(m) = coords {
            maps.push(m);
        }
    }
    let maps = (maps.len() == g.order()).then_some(maps);
    if let Some(m) = &maps {
        for a in g.elements() {
            let k = ind.spaces[a].dim();
            let xs = &x.components[a];
            let xmul = xs
                .coords_of_columns(&h.mul(a).mul(&xs.basis_matrix().kron(&xs.basis_matrix())?)?)
                .ok_or_else(|| Error::NotContained {
                    what: "product in the homogeneous space".into(),
                })?;
            let xunit = xs
                .coords_of_columns(h.unit(a))
                .ok_or_else(|| Error::NotContained {
                    what: "unit".into(),
                })?;
            let (ik, ix) = (Matrix::identity(f, k), Matrix::identity(f, xs.dim()));
            let (assoc, unit) = match side {
                Side::Right => (
                    holds(|| Ok((m[a].mul(&m[a].kron(&ix)?)?, m[a].mul(&ik.kron(&xmul)?)?))),
                    holds(|| Ok((m[a].mul(&ik.kron(&xunit)?)?, ik.clone()))),
                ),
                Side::Left => (
                    holds(|| Ok((m[a].mul(&ix.kron(&m[a])?)?, m[a].mul(&xmul.kron(&ik)?)?))),
                    holds(|| Ok((m[a].mul(&xunit.kron(&ik)?)?, ik.clone()))),
                ),
            };
            report.record("action associativity", names(&g, &[a]), assoc);
            report.record("action unit", names(&g, &[a]), unit);
        }
    }
    Ok(ModuleAction { side, report, maps })
}

/// The family `(N ⊗ H_a) ∩ Ind(V)_a` for a subcomodule `N` of `V`, in the
/// coordinates of `Ind(V)`. It is closed under the induced coaction.
pub fn induced_subfamily(ind: &InducedComodule, n: &Subspace) -> Result<SubcomoduleFamily> {
    if n.ambient() != ind.v_dim {
        return Err(Error::Shape(
            "subspace of the wrong ambient dimension".into(),
        ));
    }
    let h = &ind.hopf;
    let mut components = Vec::new();
    for a in h.group().elements() {
        let tensor = Subspace::span_columns(&n.basis_matrix().kron(&h.identity(a))?);
        let meet = tensor.intersection(&ind.spaces[a])?;
        let coords = ind.spaces[a]
            .coords_of_columns(&meet.basis_matrix())
            .expect("intersection lies in the space");
        components.push(Subspace::span_columns(&coords));
    }
    Ok(SubcomoduleFamily { components })
}

/// Promotes an equivalence `F: V -> W` of identity-component comodules to
/// `F ⊗ I` between the induced comodules. Refuses, with the residual
/// `ψF - (F ⊗ I)ρ`, when `F` is not a comodule map.
pub fn induced_equivalence(
    f1: &Matrix,
    v: &InducedComodule,
    w: &InducedComodule,
) -> Result<(Vec<Matrix>, Report)> {
    let h = &v.hopf;
    let c1 = v.rho.rows() / v.v_dim.max(1);
    expect_shape(f1, (w.v_dim, v.v_dim), h.field(), || {
        "comodule map".to_string()
    })?;
    let residual = w.rho.mul(f1)?.sub(&Matrix::kron_apply(
        f1,
        &Matrix::identity(h.field(), c1),
        &v.rho,
    )?)?;
    if !residual.is_zero() {
        return Err(Error::precondition(
            "the map does not intertwine the coactions",
            Some(residual),
        ));
    }
    if !(f1.is_square() && rank(f1) == f1.rows()) {
        return Err(Error::precondition("the map is not invertible", None));
    }
    let maps = h
        .group()
        .elements()
        .map(|a| {
            let img = f1.kron(&h.identity(a))?.mul(&v.spaces[a].basis_matrix())?;
            w.spaces[a]
                .coords_of_columns(&img)
                .ok_or_else(|| Error::NotContained {
                    what: "image of the induced map".into(),
                })
        })
        .collect::<Result<Vec<_>>>()?;
    let report = check_equivalence_witness(&v.comodule, &w.comodule, &maps)?;
    Ok((maps, report))
}

/// `ρ ⊕ ψ` on `V ⊕ W`, with `V` in the leading coordinates.
pub fn direct_sum_coaction(pair: &SubgroupPair, rho: &Matrix, psi: &Matrix) -> Result<Matrix> {
    let (dv, dw) = (coaction_dim(pair, rho)?, coaction_dim(pair, psi)?);
    let c1 = pair.quotient.identity(0);
    let f = pair.hopf.field();
    let lv = projection(f, dv, dw, true).transpose().kron(&c1)?;
    let lw = projection(f, dv, dw, false).transpose().kron(&c1)?;
    lv.mul(&rho.mul(&projection(f, dv, dw, true))?)?
        .add(&lw.mul(&psi.mul(&projection(f, dv, dw, false))?)?)
}

/// `Ind(V ⊕ W) -> Ind(V) ⊕ Ind(W)` given by `(P_V ⊗ I) + (P_W ⊗ I)`.
pub fn induce_direct_sum_iso(
    v: &InducedComodule,
    w: &InducedComodule,
    sum: &InducedComodule,
) -> Result<(Vec<Matrix>, Report)> {
    if sum.v_dim != v.v_dim + w.v_dim {
        return Err(Error::Shape(
            "the sum does not have the dimension of the summands".into(),
        ));
    }
    let h = &sum.hopf;
    let f = h.field();
    let mut maps = Vec::new();
    for a in h.group().elements() {
        let basis = sum.spaces[a].basis_matrix();
        let ia = h.identity(a);
        let missing = || Error::NotContained {
            what: "projection of the induced sum".into(),
        };
        let pv = v.spaces[a]
            .coords_of_columns(
                &projection(f, v.v_dim, w.v_dim, true)
                    .kron(&ia)?
                    .mul(&basis)?,
            )
            .ok_or_else(missing)?;
        let pw = w.spaces[a]
            .coords_of_columns(
                &projection(f, v.v_dim, w.v_dim, false)
                    .kron(&ia)?
                    .mul(&basis)?,
            )
            .ok_or_else(missing)?;
        maps.push(Matrix::vstack(&[&pv, &pw])?);
    }
    let target = direct_sum(&v.comodule, &w.comodule)?;
    let report = check_equivalence_witness(&sum.comodule, &target, &maps)?;
    Ok((maps, report))
}
