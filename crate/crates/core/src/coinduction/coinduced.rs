use std::sync::Arc;

use rayon::prelude::*;

use crate::comodules::{
    check_equivalence_witness, direct_sum, immersion, PiComodule, SubcomoduleFamily,
};
use crate::error::{Error, Result};
use crate::induction::{check_identity_coaction, induce, InducedComodule};
use crate::linalg::{kernel_basis, rank, swap_map, Matrix, Scalar, Subspace};
use crate::report::Report;
use crate::structures::{expect_shape, HopfPiCoalgebra};
use crate::subquotients::{isolated_to_coisotropic, SubgroupPair};

use super::dual::{omega_with, DualBases};

/// Column-major flattening of `F: K^d -> K^n` to a vector of length `n d`.
pub fn vec_of(f: &Matrix) -> Vec<Scalar> {
    (0..f.cols()).flat_map(|j| f.column(j)).collect()
}

pub fn unvec(field: crate::FieldSpec, v: &[Scalar], rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(field, rows, cols, |i, j| v[j * rows + i].clone())
}

/// `Coind(V)_a = {F: V -> H_a : L(1, a)F = τ(F ⊗ I)ρ}` inside the flattened
/// `Hom(V, H_a)`, with the coaction `Ω` for the standard dual bases.
#[derive(Clone, Debug)]
pub struct CoinducedComodule {
    pub hopf: Arc<HopfPiCoalgebra>,
    pub rho: Matrix,
    pub v_dim: usize,
    pub spaces: Vec<Subspace>,
    pub comodule: PiComodule,
}

impl CoinducedComodule {
    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    /// The `i`-th basis map of component `a` as an `n_a x d` matrix.
    pub fn basis_map(&self, a: usize, i: usize) -> Matrix {
        unvec(
            self.hopf.field(),
            &self.spaces[a].basis_vector(i),
            self.hopf.dim(a),
            self.v_dim,
        )
    }
}

/// The defining operator `F -> L(1, a)F - τ(F ⊗ I)ρ` on flattened maps.
fn defining_operator(pair: &SubgroupPair, rho: &Matrix, d: usize, a: usize) -> Result<Matrix> {
    let h = &pair.hopf;
    let f = h.field();
    let n = h.dim(a);
    let c1 = pair.quotient.dim(0);
    let l = pair.l_map(0, a)?;
    let tau = swap_map(f, n, c1);
    let ic = pair.quotient.identity(0);
    let mut cols = Vec::with_capacity(n * d);
    for j in 0..d {
        for i in 0..n {
            let mut e = Matrix::zeros(f, n, d);
            e.set(i, j, Scalar::one(f));
            let img = l.mul(&e)?.sub(&tau.mul(&e.kron(&ic)?.mul(rho)?)?)?;
            cols.push(Matrix::column_vector(f, vec_of(&img)));
        }
    }
    Matrix::hstack(&cols.iter().collect::<Vec<_>>())
}

pub fn coinduce(pair: &SubgroupPair, rho: &Matrix) -> Result<CoinducedComodule> {
    let report = check_identity_coaction(pair, rho)?;
    if !report.passed() {
        return Err(Error::precondition(
            format!("not a comodule: {:?}", report.failing_diagrams()),
            None,
        ));
    }
    let d = rho.cols();
    let h = pair.hopf.clone();
    let spaces = h
        .group()
        .elements()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&a| Ok(kernel_basis(&defining_operator(pair, rho, d, a)?)))
        .collect::<Result<Vec<_>>>()?;
    let theta = omega_with(&h, &spaces, d, &DualBases::standard(&h))?;
    let comodule = PiComodule::new(
        h.coalgebra().clone(),
        spaces.iter().map(Subspace::dim).collect(),
        theta,
    )?;
    Ok(CoinducedComodule {
        hopf: h,
        rho: rho.clone(),
        v_dim: d,
        spaces,
        comodule,
    })
}

/// The family `{F in Coind(V)_a : F(N) = 0}` for a subcomodule `N` of `V`,
/// in the coordinates of `Coind(V)`.
pub fn coinduced_subfamily(w: &CoinducedComodule, n: &Subspace) -> Result<SubcomoduleFamily> {
    if n.ambient() != w.v_dim {
        return Err(Error::Shape(
            "subspace of the wrong ambient dimension".into(),
        ));
    }
    let h = &w.hopf;
    let f = h.field();
    let nb = n.basis_matrix();
    let mut components = Vec::new();
    for a in h.group().elements() {
        let k = w.spaces[a].dim();
        // restriction to N, as a map on Coind coordinates
        let cols: Vec<Matrix> = (0..k)
            .map(|i| {
                Ok(Matrix::column_vector(
                    f,
                    vec_of(&w.basis_map(a, i).mul(&nb)?),
                ))
            })
            .collect::<Result<_>>()?;
        let restrict = if k == 0 {
            Matrix::zeros(f, h.dim(a) * n.dim(), 0)
        } else {
            Matrix::hstack(&cols.iter().collect::<Vec<_>>())?
        };
        components.push(kernel_basis(&restrict));
    }
    Ok(SubcomoduleFamily { components })
}

/// `f -> f ∘ F` from `Coind(W)` to `Coind(V)` for a comodule isomorphism
/// `F: V -> W`. Refuses with the residual `ψF - (F ⊗ I)ρ` otherwise.
pub fn coind_equivalence(
    f1: &Matrix,
    v: &CoinducedComodule,
    w: &CoinducedComodule,
) -> Result<(Vec<Matrix>, Report)> {
    let h = &v.hopf;
    let field = h.field();
    expect_shape(f1, (w.v_dim, v.v_dim), field, || "comodule map".to_string())?;
    let c1 = v.rho.rows() / v.v_dim.max(1);
    let residual = w.rho.mul(f1)?.sub(&Matrix::kron_apply(
        f1,
        &Matrix::identity(field, c1),
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
            let pre = f1.transpose().kron(&h.identity(a))?;
            v.spaces[a]
                .coords_of_columns(&pre.mul(&w.spaces[a].basis_matrix())?)
                .ok_or_else(|| Error::NotContained {
                    what: "precomposed map".into(),
                })
        })
        .collect::<Result<Vec<_>>>()?;
    let report = check_equivalence_witness(&w.comodule, &v.comodule, &maps)?;
    Ok((maps, report))
}

/// `g -> (g ∘ l_V, g ∘ l_W)` from `Coind(V ⊕ W)` to `Coind(V) ⊕ Coind(W)`.
pub fn coind_direct_sum_iso(
    v: &CoinducedComodule,
    w: &CoinducedComodule,
    sum: &CoinducedComodule,
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
            what: "restriction of the coinduced sum".into(),
        };
        let lv = immersion(f, v.v_dim, w.v_dim, true).transpose().kron(&ia)?;
        let lw = immersion(f, v.v_dim, w.v_dim, false)
            .transpose()
            .kron(&ia)?;
        let pv = v.spaces[a]
            .coords_of_columns(&lv.mul(&basis)?)
            .ok_or_else(missing)?;
        let pw = w.spaces[a]
            .coords_of_columns(&lw.mul(&basis)?)
            .ok_or_else(missing)?;
        maps.push(Matrix::vstack(&[&pv, &pw])?);
    }
    let target = direct_sum(&v.comodule, &w.comodule)?;
    let report = check_equivalence_witness(&sum.comodule, &target, &maps)?;
    Ok((maps, report))
}

/// Splits `H = A ⊕ I` into a coisotropic pair and induces and coinduces a
/// coaction of the identity component of `A` written in its echelon basis.
pub fn pipeline_from_isolated(
    h: &Arc<HopfPiCoalgebra>,
    a: &[Subspace],
    i: &[Subspace],
    rho: &Matrix,
) -> Result<(SubgroupPair, InducedComodule, CoinducedComodule)> {
    let pair = isolated_to_coisotropic(h, a, i)?;
    let ind = induce(&pair, rho)?;
    let coind = coinduce(&pair, rho)?;
    Ok((pair, ind, coind))
}
