use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::linalg::{FieldSpec, Matrix};
use crate::report::Report;

use super::coalgebra::{expect_shape, names, PiCoalgebra};
use super::hopf::{holds, verify_hopf, HopfPiCoalgebra};

/// An ordinary finite-dimensional Hopf algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalHopfAlgebra {
    pub field: FieldSpec,
    pub dim: usize,
    pub mul: Matrix,
    pub unit: Matrix,
    pub delta: Matrix,
    pub counit: Matrix,
    pub antipode: Matrix,
}

impl ClassicalHopfAlgebra {
    pub fn new(
        field: FieldSpec,
        mul: Matrix,
        unit: Matrix,
        delta: Matrix,
        counit: Matrix,
        antipode: Matrix,
    ) -> Result<Self> {
        let dim = unit.rows();
        expect_shape(&mul, (dim, dim * dim), field, || "multiplication".into())?;
        expect_shape(&unit, (dim, 1), field, || "unit".into())?;
        expect_shape(&delta, (dim * dim, dim), field, || {
            "comultiplication".into()
        })?;
        expect_shape(&counit, (1, dim), field, || "counit".into())?;
        expect_shape(&antipode, (dim, dim), field, || "antipode".into())?;
        Ok(ClassicalHopfAlgebra {
            field,
            dim,
            mul,
            unit,
            delta,
            counit,
            antipode,
        })
    }

    /// The same data viewed over the trivial group.
    pub fn as_trivial_family(&self) -> Result<HopfPiCoalgebra> {
        let g = Arc::new(GroupTable::trivial());
        let c = PiCoalgebra::new(
            g,
            self.field,
            vec![self.dim],
            vec![self.delta.clone()],
            self.counit.clone(),
        )?;
        HopfPiCoalgebra::new(
            Arc::new(c),
            vec![self.mul.clone()],
            vec![self.unit.clone()],
            vec![self.antipode.clone()],
        )
    }
}

pub fn verify_classical(a: &ClassicalHopfAlgebra) -> Result<Report> {
    let mut r = verify_hopf(&a.as_trivial_family()?);
    r.subject = "Hopf algebra axioms".to_string();
    Ok(r)
}

/// A homomorphism from a group into the Hopf automorphisms of an algebra,
/// given by one matrix per group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    pub group: Arc<GroupTable>,
    pub maps: Vec<Matrix>,
}

impl GroupAction {
    pub fn new(group: Arc<GroupTable>, maps: Vec<Matrix>) -> Result<Self> {
        if maps.len() != group.order() {
            return Err(Error::Shape(format!(
                "{} maps for a group of order {}",
                maps.len(),
                group.order()
            )));
        }
        Ok(GroupAction { group, maps })
    }
}

/// Checks that the action is a homomorphism into Hopf automorphisms.
pub fn verify_action(a: &ClassicalHopfAlgebra, action: &GroupAction) -> Report {
    let g = &action.group;
    let mut r = Report::new("group action by Hopf automorphisms");
    let id = Matrix::identity(a.field, a.dim);
    r.record("identity acts trivially", vec![], action.maps[0] == id);
    for (x, y) in g.pairs() {
        let ok = holds(|| {
            Ok((
                action.maps[x].mul(&action.maps[y])?,
                action.maps[g.mul(x, y)].clone(),
            ))
        });
        r.record("action is multiplicative", names(g, &[x, y]), ok);
    }
    for x in g.elements() {
        let l = &action.maps[x];
        let at = names(g, &[x]);
        r.record(
            "preserves multiplication",
            at.clone(),
            holds(|| Ok((l.mul(&a.mul)?, a.mul.mul(&l.kron(l)?)?))),
        );
        r.record(
            "preserves unit",
            at.clone(),
            holds(|| Ok((l.mul(&a.unit)?, a.unit.clone()))),
        );
        r.record(
            "preserves comultiplication",
            at.clone(),
            holds(|| Ok((a.delta.mul(l)?, l.kron(l)?.mul(&a.delta)?))),
        );
        r.record(
            "preserves counit",
            at.clone(),
            holds(|| Ok((a.counit.mul(l)?, a.counit.clone()))),
        );
        r.record(
            "commutes with antipode",
            at,
            holds(|| Ok((l.mul(&a.antipode)?, a.antipode.mul(l)?))),
        );
    }
    r
}

/// Builds the graded family with every component a copy of `a`,
/// comultiplication `(λ(b) ⊗ I)Δ` into components `(a, b)` and antipode `λ(a)S`.
pub fn mirror(a: &ClassicalHopfAlgebra, action: &GroupAction) -> Result<HopfPiCoalgebra> {
    let g = action.group.clone();
    for (x, m) in action.maps.iter().enumerate() {
        expect_shape(m, (a.dim, a.dim), a.field, || {
            format!("action of {}", g.name(x))
        })?;
    }
    let id = Matrix::identity(a.field, a.dim);
    let mut delta = Vec::with_capacity(g.order() * g.order());
    for (_, y) in g.pairs() {
        delta.push(action.maps[y].kron(&id)?.mul(&a.delta)?);
    }
    let n = g.order();
    let c = PiCoalgebra::new(g, a.field, vec![a.dim; n], delta, a.counit.clone())?;
    let antipode = action
        .maps
        .iter()
        .map(|l| l.mul(&a.antipode))
        .collect::<Result<Vec<_>>>()?;
    HopfPiCoalgebra::new(
        Arc::new(c),
        vec![a.mul.clone(); n],
        vec![a.unit.clone(); n],
        antipode,
    )
}
