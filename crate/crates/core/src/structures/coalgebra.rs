use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::linalg::{FieldSpec, Matrix};
use crate::report::{Check, Report};

/// A family of coalgebra-like maps graded by a finite group: one space per
/// element and a comultiplication for every ordered pair.
///
/// `delta(a, b)` maps the `ab` component into the tensor product of the
/// `a` and `b` components; the counit lives on the identity component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiCoalgebra {
    group: Arc<GroupTable>,
    field: FieldSpec,
    dims: Vec<usize>,
    delta: Vec<Matrix>,
    counit: Matrix,
}

pub(crate) fn names(g: &GroupTable, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&a| g.name(a).to_string()).collect()
}

pub(crate) fn expect_shape(
    m: &Matrix,
    shape: (usize, usize),
    field: FieldSpec,
    what: impl FnOnce() -> String,
) -> Result<()> {
    if m.field() != field {
        return Err(Error::FieldMismatch(field, m.field()));
    }
    if m.shape() != shape {
        return Err(Error::Shape(format!(
            "{} has shape {:?}, expected {:?}",
            what(),
            m.shape(),
            shape
        )));
    }
    Ok(())
}

impl PiCoalgebra {
    /// `delta` is indexed by `a * |group| + b`.
    pub fn new(
        group: Arc<GroupTable>,
        field: FieldSpec,
        dims: Vec<usize>,
        delta: Vec<Matrix>,
        counit: Matrix,
    ) -> Result<Self> {
        let n = group.order();
        if dims.len() != n {
            return Err(Error::Shape(format!(
                "{} dimensions for a group of order {n}",
                dims.len()
            )));
        }
        if delta.len() != n * n {
            return Err(Error::Shape(format!(
                "{} comultiplications, expected {}",
                delta.len(),
                n * n
            )));
        }
        for (a, b) in group.pairs() {
            let shape = (dims[a] * dims[b], dims[group.mul(a, b)]);
            expect_shape(&delta[a * n + b], shape, field, || {
                format!("comultiplication ({}, {})", group.name(a), group.name(b))
            })?;
        }
        expect_shape(&counit, (1, dims[0]), field, || "counit".to_string())?;
        Ok(PiCoalgebra {
            group,
            field,
            dims,
            delta,
            counit,
        })
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, a: usize) -> usize {
        self.dims[a]
    }

    pub fn delta(&self, a: usize, b: usize) -> &Matrix {
        &self.delta[a * self.group.order() + b]
    }

    pub fn counit(&self) -> &Matrix {
        &self.counit
    }

    pub fn identity(&self, a: usize) -> Matrix {
        Matrix::identity(self.field, self.dims[a])
    }

    /// A copy with one comultiplication replaced.
    pub fn with_delta(&self, a: usize, b: usize, m: Matrix) -> Result<Self> {
        let mut delta = self.delta.clone();
        delta[a * self.group.order() + b] = m;
        Self::new(
            self.group.clone(),
            self.field,
            self.dims.clone(),
            delta,
            self.counit.clone(),
        )
    }

    pub fn with_counit(&self, counit: Matrix) -> Result<Self> {
        Self::new(
            self.group.clone(),
            self.field,
            self.dims.clone(),
            self.delta.clone(),
            counit,
        )
    }
}

/// Coassociativity for every triple and both counit laws for every element.
pub fn verify_pi_coalgebra(c: &PiCoalgebra) -> Report {
    let g = c.group();
    let mut report = Report::new("pi-coalgebra axioms");
    let checks: Vec<Check> = g
        .triples()
        .par_iter()
        .map(|&(a, b, cc)| {
            let ab = g.mul(a, b);
            let bc = g.mul(b, cc);
            let lhs = Matrix::kron_apply(c.delta(a, b), &c.identity(cc), c.delta(ab, cc));
            let rhs = Matrix::kron_apply(&c.identity(a), c.delta(b, cc), c.delta(a, bc));
            let ok = matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r);
            Check::new("coassociativity", names(g, &[a, b, cc]), ok)
        })
        .collect();
    report.checks.extend(checks);
    for a in g.elements() {
        let id = c.identity(a);
        let left = Matrix::kron_apply(c.counit(), &id, c.delta(0, a));
        report.record(
            "left counit",
            names(g, &[a]),
            matches!(left, Ok(m) if m == id),
        );
        let right = Matrix::kron_apply(&id, c.counit(), c.delta(a, 0));
        report.record(
            "right counit",
            names(g, &[a]),
            matches!(right, Ok(m) if m == id),
        );
    }
    report
}
