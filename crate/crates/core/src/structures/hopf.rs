use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::linalg::{compose, middle_swap_perm, FieldSpec, Matrix, Scalar};
use crate::report::{Check, Report};

use super::coalgebra::{expect_shape, names, verify_pi_coalgebra, PiCoalgebra};

/// A graded coalgebra whose components are unital algebras, with antipodes
/// `antipode(a)` mapping the `a` component to the `a^{-1}` component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfPiCoalgebra {
    coalgebra: Arc<PiCoalgebra>,
    mul: Vec<Matrix>,
    unit: Vec<Matrix>,
    antipode: Vec<Matrix>,
}

impl HopfPiCoalgebra {
    pub fn new(
        coalgebra: Arc<PiCoalgebra>,
        mul: Vec<Matrix>,
        unit: Vec<Matrix>,
        antipode: Vec<Matrix>,
    ) -> Result<Self> {
        let g = coalgebra.group().clone();
        let n = g.order();
        if mul.len() != n || unit.len() != n || antipode.len() != n {
            return Err(Error::Shape(format!(
                "algebra data must have one entry per element of a group of order {n}"
            )));
        }
        let f = coalgebra.field();
        for a in g.elements() {
            let d = coalgebra.dim(a);
            expect_shape(&mul[a], (d, d * d), f, || {
                format!("multiplication at {}", g.name(a))
            })?;
            expect_shape(&unit[a], (d, 1), f, || format!("unit at {}", g.name(a)))?;
            expect_shape(&antipode[a], (coalgebra.dim(g.inv(a)), d), f, || {
                format!("antipode at {}", g.name(a))
            })?;
        }
        Ok(HopfPiCoalgebra {
            coalgebra,
            mul,
            unit,
            antipode,
        })
    }

    pub fn coalgebra(&self) -> &Arc<PiCoalgebra> {
        &self.coalgebra
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        self.coalgebra.group()
    }

    pub fn field(&self) -> FieldSpec {
        self.coalgebra.field()
    }

    pub fn dim(&self, a: usize) -> usize {
        self.coalgebra.dim(a)
    }

    pub fn dims(&self) -> &[usize] {
        self.coalgebra.dims()
    }

    pub fn delta(&self, a: usize, b: usize) -> &Matrix {
        self.coalgebra.delta(a, b)
    }

    pub fn counit(&self) -> &Matrix {
        self.coalgebra.counit()
    }

    pub fn mul(&self, a: usize) -> &Matrix {
        &self.mul[a]
    }

    pub fn unit(&self, a: usize) -> &Matrix {
        &self.unit[a]
    }

    pub fn antipode(&self, a: usize) -> &Matrix {
        &self.antipode[a]
    }

    pub fn identity(&self, a: usize) -> Matrix {
        self.coalgebra.identity(a)
    }

    /// Left multiplication by the vector `x` in component `a`.
    pub fn left_mul_by(&self, a: usize, x: &Matrix) -> Result<Matrix> {
        self.mul[a].mul(&x.kron(&self.identity(a))?)
    }

    /// Right multiplication by the vector `x` in component `a`.
    pub fn right_mul_by(&self, a: usize, x: &Matrix) -> Result<Matrix> {
        self.mul[a].mul(&self.identity(a).kron(x)?)
    }

    pub fn with_coalgebra(&self, coalgebra: PiCoalgebra) -> Result<Self> {
        Self::new(
            Arc::new(coalgebra),
            self.mul.clone(),
            self.unit.clone(),
            self.antipode.clone(),
        )
    }

    pub fn with_mul(&self, a: usize, m: Matrix) -> Result<Self> {
        let mut mul = self.mul.clone();
        mul[a] = m;
        Self::new(
            self.coalgebra.clone(),
            mul,
            self.unit.clone(),
            self.antipode.clone(),
        )
    }

    pub fn with_unit(&self, a: usize, m: Matrix) -> Result<Self> {
        let mut unit = self.unit.clone();
        unit[a] = m;
        Self::new(
            self.coalgebra.clone(),
            self.mul.clone(),
            unit,
            self.antipode.clone(),
        )
    }

    pub fn with_antipode(&self, a: usize, m: Matrix) -> Result<Self> {
        let mut antipode = self.antipode.clone();
        antipode[a] = m;
        Self::new(
            self.coalgebra.clone(),
            self.mul.clone(),
            self.unit.clone(),
            antipode,
        )
    }
}

/// `(left ⊗ right) ∘ (I ⊗ flip ⊗ I) ∘ k` where the rows of `k` index
/// `X ⊗ Y ⊗ X' ⊗ Y'` with the given dimensions and `left: X ⊗ X' -> _`,
/// `right: Y ⊗ Y' -> _`. This is the product in a tensor product of algebras.
pub fn interleaved_apply(
    left: &Matrix,
    right: &Matrix,
    dims: [usize; 4],
    k: &Matrix,
) -> Result<Matrix> {
    let [x, y, x2, y2] = dims;
    if k.rows() != x * y * x2 * y2 {
        return Err(Error::dims(
            "interleaved_apply",
            format!("{} rows for factors {dims:?}", k.rows()),
        ));
    }
    let permuted = k.permute_rows(&middle_swap_perm(x, y, x2, y2));
    Matrix::kron_apply(left, right, &permuted)
}

/// Evaluates both sides of an identity; shape errors count as failure.
pub(crate) fn holds(sides: impl FnOnce() -> Result<(Matrix, Matrix)>) -> bool {
    matches!(sides(), Ok((l, r)) if l == r)
}

fn algebra_checks(h: &HopfPiCoalgebra, a: usize) -> Vec<Check> {
    let at = names(h.group(), &[a]);
    let id = h.identity(a);
    let mu = h.mul(a);
    let eta = h.unit(a);
    vec![
        Check::new(
            "associativity",
            at.clone(),
            holds(|| Ok((mu.mul(&mu.kron(&id)?)?, mu.mul(&id.kron(mu)?)?))),
        ),
        Check::new(
            "left unit",
            at.clone(),
            holds(|| Ok((mu.mul(&eta.kron(&id)?)?, id.clone()))),
        ),
        Check::new(
            "right unit",
            at,
            holds(|| Ok((mu.mul(&id.kron(eta)?)?, id.clone()))),
        ),
    ]
}

fn compatibility_checks(h: &HopfPiCoalgebra, a: usize, b: usize) -> Vec<Check> {
    let g = h.group();
    let ab = g.mul(a, b);
    let at = names(g, &[a, b]);
    let d = h.delta(a, b);
    let (na, nb) = (h.dim(a), h.dim(b));
    let multiplicative = holds(|| {
        Ok((
            d.mul(h.mul(ab))?,
            product_of_coproducts(h.mul(a), h.mul(b), na, nb, d),
        ))
    });
    let unital = holds(|| Ok((d.mul(h.unit(ab))?, h.unit(a).kron(h.unit(b))?)));
    vec![
        Check::new(
            "comultiplication multiplicative",
            at.clone(),
            multiplicative,
        ),
        Check::new("comultiplication unital", at, unital),
    ]
}

/// `(μ_a ⊗ μ_b)(I ⊗ τ ⊗ I)(d ⊗ d)`, the same as `interleaved_apply` on
/// `d ⊗ d` but summed over nonzero entries only.
fn product_of_coproducts(ma: &Matrix, mb: &Matrix, na: usize, nb: usize, d: &Matrix) -> Matrix {
    let f = d.field();
    let n = d.cols();
    let nonzero = |m: &Matrix, j: usize| -> Vec<(usize, Scalar)> {
        (0..m.rows())
            .filter(|&r| !m.get(r, j).is_zero())
            .map(|r| (r, m.get(r, j).clone()))
            .collect()
    };
    let legs: Vec<Vec<(usize, Scalar)>> = (0..n).map(|j| nonzero(d, j)).collect();
    let acols: Vec<Vec<(usize, Scalar)>> = (0..ma.cols()).map(|j| nonzero(ma, j)).collect();
    let bcols: Vec<Vec<(usize, Scalar)>> = (0..mb.cols()).map(|j| nonzero(mb, j)).collect();
    let mut out = Matrix::zeros(f, na * nb, n * n);
    for i in 0..n {
        for j in 0..n {
            let col = i * n + j;
            for (r1, c1) in &legs[i] {
                for (r2, c2) in &legs[j] {
                    let coeff = c1 * c2;
                    let (p, q) = (r1 / nb * na + r2 / nb, r1 % nb * nb + r2 % nb);
                    for (x, u) in &acols[p] {
                        let cu = &coeff * u;
                        for (y, v) in &bcols[q] {
                            let row = x * nb + y;
                            let sum = out.get(row, col) + &(&cu * v);
                            out.set(row, col, sum);
                        }
                    }
                }
            }
        }
    }
    out
}

fn antipode_checks(h: &HopfPiCoalgebra, a: usize) -> Vec<Check> {
    let g = h.group();
    let ai = g.inv(a);
    let at = names(g, &[a]);
    let id = h.identity(a);
    let target = || h.unit(a).mul(h.counit());
    let s = h.antipode(ai);
    let left = holds(|| {
        Ok((
            compose(&[h.mul(a), &s.kron(&id)?, h.delta(ai, a)])?,
            target()?,
        ))
    });
    let right = holds(|| {
        Ok((
            compose(&[h.mul(a), &id.kron(s)?, h.delta(a, ai)])?,
            target()?,
        ))
    });
    vec![
        Check::new("left antipode", at.clone(), left),
        Check::new("right antipode", at, right),
    ]
}

/// The full axiom list: coalgebra, algebra, compatibility, and antipode laws.
pub fn verify_hopf(h: &HopfPiCoalgebra) -> Report {
    let g = h.group().clone();
    let mut report = verify_pi_coalgebra(h.coalgebra());
    report.subject = "Hopf pi-coalgebra axioms".to_string();
    let elements: Vec<usize> = g.elements().collect();

    let algebra: Vec<Vec<Check>> = elements.par_iter().map(|&a| algebra_checks(h, a)).collect();
    report.checks.extend(algebra.into_iter().flatten());

    let pairs: Vec<Vec<Check>> = g
        .pairs()
        .par_iter()
        .map(|&(a, b)| compatibility_checks(h, a, b))
        .collect();
    report.checks.extend(pairs.into_iter().flatten());

    let e = h.counit();
    report.record(
        "counit multiplicative",
        vec![],
        holds(|| Ok((e.mul(h.mul(0))?, e.kron(e)?))),
    );
    report.record(
        "counit unital",
        vec![],
        holds(|| {
            Ok((
                e.mul(h.unit(0))?,
                Matrix::from_fn(h.field(), 1, 1, |_, _| Scalar::one(h.field())),
            ))
        }),
    );

    let anti: Vec<Vec<Check>> = elements
        .par_iter()
        .map(|&a| antipode_checks(h, a))
        .collect();
    report.checks.extend(anti.into_iter().flatten());
    report
}

/// The two antipode-free identities relating comultiplications through the
/// identity component, checked for every element.
pub fn verify_identity_component_relations(h: &HopfPiCoalgebra) -> Report {
    let g = h.group().clone();
    let mut report = Report::new("identity-component comultiplication identities");
    let i1 = h.identity(0);
    for a in g.elements() {
        let ai = g.inv(a);
        let at = names(&g, &[a]);
        let (ia, iai) = (h.identity(a), h.identity(ai));
        // Kronecker factors are applied without forming the full products
        let first = holds(|| {
            let lhs = Matrix::kron_apply(h.delta(0, a), h.delta(ai, 0), h.delta(a, ai))?;
            let inner = Matrix::kron_apply(h.delta(0, 0), &i1, h.delta(0, 0))?;
            let rhs = Matrix::kron_apply(&i1, &h.delta(a, ai).kron(&i1)?, &inner)?;
            Ok((lhs, rhs))
        });
        let second = holds(|| {
            let lhs = Matrix::kron_apply(h.delta(ai, 0), h.delta(0, a), h.delta(ai, a))?;
            let inner = Matrix::kron_apply(h.delta(ai, 0), &ia, h.delta(ai, a))?;
            let rhs = Matrix::kron_apply(&iai, &h.delta(0, 0).kron(&ia)?, &inner)?;
            Ok((lhs, rhs))
        });
        report.record("split through identity (outer)", at.clone(), first);
        report.record("split through identity (inner)", at, second);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sparse_product_matches_interleaved() {
        let h = crate::structures::builtin::taft_mirror(3, 7, 2).unwrap();
        let d = h.delta(1, 2);
        let dense =
            interleaved_apply(h.mul(1), h.mul(2), [9, 9, 9, 9], &d.kron(d).unwrap()).unwrap();
        assert_eq!(product_of_coproducts(h.mul(1), h.mul(2), 9, 9, d), dense);
    }
}
