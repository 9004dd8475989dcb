use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::linalg::{kernel_basis, left_tensor_coords, rank, FieldSpec, Matrix, Scalar, Subspace};
use crate::report::{Check, Report};
use crate::structures::{
    expect_shape, holds, interleaved_apply, names, HopfPiCoalgebra, PiCoalgebra,
};

/// A right comodule over a graded coalgebra: spaces `M_a` with coactions
/// `theta(a, b): M_{ab} -> M_a ⊗ C_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiComodule {
    over: Arc<PiCoalgebra>,
    dims: Vec<usize>,
    theta: Vec<Matrix>,
}

impl PiComodule {
    /// `theta` is indexed by `a * |group| + b`.
    pub fn new(over: Arc<PiCoalgebra>, dims: Vec<usize>, theta: Vec<Matrix>) -> Result<Self> {
        let g = over.group().clone();
        let n = g.order();
        if dims.len() != n || theta.len() != n * n {
            return Err(Error::Shape(format!(
                "comodule data does not match a group of order {n}"
            )));
        }
        for (a, b) in g.pairs() {
            let shape = (dims[a] * over.dim(b), dims[g.mul(a, b)]);
            expect_shape(&theta[a * n + b], shape, over.field(), || {
                format!("coaction ({}, {})", g.name(a), g.name(b))
            })?;
        }
        Ok(PiComodule { over, dims, theta })
    }

    /// The one-dimensional comodule `w -> w ⊗ c_b` for a family of
    /// columns `c_b` in `C_b`, which must be group-like for the axioms to hold.
    pub fn one_dimensional(over: Arc<PiCoalgebra>, grouplike: &[Matrix]) -> Result<Self> {
        let g = over.group().clone();
        if grouplike.len() != g.order() {
            return Err(Error::Shape("one column per element required".into()));
        }
        let theta = g
            .pairs()
            .into_iter()
            .map(|(_, b)| grouplike[b].clone())
            .collect();
        Self::new(over, vec![1; g.order()], theta)
    }

    pub fn over(&self) -> &Arc<PiCoalgebra> {
        &self.over
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        self.over.group()
    }

    pub fn field(&self) -> FieldSpec {
        self.over.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, a: usize) -> usize {
        self.dims[a]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn theta(&self, a: usize, b: usize) -> &Matrix {
        &self.theta[a * self.group().order() + b]
    }

    pub fn with_theta(&self, a: usize, b: usize, m: Matrix) -> Result<Self> {
        let mut theta = self.theta.clone();
        theta[a * self.group().order() + b] = m;
        Self::new(self.over.clone(), self.dims.clone(), theta)
    }

    /// The comodule structure restricted to a closed family of subspaces,
    /// written in the echelon coordinates of each subspace.
    pub fn restrict(&self, family: &[Subspace]) -> Result<PiComodule> {
        let g = self.group().clone();
        let mut theta = Vec::new();
        for (a, b) in g.pairs() {
            let ab = g.mul(a, b);
            let img = self.theta(a, b).mul(&family[ab].basis_matrix())?;
            let coords =
                left_tensor_coords(&family[a], self.over.dim(b), &img).ok_or_else(|| {
                    Error::NotContained {
                        what: format!("coaction image at ({}, {})", g.name(a), g.name(b)),
                    }
                })?;
            theta.push(coords);
        }
        PiComodule::new(
            self.over.clone(),
            family.iter().map(Subspace::dim).collect(),
            theta,
        )
    }
}

/// Coassociativity at every triple and the counit law at every element.
pub fn verify_comodule(m: &PiComodule) -> Report {
    let g = m.group().clone();
    let c = m.over();
    let mut report = Report::new("pi-comodule axioms");
    let checks: Vec<Check> = g
        .triples()
        .par_iter()
        .map(|&(a, b, cc)| {
            let ok = holds(|| {
                let lhs =
                    Matrix::kron_apply(m.theta(a, b), &c.identity(cc), m.theta(g.mul(a, b), cc))?;
                let rhs = Matrix::kron_apply(
                    &Matrix::identity(m.field(), m.dim(a)),
                    c.delta(b, cc),
                    m.theta(a, g.mul(b, cc)),
                )?;
                Ok((lhs, rhs))
            });
            Check::new("comodule coassociativity", names(&g, &[a, b, cc]), ok)
        })
        .collect();
    report.checks.extend(checks);
    for a in g.elements() {
        let id = Matrix::identity(m.field(), m.dim(a));
        let ok = holds(|| {
            Ok((
                Matrix::kron_apply(&id, c.counit(), m.theta(a, 0))?,
                id.clone(),
            ))
        });
        report.record("comodule counit", names(&g, &[a]), ok);
    }
    report
}

/// A comodule that is also a right module over each algebra component,
/// compatibly with the coaction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfPiComodule {
    pub comodule: PiComodule,
    pub hopf: Arc<HopfPiCoalgebra>,
    /// `action[a]: M_a ⊗ H_a -> M_a`.
    pub action: Vec<Matrix>,
}

impl HopfPiComodule {
    pub fn new(
        comodule: PiComodule,
        hopf: Arc<HopfPiCoalgebra>,
        action: Vec<Matrix>,
    ) -> Result<Self> {
        if **comodule.over() != **hopf.coalgebra() {
            return Err(Error::InvalidArgument(
                "comodule is not over the given Hopf family".into(),
            ));
        }
        let g = hopf.group();
        if action.len() != g.order() {
            return Err(Error::Shape("one action per element required".into()));
        }
        for a in g.elements() {
            let m = comodule.dim(a);
            expect_shape(&action[a], (m, m * hopf.dim(a)), hopf.field(), || {
                format!("action at {}", g.name(a))
            })?;
        }
        Ok(HopfPiComodule {
            comodule,
            hopf,
            action,
        })
    }
}

pub fn verify_hopf_comodule(m: &HopfPiComodule) -> Report {
    let h = &m.hopf;
    let g = h.group().clone();
    let mut report = verify_comodule(&m.comodule);
    report.subject = "Hopf pi-comodule axioms".to_string();
    for a in g.elements() {
        let rho = &m.action[a];
        let im = Matrix::identity(h.field(), m.comodule.dim(a));
        let ih = h.identity(a);
        let at = names(&g, &[a]);
        report.record(
            "action associativity",
            at.clone(),
            holds(|| Ok((rho.mul(&rho.kron(&ih)?)?, rho.mul(&im.kron(h.mul(a))?)?))),
        );
        report.record(
            "action unit",
            at,
            holds(|| Ok((rho.mul(&im.kron(h.unit(a))?)?, im.clone()))),
        );
    }
    for (a, b) in g.pairs() {
        let ab = g.mul(a, b);
        let theta = m.comodule.theta(a, b);
        let ok = holds(|| {
            let lhs = theta.mul(&m.action[ab])?;
            let k = theta.kron(h.delta(a, b))?;
            let dims = [m.comodule.dim(a), h.dim(b), h.dim(a), h.dim(b)];
            Ok((lhs, interleaved_apply(&m.action[a], h.mul(b), dims, &k)?))
        });
        report.record("coaction is a module map", names(&g, &[a, b]), ok);
    }
    report
}

/// Block inclusion of the first (`first = true`) or second summand of `K^m ⊕ K^n`.
pub fn immersion(field: FieldSpec, m: usize, n: usize, first: bool) -> Matrix {
    let (k, off) = if first { (m, 0) } else { (n, m) };
    let mut out = Matrix::zeros(field, m + n, k);
    for i in 0..k {
        out.set(off + i, i, Scalar::one(field));
    }
    out
}

/// Block projection onto the first or second summand of `K^m ⊕ K^n`.
pub fn projection(field: FieldSpec, m: usize, n: usize, first: bool) -> Matrix {
    immersion(field, m, n, first).transpose()
}

/// The direct sum, with `M` occupying the leading coordinates of each component.
pub fn direct_sum(m: &PiComodule, n: &PiComodule) -> Result<PiComodule> {
    if **m.over() != **n.over() {
        return Err(Error::InvalidArgument(
            "summands are over different coalgebras".into(),
        ));
    }
    let g = m.group().clone();
    let f = m.field();
    let dims: Vec<usize> = g.elements().map(|a| m.dim(a) + n.dim(a)).collect();
    let mut theta = Vec::new();
    for (a, b) in g.pairs() {
        let ab = g.mul(a, b);
        let cb = Matrix::identity(f, m.over().dim(b));
        let lm = immersion(f, m.dim(a), n.dim(a), true).kron(&cb)?;
        let ln = immersion(f, m.dim(a), n.dim(a), false).kron(&cb)?;
        let pm = projection(f, m.dim(ab), n.dim(ab), true);
        let pn = projection(f, m.dim(ab), n.dim(ab), false);
        let t = lm
            .mul(&m.theta(a, b).mul(&pm)?)?
            .add(&ln.mul(&n.theta(a, b).mul(&pn)?)?)?;
        theta.push(t);
    }
    PiComodule::new(m.over().clone(), dims, theta)
}

/// Checks that `f[a]: M_a -> N_a` are invertible and intertwine the coactions.
pub fn check_equivalence_witness(m: &PiComodule, n: &PiComodule, f: &[Matrix]) -> Result<Report> {
    let g = m.group().clone();
    if f.len() != g.order() {
        return Err(Error::Shape("one map per element required".into()));
    }
    for a in g.elements() {
        expect_shape(&f[a], (n.dim(a), m.dim(a)), m.field(), || {
            format!("map at {}", g.name(a))
        })?;
    }
    let mut report = Report::new("comodule equivalence");
    for a in g.elements() {
        let inv = f[a].is_square() && rank(&f[a]) == f[a].rows();
        report.record("component invertible", names(&g, &[a]), inv);
    }
    for (a, b) in g.pairs() {
        let ok = holds(|| {
            let lhs = n.theta(a, b).mul(&f[g.mul(a, b)])?;
            let rhs = f[a].kron(&m.over().identity(b))?.mul(m.theta(a, b))?;
            Ok((lhs, rhs))
        });
        report.record("intertwines coactions", names(&g, &[a, b]), ok);
    }
    Ok(report)
}

/// A basis of the space of families `F_a: M_a -> N_a` intertwining the coactions.
pub fn find_intertwiner_space(m: &PiComodule, n: &PiComodule) -> Result<Vec<Vec<Matrix>>> {
    if **m.over() != **n.over() {
        return Err(Error::InvalidArgument(
            "comodules are over different coalgebras".into(),
        ));
    }
    let g = m.group().clone();
    let c = m.over();
    let f = m.field();
    let mut offsets = vec![0];
    for a in g.elements() {
        offsets.push(offsets[a] + n.dim(a) * m.dim(a));
    }
    let unknowns = offsets[g.order()];
    let mut eq_offsets = vec![0];
    for (a, b) in g.pairs() {
        let len = n.dim(a) * c.dim(b) * m.dim(g.mul(a, b));
        eq_offsets.push(eq_offsets.last().unwrap() + len);
    }
    let mut system = Matrix::zeros(f, *eq_offsets.last().unwrap(), unknowns);
    for (pair, (a, b)) in g.pairs().into_iter().enumerate() {
        let ab = g.mul(a, b);
        let nb = c.dim(b);
        let cols = m.dim(ab);
        let base = eq_offsets[pair];
        let tn = n.theta(a, b);
        let tm = m.theta(a, b);
        // theta_N F_{ab}: entry (row, s) gains theta_N[row, r] * F_{ab}[r, s]
        for r in 0..n.dim(ab) {
            for s in 0..m.dim(ab) {
                let var = offsets[ab] + r * m.dim(ab) + s;
                for row in 0..tn.rows() {
                    let v = tn.get(row, r);
                    if !v.is_zero() {
                        let e = base + row * cols + s;
                        let cur = system.get(e, var) + v;
                        system.set(e, var, cur);
                    }
                }
            }
        }
        // (F_a ⊗ I) theta_M: entry (r nb + k, col) gains F_a[r, s] * theta_M[s nb + k, col]
        for r in 0..n.dim(a) {
            for s in 0..m.dim(a) {
                let var = offsets[a] + r * m.dim(a) + s;
                for k in 0..nb {
                    for col in 0..cols {
                        let v = tm.get(s * nb + k, col);
                        if !v.is_zero() {
                            let e = base + (r * nb + k) * cols + col;
                            let cur = system.get(e, var) - v;
                            system.set(e, var, cur);
                        }
                    }
                }
            }
        }
    }
    let kernel = kernel_basis(&system);
    let mut out = Vec::new();
    for i in 0..kernel.dim() {
        let v = kernel.basis_vector(i);
        let family = g
            .elements()
            .map(|a| {
                Matrix::from_fn(f, n.dim(a), m.dim(a), |r, s| {
                    v[offsets[a] + r * m.dim(a) + s].clone()
                })
            })
            .collect();
        out.push(family);
    }
    Ok(out)
}

/// The maps `(I ⊗ g_j)theta(a, b): M_{ab} -> M_a`, one for each basis
/// functional `g_j` on `C_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoactionOperator {
    pub target: usize,
    pub source: usize,
    pub right: usize,
    pub functional: usize,
    pub matrix: Matrix,
}

/// All coaction operators, ordered by `(a, b, j)`.
pub fn coaction_operators(m: &PiComodule) -> Vec<CoactionOperator> {
    let g = m.group();
    let mut out = Vec::new();
    for (a, b) in g.pairs() {
        let nb = m.over().dim(b);
        let t = m.theta(a, b);
        for j in 0..nb {
            let rows: Vec<usize> = (0..m.dim(a)).map(|i| i * nb + j).collect();
            out.push(CoactionOperator {
                target: a,
                source: g.mul(a, b),
                right: b,
                functional: j,
                matrix: t.select_rows(&rows),
            });
        }
    }
    out
}
