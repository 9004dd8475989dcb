//! Reference structures: the one-dimensional family, twisted group
//! algebras, and Taft algebras twisted by conjugation.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::linalg::{FieldSpec, Matrix, Scalar, Subspace};

use super::hopf::{interleaved_apply, HopfPiCoalgebra};
use super::mirror::{mirror, ClassicalHopfAlgebra, GroupAction};

/// The ground field as a Hopf algebra over the trivial group.
pub fn trivial_pi(field: FieldSpec) -> HopfPiCoalgebra {
    let one = Matrix::identity(field, 1);
    let a = ClassicalHopfAlgebra::new(
        field,
        one.clone(),
        one.clone(),
        one.clone(),
        one.clone(),
        one,
    )
    .expect("one-dimensional data has matching shapes");
    a.as_trivial_family().expect("shapes checked above")
}

/// The group algebra `k[G]` with group elements as its basis.
pub fn group_algebra(g: &GroupTable, field: FieldSpec) -> ClassicalHopfAlgebra {
    let n = g.order();
    let one = Scalar::one(field);
    let mut mul = Matrix::zeros(field, n, n * n);
    let mut delta = Matrix::zeros(field, n * n, n);
    let mut antipode = Matrix::zeros(field, n, n);
    for u in 0..n {
        for v in 0..n {
            mul.set(g.mul(u, v), u * n + v, one.clone());
        }
        delta.set(u * n + u, u, one.clone());
        antipode.set(g.inv(u), u, one.clone());
    }
    let counit = Matrix::from_fn(field, 1, n, |_, _| one.clone());
    ClassicalHopfAlgebra::new(
        field,
        mul,
        Matrix::unit_column(field, n, 0),
        delta,
        counit,
        antipode,
    )
    .expect("group algebra shapes")
}

fn is_automorphism(g: &GroupTable, f: &[usize]) -> bool {
    let n = g.order();
    let mut seen = vec![false; n];
    for &x in f {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    g.pairs()
        .into_iter()
        .all(|(u, v)| f[g.mul(u, v)] == g.mul(f[u], f[v]))
}

/// The action of `pi` on `k[G]` permuting basis elements by the
/// automorphisms `u -> autos[a][u]`.
pub fn group_algebra_action(
    g: &GroupTable,
    pi: Arc<GroupTable>,
    autos: &[Vec<usize>],
    field: FieldSpec,
) -> Result<GroupAction> {
    if autos.len() != pi.order() {
        return Err(Error::Shape(format!(
            "{} automorphisms for a group of order {}",
            autos.len(),
            pi.order()
        )));
    }
    let mut maps = Vec::new();
    for (x, f) in autos.iter().enumerate() {
        if f.len() != g.order() || !is_automorphism(g, f) {
            return Err(Error::InvalidArgument(format!(
                "action of {} is not an automorphism",
                pi.name(x)
            )));
        }
        let mut m = Matrix::zeros(field, g.order(), g.order());
        for (u, &v) in f.iter().enumerate() {
            m.set(v, u, Scalar::one(field));
        }
        maps.push(m);
    }
    GroupAction::new(pi, maps)
}

/// Mirror of `k[G]` for an action of `pi` on `G` by automorphisms, each
/// given as the permutation `u -> autos[a][u]` of element indices.
pub fn group_algebra_family(
    g: &GroupTable,
    pi: Arc<GroupTable>,
    autos: &[Vec<usize>],
    field: FieldSpec,
) -> Result<HopfPiCoalgebra> {
    mirror(
        &group_algebra(g, field),
        &group_algebra_action(g, pi, autos, field)?,
    )
}

/// `Z_2` acting on `k[Z_n]` through inversion.
pub fn inversion_action(n: usize, field: FieldSpec) -> Result<GroupAction> {
    let g = GroupTable::cyclic(n, "u");
    let pi = Arc::new(GroupTable::cyclic(2, "s"));
    let identity: Vec<usize> = (0..n).collect();
    let inversion: Vec<usize> = (0..n).map(|u| g.inv(u)).collect();
    group_algebra_action(&g, pi, &[identity, inversion], field)
}

/// `k[Z_n]` twisted by `Z_2` acting through inversion.
pub fn inversion_family(n: usize, field: FieldSpec) -> Result<HopfPiCoalgebra> {
    mirror(
        &group_algebra(&GroupTable::cyclic(n, "u"), field),
        &inversion_action(n, field)?,
    )
}

/// `k[Z_n]` over the trivial group.
pub fn cyclic_group_algebra(n: usize, field: FieldSpec) -> Result<HopfPiCoalgebra> {
    let g = GroupTable::cyclic(n, "u");
    let identity: Vec<usize> = (0..n).collect();
    group_algebra_family(&g, Arc::new(GroupTable::trivial()), &[identity], field)
}

/// Subspaces `span{u - v : u, v in the same coset of the subgroup}` in
/// every component of a group algebra family built on `G`.
pub fn coset_coideal(h: &HopfPiCoalgebra, g: &GroupTable, subgroup: &[usize]) -> Vec<Subspace> {
    let f = h.field();
    let n = g.order();
    let mut vectors = Vec::new();
    for u in 0..n {
        for &s in subgroup {
            let v = g.mul(u, s);
            if v != u {
                let mut w = vec![Scalar::zero(f); n];
                w[u] = Scalar::one(f);
                w[v] = Scalar::from_i64(f, -1);
                vectors.push(w);
            }
        }
    }
    let s = Subspace::from_vectors(f, n, vectors);
    vec![s; h.group().order()]
}

/// Parameters of a Taft algebra of dimension `n^2` over `GF(p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TaftParams {
    pub n: usize,
    pub p: u64,
    pub q: u64,
}

impl TaftParams {
    pub fn new(n: usize, p: u64, q: u64) -> Result<Self> {
        let field = FieldSpec::prime(p)?;
        if n < 2 {
            return Err(Error::InvalidArgument("Taft algebras need n >= 2".into()));
        }
        let qs = Scalar::from_i64(field, q as i64);
        let primitive = qs.pow(n as u64).is_one() && (1..n).all(|k| !qs.pow(k as u64).is_one());
        if !primitive {
            return Err(Error::InvalidArgument(format!(
                "{q} is not a primitive {n}-th root of unity mod {p}"
            )));
        }
        Ok(TaftParams { n, p, q: q % p })
    }

    pub fn field(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }

    pub fn dim(&self) -> usize {
        self.n * self.n
    }

    /// Basis index of `g^i x^j`.
    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.n + j
    }

    pub fn basis_vector(&self, i: usize, j: usize) -> Matrix {
        Matrix::unit_column(self.field(), self.dim(), self.index(i, j))
    }
}

fn product(mul: &Matrix, x: &Matrix, y: &Matrix) -> Matrix {
    mul.mul(&x.kron(y).expect("same field"))
        .expect("shapes agree")
}

/// The Taft algebra with `x^n = 1`, `g^n = 0`, `xg = q gx`, `g` being
/// `(1, x)`-primitive: `Δg = g ⊗ x + 1 ⊗ g`.
pub fn taft_algebra(t: TaftParams) -> ClassicalHopfAlgebra {
    let field = t.field();
    let (n, d) = (t.n, t.dim());
    let q = Scalar::from_i64(field, t.q as i64);
    let mut mul = Matrix::zeros(field, d, d * d);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    if i + k < n {
                        // x^j g^k = q^{jk} g^k x^j
                        mul.set(
                            t.index(i + k, (j + l) % n),
                            t.index(i, j) * d + t.index(k, l),
                            q.pow((j * k) as u64),
                        );
                    }
                }
            }
        }
    }
    let unit = t.basis_vector(0, 0);
    let (one, g, x) = (
        t.basis_vector(0, 0),
        t.basis_vector(1, 0),
        t.basis_vector(0, 1),
    );
    let delta_g = g.kron(&x).unwrap().add(&one.kron(&g).unwrap()).unwrap();
    let delta_x = x.kron(&x).unwrap();
    let tensor_product = |a: &Matrix, b: &Matrix| {
        interleaved_apply(&mul, &mul, [d, d, d, d], &a.kron(b).unwrap()).unwrap()
    };

    let mut delta = Matrix::zeros(field, d * d, d);
    let mut antipode = Matrix::zeros(field, d, d);
    let x_inv = (1..n - 1).fold(x.clone(), |acc, _| product(&mul, &acc, &x));
    let s_g = product(&mul, &g, &x_inv).neg();
    for i in 0..n {
        for j in 0..n {
            let mut dv = one.kron(&one).unwrap();
            let mut sv = one.clone();
            for _ in 0..i {
                dv = tensor_product(&dv, &delta_g);
            }
            for _ in 0..j {
                dv = tensor_product(&dv, &delta_x);
            }
            // the antipode reverses products
            for _ in 0..j {
                sv = product(&mul, &sv, &x_inv);
            }
            for _ in 0..i {
                sv = product(&mul, &sv, &s_g);
            }
            let col = t.index(i, j);
            for r in 0..d * d {
                delta.set(r, col, dv.get(r, 0).clone());
            }
            for r in 0..d {
                antipode.set(r, col, sv.get(r, 0).clone());
            }
        }
    }
    let counit = Matrix::from_fn(field, 1, d, |_, c| {
        Scalar::from_i64(field, i64::from(c < n))
    });
    ClassicalHopfAlgebra::new(field, mul, unit, delta, counit, antipode).expect("Taft shapes")
}

/// `Z_n` acting on the Taft algebra by conjugation with powers of `x`.
pub fn taft_action(t: TaftParams, a: &ClassicalHopfAlgebra) -> GroupAction {
    let pi = Arc::new(GroupTable::cyclic(t.n, "x"));
    let mut maps = Vec::new();
    for k in 0..t.n {
        let xk = t.basis_vector(0, k % t.n);
        let xk_inv = t.basis_vector(0, (t.n - k) % t.n);
        let left = a
            .mul
            .mul(&xk.kron(&Matrix::identity(a.field, a.dim)).unwrap())
            .unwrap();
        let right = a
            .mul
            .mul(&Matrix::identity(a.field, a.dim).kron(&xk_inv).unwrap())
            .unwrap();
        maps.push(left.mul(&right).unwrap());
    }
    GroupAction::new(pi, maps).expect("one map per element")
}

/// The Taft algebra mirrored along conjugation by `x`.
pub fn taft_mirror(n: usize, p: u64, q: u64) -> Result<HopfPiCoalgebra> {
    let t = TaftParams::new(n, p, q)?;
    let a = taft_algebra(t);
    mirror(&a, &taft_action(t, &a))
}

/// `x - 1` in every component.
pub fn taft_x_minus_one(t: TaftParams) -> Matrix {
    t.basis_vector(0, 1)
        .sub(&t.basis_vector(0, 0))
        .expect("same shape")
}

/// The span of the powers of `x`.
pub fn taft_grouplikes(t: TaftParams) -> Subspace {
    let cols: Vec<Matrix> = (0..t.n).map(|j| t.basis_vector(0, j)).collect();
    Subspace::span_columns(&Matrix::hstack(&cols.iter().collect::<Vec<_>>()).unwrap())
}

pub fn taft_nilpotent_ideal(t: TaftParams) -> Subspace {
    let cols: Vec<Matrix> = (1..t.n)
        .flat_map(|i| (0..t.n).map(move |j| (i, j)))
        .map(|(i, j)| t.basis_vector(i, j))
        .collect();
    Subspace::span_columns(&Matrix::hstack(&cols.iter().collect::<Vec<_>>()).unwrap())
}
