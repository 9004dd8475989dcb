use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{invert, rank, FieldSpec, Matrix, Scalar, Subspace};
use crate::report::Report;
use crate::structures::{holds, names, HopfPiCoalgebra};

use super::coinduced::{unvec, vec_of, CoinducedComodule};

/// Per component, a basis `e_i` (columns of `bases[a]`) and functionals
/// `g_i` (rows of `duals[a]`). A genuine dual pair has `duals[a] bases[a] = I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualBases {
    pub bases: Vec<Matrix>,
    pub duals: Vec<Matrix>,
}

impl DualBases {
    pub fn standard(h: &HopfPiCoalgebra) -> Self {
        let bases: Vec<Matrix> = h.group().elements().map(|a| h.identity(a)).collect();
        DualBases {
            duals: bases.clone(),
            bases,
        }
    }

    pub fn from_bases(bases: Vec<Matrix>) -> Result<Self> {
        let duals = bases.iter().map(invert).collect::<Result<Vec<_>>>()?;
        Ok(DualBases { bases, duals })
    }

    /// Random invertible bases drawn from a seeded generator. Entries are
    /// uniform over a prime field and in `-4..=4` over the rationals.
    pub fn random(h: &HopfPiCoalgebra, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let bases = h
            .group()
            .elements()
            .map(|a| random_invertible(h.field(), h.dim(a), &mut rng))
            .collect();
        Self::from_bases(bases)
    }

    pub fn is_dual_pair(&self) -> bool {
        self.bases
            .iter()
            .zip(&self.duals)
            .all(|(e, g)| matches!(g.mul(e), Ok(p) if p.is_identity()))
    }

    fn functional(&self, a: usize, i: usize) -> Matrix {
        self.duals[a].select_rows(&[i])
    }

    fn vector(&self, a: usize, i: usize) -> Matrix {
        self.bases[a].column_matrix(i)
    }
}

fn random_invertible(field: FieldSpec, n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let m = Matrix::from_fn(field, n, n, |_, _| match field {
            FieldSpec::Prime(p) => Scalar::from_i64(field, rng.gen_range(0..p) as i64),
            FieldSpec::Rationals => Scalar::from_i64(field, rng.gen_range(-4..=4)),
        });
        if rank(&m) == n {
            return m;
        }
    }
}

/// `Ω(a, b)(F) = Σ_i (I ⊗ g_i)Δ(a, b)F ⊗ e_i` on the coordinates of the
/// given spaces of flattened maps `V -> H_a`, indexed by `a * |group| + b`.
pub fn omega_with(
    h: &HopfPiCoalgebra,
    spaces: &[Subspace],
    d: usize,
    duals: &DualBases,
) -> Result<Vec<Matrix>> {
    let g = h.group();
    let f = h.field();
    let mut theta = Vec::new();
    for (a, b) in g.pairs() {
        let ab = g.mul(a, b);
        let (wa, wab) = (&spaces[a], &spaces[ab]);
        let nb = h.dim(b);
        let ia = h.identity(a);
        let mut out = Matrix::zeros(f, wa.dim() * nb, wab.dim());
        for col in 0..wab.dim() {
            let map = h
                .delta(a, b)
                .mul(&unvec(f, &wab.basis_vector(col), h.dim(ab), d))?;
            let mut acc = Matrix::zeros(f, wa.dim() * nb, 1);
            for i in 0..nb {
                let leg = ia.kron(&duals.functional(b, i))?.mul(&map)?;
                let coords = wa
                    .coords(&vec_of(&leg))
                    .ok_or_else(|| Error::NotContained {
                        what: format!("coinduced coaction at ({}, {})", g.name(a), g.name(b)),
                    })?;
                acc = acc.add(&Matrix::column_vector(f, coords).kron(&duals.vector(b, i))?)?;
            }
            for r in 0..acc.rows() {
                out.set(r, col, acc.get(r, 0).clone());
            }
        }
        theta.push(out);
    }
    Ok(theta)
}

/// The two expansions of `(I ⊗ Δ(b, c))Δ(a, bc)F` through dual bases of
/// `H_{bc}` and of `H_b`, `H_c` respectively.
pub fn xi_maps(
    h: &HopfPiCoalgebra,
    duals: &DualBases,
    a: usize,
    b: usize,
    c: usize,
    f: &Matrix,
) -> Result<(Matrix, Matrix)> {
    let g = h.group();
    let bc = g.mul(b, c);
    let ia = h.identity(a);
    let d = h.delta(a, bc).mul(f)?;
    let mut xi1 = Matrix::zeros(h.field(), h.dim(a) * h.dim(b) * h.dim(c), f.cols());
    for i in 0..h.dim(bc) {
        let leg = ia.kron(&duals.functional(bc, i))?.mul(&d)?;
        xi1 = xi1.add(&leg.kron(&h.delta(b, c).mul(&duals.vector(bc, i))?)?)?;
    }
    let mut xi2 = Matrix::zeros(h.field(), xi1.rows(), f.cols());
    for p in 0..h.dim(b) {
        for q in 0..h.dim(c) {
            let pairing = duals
                .functional(b, p)
                .kron(&duals.functional(c, q))?
                .mul(h.delta(b, c))?;
            let leg = ia.kron(&pairing)?.mul(&d)?;
            xi2 = xi2.add(&leg.kron(&duals.vector(b, p).kron(&duals.vector(c, q))?)?)?;
        }
    }
    Ok((xi1, xi2))
}

/// Recomputes `Ω` for each alternative choice and compares with the stored
/// coaction, and compares the two `ξ` expansions on every basis map.
/// A choice that is not a dual pair is recorded as a failed pairing.
pub fn verify_basis_independence(w: &CoinducedComodule, choices: &[DualBases]) -> Result<Report> {
    let h = &w.hopf;
    let g = h.group();
    let mut r = Report::new("independence of the dual basis");
    for (k, duals) in choices.iter().enumerate() {
        let tag = format!("choice {k}");
        r.record("dual pairing", vec![tag.clone()], duals.is_dual_pair());
        match omega_with(h, &w.spaces, w.v_dim, duals) {
            Ok(theta) => {
                for (a, b) in g.pairs() {
                    let mut at = names(g, &[a, b]);
                    at.push(tag.clone());
                    r.record(
                        "coaction unchanged",
                        at,
                        theta[a * g.order() + b] == *w.comodule.theta(a, b),
                    );
                }
            }
            Err(Error::NotContained { .. }) => {
                r.record("coaction unchanged", vec![tag.clone()], false)
            }
            Err(e) => return Err(e),
        }
        for (a, b, c) in g.triples() {
            let abc = g.mul(g.mul(a, b), c);
            let mut at = names(g, &[a, b, c]);
            at.push(tag.clone());
            let ok = (0..w.spaces[abc].dim())
                .all(|i| holds(|| xi_maps(h, duals, a, b, c, &w.basis_map(abc, i))));
            r.record("expansions agree", at, ok);
        }
    }
    Ok(r)
}
