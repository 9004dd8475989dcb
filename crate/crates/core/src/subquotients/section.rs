use crate::error::{Error, Result};
use crate::linalg::{
    kernel_basis, rank, right_inverse, solve_linear_map, FieldSpec, Matrix, Scalar,
};
use crate::report::Report;
use crate::structures::{expect_shape, holds, names, HopfPiCoalgebra, PiCoalgebra};

use super::pair::SubgroupPair;

/// Default bound on the candidates tried per component by `find_section`.
pub const DEFAULT_CANDIDATE_CAP: u64 = 4096;

/// `g[a]: C_a -> H_a` together with its convolution inverse
/// `ginv[a]: C_{a^-1} -> H_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionFamily {
    pub g: Vec<Matrix>,
    pub ginv: Vec<Matrix>,
}

/// Which definition of a section applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SectionKind {
    /// `g(1) = 1` and `L(1, a) g = (I ⊗ g)Δ^C(1, a)`.
    Subcoalgebra,
    /// `g(σ(1)) = 1` plus the two fiberwise conditions.
    Coisotropic,
}

fn convolve_sides(
    h: &HopfPiCoalgebra,
    c: &PiCoalgebra,
    a: usize,
    g: &Matrix,
    x: &Matrix,
) -> Result<(Matrix, Matrix)> {
    let ai = h.group().inv(a);
    let left = h.mul(a).mul(&Matrix::kron_apply(g, x, c.delta(a, ai))?)?;
    let right = h.mul(a).mul(&Matrix::kron_apply(x, g, c.delta(ai, a))?)?;
    Ok((left, right))
}

/// The convolution inverse of `g: C_a -> H_a`, a map `C_{a^-1} -> H_a`
/// solving both one-sided identities at once.
pub fn convolution_inverse_at(
    h: &HopfPiCoalgebra,
    c: &PiCoalgebra,
    a: usize,
    g: &Matrix,
) -> Result<Option<Matrix>> {
    let g_t = h.group();
    let f = h.field();
    expect_shape(g, (h.dim(a), c.dim(a)), f, || {
        format!("section at {}", g_t.name(a))
    })?;
    let target = h.unit(a).mul(c.counit())?;
    let rhs = Matrix::vstack(&[&target, &target])?;
    let solved = solve_linear_map(
        f,
        h.dim(a),
        c.dim(g_t.inv(a)),
        |x| {
            let (l, r) = convolve_sides(h, c, a, g, x)?;
            Matrix::vstack(&[&l, &r])
        },
        &rhs,
    )?;
    Ok(solved.map(|(x, _)| x))
}

/// Componentwise convolution inverse; `None` if any component has none.
pub fn convolution_inverse(
    h: &HopfPiCoalgebra,
    c: &PiCoalgebra,
    g: &[Matrix],
) -> Result<Option<Vec<Matrix>>> {
    if g.len() != h.group().order() {
        return Err(Error::Shape("one map per element required".into()));
    }
    let mut out = Vec::new();
    for a in h.group().elements() {
        match convolution_inverse_at(h, c, a, &g[a])? {
            Some(x) => out.push(x),
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

fn record_inverse(r: &mut Report, h: &HopfPiCoalgebra, c: &PiCoalgebra, s: &SectionFamily) {
    let g = h.group();
    for a in g.elements() {
        let target = h.unit(a).mul(c.counit());
        let sides = convolve_sides(h, c, a, &s.g[a], &s.ginv[a]);
        let (l, rr) = match (target, sides) {
            (Ok(t), Ok((l, rr))) => (l == t, rr == t),
            _ => (false, false),
        };
        r.record("convolution inverse (left)", names(g, &[a]), l);
        r.record("convolution inverse (right)", names(g, &[a]), rr);
    }
}

impl SectionFamily {
    /// Pairs `g` with its computed convolution inverse.
    pub fn from_maps(pair: &SubgroupPair, g: Vec<Matrix>) -> Result<Option<Self>> {
        Ok(convolution_inverse(&pair.hopf, &pair.quotient, &g)?
            .map(|ginv| SectionFamily { g, ginv }))
    }
}

/// `(m ⊗ I_x)(I_1 ⊗ τ)(left ⊗ I_1)`: from `D ⊗ H_1` to `H_1 ⊗ H_x` when
/// `left: D -> H_1 ⊗ H_x` and `m: H_1 ⊗ H_1 -> H_1`.
fn twisted_product(m: &Matrix, left: &Matrix, n1: usize, nx: usize) -> Result<Matrix> {
    let f = left.field();
    let y = left.kron(&Matrix::identity(f, n1))?;
    let mut perm = Vec::with_capacity(y.rows());
    for i in 0..n1 {
        for j in 0..nx {
            for k in 0..n1 {
                perm.push(i * n1 * nx + k * nx + j);
            }
        }
    }
    Matrix::kron_apply(m, &Matrix::identity(f, nx), &y.permute_rows(&perm))
}

/// Both sides of the second fiberwise condition: the left side on
/// `C_a ⊗ H_1`, the right side on `H_a ⊗ H_1`.
fn condition_two(pair: &SubgroupPair, a: usize, g: &Matrix) -> Result<(Matrix, Matrix)> {
    let h = &pair.hopf;
    let s = &pair.sigma;
    let (n1, na) = (h.dim(0), h.dim(a));
    let lhs = Matrix::kron_apply(
        &s[0],
        &h.identity(a),
        &twisted_product(h.mul(0), &h.delta(0, a).mul(g)?, n1, na)?,
    )?;
    let rhs = Matrix::kron_apply(
        &s[0],
        &g.mul(&s[a])?,
        &twisted_product(h.mul(0), h.delta(0, a), n1, na)?,
    )?;
    Ok((lhs, rhs))
}

/// Both sides of the third fiberwise condition for `x = g_a^{-1}`: the left
/// side on `C_{a^-1} ⊗ H_1`, the right side on `H_{a^-1} ⊗ H_1`.
fn condition_three(pair: &SubgroupPair, a: usize, x: &Matrix) -> Result<(Matrix, Matrix)> {
    let h = &pair.hopf;
    let s = &pair.sigma;
    let f = h.field();
    let ai = h.group().inv(a);
    let (n1, na, ni) = (h.dim(0), h.dim(a), h.dim(ai));
    let lhs = Matrix::kron_apply(
        &s[0],
        &h.identity(a),
        &twisted_product(h.mul(0), &h.delta(0, a).mul(x)?, n1, na)?,
    )?;
    let flipped = crate::linalg::swap_map(f, ni, n1).mul(h.delta(ai, 0))?;
    let m = h.mul(0).mul(&h.antipode(0).kron(&h.identity(0))?)?;
    let rhs = Matrix::kron_apply(
        &s[0],
        &x.mul(&s[ai])?,
        &twisted_product(&m, &flipped, n1, ni)?,
    )?;
    Ok((lhs, rhs))
}

/// Checks a fiberwise condition on a transversal of `σ_b` and checks that
/// the right side vanishes on `ker σ_b`, so it is independent of the lift.
fn record_fiberwise(
    r: &mut Report,
    diagram: &str,
    at: Vec<String>,
    sides: Result<(Matrix, Matrix)>,
    sigma: &Matrix,
    n1: usize,
) {
    let f = sigma.field();
    let outcome = (|| -> Result<(bool, bool)> {
        let (lhs, rhs) = sides?;
        let t = right_inverse(sigma)?;
        let id = Matrix::identity(f, n1);
        let on_transversal = rhs.mul(&t.kron(&id)?)? == lhs;
        let k = kernel_basis(sigma).basis_matrix();
        let fiber = rhs.mul(&k.kron(&id)?)?.is_zero();
        Ok((on_transversal, fiber))
    })();
    let (a, b) = outcome.unwrap_or((false, false));
    r.record(diagram, at.clone(), a);
    r.record(&format!("{diagram} independent of the lift"), at, b);
}

/// The section conditions for a Hopf subcoalgebra pair.
pub fn check_section_subcoalgebra(pair: &SubgroupPair, s: &SectionFamily) -> Result<Report> {
    let c = pair.require_hopf_quotient()?;
    let h = &pair.hopf;
    let g = h.group();
    check_section_shapes(pair, s)?;
    let mut r = Report::new("section of a Hopf pi-subcoalgebra");
    record_inverse(&mut r, h, &pair.quotient, s);
    for a in g.elements() {
        let at = names(g, &[a]);
        r.record(
            "section preserves unit",
            at.clone(),
            holds(|| Ok((s.g[a].mul(c.unit(a))?, h.unit(a).clone()))),
        );
        let ok = holds(|| {
            Ok((
                pair.l_map(0, a)?.mul(&s.g[a])?,
                Matrix::kron_apply(&c.identity(0), &s.g[a], c.delta(0, a))?,
            ))
        });
        r.record("section intertwines L", at, ok);
    }
    Ok(r)
}

/// The three section conditions for a coisotropic pair.
pub fn check_section_coisotropic(pair: &SubgroupPair, s: &SectionFamily) -> Result<Report> {
    let h = &pair.hopf;
    let g = h.group();
    check_section_shapes(pair, s)?;
    for a in g.elements() {
        if rank(&pair.sigma[a]) != pair.quotient.dim(a) {
            return Err(Error::precondition(
                format!("projection at {} is not surjective", g.name(a)),
                None,
            ));
        }
    }
    let mut r = Report::new("section of a coisotropic pair");
    record_inverse(&mut r, h, &pair.quotient, s);
    let n1 = h.dim(0);
    for a in g.elements() {
        let at = names(g, &[a]);
        let one = holds(|| Ok((s.g[a].mul(&pair.unit_image(a)?)?, h.unit(a).clone())));
        r.record("section condition 1", at.clone(), one);
        record_fiberwise(
            &mut r,
            "section condition 2",
            at.clone(),
            condition_two(pair, a, &s.g[a]),
            &pair.sigma[a],
            n1,
        );
        let ai = g.inv(a);
        record_fiberwise(
            &mut r,
            "section condition 3",
            at,
            condition_three(pair, a, &s.ginv[a]),
            &pair.sigma[ai],
            n1,
        );
    }
    Ok(r)
}

fn check_section_shapes(pair: &SubgroupPair, s: &SectionFamily) -> Result<()> {
    let h = &pair.hopf;
    let g = h.group();
    if s.g.len() != g.order() || s.ginv.len() != g.order() {
        return Err(Error::Shape("one map per element required".into()));
    }
    for a in g.elements() {
        expect_shape(&s.g[a], (h.dim(a), pair.quotient.dim(a)), h.field(), || {
            format!("section at {}", g.name(a))
        })?;
        let ci = pair.quotient.dim(g.inv(a));
        expect_shape(&s.ginv[a], (h.dim(a), ci), h.field(), || {
            format!("inverse section at {}", g.name(a))
        })?;
    }
    Ok(())
}

/// The linear part of the section conditions at `a`, as a map on `g_a`.
fn linear_conditions(
    pair: &SubgroupPair,
    kind: SectionKind,
    a: usize,
    x: &Matrix,
) -> Result<Matrix> {
    let h = &pair.hopf;
    match kind {
        SectionKind::Subcoalgebra => {
            let c = pair.require_hopf_quotient()?;
            let unit = x.mul(c.unit(a))?;
            let l = pair.l_map(0, a)?.mul(x)?.sub(&Matrix::kron_apply(
                &c.identity(0),
                x,
                c.delta(0, a),
            )?)?;
            Matrix::vstack(&[&unit, &l.flatten()])
        }
        SectionKind::Coisotropic => {
            let unit = x.mul(&pair.unit_image(a)?)?;
            let (lhs, rhs) = condition_two(pair, a, x)?;
            let id = Matrix::identity(h.field(), h.dim(0));
            let residual = lhs.mul(&pair.sigma[a].kron(&id)?)?.sub(&rhs)?;
            Matrix::vstack(&[&unit, &residual.flatten()])
        }
    }
}

/// Coefficient vectors for kernel combinations, in a fixed order: over
/// GF(p) all vectors in base-`p` order, over the rationals zero and then
/// `±e_i`.
fn coefficient_candidates(field: FieldSpec, k: usize, cap: u64) -> Vec<Vec<Scalar>> {
    match field.order() {
        Some(p) => {
            let total = (p as u128)
                .checked_pow(k as u32)
                .unwrap_or(u128::MAX)
                .min(cap as u128) as u64;
            (0..total)
                .map(|mut n| {
                    (0..k)
                        .map(|_| {
                            let d = n % p;
                            n /= p;
                            Scalar::from_i64(field, d as i64)
                        })
                        .collect()
                })
                .collect()
        }
        None => {
            let mut out = vec![vec![Scalar::zero(field); k]];
            for sign in [1, -1] {
                for i in 0..k {
                    let mut v = vec![Scalar::zero(field); k];
                    v[i] = Scalar::from_i64(field, sign);
                    out.push(v);
                }
            }
            out.into_iter().take(cap as usize).collect()
        }
    }
}

/// Searches for a section. The linear conditions are solved exactly; the
/// remaining ones (convolution invertibility, and the third condition in
/// the coisotropic case) are tested on candidates from the affine solution
/// set. `None` means the bounded search found nothing, which is a proof of
/// nonexistence only when every candidate over a finite field was tried.
pub fn find_section(
    pair: &SubgroupPair,
    kind: SectionKind,
    cap: u64,
) -> Result<Option<SectionFamily>> {
    let h = &pair.hopf;
    let c = &pair.quotient;
    let f = h.field();
    let mut g = Vec::new();
    let mut ginv = Vec::new();
    for a in h.group().elements() {
        let rhs = {
            let zero = linear_conditions(pair, kind, a, &Matrix::zeros(f, h.dim(a), c.dim(a)))?;
            let mut v = Matrix::zeros(f, zero.rows(), 1);
            for i in 0..h.dim(a) {
                v.set(i, 0, h.unit(a).get(i, 0).clone());
            }
            v
        };
        let Some((x0, kernel)) = solve_linear_map(
            f,
            h.dim(a),
            c.dim(a),
            |x| linear_conditions(pair, kind, a, x),
            &rhs,
        )?
        else {
            return Ok(None);
        };
        let mut found = None;
        for coeffs in coefficient_candidates(f, kernel.len(), cap) {
            let mut x = x0.clone();
            for (k, s) in kernel.iter().zip(&coeffs) {
                if !s.is_zero() {
                    x = x.add(&k.scale(s))?;
                }
            }
            let Some(inv) = convolution_inverse_at(h, c, a, &x)? else {
                continue;
            };
            if kind == SectionKind::Coisotropic {
                let mut r = Report::new("candidate");
                record_fiberwise(
                    &mut r,
                    "condition 3",
                    vec![],
                    condition_three(pair, a, &inv),
                    &pair.sigma[h.group().inv(a)],
                    h.dim(0),
                );
                if !r.passed() {
                    continue;
                }
            }
            found = Some((x, inv));
            break;
        }
        let Some((x, inv)) = found else {
            return Ok(None);
        };
        g.push(x);
        ginv.push(inv);
    }
    Ok(Some(SectionFamily { g, ginv }))
}
