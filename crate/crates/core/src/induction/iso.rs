use crate::error::{Error, Result};
use crate::linalg::{kron_all, right_tensor_coords, swap_map, Matrix};
use crate::report::Report;
use crate::structures::{expect_shape, holds, names, GroupAction, HopfPiCoalgebra};
use crate::subquotients::{SectionFamily, SubgroupPair};

use super::induced::InducedComodule;
use super::lmap::{Flavor, HomogeneousSpace};

/// A pair of mutually inverse families, with the checks that establish it.
#[derive(Clone, Debug)]
pub struct IsoWitness {
    pub forward: Vec<Matrix>,
    pub backward: Vec<Matrix>,
    pub report: Report,
}

/// `(σ_a ⊗ σ_{a^-1} ⊗ I)(Δ(a, a^-1) ⊗ I)Δ(1, a): H_a -> C_a ⊗ C_{a^-1} ⊗ H_a`.
fn split_three(pair: &SubgroupPair, a: usize) -> Result<Matrix> {
    let h = &pair.hopf;
    let ai = h.group().inv(a);
    let id = h.identity(a);
    let sig = kron_all(&[&pair.sigma[a], &pair.sigma[ai], &id])?;
    sig.mul(&Matrix::kron_apply(h.delta(a, ai), &id, h.delta(0, a))?)
}

/// `μ_a(g^-1_a σ_{a^-1} ⊗ I)Δ(a^-1, a): H_1 -> H_a`.
fn inverse_factor(pair: &SubgroupPair, s: &SectionFamily, a: usize) -> Result<Matrix> {
    let h = &pair.hopf;
    let ai = h.group().inv(a);
    h.mul(a).mul(&Matrix::kron_apply(
        &s.ginv[a].mul(&pair.sigma[ai])?,
        &h.identity(a),
        h.delta(ai, a),
    )?)
}

fn check_section_shapes(pair: &SubgroupPair, s: &SectionFamily) -> Result<()> {
    let h = &pair.hopf;
    let g = h.group();
    if s.g.len() != g.order() || s.ginv.len() != g.order() {
        return Err(Error::Shape("one section map per element required".into()));
    }
    for a in g.elements() {
        let c = &pair.quotient;
        expect_shape(&s.g[a], (h.dim(a), c.dim(a)), h.field(), || {
            format!("section at {}", g.name(a))
        })?;
        expect_shape(&s.ginv[a], (h.dim(a), c.dim(g.inv(a))), h.field(), || {
            format!("inverse section at {}", g.name(a))
        })?;
    }
    Ok(())
}

/// The identities a section and its convolution inverse satisfy over a pair
/// whose target is a Hopf family, itemized by identity and element.
pub fn verify_section_identities(
    pair: &SubgroupPair,
    s: &SectionFamily,
    b: &HomogeneousSpace,
) -> Result<Report> {
    let c = pair.require_hopf_quotient()?.clone();
    check_section_shapes(pair, s)?;
    let h = &pair.hopf;
    let g = h.group();
    let mut r = Report::new("section identities");
    for a in g.elements() {
        let ai = g.inv(a);
        let at = names(g, &[a]);
        r.record(
            "L of the inverse section",
            at.clone(),
            holds(|| {
                let lhs = pair.l_map(0, a)?.mul(&s.ginv[a])?;
                let flip = swap_map(h.field(), c.dim(ai), c.dim(0)).mul(c.delta(ai, 0))?;
                Ok((lhs, Matrix::kron_apply(c.antipode(0), &s.ginv[a], &flip)?))
            }),
        );
        r.record(
            "reconstruction from section and inverse",
            at.clone(),
            holds(|| {
                let inner = h.mul(a).mul(
                    &s.g[a]
                        .mul(&pair.sigma[a])?
                        .kron(&s.ginv[a].mul(&pair.sigma[ai])?)?,
                )?;
                let tail = Matrix::kron_apply(&h.identity(a), h.delta(ai, a), h.delta(a, 0))?;
                Ok((
                    h.mul(a)
                        .mul(&Matrix::kron_apply(&inner, &h.identity(a), &tail)?)?,
                    h.identity(a),
                ))
            }),
        );
        let factor = inverse_factor(pair, s, a)?;
        r.record(
            "inverse factor lies in the homogeneous space",
            at.clone(),
            (0..factor.cols()).all(|j| b.components[a].contains(&factor.column(j))),
        );
        r.record(
            "split of the section",
            at.clone(),
            holds(|| {
                let lhs = split_three(pair, a)?.mul(&s.g[a])?;
                let id_c = c.identity(a);
                let rhs = kron_all(&[&id_c, &c.identity(ai), &s.g[a]])?
                    .mul(&Matrix::kron_apply(&id_c, c.delta(ai, a), c.delta(a, 0))?)?;
                Ok((lhs, rhs))
            }),
        );
        r.record(
            "split of the homogeneous space",
            at,
            holds(|| {
                let bb = b.components[a].basis_matrix();
                let lhs = split_three(pair, a)?.mul(&bb)?;
                Ok((lhs, kron_all(&[c.unit(a), c.unit(ai), &bb])?))
            }),
        );
    }
    Ok(r)
}

fn iso_with(
    pair: &SubgroupPair,
    s: &SectionFamily,
    x: &HomogeneousSpace,
    subject: &str,
) -> Result<IsoWitness> {
    check_section_shapes(pair, s)?;
    let h = &pair.hopf;
    let g = h.group();
    let mut report = Report::new(subject);
    let (mut forward, mut backward) = (Vec::new(), Vec::new());
    for a in g.elements() {
        let at = names(g, &[a]);
        let ai = g.inv(a);
        let xs = &x.components[a];
        let fwd = h.mul(a).mul(&s.g[a].kron(&xs.basis_matrix())?)?;
        let factor = inverse_factor(pair, s, a)?;
        report.record(
            "inverse factor lies in the homogeneous space",
            at.clone(),
            (0..factor.cols()).all(|j| xs.contains(&factor.column(j))),
        );
        let right = h
            .mul(a)
            .mul(&s.ginv[a].mul(&pair.sigma[ai])?.kron(&h.identity(a))?)?;
        let raw = pair.sigma[a].kron(&right)?.mul(&Matrix::kron_apply(
            h.delta(a, ai),
            &h.identity(a),
            h.delta(0, a),
        )?)?;
        let bwd = right_tensor_coords(pair.quotient.dim(a), xs, &raw).ok_or_else(|| {
            Error::NotContained {
                what: format!("inverse image at {}", g.name(a)),
            }
        })?;
        report.record(
            "forward then inverse is identity",
            at.clone(),
            holds(|| Ok((bwd.mul(&fwd)?, Matrix::identity(h.field(), fwd.cols())))),
        );
        report.record(
            "inverse then forward is identity",
            at,
            holds(|| Ok((fwd.mul(&bwd)?, h.identity(a)))),
        );
        forward.push(fwd);
        backward.push(bwd);
    }
    Ok(IsoWitness {
        forward,
        backward,
        report,
    })
}

/// `A_a = μ_a(g_a ⊗ I): C_a ⊗ B_a -> H_a` with its explicit inverse.
pub fn iso_cb(pair: &SubgroupPair, s: &SectionFamily, b: &HomogeneousSpace) -> Result<IsoWitness> {
    if b.flavor != Flavor::B {
        return Err(Error::InvalidArgument(
            "expected the homogeneous space B".into(),
        ));
    }
    iso_with(pair, s, b, "C ⊗ B decomposition")
}

/// The same decomposition with `G` in place of `B`.
pub fn iso_cg(pair: &SubgroupPair, s: &SectionFamily, gs: &HomogeneousSpace) -> Result<IsoWitness> {
    if gs.flavor != Flavor::G {
        return Err(Error::InvalidArgument(
            "expected the homogeneous space G".into(),
        ));
    }
    iso_with(pair, s, gs, "C ⊗ G decomposition")
}

/// Algebra maps `η_a: H_1 -> H_a` with `Δ(1, a)η_a = (I ⊗ η_a)Δ(1, 1)`.
pub fn check_cosection(h: &HopfPiCoalgebra, eta: &[Matrix]) -> Result<Report> {
    let g = h.group();
    if eta.len() != g.order() {
        return Err(Error::Shape(
            "one cosection map per element required".into(),
        ));
    }
    for a in g.elements() {
        expect_shape(&eta[a], (h.dim(a), h.dim(0)), h.field(), || {
            format!("cosection at {}", g.name(a))
        })?;
    }
    let mut r = Report::new("cosection");
    for a in g.elements() {
        let at = names(g, &[a]);
        let e = &eta[a];
        r.record(
            "multiplicative",
            at.clone(),
            holds(|| Ok((e.mul(h.mul(0))?, h.mul(a).mul(&e.kron(e)?)?))),
        );
        r.record(
            "unital",
            at.clone(),
            holds(|| Ok((e.mul(h.unit(0))?, h.unit(a).clone()))),
        );
        r.record(
            "comodule map",
            at,
            holds(|| {
                Ok((
                    h.delta(0, a).mul(e)?,
                    Matrix::kron_apply(&h.identity(0), e, h.delta(0, 0))?,
                ))
            }),
        );
    }
    Ok(r)
}

/// For a mirror family, `η_a = λ(a^-1)` transports the identity component to
/// component `a` along the twisted comultiplication.
pub fn mirror_cosection(action: &GroupAction) -> Vec<Matrix> {
    let g = &action.group;
    g.elements()
        .map(|a| action.maps[g.inv(a)].clone())
        .collect()
}

/// The naive copy maps between equal-dimensional components. A cosection
/// only when the twisting is trivial.
pub fn copy_cosection(h: &HopfPiCoalgebra) -> Result<Vec<Matrix>> {
    let g = h.group();
    g.elements()
        .map(|a| {
            if h.dim(a) != h.dim(0) {
                return Err(Error::Shape(format!(
                    "component {} differs in dimension from the identity component",
                    g.name(a)
                )));
            }
            Ok(h.identity(a))
        })
        .collect()
}

/// `q_a(v ⊗ b) = v_0 ⊗ η_a g_1(v_1) b: V ⊗ B_a -> Ind(V)_a`, with both
/// displayed forms of its inverse.
pub fn iso_vb(
    pair: &SubgroupPair,
    s: &SectionFamily,
    eta: &[Matrix],
    b: &HomogeneousSpace,
    ind: &InducedComodule,
) -> Result<IsoWitness> {
    let h = &pair.hopf;
    let cos = check_cosection(h, eta)?;
    if !cos.passed() {
        return Err(Error::precondition(
            format!("not a cosection: {:?}", cos.failing_diagrams()),
            None,
        ));
    }
    check_section_shapes(pair, s)?;
    if b.flavor != Flavor::B {
        return Err(Error::InvalidArgument(
            "expected the homogeneous space B".into(),
        ));
    }
    let f = h.field();
    let g = h.group();
    let d = ind.v_dim;
    let id_v = Matrix::identity(f, d);
    let rho = &ind.rho;
    let mut report = Report::new("V ⊗ B decomposition");
    let (mut forward, mut backward) = (Vec::new(), Vec::new());
    for a in g.elements() {
        let at = names(g, &[a]);
        let ia = h.identity(a);
        let bs = &b.components[a];
        let bb = bs.basis_matrix();
        let ibb = id_v.kron(&bb)?;
        let t = id_v.kron(&eta[a].mul(&s.g[0])?)?.mul(rho)?;
        let q_amb = id_v.kron(h.mul(a))?.mul(&t.kron(&ia)?)?;
        let missing = |what: &str| Error::NotContained {
            what: format!("{what} at {}", g.name(a)),
        };
        let fwd = ind.spaces[a]
            .coords_of_columns(&q_amb.mul(&ibb)?)
            .ok_or_else(|| missing("image of V ⊗ B"))?;
        let left = id_v.kron(&h.mul(a).mul(&eta[a].mul(&s.ginv[0])?.kron(&ia)?)?)?;
        let basis = ind.spaces[a].basis_matrix();
        let via_rho = left.mul(&rho.kron(&ia)?)?.mul(&basis)?;
        let via_l = left.mul(&id_v.kron(&pair.l_map(0, a)?)?)?.mul(&basis)?;
        report.record("inverse formulas agree", at.clone(), via_rho == via_l);
        let bwd = right_tensor_coords(d, bs, &via_rho).ok_or_else(|| missing("inverse image"))?;
        report.record(
            "forward then inverse is identity",
            at.clone(),
            holds(|| Ok((bwd.mul(&fwd)?, Matrix::identity(f, fwd.cols())))),
        );
        report.record(
            "inverse then forward is identity",
            at.clone(),
            holds(|| Ok((fwd.mul(&bwd)?, Matrix::identity(f, basis.cols())))),
        );
        let mu_v = id_v.kron(h.mul(a))?;
        let vbb = id_v.kron(&bb.kron(&bb)?)?;
        report.record(
            "module map",
            at,
            holds(|| {
                Ok((
                    q_amb.mul(&mu_v)?.mul(&vbb)?,
                    mu_v.mul(&q_amb.kron(&ia)?)?.mul(&vbb)?,
                ))
            }),
        );
        forward.push(fwd);
        backward.push(bwd);
    }
    Ok(IsoWitness {
        forward,
        backward,
        report,
    })
}
