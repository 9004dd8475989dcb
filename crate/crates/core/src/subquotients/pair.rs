use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{invert, pair_tensor_coords, rank, Matrix, Subspace};
use crate::report::Report;
use crate::structures::{
    expect_shape, holds, names, verify_pi_coalgebra, HopfPiCoalgebra, PiCoalgebra,
};

use super::coideal::{check_family, check_hopf_coideal, columns_in};

/// A Hopf family `H` with a quotient-like target `C` and surjections
/// `sigma[a]: H_a -> C_a`. `C` may carry its own Hopf structure (the
/// subcoalgebra case) and the pair may carry left actions
/// `omega[a]: H_a ⊗ C_a -> C_a` (the coisotropic case).
#[derive(Clone, Debug)]
pub struct SubgroupPair {
    pub hopf: Arc<HopfPiCoalgebra>,
    pub quotient: Arc<PiCoalgebra>,
    pub quotient_hopf: Option<Arc<HopfPiCoalgebra>>,
    pub sigma: Vec<Matrix>,
    pub omega: Option<Vec<Matrix>>,
}

impl SubgroupPair {
    pub fn new(
        hopf: Arc<HopfPiCoalgebra>,
        quotient: Arc<PiCoalgebra>,
        sigma: Vec<Matrix>,
    ) -> Result<Self> {
        let g = hopf.group().clone();
        if quotient.group().as_ref() != g.as_ref() {
            return Err(Error::InvalidArgument("pair over different groups".into()));
        }
        if sigma.len() != g.order() {
            return Err(Error::Shape("one projection per element required".into()));
        }
        for a in g.elements() {
            expect_shape(
                &sigma[a],
                (quotient.dim(a), hopf.dim(a)),
                hopf.field(),
                || format!("projection at {}", g.name(a)),
            )?;
        }
        Ok(SubgroupPair {
            hopf,
            quotient,
            quotient_hopf: None,
            sigma,
            omega: None,
        })
    }

    /// A pair whose target is itself a Hopf family.
    pub fn with_hopf_quotient(
        hopf: Arc<HopfPiCoalgebra>,
        quotient: Arc<HopfPiCoalgebra>,
        sigma: Vec<Matrix>,
    ) -> Result<Self> {
        let mut p = Self::new(hopf, quotient.coalgebra().clone(), sigma)?;
        p.quotient_hopf = Some(quotient);
        Ok(p)
    }

    pub fn with_omega(mut self, omega: Vec<Matrix>) -> Result<Self> {
        let g = self.hopf.group().clone();
        if omega.len() != g.order() {
            return Err(Error::Shape("one action per element required".into()));
        }
        for a in g.elements() {
            let (n, c) = (self.hopf.dim(a), self.quotient.dim(a));
            expect_shape(&omega[a], (c, n * c), self.hopf.field(), || {
                format!("action at {}", g.name(a))
            })?;
        }
        self.omega = Some(omega);
        Ok(self)
    }

    pub fn group(&self) -> &Arc<crate::GroupTable> {
        self.hopf.group()
    }

    /// `L(a, b) = (σ_a ⊗ I)Δ(a, b): H_{ab} -> C_a ⊗ H_b`.
    pub fn l_map(&self, a: usize, b: usize) -> Result<Matrix> {
        Matrix::kron_apply(
            &self.sigma[a],
            &self.hopf.identity(b),
            self.hopf.delta(a, b),
        )
    }

    /// `σ_a(1)` as a column in `C_a`.
    pub fn unit_image(&self, a: usize) -> Result<Matrix> {
        self.sigma[a].mul(self.hopf.unit(a))
    }

    pub fn require_hopf_quotient(&self) -> Result<&Arc<HopfPiCoalgebra>> {
        self.quotient_hopf.as_ref().ok_or_else(|| {
            Error::precondition("the pair has no Hopf structure on its target", None)
        })
    }

    pub fn require_omega(&self) -> Result<&Vec<Matrix>> {
        self.omega
            .as_ref()
            .ok_or_else(|| Error::precondition("the pair has no module action", None))
    }
}

/// Subalgebras closed under comultiplication and antipodes.
pub fn check_subhopf(h: &HopfPiCoalgebra, sub: &[Subspace]) -> Result<Report> {
    check_family(h.coalgebra(), sub, "sub-Hopf family")?;
    let g = h.group();
    let mut r = Report::new("Hopf pi-subcoalgebra family");
    for a in g.elements() {
        let at = names(g, &[a]);
        let b = sub[a].basis_matrix();
        r.record(
            "contains unit",
            at.clone(),
            sub[a].contains(&h.unit(a).column(0)),
        );
        r.record(
            "closed under multiplication",
            at.clone(),
            columns_in(&sub[a], &h.mul(a).mul(&b.kron(&b)?)?),
        );
        r.record(
            "antipode stable",
            at,
            columns_in(&sub[g.inv(a)], &h.antipode(a).mul(&b)?),
        );
    }
    for (a, c) in g.pairs() {
        let img = h.delta(a, c).mul(&sub[g.mul(a, c)].basis_matrix())?;
        r.record(
            "closed under comultiplication",
            names(g, &[a, c]),
            pair_tensor_coords(&sub[a], &sub[c], &img).is_some(),
        );
    }
    Ok(r)
}

/// A sub-Hopf family `A` with a Hopf coideal complement `I`.
pub fn check_isolated(h: &HopfPiCoalgebra, a: &[Subspace], i: &[Subspace]) -> Result<Report> {
    let mut r = check_subhopf(h, a)?;
    r.extend(check_hopf_coideal(h, i)?);
    r.subject = "isolated pair".to_string();
    let g = h.group();
    for x in g.elements() {
        let direct = a[x].dim() + i[x].dim() == h.dim(x) && a[x].sum(&i[x]).is_full();
        r.record("direct sum decomposition", names(g, &[x]), direct);
    }
    Ok(r)
}

/// The sub-Hopf family written in the echelon coordinates of its subspaces.
pub fn sub_hopf_structure(h: &HopfPiCoalgebra, sub: &[Subspace]) -> Result<HopfPiCoalgebra> {
    let report = check_subhopf(h, sub)?;
    if !report.passed() {
        return Err(Error::precondition(
            format!("not a sub-Hopf family: {:?}", report.failing_diagrams()),
            None,
        ));
    }
    let g = h.group().clone();
    let missing = |what: &str| Error::NotContained {
        what: what.to_string(),
    };
    let mut delta = Vec::new();
    for (a, b) in g.pairs() {
        let img = h.delta(a, b).mul(&sub[g.mul(a, b)].basis_matrix())?;
        delta.push(
            pair_tensor_coords(&sub[a], &sub[b], &img)
                .ok_or_else(|| missing("comultiplication"))?,
        );
    }
    let counit = h.counit().mul(&sub[0].basis_matrix())?;
    let dims = sub.iter().map(Subspace::dim).collect();
    let c = PiCoalgebra::new(g.clone(), h.field(), dims, delta, counit)?;
    let mut mul = Vec::new();
    let mut unit = Vec::new();
    let mut antipode = Vec::new();
    for a in g.elements() {
        let b = sub[a].basis_matrix();
        mul.push(
            sub[a]
                .coords_of_columns(&h.mul(a).mul(&b.kron(&b)?)?)
                .ok_or_else(|| missing("product"))?,
        );
        unit.push(
            sub[a]
                .coords_of_columns(h.unit(a))
                .ok_or_else(|| missing("unit"))?,
        );
        antipode.push(
            sub[g.inv(a)]
                .coords_of_columns(&h.antipode(a).mul(&b)?)
                .ok_or_else(|| missing("antipode"))?,
        );
    }
    HopfPiCoalgebra::new(Arc::new(c), mul, unit, antipode)
}

/// Surjective algebra maps intertwining comultiplication, counit and antipode.
pub fn check_subcoalgebra_pair(pair: &SubgroupPair) -> Result<Report> {
    let c = pair.require_hopf_quotient()?;
    let h = &pair.hopf;
    let s = &pair.sigma;
    let g = h.group();
    let mut r = Report::new("Hopf pi-subcoalgebra pair");
    for a in g.elements() {
        let at = names(g, &[a]);
        r.record("projection surjective", at.clone(), rank(&s[a]) == c.dim(a));
        r.record(
            "multiplicative",
            at.clone(),
            holds(|| Ok((s[a].mul(h.mul(a))?, c.mul(a).mul(&s[a].kron(&s[a])?)?))),
        );
        r.record(
            "unital",
            at.clone(),
            holds(|| Ok((s[a].mul(h.unit(a))?, c.unit(a).clone()))),
        );
        r.record(
            "intertwines antipode",
            at,
            holds(|| Ok((c.antipode(a).mul(&s[a])?, s[g.inv(a)].mul(h.antipode(a))?))),
        );
    }
    for (a, b) in g.pairs() {
        let ok = holds(|| {
            Ok((
                c.delta(a, b).mul(&s[g.mul(a, b)])?,
                s[a].kron(&s[b])?.mul(h.delta(a, b))?,
            ))
        });
        r.record("intertwines comultiplication", names(g, &[a, b]), ok);
    }
    r.record(
        "intertwines counit",
        vec![],
        holds(|| Ok((c.counit().mul(&s[0])?, h.counit().clone()))),
    );
    Ok(r)
}

/// Equips a subcoalgebra pair with the actions `μ^C(σ ⊗ I)`.
pub fn coisotropic_from_subcoalgebra(pair: &SubgroupPair) -> Result<SubgroupPair> {
    let c = pair.require_hopf_quotient()?.clone();
    let g = pair.group().clone();
    let omega = g
        .elements()
        .map(|a| c.mul(a).mul(&pair.sigma[a].kron(&c.identity(a))?))
        .collect::<Result<Vec<_>>>()?;
    pair.clone().with_omega(omega)
}

/// Module axioms for the actions, `σ` a surjective module map, and `σ`
/// intertwining comultiplication and counit.
pub fn check_coisotropic(pair: &SubgroupPair) -> Result<Report> {
    let omega = pair.require_omega()?;
    let h = &pair.hopf;
    let c = &pair.quotient;
    let s = &pair.sigma;
    let g = h.group();
    let mut r = verify_pi_coalgebra(c);
    r.subject = "coisotropic pair".to_string();
    for a in g.elements() {
        let at = names(g, &[a]);
        let w = &omega[a];
        let (ih, ic) = (h.identity(a), c.identity(a));
        r.record(
            "action associativity",
            at.clone(),
            holds(|| Ok((w.mul(&ih.kron(w)?)?, w.mul(&h.mul(a).kron(&ic)?)?))),
        );
        r.record(
            "action unit",
            at.clone(),
            holds(|| Ok((w.mul(&h.unit(a).kron(&ic)?)?, ic.clone()))),
        );
        r.record("projection surjective", at.clone(), rank(&s[a]) == c.dim(a));
        r.record(
            "projection is a module map",
            at,
            holds(|| Ok((s[a].mul(h.mul(a))?, w.mul(&ih.kron(&s[a])?)?))),
        );
    }
    for (a, b) in g.pairs() {
        let ok = holds(|| {
            Ok((
                c.delta(a, b).mul(&s[g.mul(a, b)])?,
                s[a].kron(&s[b])?.mul(h.delta(a, b))?,
            ))
        });
        r.record("intertwines comultiplication", names(g, &[a, b]), ok);
    }
    r.record(
        "intertwines counit",
        vec![],
        holds(|| Ok((c.counit().mul(&s[0])?, h.counit().clone()))),
    );
    Ok(r)
}

/// The pair attached to a decomposition `H = A ⊕ I`: `σ` projects onto `A`
/// along `I` and `H` acts on `A` by `(m + i) ⊗ a -> m a`.
pub fn isolated_to_coisotropic(
    h: &Arc<HopfPiCoalgebra>,
    a: &[Subspace],
    i: &[Subspace],
) -> Result<SubgroupPair> {
    let report = check_isolated(h, a, i)?;
    if !report.passed() {
        return Err(Error::precondition(
            format!("not an isolated pair: {:?}", report.failing_diagrams()),
            None,
        ));
    }
    let sub = Arc::new(sub_hopf_structure(h, a)?);
    let g = h.group().clone();
    let mut sigma = Vec::new();
    let mut omega = Vec::new();
    for x in g.elements() {
        let ba = a[x].basis_matrix();
        let both = Matrix::hstack(&[&ba, &i[x].basis_matrix()])?;
        let head: Vec<usize> = (0..a[x].dim()).collect();
        let s = invert(&both)?.select_rows(&head);
        let prod = h.mul(x).mul(&ba.mul(&s)?.kron(&ba)?)?;
        omega.push(
            a[x].coords_of_columns(&prod)
                .ok_or_else(|| Error::NotContained {
                    what: "action".into(),
                })?,
        );
        sigma.push(s);
    }
    SubgroupPair::with_hopf_quotient(h.clone(), sub, sigma)?.with_omega(omega)
}
