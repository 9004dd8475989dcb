use crate::error::{Error, Result};
use crate::linalg::{complement_basis, Matrix, Scalar, Subspace};
use crate::report::Report;
use crate::structures::{names, HopfPiCoalgebra, PiCoalgebra};

pub(crate) fn check_family(c: &PiCoalgebra, v: &[Subspace], what: &str) -> Result<()> {
    let g = c.group();
    if v.len() != g.order() {
        return Err(Error::Shape(format!(
            "{what}: {} subspaces for a group of order {}",
            v.len(),
            g.order()
        )));
    }
    for a in g.elements() {
        if v[a].ambient() != c.dim(a) {
            return Err(Error::Shape(format!(
                "{what} at {} lives in dimension {}, expected {}",
                g.name(a),
                v[a].ambient(),
                c.dim(a)
            )));
        }
        if v[a].field() != c.field() {
            return Err(Error::FieldMismatch(c.field(), v[a].field()));
        }
    }
    Ok(())
}

/// Whether every column of `m` lies in `s`.
pub(crate) fn columns_in(s: &Subspace, m: &Matrix) -> bool {
    (0..m.cols()).all(|j| s.contains(&m.column(j)))
}

/// `Δ(V_{ab}) ⊆ V_a ⊗ C_b + C_a ⊗ V_b` for all pairs and `ε(V_1) = 0`.
pub fn check_pi_coideal(c: &PiCoalgebra, v: &[Subspace]) -> Result<Report> {
    check_family(c, v, "coideal")?;
    let g = c.group();
    let mut report = Report::new("pi-coideal");
    for (a, b) in g.pairs() {
        let left = v[a].basis_matrix().kron(&c.identity(b))?;
        let right = c.identity(a).kron(&v[b].basis_matrix())?;
        let target = Subspace::span_columns(&Matrix::hstack(&[&left, &right])?);
        let img = c.delta(a, b).mul(&v[g.mul(a, b)].basis_matrix())?;
        report.record(
            "coideal comultiplication",
            names(g, &[a, b]),
            columns_in(&target, &img),
        );
    }
    let e = c.counit().mul(&v[0].basis_matrix())?;
    report.record("annihilated by counit", vec![], e.is_zero());
    Ok(report)
}

/// A coideal that is also a two-sided ideal in each component and stable
/// under the antipodes. Left and right ideal properties are reported
/// separately so one-sided ideals are visible.
pub fn check_hopf_coideal(h: &HopfPiCoalgebra, v: &[Subspace]) -> Result<Report> {
    let mut report = check_pi_coideal(h.coalgebra(), v)?;
    report.subject = "Hopf pi-coideal".to_string();
    let g = h.group();
    for a in g.elements() {
        let at = names(g, &[a]);
        let basis = v[a].basis_matrix();
        let left = h.mul(a).mul(&h.identity(a).kron(&basis)?)?;
        let right = h.mul(a).mul(&basis.kron(&h.identity(a))?)?;
        report.record("left ideal", at.clone(), columns_in(&v[a], &left));
        report.record("right ideal", at.clone(), columns_in(&v[a], &right));
        let s = h.antipode(a).mul(&basis)?;
        report.record("antipode stable", at, columns_in(&v[g.inv(a)], &s));
    }
    Ok(report)
}

/// `x H`: the right ideal generated by `x` in component `a`.
pub fn principal_right_ideal(h: &HopfPiCoalgebra, a: usize, x: &Matrix) -> Result<Subspace> {
    Ok(Subspace::span_columns(&h.left_mul_by(a, x)?))
}

/// `H x`: the left ideal generated by `x` in component `a`.
pub fn principal_left_ideal(h: &HopfPiCoalgebra, a: usize, x: &Matrix) -> Result<Subspace> {
    Ok(Subspace::span_columns(&h.right_mul_by(a, x)?))
}

/// The projection along `v` onto the span of the standard basis vectors at
/// the non-pivot positions of `v`, in coordinates of that complement.
pub fn complement_projection(v: &Subspace) -> Matrix {
    let f = v.field();
    let free = v.non_pivots();
    let mut position = vec![None; v.ambient()];
    for (j, &i) in free.iter().enumerate() {
        position[i] = Some(j);
    }
    let mut sigma = Matrix::zeros(f, free.len(), v.ambient());
    for (j, &i) in free.iter().enumerate() {
        sigma.set(j, i, Scalar::one(f));
    }
    // e_p = b_r - (b_r off the pivots), so e_p maps to minus that remainder
    let rows = v.basis_rows();
    for (r, &p) in v.pivots().iter().enumerate() {
        for (i, s) in rows.row(r).iter().enumerate() {
            if let Some(j) = position[i] {
                sigma.set(j, p, -s);
            }
        }
    }
    sigma
}

/// The complement basis used as a lift of the quotient.
pub fn complement_lift(v: &Subspace) -> Matrix {
    complement_basis(v)
}
