use std::sync::Arc;

use hopfpi::coinduction::{
    coind_direct_sum_iso, coind_equivalence, coinduce, coinduced_subfamily,
    verify_basis_independence, CoinducedComodule, DualBases,
};
use hopfpi::comodules::{is_simple, verify_comodule, PiComodule, SubcomoduleFamily};
use hopfpi::induction::{
    check_cosection, check_identity_coaction, direct_sum_coaction, homogeneous_space, induce,
    induce_direct_sum_iso, induced_equivalence, induced_subfamily, iso_cb, iso_cg, iso_vb,
    module_action, verify_l_algebra_map, verify_l_identities, verify_section_identities, Flavor,
    InducedComodule, IsoWitness, Side,
};
use hopfpi::structures::{
    mirror, verify_action, verify_classical, verify_hopf, verify_identity_component_relations,
    verify_pi_coalgebra,
};
use hopfpi::subquotients::examples::left_multiplication_action;
use hopfpi::subquotients::{
    check_coalgebra_map, check_coisotropic, check_hopf_coideal, check_pi_coideal,
    check_section_coisotropic, check_subcoalgebra_pair, coisotropic_from_subcoalgebra,
    quotient_coalgebra, quotient_hopf, SectionFamily, SubgroupPair,
};
use hopfpi::{Error, Matrix, Report, Subspace};
use serde_json::json;

use crate::error::CliError;
use crate::model::{emit, parse_matrix, Model, Named};
use crate::output::{self, Outcome};

type Res<T> = std::result::Result<T, CliError>;

pub fn verify(m: &Model) -> Res<Outcome> {
    let mut o = Outcome::default();
    for (name, a) in &m.classical {
        o.report(name, verify_classical(a)?);
    }
    for (name, act) in &m.actions {
        o.report(name, verify_action(&m.classical[&act.parent], &act.value));
    }
    for (name, c) in &m.coalgebras {
        o.report(name, verify_pi_coalgebra(c));
    }
    for (name, h) in &m.hopf {
        o.report(name, verify_pi_coalgebra(h.coalgebra()));
        o.report(name, verify_hopf(h));
        o.report(name, verify_identity_component_relations(h));
    }
    for (name, p) in &m.pairs {
        let pair = &p.value;
        o.report(
            name,
            check_coalgebra_map(pair.hopf.coalgebra(), &pair.quotient, &pair.sigma),
        );
        if pair.quotient_hopf.is_some() {
            o.report(name, check_subcoalgebra_pair(pair)?);
            o.report(name, verify_l_algebra_map(pair)?);
        }
        if pair.omega.is_some() {
            o.report(name, check_coisotropic(pair)?);
            o.report(name, verify_l_identities(pair)?);
        }
    }
    for (name, c) in &m.coactions {
        o.report(name, check_identity_coaction(m.pair(&c.parent)?, &c.value)?);
    }
    for (name, c) in &m.comodules {
        o.report(name, verify_comodule(&c.value));
    }
    for name in m.sections.keys() {
        let (pair, s) = m.section(name)?;
        match s.family(pair)? {
            None => {
                let mut r = Report::new("section");
                r.record("convolution invertible", vec![], false);
                o.report(name, r);
            }
            Some(s) if pair.quotient_hopf.is_some() => {
                let b = homogeneous_space(pair, Flavor::B)?;
                o.report(name, verify_section_identities(pair, &s, &b)?);
            }
            Some(s) => o.report(name, check_section_coisotropic(pair, &s)?),
        }
    }
    for (name, c) in &m.cosections {
        o.report(name, check_cosection(m.hopf(&c.parent)?, &c.value)?);
    }
    Ok(o)
}

pub struct QuotientArgs<'a> {
    pub hopf: &'a str,
    pub coideal: &'a str,
    pub hopf_quotient: bool,
    pub with_action: bool,
    pub name: &'a str,
    pub pair: &'a str,
}

pub fn quotient(m: &Model, args: &QuotientArgs) -> Res<Outcome> {
    let mut o = Outcome::default();
    let h = m.hopf(args.hopf)?.clone();
    let v = &m
        .subspaces
        .get(args.coideal)
        .ok_or_else(|| CliError::Usage(format!("no subspace family named {:?}", args.coideal)))?
        .value;
    let mut out = m.clone();
    let pair = if args.hopf_quotient {
        o.report(args.coideal, check_hopf_coideal(&h, v)?);
        let q = quotient_hopf(&h, v)?;
        let c = Arc::new(q.structure);
        out.hopf.insert(args.name.to_string(), c.clone());
        coisotropic_from_subcoalgebra(&SubgroupPair::with_hopf_quotient(h.clone(), c, q.sigma)?)?
    } else {
        o.report(args.coideal, check_pi_coideal(h.coalgebra(), v)?);
        let q = quotient_coalgebra(h.coalgebra(), v)?;
        let c = Arc::new(q.structure);
        out.coalgebras.insert(args.name.to_string(), c.clone());
        let pair = SubgroupPair::new(h.clone(), c, q.sigma.clone())?;
        if args.with_action {
            pair.with_omega(left_multiplication_action(&h, &q.sigma, &q.lift)?)?
        } else {
            pair
        }
    };
    o.report(args.name, verify_pi_coalgebra(&pair.quotient));
    o.report(
        args.pair,
        check_coalgebra_map(h.coalgebra(), &pair.quotient, &pair.sigma),
    );
    o.set("dims", output::dims(h.group(), pair.quotient.dims()));
    out.pairs.insert(
        args.pair.to_string(),
        Named {
            parent: args.hopf.to_string(),
            value: pair,
        },
    );
    out.pair_targets
        .insert(args.pair.to_string(), args.name.to_string());
    o.structure = Some(emit(&out));
    Ok(o)
}

fn induced_results(o: &mut Outcome, ind: &InducedComodule) {
    let g = ind.hopf.group();
    o.set("dims", output::dims(g, &ind.dims()));
    o.set("bases", output::subspaces(g, &ind.spaces));
}

pub fn induce_cmd(m: &Model, coaction: &str) -> Res<Outcome> {
    let mut o = Outcome::default();
    let (pair, rho) = m.coaction(coaction)?;
    let ind = induce(pair, rho)?;
    o.report("induced", verify_comodule(&ind.comodule));
    // B needs the unit of the target; G only needs the projection of 1
    let flavor = if pair.quotient_hopf.is_some() {
        Flavor::B
    } else {
        Flavor::G
    };
    let x = homogeneous_space(pair, flavor)?;
    for side in [Side::Left, Side::Right] {
        let act = module_action(&ind, &x, side)?;
        o.report(if flavor == Flavor::B { "B" } else { "G" }, act.report);
    }
    induced_results(&mut o, &ind);
    Ok(o)
}

pub fn coinduce_cmd(m: &Model, coaction: &str, dual_seeds: u64) -> Res<Outcome> {
    let mut o = Outcome::default();
    let (pair, rho) = m.coaction(coaction)?;
    let w = coinduce(pair, rho)?;
    o.report("coinduced", verify_comodule(&w.comodule));
    let choices = (0..dual_seeds)
        .map(|s| DualBases::random(&w.hopf, s))
        .collect::<hopfpi::Result<Vec<_>>>()?;
    o.report("coinduced", verify_basis_independence(&w, &choices)?);
    let g = w.hopf.group();
    o.set("dims", output::dims(g, &w.dims()));
    o.set("bases", output::subspaces(g, &w.spaces));
    Ok(o)
}

pub enum SimplicityTarget<'a> {
    Comodule(&'a str),
    Induced(&'a str),
    Coinduced(&'a str),
}

pub fn simplicity(m: &Model, target: SimplicityTarget, seed_cap: u64) -> Res<Outcome> {
    let mut o = Outcome::default();
    let comodule: PiComodule = match target {
        SimplicityTarget::Comodule(name) => m.comodule(name)?.clone(),
        SimplicityTarget::Induced(name) => {
            let (pair, rho) = m.coaction(name)?;
            induce(pair, rho)?.comodule
        }
        SimplicityTarget::Coinduced(name) => {
            let (pair, rho) = m.coaction(name)?;
            coinduce(pair, rho)?.comodule
        }
    };
    o.report("", verify_comodule(&comodule));
    let v = is_simple(&comodule, seed_cap)?;
    let g = comodule.group();
    o.set("dims", output::dims(g, comodule.dims()));
    o.set("verdict", output::verdict(g, &v));
    Ok(o)
}

fn section_family(pair: &SubgroupPair, name: &str, m: &Model) -> Res<SectionFamily> {
    let (_, s) = m.section(name)?;
    s.family(pair)?.ok_or_else(|| {
        CliError::Lib(Error::Precondition {
            what: format!("section {name} is not convolution invertible"),
            residual: None,
        })
    })
}

fn iso_results(o: &mut Outcome, pair: &SubgroupPair, w: IsoWitness) {
    let g = pair.group();
    o.set("forward", output::family(g, &w.forward));
    o.set("backward", output::family(g, &w.backward));
    o.report("", w.report);
}

pub fn iso_hg(m: &Model, section: &str, flavor: Flavor) -> Res<Outcome> {
    let mut o = Outcome::default();
    let (pair, _) = m.section(section)?;
    let s = section_family(pair, section, m)?;
    if pair.quotient_hopf.is_some() {
        let b = homogeneous_space(pair, Flavor::B)?;
        o.report(section, verify_section_identities(pair, &s, &b)?);
    }
    let x = homogeneous_space(pair, flavor)?;
    o.set("homogeneous_dims", output::dims(pair.group(), &x.dims()));
    let w = match flavor {
        Flavor::B => iso_cb(pair, &s, &x)?,
        Flavor::G => iso_cg(pair, &s, &x)?,
    };
    iso_results(&mut o, pair, w);
    Ok(o)
}

pub fn iso_vb_cmd(m: &Model, section: &str, cosection: &str, coaction: &str) -> Res<Outcome> {
    let mut o = Outcome::default();
    let (pair, _) = m.section(section)?;
    let s = section_family(pair, section, m)?;
    let eta = &m.cosection(cosection)?.value;
    let (cpair, rho) = m.coaction(coaction)?;
    if m.coactions[coaction].parent != m.sections[section].parent {
        return Err(CliError::Usage(format!(
            "{coaction} and {section} belong to different pairs"
        )));
    }
    let ind = induce(cpair, rho)?;
    let b = homogeneous_space(pair, Flavor::B)?;
    o.set("induced_dims", output::dims(pair.group(), &ind.dims()));
    o.set("homogeneous_dims", output::dims(pair.group(), &b.dims()));
    let w = iso_vb(pair, &s, eta, &b, &ind)?;
    iso_results(&mut o, pair, w);
    Ok(o)
}

pub fn mirror_cmd(m: &Model, classical: &str, action: &str, name: &str) -> Res<Outcome> {
    let mut o = Outcome::default();
    let a = m
        .classical
        .get(classical)
        .ok_or_else(|| CliError::Usage(format!("no classical algebra named {classical:?}")))?;
    let act = m
        .actions
        .get(action)
        .ok_or_else(|| CliError::Usage(format!("no action named {action:?}")))?;
    o.report(classical, verify_classical(a)?);
    o.report(action, verify_action(a, &act.value));
    let h = mirror(a, &act.value)?;
    o.report(name, verify_pi_coalgebra(h.coalgebra()));
    o.report(name, verify_hopf(&h));
    o.set("dims", output::dims(h.group(), h.dims()));
    let mut out = m.clone();
    out.hopf.insert(name.to_string(), Arc::new(h));
    o.structure = Some(emit(&out));
    Ok(o)
}

fn same_pair(m: &Model, first: &str, second: &str) -> Res<()> {
    m.coaction(first)?;
    m.coaction(second)?;
    if m.coactions[first].parent != m.coactions[second].parent {
        return Err(CliError::Usage(format!(
            "{first} and {second} belong to different pairs"
        )));
    }
    Ok(())
}

pub fn equiv(m: &Model, from: &str, to: &str, map: &str, coinduced: bool) -> Res<Outcome> {
    same_pair(m, from, to)?;
    let mut o = Outcome::default();
    let (pair, rho) = m.coaction(from)?;
    let (_, psi) = m.coaction(to)?;
    let f1 = parse_matrix(m.field, map, psi.cols(), rho.cols())?;
    let g = pair.group();
    let (maps, report) = if coinduced {
        coind_equivalence(&f1, &coinduce(pair, rho)?, &coinduce(pair, psi)?)?
    } else {
        induced_equivalence(&f1, &induce(pair, rho)?, &induce(pair, psi)?)?
    };
    o.report("", report);
    o.set("maps", output::family(g, &maps));
    Ok(o)
}

fn block(f: hopfpi::FieldSpec, dv: usize, dw: usize, first: bool) -> Subspace {
    let idx: Vec<usize> = if first {
        (0..dv).collect()
    } else {
        (dv..dv + dw).collect()
    };
    Subspace::span_columns(&Matrix::identity(f, dv + dw).select_cols(&idx))
}

/// Which summand, if any, contains a witness family.
fn witness_block(
    witness: Option<&SubcomoduleFamily>,
    blocks: [SubcomoduleFamily; 2],
) -> serde_json::Value {
    let Some(w) = witness else { return json!(null) };
    let [a, b] = blocks;
    if a.contains(w) {
        json!("first")
    } else if b.contains(w) {
        json!("second")
    } else {
        json!("neither")
    }
}

fn additivity(v: &[usize], w: &[usize], sum: &[usize], g: &hopfpi::GroupTable) -> Report {
    let mut r = Report::new("dimension additivity");
    for a in g.elements() {
        r.record(
            "sum of dimensions",
            vec![g.name(a).to_string()],
            v[a] + w[a] == sum[a],
        );
    }
    r
}

pub fn direct_sum_cmd(m: &Model, first: &str, second: &str, seed_cap: u64) -> Res<Outcome> {
    same_pair(m, first, second)?;
    let mut o = Outcome::default();
    let (pair, rho) = m.coaction(first)?;
    let (_, psi) = m.coaction(second)?;
    let g = pair.group();
    let f = pair.hopf.field();
    let sum_rho = direct_sum_coaction(pair, rho, psi)?;
    let (dv, dw) = (rho.cols(), psi.cols());

    let (iv, iw, isum) = (
        induce(pair, rho)?,
        induce(pair, psi)?,
        induce(pair, &sum_rho)?,
    );
    let (maps, report) = induce_direct_sum_iso(&iv, &iw, &isum)?;
    o.report("induced", report);
    o.report(
        "induced",
        additivity(&iv.dims(), &iw.dims(), &isum.dims(), g),
    );
    let verdict = is_simple(&isum.comodule, seed_cap)?;
    let blocks = [
        induced_subfamily(&isum, &block(f, dv, dw, true))?,
        induced_subfamily(&isum, &block(f, dv, dw, false))?,
    ];
    let induced = json!({
        "dims": output::dims(g, &isum.dims()),
        "iso": output::family(g, &maps),
        "simplicity": output::verdict(g, &verdict),
        "witness_block": witness_block(verdict.witness.as_ref().map(|w| &w.family), blocks),
    });
    o.set("induced", induced);

    let (cv, cw, csum): (CoinducedComodule, CoinducedComodule, CoinducedComodule) = (
        coinduce(pair, rho)?,
        coinduce(pair, psi)?,
        coinduce(pair, &sum_rho)?,
    );
    let (maps, report) = coind_direct_sum_iso(&cv, &cw, &csum)?;
    o.report("coinduced", report);
    o.report(
        "coinduced",
        additivity(&cv.dims(), &cw.dims(), &csum.dims(), g),
    );
    let verdict = is_simple(&csum.comodule, seed_cap)?;
    // maps vanishing on the second summand live on the first, and conversely
    let blocks = [
        coinduced_subfamily(&csum, &block(f, dv, dw, false))?,
        coinduced_subfamily(&csum, &block(f, dv, dw, true))?,
    ];
    let coinduced = json!({
        "dims": output::dims(g, &csum.dims()),
        "iso": output::family(g, &maps),
        "simplicity": output::verdict(g, &verdict),
        "witness_block": witness_block(verdict.witness.as_ref().map(|w| &w.family), blocks),
    });
    o.set("coinduced", coinduced);
    Ok(o)
}
