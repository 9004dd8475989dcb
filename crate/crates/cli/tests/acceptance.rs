//! Acceptance suite: one line per criterion, all comparisons exact.
//!
//! Runs without the libtest harness so the lines always reach stdout.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use hopfpi::coinduction::{
    coind_direct_sum_iso, coinduce, coinduced_subfamily, pipeline_from_isolated,
    verify_basis_independence, DualBases,
};
use hopfpi::comodules::{is_simple, verify_comodule, Exactness, PiComodule, DEFAULT_SEED_CAP};
use hopfpi::induction::{
    direct_sum_coaction, homogeneous_space, induce, induce_direct_sum_iso, induced_equivalence,
    induced_subfamily, iso_cb, iso_cg, module_action, verify_section_identities, Flavor, Side,
};
use hopfpi::linalg::{left_tensor_coords, rank};
use hopfpi::structures::builtin::{
    inversion_family, taft_grouplikes, taft_mirror, taft_nilpotent_ideal, trivial_pi, TaftParams,
};
use hopfpi::structures::{
    verify_hopf, verify_identity_component_relations, verify_pi_coalgebra, HopfPiCoalgebra,
};
use hopfpi::subquotients::examples::{coset_section, group_algebra_pair, taft_right_quotient_pair};
use hopfpi::subquotients::{
    check_coalgebra_map, check_coisotropic, coisotropic_from_subcoalgebra, isolated_to_coisotropic,
    SubgroupPair,
};
use hopfpi::{Error, FieldSpec, Matrix, Report, Scalar, Subspace};

const F7: FieldSpec = FieldSpec::Prime(7);

/// Dimensions computed by the independent mod-7 elimination and
/// enumeration oracles in the core crate's tests, frozen here.
const TAFT_QUOTIENT_DIM: usize = 3;
const COSET_SUBGROUP_ORDER: usize = 3;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn passes(r: &Report) -> Result<(), String> {
    ensure(
        r.passed(),
        format!("{}: failing {:?}", r.subject, r.failing_diagrams()),
    )
}

fn lib<T>(r: hopfpi::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn full_verify(h: &HopfPiCoalgebra) -> Vec<Report> {
    vec![
        verify_pi_coalgebra(h.coalgebra()),
        verify_hopf(h),
        verify_identity_component_relations(h),
    ]
}

fn failing(h: &HopfPiCoalgebra) -> Vec<String> {
    let mut out: Vec<String> = full_verify(h)
        .iter()
        .flat_map(|r| r.failing_diagrams())
        .map(str::to_string)
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Adds one to a single entry.
fn bump(m: &Matrix, i: usize, j: usize) -> Matrix {
    let mut m = m.clone();
    let v = m.get(i, j) + &Scalar::one(m.field());
    m.set(i, j, v);
    m
}

enum Target {
    Mul(usize),
    Unit(usize),
    Antipode(usize),
    Delta(usize, usize),
    Counit,
}

fn perturb(h: &HopfPiCoalgebra, t: &Target, i: usize, j: usize) -> hopfpi::Result<HopfPiCoalgebra> {
    match *t {
        Target::Mul(a) => h.with_mul(a, bump(h.mul(a), i, j)),
        Target::Unit(a) => h.with_unit(a, bump(h.unit(a), i, j)),
        Target::Antipode(a) => h.with_antipode(a, bump(h.antipode(a), i, j)),
        Target::Delta(a, b) => {
            h.with_coalgebra(h.coalgebra().with_delta(a, b, bump(h.delta(a, b), i, j))?)
        }
        Target::Counit => h.with_coalgebra(h.coalgebra().with_counit(bump(h.counit(), i, j))?),
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let trivial = trivial_pi(FieldSpec::Rationals);
    let inversion = lib(inversion_family(3, FieldSpec::Rationals))?;
    let taft = lib(taft_mirror(3, 7, 2))?;
    for h in [&trivial, &inversion, &taft] {
        for r in full_verify(h) {
            passes(&r)?;
        }
    }
    let t = lib(TaftParams::new(3, 7, 2))?;
    let (one, g, x) = (t.index(0, 0), t.index(1, 0), t.index(0, 1));
    // (structure, map, row, column, a diagram that must fail)
    let cases: Vec<(&HopfPiCoalgebra, Target, usize, usize, &str)> = vec![
        (&trivial, Target::Mul(0), 0, 0, "left unit"),
        (&trivial, Target::Unit(0), 0, 0, "left unit"),
        (&trivial, Target::Delta(0, 0), 0, 0, "left counit"),
        (&trivial, Target::Counit, 0, 0, "left counit"),
        (&trivial, Target::Antipode(0), 0, 0, "left antipode"),
        // e_0 e_1 becomes 2 e_1 in the twisted component
        (&inversion, Target::Mul(1), 1, 1, "left unit"),
        (&inversion, Target::Unit(1), 1, 0, "left unit"),
        (&inversion, Target::Delta(0, 1), 0, 1, "left counit"),
        // e_0 picks up e_0 ⊗ e_1; scaling the diagonal entry would only
        // rescale a group-like, which stays coassociative
        (&inversion, Target::Delta(1, 1), 1, 0, "coassociativity"),
        (&inversion, Target::Counit, 0, 1, "left counit"),
        (&inversion, Target::Antipode(1), 0, 0, "left antipode"),
        // e_1 e_2 becomes 2 e_0, no longer group-like
        (
            &inversion,
            Target::Mul(0),
            0,
            5,
            "comultiplication multiplicative",
        ),
        (&taft, Target::Mul(1), 1, one * 9 + 1, "left unit"),
        (&taft, Target::Unit(2), 1, 0, "left unit"),
        (&taft, Target::Counit, 0, g, "left counit"),
        // S_x is used by the antipode law at x^2
        (&taft, Target::Antipode(1), one, g, "left antipode"),
        (&taft, Target::Delta(1, 2), 0, g, "coassociativity"),
        (&taft, Target::Delta(0, 1), one * 9 + one, g, "left counit"),
        (
            &taft,
            Target::Mul(0),
            one,
            g * 9 + x,
            "comultiplication multiplicative",
        ),
        (&taft, Target::Antipode(0), one, x, "right antipode"),
    ];
    for (k, (h, target, i, j, expected)) in cases.iter().enumerate() {
        let p = lib(perturb(h, target, *i, *j))?;
        let names = failing(&p);
        ensure(
            names.iter().any(|n| n == expected),
            format!("perturbation {k}: expected {expected:?}, failing {names:?}"),
        )?;
    }
    let elapsed = start.elapsed();
    ensure(
        elapsed < Duration::from_secs(5),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!(
        "3 structures verified, {} perturbations each caught by the named diagram, {elapsed:.2?}",
        cases.len()
    ))
}

fn criterion_2() -> Outcome {
    let pair = lib(taft_right_quotient_pair(3, 7, 2))?;
    passes(&verify_pi_coalgebra(&pair.quotient))?;
    let map = check_coalgebra_map(pair.hopf.coalgebra(), &pair.quotient, &pair.sigma);
    passes(&map)?;
    ensure(
        pair.quotient.dims() == [TAFT_QUOTIENT_DIM; 3],
        format!("dims {:?}", pair.quotient.dims()),
    )?;
    Ok(format!(
        "dims {:?}, projection intertwines comultiplication and counit ({} checks)",
        pair.quotient.dims(),
        map.checks.len()
    ))
}

fn criterion_3() -> Outcome {
    for h in [lib(inversion_family(6, F7))?, lib(taft_mirror(3, 7, 2))?] {
        let h = Arc::new(h);
        let ids = h.group().elements().map(|a| h.identity(a)).collect();
        let pair = lib(SubgroupPair::with_hopf_quotient(h.clone(), h.clone(), ids))?;
        passes(&lib(check_coisotropic(&lib(
            coisotropic_from_subcoalgebra(&pair),
        )?))?)?;
    }
    let pair = lib(group_algebra_pair(6, &[0, 2, 4], F7))?;
    let b = lib(homogeneous_space(&pair, Flavor::B))?;
    ensure(
        b.dims() == vec![COSET_SUBGROUP_ORDER; 2],
        format!("B dims {:?}", b.dims()),
    )?;
    Ok(format!("identity pairs coisotropic; B dims {:?}", b.dims()))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let pair = lib(group_algebra_pair(6, &[0, 2, 4], F7))?;
    let c = lib(pair.require_hopf_quotient())?.clone();
    let ind = lib(induce(&pair, c.unit(0)))?;
    ensure(
        ind.dims() == vec![COSET_SUBGROUP_ORDER; 2],
        format!("dims {:?}", ind.dims()),
    )?;
    let h = &pair.hopf;
    let g = h.group();
    for (a, b) in g.pairs() {
        let ab = g.mul(a, b);
        let image = lib(Matrix::identity(F7, ind.v_dim).kron(h.delta(a, b)))?;
        let image = lib(image.mul(&ind.spaces[ab].basis_matrix()))?;
        ensure(
            left_tensor_coords(&ind.spaces[a], h.dim(b), &image).is_some(),
            format!("containment at ({a}, {b})"),
        )?;
    }
    passes(&verify_comodule(&ind.comodule))?;
    let x = lib(homogeneous_space(&pair, Flavor::B))?;
    let act = lib(module_action(&ind, &x, Side::Right))?;
    passes(&act.report)?;
    ensure(act.maps.is_some(), "no action maps")?;
    let elapsed = start.elapsed();
    ensure(
        elapsed < Duration::from_secs(2),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!(
        "dims {:?}, coaction contained, B acts, {elapsed:.2?}",
        ind.dims()
    ))
}

fn inverse_pair(f: &[Matrix], b: &[Matrix]) -> Result<(), String> {
    for (x, y) in f.iter().zip(b) {
        ensure(
            lib(x.mul(y))?.is_identity() && lib(y.mul(x))?.is_identity(),
            "not mutually inverse",
        )?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    let pair = lib(group_algebra_pair(6, &[0, 2, 4], F7))?;
    let s = lib(coset_section(&pair))?;
    let b = lib(homogeneous_space(&pair, Flavor::B))?;
    let gs = lib(homogeneous_space(&pair, Flavor::G))?;
    let ids = lib(verify_section_identities(&pair, &s, &b))?;
    passes(&ids)?;
    let cb = lib(iso_cb(&pair, &s, &b))?;
    let cg = lib(iso_cg(&pair, &s, &gs))?;
    for w in [&cb, &cg] {
        passes(&w.report)?;
        inverse_pair(&w.forward, &w.backward)?;
    }
    let items: std::collections::BTreeSet<&str> =
        ids.checks.iter().map(|c| c.diagram.as_str()).collect();
    Ok(format!(
        "both isomorphisms invert exactly; section identities: {}",
        items.into_iter().collect::<Vec<_>>().join("; ")
    ))
}

fn criterion_6() -> Outcome {
    let mut lines = Vec::new();
    let gpair = lib(group_algebra_pair(6, &[0, 2, 4], F7))?;
    let grho = lib(gpair.require_hopf_quotient())?.unit(0).clone();
    let t = lib(TaftParams::new(3, 7, 2))?;
    let h = Arc::new(lib(taft_mirror(3, 7, 2))?);
    let order = h.group().order();
    let (a, i) = (
        vec![taft_grouplikes(t); order],
        vec![taft_nilpotent_ideal(t); order],
    );
    let rho = lib(lib(isolated_to_coisotropic(&h, &a, &i))?.unit_image(0))?;
    let (_, tind, tw) = lib(pipeline_from_isolated(&h, &a, &i, &rho))?;
    let qpair = lib(taft_right_quotient_pair(3, 7, 2))?;
    let qrho = lib(qpair.unit_image(0))?;
    let instances = [
        (
            "group algebra",
            lib(induce(&gpair, &grho))?,
            lib(coinduce(&gpair, &grho))?,
        ),
        ("taft isolated", tind, tw),
        (
            "taft quotient",
            lib(induce(&qpair, &qrho))?,
            lib(coinduce(&qpair, &qrho))?,
        ),
    ];
    for (name, ind, w) in instances {
        passes(&verify_comodule(&w.comodule))?;
        let choices = (0..3)
            .map(|s| DualBases::random(&w.hopf, s))
            .collect::<hopfpi::Result<Vec<_>>>();
        passes(&lib(verify_basis_independence(&w, &lib(choices)?))?)?;
        ensure(
            w.dims() == ind.dims(),
            format!("{name}: {:?} vs {:?}", w.dims(), ind.dims()),
        )?;
        lines.push(format!("{name} dims {:?}", w.dims()));
    }
    ensure(
        lines[0].ends_with(&format!("{:?}", vec![COSET_SUBGROUP_ORDER; 2])),
        "oracle dimension",
    )?;
    Ok(format!(
        "{}; coaction unchanged under 3 random dual bases",
        lines.join(", ")
    ))
}

/// The group algebra pair with the unit and the other group-like of the
/// two-dimensional quotient as one-dimensional coactions.
fn sum_instance() -> Result<(SubgroupPair, Matrix, Matrix), String> {
    let pair = lib(group_algebra_pair(6, &[0, 2, 4], F7))?;
    let rho = lib(pair.require_hopf_quotient())?.unit(0).clone();
    let psi = Matrix::unit_column(F7, 2, 1);
    Ok((pair, rho, psi))
}

fn bijective(maps: &[Matrix]) -> bool {
    maps.iter().all(|m| m.is_square() && rank(m) == m.rows())
}

fn criterion_7() -> Outcome {
    let (pair, rho, psi) = sum_instance()?;
    let c = pair.quotient.clone();
    let one = |col: &Matrix| PiComodule::one_dimensional(c.clone(), &vec![col.clone(); 2]);
    // one-dimensional comodules with different group-likes admit no nonzero map
    let intertwiners = lib(hopfpi::comodules::find_intertwiner_space(
        &lib(one(&rho))?,
        &lib(one(&psi))?,
    ))?;
    ensure(intertwiners.is_empty(), "the two coactions are equivalent")?;
    let (iv, iw) = (lib(induce(&pair, &rho))?, lib(induce(&pair, &psi))?);
    match induced_equivalence(&Matrix::from_ints(F7, &[&[1]]), &iv, &iw) {
        Err(Error::Precondition {
            residual: Some(r), ..
        }) if !r.is_zero() => {}
        other => {
            return Err(format!(
                "expected a refusal with residual, got {:?}",
                other.map(|x| x.1.passed())
            ))
        }
    }
    let (maps, report) = lib(induced_equivalence(
        &Matrix::from_ints(F7, &[&[3]]),
        &iv,
        &iv,
    ))?;
    passes(&report)?;
    ensure(bijective(&maps), "equivalence not bijective")?;

    let sum = lib(direct_sum_coaction(&pair, &rho, &psi))?;
    let isum = lib(induce(&pair, &sum))?;
    let (maps, report) = lib(induce_direct_sum_iso(&iv, &iw, &isum))?;
    passes(&report)?;
    ensure(bijective(&maps), "induced sum map not bijective")?;
    let (cv, cw, csum) = (
        lib(coinduce(&pair, &rho))?,
        lib(coinduce(&pair, &psi))?,
        lib(coinduce(&pair, &sum))?,
    );
    let (maps, report) = lib(coind_direct_sum_iso(&cv, &cw, &csum))?;
    passes(&report)?;
    ensure(bijective(&maps), "coinduced sum map not bijective")?;
    for a in 0..2 {
        ensure(
            iv.dims()[a] + iw.dims()[a] == isum.dims()[a],
            "induced dimensions not additive",
        )?;
        ensure(
            cv.dims()[a] + cw.dims()[a] == csum.dims()[a],
            "coinduced dimensions not additive",
        )?;
    }
    Ok(format!(
        "refused without intertwiner, scalar 3 accepted; sums {:?} = {:?} + {:?} (induced and coinduced)",
        isum.dims(),
        iv.dims(),
        iw.dims()
    ))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let pair = lib(taft_right_quotient_pair(3, 7, 2))?;
    let t = lib(TaftParams::new(3, 7, 2))?;
    let grouplike = pair
        .group()
        .elements()
        .map(|a| pair.unit_image(a))
        .collect::<hopfpi::Result<Vec<_>>>();
    let v = lib(PiComodule::one_dimensional(
        pair.quotient.clone(),
        &lib(grouplike)?,
    ))?;
    passes(&verify_comodule(&v))?;
    let vv = lib(is_simple(&v, DEFAULT_SEED_CAP))?;
    ensure(
        vv.simple && vv.exactness == Exactness::Exact && v.dims() == [1, 1, 1],
        "rho is not exactly simple",
    )?;

    let ind = lib(induce(&pair, &lib(pair.unit_image(0))?))?;
    let verdict = lib(is_simple(&ind.comodule, DEFAULT_SEED_CAP))?;
    ensure(
        !verdict.simple && verdict.exactness == Exactness::Exact,
        "Ind(rho) not exactly non-simple",
    )?;
    let w = verdict.witness.as_ref().ok_or("no witness")?;
    ensure(
        !w.family.is_zero() && !w.family.is_full(),
        "witness not proper",
    )?;
    // one-dimensional V, so Ind(rho)_a sits directly inside H_a
    let span = taft_grouplikes(t);
    for a in pair.group().elements() {
        let ind_a = &ind.spaces[a];
        ensure(
            ind_a.contains_subspace(&span) && span.contains_subspace(ind_a),
            "Ind is not the group-like span",
        )?;
        let inside = lib(ind_a
            .basis_matrix()
            .mul(&w.family.components[a].basis_matrix()))?;
        ensure(
            span.contains_subspace(&Subspace::span_columns(&inside)),
            "witness leaves the group-likes",
        )?;
    }
    let elapsed = start.elapsed();
    ensure(
        elapsed < Duration::from_secs(10),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!(
        "rho simple (exact, dims {:?}); Ind(rho) = group-like span, not simple (exact, witness dims {:?}, {} seeds), {elapsed:.2?}",
        v.dims(),
        w.family.dims(),
        verdict.seeds_tested
    ))
}

fn block(dv: usize, dw: usize, first: bool) -> Subspace {
    let idx: Vec<usize> = if first {
        (0..dv).collect()
    } else {
        (dv..dv + dw).collect()
    };
    Subspace::span_columns(&Matrix::identity(F7, dv + dw).select_cols(&idx))
}

fn criterion_9() -> Outcome {
    let (pair, rho, psi) = sum_instance()?;
    let sum = lib(direct_sum_coaction(&pair, &rho, &psi))?;
    let ind = lib(induce(&pair, &sum))?;
    let w = lib(coinduce(&pair, &sum))?;
    let vi = lib(is_simple(&ind.comodule, DEFAULT_SEED_CAP))?;
    let vc = lib(is_simple(&w.comodule, DEFAULT_SEED_CAP))?;
    ensure(!vi.simple && !vc.simple, "a sum was reported simple")?;
    let wi = &vi.witness.as_ref().ok_or("no induced witness")?.family;
    let wc = &vc.witness.as_ref().ok_or("no coinduced witness")?.family;
    let in_block_i = [true, false]
        .iter()
        .any(|&f| matches!(induced_subfamily(&ind, &block(1, 1, f)), Ok(b) if b.contains(wi)));
    // maps vanishing on one summand form the other block
    let in_block_c = [true, false]
        .iter()
        .any(|&f| matches!(coinduced_subfamily(&w, &block(1, 1, f)), Ok(b) if b.contains(wc)));
    ensure(
        in_block_i && in_block_c,
        "witness not inside a summand block",
    )?;
    Ok(format!(
        "Ind and Coind of the sum not simple; witnesses {:?} and {:?} lie in summand blocks",
        wi.dims(),
        wc.dims()
    ))
}

fn hopfpi_bin(args: &[&str], threads: &str) -> Result<Vec<u8>, String> {
    let mut all = vec!["--threads", threads];
    all.extend_from_slice(args);
    let o = Command::new(env!("CARGO_BIN_EXE_hopfpi"))
        .args(&all)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(
        o.status.code() == Some(0),
        format!("{args:?} exited {:?}", o.status.code()),
    )?;
    Ok(o.stdout)
}

fn criterion_10() -> Outcome {
    let dir = tempfile::TempDir::new().map_err(|e| e.to_string())?;
    let file = |name: &str| {
        dir.path()
            .join(format!("{name}.json"))
            .to_string_lossy()
            .into_owned()
    };
    let (taft, gp, tq, ti) = (file("taft"), file("gp"), file("tq"), file("ti"));
    let runs: Vec<Vec<&str>> = vec![
        vec!["example", "taft"],
        vec!["example", "group-algebra-pair", "--field", "GF(7)"],
        vec!["example", "taft-quotient"],
        vec!["example", "taft-isolated"],
    ];
    for (args, out) in runs.iter().zip([&taft, &gp, &tq, &ti]) {
        std::fs::write(out, hopfpi_bin(args, "1")?).map_err(|e| e.to_string())?;
    }
    let commands: Vec<Vec<&str>> = vec![
        vec!["verify", &taft],
        vec!["verify", &gp],
        vec!["induce", &gp, "--coaction", "trivial"],
        vec!["coinduce", &ti, "--coaction", "trivial"],
        vec!["simplicity", &tq, "--induced", "trivial"],
        vec![
            "simplicity",
            &tq,
            "--coinduced",
            "trivial",
            "--report",
            "text",
        ],
        vec!["iso-cb", &gp, "--section", "coset"],
        vec![
            "iso-vb",
            &gp,
            "--section",
            "coset",
            "--cosection",
            "mirror",
            "--coaction",
            "trivial",
        ],
        vec!["direct-sum", &gp, "--first", "trivial", "--second", "sign"],
        vec!["example", "taft-isolated"],
    ];
    for args in &commands {
        let reference = hopfpi_bin(args, "1")?;
        for threads in ["1", "1", "8", "8", "8"] {
            ensure(
                hopfpi_bin(args, threads)? == reference,
                format!("{args:?} differs with {threads} threads"),
            )?;
        }
    }
    ensure(Path::new(&taft).exists(), "structure file missing")?;
    Ok(format!(
        "{} commands byte-identical over 3 runs each at 1 and 8 threads",
        commands.len()
    ))
}

fn main() {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("axiom suite and perturbations", criterion_1),
        ("quotient by the right ideal coideal", criterion_2),
        (
            "coisotropic identity pair and homogeneous space",
            criterion_3,
        ),
        ("induction on the group algebra pair", criterion_4),
        ("section isomorphisms", criterion_5),
        ("coinduction and dual-basis independence", criterion_6),
        ("equivalences and direct sums", criterion_7),
        (
            "finite counterexample to simplicity of induction",
            criterion_8,
        ),
        ("direct sums are not simple", criterion_9),
        ("determinism across thread counts", criterion_10),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.into_iter().enumerate() {
        let outcome =
            catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", k + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
