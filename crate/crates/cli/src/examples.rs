//! Built-in structure files.

use std::sync::Arc;

use hopfpi::comodules::PiComodule;
use hopfpi::induction::mirror_cosection;
use hopfpi::structures::builtin::{
    group_algebra, inversion_action, taft_action, taft_algebra, taft_grouplikes,
    taft_nilpotent_ideal, trivial_pi, TaftParams,
};
use hopfpi::structures::mirror;
use hopfpi::subquotients::examples::{
    coset_section, group_algebra_pair, taft_left_quotient_pair, taft_right_quotient_pair,
};
use hopfpi::subquotients::{isolated_to_coisotropic, SubgroupPair};
use hopfpi::{FieldSpec, GroupTable, Matrix, Result};

use crate::model::{Model, Named, Section};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum ExampleName {
    /// The base field as a one-component Hopf family.
    Trivial,
    /// k[Z_n] twisted by Z_2 acting through inversion.
    InversionZ3,
    /// The Taft mirror over Z_n.
    Taft,
    /// k[Z_6] twisted by inversion over its quotient by the subgroup of index 2.
    GroupAlgebraPair,
    /// The Taft mirror over its quotient by the right ideals generated by x - 1.
    TaftQuotient,
    /// The Taft mirror over its quotient by the left ideals generated by x - 1.
    TaftLeftQuotient,
    /// The Taft mirror split into group-likes plus the ideal generated by g.
    TaftIsolated,
}

pub struct Params {
    pub field: FieldSpec,
    pub n: Option<usize>,
    pub p: u64,
    pub q: u64,
}

/// Builds the named example. Names used inside the file: the Hopf family is
/// `H`, a quotient is `C`, the pair is `P`, and the trivial one-dimensional
/// coaction and comodule are both `trivial`.
pub fn build(name: ExampleName, params: &Params) -> Result<Model> {
    let taft = || TaftParams::new(params.n.unwrap_or(3), params.p, params.q);
    match name {
        ExampleName::Trivial => {
            let h = trivial_pi(params.field);
            let mut m = Model::new(params.field, h.group().clone());
            m.hopf.insert("H".into(), Arc::new(h));
            Ok(m)
        }
        ExampleName::InversionZ3 => {
            let n = params.n.unwrap_or(3);
            let action = inversion_action(n, params.field)?;
            let a = group_algebra(&GroupTable::cyclic(n, "u"), params.field);
            let h = mirror(&a, &action)?;
            let mut m = Model::new(params.field, action.group.clone());
            m.classical.insert("A".into(), a);
            m.actions.insert(
                "inversion".into(),
                Named {
                    parent: "A".into(),
                    value: action,
                },
            );
            m.hopf.insert("H".into(), Arc::new(h));
            Ok(m)
        }
        ExampleName::Taft => {
            let t = taft()?;
            let a = taft_algebra(t);
            let action = taft_action(t, &a);
            let h = mirror(&a, &action)?;
            let mut m = Model::new(t.field(), action.group.clone());
            m.classical.insert("A".into(), a);
            m.actions.insert(
                "conjugation".into(),
                Named {
                    parent: "A".into(),
                    value: action,
                },
            );
            m.hopf.insert("H".into(), Arc::new(h));
            Ok(m)
        }
        ExampleName::GroupAlgebraPair => {
            let pair = group_algebra_pair(6, &[0, 2, 4], params.field)?;
            let mut m = pair_model(&pair)?;
            let f = params.field;
            m.coactions.insert(
                "sign".into(),
                Named {
                    parent: "P".into(),
                    value: Matrix::unit_column(f, 2, 1),
                },
            );
            let s = coset_section(&pair)?;
            m.sections.insert(
                "coset".into(),
                Named {
                    parent: "P".into(),
                    value: Section {
                        g: s.g,
                        ginv: Some(s.ginv),
                    },
                },
            );
            let eta = mirror_cosection(&inversion_action(6, f)?);
            m.cosections.insert(
                "mirror".into(),
                Named {
                    parent: "H".into(),
                    value: eta,
                },
            );
            Ok(m)
        }
        ExampleName::TaftQuotient | ExampleName::TaftLeftQuotient => {
            let t = taft()?;
            let pair = if name == ExampleName::TaftQuotient {
                // the action by left multiplication is not defined on this
                // quotient, so the file leaves it out
                SubgroupPair {
                    omega: None,
                    ..taft_right_quotient_pair(t.n, t.p, t.q)?
                }
            } else {
                taft_left_quotient_pair(t.n, t.p, t.q)?
            };
            pair_model(&pair)
        }
        ExampleName::TaftIsolated => {
            let t = taft()?;
            let h = Arc::new(hopfpi::structures::builtin::taft_mirror(t.n, t.p, t.q)?);
            let order = h.group().order();
            let (a, i) = (
                vec![taft_grouplikes(t); order],
                vec![taft_nilpotent_ideal(t); order],
            );
            let pair = isolated_to_coisotropic(&h, &a, &i)?;
            let mut m = pair_model(&pair)?;
            m.subspaces.insert(
                "grouplikes".into(),
                Named {
                    parent: "H".into(),
                    value: a,
                },
            );
            m.subspaces.insert(
                "nilpotent".into(),
                Named {
                    parent: "H".into(),
                    value: i,
                },
            );
            Ok(m)
        }
    }
}

fn pair_model(pair: &SubgroupPair) -> Result<Model> {
    let h = &pair.hopf;
    let g = h.group().clone();
    let mut m = Model::new(h.field(), g.clone());
    m.hopf.insert("H".into(), h.clone());
    match &pair.quotient_hopf {
        Some(c) => {
            m.hopf.insert("C".into(), c.clone());
        }
        None => {
            m.coalgebras.insert("C".into(), pair.quotient.clone());
        }
    }
    m.pairs.insert(
        "P".into(),
        Named {
            parent: "H".into(),
            value: pair.clone(),
        },
    );
    m.pair_targets.insert("P".into(), "C".into());
    m.coactions.insert(
        "trivial".into(),
        Named {
            parent: "P".into(),
            value: pair.unit_image(0)?,
        },
    );
    let grouplike = g
        .elements()
        .map(|a| pair.unit_image(a))
        .collect::<Result<Vec<_>>>()?;
    let one = PiComodule::one_dimensional(pair.quotient.clone(), &grouplike)?;
    m.comodules.insert(
        "trivial".into(),
        Named {
            parent: "C".into(),
            value: one,
        },
    );
    Ok(m)
}
