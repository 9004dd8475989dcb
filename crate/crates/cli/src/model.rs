//! The JSON structure file: a field, a group table, and named structures
//! that refer to each other by name.

use std::path::Path;
use std::sync::Arc;

use hopfpi::comodules::PiComodule;
use hopfpi::structures::{ClassicalHopfAlgebra, GroupAction, HopfPiCoalgebra, PiCoalgebra};
use hopfpi::subquotients::{SectionFamily, SubgroupPair};
use hopfpi::{FieldSpec, GroupTable, Matrix, Scalar, Subspace};
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unresolved reference to {kind} {name:?}")]
    Unresolved { kind: &'static str, name: String },

    #[error("shape mismatch in {what}: {detail}")]
    Shape { what: String, detail: String },

    #[error("bad field or scalar: {0}")]
    Field(String),

    #[error("bad group table: {0}")]
    Group(String),

    #[error("{what} is malformed: {source}")]
    Structure { what: String, source: hopfpi::Error },
}

type Res<T> = std::result::Result<T, LoadError>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarJson {
    Int(i64),
    Text(String),
}

pub type MatrixJson = Vec<Vec<ScalarJson>>;
pub type Family = IndexMap<String, MatrixJson>;
pub type PairFamily = IndexMap<String, IndexMap<String, MatrixJson>>;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupJson {
    pub elements: Vec<String>,
    /// `table[i][j]` names the product of elements `i` and `j`.
    pub table: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassicalJson {
    pub dim: usize,
    pub mul: MatrixJson,
    pub unit: MatrixJson,
    pub delta: MatrixJson,
    pub counit: MatrixJson,
    pub antipode: MatrixJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionJson {
    pub algebra: String,
    pub maps: Family,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoalgebraJson {
    pub dims: IndexMap<String, usize>,
    pub delta: PairFamily,
    pub counit: MatrixJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfJson {
    pub dims: IndexMap<String, usize>,
    pub delta: PairFamily,
    pub counit: MatrixJson,
    pub mul: Family,
    pub unit: Family,
    pub antipode: Family,
}

/// Basis columns of a subspace in each component.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceJson {
    pub hopf: String,
    pub components: Family,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairJson {
    pub hopf: String,
    /// A Hopf family or a plain coalgebra of the file.
    pub target: String,
    pub sigma: Family,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<Family>,
}

/// A coaction `V -> V ⊗ C_1` of the identity component of a pair's target.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoactionJson {
    pub pair: String,
    pub rho: MatrixJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComoduleJson {
    pub over: String,
    pub dims: IndexMap<String, usize>,
    pub theta: PairFamily,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SectionJson {
    pub pair: String,
    pub g: Family,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ginv: Option<Family>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CosectionJson {
    pub hopf: String,
    pub eta: Family,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileJson {
    pub field: String,
    pub group: GroupJson,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub classical: IndexMap<String, ClassicalJson>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub actions: IndexMap<String, ActionJson>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub coalgebras: IndexMap<String, CoalgebraJson>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub hopf: IndexMap<String, HopfJson>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub subspaces: IndexMap<String, SubspaceJson>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub pairs: IndexMap<String, PairJson>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub coactions: IndexMap<String, CoactionJson>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub comodules: IndexMap<String, ComoduleJson>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub sections: IndexMap<String, SectionJson>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub cosections: IndexMap<String, CosectionJson>,
}

/// What a coalgebra reference resolved to.
#[derive(Clone, Debug)]
pub enum Target {
    Hopf(Arc<HopfPiCoalgebra>),
    Coalgebra(Arc<PiCoalgebra>),
}

impl Target {
    pub fn coalgebra(&self) -> Arc<PiCoalgebra> {
        match self {
            Target::Hopf(h) => h.coalgebra().clone(),
            Target::Coalgebra(c) => c.clone(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Named<T> {
    /// Name of the structure this one is attached to.
    pub parent: String,
    pub value: T,
}

#[derive(Clone, Debug)]
pub struct Section {
    pub g: Vec<Matrix>,
    pub ginv: Option<Vec<Matrix>>,
}

/// A loaded and cross-validated structure file.
#[derive(Clone, Debug)]
pub struct Model {
    pub field: FieldSpec,
    pub group: Arc<GroupTable>,
    pub classical: IndexMap<String, ClassicalHopfAlgebra>,
    pub actions: IndexMap<String, Named<GroupAction>>,
    pub coalgebras: IndexMap<String, Arc<PiCoalgebra>>,
    pub hopf: IndexMap<String, Arc<HopfPiCoalgebra>>,
    pub subspaces: IndexMap<String, Named<Vec<Subspace>>>,
    pub pairs: IndexMap<String, Named<SubgroupPair>>,
    pub pair_targets: IndexMap<String, String>,
    pub coactions: IndexMap<String, Named<Matrix>>,
    pub comodules: IndexMap<String, Named<PiComodule>>,
    pub sections: IndexMap<String, Named<Section>>,
    pub cosections: IndexMap<String, Named<Vec<Matrix>>>,
}

impl Model {
    pub fn new(field: FieldSpec, group: Arc<GroupTable>) -> Self {
        Model {
            field,
            group,
            classical: IndexMap::new(),
            actions: IndexMap::new(),
            coalgebras: IndexMap::new(),
            hopf: IndexMap::new(),
            subspaces: IndexMap::new(),
            pairs: IndexMap::new(),
            pair_targets: IndexMap::new(),
            coactions: IndexMap::new(),
            comodules: IndexMap::new(),
            sections: IndexMap::new(),
            cosections: IndexMap::new(),
        }
    }

    pub fn target(&self, name: &str) -> Res<Target> {
        if let Some(h) = self.hopf.get(name) {
            return Ok(Target::Hopf(h.clone()));
        }
        self.coalgebras
            .get(name)
            .map(|c| Target::Coalgebra(c.clone()))
            .ok_or_else(|| LoadError::Unresolved {
                kind: "coalgebra",
                name: name.to_string(),
            })
    }

    pub fn hopf(&self, name: &str) -> Res<&Arc<HopfPiCoalgebra>> {
        self.hopf.get(name).ok_or_else(|| LoadError::Unresolved {
            kind: "hopf",
            name: name.to_string(),
        })
    }

    pub fn pair(&self, name: &str) -> Res<&SubgroupPair> {
        self.pairs
            .get(name)
            .map(|p| &p.value)
            .ok_or_else(|| LoadError::Unresolved {
                kind: "pair",
                name: name.to_string(),
            })
    }

    pub fn coaction(&self, name: &str) -> Res<(&SubgroupPair, &Matrix)> {
        let c = self
            .coactions
            .get(name)
            .ok_or_else(|| LoadError::Unresolved {
                kind: "coaction",
                name: name.to_string(),
            })?;
        Ok((self.pair(&c.parent)?, &c.value))
    }

    pub fn section(&self, name: &str) -> Res<(&SubgroupPair, &Section)> {
        let s = self
            .sections
            .get(name)
            .ok_or_else(|| LoadError::Unresolved {
                kind: "section",
                name: name.to_string(),
            })?;
        Ok((self.pair(&s.parent)?, &s.value))
    }

    pub fn cosection(&self, name: &str) -> Res<&Named<Vec<Matrix>>> {
        self.cosections
            .get(name)
            .ok_or_else(|| LoadError::Unresolved {
                kind: "cosection",
                name: name.to_string(),
            })
    }

    pub fn comodule(&self, name: &str) -> Res<&PiComodule> {
        self.comodules
            .get(name)
            .map(|c| &c.value)
            .ok_or_else(|| LoadError::Unresolved {
                kind: "comodule",
                name: name.to_string(),
            })
    }
}

pub fn read_file(path: &Path) -> Res<FileJson> {
    let text = std::fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_text(&text)
}

pub fn parse_text(text: &str) -> Res<FileJson> {
    parse_json(text)
}

pub fn load(path: &Path) -> Res<Model> {
    resolve(&read_file(path)?)
}

// ---------------------------------------------------------------------------
// JSON -> library values

struct Ctx {
    field: FieldSpec,
    group: Arc<GroupTable>,
}

impl Ctx {
    fn scalar(&self, s: &ScalarJson) -> Res<Scalar> {
        match s {
            ScalarJson::Int(n) => Ok(Scalar::from_i64(self.field, *n)),
            ScalarJson::Text(t) => {
                Scalar::parse(self.field, t).map_err(|e| LoadError::Field(e.to_string()))
            }
        }
    }

    fn matrix(&self, m: &MatrixJson, rows: usize, cols: Option<usize>, what: &str) -> Res<Matrix> {
        let shape_err = |detail: String| LoadError::Shape {
            what: what.to_string(),
            detail,
        };
        if m.len() != rows {
            return Err(shape_err(format!("{} rows, expected {rows}", m.len())));
        }
        let cols = match (cols, m.first()) {
            (Some(c), _) => c,
            (None, Some(r)) => r.len(),
            (None, None) => 0,
        };
        let mut data = Vec::with_capacity(rows);
        for (i, row) in m.iter().enumerate() {
            if row.len() != cols {
                return Err(shape_err(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            data.push(
                row.iter()
                    .map(|s| self.scalar(s))
                    .collect::<Res<Vec<_>>>()?,
            );
        }
        Matrix::from_rows(self.field, cols, data).map_err(|e| shape_err(e.to_string()))
    }

    fn element(&self, name: &str) -> Res<usize> {
        self.group
            .index_of(name)
            .map_err(|_| LoadError::Unresolved {
                kind: "group element",
                name: name.to_string(),
            })
    }

    fn dims(&self, d: &IndexMap<String, usize>, what: &str) -> Res<Vec<usize>> {
        let mut out = vec![None; self.group.order()];
        for (k, v) in d {
            out[self.element(k)?] = Some(*v);
        }
        out.into_iter()
            .enumerate()
            .map(|(a, v)| {
                v.ok_or_else(|| LoadError::Shape {
                    what: what.to_string(),
                    detail: format!("no dimension for {}", self.group.name(a)),
                })
            })
            .collect()
    }

    /// One matrix per element, shaped by `shape(a)`; `None` columns are inferred.
    fn family(
        &self,
        f: &Family,
        what: &str,
        shape: impl Fn(usize) -> (usize, Option<usize>),
    ) -> Res<Vec<Matrix>> {
        let mut out: Vec<Option<Matrix>> = vec![None; self.group.order()];
        for (k, m) in f {
            let a = self.element(k)?;
            let (r, c) = shape(a);
            out[a] = Some(self.matrix(m, r, c, &format!("{what} at {k}"))?);
        }
        out.into_iter()
            .enumerate()
            .map(|(a, m)| {
                m.ok_or_else(|| LoadError::Shape {
                    what: what.to_string(),
                    detail: format!("missing component {}", self.group.name(a)),
                })
            })
            .collect()
    }

    /// One matrix per pair of elements, in `a * |group| + b` order.
    fn pair_family(
        &self,
        f: &PairFamily,
        what: &str,
        shape: impl Fn(usize, usize) -> (usize, usize),
    ) -> Res<Vec<Matrix>> {
        let n = self.group.order();
        let mut out: Vec<Option<Matrix>> = vec![None; n * n];
        for (ka, inner) in f {
            let a = self.element(ka)?;
            for (kb, m) in inner {
                let b = self.element(kb)?;
                let (r, c) = shape(a, b);
                out[a * n + b] =
                    Some(self.matrix(m, r, Some(c), &format!("{what} at ({ka}, {kb})"))?);
            }
        }
        out.into_iter()
            .enumerate()
            .map(|(k, m)| {
                m.ok_or_else(|| LoadError::Shape {
                    what: what.to_string(),
                    detail: format!(
                        "missing component ({}, {})",
                        self.group.name(k / n),
                        self.group.name(k % n)
                    ),
                })
            })
            .collect()
    }
}

fn structure<T>(what: impl Into<String>, r: hopfpi::Result<T>) -> Res<T> {
    r.map_err(|source| LoadError::Structure {
        what: what.into(),
        source,
    })
}

pub fn resolve_group(g: &GroupJson) -> Res<GroupTable> {
    let index = |name: &String| {
        g.elements
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| LoadError::Group(format!("unknown element {name:?} in table")))
    };
    let table = g
        .table
        .iter()
        .map(|row| row.iter().map(index).collect::<Res<Vec<_>>>())
        .collect::<Res<Vec<_>>>()?;
    GroupTable::new(g.elements.clone(), table).map_err(|e| LoadError::Group(e.to_string()))
}

fn coalgebra_parts(
    ctx: &Ctx,
    dims: &IndexMap<String, usize>,
    delta: &PairFamily,
    counit: &MatrixJson,
    what: &str,
) -> Res<PiCoalgebra> {
    let dims = ctx.dims(dims, what)?;
    let g = &ctx.group;
    let delta = ctx.pair_family(delta, &format!("{what} comultiplication"), |a, b| {
        (dims[a] * dims[b], dims[g.mul(a, b)])
    })?;
    let counit = ctx.matrix(counit, 1, Some(dims[0]), &format!("{what} counit"))?;
    structure(
        what,
        PiCoalgebra::new(g.clone(), ctx.field, dims, delta, counit),
    )
}

pub fn resolve(file: &FileJson) -> Res<Model> {
    let field = FieldSpec::parse(&file.field).map_err(|e| LoadError::Field(e.to_string()))?;
    let group = Arc::new(resolve_group(&file.group)?);
    let ctx = Ctx {
        field,
        group: group.clone(),
    };
    let g = group.clone();
    let mut model = Model::new(field, group);

    for (name, c) in &file.classical {
        let d = c.dim;
        let m = |j: &MatrixJson, r, cc, what: &str| {
            ctx.matrix(j, r, Some(cc), &format!("{name} {what}"))
        };
        let a = ClassicalHopfAlgebra::new(
            field,
            m(&c.mul, d, d * d, "multiplication")?,
            m(&c.unit, d, 1, "unit")?,
            m(&c.delta, d * d, d, "comultiplication")?,
            m(&c.counit, 1, d, "counit")?,
            m(&c.antipode, d, d, "antipode")?,
        );
        model
            .classical
            .insert(name.clone(), structure(name.clone(), a)?);
    }
    for (name, act) in &file.actions {
        let alg = model
            .classical
            .get(&act.algebra)
            .ok_or_else(|| LoadError::Unresolved {
                kind: "classical algebra",
                name: act.algebra.clone(),
            })?;
        let maps = ctx.family(&act.maps, name, |_| (alg.dim, Some(alg.dim)))?;
        let action = structure(name.clone(), GroupAction::new(g.clone(), maps))?;
        model.actions.insert(
            name.clone(),
            Named {
                parent: act.algebra.clone(),
                value: action,
            },
        );
    }
    for (name, c) in &file.coalgebras {
        let co = coalgebra_parts(&ctx, &c.dims, &c.delta, &c.counit, name)?;
        model.coalgebras.insert(name.clone(), Arc::new(co));
    }
    for (name, h) in &file.hopf {
        let co = Arc::new(coalgebra_parts(&ctx, &h.dims, &h.delta, &h.counit, name)?);
        let d = co.dims().to_vec();
        let mul = ctx.family(&h.mul, &format!("{name} multiplication"), |a| {
            (d[a], Some(d[a] * d[a]))
        })?;
        let unit = ctx.family(&h.unit, &format!("{name} unit"), |a| (d[a], Some(1)))?;
        let anti = ctx.family(&h.antipode, &format!("{name} antipode"), |a| {
            (d[g.inv(a)], Some(d[a]))
        })?;
        let hopf = structure(name.clone(), HopfPiCoalgebra::new(co, mul, unit, anti))?;
        model.hopf.insert(name.clone(), Arc::new(hopf));
    }
    for (name, s) in &file.subspaces {
        let h = model.hopf(&s.hopf)?.clone();
        let bases = ctx.family(&s.components, name, |a| (h.dim(a), None))?;
        let comps = bases.iter().map(Subspace::span_columns).collect();
        model.subspaces.insert(
            name.clone(),
            Named {
                parent: s.hopf.clone(),
                value: comps,
            },
        );
    }
    for (name, p) in &file.pairs {
        let h = model.hopf(&p.hopf)?.clone();
        let target = model.target(&p.target)?;
        let c = target.coalgebra();
        let sigma = ctx.family(&p.sigma, &format!("{name} projection"), |a| {
            (c.dim(a), Some(h.dim(a)))
        })?;
        let mut pair = match &target {
            Target::Hopf(t) => structure(
                name.clone(),
                SubgroupPair::with_hopf_quotient(h.clone(), t.clone(), sigma),
            )?,
            Target::Coalgebra(t) => {
                structure(name.clone(), SubgroupPair::new(h.clone(), t.clone(), sigma))?
            }
        };
        if let Some(om) = &p.omega {
            let omega = ctx.family(om, &format!("{name} action"), |a| {
                (c.dim(a), Some(h.dim(a) * c.dim(a)))
            })?;
            pair = structure(name.clone(), pair.with_omega(omega))?;
        }
        model.pairs.insert(
            name.clone(),
            Named {
                parent: p.hopf.clone(),
                value: pair,
            },
        );
        model.pair_targets.insert(name.clone(), p.target.clone());
    }
    for (name, c) in &file.coactions {
        let pair = model.pair(&c.pair)?;
        let c1 = pair.quotient.dim(0);
        let rows = c.rho.len();
        if c1 == 0 || rows % c1 != 0 {
            return Err(LoadError::Shape {
                what: name.clone(),
                detail: format!("{rows} rows is not a multiple of {c1}"),
            });
        }
        let rho = ctx.matrix(&c.rho, rows, Some(rows / c1), name)?;
        model.coactions.insert(
            name.clone(),
            Named {
                parent: c.pair.clone(),
                value: rho,
            },
        );
    }
    for (name, m) in &file.comodules {
        let over = model.target(&m.over)?.coalgebra();
        let dims = ctx.dims(&m.dims, name)?;
        let theta = ctx.pair_family(&m.theta, name, |a, b| {
            (dims[a] * over.dim(b), dims[g.mul(a, b)])
        })?;
        let comodule = structure(name.clone(), PiComodule::new(over, dims, theta))?;
        model.comodules.insert(
            name.clone(),
            Named {
                parent: m.over.clone(),
                value: comodule,
            },
        );
    }
    for (name, s) in &file.sections {
        let pair = model.pair(&s.pair)?;
        let (h, c) = (pair.hopf.clone(), pair.quotient.clone());
        let gmaps = ctx.family(&s.g, name, |a| (h.dim(a), Some(c.dim(a))))?;
        let ginv = match &s.ginv {
            Some(f) => Some(ctx.family(f, name, |a| (h.dim(a), Some(c.dim(g.inv(a)))))?),
            None => None,
        };
        model.sections.insert(
            name.clone(),
            Named {
                parent: s.pair.clone(),
                value: Section { g: gmaps, ginv },
            },
        );
    }
    for (name, s) in &file.cosections {
        let h = model.hopf(&s.hopf)?.clone();
        let eta = ctx.family(&s.eta, name, |a| (h.dim(a), Some(h.dim(0))))?;
        model.cosections.insert(
            name.clone(),
            Named {
                parent: s.hopf.clone(),
                value: eta,
            },
        );
    }
    Ok(model)
}

impl Section {
    /// The section with its convolution inverse, computing the inverse when
    /// the file does not give one. `None` when no inverse exists.
    pub fn family(&self, pair: &SubgroupPair) -> hopfpi::Result<Option<SectionFamily>> {
        match &self.ginv {
            Some(ginv) => Ok(Some(SectionFamily {
                g: self.g.clone(),
                ginv: ginv.clone(),
            })),
            None => SectionFamily::from_maps(pair, self.g.clone()),
        }
    }
}

// ---------------------------------------------------------------------------
// library values -> JSON

pub fn scalar_json(s: &Scalar) -> ScalarJson {
    match s.to_i64() {
        Some(n) => ScalarJson::Int(n),
        None => ScalarJson::Text(s.to_text()),
    }
}

pub fn matrix_json(m: &Matrix) -> MatrixJson {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(scalar_json).collect())
        .collect()
}

pub fn family_json(g: &GroupTable, f: &[Matrix]) -> Family {
    g.elements()
        .map(|a| (g.name(a).to_string(), matrix_json(&f[a])))
        .collect()
}

fn pair_family_json(g: &GroupTable, f: impl Fn(usize, usize) -> Matrix) -> PairFamily {
    g.elements()
        .map(|a| {
            (
                g.name(a).to_string(),
                g.elements()
                    .map(|b| (g.name(b).to_string(), matrix_json(&f(a, b))))
                    .collect(),
            )
        })
        .collect()
}

fn dims_json(g: &GroupTable, dims: &[usize]) -> IndexMap<String, usize> {
    g.elements()
        .map(|a| (g.name(a).to_string(), dims[a]))
        .collect()
}

pub fn group_json(g: &GroupTable) -> GroupJson {
    GroupJson {
        elements: g.names().to_vec(),
        table: g
            .elements()
            .map(|a| {
                g.elements()
                    .map(|b| g.name(g.mul(a, b)).to_string())
                    .collect()
            })
            .collect(),
    }
}

pub fn coalgebra_json(c: &PiCoalgebra) -> CoalgebraJson {
    let g = c.group();
    CoalgebraJson {
        dims: dims_json(g, c.dims()),
        delta: pair_family_json(g, |a, b| c.delta(a, b).clone()),
        counit: matrix_json(c.counit()),
    }
}

pub fn hopf_json(h: &HopfPiCoalgebra) -> HopfJson {
    let g = h.group();
    let co = coalgebra_json(h.coalgebra());
    let pick =
        |f: &dyn Fn(usize) -> Matrix| family_json(g, &g.elements().map(f).collect::<Vec<_>>());
    HopfJson {
        dims: co.dims,
        delta: co.delta,
        counit: co.counit,
        mul: pick(&|a| h.mul(a).clone()),
        unit: pick(&|a| h.unit(a).clone()),
        antipode: pick(&|a| h.antipode(a).clone()),
    }
}

pub fn comodule_json(over: &str, m: &PiComodule) -> ComoduleJson {
    let g = m.group();
    ComoduleJson {
        over: over.to_string(),
        dims: dims_json(g, m.dims()),
        theta: pair_family_json(g, |a, b| m.theta(a, b).clone()),
    }
}

pub fn emit(model: &Model) -> FileJson {
    let g = &model.group;
    FileJson {
        field: model.field.to_string(),
        group: group_json(g),
        classical: model
            .classical
            .iter()
            .map(|(k, a)| {
                let c = ClassicalJson {
                    dim: a.dim,
                    mul: matrix_json(&a.mul),
                    unit: matrix_json(&a.unit),
                    delta: matrix_json(&a.delta),
                    counit: matrix_json(&a.counit),
                    antipode: matrix_json(&a.antipode),
                };
                (k.clone(), c)
            })
            .collect(),
        actions: model
            .actions
            .iter()
            .map(|(k, a)| {
                (
                    k.clone(),
                    ActionJson {
                        algebra: a.parent.clone(),
                        maps: family_json(g, &a.value.maps),
                    },
                )
            })
            .collect(),
        coalgebras: model
            .coalgebras
            .iter()
            .map(|(k, c)| (k.clone(), coalgebra_json(c)))
            .collect(),
        hopf: model
            .hopf
            .iter()
            .map(|(k, h)| (k.clone(), hopf_json(h)))
            .collect(),
        subspaces: model
            .subspaces
            .iter()
            .map(|(k, s)| {
                let bases: Vec<Matrix> = s.value.iter().map(Subspace::basis_matrix).collect();
                (
                    k.clone(),
                    SubspaceJson {
                        hopf: s.parent.clone(),
                        components: family_json(g, &bases),
                    },
                )
            })
            .collect(),
        pairs: model
            .pairs
            .iter()
            .map(|(k, p)| {
                let j = PairJson {
                    hopf: p.parent.clone(),
                    target: model.pair_targets[k].clone(),
                    sigma: family_json(g, &p.value.sigma),
                    omega: p.value.omega.as_ref().map(|o| family_json(g, o)),
                };
                (k.clone(), j)
            })
            .collect(),
        coactions: model
            .coactions
            .iter()
            .map(|(k, c)| {
                (
                    k.clone(),
                    CoactionJson {
                        pair: c.parent.clone(),
                        rho: matrix_json(&c.value),
                    },
                )
            })
            .collect(),
        comodules: model
            .comodules
            .iter()
            .map(|(k, m)| (k.clone(), comodule_json(&m.parent, &m.value)))
            .collect(),
        sections: model
            .sections
            .iter()
            .map(|(k, s)| {
                let j = SectionJson {
                    pair: s.parent.clone(),
                    g: family_json(g, &s.value.g),
                    ginv: s.value.ginv.as_ref().map(|m| family_json(g, m)),
                };
                (k.clone(), j)
            })
            .collect(),
        cosections: model
            .cosections
            .iter()
            .map(|(k, c)| {
                (
                    k.clone(),
                    CosectionJson {
                        hopf: c.parent.clone(),
                        eta: family_json(g, &c.value),
                    },
                )
            })
            .collect(),
    }
}

pub fn to_json_text(file: &FileJson) -> String {
    crate::output::pretty(&serde_json::to_value(file).expect("structure files serialize"))
}

/// A single matrix given as JSON text on the command line.
pub fn parse_matrix(field: FieldSpec, text: &str, rows: usize, cols: usize) -> Res<Matrix> {
    let m: MatrixJson = parse_json(text)?;
    let ctx = Ctx {
        field,
        group: Arc::new(GroupTable::trivial()),
    };
    ctx.matrix(&m, rows, Some(cols), "map")
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Res<T> {
    serde_json::from_str(text).map_err(|e| LoadError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}
