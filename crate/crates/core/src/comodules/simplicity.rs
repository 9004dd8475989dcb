use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Scalar, Subspace};

use super::comodule::PiComodule;

/// Default bound on the number of projective seed points enumerated exactly.
pub const DEFAULT_SEED_CAP: u64 = 1_000_000;

/// A family of subspaces, one per group element, closed under the coaction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubcomoduleFamily {
    pub components: Vec<Subspace>,
}

impl SubcomoduleFamily {
    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(Subspace::dim).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Subspace::is_zero)
    }

    pub fn is_full(&self) -> bool {
        self.components.iter().all(Subspace::is_full)
    }

    pub fn contains(&self, other: &SubcomoduleFamily) -> bool {
        self.components
            .iter()
            .zip(&other.components)
            .all(|(a, b)| a.contains_subspace(b))
    }
}

/// Precomputed coaction maps for repeated closure computations.
struct Closure<'a> {
    m: &'a PiComodule,
    /// `(a, b)` pairs grouped by the source component `ab`.
    by_source: Vec<Vec<(usize, usize)>>,
}

impl<'a> Closure<'a> {
    fn new(m: &'a PiComodule) -> Self {
        let g = m.group();
        let mut by_source = vec![Vec::new(); g.order()];
        for (a, b) in g.pairs() {
            by_source[g.mul(a, b)].push((a, b));
        }
        Closure { m, by_source }
    }

    /// Smallest subcomodule containing the seeds. Vectors are processed in
    /// insertion order and images in `(a, b, j)` order, so the result and
    /// the work done are deterministic.
    fn run(&self, seeds: &[(usize, Vec<Scalar>)]) -> SubcomoduleFamily {
        let m = self.m;
        let f = m.field();
        let mut comps: Vec<Subspace> = m.dims().iter().map(|&d| Subspace::zero(f, d)).collect();
        let mut queue = VecDeque::new();
        for (c, v) in seeds {
            if comps[*c].insert(v) {
                queue.push_back((*c, v.clone()));
            }
        }
        while let Some((c, v)) = queue.pop_front() {
            for &(a, b) in &self.by_source[c] {
                if comps[a].is_full() {
                    continue;
                }
                let img = m.theta(a, b).mul_vec(&v);
                let nb = m.over().dim(b);
                for j in 0..nb {
                    let w: Vec<Scalar> = (0..m.dim(a)).map(|i| img[i * nb + j].clone()).collect();
                    if comps[a].insert(&w) {
                        queue.push_back((a, w));
                    }
                }
            }
        }
        SubcomoduleFamily { components: comps }
    }
}

/// Smallest subcomodule containing the given `(component, vector)` seeds.
pub fn subcomodule_closure(
    m: &PiComodule,
    seeds: &[(usize, Vec<Scalar>)],
) -> Result<SubcomoduleFamily> {
    for (c, v) in seeds {
        if *c >= m.group().order() || v.len() != m.dim(*c) {
            return Err(Error::Shape(format!(
                "seed of length {} for component {c}",
                v.len()
            )));
        }
        if v.iter().any(|s| s.field() != m.field()) {
            return Err(Error::FieldMismatch(m.field(), v[0].field()));
        }
    }
    Ok(Closure::new(m).run(seeds))
}

/// Whether the search was exhaustive over all seeds up to scalars.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Exactness {
    Exact,
    Heuristic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub component: usize,
    pub seed: Vec<Scalar>,
    pub family: SubcomoduleFamily,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicityVerdict {
    pub simple: bool,
    pub exactness: Exactness,
    pub seeds_tested: u64,
    /// First seed, in search order, whose closure is proper.
    pub witness: Option<Witness>,
}

/// Number of points of the projective space on `K^dim` for `|K| = p`, saturating.
fn projective_count(p: u64, dim: usize) -> u64 {
    let mut total: u64 = 0;
    let mut power: u64 = 1;
    for _ in 0..dim {
        total = total.saturating_add(power);
        power = power.saturating_mul(p);
    }
    total
}

/// The `k`-th normalized vector: ordered by the position of the leading 1,
/// then by the trailing coordinates read as a base-`p` number.
fn projective_point(
    p: u64,
    dim: usize,
    mut k: u64,
    field: crate::linalg::FieldSpec,
) -> Vec<Scalar> {
    let mut lead = 0;
    loop {
        let tail = (dim - lead - 1) as u32;
        let block = p.pow(tail);
        if k < block {
            break;
        }
        k -= block;
        lead += 1;
    }
    let mut v = vec![Scalar::zero(field); dim];
    v[lead] = Scalar::one(field);
    for pos in (lead + 1..dim).rev() {
        v[pos] = Scalar::from_i64(field, (k % p) as i64);
        k /= p;
    }
    v
}

/// Decides simplicity. Over a prime field with at most `seed_cap` seeds up
/// to scalars the answer is exact; otherwise basis vectors and pairwise sums
/// of basis vectors are tried and a "simple" answer is marked heuristic.
/// A "not simple" answer always carries a proper nonzero witness.
pub fn is_simple(m: &PiComodule, seed_cap: u64) -> Result<SimplicityVerdict> {
    if m.total_dim() == 0 {
        return Err(Error::InvalidArgument(
            "the zero comodule is neither simple nor not".into(),
        ));
    }
    let closure = Closure::new(m);
    let field = m.field();
    let order = m.group().order();

    if let Some(p) = field.order() {
        let counts: Vec<u64> = (0..order).map(|c| projective_count(p, m.dim(c))).collect();
        let total = counts.iter().fold(0u64, |acc, &x| acc.saturating_add(x));
        if total <= seed_cap {
            let mut tested = 0;
            for c in 0..order {
                const CHUNK: u64 = 1024;
                let mut start = 0;
                while start < counts[c] {
                    let end = (start + CHUNK).min(counts[c]);
                    let hit = (start..end).into_par_iter().find_map_first(|k| {
                        let seed = projective_point(p, m.dim(c), k, field);
                        let fam = closure.run(&[(c, seed.clone())]);
                        (!fam.is_full()).then_some((k, seed, fam))
                    });
                    if let Some((k, seed, family)) = hit {
                        tested += k - start + 1;
                        return Ok(SimplicityVerdict {
                            simple: false,
                            exactness: Exactness::Exact,
                            seeds_tested: tested,
                            witness: Some(Witness {
                                component: c,
                                seed,
                                family,
                            }),
                        });
                    }
                    tested += end - start;
                    start = end;
                }
            }
            return Ok(SimplicityVerdict {
                simple: true,
                exactness: Exactness::Exact,
                seeds_tested: tested,
                witness: None,
            });
        }
    }

    let mut seeds = Vec::new();
    for c in 0..order {
        let d = m.dim(c);
        let unit = |i: usize| {
            let mut v = vec![Scalar::zero(field); d];
            v[i] = Scalar::one(field);
            v
        };
        for i in 0..d {
            seeds.push((c, unit(i)));
        }
        for i in 0..d {
            for j in i + 1..d {
                let v: Vec<Scalar> = unit(i).iter().zip(&unit(j)).map(|(x, y)| x + y).collect();
                seeds.push((c, v));
            }
        }
    }
    let hit = seeds
        .par_iter()
        .enumerate()
        .find_map_first(|(k, (c, seed))| {
            let fam = closure.run(&[(*c, seed.clone())]);
            (!fam.is_full()).then(|| {
                (
                    k,
                    Witness {
                        component: *c,
                        seed: seed.clone(),
                        family: fam,
                    },
                )
            })
        });
    Ok(match hit {
        Some((k, w)) => SimplicityVerdict {
            simple: false,
            exactness: Exactness::Exact,
            seeds_tested: k as u64 + 1,
            witness: Some(w),
        },
        None => SimplicityVerdict {
            simple: true,
            exactness: Exactness::Heuristic,
            seeds_tested: seeds.len() as u64,
            witness: None,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;

    #[test]
    fn projective_enumeration_is_a_bijection() {
        let f = FieldSpec::Prime(3);
        let n = projective_count(3, 3);
        assert_eq!(n, 13);
        let pts: Vec<Vec<Scalar>> = (0..n).map(|k| projective_point(3, 3, k, f)).collect();
        assert_eq!(
            pts[0],
            vec![Scalar::one(f), Scalar::zero(f), Scalar::zero(f)]
        );
        assert_eq!(
            pts[12],
            vec![Scalar::zero(f), Scalar::zero(f), Scalar::one(f)]
        );
        // no two points are proportional
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                let a = Subspace::from_vectors(f, 3, vec![pts[i].clone()]);
                assert!(!a.contains(&pts[j]));
            }
        }
    }

    #[test]
    fn saturating_count() {
        assert_eq!(projective_count(7, 0), 0);
        assert_eq!(projective_count(2, 70), u64::MAX);
    }
}
