//! Dimensions computed by small independent oracles (plain `u64` arithmetic
//! mod 7, hand-written products), then frozen and compared with the library.

use hopfpi::coinduction::coinduce;
use hopfpi::induction::{homogeneous_space, induce, Flavor};
use hopfpi::subquotients::examples::{group_algebra_pair, taft_right_quotient_pair};
use hopfpi::{FieldSpec, Matrix};

const P: u64 = 7;
const F7: FieldSpec = FieldSpec::Prime(P);

fn raw(m: &Matrix) -> Vec<Vec<u64>> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|s| s.to_i64().unwrap() as u64)
                .collect()
        })
        .collect()
}

fn inv_mod(a: u64) -> u64 {
    (1..P).find(|b| a * b % P == 1).unwrap()
}

/// Rank by straightforward elimination mod 7.
fn rank_mod7(mut rows: Vec<Vec<u64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] % P != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = inv_mod(rows[r][c]);
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c] * inv % P;
                for k in 0..cols {
                    rows[i][k] = (rows[i][k] + P * P - f * rows[r][k] % P) % P;
                }
            }
        }
        r += 1;
    }
    r
}

#[test]
fn taft_right_ideal_quotient_has_dimension_three() {
    // (x - 1) g^k x^l = q^k g^k x^{l+1} - g^k x^l, with q = 2 and n = 3
    let (n, q) = (3usize, 2u64);
    let mut vectors = Vec::new();
    for k in 0..n {
        for l in 0..n {
            let mut v = vec![0u64; n * n];
            v[k * n + (l + 1) % n] = (v[k * n + (l + 1) % n] + q.pow(k as u32)) % P;
            v[k * n + l] = (v[k * n + l] + P - 1) % P;
            vectors.push(v);
        }
    }
    let oracle = n * n - rank_mod7(vectors);
    assert_eq!(oracle, 3);
    let pair = taft_right_quotient_pair(3, 7, 2).unwrap();
    assert_eq!(pair.quotient.dims(), &[oracle; 3]);
}

#[test]
fn homogeneous_space_is_the_normal_subgroup() {
    // u in Z_6 satisfies σ(u) = σ(1) iff u lies in {0, 2, 4}
    let oracle = (0..6).filter(|u| u % 2 == 0).count();
    assert_eq!(oracle, 3);
    let pair = group_algebra_pair(6, &[0, 2, 4], F7).unwrap();
    assert_eq!(
        homogeneous_space(&pair, Flavor::B).unwrap().dims(),
        vec![oracle; 2]
    );
}

#[test]
fn induced_dimension_matches_an_independent_kernel() {
    let pair = group_algebra_pair(6, &[0, 2, 4], F7).unwrap();
    let c = pair.require_hopf_quotient().unwrap().clone();
    let ind = induce(&pair, c.unit(0)).unwrap();
    for a in 0..2 {
        // rows of L(1, a) - 1 ⊗ I from the raw structure constants
        let delta = raw(pair.hopf.delta(0, a));
        let sigma = raw(&pair.sigma[0]);
        let one = raw(c.unit(0));
        let mut rows = Vec::new();
        for cc in 0..2 {
            for hh in 0..6 {
                let row: Vec<u64> = (0..6)
                    .map(|col| {
                        let l: u64 = (0..6)
                            .map(|u| sigma[cc][u] * delta[u * 6 + hh][col])
                            .sum::<u64>()
                            % P;
                        let e = if col == hh { one[cc][0] } else { 0 };
                        (l + P - e) % P
                    })
                    .collect();
                rows.push(row);
            }
        }
        let oracle = 6 - rank_mod7(rows);
        assert_eq!(oracle, 3);
        assert_eq!(ind.dims()[a], oracle);
    }
}

#[test]
fn coinduced_dimension_by_enumerating_hom_space() {
    let pair = group_algebra_pair(6, &[0, 2, 4], F7).unwrap();
    let c = pair.require_hopf_quotient().unwrap().clone();
    let w = coinduce(&pair, c.unit(0)).unwrap();
    let rho = raw(c.unit(0));
    for a in 0..2 {
        let l = raw(&pair.l_map(0, a).unwrap());
        // F: K -> H_a is a vector; count all F with L F = ρ-twisted F
        let mut count = 0u64;
        for code in 0..P.pow(6) {
            let f: Vec<u64> = (0..6).map(|i| code / P.pow(i) % P).collect();
            let ok = (0..2).all(|cc| {
                (0..6).all(|hh| {
                    let lhs: u64 = (0..6).map(|k| l[cc * 6 + hh][k] * f[k]).sum::<u64>() % P;
                    lhs == rho[cc][0] * f[hh] % P
                })
            });
            count += u64::from(ok);
        }
        assert_eq!(count, P.pow(3));
        assert_eq!(w.dims()[a], 3);
    }
}
