//! Finite groups given by a Cayley table.

use std::fmt;

use crate::error::{Error, Result};

/// Why a proposed table fails to define a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupViolation {
    Empty,
    DuplicateName(String),
    NotSquare,
    NotClosed { a: String, b: String },
    IdentityNotFirst { a: String },
    NoInverse { a: String },
    NotAssociative { a: String, b: String, c: String },
}

impl fmt::Display for GroupViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupViolation::Empty => write!(f, "group has no elements"),
            GroupViolation::DuplicateName(n) => write!(f, "element name {n:?} repeated"),
            GroupViolation::NotSquare => write!(f, "table is not square"),
            GroupViolation::NotClosed { a, b } => write!(f, "product {a}*{b} is not an element"),
            GroupViolation::IdentityNotFirst { a } => {
                write!(f, "first element is not an identity for {a}")
            }
            GroupViolation::NoInverse { a } => write!(f, "{a} has no two-sided inverse"),
            GroupViolation::NotAssociative { a, b, c } => {
                write!(f, "({a}*{b})*{c} != {a}*({b}*{c})")
            }
        }
    }
}

/// Checks every group axiom; element 0 must be the identity.
pub fn validate_group(
    names: &[String],
    table: &[Vec<usize>],
) -> std::result::Result<(), GroupViolation> {
    let n = names.len();
    if n == 0 {
        return Err(GroupViolation::Empty);
    }
    for (i, a) in names.iter().enumerate() {
        if names[..i].contains(a) {
            return Err(GroupViolation::DuplicateName(a.clone()));
        }
    }
    if table.len() != n || table.iter().any(|r| r.len() != n) {
        return Err(GroupViolation::NotSquare);
    }
    for a in 0..n {
        for b in 0..n {
            if table[a][b] >= n {
                return Err(GroupViolation::NotClosed {
                    a: names[a].clone(),
                    b: names[b].clone(),
                });
            }
        }
    }
    for a in 0..n {
        if table[0][a] != a || table[a][0] != a {
            return Err(GroupViolation::IdentityNotFirst {
                a: names[a].clone(),
            });
        }
    }
    for a in 0..n {
        if !(0..n).any(|b| table[a][b] == 0 && table[b][a] == 0) {
            return Err(GroupViolation::NoInverse {
                a: names[a].clone(),
            });
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(GroupViolation::NotAssociative {
                        a: names[a].clone(),
                        b: names[b].clone(),
                        c: names[c].clone(),
                    });
                }
            }
        }
    }
    Ok(())
}

/// A validated finite group. Elements are indices `0..order`, with `0` the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    names: Vec<String>,
    table: Vec<usize>,
    inverse: Vec<usize>,
}

impl GroupTable {
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        validate_group(&names, &table).map_err(|v| Error::InvalidGroup(v.to_string()))?;
        let n = names.len();
        let inverse = (0..n)
            .map(|a| (0..n).find(|&b| table[a][b] == 0).expect("validated"))
            .collect();
        Ok(GroupTable {
            names,
            table: table.concat(),
            inverse,
        })
    }

    /// Cyclic group of order `n` with elements `1, g, g^2, ...` for generator name `g`.
    pub fn cyclic(n: usize, generator: &str) -> Self {
        assert!(n > 0, "cyclic group of order zero");
        let names = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => generator.to_string(),
                _ => format!("{generator}^{k}"),
            })
            .collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Self::new(names, table).expect("cyclic table is a group")
    }

    pub fn trivial() -> Self {
        Self::cyclic(1, "g")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    /// The table as nested rows of indices.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order())
            .map(|c| c.to_vec())
            .collect()
    }

    /// All pairs `(a, b)` in index order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.order();
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect()
    }

    /// All triples `(a, b, c)` in index order.
    pub fn triples(&self) -> Vec<(usize, usize, usize)> {
        let n = self.order();
        (0..n)
            .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: &[&str]) -> Vec<String> {
        n.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn cyclic_group_arithmetic() {
        let g = GroupTable::cyclic(6, "u");
        assert_eq!(g.mul(4, 5), 3);
        assert_eq!(g.inv(2), 4);
        assert_eq!(g.name(3), "u^3");
        assert_eq!(g.index_of("u").unwrap(), 1);
        assert!(g.index_of("v").is_err());
    }

    #[test]
    fn non_associative_table_names_a_triple() {
        // a loop of order 5 that is not a group
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = validate_group(&names(&["e", "a", "b", "c", "d"]), &t).unwrap_err();
        assert!(
            matches!(err, GroupViolation::NotAssociative { .. }),
            "{err}"
        );
    }

    #[test]
    fn identity_must_come_first() {
        let t = vec![vec![1, 0], vec![0, 1]];
        let err = validate_group(&names(&["a", "e"]), &t).unwrap_err();
        assert!(matches!(err, GroupViolation::IdentityNotFirst { .. }));
        assert!(GroupTable::new(names(&["a", "e"]), t).is_err());
    }

    #[test]
    fn out_of_range_entry() {
        let t = vec![vec![0, 1], vec![1, 2]];
        assert!(matches!(
            validate_group(&names(&["e", "a"]), &t),
            Err(GroupViolation::NotClosed { .. })
        ));
    }
}
