use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Multiplication table of a finite group. `table[a][b]` is the index of `a * b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyTable {
    table: Vec<Vec<usize>>,
    identity: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    names: Vec<String>,
}

impl CayleyTable {
    pub fn new(table: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let n = table.len();
        let names = (0..n)
            .map(|i| {
                if i == identity {
                    "e".to_string()
                } else {
                    format!("g{i}")
                }
            })
            .collect();
        Self::with_names(table, identity, names)
    }

    pub fn with_names(table: Vec<Vec<usize>>, identity: usize, names: Vec<String>) -> Result<Self> {
        let t = CayleyTable {
            table,
            identity,
            names,
        };
        t.check()?;
        Ok(t)
    }

    fn check(&self) -> Result<()> {
        let n = self.table.len();
        let bad = |msg: String| Err(Error::InvalidTable(msg));
        if n == 0 {
            return bad("empty table".into());
        }
        if self.identity >= n {
            return bad(format!("identity {} out of range", self.identity));
        }
        if self.names.len() != n {
            return bad(format!("{} names for {} elements", self.names.len(), n));
        }
        for (a, row) in self.table.iter().enumerate() {
            if row.len() != n {
                return bad(format!("row {a} has length {}", row.len()));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return bad(format!("entry {x} out of range in row {a}"));
            }
        }
        for a in 0..n {
            if self.table[self.identity][a] != a || self.table[a][self.identity] != a {
                return bad(format!("identity law fails at {a}"));
            }
            if !(0..n)
                .any(|b| self.table[a][b] == self.identity && self.table[b][a] == self.identity)
            {
                return bad(format!("{a} has no inverse"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]] {
                        return bad(format!("associativity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn trivial() -> Self {
        CayleyTable {
            table: vec![vec![0]],
            identity: 0,
            names: vec!["e".into()],
        }
    }

    /// `C_n` with elements `g^k` at index `k`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        let names = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        CayleyTable {
            table,
            identity: 0,
            names,
        }
    }

    /// Klein four-group `{e, a, b, c}` with `ab = c`.
    pub fn klein() -> Self {
        let table = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        let names = ["e", "a", "b", "c"].iter().map(|s| s.to_string()).collect();
        CayleyTable {
            table,
            identity: 0,
            names,
        }
    }

    /// `S_3` as permutations of `{0, 1, 2}` in lexicographic one-line order,
    /// composed as functions: `(s t)(x) = s(t(x))`.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("permutation");
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index([s[t[0]], s[t[1]], s[t[2]]]))
                    .collect()
            })
            .collect();
        let names = perms
            .iter()
            .map(|p| format!("{}{}{}", p[0], p[1], p[2]))
            .collect();
        CayleyTable {
            table,
            identity: 0,
            names,
        }
    }

    /// Direct product; `(a, b)` has index `a * |H| + b`.
    pub fn product(&self, other: &CayleyTable) -> Self {
        let (n, m) = (self.order(), other.order());
        let table = (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        let names = (0..n * m)
            .map(|x| format!("({},{})", self.names[x / m], other.names[x % m]))
            .collect();
        CayleyTable {
            table,
            identity: self.identity * m + other.identity,
            names,
        }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.table[a][b] == self.identity)
            .expect("validated table")
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_tables_are_groups() {
        for t in [
            CayleyTable::trivial(),
            CayleyTable::cyclic(5),
            CayleyTable::klein(),
            CayleyTable::symmetric3(),
        ] {
            CayleyTable::with_names(t.table.clone(), t.identity, t.names.clone()).unwrap();
        }
        assert!(!CayleyTable::symmetric3().is_abelian());
        assert!(CayleyTable::cyclic(2)
            .product(&CayleyTable::cyclic(3))
            .is_abelian());
    }

    #[test]
    fn rejects_non_groups() {
        assert!(CayleyTable::new(vec![vec![0, 1], vec![1, 1]], 0).is_err());
        assert!(CayleyTable::new(vec![vec![0, 1], vec![1]], 0).is_err());
        assert!(CayleyTable::new(vec![], 0).is_err());
        assert!(CayleyTable::new(vec![vec![0]], 3).is_err());
    }

    #[test]
    fn inverses() {
        let t = CayleyTable::symmetric3();
        for a in 0..6 {
            assert_eq!(t.mul(a, t.inverse(a)), t.identity());
        }
    }
}
