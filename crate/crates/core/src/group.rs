//! Finite groups given by multiplication tables.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Names accepted by [`FiniteGroup::builtin`].
pub const BUILTIN_GROUPS: [&str; 7] = ["z2", "z3", "z4", "z2xz2", "s3", "d4", "q8"];

/// On-disk group description: `table[a][b]` is the index of `a·b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub name: String,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl FiniteGroup {
    /// Validates the table exhaustively: closure, associativity, identity, inverses.
    pub fn from_spec(spec: &GroupSpec) -> Result<Self> {
        let n = spec.order;
        if n == 0 {
            return Err(Error::InvalidTable("order must be positive".into()));
        }
        if spec.table.len() != n || spec.table.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidTable(format!("table must be {n}x{n}")));
        }
        let table: Vec<usize> = spec.table.iter().flatten().copied().collect();
        if let Some(&bad) = table.iter().find(|&&x| x >= n) {
            return Err(Error::InvalidTable(format!("entry {bad} out of range")));
        }
        let mul = |a: usize, b: usize| table[a * n + b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(Error::InvalidTable(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mul(e, a) == a && mul(a, e) == a))
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| mul(a, b) == identity && mul(b, a) == identity)
                .ok_or_else(|| Error::InvalidTable(format!("element {a} has no inverse")))?;
            inverses.push(inv);
        }

        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let mut class: Vec<usize> = (0..n).map(|g| mul(mul(g, a), inverses[g])).collect();
            class.sort_unstable();
            class.dedup();
            for &x in &class {
                class_of[x] = classes.len();
            }
            classes.push(class);
        }

        Ok(Self {
            name: spec.name.clone(),
            order: n,
            table,
            identity,
            inverses,
            classes,
            class_of,
        })
    }

    pub fn builtin(name: &str) -> Result<Self> {
        let spec = match name {
            "z2" => cyclic(2),
            "z3" => cyclic(3),
            "z4" => cyclic(4),
            "z2xz2" => klein(),
            "s3" => permutation_closure(&[vec![1, 0, 2], vec![1, 2, 0]]),
            "d4" => permutation_closure(&[vec![1, 2, 3, 0], vec![0, 3, 2, 1]]),
            "q8" => quaternion(),
            other => return Err(Error::UnknownGroup(other.to_string())),
        };
        let spec = GroupSpec {
            name: name.to_string(),
            order: spec.len(),
            table: spec,
        };
        Self::from_spec(&spec)
    }

    pub fn to_spec(&self) -> GroupSpec {
        GroupSpec {
            name: self.name.clone(),
            order: self.order,
            table: self.table.chunks(self.order).map(|r| r.to_vec()).collect(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverse(g))
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.order
    }

    /// Conjugacy classes, ordered by smallest element; the identity class comes first.
    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn centralizer(&self, g: usize) -> Vec<usize> {
        self.elements()
            .filter(|&h| self.mul(g, h) == self.mul(h, g))
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.order
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }
}

fn cyclic(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

fn klein() -> Vec<Vec<usize>> {
    (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect()
}

/// Closure of a set of permutations; element 0 is the identity and the rest
/// follow in breadth-first order over the generators.
fn permutation_closure(generators: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let degree = generators[0].len();
    let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { (0..degree).map(|k| p[q[k]]).collect() };
    let mut elements: Vec<Vec<usize>> = vec![(0..degree).collect()];
    let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    index.insert(elements[0].clone(), 0);
    let mut cursor = 0;
    while cursor < elements.len() {
        for gen in generators {
            let next = compose(&elements[cursor], gen);
            if !index.contains_key(&next) {
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
        cursor += 1;
    }
    elements
        .iter()
        .map(|a| elements.iter().map(|b| index[&compose(a, b)]).collect())
        .collect()
}

/// Unit quaternions ±1, ±i, ±j, ±k; element `2u + s` is `(-1)^s · unit[u]`.
fn quaternion() -> Vec<Vec<usize>> {
    // unit_mul[u][v] = (sign, unit) for units 1, i, j, k.
    const UNIT_MUL: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    (0..8)
        .map(|a| {
            (0..8)
                .map(|b| {
                    let (s, u) = UNIT_MUL[a / 2][b / 2];
                    2 * u + ((a % 2 + b % 2 + s) % 2)
                })
                .collect()
        })
        .collect()
}
