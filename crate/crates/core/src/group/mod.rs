//! Finite groups given by full multiplication tables.
//!
//! Element `0` is always the identity. Builders relabel a table whose
//! identity sits elsewhere.

mod classes;
mod families;
mod spec;

use std::collections::BTreeSet;

use thiserror::Error;

pub use classes::{class_structure, ClassStructure};
pub use families::{abelian_2group, cyclic, dihedral, extraspecial_32_plus};
pub use spec::{parse_word, GroupSpec, NamedGroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("multiplication table is empty")]
    Empty,
    #[error("multiplication table is not square (row {row} has {len} entries, expected {expected})")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("table entry ({row}, {col}) = {value} is out of range")]
    OutOfRange { row: usize, col: usize, value: usize },
    #[error("no identity element")]
    NoIdentity,
    #[error("not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("subset is not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not normal: {conjugator} * {element} * {conjugator}^-1 leaves it")]
    NotNormal { element: usize, conjugator: usize },
    #[error("bad group description: {0}")]
    Parse(String),
}

/// A word in the generators: `(generator index, exponent)` pairs.
pub type Word = Vec<(usize, i32)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    mult: Vec<Vec<usize>>,
    inv: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Validates `table` as a group law. If the identity is not element 0
    /// the two are swapped.
    pub fn build_from_table(table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        Self::build_labeled(table, None)
    }

    pub fn build_labeled(mut table: Vec<Vec<usize>>, mut labels: Option<Vec<String>>) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != n {
                return Err(GroupError::NotSquare { row, len: r.len(), expected: n });
            }
            if let Some((col, &value)) = r.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(GroupError::OutOfRange { row, col, value });
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or(GroupError::NoIdentity)?;
        if e != 0 {
            let swap = |x: usize| if x == e { 0 } else if x == 0 { e } else { x };
            let mut t = vec![vec![0; n]; n];
            for a in 0..n {
                for b in 0..n {
                    t[swap(a)][swap(b)] = swap(table[a][b]);
                }
            }
            table = t;
            if let Some(l) = labels.as_mut() {
                l.swap(0, e);
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let mut inv = vec![0; n];
        for g in 0..n {
            inv[g] = (0..n).find(|&h| table[g][h] == 0 && table[h][g] == 0).ok_or(GroupError::NoInverse(g))?;
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(GroupError::InvalidParameter(format!("{} labels for {n} elements", l.len())));
            }
        }
        Ok(FiniteGroup { mult: table, inv, labels })
    }

    pub fn order(&self) -> usize {
        self.mult.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mult
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inv(&self, g: usize) -> usize {
        self.inv[g]
    }

    pub fn pow(&self, g: usize, e: i64) -> usize {
        let base = if e < 0 { self.inv[g] } else { g };
        (0..e.unsigned_abs()).fold(0, |acc, _| self.mult[acc][base])
    }

    pub fn label(&self, g: usize) -> String {
        match &self.labels {
            Some(l) => l[g].clone(),
            None => g.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GroupError> {
        if labels.len() != self.order() {
            return Err(GroupError::InvalidParameter(format!("{} labels for {} elements", labels.len(), self.order())));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mult[x][g];
            k += 1;
        }
        k
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv[a], self.inv[b]), self.mul(a, b))
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(x, g), self.inv[x])
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mult[a][b] == self.mult[b][a]))
    }

    pub fn center(&self) -> Vec<usize> {
        let n = self.order();
        (0..n).filter(|&z| (0..n).all(|g| self.mult[z][g] == self.mult[g][z])).collect()
    }

    /// Subgroup generated by `gens`, sorted.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::from([0]);
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set.into_iter().collect()
    }

    pub fn eval_word(&self, word: &[(usize, i32)], generators: &[usize]) -> usize {
        word.iter().fold(0, |acc, &(s, e)| self.mul(acc, self.pow(generators[s], e as i64)))
    }

    /// Coset group `G / N` with the projection `G -> G/N`. Cosets are
    /// numbered by their least element.
    pub fn quotient_by_normal(&self, normal: &[usize]) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
        let n = self.order();
        let set: BTreeSet<usize> = normal.iter().copied().collect();
        if let Some(&bad) = set.iter().find(|&&x| x >= n) {
            return Err(GroupError::NotSubgroup(format!("element {bad} out of range")));
        }
        if !set.contains(&0) {
            return Err(GroupError::NotSubgroup("identity missing".into()));
        }
        for &a in &set {
            if !set.contains(&self.inv[a]) {
                return Err(GroupError::NotSubgroup(format!("inverse of {a} missing")));
            }
            for &b in &set {
                if !set.contains(&self.mul(a, b)) {
                    return Err(GroupError::NotSubgroup(format!("{a}*{b} missing")));
                }
            }
        }
        for &h in &set {
            for x in 0..n {
                if !set.contains(&self.conjugate(h, x)) {
                    return Err(GroupError::NotNormal { element: h, conjugator: x });
                }
            }
        }
        let mut proj = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if proj[g] == usize::MAX {
                let c = reps.len();
                reps.push(g);
                for &h in &set {
                    proj[self.mul(g, h)] = c;
                }
            }
        }
        let q = reps.len();
        let table: Vec<Vec<usize>> = (0..q).map(|i| (0..q).map(|j| proj[self.mul(reps[i], reps[j])]).collect()).collect();
        let labels = self.labels.as_ref().map(|l| reps.iter().map(|&r| l[r].clone()).collect());
        Ok((FiniteGroup::build_labeled(table, labels)?, proj))
    }

    /// Direct product; element `(x, y)` has index `x + |G| * y`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (self.order(), other.order());
        let table = (0..n * m)
            .map(|a| (0..n * m).map(|b| self.mul(a % n, b % n) + n * other.mul(a / n, b / n)).collect())
            .collect();
        let labels = match (&self.labels, &other.labels) {
            (Some(l1), Some(l2)) => Some((0..n * m).map(|a| format!("({},{})", l1[a % n], l2[a / n])).collect()),
            _ => None,
        };
        FiniteGroup::build_labeled(table, labels).expect("product of groups is a group")
    }
}

/// Generators with defining relations `lhs = rhs`; `relators()` turns them
/// into words equal to the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub name: String,
    pub generator_names: Vec<String>,
    pub relations: Vec<(Word, Word)>,
    /// Table elements the generators map to, when the presentation came
    /// with a group.
    pub generator_elements: Vec<usize>,
}

impl GroupPresentation {
    pub fn num_generators(&self) -> usize {
        self.generator_names.len()
    }

    /// `lhs * rhs^-1` for every relation.
    pub fn relators(&self) -> Vec<Word> {
        self.relations
            .iter()
            .map(|(l, r)| {
                let mut w = l.clone();
                w.extend(r.iter().rev().map(|&(s, e)| (s, -e)));
                w
            })
            .collect()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generator_names.iter().position(|n| n == name)
    }

    pub fn format_word(&self, w: &[(usize, i32)]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter()
            .map(|&(s, e)| if e == 1 { self.generator_names[s].clone() } else { format!("{}^{e}", self.generator_names[s]) })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Checks every relation in `g` under `generator_elements`.
    pub fn holds_in(&self, g: &FiniteGroup) -> bool {
        self.generator_elements.len() == self.num_generators()
            && self.relations.iter().all(|(l, r)| g.eval_word(l, &self.generator_elements) == g.eval_word(r, &self.generator_elements))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4() -> Vec<Vec<usize>> {
        (0..4).map(|g| (0..4).map(|h| (g + h) % 4).collect()).collect()
    }

    #[test]
    fn small_tables() {
        assert_eq!(FiniteGroup::build_from_table(vec![vec![0]]).unwrap().order(), 1);
        let z2 = FiniteGroup::build_from_table(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(z2.inv(1), 1);
        let g = FiniteGroup::build_from_table(z4()).unwrap();
        assert_eq!(class_structure(&g).class_reps.len(), 4);
    }

    #[test]
    fn identity_is_moved_to_zero() {
        // Z/2 with identity at index 1
        let g = FiniteGroup::build_from_table(vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.mul(1, 1), 0);
    }

    #[test]
    fn rejects_non_groups() {
        assert_eq!(FiniteGroup::build_from_table(vec![vec![0, 1], vec![1, 1]]), Err(GroupError::NoInverse(1)));
        assert_eq!(FiniteGroup::build_from_table(vec![vec![1, 1], vec![1, 1]]), Err(GroupError::NoIdentity));
        // a loop of order 5 with identity and inverses that is not associative
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::build_from_table(t), Err(GroupError::NotAssociative(..))));
        assert!(matches!(FiniteGroup::build_from_table(vec![vec![0, 2]]), Err(GroupError::NotSquare { .. })));
        assert!(matches!(FiniteGroup::build_from_table(vec![vec![0, 2], vec![1, 0]]), Err(GroupError::OutOfRange { .. })));
    }

    #[test]
    fn quotient_checks() {
        let g = FiniteGroup::build_from_table(z4()).unwrap();
        let (q, proj) = g.quotient_by_normal(&[0, 2]).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(proj, vec![0, 1, 0, 1]);
        let (same, _) = g.quotient_by_normal(&[0]).unwrap();
        assert_eq!(same, g);
        assert!(matches!(g.quotient_by_normal(&[0, 1]), Err(GroupError::NotSubgroup(_))));
        let (d8, _) = dihedral(4).unwrap();
        // <s> is not normal in D8
        assert!(matches!(d8.quotient_by_normal(&[0, 4]), Err(GroupError::NotNormal { .. })));
    }
}
