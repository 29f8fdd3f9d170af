//! Exact sparse linear algebra over a field.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use crate::field::{Field, Scalar};

pub type SparseRow = BTreeMap<usize, Scalar>;

/// Row echelon form built incrementally. Each stored row has leading
/// coefficient one at its pivot column and is reduced against earlier
/// pivots.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    rows: Vec<SparseRow>,
    pivot_of: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new(field: Field) -> Echelon {
        Echelon {
            field,
            rows: Vec::new(),
            pivot_of: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Reduces `row` against the stored pivots.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let mut cursor = row.keys().next().copied();
        while let Some(col) = cursor {
            if let Some(&r) = self.pivot_of.get(&col) {
                let c = row.get(&col).cloned().unwrap();
                for (k, v) in &self.rows[r] {
                    let entry = row.entry(*k).or_insert_with(|| self.field.zero());
                    *entry = &*entry - &(&c * v);
                    if entry.is_zero() {
                        row.remove(k);
                    }
                }
            }
            cursor = row.range(col + 1..).next().map(|(k, _)| *k);
        }
        row
    }

    /// Adds a row; returns `true` when it was independent of the stored
    /// rows.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        let Some((&pivot, lead)) = row.iter().next() else {
            return false;
        };
        let inv = lead.inverse().unwrap();
        let row: SparseRow = row.iter().map(|(k, v)| (*k, v * &inv)).collect();
        self.pivot_of.insert(pivot, self.rows.len());
        self.rows.push(row);
        true
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }
}

/// Assigns consecutive column indices to arbitrary keys.
#[derive(Clone, Debug, Default)]
pub struct ColumnIndex<K: Eq + Hash + Clone> {
    map: HashMap<K, usize>,
}

impl<K: Eq + Hash + Clone> ColumnIndex<K> {
    pub fn new() -> Self {
        ColumnIndex { map: HashMap::new() }
    }

    pub fn index(&mut self, k: &K) -> usize {
        let n = self.map.len();
        *self.map.entry(k.clone()).or_insert(n)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// Rank of a matrix given as sparse rows.
pub fn rank(field: Field, rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut e = Echelon::new(field);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(field: Field, entries: &[(usize, i64)]) -> SparseRow {
        entries.iter().map(|(k, v)| (*k, field.from_i64(*v))).filter(|(_, v)| !v.is_zero()).collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        let f = Field::Rational;
        let rows = vec![
            row(f, &[(0, 1), (1, 2)]),
            row(f, &[(0, 2), (1, 4)]),
            row(f, &[(1, 1), (2, 1)]),
        ];
        assert_eq!(rank(f, rows), 2);
        let mut e = Echelon::new(f);
        e.insert(row(f, &[(0, 1), (1, 1)]));
        e.insert(row(f, &[(1, 1), (2, -1)]));
        assert!(e.contains(row(f, &[(0, 1), (2, 1)])));
        assert!(!e.contains(row(f, &[(2, 1)])));
    }

    #[test]
    fn rank_depends_on_characteristic() {
        let rows = |f: Field| vec![row(f, &[(0, 1), (1, 1)]), row(f, &[(0, 1), (1, -1)])];
        assert_eq!(rank(Field::Rational, rows(Field::Rational)), 2);
        assert_eq!(rank(Field::Prime(2), rows(Field::Prime(2))), 1);
    }
}
