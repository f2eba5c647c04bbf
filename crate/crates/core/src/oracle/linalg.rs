//! Incremental fraction-free row echelon form over ℤ with sparse rows.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::Rational;

pub(crate) type SparseRow = BTreeMap<usize, BigInt>;

/// Scales a rational row to a primitive integer row with positive leading entry.
pub(crate) fn integer_row(entries: impl IntoIterator<Item = (usize, Rational)>) -> SparseRow {
    let entries: Vec<(usize, Rational)> = entries.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    let den = entries.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let row: SparseRow = entries
        .into_iter()
        .map(|(j, c)| (j, c.numer() * (&den / c.denom())))
        .collect();
    make_primitive(row)
}

fn make_primitive(mut row: SparseRow) -> SparseRow {
    let g = row.values().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return row;
    }
    let negate = row.values().next().is_some_and(|v| v.is_negative());
    let g = if negate { -g } else { g };
    if !g.is_one() {
        for v in row.values_mut() {
            *v = &*v / &g;
        }
    }
    row
}

/// Echelon basis keyed by leading (smallest) column index.
#[derive(Default)]
pub(crate) struct Echelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    /// Reduces `row` against the basis and keeps it if independent; returns its pivot column.
    pub(crate) fn insert(&mut self, mut row: SparseRow) -> Option<usize> {
        loop {
            let (&lead, lead_val) = row.iter().next()?;
            let Some(piv) = self.pivots.get(&lead) else {
                let row = make_primitive(row);
                self.pivots.insert(lead, row);
                return Some(lead);
            };
            let p = &piv[&lead];
            let g = p.gcd(lead_val);
            let (a, b) = (p / &g, lead_val / &g);
            // a·row − b·piv clears the leading entry
            let mut next = SparseRow::new();
            for (&j, v) in &row {
                next.insert(j, v * &a);
            }
            for (&j, v) in piv {
                let e = next.entry(j).or_insert_with(BigInt::zero);
                *e -= v * &b;
            }
            next.retain(|_, v| !v.is_zero());
            row = make_primitive(next);
        }
    }

    pub(crate) fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    pub(crate) fn rank(&self) -> usize {
        self.pivots.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn row(v: &[i64]) -> SparseRow {
        integer_row(v.iter().enumerate().map(|(j, &c)| (j, rat(c))))
    }

    #[test]
    fn rank_of_small_matrices() {
        let mut e = Echelon::new();
        assert_eq!(e.insert(row(&[2, 4, 6])), Some(0));
        assert_eq!(e.insert(row(&[1, 2, 3])), None);
        assert_eq!(e.insert(row(&[1, 3, 3])), Some(1));
        assert_eq!(e.insert(row(&[0, 0, 0])), None);
        assert_eq!(e.insert(row(&[5, 7, 9])), Some(2));
        assert_eq!(e.rank(), 3);
    }
}
