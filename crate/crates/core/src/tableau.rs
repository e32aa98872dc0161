//! Skew tableaux over `[±n]`, the split form, the Kashiwara-Nakashima
//! condition, weights and key tableaux.
//!
//! A skew tableau is stored column by column. Column `j` (0-based here,
//! 1-based in every public cell coordinate) has `tops[j] = ν′_{j+1}` inner
//! cells above it and its letters fill rows `tops[j] + 1 ..= tops[j] + len`.

use std::fmt;
use std::ops::Deref;

use serde::Serialize;

use crate::column::{Column, SplitPair};
use crate::error::{Error, Result};
use crate::letter::{Cell, Letter, Partition, WeightVector};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkewTableau {
    n: usize,
    tops: Vec<usize>,
    columns: Vec<Column>,
}

/// Why a tableau failed [`SkewTableau::check_kn`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum KnViolation {
    ColumnNotAdmissible { column: usize, break_letter: u32 },
    SplitRowDecreases { row: usize, split_column: usize },
}

impl fmt::Display for KnViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnViolation::ColumnNotAdmissible {
                column,
                break_letter,
            } => {
                write!(
                    f,
                    "column {column} breaks the one column condition at {break_letter}"
                )
            }
            KnViolation::SplitRowDecreases { row, split_column } => write!(
                f,
                "row {row} of the split form decreases between split columns {} and {split_column}",
                split_column - 1
            ),
        }
    }
}

impl SkewTableau {
    /// `tops[j]` is the number of inner cells above column `j + 1`.
    pub fn new(n: usize, tops: Vec<usize>, columns: Vec<Column>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        if tops.len() != columns.len() {
            return Err(Error::InvalidShape(format!(
                "{} column offsets for {} columns",
                tops.len(),
                columns.len()
            )));
        }
        if let Some(c) = columns.iter().find(|c| c.rank() != n) {
            return Err(Error::InvalidShape(format!(
                "column {c} has rank {} instead of {n}",
                c.rank()
            )));
        }
        let mut t = SkewTableau { n, tops, columns };
        t.trim();
        t.check_shape()?;
        Ok(t)
    }

    /// A straight tableau with the given columns.
    pub fn straight(n: usize, columns: Vec<Column>) -> Result<Self> {
        SkewTableau::new(n, vec![0; columns.len()], columns)
    }

    /// Convenience constructor from signed integer columns.
    pub fn from_columns(n: usize, tops: Vec<usize>, columns: &[&[i32]]) -> Result<Self> {
        let cols = columns
            .iter()
            .map(|c| Column::from_values(n, c))
            .collect::<Result<Vec<_>>>()?;
        SkewTableau::new(n, tops, cols)
    }

    pub fn straight_from_columns(n: usize, columns: &[&[i32]]) -> Result<Self> {
        SkewTableau::from_columns(n, vec![0; columns.len()], columns)
    }

    pub fn empty(n: usize) -> Self {
        SkewTableau {
            n,
            tops: Vec::new(),
            columns: Vec::new(),
        }
    }

    /// Builds a tableau from rows, `None` marking inner cells.
    pub fn from_rows(n: usize, rows: &[Vec<Option<i32>>]) -> Result<Self> {
        let mut inner = Vec::with_capacity(rows.len());
        let mut outer = Vec::with_capacity(rows.len());
        for (r, row) in rows.iter().enumerate() {
            let dots = row.iter().take_while(|c| c.is_none()).count();
            if row[dots..].iter().any(Option::is_none) {
                return Err(Error::InvalidShape(format!(
                    "row {} has an inner cell after an entry",
                    r + 1
                )));
            }
            inner.push(dots);
            outer.push(row.len());
        }
        let inner =
            Partition::new(inner).map_err(|e| Error::InvalidShape(format!("inner shape: {e}")))?;
        let outer =
            Partition::new(outer).map_err(|e| Error::InvalidShape(format!("outer shape: {e}")))?;
        let tops = inner.conjugate().parts().to_vec();
        let bottoms = outer.conjugate();
        let mut columns = Vec::with_capacity(bottoms.len());
        let mut padded_tops = Vec::with_capacity(bottoms.len());
        for (j, &bottom) in bottoms.parts().iter().enumerate() {
            let top = tops.get(j).copied().unwrap_or(0);
            let values: Vec<i32> = (top..bottom)
                .map(|r| rows[r][j].expect("entry cell"))
                .collect();
            let column = Column::from_values(n, &values).map_err(|e| match e {
                Error::NotIncreasing(_) => {
                    Error::NotIncreasing(format!("column {} reads {values:?}", j + 1))
                }
                other => other,
            })?;
            columns.push(column);
            padded_tops.push(top);
        }
        SkewTableau::new(n, padded_tops, columns)
    }

    fn trim(&mut self) {
        while self.columns.last().is_some_and(Column::is_empty) && self.tops.last() == Some(&0) {
            self.columns.pop();
            self.tops.pop();
        }
    }

    fn check_shape(&self) -> Result<()> {
        for j in 1..self.columns.len() {
            if self.tops[j] > self.tops[j - 1] {
                return Err(Error::InvalidShape(format!(
                    "inner shape is not a partition at column {}",
                    j + 1
                )));
            }
            if self.bottom(j) > self.bottom(j - 1) {
                return Err(Error::InvalidShape(format!(
                    "outer shape is not a partition at column {}",
                    j + 1
                )));
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn column(&self, j: usize) -> &Column {
        &self.columns[j - 1]
    }

    /// Inner cells above each column.
    pub fn tops(&self) -> &[usize] {
        &self.tops
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    fn bottom(&self, j: usize) -> usize {
        self.tops[j] + self.columns[j].len()
    }

    pub fn column_lengths(&self) -> Vec<usize> {
        self.columns.iter().map(Column::len).collect()
    }

    pub fn num_cells(&self) -> usize {
        self.columns.iter().map(Column::len).sum()
    }

    pub fn num_rows(&self) -> usize {
        (0..self.columns.len())
            .map(|j| self.bottom(j))
            .max()
            .unwrap_or(0)
    }

    pub fn inner_shape(&self) -> Partition {
        Partition::new(self.tops.clone())
            .expect("checked shape")
            .conjugate()
    }

    pub fn outer_shape(&self) -> Partition {
        Partition::new((0..self.columns.len()).map(|j| self.bottom(j)).collect())
            .expect("checked shape")
            .conjugate()
    }

    pub fn is_straight(&self) -> bool {
        self.tops.iter().all(|&t| t == 0)
    }

    /// Entry at a 1-indexed cell, `None` for inner or absent cells.
    pub fn entry(&self, cell: Cell) -> Option<Letter> {
        let j = cell.col.checked_sub(1)?;
        let column = self.columns.get(j)?;
        let i = cell.row.checked_sub(self.tops[j] + 1)?;
        column.letters().get(i).copied()
    }

    /// Rows top to bottom; `None` marks an inner cell.
    pub fn rows(&self) -> Vec<Vec<Option<Letter>>> {
        (1..=self.num_rows())
            .map(|r| {
                (0..self.columns.len())
                    .take_while(|&j| self.bottom(j) >= r)
                    .map(|j| {
                        if r <= self.tops[j] {
                            None
                        } else {
                            self.entry(Cell::new(r, j + 1))
                        }
                    })
                    .collect()
            })
            .collect()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.columns
            .iter()
            .flat_map(|c| c.letters().iter().copied())
    }

    /// Cells of the inner shape with no inner cell below or to the right.
    pub fn inner_corners(&self) -> Vec<Cell> {
        (0..self.columns.len())
            .filter(|&j| self.tops[j] > 0 && self.tops.get(j + 1).is_none_or(|&t| t < self.tops[j]))
            .map(|j| Cell::new(self.tops[j], j + 1))
            .collect()
    }

    /// Cells that can be added to the outer shape.
    pub fn outer_corners(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for j in 0..=self.columns.len() {
            let bottom = if j < self.columns.len() {
                self.bottom(j)
            } else {
                0
            };
            let room = if j == 0 {
                usize::MAX
            } else {
                self.bottom(j - 1)
            };
            if bottom < room {
                out.push(Cell::new(bottom + 1, j + 1));
            }
        }
        out
    }

    /// Replaces each column `C` by the pair `ℓC rC`.
    pub fn split_form(&self) -> Result<SkewTableau> {
        let mut tops = Vec::with_capacity(2 * self.columns.len());
        let mut columns = Vec::with_capacity(2 * self.columns.len());
        for (j, c) in self.columns.iter().enumerate() {
            let SplitPair { left, right } = c
                .split()
                .map_err(|_| Error::ColumnNotAdmissible { column: j + 1 })?;
            tops.extend([self.tops[j]; 2]);
            columns.push(left);
            columns.push(right);
        }
        SkewTableau::new(self.n, tops, columns)
    }

    /// True when rows are weakly increasing; columns are strictly increasing
    /// by construction.
    pub fn is_semistandard(&self) -> bool {
        self.first_row_descent().is_none()
    }

    fn first_row_descent(&self) -> Option<(usize, usize)> {
        for j in 1..self.columns.len() {
            let lo = self.tops[j - 1].max(self.tops[j]) + 1;
            let hi = self.bottom(j - 1).min(self.bottom(j));
            for r in lo..=hi {
                if self.entry(Cell::new(r, j)) > self.entry(Cell::new(r, j + 1)) {
                    return Some((r, j + 1));
                }
            }
        }
        None
    }

    /// Kashiwara-Nakashima test: every column admissible and the split form
    /// semistandard.
    pub fn check_kn(&self) -> std::result::Result<(), KnViolation> {
        for (j, c) in self.columns.iter().enumerate() {
            if let Some(z) = c.check_1cc().break_letter {
                return Err(KnViolation::ColumnNotAdmissible {
                    column: j + 1,
                    break_letter: z,
                });
            }
        }
        let split = self.split_form().expect("columns admissible");
        match split.first_row_descent() {
            Some((row, split_column)) => Err(KnViolation::SplitRowDecreases { row, split_column }),
            None => Ok(()),
        }
    }

    pub fn is_kn(&self) -> bool {
        self.check_kn().is_ok()
    }

    pub fn weight(&self) -> WeightVector {
        WeightVector::of_letters(self.letters(), self.n)
    }

    pub fn has_barred_entry(&self) -> bool {
        self.letters().any(Letter::is_barred)
    }

    /// Parses the text format: one line per row, entries separated by
    /// spaces, barred letters as negative integers, inner cells as `.`;
    /// blank lines and `#` comments are skipped.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut rows = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|tok| {
                    if tok == "." {
                        Ok(None)
                    } else {
                        tok.parse::<i32>().map(Some).map_err(|_| Error::Parse {
                            line: i + 1,
                            message: format!("unexpected token {tok:?}"),
                        })
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        SkewTableau::from_rows(n, &rows)
    }

    /// Renders the text format. With `bars`, barred letters use an overline.
    pub fn to_text(&self, bars: bool) -> String {
        let mut out = String::new();
        for row in self.rows() {
            let cells: Vec<String> = row
                .iter()
                .map(|c| match c {
                    None => ".".to_string(),
                    Some(l) if bars => l.to_overbar_string(),
                    Some(l) => l.to_string(),
                })
                .collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    pub(crate) fn into_parts(self) -> (usize, Vec<usize>, Vec<Column>) {
        (self.n, self.tops, self.columns)
    }
}

impl fmt::Debug for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SkewTableau(n={}, tops={:?}, columns={:?})",
            self.n, self.tops, self.columns
        )
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(false))
    }
}

/// A skew tableau known to satisfy the Kashiwara-Nakashima condition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KnTableau(SkewTableau);

impl KnTableau {
    pub fn new(t: SkewTableau) -> Result<Self> {
        t.check_kn().map_err(|v| Error::NotKn(v.to_string()))?;
        Ok(KnTableau(t))
    }

    pub(crate) fn new_unchecked(t: SkewTableau) -> Self {
        debug_assert!(t.is_kn(), "{t:?}");
        KnTableau(t)
    }

    pub fn as_skew(&self) -> &SkewTableau {
        &self.0
    }

    pub fn into_inner(self) -> SkewTableau {
        self.0
    }

    /// Shape of a straight tableau.
    pub fn shape(&self) -> Partition {
        self.0.outer_shape()
    }
}

impl Deref for KnTableau {
    type Target = SkewTableau;

    fn deref(&self) -> &SkewTableau {
        &self.0
    }
}

/// A straight KN tableau with nested column sets and no symmetric pair in
/// any column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KeyTableau(KnTableau);

impl KeyTableau {
    pub fn new(t: KnTableau) -> Result<Self> {
        if !is_key(&t) {
            return Err(Error::NotKey);
        }
        Ok(KeyTableau(t))
    }

    pub fn as_kn(&self) -> &KnTableau {
        &self.0
    }

    pub fn into_inner(self) -> KnTableau {
        self.0
    }
}

impl Deref for KeyTableau {
    type Target = SkewTableau;

    fn deref(&self) -> &SkewTableau {
        &self.0 .0
    }
}

/// Straight, each column's letters contained in the previous column, and no
/// column holding both `i` and `ī`.
pub fn is_key(t: &SkewTableau) -> bool {
    t.is_straight()
        && t.columns().iter().all(|c| !c.has_symmetric_pair())
        && t.columns().windows(2).all(|w| w[1].is_subset_of(&w[0]))
}

/// The key tableau whose weight is `v`: column `j` holds `sign(v_i)·i` for
/// every `i` with `|v_i| ≥ j`.
pub fn key_from_vector(v: &[i32], n: usize) -> Result<KeyTableau> {
    if v.len() != n {
        return Err(Error::InvalidOrbitVector(format!(
            "expected {n} entries, got {}",
            v.len()
        )));
    }
    let width = v
        .iter()
        .map(|x| x.unsigned_abs() as usize)
        .max()
        .unwrap_or(0);
    let columns = (1..=width)
        .map(|j| {
            let letters = v
                .iter()
                .enumerate()
                .filter(|(_, x)| x.unsigned_abs() as usize >= j)
                .map(|(i, &x)| {
                    if x > 0 {
                        Letter::unbarred(i as u32 + 1)
                    } else {
                        Letter::barred(i as u32 + 1)
                    }
                })
                .collect();
            Column::from_unsorted(n, letters)
        })
        .collect::<Result<Vec<_>>>()?;
    let t = SkewTableau::straight(n, columns)?;
    Ok(KeyTableau(KnTableau::new(t)?))
}

/// Like [`key_from_vector`], additionally requiring `v` to lie in the
/// signed-permutation orbit of `lambda`.
pub fn key_in_orbit(v: &[i32], lambda: &Partition, n: usize) -> Result<KeyTableau> {
    if WeightVector(v.to_vec()).dominant() != *lambda {
        return Err(Error::InvalidOrbitVector(format!(
            "{v:?} is not in the orbit of {lambda}"
        )));
    }
    key_from_vector(v, n)
}

/// Every vector `v ∈ ℤⁿ` whose absolute values rearrange to `lambda`.
pub fn orbit_vectors(lambda: &Partition, n: usize) -> Vec<Vec<i32>> {
    let mut parts: Vec<i32> = lambda.parts().iter().map(|&p| p as i32).collect();
    if parts.len() > n {
        return Vec::new();
    }
    parts.resize(n, 0);
    let mut out = std::collections::BTreeSet::new();
    fn go(
        parts: &[i32],
        used: &mut Vec<bool>,
        cur: &mut Vec<i32>,
        out: &mut std::collections::BTreeSet<Vec<i32>>,
    ) {
        if cur.len() == parts.len() {
            out.insert(cur.clone());
            return;
        }
        for i in 0..parts.len() {
            if used[i] {
                continue;
            }
            used[i] = true;
            let signs: &[i32] = if parts[i] == 0 { &[1] } else { &[1, -1] };
            for &s in signs {
                cur.push(s * parts[i]);
                go(parts, used, cur, out);
                cur.pop();
            }
            used[i] = false;
        }
    }
    go(&parts, &mut vec![false; n], &mut Vec::new(), &mut out);
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(n: usize, cols: &[&[i32]]) -> SkewTableau {
        SkewTableau::straight_from_columns(n, cols).unwrap()
    }

    #[test]
    fn split_form_examples() {
        let t = st(3, &[&[2, 3, -3], &[2, 3]]);
        let expected = st(3, &[&[1, 2, -3], &[2, 3, -1], &[2, 3], &[2, 3]]);
        assert_eq!(t.split_form().unwrap(), expected);

        let single = st(4, &[&[2, 4, -2]]);
        assert_eq!(
            single.split_form().unwrap(),
            st(4, &[&[1, 4, -2], &[2, 4, -1]])
        );

        let plain = st(3, &[&[1, 2], &[2]]);
        assert_eq!(
            plain.split_form().unwrap(),
            st(3, &[&[1, 2], &[1, 2], &[2], &[2]])
        );
    }

    #[test]
    fn split_form_keeps_skew_offsets() {
        let t = SkewTableau::parse(". 2\n1 3\n2 -1\n", 3).unwrap();
        let s = t.split_form().unwrap();
        assert_eq!(s.tops(), &[1, 1, 0, 0]);
        assert_eq!(s.to_text(false), ". . 2 2\n1 1 3 3\n2 2 -1 -1\n");
    }

    #[test]
    fn kn_examples() {
        assert!(st(3, &[&[2, 3, -3], &[2, 3]]).is_kn());
        assert_eq!(
            st(3, &[&[1, 2, -1]]).check_kn(),
            Err(KnViolation::ColumnNotAdmissible {
                column: 1,
                break_letter: 1
            })
        );
        // semistandard, but rC_1 = [2,3,-1] sits left of lC_2 = [1,2,-3]
        let t = st(3, &[&[2, 3, -3], &[2, 3, -3]]);
        assert!(t.is_semistandard());
        assert_eq!(
            t.check_kn(),
            Err(KnViolation::SplitRowDecreases {
                row: 1,
                split_column: 3
            })
        );
    }

    #[test]
    fn weight_examples() {
        assert_eq!(st(3, &[&[2, 3, -3], &[2, 3]]).weight().0, vec![0, 2, 1]);
        assert_eq!(SkewTableau::empty(3).weight().0, vec![0, 0, 0]);
        assert_eq!(
            st(3, &[&[3, -2, -1], &[3, -1], &[-1]]).weight().0,
            vec![-3, -1, 2]
        );
    }

    #[test]
    fn key_examples() {
        assert!(is_key(&st(3, &[&[3, -2, -1], &[3, -1], &[-1]])));
        assert!(!is_key(&st(3, &[&[1, 3, -3], &[3, -3], &[-1]])));
        assert!(is_key(&st(3, &[&[2, -3]])));
    }

    #[test]
    fn key_from_vector_examples() {
        let k = key_from_vector(&[-3, -1, 2], 3).unwrap();
        assert_eq!(*k, st(3, &[&[3, -2, -1], &[3, -1], &[-1]]));
        let k = key_from_vector(&[2, 2, 1], 3).unwrap();
        assert_eq!(*k, st(3, &[&[1, 2, 3], &[1, 2]]));
        let k = key_from_vector(&[0, -1, 0], 3).unwrap();
        assert_eq!(*k, st(3, &[&[-2]]));
        assert!(matches!(
            key_from_vector(&[1, 2], 3),
            Err(Error::InvalidOrbitVector(_))
        ));
        let lambda = Partition::new(vec![2, 1]).unwrap();
        assert!(key_in_orbit(&[0, -2, 1], &lambda, 3).is_ok());
        assert!(matches!(
            key_in_orbit(&[0, -2, 2], &lambda, 3),
            Err(Error::InvalidOrbitVector(_))
        ));
    }

    #[test]
    fn orbit_sizes() {
        // signed permutations of (2,1,0): 3! * 4 distinct vectors
        let lambda = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(orbit_vectors(&lambda, 3).len(), 24);
        let lambda = Partition::new(vec![1, 1]).unwrap();
        assert_eq!(orbit_vectors(&lambda, 2).len(), 4);
        assert!(orbit_vectors(&Partition::new(vec![1, 1, 1]).unwrap(), 2).is_empty());
    }

    #[test]
    fn text_round_trip_and_shapes() {
        let text = ". . 3\n1 -3 -1\n3\n-3\n";
        let t = SkewTableau::parse(text, 3).unwrap();
        assert_eq!(t.to_text(false), text);
        assert_eq!(t.inner_shape().parts(), &[2]);
        assert_eq!(t.outer_shape().parts(), &[3, 3, 1, 1]);
        assert_eq!(t.column_lengths(), vec![3, 1, 2]);
        assert_eq!(t.entry(Cell::new(2, 2)), Some(Letter::barred(3)));
        assert_eq!(t.entry(Cell::new(1, 2)), None);
        assert_eq!(t.inner_corners(), vec![Cell::new(1, 2)]);
        assert_eq!(
            t.outer_corners(),
            vec![Cell::new(5, 1), Cell::new(3, 2), Cell::new(1, 4)]
        );
        let with_comments = "# skew\n\n. . 3\n1 -3 -1\n\n3\n-3\n";
        assert_eq!(SkewTableau::parse(with_comments, 3).unwrap(), t);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            SkewTableau::parse("1 x\n", 3),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            SkewTableau::parse("1 . 2\n", 3),
            Err(Error::InvalidShape(_))
        ));
        assert!(matches!(
            SkewTableau::parse("1\n2 3\n", 3),
            Err(Error::InvalidShape(_))
        ));
        assert!(matches!(
            SkewTableau::parse("1\n1\n", 3),
            Err(Error::NotIncreasing(_))
        ));
        assert!(matches!(
            SkewTableau::parse("4\n", 3),
            Err(Error::InvalidLetter { .. })
        ));
        assert!(SkewTableau::parse(". .\n.\n1\n", 3).is_ok());
        assert_eq!(SkewTableau::parse("", 2).unwrap(), SkewTableau::empty(2));
    }

    #[test]
    fn overbar_rendering() {
        let t = st(3, &[&[1, -2]]);
        assert_eq!(t.to_text(true), "1\n2\u{0304}\n");
    }
}
