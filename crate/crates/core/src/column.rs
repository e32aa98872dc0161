//! Single-column theory: the one column condition, splitting into left and
//! right columns, coadmissibility and the bijection `Φ` from admissible to
//! coadmissible columns.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::letter::Letter;

/// A strictly increasing sequence of letters of `[±n]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Column {
    n: usize,
    letters: Vec<Letter>,
}

/// Outcome of [`Column::check_1cc`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OneCcReport {
    pub admissible: bool,
    /// Minimal `z` at which the condition breaks; `None` iff admissible.
    pub break_letter: Option<u32>,
}

/// The left and right columns `ℓC` and `rC` of an admissible column.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SplitPair {
    pub left: Column,
    pub right: Column,
}

impl Column {
    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        for &l in &letters {
            Letter::new(l.value(), n)?;
        }
        if letters.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotIncreasing(format!("{letters:?}")));
        }
        Ok(Column { n, letters })
    }

    /// Builds a column from signed integers.
    pub fn from_values(n: usize, values: &[i32]) -> Result<Self> {
        let letters = values
            .iter()
            .map(|&v| Letter::new(v, n))
            .collect::<Result<Vec<_>>>()?;
        Column::new(n, letters)
    }

    /// Builds a column from any collection of distinct letters, sorting them.
    pub fn from_unsorted(n: usize, mut letters: Vec<Letter>) -> Result<Self> {
        letters.sort_unstable();
        Column::new(n, letters)
    }

    pub fn empty(n: usize) -> Self {
        Column {
            n,
            letters: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn values(&self) -> Vec<i32> {
        self.letters.iter().map(|l| l.value()).collect()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn contains(&self, l: Letter) -> bool {
        self.letters.binary_search(&l).is_ok()
    }

    /// True if `i` or `ī` occurs.
    pub fn contains_abs(&self, i: u32) -> bool {
        self.letters.iter().any(|l| l.abs() == i)
    }

    pub fn is_subset_of(&self, other: &Column) -> bool {
        self.letters.iter().all(|&l| other.contains(l))
    }

    /// Unbarred `z` such that both `z` and `z̄` occur, increasing.
    pub fn symmetric_pairs(&self) -> Vec<u32> {
        self.letters
            .iter()
            .filter(|l| !l.is_barred() && self.contains(l.bar()))
            .map(|l| l.abs())
            .collect()
    }

    pub fn has_symmetric_pair(&self) -> bool {
        !self.symmetric_pairs().is_empty()
    }

    /// Returns a copy with `l` inserted, or `None` if it is already present.
    pub fn with(&self, l: Letter) -> Option<Column> {
        match self.letters.binary_search(&l) {
            Ok(_) => None,
            Err(pos) => {
                let mut letters = self.letters.clone();
                letters.insert(pos, l);
                Some(Column { n: self.n, letters })
            }
        }
    }

    /// Returns a copy with `l` removed, or `None` if it is absent.
    pub fn without(&self, l: Letter) -> Option<Column> {
        let pos = self.letters.binary_search(&l).ok()?;
        let mut letters = self.letters.clone();
        letters.remove(pos);
        Some(Column { n: self.n, letters })
    }

    /// Checks the one column condition: for every symmetric pair with `i` in
    /// row `a` from the top and `ī` in row `b` from the bottom, `a + b ≤ i`.
    pub fn check_1cc(&self) -> OneCcReport {
        // a + b is the number of entries with absolute value ≤ z
        let break_letter = self
            .symmetric_pairs()
            .into_iter()
            .find(|&z| self.letters.iter().filter(|l| l.abs() <= z).count() > z as usize);
        OneCcReport {
            admissible: break_letter.is_none(),
            break_letter,
        }
    }

    pub fn is_admissible(&self) -> bool {
        self.check_1cc().admissible
    }

    /// Runs the greedy construction of the witness set `J`, returning the
    /// pairs `(z_i, t_i)` with `z_1 > z_2 > …`, or `None` when some `t_i`
    /// does not exist.
    pub fn split_witness(&self) -> Option<Vec<(u32, u32)>> {
        let mut out = Vec::new();
        let mut bound = u32::MAX;
        for z in self.symmetric_pairs().into_iter().rev() {
            let below = bound.min(z);
            let t = (1..below).rev().find(|&t| !self.contains_abs(t))?;
            out.push((z, t));
            bound = t;
        }
        Some(out)
    }

    /// Splits an admissible column into `(ℓC, rC)`.
    pub fn split(&self) -> Result<SplitPair> {
        let report = self.check_1cc();
        let witness = self.split_witness();
        if let Some(z) = report.break_letter {
            return Err(Error::NotAdmissible { break_letter: z });
        }
        let witness = witness.ok_or(Error::NoSplitWitness)?;
        let mut left = self.letters.clone();
        let mut right = self.letters.clone();
        for &(z, t) in &witness {
            for l in left.iter_mut() {
                if *l == Letter::unbarred(z) {
                    *l = Letter::unbarred(t);
                }
            }
            for l in right.iter_mut() {
                if *l == Letter::barred(z) {
                    *l = Letter::barred(t);
                }
            }
        }
        left.sort_unstable();
        right.sort_unstable();
        Ok(SplitPair {
            left: Column {
                n: self.n,
                letters: left,
            },
            right: Column {
                n: self.n,
                letters: right,
            },
        })
    }

    /// For every pair with `i` in row `a` and `ī` in row `b`, both counted
    /// from the top: `b − a ≤ n − i`.
    pub fn is_coadmissible(&self) -> bool {
        self.symmetric_pairs().into_iter().all(|i| {
            let a = self.row_of(Letter::unbarred(i));
            let b = self.row_of(Letter::barred(i));
            b - a <= self.n - i as usize
        })
    }

    /// 1-indexed row of a letter known to be present.
    fn row_of(&self, l: Letter) -> usize {
        self.letters.binary_search(&l).expect("letter present") + 1
    }

    /// `Φ(C)`: unbarred part of `ℓC` together with the barred part of `rC`.
    pub fn phi(&self) -> Result<Column> {
        let SplitPair { left, right } = self.split()?;
        let letters = left
            .letters
            .iter()
            .filter(|l| !l.is_barred())
            .chain(right.letters.iter().filter(|l| l.is_barred()))
            .copied()
            .collect();
        Ok(Column { n: self.n, letters })
    }

    /// `Φ⁻¹(C)` for a coadmissible column.
    ///
    /// Mirror image of the splitting greedy: the symmetric pairs `t` of the
    /// coadmissible column are visited from the smallest up and each is sent to
    /// the smallest free `z > max(t, previous z)`.
    pub fn phi_inverse(&self) -> Result<Column> {
        if !self.is_coadmissible() {
            return Err(Error::NotCoadmissible);
        }
        let mut used: Vec<u32> = self.letters.iter().map(|l| l.abs()).collect();
        let mut floor = 0;
        let mut swaps = Vec::new();
        for t in self.symmetric_pairs() {
            let start = floor.max(t) + 1;
            let z = (start..=self.n as u32)
                .find(|z| !used.contains(z))
                .ok_or(Error::NotCoadmissible)?;
            used.push(z);
            swaps.push((t, z));
            floor = z;
        }
        let mut letters = self.letters.clone();
        for &(t, z) in &swaps {
            for l in letters.iter_mut() {
                if l.abs() == t {
                    *l = if l.is_barred() {
                        Letter::barred(z)
                    } else {
                        Letter::unbarred(z)
                    };
                }
            }
        }
        letters.sort_unstable();
        Ok(Column { n: self.n, letters })
    }

    /// Every column of `[±n]` with `len` letters, in lexicographic order.
    pub fn all_of_length(n: usize, len: usize) -> Vec<Column> {
        fn go(n: usize, start: usize, len: usize, cur: &mut Vec<Letter>, out: &mut Vec<Column>) {
            if cur.len() == len {
                out.push(Column {
                    n,
                    letters: cur.clone(),
                });
                return;
            }
            let remaining = len - cur.len();
            for rank in start..=(2 * n + 1 - remaining) {
                cur.push(Letter::from_rank(rank, n));
                go(n, rank + 1, len, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if len <= 2 * n {
            go(n, 1, len, &mut Vec::new(), &mut out);
        }
        out
    }

    /// Every admissible column of `[±n]` with `len` letters.
    pub fn admissible_of_length(n: usize, len: usize) -> Vec<Column> {
        Column::all_of_length(n, len)
            .into_iter()
            .filter(Column::is_admissible)
            .collect()
    }
}

impl fmt::Debug for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.letters)
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}
