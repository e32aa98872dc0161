//! The signed alphabet `[±n]` and the small value types shared by every
//! other module.
//!
//! A barred letter `ī` is stored as `-i`. The alphabet is ordered
//! `1 < 2 < … < n < n̄ < … < 1̄`, which is *not* the integer order, so
//! [`Letter`] implements [`Ord`] through its rank rather than deriving it.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One symbol of `[±n]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Letter(i32);

impl Letter {
    /// Builds a letter, checking `1 ≤ |value| ≤ n`.
    pub fn new(value: i32, n: usize) -> Result<Self> {
        if value == 0 || value.unsigned_abs() as usize > n {
            return Err(Error::InvalidLetter { value, n });
        }
        Ok(Letter(value))
    }

    /// The unbarred letter `i`.
    pub fn unbarred(i: u32) -> Self {
        debug_assert!(i > 0);
        Letter(i as i32)
    }

    /// The barred letter `ī`.
    pub fn barred(i: u32) -> Self {
        debug_assert!(i > 0);
        Letter(-(i as i32))
    }

    pub fn value(self) -> i32 {
        self.0
    }

    pub fn abs(self) -> u32 {
        self.0.unsigned_abs()
    }

    pub fn is_barred(self) -> bool {
        self.0 < 0
    }

    /// `i ↦ ī` and `ī ↦ i`.
    pub fn bar(self) -> Self {
        Letter(-self.0)
    }

    /// Position in `1 < … < n < n̄ < … < 1̄`, starting at 1.
    pub fn rank(self, n: usize) -> usize {
        if self.0 > 0 {
            self.0 as usize
        } else {
            (2 * n as i32 + 1 + self.0) as usize
        }
    }

    /// Inverse of [`Letter::rank`].
    pub fn from_rank(rank: usize, n: usize) -> Self {
        assert!(
            (1..=2 * n).contains(&rank),
            "rank {rank} outside [1, {}]",
            2 * n
        );
        if rank <= n {
            Letter(rank as i32)
        } else {
            Letter(rank as i32 - 2 * n as i32 - 1)
        }
    }

    /// All letters of `[±n]` in increasing order.
    pub fn alphabet(n: usize) -> impl DoubleEndedIterator<Item = Letter> + Clone {
        (1..=2 * n).map(move |r| Letter::from_rank(r, n))
    }

    /// `2̄`-style rendering with a combining overline.
    pub fn to_overbar_string(self) -> String {
        if self.is_barred() {
            format!("{}\u{0304}", self.abs())
        } else {
            self.abs().to_string()
        }
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        // unbarred letters come first; among barred ones -n < … < -1 already
        // agrees with n̄ < … < 1̄, so the integer order finishes the job
        (self.0 < 0, self.0).cmp(&(other.0 < 0, other.0))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Compares two letters in the symplectic order.
pub fn compare_letters(a: Letter, b: Letter) -> Ordering {
    a.cmp(&b)
}

/// A weakly decreasing sequence of positive parts; trailing zeros are dropped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The `i`-th part, 1-indexed, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// `λ′_j = #{i : λ_i ≥ j}`.
    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count())
                .collect(),
        )
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Every partition of `size`, largest parts first, with at most `max_parts` parts.
    pub fn all_of_size(size: usize, max_parts: usize) -> Vec<Partition> {
        fn go(
            rest: usize,
            max_part: usize,
            slots: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=max_part.min(rest)).rev() {
                cur.push(p);
                go(rest - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(size, size, max_parts, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Entry `i` is `#i − #ī`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(pub Vec<i32>);

impl WeightVector {
    pub fn zero(n: usize) -> Self {
        WeightVector(vec![0; n])
    }

    pub fn of_letters<I: IntoIterator<Item = Letter>>(letters: I, n: usize) -> Self {
        let mut w = vec![0; n];
        for l in letters {
            let slot = &mut w[l.abs() as usize - 1];
            if l.is_barred() {
                *slot -= 1;
            } else {
                *slot += 1;
            }
        }
        WeightVector(w)
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    /// Absolute values sorted decreasingly, as a partition.
    pub fn dominant(&self) -> Partition {
        let mut parts: Vec<usize> = self.0.iter().map(|v| v.unsigned_abs() as usize).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted parts")
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// A cell `(row, col)`, 1-indexed, English notation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}
