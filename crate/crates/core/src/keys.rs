//! The right key map `K₊`.
//!
//! Column `j` of `K₊(T)` depends only on the suffix `Cⱼ⋯C_k`, so both methods
//! compute the first key column `K₊¹` of every suffix. The jeu de taquin method
//! pushes a column of length `|Cⱼ|` to the right through length swaps; the
//! direct method predicts the entries that reach the right column by matching
//! neighbouring columns.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::column::Column;
use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::sjdt::{last_column, skew_variant, swap_column_lengths};
use crate::tableau::{KeyTableau, KnTableau, SkewTableau};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    #[default]
    Jdt,
    Direct,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jdt" => Ok(Method::Jdt),
            "direct" => Ok(Method::Direct),
            other => Err(Error::Parse {
                line: 0,
                message: format!("unknown method {other:?}"),
            }),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Jdt => "jdt",
            Method::Direct => "direct",
        })
    }
}

/// Greedy matching between a column `D` and the left column `ℓC` of its
/// right neighbour.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Matching {
    /// `(position in D, position in ℓC)`, 0-based, ordered by position in `D`.
    pub pairs: Vec<(usize, usize)>,
    /// Entries of `D` left unmatched, increasing.
    pub unmatched: Vec<Letter>,
}

/// Matches every `β` of `ℓC`, largest first, with the biggest not yet
/// matched entry of `d` that is `≤ β`.
pub fn match_columns(d: &Column, c: &Column) -> Result<Matching> {
    let left = c.split()?.left;
    let mut taken = vec![false; d.len()];
    let mut pairs = Vec::with_capacity(left.len());
    for (bi, &beta) in left.letters().iter().enumerate().rev() {
        let di = (0..d.len())
            .rev()
            .find(|&i| !taken[i] && d.letters()[i] <= beta)
            .ok_or(Error::UnmatchableEntry(beta))?;
        taken[di] = true;
        pairs.push((di, bi));
    }
    pairs.sort_unstable();
    let unmatched = d
        .letters()
        .iter()
        .zip(&taken)
        .filter(|(_, &t)| !t)
        .map(|(&l, _)| l)
        .collect();
    Ok(Matching { pairs, unmatched })
}

/// One step of the direct method: `D` against the next column `C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtendStep {
    pub matching: Matching,
    /// `rC` before any letters are added.
    pub right: Column,
    /// Letters added for the unmatched entries, in the order they were chosen.
    pub appended: Vec<Letter>,
    /// `rC` together with the appended letters.
    pub result: Column,
}

/// `rC` extended to the length of `d`: every unmatched `α` of `d`, smallest
/// first, adds the smallest `γ ≥ α` such that neither `γ` nor `γ̄` is already
/// present.
pub fn direct_extend(d: &Column, c: &Column) -> Result<Column> {
    direct_extend_traced(d, c).map(|s| s.result)
}

pub fn direct_extend_traced(d: &Column, c: &Column) -> Result<ExtendStep> {
    let matching = match_columns(d, c)?;
    let right = c.split()?.right;
    let n = c.rank();
    let mut present: Vec<u32> = right.letters().iter().map(|l| l.abs()).collect();
    let mut appended = Vec::with_capacity(matching.unmatched.len());
    for &alpha in &matching.unmatched {
        let gamma = Letter::alphabet(n)
            .find(|&g| g >= alpha && !present.contains(&g.abs()))
            .ok_or(Error::AlphabetExhausted(alpha))?;
        present.push(gamma.abs());
        appended.push(gamma);
    }
    let mut letters = right.letters().to_vec();
    letters.extend(&appended);
    let result = Column::from_unsorted(n, letters)?;
    Ok(ExtendStep {
        matching,
        right,
        appended,
        result,
    })
}

fn straight_columns(t: &KnTableau) -> Result<&[Column]> {
    if !t.is_straight() {
        return Err(Error::NotStraight);
    }
    Ok(t.columns())
}

/// `K₊¹(T)` by the direct method.
pub fn right_key_column_direct(t: &KnTableau) -> Result<Column> {
    right_key_column_direct_traced(t).map(|(c, _)| c)
}

/// `K₊¹(T)` by the direct method, with one step per column after the first.
pub fn right_key_column_direct_traced(t: &KnTableau) -> Result<(Column, Vec<ExtendStep>)> {
    let columns = straight_columns(t)?;
    let Some(first) = columns.first() else {
        return Ok((Column::empty(t.rank()), Vec::new()));
    };
    let mut d = first.split()?.right;
    let mut steps = Vec::with_capacity(columns.len() - 1);
    for c in &columns[1..] {
        let step = direct_extend_traced(&d, c)?;
        d = step.result.clone();
        steps.push(step);
    }
    Ok((d, steps))
}

/// `K₊¹(T)` by jeu de taquin: the running column of length `|C₁|` trades
/// lengths with each later column in turn.
pub fn right_key_column_jdt(t: &KnTableau) -> Result<Column> {
    let columns = straight_columns(t)?;
    let Some(first) = columns.first() else {
        return Ok(Column::empty(t.rank()));
    };
    let mut d = first.clone();
    for c in &columns[1..] {
        if c.len() != d.len() {
            d = last_column(&swap_column_lengths(&d, c)?);
        } else {
            d = c.clone();
        }
    }
    Ok(d.split()?.right)
}

fn suffix(t: &KnTableau, j: usize) -> KnTableau {
    let cols = t.columns()[j..].to_vec();
    KnTableau::new_unchecked(
        SkewTableau::straight(t.rank(), cols).expect("suffix of a straight tableau"),
    )
}

/// `K₊(T)`, one suffix at a time.
pub fn right_key(t: &KnTableau, method: Method) -> Result<KeyTableau> {
    let columns = straight_columns(t)?;
    let key_columns = (0..columns.len())
        .map(|j| {
            let s = suffix(t, j);
            match method {
                Method::Jdt => right_key_column_jdt(&s),
                Method::Direct => right_key_column_direct(&s),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    KeyTableau::new(KnTableau::new(SkewTableau::straight(
        t.rank(),
        key_columns,
    )?)?)
}

/// `K₊(T)` read off the skew variants of `T`: the column of length `ℓ` is the
/// right column of the last column of any variant whose last column has
/// length `ℓ`.
pub fn right_key_from_variants(t: &KnTableau) -> Result<KeyTableau> {
    let lengths = straight_columns(t)?
        .iter()
        .map(Column::len)
        .collect::<Vec<_>>();
    let mut key_columns = Vec::with_capacity(lengths.len());
    for (j, &len) in lengths.iter().enumerate() {
        let mut order = lengths.clone();
        let moved = order.remove(j);
        order.push(moved);
        let last = last_column(&skew_variant(t, &order)?);
        debug_assert_eq!(last.len(), len);
        key_columns.push(last.split()?.right);
    }
    KeyTableau::new(KnTableau::new(SkewTableau::straight(
        t.rank(),
        key_columns,
    )?)?)
}

/// Classical right key of a tableau with unbarred entries, by scanning.
///
/// For column `j`, entries of `Cⱼ` are taken from the bottom up. Each one
/// walks right through the later columns, stepping onto the largest entry not
/// yet used by an earlier walk whenever that entry is at least the current
/// value; the value it ends on goes into the key column.
pub fn right_key_type_a_oracle(t: &KnTableau) -> Result<KeyTableau> {
    let columns = straight_columns(t)?;
    if t.has_barred_entry() {
        return Err(Error::NotTypeA);
    }
    let n = t.rank();
    let mut key_columns = Vec::with_capacity(columns.len());
    for j in 0..columns.len() {
        let mut used: Vec<Vec<bool>> = columns.iter().map(|c| vec![false; c.len()]).collect();
        let mut key = Vec::with_capacity(columns[j].len());
        for &start in columns[j].letters().iter().rev() {
            let mut cur = start;
            for i in j + 1..columns.len() {
                let letters = columns[i].letters();
                if let Some(r) = (0..letters.len()).rev().find(|&r| !used[i][r]) {
                    if letters[r] >= cur {
                        used[i][r] = true;
                        cur = letters[r];
                    }
                }
            }
            key.push(cur);
        }
        key_columns.push(Column::from_unsorted(n, key)?);
    }
    KeyTableau::new(KnTableau::new(SkewTableau::straight(n, key_columns)?)?)
}
