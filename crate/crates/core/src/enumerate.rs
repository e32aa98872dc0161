//! Exhaustive enumeration of KN tableaux of a given (skew) shape.
//!
//! Columns are filled left to right from the admissible columns of the right
//! length; a partial filling is pruned as soon as a new column's left split
//! column fails to weakly dominate the previous right split column row by row.

use std::collections::HashMap;
use std::rc::Rc;

use crate::column::{Column, SplitPair};
use crate::error::{Error, Result};
use crate::letter::Partition;
use crate::tableau::{KnTableau, SkewTableau};

type Candidates = Rc<Vec<(Column, SplitPair)>>;

/// Depth-first stream over `KN(μ/ν, n)`.
pub struct KnEnumerator {
    n: usize,
    tops: Vec<usize>,
    candidates: Vec<Candidates>,
    stack: Vec<usize>,
    cursor: usize,
    done: bool,
}

/// Every element of `KN(λ, n)`, each exactly once.
pub fn enumerate_kn(lambda: &Partition, n: usize) -> KnEnumerator {
    enumerate_kn_skew(lambda, &Partition::empty(), n).expect("straight shapes are valid")
}

/// Every element of `KN(outer/inner, n)`.
pub fn enumerate_kn_skew(outer: &Partition, inner: &Partition, n: usize) -> Result<KnEnumerator> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if !outer.contains(inner) {
        return Err(Error::InvalidShape(format!(
            "{inner} is not contained in {outer}"
        )));
    }
    let bottoms = outer.conjugate();
    let inner_conj = inner.conjugate();
    let tops: Vec<usize> = (1..=bottoms.len()).map(|j| inner_conj.part(j)).collect();
    let mut by_length: HashMap<usize, Candidates> = HashMap::new();
    let candidates = bottoms
        .parts()
        .iter()
        .zip(&tops)
        .map(|(&b, &t)| {
            let len = b - t;
            by_length
                .entry(len)
                .or_insert_with(|| {
                    Rc::new(
                        Column::admissible_of_length(n, len)
                            .into_iter()
                            .map(|c| {
                                let s = c.split().expect("admissible");
                                (c, s)
                            })
                            .collect(),
                    )
                })
                .clone()
        })
        .collect();
    Ok(KnEnumerator {
        n,
        tops,
        candidates,
        stack: Vec::new(),
        cursor: 0,
        done: false,
    })
}

impl KnEnumerator {
    fn compatible(&self, depth: usize, index: usize) -> bool {
        if depth == 0 {
            return true;
        }
        let prev = &self.candidates[depth - 1][self.stack[depth - 1]].1.right;
        let cur = &self.candidates[depth][index].1.left;
        let (pt, ct) = (self.tops[depth - 1], self.tops[depth]);
        let lo = pt.max(ct);
        let hi = (pt + prev.len()).min(ct + cur.len());
        (lo..hi).all(|r| prev.letters()[r - pt] <= cur.letters()[r - ct])
    }

    fn build(&self) -> KnTableau {
        let columns = self
            .stack
            .iter()
            .enumerate()
            .map(|(d, &i)| self.candidates[d][i].0.clone())
            .collect();
        let t = SkewTableau::new(self.n, self.tops.clone(), columns).expect("valid shape");
        KnTableau::new_unchecked(t)
    }
}

impl Iterator for KnEnumerator {
    type Item = KnTableau;

    fn next(&mut self) -> Option<KnTableau> {
        let depth_total = self.candidates.len();
        while !self.done {
            let depth = self.stack.len();
            if depth == depth_total {
                let t = self.build();
                match self.stack.pop() {
                    Some(i) => self.cursor = i + 1,
                    None => self.done = true,
                }
                return Some(t);
            }
            let found =
                (self.cursor..self.candidates[depth].len()).find(|&i| self.compatible(depth, i));
            match found {
                Some(i) => {
                    self.stack.push(i);
                    self.cursor = 0;
                }
                None => match self.stack.pop() {
                    Some(i) => self.cursor = i + 1,
                    None => self.done = true,
                },
            }
        }
        None
    }
}
