//! Sheats symplectic jeu de taquin.
//!
//! Every elementary slide looks at the split form around the puncture. With
//! the puncture in column `C₁` and `C₂` the column to its right, let `α` be
//! the entry of `rC₁` just below the puncture and `β` the entry of `ℓC₂` on
//! the puncture's row:
//!
//! * `β` absent or `α ≤ β`: the puncture trades places with the cell below.
//! * otherwise, `β` barred: `β` leaves `C₂` and joins `Φ(C₁)`.
//! * otherwise, `β` unbarred: `β` leaves `Φ(C₂)` and joins `C₁`; if `C₁`
//!   then breaks the one column condition at `i`, the letters `i` and `ī`
//!   are erased and the column loses its top and bottom cells.
//!
//! Reverse slides are computed as exact inverses of forward slides: each
//! candidate predecessor is slid forward and kept only if it reproduces the
//! current configuration.

use std::fmt;

use serde::Serialize;

use crate::column::Column;
use crate::error::{Error, Result};
use crate::letter::{Cell, Letter};
use crate::tableau::{KnTableau, SkewTableau};

/// The case of an elementary slide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SlideKind {
    Vertical,
    /// A barred `β` went from `C₂` to `Φ(C₁)`.
    HorizontalBarred(Letter),
    /// An unbarred `β` went from `Φ(C₂)` to `C₁`; `contracted` holds the
    /// letter at which `C₁` broke the one column condition, if it did.
    HorizontalUnbarred {
        entry: Letter,
        contracted: Option<u32>,
    },
}

impl SlideKind {
    pub fn is_vertical(&self) -> bool {
        matches!(self, SlideKind::Vertical)
    }

    /// The entry that moved across columns.
    pub fn slid_entry(&self) -> Option<Letter> {
        match *self {
            SlideKind::Vertical => None,
            SlideKind::HorizontalBarred(b) => Some(b),
            SlideKind::HorizontalUnbarred { entry, .. } => Some(entry),
        }
    }
}

impl fmt::Display for SlideKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlideKind::Vertical => write!(f, "vertical"),
            SlideKind::HorizontalBarred(b) => write!(f, "horizontal-barred {b}"),
            SlideKind::HorizontalUnbarred {
                entry,
                contracted: None,
            } => write!(f, "horizontal-unbarred {entry}"),
            SlideKind::HorizontalUnbarred {
                entry,
                contracted: Some(i),
            } => {
                write!(f, "horizontal-unbarred {entry} contracted-at {i}")
            }
        }
    }
}

/// A skew tableau with one cell holding the puncture `∗`.
///
/// Column letters exclude the puncture; the punctured column has one more
/// cell than letters.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PuncturedTableau {
    n: usize,
    tops: Vec<usize>,
    columns: Vec<Column>,
    puncture: Cell,
}

type SplitCells = (Vec<Option<Letter>>, Vec<Option<Letter>>);

impl PuncturedTableau {
    /// Builds and validates a punctured tableau: the shape counting the
    /// puncture must be a skew shape, every column admissible and the split
    /// form semistandard once the puncture is ignored.
    pub fn new(n: usize, tops: Vec<usize>, columns: Vec<Column>, puncture: Cell) -> Result<Self> {
        let p = PuncturedTableau {
            n,
            tops,
            columns,
            puncture,
        };
        p.validate()?;
        Ok(p)
    }

    /// Opens a puncture at an inner corner of `t`.
    pub fn at_inner_corner(t: &SkewTableau, corner: Cell) -> Result<Self> {
        if !t.inner_corners().contains(&corner) {
            return Err(Error::NotAnInnerCorner {
                row: corner.row,
                col: corner.col,
            });
        }
        let (n, mut tops, columns) = t.clone().into_parts();
        tops[corner.col - 1] -= 1;
        PuncturedTableau::new(n, tops, columns, corner)
    }

    /// Places a puncture in an addable cell outside `t`.
    pub fn at_outer_corner(t: &SkewTableau, corner: Cell) -> Result<Self> {
        if !t.outer_corners().contains(&corner) {
            return Err(Error::NotAnOuterCorner {
                row: corner.row,
                col: corner.col,
            });
        }
        let (n, mut tops, mut columns) = t.clone().into_parts();
        if corner.col > columns.len() {
            tops.push(0);
            columns.push(Column::empty(n));
        }
        PuncturedTableau::new(n, tops, columns, corner)
    }

    /// Parses the tableau text format with `*` marking the puncture.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut puncture = None;
        let mut rows: Vec<Vec<Option<i32>>> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut row = Vec::new();
            for (c, tok) in line.split_whitespace().enumerate() {
                match tok {
                    "." => row.push(None),
                    "*" => {
                        if puncture.replace(Cell::new(rows.len() + 1, c + 1)).is_some() {
                            return Err(Error::Parse {
                                line: i + 1,
                                message: "second puncture".into(),
                            });
                        }
                        // placeholder, removed below
                        row.push(Some(1));
                    }
                    _ => row.push(Some(tok.parse::<i32>().map_err(|_| Error::Parse {
                        line: i + 1,
                        message: format!("unexpected token {tok:?}"),
                    })?)),
                }
            }
            rows.push(row);
        }
        let puncture = puncture.ok_or(Error::Parse {
            line: 0,
            message: "no puncture".into(),
        })?;
        // read the columns directly so the placeholder never meets column checks
        let inner: Vec<usize> = rows
            .iter()
            .map(|r| r.iter().take_while(|c| c.is_none()).count())
            .collect();
        let width = rows.iter().map(Vec::len).max().unwrap_or(0);
        let mut tops = Vec::with_capacity(width);
        let mut columns = Vec::with_capacity(width);
        for j in 0..width {
            let top = inner.iter().take_while(|&&d| d > j).count();
            let mut values = Vec::new();
            for (r, row) in rows.iter().enumerate().skip(top) {
                if j >= row.len() {
                    break;
                }
                if Cell::new(r + 1, j + 1) == puncture {
                    continue;
                }
                values.push(row[j].ok_or_else(|| {
                    Error::InvalidShape(format!("row {} is not a skew row", r + 1))
                })?);
            }
            tops.push(top);
            columns.push(Column::from_values(n, &values)?);
        }
        PuncturedTableau::new(n, tops, columns, puncture)
    }

    pub fn puncture(&self) -> Cell {
        self.puncture
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn tops(&self) -> &[usize] {
        &self.tops
    }

    fn cell_count(&self, j: usize) -> usize {
        self.columns[j].len() + usize::from(self.puncture.col == j + 1)
    }

    fn bottom(&self, j: usize) -> usize {
        self.tops[j] + self.cell_count(j)
    }

    /// Whether row `r` of 0-based column `j` holds a letter.
    fn has_letter(&self, j: usize, r: usize) -> bool {
        j < self.columns.len()
            && r > self.tops[j]
            && r <= self.bottom(j)
            && self.puncture != Cell::new(r, j + 1)
    }

    /// Rows `tops[j] + 1 ..= bottom(j)` of column `j`, `None` at the puncture.
    fn place(&self, j: usize, letters: &[Letter]) -> Vec<Option<Letter>> {
        let mut it = letters.iter().copied();
        (self.tops[j] + 1..=self.bottom(j))
            .map(|r| {
                if self.puncture == Cell::new(r, j + 1) {
                    None
                } else {
                    it.next()
                }
            })
            .collect()
    }

    fn split_cells(&self, j: usize) -> Result<SplitCells> {
        let s = self.columns[j].split().map_err(|_| {
            Error::InvalidPuncturedTableau(format!("column {} is not admissible", j + 1))
        })?;
        Ok((
            self.place(j, s.left.letters()),
            self.place(j, s.right.letters()),
        ))
    }

    fn at_row(&self, j: usize, cells: &[Option<Letter>], r: usize) -> Option<Letter> {
        if r <= self.tops[j] {
            return None;
        }
        cells.get(r - self.tops[j] - 1).copied().flatten()
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Error::InvalidPuncturedTableau(m);
        if self.n == 0 {
            return Err(Error::ZeroRank);
        }
        if self.tops.len() != self.columns.len() {
            return Err(bad("column offsets do not match columns".into()));
        }
        let pc = self.puncture.col;
        if pc == 0 || pc > self.columns.len() {
            return Err(bad(format!(
                "puncture {} lies outside the columns",
                self.puncture
            )));
        }
        let pr = self.puncture.row;
        if pr <= self.tops[pc - 1] || pr > self.bottom(pc - 1) {
            return Err(bad(format!(
                "puncture {} lies outside its column",
                self.puncture
            )));
        }
        for j in 1..self.columns.len() {
            if self.tops[j] > self.tops[j - 1] || self.bottom(j) > self.bottom(j - 1) {
                return Err(bad(format!("shape is not skew at column {}", j + 1)));
            }
        }
        let mut prev: Option<(usize, Vec<Option<Letter>>)> = None;
        for j in 0..self.columns.len() {
            let (left, right) = self.split_cells(j)?;
            if let Some((pj, prev_right)) = &prev {
                let lo = self.tops[*pj].max(self.tops[j]) + 1;
                let hi = self.bottom(*pj).min(self.bottom(j));
                for r in lo..=hi {
                    if let (Some(a), Some(b)) =
                        (self.at_row(*pj, prev_right, r), self.at_row(j, &left, r))
                    {
                        if a > b {
                            return Err(bad(format!(
                                "split form row {r} decreases at column {}",
                                j + 1
                            )));
                        }
                    }
                }
            }
            prev = Some((j, right));
        }
        Ok(())
    }

    /// One elementary slide. Fails with [`Error::NoMove`] once the puncture
    /// has neither `α` nor `β`.
    pub fn forward_slide(&self) -> Result<(PuncturedTableau, SlideKind)> {
        self.validate()?;
        self.step()
    }

    fn step(&self) -> Result<(PuncturedTableau, SlideKind)> {
        let Cell { row: r, col: c } = self.puncture;
        let j = c - 1;
        let (_, right1) = self.split_cells(j)?;
        let alpha = self.at_row(j, &right1, r + 1);
        let beta = if j + 1 < self.columns.len() && self.has_letter(j + 1, r) {
            let (left2, _) = self.split_cells(j + 1)?;
            self.at_row(j + 1, &left2, r)
        } else {
            None
        };
        match (alpha, beta) {
            (None, None) => Err(Error::NoMove),
            (Some(a), b) if b.is_none_or(|b| a <= b) => {
                let mut next = self.clone();
                next.puncture.row += 1;
                Ok((next, SlideKind::Vertical))
            }
            (_, Some(b)) => self.horizontal(b),
            (Some(_), None) => unreachable!(),
        }
    }

    fn horizontal(&self, beta: Letter) -> Result<(PuncturedTableau, SlideKind)> {
        let bad = |m: &str| Error::InvalidPuncturedTableau(format!("{m} while sliding {beta}"));
        let j = self.puncture.col - 1;
        let c1 = &self.columns[j];
        let c2 = &self.columns[j + 1];
        let mut next = self.clone();
        next.puncture.col += 1;
        let kind = if beta.is_barred() {
            let new_c2 = c2.without(beta).ok_or_else(|| bad("β missing from C₂"))?;
            let phi1 = c1.phi().map_err(|_| bad("C₁ not admissible"))?;
            let new_c1 = phi1
                .with(beta)
                .ok_or_else(|| bad("β already in Φ(C₁)"))?
                .phi_inverse()
                .map_err(|_| bad("Φ(C₁) ∪ {β} not coadmissible"))?;
            next.columns[j] = new_c1;
            next.columns[j + 1] = new_c2;
            SlideKind::HorizontalBarred(beta)
        } else {
            let new_c1 = c1.with(beta).ok_or_else(|| bad("β already in C₁"))?;
            let phi2 = c2.phi().map_err(|_| bad("C₂ not admissible"))?;
            let new_c2 = phi2
                .without(beta)
                .ok_or_else(|| bad("β missing from Φ(C₂)"))?
                .phi_inverse()
                .map_err(|_| bad("Φ(C₂) ∖ {β} not coadmissible"))?;
            next.columns[j + 1] = new_c2;
            let contracted = new_c1.check_1cc().break_letter;
            next.columns[j] = match contracted {
                Some(i) => {
                    next.tops[j] += 1;
                    new_c1
                        .without(Letter::unbarred(i))
                        .and_then(|c| c.without(Letter::barred(i)))
                        .expect("symmetric pair present")
                }
                None => new_c1,
            };
            SlideKind::HorizontalUnbarred {
                entry: beta,
                contracted,
            }
        };
        if let Some(i) = kind_contraction(&kind) {
            next.validate().map_err(|e| {
                Error::InvalidPuncturedTableau(format!(
                    "contraction at {i} leaves no skew shape: {e}"
                ))
            })?;
        }
        Ok((next, kind))
    }

    /// Valid configurations whose forward slide yields `self`, vertical
    /// candidate first. The flag reports a horizontal candidate that could
    /// not be built without changing the number of cells.
    fn predecessors(&self, up: bool, left: bool) -> (Vec<(PuncturedTableau, SlideKind)>, bool) {
        let mut out = Vec::new();
        let mut lost_cells = false;
        let consider = |pred: PuncturedTableau, out: &mut Vec<_>| {
            if pred.validate().is_err() {
                return;
            }
            if let Ok((next, kind)) = pred.step() {
                if next == *self && kind_contraction(&kind).is_none() {
                    out.push((pred, kind));
                }
            }
        };
        if up {
            let mut pred = self.clone();
            pred.puncture.row -= 1;
            consider(pred, &mut out);
        }
        if left {
            match horizontal_predecessor(self) {
                Some(pred) if pred.columns.iter().all(Column::is_admissible) => {
                    consider(pred, &mut out)
                }
                _ => lost_cells = true,
            }
        }
        (out, lost_cells)
    }

    /// Every valid predecessor under a single forward slide.
    pub fn reverse_candidates(&self) -> Vec<(PuncturedTableau, SlideKind)> {
        let Cell { row: r, col: c } = self.puncture;
        let up = self.has_letter(c - 1, r - 1);
        let left = c > 1 && self.has_letter(c - 2, r);
        self.predecessors(up, left).0
    }

    /// Drops the puncture from the outer shape; valid once no slide applies.
    fn close_outer(self) -> Result<SkewTableau> {
        let j = self.puncture.col - 1;
        if self.puncture.row != self.bottom(j) {
            return Err(Error::InvalidPuncturedTableau(
                "puncture is not at the bottom of its column".into(),
            ));
        }
        SkewTableau::new(self.n, self.tops, self.columns)
    }

    /// Adds the puncture to the inner shape; valid once no reverse slide applies.
    fn close_inner(mut self) -> Result<SkewTableau> {
        let j = self.puncture.col - 1;
        if self.puncture.row != self.tops[j] + 1 {
            return Err(Error::InvalidPuncturedTableau(
                "puncture is not at the top of its column".into(),
            ));
        }
        self.tops[j] += 1;
        SkewTableau::new(self.n, self.tops, self.columns)
    }

    /// Text rendering with `*` at the puncture.
    pub fn to_text(&self) -> String {
        let rows = (0..self.columns.len())
            .map(|j| self.bottom(j))
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        for r in 1..=rows {
            let mut cells = Vec::new();
            for j in 0..self.columns.len() {
                if self.bottom(j) < r {
                    break;
                }
                if r <= self.tops[j] {
                    cells.push(".".to_string());
                } else if self.puncture == Cell::new(r, j + 1) {
                    cells.push("*".to_string());
                } else {
                    let placed = self.place(j, self.columns[j].letters());
                    cells.push(placed[r - self.tops[j] - 1].expect("letter").to_string());
                }
            }
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

fn kind_contraction(kind: &SlideKind) -> Option<u32> {
    match kind {
        SlideKind::HorizontalUnbarred { contracted, .. } => *contracted,
        _ => None,
    }
}

impl fmt::Debug for PuncturedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PuncturedTableau(puncture={}, tops={:?}, columns={:?})",
            self.puncture, self.tops, self.columns
        )
    }
}

/// One elementary slide: where the puncture was, what happened, and the
/// configuration afterwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlideStep {
    pub from: Cell,
    pub kind: SlideKind,
    pub after: PuncturedTableau,
}

/// A complete sequence of elementary slides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlideTrace {
    /// Inner corner (forward) or outer corner (reverse) where the puncture started.
    pub start: Cell,
    pub steps: Vec<SlideStep>,
    /// Cell vacated at the end: an outer cell removed (forward) or an inner
    /// cell added (reverse).
    pub end: Cell,
    pub result: SkewTableau,
}

impl SlideTrace {
    /// One line per elementary slide.
    pub fn log_lines(&self) -> Vec<String> {
        self.steps
            .iter()
            .map(|s| format!("{} {}", s.from, s.kind))
            .collect()
    }
}

/// Slides the puncture from an inner corner of `t` until it leaves through
/// the outer shape.
pub fn slide_from_inner_corner(t: &SkewTableau, corner: Cell) -> Result<SlideTrace> {
    let mut p = PuncturedTableau::at_inner_corner(t, corner)?;
    let mut steps = Vec::new();
    loop {
        match p.step() {
            Ok((next, kind)) => {
                steps.push(SlideStep {
                    from: p.puncture,
                    kind,
                    after: next.clone(),
                });
                p = next;
            }
            Err(Error::NoMove) => break,
            Err(e) => return Err(e),
        }
    }
    let end = p.puncture;
    Ok(SlideTrace {
        start: corner,
        steps,
        end,
        result: p.close_outer()?,
    })
}

/// Rectifies a skew KN tableau, always emptying the bottom-most inner corner
/// first.
pub fn rectify(t: &KnTableau) -> Result<KnTableau> {
    rectify_traced(t).map(|(r, _)| r)
}

pub fn rectify_traced(t: &KnTableau) -> Result<(KnTableau, Vec<SlideTrace>)> {
    rectify_with(t, |corners| {
        (0..corners.len())
            .max_by_key(|&i| (corners[i].row, corners[i].col))
            .expect("nonempty")
    })
}

/// Rectifies with a caller-chosen inner corner at every stage; `choose`
/// returns an index into the offered corners.
pub fn rectify_with<F>(t: &KnTableau, mut choose: F) -> Result<(KnTableau, Vec<SlideTrace>)>
where
    F: FnMut(&[Cell]) -> usize,
{
    let mut cur = t.as_skew().clone();
    let mut traces = Vec::new();
    loop {
        let corners = cur.inner_corners();
        if corners.is_empty() {
            break;
        }
        let corner = corners[choose(&corners)];
        let trace = slide_from_inner_corner(&cur, corner)?;
        cur = trace.result.clone();
        traces.push(trace);
    }
    Ok((KnTableau::new(cur)?, traces))
}

/// Moves a new cell at the outer corner `corner` into the inner shape by
/// reverse slides.
pub fn reverse_slide(t: &SkewTableau, corner: Cell) -> Result<SkewTableau> {
    reverse_slide_traced(t, corner).map(|tr| tr.result)
}

pub fn reverse_slide_traced(t: &SkewTableau, corner: Cell) -> Result<SlideTrace> {
    let mut p = PuncturedTableau::at_outer_corner(t, corner)?;
    let mut steps = Vec::new();
    loop {
        let Cell { row: r, col: c } = p.puncture;
        let j = c - 1;
        let up = p.has_letter(j, r - 1);
        let left = j > 0 && p.has_letter(j - 1, r);
        if !up && !left {
            break;
        }
        let (mut candidates, lost_cells) = p.predecessors(up, left);
        let found = if candidates.is_empty() {
            None
        } else {
            Some(candidates.swap_remove(0))
        };
        match found {
            Some((pred, kind)) => {
                steps.push(SlideStep {
                    from: p.puncture,
                    kind,
                    after: pred.clone(),
                });
                p = pred;
            }
            None if lost_cells => return Err(Error::SlideWouldLoseCells { row: r, col: c }),
            None => return Err(Error::Irreversible { row: r, col: c }),
        }
    }
    let end = p.puncture;
    Ok(SlideTrace {
        start: corner,
        steps,
        end,
        result: p.close_inner()?,
    })
}

/// The configuration that a horizontal forward slide would have turned into
/// `p`: the entry `γ` of `rC₁` left of the puncture moves back into the
/// puncture's column. `None` when the columns cannot be rebuilt without
/// changing the number of cells.
fn horizontal_predecessor(p: &PuncturedTableau) -> Option<PuncturedTableau> {
    let Cell { row: r, col: c } = p.puncture;
    let j = c - 1;
    let (_, right1) = p.split_cells(j - 1).ok()?;
    let gamma = p.at_row(j - 1, &right1, r)?;
    let c1 = &p.columns[j - 1];
    let c2 = &p.columns[j];
    let (new_c1, new_c2) = if gamma.is_barred() {
        (
            c1.phi().ok()?.without(gamma)?.phi_inverse().ok()?,
            c2.with(gamma)?,
        )
    } else {
        (
            c1.without(gamma)?,
            c2.phi().ok()?.with(gamma)?.phi_inverse().ok()?,
        )
    };
    let mut pred = p.clone();
    pred.columns[j - 1] = new_c1;
    pred.columns[j] = new_c2;
    pred.puncture.col -= 1;
    Some(pred)
}

/// Swaps the lengths of a straight two-column KN tableau `C₁C₂` with
/// `|C₁| ≥ |C₂|` by reverse slides entering below `C₂`.
pub fn swap_column_lengths(c1: &Column, c2: &Column) -> Result<SkewTableau> {
    swap_column_lengths_traced(c1, c2).map(|(t, _)| t)
}

pub fn swap_column_lengths_traced(
    c1: &Column,
    c2: &Column,
) -> Result<(SkewTableau, Vec<SlideTrace>)> {
    let (p, q) = (c1.len(), c2.len());
    if p < q {
        return Err(Error::LengthOrder { left: p, right: q });
    }
    let n = c1.rank();
    let mut cur =
        KnTableau::new(SkewTableau::straight(n, vec![c1.clone(), c2.clone()])?)?.into_inner();
    let mut traces = Vec::with_capacity(p - q);
    for k in 0..p - q {
        let trace = reverse_slide_traced(&cur, Cell::new(q + k + 1, 2)).map_err(|e| match e {
            Error::SlideWouldLoseCells { .. } => Error::UnexpectedContraction,
            other => other,
        })?;
        cur = trace.result.clone();
        traces.push(trace);
        if cur.column_lengths().first() != Some(&(p - k - 1)) {
            return Err(Error::InvalidPuncturedTableau(format!(
                "reverse slide {} did not move a cell into the second column",
                k + 1
            )));
        }
    }
    Ok((cur, traces))
}

/// Vertical offsets realising a column-length sequence as a skew shape: the
/// last column starts in row 1, a column is top-aligned with its right
/// neighbour when at least as long and bottom-aligned otherwise.
fn variant_tops(lengths: &[usize]) -> Vec<usize> {
    let k = lengths.len();
    let mut tops = vec![0; k];
    for j in (0..k.saturating_sub(1)).rev() {
        tops[j] = if lengths[j] >= lengths[j + 1] {
            tops[j + 1]
        } else {
            tops[j + 1] + lengths[j + 1] - lengths[j]
        };
    }
    tops
}

/// The skew tableau with column lengths `lengths` that rectifies to `t`.
pub fn skew_variant(t: &KnTableau, lengths: &[usize]) -> Result<SkewTableau> {
    skew_variant_with(t, lengths, |inversions| inversions[0])
}

/// As [`skew_variant`], with `choose` picking which adjacent inverted pair to
/// swap next (given the left positions of all of them).
pub fn skew_variant_with<F>(t: &KnTableau, lengths: &[usize], mut choose: F) -> Result<SkewTableau>
where
    F: FnMut(&[usize]) -> usize,
{
    if !t.is_straight() {
        return Err(Error::NotStraight);
    }
    let current = t.column_lengths();
    let mut sorted_target = lengths.to_vec();
    sorted_target.sort_unstable_by(|a, b| b.cmp(a));
    if sorted_target != current {
        return Err(Error::InvalidPermutation(format!(
            "{lengths:?} is not a rearrangement of {current:?}"
        )));
    }
    // stable assignment of target slots: the k-th column of a given length
    // goes to the k-th slot of that length
    let mut slots: Vec<usize> = Vec::with_capacity(current.len());
    for (i, len) in current.iter().enumerate() {
        let rank = current[..i].iter().filter(|&&l| l == *len).count();
        let slot = lengths
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == *len)
            .nth(rank)
            .map(|(s, _)| s)
            .expect("rearrangement");
        slots.push(slot);
    }
    let mut columns: Vec<Column> = t.columns().to_vec();
    loop {
        let inversions: Vec<usize> = (0..slots.len().saturating_sub(1))
            .filter(|&j| slots[j] > slots[j + 1])
            .collect();
        if inversions.is_empty() {
            break;
        }
        let j = choose(&inversions);
        if !inversions.contains(&j) {
            return Err(Error::InvalidPermutation(format!(
                "{j} is not an inverted position"
            )));
        }
        let swapped = swap_column_lengths(&columns[j], &columns[j + 1])?;
        let [a, b]: [Column; 2] = swapped.columns().to_vec().try_into().map_err(|_| {
            Error::InvalidPuncturedTableau("length swap did not return two columns".into())
        })?;
        columns[j] = a;
        columns[j + 1] = b;
        slots.swap(j, j + 1);
    }
    let tops = variant_tops(lengths);
    SkewTableau::new(t.rank(), tops, columns)
}

/// Rightmost column of a tableau.
pub fn last_column(t: &SkewTableau) -> Column {
    t.columns()
        .last()
        .cloned()
        .unwrap_or_else(|| Column::empty(t.rank()))
}
