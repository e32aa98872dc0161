#![allow(dead_code)]

use std::collections::BTreeSet;

use symplectic_keys::{enumerate_kn, KnTableau, Partition, SkewTableau};

/// Every straight KN tableau over `[±n]` with at most `max_size` cells.
pub fn all_kn_up_to(n: usize, max_size: usize) -> Vec<KnTableau> {
    (0..=max_size)
        .flat_map(|size| Partition::all_of_size(size, n))
        .flat_map(|lambda| enumerate_kn(&lambda, n).collect::<Vec<_>>())
        .collect()
}

/// Distinct rearrangements of a length sequence.
pub fn rearrangements(lengths: &[usize]) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        if rest.is_empty() {
            out.insert(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut out = BTreeSet::new();
    go(&mut lengths.to_vec(), &mut Vec::new(), &mut out);
    out.into_iter().collect()
}

/// Outer and inner partitions of a tableau given column offsets and lengths.
pub fn shape_of(tops: &[usize], lengths: &[usize]) -> (Partition, Partition) {
    let bottoms: Vec<usize> = tops.iter().zip(lengths).map(|(t, l)| t + l).collect();
    (
        Partition::new(bottoms).unwrap().conjugate(),
        Partition::new(tops.to_vec()).unwrap().conjugate(),
    )
}

/// Every semistandard filling of `outer/inner` by `1..=n`.
pub fn ssyt(outer: &Partition, inner: &Partition, n: usize) -> Vec<SkewTableau> {
    let cells: Vec<(usize, usize)> = (0..outer.len())
        .flat_map(|r| (inner.part(r + 1)..outer.part(r + 1)).map(move |c| (r, c)))
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![1i32; cells.len()];
    loop {
        let mut rows: Vec<Vec<Option<i32>>> = (0..outer.len())
            .map(|r| vec![None; outer.part(r + 1)])
            .collect();
        for (k, &(r, c)) in cells.iter().enumerate() {
            rows[r][c] = Some(idx[k]);
        }
        if let Ok(t) = SkewTableau::from_rows(n, &rows) {
            if t.is_semistandard() {
                out.push(t);
            }
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return out;
            }
            idx[k] += 1;
            if idx[k] <= n as i32 {
                break;
            }
            idx[k] = 1;
            k += 1;
        }
    }
}

/// Textbook jeu de taquin on semistandard tableaux with positive entries,
/// stored as rows of optional entries (`None` for inner cells).
pub mod classical {
    pub type Grid = Vec<Vec<Option<u32>>>;

    pub fn inner_corners(g: &Grid) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 0..g.len() {
            for c in 0..g[r].len() {
                if g[r][c].is_some() {
                    continue;
                }
                let right_filled = c + 1 >= g[r].len() || g[r][c + 1].is_some();
                let below_filled = r + 1 >= g.len() || c >= g[r + 1].len() || g[r + 1][c].is_some();
                if right_filled && below_filled {
                    out.push((r, c));
                }
            }
        }
        out
    }

    /// Slides the hole at an inner corner out of the shape.
    pub fn slide(g: &mut Grid, (mut r, mut c): (usize, usize)) {
        loop {
            let below = g.get(r + 1).and_then(|row| row.get(c)).copied().flatten();
            let right = g[r].get(c + 1).copied().flatten();
            let go_down = match (below, right) {
                (None, None) => break,
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (Some(b), Some(a)) => b <= a,
            };
            if go_down {
                g[r][c] = below;
                r += 1;
            } else {
                g[r][c] = right;
                c += 1;
            }
        }
        g[r].pop();
        while g.last().is_some_and(|row| row.is_empty()) {
            g.pop();
        }
    }

    /// Slides a hole at an outer corner into the inner shape.
    pub fn reverse_slide(g: &mut Grid, (mut r, mut c): (usize, usize)) {
        if r == g.len() {
            g.push(Vec::new());
        }
        g[r].push(None);
        loop {
            let above = if r > 0 {
                g[r - 1].get(c).copied().flatten()
            } else {
                None
            };
            let left = if c > 0 { g[r][c - 1] } else { None };
            let go_up = match (above, left) {
                (None, None) => break,
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (Some(a), Some(l)) => a >= l,
            };
            if go_up {
                g[r][c] = above;
                r -= 1;
            } else {
                g[r][c] = left;
                c -= 1;
            }
            g[r][c] = None;
        }
    }

    pub fn rectify(mut g: Grid) -> Grid {
        while let Some(&corner) = inner_corners(&g).iter().max() {
            slide(&mut g, corner);
        }
        g
    }

    /// Right key of a straight tableau given by its columns, by swapping
    /// column lengths with reverse slides.
    pub fn right_key(columns: &[Vec<u32>]) -> Vec<Vec<u32>> {
        (0..columns.len())
            .map(|j| key_column(&columns[j..]))
            .collect()
    }

    fn key_column(columns: &[Vec<u32>]) -> Vec<u32> {
        let mut d = columns[0].clone();
        for c in &columns[1..] {
            let (p, q) = (d.len(), c.len());
            let mut g: Grid = (0..p)
                .map(|r| {
                    let mut row = vec![Some(d[r])];
                    if r < q {
                        row.push(Some(c[r]));
                    }
                    row
                })
                .collect();
            for k in 0..p - q {
                reverse_slide(&mut g, (q + k, 1));
            }
            d = g
                .iter()
                .map(|row| row[1].expect("second column filled"))
                .collect();
        }
        d
    }
}
