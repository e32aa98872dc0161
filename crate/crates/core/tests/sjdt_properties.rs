mod common;

use std::collections::HashMap;
use std::sync::OnceLock;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{all_kn_up_to, classical, rearrangements, shape_of, ssyt};
use symplectic_keys::{
    enumerate_kn_skew, rectify, rectify_with, reverse_slide_traced, skew_variant,
    skew_variant_with, slide_from_inner_corner, swap_column_lengths, Cell, Column, Error,
    KnTableau, Letter, Partition, PuncturedTableau, SkewTableau,
};

fn pool() -> &'static Vec<KnTableau> {
    static POOL: OnceLock<Vec<KnTableau>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut all = all_kn_up_to(2, 6);
        all.extend(all_kn_up_to(3, 5));
        all
    })
}

/// Moves `steps` cells into the inner shape through random outer corners.
fn random_skew(t: &KnTableau, steps: usize, rng: &mut ChaCha8Rng) -> SkewTableau {
    let mut cur = t.as_skew().clone();
    for _ in 0..steps {
        let corners = cur.outer_corners();
        let corner = *corners.choose(rng).unwrap();
        cur = reverse_slide_traced(&cur, corner).unwrap().result;
    }
    cur
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn weight_is_invariant_under_slides(index in any::<prop::sample::Index>(), steps in 0usize..4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = index.get(pool());
        let w = t.weight();
        let mut cur = t.as_skew().clone();
        for _ in 0..steps {
            let corner = *cur.outer_corners().choose(&mut rng).unwrap();
            let tr = reverse_slide_traced(&cur, corner).unwrap();
            for s in &tr.steps {
                let letters = s.after.columns().iter().flat_map(|c| c.letters().to_vec());
                prop_assert_eq!(symplectic_keys::WeightVector::of_letters(letters, t.rank()), w.clone());
            }
            cur = tr.result;
            prop_assert_eq!(cur.weight(), w.clone());
        }
        let skew = KnTableau::new(cur).unwrap();
        let (r, traces) = rectify_with(&skew, |c| rng.gen_range(0..c.len())).unwrap();
        for tr in &traces {
            prop_assert_eq!(tr.result.weight(), w.clone());
        }
        prop_assert_eq!(r.weight(), w.clone());
        prop_assert_eq!(&r, t);
        if t.num_columns() == 2 && t.column_lengths()[0] >= t.column_lengths()[1] {
            let s = swap_column_lengths(t.column(1), t.column(2)).unwrap();
            prop_assert_eq!(s.weight(), w);
        }
    }

    #[test]
    fn reverse_then_forward_is_identity(index in any::<prop::sample::Index>(), steps in 0usize..4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let base = random_skew(index.get(pool()), steps, &mut rng);
        for corner in base.outer_corners() {
            let rev = reverse_slide_traced(&base, corner).unwrap();
            let fwd = slide_from_inner_corner(&rev.result, rev.end).unwrap();
            prop_assert_eq!(&fwd.result, &base);
            prop_assert_eq!(fwd.end, corner);
            prop_assert_eq!(fwd.steps.len(), rev.steps.len());
        }
    }

    #[test]
    fn forward_then_reverse_is_identity(index in any::<prop::sample::Index>(), steps in 1usize..4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let base = random_skew(index.get(pool()), steps, &mut rng);
        for corner in base.inner_corners() {
            let fwd = slide_from_inner_corner(&base, corner).unwrap();
            let rev = reverse_slide_traced(&fwd.result, fwd.end).unwrap();
            prop_assert_eq!(&rev.result, &base);
            prop_assert_eq!(rev.end, corner);
        }
    }
}

#[test]
fn every_skew_kn_tableau_slides_and_reverses() {
    // all fillings of small skew shapes, not only those reached by reverse slides
    let shapes: &[(&[usize], &[usize], usize)] = &[
        (&[2, 1], &[1], 2),
        (&[2, 2], &[1], 2),
        (&[3, 2], &[2], 2),
        (&[2, 2, 1], &[1, 1], 3),
        (&[2, 2], &[1], 3),
        (&[3, 1], &[1], 3),
        (&[2, 2, 2], &[2, 1], 3),
        (&[3, 2, 1], &[1], 2),
    ];
    let (mut contractions, mut blocked) = (0, 0);
    for &(outer, inner, n) in shapes {
        let (outer, inner) = (
            Partition::new(outer.to_vec()).unwrap(),
            Partition::new(inner.to_vec()).unwrap(),
        );
        for t in enumerate_kn_skew(&outer, &inner, n).unwrap() {
            for corner in t.inner_corners() {
                let fwd = slide_from_inner_corner(&t, corner).unwrap();
                assert!(fwd.result.is_kn(), "{}", t.to_text(false));
                assert_eq!(fwd.result.weight(), t.weight());
                let contracted = fwd.steps.iter().any(|s| {
                    matches!(
                        s.kind,
                        symplectic_keys::SlideKind::HorizontalUnbarred {
                            contracted: Some(_),
                            ..
                        }
                    )
                });
                if contracted {
                    contractions += 1;
                    continue;
                }
                let rev = reverse_slide_traced(&fwd.result, fwd.end).unwrap();
                assert_eq!(rev.result, *t.as_skew());
            }
            for corner in t.outer_corners() {
                let rev = match reverse_slide_traced(&t, corner) {
                    Ok(rev) => rev,
                    Err(Error::SlideWouldLoseCells { .. }) => {
                        blocked += 1;
                        continue;
                    }
                    Err(e) => panic!("{e:?} at {corner}\n{}", t.to_text(false)),
                };
                assert!(rev.result.is_kn());
                assert_eq!(
                    slide_from_inner_corner(&rev.result, rev.end)
                        .unwrap()
                        .result,
                    *t.as_skew()
                );
            }
        }
    }
    assert!(
        contractions > 0 && blocked > 0,
        "the sample should exercise contractions"
    );
}

#[test]
fn reverse_predecessor_is_unique() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for t in pool() {
        let base = random_skew(t, rng.gen_range(0..3), &mut rng);
        for corner in base.outer_corners() {
            let mut p = PuncturedTableau::at_outer_corner(&base, corner).unwrap();
            loop {
                let preds = p.reverse_candidates();
                assert!(preds.len() <= 1, "{}", p.to_text());
                match preds.into_iter().next() {
                    Some((q, _)) => p = q,
                    None => break,
                }
            }
        }
    }
}

#[test]
fn rectification_is_independent_of_corner_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    for t in pool() {
        for lengths in rearrangements(&t.column_lengths()) {
            let v = KnTableau::new(skew_variant(t, &lengths).unwrap()).unwrap();
            for _ in 0..5 {
                let (r, _) = rectify_with(&v, |c| rng.gen_range(0..c.len())).unwrap();
                assert_eq!(&r, t);
                checked += 1;
            }
        }
    }
    assert!(checked >= 1000);
}

#[test]
fn variants_are_independent_of_swap_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for t in pool().iter().filter(|t| t.num_columns() >= 3) {
        for lengths in rearrangements(&t.column_lengths()) {
            let canonical = skew_variant(t, &lengths).unwrap();
            for _ in 0..3 {
                let other =
                    skew_variant_with(t, &lengths, |inv| *inv.choose(&mut rng).unwrap()).unwrap();
                assert_eq!(other, canonical);
            }
        }
    }
}

#[test]
fn two_column_swaps_round_trip() {
    let mut all = all_kn_up_to(2, 6);
    all.extend(all_kn_up_to(3, 6));
    for t in all.iter().filter(|t| t.num_columns() == 2) {
        let s = swap_column_lengths(t.column(1), t.column(2)).unwrap();
        let (p, q) = (t.column_lengths()[0], t.column_lengths()[1]);
        assert_eq!(s.column_lengths(), vec![q, p]);
        assert_eq!(s.tops(), &[p - q, 0]);
        assert_eq!(&rectify(&KnTableau::new(s).unwrap()).unwrap(), t);
    }
}

fn to_grid(t: &SkewTableau) -> classical::Grid {
    t.rows()
        .into_iter()
        .map(|row| row.into_iter().map(|c| c.map(|l| l.abs())).collect())
        .collect()
}

#[test]
fn unbarred_tableaux_follow_classical_jeu_de_taquin() {
    let mut checked = 0;
    for n in 1..=3 {
        for size in 0..=6 {
            for outer in Partition::all_of_size(size, n) {
                let inners: Vec<Partition> = (0..size)
                    .flat_map(|s| Partition::all_of_size(s, n))
                    .filter(|p| outer.contains(p))
                    .collect();
                for inner in inners {
                    for t in ssyt(&outer, &inner, n) {
                        let kn = KnTableau::new(t.clone())
                            .expect("semistandard unbarred tableaux are KN");
                        let ours = rectify(&kn).unwrap();
                        assert_eq!(
                            to_grid(ours.as_skew()),
                            classical::rectify(to_grid(&t)),
                            "{}",
                            t.to_text(false)
                        );
                        for corner in t.inner_corners() {
                            let mut g = to_grid(&t);
                            classical::slide(&mut g, (corner.row - 1, corner.col - 1));
                            assert_eq!(
                                to_grid(&slide_from_inner_corner(&t, corner).unwrap().result),
                                g
                            );
                        }
                        for corner in t.outer_corners() {
                            let mut g = to_grid(&t);
                            classical::reverse_slide(&mut g, (corner.row - 1, corner.col - 1));
                            let ours = reverse_slide_traced(&t, corner).unwrap().result;
                            assert_eq!(to_grid(&ours), g);
                        }
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 1000);
}

#[test]
fn exactly_one_filling_of_each_variant_shape_rectifies_to_each_tableau() {
    let mut shapes_checked = 0;
    for (n, max) in [(2, 4), (3, 3)] {
        for size in 1..=max {
            for lambda in Partition::all_of_size(size, n) {
                let straight: Vec<KnTableau> = symplectic_keys::enumerate_kn(&lambda, n).collect();
                let Some(first) = straight.first() else {
                    continue;
                };
                for lengths in rearrangements(&first.column_lengths()) {
                    let tops = skew_variant(first, &lengths).unwrap().tops().to_vec();
                    let (outer, inner) = shape_of(&tops, &lengths);
                    let mut hits: HashMap<KnTableau, Vec<SkewTableau>> = HashMap::new();
                    for f in enumerate_kn_skew(&outer, &inner, n).unwrap() {
                        hits.entry(rectify(&f).unwrap())
                            .or_default()
                            .push(f.into_inner());
                    }
                    for t in &straight {
                        let found = hits.get(t).map(Vec::as_slice).unwrap_or(&[]);
                        assert_eq!(
                            found.len(),
                            1,
                            "{} with lengths {lengths:?}",
                            t.to_text(false)
                        );
                        assert_eq!(found[0], skew_variant(t, &lengths).unwrap());
                    }
                    shapes_checked += 1;
                }
            }
        }
    }
    assert!(shapes_checked > 10);
}

#[test]
fn equal_length_last_columns_agree() {
    let mut all = all_kn_up_to(2, 6);
    all.extend(all_kn_up_to(3, 5));
    for t in &all {
        let mut by_len: HashMap<usize, Column> = HashMap::new();
        for lengths in rearrangements(&t.column_lengths()) {
            let v = skew_variant(t, &lengths).unwrap();
            let last = symplectic_keys::last_column(&v);
            if let Some(prev) = by_len.insert(last.len(), last.clone()) {
                assert_eq!(prev, last, "{}", t.to_text(false));
            }
        }
    }
}

#[test]
fn punctured_parse_round_trip() {
    let p = PuncturedTableau::parse(". 2\n* 3\n2 -1\n", 3).unwrap();
    assert_eq!(p.puncture(), Cell::new(2, 1));
    assert_eq!(p.to_text(), ". 2\n* 3\n2 -1\n");
    assert_eq!(p.columns()[0].letters(), &[Letter::unbarred(2)]);
}
