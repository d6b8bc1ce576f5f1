//! Cross-module properties checked exhaustively at desk scale.

use std::collections::BTreeSet;

use oalgdim::rootdata::{build_root_datum, Orientation, RootDatum, Series};
use oalgdim::weyl::{
    bruhat_leq, enumerate_group, inverse, multiply, simple_reflection, WeylElement,
};

fn datum(series: Series, rank: u8) -> RootDatum {
    build_root_datum(series, rank, Orientation::Upper).unwrap()
}

/// Reflection-based Bruhat order: x <= w iff w is reachable from x by
/// right multiplication with reflections (conjugates of simple
/// reflections) that increase length at every step.
#[allow(clippy::needless_range_loop)]
fn bruhat_by_reflections(d: &RootDatum) -> Vec<Vec<bool>> {
    let elems = enumerate_group(d);
    let n = elems.len();
    let mut reflections: BTreeSet<usize> = BTreeSet::new();
    let index_of = |e: &WeylElement| elems.iter().position(|x| x == e).unwrap();
    for v in &elems {
        for i in 0..d.ss_rank() {
            let s = simple_reflection(d, i).unwrap();
            let vi = inverse(d, v).unwrap();
            let t = multiply(d, &multiply(d, v, &s).unwrap(), &vi).unwrap();
            reflections.insert(index_of(&t));
        }
    }
    let mut leq = vec![vec![false; n]; n];
    // close under covering steps, longest first so one sweep suffices per
    // length difference; iterate to a fixed point for safety
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    let mut changed = true;
    while changed {
        changed = false;
        for x in 0..n {
            for &t in &reflections {
                let xt = multiply(d, &elems[x], &elems[t]).unwrap();
                let j = index_of(&xt);
                if elems[j].length() > elems[x].length() {
                    for w in 0..n {
                        if leq[j][w] && !leq[x][w] {
                            leq[x][w] = true;
                            changed = true;
                        }
                    }
                }
            }
        }
    }
    leq
}

#[test]
fn bruhat_subword_criterion_matches_reflection_definition() {
    for (series, rank) in [(Series::A, 1), (Series::A, 2), (Series::B, 2), (Series::A, 3)] {
        let d = datum(series, rank);
        assert!(d.weyl_order() <= 24);
        let elems = enumerate_group(&d);
        let oracle = bruhat_by_reflections(&d);
        for (i, x) in elems.iter().enumerate() {
            for (j, w) in elems.iter().enumerate() {
                assert_eq!(
                    bruhat_leq(&d, x, w).unwrap(),
                    oracle[i][j],
                    "{series}{rank}: {x} vs {w}"
                );
            }
        }
    }
}

#[test]
fn left_multiplication_changes_length_by_one() {
    for (series, rank) in [(Series::A, 3), (Series::B, 2), (Series::G, 2)] {
        let d = datum(series, rank);
        for w in enumerate_group(&d) {
            for i in 0..d.ss_rank() {
                let s = simple_reflection(&d, i).unwrap();
                let sw = multiply(&d, &s, &w).unwrap();
                let diff = sw.length() as i64 - w.length() as i64;
                assert!(diff.abs() == 1);
            }
        }
    }
}

#[test]
fn group_enumeration_is_deterministic_and_length_sorted() {
    let d = datum(Series::B, 3);
    let a = enumerate_group(&d);
    let b = enumerate_group(&d);
    assert_eq!(a, b);
    for pair in a.windows(2) {
        assert!(pair[0].length() <= pair[1].length());
    }
    assert_eq!(a.len() as u64, d.weyl_order());
}
