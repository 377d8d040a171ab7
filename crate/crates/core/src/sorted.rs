//! Set operations on sorted, duplicate-free slices.
//!
//! When one side is much shorter than the other the short side is probed
//! into the long one by binary search instead of a full merge.

use std::cmp::Ordering;

fn lopsided(a: usize, b: usize) -> bool {
    let (small, large) = if a <= b { (a, b) } else { (b, a) };
    small.saturating_mul(8) < large
}

pub(crate) fn intersect<T: Ord + Copy>(a: &[T], b: &[T], out: &mut Vec<T>) {
    out.clear();
    if lopsided(a.len(), b.len()) {
        let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        out.extend(small.iter().copied().filter(|x| large.binary_search(x).is_ok()));
        return;
    }
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
}

pub(crate) fn intersection_len<T: Ord + Copy>(a: &[T], b: &[T]) -> usize {
    if lopsided(a.len(), b.len()) {
        let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        return small.iter().filter(|x| large.binary_search(x).is_ok()).count();
    }
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// `a \ b`.
pub(crate) fn difference<T: Ord + Copy>(a: &[T], b: &[T]) -> Vec<T> {
    if lopsided(a.len(), b.len()) {
        return a.iter().copied().filter(|x| b.binary_search(x).is_err()).collect();
    }
    let mut out = Vec::with_capacity(a.len());
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j >= b.len() || b[j] != x {
            out.push(x);
        }
    }
    out
}

pub(crate) fn insert<T: Ord>(set: &mut Vec<T>, x: T) {
    if let Err(pos) = set.binary_search(&x) {
        set.insert(pos, x);
    }
}

pub(crate) fn remove<T: Ord>(set: &mut Vec<T>, x: &T) {
    if let Ok(pos) = set.binary_search(x) {
        set.remove(pos);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn matches_btreeset(a in proptest::collection::btree_set(0u32..200, 0..60),
                            b in proptest::collection::btree_set(0u32..200, 0..5)) {
            for (x, y) in [(&a, &b), (&b, &a)] {
                let xs: Vec<u32> = x.iter().copied().collect();
                let ys: Vec<u32> = y.iter().copied().collect();
                let mut out = Vec::new();
                intersect(&xs, &ys, &mut out);
                let expect: Vec<u32> = x.intersection(y).copied().collect();
                prop_assert_eq!(&out, &expect);
                prop_assert_eq!(intersection_len(&xs, &ys), expect.len());
                let diff: Vec<u32> = x.difference(y).copied().collect();
                prop_assert_eq!(difference(&xs, &ys), diff);
            }
        }
    }
}
