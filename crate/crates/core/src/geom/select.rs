use crate::error::{Error, Result};
use std::cmp::Ordering;

/// k-selection (1-based) using only comparisons: the item that would sit at
/// position `k` if `items` were sorted non-decreasingly by `cmp`.
///
/// Deterministic introselect: median-of-three pivots, falling back to
/// median-of-medians when the recursion degenerates, so the worst case stays
/// linear.
pub fn select_kth_by<T: Clone, F>(items: &mut [T], k: usize, mut cmp: F) -> Result<T>
where
    F: FnMut(&T, &T) -> Ordering,
{
    if k == 0 || k > items.len() {
        return Err(Error::RankOutOfRange {
            k,
            len: items.len(),
        });
    }
    let limit = 2 * (usize::BITS - items.len().leading_zeros()) as usize + 2;
    let idx = select_loop(items, k - 1, limit, &mut cmp);
    Ok(items[idx].clone())
}

fn select_loop<T, F>(items: &mut [T], mut rank: usize, mut depth_budget: usize, cmp: &mut F) -> usize
where
    F: FnMut(&T, &T) -> Ordering,
{
    let mut lo = 0;
    let mut hi = items.len();
    loop {
        let len = hi - lo;
        if len <= 16 {
            insertion_sort(&mut items[lo..hi], cmp);
            return lo + rank;
        }
        let pivot = if depth_budget == 0 {
            median_of_medians(items, lo, hi, cmp)
        } else {
            depth_budget -= 1;
            median_of_three(items, lo, hi, cmp)
        };
        let (eq_lo, eq_hi) = partition3(items, lo, hi, pivot, cmp);
        if lo + rank < eq_lo {
            hi = eq_lo;
        } else if lo + rank < eq_hi {
            return lo + rank;
        } else {
            rank -= eq_hi - lo;
            lo = eq_hi;
        }
    }
}

fn insertion_sort<T, F: FnMut(&T, &T) -> Ordering>(items: &mut [T], cmp: &mut F) {
    for i in 1..items.len() {
        let mut j = i;
        while j > 0 && cmp(&items[j], &items[j - 1]) == Ordering::Less {
            items.swap(j, j - 1);
            j -= 1;
        }
    }
}

fn median_of_three<T, F: FnMut(&T, &T) -> Ordering>(
    items: &[T],
    lo: usize,
    hi: usize,
    cmp: &mut F,
) -> usize {
    let a = lo;
    let b = lo + (hi - lo) / 2;
    let c = hi - 1;
    let ab = cmp(&items[a], &items[b]);
    let bc = cmp(&items[b], &items[c]);
    let ac = cmp(&items[a], &items[c]);
    if ab != Ordering::Greater {
        if bc != Ordering::Greater {
            b
        } else if ac != Ordering::Greater {
            c
        } else {
            a
        }
    } else if bc == Ordering::Greater {
        b
    } else if ac == Ordering::Greater {
        c
    } else {
        a
    }
}

/// Classic groups-of-five pivot; guarantees a constant-fraction split.
fn median_of_medians<T, F: FnMut(&T, &T) -> Ordering>(
    items: &mut [T],
    lo: usize,
    hi: usize,
    cmp: &mut F,
) -> usize {
    let mut write = lo;
    let mut start = lo;
    while start < hi {
        let end = (start + 5).min(hi);
        insertion_sort(&mut items[start..end], cmp);
        let median = start + (end - start) / 2;
        items.swap(write, median);
        write += 1;
        start = end;
    }
    let medians = write - lo;
    if medians == 1 {
        return lo;
    }
    let mut sub_rank = (medians - 1) / 2;
    // Recurse on the prefix of group medians.
    let mut sub_lo = lo;
    let mut sub_hi = write;
    loop {
        let len = sub_hi - sub_lo;
        if len <= 16 {
            insertion_sort_range(items, sub_lo, sub_hi, cmp);
            return sub_lo + sub_rank;
        }
        let pivot = median_of_medians(items, sub_lo, sub_hi, cmp);
        let (eq_lo, eq_hi) = partition3(items, sub_lo, sub_hi, pivot, cmp);
        if sub_lo + sub_rank < eq_lo {
            sub_hi = eq_lo;
        } else if sub_lo + sub_rank < eq_hi {
            return sub_lo + sub_rank;
        } else {
            sub_rank -= eq_hi - sub_lo;
            sub_lo = eq_hi;
        }
    }
}

fn insertion_sort_range<T, F: FnMut(&T, &T) -> Ordering>(
    items: &mut [T],
    lo: usize,
    hi: usize,
    cmp: &mut F,
) {
    for i in lo + 1..hi {
        let mut j = i;
        while j > lo && cmp(&items[j], &items[j - 1]) == Ordering::Less {
            items.swap(j, j - 1);
            j -= 1;
        }
    }
}

/// Three-way partition around items[pivot]; returns the equal range.
fn partition3<T, F: FnMut(&T, &T) -> Ordering>(
    items: &mut [T],
    lo: usize,
    hi: usize,
    pivot: usize,
    cmp: &mut F,
) -> (usize, usize) {
    items.swap(lo, pivot);
    let mut lt = lo;
    let mut i = lo + 1;
    let mut gt = hi;
    while i < gt {
        match cmp(&items[i], &items[lt]) {
            Ordering::Less => {
                // Moves a pivot-valued item up to i, so the equal block slides.
                items.swap(i, lt);
                lt += 1;
                i += 1;
            }
            Ordering::Greater => {
                gt -= 1;
                items.swap(i, gt);
            }
            Ordering::Equal => i += 1,
        }
    }
    (lt, i)
}
