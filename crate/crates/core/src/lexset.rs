//! Fixed-size bitsets over vertex ids plus the tie-breaking order used by
//! the solvers.
//!
//! Solutions are compared by total weight first; exact ties are broken by
//! comparing the sorted id sequences of the two sets lexicographically
//! (`[0, 5] < [0, 7]`, and a strict prefix such as `[1]` precedes `[1, 2]`).
//! `lex_less` implements that order directly on bitsets.

pub(crate) fn words_for(n_bits: usize) -> usize {
    n_bits.div_ceil(64)
}

pub(crate) fn empty(words: usize) -> Box<[u64]> {
    vec![0u64; words].into_boxed_slice()
}

pub(crate) fn insert(set: &mut [u64], bit: usize) {
    set[bit / 64] |= 1u64 << (bit % 64);
}

pub(crate) fn with_bit(set: &[u64], bit: usize) -> Box<[u64]> {
    let mut out: Box<[u64]> = set.into();
    insert(&mut out, bit);
    out
}

pub(crate) fn union(a: &[u64], b: &[u64]) -> Box<[u64]> {
    a.iter().zip(b).map(|(x, y)| x | y).collect()
}

pub(crate) fn to_sorted_ids(set: &[u64]) -> Vec<usize> {
    let mut ids = Vec::new();
    for (w, &word) in set.iter().enumerate() {
        let mut bits = word;
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            ids.push(w * 64 + b);
            bits &= bits - 1;
        }
    }
    ids
}

/// True iff the sorted id sequence of `a` is strictly lexicographically
/// smaller than that of `b`. Both slices must have the same length.
///
/// Let `d` be the smallest id on which the sets disagree (the sets are equal
/// when no such id exists). If `d ∈ a`, then `a` is smaller exactly when `b`
/// still has some member greater than `d`; otherwise `b` is a strict prefix
/// of `a` and precedes it. Symmetrically when `d ∈ b`.
pub(crate) fn lex_less(a: &[u64], b: &[u64]) -> bool {
    debug_assert_eq!(a.len(), b.len());
    let mut word = usize::MAX;
    for i in 0..a.len() {
        if a[i] != b[i] {
            word = i;
            break;
        }
    }
    if word == usize::MAX {
        return false;
    }
    let bit = (a[word] ^ b[word]).trailing_zeros() as usize;
    let d_in_a = (a[word] >> bit) & 1 == 1;

    let has_greater = |s: &[u64]| -> bool {
        ((s[word] >> bit) >> 1) != 0 || s[word + 1..].iter().any(|&w| w != 0)
    };

    if d_in_a {
        has_greater(b)
    } else {
        !has_greater(a)
    }
}
