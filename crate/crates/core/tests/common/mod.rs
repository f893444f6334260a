//! Helpers shared by the integration suites.
#![allow(dead_code)] // each suite uses its own subset

use plackit::words::{Letter, Word};

pub fn w(s: &str) -> Word {
    Word::from_digits(s).unwrap()
}

/// All permutations of the given items, in lexicographic order.
pub fn permutations<T: Clone + Ord>(items: &[T]) -> Vec<Vec<T>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut sorted = items.to_vec();
    sorted.sort();
    let mut out = Vec::new();
    fn go<T: Clone>(rest: &[T], prefix: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let mut next: Vec<T> = rest.to_vec();
            let x = next.remove(i);
            prefix.push(x);
            go(&next, prefix, out);
            prefix.pop();
        }
    }
    go(&sorted, &mut Vec::new(), &mut out);
    out
}

/// All vectors of the given length with entries summing to at most
/// `max_sum`.
pub fn bounded_vectors(len: usize, max_sum: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..=max_sum {
        for mut rest in bounded_vectors(len - 1, max_sum - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All words over `[n]` of exactly the given length.
pub fn words_of_length(n: Letter, len: usize) -> Vec<Word> {
    plackit::words::words_over(n, len)
        .filter(|v| v.len() == len)
        .collect()
}
