//! Words over the positive integers and the statistics and transformations
//! used everywhere else in the crate: content, occurrence orders, simple
//! letters, standardisation, packing, restriction and reversal.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{domain, Error, Result};

/// A letter of the alphabet `{1, 2, ...}`.
pub type Letter = u64;

/// A finite word over the positive integers. The empty word is valid.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Builds a word, rejecting any letter `< 1`.
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.contains(&0) {
            return domain("letters must be positive");
        }
        Ok(Word(letters))
    }

    /// Parses a word from a digit string, one letter per character.
    /// Only letters `1..=9` can be written this way.
    pub fn from_digits(s: &str) -> Result<Self> {
        let mut letters = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c.to_digit(10) {
                Some(d) if d >= 1 => letters.push(d as Letter),
                _ => return domain(format!("invalid digit {c:?} in word")),
            }
        }
        Ok(Word(letters))
    }

    pub(crate) fn from_vec_unchecked(letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|&a| a >= 1));
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count_of(&self, x: Letter) -> usize {
        self.0.iter().filter(|&&a| a == x).count()
    }

    pub fn support(&self) -> BTreeSet<Letter> {
        self.0.iter().copied().collect()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// True when no letter repeats.
    pub fn is_duplicate_free(&self) -> bool {
        self.support().len() == self.len()
    }
}

impl fmt::Display for Word {
    /// Digit string when every letter fits one digit, otherwise comma-separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&a| a <= 9) {
            for a in &self.0 {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "Word(\u{3b5})")
        } else {
            write!(f, "Word({self})")
        }
    }
}

/// Letter multiplicities of a word; keys are exactly the support.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct Content(BTreeMap<Letter, usize>);

impl Content {
    pub fn counts(&self) -> &BTreeMap<Letter, usize> {
        &self.0
    }

    pub fn get(&self, x: Letter) -> usize {
        self.0.get(&x).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = Letter> + '_ {
        self.0.keys().copied()
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Which occurrence of each letter orders the support.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OccSide {
    First,
    Last,
}

/// The bijection from `supp(w)` onto `[|supp(w)|]` ranking letters by first
/// or last occurrence, read left to right. Both the rank sequence and the
/// letter-to-rank map are exposed; the sequence is the canonical view.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OccOrder {
    side: OccSide,
    order: Vec<Letter>,
}

impl OccOrder {
    pub fn side(&self) -> OccSide {
        self.side
    }

    /// Support letters in rank order.
    pub fn order(&self) -> &[Letter] {
        &self.order
    }

    /// 1-based rank of a support letter.
    pub fn rank(&self, x: Letter) -> Option<usize> {
        self.order.iter().position(|&a| a == x).map(|i| i + 1)
    }

    /// Letter at a 1-based rank.
    pub fn letter_at(&self, rank: usize) -> Option<Letter> {
        if rank == 0 {
            return None;
        }
        self.order.get(rank - 1).copied()
    }

    pub fn index_map(&self) -> BTreeMap<Letter, usize> {
        self.order
            .iter()
            .enumerate()
            .map(|(i, &a)| (a, i + 1))
            .collect()
    }

    /// Extends the bijection to a morphism on words whose letters lie in the
    /// support, replacing each letter by its rank.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        let map = self.index_map();
        let mut out = Vec::with_capacity(w.len());
        for &a in w.letters() {
            match map.get(&a) {
                Some(&r) => out.push(r as Letter),
                None => return domain(format!("letter {a} outside the support")),
            }
        }
        Ok(Word(out))
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// Letter multiplicities of `w`.
pub fn content(w: &Word) -> Content {
    let mut m = BTreeMap::new();
    for &a in w.letters() {
        *m.entry(a).or_insert(0) += 1;
    }
    Content(m)
}

/// Ranks the support of `w` by first (or last) occurrence, left to right.
pub fn rho(w: &Word, side: OccSide) -> OccOrder {
    let mut seen: BTreeMap<Letter, usize> = BTreeMap::new();
    for (pos, &a) in w.letters().iter().enumerate() {
        match side {
            OccSide::First => {
                seen.entry(a).or_insert(pos);
            }
            OccSide::Last => {
                seen.insert(a, pos);
            }
        }
    }
    let mut pairs: Vec<(usize, Letter)> = seen.into_iter().map(|(a, p)| (p, a)).collect();
    pairs.sort();
    OccOrder {
        side,
        order: pairs.into_iter().map(|(_, a)| a).collect(),
    }
}

/// The subsequence of letters occurring exactly once in `w`.
pub fn simple_part(w: &Word) -> Word {
    let cont = content(w);
    Word(
        w.letters()
            .iter()
            .copied()
            .filter(|&a| cont.get(a) == 1)
            .collect(),
    )
}

/// Which tie-break standardisation uses for equal letters.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StdVariant {
    /// Equal letters ranked by increasing occurrence index.
    Std,
    /// Equal letters ranked by decreasing occurrence index.
    Rstd,
}

/// Standardised (or reverse-standardised) word: a permutation of `[|w|]`
/// ranking positions by letter first and occurrence index second.
pub fn standardize(w: &Word, variant: StdVariant) -> Word {
    let n = w.len();
    let mut occ: HashMap<Letter, usize> = HashMap::new();
    let mut keyed: Vec<(Letter, usize)> = Vec::with_capacity(n);
    for &a in w.letters() {
        let c = occ.entry(a).or_insert(0);
        *c += 1;
        keyed.push((a, *c));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        let (a, ai) = keyed[i];
        let (b, bj) = keyed[j];
        a.cmp(&b).then_with(|| match variant {
            StdVariant::Std => ai.cmp(&bj),
            StdVariant::Rstd => bj.cmp(&ai),
        })
    });
    let mut out = vec![0 as Letter; n];
    for (rank, &i) in order.iter().enumerate() {
        out[i] = (rank + 1) as Letter;
    }
    Word(out)
}

/// Replaces each letter of `w` by its rank in the sorted support.
pub fn pack(w: &Word) -> Word {
    let ranks: BTreeMap<Letter, Letter> = w
        .support()
        .into_iter()
        .enumerate()
        .map(|(i, a)| (a, (i + 1) as Letter))
        .collect();
    Word(w.letters().iter().map(|a| ranks[a]).collect())
}

/// Keeps only the letters of `w` belonging to `s`.
pub fn restrict(w: &Word, s: &BTreeSet<Letter>) -> Word {
    Word(
        w.letters()
            .iter()
            .copied()
            .filter(|a| s.contains(a))
            .collect(),
    )
}

/// A word transformation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Transform {
    /// Mirrors the sequence.
    Reverse,
    /// Reverses and complements each letter `x` to `n + 1 - x`;
    /// requires every letter to be at most `n`.
    Schutzenberger(Letter),
}

pub fn transform(w: &Word, op: Transform) -> Result<Word> {
    match op {
        Transform::Reverse => Ok(Word(w.letters().iter().rev().copied().collect())),
        Transform::Schutzenberger(n) => {
            if let Some(&a) = w.letters().iter().find(|&&a| a > n) {
                return domain(format!("letter {a} exceeds alphabet bound {n}"));
            }
            Ok(Word(w.letters().iter().rev().map(|&a| n + 1 - a).collect()))
        }
    }
}

/// Maximal intervals of the sorted support consisting solely of simple
/// letters. Blocks are returned in increasing order, each as a sorted
/// sequence of letters.
pub fn simple_interval_blocks(w: &Word) -> Vec<Vec<Letter>> {
    let cont = content(w);
    let supp: Vec<Letter> = cont.support().collect();
    let mut blocks = Vec::new();
    let mut current: Vec<Letter> = Vec::new();
    for &a in &supp {
        if cont.get(a) == 1 {
            current.push(a);
        } else if !current.is_empty() {
            blocks.push(std::mem::take(&mut current));
        }
    }
    if !current.is_empty() {
        blocks.push(current);
    }
    blocks
}

/// Inverts a permutation of `[n]` given in one-line notation.
pub fn invert_permutation(w: &Word) -> Result<Word> {
    let n = w.len();
    let mut inv = vec![0 as Letter; n];
    for (i, &a) in w.letters().iter().enumerate() {
        let a = a as usize;
        if a == 0 || a > n || inv[a - 1] != 0 {
            return Err(Error::Domain(format!("{w} is not a permutation")));
        }
        inv[a - 1] = (i + 1) as Letter;
    }
    Ok(Word(inv))
}

/// Iterates every word over `[n]` with length in `0..=max_len`,
/// ordered by length and then lexicographically.
pub fn words_over(n: Letter, max_len: usize) -> impl Iterator<Item = Word> {
    WordRange {
        n,
        max_len,
        state: Some(Vec::new()),
    }
}

struct WordRange {
    n: Letter,
    max_len: usize,
    state: Option<Vec<Letter>>,
}

impl Iterator for WordRange {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let cur = self.state.take()?;
        let out = Word(cur.clone());
        // advance: odometer in base n, growing by length
        let mut next = cur;
        let mut i = next.len();
        loop {
            if i == 0 {
                if next.len() >= self.max_len {
                    self.state = None;
                } else {
                    self.state = Some(vec![1; next.len() + 1]);
                }
                break;
            }
            i -= 1;
            if next[i] < self.n {
                next[i] += 1;
                for x in next.iter_mut().skip(i + 1) {
                    *x = 1;
                }
                self.state = Some(next);
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from_digits(s).unwrap()
    }

    #[test]
    fn content_examples() {
        let c = content(&w("212511354"));
        let expected: BTreeMap<Letter, usize> = [(1, 3), (2, 2), (3, 1), (4, 1), (5, 2)]
            .into_iter()
            .collect();
        assert_eq!(c.counts(), &expected);
        assert!(content(&Word::empty()).is_empty());
        assert_eq!(content(&w("111")).counts(), &[(1, 3)].into_iter().collect());
    }

    #[test]
    fn rho_examples() {
        assert_eq!(
            rho(&w("212511354"), OccSide::First).order(),
            &[2, 1, 5, 3, 4]
        );
        assert_eq!(
            rho(&w("212511354"), OccSide::Last).order(),
            &[2, 1, 3, 5, 4]
        );
        assert!(rho(&Word::empty(), OccSide::First).is_empty());
    }

    #[test]
    fn simple_part_examples() {
        assert_eq!(simple_part(&w("212511354")), w("34"));
        assert_eq!(simple_part(&w("1212")), Word::empty());
        assert_eq!(simple_part(&w("123")), w("123"));
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(standardize(&w("1211"), StdVariant::Std), w("1423"));
        assert_eq!(standardize(&w("1211"), StdVariant::Rstd), w("3421"));
        assert_eq!(standardize(&w("123"), StdVariant::Std), w("123"));
        assert_eq!(standardize(&w("1121"), StdVariant::Std), w("1243"));
        assert_eq!(standardize(&w("1121"), StdVariant::Rstd), w("3241"));
    }

    #[test]
    fn pack_examples() {
        assert_eq!(pack(&w("474")), w("121"));
        assert_eq!(pack(&w("212")), w("212"));
        assert_eq!(pack(&w("99")), w("11"));
    }

    #[test]
    fn restrict_examples() {
        let s: BTreeSet<Letter> = [1, 3].into_iter().collect();
        assert_eq!(restrict(&w("2132"), &s), w("13"));
        let word = w("2132");
        assert_eq!(restrict(&word, &word.support()), word);
        assert_eq!(restrict(&word, &BTreeSet::new()), Word::empty());
    }

    #[test]
    fn transform_examples() {
        assert_eq!(
            transform(&w("2131"), Transform::Reverse).unwrap(),
            w("1312")
        );
        assert_eq!(
            transform(&w("12"), Transform::Schutzenberger(2)).unwrap(),
            w("12")
        );
        assert_eq!(
            transform(&Word::empty(), Transform::Reverse).unwrap(),
            Word::empty()
        );
        assert!(transform(&w("3"), Transform::Schutzenberger(2)).is_err());
    }

    #[test]
    fn simple_interval_block_examples() {
        assert_eq!(simple_interval_blocks(&w("213")), vec![vec![1, 2, 3]]);
        assert!(simple_interval_blocks(&w("1212")).is_empty());
        assert_eq!(simple_interval_blocks(&w("2211354")), vec![vec![3, 4, 5]]);
        // non-adjacent simple letters split across a repeated one
        assert_eq!(simple_interval_blocks(&w("13441")), vec![vec![3]]);
    }

    #[test]
    fn occ_order_is_bijective() {
        for word in words_over(4, 5) {
            for side in [OccSide::First, OccSide::Last] {
                let r = rho(&word, side);
                assert_eq!(r.len(), word.support().len());
                let ranks: BTreeSet<usize> =
                    word.support().iter().map(|&a| r.rank(a).unwrap()).collect();
                assert_eq!(ranks, (1..=r.len()).collect());
            }
        }
    }

    #[test]
    fn standardize_is_permutation_and_agrees_on_distinct_letters() {
        for word in words_over(3, 5) {
            let s = standardize(&word, StdVariant::Std);
            let r = standardize(&word, StdVariant::Rstd);
            assert!(invert_permutation(&s).is_ok());
            assert!(invert_permutation(&r).is_ok());
            for i in 0..word.len() {
                for j in 0..word.len() {
                    if word.letters()[i] != word.letters()[j] {
                        assert_eq!(
                            s.letters()[i] < s.letters()[j],
                            r.letters()[i] < r.letters()[j]
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn restrict_commutes_with_reverse() {
        for word in words_over(3, 4) {
            let all: Vec<Letter> = word.support().into_iter().collect();
            for mask in 0..(1u32 << all.len()) {
                let s: BTreeSet<Letter> = all
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &a)| a)
                    .collect();
                let lhs = restrict(&transform(&word, Transform::Reverse).unwrap(), &s);
                let rhs = transform(&restrict(&word, &s), Transform::Reverse).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn pack_preserves_count_multiset() {
        for word in words_over(4, 5) {
            let mut a: Vec<usize> = content(&word).counts().values().copied().collect();
            let mut b: Vec<usize> = content(&pack(&word)).counts().values().copied().collect();
            a.sort_unstable();
            b.sort_unstable();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn word_range_order() {
        let ws: Vec<Word> = words_over(2, 2).collect();
        let expect: Vec<Word> = ["", "1", "2", "11", "12", "21", "22"]
            .iter()
            .map(|s| w(s))
            .collect();
        assert_eq!(ws, expect);
    }

    #[test]
    fn rejects_zero_letters() {
        assert!(Word::new(vec![1, 0]).is_err());
        assert!(Word::from_digits("102").is_err());
    }
}
