//! Equivalence deciders for the eight monoids, brute-force rewriting
//! oracles, shape functions, and bounded separating-context search.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{domain, precondition, resource, Result};
use crate::monoid::MonoidId;
use crate::stalactic::{p_st, Side};
use crate::taiga::{p_tg, BinaryShapeM};
use crate::words::{
    content, pack, restrict, rho, simple_interval_blocks, simple_part, Letter, OccSide, Word,
};

/// Default cap on the rearrangement class explored by [`rewrite_class`]:
/// `10!` states.
pub const DEFAULT_REWRITE_GUARD: u64 = 3_628_800;

/// Recoil set of a permutation word: the values `i` such that `i + 1`
/// occurs before `i`.
fn recoil_set(perm: &Word) -> BTreeSet<Letter> {
    let n = perm.len() as Letter;
    let mut pos = vec![0usize; perm.len() + 1];
    for (i, &a) in perm.letters().iter().enumerate() {
        pos[a as usize] = i;
    }
    (1..n)
        .filter(|&i| pos[(i + 1) as usize] < pos[i as usize])
        .collect()
}

pub(crate) fn recoil_set_of_packed(w: &Word) -> Result<BTreeSet<Letter>> {
    if !w.is_duplicate_free() {
        return precondition("word must be duplicate-free");
    }
    Ok(recoil_set(&pack(w)))
}

/// Duplicate-free hypoplactic equivalence: the packed words must be
/// permutations with equal supports and equal recoil sets. The criterion is
/// validated against the rewriting closure in the test suite.
pub fn hypo_equiv_distinct(u: &Word, v: &Word) -> Result<bool> {
    if !u.is_duplicate_free() || !v.is_duplicate_free() {
        return precondition("words must be duplicate-free");
    }
    Ok(u.len() == v.len() && recoil_set(&pack(u)) == recoil_set(&pack(v)))
}

/// Decides `u ≡ v` in the given monoid via its direct characterisation.
pub fn equiv(m: MonoidId, u: &Word, v: &Word) -> Result<bool> {
    match m {
        MonoidId::LSt => {
            Ok(content(u) == content(v) && rho(u, OccSide::First) == rho(v, OccSide::First))
        }
        MonoidId::RSt => {
            Ok(content(u) == content(v) && rho(u, OccSide::Last) == rho(v, OccSide::Last))
        }
        MonoidId::MSt => Ok(content(u) == content(v)
            && rho(u, OccSide::First) == rho(v, OccSide::First)
            && rho(u, OccSide::Last) == rho(v, OccSide::Last)),
        MonoidId::JSt => Ok(content(u) == content(v) && simple_part(u) == simple_part(v)),
        MonoidId::LTg => Ok(p_tg(u, Side::Left) == p_tg(v, Side::Left)),
        MonoidId::RTg => Ok(p_tg(u, Side::Right) == p_tg(v, Side::Right)),
        MonoidId::MTg => Ok(p_tg(u, Side::Left) == p_tg(v, Side::Left)
            && p_tg(u, Side::Right) == p_tg(v, Side::Right)),
        MonoidId::JTg => {
            if content(u) != content(v) {
                return Ok(false);
            }
            for block in simple_interval_blocks(u) {
                let set: BTreeSet<Letter> = block.into_iter().collect();
                if !hypo_equiv_distinct(&restrict(u, &set), &restrict(v, &set))? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        MonoidId::HypoDistinct => {
            if !u.is_duplicate_free() || !v.is_duplicate_free() {
                return precondition("words must be duplicate-free");
            }
            Ok(content(u) == content(v) && hypo_equiv_distinct(u, v)?)
        }
    }
}

/// A set of word relations, each applied as an adjacent transposition with a
/// side condition on the rest of the word.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RelationSet {
    RSt,
    LSt,
    Sylv,
    SylvSharp,
    MSt,
    MTg,
    JSt,
    RTg,
    LTg,
    JTg,
    Hypo,
}

impl RelationSet {
    /// Canonical relation set presenting each monoid.
    pub fn for_monoid(m: MonoidId) -> RelationSet {
        match m {
            MonoidId::LSt => RelationSet::LSt,
            MonoidId::RSt => RelationSet::RSt,
            MonoidId::MSt => RelationSet::MSt,
            MonoidId::JSt => RelationSet::JSt,
            MonoidId::LTg => RelationSet::LTg,
            MonoidId::RTg => RelationSet::RTg,
            MonoidId::MTg => RelationSet::MTg,
            MonoidId::JTg => RelationSet::JTg,
            MonoidId::HypoDistinct => RelationSet::Hypo,
        }
    }

    /// Whether swapping positions `i`, `i + 1` of `w` is an instance of the
    /// relation set (in either direction).
    pub fn swap_allowed(self, w: &[Letter], i: usize) -> bool {
        let (x, y) = (w[i], w[i + 1]);
        let lo = x.min(y);
        let hi = x.max(y);
        let before = &w[..i];
        let after = &w[i + 2..];
        match self {
            // one of the swapped letters occurs again to the right
            RelationSet::RSt => after.iter().any(|&c| c == x || c == y),
            // one of the swapped letters occurs to the left
            RelationSet::LSt => before.iter().any(|&c| c == x || c == y),
            // descending pair straddling a later letter inside [lo, hi)
            RelationSet::Sylv => lo < hi && after.iter().any(|&c| lo <= c && c < hi),
            // ascending pair straddling an earlier letter inside (lo, hi]
            RelationSet::SylvSharp => lo < hi && before.iter().any(|&c| lo < c && c <= hi),
            // a swapped letter occurs on both sides
            RelationSet::MSt => {
                before.iter().any(|&c| c == x || c == y) && after.iter().any(|&c| c == x || c == y)
            }
            // letters of [lo, hi] occur on both sides
            RelationSet::MTg => {
                lo < hi
                    && before.iter().any(|&c| lo <= c && c <= hi)
                    && after.iter().any(|&c| lo <= c && c <= hi)
            }
            RelationSet::JSt => {
                RelationSet::RSt.swap_allowed(w, i) || RelationSet::LSt.swap_allowed(w, i)
            }
            RelationSet::RTg => {
                RelationSet::Sylv.swap_allowed(w, i) || RelationSet::RSt.swap_allowed(w, i)
            }
            RelationSet::LTg => {
                RelationSet::SylvSharp.swap_allowed(w, i) || RelationSet::LSt.swap_allowed(w, i)
            }
            RelationSet::JTg => {
                RelationSet::RTg.swap_allowed(w, i) || RelationSet::LTg.swap_allowed(w, i)
            }
            RelationSet::Hypo => {
                RelationSet::Sylv.swap_allowed(w, i) || RelationSet::SylvSharp.swap_allowed(w, i)
            }
        }
    }
}

fn rearrangement_bound(w: &Word) -> BigUint {
    let mut num = BigUint::one();
    for i in 2..=w.len() {
        num *= i as u64;
    }
    let mut den = BigUint::one();
    for &c in content(w).counts().values() {
        for i in 2..=c {
            den *= i as u64;
        }
    }
    num / den
}

/// The full class of `w` under the bidirectional closure of a relation set.
/// All relations preserve content, so the class is a set of rearrangements
/// of `w`; the guard bounds that rearrangement count.
pub fn rewrite_class_with(w: &Word, rels: RelationSet, guard: u64) -> Result<BTreeSet<Word>> {
    if rearrangement_bound(w) > BigUint::from(guard) {
        return resource(format!(
            "rearrangement class of {w} may exceed {guard} states"
        ));
    }
    let mut seen: BTreeSet<Vec<Letter>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<Letter>> = VecDeque::new();
    seen.insert(w.letters().to_vec());
    queue.push_back(w.letters().to_vec());
    while let Some(cur) = queue.pop_front() {
        for i in 0..cur.len().saturating_sub(1) {
            if cur[i] != cur[i + 1] && rels.swap_allowed(&cur, i) {
                let mut next = cur.clone();
                next.swap(i, i + 1);
                if !seen.contains(&next) {
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen.into_iter().map(Word::from_vec_unchecked).collect())
}

/// [`rewrite_class_with`] for a monoid's canonical relation set.
pub fn rewrite_class(m: MonoidId, w: &Word, guard: u64) -> Result<BTreeSet<Word>> {
    if m == MonoidId::HypoDistinct && !w.is_duplicate_free() {
        return precondition("word must be duplicate-free");
    }
    rewrite_class_with(w, RelationSet::for_monoid(m), guard)
}

/// The shape of a P-symbol: column heights for stalactic monoids,
/// multiplicity-labelled trees for taiga monoids, pairs for the meets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Shape {
    Heights(Vec<usize>),
    HeightsPair(Vec<usize>, Vec<usize>),
    MultTree(BinaryShapeM),
    MultTreePair(BinaryShapeM, BinaryShapeM),
}

/// Shape of the P-symbol of `w`. Join monoids have no shape function.
pub fn shape(m: MonoidId, w: &Word) -> Result<Shape> {
    match m {
        MonoidId::LSt => Ok(Shape::Heights(p_st(w, Side::Left).heights())),
        MonoidId::RSt => Ok(Shape::Heights(p_st(w, Side::Right).heights())),
        MonoidId::MSt => Ok(Shape::HeightsPair(
            p_st(w, Side::Left).heights(),
            p_st(w, Side::Right).heights(),
        )),
        MonoidId::LTg => Ok(Shape::MultTree(p_tg(w, Side::Left).shape())),
        MonoidId::RTg => Ok(Shape::MultTree(p_tg(w, Side::Right).shape())),
        MonoidId::MTg => Ok(Shape::MultTreePair(
            p_tg(w, Side::Left).shape(),
            p_tg(w, Side::Right).shape(),
        )),
        MonoidId::JSt | MonoidId::JTg | MonoidId::HypoDistinct => {
            domain(format!("{m} has no shape function"))
        }
    }
}

/// Where context letters may be attached in a separating-context search.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ContextMode {
    Left,
    Right,
    TwoSided,
}

/// Searches for `(r, s)` with `shape(m, r·u·s) != shape(m, r·v·s)`, with
/// `r` and `s` words over `[alphabet]` of length at most `max_len` (the
/// unused side stays empty outside two-sided mode). Contexts are tried by
/// total length, then lexicographically; `None` means the bounded search
/// found no separating context.
pub fn find_separating_context(
    m: MonoidId,
    u: &Word,
    v: &Word,
    mode: ContextMode,
    max_len: usize,
    alphabet: Letter,
) -> Result<Option<(Word, Word)>> {
    shape(m, u)?; // reject monoids without a shape function early
    let differs = |r: &Word, s: &Word| -> Result<bool> {
        let left = shape(m, &r.concat(u).concat(s))?;
        let right = shape(m, &r.concat(v).concat(s))?;
        Ok(left != right)
    };
    let empty = Word::empty();
    match mode {
        ContextMode::Left => {
            for r in crate::words::words_over(alphabet, max_len) {
                if differs(&r, &empty)? {
                    return Ok(Some((r, empty)));
                }
            }
        }
        ContextMode::Right => {
            for s in crate::words::words_over(alphabet, max_len) {
                if differs(&empty, &s)? {
                    return Ok(Some((empty, s)));
                }
            }
        }
        ContextMode::TwoSided => {
            let all: Vec<Word> = crate::words::words_over(alphabet, max_len).collect();
            let mut pairs: Vec<(&Word, &Word)> = Vec::new();
            for r in &all {
                for s in &all {
                    pairs.push((r, s));
                }
            }
            pairs.sort_by_key(|(r, s)| {
                (
                    r.len() + s.len(),
                    r.letters().to_vec(),
                    s.letters().to_vec(),
                )
            });
            for (r, s) in pairs {
                if differs(r, s)? {
                    return Ok(Some((r.clone(), s.clone())));
                }
            }
        }
    }
    Ok(None)
}
