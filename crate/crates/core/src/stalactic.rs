//! Stalactic tableaux and patience-sorting tableaux with their insertion
//! algorithms and readings.
//!
//! A stalactic tableau is a top-aligned collection of columns, every cell of
//! a column carrying the same letter and no two columns sharing a letter, so
//! a column is stored as a `(letter, height)` pair. A patience-sorting
//! tableau is a composition diagram labelled by a permutation of `[n]` with a
//! strictly increasing top row and strictly monotone columns; it records the
//! insertion positions.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{domain, validation, Result};
use crate::words::{
    content, invert_permutation, rho, standardize, Content, Letter, OccSide, StdVariant, Word,
};

/// One column of a stalactic tableau.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct StColumn {
    pub letter: Letter,
    pub height: usize,
}

/// A stalactic tableau, columns left to right.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StalacticTableau {
    cols: Vec<StColumn>,
}

impl StalacticTableau {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(cols: Vec<(Letter, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &(letter, height) in &cols {
            if letter == 0 {
                return validation("column letters must be positive");
            }
            if height == 0 {
                return validation("column heights must be positive");
            }
            if !seen.insert(letter) {
                return validation("duplicate column letter");
            }
        }
        Ok(StalacticTableau {
            cols: cols
                .into_iter()
                .map(|(letter, height)| StColumn { letter, height })
                .collect(),
        })
    }

    pub fn columns(&self) -> &[StColumn] {
        &self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }

    /// Sequence of column letters, left to right.
    pub fn top_row(&self) -> Vec<Letter> {
        self.cols.iter().map(|c| c.letter).collect()
    }

    pub fn heights(&self) -> Vec<usize> {
        self.cols.iter().map(|c| c.height).collect()
    }

    pub fn support(&self) -> BTreeSet<Letter> {
        self.cols.iter().map(|c| c.letter).collect()
    }

    pub fn content(&self) -> Content {
        content(&st_column_reading(self))
    }

    pub fn cell_count(&self) -> usize {
        self.cols.iter().map(|c| c.height).sum()
    }

    /// 1-based position of a letter in the top row.
    pub fn rho(&self, letter: Letter) -> Option<usize> {
        self.cols
            .iter()
            .position(|c| c.letter == letter)
            .map(|i| i + 1)
    }

    /// Letters of simple (height-1) columns, left to right.
    pub fn simple_letters(&self) -> Vec<Letter> {
        self.cols
            .iter()
            .filter(|c| c.height == 1)
            .map(|c| c.letter)
            .collect()
    }
}

impl fmt::Debug for StalacticTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .cols
            .iter()
            .map(|c| format!("{}^{}", c.letter, c.height))
            .collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// How a letter enters a stalactic tableau.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StInsertMode {
    /// Absent letters start a new column at the left; present letters grow
    /// their column in place.
    NewAtLeft,
    /// Mirror image: new columns appear at the right.
    NewAtRight,
    /// The letter's column (fresh or grown) is detached and reattached as
    /// the rightmost column.
    MoveToRight,
    /// Mirror image: reattached as the leftmost column.
    MoveToLeft,
}

pub fn st_insert(t: &StalacticTableau, a: Letter, mode: StInsertMode) -> Result<StalacticTableau> {
    if a == 0 {
        return domain("letter must be positive");
    }
    let mut cols = t.cols.clone();
    let found = cols.iter().position(|c| c.letter == a);
    match mode {
        StInsertMode::NewAtLeft => match found {
            Some(i) => cols[i].height += 1,
            None => cols.insert(
                0,
                StColumn {
                    letter: a,
                    height: 1,
                },
            ),
        },
        StInsertMode::NewAtRight => match found {
            Some(i) => cols[i].height += 1,
            None => cols.push(StColumn {
                letter: a,
                height: 1,
            }),
        },
        StInsertMode::MoveToRight => {
            let col = match found {
                Some(i) => {
                    let mut c = cols.remove(i);
                    c.height += 1;
                    c
                }
                None => StColumn {
                    letter: a,
                    height: 1,
                },
            };
            cols.push(col);
        }
        StInsertMode::MoveToLeft => {
            let col = match found {
                Some(i) => {
                    let mut c = cols.remove(i);
                    c.height += 1;
                    c
                }
                None => StColumn {
                    letter: a,
                    height: 1,
                },
            };
            cols.insert(0, col);
        }
    }
    Ok(StalacticTableau { cols })
}

/// Which of the two mirror-image tableau families is meant.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// The stalactic P-symbol of `w`: reading right to left with new columns at
/// the left (`Side::Right`), or left to right with new columns at the right
/// (`Side::Left`).
pub fn p_st(w: &Word, side: Side) -> StalacticTableau {
    let mut t = StalacticTableau::empty();
    match side {
        Side::Right => {
            for &a in w.letters().iter().rev() {
                t = st_insert(&t, a, StInsertMode::NewAtLeft).expect("valid letter");
            }
        }
        Side::Left => {
            for &a in w.letters() {
                t = st_insert(&t, a, StInsertMode::NewAtRight).expect("valid letter");
            }
        }
    }
    t
}

/// Concatenation of `letter^height` over the columns, left to right.
/// Re-inserting this reading rebuilds the tableau.
pub fn st_column_reading(t: &StalacticTableau) -> Word {
    let mut v = Vec::with_capacity(t.cell_count());
    for c in &t.cols {
        v.extend(std::iter::repeat_n(c.letter, c.height));
    }
    Word::from_vec_unchecked(v)
}

/// Column monotonicity of a patience-sorting tableau.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum PsVariant {
    Increasing,
    Decreasing,
}

/// A patience-sorting tableau. Columns are stored top to bottom; the
/// bottom-to-top reading of increasing tableaux is realised by the reading
/// operation, not the storage.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PsTableau {
    variant: PsVariant,
    cols: Vec<Vec<usize>>,
}

impl PsTableau {
    pub fn empty(variant: PsVariant) -> Self {
        PsTableau {
            variant,
            cols: Vec::new(),
        }
    }

    pub fn new(variant: PsVariant, cols: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for col in &cols {
            if col.is_empty() {
                return validation("empty column");
            }
            for &x in col {
                if x == 0 || !seen.insert(x) {
                    return validation("labels must be distinct positive integers");
                }
            }
            for pair in col.windows(2) {
                let ok = match variant {
                    PsVariant::Increasing => pair[0] < pair[1],
                    PsVariant::Decreasing => pair[0] > pair[1],
                };
                if !ok {
                    return validation("columns must be strictly monotone top to bottom");
                }
            }
        }
        for pair in cols.windows(2) {
            if pair[0][0] >= pair[1][0] {
                return validation("top row must be strictly increasing");
            }
        }
        Ok(PsTableau { variant, cols })
    }

    pub fn variant(&self) -> PsVariant {
        self.variant
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.cols
    }

    pub fn heights(&self) -> Vec<usize> {
        self.cols.iter().map(|c| c.len()).collect()
    }

    pub fn cell_count(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }

    /// True when the labels are exactly `1..=n`, as in a completed
    /// recording tableau.
    pub fn is_standard(&self) -> bool {
        let n = self.cell_count();
        let labels: BTreeSet<usize> = self.cols.iter().flatten().copied().collect();
        labels == (1..=n).collect()
    }

    fn contains(&self, a: usize) -> bool {
        self.cols.iter().any(|c| c.contains(&a))
    }
}

impl fmt::Debug for PsTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.variant {
            PsVariant::Increasing => "inc",
            PsVariant::Decreasing => "dec",
        };
        let parts: Vec<String> = self
            .cols
            .iter()
            .map(|c| {
                let xs: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("({})", xs.join(","))
            })
            .collect();
        write!(f, "{tag}[{}]", parts.join(","))
    }
}

/// How a label enters a patience-sorting tableau.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PsInsertMode {
    /// For increasing tableaux: labels larger than every top-row label open
    /// a new rightmost column, otherwise the label is pushed onto the
    /// leftmost column whose top label exceeds it.
    IncreasingRight,
    /// Mirror image for decreasing tableaux, with "left" and "greater"
    /// dualised.
    DecreasingLeft,
}

pub fn ps_insert(s: &PsTableau, a: usize, mode: PsInsertMode) -> Result<PsTableau> {
    if a == 0 {
        return domain("label must be positive");
    }
    if s.contains(a) {
        return domain(format!("duplicate label {a}"));
    }
    let expected = match mode {
        PsInsertMode::IncreasingRight => PsVariant::Increasing,
        PsInsertMode::DecreasingLeft => PsVariant::Decreasing,
    };
    if s.variant != expected {
        return domain("insertion mode does not match tableau variant");
    }
    let mut cols = s.cols.clone();
    match mode {
        PsInsertMode::IncreasingRight => match cols.iter().position(|c| c[0] > a) {
            Some(i) => cols[i].insert(0, a),
            None => cols.push(vec![a]),
        },
        PsInsertMode::DecreasingLeft => match cols.iter().rposition(|c| c[0] < a) {
            Some(i) => cols[i].insert(0, a),
            None => cols.insert(0, vec![a]),
        },
    }
    Ok(PsTableau {
        variant: s.variant,
        cols,
    })
}

/// The stalactic Q-symbol of `w`. `Side::Left` ranks letters by first
/// occurrence, reverse-standardises, inverts and inserts left to right into
/// an increasing tableau; `Side::Right` uses last occurrences, inserting
/// right to left into a decreasing tableau. Column `i` of the result lists
/// the positions in `w` of the `i`-th column letter of the matching P-symbol.
pub fn q_st(w: &Word, side: Side) -> PsTableau {
    let occ_side = match side {
        Side::Left => OccSide::First,
        Side::Right => OccSide::Last,
    };
    let mapped = rho(w, occ_side).apply(w).expect("letters lie in support");
    let perm = invert_permutation(&standardize(&mapped, StdVariant::Rstd))
        .expect("standardisation is a permutation");
    match side {
        Side::Left => {
            let mut s = PsTableau::empty(PsVariant::Increasing);
            for &a in perm.letters() {
                s = ps_insert(&s, a as usize, PsInsertMode::IncreasingRight).expect("fresh label");
            }
            s
        }
        Side::Right => {
            let mut s = PsTableau::empty(PsVariant::Decreasing);
            for &a in perm.letters().iter().rev() {
                s = ps_insert(&s, a as usize, PsInsertMode::DecreasingLeft).expect("fresh label");
            }
            s
        }
    }
}

/// Column reading of a patience-sorting tableau: bottom to top per column
/// for increasing tableaux, top to bottom for decreasing ones, columns left
/// to right. The result is a product of strictly decreasing words.
pub fn ps_column_reading(s: &PsTableau) -> Vec<usize> {
    let mut out = Vec::with_capacity(s.cell_count());
    for col in &s.cols {
        match s.variant {
            PsVariant::Increasing => out.extend(col.iter().rev().copied()),
            PsVariant::Decreasing => out.extend(col.iter().copied()),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::words_over;

    fn w(s: &str) -> Word {
        Word::from_digits(s).unwrap()
    }

    fn st(cols: &[(Letter, usize)]) -> StalacticTableau {
        StalacticTableau::new(cols.to_vec()).unwrap()
    }

    #[test]
    fn st_insert_examples() {
        let t = st(&[(3, 1), (5, 2), (4, 1)]);
        let t = st_insert(&t, 1, StInsertMode::NewAtLeft).unwrap();
        assert_eq!(t, st(&[(1, 1), (3, 1), (5, 2), (4, 1)]));
        let t = st_insert(&t, 1, StInsertMode::NewAtLeft).unwrap();
        assert_eq!(t, st(&[(1, 2), (3, 1), (5, 2), (4, 1)]));

        let t = st_insert(&st(&[(2, 2), (1, 2)]), 2, StInsertMode::MoveToRight).unwrap();
        assert_eq!(t, st(&[(1, 2), (2, 3)]));
    }

    #[test]
    fn p_st_examples() {
        assert_eq!(
            p_st(&w("212511354"), Side::Right),
            st(&[(2, 2), (1, 3), (3, 1), (5, 2), (4, 1)])
        );
        assert_eq!(
            p_st(&w("212511354"), Side::Left),
            st(&[(2, 2), (1, 3), (5, 2), (3, 1), (4, 1)])
        );
        assert!(p_st(&Word::empty(), Side::Left).is_empty());
    }

    #[test]
    fn column_reading_examples() {
        assert_eq!(
            st_column_reading(&st(&[(2, 2), (1, 3), (3, 1), (5, 2), (4, 1)])),
            w("221113554")
        );
        assert_eq!(st_column_reading(&StalacticTableau::empty()), Word::empty());
        assert_eq!(st_column_reading(&st(&[(7, 1)])), w("7"));
    }

    fn ps(variant: PsVariant, cols: &[&[usize]]) -> PsTableau {
        PsTableau::new(variant, cols.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    #[test]
    fn ps_insert_examples() {
        let s = ps(PsVariant::Increasing, &[&[1, 3], &[2, 5, 6], &[4, 8], &[7]]);
        let s = ps_insert(&s, 9, PsInsertMode::IncreasingRight).unwrap();
        assert_eq!(
            s,
            ps(
                PsVariant::Increasing,
                &[&[1, 3], &[2, 5, 6], &[4, 8], &[7], &[9]]
            )
        );

        let s = ps(PsVariant::Decreasing, &[&[9]]);
        let s = ps_insert(&s, 4, PsInsertMode::DecreasingLeft).unwrap();
        assert_eq!(s, ps(PsVariant::Decreasing, &[&[4], &[9]]));
        let s = ps_insert(&s, 8, PsInsertMode::DecreasingLeft).unwrap();
        assert_eq!(s, ps(PsVariant::Decreasing, &[&[8, 4], &[9]]));
    }

    #[test]
    fn ps_insert_rejects_duplicates() {
        let s = ps(PsVariant::Increasing, &[&[1]]);
        assert!(ps_insert(&s, 1, PsInsertMode::IncreasingRight).is_err());
    }

    #[test]
    fn q_st_examples() {
        assert_eq!(
            q_st(&w("212511354"), Side::Right),
            ps(
                PsVariant::Decreasing,
                &[&[3, 1], &[6, 5, 2], &[7], &[8, 4], &[9]]
            )
        );
        assert_eq!(
            q_st(&w("212511354"), Side::Left),
            ps(
                PsVariant::Increasing,
                &[&[1, 3], &[2, 5, 6], &[4, 8], &[7], &[9]]
            )
        );
        assert_eq!(
            q_st(&w("1"), Side::Left),
            ps(PsVariant::Increasing, &[&[1]])
        );
    }

    #[test]
    fn shape_agreement_small() {
        // shapes of the P- and Q-symbols coincide, and column i of the
        // Q-symbol lists the positions of the i-th column letter of the
        // P-symbol
        for word in words_over(4, 5) {
            for side in [Side::Left, Side::Right] {
                let p = p_st(&word, side);
                let q = q_st(&word, side);
                assert_eq!(p.heights(), q.heights());
                for (i, c) in p.columns().iter().enumerate() {
                    let positions: BTreeSet<usize> = word
                        .letters()
                        .iter()
                        .enumerate()
                        .filter(|(_, &a)| a == c.letter)
                        .map(|(j, _)| j + 1)
                        .collect();
                    let col: BTreeSet<usize> = q.columns()[i].iter().copied().collect();
                    assert_eq!(positions, col);
                }
            }
        }
    }

    #[test]
    fn iterative_insertion_matches() {
        // reading left to right with MoveToRight rebuilds the right
        // P-symbol; right to left with MoveToLeft rebuilds the left one
        for word in words_over(3, 6) {
            let mut right = StalacticTableau::empty();
            for &a in word.letters() {
                right = st_insert(&right, a, StInsertMode::MoveToRight).unwrap();
            }
            assert_eq!(right, p_st(&word, Side::Right));

            let mut left = StalacticTableau::empty();
            for &a in word.letters().iter().rev() {
                left = st_insert(&left, a, StInsertMode::MoveToLeft).unwrap();
            }
            assert_eq!(left, p_st(&word, Side::Left));
        }
    }

    #[test]
    fn reading_fixpoint() {
        // every tableau with <= 5 columns and heights <= 3 is recovered from
        // its column reading
        fn heights(k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for rest in heights(k - 1) {
                for h in 1..=3 {
                    let mut v = rest.clone();
                    v.push(h);
                    out.push(v);
                }
            }
            out
        }
        for k in 0..=5usize {
            for hs in heights(k) {
                let cols: Vec<(Letter, usize)> = hs
                    .iter()
                    .enumerate()
                    .map(|(i, &h)| (((i * 2 + 1) as Letter), h))
                    .collect();
                let t = StalacticTableau::new(cols).unwrap();
                let r = st_column_reading(&t);
                assert_eq!(p_st(&r, Side::Left), t);
                assert_eq!(p_st(&r, Side::Right), t);
            }
        }
    }

    #[test]
    fn ps_reading_is_decreasing_runs_and_reinserts() {
        for word in words_over(3, 6) {
            for side in [Side::Left, Side::Right] {
                let q = q_st(&word, side);
                let reading = ps_column_reading(&q);
                // product of strictly decreasing runs, one per column
                let mut idx = 0;
                for col in q.columns() {
                    let run = &reading[idx..idx + col.len()];
                    for p in run.windows(2) {
                        assert!(p[0] > p[1]);
                    }
                    idx += col.len();
                }
                // re-inserting the reading rebuilds the tableau
                match side {
                    Side::Left => {
                        let mut s = PsTableau::empty(PsVariant::Increasing);
                        for &a in &reading {
                            s = ps_insert(&s, a, PsInsertMode::IncreasingRight).unwrap();
                        }
                        assert_eq!(s, q);
                    }
                    Side::Right => {
                        let mut s = PsTableau::empty(PsVariant::Decreasing);
                        for &a in reading.iter().rev() {
                            s = ps_insert(&s, a, PsInsertMode::DecreasingLeft).unwrap();
                        }
                        assert_eq!(s, q);
                    }
                }
            }
        }
    }

    #[test]
    fn tableau_validation() {
        assert!(StalacticTableau::new(vec![(1, 2), (1, 1)]).is_err());
        assert!(StalacticTableau::new(vec![(1, 0)]).is_err());
        assert!(PsTableau::new(PsVariant::Increasing, vec![vec![1], vec![1]]).is_err());
        assert!(PsTableau::new(PsVariant::Increasing, vec![vec![2], vec![1]]).is_err());
        assert!(PsTableau::new(PsVariant::Increasing, vec![vec![2, 1]]).is_err());
        assert!(PsTableau::new(PsVariant::Decreasing, vec![vec![1, 2]]).is_err());
    }
}
