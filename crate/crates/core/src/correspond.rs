//! Meet-monoid P/Q-symbols, twin-pair validation, the forward and inverse
//! Robinson–Schensted-like maps, word extraction from P-symbols, and
//! products of twin pairs.

use std::collections::BTreeSet;

use crate::error::{validation, Error, Result};
use crate::monoid::MonoidId;
use crate::stalactic::{
    p_st, ps_column_reading, q_st, st_column_reading, st_insert, PsTableau, PsVariant, Side,
    StInsertMode, StalacticTableau,
};
use crate::taiga::{
    build_set_tree, p_tg, same_shape_bstm_bts, tg_leaf_insert, tg_root_insert, Bstm, Bts,
    BtsVariant,
};
use crate::words::{Letter, Word};

// ---------------------------------------------------------------------------
// Twin pairs
// ---------------------------------------------------------------------------

/// Checks the twin condition on a pair of stalactic tableaux: equal contents
/// and, for every simple column `c` and any column `d`, the left order
/// `c < d` forces the right order `c < d`.
pub fn twin_st_check(left: &StalacticTableau, right: &StalacticTableau) -> Result<()> {
    if left.content() != right.content() {
        return validation("twin stalactic tableaux must share their content");
    }
    for c in left.simple_letters() {
        let cl = left.rho(c).unwrap();
        let cr = right.rho(c).unwrap();
        for d in left.support() {
            if d == c {
                continue;
            }
            let dl = left.rho(d).unwrap();
            let dr = right.rho(d).unwrap();
            if cl < dl && cr > dr {
                return validation(format!(
                    "simple column {c} precedes {d} on the left but not on the right"
                ));
            }
        }
    }
    Ok(())
}

/// Checks the twin condition on a pair of increasing/decreasing
/// patience-sorting tableaux: columns correspond bijectively with equal
/// label sets, and corresponding simple columns keep their relative order.
pub fn twin_ps_check(left: &PsTableau, right: &PsTableau) -> Result<()> {
    if left.variant() != PsVariant::Increasing || right.variant() != PsVariant::Decreasing {
        return validation("twin recording pair must be (increasing, decreasing)");
    }
    let l_sets: Vec<BTreeSet<usize>> = left
        .columns()
        .iter()
        .map(|c| c.iter().copied().collect())
        .collect();
    let r_sets: Vec<BTreeSet<usize>> = right
        .columns()
        .iter()
        .map(|c| c.iter().copied().collect())
        .collect();
    if l_sets.len() != r_sets.len() {
        return validation("columns do not correspond");
    }
    // label sets are disjoint, so matching on equality gives the bijection
    let mut partner = Vec::with_capacity(l_sets.len());
    for s in &l_sets {
        match r_sets.iter().position(|t| t == s) {
            Some(j) => partner.push(j),
            None => return validation("column contents do not correspond"),
        }
    }
    for (i, s) in l_sets.iter().enumerate() {
        if s.len() != 1 {
            continue;
        }
        for j in i + 1..l_sets.len() {
            if partner[i] > partner[j] {
                return validation("corresponding simple columns must keep their relative order");
            }
        }
    }
    Ok(())
}

/// Checks the twin condition on a pair of trees with multiplicities: equal
/// contents, matching inorder multiplicities, and no simple node with the
/// same child direction present in both trees.
pub fn twin_bstm_check(left: &Bstm, right: &Bstm) -> Result<()> {
    if left.content() != right.content() {
        return validation("twin trees must share their content");
    }
    let ln = left.inorder_nodes();
    let rn = right.inorder_nodes();
    if ln.len() != rn.len() {
        return validation("twin trees must have the same number of nodes");
    }
    for (l, r) in ln.iter().zip(&rn) {
        if l.mult != r.mult {
            return validation("corresponding nodes must share multiplicities");
        }
        if l.mult == 1 {
            if !l.left.is_empty() && !r.left.is_empty() {
                return validation(format!(
                    "simple node {} has a left child in both trees",
                    l.letter
                ));
            }
            if !l.right.is_empty() && !r.right.is_empty() {
                return validation(format!(
                    "simple node {} has a right child in both trees",
                    l.letter
                ));
            }
        }
    }
    Ok(())
}

/// Checks the twin condition on a pair of trees over sets: orientations
/// (increasing, decreasing), equal inorder label sets, and no
/// cardinality-one node with the same child direction in both trees.
pub fn twin_bts_check(left: &Bts, right: &Bts) -> Result<()> {
    left.validate(BtsVariant::Increasing)
        .map_err(|_| Error::Validation("left set tree must be increasing".into()))?;
    right
        .validate(BtsVariant::Decreasing)
        .map_err(|_| Error::Validation("right set tree must be decreasing".into()))?;
    let ln = left.inorder_nodes();
    let rn = right.inorder_nodes();
    if ln.len() != rn.len() {
        return validation("twin set trees must have the same number of nodes");
    }
    for (l, r) in ln.iter().zip(&rn) {
        if l.labels != r.labels {
            return validation("corresponding nodes must share label sets");
        }
        if l.labels.len() == 1 {
            if !l.left.is_empty() && !r.left.is_empty() {
                return validation("singleton node has a left child in both trees");
            }
            if !l.right.is_empty() && !r.right.is_empty() {
                return validation("singleton node has a right child in both trees");
            }
        }
    }
    Ok(())
}

macro_rules! twin_pair {
    ($(#[$doc:meta])* $name:ident, $component:ty, $check:ident) => {
        $(#[$doc])*
        #[derive(Clone, PartialEq, Eq, Debug)]
        pub struct $name {
            left: $component,
            right: $component,
        }

        impl $name {
            pub fn new(left: $component, right: $component) -> Result<Self> {
                $check(&left, &right)?;
                Ok(Self { left, right })
            }

            pub fn left(&self) -> &$component {
                &self.left
            }

            pub fn right(&self) -> &$component {
                &self.right
            }

            pub fn into_parts(self) -> ($component, $component) {
                (self.left, self.right)
            }
        }
    };
}

twin_pair!(
    /// A validated pair of twin stalactic tableaux.
    TwinStPair,
    StalacticTableau,
    twin_st_check
);
twin_pair!(
    /// A validated pair of twin patience-sorting tableaux.
    TwinPsPair,
    PsTableau,
    twin_ps_check
);
twin_pair!(
    /// A validated pair of twin binary search trees with multiplicities.
    TwinBstmPair,
    Bstm,
    twin_bstm_check
);
twin_pair!(
    /// A validated pair of twin binary trees over sets.
    TwinBtsPair,
    Bts,
    twin_bts_check
);

impl TwinStPair {
    pub fn is_empty(&self) -> bool {
        self.left.is_empty()
    }
}

impl TwinBstmPair {
    pub fn is_empty(&self) -> bool {
        self.left.is_empty()
    }
}

// ---------------------------------------------------------------------------
// Meet P- and Q-symbols
// ---------------------------------------------------------------------------

/// The meet-stalactic P-symbol `(left P, right P)` of a word.
pub fn p_meet_st(w: &Word) -> TwinStPair {
    TwinStPair::new(p_st(w, Side::Left), p_st(w, Side::Right))
        .expect("meet P-symbols are twin pairs")
}

/// The meet-stalactic Q-symbol `(left Q, right Q)` of a word.
pub fn q_meet_st(w: &Word) -> TwinPsPair {
    TwinPsPair::new(q_st(w, Side::Left), q_st(w, Side::Right))
        .expect("meet Q-symbols are twin pairs")
}

/// The meet-taiga P-symbol of a word.
pub fn p_meet_tg(w: &Word) -> TwinBstmPair {
    TwinBstmPair::new(p_tg(w, Side::Left), p_tg(w, Side::Right))
        .expect("meet P-symbols are twin pairs")
}

/// The meet-taiga Q-symbol of a word.
pub fn q_meet_tg(w: &Word) -> TwinBtsPair {
    TwinBtsPair::new(
        build_set_tree(w, BtsVariant::Increasing),
        build_set_tree(w, BtsVariant::Decreasing),
    )
    .expect("meet Q-symbols are twin pairs")
}

// ---------------------------------------------------------------------------
// Robinson–Schensted-like correspondences
// ---------------------------------------------------------------------------

/// The insertion half of a correspondence output.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PSymbol {
    Stalactic(StalacticTableau),
    StalacticPair(StalacticTableau, StalacticTableau),
    Taiga(Bstm),
    TaigaPair(Bstm, Bstm),
}

/// The recording half of a correspondence output.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum QSymbol {
    Recording(PsTableau),
    RecordingPair(PsTableau, PsTableau),
    SetTree(Bts),
    SetTreePair(Bts, Bts),
}

/// The `(P, Q)` pair of `w` for one of the six monoids with a
/// correspondence.
pub fn rs_forward(m: MonoidId, w: &Word) -> Result<(PSymbol, QSymbol)> {
    match m {
        MonoidId::LSt => Ok((
            PSymbol::Stalactic(p_st(w, Side::Left)),
            QSymbol::Recording(q_st(w, Side::Left)),
        )),
        MonoidId::RSt => Ok((
            PSymbol::Stalactic(p_st(w, Side::Right)),
            QSymbol::Recording(q_st(w, Side::Right)),
        )),
        MonoidId::MSt => Ok((
            PSymbol::StalacticPair(p_st(w, Side::Left), p_st(w, Side::Right)),
            QSymbol::RecordingPair(q_st(w, Side::Left), q_st(w, Side::Right)),
        )),
        MonoidId::LTg => Ok((
            PSymbol::Taiga(p_tg(w, Side::Left)),
            QSymbol::SetTree(build_set_tree(w, BtsVariant::Increasing)),
        )),
        MonoidId::RTg => Ok((
            PSymbol::Taiga(p_tg(w, Side::Right)),
            QSymbol::SetTree(build_set_tree(w, BtsVariant::Decreasing)),
        )),
        MonoidId::MTg => Ok((
            PSymbol::TaigaPair(p_tg(w, Side::Left), p_tg(w, Side::Right)),
            QSymbol::SetTreePair(
                build_set_tree(w, BtsVariant::Increasing),
                build_set_tree(w, BtsVariant::Decreasing),
            ),
        )),
        _ => Err(Error::Domain(format!("{m} has no P/Q correspondence"))),
    }
}

fn condition<T>(number: &str, what: impl std::fmt::Display) -> Result<T> {
    Err(Error::Validation(format!("condition ({number}): {what}")))
}

fn inverse_stalactic(t: &StalacticTableau, s: &PsTableau, variant: PsVariant) -> Result<Word> {
    let want = match variant {
        PsVariant::Increasing => "increasing",
        PsVariant::Decreasing => "decreasing",
    };
    if s.variant() != variant {
        return condition("ii", format!("recording tableau must be {want}"));
    }
    if !s.is_standard() {
        return condition("ii", "recording labels must be exactly 1..=n");
    }
    if t.heights() != s.heights() {
        return condition("iii", "tableaux must have the same shape");
    }
    let u = st_column_reading(t);
    let sigma = ps_column_reading(s);
    let mut out = vec![0 as Letter; u.len()];
    for (i, &a) in u.letters().iter().enumerate() {
        out[sigma[i] - 1] = a;
    }
    Ok(Word::from_vec_unchecked(out))
}

fn inverse_taiga(t: &Bstm, s: &Bts, variant: BtsVariant) -> Result<Word> {
    let want = match variant {
        BtsVariant::Increasing => "increasing",
        BtsVariant::Decreasing => "decreasing",
    };
    if s.validate(variant).is_err() {
        return condition("ii", format!("set tree must be {want}"));
    }
    let m = t.total_mult();
    let expected: BTreeSet<usize> = (1..=m).collect();
    if s.all_labels() != expected {
        return condition("ii", format!("label sets must partition 1..={m}"));
    }
    if !same_shape_bstm_bts(t, s) {
        return condition("iii", "trees must have the same shape");
    }
    let nodes = t.inorder_nodes();
    let sets = s.inorder_nodes();
    for (n, l) in nodes.iter().zip(&sets) {
        if n.mult != l.labels.len() {
            return condition("iv", "multiplicities must match label-set sizes");
        }
    }
    let mut out = vec![0 as Letter; m];
    for (n, l) in nodes.iter().zip(&sets) {
        for &pos in &l.labels {
            out[pos - 1] = n.letter;
        }
    }
    Ok(Word::from_vec_unchecked(out))
}

/// Reconstructs the unique word with the given `(P, Q)` pair, validating
/// every condition of the relevant correspondence first. Violations are
/// reported by condition number.
pub fn rs_inverse(m: MonoidId, p: &PSymbol, q: &QSymbol) -> Result<Word> {
    match (m, p, q) {
        (MonoidId::LSt, PSymbol::Stalactic(t), QSymbol::Recording(s)) => {
            inverse_stalactic(t, s, PsVariant::Increasing)
        }
        (MonoidId::RSt, PSymbol::Stalactic(t), QSymbol::Recording(s)) => {
            inverse_stalactic(t, s, PsVariant::Decreasing)
        }
        (MonoidId::MSt, PSymbol::StalacticPair(tl, tr), QSymbol::RecordingPair(sl, sr)) => {
            twin_st_check(tl, tr).map_err(|e| Error::Validation(format!("condition (i): {e}")))?;
            twin_ps_check(sl, sr).map_err(|e| Error::Validation(format!("condition (ii): {e}")))?;
            if tl.heights() != sl.heights() || tr.heights() != sr.heights() {
                return condition("iii", "pairs must have the same shape");
            }
            // the i-th left recording column must be the recording column of
            // the same letter on the right
            for (i, col) in sl.columns().iter().enumerate() {
                let letter = tl.top_row()[i];
                let j = tr.rho(letter).unwrap();
                let left_set: BTreeSet<usize> = col.iter().copied().collect();
                let right_set: BTreeSet<usize> = sr.columns()[j - 1].iter().copied().collect();
                if left_set != right_set {
                    return condition("iv", "recording columns do not correspond");
                }
            }
            let w = inverse_stalactic(tl, sl, PsVariant::Increasing)?;
            debug_assert_eq!(&p_st(&w, Side::Right), tr);
            debug_assert_eq!(&q_st(&w, Side::Right), sr);
            Ok(w)
        }
        (MonoidId::LTg, PSymbol::Taiga(t), QSymbol::SetTree(s)) => {
            inverse_taiga(t, s, BtsVariant::Increasing)
        }
        (MonoidId::RTg, PSymbol::Taiga(t), QSymbol::SetTree(s)) => {
            inverse_taiga(t, s, BtsVariant::Decreasing)
        }
        (MonoidId::MTg, PSymbol::TaigaPair(tl, tr), QSymbol::SetTreePair(sl, sr)) => {
            twin_bstm_check(tl, tr)
                .map_err(|e| Error::Validation(format!("condition (i): {e}")))?;
            twin_bts_check(sl, sr)
                .map_err(|e| Error::Validation(format!("condition (ii): {e}")))?;
            let w = inverse_taiga(tl, sl, BtsVariant::Increasing)?;
            let check_right = inverse_taiga(tr, sr, BtsVariant::Decreasing)?;
            if w != check_right {
                return condition("iv", "the two sides reconstruct different words");
            }
            Ok(w)
        }
        (
            MonoidId::LSt
            | MonoidId::RSt
            | MonoidId::MSt
            | MonoidId::LTg
            | MonoidId::RTg
            | MonoidId::MTg,
            _,
            _,
        ) => Err(Error::Domain(format!(
            "symbol kinds do not match monoid {m}"
        ))),
        _ => Err(Error::Domain(format!("{m} has no P/Q correspondence"))),
    }
}

// ---------------------------------------------------------------------------
// Extraction
// ---------------------------------------------------------------------------

/// Extracts a word whose meet-stalactic P-symbol is the given pair: columns
/// of the left tableau are consumed left to right, a non-simple column
/// emitting all but its last cell and a simple column flushing the right
/// tableau up to and including that letter; the surviving right top row is
/// the suffix.
pub fn extract_mst(pair: &TwinStPair) -> Word {
    let mut left: std::collections::VecDeque<_> = pair.left().columns().iter().copied().collect();
    let mut right: std::collections::VecDeque<_> = pair.right().columns().iter().copied().collect();
    let mut out: Vec<Letter> = Vec::new();
    while let Some(col) = left.pop_front() {
        if col.height > 1 {
            out.extend(std::iter::repeat_n(col.letter, col.height - 1));
        } else {
            while right.iter().any(|c| c.letter == col.letter) {
                let b = right.pop_front().expect("letter present");
                out.push(b.letter);
            }
        }
    }
    out.extend(right.iter().map(|c| c.letter));
    Word::from_vec_unchecked(out)
}

/// Forest of trees with multiplicities whose roots are removed in place,
/// promoting children in inorder position.
struct RootForest {
    letters: Vec<Letter>,
    mults: Vec<usize>,
    children: Vec<(Option<usize>, Option<usize>)>,
    roots: Vec<usize>,
    alive: BTreeSet<Letter>,
}

impl RootForest {
    fn from_tree(t: &Bstm) -> Self {
        let mut f = RootForest {
            letters: Vec::new(),
            mults: Vec::new(),
            children: Vec::new(),
            roots: Vec::new(),
            alive: t.support(),
        };
        fn add(f: &mut RootForest, t: &Bstm) -> Option<usize> {
            let n = t.root()?;
            let left = add(f, &n.left);
            let right = add(f, &n.right);
            f.letters.push(n.letter);
            f.mults.push(n.mult);
            f.children.push((left, right));
            Some(f.letters.len() - 1)
        }
        if let Some(r) = add(&mut f, t) {
            f.roots.push(r);
        }
        f
    }

    fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    fn root_letters(&self) -> impl Iterator<Item = (Letter, usize)> + '_ {
        self.roots.iter().map(|&i| (self.letters[i], self.mults[i]))
    }

    fn remove_root(&mut self, a: Letter) {
        let pos = self
            .roots
            .iter()
            .position(|&i| self.letters[i] == a)
            .expect("letter labels a root");
        let idx = self.roots[pos];
        let (l, r) = self.children[idx];
        let mut replacement = Vec::new();
        if let Some(l) = l {
            replacement.push(l);
        }
        if let Some(r) = r {
            replacement.push(r);
        }
        self.roots.splice(pos..=pos, replacement);
        self.alive.remove(&a);
    }
}

/// Tree whose leaves are removed one at a time.
struct LeafTree {
    letters: Vec<Letter>,
    children: Vec<(Option<usize>, Option<usize>)>,
    parent: Vec<Option<usize>>,
    root: Option<usize>,
}

impl LeafTree {
    fn from_tree(t: &Bstm) -> Self {
        let mut lt = LeafTree {
            letters: Vec::new(),
            children: Vec::new(),
            parent: Vec::new(),
            root: None,
        };
        fn add(lt: &mut LeafTree, t: &Bstm, parent: Option<usize>) -> Option<usize> {
            let n = t.root()?;
            let idx = lt.letters.len();
            lt.letters.push(n.letter);
            lt.children.push((None, None));
            lt.parent.push(parent);
            let l = add(lt, &n.left, Some(idx));
            let r = add(lt, &n.right, Some(idx));
            lt.children[idx] = (l, r);
            Some(idx)
        }
        lt.root = add(&mut lt, t, None);
        lt
    }

    fn is_empty(&self) -> bool {
        self.root.is_none()
    }

    fn leaf_letters(&self) -> BTreeSet<Letter> {
        let mut out = BTreeSet::new();
        let mut stack: Vec<usize> = self.root.into_iter().collect();
        while let Some(i) = stack.pop() {
            let (l, r) = self.children[i];
            if l.is_none() && r.is_none() {
                out.insert(self.letters[i]);
            }
            stack.extend(l);
            stack.extend(r);
        }
        out
    }

    fn remove_leaf(&mut self, a: Letter) {
        let mut stack: Vec<usize> = self.root.into_iter().collect();
        while let Some(i) = stack.pop() {
            let (l, r) = self.children[i];
            if self.letters[i] == a {
                debug_assert!(l.is_none() && r.is_none(), "only leaves are removed");
                match self.parent[i] {
                    None => self.root = None,
                    Some(p) => {
                        let (pl, pr) = self.children[p];
                        self.children[p] = (pl.filter(|&c| c != i), pr.filter(|&c| c != i));
                    }
                }
                return;
            }
            stack.extend(l);
            stack.extend(r);
        }
        panic!("letter {a} not found in tree");
    }
}

/// Extracts a word whose meet-taiga P-symbol is the given pair. The
/// algorithm repeatedly consumes roots of the left forest and leaves of the
/// right tree; whenever several letters are eligible the smallest is taken,
/// which makes the output deterministic.
pub fn extract_mtg(pair: &TwinBstmPair) -> Word {
    let mut left = RootForest::from_tree(pair.left());
    let mut right = LeafTree::from_tree(pair.right());
    let mut out: Vec<Letter> = Vec::new();
    let budget = 2 * pair.left().node_count() + pair.left().total_mult() + 1;
    for _ in 0..=budget {
        if left.is_empty() && right.is_empty() {
            return Word::from_vec_unchecked(out);
        }
        let leaves = right.leaf_letters();
        if leaves.iter().all(|a| left.alive.contains(a)) {
            let (a, mult) = left
                .root_letters()
                .filter(|&(letter, mult)| mult > 1 || leaves.contains(&letter))
                .min()
                .expect("twin pair admits an eligible root");
            if mult > 1 {
                out.extend(std::iter::repeat_n(a, mult - 1));
            } else {
                out.push(a);
                right.remove_leaf(a);
            }
            left.remove_root(a);
        } else {
            let a = *leaves
                .iter()
                .find(|a| !left.alive.contains(a))
                .expect("some leaf letter is no longer on the left");
            out.push(a);
            right.remove_leaf(a);
        }
    }
    unreachable!("extraction exceeded its step budget on a validated pair");
}

// ---------------------------------------------------------------------------
// Products
// ---------------------------------------------------------------------------

/// P-symbol of `u · v` where `u`, `v` are any representatives of the two
/// pairs: the second pair is extracted and its letters inserted left to
/// right into the first.
pub fn twin_product_st(a: &TwinStPair, b: &TwinStPair) -> TwinStPair {
    let v = extract_mst(b);
    let mut left = a.left().clone();
    let mut right = a.right().clone();
    for &x in v.letters() {
        left = st_insert(&left, x, StInsertMode::NewAtRight).expect("valid letter");
        right = st_insert(&right, x, StInsertMode::MoveToRight).expect("valid letter");
    }
    TwinStPair::new(left, right).expect("products of twin pairs are twin pairs")
}

/// Taiga analogue of [`twin_product_st`]: leaf insertion grows the left
/// tree, root insertion the right one.
pub fn twin_product_tg(a: &TwinBstmPair, b: &TwinBstmPair) -> TwinBstmPair {
    let v = extract_mtg(b);
    let mut left = a.left().clone();
    let mut right = a.right().clone();
    for &x in v.letters() {
        left = tg_leaf_insert(&left, x).expect("valid letter");
        right = tg_root_insert(&right, x).expect("valid letter");
    }
    TwinBstmPair::new(left, right).expect("products of twin pairs are twin pairs")
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
    fn p_meet_examples() {
        let pair = p_meet_st(&w("212511354"));
        assert_eq!(pair.left(), &st(&[(2, 2), (1, 3), (5, 2), (3, 1), (4, 1)]));
        assert_eq!(pair.right(), &st(&[(2, 2), (1, 3), (3, 1), (5, 2), (4, 1)]));

        let pair = p_meet_tg(&w("451423412"));
        assert_eq!(
            pair.left(),
            &Bstm::node(
                4,
                3,
                Bstm::node(
                    1,
                    2,
                    Bstm::empty(),
                    Bstm::node(2, 2, Bstm::empty(), Bstm::leaf(3, 1))
                ),
                Bstm::leaf(5, 1)
            )
        );
        assert_eq!(
            pair.right(),
            &Bstm::node(
                2,
                2,
                Bstm::leaf(1, 2),
                Bstm::node(4, 3, Bstm::leaf(3, 1), Bstm::leaf(5, 1))
            )
        );

        assert!(p_meet_st(&Word::empty()).is_empty());
    }

    #[test]
    fn q_meet_examples() {
        let pair = q_meet_st(&w("212511354"));
        assert_eq!(
            pair.left(),
            &PsTableau::new(
                PsVariant::Increasing,
                vec![vec![1, 3], vec![2, 5, 6], vec![4, 8], vec![7], vec![9]]
            )
            .unwrap()
        );
        assert_eq!(
            pair.right(),
            &PsTableau::new(
                PsVariant::Decreasing,
                vec![vec![3, 1], vec![6, 5, 2], vec![7], vec![8, 4], vec![9]]
            )
            .unwrap()
        );

        let pair = q_meet_st(&w("1"));
        assert_eq!(pair.left().columns(), &[vec![1]]);
        assert_eq!(pair.right().columns(), &[vec![1]]);
    }

    #[test]
    fn twin_validation_examples() {
        assert!(twin_st_check(
            &st(&[(2, 2), (1, 3), (5, 2), (3, 1), (4, 1)]),
            &st(&[(2, 2), (1, 3), (3, 1), (5, 2), (4, 1)])
        )
        .is_ok());
        // simple columns must keep their order
        assert!(twin_st_check(&st(&[(1, 1), (2, 1)]), &st(&[(2, 1), (1, 1)])).is_err());
        // no simple columns: condition vacuous, and 1221 realises the pair
        assert!(twin_st_check(&st(&[(1, 2), (2, 2)]), &st(&[(2, 2), (1, 2)])).is_ok());
        let pair = p_meet_st(&w("1221"));
        assert_eq!(pair.left(), &st(&[(1, 2), (2, 2)]));
        assert_eq!(pair.right(), &st(&[(2, 2), (1, 2)]));
    }

    #[test]
    fn rs_roundtrip_small() {
        for word in words_over(3, 4) {
            for m in [
                MonoidId::LSt,
                MonoidId::RSt,
                MonoidId::MSt,
                MonoidId::LTg,
                MonoidId::RTg,
                MonoidId::MTg,
            ] {
                let (p, q) = rs_forward(m, &word).unwrap();
                assert_eq!(rs_inverse(m, &p, &q).unwrap(), word, "monoid {m}");
            }
        }
    }

    #[test]
    fn rs_inverse_examples() {
        let (p, q) = rs_forward(MonoidId::RSt, &w("212511354")).unwrap();
        assert_eq!(rs_inverse(MonoidId::RSt, &p, &q).unwrap(), w("212511354"));

        let (p, q) = rs_forward(MonoidId::MTg, &w("451423412")).unwrap();
        assert_eq!(rs_inverse(MonoidId::MTg, &p, &q).unwrap(), w("451423412"));

        let p = PSymbol::Stalactic(st(&[(7, 1)]));
        let q = QSymbol::Recording(PsTableau::new(PsVariant::Increasing, vec![vec![1]]).unwrap());
        assert_eq!(rs_inverse(MonoidId::LSt, &p, &q).unwrap(), w("7"));

        let (p, q) = rs_forward(MonoidId::MSt, &Word::empty()).unwrap();
        assert_eq!(rs_inverse(MonoidId::MSt, &p, &q).unwrap(), Word::empty());
    }

    #[test]
    fn rs_inverse_reports_failed_conditions() {
        // shape mismatch
        let p = PSymbol::Stalactic(st(&[(7, 2)]));
        let q = QSymbol::Recording(
            PsTableau::new(PsVariant::Increasing, vec![vec![1], vec![2]]).unwrap(),
        );
        let err = rs_inverse(MonoidId::LSt, &p, &q).unwrap_err();
        assert!(err.to_string().contains("(iii)"));

        // wrong recording variant
        let p = PSymbol::Stalactic(st(&[(7, 1)]));
        let q = QSymbol::Recording(PsTableau::new(PsVariant::Decreasing, vec![vec![1]]).unwrap());
        let err = rs_inverse(MonoidId::LSt, &p, &q).unwrap_err();
        assert!(err.to_string().contains("(ii)"));

        // non-twin P-pair
        let p = PSymbol::StalacticPair(st(&[(1, 1), (2, 1)]), st(&[(2, 1), (1, 1)]));
        let q1 = q_st(&w("12"), Side::Left);
        let q2 = q_st(&w("12"), Side::Right);
        let err = rs_inverse(MonoidId::MSt, &p, &QSymbol::RecordingPair(q1, q2)).unwrap_err();
        assert!(err.to_string().contains("(i)"));

        // label sets must partition 1..=m
        let p = PSymbol::Taiga(Bstm::leaf(3, 2));
        let q = QSymbol::SetTree(Bts::node(vec![1, 3], Bts::empty(), Bts::empty()));
        let err = rs_inverse(MonoidId::LTg, &p, &q).unwrap_err();
        assert!(err.to_string().contains("(ii)"));
    }

    #[test]
    fn extract_mst_examples() {
        let pair = p_meet_st(&w("212511354"));
        let extracted = extract_mst(&pair);
        assert_eq!(extracted, w("211521354"));
        assert_eq!(p_meet_st(&extracted), pair);

        assert_eq!(extract_mst(&p_meet_st(&Word::empty())), Word::empty());
        assert_eq!(extract_mst(&p_meet_st(&w("11"))), w("11"));
    }

    #[test]
    fn extract_mtg_examples() {
        let pair = p_meet_tg(&w("451423412"));
        let extracted = extract_mtg(&pair);
        // deterministic smallest-letter tie-break
        assert_eq!(extracted, w("441123542"));
        assert_eq!(p_meet_tg(&extracted), pair);

        assert_eq!(extract_mtg(&p_meet_tg(&Word::empty())), Word::empty());
        assert_eq!(extract_mtg(&p_meet_tg(&w("33"))), w("33"));
    }

    #[test]
    fn extraction_soundness_small() {
        for word in words_over(3, 5) {
            let st_pair = p_meet_st(&word);
            assert_eq!(p_meet_st(&extract_mst(&st_pair)), st_pair);
            let tg_pair = p_meet_tg(&word);
            assert_eq!(p_meet_tg(&extract_mtg(&tg_pair)), tg_pair);
        }
    }

    #[test]
    fn product_examples() {
        let a = p_meet_st(&w("12"));
        let b = p_meet_st(&w("21"));
        assert_eq!(twin_product_st(&a, &b), p_meet_st(&w("1221")));

        let e = p_meet_st(&Word::empty());
        assert_eq!(twin_product_st(&e, &b), b);
        assert_eq!(twin_product_st(&b, &e), b);

        let a = p_meet_tg(&w("12"));
        let b = p_meet_tg(&w("21"));
        assert_eq!(twin_product_tg(&a, &b), p_meet_tg(&w("1221")));
        let e = p_meet_tg(&Word::empty());
        assert_eq!(twin_product_tg(&e, &b), b);
        assert_eq!(twin_product_tg(&b, &e), b);
    }

    #[test]
    fn meet_symbols_pass_twin_validation() {
        for word in words_over(3, 5) {
            let p = p_meet_st(&word);
            assert!(twin_st_check(p.left(), p.right()).is_ok());
            let q = q_meet_st(&word);
            assert!(twin_ps_check(q.left(), q.right()).is_ok());
            let p = p_meet_tg(&word);
            assert!(twin_bstm_check(p.left(), p.right()).is_ok());
            let q = q_meet_tg(&word);
            assert!(twin_bts_check(q.left(), q.right()).is_ok());
        }
    }
}
