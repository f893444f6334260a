//! Binary search trees with multiplicities, binary trees over position sets,
//! and their leaf/root insertion and reading algorithms.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{domain, precondition, validation, Result};
use crate::stalactic::Side;
use crate::words::{content, Content, Letter, Word};

/// A binary search tree whose nodes carry a letter and a multiplicity.
/// Left-subtree letters are strictly smaller and right-subtree letters
/// strictly larger than the node letter, so letters never repeat.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bstm {
    root: Option<Box<BstmNode>>,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BstmNode {
    pub letter: Letter,
    pub mult: usize,
    pub left: Bstm,
    pub right: Bstm,
}

impl Bstm {
    pub fn empty() -> Self {
        Bstm { root: None }
    }

    pub fn leaf(letter: Letter, mult: usize) -> Self {
        Bstm::node(letter, mult, Bstm::empty(), Bstm::empty())
    }

    /// Assembles a tree without checking the search property; use
    /// [`Bstm::validate`] on untrusted input.
    pub fn node(letter: Letter, mult: usize, left: Bstm, right: Bstm) -> Self {
        Bstm {
            root: Some(Box::new(BstmNode {
                letter,
                mult,
                left,
                right,
            })),
        }
    }

    pub fn root(&self) -> Option<&BstmNode> {
        self.root.as_deref()
    }

    pub fn is_empty(&self) -> bool {
        self.root.is_none()
    }

    pub fn validate(&self) -> Result<()> {
        fn check(t: &Bstm, lo: Option<Letter>, hi: Option<Letter>) -> Result<()> {
            let Some(n) = t.root() else { return Ok(()) };
            if n.letter == 0 {
                return validation("letters must be positive");
            }
            if n.mult == 0 {
                return validation("multiplicities must be positive");
            }
            if lo.is_some_and(|b| n.letter <= b) || hi.is_some_and(|b| n.letter >= b) {
                return validation("search property violated");
            }
            check(&n.left, lo, Some(n.letter))?;
            check(&n.right, Some(n.letter), hi)
        }
        check(self, None, None)
    }

    pub fn node_count(&self) -> usize {
        self.inorder_nodes().len()
    }

    /// Total of all multiplicities.
    pub fn total_mult(&self) -> usize {
        self.inorder_nodes().iter().map(|n| n.mult).sum()
    }

    pub fn inorder_nodes(&self) -> Vec<&BstmNode> {
        fn walk<'a>(t: &'a Bstm, out: &mut Vec<&'a BstmNode>) {
            if let Some(n) = t.root() {
                walk(&n.left, out);
                out.push(n);
                walk(&n.right, out);
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    pub fn mult_of(&self, a: Letter) -> usize {
        let mut cur = self;
        while let Some(n) = cur.root() {
            if a == n.letter {
                return n.mult;
            }
            cur = if a < n.letter { &n.left } else { &n.right };
        }
        0
    }

    pub fn support(&self) -> BTreeSet<Letter> {
        self.inorder_nodes().iter().map(|n| n.letter).collect()
    }

    pub fn content(&self) -> Content {
        content(&inorder_reading(self))
    }

    /// The underlying multiplicity-labelled shape.
    pub fn shape(&self) -> BinaryShapeM {
        fn walk(t: &Bstm) -> BinaryShapeM {
            match t.root() {
                None => BinaryShapeM::empty(),
                Some(n) => BinaryShapeM::node(n.mult, walk(&n.left), walk(&n.right)),
            }
        }
        walk(self)
    }
}

impl fmt::Debug for Bstm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.root() {
            None => write!(f, "-"),
            Some(n) => {
                write!(f, "{}^{}", n.letter, n.mult)?;
                if !n.left.is_empty() || !n.right.is_empty() {
                    write!(f, "({:?},{:?})", n.left, n.right)?;
                }
                Ok(())
            }
        }
    }
}

/// Inserts a letter by binary-search descent: a missing letter becomes a new
/// leaf of multiplicity 1, a present one has its multiplicity incremented.
pub fn tg_leaf_insert(t: &Bstm, a: Letter) -> Result<Bstm> {
    if a == 0 {
        return domain("letter must be positive");
    }
    fn go(t: &Bstm, a: Letter) -> Bstm {
        match t.root() {
            None => Bstm::leaf(a, 1),
            Some(n) => {
                if a == n.letter {
                    Bstm::node(n.letter, n.mult + 1, n.left.clone(), n.right.clone())
                } else if a < n.letter {
                    Bstm::node(n.letter, n.mult, go(&n.left, a), n.right.clone())
                } else {
                    Bstm::node(n.letter, n.mult, n.left.clone(), go(&n.right, a))
                }
            }
        }
    }
    Ok(go(t, a))
}

/// Rebuilds the tree with `a` at the root. The new root carries multiplicity
/// `|T|_a + 1`; the rest of the tree is split into the nodes below `a` and
/// above `a`, preserving descendant relations.
pub fn tg_root_insert(t: &Bstm, a: Letter) -> Result<Bstm> {
    if a == 0 {
        return domain("letter must be positive");
    }
    fn split(t: &Bstm, a: Letter) -> (Bstm, Bstm) {
        match t.root() {
            None => (Bstm::empty(), Bstm::empty()),
            Some(n) => {
                if n.letter == a {
                    (n.left.clone(), n.right.clone())
                } else if n.letter < a {
                    let (lt, gt) = split(&n.right, a);
                    (Bstm::node(n.letter, n.mult, n.left.clone(), lt), gt)
                } else {
                    let (lt, gt) = split(&n.left, a);
                    (lt, Bstm::node(n.letter, n.mult, gt, n.right.clone()))
                }
            }
        }
    }
    let mult = t.mult_of(a) + 1;
    let (lt, gt) = split(t, a);
    Ok(Bstm::node(a, mult, lt, gt))
}

/// The taiga P-symbol of `w`: leaf insertion reading right to left
/// (`Side::Right`) or left to right (`Side::Left`).
pub fn p_tg(w: &Word, side: Side) -> Bstm {
    let mut t = Bstm::empty();
    match side {
        Side::Right => {
            for &a in w.letters().iter().rev() {
                t = tg_leaf_insert(&t, a).expect("valid letter");
            }
        }
        Side::Left => {
            for &a in w.letters() {
                t = tg_leaf_insert(&t, a).expect("valid letter");
            }
        }
    }
    t
}

/// Weakly increasing word reading each letter `mult` times in inorder.
pub fn inorder_reading(t: &Bstm) -> Word {
    let mut v = Vec::new();
    for n in t.inorder_nodes() {
        v.extend(std::iter::repeat_n(n.letter, n.mult));
    }
    Word::from_vec_unchecked(v)
}

/// A binary tree whose nodes are labelled by pairwise disjoint sets of
/// positions. Replacing each set by its minimum (resp. maximum) must yield
/// an increasing (resp. decreasing) binary tree for the tree to be a valid
/// increasing (resp. decreasing) tree over sets; the orientation is
/// recoverable from the labels and is not stored.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bts {
    root: Option<Box<BtsNode>>,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BtsNode {
    /// Sorted, non-empty.
    pub labels: Vec<usize>,
    pub left: Bts,
    pub right: Bts,
}

/// Orientation of a tree over sets.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BtsVariant {
    Increasing,
    Decreasing,
}

impl Bts {
    pub fn empty() -> Self {
        Bts { root: None }
    }

    pub fn node(labels: Vec<usize>, left: Bts, right: Bts) -> Self {
        Bts {
            root: Some(Box::new(BtsNode {
                labels,
                left,
                right,
            })),
        }
    }

    pub fn root(&self) -> Option<&BtsNode> {
        self.root.as_deref()
    }

    pub fn is_empty(&self) -> bool {
        self.root.is_none()
    }

    pub fn inorder_nodes(&self) -> Vec<&BtsNode> {
        fn walk<'a>(t: &'a Bts, out: &mut Vec<&'a BtsNode>) {
            if let Some(n) = t.root() {
                walk(&n.left, out);
                out.push(n);
                walk(&n.right, out);
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    pub fn node_count(&self) -> usize {
        self.inorder_nodes().len()
    }

    /// Union of all label sets.
    pub fn all_labels(&self) -> BTreeSet<usize> {
        self.inorder_nodes()
            .iter()
            .flat_map(|n| n.labels.iter().copied())
            .collect()
    }

    /// Checks disjoint, sorted, non-empty label sets and the heap-like order
    /// on set representatives for the given orientation.
    pub fn validate(&self, variant: BtsVariant) -> Result<()> {
        let nodes = self.inorder_nodes();
        let mut seen = BTreeSet::new();
        for n in &nodes {
            if n.labels.is_empty() {
                return validation("empty label set");
            }
            if n.labels.windows(2).any(|p| p[0] >= p[1]) {
                return validation("label sets must be sorted strictly");
            }
            for &x in &n.labels {
                if x == 0 || !seen.insert(x) {
                    return validation("label sets must be disjoint positive integers");
                }
            }
        }
        fn rep(n: &BtsNode, variant: BtsVariant) -> usize {
            match variant {
                BtsVariant::Increasing => *n.labels.first().unwrap(),
                BtsVariant::Decreasing => *n.labels.last().unwrap(),
            }
        }
        fn check(t: &Bts, variant: BtsVariant) -> Result<()> {
            let Some(n) = t.root() else { return Ok(()) };
            for child in [&n.left, &n.right] {
                if let Some(c) = child.root() {
                    let ok = match variant {
                        BtsVariant::Increasing => rep(n, variant) < rep(c, variant),
                        BtsVariant::Decreasing => rep(n, variant) > rep(c, variant),
                    };
                    if !ok {
                        return validation("representatives must be heap-ordered");
                    }
                }
            }
            check(&n.left, variant)?;
            check(&n.right, variant)
        }
        check(self, variant)
    }
}

impl fmt::Debug for Bts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.root() {
            None => write!(f, "-"),
            Some(n) => {
                let xs: Vec<String> = n.labels.iter().map(|x| x.to_string()).collect();
                write!(f, "{{{}}}", xs.join(","))?;
                if !n.left.is_empty() || !n.right.is_empty() {
                    write!(f, "({:?},{:?})", n.left, n.right)?;
                }
                Ok(())
            }
        }
    }
}

/// Recursive increasing/decreasing binary tree construction for duplicate-free
/// key sequences: the least (resp. greatest) key becomes the root and the
/// prefix/suffix recurse into the subtrees. Payloads travel with their keys.
fn recursive_binary_tree(items: &[(usize, Vec<usize>)], variant: BtsVariant) -> Bts {
    if items.is_empty() {
        return Bts::empty();
    }
    let pivot = match variant {
        BtsVariant::Increasing => {
            items
                .iter()
                .enumerate()
                .min_by_key(|(_, (k, _))| *k)
                .unwrap()
                .0
        }
        BtsVariant::Decreasing => {
            items
                .iter()
                .enumerate()
                .max_by_key(|(_, (k, _))| *k)
                .unwrap()
                .0
        }
    };
    Bts::node(
        items[pivot].1.clone(),
        recursive_binary_tree(&items[..pivot], variant),
        recursive_binary_tree(&items[pivot + 1..], variant),
    )
}

/// The taiga Q-symbol of `w`: the `i`-th smallest support letter contributes
/// the set of its positions, keyed by the first (increasing) or last
/// (decreasing) of those positions, and the keys are shaped by the recursive
/// binary-tree construction.
pub fn build_set_tree(w: &Word, variant: BtsVariant) -> Bts {
    let supp: Vec<Letter> = w.support().into_iter().collect();
    let mut sets: Vec<Vec<usize>> = vec![Vec::new(); supp.len()];
    for (pos, &a) in w.letters().iter().enumerate() {
        let i = supp.binary_search(&a).unwrap();
        sets[i].push(pos + 1);
    }
    let items: Vec<(usize, Vec<usize>)> = sets
        .into_iter()
        .map(|s| {
            let key = match variant {
                BtsVariant::Increasing => *s.first().unwrap(),
                BtsVariant::Decreasing => *s.last().unwrap(),
            };
            (key, s)
        })
        .collect();
    recursive_binary_tree(&items, variant)
}

/// Increasing/decreasing binary tree of a duplicate-free key sequence,
/// exposed for callers that already hold the keys. Nodes are labelled by
/// singleton sets.
pub fn recursive_tree_shape(keys: &[usize], variant: BtsVariant) -> Result<Bts> {
    let distinct: BTreeSet<usize> = keys.iter().copied().collect();
    if distinct.len() != keys.len() {
        return precondition("keys must be duplicate-free");
    }
    let items: Vec<(usize, Vec<usize>)> = keys.iter().map(|&k| (k, vec![k])).collect();
    Ok(recursive_binary_tree(&items, variant))
}

/// A binary tree labelled only by multiplicities: the shape of a tree with
/// multiplicities once letters are erased.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryShapeM {
    root: Option<Box<ShapeNode>>,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShapeNode {
    pub mult: usize,
    pub left: BinaryShapeM,
    pub right: BinaryShapeM,
}

impl BinaryShapeM {
    pub fn empty() -> Self {
        BinaryShapeM { root: None }
    }

    pub fn node(mult: usize, left: BinaryShapeM, right: BinaryShapeM) -> Self {
        BinaryShapeM {
            root: Some(Box::new(ShapeNode { mult, left, right })),
        }
    }

    pub fn root(&self) -> Option<&ShapeNode> {
        self.root.as_deref()
    }

    pub fn is_empty(&self) -> bool {
        self.root.is_none()
    }

    pub fn inorder_nodes(&self) -> Vec<&ShapeNode> {
        fn walk<'a>(t: &'a BinaryShapeM, out: &mut Vec<&'a ShapeNode>) {
            if let Some(n) = t.root() {
                walk(&n.left, out);
                out.push(n);
                walk(&n.right, out);
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    pub fn node_count(&self) -> usize {
        self.inorder_nodes().len()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.inorder_nodes().iter().map(|n| n.mult).collect()
    }

    pub fn validate(&self) -> Result<()> {
        if self.inorder_nodes().iter().any(|n| n.mult == 0) {
            return validation("multiplicities must be positive");
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryShapeM {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.root() {
            None => write!(f, "-"),
            Some(n) => {
                write!(f, "{}", n.mult)?;
                if !n.left.is_empty() || !n.right.is_empty() {
                    write!(f, "({:?},{:?})", n.left, n.right)?;
                }
                Ok(())
            }
        }
    }
}

/// True when the trees have the same unlabelled binary shape.
pub fn same_shape_bstm_bts(t: &Bstm, s: &Bts) -> bool {
    match (t.root(), s.root()) {
        (None, None) => true,
        (Some(a), Some(b)) => {
            same_shape_bstm_bts(&a.left, &b.left) && same_shape_bstm_bts(&a.right, &b.right)
        }
        _ => false,
    }
}

/// Rebuilds the unique tree with the given multiplicity-labelled shape whose
/// letters are the given support, assigned in inorder.
pub fn bstm_from_shape(shape: &BinaryShapeM, support: &[Letter]) -> Result<Bstm> {
    if shape.node_count() != support.len() {
        return domain("support size must match node count");
    }
    fn build(shape: &BinaryShapeM, letters: &[Letter]) -> Bstm {
        match shape.root() {
            None => Bstm::empty(),
            Some(n) => {
                let lc = n.left.node_count();
                build_node(n, letters, lc)
            }
        }
    }
    fn build_node(n: &ShapeNode, letters: &[Letter], lc: usize) -> Bstm {
        Bstm::node(
            letters[lc],
            n.mult,
            build(&n.left, &letters[..lc]),
            build(&n.right, &letters[lc + 1..]),
        )
    }
    let t = build(shape, support);
    t.validate()?;
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::words_over;

    fn w(s: &str) -> Word {
        Word::from_digits(s).unwrap()
    }

    fn leaf(a: Letter, m: usize) -> Bstm {
        Bstm::leaf(a, m)
    }

    fn example_tree() -> Bstm {
        // 2^2 with subtrees 1^2 and 4^3(3^1, 5^1)
        Bstm::node(2, 2, leaf(1, 2), Bstm::node(4, 3, leaf(3, 1), leaf(5, 1)))
    }

    #[test]
    fn leaf_insert_examples() {
        let t = Bstm::node(
            2,
            1,
            leaf(1, 1),
            Bstm::node(4, 1, leaf(3, 1), Bstm::empty()),
        );
        let t2 = tg_leaf_insert(&t, 2).unwrap();
        assert_eq!(
            t2,
            Bstm::node(
                2,
                2,
                leaf(1, 1),
                Bstm::node(4, 1, leaf(3, 1), Bstm::empty())
            )
        );

        let t = Bstm::node(
            2,
            2,
            leaf(1, 2),
            Bstm::node(4, 2, leaf(3, 1), Bstm::empty()),
        );
        let t2 = tg_leaf_insert(&t, 5).unwrap();
        assert_eq!(
            t2,
            Bstm::node(2, 2, leaf(1, 2), Bstm::node(4, 2, leaf(3, 1), leaf(5, 1)))
        );

        assert_eq!(tg_leaf_insert(&Bstm::empty(), 7).unwrap(), leaf(7, 1));
    }

    #[test]
    fn root_insert_examples() {
        let t = Bstm::node(2, 1, leaf(1, 1), Bstm::empty());
        assert_eq!(
            tg_root_insert(&t, 3).unwrap(),
            Bstm::node(3, 1, t.clone(), Bstm::empty())
        );
        assert_eq!(tg_root_insert(&Bstm::empty(), 9).unwrap(), leaf(9, 1));

        let mut t = Bstm::empty();
        for &a in w("451423412").letters() {
            t = tg_root_insert(&t, a).unwrap();
        }
        assert_eq!(t, example_tree());
    }

    #[test]
    fn p_tg_examples() {
        assert_eq!(p_tg(&w("451423412"), Side::Right), example_tree());
        let left = Bstm::node(
            4,
            3,
            Bstm::node(
                1,
                2,
                Bstm::empty(),
                Bstm::node(2, 2, Bstm::empty(), leaf(3, 1)),
            ),
            leaf(5, 1),
        );
        assert_eq!(p_tg(&w("451423412"), Side::Left), left);
        assert!(p_tg(&Word::empty(), Side::Left).is_empty());
    }

    #[test]
    fn inorder_reading_examples() {
        assert_eq!(inorder_reading(&example_tree()), w("112234445"));
        assert_eq!(inorder_reading(&Bstm::empty()), Word::empty());
        assert_eq!(inorder_reading(&leaf(7, 3)), w("777"));
    }

    fn bts(labels: &[usize], l: Bts, r: Bts) -> Bts {
        Bts::node(labels.to_vec(), l, r)
    }

    fn bts_leaf(labels: &[usize]) -> Bts {
        bts(labels, Bts::empty(), Bts::empty())
    }

    #[test]
    fn build_set_tree_examples() {
        let dec = bts(
            &[5, 9],
            bts_leaf(&[3, 8]),
            bts(&[1, 4, 7], bts_leaf(&[6]), bts_leaf(&[2])),
        );
        assert_eq!(build_set_tree(&w("451423412"), BtsVariant::Decreasing), dec);

        let inc = bts(
            &[1, 4, 7],
            bts(
                &[3, 8],
                Bts::empty(),
                bts(&[5, 9], Bts::empty(), bts_leaf(&[6])),
            ),
            bts_leaf(&[2]),
        );
        assert_eq!(build_set_tree(&w("451423412"), BtsVariant::Increasing), inc);

        assert_eq!(
            build_set_tree(&w("1"), BtsVariant::Increasing),
            bts_leaf(&[1])
        );
        dec.validate(BtsVariant::Decreasing).unwrap();
        inc.validate(BtsVariant::Increasing).unwrap();
    }

    #[test]
    fn shape_agreement_small() {
        for word in words_over(4, 5) {
            for (side, variant) in [
                (Side::Left, BtsVariant::Increasing),
                (Side::Right, BtsVariant::Decreasing),
            ] {
                let p = p_tg(&word, side);
                let q = build_set_tree(&word, variant);
                assert!(same_shape_bstm_bts(&p, &q));
                let supp: Vec<Letter> = word.support().into_iter().collect();
                let pn = p.inorder_nodes();
                let qn = q.inorder_nodes();
                assert_eq!(pn.len(), qn.len());
                for i in 0..pn.len() {
                    assert_eq!(pn[i].letter, supp[i]);
                    assert_eq!(pn[i].mult, qn[i].labels.len());
                    let positions: Vec<usize> = word
                        .letters()
                        .iter()
                        .enumerate()
                        .filter(|(_, &a)| a == supp[i])
                        .map(|(j, _)| j + 1)
                        .collect();
                    assert_eq!(qn[i].labels, positions);
                }
            }
        }
    }

    #[test]
    fn root_insertion_matches_leaf_insertion() {
        for word in words_over(3, 6) {
            let mut fwd = Bstm::empty();
            for &a in word.letters() {
                fwd = tg_root_insert(&fwd, a).unwrap();
            }
            assert_eq!(fwd, p_tg(&word, Side::Right));

            let mut bwd = Bstm::empty();
            for &a in word.letters().iter().rev() {
                bwd = tg_root_insert(&bwd, a).unwrap();
            }
            assert_eq!(bwd, p_tg(&word, Side::Left));
        }
    }

    #[test]
    fn inorder_reading_is_sorted_rearrangement() {
        for word in words_over(4, 6) {
            for side in [Side::Left, Side::Right] {
                let r = inorder_reading(&p_tg(&word, side));
                let mut sorted = word.letters().to_vec();
                sorted.sort_unstable();
                assert_eq!(r.letters(), &sorted[..]);
            }
        }
    }

    #[test]
    fn shape_and_support_determine_the_tree() {
        // over all shapes of words over [4] of length <= 5, only the inorder
        // letter assignment satisfies the search property
        fn permutations(v: &[Letter]) -> Vec<Vec<Letter>> {
            if v.is_empty() {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for i in 0..v.len() {
                let mut rest = v.to_vec();
                let x = rest.remove(i);
                for mut p in permutations(&rest) {
                    p.insert(0, x);
                    out.push(p);
                }
            }
            out
        }
        fn assign(shape: &BinaryShapeM, letters: &[Letter]) -> (Bstm, usize) {
            fn build(shape: &BinaryShapeM, letters: &[Letter], next: &mut usize) -> Bstm {
                match shape.root() {
                    None => Bstm::empty(),
                    Some(n) => {
                        let left = build(&n.left, letters, next);
                        let letter = letters[*next];
                        *next += 1;
                        let right = build(&n.right, letters, next);
                        Bstm::node(letter, n.mult, left, right)
                    }
                }
            }
            let mut next = 0;
            let t = build(shape, letters, &mut next);
            (t, next)
        }
        let mut seen = BTreeSet::new();
        for word in words_over(4, 5) {
            let t = p_tg(&word, Side::Left);
            let shape = t.shape();
            let supp: Vec<Letter> = t.support().into_iter().collect();
            if !seen.insert((shape.clone(), supp.clone())) {
                continue;
            }
            let mut valid = 0;
            for perm in permutations(&supp) {
                // assign the permuted letters along the inorder traversal
                let (candidate, used) = assign(&shape, &perm);
                assert_eq!(used, supp.len());
                if candidate.validate().is_ok() {
                    valid += 1;
                    assert_eq!(candidate, t);
                }
            }
            assert_eq!(valid, 1);
        }
    }

    #[test]
    fn bstm_from_shape_roundtrip() {
        for word in words_over(3, 5) {
            let t = p_tg(&word, Side::Right);
            let supp: Vec<Letter> = t.support().into_iter().collect();
            assert_eq!(bstm_from_shape(&t.shape(), &supp).unwrap(), t);
        }
    }

    #[test]
    fn validation_rejects_malformed_trees() {
        let bad = Bstm::node(2, 1, leaf(3, 1), Bstm::empty());
        assert!(bad.validate().is_err());
        let bad = Bstm::node(2, 0, Bstm::empty(), Bstm::empty());
        assert!(bad.validate().is_err());
        let bad = Bts::node(vec![1, 2], Bts::empty(), bts_leaf(&[2]));
        assert!(bad.validate(BtsVariant::Increasing).is_err());
        let bad = Bts::node(vec![3], bts_leaf(&[5]), Bts::empty());
        assert!(bad.validate(BtsVariant::Decreasing).is_err());
        assert!(bad.validate(BtsVariant::Increasing).is_ok());
    }
}
