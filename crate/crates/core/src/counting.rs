//! Class-size formulas, chain-family posets, the linear-extension recursion,
//! the meet-taiga reduction, twin counting, and brute-force counting oracles.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::correspond::p_meet_tg;
use crate::error::{domain, resource, validation, Result};
use crate::monoid::MonoidId;
use crate::stalactic::{Side, StalacticTableau};
use crate::taiga::{p_tg, BinaryShapeM, Bstm};
use crate::words::{content, restrict, rho, simple_interval_blocks, Letter, OccSide, Word};

/// Node-count cap for the brute-force linear-extension routines.
pub const BRUTE_POSET_GUARD: usize = 12;

/// Node-count cap above which [`twin_count_bstm_bounds`] omits the exact
/// count and returns only the Catalan bounds.
pub const TWIN_ENUMERATION_GUARD: usize = 10;

fn factorial(n: usize) -> BigUint {
    let mut out = BigUint::one();
    for i in 2..=n {
        out *= i as u64;
    }
    out
}

fn binomial(n: usize, r: usize) -> BigUint {
    if r > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(r))
}

/// Binomial with the convention that choosing zero from `-1` counts one.
fn binomial_conv(n: i64, r: usize) -> BigUint {
    if r == 0 {
        BigUint::one()
    } else if n < r as i64 {
        BigUint::zero()
    } else {
        binomial(n as usize, r)
    }
}

fn exact_div(num: BigUint, den: &BigUint) -> BigUint {
    let (q, r) = num.div_rem(den);
    debug_assert!(r.is_zero(), "division must be exact");
    q
}

/// The `m`-th Catalan number.
pub fn catalan(m: usize) -> BigUint {
    exact_div(binomial(2 * m, m), &BigUint::from(m + 1))
}

// ---------------------------------------------------------------------------
// Generic posets and brute-force counting
// ---------------------------------------------------------------------------

/// A finite poset on `{1, ..., n}`, presented by any relation set whose
/// transitive closure is acyclic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GenericPoset {
    n: usize,
    relations: BTreeSet<(usize, usize)>,
}

impl GenericPoset {
    pub fn new(n: usize, relations: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let relations: BTreeSet<(usize, usize)> = relations.into_iter().collect();
        for &(i, j) in &relations {
            if i == 0 || j == 0 || i > n || j > n {
                return validation(format!("relation ({i},{j}) out of range 1..={n}"));
            }
            if i == j {
                return validation(format!("relation ({i},{i}) is reflexive"));
            }
        }
        let poset = GenericPoset { n, relations };
        if poset.is_cyclic() {
            return validation("relations close into a cycle");
        }
        Ok(poset)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn relations(&self) -> &BTreeSet<(usize, usize)> {
        &self.relations
    }

    fn is_cyclic(&self) -> bool {
        // Kahn's algorithm
        let mut indeg = vec![0usize; self.n + 1];
        for &(_, j) in &self.relations {
            indeg[j] += 1;
        }
        let mut queue: Vec<usize> = (1..=self.n).filter(|&x| indeg[x] == 0).collect();
        let mut seen = 0;
        while let Some(x) = queue.pop() {
            seen += 1;
            for &(i, j) in &self.relations {
                if i == x {
                    indeg[j] -= 1;
                    if indeg[j] == 0 {
                        queue.push(j);
                    }
                }
            }
        }
        seen != self.n
    }

    fn predecessor_masks(&self) -> Vec<u64> {
        let mut preds = vec![0u64; self.n];
        for &(i, j) in &self.relations {
            preds[j - 1] |= 1 << (i - 1);
        }
        preds
    }
}

/// A total order refining a poset, as the element sequence in increasing
/// order; `lambda` maps each element to its rank.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearExtension {
    order: Vec<usize>,
}

impl LinearExtension {
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// 1-based rank of an element.
    pub fn lambda(&self, x: usize) -> Option<usize> {
        self.order.iter().position(|&y| y == x).map(|i| i + 1)
    }

    /// Rank per element: entry `x - 1` holds the rank of element `x`.
    pub fn lambda_vec(&self) -> Vec<usize> {
        let mut out = vec![0; self.order.len()];
        for (i, &x) in self.order.iter().enumerate() {
            out[x - 1] = i + 1;
        }
        out
    }
}

/// Exact number of linear extensions by recursing over minimal elements,
/// memoised on the set of remaining elements.
pub fn le_count_brute(p: &GenericPoset) -> Result<BigUint> {
    if p.n > BRUTE_POSET_GUARD {
        return resource(format!("poset has {} > {BRUTE_POSET_GUARD} nodes", p.n));
    }
    let preds = p.predecessor_masks();
    let full: u64 = if p.n == 64 { !0 } else { (1 << p.n) - 1 };
    let mut memo: Vec<u64> = vec![u64::MAX; 1 << p.n];
    fn count(remaining: u64, preds: &[u64], memo: &mut [u64]) -> u64 {
        if remaining == 0 {
            return 1;
        }
        if memo[remaining as usize] != u64::MAX {
            return memo[remaining as usize];
        }
        let mut total = 0u64;
        let mut bits = remaining;
        while bits != 0 {
            let x = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if preds[x] & remaining == 0 {
                total += count(remaining & !(1 << x), preds, memo);
            }
        }
        memo[remaining as usize] = total;
        total
    }
    Ok(BigUint::from(count(full, &preds, &mut memo)))
}

/// All linear extensions, by backtracking over minimal elements.
pub fn enumerate_le(p: &GenericPoset) -> Result<Vec<LinearExtension>> {
    if p.n > BRUTE_POSET_GUARD {
        return resource(format!("poset has {} > {BRUTE_POSET_GUARD} nodes", p.n));
    }
    let preds = p.predecessor_masks();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(p.n);
    fn go(remaining: u64, preds: &[u64], current: &mut Vec<usize>, out: &mut Vec<LinearExtension>) {
        if remaining == 0 {
            out.push(LinearExtension {
                order: current.clone(),
            });
            return;
        }
        let mut bits = remaining;
        while bits != 0 {
            let x = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if preds[x] & remaining == 0 {
                current.push(x + 1);
                go(remaining & !(1 << x), preds, current, out);
                current.pop();
            }
        }
    }
    let full: u64 = if p.n == 0 { 0 } else { (1 << p.n) - 1 };
    go(full, &preds, &mut current, &mut out);
    Ok(out)
}

/// Linear extensions of an arbitrary relation list on `{1, ..., k}`,
/// returned as rank sequences; empty when the relations are cyclic.
fn extensions_of(k: usize, relations: &[(usize, usize)]) -> Vec<LinearExtension> {
    let mut preds = vec![0u64; k];
    for &(i, j) in relations {
        preds[j - 1] |= 1 << (i - 1);
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(remaining: u64, preds: &[u64], current: &mut Vec<usize>, out: &mut Vec<LinearExtension>) {
        if remaining == 0 {
            out.push(LinearExtension {
                order: current.clone(),
            });
            return;
        }
        let mut bits = remaining;
        while bits != 0 {
            let x = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if preds[x] & remaining == 0 {
                current.push(x + 1);
                go(remaining & !(1 << x), preds, current, out);
                current.pop();
            }
        }
    }
    let full: u64 = if k == 0 { 0 } else { (1 << k) - 1 };
    go(full, &preds, &mut current, &mut out);
    out
}

// ---------------------------------------------------------------------------
// Chain-family posets
// ---------------------------------------------------------------------------

/// The three families of chain posets used by the meet-monoid counting
/// reductions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ChainFamilyPoset {
    /// `k` chains, the `i`-th of `x[i]` nodes; least elements ordered by
    /// chain index, greatest elements ordered by the permutation `tau`.
    Chains { x: Vec<usize>, tau: Vec<usize> },
    /// `k` chains of `v[i] + 1` nodes with a chain of `b[i]` extra nodes
    /// between consecutive least elements; greatest elements ordered by
    /// `sigma`.
    ChainsWithGaps {
        v: Vec<usize>,
        b: Vec<usize>,
        sigma: Vec<usize>,
    },
    /// `k` chains of `x[i]` nodes; least elements ordered by the ancestor
    /// order of the left tree, greatest elements by the descendant order of
    /// the right tree.
    TwinTrees {
        x: Vec<usize>,
        left: BinaryShapeM,
        right: BinaryShapeM,
    },
}

fn check_permutation(p: &[usize], k: usize, name: &str) -> Result<()> {
    let seen: BTreeSet<usize> = p.iter().copied().collect();
    if p.len() != k || seen != (1..=k).collect() {
        return validation(format!("{name} must be a permutation of 1..={k}"));
    }
    Ok(())
}

fn check_gap_admissible(v: &[usize], sigma: &[usize]) -> Result<()> {
    for i in 0..sigma.len() {
        for j in i + 1..sigma.len() {
            if sigma[i] > sigma[j] && v[sigma[j] - 1] == 0 {
                return validation(format!(
                    "inverted chain {} must have a non-trivial chain",
                    sigma[j]
                ));
            }
        }
    }
    Ok(())
}

/// Strict ancestor pairs `(i, j)` of a shape: node `i` below node `j` in the
/// order where every node precedes its whole subtree.
fn ancestor_pairs(t: &BinaryShapeM) -> Vec<(usize, usize)> {
    // inorder interval of each node's subtree
    fn walk(t: &BinaryShapeM, next: &mut usize, out: &mut Vec<(usize, usize, usize)>) {
        if let Some(n) = t.root() {
            let lo = *next;
            walk(&n.left, next, out);
            let me = *next;
            *next += 1;
            walk(&n.right, next, out);
            let hi = *next - 1;
            out.push((me, lo, hi));
        }
    }
    let mut spans = Vec::new();
    let mut next = 1;
    walk(t, &mut next, &mut spans);
    let mut out = Vec::new();
    for &(me, lo, hi) in &spans {
        for j in lo..=hi {
            if j != me {
                out.push((me, j));
            }
        }
    }
    out
}

/// Twin check on multiplicity-labelled shapes: same node count, matching
/// inorder multiplicities, and no simple node with the same child direction
/// in both shapes.
pub fn twin_btm_check(left: &BinaryShapeM, right: &BinaryShapeM) -> Result<()> {
    let ln = left.inorder_nodes();
    let rn = right.inorder_nodes();
    if ln.len() != rn.len() {
        return validation("twin shapes must have the same number of nodes");
    }
    for (l, r) in ln.iter().zip(&rn) {
        if l.mult == 0 || r.mult == 0 {
            return validation("multiplicities must be positive");
        }
        if l.mult != r.mult {
            return validation("corresponding nodes must share multiplicities");
        }
        if l.mult == 1 {
            if !l.left.is_empty() && !r.left.is_empty() {
                return validation("simple node has a left child in both shapes");
            }
            if !l.right.is_empty() && !r.right.is_empty() {
                return validation("simple node has a right child in both shapes");
            }
        }
    }
    Ok(())
}

/// Builds the explicit DAG of a chain-family poset.
pub fn realize(p: &ChainFamilyPoset) -> Result<GenericPoset> {
    match p {
        ChainFamilyPoset::Chains { x, tau } => {
            let k = x.len();
            check_permutation(tau, k, "tau")?;
            if x.contains(&0) {
                return validation("chain lengths must be positive");
            }
            let mut base = vec![0usize; k + 1];
            for i in 0..k {
                base[i + 1] = base[i] + x[i];
            }
            let mut rel = Vec::new();
            for i in 0..k {
                for j in 1..x[i] {
                    rel.push((base[i] + j, base[i] + j + 1));
                }
            }
            let least = |i: usize| base[i] + 1;
            let greatest = |i: usize| base[i] + x[i];
            for i in 0..k.saturating_sub(1) {
                rel.push((least(i), least(i + 1)));
                rel.push((greatest(tau[i] - 1), greatest(tau[i + 1] - 1)));
            }
            GenericPoset::new(base[k], rel)
        }
        ChainFamilyPoset::ChainsWithGaps { v, b, sigma } => {
            let k = v.len();
            if k == 0 {
                return GenericPoset::new(0, Vec::new());
            }
            if b.len() + 1 != k {
                return validation("gap vector must have one entry fewer than chains");
            }
            check_permutation(sigma, k, "sigma")?;
            check_gap_admissible(v, sigma)?;
            let mut base = vec![0usize; k + 1];
            for i in 0..k {
                base[i + 1] = base[i] + v[i] + 1;
            }
            let chain_total = base[k];
            let mut gap_base = vec![0usize; k];
            let mut next = chain_total;
            for i in 0..k - 1 {
                gap_base[i] = next;
                next += b[i];
            }
            let total = next;
            let mut rel = Vec::new();
            for i in 0..k {
                for j in 1..=v[i] {
                    rel.push((base[i] + j, base[i] + j + 1));
                }
            }
            let least = |i: usize| base[i] + 1;
            let greatest = |i: usize| base[i] + v[i] + 1;
            for i in 0..k - 1 {
                // least(i) < gap nodes < least(i+1)
                let mut prev = least(i);
                for g in 0..b[i] {
                    rel.push((prev, gap_base[i] + g + 1));
                    prev = gap_base[i] + g + 1;
                }
                rel.push((prev, least(i + 1)));
                rel.push((greatest(sigma[i] - 1), greatest(sigma[i + 1] - 1)));
            }
            GenericPoset::new(total, rel)
        }
        ChainFamilyPoset::TwinTrees { x, left, right } => {
            twin_btm_check(left, right)?;
            let k = x.len();
            if k != left.node_count() {
                return validation("chain count must match the number of nodes");
            }
            if x.contains(&0) {
                return validation("chain lengths must be positive");
            }
            let mut base = vec![0usize; k + 1];
            for i in 0..k {
                base[i + 1] = base[i] + x[i];
            }
            let mut rel = Vec::new();
            for i in 0..k {
                for j in 1..x[i] {
                    rel.push((base[i] + j, base[i] + j + 1));
                }
            }
            let least = |i: usize| base[i] + 1;
            let greatest = |i: usize| base[i] + x[i];
            for (a, d) in ancestor_pairs(left) {
                rel.push((least(a - 1), least(d - 1)));
            }
            for (a, d) in ancestor_pairs(right) {
                // descendants are below their ancestors on the greatest side
                rel.push((greatest(d - 1), greatest(a - 1)));
            }
            GenericPoset::new(base[k], rel)
        }
    }
}

// ---------------------------------------------------------------------------
// The linear-extension recursion
// ---------------------------------------------------------------------------

/// Rewrites `(V, B)` when the `n`-th chain is dissolved into the `l`-th:
/// the first coordinate drops entry `n` and adds the surviving nodes to
/// entry `l`, the second merges the gap entries around `n` and absorbs the
/// distribution `M` into the gaps between `n` and `l`.
pub fn f_transform(
    k: usize,
    n: usize,
    l: usize,
    m: &[usize],
    v: &[usize],
    b: &[usize],
) -> Result<(Vec<usize>, Vec<usize>)> {
    if k < 2 || n < 1 || n >= l || l > k {
        return domain("indices must satisfy 1 <= n < l <= k with k >= 2");
    }
    if v.len() != k || b.len() != k - 1 || m.len() != l - n {
        return domain("vector lengths must match the indices");
    }
    let norm: usize = m.iter().sum();
    if norm > v[n - 1] {
        return domain("distribution exceeds the dissolved chain");
    }
    let mut v2 = Vec::with_capacity(k - 1);
    v2.extend_from_slice(&v[..n - 1]);
    v2.extend_from_slice(&v[n..l - 1]);
    v2.push(v[l - 1] + v[n - 1] - norm);
    v2.extend_from_slice(&v[l..]);

    let mut b2 = Vec::with_capacity(k.saturating_sub(2));
    if n == 1 {
        for j in 1..l - 1 {
            b2.push(b[j] + m[j]);
        }
        b2.extend_from_slice(&b[l - 1..]);
    } else {
        b2.extend_from_slice(&b[..n - 2]);
        b2.push(b[n - 2] + 1 + b[n - 1] + m[0]);
        for j in n..l - 1 {
            b2.push(b[j] + m[j - n + 1]);
        }
        b2.extend_from_slice(&b[l - 1..]);
    }
    Ok((v2, b2))
}

fn std_ranks(values: &[usize]) -> Vec<usize> {
    values
        .iter()
        .map(|&x| values.iter().filter(|&&y| y < x).count() + 1)
        .collect()
}

fn compositions(len: usize, max_sum: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..=max_sum {
        for mut rest in compositions(len - 1, max_sum - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Exact number of linear extensions of a gap poset, by the two-branch
/// recursion that dissolves the chain with the lowest greatest element into
/// the chain with the next one.
pub fn le_count_g(v: &[usize], b: &[usize], sigma: &[usize]) -> Result<BigUint> {
    let k = v.len();
    if k == 0 {
        return Ok(BigUint::one());
    }
    if b.len() + 1 != k {
        return validation("gap vector must have one entry fewer than chains");
    }
    check_permutation(sigma, k, "sigma")?;
    check_gap_admissible(v, sigma)?;
    Ok(le_count_g_inner(v, b, sigma))
}

fn le_count_g_inner(v: &[usize], b: &[usize], sigma: &[usize]) -> BigUint {
    let k = v.len();
    if k <= 1 {
        return BigUint::one();
    }
    let s1 = sigma[0];
    let s2 = sigma[1];
    let mut total = BigUint::zero();
    if s1 < s2 {
        let d = s2 - s1;
        for m in compositions(d, v[s1 - 1]) {
            let norm: usize = m.iter().sum();
            let sub = if k == 2 {
                BigUint::one()
            } else {
                let (v2, b2) = f_transform(k, s1, s2, &m, v, b).expect("valid transform");
                let sigma2 = std_ranks(&sigma[1..]);
                le_count_g_inner(&v2, &b2, &sigma2)
            };
            let insert = binomial_conv(
                v[s2 - 1] as i64 - 1 + (v[s1 - 1] - norm) as i64,
                v[s1 - 1] - norm,
            );
            let mut gaps = BigUint::one();
            for (i, &mi) in m.iter().enumerate() {
                gaps *= binomial(b[s1 - 1 + i] + mi, mi);
            }
            total += sub * insert * gaps;
        }
    } else {
        let d = s1 - s2;
        debug_assert!(v[s2 - 1] >= 1, "admissibility grants a non-trivial chain");
        for m in compositions(d, v[s2 - 1] - 1) {
            let norm: usize = m.iter().sum();
            let sub = if k == 2 {
                BigUint::one()
            } else {
                let (v2, b2) = f_transform(k, s2, s1, &m, v, b).expect("valid transform");
                let mut rest: Vec<usize> = Vec::with_capacity(k - 1);
                rest.push(sigma[0]);
                rest.extend_from_slice(&sigma[2..]);
                let sigma2 = std_ranks(&rest);
                le_count_g_inner(&v2, &b2, &sigma2)
            };
            let insert = binomial_conv(
                (v[s1 - 1] + v[s2 - 1]) as i64 - 1 - norm as i64,
                v[s2 - 1] - 1 - norm,
            );
            let mut gaps = BigUint::one();
            for (i, &mi) in m.iter().enumerate() {
                gaps *= binomial(b[s2 - 1 + i] + mi, mi);
            }
            total += sub * insert * gaps;
        }
    }
    total
}

/// Exact number of linear extensions of a twin-tree poset, reduced to a sum
/// of chain-poset counts over the linear extensions of the two tree orders.
/// `x` must list the node multiplicities in inorder.
pub fn le_count_q(x: &[usize], left: &BinaryShapeM, right: &BinaryShapeM) -> Result<BigUint> {
    twin_btm_check(left, right)?;
    let k = x.len();
    if k != left.node_count() {
        return validation("x must have one entry per node");
    }
    if x != left.multiplicities() {
        return validation("x must match the node multiplicities");
    }
    if k == 0 {
        return Ok(BigUint::one());
    }
    let delta = ancestor_pairs(left);
    let nabla: Vec<(usize, usize)> = ancestor_pairs(right)
        .into_iter()
        .map(|(a, d)| (d, a))
        .collect();
    let mut total = BigUint::zero();
    for l_ext in extensions_of(k, &delta) {
        let lambda_l = l_ext.lambda_vec();
        // a simple node below x in the left order stays below its whole
        // chain, hence below x on the greatest side as well
        let mut rels = nabla.clone();
        for a in 1..=k {
            if x[a - 1] == 1 {
                for t in 1..=k {
                    if t != a && lambda_l[a - 1] < lambda_l[t - 1] {
                        rels.push((a, t));
                    }
                }
            }
        }
        for r_ext in extensions_of(k, &rels) {
            let lambda_r = r_ext.lambda_vec();
            let mut tau = vec![0usize; k];
            let mut y = vec![0usize; k];
            for node in 1..=k {
                tau[lambda_r[node - 1] - 1] = lambda_l[node - 1];
                y[lambda_l[node - 1] - 1] = x[node - 1];
            }
            let v: Vec<usize> = y.iter().map(|&c| c - 1).collect();
            let b = vec![0usize; k - 1];
            total += le_count_g(&v, &b, &tau)?;
        }
    }
    Ok(total)
}

// ---------------------------------------------------------------------------
// Class sizes
// ---------------------------------------------------------------------------

/// Number of permutations of `[n]` whose recoil set is exactly `s`, by
/// inclusion–exclusion over compositions.
pub fn recoil_class_count(n: usize, s: &BTreeSet<usize>) -> BigUint {
    if n == 0 {
        return if s.is_empty() {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    if s.iter().any(|&i| i == 0 || i >= n) {
        return BigUint::zero();
    }
    let elems: Vec<usize> = s.iter().copied().collect();
    let mut total = BigInt::zero();
    for mask in 0u64..(1 << elems.len()) {
        let subset: Vec<usize> = elems
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &t)| t)
            .collect();
        let mut cuts = vec![0usize];
        cuts.extend(&subset);
        cuts.push(n);
        let mut multinomial = factorial(n);
        for pair in cuts.windows(2) {
            multinomial = exact_div(multinomial, &factorial(pair[1] - pair[0]));
        }
        let sign = if (elems.len() - subset.len()).is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        total += sign * BigInt::from(multinomial);
    }
    debug_assert!(!total.is_negative());
    total.to_biguint().unwrap_or_default()
}

fn subtree_mult_sums(t: &Bstm) -> BTreeMap<Letter, usize> {
    fn walk(t: &Bstm, out: &mut BTreeMap<Letter, usize>) -> usize {
        match t.root() {
            None => 0,
            Some(n) => {
                let sum = walk(&n.left, out) + walk(&n.right, out) + n.mult;
                out.insert(n.letter, sum);
                sum
            }
        }
    }
    let mut out = BTreeMap::new();
    walk(t, &mut out);
    out
}

fn stalactic_chain_count(counts: &[usize], prefix: bool) -> BigUint {
    let n: usize = counts.iter().sum();
    let mut den = BigUint::one();
    let mut running = 0usize;
    for &c in counts {
        let anchored = if prefix { running + c } else { n - running };
        running += c;
        den *= factorial(c - 1) * BigUint::from(anchored);
    }
    exact_div(factorial(n), &den)
}

/// Parameters of the chain poset counting a meet-stalactic class: chain
/// lengths in first-occurrence order and the greatest-element permutation
/// induced by last occurrences.
pub fn mst_poset_params(w: &Word) -> (Vec<usize>, Vec<usize>) {
    let first = rho(w, OccSide::First);
    let last = rho(w, OccSide::Last);
    let cont = content(w);
    let x: Vec<usize> = first.order().iter().map(|&a| cont.get(a)).collect();
    let tau: Vec<usize> = last
        .order()
        .iter()
        .map(|&a| first.rank(a).unwrap())
        .collect();
    (x, tau)
}

/// Parameters of the twin-tree poset counting a meet-taiga class.
pub fn mtg_poset_params(w: &Word) -> (Vec<usize>, BinaryShapeM, BinaryShapeM) {
    let pair = p_meet_tg(w);
    let cont = content(w);
    let x: Vec<usize> = cont.support().map(|a| cont.get(a)).collect();
    (x, pair.left().shape(), pair.right().shape())
}

/// Size of the congruence class of `w` in the given monoid.
pub fn class_size(m: MonoidId, w: &Word) -> Result<BigUint> {
    let cont = content(w);
    let n = w.len();
    match m {
        MonoidId::LSt => {
            let order = rho(w, OccSide::First);
            let counts: Vec<usize> = order.order().iter().map(|&a| cont.get(a)).collect();
            Ok(stalactic_chain_count(&counts, false))
        }
        MonoidId::RSt => {
            let order = rho(w, OccSide::Last);
            let counts: Vec<usize> = order.order().iter().map(|&a| cont.get(a)).collect();
            Ok(stalactic_chain_count(&counts, true))
        }
        MonoidId::JSt => {
            let simple = cont.counts().values().filter(|&&c| c == 1).count();
            let mut den = factorial(simple);
            for &c in cont.counts().values() {
                den *= factorial(c);
            }
            Ok(exact_div(factorial(n), &den))
        }
        MonoidId::LTg | MonoidId::RTg => {
            let side = if m == MonoidId::LTg {
                Side::Left
            } else {
                Side::Right
            };
            let sums = subtree_mult_sums(&p_tg(w, side));
            let mut den = BigUint::one();
            for (a, c) in cont.counts() {
                den *= factorial(c - 1) * BigUint::from(sums[a]);
            }
            Ok(exact_div(factorial(n), &den))
        }
        MonoidId::JTg => {
            let mut num = factorial(n);
            let mut den = BigUint::one();
            for &c in cont.counts().values() {
                den *= factorial(c);
            }
            for block in simple_interval_blocks(w) {
                let set: BTreeSet<Letter> = block.iter().copied().collect();
                let piece = restrict(w, &set);
                let recoils = crate::congruence::recoil_set_of_packed(&piece)?;
                let recoils: BTreeSet<usize> = recoils.into_iter().map(|x| x as usize).collect();
                num *= recoil_class_count(piece.len(), &recoils);
                den *= factorial(block.len());
            }
            Ok(exact_div(num, &den))
        }
        MonoidId::MSt => {
            let (x, tau) = mst_poset_params(w);
            let v: Vec<usize> = x.iter().map(|&c| c - 1).collect();
            let b = vec![0usize; x.len().saturating_sub(1)];
            le_count_g(&v, &b, &tau)
        }
        MonoidId::MTg => {
            let (x, left, right) = mtg_poset_params(w);
            le_count_q(&x, &left, &right)
        }
        MonoidId::HypoDistinct => {
            let recoils = crate::congruence::recoil_set_of_packed(w)?;
            let recoils: BTreeSet<usize> = recoils.into_iter().map(|x| x as usize).collect();
            Ok(recoil_class_count(n, &recoils))
        }
    }
}

// ---------------------------------------------------------------------------
// Twin counting
// ---------------------------------------------------------------------------

/// Number of right tableaux forming a twin pair with the given left tableau:
/// `|supp|!` divided by, for each simple column, the number of columns to
/// its right including itself.
pub fn twin_count_st(left: &StalacticTableau) -> BigUint {
    let k = left.columns().len();
    let mut den = BigUint::one();
    for (pos, col) in left.columns().iter().enumerate() {
        if col.height == 1 {
            den *= BigUint::from(k - pos);
        }
    }
    exact_div(factorial(k), &den)
}

/// Catalan bounds and, for trees of at most [`TWIN_ENUMERATION_GUARD`]
/// nodes, the exact number of right trees forming a twin pair with `left`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BstmTwinBounds {
    pub lower: BigUint,
    pub upper: BigUint,
    pub exact: Option<BigUint>,
}

/// All search trees over the given sorted support with the given contents.
fn all_bstm_over(letters: &[Letter], cont: &BTreeMap<Letter, usize>) -> Vec<Bstm> {
    if letters.is_empty() {
        return vec![Bstm::empty()];
    }
    let mut out = Vec::new();
    for i in 0..letters.len() {
        for l in all_bstm_over(&letters[..i], cont) {
            for r in all_bstm_over(&letters[i + 1..], cont) {
                out.push(Bstm::node(letters[i], cont[&letters[i]], l.clone(), r));
            }
        }
    }
    out
}

pub fn twin_count_bstm_bounds(left: &Bstm) -> BstmTwinBounds {
    let n = left.node_count();
    let simple_non_leaf = left
        .inorder_nodes()
        .iter()
        .filter(|nd| nd.mult == 1 && !(nd.left.is_empty() && nd.right.is_empty()))
        .count();
    let lower = catalan(n - simple_non_leaf);
    let upper = catalan(n);
    let exact = if n <= TWIN_ENUMERATION_GUARD {
        let letters: Vec<Letter> = left.support().into_iter().collect();
        let cont: BTreeMap<Letter, usize> = left
            .inorder_nodes()
            .iter()
            .map(|nd| (nd.letter, nd.mult))
            .collect();
        let count = all_bstm_over(&letters, &cont)
            .into_iter()
            .filter(|cand| crate::correspond::twin_bstm_check(left, cand).is_ok())
            .count();
        Some(BigUint::from(count))
    } else {
        None
    };
    BstmTwinBounds {
        lower,
        upper,
        exact,
    }
}
