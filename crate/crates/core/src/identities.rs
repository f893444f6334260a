//! Identity checking for the eight monoids, their finite equational bases,
//! and search utilities.
//!
//! Variable words reuse the word machinery, with variables stored as small
//! positive integers and rendered as letters (`x`, `y`, `z`, `t`, ...).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::congruence::equiv;
use crate::error::{domain, resource, Error, Result};
use crate::monoid::MonoidId;
use crate::words::{content, rho, simple_part, words_over, Letter, OccSide, Word};

/// Default cap on the number of substitutions (or candidate identities)
/// explored by the exhaustive routines.
pub const DEFAULT_SEARCH_GUARD: u64 = 1_000_000;

const VAR_CHARS: &[u8] = b"xyztuvwabcdefghijklmnopqrs";

fn var_to_char(v: Letter) -> Option<char> {
    VAR_CHARS.get((v - 1) as usize).map(|&c| c as char)
}

fn char_to_var(c: char) -> Option<Letter> {
    VAR_CHARS
        .iter()
        .position(|&b| b as char == c)
        .map(|i| (i + 1) as Letter)
}

/// A word over a variable alphabet.
pub type VarWord = Word;

/// A formal equality of two variable words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Identity {
    pub lhs: VarWord,
    pub rhs: VarWord,
}

impl Identity {
    pub fn new(lhs: VarWord, rhs: VarWord) -> Self {
        Identity { lhs, rhs }
    }

    /// All variables occurring on either side.
    pub fn variables(&self) -> BTreeSet<Letter> {
        let mut vars = self.lhs.support();
        vars.extend(self.rhs.support());
        vars
    }

    pub fn is_trivial(&self) -> bool {
        self.lhs == self.rhs
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in self.lhs.letters() {
            f.write_str(&var_to_char(v).map(String::from).unwrap_or(format!("<{v}>")))?;
        }
        f.write_str("=")?;
        for &v in self.rhs.letters() {
            f.write_str(&var_to_char(v).map(String::from).unwrap_or(format!("<{v}>")))?;
        }
        Ok(())
    }
}

impl FromStr for Identity {
    type Err = Error;

    /// Parses `lhs=rhs` with single-letter variables.
    fn from_str(s: &str) -> Result<Identity> {
        let Some((l, r)) = s.split_once('=') else {
            return domain("identity must be written lhs=rhs");
        };
        let side = |text: &str| -> Result<VarWord> {
            let mut vars = Vec::with_capacity(text.len());
            for c in text.chars() {
                match char_to_var(c) {
                    Some(v) => vars.push(v),
                    None => return domain(format!("invalid variable {c:?}")),
                }
            }
            Ok(Word::from_vec_unchecked(vars))
        };
        Ok(Identity::new(side(l)?, side(r)?))
    }
}

/// True when both sides have the same content.
pub fn is_balanced(id: &Identity) -> bool {
    content(&id.lhs) == content(&id.rhs)
}

fn structural_base(m: MonoidId) -> Result<MonoidId> {
    // each taiga monoid satisfies exactly the identities of its stalactic
    // counterpart
    match m {
        MonoidId::LTg => Ok(MonoidId::LSt),
        MonoidId::RTg => Ok(MonoidId::RSt),
        MonoidId::MTg => Ok(MonoidId::MSt),
        MonoidId::JTg => Ok(MonoidId::JSt),
        MonoidId::HypoDistinct => domain("no identity checking for the auxiliary decider"),
        other => Ok(other),
    }
}

/// Decides whether the monoid satisfies the identity, via the occurrence
/// and content characterisations of its equational theory.
pub fn check_id(m: MonoidId, id: &Identity) -> Result<bool> {
    let base = structural_base(m)?;
    let balanced = is_balanced(id);
    Ok(match base {
        MonoidId::RSt => balanced && rho(&id.lhs, OccSide::Last) == rho(&id.rhs, OccSide::Last),
        MonoidId::LSt => balanced && rho(&id.lhs, OccSide::First) == rho(&id.rhs, OccSide::First),
        MonoidId::MSt => {
            balanced
                && rho(&id.lhs, OccSide::First) == rho(&id.rhs, OccSide::First)
                && rho(&id.lhs, OccSide::Last) == rho(&id.rhs, OccSide::Last)
        }
        MonoidId::JSt => balanced && simple_part(&id.lhs) == simple_part(&id.rhs),
        _ => unreachable!("structural_base returns a stalactic monoid"),
    })
}

/// Evaluates the identity under a substitution of words for variables.
pub fn eval_identity(
    m: MonoidId,
    id: &Identity,
    substitution: &BTreeMap<Letter, Word>,
) -> Result<bool> {
    let apply = |side: &VarWord| -> Result<Word> {
        let mut out = Word::empty();
        for v in side.letters() {
            match substitution.get(v) {
                Some(w) => out = out.concat(w),
                None => {
                    return domain(format!(
                        "variable {} has no binding",
                        var_to_char(*v).unwrap_or('?')
                    ))
                }
            }
        }
        Ok(out)
    };
    equiv(m, &apply(&id.lhs)?, &apply(&id.rhs)?)
}

/// Evaluates the identity under every substitution of variables by words
/// over `[n]` of length at most `max_len` (the empty word included),
/// returning false on the first counterexample.
pub fn exhaustive_check(
    m: MonoidId,
    id: &Identity,
    n: Letter,
    max_len: usize,
    guard: u64,
) -> Result<bool> {
    let vars: Vec<Letter> = id.variables().into_iter().collect();
    let range: Vec<Word> = words_over(n, max_len).collect();
    let mut space = 1u64;
    for _ in 0..vars.len() {
        space = space
            .checked_mul(range.len() as u64)
            .filter(|&s| s <= guard)
            .ok_or_else(|| Error::Resource(format!("more than {guard} substitutions")))?;
    }
    let mut indices = vec![0usize; vars.len()];
    loop {
        let substitution: BTreeMap<Letter, Word> = vars
            .iter()
            .zip(&indices)
            .map(|(&v, &i)| (v, range[i].clone()))
            .collect();
        if !eval_identity(m, id, &substitution)? {
            return Ok(false);
        }
        // odometer over substitution indices
        let mut pos = indices.len();
        loop {
            if pos == 0 {
                return Ok(true);
            }
            pos -= 1;
            indices[pos] += 1;
            if indices[pos] < range.len() {
                break;
            }
            indices[pos] = 0;
        }
    }
}

/// Searches for a shortest non-trivial identity in exactly `num_vars`
/// variables satisfied by the monoid, with sides of length at most
/// `max_len`. Candidates are tried by length, then lexicographically.
pub fn shortest_identity_search(
    m: MonoidId,
    num_vars: Letter,
    max_len: usize,
    guard: u64,
) -> Result<Option<Identity>> {
    let full: BTreeSet<Letter> = (1..=num_vars).collect();
    let mut tried = 0u64;
    for len in 1..=max_len {
        let words: Vec<Word> = words_over(num_vars, len)
            .filter(|w| w.len() == len)
            .collect();
        for (i, lhs) in words.iter().enumerate() {
            for rhs in &words[i + 1..] {
                tried += 1;
                if tried > guard {
                    return resource(format!("more than {guard} candidate identities"));
                }
                let id = Identity::new(lhs.clone(), rhs.clone());
                if id.variables() != full {
                    continue;
                }
                if check_id(m, &id)? {
                    return Ok(Some(id));
                }
            }
        }
    }
    Ok(None)
}

/// The finite equational basis of a stalactic monoid. The taiga monoids
/// satisfy exactly the same identities, so no separate bases exist for them.
pub fn basis(m: MonoidId) -> Result<Vec<Identity>> {
    let parse = |s: &str| Identity::from_str(s).expect("well-formed basis identity");
    match m {
        MonoidId::RSt => Ok(vec![parse("xyx=yxx")]),
        MonoidId::LSt => Ok(vec![parse("xyx=xxy")]),
        MonoidId::MSt => Ok(vec![parse("xzxyty=xzyxty"), parse("xzxytx=xzyxtx")]),
        MonoidId::JSt => Ok(vec![parse("xxy=xyx"), parse("xyx=yxx")]),
        other => domain(format!("no basis is stored for {other}")),
    }
}
