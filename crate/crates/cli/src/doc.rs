//! Canonical JSON rendering and parsing for every structure the tool
//! exchanges, plus the compact single-line forms.
//!
//! Canonical forms:
//! - word: `[2,1,2]`
//! - stalactic tableau: `{"cols":[{"l":2,"h":2},...]}`
//! - patience-sorting tableau: `{"variant":"inc","cols":[[1,3],...]}`
//! - tree with multiplicities: `{"l":2,"m":2,"L":...,"R":...}`, `null` children
//! - tree over sets: `{"s":[5,9],"L":...,"R":...}`, `null` children
//! - twin pair: `{"left":...,"right":...}`
//! - identity: `{"lhs":"xzxyty","rhs":"xzyxty"}`
//! - poset: `{"n":8,"relations":[[1,2],...]}`

use plackit::counting::GenericPoset;
use plackit::identities::Identity;
use plackit::stalactic::{PsTableau, PsVariant, StalacticTableau};
use plackit::taiga::{Bstm, Bts};
use plackit::words::Word;
use serde_json::{json, Map, Value};

use crate::CliError;

fn bad(msg: impl Into<String>) -> CliError {
    CliError::usage(msg)
}

fn parse_json(text: &str) -> Result<Value, CliError> {
    serde_json::from_str(text).map_err(|e| {
        bad(format!(
            "malformed JSON at line {} column {}: {e}",
            e.line(),
            e.column()
        ))
    })
}

// --- words ---------------------------------------------------------------

pub fn word_value(w: &Word) -> Value {
    Value::Array(w.letters().iter().map(|&a| json!(a)).collect())
}

pub fn word_from_value(v: &Value) -> Result<Word, CliError> {
    let arr = v
        .as_array()
        .ok_or_else(|| bad("word must be a JSON array"))?;
    let mut letters = Vec::with_capacity(arr.len());
    for x in arr {
        let a = x
            .as_u64()
            .ok_or_else(|| bad("word letters must be positive integers"))?;
        letters.push(a);
    }
    Word::new(letters).map_err(CliError::from)
}

/// Parses the CLI word grammar: a digit string when every letter is at most
/// nine, a comma-separated list otherwise. The empty string is the empty word.
pub fn word_from_text(s: &str) -> Result<Word, CliError> {
    if s.is_empty() {
        return Ok(Word::empty());
    }
    if s.contains(',') {
        let mut letters = Vec::new();
        for part in s.split(',') {
            let a: u64 = part
                .trim()
                .parse()
                .map_err(|_| bad(format!("invalid letter {part:?} in word")))?;
            letters.push(a);
        }
        return Word::new(letters).map_err(CliError::from);
    }
    Word::from_digits(s).map_err(CliError::from)
}

// --- stalactic tableaux ---------------------------------------------------

pub fn stalactic_value(t: &StalacticTableau) -> Value {
    let cols: Vec<Value> = t
        .columns()
        .iter()
        .map(|c| {
            let mut m = Map::new();
            m.insert("l".into(), json!(c.letter));
            m.insert("h".into(), json!(c.height));
            Value::Object(m)
        })
        .collect();
    json!({ "cols": cols })
}

pub fn stalactic_from_value(v: &Value) -> Result<StalacticTableau, CliError> {
    let cols = v
        .get("cols")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("stalactic tableau needs a \"cols\" array"))?;
    let mut parsed = Vec::with_capacity(cols.len());
    for c in cols {
        let l = c.get("l").and_then(Value::as_u64);
        let h = c.get("h").and_then(Value::as_u64);
        match (l, h) {
            (Some(l), Some(h)) => parsed.push((l, h as usize)),
            _ => return Err(bad("each column needs integer \"l\" and \"h\"")),
        }
    }
    StalacticTableau::new(parsed).map_err(CliError::from)
}

pub fn stalactic_compact(t: &StalacticTableau) -> String {
    let parts: Vec<String> = t
        .columns()
        .iter()
        .map(|c| format!("{}^{}", c.letter, c.height))
        .collect();
    format!("[{}]", parts.join(","))
}

// --- patience-sorting tableaux ---------------------------------------------

pub fn ps_value(s: &PsTableau) -> Value {
    let variant = match s.variant() {
        PsVariant::Increasing => "inc",
        PsVariant::Decreasing => "dec",
    };
    let cols: Vec<Value> = s
        .columns()
        .iter()
        .map(|c| Value::Array(c.iter().map(|&x| json!(x)).collect()))
        .collect();
    json!({ "variant": variant, "cols": cols })
}

pub fn ps_from_value(v: &Value) -> Result<PsTableau, CliError> {
    let variant = match v.get("variant").and_then(Value::as_str) {
        Some("inc") => PsVariant::Increasing,
        Some("dec") => PsVariant::Decreasing,
        _ => {
            return Err(bad(
                "recording tableau needs \"variant\" of \"inc\" or \"dec\"",
            ))
        }
    };
    let cols = v
        .get("cols")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("recording tableau needs a \"cols\" array"))?;
    let mut parsed = Vec::with_capacity(cols.len());
    for c in cols {
        let col = c
            .as_array()
            .ok_or_else(|| bad("each column must be an array of labels"))?;
        let mut labels = Vec::with_capacity(col.len());
        for x in col {
            labels.push(
                x.as_u64()
                    .ok_or_else(|| bad("labels must be positive integers"))?
                    as usize,
            );
        }
        parsed.push(labels);
    }
    PsTableau::new(variant, parsed).map_err(CliError::from)
}

pub fn ps_compact(s: &PsTableau) -> String {
    let tag = match s.variant() {
        PsVariant::Increasing => "inc",
        PsVariant::Decreasing => "dec",
    };
    let parts: Vec<String> = s
        .columns()
        .iter()
        .map(|c| {
            let xs: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            format!("({})", xs.join(","))
        })
        .collect();
    format!("{tag}[{}]", parts.join(","))
}

// --- trees with multiplicities ---------------------------------------------

pub fn bstm_value(t: &Bstm) -> Value {
    match t.root() {
        None => Value::Null,
        Some(n) => {
            let mut m = Map::new();
            m.insert("l".into(), json!(n.letter));
            m.insert("m".into(), json!(n.mult));
            m.insert("L".into(), bstm_value(&n.left));
            m.insert("R".into(), bstm_value(&n.right));
            Value::Object(m)
        }
    }
}

pub fn bstm_from_value(v: &Value) -> Result<Bstm, CliError> {
    fn build(v: &Value) -> Result<Bstm, CliError> {
        if v.is_null() {
            return Ok(Bstm::empty());
        }
        let l = v
            .get("l")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("tree node needs an integer letter \"l\""))?;
        let m = v
            .get("m")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("tree node needs an integer multiplicity \"m\""))?;
        let left = build(v.get("L").unwrap_or(&Value::Null))?;
        let right = build(v.get("R").unwrap_or(&Value::Null))?;
        Ok(Bstm::node(l, m as usize, left, right))
    }
    let t = build(v)?;
    t.validate()?;
    Ok(t)
}

pub fn bstm_compact(t: &Bstm) -> String {
    match t.root() {
        None => "-".into(),
        Some(n) => {
            if n.left.is_empty() && n.right.is_empty() {
                format!("{}^{}", n.letter, n.mult)
            } else {
                format!(
                    "{}^{}({},{})",
                    n.letter,
                    n.mult,
                    bstm_compact(&n.left),
                    bstm_compact(&n.right)
                )
            }
        }
    }
}

// --- trees over sets --------------------------------------------------------

pub fn bts_value(t: &Bts) -> Value {
    match t.root() {
        None => Value::Null,
        Some(n) => {
            let mut m = Map::new();
            m.insert(
                "s".into(),
                Value::Array(n.labels.iter().map(|&x| json!(x)).collect()),
            );
            m.insert("L".into(), bts_value(&n.left));
            m.insert("R".into(), bts_value(&n.right));
            Value::Object(m)
        }
    }
}

pub fn bts_from_value(v: &Value) -> Result<Bts, CliError> {
    fn build(v: &Value) -> Result<Bts, CliError> {
        if v.is_null() {
            return Ok(Bts::empty());
        }
        let labels = v
            .get("s")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("set-tree node needs a label array \"s\""))?;
        let mut set = Vec::with_capacity(labels.len());
        for x in labels {
            set.push(
                x.as_u64()
                    .ok_or_else(|| bad("labels must be positive integers"))?
                    as usize,
            );
        }
        let left = build(v.get("L").unwrap_or(&Value::Null))?;
        let right = build(v.get("R").unwrap_or(&Value::Null))?;
        Ok(Bts::node(set, left, right))
    }
    build(v)
}

pub fn bts_compact(t: &Bts) -> String {
    match t.root() {
        None => "-".into(),
        Some(n) => {
            let xs: Vec<String> = n.labels.iter().map(|x| x.to_string()).collect();
            if n.left.is_empty() && n.right.is_empty() {
                format!("{{{}}}", xs.join(","))
            } else {
                format!(
                    "{{{}}}({},{})",
                    xs.join(","),
                    bts_compact(&n.left),
                    bts_compact(&n.right)
                )
            }
        }
    }
}

// --- pairs, identities, posets ----------------------------------------------

pub fn pair_value(left: Value, right: Value) -> Value {
    let mut m = Map::new();
    m.insert("left".into(), left);
    m.insert("right".into(), right);
    Value::Object(m)
}

pub fn pair_parts(v: &Value) -> Result<(&Value, &Value), CliError> {
    match (v.get("left"), v.get("right")) {
        (Some(l), Some(r)) => Ok((l, r)),
        _ => Err(bad("pair needs \"left\" and \"right\"")),
    }
}

pub fn identity_value(id: &Identity) -> Value {
    let text = id.to_string();
    let (l, r) = text.split_once('=').expect("identities render with =");
    json!({ "lhs": l, "rhs": r })
}

pub fn identity_from_value(v: &Value) -> Result<Identity, CliError> {
    let l = v
        .get("lhs")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("identity needs string \"lhs\""))?;
    let r = v
        .get("rhs")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("identity needs string \"rhs\""))?;
    format!("{l}={r}").parse().map_err(CliError::from)
}

pub fn poset_from_value(v: &Value) -> Result<GenericPoset, CliError> {
    let n = v
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("poset needs an element count \"n\""))? as usize;
    let rels = v
        .get("relations")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("poset needs a \"relations\" array"))?;
    let mut parsed = Vec::with_capacity(rels.len());
    for r in rels {
        let pair = r
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| bad("each relation must be a two-element array"))?;
        let i = pair[0]
            .as_u64()
            .ok_or_else(|| bad("relation entries must be integers"))? as usize;
        let j = pair[1]
            .as_u64()
            .ok_or_else(|| bad("relation entries must be integers"))? as usize;
        parsed.push((i, j));
    }
    GenericPoset::new(n, parsed).map_err(CliError::from)
}

// --- top-level text round trips ----------------------------------------------

pub fn render(v: &Value) -> String {
    serde_json::to_string(v).expect("rendering cannot fail")
}

pub fn stalactic_from_text(text: &str) -> Result<StalacticTableau, CliError> {
    stalactic_from_value(&parse_json(text)?)
}

pub fn twin_st_from_text(text: &str) -> Result<(StalacticTableau, StalacticTableau), CliError> {
    let v = parse_json(text)?;
    let (l, r) = pair_parts(&v)?;
    Ok((stalactic_from_value(l)?, stalactic_from_value(r)?))
}

pub fn twin_bstm_from_text(text: &str) -> Result<(Bstm, Bstm), CliError> {
    let v = parse_json(text)?;
    let (l, r) = pair_parts(&v)?;
    Ok((bstm_from_value(l)?, bstm_from_value(r)?))
}

/// Dispatches a `twins` input on its JSON shape: a tableau or a tree.
pub enum TableauDoc {
    Stalactic(StalacticTableau),
    Tree(Bstm),
}

pub fn tableau_from_text(text: &str) -> Result<TableauDoc, CliError> {
    let v = parse_json(text)?;
    if v.get("cols").is_some() {
        Ok(TableauDoc::Stalactic(stalactic_from_value(&v)?))
    } else if v.is_null() || v.get("l").is_some() {
        Ok(TableauDoc::Tree(bstm_from_value(&v)?))
    } else {
        Err(bad(
            "expected a stalactic tableau or a tree with multiplicities",
        ))
    }
}

pub fn poset_from_text(text: &str) -> Result<GenericPoset, CliError> {
    poset_from_value(&parse_json(text)?)
}
