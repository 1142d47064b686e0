//! Text formats: exact decimal CSV for intervals, boxes and permutations,
//! and JSON for posets and witness forests.

use std::collections::HashMap;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poset::{inverse_permutation, Arity, AxisBox, HeapForest, Interval, Poset};
use crate::Rational;

/// Parses a decimal such as `-12.375` or `4` into an exact rational.
pub fn parse_decimal(text: &str) -> std::result::Result<Rational, String> {
    let t = text.trim();
    let (negative, digits) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    let valid = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if (int_part.is_empty() && frac_part.is_empty()) || !valid(int_part) || !valid(frac_part) {
        return Err(format!("`{t}` is not a decimal number"));
    }
    let too_big = || format!("`{t}` exceeds the supported precision");
    let scale = 10i64.checked_pow(frac_part.len() as u32).ok_or_else(too_big)?;
    let mut numer: i64 = 0;
    for b in int_part.bytes().chain(frac_part.bytes()) {
        numer = numer
            .checked_mul(10)
            .and_then(|v| v.checked_add((b - b'0') as i64))
            .ok_or_else(too_big)?;
    }
    if negative {
        numer = -numer;
    }
    Ok(Rational::new(numer, scale))
}

/// Non-empty, non-comment lines with their 1-based line numbers.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_fields(line_no: usize, line: &str, expected: usize) -> Result<Vec<Rational>> {
    let fields: Vec<&str> = line.split(',').collect();
    if fields.len() != expected {
        return Err(Error::Parse {
            line: line_no,
            msg: format!("expected {expected} fields, found {}", fields.len()),
        });
    }
    fields
        .iter()
        .map(|f| parse_decimal(f).map_err(|msg| Error::Parse { line: line_no, msg }))
        .collect()
}

/// `left,right` per line.
pub fn parse_interval_csv(text: &str) -> Result<Vec<Interval<Rational>>> {
    data_lines(text)
        .map(|(line, l)| {
            let v = parse_fields(line, l, 2)?;
            Interval::new(v[0], v[1]).map_err(|_| Error::Parse {
                line,
                msg: format!("left endpoint {} exceeds right endpoint {}", v[0], v[1]),
            })
        })
        .collect()
}

/// `lx,ly,ux,uy` per line.
pub fn parse_box_csv(text: &str) -> Result<Vec<AxisBox<Rational>>> {
    data_lines(text)
        .map(|(line, l)| {
            let v = parse_fields(line, l, 4)?;
            AxisBox::from_coords(v[0], v[1], v[2], v[3]).map_err(|_| Error::Parse {
                line,
                msg: "lower corner exceeds upper corner".into(),
            })
        })
        .collect()
}

/// A permutation of `0..n`, values separated by commas, whitespace or newlines.
pub fn parse_permutation(text: &str) -> Result<Vec<usize>> {
    let mut perm = Vec::new();
    for (line, l) in data_lines(text) {
        for tok in l
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
        {
            let v = tok.parse::<usize>().map_err(|_| Error::Parse {
                line,
                msg: format!("`{tok}` is not an index"),
            })?;
            perm.push(v);
        }
    }
    inverse_permutation(&perm)?;
    Ok(perm)
}

#[derive(Debug, Serialize, Deserialize)]
struct PosetFile {
    n: usize,
    relations: Vec<(usize, usize)>,
}

/// `{"n": N, "relations": [[i, j], ...]}`; the closure is taken on load.
pub fn parse_poset_json(text: &str) -> Result<Poset> {
    let file: PosetFile = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    Poset::from_relations(file.n, &file.relations)
}

/// Writes every related pair of the (closed) order.
pub fn poset_to_json(poset: &Poset) -> String {
    let file = PosetFile {
        n: poset.len(),
        relations: poset.relations().collect(),
    };
    serde_json::to_string(&file).expect("poset serializes")
}

struct ParentMap<'a>(&'a HeapForest);

impl Serialize for ParentMap<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<(usize, usize)> = self
            .0
            .parents()
            .iter()
            .enumerate()
            .filter_map(|(c, p)| p.map(|p| (c, p)))
            .collect();
        let mut map = s.serialize_map(Some(entries.len()))?;
        for (child, parent) in entries {
            map.serialize_entry(&child.to_string(), &parent)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct ForestOut<'a> {
    k: usize,
    roots: &'a [usize],
    parent: ParentMap<'a>,
}

#[derive(Deserialize)]
struct ForestIn {
    k: usize,
    roots: Vec<usize>,
    parent: HashMap<String, usize>,
}

/// `{"k": K, "roots": [...], "parent": {"child": parent, ...}}` with
/// children in ascending id order.
pub fn forest_to_json(forest: &HeapForest, k: Arity) -> String {
    let out = ForestOut {
        k: k.get(),
        roots: forest.roots(),
        parent: ParentMap(forest),
    };
    serde_json::to_string_pretty(&out).expect("forest serializes")
}

/// Reads a witness over `n` elements. The listed roots must be exactly
/// the elements without a parent.
pub fn parse_forest_json(text: &str, n: usize) -> Result<(HeapForest, Arity)> {
    let file: ForestIn = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    let k = Arity::new(file.k)?;
    let mut parent = vec![None; n];
    for (child, p) in &file.parent {
        let c: usize = child
            .parse()
            .map_err(|_| Error::Json(format!("`{child}` is not an element id")))?;
        if c >= n {
            return Err(Error::IdOutOfRange { id: c, n });
        }
        if *p >= n {
            return Err(Error::IdOutOfRange { id: *p, n });
        }
        parent[c] = Some(*p);
    }
    let forest = HeapForest::from_parents(parent);
    let mut roots = file.roots;
    roots.sort_unstable();
    if roots != forest.roots() {
        return Err(Error::Json("root list disagrees with the parent map".into()));
    }
    Ok((forest, k))
}
