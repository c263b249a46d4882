//! Line-oriented text documents, one per graph representation.
//!
//! ```text
//! wig 1 interval          wig 1 circular-arc      wig 1 permutation
//! <n>                     <n> <C>                 <n>
//! <l> <r>      (n lines)  <s> <e>      (n lines)  <pi_1> ... <pi_n>
//!
//! wig 1 trapezoid         wig 1 cactus
//! <n>                     <n> <m>
//! <a> <b> <c> <d> (n)     <u> <v> <w>  (m lines)
//! ```
//!
//! ASCII only, single spaces, every line terminated by `\n`. Integers are
//! written without leading zeros or `+`, and parsing insists on that form, so
//! any accepted document re-serializes to the same bytes.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::cactus::CactusRep;
use crate::circular_arc::ArcRep;
use crate::error::{Error, Result};
use crate::interval::IntervalRep;
use crate::permutation::PermutationRep;
use crate::trapezoid::TrapezoidRep;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphClass {
    Interval,
    CircularArc,
    Permutation,
    Trapezoid,
    Cactus,
}

impl GraphClass {
    pub const ALL: [GraphClass; 5] = [
        GraphClass::Interval,
        GraphClass::CircularArc,
        GraphClass::Permutation,
        GraphClass::Trapezoid,
        GraphClass::Cactus,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GraphClass::Interval => "interval",
            GraphClass::CircularArc => "circular-arc",
            GraphClass::Permutation => "permutation",
            GraphClass::Trapezoid => "trapezoid",
            GraphClass::Cactus => "cactus",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GraphClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        GraphClass::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| {
                format!("unknown graph class '{s}' (expected interval, circular-arc, permutation, trapezoid or cactus)")
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputDocument {
    Interval(IntervalRep),
    CircularArc(ArcRep),
    Permutation(PermutationRep),
    Trapezoid(TrapezoidRep),
    Cactus(CactusRep),
}

impl InputDocument {
    pub fn class(&self) -> GraphClass {
        match self {
            InputDocument::Interval(_) => GraphClass::Interval,
            InputDocument::CircularArc(_) => GraphClass::CircularArc,
            InputDocument::Permutation(_) => GraphClass::Permutation,
            InputDocument::Trapezoid(_) => GraphClass::Trapezoid,
            InputDocument::Cactus(_) => GraphClass::Cactus,
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            InputDocument::Interval(r) => r.len(),
            InputDocument::CircularArc(r) => r.len(),
            InputDocument::Permutation(r) => r.len(),
            InputDocument::Trapezoid(r) => r.len(),
            InputDocument::Cactus(r) => r.n(),
        }
    }
}

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse {
        line,
        reason: reason.into(),
    }
}

/// Canonical decimal integer: no sign other than a leading `-`, no leading
/// zeros, no `-0`.
fn parse_int(tok: &str, line: usize) -> Result<i64> {
    let digits = tok.strip_prefix('-').unwrap_or(tok);
    let canonical = !digits.is_empty()
        && digits.bytes().all(|b| b.is_ascii_digit())
        && (digits == "0" || !digits.starts_with('0'))
        && tok != "-0";
    if !canonical {
        return Err(parse_err(line, format!("malformed integer '{tok}'")));
    }
    tok.parse::<i64>()
        .map_err(|_| parse_err(line, format!("integer '{tok}' out of range")))
}

fn parse_ints(text: &str, line: usize, expected: usize) -> Result<Vec<i64>> {
    let toks: Vec<&str> = if text.is_empty() {
        Vec::new()
    } else {
        text.split(' ').collect()
    };
    if toks.len() != expected {
        return Err(parse_err(
            line,
            format!("expected {expected} integers, found {}", toks.len()),
        ));
    }
    toks.into_iter().map(|t| parse_int(t, line)).collect()
}

fn non_negative(x: i64, line: usize, what: &str) -> Result<u64> {
    u64::try_from(x).map_err(|_| parse_err(line, format!("{what} must be non-negative, got {x}")))
}

fn count(x: i64, line: usize, what: &str) -> Result<usize> {
    match usize::try_from(x) {
        Ok(v) if v >= 1 => Ok(v),
        _ => Err(parse_err(
            line,
            format!("{what} must be at least 1, got {x}"),
        )),
    }
}

/// Strict parse of a document.
pub fn parse_document(bytes: &[u8]) -> Result<InputDocument> {
    let text = std::str::from_utf8(bytes).map_err(|_| parse_err(1, "document is not ASCII"))?;
    if !text.is_ascii() {
        return Err(parse_err(1, "document is not ASCII"));
    }
    if text.is_empty() {
        return Err(parse_err(1, "empty document"));
    }
    let Some(body) = text.strip_suffix('\n') else {
        let line = text.split('\n').count();
        return Err(parse_err(line, "missing final newline"));
    };
    let lines: Vec<&str> = body.split('\n').collect();
    if let Some(k) = lines.iter().position(|l| l.contains('\r')) {
        return Err(parse_err(k + 1, "carriage return in line"));
    }

    let header: Vec<&str> = lines[0].split(' ').collect();
    let class = match header.as_slice() {
        ["wig", version, class] => {
            if *version != FORMAT_VERSION.to_string() {
                return Err(parse_err(
                    1,
                    format!("unsupported format version '{version}'"),
                ));
            }
            class.parse::<GraphClass>().map_err(|e| parse_err(1, e))?
        }
        _ => return Err(parse_err(1, "header must be 'wig 1 <class>'")),
    };
    let line = |k: usize| -> Result<&str> {
        lines
            .get(k - 1)
            .copied()
            .ok_or_else(|| parse_err(k, "unexpected end of document"))
    };

    let (doc, used) = match class {
        GraphClass::Interval | GraphClass::Trapezoid => {
            let n = count(parse_ints(line(2)?, 2, 1)?[0], 2, "n")?;
            let width = if class == GraphClass::Interval { 2 } else { 4 };
            let mut recs = Vec::with_capacity(n);
            for k in 3..3 + n {
                let v = parse_ints(line(k)?, k, width)?;
                if v[0] > v[1] {
                    return Err(parse_err(k, "left end exceeds right end"));
                }
                if width == 4 && v[2] > v[3] {
                    return Err(parse_err(k, "left end exceeds right end on the lower line"));
                }
                recs.push(v);
            }
            let doc = if class == GraphClass::Interval {
                InputDocument::Interval(IntervalRep::new(
                    recs.iter().map(|v| (v[0], v[1])).collect(),
                )?)
            } else {
                InputDocument::Trapezoid(TrapezoidRep::new(
                    recs.iter().map(|v| (v[0], v[1], v[2], v[3])).collect(),
                )?)
            };
            (doc, 2 + n)
        }
        GraphClass::CircularArc => {
            let head = parse_ints(line(2)?, 2, 2)?;
            let n = count(head[0], 2, "n")?;
            let c = count(head[1], 2, "circumference")? as u64;
            let mut arcs = Vec::with_capacity(n);
            for k in 3..3 + n {
                let v = parse_ints(line(k)?, k, 2)?;
                let (s, e) = (
                    non_negative(v[0], k, "start")?,
                    non_negative(v[1], k, "end")?,
                );
                if s >= c || e >= c {
                    return Err(parse_err(k, format!("position outside [0, {c})")));
                }
                if s == e {
                    return Err(parse_err(k, "arc start equals end"));
                }
                arcs.push((s, e));
            }
            let rep = ArcRep::new(c, arcs).map_err(|e| parse_err(2, e.to_string()))?;
            (InputDocument::CircularArc(rep), 2 + n)
        }
        GraphClass::Permutation => {
            let n = count(parse_ints(line(2)?, 2, 1)?[0], 2, "n")?;
            let vals = parse_ints(line(3)?, 3, n)?;
            let pi = vals
                .into_iter()
                .map(|x| {
                    usize::try_from(x).map_err(|_| parse_err(3, format!("value {x} out of range")))
                })
                .collect::<Result<Vec<_>>>()?;
            let rep = PermutationRep::new(pi).map_err(|e| parse_err(3, e.to_string()))?;
            (InputDocument::Permutation(rep), 3)
        }
        GraphClass::Cactus => {
            let head = parse_ints(line(2)?, 2, 2)?;
            let n = count(head[0], 2, "n")?;
            let m = usize::try_from(head[1])
                .map_err(|_| parse_err(2, format!("m must be non-negative, got {}", head[1])))?;
            let mut edges = Vec::with_capacity(m);
            for k in 3..3 + m {
                let v = parse_ints(line(k)?, k, 3)?;
                let (u, w_) = (v[0], v[1]);
                for id in [u, w_] {
                    if id < 1 || id as u64 > n as u64 {
                        return Err(parse_err(k, format!("vertex {id} outside 1..={n}")));
                    }
                }
                if v[2] < 1 {
                    return Err(parse_err(
                        k,
                        format!("weight must be at least 1, got {}", v[2]),
                    ));
                }
                edges.push((u as usize, w_ as usize, v[2] as u64));
            }
            let rep = CactusRep::new(n, edges).map_err(|e| {
                let k = match &e {
                    Error::InvalidEdge { u, v, .. } => 3 + last_edge_line(&lines, *u, *v),
                    _ => 2,
                };
                parse_err(k, e.to_string())
            })?;
            (InputDocument::Cactus(rep), 2 + m)
        }
    };
    if lines.len() > used {
        return Err(parse_err(used + 1, "trailing data after the last record"));
    }
    Ok(doc)
}

/// Zero-based index of the last edge record naming `u` and `v` (the duplicate or self-loop).
fn last_edge_line(lines: &[&str], u: usize, v: usize) -> usize {
    let want = [format!("{u} {v} "), format!("{v} {u} ")];
    lines
        .iter()
        .skip(2)
        .rposition(|l| want.iter().any(|p| l.starts_with(p.as_str())))
        .unwrap_or(0)
}

/// Canonical bytes of a document.
pub fn serialize_document(doc: &InputDocument) -> String {
    let mut out = format!("wig {FORMAT_VERSION} {}\n", doc.class());
    // Writing to a String cannot fail.
    let w = &mut out;
    match doc {
        InputDocument::Interval(r) => {
            let _ = writeln!(w, "{}", r.len());
            for &(l, rr) in r.intervals() {
                let _ = writeln!(w, "{l} {rr}");
            }
        }
        InputDocument::CircularArc(r) => {
            let _ = writeln!(w, "{} {}", r.len(), r.circumference());
            for &(s, e) in r.arcs() {
                let _ = writeln!(w, "{s} {e}");
            }
        }
        InputDocument::Permutation(r) => {
            let _ = writeln!(w, "{}", r.len());
            let vals: Vec<String> = r.pi().iter().map(|x| x.to_string()).collect();
            let _ = writeln!(w, "{}", vals.join(" "));
        }
        InputDocument::Trapezoid(r) => {
            let _ = writeln!(w, "{}", r.len());
            for &(a, b, c, d) in r.traps() {
                let _ = writeln!(w, "{a} {b} {c} {d}");
            }
        }
        InputDocument::Cactus(r) => {
            let _ = writeln!(w, "{} {}", r.n(), r.edges().len());
            for &(u, v, wt) in r.edges() {
                let _ = writeln!(w, "{u} {v} {wt}");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Result<InputDocument> {
        parse_document(s.as_bytes())
    }

    fn line_of(e: Error) -> usize {
        match e {
            Error::Parse { line, .. } => line,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn permutation_document() {
        let doc = parse("wig 1 permutation\n3\n3 1 2\n").unwrap();
        assert_eq!(
            doc,
            InputDocument::Permutation(PermutationRep::new(vec![3, 1, 2]).unwrap())
        );
        assert_eq!(serialize_document(&doc), "wig 1 permutation\n3\n3 1 2\n");
    }

    #[test]
    fn interval_document() {
        let doc = parse("wig 1 interval\n2\n1 3\n3 5\n").unwrap();
        assert_eq!(
            doc,
            InputDocument::Interval(IntervalRep::new(vec![(1, 3), (3, 5)]).unwrap())
        );
        assert_eq!(
            line_of(parse("wig 1 interval\n2\n5 3\n1 2\n").unwrap_err()),
            3
        );
    }

    #[test]
    fn other_classes() {
        for text in [
            "wig 1 circular-arc\n2 8\n6 1\n0 2\n",
            "wig 1 trapezoid\n2\n1 2 -1 2\n3 4 2 3\n",
            "wig 1 cactus\n3 3\n1 2 1\n2 3 2\n3 1 3\n",
            "wig 1 cactus\n1 0\n",
        ] {
            let doc = parse(text).unwrap();
            assert_eq!(serialize_document(&doc), text);
        }
    }

    #[test]
    fn strictness() {
        let bad = [
            ("", 1),
            ("wig 1 interval\n1\n1 3", 3),
            ("wig 2 interval\n1\n1 3\n", 1),
            ("wig 1 tree\n1\n1 3\n", 1),
            ("wig 1 interval\n1\n1  3\n", 3),
            ("wig 1 interval\n1\n01 3\n", 3),
            ("wig 1 interval\n1\n+1 3\n", 3),
            ("wig 1 interval\n1\n-0 3\n", 3),
            ("wig 1 interval\n1\n1 3 \n", 3),
            ("wig 1 interval\n1\n1 3\r\n", 3),
            ("wig 1 interval\n1\n1 3\n\n", 4),
            ("wig 1 interval\n2\n1 3\n", 4),
            ("wig 1 interval\n0\n", 2),
            ("wig 1 permutation\n3\n3 1 1\n", 3),
            ("wig 1 permutation\n3\n3 1\n", 3),
            ("wig 1 circular-arc\n1 8\n3 3\n", 3),
            ("wig 1 circular-arc\n1 8\n3 8\n", 3),
            ("wig 1 trapezoid\n1\n1 2 3 2\n", 3),
            ("wig 1 cactus\n2 1\n1 3 1\n", 3),
            ("wig 1 cactus\n2 1\n1 2 0\n", 3),
            ("wig 1 cactus\n2 2\n1 2 1\n2 1 4\n", 4),
            ("wig 1 cactus\n2 1\n1 1 1\n", 3),
            ("wig 1 interval\n1\n1 99999999999999999999\n", 3),
        ];
        for (text, line) in bad {
            let err = parse(text).expect_err(text);
            assert_eq!(line_of(err), line, "{text:?}");
        }
    }

    #[test]
    fn class_names() {
        for c in GraphClass::ALL {
            assert_eq!(c.as_str().parse::<GraphClass>(), Ok(c));
        }
        assert!("arc".parse::<GraphClass>().is_err());
    }
}
