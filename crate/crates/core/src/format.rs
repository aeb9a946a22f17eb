//! Line-oriented algebra files and congruence literals.
//!
//! ```text
//! # comment
//! algebra Z2
//! size 2
//! op plus 2
//! 0 1
//! 1 0
//! op zero 0
//! 0
//! ```
//!
//! Tables are row-major with the last argument varying fastest.

use std::fmt::Write as _;

use crate::algebra::{make_algebra, FiniteAlgebra, Signature};
use crate::congruence::Congruence;
use crate::error::Error;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("{0}")]
    Syntax(String),
    #[error(transparent)]
    Algebra(#[from] Error),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError {
        line,
        kind: ParseErrorKind::Syntax(msg.into()),
    }
}

struct OpDraft {
    name: String,
    arity: usize,
    line: usize,
    entries: Vec<usize>,
}

struct Draft {
    name: String,
    line: usize,
    size: Option<usize>,
    ops: Vec<OpDraft>,
}

impl Draft {
    fn finish(self) -> Result<(String, FiniteAlgebra), ParseError> {
        let size = self
            .size
            .ok_or_else(|| syntax(self.line, format!("algebra `{}` has no size", self.name)))?;
        for op in &self.ops {
            let expected = size.checked_pow(op.arity as u32).unwrap_or(usize::MAX);
            if op.entries.len() != expected {
                return Err(ParseError {
                    line: op.line,
                    kind: Error::WrongTableLength {
                        symbol: op.name.clone(),
                        expected,
                        found: op.entries.len(),
                    }
                    .into(),
                });
            }
        }
        let sig =
            Signature::new(self.ops.iter().map(|o| (o.name.clone(), o.arity))).map_err(|e| {
                ParseError {
                    line: self.line,
                    kind: e.into(),
                }
            })?;
        let line_of = |symbol: &str| {
            self.ops
                .iter()
                .find(|o| o.name == symbol)
                .map_or(self.line, |o| o.line)
        };
        let tables = self.ops.iter().map(|o| o.entries.clone()).collect();
        let a = make_algebra(sig, size, tables).map_err(|e| {
            let line = match &e {
                Error::OutOfRangeEntry { symbol, .. }
                | Error::WrongTableLength { symbol, .. }
                | Error::EmptyWithConstant { symbol } => line_of(symbol),
                _ => self.line,
            };
            ParseError {
                line,
                kind: e.into(),
            }
        })?;
        Ok((self.name, a))
    }
}

fn number(tok: &str, line: usize) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| {
        syntax(
            line,
            format!("expected a non-negative integer, found `{tok}`"),
        )
    })
}

/// Parses every algebra in `text`, in file order.
pub fn parse_algebra_file(text: &str) -> Result<Vec<(String, FiniteAlgebra)>, ParseError> {
    let mut out: Vec<(String, FiniteAlgebra)> = Vec::new();
    let mut cur: Option<Draft> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        let Some(&head) = toks.first() else { continue };
        match head {
            "algebra" => {
                if toks.len() != 2 {
                    return Err(syntax(line, "expected `algebra <name>`"));
                }
                if let Some(d) = cur.take() {
                    out.push(d.finish()?);
                }
                if out.iter().any(|(n, _)| n == toks[1]) {
                    return Err(syntax(
                        line,
                        format!("duplicate algebra name `{}`", toks[1]),
                    ));
                }
                cur = Some(Draft {
                    name: toks[1].to_string(),
                    line,
                    size: None,
                    ops: Vec::new(),
                });
            }
            "size" => {
                let d = cur
                    .as_mut()
                    .ok_or_else(|| syntax(line, "`size` before `algebra`"))?;
                if toks.len() != 2 || d.size.is_some() || !d.ops.is_empty() {
                    return Err(syntax(
                        line,
                        "expected one `size <n>` before the operations",
                    ));
                }
                d.size = Some(number(toks[1], line)?);
            }
            "op" => {
                let d = cur
                    .as_mut()
                    .ok_or_else(|| syntax(line, "`op` before `algebra`"))?;
                if toks.len() != 3 {
                    return Err(syntax(line, "expected `op <name> <arity>`"));
                }
                if d.size.is_none() {
                    return Err(syntax(line, "`op` before `size`"));
                }
                d.ops.push(OpDraft {
                    name: toks[1].to_string(),
                    arity: number(toks[2], line)?,
                    line,
                    entries: Vec::new(),
                });
            }
            _ => {
                let op = cur
                    .as_mut()
                    .and_then(|d| d.ops.last_mut())
                    .ok_or_else(|| syntax(line, format!("unexpected `{head}`")))?;
                for t in toks {
                    op.entries.push(number(t, line)?);
                }
            }
        }
    }
    if let Some(d) = cur.take() {
        out.push(d.finish()?);
    }
    Ok(out)
}

/// Writes algebras in the format read by [`parse_algebra_file`], one table
/// row of `size` entries per line, a blank line between algebras.
pub fn serialize_algebras<'a>(
    algebras: impl IntoIterator<Item = (&'a str, &'a FiniteAlgebra)>,
) -> String {
    let mut s = String::new();
    for (k, (name, a)) in algebras.into_iter().enumerate() {
        if k > 0 {
            s.push('\n');
        }
        let _ = writeln!(s, "algebra {name}");
        let _ = writeln!(s, "size {}", a.size());
        for (i, sym) in a.signature().symbols().iter().enumerate() {
            let _ = writeln!(s, "op {} {}", sym.name, sym.arity);
            let table = a.table(i);
            let width = if sym.arity == 0 { 1 } else { a.size().max(1) };
            for row in table.chunks(width) {
                let row: Vec<String> = row.iter().map(u32::to_string).collect();
                let _ = writeln!(s, "{}", row.join(" "));
            }
        }
    }
    s
}

/// Parses `{0,2},{1,3}`, `top` or `bot` on a carrier of size `n`.
/// Elements not mentioned are singletons.
pub fn parse_congruence(text: &str, n: usize) -> Result<Congruence, ParseError> {
    let t = text.trim();
    match t {
        "top" => return Ok(Congruence::top(n)),
        "bot" | "bottom" => return Ok(Congruence::bottom(n)),
        _ => {}
    }
    let bad = || syntax(1, format!("malformed congruence literal `{t}`"));
    let mut blocks = Vec::new();
    let mut rest = t;
    while !rest.is_empty() {
        rest = rest.strip_prefix('{').ok_or_else(bad)?;
        let close = rest.find('}').ok_or_else(bad)?;
        let inner = &rest[..close];
        let block = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|x| number(x.trim(), 1))
                .collect::<Result<Vec<usize>, _>>()?
        };
        if block.windows(2).any(|w| w[0] >= w[1]) {
            return Err(syntax(
                1,
                format!("block `{{{inner}}}` is not strictly ascending"),
            ));
        }
        if !block.is_empty() {
            blocks.push(block);
        }
        rest = rest[close + 1..].trim_start();
        if let Some(r) = rest.strip_prefix(',') {
            rest = r.trim_start();
            if rest.is_empty() {
                return Err(bad());
            }
        } else if !rest.is_empty() {
            return Err(bad());
        }
    }
    Congruence::from_blocks(n, &blocks).map_err(|e| ParseError {
        line: 1,
        kind: e.into(),
    })
}
