//! Sequence files: one field element per token, tokens separated by
//! whitespace or commas, `#` starts a comment. Over GF(2) a token may also
//! be a bitstring (`1101`) or hex with a `0x` prefix; in both cases the
//! first (most significant) bit is `s_0`.

use std::fmt;

use seqideal::{Field, FieldSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn tokens(text: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    for (li, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let mut start: Option<(usize, usize)> = None;
        let mut col = 0;
        for (bi, ch) in line.char_indices() {
            col += 1;
            let sep = ch.is_whitespace() || ch == ',';
            match (sep, start) {
                (true, Some((b, c))) => {
                    out.push(Token { text: &line[b..bi], line: li + 1, column: c });
                    start = None;
                }
                (false, None) => start = Some((bi, col)),
                _ => {}
            }
        }
        if let Some((b, c)) = start {
            out.push(Token { text: &line[b..], line: li + 1, column: c });
        }
    }
    out
}

fn expand_bits(tok: &Token<'_>) -> Result<Option<Vec<bool>>, ParseError> {
    if let Some(hex) = tok.text.strip_prefix("0x").or_else(|| tok.text.strip_prefix("0X")) {
        if hex.is_empty() {
            return Err(ParseError {
                line: tok.line,
                column: tok.column,
                message: "empty hex literal".into(),
            });
        }
        let mut bits = Vec::with_capacity(4 * hex.len());
        for (i, ch) in hex.chars().enumerate() {
            let v = ch.to_digit(16).ok_or_else(|| ParseError {
                line: tok.line,
                column: tok.column + 2 + i,
                message: format!("invalid hex digit {ch:?}"),
            })?;
            bits.extend((0..4).rev().map(|b| v >> b & 1 == 1));
        }
        return Ok(Some(bits));
    }
    if tok.text.len() > 1 && tok.text.bytes().all(|b| b == b'0' || b == b'1') {
        return Ok(Some(tok.text.bytes().map(|b| b == b'1').collect()));
    }
    Ok(None)
}

/// Parses a sequence over `field`. Empty input is an error.
pub fn parse_sequence<F: Field>(field: &F, text: &str) -> Result<Vec<F::Elem>, ParseError> {
    let binary = field.spec() == FieldSpec::Gf2;
    let mut out = Vec::new();
    for tok in tokens(text) {
        if binary {
            if let Some(bits) = expand_bits(&tok)? {
                out.extend(bits.into_iter().map(|b| field.from_i64(b as i64)));
                continue;
            }
        }
        let v = field.parse(tok.text).map_err(|e| ParseError {
            line: tok.line,
            column: tok.column,
            message: e.to_string(),
        })?;
        out.push(v);
    }
    if out.is_empty() {
        return Err(ParseError { line: 1, column: 1, message: "no sequence terms".into() });
    }
    Ok(out)
}
