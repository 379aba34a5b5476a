//! Line tokenizer shared by the text formats.
//!
//! Lines are split on spaces and tabs; `#` starts a comment; blank lines are
//! skipped. Positions are 1-based.

use crate::error::Error;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Token<'a> {
    pub text: &'a str,
    pub line: usize,
    pub column: usize,
}

impl Token<'_> {
    pub fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(self.line, self.column, message)
    }

    pub fn parse_usize(&self) -> Result<usize, Error> {
        if self.text.is_empty() || !self.text.bytes().all(|b| b.is_ascii_digit()) {
            return Err(self.error(format!("expected a non-negative integer, found `{}`", self.text)));
        }
        self.text
            .parse()
            .map_err(|_| self.error(format!("`{}` is out of range", self.text)))
    }
}

/// Non-empty lines as token lists.
pub(crate) fn tokenized_lines(input: &str) -> impl Iterator<Item = Vec<Token<'_>>> {
    input.split('\n').enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
            let sep = ch == ' ' || ch == '\t' || ch == '\r';
            match (start, sep) {
                (None, false) => start = Some(pos),
                (Some(s), true) => {
                    tokens.push(Token {
                        text: &content[s..pos],
                        line: i + 1,
                        column: content[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        (!tokens.is_empty()).then_some(tokens)
    })
}

/// Position just past the last token, for "missing argument" errors.
pub(crate) fn end_of(tokens: &[Token<'_>]) -> (usize, usize) {
    let last = tokens.last().expect("non-empty line");
    (last.line, last.column + last.text.chars().count())
}

/// Reads the four `m_A m_B n_A n_B` header lines. Returns the index of the
/// first line after the header.
pub(crate) fn parse_header(lines: &[Vec<Token<'_>>]) -> Result<([usize; 4], usize), Error> {
    const KEYS: [&str; 4] = ["m_A", "m_B", "n_A", "n_B"];
    let mut values = [None; 4];
    let mut consumed = 0;
    for tokens in lines {
        let key = tokens[0];
        let Some(slot) = KEYS.iter().position(|&k| k == key.text) else {
            break;
        };
        if values[slot].is_some() {
            return Err(key.error(format!("`{}` given twice", key.text)));
        }
        if tokens.len() != 2 {
            let (line, column) = end_of(tokens);
            return Err(Error::parse(line, column, format!("`{}` takes exactly one value", key.text)));
        }
        let v = tokens[1].parse_usize()?;
        if v == 0 {
            return Err(tokens[1].error(format!("`{}` must be at least 1", key.text)));
        }
        values[slot] = Some(v);
        consumed += 1;
    }
    let mut out = [0; 4];
    for (i, v) in values.iter().enumerate() {
        match v {
            Some(v) => out[i] = *v,
            None => {
                let (line, column) = lines.get(consumed).map_or((1, 1), |t| (t[0].line, t[0].column));
                return Err(Error::parse(line, column, format!("missing `{}` before this point", KEYS[i])));
            }
        }
    }
    Ok((out, consumed))
}
