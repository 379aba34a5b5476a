//! Dense integer matrices and their plain text form.
//!
//! One row per line, entries as decimal `i64` separated by spaces. `#` starts a
//! comment and blank lines are ignored; every row must have the same length.
//! The empty string is the empty matrix.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::text::tokenized_lines;

/// Upper limit on parsed entries, matching the table cap for games.
const MAX_ENTRIES: usize = crate::game::MAX_TABLE_ENTRIES;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(i) = rows.iter().position(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row {i} has {} entries, expected {cols}",
                rows[i].len()
            )));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[i64]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    /// Appends a column of ones.
    pub fn homogenized(&self) -> IntMatrix {
        let mut rows: Vec<Vec<i64>> = self.iter_rows().map(<[i64]>::to_vec).collect();
        for r in &mut rows {
            r.push(1);
        }
        let cols = self.cols + 1;
        IntMatrix {
            rows: self.rows,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }
}

pub fn write_int_matrix(m: &IntMatrix) -> String {
    let mut out = String::new();
    for row in m.iter_rows() {
        for (j, v) in row.iter().enumerate() {
            if j > 0 {
                out.push(' ');
            }
            write!(out, "{v}").expect("writing to a String");
        }
        out.push('\n');
    }
    out
}

pub fn parse_int_matrix(input: &str) -> Result<IntMatrix> {
    let mut data = Vec::new();
    let mut rows = 0;
    let mut cols = None;
    for tokens in tokenized_lines(input) {
        match cols {
            None => cols = Some(tokens.len()),
            Some(c) if c != tokens.len() => {
                return Err(tokens[0].error(format!("row has {} entries, expected {c}", tokens.len())));
            }
            _ => {}
        }
        if data.len() + tokens.len() > MAX_ENTRIES {
            return Err(tokens[0].error("matrix too large"));
        }
        for tok in &tokens {
            data.push(parse_i64(tok.text).ok_or_else(|| tok.error(format!("expected an integer, found `{}`", tok.text)))?);
        }
        rows += 1;
    }
    Ok(IntMatrix {
        rows,
        cols: cols.unwrap_or(0),
        data,
    })
}

fn parse_i64(text: &str) -> Option<i64> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_and_writes() {
        let m = parse_int_matrix("# audit\n1 0 -2\n\n3  4\t5 # tail\n").unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 3));
        assert_eq!(m.get(0, 2), -2);
        assert_eq!(write_int_matrix(&m), "1 0 -2\n3 4 5\n");
        assert_eq!(parse_int_matrix("").unwrap(), IntMatrix::default());
    }

    #[test]
    fn errors() {
        let pos = |text: &str| match parse_int_matrix(text) {
            Err(Error::Parse { line, column, .. }) => (line, column),
            other => panic!("{other:?}"),
        };
        assert_eq!(pos("1 2\n3\n"), (2, 1));
        assert_eq!(pos("1 +2\n"), (1, 3));
        assert_eq!(pos("1 2.5\n"), (1, 3));
        assert_eq!(pos("99999999999999999999\n"), (1, 1));
        assert_eq!(pos("-\n"), (1, 1));
        assert!(IntMatrix::from_rows(vec![vec![1, 2], vec![3]]).is_err());
    }

    #[test]
    fn homogenized_appends_ones() {
        let m = IntMatrix::from_rows(vec![vec![2, 3], vec![0, 0]]).unwrap().homogenized();
        assert_eq!(m.row(1), &[0, 0, 1]);
    }

    proptest! {
        #[test]
        fn text_round_trip(rows in proptest::collection::vec(proptest::collection::vec(any::<i64>(), 3), 0..6)) {
            let m = IntMatrix::from_rows(rows).unwrap();
            let text = write_int_matrix(&m);
            let back = parse_int_matrix(&text).unwrap();
            prop_assert_eq!(back.rows(), m.rows());
            if m.rows() > 0 {
                prop_assert_eq!(&back, &m);
            }
            prop_assert_eq!(write_int_matrix(&back), text);
        }
    }
}
