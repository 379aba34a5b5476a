//! Text format for games.
//!
//! ```text
//! # Comments run from `#` to the end of the line.
//! m_A 2
//! m_B 2
//! n_A 2
//! n_B 2
//! win 0 0 0 0      # x y a b
//! win 0 0 1 1
//! ```
//!
//! The four cardinalities come first, once each, in any order. Every other
//! line is `win x y a b`; quadruples not listed lose, and listing one twice is
//! an error. [`write_game`] emits the canonical form: header in the order
//! above, `win` lines sorted by `(x, y, a, b)`, single spaces, no comments.

use std::collections::HashSet;
use std::fmt::Write;

use super::{GameRelation, Scenario};
use crate::error::{Error, Result};
use crate::text::{end_of, parse_header, tokenized_lines};

pub fn parse_game(input: &str) -> Result<GameRelation> {
    let lines: Vec<_> = tokenized_lines(input).collect();
    let ([m_a, m_b, n_a, n_b], start) = parse_header(&lines)?;
    let scenario = Scenario::new(m_a, m_b, n_a, n_b).map_err(|e| {
        let first = &lines[0][0];
        first.error(e.to_string())
    })?;
    let mut game = GameRelation::empty(scenario);
    let mut seen = HashSet::new();
    for tokens in &lines[start..] {
        let key = tokens[0];
        if key.text != "win" {
            return Err(key.error(format!("expected `win`, found `{}`", key.text)));
        }
        if tokens.len() != 5 {
            let (line, column) = if tokens.len() < 5 { end_of(tokens) } else { (tokens[5].line, tokens[5].column) };
            return Err(Error::parse(line, column, "`win` takes exactly four values: x y a b"));
        }
        let mut q = [0; 4];
        let limits = [m_a, m_b, n_a, n_b];
        for (i, (tok, limit)) in tokens[1..].iter().zip(limits).enumerate() {
            q[i] = tok.parse_usize()?;
            if q[i] >= limit {
                return Err(tok.error(format!(
                    "{} = {} out of range 0..{limit}",
                    ["x", "y", "a", "b"][i],
                    q[i]
                )));
            }
        }
        if !seen.insert(q) {
            return Err(key.error(format!("duplicate quadruple {} {} {} {}", q[0], q[1], q[2], q[3])));
        }
        game.set(q[0], q[1], q[2], q[3], true)?;
    }
    Ok(game)
}

pub fn write_game(game: &GameRelation) -> String {
    let s = game.scenario();
    let mut out = format!("m_A {}\nm_B {}\nn_A {}\nn_B {}\n", s.m_a, s.m_b, s.n_a, s.n_b);
    for (x, y, a, b) in game.winning_quadruples() {
        writeln!(out, "win {x} {y} {a} {b}").expect("writing to a String");
    }
    out
}
