//! Text format for Bell expressions.
//!
//! ```text
//! m_A 2
//! m_B 2
//! n_A 2
//! n_B 2
//! bound 3
//! coeff 0 0 0 0 1      # x y a b value
//! coeff 1 1 0 1 -1/2
//! ```
//!
//! The header is as for games. `bound` appears exactly once; each `coeff`
//! line sets one coefficient, and unlisted coefficients are zero. Values are
//! integers or fractions `p/q`. Setting the same quadruple twice is an error.
//! [`write_expression`] emits the header, the bound, and the non-zero
//! coefficients in `(x, y, a, b)` order.

use std::collections::HashSet;
use std::fmt::Write;

use super::expression::BellExpression;
use crate::error::{Error, Result};
use crate::game::Scenario;
use crate::rational::{parse_rational, to_compact_string, Rational};
use crate::text::{end_of, parse_header, tokenized_lines, Token};

/// Largest coefficient table the parser allocates.
pub const MAX_EXPRESSION_ENTRIES: usize = 1 << 20;

pub fn parse_expression(input: &str) -> Result<BellExpression> {
    let lines: Vec<_> = tokenized_lines(input).collect();
    let ([m_a, m_b, n_a, n_b], start) = parse_header(&lines)?;
    let scenario = Scenario::new(m_a, m_b, n_a, n_b).map_err(|e| lines[0][0].error(e.to_string()))?;
    if scenario.table_len() > MAX_EXPRESSION_ENTRIES {
        return Err(lines[0][0].error(format!(
            "{} coefficients exceed the limit of {MAX_EXPRESSION_ENTRIES}",
            scenario.table_len()
        )));
    }
    let mut expr = BellExpression::zero(scenario, Rational::from_integer(0));
    let mut bound_seen = false;
    let mut seen = HashSet::new();
    for tokens in &lines[start..] {
        let key = tokens[0];
        match key.text {
            "bound" => {
                if bound_seen {
                    return Err(key.error("`bound` given twice"));
                }
                expect_len(tokens, 2, "`bound` takes exactly one value")?;
                expr = expr.with_bound(rational(&tokens[1])?);
                bound_seen = true;
            }
            "coeff" => {
                expect_len(tokens, 6, "`coeff` takes five values: x y a b value")?;
                let mut q = [0; 4];
                let limits = [m_a, m_b, n_a, n_b];
                for (i, (tok, limit)) in tokens[1..5].iter().zip(limits).enumerate() {
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
                expr.set_coefficient(q[0], q[1], q[2], q[3], rational(&tokens[5])?)?;
            }
            other => return Err(key.error(format!("expected `bound` or `coeff`, found `{other}`"))),
        }
    }
    if !bound_seen {
        let (line, column) = lines.last().map_or((1, 1), |t| end_of(t));
        return Err(Error::parse(line, column, "missing `bound`"));
    }
    Ok(expr)
}

fn expect_len(tokens: &[Token<'_>], len: usize, message: &str) -> Result<()> {
    if tokens.len() == len {
        return Ok(());
    }
    let (line, column) = if tokens.len() < len {
        end_of(tokens)
    } else {
        (tokens[len].line, tokens[len].column)
    };
    Err(Error::parse(line, column, message))
}

fn rational(tok: &Token<'_>) -> Result<Rational> {
    parse_rational(tok.text).map_err(|m| tok.error(m))
}

pub fn write_expression(expr: &BellExpression) -> String {
    let s = expr.scenario();
    let mut out = format!(
        "m_A {}\nm_B {}\nn_A {}\nn_B {}\nbound {}\n",
        s.m_a,
        s.m_b,
        s.n_a,
        s.n_b,
        to_compact_string(&expr.local_bound())
    );
    for ((x, y, a, b), c) in expr.nonzero() {
        writeln!(out, "coeff {x} {y} {a} {b} {}", to_compact_string(&c)).expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bell::{magic_square_inequality, MagicSquareForm};
    use proptest::prelude::*;

    #[test]
    fn magic_square_round_trip() {
        for form in [MagicSquareForm::Full8, MagicSquareForm::Restricted4] {
            let e = magic_square_inequality(form);
            let text = write_expression(&e);
            assert_eq!(parse_expression(&text).unwrap(), e);
        }
    }

    #[test]
    fn canonicalizes() {
        let text = "n_B 2\nn_A 2\nm_B 1\nm_A 1\ncoeff 0 0 1 1 2/4\ncoeff 0 0 0 0 0\nbound -6/3 # note\n";
        let e = parse_expression(text).unwrap();
        assert_eq!(
            write_expression(&e),
            "m_A 1\nm_B 1\nn_A 2\nn_B 2\nbound -2\ncoeff 0 0 1 1 1/2\n"
        );
    }

    fn err_at(text: &str) -> (usize, usize) {
        match parse_expression(text) {
            Err(Error::Parse { line, column, .. }) => (line, column),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn errors_carry_positions() {
        let h = "m_A 1\nm_B 1\nn_A 2\nn_B 2\n";
        assert_eq!(err_at(h), (4, 6));
        assert_eq!(err_at(&format!("{h}bound 1\nbound 1\n")), (6, 1));
        assert_eq!(err_at(&format!("{h}bound 1/0\n")), (5, 7));
        assert_eq!(err_at(&format!("{h}bound 1\ncoeff 0 0 2 0 1\n")), (6, 11));
        assert_eq!(err_at(&format!("{h}bound 1\ncoeff 0 0 0 0\n")), (6, 14));
        assert_eq!(err_at(&format!("{h}bound 1\ncoeff 0 0 0 0 1\ncoeff 0 0 0 0 2\n")), (7, 1));
        assert_eq!(err_at(&format!("{h}win 0 0 0 0\n")), (5, 1));
        assert_eq!(err_at(&format!("{h}bound 1 2\n")), (5, 9));
        assert_eq!(err_at("m_A 1024\nm_B 1024\nn_A 2\nn_B 2\nbound 0\n"), (1, 1));
    }

    proptest! {
        #[test]
        fn canonical_form_is_a_fixed_point(
            dims in (1usize..3, 1usize..3, 1usize..4, 1usize..4),
            values in proptest::collection::vec((-5i64..5, 1i64..4), 36),
            bound in (-9i64..9, 1i64..5),
        ) {
            let s = Scenario::new(dims.0, dims.1, dims.2, dims.3).unwrap();
            let mut e = BellExpression::zero(s, Rational::new(bound.0, bound.1));
            for (i, (x, y, a, b)) in s.quadruples().enumerate() {
                let (n, d) = values[i];
                e.set_coefficient(x, y, a, b, Rational::new(n, d)).unwrap();
            }
            let text = write_expression(&e);
            let parsed = parse_expression(&text).unwrap();
            prop_assert_eq!(&parsed, &e);
            prop_assert_eq!(write_expression(&parsed), text);
        }
    }
}
