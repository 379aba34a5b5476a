//! Built-in games and expressions, and loading from files.

use std::fs;

use nlgame::bell::{magic_square_inequality, parse_expression, BellExpression, MagicSquareForm};
use nlgame::game::{magic_square_game, parse_game, MagicSquareEncoding};
use nlgame::{GameRelation, Rational, Scenario};

use crate::report::CliError;

pub const GAME_IDS: &[&str] = &["magic-square-r4", "magic-square-f8", "magic-square-rows01", "chsh"];
pub const EXPRESSION_IDS: &[&str] = &[
    "magic-square-r4",
    "magic-square-f8",
    "magic-square-abstract4",
    "chsh",
    "zero",
];

pub fn builtin_game(id: &str) -> Option<GameRelation> {
    Some(match id {
        "magic-square-r4" => magic_square_game(MagicSquareEncoding::Restricted4),
        "magic-square-f8" => magic_square_game(MagicSquareEncoding::Full8),
        "magic-square-rows01" => magic_square_game(MagicSquareEncoding::Restricted4)
            .restrict_alice_inputs(&[0, 1])
            .expect("rows 0 and 1 exist"),
        "chsh" => GameRelation::chsh(),
        _ => return None,
    })
}

pub fn builtin_expression(id: &str) -> Option<BellExpression> {
    Some(match id {
        "magic-square-r4" => magic_square_inequality(MagicSquareForm::Restricted4),
        "magic-square-f8" => magic_square_inequality(MagicSquareForm::Full8),
        "magic-square-abstract4" => magic_square_inequality(MagicSquareForm::Abstract4),
        "chsh" => BellExpression::from_game(&GameRelation::chsh(), Rational::from_integer(3)),
        "zero" => BellExpression::zero(
            Scenario::new(3, 3, 4, 4).expect("valid scenario"),
            Rational::from_integer(0),
        ),
        _ => return None,
    })
}

fn read(path: &str, kind: &str, ids: &[&str]) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| {
        CliError::Input(format!(
            "`{path}` is not a built-in {kind} ({}) and cannot be read: {e}",
            ids.join(", ")
        ))
    })
}

pub fn load_game(source: &str) -> Result<GameRelation, CliError> {
    if let Some(g) = builtin_game(source) {
        return Ok(g);
    }
    let text = read(source, "game", GAME_IDS)?;
    parse_game(&text).map_err(|e| CliError::Input(format!("{source}: {e}")))
}

pub fn load_expression(source: &str) -> Result<BellExpression, CliError> {
    if let Some(e) = builtin_expression(source) {
        return Ok(e);
    }
    let text = read(source, "expression", EXPRESSION_IDS)?;
    parse_expression(&text).map_err(|e| CliError::Input(format!("{source}: {e}")))
}
