//! Bell expressions over full probability tables and resistance to noise.

mod expression;
mod format;
mod noise;

pub use expression::{
    algebraic_maximum, evaluate_on_distribution, evaluate_on_strategy, magic_square_inequality,
    uniform_noise_value, BellExpression, IntegerForm, MagicSquareForm,
};
pub use format::{parse_expression, write_expression, MAX_EXPRESSION_ENTRIES};
pub use noise::{
    i2244_from_cglmp, noise_resistance, noise_resistance_exact, NoiseFigures,
};
