use serde_json::{json, Value};

use super::matrix::CMatrix;
use super::measurement::ProjectiveMeasurement;
use super::strategy::QuantumStrategy;
use crate::rational::sig17;

fn complex_entry(z: &num_complex::Complex64) -> Value {
    json!([sig17(z.re), sig17(z.im)])
}

fn matrix_rows(m: &CMatrix) -> Value {
    Value::Array(
        (0..m.nrows())
            .map(|i| Value::Array((0..m.ncols()).map(|j| complex_entry(&m[(i, j)])).collect()))
            .collect(),
    )
}

fn measurements(side: &[ProjectiveMeasurement<usize>]) -> Value {
    Value::Array(
        side.iter()
            .enumerate()
            .map(|(input, m)| {
                let mut outcomes: Vec<_> = m.outcomes().iter().collect();
                outcomes.sort_by_key(|(label, _)| *label);
                json!({
                    "input": input,
                    "outcomes": outcomes
                        .into_iter()
                        .map(|(label, p)| json!({ "label": label, "projector": matrix_rows(p) }))
                        .collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

/// JSON document with the state amplitudes and every projector, numbers as
/// `[re, im]` pairs of 17-significant-digit strings.
pub fn strategy_document(strategy: &QuantumStrategy) -> Value {
    let state = strategy.state();
    json!({
        "dim_a": state.dim_a(),
        "dim_b": state.dim_b(),
        "amplitudes": state.amplitudes().iter().map(complex_entry).collect::<Vec<_>>(),
        "alice": measurements(strategy.alice_measurements()),
        "bob": measurements(strategy.bob_measurements()),
    })
}
