use std::fs;

use serde_json::{json, Value};

use nlgame::bell::{
    algebraic_maximum, evaluate_on_distribution, i2244_from_cglmp, noise_resistance, noise_resistance_exact,
    uniform_noise_value, write_expression, BellExpression,
};
use nlgame::game::{self, compatible_pair_2xn, write_game};
use nlgame::polytope::{analyze_facet, write_int_matrix, FacetOptions};
use nlgame::quantum::{
    chsh_quantum_strategy, magic_square_quantum_strategy, magic_square_strategy_from, mermin_peres_square,
    strategy_document, QuantumStrategy,
};
use nlgame::rational::{parse_rational, sig17, to_f64, to_fraction_string};
use nlgame::reproduce::{run_checks, ReproduceOptions};
use nlgame::{DeterministicStrategy, EnumerationBudget, Rational, Scenario};

use crate::builtin::{builtin_game, load_expression, load_game};
use crate::report::{CliError, Report};

const QUANTUM_TOLERANCE: f64 = 1e-9;

fn frac(r: &Rational) -> Value {
    Value::String(to_fraction_string(r))
}

fn float(x: f64) -> Value {
    Value::String(sig17(x))
}

fn scenario_json(s: Scenario) -> Value {
    json!({ "m_A": s.m_a, "m_B": s.m_b, "n_A": s.n_a, "n_B": s.n_b })
}

fn strategy_json(s: &DeterministicStrategy) -> Value {
    json!({ "alice": s.a_map(), "bob": s.b_map() })
}

pub fn classical_value(source: &str, budget: EnumerationBudget) -> Result<Report, CliError> {
    let game = load_game(source)?;
    let v = game::classical_value(&game, budget)?;
    let mut r = Report::new("classical-value");
    r.input("game", source);
    r.input("scenario", scenario_json(game.scenario()));
    r.input("budget", budget.0);
    r.result("value", frac(&v.value));
    r.result("winning_pairs", v.winning_pairs);
    r.result("input_pairs", game.scenario().input_pairs());
    // a strategy winning nothing witnesses nothing
    let witness = (v.winning_pairs > 0).then(|| strategy_json(&v.witness));
    r.result("witness", witness.unwrap_or(Value::Null));
    r.line(format!("value {}", to_fraction_string(&v.value)));
    if v.winning_pairs > 0 {
        r.line(format!("witness alice {:?} bob {:?}", v.witness.a_map(), v.witness.b_map()));
    } else {
        r.line("witness none");
    }
    Ok(r)
}

pub fn facet_check(
    source: &str,
    params: Option<[usize; 4]>,
    export_matrix: Option<&str>,
    guard: bool,
    budget: EnumerationBudget,
) -> Result<Report, CliError> {
    let mut expr = load_expression(source)?;
    if let Some([m_a, m_b, n_a, n_b]) = params {
        expr = expr.embedded_in(Scenario::new(m_a, m_b, n_a, n_b)?)?;
    }
    let mut r = Report::new("facet-check");
    r.input("expression", source);
    r.input("scenario", scenario_json(expr.scenario()));
    r.input("proper_face_guard", guard);
    r.input("budget", budget.0);
    let analysis = match analyze_facet(&expr, FacetOptions { budget, proper_face_guard: guard }) {
        Ok(a) => a,
        Err(nlgame::Error::Degenerate) => {
            r.result("verdict", false);
            r.result("vertex_count", 0);
            r.result("reason", "no deterministic strategy attains the bound");
            r.line("facet false (no vertex attains the bound)");
            return Ok(r);
        }
        Err(e) => return Err(e.into()),
    };
    let c = &analysis.certificate;
    if let Some(path) = export_matrix {
        fs::write(path, write_int_matrix(&analysis.matrix))
            .map_err(|e| CliError::Input(format!("cannot write {path}: {e}")))?;
        r.input("export_matrix", path);
    }
    r.result("bound", frac(&c.bound));
    r.result("max_value", frac(&c.max_value));
    r.result("vertex_count", c.vertex_count);
    r.result("total_vertices", c.total_vertices.to_string());
    r.result("rank", c.rank);
    r.result("affine_rank", c.affine_rank);
    r.result("dimension", c.dimension);
    r.result("verdict", c.is_facet);
    r.result("reason", c.reason.to_string());
    r.line(format!(
        "vertices {} rank {} affine rank {} dimension {}",
        c.vertex_count, c.rank, c.affine_rank, c.dimension
    ));
    r.line(format!("facet {} ({})", c.is_facet, c.reason));
    Ok(r)
}

pub fn quantum(id: &str, flip_sign: bool, include_strategy: bool) -> Result<Report, CliError> {
    let game = builtin_game(id)
        .filter(|_| id != "magic-square-f8")
        .ok_or_else(|| CliError::Input(format!("no quantum strategy for `{id}`; use magic-square-r4, magic-square-rows01 or chsh")))?;
    let is_square = id.starts_with("magic-square");
    if flip_sign && !is_square {
        return Err(CliError::Input("--debug-flip-sign applies to the Magic Square only".into()));
    }
    let mut r = Report::new("quantum");
    r.input("game", id);
    r.input("debug_flip_sign", flip_sign);

    let (strategy, expected, violations): (QuantumStrategy, f64, Vec<String>) = if is_square {
        let square = if flip_sign {
            mermin_peres_square().with_flipped_sign(0, 0)
        } else {
            mermin_peres_square()
        };
        let violations = square.invariants().violations(1e-12);
        let mut s = if flip_sign {
            magic_square_strategy_from(&square)?
        } else {
            magic_square_quantum_strategy()
        };
        if id == "magic-square-rows01" {
            s = s.restrict_alice_inputs(&[0, 1])?;
        }
        (s, 1.0, violations)
    } else {
        (chsh_quantum_strategy(), (2.0 + 2f64.sqrt()) / 4.0, Vec::new())
    };

    let terms = strategy.success_terms(&game)?;
    let p = terms.iter().sum::<f64>() / terms.len() as f64;
    let s = game.scenario();
    let term_docs: Vec<Value> = terms
        .iter()
        .enumerate()
        .map(|(k, t)| json!({ "x": k / s.m_b, "y": k % s.m_b, "success": sig17(*t) }))
        .collect();
    let meets = (p - expected).abs() <= QUANTUM_TOLERANCE;
    r.result("winning_probability", float(p));
    r.result("expected", float(expected));
    r.result("tolerance", float(QUANTUM_TOLERANCE));
    r.result("terms", term_docs);
    r.result("invariant_violations", violations.clone());
    if include_strategy {
        r.result("strategy", strategy_document(&strategy));
    }
    r.passed = meets && violations.is_empty();
    r.line(format!("winning probability {}", sig17(p)));
    for (k, t) in terms.iter().enumerate() {
        r.line(format!("  x={} y={} {}", k / s.m_b, k % s.m_b, sig17(*t)));
    }
    for v in &violations {
        r.line(format!("invariant violated: {v}"));
    }
    Ok(r)
}

pub fn theorem_2xn(source: &str) -> Result<Report, CliError> {
    let game = load_game(source)?;
    let witness = compatible_pair_2xn(&game)?;
    let mut r = Report::new("theorem-2xn");
    r.input("game", source);
    r.input("scenario", scenario_json(game.scenario()));
    r.result("winnable", witness.is_some());
    match &witness {
        Some(w) => {
            r.result(
                "witness",
                json!({ "a0": w.alice(0), "a1": w.alice(1), "b": w.b_map() }),
            );
            r.result("statement", "a compatible pair exists: a deterministic strategy wins every input pair");
            r.line(format!("winnable: a0 {} a1 {} b {:?}", w.alice(0), w.alice(1), w.b_map()));
        }
        None => {
            r.result("witness", Value::Null);
            r.result(
                "statement",
                "no compatible pair: no classical strategy wins with certainty, hence neither does any quantum strategy, and the game is not a pseudo-telepathy game",
            );
            r.line("not winnable: no pseudo-telepathy possible");
        }
    }
    Ok(r)
}

/// The built-in strategy's value on a built-in Magic Square expression.
fn builtin_quantum_value(source: &str, expr: &BellExpression) -> Option<f64> {
    let strategy = match source {
        "magic-square-r4" | "magic-square-abstract4" => magic_square_quantum_strategy(),
        _ => return None,
    };
    evaluate_on_distribution(expr, &strategy.behavior().ok()?).ok()
}

pub fn noise(source: &str, quantum_value: Option<&str>) -> Result<Report, CliError> {
    let expr = load_expression(source)?;
    let mut r = Report::new("noise");
    r.input("expression", source);
    let i_lv = expr.local_bound();
    let i_noise = uniform_noise_value(&expr)?;
    let max = algebraic_maximum(&expr)?;

    // An exact quantum value: given as a rational, or computed and found to
    // reach the algebraic maximum.
    let (i_qm, exact): (f64, Option<Rational>) = match quantum_value {
        Some(text) => match parse_rational(text) {
            Ok(q) => (to_f64(&q), Some(q)),
            Err(_) => (
                text.parse::<f64>()
                    .map_err(|_| CliError::Input(format!("`{text}` is not a number")))?,
                None,
            ),
        },
        None => {
            let v = builtin_quantum_value(source, &expr).ok_or_else(|| {
                CliError::Input(format!("no built-in quantum strategy for `{source}`; pass --quantum-value"))
            })?;
            let exact = ((v - to_f64(&max)).abs() <= QUANTUM_TOLERANCE).then_some(max);
            (v, exact)
        }
    };
    r.input("quantum_value", quantum_value.map_or(Value::Null, |q| Value::String(q.into())));
    r.result("I_QM", float(i_qm));
    if let Some(q) = exact {
        r.result("I_QM_exact", frac(&q));
    }
    r.result("I_LV", frac(&i_lv));
    r.result("I_noise", frac(&i_noise));
    r.result("algebraic_maximum", frac(&max));
    let p = noise_resistance(i_qm, i_lv, i_noise)?;
    r.result("p_n", float(p));
    r.line(format!("I_QM {}  I_LV {}  I_noise {}", sig17(i_qm), to_fraction_string(&i_lv), to_fraction_string(&i_noise)));
    match exact.map(|q| noise_resistance_exact(q, i_lv, i_noise)).transpose()? {
        Some(pe) => {
            r.result("p_n_exact", frac(&pe));
            r.line(format!("p_n = {}", to_fraction_string(&pe)));
        }
        None => r.line(format!("p_n = {}", sig17(p))),
    }

    let cglmp = 2.9727;
    let i2244 = i2244_from_cglmp(cglmp);
    let published = noise_resistance(0.3648, Rational::from_integer(0), Rational::new(-3, 4))?;
    r.result(
        "comparison_i2244",
        json!({
            "cglmp_value": float(cglmp),
            "I_QM": float(i2244),
            "I_LV": "0/1",
            "I_noise": "-3/4",
            "p_n": float(published),
        }),
    );
    r.line(format!("I_2244: I_QM {:.4}  p_n {:.4}", i2244, published));
    Ok(r)
}

pub fn reproduce(guard: bool, budget: EnumerationBudget) -> Report {
    let checks = run_checks(&ReproduceOptions {
        budget,
        proper_face_guard: guard,
    });
    let mut r = Report::new("reproduce-paper");
    r.input("proper_face_guard", guard);
    r.input("budget", budget.0);
    let failed = checks.iter().filter(|c| !c.passed).count();
    for c in &checks {
        r.line(format!(
            "{} {}: {} (expected {})",
            if c.passed { "PASS" } else { "FAIL" },
            c.id,
            c.observed,
            c.expected
        ));
    }
    r.line(format!("{} of {} checks passed", checks.len() - failed, checks.len()));
    r.result("checks", serde_json::to_value(&checks).expect("serializable checks"));
    r.result("passed", failed == 0);
    r.passed = failed == 0;
    r
}

pub fn export_game(source: &str) -> Result<Report, CliError> {
    let mut r = Report::new("export-game");
    r.raw = Some(write_game(&load_game(source)?));
    Ok(r)
}

pub fn export_expression(source: &str) -> Result<Report, CliError> {
    let mut r = Report::new("export-expression");
    r.raw = Some(write_expression(&load_expression(source)?));
    Ok(r)
}
