//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nlgame::bell::{
    evaluate_on_distribution, evaluate_on_strategy, i2244_from_cglmp, magic_square_inequality, noise_resistance,
    noise_resistance_exact, uniform_noise_value, MagicSquareForm,
};
use nlgame::game::{
    classical_value, compatible_pair_2xn, magic_square_game, winnable_2xn, MagicSquareEncoding, StrategyIter,
};
use nlgame::polytope::{analyze_facet, cg_dimension, rank_exact, saturating_vertices, FacetOptions};
use nlgame::quantum::{
    chsh_quantum_strategy, extract_classical_strategy, joint_measurement, magic_square_quantum_strategy,
    mermin_peres_square, winning_probability, CMatrix,
};
use nlgame::{EnumerationBudget, GameRelation, Rational, Scenario};

use common::*;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Verdict) -> Verdict {
    let start = Instant::now();
    let out = f()?;
    let elapsed = start.elapsed();
    ensure(elapsed < limit, format!("took {elapsed:?}, limit {limit:?}"))?;
    Ok(format!("{out} in {elapsed:.2?}"))
}

fn budget() -> EnumerationBudget {
    EnumerationBudget::DEFAULT
}

fn r4() -> Scenario {
    MagicSquareEncoding::Restricted4.scenario()
}

fn c1_classical_value() -> Verdict {
    let four = timed(Duration::from_secs(1), || {
        let v = classical_value(&magic_square_game(MagicSquareEncoding::Restricted4), budget()).map_err(|e| e.to_string())?;
        ensure(v.value == Rational::new(8, 9), format!("four outcomes: {}", v.value))?;
        Ok("four outcomes 8/9".into())
    })?;
    let oracle4 = brute_force_best((3, 3, 4, 4), magic_square_restricted4);
    ensure(oracle4 == 8, format!("oracle (four outcomes) found {oracle4}"))?;
    let eight = timed(Duration::from_secs(30), || {
        let v = classical_value(&magic_square_game(MagicSquareEncoding::Full8), budget()).map_err(|e| e.to_string())?;
        ensure(v.value == Rational::new(8, 9), format!("eight outcomes: {}", v.value))?;
        Ok("eight outcomes 8/9".into())
    })?;
    let oracle8 = brute_force_best((3, 3, 8, 8), magic_square_full8);
    ensure(oracle8 == 8, format!("oracle (eight outcomes) found {oracle8}"))?;
    Ok(format!("{four}; {eight}"))
}

fn c2_saturating_vertices() -> Verdict {
    timed(Duration::from_secs(5), || {
        let expr = magic_square_inequality(MagicSquareForm::Restricted4);
        let v = saturating_vertices(&expr, budget()).map_err(|e| e.to_string())?;
        ensure(v.len() == 144, format!("{} saturating vertices", v.len()))?;
        for s in &v {
            let w = wins(3, 3, s.a_map(), s.b_map(), magic_square_restricted4);
            ensure(w == 8, format!("{s:?} wins {w}"))?;
        }
        let mut oracle = 0;
        for_each_map(3, 4, |a| for_each_map(3, 4, |b| oracle += (wins(3, 3, a, b, magic_square_restricted4) == 8) as usize));
        ensure(oracle == 144, format!("oracle counted {oracle}"))?;
        Ok("144 vertices, each losing exactly one pair".into())
    })
}

fn c3_facet_rank() -> Verdict {
    let (out, rows) = timed_with_rows()?;
    let float = float_rank(&rows, 99);
    ensure(float == 99, format!("floating-point cross-check rank {float}"))?;
    Ok(out)
}

fn timed_with_rows() -> Result<(String, Vec<Vec<i64>>), String> {
    let mut rows = Vec::new();
    let out = timed(Duration::from_secs(5), || {
        let expr = magic_square_inequality(MagicSquareForm::Restricted4);
        let a = analyze_facet(&expr, FacetOptions::default()).map_err(|e| e.to_string())?;
        let c = &a.certificate;
        ensure(
            (c.vertex_count, c.rank, c.dimension, c.is_facet) == (144, 99, 99, true),
            format!("certificate {c:?}"),
        )?;
        ensure(rank_exact(&a.matrix) == 99, "matrix rank")?;
        rows = a.matrix.iter_rows().map(<[i64]>::to_vec).collect();
        Ok("144×99 matrix, exact rank 99, facet".into())
    })?;
    Ok((out, rows))
}

fn c4_quantum() -> Verdict {
    timed(Duration::from_secs(1), || {
        let game = magic_square_game(MagicSquareEncoding::Restricted4);
        let q = magic_square_quantum_strategy();
        let terms = q.success_terms(&game).map_err(|e| e.to_string())?;
        ensure(terms.len() == 9, "nine terms")?;
        for (k, t) in terms.iter().enumerate() {
            ensure((t - 1.0).abs() <= 1e-9, format!("term {k} = {t}"))?;
        }
        let expr = magic_square_inequality(MagicSquareForm::Restricted4);
        let behavior = q.behavior().map_err(|e| e.to_string())?;
        let value = evaluate_on_distribution(&expr, &behavior).map_err(|e| e.to_string())?;
        ensure((value - 9.0).abs() <= 1e-9, format!("inequality value {value}"))?;
        Ok("all nine terms 1 within 1e-9, inequality value 9".into())
    })
}

fn c5_noise() -> Verdict {
    let expr = magic_square_inequality(MagicSquareForm::Restricted4);
    let noise = uniform_noise_value(&expr).map_err(|e| e.to_string())?;
    ensure(noise == Rational::new(9, 2), format!("I_noise = {noise}"))?;
    // oracle: 72 unit coefficients at weight 1/16
    let ones = r4().quadruples().filter(|&(x, y, a, b)| magic_square_restricted4(x, y, a, b)).count();
    ensure(Rational::new(ones as i64, 16) == noise, "oracle noise value")?;
    let p = noise_resistance_exact(Rational::from_integer(9), Rational::from_integer(8), noise).map_err(|e| e.to_string())?;
    ensure(p == Rational::new(2, 9), format!("p_n = {p}"))?;
    let pf = noise_resistance(9.0, Rational::from_integer(8), noise).map_err(|e| e.to_string())?;
    ensure((pf - 2.0 / 9.0).abs() < 1e-15, format!("float p_n = {pf}"))?;
    let published = noise_resistance(0.3648, Rational::zero(), Rational::new(-3, 4)).map_err(|e| e.to_string())?;
    ensure((published - 0.3272).abs() <= 5e-4, format!("published constants give {published}"))?;
    let i_qm = i2244_from_cglmp(2.9727);
    ensure((i_qm - 0.3648).abs() <= 5e-5, format!("converted quantum value {i_qm}"))?;
    Ok(format!("I_noise = 9/2, p_n = 2/9, I_2244 p_n = {published:.4}"))
}

fn c6_dimension() -> Verdict {
    let oracle = |m: usize, n: usize| m * m * (n - 1) * (n - 1) + 2 * m * (n - 1);
    for (n, expected) in [(4, 99), (8, 483)] {
        let d = cg_dimension(&Scenario::new(3, 3, n, n).unwrap());
        ensure(d == expected && d == oracle(3, n), format!("d(3,3,{n},{n}) = {d}"))?;
    }
    Ok("99 and 483".into())
}

fn c7_form_equivalence() -> Verdict {
    let r = magic_square_inequality(MagicSquareForm::Restricted4);
    let a = magic_square_inequality(MagicSquareForm::Abstract4);
    let mut n = 0;
    for s in StrategyIter::new(r4()) {
        let (vr, va) = (evaluate_on_strategy(&r, &s).unwrap(), evaluate_on_strategy(&a, &s).unwrap());
        ensure(vr == va, format!("{s:?}: {vr} vs {va}"))?;
        let oracle = wins(3, 3, s.a_map(), s.b_map(), magic_square_restricted4);
        ensure(vr == Rational::from_integer(oracle as i64), format!("{s:?}: oracle {oracle}"))?;
        n += 1;
    }
    ensure(n == 4096, format!("{n} strategies"))?;
    Ok("agree on all 4096 strategies".into())
}

fn c8_theorem_2xn() -> Verdict {
    let s2222 = Scenario::new(2, 2, 2, 2).unwrap();
    for bits in 0u32..65536 {
        let rule = move |x, y, a, b| (bits >> s2222.index(x, y, a, b)) & 1 == 1;
        let game = GameRelation::from_predicate(s2222, rule);
        let fast = winnable_2xn(&game).map_err(|e| e.to_string())?;
        ensure(fast == brute_force_winnable((2, 2, 2, 2), rule), format!("relation {bits:#06x}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x2_0000_0001);
    let instances = 10_000;
    for i in 0..instances {
        let dims = (2, rng.random_range(2..=4), rng.random_range(2..=3), rng.random_range(2..=3));
        let s = Scenario::new(dims.0, dims.1, dims.2, dims.3).unwrap();
        let density = rng.random_range(0.4..0.95);
        let table: Vec<bool> = (0..s.table_len()).map(|_| rng.random_bool(density)).collect();
        let rule = |x, y, a, b| table[s.index(x, y, a, b)];
        let game = GameRelation::from_predicate(s, rule);
        let fast = winnable_2xn(&game).map_err(|e| e.to_string())?;
        ensure(fast == brute_force_winnable(dims, rule), format!("random instance {i} {dims:?}"))?;
        if let Some(w) = compatible_pair_2xn(&game).map_err(|e| e.to_string())? {
            ensure(wins(2, dims.1, w.a_map(), w.b_map(), rule) == 2 * dims.1, "witness does not win")?;
        }
    }
    let sub = magic_square_game(MagicSquareEncoding::Restricted4).restrict_alice_inputs(&[0, 1]).unwrap();
    ensure(winnable_2xn(&sub).unwrap(), "Magic Square rows {0,1} not winnable")?;
    let q = magic_square_quantum_strategy().restrict_alice_inputs(&[0, 1]).unwrap();
    let extracted = extract_classical_strategy(&q, &sub).map_err(|e| e.to_string())?;
    let w = wins(2, 3, extracted.a_map(), extracted.b_map(), magic_square_restricted4);
    ensure(w == 6, format!("extracted strategy wins {w}/6"))?;
    Ok(format!("65536 exhaustive + {instances} random agree; extracted sub-game strategy 6/6"))
}

fn c9_chsh() -> Verdict {
    let v = classical_value(&GameRelation::chsh(), budget()).map_err(|e| e.to_string())?;
    ensure(v.value == Rational::new(3, 4), format!("classical {}", v.value))?;
    let oracle = brute_force_best((2, 2, 2, 2), |x, y, a, b| (a ^ b) == (x & y));
    ensure(oracle == 3, "oracle classical")?;
    let p = winning_probability(&chsh_quantum_strategy(), &GameRelation::chsh()).map_err(|e| e.to_string())?;
    let target = (2.0 + 2f64.sqrt()) / 4.0;
    ensure((p - target).abs() <= 1e-9, format!("quantum {p}"))?;
    Ok(format!("3/4 and {p:.12}"))
}

fn deviation(m: &CMatrix, target: &CMatrix) -> f64 {
    (m - target).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn c10_measurements() -> Verdict {
    let mut worst = 0f64;
    let mut count = 0;
    for q in [magic_square_quantum_strategy(), chsh_quantum_strategy()] {
        for m in q.alice_measurements().iter().chain(q.bob_measurements()) {
            worst = worst.max(m.residuals().max());
            count += 1;
        }
    }
    let square = mermin_peres_square();
    for k in 0..3 {
        for m in [joint_measurement(&square.row(k)).unwrap(), joint_measurement(&square.column(k)).unwrap()] {
            worst = worst.max(m.residuals().max());
            count += 1;
        }
    }
    ensure(worst <= 1e-10, format!("measurement residual {worst:e}"))?;

    // matrix identities recomputed from the entries
    let id = DMatrix::<Complex64>::identity(4, 4);
    let mut square_worst = 0f64;
    for k in 0..3 {
        let r = square.row(k).map(|o| o.matrix());
        let c = square.column(k).map(|o| o.matrix());
        square_worst = square_worst.max(deviation(&(&r[0] * &r[1] * &r[2]), &id));
        square_worst = square_worst.max(deviation(&(&c[0] * &c[1] * &c[2]), &(-&id)));
        for line in [&r, &c] {
            for i in 0..3 {
                for j in 0..3 {
                    square_worst = square_worst.max(deviation(&(&line[i] * &line[j]), &(&line[j] * &line[i])));
                }
            }
        }
    }
    ensure(square_worst <= 1e-12, format!("square identity residual {square_worst:e}"))?;
    ensure(square.invariants().holds(1e-12), "library invariants disagree")?;
    Ok(format!("{count} measurements within {worst:.1e}; square identities within {square_worst:.1e}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("classical value 8/9 (four and eight outcomes)", c1_classical_value),
        ("144 saturating vertices", c2_saturating_vertices),
        ("exact rank 99 and facet verdict", c3_facet_rank),
        ("quantum winning probability 1", c4_quantum),
        ("noise figures", c5_noise),
        ("Collins–Gisin dimensions", c6_dimension),
        ("modular and intersection forms agree", c7_form_equivalence),
        ("pair-compatibility criterion", c8_theorem_2xn),
        ("CHSH cross-checks", c9_chsh),
        ("measurement and square invariants", c10_measurements),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
