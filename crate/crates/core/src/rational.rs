//! Exact rationals and their text form.
//!
//! Reports always render a rational as `p/q` (so `0` becomes `0/1`); data
//! files accept either `p` or `p/q` with an optional leading `-`.

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

pub type Rational = Ratio<i64>;

/// `p/q` with `q > 0`, lowest terms, even for integers.
pub fn to_fraction_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Integers without the `/1`, everything else as `p/q`.
pub fn to_compact_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        to_fraction_string(r)
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Parses `[-]digits[/digits]`. Returns a message on failure; callers attach
/// positions.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer = parse_signed(num)?;
    let denom = match den {
        Some(d) => {
            if d.starts_with('-') || d.starts_with('+') {
                return Err(format!("denominator `{d}` must be unsigned"));
            }
            parse_signed(d)?
        }
        None => 1,
    };
    if denom.is_zero() {
        return Err("zero denominator".to_string());
    }
    // Ratio::new reduces and normalizes; it can overflow only for i64::MIN.
    if numer == i64::MIN || denom == i64::MIN {
        return Err(format!("`{s}` is out of range"));
    }
    Ok(Rational::new(numer, denom))
}

fn parse_signed(s: &str) -> Result<i64, String> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("`{s}` is not an integer"));
    }
    s.parse::<i64>().map_err(|_| format!("`{s}` is out of range"))
}

/// Float rendering with 17 significant digits.
pub fn sig17(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return format!("{:.16}", 0.0);
    }
    let exponent = x.abs().log10().floor() as i32;
    if (-5..=16).contains(&exponent) {
        let decimals = (16 - exponent).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.16e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fraction_strings() {
        assert_eq!(to_fraction_string(&Rational::new(8, 9)), "8/9");
        assert_eq!(to_fraction_string(&Rational::zero()), "0/1");
        assert_eq!(to_fraction_string(&Rational::new(-4, 6)), "-2/3");
        assert_eq!(to_compact_string(&Rational::from_integer(8)), "8");
        assert_eq!(to_compact_string(&Rational::new(9, 2)), "9/2");
    }

    #[test]
    fn parse_accepts_integers_and_fractions() {
        assert_eq!(parse_rational("8"), Ok(Rational::from_integer(8)));
        assert_eq!(parse_rational("-3/4"), Ok(Rational::new(-3, 4)));
        assert_eq!(parse_rational("6/4"), Ok(Rational::new(3, 2)));
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "-", "1/0", "1/-2", "1.5", "+1", "1/", "/2", "a", "99999999999999999999"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should not parse");
        }
        assert!(parse_rational("-9223372036854775808").is_err());
    }

    #[test]
    fn sig17_digits() {
        assert_eq!(sig17(1.0), "1.0000000000000000");
        assert_eq!(sig17(0.25), "0.25000000000000000");
        assert_eq!(sig17(0.0), "0.0000000000000000");
        let s = sig17((2.0 + 2f64.sqrt()) / 4.0);
        assert_eq!(s.trim_start_matches("0.").len(), 17);
        assert_eq!(s.parse::<f64>().unwrap(), (2.0 + 2f64.sqrt()) / 4.0);
    }
}
