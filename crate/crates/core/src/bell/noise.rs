//! Resistance to noise: the weight `p_n` of unstructured noise at which
//! `(1 − p_n)·I_QM + p_n·I_noise = I_LV`.

use num_traits::{CheckedDiv, CheckedSub, Zero};

use super::expression::{uniform_noise_value, BellExpression};
use crate::error::{Error, Result};
use crate::rational::{to_f64, Rational};

/// `(I_QM − I_LV) / (I_QM − I_noise)`.
pub fn noise_resistance(i_qm: f64, i_lv: Rational, i_noise: Rational) -> Result<f64> {
    let denominator = i_qm - to_f64(&i_noise);
    if denominator == 0.0 {
        return Err(Error::ZeroDenominator);
    }
    Ok((i_qm - to_f64(&i_lv)) / denominator)
}

/// [`noise_resistance`] for an exactly known quantum value.
pub fn noise_resistance_exact(i_qm: Rational, i_lv: Rational, i_noise: Rational) -> Result<Rational> {
    let denominator = i_qm.checked_sub(&i_noise).ok_or(Error::Overflow)?;
    if denominator.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    i_qm.checked_sub(&i_lv)
        .and_then(|n| n.checked_div(&denominator))
        .ok_or(Error::Overflow)
}

/// Converts a CGLMP value `I'` for four outcomes to the `I_2244` normalization,
/// `I = 3/8·(I' − 2)`.
pub fn i2244_from_cglmp(i_prime: f64) -> f64 {
    (4.0 - 1.0) / (2.0 * 4.0) * (i_prime - 2.0)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseFigures {
    pub i_qm: f64,
    pub i_lv: Rational,
    pub i_noise: Rational,
    /// `None` when `I_QM = I_noise`.
    pub p_n: Option<f64>,
}

impl NoiseFigures {
    /// Takes `I_LV` from the expression's bound and `I_noise` from
    /// [`uniform_noise_value`].
    pub fn for_expression(expr: &BellExpression, i_qm: f64) -> Result<Self> {
        Self::from_values(i_qm, expr.local_bound(), uniform_noise_value(expr)?)
    }

    pub fn from_values(i_qm: f64, i_lv: Rational, i_noise: Rational) -> Result<Self> {
        let p_n = match noise_resistance(i_qm, i_lv, i_noise) {
            Ok(p) => Some(p),
            Err(Error::ZeroDenominator) => None,
            Err(e) => return Err(e),
        };
        Ok(NoiseFigures {
            i_qm,
            i_lv,
            i_noise,
            p_n,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bell::{magic_square_inequality, MagicSquareForm};

    #[test]
    fn magic_square_resistance() {
        let exact = noise_resistance_exact(
            Rational::from_integer(9),
            Rational::from_integer(8),
            Rational::new(9, 2),
        )
        .unwrap();
        assert_eq!(exact, Rational::new(2, 9));
        // the noisy mixture sits exactly on the local bound
        let p = exact;
        let mix = (Rational::from_integer(1) - p) * Rational::from_integer(9) + p * Rational::new(9, 2);
        assert_eq!(mix, Rational::from_integer(8));

        let figures = NoiseFigures::for_expression(&magic_square_inequality(MagicSquareForm::Restricted4), 9.0).unwrap();
        assert_eq!(figures.i_noise, Rational::new(9, 2));
        assert_eq!(figures.p_n, Some(2.0 / 9.0));
    }

    #[test]
    fn cglmp_comparison_constants() {
        let i_qm = i2244_from_cglmp(2.9727);
        assert!((i_qm - 0.3648).abs() < 5e-5);
        let p = noise_resistance(0.3648, Rational::zero(), Rational::new(-3, 4)).unwrap();
        assert!((p - 0.3272).abs() < 5e-4);
    }

    #[test]
    fn degenerate_cases() {
        assert_eq!(
            noise_resistance(8.0, Rational::from_integer(8), Rational::new(9, 2)).unwrap(),
            0.0
        );
        assert_eq!(
            noise_resistance(4.5, Rational::from_integer(8), Rational::new(9, 2)),
            Err(Error::ZeroDenominator)
        );
        assert_eq!(
            noise_resistance_exact(Rational::new(9, 2), Rational::from_integer(8), Rational::new(9, 2)),
            Err(Error::ZeroDenominator)
        );
        let f = NoiseFigures::from_values(4.5, Rational::from_integer(8), Rational::new(9, 2)).unwrap();
        assert_eq!(f.p_n, None);
    }
}
