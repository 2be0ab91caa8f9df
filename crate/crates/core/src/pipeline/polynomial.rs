use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A polynomial with exact rational coefficients, lowest degree first.
/// Trailing zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial::default()
    }

    /// Integer coefficients, lowest degree first.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// Coefficients as `(numerator, denominator)` pairs, lowest degree first.
    pub fn from_fractions(coeffs: &[(i64, i64)]) -> Self {
        Polynomial::new(
            coeffs
                .iter()
                .map(|&(n, d)| BigRational::new(n.into(), d.into()))
                .collect(),
        )
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coefficient(&self, degree: usize) -> BigRational {
        self.coeffs.get(degree).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, degree: usize, c: BigRational) {
        if self.coeffs.len() <= degree {
            self.coeffs.resize(degree + 1, BigRational::zero());
        }
        self.coeffs[degree] += c;
        *self = Polynomial::new(std::mem::take(&mut self.coeffs));
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_at(&self, n: u64) -> BigRational {
        self.eval(&BigRational::from_integer(n.into()))
    }

    /// `P(n)` as an integer; `None` if it is not one.
    pub fn eval_integer(&self, n: u64) -> Option<BigInt> {
        let v = self.eval_at(n);
        v.is_integer().then(|| v.to_integer())
    }

    /// `P(n)` as a natural number; `None` if it is negative or fractional.
    pub fn eval_natural(&self, n: u64) -> Option<BigUint> {
        self.eval_integer(n).and_then(|v| v.to_biguint())
    }

    /// `P(x + 1) − P(x)`.
    pub fn difference(&self) -> Polynomial {
        let mut out = vec![BigRational::zero(); self.coeffs.len().saturating_sub(1)];
        for (j, c) in self.coeffs.iter().enumerate() {
            // (x+1)^j − x^j = Σ_{i<j} binom(j, i) x^i
            let mut binom = BigInt::one();
            for (i, slot) in out.iter_mut().enumerate().take(j) {
                *slot += c * BigRational::from_integer(binom.clone());
                binom = binom * (j - i) / (i + 1);
            }
        }
        Polynomial::new(out)
    }

    pub fn scale(&self, factor: &BigInt) -> Polynomial {
        let f = BigRational::from_integer(factor.clone());
        Polynomial::new(self.coeffs.iter().map(|c| c * &f).collect())
    }

    /// Coefficients rounded to integers, if they all are.
    pub fn integer_coefficients(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Comma-separated coefficients, highest degree first (`"0"` for zero).
    pub fn to_coefficient_list(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs.iter().rev().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Polynomial {
    /// Expression form, e.g. `1/3*x^4 - 2*x^3 + 4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match deg {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}*")?;
                    }
                    write!(f, "x")?;
                    if deg > 1 {
                        write!(f, "^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn to_usize(v: &BigUint) -> Option<usize> {
    v.to_usize()
}
