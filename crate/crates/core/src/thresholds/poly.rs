use std::fmt;

use crate::error::{Error, Result};

/// Real polynomial with degree-descending coefficients and a nonzero
/// leading coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub const MAX_DEGREE: usize = 8;

    /// Leading zeros are stripped; the zero polynomial is rejected.
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidPolynomial("non-finite coefficient".into()));
        }
        let first = coeffs
            .iter()
            .position(|&c| c != 0.0)
            .ok_or_else(|| Error::InvalidPolynomial("zero polynomial".into()))?;
        let coeffs = coeffs[first..].to_vec();
        if coeffs.len() - 1 > Self::MAX_DEGREE {
            return Err(Error::InvalidPolynomial(format!(
                "degree {} exceeds {}",
                coeffs.len() - 1,
                Self::MAX_DEGREE
            )));
        }
        Ok(Self { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn leading(&self) -> f64 {
        self.coeffs[0]
    }

    pub fn eval(&self, x: f64) -> f64 {
        horner(&self.coeffs, x)
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().map(|c| c.to_string()))
    }
}

/// Polynomial with exact integer coefficients, degree-descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    /// Narrows coefficients computed in 128-bit arithmetic.
    pub(crate) fn from_wide(wide: &[i128]) -> Result<Self> {
        let coeffs = wide
            .iter()
            .map(|&c| i64::try_from(c).map_err(|_| Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        debug_assert!(coeffs.first().is_some_and(|&c| c != 0));
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn to_real(&self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|&c| c as f64).collect())
            .expect("integer polynomial has a nonzero leading coefficient")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().map(|c| c.to_string()))
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, coeffs: impl ExactSizeIterator<Item = String>) -> fmt::Result {
    let deg = coeffs.len() - 1;
    let terms: Vec<String> = coeffs
        .enumerate()
        .map(|(i, c)| match deg - i {
            0 => c,
            1 => format!("{c}x"),
            p => format!("{c}x^{p}"),
        })
        .collect();
    write!(f, "{}", terms.join(" + "))
}

pub(crate) fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().fold(0.0, |acc, &c| acc * x + c)
}

pub(crate) fn derivative(coeffs: &[f64]) -> Vec<f64> {
    let deg = coeffs.len() - 1;
    coeffs[..deg]
        .iter()
        .enumerate()
        .map(|(i, &c)| c * (deg - i) as f64)
        .collect()
}

/// Scales so the largest coefficient has magnitude one; sign is kept.
pub(crate) fn normalized(coeffs: &[f64]) -> Vec<f64> {
    let scale = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    if scale == 0.0 {
        return coeffs.to_vec();
    }
    coeffs.iter().map(|c| c / scale).collect()
}

/// Polynomial long division; returns `(quotient, remainder)`.
pub(crate) fn divide(num: &[f64], den: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let (n, d) = (num.len(), den.len());
    if n < d {
        return (vec![0.0], num.to_vec());
    }
    let mut rem = num.to_vec();
    let mut quot = vec![0.0; n - d + 1];
    for i in 0..=n - d {
        let factor = rem[i] / den[0];
        quot[i] = factor;
        for (j, &dc) in den.iter().enumerate() {
            rem[i + j] -= factor * dc;
        }
    }
    let remainder = rem[n - d + 1..].to_vec();
    (quot, if remainder.is_empty() { vec![0.0] } else { remainder })
}

const GCD_TOL: f64 = 1e-9;

/// `p / gcd(p, p')`, computed with a relative zero tolerance.
pub(crate) fn squarefree_part(coeffs: &[f64]) -> Vec<f64> {
    let p = normalized(coeffs);
    if p.len() <= 2 {
        return p;
    }
    let mut a = p.clone();
    let mut b = normalized(&derivative(&p));
    // a and b are kept at unit scale, so the remainder tolerance is absolute.
    loop {
        let (_, r) = divide(&a, &b);
        let first = r.iter().position(|c| c.abs() > GCD_TOL);
        let Some(first) = first else { break };
        a = b;
        b = normalized(&r[first..]);
    }
    if b.len() <= 1 {
        return p;
    }
    let (q, _) = divide(&p, &b);
    normalized(&q)
}
