//! Threshold polynomials and the spectral thresholds built from them.
//!
//! Coefficients are assembled in 128-bit integer arithmetic and narrowed to
//! `i64` with an overflow check, so no rounding enters before root
//! isolation.
//!
//! `θ(n)` has a closed form in radicals, but its inner square root goes
//! negative for moderate `n` and would need complex cube roots. Root
//! isolation is used instead.

pub mod poly;
pub mod roots;

use serde::Serialize;

pub use poly::{IntPolynomial, Polynomial};
pub use roots::{cauchy_bound, count_real_roots, largest_real_root, SturmSequence};

use crate::error::{Error, Result};

fn wide(v: usize) -> i128 {
    v as i128
}

/// `f(x)`: characteristic polynomial of the 3×3 quotient of
/// `Q(K_s ∨ (K_{n−2s−1} ∪ K̄_{s+1}))`.
pub fn poly_f(n: usize, s: usize) -> Result<IntPolynomial> {
    let (n, s) = (wide(n), wide(s));
    IntPolynomial::from_wide(&[
        1,
        6 - s - 5 * n,
        8 * n * n - n * s - 24 * n + 8 * s * s + 8 * s + 16,
        -4 * n * n * n + 2 * n * n * s + 20 * n * n - 8 * n * s * s - 14 * n * s - 32 * n
            - 2 * s * s * s
            + 14 * s * s
            + 20 * s
            + 16,
    ])
}

/// `f̃(x) = f(x)` at `s = 1`, whose largest root is `θ(n)`.
pub fn poly_f_tilde(n: usize) -> Result<IntPolynomial> {
    let n = wide(n);
    IntPolynomial::from_wide(&[
        1,
        5 - 5 * n,
        8 * n * n - 25 * n + 32,
        -4 * n * n * n + 22 * n * n - 54 * n + 48,
    ])
}

/// `g(x)`: characteristic polynomial of the 2×2 quotient of
/// `Q(K_s ∨ K̄_{s+2})`. Meaningful for `n = 2s + 2`.
pub fn poly_g(n: usize, s: usize) -> Result<IntPolynomial> {
    let (n, s) = (wide(n), wide(s));
    IntPolynomial::from_wide(&[1, -(n + 6 * s + 2), 4 * n - 8 * s + 5 * n * s + 4 * s * s - 8])
}

/// `h(x)` with the published coefficients for `Γ_{s,s−1}`.
pub fn poly_h(n: usize, s: usize) -> Result<IntPolynomial> {
    let (n, s) = (wide(n), wide(s));
    let (n2, n3, s2, s3) = (n * n, n * n * n, s * s, s * s * s);
    IntPolynomial::from_wide(&[
        1,
        2 * s - 20 * n + 14,
        145 * n2 - 38 * n * s - 214 * n + 12 * s2 + 10 * s + 74,
        -(450 * n3 - 190 * n2 * s - 1052 * n2 + 82 * n * s2 + 189 * n * s + 775 * n - 78 * s2
            + 2 * s
            - 172),
        504 * n2 * n2 - 282 * n3 * s - 1656 * n3 + 150 * n2 * s2 + 517 * n2 * s + 1951 * n2
            - 24 * n * s3
            - 226 * n * s2
            - 220 * n * s
            - 938 * n
            + 12 * s2 * s2
            - 24 * s3
            + 138 * s2
            - 46 * s
            + 144,
    ])
}

/// `h̃(x)` with the published coefficients for `Γ_{n−1,n−2}`; its largest
/// root is `κ(n)`.
pub fn poly_h_tilde(n: usize) -> Result<IntPolynomial> {
    let n = wide(n);
    let (n2, n3) = (n * n, n * n * n);
    IntPolynomial::from_wide(&[
        1,
        12 - 18 * n,
        119 * n2 - 190 * n + 76,
        -(342 * n3 - 915 * n2 + 826 * n - 252),
        360 * n2 * n2 - 1383 * n3 + 2026 * n2 - 1362 * n + 364,
    ])
}

fn check_even_order(n: usize) -> Result<()> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::InvalidParameters(format!(
            "order must be even and at least 4, got {n}"
        )));
    }
    Ok(())
}

fn check_side(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!(
            "side size must be at least 3, got {n}"
        )));
    }
    Ok(())
}

/// `θ(n)`, the largest root of `f̃`. It lies in `(2n − 2, 3n)`, which is
/// passed as the isolation bracket.
pub fn theta(n: usize) -> Result<f64> {
    check_even_order(n)?;
    let p = poly_f_tilde(n)?.to_real();
    let nf = n as f64;
    largest_real_root(&p, Some((2.0 * nf - 2.0, 3.0 * nf)))
}

/// `2n + √(n(n+2)/2) − 2`, the largest root of `g` at `n = 2s + 2`.
pub fn split_threshold(n: usize) -> f64 {
    let nf = n as f64;
    2.0 * nf + (nf * (nf + 2.0) / 2.0).sqrt() - 2.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Theta,
    Split,
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Branch::Theta => "theta",
            Branch::Split => "split",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Theorem1Threshold {
    pub value: f64,
    pub branch: Branch,
}

/// `θ(n)` for `n = 4` or `n ≥ 12`, the split threshold for `n ∈ {6, 8, 10}`.
pub fn theorem1_threshold(n: usize) -> Result<Theorem1Threshold> {
    check_even_order(n)?;
    Ok(if matches!(n, 6 | 8 | 10) {
        Theorem1Threshold {
            value: split_threshold(n),
            branch: Branch::Split,
        }
    } else {
        Theorem1Threshold {
            value: theta(n)?,
            branch: Branch::Theta,
        }
    })
}

/// `κ(n)`, the largest root of `h̃`.
pub fn kappa(n: usize) -> Result<f64> {
    check_side(n)?;
    largest_real_root(&poly_h_tilde(n)?.to_real(), None)
}

fn check_side_and_s(n: usize, s: usize) -> Result<()> {
    check_side(n)?;
    if s == 0 || s >= n {
        return Err(Error::InvalidParameters(format!(
            "need 1 ≤ s ≤ n − 1 (n={n}, s={s})"
        )));
    }
    Ok(())
}

/// `φ(n, s)`, the bracket factor of `h(κ(n)) = (s − n + 1) φ(n, s)`.
pub fn phi(n: usize, s: usize) -> Result<f64> {
    check_side_and_s(n, s)?;
    let k = kappa(n)?;
    let (n, s) = (wide(n), wide(s));
    let c2 = (12 * s - 26 * n - 2) as f64;
    let c1 = (78 * s - 29 * n - 82 * n * s + 108 * n * n - 80) as f64;
    let c0 = (-144 * n * n * n + 138 * n * n * s + 129 * n * n - 12 * n * s * s - 250 * n * s
        + 204 * n
        + 12 * s * s * s
        - 36 * s * s
        + 174 * s
        - 220) as f64;
    Ok(((2.0 * k + c2) * k + c1) * k + c0)
}

/// `ψ(n, s) = 78n² + (218 − 24s)n + 36s² − 72s + 174`.
pub fn psi(n: usize, s: usize) -> Result<f64> {
    check_side_and_s(n, s)?;
    let (n, s) = (wide(n), wide(s));
    Ok((78 * n * n + (218 - 24 * s) * n + 36 * s * s - 72 * s + 174) as f64)
}
