//! Real-root isolation by Sturm sequences.
//!
//! The sequence is built on the squarefree part of the input so that sign
//! change counts equal the number of distinct real roots in a half-open
//! interval `(a, b]`.

use super::poly::{derivative, divide, horner, normalized, squarefree_part, Polynomial};
use crate::error::{Error, Result};

const BISECT_WIDTH: f64 = 1e-10;
const RESIDUAL_TOL: f64 = 1e-9;
const SEQUENCE_TOL: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct SturmSequence {
    chain: Vec<Vec<f64>>,
}

impl SturmSequence {
    pub fn new(p: &Polynomial) -> Self {
        let q = squarefree_part(p.coeffs());
        let mut chain = vec![q.clone()];
        if q.len() > 1 {
            chain.push(normalized(&derivative(&q)));
            loop {
                let len = chain.len();
                let (_, r) = divide(&chain[len - 2], &chain[len - 1]);
                let Some(first) = r.iter().position(|c| c.abs() > SEQUENCE_TOL) else {
                    break;
                };
                chain.push(normalized(&r[first..]).iter().map(|c| -c).collect());
            }
        }
        Self { chain }
    }

    /// The squarefree polynomial the chain starts from.
    pub fn base(&self) -> &[f64] {
        &self.chain[0]
    }

    fn changes<I: Iterator<Item = f64>>(signs: I) -> usize {
        let mut last = 0.0f64;
        let mut count = 0;
        for v in signs.filter(|v| *v != 0.0) {
            if last != 0.0 && (v > 0.0) != (last > 0.0) {
                count += 1;
            }
            last = v;
        }
        count
    }

    pub fn sign_changes(&self, x: f64) -> usize {
        Self::changes(self.chain.iter().map(|c| horner(c, x)))
    }

    fn changes_at_infinity(&self, positive: bool) -> usize {
        Self::changes(self.chain.iter().map(|c| {
            let deg = c.len() - 1;
            if positive || deg % 2 == 0 {
                c[0]
            } else {
                -c[0]
            }
        }))
    }

    /// Distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: f64, hi: f64) -> usize {
        self.sign_changes(lo).saturating_sub(self.sign_changes(hi))
    }

    /// Distinct real roots strictly above `x`.
    pub fn count_above(&self, x: f64) -> usize {
        self.sign_changes(x).saturating_sub(self.changes_at_infinity(true))
    }

    pub fn total_real_roots(&self) -> usize {
        self.changes_at_infinity(false)
            .saturating_sub(self.changes_at_infinity(true))
    }
}

/// `1 + max |cᵢ / c_lead|`; every root lies strictly inside `(−B, B)`.
pub fn cauchy_bound(p: &Polynomial) -> f64 {
    let lead = p.leading().abs();
    1.0 + p.coeffs()[1..]
        .iter()
        .fold(0.0f64, |m, c| m.max(c.abs() / lead))
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
pub fn count_real_roots(p: &Polynomial, lo: f64, hi: f64) -> usize {
    SturmSequence::new(p).count(lo, hi)
}

/// The largest real root of `p`.
///
/// `hint` is a bracket `(lo, hi]` believed to contain the largest root. It
/// is used only if the Sturm counts confirm it; otherwise the Cauchy bracket
/// is used.
pub fn largest_real_root(p: &Polynomial, hint: Option<(f64, f64)>) -> Result<f64> {
    if p.degree() == 0 {
        return Err(Error::InvalidPolynomial("degree 0 has no roots".into()));
    }
    let sturm = SturmSequence::new(p);
    if sturm.total_real_roots() == 0 {
        return Err(Error::NoRealRoot);
    }
    let bound = cauchy_bound(p);
    let (mut lo, mut hi) = match hint {
        Some((a, b)) if a < b && sturm.count_above(b) == 0 && sturm.count(a, b) >= 1 => (a, b),
        _ => (-bound, bound),
    };

    for _ in 0..400 {
        if hi - lo <= BISECT_WIDTH {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if sturm.count(mid, hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    let q = sturm.base();
    let dq = derivative(q);
    let mut x = 0.5 * (lo + hi);
    for _ in 0..50 {
        let slope = horner(&dq, x);
        if slope == 0.0 {
            break;
        }
        let next = x - horner(q, x) / slope;
        if !next.is_finite() || next < lo - BISECT_WIDTH || next > hi + BISECT_WIDTH {
            break;
        }
        let step = (next - x).abs();
        x = next;
        if step <= f64::EPSILON * x.abs().max(1.0) {
            break;
        }
    }

    if p.eval(x).abs() > RESIDUAL_TOL * p.max_abs_coeff() {
        return Err(Error::NoConvergence {
            method: "root polishing",
            iterations: 50,
        });
    }
    Ok(x)
}
