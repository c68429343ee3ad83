//! Dominant-pole asymptotics for rational generating functions and the
//! specific leading-order estimates for `a(n, m)`, `b(n, m)` and the expected
//! values of the part count and the last part.
//!
//! Estimates are `f64`; they are only ever compared against exact counts.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::closed_forms::{dn_closed, fib, pn_closed};
use crate::error::{Error, Result};
use crate::series::{BivariatePolynomial, RationalGF};

/// `(1 + √5) / 2`
pub fn golden_ratio() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

/// Relative tolerance for accepting `1/β` as a root of the denominator.
pub const POLE_TOLERANCE: f64 = 1e-9;

/// Growth base `β` and multiplicity `ν` of the smallest-modulus pole `1/β`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleSpec {
    beta: f64,
    multiplicity: u32,
}

impl PoleSpec {
    pub fn new(beta: f64, multiplicity: u32) -> Result<Self> {
        if !(beta > 0.0 && beta.is_finite()) {
            return Err(Error::OutOfRange(format!("pole base must be positive, got {beta}")));
        }
        if multiplicity == 0 {
            return Err(Error::OutOfRange("pole multiplicity must be at least 1".into()));
        }
        Ok(PoleSpec { beta, multiplicity })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }
}

fn scale_of(p: &BivariatePolynomial, x: f64) -> f64 {
    p.terms()
        .map(|((i, _), c)| {
            use num_traits::ToPrimitive;
            c.to_f64().unwrap_or(f64::NAN).abs() * x.abs().powi(i as i32)
        })
        .sum::<f64>()
        .max(1.0)
}

/// `ν (-β)^ν f(1/β) / g^{(ν)}(1/β)`: the constant multiplying `β^n n^{ν-1}`.
///
/// Checks that `g` and its first `ν - 1` derivatives vanish at `1/β`.
pub fn dominant_constant(f: &RationalGF, pole: PoleSpec) -> Result<f64> {
    if !f.is_univariate() {
        return Err(Error::OutOfRange("dominant-pole estimate needs a series in x alone".into()));
    }
    let rho = 1.0 / pole.beta;
    let mut g = f.denominator().clone();
    for _ in 0..pole.multiplicity {
        let residual = g.eval_f64(rho, 1.0).abs() / scale_of(&g, rho);
        if residual > POLE_TOLERANCE {
            return Err(Error::InvalidPole {
                multiplicity: pole.multiplicity,
                residual,
            });
        }
        g = g.diff_x();
    }
    let nu = pole.multiplicity as i32;
    let top = f.numerator().eval_f64(rho, 1.0);
    let bottom = g.eval_f64(rho, 1.0);
    Ok(f64::from(nu) * (-pole.beta).powi(nu) * top / bottom)
}

/// Leading-order estimate of `[x^n] f(x)` from the dominant pole.
pub fn dominant_asymptotic(f: &RationalGF, pole: PoleSpec, n: usize) -> Result<f64> {
    let c = dominant_constant(f, pole)?;
    let nu = pole.multiplicity as i32;
    Ok(c * pole.beta.powf(n as f64) * (n as f64).powi(nu - 1))
}

/// `n^{m-1} / (2^{⌊m/2⌋} (m-1)!)`, the fixed-`m` growth of `a(n, m)`.
pub fn a_asymptotic(n: usize, m: usize) -> Result<f64> {
    if m < 1 {
        return Err(Error::OutOfRange("a(n, m) estimate needs m >= 1".into()));
    }
    // accumulate in log space to survive large n and m
    let log_fact: f64 = (1..m).map(|i| (i as f64).ln()).sum();
    let log_v = (m as f64 - 1.0) * (n as f64).ln() - (m / 2) as f64 * 2f64.ln() - log_fact;
    Ok(log_v.exp())
}

/// `φ^{n-m-2} / √5 · (1 + φ^{1-m})`, the fixed-`m` growth of `b(n, m)`.
pub fn b_asymptotic(n: usize, m: usize) -> Result<f64> {
    if m < 1 || n < 2 * m {
        return Err(Error::OutOfRange(format!(
            "b(n, m) estimate needs m >= 1 and n >= 2m, got n = {n}, m = {m}"
        )));
    }
    let phi = golden_ratio();
    let (n, m) = (n as f64, m as f64);
    Ok(phi.powf(n - m - 2.0) / 5f64.sqrt() * (1.0 + phi.powf(1.0 - m)))
}

fn ratio(num: num_bigint::BigUint, den: num_bigint::BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `p(n) / F_n`, exact.
pub fn expected_parts(n: usize) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::OutOfRange("expected value needs n >= 1".into()));
    }
    Ok(ratio(pn_closed(n), fib(n)))
}

/// `d(n) / F_n`, exact.
pub fn expected_last(n: usize) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::OutOfRange("expected value needs n >= 1".into()));
    }
    Ok(ratio(dn_closed(n), fib(n)))
}

/// Limiting slope `3/√5 - 1` of the expected number of parts.
pub fn expected_parts_slope() -> f64 {
    3.0 / 5f64.sqrt() - 1.0
}

/// Limit `√5` of the expected last part.
pub fn expected_last_limit() -> f64 {
    5f64.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{gf_fibonacci, gf_total_parts};
    use num_traits::{One, ToPrimitive};

    #[test]
    fn fibonacci_constant() {
        let c = dominant_constant(&gf_fibonacci(), PoleSpec::new(golden_ratio(), 1).unwrap()).unwrap();
        assert!((c - 1.0 / 5f64.sqrt()).abs() < 1e-12, "{c}");
    }

    #[test]
    fn total_parts_constant() {
        let c = dominant_constant(&gf_total_parts(), PoleSpec::new(golden_ratio(), 2).unwrap()).unwrap();
        assert!((c - (3.0 - 5f64.sqrt()) / 5.0).abs() < 1e-12, "{c}");
    }

    #[test]
    fn geometric_is_one() {
        let f = RationalGF::new(
            BivariatePolynomial::one(),
            BivariatePolynomial::from_terms(&[(1, 0, 0), (-1, 1, 0)]),
        )
        .unwrap();
        let pole = PoleSpec::new(1.0, 1).unwrap();
        for n in [0, 1, 17, 300] {
            assert!((dominant_asymptotic(&f, pole, n).unwrap() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn wrong_pole_rejected() {
        let pole = PoleSpec::new(2.0, 1).unwrap();
        assert!(matches!(
            dominant_constant(&gf_fibonacci(), pole),
            Err(Error::InvalidPole { .. })
        ));
        // φ is a simple root, not a double one
        let double = PoleSpec::new(golden_ratio(), 2).unwrap();
        assert!(dominant_constant(&gf_fibonacci(), double).is_err());
        assert!(PoleSpec::new(-1.0, 1).is_err());
        assert!(PoleSpec::new(1.0, 0).is_err());
    }

    #[test]
    fn a_estimate_edges() {
        assert!(a_asymptotic(10, 0).is_err());
        for n in [1, 5, 600] {
            assert!((a_asymptotic(n, 1).unwrap() - 1.0).abs() < 1e-12);
        }
        assert!((a_asymptotic(10, 3).unwrap() - 25.0).abs() < 1e-9);
    }

    #[test]
    fn b_estimate_edges() {
        assert!(b_asymptotic(6, 3).is_ok());
        assert!(b_asymptotic(5, 3).is_err());
        assert!(b_asymptotic(5, 0).is_err());
    }

    #[test]
    fn expected_values_small() {
        assert!(expected_last(1).unwrap().is_one());
        assert_eq!(expected_parts(6).unwrap().to_f64().unwrap(), 21.0 / 8.0);
        assert!(expected_parts(0).is_err());
    }
}
