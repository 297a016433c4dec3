//! Classical Jacobi polynomials `P_n^{(γ,δ)}` with exact rational parameters.

use num_traits::{One, Zero};

use crate::algebra::{factorial, pochhammer, rat, Poly, Rational};
use crate::error::{Error, Result};
use crate::verify::report::{Case, VerifyReport};

/// Jacobi parameter pair; both must exceed -1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiParams {
    pub gamma: Rational,
    pub delta: Rational,
}

impl JacobiParams {
    pub fn new(gamma: Rational, delta: Rational) -> Result<Self> {
        let minus_one = -Rational::one();
        if gamma <= minus_one {
            return Err(Error::invalid(format!("gamma must exceed -1 (got {gamma})")));
        }
        if delta <= minus_one {
            return Err(Error::invalid(format!("delta must exceed -1 (got {delta})")));
        }
        Ok(JacobiParams { gamma, delta })
    }
}

/// `P_n^{(γ,δ)}(x)` from its terminating ₂F₁ sum:
///
/// `(γ+1)_n/n! · Σ_k (-n)_k (n+γ+δ+1)_k / ((γ+1)_k k!) · ((1-x)/2)^k`.
pub fn jacobi_poly(n: usize, gamma: &Rational, delta: &Rational) -> Result<Poly> {
    JacobiParams::new(gamma.clone(), delta.clone())?;
    Ok(jacobi_unchecked(n, gamma, delta))
}

/// Same as [`jacobi_poly`] for integer parameters known to be valid.
pub(crate) fn jacobi_int(n: usize, gamma: i64, delta: i64) -> Poly {
    debug_assert!(gamma > -1 && delta > -1);
    jacobi_unchecked(n, &rat(gamma), &rat(delta))
}

fn jacobi_unchecked(n: usize, gamma: &Rational, delta: &Rational) -> Poly {
    let one = Rational::one();
    let g1 = gamma + &one;
    let ab = rat(n as i64) + gamma + delta + &one;

    // hypergeometric term ratios, then Horner in t = (1-x)/2
    let mut terms = Vec::with_capacity(n + 1);
    let mut term = Rational::one();
    terms.push(term.clone());
    for k in 1..=n {
        let km1 = rat(k as i64 - 1);
        term *= (&km1 - rat(n as i64)) * (&ab + &km1);
        term /= (&g1 + &km1) * rat(k as i64);
        terms.push(term.clone());
    }
    let t = Poly::new(vec![Rational::new(1.into(), 2.into()), Rational::new((-1).into(), 2.into())]);
    let mut sum = Poly::zero();
    for c in terms.iter().rev() {
        sum = &(&sum * &t) + &Poly::constant(c.clone());
    }
    sum.scale(&(pochhammer(&g1, n) / factorial(n)))
}

/// Checks the four differentiation formulas for `P_n^{(γ,δ)}`.
///
/// The weighted forms are compared after cancelling the common power-of-`(x∓1)`
/// prefactor via the product rule, so they stay polynomial for rational
/// `γ, δ`:
///
/// * `D P_n^{γ,δ} = ½(n+γ+δ+1) P_{n-1}^{γ+1,δ+1}`
/// * `γ(x+1)P + δ(x-1)P + (x²-1)P' = 2(n+1) P_{n+1}^{γ-1,δ-1}` (γ, δ > 0)
/// * `γP + (x-1)P' = (n+γ) P_n^{γ-1,δ+1}` (γ > 0)
/// * `δP + (x+1)P' = (n+δ) P_n^{γ+1,δ-1}` (δ > 0)
///
/// A formula whose precondition fails is recorded as skipped.
pub fn verify_diff_identities(n: usize, gamma: &Rational, delta: &Rational) -> Result<VerifyReport> {
    let params = JacobiParams::new(gamma.clone(), delta.clone())?;
    let (g, d) = (&params.gamma, &params.delta);
    let tag = format!("gamma={g},delta={d}");
    let one = Rational::one();
    let nr = rat(n as i64);

    let p = jacobi_unchecked(n, g, d);
    let dp = p.derive(1);
    let xp1 = Poly::from_ints(&[1, 1]);
    let xm1 = Poly::from_ints(&[-1, 1]);

    let mut report = VerifyReport::new("diff-identities", format!("n={n},{tag}"));

    // D P_n = ½(n+γ+δ+1) P_{n-1}^{γ+1,δ+1}
    let rhs = if n == 0 {
        Poly::zero()
    } else {
        jacobi_unchecked(n - 1, &(g + &one), &(d + &one))
            .scale(&((&nr + g + d + &one) / rat(2)))
    };
    report.push(Case::checked("derivative", &tag, Some(n), &dp - &rhs));

    if *g <= Rational::zero() || *d <= Rational::zero() {
        report.push(Case::skipped("weighted-both", &tag, Some(n), "requires gamma > 0 and delta > 0"));
    } else {
        let lhs = &(&(&xp1 * &p).scale(g) + &(&xm1 * &p).scale(d)) + &(&(&xm1 * &xp1) * &dp);
        let rhs = jacobi_unchecked(n + 1, &(g - &one), &(d - &one)).scale(&rat(2 * (n as i64 + 1)));
        report.push(Case::checked("weighted-both", &tag, Some(n), &lhs - &rhs));
    }

    if *g <= Rational::zero() {
        report.push(Case::skipped("weighted-minus", &tag, Some(n), "requires gamma > 0"));
    } else {
        let lhs = &p.scale(g) + &(&xm1 * &dp);
        let rhs = jacobi_unchecked(n, &(g - &one), &(d + &one)).scale(&(&nr + g));
        report.push(Case::checked("weighted-minus", &tag, Some(n), &lhs - &rhs));
    }

    if *d <= Rational::zero() {
        report.push(Case::skipped("weighted-plus", &tag, Some(n), "requires delta > 0"));
    } else {
        let lhs = &p.scale(d) + &(&xp1 * &dp);
        let rhs = jacobi_unchecked(n, &(g + &one), &(d - &one)).scale(&(&nr + d));
        report.push(Case::checked("weighted-plus", &tag, Some(n), &lhs - &rhs));
    }

    Ok(report)
}
