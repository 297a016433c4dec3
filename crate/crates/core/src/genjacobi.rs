//! Koornwinder's generalized Jacobi polynomials
//! `P_n^{α,β,M,N} = P_n^{α,β} + M Q_n + N R_n + MN S_n`.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::algebra::{factorial, poch, Poly, Rational};
use crate::error::{Error, Result};
use crate::jacobi::jacobi_int;

/// Weight parameters: Jacobi exponents `α, β ∈ ℕ₀` and point masses
/// `M` at `x = -1`, `N` at `x = +1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Params {
    pub alpha: u32,
    pub beta: u32,
    pub mass_neg: Rational,
    pub mass_pos: Rational,
}

impl Params {
    pub fn new(alpha: u32, beta: u32, mass_neg: Rational, mass_pos: Rational) -> Result<Self> {
        if mass_neg.is_negative() {
            return Err(Error::invalid(format!("M must be nonnegative (got {mass_neg})")));
        }
        if mass_pos.is_negative() {
            return Err(Error::invalid(format!("N must be nonnegative (got {mass_pos})")));
        }
        Ok(Params { alpha, beta, mass_neg, mass_pos })
    }

    /// Plain Jacobi weight, no point masses.
    pub fn jacobi(alpha: u32, beta: u32) -> Self {
        Params {
            alpha,
            beta,
            mass_neg: Rational::zero(),
            mass_pos: Rational::zero(),
        }
    }

    /// Parameters of the system reflected by `x -> -x`: `(β, α, N, M)`.
    pub fn reflected(&self) -> Self {
        Params {
            alpha: self.beta,
            beta: self.alpha,
            mass_neg: self.mass_pos.clone(),
            mass_pos: self.mass_neg.clone(),
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "alpha={},beta={},M={},N={}",
            self.alpha, self.beta, self.mass_neg, self.mass_pos
        )
    }
}

fn ab(alpha: u32, beta: u32) -> (i64, i64) {
    (i64::from(alpha), i64::from(beta))
}

/// `q_n = (α+β+2)_n (β+2)_{n-1} / (2 n! (α+1)_{n-1})`, `n ≥ 1`.
pub fn coeff_q(n: usize, alpha: u32, beta: u32) -> Result<Rational> {
    if n < 1 {
        return Err(Error::invalid("q_n is defined for n >= 1"));
    }
    let (a, b) = ab(alpha, beta);
    Ok(poch(a + b + 2, n) * poch(b + 2, n - 1)
        / (Rational::from_integer(2.into()) * factorial(n) * poch(a + 1, n - 1)))
}

/// `r_n = (α+β+2)_n (α+2)_{n-1} / (2 n! (β+1)_{n-1})`, `n ≥ 1`.
pub fn coeff_r(n: usize, alpha: u32, beta: u32) -> Result<Rational> {
    if n < 1 {
        return Err(Error::invalid("r_n is defined for n >= 1"));
    }
    let (a, b) = ab(alpha, beta);
    Ok(poch(a + b + 2, n) * poch(a + 2, n - 1)
        / (Rational::from_integer(2.into()) * factorial(n) * poch(b + 1, n - 1)))
}

/// `s_n = (α+β+2)_n (α+β+2)_{n+1} / ((α+1)(β+1) 4 (n-1)! n!)`, `n ≥ 2`.
pub fn coeff_s(n: usize, alpha: u32, beta: u32) -> Result<Rational> {
    if n < 2 {
        return Err(Error::invalid("s_n is defined for n >= 2"));
    }
    let (a, b) = ab(alpha, beta);
    let den = Rational::from_integer(((a + 1) * (b + 1) * 4).into()) * factorial(n - 1) * factorial(n);
    Ok(poch(a + b + 2, n) * poch(a + b + 2, n + 1) / den)
}

/// `Q_n = q_n (x+1) P_{n-1}^{α,β+2}`; zero for `n = 0`.
pub fn poly_q(n: usize, alpha: u32, beta: u32) -> Poly {
    if n == 0 {
        return Poly::zero();
    }
    let (a, b) = ab(alpha, beta);
    let q = coeff_q(n, alpha, beta).expect("n >= 1");
    (Poly::from_ints(&[1, 1]) * jacobi_int(n - 1, a, b + 2)).scale(&q)
}

/// `R_n = r_n (x-1) P_{n-1}^{α+2,β}`; zero for `n = 0`.
pub fn poly_r(n: usize, alpha: u32, beta: u32) -> Poly {
    if n == 0 {
        return Poly::zero();
    }
    let (a, b) = ab(alpha, beta);
    let r = coeff_r(n, alpha, beta).expect("n >= 1");
    (Poly::from_ints(&[-1, 1]) * jacobi_int(n - 1, a + 2, b)).scale(&r)
}

/// `S_n = s_n (x²-1) P_{n-2}^{α+2,β+2}`; zero for `n < 2`.
pub fn poly_s(n: usize, alpha: u32, beta: u32) -> Poly {
    if n < 2 {
        return Poly::zero();
    }
    let (a, b) = ab(alpha, beta);
    let s = coeff_s(n, alpha, beta).expect("n >= 2");
    (Poly::from_ints(&[-1, 0, 1]) * jacobi_int(n - 2, a + 2, b + 2)).scale(&s)
}

/// The classical component `P_n^{α,β}`.
pub fn poly_p(n: usize, alpha: u32, beta: u32) -> Poly {
    let (a, b) = ab(alpha, beta);
    jacobi_int(n, a, b)
}

/// The four building blocks of one generalized polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub p: Poly,
    pub q: Poly,
    pub r: Poly,
    pub s: Poly,
}

impl Components {
    pub fn new(n: usize, alpha: u32, beta: u32) -> Self {
        Components {
            p: poly_p(n, alpha, beta),
            q: poly_q(n, alpha, beta),
            r: poly_r(n, alpha, beta),
            s: poly_s(n, alpha, beta),
        }
    }

    pub fn combine(&self, mass_neg: &Rational, mass_pos: &Rational) -> Poly {
        let mn = mass_neg * mass_pos;
        let mut y = self.p.clone();
        y += &self.q.scale(mass_neg);
        y += &self.r.scale(mass_pos);
        y += &self.s.scale(&mn);
        y
    }
}

/// `P_n^{α,β,M,N}(x)`.
pub fn gen_jacobi(n: usize, params: &Params) -> Poly {
    Components::new(n, params.alpha, params.beta).combine(&params.mass_neg, &params.mass_pos)
}
