//! The differential operators of the generalized Jacobi equation.
//!
//! Four components act on polynomials:
//!
//! * `L₂`: the classical second-order Jacobi operator,
//! * `L̃`: order `2β+4`, attached to the mass `M` at `x = -1`,
//! * `L̂`: order `2α+4`, attached to the mass `N` at `x = +1`,
//! * `L_full`: order `2α+2β+6`, attached to the product `MN`.
//!
//! Each is evaluated through its conjugated-derivative closed form. The
//! factorized products of second-order operators and the parameter-shifted
//! product for `L̃` are provided as independent routes to the same operators.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{factorial, poch, rat, Poly, Rational};
use crate::error::{Error, Result};
use crate::genjacobi::Params;

fn xm1_pow(k: u32) -> Poly {
    Poly::shifted_power(-1, k as usize)
}

fn xp1_pow(k: u32) -> Poly {
    Poly::shifted_power(1, k as usize)
}

fn x2m1() -> Poly {
    Poly::from_ints(&[-1, 0, 1])
}

fn int(v: u32) -> i64 {
    i64::from(v)
}

/// `b_{α,β} = (α+2)! (β+1)_{α+1}`.
pub fn const_b(alpha: u32, beta: u32) -> Rational {
    factorial(alpha as usize + 2) * poch(int(beta) + 1, alpha as usize + 1)
}

/// `c_{α,β} = (α+1)(β+1)(α+β+3)((α+β+1)!)²`.
pub fn const_c(alpha: u32, beta: u32) -> Rational {
    let (a, b) = (int(alpha), int(beta));
    let f = factorial((a + b + 1) as usize);
    rat((a + 1) * (b + 1) * (a + b + 3)) * &f * &f
}

/// `λ_n = n(n+α+β+1)`.
pub fn eigen_lambda2(n: usize, alpha: u32, beta: u32) -> Rational {
    let n = n as i64;
    rat(n * (n + int(alpha) + int(beta) + 1))
}

/// Which higher-order eigenvalue component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HighOrder {
    /// `Λ_{2α+4,n}^{α,β} = (n)_{α+2} (n+β)_{α+2}`.
    Side,
    /// `Λ_{2α+2β+6,n}^{α,β} = (n-1)_{α+β+3} (n)_{α+β+3}`.
    Full,
}

pub fn eigen_high(kind: HighOrder, n: usize, alpha: u32, beta: u32) -> Rational {
    let n = n as i64;
    match kind {
        HighOrder::Side => {
            let k = alpha as usize + 2;
            poch(n, k) * poch(n + int(beta), k)
        }
        HighOrder::Full => {
            let k = (alpha + beta + 3) as usize;
            poch(n - 1, k) * poch(n, k)
        }
    }
}

/// Eigenvalue of `L̃ = L̃_{2β+4}^{β,α}` on `Q_n^{α,β}`.
pub fn eigen_ltilde(n: usize, alpha: u32, beta: u32) -> Rational {
    eigen_high(HighOrder::Side, n, beta, alpha)
}

/// Eigenvalue of `L̂ = L_{2α+4}^{α,β}` on `R_n^{α,β}`.
pub fn eigen_lhat(n: usize, alpha: u32, beta: u32) -> Rational {
    eigen_high(HighOrder::Side, n, alpha, beta)
}

pub fn eigen_lfull(n: usize, alpha: u32, beta: u32) -> Rational {
    eigen_high(HighOrder::Full, n, alpha, beta)
}

/// Weights of the three higher-order components in the combined operator:
/// `(M/b_{β,α}, N/b_{α,β}, MN/c_{α,β})`.
pub fn combined_weights(params: &Params) -> (Rational, Rational, Rational) {
    let (a, b) = (params.alpha, params.beta);
    (
        &params.mass_neg / const_b(b, a),
        &params.mass_pos / const_b(a, b),
        &params.mass_neg * &params.mass_pos / const_c(a, b),
    )
}

/// `λ_n + (M/b_{β,α})Λ̃ + (N/b_{α,β})Λ̂ + (MN/c_{α,β})Λ_full`.
pub fn eigen_combined(n: usize, params: &Params) -> Rational {
    let (a, b) = (params.alpha, params.beta);
    let (wm, wn, wmn) = combined_weights(params);
    eigen_lambda2(n, a, b) + wm * eigen_ltilde(n, a, b) + wn * eigen_lhat(n, a, b) + wmn * eigen_lfull(n, a, b)
}

/// `(x²-1)y'' + [α-β+(α+β+2)x]y'` for arbitrary rational `α, β`.
pub fn apply_l2_general(y: &Poly, alpha: &Rational, beta: &Rational) -> Poly {
    let c1 = Poly::new(vec![alpha - beta, alpha + beta + rat(2)]);
    &(&x2m1() * &y.derive(2)) + &(&c1 * &y.derive(1))
}

/// Classical Jacobi operator `L₂^{α,β}`.
pub fn apply_l2(y: &Poly, alpha: u32, beta: u32) -> Poly {
    apply_l2_general(y, &rat(int(alpha)), &rat(int(beta)))
}

/// `L₂` through its self-adjoint form
/// `(x-1)^{-α}(x+1)^{-β} D[(x-1)^{α+1}(x+1)^{β+1} D y]`.
pub fn apply_l2_conjugated(y: &Poly, alpha: u32, beta: u32) -> Result<Poly> {
    let inner = &(&xm1_pow(alpha + 1) * &xp1_pow(beta + 1)) * &y.derive(1);
    inner.derive(1).exact_div(&(&xm1_pow(alpha) * &xp1_pow(beta)))
}

/// `L̃_{2β+4}^{β,α} y = (x+1)(x-1)^{-α} D^{β+2}{(x-1)^{α+β+2} D^{β+2}[(x+1)^{β+1} y]}`.
pub fn apply_ltilde(y: &Poly, alpha: u32, beta: u32) -> Result<Poly> {
    let k = beta as usize + 2;
    let inner = (&xp1_pow(beta + 1) * y).derive(k);
    let outer = (&xm1_pow(alpha + beta + 2) * &inner).derive(k);
    let q = outer.exact_div(&xm1_pow(alpha))?;
    Ok(&Poly::from_ints(&[1, 1]) * &q)
}

/// `L_{2α+4}^{α,β} y = (x-1)(x+1)^{-β} D^{α+2}{(x+1)^{α+β+2} D^{α+2}[(x-1)^{α+1} y]}`.
pub fn apply_lhat(y: &Poly, alpha: u32, beta: u32) -> Result<Poly> {
    let k = alpha as usize + 2;
    let inner = (&xm1_pow(alpha + 1) * y).derive(k);
    let outer = (&xp1_pow(alpha + beta + 2) * &inner).derive(k);
    let q = outer.exact_div(&xp1_pow(beta))?;
    Ok(&Poly::from_ints(&[-1, 1]) * &q)
}

/// `L_{2α+2β+6}^{α,β} y = (x²-1) D^{k}{(x-1)^{β+1}(x+1)^{α+1} D^{k}[(x-1)^{α+1}(x+1)^{β+1} y]}`
/// with `k = α+β+3`. Note the swapped exponents in the middle weight.
pub fn apply_lfull(y: &Poly, alpha: u32, beta: u32) -> Poly {
    let k = (alpha + beta + 3) as usize;
    let v = &xm1_pow(alpha + 1) * &xp1_pow(beta + 1);
    let v_swapped = &xm1_pow(beta + 1) * &xp1_pow(alpha + 1);
    let inner = (&v * y).derive(k);
    &x2m1() * &(&v_swapped * &inner).derive(k)
}

/// The full generalized Jacobi operator
/// `L₂ + (M/b_{β,α})L̃ + (N/b_{α,β})L̂ + (MN/c_{α,β})L_full`.
pub fn apply_combined(y: &Poly, params: &Params) -> Result<Poly> {
    let (a, b) = (params.alpha, params.beta);
    let (wm, wn, wmn) = combined_weights(params);
    let mut out = apply_l2(y, a, b);
    if !wm.is_zero() {
        out += &apply_ltilde(y, a, b)?.scale(&wm);
    }
    if !wn.is_zero() {
        out += &apply_lhat(y, a, b)?.scale(&wn);
    }
    if !wmn.is_zero() {
        out += &apply_lfull(y, a, b).scale(&wmn);
    }
    Ok(out)
}

/// The three products of second-order factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factorized {
    /// `b_{β,α} A`, acting on multiples of `x+1`.
    A,
    /// `b_{α,β} B`, acting on multiples of `x-1`.
    B,
    /// `c_{α,β} C`, acting on multiples of `x²-1`.
    C,
}

/// Applies `∏_j {L₂ + shift + j(α+β+1-j)}`, where the shift is
/// `2(β+1)/(x+1)` (A), `-2(α+1)/(x-1)` (B) or both (C), and `j` runs from
/// the top of the range down to zero.
///
/// The result is already multiplied by the normalizing constant of the
/// product (`b_{β,α}`, `b_{α,β}` or `c_{α,β}`), so it compares directly with
/// [`apply_ltilde`], [`apply_lhat`] and [`apply_lfull`]. The rational shift
/// terms are realized by exact division; an input outside the divisible
/// subspace fails with `NotDivisible`.
pub fn apply_factorized(kind: Factorized, y: &Poly, alpha: u32, beta: u32) -> Result<Poly> {
    let (a, b) = (int(alpha), int(beta));
    let xp1 = Poly::from_ints(&[1, 1]);
    let xm1 = Poly::from_ints(&[-1, 1]);
    let top = match kind {
        Factorized::A => b + 1,
        Factorized::B => a + 1,
        Factorized::C => a + b + 2,
    };
    let mut cur = y.clone();
    for j in (0..=top).rev() {
        let mut next = apply_l2(&cur, alpha, beta);
        if matches!(kind, Factorized::A | Factorized::C) {
            next += &cur.exact_div(&xp1)?.scale(&rat(2 * (b + 1)));
        }
        if matches!(kind, Factorized::B | Factorized::C) {
            next -= &cur.exact_div(&xm1)?.scale(&rat(2 * (a + 1)));
        }
        next += &cur.scale(&rat(j * (a + b + 1 - j)));
        cur = next;
    }
    Ok(cur)
}

/// `L̃` as `L₂^{α,-1} ∘ ∏_{j=0}^{β} {L₂^{α,β+1} + (α+1+j)(β+1-j)}`.
pub fn apply_product_form(y: &Poly, alpha: u32, beta: u32) -> Poly {
    let (a, b) = (int(alpha), int(beta));
    let (ra, rb1) = (rat(a), rat(b + 1));
    let mut cur = y.clone();
    for j in (0..=b).rev() {
        let shift = rat((a + 1 + j) * (b + 1 - j));
        cur = &apply_l2_general(&cur, &ra, &rb1) + &cur.scale(&shift);
    }
    apply_l2_general(&cur, &ra, &rat(-1))
}

/// Operators that can be expanded into explicit coefficient tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    L2,
    Ltilde,
    Lhat,
    Lfull,
    Combined,
}

impl OperatorKind {
    pub const ALL: [OperatorKind; 5] = [
        OperatorKind::L2,
        OperatorKind::Ltilde,
        OperatorKind::Lhat,
        OperatorKind::Lfull,
        OperatorKind::Combined,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OperatorKind::L2 => "L2",
            OperatorKind::Ltilde => "Ltilde",
            OperatorKind::Lhat => "Lhat",
            OperatorKind::Lfull => "Lfull",
            OperatorKind::Combined => "Combined",
        }
    }

    /// Nominal order, an upper bound for the effective order.
    pub fn nominal_order(self, alpha: u32, beta: u32) -> usize {
        let (a, b) = (alpha as usize, beta as usize);
        match self {
            OperatorKind::L2 => 2,
            OperatorKind::Ltilde => 2 * b + 4,
            OperatorKind::Lhat => 2 * a + 4,
            OperatorKind::Lfull | OperatorKind::Combined => 2 * a + 2 * b + 6,
        }
    }

    pub fn apply(self, y: &Poly, params: &Params) -> Result<Poly> {
        let (a, b) = (params.alpha, params.beta);
        match self {
            OperatorKind::L2 => Ok(apply_l2(y, a, b)),
            OperatorKind::Ltilde => apply_ltilde(y, a, b),
            OperatorKind::Lhat => apply_lhat(y, a, b),
            OperatorKind::Lfull => Ok(apply_lfull(y, a, b)),
            OperatorKind::Combined => apply_combined(y, params),
        }
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for OperatorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OperatorKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::invalid(format!("unknown operator kind '{s}' (expected L2, Ltilde, Lhat, Lfull or Combined)")))
    }
}

/// `Σ_i e_i(x) D^i` with strictly increasing orders and nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffOperator {
    terms: Vec<(usize, Poly)>,
}

impl DiffOperator {
    pub fn terms(&self) -> &[(usize, Poly)] {
        &self.terms
    }

    /// Highest derivative order with a nonzero coefficient; 0 for the zero operator.
    pub fn order(&self) -> usize {
        self.terms.last().map_or(0, |(i, _)| *i)
    }

    pub fn coefficient(&self, order: usize) -> Poly {
        self.terms
            .iter()
            .find(|(i, _)| *i == order)
            .map_or_else(Poly::zero, |(_, c)| c.clone())
    }

    pub fn apply(&self, y: &Poly) -> Poly {
        self.terms
            .iter()
            .fold(Poly::zero(), |acc, (i, c)| &acc + &(c * &y.derive(*i)))
    }
}

/// Recovers the coefficient table of an operator by probing monomials.
///
/// With `L x^k = Σ_{i≤k} e_i(x) k!/(k-i)! x^{k-i}`, each probe determines one
/// new coefficient `e_k`. Probes run up to the nominal order; the reported
/// order is the highest nonzero term.
pub fn expand_operator(kind: OperatorKind, params: &Params) -> Result<DiffOperator> {
    let order = kind.nominal_order(params.alpha, params.beta);
    let constant_image = kind.apply(&Poly::one(), params)?;
    if !constant_image.is_zero() {
        return Err(Error::InconsistentExpansion {
            order: 0,
            degree: constant_image.degree().unwrap_or(0),
        });
    }
    let mut coeffs: Vec<Poly> = vec![Poly::zero()];
    for k in 1..=order {
        let mut rest = kind.apply(&Poly::monomial(k, Rational::one()), params)?;
        for (i, e) in coeffs.iter().enumerate().skip(1) {
            let falling = factorial(k) / factorial(k - i);
            rest -= &(e * &Poly::monomial(k - i, falling));
        }
        let e = rest.scale(&(Rational::one() / factorial(k)));
        if let Some(d) = e.degree() {
            if d > k {
                return Err(Error::InconsistentExpansion { order: k, degree: d });
            }
        }
        coeffs.push(e);
    }
    let terms = coeffs
        .into_iter()
        .enumerate()
        .skip(1)
        .filter(|(_, e)| !e.is_zero())
        .collect();
    Ok(DiffOperator { terms })
}
