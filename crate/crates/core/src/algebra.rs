//! Exact rational scalars and dense univariate polynomials over them.
//!
//! Every quantity in this crate lives in `Q[x]`; nothing here ever touches a
//! float.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` reduced. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Rising factorial `a (a+1) ... (a+k-1)`; the empty product for `k = 0` is 1.
pub fn pochhammer(a: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

/// `pochhammer` for an integer base.
pub fn poch(a: i64, k: usize) -> Rational {
    Rational::from_integer((0..k as i64).map(|i| BigInt::from(a + i)).product())
}

pub fn factorial(n: usize) -> Rational {
    poch(1, n)
}

/// Dense polynomial in `x`; `coeffs[k]` multiplies `x^k`.
///
/// The zero polynomial has no coefficients, and no other value ever carries a
/// trailing zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Poly::from_ints(&[0, 1])
    }

    /// `c * x^k`.
    pub fn monomial(k: usize, c: Rational) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// `(x + shift)^k`, expanded binomially.
    pub fn shifted_power(shift: i64, k: usize) -> Self {
        let base = Poly::from_ints(&[shift, 1]);
        base.pow(k)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Integer numerators over the least common denominator.
    fn integer_form(&self) -> (Vec<BigInt>, BigInt) {
        let den = self.coeffs.iter().fold(BigInt::one(), |d, c| d.lcm(c.denom()));
        let nums = self.coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        (nums, den)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, k: usize) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `k`-fold derivative.
    pub fn derive(&self, k: usize) -> Poly {
        if k == 0 {
            return self.clone();
        }
        if self.coeffs.len() <= k {
            return Poly::zero();
        }
        let coeffs = (k..self.coeffs.len())
            .map(|j| {
                // j!/(j-k)!
                let falling: BigInt = (j - k + 1..=j).map(BigInt::from).product();
                &self.coeffs[j] * falling
            })
            .collect();
        Poly::new(coeffs)
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Poly {
        Poly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Euclidean division `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dj;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Quotient `q` with `self = q * d` exactly; fails on any remainder.
    pub fn exact_div(&self, d: &Poly) -> Result<Poly> {
        if d.is_zero() {
            return Err(Error::invalid("division by the zero polynomial"));
        }
        let (q, r) = self.div_rem(d);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible {
                dividend: self.to_string(),
                divisor: d.to_string(),
            })
        }
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl<'a> Add<&'a Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        Poly::new(coeffs)
    }
}

impl<'a> Sub<&'a Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        Poly::new(coeffs)
    }
}

impl<'a> Mul<&'a Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let (a, da) = self.integer_form();
        let (b, db) = rhs.integer_form();
        let mut prod = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        let den = da * db;
        Poly::new(prod.into_iter().map(|c| Rational::new(c, den.clone())).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &'a Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        *self = &*self - rhs;
    }
}

/// Plain-text rendering in descending powers, e.g. `(3/2)x^2-1/2`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if neg {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let a = c.abs();
            if k == 0 {
                write!(f, "{a}")?;
                continue;
            }
            if !a.is_one() {
                if a.is_integer() {
                    write!(f, "{a}")?;
                } else {
                    write!(f, "({a})")?;
                }
            }
            match k {
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn add_examples() {
        assert_eq!(p(&[1, 1]) + p(&[-1, 1]), p(&[0, 2]));
        assert_eq!(p(&[3, 0, 5]) + Poly::zero(), p(&[3, 0, 5]));
        let sum = p(&[-1, 0, 1]) + p(&[1, 0, -1]);
        assert!(sum.is_zero());
        assert!(sum.coeffs().is_empty());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p(&[-1, 1]) * p(&[1, 1]), p(&[-1, 0, 1]));
        assert_eq!(p(&[2, 7, 1]) * Poly::one(), p(&[2, 7, 1]));
        assert_eq!(p(&[1, 1]).pow(2), p(&[1, 2, 1]));
        assert!((p(&[1, 1]) * Poly::zero()).is_zero());
    }

    #[test]
    fn derive_examples() {
        assert_eq!(p(&[1, 0, -2, 0, 1]).derive(3), p(&[0, 24]));
        assert!(p(&[7]).derive(1).is_zero());
        // d^k x^n = n!/(n-k)! x^(n-k)
        for n in 0..8usize {
            for k in 0..=n {
                let xn = Poly::monomial(n, rat(1));
                let expected = Poly::monomial(n - k, factorial(n) / factorial(n - k));
                assert_eq!(xn.derive(k), expected);
            }
        }
        assert_eq!(p(&[4, 5]).derive(0), p(&[4, 5]));
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(p(&[-1, 0, 1]).exact_div(&p(&[1, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(p(&[3, 4]).exact_div(&Poly::one()).unwrap(), p(&[3, 4]));
        assert!(matches!(
            p(&[1, 0, 1]).exact_div(&p(&[1, 1])),
            Err(Error::NotDivisible { .. })
        ));
        assert!(matches!(
            p(&[1]).exact_div(&Poly::zero()),
            Err(Error::InvalidParam(_))
        ));
        assert!(Poly::zero().exact_div(&p(&[1, 1])).unwrap().is_zero());
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(p(&[0, 1, 1]).reflect(), p(&[0, -1, 1]));
        assert_eq!(p(&[5]).reflect(), p(&[5]));
        let q = p(&[1, -2, 3, 4]);
        assert_eq!(q.reflect().reflect(), q);
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(poch(2, 3), rat(24));
        assert_eq!(pochhammer(&frac(-7, 3), 0), rat(1));
        assert_eq!(poch(1, 3) * poch(2, 3), rat(144));
        assert_eq!(poch(-1, 3), rat(0));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 2]).to_string(), "2x+1");
        assert_eq!(p(&[-1, 0, 1]).to_string(), "x^2-1");
        assert_eq!(Poly::new(vec![frac(-1, 2), rat(0), frac(3, 2)]).to_string(), "(3/2)x^2-1/2");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=10).prop_map(|(a, b)| frac(a, b))
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(arb_rational(), 0..8).prop_map(Poly::new)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn exact_division_round_trip(a in arb_poly(), d in arb_poly()) {
            prop_assume!(!d.is_zero());
            prop_assert_eq!((&a * &d).exact_div(&d).unwrap(), a);
        }

        #[test]
        fn leibniz(a in arb_poly(), b in arb_poly()) {
            let lhs = (&a * &b).derive(1);
            let rhs = &(&a.derive(1) * &b) + &(&a * &b.derive(1));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn canonical_form(a in arb_poly(), b in arb_poly(), k in 0usize..4) {
            for r in [&a + &b, &a - &b, &a * &b, a.derive(k), a.reflect(), a.scale(&rat(0))] {
                prop_assert!(r.coeffs().last().is_none_or(|c| !c.is_zero()));
            }
        }
    }
}
