//! Exact construction of Koornwinder's generalized Jacobi polynomials, the
//! higher-order differential operators they diagonalize, and machine checks of
//! the eigenvalue, symmetry and orthogonality identities those operators obey.
//!
//! All arithmetic is over `Q`; there is no floating point anywhere.

pub mod algebra;
pub mod error;
pub mod genjacobi;
pub mod inner;
pub mod jacobi;
pub mod operators;
pub mod rng;
pub mod serde_exact;
pub mod verify;

pub use algebra::{frac, pochhammer, rat, Poly, Rational};
pub use error::{Error, Result};
pub use genjacobi::{gen_jacobi, Params};
pub use verify::report::{Case, Residual, VerifyReport};

/// Parses `"p/q"` or `"p"` into an exact rational. Decimal notation is
/// rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::invalid(format!("'{s}' is not an exact rational of the form p or p/q"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, d),
        None => (t, "1"),
    };
    let int = |v: &str| -> Result<num_bigint::BigInt> {
        let v = v.trim();
        let digits = v.strip_prefix(['-', '+']).unwrap_or(v);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        v.parse().map_err(|_| bad())
    };
    let (n, d) = (int(num)?, int(den)?);
    if num_traits::Zero::is_zero(&d) {
        return Err(Error::invalid(format!("'{s}' has a zero denominator")));
    }
    Ok(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_exact_rationals() {
        assert_eq!(parse_rational("3/6").unwrap(), frac(1, 2));
        assert_eq!(parse_rational("-7").unwrap(), rat(-7));
        assert_eq!(parse_rational(" 4/-8 ").unwrap(), frac(-1, 2));
        for bad in ["0.5", "1e3", "", "1/0", "x", "1/2/3", "--1"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }
}
