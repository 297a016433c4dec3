//! Identity suites over parameter grids.
//!
//! Each suite evaluates both sides of an exact polynomial (or scalar) identity
//! and records their difference; a case passes only when that residual is
//! exactly zero.

pub mod report;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::algebra::{factorial, frac, poch, rat, Poly, Rational};
use crate::error::{Error, Result};
use crate::genjacobi::{coeff_q, gen_jacobi, poly_q, poly_r, poly_s, Components, Params};
use crate::inner::{
    bilinear_u, bilinear_v, bilinear_vt, bilinear_w, boundary_closed_forms, boundary_values, h_norm,
    hat_transform, inner_product, symmetry_defect, tilde_transform, weighted_integral, gram_matrix,
};
use crate::jacobi::{jacobi_int, verify_diff_identities};
use crate::operators::{
    apply_combined, apply_product_form, apply_factorized, apply_l2, apply_lfull, apply_lhat, apply_ltilde, const_b,
    const_c, eigen_combined, eigen_lambda2, eigen_lfull, eigen_lhat, eigen_ltilde, expand_operator, Factorized,
    OperatorKind,
};
use crate::rng::SplitMix64;

pub use report::{Case, Residual, VerifyReport};

fn x2m1() -> Poly {
    Poly::from_ints(&[-1, 0, 1])
}

fn ab_tag(alpha: u32, beta: u32) -> String {
    format!("alpha={alpha},beta={beta}")
}

/// Converts an operator error into a failing case rather than aborting the
/// suite: a divisibility failure inside an operator is itself a falsified
/// identity.
fn checked_or_fail(label: &str, params: &str, n: Option<usize>, r: Result<Poly>) -> Case {
    match r {
        Ok(p) => Case::checked(label, params, n, p),
        Err(e) => {
            let mut c = Case::predicate(label, params, n, false);
            c.label = format!("{label} [{e}]");
            c
        }
    }
}

/// Eigen-equation of the combined operator on `y_n = P_n^{α,β,M,N}` for
/// `n ≤ nmax`, plus the top coefficients and effective orders of the
/// expanded operators.
pub fn verify_eigen_equation(nmax: usize, params: &Params) -> VerifyReport {
    verify_eigen_equation_with_fault(nmax, params, None)
}

/// [`verify_eigen_equation`] with an optional deliberately corrupted case: when
/// `fault = Some(n)`, the constant coefficient of `y_n` is shifted by one
/// before the check. Used to self-test the harness.
pub fn verify_eigen_equation_with_fault(nmax: usize, params: &Params, fault: Option<usize>) -> VerifyReport {
    let tag = params.to_string();
    let mut report = VerifyReport::new("eigen", format!("n<={nmax},{tag}"));
    for n in 0..=nmax {
        let mut y = gen_jacobi(n, params);
        if fault == Some(n) {
            y += &Poly::one();
        }
        let lhs = apply_combined(&y, params).map(|ly| &ly - &y.scale(&eigen_combined(n, params)));
        report.push(checked_or_fail("eigen-equation", &tag, Some(n), lhs));
    }
    report.extend(leading_coefficient_cases(params));
    report
}

fn leading_coefficient_cases(params: &Params) -> Vec<Case> {
    let (a, b) = (params.alpha, params.beta);
    let tag = ab_tag(a, b);
    let expected = [
        (OperatorKind::L2, 2usize, x2m1()),
        (OperatorKind::Ltilde, 2 * b as usize + 4, x2m1().pow(b as usize + 2)),
        (OperatorKind::Lhat, 2 * a as usize + 4, x2m1().pow(a as usize + 2)),
        (OperatorKind::Lfull, 2 * (a + b) as usize + 6, x2m1().pow((a + b) as usize + 3)),
    ];
    let mut cases = Vec::new();
    for (kind, order, top) in expected {
        match expand_operator(kind, params) {
            Ok(op) => {
                cases.push(Case::predicate(format!("{kind} effective order = {order}"), &tag, Some(order), op.order() == order));
                cases.push(Case::checked(format!("{kind} top coefficient"), &tag, Some(order), &op.coefficient(order) - &top));
            }
            Err(e) => cases.push(Case::predicate(format!("{kind} expansion [{e}]"), &tag, Some(order), false)),
        }
    }
    if let Ok(op) = expand_operator(OperatorKind::L2, params) {
        let c1 = Poly::from_ints(&[i64::from(a) - i64::from(b), i64::from(a + b + 2)]);
        cases.push(Case::checked("L2 first-order coefficient", &tag, Some(1), &op.coefficient(1) - &c1));
    }
    cases
}

/// The four component eigen-equations and the two differentiation chains
/// used to derive the `S_n` equation.
pub fn verify_components(nmax: usize, alpha: u32, beta: u32) -> VerifyReport {
    let tag = ab_tag(alpha, beta);
    let (a, b) = (i64::from(alpha), i64::from(beta));
    let k = (alpha + beta + 3) as usize;
    let mut report = VerifyReport::new("components", format!("n<={nmax},{tag}"));
    for n in 0..=nmax {
        let c = Components::new(n, alpha, beta);
        report.push(Case::checked("classical", &tag, Some(n), &apply_l2(&c.p, alpha, beta) - &c.p.scale(&eigen_lambda2(n, alpha, beta))));
        report.push(checked_or_fail(
            "Ltilde on Q",
            &tag,
            Some(n),
            apply_ltilde(&c.q, alpha, beta).map(|v| &v - &c.q.scale(&eigen_ltilde(n, alpha, beta))),
        ));
        report.push(checked_or_fail(
            "Lhat on R",
            &tag,
            Some(n),
            apply_lhat(&c.r, alpha, beta).map(|v| &v - &c.r.scale(&eigen_lhat(n, alpha, beta))),
        ));
        report.push(Case::checked("Lfull on S", &tag, Some(n), &apply_lfull(&c.s, alpha, beta) - &c.s.scale(&eigen_lfull(n, alpha, beta))));

        // D^k[(x-1)^{α+2}(x+1)^{β+2} P_{n-2}^{α+2,β+2}] = 2(n-1)_k P_{n-1}^{β+1,α+1}
        if n >= 2 {
            let w = &Poly::shifted_power(-1, alpha as usize + 2) * &Poly::shifted_power(1, beta as usize + 2);
            let lhs = (&w * &jacobi_int(n - 2, a + 2, b + 2)).derive(k);
            let rhs = jacobi_int(n - 1, b + 1, a + 1).scale(&(rat(2) * poch(n as i64 - 1, k)));
            report.push(Case::checked("raising chain", &tag, Some(n), &lhs - &rhs));
        } else {
            report.push(Case::skipped("raising chain", &tag, Some(n), "requires n >= 2"));
        }

        // D^k[(x-1)^{β+1}(x+1)^{α+1} P_{n-1}^{β+1,α+1}] = 2(n)_{α+β+1} D² P_n = ½(n)_k P_{n-2}^{α+2,β+2}
        if n >= 1 {
            let w = &Poly::shifted_power(-1, beta as usize + 1) * &Poly::shifted_power(1, alpha as usize + 1);
            let lhs = (&w * &jacobi_int(n - 1, b + 1, a + 1)).derive(k);
            let mid = c.p.derive(2).scale(&(rat(2) * poch(n as i64, k - 2)));
            let rhs = if n >= 2 {
                jacobi_int(n - 2, a + 2, b + 2).scale(&(poch(n as i64, k) / rat(2)))
            } else {
                Poly::zero()
            };
            report.push(Case::checked("lowering chain (first form)", &tag, Some(n), &lhs - &mid));
            report.push(Case::checked("lowering chain (second form)", &tag, Some(n), &mid - &rhs));
        } else {
            report.push(Case::skipped("lowering chain", &tag, Some(n), "requires n >= 1"));
        }

        match verify_diff_identities(n, &rat(a), &rat(b)) {
            Ok(r) => report.absorb(r),
            Err(e) => report.push(Case::predicate(format!("diff-identities [{e}]"), &tag, Some(n), false)),
        }
    }
    report
}

/// Factorized products: eigen-equations on `Q_n, R_n, S_n` and agreement
/// with the elementary operators on monomial probes.
pub fn verify_factorizations(nmax: usize, alpha: u32, beta: u32) -> VerifyReport {
    let tag = ab_tag(alpha, beta);
    let mut report = VerifyReport::new("factorized", format!("n<={nmax},{tag}"));
    for n in 0..=nmax {
        if n >= 1 {
            let q = poly_q(n, alpha, beta);
            report.push(checked_or_fail(
                "A on Q",
                &tag,
                Some(n),
                apply_factorized(Factorized::A, &q, alpha, beta).map(|v| &v - &q.scale(&eigen_ltilde(n, alpha, beta))),
            ));
            let r = poly_r(n, alpha, beta);
            report.push(checked_or_fail(
                "B on R",
                &tag,
                Some(n),
                apply_factorized(Factorized::B, &r, alpha, beta).map(|v| &v - &r.scale(&eigen_lhat(n, alpha, beta))),
            ));
        }
        if n >= 2 {
            let s = poly_s(n, alpha, beta);
            report.push(checked_or_fail(
                "C on S",
                &tag,
                Some(n),
                apply_factorized(Factorized::C, &s, alpha, beta).map(|v| &v - &s.scale(&eigen_lfull(n, alpha, beta))),
            ));
        }
    }
    report.extend(operator_difference_cases(alpha, beta));
    report
}

/// Elementary minus factorized operator on `(x+1)x^k`, `(x-1)x^k`,
/// `(x²-1)x^k` up to order+4, plus the annihilation of constants (and
/// linears for the full operator) that completes the equality on all
/// polynomials.
pub fn operator_difference_cases(alpha: u32, beta: u32) -> Vec<Case> {
    let tag = ab_tag(alpha, beta);
    let probes = [
        (Factorized::A, Poly::from_ints(&[1, 1]), 2 * beta as usize + 4),
        (Factorized::B, Poly::from_ints(&[-1, 1]), 2 * alpha as usize + 4),
        (Factorized::C, x2m1(), 2 * (alpha + beta) as usize + 6),
    ];
    let mut cases = Vec::new();
    for (kind, factor, order) in probes {
        for k in 0..=order + 4 {
            let y = &factor * &Poly::monomial(k, Rational::one());
            let elementary = match kind {
                Factorized::A => apply_ltilde(&y, alpha, beta),
                Factorized::B => apply_lhat(&y, alpha, beta),
                Factorized::C => Ok(apply_lfull(&y, alpha, beta)),
            };
            let diff = elementary.and_then(|e| apply_factorized(kind, &y, alpha, beta).map(|f| &e - &f));
            cases.push(checked_or_fail(&format!("{kind:?} vs elementary on probe"), &tag, y.degree(), diff));
        }
    }
    let one = Poly::one();
    cases.push(checked_or_fail("Ltilde annihilates constants", &tag, Some(0), apply_ltilde(&one, alpha, beta)));
    cases.push(checked_or_fail("Lhat annihilates constants", &tag, Some(0), apply_lhat(&one, alpha, beta)));
    cases.push(Case::checked("Lfull annihilates constants", &tag, Some(0), apply_lfull(&one, alpha, beta)));
    cases.push(Case::checked("Lfull annihilates x", &tag, Some(1), apply_lfull(&Poly::x(), alpha, beta)));
    cases
}

/// The sixth-order equation for `α = β = 0`, assembled literally from its
/// displayed derivative expressions (independent of the operator module).
pub fn verify_sixth_order(nmax: usize, mass_neg: &Rational, mass_pos: &Rational) -> Result<VerifyReport> {
    let params = Params::new(0, 0, mass_neg.clone(), mass_pos.clone())?;
    let tag = params.to_string();
    let (m, nn) = (mass_neg, mass_pos);
    let xp1 = Poly::from_ints(&[1, 1]);
    let xm1 = Poly::from_ints(&[-1, 1]);
    let sq = x2m1();
    let mut report = VerifyReport::new("sixth-order", format!("n<={nmax},{tag}"));

    report.push(Case::checked("b_{0,0} = 2", &tag, None, const_b(0, 0) - rat(2)));
    report.push(Case::checked("c_{0,0} = 3", &tag, None, const_c(0, 0) - rat(3)));

    for n in 0..=nmax {
        let y = gen_jacobi(n, &params);
        let t1 = (&sq * &y.derive(1)).derive(1);
        let t2 = &xp1 * &(&xm1.pow(2) * &(&xp1 * &y).derive(2)).derive(2);
        let t3 = &xm1 * &(&xp1.pow(2) * &(&xm1 * &y).derive(2)).derive(2);
        let t4 = &sq * &(&sq * &(&sq * &y).derive(3)).derive(3);
        let lhs = &(&(&t1 + &t2.scale(&(m / rat(2)))) + &t3.scale(&(nn / rat(2)))) + &t4.scale(&(m * nn / rat(3)));
        let ni = n as i64;
        let n2 = poch(ni, 2);
        let eig = &n2 * (Rational::one() + (m + nn) / rat(2) * &n2 + m * nn / rat(3) * poch(ni - 1, 4));
        let rhs = y.scale(&eig);
        report.push(Case::checked("sixth-order equation", &tag, Some(n), &lhs - &rhs));
        report.push(Case::checked("eigenvalue matches combined", &tag, Some(n), &eig - eigen_combined(n, &params)));
    }
    Ok(report)
}

/// The five mixed identities obtained by collecting powers of `M` and `N`.
pub fn verify_mixed(nmax: usize, alpha: u32, beta: u32) -> VerifyReport {
    let tag = ab_tag(alpha, beta);
    let mut report = VerifyReport::new("mixed", format!("n<={nmax},{tag}"));
    let inv_bt = Rational::one() / const_b(beta, alpha);
    let inv_bh = Rational::one() / const_b(alpha, beta);
    let inv_c = Rational::one() / const_c(alpha, beta);
    for n in 0..=nmax {
        let c = Components::new(n, alpha, beta);
        let outcome = (|| -> Result<[Poly; 5]> {
            let l2 = |y: &Poly| &apply_l2(y, alpha, beta) - &y.scale(&eigen_lambda2(n, alpha, beta));
            let lt = |y: &Poly| apply_ltilde(y, alpha, beta).map(|v| (&v - &y.scale(&eigen_ltilde(n, alpha, beta))).scale(&inv_bt));
            let lh = |y: &Poly| apply_lhat(y, alpha, beta).map(|v| (&v - &y.scale(&eigen_lhat(n, alpha, beta))).scale(&inv_bh));
            let lf = |y: &Poly| (&apply_lfull(y, alpha, beta) - &y.scale(&eigen_lfull(n, alpha, beta))).scale(&inv_c);
            Ok([
                &l2(&c.q) + &lt(&c.p)?,
                &l2(&c.r) + &lh(&c.p)?,
                &lt(&c.s)? + &lf(&c.q),
                &lh(&c.s)? + &lf(&c.r),
                &(&(&l2(&c.s) + &lt(&c.r)?) + &lh(&c.q)?) + &lf(&c.p),
            ])
        })();
        let labels = ["M-terms", "N-terms", "M^2 N-terms", "M N^2-terms", "MN-terms"];
        match outcome {
            Ok(res) => {
                for (label, r) in labels.iter().zip(res) {
                    report.push(Case::checked(*label, &tag, Some(n), r));
                }
            }
            Err(e) => report.push(Case::predicate(format!("mixed identities [{e}]"), &tag, Some(n), false)),
        }
    }
    report
}

/// Parameter-shifted product form of `L̃`: agreement on monomials up to
/// `dmax`, the two-term expansion of `Q_n` for `1 ≤ n ≤ nmax`, and the
/// single-mass equation (`N = 0`) with the operator in product form.
pub fn verify_product_form(dmax: usize, nmax: usize, alpha: u32, beta: u32) -> VerifyReport {
    let tag = ab_tag(alpha, beta);
    let (a, b) = (i64::from(alpha), i64::from(beta));
    let mut report = VerifyReport::new("product-form", format!("d<={dmax},n<={nmax},{tag}"));
    for k in 0..=dmax {
        let y = Poly::monomial(k, Rational::one());
        let diff = apply_ltilde(&y, alpha, beta).map(|t| &apply_product_form(&y, alpha, beta) - &t);
        report.push(checked_or_fail("product form vs Ltilde on x^k", &tag, Some(k), diff));
    }
    for n in 1..=nmax {
        let ni = n as i64;
        let q = coeff_q(n, alpha, beta).expect("n >= 1");
        let two_term = &jacobi_int(n - 1, a, b + 1).scale(&rat(2 * (ni + b + 1))) + &jacobi_int(n, a, b + 1).scale(&rat(2 * ni));
        let rhs = two_term.scale(&(q / rat(2 * ni + a + b + 1)));
        report.push(Case::checked("two-term Q_n", &tag, Some(n), &poly_q(n, alpha, beta) - &rhs));
    }
    let norm = factorial(beta as usize + 2) * poch(a + 1, beta as usize + 1);
    report.push(Case::checked("normalization = b_{beta,alpha}", &tag, None, &norm - const_b(beta, alpha)));
    for m in [frac(1, 3), rat(1), rat(2)] {
        let params = Params::new(alpha, beta, m.clone(), Rational::zero()).expect("nonnegative");
        let ptag = params.to_string();
        for n in 0..=nmax {
            let ni = n as i64;
            let y = gen_jacobi(n, &params);
            let classical = &apply_l2(&y, alpha, beta) - &y.scale(&rat(ni * (ni + a + b + 1)));
            let high = &apply_product_form(&y, alpha, beta) - &y.scale(&(poch(ni, beta as usize + 2) * poch(ni + a, beta as usize + 2)));
            let lhs = &classical + &high.scale(&(&m / &norm));
            report.push(Case::checked("single-mass equation", &ptag, Some(n), lhs));
        }
    }
    report
}

/// Randomized symmetry checks: the combined operator's defect and each of
/// the integration-by-parts identities for its components.
pub fn verify_symmetry(trials: usize, degmax: usize, params: &Params, seed: u64) -> VerifyReport {
    let (alpha, beta) = (params.alpha, params.beta);
    let (a, b) = (i64::from(alpha), i64::from(beta));
    let tag = params.to_string();
    let mut report = VerifyReport::new("symmetry", format!("trials={trials},deg<={degmax},{tag}")).with_seed(seed);
    let jac = Params::jacobi(alpha, beta);
    let (m1, p1) = (-Rational::one(), Rational::one());
    let (b_ab, b_ba, c) = (const_b(alpha, beta), const_b(beta, alpha), const_c(alpha, beta));

    // constant identity closing the full-operator integration by parts
    let lhs = rat(2).pow((alpha + beta + 2) as i32)
        * factorial(alpha as usize + 1)
        * factorial(beta as usize + 1)
        * factorial((alpha + beta + 3) as usize)
        / h_norm(alpha, beta);
    let mid = &c / &b_ab * rat(2) * poch(b + 1, alpha as usize + 2) * factorial(alpha as usize + 2);
    let right = &c / &b_ba * rat(2) * poch(a + 1, beta as usize + 2) * factorial(beta as usize + 2);
    report.push(Case::checked("boundary constant (left)", &tag, None, &lhs - &mid));
    report.push(Case::checked("boundary constant (right)", &tag, None, &mid - &right));

    let mut rng = SplitMix64::new(seed);
    for t in 0..trials {
        let f = rng.poly(degmax);
        let g = rng.poly(degmax);
        let deg = f.degree().max(g.degree());
        let label = |s: &str| format!("{s} #{t}");
        let outcome = (|| -> Result<Vec<(String, Rational)>> {
            let w = |h: &Poly| weighted_integral(h, alpha, beta);
            let df = f.derive(1);
            let mut out = vec![(label("combined defect"), symmetry_defect(&f, &g, params)?)];
            out.push((label("L2 form"), w(&(&apply_l2(&f, alpha, beta) * &g)) - bilinear_u(&f, &g, alpha, beta)));
            out.push((
                label("Ltilde form"),
                w(&(&apply_ltilde(&f, alpha, beta)? * &g))
                    - bilinear_vt(&f, &g, alpha, beta)
                    - rat(2 * (b + 1)) * &b_ba * df.eval(&m1) * g.eval(&m1),
            ));
            out.push((
                label("Lhat form"),
                w(&(&apply_lhat(&f, alpha, beta)? * &g)) - bilinear_v(&f, &g, alpha, beta)
                    + rat(2 * (a + 1)) * &b_ab * df.eval(&p1) * g.eval(&p1),
            ));
            out.push((
                label("Lfull form"),
                w(&(&apply_lfull(&f, alpha, beta) * &g)) - bilinear_w(&f, &g, alpha, beta)
                    - &c / &b_ab * rat(2) * poch(b + 1, alpha as usize + 2) * hat_transform(&f, alpha).eval(&m1) * g.eval(&m1)
                    + &c / &b_ba * rat(2) * poch(a + 1, beta as usize + 2) * tilde_transform(&f, beta).eval(&p1) * g.eval(&p1),
            ));
            let actual = boundary_values(&f, alpha, beta)?;
            let closed = boundary_closed_forms(&f, alpha, beta);
            let boundary = actual
                .entries()
                .iter()
                .zip(closed.entries())
                .fold(Rational::zero(), |acc, ((_, x), (_, y))| acc + (*x - y).abs());
            out.push((label("endpoint values"), boundary));
            // jacobi-only scalar product must be symmetric for L2 as well
            out.push((label("L2 defect"), symmetry_defect(&f, &g, &jac)?));
            Ok(out)
        })();
        match outcome {
            Ok(rows) => {
                for (l, r) in rows {
                    report.push(Case::checked(l, &tag, deg, r));
                }
            }
            Err(e) => report.push(Case::predicate(label(&format!("symmetry [{e}]")), &tag, deg, false)),
        }
    }
    report
}

/// Gram matrix off-diagonals, positive diagonal, strictly increasing
/// eigenvalues for `n ≤ nmax+5`, and `(Λ_n - Λ_m)(y_n, y_m) = defect(y_n, y_m)`.
pub fn verify_orthogonality(nmax: usize, params: &Params) -> VerifyReport {
    let tag = params.to_string();
    let mut report = VerifyReport::new("orthogonality", format!("n<={nmax},{tag}"));
    let gram = gram_matrix(nmax, params);
    let ys: Vec<Poly> = (0..=nmax).map(|n| gen_jacobi(n, params)).collect();
    let lys: Vec<Result<Poly>> = ys.iter().map(|y| apply_combined(y, params)).collect();
    let eig: Vec<Rational> = (0..=nmax + 6).map(|n| eigen_combined(n, params)).collect();
    for n in 0..=nmax {
        report.push(Case::predicate("diagonal positive", &tag, Some(n), gram[n][n].is_positive()));
        for m in n + 1..=nmax {
            report.push(Case::checked(format!("G[{n}][{m}]"), &tag, Some(n), gram[n][m].clone()));
            let chain = match (&lys[n], &lys[m]) {
                (Ok(ln), Ok(lm)) => {
                    let defect = inner_product(ln, &ys[m], params).total - inner_product(&ys[n], lm, params).total;
                    Ok((&eig[n] - &eig[m]) * &gram[n][m] - defect)
                }
                (Err(e), _) | (_, Err(e)) => Err(e.clone()),
            };
            match chain {
                Ok(r) => report.push(Case::checked(format!("eigenvalue chain ({n},{m})"), &tag, Some(n), r)),
                Err(e) => report.push(Case::predicate(format!("eigenvalue chain ({n},{m}) [{e}]"), &tag, Some(n), false)),
            }
        }
    }
    for n in 0..nmax + 5 {
        report.push(Case::predicate("eigenvalue increasing", &tag, Some(n), eig[n] < eig[n + 1]));
    }
    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Eigen,
    Components,
    Factorized,
    SixthOrder,
    Mixed,
    ProductForm,
    Symmetry,
    Orthogonality,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Eigen,
        Suite::Components,
        Suite::Factorized,
        Suite::SixthOrder,
        Suite::Mixed,
        Suite::ProductForm,
        Suite::Symmetry,
        Suite::Orthogonality,
    ];

    /// Short identifier also accepted by [`FromStr`].
    pub fn short_id(self) -> Option<&'static str> {
        match self {
            Suite::Eigen => Some("thm21"),
            Suite::Components => Some("prop22"),
            Suite::Factorized => Some("prop23"),
            Suite::SixthOrder => Some("cor24"),
            Suite::Mixed => Some("cor25"),
            Suite::ProductForm => Some("duran"),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Eigen => "eigen",
            Suite::Components => "components",
            Suite::Factorized => "factorized",
            Suite::SixthOrder => "sixth-order",
            Suite::Mixed => "mixed",
            Suite::ProductForm => "product-form",
            Suite::Symmetry => "symmetry",
            Suite::Orthogonality => "orthogonality",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s || x.short_id() == Some(s))
            .ok_or_else(|| Error::invalid(format!("unknown suite '{s}'")))
    }
}

/// Parameter grid for [`run_suite`].
#[derive(Debug, Clone)]
pub struct GridConfig {
    pub alpha_max: u32,
    pub beta_max: u32,
    pub nmax: usize,
    pub masses_neg: Vec<Rational>,
    pub masses_pos: Vec<Rational>,
    pub seed: u64,
    pub trials: usize,
    /// Random-polynomial degree cap; `None` means `2α+2β+8` per point.
    pub degmax: Option<usize>,
    /// Corrupt `y_n` at the first grid point of the `eigen` suite.
    pub fault: Option<usize>,
}

impl Default for GridConfig {
    fn default() -> Self {
        let masses = vec![rat(0), frac(1, 3), rat(1), rat(2)];
        GridConfig {
            alpha_max: 3,
            beta_max: 3,
            nmax: 12,
            masses_neg: masses.clone(),
            masses_pos: masses,
            seed: 42,
            trials: 50,
            degmax: None,
            fault: None,
        }
    }
}

impl GridConfig {
    fn describe(&self) -> String {
        let list = |v: &[Rational]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        format!(
            "alpha<={},beta<={},n<={},M in {{{}}},N in {{{}}}",
            self.alpha_max,
            self.beta_max,
            self.nmax,
            list(&self.masses_neg),
            list(&self.masses_pos)
        )
    }

    fn ab_points(&self) -> Vec<(u32, u32)> {
        (0..=self.alpha_max)
            .flat_map(|a| (0..=self.beta_max).map(move |b| (a, b)))
            .collect()
    }

    fn param_points(&self) -> Result<Vec<Params>> {
        let mut out = Vec::new();
        for (a, b) in self.ab_points() {
            for m in &self.masses_neg {
                for n in &self.masses_pos {
                    out.push(Params::new(a, b, m.clone(), n.clone())?);
                }
            }
        }
        Ok(out)
    }
}

/// Runs one suite (or all of them) across the grid. Points are evaluated in
/// parallel; case order in the report is deterministic.
pub fn run_suite(suite: Suite, grid: &GridConfig) -> Result<VerifyReport> {
    let mut report = VerifyReport::new(suite.name(), grid.describe()).with_seed(grid.seed);
    let nmax = grid.nmax;
    let parts: Vec<VerifyReport> = match suite {
        Suite::All => {
            for s in Suite::EACH {
                report.absorb(run_suite(s, grid)?);
            }
            return Ok(report);
        }
        Suite::Eigen => grid
            .param_points()?
            .par_iter()
            .enumerate()
            .map(|(i, p)| verify_eigen_equation_with_fault(nmax, p, if i == 0 { grid.fault } else { None }))
            .collect(),
        Suite::Components => grid.ab_points().par_iter().map(|&(a, b)| verify_components(nmax, a, b)).collect(),
        Suite::Factorized => grid.ab_points().par_iter().map(|&(a, b)| verify_factorizations(nmax, a, b)).collect(),
        Suite::Mixed => grid.ab_points().par_iter().map(|&(a, b)| verify_mixed(nmax, a, b)).collect(),
        Suite::ProductForm => grid
            .ab_points()
            .par_iter()
            .map(|&(a, b)| verify_product_form(2 * b as usize + 8, nmax, a, b))
            .collect(),
        Suite::SixthOrder => {
            let pairs: Vec<_> = grid
                .masses_neg
                .iter()
                .flat_map(|m| grid.masses_pos.iter().map(move |n| (m, n)))
                .collect();
            pairs
                .par_iter()
                .map(|(m, n)| verify_sixth_order(nmax, m, n))
                .collect::<Result<_>>()?
        }
        Suite::Symmetry => grid
            .param_points()?
            .par_iter()
            .map(|p| {
                let deg = grid.degmax.unwrap_or(2 * (p.alpha + p.beta) as usize + 8);
                verify_symmetry(grid.trials, deg, p, grid.seed)
            })
            .collect(),
        Suite::Orthogonality => grid.param_points()?.par_iter().map(|p| verify_orthogonality(nmax, p)).collect(),
    };
    for part in parts {
        report.extend(part.cases);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_pass(r: &VerifyReport) {
        let fails: Vec<_> = r.failures().take(5).collect();
        assert!(r.all_pass, "{}: {fails:#?}", r.suite);
        assert!(r.passed() > 0);
    }

    #[test]
    fn eigen_equation_examples() {
        assert_pass(&verify_eigen_equation(10, &Params::new(0, 0, rat(1), rat(1)).unwrap()));
        assert_pass(&verify_eigen_equation(10, &Params::jacobi(2, 1)));
        assert_pass(&verify_eigen_equation(8, &Params::new(1, 2, frac(1, 2), rat(3)).unwrap()));
    }

    #[test]
    fn injected_fault_is_localized() {
        let params = Params::new(1, 0, rat(1), frac(1, 3)).unwrap();
        let r = verify_eigen_equation_with_fault(6, &params, Some(4));
        assert!(!r.all_pass);
        let fails: Vec<_> = r.failures().collect();
        assert_eq!(fails.len(), 1);
        assert_eq!(fails[0].n, Some(4));
        // L(y+1) - Λ(y+1) = -Λ_4
        assert_eq!(fails[0].residual, Some(Residual::Poly(Poly::constant(-eigen_combined(4, &params)))));
    }

    #[test]
    fn component_examples() {
        assert_pass(&verify_components(12, 0, 0));
        let r = verify_components(3, 1, 0);
        assert_pass(&r);
        let chain = r.cases.iter().find(|c| c.label == "raising chain" && c.n == Some(3)).unwrap();
        assert!(chain.pass);
        let skipped = r.cases.iter().find(|c| c.label == "raising chain" && c.n == Some(0)).unwrap();
        assert!(skipped.is_skipped());
    }

    #[test]
    fn factorization_and_mixed_examples() {
        assert_pass(&verify_factorizations(8, 1, 2));
        assert_pass(&verify_mixed(8, 0, 0));
        assert_pass(&verify_mixed(6, 2, 1));
    }

    #[test]
    fn sixth_order_examples() {
        assert_pass(&verify_sixth_order(10, &rat(1), &rat(1)).unwrap());
        assert_pass(&verify_sixth_order(8, &frac(7, 3), &frac(1, 2)).unwrap());
        assert!(verify_sixth_order(2, &rat(-1), &rat(0)).is_err());
    }

    #[test]
    fn product_form_examples() {
        assert_pass(&verify_product_form(10, 6, 1, 1));
    }

    #[test]
    fn symmetry_examples() {
        let params = Params::new(1, 1, frac(1, 3), rat(2)).unwrap();
        let r = verify_symmetry(5, 12, &params, 42);
        assert_pass(&r);
        assert_eq!(r, verify_symmetry(5, 12, &params, 42));
    }

    #[test]
    fn orthogonality_examples() {
        assert_pass(&verify_orthogonality(6, &Params::new(0, 0, rat(1), rat(1)).unwrap()));
        assert_pass(&verify_orthogonality(6, &Params::jacobi(1, 2)));
    }

    #[test]
    fn small_grid_all_suites() {
        let grid = GridConfig {
            alpha_max: 1,
            beta_max: 1,
            nmax: 5,
            masses_neg: vec![rat(0), frac(1, 3)],
            masses_pos: vec![rat(2)],
            trials: 3,
            ..GridConfig::default()
        };
        let r = run_suite(Suite::All, &grid).unwrap();
        assert_pass(&r);
        for s in Suite::EACH {
            assert!(r.cases.iter().any(|c| c.label.starts_with(&format!("{s}/"))), "{s}");
        }
        let faulty = run_suite(Suite::Eigen, &GridConfig { fault: Some(3), ..grid }).unwrap();
        assert_eq!(faulty.failures().count(), 1);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("cor24".parse::<Suite>().unwrap(), Suite::SixthOrder);
        assert_eq!("duran".parse::<Suite>().unwrap(), Suite::ProductForm);
        assert!("thm99".parse::<Suite>().is_err());
    }
}
