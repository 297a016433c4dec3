//! Weighted scalar products with endpoint masses and the symmetric integral
//! forms used to show the combined operator is self-adjoint.
//!
//! Every integrand is a polynomial times `(1-x)^a (1+x)^b` with integer
//! exponents, so all integrals are evaluated exactly by binomial expansion and
//! monomial integration over `[-1, 1]`.

use num_traits::{One, Zero};

use crate::algebra::{factorial, rat, Poly, Rational};
use crate::error::Result;
use crate::genjacobi::{gen_jacobi, Params};
use crate::operators::{apply_combined, apply_l2, apply_lfull, apply_lhat, apply_ltilde};

/// `(1-x)^a (1+x)^b` expanded.
pub fn jacobi_weight(a: u32, b: u32) -> Poly {
    let one_minus_x = Poly::from_ints(&[1, -1]);
    &one_minus_x.pow(a as usize) * &Poly::shifted_power(1, b as usize)
}

/// `∫_{-1}^{1} f(x) dx`.
pub fn integrate(f: &Poly) -> Rational {
    f.coeffs()
        .iter()
        .enumerate()
        .filter(|(k, _)| k % 2 == 0)
        .fold(Rational::zero(), |acc, (k, c)| acc + c * Rational::new(2.into(), (k as i64 + 1).into()))
}

/// `∫_{-1}^{1} f(x) (1-x)^a (1+x)^b dx`, without normalization.
pub fn raw_weighted_integral(f: &Poly, a: u32, b: u32) -> Rational {
    integrate(&(f * &jacobi_weight(a, b)))
}

/// `h_{α,β} = 2^{α+β+1} α! β! / (α+β+1)!`.
pub fn h_norm(alpha: u32, beta: u32) -> Rational {
    rat(2).pow((alpha + beta + 1) as i32) * factorial(alpha as usize) * factorial(beta as usize)
        / factorial((alpha + beta + 1) as usize)
}

/// `h_{α,β}^{-1} ∫ f (1-x)^α (1+x)^β dx`.
pub fn weighted_integral(f: &Poly, alpha: u32, beta: u32) -> Rational {
    raw_weighted_integral(f, alpha, beta) / h_norm(alpha, beta)
}

/// `(f, g)_{w(α,β,M,N)}` split into its three parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerProductResult {
    pub integral_part: Rational,
    /// `M f(-1) g(-1)`
    pub mass_neg1: Rational,
    /// `N f(1) g(1)`
    pub mass_pos1: Rational,
    pub total: Rational,
}

pub fn inner_product(f: &Poly, g: &Poly, params: &Params) -> InnerProductResult {
    let integral_part = weighted_integral(&(f * g), params.alpha, params.beta);
    let (m1, p1) = (-Rational::one(), Rational::one());
    let mass_neg1 = &params.mass_neg * f.eval(&m1) * g.eval(&m1);
    let mass_pos1 = &params.mass_pos * f.eval(&p1) * g.eval(&p1);
    let total = &integral_part + &mass_neg1 + &mass_pos1;
    InnerProductResult {
        integral_part,
        mass_neg1,
        mass_pos1,
        total,
    }
}

/// `U(f,g) = h⁻¹ ∫ f' g' (1-x)^{α+1} (1+x)^{β+1} dx`.
pub fn bilinear_u(f: &Poly, g: &Poly, alpha: u32, beta: u32) -> Rational {
    raw_weighted_integral(&(&f.derive(1) * &g.derive(1)), alpha + 1, beta + 1) / h_norm(alpha, beta)
}

/// `D^{β+2}[(x+1)^{β+1} f]`, the building block of `Ṽ`.
pub fn tilde_transform(f: &Poly, beta: u32) -> Poly {
    (&Poly::shifted_power(1, beta as usize + 1) * f).derive(beta as usize + 2)
}

/// `D^{α+2}[(x-1)^{α+1} f]`, the building block of `V`.
pub fn hat_transform(f: &Poly, alpha: u32) -> Poly {
    (&Poly::shifted_power(-1, alpha as usize + 1) * f).derive(alpha as usize + 2)
}

/// `D^{α+β+3}[(x-1)^{α+1}(x+1)^{β+1} f]`, the building block of `W`.
pub fn full_transform(f: &Poly, alpha: u32, beta: u32) -> Poly {
    let v = &Poly::shifted_power(-1, alpha as usize + 1) * &Poly::shifted_power(1, beta as usize + 1);
    (&v * f).derive((alpha + beta + 3) as usize)
}

/// `Ṽ^{β,α}(f,g) = h⁻¹ ∫ D^{β+2}[(x+1)^{β+1}f] D^{β+2}[(x+1)^{β+1}g] (1-x)^{α+β+2} dx`.
pub fn bilinear_vt(f: &Poly, g: &Poly, alpha: u32, beta: u32) -> Rational {
    let prod = &tilde_transform(f, beta) * &tilde_transform(g, beta);
    raw_weighted_integral(&prod, alpha + beta + 2, 0) / h_norm(alpha, beta)
}

/// `V^{α,β}(f,g) = h⁻¹ ∫ D^{α+2}[(x-1)^{α+1}f] D^{α+2}[(x-1)^{α+1}g] (1+x)^{α+β+2} dx`.
pub fn bilinear_v(f: &Poly, g: &Poly, alpha: u32, beta: u32) -> Rational {
    let prod = &hat_transform(f, alpha) * &hat_transform(g, alpha);
    raw_weighted_integral(&prod, 0, alpha + beta + 2) / h_norm(alpha, beta)
}

/// `W^{α,β}(f,g) = h⁻¹ ∫ D^{k}[v f] D^{k}[v g] (1-x)^{β+1} (1+x)^{α+1} dx`,
/// `k = α+β+3`, `v = (x-1)^{α+1}(x+1)^{β+1}`.
pub fn bilinear_w(f: &Poly, g: &Poly, alpha: u32, beta: u32) -> Rational {
    let prod = &full_transform(f, alpha, beta) * &full_transform(g, alpha, beta);
    raw_weighted_integral(&prod, beta + 1, alpha + 1) / h_norm(alpha, beta)
}

/// Values of the four operators applied to `f` at `x = ±1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryValues {
    pub l2_neg: Rational,
    pub l2_pos: Rational,
    pub ltilde_neg: Rational,
    pub ltilde_pos: Rational,
    pub lhat_neg: Rational,
    pub lhat_pos: Rational,
    pub lfull_neg: Rational,
    pub lfull_pos: Rational,
}

impl BoundaryValues {
    pub fn entries(&self) -> [(&'static str, &Rational); 8] {
        [
            ("L2(-1)", &self.l2_neg),
            ("L2(+1)", &self.l2_pos),
            ("Ltilde(-1)", &self.ltilde_neg),
            ("Ltilde(+1)", &self.ltilde_pos),
            ("Lhat(-1)", &self.lhat_neg),
            ("Lhat(+1)", &self.lhat_pos),
            ("Lfull(-1)", &self.lfull_neg),
            ("Lfull(+1)", &self.lfull_pos),
        ]
    }
}

/// Evaluates each operator image of `f` at the endpoints.
pub fn boundary_values(f: &Poly, alpha: u32, beta: u32) -> Result<BoundaryValues> {
    let (m1, p1) = (-Rational::one(), Rational::one());
    let l2 = apply_l2(f, alpha, beta);
    let lt = apply_ltilde(f, alpha, beta)?;
    let lh = apply_lhat(f, alpha, beta)?;
    let lf = apply_lfull(f, alpha, beta);
    Ok(BoundaryValues {
        l2_neg: l2.eval(&m1),
        l2_pos: l2.eval(&p1),
        ltilde_neg: lt.eval(&m1),
        ltilde_pos: lt.eval(&p1),
        lhat_neg: lh.eval(&m1),
        lhat_pos: lh.eval(&p1),
        lfull_neg: lf.eval(&m1),
        lfull_pos: lf.eval(&p1),
    })
}

/// The closed-form endpoint values, computed from `f` alone:
///
/// * `L₂f(∓1) = ∓2(β+1 | α+1) f'(∓1)`
/// * `L̃f(-1) = 0`, `L̃f(1) = 2(α+1)_{β+2} D^{β+2}[(x+1)^{β+1}f](1)`
/// * `L̂f(1) = 0`, `L̂f(-1) = -2(β+1)_{α+2} D^{α+2}[(x-1)^{α+1}f](-1)`
/// * `L_full f(±1) = 0`
pub fn boundary_closed_forms(f: &Poly, alpha: u32, beta: u32) -> BoundaryValues {
    let (a, b) = (i64::from(alpha), i64::from(beta));
    let (m1, p1) = (-Rational::one(), Rational::one());
    let df = f.derive(1);
    BoundaryValues {
        l2_neg: rat(-2 * (b + 1)) * df.eval(&m1),
        l2_pos: rat(2 * (a + 1)) * df.eval(&p1),
        ltilde_neg: Rational::zero(),
        ltilde_pos: rat(2) * crate::algebra::poch(a + 1, beta as usize + 2) * tilde_transform(f, beta).eval(&p1),
        lhat_neg: rat(-2) * crate::algebra::poch(b + 1, alpha as usize + 2) * hat_transform(f, alpha).eval(&m1),
        lhat_pos: Rational::zero(),
        lfull_neg: Rational::zero(),
        lfull_pos: Rational::zero(),
    }
}

/// `(L f, g)_w - (f, L g)_w` for the combined operator; zero when the
/// operator is symmetric.
pub fn symmetry_defect(f: &Poly, g: &Poly, params: &Params) -> Result<Rational> {
    let lf = apply_combined(f, params)?;
    let lg = apply_combined(g, params)?;
    Ok(inner_product(&lf, g, params).total - inner_product(f, &lg, params).total)
}

/// `G[n][m] = (y_n, y_m)_{w(α,β,M,N)}` for `0 ≤ n, m ≤ nmax`.
pub fn gram_matrix(nmax: usize, params: &Params) -> Vec<Vec<Rational>> {
    let ys: Vec<Poly> = (0..=nmax).map(|n| gen_jacobi(n, params)).collect();
    let mut g = vec![vec![Rational::zero(); nmax + 1]; nmax + 1];
    for i in 0..=nmax {
        for j in i..=nmax {
            let v = inner_product(&ys[i], &ys[j], params).total;
            g[j][i] = v.clone();
            g[i][j] = v;
        }
    }
    g
}
