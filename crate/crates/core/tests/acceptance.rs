//! Exit criteria. Every check is exact (tolerance 0); runtime limits are
//! enforced where one is stated. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use genjacobi::algebra::Poly;
use genjacobi::genjacobi::{gen_jacobi, poly_p, poly_q, poly_r, poly_s, Params};
use genjacobi::inner::{gram_matrix, h_norm, raw_weighted_integral};
use genjacobi::jacobi::jacobi_poly;
use genjacobi::operators::{
    apply_l2, apply_lfull, apply_lhat, apply_ltilde, eigen_combined, eigen_high, eigen_lambda2, expand_operator,
    HighOrder, OperatorKind,
};
use genjacobi::verify::{
    operator_difference_cases, run_suite, verify_sixth_order, verify_mixed, verify_product_form, verify_factorizations, verify_symmetry,
    GridConfig, Suite, VerifyReport,
};
use genjacobi::{frac, rat, Rational};
use num_traits::Zero;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn report_outcome(r: &VerifyReport) -> Outcome {
    if r.all_pass {
        Ok(format!("{} cases exact, {} skipped", r.passed(), r.skipped()))
    } else {
        let first = r.failures().next().unwrap();
        Err(format!(
            "{} failing case(s); first: {} [{}] n={:?} residual={:?}",
            r.failures().count(),
            first.label,
            first.params,
            first.n,
            first.residual
        ))
    }
}

fn merge(reports: impl IntoIterator<Item = VerifyReport>) -> VerifyReport {
    let mut all = VerifyReport::new("merged", "");
    for r in reports {
        all.absorb(r);
    }
    all
}

fn masses() -> Vec<Rational> {
    vec![rat(0), frac(1, 3), rat(1), rat(2)]
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

/// Three-term recurrence for P_n^{(a,b)}, kept apart from the library's
/// hypergeometric construction.
fn recurrence(n: usize, a: &Rational, b: &Rational) -> Poly {
    let two = rat(2);
    let mut prev = Poly::one();
    if n == 0 {
        return prev;
    }
    let mut cur = Poly::new(vec![(a - b) / &two, (a + b + &two) / &two]);
    for k in 2..=n {
        let k = rat(k as i64);
        let s = &k * &two + a + b;
        let c0 = &two * &k * (&k + a + b) * (&s - &two);
        let lin = Poly::new(vec![a * a - b * b, &s * (&s - &two)]).scale(&(&s - rat(1)));
        let c2 = &two * (&k + a - rat(1)) * (&k + b - rat(1)) * &s;
        let next = (&(&lin * &cur) - &prev.scale(&c2)).scale(&(rat(1) / c0));
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

fn c1_classical() -> Outcome {
    let mut count = 0;
    for a in 0..=3 {
        for b in 0..=3 {
            for n in 0..=12 {
                let p = poly_p(n, a, b);
                let res = &apply_l2(&p, a, b) - &p.scale(&eigen_lambda2(n, a, b));
                ensure(res.is_zero(), || format!("alpha={a} beta={b} n={n}: {res}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} cases exact"))
}

fn c2_components() -> Outcome {
    let anchor1 = apply_ltilde(&Poly::from_ints(&[1, 1]), 0, 0).map_err(|e| e.to_string())?;
    ensure(anchor1 == Poly::from_ints(&[4, 4]), || format!("Ltilde(x+1) = {anchor1}"))?;
    let s2 = Poly::from_ints(&[-18, 0, 18]);
    let anchor2 = apply_lfull(&s2, 0, 0);
    ensure(anchor2 == s2.scale(&rat(144)), || format!("Lfull(18(x^2-1)) = {anchor2}"))?;
    let mut count = 0;
    for a in 0..=3 {
        for b in 0..=3 {
            for n in 0..=12 {
                let q = poly_q(n, a, b);
                let r = poly_r(n, a, b);
                let s = poly_s(n, a, b);
                let rq = &apply_ltilde(&q, a, b).map_err(|e| e.to_string())? - &q.scale(&eigen_high(HighOrder::Side, n, b, a));
                let rr = &apply_lhat(&r, a, b).map_err(|e| e.to_string())? - &r.scale(&eigen_high(HighOrder::Side, n, a, b));
                let rs = &apply_lfull(&s, a, b) - &s.scale(&eigen_high(HighOrder::Full, n, a, b));
                ensure(rq.is_zero() && rr.is_zero() && rs.is_zero(), || {
                    format!("alpha={a} beta={b} n={n}: Q {rq}, R {rr}, S {rs}")
                })?;
                count += 3;
            }
        }
    }
    Ok(format!("{count} cases + 2 anchors exact"))
}

fn c3_eigen_equation() -> Outcome {
    report_outcome(&run_suite(Suite::Eigen, &GridConfig::default()).map_err(|e| e.to_string())?)
}

fn c4_leading() -> Outcome {
    let x2m1 = Poly::from_ints(&[-1, 0, 1]);
    for a in 0..=3u32 {
        for b in 0..=3u32 {
            let params = Params::jacobi(a, b);
            for (kind, order, exp) in [
                (OperatorKind::Ltilde, 2 * b + 4, b + 2),
                (OperatorKind::Lhat, 2 * a + 4, a + 2),
                (OperatorKind::Lfull, 2 * a + 2 * b + 6, a + b + 3),
            ] {
                let op = expand_operator(kind, &params).map_err(|e| e.to_string())?;
                ensure(op.order() == order as usize, || format!("{kind} alpha={a} beta={b}: order {}", op.order()))?;
                let top = op.coefficient(order as usize);
                ensure(top == x2m1.pow(exp as usize), || format!("{kind} alpha={a} beta={b}: top {top}"))?;
            }
        }
    }
    Ok("48 expansions exact".into())
}

fn c5_factorized() -> Outcome {
    let mut reports = Vec::new();
    for a in 0..=2 {
        for b in 0..=2 {
            reports.push(verify_factorizations(12, a, b));
            let mut probes = VerifyReport::new("probes", "");
            probes.extend(operator_difference_cases(a, b));
            reports.push(probes);
        }
    }
    report_outcome(&merge(reports))
}

fn c6_krall() -> Outcome {
    let pairs = [(rat(1), rat(1)), (frac(1, 2), frac(7, 3)), (rat(2), rat(0))];
    let reports = pairs
        .iter()
        .map(|(m, n)| verify_sixth_order(10, m, n))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    report_outcome(&merge(reports))
}

fn c7_mixed() -> Outcome {
    report_outcome(&merge((0..=2).flat_map(|a| (0..=2).map(move |b| verify_mixed(10, a, b)))))
}

fn c8_product_form() -> Outcome {
    report_outcome(&merge(
        (0..=3).flat_map(|a| (0..=3).map(move |b| verify_product_form(2 * b as usize + 8, 10, a, b))),
    ))
}

fn c9_symmetry() -> Outcome {
    let mut reports = Vec::new();
    let mut pairs = 0;
    for a in 0..=2u32 {
        for b in 0..=2u32 {
            for m in [frac(1, 3), rat(2)] {
                for n in [frac(1, 3), rat(2)] {
                    let params = Params::new(a, b, m.clone(), n).unwrap();
                    reports.push(verify_symmetry(50, 2 * (a + b) as usize + 8, &params, 42));
                    pairs += 50;
                }
            }
        }
    }
    let merged = merge(reports);
    report_outcome(&merged).map(|s| format!("{pairs} random pairs; {s}"))
}

fn c10_orthogonality() -> Outcome {
    let mut checked = 0;
    for a in 0..=3 {
        for b in 0..=3 {
            for m in masses() {
                for n in masses() {
                    let params = Params::new(a, b, m.clone(), n.clone()).unwrap();
                    let g = gram_matrix(10, &params);
                    for (i, row) in g.iter().enumerate() {
                        for (j, v) in row.iter().enumerate() {
                            ensure(i == j || v.is_zero(), || format!("{params}: G[{i}][{j}] = {v}"))?;
                        }
                    }
                    for k in 0..30 {
                        let (lo, hi) = (eigen_combined(k, &params), eigen_combined(k + 1, &params));
                        ensure(lo < hi, || format!("{params}: eigenvalue {k} = {lo} >= {hi}"))?;
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} parameter points, 11x11 Gram matrices diagonal, eigenvalues increasing to n=30"))
}

fn c11_reflection_and_oracles() -> Outcome {
    let signed = |p: Poly, n: usize| if n % 2 == 1 { -p.reflect() } else { p.reflect() };
    for a in 0..=3u32 {
        for b in 0..=3u32 {
            for n in 0..=15 {
                ensure(poly_q(n, a, b) == signed(poly_r(n, b, a), n), || format!("Q/R reflection a={a} b={b} n={n}"))?;
                ensure(poly_s(n, a, b) == signed(poly_s(n, b, a), n), || format!("S reflection a={a} b={b} n={n}"))?;
                for m in masses() {
                    for nn in masses() {
                        let p = Params::new(a, b, m.clone(), nn).unwrap();
                        if n <= 12 {
                            let lhs = gen_jacobi(n, &p);
                            ensure(lhs == signed(gen_jacobi(n, &p.reflected()), n), || format!("{p} n={n}"))?;
                        }
                    }
                }
            }
            ensure(h_norm(a, b) == raw_weighted_integral(&Poly::one(), a, b), || format!("h a={a} b={b}"))?;
        }
    }
    let params = [rat(0), rat(1), rat(2), rat(3), frac(-1, 2), frac(1, 3), frac(5, 2)];
    for a in &params {
        for b in &params {
            for n in 0..=12 {
                let hyp = jacobi_poly(n, a, b).map_err(|e| e.to_string())?;
                ensure(hyp == recurrence(n, a, b), || format!("P_{n}^({a},{b}) disagrees with recurrence"))?;
            }
        }
    }
    Ok("reflections, hypergeometric = recurrence, closed-form h = integral".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("1  classical eigen-equation", c1_classical, Some(Duration::from_secs(1))),
        ("2  Q/R/S eigen-equations", c2_components, Some(Duration::from_secs(10))),
        ("3  combined eigen-equation", c3_eigen_equation, Some(Duration::from_secs(60))),
        ("4  leading coefficients and orders", c4_leading, None),
        ("5  factorized = elementary", c5_factorized, None),
        ("6  sixth-order Krall equation", c6_krall, None),
        ("7  mixed component identities", c7_mixed, None),
        ("8  product form and two-term Q_n", c8_product_form, None),
        ("9  operator symmetry", c9_symmetry, Some(Duration::from_secs(120))),
        ("10 Gram orthogonality", c10_orthogonality, None),
        ("11 reflection and dual-path oracles", c11_reflection_and_oracles, None),
    ];
    let mut failed = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(msg), Some(lim)) if elapsed > lim => Err(format!("{msg}; exceeded runtime limit {lim:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(msg) => println!("PASS  {name:<38} {elapsed:>9.2?}  {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  {name:<38} {elapsed:>9.2?}  {msg}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
