//! Dimensions `p_n = dim As²_Ω(n)` of the two-parameter operad and the
//! related series.
//!
//! `p_1 = 1`, `p_n = ω(ω-1) Σ_{k=1}^{n-1} p_k p_{n-k} + ω p_{n-1}`, and the
//! generating series satisfies `P = ω(ω-1)P² + ωXP + X`. The Koszul dual has
//! series `Q = X + Σ_{n≥2} ωⁿ Xⁿ`, the compositional inverse of `-P(-X)`.

use std::fmt::Write;

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactlin::{series_compose, Polynomial, TruncatedSeries};
use crate::scalar::Rational;

pub type IntPolynomial = Polynomial<BigInt>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionTable {
    pub omega: u64,
    /// `values[n-1] = p_n`.
    pub values: Vec<BigInt>,
}

impl DimensionTable {
    pub fn p(&self, n: usize) -> &BigInt {
        &self.values[n - 1]
    }
}

/// One named check inside a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, name: impl Into<String>, holds: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), holds, detail: detail.into() });
    }

    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "holds": self.holds(),
            "checks": self.checks.iter().map(|c| json!({"name": c.name, "holds": c.holds, "detail": c.detail})).collect::<Vec<_>>(),
        })
    }
}

/// `p_1 … p_{n_max}` for a given `ω`.
pub fn p_recursive(omega: u64, n_max: usize) -> DimensionTable {
    let w = BigInt::from(omega);
    let c = &w * (&w - 1);
    let mut p: Vec<BigInt> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        if n == 1 {
            p.push(BigInt::one());
            continue;
        }
        let conv: BigInt = (1..n).map(|k| &p[k - 1] * &p[n - k - 1]).sum();
        p.push(&c * conv + &w * &p[n - 2]);
    }
    DimensionTable { omega, values: p }
}

/// `p_n = ωⁿ/(n-1) · Σ_{k=1}^{n-1} C(n-1,k) C(n-1,k-1) ω^{n-1-k} (ω-1)^{k-1}`.
pub fn p_narayana(omega: u64, n: usize) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::Invalid(format!("the closed form needs n ≥ 2, got {n}")));
    }
    let w = BigInt::from(omega);
    let m = n - 1;
    let mut sum = BigInt::zero();
    for k in 1..=m {
        sum += binomial(BigInt::from(m), BigInt::from(k))
            * binomial(BigInt::from(m), BigInt::from(k - 1))
            * num_traits::pow(w.clone(), m - k)
            * num_traits::pow(&w - 1, k - 1);
    }
    let (q, r) = sum.div_rem(&BigInt::from(m));
    assert!(r.is_zero(), "Narayana sum not divisible by n-1 (ω={omega}, n={n})");
    Ok(num_traits::pow(w, n) * q)
}

/// `p_n` as a polynomial in `ω`.
pub fn p_polynomial(n: usize) -> Result<IntPolynomial> {
    Ok(p_polynomials(n)?.pop().expect("n ≥ 1"))
}

/// `p_1(ω) … p_n(ω)`.
pub fn p_polynomials(n: usize) -> Result<Vec<IntPolynomial>> {
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    let w = IntPolynomial::x();
    let c = IntPolynomial::from_ints(&[0, -1, 1]);
    let mut p: Vec<IntPolynomial> = vec![IntPolynomial::from_ints(&[1])];
    for m in 2..=n {
        let mut conv = IntPolynomial::zero();
        for k in 1..m {
            conv = &conv + &(&p[k - 1] * &p[m - k - 1]);
        }
        p.push(&(&c * &conv) + &(&w * &p[m - 2]));
    }
    Ok(p)
}

/// Catalan numbers with `cat_1 = 1`, `cat_n = Σ cat_k cat_{n-k}`.
pub fn catalan(n_max: usize) -> Vec<BigInt> {
    let mut c: Vec<BigInt> = Vec::new();
    for n in 1..=n_max {
        if n == 1 {
            c.push(BigInt::one());
        } else {
            c.push((1..n).map(|k| &c[k - 1] * &c[n - k - 1]).sum());
        }
    }
    c
}

/// Large Schröder numbers indexed from `schr_1 = 1`:
/// `S_0 = 1`, `S_m = S_{m-1} + Σ_{k=0}^{m-1} S_k S_{m-1-k}`, `schr_n = S_{n-1}`.
pub fn schroder(n_max: usize) -> Vec<BigInt> {
    let mut s: Vec<BigInt> = Vec::new();
    for m in 0..n_max {
        if m == 0 {
            s.push(BigInt::one());
        } else {
            let conv: BigInt = (0..m).map(|k| &s[k] * &s[m - 1 - k]).sum();
            s.push(&s[m - 1] + conv);
        }
    }
    s
}

/// Degree, leading coefficient, divisibility by `ωⁿ` with `q_n(0) = (-1)ⁿ`,
/// and `p_n(1/2) = 0` for odd `n ≥ 3`.
pub fn check_polynomial_properties(n: usize) -> Result<Report> {
    if n < 2 {
        return Err(Error::Invalid(format!("n must be at least 2, got {n}")));
    }
    let p = p_polynomial(n)?;
    let mut r = Report::default();
    r.push("degree", p.degree() == Some(2 * n - 2), format!("degree {:?}, expected {}", p.degree(), 2 * n - 2));
    let cat = catalan(n).pop().expect("n ≥ 1");
    r.push("leading", p.leading() == cat, format!("leading {}, cat_{n} = {cat}", p.leading()));
    match p.shift_down(n) {
        Some(q) => {
            let expect = if n.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
            r.push("q_n(0)", q.coeff(0) == expect, format!("q_{n}(0) = {}", q.coeff(0)));
        }
        None => r.push("q_n(0)", false, format!("ω^{n} does not divide p_{n}")),
    }
    if n % 2 == 1 {
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let v = p.eval_in(&half, |c| Rational::from_integer(c.clone()));
        r.push("p_n(1/2)", v.is_zero(), format!("p_{n}(1/2) = {v}"));
    }
    Ok(r)
}

/// `P(X)` truncated at `X^order` from the recursion.
pub fn p_series(omega: u64, order: usize) -> TruncatedSeries<BigInt> {
    let mut c = vec![BigInt::zero()];
    c.extend(p_recursive(omega, order).values);
    TruncatedSeries::new(order, c)
}

/// First degree at which `P = ω(ω-1)P² + ωXP + X` fails for the given
/// coefficients `p_1, p_2, …`, if any.
pub fn functional_equation_mismatch(omega: u64, p: &[BigInt]) -> Option<usize> {
    let order = p.len();
    let mut c = vec![BigInt::zero()];
    c.extend(p.iter().cloned());
    let ps = TruncatedSeries::new(order, c);
    let w = BigInt::from(omega);
    let x = TruncatedSeries::x(order);
    let rhs = ps.mul(&ps).scale(&(&w * (&w - 1))).add(&x.mul(&ps).scale(&w)).add(&x);
    ps.first_difference(&rhs)
}

pub fn verify_functional_equation(omega: u64, order: usize) -> Result<Report> {
    if order > 20 {
        return Err(Error::SizeLimitExceeded(format!("order {order} exceeds 20")));
    }
    let p = p_recursive(omega, order).values;
    let mut r = Report::default();
    match functional_equation_mismatch(omega, &p) {
        None => r.push("functional equation", true, format!("exact through X^{order}")),
        Some(k) => r.push("functional equation", false, format!("mismatch at X^{k}")),
    }
    Ok(r)
}

/// `Q(X) = X + Σ_{n=2}^{order} ωⁿ Xⁿ`.
pub fn koszul_dual_series(omega: u64, order: usize) -> Result<TruncatedSeries<BigInt>> {
    if order < 2 {
        return Err(Error::Invalid(format!("order must be at least 2, got {order}")));
    }
    let w = BigInt::from(omega);
    let mut c = vec![BigInt::zero(), BigInt::one()];
    c.extend((2..=order).map(|n| num_traits::pow(w.clone(), n)));
    Ok(TruncatedSeries::new(order, c))
}

/// First degree at which `Q(-P(-X)) = X` fails, if any.
pub fn koszul_inversion_mismatch(omega: u64, order: usize) -> Result<Option<usize>> {
    let q = koszul_dual_series(omega, order)?;
    let p = p_series(omega, order);
    let minus_p_minus = p.negate_argument().scale(&-BigInt::one());
    let comp = series_compose(&q, &minus_p_minus)?;
    Ok(comp.first_difference(&TruncatedSeries::x(order)))
}

pub fn koszul_check(omega: u64, order: usize) -> Result<Report> {
    let mut r = Report::default();
    let q = koszul_dual_series(omega, order)?;
    let coeffs: Vec<String> = q.coeffs().iter().map(|c| c.to_string()).collect();
    r.push("Q coefficients", true, coeffs.join(", "));
    match koszul_inversion_mismatch(omega, order)? {
        None => r.push("Q(-P(-X)) = X", true, format!("exact through X^{order}")),
        Some(k) => r.push("Q(-P(-X)) = X", false, format!("mismatch at X^{k}")),
    }
    Ok(r)
}

/// `p_n(2) = 2^{n-1} schr_n` for `n ≤ n_max`.
pub fn schroder_check(n_max: usize) -> Result<Report> {
    if n_max > 10 {
        return Err(Error::SizeLimitExceeded(format!("N = {n_max} exceeds 10")));
    }
    let p = p_recursive(2, n_max);
    let s = schroder(n_max);
    let mut r = Report::default();
    for n in 1..=n_max {
        let rhs = num_traits::pow(BigInt::from(2), n - 1) * &s[n - 1];
        r.push(format!("n={n}"), *p.p(n) == rhs, format!("p_{n}(2) = {}, 2^{} schr_{n} = {rhs}", p.p(n), n - 1));
    }
    Ok(r)
}

pub fn dimension_tsv(omega_max: u64, n_max: usize) -> String {
    let mut out = String::from("omega\tn\tp_n\n");
    for w in 1..=omega_max {
        for (i, v) in p_recursive(w, n_max).values.iter().enumerate() {
            writeln!(out, "{w}\t{}\t{v}", i + 1).expect("writing to a string");
        }
    }
    out
}

pub fn polynomial_json(p: &IntPolynomial) -> Value {
    json!({
        "coefficients": p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "display": p.to_string(),
        "degree": p.degree(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[u64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_ints(c)
    }

    #[test]
    fn recursion_rows() {
        assert_eq!(p_recursive(2, 7).values, big(&[1, 4, 24, 176, 1440, 12608, 115584]));
        assert_eq!(p_recursive(1, 6).values, big(&[1; 6]));
        assert_eq!(*p_recursive(9, 7).p(7), BigInt::from(27925350157593u64));
    }

    #[test]
    fn narayana_agrees() {
        assert_eq!(p_narayana(2, 3).unwrap(), BigInt::from(24));
        assert_eq!(p_narayana(3, 4).unwrap(), BigInt::from(2511));
        for w in 1..=9 {
            let t = p_recursive(w, 9);
            for n in 2..=9 {
                assert_eq!(&p_narayana(w, n).unwrap(), t.p(n));
            }
        }
        assert!(p_narayana(2, 1).is_err());
    }

    #[test]
    fn factored_forms() {
        let w = |k: usize| IntPolynomial::monomial(BigInt::one(), k);
        let t = poly(&[-1, 2]);
        let expect = [
            w(2),
            &t * &w(3),
            &poly(&[1, -5, 5]) * &w(4),
            &(&t * &poly(&[1, -7, 7])) * &w(5),
            &poly(&[1, -14, 56, -84, 42]) * &w(6),
            &(&t * &poly(&[1, -18, 84, -132, 66])) * &w(7),
            &poly(&[1, -27, 225, -825, 1485, -1287, 429]) * &w(8),
            &(&t * &poly(&[1, -33, 319, -1287, 2431, -2145, 715])) * &w(9),
        ];
        for (i, e) in expect.iter().enumerate() {
            assert_eq!(&p_polynomial(i + 2).unwrap(), e, "n={}", i + 2);
        }
    }

    #[test]
    fn polynomial_evaluates_to_table() {
        let ps = p_polynomials(9).unwrap();
        for w in 1..=9u64 {
            let t = p_recursive(w, 9);
            for n in 1..=9 {
                assert_eq!(&ps[n - 1].eval(&BigInt::from(w)), t.p(n));
            }
        }
    }

    #[test]
    fn polynomial_properties() {
        for n in 2..=9 {
            let r = check_polynomial_properties(n).unwrap();
            assert!(r.holds(), "{n}: {r:?}");
        }
        let r = check_polynomial_properties(7).unwrap();
        assert!(r.checks.iter().any(|c| c.name == "p_n(1/2)" && c.holds));
        assert_eq!(p_polynomial(4).unwrap().degree(), Some(6));
        assert_eq!(p_polynomial(4).unwrap().leading(), BigInt::from(5));
    }

    #[test]
    fn catalan_and_schroder() {
        assert_eq!(catalan(10), big(&[1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]));
        assert_eq!(schroder(10), big(&[1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098]));
        assert!(schroder_check(10).unwrap().holds());
    }

    #[test]
    fn functional_equation() {
        for w in 1..=4 {
            assert!(verify_functional_equation(w, 10).unwrap().holds());
        }
        let mut p = p_recursive(2, 8).values;
        p[3] += 1;
        assert_eq!(functional_equation_mismatch(2, &p), Some(4));
        assert!(verify_functional_equation(2, 21).is_err());
    }

    #[test]
    fn koszul_series() {
        let q = koszul_dual_series(2, 4).unwrap();
        assert_eq!(q.coeffs(), &big(&[0, 1, 4, 8, 16])[..]);
        let q1 = koszul_dual_series(1, 5).unwrap();
        assert_eq!(q1.coeffs(), &big(&[0, 1, 1, 1, 1, 1])[..]);
        for w in 1..=4 {
            assert_eq!(koszul_inversion_mismatch(w, 8).unwrap(), None);
        }
    }

    #[test]
    fn tsv_layout() {
        let t = dimension_tsv(2, 3);
        assert_eq!(t, "omega\tn\tp_n\n1\t1\t1\n1\t2\t1\n1\t3\t1\n2\t1\t1\n2\t2\t4\n2\t3\t24\n");
    }
}
