//! Associative products inside `As_Φ(2)`, the subgroup corollary, and the
//! operad morphisms `Θ_Ω: As²_Ω → As_Φ` and `Θ′_Ω: As²_Ω → As_{Φ′}`.
//!
//! A product `*_a` (or `*ᵒᵖ_a`) is associative exactly when `Φ(a⊗a) = a⊗a`,
//! and satisfies `m∘₂m = 0` exactly when `Φ(a⊗a) = 0`. Both conditions are
//! homogeneous of degree two in `a`, so an indicator pattern `λ·1_S` passes or
//! fails independently of `λ ≠ 0`.

pub mod links;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::eas::{associativity_failure, direct_product, make_from_semigroup, make_prime, FiniteEas, Table};
use crate::error::{Error, Result};
use crate::exactlin::{FormalSum, Span};
use crate::freealg::{FreeAlgebra, FreeElement, TypedWord};
use crate::leas::{linearize, LinearEas};
use crate::operad::{compose_asphi, count_normal_forms_two_param, AsPhi, CompositionProvider, OperadElement};
use crate::scalar::{format_rational, Field, Rational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Direct,
    Opposite,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Direct => "direct",
            Side::Opposite => "opposite",
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Side::Direct => Side::Opposite,
            Side::Opposite => Side::Direct,
        }
    }
}

/// `m = *_a` or `m = *ᵒᵖ_a` with `a = Σ coeffs[i] e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductCandidate<S> {
    pub side: Side,
    pub coeffs: Vec<S>,
}

impl<S: Scalar> ProductCandidate<S> {
    pub fn new(side: Side, coeffs: Vec<S>) -> Self {
        ProductCandidate { side, coeffs }
    }

    pub fn direct(coeffs: Vec<S>) -> Self {
        Self::new(Side::Direct, coeffs)
    }

    pub fn opposite(coeffs: Vec<S>) -> Self {
        Self::new(Side::Opposite, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl ProductCandidate<Rational> {
    pub fn to_json(&self) -> Value {
        json!({"side": self.side.as_str(), "coeffs": self.coeffs.iter().map(format_rational).collect::<Vec<_>>()})
    }
}

fn check_len<S: Scalar>(l: &LinearEas<S>, c: &ProductCandidate<S>) -> Result<()> {
    if c.coeffs.len() != l.dim() {
        return Err(Error::DimensionMismatch(format!(
            "candidate has {} coefficients, expected {}",
            c.coeffs.len(),
            l.dim()
        )));
    }
    Ok(())
}

fn square<S: Scalar>(a: &[S]) -> Vec<S> {
    a.iter().flat_map(|x| a.iter().map(move |y| x.clone() * y.clone())).collect()
}

/// `Φ(a⊗a)` and `a⊗a`.
pub fn diagonal_image<S: Scalar>(l: &LinearEas<S>, a: &[S]) -> Result<(Vec<S>, Vec<S>)> {
    let sq = square(a);
    Ok((l.apply(&sq)?, sq))
}

/// Whether the candidate product is associative: `Φ(a⊗a) = a⊗a`.
pub fn check_associative<S: Scalar>(l: &LinearEas<S>, c: &ProductCandidate<S>) -> Result<bool> {
    check_len(l, c)?;
    let (img, sq) = diagonal_image(l, &c.coeffs)?;
    Ok(img == sq)
}

/// Whether `m∘₂m = 0` for `m = *_a`: `Φ(a⊗a) = 0`.
pub fn check_square_zero<S: Scalar>(l: &LinearEas<S>, c: &ProductCandidate<S>) -> Result<bool> {
    check_len(l, c)?;
    if c.side != Side::Direct {
        return Err(Error::Invalid("the square-zero condition is only stated for direct products".into()));
    }
    let (img, _) = diagonal_image(l, &c.coeffs)?;
    Ok(img.iter().all(Zero::is_zero))
}

fn gens<S: Scalar>() -> [FreeElement<S>; 3] {
    [0, 1, 2].map(|i| FormalSum::basis(TypedWord::generator(i)))
}

/// `m(u, v)` for `m = Σ direct_i *_i + Σ opposite_i *ᵒᵖ_i` in the free algebra.
pub fn free_mixed_product<S: Scalar>(
    alg: &FreeAlgebra<S>,
    direct: &[S],
    opposite: &[S],
    u: &FreeElement<S>,
    v: &FreeElement<S>,
) -> Result<FreeElement<S>> {
    Ok(&alg.star(direct, u, v)? + &alg.star(opposite, v, u)?)
}

/// Associativity of `m = *_a + *ᵒᵖ_b`, evaluated on three free generators.
/// Independent of the `Φ(a⊗a)` criterion.
pub fn check_free_associative<S: Scalar>(l: &LinearEas<S>, direct: &[S], opposite: &[S]) -> Result<bool> {
    let alg = FreeAlgebra::new(l);
    let [x, y, z] = gens::<S>();
    let m = |u: &FreeElement<S>, v: &FreeElement<S>| free_mixed_product(&alg, direct, opposite, u, v);
    let lhs = m(&m(&x, &y)?, &z)?;
    let rhs = m(&x, &m(&y, &z)?)?;
    Ok(lhs == rhs)
}

/// `x *_a (y *_a z) = 0` on three free generators.
pub fn check_free_square_zero<S: Scalar>(l: &LinearEas<S>, a: &[S]) -> Result<bool> {
    let alg = FreeAlgebra::new(l);
    let [x, y, z] = gens::<S>();
    Ok(alg.star(a, &x, &alg.star(a, &y, &z)?)?.is_zero())
}

/// `λ·(1_plus − 1_minus)`; the first nonzero entry is always `+`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndicatorPattern {
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
    pub associative: bool,
    pub square_zero: bool,
}

impl IndicatorPattern {
    pub fn coeffs<S: Scalar>(&self, dim: usize) -> Vec<S> {
        let mut v = vec![S::zero(); dim];
        for &i in &self.plus {
            v[i] = S::one();
        }
        for &i in &self.minus {
            v[i] = -S::one();
        }
        v
    }

    /// `a+b`, `a-b`, … over the given labels.
    pub fn describe(&self, labels: &[String]) -> String {
        let mut s = self.plus.iter().map(|&i| labels[i].clone()).join("+");
        for &i in &self.minus {
            s.push('-');
            s.push_str(&labels[i]);
        }
        s
    }

    pub fn to_json(&self, dim: usize, labels: &[String]) -> Value {
        json!({
            "pattern": self.describe(labels),
            "candidate": ProductCandidate::direct(self.coeffs::<Rational>(dim)).to_json(),
            "associative": self.associative,
            "square_zero": self.square_zero,
        })
    }
}

/// Sign patterns in `{0, +, -}^d`, nonzero, first nonzero entry `+`.
fn sign_patterns(d: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    (0..d)
        .map(|_| 0..3u8)
        .multi_cartesian_product()
        .filter(|s| s.iter().find(|&&x| x != 0) == Some(&1))
        .map(|s| {
            let plus = (0..d).filter(|&i| s[i] == 1).collect();
            let minus = (0..d).filter(|&i| s[i] == 2).collect();
            (plus, minus)
        })
        .collect()
}

/// Every signed indicator pattern that is associative or squares to zero.
/// Only indicator shapes are searched; see [`non_indicator_solutions`].
pub fn indicator_scan<S: Scalar>(l: &LinearEas<S>) -> Result<Vec<IndicatorPattern>> {
    let d = l.dim();
    if d > 6 {
        return Err(Error::SizeLimitExceeded(format!("indicator scan needs dimension ≤ 6, got {d}")));
    }
    let mut out: Vec<IndicatorPattern> = sign_patterns(d)
        .into_par_iter()
        .map(|(plus, minus)| {
            let mut p = IndicatorPattern { plus, minus, associative: false, square_zero: false };
            let (img, sq) = diagonal_image(l, &p.coeffs::<S>(d)).expect("dimensions agree");
            p.associative = img == sq;
            p.square_zero = img.iter().all(Zero::is_zero);
            p
        })
        .filter(|p| p.associative || p.square_zero)
        .collect();
    out.sort_by(|a, b| (a.minus.len(), a.plus.len(), &a.plus, &a.minus).cmp(&(b.minus.len(), b.plus.len(), &b.plus, &b.minus)));
    Ok(out)
}

/// [`indicator_scan`] on the linearization of a finite EAS.
pub fn find_indicator_solutions(s: &FiniteEas) -> Result<Vec<IndicatorPattern>> {
    if s.len() > 6 {
        return Err(Error::SizeLimitExceeded(format!("indicator scan needs |Ω| ≤ 6, got {}", s.len())));
    }
    indicator_scan(&linearize::<Rational>(s)?)
}

fn proportional<S: Field>(a: &[S], b: &[S]) -> bool {
    let Some(i) = a.iter().position(|x| !x.is_zero()) else {
        return b.iter().all(Zero::is_zero);
    };
    if b[i].is_zero() {
        return false;
    }
    let r = b[i].clone() / a[i].clone();
    a.iter().zip(b).all(|(x, y)| x.clone() * r.clone() == *y)
}

/// Integer vectors with entries in `[-bound, bound]` that are associative or
/// square-zero without being a multiple of an indicator pattern.
pub fn non_indicator_solutions<S: Field>(l: &LinearEas<S>, bound: i64) -> Result<Vec<(Vec<S>, bool, bool)>> {
    let d = l.dim();
    if d > 3 || bound > 3 {
        return Err(Error::SizeLimitExceeded(format!("vector scan needs dimension ≤ 3 and bound ≤ 3, got {d} and {bound}")));
    }
    let known: Vec<Vec<S>> = indicator_scan(l)?.iter().map(|p| p.coeffs(d)).collect();
    let mut out = Vec::new();
    for v in (0..d).map(|_| -bound..=bound).multi_cartesian_product() {
        if v.iter().find(|&&x| x != 0).is_none_or(|&x| x < 0) {
            continue;
        }
        let a: Vec<S> = v.iter().map(|&x| S::from_int(x)).collect();
        if known.iter().any(|k| proportional(k, &a)) {
            continue;
        }
        let (img, sq) = diagonal_image(l, &a)?;
        let (assoc, zero) = (img == sq, img.iter().all(Zero::is_zero));
        if (assoc || zero) && !out.iter().any(|(b, _, _): &(Vec<S>, bool, bool)| proportional(b, &a)) {
            out.push((a, assoc, zero));
        }
    }
    Ok(out)
}

fn require_group(g: &Table) -> Result<usize> {
    let n = g.len();
    if n == 0 || g.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
        return Err(Error::NotAGroup("not a square operation table".into()));
    }
    if let Some(t) = associativity_failure(g) {
        return Err(Error::NotAGroup(format!("not associative at {t:?}")));
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|a| g[e][a] == a && g[a][e] == a))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    if let Some(a) = (0..n).find(|&a| !(0..n).any(|b| g[a][b] == e && g[b][a] == e)) {
        return Err(Error::NotAGroup(format!("{a} has no inverse")));
    }
    Ok(e)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupReport {
    pub order: usize,
    /// Subsets closed under the product, as sorted index lists.
    pub subgroups: Vec<Vec<usize>>,
    /// Nonempty subsets whose indicator is associative for `EAS(Ω,⋆)`.
    pub passing_eas: Vec<Vec<usize>>,
    /// Same for `EAS′(Ω,⋆)`.
    pub passing_prime: Vec<Vec<usize>>,
}

impl SubgroupReport {
    pub fn holds(&self) -> bool {
        self.subgroups == self.passing_eas && self.subgroups == self.passing_prime
    }

    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order,
            "subgroups": self.subgroups,
            "passing_eas": self.passing_eas,
            "passing_prime": self.passing_prime,
            "holds": self.holds(),
        })
    }
}

/// Subgroups found by closure, against subsets whose indicator satisfies
/// `Φ(1_H⊗1_H) = 1_H⊗1_H` in `EAS(Ω,⋆)` and `EAS′(Ω,⋆)`.
pub fn verify_subgroup_corollary(g: &Table) -> Result<SubgroupReport> {
    require_group(g)?;
    let n = g.len();
    if n > 8 {
        return Err(Error::SizeLimitExceeded(format!("group order {n} exceeds 8")));
    }
    let labels = crate::eas::group_labels(n);
    let eas = linearize::<Rational>(&make_from_semigroup(&labels, g)?)?;
    let prime = linearize::<Rational>(&make_prime(&labels, g)?)?;
    let subsets: Vec<Vec<usize>> = (1..1u32 << n).map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect()).collect();
    let closed = |h: &Vec<usize>| h.iter().all(|&a| h.iter().all(|&b| h.contains(&g[a][b])));
    let passes = |l: &LinearEas<Rational>, h: &Vec<usize>| {
        let mut a = vec![Rational::zero(); n];
        for &i in h {
            a[i] = Rational::from_int(1);
        }
        check_associative(l, &ProductCandidate::direct(a)).expect("dimensions agree")
    };
    Ok(SubgroupReport {
        order: n,
        subgroups: subsets.iter().filter(|h| closed(h)).cloned().collect(),
        passing_eas: subsets.iter().filter(|h| passes(&eas, h)).cloned().collect(),
        passing_prime: subsets.iter().filter(|h| passes(&prime, h)).cloned().collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaFailure {
    pub triple: [usize; 3],
    /// `*_{(α→β)▷γ} ∘₁ *_{α▷β}`.
    pub lhs: OperadElement<Rational>,
    /// `*_{α▷(β→γ)} ∘₂ *_{β▷γ}`.
    pub rhs: OperadElement<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaReport {
    /// `As²_Ω` is only defined when `→` is associative.
    pub arrow_associative: Option<[usize; 3]>,
    pub checked: usize,
    pub failures: Vec<ThetaFailure>,
}

impl ThetaReport {
    pub fn holds(&self) -> bool {
        self.arrow_associative.is_none() && self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "holds": self.holds(),
            "checked": self.checked,
            "arrow_associativity_failure": self.arrow_associative,
            "failures": self.failures.iter().map(|f| json!({
                "triple": f.triple, "lhs": f.lhs.to_json(), "rhs": f.rhs.to_json(),
            })).collect::<Vec<_>>(),
        })
    }
}

fn binary(a: usize) -> OperadElement<Rational> {
    OperadElement::basis(2, vec![a])
}

/// Images under `*_{α,β} ↦ *_{α▷β}` of the defining relations of `As²_Ω`,
/// compared in `As_Φ(3)` for every triple.
pub fn theta_check(s: &FiniteEas) -> ThetaReport {
    let n = s.len();
    let l = crate::leas::linearize_unchecked::<Rational>(s);
    let triples: Vec<[usize; 3]> = itertools::iproduct!(0..n, 0..n, 0..n).map(|(a, b, c)| [a, b, c]).collect();
    let failures = triples
        .par_iter()
        .filter_map(|&[al, be, ga]| {
            let lhs = compose_asphi(&l, &binary(s.triangle(s.arrow(al, be), ga)), 1, &binary(s.triangle(al, be))).ok()?;
            let rhs = compose_asphi(&l, &binary(s.triangle(al, s.arrow(be, ga))), 2, &binary(s.triangle(be, ga))).ok()?;
            (lhs != rhs).then_some(ThetaFailure { triple: [al, be, ga], lhs, rhs })
        })
        .collect();
    ThetaReport {
        arrow_associative: associativity_failure(s.arrow_table()).map(|(a, b, c)| [a, b, c]),
        checked: triples.len(),
        failures,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaPrimeReport {
    pub omega: usize,
    pub checked: usize,
    pub failure: Option<[usize; 3]>,
    /// Rank of the images of all arity-3 compositions of generators.
    pub image_rank: usize,
    /// `dim As²_Ω(3)`, from normal forms of the two-parameter rewriting system.
    pub source_dim: BigInt,
    /// `dim As_{Φ′}(3)`.
    pub target_dim: usize,
}

impl ThetaPrimeReport {
    pub fn surjective(&self) -> bool {
        self.image_rank == self.target_dim
    }

    pub fn holds(&self) -> bool {
        self.failure.is_none() && self.surjective()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "holds": self.holds(),
            "omega": self.omega,
            "checked": self.checked,
            "failure": self.failure,
            "surjective": self.surjective(),
            "image_rank": self.image_rank,
            "source_dim": self.source_dim.to_string(),
            "target_dim": self.target_dim,
        })
    }
}

/// `Θ′_Ω` for a semigroup with bijective right translations, into `As_{Φ′}`
/// where `Ω′ = EAS(Ω,⋆) × EAS′(Ω,⋆)` and `(α,β)` has index `α·ω + β`.
pub fn theta_prime_check(star: &Table) -> Result<ThetaPrimeReport> {
    let n = star.len();
    if n > 4 {
        return Err(Error::SizeLimitExceeded(format!("semigroup of order {n} exceeds 4")));
    }
    let labels = crate::eas::group_labels(n);
    let omega_prime = direct_product(&make_from_semigroup(&labels, star)?, &make_prime(&labels, star)?)?;
    let l = linearize::<Rational>(&omega_prime)?;
    let pair = |a: usize, b: usize| binary(a * n + b);
    let failure = itertools::iproduct!(0..n, 0..n, 0..n).find(|&(al, be, ga)| {
        let lhs = compose_asphi(&l, &pair(star[al][be], ga), 1, &pair(al, be)).expect("valid arity");
        let rhs = compose_asphi(&l, &pair(al, star[be][ga]), 2, &pair(be, ga)).expect("valid arity");
        lhs != rhs
    });
    let p = AsPhi::new(&l);
    let gens = p.basis(2);
    let mut span: Span<Vec<usize>, Rational> = Span::new();
    for f in &gens {
        for g in &gens {
            for i in 1..=2 {
                span.insert(&p.compose(f, i, g)?.vector);
            }
        }
    }
    Ok(ThetaPrimeReport {
        omega: n,
        checked: n * n * n,
        failure: failure.map(|(a, b, c)| [a, b, c]),
        image_rank: span.dim(),
        source_dim: count_normal_forms_two_param(star, 3)?,
        target_dim: p.basis(3).len(),
    })
}

/// Named small groups and semigroups: `Z/n`, `Z/nxZ/m`, `Z/n*` (multiplicative).
pub fn named_semigroup(name: &str) -> Option<Table> {
    use crate::eas::groups;
    let name = name.trim();
    if let Some((a, b)) = name.split_once('x') {
        return Some(groups::product(&named_semigroup(a)?, &named_semigroup(b)?));
    }
    let rest = name.strip_prefix("Z/")?;
    if let Some(m) = rest.strip_suffix('*') {
        let n: usize = m.parse().ok().filter(|&n| n >= 1)?;
        return Some(groups::multiplicative_mod(n));
    }
    let n: usize = rest.parse().ok().filter(|&n| n >= 1)?;
    Some(groups::cyclic(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::eas::{check_eas, groups};
    use crate::scalar::rat;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn associative_examples() {
        let f3 = catalog::leas("F3").unwrap();
        for (l, m) in [(1, 0), (0, 1), (2, -3), (5, 5)] {
            assert!(check_associative(&f3, &ProductCandidate::direct(v(&[l, m]))).unwrap());
        }
        let c5 = catalog::leas("C5").unwrap();
        let (a, b) = (v(&[1, 0]), v(&[0, 1]));
        assert!(check_associative(&c5, &ProductCandidate::direct(b)).unwrap());
        assert!(!check_associative(&c5, &ProductCandidate::direct(a)).unwrap());
        let one = LinearEas::<Rational>::identity(1);
        assert!(check_associative(&one, &ProductCandidate::opposite(v(&[1]))).unwrap());
        assert!(check_associative(&f3, &ProductCandidate::direct(v(&[1]))).is_err());
    }

    #[test]
    fn square_zero_examples() {
        let a1 = catalog::leas("A1").unwrap();
        assert!(check_square_zero(&a1, &ProductCandidate::direct(v(&[1, -1]))).unwrap());
        let c1 = catalog::leas("C1").unwrap();
        for c in [[1, 0], [0, 1], [1, 1], [1, -1], [2, 3]] {
            assert!(!check_square_zero(&c1, &ProductCandidate::direct(v(&c))).unwrap());
        }
        assert!(check_square_zero(&c1, &ProductCandidate::direct(v(&[0, 0]))).unwrap());
        assert!(check_square_zero(&a1, &ProductCandidate::opposite(v(&[1, -1]))).is_err());
    }

    #[test]
    fn free_algebra_agrees_with_diagonal_criterion() {
        let zero = v(&[0, 0]);
        for (name, _) in catalog::classified() {
            let l = catalog::leas(name).unwrap();
            for a in [[1, 0], [0, 1], [1, 1], [1, -1], [2, 1]] {
                let a = v(&a);
                let c = ProductCandidate::direct(a.clone());
                let assoc = check_associative(&l, &c).unwrap();
                assert_eq!(check_free_associative(&l, &a, &zero).unwrap(), assoc, "{name}");
                assert_eq!(check_free_associative(&l, &zero, &a).unwrap(), assoc, "{name}");
                assert_eq!(check_free_square_zero(&l, &a).unwrap(), check_square_zero(&l, &c).unwrap());
            }
        }
    }

    #[test]
    fn mixed_candidates_are_not_associative() {
        let f3 = catalog::leas("F3").unwrap();
        assert!(!check_free_associative(&f3, &v(&[1, 0]), &v(&[0, 1])).unwrap());
        assert!(!check_free_associative(&f3, &v(&[1, 0]), &v(&[1, 0])).unwrap());
        assert!(check_free_associative(&f3, &v(&[0, 0]), &v(&[0, 1])).unwrap());
    }

    #[test]
    fn indicator_examples() {
        let pats = |n: &str| find_indicator_solutions(&catalog::eas(n).unwrap()).unwrap();
        let h2 = pats("H2");
        assert_eq!(h2.iter().map(|p| (p.plus.clone(), p.minus.clone())).collect::<Vec<_>>(), vec![(vec![0], vec![]), (vec![0, 1], vec![])]);
        let e3 = pats("E3'");
        let lab = crate::eas::default_labels(2);
        let assoc: Vec<String> = e3.iter().filter(|p| p.associative).map(|p| p.describe(&lab)).collect();
        let zero: Vec<String> = e3.iter().filter(|p| p.square_zero).map(|p| p.describe(&lab)).collect();
        assert_eq!(assoc, ["a", "b"]);
        assert_eq!(zero, ["a-b"]);
        let z4 = make_from_semigroup(&crate::eas::group_labels(4), &groups::cyclic(4)).unwrap();
        let sets: Vec<Vec<usize>> = find_indicator_solutions(&z4).unwrap().into_iter().map(|p| p.plus).collect();
        assert_eq!(sets, vec![vec![0], vec![0, 2], vec![0, 1, 2, 3]]);
    }

    #[test]
    fn indicator_scan_limits() {
        let big = LinearEas::<Rational>::identity(7);
        assert!(matches!(indicator_scan(&big), Err(Error::SizeLimitExceeded(_))));
    }

    #[test]
    fn no_discoveries_in_dimension_two() {
        for (name, _) in catalog::classified() {
            let l = catalog::leas(name).unwrap();
            let found = non_indicator_solutions(&l, 3).unwrap();
            if name == "F3" {
                // Every λ*_a + μ*_b is associative.
                assert!(!found.is_empty() && found.iter().all(|(_, assoc, zero)| *assoc && !*zero));
            } else {
                assert!(found.is_empty(), "{name}");
            }
        }
    }

    #[test]
    fn subgroup_corollary() {
        for (g, count) in [(groups::cyclic(1), 1), (groups::cyclic(2), 2), (groups::cyclic(3), 2), (groups::cyclic(4), 3)] {
            let r = verify_subgroup_corollary(&g).unwrap();
            assert!(r.holds());
            assert_eq!(r.subgroups.len(), count);
        }
        let r = verify_subgroup_corollary(&groups::cyclic(4)).unwrap();
        assert!(!r.passing_eas.contains(&vec![0, 1]));
        let k = verify_subgroup_corollary(&groups::product(&groups::cyclic(2), &groups::cyclic(2))).unwrap();
        assert!(k.holds());
        assert_eq!(k.subgroups.len(), 5);
        assert!(matches!(verify_subgroup_corollary(&groups::multiplicative_mod(3)), Err(Error::NotAGroup(_))));
        assert!(matches!(verify_subgroup_corollary(&groups::cyclic(9)), Err(Error::SizeLimitExceeded(_))));
    }

    #[test]
    fn theta_on_classified_and_corrupted() {
        for (name, s) in catalog::classified() {
            assert!(theta_check(&s).holds(), "{name}");
        }
        let c3 = catalog::eas("C3").unwrap();
        let bad = itertools::iproduct!(0..2, 0..2)
            .map(|(i, j)| {
                let mut tr = c3.triangle_table().clone();
                tr[i][j] = 1 - tr[i][j];
                FiniteEas::from_tables(c3.arrow_table().clone(), tr).unwrap()
            })
            .find(|t| !check_eas(t).is_eas)
            .unwrap();
        let r = theta_check(&bad);
        assert!(!r.holds());
        assert!(!r.failures.is_empty());
        let one = FiniteEas::from_tables(vec![vec![0]], vec![vec![0]]).unwrap();
        assert!(theta_check(&one).holds());
        assert_eq!(theta_check(&one).checked, 1);
    }

    #[test]
    fn theta_prime_dimensions() {
        for (n, src, tgt) in [(1, 1, 1), (2, 24, 16), (3, 135, 81)] {
            let r = theta_prime_check(&groups::cyclic(n)).unwrap();
            assert!(r.holds(), "Z/{n}");
            assert_eq!(r.source_dim, BigInt::from(src));
            assert_eq!(r.target_dim, tgt);
        }
        assert!(matches!(theta_prime_check(&groups::multiplicative_mod(2)), Err(Error::NoRightInverses(_, _))));
    }

    #[test]
    fn semigroup_names() {
        assert_eq!(named_semigroup("Z/3"), Some(groups::cyclic(3)));
        assert_eq!(named_semigroup("Z/2*"), Some(groups::multiplicative_mod(2)));
        assert_eq!(named_semigroup("Z/2xZ/2").map(|t| t.len()), Some(4));
        assert_eq!(named_semigroup("Q8"), None);
    }
}
