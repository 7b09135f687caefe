//! Free Φ-associative algebras on typed words, their associative envelopes,
//! two-parameter algebras and the free algebra over the dual two-parameter
//! operad.
//!
//! A typed word of length `n` is `a_1…a_{n-1} x_1…x_n`, stored as two
//! vectors. Appending `a z` to a word pushes `a` onto the decorations and `z`
//! onto the letters, so `dec[i]` always sits between `letters[i]` and
//! `letters[i+1]`. The product is defined by
//!
//! * `w *_a z = w · a z` for a letter `z`,
//! * `u *_a (v · b z) = Σ Φ[(c,e),(a,b)] (u *_e v) · c z`.

use std::collections::HashMap;

use serde_json::{json, Value};

use crate::eas::Table;
use crate::error::{Error, Result};
use crate::exactlin::{FormalSum, Span};
use crate::leas::{Legs, LinearEas};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypedWord {
    pub dec: Vec<usize>,
    pub letters: Vec<usize>,
}

pub type FreeElement<S> = FormalSum<TypedWord, S>;

impl TypedWord {
    pub fn new(dec: Vec<usize>, letters: Vec<usize>) -> Result<Self> {
        if letters.is_empty() || dec.len() + 1 != letters.len() {
            return Err(Error::Invalid(format!(
                "a typed word with {} letters needs {} decorations, got {}",
                letters.len(),
                letters.len().saturating_sub(1),
                dec.len()
            )));
        }
        Ok(TypedWord { dec, letters })
    }

    pub fn generator(x: usize) -> Self {
        TypedWord { dec: Vec::new(), letters: vec![x] }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `self · a z`.
    pub fn append(&self, a: usize, z: usize) -> Self {
        let mut w = self.clone();
        w.dec.push(a);
        w.letters.push(z);
        w
    }

    fn split_last(&self) -> Option<(TypedWord, usize, usize)> {
        let a = *self.dec.last()?;
        let z = *self.letters.last()?;
        let prefix =
            TypedWord { dec: self.dec[..self.dec.len() - 1].to_vec(), letters: self.letters[..self.letters.len() - 1].to_vec() };
        Some((prefix, a, z))
    }

    pub fn to_json(&self) -> Value {
        json!({"dec": self.dec, "let": self.letters})
    }
}

/// All typed words of length `len` over `dim` decorations and `gens` letters.
pub fn basis_words(dim: usize, gens: usize, len: usize) -> Vec<TypedWord> {
    if len == 0 {
        return Vec::new();
    }
    let mut out = vec![TypedWord { dec: vec![], letters: vec![] }];
    for k in 0..len {
        let mut next = Vec::new();
        for w in &out {
            for x in 0..gens {
                if k == 0 {
                    next.push(TypedWord::generator(x));
                } else {
                    for a in 0..dim {
                        next.push(w.append(a, x));
                    }
                }
            }
        }
        out = next;
    }
    out
}

pub fn free_element_json<S: Scalar>(v: &FreeElement<S>) -> Value {
    Value::Array(
        v.iter()
            .map(|(w, c)| json!({"dec": w.dec, "let": w.letters, "coef": c.to_string()}))
            .collect(),
    )
}

/// `T_A(V)` with the product induced by an ℓEAS (or any `Φ`).
#[derive(Clone, Debug)]
pub struct FreeAlgebra<S> {
    dim: usize,
    legs: Vec<Legs<S>>,
}

impl<S: Scalar> FreeAlgebra<S> {
    pub fn new(l: &LinearEas<S>) -> Self {
        FreeAlgebra { dim: l.dim(), legs: l.legs() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `u *_a v` on basis words.
    pub fn star_basis(&self, a: usize, u: &TypedWord, v: &TypedWord) -> FreeElement<S> {
        let mut memo = HashMap::new();
        self.star_rec(a, u, v, &mut memo)
    }

    fn star_rec(
        &self,
        a: usize,
        u: &TypedWord,
        v: &TypedWord,
        memo: &mut HashMap<(usize, TypedWord), FreeElement<S>>,
    ) -> FreeElement<S> {
        let Some((prefix, b, z)) = v.split_last() else {
            return FormalSum::basis(u.append(a, v.letters[0]));
        };
        if let Some(r) = memo.get(&(a, v.clone())) {
            return r.clone();
        }
        let mut out = FormalSum::zero();
        for (c, e, coef) in &self.legs[a * self.dim + b] {
            let inner = self.star_rec(*e, u, &prefix, memo);
            for (w, k) in &inner {
                out.add_term(w.append(*c, z), k.clone() * coef.clone());
            }
        }
        memo.insert((a, v.clone()), out.clone());
        out
    }

    /// `u *_a v`, bilinear in `u` and `v`.
    pub fn star_at(&self, a: usize, u: &FreeElement<S>, v: &FreeElement<S>) -> FreeElement<S> {
        u.bilinear(v, |x, y| self.star_basis(a, x, y))
    }

    /// `u *_a v` for a vector `a = Σ a_i e_i` of `A`.
    pub fn star(&self, a: &[S], u: &FreeElement<S>, v: &FreeElement<S>) -> Result<FreeElement<S>> {
        if a.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "decoration vector has length {}, expected {}",
                a.len(),
                self.dim
            )));
        }
        for w in u.keys().chain(v.keys()) {
            if w.dec.iter().any(|&i| i >= self.dim) {
                return Err(Error::DimensionMismatch(format!("decoration index out of range in {w:?}")));
            }
        }
        let mut out = FormalSum::zero();
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(&self.star_at(i, u, v), c);
            }
        }
        Ok(out)
    }
}

/// A family of products `*_a` on free elements, indexed by a basis of `A`.
pub trait ParamProduct<S: Scalar> {
    fn dim(&self) -> usize;
    fn product(&self, a: usize, x: &FreeElement<S>, y: &FreeElement<S>) -> FreeElement<S>;
}

pub struct Direct<'a, S>(pub &'a FreeAlgebra<S>);

/// `x *ᵒᵖ_a y = y *_a x`.
pub struct Opposite<'a, S>(pub &'a FreeAlgebra<S>);

impl<S: Scalar> ParamProduct<S> for Direct<'_, S> {
    fn dim(&self) -> usize {
        self.0.dim
    }
    fn product(&self, a: usize, x: &FreeElement<S>, y: &FreeElement<S>) -> FreeElement<S> {
        self.0.star_at(a, x, y)
    }
}

impl<S: Scalar> ParamProduct<S> for Opposite<'_, S> {
    fn dim(&self) -> usize {
        self.0.dim
    }
    fn product(&self, a: usize, x: &FreeElement<S>, y: &FreeElement<S>) -> FreeElement<S> {
        self.0.star_at(a, y, x)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    /// `x *_a (y *_b z) = Σ Φ[(c,e),(a,b)] (x *_e y) *_c z`.
    Direct,
    /// `Σ Φ[(c,e),(a,b)] x *_c (y *_e z) = (x *_b y) *_a z`.
    Opposite,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocWitness<S: Scalar> {
    pub a: usize,
    pub b: usize,
    pub x: TypedWord,
    pub y: TypedWord,
    pub z: TypedWord,
    pub lhs: FreeElement<S>,
    pub rhs: FreeElement<S>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocReport<S: Scalar> {
    pub holds: bool,
    pub checked: usize,
    pub witness: Option<AssocWitness<S>>,
}

impl<S: Scalar> AssocReport<S> {
    pub fn to_json(&self) -> Value {
        let mut v = json!({"holds": self.holds, "checked": self.checked});
        if let Some(w) = &self.witness {
            v["witness"] = json!({
                "a": w.a, "b": w.b,
                "x": w.x.to_json(), "y": w.y.to_json(), "z": w.z.to_json(),
                "lhs": free_element_json(&w.lhs), "rhs": free_element_json(&w.rhs),
            });
        }
        v
    }
}

/// Triples of basis words over `gens` letters, each of length ≥ 1, with
/// total length at most `max_len`.
pub fn word_triples(dim: usize, gens: usize, max_len: usize) -> Vec<(TypedWord, TypedWord, TypedWord)> {
    let by_len: Vec<Vec<TypedWord>> = (0..=max_len).map(|n| basis_words(dim, gens, n)).collect();
    let mut out = Vec::new();
    for lx in 1..=max_len {
        for ly in 1..=max_len {
            for lz in 1..=max_len {
                if lx + ly + lz > max_len {
                    continue;
                }
                for x in &by_len[lx] {
                    for y in &by_len[ly] {
                        for z in &by_len[lz] {
                            out.push((x.clone(), y.clone(), z.clone()));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Checks one of the two Φ-associativity identities for `p` on the given
/// triples of basis words, against the coefficients of `phi`.
pub fn check_phi_identity<S: Scalar, P: ParamProduct<S>>(
    p: &P,
    phi: &LinearEas<S>,
    identity: Identity,
    triples: &[(TypedWord, TypedWord, TypedWord)],
) -> AssocReport<S> {
    let d = phi.dim();
    let legs = phi.legs();
    let mut checked = 0;
    for (x, y, z) in triples {
        let (xe, ye, ze) = (FormalSum::basis(x.clone()), FormalSum::basis(y.clone()), FormalSum::basis(z.clone()));
        for a in 0..d {
            for b in 0..d {
                let (lhs, rhs) = match identity {
                    Identity::Direct => {
                        let lhs = p.product(a, &xe, &p.product(b, &ye, &ze));
                        let mut rhs = FormalSum::zero();
                        for (c, e, k) in &legs[a * d + b] {
                            rhs.add_scaled(&p.product(*c, &p.product(*e, &xe, &ye), &ze), k);
                        }
                        (lhs, rhs)
                    }
                    Identity::Opposite => {
                        let mut lhs = FormalSum::zero();
                        for (c, e, k) in &legs[a * d + b] {
                            lhs.add_scaled(&p.product(*c, &xe, &p.product(*e, &ye, &ze)), k);
                        }
                        let rhs = p.product(a, &p.product(b, &xe, &ye), &ze);
                        (lhs, rhs)
                    }
                };
                checked += 1;
                if lhs != rhs {
                    return AssocReport {
                        holds: false,
                        checked,
                        witness: Some(AssocWitness { a, b, x: x.clone(), y: y.clone(), z: z.clone(), lhs, rhs }),
                    };
                }
            }
        }
    }
    AssocReport { holds: true, checked, witness: None }
}

fn check_max_len(max_len: usize) -> Result<()> {
    if max_len < 3 {
        return Err(Error::Invalid(format!("max_len must be at least 3, got {max_len}")));
    }
    Ok(())
}

/// Φ-associativity of the free algebra on three generators, for all basis
/// words of total length ≤ `max_len`.
pub fn check_phi_associativity<S: Scalar>(l: &LinearEas<S>, max_len: usize) -> Result<AssocReport<S>> {
    check_max_len(max_len)?;
    let alg = FreeAlgebra::new(l);
    let triples = word_triples(l.dim(), 3, max_len);
    Ok(check_phi_identity(&Direct(&alg), l, Identity::Direct, &triples))
}

/// Opposite Φ-associativity of `*ᵒᵖ` built on the same free algebra.
pub fn check_opposite_phi_associativity<S: Scalar>(l: &LinearEas<S>, max_len: usize) -> Result<AssocReport<S>> {
    check_max_len(max_len)?;
    let alg = FreeAlgebra::new(l);
    let triples = word_triples(l.dim(), 3, max_len);
    Ok(check_phi_identity(&Opposite(&alg), l, Identity::Opposite, &triples))
}

/// Elements of `T_A(V) ⊗ A`.
pub type EnvelopeElement<S> = FormalSum<(TypedWord, usize), S>;

/// `xa ⋆ yb = Σ Φ[(c,e),(a,b)] (x *_e y) ⊗ c`.
pub fn envelope_product<S: Scalar>(
    alg: &FreeAlgebra<S>,
    legs: &[Legs<S>],
    xa: &EnvelopeElement<S>,
    yb: &EnvelopeElement<S>,
) -> Result<EnvelopeElement<S>> {
    let d = alg.dim;
    if legs.len() != d * d {
        return Err(Error::DimensionMismatch(format!("expected {} columns of Φ, got {}", d * d, legs.len())));
    }
    if let Some((w, a)) = xa.keys().chain(yb.keys()).find(|(w, a)| *a >= d || w.dec.iter().any(|&i| i >= d)) {
        return Err(Error::DimensionMismatch(format!("index out of range in ({w:?}, {a})")));
    }
    Ok(xa.bilinear(yb, |(x, a), (y, b)| {
        let mut out = FormalSum::zero();
        for (c, e, k) in &legs[a * d + b] {
            for (w, kw) in &alg.star_basis(*e, x, y) {
                out.add_term((w.clone(), *c), kw.clone() * k.clone());
            }
        }
        out
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvelopeReport<S: Scalar> {
    pub holds: bool,
    pub checked: usize,
    pub witness: Option<[(TypedWord, usize); 3]>,
    pub lhs: Option<EnvelopeElement<S>>,
    pub rhs: Option<EnvelopeElement<S>>,
}

/// Associativity of `⋆` on all triples of basis elements `(w, a)` with `w`
/// of length ≤ `max_len` over `gens` letters.
pub fn check_envelope_associativity<S: Scalar>(l: &LinearEas<S>, max_len: usize, gens: usize) -> EnvelopeReport<S> {
    let alg = FreeAlgebra::new(l);
    let legs = l.legs();
    let d = l.dim();
    let basis: Vec<(TypedWord, usize)> = (1..=max_len)
        .flat_map(|n| basis_words(d, gens, n))
        .flat_map(|w| (0..d).map(move |a| (w.clone(), a)))
        .collect();
    let el = |p: &(TypedWord, usize)| FormalSum::basis(p.clone());
    let prod = |u: &EnvelopeElement<S>, v: &EnvelopeElement<S>| {
        envelope_product(&alg, &legs, u, v).expect("indices in range by construction")
    };
    let mut checked = 0;
    for p in &basis {
        for q in &basis {
            let pq = prod(&el(p), &el(q));
            for r in &basis {
                let lhs = prod(&pq, &el(r));
                let rhs = prod(&el(p), &prod(&el(q), &el(r)));
                checked += 1;
                if lhs != rhs {
                    return EnvelopeReport {
                        holds: false,
                        checked,
                        witness: Some([p.clone(), q.clone(), r.clone()]),
                        lhs: Some(lhs),
                        rhs: Some(rhs),
                    };
                }
            }
        }
    }
    EnvelopeReport { holds: true, checked, witness: None, lhs: None, rhs: None }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationReport {
    pub generated: bool,
    pub free: bool,
    /// Dimension of the span of products of two generators of `V ⊗ A`.
    pub product_rank: usize,
    /// Dimension of the length-two component of `T_A(V) ⊗ A`.
    pub target_dim: usize,
}

/// Whether `V ⊗ A` generates `T_A(V) ⊗ A` in length two, and whether the
/// products of pairs of generators are linearly independent (one letter).
pub fn generation_freeness_report<S: Field>(l: &LinearEas<S>) -> GenerationReport {
    let alg = FreeAlgebra::new(l);
    let legs = l.legs();
    let d = l.dim();
    let mut span = Span::new();
    let x = TypedWord::generator(0);
    for a in 0..d {
        for b in 0..d {
            let p = envelope_product(
                &alg,
                &legs,
                &FormalSum::basis((x.clone(), a)),
                &FormalSum::basis((x.clone(), b)),
            )
            .expect("indices in range");
            span.insert(&p);
        }
    }
    let rank = span.dim();
    GenerationReport { generated: rank == d * d, free: rank == d * d, product_rank: rank, target_dim: d * d }
}

/// Structure constants of products `*_{α,β}` on a `dim`-dimensional space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoParamAlgebra<S> {
    omega: usize,
    dim: usize,
    consts: Vec<S>,
}

impl<S: Scalar> TwoParamAlgebra<S> {
    pub fn zero(omega: usize, dim: usize) -> Self {
        TwoParamAlgebra { omega, dim, consts: vec![S::zero(); omega * omega * dim * dim * dim] }
    }

    /// `f(α, β, i, j)` is `e_i *_{α,β} e_j` as a coordinate vector.
    pub fn from_fn(omega: usize, dim: usize, f: impl Fn(usize, usize, usize, usize) -> Vec<S>) -> Self {
        let mut t = Self::zero(omega, dim);
        for al in 0..omega {
            for be in 0..omega {
                for i in 0..dim {
                    for j in 0..dim {
                        for (k, c) in f(al, be, i, j).into_iter().enumerate() {
                            t.set(al, be, i, j, k, c);
                        }
                    }
                }
            }
        }
        t
    }

    fn idx(&self, al: usize, be: usize, i: usize, j: usize, k: usize) -> usize {
        (((al * self.omega + be) * self.dim + i) * self.dim + j) * self.dim + k
    }

    pub fn omega(&self) -> usize {
        self.omega
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coefficient of `e_k` in `e_i *_{α,β} e_j`.
    pub fn get(&self, al: usize, be: usize, i: usize, j: usize, k: usize) -> &S {
        &self.consts[self.idx(al, be, i, j, k)]
    }

    pub fn set(&mut self, al: usize, be: usize, i: usize, j: usize, k: usize, c: S) {
        let n = self.idx(al, be, i, j, k);
        self.consts[n] = c;
    }

    pub fn product(&self, al: usize, be: usize, x: &FormalSum<usize, S>, y: &FormalSum<usize, S>) -> FormalSum<usize, S> {
        x.bilinear(y, |&i, &j| {
            FormalSum::from_terms((0..self.dim).map(|k| (k, self.get(al, be, i, j, k).clone())))
        })
    }
}

/// `xα * yβ = (x *_{α,β} y)(α→β)` on `V ⊗ KΩ`; keys are `(vector index, α)`.
pub fn two_param_star<S: Scalar>(
    arrow: &Table,
    alg: &TwoParamAlgebra<S>,
    xa: &FormalSum<(usize, usize), S>,
    yb: &FormalSum<(usize, usize), S>,
) -> FormalSum<(usize, usize), S> {
    xa.bilinear(yb, |&(i, al), &(j, be)| {
        let g = arrow[al][be];
        alg.product(al, be, &FormalSum::basis(i), &FormalSum::basis(j)).map_keys(|&k| (k, g))
    })
}

/// First `(α, β, γ, i, j, k)` where
/// `(e_i *_{α,β} e_j) *_{α→β,γ} e_k = e_i *_{α,β→γ} (e_j *_{β,γ} e_k)` fails.
pub fn two_param_axiom_failure<S: Scalar>(
    arrow: &Table,
    alg: &TwoParamAlgebra<S>,
) -> Option<[usize; 6]> {
    let (w, m) = (alg.omega, alg.dim);
    let e = |i: usize| FormalSum::basis(i);
    for al in 0..w {
        for be in 0..w {
            for ga in 0..w {
                for i in 0..m {
                    for j in 0..m {
                        for k in 0..m {
                            let lhs = alg.product(arrow[al][be], ga, &alg.product(al, be, &e(i), &e(j)), &e(k));
                            let rhs = alg.product(al, arrow[be][ga], &e(i), &alg.product(be, ga, &e(j), &e(k)));
                            if lhs != rhs {
                                return Some([al, be, ga, i, j, k]);
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// First basis triple `((i,α), (j,β), (k,γ))` where the graded product on
/// `V ⊗ KΩ` fails to be associative.
pub fn graded_associativity_failure<S: Scalar>(
    arrow: &Table,
    alg: &TwoParamAlgebra<S>,
) -> Option<[(usize, usize); 3]> {
    let basis: Vec<(usize, usize)> = (0..alg.dim).flat_map(|i| (0..alg.omega).map(move |a| (i, a))).collect();
    let e = |p: &(usize, usize)| FormalSum::basis(*p);
    for p in &basis {
        for q in &basis {
            let pq = two_param_star(arrow, alg, &e(p), &e(q));
            for r in &basis {
                let lhs = two_param_star(arrow, alg, &pq, &e(r));
                let rhs = two_param_star(arrow, alg, &e(p), &two_param_star(arrow, alg, &e(q), &e(r)));
                if lhs != rhs {
                    return Some([*p, *q, *r]);
                }
            }
        }
    }
    None
}

/// Basis element of the free algebra over the dual two-parameter operad:
/// a bare generator `u`, or `α_1 u_1 … α_k u_k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TwoParamWord {
    Generator(usize),
    Decorated(Vec<(usize, usize)>),
}

impl TwoParamWord {
    /// `α_1 → … → α_k`, or `None` for a bare generator.
    pub fn weight(&self, arrow: &Table) -> Option<usize> {
        match self {
            TwoParamWord::Generator(_) => None,
            TwoParamWord::Decorated(w) => w.iter().map(|p| p.0).reduce(|a, b| arrow[a][b]),
        }
    }

    fn decorate(&self, arrow: &Table, al: usize) -> Option<Vec<(usize, usize)>> {
        match self {
            TwoParamWord::Generator(u) => Some(vec![(al, *u)]),
            TwoParamWord::Decorated(w) => (self.weight(arrow) == Some(al)).then(|| w.clone()),
        }
    }
}

/// `u *_{α,β} v`, or `None` when a Kronecker delta vanishes.
pub fn dual_free_product(
    arrow: &Table,
    al: usize,
    be: usize,
    u: &TwoParamWord,
    v: &TwoParamWord,
) -> Option<TwoParamWord> {
    let mut w = u.decorate(arrow, al)?;
    w.extend(v.decorate(arrow, be)?);
    Some(TwoParamWord::Decorated(w))
}

/// All basis words with at most `max_letters` letters over `gens` generators.
pub fn two_param_words(omega: usize, gens: usize, max_letters: usize) -> Vec<TwoParamWord> {
    let mut out: Vec<TwoParamWord> = (0..gens).map(TwoParamWord::Generator).collect();
    let mut layer: Vec<Vec<(usize, usize)>> = vec![vec![]];
    for k in 1..=max_letters {
        let mut next = Vec::new();
        for w in &layer {
            for a in 0..omega {
                for u in 0..gens {
                    let mut w2 = w.clone();
                    w2.push((a, u));
                    next.push(w2);
                }
            }
        }
        layer = next;
        if k >= 2 {
            out.extend(layer.iter().cloned().map(TwoParamWord::Decorated));
        }
    }
    out
}

/// Checks the two-parameter axiom and both annihilation relations for
/// [`dual_free_product`] on all triples of words whose letters total at most
/// `max_letters`. Returns the first failure as a message.
pub fn check_dual_free_relations(arrow: &Table, gens: usize, max_letters: usize) -> std::result::Result<usize, String> {
    let w = arrow.len();
    let words = two_param_words(w, gens, max_letters);
    let letters = |x: &TwoParamWord| match x {
        TwoParamWord::Generator(_) => 1,
        TwoParamWord::Decorated(v) => v.len(),
    };
    let prod = |a, b, x: Option<TwoParamWord>, y: Option<TwoParamWord>| -> Option<TwoParamWord> {
        dual_free_product(arrow, a, b, &x?, &y?)
    };
    let mut checked = 0;
    for x in &words {
        for y in &words {
            for z in &words {
                if letters(x) + letters(y) + letters(z) > max_letters {
                    continue;
                }
                let (sx, sy, sz) = (Some(x.clone()), Some(y.clone()), Some(z.clone()));
                for al in 0..w {
                    for be in 0..w {
                        for ga in 0..w {
                            let l = prod(arrow[al][be], ga, prod(al, be, sx.clone(), sy.clone()), sz.clone());
                            let r = prod(al, arrow[be][ga], sx.clone(), prod(be, ga, sy.clone(), sz.clone()));
                            checked += 1;
                            if l != r {
                                return Err(format!("two-parameter axiom fails at {:?} for {x:?}, {y:?}, {z:?}", (al, be, ga)));
                            }
                            for de in 0..w {
                                if arrow[al][be] != ga
                                    && prod(ga, de, prod(al, be, sx.clone(), sy.clone()), sz.clone()).is_some()
                                {
                                    return Err(format!("left annihilation fails at {:?}", (al, be, ga, de)));
                                }
                                if be != arrow[ga][de]
                                    && prod(al, be, sx.clone(), prod(ga, de, sy.clone(), sz.clone())).is_some()
                                {
                                    return Err(format!("right annihilation fails at {:?}", (al, be, ga, de)));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(checked)
}
