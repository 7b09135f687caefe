//! Nonsymmetric operads given by explicit partial compositions: `As_Φ`, the
//! word operads `P` and `P₀`, decorated-tree rewriting, normal-form counts,
//! Koszul orthogonality and recognition of an ℓEAS from composition data.
//!
//! An element of `As_Φ(n)` is stored as a tuple `(a_1, …, a_{n-1})` in
//! left-to-right order; the tuple `(a_1, …, a_k)` corresponds to the left comb
//! `(…((x_1 *_{a_1} x_2) *_{a_2} x_3)…) *_{a_k} x_{k+1}`. The same element is
//! often written right-to-left as `a_k … a_1`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::eas::Table;
use crate::error::{Error, Result};
use crate::exactlin::{FormalSum, Matrix, Span};
use crate::leas::{check_leas, BraidWitness, Legs, LinearEas};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperadElement<S: Scalar> {
    pub arity: usize,
    pub vector: FormalSum<Vec<usize>, S>,
}

impl<S: Scalar> OperadElement<S> {
    pub fn new(arity: usize, vector: FormalSum<Vec<usize>, S>) -> Self {
        OperadElement { arity, vector }
    }

    pub fn basis(arity: usize, key: Vec<usize>) -> Self {
        OperadElement { arity, vector: FormalSum::basis(key) }
    }

    pub fn is_zero(&self) -> bool {
        self.vector.is_zero()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "arity": self.arity,
            "terms": self.vector.iter().map(|(k, c)| json!({"key": k, "coef": c.to_string()})).collect::<Vec<_>>(),
        })
    }
}

/// Partial composition of one basis pair in `As_Φ`; `i` is 1-based.
fn asphi_basis<S: Scalar>(legs: &[Legs<S>], d: usize, f: &[usize], i: usize, g: &[usize]) -> FormalSum<Vec<usize>, S> {
    if i == 1 {
        return FormalSum::basis(g.iter().chain(f).copied().collect());
    }
    // Run Φ down the staircase: e_l = a_{i-1}, Φ(e_j ⊗ b_j) = Σ c_j ⊗ e_{j-1}.
    let mut states: Vec<(usize, Vec<usize>, S)> = vec![(f[i - 2], Vec::new(), S::one())];
    for &b in g.iter().rev() {
        let mut next = Vec::new();
        for (e, cs, k) in &states {
            for (c, e2, coef) in &legs[e * d + b] {
                let mut cs2 = cs.clone();
                cs2.push(*c);
                next.push((*e2, cs2, k.clone() * coef.clone()));
            }
        }
        states = next;
    }
    let mut out = FormalSum::zero();
    for (e0, cs, k) in states {
        let mut t: Vec<usize> = f[..i - 2].to_vec();
        t.push(e0);
        t.extend(cs.iter().rev());
        t.extend(&f[i - 1..]);
        out.add_term(t, k);
    }
    out
}

/// `f ∘_i g` in `As_Φ`.
pub fn compose_asphi<S: Scalar>(
    l: &LinearEas<S>,
    f: &OperadElement<S>,
    i: usize,
    g: &OperadElement<S>,
) -> Result<OperadElement<S>> {
    AsPhi::new(l).compose(f, i, g)
}

/// A nonsymmetric operad presented by a basis in each arity and bilinear
/// partial compositions.
pub trait CompositionProvider<S: Scalar>: Sync {
    fn basis(&self, arity: usize) -> Vec<OperadElement<S>>;
    fn compose(&self, f: &OperadElement<S>, i: usize, g: &OperadElement<S>) -> Result<OperadElement<S>>;
    fn unit(&self) -> OperadElement<S>;
}

fn check_position(i: usize, arity: usize) -> Result<()> {
    if i == 0 || i > arity {
        return Err(Error::PositionOutOfRange { pos: i, arity });
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct AsPhi<S> {
    dim: usize,
    legs: Vec<Legs<S>>,
}

impl<S: Scalar> AsPhi<S> {
    pub fn new(l: &LinearEas<S>) -> Self {
        AsPhi { dim: l.dim(), legs: l.legs() }
    }
}

fn tuples(d: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..d).map(move |a| {
                    let mut t2 = t.clone();
                    t2.push(a);
                    t2
                })
            })
            .collect();
    }
    out
}

impl<S: Scalar> CompositionProvider<S> for AsPhi<S> {
    fn basis(&self, arity: usize) -> Vec<OperadElement<S>> {
        if arity == 0 {
            return Vec::new();
        }
        tuples(self.dim, arity - 1).into_iter().map(|t| OperadElement::basis(arity, t)).collect()
    }

    fn compose(&self, f: &OperadElement<S>, i: usize, g: &OperadElement<S>) -> Result<OperadElement<S>> {
        check_position(i, f.arity)?;
        for (el, n) in [(f, f.arity), (g, g.arity)] {
            if let Some(k) = el.vector.keys().find(|k| k.len() + 1 != n || k.iter().any(|&a| a >= self.dim)) {
                return Err(Error::DimensionMismatch(format!("tuple {k:?} is not a basis element of arity {n}")));
            }
        }
        let v = f.vector.bilinear(&g.vector, |a, b| asphi_basis(&self.legs, self.dim, a, i, b));
        Ok(OperadElement::new(f.arity + g.arity - 1, v))
    }

    fn unit(&self) -> OperadElement<S> {
        OperadElement::basis(1, Vec::new())
    }
}

/// `α_1 → … → α_n`.
pub fn word_weight(arrow: &Table, w: &[usize]) -> Option<usize> {
    w.iter().copied().reduce(|a, b| arrow[a][b])
}

/// `I = Σ_α α`.
pub fn word_unit<S: Scalar>(omega: usize) -> FormalSum<Vec<usize>, S> {
    (0..omega).map(|a| (vec![a], S::one())).collect()
}

/// `w ∘ (w_1, …, w_n) = δ_{w, |w_1|…|w_n|} w_1 … w_n`, extended linearly in
/// each argument.
pub fn word_compose<S: Scalar>(
    arrow: &Table,
    w: &[usize],
    args: &[FormalSum<Vec<usize>, S>],
) -> Result<FormalSum<Vec<usize>, S>> {
    if w.len() != args.len() {
        return Err(Error::ArityMismatch { expected: w.len(), got: args.len() });
    }
    let mut acc: FormalSum<Vec<usize>, S> = FormalSum::basis(Vec::new());
    for (&letter, arg) in w.iter().zip(args) {
        let gated: FormalSum<Vec<usize>, S> = arg
            .iter()
            .filter(|(v, _)| word_weight(arrow, v) == Some(letter))
            .map(|(v, c)| (v.clone(), c.clone()))
            .collect();
        acc = acc.bilinear(&gated, |a, b| FormalSum::basis(a.iter().chain(b).copied().collect()));
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// The word operad `P` over a semigroup `(Ω, →)`, or its suboperad `P₀`
/// whose arity-one part is spanned by the unit alone.
#[derive(Clone, Debug)]
pub struct WordOperad {
    arrow: Table,
    reduced: bool,
}

impl WordOperad {
    pub fn full(arrow: Table) -> Self {
        WordOperad { arrow, reduced: false }
    }

    pub fn reduced(arrow: Table) -> Self {
        WordOperad { arrow, reduced: true }
    }

    pub fn omega(&self) -> usize {
        self.arrow.len()
    }
}

impl<S: Scalar> CompositionProvider<S> for WordOperad {
    fn basis(&self, arity: usize) -> Vec<OperadElement<S>> {
        if arity == 0 {
            return Vec::new();
        }
        if arity == 1 && self.reduced {
            return vec![OperadElement::new(1, word_unit(self.omega()))];
        }
        tuples(self.omega(), arity).into_iter().map(|t| OperadElement::basis(arity, t)).collect()
    }

    fn compose(&self, f: &OperadElement<S>, i: usize, g: &OperadElement<S>) -> Result<OperadElement<S>> {
        check_position(i, f.arity)?;
        let w = self.omega();
        let v = f.vector.bilinear(&g.vector, |a, b| {
            if a.len() != f.arity || b.len() != g.arity || a.iter().chain(b).any(|&x| x >= w) {
                return FormalSum::zero();
            }
            if word_weight(&self.arrow, b) == Some(a[i - 1]) {
                FormalSum::basis(a[..i - 1].iter().chain(b).chain(&a[i..]).copied().collect())
            } else {
                FormalSum::zero()
            }
        });
        Ok(OperadElement::new(f.arity + g.arity - 1, v))
    }

    fn unit(&self) -> OperadElement<S> {
        OperadElement::new(1, word_unit(self.omega()))
    }
}

/// Wraps a provider and negates `f ∘_i g` for one basis pair; a negative
/// control for the axiom check and for recognition.
pub struct Corrupted<'a, P> {
    pub inner: &'a P,
    pub position: usize,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl<S: Scalar, P: CompositionProvider<S>> CompositionProvider<S> for Corrupted<'_, P> {
    fn basis(&self, arity: usize) -> Vec<OperadElement<S>> {
        self.inner.basis(arity)
    }

    fn compose(&self, f: &OperadElement<S>, i: usize, g: &OperadElement<S>) -> Result<OperadElement<S>> {
        let mut out = OperadElement::new(f.arity + g.arity - 1, FormalSum::zero());
        for (a, ca) in &f.vector {
            for (b, cb) in &g.vector {
                let r = self.inner.compose(
                    &OperadElement::basis(f.arity, a.clone()),
                    i,
                    &OperadElement::basis(g.arity, b.clone()),
                )?;
                let mut k = ca.clone() * cb.clone();
                if i == self.position && *a == self.left && *b == self.right {
                    k = -k;
                }
                out.vector.add_scaled(&r.vector, &k);
            }
        }
        Ok(out)
    }

    fn unit(&self) -> OperadElement<S> {
        self.inner.unit()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub holds: bool,
    pub checked: usize,
    pub failure: Option<String>,
}

impl AxiomReport {
    pub fn to_json(&self) -> Value {
        json!({"holds": self.holds, "checked": self.checked, "failure": self.failure})
    }
}

fn keys_of<S: Scalar>(e: &OperadElement<S>) -> String {
    let ks: Vec<_> = e.vector.keys().collect();
    format!("{ks:?}")
}

/// Sequential and parallel associativity and unit laws on all basis
/// elements whose composites have arity ≤ `max_arity`.
pub fn operad_axiom_check<S: Scalar, P: CompositionProvider<S>>(p: &P, max_arity: usize) -> AxiomReport {
    let basis: Vec<Vec<OperadElement<S>>> = (0..=max_arity).map(|n| p.basis(n)).collect();
    let unit = p.unit();
    let mut checked = 0;
    let fail = |checked, msg: String| AxiomReport { holds: false, checked, failure: Some(msg) };
    let comp = |f: &OperadElement<S>, i, g: &OperadElement<S>| p.compose(f, i, g);

    for n in 1..=max_arity {
        for f in &basis[n] {
            checked += 1;
            match comp(&unit, 1, f) {
                Ok(r) if r == *f => {}
                _ => return fail(checked, format!("left unit fails on {}", keys_of(f))),
            }
            for i in 1..=n {
                checked += 1;
                match comp(f, i, &unit) {
                    Ok(r) if r == *f => {}
                    _ => return fail(checked, format!("right unit fails on {} at {i}", keys_of(f))),
                }
            }
        }
    }

    let shapes: Vec<(usize, usize, usize)> = (1..=max_arity)
        .flat_map(|a| (1..=max_arity).flat_map(move |b| (1..=max_arity).map(move |c| (a, b, c))))
        .filter(|&(a, b, c)| a + b + c - 2 <= max_arity)
        .collect();
    let results: Vec<std::result::Result<usize, String>> = shapes
        .par_iter()
        .map(|&(na, nb, nc)| {
            let mut checked = 0usize;
            for f in &basis[na] {
                for g in &basis[nb] {
                    for h in &basis[nc] {
                        for i in 1..=na {
                            let fg = comp(f, i, g).map_err(|e| e.to_string())?;
                            for j in 1..=nb {
                                checked += 1;
                                let lhs = comp(&fg, i + j - 1, h).map_err(|e| e.to_string())?;
                                let gh = comp(g, j, h).map_err(|e| e.to_string())?;
                                let rhs = comp(f, i, &gh).map_err(|e| e.to_string())?;
                                if lhs != rhs {
                                    return Err(format!(
                                        "sequential law fails: f={}, g={}, h={}, i={i}, j={j}",
                                        keys_of(f),
                                        keys_of(g),
                                        keys_of(h)
                                    ));
                                }
                            }
                            for j in i + 1..=na {
                                checked += 1;
                                let lhs = comp(&fg, j + nb - 1, h).map_err(|e| e.to_string())?;
                                let fh = comp(f, j, h).map_err(|e| e.to_string())?;
                                let rhs = comp(&fh, i, g).map_err(|e| e.to_string())?;
                                if lhs != rhs {
                                    return Err(format!(
                                        "parallel law fails: f={}, g={}, h={}, i={i}, j={j}",
                                        keys_of(f),
                                        keys_of(g),
                                        keys_of(h)
                                    ));
                                }
                            }
                        }
                    }
                }
            }
            Ok(checked)
        })
        .collect();
    for r in results {
        match r {
            Ok(c) => checked += c,
            Err(msg) => return fail(checked, msg),
        }
    }
    AxiomReport { holds: true, checked, failure: None }
}

/// Dimensions of the suboperad generated by arity 2, for arities
/// `1..=max_arity`: grafting one generator at a time onto a basis of the
/// previous arity.
pub fn generated_dimensions<S: Field, P: CompositionProvider<S>>(p: &P, max_arity: usize) -> Vec<usize> {
    let gens = p.basis(2);
    let mut dims = vec![1];
    let mut current: Vec<OperadElement<S>> = vec![p.unit()];
    for _ in 2..=max_arity {
        let mut span = Span::new();
        let mut next = Vec::new();
        for b in &current {
            for i in 1..=b.arity {
                for g in &gens {
                    let r = p.compose(b, i, g).expect("positions in range");
                    if span.insert(&r.vector) {
                        next.push(r);
                    }
                }
            }
        }
        dims.push(span.dim());
        current = next;
    }
    dims
}

/// Planar binary tree with decorated internal vertices.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tree<D> {
    Leaf,
    Node(D, Box<Tree<D>>, Box<Tree<D>>),
}

impl<D: fmt::Debug> fmt::Debug for Tree<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf => write!(f, "|"),
            Tree::Node(d, l, r) => write!(f, "({l:?} {d:?} {r:?})"),
        }
    }
}

impl<D: Clone> Tree<D> {
    pub fn node(d: D, l: Tree<D>, r: Tree<D>) -> Self {
        Tree::Node(d, Box::new(l), Box::new(r))
    }

    pub fn leaves(&self) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Node(_, l, r) => l.leaves() + r.leaves(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Tree::Leaf)
    }

    /// Left comb with decorations `d_1, …, d_k` from the bottom up.
    pub fn left_comb(decs: &[D]) -> Self {
        decs.iter().fold(Tree::Leaf, |acc, d| Tree::node(d.clone(), acc, Tree::Leaf))
    }

    /// Decorations of a left comb from the bottom up, or `None`.
    pub fn comb_decorations(&self) -> Option<Vec<D>> {
        match self {
            Tree::Leaf => Some(Vec::new()),
            Tree::Node(d, l, r) if r.is_leaf() => {
                let mut v = l.comb_decorations()?;
                v.push(d.clone());
                Some(v)
            }
            _ => None,
        }
    }

    /// All tree shapes with `n` leaves, decorated from `alphabet`.
    pub fn all(n: usize, alphabet: &[D]) -> Vec<Self> {
        if n == 1 {
            return vec![Tree::Leaf];
        }
        let mut out = Vec::new();
        for k in 1..n {
            let ls = Self::all(k, alphabet);
            let rs = Self::all(n - k, alphabet);
            for d in alphabet {
                for l in &ls {
                    for r in &rs {
                        out.push(Tree::node(d.clone(), l.clone(), r.clone()));
                    }
                }
            }
        }
        out
    }
}

impl<D: serde::Serialize> Tree<D> {
    pub fn to_json(&self) -> Value {
        match self {
            Tree::Leaf => json!("leaf"),
            Tree::Node(d, l, r) => json!(["node", d, l.to_json(), r.to_json()]),
        }
    }
}

pub type TreeSum<D, S> = FormalSum<Tree<D>, S>;

/// A rewriting system on decorated trees given by a rule at the root.
pub trait RewriteRules<S: Scalar>: Sync {
    type Dec: Clone + Ord + std::hash::Hash + fmt::Debug + Send + Sync;

    fn alphabet(&self) -> Vec<Self::Dec>;

    /// The one-step rewrite of `t` if its root is a redex.
    fn rewrite_root(&self, t: &Tree<Self::Dec>) -> Option<TreeSum<Self::Dec, S>>;
}

/// `a` at the root over `b` in the right child rewrites to the left comb:
/// `x *_a (y *_b z) → Σ Φ[(c,e),(a,b)] (x *_e y) *_c z`.
pub struct AsPhiRules<S> {
    dim: usize,
    legs: Vec<Legs<S>>,
}

impl<S: Scalar> AsPhiRules<S> {
    pub fn new(l: &LinearEas<S>) -> Self {
        AsPhiRules { dim: l.dim(), legs: l.legs() }
    }
}

impl<S: Scalar> RewriteRules<S> for AsPhiRules<S> {
    type Dec = usize;

    fn alphabet(&self) -> Vec<usize> {
        (0..self.dim).collect()
    }

    fn rewrite_root(&self, t: &Tree<usize>) -> Option<TreeSum<usize, S>> {
        let Tree::Node(a, x, right) = t else { return None };
        let Tree::Node(b, y, z) = right.as_ref() else { return None };
        let mut out = FormalSum::zero();
        for (c, e, k) in &self.legs[a * self.dim + b] {
            let inner = Tree::Node(*e, x.clone(), y.clone());
            out.add_term(Tree::Node(*c, Box::new(inner), z.clone()), k.clone());
        }
        Some(out)
    }
}

/// Two-parameter rules over a semigroup `(Ω, →)`:
/// `((x *_{α,β} y) *_{α→β,γ} z) → x *_{α,β→γ} (y *_{β,γ} z)`.
pub struct TwoParamRules {
    arrow: Table,
}

impl TwoParamRules {
    pub fn new(arrow: Table) -> Self {
        TwoParamRules { arrow }
    }
}

impl<S: Scalar> RewriteRules<S> for TwoParamRules {
    type Dec = (usize, usize);

    fn alphabet(&self) -> Vec<(usize, usize)> {
        let w = self.arrow.len();
        (0..w).flat_map(|a| (0..w).map(move |b| (a, b))).collect()
    }

    fn rewrite_root(&self, t: &Tree<(usize, usize)>) -> Option<TreeSum<(usize, usize), S>> {
        let Tree::Node((p, ga), left, z) = t else { return None };
        let Tree::Node((al, be), x, y) = left.as_ref() else { return None };
        if self.arrow[*al][*be] != *p {
            return None;
        }
        let inner = Tree::Node((*be, *ga), y.clone(), z.clone());
        Some(FormalSum::basis(Tree::Node((*al, self.arrow[*be][*ga]), x.clone(), Box::new(inner))))
    }
}

/// Rewrites of `t` at every vertex, one step each.
pub fn one_step_rewrites<S: Scalar, R: RewriteRules<S>>(rules: &R, t: &Tree<R::Dec>) -> Vec<TreeSum<R::Dec, S>> {
    let mut out = Vec::new();
    if let Some(r) = rules.rewrite_root(t) {
        out.push(r);
    }
    if let Tree::Node(d, l, r) = t {
        for s in one_step_rewrites(rules, l) {
            out.push(s.map_keys(|l2| Tree::Node(d.clone(), Box::new(l2.clone()), r.clone())));
        }
        for s in one_step_rewrites(rules, r) {
            out.push(s.map_keys(|r2| Tree::Node(d.clone(), l.clone(), Box::new(r2.clone()))));
        }
    }
    out
}

/// Leftmost-innermost redex rewritten once, or `None` for a normal form.
fn step_leftmost_innermost<S: Scalar, R: RewriteRules<S>>(rules: &R, t: &Tree<R::Dec>) -> Option<TreeSum<R::Dec, S>> {
    if let Tree::Node(d, l, r) = t {
        if let Some(s) = step_leftmost_innermost(rules, l) {
            return Some(s.map_keys(|l2| Tree::Node(d.clone(), Box::new(l2.clone()), r.clone())));
        }
        if let Some(s) = step_leftmost_innermost(rules, r) {
            return Some(s.map_keys(|r2| Tree::Node(d.clone(), l.clone(), Box::new(r2.clone()))));
        }
    }
    rules.rewrite_root(t)
}

/// Normal form of a single tree, memoised in `cache`.
pub fn normal_form_of<S: Scalar, R: RewriteRules<S>>(
    rules: &R,
    t: &Tree<R::Dec>,
    cache: &mut HashMap<Tree<R::Dec>, TreeSum<R::Dec, S>>,
) -> TreeSum<R::Dec, S> {
    if let Some(r) = cache.get(t) {
        return r.clone();
    }
    let out = match step_leftmost_innermost(rules, t) {
        None => FormalSum::basis(t.clone()),
        Some(s) => {
            let mut acc = FormalSum::zero();
            for (u, c) in &s {
                acc.add_scaled(&normal_form_of(rules, u, cache), c);
            }
            acc
        }
    };
    cache.insert(t.clone(), out.clone());
    out
}

pub fn rewrite_normal_form<S: Scalar, R: RewriteRules<S>>(rules: &R, t: &TreeSum<R::Dec, S>) -> TreeSum<R::Dec, S> {
    let mut cache = HashMap::new();
    let mut out = FormalSum::zero();
    for (u, c) in t {
        out.add_scaled(&normal_form_of(rules, u, &mut cache), c);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConfluenceReport<D: Ord, S: Scalar> {
    pub confluent: bool,
    pub checked: usize,
    /// A monomial with two one-step rewrites whose normal forms differ.
    pub witness: Option<(Tree<D>, TreeSum<D, S>, TreeSum<D, S>)>,
}

/// Local confluence on every decorated monomial with four leaves: each
/// one-step rewrite is normalised and all results must agree. Every critical
/// monomial of a quadratic rule system has four leaves, so this is exactly
/// confluence.
pub fn confluence_check<S: Scalar, R: RewriteRules<S>>(rules: &R) -> ConfluenceReport<R::Dec, S> {
    let trees = Tree::all(4, &rules.alphabet());
    let mut cache = HashMap::new();
    let mut checked = 0;
    for t in &trees {
        let rewrites = one_step_rewrites(rules, t);
        if rewrites.len() < 2 {
            continue;
        }
        checked += 1;
        let nf = |s: &TreeSum<R::Dec, S>, cache: &mut HashMap<_, _>| {
            let mut acc = FormalSum::zero();
            for (u, c) in s {
                acc.add_scaled(&normal_form_of(rules, u, cache), c);
            }
            acc
        };
        let first = nf(&rewrites[0], &mut cache);
        for r in &rewrites[1..] {
            let other = nf(r, &mut cache);
            if other != first {
                return ConfluenceReport { confluent: false, checked, witness: Some((t.clone(), first, other)) };
            }
        }
    }
    ConfluenceReport { confluent: true, checked, witness: None }
}

/// Number of two-parameter normal forms with `n` leaves: trees in which no
/// internal left child with decoration `(α, β)` sits under a vertex whose
/// first decoration is `α→β`.
pub fn count_normal_forms_two_param(arrow: &Table, n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    if n > 64 {
        return Err(Error::SizeLimitExceeded(format!("n = {n} is too large for the normal-form count")));
    }
    let w = arrow.len();
    // pairs_with[v] = #{(p,q) : p→q = v}; avoid[u][v] = #{(p,q) : p ≠ u, p→q = v}.
    let mut pairs_with = vec![BigInt::zero(); w];
    let mut avoid = vec![vec![BigInt::zero(); w]; w];
    for p in 0..w {
        for q in 0..w {
            let v = arrow[p][q];
            pairs_with[v] += 1;
            for (u, row) in avoid.iter_mut().enumerate() {
                if p != u {
                    row[v] += 1;
                }
            }
        }
    }
    // by_value[m][v]: normal trees with m ≥ 2 leaves whose root has p→q = v.
    let mut total = vec![BigInt::zero(); n + 1];
    let mut by_value = vec![vec![BigInt::zero(); w]; n + 1];
    total[1] = BigInt::one();
    for m in 2..=n {
        for v in 0..w {
            let mut acc = &pairs_with[v] * &total[m - 1];
            for k in 2..m {
                for u in 0..w {
                    if !by_value[k][u].is_zero() {
                        acc += &by_value[k][u] * &avoid[u][v] * &total[m - k];
                    }
                }
            }
            by_value[m][v] = acc;
        }
        total[m] = by_value[m].iter().sum();
    }
    Ok(total[n].clone())
}

/// Normal forms of the two-parameter rules listed explicitly.
pub fn enumerate_normal_forms_two_param(arrow: &Table, n: usize) -> Vec<Tree<(usize, usize)>> {
    let rules = TwoParamRules::new(arrow.clone());
    let alphabet = RewriteRules::<crate::scalar::Rational>::alphabet(&rules);
    Tree::all(n, &alphabet)
        .into_iter()
        .filter(|t| one_step_rewrites::<crate::scalar::Rational, _>(&rules, t).is_empty())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulReport {
    pub orthogonal: bool,
    pub dim_i: usize,
    pub dim_i_prime: usize,
    pub ambient: usize,
}

impl KoszulReport {
    pub fn passes(&self) -> bool {
        self.orthogonal && self.dim_i + self.dim_i_prime == self.ambient && self.dim_i == self.ambient / 2
    }
}

/// The relation space `I` of `As_Φ(3)` and `I′` of the opposite operad for
/// `Φ*`, inside the weight-two free space with basis `∘1(a,b)` (first `d²`
/// coordinates) and `∘2(a,b)` (last `d²`). The pairing is `+1` on `∘1` and
/// `-1` on `∘2`.
pub fn koszul_orthogonality_check<S: Field>(l: &LinearEas<S>) -> KoszulReport {
    let d = l.dim();
    let n = d * d;
    let phi = l.phi();
    let rel_i = Matrix::from_fn(n, 2 * n, |r, col| {
        if col >= n {
            if col - n == r { S::one() } else { S::zero() }
        } else {
            -phi.get(col, r).clone()
        }
    });
    let rel_ip = Matrix::from_fn(n, 2 * n, |r, col| {
        if col < n {
            if col == r { -S::one() } else { S::zero() }
        } else {
            phi.get(r, col - n).clone()
        }
    });
    let pairing = Matrix::from_fn(2 * n, 2 * n, |i, j| {
        if i != j {
            S::zero()
        } else if i < n {
            S::one()
        } else {
            -S::one()
        }
    });
    let prod = rel_ip.mul(&pairing).and_then(|m| m.mul(&rel_i.transpose())).expect("compatible shapes");
    KoszulReport { orthogonal: prod.is_zero(), dim_i: rel_i.rank(), dim_i_prime: rel_ip.rank(), ambient: 2 * n }
}

/// Recovers `Φ` from an operad generated in arity two: `A` is arity two,
/// `ι₃(a⊗b) = a ∘_1 b` must be a basis of arity three, and `a ∘_2 b` is
/// expanded in that basis.
pub fn extract_leas<S: Field, P: CompositionProvider<S>>(p: &P) -> Result<LinearEas<S>> {
    let a_basis = p.basis(2);
    let d = a_basis.len();
    let dim3 = p.basis(3).len();
    if dim3 != d * d {
        return Err(Error::NotRecognizable(format!("arity 3 has dimension {dim3}, expected {}", d * d)));
    }
    let mut iota = Vec::with_capacity(d * d);
    let mut second = Vec::with_capacity(d * d);
    for a in &a_basis {
        for b in &a_basis {
            iota.push(p.compose(a, 1, b)?.vector);
            second.push(p.compose(a, 2, b)?.vector);
        }
    }
    let keys: Vec<Vec<usize>> = iota
        .iter()
        .chain(&second)
        .flat_map(|v| v.keys().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let m = Matrix::from_fn(keys.len(), d * d, |r, c| iota[c].coeff(&keys[r]));
    let rank = m.rank();
    if rank != d * d {
        return Err(Error::NotRecognizable(format!("ι₃ has rank {rank}, expected {}", d * d)));
    }
    let mut phi = Matrix::zeros(d * d, d * d);
    for (col, v) in second.iter().enumerate() {
        let rhs: Vec<S> = keys.iter().map(|k| v.coeff(k)).collect();
        let x = m
            .solve(&rhs)
            .ok_or_else(|| Error::NotRecognizable(format!("a ∘_2 b for pair {col} is not in the image of ι₃")))?;
        for (row, c) in x.into_iter().enumerate() {
            phi.set(row, col, c);
        }
    }
    let l = LinearEas::new(d, phi, None)?;
    let report = check_leas(&l);
    if let Some(BraidWitness { row, col, .. }) = report.witness {
        return Err(Error::NotRecognizable(format!(
            "extracted Φ fails the braid identity at output {row:?}, input {col:?}"
        )));
    }
    Ok(l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::eas::{groups, make_from_semigroup, make_prime, group_labels};
    use crate::leas::{dualize, linearize};
    use crate::scalar::Rational;

    fn el(arity: usize, t: &[usize]) -> OperadElement<Rational> {
        OperadElement::basis(arity, t.to_vec())
    }

    #[test]
    fn first_slot_concatenates() {
        let l = catalog::leas("C3").unwrap();
        let r = compose_asphi(&l, &el(3, &[0, 1]), 1, &el(2, &[1])).unwrap();
        assert_eq!(r, el(4, &[1, 0, 1]));
    }

    #[test]
    fn position_out_of_range() {
        let l = catalog::leas("C3").unwrap();
        assert_eq!(
            compose_asphi(&l, &el(2, &[0]), 3, &el(2, &[1])),
            Err(Error::PositionOutOfRange { pos: 3, arity: 2 })
        );
    }

    #[test]
    fn flip_inserts_blocks() {
        // EAS(Ω): a_1…a_{i-1} b_1…b_l a_i…a_k.
        let l = catalog::leas("F3").unwrap();
        let r = compose_asphi(&l, &el(3, &[0, 1]), 2, &el(3, &[1, 1])).unwrap();
        assert_eq!(r, el(5, &[0, 1, 1, 1]));
        let r = compose_asphi(&l, &el(3, &[0, 1]), 3, &el(2, &[0])).unwrap();
        assert_eq!(r, el(4, &[0, 1, 0]));
    }

    #[test]
    fn semigroup_family_translates() {
        // EAS(Z/3, +): the inserted block is a_{i-1}+b_j.
        let s = make_from_semigroup(&group_labels(3), &groups::cyclic(3)).unwrap();
        let l = linearize::<Rational>(&s).unwrap();
        let r = compose_asphi(&l, &el(3, &[2, 1]), 2, &el(3, &[1, 2])).unwrap();
        assert_eq!(r, el(5, &[2, 0, 1, 1]));
    }

    #[test]
    fn group_prime_uses_inverses() {
        // EAS′(Z/3, +): a_{i-1} - b_l - … - b_1 followed by b_1…b_l.
        let s = make_prime(&group_labels(3), &groups::cyclic(3)).unwrap();
        let l = linearize::<Rational>(&s).unwrap();
        let r = compose_asphi(&l, &el(3, &[2, 1]), 2, &el(3, &[1, 2])).unwrap();
        assert_eq!(r, el(5, &[2, 1, 2, 1]));
    }

    #[test]
    fn asphi_axioms_hold_and_corruption_is_caught() {
        let l = catalog::leas("ex2d-17").unwrap();
        let p = AsPhi::new(&l);
        assert!(operad_axiom_check(&p, 4).holds);
        let bad = Corrupted { inner: &p, position: 2, left: vec![1], right: vec![0] };
        let r = operad_axiom_check(&bad, 4);
        assert!(!r.holds);
        assert!(r.failure.is_some());
    }

    #[test]
    fn word_operad_examples() {
        let t = groups::multiplicative_mod(2);
        let i: FormalSum<Vec<usize>, Rational> = word_unit(2);
        let w = |v: &[usize]| FormalSum::<Vec<usize>, Rational>::basis(v.to_vec());
        for (al, be, ga) in [(0, 1, 1), (1, 1, 0), (1, 1, 1)] {
            let r = word_compose(&t, &[t[al][be], ga], &[w(&[al, be]), i.clone()]).unwrap();
            assert_eq!(r, w(&[al, be, ga]));
            let r = word_compose(&t, &[al, t[be][ga]], &[i.clone(), w(&[be, ga])]).unwrap();
            assert_eq!(r, w(&[al, be, ga]));
        }
        assert!(word_compose(&t, &[0, 1], &[w(&[1, 1]), i.clone()]).unwrap().is_zero());
        assert!(word_compose(&t, &[1, 1], &[w(&[0, 1]), i.clone()]).unwrap().is_zero());
        assert_eq!(word_compose(&t, &[1], &[w(&[1, 0, 1])]).unwrap(), FormalSum::zero());
        assert_eq!(word_compose(&t, &[0], &[w(&[1, 0, 1])]).unwrap(), w(&[1, 0, 1]));
        assert!(matches!(word_compose(&t, &[0, 1], &[w(&[1])]), Err(Error::ArityMismatch { expected: 2, got: 1 })));
    }

    #[test]
    fn word_operad_unit_and_axioms() {
        for t in [groups::multiplicative_mod(2), groups::cyclic(3)] {
            let p = WordOperad::reduced(t.clone());
            assert!(operad_axiom_check::<Rational, _>(&p, 4).holds);
            let full = WordOperad::full(t);
            assert!(operad_axiom_check::<Rational, _>(&full, 4).holds);
        }
    }

    #[test]
    fn reduced_word_operad_dimensions() {
        let p = WordOperad::reduced(groups::multiplicative_mod(2));
        let dims = generated_dimensions::<Rational, _>(&p, 5);
        assert_eq!(dims, vec![1, 4, 8, 16, 32]);
    }

    #[test]
    fn reduced_word_operad_is_not_recognizable() {
        let p = WordOperad::reduced(groups::multiplicative_mod(2));
        assert!(matches!(extract_leas::<Rational, _>(&p), Err(Error::NotRecognizable(_))));
    }

    #[test]
    fn recognition_round_trip() {
        for name in ["C3", "F4", "ex2d-12", "dendriform-3", "tridendriform-2"] {
            let l = catalog::leas(name).unwrap();
            let got = extract_leas(&AsPhi::new(&l)).unwrap();
            assert_eq!(got.phi(), l.phi(), "{name}");
        }
    }

    #[test]
    fn corrupted_provider_is_not_recognized() {
        let l = catalog::leas("C3").unwrap();
        let p = AsPhi::new(&l);
        let bad = Corrupted { inner: &p, position: 2, left: vec![1], right: vec![0] };
        assert!(matches!(extract_leas::<Rational, _>(&bad), Err(Error::NotRecognizable(_))));
    }

    #[test]
    fn asphi_normal_forms_are_left_combs() {
        let l = catalog::leas("ex2d-17").unwrap();
        let rules = AsPhiRules::new(&l);
        for n in 2..=4 {
            let mut span = Span::new();
            for t in Tree::all(n, &[0usize, 1]) {
                let nf = rewrite_normal_form(&rules, &FormalSum::basis(t));
                assert!(nf.keys().all(|u| u.comb_decorations().is_some()));
                span.insert(&nf);
            }
            assert_eq!(span.dim(), 1 << (n - 1));
        }
        let comb = Tree::left_comb(&[1usize, 0, 1]);
        assert_eq!(rewrite_normal_form(&rules, &FormalSum::basis(comb.clone())), FormalSum::basis(comb));
    }

    #[test]
    fn rewriting_matches_composition() {
        // x *_a (y *_b z) normalises to the comb expansion of a ∘_2 b.
        let l = catalog::leas("ex2d-10").unwrap();
        let rules = AsPhiRules::new(&l);
        for a in 0..2 {
            for b in 0..2 {
                let t = Tree::node(a, Tree::Leaf, Tree::node(b, Tree::Leaf, Tree::Leaf));
                let nf = rewrite_normal_form(&rules, &FormalSum::<_, Rational>::basis(t));
                let comp = compose_asphi(&l, &el(2, &[a]), 2, &el(2, &[b])).unwrap();
                assert_eq!(nf.map_keys(|u| u.comb_decorations().unwrap()), comp.vector);
            }
        }
    }

    #[test]
    fn confluence_matches_braid_identity() {
        let c3 = catalog::leas("C3").unwrap();
        assert!(confluence_check(&AsPhiRules::new(&c3)).confluent);
        let id = LinearEas::<Rational>::identity(2);
        let r = confluence_check(&AsPhiRules::new(&id));
        assert!(!r.confluent);
        assert!(r.witness.is_some());
    }

    #[test]
    fn two_param_rules_are_confluent() {
        let rules = TwoParamRules::new(groups::multiplicative_mod(2));
        assert!(confluence_check::<Rational, _>(&rules).confluent);
    }

    #[test]
    fn two_param_counts() {
        let z2 = groups::multiplicative_mod(2);
        assert_eq!(count_normal_forms_two_param(&z2, 3).unwrap(), BigInt::from(24));
        assert_eq!(count_normal_forms_two_param(&z2, 4).unwrap(), BigInt::from(176));
        assert_eq!(count_normal_forms_two_param(&groups::cyclic(3), 4).unwrap(), BigInt::from(2511));
        assert_eq!(count_normal_forms_two_param(&vec![vec![0]], 7).unwrap(), BigInt::from(1));
        for n in 1..=4 {
            assert_eq!(
                BigInt::from(enumerate_normal_forms_two_param(&z2, n).len()),
                count_normal_forms_two_param(&z2, n).unwrap()
            );
        }
    }

    #[test]
    fn koszul_small_cases() {
        let r = koszul_orthogonality_check(&LinearEas::<Rational>::identity(1));
        assert!(r.passes());
        assert_eq!((r.dim_i, r.dim_i_prime), (1, 1));
        let r = koszul_orthogonality_check(&catalog::leas("C3").unwrap());
        assert!(r.passes());
        assert_eq!((r.dim_i, r.dim_i_prime, r.ambient), (4, 4, 8));
    }

    #[test]
    fn dual_confluence() {
        for name in ["C3", "ex2d-15", "duplicial"] {
            let l = dualize(&catalog::leas(name).unwrap());
            assert!(confluence_check(&AsPhiRules::new(&l)).confluent);
        }
    }
}
