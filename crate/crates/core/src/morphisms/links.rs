//! Classical axiom systems versus Φ-associativity.
//!
//! Two kinds of link are checked. For dendriform, tridendriform, duplicial
//! and post-Lie, every (opposite) Φ-associative algebra satisfies the axioms;
//! they are evaluated on the free algebra with three generators. For
//! diassociative, triassociative, dual duplicial and ComTriAs algebras, every
//! algebra of that type is (opposite) Φ-associative: the Φ-relations at
//! arity 3 must lie in the span of the axioms, inside the space with basis
//! `L(a,b) = (x *_a y) *_b z` and `R(a,b) = x *_a (y *_b z)`.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use super::Side;
use crate::catalog;
use crate::eas::{are_isomorphic, check_eas, make_from_semigroup, FiniteEas};
use crate::error::{Error, Result};
use crate::exactlin::{FormalSum, Span};
use crate::freealg::{FreeAlgebra, FreeElement, TypedWord};
use crate::leas::{linearize, LinearEas};
use crate::scalar::{Field, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Var(usize),
    Op(char, Box<Expr>, Box<Expr>),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Var(i) => write!(f, "{}", ['x', 'y', 'z'][*i]),
            Expr::Op('{', l, r) => write!(f, "{{{l},{r}}}"),
            Expr::Op(o, l, r) => {
                let wrap = |e: &Expr| if matches!(e, Expr::Var(_)) { e.to_string() } else { format!("({e})") };
                write!(f, "{}{o}{}", wrap(l), wrap(r))
            }
        }
    }
}

/// `Σ lhs = Σ rhs` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Axiom {
    pub text: String,
    pub lhs: Vec<(i64, Expr)>,
    pub rhs: Vec<(i64, Expr)>,
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at position {} in {:?}", self.pos, self.src))
    }

    fn peek(&mut self) -> Option<char> {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected {c:?}")))
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(c @ ('x' | 'y' | 'z')) => {
                self.pos += 1;
                Ok(Expr::Var(c as usize - 'x' as usize))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some('{') => {
                self.pos += 1;
                let l = self.expr()?;
                self.expect(',')?;
                let r = self.expr()?;
                self.expect('}')?;
                Ok(Expr::Op('{', Box::new(l), Box::new(r)))
            }
            _ => Err(self.err("expected a variable, '(' or '{'")),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut e = self.atom()?;
        while let Some(c) = self.peek() {
            if c.is_alphanumeric() || "(){},=+-".contains(c) {
                break;
            }
            self.pos += 1;
            e = Expr::Op(c, Box::new(e), Box::new(self.atom()?));
        }
        Ok(e)
    }

    fn sum(&mut self) -> Result<Vec<(i64, Expr)>> {
        let mut out = Vec::new();
        if self.peek() == Some('0') {
            self.pos += 1;
            return Ok(out);
        }
        let mut sign = 1;
        loop {
            if self.peek() == Some('-') {
                self.pos += 1;
                sign = -sign;
            }
            let mut k = 1;
            if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                let start = self.pos;
                while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
                    self.pos += 1;
                }
                k = self.chars[start..self.pos].iter().collect::<String>().parse().map_err(|_| self.err("bad integer"))?;
            }
            out.push((sign * k, self.expr()?));
            match self.peek() {
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                _ => return Ok(out),
            }
            self.pos += 1;
        }
    }
}

impl Axiom {
    /// Parses e.g. `(x≺y)≺z = x≺(y≺z) + x≺(y≻z)`. Any character other than
    /// letters, digits, brackets and `,=+-` is a binary operation; `{x,y}` is
    /// a bracket; `0` is an empty side.
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser { chars: text.chars().collect(), pos: 0, src: text };
        let lhs = p.sum()?;
        p.expect('=')?;
        let rhs = p.sum()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(Axiom { text: text.to_owned(), lhs, rhs })
    }
}

/// Operation symbols in terms of the parameters: each symbol is a sum of
/// `coef · (u *_p v)` or, when swapped, `coef · (v *_p u)`. The bracket
/// symbol is `{`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpAssignment {
    pub ops: BTreeMap<char, Vec<(i64, usize, bool)>>,
}

impl OpAssignment {
    pub fn simple(pairs: &[(char, usize)]) -> Self {
        OpAssignment { ops: pairs.iter().map(|&(c, p)| (c, vec![(1, p, false)])).collect() }
    }

    /// Adds `{u,v} = u *_p v − v *_p u`.
    pub fn with_bracket(mut self, p: usize) -> Self {
        self.ops.insert('{', vec![(1, p, false), (-1, p, true)]);
        self
    }

    /// Symbols mapped to EAS elements with the same label.
    pub fn by_label(s: &FiniteEas, symbols: &[char]) -> Result<Self> {
        let pairs = symbols
            .iter()
            .map(|&c| {
                s.index_of(&c.to_string())
                    .map(|i| (c, i))
                    .ok_or_else(|| Error::Invalid(format!("EAS has no element labelled {c}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::simple(&pairs))
    }

    fn get(&self, c: char) -> Result<&[(i64, usize, bool)]> {
        self.ops.get(&c).map(Vec::as_slice).ok_or_else(|| Error::Invalid(format!("operation {c} is not assigned")))
    }

    pub fn to_json(&self) -> Value {
        Value::Object(
            self.ops
                .iter()
                .map(|(c, terms)| {
                    let s = terms
                        .iter()
                        .map(|(k, p, sw)| {
                            let sign = if *k < 0 { "-" } else { "+" };
                            if *sw { format!("{sign}*{}ᵒᵖ", p + 1) } else { format!("{sign}*{}", p + 1) }
                        })
                        .collect::<String>();
                    (c.to_string(), Value::String(s.trim_start_matches('+').to_owned()))
                })
                .collect(),
        )
    }
}

fn eval<S: Field>(alg: &FreeAlgebra<S>, side: Side, ops: &OpAssignment, e: &Expr) -> Result<FreeElement<S>> {
    match e {
        Expr::Var(i) => Ok(FormalSum::basis(TypedWord::generator(*i))),
        Expr::Op(c, l, r) => {
            let (u, v) = (eval(alg, side, ops, l)?, eval(alg, side, ops, r)?);
            let mut out = FormalSum::zero();
            for &(k, p, swapped) in ops.get(*c)? {
                if p >= alg.dim() {
                    return Err(Error::DimensionMismatch(format!("parameter {p} out of range")));
                }
                let prod = match (side == Side::Opposite) != swapped {
                    false => alg.star_at(p, &u, &v),
                    true => alg.star_at(p, &v, &u),
                };
                out.add_scaled(&prod, &S::from_int(k));
            }
            Ok(out)
        }
    }
}

fn eval_sum<S: Field>(alg: &FreeAlgebra<S>, side: Side, ops: &OpAssignment, terms: &[(i64, Expr)]) -> Result<FreeElement<S>> {
    let mut out = FormalSum::zero();
    for (k, e) in terms {
        out.add_scaled(&eval(alg, side, ops, e)?, &S::from_int(*k));
    }
    Ok(out)
}

/// Whether the axiom holds in the free (opposite) Φ-associative algebra on
/// `x, y, z`.
pub fn axiom_holds_in_free_algebra<S: Field>(l: &LinearEas<S>, side: Side, ops: &OpAssignment, ax: &Axiom) -> Result<bool> {
    let alg = FreeAlgebra::new(l);
    Ok(eval_sum(&alg, side, ops, &ax.lhs)? == eval_sum(&alg, side, ops, &ax.rhs)?)
}

/// `(true, a, b)` is `R(a,b)`, `(false, a, b)` is `L(a,b)`.
pub type MonomialKey = (bool, usize, usize);

fn monomial(ops: &OpAssignment, e: &Expr) -> Result<MonomialKey> {
    let single = |c: char| -> Result<usize> {
        match ops.get(c)? {
            [(1, p, false)] => Ok(*p),
            _ => Err(Error::Invalid(format!("operation {c} is not a single parameter"))),
        }
    };
    use Expr::{Op, Var};
    match e {
        Op(o2, l, r) => match (&**l, &**r) {
            (Op(o1, a, b), Var(2)) if **a == Var(0) && **b == Var(1) => Ok((false, single(*o1)?, single(*o2)?)),
            (Var(0), Op(o1, a, b)) if **a == Var(1) && **b == Var(2) => Ok((true, single(*o2)?, single(*o1)?)),
            _ => Err(Error::Invalid(format!("{e} is not a monomial in x, y, z"))),
        },
        Var(_) => Err(Error::Invalid(format!("{e} is not a monomial"))),
    }
}

/// The axiom `lhs − rhs` as a vector on `L`/`R` monomials.
pub fn axiom_vector<S: Field>(ops: &OpAssignment, ax: &Axiom) -> Result<FormalSum<MonomialKey, S>> {
    let mut v = FormalSum::zero();
    for (k, e) in &ax.lhs {
        v.add_term(monomial(ops, e)?, S::from_int(*k));
    }
    for (k, e) in &ax.rhs {
        v.add_term(monomial(ops, e)?, S::from_int(-*k));
    }
    Ok(v)
}

/// The `d²` defining relations of (opposite) Φ-associative algebras:
/// direct `R(a,b) − Σ Φ[(c,e),(a,b)] L(e,c)`, opposite
/// `Σ Φ[(c,e),(a,b)] R(c,e) − L(b,a)`.
pub fn phi_relations<S: Field>(l: &LinearEas<S>, side: Side) -> Vec<FormalSum<MonomialKey, S>> {
    let d = l.dim();
    l.legs()
        .into_iter()
        .enumerate()
        .map(|(col, legs)| {
            let (a, b) = (col / d, col % d);
            let mut v = FormalSum::zero();
            match side {
                Side::Direct => {
                    v.add_term((true, a, b), S::one());
                    for (c, e, k) in legs {
                        v.add_term((false, e, c), -k);
                    }
                }
                Side::Opposite => {
                    for (c, e, k) in legs {
                        v.add_term((true, c, e), k);
                    }
                    v.add_term((false, b, a), -S::one());
                }
            }
            v
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationSet {
    Dendriform,
    Tridendriform,
    Duplicial,
    PostLie,
    Diassociative,
    Triassociative,
    DualDuplicial,
    ComTrias,
}

/// Direction of a link.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinkKind {
    /// Every (opposite) Φ-associative algebra satisfies the axioms.
    AxiomsFollow,
    /// Every algebra satisfying the axioms is (opposite) Φ-associative.
    RelationsFollow,
}

impl RelationSet {
    pub const ALL: [RelationSet; 8] = [
        RelationSet::Dendriform,
        RelationSet::Tridendriform,
        RelationSet::Duplicial,
        RelationSet::PostLie,
        RelationSet::Diassociative,
        RelationSet::Triassociative,
        RelationSet::DualDuplicial,
        RelationSet::ComTrias,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RelationSet::Dendriform => "dendriform",
            RelationSet::Tridendriform => "tridendriform",
            RelationSet::Duplicial => "duplicial",
            RelationSet::PostLie => "post-lie",
            RelationSet::Diassociative => "diassociative",
            RelationSet::Triassociative => "triassociative",
            RelationSet::DualDuplicial => "dual-duplicial",
            RelationSet::ComTrias => "comtrias",
        }
    }

    pub fn from_name(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_owned()))
    }

    pub fn kind(self) -> LinkKind {
        match self {
            RelationSet::Dendriform | RelationSet::Tridendriform | RelationSet::Duplicial | RelationSet::PostLie => {
                LinkKind::AxiomsFollow
            }
            _ => LinkKind::RelationsFollow,
        }
    }

    pub fn axiom_texts(self) -> &'static [&'static str] {
        match self {
            RelationSet::Dendriform => &[
                "(x≺y)≺z = x≺(y≺z) + x≺(y≻z)",
                "(x≻y)≺z = x≻(y≺z)",
                "x≻(y≻z) = (x≺y)≻z + (x≻y)≻z",
            ],
            RelationSet::Tridendriform => &[
                "(x≺y)≺z = x≺(y≺z) + x≺(y≻z) + x≺(y·z)",
                "(x≻y)≺z = x≻(y≺z)",
                "x≻(y≻z) = (x≺y)≻z + (x≻y)≻z + (x·y)≻z",
                "(x≻y)·z = x≻(y·z)",
                "(x≺y)·z = x·(y≻z)",
                "(x·y)≺z = x·(y≺z)",
                "(x·y)·z = x·(y·z)",
            ],
            RelationSet::Duplicial => &["(x≺y)≺z = x≺(y≺z)", "(x≻y)≺z = x≻(y≺z)", "x≻(y≻z) = (x≻y)≻z"],
            RelationSet::PostLie => &[
                "x*{y,z} = (x*y)*z - x*(y*z) - (x*z)*y + x*(z*y)",
                "{x,y}*z = {x*z,y} + {x,y*z}",
                "{x,{y,z}} + {y,{z,x}} + {z,{x,y}} = 0",
            ],
            RelationSet::Diassociative => &[
                "(x⊣y)⊣z = x⊣(y⊣z)",
                "(x⊣y)⊣z = x⊣(y⊢z)",
                "(x⊢y)⊣z = x⊢(y⊣z)",
                "(x⊣y)⊢z = x⊢(y⊢z)",
                "(x⊢y)⊢z = x⊢(y⊢z)",
            ],
            RelationSet::Triassociative => &[
                "(x⊣y)⊣z = x⊣(y⊣z)",
                "(x⊣y)⊣z = x⊣(y⊢z)",
                "(x⊣y)⊣z = x⊣(y⊥z)",
                "(x⊢y)⊣z = x⊢(y⊣z)",
                "(x⊥y)⊣z = x⊥(y⊣z)",
                "(x⊣y)⊥z = x⊥(y⊢z)",
                "(x⊢y)⊥z = x⊢(y⊥z)",
                "(x⊣y)⊢z = x⊢(y⊢z)",
                "(x⊥y)⊢z = x⊢(y⊢z)",
                "(x⊢y)⊢z = x⊢(y⊢z)",
                "(x⊥y)⊥z = x⊥(y⊥z)",
            ],
            RelationSet::DualDuplicial => &[
                "(x≺y)≺z = x≺(y≺z)",
                "(x≺y)≻z = 0",
                "(x≻y)≺z = x≻(y≺z)",
                "0 = x≺(y≻z)",
                "(x≻y)≻z = x≻(y≻z)",
            ],
            RelationSet::ComTrias => &[
                "(x·y)·z = x·(y·z)",
                "(x⋆y)⋆z = x⋆(y⋆z)",
                "(x⋆y)⋆z = x⋆(y·z)",
                "(x·y)⋆z = x·(y⋆z)",
            ],
        }
    }

    pub fn axioms(self) -> Vec<Axiom> {
        self.axiom_texts().iter().map(|t| Axiom::parse(t).expect("built-in axiom parses")).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub axiom: String,
    /// For [`LinkKind::AxiomsFollow`], holds in the free algebra; otherwise,
    /// lies in the span of the Φ-relations.
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkReport {
    pub set: RelationSet,
    pub entry: String,
    pub side: Side,
    pub ops: OpAssignment,
    pub axioms: Vec<AxiomResult>,
    /// For [`LinkKind::RelationsFollow`]: Φ-relations not in the axiom span.
    pub missing_relations: Option<Vec<usize>>,
    pub axiom_rank: Option<usize>,
    pub relation_rank: Option<usize>,
}

impl LinkReport {
    pub fn holds(&self) -> bool {
        match self.set.kind() {
            LinkKind::AxiomsFollow => self.axioms.iter().all(|a| a.holds),
            LinkKind::RelationsFollow => self.missing_relations.as_ref().is_some_and(Vec::is_empty),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "set": self.set.name(),
            "entry": self.entry,
            "side": self.side.as_str(),
            "direction": match self.set.kind() {
                LinkKind::AxiomsFollow => "axioms hold in every algebra of this side",
                LinkKind::RelationsFollow => "relations follow from the axioms",
            },
            "ops": self.ops.to_json(),
            "axioms": self.axioms.iter().map(|a| json!({"axiom": a.axiom, "holds": a.holds})).collect::<Vec<_>>(),
            "holds": self.holds(),
        });
        if let Some(m) = &self.missing_relations {
            v["missing_relations"] = json!(m);
            v["axiom_rank"] = json!(self.axiom_rank);
            v["relation_rank"] = json!(self.relation_rank);
        }
        v
    }
}

/// Checks one link for an explicit ℓEAS, side and operation assignment.
pub fn relation_catalog_check(
    l: &LinearEas<Rational>,
    set: RelationSet,
    side: Side,
    ops: &OpAssignment,
    entry: &str,
) -> Result<LinkReport> {
    let axioms = set.axioms();
    let mut report = LinkReport {
        set,
        entry: entry.to_owned(),
        side,
        ops: ops.clone(),
        axioms: Vec::new(),
        missing_relations: None,
        axiom_rank: None,
        relation_rank: None,
    };
    match set.kind() {
        LinkKind::AxiomsFollow => {
            for ax in &axioms {
                let holds = axiom_holds_in_free_algebra(l, side, ops, ax)?;
                report.axioms.push(AxiomResult { axiom: ax.text.clone(), holds });
            }
        }
        LinkKind::RelationsFollow => {
            let vecs = axioms.iter().map(|a| axiom_vector::<Rational>(ops, a)).collect::<Result<Vec<_>>>()?;
            let rels = phi_relations(l, side);
            let ax_span = Span::from_vectors(&vecs);
            let rel_span = Span::from_vectors(&rels);
            for (ax, v) in axioms.iter().zip(&vecs) {
                report.axioms.push(AxiomResult { axiom: ax.text.clone(), holds: rel_span.contains(v) });
            }
            report.missing_relations = Some((0..rels.len()).filter(|&i| !ax_span.contains(&rels[i])).collect());
            report.axiom_rank = Some(ax_span.dim());
            report.relation_rank = Some(rel_span.dim());
        }
    }
    Ok(report)
}

/// One link stated for a catalog entry.
#[derive(Clone, Debug)]
pub struct Claim {
    pub set: RelationSet,
    pub entry: &'static str,
    pub side: Side,
    /// Symbol → parameter index; empty when symbols are EAS labels.
    pub ops: &'static [(char, usize)],
    pub bracket: Option<usize>,
}

const fn claim(set: RelationSet, entry: &'static str, side: Side, ops: &'static [(char, usize)]) -> Claim {
    Claim { set, entry, side, ops, bracket: None }
}

pub fn claims() -> Vec<Claim> {
    use RelationSet::*;
    use Side::{Direct as D, Opposite as O};
    const DEND: &[(char, usize)] = &[('≺', 0), ('≻', 1)];
    const DEND_SWAP: &[(char, usize)] = &[('≻', 0), ('≺', 1)];
    const TRI: &[(char, usize)] = &[('≺', 0), ('≻', 1), ('·', 2)];
    const TRI_OP: &[(char, usize)] = &[('≺', 1), ('≻', 0), ('·', 2)];
    const LABELS: &[(char, usize)] = &[];
    let mut out = vec![
        claim(Dendriform, "dendriform-1", D, DEND),
        claim(Dendriform, "dendriform-2", D, DEND),
        claim(Dendriform, "dendriform-3", O, DEND),
        claim(Dendriform, "dendriform-4", O, DEND),
    ];
    for e in ["tridendriform-1", "tridendriform-2", "tridendriform-3"] {
        out.push(claim(Tridendriform, e, D, TRI));
        out.push(claim(Tridendriform, e, O, TRI_OP));
    }
    out.extend([
        claim(Duplicial, "duplicial", D, DEND),
        claim(Duplicial, "duplicial", O, DEND_SWAP),
        Claim { set: PostLie, entry: "post-lie", side: O, ops: &[('*', 0)], bracket: Some(1) },
        claim(Diassociative, "dias-op-1", O, LABELS),
        claim(Diassociative, "dias-op-2", O, LABELS),
        claim(Diassociative, "dias-1", D, LABELS),
        claim(Diassociative, "dias-2", D, LABELS),
    ]);
    for v in 1..=3 {
        out.push(claim(Triassociative, ["trias-op-1", "trias-op-2", "trias-op-3"][v - 1], O, LABELS));
        out.push(claim(Triassociative, ["trias-1", "trias-2", "trias-3"][v - 1], D, LABELS));
    }
    out.extend([
        claim(DualDuplicial, "dual-duplicial", O, DEND),
        claim(DualDuplicial, "dual-duplicial", D, DEND_SWAP),
        claim(ComTrias, "Z/2*", D, &[('⋆', 0), ('·', 1)]),
    ]);
    out
}

/// The EAS of `(Z/2, ×)` with elements `0̄ = 0`, `1̄ = 1`.
pub fn z2_multiplicative() -> FiniteEas {
    make_from_semigroup(&crate::eas::group_labels(2), &crate::eas::groups::multiplicative_mod(2)).expect("a semigroup")
}

fn claim_leas(c: &Claim) -> Result<(LinearEas<Rational>, OpAssignment)> {
    if c.entry == "Z/2*" {
        return Ok((linearize(&z2_multiplicative())?, OpAssignment::simple(c.ops)));
    }
    if c.ops.is_empty() {
        let s = catalog::eas(c.entry)?;
        let symbols: Vec<char> = s.elements().iter().filter_map(|l| l.chars().next()).collect();
        let ops = OpAssignment::by_label(&s, &symbols)?;
        return Ok((linearize(&s)?, ops));
    }
    let ops = OpAssignment::simple(c.ops);
    let ops = match c.bracket {
        Some(p) => ops.with_bracket(p),
        None => ops,
    };
    Ok((catalog::leas(c.entry)?, ops))
}

pub fn check_claim(c: &Claim) -> Result<LinkReport> {
    let (l, ops) = claim_leas(c)?;
    relation_catalog_check(&l, c.set, c.side, &ops, c.entry)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsomorphismCheck {
    pub entry: String,
    pub expected: String,
    pub isomorphic: bool,
}

/// The diassociative tables against their stated classes, the ComTriAs
/// semigroup against `C3`, and the triassociative tables against the axioms.
pub fn isomorphism_checks() -> Result<Vec<IsomorphismCheck>> {
    let mut out = Vec::new();
    for (e, want) in [("dias-op-1", "C3"), ("dias-op-2", "C6"), ("dias-1", "C6"), ("dias-2", "C3")] {
        out.push(IsomorphismCheck {
            entry: e.into(),
            expected: want.into(),
            isomorphic: are_isomorphic(&catalog::eas(e)?, &catalog::eas(want)?),
        });
    }
    out.push(IsomorphismCheck {
        entry: "Z/2*".into(),
        expected: "C3".into(),
        isomorphic: are_isomorphic(&z2_multiplicative(), &catalog::eas("C3")?),
    });
    for e in ["trias-op-1", "trias-op-2", "trias-op-3", "trias-1", "trias-2", "trias-3"] {
        out.push(IsomorphismCheck { entry: e.into(), expected: "EAS".into(), isomorphic: check_eas(&catalog::eas(e)?).is_eas });
    }
    Ok(out)
}

/// Every claim for a relation set (`dendriform`, …) or a catalog entry.
pub fn verify_links(name: &str) -> Result<Vec<LinkReport>> {
    let all = claims();
    let selected: Vec<&Claim> = match RelationSet::from_name(name) {
        Ok(set) => all.iter().filter(|c| c.set == set).collect(),
        Err(_) => all.iter().filter(|c| c.entry == name).collect(),
    };
    if selected.is_empty() {
        return Err(Error::UnknownName(name.to_owned()));
    }
    selected.into_iter().map(check_claim).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parser_round_trip() {
        let a = Axiom::parse("(x≺y)≺z = x≺(y≺z) + x≺(y≻z)").unwrap();
        assert_eq!(a.lhs.len(), 1);
        assert_eq!(a.rhs.len(), 2);
        assert_eq!(a.lhs[0].1.to_string(), "(x≺y)≺z");
        let b = Axiom::parse("x*{y,z} = (x*y)*z - x*(y*z) - 2(x*z)*y").unwrap();
        assert_eq!(b.rhs.iter().map(|t| t.0).collect::<Vec<_>>(), [1, -1, -2]);
        assert_eq!(b.lhs[0].1.to_string(), "x*({y,z})");
        let z = Axiom::parse("0 = x≺(y≻z)").unwrap();
        assert!(z.lhs.is_empty());
        assert!(Axiom::parse("(x≺y = z").is_err());
        assert!(Axiom::parse("x≺w = x").is_err());
        for set in RelationSet::ALL {
            set.axioms();
        }
    }

    #[test]
    fn axiom_counts() {
        let n = |s: RelationSet| s.axiom_texts().len();
        assert_eq!(n(RelationSet::Dendriform), 3);
        assert_eq!(n(RelationSet::Tridendriform), 7);
        assert_eq!(n(RelationSet::Duplicial), 3);
        assert_eq!(n(RelationSet::DualDuplicial), 5);
        assert_eq!(n(RelationSet::Diassociative), 5);
        assert_eq!(n(RelationSet::Triassociative), 11);
    }

    #[test]
    fn every_claim_holds() {
        for c in claims() {
            let r = check_claim(&c).unwrap();
            assert!(r.holds(), "{} {} {:?}: {:?}", c.set.name(), c.entry, c.side, r.to_json());
        }
    }

    #[test]
    fn wrong_side_fails() {
        let l = catalog::leas("dendriform-1").unwrap();
        let ops = OpAssignment::simple(&[('≺', 0), ('≻', 1)]);
        let r = relation_catalog_check(&l, RelationSet::Dendriform, Side::Opposite, &ops, "dendriform-1").unwrap();
        assert!(!r.holds());
        let id = LinearEas::<Rational>::identity(2);
        let r = relation_catalog_check(&id, RelationSet::Duplicial, Side::Direct, &ops, "identity").unwrap();
        assert!(!r.holds());
    }

    #[test]
    fn dias_relations_match_four_axioms() {
        // Each diassociative EAS encodes exactly four of the five axioms.
        for name in ["dias-op-1", "dias-op-2", "dias-1", "dias-2"] {
            let r = verify_links(name).unwrap().pop().unwrap();
            assert_eq!(r.axioms.iter().filter(|a| a.holds).count(), 4, "{name}");
            assert_eq!(r.relation_rank, Some(4));
        }
    }

    #[test]
    fn isomorphisms() {
        assert!(isomorphism_checks().unwrap().iter().all(|c| c.isomorphic));
    }

    #[test]
    fn lookup() {
        assert_eq!(verify_links("tridendriform").unwrap().len(), 6);
        assert_eq!(verify_links("duplicial").unwrap().len(), 2);
        assert!(matches!(verify_links("octonion"), Err(Error::UnknownName(_))));
    }
}
