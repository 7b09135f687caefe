mod common;

use common::{random_leas_candidate, rng};
use num_bigint::BigInt;
use paramassoc::catalog;
use paramassoc::eas::groups;
use paramassoc::exactlin::{FormalSum, Span};
use paramassoc::operad::{
    confluence_check, count_normal_forms_two_param, enumerate_normal_forms_two_param, extract_leas,
    generated_dimensions, koszul_orthogonality_check, operad_axiom_check, rewrite_normal_form, AsPhiRules,
    CompositionProvider, Tree, TwoParamRules, WordOperad,
};
use paramassoc::series::{catalan, koszul_dual_series, p_narayana, p_polynomial, p_recursive};
use paramassoc::{check_leas, linearize, rat, AsPhi, LinearEas, Rational};
use proptest::prelude::*;

fn every_leas() -> Vec<LinearEas> {
    catalog::leas_catalog()
        .into_iter()
        .chain(catalog::classified().iter().map(|(n, s)| linearize(s).unwrap().with_name(*n)))
        .collect()
}

#[test]
fn asphi_normal_forms_are_left_combs() {
    for l in every_leas().into_iter().filter(|l| l.dim() == 2) {
        let rules = AsPhiRules::new(&l);
        for n in 2..=4 {
            let trees = Tree::all(n, &[0usize, 1]);
            assert_eq!(trees.len(), (1 << (n - 1)) * catalan(n)[n - 1].to_string().parse::<usize>().unwrap());
            let mut span = Span::new();
            for t in &trees {
                let nf = rewrite_normal_form::<Rational, _>(&rules, &FormalSum::basis(t.clone()));
                assert!(nf.keys().all(|k| k.comb_decorations().is_some()), "{:?}", l.name());
                span.insert(&nf);
            }
            assert_eq!(span.dim(), 1 << (n - 1), "{:?} n={n}", l.name());
        }
    }
}

#[test]
fn normal_form_count_satisfies_recursion() {
    for w in 1..=9u64 {
        let t = p_recursive(w, 7);
        for n in 1..=7 {
            let c = count_normal_forms_two_param(&groups::cyclic(w as usize), n).unwrap();
            assert_eq!(&c, t.p(n), "ω={w} n={n}");
        }
    }
}

#[test]
fn count_is_independent_of_the_semigroup() {
    // Only |Ω| enters the normal-form count.
    let tables = [groups::multiplicative_mod(2), groups::cyclic(2), vec![vec![0, 0], vec![0, 0]]];
    for t in &tables {
        assert_eq!(count_normal_forms_two_param(t, 4).unwrap(), BigInt::from(176));
    }
}

#[test]
fn enumerated_normal_forms_match_count() {
    for t in [groups::multiplicative_mod(2), groups::cyclic(3)] {
        for n in 1..=4 {
            let trees = enumerate_normal_forms_two_param(&t, n);
            assert_eq!(BigInt::from(trees.len()), count_normal_forms_two_param(&t, n).unwrap());
        }
    }
}

#[test]
fn three_way_agreement() {
    for w in 1..=4u64 {
        let t = p_recursive(w, 7);
        for n in 2..=7 {
            assert_eq!(&p_narayana(w, n).unwrap(), t.p(n));
            assert_eq!(&count_normal_forms_two_param(&groups::cyclic(w as usize), n).unwrap(), t.p(n));
        }
    }
}

#[test]
fn polynomials_evaluate_to_the_table() {
    for n in 2..=9 {
        let p = p_polynomial(n).unwrap();
        for w in 1..=9u64 {
            assert_eq!(p.eval(&BigInt::from(w)), *p_recursive(w, 9).p(n), "n={n} ω={w}");
        }
    }
}

#[test]
fn two_param_rules_are_confluent() {
    for t in [groups::multiplicative_mod(2), groups::cyclic(2)] {
        assert!(confluence_check::<Rational, _>(&TwoParamRules::new(t)).confluent);
    }
}

#[test]
fn confluence_iff_leas() {
    let mut r = rng(31);
    let random = (0..20).map(|_| random_leas_candidate(&mut r));
    for l in every_leas().into_iter().filter(|l| l.dim() <= 3).chain(random) {
        let c = confluence_check::<Rational, _>(&AsPhiRules::new(&l));
        assert_eq!(c.confluent, check_leas(&l).holds, "{:?} {:?}", l.name(), l.phi());
        assert_eq!(c.witness.is_some(), !c.confluent);
    }
}

#[test]
fn word_operad_dimensions() {
    for (t, w) in [(groups::multiplicative_mod(2), 2usize), (groups::cyclic(3), 3)] {
        let p = WordOperad::reduced(t.clone());
        assert_eq!(CompositionProvider::<Rational>::basis(&p, 1).len(), 1);
        let q = koszul_dual_series(w as u64, 6).unwrap();
        for n in 2..=6 {
            let b = CompositionProvider::<Rational>::basis(&p, n).len();
            assert_eq!(b, w.pow(n as u32));
            assert_eq!(*q.coeff(n), BigInt::from(b));
        }
        let gen = generated_dimensions::<Rational, _>(&p, if w == 2 { 6 } else { 5 });
        for (n, d) in gen.iter().enumerate().skip(1) {
            assert_eq!(*d, w.pow(n as u32 + 1));
        }
        assert!(operad_axiom_check::<Rational, _>(&p, 4).holds);
    }
}

#[test]
fn asphi_axioms_koszul_and_recognition() {
    for l in every_leas() {
        let op = AsPhi::new(&l);
        let r = operad_axiom_check(&op, 4);
        assert!(r.holds, "{:?} {:?}", l.name(), r.failure);
        let k = koszul_orthogonality_check(&l);
        let d = l.dim();
        assert!(k.passes(), "{:?} {k:?}", l.name());
        assert_eq!((k.dim_i, k.dim_i_prime), (d * d, d * d));
        assert_eq!(extract_leas(&op).unwrap().phi(), l.phi(), "{:?}", l.name());
        let dims = generated_dimensions(&op, 4);
        assert_eq!(dims, vec![1, d, d * d, d * d * d]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn asphi_arity_dimension(seed in any::<u64>()) {
        let l = random_leas_candidate(&mut rng(seed));
        let op = AsPhi::new(&l);
        for n in 1..=5usize {
            prop_assert_eq!(CompositionProvider::<Rational>::basis(&op, n).len(), 2usize.pow(n as u32 - 1));
        }
        // Composition with the unit is the identity whatever Φ is.
        for b in CompositionProvider::<Rational>::basis(&op, 3) {
            let u = op.unit();
            prop_assert_eq!(op.compose(&u, 1, &b).unwrap(), b.clone());
            for i in 1..=3 {
                prop_assert_eq!(op.compose(&b, i, &u).unwrap(), b.clone());
            }
        }
    }

    #[test]
    fn narayana_matches_recursion(w in 1u64..=12, n in 2usize..=9) {
        prop_assert_eq!(p_narayana(w, n).unwrap(), p_recursive(w, 9).p(n).clone());
    }
}

#[test]
fn first_composition_concatenates() {
    let l = catalog::leas("C3").unwrap();
    let op = AsPhi::new(&l);
    let f = paramassoc::OperadElement::basis(3, vec![1, 0]);
    let g = paramassoc::OperadElement::basis(2, vec![1]);
    let r = op.compose(&f, 1, &g).unwrap();
    assert_eq!(r.arity, 4);
    assert_eq!(r.vector.len(), 1);
    assert_eq!(r.vector.coeff(&vec![1, 1, 0]), rat(1));
}
