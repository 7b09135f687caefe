mod common;

use common::{random_leas_candidate, random_non_leas, rng};
use paramassoc::catalog;
use paramassoc::eas::groups;
use paramassoc::exactlin::FormalSum;
use paramassoc::freealg::{
    basis_words, check_dual_free_relations, check_envelope_associativity, check_opposite_phi_associativity,
    check_phi_associativity, generation_freeness_report, TypedWord,
};
use paramassoc::leas::is_nondegenerate;
use paramassoc::{check_leas, linearize, rat, FreeAlgebra, FreeElement, LinearEas};
use proptest::prelude::*;

fn every_leas() -> Vec<LinearEas> {
    catalog::leas_catalog()
        .into_iter()
        .chain(catalog::classified().iter().map(|(n, s)| linearize(s).unwrap().with_name(*n)))
        .collect()
}

fn words(d: usize) -> Vec<TypedWord> {
    (1..=3).flat_map(|n| basis_words(d, 2, n)).collect()
}

fn element(ws: &[TypedWord], picks: &[(usize, i64)]) -> FreeElement {
    FormalSum::from_terms(picks.iter().map(|&(i, c)| (ws[i % ws.len()].clone(), rat(c))))
}

fn small_leas() -> impl Strategy<Value = LinearEas> {
    let all: Vec<LinearEas> = every_leas().into_iter().filter(|l| l.dim() == 2).collect();
    (0..all.len()).prop_map(move |i| all[i].clone())
}

proptest! {
    #[test]
    fn lengths_add(l in small_leas(), i in 0usize..200, j in 0usize..200, a in 0usize..2) {
        let ws = words(2);
        let (u, v) = (&ws[i % ws.len()], &ws[j % ws.len()]);
        let alg = FreeAlgebra::new(&l);
        for (w, _) in &alg.star_basis(a, u, v) {
            prop_assert_eq!(w.len(), u.len() + v.len());
            prop_assert_eq!(w.dec.len(), w.len() - 1);
            prop_assert_eq!(&w.letters[..u.len()], &u.letters[..]);
        }
    }

    #[test]
    fn star_is_bilinear(
        l in small_leas(),
        x in prop::collection::vec((0usize..100, -3i64..=3), 1..4),
        y in prop::collection::vec((0usize..100, -3i64..=3), 1..4),
        z in prop::collection::vec((0usize..100, -3i64..=3), 1..4),
        k in -3i64..=3,
        a in prop::collection::vec(-2i64..=2, 2),
    ) {
        let ws = words(2);
        let (x, y, z) = (element(&ws, &x), element(&ws, &y), element(&ws, &z));
        let alg = FreeAlgebra::new(&l);
        let a: Vec<_> = a.into_iter().map(rat).collect();
        let k = rat(k);
        let mut xy = x.clone();
        xy.add_scaled(&y, &k);
        let lhs = alg.star(&a, &xy, &z).unwrap();
        let mut rhs = alg.star(&a, &x, &z).unwrap();
        rhs.add_scaled(&alg.star(&a, &y, &z).unwrap(), &k);
        prop_assert_eq!(lhs, rhs);
        let mut yz = y.clone();
        yz.add_scaled(&z, &k);
        let lhs = alg.star(&a, &x, &yz).unwrap();
        let mut rhs = alg.star(&a, &x, &y).unwrap();
        rhs.add_scaled(&alg.star(&a, &x, &z).unwrap(), &k);
        prop_assert_eq!(lhs, rhs);
        let b = vec![rat(1), rat(-1)];
        let mut ab = alg.star(&a, &x, &y).unwrap();
        ab.add_scaled(&alg.star(&b, &x, &y).unwrap(), &k);
        let comb: Vec<_> = a.iter().zip(&b).map(|(p, q)| p.clone() + q.clone() * k.clone()).collect();
        prop_assert_eq!(alg.star(&comb, &x, &y).unwrap(), ab);
    }
}

#[test]
fn words_of_length_one_append() {
    let l = catalog::leas("C3").unwrap();
    let alg = FreeAlgebra::new(&l);
    let (x, y) = (TypedWord::generator(0), TypedWord::generator(1));
    let r = alg.star_basis(1, &x, &y);
    assert_eq!(r, FormalSum::basis(TypedWord::new(vec![1], vec![0, 1]).unwrap()));
}

#[test]
fn phi_associativity_iff_leas() {
    for l in every_leas() {
        assert!(check_leas(&l).holds);
        assert!(check_phi_associativity(&l, 4).unwrap().holds, "{:?}", l.name());
        assert!(check_opposite_phi_associativity(&l, 4).unwrap().holds, "{:?}", l.name());
    }
    for l in random_non_leas(11, 20) {
        let r = check_phi_associativity(&l, 4).unwrap();
        assert!(!r.holds);
        assert!(r.witness.is_some());
    }
}

#[test]
fn envelope_associativity_iff_leas() {
    let mut r = rng(23);
    let random = (0..20).map(|_| random_leas_candidate(&mut r));
    let mut agreed = (0, 0);
    for l in every_leas().into_iter().chain(random) {
        let gens = if l.dim() <= 2 { 2 } else { 1 };
        let env = check_envelope_associativity(&l, 2, gens);
        let leas = check_leas(&l).holds;
        assert_eq!(env.holds, leas, "{:?} {:?}", l.name(), l.phi());
        if leas { agreed.0 += 1 } else { agreed.1 += 1 }
    }
    assert!(agreed.1 >= 10);
}

#[test]
fn generation_flags_follow_rank() {
    for l in every_leas() {
        let g = generation_freeness_report(&l);
        let d = l.dim();
        assert_eq!(g.product_rank, l.phi().rank(), "{:?}", l.name());
        assert_eq!(g.target_dim, d * d);
        assert_eq!(g.generated && g.free, is_nondegenerate(&l), "{:?}", l.name());
    }
}

#[test]
fn dual_free_relations_hold() {
    for t in [groups::multiplicative_mod(2), groups::cyclic(2), groups::cyclic(3)] {
        let checked = check_dual_free_relations(&t, 2, 3).unwrap();
        assert!(checked > 0);
    }
}
