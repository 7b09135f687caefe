#![allow(dead_code)]

use paramassoc::eas::{associativity_failure, Table};
use paramassoc::{check_leas, rat, LinearEas, Matrix, Rational};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut StdRng, n: usize, lo: i64, hi: i64) -> Matrix {
    Matrix::from_fn(n, n, |_, _| rat(rng.gen_range(lo..=hi)))
}

/// Sparse 2-dimensional Φ candidates: most random 4×4 sign matrices are not
/// ℓEAS, which is what the negative controls need.
pub fn random_leas_candidate(rng: &mut StdRng) -> LinearEas {
    let phi = Matrix::from_fn(4, 4, |_, _| match rng.gen_range(0..6) {
        0 => rat(-1),
        1 | 2 => rat(1),
        _ => rat(0),
    });
    LinearEas::new(2, phi, None).unwrap()
}

/// `count` random 2-dimensional matrices that fail the braid identity.
pub fn random_non_leas(seed: u64, count: usize) -> Vec<LinearEas> {
    let mut r = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let l = random_leas_candidate(&mut r);
        if !check_leas(&l).holds {
            out.push(l);
        }
    }
    out
}

pub fn random_table(rng: &mut StdRng, n: usize) -> Table {
    (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..n)).collect()).collect()
}

pub fn random_semigroup(rng: &mut StdRng, n: usize) -> Table {
    loop {
        let t = random_table(rng, n);
        if associativity_failure(&t).is_none() {
            return t;
        }
    }
}

pub fn ints(rows: &[&[i64]]) -> Matrix {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()).unwrap()
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
