//! Linear extended associative semigroups `(A, Φ)`.
//!
//! With `Φ(a⊗b) = Σ (a′→b′) ⊗ (a″▷b″)`, the first tensor leg plays the
//! role of `→` and the second the role of `▷`. `Φ` is an ℓEAS when
//!
//! `(Id⊗Φ)(Φ⊗Id)(Id⊗Φ) = (Φ⊗Id)(Id⊗τ)(Φ⊗Id)` on `A⊗A⊗A`.

use serde::{Deserialize, Serialize};

use crate::eas::{check_eas, FiniteEas};
use crate::error::{Error, Result};
use crate::exactlin::{flip_matrix, kron, FormalSum, Matrix};
use crate::scalar::{format_rational, parse_rational, Field, Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearEas<S> {
    dim: usize,
    phi: Matrix<S>,
    name: Option<String>,
}

/// Non-zero entries of one column of `Φ`: `Φ(e_a ⊗ e_b) = Σ coef · e_c ⊗ e_e`
/// is stored as `(c, e, coef)`.
pub type Legs<S> = Vec<(usize, usize, S)>;

#[derive(Serialize, Deserialize)]
struct LeasFile {
    dim: usize,
    phi: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

impl<S: Scalar> LinearEas<S> {
    pub fn new(dim: usize, phi: Matrix<S>, name: Option<String>) -> Result<Self> {
        if dim == 0 || phi.rows() != dim * dim || phi.cols() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "Φ must be {0}x{0} for dimension {dim}, got {1}x{2}",
                dim * dim,
                phi.rows(),
                phi.cols()
            )));
        }
        Ok(LinearEas { dim, phi, name })
    }

    pub fn from_int_rows(dim: usize, rows: &[&[i64]]) -> Result<Self> {
        let m = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| S::from_int(x)).collect()).collect())?;
        Self::new(dim, m, None)
    }

    pub fn identity(dim: usize) -> Self {
        LinearEas { dim, phi: Matrix::identity(dim * dim), name: Some("identity".into()) }
    }

    pub fn flip(dim: usize) -> Self {
        LinearEas { dim, phi: flip_matrix(dim), name: Some("flip".into()) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn phi(&self) -> &Matrix<S> {
        &self.phi
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Coefficient of `e_c ⊗ e_e` in `Φ(e_a ⊗ e_b)`.
    pub fn coeff(&self, c: usize, e: usize, a: usize, b: usize) -> &S {
        self.phi.get(c * self.dim + e, a * self.dim + b)
    }

    /// Sparse columns of `Φ`, indexed by `a*d + b`.
    pub fn legs(&self) -> Vec<Legs<S>> {
        let d = self.dim;
        (0..d * d)
            .map(|col| {
                (0..d * d)
                    .filter_map(|row| {
                        let v = self.phi.get(row, col);
                        (!v.is_zero()).then(|| (row / d, row % d, v.clone()))
                    })
                    .collect()
            })
            .collect()
    }

    /// `Φ(e_a ⊗ e_b)` as a formal sum over pairs.
    pub fn apply_pair(&self, a: usize, b: usize) -> FormalSum<(usize, usize), S> {
        let d = self.dim;
        FormalSum::from_terms(
            (0..d * d).map(|row| ((row / d, row % d), self.phi.get(row, a * d + b).clone())),
        )
    }

    /// `Φ` applied to an arbitrary vector of `A⊗A`.
    pub fn apply(&self, v: &[S]) -> Result<Vec<S>> {
        self.phi.apply(v)
    }
}

impl LinearEas<Rational> {
    pub fn from_json_str(s: &str) -> Result<Self> {
        let f: LeasFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let rows = f
            .phi
            .iter()
            .map(|r| r.iter().map(|x| parse_rational(x)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let m = Matrix::from_rows(rows)?;
        Self::new(f.dim, m, f.name)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let phi = self.phi.to_rows().iter().map(|r| r.iter().map(format_rational).collect()).collect();
        serde_json::to_value(LeasFile { dim: self.dim, phi, name: self.name.clone() })
            .expect("plain data serializes")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWitness<S> {
    /// Output basis vector `e_i⊗e_j⊗e_k`.
    pub row: [usize; 3],
    /// Input basis vector.
    pub col: [usize; 3],
    pub lhs: S,
    pub rhs: S,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeasReport<S> {
    pub holds: bool,
    pub witness: Option<BraidWitness<S>>,
}

/// Both sides of the braid-like identity, as `d³ × d³` matrices.
pub fn braid_sides<S: Scalar>(l: &LinearEas<S>) -> (Matrix<S>, Matrix<S>) {
    let d = l.dim;
    let id = Matrix::identity(d);
    let id_phi = kron(&id, &l.phi);
    let phi_id = kron(&l.phi, &id);
    let id_tau = kron(&id, &flip_matrix(d));
    let mul = |a: &Matrix<S>, b: &Matrix<S>| a.mul(b).expect("square of equal size");
    let lhs = mul(&mul(&id_phi, &phi_id), &id_phi);
    let rhs = mul(&mul(&phi_id, &id_tau), &phi_id);
    (lhs, rhs)
}

pub fn check_leas<S: Scalar>(l: &LinearEas<S>) -> LeasReport<S> {
    let (lhs, rhs) = braid_sides(l);
    let d = l.dim;
    let split = |x: usize| [x / (d * d), (x / d) % d, x % d];
    let witness = lhs.first_difference(&rhs).map(|(r, c)| BraidWitness {
        row: split(r),
        col: split(c),
        lhs: lhs.get(r, c).clone(),
        rhs: rhs.get(r, c).clone(),
    });
    LeasReport { holds: witness.is_none(), witness }
}

/// The 0/1 matrix of `φ`, without checking the EAS axioms.
pub fn linearize_unchecked<S: Scalar>(s: &FiniteEas) -> LinearEas<S> {
    let n = s.len();
    let mut phi = Matrix::zeros(n * n, n * n);
    for a in 0..n {
        for b in 0..n {
            let (c, e) = s.phi(a, b);
            phi.set(c * n + e, a * n + b, S::one());
        }
    }
    LinearEas { dim: n, phi, name: None }
}

pub fn linearize<S: Scalar>(s: &FiniteEas) -> Result<LinearEas<S>> {
    let report = check_eas(s);
    if let Some(f) = report.failures.first() {
        return Err(Error::NotEas(format!("axiom ({}) fails at {:?}", f.axiom, f.triple)));
    }
    Ok(linearize_unchecked(s))
}

/// `Φ*`, the transpose.
pub fn dualize<S: Scalar>(l: &LinearEas<S>) -> LinearEas<S> {
    LinearEas {
        dim: l.dim,
        phi: l.phi.transpose(),
        name: l.name.as_ref().map(|n| format!("{n}*")),
    }
}

pub fn invert_leas<S: Field>(l: &LinearEas<S>) -> Result<LinearEas<S>> {
    Ok(LinearEas {
        dim: l.dim,
        phi: l.phi.invert()?,
        name: l.name.as_ref().map(|n| format!("{n}^-1")),
    })
}

pub fn is_nondegenerate<S: Field>(l: &LinearEas<S>) -> bool {
    l.phi.rank() == l.dim * l.dim
}
