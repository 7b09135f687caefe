use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Power series `Σ c_k X^k` known up to `X^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> TruncatedSeries<S> {
    /// Pads or truncates `coeffs` to exactly `order + 1` terms.
    pub fn new(order: usize, mut coeffs: Vec<S>) -> Self {
        coeffs.resize(order + 1, S::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = S::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &S {
        &self.coeffs[k]
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::new(n, (0..=n).map(|k| self.coeffs[k].clone() + other.coeffs[k].clone()).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::new(n, (0..=n).map(|k| self.coeffs[k].clone() - other.coeffs[k].clone()).collect())
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.order(), self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![S::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(n, out)
    }

    /// `F(-X)`.
    pub fn negate_argument(&self) -> Self {
        Self::new(
            self.order(),
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// `X·F(X)`, keeping the order.
    pub fn shift_up(&self) -> Self {
        let mut v = vec![S::zero()];
        v.extend(self.coeffs.iter().cloned());
        Self::new(self.order(), v)
    }

    /// First degree at which the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let n = self.order().min(other.order());
        (0..=n).find(|&k| self.coeffs[k] != other.coeffs[k])
    }
}

/// `F(G(X))` truncated at the common order; `G` must have no constant term.
pub fn series_compose<S: Scalar>(
    f: &TruncatedSeries<S>,
    g: &TruncatedSeries<S>,
) -> Result<TruncatedSeries<S>> {
    if !g.coeffs[0].is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let n = f.order().min(g.order());
    let g = TruncatedSeries::new(n, g.coeffs.clone());
    let mut acc = TruncatedSeries::zero(n);
    for c in f.coeffs[..=n].iter().rev() {
        acc = acc.mul(&g);
        acc.coeffs[0] = acc.coeffs[0].clone() + c.clone();
    }
    Ok(acc)
}
