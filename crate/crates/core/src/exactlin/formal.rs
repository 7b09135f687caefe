use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::scalar::Scalar;

/// Finite linear combination of basis objects. Zero coefficients are never
/// stored, so two sums are equal exactly when they are equal as vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FormalSum<K: Ord, S> {
    terms: BTreeMap<K, S>,
}

impl<K: Ord + Clone, S: Scalar> Default for FormalSum<K, S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord + Clone, S: Scalar> FormalSum<K, S> {
    pub fn zero() -> Self {
        FormalSum { terms: BTreeMap::new() }
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, S::one())
    }

    pub fn term(k: K, c: S) -> Self {
        let mut s = Self::zero();
        s.add_term(k, c);
        s
    }

    pub fn from_terms(it: impl IntoIterator<Item = (K, S)>) -> Self {
        let mut s = Self::zero();
        for (k, c) in it {
            s.add_term(k, c);
        }
        s
    }

    pub fn add_term(&mut self, k: K, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &S) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone() * c.clone());
        }
    }

    pub fn scaled(&self, c: &S) -> Self {
        let mut s = Self::zero();
        s.add_scaled(self, c);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &K) -> S {
        self.terms.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, S> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, S> {
        self.terms.keys()
    }

    pub fn terms(&self) -> &BTreeMap<K, S> {
        &self.terms
    }

    /// Linear extension of a map on basis elements.
    pub fn map_basis<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> FormalSum<L, S>) -> FormalSum<L, S> {
        let mut out = FormalSum::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Relabels basis elements (the map may merge keys).
    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> FormalSum<L, S> {
        FormalSum::from_terms(self.terms.iter().map(|(k, c)| (f(k), c.clone())))
    }

    /// Bilinear extension of a map on pairs of basis elements.
    pub fn bilinear<L: Ord + Clone, M: Ord + Clone>(
        &self,
        other: &FormalSum<L, S>,
        mut f: impl FnMut(&K, &L) -> FormalSum<M, S>,
    ) -> FormalSum<M, S> {
        let mut out = FormalSum::zero();
        for (k, a) in &self.terms {
            for (l, b) in &other.terms {
                out.add_scaled(&f(k, l), &(a.clone() * b.clone()));
            }
        }
        out
    }
}

impl<K: Ord + Clone, S: Scalar> FromIterator<(K, S)> for FormalSum<K, S> {
    fn from_iter<T: IntoIterator<Item = (K, S)>>(iter: T) -> Self {
        Self::from_terms(iter)
    }
}

impl<'a, K: Ord + Clone, S: Scalar> IntoIterator for &'a FormalSum<K, S> {
    type Item = (&'a K, &'a S);
    type IntoIter = btree_map::Iter<'a, K, S>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone, S: Scalar> Add for FormalSum<K, S> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self.add_scaled(&rhs, &S::one());
        self
    }
}

impl<K: Ord + Clone, S: Scalar> Sub for FormalSum<K, S> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self.add_scaled(&rhs, &-S::one());
        self
    }
}

impl<K: Ord + Clone, S: Scalar> Add for &FormalSum<K, S> {
    type Output = FormalSum<K, S>;
    fn add(self, rhs: Self) -> FormalSum<K, S> {
        self.clone() + rhs.clone()
    }
}

impl<K: Ord + Clone, S: Scalar> Sub for &FormalSum<K, S> {
    type Output = FormalSum<K, S>;
    fn sub(self, rhs: Self) -> FormalSum<K, S> {
        self.clone() - rhs.clone()
    }
}

impl<K: Ord + Clone, S: Scalar> Neg for FormalSum<K, S> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scaled(&-S::one())
    }
}

impl<K: Ord + fmt::Debug, S: fmt::Display> fmt::Debug for FormalSum<K, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·{k:?}")?;
        }
        Ok(())
    }
}
