use crate::exactlin::FormalSum;
use crate::scalar::Field;

/// Incrementally built subspace spanned by sparse vectors.
///
/// Rows are kept fully reduced against each other's pivots, so membership is
/// a single reduction pass.
#[derive(Clone)]
pub struct Span<K: Ord, S> {
    rows: Vec<(K, FormalSum<K, S>)>,
}

impl<K: Ord + Clone, S: Field> Default for Span<K, S> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone, S: Field> Span<K, S> {
    pub fn new() -> Self {
        Span { rows: Vec::new() }
    }

    pub fn from_vectors<'a>(vs: impl IntoIterator<Item = &'a FormalSum<K, S>>) -> Self
    where
        K: 'a,
        S: 'a,
    {
        let mut s = Self::new();
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after elimination against the current basis.
    pub fn reduce(&self, v: &FormalSum<K, S>) -> FormalSum<K, S> {
        let mut r = v.clone();
        for (p, row) in &self.rows {
            let c = r.coeff(p);
            if !c.is_zero() {
                r.add_scaled(row, &-c);
            }
        }
        r
    }

    pub fn contains(&self, v: &FormalSum<K, S>) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_span(&self, other: &Self) -> bool {
        other.rows.iter().all(|(_, r)| self.contains(r))
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &FormalSum<K, S>) -> bool {
        let r = self.reduce(v);
        let Some((p, c)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let r = r.scaled(&(S::one() / c));
        for (_, row) in &mut self.rows {
            let f = row.coeff(&p);
            if !f.is_zero() {
                row.add_scaled(&r, &-f);
            }
        }
        self.rows.push((p, r));
        true
    }

    pub fn basis(&self) -> impl Iterator<Item = &FormalSum<K, S>> {
        self.rows.iter().map(|(_, r)| r)
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut s = self.clone();
        for (_, r) in &other.rows {
            s.insert(r);
        }
        s
    }
}
