//! Finite extended associative semigroups `(Ω, →, ▷)`.
//!
//! The three axioms, for all `α, β, γ`:
//!
//! * (5) `α→(β→γ) = (α→β)→γ`
//! * (6) `(α▷(β→γ))→(β▷γ) = (α→β)▷γ`
//! * (7) `(α▷(β→γ))▷(β▷γ) = α▷β`

use std::collections::BTreeMap;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A binary operation table on `{0, …, n-1}`.
pub type Table = Vec<Vec<usize>>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteEas {
    elements: Vec<String>,
    arrow: Table,
    triangle: Table,
}

#[derive(Serialize, Deserialize)]
struct EasFile {
    elements: Vec<String>,
    arrow: Vec<Vec<String>>,
    triangle: Vec<Vec<String>>,
}

pub fn default_labels(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (0..n).map(|i| format!("e{i}")).collect()
    }
}

fn numeric_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

fn check_table(n: usize, t: &Table, what: &str) -> Result<()> {
    if t.len() != n || t.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch(format!("{what} table must be {n}x{n}")));
    }
    if let Some(v) = t.iter().flatten().find(|&&v| v >= n) {
        return Err(Error::Invalid(format!("{what} table entry {v} is not an element")));
    }
    Ok(())
}

impl FiniteEas {
    /// Builds the structure without checking the axioms; see [`check_eas`].
    pub fn new(elements: Vec<String>, arrow: Table, triangle: Table) -> Result<Self> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::Invalid("an EAS needs at least one element".into()));
        }
        if elements.iter().duplicates().next().is_some() {
            return Err(Error::Invalid("element labels must be distinct".into()));
        }
        check_table(n, &arrow, "arrow")?;
        check_table(n, &triangle, "triangle")?;
        Ok(FiniteEas { elements, arrow, triangle })
    }

    pub fn from_tables(arrow: Table, triangle: Table) -> Result<Self> {
        Self::new(default_labels(arrow.len()), arrow, triangle)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let f: EasFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let idx: BTreeMap<&str, usize> =
            f.elements.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let conv = |t: &[Vec<String>]| -> Result<Table> {
            t.iter()
                .map(|r| {
                    r.iter()
                        .map(|l| {
                            idx.get(l.as_str())
                                .copied()
                                .ok_or_else(|| Error::Parse(format!("unknown element {l:?}")))
                        })
                        .collect()
                })
                .collect()
        };
        let (a, t) = (conv(&f.arrow)?, conv(&f.triangle)?);
        Self::new(f.elements, a, t)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let lab = |t: &Table| -> Vec<Vec<String>> {
            t.iter().map(|r| r.iter().map(|&v| self.elements[v].clone()).collect()).collect()
        };
        serde_json::to_value(EasFile {
            elements: self.elements.clone(),
            arrow: lab(&self.arrow),
            triangle: lab(&self.triangle),
        })
        .expect("plain data serializes")
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn label(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|l| l == label)
    }

    pub fn arrow(&self, a: usize, b: usize) -> usize {
        self.arrow[a][b]
    }

    pub fn triangle(&self, a: usize, b: usize) -> usize {
        self.triangle[a][b]
    }

    pub fn arrow_table(&self) -> &Table {
        &self.arrow
    }

    pub fn triangle_table(&self) -> &Table {
        &self.triangle
    }

    /// `φ(α, β) = (α→β, α▷β)`.
    pub fn phi(&self, a: usize, b: usize) -> (usize, usize) {
        (self.arrow[a][b], self.triangle[a][b])
    }

    /// Same tables, transported along `perm` (old index `i` becomes `perm[i]`).
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.len();
        let mut inv = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let tr = |t: &Table| -> Table {
            (0..n).map(|i| (0..n).map(|j| perm[t[inv[i]][inv[j]]]).collect()).collect()
        };
        FiniteEas {
            elements: (0..n).map(|i| self.elements[inv[i]].clone()).collect(),
            arrow: tr(&self.arrow),
            triangle: tr(&self.triangle),
        }
    }

    pub fn with_labels(&self, labels: Vec<String>) -> Result<Self> {
        Self::new(labels, self.arrow.clone(), self.triangle.clone())
    }

    fn table_key(&self) -> (Vec<usize>, Vec<usize>) {
        (self.arrow.concat(), self.triangle.concat())
    }

    /// Lexicographically least relabeling (with default labels).
    pub fn canonical(&self) -> Self {
        let n = self.len();
        let best = (0..n)
            .permutations(n)
            .map(|p| self.relabel(&p))
            .min_by(|a, b| a.table_key().cmp(&b.table_key()))
            .expect("at least one permutation");
        best.with_labels(default_labels(n)).expect("same size")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub axiom: u8,
    pub triple: [usize; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EasReport {
    pub is_eas: bool,
    pub failures: Vec<AxiomFailure>,
    /// Only meaningful for an actual EAS.
    pub nondegenerate: Option<bool>,
}

pub fn axiom_holds(s: &FiniteEas, axiom: u8, a: usize, b: usize, c: usize) -> bool {
    let (ar, tr) = (&s.arrow, &s.triangle);
    match axiom {
        5 => ar[a][ar[b][c]] == ar[ar[a][b]][c],
        6 => ar[tr[a][ar[b][c]]][tr[b][c]] == tr[ar[a][b]][c],
        7 => tr[tr[a][ar[b][c]]][tr[b][c]] == tr[a][b],
        _ => panic!("no axiom {axiom}"),
    }
}

pub fn check_eas(s: &FiniteEas) -> EasReport {
    let n = s.len();
    let mut failures = Vec::new();
    for (a, b, c) in itertools::iproduct!(0..n, 0..n, 0..n) {
        for axiom in [5, 6, 7] {
            if !axiom_holds(s, axiom, a, b, c) {
                failures.push(AxiomFailure { axiom, triple: [a, b, c] });
            }
        }
    }
    let is_eas = failures.is_empty();
    EasReport { is_eas, nondegenerate: is_eas.then(|| phi_map(s).bijective), failures }
}

fn is_eas_fast(n: usize, ar: &[usize], tr: &[usize]) -> bool {
    for a in 0..n {
        for b in 0..n {
            let ab = ar[a * n + b];
            for c in 0..n {
                let bc = ar[b * n + c];
                if ar[a * n + bc] != ar[ab * n + c] {
                    return false;
                }
                let t = tr[a * n + bc];
                let tbc = tr[b * n + c];
                if ar[t * n + tbc] != tr[ab * n + c] || tr[t * n + tbc] != tr[a * n + b] {
                    return false;
                }
            }
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiMap {
    pub n: usize,
    /// `images[a*n + b] = φ(a, b)`.
    pub images: Vec<(usize, usize)>,
    pub image_size: usize,
    pub bijective: bool,
}

pub fn phi_map(s: &FiniteEas) -> PhiMap {
    let n = s.len();
    let images: Vec<_> = itertools::iproduct!(0..n, 0..n).map(|(a, b)| s.phi(a, b)).collect();
    let image_size = images.iter().unique().count();
    PhiMap { n, bijective: image_size == n * n, images, image_size }
}

/// First triple violating associativity of a table.
pub fn associativity_failure(star: &Table) -> Option<(usize, usize, usize)> {
    let n = star.len();
    itertools::iproduct!(0..n, 0..n, 0..n)
        .find(|&(a, b, c)| star[a][star[b][c]] != star[star[a][b]][c])
}

fn labels_for(labels: &[String], n: usize) -> Result<Vec<String>> {
    if labels.len() != n {
        return Err(Error::DimensionMismatch(format!("{} labels for {n} elements", labels.len())));
    }
    Ok(labels.to_vec())
}

fn require_semigroup(star: &Table) -> Result<()> {
    check_table(star.len(), star, "semigroup")?;
    if let Some((a, b, c)) = associativity_failure(star) {
        return Err(Error::NotAssociative(a, b, c));
    }
    Ok(())
}

/// `EAS(Ω)`: `α→β = β`, `α▷β = α`.
pub fn make_trivial(labels: &[String]) -> Result<FiniteEas> {
    let n = labels.len();
    FiniteEas::new(
        labels.to_vec(),
        (0..n).map(|_| (0..n).collect()).collect(),
        (0..n).map(|i| vec![i; n]).collect(),
    )
}

/// `EAS(Ω, ⋆)`: `α→β = α⋆β`, `α▷β = α`.
pub fn make_from_semigroup(labels: &[String], star: &Table) -> Result<FiniteEas> {
    require_semigroup(star)?;
    let n = star.len();
    FiniteEas::new(labels_for(labels, n)?, star.clone(), (0..n).map(|i| vec![i; n]).collect())
}

/// Index `γ` with `γ⋆β = α`, tabulated as `div[α][β]`, provided every right
/// translation `γ ↦ γ⋆β` is a bijection.
pub fn right_division(star: &Table) -> Result<Table> {
    let n = star.len();
    let mut div = vec![vec![usize::MAX; n]; n];
    for b in 0..n {
        for g in 0..n {
            let a = star[g][b];
            if div[a][b] != usize::MAX {
                return Err(Error::NoRightInverses(b, a));
            }
            div[a][b] = g;
        }
    }
    Ok(div)
}

/// `EAS′(Ω, ⋆)`: `α→β = β`, and `α▷β` the unique `γ` with `γ⋆β = α`.
pub fn make_prime(labels: &[String], star: &Table) -> Result<FiniteEas> {
    require_semigroup(star)?;
    let n = star.len();
    let div = right_division(star)?;
    FiniteEas::new(labels_for(labels, n)?, (0..n).map(|_| (0..n).collect()).collect(), div)
}

/// `EAS(Ω, ⋆, π_t)`: `α→β = α⋆β` and `▷` constant equal to `t`.
pub fn make_semigroup_with_projection(
    labels: &[String],
    star: &Table,
    target: &str,
) -> Result<FiniteEas> {
    require_semigroup(star)?;
    let n = star.len();
    let labels = labels_for(labels, n)?;
    let t = labels
        .iter()
        .position(|l| l == target)
        .ok_or_else(|| Error::Invalid(format!("unknown target {target:?}")))?;
    let s = FiniteEas::new(labels, star.clone(), vec![vec![t; n]; n])?;
    let report = check_eas(&s);
    if let Some(f) = report.failures.first() {
        return Err(Error::NotEas(format!("axiom ({}) fails at {:?}", f.axiom, f.triple)));
    }
    Ok(s)
}

/// Componentwise operations on `S × T`; the pair `(i, j)` has index `i*|T| + j`.
pub fn direct_product(s: &FiniteEas, t: &FiniteEas) -> Result<FiniteEas> {
    for x in [s, t] {
        if let Some(f) = check_eas(x).failures.first() {
            return Err(Error::NotEas(format!("axiom ({}) fails at {:?}", f.axiom, f.triple)));
        }
    }
    let (n, m) = (s.len(), t.len());
    let labels = itertools::iproduct!(0..n, 0..m)
        .map(|(i, j)| format!("({},{})", s.elements[i], t.elements[j]))
        .collect();
    let op = |f: &dyn Fn(&FiniteEas, usize, usize) -> usize| -> Table {
        (0..n * m)
            .map(|x| {
                (0..n * m)
                    .map(|y| f(s, x / m, y / m) * m + f(t, x % m, y % m))
                    .collect()
            })
            .collect()
    };
    FiniteEas::new(labels, op(&|e, a, b| e.arrow[a][b]), op(&|e, a, b| e.triangle[a][b]))
}

/// A bijection `f` (from indices of `s` to indices of `t`) transporting both
/// tables, if one exists.
pub fn isomorphism(s: &FiniteEas, t: &FiniteEas) -> Option<Vec<usize>> {
    let n = s.len();
    if n != t.len() {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn consistent(s: &FiniteEas, t: &FiniteEas, map: &[usize], k: usize) -> bool {
        // Checks all products among the first k+1 assigned elements that involve k.
        for a in 0..=k {
            for (x, y) in [(a, k), (k, a)] {
                for (ps, pt) in [(&s.arrow, &t.arrow), (&s.triangle, &t.triangle)] {
                    let r = ps[x][y];
                    let img = pt[map[x]][map[y]];
                    if r <= k && map[r] != img {
                        return false;
                    }
                }
            }
        }
        // Products landing on already placed elements from earlier pairs.
        for x in 0..=k {
            for y in 0..=k {
                for (ps, pt) in [(&s.arrow, &t.arrow), (&s.triangle, &t.triangle)] {
                    let r = ps[x][y];
                    if r == k && map[r] != pt[map[x]][map[y]] {
                        return false;
                    }
                }
            }
        }
        true
    }
    fn go(s: &FiniteEas, t: &FiniteEas, map: &mut [usize], used: &mut [bool], k: usize) -> bool {
        let n = map.len();
        if k == n {
            return true;
        }
        for c in 0..n {
            if used[c] {
                continue;
            }
            map[k] = c;
            used[c] = true;
            if consistent(s, t, map, k) && go(s, t, map, used, k + 1) {
                return true;
            }
            used[c] = false;
        }
        map[k] = usize::MAX;
        false
    }
    go(s, t, &mut map, &mut used, 0).then_some(map)
}

pub fn are_isomorphic(s: &FiniteEas, t: &FiniteEas) -> bool {
    isomorphism(s, t).is_some()
}

#[derive(Clone, Debug)]
pub struct EasClass {
    pub representative: FiniteEas,
    pub nondegenerate: bool,
    /// Number of labeled solutions in this class.
    pub orbit_size: usize,
    /// Name in the cardinality-two table, when the class appears there.
    pub name: Option<String>,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub size: usize,
    pub labeled_solutions: usize,
    pub classes: Vec<EasClass>,
}

fn all_tables(n: usize) -> Vec<Vec<usize>> {
    (0..n * n).map(|_| 0..n).multi_cartesian_product().collect()
}

/// All EAS on `n` elements up to isomorphism. Size 3 runs only with `full`.
pub fn classify(n: usize, full: bool) -> Result<Classification> {
    if n == 0 || n > 3 || (n == 3 && !full) {
        return Err(Error::SizeLimitExceeded(format!(
            "classification is available for sizes 1 and 2, and 3 with the full flag (got {n})"
        )));
    }
    let tables = all_tables(n);
    let assoc: Vec<&Vec<usize>> = tables
        .iter()
        .filter(|t| {
            itertools::iproduct!(0..n, 0..n, 0..n)
                .all(|(a, b, c)| t[a * n + t[b * n + c]] == t[t[a * n + b] * n + c])
        })
        .collect();
    let solutions: Vec<(Vec<usize>, Vec<usize>)> = assoc
        .par_iter()
        .flat_map_iter(|ar| {
            tables
                .iter()
                .filter(|tr| is_eas_fast(n, ar, tr))
                .map(|tr| ((*ar).clone(), tr.clone()))
                .collect::<Vec<_>>()
        })
        .collect();
    let unflat = |v: &[usize]| -> Table { v.chunks(n).map(<[usize]>::to_vec).collect() };
    let mut orbits: BTreeMap<(Vec<usize>, Vec<usize>), usize> = BTreeMap::new();
    for (ar, tr) in &solutions {
        let c = FiniteEas::from_tables(unflat(ar), unflat(tr)).expect("valid").canonical();
        *orbits.entry(c.table_key()).or_default() += 1;
    }
    let mut classes: Vec<EasClass> = orbits
        .into_iter()
        .map(|((ar, tr), orbit_size)| {
            let representative = FiniteEas::from_tables(unflat(&ar), unflat(&tr)).expect("valid");
            let nondegenerate = phi_map(&representative).bijective;
            let name = crate::catalog::identify_eas(&representative);
            EasClass { representative, nondegenerate, orbit_size, name }
        })
        .collect();
    classes.sort_by(|a, b| {
        (a.nondegenerate, a.representative.table_key())
            .cmp(&(b.nondegenerate, b.representative.table_key()))
    });
    Ok(Classification { size: n, labeled_solutions: solutions.len(), classes })
}

/// Tables of small groups and semigroups used throughout the examples.
pub mod groups {
    use super::Table;

    pub fn cyclic(n: usize) -> Table {
        (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
    }

    pub fn multiplicative_mod(n: usize) -> Table {
        (0..n).map(|a| (0..n).map(|b| (a * b) % n).collect()).collect()
    }

    /// `(a, b)` has index `a*|H| + b`.
    pub fn product(g: &Table, h: &Table) -> Table {
        let (n, m) = (g.len(), h.len());
        (0..n * m)
            .map(|x| (0..n * m).map(|y| g[x / m][y / m] * m + h[x % m][y % m]).collect())
            .collect()
    }

    pub fn identity(t: &Table) -> Option<usize> {
        let n = t.len();
        (0..n).find(|&e| (0..n).all(|a| t[e][a] == a && t[a][e] == a))
    }
}

pub fn group_labels(n: usize) -> Vec<String> {
    numeric_labels(n)
}
