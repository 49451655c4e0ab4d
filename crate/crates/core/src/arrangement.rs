//! Input models for local rings presented by their minimal primes, and the
//! height/dimension arithmetic every other module consumes.
//!
//! A *coordinate arrangement* is the concrete input: an ambient variable
//! count `n` and an antichain of variable subsets, each subset generating a
//! coordinate prime of `k[[x_1..x_n]]`. Squarefree monomial geometry makes
//! every invariant here exact set arithmetic: the radical of a sum of
//! coordinate primes is the prime on the union of their variables, so
//! `dim(A/(p_i + p_j)) = n - |p_i ∪ p_j|`.
//!
//! An *abstract arrangement* forgets the variables and keeps only the
//! dimension and the matrix of pairwise quotient dimensions; it is the model
//! on which the graph family, connectedness dimension, and hyperplane
//! sections act.

use std::borrow::Cow;
use std::fmt;

use crate::error::{Error, Result};

/// Hard width limit for variable bitmasks.
pub const MAX_VARS: usize = 128;

/// A subset of the ambient variables, stored as a bitmask.
///
/// Indices are 0-based internally; display and JSON use the variable labels.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VariableSet(u128);

impl VariableSet {
    pub fn empty() -> Self {
        VariableSet(0)
    }

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VARS);
        if n == MAX_VARS {
            VariableSet(u128::MAX)
        } else {
            VariableSet((1u128 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut set = VariableSet(0);
        for i in indices {
            set.insert(i);
        }
        set
    }

    pub fn insert(&mut self, index: usize) {
        assert!(index < MAX_VARS, "variable index {index} out of range");
        self.0 |= 1u128 << index;
    }

    pub fn contains(&self, index: usize) -> bool {
        index < MAX_VARS && self.0 & (1u128 << index) != 0
    }

    pub fn union(&self, other: VariableSet) -> VariableSet {
        VariableSet(self.0 | other.0)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(&self, other: VariableSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..MAX_VARS).filter(move |&i| self.contains(i))
    }
}

impl fmt::Debug for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Keeps the inclusion-minimal members of a family of variable sets.
///
/// Order-stable: survivors keep their relative order; duplicates keep the
/// first occurrence. Idempotent.
pub fn minimalize(primes: &[VariableSet]) -> Vec<VariableSet> {
    let mut kept: Vec<VariableSet> = Vec::with_capacity(primes.len());
    for (i, &p) in primes.iter().enumerate() {
        if primes[..i].contains(&p) {
            continue; // duplicate
        }
        if primes.iter().any(|&q| q != p && q.is_subset_of(p)) {
            continue; // strictly contains another member
        }
        kept.push(p);
    }
    kept
}

/// A ring `k[[x_1..x_n]]/I` with `I` an intersection of coordinate primes.
///
/// Immutable after construction; the primes always form an antichain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateArrangement {
    n: usize,
    primes: Vec<VariableSet>,
    labels: Option<Vec<String>>,
}

impl CoordinateArrangement {
    /// Builds an arrangement with default labels `x1..xn`.
    pub fn new(n: usize, primes: Vec<VariableSet>) -> Result<Self> {
        Self::build(n, primes, None)
    }

    /// Builds an arrangement with named variables; `n = labels.len()`.
    pub fn with_labels(labels: Vec<String>, primes: Vec<VariableSet>) -> Result<Self> {
        Self::build(labels.len(), primes, Some(labels))
    }

    fn build(n: usize, primes: Vec<VariableSet>, labels: Option<Vec<String>>) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::TooManyVariables { n, max: MAX_VARS });
        }
        if primes.is_empty() {
            return Err(Error::NoPrimes);
        }
        let full = VariableSet::full(n);
        for (index, p) in primes.iter().enumerate() {
            if p.is_empty() {
                return Err(Error::EmptyPrime { index });
            }
            if !p.is_subset_of(full) {
                return Err(Error::UnknownVariable {
                    name: format!("#{}", p.iter().find(|&i| i >= n).unwrap() + 1),
                });
            }
            if *p == full {
                return Err(Error::FullPrime { index });
            }
        }
        for i in 0..primes.len() {
            for j in 0..primes.len() {
                if i == j {
                    continue;
                }
                if primes[i] == primes[j] {
                    let (first, index) = (i.min(j), i.max(j));
                    return Err(Error::DuplicatePrime { index, first });
                }
                if primes[j].is_subset_of(primes[i]) {
                    return Err(Error::ContainedPrime { outer: i, inner: j });
                }
            }
        }
        Ok(CoordinateArrangement { n, primes, labels })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn prime_count(&self) -> usize {
        self.primes.len()
    }

    pub fn primes(&self) -> &[VariableSet] {
        &self.primes
    }

    pub fn label(&self, index: usize) -> Cow<'_, str> {
        match &self.labels {
            Some(labels) => Cow::Borrowed(labels[index].as_str()),
            None => Cow::Owned(format!("x{}", index + 1)),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.n).map(|i| self.label(i).into_owned()).collect()
    }

    pub fn is_equidimensional(&self) -> bool {
        let h = self.primes[0].len();
        self.primes.iter().all(|p| p.len() == h)
    }

    /// The common height of the minimal primes.
    pub fn height(&self) -> Result<usize> {
        let expected = self.primes[0].len();
        for (index, p) in self.primes.iter().enumerate() {
            if p.len() != expected {
                return Err(Error::NotEquidimensional {
                    index,
                    expected,
                    found: p.len(),
                });
            }
        }
        Ok(expected)
    }

    /// `dim(A) = n - h` for an equidimensional arrangement.
    pub fn dimension(&self) -> Result<usize> {
        Ok(self.n - self.height()?)
    }

    /// `dim(A/(p_i + p_j)) = n - |p_i ∪ p_j|`; equals `dim(A)` on the diagonal.
    pub fn pair_dim(&self, i: usize, j: usize) -> usize {
        self.n - self.primes[i].union(self.primes[j]).len()
    }

    /// Index pairs whose prime sum is not primary to the maximal ideal.
    pub fn xi_set(&self) -> Result<XiSet> {
        Ok(self.to_abstract()?.xi_set())
    }

    /// Forgets the variables, keeping the pairwise-dimension matrix.
    pub fn to_abstract(&self) -> Result<AbstractArrangement> {
        let d = self.dimension()?;
        let s = self.primes.len();
        let pairdim = (0..s)
            .map(|i| (0..s).map(|j| self.pair_dim(i, j)).collect())
            .collect();
        AbstractArrangement::new(d, pairdim)
    }
}

/// An equidimensional arrangement presented only by its dimension `d` and the
/// symmetric matrix `pairdim[i][j] = dim(A/(p_i + p_j))`.
///
/// Invariants enforced at construction: the matrix is square and symmetric,
/// the diagonal is `d`, and off-diagonal entries lie in `0..=d-1` (an entry 0
/// means the two components meet only at the closed point).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractArrangement {
    dim: usize,
    pairdim: Vec<Vec<usize>>,
}

impl AbstractArrangement {
    pub fn new(dim: usize, pairdim: Vec<Vec<usize>>) -> Result<Self> {
        let s = pairdim.len();
        if s == 0 {
            return Err(Error::NoPrimes);
        }
        for (row, r) in pairdim.iter().enumerate() {
            if r.len() != s {
                return Err(Error::RaggedMatrix {
                    row,
                    expected: s,
                    found: r.len(),
                });
            }
        }
        for i in 0..s {
            if pairdim[i][i] != dim {
                return Err(Error::MatrixEntryOutOfRange {
                    i,
                    j: i,
                    value: pairdim[i][i] as i64,
                    expected: format!("diagonal = dim = {dim}"),
                });
            }
            for j in 0..s {
                if pairdim[i][j] != pairdim[j][i] {
                    return Err(Error::AsymmetricMatrix { i, j });
                }
                if i != j && pairdim[i][j] + 1 > dim {
                    return Err(Error::MatrixEntryOutOfRange {
                        i,
                        j,
                        value: pairdim[i][j] as i64,
                        expected: format!("0..={}", dim.saturating_sub(1)),
                    });
                }
            }
        }
        Ok(AbstractArrangement { dim, pairdim })
    }

    /// A single irreducible component of dimension `d`.
    pub fn single_prime(d: usize) -> Self {
        AbstractArrangement {
            dim: d,
            pairdim: vec![vec![d]],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn prime_count(&self) -> usize {
        self.pairdim.len()
    }

    pub fn pair_dim(&self, i: usize, j: usize) -> usize {
        self.pairdim[i][j]
    }

    /// `ht_A(p_i + p_j) = d - dim(A/(p_i + p_j))`.
    pub fn pair_height(&self, i: usize, j: usize) -> usize {
        self.dim - self.pairdim[i][j]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.pairdim
    }

    /// Pairs `(i, j)`, `i <= j`, with `pairdim[i][j] >= 1`: the prime sums a
    /// generic section element must avoid. Every `(i, i)` appears once
    /// `d >= 1`.
    pub fn xi_set(&self) -> XiSet {
        let s = self.prime_count();
        let mut pairs = Vec::new();
        for i in 0..s {
            for j in i..s {
                if self.pairdim[i][j] >= 1 {
                    pairs.push((i, j));
                }
            }
        }
        XiSet { pairs }
    }
}

/// The avoidance locus for generic hyperplane sections: index pairs whose
/// prime sum has positive-dimensional quotient. 0-based, `i <= j`, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiSet {
    pub pairs: Vec<(usize, usize)>,
}

impl XiSet {
    pub fn contains(&self, i: usize, j: usize) -> bool {
        let key = (i.min(j), i.max(j));
        self.pairs.binary_search(&key).is_ok()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(indices: &[usize]) -> VariableSet {
        VariableSet::from_indices(indices.iter().copied())
    }

    /// Three disjoint 2-planes in 6 variables: d = 4, every pairwise union
    /// has 4 variables.
    pub(crate) fn a6() -> CoordinateArrangement {
        CoordinateArrangement::new(6, vec![vs(&[0, 1]), vs(&[2, 3]), vs(&[4, 5])]).unwrap()
    }

    #[test]
    fn minimalize_drops_supersets() {
        let out = minimalize(&[vs(&[0, 1]), vs(&[0, 1, 2])]);
        assert_eq!(out, vec![vs(&[0, 1])]);
    }

    #[test]
    fn minimalize_keeps_antichain_unchanged() {
        let input = vec![vs(&[0]), vs(&[1]), vs(&[2])];
        assert_eq!(minimalize(&input), input);
    }

    #[test]
    fn minimalize_dedups_order_stable() {
        let out = minimalize(&[vs(&[0, 1]), vs(&[2, 3]), vs(&[0, 1])]);
        assert_eq!(out, vec![vs(&[0, 1]), vs(&[2, 3])]);
    }

    #[test]
    fn minimalize_is_idempotent() {
        let input = vec![vs(&[0, 1]), vs(&[0, 1, 2]), vs(&[2, 3]), vs(&[0, 1])];
        let once = minimalize(&input);
        assert_eq!(minimalize(&once), once);
    }

    #[test]
    fn dimension_is_n_minus_height() {
        assert_eq!(a6().dimension().unwrap(), 4);

        let hyperplanes =
            CoordinateArrangement::new(4, vec![vs(&[0]), vs(&[1]), vs(&[2])]).unwrap();
        // independent route: n minus the (common) prime cardinality
        let h = hyperplanes.primes().iter().map(|p| p.len()).max().unwrap();
        assert_eq!(hyperplanes.dimension().unwrap(), 4 - h);
        assert_eq!(hyperplanes.dimension().unwrap(), 3);

        let curve = CoordinateArrangement::new(3, vec![vs(&[0, 1])]).unwrap();
        assert_eq!(curve.dimension().unwrap(), 1);
    }

    #[test]
    fn dimension_rejects_mixed_heights() {
        let arr = CoordinateArrangement::new(4, vec![vs(&[0]), vs(&[1, 2])]).unwrap();
        assert!(matches!(
            arr.dimension(),
            Err(Error::NotEquidimensional { index: 1, .. })
        ));
    }

    #[test]
    fn pair_dim_by_union_count() {
        let a = a6();
        // brute force over the variables of the union
        let union_size = (0..6)
            .filter(|&v| a.primes()[0].contains(v) || a.primes()[1].contains(v))
            .count();
        assert_eq!(a.pair_dim(0, 1), 6 - union_size);
        assert_eq!(a.pair_dim(0, 1), 2);
        assert_eq!(a.pair_dim(0, 0), 4);

        let hyperplanes =
            CoordinateArrangement::new(4, vec![vs(&[0]), vs(&[1]), vs(&[2])]).unwrap();
        assert_eq!(hyperplanes.pair_dim(0, 1), 2);
    }

    #[test]
    fn xi_set_collects_non_primary_sums() {
        let a = a6();
        let xi = a.xi_set().unwrap();
        assert_eq!(
            xi.pairs,
            vec![(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]
        );

        let two_planes = CoordinateArrangement::new(4, vec![vs(&[0, 1]), vs(&[2, 3])]).unwrap();
        assert_eq!(two_planes.xi_set().unwrap().pairs, vec![(0, 0), (1, 1)]);

        let single = CoordinateArrangement::new(3, vec![vs(&[0])]).unwrap();
        assert_eq!(single.xi_set().unwrap().pairs, vec![(0, 0)]);
    }

    #[test]
    fn to_abstract_fills_the_matrix() {
        let abs = a6().to_abstract().unwrap();
        assert_eq!(abs.dim(), 4);
        assert_eq!(abs.prime_count(), 3);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(abs.pair_dim(i, j), if i == j { 4 } else { 2 });
            }
        }

        let two_planes = CoordinateArrangement::new(4, vec![vs(&[0, 1]), vs(&[2, 3])]).unwrap();
        let abs = two_planes.to_abstract().unwrap();
        assert_eq!(abs.rows(), &[vec![2, 0], vec![0, 2]]);

        let single = CoordinateArrangement::new(3, vec![vs(&[0])]).unwrap();
        assert_eq!(single.to_abstract().unwrap().rows(), &[vec![2]]);
    }

    #[test]
    fn construction_rejects_bad_primes() {
        assert!(matches!(
            CoordinateArrangement::new(3, vec![]),
            Err(Error::NoPrimes)
        ));
        assert!(matches!(
            CoordinateArrangement::new(3, vec![VariableSet::empty()]),
            Err(Error::EmptyPrime { index: 0 })
        ));
        assert!(matches!(
            CoordinateArrangement::new(2, vec![vs(&[0, 1])]),
            Err(Error::FullPrime { index: 0 })
        ));
        assert!(matches!(
            CoordinateArrangement::new(4, vec![vs(&[0, 1]), vs(&[0, 1, 2])]),
            Err(Error::ContainedPrime { outer: 1, inner: 0 })
        ));
        assert!(matches!(
            CoordinateArrangement::new(4, vec![vs(&[0]), vs(&[0])]),
            Err(Error::DuplicatePrime { index: 1, first: 0 })
        ));
    }

    #[test]
    fn abstract_validation() {
        assert!(AbstractArrangement::new(4, vec![vec![4, 2], vec![2, 4]]).is_ok());
        assert!(matches!(
            AbstractArrangement::new(4, vec![vec![4, 2], vec![3, 4]]),
            Err(Error::AsymmetricMatrix { .. })
        ));
        assert!(matches!(
            AbstractArrangement::new(4, vec![vec![4, 4], vec![4, 4]]),
            Err(Error::MatrixEntryOutOfRange { .. })
        ));
        assert!(matches!(
            AbstractArrangement::new(4, vec![vec![3]]),
            Err(Error::MatrixEntryOutOfRange { .. })
        ));
        assert!(matches!(
            AbstractArrangement::new(4, vec![vec![4, 2]]),
            Err(Error::RaggedMatrix { .. })
        ));
    }

    #[test]
    fn height_identity_matches_union_size() {
        // ht(p_i + p_j) = d - pairdim(i,j) = |p_i ∪ p_j| - h
        let a = a6();
        let abs = a.to_abstract().unwrap();
        let h = a.height().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let union = a.primes()[i].union(a.primes()[j]).len();
                assert_eq!(abs.pair_height(i, j), union - h);
            }
        }
    }
}
