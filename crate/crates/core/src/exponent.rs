//! Exponent matrices of tiled orders and the data derived from them.
//!
//! A tiled order `Γ = (p^{μ_ij})` inside `M_n(D)` is determined by its integer
//! exponent matrix `μ`. Everything else the crate computes (structural
//! invariants, vertex types, normalizer shadows, reflection classes) is a
//! function of that matrix.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::MonomialMatrix;
use crate::perm::Permutation;

/// Validated exponent matrix `(μ_ij)` with zero diagonal and
/// `μ_ij + μ_jk ≥ μ_ik` for all indices.
///
/// Entries are signed and are kept within 32 bits so that every sum the crate
/// forms fits comfortably in an `i64`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentMatrix {
    n: usize,
    mu: Vec<i64>,
}

impl ExponentMatrix {
    /// Validates `rows` as an `n × n` exponent matrix.
    ///
    /// The ring condition is scanned with the middle index outermost, so the
    /// reported triple `(i, j, k)` (1-based) is the first failure in that
    /// order.
    pub fn validate(n: usize, rows: &[Vec<i64>]) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooSmall(n));
        }
        if rows.len() != n {
            return Err(Error::WrongRowCount { n, rows: rows.len() });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare { n, row: i + 1, len: row.len() });
            }
        }
        let mut mu = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                if i32::try_from(x).is_err() {
                    return Err(Error::EntryOutOfRange(i + 1, j + 1));
                }
                mu.push(x);
            }
        }
        let e = Self { n, mu };
        if let Some(i) = (0..n).find(|&i| e.get(i, i) != 0) {
            return Err(Error::NonzeroDiagonal(i + 1));
        }
        for j in 0..n {
            for i in 0..n {
                for k in 0..n {
                    if e.get(i, j) + e.get(j, k) < e.get(i, k) {
                        return Err(Error::RingConditionViolated(i + 1, j + 1, k + 1));
                    }
                }
            }
        }
        Ok(e)
    }

    /// The exponent matrix of the maximal order `M_n(Δ)`.
    pub fn zero(n: usize) -> Result<Self> {
        Self::validate(n, &vec![vec![0; n]; n])
    }

    /// Skips validation; callers guarantee the invariants.
    pub(crate) fn from_raw(n: usize, mu: Vec<i64>) -> Self {
        debug_assert_eq!(mu.len(), n * n);
        Self { n, mu }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.mu[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.mu.chunks(self.n).map(<[i64]>::to_vec).collect()
    }

    /// Column `j`, i.e. the coordinates `[μ_1j, .., μ_nj]` of the distinguished
    /// vertex `[P_j]`.
    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    /// `m_ijℓ = μ_ij + μ_jℓ − μ_iℓ` for all index triples.
    pub fn structural_invariants(&self) -> InvariantTensor {
        let n = self.n;
        let mut m = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    m.push(self.get(i, j) + self.get(j, l) - self.get(i, l));
                }
            }
        }
        InvariantTensor { n, m }
    }

    /// Types of the distinguished vertices: column sums reduced mod `n`.
    pub fn vertex_types(&self) -> TypeVector {
        let n = self.n as i64;
        let t = (0..self.n)
            .map(|j| (0..self.n).map(|i| self.get(i, j)).sum::<i64>().rem_euclid(n) as usize)
            .collect();
        TypeVector { n: self.n, t }
    }

    /// True when the order is maximal, i.e. every structural invariant
    /// vanishes and the polytope is a single vertex.
    pub fn is_maximal(&self) -> bool {
        self.structural_invariants().is_zero()
    }

    /// Exponent matrix of `ξΓξ⁻¹`: `μ'_ij = α_i − α_j + μ_{σ(i)σ(j)}`.
    pub fn conjugate_by_monomial(&self, xi: &MonomialMatrix) -> Result<Self> {
        if xi.n() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: xi.n() });
        }
        let n = self.n;
        let sigma = xi.sigma();
        let alpha = xi.alpha();
        let mut mu = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let x = alpha[i] - alpha[j] + self.get(sigma.apply(i), sigma.apply(j));
                if i32::try_from(x).is_err() {
                    return Err(Error::EntryOutOfRange(i + 1, j + 1));
                }
                mu.push(x);
            }
        }
        Ok(Self { n, mu })
    }

    /// Simultaneous permutation of rows and columns:
    /// `μ'_ij = μ_{σ(i)σ(j)}`.
    pub fn permuted(&self, sigma: &Permutation) -> Self {
        let n = self.n;
        let mut mu = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                mu.push(self.get(sigma.apply(i), sigma.apply(j)));
            }
        }
        Self { n, mu }
    }

    /// Entrywise maximum of two exponent matrices of the same size. The result
    /// again satisfies the ring condition.
    pub fn entrywise_max(&self, other: &Self) -> Result<Self> {
        if other.n != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        let mu = self.mu.iter().zip(&other.mu).map(|(&a, &b)| a.max(b)).collect();
        Ok(Self { n: self.n, mu })
    }
}

impl fmt::Display for ExponentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

/// The dense `n³` tensor of structural invariants `m_ijℓ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvariantTensor {
    n: usize,
    m: Vec<i64>,
}

impl InvariantTensor {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, l: usize) -> i64 {
        self.m[(i * self.n + j) * self.n + l]
    }

    /// Flattened in lexicographic order of `(i, j, ℓ)`.
    pub fn as_slice(&self) -> &[i64] {
        &self.m
    }

    pub fn is_zero(&self) -> bool {
        self.m.iter().all(|&x| x == 0)
    }

    /// `m'_ijℓ = m_{σ(i)σ(j)σ(ℓ)}`.
    pub fn permuted(&self, sigma: &Permutation) -> Self {
        let n = self.n;
        let mut m = Vec::with_capacity(self.m.len());
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    m.push(self.get(sigma.apply(i), sigma.apply(j), sigma.apply(l)));
                }
            }
        }
        Self { n, m }
    }

    /// True when `other` equals `self` permuted by `sigma`.
    pub fn matches_under(&self, other: &Self, sigma: &Permutation) -> bool {
        let n = self.n;
        other.n == n
            && (0..n).all(|i| {
                (0..n).all(|j| {
                    (0..n).all(|l| {
                        other.get(i, j, l) == self.get(sigma.apply(i), sigma.apply(j), sigma.apply(l))
                    })
                })
            })
    }

    /// For `n = 3`, the six invariants with pairwise distinct indices:
    /// `(m_123, m_132, m_213, m_231, m_312, m_321)`.
    pub fn six_tuple(&self) -> Option<[i64; 6]> {
        if self.n != 3 {
            return None;
        }
        Some([
            self.get(0, 1, 2),
            self.get(0, 2, 1),
            self.get(1, 0, 2),
            self.get(1, 2, 0),
            self.get(2, 0, 1),
            self.get(2, 1, 0),
        ])
    }
}

/// Residues `t_j ∈ [0, n)` of the distinguished vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeVector {
    n: usize,
    t: Vec<usize>,
}

impl TypeVector {
    /// Reduces arbitrary integers mod `n`.
    pub fn new(n: usize, values: &[i64]) -> Self {
        let t = values.iter().map(|&x| x.rem_euclid(n as i64) as usize).collect();
        Self { n, t }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.t
    }

    #[inline]
    pub fn get(&self, i: usize) -> usize {
        self.t[i]
    }

    /// Every type shifted by `s` (mod `n`).
    pub fn shifted(&self, s: i64) -> Self {
        let n = self.n as i64;
        let t = self.t.iter().map(|&x| (x as i64 + s).rem_euclid(n) as usize).collect();
        Self { n: self.n, t }
    }

    /// `t'_i = t_{σ(i)}`.
    pub fn permuted(&self, sigma: &Permutation) -> Self {
        Self { n: self.n, t: (0..self.t.len()).map(|i| self.t[sigma.apply(i)]).collect() }
    }

    pub fn all_distinct(&self) -> bool {
        let mut seen = vec![false; self.n];
        self.t.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> ExponentMatrix {
        let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        ExponentMatrix::validate(rows.len(), &rows).unwrap()
    }

    #[test]
    fn validate_accepts_example_orders() {
        m(&[&[0, 1, 1], &[0, 0, 1], &[0, 1, 0]]);
        m(&[&[0, -1, -1], &[3, 0, 1], &[2, 1, 0]]);
        assert!(ExponentMatrix::zero(3).unwrap().is_maximal());
    }

    #[test]
    fn validate_errors() {
        let e = ExponentMatrix::validate(2, &[vec![0, 0], vec![-1, 0]]);
        assert_eq!(e, Err(Error::RingConditionViolated(2, 1, 2)));
        let e = ExponentMatrix::validate(2, &[vec![1, 0], vec![0, 0]]);
        assert_eq!(e, Err(Error::NonzeroDiagonal(1)));
        let e = ExponentMatrix::validate(2, &[vec![0, 0], vec![0]]);
        assert_eq!(e, Err(Error::NotSquare { n: 2, row: 2, len: 1 }));
        let e = ExponentMatrix::validate(3, &[vec![0, 0], vec![0, 0]]);
        assert_eq!(e, Err(Error::WrongRowCount { n: 3, rows: 2 }));
        assert_eq!(ExponentMatrix::validate(1, &[vec![0]]), Err(Error::TooSmall(1)));
        let big = 1i64 << 40;
        let e = ExponentMatrix::validate(2, &[vec![0, big], vec![0, 0]]);
        assert_eq!(e, Err(Error::EntryOutOfRange(1, 2)));
    }

    #[test]
    fn six_tuples_from_examples() {
        let ex1 = m(&[&[0, 1, 1], &[0, 0, 1], &[0, 1, 0]]);
        assert_eq!(ex1.structural_invariants().six_tuple(), Some([1, 1, 0, 1, 0, 1]));
        let g2 = m(&[&[0, 0, 2], &[1, 0, 2], &[0, 0, 0]]);
        assert_eq!(g2.structural_invariants().six_tuple(), Some([0, 2, 1, 1, 0, 1]));
        assert!(ExponentMatrix::zero(3).unwrap().structural_invariants().is_zero());
        assert_eq!(ExponentMatrix::zero(4).unwrap().structural_invariants().six_tuple(), None);
    }

    #[test]
    fn vertex_types_from_examples() {
        let p1 = m(&[&[0, 1, 1, 2], &[2, 0, 2, 2], &[2, 1, 0, 1], &[1, 1, 0, 0]]);
        assert_eq!(p1.vertex_types().as_slice(), &[1, 3, 3, 1]);
        let g = m(&[&[0, 1, 2], &[0, 0, 1], &[0, 1, 0]]);
        assert_eq!(g.vertex_types().as_slice(), &[0, 2, 0]);
        assert_eq!(ExponentMatrix::zero(3).unwrap().vertex_types().as_slice(), &[0, 0, 0]);
    }

    #[test]
    fn maximality() {
        // μ_ij = c_i − c_j
        let c = [1i64, 0, 2];
        let rows: Vec<Vec<i64>> = (0..3).map(|i| (0..3).map(|j| c[i] - c[j]).collect()).collect();
        assert!(ExponentMatrix::validate(3, &rows).unwrap().is_maximal());
        assert!(!m(&[&[0, 1, 1], &[0, 0, 1], &[0, 1, 0]]).is_maximal());
    }

    #[test]
    fn type_vector_helpers() {
        let t = TypeVector::new(4, &[1, -1, 6, 0]);
        assert_eq!(t.as_slice(), &[1, 3, 2, 0]);
        assert_eq!(t.shifted(3).as_slice(), &[0, 2, 1, 3]);
        assert!(t.all_distinct());
        assert!(!TypeVector::new(3, &[0, 2, 2]).all_distinct());
    }
}
