use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Monomial matrix `ξ = (π^{α_i} δ_{σ(i)j})`: row `i` carries `π^{α_i}` in
/// column `σ(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialMatrix {
    sigma: Permutation,
    alpha: Vec<i64>,
}

impl MonomialMatrix {
    pub fn new(sigma: Permutation, alpha: Vec<i64>) -> Result<Self> {
        if sigma.len() != alpha.len() {
            return Err(Error::DimensionMismatch { expected: sigma.len(), found: alpha.len() });
        }
        Ok(Self { sigma, alpha })
    }

    pub fn identity(n: usize) -> Self {
        Self { sigma: Permutation::identity(n), alpha: vec![0; n] }
    }

    pub fn diagonal(alpha: Vec<i64>) -> Self {
        Self { sigma: Permutation::identity(alpha.len()), alpha }
    }

    pub fn permutation(sigma: Permutation) -> Self {
        let n = sigma.len();
        Self { sigma, alpha: vec![0; n] }
    }

    /// `diag(π^s, 1, .., 1)`, the shift that moves a polytope into the next
    /// reflection class.
    pub fn shift(n: usize, s: i64) -> Self {
        let mut alpha = vec![0; n];
        alpha[0] = s;
        Self::diagonal(alpha)
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn alpha(&self) -> &[i64] {
        &self.alpha
    }

    /// `t(ξ) ≡ Σ α_i (mod n)`.
    pub fn type_residue(&self) -> usize {
        let n = self.n() as i64;
        self.alpha.iter().sum::<i64>().rem_euclid(n) as usize
    }

    /// `ξ⁻¹` has permutation `σ⁻¹` and exponents `−α_{σ⁻¹(i)}`.
    pub fn inverse(&self) -> Self {
        let inv = self.sigma.inverse();
        let alpha = (0..self.n()).map(|i| -self.alpha[inv.apply(i)]).collect();
        Self { sigma: inv, alpha }
    }

    /// The product `self · other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "composing monomials of different size");
        let sigma = other.sigma.compose(&self.sigma);
        let alpha = (0..self.n()).map(|i| self.alpha[i] + other.alpha[self.sigma.apply(i)]).collect();
        Self { sigma, alpha }
    }
}
