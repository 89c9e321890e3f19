//! Global type numbers of everywhere locally tiled orders.
//!
//! The genus of `Γ` in a central simple algebra of degree `n` is counted by
//! `#Cl_{T̂,Ω}(K) / Cl_{T̂,Ω}(K)^n`, where `Cl_{T̂,Ω}(K)` is the ray class group
//! `Cl_Ω(K)` modulo the classes `[q_ν] = [p_ν^{d_ν}]` of the primes at which the
//! local norm exponent `d_ν` is a proper divisor of `n`. The class group and the
//! class vectors are inputs; nothing here computes them.

use crate::abgroup::{FinAbGroup, GroupElement};
use crate::arith::is_prime;
use crate::error::{Error, Result};

/// How the class vector of a T-prime was supplied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationKind {
    /// The class of the replacement prime `q_ν`, already equal to `[p_ν^{d_ν}]`.
    QClass,
    /// The class of `p_ν` itself; it is multiplied by `d_ν` before use.
    PClass,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TPrime {
    pub label: String,
    /// Local norm exponent `d_ν`.
    pub d: usize,
    pub kind: RelationKind,
    /// Coordinates in the class group's invariant-factor basis.
    pub vector: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalProblem {
    pub degree: usize,
    /// `Cl_Ω(K)`.
    pub class_group: FinAbGroup,
    /// Labels of the real places ramified in the algebra. Informational only.
    pub omega: Vec<String>,
    pub t_primes: Vec<TPrime>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeNumberReport {
    /// `Cl_{T̂,Ω}(K)`.
    pub cl_t_hat: FinAbGroup,
    /// `G(Γ)`.
    pub type_number: u64,
    /// `#Cl_Ω(K) / Cl_Ω(K)^n`, which `type_number` divides.
    pub max_bound: u64,
    /// Labels of primes dropped because `d_ν = n`.
    pub skipped: Vec<String>,
}

impl GlobalProblem {
    /// The relation `[q_ν]` for every prime with `d_ν ≠ n`, plus the labels of
    /// primes with `d_ν = n`, which impose no relation.
    fn relations(&self) -> Result<(Vec<GroupElement>, Vec<String>)> {
        let n = self.degree;
        let mut rels = Vec::new();
        let mut skipped = Vec::new();
        for p in &self.t_primes {
            if p.d == 0 || !n.is_multiple_of(p.d) {
                return Err(Error::InvalidLocalExponent(p.label.clone()));
            }
            let class = self.class_group.element(&p.vector)?;
            if p.d == n {
                log::warn!("prime {} has d = n = {n}; it imposes no relation and is skipped", p.label);
                skipped.push(p.label.clone());
                continue;
            }
            rels.push(match p.kind {
                RelationKind::QClass => class,
                RelationKind::PClass => self.class_group.scale(&class, p.d as i64),
            });
        }
        Ok((rels, skipped))
    }
}

pub fn type_number(problem: &GlobalProblem) -> Result<TypeNumberReport> {
    let n = problem.degree;
    if n < 2 {
        return Err(Error::TooSmall(n));
    }
    let (rels, skipped) = problem.relations()?;
    let cl_t_hat = problem.class_group.quotient_by(&rels)?;
    let type_number = cl_t_hat.power_quotient_size(n as u64);
    let max_bound = problem.class_group.power_quotient_size(n as u64);
    debug_assert_eq!(max_bound % type_number, 0);
    Ok(TypeNumberReport { cl_t_hat, type_number, max_bound, skipped })
}

/// Odd prime degree `p`: every T-prime has `d_ν = 1` and contributes the class
/// of `p_ν` itself, so `G(Γ) = #Cl_T(K) / Cl_T(K)^p`. A degree of 2 is rejected
/// as [`Error::NotPrime`] since the simplification needs an odd prime.
pub fn prime_degree_type_number(problem: &GlobalProblem) -> Result<TypeNumberReport> {
    let p = problem.degree;
    if p < 3 || !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if let Some(bad) = problem.t_primes.iter().find(|t| t.d != 1 && t.d != p) {
        return Err(Error::InvalidLocalExponent(bad.label.clone()));
    }
    type_number(problem)
}
