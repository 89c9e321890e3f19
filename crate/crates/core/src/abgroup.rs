//! Finite abelian groups given by invariant factors, and the integer Smith
//! normal form used to compute their quotients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Diagonal of the Smith normal form of `a`: `min(rows, cols)` nonnegative
/// entries `s_1 | s_2 | ...`, zeros last. Reduction runs over big integers so
/// intermediate growth cannot overflow.
pub fn smith_normal_form(a: &[Vec<i64>]) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    assert!(a.iter().all(|r| r.len() == cols), "ragged matrix");
    let mut m: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();

    let rank_bound = rows.min(cols);
    for t in 0..rank_bound {
        // smallest nonzero pivot in the trailing block
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !m[i][j].is_zero())
            .min_by(|&(i, j), &(k, l)| m[i][j].abs().cmp(&m[k][l].abs()));
        let Some((pi, pj)) = pivot else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                for j in t..cols {
                    let delta = &q * &m[t][j];
                    m[i][j] -= delta;
                }
                if !m[i][t].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                for i in t..rows {
                    let delta = &q * &m[i][t];
                    m[i][j] -= delta;
                }
                if !m[t][j].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // a smaller remainder appeared in row or column t; bring it up
                let (bi, bj) = (t..rows)
                    .map(|i| (i, t))
                    .chain((t..cols).map(|j| (t, j)))
                    .filter(|&(i, j)| !m[i][j].is_zero())
                    .min_by(|&(i, j), &(k, l)| m[i][j].abs().cmp(&m[k][l].abs()))
                    .expect("pivot row or column is nonzero");
                m.swap(t, bi);
                for row in m.iter_mut() {
                    row.swap(t, bj);
                }
                continue;
            }
            // row and column are clear; the pivot must divide the rest
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !m[i][j].is_multiple_of(&m[t][t])));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let x = m[i][j].clone();
                        m[t][j] += x;
                    }
                }
                None => break,
            }
        }
        if m[t][t].is_negative() {
            m[t][t] = -m[t][t].clone();
        }
    }
    (0..rank_bound).map(|t| m[t][t].clone()).collect()
}

/// `ℤ/d_1 × .. × ℤ/d_k` with `d_1 | d_2 | .. | d_k` and every `d_i ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinAbGroup {
    factors: Vec<u64>,
}

impl FinAbGroup {
    /// Unit factors are dropped; the rest must be positive and form a
    /// divisibility chain.
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if factors.contains(&0) {
            return Err(Error::InvalidInvariantFactors("factor 0 gives an infinite group".into()));
        }
        let factors: Vec<u64> = factors.into_iter().filter(|&d| d != 1).collect();
        if let Some(w) = factors.windows(2).find(|w| w[1] % w[0] != 0) {
            return Err(Error::InvalidInvariantFactors(format!("{} does not divide {}", w[0], w[1])));
        }
        Ok(Self { factors })
    }

    pub fn trivial() -> Self {
        Self { factors: Vec::new() }
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u128 {
        self.factors
            .iter()
            .try_fold(1u128, |acc, &d| acc.checked_mul(d as u128))
            .expect("group order overflows u128")
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Element with the given coordinates, reduced mod each factor.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: coords.len() });
        }
        Ok(GroupElement {
            coords: coords.iter().zip(&self.factors).map(|(&c, &d)| c.rem_euclid(d as i64) as u64).collect(),
        })
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { coords: vec![0; self.rank()] }
    }

    /// The `i`-th standard generator.
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut coords = vec![0; self.rank()];
        coords[i] = 1 % self.factors[i];
        GroupElement { coords }
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement {
            coords: a.coords.iter().zip(&b.coords).zip(&self.factors).map(|((&x, &y), &d)| (x + y) % d).collect(),
        }
    }

    pub fn scale(&self, a: &GroupElement, k: i64) -> GroupElement {
        GroupElement {
            coords: a
                .coords
                .iter()
                .zip(&self.factors)
                .map(|(&x, &d)| ((x as i128 * k as i128).rem_euclid(d as i128)) as u64)
                .collect(),
        }
    }

    /// `G / ⟨rels⟩`: Smith form of the relation lattice spanned by
    /// `diag(d_i)` and the rows `rels`.
    pub fn quotient_by(&self, rels: &[GroupElement]) -> Result<FinAbGroup> {
        let k = self.rank();
        if let Some(r) = rels.iter().find(|r| r.coords.len() != k) {
            return Err(Error::DimensionMismatch { expected: k, found: r.coords.len() });
        }
        if k == 0 {
            return Ok(Self::trivial());
        }
        let mut rows: Vec<Vec<i64>> = (0..k)
            .map(|i| {
                let mut row = vec![0; k];
                row[i] = self.factors[i] as i64;
                row
            })
            .collect();
        rows.extend(rels.iter().map(|r| r.coords.iter().map(|&x| x as i64).collect()));
        let factors = smith_normal_form(&rows)
            .into_iter()
            .map(|s| s.to_u64().expect("quotient factor divides the group order"))
            .collect();
        Self::new(factors)
    }

    /// `#(G / G^n) = ∏ gcd(d_i, n)`.
    pub fn power_quotient_size(&self, n: u64) -> u64 {
        assert!(n >= 1, "exponent must be positive");
        self.factors.iter().map(|&d| d.gcd(&n)).product()
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z/{d}")).collect();
        f.write_str(&parts.join(" x "))
    }
}

/// Coordinates with respect to the standard generators, `coords[i] ∈ [0, d_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    coords: Vec<u64>,
}

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}
