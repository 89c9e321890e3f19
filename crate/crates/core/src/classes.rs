//! Isomorphism, reflection equivalence and the number of reflection classes.
//!
//! Two tiled orders are reflection equivalent when some `σ ∈ S_n` carries the
//! structural invariants and the vertex types of one onto the other:
//! `m'_ijℓ = m_{σ(i)σ(j)σ(ℓ)}` and `t'_i ≡ t_{σ(i)} (mod n)`. The orders
//! congruent to `Γ` fall into `d` such classes, where `d | n` is also the
//! exponent in `nr(N(Γ)) = (k^×)^d R^×`. Three independent routes to `d` live
//! here: the normalizer shadow ([`norm_exponent`]), the divisor scan
//! ([`reflection_class_count`], with the prime shortcut
//! [`reflection_class_count_prime`]) and an exhaustive oracle
//! ([`oracle_reflection_class_count`]).

use std::cmp::Ordering;

use num_integer::Integer;

use crate::arith::{divisors, is_prime};
use crate::error::{Error, Result};
use crate::exponent::{ExponentMatrix, InvariantTensor, TypeVector};
use crate::monomial::MonomialMatrix;
use crate::perm::Permutation;
use crate::search::{self, Query, TypeShift};

/// Largest `n` for which exhaustive `S_n` enumeration is attempted.
pub const MAX_EXHAUSTIVE_N: usize = 9;

fn check_same_n(a: &ExponentMatrix, b: &ExponentMatrix) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch { expected: a.n(), found: b.n() });
    }
    Ok(())
}

/// Returns some `σ` with `m'_ijℓ = m_{σ(i)σ(j)σ(ℓ)}`, where `m` belongs to
/// `first` and `m'` to `second`, or `None` when the orders are not isomorphic.
/// Among all witnesses the one moving the fewest points is returned.
pub fn are_isomorphic(first: &ExponentMatrix, second: &ExponentMatrix) -> Result<Option<Permutation>> {
    check_same_n(first, second)?;
    let (m, m2) = (first.structural_invariants(), second.structural_invariants());
    Ok(search::find_min_support(Query { source: &m, target: &m2, types: None, cycle_filter: false }))
}

/// Like [`are_isomorphic`] but also requires `t'_i ≡ t_{σ(i)} (mod n)`.
pub fn reflection_equivalent(
    first: &ExponentMatrix,
    second: &ExponentMatrix,
) -> Result<Option<Permutation>> {
    check_same_n(first, second)?;
    let (m, m2) = (first.structural_invariants(), second.structural_invariants());
    let (t, t2) = (first.vertex_types(), second.vertex_types());
    Ok(search::find_min_support(Query {
        source: &m,
        target: &m2,
        types: Some(TypeShift { source: &t, target: &t2, shift: 0 }),
        cycle_filter: false,
    }))
}

/// The permutation shadow `H` of the normalizer together with the types of
/// its monomial lifts `ξ_σ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizerData {
    /// Elements of `H` in lexicographic order of image arrays.
    pub h: Vec<Permutation>,
    /// `xi_types[k]` is `t(ξ_σ)` for `σ = h[k]`.
    pub xi_types: Vec<usize>,
    /// Generator of `{t(ξ_σ)} = dℤ/nℤ`.
    pub d: usize,
}

/// `t(ξ_σ) ≡ Σ_i (μ_i1 − μ_{σ(i)σ(1)}) (mod n)` for the lift
/// `ξ_σ = (π^{μ_i1 − μ_{σ(i)σ(1)}} δ_{σ(i)j})`.
pub fn xi_type(e: &ExponentMatrix, sigma: &Permutation) -> usize {
    lift(e, sigma).type_residue()
}

/// The monomial lift `ξ_σ` of `σ ∈ H`; conjugating by it fixes `Γ`.
pub fn lift(e: &ExponentMatrix, sigma: &Permutation) -> MonomialMatrix {
    let s1 = sigma.apply(0);
    let alpha = (0..e.n()).map(|i| e.get(i, 0) - e.get(sigma.apply(i), s1)).collect();
    MonomialMatrix::new(sigma.clone(), alpha).expect("lengths agree")
}

pub fn normalizer(e: &ExponentMatrix) -> NormalizerData {
    let m = e.structural_invariants();
    let h = search::find_all(Query { source: &m, target: &m, types: None, cycle_filter: false });
    let xi_types: Vec<usize> = h.iter().map(|s| xi_type(e, s)).collect();
    let d = xi_types.iter().fold(e.n(), |g, &t| g.gcd(&t));
    NormalizerData { h, xi_types, d }
}

/// `d` with `nr(N(Γ)) = (k^×)^d R^×`, read off the normalizer shadow.
pub fn norm_exponent(e: &ExponentMatrix) -> usize {
    normalizer(e).d
}

/// Number of reflection classes by scanning the divisors of `n`.
///
/// For each proper divisor `d` in increasing order, looks for `σ` whose cycles
/// all have length sharing a factor with `n`, with `t_j + d ≡ t_{σ(j)}` and
/// `m_ijℓ = m_{σ(i)σ(j)σ(ℓ)}`. The first divisor that admits such a `σ` is the
/// answer; if none does, the answer is `n`.
pub fn reflection_class_count(e: &ExponentMatrix) -> usize {
    let n = e.n();
    let m = e.structural_invariants();
    let t = e.vertex_types();
    for d in divisors(n).into_iter().filter(|&d| d < n) {
        let q = Query {
            source: &m,
            target: &m,
            types: Some(TypeShift { source: &t, target: &t, shift: d }),
            cycle_filter: true,
        };
        if let Some(sigma) = search::find_first(q) {
            log::debug!("divisor {d} realised by {sigma}");
            return d;
        }
    }
    n
}

/// Prime-degree shortcut: repeated types force `p` classes; otherwise the
/// unique `p`-cycle with `t_j + 1 ≡ t_{σ(j)}` decides between `1` and `p`.
pub fn reflection_class_count_prime(e: &ExponentMatrix) -> Result<usize> {
    let p = e.n();
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let t = e.vertex_types();
    if !t.all_distinct() {
        return Ok(p);
    }
    let mut index_of_type = vec![0; p];
    for j in 0..p {
        index_of_type[t.get(j)] = j;
    }
    let sigma = Permutation::from_images((0..p).map(|j| index_of_type[(t.get(j) + 1) % p]).collect())?;
    let m = e.structural_invariants();
    Ok(if m.matches_under(&m, &sigma) { 1 } else { p })
}

/// Exhaustive, unpruned reflection-equivalence test on raw data.
fn brute_force_equivalent(
    m: &InvariantTensor,
    t: &TypeVector,
    m2: &InvariantTensor,
    t2: &TypeVector,
) -> bool {
    let n = m.n();
    Permutation::all(n).any(|s| {
        (0..n).all(|i| t2.get(i) == t.get(s.apply(i)))
            && (0..n).all(|i| {
                (0..n).all(|j| {
                    (0..n).all(|l| m2.get(i, j, l) == m.get(s.apply(i), s.apply(j), s.apply(l)))
                })
            })
    })
}

/// Least `s ∈ 1..=n` with `Γ_s ∼ Γ_0`, where `Γ_s = ξ_s Γ ξ_s⁻¹` and
/// `ξ_s = diag(π^s, 1, .., 1)`, tested by scanning all of `S_n`.
pub fn oracle_reflection_class_count(e: &ExponentMatrix) -> Result<usize> {
    let n = e.n();
    if n > MAX_EXHAUSTIVE_N {
        return Err(Error::TooLarge(n));
    }
    let (m0, t0) = (e.structural_invariants(), e.vertex_types());
    for s in 1..=n {
        let shifted = e.conjugate_by_monomial(&MonomialMatrix::shift(n, s as i64))?;
        let (ms, ts) = (shifted.structural_invariants(), shifted.vertex_types());
        if brute_force_equivalent(&m0, &t0, &ms, &ts) {
            return Ok(s);
        }
    }
    unreachable!("Γ_n is conjugate to Γ_0 by a scalar")
}

/// Canonical representative of a reflection class: the lexicographic minimum
/// over `σ ∈ S_n` of the permuted invariant tensor followed by the permuted
/// type vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReflectionClassLabel {
    pub n: usize,
    pub canonical_invariants: Vec<i64>,
    pub canonical_types: Vec<usize>,
}

pub fn class_label(e: &ExponentMatrix) -> Result<ReflectionClassLabel> {
    let n = e.n();
    if n > MAX_EXHAUSTIVE_N {
        return Err(Error::TooLarge(n));
    }
    Ok(label_of(&e.structural_invariants(), &e.vertex_types()))
}

/// Label of arbitrary invariant/type data.
pub fn label_of(m: &InvariantTensor, t: &TypeVector) -> ReflectionClassLabel {
    let n = m.n();
    let len = n * n * n + n;
    let entry = |s: &Permutation, k: usize| -> i64 {
        if k < n * n * n {
            let (i, j, l) = (k / (n * n), (k / n) % n, k % n);
            m.get(s.apply(i), s.apply(j), s.apply(l))
        } else {
            t.get(s.apply(k - n * n * n)) as i64
        }
    };
    let mut perms = Permutation::all(n);
    let first = perms.next().expect("S_n is nonempty");
    let mut best: Vec<i64> = (0..len).map(|k| entry(&first, k)).collect();
    let mut scratch = Vec::with_capacity(len);
    for s in perms {
        scratch.clear();
        let mut order = Ordering::Equal;
        for k in 0..len {
            let x = entry(&s, k);
            if order == Ordering::Equal {
                order = x.cmp(&best[k]);
                if order == Ordering::Greater {
                    break;
                }
            }
            scratch.push(x);
        }
        if order == Ordering::Less {
            std::mem::swap(&mut best, &mut scratch);
        }
    }
    let types = best.split_off(n * n * n).into_iter().map(|x| x as usize).collect();
    ReflectionClassLabel { n, canonical_invariants: best, canonical_types: types }
}
