//! Random valid exponent matrices and monomials, for property tests and
//! benchmarks.

use rand::Rng;

use crate::exponent::ExponentMatrix;
use crate::monomial::MonomialMatrix;
use crate::perm::Permutation;

/// Min-plus closure of nonnegative random weights in `[0, bound]`; always
/// valid, with entries in `[0, bound]`.
fn closure<R: Rng + ?Sized>(rng: &mut R, n: usize, bound: i64) -> Vec<i64> {
    let mut mu = vec![0i64; n * n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                mu[i * n + j] = rng.gen_range(0..=bound);
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = mu[i * n + k] + mu[k * n + j];
                if via < mu[i * n + j] {
                    mu[i * n + j] = via;
                }
            }
        }
    }
    mu
}

pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        images.swap(i, rng.gen_range(0..=i));
    }
    Permutation::from_images_unchecked(images)
}

pub fn random_monomial<R: Rng + ?Sized>(rng: &mut R, n: usize, alpha_bound: i64) -> MonomialMatrix {
    let sigma = random_permutation(rng, n);
    let alpha = (0..n).map(|_| rng.gen_range(-alpha_bound..=alpha_bound)).collect();
    MonomialMatrix::new(sigma, alpha).expect("lengths agree")
}

/// A monomial `(τ, α)` whose `α` sums to the same `c` on every cycle of `τ`,
/// so that `ξ^{ord τ}` is the scalar `π^c` and conjugation by `ξ` has finite
/// order on exponent matrices.
fn cyclic_monomial<R: Rng + ?Sized>(rng: &mut R, n: usize) -> MonomialMatrix {
    let tau = random_permutation(rng, n);
    let c = rng.gen_range(1..=2);
    let mut alpha = vec![0i64; n];
    for cycle in tau.cycles() {
        for _ in 0..c {
            alpha[cycle[rng.gen_range(0..cycle.len())]] += 1;
        }
    }
    MonomialMatrix::new(tau, alpha).expect("lengths agree")
}

/// Entrywise maximum over the orbit of `e` under conjugation by `xi`; the
/// result is normalized by `xi`.
fn orbit_max(e: ExponentMatrix, xi: &MonomialMatrix) -> Option<ExponentMatrix> {
    let steps = xi.sigma().cycle_lengths().into_iter().fold(1, num_integer::lcm);
    let mut acc = e.clone();
    let mut cur = e;
    for _ in 1..steps {
        cur = cur.conjugate_by_monomial(xi).ok()?;
        acc = acc.entrywise_max(&cur).ok()?;
    }
    Some(acc)
}

/// A valid `n × n` exponent matrix with entries in `[−bound, bound]`, built by
/// composing closures, entrywise maxima and random monomial conjugations.
/// About half of the draws are made invariant under a random monomial of
/// nonzero type, so that fewer than `n` reflection classes are common.
pub fn random_exponent_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize, bound: i64) -> ExponentMatrix {
    assert!(n >= 2 && bound >= 0);
    let within = |e: &ExponentMatrix| e.rows().iter().flatten().all(|x| x.abs() <= bound);
    loop {
        let mut e = ExponentMatrix::from_raw(n, closure(rng, n, bound));
        if rng.gen_bool(0.3) {
            let other = ExponentMatrix::from_raw(n, closure(rng, n, bound));
            let other = other.permuted(&random_permutation(rng, n));
            e = e.entrywise_max(&other).expect("same size");
        }
        if rng.gen_bool(0.5) {
            let Some(sym) = orbit_max(e, &cyclic_monomial(rng, n)) else { continue };
            e = sym;
        }
        let xi = random_monomial(rng, n, bound.max(1));
        let Ok(conj) = e.conjugate_by_monomial(&xi) else { continue };
        if within(&conj) {
            return ExponentMatrix::validate(n, &conj.rows()).expect("generated matrix is valid");
        }
        // conjugation pushed entries out of range; sometimes fall back to the unconjugated one
        if within(&e) && rng.gen_bool(0.5) {
            return ExponentMatrix::validate(n, &e.rows()).expect("generated matrix is valid");
        }
    }
}
