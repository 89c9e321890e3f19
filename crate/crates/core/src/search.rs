//! Backtracking search over `S_n` for permutations that carry one set of
//! structural invariants (and optionally vertex types) onto another.
//!
//! A permutation `σ` is accepted when, for all `i, j, ℓ`,
//!
//! ```text
//! target[i][j][ℓ] == source[σ(i)][σ(j)][σ(ℓ)]
//! (target_types[i] + shift) ≡ source_types[σ(i)]   (mod n)   if types are given
//! ```
//!
//! and, when the cycle filter is on, every cycle of `σ` has a length sharing a
//! factor with `n`. Images are assigned position by position in increasing
//! order, and every triple whose largest index is the newly assigned position
//! is checked immediately, so a full match is only ever reached by
//! consistent prefixes. Candidates are tried in increasing order, so results
//! come out in lexicographic order of image arrays. The first position is
//! split across the rayon pool; results are merged in candidate order, so the
//! outcome does not depend on scheduling.

use num_integer::Integer;
use rayon::prelude::*;

use crate::exponent::{InvariantTensor, TypeVector};
use crate::perm::Permutation;

#[derive(Clone, Copy)]
pub(crate) struct TypeShift<'a> {
    pub source: &'a TypeVector,
    pub target: &'a TypeVector,
    pub shift: usize,
}

#[derive(Clone, Copy)]
pub(crate) struct Query<'a> {
    pub source: &'a InvariantTensor,
    pub target: &'a InvariantTensor,
    pub types: Option<TypeShift<'a>>,
    pub cycle_filter: bool,
}

/// Sorted `m_{x j x}` over `j`, which any accepted `σ` must preserve.
fn signature(m: &InvariantTensor, x: usize) -> Vec<i64> {
    let mut s: Vec<i64> = (0..m.n()).map(|j| m.get(x, j, x)).collect();
    s.sort_unstable();
    s
}

struct Searcher<'a> {
    q: Query<'a>,
    n: usize,
    /// `allowed[i]` lists the source indices `σ(i)` may take.
    allowed: Vec<Vec<usize>>,
}

impl<'a> Searcher<'a> {
    fn new(q: Query<'a>) -> Self {
        let n = q.source.n();
        assert_eq!(n, q.target.n());
        let src_sig: Vec<_> = (0..n).map(|x| signature(q.source, x)).collect();
        let tgt_sig: Vec<_> = (0..n).map(|x| signature(q.target, x)).collect();
        let allowed = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&v| {
                        tgt_sig[i] == src_sig[v]
                            && q.types.is_none_or(|t| (t.target.get(i) + t.shift) % n == t.source.get(v))
                    })
                    .collect()
            })
            .collect();
        Self { q, n, allowed }
    }

    /// Checks all triples in `[0..=k]³` that contain `k`.
    fn consistent(&self, images: &[usize], k: usize) -> bool {
        let (src, tgt) = (self.q.source, self.q.target);
        let s = |x: usize| images[x];
        for a in 0..=k {
            for b in 0..=k {
                if tgt.get(k, a, b) != src.get(s(k), s(a), s(b))
                    || tgt.get(a, k, b) != src.get(s(a), s(k), s(b))
                    || tgt.get(a, b, k) != src.get(s(a), s(b), s(k))
                {
                    return false;
                }
            }
        }
        true
    }

    fn cycles_admissible(&self, images: &[usize]) -> bool {
        if !self.q.cycle_filter {
            return true;
        }
        let p = Permutation::from_images_unchecked(images.to_vec());
        p.cycle_lengths().into_iter().all(|l| l.gcd(&self.n) > 1)
    }

    /// Depth-first extension of `images[..k]`; `visit` returns `false` to stop.
    fn extend(
        &self,
        images: &mut Vec<usize>,
        used: &mut [bool],
        visit: &mut dyn FnMut(Permutation) -> bool,
    ) -> bool {
        let k = images.len();
        if k == self.n {
            if self.cycles_admissible(images) {
                return visit(Permutation::from_images_unchecked(images.clone()));
            }
            return true;
        }
        for &v in &self.allowed[k] {
            if used[v] {
                continue;
            }
            images.push(v);
            used[v] = true;
            let keep_going = !self.consistent(images, k) || self.extend(images, used, visit);
            used[v] = false;
            images.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }

    fn min_support(
        &self,
        images: &mut Vec<usize>,
        used: &mut [bool],
        moved: usize,
        best: &mut Option<(usize, Permutation)>,
    ) {
        if best.as_ref().is_some_and(|(b, _)| moved >= *b) {
            return;
        }
        let k = images.len();
        if k == self.n {
            if self.cycles_admissible(images) {
                *best = Some((moved, Permutation::from_images_unchecked(images.clone())));
            }
            return;
        }
        let fixed_first = self.allowed[k].iter().copied().filter(|&v| v == k);
        let others = self.allowed[k].iter().copied().filter(|&v| v != k);
        for v in fixed_first.chain(others) {
            if used[v] {
                continue;
            }
            images.push(v);
            used[v] = true;
            if self.consistent(images, k) {
                self.min_support(images, used, moved + usize::from(v != k), best);
            }
            used[v] = false;
            images.pop();
        }
    }

    fn run_from(&self, first: usize, visit: &mut dyn FnMut(Permutation) -> bool) {
        let mut images = vec![first];
        let mut used = vec![false; self.n];
        used[first] = true;
        if self.consistent(&images, 0) {
            self.extend(&mut images, &mut used, visit);
        }
    }
}

/// Accepted permutation moving the fewest points. Each position tries its
/// own index first and then the others in increasing order; among witnesses
/// with equally small support the first one met in that order wins.
pub(crate) fn find_min_support(q: Query<'_>) -> Option<Permutation> {
    let s = Searcher::new(q);
    let mut best: Option<(usize, Permutation)> = None;
    let mut images = Vec::with_capacity(s.n);
    let mut used = vec![false; s.n];
    s.min_support(&mut images, &mut used, 0, &mut best);
    best.map(|(_, p)| p)
}

/// Lexicographically least accepted permutation.
pub(crate) fn find_first(q: Query<'_>) -> Option<Permutation> {
    let s = Searcher::new(q);
    s.allowed[0].par_iter().find_map_first(|&first| {
        let mut found = None;
        s.run_from(first, &mut |p| {
            found = Some(p);
            false
        });
        found
    })
}

/// All accepted permutations in lexicographic order.
pub(crate) fn find_all(q: Query<'_>) -> Vec<Permutation> {
    let s = Searcher::new(q);
    let chunks: Vec<Vec<Permutation>> = s.allowed[0]
        .par_iter()
        .map(|&first| {
            let mut out = Vec::new();
            s.run_from(first, &mut |p| {
                out.push(p);
                true
            });
            out
        })
        .collect();
    chunks.into_iter().flatten().collect()
}
