//! Permutations of `{0, .., n-1}`.
//!
//! Internally a permutation is the dense array of images. Externally it is
//! written in 1-based cycle notation with fixed points omitted, so the
//! transposition swapping the first and third index prints as `(1 3)` and the
//! identity prints as `()`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).collect() }
    }

    /// Builds a permutation from its 0-based image array.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Self { images }
    }

    /// Builds a permutation of `n` points from 1-based cycles. Cycles must be
    /// disjoint.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n {
                    return Err(Error::InvalidPermutation(format!("point {a} outside 1..={n}")));
                }
                if touched[a - 1] {
                    return Err(Error::InvalidPermutation(format!("point {a} repeated")));
                }
                touched[a - 1] = true;
                let b = cycle[(k + 1) % cycle.len()];
                images[a - 1] = b - 1;
            }
        }
        Self::from_images(images)
    }

    /// Parses cycle notation such as `(1 3)(2 4)`, `(1,2,3)`, `(123)` or `()`.
    /// A cycle written without separators is read one digit per point.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        let mut cycles = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::InvalidPermutation(text.to_string()))?;
            let close = open.find(')').ok_or_else(|| Error::InvalidPermutation(text.to_string()))?;
            let body = open[..close].trim();
            rest = open[close + 1..].trim_start();
            if body.is_empty() {
                continue;
            }
            let parse_point = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("bad point {s:?} in {text:?}")))
            };
            let cycle = if body.contains(|c: char| c.is_whitespace() || c == ',') {
                body.split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|s| !s.is_empty())
                    .map(parse_point)
                    .collect::<Result<Vec<_>>>()?
            } else {
                body.chars()
                    .map(|c| parse_point(&c.to_string()))
                    .collect::<Result<Vec<_>>>()?
            };
            cycles.push(cycle);
        }
        Self::from_cycles(n, &cycles)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Self { images: inv }
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "composing permutations of different degree");
        Self { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    /// Disjoint cycles in 0-based form, fixed points included, each starting
    /// at its least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles().iter().map(Vec::len).collect()
    }

    /// Lexicographic enumeration of all of `S_n`.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations { next: Some((0..n).collect()) }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Iterator over `S_n` in lexicographic order of image arrays.
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // standard next-permutation step
        let n = succ.len();
        if n > 1 {
            let mut i = n - 1;
            while i > 0 && succ[i - 1] >= succ[i] {
                i -= 1;
            }
            if i > 0 {
                let mut j = n - 1;
                while succ[j] <= succ[i - 1] {
                    j -= 1;
                }
                succ.swap(i - 1, j);
                succ[i..].reverse();
                self.next = Some(succ);
            }
        }
        Some(Permutation { images: current })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse() {
        let s = Permutation::parse(4, "(12)(34)").unwrap();
        assert_eq!(s.to_string(), "(1 2)(3 4)");
        assert_eq!(Permutation::parse(4, "(1 2)(3 4)").unwrap(), s);
        assert_eq!(Permutation::parse(3, "(1,3)").unwrap().images(), &[2, 1, 0]);
        assert_eq!(Permutation::parse(3, "()").unwrap(), Permutation::identity(3));
        assert_eq!(Permutation::parse(3, "").unwrap(), Permutation::identity(3));
        assert_eq!(Permutation::identity(5).to_string(), "()");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Permutation::parse(3, "(1 4)").is_err());
        assert!(Permutation::parse(3, "(1 2)(2 3)").is_err());
        assert!(Permutation::parse(3, "1 2").is_err());
        assert!(Permutation::parse(3, "(1 x)").is_err());
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn three_cycle_images() {
        // (1 2 3) sends 1 -> 2 -> 3 -> 1
        let s = Permutation::parse(3, "(123)").unwrap();
        assert_eq!(s.images(), &[1, 2, 0]);
        assert_eq!(s.inverse().to_string(), "(1 3 2)");
        assert!(s.compose(&s.inverse()).is_identity());
        assert_eq!(s.cycle_lengths(), vec![3]);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Permutation::all(0).count(), 1);
        assert_eq!(Permutation::all(1).count(), 1);
        assert_eq!(Permutation::all(4).count(), 24);
        let all: Vec<_> = Permutation::all(5).collect();
        assert_eq!(all.len(), 120);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}
