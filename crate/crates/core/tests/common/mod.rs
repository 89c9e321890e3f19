//! Brute-force oracles shared by the integration tests. None of this calls into
//! the Smith form; groups are handled as explicit element tables.
#![allow(dead_code)]

use std::collections::BTreeSet;

/// Every invariant-factor chain `d_1 | .. | d_k`, `d_i ≥ 2`, with product at
/// most `max_order`. Includes the trivial group.
pub fn all_groups(max_order: u64) -> Vec<Vec<u64>> {
    fn grow(chain: &mut Vec<u64>, order: u64, max: u64, out: &mut Vec<Vec<u64>>) {
        out.push(chain.clone());
        let start = chain.last().copied().unwrap_or(2);
        let mut d = start;
        while order * d <= max {
            if chain.last().is_none_or(|&l| d % l == 0) {
                chain.push(d);
                grow(chain, order * d, max, out);
                chain.pop();
            }
            d += 1;
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::new(), 1, max_order, &mut out);
    out
}

/// A finite abelian group as a table of elements indexed `0..order` in mixed
/// radix, with addition done coordinatewise.
pub struct Table {
    pub factors: Vec<u64>,
    pub order: usize,
}

impl Table {
    pub fn new(factors: &[u64]) -> Self {
        Self { factors: factors.to_vec(), order: factors.iter().product::<u64>() as usize }
    }

    pub fn encode(&self, coords: &[u64]) -> usize {
        coords.iter().zip(&self.factors).fold(0, |acc, (&c, &d)| acc * d as usize + (c % d) as usize)
    }

    pub fn decode(&self, mut x: usize) -> Vec<u64> {
        let mut c = vec![0; self.factors.len()];
        for (slot, &d) in c.iter_mut().zip(&self.factors).rev() {
            *slot = (x % d as usize) as u64;
            x /= d as usize;
        }
        c
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        let (a, b) = (self.decode(x), self.decode(y));
        let s: Vec<u64> = a.iter().zip(&b).zip(&self.factors).map(|((p, q), d)| (p + q) % d).collect();
        self.encode(&s)
    }

    pub fn times(&self, x: usize, k: u64) -> usize {
        let a = self.decode(x);
        let s: Vec<u64> = a.iter().zip(&self.factors).map(|(p, d)| (p * (k % d)) % d).collect();
        self.encode(&s)
    }

    /// Subgroup generated by `gens`, by closure under addition.
    pub fn span(&self, gens: &[usize]) -> Vec<bool> {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.add(x, g);
                if !member[y] {
                    member[y] = true;
                    frontier.push(y);
                }
            }
        }
        member
    }

    /// Coset index of every element modulo the subgroup `h`.
    pub fn cosets(&self, h: &[bool]) -> (Vec<usize>, usize) {
        let hs: Vec<usize> = (0..self.order).filter(|&x| h[x]).collect();
        let mut id = vec![usize::MAX; self.order];
        let mut count = 0;
        for x in 0..self.order {
            if id[x] == usize::MAX {
                for &y in &hs {
                    id[self.add(x, y)] = count;
                }
                count += 1;
            }
        }
        (id, count)
    }

    /// `#(Q / Q^m)` for `Q = G / h`, counting the cosets hit by `m·x`.
    pub fn power_index(&self, h: &[bool], m: u64) -> usize {
        let (id, count) = self.cosets(h);
        self.power_index_in(&id, count, m)
    }

    /// Same as [`Table::power_index`] for a precomputed coset table.
    pub fn power_index_in(&self, id: &[usize], count: usize, m: u64) -> usize {
        let image: BTreeSet<usize> = (0..self.order).map(|x| id[self.times(x, m)]).collect();
        count / image.len()
    }
}

/// Determinant by cofactor expansion; fine for the tiny sizes used here.
pub fn det(m: &[Vec<i128>]) -> i128 {
    let k = m.len();
    if k == 0 {
        return 1;
    }
    (0..k)
        .map(|c| {
            let minor: Vec<Vec<i128>> =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect()).collect();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            sign * m[0][c] * det(&minor)
        })
        .sum()
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Determinantal divisors `D_k = gcd of all k×k minors`, `k = 1..=min(r, c)`.
pub fn determinantal_divisors(a: &[Vec<i64>]) -> Vec<i128> {
    use itertools::Itertools;
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    (1..=rows.min(cols))
        .map(|k| {
            let mut g = 0;
            for rs in (0..rows).combinations(k) {
                for cs in (0..cols).combinations(k) {
                    let sub: Vec<Vec<i128>> = rs.iter().map(|&i| cs.iter().map(|&j| a[i][j] as i128).collect()).collect();
                    g = gcd(g, det(&sub));
                }
            }
            g
        })
        .collect()
}
