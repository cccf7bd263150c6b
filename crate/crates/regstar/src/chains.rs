//! P-paths and P-chains.
//!
//! A chain is stored as its fully reduced word: no entry repeated in place and
//! no pattern p, q, p. The chain groupoid is free on the non-loop friendship
//! edges, so two paths are equivalent exactly when their reduced words agree.

use rand::Rng;

use crate::error::{domain, Error, Result};
use crate::palg::ProjectionAlgebra;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain(Vec<usize>);

/// Checks that consecutive entries are friends.
pub fn validate_path(palg: &ProjectionAlgebra, path: &[usize]) -> Result<()> {
    if path.is_empty() {
        return domain("empty path");
    }
    if let Some(&x) = path.iter().find(|&&x| x >= palg.size()) {
        return domain(format!("projection {} out of range", x));
    }
    match path.windows(2).position(|w| !palg.f(w[0], w[1])) {
        Some(i) => Err(Error::Domain(format!("entries {} and {} at position {} are not friends", path[i], path[i + 1], i))),
        None => Ok(()),
    }
}

/// Free reduction with a stack: drop (p, p) to (p) and (p, q, p) to (p).
pub fn reduce_word(path: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(path.len());
    for &x in path {
        if out.last() == Some(&x) {
            continue;
        }
        if out.len() >= 2 && out[out.len() - 2] == x {
            out.pop();
            continue;
        }
        out.push(x);
    }
    out
}

pub fn reduce(palg: &ProjectionAlgebra, path: &[usize]) -> Result<Chain> {
    validate_path(palg, path)?;
    Ok(Chain(reduce_word(path)))
}

/// Left restriction of a path, before reduction: q1 = q and qi = q(i-1)θ_pi.
pub fn restrict_path_left(palg: &ProjectionAlgebra, q: usize, path: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(path.len());
    let mut cur = q;
    for (i, &p) in path.iter().enumerate() {
        if i > 0 {
            cur = palg.theta(cur, p);
        }
        out.push(cur);
    }
    out
}

/// Right restriction of a path, before reduction: qi = qθ_pk ... θ_pi.
pub fn restrict_path_right(palg: &ProjectionAlgebra, q: usize, path: &[usize]) -> Vec<usize> {
    let rev: Vec<usize> = path.iter().rev().copied().collect();
    let mut out = restrict_path_left(palg, q, &rev);
    out.reverse();
    out
}

/// A random walk of `len` entries along friendship edges, loops allowed.
pub fn random_path<R: Rng>(palg: &ProjectionAlgebra, len: usize, rng: &mut R) -> Vec<usize> {
    let mut path = vec![rng.gen_range(0..palg.size())];
    while path.len() < len {
        let last = *path.last().unwrap();
        let mut nbrs = palg.friends_of(last);
        nbrs.push(last);
        path.push(nbrs[rng.gen_range(0..nbrs.len())]);
    }
    path
}

impl Chain {
    /// The trivial chain [p].
    pub fn object(p: usize) -> Self {
        Chain(vec![p])
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dom(&self) -> usize {
        self.0[0]
    }

    pub fn cod(&self) -> usize {
        *self.0.last().unwrap()
    }

    pub fn compose(&self, other: &Chain) -> Result<Chain> {
        if self.cod() != other.dom() {
            return domain(format!("r = {} but d = {}", self.cod(), other.dom()));
        }
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0[1..]);
        Ok(Chain(reduce_word(&w)))
    }

    pub fn invert(&self) -> Chain {
        Chain(self.0.iter().rev().copied().collect())
    }

    /// _q⇂c, requiring q ≤ d(c).
    pub fn restrict_left(&self, palg: &ProjectionAlgebra, q: usize) -> Result<Chain> {
        if !palg.leq(q, self.dom()) {
            return domain(format!("{} is not below d = {}", q, self.dom()));
        }
        Ok(Chain(reduce_word(&restrict_path_left(palg, q, &self.0))))
    }

    /// c↾_q, requiring q ≤ r(c).
    pub fn restrict_right(&self, palg: &ProjectionAlgebra, q: usize) -> Result<Chain> {
        if !palg.leq(q, self.cod()) {
            return domain(format!("{} is not below r = {}", q, self.cod()));
        }
        Ok(Chain(reduce_word(&restrict_path_right(palg, q, &self.0))))
    }
}
