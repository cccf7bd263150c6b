//! Partition monoids.
//!
//! A partition of degree n lives on the points `0..2n`: upper point i is `i`,
//! lower point i' is `n + i`. Internally a partition is its restricted growth
//! string, so equality is structural and `Ord` is restricted-growth order.

use std::collections::HashMap;
use std::fmt;

use crate::error::{domain, structure, Error, Result};
use crate::semigroup::StarSemigroup;
use crate::unionfind::UnionFind;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    n: usize,
    rgs: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionStats {
    /// Upper points (0-based) lying in a transversal.
    pub dom: Vec<usize>,
    /// Lower points (0-based, so i' is reported as i) lying in a transversal.
    pub codom: Vec<usize>,
    pub ker: Vec<Vec<usize>>,
    pub coker: Vec<Vec<usize>>,
    pub rank: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Full,
    Brauer,
}

/// Canonical form of a labelling of points: relabel by first appearance.
fn canonical(labels: impl Iterator<Item = usize>) -> Vec<u32> {
    let mut map: HashMap<usize, u32> = HashMap::new();
    labels
        .map(|l| {
            let next = map.len() as u32;
            *map.entry(l).or_insert(next)
        })
        .collect()
}

impl Partition {
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let mut label = vec![usize::MAX; 2 * n];
        for (i, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return structure("empty block");
            }
            for &x in b {
                if x >= 2 * n {
                    return structure(format!("point {} out of range for degree {}", x, n));
                }
                if label[x] != usize::MAX {
                    return structure(format!("point {} appears twice", x));
                }
                label[x] = i;
            }
        }
        if let Some(x) = label.iter().position(|&l| l == usize::MAX) {
            return structure(format!("point {} is not covered", x));
        }
        Ok(Partition { n, rgs: canonical(label.into_iter()) })
    }

    fn from_labels(n: usize, labels: impl Iterator<Item = usize>) -> Self {
        Partition { n, rgs: canonical(labels) }
    }

    pub fn identity(n: usize) -> Self {
        Partition::from_labels(n, (0..2 * n).map(|x| x % n.max(1)))
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn rgs(&self) -> &[u32] {
        &self.rgs
    }

    pub fn block_count(&self) -> usize {
        self.rgs.iter().max().map_or(0, |&m| m as usize + 1)
    }

    /// Blocks as sorted point lists, ordered by minimum element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.block_count()];
        for (x, &b) in self.rgs.iter().enumerate() {
            out[b as usize].push(x);
        }
        out
    }

    pub fn multiply(&self, other: &Partition) -> Result<Partition> {
        if self.n != other.n {
            return domain(format!("degree mismatch {} vs {}", self.n, other.n));
        }
        Ok(self.mul_unchecked(other))
    }

    /// Product graph on 3n nodes: top `0..n`, middle `n..2n`, bottom `2n..3n`.
    fn mul_unchecked(&self, other: &Partition) -> Partition {
        let n = self.n;
        let mut uf = UnionFind::new(3 * n);
        let mut first: Vec<usize> = vec![usize::MAX; 2 * n];
        for (x, &b) in self.rgs.iter().enumerate() {
            let f = &mut first[b as usize];
            if *f == usize::MAX {
                *f = x;
            } else {
                uf.union(*f, x);
            }
        }
        first.iter_mut().for_each(|f| *f = usize::MAX);
        for (x, &b) in other.rgs.iter().enumerate() {
            let node = x + n;
            let f = &mut first[b as usize];
            if *f == usize::MAX {
                *f = node;
            } else {
                uf.union(*f, node);
            }
        }
        let labels: Vec<usize> = (0..n).chain(2 * n..3 * n).map(|v| uf.find(v)).collect();
        Partition::from_labels(n, labels.into_iter())
    }

    pub fn star(&self) -> Partition {
        let n = self.n;
        Partition::from_labels(n, (0..2 * n).map(|x| self.rgs[(x + n) % (2 * n)] as usize))
    }

    pub fn is_projection(&self) -> bool {
        let sq = self.mul_unchecked(self);
        sq == *self && self.star() == *self
    }

    pub fn stats(&self) -> PartitionStats {
        let n = self.n;
        let blocks = self.blocks();
        let mut dom = Vec::new();
        let mut codom = Vec::new();
        let mut ker = Vec::new();
        let mut coker = Vec::new();
        let mut rank = 0;
        for b in &blocks {
            let up: Vec<usize> = b.iter().copied().filter(|&x| x < n).collect();
            let low: Vec<usize> = b.iter().copied().filter(|&x| x >= n).map(|x| x - n).collect();
            if !up.is_empty() && !low.is_empty() {
                rank += 1;
                dom.extend(&up);
                codom.extend(&low);
            }
            if !up.is_empty() {
                ker.push(up);
            }
            if !low.is_empty() {
                coker.push(low);
            }
        }
        dom.sort_unstable();
        codom.sort_unstable();
        coker.sort();
        PartitionStats { dom, codom, ker, coker, rank }
    }

    pub fn rank(&self) -> usize {
        self.stats().rank
    }

    /// π_i: i and i' are singletons, every other j is joined to j'.
    pub fn pi(n: usize, i: usize) -> Partition {
        Partition::from_labels(n, (0..2 * n).map(|x| if x % n == i { x + n } else { x % n }))
    }

    /// π_{jk}: the block {j, k, j', k'}, every other point joined to its dash.
    pub fn pi_pair(n: usize, j: usize, k: usize) -> Partition {
        Partition::from_labels(n, (0..2 * n).map(|x| if x % n == k { j } else { x % n }))
    }

    /// Parses the 1-based pretty form, e.g. `{1,2,3,1'},{4,4',5',6'},{5},{6},{2',3'}`.
    pub fn parse(n: usize, s: &str) -> Result<Partition> {
        let mut blocks = Vec::new();
        for part in s.split('}') {
            let part = part.trim().trim_start_matches(',').trim().trim_start_matches('{');
            if part.trim().is_empty() {
                continue;
            }
            let mut block = Vec::new();
            for tok in part.split(',') {
                let tok = tok.trim();
                let (num, lower) = match tok.strip_suffix('\'') {
                    Some(t) => (t, true),
                    None => (tok, false),
                };
                let i: usize = num.parse().map_err(|_| Error::Structure(format!("bad point '{}'", tok)))?;
                if i == 0 || i > n {
                    return structure(format!("point {} out of range", tok));
                }
                block.push(if lower { n + i - 1 } else { i - 1 });
            }
            blocks.push(block);
        }
        Partition::from_blocks(n, &blocks)
    }

    pub fn enumerate(n: usize) -> Vec<Partition> {
        let m = 2 * n;
        let mut out = Vec::new();
        let mut rgs = vec![0u32; m];
        fn rec(i: usize, max: u32, rgs: &mut Vec<u32>, n: usize, out: &mut Vec<Partition>) {
            if i == rgs.len() {
                out.push(Partition { n, rgs: rgs.clone() });
                return;
            }
            for v in 0..=max + 1 {
                rgs[i] = v;
                rec(i + 1, max.max(v), rgs, n, out);
            }
        }
        if m == 0 {
            return vec![Partition { n, rgs }];
        }
        rec(1, 0, &mut rgs, n, &mut out);
        out
    }

    pub fn enumerate_brauer(n: usize) -> Vec<Partition> {
        Partition::enumerate(n).into_iter().filter(|p| p.blocks().iter().all(|b| b.len() == 2)).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        let parts: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| {
                let pts: Vec<String> = b
                    .iter()
                    .map(|&x| if x < n { (x + 1).to_string() } else { format!("{}'", x - n + 1) })
                    .collect();
                format!("{{{}}}", pts.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

pub const DEFAULT_FULL_BOUND: usize = 4;
pub const DEFAULT_BRAUER_BOUND: usize = 6;

/// The full partition monoid or Brauer monoid of degree n as a table, with the
/// element list in restricted-growth order.
pub fn partition_monoid(n: usize, family: Family, bound: Option<usize>) -> Result<(StarSemigroup, Vec<Partition>)> {
    let limit = bound.unwrap_or(match family {
        Family::Full => DEFAULT_FULL_BOUND,
        Family::Brauer => DEFAULT_BRAUER_BOUND,
    });
    if n > limit {
        return Err(Error::Bound(format!("degree {} exceeds bound {}", n, limit)));
    }
    let elems = match family {
        Family::Full => Partition::enumerate(n),
        Family::Brauer => Partition::enumerate_brauer(n),
    };
    let index: HashMap<&Partition, usize> = elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let star = elems.iter().map(|p| index[&p.star()] as u32).collect();
    let labels = elems.iter().map(|p| p.to_string()).collect();
    let s = StarSemigroup::from_fn(
        elems.len(),
        |a, b| index[&elems[a].mul_unchecked(&elems[b])],
        star,
        Some(labels),
    )?;
    Ok((s, elems))
}

/// The degree-4 data showing that the linked-pair hypothesis of the coherence
/// axiom cannot be replaced by the four consequences LP1 to LP4.
#[derive(Debug, Clone)]
pub struct G2PrimeCounterexample {
    pub b: Partition,
    pub e: Partition,
    pub e1: Partition,
    pub e2: Partition,
    pub f: Partition,
    pub f1: Partition,
    pub f2: Partition,
    /// LP1 to LP4 in order.
    pub lp: [bool; 4],
    pub lhs: Partition,
    pub rhs: Partition,
    pub linked: bool,
}

impl G2PrimeCounterexample {
    pub fn new() -> Self {
        let n = 4;
        let b = Partition::identity(n);
        let e = Partition::parse(n, "{1,2},{1',2'},{3,3'},{4,4'}").unwrap();
        let e2 = Partition::parse(n, "{1,3},{1',3'},{2,2'},{4,4'}").unwrap();
        let f = Partition::parse(n, "{1,4},{1',4'},{2,2'},{3,3'}").unwrap();
        let (e1, f1, f2) = (e.clone(), e.clone(), e2.clone());
        let m = |xs: &[&Partition]| xs[1..].iter().fold(xs[0].clone(), |acc, x| acc.mul_unchecked(x));
        let q = m(&[&b, &b.star()]);
        let r = m(&[&b.star(), &b]);
        let leq = |x: &Partition, y: &Partition| m(&[y, x, y]) == *x;
        let leq_f = |x: &Partition, y: &Partition| m(&[x, y, x]) == *x;
        let fr = |x: &Partition, y: &Partition| leq_f(x, y) && leq_f(y, x);
        let lp1 = leq_f(&e, &q) && leq_f(&f, &r);
        let lp2 = [&e1, &e2].iter().all(|x| leq(x, &q)) && [&f1, &f2].iter().all(|x| leq(x, &r));
        let lp3 = [&e1, &e2].iter().all(|x| fr(&e, x)) && [&f1, &f2].iter().all(|x| fr(&f, x));
        let lp4 = m(&[&e1, &b]) == m(&[&b, &f1]) && m(&[&e2, &b]) == m(&[&b, &f2]);
        let lhs = m(&[&e, &e1, &b, &f1, &f]);
        let rhs = m(&[&e, &e2, &b, &f2, &f]);
        // f = eΘ_bθ_f and e = fΘ_{b*}θ_e, with xΘ_b = b*xb and xθ_f = fxf.
        let bs = b.star();
        let linked = m(&[&f, &bs, &e, &b, &f]) == f && m(&[&e, &b, &f, &bs, &e]) == e;
        G2PrimeCounterexample { b, e, e1, e2, f, f1, f2, lp: [lp1, lp2, lp3, lp4], lhs, rhs, linked }
    }
}

impl Default for G2PrimeCounterexample {
    fn default() -> Self {
        G2PrimeCounterexample::new()
    }
}
