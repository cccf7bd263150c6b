//! Factories: adjacency semigroups, Rees 0-matrix *-semigroups and F_P.

use std::collections::HashMap;

use rand::Rng;

use crate::error::{structure, Result};
use crate::palg::ProjectionAlgebra;
use crate::semigroup::StarSemigroup;

/// An undirected graph; loops are implied at every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    vertices: usize,
    adj: Vec<bool>,
}

impl SimpleGraph {
    /// Edges are unordered pairs; loops in the list are accepted and ignored.
    pub fn new(vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![false; vertices * vertices];
        for v in 0..vertices {
            adj[v * vertices + v] = true;
        }
        for &(a, b) in edges {
            if a >= vertices || b >= vertices {
                return structure(format!("edge ({}, {}) out of range", a, b));
            }
            adj[a * vertices + b] = true;
            adj[b * vertices + a] = true;
        }
        Ok(SimpleGraph { vertices, adj })
    }

    /// From a full adjacency matrix, which must be symmetric.
    pub fn from_matrix(m: &[Vec<bool>]) -> Result<Self> {
        let n = m.len();
        let mut edges = Vec::new();
        for (a, row) in m.iter().enumerate() {
            if row.len() != n {
                return structure("adjacency matrix is not square");
            }
            for (b, &x) in row.iter().enumerate() {
                if x != m[b][a] {
                    return structure(format!("asymmetric edge ({}, {})", a, b));
                }
                if x && a < b {
                    edges.push((a, b));
                }
            }
        }
        SimpleGraph::new(n, &edges)
    }

    pub fn discrete(n: usize) -> Self {
        SimpleGraph::new(n, &[]).unwrap()
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        SimpleGraph::new(n, &edges).unwrap()
    }

    /// Every graph on `n` labelled vertices, indexed by edge bitmask.
    pub fn all(n: usize) -> Vec<SimpleGraph> {
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        (0u64..1 << slots.len())
            .map(|mask| {
                let edges: Vec<_> = slots.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
                SimpleGraph::new(n, &edges).unwrap()
            })
            .collect()
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a * self.vertices + b]
    }

    /// Non-loop edges a < b.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertices;
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|&(a, b)| self.adjacent(a, b)).collect()
    }
}

/// A finite group given by its table, identity at index 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    size: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl Group {
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return structure("group table is not square and nonempty");
        }
        let mul = rows.concat();
        if mul.iter().any(|&x| x as usize >= n) {
            return structure("group table entry out of range");
        }
        let m = |a: usize, b: usize| mul[a * n + b] as usize;
        if (0..n).any(|a| m(0, a) != a || m(a, 0) != a) {
            return structure("index 0 is not the identity");
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return structure(format!("group table not associative at ({a},{b},{c})"));
                    }
                }
            }
        }
        let mut inv = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| m(a, b) == 0 && m(b, a) == 0) {
                Some(b) => inv.push(b as u32),
                None => return structure(format!("element {} has no inverse", a)),
            }
        }
        Ok(Group { size: n, mul, inv })
    }

    pub fn cyclic(k: usize) -> Self {
        Group::from_rows((0..k).map(|a| (0..k).map(|b| ((a + b) % k) as u32).collect()).collect()).unwrap()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.mul.chunks(self.size).map(|r| r.to_vec()).collect()
    }
}

/// Sandwich matrix over a group with zero: `entries[p][q]` is m_pq, `None` for 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandwichMatrix {
    group: Group,
    entries: Vec<Vec<Option<usize>>>,
}

impl SandwichMatrix {
    /// Requires m_pp = 1 and m_pq = m_qp⁻¹ (with 0⁻¹ = 0).
    pub fn new(group: Group, entries: Vec<Vec<Option<usize>>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return structure("empty index set");
        }
        for (p, row) in entries.iter().enumerate() {
            if row.len() != n {
                return structure("sandwich matrix is not square");
            }
            if row[p] != Some(0) {
                return structure(format!("diagonal entry m[{p}][{p}] is not the identity"));
            }
            for (q, &x) in row.iter().enumerate() {
                if x.is_some_and(|g| g >= group.size) {
                    return structure(format!("entry m[{p}][{q}] out of range"));
                }
                if x != entries[q][p].map(|g| group.inv(g)) {
                    return structure(format!("entry m[{p}][{q}] is not the inverse of m[{q}][{p}]"));
                }
            }
        }
        Ok(SandwichMatrix { group, entries })
    }

    /// The adjacency matrix of a graph over the trivial group.
    pub fn from_graph(g: &SimpleGraph) -> Self {
        let n = g.vertices();
        let entries = (0..n).map(|p| (0..n).map(|q| g.adjacent(p, q).then_some(0)).collect()).collect();
        SandwichMatrix::new(Group::cyclic(1), entries).unwrap()
    }

    /// Each off-diagonal pair p < q is zero with probability `zero_prob`, otherwise a
    /// uniform group element; m_qp is then forced to its inverse.
    pub fn random<R: Rng>(points: usize, group: Group, zero_prob: f64, rng: &mut R) -> Self {
        let mut entries = vec![vec![None; points]; points];
        for p in 0..points {
            entries[p][p] = Some(0);
            for q in p + 1..points {
                if !rng.gen_bool(zero_prob) {
                    let g = rng.gen_range(0..group.size());
                    entries[p][q] = Some(g);
                    entries[q][p] = Some(group.inv(g));
                }
            }
        }
        SandwichMatrix::new(group, entries).unwrap()
    }

    pub fn points(&self) -> usize {
        self.entries.len()
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn entry(&self, p: usize, q: usize) -> Option<usize> {
        self.entries[p][q]
    }

    pub fn entries(&self) -> &[Vec<Option<usize>>] {
        &self.entries
    }

    /// Positions of the nonzero entries.
    pub fn pattern(&self) -> Vec<Vec<bool>> {
        self.entries.iter().map(|r| r.iter().map(Option::is_some).collect()).collect()
    }

    /// Index of (p, g, q) in the Rees semigroup; 0 is the zero.
    pub fn index(&self, p: usize, g: usize, q: usize) -> usize {
        1 + (p * self.group.size() + g) * self.points() + q
    }

    pub fn coords(&self, x: usize) -> Option<(usize, usize, usize)> {
        if x == 0 {
            return None;
        }
        let n = self.points();
        let y = x - 1;
        Some((y / n / self.group.size(), y / n % self.group.size(), y % n))
    }
}

/// M⁰(P, G, M) with (p,g,q)(r,h,s) = (p, g m_qr h, s) or 0, and (p,g,q)* = (q,g⁻¹,p).
pub fn rees_semigroup(m: &SandwichMatrix) -> StarSemigroup {
    let n = m.points();
    let gs = m.group().size();
    let size = 1 + n * gs * n;
    let g = m.group();
    let mut star = vec![0u32; size];
    let mut labels = vec!["0".to_string(); size];
    for x in 1..size {
        let (p, a, q) = m.coords(x).unwrap();
        star[x] = m.index(q, g.inv(a), p) as u32;
        labels[x] = if gs == 1 { format!("({},{})", p, q) } else { format!("({},{},{})", p, a, q) };
    }
    let f = |x: usize, y: usize| match (m.coords(x), m.coords(y)) {
        (Some((p, a, q)), Some((r, b, s))) => match m.entry(q, r) {
            Some(c) => m.index(p, g.mul(g.mul(a, c), b), s),
            None => 0,
        },
        _ => 0,
    };
    StarSemigroup::from_fn(size, f, star, Some(labels)).unwrap()
}

/// A(Γ): carrier (P×P) ∪ {0} with (p,q)(r,s) = (p,s) if q and r are adjacent.
/// Element (p,q) has index 1 + p·|P| + q.
pub fn adjacency_semigroup(g: &SimpleGraph) -> StarSemigroup {
    let n = g.vertices();
    let size = 1 + n * n;
    let coords = |x: usize| (x > 0).then(|| ((x - 1) / n, (x - 1) % n));
    let mut star = vec![0u32; size];
    let mut labels = vec!["0".to_string(); size];
    for x in 1..size {
        let (p, q) = coords(x).unwrap();
        star[x] = (1 + q * n + p) as u32;
        labels[x] = format!("({},{})", p, q);
    }
    let f = |x: usize, y: usize| match (coords(x), coords(y)) {
        (Some((p, q)), Some((r, s))) if g.adjacent(q, r) => 1 + p * n + s,
        _ => 0,
    };
    StarSemigroup::from_fn(size, f, star, Some(labels)).unwrap()
}

/// F_P together with its elements as transformation pairs and the index of
/// (θ_p, θ_p) for each p.
#[derive(Debug, Clone)]
pub struct FpSemigroup {
    pub semigroup: StarSemigroup,
    pub pairs: Vec<(Vec<u32>, Vec<u32>)>,
    pub generators: Vec<usize>,
}

/// Left-to-right composition: apply `x`, then `u`.
fn compose(x: &[u32], u: &[u32]) -> Vec<u32> {
    x.iter().map(|&i| u[i as usize]).collect()
}

/// The subsemigroup of T_P × T_P^op generated by the pairs (θ_p, θ_p), with
/// (x,y)(u,v) = (xu, vy) and (x,y)* = (y,x). Indices follow breadth-first discovery.
pub fn fp_semigroup(palg: &ProjectionAlgebra) -> FpSemigroup {
    let k = palg.size();
    let gens: Vec<Vec<u32>> = (0..k).map(|p| palg.theta_map(p).into_iter().map(|x| x as u32).collect()).collect();
    let mut pairs: Vec<(Vec<u32>, Vec<u32>)> = Vec::new();
    let mut index: HashMap<(Vec<u32>, Vec<u32>), usize> = HashMap::new();
    let mut generators = Vec::with_capacity(k);
    for g in &gens {
        let key = (g.clone(), g.clone());
        let next = pairs.len();
        let i = *index.entry(key.clone()).or_insert(next);
        if i == next {
            pairs.push(key);
        }
        generators.push(i);
    }
    let mut head = 0;
    while head < pairs.len() {
        let (x, y) = pairs[head].clone();
        for g in &gens {
            let key = (compose(&x, g), compose(g, &y));
            if !index.contains_key(&key) {
                index.insert(key.clone(), pairs.len());
                pairs.push(key);
            }
        }
        head += 1;
    }
    let size = pairs.len();
    let star = pairs.iter().map(|(x, y)| index[&(y.clone(), x.clone())] as u32).collect();
    let labels: Vec<String> = (0..size)
        .map(|i| match generators.iter().position(|&g| g == i) {
            Some(p) => palg.label(p),
            None => format!("s{}", i),
        })
        .collect();
    let f = |a: usize, b: usize| {
        let (x, y) = &pairs[a];
        let (u, v) = &pairs[b];
        index[&(compose(x, u), compose(v, y))]
    };
    let semigroup = StarSemigroup::from_fn(size, f, star, Some(labels)).unwrap();
    FpSemigroup { semigroup, pairs, generators }
}
