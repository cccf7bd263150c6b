//! Brute-force oracles shared by the integration tests. None of these call the
//! library routine they are used to check.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use rand::Rng;
use regstar::{ChainedProjectionGroupoid, ProjectionAlgebra, StarSemigroup, UnionFind};

/// Bell numbers from the Bell triangle.
pub fn bell(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            let y = next.last().unwrap() + x;
            next.push(y);
        }
        row = next;
    }
    row[0]
}

/// (2n-1)!!, the number of perfect matchings on 2n points.
pub fn double_factorial_odd(n: usize) -> u64 {
    (1..=n as u64).map(|k| 2 * k - 1).product()
}

pub fn associative(s: &StarSemigroup) -> Option<(usize, usize, usize)> {
    let n = s.size();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c)) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

pub fn star_laws(s: &StarSemigroup) -> bool {
    (0..s.size()).all(|a| {
        let sa = s.star(a);
        s.star(sa) == a
            && s.mul(s.mul(a, sa), a) == a
            && (0..s.size()).all(|b| s.star(s.mul(a, b)) == s.mul(s.star(b), sa))
    })
}

/// Green's relations from principal ideals: a R b iff aS¹ = bS¹, etc.
pub fn green_by_ideals(s: &StarSemigroup) -> (Vec<BTreeSet<usize>>, Vec<BTreeSet<usize>>) {
    let n = s.size();
    let right: Vec<BTreeSet<usize>> = (0..n).map(|a| std::iter::once(a).chain((0..n).map(|x| s.mul(a, x))).collect()).collect();
    let left: Vec<BTreeSet<usize>> = (0..n).map(|a| std::iter::once(a).chain((0..n).map(|x| s.mul(x, a))).collect()).collect();
    (right, left)
}

/// Principal congruence generated by (a, b), as a union-find over S.
pub fn principal_congruence(s: &StarSemigroup, a: usize, b: usize) -> Vec<usize> {
    let n = s.size();
    let mut uf = UnionFind::new(n);
    let mut pending = vec![(a, b)];
    while let Some((x, y)) = pending.pop() {
        if !uf.union(x, y) {
            continue;
        }
        for z in 0..n {
            pending.push((s.mul(x, z), s.mul(y, z)));
            pending.push((s.mul(z, x), s.mul(z, y)));
        }
    }
    (0..n).map(|x| uf.find(x)).collect()
}

/// The largest idempotent-separating congruence, found pair by pair: (a, b)
/// belongs to it iff the congruence it generates separates idempotents.
pub fn brute_force_mu(s: &StarSemigroup) -> Vec<Vec<bool>> {
    let n = s.size();
    let idem: Vec<usize> = (0..n).filter(|&e| s.mul(e, e) == e).collect();
    let mut rel = vec![vec![false; n]; n];
    for a in 0..n {
        for b in a..n {
            let c = principal_congruence(s, a, b);
            let sep = idem.iter().all(|&e| idem.iter().all(|&f| e == f || c[e] != c[f]));
            rel[a][b] = sep;
            rel[b][a] = sep;
        }
    }
    rel
}

/// The subsemigroup generated by the projections, by naive saturation.
pub fn naive_projection_closure(s: &StarSemigroup) -> BTreeSet<usize> {
    let n = s.size();
    let proj: Vec<usize> = (0..n).filter(|&p| s.mul(p, p) == p && s.star(p) == p).collect();
    let mut set: BTreeSet<usize> = proj.iter().copied().collect();
    loop {
        let add: Vec<usize> = set.iter().flat_map(|&x| proj.iter().map(move |&p| (x, p))).map(|(x, p)| s.mul(x, p)).filter(|y| !set.contains(y)).collect();
        if add.is_empty() {
            return set;
        }
        set.extend(add);
    }
}

/// Reduces by applying the two rewrite rules at randomly chosen positions.
pub fn random_order_reduce<R: Rng>(word: &[usize], rng: &mut R) -> Vec<usize> {
    let mut w = word.to_vec();
    loop {
        let mut sites = Vec::new();
        for i in 0..w.len() {
            if i + 1 < w.len() && w[i] == w[i + 1] {
                sites.push((i, 1));
            }
            if i + 2 < w.len() && w[i] == w[i + 2] {
                sites.push((i, 2));
            }
        }
        if sites.is_empty() {
            return w;
        }
        let (i, k) = sites[rng.gen_range(0..sites.len())];
        w.drain(i + 1..i + 1 + k);
    }
}

/// All paths (consecutive entries equal or friends) of length 1..=max_len.
pub fn all_paths(palg: &ProjectionAlgebra, max_len: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..palg.size()).map(|p| vec![p]).collect();
    let mut frontier = out.clone();
    for _ in 1..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            let last = *w.last().unwrap();
            for q in 0..palg.size() {
                if q == last || palg.f(last, q) {
                    let mut v = w.clone();
                    v.push(q);
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Classes of the equivalence on `words` generated by single rewrite steps
/// (p,p) ~ (p) and (p,q,p) ~ (p) that stay inside `words`.
pub fn rewrite_closure(words: &[Vec<usize>]) -> Vec<usize> {
    let index: HashMap<&Vec<usize>, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut uf = UnionFind::new(words.len());
    for (i, w) in words.iter().enumerate() {
        for j in 0..w.len() {
            for k in [1usize, 2] {
                if j + k < w.len() && w[j] == w[j + k] {
                    let mut v = w.clone();
                    v.drain(j + 1..j + 1 + k);
                    if let Some(&t) = index.get(&v) {
                        uf.union(i, t);
                    }
                }
            }
        }
    }
    (0..words.len()).map(|i| uf.find(i)).collect()
}

/// Evaluation maps on the groupoid of `t` other than its own: every assignment
/// of generators that respects inversion and restriction, found by
/// backtracking. Stops after `limit` complete assignments.
pub fn alternative_evaluations(t: &ChainedProjectionGroupoid, limit: usize) -> Vec<Vec<(usize, usize, usize)>> {
    let g = t.groupoid();
    let pa = t.palg();
    let mut edges: Vec<(usize, usize)> = t.eps_entries().iter().map(|e| (e.0, e.1)).filter(|e| e.0 != e.1).collect();
    edges.sort_by_key(|&(p, q)| (std::cmp::Reverse(pa.down_set(p).len()), p, q));

    fn force(t: &ChainedProjectionGroupoid, asg: &mut HashMap<(usize, usize), usize>, p: usize, q: usize, a: usize) -> bool {
        let g = t.groupoid();
        let pa = t.palg();
        let mut stack = vec![(p, q, a)];
        while let Some((p, q, a)) = stack.pop() {
            if let Some(&b) = asg.get(&(p, q)) {
                if b != a {
                    return false;
                }
                continue;
            }
            asg.insert((p, q), a);
            stack.push((q, p, g.inv(a)));
            for r in pa.down_set(p) {
                match g.restrict_left(r, a) {
                    Some(x) => stack.push((r, pa.theta(r, q), x)),
                    None => return false,
                }
            }
        }
        true
    }

    fn dfs(
        t: &ChainedProjectionGroupoid,
        edges: &[(usize, usize)],
        i: usize,
        asg: HashMap<(usize, usize), usize>,
        out: &mut Vec<Vec<(usize, usize, usize)>>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if i == edges.len() {
            let mut v: Vec<(usize, usize, usize)> = asg.iter().map(|(&(p, q), &a)| (p, q, a)).collect();
            v.sort_unstable();
            if v != t.eps_entries() {
                out.push(v);
            }
            return;
        }
        let (p, q) = edges[i];
        if asg.contains_key(&(p, q)) {
            dfs(t, edges, i + 1, asg, out, limit);
            return;
        }
        for a in t.groupoid().hom(p, q) {
            let mut next = asg.clone();
            if force(t, &mut next, p, q, a) {
                dfs(t, edges, i + 1, next, out, limit);
            }
        }
    }

    let mut base = HashMap::new();
    for p in 0..pa.size() {
        base.insert((p, p), g.ident(p));
    }
    let mut out = Vec::new();
    dfs(t, &edges, 0, base, &mut out, limit);
    out
}

/// Distinct unordered friend pairs.
pub fn friend_edge_count(palg: &ProjectionAlgebra) -> usize {
    let mut set = HashSet::new();
    for p in 0..palg.size() {
        for q in 0..palg.size() {
            if p != q && palg.f(p, q) {
                set.insert((p.min(q), p.max(q)));
            }
        }
    }
    set.len()
}
