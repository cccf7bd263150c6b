//! Finite regular *-semigroups stored as tables.

use std::collections::{HashMap, HashSet, VecDeque};

use rayon::prelude::*;

use crate::error::{structure, Error, Result};
use crate::palg::ProjectionAlgebra;
use crate::report::{Report, Witness};
use crate::unionfind::UnionFind;

/// A finite semigroup with involution, given by its multiplication and star tables.
///
/// Indices run over `0..size`. The laws are not checked on construction; call
/// [`StarSemigroup::verify_star_laws`] explicitly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarSemigroup {
    size: usize,
    mul: Vec<u32>,
    star: Vec<u32>,
    labels: Option<Vec<String>>,
}

/// Projections, idempotents and the friendship pairs of a semigroup (element indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialElements {
    pub projections: Vec<usize>,
    pub idempotents: Vec<usize>,
    pub f_pairs: Vec<(usize, usize)>,
}

/// Green's classes, each numbered by first appearance in index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreenData {
    pub r_class: Vec<usize>,
    pub l_class: Vec<usize>,
    pub h_class: Vec<usize>,
    pub d_class: Vec<usize>,
}

impl GreenData {
    pub fn d_count(&self) -> usize {
        self.d_class.iter().max().map_or(0, |m| m + 1)
    }

    /// Egg-box layout of one D-class: rows are R-classes, columns L-classes,
    /// each cell the sorted H-class.
    pub fn eggbox(&self, d: usize) -> Vec<Vec<Vec<usize>>> {
        let members: Vec<usize> = (0..self.d_class.len()).filter(|&a| self.d_class[a] == d).collect();
        let mut rows: Vec<usize> = members.iter().map(|&a| self.r_class[a]).collect();
        rows.sort_unstable();
        rows.dedup();
        let mut cols: Vec<usize> = members.iter().map(|&a| self.l_class[a]).collect();
        cols.sort_unstable();
        cols.dedup();
        let mut grid = vec![vec![Vec::new(); cols.len()]; rows.len()];
        for &a in &members {
            let i = rows.binary_search(&self.r_class[a]).unwrap();
            let j = cols.binary_search(&self.l_class[a]).unwrap();
            grid[i][j].push(a);
        }
        grid
    }
}

/// A congruence given by class numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    pub class_of: Vec<usize>,
    pub class_count: usize,
}

impl Congruence {
    pub fn is_identity(&self) -> bool {
        self.class_count == self.class_of.len()
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }
}

/// The relations ≤, ≤_F and F on the projections, plus the friendship graph.
/// All indices here are element indices of `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderRelations {
    pub projections: Vec<usize>,
    pub leq: Vec<(usize, usize)>,
    pub leq_f: Vec<(usize, usize)>,
    pub f: Vec<(usize, usize)>,
    pub friendship_edges: Vec<(usize, usize)>,
}

/// The subsemigroup generated by the projections, in BFS order, each element
/// paired with a shortest tuple p1 F p2 F ... F pk multiplying to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Closure {
    pub members: Vec<(usize, Vec<usize>)>,
}

impl Closure {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn elements(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.members.iter().map(|m| m.0).collect();
        v.sort_unstable();
        v
    }
}

fn first_appearance<K: std::hash::Hash + Eq>(keys: impl Iterator<Item = K>) -> Vec<usize> {
    let mut seen = HashMap::new();
    keys.map(|k| {
        let next = seen.len();
        *seen.entry(k).or_insert(next)
    })
    .collect()
}

impl StarSemigroup {
    /// Builds a semigroup from a row-major table, checking only that every entry is in range.
    pub fn new(size: usize, mul: Vec<u32>, star: Vec<u32>, labels: Option<Vec<String>>) -> Result<Self> {
        if size == 0 {
            return structure("empty semigroup");
        }
        if mul.len() != size * size {
            return structure(format!("mul has {} entries, expected {}", mul.len(), size * size));
        }
        if star.len() != size {
            return structure(format!("star has {} entries, expected {}", star.len(), size));
        }
        if let Some(i) = mul.iter().position(|&x| x as usize >= size) {
            return structure(format!("mul[{}][{}] = {} out of range", i / size, i % size, mul[i]));
        }
        if let Some(i) = star.iter().position(|&x| x as usize >= size) {
            return structure(format!("star[{}] = {} out of range", i, star[i]));
        }
        if let Some(l) = &labels {
            if l.len() != size {
                return structure("label count differs from size");
            }
            let mut sorted: Vec<&String> = l.iter().collect();
            sorted.sort();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return structure("labels are not unique");
            }
        }
        Ok(StarSemigroup { size, mul, star, labels })
    }

    /// Tabulates `f` over all pairs, in parallel over rows.
    pub fn from_fn<F>(size: usize, f: F, star: Vec<u32>, labels: Option<Vec<String>>) -> Result<Self>
    where
        F: Fn(usize, usize) -> usize + Sync,
    {
        let mut mul = vec![0u32; size * size];
        mul.par_chunks_mut(size.max(1)).enumerate().for_each(|(a, row)| {
            for (b, cell) in row.iter_mut().enumerate() {
                *cell = f(a, b) as u32;
            }
        });
        StarSemigroup::new(size, mul, star, labels)
    }

    pub fn from_rows(mul: Vec<Vec<u32>>, star: Vec<u32>, labels: Option<Vec<String>>) -> Result<Self> {
        let size = mul.len();
        if mul.iter().any(|r| r.len() != size) {
            return structure("mul table is not square");
        }
        StarSemigroup::new(size, mul.concat(), star, labels)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b] as usize
    }

    #[inline]
    pub fn star(&self, a: usize) -> usize {
        self.star[a] as usize
    }

    pub fn mul_table(&self) -> &[u32] {
        &self.mul
    }

    pub fn star_table(&self) -> &[u32] {
        &self.star
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.mul.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn with_labels(mut self, labels: Option<Vec<String>>) -> Result<Self> {
        let s = StarSemigroup::new(self.size, std::mem::take(&mut self.mul), std::mem::take(&mut self.star), labels)?;
        Ok(s)
    }

    /// Product of a sequence of elements, left to right.
    pub fn product(&self, xs: &[usize]) -> Option<usize> {
        let (&first, rest) = xs.split_first()?;
        Some(rest.iter().fold(first, |acc, &x| self.mul(acc, x)))
    }

    /// d(a) = aa*.
    pub fn d(&self, a: usize) -> usize {
        self.mul(a, self.star(a))
    }

    /// r(a) = a*a.
    pub fn r(&self, a: usize) -> usize {
        self.mul(self.star(a), a)
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    pub fn is_projection(&self, a: usize) -> bool {
        self.is_idempotent(a) && self.star(a) == a
    }

    /// Checks associativity, (a*)* = a, (ab)* = b*a* and aa*a = a, reporting the
    /// first violation in lexicographic order of the witness.
    pub fn verify_star_laws(&self) -> Report {
        let n = self.size;
        let mut rep = Report::new();
        let assoc = (0..n).into_par_iter().find_map_first(|a| {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    let bc = self.mul(b, c);
                    let l = self.mul(ab, c);
                    let r = self.mul(a, bc);
                    if l != r {
                        return Some(Witness::new(vec![a, b, c], format!("(ab)c = {} but a(bc) = {}", l, r)));
                    }
                }
            }
            None
        });
        rep.record("associativity", assoc);
        let invol = (0..n)
            .find(|&a| self.star(self.star(a)) != a)
            .map(|a| Witness::new(vec![a], format!("(a*)* = {}", self.star(self.star(a)))));
        rep.record("(a*)* = a", invol);
        let anti = (0..n).into_par_iter().find_map_first(|a| {
            (0..n).find_map(|b| {
                let l = self.star(self.mul(a, b));
                let r = self.mul(self.star(b), self.star(a));
                (l != r).then(|| Witness::new(vec![a, b], format!("(ab)* = {} but b*a* = {}", l, r)))
            })
        });
        rep.record("(ab)* = b*a*", anti);
        let regular = (0..n)
            .find(|&a| self.mul(self.d(a), a) != a)
            .map(|a| Witness::new(vec![a], format!("aa*a = {}", self.mul(self.d(a), a))));
        rep.record("aa*a = a", regular);
        rep
    }

    pub fn projections(&self) -> Vec<usize> {
        (0..self.size).filter(|&a| self.is_projection(a)).collect()
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size).filter(|&a| self.is_idempotent(a)).collect()
    }

    /// Whether p and q are friends: p = pqp and q = qpq.
    pub fn friends(&self, p: usize, q: usize) -> bool {
        self.mul(self.mul(p, q), p) == p && self.mul(self.mul(q, p), q) == q
    }

    pub fn special_elements(&self) -> SpecialElements {
        let projections = self.projections();
        let idempotents = self.idempotents();
        let mut f_pairs = Vec::new();
        for &p in &projections {
            for &q in &projections {
                if self.friends(p, q) {
                    f_pairs.push((p, q));
                }
            }
        }
        SpecialElements { projections, idempotents, f_pairs }
    }

    pub fn green_data(&self) -> GreenData {
        let r_class = first_appearance((0..self.size).map(|a| self.d(a)));
        let l_class = first_appearance((0..self.size).map(|a| self.r(a)));
        let h_class = first_appearance((0..self.size).map(|a| (self.d(a), self.r(a))));
        let mut uf = UnionFind::new(self.size);
        let mut r_rep: HashMap<usize, usize> = HashMap::new();
        let mut l_rep: HashMap<usize, usize> = HashMap::new();
        for a in 0..self.size {
            let x = *r_rep.entry(self.d(a)).or_insert(a);
            uf.union(a, x);
            let y = *l_rep.entry(self.r(a)).or_insert(a);
            uf.union(a, y);
        }
        let d_class = first_appearance((0..self.size).map(|a| uf.find(a)));
        GreenData { r_class, l_class, h_class, d_class }
    }

    /// The projection algebra of `S`: carrier the projections in ascending index
    /// order, with qθ_p = pqp. Also returns the carrier as element indices.
    pub fn projection_algebra(&self) -> (ProjectionAlgebra, Vec<usize>) {
        let proj = self.projections();
        let pos: HashMap<usize, usize> = proj.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let k = proj.len();
        let mut theta = vec![0u32; k * k];
        for (qi, &q) in proj.iter().enumerate() {
            for (pi, &p) in proj.iter().enumerate() {
                let x = self.mul(self.mul(p, q), p);
                theta[qi * k + pi] = pos[&x] as u32;
            }
        }
        let labels = self.labels.as_ref().map(|l| proj.iter().map(|&p| l[p].clone()).collect());
        let palg = ProjectionAlgebra::new(k, theta, labels).expect("projections are closed under conjugation");
        (palg, proj)
    }

    pub fn order_relations(&self) -> OrderRelations {
        let projections = self.projections();
        let mut leq = Vec::new();
        let mut leq_f = Vec::new();
        let mut f = Vec::new();
        let mut friendship_edges = Vec::new();
        for &p in &projections {
            for &q in &projections {
                let pq = self.mul(p, q);
                if self.mul(q, pq) == p {
                    leq.push((p, q));
                }
                if self.mul(pq, p) == p {
                    leq_f.push((p, q));
                }
                if self.friends(p, q) {
                    f.push((p, q));
                    if p < q {
                        friendship_edges.push((p, q));
                    }
                }
            }
        }
        OrderRelations { projections, leq, leq_f, f, friendship_edges }
    }

    /// a ≤ b iff a = pb = bq for some projections p, q.
    pub fn element_order(&self, a: usize, b: usize) -> bool {
        let proj = self.projections();
        proj.iter().any(|&p| self.mul(p, b) == a) && proj.iter().any(|&q| self.mul(b, q) == a)
    }

    /// Whether every idempotent is a projection.
    pub fn is_inverse(&self) -> bool {
        (0..self.size).all(|a| !self.is_idempotent(a) || self.star(a) == a)
    }

    /// The map p ↦ a*pa on projections p ≤ d(a), as (p, image) pairs in ascending order.
    pub fn vartheta(&self, a: usize, proj: &[usize]) -> Vec<(usize, usize)> {
        let da = self.d(a);
        let sa = self.star(a);
        proj.iter()
            .filter(|&&p| self.mul(self.mul(da, p), da) == p)
            .map(|&p| (p, self.mul(self.mul(sa, p), a)))
            .collect()
    }

    /// μ_S: a ≡ b iff d(a) = d(b), r(a) = r(b) and the ϑ maps agree. The result is
    /// checked to be a *-congruence before being returned.
    pub fn mu_congruence(&self) -> Result<Congruence> {
        let proj = self.projections();
        let class_of = first_appearance((0..self.size).map(|a| (self.d(a), self.r(a), self.vartheta(a, &proj))));
        let class_count = class_of.iter().max().map_or(0, |m| m + 1);
        let cong = Congruence { class_of, class_count };
        let mut rep = vec![usize::MAX; class_count];
        for a in 0..self.size {
            if rep[cong.class_of[a]] == usize::MAX {
                rep[cong.class_of[a]] = a;
            }
        }
        for a in 0..self.size {
            let b = rep[cong.class_of[a]];
            if !cong.related(self.star(a), self.star(b)) {
                return Err(Error::Invariant(format!("mu not star-compatible at ({a},{b})")));
            }
            for s in 0..self.size {
                if !cong.related(self.mul(s, a), self.mul(s, b)) || !cong.related(self.mul(a, s), self.mul(b, s)) {
                    return Err(Error::Invariant(format!("mu not compatible at ({a},{b}) with {s}")));
                }
            }
        }
        Ok(cong)
    }

    /// Closure of the projections under multiplication, found by breadth-first
    /// search along friendship edges. Each factorization is re-multiplied before returning.
    pub fn projection_closure(&self) -> Result<Closure> {
        let proj = self.projections();
        let mut friends: HashMap<usize, Vec<usize>> = HashMap::new();
        for &p in &proj {
            friends.insert(p, proj.iter().copied().filter(|&q| q != p && self.friends(p, q)).collect());
        }
        // States are (element, last factor): what can follow depends on the last factor.
        let mut seen_state: HashSet<(usize, usize)> = HashSet::new();
        let mut seen = vec![false; self.size];
        let mut members: Vec<(usize, Vec<usize>)> = Vec::new();
        let mut queue: VecDeque<(usize, Vec<usize>)> = VecDeque::new();
        for &p in &proj {
            seen[p] = true;
            seen_state.insert((p, p));
            members.push((p, vec![p]));
            queue.push_back((p, vec![p]));
        }
        while let Some((x, path)) = queue.pop_front() {
            let last = *path.last().unwrap();
            for &t in &friends[&last] {
                let y = self.mul(x, t);
                if !seen_state.insert((y, t)) {
                    continue;
                }
                let mut p2 = path.clone();
                p2.push(t);
                if !seen[y] {
                    seen[y] = true;
                    members.push((y, p2.clone()));
                }
                queue.push_back((y, p2));
            }
        }
        for (x, path) in &members {
            if self.product(path) != Some(*x) || path.windows(2).any(|w| !self.friends(w[0], w[1])) {
                return Err(Error::Invariant(format!("bad factorization {:?} for {}", path, x)));
            }
        }
        Ok(Closure { members })
    }
}
