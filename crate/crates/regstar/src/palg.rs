//! Abstract projection algebras.
//!
//! The table convention is fixed once here: `theta(q, p)` is qθ_p, the image of
//! `q` under the operation indexed by `p`. Maps compose left to right.

use crate::error::{structure, Result};
use crate::report::{Report, Witness};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionAlgebra {
    size: usize,
    theta: Vec<u32>,
    labels: Option<Vec<String>>,
}

/// ≤, ≤_F and F as boolean matrices, plus the partial meet given by the
/// criterion pθ_q = qθ_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relations {
    pub size: usize,
    pub leq: Vec<bool>,
    pub leq_f: Vec<bool>,
    pub f: Vec<bool>,
    pub meet: Vec<Option<usize>>,
    pub is_meet_semilattice: bool,
}

impl Relations {
    pub fn leq(&self, p: usize, q: usize) -> bool {
        self.leq[p * self.size + q]
    }

    pub fn leq_f(&self, p: usize, q: usize) -> bool {
        self.leq_f[p * self.size + q]
    }

    pub fn f(&self, p: usize, q: usize) -> bool {
        self.f[p * self.size + q]
    }

    pub fn meet(&self, p: usize, q: usize) -> Option<usize> {
        self.meet[p * self.size + q]
    }

    /// Covering pairs (p, q) with p < q and nothing strictly between.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        let n = self.size;
        let lt = |a: usize, b: usize| a != b && self.leq(a, b);
        let mut out = Vec::new();
        for p in 0..n {
            for q in 0..n {
                if lt(p, q) && !(0..n).any(|r| lt(p, r) && lt(r, q)) {
                    out.push((p, q));
                }
            }
        }
        out
    }

    /// Undirected F-edges p < q.
    pub fn friendship_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for p in 0..self.size {
            for q in p + 1..self.size {
                if self.f(p, q) {
                    out.push((p, q));
                }
            }
        }
        out
    }
}

impl ProjectionAlgebra {
    /// `theta` is row-major: `theta[q * size + p]` = qθ_p.
    pub fn new(size: usize, theta: Vec<u32>, labels: Option<Vec<String>>) -> Result<Self> {
        if size == 0 {
            return structure("empty projection algebra");
        }
        if theta.len() != size * size {
            return structure(format!("theta has {} entries, expected {}", theta.len(), size * size));
        }
        if let Some(i) = theta.iter().position(|&x| x as usize >= size) {
            return structure(format!("theta[{}][{}] = {} out of range", i / size, i % size, theta[i]));
        }
        if labels.as_ref().is_some_and(|l| l.len() != size) {
            return structure("label count differs from size");
        }
        Ok(ProjectionAlgebra { size, theta, labels })
    }

    pub fn from_rows(rows: Vec<Vec<u32>>, labels: Option<Vec<String>>) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return structure("theta table is not square");
        }
        ProjectionAlgebra::new(size, rows.concat(), labels)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// qθ_p.
    #[inline]
    pub fn theta(&self, q: usize, p: usize) -> usize {
        self.theta[q * self.size + p] as usize
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.theta.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    pub fn table(&self) -> &[u32] {
        &self.theta
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, p: usize) -> String {
        match &self.labels {
            Some(l) => l[p].clone(),
            None => p.to_string(),
        }
    }

    /// θ_p as a transformation of `0..size`.
    pub fn theta_map(&self, p: usize) -> Vec<usize> {
        (0..self.size).map(|q| self.theta(q, p)).collect()
    }

    /// Applies θ_{p1} θ_{p2} ... in order.
    pub fn apply(&self, q: usize, ps: &[usize]) -> usize {
        ps.iter().fold(q, |x, &p| self.theta(x, p))
    }

    /// p ≤ q iff p = pθ_q.
    pub fn leq(&self, p: usize, q: usize) -> bool {
        self.theta(p, q) == p
    }

    /// p ≤_F q iff p = qθ_p.
    pub fn leq_f(&self, p: usize, q: usize) -> bool {
        self.theta(q, p) == p
    }

    pub fn f(&self, p: usize, q: usize) -> bool {
        self.leq_f(p, q) && self.leq_f(q, p)
    }

    pub fn down_set(&self, p: usize) -> Vec<usize> {
        (0..self.size).filter(|&q| self.leq(q, p)).collect()
    }

    /// F-neighbours of p other than p itself.
    pub fn friends_of(&self, p: usize) -> Vec<usize> {
        (0..self.size).filter(|&q| q != p && self.f(p, q)).collect()
    }

    pub fn verify_axioms(&self) -> Report {
        let n = self.size;
        let mut rep = Report::new();
        let t = |q: usize, p: usize| self.theta(q, p);
        rep.record(
            "P1",
            (0..n).find(|&p| t(p, p) != p).map(|p| Witness::new(vec![p], format!("pθ_p = {}", t(p, p)))),
        );
        let p2 = pairs(n).find(|&(p, q)| t(t(q, p), p) != t(q, p)).map(|(p, q)| {
            Witness::new(vec![p, q], format!("qθ_pθ_p = {} but qθ_p = {}", t(t(q, p), p), t(q, p)))
        });
        rep.record("P2", p2);
        let p3 = pairs(n).find(|&(p, q)| t(t(p, q), p) != t(q, p)).map(|(p, q)| {
            Witness::new(vec![p, q], format!("pθ_qθ_p = {} but qθ_p = {}", t(t(p, q), p), t(q, p)))
        });
        rep.record("P3", p3);
        let p4 = triples(n)
            .find(|&(p, q, r)| t(t(t(r, p), q), p) != t(r, t(q, p)))
            .map(|(p, q, r)| {
                Witness::new(
                    vec![p, q, r],
                    format!("rθ_pθ_qθ_p = {} but rθ_(qθ_p) = {}", t(t(t(r, p), q), p), t(r, t(q, p))),
                )
            });
        rep.record("P4", p4);
        let p5 = triples(n)
            .find(|&(p, q, r)| t(t(t(t(r, p), q), p), q) != t(t(r, p), q))
            .map(|(p, q, r)| {
                Witness::new(
                    vec![p, q, r],
                    format!("rθ_pθ_qθ_pθ_q = {} but rθ_pθ_q = {}", t(t(t(t(r, p), q), p), q), t(t(r, p), q)),
                )
            });
        rep.record("P5", p5);
        rep
    }

    /// Greatest lower bound of p and q in (P, ≤), found by direct search.
    pub fn order_meet(&self, p: usize, q: usize) -> Option<usize> {
        let lower: Vec<usize> = (0..self.size).filter(|&r| self.leq(r, p) && self.leq(r, q)).collect();
        lower.iter().copied().find(|&m| lower.iter().all(|&r| self.leq(r, m)))
    }

    pub fn relations(&self) -> Relations {
        let n = self.size;
        let mut leq = vec![false; n * n];
        let mut leq_f = vec![false; n * n];
        let mut f = vec![false; n * n];
        let mut meet = vec![None; n * n];
        let mut semilattice = true;
        for p in 0..n {
            for q in 0..n {
                leq[p * n + q] = self.leq(p, q);
                leq_f[p * n + q] = self.leq_f(p, q);
                f[p * n + q] = self.f(p, q);
                if self.theta(p, q) == self.theta(q, p) {
                    meet[p * n + q] = Some(self.theta(p, q));
                }
                if self.order_meet(p, q).is_none() {
                    semilattice = false;
                }
            }
        }
        Relations { size: n, leq, leq_f, f, meet, is_meet_semilattice: semilattice }
    }

    /// Checks (pθ_q)φ = (pφ)θ'_{qφ} for all p, q. Returns the first failing (p, q).
    pub fn check_morphism(&self, phi: &[usize], target: &ProjectionAlgebra) -> std::result::Result<(), Witness> {
        if phi.len() != self.size || phi.iter().any(|&x| x >= target.size) {
            return Err(Witness::new(vec![], "map is not total into the target"));
        }
        for p in 0..self.size {
            for q in 0..self.size {
                let l = phi[self.theta(p, q)];
                let r = target.theta(phi[p], phi[q]);
                if l != r {
                    return Err(Witness::new(vec![p, q], format!("(pθ_q)φ = {} but (pφ)θ_(qφ) = {}", l, r)));
                }
            }
        }
        Ok(())
    }

    /// The five-element algebra {1, e, p, q, z}: θ_1 is the identity, θ_e sends
    /// 1, e ↦ e and fixes p, q, while θ_p, θ_q, θ_z are constant. `z_to_q`
    /// selects zθ_e = q instead of p.
    pub fn kinyon(z_to_q: bool) -> Self {
        let e_map = [1u32, 1, 2, 3, if z_to_q { 3 } else { 2 }];
        let rows = (0..5u32).map(|x| vec![x, e_map[x as usize], 2, 3, 4]).collect();
        let labels = ["1", "e", "p", "q", "z"].iter().map(|s| s.to_string()).collect();
        ProjectionAlgebra::from_rows(rows, Some(labels)).unwrap()
    }

    /// Every θ_p constant with value p.
    pub fn constant(n: usize) -> Self {
        let rows = (0..n).map(|_| (0..n as u32).collect()).collect();
        ProjectionAlgebra::from_rows(rows, None).unwrap()
    }

    /// The chain 0 < 1 < ... < n-1 with qθ_p = min(p, q).
    pub fn chain(n: usize) -> Self {
        let rows = (0..n as u32).map(|q| (0..n as u32).map(|p| p.min(q)).collect()).collect();
        ProjectionAlgebra::from_rows(rows, None).unwrap()
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |p| (0..n).map(move |q| (p, q)))
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |p| (0..n).flat_map(move |q| (0..n).map(move |r| (p, q, r))))
}
