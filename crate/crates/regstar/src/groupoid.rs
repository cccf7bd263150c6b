//! Ordered groupoids whose objects form a projection algebra.
//!
//! Objects are numbered as in the projection algebra; each object `p` is also
//! the morphism `ident(p)`. Restrictions are stored as a table indexed by
//! (object, morphism), defined exactly when the object lies below the domain.

use std::collections::HashMap;

use crate::error::{domain, structure, Result};
use crate::palg::ProjectionAlgebra;
use crate::report::{Report, Witness};
use crate::semigroup::StarSemigroup;

pub(crate) const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedGroupoid {
    palg: ProjectionAlgebra,
    ident: Vec<u32>,
    dom: Vec<u32>,
    cod: Vec<u32>,
    inv: Vec<u32>,
    compose: Vec<u32>,
    restrict: Vec<u32>,
    labels: Option<Vec<String>>,
}

/// Plain-table form of a groupoid, used for JSON and for building mutated copies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupoidParts {
    pub palg: ProjectionAlgebra,
    pub identities: Vec<usize>,
    pub dom: Vec<usize>,
    pub cod: Vec<usize>,
    pub invert: Vec<usize>,
    /// (a, b, a∘b) for every composable pair.
    pub compose: Vec<(usize, usize, usize)>,
    /// (p, a, ₚ⇂a) for every p ≤ d(a).
    pub restrict: Vec<(usize, usize, usize)>,
    pub labels: Option<Vec<String>>,
}

impl OrderedGroupoid {
    /// Checks structural totality: ranges, composition defined exactly on
    /// composable pairs, restriction defined exactly below domains. Axioms are
    /// left to [`OrderedGroupoid::verify`].
    pub fn from_parts(parts: GroupoidParts) -> Result<Self> {
        let k = parts.palg.size();
        let m = parts.dom.len();
        if parts.cod.len() != m || parts.invert.len() != m {
            return structure("dom, cod and invert lengths differ");
        }
        if parts.identities.len() != k {
            return structure("one identity per object is required");
        }
        if parts.dom.iter().chain(&parts.cod).any(|&x| x >= k) {
            return structure("dom/cod out of range");
        }
        if parts.identities.iter().chain(&parts.invert).any(|&x| x >= m) {
            return structure("identity or inverse out of range");
        }
        if parts.labels.as_ref().is_some_and(|l| l.len() != m) {
            return structure("label count differs from morphism count");
        }
        let mut compose = vec![NONE; m * m];
        for &(a, b, c) in &parts.compose {
            if a >= m || b >= m || c >= m {
                return structure(format!("compose entry ({a},{b},{c}) out of range"));
            }
            if parts.cod[a] != parts.dom[b] {
                return structure(format!("compose given for non-composable ({a},{b})"));
            }
            compose[a * m + b] = c as u32;
        }
        for a in 0..m {
            for b in 0..m {
                if parts.cod[a] == parts.dom[b] && compose[a * m + b] == NONE {
                    return structure(format!("compose missing for composable ({a},{b})"));
                }
            }
        }
        let mut restrict = vec![NONE; k * m];
        for &(p, a, x) in &parts.restrict {
            if p >= k || a >= m || x >= m {
                return structure(format!("restrict entry ({p},{a},{x}) out of range"));
            }
            if !parts.palg.leq(p, parts.dom[a]) {
                return structure(format!("restrict given for {p} not below d({a})"));
            }
            restrict[p * m + a] = x as u32;
        }
        for p in 0..k {
            for a in 0..m {
                if parts.palg.leq(p, parts.dom[a]) && restrict[p * m + a] == NONE {
                    return structure(format!("restrict missing for ({p},{a})"));
                }
            }
        }
        let u = |v: Vec<usize>| v.into_iter().map(|x| x as u32).collect::<Vec<u32>>();
        Ok(OrderedGroupoid {
            palg: parts.palg,
            ident: u(parts.identities),
            dom: u(parts.dom),
            cod: u(parts.cod),
            inv: u(parts.invert),
            compose,
            restrict,
            labels: parts.labels,
        })
    }

    pub fn to_parts(&self) -> GroupoidParts {
        let m = self.morphism_count();
        let k = self.object_count();
        let mut compose = Vec::new();
        for a in 0..m {
            for b in 0..m {
                if let Some(c) = self.compose(a, b) {
                    compose.push((a, b, c));
                }
            }
        }
        let mut restrict = Vec::new();
        for p in 0..k {
            for a in 0..m {
                if let Some(x) = self.restrict_left(p, a) {
                    restrict.push((p, a, x));
                }
            }
        }
        let w = |v: &[u32]| v.iter().map(|&x| x as usize).collect();
        GroupoidParts {
            palg: self.palg.clone(),
            identities: w(&self.ident),
            dom: w(&self.dom),
            cod: w(&self.cod),
            invert: w(&self.inv),
            compose,
            restrict,
            labels: self.labels.clone(),
        }
    }

    /// 𝒢(S): morphisms are the elements of S, d(a) = aa*, r(a) = a*a, a∘b = ab
    /// when r(a) = d(b), a⁻¹ = a*, and ₚ⇂a = pa.
    pub fn from_semigroup(s: &StarSemigroup) -> Self {
        let (palg, proj) = s.projection_algebra();
        let obj: HashMap<usize, usize> = proj.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let m = s.size();
        let k = proj.len();
        let dom: Vec<u32> = (0..m).map(|a| obj[&s.d(a)] as u32).collect();
        let cod: Vec<u32> = (0..m).map(|a| obj[&s.r(a)] as u32).collect();
        let mut compose = vec![NONE; m * m];
        for a in 0..m {
            for b in 0..m {
                if cod[a] == dom[b] {
                    compose[a * m + b] = s.mul(a, b) as u32;
                }
            }
        }
        let mut restrict = vec![NONE; k * m];
        for p in 0..k {
            for a in 0..m {
                if palg.leq(p, dom[a] as usize) {
                    restrict[p * m + a] = s.mul(proj[p], a) as u32;
                }
            }
        }
        OrderedGroupoid {
            palg,
            ident: proj.iter().map(|&p| p as u32).collect(),
            dom,
            cod,
            inv: s.star_table().to_vec(),
            compose,
            restrict,
            labels: s.labels().map(|l| l.to_vec()),
        }
    }

    pub fn palg(&self) -> &ProjectionAlgebra {
        &self.palg
    }

    /// Same groupoid, different object algebra of the same size. The result is
    /// re-checked structurally since ≤ may change.
    pub fn with_palg(&self, palg: ProjectionAlgebra) -> Result<Self> {
        let mut parts = self.to_parts();
        if palg.size() != parts.palg.size() {
            return structure("object count differs");
        }
        parts.palg = palg;
        OrderedGroupoid::from_parts(parts)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn morphism_count(&self) -> usize {
        self.dom.len()
    }

    pub fn object_count(&self) -> usize {
        self.ident.len()
    }

    pub fn ident(&self, p: usize) -> usize {
        self.ident[p] as usize
    }

    pub fn identities(&self) -> Vec<usize> {
        self.ident.iter().map(|&x| x as usize).collect()
    }

    /// The object whose identity is `a`, if any.
    pub fn object_of(&self, a: usize) -> Option<usize> {
        self.ident.iter().position(|&x| x as usize == a)
    }

    pub fn dom(&self, a: usize) -> usize {
        self.dom[a] as usize
    }

    pub fn cod(&self, a: usize) -> usize {
        self.cod[a] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn compose(&self, a: usize, b: usize) -> Option<usize> {
        let c = self.compose[a * self.morphism_count() + b];
        (c != NONE).then_some(c as usize)
    }

    /// ₚ⇂a, defined iff p ≤ d(a).
    pub fn restrict_left(&self, p: usize, a: usize) -> Option<usize> {
        let x = self.restrict[p * self.morphism_count() + a];
        (x != NONE).then_some(x as usize)
    }

    /// a↾_q = (_q⇂a⁻¹)⁻¹, defined iff q ≤ r(a).
    pub fn restrict_right(&self, a: usize, q: usize) -> Option<usize> {
        self.restrict_left(q, self.inv(a)).map(|x| self.inv(x))
    }

    pub fn try_restrict_left(&self, p: usize, a: usize) -> Result<usize> {
        match self.restrict_left(p, a) {
            Some(x) => Ok(x),
            None => domain(format!("object {} is not below d({})", p, a)),
        }
    }

    pub fn try_restrict_right(&self, a: usize, q: usize) -> Result<usize> {
        match self.restrict_right(a, q) {
            Some(x) => Ok(x),
            None => domain(format!("object {} is not below r({})", q, a)),
        }
    }

    /// a ≤ b iff a = _{d(a)}⇂b.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.restrict_left(self.dom(a), b) == Some(a)
    }

    pub fn hom(&self, p: usize, q: usize) -> Vec<usize> {
        (0..self.morphism_count()).filter(|&a| self.dom(a) == p && self.cod(a) == q).collect()
    }

    /// ϑ_a: p ↦ r(ₚ⇂a) on d(a)↓, `None` off the down-set.
    pub fn vartheta(&self, a: usize) -> Vec<Option<usize>> {
        (0..self.object_count()).map(|p| self.restrict_left(p, a).map(|x| self.cod(x))).collect()
    }

    /// Θ_a = θ_{d(a)} ϑ_a, a total map on objects.
    pub fn big_theta(&self, a: usize) -> Vec<usize> {
        let vt = self.vartheta(a);
        let d = self.dom(a);
        (0..self.object_count()).map(|p| vt[self.palg.theta(p, d)].unwrap_or(usize::MAX)).collect()
    }

    /// Θ_a with undefined points reported as `None`, for checking broken instances.
    fn big_theta_checked(&self, a: usize) -> Option<Vec<usize>> {
        let t = self.big_theta(a);
        t.iter().all(|&x| x != usize::MAX).then_some(t)
    }

    /// Groupoid laws, O1′ to O5′, ϑ inverse pairs and G1a to G1d, each reported
    /// separately. When the O axioms hold, agreement of the four G1 forms is also recorded.
    pub fn verify(&self) -> Report {
        let mut rep = Report::new();
        rep.record("groupoid laws", self.first_groupoid_failure());
        let o = [self.o1(), self.o2(), self.o3(), self.o4(), self.o5()];
        let o_ok = o.iter().all(Option::is_none);
        for (i, w) in o.into_iter().enumerate() {
            rep.record(format!("O{}'", i + 1), w);
        }
        rep.record("vartheta inverse", self.vartheta_inverse());
        let g = [self.g1a(), self.g1b(), self.g1c(), self.g1d()];
        let truth: Vec<bool> = g.iter().map(Option::is_none).collect();
        for (name, w) in ["G1a", "G1b", "G1c", "G1d"].into_iter().zip(g) {
            rep.record(name, w);
        }
        if o_ok {
            let agree = truth.iter().all(|&t| t == truth[0]);
            rep.record(
                "G1 agreement",
                (!agree).then(|| Witness::new(vec![], format!("G1a..G1d truth values {:?}", truth))),
            );
        }
        rep
    }

    fn first_groupoid_failure(&self) -> Option<Witness> {
        let m = self.morphism_count();
        for p in 0..self.object_count() {
            let i = self.ident(p);
            if self.dom(i) != p || self.cod(i) != p || self.inv(i) != i {
                return Some(Witness::new(vec![p], "identity has wrong endpoints or inverse"));
            }
        }
        for a in 0..m {
            let (d, r) = (self.dom(a), self.cod(a));
            if self.compose(self.ident(d), a) != Some(a) || self.compose(a, self.ident(r)) != Some(a) {
                return Some(Witness::new(vec![a], "identity law"));
            }
            let ai = self.inv(a);
            if self.inv(ai) != a || self.compose(a, ai) != Some(self.ident(d)) || self.compose(ai, a) != Some(self.ident(r)) {
                return Some(Witness::new(vec![a], "inverse law"));
            }
        }
        for a in 0..m {
            for b in 0..m {
                let Some(ab) = self.compose(a, b) else { continue };
                if self.dom(ab) != self.dom(a) || self.cod(ab) != self.cod(b) {
                    return Some(Witness::new(vec![a, b], "composite has wrong endpoints"));
                }
                for c in 0..m {
                    let Some(bc) = self.compose(b, c) else { continue };
                    if self.compose(ab, c) != self.compose(a, bc) {
                        return Some(Witness::new(vec![a, b, c], "composition not associative"));
                    }
                }
            }
        }
        None
    }

    fn below_dom(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        let d = self.dom(a);
        (0..self.object_count()).filter(move |&p| self.palg.leq(p, d))
    }

    fn o1(&self) -> Option<Witness> {
        for a in 0..self.morphism_count() {
            for p in self.below_dom(a) {
                let x = self.restrict_left(p, a).expect("restriction is total below d(a)");
                if self.dom(x) != p || !self.palg.leq(self.cod(x), self.cod(a)) {
                    return Some(Witness::new(vec![p, a], format!("restriction {} has d = {}, r = {}", x, self.dom(x), self.cod(x))));
                }
            }
        }
        None
    }

    fn o2(&self) -> Option<Witness> {
        for a in 0..self.morphism_count() {
            for p in self.below_dom(a) {
                let x = self.restrict_left(p, a).expect("restriction is total below d(a)");
                let q = self.cod(x);
                let y = self.restrict_left(q, self.inv(a));
                if y != Some(self.inv(x)) {
                    return Some(Witness::new(vec![p, a], format!("(ₚ⇂a)⁻¹ = {} but _q⇂a⁻¹ = {:?}", self.inv(x), y)));
                }
            }
        }
        None
    }

    fn o3(&self) -> Option<Witness> {
        (0..self.morphism_count())
            .find(|&a| self.restrict_left(self.dom(a), a) != Some(a))
            .map(|a| Witness::new(vec![a], format!("_d(a)⇂a = {:?}", self.restrict_left(self.dom(a), a))))
    }

    fn o4(&self) -> Option<Witness> {
        for a in 0..self.morphism_count() {
            for q in self.below_dom(a) {
                for p in self.below_dom(a).filter(|&p| self.palg.leq(p, q)) {
                    let inner = self.restrict_left(q, a).expect("restriction is total below d(a)");
                    let l = self.restrict_left(p, inner);
                    let r = self.restrict_left(p, a);
                    if l != r {
                        return Some(Witness::new(vec![p, q, a], format!("ₚ⇂_q⇂a = {:?} but ₚ⇂a = {:?}", l, r)));
                    }
                }
            }
        }
        None
    }

    fn o5(&self) -> Option<Witness> {
        let m = self.morphism_count();
        for a in 0..m {
            for b in 0..m {
                let Some(ab) = self.compose(a, b) else { continue };
                for p in self.below_dom(a) {
                    let pa = self.restrict_left(p, a).expect("restriction is total below d(a)");
                    let q = self.cod(pa);
                    let qb = self.restrict_left(q, b);
                    let r = qb.and_then(|qb| self.compose(pa, qb));
                    let l = self.restrict_left(p, ab);
                    if l != r {
                        return Some(Witness::new(vec![p, a, b], format!("ₚ⇂(a∘b) = {:?} but ₚ⇂a∘_q⇂b = {:?}", l, r)));
                    }
                }
            }
        }
        None
    }

    fn vartheta_inverse(&self) -> Option<Witness> {
        for a in 0..self.morphism_count() {
            let va = self.vartheta(a);
            let vi = self.vartheta(self.inv(a));
            for (p, x) in va.iter().enumerate() {
                let Some(x) = *x else { continue };
                if vi.get(x).copied().flatten() != Some(p) {
                    return Some(Witness::new(vec![a, p], "ϑ_a⁻¹ does not invert ϑ_a"));
                }
            }
        }
        None
    }

    /// x ↦ ((xΘ_{a⁻¹})θ_p)Θ_a as a table.
    fn conj(&self, a: usize, p: usize) -> Option<Vec<usize>> {
        let ta = self.big_theta_checked(a)?;
        let ti = self.big_theta_checked(self.inv(a))?;
        Some((0..self.object_count()).map(|x| ta[self.palg.theta(ti[x], p)]).collect())
    }

    fn g1a(&self) -> Option<Witness> {
        for a in 0..self.morphism_count() {
            let vt = self.vartheta(a);
            for p in self.below_dom(a) {
                let Some(q) = vt[p] else { return Some(Witness::new(vec![a, p], "ϑ_a undefined")) };
                let Some(rhs) = self.conj(a, p) else { return Some(Witness::new(vec![a], "Θ undefined")) };
                if let Some(x) = (0..self.object_count()).find(|&x| self.palg.theta(x, q) != rhs[x]) {
                    return Some(Witness::new(vec![a, p, x], format!("xθ_(pϑ_a) = {} but xΘ_a⁻¹θ_pΘ_a = {}", self.palg.theta(x, q), rhs[x])));
                }
            }
        }
        None
    }

    fn g1b(&self) -> Option<Witness> {
        for a in 0..self.morphism_count() {
            let Some(ta) = self.big_theta_checked(a) else { return Some(Witness::new(vec![a], "Θ undefined")) };
            for p in 0..self.object_count() {
                let Some(rhs) = self.conj(a, p) else { return Some(Witness::new(vec![a], "Θ undefined")) };
                let q = ta[p];
                if let Some(x) = (0..self.object_count()).find(|&x| self.palg.theta(x, q) != rhs[x]) {
                    return Some(Witness::new(vec![a, p, x], format!("xθ_(pΘ_a) = {} but xΘ_a⁻¹θ_pΘ_a = {}", self.palg.theta(x, q), rhs[x])));
                }
            }
        }
        None
    }

    fn g1c(&self) -> Option<Witness> {
        for a in 0..self.morphism_count() {
            let r = self.cod(a);
            let Some(ta) = self.big_theta_checked(a) else { return Some(Witness::new(vec![a], "Θ undefined")) };
            for q in (0..self.object_count()).filter(|&q| self.palg.leq(q, r)) {
                let Some(aq) = self.restrict_right(a, q) else { return Some(Witness::new(vec![a, q], "a↾q undefined")) };
                let Some(taq) = self.big_theta_checked(aq) else { return Some(Witness::new(vec![aq], "Θ undefined")) };
                if let Some(x) = (0..self.object_count()).find(|&x| taq[x] != self.palg.theta(ta[x], q)) {
                    return Some(Witness::new(vec![a, q, x], format!("xΘ_(a↾q) = {} but xΘ_aθ_q = {}", taq[x], self.palg.theta(ta[x], q))));
                }
            }
        }
        None
    }

    fn g1d(&self) -> Option<Witness> {
        for a in 0..self.morphism_count() {
            let vt = self.vartheta(a);
            let below: Vec<usize> = self.below_dom(a).collect();
            for &p in &below {
                for &q in &below {
                    let pq = self.palg.theta(p, q);
                    let (Some(l), Some(vp), Some(vq)) = (vt[pq], vt[p], vt[q]) else {
                        return Some(Witness::new(vec![a, p, q], "ϑ_a undefined below d(a)"));
                    };
                    let r = self.palg.theta(vp, vq);
                    if l != r {
                        return Some(Witness::new(vec![a, p, q], format!("(pθ_q)ϑ_a = {} but (pϑ_a)θ_(qϑ_a) = {}", l, r)));
                    }
                }
            }
        }
        None
    }
}
