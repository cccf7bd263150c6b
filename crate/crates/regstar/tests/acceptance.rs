//! Acceptance run: one PASS/FAIL line per criterion. Pass criterion numbers as
//! arguments to run a subset, e.g. `cargo test --test acceptance -- 4 7`.

mod common;

use std::collections::BTreeSet;
use std::result::Result;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use regstar::chains;
use regstar::*;

/// A criterion either holds, fails, or holds except for a clause that the
/// computation shows to be false as worded; the last is printed as FAIL with
/// the analysis but does not fail the run.
enum Verdict {
    Pass(String),
    Conflict(String),
}

type Outcome = Result<Verdict, String>;

fn pass(msg: String) -> Outcome {
    Ok(Verdict::Pass(msg))
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(elapsed: Duration, limit: f64, what: &str) -> Result<(), String> {
    ensure(elapsed.as_secs_f64() < limit, format!("{} took {:.3} s, limit {} s", what, elapsed.as_secs_f64(), limit))
}

fn pn(n: usize) -> StarSemigroup {
    partition_monoid(n, Family::Full, None).unwrap().0
}

fn kinyon_fp() -> FpSemigroup {
    fp_semigroup(&ProjectionAlgebra::kinyon(false))
}

fn random_rees(count: usize, seed: u64) -> Vec<(String, StarSemigroup)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for i in 0..count {
        let k = 2 + i % 2;
        let points = 2 + (i / 2) % 3;
        let m = SandwichMatrix::random(points, Group::cyclic(k), 0.3, &mut rng);
        out.push((format!("rees Z{} x{} #{}", k, points, i), rees_semigroup(&m)));
    }
    out
}

fn adjacency_all() -> Vec<(String, StarSemigroup)> {
    let mut out = Vec::new();
    for n in 1..=4 {
        for (i, g) in SimpleGraph::all(n).iter().enumerate() {
            out.push((format!("adjacency n={} #{}", n, i), adjacency_semigroup(g)));
        }
    }
    out
}

/// Every bundled instance.
fn instances() -> Vec<(String, StarSemigroup)> {
    let mut out = vec![("P1".to_string(), pn(1)), ("P2".to_string(), pn(2)), ("P3".to_string(), pn(3))];
    for n in [3, 4] {
        out.push((format!("B{}", n), partition_monoid(n, Family::Brauer, None).unwrap().0));
    }
    out.extend(adjacency_all());
    out.extend(random_rees(24, 0));
    out.push(("Kinyon F_P".to_string(), kinyon_fp().semigroup));
    out
}

/// The Brandt extension of T = K2 with an identity adjoined, over two indices:
/// zero plus (i, t, j), stored at 1 + (2i + j)·5 + t. T lists the four
/// adjacency elements then the identity.
fn brandt_edge_monoid() -> StarSemigroup {
    let k2 = adjacency_semigroup(&SimpleGraph::complete(2));
    let tmul = |a: usize, b: usize| -> Option<usize> {
        match (a, b) {
            (4, x) | (x, 4) => Some(x),
            _ => match k2.mul(a + 1, b + 1) {
                0 => None,
                r => Some(r - 1),
            },
        }
    };
    let tstar = |a: usize| if a == 4 { 4 } else { k2.star(a + 1) - 1 };
    let enc = |i: usize, t: usize, j: usize| 1 + (i * 2 + j) * 5 + t;
    let dec = |x: usize| ((x - 1) / 10, (x - 1) % 5, ((x - 1) / 5) % 2);
    let star = (0..21).map(|x| if x == 0 { 0 } else { let (i, t, j) = dec(x); enc(j, tstar(t), i) as u32 }).collect();
    StarSemigroup::from_fn(
        21,
        |x, y| {
            if x == 0 || y == 0 {
                return 0;
            }
            let ((i, s, j), (k, t, l)) = (dec(x), dec(y));
            match (j == k).then(|| tmul(s, t)).flatten() {
                Some(u) => enc(i, u, l),
                None => 0,
            }
        },
        star,
        None,
    )
    .unwrap()
}

fn criterion_1() -> Outcome {
    let t0 = Instant::now();
    let alpha = Partition::parse(6, "{1,2,3,1'},{4,4',5',6'},{5},{6},{2',3'}").unwrap();
    let beta = Partition::parse(6, "{1,4',6'},{2,3},{4,5,6,1',2',3'},{5'}").unwrap();
    let expected = Partition::parse(6, "{1,2,3,4',6'},{4,1',2',3'},{5},{6},{5'}").unwrap();
    let ab = alpha.multiply(&beta).unwrap();
    ensure(ab == expected, format!("αβ = {}", ab))?;
    ensure(ab.to_string() == "{1,2,3,4',6'},{4,1',2',3'},{5},{6},{5'}", format!("printed αβ = {}", ab))?;
    let p2 = partition_monoid(2, Family::Full, None).unwrap().1;
    let mut triples = 0usize;
    for a in &p2 {
        ensure(a.star().star() == *a, "(a*)* = a")?;
        ensure(a.multiply(&a.star()).unwrap().multiply(a).unwrap() == *a, format!("aa*a ≠ a for {}", a))?;
        for b in &p2 {
            ensure(a.multiply(b).unwrap().star() == b.star().multiply(&a.star()).unwrap(), "(ab)* ≠ b*a*")?;
            for c in &p2 {
                triples += 1;
                let l = a.multiply(b).unwrap().multiply(c).unwrap();
                let r = a.multiply(&b.multiply(c).unwrap()).unwrap();
                ensure(l == r, format!("associativity fails at {}, {}, {}", a, b, c))?;
            }
        }
    }
    let el = t0.elapsed();
    within(el, 1.0, "criterion 1")?;
    pass(format!("αβ block-for-block, {} triples associative, *-laws hold, {:.3} s", triples, el.as_secs_f64()))
}

fn criterion_2() -> Outcome {
    let t0 = Instant::now();
    for n in 1..=3 {
        let got = Partition::enumerate(n).len() as u64;
        ensure(got == common::bell(2 * n), format!("|P{}| = {} but B(2n) = {}", n, got, common::bell(2 * n)))?;
        ensure(pn(n).size() as u64 == got, "table size differs from enumeration")?;
    }
    ensure([pn(1).size(), pn(2).size(), pn(3).size()] == [2, 15, 203], "sizes are not 2, 15, 203")?;
    let s = pn(2);
    let sp = s.special_elements();
    ensure(sp.projections.len() == 6, format!("{} projections", sp.projections.len()))?;
    ensure(sp.idempotents.len() == 12, format!("{} idempotents", sp.idempotents.len()))?;
    ensure(sp.idempotents.len() == sp.f_pairs.len(), format!("|E| = {} but |F| = {}", sp.idempotents.len(), sp.f_pairs.len()))?;
    let products: BTreeSet<usize> = sp.f_pairs.iter().map(|&(p, q)| s.mul(p, q)).collect();
    ensure(products.into_iter().collect::<Vec<_>>() == sp.idempotents, "E is not {pq : p F q}")?;
    let el = t0.elapsed();
    within(el, 5.0, "criterion 2")?;
    pass(format!("|P1|,|P2|,|P3| = 2,15,203 = Bell(2n); P2 has 6 projections, 12 idempotents, |E| = |F|, {:.3} s", el.as_secs_f64()))
}

fn criterion_3() -> Outcome {
    let t0 = Instant::now();
    let input = ProjectionAlgebra::kinyon(false);
    let fp = fp_semigroup(&input);
    let s = &fp.semigroup;
    ensure(s.size() == 11, format!("|F_P| = {}", s.size()))?;
    ensure(s.verify_star_laws().passed(), "F_P fails a *-law")?;
    ensure((0..11).all(|a| s.is_idempotent(a)), "F_P is not a band")?;
    let green = s.green_data();
    let mut sizes: Vec<usize> = (0..green.d_count()).map(|d| green.d_class.iter().filter(|&&x| x == d).count()).collect();
    sizes.sort_unstable();
    ensure(sizes == vec![1, 1, 9], format!("D-class sizes {:?}", sizes))?;
    let big = (0..green.d_count()).find(|&d| green.d_class.iter().filter(|&&x| x == d).count() == 9).unwrap();
    let grid = green.eggbox(big);
    ensure(grid.len() == 3 && grid.iter().all(|r| r.len() == 3 && r.iter().all(|h| h.len() == 1)), "the 9-element class is not 3×3 with trivial H-classes")?;
    let members: Vec<usize> = grid.iter().flatten().flatten().copied().collect();
    for &a in &members {
        for &b in &members {
            ensure(s.mul(s.mul(a, b), a) == a, "the 9-element class is not a rectangular band")?;
        }
    }
    let (palg, proj) = s.projection_algebra();
    let phi: Vec<usize> = fp.generators.iter().map(|g| proj.iter().position(|x| x == g).expect("generator is a projection")).collect();
    let inverse: Vec<usize> = (0..palg.size()).map(|i| phi.iter().position(|&x| x == i).unwrap_or(usize::MAX)).collect();
    ensure(palg.size() == input.size() && inverse.iter().all(|&x| x != usize::MAX), "projections are not in bijection with P")?;
    input.check_morphism(&phi, &palg).map_err(|w| format!("P → P(F_P) not a morphism: {:?}", w))?;
    palg.check_morphism(&inverse, &input).map_err(|w| format!("P(F_P) → P not a morphism: {:?}", w))?;
    let el = t0.elapsed();
    within(el, 1.0, "criterion 3")?;
    pass(format!("11-element band, D-classes 1/1/9 with a 3×3 rectangular band, P(F_P) ≅ P, {:.3} s", el.as_secs_f64()))
}

fn criterion_4() -> Outcome {
    let t0 = Instant::now();
    let mut list = vec![("P2".to_string(), pn(2))];
    list.extend(adjacency_all());
    let rees = random_rees(24, 0);
    ensure(rees.len() >= 20, "fewer than 20 Rees instances")?;
    list.extend(rees);
    list.push(("Kinyon F_P".to_string(), kinyon_fp().semigroup));
    let check = |name: &str, s: &StarSemigroup| -> Result<(), String> {
        let rt = roundtrip_semigroup(s).map_err(|e| format!("{}: {}", name, e))?;
        ensure(rt.equal(), format!("{}: S(G(S)) ≠ S: {:?}", name, rt.difference))?;
        let t = ChainedProjectionGroupoid::extract(s);
        let back = t.roundtrip().map_err(|e| format!("{}: {}", name, e))?;
        ensure(back.equal(), format!("{}: G(S(T)) ≠ T: {:?}", name, back.difference))
    };
    for (name, s) in &list {
        check(name, s)?;
    }
    let t3 = Instant::now();
    check("P3", &pn(3))?;
    let p3 = t3.elapsed();
    within(p3, 60.0, "P3 round trip")?;
    pass(format!("{} instances equal both ways, P3 in {:.2} s, total {:.2} s", list.len() + 1, p3.as_secs_f64(), t0.elapsed().as_secs_f64()))
}

fn suites(t: &ChainedProjectionGroupoid, samples: usize) -> Report {
    let mut rep = t.palg().verify_axioms();
    rep.extend(t.groupoid().verify());
    rep.extend(t.verify_evaluation(0, samples));
    rep.extend(t.verify_coherence());
    rep
}

fn criterion_5() -> Outcome {
    let t0 = Instant::now();
    let required = [
        "P1", "P2", "P3", "P4", "P5", "O1'", "O2'", "O3'", "O4'", "O5'", "G1a", "G1b", "G1c", "G1d", "E1", "E2 (generators)",
        "E3 via E6 (generators)", "E2 (random chains)", "E3 via E6 (random chains)", "G2",
    ];
    let list = instances();
    for (name, s) in &list {
        let rep = suites(&ChainedProjectionGroupoid::extract(s), 10_000);
        for r in required {
            let c = rep.check(r).ok_or_else(|| format!("{}: check {} missing", name, r))?;
            ensure(c.passed(), format!("{}: {}", name, rep))?;
        }
    }

    let mut lines = Vec::new();
    // P: θ_1 no longer the identity.
    let mut rows = ProjectionAlgebra::kinyon(false).rows();
    rows[1][0] = 2;
    let bad = ProjectionAlgebra::from_rows(rows, None).unwrap();
    let rep = bad.verify_axioms();
    let c = rep.first_failure().ok_or("mutated θ-table passes P1-P5")?;
    lines.push(format!("P mutation -> {}", c));

    // O: one restriction redirected in G(P2).
    let g = OrderedGroupoid::from_semigroup(&pn(2));
    let mut parts = g.to_parts();
    let i = parts
        .restrict
        .iter()
        .position(|&(p, a, x)| g.hom(p, g.cod(x)).len() > 1 && a != x)
        .or_else(|| parts.restrict.iter().position(|&(p, a, _)| p != g.dom(a)))
        .ok_or("no restriction to redirect")?;
    let (p, _, x) = parts.restrict[i];
    let y = (0..g.morphism_count()).find(|&y| y != x && g.dom(y) == p).ok_or("no alternative morphism")?;
    parts.restrict[i].2 = y;
    let rep = OrderedGroupoid::from_parts(parts).map_err(|e| e.to_string())?.verify();
    let c = rep.first_failure().ok_or("redirected restriction passes the O suite")?;
    ensure(c.name.starts_with('O') || c.name.starts_with("groupoid") || c.name.starts_with("vartheta"), format!("O mutation first failed {}", c.name))?;
    lines.push(format!("O mutation -> {}", c));

    // G1: two copies of an edge monoid joined by a groupoid, with the atoms of
    // the second copy made non-friends. The order is unchanged.
    let s = brandt_edge_monoid();
    let g = OrderedGroupoid::from_semigroup(&s);
    let obj = |i: usize, t: usize| g.object_of(1 + (i * 2 + i) * 5 + t).unwrap();
    let (b1, b2, zero) = (obj(1, 0), obj(1, 3), g.object_of(0).unwrap());
    let mut rows = g.palg().rows();
    ensure(rows[b1][b2] == b2 as u32 && rows[b2][b1] == b1 as u32, "second copy atoms are not friends")?;
    rows[b1][b2] = zero as u32;
    rows[b2][b1] = zero as u32;
    let split = ProjectionAlgebra::from_rows(rows, None).unwrap();
    ensure(split.verify_axioms().passed(), "split algebra fails P1-P5")?;
    let g = g.with_palg(split).map_err(|e| e.to_string())?;
    let rep = g.verify();
    let c = rep.first_failure().ok_or("split groupoid passes G1")?;
    ensure(c.name.starts_with("G1"), format!("split groupoid first failed {}", c.name))?;
    lines.push(format!("G1 mutation -> {}", c));

    // E: one group coordinate of ε changed in a Rees triple.
    let m = SandwichMatrix::new(Group::cyclic(2), vec![vec![Some(0), Some(0)], vec![Some(0), Some(0)]]).unwrap();
    let s = rees_semigroup(&m);
    let t = ChainedProjectionGroupoid::extract(&s);
    let (p, q, _) = t.eps_entries().into_iter().find(|e| e.0 != e.1).unwrap();
    let other = t.groupoid().hom(p, q).into_iter().find(|&a| Some(a) != t.eps(p, q)).unwrap();
    let rep = t.with_eps(p, q, other).map_err(|e| e.to_string())?.verify_evaluation(0, 10_000);
    let c = rep.first_failure().ok_or("mutated ε passes the E suite")?;
    lines.push(format!("E mutation -> {}", c));

    // G2: an evaluation map on G(B4) passing every other suite.
    let b4 = ChainedProjectionGroupoid::extract(&partition_monoid(4, Family::Brauer, None).unwrap().0);
    let alt = common::alternative_evaluations(&b4, 1);
    let entries = alt.first().ok_or("no alternative evaluation map on G(B4)")?;
    let t = ChainedProjectionGroupoid::new(b4.groupoid().clone(), entries).map_err(|e| e.to_string())?;
    let mut rest = t.palg().verify_axioms();
    rest.extend(t.groupoid().verify());
    rest.extend(t.verify_evaluation(0, 10_000));
    ensure(rest.passed(), format!("alternative evaluation fails an earlier suite: {}", rest))?;
    let rep = t.verify_coherence();
    let c = rep.first_failure().ok_or("alternative evaluation passes G2")?;
    lines.push(format!("G2 mutation -> {}", c));

    for l in &lines {
        println!("    {}", l);
    }
    pass(format!("{} instances pass all suites, 5 mutations caught, {:.2} s", list.len(), t0.elapsed().as_secs_f64()))
}

fn criterion_6() -> Outcome {
    let t0 = Instant::now();
    let cx = G2PrimeCounterexample::new();
    let el = t0.elapsed();
    ensure(cx.lp == [true; 4], format!("LP1-LP4 = {:?}", cx.lp))?;
    ensure(cx.lhs != cx.rhs, "ee₁bf₁f = ee₂bf₂f")?;
    ensure(cx.lhs == Partition::parse(4, "{1,2},{1',4'},{3,3'},{4,2'}").unwrap(), format!("ee₁bf₁f = {}", cx.lhs))?;
    ensure(cx.rhs == Partition::parse(4, "{1,2},{1',4'},{3,2'},{4,3'}").unwrap(), format!("ee₂bf₂f = {}", cx.rhs))?;
    within(el, 0.1, "criterion 6")?;
    let summary = format!("LP1-LP4 hold, {} ≠ {}, {:.4} s", cx.lhs, cx.rhs, el.as_secs_f64());
    if !cx.linked {
        return pass(format!("{}, (e,f) not b-linked", summary));
    }
    // (e,f) is b-linked after all. What separates the data from a linked
    // configuration is e2 and f2: a linked pair forces e2 = fΘ_b⁻¹ and f2 = fθ_r.
    let m = |xs: &[&Partition]| xs[1..].iter().fold(xs[0].clone(), |acc, x| acc.multiply(x).unwrap());
    let bs = cx.b.star();
    let r = m(&[&bs, &cx.b]);
    let e2 = m(&[&cx.b, &cx.f, &bs]);
    let f2 = m(&[&r, &cx.f, &r]);
    ensure(e2 != cx.e2 && f2 != cx.f2, "listed e2, f2 are the linked ones")?;
    let rho = m(&[&cx.e, &e2, &cx.b, &f2, &cx.f]);
    ensure(rho == cx.lhs && cx.lhs == m(&[&cx.e, &cx.b, &cx.f]), "derived λ, ρ, ebf disagree")?;
    Ok(Verdict::Conflict(format!(
        "{}; the clause \"(e,f) is not b-linked\" is false: efe = e and fef = f with b = id, so (e,f) is b-linked; \
         the linked configuration has e2 = f2 = {} (not the listed {}), and there λ = ρ = ebf = {}",
        summary, e2, cx.e2, rho
    )))
}

fn criterion_7() -> Outcome {
    use rand::Rng;
    let t0 = Instant::now();
    let s = pn(3);
    let (palg, proj) = s.projection_algebra();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..10_000 {
        let len = rng.gen_range(1..16);
        let path = chains::random_path(&palg, len, &mut rng);
        let a = chains::reduce(&palg, &path).map_err(|e| e.to_string())?;
        let b = common::random_order_reduce(&path, &mut rng);
        ensure(a.entries() == b.as_slice(), format!("{:?} reduces to {:?} and {:?}", path, a.entries(), b))?;
    }

    let n = 3;
    let idx = |x: &Partition| -> usize {
        let all = partition_monoid(n, Family::Full, None).unwrap().1;
        let e = all.iter().position(|y| y == x).unwrap();
        proj.iter().position(|&p| p == e).unwrap()
    };
    let (i, j, k) = (0, 1, 2);
    let w1 = [Partition::pi(n, i), Partition::pi_pair(n, i, j), Partition::pi(n, j), Partition::pi_pair(n, j, k), Partition::pi(n, k), Partition::pi_pair(n, k, i), Partition::pi(n, i)];
    let w2 = [Partition::pi(n, i), Partition::pi_pair(n, i, k), Partition::pi(n, k), Partition::pi_pair(n, k, j), Partition::pi(n, j), Partition::pi_pair(n, j, i), Partition::pi(n, i)];
    let p1: Vec<usize> = w1.iter().map(idx).collect();
    let p2: Vec<usize> = w2.iter().map(idx).collect();
    let c1 = chains::reduce(&palg, &p1).map_err(|e| e.to_string())?;
    let c2 = chains::reduce(&palg, &p2).map_err(|e| e.to_string())?;
    ensure(c1.len() == 7 && c2.len() == 7 && c1 != c2, "triangle chains are not distinct reduced words of length 7")?;
    let t = ChainedProjectionGroupoid::extract(&s);
    let (v1, v2) = (t.evaluate(&c1).map_err(|e| e.to_string())?, t.evaluate(&c2).map_err(|e| e.to_string())?);
    ensure(v1 == v2, "triangle chains evaluate differently")?;
    let direct = w1[1..].iter().fold(w1[0].clone(), |acc, x| acc.multiply(x).unwrap());
    let expected = Partition::parse(n, "{1},{1'},{2,3'},{3,2'}").unwrap();
    ensure(direct == expected, format!("triangle product is {}", direct))?;
    ensure(s.label(v1) == expected.to_string(), format!("ε value {} is not {}", s.label(v1), expected))?;

    // A 3-element algebra with one friendship edge: projections of the
    // adjacency semigroup of a single edge.
    let small = adjacency_semigroup(&SimpleGraph::complete(2));
    let (pa3, _) = small.projection_algebra();
    ensure(pa3.size() == 3 && common::friend_edge_count(&pa3) == 1, "small algebra is not 3 points with |F∖Δ| = 2")?;
    let words = common::all_paths(&pa3, 6);
    let cls = common::rewrite_closure(&words);
    let red: Vec<Vec<usize>> = words.iter().map(|w| chains::reduce_word(w)).collect();
    for a in 0..words.len() {
        for b in 0..words.len() {
            ensure((cls[a] == cls[b]) == (red[a] == red[b]), format!("{:?} and {:?} disagree", words[a], words[b]))?;
        }
    }
    pass(format!("10⁴ paths confluent, triangle chains distinct with equal value, {} words agree with ≈, {:.2} s", words.len(), t0.elapsed().as_secs_f64()))
}

fn criterion_8() -> Outcome {
    let t0 = Instant::now();
    let list = instances();
    let mut trivial = 0;
    for (name, s) in &list {
        let tv = ChainedProjectionGroupoid::extract(s).triviality();
        ensure(tv.agree(), format!("{}: conditions disagree {:?}", name, tv.values()))?;
        ensure(tv.values()[0] == s.is_inverse(), format!("{}: triviality ≠ inverse", name))?;
        trivial += tv.is_trivial() as usize;
    }
    for n in 1..=4 {
        let s = adjacency_semigroup(&SimpleGraph::discrete(n));
        let t = ChainedProjectionGroupoid::extract(&s);
        ensure(t.triviality().is_trivial(), format!("discrete graph on {} vertices is not trivial", n))?;
        let back = esn(t.groupoid()).map_err(|e| e.to_string())?;
        ensure(compare_semigroups(&s, &back).is_none(), format!("esn does not rebuild discrete n={}", n))?;
    }
    for n in 2..=4 {
        let s = adjacency_semigroup(&SimpleGraph::complete(n));
        let t = ChainedProjectionGroupoid::extract(&s);
        ensure(t.palg().relations().is_meet_semilattice, "complete graph order is not a semilattice")?;
        ensure(!t.triviality().is_trivial(), format!("complete graph on {} vertices is trivial", n))?;
    }
    let z2 = Group::cyclic(2);
    let a = rees_semigroup(&SandwichMatrix::new(z2.clone(), vec![vec![Some(0), Some(0)], vec![Some(0), Some(0)]]).unwrap());
    let b = rees_semigroup(&SandwichMatrix::new(z2, vec![vec![Some(0), Some(1)], vec![Some(1), Some(0)]]).unwrap());
    let (ta, tb) = (ChainedProjectionGroupoid::extract(&a), ChainedProjectionGroupoid::extract(&b));
    ensure(ta.palg() == tb.palg(), "projection algebras differ")?;
    ensure(ta.groupoid() == tb.groupoid(), "groupoids differ")?;
    ensure(ta.eps_entries() != tb.eps_entries(), "ε agree")?;
    ensure(compare_semigroups(&ta.reconstruct_forced().unwrap(), &tb.reconstruct_forced().unwrap()).is_some(), "reconstructions agree")?;
    pass(format!("six conditions agree on {} instances ({} trivial), esn rebuilds discrete cases, Rees pair separated by ε only, {:.2} s", list.len(), trivial, t0.elapsed().as_secs_f64()))
}

fn criterion_9() -> Outcome {
    let t0 = Instant::now();
    let mut sizes = Vec::new();
    for n in [2, 3] {
        let s = pn(n);
        let cl = s.projection_closure().map_err(|e| e.to_string())?;
        let naive: Vec<usize> = common::naive_projection_closure(&s).into_iter().collect();
        ensure(cl.elements() == naive, format!("P{}: closure differs from naive saturation", n))?;
        let t = ChainedProjectionGroupoid::extract(&s);
        ensure(t.image_of_eps() == naive, format!("P{}: image of ε ≠ ⟨P⟩", n))?;
        for (x, path) in &cl.members {
            ensure(path.windows(2).all(|w| s.friends(w[0], w[1])), format!("P{}: {:?} is not F-chained", n, path))?;
            let prod = path[1..].iter().fold(path[0], |acc, &p| s.mul(acc, p));
            ensure(prod == *x, format!("P{}: {:?} does not multiply to {}", n, path, x))?;
        }
        sizes.push(cl.len());
    }
    ensure(sizes[0] == 14, format!("|⟨P⟩| for P2 is {}", sizes[0]))?;
    let s = pn(2);
    let missing: Vec<usize> = (0..15).filter(|x| !s.projection_closure().unwrap().elements().contains(x)).collect();
    ensure(missing.len() == 1 && s.label(missing[0]) == "{1,2'},{2,1'}", "the missing element is not the transposition")?;
    pass(format!("|⟨P⟩| = {} in P2 and {} in P3, equal to im ε, factorizations valid, {:.2} s", sizes[0], sizes[1], t0.elapsed().as_secs_f64()))
}

fn criterion_10() -> Outcome {
    let t0 = Instant::now();
    let mut list = vec![("P2".to_string(), pn(2))];
    for n in 1..=4 {
        list.push((format!("Brandt n={}", n), adjacency_semigroup(&SimpleGraph::discrete(n))));
    }
    for (name, s) in &list {
        ensure(s.size() <= 20, format!("{} has {} elements", name, s.size()))?;
        let mu = s.mu_congruence().map_err(|e| e.to_string())?;
        let oracle = common::brute_force_mu(s);
        for a in 0..s.size() {
            for b in 0..s.size() {
                ensure(mu.related(a, b) == oracle[a][b], format!("{}: ({}, {}) disagrees", name, a, b))?;
            }
        }
        ensure(mu.is_identity(), format!("{}: μ is not the identity", name))?;
    }
    pass(format!("μ = Δ on P2 and Brandt n ≤ 4, matching exhaustive search, {:.2} s", t0.elapsed().as_secs_f64()))
}

fn main() {
    let wanted: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let all: [(usize, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut failed = 0;
    for (n, f) in all {
        if !wanted.is_empty() && !wanted.contains(&n) {
            continue;
        }
        match f() {
            Ok(Verdict::Pass(msg)) => println!("criterion {}: PASS {}", n, msg),
            Ok(Verdict::Conflict(msg)) => println!("criterion {}: FAIL (inconsistent requirement, see README) {}", n, msg),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL {}", n, msg)
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
