//! Runs the acceptance criteria and prints one pass/fail line for each.
//!
//! Built with `harness = false`; exits non-zero if any criterion fails.

use dowling::bitset::{for_each_subset_of_size, ElementSet};
use dowling::constructions::{
    bipartite_z2, good_pair_graph, h_ab, mantel_z3, matchstick, origami, origami_vectors,
};
use dowling::descriptor::MatroidDescriptor;
use dowling::extremal::{
    classify_extremal, density_table, ex_exhaustive, find_forbidden, is_non_increasing, verify_ex,
    verify_lemma_233332, verify_lemma_432, verify_lemma_t1_vertices, Certificate, Detection, Equivalence,
    ExtremalProblem, SearchOptions,
};
use dowling::matroid::{check_rank_axioms, count_lines, find_embedding, is_circuit, Graphic, Restriction};
use dowling::patterns::{
    balanced_clique, centred_clique, has_balanced_copy, has_clique_restriction, is_isomorphic, looped_clique,
};
use dowling::theorems::{verify_theorem, TheoremOptions};
use dowling::{classify_circuit, CircuitKind, DowlingGeometry, FrameMatroid, GainGraph, GroupTable, RankOracle};
use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

type Outcome = Result<(bool, String), String>;

fn grp(label: &str) -> GroupTable {
    GroupTable::from_label(label).unwrap()
}

fn clique(t: usize) -> MatroidDescriptor {
    MatroidDescriptor::Clique { vertices: t }
}

fn c2(n: usize) -> usize {
    n * (n.max(1) - 1) / 2
}

/// Collects sub-checks; the criterion passes when all of them do.
#[derive(Default)]
struct Checks {
    failures: Vec<String>,
    count: usize,
    certificates: Vec<Certificate>,
}

impl Checks {
    fn check(&mut self, what: impl Into<String>, ok: bool) {
        self.count += 1;
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn ex(&mut self, p: ExtremalProblem, expected: usize, opts: &SearchOptions) -> Result<usize, String> {
        let c = ex_exhaustive(&p, opts).map_err(|e| e.to_string())?;
        let v = c.value;
        self.check(
            format!("{} = {expected}, observed {v} ({:?})", p.key(), c.status),
            c.is_certified() && v == expected,
        );
        self.certificates.push(c);
        Ok(v)
    }

    fn outcome(self) -> Outcome {
        if self.failures.is_empty() {
            Ok((true, format!("{} checks", self.count)))
        } else {
            Ok((false, format!("{} of {} checks failed: {}", self.failures.len(), self.count, self.failures.join("; "))))
        }
    }
}

fn mantel() -> Outcome {
    let mut c = Checks::default();
    let opts = SearchOptions::default();
    for (n, v) in [(3, 2), (4, 4), (5, 6)] {
        let p = ExtremalProblem::new(MatroidDescriptor::Dowling { n: n - 1, group: "Z1".into() }, clique(3));
        c.ex(p, v, &opts)?;
    }
    for (n, v) in [(2, 2), (3, 4), (4, 8), (5, 12)] {
        c.ex(ExtremalProblem::dowling(n, &grp("Z2"), clique(3)), v, &opts)?;
    }
    for (n, v) in [(3, 5), (4, 8)] {
        c.ex(ExtremalProblem::dowling(n, &grp("Z3"), clique(3)), v, &opts)?;
    }
    for label in ["Z4", "Z2xZ2"] {
        for (n, v) in [(3, 6), (4, 12)] {
            c.ex(ExtremalProblem::dowling(n, &grp(label), clique(3)), v, &opts)?;
        }
    }
    c.outcome()
}

fn mantel_uniqueness() -> Outcome {
    let mut c = Checks::default();
    let opts = SearchOptions::default();
    let z2 = grp("Z2");
    let p4 = ExtremalProblem::dowling(4, &z2, clique(3));
    let classes = classify_extremal(&p4, 8, Some(Equivalence::GainGraph), &opts).map_err(|e| e.to_string())?;
    let d4 = DowlingGeometry::new(4, Arc::new(z2.clone())).unwrap();
    let k22 = bipartite_z2(2, 2).unwrap();
    let same = classes.len() == 1
        && is_isomorphic(&d4.induced_graph(classes[0].representative.iter().copied().collect()), &k22).unwrap();
    c.check(format!("n = 4: one gain-graph class equal to K_{{2,2}}^Z2, observed {} classes", classes.len()), same);
    let p3 = ExtremalProblem::dowling(3, &z2, clique(3));
    let classes = classify_extremal(&p3, 4, Some(Equivalence::Switching), &opts).map_err(|e| e.to_string())?;
    c.check(format!("n = 3: 4 switching classes, observed {}", classes.len()), classes.len() == 4);
    c.outcome()
}

fn z2_k4() -> Outcome {
    let mut c = Checks::default();
    let opts = SearchOptions::default();
    let z2 = grp("Z2");
    for (n, v) in [(3, 7), (4, 12), (5, 18)] {
        c.ex(ExtremalProblem::dowling(n, &z2, clique(4)), v, &opts)?;
    }
    let p = ExtremalProblem::dowling(4, &z2, clique(4));
    let classes = classify_extremal(&p, 12, Some(Equivalence::Switching), &opts).map_err(|e| e.to_string())?;
    let host = MatroidDescriptor::dowling(4, &z2).build().unwrap();
    let mut lines: Vec<usize> = classes
        .iter()
        .map(|cl| {
            let r = Restriction::new(host.clone(), cl.representative.iter().copied().collect()).unwrap();
            count_lines(&r, 4).unwrap()
        })
        .collect();
    lines.sort();
    c.check(format!("n = 4 classes by U_{{2,4}} count: expected [0, 4], observed {lines:?}"), lines == [0, 4]);
    c.outcome()
}

/// The three regimes of the long-line theorem, restated.
fn long_line_formula(n: usize, order: usize, ell: usize) -> usize {
    if ell >= order + 3 {
        order * c2(n) + n
    } else if ell == order + 2 {
        order * c2(n) + 1
    } else {
        (ell - 1) * c2(n)
    }
}

fn long_lines() -> Outcome {
    let mut c = Checks::default();
    let opts = SearchOptions::default();
    for (label, n_max) in [("Z2", 4), ("Z3", 3), ("Z4", 3)] {
        let g = grp(label);
        for n in 2..=n_max {
            for ell in 4..=6 {
                let p = ExtremalProblem::dowling(n, &g, MatroidDescriptor::Line { points: ell });
                c.ex(p, long_line_formula(n, g.order(), ell), &opts)?;
            }
        }
    }
    // every extremal set at (Z3, 4, 3) takes exactly 3 points from each very long line
    let z3 = grp("Z3");
    let p = ExtremalProblem::dowling(3, &z3, MatroidDescriptor::Line { points: 4 });
    let sets = dowling::extremal::extremal_sets(&p, 9, &opts).map_err(|e| e.to_string())?;
    let d = DowlingGeometry::new(3, Arc::new(z3)).unwrap();
    let lines = d.very_long_lines().unwrap();
    let all = sets.iter().all(|s| lines.iter().all(|l| (*s & *l - d.joints()).len() == 3 && (*s & d.joints()).is_empty()));
    c.check(format!("{} extremal sets at (Z3, 4, 3) take 3 points per very long line", sets.len()), all && !sets.is_empty());
    c.outcome()
}

fn subgeometries() -> Outcome {
    let mut c = Checks::default();
    let opts = SearchOptions::default();
    let z2 = grp("Z2");
    let q3z2 = MatroidDescriptor::dowling(3, &z2);
    for (label, n, v) in [("Z2", 3, 8), ("Z2", 4, 14), ("Z4", 3, 14)] {
        let g = grp(label);
        let p = ExtremalProblem::dowling(n, &g, q3z2.clone()).with_detection(Detection::JointAnchored);
        c.ex(p.clone(), v, &opts)?;
        // the joint deletion Q_n \ {b_1, .., b_{n-2}}
        let d = DowlingGeometry::new(n, Arc::new(g)).unwrap();
        let mut witness = d.ground();
        for i in 0..n - 2 {
            witness.remove(d.joint_id(i));
        }
        let cert = verify_ex(&p, v, witness, &opts).map_err(|e| e.to_string())?;
        c.check(format!("joint deletion witnesses {}", p.key()), cert.is_certified());
    }
    c.outcome()
}

fn z2z2_lemmas() -> Outcome {
    let mut c = Checks::default();
    let a = verify_lemma_432().map_err(|e| e.to_string())?;
    c.check(format!("432: {}/{} (expected 24/24)", a.passed, a.cases), a.all_passed() && a.cases == 24);
    let b = verify_lemma_233332().map_err(|e| e.to_string())?;
    c.check(format!("233332: {}/{} (expected 9216/9216)", b.passed, b.cases), b.all_passed() && b.cases == 9216);
    c.outcome()
}

fn graph_free(c: &mut Checks, name: &str, g: &GainGraph, forbidden: &MatroidDescriptor, size: usize) {
    let d = DowlingGeometry::new(g.n_vertices(), g.group().clone()).unwrap();
    let kept = d.subset_of(g).unwrap();
    let host = MatroidDescriptor::dowling(g.n_vertices(), g.group());
    let free = find_forbidden(&host, forbidden, kept).unwrap().is_none();
    c.check(format!("{name}: size {} (expected {size}), free of {forbidden}: {free}", g.len()), free && g.len() == size);
}

fn construction_freeness() -> Outcome {
    let mut c = Checks::default();
    for a in 1..=3 {
        for b in 1..=3 {
            graph_free(&mut c, &format!("bipartite_z2({a}, {b})"), &bipartite_z2(a, b).unwrap(), &clique(3), 2 * a * b);
        }
    }
    for n in 2..=6 {
        graph_free(&mut c, &format!("mantel_z3({n})"), &mantel_z3(n).unwrap(), &clique(3), (n * n).div_ceil(2));
        for label in ["Z4", "Z2xZ2"] {
            let g = good_pair_graph(Arc::new(grp(label)), n).unwrap();
            graph_free(&mut c, &format!("good_pair_graph({label}, {n})"), &g, &clique(3), 2 * c2(n));
        }
    }
    for a in 1..=5 {
        for b in 1..=6 - a {
            let size = a + c2(a) + 2 * a * b;
            graph_free(&mut c, &format!("h_ab({a}, {b})"), &h_ab(a, b).unwrap(), &clique(4), size);
        }
    }
    // k4_lower, the 6-vertex restrictions of z4_k4free(13) and z2_kt_free run as theorem bundles
    let opts = TheoremOptions::default();
    for id in ["k4-lower", "z4-k4", "z2-kt"] {
        let r = verify_theorem(id, &opts).map_err(|e| e.to_string())?;
        for check in &r.checks {
            c.check(format!("{id}: {} (expected {}, observed {})", check.claim, check.expected, check.observed), check.passed);
        }
    }
    c.outcome()
}

fn lemma_t1() -> Outcome {
    let mut c = Checks::default();
    for (t, max) in [(5, 13), (6, 22)] {
        let r = verify_lemma_t1_vertices(t).map_err(|e| e.to_string())?;
        c.check(format!("t = {t}: maximum {:?}, expected {max}", r.maximum), r.maximum == Some(max));
    }
    // Without normalizing by switching: every subset of Q_4(Z2) holding a balanced K_4
    let z2 = Arc::new(grp("Z2"));
    let d = DowlingGeometry::new(4, z2.clone()).unwrap();
    let (k4, looped, centred) = (balanced_clique(4, z2), looped_clique(4), centred_clique(4));
    let mut best = 0;
    for s in 0u128..1 << d.size() {
        let s = ElementSet(s);
        if s.len() <= best {
            continue;
        }
        let g = d.induced_graph(s);
        if has_balanced_copy(&g, &k4).unwrap().is_some()
            && has_balanced_copy(&g, &looped).unwrap().is_none()
            && has_balanced_copy(&g, &centred).unwrap().is_none()
        {
            best = s.len();
        }
    }
    c.check(format!("t = 5 over all 2^16 subsets of Q_4(Z2): maximum {best}, expected 13"), best == 13);
    c.outcome()
}

fn relative_density() -> Outcome {
    let mut c = Checks::default();
    let r = verify_theorem("ess-relative", &TheoremOptions::default()).map_err(|e| e.to_string())?;
    for check in &r.checks {
        c.check(check.claim.clone(), check.passed);
    }
    c.check("at least 30 subgroup inequalities checked", r.checks.len() >= 30);
    c.outcome()
}

fn appendix() -> Outcome {
    let mut c = Checks::default();
    let opts = SearchOptions::default();
    let ms = |r, n| MatroidDescriptor::Matchstick { rank: r, n };
    let og = |r, n| MatroidDescriptor::Origami { rank: r, n };
    c.ex(ExtremalProblem::new(ms(4, 3), ms(2, 2)), 4, &opts)?;
    c.ex(ExtremalProblem::new(ms(5, 3), ms(4, 2)), 7, &opts)?;
    c.ex(ExtremalProblem::new(og(4, 3), MatroidDescriptor::Free { size: 3 }), 4, &opts)?;
    c.ex(ExtremalProblem::new(og(4, 3), MatroidDescriptor::Line { points: 3 }), 4, &opts)?;
    c.ex(ExtremalProblem::new(og(4, 3), og(3, 3)), 9, &opts)?;
    c.ex(ExtremalProblem::new(og(4, 3), og(3, 2)), 8, &opts)?;
    let seed = 20;
    let fm = origami(4, 3).unwrap();
    let vm = origami_vectors(4, 3, seed).unwrap();
    let agree = (0u128..1 << fm.size()).all(|s| fm.rank(ElementSet(s)) == vm.rank(ElementSet(s)));
    c.check(format!("origami oracle agrees with generic vectors on all 2^{} subsets (seed {seed})", fm.size()), agree);
    c.outcome()
}

fn properties() -> Outcome {
    let mut c = Checks::default();
    // rank axioms
    let hosts: Vec<(String, dowling::Matroid)> = vec![
        ("Q_3(Z2)".into(), MatroidDescriptor::dowling(3, &grp("Z2")).build().unwrap()),
        ("Q_3(Z3)".into(), MatroidDescriptor::dowling(3, &grp("Z3")).build().unwrap()),
        ("O_4(3)".into(), Arc::new(origami(4, 3).unwrap())),
        ("M_5(3)".into(), matchstick(5, 3).unwrap()),
    ];
    for (name, m) in &hosts {
        let r = check_rank_axioms(m.as_ref());
        c.check(format!("rank axioms on {name}: {r:?}"), r.is_ok());
    }
    // switching leaves the frame matroid unchanged
    for (label, n) in [("Z3", 3), ("Z2", 3), ("Z4", 2)] {
        let g = GainGraph::complete(n, Arc::new(grp(label)));
        let order = g.group().order();
        let fm = FrameMatroid::new(g.clone()).unwrap();
        let mut all = true;
        for code in 0..order.pow(n as u32) {
            let eta: Vec<usize> = (0..n).map(|v| code / order.pow(v as u32) % order).collect();
            let sw = FrameMatroid::new(g.switch_all(&eta).unwrap()).unwrap();
            all &= (0u128..1 << fm.size()).all(|s| fm.rank(ElementSet(s)) == sw.rank(ElementSet(s)));
        }
        c.check(format!("switching invariance on K_{n}^{label}"), all);
    }
    // circuit catalog against rank circuits
    for (label, n) in [("Z2", 3), ("Z3", 3), ("Z1", 5), ("Z2", 4)] {
        let g = GainGraph::complete(n, Arc::new(grp(label)));
        let fm = FrameMatroid::new(g.clone()).unwrap();
        let bad = (0u128..1 << fm.size())
            .map(ElementSet)
            .filter(|&s| (classify_circuit(&g, s) != CircuitKind::NotACircuit) != is_circuit(&fm, s))
            .count();
        c.check(format!("circuit catalog on K_{n}^{label}: {bad} disagreements"), bad == 0);
    }
    // pattern against embedding on every Z2-gain graph inside Q_4(Z2) with at most 12 edges
    let d = DowlingGeometry::new(4, Arc::new(grp("Z2"))).unwrap();
    let (k3, k4) = (Graphic::complete(3), Graphic::complete(4));
    let mut disagreements = 0;
    let mut total = 0;
    for k in 0..=12 {
        for_each_subset_of_size(d.ground(), k, |s| {
            let g = d.induced_graph(s);
            let fm = FrameMatroid::new(g.clone()).unwrap();
            for (t, m) in [(3, &k3), (4, &k4)] {
                total += 1;
                let by_pattern = has_clique_restriction(&g, t).unwrap();
                let by_embedding = find_embedding(&fm, m, fm.ground()).is_some();
                disagreements += usize::from(by_pattern != by_embedding);
            }
        });
    }
    c.check(format!("pattern vs embedding: {disagreements} disagreements in {total} tests"), disagreements == 0);
    // density monotonicity
    let opts = SearchOptions::default();
    for (label, t, n_max) in [("Z1", 3, 5), ("Z2", 3, 5), ("Z3", 3, 4), ("Z2", 4, 5), ("Z4", 3, 4)] {
        let rows = density_table(&grp(label), &clique(t), n_max, &opts).map_err(|e| e.to_string())?;
        c.check(
            format!("densities for ({label}, clique:{t}) non-increasing and certified"),
            is_non_increasing(&rows) && rows.iter().all(|r| r.certified),
        );
    }
    // certificate idempotence and parallel/serial determinism
    let mut certs = Vec::new();
    for (label, n, f) in [("Z2", 4, clique(3)), ("Z3", 3, clique(4)), ("Z2", 3, MatroidDescriptor::Line { points: 4 })] {
        let p = ExtremalProblem::dowling(n, &grp(label), f);
        let parallel = ex_exhaustive(&p, &SearchOptions { jobs: 4, ..SearchOptions::default() }).map_err(|e| e.to_string())?;
        let serial = ex_exhaustive(&p, &SearchOptions::serial()).map_err(|e| e.to_string())?;
        c.check(format!("parallel and serial agree on {}", p.key()), parallel.same_result(&serial));
        certs.push(parallel);
    }
    for cert in &certs {
        let again = cert.recheck(&SearchOptions::default()).map_err(|e| e.to_string())?;
        c.check(format!("recheck of {} passes", cert.problem), again.is_certified() && again.value == cert.value);
    }
    c.outcome()
}

fn main() {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("Mantel family values", mantel),
        ("triangle-free extremal classes", mantel_uniqueness),
        ("K4 over Z2", z2_k4),
        ("long lines", long_lines),
        ("subgeometries", subgeometries),
        ("Z2xZ2 lemmas", z2z2_lemmas),
        ("construction freeness", construction_freeness),
        ("t-1 vertex lemma", lemma_t1),
        ("relative density", relative_density),
        ("matchstick and origami", appendix),
        ("property suites", properties),
    ];
    let only: Vec<usize> = std::env::args().filter_map(|a| a.parse().ok()).collect();
    let mut failed = Vec::new();
    let mut summary = BTreeMap::new();
    for (i, (title, run)) in criteria.iter().enumerate() {
        let number = i + 1;
        if !only.is_empty() && !only.contains(&number) {
            continue;
        }
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let (ok, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
        let mark = if ok { "PASS" } else { "FAIL" };
        println!("criterion {number:>2} {mark} {title} [{secs:.1}s]: {detail}");
        summary.insert(number, ok);
        if !ok {
            failed.push(number);
        }
    }
    println!("acceptance: {} passed, {} failed {:?}", summary.values().filter(|&&b| b).count(), failed.len(), failed);
    if !failed.is_empty() {
        std::process::exit(1);
    }
}
