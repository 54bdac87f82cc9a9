//! Switching isomorphism, balanced copies, and catalogs of gain-graphic cliques.

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::frame::{classify_circuit, DowlingGeometry, FrameMatroid};
use crate::gain::{EdgeKind, GainGraph, Vertex};
use crate::group::{GroupElement, GroupTable, IDENTITY};
use crate::matroid::{find_isomorphism, Graphic, Matroid, RankOracle, Uniform};
use serde::Serialize;
use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

/// Vertex bound for isomorphism tests between gain graphs.
pub const ISOMORPHISM_VERTEX_LIMIT: usize = 8;
/// Edge bound for the pattern in [`has_balanced_copy`].
pub const PATTERN_EDGE_LIMIT: usize = 36;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Match {
    Equal,
    Within,
}

/// Per-pair gain lists and per-vertex joint counts of a graph.
struct Profile {
    n: usize,
    gains: Vec<Vec<Vec<GroupElement>>>,
    joints: Vec<usize>,
    degree: Vec<usize>,
}

impl Profile {
    fn new(g: &GainGraph) -> Self {
        let n = g.n_vertices();
        let mut gains = vec![vec![Vec::new(); n]; n];
        let mut joints = vec![0; n];
        let mut degree = vec![0; n];
        let grp = g.group();
        for e in g.edges() {
            match e.kind {
                EdgeKind::Link { tail, head, gain } => {
                    gains[tail][head].push(gain);
                    gains[head][tail].push(grp.inv(gain));
                    degree[tail] += 1;
                    degree[head] += 1;
                }
                EdgeKind::Joint { vertex } => {
                    joints[vertex] += 1;
                    degree[vertex] += 1;
                }
            }
        }
        for row in &mut gains {
            for l in row {
                l.sort_unstable();
            }
        }
        Profile { n, gains, joints, degree }
    }
}

fn within(small: &[GroupElement], big: &[GroupElement]) -> bool {
    let mut j = 0;
    for &x in small {
        while j < big.len() && big[j] < x {
            j += 1;
        }
        if j == big.len() || big[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// Backtracking over vertex images and switching values of the pattern `a` into `b`.
struct Search<'a> {
    group: &'a GroupTable,
    a: &'a Profile,
    b: &'a Profile,
    order: Vec<Vertex>,
    mode: Match,
    switching: bool,
    pi: Vec<Option<Vertex>>,
    eta: Vec<GroupElement>,
    used: Vec<bool>,
    scratch: Vec<GroupElement>,
}

impl<'a> Search<'a> {
    fn new(group: &'a GroupTable, a: &'a Profile, b: &'a Profile, mode: Match, switching: bool) -> Self {
        // Pattern vertices with the most incidences first; isolated ones are skipped when embedding.
        let mut order: Vec<Vertex> = (0..a.n).filter(|&v| mode == Match::Equal || a.degree[v] > 0).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(a.degree[v]));
        Search {
            group,
            a,
            b,
            order,
            mode,
            switching,
            pi: vec![None; a.n],
            eta: vec![IDENTITY; a.n],
            used: vec![false; b.n],
            scratch: Vec::new(),
        }
    }

    fn consistent(&mut self, v: Vertex) -> bool {
        let w = self.pi[v].unwrap();
        let joints_ok = match self.mode {
            Match::Equal => self.a.joints[v] == self.b.joints[w] && self.a.degree[v] == self.b.degree[w],
            Match::Within => self.a.joints[v] <= self.b.joints[w] && self.a.degree[v] <= self.b.degree[w],
        };
        if !joints_ok {
            return false;
        }
        for u in 0..self.a.n {
            let Some(x) = self.pi[u] else { continue };
            if u == v {
                continue;
            }
            let src = &self.a.gains[u][v];
            let dst = &self.b.gains[x][w];
            let fits = match self.mode {
                Match::Equal => src.len() == dst.len(),
                Match::Within => src.len() <= dst.len(),
            };
            if !fits {
                return false;
            }
            if src.is_empty() {
                continue;
            }
            let g = self.group;
            let (eu, ev) = (g.inv(self.eta[u]), self.eta[v]);
            self.scratch.clear();
            self.scratch.extend(src.iter().map(|&s| g.mul(g.mul(eu, s), ev)));
            self.scratch.sort_unstable();
            let ok = match self.mode {
                Match::Equal => self.scratch == *dst,
                Match::Within => within(&self.scratch, dst),
            };
            if !ok {
                return false;
            }
        }
        true
    }

    /// Calls `visit` on every complete assignment; stops when it returns `false`.
    fn run(&mut self, depth: usize, visit: &mut dyn FnMut(&[Option<Vertex>], &[GroupElement]) -> bool) -> bool {
        if depth == self.order.len() {
            return visit(&self.pi, &self.eta);
        }
        let v = self.order[depth];
        let etas = if self.switching { self.group.order() } else { 1 };
        for w in 0..self.b.n {
            if self.used[w] {
                continue;
            }
            self.pi[v] = Some(w);
            self.used[w] = true;
            for x in 0..etas {
                self.eta[v] = x;
                if self.consistent(v) && !self.run(depth + 1, visit) {
                    self.used[w] = false;
                    self.pi[v] = None;
                    return false;
                }
            }
            self.eta[v] = IDENTITY;
            self.used[w] = false;
            self.pi[v] = None;
        }
        true
    }
}

fn check_size(g: &GainGraph) -> Result<()> {
    if g.n_vertices() > ISOMORPHISM_VERTEX_LIMIT {
        return Err(Error::TooLarge { what: "gain graph vertices", size: g.n_vertices(), bound: ISOMORPHISM_VERTEX_LIMIT });
    }
    Ok(())
}

fn isomorphic(a: &GainGraph, b: &GainGraph, switching: bool) -> Result<bool> {
    check_size(a)?;
    check_size(b)?;
    if **a.group() != **b.group() || a.n_vertices() != b.n_vertices() || a.len() != b.len() {
        return Ok(false);
    }
    let (pa, pb) = (Profile::new(a), Profile::new(b));
    let mut da = pa.degree.clone();
    let mut db = pb.degree.clone();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    let mut found = false;
    Search::new(a.group(), &pa, &pb, Match::Equal, switching).run(0, &mut |_, _| {
        found = true;
        false
    });
    Ok(found)
}

/// Whether a vertex bijection combined with a switching maps `a` onto `b`.
pub fn is_switching_isomorphic(a: &GainGraph, b: &GainGraph) -> Result<bool> {
    isomorphic(a, b, true)
}

/// Whether a vertex bijection alone maps `a` onto `b` (gains compared as given).
pub fn is_isomorphic(a: &GainGraph, b: &GainGraph) -> Result<bool> {
    isomorphic(a, b, false)
}

/// Positions in `g` realizing one assignment of the pattern `h`.
fn edge_image(g: &GainGraph, h: &GainGraph, pi: &[Option<Vertex>], eta: &[GroupElement]) -> Vec<usize> {
    let grp = g.group();
    let mut taken = vec![false; g.len()];
    let mut map = Vec::with_capacity(h.len());
    for e in h.edges() {
        let want = match e.kind {
            EdgeKind::Link { tail, head, gain } => {
                let x = grp.mul(grp.mul(grp.inv(eta[tail]), gain), eta[head]);
                let (s, t) = (pi[tail].unwrap(), pi[head].unwrap());
                if s < t {
                    EdgeKind::Link { tail: s, head: t, gain: x }
                } else {
                    EdgeKind::Link { tail: t, head: s, gain: grp.inv(x) }
                }
            }
            EdgeKind::Joint { vertex } => EdgeKind::Joint { vertex: pi[vertex].unwrap() },
        };
        let p = g
            .edges()
            .iter()
            .enumerate()
            .position(|(p, f)| f.kind == want && !taken[p])
            .expect("assignment was checked against the gain lists");
        taken[p] = true;
        map.push(p);
    }
    map
}

fn check_pattern(g: &GainGraph, h: &GainGraph) -> Result<()> {
    if h.len() > PATTERN_EDGE_LIMIT {
        return Err(Error::TooLarge { what: "pattern edges", size: h.len(), bound: PATTERN_EDGE_LIMIT });
    }
    if **g.group() != **h.group() {
        return Err(Error::InvalidGraph("pattern and host use different groups".into()));
    }
    Ok(())
}

/// A subgraph of `g` switching-isomorphic to `h`, as `map[e] = position in g` for each
/// edge position `e` of `h`. Isolated vertices of `h` are ignored.
pub fn has_balanced_copy(g: &GainGraph, h: &GainGraph) -> Result<Option<Vec<usize>>> {
    check_pattern(g, h)?;
    let (pg, ph) = (Profile::new(g), Profile::new(h));
    let mut out = None;
    Search::new(g.group(), &ph, &pg, Match::Within, true).run(0, &mut |pi, eta| {
        out = Some(edge_image(g, h, pi, eta));
        false
    });
    Ok(out)
}

/// Every edge set of `g` (as positions) that forms a copy of `h` up to switching.
pub fn balanced_copies(g: &GainGraph, h: &GainGraph) -> Result<BTreeSet<ElementSet>> {
    check_pattern(g, h)?;
    if g.len() > crate::bitset::MAX_ELEMENTS {
        return Err(Error::TooLarge { what: "host edges", size: g.len(), bound: crate::bitset::MAX_ELEMENTS });
    }
    let (pg, ph) = (Profile::new(g), Profile::new(h));
    let mut out = BTreeSet::new();
    Search::new(g.group(), &ph, &pg, Match::Within, true).run(0, &mut |pi, eta| {
        out.insert(edge_image(g, h, pi, eta).into_iter().collect());
        true
    });
    Ok(out)
}

/// A named gain graph in a catalog.
#[derive(Clone, Debug, Serialize)]
pub struct Pattern {
    pub name: String,
    #[serde(serialize_with = "graph_as_json")]
    pub graph: GainGraph,
}

fn graph_as_json<S: serde::Serializer>(g: &GainGraph, s: S) -> std::result::Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&g.to_json(), s)
}

/// Gain graphs whose frame matroids are all isomorphic to one declared matroid.
#[derive(Clone, Serialize)]
pub struct PatternCatalog {
    pub matroid: String,
    pub patterns: Vec<Pattern>,
}

impl PatternCatalog {
    /// Checks every frame matroid against `declared` before accepting the catalog.
    pub fn new(matroid: String, declared: &dyn RankOracle, patterns: Vec<Pattern>) -> Result<Self> {
        for p in &patterns {
            let fm = FrameMatroid::new(p.graph.clone())?;
            if find_isomorphism(&fm, declared).is_none() {
                return Err(Error::InvalidGraph(format!("{} does not realize {matroid}", p.name)));
            }
        }
        Ok(PatternCatalog { matroid, patterns })
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&GainGraph> {
        self.patterns.iter().find(|p| p.name == name).map(|p| &p.graph)
    }
}

fn z2() -> Arc<GroupTable> {
    Arc::new(GroupTable::cyclic(2).expect("order 2"))
}

/// `K_t` with every link labelled by the identity.
pub fn balanced_clique(t: usize, group: Arc<GroupTable>) -> GainGraph {
    let mut g = GainGraph::new(group, t);
    for i in 0..t {
        for j in i + 1..t {
            g.add_link(i, j, IDENTITY).expect("valid link");
        }
    }
    g
}

/// `K_s^1`: the balanced clique on `s` vertices with a joint at every vertex.
pub fn looped_clique(s: usize) -> GainGraph {
    let mut g = balanced_clique(s, z2());
    for v in 0..s {
        g.add_joint(v).expect("valid joint");
    }
    g
}

/// `H_s`: a joint at the first vertex, both labels from it to every other vertex, and
/// identity links among the rest.
pub fn centred_clique(s: usize) -> GainGraph {
    let mut g = GainGraph::new(z2(), s);
    g.add_joint(0).expect("valid joint");
    for i in 1..s {
        g.add_link(0, i, 0).expect("valid link");
        g.add_link(0, i, 1).expect("valid link");
    }
    for i in 1..s {
        for j in i + 1..s {
            g.add_link(i, j, 0).expect("valid link");
        }
    }
    g
}

/// `C_3^{Z2}`: both labels on every pair of a triangle, no joints.
pub fn doubled_triangle() -> GainGraph {
    let mut g = GainGraph::new(z2(), 3);
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        g.add_link(i, j, 0).expect("valid link");
        g.add_link(i, j, 1).expect("valid link");
    }
    g
}

/// The Z₂-gain graphs realizing `M(K_t)` up to switching isomorphism.
pub fn clique_realizations_z2(t: usize) -> Result<PatternCatalog> {
    if !(3..=8).contains(&t) {
        return Err(Error::InvalidParameters(format!("clique catalog needs 3 <= t <= 8, got {t}")));
    }
    static BUILT: [OnceLock<PatternCatalog>; 9] = [const { OnceLock::new() }; 9];
    if let Some(c) = BUILT[t].get() {
        return Ok(c.clone());
    }
    let c = build_clique_catalog(t)?;
    Ok(BUILT[t].get_or_init(|| c).clone())
}

fn build_clique_catalog(t: usize) -> Result<PatternCatalog> {
    let mut patterns = vec![
        Pattern { name: format!("K_{t}"), graph: balanced_clique(t, z2()) },
        Pattern { name: format!("K_{}^1", t - 1), graph: looped_clique(t - 1) },
        Pattern { name: format!("H_{}", t - 1), graph: centred_clique(t - 1) },
    ];
    if t == 4 {
        patterns.push(Pattern { name: "C3^Z2".into(), graph: doubled_triangle() });
    }
    patterns.sort_by_key(|p| std::cmp::Reverse(p.graph.len()));
    PatternCatalog::new(format!("M(K_{t})"), &Graphic::complete(t), patterns)
}

fn require_z2(g: &GainGraph) -> Result<()> {
    if g.group().order() != 2 {
        return Err(Error::InvalidGraph("clique patterns are catalogued over Z2 only".into()));
    }
    Ok(())
}

/// Whether the Z₂-gain graph `g` has a balanced copy of some realization of `M(K_t)`.
pub fn has_clique_restriction(g: &GainGraph, t: usize) -> Result<bool> {
    require_z2(g)?;
    let cat = clique_realizations_z2(t)?;
    for p in &cat.patterns {
        if has_balanced_copy(g, &p.graph)?.is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Edge sets (positions in `g`) of all copies of `M(K_t)` found through the catalog.
pub fn clique_copies_z2(g: &GainGraph, t: usize) -> Result<BTreeSet<ElementSet>> {
    require_z2(g)?;
    let cat = clique_realizations_z2(t)?;
    let mut out = BTreeSet::new();
    for p in &cat.patterns {
        out.extend(balanced_copies(g, &p.graph)?);
    }
    Ok(out)
}

/// All gain graphs on at most three vertices over `group` whose frame matroid is `U_{2,3}`,
/// one per switching-isomorphism class.
pub fn triangle_realizations(group: &GroupTable) -> Result<PatternCatalog> {
    if group.order() > 8 {
        return Err(Error::GroupTooLarge { order: group.order(), bound: 8 });
    }
    let d = DowlingGeometry::new(3, Arc::new(group.clone()))?;
    let mut reps: Vec<Pattern> = Vec::new();
    let mut result = Ok(());
    crate::bitset::for_each_subset_of_size(d.ground(), 3, |s| {
        if result.is_err() || !crate::matroid::is_circuit(&d, s) {
            return;
        }
        let g = d.induced_graph(s).with_fresh_ids();
        for r in &reps {
            match is_switching_isomorphic(&r.graph, &g) {
                Ok(true) => return,
                Ok(false) => {}
                Err(e) => {
                    result = Err(e);
                    return;
                }
            }
        }
        let kind = classify_circuit(&g, ElementSet::full(3));
        let base = serde_json::to_value(kind).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
        let same = reps.iter().filter(|r| r.name.split('#').next() == Some(base.as_str())).count();
        let name = if same == 0 { base } else { format!("{base}#{}", same + 1) };
        reps.push(Pattern { name, graph: g });
    });
    result?;
    PatternCatalog::new("U_{2,3}".into(), &Uniform::new(2, 3)?, reps)
}

/// Gain graphs over `group` realizing `M(K_t)`, one per switching-isomorphism class.
///
/// `M(K_t)` is connected of rank `t − 1`, so every realization spans at most `t` vertices
/// and appears as an image inside `Q_t(group)`.
pub fn clique_realizations(group: &GroupTable, t: usize) -> Result<PatternCatalog> {
    if !(3..=4).contains(&t) {
        return Err(Error::InvalidParameters(format!("general clique catalog needs 3 <= t <= 4, got {t}")));
    }
    if group.order() > 8 {
        return Err(Error::GroupTooLarge { order: group.order(), bound: 8 });
    }
    let d = DowlingGeometry::new(t, Arc::new(group.clone()))?;
    let declared = Graphic::complete(t);
    let mut reps: Vec<Pattern> = Vec::new();
    for s in crate::matroid::embedding_images(&d, &declared, d.ground())? {
        let g = d.induced_graph(s).compacted().with_fresh_ids();
        let mut seen = false;
        for r in &reps {
            if r.graph.n_vertices() == g.n_vertices() && is_switching_isomorphic(&r.graph, &g)? {
                seen = true;
                break;
            }
        }
        if !seen {
            let name = format!("K_{t}#{}", reps.len() + 1);
            reps.push(Pattern { name, graph: g });
        }
    }
    reps.sort_by_key(|p| std::cmp::Reverse(p.graph.len()));
    PatternCatalog::new(format!("M(K_{t})"), &declared, reps)
}

/// Whether `g` has a balanced copy of some pattern in `catalog`.
pub fn has_catalog_copy(g: &GainGraph, catalog: &PatternCatalog) -> Result<bool> {
    for p in &catalog.patterns {
        if has_balanced_copy(g, &p.graph)?.is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Whether `FM(g)` has an `M(K_t)` restriction, found through a catalog of realizations.
///
/// Works for any number of edges: Z₂ with `3 <= t <= 8`, other groups with `t <= 4`.
pub fn has_clique_copy(g: &GainGraph, t: usize) -> Result<bool> {
    if g.group().order() == 2 {
        has_clique_restriction(g, t)
    } else {
        has_catalog_copy(g, &clique_realizations(g.group(), t)?)
    }
}

/// The matroid-level declaration of a catalog, for callers that need the oracle.
pub fn declared_clique(t: usize) -> Matroid {
    Arc::new(Graphic::complete(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::has_submatroid;

    fn graph(label: &str, n: usize, links: &[(usize, usize, usize)], joints: &[usize]) -> GainGraph {
        let mut g = GainGraph::new(Arc::new(GroupTable::from_label(label).unwrap()), n);
        for &(i, j, x) in links {
            g.add_link(i, j, x).unwrap();
        }
        for &v in joints {
            g.add_joint(v).unwrap();
        }
        g
    }

    /// The four U_{3,4} presentations inside K_3^{Z2}.
    fn u34_graphs() -> Vec<GainGraph> {
        vec![
            graph("Z2", 3, &[(0, 1, 0), (0, 1, 1), (1, 2, 0), (1, 2, 1)], &[]),
            graph("Z2", 3, &[(0, 1, 0), (0, 1, 1), (1, 2, 0)], &[2]),
            graph("Z2", 3, &[(0, 1, 0), (1, 2, 0), (0, 2, 1)], &[2]),
            graph("Z2", 3, &[(0, 1, 0), (1, 2, 0)], &[0, 2]),
        ]
    }

    #[test]
    fn four_u34_presentations_are_distinct() {
        let gs = u34_graphs();
        for (i, a) in gs.iter().enumerate() {
            let fm = FrameMatroid::new(a.clone()).unwrap();
            assert!(crate::matroid::are_isomorphic(&fm, &Uniform::new(3, 4).unwrap()).unwrap());
            for (j, b) in gs.iter().enumerate() {
                assert_eq!(is_switching_isomorphic(a, b).unwrap(), i == j);
            }
        }
    }

    #[test]
    fn switching_preserves_class() {
        let g = graph("Z3", 4, &[(0, 1, 1), (1, 2, 2), (2, 3, 0), (0, 3, 1), (0, 2, 0)], &[1]);
        let s = g.switch_all(&[2, 1, 0, 2]).unwrap();
        assert!(is_switching_isomorphic(&g, &s).unwrap());
        let perm = graph("Z3", 4, &[(3, 2, 1), (2, 1, 2), (1, 0, 0), (3, 0, 1), (3, 1, 0)], &[2]);
        assert!(is_switching_isomorphic(&g, &perm).unwrap());
        assert!(is_isomorphic(&g, &perm).unwrap());
    }

    #[test]
    fn h3_is_not_doubled_triangle() {
        assert!(!is_switching_isomorphic(&centred_clique(3), &doubled_triangle()).unwrap());
    }

    #[test]
    fn catalog_sizes() {
        assert_eq!(clique_realizations_z2(3).unwrap().len(), 3);
        assert_eq!(clique_realizations_z2(4).unwrap().len(), 4);
        assert_eq!(clique_realizations_z2(5).unwrap().len(), 3);
        assert!(clique_realizations_z2(2).is_err());
        assert!(clique_realizations_z2(9).is_err());
        let cat = clique_realizations_z2(4).unwrap();
        for p in &cat.patterns {
            for q in cat.patterns.iter().filter(|q| q.graph.n_vertices() == p.graph.n_vertices()) {
                assert_eq!(is_switching_isomorphic(&p.graph, &q.graph).unwrap(), p.name == q.name);
            }
        }
    }

    #[test]
    fn general_catalog_matches_embedding_search() {
        assert_eq!(clique_realizations(&GroupTable::cyclic(2).unwrap(), 4).unwrap().len(), 4);
        let z3 = GroupTable::cyclic(3).unwrap();
        let cat = clique_realizations(&z3, 4).unwrap();
        let d = DowlingGeometry::new(4, Arc::new(z3)).unwrap();
        let mut state = 0x2545_f491_u64;
        for _ in 0..40 {
            let mut kept = ElementSet::EMPTY;
            for e in d.ground().iter() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                if state >> 61 < 4 {
                    kept.insert(e);
                }
            }
            let g = d.induced_graph(kept);
            let fm = FrameMatroid::new(g.clone()).unwrap();
            let direct = crate::matroid::find_embedding(&fm, &Graphic::complete(4), fm.ground()).is_some();
            assert_eq!(has_catalog_copy(&g, &cat).unwrap(), direct);
        }
    }

    #[test]
    fn balanced_copies_in_small_hosts() {
        let k22 = graph("Z2", 4, &[(0, 2, 0), (0, 2, 1), (0, 3, 0), (0, 3, 1), (1, 2, 0), (1, 2, 1), (1, 3, 0), (1, 3, 1)], &[]);
        for p in clique_realizations_z2(3).unwrap().patterns {
            assert!(has_balanced_copy(&k22, &p.graph).unwrap().is_none(), "{}", p.name);
        }
        assert!(!has_clique_restriction(&k22, 3).unwrap());
        let k3 = GainGraph::complete(3, z2());
        let map = has_balanced_copy(&k3, &balanced_clique(3, z2())).unwrap().unwrap();
        assert_eq!(map.len(), 3);
        let one = graph("Z2", 2, &[(0, 1, 1)], &[]);
        assert!(has_balanced_copy(&k22, &one).unwrap().is_some());
        assert!(has_balanced_copy(&GainGraph::new(z2(), 3), &one).unwrap().is_none());
        assert!(has_clique_restriction(&GainGraph::complete(4, z2()), 4).unwrap());
    }

    #[test]
    fn copies_match_embedding_images() {
        let d = DowlingGeometry::new(4, z2()).unwrap();
        for t in [3, 4] {
            let pattern = clique_copies_z2(d.graph(), t).unwrap();
            let images: BTreeSet<ElementSet> =
                crate::matroid::embedding_images(&d, &Graphic::complete(t), d.ground()).unwrap().into_iter().collect();
            assert_eq!(pattern, images, "t = {t}");
        }
    }

    #[test]
    fn h_ab_graphs_avoid_k4_patterns() {
        for a in 0..=5usize {
            for b in 0..=(5 - a) {
                if a + b == 0 {
                    continue;
                }
                let mut g = GainGraph::new(z2(), a + b);
                for i in 0..a {
                    g.add_joint(i).unwrap();
                    for j in i + 1..a {
                        g.add_link(i, j, 1).unwrap();
                    }
                    for j in a..a + b {
                        g.add_link(i, j, 0).unwrap();
                        g.add_link(i, j, 1).unwrap();
                    }
                }
                assert!(!has_clique_restriction(&g, 4).unwrap(), "H_{{{a},{b}}}");
                let fm = FrameMatroid::new(g).unwrap();
                if fm.size() <= 12 {
                    assert!(has_submatroid(&fm, &Graphic::complete(4)).unwrap().is_none());
                }
            }
        }
    }

    /// Orbits of the 3-circuits of Q_3(Γ) under vertex permutations and switchings,
    /// acting directly on element ids.
    fn orbit_count(label: &str) -> usize {
        let grp = Arc::new(GroupTable::from_label(label).unwrap());
        let d = DowlingGeometry::new(3, grp.clone()).unwrap();
        let m = grp.order();
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let act = |s: ElementSet, p: &[usize; 3], eta: &[usize; 3]| -> ElementSet {
            s.iter()
                .map(|e| match d.kind(e) {
                    EdgeKind::Joint { vertex } => d.joint_id(p[vertex]),
                    EdgeKind::Link { tail, head, gain } => {
                        let x = grp.mul(grp.mul(grp.inv(eta[tail]), gain), eta[head]);
                        d.link_id(p[tail], p[head], x)
                    }
                })
                .collect()
        };
        let mut seen = BTreeSet::new();
        let mut orbits = 0;
        crate::bitset::for_each_subset_of_size(d.ground(), 3, |s| {
            if !crate::matroid::is_circuit(&d, s) || seen.contains(&s) {
                return;
            }
            orbits += 1;
            for p in &perms {
                for code in 0..m * m * m {
                    let eta = [code % m, code / m % m, code / (m * m)];
                    seen.insert(act(s, p, &eta));
                }
            }
        });
        orbits
    }

    #[test]
    fn triangle_catalogs() {
        let count = |label: &str| triangle_realizations(&GroupTable::from_label(label).unwrap()).unwrap();
        let z1 = count("Z1");
        assert_eq!(z1.len(), 2);
        let z3 = count("Z3");
        assert!(z3.patterns.iter().any(|p| p.name == "unbalanced-theta"));
        assert!(!count("Z2").patterns.iter().any(|p| p.name.starts_with("unbalanced-theta")));
        for (label, classes) in [("Z1", 2), ("Z2", 3), ("Z3", 4), ("Z4", 5), ("Z2xZ2", 6)] {
            assert_eq!(count(label).len(), classes, "{label}");
            assert_eq!(orbit_count(label), classes, "{label}");
        }
    }

    #[test]
    fn oversize_rejected() {
        let big = GainGraph::new(z2(), 9);
        assert!(is_switching_isomorphic(&big, &big).is_err());
    }
}
