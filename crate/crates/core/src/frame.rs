//! Frame matroids of gain graphs and the Dowling geometries `Q_n(Γ)`.

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::gain::{Direction, EdgeKind, GainGraph, Vertex, WalkCycle};
use crate::group::{GroupElement, GroupTable, IDENTITY};
use crate::matroid::{find_isomorphism, rank_two_flats, Matroid, RankOracle, Restriction};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::sync::Arc;

/// Vertex bound for frame matroids (union-find state lives in fixed arrays).
pub const MAX_FRAME_VERTICES: usize = 64;

#[derive(Clone, Copy, Debug)]
struct Compiled {
    u: u8,
    v: u8,
    gain: u32,
    joint: bool,
}

/// The frame matroid `FM(G)` on the positions of `G.edges()`.
///
/// Rank of a set: touched vertices minus the number of balanced components, where a
/// component is balanced when it has no joint loop and every cycle has identity gain.
#[derive(Clone)]
pub struct FrameMatroid {
    graph: GainGraph,
    compiled: Vec<Compiled>,
}

impl FrameMatroid {
    pub fn new(graph: GainGraph) -> Result<Self> {
        if graph.n_vertices() > MAX_FRAME_VERTICES {
            return Err(Error::TooLarge { what: "gain graph", size: graph.n_vertices(), bound: MAX_FRAME_VERTICES });
        }
        if graph.len() > crate::bitset::MAX_ELEMENTS {
            return Err(Error::TooLarge { what: "gain graph", size: graph.len(), bound: crate::bitset::MAX_ELEMENTS });
        }
        let compiled = graph
            .edges()
            .iter()
            .map(|e| match e.kind {
                EdgeKind::Link { tail, head, gain } => {
                    Compiled { u: tail as u8, v: head as u8, gain: gain as u32, joint: false }
                }
                EdgeKind::Joint { vertex } => {
                    Compiled { u: vertex as u8, v: vertex as u8, gain: 0, joint: true }
                }
            })
            .collect();
        Ok(FrameMatroid { graph, compiled })
    }

    pub fn graph(&self) -> &GainGraph {
        &self.graph
    }
}

impl RankOracle for FrameMatroid {
    fn size(&self) -> usize {
        self.compiled.len()
    }

    fn rank(&self, s: ElementSet) -> usize {
        let group: &GroupTable = self.graph.group();
        let mut parent = [0u8; MAX_FRAME_VERTICES];
        let mut rel = [0u32; MAX_FRAME_VERTICES];
        let mut unbalanced = [false; MAX_FRAME_VERTICES];
        let mut touched = 0u64;
        // Potentials: phi(v) = phi(root) * rel(v) after compression.
        let find = |parent: &mut [u8; MAX_FRAME_VERTICES], rel: &mut [u32; MAX_FRAME_VERTICES], x: usize| {
            let mut path = [0u8; MAX_FRAME_VERTICES];
            let mut len = 0;
            let mut cur = x;
            while parent[cur] as usize != cur {
                path[len] = cur as u8;
                len += 1;
                cur = parent[cur] as usize;
            }
            let root = cur;
            for i in (0..len).rev() {
                let v = path[i] as usize;
                let p = parent[v] as usize;
                if p != root {
                    rel[v] = group.mul(rel[p] as usize, rel[v] as usize) as u32;
                    parent[v] = root as u8;
                }
            }
            (root, if x == root { IDENTITY } else { rel[x] as usize })
        };
        for e in s {
            let c = self.compiled[e];
            let (u, v) = (c.u as usize, c.v as usize);
            for w in [u, v] {
                if touched >> w & 1 == 0 {
                    touched |= 1 << w;
                    parent[w] = w as u8;
                    rel[w] = IDENTITY as u32;
                    unbalanced[w] = false;
                }
            }
            let (ru, pu) = find(&mut parent, &mut rel, u);
            if c.joint {
                unbalanced[ru] = true;
                continue;
            }
            let (rv, pv) = find(&mut parent, &mut rel, v);
            let expected = group.mul(pu, c.gain as usize);
            if ru == rv {
                if pv != expected {
                    unbalanced[ru] = true;
                }
            } else {
                parent[rv] = ru as u8;
                rel[rv] = group.mul(expected, group.inv(pv)) as u32;
                unbalanced[ru] |= unbalanced[rv];
            }
        }
        let mut rank = touched.count_ones() as usize;
        let mut t = touched;
        while t != 0 {
            let w = t.trailing_zeros() as usize;
            t &= t - 1;
            if parent[w] as usize == w && !unbalanced[w] {
                rank -= 1;
            }
        }
        rank
    }

    fn element_name(&self, e: usize) -> String {
        self.graph.edge_name(self.graph.edges()[e].kind)
    }
}

/// Structural type of an edge set, read off the circuit catalogue of frame matroids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CircuitKind {
    BalancedCycle,
    TightHandcuff,
    LooseHandcuff,
    UnbalancedTheta,
    NotACircuit,
}

/// Orders a 2-regular connected edge set into a closed walk.
fn cycle_walk(g: &GainGraph, positions: &[usize]) -> Option<WalkCycle> {
    let edges = g.edges();
    let first = edges[*positions.first()?];
    let start = first.kind.endpoints().0;
    let mut cur = start;
    let mut left: Vec<usize> = positions.to_vec();
    let mut steps = Vec::new();
    while !left.is_empty() {
        let i = left.iter().position(|&p| {
            let (a, b) = edges[p].kind.endpoints();
            a == cur || b == cur
        })?;
        let p = left.remove(i);
        let e = edges[p];
        let (a, b) = e.kind.endpoints();
        if a == cur {
            steps.push((e.id, Direction::Forward));
            cur = b;
        } else {
            steps.push((e.id, Direction::Backward));
            cur = a;
        }
    }
    (cur == start).then_some(WalkCycle { start, steps })
}

fn cycle_is_balanced(g: &GainGraph, cycle: ElementSet) -> bool {
    let pos = cycle.to_vec();
    if pos.iter().any(|&p| g.edges()[p].kind.is_joint()) {
        return false;
    }
    match cycle_walk(g, &pos) {
        Some(w) => g.cycle_gain(&w).is_ok_and(|x| x == IDENTITY),
        None => false,
    }
}

/// Classifies the edges at positions `s` of `g` without consulting the rank function.
pub fn classify_circuit(g: &GainGraph, s: ElementSet) -> CircuitKind {
    let edges = g.edges();
    if s.is_empty() || s.iter().any(|p| p >= edges.len()) {
        return CircuitKind::NotACircuit;
    }
    let n = g.n_vertices();
    let mut degree = vec![0usize; n];
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    // Spanning forest; edges closing a cycle (and loops) are the non-tree edges.
    let mut tree = Vec::new();
    let mut non_tree = Vec::new();
    for p in s {
        let (a, b) = edges[p].kind.endpoints();
        degree[a] += 1;
        degree[b] += 1;
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            non_tree.push(p);
        } else {
            parent[ra] = rb;
            tree.push(p);
        }
    }
    let touched: Vec<Vertex> = (0..n).filter(|&v| degree[v] > 0).collect();
    let root = find(&mut parent, touched[0]);
    if touched.iter().any(|&v| find(&mut parent, v) != root) {
        return CircuitKind::NotACircuit;
    }
    if touched.iter().any(|&v| degree[v] < 2) {
        return CircuitKind::NotACircuit;
    }
    let fundamental = |f: usize| -> ElementSet {
        let (a, b) = edges[f].kind.endpoints();
        let mut c = ElementSet::singleton(f);
        if a == b {
            return c;
        }
        // Tree path from a to b by depth-first search over tree edges.
        fn dfs(edges: &[crate::gain::GainEdge], tree: &[usize], cur: Vertex, target: Vertex, seen: &mut Vec<usize>, path: &mut Vec<usize>) -> bool {
            if cur == target {
                return true;
            }
            for &t in tree {
                if seen.contains(&t) {
                    continue;
                }
                let (x, y) = edges[t].kind.endpoints();
                let next = if x == cur { y } else if y == cur { x } else { continue };
                seen.push(t);
                path.push(t);
                if dfs(edges, tree, next, target, seen, path) {
                    return true;
                }
                path.pop();
            }
            false
        }
        let mut path = Vec::new();
        dfs(edges, &tree, a, b, &mut Vec::new(), &mut path);
        for t in path {
            c.insert(t);
        }
        c
    };
    match non_tree.len() {
        1 if touched.len() == s.len() => {
            if touched.iter().all(|&v| degree[v] == 2)
                && s.len() >= 2
                && cycle_is_balanced(g, s)
            {
                CircuitKind::BalancedCycle
            } else {
                CircuitKind::NotACircuit
            }
        }
        2 => {
            let c1 = fundamental(non_tree[0]);
            let c2 = fundamental(non_tree[1]);
            if !c1.is_disjoint(c2) {
                let c3 = ElementSet(c1.0 ^ c2.0);
                if [c1, c2, c3].iter().all(|&c| !cycle_is_balanced(g, c)) {
                    CircuitKind::UnbalancedTheta
                } else {
                    CircuitKind::NotACircuit
                }
            } else if cycle_is_balanced(g, c1) || cycle_is_balanced(g, c2) {
                CircuitKind::NotACircuit
            } else {
                let verts = |c: ElementSet| -> BTreeSet<Vertex> {
                    c.iter()
                        .flat_map(|p| {
                            let (a, b) = edges[p].kind.endpoints();
                            [a, b]
                        })
                        .collect()
                };
                if verts(c1).is_disjoint(&verts(c2)) {
                    CircuitKind::LooseHandcuff
                } else {
                    CircuitKind::TightHandcuff
                }
            }
        }
        _ => CircuitKind::NotACircuit,
    }
}

/// The Dowling geometry `Q_n(Γ) = FM(K_n^Γ)`.
///
/// Element ids: the link `x_{ij}` (`i < j`) is `pair_index(i, j) * |Γ| + x`, pairs in
/// lexicographic order; the joint `b_i` is `|Γ|·C(n,2) + i`.
#[derive(Clone)]
pub struct DowlingGeometry {
    n: usize,
    group: Arc<GroupTable>,
    frame: FrameMatroid,
}

impl DowlingGeometry {
    pub fn new(n: usize, group: Arc<GroupTable>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameters("Dowling geometry needs n >= 1".into()));
        }
        let size = group.order() * n * (n - 1) / 2 + n;
        if size > crate::bitset::MAX_ELEMENTS {
            return Err(Error::TooLarge { what: "Dowling geometry", size, bound: crate::bitset::MAX_ELEMENTS });
        }
        let frame = FrameMatroid::new(GainGraph::complete(n, group.clone()))?;
        Ok(DowlingGeometry { n, group, frame })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn frame(&self) -> &FrameMatroid {
        &self.frame
    }

    pub fn graph(&self) -> &GainGraph {
        self.frame.graph()
    }

    pub fn pair_index(&self, i: Vertex, j: Vertex) -> usize {
        debug_assert!(i < j && j < self.n);
        i * (2 * self.n - i - 1) / 2 + (j - i - 1)
    }

    /// Id of the link `x_{ij}`; reversed pairs are stored with the inverse gain.
    pub fn link_id(&self, i: Vertex, j: Vertex, x: GroupElement) -> usize {
        if i < j {
            self.pair_index(i, j) * self.group.order() + x
        } else {
            self.pair_index(j, i) * self.group.order() + self.group.inv(x)
        }
    }

    pub fn joint_id(&self, i: Vertex) -> usize {
        self.group.order() * self.n * (self.n - 1) / 2 + i
    }

    pub fn kind(&self, e: usize) -> EdgeKind {
        self.graph().edges()[e].kind
    }

    pub fn joints(&self) -> ElementSet {
        (0..self.n).map(|i| self.joint_id(i)).collect()
    }

    /// `cl({b_i, b_j})`: both joints and every link between `i` and `j`.
    pub fn pair_line(&self, i: Vertex, j: Vertex) -> ElementSet {
        let (i, j) = (i.min(j), i.max(j));
        let base = self.pair_index(i, j) * self.group.order();
        let mut s: ElementSet = (base..base + self.group.order()).collect();
        s.insert(self.joint_id(i));
        s.insert(self.joint_id(j));
        s
    }

    /// The `C(n,2)` lines `cl({b_i, b_j})`; each has `|Γ| + 2` elements.
    pub fn very_long_lines(&self) -> Result<Vec<ElementSet>> {
        if self.group.order() < 2 {
            return Err(Error::InvalidParameters("the trivial group has no very long lines".into()));
        }
        Ok((0..self.n).flat_map(|i| (i + 1..self.n).map(move |j| (i, j))).map(|(i, j)| self.pair_line(i, j)).collect())
    }

    /// Element set of a subgraph of `K_m^Γ`, `m <= n`, matched by edge kind.
    pub fn subset_of(&self, g: &GainGraph) -> Result<ElementSet> {
        if **g.group() != *self.group || g.n_vertices() > self.n {
            return Err(Error::InvalidGraph("graph does not live in this geometry".into()));
        }
        let mut s = ElementSet::EMPTY;
        for e in g.edges() {
            let id = match e.kind {
                EdgeKind::Link { tail, head, gain } => self.link_id(tail, head, gain),
                EdgeKind::Joint { vertex } => self.joint_id(vertex),
            };
            if s.contains(id) {
                return Err(Error::InvalidGraph("graph has repeated edges".into()));
            }
            s.insert(id);
        }
        Ok(s)
    }

    /// The subgraph of `K_n^Γ` on the given elements, edge ids equal to element ids.
    pub fn induced_graph(&self, s: ElementSet) -> GainGraph {
        self.graph().subgraph_by_position(s)
    }

    pub fn matroid(&self) -> Matroid {
        Arc::new(self.clone())
    }
}

impl std::fmt::Debug for DowlingGeometry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Q_{}({})", self.n, self.group.label())
    }
}

impl std::fmt::Debug for FrameMatroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FM({:?})", self.graph)
    }
}

impl RankOracle for DowlingGeometry {
    fn size(&self) -> usize {
        self.frame.size()
    }

    fn rank(&self, s: ElementSet) -> usize {
        self.frame.rank(s)
    }

    fn element_name(&self, e: usize) -> String {
        self.frame.element_name(e)
    }
}

/// Elements lying on at least two rank-2 flats with four or more elements.
pub fn joints_from_matroid(m: &dyn RankOracle) -> ElementSet {
    let mut count = vec![0usize; m.size()];
    for f in rank_two_flats(m) {
        if f.len() >= 4 {
            for e in f {
                count[e] += 1;
            }
        }
    }
    (0..m.size()).filter(|&e| count[e] >= 2).collect()
}

fn element_order_profile(g: &GroupTable) -> Vec<usize> {
    let mut v: Vec<usize> = g.elements().map(|x| g.element_order(x)).collect();
    v.sort_unstable();
    v
}

/// Candidate copies of `Q_t(sub)` anchored on `t` joints: for every `t`-set of joints, every
/// subgroup `H` of the host group whose order matches `sub`, and every switching `η`
/// (with `η` fixed to 1 on the first anchor), the set of joints plus the links
/// `η_a⁻¹ h η_b`, `h ∈ H`, on each anchored pair. Candidates inside `kept` are returned in a
/// deterministic order, deduplicated but not yet verified.
fn anchored_candidates(d: &DowlingGeometry, kept: ElementSet, t: usize, sub: &GroupTable) -> Result<Vec<ElementSet>> {
    let g = d.group();
    let subgroups: Vec<Vec<GroupElement>> = g
        .enumerate_subgroups()?
        .into_iter()
        .filter(|h| h.len() == sub.order())
        .filter(|h| g.subgroup_table(h).is_ok_and(|ht| element_order_profile(&ht) == element_order_profile(sub)))
        .collect();
    let anchors: Vec<Vertex> = (0..d.n()).filter(|&i| kept.contains(d.joint_id(i))).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut choose = Vec::new();
    fn subsets(items: &[Vertex], t: usize, start: usize, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            subsets(items, t, i + 1, cur, out);
            cur.pop();
        }
    }
    subsets(&anchors, t, 0, &mut Vec::new(), &mut choose);
    let m = g.order();
    for verts in &choose {
        for h in &subgroups {
            let total = m.pow((t - 1) as u32);
            for code in 0..total {
                let mut eta = vec![IDENTITY; t];
                let mut c = code;
                for slot in eta.iter_mut().skip(1) {
                    *slot = c % m;
                    c /= m;
                }
                let mut s: ElementSet = verts.iter().map(|&v| d.joint_id(v)).collect();
                let mut inside = true;
                'pairs: for a in 0..t {
                    for b in a + 1..t {
                        for &x in h {
                            let gain = g.mul(g.mul(g.inv(eta[a]), x), eta[b]);
                            let id = d.link_id(verts[a], verts[b], gain);
                            if !kept.contains(id) {
                                inside = false;
                                break 'pairs;
                            }
                            s.insert(id);
                        }
                    }
                }
                if inside && seen.insert(s) {
                    out.push(s);
                }
            }
        }
    }
    Ok(out)
}

fn check_subgeometry_args(t: usize, sub: &GroupTable) -> Result<()> {
    if sub.order() < 2 {
        return Err(Error::InvalidParameters("joint anchoring needs a nontrivial subgroup".into()));
    }
    if t == 0 {
        return Err(Error::InvalidParameters("t must be positive".into()));
    }
    Ok(())
}

/// Every copy of `Q_t(sub)` inside `d|kept`, found by joint anchoring and verified by
/// matroid isomorphism.
pub fn subgeometry_copies(d: &DowlingGeometry, kept: ElementSet, t: usize, sub: &GroupTable) -> Result<Vec<ElementSet>> {
    check_subgeometry_args(t, sub)?;
    if t < 3 {
        return Err(Error::InvalidParameters("joint anchoring needs t >= 3".into()));
    }
    let target = DowlingGeometry::new(t, Arc::new(sub.clone()))?;
    let host: Matroid = d.matroid();
    let mut out = Vec::new();
    for s in anchored_candidates(d, kept, t, sub)? {
        let r = Restriction::new(host.clone(), s)?;
        if find_isomorphism(&r, &target).is_some() {
            out.push(s);
        }
    }
    out.sort();
    Ok(out)
}

/// An embedding of `Q_t(sub)` into `d|kept`; `map[e]` is the host element for element `e`
/// of `Q_t(sub)`. Joint anchoring is used for `t >= 3`; smaller `t` falls back to the
/// generic search.
pub fn find_subgeometry(d: &DowlingGeometry, kept: ElementSet, t: usize, sub: &GroupTable) -> Result<Option<Vec<usize>>> {
    check_subgeometry_args(t, sub)?;
    let target = DowlingGeometry::new(t, Arc::new(sub.clone()))?;
    let host: Matroid = d.matroid();
    if t < 3 {
        return Ok(crate::matroid::find_embedding(d, &target, kept));
    }
    for s in anchored_candidates(d, kept, t, sub)? {
        let r = Restriction::new(host.clone(), s)?;
        if let Some(map) = find_isomorphism(&r, &target) {
            let lifted: Vec<usize> = map.iter().map(|&e| r.kept()[e]).collect();
            debug_assert!(crate::matroid::verify_embedding(d, &target, &lifted));
            return Ok(Some(lifted));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{are_isomorphic, closure, has_submatroid, is_circuit, Graphic, Uniform};

    fn grp(label: &str) -> Arc<GroupTable> {
        Arc::new(GroupTable::from_label(label).unwrap())
    }

    fn q(n: usize, label: &str) -> DowlingGeometry {
        DowlingGeometry::new(n, grp(label)).unwrap()
    }

    #[test]
    fn small_frame_matroids() {
        let mut g = GainGraph::new(grp("Z2"), 2);
        g.add_joint(0).unwrap();
        let fm = FrameMatroid::new(g.clone()).unwrap();
        assert_eq!(fm.full_rank(), 1);

        let mut t = GainGraph::new(grp("Z2"), 3);
        t.add_link(0, 1, 0).unwrap();
        t.add_link(1, 2, 0).unwrap();
        t.add_link(0, 2, 0).unwrap();
        let fm = FrameMatroid::new(t).unwrap();
        assert_eq!(fm.full_rank(), 2);
        assert!(is_circuit(&fm, fm.ground()));

        let mut h = GainGraph::new(grp("Z1"), 2);
        h.add_joint(0).unwrap();
        h.add_joint(1).unwrap();
        h.add_link(0, 1, 0).unwrap();
        let fm = FrameMatroid::new(h).unwrap();
        assert_eq!(fm.full_rank(), 2);
        assert!(is_circuit(&fm, fm.ground()));
    }

    #[test]
    fn catalogue_examples() {
        let mut t = GainGraph::new(grp("Z2"), 3);
        t.add_link(0, 1, 0).unwrap();
        t.add_link(1, 2, 0).unwrap();
        t.add_link(0, 2, 0).unwrap();
        assert_eq!(classify_circuit(&t, ElementSet::full(3)), CircuitKind::BalancedCycle);
        let mut h = GainGraph::new(grp("Z2"), 2);
        h.add_joint(0).unwrap();
        h.add_joint(1).unwrap();
        h.add_link(0, 1, 0).unwrap();
        assert_eq!(classify_circuit(&h, ElementSet::full(3)), CircuitKind::LooseHandcuff);
        let mut th = GainGraph::new(grp("Z3"), 2);
        for x in 0..3 {
            th.add_link(0, 1, x).unwrap();
        }
        assert_eq!(classify_circuit(&th, ElementSet::full(3)), CircuitKind::UnbalancedTheta);
        let mut tight = GainGraph::new(grp("Z2"), 2);
        tight.add_joint(0).unwrap();
        tight.add_link(0, 1, 0).unwrap();
        tight.add_link(0, 1, 1).unwrap();
        assert_eq!(classify_circuit(&tight, ElementSet::full(3)), CircuitKind::TightHandcuff);
    }

    #[test]
    fn dowling_sizes_and_ranks() {
        for label in ["Z1", "Z2", "Z3", "Z4", "Z2xZ2"] {
            for n in 1..=6 {
                let d = q(n, label);
                let m = d.group().order();
                assert_eq!(d.size(), m * n * (n - 1) / 2 + n);
                assert_eq!(d.full_rank(), n);
            }
        }
        assert!(are_isomorphic(&q(2, "Z2"), &Uniform::new(2, 4).unwrap()).unwrap());
        for n in 1..=4 {
            assert!(are_isomorphic(&q(n, "Z1"), &Graphic::complete(n + 1)).unwrap());
        }
        let d = q(3, "Z2");
        assert_eq!(d.size(), 9);
    }

    #[test]
    fn element_ids() {
        let d = q(4, "Z3");
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    for x in 0..3 {
                        let id = d.link_id(i, j, x);
                        let expected = if i < j {
                            EdgeKind::Link { tail: i, head: j, gain: x }
                        } else {
                            EdgeKind::Link { tail: j, head: i, gain: d.group().inv(x) }
                        };
                        assert_eq!(d.kind(id), expected);
                    }
                }
            }
            assert_eq!(d.kind(d.joint_id(i)), EdgeKind::Joint { vertex: i });
        }
    }

    #[test]
    fn lines_and_joints() {
        let d = q(3, "Z2");
        let two_joints = ElementSet::singleton(d.joint_id(0)).with(d.joint_id(1));
        let cl = closure(&d, two_joints);
        assert_eq!(cl.len(), 4);
        assert_eq!(cl, d.pair_line(0, 1));
        assert_eq!(d.very_long_lines().unwrap().len(), 3);
        assert!(d.very_long_lines().unwrap().iter().all(|l| l.len() == 4));
        let d23 = q(2, "Z3");
        assert_eq!(d23.very_long_lines().unwrap(), vec![d23.ground()]);
        assert_eq!(q(4, "Z2").very_long_lines().unwrap().len(), 6);
        assert!(q(3, "Z1").very_long_lines().is_err());
        assert_eq!(joints_from_matroid(&d), d.joints());
        let d43 = q(4, "Z3");
        assert_eq!(joints_from_matroid(&d43), d43.joints());
        // Every flat with four or more points is a joint-pair line.
        for f in rank_two_flats(&d43) {
            if f.len() >= 4 {
                assert_eq!((f & d43.joints()).len(), 2);
                assert_eq!(f.len(), 5);
            }
        }
    }

    #[test]
    fn subgeometry_examples() {
        let z2 = GroupTable::from_label("Z2").unwrap();
        let d = q(4, "Z2");
        assert!(find_subgeometry(&d, d.ground(), 3, &z2).unwrap().is_some());
        let d3 = q(3, "Z2");
        let kept = d3.ground().without(d3.joint_id(2));
        assert!(find_subgeometry(&d3, kept, 3, &z2).unwrap().is_none());
        let d4 = q(3, "Z4");
        let kept = d4.ground().without(d4.link_id(0, 1, 1));
        let map = find_subgeometry(&d4, kept, 3, &z2).unwrap().unwrap();
        assert!(map.iter().all(|&e| kept.contains(e)));
        assert!(find_subgeometry(&d4, kept, 3, &GroupTable::cyclic(1).unwrap()).is_err());
    }

    #[test]
    fn anchored_search_matches_generic_search() {
        let z2 = GroupTable::from_label("Z2").unwrap();
        let target = q(3, "Z2");
        for (n, label) in [(3, "Z2"), (4, "Z2"), (3, "Z4"), (3, "Z2xZ2")] {
            let d = q(n, label);
            for drop in 0..d.size() {
                let kept = d.ground().without(drop);
                let anchored = find_subgeometry(&d, kept, 3, &z2).unwrap().is_some();
                let generic = crate::matroid::find_embedding(&d, &target, kept).is_some();
                assert_eq!(anchored, generic, "{label} n={n} drop {drop}");
            }
        }
        let d = q(3, "Z2");
        let r = Restriction::new(d.matroid(), d.ground()).unwrap();
        assert!(has_submatroid(&r, &Graphic::complete(3)).unwrap().is_some());
    }

    #[test]
    fn anchored_copies_match_generic_images() {
        let z2 = GroupTable::from_label("Z2").unwrap();
        let target = q(3, "Z2");
        for (n, label) in [(4, "Z2"), (3, "Z4")] {
            let d = q(n, label);
            let anchored = subgeometry_copies(&d, d.ground(), 3, &z2).unwrap();
            let generic = crate::matroid::embedding_images(&d, &target, d.ground()).unwrap();
            assert_eq!(anchored, generic, "{label} n={n}");
        }
    }
}
