//! Oriented group-labelled multigraphs with joint loops.

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::{CayleyTable, GroupElement, GroupTable, IDENTITY};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// Stable identifier of an edge within a graph and all graphs derived from it.
pub type EdgeId = usize;

/// Vertices are `0..n`; edge names print them 1-based.
pub type Vertex = usize;

/// A link `x_{ij}` stored with `tail < head`, or the joint loop `b_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeKind {
    Link { tail: Vertex, head: Vertex, gain: GroupElement },
    Joint { vertex: Vertex },
}

impl EdgeKind {
    pub fn endpoints(self) -> (Vertex, Vertex) {
        match self {
            EdgeKind::Link { tail, head, .. } => (tail, head),
            EdgeKind::Joint { vertex } => (vertex, vertex),
        }
    }

    pub fn is_joint(self) -> bool {
        matches!(self, EdgeKind::Joint { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GainEdge {
    pub id: EdgeId,
    pub kind: EdgeKind,
}

/// Traversal direction of a link inside a walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    /// From tail to head; contributes the gain.
    Forward,
    /// From head to tail; contributes the inverse gain.
    Backward,
}

/// A closed walk given by its start vertex and a sequence of traversed edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkCycle {
    pub start: Vertex,
    pub steps: Vec<(EdgeId, Direction)>,
}

impl WalkCycle {
    pub fn new(start: Vertex, steps: Vec<(EdgeId, Direction)>) -> Self {
        WalkCycle { start, steps }
    }

    /// The same cycle traversed backwards.
    pub fn reversed(&self) -> WalkCycle {
        let steps = self
            .steps
            .iter()
            .rev()
            .map(|&(e, d)| {
                (e, if d == Direction::Forward { Direction::Backward } else { Direction::Forward })
            })
            .collect();
        WalkCycle { start: self.start, steps }
    }
}

/// A gain graph over a finite group.
#[derive(Clone)]
pub struct GainGraph {
    group: Arc<GroupTable>,
    n: usize,
    edges: Vec<GainEdge>,
}

impl GainGraph {
    /// The edgeless graph on `n` vertices.
    pub fn new(group: Arc<GroupTable>, n: usize) -> Self {
        GainGraph { group, n, edges: Vec::new() }
    }

    /// `K_n^Γ`: for each pair `i < j` the links `x_{ij}` in group order, then the joints `b_1..b_n`.
    pub fn complete(n: usize, group: Arc<GroupTable>) -> Self {
        let mut g = GainGraph::new(group, n);
        for i in 0..n {
            for j in i + 1..n {
                for x in g.group.elements() {
                    g.push(EdgeKind::Link { tail: i, head: j, gain: x });
                }
            }
        }
        for v in 0..n {
            g.push(EdgeKind::Joint { vertex: v });
        }
        g
    }

    fn push(&mut self, kind: EdgeKind) -> EdgeId {
        let id = self.edges.iter().map(|e| e.id + 1).max().unwrap_or(0);
        self.edges.push(GainEdge { id, kind });
        id
    }

    /// Adds `x_{ij}`; an edge given with `i > j` is stored as `(x^{-1})_{ji}`.
    pub fn add_link(&mut self, i: Vertex, j: Vertex, x: GroupElement) -> Result<EdgeId> {
        if i >= self.n || j >= self.n {
            return Err(Error::InvalidGraph(format!("vertex out of range 0..{}", self.n)));
        }
        if i == j {
            return Err(Error::InvalidGraph("links must join distinct vertices".into()));
        }
        if x >= self.group.order() {
            return Err(Error::InvalidGraph(format!("gain {x} is not in {}", self.group)));
        }
        let kind = if i < j {
            EdgeKind::Link { tail: i, head: j, gain: x }
        } else {
            EdgeKind::Link { tail: j, head: i, gain: self.group.inv(x) }
        };
        Ok(self.push(kind))
    }

    /// Adds the joint loop `b_i`.
    pub fn add_joint(&mut self, i: Vertex) -> Result<EdgeId> {
        if i >= self.n {
            return Err(Error::InvalidGraph(format!("vertex {i} out of range")));
        }
        if self.has_joint(i) {
            return Err(Error::InvalidGraph(format!("vertex {i} already has a joint loop")));
        }
        Ok(self.push(EdgeKind::Joint { vertex: i }))
    }

    pub fn group(&self) -> &Arc<GroupTable> {
        &self.group
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[GainEdge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Option<&GainEdge> {
        self.edges.iter().find(|e| e.id == id)
    }

    pub fn position(&self, id: EdgeId) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    pub fn has_joint(&self, v: Vertex) -> bool {
        self.edges.iter().any(|e| e.kind == EdgeKind::Joint { vertex: v })
    }

    pub fn n_joints(&self) -> usize {
        self.edges.iter().filter(|e| e.kind.is_joint()).count()
    }

    /// Gains of the links between `i` and `j`, read in the direction `i -> j`.
    pub fn multiplicity_set(&self, i: Vertex, j: Vertex) -> Result<BTreeSet<GroupElement>> {
        if i == j {
            return Err(Error::InvalidGraph("multiplicity set needs distinct vertices".into()));
        }
        Ok(self.gains_between(i, j).into_iter().collect())
    }

    /// Gains of the links between `i` and `j` in the direction `i -> j`, with repetition.
    pub fn gains_between(&self, i: Vertex, j: Vertex) -> Vec<GroupElement> {
        let mut v: Vec<GroupElement> = self
            .edges
            .iter()
            .filter_map(|e| match e.kind {
                EdgeKind::Link { tail, head, gain } if tail == i && head == j => Some(gain),
                EdgeKind::Link { tail, head, gain } if tail == j && head == i => {
                    Some(self.group.inv(gain))
                }
                _ => None,
            })
            .collect();
        v.sort_unstable();
        v
    }

    /// Switching at `v` by `gamma`: links into `v` get `x·γ`, links out of `v` get `γ⁻¹·x`.
    pub fn switch_at(&self, v: Vertex, gamma: GroupElement) -> Result<GainGraph> {
        if v >= self.n || gamma >= self.group.order() {
            return Err(Error::InvalidGraph("switching vertex or element out of range".into()));
        }
        let g = &self.group;
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let kind = match e.kind {
                    EdgeKind::Link { tail, head, gain } if head == v => {
                        EdgeKind::Link { tail, head, gain: g.mul(gain, gamma) }
                    }
                    EdgeKind::Link { tail, head, gain } if tail == v => {
                        EdgeKind::Link { tail, head, gain: g.mul(g.inv(gamma), gain) }
                    }
                    k => k,
                };
                GainEdge { id: e.id, kind }
            })
            .collect();
        Ok(GainGraph { group: self.group.clone(), n: self.n, edges })
    }

    /// Applies a switching function `eta` at every vertex.
    pub fn switch_all(&self, eta: &[GroupElement]) -> Result<GainGraph> {
        let mut g = self.clone();
        for (v, &x) in eta.iter().enumerate() {
            if x != IDENTITY {
                g = g.switch_at(v, x)?;
            }
        }
        Ok(g)
    }

    /// Ordered product of the gains along a closed walk of links.
    pub fn cycle_gain(&self, c: &WalkCycle) -> Result<GroupElement> {
        if c.steps.iter().any(|&(id, _)| self.edge(id).is_some_and(|e| e.kind.is_joint())) {
            return Err(Error::InvalidWalk("joint loops carry no gain".into()));
        }
        self.walk_product(c)
    }

    fn walk_product(&self, c: &WalkCycle) -> Result<GroupElement> {
        if c.steps.is_empty() {
            return Err(Error::InvalidWalk("empty walk".into()));
        }
        let mut seen = BTreeSet::new();
        let mut cur = c.start;
        let mut acc = IDENTITY;
        for &(id, dir) in &c.steps {
            if !seen.insert(id) {
                return Err(Error::InvalidWalk(format!("edge {id} repeated")));
            }
            let e = self.edge(id).ok_or_else(|| Error::InvalidWalk(format!("unknown edge {id}")))?;
            match (e.kind, dir) {
                (EdgeKind::Link { tail, head, gain }, Direction::Forward) if tail == cur => {
                    acc = self.group.mul(acc, gain);
                    cur = head;
                }
                (EdgeKind::Link { tail, head, gain }, Direction::Backward) if head == cur => {
                    acc = self.group.mul(acc, self.group.inv(gain));
                    cur = tail;
                }
                (EdgeKind::Joint { vertex }, _) if vertex == cur => {}
                _ => {
                    return Err(Error::InvalidWalk(format!("edge {id} does not leave vertex {cur}")))
                }
            }
        }
        if cur != c.start {
            return Err(Error::InvalidWalk("walk is not closed".into()));
        }
        Ok(acc)
    }

    /// A cycle through a joint loop is never balanced; otherwise the gain must be the identity.
    pub fn is_balanced_cycle(&self, c: &WalkCycle) -> Result<bool> {
        let through_joint =
            c.steps.iter().any(|&(id, _)| self.edge(id).is_some_and(|e| e.kind.is_joint()));
        if through_joint {
            self.walk_product(c)?;
            return Ok(false);
        }
        if c.steps.len() < 2 {
            return Err(Error::InvalidWalk("balance needs a cycle of at least two edges".into()));
        }
        Ok(self.cycle_gain(c)? == IDENTITY)
    }

    /// Removes the given vertices and every edge touching them. Vertex numbering and edge ids are kept.
    pub fn delete_vertices(&self, vertices: &[Vertex]) -> Result<GainGraph> {
        if let Some(&v) = vertices.iter().find(|&&v| v >= self.n) {
            return Err(Error::InvalidGraph(format!("unknown vertex {v}")));
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| {
                let (a, b) = e.kind.endpoints();
                !vertices.contains(&a) && !vertices.contains(&b)
            })
            .copied()
            .collect();
        Ok(GainGraph { group: self.group.clone(), n: self.n, edges })
    }

    /// The spanning subgraph on the given edge ids.
    pub fn subgraph(&self, ids: &[EdgeId]) -> Result<GainGraph> {
        if let Some(&id) = ids.iter().find(|&&id| self.edge(id).is_none()) {
            return Err(Error::InvalidGraph(format!("unknown edge id {id}")));
        }
        let edges = self.edges.iter().filter(|e| ids.contains(&e.id)).copied().collect();
        Ok(GainGraph { group: self.group.clone(), n: self.n, edges })
    }

    /// The spanning subgraph on the edges at the given positions of [`GainGraph::edges`].
    pub fn subgraph_by_position(&self, set: ElementSet) -> GainGraph {
        let edges = set.iter().filter(|&p| p < self.edges.len()).map(|p| self.edges[p]).collect();
        GainGraph { group: self.group.clone(), n: self.n, edges }
    }

    /// Renumbers edge ids to `0..len` in list order.
    pub fn with_fresh_ids(&self) -> GainGraph {
        let edges = self.edges.iter().enumerate().map(|(i, e)| GainEdge { id: i, kind: e.kind }).collect();
        GainGraph { group: self.group.clone(), n: self.n, edges }
    }

    /// Keeps only the vertices that carry an edge, renumbered in increasing order.
    pub fn compacted(&self) -> GainGraph {
        let mut used = vec![false; self.n];
        for e in &self.edges {
            let (a, b) = e.kind.endpoints();
            used[a] = true;
            used[b] = true;
        }
        let map: Vec<usize> = used
            .iter()
            .scan(0, |c, &u| {
                let r = *c;
                if u {
                    *c += 1;
                }
                Some(r)
            })
            .collect();
        let n = used.iter().filter(|&&u| u).count();
        let edges = self
            .edges
            .iter()
            .map(|e| GainEdge {
                id: e.id,
                kind: match e.kind {
                    EdgeKind::Link { tail, head, gain } => {
                        EdgeKind::Link { tail: map[tail], head: map[head], gain }
                    }
                    EdgeKind::Joint { vertex } => EdgeKind::Joint { vertex: map[vertex] },
                },
            })
            .collect();
        GainGraph { group: self.group.clone(), n, edges }
    }

    /// Human-readable name such as `-1_{1,2}` or `b_3` (vertices printed 1-based).
    pub fn edge_name(&self, kind: EdgeKind) -> String {
        match kind {
            EdgeKind::Link { tail, head, gain } => {
                format!("{}_{{{},{}}}", self.group.name(gain), tail + 1, head + 1)
            }
            EdgeKind::Joint { vertex } => format!("b_{}", vertex + 1),
        }
    }

    pub fn to_json(&self) -> GainGraphJson {
        let links: Vec<&GainEdge> = self.edges.iter().filter(|e| !e.kind.is_joint()).collect();
        let joints: Vec<&GainEdge> = self.edges.iter().filter(|e| e.kind.is_joint()).collect();
        let ids: Vec<usize> = links.iter().chain(joints.iter()).map(|e| e.id).collect();
        let fresh = ids.iter().enumerate().all(|(i, &id)| i == id);
        let standard = GroupTable::from_label(self.group.label()).is_ok_and(|g| g == *self.group);
        GainGraphJson {
            group_label: self.group.label().to_string(),
            group: (!standard).then(|| self.group.to_cayley()),
            n: self.n,
            links: links
                .iter()
                .map(|e| match e.kind {
                    EdgeKind::Link { tail, head, gain } => [gain, tail, head],
                    _ => unreachable!(),
                })
                .collect(),
            joints: joints.iter().map(|e| e.kind.endpoints().0).collect(),
            ids: (!fresh).then_some(ids),
        }
    }

    pub fn from_json(j: &GainGraphJson) -> Result<GainGraph> {
        let group = match &j.group {
            Some(t) => GroupTable::from_cayley(t)?,
            None => GroupTable::from_label(&j.group_label)?,
        };
        let mut g = GainGraph::new(Arc::new(group), j.n);
        for &[x, i, jv] in &j.links {
            g.add_link(i, jv, x)?;
        }
        for &v in &j.joints {
            g.add_joint(v)?;
        }
        if let Some(ids) = &j.ids {
            if ids.len() != g.edges.len() || ids.iter().collect::<BTreeSet<_>>().len() != ids.len() {
                return Err(Error::InvalidGraph("ids must be distinct, one per edge".into()));
            }
            for (e, &id) in g.edges.iter_mut().zip(ids) {
                e.id = id;
            }
        }
        Ok(g)
    }
}

impl PartialEq for GainGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && *self.group == *other.group && {
            let mut a = self.edges.clone();
            let mut b = other.edges.clone();
            a.sort_by_key(|e| e.id);
            b.sort_by_key(|e| e.id);
            a == b
        }
    }
}

impl fmt::Debug for GainGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.edges.iter().map(|e| self.edge_name(e.kind)).collect();
        write!(f, "GainGraph({}, n={}, [{}])", self.group, self.n, names.join(" "))
    }
}

/// Serialized gain graph. `links` holds `[gain, i, j]` triples with 0-based vertices.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GainGraphJson {
    pub group_label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<CayleyTable>,
    pub n: usize,
    pub links: Vec<[usize; 3]>,
    #[serde(default)]
    pub joints: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ids: Option<Vec<EdgeId>>,
}
