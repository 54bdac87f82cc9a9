//! Branch-and-bound search for large copy-free subsets.
//!
//! A [`Detector`] answers "does this subset contain a copy of the forbidden matroid". When the
//! copies are known up front as a family of element sets, the search keeps every candidate
//! element addable and prunes with packing bounds; otherwise it falls back to embedding calls.

use crate::bitset::{binomial, ElementSet};
use crate::matroid::{find_embedding, Matroid};
use rayon::prelude::*;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::Instant;

/// Largest template block whose exact cap is computed by hitting sets.
const BLOCK_LIMIT: usize = 16;
/// Branching depth at which the search tree is cut into independent tasks.
const SPLIT_DEPTH: usize = 11;
const CHECK_INTERVAL: u64 = 1024;

/// Every copy of the forbidden matroid, indexed by element.
#[derive(Clone, Debug)]
pub struct CopyFamily {
    size: usize,
    copies: Vec<ElementSet>,
    by_elem: Vec<Vec<u32>>,
    blocks: Vec<ElementSet>,
}

impl CopyFamily {
    pub fn new(size: usize, copies: Vec<ElementSet>, blocks: Vec<ElementSet>) -> Self {
        let mut by_elem = vec![Vec::new(); size];
        for (i, c) in copies.iter().enumerate() {
            for e in c.iter() {
                by_elem[e].push(i as u32);
            }
        }
        let blocks = blocks.into_iter().filter(|b| b.len() >= 2 && b.len() <= BLOCK_LIMIT).collect();
        CopyFamily { size, copies, by_elem, blocks }
    }

    pub fn copies(&self) -> &[ElementSet] {
        &self.copies
    }

    pub fn size(&self) -> usize {
        self.size
    }

    fn copy_within(&self, s: ElementSet) -> Option<ElementSet> {
        // each copy is looked at once, from its least element
        for f in s.iter() {
            for &ci in &self.by_elem[f] {
                let c = self.copies[ci as usize];
                if c.first() == Some(f) && c.is_subset(s) {
                    return Some(c);
                }
            }
        }
        None
    }

    /// Elements of `u` that would complete a copy through `e` once `e` joins `s`.
    fn blocked_by(&self, s: ElementSet, e: usize, u: ElementSet) -> ElementSet {
        let mut out = ElementSet::EMPTY;
        let s = s.with(e);
        for &ci in &self.by_elem[e] {
            let rest = self.copies[ci as usize] - s;
            if rest.len() == 1 {
                let f = rest.first().unwrap();
                if u.contains(f) {
                    out.insert(f);
                }
            }
        }
        out
    }

    /// Upper bound on `|F|` over copy-free `F` with `s ⊆ F ⊆ s ∪ u`. Stops early once the bound
    /// drops below `target`.
    fn bound(&self, s: ElementSet, u: ElementSet, target: usize) -> usize {
        let mut ub = s.len() + u.len();
        if ub < target {
            return ub;
        }
        let mut used = ElementSet::EMPTY;
        let mut residuals = Vec::new();
        for &b in &self.blocks {
            let bu = (b & u) - used;
            if bu.len() < 2 {
                continue;
            }
            residuals.clear();
            let reach = s | bu;
            for f in bu.iter() {
                for &ci in &self.by_elem[f] {
                    let c = self.copies[ci as usize];
                    if (c - s).first() == Some(f) && c.is_subset(reach) {
                        residuals.push(c - s);
                    }
                }
            }
            if residuals.is_empty() {
                continue;
            }
            residuals.sort_by_key(|r| r.len());
            let deficit = min_hitting_set(&residuals, bu.len());
            ub -= deficit;
            used = used | bu;
            if ub < target {
                return ub;
            }
        }
        let mut avail = u - used;
        for f in avail.iter() {
            if !avail.contains(f) {
                continue;
            }
            let mut best: Option<ElementSet> = None;
            for &ci in &self.by_elem[f] {
                let r = self.copies[ci as usize] - s;
                if r.first() == Some(f) && r.is_subset(avail) && best.map_or(true, |b| r.len() < b.len()) {
                    best = Some(r);
                    if r.len() == 2 {
                        break;
                    }
                }
            }
            if let Some(r) = best {
                avail = avail - r;
                ub -= 1;
                if ub < target {
                    return ub;
                }
            }
        }
        ub
    }
}

/// Size of a smallest set meeting every set in `sets` (all nonempty), capped at `cap`.
fn min_hitting_set(sets: &[ElementSet], cap: usize) -> usize {
    fn go(sets: &[ElementSet], chosen: ElementSet, depth: usize, best: &mut usize) {
        if depth >= *best {
            return;
        }
        match sets.iter().find(|s| s.is_disjoint(chosen)) {
            None => *best = depth,
            Some(s) => {
                for x in s.iter() {
                    go(sets, chosen.with(x), depth + 1, best);
                }
            }
        }
    }
    let mut best = cap;
    go(sets, ElementSet::EMPTY, 0, &mut best);
    best
}

/// How containment of the forbidden matroid is decided during a search.
#[derive(Clone)]
pub enum Detector {
    Family(CopyFamily),
    /// One embedding search per tested subset.
    Direct { host: Matroid, forbidden: Matroid },
}

impl Detector {
    pub fn size(&self) -> usize {
        match self {
            Detector::Family(f) => f.size,
            Detector::Direct { host, .. } => host.size(),
        }
    }

    /// A copy inside `s`, as the set of host elements it occupies.
    pub fn copy_within(&self, s: ElementSet) -> Option<ElementSet> {
        match self {
            Detector::Family(f) => f.copy_within(s),
            Detector::Direct { host, forbidden } => {
                if forbidden.size() > s.len() {
                    return None;
                }
                find_embedding(host.as_ref(), forbidden.as_ref(), s).map(|m| m.into_iter().collect())
            }
        }
    }

    pub fn is_free(&self, s: ElementSet) -> bool {
        self.copy_within(s).is_none()
    }

    /// Elements `e` with `{e}` alone containing a copy.
    fn root_blocked(&self, u: ElementSet) -> ElementSet {
        match self {
            Detector::Family(f) => f.copies.iter().filter(|c| c.len() == 1).fold(ElementSet::EMPTY, |a, c| a | *c) & u,
            Detector::Direct { .. } => ElementSet::EMPTY,
        }
    }

    /// Greedily extends the free set `s` along `order`.
    pub fn extend_greedy(&self, mut s: ElementSet, order: &[usize]) -> ElementSet {
        match self {
            Detector::Family(f) => {
                let mut blocked = ElementSet::EMPTY;
                for &e in order {
                    if s.contains(e) || blocked.contains(e) {
                        continue;
                    }
                    if f.copy_within(s.with(e)).is_some() {
                        blocked.insert(e);
                        continue;
                    }
                    blocked = blocked | f.blocked_by(s, e, ElementSet::full(f.size));
                    s.insert(e);
                }
                s
            }
            Detector::Direct { .. } => {
                for &e in order {
                    if !s.contains(e) && self.is_free(s.with(e)) {
                        s.insert(e);
                    }
                }
                s
            }
        }
    }
}

/// Accounting for a search over `k`-subsets. Every `k`-subset of the host is either reached
/// as a free leaf, shown to contain a copy, or excluded by a bound.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub nodes: u64,
    pub free_leaves: u128,
    pub contain_copy: u128,
    pub pruned_by_bound: u128,
}

impl Tally {
    fn add(&mut self, o: &Tally) {
        self.nodes += o.nodes;
        self.free_leaves += o.free_leaves;
        self.contain_copy += o.contain_copy;
        self.pruned_by_bound += o.pruned_by_bound;
    }

    pub fn accounted(&self) -> u128 {
        self.free_leaves + self.contain_copy + self.pruned_by_bound
    }
}

/// Outcome of a decision search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Found(ElementSet),
    Exhausted(Tally),
    OutOfTime,
}

#[derive(Clone, Copy)]
struct Node {
    s: ElementSet,
    u: ElementSet,
}

struct Ctx<'a> {
    det: &'a Detector,
    k: usize,
    deadline: Option<Instant>,
    abort: &'a AtomicBool,
}

enum Visit {
    Leaf(ElementSet),
    Stop,
}

impl Ctx<'_> {
    fn tick(&self, tally: &mut Tally) -> bool {
        tally.nodes += 1;
        if tally.nodes % CHECK_INTERVAL == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.abort.store(true, Ordering::Relaxed);
                }
            }
        }
        self.abort.load(Ordering::Relaxed)
    }

    /// Expands `node` once. Returns the children in visiting order, or a terminal outcome.
    fn branch(&self, node: Node, tally: &mut Tally, bounded: bool) -> Result<Vec<Node>, Option<ElementSet>> {
        let need = self.k - node.s.len();
        if need == 0 {
            tally.free_leaves += 1;
            return Err(Some(node.s));
        }
        let ul = node.u.len();
        if ul < need {
            return Err(None);
        }
        if bounded {
            if let Detector::Family(f) = self.det {
                if f.bound(node.s, node.u, self.k) < self.k {
                    tally.pruned_by_bound += binomial(ul, need);
                    return Err(None);
                }
            }
        }
        let e = node.u.first().unwrap();
        let u1 = node.u.without(e);
        let s2 = node.s.with(e);
        let mut out = Vec::with_capacity(2);
        match self.det {
            Detector::Family(f) => {
                let blocked = f.blocked_by(node.s, e, u1);
                let u2 = u1 - blocked;
                tally.contain_copy += binomial(u1.len(), need - 1) - binomial(u2.len(), need - 1);
                out.push(Node { s: s2, u: u2 });
            }
            Detector::Direct { .. } => {
                if self.det.is_free(s2) {
                    out.push(Node { s: s2, u: u1 });
                } else {
                    tally.contain_copy += binomial(u1.len(), need - 1);
                }
            }
        }
        out.push(Node { s: node.s, u: u1 });
        Ok(out)
    }

    fn dfs(&self, node: Node, tally: &mut Tally, stop_if: &dyn Fn() -> bool) -> Option<Visit> {
        if self.tick(tally) || stop_if() {
            return Some(Visit::Stop);
        }
        match self.branch(node, tally, true) {
            Err(Some(w)) => Some(Visit::Leaf(w)),
            Err(None) => None,
            Ok(children) => {
                for c in children {
                    if let Some(v) = self.dfs(c, tally, stop_if) {
                        return Some(v);
                    }
                }
                None
            }
        }
    }
}

enum Task {
    Open(Node),
    Done(ElementSet),
}

/// Decides whether a free `k`-subset exists.
///
/// The tree is cut at a fixed depth into tasks that run on `jobs` threads. The returned
/// witness is the first one in depth-first order, so it does not depend on `jobs`; the tally
/// of an exhausted search does not either.
pub fn decide(det: &Detector, k: usize, jobs: usize, deadline: Option<Instant>) -> Decision {
    let n = det.size();
    let abort = AtomicBool::new(false);
    let ctx = Ctx { det, k, deadline, abort: &abort };
    let mut tally = Tally::default();
    if k == 0 {
        return Decision::Found(ElementSet::EMPTY);
    }
    if k > n {
        return Decision::Exhausted(tally);
    }
    let full = ElementSet::full(n);
    let root_blocked = det.root_blocked(full);
    tally.contain_copy += binomial(n, k) - binomial(n - root_blocked.len(), k);
    let root = Node { s: ElementSet::EMPTY, u: full - root_blocked };

    let mut tasks = Vec::new();
    fn cut(ctx: &Ctx, node: Node, depth: usize, tally: &mut Tally, tasks: &mut Vec<Task>) {
        if depth == SPLIT_DEPTH {
            tasks.push(Task::Open(node));
            return;
        }
        tally.nodes += 1;
        match ctx.branch(node, tally, true) {
            Err(Some(w)) => tasks.push(Task::Done(w)),
            Err(None) => {}
            Ok(children) => {
                for c in children {
                    cut(ctx, c, depth + 1, tally, tasks);
                }
            }
        }
    }
    cut(&ctx, root, 0, &mut tally, &mut tasks);

    let first_found = AtomicUsize::new(usize::MAX);
    let run = |(i, t): (usize, &Task)| -> (Option<ElementSet>, Tally, bool) {
        let mut local = Tally::default();
        match t {
            Task::Done(w) => {
                first_found.fetch_min(i, Ordering::Relaxed);
                (Some(*w), local, false)
            }
            Task::Open(node) => {
                let stop_if = || first_found.load(Ordering::Relaxed) < i;
                match ctx.dfs(*node, &mut local, &stop_if) {
                    Some(Visit::Leaf(w)) => {
                        first_found.fetch_min(i, Ordering::Relaxed);
                        (Some(w), local, false)
                    }
                    Some(Visit::Stop) => (None, local, true),
                    None => (None, local, false),
                }
            }
        }
    };
    let results: Vec<(Option<ElementSet>, Tally, bool)> = if jobs <= 1 {
        tasks.iter().enumerate().map(run).collect()
    } else {
        match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| tasks.par_iter().enumerate().map(run).collect()),
            Err(_) => tasks.iter().enumerate().map(run).collect(),
        }
    };
    for (w, local, stopped) in results {
        if let Some(w) = w {
            return Decision::Found(w);
        }
        if stopped && abort.load(Ordering::Relaxed) {
            return Decision::OutOfTime;
        }
        tally.add(&local);
    }
    if abort.load(Ordering::Relaxed) {
        return Decision::OutOfTime;
    }
    Decision::Exhausted(tally)
}

/// Calls `f` on every free `k`-subset, in increasing lexicographic order of the
/// characteristic vector read from element 0. Returns `false` if the deadline passed.
pub fn for_each_free(det: &Detector, k: usize, deadline: Option<Instant>, f: &mut dyn FnMut(ElementSet)) -> bool {
    let n = det.size();
    if k > n {
        return true;
    }
    let abort = AtomicBool::new(false);
    let ctx = Ctx { det, k, deadline, abort: &abort };
    let full = ElementSet::full(n);
    let root = Node { s: ElementSet::EMPTY, u: full - det.root_blocked(full) };
    let mut tally = Tally::default();
    fn walk(ctx: &Ctx, node: Node, tally: &mut Tally, f: &mut dyn FnMut(ElementSet)) -> bool {
        if ctx.tick(tally) {
            return false;
        }
        match ctx.branch(node, tally, true) {
            Err(Some(w)) => {
                f(w);
                true
            }
            Err(None) => true,
            Ok(children) => children.into_iter().all(|c| walk(ctx, c, tally, f)),
        }
    }
    walk(&ctx, root, &mut tally, f) && !abort.load(Ordering::Relaxed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitset::for_each_subset_of_size;

    fn triangle_family(n: usize) -> CopyFamily {
        // triangles of K_m on the ground set of its edges
        let m = (1..).find(|m| m * (m - 1) / 2 == n).unwrap();
        let mut idx = vec![vec![0; m]; m];
        let mut c = 0;
        for i in 0..m {
            for j in i + 1..m {
                idx[i][j] = c;
                idx[j][i] = c;
                c += 1;
            }
        }
        let mut copies = Vec::new();
        for a in 0..m {
            for b in a + 1..m {
                for d in b + 1..m {
                    copies.push([idx[a][b], idx[a][d], idx[b][d]].into_iter().collect());
                }
            }
        }
        CopyFamily::new(n, copies, vec![])
    }

    fn brute_max(f: &CopyFamily) -> usize {
        (0..=f.size)
            .rev()
            .find(|&k| {
                let mut any = false;
                for_each_subset_of_size(ElementSet::full(f.size), k, |s| any |= f.copy_within(s).is_none());
                any
            })
            .unwrap()
    }

    #[test]
    fn mantel_on_small_cliques() {
        // triangle-free subgraphs of K_m: floor(m^2/4)
        for (edges, want) in [(3, 2), (6, 4), (10, 6), (15, 9)] {
            let det = Detector::Family(triangle_family(edges));
            assert!(matches!(decide(&det, want, 1, None), Decision::Found(_)));
            match decide(&det, want + 1, 1, None) {
                Decision::Exhausted(t) => assert_eq!(t.accounted(), binomial(edges, want + 1)),
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn agrees_with_brute_force() {
        let f = triangle_family(10);
        assert_eq!(brute_max(&f), 6);
    }

    #[test]
    fn hitting_sets() {
        let s = |v: &[usize]| v.iter().copied().collect::<ElementSet>();
        assert_eq!(min_hitting_set(&[s(&[0, 1]), s(&[2, 3])], 10), 2);
        assert_eq!(min_hitting_set(&[s(&[0, 1]), s(&[1, 2]), s(&[0, 2])], 10), 2);
        assert_eq!(min_hitting_set(&[s(&[0, 1, 2])], 10), 1);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let f = triangle_family(6);
        let det = Detector::Family(f.clone());
        for k in 0..=6 {
            let mut got = Vec::new();
            assert!(for_each_free(&det, k, None, &mut |s| got.push(s)));
            let mut want = Vec::new();
            for_each_subset_of_size(ElementSet::full(6), k, |s| {
                if f.copy_within(s).is_none() {
                    want.push(s);
                }
            });
            got.sort();
            want.sort();
            assert_eq!(got, want, "k = {k}");
        }
    }

    #[test]
    fn parallel_and_serial_agree() {
        let det = Detector::Family(triangle_family(15));
        for k in [9, 10] {
            assert_eq!(decide(&det, k, 1, None), decide(&det, k, 4, None));
        }
    }
}
