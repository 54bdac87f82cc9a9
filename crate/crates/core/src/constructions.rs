//! Generators for the extremal examples, each with its predicted size and freeness claim.

use crate::bitset::{binomial, ElementSet};
use crate::descriptor::MatroidDescriptor;
use crate::error::{Error, Result};
use crate::frame::{DowlingGeometry, FrameMatroid};
use crate::gain::{EdgeKind, GainGraph, Vertex};
use crate::group::{GroupTable, IDENTITY};
use crate::matroid::{DirectSum, Matroid, RankOracle, Uniform, VectorMatroid};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

fn c2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn group(label: &str) -> Arc<GroupTable> {
    Arc::new(GroupTable::from_label(label).expect("standard label"))
}

fn link(g: &mut GainGraph, i: Vertex, j: Vertex, x: usize) {
    g.add_link(i, j, x).expect("generator stays in range");
}

/// `K_{a,b}^{Z2}`: both labels on every pair across the parts `[0,a)` and `[a,a+b)`.
pub fn bipartite_z2(a: usize, b: usize) -> Result<GainGraph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameters("bipartite_z2 needs a, b >= 1".into()));
    }
    let mut g = GainGraph::new(group("Z2"), a + b);
    for i in 0..a {
        for j in a..a + b {
            link(&mut g, i, j, 0);
            link(&mut g, i, j, 1);
        }
    }
    Ok(g)
}

/// The triangle-free Z₃-gain graph on `⌈n²/2⌉` edges.
pub fn mantel_z3(n: usize) -> Result<GainGraph> {
    if n == 0 {
        return Err(Error::InvalidParameters("mantel_z3 needs n >= 1".into()));
    }
    let mut g = GainGraph::new(group("Z3"), n);
    // Vertices 0..h on one side, h..top on the other, with x and x⁻¹ across.
    let (h, top) = if n % 2 == 0 { (n / 2, n) } else { ((n - 1) / 2, n - 1) };
    for i in 0..h {
        for j in h..top {
            link(&mut g, i, j, 1);
            link(&mut g, i, j, 2);
        }
    }
    if n % 2 == 1 {
        let last = n - 1;
        g.add_joint(last)?;
        for i in 0..last {
            link(&mut g, i, last, IDENTITY);
        }
    }
    Ok(g)
}

/// Both elements of the lowest good pair on every pair of vertices.
pub fn good_pair_graph(grp: Arc<GroupTable>, n: usize) -> Result<GainGraph> {
    let (x, y) = grp.find_good_pair().ok_or_else(|| {
        Error::InvalidParameters(format!("{} has no good pair; good pairs exist exactly for groups of order at least 4", grp.label()))
    })?;
    let mut g = GainGraph::new(grp, n);
    for i in 0..n {
        for j in i + 1..n {
            link(&mut g, i, j, x);
            link(&mut g, i, j, y);
        }
    }
    Ok(g)
}

/// Class of each vertex in the balanced `k`-partition of `0..n` into contiguous blocks,
/// the larger blocks first.
pub fn turan_classes(n: usize, k: usize) -> Vec<usize> {
    let (q, r) = (n / k, n % k);
    let mut out = Vec::with_capacity(n);
    for c in 0..k {
        let size = if c < r { q + 1 } else { q };
        out.extend(std::iter::repeat(c).take(size));
    }
    out
}

/// `T_{n,k}^Γ`: every group label on every pair from different classes.
pub fn turan_blowup(n: usize, k: usize, grp: Arc<GroupTable>) -> Result<GainGraph> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameters("turan_blowup needs 1 <= k <= n".into()));
    }
    let class = turan_classes(n, k);
    let mut g = GainGraph::new(grp.clone(), n);
    for i in 0..n {
        for j in i + 1..n {
            if class[i] != class[j] {
                for x in grp.elements() {
                    link(&mut g, i, j, x);
                }
            }
        }
    }
    Ok(g)
}

/// `H_{a,b}` over Z₂: joints and negative links on the first `a` vertices, both labels from
/// those to the remaining `b`.
pub fn h_ab(a: usize, b: usize) -> Result<GainGraph> {
    if a + b == 0 {
        return Err(Error::InvalidParameters("h_ab needs a + b >= 1".into()));
    }
    let mut g = GainGraph::new(group("Z2"), a + b);
    for i in 0..a {
        g.add_joint(i)?;
    }
    for i in 0..a {
        for j in i + 1..a {
            link(&mut g, i, j, 1);
        }
    }
    for i in 0..a {
        for j in a..a + b {
            link(&mut g, i, j, 0);
            link(&mut g, i, j, 1);
        }
    }
    Ok(g)
}

/// The three-part Z₄ construction: parts `A = [0,m)`, `B = [m,2m)`, `C = [2m,n)` with
/// `m = ⌊4n/13⌋`.
pub fn z4_k4free(n: usize) -> Result<GainGraph> {
    if n < 13 {
        return Err(Error::InvalidParameters("z4_k4free needs n >= 13".into()));
    }
    let m = 4 * n / 13;
    let mut g = GainGraph::new(group("Z4"), n);
    for part in [0..m, m..2 * m] {
        for i in part.clone() {
            for j in i + 1..part.end {
                link(&mut g, i, j, 2);
            }
        }
    }
    for i in 0..m {
        for j in m..2 * m {
            link(&mut g, i, j, 0);
            link(&mut g, i, j, 1);
        }
    }
    for i in 0..2 * m {
        for j in 2 * m..n {
            for x in 0..4 {
                link(&mut g, i, j, x);
            }
        }
    }
    Ok(g)
}

/// Split point `n' = ⌊mn/(2m−1)⌋` used by [`k4_lower`].
pub fn k4_lower_split(order: usize, n: usize) -> usize {
    order * n / (2 * order - 1)
}

/// `x` on pairs inside `[0,n')` and every label from `[0,n')` to the rest, `x` the element 1.
pub fn k4_lower(grp: Arc<GroupTable>, n: usize) -> Result<GainGraph> {
    if grp.order() < 2 || n < 2 {
        return Err(Error::InvalidParameters("k4_lower needs a nontrivial group and n >= 2".into()));
    }
    let split = k4_lower_split(grp.order(), n);
    let mut g = GainGraph::new(grp.clone(), n);
    for i in 0..split {
        for j in i + 1..split {
            link(&mut g, i, j, 1);
        }
    }
    for i in 0..split {
        for j in split..n {
            for y in grp.elements() {
                link(&mut g, i, j, y);
            }
        }
    }
    Ok(g)
}

/// Classes `A_1..A_{t-1}` of [`z2_kt_free`]: blocks of `⌊n/(t−1)⌋` vertices and a final
/// class holding the remainder.
fn kt_classes(n: usize, t: usize) -> Vec<Vec<Vertex>> {
    let q = n / (t - 1);
    let mut out: Vec<Vec<Vertex>> = (0..t - 2).map(|i| (q * i..q * (i + 1)).collect()).collect();
    out.push((q * (t - 2)..n).collect());
    out
}

/// The dense Z₂-gain graph avoiding every balanced realization of `M(K_t)`.
pub fn z2_kt_free(n: usize, t: usize) -> Result<GainGraph> {
    if t < 5 || n < t {
        return Err(Error::InvalidParameters("z2_kt_free needs t >= 5 and n >= t".into()));
    }
    let classes = kt_classes(n, t);
    let pairs = if t % 2 == 0 { (t - 2) / 2 } else { (t - 3) / 2 };
    let mut class_of = vec![usize::MAX; n];
    for (c, vs) in classes.iter().enumerate() {
        for &v in vs {
            class_of[v] = c;
        }
    }
    // Classes whose induced subgraph is removed entirely.
    let emptied = |c: usize| c == t - 2 || (t % 2 == 1 && c == t - 3);
    // Identity links are removed inside B_j = A_{2j-1} ∪ A_{2j}.
    let paired = |c: usize| c < 2 * pairs;
    let mut g = GainGraph::new(group("Z2"), n);
    for i in 0..n {
        for j in i + 1..n {
            let (ci, cj) = (class_of[i], class_of[j]);
            if ci == cj && emptied(ci) {
                continue;
            }
            let same_block = paired(ci) && paired(cj) && ci / 2 == cj / 2;
            if !same_block {
                link(&mut g, i, j, 0);
            }
            link(&mut g, i, j, 1);
        }
    }
    for v in 0..n {
        if !emptied(class_of[v]) {
            g.add_joint(v)?;
        }
    }
    Ok(g)
}

/// Edge count of [`z2_kt_free`] from the block sizes.
pub fn z2_kt_free_size(n: usize, t: usize) -> usize {
    let q = n / (t - 1);
    let last = n - q * (t - 2);
    if t % 2 == 0 {
        n * n - c2(2 * q) * (t - 2) / 2 - last * last
    } else {
        n * n - c2(2 * q) * (t - 3) / 2 - q * q - last * last
    }
}

/// Which extremal family of the long-line problem to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LongLineVariant {
    /// `ℓ ≥ |Γ|+3`: the whole geometry.
    KeepAll,
    /// `ℓ = |Γ|+2`: delete `n−1` joints.
    DeleteJoints,
    /// `ℓ = |Γ|+2`: delete `n−2` joints and one non-joint on the line of the other two.
    JointPairAndPoint,
    /// `ℓ ≤ |Γ|+1`: `ℓ−1` non-joints from every very long line.
    PerLine,
}

impl std::str::FromStr for LongLineVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "keep-all" => Ok(LongLineVariant::KeepAll),
            "delete-joints" => Ok(LongLineVariant::DeleteJoints),
            "joint-pair-and-point" => Ok(LongLineVariant::JointPairAndPoint),
            "per-line" => Ok(LongLineVariant::PerLine),
            _ => Err(Error::InvalidParameters(format!("unknown long-line variant {s}"))),
        }
    }
}

/// The variants valid for a given line length and group order.
pub fn longline_variants(order: usize, ell: usize) -> Vec<LongLineVariant> {
    if ell >= order + 3 {
        vec![LongLineVariant::KeepAll]
    } else if ell == order + 2 {
        vec![LongLineVariant::DeleteJoints, LongLineVariant::JointPairAndPoint]
    } else {
        vec![LongLineVariant::PerLine]
    }
}

/// The three-case extremal value for excluding `U_{2,ℓ}` from `Q_n(Γ)`.
pub fn longline_value(n: usize, order: usize, ell: usize) -> usize {
    let full = order * c2(n) + n;
    if ell >= order + 3 {
        full
    } else if ell == order + 2 {
        full - n + 1
    } else {
        (ell - 1) * c2(n)
    }
}

pub fn longline_extremal(n: usize, grp: Arc<GroupTable>, ell: usize, variant: LongLineVariant) -> Result<(DowlingGeometry, ElementSet)> {
    if ell < 4 || n < 2 {
        return Err(Error::InvalidParameters("long-line constructions need l >= 4 and n >= 2".into()));
    }
    if !longline_variants(grp.order(), ell).contains(&variant) {
        return Err(Error::InvalidParameters(format!("variant {variant:?} does not match l = {ell} for |group| = {}", grp.order())));
    }
    let d = DowlingGeometry::new(n, grp.clone())?;
    let kept = match variant {
        LongLineVariant::KeepAll => d.ground(),
        LongLineVariant::DeleteJoints => (0..n - 1).fold(d.ground(), |s, i| s.without(d.joint_id(i))),
        LongLineVariant::JointPairAndPoint => {
            let s = (0..n - 2).fold(d.ground(), |s, i| s.without(d.joint_id(i)));
            s.without(d.link_id(n - 2, n - 1, IDENTITY))
        }
        LongLineVariant::PerLine => {
            let mut s = ElementSet::EMPTY;
            for i in 0..n {
                for j in i + 1..n {
                    for x in 0..ell - 1 {
                        s.insert(d.link_id(i, j, x));
                    }
                }
            }
            s
        }
    };
    Ok((d, kept))
}

/// Deletes `x` from `Q_n(Γ)` after checking it against the extremal conditions for
/// excluding `Q_t(sub)`.
pub fn subgeometry_extremal(n: usize, t: usize, grp: Arc<GroupTable>, sub: &GroupTable, x: ElementSet) -> Result<(DowlingGeometry, ElementSet)> {
    if !(3..=n).contains(&t) || sub.order() < 2 {
        return Err(Error::InvalidParameters("subgeometry deletions need n >= t >= 3 and a nontrivial subgroup".into()));
    }
    let has_subgroup = grp.enumerate_subgroups()?.iter().any(|h| {
        h.len() == sub.order() && grp.subgroup_table(h).is_ok_and(|ht| same_order_profile(&ht, sub))
    });
    if !has_subgroup {
        return Err(Error::InvalidParameters(format!("{} is not a subgroup of {}", sub.label(), grp.label())));
    }
    let d = DowlingGeometry::new(n, grp.clone())?;
    if !x.is_subset(d.ground()) {
        return Err(Error::InvalidParameters("deleted set leaves the geometry".into()));
    }
    if x.len() != n - t + 1 {
        return Err(Error::InvalidParameters(format!("delete exactly n - t + 1 = {} elements", n - t + 1)));
    }
    let joints = d.joints();
    let non_joints = x - joints;
    if sub.order() < grp.order() {
        if !non_joints.is_empty() {
            return Err(Error::InvalidParameters("for a proper subgroup every deleted element must be a joint".into()));
        }
    } else {
        let line_of = |e: usize| match d.kind(e) {
            EdgeKind::Link { tail, head, .. } => (tail, head),
            EdgeKind::Joint { .. } => unreachable!(),
        };
        for y in non_joints {
            let (i, j) = line_of(y);
            for b in x & joints {
                if let EdgeKind::Joint { vertex } = d.kind(b) {
                    if vertex == i || vertex == j {
                        return Err(Error::InvalidParameters(format!(
                            "condition (1) fails: joint {} lies on the very long line of {}",
                            d.element_name(b),
                            d.element_name(y)
                        )));
                    }
                }
            }
            for z in non_joints {
                if z > y {
                    let (k, l) = line_of(z);
                    if i == k || i == l || j == k || j == l {
                        return Err(Error::InvalidParameters(format!(
                            "condition (2) fails: the very long lines of {} and {} meet",
                            d.element_name(y),
                            d.element_name(z)
                        )));
                    }
                }
            }
        }
    }
    Ok((d.clone(), d.ground() - x))
}

fn same_order_profile(a: &GroupTable, b: &GroupTable) -> bool {
    let profile = |g: &GroupTable| {
        let mut v: Vec<usize> = g.elements().map(|x| g.element_order(x)).collect();
        v.sort_unstable();
        v
    };
    a.order() == b.order() && profile(a) == profile(b)
}

/// The matchstick geometry: `⌊r/2⌋` copies of `U_{2,n+1}`, plus a coloop when `r` is odd.
pub fn matchstick(r: usize, n: usize) -> Result<Matroid> {
    if r == 0 || n == 0 {
        return Err(Error::InvalidParameters("matchstick needs r, n >= 1".into()));
    }
    let size = (r / 2) * (n + 1) + r % 2;
    if size > crate::bitset::MAX_ELEMENTS {
        return Err(Error::TooLarge { what: "matchstick geometry", size, bound: crate::bitset::MAX_ELEMENTS });
    }
    let mut parts: Vec<Matroid> = Vec::new();
    for _ in 0..r / 2 {
        parts.push(Arc::new(Uniform::new(2, n + 1)?));
    }
    if r % 2 == 1 {
        parts.push(Arc::new(Uniform::new(1, 1)?));
    }
    Ok(Arc::new(DirectSum::new(parts)))
}

/// The origami geometry as the frame matroid of a path: element `i < r` is the point `p_{i+1}`
/// (a joint), followed by `n−1` parallel links with distinct gains on each consecutive pair.
pub fn origami(r: usize, n: usize) -> Result<FrameMatroid> {
    if r == 0 || n == 0 {
        return Err(Error::InvalidParameters("origami needs r, n >= 1".into()));
    }
    let grp = Arc::new(GroupTable::cyclic((n - 1).max(1))?);
    let mut g = GainGraph::new(grp, r);
    for v in 0..r {
        g.add_joint(v)?;
    }
    for v in 0..r - 1 {
        for x in 0..n - 1 {
            g.add_link(v, v + 1, x)?;
        }
    }
    FrameMatroid::new(g)
}

/// A generic-vector model of the origami geometry over `GF(p)` in the same element order:
/// basis vectors for the points, `e_i + s·e_{i+1}` with random distinct nonzero `s` on the lines.
pub fn origami_vectors(r: usize, n: usize, seed: u64) -> Result<VectorMatroid> {
    if r == 0 || n == 0 {
        return Err(Error::InvalidParameters("origami needs r, n >= 1".into()));
    }
    let p = crate::matroid::DEFAULT_PRIME;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut vectors = Vec::new();
    for i in 0..r {
        let mut v = vec![0; r];
        v[i] = 1;
        vectors.push(v);
    }
    for i in 0..r - 1 {
        let mut used = Vec::new();
        while used.len() < n - 1 {
            let s = rng.gen_range(1..p);
            if !used.contains(&s) {
                used.push(s);
            }
        }
        for s in used {
            let mut v = vec![0; r];
            v[i] = 1;
            v[i + 1] = s;
            vectors.push(v);
        }
    }
    VectorMatroid::new(p, vectors)
}

/// Points of [`origami`] removed by the extremal deletion for excluding `O_t(m)`.
pub fn origami_extremal(r: usize, t: usize, n: usize, m: usize) -> Result<ElementSet> {
    if !(t >= 3 && r >= t && m >= 2 && n >= m) {
        return Err(Error::InvalidParameters("origami deletions need r >= t >= 3 and n >= m >= 2".into()));
    }
    let size = (r - 1) * n + 1;
    let deleted: ElementSet = if n == m {
        (1..=r / t).map(|k| k * t - 1).collect()
    } else {
        (1..=(r - 2) / (t - 2)).map(|k| k * (t - 2)).collect()
    };
    Ok(ElementSet::full(size) - deleted)
}

/// A generated extremal candidate inside a host matroid.
#[derive(Clone)]
pub struct Built {
    pub name: String,
    pub host: MatroidDescriptor,
    /// Element ids in the host; `None` when the host is past the bitset limit and the
    /// construction exists only as a gain graph.
    pub kept: Option<ElementSet>,
    pub graph: Option<GainGraph>,
    pub predicted_size: usize,
    pub forbidden: Option<MatroidDescriptor>,
    /// Seed used by a randomized cross-check, when one ran.
    pub seed: Option<u64>,
}

/// Recipe names accepted by [`build`] with their parameters.
pub const RECIPES: &[(&str, &str)] = &[
    ("bipartite-z2", "a b"),
    ("mantel-z3", "n"),
    ("good-pair", "group n"),
    ("turan-blowup", "group n k"),
    ("h-ab", "a b"),
    ("z4-k4free", "n"),
    ("k4-lower", "group n"),
    ("z2-kt-free", "n t"),
    ("longline", "group n ell variant"),
    ("subgeometry", "group sub n t x"),
    ("matchstick", "r n"),
    ("origami", "r n seed"),
    ("origami-extremal", "r t n m"),
];

fn graph_built(name: &str, g: GainGraph, predicted: usize, forbidden: Option<MatroidDescriptor>) -> Result<Built> {
    let kept = match DowlingGeometry::new(g.n_vertices(), g.group().clone()) {
        Ok(d) => Some(d.subset_of(&g)?),
        Err(Error::TooLarge { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(Built {
        name: name.into(),
        host: MatroidDescriptor::dowling(g.n_vertices(), g.group()),
        kept,
        graph: Some(g),
        predicted_size: predicted,
        forbidden,
        seed: None,
    })
}

/// The clique whose absence the Turán blowup guarantees, when a critical clique is known:
/// `K_{k+1}` for trivial groups, for Z₂ unless `k+1 = 4` (then `K_5`), and `K_4` for
/// odd-order groups when `k <= 3`.
pub fn turan_claim(k: usize, grp: &GroupTable) -> Option<usize> {
    let t = k + 1;
    match grp.order() {
        1 => Some(t),
        2 => Some(if t == 4 { 5 } else { t }),
        m if m % 2 == 1 && t <= 4 => Some(if t == 3 { 4 } else { t }),
        _ => (t <= 2).then_some(t),
    }
}

fn param<'a>(p: &'a BTreeMap<String, String>, key: &str) -> Result<&'a str> {
    p.get(key).map(String::as_str).ok_or_else(|| Error::InvalidParameters(format!("missing parameter {key}")))
}

fn num(p: &BTreeMap<String, String>, key: &str) -> Result<usize> {
    param(p, key)?.parse().map_err(|_| Error::InvalidParameters(format!("parameter {key} must be a non-negative integer")))
}

fn grp_param(p: &BTreeMap<String, String>, key: &str) -> Result<Arc<GroupTable>> {
    Ok(Arc::new(GroupTable::from_label(param(p, key)?)?))
}

/// Builds a named recipe from string parameters.
pub fn build(name: &str, p: &BTreeMap<String, String>) -> Result<Built> {
    let clique = |t: usize| Some(MatroidDescriptor::Clique { vertices: t });
    match name {
        "bipartite-z2" => {
            let (a, b) = (num(p, "a")?, num(p, "b")?);
            graph_built(name, bipartite_z2(a, b)?, 2 * a * b, clique(3))
        }
        "mantel-z3" => {
            let n = num(p, "n")?;
            graph_built(name, mantel_z3(n)?, (n * n).div_ceil(2), clique(3))
        }
        "good-pair" => {
            let n = num(p, "n")?;
            graph_built(name, good_pair_graph(grp_param(p, "group")?, n)?, 2 * c2(n), clique(3))
        }
        "turan-blowup" => {
            let (n, k, grp) = (num(p, "n")?, num(p, "k")?, grp_param(p, "group")?);
            let class = turan_classes(n, k.max(1));
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| class[i] != class[j]).count();
            let claim = turan_claim(k, &grp).and_then(clique);
            graph_built(name, turan_blowup(n, k, grp.clone())?, grp.order() * pairs, claim)
        }
        "h-ab" => {
            let (a, b) = (num(p, "a")?, num(p, "b")?);
            graph_built(name, h_ab(a, b)?, a + c2(a) + 2 * a * b, clique(4))
        }
        "z4-k4free" => {
            let n = num(p, "n")?;
            let m = 4 * n / 13;
            graph_built(name, z4_k4free(n)?, 2 * c2(m) + 2 * m * m + 4 * 2 * m * n.saturating_sub(2 * m), clique(4))
        }
        "k4-lower" => {
            let (grp, n) = (grp_param(p, "group")?, num(p, "n")?);
            let s = k4_lower_split(grp.order().max(2), n);
            graph_built(name, k4_lower(grp.clone(), n)?, c2(s) + grp.order() * s * n.saturating_sub(s), clique(4))
        }
        "z2-kt-free" => {
            let (n, t) = (num(p, "n")?, num(p, "t")?);
            let g = z2_kt_free(n, t)?;
            graph_built(name, g, z2_kt_free_size(n, t), clique(t))
        }
        "longline" => {
            let (grp, n, ell) = (grp_param(p, "group")?, num(p, "n")?, num(p, "ell")?);
            let variant: LongLineVariant = param(p, "variant")?.parse()?;
            let (d, kept) = longline_extremal(n, grp.clone(), ell, variant)?;
            Ok(Built {
                name: name.into(),
                host: MatroidDescriptor::dowling(n, &grp),
                kept: Some(kept),
                graph: Some(d.induced_graph(kept)),
                predicted_size: longline_value(n, grp.order(), ell),
                forbidden: Some(MatroidDescriptor::Line { points: ell }),
                seed: None,
            })
        }
        "subgeometry" => {
            let (grp, sub, n, t) = (grp_param(p, "group")?, grp_param(p, "sub")?, num(p, "n")?, num(p, "t")?);
            let d = DowlingGeometry::new(n, grp.clone())?;
            let mut x = ElementSet::EMPTY;
            for item in param(p, "x")?.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let e = d
                    .ground()
                    .iter()
                    .find(|&e| d.element_name(e) == item)
                    .ok_or_else(|| Error::InvalidParameters(format!("unknown element {item}")))?;
                x.insert(e);
            }
            let (d, kept) = subgeometry_extremal(n, t, grp.clone(), &sub, x)?;
            Ok(Built {
                name: name.into(),
                host: MatroidDescriptor::dowling(n, &grp),
                kept: Some(kept),
                graph: Some(d.induced_graph(kept)),
                predicted_size: d.size() - n + t - 1,
                forbidden: Some(MatroidDescriptor::dowling(t, &sub)),
                seed: None,
            })
        }
        "matchstick" => {
            let (r, n) = (num(p, "r")?, num(p, "n")?);
            let m = matchstick(r, n)?;
            Ok(Built {
                name: name.into(),
                host: MatroidDescriptor::Matchstick { rank: r, n },
                kept: Some(m.ground()),
                graph: None,
                predicted_size: (r / 2) * (n + 1) + r % 2,
                forbidden: None,
                seed: None,
            })
        }
        "origami" => {
            let (r, n) = (num(p, "r")?, num(p, "n")?);
            let seed = p.get("seed").map(|s| s.parse::<u64>()).transpose().map_err(|_| Error::InvalidParameters("seed must be an integer".into()))?.unwrap_or(0);
            let fm = origami(r, n)?;
            let vm = origami_vectors(r, n, seed)?;
            if fm.size() <= 16 {
                for s in 0u128..1 << fm.size() {
                    if fm.rank(ElementSet(s)) != vm.rank(ElementSet(s)) {
                        return Err(Error::ClaimFailed(format!("origami oracles disagree on {:?} (seed {seed})", ElementSet(s))));
                    }
                }
            }
            Ok(Built {
                name: name.into(),
                host: MatroidDescriptor::Origami { rank: r, n },
                kept: Some(fm.ground()),
                graph: Some(fm.graph().clone()),
                predicted_size: (r - 1) * n + 1,
                forbidden: None,
                seed: Some(seed),
            })
        }
        "origami-extremal" => {
            let (r, t, n, m) = (num(p, "r")?, num(p, "t")?, num(p, "n")?, num(p, "m")?);
            let kept = origami_extremal(r, t, n, m)?;
            let removed = if n == m { r / t } else { (r - 2) / (t - 2) };
            Ok(Built {
                name: name.into(),
                host: MatroidDescriptor::Origami { rank: r, n },
                kept: Some(kept),
                graph: None,
                predicted_size: (r - 1) * n + 1 - removed,
                forbidden: Some(MatroidDescriptor::Origami { rank: t, n: m }),
                seed: None,
            })
        }
        _ => Err(Error::InvalidParameters(format!(
            "unknown construction {name}; known: {}",
            RECIPES.iter().map(|r| r.0).collect::<Vec<_>>().join(", ")
        ))),
    }
}

/// `C(n, k)` as a machine integer, for callers that know it fits.
pub fn choose(n: usize, k: usize) -> usize {
    binomial(n, k) as usize
}
