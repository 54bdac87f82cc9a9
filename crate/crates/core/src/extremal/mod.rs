//! Extremal numbers `ex(M, N)`: the largest subsets of a host matroid `M` with no restriction
//! isomorphic to `N`, with certificates that can be re-checked independently.

pub mod cache;
pub mod classify;
pub mod density;
pub mod lemmas;
pub mod search;

pub use cache::{Cache, CACHE_DIR_ENV};
pub use classify::{classify_extremal, extremal_sets, Equivalence, ExtremalClass};
pub use density::{check_relative_density, density_table, is_non_increasing, DensityRow};
pub use lemmas::{verify_lemma_233332, verify_lemma_432, verify_lemma_t1_vertices, LemmaReport};
pub use search::{CopyFamily, Decision, Detector, Tally};

use crate::bitset::{binomial, ElementSet};
use crate::descriptor::MatroidDescriptor;
use crate::error::{Error, Result};
use crate::frame::{subgeometry_copies, DowlingGeometry};
use crate::group::GroupTable;
use crate::matroid::{embedding_images, rank_two_flats, Matroid};
use crate::patterns::clique_copies_z2;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

pub const DEFAULT_BUDGET: Duration = Duration::from_secs(120);
pub const DEEP_BUDGET: Duration = Duration::from_secs(30 * 60);
/// Largest forbidden matroid whose copies are listed by the generic embedding search.
pub const EMBEDDING_PATTERN_LIMIT: usize = 16;
/// Abstract hosts above this size get no line blocks.
const LINE_BLOCK_HOST_LIMIT: usize = 40;

/// How copies of the forbidden matroid are recognised.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Detection {
    /// Pick the most specific method that applies.
    #[default]
    Auto,
    /// Balanced copies of the catalogued Z₂ realizations of `M(K_t)`.
    Pattern,
    /// Every image of an embedding, listed once up front.
    Embedding,
    /// Copies of a Dowling subgeometry located through their joints.
    JointAnchored,
    /// A fresh embedding search for every tested subset.
    Brute,
}

impl fmt::Display for Detection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Detection::Auto => "auto",
            Detection::Pattern => "pattern",
            Detection::Embedding => "embedding",
            Detection::JointAnchored => "joint-anchored",
            Detection::Brute => "brute",
        })
    }
}

impl FromStr for Detection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "auto" => Detection::Auto,
            "pattern" => Detection::Pattern,
            "embedding" => Detection::Embedding,
            "joint-anchored" | "joint" => Detection::JointAnchored,
            "brute" => Detection::Brute,
            _ => return Err(Error::InvalidParameters(format!("unknown detection method `{s}`"))),
        })
    }
}

/// A host, a forbidden restriction and a detection method.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExtremalProblem {
    pub host: MatroidDescriptor,
    pub forbidden: MatroidDescriptor,
    #[serde(default)]
    pub detection: Detection,
}

impl ExtremalProblem {
    pub fn new(host: MatroidDescriptor, forbidden: MatroidDescriptor) -> Self {
        ExtremalProblem { host, forbidden, detection: Detection::Auto }
    }

    /// `ex(Q_n(group), forbidden)`.
    pub fn dowling(n: usize, group: &GroupTable, forbidden: MatroidDescriptor) -> Self {
        Self::new(MatroidDescriptor::dowling(n, group), forbidden)
    }

    pub fn with_detection(mut self, detection: Detection) -> Self {
        self.detection = detection;
        self
    }

    /// Canonical text used in certificates and as the cache key. The detection method is
    /// left out: every method answers the same question.
    pub fn key(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for ExtremalProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ex({}, {})", self.host, self.forbidden)
    }
}

/// Limits for one computation.
#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// `None` means no limit.
    pub budget: Option<Duration>,
    pub jobs: usize,
    /// Seed of the randomized greedy starts.
    pub seed: u64,
    pub restarts: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: Some(DEFAULT_BUDGET),
            jobs: std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
            seed: 0,
            restarts: 32,
        }
    }
}

impl SearchOptions {
    pub fn deep() -> Self {
        SearchOptions { budget: Some(DEEP_BUDGET), ..Self::default() }
    }

    pub fn serial() -> Self {
        SearchOptions { jobs: 1, ..Self::default() }
    }

    fn deadline(&self, start: Instant) -> Option<Instant> {
        self.budget.map(|b| start + b)
    }
}

/// A problem with its host built and its detector ready.
#[derive(Clone)]
pub struct Prepared {
    pub problem: ExtremalProblem,
    pub method: Detection,
    pub host: Matroid,
    pub forbidden: Matroid,
    pub dowling: Option<DowlingGeometry>,
    detector: Detector,
}

impl Prepared {
    pub fn new(problem: &ExtremalProblem) -> Result<Self> {
        let host = problem.host.build()?;
        let forbidden = problem.forbidden.build()?;
        let dowling = problem.host.dowling_geometry()?;
        let method = match problem.detection {
            Detection::Auto => auto_method(problem, dowling.as_ref(), &forbidden),
            m => m,
        };
        let n = host.size();
        let detector = match method {
            Detection::Pattern => {
                let (d, t) = pattern_args(problem, dowling.as_ref())?;
                let copies = clique_copies_z2(d.graph(), t)?.into_iter().collect();
                Detector::Family(CopyFamily::new(n, copies, blocks(dowling.as_ref(), &host, &forbidden)))
            }
            Detection::JointAnchored => {
                let (d, t, sub) = anchored_args(problem, dowling.as_ref())?;
                let copies = subgeometry_copies(d, ElementSet::full(n), t, &sub)?;
                Detector::Family(CopyFamily::new(n, copies, blocks(dowling.as_ref(), &host, &forbidden)))
            }
            Detection::Embedding => {
                if forbidden.size() > EMBEDDING_PATTERN_LIMIT {
                    return Err(Error::DetectionMismatch {
                        method: method.to_string(),
                        reason: format!("forbidden matroid has more than {EMBEDDING_PATTERN_LIMIT} elements"),
                    });
                }
                let copies = embedding_images(host.as_ref(), forbidden.as_ref(), host.ground())?;
                Detector::Family(CopyFamily::new(n, copies, blocks(dowling.as_ref(), &host, &forbidden)))
            }
            Detection::Brute => Detector::Direct { host: host.clone(), forbidden: forbidden.clone() },
            Detection::Auto => unreachable!("resolved above"),
        };
        Ok(Prepared { problem: problem.clone(), method, host, forbidden, dowling, detector })
    }

    pub fn size(&self) -> usize {
        self.host.size()
    }

    pub fn detector(&self) -> &Detector {
        &self.detector
    }

    /// Host elements of a copy of the forbidden matroid inside `s`, if any.
    pub fn find_copy(&self, s: ElementSet) -> Option<ElementSet> {
        self.detector.copy_within(s)
    }

    pub fn is_free(&self, s: ElementSet) -> bool {
        self.find_copy(s).is_none()
    }

    pub fn names(&self, s: ElementSet) -> Vec<String> {
        s.iter().map(|e| self.host.element_name(e)).collect()
    }

    /// Looks up host elements by name.
    pub fn parse_names(&self, names: &[String]) -> Result<ElementSet> {
        let mut s = ElementSet::EMPTY;
        for name in names {
            let e = (0..self.size())
                .find(|&e| &self.host.element_name(e) == name)
                .ok_or_else(|| Error::InvalidParameters(format!("no host element named `{name}`")))?;
            s.insert(e);
        }
        Ok(s)
    }

    /// A large free set from greedy passes over the natural order and seeded random orders.
    pub fn greedy_lower_bound(&self, seed: u64, restarts: usize) -> ElementSet {
        let mut order: Vec<usize> = (0..self.size()).collect();
        let mut best = self.detector.extend_greedy(ElementSet::EMPTY, &order);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..restarts {
            order.shuffle(&mut rng);
            let s = self.detector.extend_greedy(ElementSet::EMPTY, &order);
            if s.len() > best.len() {
                best = s;
            }
        }
        best
    }

    fn certificate(&self, value: usize, witness: ElementSet, start: Instant) -> Certificate {
        Certificate {
            problem: self.problem.key(),
            host: self.problem.host.clone(),
            forbidden: self.problem.forbidden.clone(),
            value,
            witness: self.names(witness),
            witness_ids: witness.to_vec(),
            exhaustion: None,
            method: self.method,
            status: Status::Certified,
            note: None,
            elapsed_ms: start.elapsed().as_millis() as u64,
            engine_version: crate::ENGINE_VERSION.to_string(),
        }
    }

    fn exhaustion(&self, size: usize, tally: &Tally) -> Exhaustion {
        let total = binomial(self.size(), size);
        Exhaustion {
            size,
            checked: tally.accounted(),
            contained_copy: tally.contain_copy,
            pruned_by_bound: tally.pruned_by_bound,
            total,
            all_contained_forbidden: tally.free_leaves == 0 && tally.accounted() == total,
            reduced_by_symmetry: false,
        }
    }
}

fn auto_method(p: &ExtremalProblem, d: Option<&DowlingGeometry>, forbidden: &Matroid) -> Detection {
    if pattern_args(p, d).is_ok() {
        Detection::Pattern
    } else if anchored_args(p, d).is_ok() {
        Detection::JointAnchored
    } else if forbidden.size() <= EMBEDDING_PATTERN_LIMIT {
        Detection::Embedding
    } else {
        Detection::Brute
    }
}

fn pattern_args<'a>(p: &ExtremalProblem, d: Option<&'a DowlingGeometry>) -> Result<(&'a DowlingGeometry, usize)> {
    let mismatch = |reason: &str| Error::DetectionMismatch { method: "pattern".into(), reason: reason.into() };
    let d = d.ok_or_else(|| mismatch("the host is not a Dowling geometry"))?;
    if d.group().order() != 2 {
        return Err(mismatch("patterns are catalogued over Z2 only"));
    }
    match p.forbidden {
        MatroidDescriptor::Clique { vertices } if (3..=8).contains(&vertices) => Ok((d, vertices)),
        _ => Err(mismatch("the forbidden matroid is not M(K_t) with 3 <= t <= 8")),
    }
}

fn anchored_args<'a>(p: &ExtremalProblem, d: Option<&'a DowlingGeometry>) -> Result<(&'a DowlingGeometry, usize, GroupTable)> {
    let mismatch = |reason: &str| Error::DetectionMismatch { method: "joint-anchored".into(), reason: reason.into() };
    let d = d.ok_or_else(|| mismatch("the host is not a Dowling geometry"))?;
    match &p.forbidden {
        MatroidDescriptor::Dowling { n, group } if *n >= 3 => {
            let sub = GroupTable::from_label(group)?;
            if sub.order() < 2 {
                return Err(mismatch("the forbidden geometry has trivial group"));
            }
            Ok((d, *n, sub))
        }
        _ => Err(mismatch("the forbidden matroid is not a Dowling geometry of rank at least 3")),
    }
}

/// Disjoint-ish groups of elements whose free part is capped exactly during the search.
fn blocks(d: Option<&DowlingGeometry>, host: &Matroid, forbidden: &Matroid) -> Vec<ElementSet> {
    let r = forbidden.full_rank();
    match (d, r) {
        (Some(d), 2) => {
            let n = d.n();
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| d.pair_line(i, j)).collect()
        }
        (Some(d), 3) => {
            let n = d.n();
            let mut out = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    for k in j + 1..n {
                        out.push(d.pair_line(i, j) | d.pair_line(i, k) | d.pair_line(j, k));
                    }
                }
            }
            out
        }
        (None, 2) if host.size() <= LINE_BLOCK_HOST_LIMIT => {
            let mut lines: Vec<ElementSet> = rank_two_flats(host.as_ref()).into_iter().filter(|l| l.len() >= 3).collect();
            lines.sort_by_key(|l| std::cmp::Reverse(l.len()));
            lines
        }
        _ => Vec::new(),
    }
}

/// Whether a certificate proves its claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Certified,
    BudgetExhausted,
    ClaimFailed,
}

/// Record of the upper-bound search over all subsets of one size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exhaustion {
    /// Subset size searched, one more than the value.
    pub size: usize,
    /// Subsets accounted for; equals `total` on completion.
    pub checked: u128,
    /// Subsets shown to contain a copy.
    pub contained_copy: u128,
    /// Subsets excluded by a counting bound, all of which contain a copy.
    pub pruned_by_bound: u128,
    /// `C(|host|, size)`.
    pub total: u128,
    pub all_contained_forbidden: bool,
    pub reduced_by_symmetry: bool,
}

/// A witness for `ex >= value` and, when certified, an exhaustion for `ex <= value`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub problem: String,
    pub host: MatroidDescriptor,
    pub forbidden: MatroidDescriptor,
    pub value: usize,
    pub witness: Vec<String>,
    pub witness_ids: Vec<usize>,
    pub exhaustion: Option<Exhaustion>,
    pub method: Detection,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub elapsed_ms: u64,
    pub engine_version: String,
}

impl Certificate {
    pub fn witness_set(&self) -> ElementSet {
        self.witness_ids.iter().copied().collect()
    }

    pub fn is_certified(&self) -> bool {
        self.status == Status::Certified
    }

    /// The problem this certificate answers, with the detection method it used.
    pub fn to_problem(&self) -> ExtremalProblem {
        ExtremalProblem { host: self.host.clone(), forbidden: self.forbidden.clone(), detection: self.method }
    }

    /// Runs [`verify_ex`] again on the stored claim and witness.
    pub fn recheck(&self, opts: &SearchOptions) -> Result<Certificate> {
        verify_ex(&self.to_problem(), self.value, self.witness_set(), opts)
    }

    /// Equality ignoring timing.
    pub fn same_result(&self, other: &Certificate) -> bool {
        Certificate { elapsed_ms: 0, ..self.clone() } == Certificate { elapsed_ms: 0, ..other.clone() }
    }
}

/// Computes `ex(host, forbidden)` exactly: a greedy lower bound, then decision searches for
/// one more element until one fails.
pub fn ex_exhaustive(p: &ExtremalProblem, opts: &SearchOptions) -> Result<Certificate> {
    let start = Instant::now();
    let prep = Prepared::new(p)?;
    ex_prepared(&prep, opts, start)
}

/// [`ex_exhaustive`] on a problem that is already prepared.
pub fn ex_prepared(prep: &Prepared, opts: &SearchOptions, start: Instant) -> Result<Certificate> {
    let deadline = opts.deadline(start);
    let order: Vec<usize> = (0..prep.size()).collect();
    let mut best = prep.greedy_lower_bound(opts.seed, opts.restarts);
    loop {
        let k = best.len() + 1;
        match search::decide(&prep.detector, k, opts.jobs, deadline) {
            Decision::Found(w) => best = prep.detector.extend_greedy(w, &order),
            Decision::Exhausted(tally) => {
                let mut cert = prep.certificate(best.len(), best, start);
                cert.exhaustion = Some(prep.exhaustion(k, &tally));
                cert.elapsed_ms = start.elapsed().as_millis() as u64;
                return Ok(cert);
            }
            Decision::OutOfTime => {
                let mut cert = prep.certificate(best.len(), best, start);
                cert.status = Status::BudgetExhausted;
                cert.note = Some(format!("lower bound only; no decision for size {k} within the budget"));
                return Ok(cert);
            }
        }
    }
}

/// Checks a claimed value: the witness must have the claimed size and be free, and no free
/// subset may have one more element.
pub fn verify_ex(p: &ExtremalProblem, claimed: usize, witness: ElementSet, opts: &SearchOptions) -> Result<Certificate> {
    let start = Instant::now();
    let prep = Prepared::new(p)?;
    verify_prepared(&prep, claimed, witness, opts, start)
}

pub fn verify_prepared(prep: &Prepared, claimed: usize, witness: ElementSet, opts: &SearchOptions, start: Instant) -> Result<Certificate> {
    if let Some(e) = (witness - prep.host.ground()).first() {
        return Err(Error::ForeignElement { element: e, size: prep.size() });
    }
    let mut cert = prep.certificate(claimed, witness, start);
    if witness.len() != claimed {
        cert.status = Status::ClaimFailed;
        cert.note = Some(format!("witness has {} elements, claim is {claimed}", witness.len()));
        return Ok(cert);
    }
    if let Some(copy) = prep.find_copy(witness) {
        cert.status = Status::ClaimFailed;
        cert.note = Some(format!("witness contains a copy of {} on {{{}}}", prep.problem.forbidden, prep.names(copy).join(", ")));
        return Ok(cert);
    }
    let k = claimed + 1;
    match search::decide(&prep.detector, k, opts.jobs, opts.deadline(start)) {
        Decision::Found(w) => {
            cert.status = Status::ClaimFailed;
            cert.note = Some(format!("free subset of size {k}: {{{}}}", prep.names(w).join(", ")));
        }
        Decision::Exhausted(tally) => cert.exhaustion = Some(prep.exhaustion(k, &tally)),
        Decision::OutOfTime => {
            cert.status = Status::BudgetExhausted;
            cert.note = Some(format!("no decision for size {k} within the budget"));
        }
    }
    cert.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(cert)
}

/// A copy of `forbidden` inside `host|kept`, found without listing all copies of the host.
pub fn find_forbidden(host: &MatroidDescriptor, forbidden: &MatroidDescriptor, kept: ElementSet) -> Result<Option<ElementSet>> {
    let p = ExtremalProblem::new(host.clone(), forbidden.clone());
    let d = host.dowling_geometry()?;
    if let Ok((d, t)) = pattern_args(&p, d.as_ref()) {
        let g = d.induced_graph(kept);
        return Ok(crate::patterns::clique_copies_z2(&g, t)?.into_iter().next().map(|c| {
            let ids: Vec<usize> = c.iter().map(|pos| g.edges()[pos].id).collect();
            ids.into_iter().collect()
        }));
    }
    if let Ok((d, t, sub)) = anchored_args(&p, d.as_ref()) {
        return Ok(crate::frame::find_subgeometry(d, kept, t, &sub)?.map(|m| m.into_iter().collect()));
    }
    let h = host.build()?;
    let f = forbidden.build()?;
    Ok(crate::matroid::find_embedding(h.as_ref(), f.as_ref(), kept).map(|m| m.into_iter().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{bipartite_z2, h_ab};
    use crate::matroid::RankOracle;

    fn z(k: usize) -> GroupTable {
        GroupTable::cyclic(k).unwrap()
    }

    fn exact(p: &ExtremalProblem) -> usize {
        let c = ex_exhaustive(p, &SearchOptions::default()).unwrap();
        assert!(c.is_certified(), "{c:?}");
        let ex = c.exhaustion.as_ref().unwrap();
        assert!(ex.all_contained_forbidden);
        assert_eq!(ex.checked, ex.total);
        c.value
    }

    #[test]
    fn small_examples() {
        assert_eq!(exact(&ExtremalProblem::dowling(3, &z(2), MatroidDescriptor::Clique { vertices: 3 })), 4);
        assert_eq!(exact(&ExtremalProblem::dowling(3, &z(2), MatroidDescriptor::Line { points: 5 })), 9);
        assert_eq!(exact(&ExtremalProblem::dowling(2, &z(3), MatroidDescriptor::Line { points: 4 })), 3);
    }

    #[test]
    fn methods_agree_on_small_hosts() {
        for (n, k, forbidden) in [
            (3, 2, MatroidDescriptor::Clique { vertices: 3 }),
            (3, 2, MatroidDescriptor::Clique { vertices: 4 }),
            (3, 3, MatroidDescriptor::Clique { vertices: 3 }),
            (3, 2, MatroidDescriptor::Line { points: 4 }),
        ] {
            let base = ExtremalProblem::dowling(n, &z(k), forbidden);
            let values: Vec<usize> = [Detection::Auto, Detection::Embedding, Detection::Brute]
                .into_iter()
                .map(|m| exact(&base.clone().with_detection(m)))
                .collect();
            assert!(values.windows(2).all(|w| w[0] == w[1]), "{} {values:?}", base);
        }
    }

    #[test]
    fn verify_examples() {
        let opts = SearchOptions::default();
        let p = ExtremalProblem::dowling(4, &z(2), MatroidDescriptor::Clique { vertices: 3 });
        let prep = Prepared::new(&p).unwrap();
        let d = prep.dowling.as_ref().unwrap();
        let w = d.subset_of(&bipartite_z2(2, 2).unwrap()).unwrap();
        let c = verify_ex(&p, 8, w, &opts).unwrap();
        assert_eq!(c.status, Status::Certified, "{c:?}");

        let p = ExtremalProblem::dowling(4, &z(2), MatroidDescriptor::Clique { vertices: 4 });
        let w = d.subset_of(&h_ab(3, 1).unwrap()).unwrap();
        let c = verify_ex(&p, 12, w, &opts).unwrap();
        assert_eq!(c.status, Status::Certified, "{c:?}");
        assert!(c.recheck(&opts).unwrap().same_result(&c));

        let p = ExtremalProblem::dowling(3, &z(2), MatroidDescriptor::Clique { vertices: 3 });
        let five: ElementSet = (0..5).collect();
        let c = verify_ex(&p, 5, five, &opts).unwrap();
        assert_eq!(c.status, Status::ClaimFailed);
        assert!(c.note.unwrap().contains("copy"));
    }

    #[test]
    fn wrong_size_claim_fails() {
        let p = ExtremalProblem::dowling(3, &z(2), MatroidDescriptor::Clique { vertices: 3 });
        let c = verify_ex(&p, 4, ElementSet::from_iter([0]), &SearchOptions::default()).unwrap();
        assert_eq!(c.status, Status::ClaimFailed);
    }

    #[test]
    fn understated_claim_fails() {
        let p = ExtremalProblem::dowling(3, &z(2), MatroidDescriptor::Clique { vertices: 3 });
        let c = verify_ex(&p, 3, ElementSet::from_iter([0, 1, 2]), &SearchOptions::default()).unwrap();
        assert_eq!(c.status, Status::ClaimFailed);
        assert!(c.note.unwrap().starts_with("free subset of size 4"));
    }

    #[test]
    fn detection_mismatch_is_reported() {
        let p = ExtremalProblem::dowling(3, &z(3), MatroidDescriptor::Clique { vertices: 3 }).with_detection(Detection::Pattern);
        assert!(matches!(Prepared::new(&p), Err(Error::DetectionMismatch { .. })));
    }

    #[test]
    fn certificate_json_round_trip() {
        let p = ExtremalProblem::dowling(3, &z(2), MatroidDescriptor::Clique { vertices: 3 });
        let c = ex_exhaustive(&p, &SearchOptions::default()).unwrap();
        let text = serde_json::to_string(&c).unwrap();
        let back: Certificate = serde_json::from_str(&text).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn find_forbidden_uses_element_ids() {
        let host = MatroidDescriptor::Dowling { n: 4, group: "Z2".into() };
        let d = host.dowling_geometry().unwrap().unwrap();
        let kept = d.subset_of(&h_ab(3, 1).unwrap()).unwrap();
        assert!(find_forbidden(&host, &MatroidDescriptor::Clique { vertices: 4 }, kept).unwrap().is_none());
        let c = find_forbidden(&host, &MatroidDescriptor::Clique { vertices: 3 }, kept).unwrap().unwrap();
        assert!(c.is_subset(kept));
        assert_eq!(d.rank(c), 2);
    }
}
