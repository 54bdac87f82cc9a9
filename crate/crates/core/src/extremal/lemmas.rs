//! Exhaustive checks of finite case analyses over small gain graphs.

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::frame::FrameMatroid;
use crate::gain::GainGraph;
use crate::group::{GroupElement, GroupTable};
use crate::matroid::{find_embedding, Graphic, RankOracle};
use crate::patterns::{balanced_clique, centred_clique, has_balanced_copy, looped_clique};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// Outcome of an exhaustive case check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub name: String,
    pub cases: usize,
    pub passed: usize,
    /// Description of the first failing case.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub maximum: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

impl LemmaReport {
    pub fn all_passed(&self) -> bool {
        self.counterexample.is_none() && self.passed == self.cases
    }
}

fn subsets_of_size(order: usize, k: usize) -> Vec<Vec<GroupElement>> {
    let mut out = Vec::new();
    crate::bitset::for_each_subset_of_size(ElementSet::full(order), k, |s| out.push(s.to_vec()));
    out
}

/// The gain graph whose link labels on the pair `(i, j)` are `labels`, read from `i` to `j`.
pub fn labelled_graph(group: Arc<GroupTable>, n: usize, labels: &[((usize, usize), Vec<GroupElement>)]) -> Result<GainGraph> {
    let mut g = GainGraph::new(group, n);
    for ((i, j), xs) in labels {
        for &x in xs {
            g.add_link(*i, *j, x)?;
        }
    }
    Ok(g)
}

/// An embedding of `M(K_4)` into `FM(g)`, as positions of `g`.
pub fn find_k4(g: &GainGraph) -> Result<Option<Vec<usize>>> {
    let fm = FrameMatroid::new(g.clone())?;
    Ok(find_embedding(&fm, &Graphic::complete(4), fm.ground()))
}

fn describe(labels: &[((usize, usize), Vec<GroupElement>)], group: &GroupTable) -> String {
    labels
        .iter()
        .map(|((i, j), xs)| {
            let names: Vec<&str> = xs.iter().map(|&x| group.name(x)).collect();
            format!("l({}{})={{{}}}", i + 1, j + 1, names.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn run_k4_cases(name: &str, n: usize, cases: Vec<Vec<((usize, usize), Vec<GroupElement>)>>) -> Result<LemmaReport> {
    let group = Arc::new(GroupTable::from_label("Z2xZ2")?);
    let outcomes: Vec<Result<bool>> =
        cases.par_iter().map(|labels| Ok(find_k4(&labelled_graph(group.clone(), n, labels)?)?.is_some())).collect();
    let mut passed = 0;
    let mut counterexample = None;
    for (labels, ok) in cases.iter().zip(outcomes) {
        if ok? {
            passed += 1;
        } else if counterexample.is_none() {
            counterexample = Some(describe(labels, &group));
        }
    }
    Ok(LemmaReport { name: name.into(), cases: cases.len(), passed, counterexample, maximum: None, witness: None })
}

/// Triangles over `Z2×Z2` carrying all four labels on one pair, three on another and two on
/// the last: every such frame matroid contains `M(K_4)`.
pub fn verify_lemma_432() -> Result<LemmaReport> {
    let mut cases = Vec::new();
    for l12 in subsets_of_size(4, 4) {
        for l13 in subsets_of_size(4, 3) {
            for l23 in subsets_of_size(4, 2) {
                cases.push(vec![((0, 1), l12.clone()), ((0, 2), l13.clone()), ((1, 2), l23)]);
            }
        }
    }
    run_k4_cases("432", 3, cases)
}

/// Four vertices over `Z2×Z2`, two labels on the pairs 12 and 34 and three on the other
/// four pairs: every such frame matroid contains `M(K_4)`.
pub fn verify_lemma_233332() -> Result<LemmaReport> {
    let twos = subsets_of_size(4, 2);
    let threes = subsets_of_size(4, 3);
    let mut cases = Vec::new();
    for l12 in &twos {
        for l34 in &twos {
            for l13 in &threes {
                for l14 in &threes {
                    for l23 in &threes {
                        for l24 in &threes {
                            cases.push(vec![
                                ((0, 1), l12.clone()),
                                ((2, 3), l34.clone()),
                                ((0, 2), l13.clone()),
                                ((0, 3), l14.clone()),
                                ((1, 2), l23.clone()),
                                ((1, 3), l24.clone()),
                            ]);
                        }
                    }
                }
            }
        }
    }
    run_k4_cases("233332", 4, cases)
}

/// Largest Z₂-gain graph on `t − 1` vertices with a balanced `K_{t−1}`, no balanced
/// `K_{t−1}^1` and no balanced `H_{t−1}`.
///
/// Switching makes the balanced clique all-identity, so the search runs over loops and
/// negative links only. `maximum` is compared against `(t−1)(t−2) + ⌊(t−2)/2⌋`.
pub fn verify_lemma_t1_vertices(t: usize) -> Result<LemmaReport> {
    if !(4..=7).contains(&t) {
        return Err(Error::InvalidParameters(format!("t must be between 4 and 7, got {t}")));
    }
    let m = t - 1;
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    let bits = m + pairs.len();
    let z2 = Arc::new(GroupTable::cyclic(2)?);
    let forbidden = [looped_clique(m), centred_clique(m)];
    let build = |mask: u64| -> Result<GainGraph> {
        let mut g = balanced_clique(m, z2.clone());
        for v in 0..m {
            if mask >> v & 1 == 1 {
                g.add_joint(v)?;
            }
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> (m + k) & 1 == 1 {
                g.add_link(i, j, 1)?;
            }
        }
        Ok(g)
    };
    let best: Vec<Result<Option<(usize, u64)>>> = (0..1u64 << bits)
        .into_par_iter()
        .map(|mask| {
            let g = build(mask)?;
            for f in &forbidden {
                if has_balanced_copy(&g, f)?.is_some() {
                    return Ok(None);
                }
            }
            Ok(Some((g.len(), mask)))
        })
        .collect();
    let mut top: Option<(usize, u64)> = None;
    for r in best {
        if let Some((size, mask)) = r? {
            if top.map_or(true, |(s, _)| size > s) {
                top = Some((size, mask));
            }
        }
    }
    let (size, mask) = top.ok_or_else(|| Error::InvalidParameters("no admissible graph".into()))?;
    let bound = lemma_t1_bound(t);
    let g = build(mask)?;
    let witness = (0..g.len()).map(|p| g.edge_name(g.edges()[p].kind)).collect();
    let cases = 1usize << bits;
    Ok(LemmaReport {
        name: format!("t-1 vertices, t = {t}"),
        cases,
        passed: if size <= bound { cases } else { 0 },
        counterexample: (size > bound).then(|| format!("{size} edges exceed {bound}")),
        maximum: Some(size),
        witness: Some(witness),
    })
}

/// `(t−1)(t−2) + ⌊(t−2)/2⌋`.
pub fn lemma_t1_bound(t: usize) -> usize {
    (t - 1) * (t - 2) + (t - 2) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalized_432_case_has_two_labels_on_every_pair() {
        // after switching, l(23) = {1, x} and both labels appear on the other pairs
        let group = Arc::new(GroupTable::from_label("Z2xZ2").unwrap());
        let labels = vec![((0, 1), vec![0, 1]), ((0, 2), vec![0, 1]), ((1, 2), vec![0, 1])];
        let g = labelled_graph(group, 3, &labels).unwrap();
        assert!(find_k4(&g).unwrap().is_some());
    }

    #[test]
    fn two_labels_on_two_pairs_only_is_not_enough() {
        let group = Arc::new(GroupTable::from_label("Z2xZ2").unwrap());
        let labels = vec![((0, 1), vec![0, 1]), ((0, 2), vec![0, 1])];
        let g = labelled_graph(group, 3, &labels).unwrap();
        assert!(find_k4(&g).unwrap().is_none());
    }

    #[test]
    fn lemma_432_passes() {
        let r = verify_lemma_432().unwrap();
        assert_eq!((r.cases, r.passed), (24, 24));
    }

    #[test]
    fn lemma_t1_small() {
        let r = verify_lemma_t1_vertices(5).unwrap();
        assert_eq!(r.maximum, Some(13));
        assert_eq!(r.cases, 1024);
    }
}
