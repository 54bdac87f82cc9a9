//! Grouping the extremal subsets of a problem into isomorphism classes.

use super::{search, ExtremalProblem, Prepared, SearchOptions};
use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::gain::GainGraph;
use crate::matroid::{are_isomorphic, circuit_size_histogram, rank_two_flats, RankOracle, Restriction};
use crate::patterns::{is_isomorphic, is_switching_isomorphic};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::time::Instant;

/// Notion of sameness used to group extremal subsets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Equivalence {
    /// Induced gain graphs up to switching and relabelling vertices.
    Switching,
    /// Induced gain graphs up to relabelling vertices only.
    GainGraph,
    /// Restrictions up to matroid isomorphism.
    Matroid,
}

/// One class: its first member in enumeration order and the number of members.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalClass {
    pub representative: Vec<usize>,
    pub names: Vec<String>,
    pub count: usize,
}

/// Every free subset of size `value`, in enumeration order.
pub fn extremal_sets(p: &ExtremalProblem, value: usize, opts: &SearchOptions) -> Result<Vec<ElementSet>> {
    let start = Instant::now();
    let prep = Prepared::new(p)?;
    collect(&prep, value, opts, start)
}

fn collect(prep: &Prepared, value: usize, opts: &SearchOptions, start: Instant) -> Result<Vec<ElementSet>> {
    let mut members = Vec::new();
    let complete = search::for_each_free(prep.detector(), value, opts.budget.map(|b| start + b), &mut |s| members.push(s));
    if !complete {
        return Err(Error::BudgetExhausted { seconds: opts.budget.map_or(0, |b| b.as_secs()) });
    }
    Ok(members)
}

/// All free subsets of size `value`, grouped into classes.
///
/// `equivalence` defaults to switching for Dowling hosts and matroid isomorphism otherwise.
/// Classes come in the order their first member is enumerated.
pub fn classify_extremal(
    p: &ExtremalProblem,
    value: usize,
    equivalence: Option<Equivalence>,
    opts: &SearchOptions,
) -> Result<Vec<ExtremalClass>> {
    let start = Instant::now();
    let prep = Prepared::new(p)?;
    let eq = equivalence.unwrap_or(if prep.dowling.is_some() { Equivalence::Switching } else { Equivalence::Matroid });
    if eq != Equivalence::Matroid && prep.dowling.is_none() {
        return Err(Error::InvalidParameters("gain-graph equivalence needs a Dowling host".into()));
    }
    let members = collect(&prep, value, opts, start)?;
    let mut buckets: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    let mut classes: Vec<(ElementSet, usize)> = Vec::new();
    for s in members {
        let key = invariant(&prep, eq, s);
        let bucket = buckets.entry(key).or_default();
        let mut found = None;
        for &ci in bucket.iter() {
            if equivalent(&prep, eq, classes[ci].0, s)? {
                found = Some(ci);
                break;
            }
        }
        match found {
            Some(ci) => classes[ci].1 += 1,
            None => {
                bucket.push(classes.len());
                classes.push((s, 1));
            }
        }
    }
    Ok(classes
        .into_iter()
        .map(|(s, count)| ExtremalClass { representative: s.to_vec(), names: prep.names(s), count })
        .collect())
}

fn graph_of(prep: &Prepared, s: ElementSet) -> GainGraph {
    prep.dowling.as_ref().expect("checked above").induced_graph(s)
}

/// A value shared by equivalent subsets.
fn invariant(prep: &Prepared, eq: Equivalence, s: ElementSet) -> Vec<usize> {
    match eq {
        Equivalence::Switching | Equivalence::GainGraph => {
            let g = graph_of(prep, s);
            let n = g.n_vertices();
            let mut per_vertex: Vec<(usize, usize)> = (0..n)
                .map(|v| {
                    let deg = (0..n).filter(|&w| w != v).map(|w| g.gains_between(v, w).len()).sum();
                    (usize::from(g.has_joint(v)), deg)
                })
                .collect();
            per_vertex.sort();
            let mut mult: Vec<usize> =
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| g.gains_between(i, j).len()).collect();
            mult.sort();
            per_vertex.into_iter().flat_map(|(a, b)| [a, b]).chain(mult).collect()
        }
        Equivalence::Matroid => {
            let r = Restriction::new(prep.host.clone(), s).expect("subset of the host");
            let mut key = vec![r.full_rank()];
            if s.len() <= 16 {
                key.extend(circuit_size_histogram(&r));
            }
            let mut lines: Vec<usize> = rank_two_flats(&r).iter().map(|l| l.len()).collect();
            lines.sort();
            key.extend(lines);
            key
        }
    }
}

fn equivalent(prep: &Prepared, eq: Equivalence, a: ElementSet, b: ElementSet) -> Result<bool> {
    match eq {
        Equivalence::Switching => is_switching_isomorphic(&graph_of(prep, a), &graph_of(prep, b)),
        Equivalence::GainGraph => is_isomorphic(&graph_of(prep, a), &graph_of(prep, b)),
        Equivalence::Matroid => {
            let ra = Restriction::new(prep.host.clone(), a)?;
            let rb = Restriction::new(prep.host.clone(), b)?;
            are_isomorphic(&ra, &rb)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descriptor::MatroidDescriptor;
    use crate::group::GroupTable;

    #[test]
    fn triangle_free_classes_over_z2() {
        let z2 = GroupTable::cyclic(2).unwrap();
        let p = ExtremalProblem::dowling(3, &z2, MatroidDescriptor::Clique { vertices: 3 });
        let classes = classify_extremal(&p, 4, None, &SearchOptions::default()).unwrap();
        assert_eq!(classes.len(), 4);
        let p4 = ExtremalProblem::dowling(4, &z2, MatroidDescriptor::Clique { vertices: 3 });
        let classes = classify_extremal(&p4, 8, Some(Equivalence::GainGraph), &SearchOptions::default()).unwrap();
        assert_eq!(classes.len(), 1);
    }

    #[test]
    fn counts_add_up() {
        let z2 = GroupTable::cyclic(2).unwrap();
        let p = ExtremalProblem::dowling(3, &z2, MatroidDescriptor::Clique { vertices: 3 });
        let classes = classify_extremal(&p, 4, None, &SearchOptions::default()).unwrap();
        let total: usize = classes.iter().map(|c| c.count).sum();
        let mut direct = 0;
        let prep = Prepared::new(&p).unwrap();
        crate::bitset::for_each_subset_of_size(prep.host.ground(), 4, |s| direct += usize::from(prep.is_free(s)));
        assert_eq!(total, direct);
    }
}
