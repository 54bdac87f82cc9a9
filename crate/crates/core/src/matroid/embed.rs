//! Embedding and isomorphism search between rank oracles.
//!
//! The search places the elements of the small matroid one at a time and, after each
//! placement, compares ranks on a precomputed list of subsets that end at the new position.

use super::{circuit_size_histogram, closure, is_simple, rank_two_flats, RankOracle};
use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// Largest pattern accepted by [`has_submatroid`].
pub const EMBED_LIMIT: usize = 12;
/// Largest ground set accepted by [`are_isomorphic`].
pub const ISO_LIMIT: usize = 26;
/// Patterns up to this size get complete per-position check lists.
const FULL_CHECK_LIMIT: usize = 16;
/// Subset size of the incremental checks used above [`FULL_CHECK_LIMIT`].
const PARTIAL_CHECK_SIZE: usize = 4;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Embed,
    Iso,
}

struct Plan {
    /// Pattern elements in placement order.
    order: Vec<usize>,
    /// Per position: (mask over positions, expected rank).
    checks: Vec<Vec<(u128, usize)>>,
    /// Per position: host elements allowed there, ascending.
    cands: Vec<Vec<usize>>,
    complete: bool,
}

/// Sizes of the lines with at least three points through each element, descending.
fn line_profiles(m: &dyn RankOracle) -> Option<Vec<Vec<usize>>> {
    if !is_simple(m) {
        return None;
    }
    let mut prof = vec![Vec::new(); m.size()];
    for f in rank_two_flats(m) {
        if f.len() >= 3 {
            for e in f {
                prof[e].push(f.len());
            }
        }
    }
    for p in &mut prof {
        p.sort_unstable_by(|a, b| b.cmp(a));
    }
    Some(prof)
}

fn dominated(small: &[usize], big: &[usize]) -> bool {
    small.len() <= big.len() && small.iter().zip(big).all(|(a, b)| a <= b)
}

fn placement_order(n: &dyn RankOracle, prof: Option<&Vec<Vec<usize>>>) -> Vec<usize> {
    let size = n.size();
    let weight = |e: usize| prof.map_or(0, |p| p[e].iter().sum::<usize>());
    let mut order = Vec::with_capacity(size);
    let mut chosen = ElementSet::EMPTY;
    while order.len() < size {
        let cl = closure(n, chosen);
        let best = (0..size)
            .filter(|&e| !chosen.contains(e))
            .max_by_key(|&e| {
                let pairs = if order.len() >= 2 {
                    let mut c = 0;
                    for (i, &a) in order.iter().enumerate() {
                        for &b in &order[i + 1..] {
                            if n.rank(ElementSet::singleton(a).with(b).with(e)) == 2 {
                                c += 1;
                            }
                        }
                    }
                    c
                } else {
                    0
                };
                (cl.contains(e), pairs, weight(e), std::cmp::Reverse(e))
            })
            .expect("an unchosen element remains");
        order.push(best);
        chosen.insert(best);
    }
    order
}

fn positions_to_set(mask: u128, order: &[usize]) -> ElementSet {
    ElementSet(mask).iter().map(|p| order[p]).collect()
}

fn build_plan(m: &dyn RankOracle, n: &dyn RankOracle, allowed: ElementSet, mode: Mode) -> Option<Plan> {
    let k = n.size();
    let m_prof = line_profiles(m);
    let n_prof = line_profiles(n);
    let profiles = match (&m_prof, &n_prof) {
        (Some(a), Some(b)) => Some((a, b)),
        _ => None,
    };
    if mode == Mode::Iso {
        if let Some((a, b)) = profiles {
            let mut sa = a.clone();
            let mut sb = b.clone();
            sa.sort();
            sb.sort();
            if sa != sb {
                return None;
            }
        }
    }
    let order = placement_order(n, n_prof.as_ref());
    let complete = k <= FULL_CHECK_LIMIT;
    let mut checks: Vec<Vec<(u128, usize)>> = vec![Vec::new(); k];
    if complete {
        let ranks: Vec<usize> = (0..1u128 << k).map(|s| n.rank(positions_to_set(s, &order))).collect();
        let prefix_rank: Vec<usize> = (0..k).map(|p| ranks[(1usize << (p + 1)) - 1]).collect();
        for s in 1..1usize << k {
            let top = usize::BITS as usize - 1 - s.leading_zeros() as usize;
            let len = s.count_ones() as usize;
            let r = ranks[s];
            let is_basis_of_prefix = r == len && r == prefix_rank[top];
            let is_circuit = r + 1 == len
                && ElementSet(s as u128).iter().all(|p| ranks[s & !(1 << p)] == len - 1);
            if is_basis_of_prefix || is_circuit {
                checks[top].push((s as u128, r));
            }
        }
    } else {
        for top in 0..k {
            let earlier = ElementSet::full(top);
            for size in 0..PARTIAL_CHECK_SIZE {
                crate::bitset::for_each_subset_of_size(earlier, size, |s| {
                    let mask = s.with(top).0;
                    checks[top].push((mask, n.rank(positions_to_set(mask, &order))));
                });
            }
            let prefix = ElementSet::full(top + 1).0;
            checks[top].push((prefix, n.rank(positions_to_set(prefix, &order))));
        }
    }
    let cands = order
        .iter()
        .map(|&e| {
            allowed
                .iter()
                .filter(|&c| match profiles {
                    Some((mp, np)) => match mode {
                        Mode::Embed => dominated(&np[e], &mp[c]),
                        Mode::Iso => np[e] == mp[c],
                    },
                    None => true,
                })
                .collect()
        })
        .collect();
    Some(Plan { order, checks, cands, complete })
}

/// Depth-first search over partial injections. `visit` returns true to stop.
fn run(plan: &Plan, m: &dyn RankOracle, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(
        plan: &Plan,
        m: &dyn RankOracle,
        psi: &mut Vec<usize>,
        used: ElementSet,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let k = psi.len();
        if k == plan.order.len() {
            return visit(psi);
        }
        for &c in &plan.cands[k] {
            if used.contains(c) {
                continue;
            }
            psi.push(c);
            let ok = plan.checks[k]
                .iter()
                .all(|&(mask, r)| m.rank(ElementSet(mask).iter().map(|p| psi[p]).collect()) == r);
            if ok && rec(plan, m, psi, used.with(c), visit) {
                return true;
            }
            psi.pop();
        }
        false
    }
    rec(plan, m, &mut Vec::with_capacity(plan.order.len()), ElementSet::EMPTY, visit)
}

fn to_map(plan: &Plan, psi: &[usize]) -> Vec<usize> {
    let mut map = vec![0; psi.len()];
    for (p, &e) in plan.order.iter().enumerate() {
        map[e] = psi[p];
    }
    map
}

fn search_one(m: &dyn RankOracle, n: &dyn RankOracle, allowed: ElementSet, mode: Mode) -> Option<Vec<usize>> {
    if n.size() > allowed.len() || (mode == Mode::Iso && n.size() != m.size()) {
        return None;
    }
    if mode == Mode::Iso && n.full_rank() != m.full_rank() {
        return None;
    }
    let plan = build_plan(m, n, allowed, mode)?;
    let mut found = None;
    run(&plan, m, &mut |psi| {
        let map = to_map(&plan, psi);
        if plan.complete || verify_embedding(m, n, &map) {
            found = Some(map);
            true
        } else {
            false
        }
    });
    found
}

/// An embedding of `n` into `m` restricted to `allowed`, without size limits.
///
/// `map[e]` is the image of pattern element `e`.
pub fn find_embedding(m: &dyn RankOracle, n: &dyn RankOracle, allowed: ElementSet) -> Option<Vec<usize>> {
    search_one(m, n, allowed & m.ground(), Mode::Embed)
}

/// A rank-preserving bijection from `n` onto `m`, without size limits.
pub fn find_isomorphism(m: &dyn RankOracle, n: &dyn RankOracle) -> Option<Vec<usize>> {
    if m.size() != n.size() {
        return None;
    }
    if m.size() <= FULL_CHECK_LIMIT && circuit_size_histogram(m) != circuit_size_histogram(n) {
        return None;
    }
    search_one(m, n, m.ground(), Mode::Iso)
}

/// An embedding of `n` into `m` whose rank agreement has been re-checked on all subsets of `n`.
pub fn has_submatroid(m: &dyn RankOracle, n: &dyn RankOracle) -> Result<Option<Vec<usize>>> {
    if n.size() > EMBED_LIMIT {
        return Err(Error::TooLarge { what: "pattern matroid", size: n.size(), bound: EMBED_LIMIT });
    }
    if n.size() > m.size() {
        return Ok(None);
    }
    let found = find_embedding(m, n, m.ground());
    if let Some(map) = &found {
        assert!(verify_embedding(m, n, map), "embedding search returned an unverified map");
    }
    Ok(found)
}

/// Isomorphism test for matroids of at most [`ISO_LIMIT`] elements.
pub fn are_isomorphic(m: &dyn RankOracle, n: &dyn RankOracle) -> Result<bool> {
    let size = m.size().max(n.size());
    if size > ISO_LIMIT {
        return Err(Error::TooLarge { what: "matroid", size, bound: ISO_LIMIT });
    }
    Ok(find_isomorphism(m, n).is_some())
}

/// Every image `ψ(E(n))` of an embedding of `n` into `m|allowed`, sorted.
pub fn embedding_images(m: &dyn RankOracle, n: &dyn RankOracle, allowed: ElementSet) -> Result<Vec<ElementSet>> {
    if n.size() > FULL_CHECK_LIMIT {
        return Err(Error::TooLarge { what: "pattern matroid", size: n.size(), bound: FULL_CHECK_LIMIT });
    }
    let allowed = allowed & m.ground();
    let mut images = BTreeSet::new();
    if n.size() <= allowed.len() {
        if let Some(plan) = build_plan(m, n, allowed, Mode::Embed) {
            run(&plan, m, &mut |psi| {
                images.insert(psi.iter().copied().collect::<ElementSet>());
                false
            });
        }
    }
    Ok(images.into_iter().collect())
}

/// Checks that `map` preserves rank on every subset of `n`.
///
/// Small patterns are checked subset by subset; larger ones by walking the independent
/// sets of `n` and testing each one-element extension.
pub fn verify_embedding(m: &dyn RankOracle, n: &dyn RankOracle, map: &[usize]) -> bool {
    let k = n.size();
    if map.len() != k || map.iter().any(|&e| e >= m.size()) {
        return false;
    }
    if map.iter().collect::<BTreeSet<_>>().len() != k {
        return false;
    }
    let image = |s: ElementSet| -> ElementSet { s.iter().map(|e| map[e]).collect() };
    if k <= 20 {
        return (0..1u128 << k).all(|s| n.rank(ElementSet(s)) == m.rank(image(ElementSet(s))));
    }
    fn walk(
        n: &dyn RankOracle,
        m: &dyn RankOracle,
        image: &dyn Fn(ElementSet) -> ElementSet,
        cur: ElementSet,
        start: usize,
    ) -> bool {
        for e in start..n.size() {
            let s = cur.with(e);
            if n.rank(s) == s.len() {
                if m.rank(image(s)) != s.len() || !walk(n, m, image, s, e + 1) {
                    return false;
                }
            } else if m.rank(image(s)) == s.len() {
                return false;
            }
        }
        true
    }
    walk(n, m, &image, ElementSet::EMPTY, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{DirectSum, Graphic, Uniform};
    use std::sync::Arc;

    #[test]
    fn uniform_embeddings() {
        let u23 = Uniform::new(2, 3).unwrap();
        let u24 = Uniform::new(2, 4).unwrap();
        assert!(has_submatroid(&u24, &u23).unwrap().is_some());
        assert!(has_submatroid(&u23, &u24).unwrap().is_none());
        assert!(has_submatroid(&Uniform::new(3, 5).unwrap(), &u23).unwrap().is_none());
        assert!(has_submatroid(&u24, &Uniform::new(2, 13).unwrap()).is_err());
    }

    #[test]
    fn graphic_embeddings() {
        let k4 = Graphic::complete(4);
        let k5 = Graphic::complete(5);
        let k3 = Graphic::complete(3);
        let map = has_submatroid(&k5, &k4).unwrap().unwrap();
        assert!(verify_embedding(&k5, &k4, &map));
        assert!(has_submatroid(&k4, &Uniform::new(2, 4).unwrap()).unwrap().is_none());
        assert_eq!(embedding_images(&k4, &k3, k4.ground()).unwrap().len(), 4);
        assert_eq!(embedding_images(&k5, &k4, k5.ground()).unwrap().len(), 5);
    }

    #[test]
    fn isomorphisms() {
        let k4 = Graphic::complete(4);
        assert!(are_isomorphic(&k4, &k4).unwrap());
        let c6 = Graphic::new(6, (0..6).map(|i| (i, (i + 1) % 6)).collect()).unwrap();
        let u56 = Uniform::new(5, 6).unwrap();
        assert!(are_isomorphic(&c6, &u56).unwrap());
        assert!(!are_isomorphic(&k4, &Uniform::new(3, 6).unwrap()).unwrap());
        let two_lines = DirectSum::new(vec![Arc::new(Uniform::new(2, 3).unwrap()), Arc::new(Uniform::new(2, 3).unwrap())]);
        assert!(!are_isomorphic(&two_lines, &k4).unwrap());
        let k7 = Graphic::complete(7);
        let k7b = Graphic::new(7, k7.edges().iter().rev().map(|&(a, b)| (6 - b, 6 - a)).collect()).unwrap();
        assert!(are_isomorphic(&k7, &k7b).unwrap());
        assert!(are_isomorphic(&Uniform::new(2, 27).unwrap(), &Uniform::new(2, 27).unwrap()).is_err());
    }

    #[test]
    fn large_isomorphism_uses_final_verification() {
        let k8 = Graphic::complete(8);
        let map = find_isomorphism(&k8, &k8).unwrap();
        assert!(verify_embedding(&k8, &k8, &map));
    }

    #[test]
    fn verification_rejects_bad_maps() {
        let k4 = Graphic::complete(4);
        let u = Uniform::new(3, 6).unwrap();
        assert!(!verify_embedding(&u, &k4, &[0, 1, 2, 3, 4, 5]));
        assert!(!verify_embedding(&k4, &k4, &[0, 0, 1, 2, 3, 4]));
    }
}
