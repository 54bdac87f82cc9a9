//! Matroids given by rank oracles.

mod embed;
mod instances;

pub use embed::{
    are_isomorphic, embedding_images, find_embedding, find_isomorphism, has_submatroid,
    verify_embedding, EMBED_LIMIT, ISO_LIMIT,
};
pub use instances::{DirectSum, Graphic, Restriction, Uniform, VectorMatroid, DEFAULT_PRIME};

use crate::bitset::{binomial, for_each_subset_of_size, ElementSet};
use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::sync::Arc;

/// A matroid on the ground set `0..size()` described by its rank function.
pub trait RankOracle: Send + Sync {
    fn size(&self) -> usize;

    /// Rank of `s`. Elements outside the ground set are a logic error; see [`checked_rank`].
    fn rank(&self, s: ElementSet) -> usize;

    /// Display name of an element.
    fn element_name(&self, e: usize) -> String {
        format!("e{e}")
    }

    fn ground(&self) -> ElementSet {
        ElementSet::full(self.size())
    }

    fn full_rank(&self) -> usize {
        self.rank(self.ground())
    }
}

/// Shared handle to a matroid.
pub type Matroid = Arc<dyn RankOracle>;

/// Rank with a ground-set membership check.
pub fn checked_rank(m: &dyn RankOracle, s: ElementSet) -> Result<usize> {
    match (s - m.ground()).first() {
        Some(e) => Err(Error::ForeignElement { element: e, size: m.size() }),
        None => Ok(m.rank(s)),
    }
}

pub fn is_independent(m: &dyn RankOracle, s: ElementSet) -> bool {
    m.rank(s) == s.len()
}

/// Dependent, with every single-element deletion independent.
pub fn is_circuit(m: &dyn RankOracle, s: ElementSet) -> bool {
    !s.is_empty() && m.rank(s) < s.len() && s.iter().all(|e| m.rank(s.without(e)) == s.len() - 1)
}

/// All elements whose addition does not raise the rank of `s`.
pub fn closure(m: &dyn RankOracle, s: ElementSet) -> ElementSet {
    let r = m.rank(s);
    m.ground().iter().filter(|&e| s.contains(e) || m.rank(s.with(e)) == r).collect()
}

/// No loops and no parallel pairs.
pub fn is_simple(m: &dyn RankOracle) -> bool {
    let n = m.size();
    (0..n).all(|a| m.rank(ElementSet::singleton(a)) == 1)
        && (0..n).all(|a| (a + 1..n).all(|b| m.rank(ElementSet::singleton(a).with(b)) == 2))
}

/// Every rank-2 flat, sorted.
pub fn rank_two_flats(m: &dyn RankOracle) -> Vec<ElementSet> {
    let n = m.size();
    let nonloops: Vec<usize> = (0..n).filter(|&e| m.rank(ElementSet::singleton(e)) == 1).collect();
    let mut flats = BTreeSet::new();
    let mut covered: Vec<ElementSet> = Vec::new();
    for (i, &a) in nonloops.iter().enumerate() {
        for &b in &nonloops[i + 1..] {
            let pair = ElementSet::singleton(a).with(b);
            if m.rank(pair) != 2 || covered.iter().any(|f| pair.is_subset(*f)) {
                continue;
            }
            let f = closure(m, pair);
            covered.push(f);
            flats.insert(f);
        }
    }
    flats.into_iter().collect()
}

/// Largest ground set accepted by [`count_lines`].
pub const LINE_COUNT_LIMIT: usize = 30;

/// Number of rank-2 flats with exactly `length` elements.
pub fn count_lines(m: &dyn RankOracle, length: usize) -> Result<usize> {
    if m.size() > LINE_COUNT_LIMIT {
        return Err(Error::TooLarge { what: "matroid", size: m.size(), bound: LINE_COUNT_LIMIT });
    }
    Ok(rank_two_flats(m).iter().filter(|f| f.len() == length).count())
}

/// Number of `U_{2,3}`-restrictions, counted as the sum over rank-2 flats of `C(size, 3)`.
pub fn count_triangles(m: &dyn RankOracle) -> Result<u128> {
    if m.size() > LINE_COUNT_LIMIT {
        return Err(Error::TooLarge { what: "matroid", size: m.size(), bound: LINE_COUNT_LIMIT });
    }
    Ok(rank_two_flats(m).iter().map(|f| binomial(f.len(), 3)).sum())
}

/// Multiset of circuit sizes, as a histogram indexed by size.
pub fn circuit_size_histogram(m: &dyn RankOracle) -> Vec<usize> {
    let n = m.size();
    let mut hist = vec![0; n + 2];
    for k in 1..=(m.full_rank() + 1).min(n) {
        for_each_subset_of_size(m.ground(), k, |s| {
            if is_circuit(m, s) {
                hist[k] += 1;
            }
        });
    }
    hist
}

/// Exhaustive check of the rank axioms; returns a description of the first violation.
pub fn check_rank_axioms(m: &dyn RankOracle) -> std::result::Result<(), String> {
    let n = m.size();
    if n > 14 {
        return Err(format!("ground set of {n} elements is too large for an exhaustive check"));
    }
    let ranks: Vec<usize> = (0..1u128 << n).map(|s| m.rank(ElementSet(s))).collect();
    if ranks[0] != 0 {
        return Err("rank of the empty set is not 0".into());
    }
    for s in 0..1usize << n {
        for e in 0..n {
            if s >> e & 1 == 0 {
                let t = s | 1 << e;
                if ranks[t] < ranks[s] || ranks[t] > ranks[s] + 1 {
                    return Err(format!("unit increase fails at {:?} + {e}", ElementSet(s as u128)));
                }
            }
        }
    }
    for a in 0..1usize << n {
        for b in a..1usize << n {
            if ranks[a] + ranks[b] < ranks[a | b] + ranks[a & b] {
                return Err(format!(
                    "submodularity fails for {:?}, {:?}",
                    ElementSet(a as u128),
                    ElementSet(b as u128)
                ));
            }
        }
    }
    Ok(())
}

/// Exact chromatic number of a simple graph on at most 10 vertices.
pub fn chromatic_number(n_vertices: usize, edges: &[(usize, usize)]) -> Result<usize> {
    if n_vertices > 10 {
        return Err(Error::TooLarge { what: "graph", size: n_vertices, bound: 10 });
    }
    if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= n_vertices || b >= n_vertices || a == b) {
        return Err(Error::InvalidParameters(format!("bad edge ({a}, {b})")));
    }
    if n_vertices == 0 {
        return Ok(0);
    }
    let mut adj = vec![0u16; n_vertices];
    for &(a, b) in edges {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    fn colour(v: usize, k: usize, adj: &[u16], col: &mut Vec<usize>) -> bool {
        if v == adj.len() {
            return true;
        }
        let used = col.iter().max().map_or(0, |&c| c + 1);
        for c in 0..k.min(used + 1) {
            if (0..v).all(|u| adj[v] >> u & 1 == 0 || col[u] != c) {
                col.push(c);
                if colour(v + 1, k, adj, col) {
                    return true;
                }
                col.pop();
            }
        }
        false
    }
    Ok((1..=n_vertices)
        .find(|&k| colour(0, k, &adj, &mut Vec::new()))
        .expect("n colours always suffice"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graphic {
        Graphic::complete(n)
    }

    #[test]
    fn ranks_of_standard_matroids() {
        let u24 = Uniform::new(2, 4).unwrap();
        assert_eq!(u24.full_rank(), 2);
        assert_eq!(k(4).full_rank(), 3);
        let m43 = DirectSum::new(vec![Arc::new(Uniform::new(2, 4).unwrap()), Arc::new(Uniform::new(2, 4).unwrap())]);
        assert_eq!(m43.size(), 8);
        assert_eq!(m43.full_rank(), 4);
        assert!(checked_rank(&u24, ElementSet::singleton(4)).is_err());
    }

    #[test]
    fn circuits() {
        let u24 = Uniform::new(2, 4).unwrap();
        assert!(is_circuit(&u24, [0, 1, 2].into_iter().collect()));
        assert!(!is_circuit(&u24, [0, 1].into_iter().collect()));
        let k4 = k(4);
        let tri: ElementSet = k4
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| a < 3 && b < 3)
            .map(|(i, _)| i)
            .collect();
        assert!(is_circuit(&k4, tri));
    }

    #[test]
    fn closures() {
        let k4 = k(4);
        assert_eq!(closure(&k4, ElementSet::EMPTY), ElementSet::EMPTY);
        assert_eq!(closure(&k4, k4.ground()), k4.ground());
    }

    #[test]
    fn lines_and_triangles() {
        assert_eq!(count_lines(&Uniform::new(2, 4).unwrap(), 4).unwrap(), 1);
        assert_eq!(count_lines(&k(4), 3).unwrap(), 4);
        assert_eq!(count_triangles(&k(4)).unwrap(), 4);
        assert_eq!(count_triangles(&k(5)).unwrap(), 10);
        assert!(count_lines(&Uniform::new(2, 31).unwrap(), 3).is_err());
    }

    #[test]
    fn axioms_for_small_instances() {
        check_rank_axioms(&Uniform::new(3, 7).unwrap()).unwrap();
        check_rank_axioms(&k(5)).unwrap();
        let g = Graphic::new(4, vec![(0, 1), (0, 1), (1, 1), (2, 3)]).unwrap();
        check_rank_axioms(&g).unwrap();
        let ds = DirectSum::new(vec![Arc::new(k(3)), Arc::new(Uniform::new(1, 3).unwrap())]);
        check_rank_axioms(&ds).unwrap();
    }

    #[test]
    fn chromatic_numbers() {
        let k4: Vec<(usize, usize)> = (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b))).collect();
        assert_eq!(chromatic_number(4, &k4).unwrap(), 4);
        let k23: Vec<(usize, usize)> = (0..2).flat_map(|a| (2..5).map(move |b| (a, b))).collect();
        assert_eq!(chromatic_number(5, &k23).unwrap(), 2);
        let c5: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        assert_eq!(chromatic_number(5, &c5).unwrap(), 3);
        assert_eq!(chromatic_number(3, &[]).unwrap(), 1);
        assert!(chromatic_number(11, &[]).is_err());
    }

    #[test]
    fn circuit_histogram() {
        let h = circuit_size_histogram(&k(4));
        assert_eq!(h[3], 4);
        assert_eq!(h[4], 3);
    }
}
