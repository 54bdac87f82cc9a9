use super::{Matroid, RankOracle};
use crate::bitset::{ElementSet, MAX_ELEMENTS};
use crate::error::{Error, Result};

/// The uniform matroid `U_{r,n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Uniform {
    r: usize,
    n: usize,
}

impl Uniform {
    pub fn new(r: usize, n: usize) -> Result<Self> {
        if r > n || n > MAX_ELEMENTS {
            return Err(Error::InvalidParameters(format!("U_{{{r},{n}}} needs 0 <= r <= n <= 128")));
        }
        Ok(Uniform { r, n })
    }
}

impl RankOracle for Uniform {
    fn size(&self) -> usize {
        self.n
    }

    fn rank(&self, s: ElementSet) -> usize {
        s.len().min(self.r)
    }
}

/// The cycle matroid of a multigraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graphic {
    n_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graphic {
    pub fn new(n_vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n_vertices > 64 || edges.len() > MAX_ELEMENTS {
            return Err(Error::TooLarge { what: "graph", size: edges.len().max(n_vertices), bound: 64 });
        }
        if let Some(&(a, b)) = edges.iter().find(|&&(a, b)| a >= n_vertices || b >= n_vertices) {
            return Err(Error::InvalidParameters(format!("edge ({a}, {b}) leaves the vertex set")));
        }
        Ok(Graphic { n_vertices, edges })
    }

    /// `M(K_t)` with edges `(i, j)`, `i < j`, in lexicographic order.
    pub fn complete(t: usize) -> Self {
        let edges = (0..t).flat_map(|a| (a + 1..t).map(move |b| (a, b))).collect();
        Graphic::new(t, edges).expect("complete graph within bounds")
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

impl RankOracle for Graphic {
    fn size(&self) -> usize {
        self.edges.len()
    }

    fn rank(&self, s: ElementSet) -> usize {
        let mut parent = [0u8; 64];
        for (i, p) in parent.iter_mut().enumerate().take(self.n_vertices) {
            *p = i as u8;
        }
        fn find(parent: &mut [u8; 64], mut x: usize) -> usize {
            while parent[x] as usize != x {
                parent[x] = parent[parent[x] as usize];
                x = parent[x] as usize;
            }
            x
        }
        let mut r = 0;
        for e in s {
            let (a, b) = self.edges[e];
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb as u8;
                r += 1;
            }
        }
        r
    }

    fn element_name(&self, e: usize) -> String {
        let (a, b) = self.edges[e];
        format!("{}{}", a + 1, b + 1)
    }
}

/// Direct sum; the ground sets of the parts are laid out consecutively.
#[derive(Clone)]
pub struct DirectSum {
    parts: Vec<Matroid>,
    offsets: Vec<usize>,
    size: usize,
}

impl DirectSum {
    pub fn new(parts: Vec<Matroid>) -> Self {
        let mut offsets = Vec::with_capacity(parts.len());
        let mut size = 0;
        for p in &parts {
            offsets.push(size);
            size += p.size();
        }
        assert!(size <= MAX_ELEMENTS, "direct sum too large");
        DirectSum { parts, offsets, size }
    }

    pub fn parts(&self) -> &[Matroid] {
        &self.parts
    }

    /// Offset of the first element of each part.
    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }
}

impl RankOracle for DirectSum {
    fn size(&self) -> usize {
        self.size
    }

    fn rank(&self, s: ElementSet) -> usize {
        self.parts
            .iter()
            .zip(&self.offsets)
            .map(|(p, &o)| p.rank(ElementSet(s.0 >> o) & p.ground()))
            .sum()
    }

    fn element_name(&self, e: usize) -> String {
        let i = self.offsets.iter().rposition(|&o| o <= e).expect("offset 0 exists");
        format!("{}.{}", i + 1, self.parts[i].element_name(e - self.offsets[i]))
    }
}

/// Restriction `M|X`; element `k` is `kept[k]` of the parent.
#[derive(Clone)]
pub struct Restriction {
    parent: Matroid,
    kept: Vec<usize>,
}

impl Restriction {
    pub fn new(parent: Matroid, kept: ElementSet) -> Result<Self> {
        if let Some(e) = (kept - parent.ground()).first() {
            return Err(Error::ForeignElement { element: e, size: parent.size() });
        }
        Ok(Restriction { parent, kept: kept.to_vec() })
    }

    pub fn kept(&self) -> &[usize] {
        &self.kept
    }

    /// Translates a subset of the restriction into parent elements.
    pub fn lift(&self, s: ElementSet) -> ElementSet {
        s.iter().map(|e| self.kept[e]).collect()
    }
}

impl RankOracle for Restriction {
    fn size(&self) -> usize {
        self.kept.len()
    }

    fn rank(&self, s: ElementSet) -> usize {
        self.parent.rank(self.lift(s))
    }

    fn element_name(&self, e: usize) -> String {
        self.parent.element_name(self.kept[e])
    }
}

/// Column matroid of a matrix over the prime field `GF(p)`.
#[derive(Clone, Debug)]
pub struct VectorMatroid {
    p: u64,
    dim: usize,
    vectors: Vec<Vec<u64>>,
}

/// The Mersenne prime `2^31 - 1`.
pub const DEFAULT_PRIME: u64 = (1 << 31) - 1;

impl VectorMatroid {
    pub fn new(p: u64, vectors: Vec<Vec<u64>>) -> Result<Self> {
        let dim = vectors.first().map_or(0, |v| v.len());
        if vectors.iter().any(|v| v.len() != dim) {
            return Err(Error::InvalidParameters("vectors of unequal length".into()));
        }
        if vectors.len() > MAX_ELEMENTS {
            return Err(Error::TooLarge { what: "vector matroid", size: vectors.len(), bound: MAX_ELEMENTS });
        }
        let vectors = vectors.into_iter().map(|v| v.into_iter().map(|x| x % p).collect()).collect();
        Ok(VectorMatroid { p, dim, vectors })
    }

    fn inverse(&self, a: u64) -> u64 {
        let (mut base, mut exp, mut acc) = (a, self.p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

impl RankOracle for VectorMatroid {
    fn size(&self) -> usize {
        self.vectors.len()
    }

    fn rank(&self, s: ElementSet) -> usize {
        let p = self.p;
        let mut rows: Vec<Vec<u64>> = s.iter().map(|e| self.vectors[e].clone()).collect();
        let mut rank = 0;
        for col in 0..self.dim {
            let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(rank, piv);
            let inv = self.inverse(rows[rank][col]);
            for r in 0..rows.len() {
                if r != rank && rows[r][col] != 0 {
                    let f = rows[r][col] * inv % p;
                    for c in col..self.dim {
                        rows[r][c] = (rows[r][c] + p - f * rows[rank][c] % p) % p;
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::check_rank_axioms;
    use std::sync::Arc;

    #[test]
    fn uniform_bounds() {
        assert!(Uniform::new(3, 2).is_err());
        assert_eq!(Uniform::new(0, 3).unwrap().full_rank(), 0);
    }

    #[test]
    fn restriction_agrees_with_parent() {
        let k5: Matroid = Arc::new(Graphic::complete(5));
        let kept: ElementSet = [0, 2, 4, 7, 9].into_iter().collect();
        let r = Restriction::new(k5.clone(), kept).unwrap();
        for s in 0..32u128 {
            let s = ElementSet(s);
            assert_eq!(r.rank(s), k5.rank(r.lift(s)));
        }
        assert!(Restriction::new(k5, ElementSet::singleton(10)).is_err());
    }

    #[test]
    fn restriction_of_sum_is_sum_of_restrictions() {
        let a: Matroid = Arc::new(Uniform::new(2, 4).unwrap());
        let b: Matroid = Arc::new(Graphic::complete(4));
        let sum: Matroid = Arc::new(DirectSum::new(vec![a.clone(), b.clone()]));
        let kept_a: ElementSet = [0, 1, 3].into_iter().collect();
        let kept_b: ElementSet = [0, 2, 3, 5].into_iter().collect();
        let kept: ElementSet = kept_a | ElementSet(kept_b.0 << 4);
        let lhs = Restriction::new(sum, kept).unwrap();
        let rhs = DirectSum::new(vec![
            Arc::new(Restriction::new(a, kept_a).unwrap()),
            Arc::new(Restriction::new(b, kept_b).unwrap()),
        ]);
        for s in 0..1u128 << 7 {
            assert_eq!(lhs.rank(ElementSet(s)), rhs.rank(ElementSet(s)));
        }
    }

    #[test]
    fn vector_matroid_rank() {
        let v = VectorMatroid::new(DEFAULT_PRIME, vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0], vec![0, 0, 5]]).unwrap();
        assert_eq!(v.full_rank(), 3);
        assert_eq!(v.rank([0, 1, 2].into_iter().collect()), 2);
        check_rank_axioms(&v).unwrap();
    }
}
