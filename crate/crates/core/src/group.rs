//! Finite groups as explicit Cayley tables.
//!
//! Elements are indices into the table and index 0 is always the identity.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// An element of a [`GroupTable`], given by its index.
pub type GroupElement = usize;

/// The identity element of every table.
pub const IDENTITY: GroupElement = 0;

/// Subgroup enumeration works on tables of at most this order.
pub const MAX_SUBGROUP_ORDER: usize = 64;

/// A finite group stored as a multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    label: String,
    order: usize,
    mul: Vec<GroupElement>,
    inv: Vec<GroupElement>,
    names: Vec<String>,
}

/// JSON form of a Cayley table: `{label, order, mul}` with `mul` row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyTable {
    pub label: String,
    pub order: usize,
    pub mul: Vec<Vec<usize>>,
}

impl GroupTable {
    /// The cyclic group of order `k`, with element `i` standing for `g^i`.
    pub fn cyclic(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidGroup("cyclic group of order 0".into()));
        }
        let mul = (0..k * k).map(|p| (p / k + p % k) % k).collect();
        let names = (0..k)
            .map(|i| match (k, i) {
                (_, 0) => "1".to_string(),
                (2, 1) => "-1".to_string(),
                (_, 1) => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        Ok(Self::from_parts(format!("Z{k}"), k, mul, names))
    }

    /// Componentwise product; element `(i, j)` has index `i * |b| + j`.
    pub fn direct_product(a: &GroupTable, b: &GroupTable) -> Self {
        let (m, n) = (a.order, b.order);
        let order = m * n;
        let mut mul = vec![0; order * order];
        for x in 0..order {
            for y in 0..order {
                let i = a.mul(x / n, y / n);
                let j = b.mul(x % n, y % n);
                mul[x * order + y] = i * n + j;
            }
        }
        let names = (0..order)
            .map(|x| {
                if x == 0 {
                    "1".to_string()
                } else {
                    format!("({},{})", a.names[x / n], b.names[x % n])
                }
            })
            .collect();
        Self::from_parts(format!("{}x{}", a.label, b.label), order, mul, names)
    }

    /// Validates and imports a raw Cayley table. Index 0 must be the identity.
    pub fn from_cayley(table: &CayleyTable) -> Result<Self> {
        let n = table.order;
        if n == 0 {
            return Err(Error::InvalidGroup("order must be positive".into()));
        }
        if table.mul.len() != n || table.mul.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidGroup(format!("table is not {n}x{n}")));
        }
        if table.mul.iter().flatten().any(|&v| v >= n) {
            return Err(Error::InvalidGroup("closure: entry outside 0..order".into()));
        }
        let mul: Vec<usize> = table.mul.iter().flatten().copied().collect();
        for x in 0..n {
            if mul[x] != x || mul[x * n] != x {
                return Err(Error::InvalidGroup(format!(
                    "identity: element 0 is not a two-sided identity (fails at {x})"
                )));
            }
        }
        for x in 0..n {
            if !(0..n).any(|y| mul[x * n + y] == 0 && mul[y * n + x] == 0) {
                return Err(Error::InvalidGroup(format!("inverse: element {x} has no inverse")));
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = mul[x * n + y];
                for z in 0..n {
                    if mul[xy * n + z] != mul[x * n + mul[y * n + z]] {
                        return Err(Error::InvalidGroup(format!(
                            "associativity: ({x}*{y})*{z} != {x}*({y}*{z})"
                        )));
                    }
                }
            }
        }
        let names = (0..n).map(|x| if x == 0 { "1".into() } else { format!("e{x}") }).collect();
        Ok(Self::from_parts(table.label.clone(), n, mul, names))
    }

    /// Parses labels such as `Z1`, `Z4`, `Z2xZ2` or `Z2xZ3xZ2`.
    pub fn from_label(label: &str) -> Result<Self> {
        let mut acc: Option<GroupTable> = None;
        for part in label.trim().split(['x', 'X', '*']) {
            let k: usize = part
                .trim()
                .strip_prefix(['Z', 'z', 'C'])
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| Error::UnknownGroup(label.to_string()))?;
            let c = GroupTable::cyclic(k).map_err(|_| Error::UnknownGroup(label.to_string()))?;
            acc = Some(match acc {
                None => c,
                Some(a) => GroupTable::direct_product(&a, &c),
            });
        }
        acc.ok_or_else(|| Error::UnknownGroup(label.to_string()))
    }

    fn from_parts(label: String, order: usize, mul: Vec<usize>, names: Vec<String>) -> Self {
        let inv = (0..order)
            .map(|x| (0..order).find(|&y| mul[x * order + y] == 0).expect("inverse exists"))
            .collect();
        GroupTable { label, order, mul, inv, names }
    }

    pub fn to_cayley(&self) -> CayleyTable {
        CayleyTable {
            label: self.label.clone(),
            order: self.order,
            mul: self.mul.chunks(self.order).map(|r| r.to_vec()).collect(),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> GroupElement {
        IDENTITY
    }

    pub fn elements(&self) -> std::ops::Range<GroupElement> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, x: GroupElement, y: GroupElement) -> GroupElement {
        self.mul[x * self.order + y]
    }

    #[inline]
    pub fn inv(&self, x: GroupElement) -> GroupElement {
        self.inv[x]
    }

    pub fn pow(&self, x: GroupElement, k: usize) -> GroupElement {
        (0..k).fold(IDENTITY, |acc, _| self.mul(acc, x))
    }

    /// Display name of an element (`1`, `-1`, `g^2`, `(g,1)`, ...).
    pub fn name(&self, x: GroupElement) -> &str {
        &self.names[x]
    }

    /// Least `k >= 1` with `x^k` equal to the identity.
    pub fn element_order(&self, x: GroupElement) -> usize {
        let mut k = 1;
        let mut p = x;
        while p != IDENTITY {
            p = self.mul(p, x);
            k += 1;
        }
        k
    }

    /// `x != y`, neither is the identity, `x^2 != y` and `y^2 != x`.
    pub fn is_good_pair(&self, x: GroupElement, y: GroupElement) -> bool {
        x != y
            && x != IDENTITY
            && y != IDENTITY
            && self.mul(x, x) != y
            && self.mul(y, y) != x
    }

    /// The good pair `(x, y)`, `x < y`, that comes first in index order.
    pub fn find_good_pair(&self) -> Option<(GroupElement, GroupElement)> {
        (1..self.order)
            .flat_map(|x| (x + 1..self.order).map(move |y| (x, y)))
            .find(|&(x, y)| self.is_good_pair(x, y))
    }

    /// Checks closure, identity, inverses and associativity exhaustively.
    pub fn check_axioms(&self) -> Result<()> {
        GroupTable::from_cayley(&self.to_cayley()).map(|_| ())
    }

    /// Every subgroup as a sorted element list, ordered by size then lexicographically.
    pub fn enumerate_subgroups(&self) -> Result<Vec<Vec<GroupElement>>> {
        if self.order > MAX_SUBGROUP_ORDER {
            return Err(Error::GroupTooLarge { order: self.order, bound: MAX_SUBGROUP_ORDER });
        }
        let mut found: Vec<u64> = vec![1];
        let mut i = 0;
        while i < found.len() {
            let h = found[i];
            for x in 0..self.order {
                if h >> x & 1 == 0 {
                    let g = self.generated_mask(h | 1 << x);
                    if !found.contains(&g) {
                        found.push(g);
                    }
                }
            }
            i += 1;
        }
        let mut subs: Vec<Vec<GroupElement>> = found
            .into_iter()
            .map(|m| (0..self.order).filter(|&x| m >> x & 1 == 1).collect())
            .collect();
        subs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(subs)
    }

    fn generated_mask(&self, gens: u64) -> u64 {
        let mut mask = gens | 1;
        loop {
            let mut next = mask;
            for x in 0..self.order {
                if mask >> x & 1 == 1 {
                    for y in 0..self.order {
                        if gens >> y & 1 == 1 {
                            next |= 1 << self.mul(x, y);
                        }
                    }
                }
            }
            if next == mask {
                return mask;
            }
            mask = next;
        }
    }

    /// True iff `elems` contains the identity and is closed under products and inverses.
    pub fn is_subgroup(&self, elems: &[GroupElement]) -> bool {
        elems.contains(&IDENTITY)
            && elems.iter().all(|&x| {
                elems.contains(&self.inv(x)) && elems.iter().all(|&y| elems.contains(&self.mul(x, y)))
            })
    }

    /// The subgroup on `elems` as a standalone table. Element `k` of the result is `elems[k]`.
    pub fn subgroup_table(&self, elems: &[GroupElement]) -> Result<GroupTable> {
        if !self.is_subgroup(elems) || elems[0] != IDENTITY {
            return Err(Error::InvalidGroup(format!(
                "{elems:?} is not a subgroup listed identity first"
            )));
        }
        let pos = |x: GroupElement| elems.iter().position(|&e| e == x).expect("closed");
        let k = elems.len();
        let mut mul = vec![0; k * k];
        for (i, &x) in elems.iter().enumerate() {
            for (j, &y) in elems.iter().enumerate() {
                mul[i * k + j] = pos(self.mul(x, y));
            }
        }
        let names = elems.iter().map(|&x| self.names[x].clone()).collect();
        let label = format!("{}<{}>", self.label, elems.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
        Ok(Self::from_parts(label, k, mul, names))
    }
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupTable({}, order {})", self.label, self.order)
    }
}

impl fmt::Display for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}
