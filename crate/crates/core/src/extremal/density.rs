//! Finite-`n` densities `ex(Q_n(Γ), N) / (|Γ|·C(n,2))`.

use super::{ex_exhaustive, ExtremalProblem, SearchOptions};
use crate::descriptor::MatroidDescriptor;
use crate::error::Result;
use crate::group::GroupTable;
use serde::{Deserialize, Serialize};

/// One row of a density table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityRow {
    pub n: usize,
    pub ex: usize,
    pub density: f64,
    /// `false` when the budget ran out and `ex` is only a lower bound.
    pub certified: bool,
    /// `|Γ|·C(n,2)`, the denominator of `density`.
    pub scale: usize,
}

/// Rows for `n = 2..=n_max`.
pub fn density_table(group: &GroupTable, forbidden: &MatroidDescriptor, n_max: usize, opts: &SearchOptions) -> Result<Vec<DensityRow>> {
    let mut rows = Vec::new();
    for n in 2..=n_max {
        let cert = ex_exhaustive(&ExtremalProblem::dowling(n, group, forbidden.clone()), opts)?;
        let scale = group.order() * n * (n - 1) / 2;
        rows.push(DensityRow { n, ex: cert.value, density: cert.value as f64 / scale as f64, certified: cert.is_certified(), scale });
    }
    Ok(rows)
}

/// Whether densities never increase down the table, compared exactly.
pub fn is_non_increasing(rows: &[DensityRow]) -> bool {
    rows.windows(2).all(|w| w[1].ex * w[0].scale <= w[0].ex * w[1].scale)
}

/// `ex(Q_n(Γ), N)/|Γ| <= ex(Q_n(Γ'), N)/|Γ'|` for a subgroup `Γ'` of `Γ`.
///
/// Returns an error if either value cannot be certified within the budget.
pub fn check_relative_density(
    group: &GroupTable,
    sub: &GroupTable,
    forbidden: &MatroidDescriptor,
    n: usize,
    opts: &SearchOptions,
) -> Result<bool> {
    let value = |g: &GroupTable| -> Result<usize> {
        let c = ex_exhaustive(&ExtremalProblem::dowling(n, g, forbidden.clone()), opts)?;
        if !c.is_certified() {
            return Err(crate::Error::BudgetExhausted { seconds: opts.budget.map_or(0, |b| b.as_secs()) });
        }
        Ok(c.value)
    };
    let big = value(group)?;
    let small = if sub == group { big } else { value(sub)? };
    Ok(big * sub.order() <= small * group.order())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_densities_over_z2() {
        let z2 = GroupTable::cyclic(2).unwrap();
        let rows = density_table(&z2, &MatroidDescriptor::Clique { vertices: 3 }, 4, &SearchOptions::default()).unwrap();
        let ex: Vec<usize> = rows.iter().map(|r| r.ex).collect();
        assert_eq!(ex, vec![2, 4, 8]);
        assert!((rows[2].density - 2.0 / 3.0).abs() < 1e-12);
        assert!(is_non_increasing(&rows));
    }

    #[test]
    fn relative_density_z4_over_z2() {
        let z4 = GroupTable::cyclic(4).unwrap();
        let z2 = GroupTable::cyclic(2).unwrap();
        assert!(check_relative_density(&z4, &z2, &MatroidDescriptor::Clique { vertices: 3 }, 3, &SearchOptions::default()).unwrap());
    }
}
