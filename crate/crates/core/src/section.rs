//! Generic hyperplane section `A ↦ A/(x)` as a transformation of the
//! pairwise-dimension matrix.
//!
//! For a linear-subspace arrangement over an infinite field, a generic
//! hyperplane keeps every component irreducible and, by Krull's principal
//! ideal theorem, raises the height of each non-primary prime sum by exactly
//! one: the sectioned arrangement has dimension `d - 1`, the same number of
//! primes, and `pairdim'[i][j] = max(pairdim[i][j] - 1, 0)`. Primary sums
//! (pairdim 0) stay primary. On this model `#Γ_t` is preserved for every
//! `1 <= t <= d-2`, and the connectedness dimension drops by exactly one
//! whenever `1 <= c <= d-2`.

use crate::arrangement::AbstractArrangement;
use crate::check::Check;
use crate::connectedness::conn_dim;
use crate::error::{Error, Result};
use crate::gamma::gamma;

/// Cuts the arrangement by a generic hyperplane avoiding every prime sum
/// that is not primary to the maximal ideal.
pub fn generic_section(arr: &AbstractArrangement) -> Result<AbstractArrangement> {
    let d = arr.dim();
    if d < 3 {
        return Err(Error::DimensionTooSmall {
            op: "generic_section",
            d,
            min: 3,
        });
    }
    let s = arr.prime_count();
    let pairdim = (0..s)
        .map(|i| {
            (0..s)
                .map(|j| {
                    if i == j {
                        d - 1
                    } else {
                        arr.pair_dim(i, j).saturating_sub(1)
                    }
                })
                .collect()
        })
        .collect();
    AbstractArrangement::new(d - 1, pairdim)
}

/// Applies [`generic_section`] `k` times; valid for `1 <= k <= d-2`.
pub fn iterate_section(arr: &AbstractArrangement, k: usize) -> Result<AbstractArrangement> {
    let d = arr.dim();
    let max = d.saturating_sub(2);
    if k == 0 || k > max {
        return Err(Error::IterationOutOfRange { k, max });
    }
    let mut current = arr.clone();
    for _ in 0..k {
        current = generic_section(&current)?;
    }
    Ok(current)
}

/// Asserts `#Γ_t(A) = #Γ_t(A/(x))` for every `1 <= t <= d-2`, recomputing
/// both sides directly.
pub fn section_profile_check(arr: &AbstractArrangement) -> Result<Check> {
    let d = arr.dim();
    if d < 3 {
        return Err(Error::DimensionTooSmall {
            op: "section_profile_check",
            d,
            min: 3,
        });
    }
    let sectioned = generic_section(arr)?;
    let mut check = Check::new("section_profile_preserved", true);
    for t in 1..=d - 2 {
        let before = gamma(arr, t)?.component_count();
        let after = gamma(&sectioned, t)?.component_count();
        if before != after {
            check.passed = false;
        }
        check.record(format!("before_t{t:02}"), before as i64);
        check.record(format!("after_t{t:02}"), after as i64);
    }
    Ok(check)
}

/// Asserts the connectedness-dimension drop under a generic section:
/// `c(A/(x)) = c(A) - 1` whenever `1 <= c(A) <= d-2`, and
/// `c(A/(x)) >= c(A) - 1` always.
pub fn section_conn_check(arr: &AbstractArrangement) -> Result<Check> {
    let d = arr.dim();
    if d < 3 {
        return Err(Error::DimensionTooSmall {
            op: "section_conn_check",
            d,
            min: 3,
        });
    }
    let sectioned = generic_section(arr)?;
    let before = conn_dim(arr)?.c;
    let after = conn_dim(&sectioned)?.c;
    let lower_bound_holds = after + 1 >= before;
    let equality_applies = (1..=d - 2).contains(&before);
    let equality_holds = !equality_applies || after + 1 == before;
    Ok(
        Check::new("section_conn_drop", lower_bound_holds && equality_holds)
            .with("c_before", before as i64)
            .with("c_after", after as i64)
            .with("equality_case", equality_applies as i64),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{CoordinateArrangement, VariableSet};

    fn vs(indices: &[usize]) -> VariableSet {
        VariableSet::from_indices(indices.iter().copied())
    }

    fn a6() -> AbstractArrangement {
        CoordinateArrangement::new(6, vec![vs(&[0, 1]), vs(&[2, 3]), vs(&[4, 5])])
            .unwrap()
            .to_abstract()
            .unwrap()
    }

    #[test]
    fn section_drops_dimensions_by_one() {
        let cut = generic_section(&a6()).unwrap();
        assert_eq!(cut.dim(), 3);
        assert_eq!(cut.prime_count(), 3);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(cut.pair_dim(i, j), if i == j { 3 } else { 1 });
            }
        }
    }

    #[test]
    fn section_of_single_prime() {
        let cut = generic_section(&AbstractArrangement::single_prime(3)).unwrap();
        assert_eq!(cut.rows(), &[vec![2]]);
    }

    #[test]
    fn primary_sums_stay_primary() {
        let arr = AbstractArrangement::new(3, vec![vec![3, 0], vec![0, 3]]).unwrap();
        let cut = generic_section(&arr).unwrap();
        assert_eq!(cut.pair_dim(0, 1), 0);
    }

    #[test]
    fn section_requires_dimension_three() {
        let arr = AbstractArrangement::new(2, vec![vec![2, 0], vec![0, 2]]).unwrap();
        assert!(matches!(
            generic_section(&arr),
            Err(Error::DimensionTooSmall { .. })
        ));
    }

    #[test]
    fn profile_preserved_on_a6() {
        let check = section_profile_check(&a6()).unwrap();
        assert!(check.passed);
        assert_eq!(check.values["before_t01"], 3);
        assert_eq!(check.values["after_t01"], 3);
        assert_eq!(check.values["before_t02"], 1);
    }

    #[test]
    fn profile_preserved_trivially_for_single_prime() {
        let check = section_profile_check(&AbstractArrangement::single_prime(4)).unwrap();
        assert!(check.passed);
    }

    #[test]
    fn conn_drop_on_a6() {
        let check = section_conn_check(&a6()).unwrap();
        assert!(check.passed);
        assert_eq!(check.values["c_before"], 2);
        assert_eq!(check.values["c_after"], 1);
        assert_eq!(check.values["equality_case"], 1);
    }

    #[test]
    fn conn_drop_vacuous_when_c_zero() {
        // A9q has c = 0: only the ">= c - 1" branch applies
        let arr = CoordinateArrangement::new(
            9,
            vec![
                vs(&[0, 1, 2, 3, 4, 5]),
                vs(&[3, 4, 5, 6, 7, 8]),
                vs(&[1, 2, 3, 6, 7, 8]),
            ],
        )
        .unwrap()
        .to_abstract()
        .unwrap();
        let check = section_conn_check(&arr).unwrap();
        assert!(check.passed);
        assert_eq!(check.values["equality_case"], 0);
    }

    #[test]
    fn conn_drop_top_branch_for_hyperplanes() {
        // c = d - 1 = 2: outside the equality window, only the bound applies
        let arr = CoordinateArrangement::new(4, vec![vs(&[0]), vs(&[1]), vs(&[2])])
            .unwrap()
            .to_abstract()
            .unwrap();
        let check = section_conn_check(&arr).unwrap();
        assert!(check.passed);
        assert_eq!(check.values["c_before"], 2);
        assert_eq!(check.values["equality_case"], 0);
        assert!(check.values["c_after"] >= check.values["c_before"] - 1);
    }

    #[test]
    fn iterated_sections_preserve_low_thresholds() {
        let arr = a6();
        let d = arr.dim();
        for k in 1..=d - 3 {
            let cut = iterate_section(&arr, k).unwrap();
            for t in 1..=d - k - 2 {
                assert_eq!(
                    gamma(&arr, t).unwrap().component_count(),
                    gamma(&cut, t).unwrap().component_count()
                );
            }
        }
        assert!(iterate_section(&arr, 3).is_err());
        assert!(iterate_section(&arr, 0).is_err());
    }
}
