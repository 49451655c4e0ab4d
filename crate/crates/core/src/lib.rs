//! Connectedness dimension and Lyubeznik-number invariants of equidimensional
//! local rings presented combinatorially by their minimal primes.
//!
//! The pipeline: a [`CoordinateArrangement`] (squarefree monomial model) or
//! [`AbstractArrangement`] (pairwise-dimension matrix) feeds the threshold
//! graph family Γ_t ([`gamma()`]), whose component counts determine the
//! connectedness dimension ([`conn_dim`]), the exact superdiagonal Lyubeznik
//! numbers λ_{0,1} and λ_{1,2}, the highest number λ_{d,d}, and lower bounds
//! for the rest of the superdiagonal ([`lyubeznik`]). Generic hyperplane
//! sections ([`section`]) and the projective-cone correspondence
//! ([`projective`]) are exposed as executable transformations, and every
//! graph-derived quantity has an independent brute-force oracle next to it
//! ([`connectedness`], [`sweep`]).
//!
//! ```
//! use lyubgraph::{conn_dim, gamma_profile, lambda_top, CoordinateArrangement, VariableSet};
//!
//! // three pairwise-disjoint coordinate 2-planes in k[[x1..x6]]
//! let planes = CoordinateArrangement::new(
//!     6,
//!     vec![
//!         VariableSet::from_indices([0, 1]),
//!         VariableSet::from_indices([2, 3]),
//!         VariableSet::from_indices([4, 5]),
//!     ],
//! )?
//! .to_abstract()?;
//!
//! assert_eq!(gamma_profile(&planes)?, vec![3, 1, 1]);
//! assert_eq!(conn_dim(&planes)?.c, 2);
//! assert_eq!(lambda_top(&planes)?, 3);
//! # Ok::<(), lyubgraph::Error>(())
//! ```

// symmetric-matrix code reads better with explicit (i, j) index loops
#![allow(clippy::needless_range_loop)]

pub mod arrangement;
pub mod check;
pub mod connectedness;
pub mod error;
pub mod gamma;
pub mod input;
pub mod lyubeznik;
pub mod projective;
pub mod section;
pub mod sweep;
pub mod unionfind;

pub use arrangement::{
    minimalize, AbstractArrangement, CoordinateArrangement, VariableSet, XiSet, MAX_VARS,
};
pub use check::Check;
pub use connectedness::{
    conn_dim, conn_dim_bruteforce, max_components, max_components_bruteforce, ConnMethod,
    ConnResult, ConnWitness, DEFAULT_BRUTEFORCE_CAP,
};
pub use error::{Error, Result};
pub use gamma::{component_count, gamma, gamma_profile, GammaGraph};
pub use input::{parse_document, InputDoc, ParseOptions, ParsedInput, MAX_VARS_ENV};
pub use lyubeznik::{
    check_c2, check_depth_cd, conn_lower_bound_from_vanishing, count_bound, dim3_table,
    invariant_report, lambda01, lambda12, lambda_top, superdiag_lower_bounds, Dim3Table,
    InvariantReport, ReportOptions, TableEntry,
};
pub use projective::{
    cone, cone_consistency_checks, gamma_profile_proj, gamma_proj, lambda12_proj,
    superdiag_lower_bounds_proj, ProjectiveVariety,
};
pub use section::{generic_section, iterate_section, section_conn_check, section_profile_check};
pub use sweep::{run_sweep, SweepConfig, SweepMode, SweepSummary};
