//! Superdiagonal Lyubeznik numbers from the component counts of the graph
//! family, together with the theorem-level consistency checks they satisfy.
//!
//! For an equidimensional complete local ring containing a field, with
//! separably closed residue field:
//!
//! * `λ_{0,1} = #Γ_{d-1} - 1` (one less than the number of connected
//!   components of the punctured spectrum);
//! * `λ_{1,2} = #Γ_{d-2} - #Γ_{d-1}` for `d >= 3`, and 0 for `d <= 2`;
//! * `λ_{i,i+1} >= #Γ_{d-i-1} - #Γ_{d-i}` for `2 <= i <= d-2`, a bound that
//!   can be strict, so those entries are only ever reported as bounds;
//! * `λ_{d,d} = #Γ_1` (components of the Hochster-Huneke graph).
//!
//! The differences telescope: `1 + λ_{0,1} + Σ bounds = #Γ_1 = λ_{d,d}`.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::arrangement::AbstractArrangement;
use crate::check::Check;
use crate::connectedness::{conn_dim, conn_dim_bruteforce, max_components, ConnResult};
use crate::error::{Error, Result};
use crate::gamma::gamma_profile;

/// `λ_{0,1} = #Γ_{d-1} - 1`.
pub fn lambda01(arr: &AbstractArrangement) -> Result<usize> {
    let profile = profile_for(arr, "lambda01")?;
    Ok(profile[profile.len() - 1] - 1)
}

/// `λ_{1,2}`: zero in dimension at most two, `#Γ_{d-2} - #Γ_{d-1}` above.
pub fn lambda12(arr: &AbstractArrangement) -> Result<usize> {
    let profile = profile_for(arr, "lambda12")?;
    let d = arr.dim();
    if d == 2 {
        return Ok(0);
    }
    Ok(profile[d - 3] - profile[d - 2])
}

/// The highest Lyubeznik number `λ_{d,d} = #Γ_1`.
pub fn lambda_top(arr: &AbstractArrangement) -> Result<usize> {
    let profile = profile_for(arr, "lambda_top")?;
    Ok(profile[0])
}

/// Lower bounds for the superdiagonal: entry `i` (for `i = 1..=d-2`) is
/// `#Γ_{d-i-1} - #Γ_{d-i}`. The entry for `i = 1` is the exact `λ_{1,2}`;
/// entries for `i >= 2` are bounds only and can be strict.
pub fn superdiag_lower_bounds(arr: &AbstractArrangement) -> Result<Vec<usize>> {
    let d = arr.dim();
    if d < 3 {
        return Err(Error::DimensionTooSmall {
            op: "superdiag_lower_bounds",
            d,
            min: 3,
        });
    }
    let profile = gamma_profile(arr)?;
    Ok((1..=d - 2)
        .map(|i| profile[d - i - 2] - profile[d - i - 1])
        .collect())
}

fn profile_for(arr: &AbstractArrangement, op: &'static str) -> Result<Vec<usize>> {
    let d = arr.dim();
    if d < 2 {
        return Err(Error::DimensionTooSmall { op, d, min: 2 });
    }
    gamma_profile(arr)
}

/// `c(A) >= 2  ⇔  λ_{0,1} = λ_{1,2} = 0`, checked in both directions.
pub fn check_c2(arr: &AbstractArrangement) -> Result<Check> {
    let d = arr.dim();
    if d < 3 {
        return Err(Error::DimensionTooSmall {
            op: "check_c2",
            d,
            min: 3,
        });
    }
    let c = conn_dim(arr)?.c;
    let l01 = lambda01(arr)?;
    let l12 = lambda12(arr)?;
    let lhs = c >= 2;
    let rhs = l01 == 0 && l12 == 0;
    Ok(Check::new("c2_characterization", lhs == rhs)
        .with("c_graph", c as i64)
        .with("lambda01", l01 as i64)
        .with("lambda12", l12 as i64)
        .with("lhs_c_ge_2", lhs as i64)
        .with("rhs_lambdas_zero", rhs as i64))
}

/// Longest run of ones at the connected end of the profile:
/// `#Γ_{d-1} = .. = #Γ_{d-m} = 1` gives `m`, the largest prefix of the
/// superdiagonal that vanishes at the graph level.
pub fn vanishing_prefix_bound(profile: &[usize]) -> usize {
    profile
        .iter()
        .rev()
        .take_while(|&&count| count == 1)
        .count()
}

/// Lower bound on c(A) from vanishing of an initial superdiagonal segment:
/// if `λ_{j,j+1} = 0` for `0 <= j <= i`, then `c(A) >= i + 1`. At the graph
/// level the hypothesis is a trailing run of ones in the profile, and the
/// check asserts `c >= bound`.
pub fn conn_lower_bound_from_vanishing(arr: &AbstractArrangement) -> Result<Check> {
    let profile = profile_for(arr, "conn_lower_bound_from_vanishing")?;
    let bound = vanishing_prefix_bound(&profile);
    let c = conn_dim(arr)?.c;
    Ok(Check::new("conn_dim_from_vanishing", c >= bound)
        .with("bound", bound as i64)
        .with("c_graph", c as i64))
}

/// Component-count bound from the superdiagonal: for `0 <= t <= d-2`,
/// `max_components(A, t) <= 1 + Σ_{i=0}^{t} λ_{i,i+1}`. Replacing the true
/// `λ`'s for `i >= 2` by their graph lower bounds telescopes the sum to
/// `#Γ_{d-t-1}` exactly, so the graph-level statement is an identity; for
/// `t = 0` and `t = 1` the λ-sum itself is an equality.
pub fn count_bound(arr: &AbstractArrangement, t: usize) -> Result<Check> {
    let profile = profile_for(arr, "count_bound")?;
    let d = arr.dim();
    if t > d - 2 {
        return Err(Error::BoundOutOfRange {
            value: t,
            max: d - 2,
        });
    }
    let observed = max_components(arr, t)?;
    let l01 = profile[d - 2] - 1;
    let mut sum = 1 + l01;
    for i in 1..=t {
        sum += profile[d - i - 2] - profile[d - i - 1];
    }
    Ok(Check::new(format!("count_bound_t{t}"), observed == sum)
        .with("t", t as i64)
        .with("max_components", observed as i64)
        .with("graph_sum", sum as i64)
        .with("equality_case", (t <= 1) as i64))
}

/// Entry of the dimension-3 Lyubeznik table: a known integer, or the one
/// value the graphs do not determine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableEntry {
    Known(usize),
    Unknown,
}

impl Serialize for TableEntry {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            TableEntry::Known(v) => serializer.serialize_u64(*v as u64),
            TableEntry::Unknown => serializer.serialize_str("u"),
        }
    }
}

/// The 4x4 Lyubeznik table of a three-dimensional ring.
///
/// `λ_{0,1}` and `λ_{1,2}` come from the graphs,
/// `λ_{3,3} = λ_{0,1} + λ_{1,2} + 1`, and `λ_{0,2} = λ_{1,3}` is a single
/// undetermined parameter reported as `u`; every other entry vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dim3Table {
    pub rows: Vec<Vec<TableEntry>>,
}

impl Serialize for Dim3Table {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows.len()))?;
        for row in &self.rows {
            seq.serialize_element(row)?;
        }
        seq.end()
    }
}

impl Dim3Table {
    pub fn entry(&self, i: usize, j: usize) -> TableEntry {
        self.rows[i][j]
    }
}

pub fn dim3_table(arr: &AbstractArrangement) -> Result<Dim3Table> {
    let d = arr.dim();
    if d != 3 {
        return Err(Error::DimensionMismatch {
            op: "dim3_table",
            d,
            expected: 3,
        });
    }
    let l01 = lambda01(arr)?;
    let l12 = lambda12(arr)?;
    let mut rows = vec![vec![TableEntry::Known(0); 4]; 4];
    rows[0][1] = TableEntry::Known(l01);
    rows[0][2] = TableEntry::Unknown;
    rows[1][2] = TableEntry::Known(l12);
    rows[1][3] = TableEntry::Unknown;
    rows[3][3] = TableEntry::Known(l01 + l12 + 1);
    Ok(Dim3Table { rows })
}

/// Inequality checks against user-supplied homological data:
/// `c(A) >= depth(A) - 1`, and `c(R/I) >= n - cd(I, R) - 1` where `n` is the
/// ambient regular dimension. Both values are asserts from the caller, never
/// computed here; a failure flags inconsistent input.
pub fn check_depth_cd(
    arr: &AbstractArrangement,
    depth: Option<usize>,
    cd: Option<usize>,
    ambient: Option<usize>,
) -> Result<Vec<Check>> {
    if cd.is_some() && ambient.is_none() {
        return Err(Error::MissingAmbient);
    }
    let c = conn_dim(arr)?.c as i64;
    let mut checks = Vec::new();
    if let Some(depth) = depth {
        let bound = depth as i64 - 1;
        checks.push(
            Check::new("depth_bound", c >= bound)
                .with("c_graph", c)
                .with("depth", depth as i64)
                .with("bound", bound),
        );
    }
    if let Some(cd) = cd {
        let n = ambient.unwrap() as i64;
        let bound = n - cd as i64 - 1;
        checks.push(
            Check::new("cd_bound", c >= bound)
                .with("c_graph", c)
                .with("cd", cd as i64)
                .with("ambient", n)
                .with("bound", bound),
        );
    }
    Ok(checks)
}

/// Everything the analyzer computes for one ring.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub d: usize,
    pub s: usize,
    pub gamma_profile: Vec<usize>,
    pub c_graph: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c_oracle: Option<usize>,
    pub lambda01: usize,
    pub lambda12: usize,
    pub lambda_top: usize,
    pub superdiag_lower_bounds: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim3_table: Option<Dim3Table>,
    pub checks: Vec<Check>,
}

/// Options for [`invariant_report`].
#[derive(Clone, Debug)]
pub struct ReportOptions {
    /// Also run the exhaustive-cover oracle and include its value.
    pub oracle: bool,
    /// Cap for the brute-force searches.
    pub cap: usize,
    pub depth: Option<usize>,
    pub cd: Option<usize>,
    pub ambient: Option<usize>,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            oracle: false,
            cap: crate::connectedness::DEFAULT_BRUTEFORCE_CAP,
            depth: None,
            cd: None,
            ambient: None,
        }
    }
}

/// Assembles the full report for a ring of dimension at least two.
pub fn invariant_report(
    arr: &AbstractArrangement,
    opts: &ReportOptions,
) -> Result<InvariantReport> {
    let d = arr.dim();
    if d < 2 {
        return Err(Error::DimensionTooSmall {
            op: "invariant_report",
            d,
            min: 2,
        });
    }
    let profile = gamma_profile(arr)?;
    let ConnResult { c: c_graph, .. } = conn_dim(arr)?;
    let c_oracle = if opts.oracle {
        Some(conn_dim_bruteforce(arr, opts.cap)?.c)
    } else {
        None
    };
    let l01 = lambda01(arr)?;
    let l12 = lambda12(arr)?;
    let top = lambda_top(arr)?;
    let bounds = if d >= 3 {
        superdiag_lower_bounds(arr)?
    } else {
        Vec::new()
    };
    let table = if d == 3 { Some(dim3_table(arr)?) } else { None };

    let mut checks = Vec::new();
    if d >= 3 {
        checks.push(check_c2(arr)?);
    }
    checks.push(conn_lower_bound_from_vanishing(arr)?);
    checks.push(count_bound(arr, 0)?);
    if d >= 3 {
        checks.push(count_bound(arr, 1)?);
    }
    checks.push(telescoping_check(arr)?);
    checks.push(connected_profile_top_check(arr)?);
    checks.extend(check_depth_cd(arr, opts.depth, opts.cd, opts.ambient)?);

    Ok(InvariantReport {
        d,
        s: arr.prime_count(),
        gamma_profile: profile,
        c_graph,
        c_oracle,
        lambda01: l01,
        lambda12: l12,
        lambda_top: top,
        superdiag_lower_bounds: bounds,
        dim3_table: table,
        checks,
    })
}

/// `1 + λ_{0,1} + Σ bounds = #Γ_1 = λ_{d,d}`.
pub fn telescoping_check(arr: &AbstractArrangement) -> Result<Check> {
    let profile = profile_for(arr, "telescoping_check")?;
    let d = arr.dim();
    let l01 = profile[d - 2] - 1;
    let bound_sum: usize = if d >= 3 {
        superdiag_lower_bounds(arr)?.iter().sum()
    } else {
        0
    };
    let lhs = 1 + l01 + bound_sum;
    let top = profile[0];
    Ok(Check::new("telescoping_superdiagonal", lhs == top)
        .with("sum", lhs as i64)
        .with("lambda_top", top as i64))
}

/// When the whole profile is `[1, .., 1]` the superdiagonal vanishes at the
/// graph level and the highest Lyubeznik number is 1.
pub fn connected_profile_top_check(arr: &AbstractArrangement) -> Result<Check> {
    let profile = profile_for(arr, "connected_profile_top_check")?;
    let all_ones = profile.iter().all(|&count| count == 1);
    let top = profile[0];
    Ok(
        Check::new("connected_profile_top_one", !all_ones || top == 1)
            .with("profile_all_ones", all_ones as i64)
            .with("lambda_top", top as i64),
    )
}
