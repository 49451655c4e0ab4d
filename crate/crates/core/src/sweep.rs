//! Property sweeps: exhaustive and seeded-random instance generation, a
//! battery of cross-route consistency checks per instance, and a parallel
//! driver that aggregates a deterministic summary.
//!
//! Every check compares two independent computation paths (graph vs. cover
//! search, union-find partition vs. backtracking partition, matrix transform
//! vs. recomputation), so a single sweep exercises the whole stack against
//! its oracles. Failures carry the offending instance in input-schema JSON
//! so they can be replayed directly.

use std::collections::BTreeMap;

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::iter::{ParallelBridge, ParallelIterator};
use serde::Serialize;

use crate::arrangement::{AbstractArrangement, CoordinateArrangement, VariableSet};
use crate::check::Check;
use crate::connectedness::{
    conn_dim, conn_dim_bruteforce, max_components, max_components_bruteforce,
};
use crate::gamma::{gamma, gamma_profile};
use crate::input::coordinate_to_value;
use crate::lyubeznik::{
    connected_profile_top_check, count_bound, lambda01, lambda12, telescoping_check,
};
use crate::projective::{cone_consistency_checks, ProjectiveVariety};
use crate::section::{section_conn_check, section_profile_check};

#[derive(Clone, Debug)]
pub enum SweepMode {
    /// Every equidimensional coordinate arrangement with `n <= max_n` and
    /// `1 <= s <= max_s`.
    Exhaustive,
    /// `count` seeded random instances within the same limits.
    Random { seed: u64, count: usize },
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub max_n: usize,
    pub max_s: usize,
    pub mode: SweepMode,
    /// Cap passed to the brute-force oracles.
    pub cap: usize,
    /// Perturb one pairdim entry of the first eligible instance; used to
    /// verify that the harness reports failures and dumps repro artifacts.
    pub inject_fault: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_n: 6,
            max_s: 3,
            mode: SweepMode::Exhaustive,
            cap: crate::connectedness::DEFAULT_BRUTEFORCE_CAP,
            inject_fault: false,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepFailure {
    pub index: usize,
    pub check: String,
    pub values: BTreeMap<String, i64>,
    /// The instance in input-schema JSON, replayable with `analyze`.
    pub instance: serde_json::Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepSummary {
    pub instances: usize,
    pub checks_run: usize,
    pub check_counts: BTreeMap<String, usize>,
    pub failures: Vec<SweepFailure>,
}

/// All equidimensional coordinate arrangements with `2 <= n <= max_n`,
/// common prime size `1 <= h <= n-1`, and `1 <= s <= max_s` primes, in a
/// fixed deterministic order.
pub fn exhaustive_coordinate(
    max_n: usize,
    max_s: usize,
) -> impl Iterator<Item = CoordinateArrangement> {
    (2..=max_n).flat_map(move |n| {
        (1..=n - 1).flat_map(move |h| {
            let subsets: Vec<VariableSet> = (0..n)
                .combinations(h)
                .map(VariableSet::from_indices)
                .collect();
            (1..=max_s.min(subsets.len())).flat_map(move |s| {
                subsets
                    .clone()
                    .into_iter()
                    .combinations(s)
                    .map(move |primes| {
                        CoordinateArrangement::new(n, primes)
                            .expect("distinct equal-size subsets form an antichain")
                    })
            })
        })
    })
}

/// One random equidimensional arrangement: uniform (n, h, s) in range, then
/// `s` distinct `h`-subsets sampled with rejection.
pub fn random_coordinate(rng: &mut impl Rng, max_n: usize, max_s: usize) -> CoordinateArrangement {
    let n = rng.random_range(2..=max_n);
    let h = rng.random_range(1..=n - 1);
    let available = binomial(n, h);
    let s = rng.random_range(1..=max_s.min(available));
    let mut primes: Vec<VariableSet> = Vec::with_capacity(s);
    while primes.len() < s {
        let candidate = random_subset(rng, n, h);
        if !primes.contains(&candidate) {
            primes.push(candidate);
        }
    }
    CoordinateArrangement::new(n, primes).expect("sampled primes form an antichain")
}

/// A reproducible stream of random projective varieties.
pub fn seeded_projective(
    seed: u64,
    count: usize,
    max_d: usize,
    max_s: usize,
) -> Vec<ProjectiveVariety> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_projective(&mut rng, max_d, max_s))
        .collect()
}

/// One random equidimensional projective variety with `2 <= d <= max_d` and
/// `1 <= s <= max_s` components.
pub fn random_projective(rng: &mut impl Rng, max_d: usize, max_s: usize) -> ProjectiveVariety {
    let d = rng.random_range(2..=max_d);
    let s = rng.random_range(1..=max_s);
    let mut inter = vec![vec![0i64; s]; s];
    for i in 0..s {
        inter[i][i] = d as i64;
        for j in 0..i {
            let v = rng.random_range(-1..=d as i64 - 1);
            inter[i][j] = v;
            inter[j][i] = v;
        }
    }
    let components = (0..s).map(|i| format!("Z{}", i + 1)).collect();
    ProjectiveVariety::new(d, components, inter).expect("sampled matrix is valid")
}

fn binomial(n: usize, k: usize) -> usize {
    let k = k.min(n - k);
    let mut value = 1usize;
    for i in 0..k {
        value = value * (n - i) / (i + 1);
    }
    value
}

fn random_subset(rng: &mut impl Rng, n: usize, h: usize) -> VariableSet {
    let mut chosen = VariableSet::empty();
    let mut picked = 0;
    while picked < h {
        let v = rng.random_range(0..n);
        if !chosen.contains(v) {
            chosen.insert(v);
            picked += 1;
        }
    }
    chosen
}

/// The per-instance check battery. `arr` is passed separately from `coord`
/// so the driver can hand in a perturbed matrix.
pub fn coordinate_battery(
    coord: &CoordinateArrangement,
    arr: &AbstractArrangement,
    cap: usize,
) -> Vec<Check> {
    let mut checks = Vec::new();
    let d = arr.dim();
    let s = arr.prime_count();

    // the abstract matrix must match direct recomputation from the primes
    let mut consistency = Check::new("pairdim_consistency", true);
    for i in 0..s {
        for j in 0..s {
            if arr.pair_dim(i, j) != coord.pair_dim(i, j) {
                consistency.passed = false;
                consistency.record(format!("abstract_{i}_{j}"), arr.pair_dim(i, j) as i64);
                consistency.record(format!("coordinate_{i}_{j}"), coord.pair_dim(i, j) as i64);
            }
        }
    }
    checks.push(consistency);

    // c = d exactly for a single minimal prime
    let oracle = conn_dim_bruteforce(arr, cap).expect("cap checked by caller");
    checks.push(
        Check::new("c_eq_d_iff_single_prime", (oracle.c == d) == (s == 1))
            .with("c_oracle", oracle.c as i64)
            .with("d", d as i64)
            .with("s", s as i64),
    );

    if d < 2 {
        return checks;
    }

    let graph = conn_dim(arr).expect("d >= 2");
    checks.push(
        Check::new("conn_oracle_equivalence", graph.c == oracle.c)
            .with("c_graph", graph.c as i64)
            .with("c_oracle", oracle.c as i64),
    );

    let mut max_comp = Check::new("max_components_oracle_equivalence", true);
    for e in 0..=d - 2 {
        let via_graph = max_components(arr, e).expect("e in range");
        let via_partitions = max_components_bruteforce(arr, e, cap).expect("cap checked");
        if via_graph != via_partitions {
            max_comp.passed = false;
        }
        max_comp.record(format!("graph_e{e:02}"), via_graph as i64);
        max_comp.record(format!("partition_e{e:02}"), via_partitions as i64);
    }
    checks.push(max_comp);

    let profile = gamma_profile(arr).expect("d >= 2");
    checks.push(
        Check::new("profile_monotone", profile.windows(2).all(|w| w[0] >= w[1]))
            .with("entries", profile.len() as i64),
    );

    // Γ_t connected  ⇔  c >= d - t, for every threshold
    let mut iff = Check::new("graph_conn_iff_threshold", true);
    for t in 1..=d - 1 {
        let connected = gamma(arr, t).expect("t in range").is_connected();
        if connected != (graph.c >= d - t) {
            iff.passed = false;
            iff.record(format!("connected_t{t:02}"), connected as i64);
        }
    }
    checks.push(iff.with("c_graph", graph.c as i64));

    checks.push(telescoping_check(arr).expect("d >= 2"));
    checks.push(connected_profile_top_check(arr).expect("d >= 2"));
    checks.push(count_bound(arr, 0).expect("t = 0 valid"));

    if d >= 3 {
        let l01 = lambda01(arr).expect("d >= 2");
        let l12 = lambda12(arr).expect("d >= 2");
        let vanishing = l01 == 0 && l12 == 0;
        checks.push(
            Check::new("lambda12_characterization", (graph.c >= 2) == vanishing)
                .with("c_graph", graph.c as i64)
                .with("lambda01", l01 as i64)
                .with("lambda12", l12 as i64),
        );
        checks.push(count_bound(arr, 1).expect("t = 1 valid"));
        checks.push(section_profile_check(arr).expect("d >= 3"));
        checks.push(section_conn_check(arr).expect("d >= 3"));
    }

    checks
}

/// Battery for random projective instances: the cone correspondence.
pub fn projective_battery(x: &ProjectiveVariety) -> Vec<Check> {
    cone_consistency_checks(x).expect("d >= 2 by generation")
}

/// Runs the configured sweep, in parallel, and aggregates a summary that is
/// independent of scheduling: counts are additive and failures are sorted by
/// instance index.
pub fn run_sweep(config: &SweepConfig) -> crate::error::Result<SweepSummary> {
    if config.max_s > config.cap {
        return Err(crate::error::Error::CapExceeded {
            s: config.max_s,
            cap: config.cap,
        });
    }
    let fault_target = if config.inject_fault {
        find_fault_target(config)
    } else {
        None
    };

    let process = |(index, coord): (usize, CoordinateArrangement)| -> (usize, BTreeMap<String, usize>, Vec<SweepFailure>) {
        let mut arr = coord
            .to_abstract()
            .expect("generated instances are equidimensional");
        if fault_target == Some(index) {
            arr = perturb(&arr);
        }
        let checks = coordinate_battery(&coord, &arr, config.cap);
        let mut counts = BTreeMap::new();
        let mut failures = Vec::new();
        for check in checks {
            *counts.entry(check.name.clone()).or_insert(0) += 1;
            if !check.passed {
                failures.push(SweepFailure {
                    index,
                    check: check.name,
                    values: check.values,
                    instance: coordinate_to_value(&coord),
                });
            }
        }
        (1, counts, failures)
    };

    let merge = |mut a: (usize, BTreeMap<String, usize>, Vec<SweepFailure>),
                 b: (usize, BTreeMap<String, usize>, Vec<SweepFailure>)| {
        a.0 += b.0;
        for (name, count) in b.1 {
            *a.1.entry(name).or_insert(0) += count;
        }
        a.2.extend(b.2);
        a
    };

    let identity = || (0usize, BTreeMap::new(), Vec::new());

    let (instances, check_counts, mut failures) = match &config.mode {
        SweepMode::Exhaustive => exhaustive_coordinate(config.max_n, config.max_s)
            .enumerate()
            .par_bridge()
            .map(process)
            .reduce(identity, merge),
        SweepMode::Random { seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let instances: Vec<CoordinateArrangement> = (0..*count)
                .map(|_| random_coordinate(&mut rng, config.max_n, config.max_s))
                .collect();
            instances
                .into_iter()
                .enumerate()
                .par_bridge()
                .map(process)
                .reduce(identity, merge)
        }
    };

    failures.sort_by(|a, b| (a.index, &a.check).cmp(&(b.index, &b.check)));
    let checks_run = check_counts.values().sum();
    Ok(SweepSummary {
        instances,
        checks_run,
        check_counts,
        failures,
    })
}

/// Index of the first instance the fault injector can perturb (needs s >= 2
/// and d >= 2 so an off-diagonal entry has room to move).
fn find_fault_target(config: &SweepConfig) -> Option<usize> {
    let eligible = |coord: &CoordinateArrangement| {
        coord.prime_count() >= 2 && coord.dimension().map(|d| d >= 2).unwrap_or(false)
    };
    match &config.mode {
        SweepMode::Exhaustive => {
            exhaustive_coordinate(config.max_n, config.max_s).position(|coord| eligible(&coord))
        }
        SweepMode::Random { seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            (0..*count)
                .map(|_| random_coordinate(&mut rng, config.max_n, config.max_s))
                .position(|coord| eligible(&coord))
        }
    }
}

fn perturb(arr: &AbstractArrangement) -> AbstractArrangement {
    let d = arr.dim();
    let mut rows: Vec<Vec<usize>> = arr.rows().to_vec();
    let flipped = (rows[0][1] + 1) % d;
    rows[0][1] = flipped;
    rows[1][0] = flipped;
    AbstractArrangement::new(d, rows).expect("perturbed entry stays in range")
}
