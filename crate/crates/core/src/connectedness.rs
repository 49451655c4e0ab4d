//! Connectedness dimension c(A): the minimal dimension of a closed subset
//! whose removal disconnects Spec(A).
//!
//! Two independent routes are kept side by side: the graph characterization
//! `c(A) = max{ i >= 1 | Γ_{d-i}(A) connected }` (0 when Γ_{d-1} is already
//! disconnected, d when there is a single minimal prime), and an exhaustive
//! search over covers `S ∪ T = [s]` minimizing
//! `dim(A/(∩_{i∈S} p_i + ∩_{j∈T} p_j))`. The cover search is the oracle: it
//! never touches the graph code.

use serde::Serialize;

use crate::arrangement::AbstractArrangement;
use crate::error::{Error, Result};
use crate::gamma::gamma;

/// Default cap on the number of primes fed to the exponential searches.
pub const DEFAULT_BRUTEFORCE_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConnMethod {
    Graph,
    BruteForce,
}

/// What achieved the reported value: the threshold whose graph disconnects,
/// or a minimizing cover. Vertex labels are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConnWitness {
    Threshold {
        t: usize,
    },
    Cover {
        s_side: Vec<usize>,
        t_side: Vec<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnResult {
    pub c: usize,
    pub method: ConnMethod,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ConnWitness>,
}

/// Connectedness dimension through the graph family.
///
/// With one minimal prime, c(A) = d. Otherwise c(A) is the largest `i >= 1`
/// with Γ_{d-i} connected, or 0 if Γ_{d-1} is disconnected; monotonicity of
/// the family lets the scan stop at the first disconnected graph. The witness
/// is the disconnecting threshold `d - c - 1` when one exists in range.
pub fn conn_dim(arr: &AbstractArrangement) -> Result<ConnResult> {
    let d = arr.dim();
    if d < 2 {
        return Err(Error::DimensionTooSmall {
            op: "conn_dim",
            d,
            min: 2,
        });
    }
    if arr.prime_count() == 1 {
        return Ok(ConnResult {
            c: d,
            method: ConnMethod::Graph,
            witness: None,
        });
    }
    let mut c = 0;
    for i in 1..=d - 1 {
        if gamma(arr, d - i)?.is_connected() {
            c = i;
        } else {
            break;
        }
    }
    let witness = if c <= d - 2 {
        Some(ConnWitness::Threshold { t: d - c - 1 })
    } else {
        None
    };
    Ok(ConnResult {
        c,
        method: ConnMethod::Graph,
        witness,
    })
}

type Cover = (Vec<usize>, Vec<usize>);

fn canonical_cover(mut s_side: Vec<usize>, mut t_side: Vec<usize>) -> Cover {
    if (&t_side, &s_side) < (&s_side, &t_side) {
        std::mem::swap(&mut s_side, &mut t_side);
    }
    (s_side, t_side)
}

/// Exhaustive-cover oracle for the connectedness dimension.
///
/// Every prime is assigned to S only, T only, or both (3^s states, S and T
/// nonempty, first prime pinned to the S side to halve the symmetric space);
/// the value of a cover is `max{ pairdim[i][j] | i ∈ S, j ∈ T }`, and c(A)
/// is the minimum over covers. A shared index contributes its diagonal
/// entry d, so any minimizer with s >= 2 is a genuine two-block partition.
/// The lexicographically least minimizing cover is reported as the witness.
pub fn conn_dim_bruteforce(arr: &AbstractArrangement, cap: usize) -> Result<ConnResult> {
    let s = arr.prime_count();
    if s > cap {
        return Err(Error::CapExceeded { s, cap });
    }
    let d = arr.dim();
    if s == 1 {
        return Ok(ConnResult {
            c: d,
            method: ConnMethod::BruteForce,
            witness: Some(ConnWitness::Cover {
                s_side: vec![1],
                t_side: vec![1],
            }),
        });
    }

    const S_ONLY: u8 = 0;
    const T_ONLY: u8 = 1;
    const BOTH: u8 = 2;

    let mut best: Option<(usize, Cover)> = None;
    let mut assignment = vec![S_ONLY; s];
    loop {
        // evaluate the current assignment unless one side is empty
        let s_side: Vec<usize> = (0..s).filter(|&i| assignment[i] != T_ONLY).collect();
        let t_side: Vec<usize> = (0..s).filter(|&i| assignment[i] != S_ONLY).collect();
        if !s_side.is_empty() && !t_side.is_empty() {
            let mut value = 0;
            for &i in &s_side {
                for &j in &t_side {
                    value = value.max(arr.pair_dim(i, j));
                }
            }
            let cover = canonical_cover(
                s_side.iter().map(|&i| i + 1).collect(),
                t_side.iter().map(|&j| j + 1).collect(),
            );
            let better = match &best {
                None => true,
                Some((v, w)) => value < *v || (value == *v && cover < *w),
            };
            if better {
                best = Some((value, cover));
            }
        }

        // odometer over assignments; the first prime never takes T_ONLY
        let mut pos = s;
        while pos > 0 {
            let i = pos - 1;
            if assignment[i] < BOTH {
                assignment[i] += if i == 0 { 2 } else { 1 };
                break;
            }
            assignment[i] = S_ONLY;
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
    }

    let (c, (s_side, t_side)) = best.expect("at least one cover exists for s >= 2");
    Ok(ConnResult {
        c,
        method: ConnMethod::BruteForce,
        witness: Some(ConnWitness::Cover { s_side, t_side }),
    })
}

/// Maximum number of connected components of `Spec(A) \ X` over closed `X`
/// with `dim(X) <= e`; equals `#Γ_{d-e-1}`.
pub fn max_components(arr: &AbstractArrangement, e: usize) -> Result<usize> {
    let d = arr.dim();
    if d < 2 {
        return Err(Error::DimensionTooSmall {
            op: "max_components",
            d,
            min: 2,
        });
    }
    if e > d - 2 {
        return Err(Error::BoundOutOfRange {
            value: e,
            max: d - 2,
        });
    }
    Ok(gamma(arr, d - e - 1)?.component_count())
}

/// Partition oracle for `max_components`: the largest `k` over partitions of
/// the primes into `k` blocks in which every cross-block pair has
/// `pairdim <= e`. Backtracking over restricted-growth strings; no graph
/// code is involved.
pub fn max_components_bruteforce(arr: &AbstractArrangement, e: usize, cap: usize) -> Result<usize> {
    let s = arr.prime_count();
    if s > cap {
        return Err(Error::CapExceeded { s, cap });
    }
    let d = arr.dim();
    if d < 2 {
        return Err(Error::DimensionTooSmall {
            op: "max_components_bruteforce",
            d,
            min: 2,
        });
    }
    if e > d - 2 {
        return Err(Error::BoundOutOfRange {
            value: e,
            max: d - 2,
        });
    }

    fn search(
        arr: &AbstractArrangement,
        e: usize,
        block_of: &mut Vec<usize>,
        blocks: usize,
        next: usize,
        best: &mut usize,
    ) {
        let s = arr.prime_count();
        if next == s {
            *best = (*best).max(blocks);
            return;
        }
        if blocks + (s - next) <= *best {
            return; // cannot beat the best found so far
        }
        // blocks an element is forced into: partners with pairdim > e
        let mut forced: Option<usize> = None;
        let mut conflict = false;
        for j in 0..next {
            if arr.pair_dim(next, j) > e {
                match forced {
                    None => forced = Some(block_of[j]),
                    Some(b) if b == block_of[j] => {}
                    Some(_) => {
                        conflict = true;
                        break;
                    }
                }
            }
        }
        if conflict {
            return;
        }
        match forced {
            Some(b) => {
                block_of.push(b);
                search(arr, e, block_of, blocks, next + 1, best);
                block_of.pop();
            }
            None => {
                for b in 0..=blocks {
                    block_of.push(b);
                    let new_blocks = blocks.max(b + 1);
                    search(arr, e, block_of, new_blocks, next + 1, best);
                    block_of.pop();
                }
            }
        }
    }

    let mut best = 0;
    let mut block_of = Vec::with_capacity(s);
    search(arr, e, &mut block_of, 0, 0, &mut best);
    Ok(best)
}
