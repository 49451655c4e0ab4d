//! Projective varieties presented by their irreducible components and
//! pairwise intersection dimensions, the analogous graphs Γ_t(X), and the
//! correspondence with the local ring at the vertex of the affine cone.
//!
//! For `X` equidimensional of dimension `d` with components `Z_1..Z_s`,
//! `Γ_t(X)` (for `1 <= t <= d`) joins `Z_i` and `Z_j` when
//! `dim(Z_i ∩ Z_j) >= d - t`. At the cone,
//! `ht(p_i + p_j) = d - dim(Z_i ∩ Z_j)`, so the cone's pairwise quotient
//! dimensions are `inter_dim + 1` (empty intersection, encoded as -1, maps
//! to 0: the cones meet only at the vertex) and `#Γ_t(X) = #Γ_t(cone)` for
//! every `t` in range. Inputs carry no ambient dimension, so every output
//! is embedding-independent by construction; component data is expected to
//! be geometric (components over the algebraic closure).

use crate::arrangement::AbstractArrangement;
use crate::error::{Error, Result};
use crate::gamma::GammaGraph;
use crate::lyubeznik;

/// An equidimensional projective variety: component labels and the symmetric
/// matrix of pairwise intersection dimensions, with -1 for an empty
/// intersection and `d` on the diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveVariety {
    dim: usize,
    components: Vec<String>,
    inter_dim: Vec<Vec<i64>>,
}

impl ProjectiveVariety {
    pub fn new(dim: usize, components: Vec<String>, inter_dim: Vec<Vec<i64>>) -> Result<Self> {
        let s = components.len();
        if s == 0 {
            return Err(Error::NoPrimes);
        }
        if inter_dim.len() != s {
            return Err(Error::RaggedMatrix {
                row: 0,
                expected: s,
                found: inter_dim.len(),
            });
        }
        for (row, r) in inter_dim.iter().enumerate() {
            if r.len() != s {
                return Err(Error::RaggedMatrix {
                    row,
                    expected: s,
                    found: r.len(),
                });
            }
        }
        for i in 0..s {
            if inter_dim[i][i] != dim as i64 {
                return Err(Error::MatrixEntryOutOfRange {
                    i,
                    j: i,
                    value: inter_dim[i][i],
                    expected: format!("diagonal = dim = {dim}"),
                });
            }
            for j in 0..s {
                if inter_dim[i][j] != inter_dim[j][i] {
                    return Err(Error::AsymmetricMatrix { i, j });
                }
                if i != j && !(-1..=dim as i64 - 1).contains(&inter_dim[i][j]) {
                    return Err(Error::MatrixEntryOutOfRange {
                        i,
                        j,
                        value: inter_dim[i][j],
                        expected: format!("-1..={}", dim as i64 - 1),
                    });
                }
            }
        }
        Ok(ProjectiveVariety {
            dim,
            components,
            inter_dim,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[String] {
        &self.components
    }

    pub fn inter_dim(&self, i: usize, j: usize) -> i64 {
        self.inter_dim[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.inter_dim
    }
}

/// Γ_t(X): edge between distinct components when
/// `dim(Z_i ∩ Z_j) >= d - t`, for `1 <= t <= d`.
pub fn gamma_proj(x: &ProjectiveVariety, t: usize) -> Result<GammaGraph> {
    let d = x.dim();
    if d < 1 {
        return Err(Error::DimensionTooSmall {
            op: "gamma_proj",
            d,
            min: 1,
        });
    }
    if !(1..=d).contains(&t) {
        return Err(Error::ThresholdOutOfRange { t, max: d });
    }
    Ok(GammaGraph::build(t, x.component_count(), |i, j| {
        x.inter_dim(i, j) >= d as i64 - t as i64
    }))
}

/// The vector `[#Γ_1(X), .., #Γ_d(X)]`.
pub fn gamma_profile_proj(x: &ProjectiveVariety) -> Result<Vec<usize>> {
    (1..=x.dim())
        .map(|t| Ok(gamma_proj(x, t)?.component_count()))
        .collect()
}

/// The local ring at the vertex of the affine cone: dimension `d + 1`,
/// `pairdim[i][j] = inter_dim[i][j] + 1`.
pub fn cone(x: &ProjectiveVariety) -> AbstractArrangement {
    let s = x.component_count();
    let d = x.dim();
    let pairdim: Vec<Vec<usize>> = (0..s)
        .map(|i| {
            (0..s)
                .map(|j| {
                    if i == j {
                        d + 1
                    } else {
                        (x.inter_dim(i, j) + 1) as usize
                    }
                })
                .collect()
        })
        .collect();
    AbstractArrangement::new(d + 1, pairdim)
        .expect("cone of a valid variety is a valid arrangement")
}

/// `λ_{1,2}` of the cone ring: `#Γ_{d-1}(X) - #Γ_d(X)`, independent of the
/// embedding. Needs `d >= 2`.
pub fn lambda12_proj(x: &ProjectiveVariety) -> Result<usize> {
    let d = x.dim();
    if d < 2 {
        return Err(Error::DimensionTooSmall {
            op: "lambda12_proj",
            d,
            min: 2,
        });
    }
    let low = gamma_proj(x, d - 1)?.component_count();
    let high = gamma_proj(x, d)?.component_count();
    Ok(low - high)
}

/// Embedding-independent lower bounds for `λ_{i,i+1}` of the cone ring, for
/// `2 <= i <= d-1`: entry `i` is `#Γ_{d-i}(X) - #Γ_{d-i+1}(X)`, which is the
/// cone's superdiagonal bound at the same `i`.
pub fn superdiag_lower_bounds_proj(x: &ProjectiveVariety) -> Result<Vec<usize>> {
    let d = x.dim();
    if d < 3 {
        return Err(Error::DimensionTooSmall {
            op: "superdiag_lower_bounds_proj",
            d,
            min: 3,
        });
    }
    (2..=d - 1)
        .map(|i| {
            let low = gamma_proj(x, d - i)?.component_count();
            let high = gamma_proj(x, d - i + 1)?.component_count();
            Ok(low - high)
        })
        .collect()
}

/// Cross-module consistency: the variety's graphs match the cone's graphs at
/// every threshold, and both routes to `λ_{1,2}` and to the superdiagonal
/// bounds agree.
pub fn cone_consistency_checks(x: &ProjectiveVariety) -> Result<Vec<crate::check::Check>> {
    use crate::check::Check;
    use crate::gamma::gamma;

    let d = x.dim();
    let cone_arr = cone(x);
    let mut checks = Vec::new();

    let mut graphs = Check::new("cone_graph_counts", true);
    for t in 1..=d {
        let on_x = gamma_proj(x, t)?.component_count();
        let on_cone = gamma(&cone_arr, t)?.component_count();
        if on_x != on_cone {
            graphs.passed = false;
        }
        graphs.record(format!("x_t{t:02}"), on_x as i64);
        graphs.record(format!("cone_t{t:02}"), on_cone as i64);
    }
    checks.push(graphs);

    if d >= 2 {
        let direct = lambda12_proj(x)?;
        let via_cone = lyubeznik::lambda12(&cone_arr)?;
        checks.push(
            Check::new("cone_lambda12", direct == via_cone)
                .with("projective", direct as i64)
                .with("cone", via_cone as i64),
        );
    }

    if d >= 3 {
        let direct = superdiag_lower_bounds_proj(x)?;
        let cone_bounds = lyubeznik::superdiag_lower_bounds(&cone_arr)?;
        // cone entries are indexed i = 1..=d-1; compare the i >= 2 tail
        let tail: Vec<usize> = cone_bounds[1..].to_vec();
        checks.push(
            Check::new("cone_superdiag_bounds", direct == tail)
                .with("entries", direct.len() as i64),
        );
    }

    Ok(checks)
}
