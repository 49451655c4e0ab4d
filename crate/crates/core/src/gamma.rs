//! The graph family Γ_t: vertices are the minimal primes, with an edge
//! between distinct primes p, q exactly when ht(p + q) <= t.
//!
//! Γ_1 is the Hochster-Huneke (dual) graph; Γ_{d-1} is connected exactly when
//! the punctured spectrum is. The family is monotone: Γ_t is a subgraph of
//! Γ_s for t < s, so component counts are non-increasing in t.

use crate::arrangement::AbstractArrangement;
use crate::error::{Error, Result};
use crate::unionfind::UnionFind;

/// Γ_t together with its component partition.
///
/// Components carry canonical labels: each vertex is labeled by the smallest
/// vertex index in its component, so output is deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaGraph {
    t: usize,
    vertex_count: usize,
    adjacency: Vec<bool>,
    component_label: Vec<usize>,
    component_count: usize,
}

impl GammaGraph {
    pub(crate) fn build(t: usize, s: usize, edge: impl Fn(usize, usize) -> bool) -> Self {
        let mut adjacency = vec![false; s * s];
        let mut uf = UnionFind::new(s);
        for i in 0..s {
            for j in (i + 1)..s {
                if edge(i, j) {
                    adjacency[i * s + j] = true;
                    adjacency[j * s + i] = true;
                    uf.union(i, j);
                }
            }
        }
        let component_label = uf.canonical_labels();
        let component_count = {
            let mut roots: Vec<usize> = component_label.clone();
            roots.sort_unstable();
            roots.dedup();
            roots.len()
        };
        GammaGraph {
            t,
            vertex_count: s,
            adjacency,
            component_label,
            component_count,
        }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.adjacency[i * self.vertex_count + j]
    }

    /// Edges as ordered pairs `(i, j)`, `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let s = self.vertex_count;
        let mut out = Vec::new();
        for i in 0..s {
            for j in (i + 1)..s {
                if self.adjacency[i * s + j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    /// Per-vertex component label (smallest vertex index in the component).
    pub fn component_labels(&self) -> &[usize] {
        &self.component_label
    }

    /// Component classes, each sorted, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut label_of_class: Vec<usize> = Vec::new();
        for (v, &label) in self.component_label.iter().enumerate() {
            match label_of_class.iter().position(|&l| l == label) {
                Some(k) => classes[k].push(v),
                None => {
                    label_of_class.push(label);
                    classes.push(vec![v]);
                }
            }
        }
        classes
    }

    pub fn is_connected(&self) -> bool {
        self.component_count == 1
    }

    /// Graphviz rendering; vertex names default to `p1..ps`.
    pub fn to_dot(&self, names: Option<&[String]>) -> String {
        let name = |i: usize| match names {
            Some(ns) => ns[i].clone(),
            None => format!("p{}", i + 1),
        };
        let mut out = String::new();
        out.push_str(&format!(
            "graph gamma_{} {{\n  label=\"t = {}, components = {}\";\n",
            self.t, self.t, self.component_count
        ));
        for i in 0..self.vertex_count {
            out.push_str(&format!("  \"{}\";\n", name(i)));
        }
        for (i, j) in self.edges() {
            out.push_str(&format!("  \"{}\" -- \"{}\";\n", name(i), name(j)));
        }
        out.push_str("}\n");
        out
    }
}

/// Builds Γ_t of an equidimensional arrangement: edge iff
/// `pairdim[i][j] >= d - t`, i.e. `ht(p_i + p_j) <= t`.
pub fn gamma(arr: &AbstractArrangement, t: usize) -> Result<GammaGraph> {
    let d = arr.dim();
    if d < 2 {
        return Err(Error::DimensionTooSmall {
            op: "gamma",
            d,
            min: 2,
        });
    }
    if !(1..=d - 1).contains(&t) {
        return Err(Error::ThresholdOutOfRange { t, max: d - 1 });
    }
    Ok(GammaGraph::build(t, arr.prime_count(), |i, j| {
        arr.pair_dim(i, j) >= d - t
    }))
}

/// Number of connected components of a graph.
pub fn component_count(graph: &GammaGraph) -> usize {
    graph.component_count()
}

/// The vector `[#Γ_1, .., #Γ_{d-1}]`; non-increasing by monotonicity.
pub fn gamma_profile(arr: &AbstractArrangement) -> Result<Vec<usize>> {
    let d = arr.dim();
    if d < 2 {
        return Err(Error::DimensionTooSmall {
            op: "gamma_profile",
            d,
            min: 2,
        });
    }
    (1..=d - 1)
        .map(|t| Ok(gamma(arr, t)?.component_count()))
        .collect()
}
