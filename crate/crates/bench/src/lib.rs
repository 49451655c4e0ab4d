//! Instance builders shared by the benchmarks.

use lyubgraph::{CoordinateArrangement, VariableSet};

/// `n` primes, the i-th on the cyclic window `{i, .., i+h-1 mod n}`.
///
/// Consecutive windows overlap in `h - 1` variables, so the graphs range
/// from a cycle at low thresholds to complete at high ones; a useful shape
/// for exercising component computations at larger `s`.
pub fn cyclic_windows(n: usize, h: usize) -> CoordinateArrangement {
    assert!(h >= 1 && h < n);
    let primes = (0..n)
        .map(|start| VariableSet::from_indices((0..h).map(|k| (start + k) % n)))
        .collect();
    CoordinateArrangement::new(n, primes).expect("windows form an antichain")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn windows_are_equidimensional() {
        let arr = cyclic_windows(12, 4);
        assert_eq!(arr.prime_count(), 12);
        assert_eq!(arr.dimension().unwrap(), 8);
    }
}
