use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

pub const MAX_RANDOM_VERTICES: usize = 20;

/// A reproducible random complex on `{1..=n}`.
///
/// Every subset `S` is drawn independently with probability
/// `density^(1 + |2|S| - n| / 2)`, which peaks at the middle cardinality, and the
/// drawn sets are normalized to their maximal elements. Density `0` gives the
/// void complex and density `1` the full simplex.
pub fn random_complex(n: usize, seed: u64, density: f64) -> Result<SimplicialComplex> {
    if !(1..=MAX_RANDOM_VERTICES).contains(&n) {
        return Err(Error::HarnessConfig(format!(
            "random complexes need 1 <= n <= {MAX_RANDOM_VERTICES}, got {n}"
        )));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::HarnessConfig(format!(
            "density must lie in [0, 1], got {density}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let probability: Vec<f64> = (0..=n)
        .map(|k| {
            let distance = (2 * k).abs_diff(n) as f64 / 2.0;
            density.powf(1.0 + distance)
        })
        .collect();
    let mut drawn = Vec::new();
    for bits in 0u64..1 << n {
        let set = VertexSet::from_bits(bits);
        let roll: f64 = rng.gen();
        if roll < probability[set.len()] {
            drawn.push(set);
        }
    }
    SimplicialComplex::normalize(drawn, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extremes() {
        for seed in 0..5 {
            assert!(random_complex(6, seed, 0.0).unwrap().is_void());
            assert!(random_complex(6, seed, 1.0).unwrap().is_full_simplex());
        }
    }

    #[test]
    fn deterministic() {
        assert_eq!(
            random_complex(10, 99, 0.4).unwrap(),
            random_complex(10, 99, 0.4).unwrap()
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(random_complex(0, 1, 0.5).is_err());
        assert!(random_complex(21, 1, 0.5).is_err());
        assert!(random_complex(5, 1, 1.5).is_err());
    }
}
