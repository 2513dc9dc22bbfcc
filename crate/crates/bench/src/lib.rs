//! Seeded instances shared by the benchmarks.

use schur_core::rs::rs_code;
use schur_core::{random, Field, LinearCode};

pub fn field(q: u64) -> Field {
    Field::with_order(q).expect("prime power")
}

/// A random `[n, k]` code over GF(q).
pub fn random_code(q: u64, n: usize, k: usize, seed: u64) -> LinearCode {
    random::code_of_dim(&field(q), n, k, &mut random::rng(seed, 0))
}

/// A Reed-Solomon code with random points and multipliers.
pub fn random_rs(q: u64, n: usize, k: usize, seed: u64) -> LinearCode {
    let f = field(q);
    let mut rng = random::rng(seed, 0);
    let alpha = random::points(&f, n, true, &mut rng);
    let g = random::invertible(&f, n, &mut rng);
    rs_code(&f, &g, &alpha, k).expect("valid parameters")
}

/// Two Reed-Solomon codes on the same points.
pub fn rs_pair(q: u64, n: usize, k: usize, l: usize, seed: u64) -> (LinearCode, LinearCode) {
    let f = field(q);
    let mut rng = random::rng(seed, 0);
    let alpha = random::points(&f, n, true, &mut rng);
    let gc = random::invertible(&f, n, &mut rng);
    let gd = random::invertible(&f, n, &mut rng);
    (rs_code(&f, &gc, &alpha, k).unwrap(), rs_code(&f, &gd, &alpha, l).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instances_have_requested_shape() {
        assert_eq!(random_code(5, 10, 4, 1).k(), 4);
        let (c, d) = rs_pair(13, 12, 3, 4, 2);
        assert_eq!(c.schur_product(&d).unwrap().k(), 6);
        assert_eq!(random_rs(16, 17, 5, 3).k(), 5);
    }
}
