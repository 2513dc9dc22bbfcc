//! Seeded generators for random codes and evaluation data.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use crate::code::LinearCode;
use crate::gf::{Field, ProjPoint};
use crate::linalg::Matrix;

/// Deterministic generator for stream `stream` of `seed`.
pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

pub fn element<R: Rng>(f: &Field, rng: &mut R) -> u32 {
    rng.random_range(0..f.q())
}

pub fn nonzero<R: Rng>(f: &Field, rng: &mut R) -> u32 {
    rng.random_range(1..f.q())
}

pub fn vector<R: Rng>(f: &Field, n: usize, rng: &mut R) -> Vec<u32> {
    (0..n).map(|_| element(f, rng)).collect()
}

/// A vector without zero entries.
pub fn invertible<R: Rng>(f: &Field, n: usize, rng: &mut R) -> Vec<u32> {
    (0..n).map(|_| nonzero(f, rng)).collect()
}

/// `n` distinct points of the projective line; infinity is excluded
/// unless `allow_infinity`. Panics if there are too few points.
pub fn points<R: Rng>(f: &Field, n: usize, allow_infinity: bool, rng: &mut R) -> Vec<ProjPoint> {
    let mut all: Vec<ProjPoint> = ProjPoint::all(f).filter(|p| allow_infinity || *p != ProjPoint::Infinity).collect();
    assert!(n <= all.len(), "not enough evaluation points");
    all.shuffle(rng);
    all.truncate(n);
    all
}

/// The row space of a random `k x n` matrix (dimension at most `k`).
pub fn code<R: Rng>(f: &Field, n: usize, k: usize, rng: &mut R) -> LinearCode {
    let data = (0..k * n).map(|_| element(f, rng)).collect();
    LinearCode::from_matrix(&Matrix::new(f, k, n, data).expect("valid entries"))
}

/// A random code of dimension exactly `k`.
pub fn code_of_dim<R: Rng>(f: &Field, n: usize, k: usize, rng: &mut R) -> LinearCode {
    assert!(k <= n);
    loop {
        let c = code(f, n, k, rng);
        if c.k() == k {
            return c;
        }
    }
}

/// A random full-support code of dimension exactly `k >= 1`.
pub fn full_support_code<R: Rng>(f: &Field, n: usize, k: usize, rng: &mut R) -> LinearCode {
    assert!(k >= 1);
    loop {
        let c = code_of_dim(f, n, k, rng);
        if c.has_full_support() {
            return c;
        }
    }
}
