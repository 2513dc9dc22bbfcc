//! Seeded random and bounded exhaustive searches for PMDS pairs.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{classify_pmds, is_pmds, verify_certificate, PmdsCertificate};
use crate::code::{Limits, LinearCode};
use crate::doc::CodeDoc;
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::linalg::Matrix;
use crate::random;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Random,
    Exhaustive,
}

fn default_samples() -> u64 {
    1000
}

fn default_max_instances() -> u64 {
    100_000
}

/// Search parameters; ranges are inclusive `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchConfig {
    pub field: Field,
    pub n_range: [usize; 2],
    pub k_range: [usize; 2],
    pub l_range: [usize; 2],
    pub mode: Mode,
    #[serde(default = "default_samples")]
    pub samples: u64,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub jobs: Option<usize>,
    #[serde(default)]
    pub budget: Option<u64>,
    /// Ceiling on visited candidates in exhaustive mode.
    #[serde(default = "default_max_instances")]
    pub max_instances: u64,
    /// Index of the first candidate, for resuming.
    #[serde(default)]
    pub offset: u64,
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        for (name, r) in [("n_range", self.n_range), ("k_range", self.k_range), ("l_range", self.l_range)] {
            if r[0] == 0 || r[0] > r[1] {
                return Err(Error::InvalidInput(format!("{name} must satisfy 1 <= lo <= hi")));
            }
        }
        if self.k_range[0] > self.n_range[1] || self.l_range[0] > self.n_range[1] {
            return Err(Error::InvalidInput("dimension ranges exceed every admissible length".into()));
        }
        if self.jobs == Some(0) {
            return Err(Error::InvalidInput("jobs must be positive".into()));
        }
        Ok(())
    }
}

/// One PMDS pair found by the search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub index: u64,
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub c: CodeDoc,
    pub d: CodeDoc,
    pub d_min: usize,
    pub product_mds: bool,
    /// `CD` is MDS or `d(CD) = 2`.
    pub dichotomy: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<PmdsCertificate>,
    pub verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSummary {
    pub candidates: u64,
    pub pmds: u64,
    pub verified: u64,
    pub dichotomy_violations: u64,
    pub errors: u64,
    /// Pairs meeting the PMDS equation whose product lacks full support.
    /// The classification does not apply to them, so they are not emitted.
    pub degenerate: u64,
    /// Candidates skipped because an enumeration exceeded the budget.
    pub over_budget: u64,
}

const CHUNK: u64 = 256;

fn pick<R: Rng>(r: [usize; 2], cap: usize, rng: &mut R) -> Option<usize> {
    let hi = r[1].min(cap);
    (r[0] <= hi).then(|| rng.random_range(r[0]..=hi))
}

fn random_candidate(cfg: &SearchConfig, index: u64) -> Option<(LinearCode, LinearCode)> {
    let f = &cfg.field;
    let mut rng = random::rng(cfg.seed, index);
    let n = rng.random_range(cfg.n_range[0]..=cfg.n_range[1]);
    let k = pick(cfg.k_range, n, &mut rng)?;
    let l = pick(cfg.l_range, n, &mut rng)?;
    Some((random::code_of_dim(f, n, k, &mut rng), random::code_of_dim(f, n, l, &mut rng)))
}

/// Blocks of the exhaustive index space: for each `(n, k, l)`, every pair
/// of `k x n` and `l x n` matrices, in base-`q` digit order.
fn exhaustive_blocks(cfg: &SearchConfig) -> Vec<(usize, usize, usize, u128, u128)> {
    let q = cfg.field.q() as u128;
    let mut out = Vec::new();
    for n in cfg.n_range[0]..=cfg.n_range[1] {
        for k in cfg.k_range[0]..=cfg.k_range[1].min(n) {
            for l in cfg.l_range[0]..=cfg.l_range[1].min(n) {
                let a = q.saturating_pow((k * n) as u32);
                let b = q.saturating_pow((l * n) as u32);
                out.push((n, k, l, a, b));
            }
        }
    }
    out
}

fn matrix_from_index(f: &Field, rows: usize, cols: usize, mut idx: u128) -> Matrix {
    let q = f.q() as u128;
    let data = (0..rows * cols)
        .map(|_| {
            let d = (idx % q) as u32;
            idx /= q;
            d
        })
        .collect();
    Matrix::new(f, rows, cols, data).expect("digits are field elements")
}

/// Only canonical generator matrices of full rank are kept, so every pair
/// of codes is visited once.
fn canonical(m: &Matrix) -> Option<LinearCode> {
    let e = m.rref();
    (e.rank == m.rows() && e.matrix == *m).then(|| LinearCode::from_matrix(m))
}

fn exhaustive_candidate(cfg: &SearchConfig, blocks: &[(usize, usize, usize, u128, u128)], index: u64) -> Option<(LinearCode, LinearCode)> {
    let mut rest = index as u128;
    for &(n, k, l, a, b) in blocks {
        let size = a.saturating_mul(b);
        if rest < size {
            let c = canonical(&matrix_from_index(&cfg.field, k, n, rest % a))?;
            let d = canonical(&matrix_from_index(&cfg.field, l, n, rest / a))?;
            return Some((c, d));
        }
        rest -= size;
    }
    None
}

enum Outcome {
    Skip,
    Degenerate,
    Found(Box<SearchRecord>),
}

fn examine(index: u64, c: &LinearCode, d: &LinearCode, limits: &Limits) -> Result<Outcome> {
    if !is_pmds(c, d, limits)? {
        return Ok(Outcome::Skip);
    }
    let p = c.schur_product(d)?;
    if !p.has_full_support() {
        return Ok(Outcome::Degenerate);
    }
    let d_min = p.min_distance(limits)?;
    let product_mds = p.is_mds(limits)?;
    let (certificate, error) = match classify_pmds(c, d, limits) {
        Ok(cert) => (Some(cert), None),
        Err(e @ Error::BudgetExceeded { .. }) => return Err(e),
        Err(e) => (None, Some(e.to_string())),
    };
    let verified = certificate.as_ref().is_some_and(|cert| verify_certificate(cert, c, d, limits));
    Ok(Outcome::Found(Box::new(SearchRecord {
        index,
        n: c.n(),
        k: c.k(),
        l: d.k(),
        c: CodeDoc::from(c),
        d: CodeDoc::from(d),
        d_min,
        product_mds,
        dichotomy: product_mds || d_min == 2,
        certificate,
        verified,
        error,
    })))
}

/// Runs the search, passing each PMDS record to `sink` in candidate order.
/// Output depends only on the configuration, never on scheduling.
pub fn run_search<F>(cfg: &SearchConfig, limits: &Limits, mut sink: F) -> Result<SearchSummary>
where
    F: FnMut(&SearchRecord) -> std::io::Result<()>,
{
    cfg.validate()?;
    let limits = Limits { budget: cfg.budget.unwrap_or(limits.budget), ..*limits };
    let blocks = exhaustive_blocks(cfg);
    let total: u128 = blocks.iter().map(|b| b.3.saturating_mul(b.4)).fold(0u128, |a, b| a.saturating_add(b));
    let count = match cfg.mode {
        Mode::Random => cfg.samples,
        Mode::Exhaustive => {
            let left = total.saturating_sub(cfg.offset as u128);
            left.min(cfg.max_instances as u128) as u64
        }
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cfg.jobs {
        builder = builder.num_threads(j);
    }
    let pool = builder.build().map_err(|e| Error::InvalidInput(e.to_string()))?;

    let mut summary = SearchSummary::default();
    let mut start = cfg.offset;
    let end = cfg.offset + count;
    while start < end {
        let stop = (start + CHUNK).min(end);
        let results: Vec<(u64, Result<Outcome>)> = pool.install(|| {
            (start..stop)
                .into_par_iter()
                .map(|i| {
                    let pair = match cfg.mode {
                        Mode::Random => random_candidate(cfg, i),
                        Mode::Exhaustive => exhaustive_candidate(cfg, &blocks, i),
                    };
                    let out = match pair {
                        Some((c, d)) => examine(i, &c, &d, &limits),
                        None => Ok(Outcome::Skip),
                    };
                    (i, out)
                })
                .collect()
        });
        for (_, r) in results {
            summary.candidates += 1;
            match r {
                Ok(Outcome::Skip) => {}
                Ok(Outcome::Degenerate) => summary.degenerate += 1,
                Err(Error::BudgetExceeded { .. }) => summary.over_budget += 1,
                Ok(Outcome::Found(rec)) => {
                    summary.pmds += 1;
                    summary.verified += rec.verified as u64;
                    summary.dichotomy_violations += (!rec.dichotomy) as u64;
                    summary.errors += rec.error.is_some() as u64;
                    sink(&rec).map_err(|e| Error::InvalidInput(format!("write failed: {e}")))?;
                }
                Err(e) => return Err(e),
            }
        }
        start = stop;
    }
    Ok(summary)
}
