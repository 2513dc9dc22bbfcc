//! Linear codes stored in canonical form, with Schur products, duals,
//! distances and the MDS predicate.

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::linalg::{axpy, pivots_of, reduce, Matrix, Span};

/// Default ceiling on enumerated messages (and column subsets).
pub const DEFAULT_BUDGET: u64 = 1 << 26;
/// Default largest solution-space dimension enumerated by diagonal equivalence.
pub const DEFAULT_AMBIGUITY_DIM: usize = 3;

/// Resource ceilings for exhaustive routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub budget: u64,
    pub ambiguity_dim: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { budget: DEFAULT_BUDGET, ambiguity_dim: DEFAULT_AMBIGUITY_DIM }
    }
}

impl Limits {
    pub fn with_budget(budget: u64) -> Self {
        Limits { budget, ..Limits::default() }
    }
}

/// A linear code of length `n`, stored as the RREF of a generator matrix
/// without zero rows. Two codes are equal iff they define the same subspace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "crate::doc::CodeDoc", into = "crate::doc::CodeDoc")]
pub struct LinearCode {
    n: usize,
    gen: Matrix,
    pivots: Vec<usize>,
}

impl LinearCode {
    /// The code spanned by `rows`.
    pub fn from_rows<R: AsRef<[u32]>>(field: &Field, n: usize, rows: &[R]) -> Result<Self> {
        let m = Matrix::from_rows(field, n, rows)?;
        Ok(Self::from_matrix(&m))
    }

    /// The row space of `m`.
    pub fn from_matrix(m: &Matrix) -> Self {
        Self::from_basis(m.row_basis())
    }

    fn from_basis(gen: Matrix) -> Self {
        let pivots = pivots_of(&gen);
        LinearCode { n: gen.cols(), gen, pivots }
    }

    fn from_span(span: Span) -> Self {
        Self::from_basis(span.into_matrix())
    }

    pub fn zero(field: &Field, n: usize) -> Self {
        Self::from_basis(Matrix::zeros(field, 0, n))
    }

    /// `F^n`.
    pub fn full(field: &Field, n: usize) -> Self {
        Self::from_basis(Matrix::identity(field, n))
    }

    /// The repetition code spanned by the all-one vector.
    pub fn ones(field: &Field, n: usize) -> Self {
        Self::from_basis(Matrix::from_rows_unchecked(field, n, vec![vec![1; n]]))
    }

    pub fn field(&self) -> &Field {
        self.gen.field()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension.
    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    /// Canonical (RREF) generator matrix.
    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.k() == 0
    }

    /// Message `msg` (length `k`) encoded with the canonical generator.
    pub fn encode(&self, msg: &[u32]) -> Vec<u32> {
        self.gen.combine_rows(msg)
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        if v.len() != self.n {
            return false;
        }
        let mut w = v.to_vec();
        reduce(&self.gen, &self.pivots, &mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Whether `self` is a subspace of `other`.
    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.field() == other.field()
            && self.n == other.n
            && self.gen.row_iter().all(|r| other.contains(r))
    }

    fn compatible(&self, other: &LinearCode) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        if self.n != other.n {
            return Err(Error::LengthMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    fn check_vector(&self, v: &[u32]) -> Result<()> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, found: v.len() });
        }
        for &x in v {
            self.field().check(x)?;
        }
        Ok(())
    }

    /// The span of all componentwise products `xy`, `x` in `self`, `y` in `other`.
    pub fn schur_product(&self, other: &LinearCode) -> Result<LinearCode> {
        self.compatible(other)?;
        let f = self.field();
        let mut span = Span::new(f, self.n);
        let mut prod = vec![0; self.n];
        'outer: for a in self.gen.row_iter() {
            for b in other.gen.row_iter() {
                for j in 0..self.n {
                    prod[j] = f.mul(a[j], b[j]);
                }
                span.insert(&prod);
                if span.dim() == self.n {
                    break 'outer;
                }
            }
        }
        Ok(Self::from_span(span))
    }

    /// `t`-fold Schur power.
    pub fn schur_power(&self, t: usize) -> Result<LinearCode> {
        if t == 0 {
            return Err(Error::PreconditionViolated("Schur power exponent must be at least 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..t {
            acc = acc.schur_product(self)?;
        }
        Ok(acc)
    }

    /// Product of a non-empty list of codes.
    pub fn product_of(codes: &[LinearCode]) -> Result<LinearCode> {
        let (first, rest) = codes
            .split_first()
            .ok_or_else(|| Error::InvalidInput("empty code list".into()))?;
        rest.iter().try_fold(first.clone(), |acc, c| acc.schur_product(c))
    }

    /// Sorted union of the supports of the generator rows.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n).filter(|&j| self.gen.row_iter().any(|r| r[j] != 0)).collect()
    }

    pub fn has_full_support(&self) -> bool {
        self.support().len() == self.n
    }

    /// Dual with respect to the standard inner product.
    pub fn dual(&self) -> LinearCode {
        Self::from_basis(self.gen.kernel())
    }

    fn check_indices(&self, idx: &[usize]) -> Result<()> {
        match idx.iter().find(|&&j| j >= self.n) {
            Some(&j) => Err(Error::IndexOutOfRange { index: j, len: self.n }),
            None => Ok(()),
        }
    }

    /// Projection onto the coordinates `keep`, in the listed order.
    pub fn restrict(&self, keep: &[usize]) -> Result<LinearCode> {
        self.check_indices(keep)?;
        Ok(Self::from_matrix(&self.gen.select_cols(keep)))
    }

    /// Deletes the coordinates in `drop`.
    pub fn puncture(&self, drop: &[usize]) -> Result<LinearCode> {
        self.check_indices(drop)?;
        let keep: Vec<usize> = (0..self.n).filter(|j| !drop.contains(j)).collect();
        self.restrict(&keep)
    }

    /// Keeps the codewords vanishing on `drop`, then deletes those coordinates.
    pub fn shorten(&self, drop: &[usize]) -> Result<LinearCode> {
        self.check_indices(drop)?;
        let drop: Vec<usize> = drop.iter().copied().sorted().dedup().collect();
        let msgs = self.gen.select_cols(&drop).transpose().kernel();
        let sub = msgs.mul(&self.gen)?;
        let keep: Vec<usize> = (0..self.n).filter(|j| !drop.contains(j)).collect();
        Ok(Self::from_matrix(&sub.select_cols(&keep)))
    }

    /// `{g c : c in self}`.
    pub fn scale(&self, g: &[u32]) -> Result<LinearCode> {
        self.check_vector(g)?;
        let f = self.field();
        let rows: Vec<Vec<u32>> = self
            .gen
            .row_iter()
            .map(|r| r.iter().zip(g).map(|(&a, &b)| f.mul(a, b)).collect())
            .collect();
        Ok(Self::from_matrix(&Matrix::from_rows_unchecked(f, self.n, rows)))
    }

    /// Direct sum on disjoint coordinate blocks: `self` first, then `other`.
    pub fn direct_sum(&self, other: &LinearCode) -> Result<LinearCode> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        let n = self.n + other.n;
        Self::embed(self.field(), n, &[(&(0..self.n).collect::<Vec<_>>(), self), (&(self.n..n).collect::<Vec<_>>(), other)])
    }

    /// Places each block code on the listed coordinates of `F^n`.
    pub fn embed(field: &Field, n: usize, blocks: &[(&[usize], &LinearCode)]) -> Result<LinearCode> {
        let mut rows = Vec::new();
        for (coords, code) in blocks {
            if code.field() != field {
                return Err(Error::FieldMismatch);
            }
            if coords.len() != code.n {
                return Err(Error::LengthMismatch { expected: code.n, found: coords.len() });
            }
            if let Some(&j) = coords.iter().find(|&&j| j >= n) {
                return Err(Error::IndexOutOfRange { index: j, len: n });
            }
            for r in code.gen.row_iter() {
                let mut v = vec![0; n];
                for (&j, &x) in coords.iter().zip(r) {
                    v[j] = x;
                }
                rows.push(v);
            }
        }
        Ok(Self::from_matrix(&Matrix::from_rows_unchecked(field, n, rows)))
    }

    fn enumeration_cost(&self) -> u128 {
        (self.field().q() as u128).saturating_pow(self.k() as u32)
    }

    fn check_budget(&self, limits: &Limits) -> Result<()> {
        let required = self.enumeration_cost();
        if required > limits.budget as u128 {
            return Err(Error::BudgetExceeded { required, budget: limits.budget });
        }
        Ok(())
    }

    /// Exact minimum distance by exhaustive message enumeration.
    pub fn min_distance(&self, limits: &Limits) -> Result<usize> {
        self.min_weight_word(limits).map(|(d, _)| d)
    }

    /// Minimum distance together with the first minimum-weight codeword met
    /// in enumeration order. Only messages whose leading non-zero coordinate
    /// is 1 are visited, since weight is invariant under scaling.
    pub fn min_weight_word(&self, limits: &Limits) -> Result<(usize, Vec<u32>)> {
        if self.is_zero() {
            return Err(Error::ZeroCode);
        }
        self.check_budget(limits)?;
        let f = self.field();
        let q = f.q() as usize;
        let k = self.k();
        let n = self.n;
        // multiples[r][c] = c * row r
        let multiples: Vec<Vec<Vec<u32>>> = self
            .gen
            .row_iter()
            .map(|row| f.elements().map(|c| row.iter().map(|&x| f.mul(c, x)).collect()).collect())
            .collect();

        // A task fixes the leading coordinate and, when one exists, the next one.
        let mut tasks: Vec<(usize, Option<usize>)> = Vec::new();
        for lead in 0..k {
            if lead + 1 < k {
                tasks.extend((0..q).map(|c| (lead, Some(c))));
            } else {
                tasks.push((lead, None));
            }
        }
        let results: Vec<(usize, Vec<u32>)> = tasks
            .par_iter()
            .map(|&(lead, next)| {
                let mut start = multiples[lead][1].clone();
                let mut level = lead + 1;
                if let Some(c) = next {
                    axpy(f, &mut start, 1, &multiples[lead + 1][c]);
                    level += 1;
                }
                let mut best = (usize::MAX, Vec::new());
                let mut scratch = vec![vec![0; n]; k + 1];
                search(f, &multiples, level, &start, &mut scratch, &mut best);
                best
            })
            .collect();
        let mut best = (usize::MAX, Vec::new());
        for r in results {
            if r.0 < best.0 {
                best = r;
            }
        }
        Ok(best)
    }

    /// Whether `k + d = n + 1`, choosing whichever exact route is cheaper:
    /// exhaustive distance, or invertibility of every `k`-column minor.
    pub fn is_mds(&self, limits: &Limits) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroCode);
        }
        if self.k() == self.n {
            return Ok(true);
        }
        let words = self.enumeration_cost();
        let subsets = binomial(self.n, self.k());
        let budget = limits.budget as u128;
        let by_words = words <= budget;
        let by_columns = subsets <= budget;
        match (by_words, by_columns) {
            (false, false) => Err(Error::BudgetExceeded { required: words.min(subsets), budget: limits.budget }),
            (true, false) => self.is_mds_by_distance(limits),
            (false, true) => Ok(self.is_mds_by_columns()),
            (true, true) => {
                let k = self.k() as u128;
                if subsets.saturating_mul(k * k) <= words.saturating_mul(self.n as u128) {
                    Ok(self.is_mds_by_columns())
                } else {
                    self.is_mds_by_distance(limits)
                }
            }
        }
    }

    pub fn is_mds_by_distance(&self, limits: &Limits) -> Result<bool> {
        Ok(self.min_distance(limits)? + self.k() == self.n + 1)
    }

    /// Every set of `k` columns of the generator matrix is independent.
    pub fn is_mds_by_columns(&self) -> bool {
        let k = self.k();
        (0..self.n).combinations(k).all(|cols| self.gen.select_cols(&cols).rank() == k)
    }

    /// The generator matrix that is the identity on the columns `info`
    /// (taken in the listed order), if those columns are independent.
    pub fn systematic_generator(&self, info: &[usize]) -> Result<Option<Matrix>> {
        self.check_indices(info)?;
        let k = self.k();
        if k == 0 {
            return Err(Error::ZeroCode);
        }
        if info.len() != k {
            return Err(Error::LengthMismatch { expected: k, found: info.len() });
        }
        let f = self.field();
        let rows: Vec<Vec<u32>> = (0..k)
            .map(|r| {
                let mut v: Vec<u32> = info.iter().map(|&c| self.gen.get(r, c)).collect();
                v.extend_from_slice(self.gen.row(r));
                v
            })
            .collect();
        let e = Matrix::from_rows_unchecked(f, k + self.n, rows).rref();
        if e.rank < k || e.pivots[k - 1] >= k {
            return Ok(None);
        }
        let out: Vec<Vec<u32>> = (0..k).map(|r| e.matrix.row(r)[k..].to_vec()).collect();
        Ok(Some(Matrix::from_rows_unchecked(f, self.n, out)))
    }

    /// A systematic generator matrix whose first row is a minimum-weight
    /// codeword. The information set meets the support of that word in a
    /// single coordinate.
    pub fn min_weight_systematic(&self, limits: &Limits) -> Result<Matrix> {
        let (_, word) = self.min_weight_word(limits)?;
        let outside: Vec<usize> = (0..self.n).filter(|&j| word[j] == 0).collect();
        let rest = self.gen.select_cols(&outside).rref();
        if rest.rank + 1 != self.k() {
            return Err(Error::InternalTheoremViolation(
                "columns outside a minimum-weight word must have rank k - 1".into(),
            ));
        }
        let others: Vec<usize> = rest.pivots.iter().map(|&p| outside[p]).collect();
        for lead in (0..self.n).filter(|&j| word[j] != 0) {
            let mut info = others.clone();
            info.push(lead);
            info.sort_unstable();
            if let Some(g) = self.systematic_generator(&info)? {
                let pos = info.iter().position(|&j| j == lead).unwrap();
                let mut order = vec![pos];
                order.extend((0..info.len()).filter(|&i| i != pos));
                return Ok(g.select_rows(&order));
            }
        }
        Err(Error::InternalTheoremViolation("no information set through a minimum-weight word".into()))
    }
}

/// Depth-first enumeration of the free coefficient levels.
fn search(
    f: &Field,
    multiples: &[Vec<Vec<u32>>],
    level: usize,
    acc: &[u32],
    scratch: &mut [Vec<u32>],
    best: &mut (usize, Vec<u32>),
) {
    if best.0 == 1 {
        return;
    }
    let k = multiples.len();
    if level == k {
        let w = acc.iter().filter(|&&x| x != 0).count();
        if w < best.0 {
            *best = (w, acc.to_vec());
        }
        return;
    }
    if level + 1 == k {
        for m in &multiples[level] {
            let w = acc.iter().zip(m).filter(|(&a, &b)| f.add(a, b) != 0).count();
            if w < best.0 {
                let word = acc.iter().zip(m).map(|(&a, &b)| f.add(a, b)).collect();
                *best = (w, word);
                if w == 1 {
                    return;
                }
            }
        }
        return;
    }
    let (head, tail) = scratch.split_at_mut(1);
    let buf = &mut head[0];
    for m in &multiples[level] {
        buf.copy_from_slice(acc);
        axpy(f, buf, 1, m);
        search(f, multiples, level + 1, buf, tail, best);
        if best.0 == 1 {
            return;
        }
    }
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}
