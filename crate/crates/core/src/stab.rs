//! Stabilizer algebras, disjoint-projector bases and block decompositions.

use serde::{Deserialize, Serialize};

use crate::code::{Limits, LinearCode};
use crate::doc::{BlockDoc, CodeDoc};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::linalg::Matrix;

/// A subspace of `F^n` closed under componentwise products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraBasis {
    space: LinearCode,
}

impl AlgebraBasis {
    /// Wraps `space` after checking closure under products of basis rows.
    pub fn new(space: LinearCode) -> Result<Self> {
        if !is_closed(&space) {
            return Err(Error::NotAnAlgebra);
        }
        Ok(AlgebraBasis { space })
    }

    pub fn from_rows<R: AsRef<[u32]>>(field: &Field, n: usize, rows: &[R]) -> Result<Self> {
        Self::new(LinearCode::from_rows(field, n, rows)?)
    }

    pub fn space(&self) -> &LinearCode {
        &self.space
    }

    pub fn basis(&self) -> &Matrix {
        self.space.generator()
    }

    pub fn dim(&self) -> usize {
        self.space.k()
    }

    pub fn n(&self) -> usize {
        self.space.n()
    }

    pub fn is_unital(&self) -> bool {
        self.space.contains(&vec![1; self.n()])
    }
}

fn is_closed(space: &LinearCode) -> bool {
    let f = space.field();
    let g = space.generator();
    let mut prod = vec![0; space.n()];
    for i in 0..g.rows() {
        for j in i..g.rows() {
            for (t, p) in prod.iter_mut().enumerate() {
                *p = f.mul(g.get(i, t), g.get(j, t));
            }
            if !space.contains(&prod) {
                return false;
            }
        }
    }
    true
}

/// `St(C) = {x : xC ⊆ C}`, as the common kernel of `H diag(b)` over the
/// generator rows `b` of `C`, where `H` is a parity-check matrix.
pub fn stabilizer(c: &LinearCode) -> Result<AlgebraBasis> {
    let f = c.field();
    let n = c.n();
    let h = c.dual();
    let mut rows = Vec::with_capacity(c.k() * h.k());
    for b in c.generator().row_iter() {
        for hr in h.generator().row_iter() {
            rows.push(hr.iter().zip(b).map(|(&x, &y)| f.mul(x, y)).collect::<Vec<u32>>());
        }
    }
    let system = Matrix::from_rows(f, n, &rows)?;
    let st = LinearCode::from_matrix(&system.kernel());
    let alg = AlgebraBasis::new(st).map_err(|_| {
        Error::InternalTheoremViolation("stabilizer is not closed under products".into())
    })?;
    if !alg.is_unital() {
        return Err(Error::InternalTheoremViolation("stabilizer does not contain 1".into()));
    }
    Ok(alg)
}

/// Disjoint projectors of a unital algebra, optionally with the blocks of a
/// code they split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectorDecomposition {
    /// Sorted supports, ordered by their least coordinate.
    pub supports: Vec<Vec<usize>>,
    pub n: usize,
    /// Block `i` is the code restricted to `supports[i]`.
    pub blocks: Vec<LinearCode>,
}

impl ProjectorDecomposition {
    pub fn h(&self) -> usize {
        self.supports.len()
    }

    /// 0/1 indicator vectors.
    pub fn projectors(&self) -> Vec<Vec<u32>> {
        self.supports
            .iter()
            .map(|s| {
                let mut v = vec![0; self.n];
                for &j in s {
                    v[j] = 1;
                }
                v
            })
            .collect()
    }

    /// Reassembles the direct sum of the blocks in `F^n`.
    pub fn reassemble(&self, field: &Field) -> Result<LinearCode> {
        let parts: Vec<(&[usize], &LinearCode)> =
            self.supports.iter().map(|s| s.as_slice()).zip(&self.blocks).collect();
        LinearCode::embed(field, self.n, &parts)
    }
}

#[derive(Serialize, Deserialize)]
struct DecompositionDoc {
    projectors: Vec<Vec<u32>>,
    blocks: Vec<BlockDoc>,
}

impl Serialize for ProjectorDecomposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DecompositionDoc {
            projectors: self.projectors(),
            blocks: self
                .supports
                .iter()
                .zip(&self.blocks)
                .map(|(sup, b)| BlockDoc { coordinates: sup.clone(), code: CodeDoc::from(b) })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ProjectorDecomposition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let doc = DecompositionDoc::deserialize(d)?;
        let n = doc.projectors.first().map_or(0, |p| p.len());
        let mut supports = Vec::new();
        for p in &doc.projectors {
            if p.len() != n || p.iter().any(|&x| x > 1) {
                return Err(D::Error::custom("projectors must be 0/1 vectors of a common length"));
            }
            supports.push((0..n).filter(|&j| p[j] == 1).collect::<Vec<_>>());
        }
        let mut blocks = Vec::new();
        for b in doc.blocks {
            let code = LinearCode::try_from(b.code).map_err(D::Error::custom)?;
            blocks.push(code);
        }
        Ok(ProjectorDecomposition { supports, n, blocks })
    }
}

/// The basis of disjoint projectors of a unital algebra: coordinates with
/// equal columns in the canonical basis form one class.
pub fn projector_basis(a: &AlgebraBasis) -> Result<ProjectorDecomposition> {
    if !a.is_unital() {
        return Err(Error::NotUnital);
    }
    if !is_closed(a.space()) {
        return Err(Error::NotAnAlgebra);
    }
    let n = a.n();
    let basis = a.basis();
    let mut supports: Vec<Vec<usize>> = Vec::new();
    let mut keys: Vec<Vec<u32>> = Vec::new();
    for j in 0..n {
        let col = basis.column(j);
        match keys.iter().position(|k| *k == col) {
            Some(i) => supports[i].push(j),
            None => {
                keys.push(col);
                supports.push(vec![j]);
            }
        }
    }
    let dec = ProjectorDecomposition { supports, n, blocks: Vec::new() };
    if dec.h() != a.dim() || dec.projectors().iter().any(|p| !a.space().contains(p)) {
        return Err(Error::NotAnAlgebra);
    }
    Ok(dec)
}

/// Splits a full-support code into indecomposable full-support blocks.
pub fn decompose(c: &LinearCode) -> Result<ProjectorDecomposition> {
    if c.is_zero() || !c.has_full_support() {
        return Err(Error::NotFullSupport);
    }
    let st = stabilizer(c)?;
    let mut dec = projector_basis(&st)?;
    dec.blocks = dec.supports.iter().map(|s| c.restrict(s)).collect::<Result<_>>()?;
    if dec.reassemble(c.field())? != *c {
        return Err(Error::InternalTheoremViolation("blocks do not reassemble the code".into()));
    }
    for b in &dec.blocks {
        if !b.has_full_support() || stabilizer(b)?.dim() != 1 {
            return Err(Error::InternalTheoremViolation(
                "block is not a full-support indecomposable code".into(),
            ));
        }
    }
    Ok(dec)
}

/// Outcome of the two stabilizer refinements of the Singleton bound.
/// A bound is `None` when its hypothesis fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefinedSingleton {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub h: usize,
    /// `d <= n - k + 1 - (h - 1)`, needs `d > 1`.
    pub bound1: Option<bool>,
    /// `d <= (n - k) / h + 1`, needs full support.
    pub bound2: Option<bool>,
}

impl RefinedSingleton {
    pub fn holds(&self) -> bool {
        self.bound1 != Some(false) && self.bound2 != Some(false)
    }

    /// Right-hand side of the first bound.
    pub fn rhs1(&self) -> i64 {
        self.n as i64 - self.k as i64 + 1 - (self.h as i64 - 1)
    }

    /// Right-hand side of the second bound as a fraction `(n - k + h) / h`.
    pub fn rhs2(&self) -> (usize, usize) {
        (self.n - self.k + self.h, self.h)
    }
}

pub fn singleton_refined_check(c: &LinearCode, limits: &Limits) -> Result<RefinedSingleton> {
    let d = c.min_distance(limits)?;
    let (n, k) = (c.n(), c.k());
    let h = stabilizer(c)?.dim();
    let bound1 = (d > 1).then(|| d as i64 <= n as i64 - k as i64 + 1 - (h as i64 - 1));
    let bound2 = c.has_full_support().then(|| (d - 1) * h <= n - k);
    Ok(RefinedSingleton { n, k, d, h, bound1, bound2 })
}
