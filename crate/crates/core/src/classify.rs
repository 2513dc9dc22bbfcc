//! Bound verifiers and the classification of PMDS pairs.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::code::{Limits, LinearCode};
use crate::error::{Error, Result};
use crate::gf::{Field, ProjPoint};
use crate::linalg::Matrix;
use crate::random;
use crate::rs::{normalize, recover_common_evaluation, rs_code};
use crate::stab::{projector_basis, singleton_refined_check, stabilizer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = ">=")]
    Ge,
}

/// An exact rational, written as an integer when the denominator is 1 and
/// as `"num/den"` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    pub num: i64,
    pub den: i64,
}

impl Ratio {
    pub fn int(v: i64) -> Self {
        Ratio { num: v, den: 1 }
    }

    pub fn new(num: i64, den: i64) -> Self {
        assert!(den > 0);
        let g = gcd(num.unsigned_abs(), den as u64) as i64;
        Ratio { num: num / g, den: den / g }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl Serialize for Ratio {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.den == 1 {
            s.serialize_i64(self.num)
        } else {
            s.serialize_str(&self.to_string())
        }
    }
}

impl<'de> Deserialize<'de> for Ratio {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Doc {
            Int(i64),
            Text(String),
        }
        let bad = || serde::de::Error::custom("expected an integer or \"num/den\"");
        match Doc::deserialize(d)? {
            Doc::Int(v) => Ok(Ratio::int(v)),
            Doc::Text(t) => {
                let (a, b) = t.split_once('/').ok_or_else(bad)?;
                let num = a.trim().parse().map_err(|_| bad())?;
                let den: i64 = b.trim().parse().map_err(|_| bad())?;
                if den <= 0 {
                    return Err(bad());
                }
                Ok(Ratio::new(num, den))
            }
        }
    }
}

/// `lhs relation rhs`, evaluated exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub name: String,
    pub relation: Relation,
    pub lhs: i64,
    pub rhs: Ratio,
    /// False when the hypotheses of the bound fail; `holds` is then true.
    pub applicable: bool,
    pub holds: bool,
    pub context: BTreeMap<String, i64>,
}

impl BoundReport {
    fn new(name: &str, lhs: i64, relation: Relation, rhs: Ratio, context: &[(&str, i64)]) -> Self {
        let (a, b) = (lhs as i128 * rhs.den as i128, rhs.num as i128);
        let holds = match relation {
            Relation::Le => a <= b,
            Relation::Ge => a >= b,
        };
        BoundReport {
            name: name.into(),
            relation,
            lhs,
            rhs,
            applicable: true,
            holds,
            context: context.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        }
    }

    fn inapplicable(mut self) -> Self {
        self.applicable = false;
        self.holds = true;
        self
    }

    /// Whether the two sides are equal.
    pub fn tight(&self) -> bool {
        self.applicable && self.lhs as i128 * self.rhs.den as i128 == self.rhs.num as i128
    }
}

fn pair_compatible(c: &LinearCode, d: &LinearCode) -> Result<()> {
    if c.field() != d.field() {
        return Err(Error::FieldMismatch);
    }
    if c.n() != d.n() {
        return Err(Error::LengthMismatch { expected: c.n(), found: d.n() });
    }
    Ok(())
}

/// `dim CD >= dim C + dim D - dim St(CD)`.
pub fn kneser_check(c: &LinearCode, d: &LinearCode) -> Result<BoundReport> {
    pair_compatible(c, d)?;
    if c.is_zero() || d.is_zero() {
        return Err(Error::ZeroCode);
    }
    let p = c.schur_product(d)?;
    let h = stabilizer(&p)?.dim();
    let (k, l) = (c.k() as i64, d.k() as i64);
    Ok(BoundReport::new(
        "kneser",
        p.k() as i64,
        Relation::Ge,
        Ratio::int(k + l - h as i64),
        &[("n", c.n() as i64), ("k", k), ("l", l), ("dim_product", p.k() as i64), ("dim_stabilizer", h as i64)],
    ))
}

/// `d(C_1 ... C_t) <= max(t - 1, n - sum k_i + t)` for a full-support product.
pub fn psb_check(codes: &[LinearCode], limits: &Limits) -> Result<BoundReport> {
    if codes.len() < 2 {
        return Err(Error::InvalidInput("the product bound needs at least two codes".into()));
    }
    let p = LinearCode::product_of(codes)?;
    if p.is_zero() || !p.has_full_support() {
        return Err(Error::NotFullSupport);
    }
    let d = p.min_distance(limits)? as i64;
    let t = codes.len() as i64;
    let n = p.n() as i64;
    let sum: i64 = codes.iter().map(|c| c.k() as i64).sum();
    Ok(BoundReport::new(
        "product_singleton",
        d,
        Relation::Le,
        Ratio::int((t - 1).max(n - sum + t)),
        &[("n", n), ("t", t), ("sum_dims", sum), ("dim_product", p.k() as i64)],
    ))
}

/// `d <= n - k + 1`.
pub fn singleton_check(c: &LinearCode, limits: &Limits) -> Result<BoundReport> {
    let d = c.min_distance(limits)? as i64;
    let (n, k) = (c.n() as i64, c.k() as i64);
    Ok(BoundReport::new("singleton", d, Relation::Le, Ratio::int(n - k + 1), &[("n", n), ("k", k)]))
}

/// The two stabilizer refinements of the Singleton bound.
pub fn refined_singleton_checks(c: &LinearCode, limits: &Limits) -> Result<[BoundReport; 2]> {
    let r = singleton_refined_check(c, limits)?;
    let ctx = [("n", r.n as i64), ("k", r.k as i64), ("dim_stabilizer", r.h as i64)];
    let mut b1 = BoundReport::new("refined_singleton_1", r.d as i64, Relation::Le, Ratio::int(r.rhs1()), &ctx);
    if r.bound1.is_none() {
        b1 = b1.inapplicable();
    }
    let (num, den) = r.rhs2();
    let mut b2 = BoundReport::new("refined_singleton_2", r.d as i64, Relation::Le, Ratio::new(num as i64, den as i64), &ctx);
    if r.bound2.is_none() {
        b2 = b2.inapplicable();
    }
    Ok([b1, b2])
}

/// Every applicable report for a list of codes: the per-code Singleton
/// bounds, Kneser for pairs and the product bound for two or more codes.
pub fn bound_reports(codes: &[LinearCode], limits: &Limits) -> Result<Vec<BoundReport>> {
    let mut out = Vec::new();
    for c in codes {
        out.push(singleton_check(c, limits)?);
        out.extend(refined_singleton_checks(c, limits)?);
    }
    if codes.len() == 2 {
        out.push(kneser_check(&codes[0], &codes[1])?);
    }
    if codes.len() >= 2 {
        match psb_check(codes, limits) {
            Ok(r) => out.push(r),
            Err(Error::NotFullSupport) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// `2 <= d(CD) = n - dim C - dim D + 2`. A zero product is never PMDS.
pub fn is_pmds(c: &LinearCode, d: &LinearCode, limits: &Limits) -> Result<bool> {
    pair_compatible(c, d)?;
    let p = c.schur_product(d)?;
    if p.is_zero() {
        return Ok(false);
    }
    let target = c.n() as i64 - c.k() as i64 - d.k() as i64 + 2;
    if target < 2 {
        return Ok(false);
    }
    Ok(p.min_distance(limits)? as i64 == target)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Which {
    C,
    D,
}

/// One block of a dual-type certificate: on the coordinates `support`,
/// `c = (g d)^⊥`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualBlock {
    pub support: Vec<usize>,
    pub c: LinearCode,
    pub d: LinearCode,
    pub g: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "lowercase")]
pub enum PmdsCertificate {
    /// Both codes are Reed-Solomon on the points `alpha`.
    Rs { g_c: Vec<u32>, g_d: Vec<u32>, alpha: Vec<ProjPoint> },
    /// Both codes are MDS and the named one has dimension 1.
    #[serde(rename = "dim1")]
    DimOne { which: Which },
    /// Support-disjoint blocks, each a twisted dual pair.
    Dual { blocks: Vec<DualBlock> },
}

impl PmdsCertificate {
    pub fn case(&self) -> &'static str {
        match self {
            PmdsCertificate::Rs { .. } => "rs",
            PmdsCertificate::DimOne { .. } => "dim1",
            PmdsCertificate::Dual { .. } => "dual",
        }
    }
}

fn theorem(msg: String) -> Error {
    Error::InternalTheoremViolation(msg)
}

/// Classifies a PMDS pair, returning a certificate of its structure.
pub fn classify_pmds(c: &LinearCode, d: &LinearCode, limits: &Limits) -> Result<PmdsCertificate> {
    pair_compatible(c, d)?;
    let (n, k, l) = (c.n(), c.k(), d.k());
    let p = c.schur_product(d)?;
    if p.is_zero() {
        return Err(Error::NotPmds("the product is the zero code".into()));
    }
    let target = n as i64 - k as i64 - l as i64 + 2;
    let dist = p.min_distance(limits)?;
    if target < 2 || dist as i64 != target {
        return Err(Error::NotPmds(format!("d(CD) = {dist}, n - k - l + 2 = {target}")));
    }
    if !p.has_full_support() {
        return Err(Error::NotPmds(format!("the product has support of size {} < n = {n}", p.support().len())));
    }
    let st = stabilizer(&p)?;
    let h = st.dim();
    if p.k() + h != k + l {
        return Err(theorem(format!("Kneser equality fails: dim CD = {}, k + l - h = {}", p.k(), k + l - h)));
    }
    if dist > 2 {
        for (name, code) in [("C", c), ("D", d), ("CD", &p)] {
            if !code.is_mds(limits)? {
                return Err(theorem(format!("{name} is not MDS although d(CD) > 2")));
            }
        }
        if k.min(l) == 1 {
            return Ok(PmdsCertificate::DimOne { which: if k == 1 { Which::C } else { Which::D } });
        }
        let ev = recover_common_evaluation(c, d, limits).map_err(|e| match e {
            Error::BudgetExceeded { .. } => e,
            other => theorem(format!("common evaluation points not found: {other}")),
        })?;
        return Ok(PmdsCertificate::Rs { g_c: ev.g_c, g_d: ev.g_d, alpha: ev.alpha });
    }
    let dec = projector_basis(&st)?;
    let mut blocks = Vec::with_capacity(h);
    for sup in &dec.supports {
        let ci = c.restrict(sup)?;
        let di = d.restrict(sup)?;
        let pi = p.restrict(sup)?;
        let m = sup.len();
        if pi.k() + 1 != ci.k() + di.k() || pi.k() + 1 != m {
            return Err(theorem(format!(
                "block {sup:?}: dim = {}, dims C_i, D_i = {}, {}",
                pi.k(),
                ci.k(),
                di.k()
            )));
        }
        if !pi.is_mds(limits)? {
            return Err(theorem(format!("block {sup:?} of the product is not MDS")));
        }
        let dual = pi.dual();
        let mut g = dual.generator().row(0).to_vec();
        normalize(c.field(), &mut g);
        if g.contains(&0) {
            return Err(theorem(format!("block {sup:?}: duality vector is not invertible")));
        }
        if ci != di.scale(&g)?.dual() {
            return Err(theorem(format!("block {sup:?}: C_i differs from (g_i D_i)^⊥")));
        }
        blocks.push(DualBlock { support: sup.clone(), c: ci, d: di, g });
    }
    if blocks.iter().map(|b| b.c.k()).sum::<usize>() != k || blocks.iter().map(|b| b.d.k()).sum::<usize>() != l {
        return Err(theorem("the codes are not the direct sums of their blocks".into()));
    }
    Ok(PmdsCertificate::Dual { blocks })
}

/// Independent re-check of a certificate against a pair of codes.
pub fn verify_certificate(cert: &PmdsCertificate, c: &LinearCode, d: &LinearCode, limits: &Limits) -> bool {
    if pair_compatible(c, d).is_err() {
        return false;
    }
    let f = c.field();
    let n = c.n();
    match cert {
        PmdsCertificate::Rs { g_c, g_d, alpha } => {
            c.k() >= 1
                && d.k() >= 1
                && rs_code(f, g_c, alpha, c.k()).is_ok_and(|x| x == *c)
                && rs_code(f, g_d, alpha, d.k()).is_ok_and(|x| x == *d)
        }
        PmdsCertificate::DimOne { which } => {
            let (one, other) = match which {
                Which::C => (c, d),
                Which::D => (d, c),
            };
            one.k() == 1
                && one.is_mds(limits).unwrap_or(false)
                && !other.is_zero()
                && other.is_mds(limits).unwrap_or(false)
        }
        PmdsCertificate::Dual { blocks } => {
            let mut seen = vec![false; n];
            for b in blocks {
                if b.support.is_empty() {
                    return false;
                }
                for &j in &b.support {
                    if j >= n || seen[j] {
                        return false;
                    }
                    seen[j] = true;
                }
                let m = b.support.len();
                let ok = b.c.field() == f
                    && b.d.field() == f
                    && b.c.n() == m
                    && b.d.n() == m
                    && b.g.len() == m
                    && b.g.iter().all(|&x| x != 0 && f.is_element(x))
                    && c.restrict(&b.support).is_ok_and(|x| x == b.c)
                    && d.restrict(&b.support).is_ok_and(|x| x == b.d)
                    && b.d.scale(&b.g).is_ok_and(|x| x.dual() == b.c);
                if !ok {
                    return false;
                }
            }
            if !seen.iter().all(|&s| s) {
                return false;
            }
            let parts_c: Vec<(&[usize], &LinearCode)> = blocks.iter().map(|b| (b.support.as_slice(), &b.c)).collect();
            let parts_d: Vec<(&[usize], &LinearCode)> = blocks.iter().map(|b| (b.support.as_slice(), &b.d)).collect();
            LinearCode::embed(f, n, &parts_c).is_ok_and(|x| x == *c)
                && LinearCode::embed(f, n, &parts_d).is_ok_and(|x| x == *d)
        }
    }
}

/// `((gD)^⊥, D)`. `D` must have full support and no word of weight 1, so
/// that both codes have full support.
pub fn make_dual_pair(d: &LinearCode, g: &[u32]) -> Result<(LinearCode, LinearCode)> {
    let f = d.field();
    if g.len() != d.n() {
        return Err(Error::LengthMismatch { expected: d.n(), found: g.len() });
    }
    for &x in g {
        if f.check(x)? == 0 {
            return Err(Error::NonInvertibleMultiplier);
        }
    }
    if d.is_zero() || !d.has_full_support() {
        return Err(Error::NotFullSupport);
    }
    for j in 0..d.n() {
        let mut e = vec![0; d.n()];
        e[j] = 1;
        if d.contains(&e) {
            return Err(Error::PreconditionViolated(format!(
                "D contains the unit vector e_{j}, so its partner vanishes there"
            )));
        }
    }
    Ok((d.scale(g)?.dual(), d.clone()))
}

/// Attempts per restart and restarts for [`make_selfdual`].
const SELFDUAL_ROW_TRIES: usize = 64;
const SELFDUAL_RESTARTS: usize = 256;

/// A self-dual code of length `2 nhalf` of the shape `rowspace([I | A])`
/// with `A A^T = -I`, searched row by row from `seed`.
pub fn make_selfdual(field: &Field, nhalf: usize, seed: u64) -> Result<LinearCode> {
    if nhalf == 0 {
        return Err(Error::InvalidInput("nhalf must be at least 1".into()));
    }
    let f = field;
    let target = f.neg(1);
    let mut rng = random::rng(seed, 0);
    for _ in 0..SELFDUAL_RESTARTS {
        let mut rows: Vec<Vec<u32>> = Vec::with_capacity(nhalf);
        'row: while rows.len() < nhalf {
            let gram = Matrix::from_rows(f, nhalf, &rows)?;
            let free = gram.kernel();
            if free.rows() == 0 {
                break;
            }
            for _ in 0..SELFDUAL_ROW_TRIES * f.q() as usize {
                let coeffs = random::vector(f, free.rows(), &mut rng);
                let v = free.combine_rows(&coeffs);
                if f.dot(&v, &v) == target {
                    rows.push(v);
                    continue 'row;
                }
            }
            break;
        }
        if rows.len() == nhalf {
            let gen: Vec<Vec<u32>> = rows
                .iter()
                .enumerate()
                .map(|(i, a)| {
                    let mut r = vec![0; 2 * nhalf];
                    r[i] = 1;
                    r[nhalf..].copy_from_slice(a);
                    r
                })
                .collect();
            let c = LinearCode::from_rows(f, 2 * nhalf, &gen)?;
            if c.dual() != c {
                return Err(theorem("constructed code is not self-dual".into()));
            }
            return Ok(c);
        }
    }
    Err(Error::SearchExhausted(format!("no self-dual [{}, {nhalf}] code of this shape found over GF({})", 2 * nhalf, f.q())))
}

/// A random code `D` of dimension `l` suitable for [`make_dual_pair`],
/// together with a random invertible multiplier.
pub fn random_dual_pair<R: Rng>(f: &Field, n: usize, l: usize, rng: &mut R) -> (LinearCode, LinearCode) {
    loop {
        let d = random::full_support_code(f, n, l, rng);
        let g = random::invertible(f, n, rng);
        if let Ok(pair) = make_dual_pair(&d, &g) {
            return pair;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random;
    use crate::rs::rs_code;

    fn gf(q: u64) -> Field {
        Field::with_order(q).unwrap()
    }

    #[test]
    fn ratio_serialization() {
        assert_eq!(serde_json::to_string(&Ratio::new(6, 2)).unwrap(), "3");
        assert_eq!(serde_json::to_string(&Ratio::new(4, 6)).unwrap(), "\"2/3\"");
        assert_eq!(serde_json::from_str::<Ratio>("\"4/6\"").unwrap(), Ratio::new(2, 3));
        assert!(serde_json::from_str::<Ratio>("\"4/0\"").is_err());
    }

    #[test]
    fn kneser_examples() {
        let f = gf(3);
        let full = LinearCode::full(&f, 4);
        let r = kneser_check(&full, &full).unwrap();
        assert!(r.holds && r.tight());
        assert_eq!((r.lhs, r.rhs), (4, Ratio::int(4)));
        let one = LinearCode::ones(&f, 4);
        let r = kneser_check(&one, &one).unwrap();
        assert!(r.holds && r.tight());
        assert_eq!(r.lhs, 1);
        assert_eq!(kneser_check(&one, &LinearCode::zero(&f, 4)).unwrap_err(), Error::ZeroCode);
    }

    #[test]
    fn psb_examples() {
        let lim = Limits::default();
        let f = gf(7);
        let alpha: Vec<ProjPoint> = (0..7).map(ProjPoint::Finite).collect();
        let d = rs_code(&f, &[1; 7], &alpha, 3).unwrap();
        let r = psb_check(&[LinearCode::ones(&f, 7), d.clone()], &lim).unwrap();
        assert_eq!((r.lhs, r.rhs), (5, Ratio::int(5)));
        assert!(r.tight());
        // n = k + l + 1 gives d(CD) = 3
        let c = rs_code(&f, &[1; 7], &alpha, 3).unwrap();
        let e = rs_code(&f, &[2; 7], &alpha, 3).unwrap();
        let r = psb_check(&[c, e], &lim).unwrap();
        assert_eq!((r.lhs, r.rhs), (3, Ratio::int(3)));
        let half = LinearCode::from_rows(&f, 7, &[[1u32, 1, 1, 0, 0, 0, 0]]).unwrap();
        assert_eq!(psb_check(&[half.clone(), half], &lim).unwrap_err(), Error::NotFullSupport);
    }

    #[test]
    fn pmds_examples() {
        let lim = Limits::default();
        let f = gf(13);
        let mut r = random::rng(2, 0);
        let alpha = random::points(&f, 10, true, &mut r);
        let c = rs_code(&f, &random::invertible(&f, 10, &mut r), &alpha, 3).unwrap();
        let d = rs_code(&f, &random::invertible(&f, 10, &mut r), &alpha, 4).unwrap();
        assert!(is_pmds(&c, &d, &lim).unwrap());
        assert_eq!(c.schur_product(&d).unwrap().min_distance(&lim).unwrap(), 5);
        let cert = classify_pmds(&c, &d, &lim).unwrap();
        assert_eq!(cert.case(), "rs");
        assert!(verify_certificate(&cert, &c, &d, &lim));
        assert!(!verify_certificate(&cert, &d, &c, &lim));

        let full = LinearCode::full(&f, 5);
        assert!(!is_pmds(&full, &full, &lim).unwrap());
        assert!(matches!(classify_pmds(&full, &full, &lim), Err(Error::NotPmds(_))));
    }

    #[test]
    fn perturbed_alpha_fails_verification() {
        let lim = Limits::default();
        let f = gf(11);
        let alpha: Vec<ProjPoint> = (0..9).map(ProjPoint::Finite).collect();
        let c = rs_code(&f, &[1; 9], &alpha, 2).unwrap();
        let d = rs_code(&f, &[1; 9], &alpha, 3).unwrap();
        let cert = classify_pmds(&c, &d, &lim).unwrap();
        assert!(verify_certificate(&cert, &c, &d, &lim));
        let PmdsCertificate::Rs { g_c, g_d, mut alpha } = cert else { panic!("expected rs case") };
        alpha[4] = ProjPoint::Finite(10);
        let bad = PmdsCertificate::Rs { g_c, g_d, alpha };
        assert!(!verify_certificate(&bad, &c, &d, &lim));
    }

    #[test]
    fn dimension_one_member() {
        let lim = Limits::default();
        let f = gf(7);
        let alpha: Vec<ProjPoint> = (0..6).map(ProjPoint::Finite).collect();
        let c = LinearCode::from_rows(&f, 6, &[[1u32, 2, 3, 4, 5, 6]]).unwrap();
        let d = rs_code(&f, &[1; 6], &alpha, 3).unwrap();
        let cert = classify_pmds(&c, &d, &lim).unwrap();
        assert_eq!(cert, PmdsCertificate::DimOne { which: Which::C });
        assert!(verify_certificate(&cert, &c, &d, &lim));
        assert_eq!(serde_json::to_value(&cert).unwrap(), serde_json::json!({"case": "dim1", "which": "C"}));
    }

    #[test]
    fn dual_pair_single_block() {
        let lim = Limits::default();
        let f = gf(5);
        let mut r = random::rng(9, 0);
        let (c, d) = loop {
            let pair = random_dual_pair(&f, 8, 3, &mut r);
            let p = pair.0.schur_product(&pair.1).unwrap();
            if stabilizer(&p).unwrap().dim() == 1 {
                break pair;
            }
        };
        assert!(is_pmds(&c, &d, &lim).unwrap());
        let cert = classify_pmds(&c, &d, &lim).unwrap();
        let PmdsCertificate::Dual { blocks } = &cert else { panic!("expected dual case") };
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[0].c, d.scale(&blocks[0].g).unwrap().dual());
        assert!(verify_certificate(&cert, &c, &d, &lim));
        let v = serde_json::to_value(&cert).unwrap();
        assert_eq!(v["case"], "dual");
        let back: PmdsCertificate = serde_json::from_value(v).unwrap();
        assert_eq!(back, cert);
    }

    #[test]
    fn dual_pair_two_blocks() {
        let lim = Limits::default();
        let f = gf(5);
        let mut r = random::rng(4, 0);
        let (c1, d1) = random_dual_pair(&f, 4, 2, &mut r);
        let (c2, d2) = random_dual_pair(&f, 5, 2, &mut r);
        let c = c1.direct_sum(&c2).unwrap();
        let d = d1.direct_sum(&d2).unwrap();
        assert!(is_pmds(&c, &d, &lim).unwrap());
        let cert = classify_pmds(&c, &d, &lim).unwrap();
        let PmdsCertificate::Dual { blocks } = &cert else { panic!("expected dual case") };
        assert!(blocks.len() >= 2);
        assert!(verify_certificate(&cert, &c, &d, &lim));
        let mut supports: Vec<usize> = blocks.iter().flat_map(|b| b.support.clone()).collect();
        supports.sort();
        assert_eq!(supports, (0..9).collect::<Vec<_>>());
        assert!(!verify_certificate(&cert, &c, &c, &lim));
    }

    #[test]
    fn make_dual_pair_rejections() {
        let f = gf(3);
        let d = LinearCode::from_rows(&f, 3, &[[1u32, 1, 1]]).unwrap();
        assert_eq!(make_dual_pair(&d, &[1, 0, 1]).unwrap_err(), Error::NonInvertibleMultiplier);
        let partial = LinearCode::from_rows(&f, 3, &[[1u32, 1, 0]]).unwrap();
        assert_eq!(make_dual_pair(&partial, &[1, 1, 1]).unwrap_err(), Error::NotFullSupport);
        let unit = LinearCode::from_rows(&f, 3, &[[1u32, 0, 0], [0, 1, 1]]).unwrap();
        assert!(matches!(make_dual_pair(&unit, &[1, 1, 1]), Err(Error::PreconditionViolated(_))));
        let (c, dd) = make_dual_pair(&d, &[1, 2, 1]).unwrap();
        assert_eq!(c.k(), 2);
        assert_eq!(dd, d);
    }

    #[test]
    fn selfdual_examples() {
        let lim = Limits::default();
        let f2 = gf(2);
        assert_eq!(make_selfdual(&f2, 1, 0).unwrap(), LinearCode::ones(&f2, 2));
        let f = gf(11);
        let c = make_selfdual(&f, 4, 1).unwrap();
        assert_eq!(c.dual(), c);
        assert_eq!(c.k(), 4);
        let sq = c.schur_power(2).unwrap();
        assert_eq!(sq.k() + stabilizer(&sq).unwrap().dim(), 8);
        assert!(is_pmds(&c, &c, &lim).unwrap());
        // GF(3) has no self-dual code of length 2
        assert!(matches!(make_selfdual(&gf(3), 1, 0), Err(Error::SearchExhausted(_))));
    }

    #[test]
    fn bound_report_listing() {
        let lim = Limits::default();
        let f = gf(5);
        let c = LinearCode::from_rows(&f, 4, &[[1u32, 1, 1, 1], [0, 1, 2, 3]]).unwrap();
        let reports = bound_reports(&[c.clone(), c], &lim).unwrap();
        let names: Vec<&str> = reports.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(
            names,
            [
                "singleton",
                "refined_singleton_1",
                "refined_singleton_2",
                "singleton",
                "refined_singleton_1",
                "refined_singleton_2",
                "kneser",
                "product_singleton"
            ]
        );
        assert!(reports.iter().all(|r| r.holds));
    }
}
