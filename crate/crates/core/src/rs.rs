//! Generalized and extended Reed-Solomon codes: construction, recognition
//! and recovery of multiplier and evaluation-point certificates.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::{Limits, LinearCode};
use crate::error::{Error, Result};
use crate::gf::{Field, ProjPoint};
use crate::linalg::{projective_coefficients, Matrix};

/// `C = {(g_1 f(a_1), ..., g_n f(a_n)) : deg f < k}`, with `f(inf)` the
/// coefficient of `X^(k-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RsCertificate {
    pub k: usize,
    pub g: Vec<u32>,
    pub alpha: Vec<ProjPoint>,
}

impl RsCertificate {
    pub fn code(&self, field: &Field) -> Result<LinearCode> {
        rs_code(field, &self.g, &self.alpha, self.k)
    }

    /// Whether the certificate describes exactly `c`.
    pub fn reconstructs(&self, c: &LinearCode) -> bool {
        self.g.len() == c.n() && self.code(c.field()).is_ok_and(|r| r == *c)
    }
}

/// Multipliers and evaluation points shared by two codes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommonEvaluation {
    pub g_c: Vec<u32>,
    pub g_d: Vec<u32>,
    pub alpha: Vec<ProjPoint>,
}

fn check_points(field: &Field, alpha: &[ProjPoint]) -> Result<()> {
    for p in alpha {
        if let ProjPoint::Finite(v) = *p {
            field.check(v)?;
        }
    }
    Ok(())
}

fn distinct(alpha: &[ProjPoint]) -> bool {
    let mut s = alpha.to_vec();
    s.sort_unstable();
    s.windows(2).all(|w| w[0] != w[1])
}

/// The `k x n` generalized Vandermonde matrix.
pub fn vandermonde(field: &Field, k: usize, alpha: &[ProjPoint]) -> Result<Matrix> {
    if k == 0 {
        return Err(Error::PreconditionViolated("Vandermonde height must be at least 1".into()));
    }
    check_points(field, alpha)?;
    let n = alpha.len();
    let mut m = Matrix::zeros(field, k, n);
    for (j, p) in alpha.iter().enumerate() {
        match *p {
            ProjPoint::Finite(a) => {
                let mut x = 1;
                for i in 0..k {
                    m.set(i, j, x);
                    x = field.mul(x, a);
                }
            }
            ProjPoint::Infinity => m.set(k - 1, j, 1),
        }
    }
    Ok(m)
}

pub fn rs_code(field: &Field, g: &[u32], alpha: &[ProjPoint], k: usize) -> Result<LinearCode> {
    let n = alpha.len();
    if g.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: g.len() });
    }
    if n > field.q() as usize + 1 {
        return Err(Error::LengthExceedsQPlus1 { n, q: field.q() });
    }
    for &x in g {
        if field.check(x)? == 0 {
            return Err(Error::NonInvertibleMultiplier);
        }
    }
    check_points(field, alpha)?;
    if !distinct(alpha) {
        return Err(Error::RepeatedEvaluationPoint);
    }
    if k == 0 || k > n {
        return Err(Error::PreconditionViolated(format!("dimension {k} outside 1..={n}")));
    }
    LinearCode::from_matrix(&vandermonde(field, k, alpha)?).scale(g)
}

/// `dim C^2 = 2k - 1` for an MDS code with `2 <= k <= (n-1)/2`.
pub fn rs_square_test(c: &LinearCode, limits: &Limits) -> Result<bool> {
    let (n, k) = (c.n(), c.k());
    if k < 2 || 2 * k + 1 > n {
        return Err(Error::PreconditionViolated(format!("need 2 <= k <= (n-1)/2, got k = {k}, n = {n}")));
    }
    if !c.is_mds(limits)? {
        return Err(Error::PreconditionViolated("code is not MDS".into()));
    }
    Ok(c.schur_power(2)?.k() == 2 * k - 1)
}

fn invert_all(f: &Field, h: &[u32]) -> Option<Vec<u32>> {
    h.iter().map(|&x| f.inv(x)).collect()
}

/// Normalizes a vector so its first non-zero entry is 1.
pub fn normalize(f: &Field, v: &mut [u32]) {
    if let Some(&lead) = v.iter().find(|&&x| x != 0) {
        let inv = f.inv(lead).expect("non-zero");
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
    }
}

/// An invertible `g` with `C = gR`, searched among the `h` satisfying
/// `hC ⊆ R`, which form the dual of `C R^⊥`. The answer is normalized to
/// start with 1.
pub fn diagonal_equivalence(c: &LinearCode, r: &LinearCode, limits: &Limits) -> Result<Option<Vec<u32>>> {
    if c.field() != r.field() {
        return Err(Error::FieldMismatch);
    }
    if c.n() != r.n() {
        return Err(Error::LengthMismatch { expected: c.n(), found: r.n() });
    }
    if c.k() != r.k() {
        return Ok(None);
    }
    let f = c.field();
    let sols = c.schur_product(&r.dual())?.dual();
    if sols.k() > limits.ambiguity_dim {
        return Err(Error::AmbiguousSolutionSpace { dim: sols.k(), limit: limits.ambiguity_dim });
    }
    for coeffs in projective_coefficients(f, sols.k()) {
        let h = sols.encode(&coeffs);
        let Some(mut g) = invert_all(f, &h) else { continue };
        if c.scale(&h)? == *r {
            normalize(f, &mut g);
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// Evaluation points read off a two-dimensional MDS code: with rows `r1, r2`
/// chosen to have as few zeros as possible, `a_j = r2_j / r1_j`, and
/// infinity where `r1_j = 0`.
pub fn line_points(a: &LinearCode) -> Result<Vec<ProjPoint>> {
    if a.k() != 2 {
        return Err(Error::HypothesesUnmet(format!("line code has dimension {}, expected 2", a.k())));
    }
    let f = a.field();
    let zeros = |v: &[u32]| v.iter().filter(|&&x| x == 0).count();
    let words: Vec<Vec<u32>> = projective_coefficients(f, 2).map(|c| a.encode(&c)).collect();
    let first = (0..words.len()).min_by_key(|&i| zeros(&words[i])).unwrap();
    let second = (0..words.len()).filter(|&i| i != first).min_by_key(|&i| zeros(&words[i])).unwrap();
    let (r1, r2) = (&words[first], &words[second]);
    let mut alpha = Vec::with_capacity(a.n());
    for j in 0..a.n() {
        alpha.push(match (r1[j], r2[j]) {
            (0, 0) => return Err(Error::HypothesesUnmet("line code lacks full support".into())),
            (0, _) => ProjPoint::Infinity,
            (x, y) => ProjPoint::Finite(f.div(y, x).unwrap()),
        });
    }
    if !distinct(&alpha) {
        return Err(Error::HypothesesUnmet("line code is not MDS".into()));
    }
    Ok(alpha)
}

fn has_weight_one_word(c: &LinearCode) -> bool {
    (0..c.n()).any(|j| {
        let mut e = vec![0; c.n()];
        e[j] = 1;
        c.contains(&e)
    })
}

/// Recovers `C = g V_k(a)` from a two-dimensional MDS code `A` with
/// `dim AC = dim C + 1 <= n - 1`; the evaluation points come from `A`.
pub fn recover_with_line(a: &LinearCode, c: &LinearCode, limits: &Limits) -> Result<RsCertificate> {
    let n = c.n();
    if a.k() != 2 || !a.is_mds(limits)? {
        return Err(Error::HypothesesUnmet("A must be a two-dimensional MDS code".into()));
    }
    if c.is_zero() || !c.has_full_support() {
        return Err(Error::HypothesesUnmet("C must be non-zero with full support".into()));
    }
    if has_weight_one_word(c) {
        return Err(Error::HypothesesUnmet("C has minimum distance 1".into()));
    }
    let ac = a.schur_product(c)?.k();
    if ac != c.k() + 1 || ac + 1 > n {
        return Err(Error::HypothesesUnmet(format!("dim AC = {ac}, need dim C + 1 = {} <= n - 1", c.k() + 1)));
    }
    let alpha = line_points(a)?;
    let base = LinearCode::from_matrix(&vandermonde(c.field(), c.k(), &alpha)?);
    let g = diagonal_equivalence(c, &base, limits)?
        .ok_or_else(|| Error::RecoveryFailed("no multiplier maps the Vandermonde code onto C".into()))?;
    let cert = RsCertificate { k: c.k(), g, alpha };
    if !cert.reconstructs(c) {
        return Err(Error::RecoveryFailed("certificate does not reconstruct C".into()));
    }
    Ok(cert)
}

/// The generator of `c` whose columns on `coords` equal `target`.
fn matched_generator(c: &LinearCode, coords: &[usize], target: &Matrix) -> Result<Matrix> {
    let k = c.k();
    let local = c.generator().select_cols(coords).rref();
    if local.rank != k {
        return Err(Error::PatternViolation("projection onto the known coordinates is not injective".into()));
    }
    let info: Vec<usize> = local.pivots.iter().map(|&p| coords[p]).collect();
    let sys = c
        .systematic_generator(&info)?
        .ok_or_else(|| Error::InternalTheoremViolation("pivot columns must be independent".into()))?;
    let gen = target.select_cols(&local.pivots).mul(&sys)?;
    if gen.select_cols(coords) != *target {
        return Err(Error::PatternViolation("known coordinates are not Reed-Solomon for this code".into()));
    }
    Ok(gen)
}

/// Reads `(a_j, scale)` from a column of `c V_k` shape, relative to a point.
fn column_scale(col: &[u32], point: ProjPoint, f: &Field) -> Option<u32> {
    match point {
        ProjPoint::Finite(b) => {
            let s = col[0];
            let mut x = s;
            for &v in col {
                if v != x {
                    return None;
                }
                x = f.mul(x, b);
            }
            (s != 0).then_some(s)
        }
        ProjPoint::Infinity => {
            let (last, rest) = col.split_last()?;
            (rest.iter().all(|&v| v == 0) && *last != 0).then_some(*last)
        }
    }
}

/// Extends Reed-Solomon descriptions of `C` and `D` on the coordinates
/// `coords` (with multipliers `g_c`, `g_d` and points `alpha` on those
/// coordinates) to all of `F^n`.
pub fn extend_evaluation(
    c: &LinearCode,
    d: &LinearCode,
    coords: &[usize],
    g_c: &[u32],
    g_d: &[u32],
    alpha: &[ProjPoint],
) -> Result<CommonEvaluation> {
    let f = c.field();
    let n = c.n();
    if d.field() != f {
        return Err(Error::FieldMismatch);
    }
    if d.n() != n {
        return Err(Error::LengthMismatch { expected: n, found: d.n() });
    }
    for len in [g_c.len(), g_d.len(), alpha.len()] {
        if len != coords.len() {
            return Err(Error::LengthMismatch { expected: coords.len(), found: len });
        }
    }
    if let Some(&j) = coords.iter().find(|&&j| j >= n) {
        return Err(Error::IndexOutOfRange { index: j, len: n });
    }
    let (k, l) = (c.k(), d.k());
    if k == 0 || l == 0 || k.max(l) < 2 {
        return Err(Error::PreconditionViolated("evaluation points need a code of dimension at least 2".into()));
    }
    let target_c = scaled_vandermonde(f, k, alpha, g_c)?;
    let target_d = scaled_vandermonde(f, l, alpha, g_d)?;
    let gen_c = matched_generator(c, coords, &target_c)?;
    let gen_d = matched_generator(d, coords, &target_d)?;

    let mut out_alpha = vec![ProjPoint::Infinity; n];
    let mut out_gc = vec![0; n];
    let mut out_gd = vec![0; n];
    for (t, &j) in coords.iter().enumerate() {
        out_alpha[j] = alpha[t];
        out_gc[j] = g_c[t];
        out_gd[j] = g_d[t];
    }
    for j in (0..n).filter(|j| !coords.contains(j)) {
        let pi = gen_c.column(j);
        let rho = gen_d.column(j);
        let lead = if pi.len() >= rho.len() { &pi } else { &rho };
        let point = if lead[0] != 0 {
            ProjPoint::Finite(f.div(lead[1], lead[0]).unwrap())
        } else {
            ProjPoint::Infinity
        };
        match (column_scale(&pi, point, f), column_scale(&rho, point, f)) {
            (Some(a), Some(b)) => {
                out_alpha[j] = point;
                out_gc[j] = a;
                out_gd[j] = b;
            }
            _ => return Err(Error::PatternViolation(format!("column {j} is not a Vandermonde column"))),
        }
    }
    if !distinct(&out_alpha) {
        return Err(Error::DuplicateEvaluationPoint);
    }
    let ev = CommonEvaluation { g_c: out_gc, g_d: out_gd, alpha: out_alpha };
    if rs_code(f, &ev.g_c, &ev.alpha, k)? != *c || rs_code(f, &ev.g_d, &ev.alpha, l)? != *d {
        return Err(Error::PatternViolation("extended description does not reconstruct the codes".into()));
    }
    Ok(ev)
}

fn scaled_vandermonde(f: &Field, k: usize, alpha: &[ProjPoint], g: &[u32]) -> Result<Matrix> {
    let mut m = vandermonde(f, k, alpha)?;
    for i in 0..k {
        for (j, &gj) in g.iter().enumerate() {
            m.set(i, j, f.mul(m.get(i, j), gj));
        }
    }
    Ok(m)
}

fn first_points(f: &Field, n: usize) -> Vec<ProjPoint> {
    ProjPoint::all(f).take(n).collect()
}

fn certify(c: &LinearCode, alpha: Vec<ProjPoint>, limits: &Limits) -> Result<Option<RsCertificate>> {
    let base = LinearCode::from_matrix(&vandermonde(c.field(), c.k(), &alpha)?);
    Ok(diagonal_equivalence(c, &base, limits)?.map(|g| RsCertificate { k: c.k(), g, alpha }))
}

fn theorem(msg: &str) -> Error {
    Error::InternalTheoremViolation(msg.into())
}

/// Decides whether `c` is a (generalized, possibly extended) Reed-Solomon
/// code, returning a verified certificate when it is.
pub fn recover_rs(c: &LinearCode, limits: &Limits) -> Result<Option<RsCertificate>> {
    let cert = recover_unchecked(c, limits)?;
    if let Some(cert) = &cert {
        if !cert.reconstructs(c) {
            return Err(theorem("Reed-Solomon certificate fails reconstruction"));
        }
    }
    Ok(cert)
}

/// Whether `c` is a Reed-Solomon code.
pub fn is_rs(c: &LinearCode, limits: &Limits) -> Result<bool> {
    Ok(recover_rs(c, limits)?.is_some())
}

fn recover_unchecked(c: &LinearCode, limits: &Limits) -> Result<Option<RsCertificate>> {
    let f = c.field();
    let (n, k) = (c.n(), c.k());
    if k == 0 {
        return Err(Error::PreconditionViolated("the zero code has no Reed-Solomon description".into()));
    }
    if n > f.q() as usize + 1 {
        return Ok(None);
    }
    if k == n {
        return Ok(Some(RsCertificate { k, g: vec![1; n], alpha: first_points(f, n) }));
    }
    if k == 1 {
        let g = c.generator().row(0).to_vec();
        return Ok(g.iter().all(|&x| x != 0).then(|| RsCertificate { k, g, alpha: first_points(f, n) }));
    }
    if !c.is_mds(limits)? {
        return Ok(None);
    }
    if k == 2 {
        let alpha = line_points(c)?;
        return certify(c, alpha, limits)?.map(Some).ok_or_else(|| theorem("two-dimensional MDS code is not Reed-Solomon"));
    }
    if 2 * k < n {
        if c.schur_power(2)?.k() != 2 * k - 1 {
            return Ok(None);
        }
        let coords: Vec<usize> = (0..2 * k + 1).collect();
        let c0 = c.restrict(&coords)?;
        let a = c0.schur_power(2)?.dual();
        let local = recover_with_line(&a, &c0, limits).map_err(|e| theorem(&format!("square test passed but {e}")))?;
        let ev = extend_evaluation(c, c, &coords, &local.g, &local.g, &local.alpha)
            .map_err(|e| theorem(&format!("square test passed but {e}")))?;
        return Ok(Some(RsCertificate { k, g: ev.g_c, alpha: ev.alpha }));
    }
    if 2 * k > n {
        let Some(dual) = recover_unchecked(&c.dual(), limits)? else {
            return Ok(None);
        };
        return certify(c, dual.alpha, limits)?.map(Some).ok_or_else(|| theorem("dual of a Reed-Solomon code shares its points"));
    }
    // 2k = n: the square no longer decides; recover the points of a shortening
    // and try every unused point at the last coordinate.
    let Some(short) = recover_unchecked(&c.shorten(&[n - 1])?, limits)? else {
        return Ok(None);
    };
    let candidates: Vec<ProjPoint> = ProjPoint::all(f).filter(|p| !short.alpha.contains(p)).collect();
    let found = candidates
        .par_iter()
        .map(|&p| {
            let mut alpha = short.alpha.clone();
            alpha.push(p);
            certify(c, alpha, limits)
        })
        .find_first(|r| !matches!(r, Ok(None)));
    found.transpose().map(Option::flatten)
}

/// Common multipliers and points for an MDS pair with
/// `dim CD = k + l - 1 <= n - 2` and `k, l >= 2`.
pub fn recover_common_evaluation(c: &LinearCode, d: &LinearCode, limits: &Limits) -> Result<CommonEvaluation> {
    if c.field() != d.field() {
        return Err(Error::FieldMismatch);
    }
    if c.n() != d.n() {
        return Err(Error::LengthMismatch { expected: c.n(), found: d.n() });
    }
    let (n, k, l) = (c.n(), c.k(), d.k());
    if k < 2 || l < 2 {
        return Err(Error::HypothesesUnmet("both codes need dimension at least 2".into()));
    }
    if !c.is_mds(limits)? || !d.is_mds(limits)? {
        return Err(Error::HypothesesUnmet("both codes must be MDS".into()));
    }
    let cd = c.schur_product(d)?.k();
    if cd != k + l - 1 || cd + 2 > n {
        return Err(Error::HypothesesUnmet(format!("dim CD = {cd}, need k + l - 1 = {} <= n - 2", k + l - 1)));
    }
    let coords: Vec<usize> = (0..k + l + 1).collect();
    let c0 = c.restrict(&coords)?;
    let d0 = d.restrict(&coords)?;
    let a = c0.schur_product(&d0)?.dual();
    let failed = |e: Error| match e {
        Error::BudgetExceeded { .. } => e,
        other => Error::RecoveryFailed(other.to_string()),
    };
    let lc = recover_with_line(&a, &c0, limits).map_err(failed)?;
    let ld = recover_with_line(&a, &d0, limits).map_err(failed)?;
    if lc.alpha != ld.alpha {
        return Err(Error::RecoveryFailed("the two codes read different points".into()));
    }
    extend_evaluation(c, d, &coords, &lc.g, &ld.g, &lc.alpha).map_err(failed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random;
    use rand::Rng;
    use ProjPoint::{Finite as P, Infinity as Inf};

    fn gf(q: u64) -> Field {
        Field::with_order(q).unwrap()
    }

    fn pts(v: &[i64]) -> Vec<ProjPoint> {
        v.iter().map(|&x| if x < 0 { Inf } else { P(x as u32) }).collect()
    }

    #[test]
    fn vandermonde_examples() {
        let f = gf(3);
        assert_eq!(vandermonde(&f, 1, &pts(&[0, 1, -1])).unwrap().to_rows(), vec![vec![1, 1, 1]]);
        assert_eq!(vandermonde(&f, 2, &pts(&[0, 1, -1])).unwrap().to_rows(), vec![vec![1, 1, 0], vec![0, 1, 1]]);
        let f5 = gf(5);
        let v = vandermonde(&f5, 3, &pts(&[0, 1, 2, 3, 4])).unwrap();
        assert_eq!(v.rank(), 3);
        assert_eq!(v.row(2), &[0, 1, 4, 4, 1]);
        assert!(vandermonde(&f5, 0, &pts(&[0])).is_err());
        assert!(vandermonde(&f5, 2, &pts(&[9])).is_err());
    }

    #[test]
    fn rs_code_examples() {
        let lim = Limits::default();
        let f = gf(5);
        let a = pts(&[0, 1, 2, 3]);
        assert_eq!(rs_code(&f, &[1; 4], &a, 4).unwrap(), LinearCode::full(&f, 4));
        assert_eq!(rs_code(&f, &[1; 4], &a, 1).unwrap(), LinearCode::ones(&f, 4));
        let c = rs_code(&f, &[1; 4], &a, 2).unwrap();
        assert!(c.is_mds(&lim).unwrap());
        assert_eq!(c.min_distance(&lim).unwrap(), 3);
        assert_eq!(rs_code(&f, &[1; 4], &pts(&[0, 1, 1, 3]), 2).unwrap_err(), Error::RepeatedEvaluationPoint);
        assert_eq!(rs_code(&f, &[1, 0, 1, 1], &a, 2).unwrap_err(), Error::NonInvertibleMultiplier);
        assert_eq!(
            rs_code(&f, &[1; 7], &pts(&[0, 1, 2, 3, 4, -1, 0]), 2).unwrap_err(),
            Error::LengthExceedsQPlus1 { n: 7, q: 5 }
        );
    }

    #[test]
    fn square_test_examples() {
        let lim = Limits::default();
        let f = gf(7);
        let c = rs_code(&f, &[1, 2, 3, 4, 5, 6], &pts(&[0, 1, 2, 3, 4, -1]), 2).unwrap();
        assert!(rs_square_test(&c, &lim).unwrap());
        assert_eq!(c.schur_power(2).unwrap().k(), 3);
        let one = LinearCode::ones(&f, 6);
        assert!(matches!(rs_square_test(&one, &lim), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn non_rs_mds_fails_square_test() {
        // A random [8,3] MDS code over GF(11) whose square has dimension 6.
        let lim = Limits::default();
        let f = gf(11);
        let mut r = random::rng(11, 0);
        let witness = loop {
            let c = random::code_of_dim(&f, 8, 3, &mut r);
            if c.is_mds(&lim).unwrap() && c.schur_power(2).unwrap().k() == 6 {
                break c;
            }
        };
        assert!(!rs_square_test(&witness, &lim).unwrap());
        assert_eq!(recover_rs(&witness, &lim).unwrap(), None);
    }

    #[test]
    fn diagonal_equivalence_examples() {
        let lim = Limits::default();
        let f = gf(7);
        let r = rs_code(&f, &[1; 6], &pts(&[0, 1, 2, 3, 4, 5]), 3).unwrap();
        assert_eq!(diagonal_equivalence(&r, &r, &lim).unwrap(), Some(vec![1; 6]));
        let g0 = vec![3, 1, 4, 1, 5, 2];
        let c = r.scale(&g0).unwrap();
        let g = diagonal_equivalence(&c, &r, &lim).unwrap().unwrap();
        assert_eq!(r.scale(&g).unwrap(), c);
        // a code with a weight-2 word is not equivalent to an MDS code of the same size
        let other = LinearCode::from_rows(&f, 6, &[[1u32, 1, 0, 0, 0, 0], [0, 0, 1, 1, 1, 1], [0, 0, 0, 1, 2, 3]]).unwrap();
        assert_eq!(diagonal_equivalence(&other, &r, &lim).unwrap(), None);
        assert_eq!(diagonal_equivalence(&LinearCode::ones(&f, 6), &r, &lim).unwrap(), None);
        let amb = LinearCode::full(&f, 6);
        assert!(matches!(diagonal_equivalence(&amb, &amb, &lim), Err(Error::AmbiguousSolutionSpace { dim: 6, limit: 3 })));
    }

    #[test]
    fn recover_with_line_examples() {
        let lim = Limits::default();
        let f = gf(7);
        let alpha = pts(&[0, 1, 2, 3, 4, -1]);
        let a = rs_code(&f, &[1; 6], &alpha, 2).unwrap();
        let c = rs_code(&f, &[2, 3, 1, 5, 6, 4], &alpha, 3).unwrap();
        let cert = recover_with_line(&a, &c, &lim).unwrap();
        assert!(cert.reconstructs(&c));
        let weight_one = LinearCode::from_rows(&f, 6, &[[1u32, 0, 0, 0, 0, 0], [0, 1, 1, 1, 1, 1]]).unwrap();
        assert!(matches!(recover_with_line(&a, &weight_one, &lim), Err(Error::HypothesesUnmet(_))));
        assert!(matches!(recover_with_line(&c, &c, &lim), Err(Error::HypothesesUnmet(_))));
    }

    #[test]
    fn extend_evaluation_examples() {
        let f = gf(13);
        let alpha = pts(&[3, 1, 4, 0, 5, 9, 2, 6, -1, 8]);
        let g = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10];
        let h = [5, 5, 2, 7, 1, 12, 3, 3, 9, 4];
        let c = rs_code(&f, &g, &alpha, 3).unwrap();
        let d = rs_code(&f, &h, &alpha, 4).unwrap();
        let coords: Vec<usize> = (0..8).collect();
        let ev = extend_evaluation(&c, &d, &coords, &g[..8], &h[..8], &alpha[..8]).unwrap();
        assert_eq!(ev.alpha, alpha);
        assert_eq!(ev.g_c, g);
        assert_eq!(ev.g_d, h);
        let ev = extend_evaluation(&c, &c, &coords, &g[..8], &g[..8], &alpha[..8]).unwrap();
        assert_eq!(rs_code(&f, &ev.g_c, &ev.alpha, 3).unwrap(), c);

        // replace the last column of C by a non-Vandermonde column
        let mut rows = c.generator().to_rows();
        rows[0][9] = f.add(rows[0][9], 1);
        let bad = LinearCode::from_rows(&f, 10, &rows).unwrap();
        let err = extend_evaluation(&bad, &d, &coords, &g[..8], &h[..8], &alpha[..8]).unwrap_err();
        assert!(matches!(err, Error::PatternViolation(_) | Error::DuplicateEvaluationPoint));
    }

    #[test]
    fn recover_rs_round_trips() {
        let lim = Limits::default();
        let mut r = random::rng(7, 0);
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17] {
            let f = gf(q);
            for _ in 0..12 {
                let n = r.random_range(1..=(q as usize + 1).min(12));
                let k = r.random_range(1..=n);
                let alpha = random::points(&f, n, true, &mut r);
                let g = random::invertible(&f, n, &mut r);
                let c = rs_code(&f, &g, &alpha, k).unwrap();
                match recover_rs(&c, &lim) {
                    Ok(Some(cert)) => assert!(cert.reconstructs(&c)),
                    other => panic!("q={q} n={n} k={k}: {other:?}"),
                }
            }
        }
    }

    #[test]
    fn recover_rs_rejections() {
        let lim = Limits::default();
        let f = gf(5);
        let bad = LinearCode::from_rows(&f, 4, &[[1u32, 1, 0, 0], [0, 0, 1, 1]]).unwrap();
        assert_eq!(recover_rs(&bad, &lim).unwrap(), None);
        assert_eq!(recover_rs(&LinearCode::full(&f, 7), &lim).unwrap(), None);
        assert_eq!(recover_rs(&LinearCode::from_rows(&f, 3, &[[1u32, 0, 1]]).unwrap(), &lim).unwrap(), None);
        assert!(recover_rs(&LinearCode::zero(&f, 3), &lim).is_err());
    }

    #[test]
    fn common_evaluation_examples() {
        let lim = Limits::default();
        let f = gf(13);
        let mut r = random::rng(3, 0);
        let alpha = random::points(&f, 10, true, &mut r);
        let c = rs_code(&f, &random::invertible(&f, 10, &mut r), &alpha, 3).unwrap();
        let d = rs_code(&f, &random::invertible(&f, 10, &mut r), &alpha, 4).unwrap();
        let ev = recover_common_evaluation(&c, &d, &lim).unwrap();
        assert_eq!(rs_code(&f, &ev.g_c, &ev.alpha, 3).unwrap(), c);
        assert_eq!(rs_code(&f, &ev.g_d, &ev.alpha, 4).unwrap(), d);

        let beta = random::points(&f, 10, false, &mut r);
        let e = rs_code(&f, &[1; 10], &beta, 4).unwrap();
        assert!(c.schur_product(&e).unwrap().k() > 6);
        assert!(matches!(recover_common_evaluation(&c, &e, &lim), Err(Error::HypothesesUnmet(_))));
        let one = LinearCode::ones(&f, 10);
        assert!(matches!(recover_common_evaluation(&one, &d, &lim), Err(Error::HypothesesUnmet(_))));
    }

    #[test]
    fn certificate_json() {
        let cert = RsCertificate { k: 2, g: vec![1, 2, 3], alpha: pts(&[0, 4, -1]) };
        let s = serde_json::to_string(&cert).unwrap();
        assert_eq!(s, r#"{"k":2,"g":[1,2,3],"alpha":[0,4,"inf"]}"#);
        assert_eq!(serde_json::from_str::<RsCertificate>(&s).unwrap(), cert);
    }
}
