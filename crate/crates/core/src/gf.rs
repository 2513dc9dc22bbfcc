//! Exact arithmetic in GF(p^m).
//!
//! Elements are encoded as integers `0..q`: the element with coordinates
//! `c_0, ..., c_{m-1}` in the polynomial basis `1, x, ..., x^{m-1}` is encoded
//! as `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`. Encoding 0 is the additive
//! identity and 1 the multiplicative identity.
//!
//! Fields with at most 256 elements use precomputed log/antilog tables for
//! multiplication and inversion; larger fields fall back to modular or
//! polynomial arithmetic.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest field order accepted.
pub const MAX_ORDER: u64 = 1 << 24;
/// Largest order for which a built-in modulus is derived.
pub const BUILTIN_MODULUS_LIMIT: u64 = 1 << 16;
const TABLE_LIMIT: u32 = 256;

/// A finite field GF(p^m). Cheap to clone; immutable once built.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "FieldDoc", into = "FieldDoc")]
pub struct Field(Arc<Inner>);

struct Inner {
    p: u32,
    m: u32,
    q: u32,
    /// `m + 1` coefficients, constant term first; empty for prime fields.
    modulus: Vec<u32>,
    tables: Option<Tables>,
}

struct Tables {
    exp: Vec<u8>,
    log: Vec<u8>,
    /// Full addition table for extension fields of odd characteristic.
    add: Vec<u8>,
    neg: Vec<u8>,
}

/// JSON form of a field: `{"p": int, "m": int, "modulus": [int, ...]?}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDoc {
    pub p: u64,
    pub m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

impl TryFrom<FieldDoc> for Field {
    type Error = Error;

    fn try_from(doc: FieldDoc) -> Result<Self> {
        Field::new(doc.p, doc.m, doc.modulus.as_deref())
    }
}

impl From<Field> for FieldDoc {
    fn from(f: Field) -> Self {
        FieldDoc {
            p: f.p() as u64,
            m: f.m(),
            modulus: (f.m() > 1).then(|| f.modulus().to_vec()),
        }
    }
}

impl Field {
    /// Builds GF(p^m). When `m > 1` and no modulus is given, the built-in
    /// modulus is the monic irreducible polynomial of degree `m` with the
    /// smallest integer encoding `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`.
    pub fn new(p: u64, m: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if m == 0 {
            return Err(Error::InvalidInput("extension degree must be at least 1".into()));
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(Error::UnsupportedField { p, m })?;
        let p = p as u32;
        let modulus = match (m, modulus) {
            (1, None) => Vec::new(),
            (1, Some(coeffs)) => {
                validate_monic(coeffs, p, 1)?;
                Vec::new()
            }
            (_, Some(coeffs)) => {
                validate_monic(coeffs, p, m)?;
                if !poly_is_irreducible(coeffs, p) {
                    return Err(Error::ReducibleModulus { p });
                }
                coeffs.to_vec()
            }
            (_, None) => {
                if q > BUILTIN_MODULUS_LIMIT {
                    return Err(Error::UnsupportedField { p: p as u64, m });
                }
                builtin_modulus(p, m)
            }
        };
        let mut inner = Inner { p, m, q: q as u32, modulus, tables: None };
        if inner.q <= TABLE_LIMIT {
            inner.tables = Some(Tables::build(&inner));
        }
        Ok(Field(Arc::new(inner)))
    }

    /// Prime field GF(p).
    pub fn prime(p: u64) -> Result<Self> {
        Field::new(p, 1, None)
    }

    /// GF(q) for a prime power `q`, using the built-in modulus.
    pub fn with_order(q: u64) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or(Error::NonPrime(q))?;
        Field::new(p, m, None)
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Modulus coefficients, constant term first; empty for prime fields.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn is_element(&self, v: u32) -> bool {
        v < self.0.q
    }

    pub fn check(&self, v: u32) -> Result<u32> {
        if self.is_element(v) {
            Ok(v)
        } else {
            Err(Error::InvalidElement { value: v as u64, q: self.q() })
        }
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.0.q
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        self.check(value)?;
        Ok(FieldElement { value, field: self.clone() })
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let f = &*self.0;
        if f.p == 2 {
            return a ^ b;
        }
        if f.m == 1 {
            let s = a + b;
            return if s >= f.p { s - f.p } else { s };
        }
        match &f.tables {
            Some(t) => t.add[(a * f.q + b) as usize] as u32,
            None => f.add_slow(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let f = &*self.0;
        if f.p == 2 || a == 0 {
            return a;
        }
        if f.m == 1 {
            return f.p - a;
        }
        match &f.tables {
            Some(t) => t.neg[a as usize] as u32,
            None => f.neg_slow(a),
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let f = &*self.0;
        match &f.tables {
            Some(t) => t.exp[t.log[a as usize] as usize + t.log[b as usize] as usize] as u32,
            None => f.mul_slow(a, b),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let f = &*self.0;
        Some(match &f.tables {
            Some(t) => {
                let l = t.log[a as usize] as usize;
                t.exp[if l == 0 { 0 } else { f.q as usize - 1 - l }] as u32
            }
            None => self.pow(a, f.q as u64 - 2),
        })
    }

    pub fn div(&self, a: u32, b: u32) -> Option<u32> {
        self.inv(b).map(|ib| self.mul(a, ib))
    }

    /// `a^e`, with `a^0 = 1` for every `a` including zero.
    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The smallest encoding whose powers exhaust the non-zero elements.
    pub fn primitive_element(&self) -> u32 {
        match &self.0.tables {
            Some(t) => t.exp[1] as u32,
            None => self.0.find_primitive(),
        }
    }

    /// Inner product `sum_i a_i b_i`.
    pub fn dot(&self, a: &[u32], b: &[u32]) -> u32 {
        a.iter().zip(b).fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }

    fn same(&self, other: &Field) -> bool {
        self == other
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.m == other.0.m && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m() == 1 {
            write!(f, "GF({})", self.p())
        } else {
            write!(f, "GF({}^{}; {:?})", self.p(), self.m(), self.modulus())
        }
    }
}

impl Inner {
    fn digits(&self, mut v: u32) -> Vec<u32> {
        let mut d = vec![0; self.m as usize];
        for c in d.iter_mut() {
            *c = v % self.p;
            v /= self.p;
        }
        d
    }

    fn encode(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn add_slow(&self, a: u32, b: u32) -> u32 {
        if self.m == 1 {
            return (a + b) % self.p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.encode(&sum)
    }

    fn neg_slow(&self, a: u32) -> u32 {
        if self.m == 1 {
            return (self.p - a) % self.p;
        }
        let d: Vec<u32> = self.digits(a).iter().map(|&c| (self.p - c) % self.p).collect();
        self.encode(&d)
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        if self.m == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        let prod = poly_mul(&self.digits(a), &self.digits(b), self.p);
        let mut r = poly_rem(&prod, &self.modulus, self.p);
        r.resize(self.m as usize, 0);
        self.encode(&r)
    }

    fn pow_slow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    fn find_primitive(&self) -> u32 {
        let order = self.q as u64 - 1;
        if order == 1 {
            return 1;
        }
        let factors = prime_factors(order);
        (2..self.q)
            .find(|&g| factors.iter().all(|&r| self.pow_slow(g, order / r) != 1))
            .expect("multiplicative group of a finite field is cyclic")
    }
}

impl Tables {
    fn build(f: &Inner) -> Tables {
        let q = f.q as usize;
        let g = f.find_primitive();
        let mut exp = vec![0u8; 2 * (q - 1).max(1)];
        let mut log = vec![0u8; q];
        let mut x = 1u32;
        for (i, e) in exp.iter_mut().enumerate().take(q - 1) {
            *e = x as u8;
            log[x as usize] = i as u8;
            x = f.mul_slow(x, g);
        }
        for i in q - 1..exp.len() {
            exp[i] = exp[i - (q - 1)];
        }
        let add = if f.m > 1 && f.p != 2 {
            let mut t = vec![0u8; q * q];
            for a in 0..q {
                for b in 0..q {
                    t[a * q + b] = f.add_slow(a as u32, b as u32) as u8;
                }
            }
            t
        } else {
            Vec::new()
        };
        let neg = (0..q as u32).map(|a| f.neg_slow(a) as u8).collect();
        Tables { exp, log, add, neg }
    }
}

/// An element bound to its field; arithmetic across fields is rejected.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    value: u32,
    field: Field,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl FieldElement {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    fn with(&self, value: u32) -> FieldElement {
        FieldElement { value, field: self.field.clone() }
    }

    fn pair(&self, other: &FieldElement) -> Result<()> {
        if self.field.same(&other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.pair(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.pair(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.pair(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.pair(other)?;
        let v = self.field.div(self.value, other.value).ok_or(Error::DivisionByZero)?;
        Ok(self.with(v))
    }

    pub fn neg(&self) -> FieldElement {
        self.with(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        let v = self.field.inv(self.value).ok_or(Error::DivisionByZero)?;
        Ok(self.with(v))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.with(self.field.pow(self.value, e))
    }
}

/// A point of the projective line over a field, used as an evaluation point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProjPoint {
    Finite(u32),
    Infinity,
}

impl ProjPoint {
    /// All `q + 1` points: `0, 1, ..., q-1`, then infinity.
    pub fn all(field: &Field) -> impl Iterator<Item = ProjPoint> {
        field.elements().map(ProjPoint::Finite).chain(std::iter::once(ProjPoint::Infinity))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum PointDoc {
    Finite(u32),
    Named(String),
}

impl Serialize for ProjPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            ProjPoint::Finite(v) => PointDoc::Finite(v),
            ProjPoint::Infinity => PointDoc::Named("inf".into()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ProjPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match PointDoc::deserialize(d)? {
            PointDoc::Finite(v) => Ok(ProjPoint::Finite(v)),
            PointDoc::Named(s) if s == "inf" => Ok(ProjPoint::Infinity),
            PointDoc::Named(s) => Err(serde::de::Error::custom(format!("bad evaluation point {s:?}"))),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Decomposes `q = p^m`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut m = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        m += 1;
    }
    (r == 1).then_some((p, m))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn validate_monic(coeffs: &[u32], p: u32, m: u32) -> Result<()> {
    if coeffs.len() != m as usize + 1 {
        return Err(Error::InvalidModulus(format!(
            "expected {} coefficients, found {}",
            m + 1,
            coeffs.len()
        )));
    }
    if coeffs.iter().any(|&c| c >= p) {
        return Err(Error::InvalidModulus(format!("coefficients must lie in [0, {p})")));
    }
    if coeffs[m as usize] != 1 {
        return Err(Error::InvalidModulus("modulus must be monic".into()));
    }
    Ok(())
}

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap() as u64;
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            let idx = shift + i;
            r[idx] = ((r[idx] as u64 + (p as u64 - lead) * c as u64) % p as u64) as u32;
        }
        r = trim(r);
    }
    r
}

/// Monic polynomial of the given degree whose lower coefficients are the
/// base-p digits of `index`.
fn monic_from_index(mut index: u64, degree: u32, p: u32) -> Vec<u32> {
    let mut c = Vec::with_capacity(degree as usize + 1);
    for _ in 0..degree {
        c.push((index % p as u64) as u32);
        index /= p as u64;
    }
    c.push(1);
    c
}

/// Trial division by every monic polynomial of degree at most half.
fn poly_is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() as u32 - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        for idx in 0..(p as u64).pow(d) {
            let g = monic_from_index(idx, d, p);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn builtin_modulus(p: u32, m: u32) -> Vec<u32> {
    (0..(p as u64).pow(m))
        .map(|idx| monic_from_index(idx, m, p))
        .find(|f| poly_is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}
