//! Exact arithmetic over small finite fields GF(p^k) and over
//! arbitrary-precision rationals.
//!
//! Finite fields are capped at order 2^16 so that discrete-log tables fit in
//! memory; multiplication and inversion then cost one table lookup each.
//! Elements of GF(p^k) are encoded canonically as the base-p digit vector of
//! the residue polynomial packed into an integer, so `0..order` enumerates the
//! field and serialization is deterministic. The rational field uses
//! always-reduced `BigRational` fractions.
//!
//! Field handles are immutable after construction and cheap to clone; all
//! operations are pure, so handles can be shared freely across threads.

use std::fmt;
use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

pub const MAX_FINITE_ORDER: u32 = 1 << 16;

/// Description of a field, as used in configs and serialized headers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldSpec {
    Prime { p: u32 },
    /// Extension field GF(p^k), k >= 2, with a monic irreducible modulus of
    /// degree k given by its k+1 coefficients, constant term first.
    PrimePower { p: u32, k: u32, modulus: Vec<u32> },
    Rational,
}

impl FieldSpec {
    /// Compact descriptor: `gf2`, `gf3`, `gf(p^k;c0-c1-...-ck)`, `q`.
    /// Modulus coefficients are dash-separated so descriptors stay free of
    /// commas and survive CSV columns and comma-separated config lists.
    pub fn descriptor(&self) -> String {
        match self {
            FieldSpec::Prime { p } => format!("gf{p}"),
            FieldSpec::PrimePower { p, k, modulus } => {
                let coeffs: Vec<String> = modulus.iter().map(|c| c.to_string()).collect();
                format!("gf({p}^{k};{})", coeffs.join("-"))
            }
            FieldSpec::Rational => "q".to_string(),
        }
    }

    pub fn parse(s: &str) -> Result<FieldSpec> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rational);
        }
        if let Some(rest) = s.strip_prefix("gf(") {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::Parse(format!("unterminated field descriptor `{s}`")))?;
            let (pk, coeffs) = inner
                .split_once(';')
                .ok_or_else(|| Error::Parse(format!("missing modulus in `{s}`")))?;
            let (p, k) = pk
                .split_once('^')
                .ok_or_else(|| Error::Parse(format!("expected p^k in `{s}`")))?;
            let p: u32 = p
                .parse()
                .map_err(|_| Error::Parse(format!("bad characteristic in `{s}`")))?;
            let k: u32 = k
                .parse()
                .map_err(|_| Error::Parse(format!("bad extension degree in `{s}`")))?;
            let modulus = coeffs
                .split('-')
                .map(|c| {
                    c.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad modulus coefficient `{c}`")))
                })
                .collect::<Result<Vec<u32>>>()?;
            return Ok(FieldSpec::PrimePower { p, k, modulus });
        }
        if let Some(p) = s.strip_prefix("gf") {
            let p: u32 = p
                .parse()
                .map_err(|_| Error::Parse(format!("bad field descriptor `{s}`")))?;
            return Ok(FieldSpec::Prime { p });
        }
        Err(Error::Parse(format!("unrecognized field descriptor `{s}`")))
    }
}

/// A field element in canonical form.
///
/// Finite-field elements are the packed base-p digit encoding, always
/// `< order`; rational elements are reduced fractions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElem {
    Fin(u16),
    Rat(BigRational),
}

impl FieldElem {
    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Fin(v) => *v == 0,
            FieldElem::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Fin(v) => *v == 1,
            FieldElem::Rat(r) => r.is_one(),
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Fin(v) => write!(f, "{v}"),
            FieldElem::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

/// Immutable field handle; clones share the underlying tables.
#[derive(Clone)]
pub struct Field(Arc<FieldRepr>);

enum FieldRepr {
    Finite(FiniteField),
    Rational,
}

pub(crate) struct FiniteField {
    spec: FieldSpec,
    p: u32,
    k: u32,
    order: u32,
    /// log[a] for a in 1..order; log[0] is unused.
    log: Vec<u16>,
    /// exp[i] for i in 0..2*(order-1), doubled so products avoid a mod.
    exp: Vec<u16>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.spec().descriptor())
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.spec() == other.spec()
    }
}
impl Eq for Field {}

impl Field {
    /// Builds a field from its spec, checking primality, the order cap and
    /// modulus irreducibility.
    pub fn new(spec: FieldSpec) -> Result<Field> {
        match &spec {
            FieldSpec::Rational => Ok(Field(Arc::new(FieldRepr::Rational))),
            FieldSpec::Prime { p } => {
                check_prime(*p)?;
                if *p as u64 > MAX_FINITE_ORDER as u64 {
                    return Err(Error::InvalidField(format!("order {p} exceeds 2^16")));
                }
                let ff = FiniteField::build(spec.clone(), *p, 1, vec![])?;
                Ok(Field(Arc::new(FieldRepr::Finite(ff))))
            }
            FieldSpec::PrimePower { p, k, modulus } => {
                check_prime(*p)?;
                if *k < 2 {
                    return Err(Error::InvalidField(
                        "extension degree must be >= 2; use the prime kind for k = 1".into(),
                    ));
                }
                let mut order: u64 = 1;
                for _ in 0..*k {
                    order *= *p as u64;
                    if order > MAX_FINITE_ORDER as u64 {
                        return Err(Error::InvalidField(format!(
                            "order {p}^{k} exceeds 2^16"
                        )));
                    }
                }
                let modulus = normalize_modulus(modulus, *p, *k)?;
                if !is_irreducible(&modulus, *p) {
                    return Err(Error::InvalidField(format!(
                        "modulus {modulus:?} is reducible over GF({p})"
                    )));
                }
                let canonical = FieldSpec::PrimePower {
                    p: *p,
                    k: *k,
                    modulus: modulus.clone(),
                };
                let ff = FiniteField::build(canonical, *p, *k, modulus)?;
                Ok(Field(Arc::new(FieldRepr::Finite(ff))))
            }
        }
    }

    pub fn parse(descriptor: &str) -> Result<Field> {
        Field::new(FieldSpec::parse(descriptor)?)
    }

    pub fn spec(&self) -> FieldSpec {
        match &*self.0 {
            FieldRepr::Finite(ff) => ff.spec.clone(),
            FieldRepr::Rational => FieldSpec::Rational,
        }
    }

    pub fn descriptor(&self) -> String {
        self.spec().descriptor()
    }

    /// Number of elements; `None` for the rational field.
    pub fn order(&self) -> Option<u64> {
        match &*self.0 {
            FieldRepr::Finite(ff) => Some(ff.order as u64),
            FieldRepr::Rational => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(&*self.0, FieldRepr::Rational)
    }

    /// Characteristic-2 prime field; matrices over it are stored bit-packed.
    pub fn is_gf2(&self) -> bool {
        match &*self.0 {
            FieldRepr::Finite(ff) => ff.order == 2,
            FieldRepr::Rational => false,
        }
    }

    pub(crate) fn finite(&self) -> Option<&FiniteField> {
        match &*self.0 {
            FieldRepr::Finite(ff) => Some(ff),
            FieldRepr::Rational => None,
        }
    }

    pub fn zero(&self) -> FieldElem {
        match &*self.0 {
            FieldRepr::Finite(_) => FieldElem::Fin(0),
            FieldRepr::Rational => FieldElem::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> FieldElem {
        match &*self.0 {
            FieldRepr::Finite(_) => FieldElem::Fin(1),
            FieldRepr::Rational => FieldElem::Rat(BigRational::one()),
        }
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        match (&*self.0, a, b) {
            (FieldRepr::Finite(ff), FieldElem::Fin(a), FieldElem::Fin(b)) => {
                FieldElem::Fin(ff.add(*a, *b))
            }
            (FieldRepr::Rational, FieldElem::Rat(a), FieldElem::Rat(b)) => FieldElem::Rat(a + b),
            _ => panic!("element does not belong to field {}", self.descriptor()),
        }
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        match (&*self.0, a) {
            (FieldRepr::Finite(ff), FieldElem::Fin(a)) => FieldElem::Fin(ff.neg(*a)),
            (FieldRepr::Rational, FieldElem::Rat(a)) => FieldElem::Rat(-a),
            _ => panic!("element does not belong to field {}", self.descriptor()),
        }
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        match (&*self.0, a, b) {
            (FieldRepr::Finite(ff), FieldElem::Fin(a), FieldElem::Fin(b)) => {
                FieldElem::Fin(ff.mul(*a, *b))
            }
            (FieldRepr::Rational, FieldElem::Rat(a), FieldElem::Rat(b)) => FieldElem::Rat(a * b),
            _ => panic!("element does not belong to field {}", self.descriptor()),
        }
    }

    pub fn inv(&self, a: &FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::NotInvertible);
        }
        Ok(match (&*self.0, a) {
            (FieldRepr::Finite(ff), FieldElem::Fin(a)) => FieldElem::Fin(ff.inv(*a)),
            (FieldRepr::Rational, FieldElem::Rat(a)) => FieldElem::Rat(a.recip()),
            _ => panic!("element does not belong to field {}", self.descriptor()),
        })
    }

    pub fn div(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// All elements in canonical order; finite kinds only.
    pub fn elements(&self) -> Result<Vec<FieldElem>> {
        match &*self.0 {
            FieldRepr::Finite(ff) => {
                Ok((0..ff.order).map(|v| FieldElem::Fin(v as u16)).collect())
            }
            FieldRepr::Rational => Err(Error::Domain(
                "the rational field cannot be enumerated".into(),
            )),
        }
    }

    /// Element from its canonical packed encoding (finite) or an integer
    /// (rational).
    pub fn elem_from_encoding(&self, v: u64) -> Result<FieldElem> {
        match &*self.0 {
            FieldRepr::Finite(ff) => {
                if v >= ff.order as u64 {
                    Err(Error::Parse(format!(
                        "encoding {v} out of range for field of order {}",
                        ff.order
                    )))
                } else {
                    Ok(FieldElem::Fin(v as u16))
                }
            }
            FieldRepr::Rational => Ok(FieldElem::Rat(BigRational::from_integer(BigInt::from(v)))),
        }
    }

    /// Image of an integer under the canonical ring map (repeated addition of
    /// one). For prime fields this is reduction mod p.
    pub fn elem_from_int(&self, v: i64) -> FieldElem {
        match &*self.0 {
            FieldRepr::Finite(ff) => {
                let r = v.rem_euclid(ff.p as i64) as u16;
                FieldElem::Fin(r)
            }
            FieldRepr::Rational => FieldElem::Rat(BigRational::from_integer(BigInt::from(v))),
        }
    }

    pub fn parse_elem(&self, s: &str) -> Result<FieldElem> {
        let s = s.trim();
        match &*self.0 {
            FieldRepr::Finite(_) => {
                let v: u64 = s
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad element encoding `{s}`")))?;
                self.elem_from_encoding(v)
            }
            FieldRepr::Rational => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s, "1"),
                };
                let n: BigInt = num
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad numerator `{num}`")))?;
                let d: BigInt = den
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad denominator `{den}`")))?;
                if d.is_zero() {
                    return Err(Error::Parse("zero denominator".into()));
                }
                Ok(FieldElem::Rat(BigRational::new(n, d)))
            }
        }
    }

    /// Canonical text encoding, inverse of `parse_elem`.
    pub fn format_elem(&self, e: &FieldElem) -> String {
        e.to_string()
    }

    // Fast unchecked u16 lanes for inner loops over finite fields. Callers
    // must hold a finite field; `fin_*` panics otherwise.

    pub(crate) fn fin_add(&self, a: u16, b: u16) -> u16 {
        self.finite().expect("finite field required").add(a, b)
    }
    pub(crate) fn fin_mul(&self, a: u16, b: u16) -> u16 {
        self.finite().expect("finite field required").mul(a, b)
    }
    pub(crate) fn fin_neg(&self, a: u16) -> u16 {
        self.finite().expect("finite field required").neg(a)
    }
    pub(crate) fn fin_inv(&self, a: u16) -> u16 {
        self.finite().expect("finite field required").inv(a)
    }
}

impl FiniteField {
    fn build(spec: FieldSpec, p: u32, k: u32, modulus: Vec<u32>) -> Result<FiniteField> {
        let order = (p as u64).pow(k) as u32;
        let mut ff = FiniteField {
            spec,
            p,
            k,
            order,
            log: vec![0; order as usize],
            exp: vec![0; 2 * (order as usize - 1).max(1)],
        };
        ff.build_tables(&modulus)?;
        Ok(ff)
    }

    pub(crate) fn order(&self) -> u32 {
        self.order
    }
    pub(crate) fn characteristic(&self) -> u32 {
        self.p
    }

    /// Multiplication straight from the digit representation; used only to
    /// bootstrap the log/exp tables.
    fn raw_mul(&self, modulus: &[u32], a: u16, b: u16) -> u16 {
        if self.k == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u16;
        }
        let k = self.k as usize;
        let p = self.p as u64;
        let da = unpack(a as u32, self.p, k);
        let db = unpack(b as u32, self.p, k);
        // Schoolbook product, degree <= 2k-2.
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &ai) in da.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai as u64 * bj as u64) % p;
            }
        }
        // Reduce by the monic modulus.
        for i in (k..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..k {
                let sub = c * modulus[j] as u64 % p;
                prod[i - k + j] = (prod[i - k + j] + p - sub) % p;
            }
        }
        pack(&prod[..k], self.p)
    }

    fn build_tables(&mut self, modulus: &[u32]) -> Result<()> {
        let n = self.order as usize - 1;
        if n == 0 {
            return Err(Error::InvalidField("order must be at least 2".into()));
        }
        'cand: for g in 2..self.order.max(3) {
            let g = if self.order == 2 { 1 } else { g as u16 };
            let mut e: u16 = 1;
            for i in 0..n {
                self.exp[i] = e;
                self.log[e as usize] = i as u16;
                e = self.raw_mul(modulus, e, g);
                if e == 1 && i + 1 < n {
                    continue 'cand; // orbit too short, not a generator
                }
            }
            if e != 1 {
                continue 'cand;
            }
            for i in 0..n {
                self.exp[n + i] = self.exp[i];
            }
            return Ok(());
        }
        Err(Error::InvalidField(
            "no multiplicative generator found (reducible modulus?)".into(),
        ))
    }

    #[inline]
    pub(crate) fn add(&self, a: u16, b: u16) -> u16 {
        if self.k == 1 {
            let s = a as u32 + b as u32;
            (if s >= self.p { s - self.p } else { s }) as u16
        } else {
            let k = self.k as usize;
            let da = unpack(a as u32, self.p, k);
            let db = unpack(b as u32, self.p, k);
            let sum: Vec<u64> = da
                .iter()
                .zip(&db)
                .map(|(&x, &y)| ((x + y) % self.p) as u64)
                .collect();
            pack(&sum, self.p)
        }
    }

    #[inline]
    pub(crate) fn neg(&self, a: u16) -> u16 {
        if self.k == 1 {
            if a == 0 {
                0
            } else {
                (self.p - a as u32) as u16
            }
        } else {
            let k = self.k as usize;
            let da = unpack(a as u32, self.p, k);
            let neg: Vec<u64> = da
                .iter()
                .map(|&x| if x == 0 { 0 } else { (self.p - x) as u64 })
                .collect();
            pack(&neg, self.p)
        }
    }

    #[inline]
    pub(crate) fn mul(&self, a: u16, b: u16) -> u16 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[self.log[a as usize] as usize + self.log[b as usize] as usize]
    }

    /// Inverse of a nonzero element; panics on zero.
    #[inline]
    pub(crate) fn inv(&self, a: u16) -> u16 {
        assert!(a != 0, "inverse of zero");
        let n = self.order as usize - 1;
        self.exp[(n - self.log[a as usize] as usize) % n]
    }
}

fn unpack(mut v: u32, p: u32, k: usize) -> Vec<u32> {
    let mut digits = vec![0u32; k];
    for d in digits.iter_mut() {
        *d = v % p;
        v /= p;
    }
    digits
}

fn pack(digits: &[u64], p: u32) -> u16 {
    let mut v: u64 = 0;
    for &d in digits.iter().rev() {
        v = v * p as u64 + d;
    }
    v as u16
}

fn check_prime(p: u32) -> Result<()> {
    if p < 2 {
        return Err(Error::InvalidField(format!("{p} is not prime")));
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        d += 1;
    }
    Ok(())
}

/// Reduces coefficients mod p, checks the degree is exactly k, and rescales to
/// a monic polynomial (which generates the same ideal).
fn normalize_modulus(coeffs: &[u32], p: u32, k: u32) -> Result<Vec<u32>> {
    if coeffs.len() != k as usize + 1 {
        return Err(Error::InvalidField(format!(
            "modulus must list {} coefficients (degree {k}), got {}",
            k + 1,
            coeffs.len()
        )));
    }
    let mut m: Vec<u32> = coeffs.iter().map(|&c| c % p).collect();
    let lead = *m.last().unwrap();
    if lead == 0 {
        return Err(Error::InvalidField(format!(
            "modulus must have exact degree {k}"
        )));
    }
    if lead != 1 {
        let inv = mod_inverse(lead, p);
        for c in m.iter_mut() {
            *c = (*c as u64 * inv as u64 % p as u64) as u32;
        }
    }
    Ok(m)
}

fn mod_inverse(a: u32, p: u32) -> u32 {
    // p is prime, so a^(p-2) works.
    let mut result: u64 = 1;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

// Dense little-endian polynomials over GF(p), used only for the
// irreducibility check at field construction.

fn poly_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    let dm = m.len() - 1; // m is monic of degree dm
    while r.len() > dm {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if c != 0 {
            for j in 0..=dm {
                let sub = c as u64 * m[j] as u64 % p as u64;
                let idx = shift + j;
                r[idx] = ((r[idx] as u64 + p as u64 - sub) % p as u64) as u32;
            }
        }
        r.pop();
        poly_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn poly_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut prod = vec![0u32; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u64 + ai as u64 * bj as u64) % p as u64) as u32;
        }
    }
    poly_rem(&prod, m, p)
}

fn poly_powmod(a: &[u32], mut e: u64, m: &[u32], p: u32) -> Vec<u32> {
    let mut result = vec![1u32];
    let mut base = poly_rem(a, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = poly_mulmod(&result, &base, m, p);
        }
        base = poly_mulmod(&base, &base, m, p);
        e >>= 1;
    }
    result
}

fn poly_gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    poly_trim(&mut x);
    poly_trim(&mut y);
    while !y.is_empty() {
        // Make y monic so poly_rem applies.
        let lead = *y.last().unwrap();
        let inv = mod_inverse(lead, p);
        let monic: Vec<u32> = y
            .iter()
            .map(|&c| (c as u64 * inv as u64 % p as u64) as u32)
            .collect();
        let r = poly_rem(&x, &monic, p);
        x = y;
        y = r;
    }
    x
}

/// Rabin's test: f (monic, degree k) is irreducible over GF(p) iff
/// x^(p^k) = x mod f and gcd(x^(p^(k/q)) - x, f) = 1 for each prime q | k.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let k = (modulus.len() - 1) as u32;
    if k == 0 {
        return false;
    }
    let x = vec![0u32, 1];
    let sub_x = |mut poly: Vec<u32>| -> Vec<u32> {
        while poly.len() < 2 {
            poly.push(0);
        }
        poly[1] = (poly[1] + p - 1) % p;
        poly_trim(&mut poly);
        poly
    };
    // x^(p^k) mod f, computed as k successive p-th powers.
    let frobenius_iter = |times: u32| -> Vec<u32> {
        let mut t = x.clone();
        for _ in 0..times {
            t = poly_powmod(&t, p as u64, modulus, p);
        }
        t
    };
    if !sub_x(frobenius_iter(k)).is_empty() {
        return false;
    }
    let mut rem = k;
    let mut q = 2;
    let mut prime_divisors = vec![];
    while q * q <= rem {
        if rem % q == 0 {
            prime_divisors.push(q);
            while rem % q == 0 {
                rem /= q;
            }
        }
        q += 1;
    }
    if rem > 1 {
        prime_divisors.push(rem);
    }
    for q in prime_divisors {
        let diff = sub_x(frobenius_iter(k / q));
        let g = poly_gcd(modulus, &diff, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> Field {
        Field::new(FieldSpec::Prime { p }).unwrap()
    }

    #[test]
    fn smallest_field() {
        let f = gf(2);
        assert_eq!(f.order(), Some(2));
        let elems = f.elements().unwrap();
        assert_eq!(elems, vec![FieldElem::Fin(0), FieldElem::Fin(1)]);
    }

    #[test]
    fn non_prime_rejected() {
        assert!(matches!(
            Field::new(FieldSpec::Prime { p: 4 }),
            Err(Error::InvalidField(_))
        ));
        assert!(Field::new(FieldSpec::Prime { p: 1 }).is_err());
    }

    #[test]
    fn gf4_construction_and_mul() {
        // x^2 + x + 1 over GF(2); irreducibility verified by trial roots:
        // f(0) = 1, f(1) = 1 + 1 + 1 = 1.
        let f = Field::new(FieldSpec::PrimePower {
            p: 2,
            k: 2,
            modulus: vec![1, 1, 1],
        })
        .unwrap();
        assert_eq!(f.order(), Some(4));
        // x * x = x^2 = x + 1 after reduction: encoding 2 * 2 = 3.
        let x = FieldElem::Fin(2);
        assert_eq!(f.mul(&x, &x), FieldElem::Fin(3));
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^2 + 1 = (x+1)^2 over GF(2).
        assert!(Field::new(FieldSpec::PrimePower {
            p: 2,
            k: 2,
            modulus: vec![1, 0, 1],
        })
        .is_err());
    }

    #[test]
    fn order_cap_enforced() {
        assert!(Field::new(FieldSpec::PrimePower {
            p: 2,
            k: 17,
            modulus: vec![1; 18],
        })
        .is_err());
    }

    #[test]
    fn gf3_addition() {
        let f = gf(3);
        assert_eq!(
            f.add(&FieldElem::Fin(2), &FieldElem::Fin(2)),
            FieldElem::Fin(1)
        );
    }

    #[test]
    fn rational_inverse() {
        let f = Field::new(FieldSpec::Rational).unwrap();
        let two_thirds = f.parse_elem("2/3").unwrap();
        let inv = f.inv(&two_thirds).unwrap();
        assert_eq!(f.format_elem(&inv), "3/2");
        assert!(f.inv(&f.zero()).is_err());
    }

    #[test]
    fn inverses_exhaustive_up_to_256() {
        for spec in [
            FieldSpec::Prime { p: 2 },
            FieldSpec::Prime { p: 3 },
            FieldSpec::Prime { p: 5 },
            FieldSpec::Prime { p: 251 },
            FieldSpec::PrimePower { p: 2, k: 8, modulus: vec![1, 0, 1, 1, 1, 0, 0, 0, 1] },
            FieldSpec::PrimePower { p: 3, k: 4, modulus: vec![2, 1, 0, 0, 1] },
            FieldSpec::PrimePower { p: 5, k: 3, modulus: vec![3, 3, 0, 1] },
        ] {
            let f = Field::new(spec).unwrap();
            let one = f.one();
            for e in f.elements().unwrap() {
                if e.is_zero() {
                    continue;
                }
                assert_eq!(f.mul(&e, &f.inv(&e).unwrap()), one, "in {}", f.descriptor());
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_small_orders() {
        for spec in [
            FieldSpec::Prime { p: 2 },
            FieldSpec::Prime { p: 3 },
            FieldSpec::Prime { p: 5 },
            FieldSpec::Prime { p: 7 },
            FieldSpec::Prime { p: 11 },
            FieldSpec::Prime { p: 13 },
            FieldSpec::PrimePower { p: 2, k: 2, modulus: vec![1, 1, 1] },
            FieldSpec::PrimePower { p: 2, k: 3, modulus: vec![1, 1, 0, 1] },
            FieldSpec::PrimePower { p: 2, k: 4, modulus: vec![1, 1, 0, 0, 1] },
            FieldSpec::PrimePower { p: 3, k: 2, modulus: vec![1, 0, 1] },
        ] {
            let f = Field::new(spec).unwrap();
            let elems = f.elements().unwrap();
            assert!(elems.len() <= 16);
            for a in &elems {
                assert_eq!(f.add(a, &f.zero()), *a);
                assert_eq!(f.mul(a, &f.one()), *a);
                assert_eq!(f.add(a, &f.neg(a)), f.zero());
                for b in &elems {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in &elems {
                        assert_eq!(f.add(&f.add(a, b), c), f.add(a, &f.add(b, c)));
                        assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, &f.add(b, c)),
                            f.add(&f.mul(a, b), &f.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_is_exactly_order_distinct() {
        let f = Field::new(FieldSpec::PrimePower { p: 3, k: 2, modulus: vec![1, 0, 1] }).unwrap();
        let elems = f.elements().unwrap();
        assert_eq!(elems.len(), 9);
        let mut sorted: Vec<_> = elems.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), 9);
    }

    #[test]
    fn descriptor_round_trip() {
        for d in ["gf2", "gf3", "gf5", "q", "gf(2^2;1-1-1)", "gf(3^2;1-0-1)"] {
            let f = Field::parse(d).unwrap();
            assert_eq!(f.descriptor(), d);
            let f2 = Field::parse(&f.descriptor()).unwrap();
            assert_eq!(f.spec(), f2.spec());
        }
    }

    #[test]
    fn int_embedding_matches_repeated_addition() {
        let f = Field::new(FieldSpec::PrimePower { p: 3, k: 2, modulus: vec![1, 0, 1] }).unwrap();
        let mut acc = f.zero();
        for i in 1..=7i64 {
            acc = f.add(&acc, &f.one());
            assert_eq!(acc, f.elem_from_int(i));
        }
    }
}
