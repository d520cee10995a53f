//! Zero-nonzero patterns of polynomial tuples over finite fields: exhaustive
//! enumeration with witnesses, the binomial counting bound on weight-bounded
//! patterns, and the triangular certificate that proves the bound by making
//! the products g_y = prod_{y_j = 1} f_j concrete.
//!
//! Pattern vectors are stored as u64 bitmasks (bit j set iff polynomial j is
//! nonzero at the point), capping tuples at 64 polynomials — far beyond the
//! desk scale this module targets.

use std::collections::BTreeMap;

use num::BigUint;
use num::One;

use crate::error::{Error, Result};
use crate::ffield::{Field, FieldElem};
use crate::matrix::Matrix;

/// A monomial: coefficient times prod x_i^{e_i}.
#[derive(Debug, Clone, PartialEq)]
pub struct Monomial {
    pub coeff: FieldElem,
    pub exps: Vec<u32>,
}

/// Sparse multivariate polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    n_vars: usize,
    terms: Vec<Monomial>,
}

impl Poly {
    pub fn new(n_vars: usize, terms: Vec<Monomial>) -> Result<Poly> {
        for t in &terms {
            if t.exps.len() != n_vars {
                return Err(Error::DimensionMismatch(format!(
                    "monomial lists {} exponents, expected {n_vars}",
                    t.exps.len()
                )));
            }
        }
        Ok(Poly { n_vars, terms })
    }

    pub fn constant(n_vars: usize, c: FieldElem) -> Poly {
        Poly { n_vars, terms: vec![Monomial { coeff: c, exps: vec![0; n_vars] }] }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    /// Total degree; 0 for constants and for the empty (zero) polynomial.
    pub fn degree(&self) -> usize {
        self.terms
            .iter()
            .filter(|t| !t.coeff.is_zero())
            .map(|t| t.exps.iter().map(|&e| e as usize).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, field: &Field, point: &[FieldElem]) -> FieldElem {
        assert_eq!(point.len(), self.n_vars, "point dimension mismatch");
        let mut acc = field.zero();
        for t in &self.terms {
            if t.coeff.is_zero() {
                continue;
            }
            let mut term = t.coeff.clone();
            for (u, &e) in point.iter().zip(t.exps.iter()) {
                if e == 0 {
                    continue;
                }
                if u.is_zero() {
                    term = field.zero();
                    break;
                }
                term = field.mul(&term, &pow(field, u, e));
            }
            if !term.is_zero() {
                acc = field.add(&acc, &term);
            }
        }
        acc
    }

    /// Text form `coeff:e1,e2,...,en` per monomial, joined by `+`.
    pub fn to_text(&self, field: &Field) -> String {
        if self.terms.is_empty() {
            let zero = field.format_elem(&field.zero());
            return format!("{zero}:{}", vec!["0"; self.n_vars].join(","));
        }
        self.terms
            .iter()
            .map(|t| {
                let exps: Vec<String> = t.exps.iter().map(|e| e.to_string()).collect();
                format!("{}:{}", field.format_elem(&t.coeff), exps.join(","))
            })
            .collect::<Vec<_>>()
            .join("+")
    }

    pub fn parse_text(field: &Field, n_vars: usize, s: &str) -> Result<Poly> {
        let mut terms = Vec::new();
        for mono in s.split('+') {
            let mono = mono.trim();
            let (coeff, exps) = mono
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("monomial `{mono}` missing `:`")))?;
            let coeff = field.parse_elem(coeff)?;
            let exps_str = exps.trim();
            let exps: Vec<u32> = if exps_str.is_empty() {
                vec![]
            } else {
                exps_str
                    .split(',')
                    .map(|e| {
                        e.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad exponent `{e}`")))
                    })
                    .collect::<Result<Vec<u32>>>()?
            };
            if exps.len() != n_vars {
                return Err(Error::Parse(format!(
                    "monomial `{mono}` lists {} exponents, expected {n_vars}",
                    exps.len()
                )));
            }
            terms.push(Monomial { coeff, exps });
        }
        Poly::new(n_vars, terms)
    }
}

fn pow(field: &Field, base: &FieldElem, mut e: u32) -> FieldElem {
    let mut result = field.one();
    let mut b = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            result = field.mul(&result, &b);
        }
        b = field.mul(&b, &b);
        e >>= 1;
    }
    result
}

/// An h-tuple of polynomials in n variables over one field.
#[derive(Debug, Clone)]
pub struct PolyTuple {
    field: Field,
    n_vars: usize,
    polys: Vec<Poly>,
}

impl PolyTuple {
    pub fn new(field: Field, n_vars: usize, polys: Vec<Poly>) -> Result<PolyTuple> {
        for p in &polys {
            if p.n_vars() != n_vars {
                return Err(Error::DimensionMismatch(
                    "all polynomials must share the variable count".into(),
                ));
            }
        }
        Ok(PolyTuple { field, n_vars, polys })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn n_vars(&self) -> usize {
        self.n_vars
    }
    pub fn h(&self) -> usize {
        self.polys.len()
    }
    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn max_degree(&self) -> usize {
        self.polys.iter().map(|p| p.degree()).max().unwrap_or(0)
    }

    pub fn eval(&self, point: &[FieldElem]) -> Vec<FieldElem> {
        self.polys.iter().map(|p| p.eval(&self.field, point)).collect()
    }

    /// One polynomial per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for p in &self.polys {
            out.push_str(&p.to_text(&self.field));
            out.push('\n');
        }
        out
    }

    pub fn parse_text(field: &Field, n_vars: usize, text: &str) -> Result<PolyTuple> {
        let polys = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| Poly::parse_text(field, n_vars, l))
            .collect::<Result<Vec<Poly>>>()?;
        PolyTuple::new(field.clone(), n_vars, polys)
    }
}

/// The achieved zero-nonzero patterns of weight at most `weight_bound`,
/// each with its first witness point in lexicographic order.
#[derive(Debug, Clone)]
pub struct PatternSet {
    pub h: usize,
    pub weight_bound: usize,
    patterns: BTreeMap<u64, Vec<FieldElem>>,
}

impl PatternSet {
    pub fn len(&self) -> usize {
        self.patterns.len()
    }
    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }
    pub fn contains(&self, mask: u64) -> bool {
        self.patterns.contains_key(&mask)
    }
    pub fn witness(&self, mask: u64) -> Option<&Vec<FieldElem>> {
        self.patterns.get(&mask)
    }
    /// Masks in ascending numeric order.
    pub fn masks(&self) -> Vec<u64> {
        self.patterns.keys().copied().collect()
    }
}

/// Exhaustively evaluates the tuple over field^n_vars and collects the
/// patterns of Hamming weight at most m. Points are enumerated
/// lexicographically (first variable most significant), so witnesses are the
/// lexicographically first achieving points.
pub fn enumerate_zero_patterns(f: &PolyTuple, m: usize, budget: u64) -> Result<PatternSet> {
    let field = f.field();
    let order = field
        .order()
        .ok_or_else(|| Error::Domain("zero-pattern enumeration needs a finite field".into()))?;
    if f.h() > 64 {
        return Err(Error::Domain("pattern masks cap the tuple length at 64".into()));
    }
    let points = (order as u128).saturating_pow(f.n_vars() as u32);
    if points > budget as u128 {
        return Err(Error::BudgetExceeded { needed: points, budget: budget as u128 });
    }
    let elems = field.elements()?;
    let mut patterns: BTreeMap<u64, Vec<FieldElem>> = BTreeMap::new();
    let mut idx = vec![0usize; f.n_vars()];
    let mut point: Vec<FieldElem> = vec![elems[0].clone(); f.n_vars()];
    loop {
        let values = f.eval(&point);
        let mut mask = 0u64;
        for (j, v) in values.iter().enumerate() {
            if !v.is_zero() {
                mask |= 1 << j;
            }
        }
        if mask.count_ones() as usize <= m {
            patterns.entry(mask).or_insert_with(|| point.clone());
        }
        // Advance the odometer, last variable fastest.
        let mut carry = true;
        for i in (0..f.n_vars()).rev() {
            idx[i] += 1;
            if idx[i] < elems.len() {
                point[i] = elems[idx[i]].clone();
                carry = false;
                break;
            }
            idx[i] = 0;
            point[i] = elems[0].clone();
        }
        if carry {
            break;
        }
    }
    Ok(PatternSet { h: f.h(), weight_bound: m, patterns })
}

/// The counting bound C(n_vars + m*d, n_vars) on weight-<=m patterns of an
/// h-tuple (h >= n_vars) of degree-<=d polynomials in n_vars variables.
pub fn rbg_bound(n_vars: u64, m: u64, d: u64) -> BigUint {
    binomial_big(n_vars + m * d, n_vars)
}

pub fn binomial_big(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

#[derive(Debug, Clone)]
pub struct RbgReport {
    pub n_vars: usize,
    pub h: usize,
    pub degree: usize,
    pub weight_bound: usize,
    pub achieved: usize,
    pub bound: BigUint,
    pub ok: bool,
}

/// Counts the achieved weight-<=m patterns and compares them to the binomial
/// bound. The bound is only claimed for h >= n_vars; smaller tuples are
/// rejected.
pub fn rbg_check(f: &PolyTuple, m: usize, budget: u64) -> Result<RbgReport> {
    if f.h() < f.n_vars() {
        return Err(Error::Domain(format!(
            "bound hypothesis needs h >= n_vars, got h = {} < {}",
            f.h(),
            f.n_vars()
        )));
    }
    let set = enumerate_zero_patterns(f, m, budget)?;
    let d = f.max_degree();
    let bound = rbg_bound(f.n_vars() as u64, m as u64, d as u64);
    let ok = BigUint::from(set.len()) <= bound;
    Ok(RbgReport {
        n_vars: f.n_vars(),
        h: f.h(),
        degree: d,
        weight_bound: m,
        achieved: set.len(),
        bound,
        ok,
    })
}

#[derive(Debug, Clone)]
pub struct RbgCertificate {
    /// Achieved patterns in (weight, numeric) order — a linear extension of
    /// the entrywise partial order.
    pub order: Vec<u64>,
    pub matrix: Matrix,
    pub rank: usize,
    pub achieved: usize,
}

/// Builds the evaluation matrix A(y,z) = g_y(u_z) over the achieved pattern
/// set, where g_y is the product of the polynomials selected by y (empty
/// product = 1). Verifies g_y(u_z) != 0 iff z >= y entrywise, and that the
/// matrix — upper triangular in any linear extension of that order — has full
/// rank equal to the number of achieved patterns.
pub fn rbg_certificate(f: &PolyTuple, m: usize, budget: u64) -> Result<RbgCertificate> {
    let field = f.field().clone();
    let set = enumerate_zero_patterns(f, m, budget)?;
    let mut order = set.masks();
    order.sort_by_key(|&mask| (mask.count_ones(), mask));
    let size = order.len();
    // Evaluate the tuple once per witness, then read products off the values.
    let tuple_values: Vec<Vec<FieldElem>> = order
        .iter()
        .map(|&z| f.eval(set.witness(z).expect("witness for achieved pattern")))
        .collect();
    let mut a = Matrix::zeros(&field, size, size);
    for (yi, &y) in order.iter().enumerate() {
        for (zi, &z) in order.iter().enumerate() {
            let mut val = field.one();
            for j in 0..f.h() {
                if y >> j & 1 == 1 {
                    val = field.mul(&val, &tuple_values[zi][j]);
                }
            }
            let expect_nonzero = z & y == y;
            if val.is_zero() == expect_nonzero {
                return Err(Error::Invariant(format!(
                    "certificate entry (y={y:#b}, z={z:#b}) breaks the triangular equivalence"
                )));
            }
            a.set(yi, zi, val);
        }
    }
    let rank = a.rank();
    if rank != size {
        return Err(Error::Invariant(format!(
            "certificate matrix has rank {rank}, expected {size}"
        )));
    }
    Ok(RbgCertificate { order, matrix: a, rank, achieved: size })
}
