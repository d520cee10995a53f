//! Dense exact matrices over a [`Field`]: rank by Gaussian elimination,
//! Kronecker products, submatrix extraction, the zero-nonzero pattern map, and
//! reduction to reduced row-echelon (G-pattern) form.
//!
//! GF(2) matrices are stored bit-packed with word-parallel row elimination;
//! other finite fields store `u16` element encodings; the rational field
//! stores reduced fractions. Matrices are immutable in spirit: operations
//! return fresh values, so matrices can be shared across parallel trials.

use num::rational::BigRational;

use crate::error::{Error, Result};
use crate::ffield::{Field, FieldElem};
use crate::structures::GPattern;

/// Rectangular bit matrix; also serves as a zero-nonzero pattern.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    wpr: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    pub fn new(rows: usize, cols: usize) -> BitMatrix {
        let wpr = cols.div_ceil(64).max(1);
        BitMatrix { rows, cols, wpr, words: vec![0; rows * wpr] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        self.words[r * self.wpr + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let w = &mut self.words[r * self.wpr + c / 64];
        if v {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn identity(n: usize) -> BitMatrix {
        let mut m = BitMatrix::new(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Data {
    /// Bit-packed rows, `wpr = ceil(cols/64)` words per row.
    Bits(Vec<u64>),
    /// Canonical element encodings, row-major.
    Fin(Vec<u16>),
    Rat(Vec<BigRational>),
}

/// Dense matrix over an exact field.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Data,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankProfile {
    pub rank: usize,
    /// Lexicographically first maximal independent column set.
    pub pivot_cols: Vec<usize>,
    /// Lexicographically first maximal independent row set.
    pub pivot_rows: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        let data = if field.is_gf2() {
            Data::Bits(vec![0; rows * cols.div_ceil(64).max(1)])
        } else if field.is_rational() {
            Data::Rat(vec![num::Zero::zero(); rows * cols])
        } else {
            Data::Fin(vec![0; rows * cols])
        };
        Matrix { rows, cols, field: field.clone(), data }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        let one = field.one();
        for i in 0..n {
            m.set(i, i, one.clone());
        }
        m
    }

    pub fn from_fn(
        field: &Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldElem,
    ) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    /// Builds a matrix over `field` from integer entries via the canonical
    /// ring map.
    pub fn from_ints(field: &Field, entries: &[&[i64]]) -> Matrix {
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        Matrix::from_fn(field, rows, cols, |r, c| field.elem_from_int(entries[r][c]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn field(&self) -> &Field {
        &self.field
    }

    fn wpr(&self) -> usize {
        self.cols.div_ceil(64).max(1)
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElem {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        match &self.data {
            Data::Bits(w) => {
                let bit = w[r * self.wpr() + c / 64] >> (c % 64) & 1;
                FieldElem::Fin(bit as u16)
            }
            Data::Fin(v) => FieldElem::Fin(v[r * self.cols + c]),
            Data::Rat(v) => FieldElem::Rat(v[r * self.cols + c].clone()),
        }
    }

    pub fn set(&mut self, r: usize, c: usize, e: FieldElem) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        let cols = self.cols;
        let wpr = self.wpr();
        match (&mut self.data, e) {
            (Data::Bits(w), FieldElem::Fin(v)) => {
                debug_assert!(v < 2);
                let word = &mut w[r * wpr + c / 64];
                if v == 1 {
                    *word |= 1 << (c % 64);
                } else {
                    *word &= !(1 << (c % 64));
                }
            }
            (Data::Fin(d), FieldElem::Fin(v)) => d[r * cols + c] = v,
            (Data::Rat(d), FieldElem::Rat(v)) => d[r * cols + c] = v,
            _ => panic!("element does not match matrix field"),
        }
    }

    pub fn is_zero_at(&self, r: usize, c: usize) -> bool {
        match &self.data {
            Data::Bits(w) => w[r * self.wpr() + c / 64] >> (c % 64) & 1 == 0,
            Data::Fin(v) => v[r * self.cols + c] == 0,
            Data::Rat(v) => num::Zero::is_zero(&v[r * self.cols + c]),
        }
    }

    /// Zero-nonzero pattern: bit (i,j) set iff the entry is nonzero.
    pub fn sigma(&self) -> BitMatrix {
        let mut b = BitMatrix::new(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if !self.is_zero_at(r, c) {
                    b.set(r, c, true);
                }
            }
        }
        b
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |r, c| self.get(c, r))
    }

    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Matrix {
        Matrix::from_fn(&self.field, row_idx.len(), col_idx.len(), |r, c| {
            self.get(row_idx[r], col_idx[c])
        })
    }

    /// Vertical stack; fields and widths must agree.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::DimensionMismatch("vstack of different fields".into()));
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "vstack widths {} vs {}",
                self.cols, other.cols
            )));
        }
        Ok(Matrix::from_fn(&self.field, self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows {
                self.get(r, c)
            } else {
                other.get(r - self.rows, c)
            }
        }))
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::DimensionMismatch("product of different fields".into()));
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "product {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.is_zero_at(i, k) {
                    continue;
                }
                let a = self.get(i, k);
                for j in 0..other.cols {
                    if other.is_zero_at(k, j) {
                        continue;
                    }
                    let cur = out.get(i, j);
                    out.set(i, j, f.add(&cur, &f.mul(&a, &other.get(k, j))));
                }
            }
        }
        Ok(out)
    }

    /// Standard Kronecker product: entry ((i,k),(j,l)) = A(i,j) * B(k,l), with
    /// row index i*B.rows + k and column index j*B.cols + l.
    pub fn kronecker(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::DimensionMismatch(
                "Kronecker product of different fields".into(),
            ));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.is_zero_at(i, j) {
                    continue;
                }
                let a = self.get(i, j);
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        if other.is_zero_at(k, l) {
                            continue;
                        }
                        out.set(
                            i * other.rows + k,
                            j * other.cols + l,
                            f.mul(&a, &other.get(k, l)),
                        );
                    }
                }
            }
        }
        Ok(out)
    }

    /// Exact rank over the matrix's field.
    pub fn rank(&self) -> usize {
        self.echelon_pivots(false).0.len()
    }

    /// Rank plus the lexicographically first independent row and column sets.
    pub fn rank_profile(&self) -> RankProfile {
        let pivot_cols = self.echelon_pivots(false).0;
        let pivot_rows = self.transpose().echelon_pivots(false).0;
        debug_assert_eq!(pivot_cols.len(), pivot_rows.len());
        RankProfile { rank: pivot_cols.len(), pivot_cols, pivot_rows }
    }

    /// Reduced row-echelon form together with its pivot columns. Pivot rows
    /// come first in pivot-column order, every pivot is 1 and is the only
    /// nonzero entry of its column, and all-zero rows sit at the bottom.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let (pivots, m) = self.echelon_pivots(true);
        (m, pivots)
    }

    /// Row reduction to G-pattern shape: returns the reduced matrix and the
    /// G-pattern (determined by the pivot columns) that it matches. The row
    /// space is preserved.
    pub fn row_reduce_to_gpattern(&self) -> (Matrix, GPattern) {
        let (reduced, pivots) = self.rref();
        let gp = GPattern::new(self.rows, self.cols, pivots)
            .expect("pivot columns of an RREF are strictly increasing");
        debug_assert_eq!(gp.matches(&reduced), Ok(true));
        (reduced, gp)
    }

    /// Pivot columns of Gaussian elimination, scanning columns left to right
    /// and rows top-down; optionally also returns the fully reduced matrix.
    fn echelon_pivots(&self, reduce: bool) -> (Vec<usize>, Matrix) {
        match &self.data {
            Data::Bits(words) => {
                let wpr = self.wpr();
                let mut work: Vec<Vec<u64>> = (0..self.rows)
                    .map(|r| words[r * wpr..(r + 1) * wpr].to_vec())
                    .collect();
                let mut pivots = Vec::new();
                let mut rank = 0;
                for c in 0..self.cols {
                    let Some(pivot) = (rank..self.rows)
                        .find(|&r| work[r][c / 64] >> (c % 64) & 1 == 1)
                    else {
                        continue;
                    };
                    work.swap(rank, pivot);
                    for r in 0..self.rows {
                        let lower = r > rank;
                        let upper = reduce && r < rank;
                        if (lower || upper) && work[r][c / 64] >> (c % 64) & 1 == 1 {
                            let (head, tail) = work.split_at_mut(rank.max(r));
                            let (src, dst) = if r < rank {
                                (&tail[0], &mut head[r])
                            } else {
                                (&head[rank], &mut tail[0])
                            };
                            for (d, s) in dst.iter_mut().zip(src.iter()) {
                                *d ^= s;
                            }
                        }
                    }
                    pivots.push(c);
                    rank += 1;
                    if rank == self.rows {
                        break;
                    }
                }
                let out = if reduce {
                    let mut m = Matrix::zeros(&self.field, self.rows, self.cols);
                    if let Data::Bits(w) = &mut m.data {
                        for (r, row) in work.iter().enumerate() {
                            w[r * wpr..(r + 1) * wpr].copy_from_slice(row);
                        }
                    }
                    m
                } else {
                    self.clone()
                };
                (pivots, out)
            }
            Data::Fin(_) => {
                let mut work: Vec<Vec<u16>> = (0..self.rows)
                    .map(|r| {
                        (0..self.cols)
                            .map(|c| match self.get(r, c) {
                                FieldElem::Fin(v) => v,
                                _ => unreachable!(),
                            })
                            .collect()
                    })
                    .collect();
                let f = &self.field;
                let mut pivots = Vec::new();
                let mut rank = 0;
                for c in 0..self.cols {
                    let Some(pivot) = (rank..self.rows).find(|&r| work[r][c] != 0) else {
                        continue;
                    };
                    work.swap(rank, pivot);
                    let inv = f.fin_inv(work[rank][c]);
                    if inv != 1 {
                        for x in work[rank].iter_mut() {
                            *x = f.fin_mul(*x, inv);
                        }
                    }
                    for r in 0..self.rows {
                        if r == rank {
                            continue;
                        }
                        if !reduce && r < rank {
                            continue;
                        }
                        let factor = work[r][c];
                        if factor == 0 {
                            continue;
                        }
                        let neg = f.fin_neg(factor);
                        let src = work[rank].clone();
                        for (x, s) in work[r].iter_mut().zip(src.iter()) {
                            *x = f.fin_add(*x, f.fin_mul(neg, *s));
                        }
                    }
                    pivots.push(c);
                    rank += 1;
                    if rank == self.rows {
                        break;
                    }
                }
                let out = if reduce {
                    Matrix::from_fn(f, self.rows, self.cols, |r, c| FieldElem::Fin(work[r][c]))
                } else {
                    self.clone()
                };
                (pivots, out)
            }
            Data::Rat(_) => {
                let mut work: Vec<Vec<BigRational>> = (0..self.rows)
                    .map(|r| {
                        (0..self.cols)
                            .map(|c| match self.get(r, c) {
                                FieldElem::Rat(v) => v,
                                _ => unreachable!(),
                            })
                            .collect()
                    })
                    .collect();
                let mut pivots = Vec::new();
                let mut rank = 0;
                for c in 0..self.cols {
                    let Some(pivot) =
                        (rank..self.rows).find(|&r| !num::Zero::is_zero(&work[r][c]))
                    else {
                        continue;
                    };
                    work.swap(rank, pivot);
                    let inv = work[rank][c].recip();
                    for x in work[rank].iter_mut() {
                        *x *= &inv;
                    }
                    for r in 0..self.rows {
                        if r == rank {
                            continue;
                        }
                        if !reduce && r < rank {
                            continue;
                        }
                        if num::Zero::is_zero(&work[r][c]) {
                            continue;
                        }
                        let factor = work[r][c].clone();
                        let src = work[rank].clone();
                        for (x, s) in work[r].iter_mut().zip(src.iter()) {
                            *x -= &factor * s;
                        }
                    }
                    pivots.push(c);
                    rank += 1;
                    if rank == self.rows {
                        break;
                    }
                }
                let out = if reduce {
                    Matrix::from_fn(&self.field, self.rows, self.cols, |r, c| {
                        FieldElem::Rat(work[r][c].clone())
                    })
                } else {
                    self.clone()
                };
                (pivots, out)
            }
        }
    }

    /// Text format: first line `rows cols field-descriptor`, then one line per
    /// row of space-separated canonical element encodings.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.rows, self.cols, self.field.descriptor());
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| self.field.format_elem(&self.get(r, c)))
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Matrix> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matrix text".into()))?;
        let mut parts = header.split_whitespace();
        let rows: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse("bad row count".into()))?;
        let cols: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse("bad column count".into()))?;
        let desc = parts
            .next()
            .ok_or_else(|| Error::Parse("missing field descriptor".into()))?;
        let field = Field::parse(desc)?;
        let mut m = Matrix::zeros(&field, rows, cols);
        for r in 0..rows {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing matrix row {r}")))?;
            let entries: Vec<&str> = line.split_whitespace().collect();
            if entries.len() != cols {
                return Err(Error::Parse(format!(
                    "row {r} has {} entries, expected {cols}",
                    entries.len()
                )));
            }
            for (c, s) in entries.iter().enumerate() {
                m.set(r, c, field.parse_elem(s)?);
            }
        }
        Ok(m)
    }

    /// Uniform random matrix; rational fields draw small integers.
    pub fn random(field: &Field, rows: usize, cols: usize, rng: &mut impl rand::Rng) -> Matrix {
        Matrix::from_fn(field, rows, cols, |_, _| match field.order() {
            Some(ord) => field
                .elem_from_encoding(rng.random_range(0..ord))
                .expect("in-range encoding"),
            None => field.elem_from_int(rng.random_range(-4..=4)),
        })
    }

    /// Random n x n matrix of rank exactly s, built as a product of random
    /// n x s and s x n factors (rejection sampling on the rank).
    pub fn random_of_rank(
        field: &Field,
        n: usize,
        s: usize,
        rng: &mut impl rand::Rng,
    ) -> Matrix {
        assert!(s <= n);
        loop {
            let x = Matrix::random(field, n, s, rng);
            let y = Matrix::random(field, s, n, rng);
            let m = x.mul(&y).expect("shapes agree");
            if m.rank() == s {
                return m;
            }
        }
    }
}

/// Incremental row-space rank tracker used by search pruning: rows are
/// inserted one at a time and reduced against the basis collected so far.
#[derive(Debug, Clone)]
pub(crate) enum IncrementalRank {
    /// GF(2) with at most 64 columns; basis indexed by leading bit.
    Bits { cols: usize, basis: Vec<u64> },
    Fin { field: Field, cols: usize, rows: Vec<Vec<u16>>, pivots: Vec<usize> },
}

impl IncrementalRank {
    pub fn new(field: &Field, cols: usize) -> IncrementalRank {
        if field.is_gf2() {
            assert!(cols <= 64, "bit-packed incremental rank capped at 64 columns");
            IncrementalRank::Bits { cols, basis: vec![0; cols] }
        } else {
            IncrementalRank::Fin {
                field: field.clone(),
                cols,
                rows: Vec::new(),
                pivots: Vec::new(),
            }
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            IncrementalRank::Bits { basis, .. } => {
                basis.iter().filter(|&&w| w != 0).count()
            }
            IncrementalRank::Fin { rows, .. } => rows.len(),
        }
    }

    /// Inserts a row; returns true when it enlarged the row space.
    pub fn insert_bits(&mut self, mut row: u64) -> bool {
        let IncrementalRank::Bits { cols, basis } = self else {
            panic!("insert_bits on a non-GF(2) tracker");
        };
        while row != 0 {
            let lead = 63 - row.leading_zeros() as usize;
            debug_assert!(lead < *cols);
            if basis[lead] == 0 {
                basis[lead] = row;
                return true;
            }
            row ^= basis[lead];
        }
        false
    }

    pub fn insert_fin(&mut self, mut row: Vec<u16>) -> bool {
        let IncrementalRank::Fin { field, cols, rows, pivots } = self else {
            panic!("insert_fin on a GF(2) tracker");
        };
        debug_assert_eq!(row.len(), *cols);
        loop {
            let Some(lead) = row.iter().position(|&v| v != 0) else {
                return false;
            };
            match pivots.iter().position(|&p| p == lead) {
                Some(i) => {
                    let factor = f_neg_mul(field, row[lead]);
                    let basis_row = rows[i].clone();
                    for (x, b) in row.iter_mut().zip(basis_row.iter()) {
                        *x = field.fin_add(*x, field.fin_mul(factor, *b));
                    }
                }
                None => {
                    let inv = field.fin_inv(row[lead]);
                    if inv != 1 {
                        for x in row.iter_mut() {
                            *x = field.fin_mul(*x, inv);
                        }
                    }
                    rows.push(row);
                    pivots.push(lead);
                    return true;
                }
            }
        }
    }
}

fn f_neg_mul(field: &Field, v: u16) -> u16 {
    field.fin_neg(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::FieldSpec;
    use rand::SeedableRng;

    fn gf(p: u32) -> Field {
        Field::new(FieldSpec::Prime { p }).unwrap()
    }

    #[test]
    fn identity_rank() {
        for field in [gf(2), gf(3), Field::new(FieldSpec::Rational).unwrap()] {
            assert_eq!(Matrix::identity(&field, 3).rank(), 3);
        }
    }

    #[test]
    fn all_ones_rank_one() {
        let f = gf(2);
        let m = Matrix::from_fn(&f, 3, 3, |_, _| f.one());
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn circulant_rank_two_over_gf2() {
        // Rows sum to zero mod 2, and any two rows are independent.
        let f = gf(2);
        let m = Matrix::from_ints(&f, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rank_equals_transpose_rank() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for field in [gf(2), gf(3), gf(5), Field::new(FieldSpec::Rational).unwrap()] {
            for _ in 0..25 {
                let m = Matrix::random(&field, 5, 7, &mut rng);
                assert_eq!(m.rank(), m.transpose().rank());
            }
        }
    }

    #[test]
    fn kronecker_identity_cases() {
        let f = gf(2);
        let i2 = Matrix::identity(&f, 2);
        assert_eq!(i2.kronecker(&i2).unwrap(), Matrix::identity(&f, 4));
        let a = Matrix::from_ints(&f, &[&[1, 1], &[0, 1]]);
        let one = Matrix::from_ints(&f, &[&[1]]);
        assert_eq!(a.kronecker(&one).unwrap(), a);
        // rank(A (x) A^T) = rank(A)^2 for this full-rank A.
        let b = a.kronecker(&a.transpose()).unwrap();
        assert_eq!(b.rank(), 4);
    }

    #[test]
    fn kronecker_rank_multiplicative_exhaustive_gf2_dim2() {
        // Exhaustive over all pairs of 2x2 GF(2) matrices; larger shapes are
        // covered by the acceptance suite.
        let f = gf(2);
        let all: Vec<Matrix> = (0u32..16)
            .map(|bits| {
                Matrix::from_fn(&f, 2, 2, |r, c| {
                    f.elem_from_int((bits >> (2 * r + c) & 1) as i64)
                })
            })
            .collect();
        for a in &all {
            for b in &all {
                let k = a.kronecker(b).unwrap();
                assert_eq!(k.rank(), a.rank() * b.rank());
            }
        }
    }

    #[test]
    fn field_mismatch_rejected() {
        let a = Matrix::identity(&gf(2), 2);
        let b = Matrix::identity(&gf(3), 2);
        assert!(a.kronecker(&b).is_err());
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn sigma_patterns() {
        let f = gf(5);
        let z = Matrix::zeros(&f, 2, 3);
        assert_eq!(z.sigma().count_ones(), 0);
        let i3 = Matrix::identity(&f, 3);
        assert_eq!(i3.sigma(), BitMatrix::identity(3));
        let m = Matrix::from_ints(&f, &[&[2, 0], &[1, 3]]);
        let s = m.sigma();
        assert!(s.get(0, 0) && !s.get(0, 1) && s.get(1, 0) && s.get(1, 1));
    }

    #[test]
    fn rank_profile_pivots() {
        let f = gf(3);
        // Column 1 is 2x column 0; pivots should skip it.
        let m = Matrix::from_ints(&f, &[&[1, 2, 0], &[2, 4, 1]]);
        let prof = m.rank_profile();
        assert_eq!(prof.rank, 2);
        assert_eq!(prof.pivot_cols, vec![0, 2]);
        assert_eq!(prof.pivot_rows, vec![0, 1]);
    }

    #[test]
    fn rref_shape_and_row_space() {
        let f = gf(3);
        let m = Matrix::from_ints(&f, &[&[0, 2], &[0, 1]]);
        let (reduced, pivots) = m.rref();
        assert_eq!(pivots, vec![1]);
        assert_eq!(reduced, Matrix::from_ints(&f, &[&[0, 1], &[0, 0]]));
        // Row space preserved: stacking changes nothing.
        let stacked = m.vstack(&reduced).unwrap();
        assert_eq!(stacked.rank(), m.rank());
    }

    #[test]
    fn gpattern_reduction_matches_and_is_idempotent() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for field in [gf(2), gf(3), gf(5)] {
            for _ in 0..40 {
                let m = Matrix::random(&field, 3, 5, &mut rng);
                let (reduced, gp) = m.row_reduce_to_gpattern();
                assert_eq!(gp.matches(&reduced), Ok(true));
                assert_eq!(m.vstack(&reduced).unwrap().rank(), m.rank());
                let (again, gp2) = reduced.row_reduce_to_gpattern();
                assert_eq!(again, reduced);
                assert_eq!(gp2, gp);
            }
        }
    }

    #[test]
    fn zero_matrix_reduces_to_empty_gpattern() {
        let f = gf(3);
        let z = Matrix::zeros(&f, 2, 4);
        let (reduced, gp) = z.row_reduce_to_gpattern();
        assert_eq!(reduced, z);
        assert!(gp.one_columns().is_empty());
    }

    #[test]
    fn text_round_trip() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for field in [
            gf(2),
            gf(7),
            Field::new(FieldSpec::PrimePower { p: 2, k: 2, modulus: vec![1, 1, 1] }).unwrap(),
            Field::new(FieldSpec::Rational).unwrap(),
        ] {
            let m = Matrix::random(&field, 3, 4, &mut rng);
            let back = Matrix::parse_text(&m.to_text()).unwrap();
            assert_eq!(back, m);
        }
    }

    #[test]
    fn random_of_rank_has_requested_rank() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for field in [gf(2), gf(3)] {
            for s in 0..=3 {
                let m = Matrix::random_of_rank(&field, 6, s, &mut rng);
                assert_eq!(m.rank(), s);
            }
        }
    }

    #[test]
    fn incremental_rank_agrees_with_batch() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for field in [gf(2), gf(3), gf(5)] {
            for _ in 0..50 {
                let m = Matrix::random(&field, 5, 5, &mut rng);
                let mut inc = IncrementalRank::new(&field, 5);
                for r in 0..5 {
                    if field.is_gf2() {
                        let mut w = 0u64;
                        for c in 0..5 {
                            if !m.is_zero_at(r, c) {
                                w |= 1 << c;
                            }
                        }
                        inc.insert_bits(w);
                    } else {
                        let row: Vec<u16> = (0..5)
                            .map(|c| match m.get(r, c) {
                                FieldElem::Fin(v) => v,
                                _ => unreachable!(),
                            })
                            .collect();
                        inc.insert_fin(row);
                    }
                }
                assert_eq!(inc.rank(), m.rank());
            }
        }
    }
}
