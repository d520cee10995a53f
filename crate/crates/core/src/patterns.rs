//! Fooling-set patterns, their random models Q(n) and R(n,p), the lower
//! triangle graph whose independent sets are triangular principal submatrices,
//! and exact or greedy maximum-independent-set search.
//!
//! Sampling Q(n) draws one of three states per unordered pair independently;
//! pattern bits decompose over pairs, so this is exactly uniform over all
//! 3^C(n,2) fooling-set patterns. R(n,p) draws a uniform m-subset of pairs by
//! partial Fisher-Yates, then orients each chosen pair with a fair coin.
//!
//! Samplers take explicit (seed, stream) values and are reproducible across
//! platforms and thread schedules.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, PatternViolation, Result};
use crate::ffield::Field;
use crate::matrix::{BitMatrix, Matrix};

/// A reproducible random stream: identical (seed, stream) pairs yield
/// identical draws regardless of scheduling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RngStream {
    pub seed: u64,
    pub stream: u64,
}

impl RngStream {
    pub fn new(seed: u64, stream: u64) -> RngStream {
        RngStream { seed, stream }
    }

    pub fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream);
        rng
    }
}

/// Validated fooling-set pattern: unit diagonal, and never both (k,l) and
/// (l,k) set off the diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FoolingPattern {
    bits: BitMatrix,
}

impl FoolingPattern {
    /// Validates a square bit matrix, reporting the first offending cell in
    /// row-major scan order.
    pub fn from_bits(bits: BitMatrix) -> Result<FoolingPattern> {
        if bits.rows() != bits.cols() {
            return Err(Error::DimensionMismatch(format!(
                "fooling pattern must be square, got {}x{}",
                bits.rows(),
                bits.cols()
            )));
        }
        let n = bits.rows();
        for k in 0..n {
            if !bits.get(k, k) {
                return Err(Error::InvalidPattern {
                    row: k,
                    col: k,
                    reason: PatternViolation::ZeroDiagonal,
                });
            }
        }
        for k in 0..n {
            for l in k + 1..n {
                if bits.get(k, l) && bits.get(l, k) {
                    return Err(Error::InvalidPattern {
                        row: k,
                        col: l,
                        reason: PatternViolation::OppositePair,
                    });
                }
            }
        }
        Ok(FoolingPattern { bits })
    }

    pub fn identity(n: usize) -> FoolingPattern {
        FoolingPattern { bits: BitMatrix::identity(n) }
    }

    pub fn n(&self) -> usize {
        self.bits.rows()
    }

    #[inline]
    pub fn bit(&self, r: usize, c: usize) -> bool {
        self.bits.get(r, c)
    }

    pub fn bits(&self) -> &BitMatrix {
        &self.bits
    }

    pub fn off_diagonal_ones(&self) -> usize {
        self.bits.count_ones() - self.n()
    }

    /// The number of off-diagonal ones a density-p pattern must carry:
    /// ceil(p * n(n-1)/2). Density must lie in ]0,1].
    pub fn density_count(n: usize, p: f64) -> Result<usize> {
        if n == 0 {
            return Err(Error::Domain("pattern size must be at least 1".into()));
        }
        if !(p > 0.0 && p <= 1.0) {
            return Err(Error::Domain(format!("density {p} outside ]0,1]")));
        }
        let pairs = n * (n - 1) / 2;
        Ok((p * pairs as f64).ceil() as usize)
    }

    /// The 0/1 realization over `field`. Over GF(2) this is the unique matrix
    /// with this zero-nonzero pattern.
    pub fn to_matrix(&self, field: &Field) -> Matrix {
        Matrix::from_fn(field, self.n(), self.n(), |r, c| {
            if self.bit(r, c) {
                field.one()
            } else {
                field.zero()
            }
        })
    }

    /// Text format: size on the first line, then n lines of 0/1 characters.
    pub fn to_text(&self) -> String {
        let n = self.n();
        let mut out = format!("{n}\n");
        for r in 0..n {
            for c in 0..n {
                out.push(if self.bit(r, c) { '1' } else { '0' });
            }
            out.push('\n');
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<FoolingPattern> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let n: usize = lines
            .next()
            .and_then(|l| l.trim().parse().ok())
            .ok_or_else(|| Error::Parse("missing pattern size".into()))?;
        let mut bits = BitMatrix::new(n, n);
        for r in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing pattern row {r}")))?
                .trim();
            if line.len() != n {
                return Err(Error::Parse(format!(
                    "pattern row {r} has {} characters, expected {n}",
                    line.len()
                )));
            }
            for (c, ch) in line.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => bits.set(r, c, true),
                    _ => return Err(Error::Parse(format!("bad pattern character `{ch}`"))),
                }
            }
        }
        FoolingPattern::from_bits(bits)
    }
}

/// Uniform sample from all fooling-set patterns of size n.
pub fn sample_q(n: usize, stream: &RngStream) -> FoolingPattern {
    let mut rng = stream.rng();
    let mut bits = BitMatrix::identity(n);
    for k in 0..n {
        for l in k + 1..n {
            match rng.random_range(0..3u32) {
                0 => {}
                1 => bits.set(k, l, true),
                _ => bits.set(l, k, true),
            }
        }
    }
    debug_assert!(FoolingPattern::from_bits(bits.clone()).is_ok());
    FoolingPattern { bits }
}

/// Uniform sample from all fooling-set patterns of size n with density p:
/// exactly ceil(p * C(n,2)) off-diagonal ones on every draw.
pub fn sample_r(n: usize, p: f64, stream: &RngStream) -> Result<FoolingPattern> {
    if n < 2 {
        return Err(Error::Domain(
            "density sampling needs n >= 2 (no off-diagonal pairs otherwise)".into(),
        ));
    }
    let m = FoolingPattern::density_count(n, p)?;
    let mut rng = stream.rng();
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(n * (n - 1) / 2);
    for k in 0..n {
        for l in k + 1..n {
            pairs.push((k, l));
        }
    }
    let mut bits = BitMatrix::identity(n);
    for i in 0..m {
        let j = rng.random_range(i..pairs.len());
        pairs.swap(i, j);
        let (k, l) = pairs[i];
        if rng.random_range(0..2u32) == 0 {
            bits.set(k, l, true);
        } else {
            bits.set(l, k, true);
        }
    }
    debug_assert!(FoolingPattern::from_bits(bits.clone()).is_ok());
    Ok(FoolingPattern { bits })
}

/// Erdos-Renyi graph G(n,q): each edge present independently with
/// probability q.
pub fn sample_gnq(n: usize, q: f64, stream: &RngStream) -> Result<PatternGraph> {
    if !(0.0..=1.0).contains(&q) {
        return Err(Error::Domain(format!("edge probability {q} outside [0,1]")));
    }
    let mut rng = stream.rng();
    let mut g = PatternGraph::empty(n);
    for k in 0..n {
        for l in k + 1..n {
            if rng.random_bool(q) {
                g.add_edge(k, l);
            }
        }
    }
    Ok(g)
}

/// Simple undirected graph on [n], adjacency stored as bitset rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternGraph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl PatternGraph {
    pub fn empty(n: usize) -> PatternGraph {
        let words = n.div_ceil(64).max(1);
        PatternGraph { n, words, adj: vec![0; n * words] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> PatternGraph {
        let mut g = PatternGraph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "no self-loops");
        assert!(u < self.n && v < self.n);
        self.adj[u * self.words + v / 64] |= 1 << (v % 64);
        self.adj[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    #[inline]
    fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }
}

/// Graph of the strictly lower triangle: edge {k,l} for k > l iff bit (k,l)
/// is set. Its independent sets are exactly the index sets whose principal
/// submatrix is triangular with nonzero diagonal.
pub fn pattern_graph(p: &FoolingPattern) -> PatternGraph {
    let mut g = PatternGraph::empty(p.n());
    for k in 0..p.n() {
        for l in 0..k {
            if p.bit(k, l) {
                g.add_edge(k, l);
            }
        }
    }
    g
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MisMode {
    /// Branch and bound with a greedy clique-cover upper bound; intended for
    /// n up to ~200 sparse or ~40 dense.
    Exact,
    /// Maximal set grown by ascending degree; a lower bound on the exact size.
    Greedy,
}

/// Maximum (exact) or maximal (greedy) independent set, deterministic with
/// lowest-index tie-breaking. The returned vertices are sorted.
pub fn max_independent_set(g: &PatternGraph, mode: MisMode) -> Vec<usize> {
    let mut out = match mode {
        MisMode::Greedy => greedy_mis(g),
        MisMode::Exact => {
            let solver = MisSolver { g, words: g.n.div_ceil(64).max(1) };
            let mut full = vec![0u64; solver.words];
            for v in 0..g.n {
                full[v / 64] |= 1 << (v % 64);
            }
            solver.mis(full).1
        }
    };
    out.sort_unstable();
    debug_assert!(is_independent(g, &out));
    out
}

/// Size of the triangular-submatrix lower bound on the minimum rank of any
/// matrix with this pattern, over every field, together with the witness
/// index set.
pub fn triangular_bound(p: &FoolingPattern, mode: MisMode) -> Vec<usize> {
    max_independent_set(&pattern_graph(p), mode)
}

pub fn is_independent(g: &PatternGraph, vertices: &[usize]) -> bool {
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            if g.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

fn greedy_mis(g: &PatternGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut chosen = Vec::new();
    for v in order {
        if chosen.iter().all(|&u| !g.has_edge(u, v)) {
            chosen.push(v);
        }
    }
    chosen
}

struct MisSolver<'a> {
    g: &'a PatternGraph,
    words: usize,
}

impl MisSolver<'_> {
    /// Exact maximum independent set of the subgraph induced by `p`.
    fn mis(&self, mut p: Vec<u64>) -> (usize, Vec<usize>) {
        let mut taken: Vec<usize> = Vec::new();
        // Degree-0 and degree-1 reductions, lowest index first.
        loop {
            let mut changed = false;
            let vertices: Vec<usize> = iter_set(&p).collect();
            for v in vertices {
                if !set_contains(&p, v) {
                    continue;
                }
                let deg = self.degree_in(&p, v);
                if deg == 0 {
                    taken.push(v);
                    set_remove(&mut p, v);
                    changed = true;
                } else if deg == 1 {
                    let u = self.neighbors_in(&p, v).next().unwrap();
                    taken.push(v);
                    set_remove(&mut p, v);
                    set_remove(&mut p, u);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if set_is_empty(&p) {
            let size = taken.len();
            return (size, taken);
        }
        let comps = self.components(&p);
        if comps.len() > 1 {
            for comp in comps {
                let (_, set) = self.mis(comp);
                taken.extend(set);
            }
            let size = taken.len();
            return (size, taken);
        }
        // Connected, min degree >= 2. If max degree is 2 this is a cycle.
        let max_deg_v = iter_set(&p)
            .max_by_key(|&v| (self.degree_in(&p, v), usize::MAX - v))
            .unwrap();
        if self.degree_in(&p, max_deg_v) <= 2 {
            taken.extend(self.cycle_mis(&p));
            let size = taken.len();
            return (size, taken);
        }
        // Branch on the highest-degree vertex, include first.
        let v = max_deg_v;
        let mut p_in = p.clone();
        set_remove(&mut p_in, v);
        for u in self.neighbors_in(&p, v).collect::<Vec<_>>() {
            set_remove(&mut p_in, u);
        }
        let (s_in, mut set_in) = self.mis(p_in);
        set_in.push(v);
        let s_in = s_in + 1;
        let mut p_ex = p.clone();
        set_remove(&mut p_ex, v);
        // The exclude branch cannot win if a clique cover already caps it.
        if self.clique_cover_bound(&p_ex) <= s_in {
            taken.extend(set_in);
            let size = taken.len();
            return (size, taken);
        }
        let (s_ex, set_ex) = self.mis(p_ex);
        if s_in >= s_ex {
            taken.extend(set_in);
        } else {
            taken.extend(set_ex);
        }
        let size = taken.len();
        (size, taken)
    }

    fn degree_in(&self, p: &[u64], v: usize) -> usize {
        self.g
            .row(v)
            .iter()
            .zip(p.iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    fn neighbors_in<'b>(&'b self, p: &'b [u64], v: usize) -> impl Iterator<Item = usize> + 'b {
        let row = self.g.row(v);
        (0..self.words).flat_map(move |w| {
            let mut bits = row[w] & p[w];
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(w * 64 + b)
                }
            })
        })
    }

    fn components(&self, p: &[u64]) -> Vec<Vec<u64>> {
        let mut remaining = p.to_vec();
        let mut comps = Vec::new();
        while let Some(start) = iter_set(&remaining).next() {
            let mut comp = vec![0u64; self.words];
            let mut queue = vec![start];
            set_remove(&mut remaining, start);
            set_insert(&mut comp, start);
            while let Some(v) = queue.pop() {
                for u in self.neighbors_in(&remaining, v).collect::<Vec<_>>() {
                    set_remove(&mut remaining, u);
                    set_insert(&mut comp, u);
                    queue.push(u);
                }
            }
            comps.push(comp);
        }
        comps
    }

    /// Independent set of a cycle: alternate vertices walking from the lowest
    /// index, floor(L/2) of them.
    fn cycle_mis(&self, p: &[u64]) -> Vec<usize> {
        let start = iter_set(p).next().unwrap();
        let mut order = vec![start];
        let mut prev = start;
        let mut cur = self.neighbors_in(p, start).next().unwrap();
        while cur != start {
            order.push(cur);
            let next = self
                .neighbors_in(p, cur)
                .find(|&u| u != prev)
                .expect("cycle vertex has two neighbors");
            prev = cur;
            cur = next;
        }
        let take = order.len() / 2;
        (0..take).map(|i| order[2 * i]).collect()
    }

    /// Greedy clique cover of the induced subgraph; its size bounds the
    /// independence number from above.
    fn clique_cover_bound(&self, p: &[u64]) -> usize {
        let mut remaining = p.to_vec();
        let mut cliques = 0;
        while let Some(v) = iter_set(&remaining).next() {
            set_remove(&mut remaining, v);
            let mut clique = vec![v];
            let candidates: Vec<usize> = iter_set(&remaining).collect();
            for u in candidates {
                if clique.iter().all(|&c| self.g.has_edge(c, u)) {
                    clique.push(u);
                    set_remove(&mut remaining, u);
                }
            }
            cliques += 1;
        }
        cliques
    }
}

#[inline]
fn set_contains(p: &[u64], v: usize) -> bool {
    p[v / 64] >> (v % 64) & 1 == 1
}
#[inline]
fn set_insert(p: &mut [u64], v: usize) {
    p[v / 64] |= 1 << (v % 64);
}
#[inline]
fn set_remove(p: &mut [u64], v: usize) {
    p[v / 64] &= !(1 << (v % 64));
}
fn set_is_empty(p: &[u64]) -> bool {
    p.iter().all(|&w| w == 0)
}
fn iter_set(p: &[u64]) -> impl Iterator<Item = usize> + '_ {
    p.iter().enumerate().flat_map(|(w, &word)| {
        let mut bits = word;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + b)
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn validation_cases() {
        assert!(FoolingPattern::from_bits(BitMatrix::identity(3)).is_ok());

        let mut both = BitMatrix::identity(2);
        both.set(0, 1, true);
        both.set(1, 0, true);
        match FoolingPattern::from_bits(both) {
            Err(Error::InvalidPattern { row: 0, col: 1, reason: PatternViolation::OppositePair }) => {}
            other => panic!("expected opposite-pair error, got {other:?}"),
        }

        let mut no_diag = BitMatrix::new(2, 2);
        no_diag.set(0, 0, true);
        match FoolingPattern::from_bits(no_diag) {
            Err(Error::InvalidPattern { row: 1, col: 1, reason: PatternViolation::ZeroDiagonal }) => {}
            other => panic!("expected zero-diagonal error, got {other:?}"),
        }

        // Densest possible pattern: all-ones upper triangle.
        let mut upper = BitMatrix::identity(4);
        for k in 0..4 {
            for l in k + 1..4 {
                upper.set(k, l, true);
            }
        }
        let p = FoolingPattern::from_bits(upper).unwrap();
        assert_eq!(p.off_diagonal_ones(), 6);
        assert_eq!(FoolingPattern::density_count(4, 1.0).unwrap(), 6);
    }

    #[test]
    fn density_count_examples() {
        assert_eq!(FoolingPattern::density_count(5, 0.5).unwrap(), 5);
        assert_eq!(FoolingPattern::density_count(7, 1.0).unwrap(), 21);
        assert_eq!(FoolingPattern::density_count(4, 0.3).unwrap(), 2);
        assert_eq!(FoolingPattern::density_count(1, 1.0).unwrap(), 0);
        assert!(FoolingPattern::density_count(4, 0.0).is_err());
        assert!(FoolingPattern::density_count(4, 1.5).is_err());
    }

    #[test]
    fn sample_q_size_one_is_identity() {
        for seed in 0..5 {
            let p = sample_q(1, &RngStream::new(seed, 0));
            assert_eq!(p, FoolingPattern::identity(1));
        }
    }

    /// All valid 3x3 fooling patterns by exhaustive enumeration of the six
    /// off-diagonal bits.
    fn all_patterns_3() -> Vec<FoolingPattern> {
        let cells = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)];
        let mut out = Vec::new();
        for mask in 0u32..64 {
            let mut bits = BitMatrix::identity(3);
            for (i, &(r, c)) in cells.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    bits.set(r, c, true);
                }
            }
            if let Ok(p) = FoolingPattern::from_bits(bits) {
                out.push(p);
            }
        }
        out
    }

    #[test]
    fn q3_support_is_27_patterns() {
        let all = all_patterns_3();
        assert_eq!(all.len(), 27);
        let mut seen = std::collections::HashSet::new();
        for i in 0..2000u64 {
            seen.insert(sample_q(3, &RngStream::new(42, i)).to_text());
        }
        assert_eq!(seen.len(), 27);
    }

    #[test]
    fn sample_r_exact_density_every_draw() {
        for (n, p) in [(5, 0.5), (4, 1.0), (8, 0.25), (2, 1.0)] {
            let m = FoolingPattern::density_count(n, p).unwrap();
            for i in 0..50 {
                let pat = sample_r(n, p, &RngStream::new(7, i)).unwrap();
                assert_eq!(pat.off_diagonal_ones(), m);
            }
        }
        assert!(sample_r(1, 0.5, &RngStream::new(0, 0)).is_err());
        assert!(sample_r(4, 0.0, &RngStream::new(0, 0)).is_err());
    }

    #[test]
    fn sample_r_n2_density1_both_orientations() {
        let mut seen = std::collections::HashSet::new();
        for i in 0..100 {
            seen.insert(sample_r(2, 1.0, &RngStream::new(3, i)).unwrap().to_text());
        }
        assert_eq!(seen.len(), 2);
    }

    #[test]
    fn reproducible_streams() {
        let a = sample_q(6, &RngStream::new(123, 9));
        let b = sample_q(6, &RngStream::new(123, 9));
        assert_eq!(a, b);
        let c = sample_q(6, &RngStream::new(123, 10));
        assert_ne!(a, c);
    }

    #[test]
    fn pattern_graph_cases() {
        assert_eq!(pattern_graph(&FoolingPattern::identity(4)).edge_count(), 0);

        let mut lower = BitMatrix::identity(4);
        for k in 0..4 {
            for l in 0..k {
                lower.set(k, l, true);
            }
        }
        let g = pattern_graph(&FoolingPattern::from_bits(lower).unwrap());
        assert_eq!(g.edge_count(), 6);

        let mut upper = BitMatrix::identity(4);
        for k in 0..4 {
            for l in k + 1..4 {
                upper.set(k, l, true);
            }
        }
        let g = pattern_graph(&FoolingPattern::from_bits(upper).unwrap());
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn mis_simple_graphs() {
        let empty = PatternGraph::empty(5);
        assert_eq!(max_independent_set(&empty, MisMode::Exact).len(), 5);

        let mut complete = PatternGraph::empty(4);
        for u in 0..4 {
            for v in u + 1..4 {
                complete.add_edge(u, v);
            }
        }
        assert_eq!(max_independent_set(&complete, MisMode::Exact).len(), 1);

        let cycle5 =
            PatternGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(max_independent_set(&cycle5, MisMode::Exact).len(), 2);
    }

    /// Brute-force MIS by subset enumeration, for n <= 20.
    fn brute_mis_size(g: &PatternGraph) -> usize {
        let n = g.n();
        let mut best = 0;
        for mask in 0u32..1 << n {
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if set.len() > best && is_independent(g, &set) {
                best = set.len();
            }
        }
        best
    }

    #[test]
    fn triangular_bound_cases() {
        assert_eq!(triangular_bound(&FoolingPattern::identity(6), MisMode::Exact).len(), 6);

        let mut upper = BitMatrix::identity(6);
        for k in 0..6 {
            for l in k + 1..6 {
                upper.set(k, l, true);
            }
        }
        let p = FoolingPattern::from_bits(upper).unwrap();
        assert_eq!(triangular_bound(&p, MisMode::Exact).len(), 6);

        for i in 0..10 {
            let p = sample_q(9, &RngStream::new(5, i));
            let b = triangular_bound(&p, MisMode::Exact).len();
            assert!((1..=9).contains(&b));
        }
    }

    #[test]
    fn triangular_witness_is_triangular_with_unit_diagonal() {
        for i in 0..20 {
            let p = sample_q(8, &RngStream::new(11, i));
            let witness = triangular_bound(&p, MisMode::Exact);
            for (a, &k) in witness.iter().enumerate() {
                assert!(p.bit(k, k));
                for &l in &witness[..a] {
                    // k > l: the strictly-lower-triangle cell must be zero.
                    assert!(!p.bit(k, l));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn exact_mis_matches_brute_force(n in 1usize..12, edges in prop::collection::vec((0usize..12, 0usize..12), 0..40)) {
            let edges: Vec<(usize, usize)> = edges
                .into_iter()
                .filter(|&(u, v)| u < n && v < n && u != v)
                .collect();
            let g = PatternGraph::from_edges(n, &edges);
            let exact = max_independent_set(&g, MisMode::Exact);
            prop_assert!(is_independent(&g, &exact));
            prop_assert_eq!(exact.len(), brute_mis_size(&g));
            let greedy = max_independent_set(&g, MisMode::Greedy);
            prop_assert!(is_independent(&g, &greedy));
            prop_assert!(greedy.len() <= exact.len());
        }

        #[test]
        fn sampled_patterns_always_validate(n in 2usize..10, seed in 0u64..500, p in 0.01f64..1.0) {
            let q = sample_q(n, &RngStream::new(seed, 0));
            prop_assert!(FoolingPattern::from_bits(q.bits().clone()).is_ok());
            let r = sample_r(n, p, &RngStream::new(seed, 1)).unwrap();
            prop_assert!(FoolingPattern::from_bits(r.bits().clone()).is_ok());
        }
    }

    #[test]
    fn gnq_extremes() {
        let empty = sample_gnq(6, 0.0, &RngStream::new(1, 0)).unwrap();
        assert_eq!(empty.edge_count(), 0);
        let complete = sample_gnq(6, 1.0, &RngStream::new(1, 0)).unwrap();
        assert_eq!(complete.edge_count(), 15);
        assert!(sample_gnq(6, 1.5, &RngStream::new(1, 0)).is_err());
    }

    #[test]
    fn gnq_edge_count_near_mean() {
        // n=100, q=0.5: mean C(100,2)/2 = 2475, sigma = sqrt(4950 * 0.25) ~ 35.2.
        let g = sample_gnq(100, 0.5, &RngStream::new(99, 0)).unwrap();
        let e = g.edge_count() as f64;
        let sigma = (4950.0f64 * 0.25).sqrt();
        assert!((e - 2475.0).abs() < 4.0 * sigma, "edges {e}");
    }
}
