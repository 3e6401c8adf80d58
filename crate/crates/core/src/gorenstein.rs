//! Hilbert functions, h-vectors and canonical modules of base rings.
//!
//! Base rings of transversal polymatroids are normal, so the degree-`d`
//! monomials of `K[B]` are exactly the points of the lattice `ZB` in the cone
//! with coordinate sum `m·d`. Counting those gives the Hilbert function; the
//! interior points generate the canonical module (Danilov–Stanley), and the
//! ring is Gorenstein iff that module is principal, equivalently iff the
//! h-vector is palindromic.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{self, ConeDescription, IntVector};
use crate::polymatroid::{self, BaseSet, LatticePoint, Presentation};

/// Largest ground set [`is_gorenstein`] accepts.
pub const GORENSTEIN_MAX_N: usize = 6;

/// Degree up to which lattice points are counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DegreeCap {
    /// `dim + 6`.
    #[default]
    Default,
    Fixed(usize),
}

impl DegreeCap {
    pub fn resolve(self, dim: usize) -> usize {
        match self {
            DegreeCap::Default => dim + 6,
            DegreeCap::Fixed(k) => k,
        }
    }
}

impl From<Option<usize>> for DegreeCap {
    fn from(v: Option<usize>) -> Self {
        v.map_or(DegreeCap::Default, DegreeCap::Fixed)
    }
}

/// The lattice `ZB` spanned by the base points, in Hermite normal form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemigroupLattice {
    /// Echelon basis, pivots positive, entries above each pivot reduced.
    basis: Vec<Vec<i64>>,
    pivots: Vec<usize>,
    /// Index of `ZB` in the saturated lattice `span(B) ∩ Z^n`.
    index: u64,
}

impl SemigroupLattice {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        let mut r: Vec<i64> = x.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r[..p].iter().any(|&v| v != 0) {
                return false;
            }
            if r[p] % row[p] != 0 {
                return false;
            }
            let q = r[p] / row[p];
            if q != 0 {
                for (v, b) in r.iter_mut().zip(row) {
                    *v -= q * b;
                }
            }
        }
        r.iter().all(|&v| v == 0)
    }
}

fn hermite_basis(rows: &[IntVector], n: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.entries().to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m.len() {
            break;
        }
        loop {
            let Some(best) = (r..m.len())
                .filter(|&i| !m[i][c].is_zero())
                .min_by(|&a, &b| m[a][c].abs().cmp(&m[b][c].abs()))
            else {
                break;
            };
            m.swap(r, best);
            let mut done = true;
            for i in r + 1..m.len() {
                if m[i][c].is_zero() {
                    continue;
                }
                let q = m[i][c].div_floor(&m[r][c]);
                let pivot_row = m[r].clone();
                for (v, p) in m[i].iter_mut().zip(&pivot_row) {
                    *v -= &q * p;
                }
                if !m[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if m.get(r).map_or(true, |row| row[c].is_zero()) {
            continue;
        }
        if m[r][c].is_negative() {
            for v in m[r].iter_mut() {
                *v = -&*v;
            }
        }
        let pivot_row = m[r].clone();
        for row in m.iter_mut().take(r) {
            let q = row[c].div_floor(&pivot_row[c]);
            if !q.is_zero() {
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= &q * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn lattice_of(base: &BaseSet) -> SemigroupLattice {
    let n = base.n();
    let rows: Vec<IntVector> = base.points.iter().map(IntVector::from).collect();
    let (basis, pivots) = hermite_basis(&rows, n);
    let d = basis.len();
    // Index in the saturation = gcd of the maximal minors.
    let mut g = BigInt::zero();
    for cols in (0..n).combinations(d) {
        let minor: Vec<IntVector> = basis
            .iter()
            .map(|row| IntVector::new(cols.iter().map(|&c| row[c].clone()).collect()))
            .collect();
        g = g.gcd(&geometry::determinant(&minor));
        if g == BigInt::from(1) {
            break;
        }
    }
    let index = if d == 0 { 1 } else { g.to_u64().expect("lattice index fits in u64") };
    SemigroupLattice {
        basis: basis
            .into_iter()
            .map(|r| r.iter().map(|v| v.to_i64().expect("basis entry fits in i64")).collect())
            .collect(),
        pivots,
        index,
    }
}

/// The cone of a base set together with its lattice and grading.
#[derive(Debug, Clone)]
pub struct GradedCone {
    pub cone: ConeDescription,
    pub lattice: SemigroupLattice,
    /// Coordinate sum of a degree-one element (the number of sets `m`).
    pub degree_sum: usize,
    n: usize,
    facets: Vec<Vec<i64>>,
    equations: Vec<Vec<i64>>,
}

/// Per-constraint bounds on what the remaining coordinates can contribute.
struct SuffixRange {
    min: Vec<i64>,
    max: Vec<i64>,
}

impl SuffixRange {
    fn new(a: &[i64]) -> Self {
        let n = a.len();
        let mut min = vec![0; n + 1];
        let mut max = vec![0; n + 1];
        for j in (0..n).rev() {
            min[j] = if j + 1 < n { a[j].min(min[j + 1]) } else { a[j] };
            max[j] = if j + 1 < n { a[j].max(max[j + 1]) } else { a[j] };
        }
        SuffixRange { min, max }
    }
}

impl GradedCone {
    pub fn new(base: &BaseSet) -> Result<Self> {
        if base.is_empty() {
            return Err(Error::domain("empty base set"));
        }
        let gens: Vec<IntVector> = base.points.iter().map(IntVector::from).collect();
        let cone = geometry::facet_enumeration(&gens)?;
        let to_i64 = |v: &IntVector| {
            v.to_i64s()
                .ok_or_else(|| Error::Budget("normal entries exceed i64".into()))
        };
        let facets = cone
            .facets
            .iter()
            .map(|f| to_i64(f.normal()))
            .collect::<Result<Vec<_>>>()?;
        let equations = cone.span_equations.iter().map(to_i64).collect::<Result<Vec<_>>>()?;
        Ok(GradedCone {
            lattice: lattice_of(base),
            degree_sum: base.degree_sum(),
            n: base.n(),
            cone,
            facets,
            equations,
        })
    }

    pub fn dim(&self) -> usize {
        self.cone.dim
    }

    /// Calls `visit` for each lattice point of degree `d` in the cone (or its
    /// relative interior), in lexicographic order.
    pub fn for_each_point(&self, d: usize, interior: bool, mut visit: impl FnMut(&[i64])) {
        let total = (self.degree_sum * d) as i64;
        let facet_ranges: Vec<SuffixRange> = self.facets.iter().map(|a| SuffixRange::new(a)).collect();
        let eq_ranges: Vec<SuffixRange> = self.equations.iter().map(|a| SuffixRange::new(a)).collect();
        let mut x = vec![0i64; self.n];
        let mut facet_partial = vec![0i64; self.facets.len()];
        let mut eq_partial = vec![0i64; self.equations.len()];
        let mut ctx = Walk {
            cone: self,
            interior,
            facet_ranges: &facet_ranges,
            eq_ranges: &eq_ranges,
            x: &mut x,
            facet_partial: &mut facet_partial,
            eq_partial: &mut eq_partial,
        };
        ctx.descend(0, total, &mut visit);
    }

    pub fn points_at_degree(&self, d: usize, interior: bool) -> Vec<LatticePoint> {
        let mut out = Vec::new();
        self.for_each_point(d, interior, |x| {
            out.push(LatticePoint::from_vec_unchecked(x.to_vec()))
        });
        out
    }

    pub fn hilbert_function(&self, d: usize) -> u64 {
        let mut count = 0u64;
        self.for_each_point(d, false, |_| count += 1);
        count
    }

    /// Whether `x` lies in the semigroup `cone ∩ ZB`.
    pub fn semigroup_contains(&self, x: &[i64]) -> bool {
        x.iter().all(|&v| v >= 0)
            && self.equations.iter().all(|a| dot(a, x) == 0)
            && self.facets.iter().all(|a| dot(a, x) >= 0)
            && self.lattice.contains(x)
    }
}

fn dot(a: &[i64], x: &[i64]) -> i64 {
    a.iter().zip(x).map(|(p, q)| p * q).sum()
}

struct Walk<'a> {
    cone: &'a GradedCone,
    interior: bool,
    facet_ranges: &'a [SuffixRange],
    eq_ranges: &'a [SuffixRange],
    x: &'a mut Vec<i64>,
    facet_partial: &'a mut Vec<i64>,
    eq_partial: &'a mut Vec<i64>,
}

impl Walk<'_> {
    fn feasible(&self, j: usize, rem: i64) -> bool {
        for (p, r) in self.facet_partial.iter().zip(self.facet_ranges) {
            let best = p + rem * r.max[j];
            if best < 0 || (self.interior && best == 0) {
                return false;
            }
        }
        for (p, r) in self.eq_partial.iter().zip(self.eq_ranges) {
            if p + rem * r.max[j] < 0 || p + rem * r.min[j] > 0 {
                return false;
            }
        }
        true
    }

    fn descend(&mut self, j: usize, rem: i64, visit: &mut impl FnMut(&[i64])) {
        let n = self.cone.n;
        if j + 1 == n {
            self.assign(j, rem);
            let ok = self
                .facet_partial
                .iter()
                .all(|&v| if self.interior { v > 0 } else { v >= 0 })
                && self.eq_partial.iter().all(|&v| v == 0)
                && self.cone.lattice.contains(self.x);
            if ok {
                visit(self.x);
            }
            self.assign(j, -rem);
            return;
        }
        if !self.feasible(j, rem) {
            return;
        }
        for v in 0..=rem {
            self.assign(j, v);
            if self.feasible(j + 1, rem - v) {
                self.descend(j + 1, rem - v, visit);
            }
            self.assign(j, -v);
        }
    }

    /// Adds `delta` to coordinate `j` and updates the partial sums.
    fn assign(&mut self, j: usize, delta: i64) {
        self.x[j] += delta;
        for (p, a) in self.facet_partial.iter_mut().zip(&self.cone.facets) {
            *p += a[j] * delta;
        }
        for (p, a) in self.eq_partial.iter_mut().zip(&self.cone.equations) {
            *p += a[j] * delta;
        }
    }
}

/// h-vector of the Hilbert series `h(t) / (1-t)^dim`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    pub dim: usize,
    pub h: Vec<u64>,
    /// `H(0), …, H(degree_cap)` as counted.
    pub hilbert_function: Vec<u64>,
    pub degree_cap: usize,
}

impl HilbertSeries {
    pub fn is_palindromic(&self) -> bool {
        self.h.iter().eq(self.h.iter().rev())
    }
}

fn binomial(n: i128, k: i128) -> i128 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1i128, |acc, i| acc * (n - i) / (i + 1))
}

fn check_cap(cap: usize, dim: usize) -> Result<()> {
    if cap < dim + 3 {
        return Err(Error::domain(format!(
            "degree cap {cap} is below dim + 3 = {}",
            dim + 3
        )));
    }
    Ok(())
}

fn series_from_counts(dim: usize, counts: Vec<u64>, cap: usize) -> Result<HilbertSeries> {
    let d = dim as i128;
    let h_full: Vec<i128> = (0..=cap)
        .map(|j| {
            (0..=j.min(dim))
                .map(|i| {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    sign * binomial(d, i as i128) * counts[j - i] as i128
                })
                .sum()
        })
        .collect();
    let last = h_full.iter().rposition(|&v| v != 0).unwrap_or(0);
    let window = dim + 2;
    if cap - last < window {
        return Err(Error::Budget(format!(
            "h-vector did not stabilize within degree cap {cap} \
             (needs {window} trailing zeros); retry with a degree cap of at least {}",
            last + window
        )));
    }
    if let Some(v) = h_full.iter().find(|&&v| v < 0) {
        return Err(Error::Inconsistency(format!("negative h-vector entry {v}")));
    }
    let h: Vec<u64> = h_full[..=last].iter().map(|&v| v as u64).collect();
    for (deg, &counted) in counts.iter().enumerate() {
        let rebuilt: i128 = h
            .iter()
            .enumerate()
            .filter(|(j, _)| *j <= deg)
            .map(|(j, &hj)| hj as i128 * binomial((deg - j + dim) as i128 - 1, d - 1))
            .sum();
        if rebuilt != counted as i128 {
            return Err(Error::Inconsistency(format!(
                "h-vector reconstructs H({deg}) = {rebuilt}, counted {counted}"
            )));
        }
    }
    Ok(HilbertSeries {
        dim,
        h,
        hilbert_function: counts,
        degree_cap: cap,
    })
}

/// Counts `H(0..=cap)` and derives the h-vector. Errors if the numerator has
/// not stabilized (fewer than `dim + 2` trailing zeros up to the cap).
pub fn h_vector(base: &BaseSet, cap: DegreeCap) -> Result<HilbertSeries> {
    let graded = GradedCone::new(base)?;
    h_vector_of(&graded, cap)
}

pub fn h_vector_of(graded: &GradedCone, cap: DegreeCap) -> Result<HilbertSeries> {
    let dim = graded.dim();
    if dim == 0 {
        return Err(Error::domain("zero-dimensional cone has no Hilbert series"));
    }
    let cap = cap.resolve(dim);
    check_cap(cap, dim)?;
    let counts: Vec<u64> = (0..=cap)
        .into_par_iter()
        .map(|d| graded.hilbert_function(d))
        .collect();
    series_from_counts(dim, counts, cap)
}

/// Minimal interior lattice points up to degree `cap`: the monomial
/// generators of the canonical module found within the cap.
pub fn canonical_generators(base: &BaseSet, cap: DegreeCap) -> Result<Vec<LatticePoint>> {
    let graded = GradedCone::new(base)?;
    canonical_generators_of(&graded, cap)
}

pub fn canonical_generators_of(graded: &GradedCone, cap: DegreeCap) -> Result<Vec<LatticePoint>> {
    let cap = cap.resolve(graded.dim());
    if cap < 2 {
        return Err(Error::domain(format!("degree cap {cap} is below 2")));
    }
    let per_degree: Vec<Vec<LatticePoint>> = (1..=cap)
        .into_par_iter()
        .map(|d| graded.points_at_degree(d, true))
        .collect();
    let mut gens: Vec<LatticePoint> = Vec::new();
    let mut diff = vec![0i64; graded.n];
    for layer in per_degree {
        let lower = gens.len();
        for p in layer {
            // Points of equal degree never differ by a nonzero semigroup element.
            let covered = gens[..lower].iter().any(|g| {
                for ((d, a), b) in diff.iter_mut().zip(p.coords()).zip(g.coords()) {
                    *d = a - b;
                }
                graded.semigroup_contains(&diff)
            });
            if !covered {
                gens.push(p);
            }
        }
    }
    Ok(gens)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertSummary {
    pub presentation: String,
    pub dim: usize,
    pub h: Vec<u64>,
    pub hilbert_function: Vec<u64>,
    pub degree_cap: usize,
    pub lattice_index: u64,
    pub gorenstein: bool,
    pub canonical_generators: Vec<LatticePoint>,
}

/// Decides the Gorenstein property by palindromicity of the h-vector and
/// cross-checks it against principality of the canonical module.
pub fn is_gorenstein(p: &Presentation, cap: DegreeCap) -> Result<HilbertSummary> {
    if p.n() > GORENSTEIN_MAX_N {
        return Err(Error::Budget(format!(
            "Gorenstein test supports n <= {GORENSTEIN_MAX_N}, got {}",
            p.n()
        )));
    }
    let base = polymatroid::enumerate_bases(p);
    let graded = GradedCone::new(&base)?;
    let (series, gens) = rayon::join(
        || h_vector_of(&graded, cap),
        || canonical_generators_of(&graded, cap),
    );
    let series = series?;
    let gens = gens?;
    let palindromic = series.is_palindromic();
    if palindromic != (gens.len() == 1) {
        return Err(Error::Inconsistency(format!(
            "{p}: h-vector {:?} is {}palindromic but {} canonical generators were found up to degree {}",
            series.h,
            if palindromic { "" } else { "not " },
            gens.len(),
            series.degree_cap
        )));
    }
    Ok(HilbertSummary {
        presentation: p.to_string(),
        dim: series.dim,
        h: series.h,
        hilbert_function: series.hilbert_function,
        degree_cap: series.degree_cap,
        lattice_index: graded.lattice.index(),
        gorenstein: palindromic,
        canonical_generators: gens,
    })
}

/// Number of distinct sums of `d` base points, for `d = 0..=max_degree`.
/// Matches [`GradedCone::hilbert_function`] exactly when the semigroup is
/// normal.
pub fn multiplicative_counts(base: &BaseSet, max_degree: usize) -> Vec<u64> {
    let mut layer: BTreeSet<Vec<i64>> = BTreeSet::new();
    layer.insert(vec![0; base.n()]);
    let mut out = vec![1u64];
    for _ in 0..max_degree {
        let next: BTreeSet<Vec<i64>> = layer
            .iter()
            .flat_map(|s| {
                base.points
                    .iter()
                    .map(move |b| s.iter().zip(b.coords()).map(|(x, y)| x + y).collect())
            })
            .collect();
        out.push(next.len() as u64);
        layer = next;
    }
    out
}
