//! Exact integer linear algebra and polyhedral duality.
//!
//! Facets of a finitely generated cone are computed with the double
//! description method: the polar cone `{a : <a, g> >= 0 for all g}` is built
//! one generator constraint at a time, and its extreme rays are the facet
//! normals. Every step is a Fourier–Motzkin combination of a positive and a
//! negative ray, reduced by gcd, and kept only if the two rays are adjacent
//! (combinatorial test). All arithmetic is on arbitrary-precision integers or
//! exact rationals.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polymatroid::LatticePoint;

/// A vector of arbitrary-precision integers, ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        IntVector(entries)
    }

    pub fn from_i64s(entries: &[i64]) -> Self {
        IntVector(entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn zeros(n: usize) -> Self {
        IntVector(vec![BigInt::zero(); n])
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &IntVector) -> BigInt {
        assert_eq!(self.len(), other.len(), "dot product of unequal lengths");
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn dot_i64(&self, other: &[i64]) -> BigInt {
        assert_eq!(self.len(), other.len(), "dot product of unequal lengths");
        self.0
            .iter()
            .zip(other)
            .map(|(a, &b)| a * BigInt::from(b))
            .sum()
    }

    /// Entries as `i64`, or `None` if any entry does not fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.0.iter().map(ToPrimitive::to_i64).collect()
    }

    /// gcd of the absolute values of the entries; zero for the zero vector.
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, e| g.gcd(e))
    }
}

impl From<&LatticePoint> for IntVector {
    fn from(p: &LatticePoint) -> Self {
        IntVector::from_i64s(p.coords())
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

impl Serialize for IntVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for e in &self.0 {
            match e.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&e.to_string())?,
            }
        }
        seq.end()
    }
}

/// The closed halfspace `{x : <normal, x> >= 0}` with a primitive normal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Halfspace {
    normal: IntVector,
}

impl Halfspace {
    /// Builds the halfspace of `primitive(normal)`.
    pub fn new(normal: IntVector) -> Result<Self> {
        Ok(Halfspace {
            normal: primitive(&normal)?,
        })
    }

    pub fn normal(&self) -> &IntVector {
        &self.normal
    }

    pub fn eval(&self, x: &IntVector) -> BigInt {
        self.normal.dot(x)
    }

    pub fn eval_i64(&self, x: &[i64]) -> BigInt {
        self.normal.dot_i64(x)
    }
}

impl fmt::Display for Halfspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.normal)
    }
}

/// A cone given both by generators and by its span equations and facets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConeDescription {
    pub ambient_dim: usize,
    /// Input generators, deduplicated and sorted.
    pub generators: Vec<IntVector>,
    /// Primitive `c` with `<c, x> = 0` on the linear span of the cone.
    pub span_equations: Vec<IntVector>,
    /// Irredundant inward facet halfspaces, sorted. For cones that are not
    /// full-dimensional each normal is the unique primitive one lying in the
    /// linear span.
    pub facets: Vec<Halfspace>,
    pub dim: usize,
}

impl ConeDescription {
    /// Membership test from the halfspace side.
    pub fn contains(&self, x: &IntVector) -> bool {
        self.span_equations.iter().all(|c| c.dot(x).is_zero())
            && self.facets.iter().all(|f| !f.eval(x).is_negative())
    }

    /// Strict inequality on every facet, within the span.
    pub fn relative_interior_contains(&self, x: &IntVector) -> bool {
        self.span_equations.iter().all(|c| c.dot(x).is_zero())
            && self.facets.iter().all(|f| f.eval(x).is_positive())
    }
}

/// Divides `v` by the gcd of its entries. Signs are kept.
pub fn primitive(v: &IntVector) -> Result<IntVector> {
    let g = v.content();
    if g.is_zero() {
        return Err(Error::domain("the zero vector has no primitive form"));
    }
    Ok(IntVector(v.0.iter().map(|e| e / &g).collect()))
}

fn check_lengths(vectors: &[IntVector]) -> usize {
    let n = vectors.first().map_or(0, IntVector::len);
    assert!(
        vectors.iter().all(|v| v.len() == n),
        "vectors of unequal length"
    );
    n
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
///
/// # Panics
/// If the vectors have unequal lengths.
pub fn rank(vectors: &[IntVector]) -> usize {
    let cols = check_lengths(vectors);
    let mut m: Vec<Vec<BigInt>> = vectors.iter().map(|v| v.0.clone()).collect();
    let rows = m.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn determinant(rows: &[IntVector]) -> BigInt {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "matrix is not square");
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|v| v.0.clone()).collect();
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Reduced row echelon form of the row space, with pivot columns.
pub(crate) fn rref(vectors: &[IntVector], cols: usize) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut basis: Vec<Vec<BigRational>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for v in vectors {
        if basis.len() == cols {
            break;
        }
        let mut row: Vec<BigRational> = v.0.iter().cloned().map(BigRational::from_integer).collect();
        for (b, &p) in basis.iter().zip(&pivots) {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(b) {
                    *x -= &f * y;
                }
            }
        }
        let Some(p) = row.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        let lead = row[p].clone();
        for x in row.iter_mut() {
            *x /= &lead;
        }
        for b in basis.iter_mut() {
            if !b[p].is_zero() {
                let f = b[p].clone();
                for (x, y) in b.iter_mut().zip(&row) {
                    *x -= &f * y;
                }
            }
        }
        basis.push(row);
        pivots.push(p);
    }
    let mut order: Vec<usize> = (0..pivots.len()).collect();
    order.sort_by_key(|&i| pivots[i]);
    let basis = order.iter().map(|&i| basis[i].clone()).collect();
    let pivots = order.iter().map(|&i| pivots[i]).collect();
    (basis, pivots)
}

/// Scales a rational vector to a primitive integer vector with the same
/// direction.
fn clear_denominators(v: &[BigRational]) -> IntVector {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints = IntVector(v.iter().map(|x| (x * &lcm).to_integer()).collect());
    primitive(&ints).expect("nonzero rational vector")
}

/// A primitive integer basis of `{x : <v, x> = 0 for all v}`, one vector per
/// free column of the reduced echelon form. Canonical for the row space.
pub fn kernel_basis(vectors: &[IntVector], cols: usize) -> Vec<IntVector> {
    let (basis, pivots) = rref(vectors, cols);
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![BigRational::zero(); cols];
            v[free] = BigRational::one();
            for (row, &p) in basis.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            clear_denominators(&v)
        })
        .collect()
}

/// Primitive generator of a one-dimensional kernel, oriented so that its
/// last nonzero entry is positive.
pub fn kernel_line(vectors: &[IntVector]) -> Result<IntVector> {
    let cols = check_lengths(vectors);
    if vectors.is_empty() {
        return Err(Error::domain("kernel_line needs at least one vector"));
    }
    let ker = kernel_basis(vectors, cols);
    if ker.len() != 1 {
        return Err(Error::domain(format!(
            "kernel has dimension {}, expected 1",
            ker.len()
        )));
    }
    let v = ker.into_iter().next().expect("one kernel vector");
    let last = v
        .0
        .iter()
        .rev()
        .find(|e| !e.is_zero())
        .expect("kernel vector is nonzero");
    Ok(if last.is_negative() {
        IntVector(v.0.iter().map(|e| -e).collect())
    } else {
        v
    })
}

/// Fixed-width bitset over constraint indices.
#[derive(Clone, PartialEq, Eq)]
struct ZeroSet(Vec<u64>);

impl ZeroSet {
    fn empty(len: usize) -> Self {
        ZeroSet(vec![0; len.div_ceil(64)])
    }
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn intersection(&self, other: &ZeroSet) -> ZeroSet {
        ZeroSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn is_subset(&self, other: &ZeroSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

struct Ray {
    v: Vec<BigInt>,
    zeros: ZeroSet,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn primitive_vec(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, e| g.gcd(e));
    if g.is_zero() || g.is_one() {
        v
    } else {
        v.into_iter().map(|e| e / &g).collect()
    }
}

/// Extreme rays of `{a ∈ R^d : <c, a> >= 0 for all constraints c}` where the
/// constraints have rank `d`. Returns `Err(Lineality)` if the result is not
/// full-dimensional, i.e. the cone spanned by the constraints is not pointed.
fn polar_extreme_rays(constraints: &[Vec<BigInt>], d: usize) -> Result<Vec<Vec<BigInt>>> {
    let k = constraints.len();

    // Simplicial start: d independent constraints, rays from the inverse matrix.
    let mut chosen: Vec<usize> = Vec::with_capacity(d);
    let mut chosen_rows: Vec<IntVector> = Vec::with_capacity(d);
    for (i, c) in constraints.iter().enumerate() {
        chosen_rows.push(IntVector(c.clone()));
        if rank(&chosen_rows) == chosen_rows.len() {
            chosen.push(i);
            if chosen.len() == d {
                break;
            }
        } else {
            chosen_rows.pop();
        }
    }
    assert_eq!(chosen.len(), d, "constraints must have rank d");

    let inverse_cols = invert_columns(&chosen_rows);
    let mut rays: Vec<Ray> = inverse_cols
        .into_iter()
        .enumerate()
        .map(|(col, v)| {
            let mut zeros = ZeroSet::empty(k);
            for (row, &ci) in chosen.iter().enumerate() {
                if row != col {
                    zeros.insert(ci);
                }
            }
            Ray { v, zeros }
        })
        .collect();

    let mut is_chosen = vec![false; k];
    for &c in &chosen {
        is_chosen[c] = true;
    }

    for (j, c) in constraints.iter().enumerate() {
        if is_chosen[j] {
            continue;
        }
        let values: Vec<BigInt> = rays.iter().map(|r| dot(c, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();

        let mut created: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zeros.intersection(&rays[q].zeros);
                if common.count() + 2 < d {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(r, ray)| r != p && r != q && common.is_subset(&ray.zeros));
                if blocked {
                    continue;
                }
                let sp = &values[p];
                let sq = -&values[q];
                let v: Vec<BigInt> = rays[p]
                    .v
                    .iter()
                    .zip(&rays[q].v)
                    .map(|(a, b)| a * &sq + b * sp)
                    .collect();
                let mut zeros = common;
                zeros.insert(j);
                created.push(Ray {
                    v: primitive_vec(v),
                    zeros,
                });
            }
        }

        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
        for (i, mut ray) in rays.into_iter().enumerate() {
            if values[i].is_negative() {
                continue;
            }
            if values[i].is_zero() {
                ray.zeros.insert(j);
            }
            next.push(ray);
        }
        next.extend(created);
        rays = next;
    }

    let out: Vec<Vec<BigInt>> = rays.into_iter().map(|r| r.v).collect();
    let as_vectors: Vec<IntVector> = out.iter().cloned().map(IntVector).collect();
    if rank(&as_vectors) < d {
        return Err(Error::Lineality(
            "the generators span a cone containing a line".into(),
        ));
    }
    Ok(out)
}

/// Columns `r_k` of the inverse of a nonsingular square matrix, each scaled to
/// a primitive integer vector with `<row_k, r_k> > 0` and `<row_i, r_k> = 0`
/// for `i != k`.
fn invert_columns(rows: &[IntVector]) -> Vec<Vec<BigInt>> {
    let d = rows.len();
    let mut aug: Vec<Vec<BigRational>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<BigRational> =
                r.0.iter().cloned().map(BigRational::from_integer).collect();
            row.extend((0..d).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            row
        })
        .collect();
    for c in 0..d {
        let p = (c..d)
            .find(|&i| !aug[i][c].is_zero())
            .expect("matrix is nonsingular");
        aug.swap(c, p);
        let lead = aug[c][c].clone();
        for x in aug[c].iter_mut() {
            *x /= &lead;
        }
        for i in 0..d {
            if i != c && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                let pivot_row = aug[c].clone();
                for (x, y) in aug[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    (0..d)
        .map(|k| {
            let col: Vec<BigRational> = (0..d).map(|i| aug[i][d + k].clone()).collect();
            clear_denominators(&col).0
        })
        .collect()
}

/// Computes span equations and the irredundant facets of the cone generated
/// by `generators`.
///
/// Zero generators are ignored. The output does not depend on the order or
/// multiplicity of the input.
pub fn facet_enumeration(generators: &[IntVector]) -> Result<ConeDescription> {
    if generators.is_empty() {
        return Err(Error::domain("facet enumeration needs at least one generator"));
    }
    let n = generators[0].len();
    if generators.iter().any(|g| g.len() != n) {
        return Err(Error::domain("generators have unequal lengths"));
    }
    let gens: Vec<IntVector> = generators
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    let (span_basis, pivots) = rref(&gens, n);
    let dim = pivots.len();
    let span_equations = kernel_basis(&gens, n);

    if dim == 0 {
        return Ok(ConeDescription {
            ambient_dim: n,
            generators: gens,
            span_equations,
            facets: Vec::new(),
            dim,
        });
    }

    // Within the span a vector is determined by its pivot coordinates.
    let constraints: Vec<Vec<BigInt>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| primitive_vec(pivots.iter().map(|&p| g.0[p].clone()).collect()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let polar = polar_extreme_rays(&constraints, dim)?;

    let mut facets: Vec<Halfspace> = polar
        .into_iter()
        .map(|b| lift_normal(&b, &span_basis, &pivots, n))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    facets.sort();

    Ok(ConeDescription {
        ambient_dim: n,
        generators: gens,
        span_equations,
        facets,
        dim,
    })
}

/// Maps a normal in pivot coordinates to the unique primitive normal in the
/// span that induces the same linear form on the span.
fn lift_normal(b: &[BigInt], span_basis: &[Vec<BigRational>], pivots: &[usize], n: usize) -> Halfspace {
    let d = pivots.len();
    if d == n {
        return Halfspace {
            normal: IntVector(primitive_vec(b.to_vec())),
        };
    }
    // Solve (R R^T) z = b, normal = R^T z, where R holds the echelon rows.
    let gram: Vec<Vec<BigRational>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    span_basis[i]
                        .iter()
                        .zip(&span_basis[j])
                        .map(|(x, y)| x * y)
                        .sum()
                })
                .collect()
        })
        .collect();
    let rhs: Vec<BigRational> = b.iter().cloned().map(BigRational::from_integer).collect();
    let z = solve_rational(gram, rhs);
    let normal: Vec<BigRational> = (0..n)
        .map(|c| (0..d).map(|i| &z[i] * &span_basis[i][c]).sum())
        .collect();
    Halfspace {
        normal: clear_denominators(&normal),
    }
}

/// Gauss–Jordan solve of a nonsingular rational system.
fn solve_rational(mut a: Vec<Vec<BigRational>>, mut rhs: Vec<BigRational>) -> Vec<BigRational> {
    let d = a.len();
    for c in 0..d {
        let p = (c..d).find(|&i| !a[i][c].is_zero()).expect("nonsingular system");
        a.swap(c, p);
        rhs.swap(c, p);
        let lead = a[c][c].clone();
        for x in a[c].iter_mut() {
            *x /= &lead;
        }
        rhs[c] /= &lead;
        for i in 0..d {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot_row = a[c].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
                let r = &f * &rhs[c];
                rhs[i] -= r;
            }
        }
    }
    rhs
}

/// Generators lying on a one-dimensional face, primitive and sorted.
pub fn extreme_rays(c: &ConeDescription) -> Vec<IntVector> {
    let n = c.ambient_dim;
    if n == 0 {
        return Vec::new();
    }
    c.generators
        .iter()
        .filter(|g| !g.is_zero())
        .filter(|g| {
            let mut tight: Vec<IntVector> = c
                .facets
                .iter()
                .filter(|f| f.eval(g).is_zero())
                .map(|f| f.normal().clone())
                .collect();
            tight.extend(c.span_equations.iter().cloned());
            rank(&tight) == n - 1
        })
        .map(|g| primitive(g).expect("nonzero generator"))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}
