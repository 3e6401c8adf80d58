//! Closed-form facet data for the cyclic presentation
//! `{{1,2},{2,3},…,{n-1,n},{n,1}}`.
//!
//! For a proper cyclic interval `S ⊂ [n]` of length `i`, the vector with
//! `-(n-i-1)` on `S` and `i+1` off `S` is (up to scaling) a facet normal of
//! the base cone, and these `n(n-1)` normals are all of them. This module
//! builds the normals, the integer points used to derive them, and a harness
//! comparing them against [`geometry::facet_enumeration`].

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{self, Halfspace, IntVector};
use crate::gorenstein::{self, DegreeCap};
use crate::polymatroid::{self, LatticePoint, Presentation};

/// Largest `n` [`verify_cyclic_facets`] accepts unless told otherwise.
pub const DEFAULT_VERIFY_MAX_N: usize = 7;

/// Largest ground set [`probe_facet_subset`] accepts.
pub const PROBE_MAX_N: usize = 5;

fn require_cyclic_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::domain(format!("cyclic formulas need n >= 3, got {n}")));
    }
    Ok(())
}

/// The rotation `s ↦ σ^k(s)` of `[n]`, i.e. `((s + k - 1) mod n) + 1`.
pub fn rotate(n: usize, k: usize, s: usize) -> usize {
    (s + k - 1) % n + 1
}

/// Consecutive residues `start, start+1, …` (mod n), `1 <= length <= n-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CyclicInterval {
    n: usize,
    start: usize,
    length: usize,
}

impl CyclicInterval {
    pub fn new(n: usize, start: usize, length: usize) -> Result<Self> {
        require_cyclic_n(n)?;
        if !(1..=n).contains(&start) {
            return Err(Error::domain(format!("interval start {start} outside 1..={n}")));
        }
        if !(1..n).contains(&length) {
            return Err(Error::domain(format!(
                "interval length {length} outside 1..={}",
                n - 1
            )));
        }
        Ok(CyclicInterval { n, start, length })
    }

    /// The interval `{σ^k(1), …, σ^k(i)}`.
    pub fn rotated_prefix(n: usize, k: usize, i: usize) -> Result<Self> {
        CyclicInterval::new(n, rotate(n, k % n.max(1), 1), i)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Member indices in interval order (not sorted when it wraps).
    pub fn indices(&self) -> Vec<usize> {
        (1..=self.length)
            .map(|s| rotate(self.n, self.start - 1, s))
            .collect()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices().contains(&i)
    }
}

/// The two point families whose rows make up [`facet_point_matrix`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialPoints {
    /// `R_{0,j}`, `j = 1..n-1`: leading 2, a single 0 at position `n+1-j`.
    pub leading_two: Vec<LatticePoint>,
    /// `Q_{0,j}`, `j = 1..n-2`: trailing 0, a single 2 at position `j+1`.
    pub trailing_zero: Vec<LatticePoint>,
}

pub fn special_points(n: usize) -> Result<SpecialPoints> {
    require_cyclic_n(n)?;
    let leading_two = (1..n)
        .map(|j| {
            let mut v = vec![1i64; n];
            v[0] = 2;
            v[n - j] = 0;
            LatticePoint::from_vec_unchecked(v)
        })
        .collect();
    let trailing_zero = (1..=n - 2)
        .map(|j| {
            let mut v = vec![1i64; n];
            v[n - 1] = 0;
            v[j] = 2;
            LatticePoint::from_vec_unchecked(v)
        })
        .collect();
    Ok(SpecialPoints {
        leading_two,
        trailing_zero,
    })
}

/// The `(n-1) × n` matrix whose rows span the hyperplane of the interval
/// `{1, …, i}`: the first `n-i` leading-two points followed by the first
/// `i-1` trailing-zero points.
pub fn facet_point_matrix(n: usize, i: usize) -> Result<Vec<IntVector>> {
    require_cyclic_n(n)?;
    if !(1..n).contains(&i) {
        return Err(Error::domain(format!("row index i = {i} outside 1..={}", n - 1)));
    }
    let pts = special_points(n)?;
    let rows = pts.leading_two[..n - i]
        .iter()
        .chain(&pts.trailing_zero[..i - 1])
        .map(IntVector::from)
        .collect();
    Ok(rows)
}

/// `-(n-i-1)` on the interval, `i+1` off it, reduced to primitive form.
pub fn interval_normal(s: &CyclicInterval) -> Halfspace {
    let (n, i) = (s.n as i64, s.length as i64);
    let members = s.indices();
    let raw: Vec<i64> = (1..=s.n)
        .map(|c| if members.contains(&c) { -(n - i - 1) } else { i + 1 })
        .collect();
    Halfspace::new(IntVector::from_i64s(&raw)).expect("interval normal is nonzero")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredictedNormals {
    pub n: usize,
    /// One entry per proper cyclic interval, sorted by normal.
    pub normals: Vec<(CyclicInterval, Halfspace)>,
}

impl PredictedNormals {
    pub fn halfspaces(&self) -> impl Iterator<Item = &Halfspace> {
        self.normals.iter().map(|(_, h)| h)
    }

    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }
}

pub fn predicted_facets(n: usize) -> Result<PredictedNormals> {
    require_cyclic_n(n)?;
    let mut normals: Vec<(CyclicInterval, Halfspace)> = (1..=n)
        .cartesian_product(1..n)
        .map(|(start, len)| {
            let s = CyclicInterval { n, start, length: len };
            (s, interval_normal(&s))
        })
        .collect();
    normals.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
    let distinct = normals.iter().map(|(_, h)| h).dedup().count();
    if distinct != normals.len() {
        return Err(Error::Inconsistency(format!(
            "interval normals for n = {n} are not pairwise distinct"
        )));
    }
    Ok(PredictedNormals { n, normals })
}

/// For a point with coordinate sum `n`, entries in `{0,1,2}` and at least one
/// entry 2, reports whether it lies on the singleton-interval hyperplane of
/// the first position holding a 2.
pub fn on_singleton_facet(p: &LatticePoint) -> Result<bool> {
    let n = p.len();
    require_cyclic_n(n)?;
    let c = p.coords();
    if c.iter().any(|&x| x > 2) {
        return Err(Error::domain(format!("{p} has an entry above 2")));
    }
    if p.total() != n as i64 {
        return Err(Error::domain(format!("{p} does not have coordinate sum {n}")));
    }
    let Some(k) = c.iter().position(|&x| x == 2) else {
        return Err(Error::domain(format!("{p} has no coordinate equal to 2")));
    };
    let normal = interval_normal(&CyclicInterval::new(n, k + 1, 1)?);
    Ok(normal.eval_i64(c) == 0.into())
}

/// The base of the cyclic presentation built directly: the all-ones point
/// `I` and, for every even-size index set `i_1 < … < i_{2k}`, the points
/// `I ± Σ_t (e_{i_{2t-1}} - e_{i_{2t}})`.
pub fn cyclic_base_by_construction(n: usize) -> Result<Vec<LatticePoint>> {
    require_cyclic_n(n)?;
    let mut out: BTreeSet<Vec<i64>> = BTreeSet::new();
    out.insert(vec![1; n]);
    for k in 1..=n / 2 {
        for idx in (0..n).combinations(2 * k) {
            let mut plus = vec![1i64; n];
            let mut minus = vec![1i64; n];
            for pair in idx.chunks(2) {
                plus[pair[0]] += 1;
                plus[pair[1]] -= 1;
                minus[pair[0]] -= 1;
                minus[pair[1]] += 1;
            }
            out.insert(plus);
            out.insert(minus);
        }
    }
    Ok(out.into_iter().map(LatticePoint::from_vec_unchecked).collect())
}

/// Outcome of checking the closed-form facets against computed ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicVerification {
    pub n: usize,
    pub computed_facets: Vec<Halfspace>,
    pub predicted_facets: Vec<Halfspace>,
    pub facets_match: bool,
    pub dim: usize,
    pub dim_ok: bool,
    pub base_count: usize,
    pub base_count_ok: bool,
    pub extreme_rays: Vec<IntVector>,
    pub extreme_rays_ok: bool,
    pub success: bool,
}

/// Computes the facets of the cyclic base cone from scratch and compares them
/// with [`predicted_facets`]; also checks the dimension, the base count
/// `2^n - 1`, and that every base point except `(1,…,1)` spans an extreme ray.
pub fn verify_cyclic_facets(n: usize, max_n: usize) -> Result<CyclicVerification> {
    require_cyclic_n(n)?;
    if n > max_n {
        return Err(Error::Budget(format!(
            "n = {n} exceeds the verification budget of {max_n}"
        )));
    }
    let base = polymatroid::enumerate_bases(&polymatroid::cyclic_presentation(n)?);
    let gens: Vec<IntVector> = base.points.iter().map(IntVector::from).collect();

    let (cone, predicted) = rayon::join(
        || geometry::facet_enumeration(&gens),
        || predicted_facets(n),
    );
    let cone = cone?;
    let predicted = predicted?;

    let predicted_set: BTreeSet<Halfspace> = predicted.halfspaces().cloned().collect();
    let computed_set: BTreeSet<Halfspace> = cone.facets.iter().cloned().collect();
    let facets_match = predicted_set == computed_set;

    let rays = geometry::extreme_rays(&cone);
    let ones = LatticePoint::ones(n);
    let expected_rays: BTreeSet<IntVector> = base
        .points
        .iter()
        .filter(|p| **p != ones)
        .map(|p| geometry::primitive(&IntVector::from(p)).expect("base points are nonzero"))
        .collect();
    let extreme_rays_ok = rays.iter().cloned().collect::<BTreeSet<_>>() == expected_rays;

    let dim_ok = cone.dim == n;
    let base_count_ok = base.len() == (1usize << n) - 1;
    Ok(CyclicVerification {
        n,
        computed_facets: cone.facets.clone(),
        predicted_facets: predicted_set.into_iter().collect(),
        facets_match,
        dim: cone.dim,
        dim_ok,
        base_count: base.len(),
        base_count_ok,
        extreme_rays: rays,
        extreme_rays_ok,
        success: facets_match && dim_ok && base_count_ok && extreme_rays_ok,
    })
}

/// Raw facts about a presentation relative to the cyclic normals. Does not
/// decide anything beyond these two bits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FacetSubsetProbe {
    pub presentation: String,
    pub facets: Vec<Halfspace>,
    /// Every computed facet normal is one of the `n(n-1)` interval normals.
    pub facets_within_predicted: bool,
    pub gorenstein: bool,
}

pub fn probe_facet_subset(p: &Presentation) -> Result<FacetSubsetProbe> {
    let n = p.n();
    require_cyclic_n(n)?;
    if n > PROBE_MAX_N {
        return Err(Error::Budget(format!(
            "probe supports n <= {PROBE_MAX_N}, got {n}"
        )));
    }
    let base = polymatroid::enumerate_bases(p);
    let gens: Vec<IntVector> = base.points.iter().map(IntVector::from).collect();
    let cone = geometry::facet_enumeration(&gens)?;
    let predicted: BTreeSet<Halfspace> = predicted_facets(n)?.halfspaces().cloned().collect();
    let facets_within_predicted = cone.facets.iter().all(|f| predicted.contains(f));
    let summary = gorenstein::is_gorenstein(p, DegreeCap::Default)?;
    Ok(FacetSubsetProbe {
        presentation: p.to_string(),
        facets: cone.facets,
        facets_within_predicted,
        gorenstein: summary.gorenstein,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(v: &[i64]) -> LatticePoint {
        LatticePoint::new(v.to_vec()).unwrap()
    }

    fn normal(h: &Halfspace) -> Vec<i64> {
        h.normal().to_i64s().unwrap()
    }

    #[test]
    fn rotation_wraps() {
        assert_eq!(rotate(4, 0, 1), 1);
        assert_eq!(rotate(4, 3, 2), 1);
        assert_eq!(rotate(4, 3, 1), 4);
        let s = CyclicInterval::rotated_prefix(4, 3, 2).unwrap();
        assert_eq!(s.indices(), vec![4, 1]);
    }

    #[test]
    fn interval_validation() {
        assert!(CyclicInterval::new(4, 0, 1).is_err());
        assert!(CyclicInterval::new(4, 5, 1).is_err());
        assert!(CyclicInterval::new(4, 1, 0).is_err());
        assert!(CyclicInterval::new(4, 1, 4).is_err());
        assert!(CyclicInterval::new(2, 1, 1).is_err());
    }

    #[test]
    fn special_points_for_four() {
        let pts = special_points(4).unwrap();
        assert_eq!(
            pts.leading_two,
            vec![lp(&[2, 1, 1, 0]), lp(&[2, 1, 0, 1]), lp(&[2, 0, 1, 1])]
        );
        assert_eq!(pts.trailing_zero, vec![lp(&[1, 2, 1, 0]), lp(&[1, 1, 2, 0])]);
        for n in 3..=9 {
            let pts = special_points(n).unwrap();
            assert_eq!(pts.leading_two.len() + pts.trailing_zero.len(), 2 * n - 3);
            assert!(pts
                .leading_two
                .iter()
                .chain(&pts.trailing_zero)
                .all(|p| p.total() == n as i64));
        }
        assert!(special_points(2).is_err());
    }

    #[test]
    fn facet_point_matrix_rows() {
        let m = facet_point_matrix(4, 2).unwrap();
        assert_eq!(
            m,
            vec![
                IntVector::from_i64s(&[2, 1, 1, 0]),
                IntVector::from_i64s(&[2, 1, 0, 1]),
                IntVector::from_i64s(&[1, 2, 1, 0]),
            ]
        );
        assert!(facet_point_matrix(4, 0).is_err());
        assert!(facet_point_matrix(4, 4).is_err());
    }

    #[test]
    fn kernel_of_rows_for_five_and_two() {
        let k = geometry::kernel_line(&facet_point_matrix(5, 2).unwrap()).unwrap();
        assert_eq!(k, IntVector::from_i64s(&[-2, -2, 3, 3, 3]));
        let k3 = geometry::kernel_line(&facet_point_matrix(3, 1).unwrap()).unwrap();
        assert_eq!(k3, IntVector::from_i64s(&[-1, 2, 2]));
        assert_eq!(geometry::rank(&facet_point_matrix(5, 1).unwrap()), 4);
    }

    #[test]
    fn interval_normal_examples() {
        let n = |n, s, l| interval_normal(&CyclicInterval::new(n, s, l).unwrap());
        assert_eq!(normal(&n(4, 1, 2)), vec![-1, -1, 3, 3]);
        assert_eq!(normal(&n(4, 1, 3)), vec![0, 0, 0, 1]);
        assert_eq!(normal(&n(3, 2, 1)), vec![2, -1, 2]);
        assert_eq!(normal(&n(4, 1, 1)), vec![-1, 1, 1, 1]);
        assert_eq!(normal(&n(4, 4, 2)), vec![-1, 3, 3, -1]);
    }

    #[test]
    fn predicted_sets_for_three_and_four() {
        let p3: BTreeSet<Vec<i64>> = predicted_facets(3).unwrap().halfspaces().map(normal).collect();
        let want3: BTreeSet<Vec<i64>> = [
            vec![-1, 2, 2],
            vec![2, -1, 2],
            vec![2, 2, -1],
            vec![0, 0, 1],
            vec![1, 0, 0],
            vec![0, 1, 0],
        ]
        .into_iter()
        .collect();
        assert_eq!(p3, want3);

        let p4: BTreeSet<Vec<i64>> = predicted_facets(4).unwrap().halfspaces().map(normal).collect();
        let want4: BTreeSet<Vec<i64>> = [
            vec![-1, 1, 1, 1],
            vec![1, -1, 1, 1],
            vec![1, 1, -1, 1],
            vec![1, 1, 1, -1],
            vec![-1, -1, 3, 3],
            vec![3, -1, -1, 3],
            vec![3, 3, -1, -1],
            vec![-1, 3, 3, -1],
            vec![0, 0, 0, 1],
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
        ]
        .into_iter()
        .collect();
        assert_eq!(p4, want4);
    }

    #[test]
    fn predicted_counts() {
        for n in 3..=10 {
            assert_eq!(predicted_facets(n).unwrap().len(), n * (n - 1));
        }
    }

    #[test]
    fn singleton_facet_examples() {
        assert!(on_singleton_facet(&lp(&[2, 1, 1, 0])).unwrap());
        assert!(matches!(
            on_singleton_facet(&lp(&[1, 1, 1])),
            Err(Error::Domain(_))
        ));
        assert!(on_singleton_facet(&lp(&[3, 0, 0])).is_err());
        assert!(on_singleton_facet(&lp(&[2, 2, 1])).is_err());
    }

    #[test]
    fn singleton_facet_on_cyclic_five_bases() {
        let base = polymatroid::enumerate_bases(&polymatroid::cyclic_presentation(5).unwrap());
        let mut checked = 0;
        for p in base.points.iter().filter(|p| p.coords().contains(&2)) {
            assert!(on_singleton_facet(p).unwrap(), "{p}");
            checked += 1;
        }
        assert!(checked > 0);
    }

    #[test]
    fn construction_matches_enumeration() {
        for n in 3..=9 {
            let built = cyclic_base_by_construction(n).unwrap();
            let base = polymatroid::enumerate_bases(&polymatroid::cyclic_presentation(n).unwrap());
            assert_eq!(built, base.points, "n = {n}");
        }
    }

    #[test]
    fn verification_budget_is_enforced() {
        assert!(matches!(verify_cyclic_facets(8, 7), Err(Error::Budget(_))));
        assert!(matches!(verify_cyclic_facets(2, 7), Err(Error::Domain(_))));
    }

    #[test]
    fn verify_three_and_four() {
        for n in [3, 4] {
            let r = verify_cyclic_facets(n, DEFAULT_VERIFY_MAX_N).unwrap();
            assert!(r.success, "{r:?}");
            assert_eq!(r.computed_facets.len(), n * (n - 1));
        }
    }
}
