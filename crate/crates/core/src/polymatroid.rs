//! Presentations of transversal polymatroids and their base sets.
//!
//! A presentation is an ordered list of nonempty subsets `A_1, …, A_m` of
//! the ground set `[n] = {1, …, n}`. Its bases are the vectors
//! `e_{i_1} + … + e_{i_m}` with `i_k ∈ A_k`. Indices are 1-based throughout.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered list of nonempty subsets of `{1, …, n}`.
///
/// Each set is stored sorted and without repeats. The list itself keeps the
/// order it was given in; repeated identical sets are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Presentation {
    n: usize,
    sets: Vec<Vec<usize>>,
}

impl Presentation {
    pub fn new(n: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("ground set size must be at least 1"));
        }
        if sets.is_empty() {
            return Err(Error::domain("a presentation needs at least one set"));
        }
        let mut normalized = Vec::with_capacity(sets.len());
        for (k, mut set) in sets.into_iter().enumerate() {
            if set.is_empty() {
                return Err(Error::domain(format!("set #{} is empty", k + 1)));
            }
            if let Some(&bad) = set.iter().find(|&&i| i == 0 || i > n) {
                return Err(Error::domain(format!(
                    "set #{} contains {bad}, outside 1..={n}",
                    k + 1
                )));
            }
            set.sort_unstable();
            set.dedup();
            normalized.push(set);
        }
        Ok(Presentation {
            n,
            sets: normalized,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of sets, `m`.
    pub fn m(&self) -> usize {
        self.sets.len()
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    /// Applies the relabeling `i ↦ perm[i-1]` to every set. `perm` must be a
    /// permutation of `1..=n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let mut check: Vec<usize> = perm.to_vec();
        check.sort_unstable();
        if check != (1..=self.n).collect::<Vec<_>>() {
            return Err(Error::domain(format!(
                "{perm:?} is not a permutation of 1..={}",
                self.n
            )));
        }
        let sets = self
            .sets
            .iter()
            .map(|s| s.iter().map(|&i| perm[i - 1]).collect())
            .collect();
        Presentation::new(self.n, sets)
    }

    /// Reorders the list of sets: the k-th set of the result is
    /// `self.sets()[order[k]]` (0-based positions).
    pub fn reorder(&self, order: &[usize]) -> Result<Self> {
        let mut check: Vec<usize> = order.to_vec();
        check.sort_unstable();
        if check != (0..self.m()).collect::<Vec<_>>() {
            return Err(Error::domain(format!(
                "{order:?} is not a permutation of 0..{}",
                self.m()
            )));
        }
        Ok(Presentation {
            n: self.n,
            sets: order.iter().map(|&k| self.sets[k].clone()).collect(),
        })
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; ", self.n)?;
        let body = self
            .sets
            .iter()
            .map(|s| format!("{{{}}}", s.iter().join(",")))
            .join(",");
        f.write_str(&body)
    }
}

/// Parses `n=4; {1,2},{2,3},{3,4},{4,1}`. Whitespace is ignored.
impl FromStr for Presentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (head, body) = compact
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("expected `n=<N>; {{..}},..`, got {s:?}")))?;
        let n = head
            .strip_prefix("n=")
            .and_then(|v| v.parse::<usize>().ok())
            .ok_or_else(|| Error::Parse(format!("bad ground-set size in {head:?}")))?;

        let mut sets = Vec::new();
        let mut rest = body;
        while !rest.is_empty() {
            let inner_start = rest
                .strip_prefix('{')
                .ok_or_else(|| Error::Parse(format!("expected `{{` at {rest:?}")))?;
            let close = inner_start
                .find('}')
                .ok_or_else(|| Error::Parse(format!("unclosed set at {rest:?}")))?;
            let inner = &inner_start[..close];
            let set = if inner.is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad element {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?
            };
            sets.push(set);
            rest = &inner_start[close + 1..];
            if let Some(after) = rest.strip_prefix(',') {
                if after.is_empty() {
                    return Err(Error::Parse("trailing comma".into()));
                }
                rest = after;
            } else if !rest.is_empty() {
                return Err(Error::Parse(format!("expected `,` at {rest:?}")));
            }
        }
        Presentation::new(n, sets)
    }
}

/// A vector of nonnegative integers, the exponent vector of a monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint(Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if let Some(c) = coords.iter().find(|&&c| c < 0) {
            return Err(Error::domain(format!(
                "lattice point coordinates must be nonnegative, found {c}"
            )));
        }
        Ok(LatticePoint(coords))
    }

    pub(crate) fn from_vec_unchecked(coords: Vec<i64>) -> Self {
        debug_assert!(coords.iter().all(|&c| c >= 0));
        LatticePoint(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Coordinate sum.
    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// The all-ones vector `(1, …, 1)`.
    pub fn ones(n: usize) -> Self {
        LatticePoint(vec![1; n])
    }
}

impl From<LatticePoint> for Vec<i64> {
    fn from(p: LatticePoint) -> Self {
        p.0
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// The base of a transversal polymatroid: deduplicated, lexicographically
/// sorted lattice points, all of coordinate sum `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BaseSet {
    pub presentation: Presentation,
    pub points: Vec<LatticePoint>,
}

impl BaseSet {
    pub fn n(&self) -> usize {
        self.presentation.n()
    }

    /// Common coordinate sum of the base points.
    pub fn degree_sum(&self) -> usize {
        self.presentation.m()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// `{{1,2},{2,3},…,{n-1,n},{n,1}}`.
pub fn cyclic_presentation(n: usize) -> Result<Presentation> {
    if n < 3 {
        return Err(Error::domain(format!(
            "the cyclic presentation needs n >= 3, got {n}"
        )));
    }
    let sets = (1..=n).map(|i| vec![i, i % n + 1]).collect();
    Presentation::new(n, sets)
}

pub fn enumerate_bases(p: &Presentation) -> BaseSet {
    let n = p.n();
    let points: BTreeSet<Vec<i64>> = p
        .sets()
        .iter()
        .map(|s| s.iter().copied())
        .multi_cartesian_product()
        .map(|choice| {
            let mut v = vec![0i64; n];
            for i in choice {
                v[i - 1] += 1;
            }
            v
        })
        .collect();
    BaseSet {
        presentation: p.clone(),
        points: points
            .into_iter()
            .map(LatticePoint::from_vec_unchecked)
            .collect(),
    }
}

/// Checks the base axioms of a discrete polymatroid: equal coordinate sums,
/// and for all `u, v` and `i` with `u_i > v_i` some `j` with `u_j < v_j`
/// and `u - e_i + e_j` in the set.
pub fn check_base_exchange(points: &[LatticePoint]) -> bool {
    let Some(first) = points.first() else {
        return false;
    };
    let n = first.len();
    if points.iter().any(|p| p.len() != n) {
        return false;
    }
    let total = first.total();
    if points.iter().any(|p| p.total() != total) {
        return false;
    }
    let members: HashSet<&[i64]> = points.iter().map(|p| p.coords()).collect();
    let mut scratch = vec![0i64; n];
    for u in points {
        for v in points {
            let (u, v) = (u.coords(), v.coords());
            for i in (0..n).filter(|&i| u[i] > v[i]) {
                let found = (0..n).filter(|&j| u[j] < v[j]).any(|j| {
                    scratch.copy_from_slice(u);
                    scratch[i] -= 1;
                    scratch[j] += 1;
                    members.contains(scratch.as_slice())
                });
                if !found {
                    return false;
                }
            }
        }
    }
    true
}

/// The lexicographically least presentation among all relabelings of `[n]`
/// combined with reorderings of the set list.
pub fn canonical_form(p: &Presentation) -> Presentation {
    let n = p.n();
    let mut best: Option<Vec<Vec<usize>>> = None;
    for perm in (1..=n).permutations(n) {
        let mut image: Vec<Vec<usize>> = p
            .sets()
            .iter()
            .map(|s| {
                let mut t: Vec<usize> = s.iter().map(|&i| perm[i - 1]).collect();
                t.sort_unstable();
                t
            })
            .collect();
        // Sorting the list realizes the least reordering for this relabeling.
        image.sort();
        if best.as_ref().map_or(true, |b| image < *b) {
            best = Some(image);
        }
    }
    Presentation {
        n,
        sets: best.expect("n >= 1 gives at least one permutation"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[&[i64]]) -> Vec<LatticePoint> {
        v.iter().map(|c| LatticePoint::new(c.to_vec()).unwrap()).collect()
    }

    #[test]
    fn cyclic_small_cases() {
        let p = cyclic_presentation(3).unwrap();
        assert_eq!(p.sets(), &[vec![1, 2], vec![2, 3], vec![1, 3]]);
        assert_eq!(p.to_string(), "n=3; {1,2},{2,3},{1,3}");
        let p4 = cyclic_presentation(4).unwrap();
        assert_eq!(
            p4.sets(),
            &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]]
        );
        assert!(matches!(cyclic_presentation(2), Err(Error::Domain(_))));
    }

    #[test]
    fn rejects_invalid_presentations() {
        assert!(Presentation::new(3, vec![]).is_err());
        assert!(Presentation::new(3, vec![vec![]]).is_err());
        assert!(Presentation::new(3, vec![vec![0, 1]]).is_err());
        assert!(Presentation::new(3, vec![vec![4]]).is_err());
        assert!(Presentation::new(0, vec![vec![1]]).is_err());
    }

    #[test]
    fn parses_whitespace_insensitive() {
        let p: Presentation = " n = 4 ;{1, 2} , {2,3},{3,4},{4,1} ".parse().unwrap();
        assert_eq!(p, cyclic_presentation(4).unwrap());
        assert!("n=4 {1,2}".parse::<Presentation>().is_err());
        assert!("n=4; {1,2".parse::<Presentation>().is_err());
        assert!("n=4; {1,2},".parse::<Presentation>().is_err());
        assert!("n=4; {1,x}".parse::<Presentation>().is_err());
        assert!("n=2; {1,3}".parse::<Presentation>().is_err());
        let q: Presentation = "n=3; {3,1}".parse().unwrap();
        assert_eq!(q.sets(), &[vec![1, 3]]);
    }

    #[test]
    fn bases_of_cyclic_three() {
        let b = enumerate_bases(&cyclic_presentation(3).unwrap());
        let expected = pts(&[
            &[0, 1, 2],
            &[0, 2, 1],
            &[1, 0, 2],
            &[1, 1, 1],
            &[1, 2, 0],
            &[2, 0, 1],
            &[2, 1, 0],
        ]);
        assert_eq!(b.points, expected);
    }

    #[test]
    fn bases_of_two_overlapping_triples() {
        // brute force over the 9 index pairs
        let p = Presentation::new(4, vec![vec![1, 2, 3], vec![2, 3, 4]]).unwrap();
        let mut brute: Vec<Vec<i64>> = Vec::new();
        for i in [1, 2, 3] {
            for j in [2, 3, 4] {
                let mut v = vec![0; 4];
                v[i - 1] += 1;
                v[j - 1] += 1;
                if !brute.contains(&v) {
                    brute.push(v);
                }
            }
        }
        brute.sort();
        let b = enumerate_bases(&p);
        assert_eq!(b.len(), 8);
        let got: Vec<Vec<i64>> = b.points.iter().map(|p| p.coords().to_vec()).collect();
        assert_eq!(got, brute);
    }

    #[test]
    fn singleton_sets_give_single_base() {
        let p = Presentation::new(2, vec![vec![1], vec![2]]).unwrap();
        assert_eq!(enumerate_bases(&p).points, pts(&[&[1, 1]]));
    }

    #[test]
    fn cyclic_base_counts() {
        for n in 3..=10 {
            let b = enumerate_bases(&cyclic_presentation(n).unwrap());
            assert_eq!(b.len(), (1 << n) - 1, "n = {n}");
        }
    }

    #[test]
    fn exchange_axiom_examples() {
        let b4 = enumerate_bases(&cyclic_presentation(4).unwrap());
        assert!(check_base_exchange(&b4.points));
        assert!(!check_base_exchange(&pts(&[&[2, 0], &[0, 1]])));
        assert!(check_base_exchange(&pts(&[&[1, 1, 0], &[0, 1, 1]])));
        assert!(!check_base_exchange(&pts(&[&[2, 0, 0], &[0, 1, 1]])));
        assert!(!check_base_exchange(&[]));
    }

    #[test]
    fn canonical_form_examples() {
        let p = Presentation::new(3, vec![vec![2, 3], vec![1, 2], vec![3, 1]]).unwrap();
        assert_eq!(
            canonical_form(&p).sets(),
            &[vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        let q = Presentation::new(4, vec![vec![1, 3], vec![3, 4], vec![4, 2], vec![2, 1]])
            .unwrap();
        assert_eq!(
            canonical_form(&q),
            canonical_form(&cyclic_presentation(4).unwrap())
        );
        let r = Presentation::new(4, vec![vec![1, 2], vec![1, 2], vec![3, 4], vec![3, 4]])
            .unwrap();
        assert_ne!(canonical_form(&r), canonical_form(&q));
    }

    #[test]
    fn canonical_form_constant_on_orbit_of_cyclic_three() {
        let p = cyclic_presentation(3).unwrap();
        let c = canonical_form(&p);
        for perm in (1..=3).permutations(3) {
            for order in (0..3).permutations(3) {
                let image = p.relabel(&perm).unwrap().reorder(&order).unwrap();
                assert_eq!(canonical_form(&image), c);
            }
        }
    }

    #[test]
    fn relabel_and_reorder_reject_non_permutations() {
        let p = cyclic_presentation(3).unwrap();
        assert!(p.relabel(&[1, 1, 2]).is_err());
        assert!(p.reorder(&[0, 1]).is_err());
    }
}
