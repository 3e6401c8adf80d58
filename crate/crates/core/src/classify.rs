//! Enumeration of transversal polymatroids up to symmetry and the
//! Gorenstein classification driver.
//!
//! Presentations are identified with the multiset of their sets, so the
//! search runs over multisets of nonempty subsets of `[n]`, quotients them by
//! [`canonical_form`], and tests one representative per class.

use std::collections::BTreeSet;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gorenstein::{self, DegreeCap};
use crate::polymatroid::{canonical_form, LatticePoint, Presentation};

/// Default largest ground set for [`classify`].
pub const DEFAULT_CLASSIFY_MAX_N: usize = 4;

/// Ground-set size that needs an explicit opt-in.
pub const EXTENDED_CLASSIFY_MAX_N: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub n: usize,
    pub m_min: usize,
    pub m_max: usize,
    pub degree_cap: DegreeCap,
    /// Largest `n` accepted.
    pub max_n: usize,
}

impl ClassifyOptions {
    pub fn new(n: usize) -> Self {
        ClassifyOptions {
            n,
            m_min: 1,
            m_max: n,
            degree_cap: DegreeCap::Default,
            max_n: DEFAULT_CLASSIFY_MAX_N,
        }
    }

    pub fn with_m_range(mut self, m_min: usize, m_max: usize) -> Self {
        self.m_min = m_min;
        self.m_max = m_max;
        self
    }
}

/// One Gorenstein class, represented by its canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GorensteinClass {
    pub representative: String,
    pub m: usize,
    pub dim: usize,
    pub h: Vec<u64>,
    pub canonical_generators: Vec<LatticePoint>,
    /// Names of the reference families falling in this class.
    pub families: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub n: usize,
    pub m_min: usize,
    pub m_max: usize,
    pub degree_cap: Option<usize>,
    pub multisets_examined: usize,
    pub classes_examined: usize,
    pub gorenstein_classes: Vec<GorensteinClass>,
    /// Reference families whose class was found Gorenstein.
    pub families_found: Vec<String>,
    /// Reference families in the searched range not found Gorenstein.
    pub families_missing: Vec<String>,
    pub notes: Vec<String>,
}

fn family(name: &'static str, n: usize, sets: &[&[usize]]) -> (&'static str, Presentation) {
    let p = Presentation::new(n, sets.iter().map(|s| s.to_vec()).collect())
        .expect("reference family is a valid presentation");
    (name, p)
}

/// The known Gorenstein families in dimensions 3 and 4.
pub fn reference_families(n: usize) -> Vec<(&'static str, Presentation)> {
    match n {
        3 => vec![
            family("A", 3, &[&[1, 2], &[2, 3], &[3, 1]]),
            family("A'", 3, &[&[1, 2], &[1, 2, 3], &[2, 3]]),
            family("A''", 3, &[&[1, 2, 3], &[1, 2, 3], &[2, 3]]),
            family("A'''", 3, &[&[1, 2, 3], &[1, 2, 3], &[1, 2, 3]]),
            family("A1", 3, &[&[1, 2], &[2, 3]]),
        ],
        4 => {
            let all: &[usize] = &[1, 2, 3, 4];
            vec![
                family("A", 4, &[&[1, 2], &[2, 3], &[3, 4], &[4, 1]]),
                family("A1", 4, &[&[1, 2, 3], &[2, 3], &[3, 4], &[4, 1]]),
                family("A2", 4, &[all, &[2, 3], &[3, 4], &[4, 1]]),
                family("A3", 4, &[all, &[2, 3, 4], &[3, 4], &[4, 1]]),
                family("A4", 4, &[all, all, &[3, 4], &[4, 1]]),
                family("A5", 4, &[all, all, &[1, 3, 4], &[4, 1]]),
                family("A6", 4, &[all, all, all, &[4, 1]]),
                family("A7", 4, &[all, all, all, all]),
                family("A8", 4, &[&[1, 2, 3], &[1, 2, 3], &[3, 4], &[4, 1]]),
                family("A9", 4, &[&[1, 2, 3], &[1, 2, 3], &[1, 3, 4], &[4, 1]]),
                family("A10", 4, &[&[1, 2, 3], &[1, 2, 3], all, &[4, 1]]),
                family("A11", 4, &[&[1, 2, 3], &[1, 2, 3], &[1, 3, 4], &[1, 3, 4]]),
                family("A12", 4, &[&[1, 2, 3], &[1, 2, 3], &[1, 3, 4], &[1, 3, 4]]),
                family("A13", 4, &[&[1, 2, 3], &[2, 3, 4]]),
                family("A14", 4, &[all, &[2, 3, 4]]),
                family("A15", 4, &[all, all]),
                family("A16", 4, &[&[1, 2], &[2, 3], &[3, 4]]),
            ]
        }
        _ => Vec::new(),
    }
}

/// Nonempty subsets of `[n]`, each sorted, in order of their bitmask.
fn nonempty_subsets(n: usize) -> Vec<Vec<usize>> {
    (1u32..(1 << n))
        .map(|mask| (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect())
        .collect()
}

/// All canonical classes of presentations over `[n]` with `m` sets.
/// Returns the classes and the number of multisets examined.
pub fn presentation_classes(n: usize, m: usize) -> (BTreeSet<Presentation>, usize) {
    let subsets = nonempty_subsets(n);
    let mut examined = 0;
    let classes = subsets
        .iter()
        .cloned()
        .combinations_with_replacement(m)
        .map(|sets| {
            examined += 1;
            canonical_form(&Presentation::new(n, sets).expect("subsets are valid"))
        })
        .collect();
    (classes, examined)
}

pub fn classify(opts: &ClassifyOptions) -> Result<Classification> {
    let n = opts.n;
    if n == 0 {
        return Err(Error::domain("ground set size must be at least 1"));
    }
    if n > opts.max_n {
        return Err(Error::Budget(format!(
            "classification of n = {n} exceeds the budget n <= {}",
            opts.max_n
        )));
    }
    if opts.m_min == 0 || opts.m_min > opts.m_max {
        return Err(Error::domain(format!(
            "invalid set-count range {}..={}",
            opts.m_min, opts.m_max
        )));
    }

    let mut classes: BTreeSet<Presentation> = BTreeSet::new();
    let mut multisets = 0;
    for m in opts.m_min..=opts.m_max {
        let (c, examined) = presentation_classes(n, m);
        classes.extend(c);
        multisets += examined;
    }
    let reps: Vec<Presentation> = classes.into_iter().collect();

    // All-or-nothing: any failure aborts the whole run.
    let summaries = reps
        .par_iter()
        .map(|p| gorenstein::is_gorenstein(p, opts.degree_cap))
        .collect::<Result<Vec<_>>>()?;

    let families: Vec<(&'static str, Presentation)> = reference_families(n)
        .into_iter()
        .map(|(name, p)| (name, canonical_form(&p)))
        .collect();

    let mut gorenstein_classes = Vec::new();
    for (p, s) in reps.iter().zip(summaries) {
        if !s.gorenstein {
            continue;
        }
        let names = families
            .iter()
            .filter(|(_, f)| f == p)
            .map(|(name, _)| name.to_string())
            .collect();
        gorenstein_classes.push(GorensteinClass {
            representative: p.to_string(),
            m: p.m(),
            dim: s.dim,
            h: s.h,
            canonical_generators: s.canonical_generators,
            families: names,
        });
    }

    let found: BTreeSet<&str> = gorenstein_classes
        .iter()
        .flat_map(|c| c.families.iter().map(String::as_str))
        .collect();
    let in_range = |p: &Presentation| (opts.m_min..=opts.m_max).contains(&p.m());
    let families_found: Vec<String> = families
        .iter()
        .filter(|(name, _)| found.contains(name))
        .map(|(name, _)| name.to_string())
        .collect();
    let families_missing: Vec<String> = families
        .iter()
        .filter(|(name, p)| in_range(p) && !found.contains(name))
        .map(|(name, _)| name.to_string())
        .collect();

    let mut notes = Vec::new();
    for ((a, pa), (b, pb)) in families.iter().tuple_combinations() {
        if pa == pb {
            notes.push(format!(
                "reference families {a} and {b} have equivalent set lists and share one class"
            ));
        }
    }
    notes.push(format!(
        "completeness is claimed only over presentations of [{n}] with {}..={} sets",
        opts.m_min, opts.m_max
    ));

    Ok(Classification {
        n,
        m_min: opts.m_min,
        m_max: opts.m_max,
        degree_cap: match opts.degree_cap {
            DegreeCap::Default => None,
            DegreeCap::Fixed(k) => Some(k),
        },
        multisets_examined: multisets,
        classes_examined: reps.len(),
        gorenstein_classes,
        families_found,
        families_missing,
        notes,
    })
}
