#![allow(dead_code)]

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use polycone::geometry::{self, ConeDescription, IntVector};
use polycone::lp;
use polycone::polymatroid::{self, BaseSet, Presentation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Deterministic corpus of random presentations over `[n]`, `2 <= n <= 6`,
/// with `1 <= m <= 3` sets.
pub fn random_presentations(count: usize, seed: u64) -> Vec<Presentation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=6);
            let m = rng.gen_range(1..=3);
            let sets = (0..m)
                .map(|_| {
                    let mask: u32 = rng.gen_range(1..(1 << n));
                    (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect()
                })
                .collect();
            Presentation::new(n, sets).unwrap()
        })
        .collect()
}

pub fn generators(base: &BaseSet) -> Vec<IntVector> {
    base.points.iter().map(IntVector::from).collect()
}

/// All `x ∈ N^n` with coordinate sum at most `max_sum`.
pub fn orthant_points(n: usize, max_sum: i64) -> Vec<Vec<i64>> {
    fn rec(j: usize, n: usize, rem: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if j == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..=rem {
            cur.push(v);
            rec(j + 1, n, rem - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, max_sum, &mut Vec::new(), &mut out);
    out
}

/// Round-trip check between the generator and halfspace descriptions.
///
/// - every generator and every sum of two generators satisfies the halfspace
///   description;
/// - every lattice point of `N^n` with coordinate sum `<= max_sum` satisfying
///   the halfspace description is in the cone by exact LP;
/// - each facet is irredundant: a witness violates it and satisfies the rest.
pub fn duality_round_trip(gens: &[IntVector], cone: &ConeDescription, max_sum: i64) -> Result<(), String> {
    for g in gens {
        if !cone.contains(g) {
            return Err(format!("generator {g} violates the halfspace description"));
        }
    }
    for (a, b) in gens.iter().zip(gens.iter().rev()) {
        let s = IntVector::new(a.entries().iter().zip(b.entries()).map(|(x, y)| x + y).collect());
        if !cone.contains(&s) {
            return Err(format!("sum {s} violates the halfspace description"));
        }
    }
    let n = cone.ambient_dim;
    let mut oracle = lp::ConeOracle::new(gens);
    for x in orthant_points(n, max_sum) {
        let v = IntVector::from_i64s(&x);
        if cone.contains(&v) && !oracle.contains(&v) {
            return Err(format!("{v} satisfies the facets but is not in the cone"));
        }
    }
    irredundancy_witnesses(gens, cone)
}

/// For each facet `f`: with `p` the sum of generators on `f` and `c` the sum of
/// all generators, `K p - c` violates `f` and satisfies every other facet for
/// large `K`.
pub fn irredundancy_witnesses(gens: &[IntVector], cone: &ConeDescription) -> Result<(), String> {
    let n = cone.ambient_dim;
    let sum = |vs: &mut dyn Iterator<Item = &IntVector>| {
        let mut acc = IntVector::zeros(n);
        for v in vs {
            acc = IntVector::new(acc.entries().iter().zip(v.entries()).map(|(a, b)| a + b).collect());
        }
        acc
    };
    let c = sum(&mut gens.iter());
    for f in &cone.facets {
        let p = sum(&mut gens.iter().filter(|g| f.eval(g).is_zero()));
        let mut found = false;
        for k in [1i64, 2, 4, 8, 16, 64, 256, 1024, 1 << 16] {
            let w = IntVector::new(
                p.entries()
                    .iter()
                    .zip(c.entries())
                    .map(|(a, b)| a * k - b)
                    .collect(),
            );
            let others_ok = cone.facets.iter().filter(|g| *g != f).all(|g| !g.eval(&w).is_negative());
            if f.eval(&w).is_negative() && others_ok {
                found = true;
                break;
            }
        }
        if !found {
            return Err(format!("no witness for facet {f}: it may be redundant"));
        }
    }
    Ok(())
}

/// Face dimension check: each facet holds `dim - 1` independent generators.
pub fn facets_are_facets(gens: &[IntVector], cone: &ConeDescription) -> Result<(), String> {
    for f in &cone.facets {
        let on: Vec<IntVector> = gens.iter().filter(|g| f.eval(g).is_zero()).cloned().collect();
        if geometry::rank(&on) + 1 != cone.dim {
            return Err(format!("facet {f} supports a face of the wrong dimension"));
        }
    }
    Ok(())
}

pub fn base_of(s: &str) -> BaseSet {
    polymatroid::enumerate_bases(&s.parse().unwrap())
}

pub fn as_set(v: &[IntVector]) -> BTreeSet<IntVector> {
    v.iter().cloned().collect()
}
