//! Exact linear-programming feasibility for cone membership.
//!
//! Decides whether `x = Σ λ_i g_i` has a solution with `λ >= 0` using a
//! phase-one simplex over exact rationals with Bland's anti-cycling rule.
//! This works straight from the generators and is therefore an oracle
//! independent of any facet description.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::geometry::IntVector;

/// `true` iff `x` is a nonnegative rational combination of `generators`.
pub fn cone_contains(generators: &[IntVector], x: &IntVector) -> bool {
    feasible_basis(generators, x).is_some()
}

/// Structural basic columns of a feasible phase-one solution, if any.
fn feasible_basis(generators: &[IntVector], x: &IntVector) -> Option<Vec<usize>> {
    let rows = x.len();
    assert!(
        generators.iter().all(|g| g.len() == rows),
        "generator and target lengths differ"
    );
    let k = generators.len();
    // columns: k structural, rows artificial, then the right-hand side
    let width = k + rows + 1;
    let rhs_col = width - 1;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(rows);
    for r in 0..rows {
        let flip = x.entries()[r].is_negative();
        let sign = |v: &num_bigint::BigInt| {
            let q = BigRational::from_integer(v.clone());
            if flip {
                -q
            } else {
                q
            }
        };
        let mut row = vec![BigRational::zero(); width];
        for (j, g) in generators.iter().enumerate() {
            row[j] = sign(&g.entries()[r]);
        }
        row[k + r] = BigRational::from_integer(1.into());
        row[rhs_col] = sign(&x.entries()[r]);
        t.push(row);
    }
    let mut basis: Vec<usize> = (k..k + rows).collect();

    // Phase-one reduced costs: minimize the sum of artificials.
    let mut cost = vec![BigRational::zero(); width];
    for row in &t {
        for j in 0..k {
            cost[j] -= &row[j];
        }
        cost[rhs_col] -= &row[rhs_col];
    }

    loop {
        let Some(enter) = (0..rhs_col).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for r in 0..rows {
            if !t[r][enter].is_positive() {
                continue;
            }
            let ratio = &t[r][rhs_col] / &t[r][enter];
            let better = match &leave {
                None => true,
                Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        // Phase one is bounded below by zero, so a leaving row always exists.
        let (pr, _) = leave.expect("phase-one objective is bounded");
        let lead = t[pr][enter].clone();
        for v in t[pr].iter_mut() {
            *v /= &lead;
        }
        let pivot_row = t[pr].clone();
        for (r, row) in t.iter_mut().enumerate() {
            if r != pr && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * p;
                }
            }
        }
        let f = cost[enter].clone();
        for (v, p) in cost.iter_mut().zip(&pivot_row) {
            *v -= &f * p;
        }
        basis[pr] = enter;
    }

    if (0..rows).all(|r| basis[r] < k || t[r][rhs_col].is_zero()) {
        let mut cols: Vec<usize> = basis.into_iter().filter(|&j| j < k).collect();
        cols.sort_unstable();
        Some(cols)
    } else {
        None
    }
}

/// Linearly independent generators `S` with an integer left inverse:
/// `λ = N x / d` reconstructs any `x` in the span of `S`.
#[derive(Debug, Clone)]
struct Certificate {
    cols: Vec<usize>,
    left_inverse: Vec<Vec<BigInt>>,
    denominator: BigInt,
}

impl Certificate {
    fn build(generators: &[IntVector], cols: Vec<usize>) -> Self {
        let s = cols.len();
        let rows = generators.first().map_or(0, |g| g.len());
        let q = |v: &BigInt| BigRational::from_integer(v.clone());
        // Gram matrix P = AᵀA, then L = P⁻¹ Aᵀ by Gauss-Jordan on [P | Aᵀ]
        let mut aug: Vec<Vec<BigRational>> = cols
            .iter()
            .map(|&a| {
                let mut row: Vec<BigRational> = cols
                    .iter()
                    .map(|&b| q(&generators[a].dot(&generators[b])))
                    .collect();
                row.extend(generators[a].entries().iter().map(q));
                row
            })
            .collect();
        for c in 0..s {
            let p = (c..s).find(|&i| !aug[i][c].is_zero()).expect("basic columns are independent");
            aug.swap(c, p);
            let lead = aug[c][c].clone();
            for v in aug[c].iter_mut() {
                *v /= &lead;
            }
            let pivot = aug[c].clone();
            for (i, row) in aug.iter_mut().enumerate() {
                if i != c && !row[c].is_zero() {
                    let f = row[c].clone();
                    for (v, pv) in row.iter_mut().zip(&pivot) {
                        *v -= &f * pv;
                    }
                }
            }
        }
        let denominator = aug
            .iter()
            .flat_map(|r| r[s..].iter())
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let left_inverse = aug
            .iter()
            .map(|r| {
                r[s..s + rows]
                    .iter()
                    .map(|v| v.numer() * (&denominator / v.denom()))
                    .collect()
            })
            .collect();
        Certificate {
            cols,
            left_inverse,
            denominator,
        }
    }

    fn covers(&self, generators: &[IntVector], x: &IntVector) -> bool {
        let lambda: Vec<BigInt> = self
            .left_inverse
            .iter()
            .map(|row| row.iter().zip(x.entries()).map(|(a, b)| a * b).sum())
            .collect();
        if lambda.iter().any(|l| l.is_negative()) {
            return false;
        }
        // the left inverse is only exact on the span: check the reconstruction
        x.entries().iter().enumerate().all(|(r, xr)| {
            let back: BigInt = self
                .cols
                .iter()
                .zip(&lambda)
                .map(|(&j, l)| &generators[j].entries()[r] * l)
                .sum();
            back == xr * &self.denominator
        })
    }
}

/// Repeated membership queries against one generator set.
///
/// Every positive answer comes with a simplicial certificate `x = Σ λ_j g_j`,
/// `λ >= 0`, over independent generators. Certificates are cached, so later
/// queries covered by a known simplicial cone skip the simplex entirely.
#[derive(Debug, Clone)]
pub struct ConeOracle {
    generators: Vec<IntVector>,
    certificates: Vec<Certificate>,
}

impl ConeOracle {
    pub fn new(generators: &[IntVector]) -> Self {
        ConeOracle {
            generators: generators.to_vec(),
            certificates: Vec::new(),
        }
    }

    pub fn contains(&mut self, x: &IntVector) -> bool {
        if let Some(i) = self
            .certificates
            .iter()
            .position(|c| c.covers(&self.generators, x))
        {
            // keep recent hits near the front
            if i > 0 {
                self.certificates.swap(i, i - 1);
            }
            return true;
        }
        match feasible_basis(&self.generators, x) {
            Some(cols) if cols.is_empty() => true,
            Some(cols) => {
                let cert = Certificate::build(&self.generators, cols);
                debug_assert!(cert.covers(&self.generators, x));
                self.certificates.push(cert);
                true
            }
            None => false,
        }
    }

    /// Number of cached simplicial certificates.
    pub fn certificates(&self) -> usize {
        self.certificates.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> IntVector {
        IntVector::from_i64s(v)
    }

    #[test]
    fn orthant_membership() {
        let g = [iv(&[1, 0]), iv(&[0, 1])];
        assert!(cone_contains(&g, &iv(&[3, 5])));
        assert!(cone_contains(&g, &iv(&[0, 0])));
        assert!(!cone_contains(&g, &iv(&[-1, 5])));
    }

    #[test]
    fn narrow_cone_needs_rational_weights() {
        let g = [iv(&[2, 1]), iv(&[1, 2])];
        assert!(cone_contains(&g, &iv(&[1, 1])));
        assert!(!cone_contains(&g, &iv(&[1, 0])));
        assert!(!cone_contains(&g, &iv(&[3, 7])));
    }

    #[test]
    fn lower_dimensional_target() {
        let g = [iv(&[1, 1, 0]), iv(&[1, 0, 1])];
        assert!(cone_contains(&g, &iv(&[2, 1, 1])));
        assert!(!cone_contains(&g, &iv(&[1, 1, 1])));
    }

    #[test]
    fn oracle_agrees_with_simplex() {
        let g = [iv(&[1, 1, 0]), iv(&[1, 0, 1]), iv(&[0, 1, 1]), iv(&[2, 1, 1])];
        let mut o = ConeOracle::new(&g);
        for a in -1..4 {
            for b in -1..4 {
                for c in -1..4 {
                    let x = iv(&[a, b, c]);
                    assert_eq!(o.contains(&x), cone_contains(&g, &x), "{x}");
                }
            }
        }
        assert!(o.certificates() >= 1);
    }

    #[test]
    fn degenerate_duplicates() {
        let g = [iv(&[1, 0, 0]), iv(&[1, 0, 0]), iv(&[1, 1, 0]), iv(&[0, 1, 0])];
        assert!(cone_contains(&g, &iv(&[2, 3, 0])));
        assert!(!cone_contains(&g, &iv(&[2, 3, 1])));
    }
}
