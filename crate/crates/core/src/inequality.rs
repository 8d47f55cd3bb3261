//! The simplex inequality
//!
//! `x1 x2 x3 + (x1² x2 + x2² x3 + x3² x1)/2 <= 5/54 - (1/50) Σ (xi - 1/3)²`
//!
//! on grids of the simplex, plus the 2-norm degree spread and vertex
//! duplication. The grid check is evidence only; see [`crate::interval`] for
//! a finite certificate over the whole simplex.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::{normalize_triple, ThreeGraph, Triple};
use crate::rational::{frac, int, Rational};

/// `RHS - LHS` at an arbitrary point (not required to lie on the simplex).
pub fn simplex_margin(x: [Rational; 3]) -> Rational {
    let third = frac(1, 3);
    let spread: Rational = x.iter().map(|&v| (v - third) * (v - third)).sum();
    let lhs = x[0] * x[1] * x[2] + (x[0] * x[0] * x[1] + x[1] * x[1] * x[2] + x[2] * x[2] * x[0]) / int(2);
    frac(5, 54) - spread / int(50) - lhs
}

/// `2700 d³ · margin(a/d, b/d, c/d)`, an integer.
pub fn margin_scaled(a: i128, b: i128, c: i128) -> i128 {
    let d = a + b + c;
    let sq = |v: i128| (3 * v - d) * (3 * v - d);
    250 * d * d * d - 6 * d * (sq(a) + sq(b) + sq(c)) - 2700 * a * b * c - 1350 * (a * a * b + b * b * c + c * c * a)
}

fn scaled_to_rational(m: i128, d: i128) -> Rational {
    Rational::new(m, 2700 * d * d * d)
}

/// Minimum over one grid row `a = const`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowResult {
    pub worst_scaled: i128,
    pub argmin: [usize; 3],
    /// Grid points with margin exactly zero.
    pub zeros: Vec<[usize; 3]>,
    /// Grid points with negative margin.
    pub violations: Vec<[usize; 3]>,
    pub points: usize,
}

pub fn simplex_row(d: usize, a: usize) -> RowResult {
    let mut r = RowResult {
        worst_scaled: i128::MAX,
        argmin: [a, 0, d - a],
        zeros: Vec::new(),
        violations: Vec::new(),
        points: 0,
    };
    for b in 0..=d - a {
        let c = d - a - b;
        let m = margin_scaled(a as i128, b as i128, c as i128);
        r.points += 1;
        if m == 0 {
            r.zeros.push([a, b, c]);
        } else if m < 0 {
            r.violations.push([a, b, c]);
        }
        if m < r.worst_scaled {
            r.worst_scaled = m;
            r.argmin = [a, b, c];
        }
    }
    r
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexReport {
    pub d: usize,
    pub worst_margin: Rational,
    /// First grid point (lexicographic) attaining the worst margin.
    pub argmin: [usize; 3],
    pub zeros: Vec<[usize; 3]>,
    pub violations: Vec<[usize; 3]>,
    pub points: usize,
}

impl SimplexReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    /// The barycenter is the only zero, and it is a zero exactly when `3 | d`.
    pub fn zero_only_at_barycenter(&self) -> bool {
        let k = self.d / 3;
        if self.d % 3 == 0 {
            self.zeros == [[k, k, k]]
        } else {
            self.zeros.is_empty()
        }
    }
}

/// Merges row results in row order.
pub fn merge_rows(d: usize, rows: impl IntoIterator<Item = RowResult>) -> SimplexReport {
    let mut worst = i128::MAX;
    let mut argmin = [0, 0, d];
    let (mut zeros, mut violations, mut points) = (Vec::new(), Vec::new(), 0);
    for r in rows {
        if r.worst_scaled < worst {
            worst = r.worst_scaled;
            argmin = r.argmin;
        }
        zeros.extend(r.zeros);
        violations.extend(r.violations);
        points += r.points;
    }
    SimplexReport {
        d,
        worst_margin: scaled_to_rational(worst, d as i128),
        argmin,
        zeros,
        violations,
        points,
    }
}

/// Checks every point `(a, b, c)/d` with `a + b + c = d`.
pub fn verify_simplex_inequality(d: usize) -> Result<SimplexReport> {
    if d == 0 {
        return Err(Error::InvalidParameter("resolution must be at least 1".into()));
    }
    Ok(merge_rows(d, (0..=d).map(|a| simplex_row(d, a))))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpreadReport {
    pub s: Vec<u64>,
    /// `max_{u,v} |s(u) - s(v)|`.
    pub max_pair_gap: u64,
    /// `max_v |s(v) - mean|`.
    pub vs_average_gap: Rational,
    /// `60 n²`.
    pub bound: u64,
}

impl SpreadReport {
    pub fn within_bound(&self) -> bool {
        self.max_pair_gap <= self.bound
    }
}

pub fn s_spread(h: &ThreeGraph) -> SpreadReport {
    let s = h.two_norm_degrees();
    let n = h.n();
    let (lo, hi) = (s.iter().min().copied().unwrap_or(0), s.iter().max().copied().unwrap_or(0));
    let vs_average_gap = if n == 0 {
        int(0)
    } else {
        let mean = Rational::new(s.iter().map(|&x| x as i128).sum(), n as i128);
        s.iter()
            .map(|&x| {
                let g = int(x as i128) - mean;
                if g < int(0) {
                    -g
                } else {
                    g
                }
            })
            .max()
            .unwrap_or_else(|| int(0))
    };
    SpreadReport {
        max_pair_gap: hi - lo,
        vs_average_gap,
        bound: 60 * (n * n) as u64,
        s,
    }
}

/// Makes `v` a copy of `u`: drops every edge at `v`, then adds `{v, a, b}` for
/// each pair `ab` of the link of `u` avoiding `v`.
pub fn duplicate_vertex(h: &ThreeGraph, u: usize, v: usize) -> Result<ThreeGraph> {
    let n = h.n();
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    if u == v {
        return Err(Error::SameVertex(u));
    }
    let mut edges: Vec<Triple> = h.edges().iter().filter(|t| !t.contains(&v)).copied().collect();
    for &[a, b] in h.link(u)?.edges() {
        if a != v && b != v {
            edges.push(normalize_triple([v, a, b], n)?);
        }
    }
    ThreeGraph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_c, Composition3};

    #[test]
    fn margin_examples() {
        let t = frac(1, 3);
        assert_eq!(simplex_margin([t, t, t]), int(0));
        assert_eq!(simplex_margin([int(1), int(0), int(0)]), frac(5, 54) - frac(1, 75));
        assert_eq!(frac(5, 54) - frac(1, 75), frac(107, 1350));
        for (a, b, c) in [(1, 0, 0), (3, 5, 7), (10, 0, 3), (2, 2, 2)] {
            let d = (a + b + c) as i128;
            assert_eq!(
                scaled_to_rational(margin_scaled(a, b, c), d),
                simplex_margin([frac(a, d), frac(b, d), frac(c, d)])
            );
        }
    }

    #[test]
    fn grid_sweeps() {
        for d in 1..=50 {
            let r = verify_simplex_inequality(d).unwrap();
            assert!(r.holds(), "d={d}");
            assert!(r.zero_only_at_barycenter(), "d={d}");
            assert_eq!(r.points, (d + 1) * (d + 2) / 2);
        }
        let r = verify_simplex_inequality(200).unwrap();
        // independent Fraction sweep
        assert_eq!(r.worst_margin, frac(1057, 432_000_000));
        assert_eq!(r.argmin, [66, 67, 67]);
        assert!(verify_simplex_inequality(0).is_err());
    }

    #[test]
    fn spread_examples() {
        let e = ThreeGraph::new(3, [[0, 1, 2]]).unwrap();
        let r = s_spread(&e);
        assert_eq!(r.s, [3, 3, 3]);
        assert_eq!(r.max_pair_gap, 0);
        for n in 3..=5 {
            assert_eq!(s_spread(&ThreeGraph::complete(n)).max_pair_gap, 0);
        }
        let c6 = build_c(Composition3::new(2, 2, 2)).0;
        assert!(s_spread(&c6).within_bound());
    }

    #[test]
    fn duplicate_examples() {
        let h = ThreeGraph::new(4, [[0, 1, 2]]).unwrap();
        let d = duplicate_vertex(&h, 0, 3).unwrap();
        assert_eq!(d.edges(), &[[0, 1, 2], [1, 2, 3]]);
        let s = d.two_norm_degrees();
        assert_eq!(s[0], s[3]);
        let d = duplicate_vertex(&h, 3, 0).unwrap();
        assert!(d.is_empty());
        assert!(matches!(duplicate_vertex(&h, 1, 1), Err(Error::SameVertex(1))));
        let c6 = build_c(Composition3::new(2, 2, 2)).0;
        assert!(!duplicate_vertex(&c6, 0, 5).unwrap().contains_k43());
    }
}
