//! The cyclic construction `C[V1,V2,V3]`, the bipartite construction
//! `B[V1,V2]`, the closed form of `‖C‖₂` and the balancedness analysis.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::hypergraph::{ThreeGraph, Triple};
use crate::partition::Partition3;
use crate::rational::{int, Rational};

/// Part sizes `(n1, n2, n3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition3(pub [usize; 3]);

impl Composition3 {
    pub fn new(n1: usize, n2: usize, n3: usize) -> Self {
        Composition3([n1, n2, n3])
    }

    /// Near-balanced composition of `n` (larger parts first).
    pub fn balanced(n: usize) -> Self {
        let (q, r) = (n / 3, n % 3);
        Composition3([q + usize::from(r > 0), q + usize::from(r > 1), q])
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    /// `(n2, n3, n1)`.
    pub fn rotate(&self) -> Self {
        let [a, b, c] = self.0;
        Composition3([b, c, a])
    }

    /// All pairwise part-size differences are at most one.
    pub fn is_near_balanced(&self) -> bool {
        let max = *self.0.iter().max().unwrap();
        let min = *self.0.iter().min().unwrap();
        max - min <= 1
    }

    /// Every ordered composition of `n`, lexicographically.
    pub fn all(n: usize) -> Vec<Composition3> {
        let mut out = Vec::with_capacity((n + 1) * (n + 2) / 2);
        for a in 0..=n {
            for b in 0..=n - a {
                out.push(Composition3([a, b, n - a - b]));
            }
        }
        out
    }

    /// Lexicographically smallest rotation.
    pub fn rotation_representative(&self) -> Self {
        let r1 = self.rotate();
        let r2 = r1.rotate();
        *[*self, r1, r2].iter().min().unwrap()
    }

    pub fn partition(&self) -> Partition3 {
        let [a, b, c] = self.0;
        Partition3::from_sizes(a, b, c)
    }
}

/// Part profiles of the edges of `C`.
pub const C_PROFILES: [[usize; 3]; 4] = [[1, 1, 1], [2, 1, 0], [0, 2, 1], [1, 0, 2]];

pub fn is_c_profile(p: [usize; 3]) -> bool {
    C_PROFILES.contains(&p)
}

/// All triples of `C[P]` for an arbitrary partition.
pub fn c_edges(p: &Partition3) -> Vec<Triple> {
    let n = p.n();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if is_c_profile(p.profile(&[a, b, c])) {
                    edges.push([a, b, c]);
                }
            }
        }
    }
    edges
}

/// `C[V1,V2,V3]` on consecutive label ranges, with its partition.
pub fn build_c(c: Composition3) -> (ThreeGraph, Partition3) {
    let p = c.partition();
    let edges = c_edges(&p);
    (ThreeGraph::from_normalized(p.n(), edges), p)
}

/// `C[P]` for a given partition.
pub fn build_c_on(p: &Partition3) -> ThreeGraph {
    ThreeGraph::from_normalized(p.n(), c_edges(p))
}

/// `B[V1,V2]`: triples with two vertices on one side and one on the other.
/// The side of each vertex is returned alongside (0 or 1).
pub fn build_b(n1: usize, n2: usize) -> (ThreeGraph, Vec<u8>) {
    let n = n1 + n2;
    let side: Vec<u8> = (0..n).map(|v| u8::from(v >= n1)).collect();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let ones = side[a] + side[b] + side[c];
                if ones == 1 || ones == 2 {
                    edges.push([a, b, c]);
                }
            }
        }
    }
    (ThreeGraph::from_normalized(n, edges), side)
}

/// The cyclic closed form of `‖C[V1,V2,V3]‖₂` in `x_i = n_i / n`.
pub fn c_l2_closed(c: Composition3) -> Rational {
    let n = c.n() as i128;
    if n == 0 {
        return Rational::zero();
    }
    let nn = int(n);
    let x: [Rational; 3] = c.0.map(|k| Rational::new(k as i128, n));
    let two = int(2);
    let mut total = Rational::zero();
    for i in 0..3 {
        let (xi, xj, xk) = (x[i], x[(i + 1) % 3], x[(i + 2) % 3]);
        let p = xi * xj;
        let s = xi + xk;
        let quartic = p * (two * s * s + p) / two;
        let cubic = p * (int(4) * xi + xj + int(4) * xk) / two;
        total += quartic * nn.pow(4) - cubic * nn.pow(3) + p * nn.pow(2);
    }
    total
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerBoundReport {
    pub delta: Rational,
    pub composition: Composition3,
    /// `x_i >= 1/3 - δ` for all `i`, `n >= 9/(2δ²)` and `0 < δ < 1/3`.
    pub precondition_met: bool,
    pub lhs: Rational,
    /// `n⁴/6 − 2δn⁴`.
    pub rhs: Rational,
    pub holds: bool,
}

/// Compares `‖C‖₂` with `n⁴/6 − 2δn⁴`.
pub fn c_lower_bound_check(delta: Rational, c: Composition3) -> LowerBoundReport {
    let n = c.n() as i128;
    let third = Rational::new(1, 3);
    let delta_ok = delta > Rational::zero() && delta < third;
    let sizes_ok = n > 0 && c.0.iter().all(|&k| Rational::new(k as i128, n) >= third - delta);
    let order_ok = delta_ok && int(n) * delta * delta * int(2) >= int(9);
    let lhs = c_l2_closed(c);
    let n4 = int(n.pow(4));
    let rhs = n4 / int(6) - int(2) * delta * n4;
    LowerBoundReport {
        delta,
        composition: c,
        precondition_met: delta_ok && sizes_ok && order_ok,
        lhs,
        rhs,
        holds: lhs >= rhs,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GainCheck {
    pub polynomial: &'static str,
    pub parameter: i128,
    pub from: Composition3,
    pub to: Composition3,
    pub expected: Rational,
    pub actual: Rational,
}

impl GainCheck {
    pub fn pass(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub n: usize,
    /// `n >= 6`, where balanced maximality is asserted.
    pub in_stated_range: bool,
    pub values: Vec<(Composition3, Rational)>,
    pub max: Rational,
    pub maximizers: Vec<Composition3>,
    /// Maximizers up to cyclic rotation.
    pub maximizer_classes: Vec<Composition3>,
    /// Every maximizer is near-balanced and every near-balanced composition
    /// is a maximizer.
    pub maximizers_are_near_balanced: bool,
    pub gains: Vec<GainCheck>,
}

impl SweepReport {
    pub fn gains_pass(&self) -> bool {
        self.gains.iter().all(GainCheck::pass)
    }

    pub fn pass(&self) -> bool {
        (!self.in_stated_range || self.maximizers_are_near_balanced) && self.gains_pass()
    }
}

/// Difference `‖C'‖₂ − ‖C‖₂` for the move `(n1−1, n2, n3+1)`, as displayed in
/// the first case of the balancedness argument.
pub fn move_gain_case1(n1: i128, n2: i128, n3: i128) -> Rational {
    let r = |p, q| Rational::new(p, q);
    int(n1 * n1 * n3 + 2 * n1 * (n2 * n2 + n3 * n3 - n2 - n3) + n2.pow(3) - n3.pow(3) - 2 * n2 * n2 * n3)
        - int(3 * n2 * n3 * n3)
        - r(7, 2) * int(n2 * n2)
        - r(1, 2) * int(n3 * n3)
        + int(2 * n2 * n3)
        + r(5, 2) * int(n2)
        + r(1, 2) * int(n3)
}

/// Difference for the move `(n1−1, n2+1, n3)` of the second case.
pub fn move_gain_case2(n1: i128, n2: i128, n3: i128) -> Rational {
    let r = |p, q| Rational::new(p, q);
    int((1 - n1) * n2 * n2 - 2 * n2 * (n1 * n1 + n3 * n3 - 2 * n1 - n3 + 1) + n1.pow(3))
        - r(9, 2) * int(n1 * n1)
        + r(13, 2) * int(n1)
        - int(n3.pow(3))
        - r(1, 2) * int(n3 * n3)
        + r(9, 2) * int(n3)
        + int(3 * n1 * n1 * n3 + 2 * n1 * n3 * n3 - 8 * n1 * n3 - 3)
}

fn gain(polynomial: &'static str, parameter: i128, from: Composition3, to: Composition3, expected: i128) -> GainCheck {
    GainCheck {
        polynomial,
        parameter,
        from,
        to,
        expected: int(expected),
        actual: c_l2_closed(to) - c_l2_closed(from),
    }
}

/// The boundary-family gains whose compositions have exactly `n` vertices.
pub fn move_gains(n: usize) -> Vec<GainCheck> {
    let c = |a: i128, b: i128, d: i128| Composition3::new(a as usize, b as usize, d as usize);
    let mut out = Vec::new();
    let n = n as i128;
    // case 1: n1 = n3 + 2, n2 in {n3 + 2, n3 + 1, n3}
    for k in 0..=n {
        if 3 * k + 4 == n {
            out.push(gain("6n3^2+13n3+7", k, c(k + 2, k + 2, k), c(k + 1, k + 2, k + 1), 6 * k * k + 13 * k + 7));
        }
        if 3 * k + 3 == n {
            out.push(gain("6n3^2+3n3", k, c(k + 2, k + 1, k), c(k + 1, k + 1, k + 1), 6 * k * k + 3 * k));
        }
        if 3 * k + 2 == n {
            out.push(gain("6n3^2-n3", k, c(k + 2, k, k), c(k + 1, k, k + 1), 6 * k * k - k));
            // case 2 with n2 = n3, n1 = n2 + 2
            out.push(gain("6n2^2-n2", k, c(k + 2, k, k), c(k + 1, k + 1, k), 6 * k * k - k));
        }
    }
    // case 2: n2 = n1 - 2, n3 in {n1, n1 - 1, n1 - 2}
    for m in 2..=n {
        let fams: [(&'static str, i128, i128); 3] = [
            ("6n1^2-11n1+5", m, 6 * m * m - 11 * m + 5),
            ("6n1^2-15n1+9", m - 1, 6 * m * m - 15 * m + 9),
            ("6n1^2-25n1+26", m - 2, 6 * m * m - 25 * m + 26),
        ];
        for (name, n3, value) in fams {
            if m + (m - 2) + n3 == n {
                out.push(gain(name, m, c(m, m - 2, n3), c(m - 1, m - 1, n3), value));
            }
        }
    }
    out
}

/// Closed-form values of every composition of `n` and the maximizer analysis.
pub fn balancedness_sweep(n: usize) -> SweepReport {
    let values: Vec<(Composition3, Rational)> = Composition3::all(n)
        .into_iter()
        .map(|c| (c, c_l2_closed(c)))
        .collect();
    let max = values.iter().map(|(_, v)| *v).max().unwrap_or_else(Rational::zero);
    let maximizers: Vec<Composition3> = values.iter().filter(|(_, v)| *v == max).map(|(c, _)| *c).collect();
    let mut maximizer_classes: Vec<Composition3> = maximizers.iter().map(|c| c.rotation_representative()).collect();
    maximizer_classes.sort_unstable();
    maximizer_classes.dedup();
    let near: Vec<Composition3> = values.iter().map(|(c, _)| *c).filter(|c| c.is_near_balanced()).collect();
    let maximizers_are_near_balanced = maximizers == near;
    let mut gains = move_gains(n);
    // the general move expressions, on every composition where they apply
    for &(c, v) in &values {
        let [a, b, d] = c.0.map(|k| k as i128);
        if a >= 1 {
            let to1 = Composition3::new(c.0[0] - 1, c.0[1], c.0[2] + 1);
            gains.push(GainCheck {
                polynomial: "case1-move",
                parameter: a,
                from: c,
                to: to1,
                expected: move_gain_case1(a, b, d),
                actual: c_l2_closed(to1) - v,
            });
            let to2 = Composition3::new(c.0[0] - 1, c.0[1] + 1, c.0[2]);
            gains.push(GainCheck {
                polynomial: "case2-move",
                parameter: a,
                from: c,
                to: to2,
                expected: move_gain_case2(a, b, d),
                actual: c_l2_closed(to2) - v,
            });
        }
    }
    SweepReport {
        n,
        in_stated_range: n >= 6,
        values,
        max,
        maximizers,
        maximizer_classes,
        maximizers_are_near_balanced,
        gains,
    }
}

/// `‖C_n‖₂` with the best composition of `n` (the balanced one for `n >= 6`).
pub fn best_c_value(n: usize) -> (Composition3, Rational) {
    let mut best = (Composition3::balanced(n), c_l2_closed(Composition3::balanced(n)));
    for c in Composition3::all(n) {
        let v = c_l2_closed(c);
        if v > best.1 {
            best = (c, v);
        }
    }
    best
}

/// Side sizes of a 2-sided construction.
pub fn b_side_sizes(side: &[u8]) -> [usize; 2] {
    let mut s = [0; 2];
    for &x in side {
        s[x as usize] += 1;
    }
    s
}

/// Every 5-set of `h` misses at least one of its triples.
pub fn is_k53_free(h: &ThreeGraph) -> bool {
    let n = h.n();
    let mut idx = vec![0usize; 5];
    fn rec(h: &ThreeGraph, n: usize, start: usize, depth: usize, idx: &mut Vec<usize>) -> bool {
        if depth == 5 {
            for a in 0..5 {
                for b in a + 1..5 {
                    for c in b + 1..5 {
                        if !h.has_edge(&[idx[a], idx[b], idx[c]]) {
                            return true;
                        }
                    }
                }
            }
            return false;
        }
        for v in start..n {
            idx[depth] = v;
            if !rec(h, n, v + 1, depth + 1, idx) {
                return false;
            }
        }
        true
    }
    rec(h, n, 0, 0, &mut idx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn build_c_examples() {
        assert_eq!(build_c(Composition3::new(1, 1, 1)).0.edges(), &[[0, 1, 2]]);
        assert_eq!(build_c(Composition3::new(2, 2, 2)).0.len(), 14);
        assert_eq!(build_c(Composition3::new(2, 1, 1)).0.len(), 3);
    }

    #[test]
    fn build_b_examples() {
        assert_eq!(build_b(2, 1).0.len(), 1);
        assert_eq!(build_b(2, 2).0.len(), 4);
        assert!(build_b(3, 0).0.is_empty());
        assert_eq!(b_side_sizes(&build_b(3, 2).1), [3, 2]);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(c_l2_closed(Composition3::new(1, 1, 1)), int(3));
        let (c6, _) = build_c(Composition3::new(2, 2, 2));
        assert_eq!(c_l2_closed(Composition3::new(2, 2, 2)), int(c6.l2_norm() as i128));
        assert_eq!(c_l2_closed(Composition3::new(0, 0, 5)), int(0));
    }

    #[test]
    fn closed_form_matches_enumeration_small() {
        for n in 0..=12 {
            for c in Composition3::all(n) {
                assert_eq!(c_l2_closed(c), int(build_c(c).0.l2_norm() as i128), "{c:?}");
            }
        }
    }

    #[test]
    fn codegree_inside_part_of_c6() {
        let (c6, _) = build_c(Composition3::new(2, 2, 2));
        assert_eq!(c6.codegree(0, 1).unwrap(), 2);
        assert_eq!(c6.codegree(0, 2).unwrap(), 3);
        assert!(!c6.contains_k43());
    }

    #[test]
    fn lower_bound_examples() {
        let r = c_lower_bound_check(frac(1, 12), Composition3::new(216, 216, 216));
        assert!(r.precondition_met && r.holds);
        // δ = 1/4: minimal n = 72
        let r = c_lower_bound_check(frac(1, 4), Composition3::new(24, 24, 24));
        assert!(r.precondition_met && r.holds);
        let r = c_lower_bound_check(frac(1, 4), Composition3::new(1, 1, 70));
        assert!(!r.precondition_met);
    }

    #[test]
    fn sweep_examples() {
        let r = balancedness_sweep(6);
        assert_eq!(r.values.len(), 28);
        assert_eq!(r.maximizers, vec![Composition3::new(2, 2, 2)]);
        assert!(r.pass());
        let r = balancedness_sweep(7);
        assert!(r.maximizers.iter().all(Composition3::is_near_balanced));
        assert!(r.pass());
        let g = move_gains(10);
        let fam = g.iter().find(|g| g.polynomial == "6n3^2+13n3+7").unwrap();
        assert_eq!((fam.from, fam.to), (Composition3::new(4, 4, 2), Composition3::new(3, 4, 3)));
        assert_eq!(fam.expected, int(57));
        assert!(g.iter().all(GainCheck::pass));
    }

    #[test]
    fn b_is_k53_free() {
        for n in 1..=5 {
            assert!(is_k53_free(&build_b(n, n).0));
        }
        assert!(!is_k53_free(&ThreeGraph::complete(5)));
    }
}
