//! Interval certificate for the simplex inequality.
//!
//! Write `g = RHS - LHS` and `h_i = x_i - 1/3`, `S = Σ h_i²`. On the simplex
//! `Σ h_i = 0`, and expanding gives
//!
//! `g = (11/75) S - h1 h2 h3 - (h1² h2 + h2² h3 + h3² h1)/2`.
//!
//! Since `Σ h_i = 0` we have `|h_i| <= sqrt(2S/3)` and `|h_j h_k| <= S/2`, so
//! the cubic part is at most `sqrt(2/3) S^{3/2}` in absolute value, and
//! `g >= S (11/75 - sqrt(2S/3)) >= 0` once `S <= 1/32`. Boxes whose interval
//! enclosure of `S` stays below `1/32` are therefore settled analytically;
//! every other box must show an interval lower bound of `g` that is `>= 0`,
//! or it is split into quarters until `min_width`.
//!
//! Arithmetic is `f64` with every bound pushed outward by one ulp.

use alloc::vec;
use alloc::vec::Vec;

/// Closed interval `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Interval {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(x: f64) -> Interval {
        Interval { lo: x, hi: x }
    }

    /// Encloses `p/q`.
    pub fn ratio(p: f64, q: f64) -> Interval {
        let x = p / q;
        Interval {
            lo: x.next_down(),
            hi: x.next_up(),
        }
    }

    pub fn add(self, o: Interval) -> Interval {
        Interval {
            lo: (self.lo + o.lo).next_down(),
            hi: (self.hi + o.hi).next_up(),
        }
    }

    pub fn sub(self, o: Interval) -> Interval {
        Interval {
            lo: (self.lo - o.hi).next_down(),
            hi: (self.hi - o.lo).next_up(),
        }
    }

    pub fn mul(self, o: Interval) -> Interval {
        let c = [self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi];
        let lo = c.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = c.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Interval {
            lo: lo.next_down(),
            hi: hi.next_up(),
        }
    }

    pub fn sqr(self) -> Interval {
        if self.lo >= 0.0 {
            Interval::new((self.lo * self.lo).next_down(), (self.hi * self.hi).next_up())
        } else if self.hi <= 0.0 {
            Interval::new((self.hi * self.hi).next_down(), (self.lo * self.lo).next_up())
        } else {
            let m = self.lo.abs().max(self.hi.abs());
            Interval::new(0.0, (m * m).next_up())
        }
    }

    pub fn scale(self, k: Interval) -> Interval {
        self.mul(k)
    }

    pub fn width(self) -> f64 {
        self.hi - self.lo
    }
}

/// Enclosure of `g` over a box, with `x3` clipped to `[0, 1]`.
pub fn margin_enclosure(x1: Interval, x2: Interval) -> Interval {
    let one = Interval::point(1.0);
    let mut x3 = one.sub(x1).sub(x2);
    x3.lo = x3.lo.max(0.0);
    x3.hi = x3.hi.min(1.0);
    let third = Interval::ratio(1.0, 3.0);
    let spread = x1.sub(third).sqr().add(x2.sub(third).sqr()).add(x3.sub(third).sqr());
    let cyc = x1.sqr().mul(x2).add(x2.sqr().mul(x3)).add(x3.sqr().mul(x1));
    let lhs = x1.mul(x2).mul(x3).add(cyc.scale(Interval::point(0.5)));
    Interval::ratio(5.0, 54.0).sub(spread.scale(Interval::ratio(1.0, 50.0))).sub(lhs)
}

/// Enclosure of `S = Σ (x_i - 1/3)²` on the simplex, using `h3 = -h1 - h2`.
pub fn spread_enclosure(x1: Interval, x2: Interval) -> Interval {
    let third = Interval::ratio(1.0, 3.0);
    let h1 = x1.sub(third);
    let h2 = x2.sub(third);
    let h3 = Interval::point(0.0).sub(h1).sub(h2);
    h1.sqr().add(h2.sqr()).add(h3.sqr())
}

/// Box `[x1, x1 + w] × [x2, x2 + w]` in the `(x1, x2)` plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SimplexBox {
    pub x1: f64,
    pub x2: f64,
    pub w: f64,
}

impl SimplexBox {
    fn intervals(&self) -> (Interval, Interval) {
        (
            Interval::new(self.x1, (self.x1 + self.w).next_up()),
            Interval::new(self.x2, (self.x2 + self.w).next_up()),
        )
    }

    fn outside_simplex(&self) -> bool {
        // the box corner nearest the simplex already has x1 + x2 > 1
        (self.x1 + self.x2).next_down() > 1.0
    }

    fn quarters(&self) -> [SimplexBox; 4] {
        let h = self.w / 2.0;
        [
            SimplexBox { x1: self.x1, x2: self.x2, w: h },
            SimplexBox { x1: self.x1 + h, x2: self.x2, w: h },
            SimplexBox { x1: self.x1, x2: self.x2 + h, w: h },
            SimplexBox { x1: self.x1 + h, x2: self.x2 + h, w: h },
        ]
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IntervalReport {
    pub min_width: f64,
    /// Boxes settled by an interval bound `g >= 0`.
    pub certified: usize,
    /// Boxes settled by the local bound near the barycenter.
    pub local: usize,
    /// Boxes disjoint from the simplex.
    pub outside: usize,
    pub undecided: Vec<SimplexBox>,
    /// Smallest box width reached.
    pub finest: f64,
}

impl IntervalReport {
    pub fn certified_all(&self) -> bool {
        self.undecided.is_empty()
    }
}

/// Local radius bound `S <= 1/32`.
pub const LOCAL_SPREAD: f64 = 1.0 / 32.0;

/// Covers `[0,1]²` with boxes and settles each one.
pub fn certify_simplex(min_width: f64) -> IntervalReport {
    let mut rep = IntervalReport {
        min_width,
        certified: 0,
        local: 0,
        outside: 0,
        undecided: Vec::new(),
        finest: 1.0,
    };
    let mut stack = vec![SimplexBox { x1: 0.0, x2: 0.0, w: 1.0 }];
    while let Some(b) = stack.pop() {
        rep.finest = rep.finest.min(b.w);
        if b.outside_simplex() {
            rep.outside += 1;
            continue;
        }
        let (x1, x2) = b.intervals();
        if spread_enclosure(x1, x2).hi <= LOCAL_SPREAD {
            rep.local += 1;
            continue;
        }
        if margin_enclosure(x1, x2).lo >= 0.0 {
            rep.certified += 1;
            continue;
        }
        if b.w / 2.0 < min_width {
            rep.undecided.push(b);
            continue;
        }
        stack.extend(b.quarters());
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_ops_enclose() {
        let a = Interval::new(-1.0, 2.0);
        let b = Interval::new(3.0, 4.0);
        let p = a.mul(b);
        assert!(p.lo <= -4.0 && p.hi >= 8.0);
        let s = a.sqr();
        assert!(s.lo == 0.0 && s.hi >= 4.0);
        let t = Interval::ratio(1.0, 3.0);
        assert!(t.lo < 1.0 / 3.0 && t.hi > 1.0 / 3.0);
    }

    #[test]
    fn margin_enclosure_contains_point_values() {
        let g = margin_enclosure(Interval::point(1.0), Interval::point(0.0));
        let exact = 107.0 / 1350.0;
        assert!(g.lo <= exact && exact <= g.hi && g.width() < 1e-12);
    }

    #[test]
    fn certificate_coarse() {
        let r = certify_simplex(1e-4);
        assert!(r.certified_all(), "{:?}", r.undecided.first());
        assert!(r.local > 0 && r.certified > 0);
    }
}
