//! Exact rational helpers on top of `num_rational::Ratio<i128>`.

use num_integer::Roots;
use num_traits::{Signed, Zero};

pub type Rational = num_rational::Ratio<i128>;

pub fn int(x: i128) -> Rational {
    Rational::from_integer(x)
}

pub fn frac(p: i128, q: i128) -> Rational {
    Rational::new(p, q)
}

/// Floor of a rational.
pub fn floor(x: &Rational) -> i128 {
    x.floor().to_integer()
}

/// Ceiling of a rational.
pub fn ceil(x: &Rational) -> i128 {
    x.ceil().to_integer()
}

/// Exact square root when `x` is the square of a rational.
pub fn exact_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let (p, q) = (*x.numer(), *x.denom());
    let (rp, rq) = (p.sqrt(), q.sqrt());
    (rp * rp == p && rq * rq == q).then(|| Rational::new(rp, rq))
}

/// Rational enclosure `lo <= sqrt(x) <= hi` with `hi - lo <= 1/scale`.
pub fn sqrt_enclosure(x: &Rational, scale: i128) -> (Rational, Rational) {
    assert!(!x.is_negative() && scale > 0);
    if let Some(r) = exact_sqrt(x) {
        return (r, r);
    }
    // floor(sqrt(x) * scale) = floor(sqrt(x * scale^2))
    let scaled = x * Rational::from_integer(scale * scale);
    let s = floor(&scaled).sqrt();
    (Rational::new(s, scale), Rational::new(s + 1, scale))
}

/// `lhs >= c * sqrt(x)` for `c, x >= 0`, decided exactly by squaring.
pub fn ge_scaled_sqrt(lhs: &Rational, c: &Rational, x: &Rational) -> bool {
    if c.is_zero() || x.is_zero() {
        return !lhs.is_negative();
    }
    if lhs.is_negative() {
        return false;
    }
    lhs * lhs >= c * c * x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_exact_and_enclosed() {
        assert_eq!(exact_sqrt(&frac(9, 4)), Some(frac(3, 2)));
        assert_eq!(exact_sqrt(&frac(2, 1)), None);
        let (lo, hi) = sqrt_enclosure(&int(2), 1000);
        assert!(lo * lo <= int(2) && hi * hi >= int(2));
        assert_eq!(hi - lo, frac(1, 1000));
    }

    #[test]
    fn squared_comparison() {
        // 3 >= 2 * sqrt(2) ; 2 < 2 * sqrt(2)
        assert!(ge_scaled_sqrt(&int(3), &int(2), &int(2)));
        assert!(!ge_scaled_sqrt(&int(2), &int(2), &int(2)));
        assert!(ge_scaled_sqrt(&int(0), &int(0), &int(5)));
        assert!(!ge_scaled_sqrt(&int(-1), &int(1), &int(1)));
    }
}
