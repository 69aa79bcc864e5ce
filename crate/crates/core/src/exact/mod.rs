//! Exact integer and rational arithmetic helpers, 2x2 matrices, dense
//! multilinear forms and two-dimensional lattice reduction.

mod lattice;
mod mat2;
mod multiform;
mod poly;

pub use lattice::{hnf_rows, lagrange_gauss_reduce, NormForm, ReducedBasis};
pub use mat2::IMat2;
pub use multiform::{multiform_eval, multiform_mul, multiform_substitute, Mismatch, MultiForm};
pub use poly::{find_grid_counterexample, homogeneous_grid};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn rat_of(v: &BigInt) -> Rat {
    Rat::from_integer(v.clone())
}

/// Rounds to the nearest integer, ties towards positive infinity.
pub fn round_rat(x: &Rat) -> BigInt {
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    (x + half).floor().to_integer()
}

/// Floor of the square root of a non-negative integer.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of a negative number");
    n.sqrt()
}

/// Exact square root when `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

/// Exact cube root of an integer of either sign.
pub fn exact_cbrt(n: &BigInt) -> Option<BigInt> {
    let r = n.cbrt();
    (&r * &r * &r == *n).then_some(r)
}

pub fn rat_sqrt(x: &Rat) -> Option<Rat> {
    Some(Rat::new(exact_sqrt(x.numer())?, exact_sqrt(x.denom())?))
}

pub fn rat_cbrt(x: &Rat) -> Option<Rat> {
    Some(Rat::new(exact_cbrt(x.numer())?, exact_cbrt(x.denom())?))
}

pub fn is_square(n: &BigInt) -> bool {
    exact_sqrt(n).is_some()
}

/// Extended gcd: returns (g, s, t) with s·a + t·b = g and g ≥ 0.
pub fn xgcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Inverse of `a` modulo `m > 0`, if it exists.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let (g, s, _) = xgcd(a, m);
    g.is_one().then(|| s.mod_floor(m))
}

pub fn gcd_all<'a>(it: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    it.into_iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

pub fn sign(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

pub fn rat_sign(x: &Rat) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// ε ∈ {0,1} with ε ≡ D mod 4, or `None` when D ≡ 2, 3.
pub fn epsilon_of(d: &BigInt) -> Option<u8> {
    let r = d.mod_floor(&BigInt::from(4));
    if r.is_zero() {
        Some(0)
    } else if r.is_one() {
        Some(1)
    } else {
        None
    }
}

/// Integer roots of the depressed monic cubic T³ + p·T + q.
pub fn integer_roots_depressed_cubic(p: &BigInt, q: &BigInt) -> Vec<BigInt> {
    let f = |t: &BigInt| t * t * t + p * t + q;
    let bound = BigInt::one() + p.abs().max(q.abs());
    let mut roots = Vec::new();
    let mut search = |lo: BigInt, hi: BigInt, increasing: bool| {
        let (mut lo, mut hi) = (lo, hi);
        while lo <= hi {
            let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
            let v = f(&mid);
            if v.is_zero() {
                roots.push(mid);
                return;
            }
            if v.is_negative() == increasing {
                lo = mid + 1;
            } else {
                hi = mid - 1;
            }
        }
    };
    if !p.is_negative() {
        search(-bound.clone(), bound, true);
    } else {
        // turning points at ±s with s² = −p/3
        let s2 = Rat::new(-p.clone(), BigInt::from(3));
        let fl = isqrt(&s2.floor().to_integer());
        let cl = if Rat::from_integer(&fl * &fl) == s2 { fl.clone() } else { &fl + 1 };
        search(-bound.clone(), -cl.clone(), true);
        search(-fl.clone(), fl, false);
        search(cl, bound, true);
    }
    roots.sort();
    roots.dedup();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_roots() {
        // (T−1)(T−2)(T+3) = T³ − 7T + 6
        assert_eq!(integer_roots_depressed_cubic(&int(-7), &int(6)), vec![int(-3), int(1), int(2)]);
        // T³ − 8
        assert_eq!(integer_roots_depressed_cubic(&int(0), &int(-8)), vec![int(2)]);
        // T³ − 3T + 2 = (T−1)²(T+2)
        assert_eq!(integer_roots_depressed_cubic(&int(-3), &int(2)), vec![int(-2), int(1)]);
        assert!(integer_roots_depressed_cubic(&int(1), &int(1)).is_empty());
    }

    #[test]
    fn roots_and_gcd() {
        assert_eq!(exact_cbrt(&int(-27)), Some(int(-3)));
        assert_eq!(exact_cbrt(&int(26)), None);
        assert_eq!(exact_sqrt(&int(49)), Some(int(7)));
        assert_eq!(mod_inverse(&int(3), &int(7)), Some(int(5)));
        assert_eq!(round_rat(&Rat::new(int(-5), int(2))), int(-2));
        assert_eq!(epsilon_of(&int(-47)), Some(1));
        assert_eq!(epsilon_of(&int(7)), None);
    }
}
