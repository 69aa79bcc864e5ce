use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{epsilon_of, integer_roots_depressed_cubic, is_square, rat_cbrt, rat_of, rat_sqrt, Rat};

/// S(D) = Z[τ] with τ² = ετ + n, n = (D − ε)/4.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticRing {
    d: BigInt,
    eps: u8,
    n: BigInt,
}

pub fn ring_of_discriminant(d: &BigInt) -> Result<QuadraticRing> {
    QuadraticRing::new(d)
}

impl QuadraticRing {
    pub fn new(d: &BigInt) -> Result<Self> {
        let eps = epsilon_of(d).ok_or_else(|| Error::BadDiscriminant(d.clone()))?;
        let n = (d - BigInt::from(eps)) / 4;
        Ok(QuadraticRing { d: d.clone(), eps, n })
    }

    pub fn from_i64(d: i64) -> Result<Self> {
        QuadraticRing::new(&BigInt::from(d))
    }

    pub fn discriminant(&self) -> &BigInt {
        &self.d
    }

    pub fn eps(&self) -> u8 {
        self.eps
    }

    pub fn eps_int(&self) -> BigInt {
        BigInt::from(self.eps)
    }

    /// The constant term n = (D − ε)/4 of τ² = ετ + n.
    pub fn n(&self) -> &BigInt {
        &self.n
    }

    /// True when K = S ⊗ Q is a field, i.e. D is not a square.
    pub fn is_field(&self) -> bool {
        !is_square(&self.d)
    }

    pub fn elem(&self, p: impl Into<BigInt>, q: impl Into<BigInt>) -> KElem {
        KElem::new(self, p.into(), q.into(), BigInt::one())
    }

    pub fn from_rats(&self, x0: &Rat, x1: &Rat) -> KElem {
        let d = x0.denom().lcm(x1.denom());
        let p = x0.numer() * (&d / x0.denom());
        let q = x1.numer() * (&d / x1.denom());
        KElem::new(self, p, q, d)
    }

    pub fn zero(&self) -> KElem {
        self.elem(0, 0)
    }

    pub fn one(&self) -> KElem {
        self.elem(1, 0)
    }

    pub fn tau(&self) -> KElem {
        self.elem(0, 1)
    }

    /// √D = 2τ − ε.
    pub fn sqrt_disc(&self) -> KElem {
        self.elem(-BigInt::from(self.eps), 2)
    }

    pub fn torsion_units(&self) -> Vec<KElem> {
        let mut units = vec![self.one(), -self.one()];
        if self.d == BigInt::from(-4) {
            units.push(self.tau());
            units.push(-self.tau());
        } else if self.d == BigInt::from(-3) {
            // τ² = τ − 1, so τ is a primitive sixth root of unity
            let t = self.tau();
            let t2 = &t * &t;
            units.extend([t.clone(), -t, t2.clone(), -t2]);
        }
        units
    }
}

impl fmt::Display for QuadraticRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S({})", self.d)
    }
}

/// An element (p + qτ)/d of K, with d > 0 and gcd(p, q, d) = 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KElem {
    ring: QuadraticRing,
    p: BigInt,
    q: BigInt,
    d: BigInt,
}

impl KElem {
    pub fn new(ring: &QuadraticRing, p: BigInt, q: BigInt, d: BigInt) -> Self {
        assert!(!d.is_zero(), "zero denominator");
        let mut g = p.gcd(&q).gcd(&d);
        if d.is_negative() {
            g = -g;
        }
        KElem { ring: ring.clone(), p: p / &g, q: q / &g, d: d / g }
    }

    pub fn ring(&self) -> &QuadraticRing {
        &self.ring
    }

    pub fn parts(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.p, &self.q, &self.d)
    }

    /// Coordinates (x0, x1) with self = x0 + x1·τ.
    pub fn coords(&self) -> [Rat; 2] {
        [Rat::new(self.p.clone(), self.d.clone()), Rat::new(self.q.clone(), self.d.clone())]
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.d.is_one()
    }

    /// Integer coordinates when the element lies in S.
    pub fn int_coords(&self) -> Option<[BigInt; 2]> {
        self.is_integral().then(|| [self.p.clone(), self.q.clone()])
    }

    pub fn conj(&self) -> KElem {
        KElem::new(&self.ring, &self.p + &self.q * self.ring.eps_int(), -self.q.clone(), self.d.clone())
    }

    pub fn norm(&self) -> Rat {
        let (p, q) = (&self.p, &self.q);
        let num = p * p + self.ring.eps_int() * p * q - &self.ring.n * q * q;
        Rat::new(num, &self.d * &self.d)
    }

    pub fn trace(&self) -> Rat {
        Rat::new(BigInt::from(2) * &self.p + self.ring.eps_int() * &self.q, self.d.clone())
    }

    pub fn inverse(&self) -> Result<KElem> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.conj().scale(&n.recip()))
    }

    pub fn div(&self, other: &KElem) -> Result<KElem> {
        Ok(self * &other.inverse()?)
    }

    pub fn scale(&self, r: &Rat) -> KElem {
        KElem::new(&self.ring, &self.p * r.numer(), &self.q * r.numer(), &self.d * r.denom())
    }

    pub fn scale_int(&self, k: &BigInt) -> KElem {
        KElem::new(&self.ring, &self.p * k, &self.q * k, self.d.clone())
    }

    pub fn pow(&self, e: u32) -> KElem {
        (0..e).fold(self.ring.one(), |acc, _| &acc * self)
    }

    fn check_ring(&self, other: &KElem) {
        assert_eq!(self.ring, other.ring, "elements of different quadratic rings");
    }
}

impl fmt::Display for KElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tau = |q: &BigInt| if q.is_one() { "τ".to_string() } else { format!("{q}τ") };
        let (body, compound) = match (self.p.is_zero(), self.q.is_zero()) {
            (_, true) => (self.p.to_string(), false),
            (true, false) if (-self.q.clone()).is_one() => ("-τ".to_string(), false),
            (true, false) => (tau(&self.q), false),
            (false, false) if self.q.is_negative() => (format!("{} - {}", self.p, tau(&-self.q.clone())), true),
            (false, false) => (format!("{} + {}", self.p, tau(&self.q)), true),
        };
        match (self.d.is_one(), compound) {
            (true, _) => write!(f, "{body}"),
            (false, true) => write!(f, "({body})/{}", self.d),
            (false, false) => write!(f, "{body}/{}", self.d),
        }
    }
}

impl Add for &KElem {
    type Output = KElem;
    fn add(self, o: &KElem) -> KElem {
        self.check_ring(o);
        KElem::new(&self.ring, &self.p * &o.d + &o.p * &self.d, &self.q * &o.d + &o.q * &self.d, &self.d * &o.d)
    }
}

impl Sub for &KElem {
    type Output = KElem;
    fn sub(self, o: &KElem) -> KElem {
        self + &(-o.clone())
    }
}

impl Mul for &KElem {
    type Output = KElem;
    fn mul(self, o: &KElem) -> KElem {
        self.check_ring(o);
        let r = &self.ring;
        let qq = &self.q * &o.q;
        let p = &self.p * &o.p + &r.n * &qq;
        let q = &self.p * &o.q + &self.q * &o.p + r.eps_int() * qq;
        KElem::new(r, p, q, &self.d * &o.d)
    }
}

impl Neg for KElem {
    type Output = KElem;
    fn neg(self) -> KElem {
        KElem { ring: self.ring, p: -self.p, q: -self.q, d: self.d }
    }
}

/// A cube root of `x` in K, if one exists.
pub fn kelem_cube_root(x: &KElem) -> Option<KElem> {
    if x.is_zero() {
        return Some(x.clone());
    }
    let ring = x.ring();
    let m = rat_cbrt(&x.norm())?;
    let s = x.trace();
    // the trace t of y satisfies t³ − 3mt − tr(x) = 0; scale to a monic
    // integer cubic in T = k·t
    let k = m.denom().lcm(s.denom());
    let kr = rat_of(&k);
    let p = (Rat::from_integer((-3).into()) * &m * &kr * &kr).to_integer();
    let q = (-(&s * &kr * &kr * &kr)).to_integer();
    let two = Rat::from_integer(2.into());
    for big_t in integer_roots_depressed_cubic(&p, &q) {
        let t = Rat::new(big_t, k.clone());
        // y is a root of z² − t·z + m
        let disc = &t * &t - Rat::from_integer(4.into()) * &m;
        let mut candidates = Vec::new();
        if let Some(r) = rat_sqrt(&disc) {
            candidates.push(ring.from_rats(&((&t + &r) / &two), &Rat::zero()));
            candidates.push(ring.from_rats(&((&t - &r) / &two), &Rat::zero()));
        }
        if !ring.discriminant().is_zero() {
            if let Some(w) = rat_sqrt(&(&disc / rat_of(ring.discriminant()))) {
                let root = ring.sqrt_disc().scale(&w);
                let half_t = ring.from_rats(&(&t / &two), &Rat::zero());
                candidates.push(&half_t + &root.scale(&two.recip()));
                candidates.push(&half_t - &root.scale(&two.recip()));
            }
        }
        if let Some(y) = candidates.into_iter().find(|y| &y.pow(3) == x) {
            return Some(y);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn s47() -> QuadraticRing {
        QuadraticRing::from_i64(-47).unwrap()
    }

    #[test]
    fn ring_constants() {
        let r = s47();
        assert_eq!(r.eps(), 1);
        assert_eq!(r.n(), &BigInt::from(-12));
        let r8 = QuadraticRing::from_i64(8).unwrap();
        assert_eq!((r8.eps(), r8.n().clone()), (0, BigInt::from(2)));
        assert!(QuadraticRing::from_i64(7).is_err());
        assert!(QuadraticRing::from_i64(-2).is_err());
    }

    #[test]
    fn tau_squared() {
        let r = s47();
        assert_eq!(&r.tau() * &r.tau(), r.elem(-12, 1));
        let r8 = QuadraticRing::from_i64(8).unwrap();
        assert_eq!(&r8.tau() * &r8.tau(), r8.elem(2, 0));
    }

    #[test]
    fn norm_and_inverse() {
        let r = s47();
        let x = r.elem(1, 1);
        assert_eq!(x.norm(), rat(14));
        assert_eq!(x.conj(), r.elem(2, -1));
        let inv = x.inverse().unwrap();
        assert_eq!(inv, KElem::new(&r, 2.into(), (-1).into(), 14.into()));
        assert_eq!(&inv * &x, r.one());
        assert!(r.zero().inverse().is_err());
    }

    #[test]
    fn sqrt_disc_squares_to_d() {
        for d in [-47, -4, -3, 5, 8, 13] {
            let r = QuadraticRing::from_i64(d).unwrap();
            let s = r.sqrt_disc();
            assert_eq!(&s * &s, r.elem(d, 0));
        }
    }

    #[test]
    fn torsion_units_have_norm_one() {
        for d in [-3, -4, -47] {
            let r = QuadraticRing::from_i64(d).unwrap();
            let units = r.torsion_units();
            assert_eq!(units.len(), match d { -3 => 6, -4 => 4, _ => 2 });
            for u in units {
                assert_eq!(u.norm(), rat(1));
                assert_eq!(u.pow(12), r.one());
            }
        }
    }

    #[test]
    fn cube_roots() {
        let r = s47();
        let y = r.elem(1, 1);
        assert_eq!(kelem_cube_root(&y.pow(3)), Some(y.clone()));
        assert_eq!(kelem_cube_root(&r.elem(8, 0)), Some(r.elem(2, 0)));
        assert_eq!(kelem_cube_root(&y), None);
        let z = KElem::new(&r, (-3).into(), 5.into(), 7.into());
        assert_eq!(kelem_cube_root(&z.pow(3)), Some(z));
    }

    #[test]
    fn display() {
        let r = s47();
        assert_eq!(r.elem(2, -1).to_string(), "2 - τ");
        assert_eq!(r.elem(0, -3).to_string(), "-3τ");
        assert_eq!(KElem::new(&r, 0.into(), 1.into(), 12.into()).to_string(), "τ/12");
        assert_eq!(KElem::new(&r, 1.into(), 1.into(), 3.into()).to_string(), "(1 + τ)/3");
    }
}
