use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{epsilon_of, IMat2};

/// The binary quadratic form a·x² + b·xy + c·y².
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bqf {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl Bqf {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        Bqf { a: a.into(), b: b.into(), c: c.into() }
    }

    pub fn disc(&self) -> BigInt {
        &self.b * &self.b - BigInt::from(4) * &self.a * &self.c
    }

    pub fn content(&self) -> BigInt {
        self.a.gcd(&self.b).gcd(&self.c)
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        &self.a * x * x + &self.b * x * y + &self.c * y * y
    }

    /// The form Q(x, −y) = [a, −b, c].
    pub fn flip(&self) -> Bqf {
        Bqf { a: self.a.clone(), b: -self.b.clone(), c: self.c.clone() }
    }

    pub fn neg(&self) -> Bqf {
        Bqf { a: -self.a.clone(), b: -self.b.clone(), c: -self.c.clone() }
    }

    pub fn is_positive_definite(&self) -> bool {
        self.disc().is_negative() && self.a.is_positive()
    }

    pub fn is_negative_definite(&self) -> bool {
        self.disc().is_negative() && self.a.is_negative()
    }

    pub fn coeffs(&self) -> [BigInt; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }

    /// Q^g(x, y) = Q(αx + βy, γx + δy) for g = [[α, β], [γ, δ]]; g need not
    /// be unimodular here.
    pub fn substitute(&self, g: &[[BigInt; 2]; 2]) -> Bqf {
        let [[p, q], [r, s]] = g;
        let (a, b, c) = (&self.a, &self.b, &self.c);
        Bqf {
            a: a * p * p + b * p * r + c * r * r,
            b: BigInt::from(2) * a * p * q + b * (p * s + q * r) + BigInt::from(2) * c * r * s,
            c: a * q * q + b * q * s + c * s * s,
        }
    }
}

impl fmt::Display for Bqf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.a, self.b, self.c)
    }
}

/// The SL2(Z) action Q ↦ Q^g = Q(ax + by, cx + dy).
pub fn sl2_act(q: &Bqf, g: &IMat2) -> Result<Bqf> {
    g.check_sl2z()?;
    let m = g.int_rows()?;
    Ok(q.substitute(&[[m[0][0].clone(), m[0][1].clone()], [m[1][0].clone(), m[1][1].clone()]]))
}

/// x² − (D/4)y² or x² + xy + ((1 − D)/4)y².
pub fn principal_form(d: &BigInt) -> Result<Bqf> {
    match epsilon_of(d) {
        Some(0) => Ok(Bqf::new(1, 0, -(d / BigInt::from(4)))),
        Some(_) => Ok(Bqf::new(1, 1, (BigInt::one() - d) / BigInt::from(4))),
        None => Err(Error::BadDiscriminant(d.clone())),
    }
}

pub(crate) fn check_nonsquare(d: &BigInt) -> Result<()> {
    if d.is_zero() || crate::exact::is_square(d) {
        return Err(Error::Unsupported(format!("square discriminant {d}")));
    }
    Ok(())
}
