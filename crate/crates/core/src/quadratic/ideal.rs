use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ring::{KElem, QuadraticRing};
use crate::error::{Error, Result};
use crate::exact::{hnf_rows, lagrange_gauss_reduce, rat_of, rat_sign, NormForm, Rat};

/// A rank-one oriented fractional ideal with a chosen ordered Z-basis.
///
/// The orientation μ is the sign of the basis determinant with respect to
/// ⟨1, τ⟩, so the signed norm carries the orientation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrientedIdeal {
    basis: [KElem; 2],
}

impl OrientedIdeal {
    pub fn new(b1: KElem, b2: KElem) -> Result<Self> {
        if b1.ring() != b2.ring() {
            return Err(Error::Invalid("basis elements from different rings".into()));
        }
        let ideal = OrientedIdeal { basis: [b1, b2] };
        if ideal.norm().is_zero() {
            return Err(Error::Degenerate("ideal basis is linearly dependent".into()));
        }
        let tau = ideal.ring().tau();
        for b in &ideal.basis {
            if !ideal.contains(&(&tau * b)) {
                return Err(Error::Degenerate(format!("module is not closed under τ (τ·{b} escapes)")));
            }
        }
        Ok(ideal)
    }

    /// The unit ideal S with basis ⟨1, τ⟩.
    pub fn unit(ring: &QuadraticRing) -> Self {
        OrientedIdeal { basis: [ring.one(), ring.tau()] }
    }

    /// κ·S with basis ⟨κ, κτ⟩.
    pub fn principal(kappa: &KElem) -> Result<Self> {
        OrientedIdeal::new(kappa.clone(), kappa * &kappa.ring().tau())
    }

    pub fn ring(&self) -> &QuadraticRing {
        self.basis[0].ring()
    }

    pub fn basis(&self) -> &[KElem; 2] {
        &self.basis
    }

    /// The signed norm: the determinant of the basis coordinates.
    pub fn norm(&self) -> Rat {
        let [x, y] = self.basis[0].coords();
        let [z, w] = self.basis[1].coords();
        x * w - y * z
    }

    pub fn mu(&self) -> i8 {
        rat_sign(&self.norm())
    }

    /// Coordinates of `x` in the chosen basis.
    pub fn coords_of(&self, x: &KElem) -> [Rat; 2] {
        let [a, b] = self.basis[0].coords();
        let [c, d] = self.basis[1].coords();
        let [x0, x1] = x.coords();
        let det = &a * &d - &b * &c;
        [(&x0 * &d - &x1 * &c) / &det, (&x1 * &a - &x0 * &b) / det]
    }

    pub fn contains(&self, x: &KElem) -> bool {
        self.coords_of(x).iter().all(|c| c.is_integer())
    }

    /// True when the ideal lies inside S.
    pub fn is_integral(&self) -> bool {
        self.basis.iter().all(KElem::is_integral)
    }

    /// Multiplies every basis element by κ.
    pub fn scale(&self, kappa: &KElem) -> Result<Self> {
        if kappa.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(OrientedIdeal { basis: [&self.basis[0] * kappa, &self.basis[1] * kappa] })
    }

    /// The conjugate module with the conjugated basis.
    pub fn conj(&self) -> Self {
        OrientedIdeal { basis: [self.basis[0].conj(), self.basis[1].conj()] }
    }

    /// The canonical basis of the same module: Hermite normal form with the
    /// second vector negated when μ = −1.
    pub fn canonical(&self) -> Self {
        canonical_module(self.ring(), &self.basis, self.mu()).expect("valid ideal has a rank-2 HNF")
    }

    pub fn same_module(&self, other: &OrientedIdeal) -> bool {
        self.ring() == other.ring() && hnf_key(&self.basis) == hnf_key(&other.basis)
    }
}

impl fmt::Display for OrientedIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}, {}⟩", self.basis[0], self.basis[1])
    }
}

fn hnf_key(gens: &[KElem]) -> Option<(BigInt, [[BigInt; 2]; 2])> {
    let denom = gens.iter().fold(BigInt::one(), |l, g| l.lcm(g.parts().2));
    let rows: Vec<[BigInt; 2]> = gens
        .iter()
        .map(|g| {
            let (p, q, d) = g.parts();
            let s = &denom / d;
            [p * &s, q * &s]
        })
        .collect();
    let h = hnf_rows(&rows).ok()?;
    // normalise the common denominator so equal modules give equal keys
    let g = h[0][0].gcd(&h[0][1]).gcd(&h[1][1]).gcd(&denom);
    Some((&denom / &g, h.map(|r| r.map(|x| x / &g))))
}

fn canonical_module(ring: &QuadraticRing, gens: &[KElem], mu: i8) -> Result<OrientedIdeal> {
    let (denom, h) = hnf_key(gens).ok_or_else(|| Error::Degenerate("module has rank < 2".into()))?;
    let mk = |r: &[BigInt; 2]| KElem::new(ring, r[0].clone(), r[1].clone(), denom.clone());
    let b1 = mk(&h[0]);
    let b2 = if mu < 0 { -mk(&h[1]) } else { mk(&h[1]) };
    OrientedIdeal::new(b1, b2)
}

pub fn ideal_norm(ideal: &OrientedIdeal) -> Rat {
    ideal.norm()
}

/// The product module with canonical basis and orientation μ_I·μ_J.
pub fn ideal_mul(i: &OrientedIdeal, j: &OrientedIdeal) -> Result<OrientedIdeal> {
    if i.ring() != j.ring() {
        return Err(Error::Invalid("ideals of different rings".into()));
    }
    let gens: Vec<KElem> =
        i.basis.iter().flat_map(|a| j.basis.iter().map(move |b| a * b)).collect();
    canonical_module(i.ring(), &gens, i.mu() * j.mu())
}

/// A generator κ with I = κ·S (as modules), or `None` if I is not
/// principal. Only negative discriminants are supported.
pub fn principal_generator(ideal: &OrientedIdeal) -> Result<Option<KElem>> {
    let ring = ideal.ring();
    if !ring.discriminant().is_negative() {
        return Err(Error::Unsupported("principal generators need D < 0".into()));
    }
    let [b1, b2] = &ideal.basis;
    let gram = NormForm::new(b1.norm(), (b1 * &b2.conj()).trace(), b2.norm());
    let one = BigInt::one();
    let zero = BigInt::zero();
    let red = lagrange_gauss_reduce([[one.clone(), zero.clone()], [zero, one]], &gram)?;
    if red.min != ideal.norm().abs() {
        return Ok(None);
    }
    let v = &red.basis[0];
    let kappa = &b1.scale(&rat_of(&v[0])) + &b2.scale(&rat_of(&v[1]));
    let candidate = OrientedIdeal::principal(&kappa)?;
    Ok(candidate.same_module(ideal).then_some(kappa))
}

/// Whether two oriented ideals lie in the same narrow class.
pub fn ideal_class_equal(i: &OrientedIdeal, j: &OrientedIdeal) -> Result<bool> {
    if i.ring() != j.ring() {
        return Err(Error::Invalid("ideals of different rings".into()));
    }
    if i.ring().discriminant().is_negative() {
        if i.mu() != j.mu() {
            return Ok(false);
        }
        let prod = ideal_mul(i, &j.conj())?;
        return Ok(principal_generator(&prod)?.is_some());
    }
    let qi = crate::bqf::ideal_to_bqf(i)?;
    let qj = crate::bqf::ideal_to_bqf(j)?;
    Ok(crate::bqf::reduce(&qi)?.form == crate::bqf::reduce(&qj)?.form)
}
