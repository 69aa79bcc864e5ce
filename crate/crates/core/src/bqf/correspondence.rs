use num_bigint::BigInt;
use num_traits::Zero;

use super::form::Bqf;
use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::quadratic::{OrientedIdeal, QuadraticRing};

/// The oriented ideal ⟨α1, α2⟩ with N(xα1 − yα2)/N(I) = Q(x, y).
pub fn bqf_to_ideal(q: &Bqf) -> Result<OrientedIdeal> {
    let d = q.disc();
    if d.is_zero() {
        return Err(Error::Degenerate("zero discriminant".into()));
    }
    let ring = QuadraticRing::new(&d)?;
    if !q.a.is_zero() {
        return leading_ideal(&ring, q);
    }
    // move to a form with nonzero leading coefficient and pull the basis back
    let (qg, g) = (1..=2)
        .map(|k| {
            let g = [[BigInt::from(1), BigInt::from(0)], [BigInt::from(k), BigInt::from(1)]];
            (q.substitute(&g), g)
        })
        .find(|(f, _)| !f.a.is_zero())
        .ok_or_else(|| Error::Degenerate(format!("{q} has square discriminant")))?;
    let ideal = leading_ideal(&ring, &qg)?;
    let [b1, b2] = ideal.basis();
    let [[a, b], [c, dd]] = &g;
    let a1 = &b1.scale_int(dd) + &b2.scale_int(c);
    let a2 = &b1.scale_int(b) + &b2.scale_int(a);
    OrientedIdeal::new(a1, a2)
}

fn leading_ideal(ring: &QuadraticRing, q: &Bqf) -> Result<OrientedIdeal> {
    let k: BigInt = (&q.b + ring.eps_int()) / BigInt::from(2);
    OrientedIdeal::new(ring.elem(q.a.clone(), 0), ring.elem(-k, 1))
}

/// The form (N(b1), −tr(b1·conj b2), N(b2)) / N(I) of an oriented ideal.
pub fn ideal_to_bqf(ideal: &OrientedIdeal) -> Result<Bqf> {
    let [b1, b2] = ideal.basis();
    let n = ideal.norm();
    let coeffs = [b1.norm() / &n, -(b1 * &b2.conj()).trace() / &n, b2.norm() / &n];
    let ints: Option<Vec<BigInt>> =
        coeffs.iter().map(|c: &Rat| c.is_integer().then(|| c.to_integer())).collect();
    let ints = ints.ok_or_else(|| Error::Degenerate(format!("ideal {ideal} gives a non-integral form")))?;
    Ok(Bqf { a: ints[0].clone(), b: ints[1].clone(), c: ints[2].clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bqf::reduce;
    use crate::exact::rat;

    #[test]
    fn principal_form_is_unit_ideal() {
        let ideal = bqf_to_ideal(&Bqf::new(1, 1, 12)).unwrap();
        assert!(ideal.same_module(&OrientedIdeal::unit(ideal.ring())));
        assert_eq!(ideal.mu(), 1);
        // the basis ⟨1, τ⟩ gives N(x − yτ) = x² − xy + 12y²
        let back = ideal_to_bqf(&OrientedIdeal::unit(ideal.ring())).unwrap();
        assert_eq!(back, Bqf::new(1, -1, 12));
        assert_eq!(reduce(&back).unwrap().form, Bqf::new(1, 1, 12));
    }

    #[test]
    fn prime_of_norm_two() {
        let ideal = bqf_to_ideal(&Bqf::new(2, 1, 6)).unwrap();
        let ring = ideal.ring().clone();
        let conj_prime = OrientedIdeal::new(ring.elem(2, 0), ring.elem(-1, 1)).unwrap();
        assert!(ideal.same_module(&conj_prime));
        assert_eq!(ideal.norm(), rat(2));
        assert_eq!(ideal_to_bqf(&ideal).unwrap(), Bqf::new(2, 1, 6));
        let prime = OrientedIdeal::new(ring.elem(2, 0), ring.tau()).unwrap();
        assert_eq!(ideal_to_bqf(&prime).unwrap(), Bqf::new(2, -1, 6));
    }

    #[test]
    fn zero_leading_coefficient() {
        let q = Bqf::new(0, 3, 5);
        let ideal = bqf_to_ideal(&q).unwrap();
        assert_eq!(ideal_to_bqf(&ideal).unwrap(), q);
    }

    #[test]
    fn negative_definite_orientation() {
        let ideal = bqf_to_ideal(&Bqf::new(-2, -1, -6)).unwrap();
        assert_eq!(ideal.mu(), -1);
        assert_eq!(ideal_to_bqf(&ideal).unwrap(), Bqf::new(-2, -1, -6));
    }
}
