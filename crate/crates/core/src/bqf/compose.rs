use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::form::{check_nonsquare, Bqf};
use super::reduce::reduce;
use crate::error::{Error, Result};
use crate::exact::{mod_inverse, xgcd};

/// Finds an equivalent form whose leading coefficient is nonzero and
/// coprime to `m`, returning it with the SL2 matrix used.
pub fn represent_coprime(q: &Bqf, m: &BigInt) -> Result<(Bqf, [[BigInt; 2]; 2])> {
    if !q.is_primitive() {
        return Err(Error::NotPrimitive(q.to_string()));
    }
    for r in 1i64..=64 {
        for x in -r..=r {
            for y in -r..=r {
                if x.abs().max(y.abs()) != r {
                    continue;
                }
                let (x, y) = (BigInt::from(x), BigInt::from(y));
                let (g, s, t) = xgcd(&x, &y);
                if !g.is_one() {
                    continue;
                }
                let v = q.eval(&x, &y);
                if v.is_zero() || !v.gcd(m).is_one() {
                    continue;
                }
                // first column (x, y), determinant x·s + y·t = 1
                let mat = [[x, -t], [y, s]];
                return Ok((q.substitute(&mat), mat));
            }
        }
    }
    Err(Error::Degenerate(format!("no small coprime value of {q} found")))
}

/// Composes two primitive forms of the same discriminant by Dirichlet's
/// method of united forms and returns the reduced result.
pub fn compose_dirichlet(q1: &Bqf, q2: &Bqf) -> Result<Bqf> {
    let d = q1.disc();
    if d != q2.disc() {
        return Err(Error::DiscriminantMismatch(d, q2.disc()));
    }
    check_nonsquare(&d)?;
    for q in [q1, q2] {
        if !q.is_primitive() {
            return Err(Error::NotPrimitive(q.to_string()));
        }
    }
    let f1 = if q1.a.is_zero() { represent_coprime(q1, &BigInt::one())?.0 } else { q1.clone() };
    let f2 = if f1.a.gcd(&q2.a).is_one() { q2.clone() } else { represent_coprime(q2, &f1.a)?.0 };
    let (a1, b1) = (&f1.a, &f1.b);
    let (a2, b2) = (&f2.a, &f2.b);
    // B ≡ b1 (mod 2a1), B ≡ b2 (mod 2a2)
    let m2 = a2.abs();
    let t = if m2.is_one() {
        BigInt::zero()
    } else {
        let inv = mod_inverse(&a1.mod_floor(&m2), &m2).expect("coprime leading coefficients");
        (inv * ((b2 - b1) / BigInt::from(2))).mod_floor(&m2)
    };
    let big_b = b1 + BigInt::from(2) * a1 * t;
    let n = a1 * a2;
    let num = &big_b * &big_b - &d;
    let den = BigInt::from(4) * &n;
    debug_assert!(num.is_multiple_of(&den));
    let composed = Bqf { a: n, c: num / den, b: big_b };
    Ok(reduce(&composed)?.form)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn d47_examples() {
        let id = Bqf::new(1, 1, 12);
        let p = Bqf::new(2, 1, 6);
        assert_eq!(compose_dirichlet(&id, &p).unwrap(), p);
        assert_eq!(compose_dirichlet(&p, &Bqf::new(2, -1, 6)).unwrap(), id);
        assert_eq!(compose_dirichlet(&p, &p).unwrap(), Bqf::new(3, -1, 4));
    }

    #[test]
    fn errors() {
        assert!(compose_dirichlet(&Bqf::new(2, 1, 6), &Bqf::new(1, 1, 1)).is_err());
        assert!(compose_dirichlet(&Bqf::new(2, 0, 2), &Bqf::new(2, 0, 2)).is_err());
    }

    #[test]
    fn coprime_representation() {
        let (f, m) = represent_coprime(&Bqf::new(2, 1, 6), &int(2)).unwrap();
        assert!(f.a.gcd(&int(2)).is_one());
        assert_eq!(Bqf::new(2, 1, 6).substitute(&m), f);
    }
}
