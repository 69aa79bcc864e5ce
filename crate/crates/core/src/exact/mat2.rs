use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{rat_of, Rat};
use crate::error::{Error, Result};

/// A 2×2 matrix with rational entries, stored row-major as
/// `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IMat2 {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
}

impl IMat2 {
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat) -> Self {
        IMat2 { a, b, c, d }
    }

    pub fn from_ints(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> Self {
        IMat2::new(rat_of(a), rat_of(b), rat_of(c), rat_of(d))
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        IMat2::from_ints(&a.into(), &b.into(), &c.into(), &d.into())
    }

    pub fn identity() -> Self {
        IMat2::from_i64(1, 0, 0, 1)
    }

    pub fn det(&self) -> Rat {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn mul(&self, o: &IMat2) -> IMat2 {
        IMat2::new(
            &self.a * &o.a + &self.b * &o.c,
            &self.a * &o.b + &self.b * &o.d,
            &self.c * &o.a + &self.d * &o.c,
            &self.c * &o.b + &self.d * &o.d,
        )
    }

    pub fn transpose(&self) -> IMat2 {
        IMat2::new(self.a.clone(), self.c.clone(), self.b.clone(), self.d.clone())
    }

    pub fn inverse(&self) -> Result<IMat2> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(IMat2::new(&self.d / &det, -&self.b / &det, -&self.c / &det, &self.a / &det))
    }

    pub fn apply(&self, v: &[Rat; 2]) -> [Rat; 2] {
        [&self.a * &v[0] + &self.b * &v[1], &self.c * &v[0] + &self.d * &v[1]]
    }

    pub fn is_integral(&self) -> bool {
        [&self.a, &self.b, &self.c, &self.d].iter().all(|x| x.is_integer())
    }

    /// Integer rows, or an error if some entry is not an integer.
    pub fn int_rows(&self) -> Result<Vec<Vec<BigInt>>> {
        if !self.is_integral() {
            return Err(Error::Invalid(format!("matrix {self} is not integral")));
        }
        Ok(vec![
            vec![self.a.to_integer(), self.b.to_integer()],
            vec![self.c.to_integer(), self.d.to_integer()],
        ])
    }

    pub fn is_sl2z(&self) -> bool {
        self.is_integral() && self.det().is_one()
    }

    /// Errors unless the matrix lies in SL2(Z).
    pub fn check_sl2z(&self) -> Result<()> {
        if self.is_sl2z() {
            Ok(())
        } else {
            Err(Error::NotUnimodular(self.to_string()))
        }
    }
}

impl fmt::Display for IMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn det_inverse_and_product() {
        let m = IMat2::from_i64(2, 1, 7, 4);
        assert_eq!(m.det(), rat(1));
        assert!(m.is_sl2z());
        assert_eq!(m.mul(&m.inverse().unwrap()), IMat2::identity());
        let s = IMat2::from_i64(0, -1, 1, 0);
        assert_eq!(s.mul(&s), IMat2::from_i64(-1, 0, 0, -1));
        assert!(IMat2::from_i64(1, 1, 1, 1).inverse().is_err());
        assert!(IMat2::from_i64(2, 0, 0, 1).check_sl2z().is_err());
    }
}
