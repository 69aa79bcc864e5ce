use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{rat_of, round_rat, Rat};
use crate::error::{Error, Result};

/// The rational binary quadratic form a·x² + b·xy + c·y² used as a Gram
/// matrix on Z².
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormForm {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

impl NormForm {
    pub fn new(a: Rat, b: Rat, c: Rat) -> Self {
        NormForm { a, b, c }
    }

    pub fn value(&self, v: &[BigInt; 2]) -> Rat {
        let (x, y) = (rat_of(&v[0]), rat_of(&v[1]));
        &self.a * &x * &x + &self.b * &x * &y + &self.c * &y * &y
    }

    fn inner(&self, v: &[BigInt; 2], w: &[BigInt; 2]) -> Rat {
        let two = Rat::from_integer(2.into());
        &self.a * rat_of(&(&v[0] * &w[0]))
            + &self.b * rat_of(&(&v[0] * &w[1] + &v[1] * &w[0])) / two
            + &self.c * rat_of(&(&v[1] * &w[1]))
    }

    pub fn is_positive_definite(&self) -> bool {
        self.a.is_positive() && (Rat::from_integer(4.into()) * &self.a * &self.c - &self.b * &self.b).is_positive()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedBasis {
    pub basis: [[BigInt; 2]; 2],
    /// Value of the form on `basis[0]`, the lattice minimum.
    pub min: Rat,
}

/// Lagrange–Gauss reduction of the lattice spanned by `basis` under a
/// positive definite form.
pub fn lagrange_gauss_reduce(basis: [[BigInt; 2]; 2], gram: &NormForm) -> Result<ReducedBasis> {
    if !gram.is_positive_definite() {
        return Err(Error::Degenerate("Gram form is not positive definite".into()));
    }
    let [mut u, mut v] = basis;
    if (&u[0] * &v[1] - &u[1] * &v[0]).is_zero() {
        return Err(Error::Degenerate("basis vectors are dependent".into()));
    }
    if gram.value(&v) < gram.value(&u) {
        std::mem::swap(&mut u, &mut v);
    }
    loop {
        let mu = round_rat(&(gram.inner(&u, &v) / gram.value(&u)));
        if !mu.is_zero() {
            v = [&v[0] - &mu * &u[0], &v[1] - &mu * &u[1]];
        }
        if gram.value(&v) < gram.value(&u) {
            std::mem::swap(&mut u, &mut v);
        } else {
            break;
        }
    }
    let min = gram.value(&u);
    Ok(ReducedBasis { basis: [u, v], min })
}

/// Hermite normal form of the rank-2 lattice generated by integer rows:
/// returns `[[h11, h12], [0, h22]]` with h11, h22 > 0 and 0 ≤ h12 < h22.
pub fn hnf_rows(rows: &[[BigInt; 2]]) -> Result<[[BigInt; 2]; 2]> {
    let mut rows: Vec<[BigInt; 2]> = rows.to_vec();
    // clear the first column by repeated Euclid steps
    let pivot = loop {
        rows.retain(|r| !(r[0].is_zero() && r[1].is_zero()));
        let nz: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i][0].is_zero()).collect();
        if nz.is_empty() {
            return Err(Error::Degenerate("lattice has rank < 2".into()));
        }
        let p = *nz.iter().min_by_key(|&&i| rows[i][0].abs()).unwrap();
        if nz.len() == 1 {
            break p;
        }
        for &i in &nz {
            if i != p {
                let q = rows[i][0].div_floor(&rows[p][0]);
                let (p0, p1) = (rows[p][0].clone(), rows[p][1].clone());
                rows[i][0] -= &q * p0;
                rows[i][1] -= &q * p1;
            }
        }
    };
    let mut first = rows[pivot].clone();
    let h22 = rows
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != pivot)
        .fold(BigInt::zero(), |g, (_, r)| g.gcd(&r[1]));
    if h22.is_zero() {
        return Err(Error::Degenerate("lattice has rank < 2".into()));
    }
    if first[0].is_negative() {
        first = [-first[0].clone(), -first[1].clone()];
    }
    first[1] = first[1].mod_floor(&h22);
    Ok([first, [BigInt::zero(), h22]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn v(a: i64, b: i64) -> [BigInt; 2] {
        [int(a), int(b)]
    }

    #[test]
    fn standard_basis_is_reduced() {
        let g = NormForm::new(rat(1), rat(0), rat(1));
        let r = lagrange_gauss_reduce([v(1, 0), v(0, 1)], &g).unwrap();
        assert_eq!(r.basis, [v(1, 0), v(0, 1)]);
        assert_eq!(r.min, rat(1));
    }

    #[test]
    fn one_step_reduction() {
        let g = NormForm::new(rat(1), rat(0), rat(1));
        let r = lagrange_gauss_reduce([v(1, 0), v(1, 1)], &g).unwrap();
        assert_eq!(r.min, rat(1));
        assert_eq!(r.basis[1][0].abs() + r.basis[1][1].abs(), int(1));
    }

    #[test]
    fn indefinite_gram_rejected() {
        let g = NormForm::new(rat(1), rat(0), rat(-2));
        assert!(lagrange_gauss_reduce([v(1, 0), v(0, 1)], &g).is_err());
    }

    #[test]
    fn hnf_examples() {
        let h = hnf_rows(&[v(4, 0), v(0, 2), v(2, 2), v(6, -4)]).unwrap();
        assert_eq!(h, [v(2, 0), v(0, 2)]);
        let h = hnf_rows(&[v(-3, 5), v(0, 7)]).unwrap();
        assert_eq!(h, [v(3, 2), v(0, 7)]);
        assert!(hnf_rows(&[v(1, 2), v(2, 4)]).is_err());
    }
}
