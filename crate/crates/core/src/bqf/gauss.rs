use num_bigint::BigInt;

use super::form::Bqf;
use crate::exact::find_grid_counterexample;
use crate::verify::Verification;

/// The bilinear forms z1(x, y) = Σ a_ij x_i y_j and z2(x, y) = Σ b_ij x_i y_j.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussBilinearData {
    pub a: [[BigInt; 2]; 2],
    pub b: [[BigInt; 2]; 2],
}

impl GaussBilinearData {
    pub fn from_i64(a: [[i64; 2]; 2], b: [[i64; 2]; 2]) -> Self {
        let m = |x: [[i64; 2]; 2]| x.map(|r| r.map(BigInt::from));
        GaussBilinearData { a: m(a), b: m(b) }
    }

    fn bilinear(m: &[[BigInt; 2]; 2], x: &[BigInt; 2], y: &[BigInt; 2]) -> BigInt {
        let mut s = BigInt::from(0);
        for i in 0..2 {
            for j in 0..2 {
                s += &m[i][j] * &x[i] * &y[j];
            }
        }
        s
    }

    pub fn z1(&self, x: &[BigInt; 2], y: &[BigInt; 2]) -> BigInt {
        Self::bilinear(&self.a, x, y)
    }

    pub fn z2(&self, x: &[BigInt; 2], y: &[BigInt; 2]) -> BigInt {
        Self::bilinear(&self.b, x, y)
    }
}

/// Checks Q1(x)·Q2(y) = Q3(z1(x, y), z2(x, y)) identically together with
/// the normalisations Q1(1,0) = a11·b12 − a12·b11 and
/// Q2(1,0) = a11·b21 − a21·b11.
pub fn verify_gauss_identity(q1: &Bqf, q2: &Bqf, q3: &Bqf, data: &GaussBilinearData) -> Verification {
    let mut v = Verification::new("gauss");
    let bad = find_grid_counterexample(&[2, 2], |p| {
        let (x, y) = (&p[0], &p[1]);
        q1.eval(&x[0], &x[1]) * q2.eval(&y[0], &y[1]) == q3.eval(&data.z1(x, y), &data.z2(x, y))
    });
    v.check(
        "product identity",
        bad.is_none(),
        bad.map(|p| format!("fails at x = ({}, {}), y = ({}, {})", p[0][0], p[0][1], p[1][0], p[1][1])),
    );
    let (a, b) = (&data.a, &data.b);
    let n1 = &a[0][0] * &b[0][1] - &a[0][1] * &b[0][0];
    let n2 = &a[0][0] * &b[1][0] - &a[1][0] * &b[0][0];
    v.check_eq("Q1(1,0) = a11 b12 - a12 b11", &q1.a, &n1);
    v.check_eq("Q2(1,0) = a11 b21 - a21 b11", &q2.a, &n2);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brahmagupta() {
        let q = Bqf::new(1, 0, 1);
        // z1 = ac − bd, z2 = ad + bc
        let data = GaussBilinearData::from_i64([[1, 0], [0, -1]], [[0, 1], [1, 0]]);
        assert!(verify_gauss_identity(&q, &q, &q, &data).holds());
        let mut bad = data.clone();
        bad.a[0][0] += 1;
        assert!(!verify_gauss_identity(&q, &q, &q, &bad).holds());
    }
}
