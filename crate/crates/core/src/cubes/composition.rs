use num_bigint::BigInt;

use super::cube::Cube;
use crate::error::{Error, Result};
use crate::exact::MultiForm;
use crate::verify::Verification;

/// (A⋆B)(x,y,z; u,v,w) = A·B′ + A′·B + ε·A·B over two groups of three
/// variables.
pub fn form_product(a: &Cube, b: &Cube) -> Result<MultiForm> {
    let (da, db) = (a.disc(), b.disc());
    if da != db {
        return Err(Error::DiscriminantMismatch(da, db));
    }
    let (fa, fb) = (a.to_multiform(), b.to_multiform());
    let mut sum = fa.mul(&b.companion().to_multiform()).add(&a.companion().to_multiform().mul(&fb))?;
    if a.eps() == 1 {
        sum = sum.add(&fa.mul(&fb))?;
    }
    Ok(sum)
}

/// How the bilinear maps enter the right-hand side: A(R^σ, S^σ, T^σ)
/// as in the theorem, or Ã(R^ι, S^ι, T^ι) as in the remark after it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BilinearConvention {
    Sigma,
    TildeIota,
}

/// Checks every condition of the cube composition law for (A, B, C) with
/// witnesses (R, S, T).
pub fn verify_cube_composition(a: &Cube, b: &Cube, c: &Cube, r: &Cube, s: &Cube, t: &Cube) -> Verification {
    verify_cube_composition_with(a, b, c, r, s, t, BilinearConvention::Sigma)
}

pub fn verify_cube_composition_with(
    a: &Cube,
    b: &Cube,
    c: &Cube,
    r: &Cube,
    s: &Cube,
    t: &Cube,
    convention: BilinearConvention,
) -> Verification {
    let mut v = Verification::new("cube");
    let d = a.disc();
    for (name, x) in [("B", b), ("C", c), ("R", r), ("S", s), ("T", t)] {
        v.check_eq(&format!("disc({name}) = disc(A)"), &x.disc(), &d);
    }
    if b.disc() != d || c.disc() != d {
        return v;
    }
    let (target, maps) = match convention {
        BilinearConvention::Sigma => (a.clone(), [r.sigma(), s.sigma(), t.sigma()]),
        BilinearConvention::TildeIota => (a.tilde(), [r.iota(), s.iota(), t.iota()]),
    };
    let lhs = form_product(b, c).expect("equal discriminants");
    let rhs = MultiForm::from_fn(&[2; 6], |idx| {
        let args: Vec<[BigInt; 2]> =
            (0..3).map(|g| maps[g].bilinear(&basis(idx[g]), &basis(idx[g + 3]))).collect();
        target.eval(&args[0], &args[1], &args[2])
    });
    let bad = lhs.first_mismatch(&rhs).expect("same shape");
    v.check("(B*C)(x,y,z;u,v,w) = A(R(x,u), S(y,v), T(z,w))", bad.is_none(), bad.map(|m| m.to_string()));
    let [qa, qb, qc] = [a.assoc_forms(), b.assoc_forms(), c.assoc_forms()];
    v.check_eq("Q1(R) = Q1(A)", &r.form(0), &qa[0]);
    v.check_eq("Q2(R) = Q1(B)", &r.form(1), &qb[0]);
    for (i, w) in [r, s, t].into_iter().enumerate() {
        let left = &qb[i].a * &qc[i].a;
        let right = qa[i].eval(w.get(1, 0, 0), w.get(0, 0, 0));
        v.check_eq(&format!("Q{0}(B)(1,0) Q{0}(C)(1,0) = Q{0}(A)(w211, w111)", i + 1), &left, &right);
    }
    v
}

pub(crate) fn basis(i: usize) -> [BigInt; 2] {
    if i == 0 {
        [1.into(), 0.into()]
    } else {
        [0.into(), 1.into()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn golden() -> [Cube; 6] {
        [
            Cube::from_i64([0, -1, -2, -1, -1, 0, 0, 6]),
            Cube::from_i64([0, 1, 2, 0, 1, 0, -1, -6]),
            Cube::from_i64([0, 1, 4, -1, 1, 0, 0, -3]),
            Cube::from_i64([0, -1, -2, 0, -2, 0, 1, 3]),
            Cube::from_i64([0, 1, 1, -1, 1, 0, 0, -12]),
            Cube::from_i64([0, 1, 2, 0, 2, 0, 1, -3]),
        ]
    }

    #[test]
    fn golden_identity_holds() {
        let [a, b, c, r, s, t] = golden();
        let v = verify_cube_composition(&a, &b, &c, &r, &s, &t);
        assert!(v.holds(), "{v}");
        let v = verify_cube_composition_with(&a, &b, &c, &r, &s, &t, BilinearConvention::TildeIota);
        assert!(v.holds(), "{v}");
    }

    #[test]
    fn perturbation_detected() {
        let [a, b, c, mut r, s, t] = golden();
        r.0[3] += 1;
        let v = verify_cube_composition(&a, &b, &c, &r, &s, &t);
        assert!(!v.holds());
    }

    #[test]
    fn product_at_first_basis_tuple() {
        let [a, b, ..] = golden();
        let p = form_product(&a, &b).unwrap();
        let (ap, bp) = (a.companion(), b.companion());
        let e = BigInt::from(a.eps());
        let expected = a.get(0, 0, 0) * bp.get(0, 0, 0) + ap.get(0, 0, 0) * b.get(0, 0, 0) + e * a.get(0, 0, 0) * b.get(0, 0, 0);
        assert_eq!(p.get(&[0; 6]), &expected);
        let q = form_product(&b, &a).unwrap();
        for idx in p.tuples() {
            let swapped: Vec<usize> = idx[3..].iter().chain(&idx[..3]).copied().collect();
            assert_eq!(p.get(&idx), q.get(&swapped));
        }
    }
}
