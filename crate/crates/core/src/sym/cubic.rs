use std::fmt;

use num_bigint::BigInt;

use crate::bqf::Bqf;
use crate::cubes::{identity_cube, verify_cube_composition, Cube};
use crate::error::{Error, Result};
use crate::exact::{find_grid_counterexample, IMat2};
use crate::verify::Verification;

/// a0·x³ + 3a1·x²y + 3a2·xy² + a3·y³.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryCubic(pub [BigInt; 4]);

impl BinaryCubic {
    pub fn new(coeffs: [BigInt; 4]) -> Self {
        BinaryCubic(coeffs)
    }

    pub fn from_i64(c: [i64; 4]) -> Self {
        BinaryCubic(c.map(BigInt::from))
    }

    pub fn coeffs(&self) -> &[BigInt; 4] {
        &self.0
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        let [a0, a1, a2, a3] = &self.0;
        a0 * x * x * x + BigInt::from(3) * a1 * x * x * y + BigInt::from(3) * a2 * x * y * y + a3 * y * y * y
    }

    /// The triply symmetric cube [a0, a1, a1, a2, a1, a2, a2, a3].
    pub fn to_cube(&self) -> Cube {
        let [a0, a1, a2, a3] = self.0.clone();
        Cube([a0, a1.clone(), a1.clone(), a2.clone(), a1, a2.clone(), a2, a3])
    }

    pub fn from_cube(c: &Cube) -> Result<BinaryCubic> {
        if !c.is_triply_symmetric() {
            return Err(Error::Invalid(format!("cube {c} is not triply symmetric")));
        }
        Ok(BinaryCubic([c.0[0].clone(), c.0[1].clone(), c.0[3].clone(), c.0[7].clone()]))
    }

    pub fn disc(&self) -> BigInt {
        let [a0, a1, a2, a3] = &self.0;
        let n = |k: i64| BigInt::from(k);
        n(-3) * a1 * a1 * a2 * a2 + n(4) * a0 * a2 * a2 * a2 + n(4) * a1 * a1 * a1 * a3
            - n(6) * a0 * a1 * a2 * a3
            + a0 * a0 * a3 * a3
    }

    /// The common associated quadratic form Q_f of the cube A_f.
    pub fn quadratic(&self) -> Bqf {
        self.to_cube().form(0)
    }

    pub fn companion(&self) -> BinaryCubic {
        BinaryCubic::from_cube(&self.to_cube().companion()).expect("companion of a triply symmetric cube is triply symmetric")
    }

    /// f̃ = (−a0, a1, −a2, a3), the cubic of the cube Ã_f.
    pub fn tilde(&self) -> BinaryCubic {
        let [a0, a1, a2, a3] = self.0.clone();
        BinaryCubic([-a0, a1, -a2, a3])
    }

    /// f(gᵀ·v), the action through (g, g, g) on A_f.
    pub fn act(&self, g: &IMat2) -> Result<BinaryCubic> {
        BinaryCubic::from_cube(&self.to_cube().gamma_act([g, g, g])?)
    }

    pub fn is_projective(&self) -> bool {
        self.quadratic().is_primitive()
    }
}

impl fmt::Display for BinaryCubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a0, a1, a2, a3] = &self.0;
        write!(f, "[{a0}, {a1}, {a2}, {a3}]")
    }
}

pub fn cubic_embed(f: &BinaryCubic) -> Cube {
    f.to_cube()
}

pub fn cubic_disc(f: &BinaryCubic) -> BigInt {
    let d = f.disc();
    debug_assert_eq!(d, f.to_cube().disc());
    d
}

pub fn cubic_companion(f: &BinaryCubic) -> BinaryCubic {
    f.companion()
}

/// 2f′ + εf, twice the cubicovariant.
pub fn cubicovariant(f: &BinaryCubic) -> BinaryCubic {
    let eps = BigInt::from(f.to_cube().eps());
    let fp = f.companion();
    BinaryCubic(std::array::from_fn(|i| BigInt::from(2) * &fp.0[i] + &eps * &f.0[i]))
}

/// f′² + ε·f·f′ − ((D − ε)/4)·f² = Q_f(x, −y)³ as polynomials.
pub fn syzygy_check(f: &BinaryCubic) -> bool {
    let d = f.disc();
    let eps = BigInt::from(f.to_cube().eps());
    let n = (&d - &eps) / BigInt::from(4);
    let fp = f.companion();
    let q = f.quadratic();
    find_grid_counterexample(&[6], |p| {
        let (x, y) = (&p[0][0], &p[0][1]);
        let (fv, fpv) = (f.eval(x, y), fp.eval(x, y));
        let qv = q.eval(x, &-y);
        &fpv * &fpv + &eps * &fv * &fpv - &n * &fv * &fv == &qv * &qv * &qv
    })
    .is_none()
}

/// f_id,D = 3x²y + (D/4)y³ or 3x²y + 3xy² + ((D+3)/4)y³.
pub fn cubic_identity(d: &BigInt) -> Result<BinaryCubic> {
    BinaryCubic::from_cube(&identity_cube(d)?)
}

/// (g⋆h)((x,y);(u,v)) = g·h′ + g′·h + ε·g·h evaluated at two points.
fn star(g: &BinaryCubic, h: &BinaryCubic, eps: &BigInt, p: &[BigInt; 2], q: &[BigInt; 2]) -> BigInt {
    let (gp, hp) = (g.companion(), h.companion());
    let (gv, hv) = (g.eval(&p[0], &p[1]), h.eval(&q[0], &q[1]));
    &gv * hp.eval(&q[0], &q[1]) + gp.eval(&p[0], &p[1]) * &hv + eps * &gv * &hv
}

/// Checks the binary cubic composition law for (f, g, h) with witness R.
pub fn verify_cubic_composition(f: &BinaryCubic, g: &BinaryCubic, h: &BinaryCubic, r: &Cube) -> Verification {
    let mut v = Verification::new("cubic");
    let d = f.disc();
    v.check_eq("disc(g) = disc(f)", &g.disc(), &d);
    v.check_eq("disc(h) = disc(f)", &h.disc(), &d);
    v.check_eq("disc(R) = disc(f)", &r.disc(), &d);
    if !v.holds() {
        return v;
    }
    let eps = BigInt::from(f.to_cube().eps());
    let rs = r.sigma();
    let bad = find_grid_counterexample(&[3, 3], |p| {
        let [x, y] = rs.bilinear(&p[0], &p[1]);
        star(g, h, &eps, &p[0], &p[1]) == f.eval(&x, &y)
    });
    v.check(
        "(g*h)((x,y);(u,v)) = f(R((x,y),(u,v)))",
        bad.is_none(),
        bad.map(|p| format!("fails at (x,y) = ({}, {}), (u,v) = ({}, {})", p[0][0], p[0][1], p[1][0], p[1][1])),
    );
    v.check_eq("Q1(R) = Q(f)", &r.form(0), &f.quadratic());
    v.check_eq("Q2(R) = Q(g)", &r.form(1), &g.quadratic());
    let left = &g.quadratic().a * &h.quadratic().a;
    v.check_eq("Q(g)(1,0) Q(h)(1,0) = Q(f)(r211, r111)", &left, &f.quadratic().eval(r.get(1, 0, 0), r.get(0, 0, 0)));
    v
}

/// The six-variable form of the cubic law: the cube identity for
/// (A_f, A_g, A_h) with R = S = T.
pub fn verify_cubic_polarized(f: &BinaryCubic, g: &BinaryCubic, h: &BinaryCubic, r: &Cube) -> Verification {
    let mut v = verify_cube_composition(&f.to_cube(), &g.to_cube(), &h.to_cube(), r, r, r);
    v.law = "cubic (polarized)".into();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn fgh() -> [BinaryCubic; 3] {
        [BinaryCubic::from_i64([0, 1, 0, 2]), BinaryCubic::from_i64([1, 1, 2, 2]), BinaryCubic::from_i64([1, 0, 1, 2])]
    }

    #[test]
    fn golden_companions_and_forms() {
        let [f, g, h] = fgh();
        assert_eq!(f.companion(), BinaryCubic::from_i64([1, 0, 2, 0]));
        assert_eq!(g.companion(), BinaryCubic::from_i64([-1, -2, -2, -4]));
        assert_eq!(h.companion(), BinaryCubic::from_i64([1, -1, -1, -3]));
        assert_eq!(f.quadratic(), Bqf::new(1, 0, -2));
        assert_eq!(g.quadratic(), Bqf::new(-1, 0, 2));
        assert_eq!(h.quadratic(), Bqf::new(-1, 2, 1));
        for c in [&f, &g, &h] {
            assert_eq!(cubic_disc(c), int(8));
        }
    }

    #[test]
    fn golden_identity() {
        let [f, g, h] = fgh();
        let r = Cube::from_i64([0, -1, -1, -1, 1, 1, 0, 2]);
        let v = verify_cubic_composition(&f, &g, &h, &r);
        assert!(v.holds(), "{v}");
        let p = verify_cubic_polarized(&f, &g, &h, &r);
        assert!(p.holds(), "{p}");
        let mut bad = r.clone();
        bad.0[7] += 1;
        assert!(!verify_cubic_composition(&f, &g, &h, &bad).holds());
    }

    #[test]
    fn discriminants_and_identity() {
        assert_eq!(BinaryCubic::from_i64([0, 1, 1, 2]).disc(), int(5));
        assert_eq!(BinaryCubic::from_i64([1, 0, 0, 0]).disc(), int(0));
        assert_eq!(cubic_identity(&int(8)).unwrap(), BinaryCubic::from_i64([0, 1, 0, 2]));
        assert_eq!(cubic_identity(&int(5)).unwrap(), BinaryCubic::from_i64([0, 1, 1, 2]));
        assert_eq!(cubic_identity(&int(-47)).unwrap().to_cube(), identity_cube(&int(-47)).unwrap());
    }

    #[test]
    fn syzygy_examples() {
        assert!(syzygy_check(&BinaryCubic::from_i64([0, 1, 0, 2])));
        assert!(syzygy_check(&BinaryCubic::from_i64([1, 0, 0, 0])));
        assert!(syzygy_check(&BinaryCubic::from_i64([3, -7, 2, 11])));
    }

    #[test]
    fn covariant_is_doubled() {
        let f = BinaryCubic::from_i64([1, 1, 2, 2]);
        let fp = f.companion();
        let t = cubicovariant(&f);
        for i in 0..4 {
            assert_eq!(t.0[i], BigInt::from(2) * &fp.0[i] + &f.0[i] * BigInt::from(f.to_cube().eps()));
        }
    }
}
