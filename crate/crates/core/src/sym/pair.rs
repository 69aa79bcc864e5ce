use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::bqf::Bqf;
use crate::cubes::{identity_cube, Cube};
use crate::error::{Error, Result};
use crate::exact::{find_grid_counterexample, IMat2};
use crate::verify::Verification;

/// A pair (F1, F2) of binary quadratic forms with even middle coefficients,
/// read as F(x, y) = x1·F1(y) + x2·F2(y).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PairBqf {
    f1: Bqf,
    f2: Bqf,
}

impl PairBqf {
    pub fn new(f1: Bqf, f2: Bqf) -> Result<Self> {
        for f in [&f1, &f2] {
            if f.b.is_odd() {
                return Err(Error::Invalid(format!("form {f} has an odd middle coefficient")));
            }
        }
        Ok(PairBqf { f1, f2 })
    }

    pub fn from_i64(f1: [i64; 3], f2: [i64; 3]) -> Result<Self> {
        PairBqf::new(Bqf::new(f1[0], f1[1], f1[2]), Bqf::new(f2[0], f2[1], f2[2]))
    }

    pub fn forms(&self) -> [&Bqf; 2] {
        [&self.f1, &self.f2]
    }

    /// The doubly symmetric cube [a, b, b, c, d, e, e, f].
    pub fn to_cube(&self) -> Cube {
        let half = |f: &Bqf| [f.a.clone(), &f.b / 2, &f.b / 2, f.c.clone()];
        let [a, b, b2, c] = half(&self.f1);
        let [d, e, e2, f] = half(&self.f2);
        Cube([a, b, b2, c, d, e, e2, f])
    }

    pub fn from_cube(c: &Cube) -> Result<PairBqf> {
        if !c.is_doubly_symmetric() {
            return Err(Error::Invalid(format!("cube {c} is not doubly symmetric")));
        }
        let k = &c.0;
        let two = BigInt::from(2);
        PairBqf::new(
            Bqf::new(k[0].clone(), &two * &k[1], k[3].clone()),
            Bqf::new(k[4].clone(), &two * &k[5], k[7].clone()),
        )
    }

    pub fn disc(&self) -> BigInt {
        self.to_cube().disc()
    }

    /// x1·F1(y) + x2·F2(y).
    pub fn eval(&self, x: &[BigInt; 2], y: &[BigInt; 2]) -> BigInt {
        &x[0] * self.f1.eval(&y[0], &y[1]) + &x[1] * self.f2.eval(&y[0], &y[1])
    }

    pub fn companion(&self) -> PairBqf {
        PairBqf::from_cube(&self.to_cube().companion()).expect("companion of a doubly symmetric cube is doubly symmetric")
    }

    /// The action of (g1, g2) ∈ SL2 × SL2: g1 on the pair index and g2 on
    /// the variables.
    pub fn act(&self, g1: &IMat2, g2: &IMat2) -> Result<PairBqf> {
        PairBqf::from_cube(&self.to_cube().gamma_act([g1, g2, g2])?)
    }
}

impl fmt::Display for PairBqf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.f1, self.f2)
    }
}

pub fn pair_embed(f: &PairBqf) -> Cube {
    f.to_cube()
}

pub fn pair_disc(f: &PairBqf) -> BigInt {
    f.disc()
}

pub fn pair_companion(f: &PairBqf) -> PairBqf {
    f.companion()
}

/// F_id,D = (2xy, x² + (D/4)y²) or (2xy + y², x² + 2xy + ((D+3)/4)y²).
pub fn pair_identity(d: &BigInt) -> Result<PairBqf> {
    PairBqf::from_cube(&identity_cube(d)?)
}

/// Which cube feeds the second argument of F in the pair identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairConvention {
    /// F(R^σ(x,u), S(y,v)).
    Plain,
    /// F(R^σ(x,u), S^σ(y,v)), the form the worked example at
    /// discriminant −31 satisfies.
    Sigma,
}

/// Checks the pair composition law with the S^σ convention.
pub fn verify_pair_composition(f: &PairBqf, g: &PairBqf, h: &PairBqf, r: &Cube, s: &Cube) -> Verification {
    verify_pair_composition_with(f, g, h, r, s, PairConvention::Sigma)
}

pub fn verify_pair_composition_with(
    f: &PairBqf,
    g: &PairBqf,
    h: &PairBqf,
    r: &Cube,
    s: &Cube,
    conv: PairConvention,
) -> Verification {
    let mut v = Verification::new("pair");
    v.note(match conv {
        PairConvention::Plain => "second slot of F uses S",
        PairConvention::Sigma => "second slot of F uses S^σ",
    });
    let d = f.disc();
    for (name, x) in [("disc(G)", g.disc()), ("disc(H)", h.disc()), ("disc(R)", r.disc()), ("disc(S)", s.disc())] {
        v.check_eq(&format!("{name} = disc(F)"), &x, &d);
    }
    if !v.holds() {
        return v;
    }
    let eps = BigInt::from(f.to_cube().eps());
    let (gp, hp) = (g.companion(), h.companion());
    let rs = r.sigma();
    let ss = match conv {
        PairConvention::Plain => s.clone(),
        PairConvention::Sigma => s.sigma(),
    };
    let bad = find_grid_counterexample(&[1, 2, 1, 2], |p| {
        let (x, y, u, w) = (&p[0], &p[1], &p[2], &p[3]);
        let (gv, hv) = (g.eval(x, y), h.eval(u, w));
        let left = &gv * hp.eval(u, w) + gp.eval(x, y) * &hv + &eps * &gv * &hv;
        left == f.eval(&rs.bilinear(x, u), &ss.bilinear(y, w))
    });
    v.check(
        "(G*H)((x,y);(u,v)) = F(R(x,u), S(y,v))",
        bad.is_none(),
        bad.map(|p| {
            let s: Vec<String> = p.iter().map(|q| format!("({}, {})", q[0], q[1])).collect();
            format!("fails at x = {}, y = {}, u = {}, v = {}", s[0], s[1], s[2], s[3])
        }),
    );
    let (af, ag, ah) = (f.to_cube(), g.to_cube(), h.to_cube());
    v.check_eq("Q1(R) = Q1(F)", &r.form(0), &af.form(0));
    v.check_eq("Q2(R) = Q1(G)", &r.form(1), &ag.form(0));
    let l1 = &ag.form(0).a * &ah.form(0).a;
    v.check_eq("Q1(G)(1,0) Q1(H)(1,0) = Q1(F)(r211, r111)", &l1, &af.form(0).eval(r.get(1, 0, 0), r.get(0, 0, 0)));
    let l2 = &ag.form(1).a * &ah.form(1).a;
    v.check_eq("Q2(G)(1,0) Q2(H)(1,0) = Q2(F)(s211, s111)", &l2, &af.form(1).eval(s.get(1, 0, 0), s.get(0, 0, 0)));
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    pub(crate) fn golden() -> [PairBqf; 3] {
        [
            PairBqf::from_i64([0, 80, -63], [1, -30, 23]).unwrap(),
            PairBqf::from_i64([-9, -2, 1], [10, 4, -1]).unwrap(),
            PairBqf::from_i64([2, 0, -1], [-1, -4, 1]).unwrap(),
        ]
    }

    #[test]
    fn embedding_and_companion() {
        let [f, ..] = golden();
        assert_eq!(f.to_cube(), Cube::from_i64([0, 40, 40, -63, 1, -15, -15, 23]));
        assert_eq!(f.disc(), int(-31));
        assert_eq!(f.companion(), PairBqf::from_i64([1600, -2560, 1016], [-569, 910, -361]).unwrap());
    }

    #[test]
    fn golden_identity() {
        let [f, g, h] = golden();
        assert_eq!(g.companion(), PairBqf::from_i64([1, 18, 1], [6, -20, -2]).unwrap());
        assert_eq!(h.companion(), PairBqf::from_i64([0, -8, 1], [-8, 8, 3]).unwrap());
        let r = Cube::from_i64([20, 70, -6, -101, -7, -25, 2, 36]);
        let s = Cube::from_i64([-4, 9, 4, 1, 4, -7, -3, -1]);
        let v = verify_pair_composition(&f, &g, &h, &r, &s);
        assert!(v.holds(), "{v}");
        let plain = verify_pair_composition_with(&f, &g, &h, &r, &s, PairConvention::Plain);
        assert!(!plain.holds());
        let mut bad = s.clone();
        bad.0[0] += 1;
        assert!(!verify_pair_composition(&f, &g, &h, &r, &bad).holds());
    }

    #[test]
    fn identity_pairs() {
        assert_eq!(pair_identity(&int(-4)).unwrap(), PairBqf::from_i64([0, 2, 0], [1, 0, -1]).unwrap());
        assert_eq!(pair_identity(&int(5)).unwrap(), PairBqf::from_i64([0, 2, 1], [1, 2, 2]).unwrap());
    }

    #[test]
    fn odd_middle_rejected() {
        assert!(PairBqf::from_i64([1, 1, 1], [0, 2, 0]).is_err());
    }
}
