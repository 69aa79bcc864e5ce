use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bqf::Bqf;
use crate::cubes::Cube;
use crate::error::{Error, Result};
use crate::exact::{epsilon_of, IMat2, MultiForm};
use crate::verify::Verification;

/// A 4×4 alternating integer matrix.
pub type AltMatrix = [[BigInt; 4]; 4];

fn check_alternating(m: &AltMatrix) -> Result<()> {
    for i in 0..4 {
        for j in 0..4 {
            if m[i][j] != -m[j][i].clone() {
                return Err(Error::Invalid(format!("matrix is not alternating at ({}, {})", i + 1, j + 1)));
            }
        }
    }
    Ok(())
}

/// The Pfaffian normalised so that the block matrix (0 I; −I 0) has
/// Pfaffian 1: m13·m24 − m12·m34 − m14·m23.
pub fn pfaffian(m: &AltMatrix) -> Result<BigInt> {
    check_alternating(m)?;
    Ok(&m[0][2] * &m[1][3] - &m[0][1] * &m[2][3] - &m[0][3] * &m[1][2])
}

/// A pair (F1, F2) of alternating 4×4 matrices, read as the form
/// F(x, y, z) = x1·yᵀF1z + x2·yᵀF2z.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuatAltPair {
    mats: [AltMatrix; 2],
}

impl QuatAltPair {
    pub fn new(f1: AltMatrix, f2: AltMatrix) -> Result<Self> {
        check_alternating(&f1)?;
        check_alternating(&f2)?;
        Ok(QuatAltPair { mats: [f1, f2] })
    }

    pub fn zero() -> Self {
        QuatAltPair { mats: Default::default() }
    }

    pub fn matrices(&self) -> &[AltMatrix; 2] {
        &self.mats
    }

    pub fn eval(&self, x: &[BigInt], y: &[BigInt], z: &[BigInt]) -> BigInt {
        let mut total = BigInt::zero();
        for (xi, m) in x.iter().zip(&self.mats) {
            if xi.is_zero() {
                continue;
            }
            for j in 0..4 {
                for k in 0..4 {
                    if !m[j][k].is_zero() {
                        total += xi * &y[j] * &m[j][k] * &z[k];
                    }
                }
            }
        }
        total
    }

    /// The trilinear form on Z² × Z⁴ × Z⁴.
    pub fn to_multiform(&self) -> MultiForm {
        MultiForm::from_fn(&[2, 4, 4], |i| self.mats[i[0]][i[1]][i[2]].clone())
    }

    /// −Pf(F1·x − F2·y) as a binary quadratic form, which is Q1 of the
    /// cube when the pair is φ of a cube.
    pub fn pfaffian_form(&self) -> Bqf {
        let comb = |s: i64, t: i64| -> AltMatrix {
            std::array::from_fn(|j| {
                std::array::from_fn(|k| &self.mats[0][j][k] * BigInt::from(s) - &self.mats[1][j][k] * BigInt::from(t))
            })
        };
        let pf = |s, t| -pfaffian(&comb(s, t)).expect("combination of alternating matrices");
        let (p, r) = (pf(1, 0), pf(0, 1));
        let q = pf(1, 1) - &p - &r;
        Bqf { a: p, b: q, c: r }
    }

    pub fn disc(&self) -> BigInt {
        self.pfaffian_form().disc()
    }

    /// F′(x, y, z) = F(x′, y, z) − εF(x, y, z), with x′ built from the
    /// Pfaffian form.
    pub fn companion(&self) -> Result<QuatAltPair> {
        let q = self.pfaffian_form();
        let eps = epsilon_of(&q.disc()).ok_or_else(|| Error::BadDiscriminant(q.disc()))?;
        let two = BigInt::from(2);
        let e = BigInt::from(eps);
        let l = [[(&q.b - &e) / &two, -q.c.clone()], [q.a.clone(), (-&q.b - &e) / &two]];
        let lin = |c0: &BigInt, c1: &BigInt| -> AltMatrix {
            std::array::from_fn(|j| std::array::from_fn(|k| c0 * &self.mats[0][j][k] + c1 * &self.mats[1][j][k]))
        };
        Ok(QuatAltPair { mats: [lin(&l[0][0], &l[1][0]), lin(&l[0][1], &l[1][1])] })
    }

    /// The action of g ∈ SL2 on the pair index.
    pub fn act_pair(&self, g: &IMat2) -> Result<QuatAltPair> {
        g.check_sl2z()?;
        let m = g.int_rows()?;
        let lin = |c0: &BigInt, c1: &BigInt| -> AltMatrix {
            std::array::from_fn(|j| std::array::from_fn(|k| c0 * &self.mats[0][j][k] + c1 * &self.mats[1][j][k]))
        };
        Ok(QuatAltPair { mats: [lin(&m[0][0], &m[0][1]), lin(&m[1][0], &m[1][1])] })
    }
}

impl fmt::Display for QuatAltPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |m: &AltMatrix| {
            let rows: Vec<String> = m
                .iter()
                .map(|r| format!("[{}]", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
                .collect();
            format!("[{}]", rows.join(", "))
        };
        write!(f, "({}, {})", show(&self.mats[0]), show(&self.mats[1]))
    }
}

/// The block map sending a cube with slices (M, N) to
/// ([0 M; −Mᵀ 0], [0 N; −Nᵀ 0]).
pub fn phi(a: &Cube) -> QuatAltPair {
    let block = |i: usize| -> AltMatrix {
        let mut m: AltMatrix = Default::default();
        for j in 0..2 {
            for k in 0..2 {
                m[j][2 + k] = a.get(i, j, k).clone();
                m[2 + k][j] = -a.get(i, j, k).clone();
            }
        }
        m
    };
    QuatAltPair { mats: [block(0), block(1)] }
}

pub fn pair_pfaffian_form(p: &QuatAltPair) -> Bqf {
    p.pfaffian_form()
}

pub fn pair_disc(p: &QuatAltPair) -> BigInt {
    p.disc()
}

pub fn pair_companion(p: &QuatAltPair) -> Result<QuatAltPair> {
    p.companion()
}

/// (P⋆Q)(x,y,z; u,v,w) = P·Q′ + P′·Q + ε·P·Q, with dims [2,4,4,2,4,4].
pub fn pair_form_product(p: &QuatAltPair, q: &QuatAltPair) -> Result<MultiForm> {
    let (dp, dq) = (p.disc(), q.disc());
    if dp != dq {
        return Err(Error::DiscriminantMismatch(dp, dq));
    }
    let eps = epsilon_of(&dp).ok_or_else(|| Error::BadDiscriminant(dp.clone()))?;
    let (fp, fq) = (p.to_multiform(), q.to_multiform());
    let mut sum = fp.mul(&q.companion()?.to_multiform()).add(&p.companion()?.to_multiform().mul(&fq))?;
    if eps == 1 {
        sum = sum.add(&fp.mul(&fq))?;
    }
    Ok(sum)
}

fn unit4(i: usize) -> [BigInt; 4] {
    std::array::from_fn(|k| BigInt::from(u8::from(k == i)))
}

fn unit2(i: usize) -> [BigInt; 2] {
    std::array::from_fn(|k| BigInt::from(u8::from(k == i)))
}

fn add2(a: [BigInt; 2], b: [BigInt; 2]) -> [BigInt; 2] {
    let [a0, a1] = a;
    let [b0, b1] = b;
    [a0 + b0, a1 + b1]
}

/// Checks the composition law for F = φ(A), G = φ(B), H = φ(C) with
/// witnesses (R, S, T). A must be doubly symmetric.
pub fn verify_quaternary_composition(a: &Cube, b: &Cube, c: &Cube, r: &Cube, s: &Cube, t: &Cube) -> Result<Verification> {
    if !a.is_doubly_symmetric() {
        return Err(Error::Invalid(format!("cube {a} is not doubly symmetric")));
    }
    let mut v = Verification::new("quaternary");
    let d = a.disc();
    for (name, x) in [("B", b), ("C", c), ("R", r), ("S", s), ("T", t)] {
        v.check_eq(&format!("disc({name}) = disc(A)"), &x.disc(), &d);
    }
    if !v.holds() {
        return Ok(v);
    }
    let (f, g, h) = (phi(a), phi(b), phi(c));
    let lhs = pair_form_product(&g, &h)?;
    let (rs, ss, ts) = (r.sigma(), s.sigma(), t.sigma());
    // split a Z⁴ vector into its two Z² halves
    let halves = |v: &[BigInt; 4]| [[v[0].clone(), v[1].clone()], [v[2].clone(), v[3].clone()]];
    let rhs = MultiForm::from_fn(&[2, 4, 4, 2, 4, 4], |idx| {
        let (x, u) = (unit2(idx[0]), unit2(idx[3]));
        let [y1, y2] = halves(&unit4(idx[1]));
        let [z1, z2] = halves(&unit4(idx[2]));
        let [v1, v2] = halves(&unit4(idx[4]));
        let [w1, w2] = halves(&unit4(idx[5]));
        let mix = |p1: &[BigInt; 2], p2: &[BigInt; 2], q1: &[BigInt; 2], q2: &[BigInt; 2]| {
            add2(ss.bilinear(p1, q1), ts.bilinear(p2, q2))
        };
        let [ya, yb] = [mix(&y1, &y2, &v1, &v2), mix(&y1, &y2, &w1, &w2)];
        let [za, zb] = [mix(&z1, &z2, &v1, &v2), mix(&z1, &z2, &w1, &w2)];
        let yy = [ya[0].clone(), ya[1].clone(), yb[0].clone(), yb[1].clone()];
        let zz = [za[0].clone(), za[1].clone(), zb[0].clone(), zb[1].clone()];
        f.eval(&rs.bilinear(&x, &u), &yy, &zz)
    });
    let bad = lhs.first_mismatch(&rhs)?;
    v.check("(G*H)(x,y,z;u,v,w) = F(R(x,u), Y, Z)", bad.is_none(), bad.map(|m| m.to_string()));
    let [qa, qb, qc] = [a.assoc_forms(), b.assoc_forms(), c.assoc_forms()];
    v.check_eq("Q1(R) = Q1(A)", &r.form(0), &qa[0]);
    v.check_eq("Q2(R) = Q1(B)", &r.form(1), &qb[0]);
    for (i, w) in [r, s, t].into_iter().enumerate() {
        let left = &qb[i].a * &qc[i].a;
        let right = qa[i].eval(w.get(1, 0, 0), w.get(0, 0, 0));
        v.check_eq(&format!("Q{0}(B)(1,0) Q{0}(C)(1,0) = Q{0}(A)(w211, w111)", i + 1), &left, &right);
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn golden() -> [Cube; 6] {
        [
            Cube::from_i64([0, 2, 2, -1, 1, 0, 0, -3]),
            Cube::from_i64([0, -1, -2, -1, -1, 0, 0, 6]),
            Cube::from_i64([-1, 2, 2, -2, 1, 5, -1, -11]),
            Cube::from_i64([0, 2, 2, -1, 1, 0, 0, -3]),
            Cube::from_i64([1, -2, -1, 0, -1, 1, -6, 12]),
            Cube::from_i64([0, 2, 1, 0, 1, -1, 0, -6]),
        ]
    }

    fn std_block() -> AltMatrix {
        let mut m: AltMatrix = Default::default();
        for i in 0..2 {
            m[i][i + 2] = int(1);
            m[i + 2][i] = int(-1);
        }
        m
    }

    #[test]
    fn pfaffian_normalisation() {
        assert_eq!(pfaffian(&std_block()).unwrap(), int(1));
        let mut bad = std_block();
        bad[0][1] = int(1);
        assert!(pfaffian(&bad).is_err());
    }

    #[test]
    fn pfaffian_form_is_first_associated_form() {
        let [a, b, c, ..] = golden();
        for x in [&a, &b, &c] {
            assert_eq!(phi(x).pfaffian_form(), x.form(0));
        }
        assert_eq!(phi(&a).pfaffian_form(), Bqf::new(4, -1, 3));
        assert_eq!(pair_disc(&phi(&a)), int(-47));
    }

    #[test]
    fn phi_matches_trilinear_definition() {
        let [a, ..] = golden();
        let p = phi(&a);
        for x in 0..2 {
            for y in 0..4 {
                for z in 0..4 {
                    let (xv, yv, zv) = (unit2(x), unit4(y), unit4(z));
                    let y1 = [yv[0].clone(), yv[1].clone()];
                    let y2 = [yv[2].clone(), yv[3].clone()];
                    let z1 = [zv[0].clone(), zv[1].clone()];
                    let z2 = [zv[2].clone(), zv[3].clone()];
                    assert_eq!(p.eval(&xv, &yv, &zv), a.eval(&xv, &y1, &z2) - a.eval(&xv, &z1, &y2));
                }
            }
        }
        assert_eq!(phi(&Cube::zero()), QuatAltPair::zero());
    }

    #[test]
    fn companions_commute_with_phi() {
        let [a, b, c, ..] = golden();
        assert_eq!(a.companion(), Cube::from_i64([4, -2, -2, -11, 0, -6, -6, 3]));
        assert_eq!(b.companion(), Cube::from_i64([-2, 0, 0, 12, 1, 6, 12, 0]));
        assert_eq!(c.companion(), Cube::from_i64([2, 10, -2, -22, 5, -17, -11, 23]));
        for x in [&a, &b, &c] {
            assert_eq!(phi(x).companion().unwrap(), phi(&x.companion()));
        }
    }

    #[test]
    fn golden_identity() {
        let [a, b, c, r, s, t] = golden();
        let v = verify_quaternary_composition(&a, &b, &c, &r, &s, &t).unwrap();
        assert!(v.holds(), "{v}");
        let mut bad = t.clone();
        bad.0[3] += 1;
        assert!(!verify_quaternary_composition(&a, &b, &c, &r, &s, &bad).unwrap().holds());
        assert!(verify_quaternary_composition(&b, &a, &c, &r, &s, &t).is_err());
    }
}
