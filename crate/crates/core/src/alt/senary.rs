use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cubes::{identity_cube, Cube};
use crate::error::{Error, Result};
use crate::exact::{epsilon_of, MultiForm};
use crate::quadratic::{KElem, QuadraticRing};
use crate::verify::Verification;

/// The twenty triples i < j < k of {0, …, 5} in lexicographic order.
fn triples() -> &'static [[usize; 3]; 20] {
    static T: OnceLock<[[usize; 3]; 20]> = OnceLock::new();
    T.get_or_init(|| {
        let mut out = [[0; 3]; 20];
        let mut n = 0;
        for i in 0..6 {
            for j in i + 1..6 {
                for k in j + 1..6 {
                    out[n] = [i, j, k];
                    n += 1;
                }
            }
        }
        out
    })
}

fn triple_index(t: [usize; 3]) -> usize {
    triples().iter().position(|&u| u == t).expect("sorted distinct triple")
}

/// A senary alternating 3-form, stored by its coefficients a_ijk for
/// i < j < k in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SenaryAlt3 {
    coeffs: [BigInt; 20],
}

impl SenaryAlt3 {
    pub fn new(coeffs: [BigInt; 20]) -> Self {
        SenaryAlt3 { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt; 20] {
        &self.coeffs
    }

    /// a_ijk for any indices, with the sign of the sorting permutation.
    pub fn get(&self, i: usize, j: usize, k: usize) -> BigInt {
        let mut t = [i, j, k];
        if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
            return BigInt::zero();
        }
        let mut sign = 1;
        for a in 0..3 {
            for b in 0..2 - a {
                if t[b] > t[b + 1] {
                    t.swap(b, b + 1);
                    sign = -sign;
                }
            }
        }
        let c = self.coeffs[triple_index(t)].clone();
        if sign < 0 {
            -c
        } else {
            c
        }
    }

    /// E(x, y, z) = Σ_{i<j<k} a_ijk · det of the (i, j, k) columns.
    pub fn eval(&self, x: &[BigInt], y: &[BigInt], z: &[BigInt]) -> BigInt {
        let mut total = BigInt::zero();
        for (c, &[i, j, k]) in self.coeffs.iter().zip(triples()) {
            if c.is_zero() {
                continue;
            }
            let det = &x[i] * (&y[j] * &z[k] - &y[k] * &z[j]) - &x[j] * (&y[i] * &z[k] - &y[k] * &z[i])
                + &x[k] * (&y[i] * &z[j] - &y[j] * &z[i]);
            total += c * det;
        }
        total
    }

    pub fn to_multiform(&self) -> MultiForm {
        MultiForm::from_fn(&[6, 6, 6], |t| self.get(t[0], t[1], t[2]))
    }
}

impl fmt::Display for SenaryAlt3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Σ a_ijk e_i ∧ e_{2+j} ∧ e_{4+k}: the three cube factors land in
/// coordinates {0,1}, {2,3} and {4,5}.
pub fn wedge222(a: &Cube) -> SenaryAlt3 {
    let mut coeffs: [BigInt; 20] = Default::default();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                coeffs[triple_index([i, 2 + j, 4 + k])] = a.get(i, j, k).clone();
            }
        }
    }
    SenaryAlt3 { coeffs }
}

fn det3(m: &[[KElem; 3]; 3]) -> KElem {
    let minor = |a: &KElem, b: &KElem, c: &KElem, d: &KElem| &(a * d) - &(b * c);
    let t0 = &m[0][0] * &minor(&m[1][1], &m[1][2], &m[2][1], &m[2][2]);
    let t1 = &m[0][1] * &minor(&m[1][0], &m[1][2], &m[2][0], &m[2][2]);
    let t2 = &m[0][2] * &minor(&m[1][0], &m[1][1], &m[2][0], &m[2][1]);
    &(&t0 - &t1) + &t2
}

/// (E_id, E_id′) from det(α_i, α_j, α_k) = a′_ijk + a_ijk·τ over the basis
/// (1,0,0), (τ,0,0), (0,1,0), (0,τ,0), (0,0,1), (0,0,τ) of S ⊕ S ⊕ S.
pub fn senary_identity_pair(d: &BigInt) -> Result<(SenaryAlt3, SenaryAlt3)> {
    let ring = QuadraticRing::new(d)?;
    if d.is_zero() {
        return Err(Error::BadDiscriminant(d.clone()));
    }
    let basis: Vec<[KElem; 3]> = (0..6)
        .map(|n| {
            let gen = if n % 2 == 0 { ring.one() } else { ring.tau() };
            std::array::from_fn(|b| if b == n / 2 { gen.clone() } else { ring.zero() })
        })
        .collect();
    let mut e: [BigInt; 20] = Default::default();
    let mut ep: [BigInt; 20] = Default::default();
    for (n, &[i, j, k]) in triples().iter().enumerate() {
        let m = [basis[i].clone(), basis[j].clone(), basis[k].clone()];
        let [c0, c1] = det3(&m).int_coords().expect("determinants of integral vectors are integral");
        ep[n] = c0;
        e[n] = c1;
    }
    Ok((SenaryAlt3::new(e), SenaryAlt3::new(ep)))
}

/// How the cube R enters the senary identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SenaryConvention {
    /// The bilinear pair of R itself, which is multiplication in S.
    MultiplicationTable,
    /// The bilinear pair of R^ι, as the identity is printed.
    LiteralIota,
}

/// Checks the senary identity for E_id,D with R = [1,0,0,(D−ε)/4,0,1,1,ε]
/// under the multiplication-table reading.
pub fn verify_senary_identity(d: &BigInt) -> Result<Verification> {
    let eps = epsilon_of(d).ok_or_else(|| Error::BadDiscriminant(d.clone()))?;
    let e = BigInt::from(eps);
    let n = (d - &e) / BigInt::from(4);
    let r = Cube([1.into(), 0.into(), 0.into(), n, 0.into(), 1.into(), 1.into(), e]);
    verify_senary_with(d, &r, SenaryConvention::MultiplicationTable)
}

/// Expands both sides of the senary identity over all 6⁶ basis tuples.
pub fn verify_senary_with(d: &BigInt, r: &Cube, conv: SenaryConvention) -> Result<Verification> {
    let eps = epsilon_of(d).ok_or_else(|| Error::BadDiscriminant(d.clone()))?;
    let mut v = Verification::new("senary");
    let e_id = wedge222(&identity_cube(d)?);
    let (e_tau, e_prime) = senary_identity_pair(d)?;
    v.check_eq("E_id = τ-part of the determinant form", &e_tau, &e_id);
    v.check_eq("disc(R) = D", &r.disc(), d);
    v.note(match conv {
        SenaryConvention::MultiplicationTable => "bilinear maps read from R",
        SenaryConvention::LiteralIota => "bilinear maps read from R^ι",
    });
    let map = match conv {
        SenaryConvention::MultiplicationTable => r.clone(),
        SenaryConvention::LiteralIota => r.iota(),
    };
    // table[a][b] = Σ_i R(x_i, u_i) for x = e_a, u = e_b: nonzero only when
    // a and b fall in the same Z² block
    let table: Vec<Vec<[BigInt; 2]>> = (0..6)
        .map(|a| {
            (0..6)
                .map(|b| {
                    if a / 2 != b / 2 {
                        return [BigInt::zero(), BigInt::zero()];
                    }
                    let unit = |i: usize| -> [BigInt; 2] { std::array::from_fn(|k| BigInt::from(u8::from(k == i % 2))) };
                    map.bilinear(&unit(a), &unit(b))
                })
                .collect()
        })
        .collect();
    let e_vals = e_id.to_multiform();
    let ep_vals = e_prime.to_multiform();
    let eps_int = BigInt::from(eps);
    let mut bad = None;
    let mut count = 0usize;
    'outer: for t in MultiForm::zero(&[6; 6]).tuples() {
        let first = e_vals.get(&t[..3]);
        let second = e_vals.get(&t[3..]);
        let lhs = first * ep_vals.get(&t[3..]) + ep_vals.get(&t[..3]) * second + &eps_int * first * second;
        let column = |w: usize| -> Vec<BigInt> {
            (0..3).flat_map(|slot| table[t[slot]][t[w]].clone()).collect()
        };
        let rhs = e_id.eval(&column(3), &column(4), &column(5));
        count += 1;
        if lhs != rhs {
            bad = Some(crate::exact::Mismatch { index: t.clone(), left: lhs, right: rhs });
            break 'outer;
        }
    }
    v.check(
        "(E*E)(x,y,z;u,v,w) = E[X(u), X(v), X(w)]",
        bad.is_none(),
        bad.map(|m| format!("{m} after {count} tuples")),
    );
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn wedge_is_alternating() {
        let a = Cube::from_i64([3, -1, 4, 1, -5, 9, 2, -6]);
        let e = wedge222(&a);
        let x: Vec<BigInt> = [1, 2, -3, 4, 0, 5].map(BigInt::from).to_vec();
        let y: Vec<BigInt> = [2, -1, 1, 0, 3, 1].map(BigInt::from).to_vec();
        let z: Vec<BigInt> = [0, 1, 1, -2, 1, 1].map(BigInt::from).to_vec();
        assert_eq!(e.eval(&x, &y, &z), -e.eval(&y, &x, &z));
        assert_eq!(e.eval(&x, &y, &z), -e.eval(&x, &z, &y));
        assert_eq!(e.eval(&x, &x, &z), int(0));
        assert!(wedge222(&Cube::zero()).coeffs().iter().all(Zero::is_zero));
        assert_eq!(e.get(0, 2, 4), int(3));
        assert_eq!(e.get(4, 2, 0), int(-3));
    }

    #[test]
    fn identity_pair_matches_wedge() {
        for d in [5, 8, -47, -4, 13] {
            let (e, _) = senary_identity_pair(&int(d)).unwrap();
            assert_eq!(e, wedge222(&identity_cube(&int(d)).unwrap()), "D = {d}");
        }
    }

    #[test]
    fn identity_small_discriminants() {
        for d in [-4, 5] {
            let v = verify_senary_identity(&int(d)).unwrap();
            assert!(v.holds(), "{v}");
        }
    }

    #[test]
    fn literal_iota_reading_differs() {
        let r = Cube::from_i64([1, 0, 0, -1, 0, 1, 1, 0]);
        let v = verify_senary_with(&int(-4), &r, SenaryConvention::LiteralIota).unwrap();
        assert!(!v.holds());
    }

    #[test]
    fn wrong_cube_fails() {
        // ε flipped
        let r = Cube::from_i64([1, 0, 0, -1, 0, 1, 1, 1]);
        let v = verify_senary_with(&int(-4), &r, SenaryConvention::MultiplicationTable).unwrap();
        assert!(!v.holds());
    }
}
