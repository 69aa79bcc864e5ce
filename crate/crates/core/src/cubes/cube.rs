use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bqf::Bqf;
use crate::error::{Error, Result};
use crate::exact::{epsilon_of, IMat2, MultiForm, Rat};

/// A 2×2×2 integer cube [a111, a112, a121, a122, a211, a212, a221, a222].
/// The entry a_ijk (0-based i, j, k) is stored at index 4i + 2j + k.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cube(pub [BigInt; 8]);

/// A 2×2 integer matrix as rows.
pub type Mat = [[BigInt; 2]; 2];

impl Cube {
    pub fn new(coeffs: [BigInt; 8]) -> Self {
        Cube(coeffs)
    }

    pub fn from_i64(c: [i64; 8]) -> Self {
        Cube(c.map(BigInt::from))
    }

    pub fn zero() -> Self {
        Cube(std::array::from_fn(|_| BigInt::zero()))
    }

    pub fn coeffs(&self) -> &[BigInt; 8] {
        &self.0
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &BigInt {
        &self.0[4 * i + 2 * j + k]
    }

    fn from_fn(mut f: impl FnMut(usize, usize, usize) -> BigInt) -> Cube {
        Cube(std::array::from_fn(|n| f(n >> 2, (n >> 1) & 1, n & 1)))
    }

    pub fn to_multiform(&self) -> MultiForm {
        MultiForm::from_coeffs(&[2, 2, 2], self.0.to_vec()).expect("eight coefficients")
    }

    pub fn from_multiform(f: &MultiForm) -> Result<Cube> {
        if f.dims() != [2, 2, 2] {
            return Err(Error::DimensionMismatch(format!("expected dims [2,2,2], got {:?}", f.dims())));
        }
        Ok(Cube(std::array::from_fn(|n| f.coeffs()[n].clone())))
    }

    /// A(x, y, z) = Σ a_ijk x_i y_j z_k.
    pub fn eval(&self, x: &[BigInt; 2], y: &[BigInt; 2], z: &[BigInt; 2]) -> BigInt {
        let mut s = BigInt::zero();
        for (n, a) in self.0.iter().enumerate() {
            if !a.is_zero() {
                s += a * &x[n >> 2] * &y[(n >> 1) & 1] * &z[n & 1];
            }
        }
        s
    }

    /// The bilinear pair (A(e1, y, z), A(e2, y, z)).
    pub fn bilinear(&self, y: &[BigInt; 2], z: &[BigInt; 2]) -> [BigInt; 2] {
        let e = |i: usize| {
            let mut s = BigInt::zero();
            for j in 0..2 {
                for k in 0..2 {
                    s += self.get(i, j, k) * &y[j] * &z[k];
                }
            }
            s
        };
        [e(0), e(1)]
    }

    /// The slices (M_i, N_i) for factor i ∈ {0, 1, 2}:
    /// M1 = [[a,b],[c,d]], N1 = [[e,f],[g,h]], M2 = [[a,e],[b,f]],
    /// N2 = [[c,g],[d,h]], M3 = [[a,c],[e,g]], N3 = [[b,d],[f,h]].
    pub fn slices(&self, factor: usize) -> (Mat, Mat) {
        let pick = |s: usize, r: usize, c: usize| match factor {
            0 => self.get(s, r, c).clone(),
            1 => self.get(c, s, r).clone(),
            2 => self.get(r, c, s).clone(),
            _ => panic!("cube factor out of range: {factor}"),
        };
        let m = |s: usize| [[pick(s, 0, 0), pick(s, 0, 1)], [pick(s, 1, 0), pick(s, 1, 1)]];
        (m(0), m(1))
    }

    /// Q_i(x, y) = −det(M_i x − N_i y).
    pub fn form(&self, factor: usize) -> Bqf {
        let (m, n) = self.slices(factor);
        let a = &m[0][1] * &m[1][0] - &m[0][0] * &m[1][1];
        let b = &m[0][0] * &n[1][1] + &n[0][0] * &m[1][1] - &m[0][1] * &n[1][0] - &n[0][1] * &m[1][0];
        let c = &n[0][1] * &n[1][0] - &n[0][0] * &n[1][1];
        Bqf { a, b, c }
    }

    pub fn assoc_forms(&self) -> [Bqf; 3] {
        let qs = [self.form(0), self.form(1), self.form(2)];
        assert!(
            qs[0].disc() == qs[1].disc() && qs[1].disc() == qs[2].disc(),
            "associated forms of {self} have different discriminants"
        );
        qs
    }

    pub fn disc(&self) -> BigInt {
        self.assoc_forms()[0].disc()
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.disc().is_zero()
    }

    pub fn is_projective(&self) -> bool {
        self.assoc_forms().iter().all(Bqf::is_primitive)
    }

    /// ε ∈ {0, 1} congruent to the discriminant mod 4.
    pub fn eps(&self) -> u8 {
        epsilon_of(&self.disc()).expect("cube discriminants are 0 or 1 mod 4")
    }

    /// A^ι = [e,f,g,h,a,b,c,d].
    pub fn iota(&self) -> Cube {
        Cube::from_fn(|i, j, k| self.get(1 - i, j, k).clone())
    }

    /// A^σ = [−e,−f,−g,−h,a,b,c,d].
    pub fn sigma(&self) -> Cube {
        Cube::from_fn(|i, j, k| if i == 0 { -self.get(1, j, k).clone() } else { self.get(0, j, k).clone() })
    }

    /// Ã = [−a,b,c,−d,e,−f,−g,h].
    pub fn tilde(&self) -> Cube {
        Cube::from_fn(|i, j, k| {
            let v = self.get(i, j, k).clone();
            if (i + j + k) % 2 == 0 {
                -v
            } else {
                v
            }
        })
    }

    /// The Γ-action: factor f is acted on by g_f, sending the slice pair
    /// (M, N) to (pM + qN, rM + sN) for g_f = [[p, q], [r, s]].
    pub fn gamma_act(&self, g: [&IMat2; 3]) -> Result<Cube> {
        let mut f = self.to_multiform();
        for (factor, m) in g.iter().enumerate() {
            m.check_sl2z()?;
            f = f.substitute(factor, &m.transpose().int_rows()?)?;
        }
        Cube::from_multiform(&f)
    }

    /// L_i = [[(q − ε)/2, −r], [p, (−q − ε)/2]] built from Q_i = [p, q, r].
    pub fn l_matrix(&self, factor: usize) -> IMat2 {
        let q = self.form(factor);
        let e = Rat::from_integer(self.eps().into());
        let two = Rat::from_integer(2.into());
        let (p, qq, r) = (Rat::from_integer(q.a), Rat::from_integer(q.b), Rat::from_integer(q.c));
        IMat2::new((&qq - &e) / &two, -r, p, (-qq - e) / two)
    }

    /// The companion cube A′(x, y, z) = A(L_1 x, y, z).
    pub fn companion(&self) -> Cube {
        self.companion_via(0)
    }

    /// The companion computed through the substitution on factor `factor`.
    pub fn companion_via(&self, factor: usize) -> Cube {
        let l = self.l_matrix(factor).int_rows().expect("q ≡ ε mod 2 makes L integral");
        let f = self.to_multiform().substitute(factor, &l).expect("2×2 substitution");
        Cube::from_multiform(&f).expect("cube shape preserved")
    }

    /// True when a_ijk is invariant under every permutation of (i, j, k).
    pub fn is_triply_symmetric(&self) -> bool {
        self.is_doubly_symmetric() && self.get(0, 0, 1) == self.get(1, 0, 0) && self.get(0, 1, 1) == self.get(1, 0, 1)
    }

    /// True when a_ijk = a_ikj.
    pub fn is_doubly_symmetric(&self) -> bool {
        self.get(0, 0, 1) == self.get(0, 1, 0) && self.get(1, 0, 1) == self.get(1, 1, 0)
    }

    pub fn map(&self, f: impl Fn(&BigInt) -> BigInt) -> Cube {
        Cube(std::array::from_fn(|n| f(&self.0[n])))
    }
}

impl fmt::Display for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// A_id,D = [0,1,1,0,1,0,0,D/4] or [0,1,1,1,1,1,1,(D+3)/4].
pub fn identity_cube(d: &BigInt) -> Result<Cube> {
    let last = match epsilon_of(d) {
        Some(0) => d / BigInt::from(4),
        Some(_) => (d + BigInt::from(3)) / BigInt::from(4),
        None => return Err(Error::BadDiscriminant(d.clone())),
    };
    let e = BigInt::from(epsilon_of(d).unwrap());
    let one = BigInt::from(1);
    Ok(Cube([BigInt::zero(), one.clone(), one.clone(), e.clone(), one, e.clone(), e, last]))
}

pub fn assoc_forms(a: &Cube) -> [Bqf; 3] {
    a.assoc_forms()
}

pub fn cube_disc(a: &Cube) -> BigInt {
    a.disc()
}

pub fn is_projective(a: &Cube) -> bool {
    a.is_projective()
}

pub fn gamma_act(a: &Cube, g1: &IMat2, g2: &IMat2, g3: &IMat2) -> Result<Cube> {
    a.gamma_act([g1, g2, g3])
}

/// (A^ι, A^σ, Ã).
pub fn cube_variants(a: &Cube) -> (Cube, Cube, Cube) {
    (a.iota(), a.sigma(), a.tilde())
}

pub fn companion_cube(a: &Cube) -> Cube {
    a.companion()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn b(v: [i64; 3]) -> Bqf {
        Bqf::new(v[0], v[1], v[2])
    }

    #[test]
    fn associated_forms_golden() {
        let a = Cube::from_i64([0, -1, -2, -1, -1, 0, 0, 6]);
        assert_eq!(a.assoc_forms(), [b([2, 1, 6]), b([1, -1, 12]), b([2, -1, 6])]);
        let c = Cube::from_i64([0, 1, 4, -1, 1, 0, 0, -3]);
        assert_eq!(c.assoc_forms(), [b([4, -1, 3]), b([1, 1, 12]), b([4, 1, 3])]);
        let id = identity_cube(&int(-47)).unwrap();
        assert_eq!(id, Cube::from_i64([0, 1, 1, 1, 1, 1, 1, -11]));
        // literally x² − xy + 12y², properly equivalent to the principal form
        assert_eq!(id.assoc_forms(), [b([1, -1, 12]), b([1, -1, 12]), b([1, -1, 12])]);
        for q in id.assoc_forms() {
            assert_eq!(crate::bqf::reduce(&q).unwrap().form, b([1, 1, 12]));
        }
        assert_eq!(a.disc(), int(-47));
        assert!(a.is_projective());
    }

    #[test]
    fn identity_cubes() {
        assert_eq!(identity_cube(&int(8)).unwrap(), Cube::from_i64([0, 1, 1, 0, 1, 0, 0, 2]));
        assert_eq!(identity_cube(&int(5)).unwrap(), Cube::from_i64([0, 1, 1, 1, 1, 1, 1, 2]));
        assert_eq!(identity_cube(&int(5)).unwrap().disc(), int(5));
        assert!(identity_cube(&int(6)).is_err());
        assert_eq!(Cube::zero().disc(), int(0));
        assert!(!Cube::zero().is_nondegenerate());
    }

    #[test]
    fn variants_transform_forms() {
        let a = Cube::from_i64([0, -1, -2, -1, -1, 0, 0, 6]);
        let q = a.form(0);
        let (i, s, t) = cube_variants(&a);
        assert_eq!(i.form(0), Bqf::new(q.c.clone(), q.b.clone(), q.a.clone()));
        // Q(−y, x) = c x² − b xy + a y²
        assert_eq!(s.form(0), Bqf::new(q.c.clone(), -q.b.clone(), q.a.clone()));
        for f in 0..3 {
            assert_eq!(t.form(f), a.form(f).flip());
        }
        assert_eq!(i, Cube::from_i64([-1, 0, 0, 6, 0, -1, -2, -1]));
    }

    #[test]
    fn substitution_realises_variants() {
        let a = Cube::from_i64([3, -1, 4, 1, -5, 9, 2, 6]);
        let swap = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
        let f = a.to_multiform().substitute(0, &swap).unwrap();
        assert_eq!(Cube::from_multiform(&f).unwrap(), a.iota());
        let rot = vec![vec![int(0), int(1)], vec![int(-1), int(0)]];
        let f = a.to_multiform().substitute(0, &rot).unwrap();
        assert_eq!(Cube::from_multiform(&f).unwrap(), a.sigma());
    }

    #[test]
    fn companions_golden() {
        let cases = [
            ([0, -1, -2, -1, -1, 0, 0, 6], [-2, 0, 0, 12, 1, 6, 12, 0]),
            ([0, 2, 2, -1, 1, 0, 0, -3], [4, -2, -2, -11, 0, -6, -6, 3]),
            ([-1, 2, 2, -2, 1, 5, -1, -11], [2, 10, -2, -22, 5, -17, -11, 23]),
        ];
        for (a, ap) in cases {
            let a = Cube::from_i64(a);
            let expected = Cube::from_i64(ap);
            assert_eq!(a.companion(), expected);
            assert_eq!(a.companion_via(1), expected);
            assert_eq!(a.companion_via(2), expected);
        }
    }

    #[test]
    fn gamma_action() {
        let id5 = identity_cube(&int(5)).unwrap();
        let e = IMat2::identity();
        assert_eq!(id5.gamma_act([&e, &e, &e]).unwrap(), id5);
        let s = IMat2::from_i64(0, 1, -1, 0);
        let moved = id5.gamma_act([&s, &e, &e]).unwrap();
        // (M, N) ↦ (N, −M)
        assert_eq!(moved, Cube::from_i64([1, 1, 1, 2, 0, -1, -1, -1]));
        assert_eq!(moved.disc(), int(5));
        assert!(id5.gamma_act([&IMat2::from_i64(2, 0, 0, 1), &e, &e]).is_err());
    }

    #[test]
    fn gamma_transforms_forms() {
        let a = Cube::from_i64([3, -1, 4, 1, -5, 9, 2, 6]);
        let g = IMat2::from_i64(2, 1, 5, 3);
        let e = IMat2::identity();
        let moved = a.gamma_act([&g, &e, &e]).unwrap();
        // Q_1(px − ry, −qx + sy)
        let q = a.form(0);
        let sub = q.substitute(&[[int(2), int(-5)], [int(-1), int(3)]]);
        assert_eq!(moved.form(0), sub);
    }
}
