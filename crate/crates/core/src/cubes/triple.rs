use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::cube::Cube;
use crate::bqf::ideal_to_bqf;
use crate::error::{Error, Result};
use crate::exact::{IMat2, Rat};
use crate::quadratic::{KElem, OrientedIdeal, QuadraticRing};

/// Three oriented ideals with chosen bases ⟨α1, α2⟩, ⟨β1, β2⟩, ⟨γ1, γ2⟩
/// such that I1·I2·I3 ⊆ S and N(I1)·N(I2)·N(I3) = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedTriple {
    pub ideals: [OrientedIdeal; 3],
}

impl BalancedTriple {
    pub fn new(ideals: [OrientedIdeal; 3]) -> Result<Self> {
        let ring = ideals[0].ring();
        if ideals.iter().any(|i| i.ring() != ring) {
            return Err(Error::Invalid("ideals from different rings".into()));
        }
        let t = BalancedTriple { ideals };
        let norm: Rat = t.ideals.iter().map(OrientedIdeal::norm).product();
        if !norm.is_one() {
            return Err(Error::Invalid(format!("norms multiply to {norm}, not 1")));
        }
        for n in 0..8 {
            let x = t.product(n >> 2, (n >> 1) & 1, n & 1);
            if !x.is_integral() {
                return Err(Error::Invalid(format!("basis product {x} is not in S")));
            }
        }
        Ok(t)
    }

    /// The identity triple (S, S, S) with bases ⟨1, τ⟩.
    pub fn unit(ring: &QuadraticRing) -> Self {
        let s = OrientedIdeal::unit(ring);
        BalancedTriple { ideals: [s.clone(), s.clone(), s] }
    }

    pub fn ring(&self) -> &QuadraticRing {
        self.ideals[0].ring()
    }

    /// α_i·β_j·γ_k for 0-based indices.
    pub fn product(&self, i: usize, j: usize, k: usize) -> KElem {
        let [a, b, c] = &self.ideals;
        &(&a.basis()[i] * &b.basis()[j]) * &c.basis()[k]
    }

    /// Verifies N(xα1 − yα2)/N(I_m) = Q_m for each m and the identity
    /// N(I1)·β_j·γ_k = a_2jk·conj(α1) − a_1jk·conj(α2).
    pub fn check_norm_laws(&self, cube: &Cube) -> Result<()> {
        let forms = cube.assoc_forms();
        for (m, ideal) in self.ideals.iter().enumerate() {
            let q = ideal_to_bqf(ideal)?;
            if q != forms[m] {
                return Err(Error::Invalid(format!("norm form of I{} is {q}, expected {}", m + 1, forms[m])));
            }
        }
        let [i1, i2, i3] = &self.ideals;
        let n1 = i1.norm();
        let [a1, a2] = i1.basis();
        for j in 0..2 {
            for k in 0..2 {
                let lhs = (&i2.basis()[j] * &i3.basis()[k]).scale(&n1);
                let rhs = &a1.conj().scale_int(cube.get(1, j, k)) - &a2.conj().scale_int(cube.get(0, j, k));
                if lhs != rhs {
                    return Err(Error::Invalid(format!("basis identity fails at (j,k) = ({}, {})", j + 1, k + 1)));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for BalancedTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.ideals;
        write!(f, "({a}, {b}, {c})")
    }
}

/// The cube of τ-coefficients of the eight products α_i·β_j·γ_k. The
/// τ-free parts are checked against the companion of the result.
pub fn triple_to_cube(t: &BalancedTriple) -> Result<Cube> {
    let t = BalancedTriple::new(t.ideals.clone())?;
    let mut coeffs: [BigInt; 8] = std::array::from_fn(|_| BigInt::zero());
    let mut free: [BigInt; 8] = std::array::from_fn(|_| BigInt::zero());
    for n in 0..8 {
        let [p, q] = t.product(n >> 2, (n >> 1) & 1, n & 1).int_coords().expect("balanced triple");
        coeffs[n] = q;
        free[n] = p;
    }
    let cube = Cube(coeffs);
    if &cube.disc() != t.ring().discriminant() {
        return Err(Error::Invalid(format!(
            "triple gives a cube of discriminant {}, ring has {}",
            cube.disc(),
            t.ring().discriminant()
        )));
    }
    if cube.companion() != Cube(free) {
        return Err(Error::Invalid("τ-free parts do not match the companion cube".into()));
    }
    Ok(cube)
}

fn direct_triple(a: &Cube) -> Result<BalancedTriple> {
    let ring = QuadraticRing::new(&a.disc())?;
    let comp = a.companion();
    let el = |i: usize, j: usize, k: usize| ring.elem(comp.get(i, j, k).clone(), a.get(i, j, k).clone());
    let (alpha1, alpha2) = (el(0, 0, 0), el(1, 0, 0));
    let (beta1, beta2) = (el(1, 0, 1), el(1, 1, 1));
    if alpha2.is_zero() || beta1.is_zero() {
        return Err(Error::Degenerate("vanishing corner".into()));
    }
    let gamma1 = beta1.inverse()?;
    let gamma2 = alpha2.inverse()?;
    let ideals = [
        OrientedIdeal::new(alpha1, alpha2)?,
        OrientedIdeal::new(beta1, beta2)?,
        OrientedIdeal::new(gamma1, gamma2)?,
    ];
    let t = BalancedTriple::new(ideals)?;
    for n in 0..8 {
        let (i, j, k) = (n >> 2, (n >> 1) & 1, n & 1);
        if t.product(i, j, k) != el(i, j, k) {
            return Err(Error::Degenerate(format!("product α{}β{}γ{} does not match the cube", i + 1, j + 1, k + 1)));
        }
    }
    Ok(t)
}

// α = g⁻¹·α′ when the cube was moved by g on that factor
fn pull_back(ideal: &OrientedIdeal, g: &IMat2) -> Result<OrientedIdeal> {
    let inv = g.inverse()?.int_rows()?;
    let [b1, b2] = ideal.basis();
    let comb = |row: &Vec<BigInt>| &b1.scale_int(&row[0]) + &b2.scale_int(&row[1]);
    OrientedIdeal::new(comb(&inv[0]), comb(&inv[1]))
}

fn normalisers() -> Vec<[IMat2; 3]> {
    let id = IMat2::identity();
    let mut singles = Vec::new();
    for factor in 0..3 {
        for k in [1i64, 2, 3, -1, -2, -3] {
            for upper in [true, false] {
                let m = if upper { IMat2::from_i64(1, k, 0, 1) } else { IMat2::from_i64(1, 0, k, 1) };
                let mut g = [id.clone(), id.clone(), id.clone()];
                g[factor] = m;
                singles.push(g);
            }
        }
    }
    let mut all = singles.clone();
    for x in &singles {
        for y in &singles {
            all.push([x[0].mul(&y[0]), x[1].mul(&y[1]), x[2].mul(&y[2])]);
        }
    }
    all
}

/// The balanced triple of a nondegenerate cube: α1 = a′111 + a111τ,
/// α2 = a′211 + a211τ, β1 = a′212 + a212τ, β2 = a′222 + a222τ,
/// γ1 = 1/β1, γ2 = 1/α2. Vanishing corners are avoided by moving the cube
/// with unipotent matrices and pulling the bases back.
pub fn cube_to_triple(a: &Cube) -> Result<BalancedTriple> {
    let d = a.disc();
    if d.is_zero() {
        return Err(Error::Degenerate(format!("cube {a} has zero discriminant")));
    }
    if crate::exact::is_square(&d) {
        return Err(Error::Unsupported(format!("square discriminant {d}")));
    }
    let triple = match direct_triple(a) {
        Ok(t) => t,
        Err(first) => {
            let mut found = None;
            for g in normalisers() {
                let moved = a.gamma_act([&g[0], &g[1], &g[2]])?;
                if let Ok(t) = direct_triple(&moved) {
                    let ideals = [pull_back(&t.ideals[0], &g[0])?, pull_back(&t.ideals[1], &g[1])?, pull_back(&t.ideals[2], &g[2])?];
                    found = Some(BalancedTriple::new(ideals)?);
                    break;
                }
            }
            found.ok_or(first)?
        }
    };
    triple.check_norm_laws(a)?;
    Ok(triple)
}
