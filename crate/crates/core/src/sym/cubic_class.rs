use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::cubic::BinaryCubic;
use crate::cubes::cube_class_sum_is_identity;
use crate::error::{Error, Result};
use crate::exact::{is_square, IMat2};
use crate::quadratic::{ideal_mul, kelem_cube_root, KElem, OrientedIdeal, QuadraticRing};

/// The ideal-theoretic data (S, I, δ) of a binary cubic form, with the
/// basis (α, β) of I satisfying (xα + yβ)³ = δ(f(x,y)τ + f′(x,y)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicTriple {
    pub ideal: OrientedIdeal,
    pub delta: KElem,
}

impl CubicTriple {
    pub fn ring(&self) -> &QuadraticRing {
        self.ideal.ring()
    }

    /// Reads off the cubic form from α³, α²β, αβ², β³ divided by δ.
    pub fn to_cubic(&self) -> Result<BinaryCubic> {
        let [alpha, beta] = self.ideal.basis();
        let terms = [alpha.pow(3), &alpha.pow(2) * beta, alpha * &beta.pow(2), beta.pow(3)];
        let mut out: [BigInt; 4] = Default::default();
        for (slot, t) in out.iter_mut().zip(terms) {
            let q = t.div(&self.delta)?;
            let [_, a] = q
                .int_coords()
                .ok_or_else(|| Error::Invalid(format!("I³ is not contained in δS: {q} is not integral")))?;
            *slot = a;
        }
        Ok(BinaryCubic(out))
    }
}

fn ring_of(f: &BinaryCubic) -> Result<QuadraticRing> {
    let d = f.disc();
    if d.is_zero() || is_square(&d) {
        return Err(Error::Unsupported(format!("cubic forms of square discriminant {d}")));
    }
    QuadraticRing::new(&d)
}

fn paper_triple(ring: &QuadraticRing, f: &BinaryCubic) -> Result<CubicTriple> {
    let fp = f.companion();
    let alpha = ring.elem(fp.0[1].clone(), f.0[1].clone());
    let beta = ring.elem(fp.0[2].clone(), f.0[2].clone());
    let delta = &alpha * &beta;
    let ideal = OrientedIdeal::new(alpha, beta)?;
    Ok(CubicTriple { ideal, delta })
}

/// The triple (S, I_f, δ_f) with α = a′₁ + a₁τ, β = a′₂ + a₂τ, δ_f = αβ.
///
/// When α and β happen to be dependent the construction runs on a
/// unipotent translate of f and the basis is pulled back.
pub fn cubic_triple(f: &BinaryCubic) -> Result<CubicTriple> {
    let ring = ring_of(f)?;
    if !f.is_projective() {
        return Err(Error::NotPrimitive(format!("cubic {f}")));
    }
    if let Ok(t) = paper_triple(&ring, f) {
        if t.to_cubic().as_ref() == Ok(f) {
            return Ok(t);
        }
    }
    for k in [1i64, -1, 2, -2, 3, -3] {
        for g in [IMat2::from_i64(1, k, 0, 1), IMat2::from_i64(1, 0, k, 1)] {
            let Ok(t) = paper_triple(&ring, &f.act(&g)?) else { continue };
            // f_g(v) = f(gᵀv), so the basis for f is g⁻¹ applied to the one for f_g
            let h = g.inverse()?;
            let [a, b] = t.ideal.basis();
            let el = |r: &num_rational::BigRational, s: &num_rational::BigRational| &a.scale(r) + &b.scale(s);
            let alpha = el(&h.a, &h.b);
            let beta = el(&h.c, &h.d);
            let Ok(ideal) = OrientedIdeal::new(alpha, beta) else { continue };
            let cand = CubicTriple { ideal, delta: t.delta };
            if cand.to_cubic().as_ref() == Ok(f) {
                return Ok(cand);
            }
        }
    }
    Err(Error::Degenerate(format!("no ideal basis found for cubic {f}")))
}

/// A representative of [f] + [g], built from I_f·I_g and δ_f·δ_g with a
/// positively oriented canonical basis.
pub fn cubic_class_compose(f: &BinaryCubic, g: &BinaryCubic) -> Result<BinaryCubic> {
    if f.disc() != g.disc() {
        return Err(Error::DiscriminantMismatch(f.disc(), g.disc()));
    }
    let (tf, tg) = (cubic_triple(f)?, cubic_triple(g)?);
    let prod = ideal_mul(&tf.ideal, &tg.ideal)?.canonical();
    let [b1, b2] = prod.basis().clone();
    let ideal = if prod.norm().is_negative() { OrientedIdeal::new(b1, -b2)? } else { prod };
    let h = CubicTriple { ideal, delta: &tf.delta * &tg.delta }.to_cubic()?;
    debug_assert_eq!(h.disc(), f.disc());
    Ok(h)
}

/// The outcome of testing [f] + [g] + [h] = [id].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicClassVerdict {
    /// [A_f] + [A_g] + [A_h] = [id] among cubes.
    pub cube_classes: bool,
    /// A cube root y of δ_f·δ_g·δ_h, when one exists in K.
    pub delta_root: Option<KElem>,
    /// I_f·I_g·I_h = yS for that root.
    pub ideal_matches: bool,
}

impl CubicClassVerdict {
    pub fn holds(&self) -> bool {
        self.cube_classes && self.delta_root.is_some() && self.ideal_matches
    }
}

/// Decides [f] + [g] + [h] = [id]: the product I_f·I_g·I_h must equal yS
/// for some y with y³ = δ_f·δ_g·δ_h. The cube-level condition is reported
/// alongside.
pub fn cubic_class_sum_is_identity(f: &BinaryCubic, g: &BinaryCubic, h: &BinaryCubic) -> Result<CubicClassVerdict> {
    for x in [g, h] {
        if x.disc() != f.disc() {
            return Err(Error::DiscriminantMismatch(f.disc(), x.disc()));
        }
    }
    let ts = [cubic_triple(f)?, cubic_triple(g)?, cubic_triple(h)?];
    let cube_classes = cube_class_sum_is_identity(&f.to_cube(), &g.to_cube(), &h.to_cube())?;
    let delta = &(&ts[0].delta * &ts[1].delta) * &ts[2].delta;
    let ideal = ideal_mul(&ideal_mul(&ts[0].ideal, &ts[1].ideal)?, &ts[2].ideal)?;
    let delta_root = kelem_cube_root(&delta);
    let ideal_matches = match &delta_root {
        Some(y) => ideal.same_module(&OrientedIdeal::principal(y)?),
        None => false,
    };
    Ok(CubicClassVerdict { cube_classes, delta_root, ideal_matches })
}
