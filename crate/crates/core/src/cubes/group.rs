use num_traits::Signed;

use super::composition::verify_cube_composition;
use super::cube::Cube;
use super::triple::{cube_to_triple, triple_to_cube, BalancedTriple};
use crate::bqf::{compose_dirichlet, principal_form, reduce};
use crate::error::{Error, Result};
use crate::quadratic::{ideal_mul, principal_generator, OrientedIdeal};
use crate::verify::Verification;

/// Cubes R, S, T dual to a triple (A, B, C).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualWitness {
    pub r: Cube,
    pub s: Cube,
    pub t: Cube,
}

impl DualWitness {
    /// Checks Q_i(T_j) = Q_j(A_i) for i, j = 1, 2, 3, where
    /// (T_1, T_2, T_3) = (R, S, T) and (A_1, A_2, A_3) = (A, B, C).
    pub fn duality(&self, a: &Cube, b: &Cube, c: &Cube) -> Verification {
        let mut v = Verification::new("duality");
        let duals = [&self.r, &self.s, &self.t];
        let inputs = [a, b, c];
        for (j, tj) in duals.iter().enumerate() {
            for (i, ai) in inputs.iter().enumerate() {
                v.check_eq(&format!("Q{}(T{}) = Q{}(A{})", i + 1, j + 1, j + 1, i + 1), &tj.form(i), &ai.form(j));
            }
        }
        v
    }
}

fn common_disc(cubes: &[&Cube]) -> Result<num_bigint::BigInt> {
    let d = cubes[0].disc();
    for c in &cubes[1..] {
        if c.disc() != d {
            return Err(Error::DiscriminantMismatch(d, c.disc()));
        }
    }
    Ok(d)
}

fn require_projective(cubes: &[&Cube]) -> Result<()> {
    for c in cubes {
        if !c.is_projective() {
            return Err(Error::NotPrimitive(format!("cube {c}")));
        }
    }
    Ok(())
}

/// Whether two projective cubes of the same discriminant lie in the same
/// class, decided through the classes of their associated forms.
pub fn cube_class_equal(a: &Cube, b: &Cube) -> Result<bool> {
    common_disc(&[a, b])?;
    require_projective(&[a, b])?;
    let (qa, qb) = (a.assoc_forms(), b.assoc_forms());
    for i in 0..3 {
        if reduce(&qa[i])?.form != reduce(&qb[i])?.form {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether [A] + [B] + [C] = [id], read off the three rows of associated
/// forms.
pub fn cube_class_sum_is_identity(a: &Cube, b: &Cube, c: &Cube) -> Result<bool> {
    let d = common_disc(&[a, b, c])?;
    require_projective(&[a, b, c])?;
    let principal = reduce(&principal_form(&d)?)?.form;
    let (qa, qb, qc) = (a.assoc_forms(), b.assoc_forms(), c.assoc_forms());
    for i in 0..3 {
        let sum = compose_dirichlet(&compose_dirichlet(&qa[i], &qb[i])?, &qc[i])?;
        if sum != principal {
            return Ok(false);
        }
    }
    Ok(true)
}

fn negative_only(d: &num_bigint::BigInt, what: &str) -> Result<()> {
    if !d.is_negative() {
        return Err(Error::Unsupported(format!("{what} is only implemented for negative discriminants (got {d})")));
    }
    Ok(())
}

/// A cube in the class [A] + [B], built from the componentwise products of
/// the balanced triples.
pub fn cube_class_compose(a: &Cube, b: &Cube) -> Result<Cube> {
    let d = common_disc(&[a, b])?;
    negative_only(&d, "cube composition")?;
    require_projective(&[a, b])?;
    let (ta, tb) = (cube_to_triple(a)?, cube_to_triple(b)?);
    let ideals = [
        ideal_mul(&ta.ideals[0], &tb.ideals[0])?,
        ideal_mul(&ta.ideals[1], &tb.ideals[1])?,
        ideal_mul(&ta.ideals[2], &tb.ideals[2])?,
    ];
    triple_to_cube(&BalancedTriple::new(ideals)?)
}

/// Solves for cubes R, S, T satisfying the composition identity for
/// (A, B, C) with [A] + [B] + [C] = [id].
pub fn dual_cubes_solve(a: &Cube, b: &Cube, c: &Cube) -> Result<DualWitness> {
    let d = common_disc(&[a, b, c])?;
    negative_only(&d, "dual cube solving")?;
    require_projective(&[a, b, c])?;
    if !cube_class_sum_is_identity(a, b, c)? {
        return Err(Error::NotComposable("[A] + [B] + [C] is not the identity class".into()));
    }
    let triples = [cube_to_triple(a)?, cube_to_triple(b)?, cube_to_triple(c)?];
    let column = |m: usize| -> [OrientedIdeal; 3] {
        [triples[0].ideals[m].clone(), triples[1].ideals[m].clone(), triples[2].ideals[m].clone()]
    };
    let mut kappas = Vec::new();
    for m in 0..2 {
        let [i, j, k] = column(m);
        let prod = ideal_mul(&ideal_mul(&i, &j)?, &k)?;
        let kappa = principal_generator(&prod)?
            .ok_or_else(|| Error::NotComposable(format!("I{0}J{0}K{0} is not principal", m + 1)))?;
        kappas.push(kappa);
    }
    let k3 = (&kappas[0] * &kappas[1]).inverse()?;
    kappas.push(k3);
    let mut duals = Vec::new();
    for (m, kappa) in kappas.iter().enumerate() {
        let [i, j, k] = column(m);
        let scaled = k.scale(&kappa.inverse()?)?;
        let triple = BalancedTriple::new([i, j, scaled])
            .map_err(|e| Error::NotComposable(format!("rescaled triple {} is not balanced: {e}", m + 1)))?;
        duals.push(triple_to_cube(&triple)?);
    }
    let t = duals.pop().unwrap();
    let s = duals.pop().unwrap();
    let r = duals.pop().unwrap();
    let witness = DualWitness { r, s, t };
    let check = verify_cube_composition(a, b, c, &witness.r, &witness.s, &witness.t);
    if !check.holds() {
        return Err(Error::NotComposable(format!("constructed duals fail verification:\n{check}")));
    }
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubes::identity_cube;

    fn abc() -> [Cube; 3] {
        [
            Cube::from_i64([0, -1, -2, -1, -1, 0, 0, 6]),
            Cube::from_i64([0, 1, 2, 0, 1, 0, -1, -6]),
            Cube::from_i64([0, 1, 4, -1, 1, 0, 0, -3]),
        ]
    }

    #[test]
    fn golden_duals() {
        let [a, b, c] = abc();
        let w = dual_cubes_solve(&a, &b, &c).unwrap();
        assert!(w.duality(&a, &b, &c).holds(), "{}", w.duality(&a, &b, &c));
    }

    #[test]
    fn identity_duals_are_principal() {
        let id = identity_cube(&(-47).into()).unwrap();
        let w = dual_cubes_solve(&id, &id, &id).unwrap();
        let p = crate::bqf::Bqf::new(1, 1, 12);
        for cube in [&w.r, &w.s, &w.t] {
            for q in cube.assoc_forms() {
                assert_eq!(reduce(&q).unwrap().form, p);
            }
        }
    }

    #[test]
    fn class_arithmetic() {
        let [a, b, c] = abc();
        assert!(cube_class_sum_is_identity(&a, &b, &c).unwrap());
        let ab = cube_class_compose(&a, &b).unwrap();
        assert!(cube_class_equal(&ab, &c.tilde()).unwrap());
        let id = identity_cube(&(-47).into()).unwrap();
        assert!(cube_class_equal(&cube_class_compose(&id, &a).unwrap(), &a).unwrap());
        assert!(cube_class_equal(&cube_class_compose(&a.tilde(), &a).unwrap(), &id).unwrap());
        assert!(!cube_class_sum_is_identity(&a, &a, &a).unwrap());
        assert!(matches!(dual_cubes_solve(&a, &a, &a), Err(Error::NotComposable(_))));
    }

    #[test]
    fn positive_discriminant_unsupported() {
        let id = identity_cube(&8.into()).unwrap();
        assert!(matches!(cube_class_compose(&id, &id), Err(Error::Unsupported(_))));
        assert!(matches!(dual_cubes_solve(&id, &id, &id), Err(Error::Unsupported(_))));
    }
}
