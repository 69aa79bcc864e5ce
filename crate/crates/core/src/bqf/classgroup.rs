use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::compose::compose_dirichlet;
use super::form::{check_nonsquare, principal_form, Bqf};
use super::reduce::reduce;
use crate::error::{Error, Result};
use crate::exact::{epsilon_of, isqrt};

/// The classes of primitive forms of a discriminant with their
/// composition table. The principal class is always index 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassGroupTable {
    pub discriminant: BigInt,
    pub representatives: Vec<Bqf>,
    /// `table[i][j]` is the index of the class of `representatives[i] ∘ representatives[j]`.
    pub table: Vec<Vec<usize>>,
    index: HashMap<Bqf, usize>,
}

pub fn enumerate_class_group(d: &BigInt) -> Result<ClassGroupTable> {
    if epsilon_of(d).is_none() {
        return Err(Error::BadDiscriminant(d.clone()));
    }
    check_nonsquare(d)?;
    let mut reps = if d.is_negative() { definite_reps(d) } else { indefinite_reps(d)? };
    let principal = reduce(&principal_form(d)?)?.form;
    reps.sort_by_key(|q| (q.a.is_negative(), q.a.abs(), q.b.abs(), q.b.is_negative(), q.c.clone()));
    let pos = reps.iter().position(|q| *q == principal).expect("principal class present");
    let p = reps.remove(pos);
    reps.insert(0, p);
    let index: HashMap<Bqf, usize> = reps.iter().cloned().enumerate().map(|(i, q)| (q, i)).collect();
    let mut table = vec![vec![0; reps.len()]; reps.len()];
    for (i, qi) in reps.iter().enumerate() {
        for (j, qj) in reps.iter().enumerate() {
            let c = compose_dirichlet(qi, qj)?;
            table[i][j] = *index
                .get(&c)
                .ok_or_else(|| Error::Degenerate(format!("composite {c} is not a listed representative")))?;
        }
    }
    Ok(ClassGroupTable { discriminant: d.clone(), representatives: reps, table, index })
}

fn definite_reps(d: &BigInt) -> Vec<Bqf> {
    let mut out = Vec::new();
    let bound = isqrt(&(-d / BigInt::from(3)));
    let mut a = BigInt::from(1);
    while a <= bound {
        let mut b: BigInt = 1 - &a;
        while b <= a {
            let num: BigInt = &b * &b - d;
            let den = BigInt::from(4) * &a;
            if num.is_multiple_of(&den) {
                let c = num / den;
                let q = Bqf { a: a.clone(), b: b.clone(), c: c.clone() };
                let tie_ok = !(b.is_negative() && a == c);
                if c >= a && tie_ok && q.is_primitive() {
                    out.push(q.neg());
                    out.push(q);
                }
            }
            b += 1;
        }
        a += 1;
    }
    out
}

fn indefinite_reps(d: &BigInt) -> Result<Vec<Bqf>> {
    let s = isqrt(d);
    let mut canon: Vec<Bqf> = Vec::new();
    let mut b = BigInt::from(1);
    while b <= s {
        if (&b - d).is_even() {
            let ac: BigInt = (&b * &b - d) / BigInt::from(4);
            let n = ac.abs();
            let mut a = BigInt::from(1);
            while &a * &a <= n {
                if n.is_multiple_of(&a) {
                    for a0 in [a.clone(), &n / &a] {
                        for sa in [a0.clone(), -a0.clone()] {
                            let c = &ac / &sa;
                            let q = Bqf { a: sa, b: b.clone(), c };
                            if q.is_primitive() && super::reduce::is_reduced(&q) {
                                let r = reduce(&q)?.form;
                                if !canon.contains(&r) {
                                    canon.push(r);
                                }
                            }
                        }
                    }
                }
                a += 1;
            }
        }
        b += 1;
    }
    Ok(canon)
}

impl ClassGroupTable {
    pub fn order(&self) -> usize {
        self.representatives.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn positive_definite_count(&self) -> usize {
        self.representatives.iter().filter(|q| q.a.is_positive()).count()
    }

    pub fn index_of(&self, q: &Bqf) -> Result<usize> {
        let r = reduce(q)?.form;
        self.index.get(&r).copied().ok_or_else(|| Error::Invalid(format!("{q} is not a primitive form of discriminant {}", self.discriminant)))
    }

    pub fn inverse(&self, i: usize) -> Option<usize> {
        (0..self.order()).find(|&j| self.table[i][j] == 0)
    }

    pub fn compose(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    /// Exhaustive check of closure, identity, inverses, associativity and
    /// commutativity.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        let n = self.order();
        for i in 0..n {
            if self.table[0][i] != i || self.table[i][0] != i {
                return Err(format!("class {} is not fixed by the identity", self.representatives[i]));
            }
            let inv = self.inverse(i).ok_or_else(|| format!("class {} has no inverse", self.representatives[i]))?;
            if self.table[inv][i] != 0 {
                return Err(format!("left and right inverses of {} differ", self.representatives[i]));
            }
            for j in 0..n {
                if self.table[i][j] != self.table[j][i] {
                    return Err(format!("composition is not commutative at ({i}, {j})"));
                }
                for k in 0..n {
                    if self.table[self.table[i][j]][k] != self.table[i][self.table[j][k]] {
                        return Err(format!("associativity fails at ({i}, {j}, {k})"));
                    }
                }
            }
        }
        Ok(())
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn class_numbers() {
        let t = enumerate_class_group(&int(-47)).unwrap();
        assert_eq!(t.positive_definite_count(), 5);
        assert_eq!(t.order(), 10);
        assert_eq!(t.representatives[0], Bqf::new(1, 1, 12));
        t.check_axioms().unwrap();
        assert_eq!(enumerate_class_group(&int(-23)).unwrap().positive_definite_count(), 3);
        assert_eq!(enumerate_class_group(&int(-4)).unwrap().positive_definite_count(), 1);
        assert_eq!(enumerate_class_group(&int(8)).unwrap().order(), 1);
    }

    #[test]
    fn real_quadratic_groups() {
        // D = 12: x² − 3y² and −x² + 3y² are inequivalent (no unit of norm −1)
        let t = enumerate_class_group(&int(12)).unwrap();
        assert_eq!(t.order(), 2);
        t.check_axioms().unwrap();
        let t = enumerate_class_group(&int(5)).unwrap();
        assert_eq!(t.order(), 1);
        let t = enumerate_class_group(&int(229)).unwrap();
        t.check_axioms().unwrap();
        assert_eq!(t.order(), 3);
    }

    #[test]
    fn bad_discriminants() {
        assert!(enumerate_class_group(&int(7)).is_err());
        assert!(enumerate_class_group(&int(9)).is_err());
    }
}
