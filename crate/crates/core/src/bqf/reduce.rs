use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::form::{check_nonsquare, Bqf};
use crate::error::Result;
use crate::exact::{isqrt, IMat2};

/// A canonical class representative together with g ∈ SL2(Z) such that
/// `sl2_act(original, transform) == form`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub form: Bqf,
    pub transform: IMat2,
}

type M = [[BigInt; 2]; 2];

fn ident() -> M {
    [[1.into(), 0.into()], [0.into(), 1.into()]]
}

fn mmul(x: &M, y: &M) -> M {
    let e = |i: usize, j: usize| &x[i][0] * &y[0][j] + &x[i][1] * &y[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn translate(k: BigInt) -> M {
    [[1.into(), k], [0.into(), 1.into()]]
}

fn swap() -> M {
    [[0.into(), (-1).into()], [1.into(), 0.into()]]
}

struct Walker {
    q: Bqf,
    g: M,
}

impl Walker {
    fn step(&mut self, m: M) {
        self.q = self.q.substitute(&m);
        self.g = mmul(&self.g, &m);
    }

    fn finish(self) -> Reduction {
        let [[a, b], [c, d]] = &self.g;
        Reduction { form: self.q, transform: IMat2::from_ints(a, b, c, d) }
    }
}

/// Reduces a definite or indefinite form of non-square discriminant.
///
/// Definite forms go to the unique reduced form |b| ≤ a ≤ c (b ≥ 0 on ties),
/// negative definite forms to the negation of the reduced positive form.
/// Indefinite forms go to the least form on their cycle of reduced forms,
/// ordered by (a < 0, |a|, |b|, b < 0, c).
pub fn reduce(q: &Bqf) -> Result<Reduction> {
    let d = q.disc();
    check_nonsquare(&d)?;
    if d.is_negative() {
        if q.a.is_negative() {
            let r = reduce_positive(&q.neg());
            return Ok(Reduction { form: r.form.neg(), transform: r.transform });
        }
        return Ok(reduce_positive(q));
    }
    let (cycle, mats) = cycle_with_transforms(q);
    let best = (0..cycle.len()).min_by_key(|&i| canon_key(&cycle[i])).expect("nonempty cycle");
    let [[a, b], [c, e]] = &mats[best];
    Ok(Reduction { form: cycle[best].clone(), transform: IMat2::from_ints(a, b, c, e) })
}

fn canon_key(q: &Bqf) -> (bool, BigInt, BigInt, bool, BigInt) {
    (q.a.is_negative(), q.a.abs(), q.b.abs(), q.b.is_negative(), q.c.clone())
}

fn reduce_positive(q: &Bqf) -> Reduction {
    let mut w = Walker { q: q.clone(), g: ident() };
    loop {
        let (a, b) = (&w.q.a, &w.q.b);
        if !(-a < *b && b <= a) {
            let k = (a - b).div_floor(&(BigInt::from(2) * a));
            w.step(translate(k));
        }
        if w.q.a > w.q.c {
            w.step(swap());
        } else {
            break;
        }
    }
    if w.q.a == w.q.c && w.q.b.is_negative() {
        w.step(swap());
    }
    w.finish()
}

/// Whether the form is reduced: |b| ≤ a ≤ c with the tie convention for
/// definite forms, |√D − 2|a|| < b < √D for indefinite ones.
pub fn is_reduced(q: &Bqf) -> bool {
    let d = q.disc();
    if d.is_negative() {
        let (a, b, c) = if q.a.is_negative() { (-q.a.clone(), -q.b.clone(), -q.c.clone()) } else { (q.a.clone(), q.b.clone(), q.c.clone()) };
        return b.abs() <= a && a <= c && (b.is_positive() || b.is_zero() || (b.abs() < a && a < c));
    }
    indefinite_reduced(&q.a, &q.b, &d)
}

// x < √D for an integer x and non-square D > 0
fn below_root(x: &BigInt, d: &BigInt) -> bool {
    x.is_negative() || x * x < *d
}

fn above_root(x: &BigInt, d: &BigInt) -> bool {
    x.is_positive() && x * x > *d
}

fn indefinite_reduced(a: &BigInt, b: &BigInt, d: &BigInt) -> bool {
    let two_a = BigInt::from(2) * a.abs();
    // |√D − 2|a|| < b < √D  ⇔  2|a| − b < √D < 2|a| + b and b < √D
    below_root(b, d) && below_root(&(&two_a - b), d) && above_root(&(&two_a + b), d)
}

// the representative of b mod 2|a| used by the ρ operator
fn normalize_b(b: &BigInt, a: &BigInt, d: &BigInt) -> BigInt {
    let m = BigInt::from(2) * a.abs();
    if a * a > *d {
        // (−|a|, |a|]
        let aa = a.abs();
        let r = (b + &aa).mod_floor(&m);
        if r.is_zero() {
            aa
        } else {
            r - aa
        }
    } else {
        let s = isqrt(d);
        &s - (&s - b).mod_floor(&m)
    }
}

fn rho(w: &mut Walker, d: &BigInt) {
    w.step(swap());
    let nb = normalize_b(&w.q.b, &w.q.a, d);
    let k = (&nb - &w.q.b) / (BigInt::from(2) * &w.q.a);
    w.step(translate(k));
}

fn cycle_with_transforms(q: &Bqf) -> (Vec<Bqf>, Vec<M>) {
    let d = q.disc();
    let mut w = Walker { q: q.clone(), g: ident() };
    let nb = normalize_b(&w.q.b, &w.q.a, &d);
    let k = (&nb - &w.q.b) / (BigInt::from(2) * &w.q.a);
    w.step(translate(k));
    while !indefinite_reduced(&w.q.a, &w.q.b, &d) {
        rho(&mut w, &d);
    }
    let start = w.q.clone();
    let mut forms = Vec::new();
    let mut mats = Vec::new();
    loop {
        forms.push(w.q.clone());
        mats.push(w.g.clone());
        rho(&mut w, &d);
        if w.q == start {
            break;
        }
    }
    (forms, mats)
}

/// The cycle of reduced forms equivalent to an indefinite form, starting
/// from the first reduced form reached.
pub fn reduced_cycle(q: &Bqf) -> Result<Vec<Bqf>> {
    let d = q.disc();
    check_nonsquare(&d)?;
    if d.is_negative() {
        return Ok(vec![reduce(q)?.form]);
    }
    Ok(cycle_with_transforms(q).0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bqf::sl2_act;

    fn check(q: Bqf) -> Bqf {
        let r = reduce(&q).unwrap();
        assert_eq!(sl2_act(&q, &r.transform).unwrap(), r.form);
        assert!(is_reduced(&r.form), "{} not reduced", r.form);
        r.form
    }

    #[test]
    fn definite_examples() {
        assert_eq!(check(Bqf::new(4, 1, 3)), Bqf::new(3, -1, 4));
        assert_eq!(check(Bqf::new(1, 1, 12)), Bqf::new(1, 1, 12));
        assert_eq!(check(Bqf::new(2, -1, 6)), Bqf::new(2, -1, 6));
        assert_eq!(check(Bqf::new(-4, -1, -3)), Bqf::new(-3, 1, -4));
        assert_eq!(check(Bqf::new(2, -2, 3)), Bqf::new(2, 2, 3));
        assert_eq!(check(Bqf::new(3, -2, 3)), Bqf::new(3, 2, 3));
        let far = Bqf::new(1, 1, 12).substitute(&[[17.into(), 5.into()], [10.into(), 3.into()]]);
        assert_eq!(check(far), Bqf::new(1, 1, 12));
    }

    #[test]
    fn indefinite_examples() {
        let a = check(Bqf::new(1, 0, -2));
        let b = check(Bqf::new(-1, 0, 2));
        assert_eq!(a, b);
        assert_eq!(check(Bqf::new(7, 20, 14)), a);
        let c13 = check(Bqf::new(1, 1, -3));
        assert_eq!(check(Bqf::new(-3, 1, 1)), c13);
    }

    #[test]
    fn square_discriminant_rejected() {
        assert!(reduce(&Bqf::new(1, 0, -1)).is_err());
        assert!(reduce(&Bqf::new(0, 0, 0)).is_err());
    }
}
