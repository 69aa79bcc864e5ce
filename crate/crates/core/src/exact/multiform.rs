use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// A dense integer multilinear form. Coefficients are stored row-major with
/// the last factor varying fastest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiForm {
    dims: Vec<usize>,
    coeffs: Vec<BigInt>,
}

/// The first basis tuple on which two forms disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub index: Vec<usize>,
    pub left: BigInt,
    pub right: BigInt,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.index.iter().map(|i| format!("e{}", i + 1)).collect();
        write!(f, "at ({}): {} != {}", idx.join(","), self.left, self.right)
    }
}

impl MultiForm {
    pub fn zero(dims: &[usize]) -> Self {
        let n = dims.iter().product();
        MultiForm { dims: dims.to_vec(), coeffs: vec![BigInt::zero(); n] }
    }

    /// The form with no factors whose single value is `c`.
    pub fn constant(c: BigInt) -> Self {
        MultiForm { dims: Vec::new(), coeffs: vec![c] }
    }

    pub fn from_coeffs(dims: &[usize], coeffs: Vec<BigInt>) -> Result<Self> {
        if dims.contains(&0) {
            return Err(Error::DimensionMismatch("factor dimensions must be positive".into()));
        }
        let n: usize = dims.iter().product();
        if coeffs.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "expected {n} coefficients for dims {dims:?}, got {}",
                coeffs.len()
            )));
        }
        Ok(MultiForm { dims: dims.to_vec(), coeffs })
    }

    /// Builds a form whose coefficient at each basis tuple is `f(tuple)`.
    pub fn from_fn(dims: &[usize], mut f: impl FnMut(&[usize]) -> BigInt) -> Self {
        let coeffs = TupleIter::new(dims).map(|idx| f(&idx)).collect();
        MultiForm { dims: dims.to_vec(), coeffs }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    fn offset(&self, idx: &[usize]) -> usize {
        idx.iter().zip(&self.dims).fold(0, |acc, (&i, &d)| acc * d + i)
    }

    pub fn get(&self, idx: &[usize]) -> &BigInt {
        assert_eq!(idx.len(), self.dims.len(), "wrong number of indices");
        &self.coeffs[self.offset(idx)]
    }

    /// Every basis tuple, in storage order.
    pub fn tuples(&self) -> impl Iterator<Item = Vec<usize>> {
        TupleIter::new(&self.dims)
    }

    pub fn eval(&self, vectors: &[Vec<BigInt>]) -> Result<BigInt> {
        if vectors.len() != self.dims.len() {
            return Err(Error::DimensionMismatch(format!(
                "form has {} factors, got {} vectors",
                self.dims.len(),
                vectors.len()
            )));
        }
        for (k, (v, &d)) in vectors.iter().zip(&self.dims).enumerate() {
            if v.len() != d {
                return Err(Error::DimensionMismatch(format!(
                    "factor {k} has dimension {d}, vector has length {}",
                    v.len()
                )));
            }
        }
        let mut total = BigInt::zero();
        for (idx, c) in TupleIter::new(&self.dims).zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            let mut term = c.clone();
            for (v, &i) in vectors.iter().zip(&idx) {
                if v[i].is_zero() {
                    term = BigInt::zero();
                    break;
                }
                term *= &v[i];
            }
            total += term;
        }
        Ok(total)
    }

    /// Returns g with g(.., v, ..) = f(.., m·v, ..), where `m` has
    /// `dims[factor]` rows and any positive number of columns.
    pub fn substitute(&self, factor: usize, m: &[Vec<BigInt>]) -> Result<MultiForm> {
        if factor >= self.dims.len() {
            return Err(Error::DimensionMismatch(format!("no factor {factor}")));
        }
        if m.len() != self.dims[factor] {
            return Err(Error::DimensionMismatch(format!(
                "matrix has {} rows, factor {factor} has dimension {}",
                m.len(),
                self.dims[factor]
            )));
        }
        let cols = m[0].len();
        if cols == 0 || m.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged substitution matrix".into()));
        }
        let mut dims = self.dims.clone();
        dims[factor] = cols;
        let mut src = vec![0usize; self.dims.len()];
        Ok(MultiForm::from_fn(&dims, |idx| {
            src.copy_from_slice(idx);
            let mut acc = BigInt::zero();
            for (l, row) in m.iter().enumerate() {
                if row[idx[factor]].is_zero() {
                    continue;
                }
                src[factor] = l;
                acc += self.get(&src) * &row[idx[factor]];
            }
            acc
        }))
    }

    /// The product over disjoint variable groups; dims concatenate.
    pub fn mul(&self, other: &MultiForm) -> MultiForm {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        let mut coeffs = Vec::with_capacity(self.coeffs.len() * other.coeffs.len());
        for a in &self.coeffs {
            for b in &other.coeffs {
                coeffs.push(if a.is_zero() || b.is_zero() { BigInt::zero() } else { a * b });
            }
        }
        MultiForm { dims, coeffs }
    }

    pub fn add(&self, other: &MultiForm) -> Result<MultiForm> {
        self.same_shape(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(MultiForm { dims: self.dims.clone(), coeffs })
    }

    pub fn scale(&self, k: &BigInt) -> MultiForm {
        MultiForm { dims: self.dims.clone(), coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The first basis tuple where the coefficients differ, if any.
    pub fn first_mismatch(&self, other: &MultiForm) -> Result<Option<Mismatch>> {
        self.same_shape(other)?;
        Ok(TupleIter::new(&self.dims).zip(self.coeffs.iter().zip(&other.coeffs)).find_map(
            |(index, (l, r))| (l != r).then(|| Mismatch { index, left: l.clone(), right: r.clone() }),
        ))
    }

    fn same_shape(&self, other: &MultiForm) -> Result<()> {
        if self.dims != other.dims {
            return Err(Error::DimensionMismatch(format!("{:?} vs {:?}", self.dims, other.dims)));
        }
        Ok(())
    }
}

pub fn multiform_eval(f: &MultiForm, vectors: &[Vec<BigInt>]) -> Result<BigInt> {
    f.eval(vectors)
}

pub fn multiform_substitute(f: &MultiForm, factor: usize, m: &[Vec<BigInt>]) -> Result<MultiForm> {
    f.substitute(factor, m)
}

pub fn multiform_mul(f: &MultiForm, g: &MultiForm) -> MultiForm {
    f.mul(g)
}

struct TupleIter {
    dims: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl TupleIter {
    fn new(dims: &[usize]) -> Self {
        let next = if dims.contains(&0) { None } else { Some(vec![0; dims.len()]) };
        TupleIter { dims: dims.to_vec(), next }
    }
}

impl Iterator for TupleIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        for k in (0..succ.len()).rev() {
            succ[k] += 1;
            if succ[k] < self.dims[k] {
                self.next = Some(succ);
                return Some(cur);
            }
            succ[k] = 0;
        }
        Some(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn cube_form(c: &[i64]) -> MultiForm {
        MultiForm::from_coeffs(&[2, 2, 2], v(c)).unwrap()
    }

    #[test]
    fn identity_cube_values() {
        let a = cube_form(&[0, 1, 1, 1, 1, 1, 1, 2]);
        assert_eq!(a.eval(&[v(&[1, 0]), v(&[1, 0]), v(&[1, 0])]).unwrap(), int(0));
        assert_eq!(a.eval(&[v(&[0, 1]), v(&[0, 1]), v(&[0, 1])]).unwrap(), int(2));
        let two = a.eval(&[v(&[2, 0]), v(&[0, 1]), v(&[1, 1])]).unwrap();
        let one = a.eval(&[v(&[1, 0]), v(&[0, 1]), v(&[1, 1])]).unwrap();
        assert_eq!(two, one * 2);
    }

    #[test]
    fn eval_rejects_bad_lengths() {
        let a = cube_form(&[1; 8]);
        assert!(a.eval(&[v(&[1, 0]), v(&[1])]).is_err());
        assert!(a.eval(&[v(&[1, 0]), v(&[1]), v(&[0, 1])]).is_err());
    }

    #[test]
    fn swap_substitution_swaps_faces() {
        let a = cube_form(&[1, 2, 3, 4, 5, 6, 7, 8]);
        let swapped = a.substitute(0, &[v(&[0, 1]), v(&[1, 0])]).unwrap();
        assert_eq!(swapped, cube_form(&[5, 6, 7, 8, 1, 2, 3, 4]));
        let id = a.substitute(2, &[v(&[1, 0]), v(&[0, 1])]).unwrap();
        assert_eq!(id, a);
    }

    #[test]
    fn product_layout() {
        let f = MultiForm::from_coeffs(&[2], v(&[1, 0])).unwrap();
        let g = MultiForm::from_coeffs(&[2], v(&[1, 1])).unwrap();
        let p = f.mul(&g);
        assert_eq!(p.dims(), &[2, 2]);
        assert_eq!(p.coeffs(), &v(&[1, 1, 0, 0])[..]);
        assert_eq!(f.mul(&MultiForm::constant(int(1))), f);
    }

    #[test]
    fn rectangular_substitution() {
        let f = MultiForm::from_coeffs(&[2], v(&[3, 5])).unwrap();
        // embed a 3-dim space: v ↦ (v0 + v2, v1)
        let g = f.substitute(0, &[v(&[1, 0, 1]), v(&[0, 1, 0])]).unwrap();
        assert_eq!(g.coeffs(), &v(&[3, 5, 3])[..]);
    }

    #[test]
    fn mismatch_reports_first_tuple() {
        let a = cube_form(&[1, 2, 3, 4, 5, 6, 7, 8]);
        let b = cube_form(&[1, 2, 3, 4, 5, 0, 7, 8]);
        let m = a.first_mismatch(&b).unwrap().unwrap();
        assert_eq!(m.index, vec![1, 0, 1]);
        assert_eq!(m.to_string(), "at (e2,e1,e2): 6 != 0");
        assert!(a.first_mismatch(&a).unwrap().is_none());
    }
}
