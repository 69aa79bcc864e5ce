//! The JSON envelope `{"space", "discriminant", "objects"}` used by the
//! command-line tool and the bundled fixtures. Integers travel as decimal
//! strings; plain JSON integers are also accepted on input.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::alt::{AltMatrix, QuatAltPair, SenaryAlt3};
use crate::bqf::{Bqf, GaussBilinearData};
use crate::cubes::Cube;
use crate::error::{Error, Result};
use crate::sym::{BinaryCubic, PairBqf};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Space {
    Bqf,
    Gauss,
    Cube,
    Cubic,
    Pair,
    Quaternary,
    AltPair,
    Senary,
}

impl Space {
    pub fn name(self) -> &'static str {
        match self {
            Space::Bqf => "bqf",
            Space::Gauss => "gauss",
            Space::Cube => "cube",
            Space::Cubic => "cubic",
            Space::Pair => "pair",
            Space::Quaternary => "quaternary",
            Space::AltPair => "altpair",
            Space::Senary => "senary",
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Space {
    type Err = Error;
    fn from_str(s: &str) -> Result<Space> {
        serde_json::from_value(Value::String(s.to_ascii_lowercase()))
            .map_err(|_| Error::Parse(format!("unknown space {s:?}")))
    }
}

/// One typed object of the envelope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WireObject {
    Bqf(Bqf),
    Matrix([[BigInt; 2]; 2]),
    Cube(Cube),
    Cubic(BinaryCubic),
    Pair(PairBqf),
    AltPair(QuatAltPair),
    Senary(SenaryAlt3),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope {
    pub space: Space,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub discriminant: Option<String>,
    #[serde(default)]
    pub objects: Vec<Value>,
}

fn int_value(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

pub fn parse_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::String(s) => s.trim().parse().map_err(|_| Error::Parse(format!("{s:?} is not an integer"))),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string().parse().expect("integral JSON number")),
        other => Err(Error::Parse(format!("expected an integer, found {other}"))),
    }
}

fn parse_ints<const N: usize>(v: &Value) -> Result<[BigInt; N]> {
    let arr = v.as_array().ok_or_else(|| Error::Parse(format!("expected an array of {N} integers, found {v}")))?;
    if arr.len() != N {
        return Err(Error::Parse(format!("expected {N} integers, found {}", arr.len())));
    }
    let vals: Vec<BigInt> = arr.iter().map(parse_int).collect::<Result<_>>()?;
    Ok(vals.try_into().expect("length checked"))
}

fn parse_rows<const R: usize, const C: usize>(v: &Value) -> Result<[[BigInt; C]; R]> {
    let arr = v.as_array().ok_or_else(|| Error::Parse(format!("expected a {R}×{C} matrix, found {v}")))?;
    if arr.len() != R {
        return Err(Error::Parse(format!("expected {R} rows, found {}", arr.len())));
    }
    let rows: Vec<[BigInt; C]> = arr.iter().map(parse_ints::<C>).collect::<Result<_>>()?;
    Ok(rows.try_into().expect("length checked"))
}

fn ints_value(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(int_value).collect())
}

impl WireObject {
    pub fn to_value(&self) -> Value {
        match self {
            WireObject::Bqf(q) => ints_value(&q.coeffs()),
            WireObject::Matrix(m) => Value::Array(m.iter().map(|r| ints_value(r)).collect()),
            WireObject::Cube(c) => ints_value(c.coeffs()),
            WireObject::Cubic(f) => ints_value(f.coeffs()),
            WireObject::Pair(p) => Value::Array(p.forms().iter().map(|q| ints_value(&q.coeffs())).collect()),
            WireObject::AltPair(p) => Value::Array(
                p.matrices().iter().map(|m| Value::Array(m.iter().map(|r| ints_value(r)).collect())).collect(),
            ),
            WireObject::Senary(e) => ints_value(e.coeffs()),
        }
    }
}

pub fn parse_bqf(v: &Value) -> Result<Bqf> {
    let [a, b, c] = parse_ints::<3>(v)?;
    Ok(Bqf { a, b, c })
}

pub fn parse_cube(v: &Value) -> Result<Cube> {
    Ok(Cube(parse_ints::<8>(v)?))
}

pub fn parse_cubic(v: &Value) -> Result<BinaryCubic> {
    Ok(BinaryCubic(parse_ints::<4>(v)?))
}

pub fn parse_matrix(v: &Value) -> Result<[[BigInt; 2]; 2]> {
    parse_rows::<2, 2>(v)
}

pub fn parse_pair(v: &Value) -> Result<PairBqf> {
    let [f1, f2] = parse_rows::<2, 3>(v)?;
    let mk = |[a, b, c]: [BigInt; 3]| Bqf { a, b, c };
    PairBqf::new(mk(f1), mk(f2)).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse_alt_pair(v: &Value) -> Result<QuatAltPair> {
    let arr = v.as_array().filter(|a| a.len() == 2).ok_or_else(|| Error::Parse(format!("expected two 4×4 matrices, found {v}")))?;
    let m1: AltMatrix = parse_rows::<4, 4>(&arr[0])?;
    let m2: AltMatrix = parse_rows::<4, 4>(&arr[1])?;
    QuatAltPair::new(m1, m2).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse_senary(v: &Value) -> Result<SenaryAlt3> {
    Ok(SenaryAlt3::new(parse_ints::<20>(v)?))
}

impl Envelope {
    pub fn new(space: Space, discriminant: Option<&BigInt>, objects: &[WireObject]) -> Self {
        Envelope {
            space,
            discriminant: discriminant.map(ToString::to_string),
            objects: objects.iter().map(WireObject::to_value).collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Envelope> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("envelope serialises")
    }

    pub fn discriminant(&self) -> Result<Option<BigInt>> {
        self.discriminant.as_ref().map(|s| parse_int(&Value::String(s.clone()))).transpose()
    }

    /// Decodes every object according to the envelope's space. Gauss
    /// payloads hold three forms followed by the two coefficient matrices.
    pub fn decode(&self) -> Result<Vec<WireObject>> {
        self.objects
            .iter()
            .enumerate()
            .map(|(n, v)| {
                Ok(match self.space {
                    Space::Bqf => WireObject::Bqf(parse_bqf(v)?),
                    Space::Gauss if n < 3 => WireObject::Bqf(parse_bqf(v)?),
                    Space::Gauss => WireObject::Matrix(parse_matrix(v)?),
                    Space::Cube | Space::Quaternary => WireObject::Cube(parse_cube(v)?),
                    Space::Cubic => WireObject::Cubic(parse_cubic(v)?),
                    Space::Pair => WireObject::Pair(parse_pair(v)?),
                    Space::AltPair => WireObject::AltPair(parse_alt_pair(v)?),
                    Space::Senary => WireObject::Senary(parse_senary(v)?),
                })
            })
            .collect()
    }

    fn typed<T>(&self, want: usize, pick: impl Fn(WireObject) -> Option<T>) -> Result<Vec<T>> {
        let objs = self.decode()?;
        if objs.len() < want {
            return Err(Error::Parse(format!("{} payload needs {want} objects, found {}", self.space, objs.len())));
        }
        objs.into_iter()
            .map(|o| pick(o).ok_or_else(|| Error::Parse(format!("unexpected object kind in {} payload", self.space))))
            .collect()
    }

    pub fn bqfs(&self, want: usize) -> Result<Vec<Bqf>> {
        self.typed(want, |o| if let WireObject::Bqf(q) = o { Some(q) } else { None })
    }

    pub fn cubes(&self, want: usize) -> Result<Vec<Cube>> {
        self.typed(want, |o| if let WireObject::Cube(c) = o { Some(c) } else { None })
    }

    pub fn cubics(&self, want: usize) -> Result<Vec<BinaryCubic>> {
        self.typed(want, |o| if let WireObject::Cubic(f) = o { Some(f) } else { None })
    }

    pub fn gauss(&self) -> Result<([Bqf; 3], GaussBilinearData)> {
        let objs = self.decode()?;
        match objs.as_slice() {
            [WireObject::Bqf(q1), WireObject::Bqf(q2), WireObject::Bqf(q3), WireObject::Matrix(a), WireObject::Matrix(b)] => {
                Ok(([q1.clone(), q2.clone(), q3.clone()], GaussBilinearData { a: a.clone(), b: b.clone() }))
            }
            _ => Err(Error::Parse("gauss payload is three forms and two 2×2 matrices".into())),
        }
    }

    /// Pair payloads: F, G, H as pairs, then R and S as cubes.
    pub fn pair_payload(&self) -> Result<([PairBqf; 3], [Cube; 2])> {
        if self.objects.len() != 5 {
            return Err(Error::Parse(format!("pair payload needs 5 objects, found {}", self.objects.len())));
        }
        let pairs: Vec<PairBqf> = self.objects[..3].iter().map(parse_pair).collect::<Result<_>>()?;
        let cubes: Vec<Cube> = self.objects[3..].iter().map(parse_cube).collect::<Result<_>>()?;
        Ok((pairs.try_into().expect("three"), cubes.try_into().expect("two")))
    }

    /// Cubic payloads: f, g, h, then R as a cube.
    pub fn cubic_payload(&self) -> Result<([BinaryCubic; 3], Cube)> {
        if self.objects.len() != 4 {
            return Err(Error::Parse(format!("cubic payload needs 4 objects, found {}", self.objects.len())));
        }
        let fs: Vec<BinaryCubic> = self.objects[..3].iter().map(parse_cubic).collect::<Result<_>>()?;
        Ok((fs.try_into().expect("three"), parse_cube(&self.objects[3])?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integers_as_strings() {
        let env = Envelope::new(Space::Bqf, Some(&BigInt::from(-47)), &[WireObject::Bqf(Bqf::new(2, 1, 6))]);
        let text = env.to_json();
        assert!(text.contains("\"-47\"") && text.contains("\"6\""));
        assert_eq!(Envelope::parse(&text).unwrap(), env);
    }

    #[test]
    fn numbers_also_accepted() {
        let env = Envelope::parse(r#"{"space":"cube","objects":[[0,-1,-2,-1,-1,0,0,"6"]]}"#).unwrap();
        assert_eq!(env.cubes(1).unwrap()[0], Cube::from_i64([0, -1, -2, -1, -1, 0, 0, 6]));
    }

    #[test]
    fn big_integers_survive() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let env = Envelope::new(Space::Bqf, None, &[WireObject::Bqf(Bqf { a: big.clone(), b: 0.into(), c: 1.into() })]);
        assert_eq!(Envelope::parse(&env.to_json()).unwrap().bqfs(1).unwrap()[0].a, big);
    }

    #[test]
    fn odd_pair_rejected() {
        let env = Envelope::parse(r#"{"space":"pair","objects":[[[1,1,1],[0,2,0]]]}"#).unwrap();
        assert!(matches!(env.decode(), Err(Error::Parse(_))));
    }

    #[test]
    fn unknown_space_rejected() {
        assert!(Envelope::parse(r#"{"space":"quintic","objects":[]}"#).is_err());
        assert!("cube".parse::<Space>().is_ok());
    }
}
