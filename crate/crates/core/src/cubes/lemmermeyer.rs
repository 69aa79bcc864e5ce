use super::cube::Cube;
use crate::bqf::{verify_gauss_identity, Bqf, GaussBilinearData};
use crate::verify::Verification;

/// The Gauss composition Q2(x, −y)·Q3(x, −y) = Q1 carried by a cube,
/// with bilinear forms given by N1 (first output) and M1 (second output).
#[derive(Clone, Debug)]
pub struct LemmermeyerInstance {
    pub forms: [Bqf; 3],
    pub data: GaussBilinearData,
    pub verification: Verification,
}

impl LemmermeyerInstance {
    pub fn verified(&self) -> bool {
        self.verification.holds()
    }
}

pub fn lemmermeyer_identity(a: &Cube) -> LemmermeyerInstance {
    let [q1, q2, q3] = a.assoc_forms();
    let (m1, n1) = a.slices(0);
    let data = GaussBilinearData { a: n1, b: m1 };
    let forms = [q2.flip(), q3.flip(), q1];
    let verification = verify_gauss_identity(&forms[0], &forms[1], &forms[2], &data);
    LemmermeyerInstance { forms, data, verification }
}
