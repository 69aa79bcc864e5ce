use std::time::Instant;

use higher_composition::alt::{senary_identity_pair, verify_senary_identity};
use num_bigint::BigInt;

fn main() {
    let (e, e_prime) = senary_identity_pair(&BigInt::from(-47)).unwrap();
    println!("E_id,-47  = {e}");
    println!("E'_id,-47 = {e_prime}");

    for d in [-47i64, -31, -4, 5, 8, 13] {
        let start = Instant::now();
        let v = verify_senary_identity(&BigInt::from(d)).unwrap();
        println!("D = {d:>3}: {} in {:?}", if v.holds() { "holds" } else { "FAILS" }, start.elapsed());
    }
}
