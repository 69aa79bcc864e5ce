use higher_composition::cubes::Cube;
use higher_composition::sym::{pair_identity, verify_pair_composition_with, PairBqf, PairConvention};
use num_bigint::BigInt;

fn main() {
    let f = PairBqf::from_i64([0, 80, -63], [1, -30, 23]).unwrap();
    let g = PairBqf::from_i64([-9, -2, 1], [10, 4, -1]).unwrap();
    let h = PairBqf::from_i64([2, 0, -1], [-1, -4, 1]).unwrap();
    let r = Cube::from_i64([20, 70, -6, -101, -7, -25, 2, 36]);
    let s = Cube::from_i64([-4, 9, 4, 1, 4, -7, -3, -1]);

    for (name, x) in [("F", &f), ("G", &g), ("H", &h)] {
        println!("{name} = {x}  cube {}  disc {}", x.to_cube(), x.disc());
        println!("  companion {}", x.companion());
    }

    for conv in [PairConvention::Sigma, PairConvention::Plain] {
        let v = verify_pair_composition_with(&f, &g, &h, &r, &s, conv);
        println!("{conv:?}: {}", if v.holds() { "holds" } else { "fails" });
    }

    println!("identity pair at D = -4: {}", pair_identity(&BigInt::from(-4)).unwrap());
}
