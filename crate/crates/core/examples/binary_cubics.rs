use higher_composition::cubes::Cube;
use higher_composition::sym::{
    cubic_class_sum_is_identity, cubic_identity, cubicovariant, syzygy_check, verify_cubic_composition, BinaryCubic,
};
use num_bigint::BigInt;

fn main() {
    let f = BinaryCubic::from_i64([0, 1, 0, 2]);
    let g = BinaryCubic::from_i64([1, 1, 2, 2]);
    let h = BinaryCubic::from_i64([1, 0, 1, 2]);

    for (name, x) in [("f", &f), ("g", &g), ("h", &h)] {
        println!(
            "{name} = {x}  disc {}  companion {}  Q = {}  2f'+ef = {}",
            x.disc(),
            x.companion(),
            x.quadratic(),
            cubicovariant(x)
        );
        println!("  syzygy holds: {}", syzygy_check(x));
    }

    let r = Cube::from_i64([0, -1, -1, -1, 1, 1, 0, 2]);
    print!("{}", verify_cubic_composition(&f, &g, &h, &r));

    let verdict = cubic_class_sum_is_identity(&f, &g, &h).unwrap();
    println!("[f] + [g] + [h] = [id]: {}", verdict.holds());
    if let Some(y) = &verdict.delta_root {
        println!("  cube root of the delta product: {y}");
    }

    println!("identity at D = -23: {}", cubic_identity(&BigInt::from(-23)).unwrap());
}
