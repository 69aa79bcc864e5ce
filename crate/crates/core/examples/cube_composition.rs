// The worked example for 2x2x2 cubes at D = -47.

use higher_composition::cubes::{verify_cube_composition, Cube};

fn main() {
    let a = Cube::from_i64([0, -1, -2, -1, -1, 0, 0, 6]);
    let b = Cube::from_i64([0, 1, 2, 0, 1, 0, -1, -6]);
    let c = Cube::from_i64([0, 1, 4, -1, 1, 0, 0, -3]);
    let r = Cube::from_i64([0, -1, -2, 0, -2, 0, 1, 3]);
    let s = Cube::from_i64([0, 1, 1, -1, 1, 0, 0, -12]);
    let t = Cube::from_i64([0, 1, 2, 0, 2, 0, 1, -3]);

    for (name, x) in [("A", &a), ("B", &b), ("C", &c)] {
        let [q1, q2, q3] = x.assoc_forms();
        println!("{name} = {x}  disc {}  forms {q1} {q2} {q3}", x.disc());
        println!("  companion {}", x.companion());
    }

    let v = verify_cube_composition(&a, &b, &c, &r, &s, &t);
    print!("{v}");

    let mut broken = t.clone();
    broken.0[7] += 1;
    let v = verify_cube_composition(&a, &b, &c, &r, &s, &broken);
    println!("with t222 bumped: {}", if v.holds() { "still holds?" } else { "fails as expected" });
}
