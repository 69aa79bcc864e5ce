use std::time::Instant;

use higher_composition::cubes::{cube_class_compose, cube_class_sum_is_identity, dual_cubes_solve, Cube};

fn main() {
    let a = Cube::from_i64([0, -1, -2, -1, -1, 0, 0, 6]);
    let b = Cube::from_i64([0, 1, 2, 0, 1, 0, -1, -6]);
    let c = Cube::from_i64([0, 1, 4, -1, 1, 0, 0, -3]);

    println!("[A] + [B] + [C] = [id]? {}", cube_class_sum_is_identity(&a, &b, &c).unwrap());

    let start = Instant::now();
    let w = dual_cubes_solve(&a, &b, &c).unwrap();
    println!("R = {}\nS = {}\nT = {}", w.r, w.s, w.t);
    println!("solved in {:?}", start.elapsed());
    print!("{}", w.duality(&a, &b, &c));

    // any two classes have a third completing them to the identity
    let ab = cube_class_compose(&a, &b).unwrap();
    println!("\n[A] + [B] is represented by {ab}");
    println!("and [A] + [B] + [C~] = [id]? {}", cube_class_sum_is_identity(&a, &b, &ab.tilde()).unwrap());
}
