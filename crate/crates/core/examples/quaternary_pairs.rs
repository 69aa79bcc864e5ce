use higher_composition::alt::{phi, verify_quaternary_composition};
use higher_composition::cubes::Cube;

fn main() {
    let a = Cube::from_i64([0, 2, 2, -1, 1, 0, 0, -3]);
    let b = Cube::from_i64([0, -1, -2, -1, -1, 0, 0, 6]);
    let c = Cube::from_i64([-1, 2, 2, -2, 1, 5, -1, -11]);
    let r = Cube::from_i64([0, 2, 2, -1, 1, 0, 0, -3]);
    let s = Cube::from_i64([1, -2, -1, 0, -1, 1, -6, 12]);
    let t = Cube::from_i64([0, 2, 1, 0, 1, -1, 0, -6]);

    let f = phi(&a);
    println!("F = phi(A) = {f}");
    println!("Pfaffian form {} of discriminant {}", f.pfaffian_form(), f.disc());
    println!("companion of F equals phi(A'): {}", f.companion().unwrap() == phi(&a.companion()));

    let v = verify_quaternary_composition(&a, &b, &c, &r, &s, &t).unwrap();
    print!("{v}");
}
