// Forms, ideals and cubes: moving between the three pictures.

use higher_composition::bqf::{bqf_to_ideal, ideal_to_bqf, Bqf};
use higher_composition::cubes::{cube_to_triple, triple_to_cube, Cube};
use higher_composition::quadratic::{ideal_mul, principal_generator};

fn main() {
    let q = Bqf::new(2, 1, 6);
    let i = bqf_to_ideal(&q).unwrap();
    println!("{q} <-> {i} (norm {})", i.norm());
    println!("back again: {}", ideal_to_bqf(&i).unwrap());

    let j = bqf_to_ideal(&q.flip()).unwrap();
    let ij = ideal_mul(&i, &j).unwrap();
    println!("{i} * {j} = {ij}, generated by {:?}", principal_generator(&ij).unwrap().map(|k| k.to_string()));

    let a = Cube::from_i64([0, -1, -2, -1, -1, 0, 0, 6]);
    let t = cube_to_triple(&a).unwrap();
    for (n, ideal) in t.ideals.iter().enumerate() {
        println!("I{} = {ideal}", n + 1);
    }
    println!("round trip exact: {}", triple_to_cube(&t).unwrap() == a);
}
