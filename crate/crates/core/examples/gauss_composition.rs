// Gauss composition of binary quadratic forms at D = -47: the classes of
// [2,1,6] and [3,1,4] compose via Dirichlet's method, and a cube hands us
// an explicit bilinear witness for Q1(x) Q2(y) = Q3(z1, z2).

use higher_composition::bqf::{compose_dirichlet, reduce, verify_gauss_identity, Bqf};
use higher_composition::cubes::{lemmermeyer_identity, Cube};

fn main() {
    let p = Bqf::new(2, 1, 6);
    let q = Bqf::new(3, 1, 4);
    let r = reduce(&compose_dirichlet(&p, &q).unwrap()).unwrap().form;
    println!("{p} * {q} = {r}");

    let inverse = reduce(&compose_dirichlet(&p, &p.flip()).unwrap()).unwrap().form;
    println!("{p} * {} = {inverse}", p.flip());

    let a = Cube::from_i64([0, -1, -2, -1, -1, 0, 0, 6]);
    let inst = lemmermeyer_identity(&a);
    let [q1, q2, q3] = &inst.forms;
    println!("\nfrom the cube {a}:");
    println!("  Q1 = {q1}, Q2 = {q2}, Q3 = {q3}");
    println!("  z1 coefficients {:?}", inst.data.a);
    println!("  z2 coefficients {:?}", inst.data.b);
    print!("{}", verify_gauss_identity(q1, q2, q3, &inst.data));
}
